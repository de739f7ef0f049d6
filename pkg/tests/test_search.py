import pytest

from minps import (
    DomainError,
    GridDims,
    LatticeDims,
    SearchBudget,
    is_corner_avoiding_minps,
    is_minps,
    lattice_percolates,
    max_corner_avoiding,
    max_minps,
    min_percolating,
    monotonicity_table,
    percolates,
    simple_minps,
)

from oracles import (
    brute_force_max_corner_avoiding,
    brute_force_max_minps,
    brute_force_min_percolating,
)

SMALL_GRIDS = [(1, 1), (2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (4, 3), (2, 5)]


class TestMaxMinps:
    @pytest.mark.parametrize("m,n", SMALL_GRIDS)
    def test_matches_naive_brute_force(self, m, n):
        res = max_minps(GridDims(m, n))
        assert res.exhaustive
        assert res.value == brute_force_max_minps(m, n)

    @pytest.mark.parametrize("m,n", SMALL_GRIDS + [(4, 4), (5, 3)])
    def test_pruning_and_symmetry_change_nothing(self, m, n):
        fast = max_minps(GridDims(m, n))
        plain = max_minps(GridDims(m, n), symmetry=False, pruning=False)
        assert fast.value == plain.value
        sym_only = max_minps(GridDims(m, n), pruning=False)
        assert sym_only.value == fast.value
        assert sym_only.witness == fast.witness

    def test_witness_is_certified(self):
        for m, n in [(3, 3), (4, 4), (5, 2)]:
            res = max_minps(GridDims(m, n))
            assert is_minps(res.witness).holds
            assert len(res.witness) == res.value

    def test_beats_simple_construction(self):
        for m, n in [(3, 3), (4, 3), (4, 4)]:
            res = max_minps(GridDims(m, n))
            assert res.value >= len(simple_minps(m, n))

    def test_four_by_four_value(self):
        # the (m+2)(n+2)/6 bound allows 6 here, but the exhaustive answer is 5
        res = max_minps(GridDims(4, 4))
        assert res.value == 5
        assert res.exhaustive

    def test_budget_truncation(self):
        res = max_minps(GridDims(4, 4), SearchBudget(max_nodes=500))
        assert not res.exhaustive
        assert res.nodes <= 500 + 1
        assert res.value <= 5

    def test_nodes_and_elapsed_populated(self):
        res = max_minps(GridDims(3, 3))
        assert res.nodes > 0
        assert res.elapsed >= 0.0

    def test_workers_do_not_change_outcome(self):
        serial = max_minps(GridDims(3, 3), SearchBudget(workers=1))
        parallel = max_minps(GridDims(3, 3), SearchBudget(workers=2))
        assert serial.value == parallel.value
        assert serial.witness == parallel.witness
        assert serial.nodes == parallel.nodes


class TestMaxCornerAvoiding:
    def test_two_by_two_is_zero(self):
        res = max_corner_avoiding(GridDims(2, 2))
        assert res.value == 0
        assert len(res.witness) == 0
        assert res.exhaustive

    @pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)])
    def test_matches_naive_brute_force(self, m, n):
        res = max_corner_avoiding(GridDims(m, n))
        assert res.exhaustive
        assert res.value == brute_force_max_corner_avoiding(m, n)

    def test_never_exceeds_max_minps(self):
        for m, n in [(2, 2), (3, 3), (4, 3), (4, 4)]:
            assert max_corner_avoiding(GridDims(m, n)).value <= max_minps(GridDims(m, n)).value

    def test_budgeted_lower_bound_semantics(self):
        # far beyond exhaustive range; a small budget must return quickly
        # with exhaustive=False and a non-asserting lower bound
        res = max_corner_avoiding(GridDims(8, 5), SearchBudget(max_nodes=20_000))
        assert not res.exhaustive
        assert res.value >= 0

    def test_four_by_four_witness_certified(self):
        # the smallest square carrying a corner-avoiding MinPS: a pinwheel
        res = max_corner_avoiding(GridDims(4, 4))
        assert res.exhaustive and res.value == 4
        assert is_corner_avoiding_minps(res.witness).holds

    def test_corner_subgroup_reduction_changes_nothing(self):
        for m, n in [(3, 2), (4, 3), (4, 4)]:
            fast = max_corner_avoiding(GridDims(m, n))
            plain = max_corner_avoiding(GridDims(m, n), symmetry=False, pruning=False)
            assert fast.value == plain.value

    def test_needs_two_by_two(self):
        with pytest.raises(DomainError):
            max_corner_avoiding(GridDims(1, 5))


class TestMinPercolating:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_square_grids(self, n):
        res = min_percolating(GridDims(n, n))
        assert res.exhaustive
        assert res.value == n
        assert percolates(res.witness)

    @pytest.mark.parametrize("m,n", [(3, 2), (4, 2), (5, 3)])
    def test_matches_naive_brute_force(self, m, n):
        assert min_percolating(GridDims(m, n)).value == brute_force_min_percolating(m, n)

    def test_cube_two(self):
        res = min_percolating(LatticeDims(2, 3))
        assert res.value == 3
        assert res.exhaustive
        assert lattice_percolates(res.witness, r=2)

    def test_r_one_single_point(self):
        res = min_percolating(LatticeDims(3, 2), r=1)
        assert res.value == 1

    def test_lattice_budget_truncation(self):
        res = min_percolating(LatticeDims(2, 3), SearchBudget(max_nodes=3))
        assert not res.exhaustive
        assert res.value == 0

    def test_2d_rejects_other_thresholds(self):
        with pytest.raises(DomainError):
            min_percolating(GridDims(3, 3), r=3)


class TestMaskEngineAgreement:
    def test_mask_closure_matches_bfs_engine(self):
        # the search module's shift-and-or sweep against the BFS closure,
        # over random masks on assorted shapes including degenerate rows
        import random

        from minps import closure
        from minps.grid import PointSet
        from minps.search import _closure_mask, _percolates_mask, _tables

        rng = random.Random(31)
        for m, n in [(1, 1), (1, 8), (8, 1), (2, 7), (5, 5), (6, 4), (3, 9)]:
            t = _tables(m, n)
            for _ in range(300):
                mask = rng.getrandbits(m * n)
                pts = frozenset(
                    (i // n + 1, i % n + 1) for i in range(m * n) if mask >> i & 1
                )
                infected = closure(PointSet(GridDims(m, n), pts)).infected
                want = 0
                for p in infected.points:
                    want |= 1 << ((p.x - 1) * n + (p.y - 1))
                assert _closure_mask(t, mask) == want
                assert _percolates_mask(t, mask) == (want == t.full)


class TestMonotonicityTable:
    def test_thin_rows_match_formulas(self):
        table = monotonicity_table(7, 3)
        for m in range(1, 8):
            assert table[(m, 1)] == (2 * (m + 1)) // 3
            assert table[(m, 2)] == (2 * (m + 2)) // 3
            assert table[(m, 3)] == (2 * (m + 3)) // 3
        assert table[(3, 3)] == 4 and table[(4, 3)] == 4

    def test_one_row_grids_exempt_from_bound(self):
        # E(1,n) exceeds (m+2)(n+2)/6, which only covers min(m,n) >= 2
        table = monotonicity_table(1, 7)
        assert 6 * table[(1, 7)] > (1 + 2) * (7 + 2)

    def test_search_values_inside_construction_bounds(self):
        from minps import size_bounds

        for m, n in [(3, 3), (4, 3), (4, 4), (5, 4)]:
            lower, upper = size_bounds(m, n)
            value = max_minps(GridDims(m, n)).value
            assert lower <= value <= upper
