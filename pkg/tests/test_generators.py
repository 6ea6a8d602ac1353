from itertools import product

import pytest

import philab as pl
from philab.generators import INTERVALS, UNIONS


class TestEqRel:
    def test_matrix_matches_direct_evaluator(self):
        spec = pl.EqRelSpec([2, 2], [1, 1])
        s = pl.gen_eqrel(spec)
        total = s.meta["model_size"]
        class_of = s.meta["class_of"]
        for x in range(total):
            for y, z, w in product(range(total), repeat=3):
                idx = (y * total + z) * total + w
                expected = (x == y) if z == w else (class_of[x] == class_of[y])
                assert s.truth[x][idx] == int(expected)

    def test_column_kinds(self):
        s = pl.gen_eqrel(pl.EqRelSpec([2], [1]))
        total = 2
        for y, z, w in product(range(total), repeat=3):
            idx = (y * total + z) * total + w
            col = tuple(s.truth[x][idx] for x in range(total))
            if z == w:
                assert col == tuple(int(x == y) for x in range(total))
            else:
                assert col == (1, 1)  # single class: equivalence is constant

    def test_base_and_theta_layout(self):
        s = pl.gen_eqrel(pl.EqRelSpec([2, 1], [1, 1]))
        meta = s.meta
        for b in meta["picked"]:
            assert meta["eq_param"][b] in s.base_set
            assert meta["e_param"][b] in s.base_set
        assert s.base_set < s.theta_set
        fresh = [x for x in range(meta["model_size"]) if x not in meta["picked"]]
        for f in fresh:
            assert meta["eq_param"][f] in s.theta_set

    def test_target_trace(self):
        # non-picked class member: equality literal 0, equivalence literal 1
        s = pl.gen_eqrel(pl.EqRelSpec([2], [1]))
        p = pl.eqrel_target_type(s, 0)
        eq_param = s.meta["eq_param"][0]
        e_param = s.meta["e_param"][0]
        assert p.literals[eq_param] == 0
        assert p.literals[e_param] == 1

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            pl.EqRelSpec([2], [3])
        with pytest.raises(ValueError):
            pl.EqRelSpec([1, 1], [1, 1])  # no class keeps a free member
        with pytest.raises(ValueError):
            pl.EqRelSpec([], [])

    def test_size_guard(self):
        with pytest.raises(pl.ResourceLimitError):
            pl.gen_eqrel(pl.EqRelSpec([11], [1]))

    def test_triple_provenance(self):
        s = pl.gen_eqrel(pl.EqRelSpec([2], [1]))
        assert pl.eqrel_triple_of(s, s.meta["eq_param"][1]) == (1, 0, 0)
        assert pl.eqrel_triple_of(s, s.meta["e_param"][1]) == (1, 0, 1)


class TestLinearOrder:
    def test_matrix(self):
        s = pl.gen_linear_order(5, [1, 2, 3, 4])
        for a in range(5):
            for b in range(5):
                assert s.truth[a][b] == int(a < b)

    def test_dimension_one(self):
        assert pl.independence_dimension(pl.gen_linear_order(5, [1])).id_value == 1

    def test_pairs_never_shattered(self):
        s = pl.gen_linear_order(6, [])
        for small in range(6):
            for large in range(small + 1, 6):
                # needing x < small while x >= large is impossible
                assert not s.is_consistent(pl.PhiType({small: 1, large: 0}))

    def test_nofill_theta(self):
        s = pl.gen_linear_order(6, [2, 4], fill_gaps=False)
        assert s.theta_set == {2, 4}
        filled = pl.gen_linear_order(6, [2, 4], fill_gaps=True)
        assert filled.theta_set == set(range(6))


class TestShattered:
    def test_k2_is_s1(self, s1):
        s = pl.gen_shattered(2)
        assert s.truth == s1.truth
        assert s.base_set == s1.base_set

    def test_dimension_equals_k(self):
        for k in range(4):
            assert pl.independence_dimension(pl.gen_shattered(k)).id_value == k

    def test_type_space_full(self):
        for k in (2, 3):
            s = pl.gen_shattered(k)
            assert len(s.type_space(range(k))) == 2**k

    def test_guard(self):
        with pytest.raises(pl.ResourceLimitError):
            pl.gen_shattered(6)


class TestRandomBounded:
    def test_deterministic(self):
        a = pl.gen_random_bounded(7, 20, 6, INTERVALS)
        b = pl.gen_random_bounded(7, 20, 6, INTERVALS)
        assert a.truth == b.truth and a.base_set == b.base_set

    def test_families_decorrelated(self):
        a = pl.gen_random_bounded(7, 20, 6, INTERVALS)
        b = pl.gen_random_bounded(7, 20, 6, UNIONS)
        assert a.truth != b.truth

    def test_intervals_dimension_bounded(self):
        for seed in range(25):
            s = pl.gen_random_bounded(seed, 20, 6, INTERVALS)
            assert pl.independence_dimension(s).id_value <= 2

    def test_unions_dimension_bounded(self):
        for seed in range(25):
            s = pl.gen_random_bounded(seed, 20, 6, UNIONS)
            assert pl.independence_dimension(s).id_value <= 4

    def test_columns_are_intervals(self):
        s = pl.gen_random_bounded(3, 15, 5, INTERVALS)
        for b in range(s.n):
            hits = [x for x in range(s.m) if s.truth[x][b]]
            assert hits == list(range(min(hits), max(hits) + 1))

    def test_bad_family(self):
        with pytest.raises(ValueError):
            pl.gen_random_bounded(0, 5, 5, "squares")
