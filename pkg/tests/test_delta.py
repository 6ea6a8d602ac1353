from itertools import product

import pytest

import philab as pl
from philab.delta import ALL, DeltaFamily, cached_delta_type


def literal_pairs(c, t, zs, s):
    return [(c, t)] + list(zip(zs, s))


class TestDeltaEval:
    def test_arity_zero_is_sign_occurrence(self, s1):
        fam = DeltaFamily(0)
        assert pl.delta_eval(s1, fam, 0, (), 1, ())
        assert pl.delta_eval(s1, fam, 0, (), 0, ())
        constant = pl.BipartiteStructure(((1,), (1,)), frozenset(), frozenset({0}))
        assert not pl.delta_eval(constant, DeltaFamily(0), 0, (), 0, ())

    def test_s1_readoff(self, s1):
        assert pl.delta_eval(s1, DeltaFamily(1), 0, (1,), 1, (1,))  # row 11

    def test_chain_scan(self, s2):
        # an element >= 1 and >= 4 exists (the top one), despite the trap
        assert pl.delta_eval(s2, DeltaFamily(1), 0, (3,), 0, (0,))

    def test_arity_mismatch(self, s1):
        with pytest.raises(pl.ArityMismatchError):
            pl.delta_eval(s1, DeltaFamily(2), 0, (1,), 1, (1,))

    def test_matches_consistency_of_literals(self, corpus):
        # cross-module identity on non-contradictory literal sets
        for _, s in corpus[:3]:
            fam = DeltaFamily(1)
            for c in range(s.n):
                for z in range(s.n):
                    for t, sign in product((0, 1), repeat=2):
                        try:
                            p = pl.PhiType(literal_pairs(c, t, (z,), (sign,)))
                        except pl.LiteralClashError:
                            continue
                        assert pl.delta_eval(s, fam, c, (z,), t, (sign,)) == (
                            s.is_consistent(p)
                        )


class TestDeltaType:
    def test_table_size_formula(self, s1):
        # |D|^n * 2^(n+1) entries
        dt = pl.delta_type(s1, DeltaFamily(1), 0, [1])
        assert len(dt.table) == 1 * 2 * 2
        dt2 = pl.delta_type(s1, DeltaFamily(1), 0, [0, 1])
        assert len(dt2.table) == 2 * 2 * 2

    def test_empty_domain_positive_arity(self, s1):
        dt = pl.delta_type(s1, DeltaFamily(2), 0, [])
        assert dt.table == {}

    def test_arity_zero_two_entries(self, s1):
        dt = pl.delta_type(s1, DeltaFamily(0), 1, [])
        assert len(dt.table) == 2

    def test_resource_guard(self, s1):
        with pytest.raises(pl.ResourceLimitError):
            pl.delta_type(s1, DeltaFamily(1), 0, [0, 1], limit=3)

    def test_cached_identical(self, s1):
        fam = DeltaFamily(1)
        a = cached_delta_type(s1, fam, 0, (0, 1))
        b = cached_delta_type(s1, fam, 0, (1, 0))
        assert a is b  # domain canonicalization shares the entry


class TestDeltaEqual:
    def test_identity(self, s1):
        assert pl.delta_equal(s1, DeltaFamily(1), 0, 0, [0, 1])

    def test_duplicate_columns_always_equal(self):
        rows = ((0, 0), (1, 1), (1, 1), (0, 0))
        s = pl.BipartiteStructure(rows, frozenset(), frozenset(range(2)))
        for arity in (0, 1, 2):
            assert pl.delta_equal(s, DeltaFamily(arity), 0, 1, [0, 1])

    def test_s1_arity_zero_equal(self, s1):
        assert pl.delta_equal(s1, DeltaFamily(0), 0, 1, [])

    def test_disagreement_reports_witness(self, s2):
        cmp = pl.delta_equal(s2, DeltaFamily(1), 0, 3, range(4))
        assert not cmp
        zs, t, s = cmp.witness
        assert pl.delta_eval(s2, DeltaFamily(1), 0, zs, t, s) != pl.delta_eval(
            s2, DeltaFamily(1), 3, zs, t, s
        )

    def test_equivalence_relation(self, corpus):
        for _, s in corpus[:2]:
            fam = DeltaFamily(1)
            dom = s.base_members()
            params = range(s.n)
            eq = {
                (c0, c1): bool(pl.delta_equal(s, fam, c0, c1, dom))
                for c0 in params
                for c1 in params
            }
            for c0 in params:
                assert eq[(c0, c0)]
                for c1 in params:
                    assert eq[(c0, c1)] == eq[(c1, c0)]
                    for c2 in params:
                        if eq[(c0, c1)] and eq[(c1, c2)]:
                            assert eq[(c0, c2)]

    def test_monotone_refinement(self, corpus):
        # equality over a domain restricts to equality over subdomains
        for _, s in corpus[:3]:
            fam = DeltaFamily(1)
            big = tuple(range(min(s.n, 4)))
            small = big[:2]
            for c0 in range(s.n):
                for c1 in range(s.n):
                    if pl.delta_equal(s, fam, c0, c1, big):
                        assert pl.delta_equal(s, fam, c0, c1, small)


class TestFinitelySatisfiable:
    def test_base_member_trivially_satisfiable(self, s2):
        fam = DeltaFamily(1)
        dt = pl.delta_type(s2, fam, 0, s2.base_members())
        for k in (1, 2, ALL):
            assert pl.finitely_satisfiable_in(s2, dt, s2.base_members(), k)

    def test_empty_base_false(self, s1):
        dt = pl.delta_type(s1, DeltaFamily(1), 0, [0, 1])
        assert not pl.finitely_satisfiable_in(s1, dt, [], ALL)
        assert not pl.finitely_satisfiable_in(s1, dt, [], 1)

    def test_k_one_and_all_separate(self):
        # frozen from a randomized search: every single entry of column 4's
        # table is matched by some base column, but no base column matches
        # the whole table
        rows = (
            (1, 0, 0, 0, 0),
            (0, 1, 1, 0, 1),
            (0, 0, 1, 1, 1),
            (1, 1, 1, 0, 0),
        )
        s = pl.BipartiteStructure(rows, frozenset(range(4)), frozenset(range(5)))
        dt = pl.delta_type(s, DeltaFamily(1), 4, range(5))
        base = range(4)
        assert pl.finitely_satisfiable_in(s, dt, base, 1)
        assert not pl.finitely_satisfiable_in(s, dt, base, ALL)

    def test_all_implies_every_finite_k(self, corpus):
        for _, s in corpus[:2]:
            fam = DeltaFamily(1)
            base = s.base_members()
            if not base:
                continue
            for c in range(s.n):
                dt = pl.delta_type(s, fam, c, base)
                if pl.finitely_satisfiable_in(s, dt, base, ALL):
                    for k in (1, 2, 3):
                        assert pl.finitely_satisfiable_in(s, dt, base, k)

    def test_bad_k_rejected(self, s1):
        dt = pl.delta_type(s1, DeltaFamily(0), 0, [])
        with pytest.raises(ValueError):
            pl.finitely_satisfiable_in(s1, dt, [0], 0)
