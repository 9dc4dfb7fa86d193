from math import comb

import pytest

from emhorn.delta import MonotoneMap, enumerate_monotone
from emhorn.sset import (
    BASEPOINT,
    boundary,
    horn,
    render_id,
    simplicial_identity_violations,
    simplicial_map_check,
    sphere,
    standard_simplex,
)


def names(level):
    return [render_id(x) for x in level]


class TestStandardSimplex:
    def test_level_one_count(self):
        X = standard_simplex(2, 3)
        assert len(X.level(1)) == 6

    def test_unique_injective_top_cell(self):
        X = standard_simplex(2, 3)
        injectives = [x for x in X.level(2) if x.is_injective()]
        assert names(injectives) == ["012"]

    def test_faces_of_top_cell(self):
        X = standard_simplex(2, 3)
        top = MonotoneMap((0, 1, 2), 2)
        assert [str(X.face(2, i, top)) for i in range(3)] == ["12", "02", "01"]


class TestBoundary:
    def test_level_two_of_boundary_two(self):
        # all monotone maps [2] -> [2] except the unique surjection 012
        X = boundary(2, 2)
        everything = {f.values for f in enumerate_monotone(2, 2)}
        got = {f.values for f in X.level(2)}
        assert got == everything - {(0, 1, 2)}
        assert len(got) == len(everything) - 1

    def test_boundary_one(self):
        X = boundary(1, 1)
        assert names(X.level(0)) == ["0", "1"]
        assert names(X.level(1)) == ["00", "11"]

    def test_closed_under_operators(self):
        X = boundary(2, 4)
        for k in range(1, 5):
            for x in X.level(k):
                for i in range(k + 1):
                    assert not X.face(k, i, x).is_surjective()


class TestHorn:
    def test_inner_horn_of_three_level_two(self):
        X = horn(3, 1, 3)
        got = names(x for x in X.level(2) if x.is_injective())
        assert "023" not in got
        assert {"012", "013", "123"} <= set(got)

    def test_horn_two_one_edges(self):
        X = horn(2, 1, 2)
        got = names(X.level(1))
        assert "01" in got and "12" in got and "02" not in got

    def test_identity_never_in_horn(self):
        for n in range(1, 4):
            for k in range(n + 1):
                X = horn(n, k, n)
                assert all(not x.is_identity() for x in X.level(n))

    def test_horn_is_simplex_minus_excluded(self):
        # exactly the cells whose image together with k misses a vertex
        for n in range(1, 4):
            for k in range(n + 1):
                X = horn(n, k, 4)
                for level_dim in range(5):
                    excluded = {
                        f.values
                        for f in enumerate_monotone(level_dim, n)
                        if set(f.values) | {k} == set(range(n + 1))
                    }
                    got = {f.values for f in X.level(level_dim)}
                    everything = {f.values for f in enumerate_monotone(level_dim, n)}
                    assert got == everything - excluded


class TestSphere:
    def test_low_levels_of_two_sphere(self):
        S = sphere(2, 3)
        assert names(S.level(0)) == ["*"]
        assert names(S.level(1)) == ["*"]
        assert names(S.level(2)) == ["*", "012"]
        assert names(S.level(3)) == ["*", "0012", "0112", "0122"]

    def test_level_counts(self):
        for n in range(1, 4):
            S = sphere(n, 8)
            for k in range(9):
                assert len(S.level(k)) == 1 + comb(k, n)

    def test_basepoint_is_fixed(self):
        S = sphere(2, 4)
        for k in range(1, 5):
            for i in range(k + 1):
                assert S.face(k, i, BASEPOINT) == BASEPOINT
        for k in range(4):
            for j in range(k + 1):
                assert S.degeneracy(k, j, BASEPOINT) == BASEPOINT

    def test_non_surjective_composites_collapse(self):
        S = sphere(2, 3)
        x = MonotoneMap((0, 0, 1, 2), 2)
        assert S.face(3, 2, x) == BASEPOINT

    def test_dump_is_canonical(self):
        S = sphere(2, 3)
        assert S.dump() == "0: *\n1: *\n2: * 012\n3: * 0012 0112 0122"


class TestSimplicialIdentities:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_all_families_satisfy_identities(self, n):
        D = 6
        instances = [standard_simplex(n, D), boundary(n, D), sphere(n, D)]
        instances += [horn(n, k, D) for k in range(n + 1)]
        for X in instances:
            assert simplicial_identity_violations(X) == []


class TestSimplicialMapCheck:
    def test_identity_map(self):
        S = sphere(2, 3)
        f = {k: {x: x for x in S.level(k)} for k in range(4)}
        assert simplicial_map_check(f, S, S)

    def test_collapse_is_simplicial(self):
        D = standard_simplex(2, 4)
        S = sphere(2, 4)
        f = {
            k: {x: (x if x.is_surjective() else BASEPOINT) for x in D.level(k)}
            for k in range(5)
        }
        assert simplicial_map_check(f, D, S)

    def test_transposition_violates_a_face(self):
        S = sphere(2, 3)
        f = {k: {x: x for x in S.level(k)} for k in range(4)}
        a, b = MonotoneMap((0, 0, 1, 2), 2), MonotoneMap((0, 1, 1, 2), 2)
        f[3][a], f[3][b] = b, a
        assert not simplicial_map_check(f, S, S)

    def test_rejects_missing_levels(self):
        S = sphere(2, 2)
        with pytest.raises(ValueError):
            simplicial_map_check({0: {BASEPOINT: BASEPOINT}}, S, S)


class TestQuotientCompatibility:
    def test_collapsing_boundary_gives_the_sphere(self):
        n, D = 2, 5
        Dx = standard_simplex(n, D)
        S = sphere(n, D)
        collapse = {
            k: {x: (x if x.is_surjective() else BASEPOINT) for x in Dx.level(k)}
            for k in range(D + 1)
        }
        assert simplicial_map_check(collapse, Dx, S)
        for k in range(D + 1):
            surjective = [x for x in Dx.level(k) if x.is_surjective()]
            assert list(S.level(k)) == [BASEPOINT] + surjective
        # operator actions agree through the collapse on every cell
        for k in range(1, D + 1):
            for x in S.level(k):
                if x == BASEPOINT:
                    continue
                for i in range(k + 1):
                    assert S.face(k, i, x) == collapse[k - 1][Dx.face(k, i, x)]


class TestTruncationBoundaries:
    def test_out_of_range_rejected(self):
        X = standard_simplex(2, 2)
        with pytest.raises(ValueError):
            X.level(3)
        with pytest.raises(ValueError):
            X.face(3, 0, MonotoneMap((0, 1, 2), 2))
        with pytest.raises(ValueError):
            X.degeneracy(2, 0, MonotoneMap((0, 1, 2), 2))
