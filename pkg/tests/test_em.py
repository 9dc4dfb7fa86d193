import itertools
import random
from math import comb

import pytest

from emhorn.em import em_space, nerve_view
from emhorn.monoid import boolean, cyclic, int_group, nat, trivial
from support import (
    em_homomorphism_violations,
    em_identity_violations,
    face_by_composition,
)


@pytest.fixture
def K_nat2():
    return em_space(nat(), 2, 4)


class TestConstruction:
    def test_generator_lists_degree_two(self, K_nat2):
        assert K_nat2.gen_names(2) == ["012"]
        assert K_nat2.gen_names(3) == ["0012", "0112", "0122"]

    def test_levels_below_degree_are_trivial(self, K_nat2):
        assert K_nat2.rank(0) == 0
        assert K_nat2.rank(1) == 0

    def test_generator_counts(self):
        for n in range(4):
            K = em_space(nat(), n, 8)
            for k in range(9):
                assert K.rank(k) == comb(k, n)

    def test_degree_zero_single_generator_everywhere(self):
        K = em_space(nat(), 0, 4)
        assert all(K.rank(k) == 1 for k in range(5))

    def test_trivial_monoid_is_a_point(self):
        K = em_space(trivial(), 2, 4)
        for k in range(5):
            assert K.enumerate_level(k) == [K.zero(k)]

    def test_simplex_validates_width(self, K_nat2):
        with pytest.raises(ValueError):
            K_nat2.simplex(3, (1, 2))
        with pytest.raises(ValueError):
            K_nat2.simplex(9, ())


class TestFaces:
    def test_level_three_face_formulas(self, K_nat2):
        rng = random.Random(0)
        for _ in range(100):
            a, b, c = (rng.randrange(10**6) for _ in range(3))
            x = K_nat2.simplex(3, (a, b, c))
            assert K_nat2.face(3, 0, x).coords == (a,)
            assert K_nat2.face(3, 1, x).coords == (a + b,)
            assert K_nat2.face(3, 2, x).coords == (b + c,)
            assert K_nat2.face(3, 3, x).coords == (c,)

    def test_level_four_unit_vectors_against_composition_oracle(self, K_nat2):
        for pos in range(K_nat2.rank(4)):
            coords = [0] * K_nat2.rank(4)
            coords[pos] = 1
            x = K_nat2.simplex(4, tuple(coords))
            for i in range(5):
                assert K_nat2.face(4, i, x) == face_by_composition(K_nat2, 4, i, x)

    def test_random_faces_against_composition_oracle(self):
        rng = random.Random(9)
        for M in (nat(), cyclic(4), boolean()):
            K = em_space(M, 2, 4)
            for k in (2, 3, 4):
                for _ in range(25):
                    x = K.random_simplex(k, rng, 50)
                    for i in range(k + 1):
                        assert K.face(k, i, x) == face_by_composition(K, k, i, x)

    def test_face_level_mismatch_rejected(self, K_nat2):
        with pytest.raises(ValueError):
            K_nat2.face(3, 0, K_nat2.zero(2))
        with pytest.raises(ValueError):
            K_nat2.face(5, 0, K_nat2.zero(4))


class TestDegeneracies:
    def test_level_two_degeneracies_place_single_coordinate(self, K_nat2):
        x = K_nat2.simplex(2, (7,))
        s0 = K_nat2.degeneracy(2, 0, x)
        assert dict(zip(K_nat2.gen_names(3), s0.coords)) == {
            "0012": 7, "0112": 0, "0122": 0,
        }
        s1 = K_nat2.degeneracy(2, 1, x)
        assert dict(zip(K_nat2.gen_names(3), s1.coords)) == {
            "0012": 0, "0112": 7, "0122": 0,
        }

    def test_identity_simplex_is_preserved(self, K_nat2):
        for k in range(4):
            for j in range(k + 1):
                assert K_nat2.degeneracy(k, j, K_nat2.zero(k)) == K_nat2.zero(k + 1)


class TestMonoidStructure:
    def test_coordinatewise_addition(self, K_nat2):
        x = K_nat2.simplex(3, (1, 0, 2))
        y = K_nat2.simplex(3, (0, 3, 1))
        assert K_nat2.add(x, y).coords == (1, 3, 3)
        assert K_nat2.add(x, K_nat2.zero(3)) == x

    def test_faces_are_additive(self, K_nat2):
        rng = random.Random(1)
        for _ in range(50):
            x = K_nat2.random_simplex(3, rng, 100)
            y = K_nat2.random_simplex(3, rng, 100)
            assert K_nat2.face(3, 1, K_nat2.add(x, y)) == K_nat2.add(
                K_nat2.face(3, 1, x), K_nat2.face(3, 1, y)
            )

    def test_add_level_mismatch_rejected(self, K_nat2):
        with pytest.raises(ValueError):
            K_nat2.add(K_nat2.zero(2), K_nat2.zero(3))


class TestSimplicialIdentities:
    @pytest.mark.parametrize(
        "make", [nat, int_group, lambda: cyclic(4), boolean, trivial]
    )
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_identities_on_random_simplices(self, make, n):
        K = em_space(make(), n, 6)
        rng = random.Random(hash((str(K.monoid.name), n)) % (2**32))
        assert em_identity_violations(K, rng, per_level=40) == []

    @pytest.mark.parametrize("make", [nat, lambda: cyclic(4), boolean])
    def test_operators_are_homomorphisms(self, make):
        K = em_space(make(), 2, 5)
        rng = random.Random(11)
        assert em_homomorphism_violations(K, rng, samples=30) == []


class TestDegreeZero:
    def test_all_operators_are_the_identity(self):
        rng = random.Random(2)
        for M in (nat(), cyclic(4)):
            K = em_space(M, 0, 5)
            for k in range(6):
                for _ in range(20):
                    x = K.random_simplex(k, rng, 100)
                    if k >= 1:
                        for i in range(k + 1):
                            assert K.face(k, i, x).coords == x.coords
                    if k < 5:
                        for j in range(k + 1):
                            assert K.degeneracy(k, j, x).coords == x.coords


class TestNerveView:
    def test_level_two_faces_in_chain_form(self):
        nv = nerve_view(nat(), 4)
        assert nv.space.gen_names(2) == ["001", "011"]
        x = nv.from_chain((5, 7))
        # coordinate at 001 is the second chain entry, at 011 the first
        assert dict(zip(nv.space.gen_names(2), x.coords)) == {"001": 7, "011": 5}
        assert nv.space.face(2, 1, x).coords == (12,)
        assert nv.space.face(2, 0, x) == nv.from_chain((7,))
        assert nv.space.face(2, 2, x) == nv.from_chain((5,))

    def test_level_counts_match_chains(self):
        nv = nerve_view(cyclic(3), 5)
        for k in range(6):
            assert nv.space.rank(k) == k

    def test_chain_roundtrip(self):
        nv = nerve_view(int_group(), 4)
        chain = (3, -1, 4, 1)
        assert nv.to_chain(nv.from_chain(chain)) == chain

    @pytest.mark.parametrize("make", [lambda: cyclic(4), boolean, trivial])
    def test_coincidence_exhaustive_finite(self, make):
        M = make()
        nv = nerve_view(M, 4)
        for k in range(5):
            nv.check_face_coincidence(itertools.product(M.elements, repeat=k))

    def test_coincidence_sampled_nat(self):
        nv = nerve_view(nat(), 4)
        rng = random.Random(4)
        chains = [
            tuple(rng.randrange(50) for _ in range(k)) for k in range(1, 5) for _ in range(50)
        ]
        nv.check_face_coincidence(chains)
