"""Independent oracles shared across the test modules.

Everything here recomputes expectations from first principles (raw tuple
manipulation, exhaustive products) so the package code under test never
certifies itself.
"""

from __future__ import annotations

import itertools

from emhorn.delta import coface, compose
from emhorn.em import EMSimplex, EMSpace


def brute_monotone_tuples(m: int, n: int) -> list[tuple[int, ...]]:
    """All weakly increasing (m+1)-tuples over 0..n, by filtering products."""
    return [
        vals
        for vals in itertools.product(range(n + 1), repeat=m + 1)
        if all(a <= b for a, b in zip(vals, vals[1:]))
    ]


def brute_surjection_tuples(m: int, n: int) -> list[tuple[int, ...]]:
    return [
        vals for vals in brute_monotone_tuples(m, n) if set(vals) == set(range(n + 1))
    ]


def face_by_composition(K: EMSpace, k: int, i: int, x: EMSimplex) -> EMSimplex:
    """The i-th face computed directly from generator composites.

    For each generator at level k, compose with the i-th coface and add the
    coordinate onto the composite's slot when it is surjective.  This is the
    defining formula, bypassing the space's cached index tables.
    """
    M = K.monoid
    out = {g: M.identity for g in K.gens[k - 1]}
    delta = coface(k, i)
    for h, value in zip(K.gens[k], x.coords):
        composite = compose(delta, h)
        if composite.is_surjective():
            out[composite] = M.op(out[composite], value)
    return EMSimplex(k - 1, tuple(out[g] for g in K.gens[k - 1]))


def em_identity_violations(K: EMSpace, rng, per_level: int = 200, hint: int = 1000):
    """Re-evaluate every simplicial relation on random simplices.

    Returns a list of human-readable violation strings; empty means all of
    the dd, ss and ds relations held on every sampled simplex.
    """
    bad = []
    D = K.dim_bound
    for k in range(D + 1):
        for _ in range(per_level):
            x = K.random_simplex(k, rng, hint)
            if k >= 2:
                for j in range(1, k + 1):
                    for i in range(j):
                        if K.face(k - 1, i, K.face(k, j, x)) != K.face(
                            k - 1, j - 1, K.face(k, i, x)
                        ):
                            bad.append(f"d{i} d{j} at level {k} of {K.name}")
            if k + 2 <= D:
                for j in range(k + 1):
                    for i in range(j + 1):
                        if K.degeneracy(k + 1, i, K.degeneracy(k, j, x)) != K.degeneracy(
                            k + 1, j + 1, K.degeneracy(k, i, x)
                        ):
                            bad.append(f"s{i} s{j} at level {k} of {K.name}")
            if k + 1 <= D:
                for j in range(k + 1):
                    sx = K.degeneracy(k, j, x)
                    for i in range(k + 2):
                        got = K.face(k + 1, i, sx)
                        if i < j:
                            want = K.degeneracy(k - 1, j - 1, K.face(k, i, x))
                        elif i in (j, j + 1):
                            want = x
                        else:
                            want = K.degeneracy(k - 1, j, K.face(k, i - 1, x))
                        if got != want:
                            bad.append(f"d{i} s{j} at level {k} of {K.name}")
    return bad


def em_homomorphism_violations(K: EMSpace, rng, samples: int = 50, hint: int = 1000):
    """Check operators are monoid maps: additive and identity-preserving."""
    bad = []
    D = K.dim_bound
    for k in range(D + 1):
        for _ in range(samples):
            x = K.random_simplex(k, rng, hint)
            y = K.random_simplex(k, rng, hint)
            s = K.add(x, y)
            if k >= 1:
                for i in range(k + 1):
                    if K.face(k, i, s) != K.add(K.face(k, i, x), K.face(k, i, y)):
                        bad.append(f"d{i} not additive at level {k} of {K.name}")
            if k < D:
                for j in range(k + 1):
                    if K.degeneracy(k, j, s) != K.add(
                        K.degeneracy(k, j, x), K.degeneracy(k, j, y)
                    ):
                        bad.append(f"s{j} not additive at level {k} of {K.name}")
        zero = K.zero(k)
        if k >= 1 and any(K.face(k, i, zero) != K.zero(k - 1) for i in range(k + 1)):
            bad.append(f"a face moves the identity at level {k} of {K.name}")
        if k < D and any(
            K.degeneracy(k, j, zero) != K.zero(k + 1) for j in range(k + 1)
        ):
            bad.append(f"a degeneracy moves the identity at level {k} of {K.name}")
    return bad


def random_compatible_horns(K: EMSpace, n: int, k: int, rng, count: int, hint: int = 10):
    """Compatible horn data obtained by forgetting a face of random simplices."""
    from emhorn.horn import horn_from_simplex

    out = []
    for _ in range(count):
        y = K.random_simplex(n, rng, hint)
        out.append(horn_from_simplex(K, n, k, y))
    return out
