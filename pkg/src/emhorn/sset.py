"""Finite simplicial sets, truncated at an explicit dimension bound.

A truncated simplicial set stores its level sets and full face and
degeneracy tables.  Operators that would leave the truncation are simply
absent, and the identity checks quantify only within range.  Everything is
finite, so the simplicial identities can be verified by a table scan.

Simplex identifiers are the monotone maps themselves (for the families
built from the simplex category) plus a reserved basepoint token for the
quotient spheres.  That keeps fixtures self-describing: the level-3 cells
of the 2-sphere really are ``*``, ``0012``, ``0112`` and ``0122``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from .delta import MonotoneMap, coface, codegeneracy, compose, enumerate_monotone

BASEPOINT = "*"

SimplexId = Union[MonotoneMap, str]


def render_id(x: SimplexId) -> str:
    return x if isinstance(x, str) else str(x)


@dataclass(frozen=True)
class TruncatedSimplicialSet:
    name: str
    dim_bound: int
    levels: tuple[tuple[SimplexId, ...], ...]
    faces: Mapping[tuple[int, int, SimplexId], SimplexId] = field(repr=False)
    degeneracies: Mapping[tuple[int, int, SimplexId], SimplexId] = field(repr=False)

    def level(self, k: int) -> tuple[SimplexId, ...]:
        if not 0 <= k <= self.dim_bound:
            raise ValueError(f"level {k} outside truncation 0..{self.dim_bound}")
        return self.levels[k]

    def face(self, k: int, i: int, x: SimplexId) -> SimplexId:
        if not (1 <= k <= self.dim_bound and 0 <= i <= k):
            raise ValueError(f"face ({k}, {i}) out of range")
        return self.faces[(k, i, x)]

    def degeneracy(self, k: int, j: int, x: SimplexId) -> SimplexId:
        if not (0 <= k < self.dim_bound and 0 <= j <= k):
            raise ValueError(f"degeneracy ({k}, {j}) out of range")
        return self.degeneracies[(k, j, x)]

    def dump(self) -> str:
        """One line per level, simplices in canonical order."""
        return "\n".join(
            f"{k}: " + " ".join(render_id(x) for x in self.levels[k])
            for k in range(self.dim_bound + 1)
        )


def _from_map_predicate(
    name: str, n: int, dim_bound: int, member: Callable[[MonotoneMap], bool]
) -> TruncatedSimplicialSet:
    """Build the subobject of the n-simplex cut out by a membership predicate.

    The predicate must be closed under precomposition, which holds for all
    the families below (their defining conditions depend only on the image).
    """
    levels = tuple(
        tuple(f for f in enumerate_monotone(k, n) if member(f))
        for k in range(dim_bound + 1)
    )
    present = [set(level) for level in levels]
    faces = {}
    for k in range(1, dim_bound + 1):
        for x in levels[k]:
            for i in range(k + 1):
                y = compose(coface(k, i), x)
                assert y in present[k - 1], f"{name}: face left the set at {x}"
                faces[(k, i, x)] = y
    degeneracies = {}
    for k in range(dim_bound):
        for x in levels[k]:
            for j in range(k + 1):
                y = compose(codegeneracy(k, j), x)
                assert y in present[k + 1], f"{name}: degeneracy left the set at {x}"
                degeneracies[(k, j, x)] = y
    return TruncatedSimplicialSet(name, dim_bound, levels, faces, degeneracies)


def standard_simplex(n: int, dim_bound: int) -> TruncatedSimplicialSet:
    """The n-simplex: level k holds every monotone map [k] -> [n]."""
    return _from_map_predicate(f"Delta[{n}]", n, dim_bound, lambda f: True)


def boundary(n: int, dim_bound: int) -> TruncatedSimplicialSet:
    """The boundary of the n-simplex: the non-surjective maps."""
    if n < 1:
        raise ValueError("the boundary is defined for n >= 1")
    return _from_map_predicate(
        f"boundary Delta[{n}]", n, dim_bound, lambda f: not f.is_surjective()
    )


def horn(n: int, k: int, dim_bound: int) -> TruncatedSimplicialSet:
    """The horn of the n-simplex missing face k.

    A simplex belongs to the horn exactly when it factors through some face
    other than the k-th, i.e. when its image together with k still misses a
    vertex of [n].
    """
    if n < 1:
        raise ValueError("horns are defined for n >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range for [{n}]")
    full = set(range(n + 1))
    return _from_map_predicate(
        f"Lambda^{k}[{n}]",
        n,
        dim_bound,
        lambda f: set(f.values) | {k} != full,
    )


def sphere(n: int, dim_bound: int) -> TruncatedSimplicialSet:
    """The n-sphere as the quotient of the n-simplex by its boundary.

    Level k is the basepoint plus the monotone surjections [k] -> [n]; an
    operator sends a cell to its composite when that stays surjective and
    to the basepoint otherwise.
    """
    if n < 1:
        raise ValueError("the quotient sphere is defined for n >= 1")
    levels = tuple(
        (BASEPOINT,) + tuple(f for f in enumerate_monotone(k, n) if f.is_surjective())
        for k in range(dim_bound + 1)
    )

    def act(theta: MonotoneMap, x: SimplexId) -> SimplexId:
        if x == BASEPOINT:
            return BASEPOINT
        y = compose(theta, x)
        return y if y.is_surjective() else BASEPOINT

    faces = {
        (k, i, x): act(coface(k, i), x)
        for k in range(1, dim_bound + 1)
        for x in levels[k]
        for i in range(k + 1)
    }
    degeneracies = {
        (k, j, x): act(codegeneracy(k, j), x)
        for k in range(dim_bound)
        for x in levels[k]
        for j in range(k + 1)
    }
    return TruncatedSimplicialSet(f"S^{n}", dim_bound, levels, faces, degeneracies)


def simplicial_identity_violations(X: TruncatedSimplicialSet) -> list[str]:
    """Scan the tables for violations of the simplicial identities.

    Returns a description of each failure; an empty list means the
    structure is simplicial as far as the truncation can see.
    """
    bad = []
    D = X.dim_bound
    for k in range(2, D + 1):
        for x in X.level(k):
            for j in range(1, k + 1):
                for i in range(j):
                    lhs = X.face(k - 1, i, X.face(k, j, x))
                    rhs = X.face(k - 1, j - 1, X.face(k, i, x))
                    if lhs != rhs:
                        bad.append(f"d{i} d{j} {render_id(x)}: {render_id(lhs)} != {render_id(rhs)}")
    for k in range(D - 1):
        for x in X.level(k):
            for j in range(k + 1):
                for i in range(j + 1):
                    lhs = X.degeneracy(k + 1, i, X.degeneracy(k, j, x))
                    rhs = X.degeneracy(k + 1, j + 1, X.degeneracy(k, i, x))
                    if lhs != rhs:
                        bad.append(f"s{i} s{j} {render_id(x)}")
    for k in range(D):
        for x in X.level(k):
            for j in range(k + 1):
                sx = X.degeneracy(k, j, x)
                for i in range(k + 2):
                    got = X.face(k + 1, i, sx)
                    if i < j:
                        want = X.degeneracy(k - 1, j - 1, X.face(k, i, x))
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = X.degeneracy(k - 1, j, X.face(k, i - 1, x))
                    if got != want:
                        bad.append(f"d{i} s{j} {render_id(x)}: {render_id(got)} != {render_id(want)}")
    return bad


def simplicial_map_check(
    f: Mapping[int, Mapping[SimplexId, SimplexId]],
    X: TruncatedSimplicialSet,
    Y: TruncatedSimplicialSet,
) -> bool:
    """Does the levelwise assignment f commute with all operators?

    ``f[k]`` must send every level-k simplex of X to a level-k simplex of Y
    for k up to the common truncation; anything else is a rejected input.
    """
    D = min(X.dim_bound, Y.dim_bound)
    for k in range(D + 1):
        if k not in f:
            raise ValueError(f"assignment missing level {k}")
        ylevel = set(Y.level(k))
        for x in X.level(k):
            if x not in f[k]:
                raise ValueError(f"assignment missing simplex {render_id(x)} at level {k}")
            if f[k][x] not in ylevel:
                raise ValueError(
                    f"assignment sends {render_id(x)} outside level {k} of {Y.name}"
                )
    for k in range(1, D + 1):
        for x in X.level(k):
            for i in range(k + 1):
                if f[k - 1][X.face(k, i, x)] != Y.face(k, i, f[k][x]):
                    return False
    for k in range(D):
        for x in X.level(k):
            for j in range(k + 1):
                if f[k + 1][X.degeneracy(k, j, x)] != Y.degeneracy(k, j, f[k][x]):
                    return False
    return True
