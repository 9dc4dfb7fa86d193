"""Order-preserving maps between the finite ordinals [n] = {0, 1, ..., n}.

These are the morphisms of the simplex category; every face and degeneracy
operator in the rest of the package is precomposition with one of the maps
built here.

Conventions:

- A map f: [m] -> [n] is stored as the tuple of its values (f(0), ..., f(m))
  together with an explicit codomain.  Maps into codomains up to [9] print
  as digit strings, so the identity of [2] prints as ``012`` and the unique
  surjection [3] -> [1] repeating 0 prints as ``0011``.
- ``compose(f, g)`` applies f first; it is "g after f".
- ``coface(n, i)`` is the injection [n-1] -> [n] whose image misses i, and
  ``codegeneracy(n, j)`` is the surjection [n+1] -> [n] that hits j twice.
- Enumerations are lexicographic on value tuples and all downstream
  coordinate vectors index generators in this order.

>>> str(compose(coface(3, 0), MonotoneMap((0, 1, 2, 2), 2)))
'122'
>>> [str(f) for f in enumerate_surjections(3, 2)]
['0012', '0112', '0122']
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map [m] -> [n], determined by its value tuple."""

    values: tuple[int, ...]
    cod: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a monotone map has at least one value; [m] is never empty")
        if self.cod < 0:
            raise ValueError(f"codomain [{self.cod}] is not an ordinal")
        if any(v < 0 or v > self.cod for v in self.values):
            raise ValueError(f"values {self.values} leave the codomain [{self.cod}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"values {self.values} are not weakly increasing")

    @property
    def dom(self) -> int:
        return len(self.values) - 1

    @classmethod
    def from_string(cls, text: str, cod: int) -> MonotoneMap:
        """Parse the display form back into a map.

        >>> MonotoneMap.from_string("0012", 2).values
        (0, 0, 1, 2)
        """
        if "," in text:
            vals = tuple(int(part) for part in text.split(","))
        else:
            vals = tuple(int(ch) for ch in text)
        return cls(vals, cod)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        if self.cod <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"MonotoneMap({self.values!r}, cod={self.cod})"

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.cod + 1

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_identity(self) -> bool:
        return self.dom == self.cod and all(v == i for i, v in enumerate(self.values))


def identity(n: int) -> MonotoneMap:
    """The identity of [n]."""
    return MonotoneMap(tuple(range(n + 1)), n)


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Apply f: [m] -> [n] first, then g: [n] -> [p].

    >>> str(compose(coface(2, 1), identity(2)))
    '02'
    """
    if f.cod != g.dom:
        raise ValueError(f"cannot compose: codomain [{f.cod}] != domain [{g.dom}]")
    return MonotoneMap(tuple(g.values[v] for v in f.values), g.cod)


def coface(n: int, i: int) -> MonotoneMap:
    """The strictly increasing map [n-1] -> [n] whose image misses i."""
    if n < 1:
        raise ValueError("cofaces exist only into [n] with n >= 1")
    if not 0 <= i <= n:
        raise ValueError(f"coface index {i} out of range for [{n}]")
    return MonotoneMap(tuple(v for v in range(n + 1) if v != i), n)


def codegeneracy(n: int, j: int) -> MonotoneMap:
    """The surjection [n+1] -> [n] taking the value j twice."""
    if n < 0:
        raise ValueError(f"[{n}] is not an ordinal")
    if not 0 <= j <= n:
        raise ValueError(f"codegeneracy index {j} out of range for [{n}]")
    return MonotoneMap(tuple(range(j + 1)) + tuple(range(j, n + 1)), n)


def epi_mono_factorize(f: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Split f as a surjection onto [|image| - 1] followed by an injection.

    The factorization is unique: the injection enumerates the image in
    increasing order and the surjection renames each value to its rank.

    >>> epi, mono = epi_mono_factorize(MonotoneMap((0, 2, 2), 2))
    >>> str(epi), str(mono)
    ('011', '02')
    """
    image = sorted(set(f.values))
    rank = {v: r for r, v in enumerate(image)}
    epi = MonotoneMap(tuple(rank[v] for v in f.values), len(image) - 1)
    mono = MonotoneMap(tuple(image), f.cod)
    return epi, mono


def enumerate_monotone(m: int, n: int) -> list[MonotoneMap]:
    """All monotone maps [m] -> [n] in lexicographic order on values."""
    if m < 0 or n < 0:
        raise ValueError("objects of the simplex category are [m] with m >= 0")
    return [
        MonotoneMap(vals, n)
        for vals in itertools.combinations_with_replacement(range(n + 1), m + 1)
    ]


def enumerate_surjections(m: int, n: int) -> list[MonotoneMap]:
    """All monotone surjections [m] -> [n], lexicographic; there are C(m, n).

    >>> [str(f) for f in enumerate_surjections(2, 2)]
    ['012']
    """
    return [f for f in enumerate_monotone(m, n) if f.is_surjective()]
