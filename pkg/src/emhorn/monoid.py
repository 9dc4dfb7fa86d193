"""Commutative monoids with the capability flags the solvers dispatch on.

A monoid instance bundles its identity, binary operation and, depending on
the instance, extra structure:

- ``is_finite``: the full element tuple is available, so laws can be checked
  exhaustively and equations solved by scanning.
- ``is_group``: an inverse operation is available.
- ``is_free_natural``: the monoid behaves like the naturals under addition,
  with a total order and partial subtraction.  That is what makes unsolvable
  equations like ``x + 3 = 1`` detectable without search.

Elements are plain Python values: arbitrary-precision integers for the
naturals and the integers, residues for the cyclic monoids, and indices
into the element list for monoids given by a Cayley table.  There is no
overflow anywhere; a wrapped sum would fabricate solutions.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Iterable, Optional, Sequence

Element = Any


class UndecidableError(Exception):
    """Raised when no capability of the monoid supports the question."""


class CommutativeMonoid:
    def __init__(
        self,
        name: str,
        identity: Element,
        op: Callable[[Element, Element], Element],
        *,
        elements: Optional[tuple[Element, ...]] = None,
        inverse: Optional[Callable[[Element], Element]] = None,
        free_natural: bool = False,
        integer_addition: bool = False,
        render: Optional[Callable[[Element], str]] = None,
        parse: Optional[Callable[[str], Element]] = None,
    ):
        self.name = name
        self.identity = identity
        self._op = op
        self.elements = elements
        self._inverse = inverse
        self.is_free_natural = free_natural
        # True only when elements are plain integers under +, which is what
        # lets residual systems be finished by exact integer elimination.
        self.integer_addition = integer_addition
        self._render = render
        self._parse = parse

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    @property
    def is_group(self) -> bool:
        return self._inverse is not None

    def op(self, a: Element, b: Element) -> Element:
        return self._op(a, b)

    def sum(self, items: Iterable[Element]) -> Element:
        total = self.identity
        for x in items:
            total = self._op(total, x)
        return total

    def scale(self, c: int, a: Element) -> Element:
        """c-fold sum of a; negative c needs the group structure."""
        if c < 0:
            return self.inverse(self.scale(-c, a))
        total = self.identity
        for _ in range(c):
            total = self._op(total, a)
        return total

    def inverse(self, a: Element) -> Element:
        if self._inverse is None:
            raise UndecidableError(f"{self.name} is not a group; undecidable here")
        return self._inverse(a)

    # Order and partial subtraction, available on free-natural instances only.

    def leq(self, a: Element, b: Element) -> bool:
        if not self.is_free_natural:
            raise UndecidableError(f"{self.name} carries no order; undecidable here")
        return a <= b

    def try_subtract(self, a: Element, b: Element) -> Optional[Element]:
        """a - b when b <= a, else None."""
        if not self.is_free_natural:
            raise UndecidableError(f"{self.name} has no partial subtraction; undecidable here")
        return a - b if b <= a else None

    def bounded_elements(self, limit: Element, extra: int = 0) -> list[Element]:
        """Elements up to a bound: everything for finite monoids, 0..limit+extra otherwise."""
        if self.is_finite:
            return list(self.elements)
        if self.is_free_natural:
            return list(range(limit + extra + 1))
        raise UndecidableError(f"cannot enumerate elements of {self.name}; undecidable here")

    def sample(self, rng, hint: int = 10) -> Element:
        if self.is_finite:
            return rng.choice(self.elements)
        if self.is_free_natural:
            return rng.randrange(hint + 1)
        if self.is_group:
            return rng.randrange(-hint, hint + 1)
        raise UndecidableError(f"cannot sample from {self.name}; undecidable here")

    def render(self, a: Element) -> str:
        return self._render(a) if self._render else str(a)

    def parse_element(self, text: str) -> Element:
        if self._parse is not None:
            return self._parse(text)
        return int(text)

    def __repr__(self) -> str:
        return f"CommutativeMonoid({self.name})"


def nat() -> CommutativeMonoid:
    """The natural numbers under addition."""
    return CommutativeMonoid(
        "N", 0, lambda a, b: a + b, free_natural=True, integer_addition=True
    )


def int_group() -> CommutativeMonoid:
    """The integers under addition."""
    return CommutativeMonoid(
        "Z", 0, lambda a, b: a + b, inverse=lambda a: -a, integer_addition=True
    )


def cyclic(m: int) -> CommutativeMonoid:
    """The integers mod m under addition."""
    if m < 1:
        raise ValueError(f"cyclic({m}): the modulus must be at least 1")
    return CommutativeMonoid(
        f"Z/{m}",
        0,
        lambda a, b: (a + b) % m,
        elements=tuple(range(m)),
        inverse=lambda a: (-a) % m,
        parse=lambda s: int(s) % m,
    )


def trivial() -> CommutativeMonoid:
    """The one-element monoid."""
    return CommutativeMonoid(
        "1", 0, lambda a, b: 0, elements=(0,), inverse=lambda a: 0, parse=lambda s: 0
    )


def from_table(
    element_names: Sequence[str],
    table: Sequence[Sequence[str]],
    name: str = "table",
) -> CommutativeMonoid:
    """A finite commutative monoid from a Cayley table of element names.

    The table is validated in full: it must be square over the given
    elements, commutative, associative, and contain an identity.  The first
    violating pair or triple is reported.  Elements are represented by their
    index into ``element_names``.
    """
    names = list(element_names)
    if len(set(names)) != len(names):
        raise ValueError("duplicate element names in table monoid")
    index = {nm: i for i, nm in enumerate(names)}
    size = len(names)
    if len(table) != size or any(len(row) != size for row in table):
        raise ValueError(f"Cayley table must be {size}x{size} to match the element list")
    op_table = []
    for row in table:
        out_row = []
        for entry in row:
            if entry not in index:
                raise ValueError(f"table entry {entry!r} is not an element")
            out_row.append(index[entry])
        op_table.append(tuple(out_row))

    for a in range(size):
        for b in range(size):
            if op_table[a][b] != op_table[b][a]:
                raise ValueError(
                    f"not commutative: {names[a]}*{names[b]} != {names[b]}*{names[a]}"
                )
    identity_idx = None
    for e in range(size):
        if all(op_table[e][a] == a for a in range(size)):
            identity_idx = e
            break
    if identity_idx is None:
        raise ValueError("table has no identity element")
    for a in range(size):
        for b in range(size):
            for c in range(size):
                if op_table[op_table[a][b]][c] != op_table[a][op_table[b][c]]:
                    raise ValueError(
                        "not associative at triple "
                        f"({names[a]}, {names[b]}, {names[c]})"
                    )

    inverse = None
    inv_map = {}
    for a in range(size):
        for b in range(size):
            if op_table[a][b] == identity_idx:
                inv_map[a] = b
                break
    if len(inv_map) == size:
        inverse = lambda a: inv_map[a]  # noqa: E731

    def parse(text: str) -> int:
        if text in index:
            return index[text]
        i = int(text)
        if not 0 <= i < size:
            raise ValueError(f"element index {i} out of range for {name}")
        return i

    return CommutativeMonoid(
        name,
        identity_idx,
        lambda a, b: op_table[a][b],
        elements=tuple(range(size)),
        inverse=inverse,
        render=lambda a: names[a],
        parse=parse,
    )


def boolean() -> CommutativeMonoid:
    """The two-element monoid with saturating addition (1 + 1 = 1)."""
    return from_table(["0", "1"], [["0", "1"], ["1", "1"]], name="bool")


def load_table(path: str) -> CommutativeMonoid:
    """Read a table monoid from a JSON file: {"name", "elements", "table"}."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "elements" not in data or "table" not in data:
        raise ValueError(f"{path}: expected JSON object with 'elements' and 'table'")
    return from_table(data["elements"], data["table"], name=data.get("name", "table"))


def solve_value(M: CommutativeMonoid, a: Element, b: Element) -> Optional[Element]:
    """Some x with a + x = b, or None if there is none.

    Groups always have the solution inverse(a) + b.  Free-natural monoids
    subtract when possible and otherwise certify failure by the order.
    Finite monoids scan elements in canonical order, so when solutions are
    not unique the first one wins.
    """
    if M.is_group:
        return M.op(M.inverse(a), b)
    if M.is_free_natural:
        return M.try_subtract(b, a)
    if M.is_finite:
        for x in M.elements:
            if M.op(a, x) == b:
                return x
        return None
    raise UndecidableError(f"cannot solve equations over {M.name}; undecidable here")


def solve_value_all(M: CommutativeMonoid, a: Element, b: Element) -> list[Element]:
    """Every x with a + x = b, for use as an exhaustive oracle."""
    if M.is_finite:
        return [x for x in M.elements if M.op(a, x) == b]
    x = solve_value(M, a, b)
    return [] if x is None else [x]


def check_laws(M: CommutativeMonoid, rng=None, samples: int = 1000, hint: int = 50) -> None:
    """Assert associativity, commutativity and the identity law.

    Exhaustive for finite monoids; sampled on random triples otherwise.
    Raises AssertionError with the violating triple.
    """
    if M.is_finite:
        triples = (
            (a, b, c) for a in M.elements for b in M.elements for c in M.elements
        )
    else:
        if rng is None:
            import random

            rng = random.Random(0)
        triples = (
            (M.sample(rng, hint), M.sample(rng, hint), M.sample(rng, hint))
            for _ in range(samples)
        )
    for a, b, c in triples:
        assert M.op(M.op(a, b), c) == M.op(a, M.op(b, c)), f"associativity fails at {(a, b, c)}"
        assert M.op(a, b) == M.op(b, a), f"commutativity fails at {(a, b)}"
        assert M.op(a, M.identity) == a, f"identity law fails at {a}"
        if M.is_group:
            assert M.op(a, M.inverse(a)) == M.identity, f"inverse law fails at {a}"
        if M.is_free_natural:
            if M.op(a, b) == M.identity:
                assert a == M.identity and b == M.identity
            d = M.try_subtract(a, b)
            if d is not None:
                assert M.op(d, b) == a
