"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors: plain tuples of nonnegative ints of a fixed
length n (the ambient variable count).  Variables are 1-based, so the exponent
of x_i lives at index i-1.  A :class:`MonomialIdeal` is the canonical minimal
generating set: generators sorted lexicographically, pairwise non-dividing.
Equality of ideals is equality of representations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

Monomial = tuple[int, ...]
BoundVector = tuple[int, ...]

ONE: Monomial = ()  # the degree-0 monomial of ambient 0; use unit(n) elsewhere


def unit(n: int) -> Monomial:
    """The monomial 1 in n variables (all-zero exponent vector)."""
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    """The monomial x_i (1-based) in n variables."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def degree(u: Monomial) -> int:
    return sum(u)

def support(u: Monomial) -> tuple[int, ...]:
    """1-based indices of the variables dividing u."""
    return tuple(i + 1 for i, a in enumerate(u) if a > 0)


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check_same_ambient(u, v)
    return tuple(a + b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_same_ambient(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check_same_ambient(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u divides v, i.e. every exponent of u is <= that of v."""
    _check_same_ambient(u, v)
    return all(a <= b for a, b in zip(u, v))


def colon_mono(u: Monomial, v: Monomial) -> Monomial:
    """The monomial u : v = u / gcd(u, v), entrywise max(a - b, 0)."""
    _check_same_ambient(u, v)
    return tuple(max(a - b, 0) for a, b in zip(u, v))


def is_bounded(u: Monomial, c: BoundVector) -> bool:
    """True iff u is entrywise <= c.  With c = (1,...,1) this is squarefreeness."""
    _check_same_ambient(u, c)
    return all(a <= b for a, b in zip(u, c))


def leq_componentwise(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """The componentwise partial order on bound vectors."""
    if len(c1) != len(c2):
        raise ValueError(f"ambient mismatch: {len(c1)} vs {len(c2)}")
    return all(a <= b for a, b in zip(c1, c2))


def _check_same_ambient(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"ambient mismatch: {len(u)} vs {len(v)}")


def _check_monomial(n: int, u: Sequence[int]) -> Monomial:
    t = tuple(u)
    if len(t) != n:
        raise ValueError(f"ambient mismatch: monomial has {len(t)} entries, expected {n}")
    if any(a < 0 for a in t):
        raise ValueError(f"negative exponent in {t}")
    return t


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generating set.

    ``gens`` is lexicographically sorted and pairwise non-dividing; the empty
    tuple is the zero ideal and ``((0,)*n,)`` the unit ideal.  Build instances
    through :func:`minimalize` (or the methods below) so the invariants hold.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient variable count must be positive")
        for g in self.gens:
            _check_monomial(self.n, g)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and degree(self.gens[0]) == 0

    def contains(self, u: Monomial) -> bool:
        """Ideal membership: some generator divides u."""
        _check_monomial(self.n, u)
        return any(divides(g, u) for g in self.gens)

    def restrict(self, c: BoundVector) -> "MonomialIdeal":
        """The subideal generated by the c-bounded monomials of self.

        Keeping exactly the c-bounded generators is sound: any c-bounded member
        of the ideal is divisible by a generator, which is then c-bounded too.
        """
        c = _check_monomial(self.n, c)
        kept = tuple(g for g in self.gens if is_bounded(g, c))
        # a subset of a minimal generating set is minimal and stays sorted
        return MonomialIdeal(self.n, kept)

    def power(self, s: int) -> "MonomialIdeal":
        """The s-th ordinary power, s >= 1, by multiset products of generators."""
        if s < 1:
            raise ValueError(f"power wants s >= 1, got {s}")
        if self.is_zero() or s == 1:
            return self
        products = set()
        for combo in combinations_with_replacement(self.gens, s):
            prod = [0] * self.n
            for g in combo:
                for i, a in enumerate(g):
                    prod[i] += a
            products.add(tuple(prod))
        return minimalize(self.n, products)

    def colon(self, u: Monomial) -> "MonomialIdeal":
        """The colon ideal (self : u), generated by the g : u over generators g."""
        u = _check_monomial(self.n, u)
        return minimalize(self.n, (colon_mono(g, u) for g in self.gens))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "gens": [list(g) for g in self.gens]})

    @classmethod
    def from_json(cls, text: str) -> "MonomialIdeal":
        data = json.loads(text)
        if not isinstance(data, dict) or "n" not in data or "gens" not in data:
            raise ValueError('ideal JSON must look like {"n": int, "gens": [[int,...],...]}')
        return minimalize(int(data["n"]), (tuple(g) for g in data["gens"]))

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def minimalize(n: int, monomials: Iterable[Sequence[int]]) -> MonomialIdeal:
    """The ideal generated by ``monomials``: drop every strictly divisible one.

    The empty input yields the zero ideal.  Output generators are sorted
    lexicographically on exponent entries.
    """
    ms = sorted({_check_monomial(n, u) for u in monomials}, key=lambda u: (degree(u), u))
    kept: list[Monomial] = []
    for u in ms:
        if not any(divides(v, u) for v in kept):
            kept.append(u)
    return MonomialIdeal(n, tuple(sorted(kept)))


def format_monomial(u: Monomial) -> str:
    if degree(u) == 0:
        return "1"
    parts = []
    for i, a in enumerate(u):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts)
