"""Bounded powers of monomial ideals and the largest nonvanishing exponent.

The s-th c-bounded power of I is the subideal of I^s generated by its
c-bounded members.  Products are enumerated level by level, discarding any
partial product that already exceeds the bound (sound because exponents only
grow), so the full power is never materialized.
"""

from __future__ import annotations

from .graphs import Graph
from .monomials import BoundVector, Monomial, MonomialIdeal, _check_monomial, degree, minimalize


def _bounded_levels(ideal: MonomialIdeal, c: BoundVector, max_level: int) -> list[set[Monomial]]:
    """Sets of all c-bounded s-fold generator products for s = 1..max_level.

    Stops early once a level comes out empty; every bounded (s+1)-fold product
    is a bounded s-fold product times a generator, so the recursion is complete.
    """
    n = ideal.n
    bounded_gens = [g for g in ideal.gens if all(a <= b for a, b in zip(g, c))]
    levels: list[set[Monomial]] = []
    current = set(bounded_gens)
    while current and len(levels) < max_level:
        levels.append(current)
        nxt: set[Monomial] = set()
        for p in current:
            for g in bounded_gens:
                q = tuple(a + b for a, b in zip(p, g))
                if all(a <= b for a, b in zip(q, c)):
                    nxt.add(q)
        current = nxt
    return levels


def bounded_power(ideal: MonomialIdeal, s: int, c: BoundVector) -> MonomialIdeal:
    """The s-th c-bounded power (I^s)_c, s >= 1."""
    if s < 1:
        raise ValueError(f"bounded_power wants s >= 1, got {s}")
    c = _check_monomial(ideal.n, c)
    levels = _bounded_levels(ideal, c, s)
    if len(levels) < s:
        return MonomialIdeal(ideal.n, ())
    return minimalize(ideal.n, levels[s - 1])


def squarefree_power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """The s-th squarefree power, i.e. the bounded power at c = (1,...,1)."""
    return bounded_power(ideal, s, (1,) * ideal.n)


def bounded_power_chain(ideal: MonomialIdeal, c: BoundVector) -> list[MonomialIdeal]:
    """All nonzero bounded powers [(I^1)_c, ..., (I^delta)_c] in one pass."""
    c = _check_monomial(ideal.n, c)
    _check_proper(ideal)
    mindeg = min((degree(g) for g in ideal.gens), default=1)
    cap = sum(c) // max(mindeg, 1) if ideal.gens else 0
    return [minimalize(ideal.n, level) for level in _bounded_levels(ideal, c, cap)]


def delta(ideal: MonomialIdeal, c: BoundVector) -> int:
    """The largest k with (I^k)_c nonzero; 0 when already I_c = 0.

    Terminates because a c-bounded k-fold product has total degree at least
    k * (minimal generator degree) and at most |c|.
    """
    return len(bounded_power_chain(ideal, c))


def _check_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_unit():
        raise ValueError("delta is unbounded for the unit ideal")


def delta_bmatching(graph: Graph, c: BoundVector) -> int:
    """delta of the edge ideal, computed independently as a maximum b-matching.

    Maximizes the number of chosen edge copies subject to every vertex i lying
    on at most c_i copies, by exact branch and bound over edge multiplicities.
    No monomial arithmetic is involved.
    """
    c = _check_monomial(graph.n, c)
    edges = graph.sorted_edges()
    caps = [0] + list(c)  # 1-based
    # capacity left on vertices still touched by edges from position k onward
    suffix_vertices: list[set[int]] = [set() for _ in range(len(edges) + 1)]
    for k in range(len(edges) - 1, -1, -1):
        suffix_vertices[k] = suffix_vertices[k + 1] | set(edges[k])
    best = 0

    def search(k: int, total: int) -> None:
        nonlocal best
        if total > best:
            best = total
        if k == len(edges):
            return
        room = sum(caps[v] for v in suffix_vertices[k]) // 2
        if total + room <= best:
            return
        i, j = edges[k]
        top = min(caps[i], caps[j])
        for m in range(top, -1, -1):
            caps[i] -= m
            caps[j] -= m
            search(k + 1, total + m)
            caps[i] += m
            caps[j] += m

    search(0, 0)
    return best
