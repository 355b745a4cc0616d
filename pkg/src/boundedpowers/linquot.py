"""Linear quotients orderings: recognition, search, and restriction.

An ordering u_1, ..., u_m of the minimal generators has linear quotients when
every prefix colon ideal (u_1, ..., u_{i-1}) : u_i is generated by variables;
equivalently, for every j < i some k < i has u_k : u_i equal to a single
variable dividing u_j : u_i.  The search for an ordering is complete
backtracking over "admissible next generator", memoized on the chosen subset:
admissibility depends only on the set of generators already placed, not on
their sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .monomials import (
    BoundVector,
    MonomialIdeal,
    _check_monomial,
    colon_mono,
    degree,
    is_bounded,
)
from .powers import bounded_power, delta

DEFAULT_GENERATOR_CAP = 24


class SearchCapExceeded(RuntimeError):
    """Raised when an ordering search is refused because the ideal has too
    many generators for the configured cap.  Never silent."""


@dataclass(frozen=True)
class LQOrdering:
    """A candidate generator ordering; ``valid`` is set only after the linear
    quotients check has passed."""

    ideal: MonomialIdeal
    order: tuple[int, ...]
    valid: bool = False


def _check_permutation(ideal: MonomialIdeal, order: tuple[int, ...]) -> None:
    if sorted(order) != list(range(len(ideal.gens))):
        raise ValueError(f"{order} is not a permutation of 0..{len(ideal.gens) - 1}")


def is_lq_ordering(ideal: MonomialIdeal, order: tuple[int, ...]) -> bool:
    """True iff the given generator ordering has linear quotients."""
    _check_permutation(ideal, order)
    gens = ideal.gens
    for pos in range(1, len(order)):
        i = order[pos]
        prefix = order[:pos]
        colons = [colon_mono(gens[j], gens[i]) for j in prefix]
        var_colons = [w for w in colons if degree(w) == 1]
        for w in colons:
            if not any(all(a >= b for a, b in zip(w, v)) for v in var_colons):
                return False
    return True


def search_ordering(
    m: int,
    pair_ok_free: list[list[bool]],
    supp_masks: list[list[int]],
    var_bits: list[list[int]],
) -> tuple[int, ...] | None:
    """Backtracking search for an ordering of 0..m-1 subject to pair conditions.

    Element i may follow the placed set S iff for every j in S either
    ``pair_ok_free[j][i]`` holds or some k in S has ``var_bits[k][i]`` set and
    contained in ``supp_masks[j][i]``.  Failed placed-sets are memoized as
    bitmasks; candidates are tried in ascending index order, so the first
    complete ordering found is the lexicographically smallest valid one.
    """
    if m == 0:
        return ()
    full = (1 << m) - 1
    failed: set[int] = set()

    def extend(mask: int) -> list[int] | None:
        if mask == full:
            return []
        if mask in failed:
            return None
        for i in range(m):
            if mask >> i & 1:
                continue
            varmask = 0
            rest = mask
            while rest:
                k = (rest & -rest).bit_length() - 1
                varmask |= var_bits[k][i]
                rest &= rest - 1
            ok = True
            rest = mask
            while rest:
                j = (rest & -rest).bit_length() - 1
                if not pair_ok_free[j][i] and not supp_masks[j][i] & varmask:
                    ok = False
                    break
                rest &= rest - 1
            if ok:
                tail = extend(mask | 1 << i)
                if tail is not None:
                    return [i] + tail
        failed.add(mask)
        return None

    result = extend(0)
    return tuple(result) if result is not None else None


def _lq_pair_data(ideal: MonomialIdeal):
    gens = ideal.gens
    m = len(gens)
    supp_masks = [[0] * m for _ in range(m)]
    var_bits = [[0] * m for _ in range(m)]
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            w = colon_mono(gens[j], gens[i])
            mask = 0
            for p, a in enumerate(w):
                if a > 0:
                    mask |= 1 << p
            supp_masks[j][i] = mask
            if degree(w) == 1:
                var_bits[j][i] = mask
    return supp_masks, var_bits


def find_lq_ordering(
    ideal: MonomialIdeal, max_generators: int = DEFAULT_GENERATOR_CAP
) -> LQOrdering | None:
    """A linear quotients ordering if one exists, else None.

    The search is complete, so None is a proof of absence.  Ideals with more
    than ``max_generators`` generators are refused via SearchCapExceeded.
    """
    m = len(ideal.gens)
    if m > max_generators:
        raise SearchCapExceeded(
            f"linear quotients search refused: {m} generators > cap {max_generators}"
        )
    if m <= 1:
        return LQOrdering(ideal, tuple(range(m)), valid=True)
    supp_masks, var_bits = _lq_pair_data(ideal)
    pair_ok_free = [[False] * m for _ in range(m)]
    order = search_ordering(m, pair_ok_free, supp_masks, var_bits)
    if order is None:
        return None
    return LQOrdering(ideal, order, valid=True)


def restrict_lq_ordering(
    ideal: MonomialIdeal, ordering: LQOrdering, c: BoundVector
) -> LQOrdering:
    """The ordering induced on the c-bounded generators.

    The input must be a valid linear quotients ordering of ``ideal``; the
    induced subsequence is returned as an ordering of ``ideal.restrict(c)``
    together with the result of re-checking linear quotients on it.
    """
    c = _check_monomial(ideal.n, c)
    if ordering.ideal != ideal or not (
        ordering.valid or is_lq_ordering(ideal, ordering.order)
    ):
        raise ValueError("input is not a valid linear quotients ordering of the ideal")
    restricted = ideal.restrict(c)
    index_of = {g: k for k, g in enumerate(restricted.gens)}
    induced = tuple(
        index_of[ideal.gens[i]] for i in ordering.order if is_bounded(ideal.gens[i], c)
    )
    return LQOrdering(restricted, induced, valid=is_lq_ordering(restricted, induced))


def all_bounded_powers_lq(
    graph: Graph, c: BoundVector, max_generators: int = DEFAULT_GENERATOR_CAP
) -> bool:
    """True iff (I(G)^s)_c has linear quotients for every s = 1..delta.

    Requires every bound entry strictly positive; an empty s-range (edgeless
    graph) is vacuously true.
    """
    c = _check_monomial(graph.n, c)
    if any(ci == 0 for ci in c):
        raise ValueError("all_bounded_powers_lq requires every c_i > 0")
    ideal = graph.edge_ideal()
    top = delta(ideal, c)
    for s in range(1, top + 1):
        if find_lq_ordering(bounded_power(ideal, s, c), max_generators) is None:
            return False
    return True
