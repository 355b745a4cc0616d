"""The polymatroidal exchange condition for equigenerated monomial ideals."""

from __future__ import annotations

from .graphs import Graph
from .monomials import BoundVector, MonomialIdeal, degree
from .powers import bounded_power, delta


def is_equigenerated(ideal: MonomialIdeal) -> bool:
    """All generators share one total degree (zero ideal: true by convention)."""
    return len({degree(g) for g in ideal.gens}) <= 1


def exchange_witness(
    ideal: MonomialIdeal, u_idx: int, v_idx: int, i: int
) -> int | None:
    """The smallest j (1-based) with u_j < v_j and x_j * u / x_i a generator.

    Requires u, v generators of the ideal and deg_{x_i}(u) > deg_{x_i}(v).
    Returns None when no exchange variable exists.
    """
    gens = ideal.gens
    if not (0 <= u_idx < len(gens) and 0 <= v_idx < len(gens)):
        raise ValueError("generator index out of range")
    u, v = gens[u_idx], gens[v_idx]
    if not 1 <= i <= ideal.n or u[i - 1] <= v[i - 1]:
        raise ValueError(f"exchange requires deg_x{i}(u) > deg_x{i}(v)")
    genset = set(gens)
    for j in range(1, ideal.n + 1):
        if u[j - 1] < v[j - 1]:
            swapped = list(u)
            swapped[i - 1] -= 1
            swapped[j - 1] += 1
            if tuple(swapped) in genset:
                return j
    return None


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """The exchange condition over all generator pairs and exceeding variables.

    Not equigenerated means false; zero and principal ideals are vacuously
    polymatroidal.
    """
    if not is_equigenerated(ideal):
        return False
    m = len(ideal.gens)
    for u_idx in range(m):
        for v_idx in range(m):
            if u_idx == v_idx:
                continue
            u, v = ideal.gens[u_idx], ideal.gens[v_idx]
            for i in range(1, ideal.n + 1):
                if u[i - 1] > v[i - 1]:
                    if exchange_witness(ideal, u_idx, v_idx, i) is None:
                        return False
    return True


def is_matroidal(ideal: MonomialIdeal) -> bool:
    """Polymatroidal with every generator squarefree."""
    return all(max(g, default=0) <= 1 for g in ideal.gens) and is_polymatroidal(ideal)


def top_power_is_polymatroidal(graph: Graph, c: BoundVector) -> bool:
    """Whether the highest nonvanishing bounded power of the edge ideal passes
    the exchange condition.  Errors when delta = 0 (vacuous instance)."""
    ideal = graph.edge_ideal()
    top = delta(ideal, c)
    if top == 0:
        raise ValueError("delta is 0: no nonvanishing bounded power to test")
    return is_polymatroidal(bounded_power(ideal, top, c))
