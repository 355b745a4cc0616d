"""Even-connections and the quadratic structure of colon ideals of bounded
powers of edge ideals.

Two vertices a, b (possibly equal) are even-connected with respect to a
multiset of s edges when there is a walk a = p_0, p_1, ..., p_{2r+1} = b,
r >= 1, all of whose steps are edges of the graph, whose r interior odd pairs
{p_{2k+1}, p_{2k+2}} are edges from the multiset, each distinct edge used at
most its multiplicity.  These pairs, together with actual edges, generate the
colon of the next bounded power by a generator of the current one.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .graphs import Edge, Graph, normalize_edge
from .linquot import SearchCapExceeded, search_ordering
from .monomials import (
    BoundVector,
    Monomial,
    MonomialIdeal,
    _check_monomial,
    colon_mono,
    degree,
    minimalize,
)
from .powers import bounded_power


@dataclass(frozen=True)
class EvenConnection:
    """A witness walk; ``assignment[k]`` is the index into the queried edge
    multiset realizing the k-th interior odd pair."""

    path: tuple[int, ...]
    assignment: tuple[int, ...]

    @property
    def r(self) -> int:
        return (len(self.path) - 2) // 2


def is_valid_even_connection(
    graph: Graph, edges: Sequence[Edge], a: int, b: int, conn: EvenConnection
) -> bool:
    """Check the four defining conditions of an even-connection witness."""
    path = conn.path
    if len(path) < 4 or len(path) % 2:
        return False
    r = conn.r
    if path[0] != a or path[-1] != b or len(conn.assignment) != r:
        return False
    for p, q in zip(path, path[1:]):
        if p == q or not graph.has_edge(p, q):
            return False
    used: dict[Edge, int] = {}
    for k in range(r):
        idx = conn.assignment[k]
        if not 0 <= idx < len(edges):
            return False
        e = normalize_edge(*edges[idx])
        if normalize_edge(path[2 * k + 1], path[2 * k + 2]) != e:
            return False
        used[e] = used.get(e, 0) + 1
    supply = Counter(normalize_edge(*e) for e in edges)
    return all(used[e] <= supply[e] for e in used)


def _bfs_even_connections(
    graph: Graph, edges: Sequence[Edge], a: int, target: int | None
):
    """BFS over (vertex, remaining multiplicities, parity) states.

    With ``target`` set, stops at the first accepting state for that vertex and
    returns a witness; with ``target`` None, returns the set of all vertices b
    even-connected to a.  Acceptance: odd walk position, at least one multiset
    edge consumed.
    """
    multiset = [normalize_edge(*e) for e in edges]
    for e in multiset:
        if e not in graph.edges:
            raise ValueError(f"edge {e} is not an edge of the graph")
    distinct = sorted(set(multiset))
    copies: dict[Edge, list[int]] = {e: [] for e in distinct}
    for idx, e in enumerate(multiset):
        copies[e].append(idx)
    full = tuple(len(copies[e]) for e in distinct)

    start = (a, full, 0)  # parity 0: about to take a free step
    parents: dict[tuple, tuple | None] = {start: None}
    queue = deque([start])
    reachable: set[int] = set()

    def witness(state: tuple) -> EvenConnection:
        path: list[int] = []
        steps: list[int | None] = []
        cur: tuple | None = state
        while cur is not None:
            path.append(cur[0])
            prev_info = parents[cur]
            if prev_info is None:
                break
            prev, used_edge = prev_info
            steps.append(used_edge)
            cur = prev
        path.reverse()
        steps.reverse()
        remaining = {e: list(copies[e]) for e in distinct}
        assignment = []
        for used_edge in steps:
            if used_edge is not None:
                assignment.append(remaining[used_edge].pop(0))
        return EvenConnection(tuple(path), tuple(assignment))

    while queue:
        state = queue.popleft()
        vertex, remaining, parity = state
        if parity == 1:
            if remaining != full:
                if target is None:
                    reachable.add(vertex)
                elif vertex == target:
                    return witness(state)
            # odd position: next step consumes a multiset edge
            for t, e in enumerate(distinct):
                if remaining[t] == 0 or vertex not in e:
                    continue
                other = e[1] if e[0] == vertex else e[0]
                nxt_rem = remaining[:t] + (remaining[t] - 1,) + remaining[t + 1 :]
                nxt = (other, nxt_rem, 0)
                if nxt not in parents:
                    parents[nxt] = (state, e)
                    queue.append(nxt)
        else:
            # even position: next step is any edge of the graph
            for u in sorted(graph.neighbors(vertex)):
                nxt = (u, remaining, 1)
                if nxt not in parents:
                    parents[nxt] = (state, None)
                    queue.append(nxt)
    return None if target is not None else reachable


def find_even_connection(
    graph: Graph, edges: Sequence[Edge], a: int, b: int
) -> EvenConnection | None:
    """A shortest even-connection witness between a and b, or None."""
    for v in (a, b):
        if not 1 <= v <= graph.n:
            raise ValueError(f"unknown vertex label {v}")
    if not edges:
        return None  # r >= 1 requires at least one interior pair
    return _bfs_even_connections(graph, edges, a, b)


def even_connected_targets(graph: Graph, edges: Sequence[Edge], a: int) -> set[int]:
    """All vertices even-connected to a with respect to the edge multiset."""
    if not edges:
        return set()
    result = _bfs_even_connections(graph, edges, a, None)
    assert isinstance(result, set)
    return result


def edge_factorization(graph: Graph, s: int, u: Monomial) -> tuple[Edge, ...] | None:
    """The lexicographically smallest multiset of s edges with product u."""
    edges = graph.sorted_edges()

    def extend(start: int, remaining: list[int], depth: int):
        if depth == 0:
            return [] if not any(remaining) else None
        for k in range(start, len(edges)):
            i, j = edges[k]
            if remaining[i - 1] > 0 and remaining[j - 1] > 0:
                remaining[i - 1] -= 1
                remaining[j - 1] -= 1
                tail = extend(k, remaining, depth - 1)
                remaining[i - 1] += 1
                remaining[j - 1] += 1
                if tail is not None:
                    return [edges[k]] + tail
        return None

    result = extend(0, list(u), s)
    return tuple(result) if result is not None else None


def colon_quadrics(
    graph: Graph,
    s: int,
    c: BoundVector,
    u: Monomial,
    factorization: Sequence[Edge] | None = None,
) -> MonomialIdeal:
    """The colon of (I(G)^{s+1})_c by u, assembled from quadrics.

    u must be a minimal generator of (I(G)^s)_c (so in particular s <= delta);
    it is factored into a canonical multiset of s edges, unless an explicit
    witness ``factorization`` is supplied (the result must not depend on the
    chosen witness; passing different ones exercises that).  The output is
    generated by the monomials x_i*x_j (i = j allowed) such that u*x_i*x_j
    stays c-bounded and x_i, x_j are adjacent or even-connected with respect
    to the factorization.  Agreement with the directly computed colon ideal is
    the content of the corresponding verification suite; at s = delta both
    sides are empty, so the description degenerates consistently.
    """
    c = _check_monomial(graph.n, c)
    u = _check_monomial(graph.n, u)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    ideal = graph.edge_ideal()
    power_s = bounded_power(ideal, s, c)
    if u not in power_s.gens:
        raise ValueError("u is not a minimal generator of the s-th bounded power")
    if factorization is None:
        factorization = edge_factorization(graph, s, u)
        assert factorization is not None  # u is a bounded product of s edges
    else:
        factorization = tuple(normalize_edge(*e) for e in factorization)
        product = [0] * graph.n
        for i, j in factorization:
            product[i - 1] += 1
            product[j - 1] += 1
        if len(factorization) != s or tuple(product) != u:
            raise ValueError("supplied factorization does not multiply to u")
    connected = {
        a: even_connected_targets(graph, factorization, a) for a in graph.vertices()
    }
    quadrics = []
    for i in range(1, graph.n + 1):
        for j in range(i, graph.n + 1):
            if u[i - 1] + (2 if i == j else 1) > c[i - 1]:
                continue
            if i != j and u[j - 1] + 1 > c[j - 1]:
                continue
            if (i != j and graph.has_edge(i, j)) or j in connected[i]:
                q = [0] * graph.n
                q[i - 1] += 1
                q[j - 1] += 1
                quadrics.append(tuple(q))
    return minimalize(graph.n, quadrics)


def _admissible_range(ideal: MonomialIdeal, s: int, c: BoundVector) -> MonomialIdeal:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    nxt = bounded_power(ideal, s + 1, c)
    if nxt.is_zero():
        raise ValueError(f"s={s} is not below delta: next bounded power vanishes")
    return nxt


def colon_generated_in_degree_two(graph: Graph, s: int, c: BoundVector) -> bool:
    """Whether every colon of the (s+1)-st bounded power by a minimal generator
    of the s-th is generated purely in degree two, for 1 <= s <= delta - 1."""
    c = _check_monomial(graph.n, c)
    ideal = graph.edge_ideal()
    nxt = _admissible_range(ideal, s, c)
    for u in bounded_power(ideal, s, c).gens:
        if any(degree(w) != 2 for w in nxt.colon(u).gens):
            return False
    return True


def has_colon_splitting_order(
    graph: Graph, s: int, c: BoundVector, max_generators: int = 10
) -> bool:
    """Whether the generators of (I(G)^s)_c admit a labeling u_1..u_m so that
    for every j < i, either u_j : u_i lies in the colon of the next bounded
    power by u_i, or some earlier u_r has u_r : u_i a variable dividing
    u_j : u_i.  Complete backtracking; refuses ideals above the generator cap.
    """
    c = _check_monomial(graph.n, c)
    ideal = graph.edge_ideal()
    nxt = _admissible_range(ideal, s, c)
    gens = bounded_power(ideal, s, c).gens
    m = len(gens)
    if m > max_generators:
        raise SearchCapExceeded(
            f"labeling search refused: {m} generators > cap {max_generators}"
        )
    if m <= 1:
        return True
    colon_ideals = [nxt.colon(u) for u in gens]
    pair_ok_free = [[False] * m for _ in range(m)]
    supp_masks = [[0] * m for _ in range(m)]
    var_bits = [[0] * m for _ in range(m)]
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            w = colon_mono(gens[j], gens[i])
            pair_ok_free[j][i] = colon_ideals[i].contains(w)
            mask = 0
            for p, a in enumerate(w):
                if a > 0:
                    mask |= 1 << p
            supp_masks[j][i] = mask
            if degree(w) == 1:
                var_bits[j][i] = mask
    return search_ordering(m, pair_ok_free, supp_masks, var_bits) is not None
