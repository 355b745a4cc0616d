"""Simple labeled graphs, their edge ideals, and corpus ingestion.

Vertices are the integers 1..n and are permanently identified with the
variables x_1..x_n of the ambient polynomial ring, so a graph on n vertices
produces ideals of ambient n.  Edges are unordered pairs stored as (i, j)
with i < j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .monomials import Monomial, MonomialIdeal

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"
_ENUMERATION_CAP = 9


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def normalize_edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError(f"loop at vertex {i} is not allowed")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A simple graph: no loops, no multiple edges, vertices 1..n."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(normalize_edge(i, j) for i, j in edges))

    def has_edge(self, i: int, j: int) -> bool:
        return normalize_edge(i, j) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def edge_ideal(self) -> MonomialIdeal:
        """One squarefree quadric x_i*x_j per edge; edgeless gives the zero ideal."""
        gens = []
        for i, j in self.edges:
            g = [0] * self.n
            g[i - 1] = 1
            g[j - 1] = 1
            gens.append(tuple(g))
        return MonomialIdeal(self.n, tuple(sorted(gens)))

    def complement(self) -> "Graph":
        all_pairs = {(i, j) for i, j in combinations(self.vertices(), 2)}
        return Graph(self.n, frozenset(all_pairs - self.edges))

    def delete_vertices(self, remove: Iterable[int], compact: bool = False) -> "Graph":
        """Drop the given vertices and every edge touching them.

        By default the remaining vertices keep their labels and the ambient n
        is unchanged (deleted vertices linger as isolated labels), so ideals
        built from the result stay comparable.  With ``compact=True`` the
        survivors are relabeled 1..m preserving order.
        """
        removed = set(remove)
        for v in removed:
            if not 1 <= v <= self.n:
                raise ValueError(f"unknown vertex label {v}")
        kept_edges = {e for e in self.edges if not (e[0] in removed or e[1] in removed)}
        if not compact:
            return Graph(self.n, frozenset(kept_edges))
        survivors = [v for v in self.vertices() if v not in removed]
        relabel = {v: k + 1 for k, v in enumerate(survivors)}
        return Graph(
            max(len(survivors), 1),
            frozenset((relabel[i], relabel[j]) for i, j in kept_edges),
        )

    def is_chordal(self) -> bool:
        """No induced cycle of length >= 4, via maximum cardinality search.

        MCS visits vertices by decreasing count of visited neighbors; the graph
        is chordal iff the reversed visit order is a perfect elimination
        ordering, i.e. every vertex's later neighborhood is a clique.
        """
        weight = {v: 0 for v in self.vertices()}
        unvisited = set(self.vertices())
        visit: list[int] = []
        while unvisited:
            v = min(unvisited, key=lambda u: (-weight[u], u))
            unvisited.remove(v)
            visit.append(v)
            for u in self.neighbors(v):
                if u in unvisited:
                    weight[u] += 1
        elim = list(reversed(visit))
        position = {v: k for k, v in enumerate(elim)}
        for v in elim:
            later = [u for u in self.neighbors(v) if position[u] > position[v]]
            for a, b in combinations(later, 2):
                if not self.has_edge(a, b):
                    return False
        return True

    def matching_number(self) -> int:
        """Maximum number of pairwise disjoint edges, by exact branching."""
        adjacency = {v: sorted(self.neighbors(v)) for v in self.vertices()}

        @lru_cache(maxsize=None)
        def best(active: frozenset[int]) -> int:
            v = None
            for u in sorted(active):
                if any(w in active for w in adjacency[u]):
                    v = u
                    break
            if v is None:
                return 0
            value = best(active - {v})  # leave v unmatched
            for w in adjacency[v]:
                if w in active:
                    value = max(value, 1 + best(active - {v, w}))
            return value

        result = best(frozenset(self.vertices()))
        best.cache_clear()
        return result

    def to_graph6(self) -> str:
        data = _encode_n(self.n)
        bits = []
        for j in range(2, self.n + 1):
            for i in range(1, j):
                bits.append(1 if (i, j) in self.edges else 0)
        while len(bits) % 6:
            bits.append(0)
        for k in range(0, len(bits), 6):
            value = 0
            for b in bits[k : k + 6]:
                value = (value << 1) | b
            data.append(value + 63)
        return bytes(data).decode("ascii")

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.sorted_edges()]})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError('graph JSON must look like {"n": int, "edges": [[i,j],...]}')
        return cls.from_edges(int(data["n"]), ((int(i), int(j)) for i, j in data["edges"]))


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    raise ValueError(f"graph6 encoding for n={n} not supported (max 258047)")


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional `>>graph6<<` header tolerated).

    Decoding is bit-exact: byte values, payload length, and zero padding are
    all enforced, so parse/emit round-trips on valid corpus lines.
    """
    text = line.strip()
    base = 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
        base = len(GRAPH6_HEADER)
    if not text:
        raise Graph6Error("empty graph6 line", base)
    data = text.encode("ascii", errors="replace")
    for k, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", base + k)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 >258047 vertices not supported", base)
        if len(data) < 4:
            raise Graph6Error("truncated graph6 vertex count", base + len(data) - 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= 62:
            raise Graph6Error(f"non-canonical long form for n={n}", base)
        idx = 4
    else:
        n = data[0] - 63
        idx = 1
    if n < 1:
        raise Graph6Error("graph6 line encodes an empty vertex set", base)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(data) - idx != need:
        raise Graph6Error(
            f"payload length {len(data) - idx} != expected {need} for n={n}",
            base + min(idx + need, len(data)),
        )
    bits: list[int] = []
    for k in range(need):
        value = data[idx + k] - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    for k in range(npairs, len(bits)):
        if bits[k]:
            raise Graph6Error("nonzero padding bits", base + idx + k // 6)
    edges = set()
    pos = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[pos]:
                edges.add((i, j))
            pos += 1
    return Graph(n, frozenset(edges))


def read_graph6_file(path: str) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as handle:
        for line in handle:
            if line.strip():
                yield parse_graph6(line)


def enumerate_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on 1..n, in a fixed order.

    Pairs are listed lexicographically ((1,2), (1,3), ..., (n-1,n)); graph
    number ``mask`` contains pair k iff bit k (LSB first) of ``mask`` is set,
    and graphs are yielded for mask = start, ..., stop-1, so the stream can be
    restarted at any index range for parallel sharding.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > _ENUMERATION_CAP:
        raise ValueError(f"enumeration refused for n={n} > cap {_ENUMERATION_CAP}")
    pairs = list(combinations(range(1, n + 1), 2))
    total = 1 << len(pairs)
    if not 0 <= start <= total:
        raise ValueError(f"start index {start} outside 0..{total}")
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        yield Graph(n, edges)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))
