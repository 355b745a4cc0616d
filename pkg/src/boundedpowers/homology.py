"""Polarization, graded Betti numbers via exact simplicial homology, and
Castelnuovo-Mumford regularity.

Betti numbers of a monomial ideal are read off reduced homology of upper
Koszul complexes at the multidegrees of the lcm lattice.  Homology ranks come
from exact ranks of boundary matrices: integer fraction-free elimination for
characteristic 0, modular elimination for prime characteristic.  Two further
routes to the same table exist for cross-validation: restriction-complex
homology on squarefree ideals and the degreewise strands of the full
generator-subset resolution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd as _gcd
from typing import Iterable, Mapping, Sequence

from .monomials import (
    Monomial,
    MonomialIdeal,
    degree,
    lcm,
    minimalize,
    support,
)

TAYLOR_GENERATOR_CAP = 14


class SimplicialComplex:
    """An abstract simplicial complex as an explicit face list.

    The void complex (no faces at all) and the empty complex (only the empty
    face) are distinguished; reduced homology of the empty complex is one copy
    of the field in dimension -1.
    """

    def __init__(self, faces: Iterable[Sequence[int]]):
        by_dim: dict[int, set[tuple[int, ...]]] = {}
        for face in faces:
            f = tuple(sorted(set(face)))
            by_dim.setdefault(len(f) - 1, set()).add(f)
        self._by_dim = {d: sorted(fs) for d, fs in sorted(by_dim.items())}

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        """Downward closure of the given faces."""
        closed: set[tuple[int, ...]] = set()
        stack = [tuple(sorted(set(f))) for f in facets]
        while stack:
            f = stack.pop()
            if f in closed:
                continue
            closed.add(f)
            for k in range(len(f)):
                stack.append(f[:k] + f[k + 1 :])
        return cls(closed)

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return self._by_dim.get(d, [])

    def all_faces(self) -> list[tuple[int, ...]]:
        return [f for d in sorted(self._by_dim) for f in self._by_dim[d]]

    def is_void(self) -> bool:
        return not self._by_dim

    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex, -2 for void."""
        return max(self._by_dim, default=-2)

    def is_closed(self) -> bool:
        face_set = {f for fs in self._by_dim.values() for f in fs}
        return all(
            f[:k] + f[k + 1 :] in face_set
            for f in face_set
            for k in range(len(f))
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self._by_dim == other._by_dim

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.all_faces()!r})"


def rank_of_rows(rows: Iterable[Mapping[int, int]], char: int = 0) -> int:
    """Exact rank of a sparse integer matrix given as rows {column: value}.

    char 0 works over the rationals with integer fraction-free row operations
    (each updated row is rescaled by its content); char p reduces modulo p.
    Pivots prefer unit entries with low fill.
    """
    if char < 0 or char == 1:
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    work: list[dict[int, int]] = []
    for row in rows:
        if char:
            r = {c: v % char for c, v in row.items() if v % char}
        else:
            r = {c: v for c, v in row.items() if v}
        if r:
            work.append(r)
    rank = 0
    while work:
        colcount: dict[int, int] = {}
        for r in work:
            for c in r:
                colcount[c] = colcount.get(c, 0) + 1
        best = None
        for idx, r in enumerate(work):
            for c, v in r.items():
                unit = 0 if (abs(v) == 1 or char) else 1
                key = (unit, (len(r) - 1) * (colcount[c] - 1), len(r), idx, c)
                if best is None or key < best[0]:
                    best = (key, idx, c)
        _, pidx, pcol = best
        pivot = work.pop(pidx)
        pval = pivot[pcol]
        rank += 1
        nxt: list[dict[int, int]] = []
        for r in work:
            rv = r.get(pcol)
            if rv is None:
                nxt.append(r)
                continue
            if char:
                factor = rv * pow(pval, char - 2, char) % char
                new = {}
                for c, v in r.items():
                    w = (v - factor * pivot.get(c, 0)) % char
                    if w:
                        new[c] = w
                for c, v in pivot.items():
                    if c not in r:
                        w = -factor * v % char
                        if w:
                            new[c] = w
            else:
                new = {}
                for c, v in r.items():
                    w = pval * v - rv * pivot.get(c, 0)
                    if w:
                        new[c] = w
                for c, v in pivot.items():
                    if c not in r:
                        new[c] = -rv * v
                content = 0
                for v in new.values():
                    content = _gcd(content, v)
                if content > 1:
                    new = {c: v // content for c, v in new.items()}
            if new:
                nxt.append(new)
        work = nxt
    return rank


def _boundary_rows(
    complex_: SimplicialComplex, k: int
) -> list[dict[int, int]]:
    """Rows of the boundary map from k-faces to (k-1)-faces, one row per
    k-face (rank is transpose-invariant)."""
    sources = complex_.faces_of_dim(k)
    targets = {f: i for i, f in enumerate(complex_.faces_of_dim(k - 1))}
    rows = []
    for f in sources:
        row: dict[int, int] = {}
        for t in range(len(f)):
            sub = f[:t] + f[t + 1 :]
            if sub not in targets:
                raise ValueError(f"complex is not closed under subsets: missing {sub}")
            row[targets[sub]] = 1 if t % 2 == 0 else -1
        rows.append(row)
    return rows


def reduced_homology_ranks(
    complex_: SimplicialComplex, char: int = 0
) -> dict[int, int]:
    """Dimensions of reduced homology in every degree -1..dim."""
    if complex_.is_void():
        return {}
    top = complex_.dim()
    boundary_rank = {}
    for k in range(0, top + 1):
        boundary_rank[k] = rank_of_rows(_boundary_rows(complex_, k), char)
    boundary_rank[top + 1] = 0
    ranks = {}
    for i in range(-1, top + 1):
        ranks[i] = (
            len(complex_.faces_of_dim(i))
            - boundary_rank.get(i, 0)
            - boundary_rank[i + 1]
        )
    return ranks


def homology_rank(complex_: SimplicialComplex, i: int, char: int = 0) -> int:
    """dim of reduced simplicial homology in degree i over Q or GF(char)."""
    if complex_.is_void() or i < -1 or i > complex_.dim():
        return 0
    faces = complex_.faces_of_dim(i)
    if not faces:
        return 0
    down = rank_of_rows(_boundary_rows(complex_, i), char) if i >= 0 else 0
    up = rank_of_rows(_boundary_rows(complex_, i + 1), char)
    return len(faces) - down - up


@dataclass(frozen=True)
class PolarizationMap:
    """Bookkeeping for squarefree-ification: source variable i (1-based) with
    multiplicity a_i expands to target variables indexed offset_i+1..offset_i+a_i."""

    source_n: int
    multiplicities: tuple[int, ...]

    @property
    def target_ambient(self) -> int:
        return sum(self.multiplicities)

    def target_index(self, i: int, k: int) -> int:
        """1-based target index of the k-th copy of source variable i."""
        if not 1 <= i <= self.source_n or not 1 <= k <= self.multiplicities[i - 1]:
            raise ValueError(f"no target variable for (i={i}, k={k})")
        return sum(self.multiplicities[: i - 1]) + k

    def polarize_monomial(self, u: Monomial) -> Monomial:
        if len(u) != self.source_n:
            raise ValueError("ambient mismatch")
        target = [0] * self.target_ambient
        for i, a in enumerate(u, start=1):
            if a > self.multiplicities[i - 1]:
                raise ValueError(f"exponent {a} of x{i} exceeds multiplicity")
            for k in range(1, a + 1):
                target[self.target_index(i, k) - 1] = 1
        return tuple(target)


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """The squarefree polarization, one target variable per exponent unit.

    Generator count and minimality are preserved; the map records the variable
    multiplicities used.
    """
    if ideal.is_zero():
        raise ValueError("cannot polarize the zero ideal")
    if ideal.is_unit():
        raise ValueError("cannot polarize the unit ideal (no target variables)")
    mults = tuple(max(g[i] for g in ideal.gens) for i in range(ideal.n))
    pmap = PolarizationMap(ideal.n, mults)
    gens = sorted(pmap.polarize_monomial(g) for g in ideal.gens)
    polarized = MonomialIdeal(pmap.target_ambient, tuple(gens))
    assert len(polarized.gens) == len(ideal.gens)
    return polarized, pmap


def upper_koszul(ideal: MonomialIdeal, m: Monomial) -> SimplicialComplex:
    """The complex on supp(m) whose faces are the subsets one can divide out of
    m while staying in the ideal; its reduced homology in degree i-1 is the
    Betti number of the ideal at (i, m)."""
    if not ideal.contains(m):
        raise ValueError("multidegree is not a member of the ideal")
    supp = support(m)
    faces = []
    for mask in range(1 << len(supp)):
        quotient = list(m)
        sigma = []
        for t, v in enumerate(supp):
            if mask >> t & 1:
                sigma.append(v)
                quotient[v - 1] -= 1
        if ideal.contains(tuple(quotient)):
            faces.append(tuple(sigma))
    return SimplicialComplex(faces)


def lcm_lattice(ideal: MonomialIdeal) -> list[Monomial]:
    """All least common multiples of nonempty sets of minimal generators."""
    lattice: set[Monomial] = set(ideal.gens)
    frontier = set(ideal.gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in ideal.gens:
                b = lcm(a, g)
                if b not in lattice:
                    new.add(b)
        lattice |= new
        frontier = new
    return sorted(lattice, key=lambda u: (degree(u), u))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} with the field characteristic recorded.

    ``entries`` holds the nonzero values as (i, j, beta) sorted by (i, j).
    """

    char: int
    entries: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_dict(cls, char: int, table: Mapping[tuple[int, int], int]) -> "BettiTable":
        entries = tuple(
            (i, j, b) for (i, j), b in sorted(table.items()) if b
        )
        if any(b < 0 for _, _, b in entries):
            raise ValueError("Betti numbers must be nonnegative")
        return cls(char, entries)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for i, j, b in self.entries}

    def get(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table has no regularity")
        return max(j - i for i, j, _ in self.entries)

    def projective_dimension(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table has no projective dimension")
        return max(i for i, _, _ in self.entries)

    def to_json(self) -> str:
        return json.dumps({"char": self.char, "entries": [list(e) for e in self.entries]})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        return cls(int(data["char"]), tuple(tuple(e) for e in data["entries"]))


def betti_table(ideal: MonomialIdeal, char: int = 0) -> BettiTable:
    """Graded Betti numbers of the ideal via upper Koszul complex homology,
    summed over the multidegrees of the lcm lattice."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no Betti table")
    table: dict[tuple[int, int], int] = {}
    for m in lcm_lattice(ideal):
        ranks = reduced_homology_ranks(upper_koszul(ideal, m), char)
        j = degree(m)
        for k, h in ranks.items():
            if h and k + 1 >= 0:
                key = (k + 1, j)
                table[key] = table.get(key, 0) + h
    return BettiTable.from_dict(char, table)


def regularity(ideal: MonomialIdeal, char: int = 0) -> int:
    """max(j - i) over the nonzero Betti numbers of the ideal (not the quotient)."""
    return betti_table(ideal, char).regularity()


def has_linear_resolution(ideal: MonomialIdeal, char: int = 0) -> bool:
    """For an equigenerated nonzero ideal: regularity equals the generator degree."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no resolution")
    degrees = {degree(g) for g in ideal.gens}
    if len(degrees) != 1:
        raise ValueError("linear resolution is only defined for equigenerated ideals")
    return regularity(ideal, char) == degrees.pop()


def betti_table_hochster(ideal: MonomialIdeal, char: int = 0) -> BettiTable:
    """Betti numbers of a squarefree ideal from homology of restrictions of its
    face complex: an independent route used to cross-validate betti_table.

    For each union sigma of generator supports, the restriction of the
    complex of non-members contributes its reduced homology in degree
    |sigma| - i - 2 to beta_{i, |sigma|}.
    """
    if ideal.is_zero():
        raise ValueError("the zero ideal has no Betti table")
    if any(max(g) > 1 for g in ideal.gens):
        raise ValueError("restriction-homology route requires a squarefree ideal")
    if ideal.is_unit():
        raise ValueError("the unit ideal has no proper face complex")
    supports = [frozenset(support(g)) for g in ideal.gens]
    sigmas = sorted(
        {frozenset(support(m)) for m in lcm_lattice(ideal)},
        key=lambda s: (len(s), sorted(s)),
    )
    table: dict[tuple[int, int], int] = {}
    for sigma in sigmas:
        inside = [s for s in supports if s <= sigma]
        covered = frozenset().union(*inside) if inside else frozenset()
        if covered != sigma:
            continue  # some vertex of sigma is an apex: the restriction is a cone
        verts = sorted(sigma)
        faces = []
        for mask in range(1 << len(verts)):
            tau = frozenset(v for t, v in enumerate(verts) if mask >> t & 1)
            if not any(s <= tau for s in inside):
                faces.append(tuple(sorted(tau)))
        ranks = reduced_homology_ranks(SimplicialComplex(faces), char)
        j = len(sigma)
        for k, h in ranks.items():
            i = j - k - 2
            if h and i >= 0:
                table[(i, j)] = table.get((i, j), 0) + h
    return BettiTable.from_dict(char, table)


def betti_table_taylor(ideal: MonomialIdeal, char: int = 0) -> BettiTable:
    """Betti numbers from the degreewise strands of the generator-subset
    resolution: the third independent route, practical for few generators.

    For each multidegree M, the strand complex has the subsets of generators
    with lcm M in homological degree |subset| - 1, with boundary keeping only
    faces of the same lcm; its homology dimensions are the beta_{i,M}.
    """
    if ideal.is_zero():
        raise ValueError("the zero ideal has no Betti table")
    gens = ideal.gens
    m = len(gens)
    if m > TAYLOR_GENERATOR_CAP:
        raise ValueError(
            f"subset-resolution route refused for {m} generators (cap {TAYLOR_GENERATOR_CAP})"
        )
    lcm_of: dict[int, Monomial] = {}
    groups: dict[Monomial, list[int]] = {}
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        value = gens[low] if not rest else lcm(lcm_of[rest], gens[low])
        lcm_of[mask] = value
        groups.setdefault(value, []).append(mask)
    table: dict[tuple[int, int], int] = {}
    for multidegree, masks in groups.items():
        by_size: dict[int, list[int]] = {}
        for mask in masks:
            by_size.setdefault(bin(mask).count("1"), []).append(mask)
        index = {
            mask: t for size in by_size for t, mask in enumerate(sorted(by_size[size]))
        }
        mask_set = set(masks)
        boundary_rank: dict[int, int] = {}
        for size, level in sorted(by_size.items()):
            rows = []
            for mask in sorted(level):
                row: dict[int, int] = {}
                elems = [t for t in range(m) if mask >> t & 1]
                for pos, t in enumerate(elems):
                    sub = mask & ~(1 << t)
                    if sub in mask_set:
                        row[index[sub]] = 1 if pos % 2 == 0 else -1
                if row:
                    rows.append(row)
            boundary_rank[size] = rank_of_rows(rows, char)
        j = degree(multidegree)
        for size, level in by_size.items():
            i = size - 1
            h = len(level) - boundary_rank.get(size, 0) - boundary_rank.get(size + 1, 0)
            if h:
                table[(i, j)] = table.get((i, j), 0) + h
    return BettiTable.from_dict(char, table)
