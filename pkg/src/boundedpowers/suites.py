"""Theorem-verification suites over graph and ideal corpora.

Each suite replays one statement as a machine-checkable property over a
deterministic corpus and returns a replayable JSON report.  Instances that do
not meet a statement's hypotheses (empty s-ranges, search-cap refusals) are
reported as skips, never silently dropped and never counted as failures.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .connections import (
    colon_generated_in_degree_two,
    colon_quadrics,
    has_colon_splitting_order,
)
from .graphs import Graph, enumerate_labeled_graphs, parse_graph6, read_graph6_file
from .homology import has_linear_resolution, regularity
from .linquot import (
    SearchCapExceeded,
    all_bounded_powers_lq,
    find_lq_ordering,
    restrict_lq_ordering,
)
from .monomials import MonomialIdeal, minimalize
from .polymatroid import is_matroidal, is_polymatroidal
from .powers import bounded_power_chain

SUITE_NAMES = (
    "boston",
    "istanbul",
    "edge-lq",
    "squarefree-lq",
    "essen",
    "linres-top",
    "rfirst",
    "regcol",
    "deg2",
    "banerjee-colon",
    "colon-reg",
    "regmain",
    "remark45",
)

JOBS_ENV_VAR = "BOUNDEDPOWERS_JOBS"


@dataclass(frozen=True)
class SuiteConfig:
    """Everything a suite run depends on; echoed into the report."""

    suite: str
    nmax: int | None = None
    graph6_path: str | None = None
    random_count: int | None = None
    random_nmax: int = 5
    seed: int = 0
    c_policy: str = "ones"  # ones | constant | random | explicit
    c_value: int = 1  # constant value / random upper bound
    c_explicit: tuple[int, ...] | None = None
    char: int = 0
    max_generators: int = 24
    max_s: int | None = None
    jobs: int = 1
    ideal_max_generators: int = 6
    ideal_max_exponent: int = 2
    samples_per_instance: int = 3

    def __post_init__(self) -> None:
        if self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {SUITE_NAMES}")
        if self.c_policy not in ("ones", "constant", "random", "explicit"):
            raise ValueError(f"unknown c policy {self.c_policy!r}")
        if self.c_policy == "explicit" and not self.c_explicit:
            raise ValueError("explicit c policy needs c_explicit")
        if self.max_generators < 1 or self.jobs < 1:
            raise ValueError("caps and jobs must be positive")


@dataclass
class VerificationReport:
    config: dict
    records: list[dict]
    counterexamples: list[dict]
    summary: dict
    timings: dict = field(default_factory=dict)

    def to_dict(self, with_timings: bool = True) -> dict:
        data = {
            "config": self.config,
            "records": self.records,
            "counterexamples": self.counterexamples,
            "summary": self.summary,
        }
        if with_timings:
            data["timings"] = self.timings
        return data

    def to_json(self, with_timings: bool = True) -> str:
        return json.dumps(self.to_dict(with_timings), sort_keys=True, indent=1)

    @property
    def failed(self) -> int:
        return self.summary["fail"]


def _record(key: str, instance: dict, outcome: str, detail: str, s: int | None = None) -> dict:
    return {"key": key, "instance": instance, "s": s, "outcome": outcome, "detail": detail}


def _c_string(c) -> str:
    return ",".join(str(x) for x in c)


def _draw_c(rng: random.Random, n: int, cfg: SuiteConfig, strictly_positive: bool) -> tuple[int, ...]:
    if cfg.c_policy == "ones":
        return (1,) * n
    if cfg.c_policy == "constant":
        if strictly_positive and cfg.c_value < 1:
            raise ValueError("this suite requires strictly positive bounds")
        return (cfg.c_value,) * n
    if cfg.c_policy == "explicit":
        c = cfg.c_explicit
        if len(c) != n:
            raise ValueError(f"explicit c has length {len(c)}, corpus graph has n={n}")
        if strictly_positive and any(x < 1 for x in c):
            raise ValueError("this suite requires strictly positive bounds")
        return tuple(c)
    # random entries in [0, c_value]; all-zero vectors are resampled, and so is
    # any zero entry when the statement under test requires positivity
    low = 1 if strictly_positive else 0
    while True:
        c = tuple(rng.randint(low, max(cfg.c_value, low)) for _ in range(n))
        if any(c):
            return c


def _graph_instances(cfg: SuiteConfig, strictly_positive: bool, force_ones: bool) -> list[dict]:
    rng = random.Random(cfg.seed)
    graphs: list[Graph] = []
    if cfg.graph6_path is not None:
        graphs.extend(read_graph6_file(cfg.graph6_path))
    elif cfg.random_count is not None:
        for _ in range(cfg.random_count):
            n = rng.randint(2, max(cfg.random_nmax, 2))
            edges = [
                (i, j)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
                if rng.random() < 0.5
            ]
            graphs.append(Graph.from_edges(n, edges))
    else:
        nmax = cfg.nmax if cfg.nmax is not None else 4
        for n in range(1, nmax + 1):
            graphs.extend(enumerate_labeled_graphs(n))
    instances = []
    for g in graphs:
        c = (1,) * g.n if force_ones else _draw_c(rng, g.n, cfg, strictly_positive)
        instances.append({"graph6": g.to_graph6(), "c": list(c)})
    return instances


def _random_ideal(rng: random.Random, cfg: SuiteConfig) -> MonomialIdeal:
    n = rng.randint(1, max(cfg.random_nmax, 1))
    count = rng.randint(1, cfg.ideal_max_generators)
    gens = []
    for _ in range(count):
        while True:
            g = tuple(rng.randint(0, cfg.ideal_max_exponent) for _ in range(n))
            if any(g):
                break
        gens.append(g)
    return minimalize(n, gens)


def _ideal_instances(cfg: SuiteConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    count = cfg.random_count if cfg.random_count is not None else 100
    instances = []
    for idx in range(count):
        ideal = _random_ideal(rng, cfg)
        cs = []
        for _ in range(cfg.samples_per_instance):
            c = tuple(rng.randint(0, cfg.ideal_max_exponent + 1) for _ in range(ideal.n))
            if cfg.suite == "istanbul":
                c_small = tuple(rng.randint(0, x) for x in c)
                cs.append([list(c), list(c_small)])
            else:
                cs.append(list(c))
        instances.append(
            {"index": idx, "ideal": json.loads(ideal.to_json()), "cs": cs}
        )
    return instances


def _chain(graph: Graph, c) -> list:
    return bounded_power_chain(graph.edge_ideal(), tuple(c))


def _eval_edge_lq(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    rhs = g.complement().is_chordal()
    try:
        lhs = all_bounded_powers_lq(g, c, cfg.max_generators)
    except SearchCapExceeded as exc:
        return [_record(key, payload, "skip", str(exc))]
    outcome = "pass" if lhs == rhs else "fail"
    return [_record(key, payload, outcome, f"all_powers_lq={lhs} complement_chordal={rhs}")]


def _eval_essen(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    if not chain:
        return [_record(key, payload, "skip", "delta=0: no nonvanishing bounded power")]
    top = chain[-1]
    ok = is_polymatroidal(top)
    detail = f"delta={len(chain)} polymatroidal={ok}"
    if ok and all(x == 1 for x in c):
        ok = is_matroidal(top)
        detail += f" matroidal={ok}"
    return [_record(key, payload, "pass" if ok else "fail", detail)]


def _eval_linres_top(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    if not chain:
        return [_record(key, payload, "skip", "delta=0: no nonvanishing bounded power")]
    delta = len(chain)
    ok = has_linear_resolution(chain[-1], cfg.char)
    detail = f"delta={delta} linear_resolution={ok} (generation degree {2 * delta})"
    return [_record(key, payload, "pass" if ok else "fail", detail, s=delta)]


def _eval_regmain(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    if not chain:
        return [_record(key, payload, "skip", "delta=0: empty s-range")]
    delta = len(chain)
    records = []
    top_s = delta if cfg.max_s is None else min(delta, cfg.max_s)
    for s in range(1, top_s + 1):
        reg = regularity(chain[s - 1], cfg.char)
        ok = reg <= delta + s
        records.append(
            _record(key, payload, "pass" if ok else "fail",
                    f"reg={reg} bound={delta + s}", s=s)
        )
    return records


def _eval_regcol(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    delta = len(chain)
    if delta <= 1:
        return [_record(key, payload, "skip", f"delta={delta}: no s with 1 <= s <= delta-1")]
    records = []
    top_s = delta - 1 if cfg.max_s is None else min(delta - 1, cfg.max_s)
    for s in range(1, top_s + 1):
        current, nxt = chain[s - 1], chain[s]
        lhs = regularity(nxt, cfg.char)
        colon_regs = [regularity(nxt.colon(u), cfg.char) for u in current.gens]
        rhs = max([r + 2 * s for r in colon_regs] + [regularity(current, cfg.char)])
        ok = lhs <= rhs
        records.append(
            _record(key, payload, "pass" if ok else "fail",
                    f"reg_next={lhs} bound={rhs}", s=s)
        )
    return records


def _eval_deg2(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    delta = len(chain)
    if delta <= 1:
        return [_record(key, payload, "skip", f"delta={delta}: no s with 1 <= s <= delta-1")]
    records = []
    top_s = delta - 1 if cfg.max_s is None else min(delta - 1, cfg.max_s)
    for s in range(1, top_s + 1):
        ok = colon_generated_in_degree_two(g, s, c)
        records.append(
            _record(key, payload, "pass" if ok else "fail",
                    "all colon generators have degree 2" if ok else "colon generator of degree != 2",
                    s=s)
        )
    return records


def _eval_banerjee_colon(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    delta = len(chain)
    if delta <= 1:
        return [_record(key, payload, "skip", f"delta={delta}: no s with 1 <= s <= delta-1")]
    records = []
    top_s = delta - 1 if cfg.max_s is None else min(delta - 1, cfg.max_s)
    for s in range(1, top_s + 1):
        current, nxt = chain[s - 1], chain[s]
        bad = None
        for u in current.gens:
            direct = nxt.colon(u)
            quadric = colon_quadrics(g, s, c, u)
            if direct != quadric:
                bad = (u, direct, quadric)
                break
        if bad is None:
            records.append(_record(key, payload, "pass",
                                   f"{len(current.gens)} generators agree", s=s))
        else:
            u, direct, quadric = bad
            records.append(_record(
                key, payload, "fail",
                f"u={list(u)} direct={direct.to_json()} quadrics={quadric.to_json()}",
                s=s))
    return records


def _eval_colon_reg(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    delta = len(chain)
    if delta <= 1:
        return [_record(key, payload, "skip", f"delta={delta}: no s with 2 <= s <= delta")]
    records = []
    top_s = delta if cfg.max_s is None else min(delta, cfg.max_s)
    for s in range(2, top_s + 1):
        bound = delta - s + 2
        bad = None
        for u in chain[s - 2].gens:
            reg = regularity(chain[s - 1].colon(u), cfg.char)
            if reg > bound:
                bad = (u, reg)
                break
        if bad is None:
            records.append(_record(key, payload, "pass", f"all colon regs <= {bound}", s=s))
        else:
            records.append(_record(key, payload, "fail",
                                   f"u={list(bad[0])} reg={bad[1]} bound={bound}", s=s))
    return records


def _eval_rfirst(payload: dict, cfg: SuiteConfig) -> list[dict]:
    g = parse_graph6(payload["graph6"])
    c = tuple(payload["c"])
    key = f"{payload['graph6']}|{_c_string(c)}"
    chain = _chain(g, c)
    delta = len(chain)
    if delta <= 1:
        return [_record(key, payload, "skip", f"delta={delta}: no s with 1 <= s <= delta-1")]
    records = []
    top_s = delta - 1 if cfg.max_s is None else min(delta - 1, cfg.max_s)
    for s in range(1, top_s + 1):
        try:
            ok = has_colon_splitting_order(g, s, c, cfg.max_generators)
        except SearchCapExceeded as exc:
            records.append(_record(key, payload, "skip", str(exc), s=s))
            continue
        records.append(_record(key, payload, "pass" if ok else "fail",
                               "labeling found" if ok else "no labeling exists", s=s))
    return records


def _eval_boston(payload: dict, cfg: SuiteConfig) -> list[dict]:
    ideal = MonomialIdeal.from_json(json.dumps(payload["ideal"]))
    key = f"ideal{payload['index']:05d}"
    try:
        ordering = find_lq_ordering(ideal, cfg.max_generators)
    except SearchCapExceeded as exc:
        return [_record(key, payload, "skip", str(exc))]
    if ordering is None:
        return [_record(key, payload, "skip", "ideal has no linear quotients (hypothesis unmet)")]
    records = []
    for t, c in enumerate(payload["cs"]):
        induced = restrict_lq_ordering(ideal, ordering, tuple(c))
        records.append(_record(
            f"{key}|c{t}", payload, "pass" if induced.valid else "fail",
            f"c={_c_string(c)} induced_order={list(induced.order)} valid={induced.valid}",
            s=t))
    return records


def _eval_istanbul(payload: dict, cfg: SuiteConfig) -> list[dict]:
    ideal = MonomialIdeal.from_json(json.dumps(payload["ideal"]))
    key = f"ideal{payload['index']:05d}"
    try:
        if find_lq_ordering(ideal, cfg.max_generators) is None:
            return [_record(key, payload, "skip", "ideal has no linear quotients (hypothesis unmet)")]
    except SearchCapExceeded as exc:
        return [_record(key, payload, "skip", str(exc))]
    records = []
    for t, (c, c_small) in enumerate(payload["cs"]):
        big = find_lq_ordering(ideal.restrict(tuple(c)), cfg.max_generators)
        if big is None:
            records.append(_record(f"{key}|c{t}", payload, "fail",
                                   f"restriction to c={_c_string(c)} lost linear quotients", s=t))
            continue
        small = find_lq_ordering(ideal.restrict(tuple(c_small)), cfg.max_generators)
        ok = small is not None
        records.append(_record(
            f"{key}|c{t}", payload, "pass" if ok else "fail",
            f"c={_c_string(c)} c'={_c_string(c_small)} persists={ok}", s=t))
    return records


def _eval_remark45(payload: dict, cfg: SuiteConfig) -> list[dict]:
    ideal = minimalize(5, [(1, 1, 1, 0, 0), (1, 0, 0, 1, 1)])
    c = (1,) * 5
    top = len(bounded_power_chain(ideal, c))
    ordering = find_lq_ordering(ideal)
    ok = top == 1 and ordering is None
    detail = f"delta={top} lq_ordering={'none' if ordering is None else list(ordering.order)}"
    return [_record("remark45", {"ideal": json.loads(ideal.to_json()), "c": list(c)},
                    "pass" if ok else "fail", detail)]


_SUITES = {
    "boston": ("ideals", _eval_boston),
    "istanbul": ("ideals", _eval_istanbul),
    "edge-lq": ("graphs-positive", _eval_edge_lq),
    "squarefree-lq": ("graphs-ones", _eval_edge_lq),
    "essen": ("graphs", _eval_essen),
    "linres-top": ("graphs", _eval_linres_top),
    "rfirst": ("graphs", _eval_rfirst),
    "regcol": ("graphs", _eval_regcol),
    "deg2": ("graphs", _eval_deg2),
    "banerjee-colon": ("graphs", _eval_banerjee_colon),
    "colon-reg": ("graphs", _eval_colon_reg),
    "regmain": ("graphs", _eval_regmain),
    "remark45": ("fixed", _eval_remark45),
}


def _evaluate_instance(args: tuple[str, dict, SuiteConfig]) -> list[dict]:
    suite, payload, cfg = args
    return _SUITES[suite][1](payload, cfg)


def default_jobs() -> int:
    value = os.environ.get(JOBS_ENV_VAR)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            pass
    return 1


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Execute one suite and assemble its deterministic report.

    Instances are generated sequentially from the seed, evaluated (in parallel
    when jobs > 1; results do not depend on the schedule), and the records are
    sorted by instance key.  Wall-clock timings live in a sidecar section that
    is excluded from determinism comparisons.
    """
    start = time.perf_counter()
    kind = _SUITES[cfg.suite][0]
    if kind == "graphs":
        instances = _graph_instances(cfg, strictly_positive=False, force_ones=False)
    elif kind == "graphs-positive":
        instances = _graph_instances(cfg, strictly_positive=True, force_ones=False)
    elif kind == "graphs-ones":
        instances = _graph_instances(cfg, strictly_positive=True, force_ones=True)
    elif kind == "ideals":
        instances = _ideal_instances(cfg)
    else:
        instances = [{}]
    work = [(cfg.suite, payload, cfg) for payload in instances]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_evaluate_instance, work, chunksize=8))
    else:
        chunks = [_evaluate_instance(item) for item in work]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r["key"], -1 if r["s"] is None else r["s"]))
    counterexamples = [r for r in records if r["outcome"] == "fail"]
    summary = {
        "pass": sum(r["outcome"] == "pass" for r in records),
        "fail": len(counterexamples),
        "skip": sum(r["outcome"] == "skip" for r in records),
        "total": len(records),
    }
    elapsed = time.perf_counter() - start
    config = asdict(cfg)
    # jobs affects only scheduling; keep it with the timing sidecar so that
    # reports are byte-identical regardless of parallelism
    jobs = config.pop("jobs")
    return VerificationReport(
        config=config,
        records=records,
        counterexamples=counterexamples,
        summary=summary,
        timings={"wall_seconds": round(elapsed, 6), "jobs": jobs},
    )
