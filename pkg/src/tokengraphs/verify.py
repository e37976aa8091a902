"""Verification sweeps and randomized property suites.

A sweep builds, for each selected family and parameter, the derived
graph, evaluates the closed form, runs the exact solver, generates the
explicit witness where a construction exists, and emits one
``VerificationRow``. Canonical CSV and JSON reports are byte-identical
across runs for a given configuration: the elapsed-milliseconds column
is zeroed there (wall-clock times are not reproducible) and is only
shown in the human-readable table.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import formulas, witnesses
from .graphs import (
    Graph,
    cartesian_product,
    components,
    cycle,
    delete_vertices,
    disjoint_union,
    fan,
    induced_subgraph,
    is_isomorphic,
    path,
    wheel,
)
from .mis import SolveAborted, alpha, alpha_avoiding, brute_force_alpha, is_independent
from .operators import DerivedGraph, double_vertex, index_of, indices_of, k_token, multiset_token, pair_graph

STATUS_OK = "ok"
STATUS_MISMATCH = "mismatch"
STATUS_ABORTED = "aborted"

AUTO_BRUTE_LIMIT = 20  # auto method: brute force at or below, branch and bound above

CSV_COLUMNS = ("family", "operator", "m", "vertices", "formula", "alpha", "witness", "status", "ms")


@dataclass(frozen=True)
class VerificationRow:
    family: str
    operator: str
    m: int
    vertices: int
    formula: int
    alpha: int | None
    witness: int | None
    status: str
    ms: float


@dataclass(frozen=True)
class FamilySpec:
    name: str
    operator: str  # "double_vertex" | "pair_graph"
    base: Callable[[int], Graph]
    derive: Callable[[Graph], DerivedGraph]
    formula: Callable[[int], int]
    witness_tokens: Callable[[int], tuple] | None
    min_m: int
    witness_min_m: int
    default_range: tuple[int, int]


FAMILIES: dict[str, FamilySpec] = {
    fam.name: fam
    for fam in (
        FamilySpec("dv_path", "double_vertex", path, double_vertex,
                   formulas.dv_path, witnesses.dv_path_witness_tokens, 2, 2, (2, 12)),
        FamilySpec("dv_cycle", "double_vertex", cycle, double_vertex,
                   formulas.dv_cycle, None, 3, 0, (3, 12)),
        FamilySpec("dv_fan", "double_vertex", fan, double_vertex,
                   formulas.dv_fan, witnesses.dv_fan_witness_tokens, 1, 1, (2, 12)),
        # no closed-form construction reaches the m = 3 wheel value, so the
        # witness column starts at m = 4 there
        FamilySpec("dv_wheel", "double_vertex", wheel, double_vertex,
                   formulas.dv_wheel, witnesses.dv_wheel_witness_tokens, 3, 4, (3, 12)),
        FamilySpec("pair_path", "pair_graph", path, pair_graph,
                   formulas.pair_path, witnesses.pair_path_witness_tokens, 2, 2, (3, 10)),
        FamilySpec("pair_cycle", "pair_graph", cycle, pair_graph,
                   formulas.pair_cycle, witnesses.pair_cycle_witness_tokens, 3, 3, (3, 12)),
        FamilySpec("pair_fan", "pair_graph", fan, pair_graph,
                   formulas.pair_fan, witnesses.pair_fan_witness_tokens, 1, 1, (3, 10)),
        FamilySpec("pair_wheel", "pair_graph", wheel, pair_graph,
                   formulas.pair_wheel, witnesses.pair_wheel_witness_tokens, 3, 3, (3, 10)),
    )
}


@dataclass(frozen=True)
class RunConfig:
    families: tuple[str, ...]
    m_range: tuple[int, int] | None  # None: per-family default ranges
    method: str = "auto"  # auto | brute | bnb
    budget_ms: float | None = None
    fmt: str = "table"
    out: str | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        unknown = [f for f in self.families if f not in FAMILIES]
        if unknown:
            raise ValueError(f"unknown families: {', '.join(unknown)}")
        if not self.families:
            raise ValueError("no families selected")
        if self.m_range is not None and self.m_range[0] > self.m_range[1]:
            raise ValueError(f"empty m range {self.m_range[0]}..{self.m_range[1]}")
        if self.budget_ms is not None and self.budget_ms <= 0:
            raise ValueError("budget must be positive")
        if self.method not in ("auto", "brute", "bnb"):
            raise ValueError(f"unknown method {self.method!r}")


def solve_exact(g: Graph, method: str = "auto", budget_ms: float | None = None):
    """Dispatch to the brute-force oracle or the branch-and-bound solver."""
    if method == "brute" or (method == "auto" and g.order <= AUTO_BRUTE_LIMIT):
        return brute_force_alpha(g)
    return alpha(g, budget_ms=budget_ms)


def verify_one(fam: FamilySpec, m: int, method: str = "auto",
               budget_ms: float | None = None) -> VerificationRow:
    """Build, evaluate, solve and certify a single (family, m) pair."""
    derived = fam.derive(fam.base(m))
    formula_value = fam.formula(m)
    started = time.perf_counter()
    witness_size: int | None = None
    try:
        result = solve_exact(derived.graph, method=method, budget_ms=budget_ms)
        if fam.witness_tokens is not None and m >= fam.witness_min_m:
            tokens = fam.witness_tokens(m)
            members = indices_of(derived, tokens)
            if not is_independent(derived.graph, members):
                witness_size = -1  # dependent "witness": report as mismatch
            else:
                witness_size = len(members)
        solver_value: int | None = result.alpha
        status = STATUS_OK
        if formula_value != result.alpha or (witness_size is not None and witness_size != formula_value):
            status = STATUS_MISMATCH
    except SolveAborted:
        solver_value = None
        witness_size = None
        status = STATUS_ABORTED
    ms = (time.perf_counter() - started) * 1000.0
    return VerificationRow(
        family=fam.name,
        operator=fam.operator,
        m=m,
        vertices=derived.graph.order,
        formula=formula_value,
        alpha=solver_value,
        witness=witness_size,
        status=status,
        ms=ms,
    )


def run_sweep(config: RunConfig) -> list[VerificationRow]:
    """All rows for the configuration, ordered by (family, operator, m)."""
    rows: list[VerificationRow] = []
    for name in config.families:
        fam = FAMILIES[name]
        lo, hi = config.m_range if config.m_range is not None else fam.default_range
        lo = max(lo, fam.min_m)
        for m in range(lo, hi + 1):
            rows.append(verify_one(fam, m, method=config.method, budget_ms=config.budget_ms))
    rows.sort(key=lambda r: (r.family, r.operator, r.m))
    return rows


def sweep_exit_code(rows: Sequence[VerificationRow]) -> int:
    if any(r.status == STATUS_MISMATCH for r in rows):
        return 1
    if any(r.status == STATUS_ABORTED for r in rows):
        return 2
    return 0


# ---------------------------------------------------------------------------
# report rendering


def _canonical_cell(value) -> str:
    return "" if value is None else str(value)


def rows_to_csv(rows: Sequence[VerificationRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                (
                    r.family,
                    r.operator,
                    str(r.m),
                    str(r.vertices),
                    str(r.formula),
                    _canonical_cell(r.alpha),
                    _canonical_cell(r.witness),
                    r.status,
                    "0",  # zeroed for reproducible reports
                )
            )
        )
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[VerificationRow]) -> str:
    payload = [
        {
            "family": r.family,
            "operator": r.operator,
            "m": r.m,
            "vertices": r.vertices,
            "formula": r.formula,
            "alpha": r.alpha,
            "witness": r.witness,
            "status": r.status,
            "ms": 0,
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def rows_to_table(rows: Sequence[VerificationRow]) -> str:
    header = f"{'family':<11} {'operator':<13} {'m':>3} {'vertices':>8} {'formula':>7} {'alpha':>5} {'witness':>7} {'status':<8} {'ms':>8}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.family:<11} {r.operator:<13} {r.m:>3} {r.vertices:>8} {r.formula:>7} "
            f"{_canonical_cell(r.alpha):>5} {_canonical_cell(r.witness):>7} {r.status:<8} {r.ms:>8.1f}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# randomized property suites


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_graph(rng: random.Random, n: int) -> Graph:
    """Erdos-Renyi style draw with a density sampled per graph."""
    p = rng.uniform(0.2, 0.8)
    edges = frozenset(
        (u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p
    )
    return Graph(n, edges)


def _random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n)
        if len(components(g)) == 1:
            return g


def alpha_after_deleting_tokens(dg: DerivedGraph, tokens) -> int:
    """Exact alpha of the derived graph with the given tokens removed."""
    sub, _ = delete_vertices(dg.graph, indices_of(dg, tokens))
    return alpha(sub).alpha


def _suite_monotonicity(rng: random.Random, sizes: Sequence[int], trials: int) -> SuiteResult:
    suite = SuiteResult("alpha_monotone_under_induced_subgraphs", 0)
    for n in sizes:
        for _ in range(trials):
            g = random_graph(rng, n)
            keep = [v for v in g.vertices if rng.random() < 0.6] or [1]
            h, _ = induced_subgraph(g, keep)
            suite.cases += 1
            if h.order >= 1 and alpha(h).alpha > alpha(g).alpha:
                suite.failures.append(f"n={n} keep={keep}")
    return suite


def _suite_component_decomposition(rng: random.Random, sizes: Sequence[int], trials: int) -> SuiteResult:
    suite = SuiteResult("double_vertex_of_disjoint_union_decomposes", 0)
    fixed = [(path(3), path(4)), (path(3), cycle(4)), (cycle(3), cycle(4))]
    pairs = list(fixed)
    for _ in range(trials):
        # small connected parts keep the product component modest
        pairs.append((_random_connected_graph(rng, rng.randint(2, 5)),
                      _random_connected_graph(rng, rng.randint(2, 5))))
    for g1, g2 in pairs:
        suite.cases += 1
        if not check_component_decomposition(g1, g2):
            suite.failures.append(f"g1={g1!r} g2={g2!r}")
    return suite


def check_component_decomposition(g1: Graph, g2: Graph) -> bool:
    """components(F2(g1 + g2)) must match {F2(g1), F2(g2), g1 x g2} as an
    unordered multiset under isomorphism."""
    derived = double_vertex(disjoint_union(g1, g2))
    parts = [comp for comp, _ in components(derived.graph)]
    targets = [double_vertex(g1).graph, double_vertex(g2).graph, cartesian_product(g1, g2)]
    if len(parts) != len(targets):
        return False
    remaining = list(targets)
    for part in parts:
        for i, target in enumerate(remaining):
            if is_isomorphic(part, target):
                del remaining[i]
                break
        else:
            return False
    return True


def check_token_deletion_commutes(g: Graph, victims: set[int], k: int) -> bool:
    """F_k(g - victims) must be isomorphic to the induced subgraph of
    F_k(g) on tokens disjoint from the victims."""
    reduced, _ = delete_vertices(g, victims)
    direct = k_token(reduced, k).graph
    dg = k_token(g, k)
    keep = [
        i for i, tok in enumerate(dg.labels, start=1)
        if not victims.intersection(tok.elements)
    ]
    induced, _ = induced_subgraph(dg.graph, keep)
    return is_isomorphic(direct, induced)


def _suite_token_deletion(rng: random.Random, sizes: Sequence[int], trials: int) -> SuiteResult:
    suite = SuiteResult("token_graph_deletion_commutes", 0)
    for n in sizes:
        for _ in range(trials):
            g = random_graph(rng, n)
            for k in (2, 3):
                if k > g.order:
                    continue
                max_del = g.order - k
                victims = set(rng.sample(range(1, g.order + 1), rng.randint(0, max_del)))
                suite.cases += 1
                if not check_token_deletion_commutes(g, victims, k):
                    suite.failures.append(f"n={n} k={k} victims={sorted(victims)}")
    return suite


def _suite_slice_dichotomy(m_range: Iterable[int]) -> SuiteResult:
    suite = SuiteResult("l_set_independence_dichotomy", 0)
    for m in m_range:
        dg = pair_graph(cycle(m))
        for q in range(1, m + 1):
            suite.cases += 1
            actual = is_independent(dg.graph, indices_of(dg, witnesses.l_set(m, q).members))
            if actual != witnesses.l_is_independent_expected(m, q):
                suite.failures.append(f"m={m} q={q}")
    return suite


def _suite_linking_profile(m_range: Iterable[int]) -> SuiteResult:
    suite = SuiteResult("l_set_linking_profile_exact", 0)
    for m in m_range:
        suite.cases += 1
        if witnesses.linking_profile(m) != witnesses.predicted_linking_profile(m):
            suite.failures.append(f"m={m}")
    return suite


def _suite_corner_avoidance(n_values: Iterable[int]) -> SuiteResult:
    suite = SuiteResult("alpha_unchanged_avoiding_corner_token", 0)
    for n in n_values:
        dg = pair_graph(cycle(n))
        corner = index_of(dg, multiset_token(1, n))
        suite.cases += 1
        if alpha_avoiding(dg.graph, corner).alpha != formulas.pair_cycle(n):
            suite.failures.append(f"n={n}")
    return suite


def _suite_dv_slice_deletion(m_range: Iterable[int]) -> SuiteResult:
    suite = SuiteResult("dv_path_token_slice_deletion_alpha", 0)
    for m in m_range:
        dg = double_vertex(path(m))
        expect = (m - 1) ** 2 // 4
        for i in range(1, m + 1):
            suite.cases += 1
            if alpha_after_deleting_tokens(dg, witnesses.r_set_dv(m, i).members) != expect:
                suite.failures.append(f"m={m} i={i}")
    return suite


def _suite_dv_double_deletion(m_range: Iterable[int]) -> SuiteResult:
    suite = SuiteResult("dv_path_nonconsecutive_double_deletion_strict", 0)
    for m in m_range:
        dg = double_vertex(path(m))
        expect = (m - 1) ** 2 // 4
        for i in range(1, m + 1):
            for j in range(i + 2, m + 1):
                tokens = witnesses.r_set_dv(m, i).members + witnesses.r_set_dv(m, j).members
                suite.cases += 1
                if alpha_after_deleting_tokens(dg, set(tokens)) >= expect:
                    suite.failures.append(f"m={m} S=({i},{j})")
    return suite


def _suite_pair_slice_deletion(m_range: Iterable[int]) -> SuiteResult:
    suite = SuiteResult("pair_path_token_slice_deletion_bound", 0)
    for m in m_range:
        dg = pair_graph(path(m))
        bound = m * m // 4 + 1
        for i in range(1, m + 1):
            suite.cases += 1
            if alpha_after_deleting_tokens(dg, witnesses.r_set_pair(m, i).members) > bound:
                suite.failures.append(f"m={m} i={i}")
    return suite


def run_property_suites(seed: int = 0, sizes: Sequence[int] = (5, 6, 7),
                        trials: int = 5) -> list[SuiteResult]:
    """Run every property suite with reproducible randomness."""
    sizes = tuple(sizes)
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if any(n < 2 for n in sizes):
        raise ValueError("sizes must be >= 2 (token graphs need two base vertices)")
    if any(n > 16 for n in sizes):
        raise ValueError("sizes above 16 are not supported by the randomized suites")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    return [
        _suite_monotonicity(rng, sizes, trials),
        _suite_component_decomposition(rng, sizes, max(1, trials // 2)),
        _suite_token_deletion(rng, sizes, trials),
        _suite_slice_dichotomy(range(3, 13)),
        _suite_linking_profile(range(4, 13)),
        _suite_corner_avoidance((5, 7, 9, 11)),
        _suite_dv_slice_deletion(range(4, 9)),
        _suite_dv_double_deletion(range(4, 9)),
        _suite_pair_slice_deletion(range(4, 9)),
    ]


def suites_report(results: Sequence[SuiteResult]) -> str:
    lines = []
    for s in results:
        verdict = "ok" if s.ok else f"FAIL ({len(s.failures)} failures)"
        lines.append(f"suite {s.name}: {s.cases} cases, {verdict}")
        for failure in s.failures[:10]:
            lines.append(f"  failed: {failure}")
    total = sum(s.cases for s in results)
    bad = sum(len(s.failures) for s in results)
    lines.append(
        f"{len(results)} suites, {total} cases, "
        + ("all passed" if bad == 0 else f"{bad} FAILURES")
    )
    return "\n".join(lines) + "\n"
