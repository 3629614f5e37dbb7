"""Combinatorial regularity classification and the verification harness.

``classify_bipartite`` sorts a connected bipartite graph into regularity 2
(complement chordal), regularity 3 (complement has an induced cycle but the
bipartite complement has none of length >= 6), or regularity >= 4, with
cycle certificates.  The surrounding harness checks each combinatorial claim
against exact homological computation, graph by graph, and ``sweep`` runs
the whole battery over every connected bipartite isomorphism class at desk
scale.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dataclass_field
from typing import Iterable, Optional

from .betti import (
    graph_regularity,
    hochster_betti,
    is_k_steps_linear,
    koszul_betti,
    regularity,
)
from .errors import VerificationFailure
from .even_connection import verify_colon_generators, verify_iterated_colon
from .graphs import (
    CycleWitness,
    Graph,
    complement,
    enumerate_connected_bipartite,
    find_induced_cycle_geq,
    bipartite_complement,
    is_bipartite,
    is_chordal,
)
from .graphio import encode_graph6
from .homology import FieldChoice
from .monomials import (
    Monomial,
    MonomialIdeal,
    SFoldProduct,
    add_monomial,
    colon_by_monomial,
    edge_ideal,
    power,
    squarefree_part_pairs,
)
from .parallel import pmap

DEFAULT_SEED = 1729


def has_linear_resolution(g: Graph) -> tuple[bool, Optional[CycleWitness]]:
    """Froberg criterion: linear resolution iff the complement is chordal.

    Returns the verdict and, when false, an induced cycle >= 4 of the
    complement as certificate.  Equivalent to reg(I(G)) = 2 for graphs with
    at least one edge.
    """
    if not g.edges:
        raise ValueError("edgeless graph: the zero ideal has no linear resolution")
    return is_chordal(complement(g))


@dataclass(frozen=True)
class RegClass:
    """Three-way combinatorial classification with its certificates."""

    tag: str  # "reg2" | "reg3" | "regGeq4"
    certificates: dict

    def __str__(self):
        return self.tag


def classify_bipartite(g: Graph) -> RegClass:
    """Combinatorial regularity class of a connected bipartite graph.

    reg2 iff the complement is chordal; otherwise reg3 iff the bipartite
    complement has no induced cycle of length >= 6; otherwise reg >= 4.
    """
    bip = is_bipartite(g)
    if bip is None:
        raise ValueError("graph is not bipartite")
    if not g.is_connected():
        raise ValueError("graph is not connected")
    if not g.edges:
        raise ValueError("graph has no edges")
    linear, comp_cycle = has_linear_resolution(g)
    if linear:
        return RegClass("reg2", {})
    certs = {"complement_cycle": comp_cycle}
    bc = bipartite_complement(g, bip)
    long_cycle = find_induced_cycle_geq(bc, 6)
    if long_cycle is None:
        return RegClass("reg3", certs)
    certs["bipartite_complement_cycle"] = long_cycle
    return RegClass("regGeq4", certs)


def check_colon_split_bound(
    ideal: MonomialIdeal,
    m: Monomial,
    field: FieldChoice = FieldChoice.GF2,
) -> dict:
    """reg(I) <= max(reg(I:m) + deg m, reg(I,m)); equality for a variable.

    Regularity of the unit ideal counts as 0 so degenerate colons do not
    crash the bound.  The equality claim applies when m is a variable that
    appears in some generator.
    """
    if ideal.is_zero():
        raise ValueError("zero ideal")
    if m.is_unit():
        raise ValueError("m must be a non-unit monomial")
    reg_i = regularity(ideal, field)
    reg_colon = regularity(colon_by_monomial(ideal, m), field)
    reg_plus = regularity(add_monomial(ideal, m), field)
    bound = max(reg_colon + m.degree, reg_plus)
    out = {
        "reg": reg_i,
        "reg_colon": reg_colon,
        "reg_plus": reg_plus,
        "bound": bound,
        "ok": reg_i <= bound,
    }
    variable_case = m.degree == 1 and any(
        g.exponents[m.exponents.index(1)] for g in ideal.gens
    )
    if variable_case:
        out["equality"] = reg_i in (reg_colon + 1, reg_plus)
        out["ok"] = out["ok"] and out["equality"]
    return out


def check_power_regularity_recursion(
    g: Graph,
    s: int,
    field: FieldChoice = FieldChoice.GF2,
    reg_next: Optional[int] = None,
    reg_current: Optional[int] = None,
) -> dict:
    """Upper bound for reg(I^{s+1}) from colon ideals by generators of I^s.

    The bound is max over minimal generators m of I^s of reg(I^{s+1} : m) + 2s,
    together with reg(I^s).
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    ideal = edge_ideal(g)
    base = power(ideal, s)
    target = power(ideal, s + 1)
    colon_regs = {}
    for m in base.gens:
        colon_regs[str(m)] = regularity(colon_by_monomial(target, m), field)
    if reg_current is None:
        reg_current = regularity(base, field)
    if reg_next is None:
        reg_next = regularity(target, field)
    bound = max(max(colon_regs.values()) + 2 * s, reg_current)
    return {
        "s": s,
        "reg_power": reg_next,
        "reg_base": reg_current,
        "colon_regs": colon_regs,
        "bound": bound,
        "ok": reg_next <= bound,
    }


def check_reg3_colon_bound(
    g: Graph,
    s_max: int = 2,
    field: FieldChoice = FieldChoice.GF2,
    samples: int = 200,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Colon ideals of a regularity-3 bipartite graph have regularity <= 3.

    Exhaustive over s-fold products for s <= 2, seeded random sampling
    beyond.  Also walks the linear-resolution shortcut: when the colon's
    graph has chordal complement its regularity must be exactly 2.
    """
    cls = classify_bipartite(g)
    if cls.tag != "reg3":
        raise ValueError(f"graph classifies as {cls.tag}, not reg3")
    ideal = edge_ideal(g)
    edges = sorted(g.edges)
    max_reg = 0
    checked = 0
    violations = []
    for s in range(1, s_max + 1):
        target = power(ideal, s + 1)
        if s <= 2:
            combos: Iterable = itertools.combinations_with_replacement(edges, s)
        else:
            rng = random.Random(seed)
            combos = (
                tuple(rng.choice(edges) for _ in range(s)) for _ in range(samples)
            )
        for combo in combos:
            product = SFoldProduct.of(g, combo)
            colon = colon_by_monomial(target, product.product)
            r = regularity(colon, field)
            checked += 1
            max_reg = max(max_reg, r)
            if r > 3:
                violations.append((combo, r))
            pairs, squares = squarefree_part_pairs(colon)
            if squares:
                violations.append((combo, "square generator on bipartite input"))
            colon_g = Graph(g.n, pairs)
            if has_linear_resolution(colon_g)[0] and r != 2:
                violations.append((combo, f"linear colon graph with reg {r}"))
    return {
        "checked": checked,
        "max_colon_regularity": max_reg,
        "attains_3": max_reg == 3,
        "violations": violations,
        "ok": not violations,
    }


def power_regularity_sequence(
    g: Graph,
    s_max: int,
    field: FieldChoice = FieldChoice.GF2,
    lattice_cap: int = 200_000,
) -> dict[int, int]:
    ideal = edge_ideal(g)
    return {
        s: regularity(power(ideal, s), field, lattice_cap)
        for s in range(1, s_max + 1)
    }


@dataclass(frozen=True)
class PowerRegularityResult:
    reg_class: str
    sequence: dict[int, int]
    expected: Optional[dict[int, int]]
    ok: bool


def verify_power_regularity(
    g: Graph,
    s_max: int,
    field: FieldChoice = FieldChoice.GF2,
) -> PowerRegularityResult:
    """Check reg(I^s) = 2s+1 (regularity-3 class) or 2s (regularity-2 class).

    The regularity >= 4 class carries no claim here and is rejected.
    """
    cls = classify_bipartite(g)
    if cls.tag == "regGeq4":
        raise ValueError("no power-regularity claim for the reg >= 4 class")
    seq = power_regularity_sequence(g, s_max, field)
    if cls.tag == "reg3":
        expected = {s: 2 * s + 1 for s in seq}
    else:
        expected = {s: 2 * s for s in seq}
    return PowerRegularityResult(cls.tag, seq, expected, seq == expected)


# ---------------------------------------------------------------------------
# the sweep

@dataclass
class VerificationReport:
    """Per-graph record of every verified claim."""

    graph6: str
    n: int
    edge_count: int
    reg_class: str
    certificates: dict
    homological_regularity: int
    reg_powers: dict[int, int]
    expected_powers: Optional[dict[int, int]]
    recursion_bound: dict
    colon_split_ok: bool
    linear_presentation_consistent: bool
    colon_reg_max: Optional[int]
    checks: dict[str, bool]
    passed: bool
    seed: int
    timings: dict[str, float] = dataclass_field(default_factory=dict)

    def to_json(self, include_timings: bool = False) -> dict:
        out = {
            "graph6": self.graph6,
            "n": self.n,
            "edges": self.edge_count,
            "class": self.reg_class,
            "certificates": {
                k: list(w.vertices) for k, w in self.certificates.items() if w
            },
            "regularity": self.homological_regularity,
            "reg_powers": {str(s): r for s, r in sorted(self.reg_powers.items())},
            "expected_powers": (
                {str(s): r for s, r in sorted(self.expected_powers.items())}
                if self.expected_powers is not None
                else None
            ),
            "recursion_bound": self.recursion_bound,
            "checks": dict(sorted(self.checks.items())),
            "passed": self.passed,
            "seed": self.seed,
        }
        if include_timings:
            out["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        return out


def graph_report(
    g: Graph,
    s_max: int,
    field: FieldChoice = FieldChoice.GF2,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Run every per-graph check of the harness on one connected bipartite graph."""
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    cls = classify_bipartite(g)
    timings["classify"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    hreg = graph_regularity(g, field)
    timings["hochster"] = time.perf_counter() - t0

    checks: dict[str, bool] = {}
    if cls.tag == "reg2":
        checks["class_matches_regularity"] = hreg == 2
    elif cls.tag == "reg3":
        checks["class_matches_regularity"] = hreg == 3
    else:
        checks["class_matches_regularity"] = hreg >= 4

    t0 = time.perf_counter()
    seq = power_regularity_sequence(g, s_max, field)
    timings["powers"] = time.perf_counter() - t0
    checks["power_floor"] = all(r >= 2 * s for s, r in seq.items())
    expected: Optional[dict[int, int]] = None
    if cls.tag == "reg2":
        expected = {s: 2 * s for s in seq}
    elif cls.tag == "reg3":
        expected = {s: 2 * s + 1 for s in seq}
    if expected is not None:
        checks["power_regularity"] = seq == expected

    t0 = time.perf_counter()
    ideal = edge_ideal(g)
    split_ok = True
    for v in range(g.n):
        if g.degree(v) == 0:
            continue
        res = check_colon_split_bound(ideal, Monomial.variable(v, g.n), field)
        split_ok = split_ok and res["ok"]
    checks["colon_split_variable_equality"] = split_ok
    timings["colon_split"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    recursion = check_power_regularity_recursion(
        g, 1, field,
        reg_next=seq.get(2), reg_current=seq.get(1),
    )
    checks["power_recursion_bound"] = recursion["ok"]
    timings["recursion"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    linear_presentation = is_k_steps_linear(ideal, 1, 1, field)
    no_c4_in_complement = find_induced_cycle_geq(complement(g), 4) is None
    lp_consistent = linear_presentation == no_c4_in_complement
    checks["linear_presentation_iff_no_c4_complement"] = lp_consistent
    timings["linear_presentation"] = time.perf_counter() - t0

    colon_reg_max: Optional[int] = None
    if cls.tag == "reg3":
        t0 = time.perf_counter()
        colon = check_reg3_colon_bound(g, 1, field, seed=seed)
        colon_reg_max = colon["max_colon_regularity"]
        checks["colon_regularity_cap"] = colon["ok"]
        timings["colon_cap"] = time.perf_counter() - t0

    report = VerificationReport(
        graph6=encode_graph6(g),
        n=g.n,
        edge_count=len(g.edges),
        reg_class=cls.tag,
        certificates=cls.certificates,
        homological_regularity=hreg,
        reg_powers=seq,
        expected_powers=expected,
        recursion_bound={
            "bound": recursion["bound"],
            "reg_power": recursion["reg_power"],
        },
        colon_split_ok=split_ok,
        linear_presentation_consistent=lp_consistent,
        colon_reg_max=colon_reg_max,
        checks=checks,
        passed=all(checks.values()),
        seed=seed,
    )
    report.timings = timings
    return report


def _report_worker(args) -> VerificationReport:
    from .graphio import decode_graph6

    g6, s_max, field_value, seed = args
    return graph_report(
        decode_graph6(g6), s_max, FieldChoice(field_value), seed
    )


def sweep_reports(
    graphs: Iterable[Graph],
    s_max: int,
    field: FieldChoice = FieldChoice.GF2,
    seed: int = DEFAULT_SEED,
    workers: Optional[int] = None,
) -> list[VerificationReport]:
    """Reports for an explicit graph list, in input order."""
    tasks = [(encode_graph6(g), s_max, field.value, seed) for g in graphs]
    reports = pmap(_report_worker, tasks, workers)
    for report in reports:
        if not report.checks["class_matches_regularity"]:
            from .graphio import decode_graph6

            g = decode_graph6(report.graph6)
            dump = {
                "graph6": report.graph6,
                "class": report.reg_class,
                "hochster": hochster_betti(g, field).to_json(),
                "koszul": koszul_betti(edge_ideal(g), field).to_json(),
            }
            raise VerificationFailure(
                "classification disagrees with homological regularity "
                f"on {report.graph6}: {dump}",
                report=report,
            )
    return reports


def sweep(
    n_max: int,
    s_max: int,
    field: FieldChoice = FieldChoice.GF2,
    seed: int = DEFAULT_SEED,
    workers: Optional[int] = None,
) -> Iterable[VerificationReport]:
    """Classify-and-verify every connected bipartite class with 2..n_max vertices.

    Reports stream out in canonical enumeration order; a disagreement between
    the combinatorial class and the computed regularity aborts the run.
    """
    if not 2 <= n_max <= 8:
        raise ValueError("sweep supports 2 <= n_max <= 8")
    for n in range(2, n_max + 1):
        graphs = list(enumerate_connected_bipartite(n))
        yield from sweep_reports(graphs, s_max, field, seed, workers)


# ---------------------------------------------------------------------------
# population surveys used by the acceptance battery

def _colon_survey_worker(args) -> dict:
    from .graphio import decode_graph6

    g6, s_list, extra_combos = args
    g = decode_graph6(g6)
    ideal = edge_ideal(g)
    edges = sorted(g.edges)
    checked = 0
    mismatches = []
    combos_by_s: dict[int, list] = {
        s: list(itertools.combinations_with_replacement(edges, s))
        for s in s_list
    }
    for combo in extra_combos:
        combos_by_s.setdefault(len(combo), []).append(tuple(combo))
    for s, combos in sorted(combos_by_s.items()):
        if not combos:
            continue
        target = power(ideal, s + 1)
        for combo in combos:
            product = SFoldProduct.of(g, combo)
            check = verify_colon_generators(g, product, target)
            checked += 1
            if not check.ok:
                mismatches.append((g6, combo, check.to_json()))
    return {"graph6": g6, "checked": checked, "mismatches": mismatches}


def colon_equivalence_survey(
    graphs: Iterable[Graph],
    s_exhaustive: int = 2,
    random_s3_samples: int = 0,
    seed: int = DEFAULT_SEED,
    workers: Optional[int] = None,
) -> dict:
    """Dual-oracle colon comparison over a graph population.

    Exhausts every s-fold product for s <= s_exhaustive on every graph with
    edges, then spreads ``random_s3_samples`` seeded 3-fold products across
    the population.
    """
    pool = [g for g in graphs if g.edges]
    extra: dict[int, list[tuple]] = {i: [] for i in range(len(pool))}
    if random_s3_samples:
        rng = random.Random(seed)
        for _ in range(random_s3_samples):
            gi = rng.randrange(len(pool))
            edges = sorted(pool[gi].edges)
            extra[gi].append(tuple(rng.choice(edges) for _ in range(3)))
    tasks = [
        (encode_graph6(g), list(range(1, s_exhaustive + 1)), extra[i])
        for i, g in enumerate(pool)
    ]
    results = pmap(_colon_survey_worker, tasks, workers)
    return {
        "graphs": len(results),
        "checked": sum(r["checked"] for r in results),
        "mismatches": [m for r in results for m in r["mismatches"]],
    }


def _iterated_colon_worker(args) -> dict:
    from .graphio import decode_graph6

    g6, s = args
    g = decode_graph6(g6)
    edges = sorted(g.edges)
    checked = 0
    failures = []
    for combo in itertools.combinations_with_replacement(edges, s):
        product = SFoldProduct.of(g, combo)
        for position in range(s):
            checked += 1
            if not verify_iterated_colon(g, product, position):
                failures.append((g6, combo, position))
    return {"graph6": g6, "checked": checked, "failures": failures}


def iterated_colon_survey(
    graphs: Iterable[Graph],
    s: int = 2,
    workers: Optional[int] = None,
) -> dict:
    """Exhaustive two-stage-colon identity check over bipartite graphs."""
    tasks = [(encode_graph6(g), s) for g in graphs if g.edges]
    results = pmap(_iterated_colon_worker, tasks, workers)
    return {
        "graphs": len(results),
        "checked": sum(r["checked"] for r in results),
        "failures": [f for r in results for f in r["failures"]],
    }


def summarize_reports(reports: list[VerificationReport]) -> dict:
    by_class: dict[str, int] = {}
    failures = []
    for r in reports:
        by_class[r.reg_class] = by_class.get(r.reg_class, 0) + 1
        if not r.passed:
            failures.append(r.graph6)
    return {
        "graphs": len(reports),
        "by_class": dict(sorted(by_class.items())),
        "failures": failures,
        "all_passed": not failures,
    }
