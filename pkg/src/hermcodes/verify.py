"""Run the geometric statements about minimum-weight supports on concrete codes.

Every verdict is backed by an exhaustive census at the weight it talks about;
when the census would blow the budget the verdict is marked inconclusive
instead of being guessed.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property

from .census import CensusEntry, CensusReport, exhaustive_census
from .code import hermitian_code, parity_check_matrix
from .distance import DEFAULT_BUDGET, DistanceReport, brute_force_distance, default_wmax, reconcile
from .funcspace import includes_full_degree, is_corner_space, max_included_degree
from .geometry import (
    curve_pair_witness,
    max_collinear_subset,
    on_common_conic,
)
from .gflinalg import BudgetExceeded

log = logging.getLogger(__name__)


@dataclass
class TheoremVerdict:
    q: int
    rho: int
    m: int
    clause: str
    hypotheses_held: bool
    conclusion_held: bool | None = None
    inconclusive: bool = False
    counterexample: CensusEntry | None = None
    details: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.hypotheses_held and self.conclusion_held is False

    def to_json(self) -> dict:
        return {
            "clause": self.clause,
            "conclusion_held": self.conclusion_held,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "details": self.details,
            "hypotheses_held": self.hypotheses_held,
            "inconclusive": self.inconclusive,
            "m": self.m,
            "q": self.q,
            "rho": self.rho,
        }


class Instance:
    """One (q, rho) code with its distance and censuses computed on demand."""

    def __init__(self, q: int, rho: int, w_max: int | None = None, *, jobs: int = 1,
                 budget: int = DEFAULT_BUDGET):
        self.q, self.rho = q, rho
        self.m = max_included_degree(q, rho)
        self.w_max = default_wmax(q, rho) if w_max is None else w_max
        self.jobs = jobs
        self.budget = budget
        self.spec = hermitian_code(q, rho)
        self._census: dict[int, CensusReport] = {}

    @cached_property
    def H(self):
        return parity_check_matrix(self.spec)

    @cached_property
    def d(self) -> int | None:
        return brute_force_distance(self.H, self.w_max, jobs=self.jobs, budget=self.budget)

    @cached_property
    def points(self):
        return self.spec.D.projective()

    def census(self, w: int) -> CensusReport:
        if w not in self._census:
            self._census[w] = exhaustive_census(
                self.spec, w, w_min=w, m=self.m, jobs=self.jobs, budget=self.budget
            )
        return self._census[w]

    def support_points(self, entry: CensusEntry):
        return [self.points[i] for i in entry.support]


def _no_subset_on_conic(pts, size: int) -> bool:
    if size > len(pts):
        return True
    return not any(
        on_common_conic([pts[k] for k in sub])
        for sub in itertools.combinations(range(len(pts)), size)
    )


def _verdict_over_entries(inst, clause, m, applies, holds, details) -> TheoremVerdict:
    """Aggregate a per-codeword hypothesis/conclusion over the minimum weight."""
    v = TheoremVerdict(inst.q, inst.rho, m, clause, False, details=details)
    try:
        entries = inst.census(inst.d).entries
    except BudgetExceeded as exc:
        v.inconclusive = True
        v.details["budget_estimate"] = exc.estimate
        return v
    relevant = [e for e in entries if applies(e)]
    v.details["codewords_checked"] = len(relevant)
    if not relevant:
        return v
    v.hypotheses_held = True
    v.conclusion_held = True
    for e in relevant:
        if not holds(e):
            v.conclusion_held = False
            v.counterexample = e
            break
    return v


def _theorem_clauses(inst: Instance, m: int, label: str) -> list[TheoremVerdict]:
    """Clauses (i)-(iii) for a given m with L(G) containing all degree <= m polynomials."""
    d = inst.d
    base = {"d": d, "m": m}
    if d is None:
        return [
            TheoremVerdict(inst.q, inst.rho, m, f"{label}.{c}", False, details=dict(base))
            for c in ("i", "ii", "iii")
        ]

    def collinear_count(e):
        return e.support_report.max_collinear_subset_size

    out = []
    if d <= m + 2:
        v = _verdict_over_entries(
            inst, f"{label}.i", m, lambda e: True,
            lambda e: d == m + 2 and e.support_report.collinear, dict(base),
        )
        if v.hypotheses_held:
            v.details["all_m_linked"] = all(
                e.support_report.linked for e in inst.census(d).entries
            ) if m == inst.m else None
        out.append(v)
    else:
        out.append(TheoremVerdict(inst.q, inst.rho, m, f"{label}.i", False, details=dict(base)))

    if d <= 2 * m + 2:
        out.append(_verdict_over_entries(
            inst, f"{label}.ii", m,
            lambda e: collinear_count(e) < m + 2,
            lambda e: d == 2 * m + 2 and bool(e.support_report.on_conic),
            dict(base),
        ))
    else:
        out.append(TheoremVerdict(inst.q, inst.rho, m, f"{label}.ii", False, details=dict(base)))

    if m >= 1 and d <= 3 * m:
        def applies(e):
            return collinear_count(e) < m + 2 and _no_subset_on_conic(
                inst.support_points(e), 2 * m + 2
            )

        def holds(e):
            return d == 3 * m and curve_pair_witness(inst.support_points(e), m) is not None

        out.append(_verdict_over_entries(inst, f"{label}.iii", m, applies, holds, dict(base)))
    else:
        out.append(TheoremVerdict(inst.q, inst.rho, m, f"{label}.iii", False, details=dict(base)))
    return out


def check_theorem1(q: int, rho: int, w_max: int | None = None, *, jobs: int = 1,
                   budget: int = DEFAULT_BUDGET, instance: Instance | None = None
                   ) -> list[TheoremVerdict]:
    inst = instance or Instance(q, rho, w_max, jobs=jobs, budget=budget)
    return _theorem_clauses(inst, inst.m, "T1")


def _corollary_phase(inst: Instance, m: int, label: str) -> list[TheoremVerdict]:
    """Clauses of the threshold phases, phrased as disjunctions."""
    q, d = inst.q, inst.d
    base = {"d": d, "m": m}
    names = ("i", "ii", "iii")
    bounds = (m + 2, 2 * m + 2, 3 * m)
    if d is None:
        return [TheoremVerdict(q, inst.rho, m, f"{label}.{c}", False, details=dict(base))
                for c in names]

    def ncol(e):
        return e.support_report.max_collinear_subset_size

    conclusions = (
        lambda e: e.support_report.collinear,
        lambda e: ncol(e) >= m + 2 or bool(e.support_report.on_conic),
        lambda e: (
            ncol(e) >= m + 2
            or not _no_subset_on_conic(inst.support_points(e), 2 * m + 2)
            or curve_pair_witness(inst.support_points(e), m) is not None
        ),
    )
    out = []
    for name, bound, holds in zip(names, bounds, conclusions):
        clause = f"{label}.{name}"
        if d <= bound and not (name == "iii" and m < 1):
            out.append(_verdict_over_entries(inst, clause, m, lambda e: True, holds, dict(base)))
        else:
            out.append(TheoremVerdict(q, inst.rho, m, clause, False, details=dict(base)))
    return out


def check_corollary2(q: int, rho: int, w_max: int | None = None, *, jobs: int = 1,
                     budget: int = DEFAULT_BUDGET, instance: Instance | None = None
                     ) -> list[TheoremVerdict]:
    inst = instance or Instance(q, rho, w_max, jobs=jobs, budget=budget)
    out = []
    d = inst.d
    if 0 <= rho <= q * q - q - 2:
        details = {
            "d": d,
            "inclusion_d_minus_2": None if d is None else includes_full_degree(q, rho, max(d - 2, 0)),
        }
        if d is None:
            out.append(TheoremVerdict(q, rho, -1, "C2.phase1", False, details=details))
        else:
            out.append(_verdict_over_entries(
                inst, "C2.phase1", d - 2, lambda e: True,
                lambda e: e.support_report.collinear, details,
            ))
    if rho >= q * q - q - 2:
        out.extend(_corollary_phase(inst, q - 2, "C2.phase2"))
    if rho >= q * q - 1:
        out.extend(_corollary_phase(inst, q - 1, "C2.phase3"))
    return out


def check_proposition3(q: int, rho: int, a_max: int = 1, w_budget: int = DEFAULT_BUDGET, *,
                       jobs: int = 1, instance: Instance | None = None) -> list[TheoremVerdict]:
    """At least d-1 collinear points in every support of weight d+a.

    The stated range is 0 <= a <= d-3.  Larger a up to ``a_max`` are still
    computed but reported with hypotheses_held False.
    """
    inst = instance or Instance(q, rho, jobs=jobs, budget=w_budget)
    d = inst.d
    corner, cm = is_corner_space(q, rho)
    phase_ok = 0 <= rho <= q * q - q - 2
    out = []
    if d is None:
        return [TheoremVerdict(q, rho, -1, "P3", False,
                               details={"corner": corner, "corner_m": cm, "d": None})]
    corner_ok = corner and cm == d - 2
    for a in range(a_max + 1):
        details = {
            "a": a, "corner": corner, "corner_m": cm, "d": d,
            "phase_ok": phase_ok, "a_in_range": a <= d - 3,
        }
        v = TheoremVerdict(q, rho, d - 2, f"P3(a={a})", False, details=details)
        out.append(v)
        if not corner_ok:
            continue
        try:
            census = exhaustive_census(inst.spec, d + a, w_min=d + a, m=d - 2, jobs=jobs,
                                       budget=w_budget, report=False)
        except BudgetExceeded as exc:
            v.inconclusive = True
            details["budget_estimate"] = exc.estimate
            continue
        details["codewords_checked"] = len(census.entries)
        v.hypotheses_held = phase_ok and a <= d - 3
        held = True
        for e in census.entries:
            size, _ = max_collinear_subset(inst.support_points(e))
            if size < d - 1:
                held = False
                v.counterexample = e
                break
        v.conclusion_held = held
    return out


@dataclass
class SuiteReport:
    instances: list[dict]
    verdicts: list[TheoremVerdict]

    @property
    def counterexamples(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.failed]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "counterexamples": [v.to_json() for v in self.counterexamples],
            "instances": self.instances,
            "ok": self.ok,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def run_instance(q: int, rho: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                 a_max: int = 1) -> tuple[dict, list[TheoremVerdict]]:
    inst = Instance(q, rho, jobs=jobs, budget=budget)
    verdicts: list[TheoremVerdict] = []
    try:
        inst.d
    except BudgetExceeded as exc:
        info = {"q": q, "rho": rho, "m": inst.m, "inconclusive": True,
                "budget_estimate": exc.estimate}
        return info, [TheoremVerdict(q, rho, inst.m, "T1", False, inconclusive=True)]
    dist: DistanceReport = reconcile(q, rho, inst.w_max, mode="formula")
    dist = DistanceReport(q, rho, inst.w_max, inst.d, dist.d_formula, dist.formula_uv,
                          None if dist.d_formula is None else
                          (inst.d == dist.d_formula if inst.d is not None
                           else (False if dist.d_formula <= inst.w_max else None)))
    if dist.agrees is False:
        log.info("formula distance %s disagrees with oracle %s at q=%d rho=%d",
                 dist.d_formula, dist.d_bruteforce, q, rho)
    verdicts += check_theorem1(q, rho, instance=inst)
    verdicts += check_corollary2(q, rho, instance=inst)
    corner, _ = is_corner_space(q, rho)
    if corner:
        verdicts += check_proposition3(q, rho, a_max, budget, jobs=jobs, instance=inst)
    info = {
        "corner": corner,
        "d": inst.d,
        "distance": dist.to_json(),
        "m": inst.m,
        "q": q,
        "rho": rho,
        "w_max": inst.w_max,
    }
    return info, verdicts


def run_suite(q_list, rho_range=None, budget: int = DEFAULT_BUDGET, *, jobs: int = 1,
              a_max: int = 1) -> SuiteReport:
    """All verdicts over a grid; ``rho_range`` defaults to 0..2q^2 per q.

    ``rho_range`` may be an iterable or a callable q -> iterable.
    """
    instances, verdicts = [], []
    for q in sorted(q_list):
        if rho_range is None:
            rhos = range(2 * q * q + 1)
        elif callable(rho_range):
            rhos = rho_range(q)
        else:
            rhos = rho_range
        for rho in sorted(rhos):
            info, vs = run_instance(q, rho, budget=budget, jobs=jobs, a_max=a_max)
            instances.append(info)
            verdicts.extend(vs)
    verdicts.sort(key=lambda v: (v.q, v.rho, v.clause))
    return SuiteReport(instances, verdicts)
