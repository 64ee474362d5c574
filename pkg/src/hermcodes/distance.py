"""Minimum distance of the dual Hermitian codes.

The exhaustive column-subset oracle is the ground truth.  The closed form in
``pellikaan_distance`` only covers the rho = 2q^2 - q - uq - v - 1 family and is
reported next to it, never instead of it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import hermitian_code, parity_check_matrix
from .funcspace import max_included_degree
from .gflinalg import GFMatrix, check_budget, dependent_column_subsets

DEFAULT_BUDGET = 10**9


def default_wmax(q: int, rho: int) -> int:
    return 3 * max_included_degree(q, rho) + 2


def brute_force_distance(
    H: GFMatrix, w_max: int, *, jobs: int = 1, budget: int | None = None
) -> int | None:
    """Smallest s <= w_max such that some s columns of H are dependent.

    Sizes are tried in increasing order and subsets lexicographically, each
    with its own rank test.  Returns None if every subset up to w_max is
    independent.
    """
    if w_max < 1:
        raise ValueError("w_max must be positive")
    w_max = min(w_max, H.cols)
    if budget is not None:
        check_budget(H.cols, range(1, w_max + 1), budget)
    for s in range(1, w_max + 1):
        if dependent_column_subsets(H, s, first_only=True, jobs=jobs).size:
            return s
    return None


def pellikaan_distance(q: int, rho: int) -> tuple[int, int, int] | None:
    """(d, u, v) when rho = 2q^2 - q - uq - v - 1 with 1 <= u, v <= q-1."""
    for u in range(1, q):
        for v in range(1, q):
            if rho == 2 * q * q - q - u * q - v - 1:
                d = (q - u) * q - v if u < v else (q - u) * q
                return d, u, v
    return None


@dataclass(frozen=True)
class DistanceReport:
    q: int
    rho: int
    search_cutoff: int
    d_bruteforce: int | None = None
    d_formula: int | None = None
    formula_uv: tuple[int, int] | None = None
    agrees: bool | None = None

    def to_json(self) -> dict:
        return {
            "agrees": self.agrees,
            "d_bruteforce": self.d_bruteforce,
            "d_formula": self.d_formula,
            "formula_uv": None if self.formula_uv is None else list(self.formula_uv),
            "q": self.q,
            "rho": self.rho,
            "search_cutoff": self.search_cutoff,
        }


def reconcile(
    q: int, rho: int, w_max: int | None = None, *, mode: str = "both", jobs: int = 1,
    budget: int | None = DEFAULT_BUDGET,
) -> DistanceReport:
    if mode not in ("brute", "formula", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if w_max is None:
        w_max = default_wmax(q, rho)
    d_brute = None
    if mode in ("brute", "both"):
        H = parity_check_matrix(hermitian_code(q, rho))
        d_brute = brute_force_distance(H, w_max, jobs=jobs, budget=budget)
    formula = pellikaan_distance(q, rho) if mode in ("formula", "both") else None
    agrees = None
    if mode == "both" and formula is not None and d_brute is not None:
        agrees = d_brute == formula[0]
    elif mode == "both" and formula is not None and formula[0] <= w_max:
        # the oracle found nothing up to w_max, so a formula value inside the
        # searched range is refuted
        agrees = False
    return DistanceReport(
        q=q,
        rho=rho,
        search_cutoff=w_max,
        d_bruteforce=d_brute,
        d_formula=None if formula is None else formula[0],
        formula_uv=None if formula is None else formula[1:],
        agrees=agrees,
    )
