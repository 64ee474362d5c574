"""The dual evaluation code C(D, G)* given by its parity-check matrix.

Rows of the parity-check matrix are the basis functions of L(G), columns the
points of D; a vector c is a codeword iff H c = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .curve import HermitianCurve, RationalPointSet, enumerate_affine_points
from .field import field_tables, power_table
from .funcspace import MonomialBasis, lg_basis, max_included_degree, is_corner_space
from .geometry import ProjectivePoint, UnsupportedPoint
from .gflinalg import GFMatrix, mat_vec, rank


@dataclass(frozen=True)
class CodeSpec:
    q: int
    rho: int
    D: RationalPointSet
    basis: MonomialBasis

    @property
    def n(self) -> int:
        return len(self.D)

    @property
    def field(self):
        return self.D.curve.field


@dataclass(frozen=True, eq=False)
class Codeword:
    components: np.ndarray

    @property
    def weight(self) -> int:
        return weight(self.components)

    @property
    def support(self) -> list[int]:
        return support(self.components)


def hermitian_code(q: int, rho: int) -> CodeSpec:
    curve = HermitianCurve.over(q)
    return CodeSpec(q, rho, _points(curve), lg_basis(q, rho))


@lru_cache(maxsize=None)
def _points(curve: HermitianCurve) -> RationalPointSet:
    return enumerate_affine_points(curve)


def _evaluate(field, coords: np.ndarray, basis: MonomialBasis) -> np.ndarray:
    T = field_tables(field)
    top = max((max(m.exponents) for m in basis), default=0)
    pw = power_table(field, top)
    out = np.ones((len(basis), coords.shape[0]), dtype=np.int64)
    for row, mono in enumerate(basis):
        for var, e in enumerate(mono.exponents):
            if e:
                out[row] = T.mul[out[row], pw[coords[:, var], e]]
    return out


def parity_check_matrix(spec: CodeSpec) -> GFMatrix:
    """Entry (f, j) = f(P_j); rows in basis order, columns in D order."""
    coords = np.array([(p.x.idx, p.y.idx) for p in spec.D], dtype=np.int64)
    return GFMatrix(spec.field, _evaluate(spec.field, coords, spec.basis))


def generic_code(points: Sequence[ProjectivePoint], basis: MonomialBasis) -> GFMatrix:
    """Evaluation matrix for arbitrary points of P^r in the chart x_r != 0."""
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    r = points[0].r
    if basis.nvars and basis.nvars != r:
        raise ValueError(f"basis has {basis.nvars} variables, points live in P^{r}")
    for p in points:
        if p.idx[-1] == 0:
            raise UnsupportedPoint(f"{p} is outside the affine chart")
    coords = np.array([p.affine() for p in points], dtype=np.int64)
    return GFMatrix(points[0].field, _evaluate(points[0].field, coords, basis))


def is_codeword(H: GFMatrix, c) -> bool:
    c = np.asarray(c, dtype=np.int64)
    if c.shape != (H.cols,):
        raise ValueError(f"vector of length {c.size} for a code of length {H.cols}")
    return not mat_vec(H, c).any()


def dual_dimension(spec: CodeSpec) -> int:
    return spec.n - rank(parity_check_matrix(spec))


def weight(c) -> int:
    return int(np.count_nonzero(np.asarray(c)))


def support(c) -> list[int]:
    return [int(i) for i in np.flatnonzero(np.asarray(c))]


def code_params(q: int, rho: int) -> dict:
    spec = hermitian_code(q, rho)
    corner, _ = is_corner_space(q, rho)
    return {
        "corner": corner,
        "k": dual_dimension(spec),
        "m": max_included_degree(q, rho),
        "n": spec.n,
        "q": q,
        "rho": rho,
    }
