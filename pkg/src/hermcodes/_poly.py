"""Sparse polynomials over a tabled finite field, just enough for coprimality.

A polynomial is a dict mapping exponent tuples to nonzero element indices.
"""

from __future__ import annotations

from .field import FieldSpec, field_tables


class PolyRing:
    def __init__(self, field: FieldSpec):
        self.field = field
        T = field_tables(field)
        self.add_t = T.add.tolist()
        self.mul_t = T.mul.tolist()
        self.neg_t = T.neg.tolist()
        self.inv_t = T.inv.tolist()

    def add(self, f: dict, g: dict) -> dict:
        out = dict(f)
        for e, c in g.items():
            v = self.add_t[out.get(e, 0)][c]
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return out

    def neg(self, f: dict) -> dict:
        return {e: self.neg_t[c] for e, c in f.items()}

    def sub(self, f: dict, g: dict) -> dict:
        return self.add(f, self.neg(g))

    def mul(self, f: dict, g: dict) -> dict:
        out: dict = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = self.add_t[out.get(e, 0)][self.mul_t[c1][c2]]
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return out

    def exact_div(self, f: dict, g: dict) -> dict:
        """f / g, assuming g divides f (lex leading-term division)."""
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(g)
        lead_inv = self.inv_t[g[lead]]
        rem = dict(f)
        quot: dict = {}
        while rem:
            top = max(rem)
            shift = tuple(a - b for a, b in zip(top, lead))
            if min(shift) < 0:
                raise ArithmeticError("inexact polynomial division")
            c = self.mul_t[rem[top]][lead_inv]
            quot[shift] = c
            rem = self.sub(rem, self.mul({shift: c}, g))
        return quot

    def det(self, mat: list[list[dict]]) -> dict:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = len(mat)
        if n == 0:
            return {(0, 0): 1}
        a = [row[:] for row in mat]
        sign = 1
        prev: dict = {(0,) * self._nvars(a): 1}
        for k in range(n - 1):
            if not a[k][k]:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return {}
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = self.sub(self.mul(a[k][k], a[i][j]), self.mul(a[i][k], a[k][j]))
                    a[i][j] = self.exact_div(num, prev) if num else {}
            prev = a[k][k]
        out = a[n - 1][n - 1]
        return self.neg(out) if sign < 0 else out

    @staticmethod
    def _nvars(a) -> int:
        for row in a:
            for f in row:
                for e in f:
                    return len(e)
        return 2

    # univariate helpers: dense little-endian coefficient lists

    def _trim(self, f: list[int]) -> list[int]:
        while f and f[-1] == 0:
            f.pop()
        return f

    def uni_rem(self, f: list[int], g: list[int]) -> list[int]:
        f = self._trim(list(f))
        g = self._trim(list(g))
        inv_lead = self.inv_t[g[-1]]
        while len(f) >= len(g):
            c = self.mul_t[f[-1]][inv_lead]
            shift = len(f) - len(g)
            for i, gc in enumerate(g):
                f[shift + i] = self.add_t[f[shift + i]][self.neg_t[self.mul_t[c][gc]]]
            self._trim(f)
        return f

    def uni_gcd(self, f: list[int], g: list[int]) -> list[int]:
        f = self._trim(list(f))
        g = self._trim(list(g))
        while g:
            f, g = g, self.uni_rem(f, g)
        if not f:
            return f
        inv_lead = self.inv_t[f[-1]]
        return [self.mul_t[c][inv_lead] for c in f]


def binary_form_gcd_degree(ring: PolyRing, forms: list[dict], other: list[dict]) -> int:
    """Degree of gcd(gcd(forms), gcd(other)) for homogeneous binary forms.

    Forms are dicts on exponent pairs (a, b) meaning u^a w^b.  A form splits as
    w^k times a form not divisible by w; the rest is handled by dehomogenizing
    at w = 1 and taking univariate gcds.
    """

    def split(f: dict) -> tuple[int, list[int]]:
        k = min(b for _, b in f)
        deg = max(a for a, _ in f)
        uni = [0] * (deg + 1)
        for (a, _), c in f.items():
            uni[a] = c
        return k, uni

    def fold(fs: list[dict]) -> tuple[int, list[int]] | None:
        acc = None
        for f in fs:
            if not f:
                continue
            k, uni = split(f)
            if acc is None:
                acc = (k, ring.uni_gcd(uni, []))
            else:
                acc = (min(acc[0], k), ring.uni_gcd(acc[1], uni))
        return acc

    a, b = fold(forms), fold(other)
    if a is None or b is None:
        raise ValueError("content of the zero polynomial")
    return min(a[0], b[0]) + len(ring.uni_gcd(a[1], b[1])) - 1


def coefficients_in(f: dict, var: int) -> list[dict]:
    """Coefficients of f as a polynomial in variable ``var`` (index 0..2)."""
    deg = max((e[var] for e in f), default=0)
    out: list[dict] = [{} for _ in range(deg + 1)]
    for e, c in f.items():
        rest = tuple(x for k, x in enumerate(e) if k != var)
        out[e[var]][rest] = c
    return out


def resultant(ring: PolyRing, f: dict, g: dict, var: int) -> dict:
    """Res_var(f, g) via the Sylvester matrix, using actual degrees."""
    a = coefficients_in(f, var)
    b = coefficients_in(g, var)
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    if n == 0:
        return {(0, 0): 1}
    rows = []
    for i in range(db):
        row = [{} for _ in range(n)]
        for k in range(da + 1):
            row[i + k] = a[da - k]
        rows.append(row)
    for i in range(da):
        row = [{} for _ in range(n)]
        for k in range(db + 1):
            row[i + k] = b[db - k]
        rows.append(row)
    return ring.det(rows)


def coprime(ring: PolyRing, f: dict, g: dict) -> bool:
    """Whether two nonzero ternary forms share no nonconstant factor.

    For some variable, the resultant must be nonzero (no common factor
    involving that variable) and the contents must be coprime (no common
    factor free of it).
    """
    for var in range(3):
        if not resultant(ring, f, g, var):
            continue
        if binary_form_gcd_degree(ring, coefficients_in(f, var), coefficients_in(g, var)) == 0:
            return True
    return False
