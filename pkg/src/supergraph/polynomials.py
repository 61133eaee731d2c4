"""Exact integer univariate polynomials and exact characteristic polynomials.

Coefficients are arbitrary-precision Python ints stored in ascending degree
order, so every characteristic polynomial produced here is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParameter


class PolynomialZ:
    """Immutable integer-coefficient polynomial.

    ``coeffs`` is ascending: coeffs[i] is the coefficient of x**i. Trailing
    zeros are stripped; the zero polynomial has an empty coefficient tuple
    and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "PolynomialZ":
        return cls(())

    @classmethod
    def one(cls) -> "PolynomialZ":
        return cls((1,))

    @classmethod
    def x(cls) -> "PolynomialZ":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "PolynomialZ":
        if degree < 0:
            raise InvalidParameter("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[int, int]]) -> "PolynomialZ":
        """Monic polynomial with the given integer (root, multiplicity) pairs."""
        p = cls.one()
        for root, mult in roots:
            p = p * cls((-int(root), 1)) ** int(mult)
        return p

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialZ):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "PolynomialZ":
        return PolynomialZ(tuple(-c for c in self._coeffs))

    def __add__(self, other: "PolynomialZ") -> "PolynomialZ":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolynomialZ(out)

    def __sub__(self, other: "PolynomialZ") -> "PolynomialZ":
        return self + (-other)

    def __mul__(self, other) -> "PolynomialZ":
        if isinstance(other, int):
            return PolynomialZ(tuple(c * other for c in self._coeffs))
        if not isinstance(other, PolynomialZ):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return PolynomialZ.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return PolynomialZ(out)

    def __rmul__(self, other) -> "PolynomialZ":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "PolynomialZ":
        if exponent < 0:
            raise InvalidParameter("polynomial exponent must be nonnegative")
        result = PolynomialZ.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = 0 if isinstance(value, (int, Fraction)) else 0.0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def deflate(self, root: int) -> tuple["PolynomialZ", int]:
        """Synthetic division by (x - root): returns (quotient, remainder)."""
        if not self._coeffs:
            return PolynomialZ.zero(), 0
        out = []
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        return PolynomialZ(tuple(reversed(out))), rem

    def root_multiplicity(self, root: int) -> int:
        """Exact multiplicity of an integer root (0 if not a root)."""
        mult = 0
        p = self
        while p:
            q, rem = p.deflate(root)
            if rem != 0:
                break
            mult += 1
            p = q
        return mult

    def to_json_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "PolynomialZ":
        return cls(int(c) for c in data["coeffs"])

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolynomialZ({self._coeffs!r})"


def char_poly_integer(matrix: Sequence[Sequence[int]]) -> PolynomialZ:
    """Exact monic characteristic polynomial det(xI - M) of an integer matrix.

    Uses the fraction-free Faddeev-LeVerrier recursion; every division is an
    exact integer division, so the result is exact at any size.
    """
    rows = [[int(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidParameter("matrix must be square and nonempty")

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in rows]
    coeffs[n - 1] = -sum(mk[i][i] for i in range(n))
    for k in range(2, n + 1):
        # mk <- A @ (mk + c_{n-k+1} I)
        shifted = [row[:] for row in mk]
        ck = coeffs[n - k + 1]
        for i in range(n):
            shifted[i][i] += ck
        nxt = [[0] * n for _ in range(n)]
        for i in range(n):
            arow = rows[i]
            nrow = nxt[i]
            for t in range(n):
                a = arow[t]
                if a == 0:
                    continue
                srow = shifted[t]
                for j in range(n):
                    nrow[j] += a * srow[j]
        mk = nxt
        trace = sum(mk[i][i] for i in range(n))
        q, r = divmod(-trace, k)
        if r != 0:
            raise AssertionError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = q
    return PolynomialZ(coeffs)
