"""Exact integer/rational arithmetic: polynomials, rational series over
powers of (1 - x), Hadamard products, interpolation and determinants.

Nothing in here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


class Polynomial:
    """Dense univariate polynomial, coefficient index = exponent.

    Coefficients are ints or Fractions; trailing zeros are stripped, so the
    zero polynomial has no terms and degree -1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        terms = [Fraction(t) if isinstance(t, float) else t for t in terms]
        while terms and terms[-1] == 0:
            terms.pop()
        # Fractions with denominator 1 are kept as ints for clean printing.
        self.terms = tuple(
            int(t) if isinstance(t, Fraction) and t.denominator == 1 else t
            for t in terms
        )

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "Polynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, i: int):
        if 0 <= i < len(self.terms):
            return self.terms[i]
        return 0

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (list, tuple)):
            return self.terms == Polynomial(other).terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial([other]).terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"Polynomial({list(self.terms)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, c in enumerate(self.terms):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.terms), len(other.terms))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.terms)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.terms or not other.terms:
            return Polynomial()
        out = [0] * (len(self.terms) + len(other.terms) - 1)
        for i, a in enumerate(self.terms):
            if a == 0:
                continue
            for j, b in enumerate(other.terms):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.terms):
            acc = acc * x + c
        return acc

    def truncate(self, degree: int) -> "Polynomial":
        return Polynomial(self.terms[: degree + 1])

    def divmod_one_minus_x(self) -> tuple["Polynomial", int]:
        """Synthetic division by (1 - x): returns (quotient, remainder)."""
        if not self.terms:
            return Polynomial(), 0
        # Horner division by (x - 1), then flip the sign of the quotient.
        d = len(self.terms) - 1
        q = [0] * d
        acc = 0
        for i in range(d, 0, -1):
            acc += self.terms[i]
            q[i - 1] = -acc
        return Polynomial(q), acc + self.terms[0]


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (list, tuple)):
        return Polynomial(x)
    return Polynomial([x])


def one_minus_x_power(e: int) -> Polynomial:
    return Polynomial((-1) ** i * comb(e, i) for i in range(e + 1))


@dataclass(frozen=True, eq=False)
class EhrSeries:
    """The rational generating function hstar(x) / (1 - x)**denom_exp.

    Equality is equality as power series, i.e. after cancelling common
    (1 - x) factors.
    """

    hstar: Polynomial
    denom_exp: int

    def __post_init__(self):
        if not isinstance(self.hstar, Polynomial):
            object.__setattr__(self, "hstar", Polynomial(self.hstar))
        if self.denom_exp < 0:
            raise ValueError("denominator exponent must be >= 0")

    @classmethod
    def of(cls, hstar: Sequence[int], denom_exp: int) -> "EhrSeries":
        return cls(Polynomial(hstar), denom_exp)

    def reduced(self) -> "EhrSeries":
        h, e = self.hstar, self.denom_exp
        if not h.terms:
            return EhrSeries(Polynomial(), 0)
        while e > 0:
            q, r = h.divmod_one_minus_x()
            if r != 0:
                break
            h, e = q, e - 1
        return EhrSeries(h, e)

    def __eq__(self, other):
        if not isinstance(other, EhrSeries):
            return NotImplemented
        # cross-multiply to a common denominator
        e = max(self.denom_exp, other.denom_exp)
        lhs = self.hstar * one_minus_x_power(e - self.denom_exp)
        rhs = other.hstar * one_minus_x_power(e - other.denom_exp)
        return lhs == rhs

    def __hash__(self):
        r = self.reduced()
        return hash((r.hstar, r.denom_exp))

    def __repr__(self):
        return f"EhrSeries(hstar={list(self.hstar.terms)}, denom_exp={self.denom_exp})"

    def __str__(self):
        return f"({self.hstar}) / (1 - x)^{self.denom_exp}"

    def coefficient(self, n: int) -> int:
        return series_coefficient(self, n)

    def coefficients(self, count: int) -> list:
        return [series_coefficient(self, n) for n in range(count)]

    def is_proper(self) -> bool:
        return self.hstar.degree < self.denom_exp


def series_coefficient(a: EhrSeries, n: int):
    """[x^n] of hstar(x)/(1-x)^e."""
    if n < 0:
        return 0
    e = a.denom_exp
    if e == 0:
        return a.hstar[n]
    total = 0
    for i, h in enumerate(a.hstar.terms):
        if i > n:
            break
        if h:
            total += h * comb(n - i + e - 1, e - 1)
    return total


def series_mul(a: EhrSeries, b: EhrSeries, shift: int = 0) -> EhrSeries:
    """Product of two series times (1 - x)**shift, cancelled to lowest terms."""
    if shift < 0 or shift > a.denom_exp + b.denom_exp:
        raise ValueError(
            f"shift {shift} out of range 0..{a.denom_exp + b.denom_exp}"
        )
    return EhrSeries(a.hstar * b.hstar, a.denom_exp + b.denom_exp - shift).reduced()


def series_hadamard(a: EhrSeries, b: EhrSeries) -> EhrSeries:
    """Series whose n-th coefficient is a_n * b_n."""
    if a.denom_exp == 0 or b.denom_exp == 0:
        # one side is a polynomial, so is the product
        top = max(a.hstar.degree, b.hstar.degree, 0)
        return EhrSeries(
            Polynomial(series_coefficient(a, n) * series_coefficient(b, n)
                       for n in range(top + 1)),
            0,
        )
    d = (a.denom_exp - 1) + (b.denom_exp - 1)
    # Coefficients agree with a degree-d polynomial in n once past the
    # improper part of either input.
    excess = max(0, a.hstar.degree - a.denom_exp + 1, b.hstar.degree - b.denom_exp + 1)
    top = d + excess
    head = Polynomial(series_coefficient(a, n) * series_coefficient(b, n)
                      for n in range(top + 1))
    numerator = (head * one_minus_x_power(d + 1)).truncate(top)
    return EhrSeries(numerator, d + 1).reduced()


def poly_interpolate(points: Sequence[tuple[int, int]], degree: int) -> Polynomial:
    """Unique polynomial of degree <= ``degree`` through the points, exactly."""
    if len(points) != degree + 1:
        raise ValueError(f"need exactly {degree + 1} points, got {len(points)}")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    # Newton divided differences
    coef = [Fraction(y) for _, y in points]
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = Polynomial([coef[-1]]) if m else Polynomial()
    for i in range(m - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + coef[i]
    return result


def int_matrix_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination.

    The empty matrix has determinant 1.
    """
    n = len(m)
    rows = [list(r) for r in m]
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def series_expand(a: EhrSeries, terms: int) -> list:
    return [series_coefficient(a, n) for n in range(terms)]


def _truncated_mul(a: list, b: list, terms: int) -> list:
    out = [0] * terms
    for i, x in enumerate(a[:terms]):
        if x == 0:
            continue
        for j in range(min(len(b), terms - i)):
            out[i + j] += x * b[j]
    return out


def riordan_triangle(g: EhrSeries, f: EhrSeries, rows: int) -> list[list[int]]:
    """Rows 0..rows-1 of the Riordan array (g, f): entry (r, c) = [x^r] g f^c."""
    if series_coefficient(f, 0) != 0:
        raise ValueError("f must have zero constant term")
    gs = series_expand(g, rows)
    fs = series_expand(f, rows)
    triangle = [[0] * (r + 1) for r in range(rows)]
    column = gs
    for c in range(rows):
        for r in range(c, rows):
            triangle[r][c] = column[r]
        column = _truncated_mul(column, fs, rows)
    return triangle
