"""Closed-form evaluations of Ehrhart data for the poset families studied:
multiset sandwiches, Ferrers posets (determinants, Schur specializations,
box products), ladders and incomplete ladders, and a few named examples.

Every big-rational product is checked for integrality before it is
returned; a fractional result means a bug, so it raises.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .exact import EhrSeries, Polynomial, binom, int_matrix_det, series_coefficient
from .oracles import multiset_descents_enumerate, standard_tableaux, syt_descents
from .poset import Partition


class InvariantViolation(ArithmeticError):
    """Two routes that must agree did not, or a product was not integral."""


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InvariantViolation(f"{what} evaluated to non-integer {x}")
    return int(x)


def _shape(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


# -- multiset descents ------------------------------------------------------


def multiset_descent_formula(mults: Sequence[int]) -> Polynomial:
    """Alternating-sum form of the descent polynomial of a multiset."""
    N = sum(mults)
    coeffs = []
    for i in range(N):
        coeffs.append(sum(
            (-1) ** j * comb(N + 1, j) * prod(comb(p + i - j, p) for p in mults)
            for j in range(i + 1)
        ))
    return Polynomial(coeffs)


def multiset_descent_poly(mults: Sequence[int], method: str = "both") -> Polynomial:
    """Generating polynomial of words on {1^p1, ..., r^pr} by descents.

    ``method`` is "formula", "enumerate" or "both"; with "both" the two
    routes are compared and a disagreement raises.
    """
    mults = tuple(mults)
    if not mults or any(p < 1 for p in mults):
        raise ValueError("multiplicities must be a non-empty list of positive integers")
    if method == "formula":
        return multiset_descent_formula(mults)
    enumerated = Polynomial(multiset_descents_enumerate(mults))
    if method == "enumerate":
        return enumerated
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    formula = multiset_descent_formula(mults)
    if formula != enumerated:
        raise InvariantViolation(f"descent polynomial mismatch for {mults}: {formula} vs {enumerated}")
    return formula


def sandwich_series(mults: Sequence[int], topped: bool = True, bottom: int = 1) -> EhrSeries:
    """Series of I_bottom + (I_p1 + ... + I_pr) [+ I_1 on top] under ordinal sum."""
    if bottom < 1:
        raise ValueError("bottom chain must have at least one element")
    N = sum(mults)
    numerator = multiset_descent_poly(mults, method="formula")
    return EhrSeries(numerator, N + bottom + 1 + (1 if topped else 0))


# -- Ferrers posets: determinants -------------------------------------------


def ferrers_det_forms(lam, n: int) -> tuple[int, int, int]:
    """The three determinant evaluations of ehr(O(P_lam), n)."""
    lam = _shape(lam)
    t = lam.length
    rng = range(1, t + 1)
    first = int_matrix_det([[binom(n + i + lam[t - j] - 1, n + i - j) for j in rng] for i in rng])
    second = int_matrix_det([[binom(n + lam[t - j], n + i - j) for j in rng] for i in rng])
    third = int_matrix_det([[binom(n + lam[i - 1], n + i - j) for j in rng] for i in rng])
    return first, second, third


def ferrers_det(lam, n: int) -> int:
    forms = ferrers_det_forms(lam, n)
    if len(set(forms)) != 1:
        raise InvariantViolation(f"determinant forms disagree for {lam}, n={n}: {forms}")
    return forms[0]


# -- Schur functions at 1^n -------------------------------------------------


def schur_principal(lam, n: int) -> int:
    """s_lam(1^n) by the hook-content product; 0 when n < length(lam)."""
    lam = _shape(lam)
    if n < lam.length:
        return 0
    value = Fraction(1)
    for i, j in lam.cells():
        value *= Fraction(n + lam.content(i, j), lam.hook(i, j))
    return _integral(value, f"s_{lam}(1^{n})")


def complete_homogeneous(k: int, n: int) -> int:
    """h_k(1^n)."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    return binom(n + k - 1, k)


def jacobi_trudi(lam, n: int) -> int:
    lam = _shape(lam)
    t = lam.length
    return int_matrix_det(
        [[complete_homogeneous(lam[i] + j - i, n) for j in range(t)] for i in range(t)]
    )


def shifted_hook_content(lam, n: int) -> int:
    """ehr(O(P_lam), n) as s_lam(1^(n + length)); rectangles only.

    The row-shift bijection behind this identity fails for other shapes
    (lam = (2,1), n = 1 gives 8 tableaux but only 5 plane partitions).
    """
    lam = _shape(lam)
    if not lam.is_rectangle():
        raise ValueError(f"shifted hook-content formula needs a rectangular shape, got {lam}")
    return schur_principal(lam, n + lam.length)


def rect_hook_content(t: int, k: int, n: int) -> int:
    return shifted_hook_content((k,) * t, n)


def macmahon_box(t: int, k: int, n: int) -> int:
    value = Fraction(1)
    for i in range(1, t + 1):
        for j in range(1, k + 1):
            value *= Fraction(i + j + n - 1, i + j - 1)
    return _integral(value, f"box({t},{k},{n})")


def rect_product_1409(t: int, k: int, n: int) -> int:
    """Product over i < k of C(n+t+k-1, n+i) * i! / (n+t+k-i-1)^(k-i-1)."""
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(comb(n + t + k - 1, n + i) * factorial(i), (n + t + k - i - 1) ** (k - i - 1))
    return _integral(value, f"rect_product({t},{k},{n})")


def syt_descent_count(lam, n: int, max_cells: int = 8) -> int:
    """Sum over SYT T of shape lam of C(n - d(T) + m - 1, m), m = |lam|."""
    lam = _shape(lam)
    m = lam.size
    if m > max_cells:
        raise ValueError(f"SYT enumeration capped at {max_cells} cells")
    if m == 0:
        return 1
    return sum(binom(n - syt_descents(T) + m - 1, m) for T in standard_tableaux(lam))


def hexagon_tilings(k: int, n: int) -> int:
    """Rhombus tilings of the <k, n, k> hexagon, as a product over i <= n."""
    value = Fraction(1)
    for i in range(1, n + 1):
        value *= Fraction(prod(i + s for s in range(k, 2 * k)), prod(i + j for j in range(k)))
    return _integral(value, f"hexagon({k},{n})")


# -- staircases and Catalan Hankel determinants -----------------------------


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def catalan_hankel(k: int, n: int) -> int:
    """det_{0<=i,j<n} C_{i+j+k+1}; the empty determinant is 1."""
    if k < 1 or n < 0:
        raise ValueError("catalan_hankel needs k >= 1, n >= 0")
    return int_matrix_det([[catalan(i + j + k + 1) for j in range(n)] for i in range(n)])


def staircase_partition(k: int, d: int, t: int) -> Partition:
    parts = [k - i * d for i in range(1, t + 1)]
    if t < 1 or parts[-1] < 1:
        raise ValueError(f"(k - d, ..., k - td) with k={k}, d={d}, t={t} is not a partition")
    return Partition(parts)


def staircase_product(k: int, d: int, t: int, n: int) -> int:
    """ehr(O(P_lam), n) for lam = (k-d, k-2d, ..., k-td) as a content product.

    A cell u = (i, j) in row i contributes (n + t + c)/(t + c) when
    t + c <= lam_i, and ((d+1)n + t + c)/(t + c) otherwise, with c = j - i.
    """
    lam = staircase_partition(k, d, t)
    value = Fraction(1)
    for i, j in lam.cells():
        c = j - i
        top = n + t + c if t + c <= lam[i - 1] else (d + 1) * n + t + c
        value *= Fraction(top, t + c)
    return _integral(value, f"staircase({k},{d},{t},{n})")


def staircase_det(k: int, d: int, t: int, n: int) -> int:
    rng = range(1, t + 1)
    staircase_partition(k, d, t)
    return int_matrix_det([[binom(n + k - i * d, n + i - j) for j in rng] for i in rng])


def cigler_product(k: int, n: int) -> int:
    """ehr(O(P_(k,k-1,...,1)), n) in product form; empty products are 1."""
    value = Fraction(prod(n + t for t in range(1, k + 1)))
    for s in range(1, k):
        value *= Fraction(factorial(s), factorial(2 * s + 1))
    for j in range(k - 1):
        for i in range(3 + 2 * j, k + j + 2):
            value *= 2 * n + i
    return _integral(value, f"cigler({k},{n})")


# -- ladders ----------------------------------------------------------------


def narayana_hstar(k: int) -> Polynomial:
    """h* of the ladder P_(k,k): Narayana numbers C(k-1,i-1)C(k,i-1)/i."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Polynomial(comb(k - 1, i - 1) * comb(k, i - 1) // i for i in range(1, k + 1))


def narayana_series(k: int) -> EhrSeries:
    return EhrSeries(narayana_hstar(k), 2 * k + 1)


def ladder_ehr(k: int, n: int) -> int:
    """C(n+k+1, k+1) C(n+k+1, k) / (n+k+1)."""
    return _integral(Fraction(comb(n + k + 1, k + 1) * comb(n + k + 1, k), n + k + 1), "ladder")


def a140934_formula(n: int) -> int:
    """((n+12)/(12n+12)) C(n+11, 11)^2, the (11,11) ladder in closed form."""
    return _integral(Fraction(n + 12, 12 * n + 12) * comb(n + 11, 11) ** 2, "A140934")


def a140934_oblong(n: int) -> int:
    """prod_{i<=11} o(n+i)/o(i) with o(m) = m(m+1)."""
    value = Fraction(1)
    for i in range(1, 12):
        value *= Fraction((n + i) * (n + i + 1), i * (i + 1))
    return _integral(value, "A140934 oblong product")


# -- incomplete ladders: Stirling numbers -----------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """S(n, k) by S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def stirling_bar(k: int, n: int) -> int:
    return stirling2(n + k + 1, n + 1)


@lru_cache(maxsize=None)
def second_order_eulerian_row(k: int) -> tuple[int, ...]:
    """T(k, 1..k) via T(k,i) = i T(k-1,i) + (2k-i) T(k-1,i-1), T(1,1) = 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return (1,)
    prev = (0,) + second_order_eulerian_row(k - 1) + (0,)
    return tuple(i * prev[i] + (2 * k - i) * prev[i - 1] for i in range(1, k + 1))


def second_order_eulerian_hstar(k: int) -> Polynomial:
    return Polynomial(second_order_eulerian_row(k))


def gessel_identity_holds(k: int, terms: int = 12) -> bool:
    """sum_n S(n+k, n) x^n == sum_i T(k,i) x^i / (1-x)^(2k+1), first ``terms`` terms."""
    series = EhrSeries(Polynomial((0,) + second_order_eulerian_row(k)), 2 * k + 1)
    return all(series_coefficient(series, n) == stirling2(n + k, n) for n in range(terms))


# -- grids, products with V -------------------------------------------------


def grid_square_count(m: int, n: int) -> int:
    """ehr of the m-fold ordinal sum of I_1 + (I_1 + I_1), by the square recursion."""
    if m < 0:
        raise ValueError("m must be >= 0")
    row = [1] * (n + 1)
    for _ in range(m):
        row = [sum((c - j + 1) ** 2 * row[j] for j in range(c + 1)) for c in range(n + 1)]
    return row[n] if n >= 0 else 0


def mk_formula(k: int, n: int) -> int:
    """ehr(O(I_k x V), n) = (n+k+1)!(2n+2k+1)! / ((n+1)!(2n+1)!(k+1)!(2k+1)!)."""
    num = factorial(n + k + 1) * factorial(2 * n + 2 * k + 1)
    den = factorial(n + 1) * factorial(2 * n + 1) * factorial(k + 1) * factorial(2 * k + 1)
    return _integral(Fraction(num, den), f"M_{k}")


def v_otimes_chain_ehr(k: int, n: int) -> int:
    """ehr(O(V (x) I_k), n) = sum_i C(k,i)^2 C(3k+n-i, n-i)."""
    return sum(comb(k, i) ** 2 * binom(3 * k + n - i, n - i) for i in range(k + 1))
