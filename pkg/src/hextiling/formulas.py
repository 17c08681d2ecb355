"""Closed-form counting formulas, all in exact rational arithmetic.

Contents: MacMahon's box-product for the total tiling count of a hexagon,
the fixed-axis-rhombus counts for both side parities, the proportion between
them, product formulas matching the two path-matrix determinants, special
values of the reduced determinant polynomial, the central-position sum with
its closed form and recurrence, hypergeometric re-expressions of the
proportion, and the arcsine limit (the one floating-point function here).

Counts that must be integers are computed over rationals and asserted
integral, so any transcription error in a formula surfaces immediately.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import (
    binomial,
    double_factorial,
    hypergeometric_sum,
    shifted_factorial,
)
from .hexagon import NormalizedParams
from .matrices import reduced_prefactor, row_scale_product

__all__ = [
    "arcsine_limit",
    "axis_sum",
    "central_axis_closed_form",
    "central_axis_sum",
    "fixed_count_even",
    "fixed_count_odd",
    "hyp_chain_check",
    "lower_weighted_closed_form",
    "macmahon_count",
    "proportion",
    "proportion_balanced_form",
    "proportion_series_form",
    "reduced_poly_value",
    "upper_count_closed_form",
]


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} came out non-integral: {value}")
    return value.numerator


def macmahon_count(a: int, b: int, c: int) -> int:
    """Number of rhombus tilings of the hexagon with sides a, b, c, a, b, c,
    i.e. plane partitions in an a x b x c box (MacMahon's product).

    Sides of length 0 give the empty product, count 1.
    """
    if min(a, b, c) < 0:
        raise ValueError("box dimensions must be nonnegative")
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return _as_integer(out, "MacMahon product")


def axis_sum(n: int, m: int, l: int) -> Fraction:
    """The alternating axis sum of length l.

    sum_{e=0}^{l-1} (-1)^e C(n,e) (n-2e) (1/2)_e / ((m+e)(m+n-e)(1/2-n)_e),
    exact.  m == 0 is rejected: the e = 0 term has a pole there.
    """
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= {n}, got l = {l}")
    if m < 1:
        raise ValueError("axis sum undefined for m = 0 (pole at e = 0)")
    total = Fraction(0)
    for e in range(l):
        term = Fraction((-1) ** e * binomial(n, e) * (n - 2 * e))
        term *= shifted_factorial(Fraction(1, 2), e)
        term /= (m + e) * (m + n - e)
        term /= shifted_factorial(Fraction(1, 2) - n, e)
        total += term
    return total


def _count_prefactor(n: int, m: int) -> Fraction:
    return Fraction(
        m * binomial(m + n, m) * binomial(m + n - 1, m),
        binomial(2 * m + 2 * n - 1, 2 * m),
    )


def proportion_nm(n: int, m: int, l: int) -> Fraction:
    """Proportion of tilings containing axis rhombus l, from (n, m) directly."""
    return _count_prefactor(n, m) * axis_sum(n, m, l)


def proportion(params: NormalizedParams, l: int) -> Fraction:
    """Proportion of all tilings that contain the l-th axis rhombus.

    Depends only on (n, m), so it is literally the same number for the even
    hexagon (n, 2m) and the odd hexagon (n+1, 2m-1).
    """
    return proportion_nm(params.n, params.m, l)


def fixed_count_even(n: int, m: int, l: int) -> int:
    """Tilings of the hexagon with sides (n, 2m) containing axis rhombus l."""
    count = proportion_nm(n, m, l) * macmahon_count(n, n, 2 * m)
    return _as_integer(count, "even fixed count")


def fixed_count_odd(n: int, m: int, l: int) -> int:
    """Tilings of the hexagon with sides (n+1, 2m-1) containing axis rhombus l."""
    count = proportion_nm(n, m, l) * macmahon_count(n + 1, n + 1, 2 * m - 1)
    return _as_integer(count, "odd fixed count")


def upper_count_closed_form(n: int, m: int) -> Fraction:
    """Product formula for the trimmed-upper-pentagon tiling count.

    prod_{i=1}^{n} (n+m-i+1)! (i-1)! (2m+i+1)_{i-1} / ((m+i-1)! (2n-2i+1)!)
    """
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= Fraction(
            math.factorial(n + m - i + 1) * math.factorial(i - 1)
        ) * shifted_factorial(2 * m + i + 1, i - 1)
        out /= math.factorial(m + i - 1) * math.factorial(2 * n - 2 * i + 1)
    return out


def _reduced_poly_closed_constant(n: int) -> Fraction:
    """2^((n-1)(n-2)/2) prod_j (2j-1)! / (n! prod_i (2i)_{2n-4i+1})."""
    out = Fraction(2) ** ((n - 1) * (n - 2) // 2)
    for j in range(1, n + 1):
        out *= math.factorial(2 * j - 1)
    out /= math.factorial(n)
    for i in range(1, n // 2 + 1):
        out /= shifted_factorial(2 * i, 2 * n - 4 * i + 1)
    return out


def lower_weighted_closed_form(n: int, m: int, l: int) -> Fraction:
    """Closed form for the weighted lower-half count (determinant identity).

    Row-scale product times the forced prefactor times the polynomial part,
    the latter written as a constant times (m)_{n+1} times the axis sum.
    """
    value = row_scale_product(n, m) * reduced_prefactor(m, n)
    value *= _reduced_poly_closed_constant(n)
    value *= shifted_factorial(m, n + 1)
    value *= axis_sum(n, m, l)
    return value


def reduced_poly_value(m_val: int, n: int, l: int) -> Fraction:
    """Special value of the reduced determinant polynomial at m_val in
    [-floor(n/2), 0].

    With lr = max(l, n+1-l) (the reflection-symmetric representative of l)
    and mu = -m_val: the value is 0 for mu >= n+1-lr, where the relevant
    block of the evaluated matrix degenerates; otherwise it is given by the
    factorial product below, read with mu as the nonnegative index.
    """
    if not 1 <= l <= n:
        raise ValueError("marked position out of range")
    if not -(n // 2) <= m_val <= 0:
        raise ValueError(f"m_val must lie in [{-(n // 2)}, 0], got {m_val}")
    lr = max(l, n + 1 - l)
    mu = -m_val
    if mu >= n + 1 - lr:
        return Fraction(0)

    sign = -1 if (mu * n + (mu * mu - mu) // 2) % 2 else 1
    value = sign * Fraction(2) ** ((mu * mu + mu) // 2 - n + 1)
    value *= shifted_factorial(mu, mu)
    for j in range(1, n - mu + 1):
        value *= math.factorial(2 * j - 1)
    for k in range(1, mu + 1):
        value *= Fraction(math.factorial(k - 1)) ** 2
        value *= math.factorial(n + k - 2 * mu - 1)
        value *= shifted_factorial(Fraction(mu - k + 1, 2), k - 1)
        value *= shifted_factorial(k - n, n - mu)
    for i in range(1, mu + 1):
        value /= math.factorial(n - mu - i) * math.factorial(mu - i)
    for i in range(mu + 1, n // 2 + 1):
        value /= shifted_factorial(i - mu, n - 2 * i + 1)
    for i in range(1, n // 2 + 1):
        value /= shifted_factorial(i - mu + Fraction(1, 2), n - 2 * i)
    return value


def central_axis_sum(n: int) -> Fraction:
    """The axis sum at the central specialization (2n-1, n, n)."""
    return axis_sum(2 * n - 1, n, n)


def central_axis_closed_form(n: int) -> Fraction:
    """Closed form 2^(n-1) n! (n-1)! (6n-3)!! / ((3n)! (4n-3)!!)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Fraction(
        2 ** (n - 1) * math.factorial(n) * math.factorial(n - 1)
        * double_factorial(6 * n - 3),
        math.factorial(3 * n) * double_factorial(4 * n - 3),
    )


def central_sum_recurrence_residue(n: int) -> Fraction:
    """Residue of the two-term recurrence satisfied by the central sum:
    2n(2n+1)(6n-1)(6n+1) S(n) - (3n+1)(3n+2)(4n-1)(4n+1) S(n+1); zero when
    the recurrence holds."""
    s_n = central_axis_sum(n)
    s_next = central_axis_sum(n + 1)
    lhs = 2 * n * (2 * n + 1) * (6 * n - 1) * (6 * n + 1) * s_n
    rhs = (3 * n + 1) * (3 * n + 2) * (4 * n - 1) * (4 * n + 1) * s_next
    return lhs - rhs


def proportion_series_form(n: int, m: int, l: int) -> Fraction:
    """The proportion as a five-parameter hypergeometric partial sum of
    length l.  Raises SingularParameterError where a lower parameter hits
    zero inside the range (even n with l >= n/2 + 2)."""
    pref = Fraction(math.factorial(2 * n - 1))
    pref *= shifted_factorial(m + 1, n - 1) ** 2
    pref /= Fraction(math.factorial(n - 1)) ** 2
    pref /= shifted_factorial(2 * m + 1, 2 * n - 1)
    series = hypergeometric_sum(
        [-n, 1 - Fraction(n, 2), m, -m - n, Fraction(1, 2)],
        [-Fraction(n, 2), 1 - m - n, 1 + m, Fraction(1, 2) - n],
        1,
        l,
    )
    return pref * series


def proportion_balanced_form(n: int, m: int, l: int) -> Fraction:
    """The proportion as a balanced terminating 4F3-style sum of length l."""
    pref = Fraction(
        math.factorial(2 * l)
        * math.factorial(2 * m)
        * math.factorial(m + n - 1)
        * math.factorial(m + n)
        * math.factorial(2 * n - 2 * l + 2),
        4 * (l + m - 1) * (m + n - l + 1),
    )
    pref /= (
        math.factorial(l - 1)
        * math.factorial(l)
        * math.factorial(m - 1)
        * math.factorial(m)
        * math.factorial(n - l)
        * math.factorial(n - l + 1)
        * math.factorial(2 * m + 2 * n - 1)
    )
    series = hypergeometric_sum(
        [1 - l, 1, 1, Fraction(3, 2) - l + n],
        [Fraction(3, 2), 2 - l - m, 2 - l + m + n],
        1,
        l,
    )
    return pref * series


def hyp_chain_check(n: int, m: int, l: int) -> bool:
    """True iff the proportion agrees exactly with both hypergeometric
    re-expressions.  Propagates SingularParameterError for the cells where
    the series form is undefined."""
    target = proportion_nm(n, m, l)
    return (
        target == proportion_series_form(n, m, l)
        and target == proportion_balanced_form(n, m, l)
    )


def arcsine_limit(a_ratio: float, b_ratio: float) -> float:
    """Limiting proportion (2/pi) arcsin(sqrt(b(1-b)) / sqrt((a+b)(a-b+1)))
    for m ~ a*n and l ~ b*n as n grows.  The only floating-point computation
    in the library."""
    a = float(a_ratio)
    b = float(b_ratio)
    if not 0.0 < b < 1.0:
        raise ValueError("need 0 < b < 1")
    if a < 0.0:
        raise ValueError("need a >= 0")
    ratio = math.sqrt(b * (1.0 - b)) / math.sqrt((a + b) * (a - b + 1.0))
    # a = 0 makes the argument exactly 1; clamp rounding noise only
    return 2.0 / math.pi * math.asin(min(ratio, 1.0))
