"""Closed-form evaluators: Fibonacci/Lucas numbers, Fibonacci polynomials,
and the explicit formulas for capacity counts, totals, sign balance, and
the related binomial double-sum identities.

All results are exact integers or integer polynomials.  Divisions (by 5,
by p^2 + 4) are exact-division-with-assert: a nonzero remainder raises
ArithmeticError, since it can only mean a transcription bug.

Fibonacci convention here: fib(0) = fib(1) = 1, with negative indices
extended so that fib(-1) = 0 and fib(-m) = (-1)^m * fib(m - 2) for m >= 2.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Tuple

from .algebra import ONE, P, TriPoly, ZERO

__all__ = [
    "MIN_FIB_INDEX",
    "fib",
    "lucas",
    "binom",
    "capacity_zero_count",
    "count_by_capacity",
    "total_capacity",
    "sign_balance",
    "count_by_capacity_ones",
    "fib_polynomial",
    "fib_polynomial_value",
    "total_capacity_colored",
    "fib_poly_convolution",
    "marked_convolution",
    "double_sum_identity",
]

MIN_FIB_INDEX = -64


@lru_cache(maxsize=None)
def _fib_pair(k: int) -> Tuple[int, int]:
    # fast doubling on the standard convention F(0)=0, F(1)=1:
    # returns (F(k), F(k+1))
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if k & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """Fibonacci number with fib(0) = fib(1) = 1; defined for n >= -64
    with fib(-1) = 0 and fib(-m) = (-1)^m * fib(m - 2) for m >= 2."""
    if n < MIN_FIB_INDEX:
        raise ValueError(f"fib index out of range: {n} < {MIN_FIB_INDEX}")
    if n >= 0:
        return _fib_pair(n + 1)[0]
    if n == -1:
        return 0
    m = -n
    value = fib(m - 2)
    return value if m % 2 == 0 else -value


def lucas(m: int) -> int:
    """Lucas number, lucas(m) = fib(m) + fib(m - 2) for m >= 1."""
    if m < 1:
        raise ValueError("lucas is defined for m >= 1")
    return fib(m) + fib(m - 2)


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 when b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


# ---------------------------------------------------------------------------
# Capacity counts over {1,2}-compositions of n
# ---------------------------------------------------------------------------

def capacity_zero_count(n: int) -> int:
    """Number of {1,2}-compositions of n with no water cell:
    1 + floor(n^2 / 4)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return 1 + n * n // 4


def count_by_capacity(n: int, k: int) -> int:
    """Number of {1,2}-compositions of n with exactly k water cells,
    k >= 1:  sum over r of (n-k-2r-1) * C(k+r-1, k).

    Returns 0 whenever the summation range is empty (in particular for
    k > n - 4).  Use :func:`capacity_zero_count` for k = 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 1:
        raise ValueError("k must be >= 1 (capacity_zero_count handles k = 0)")
    total = 0
    for r in range(1, (n - k - 2) // 2 + 1):
        total += (n - k - 2 * r - 1) * binom(k + r - 1, k)
    return total


def total_capacity(n: int) -> int:
    """Total number of water cells over all {1,2}-compositions of n:
    ((n+1)*lucas(n+1) - fib(n)) / 5 - 2*fib(n+1) + n + 2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    head, rem = divmod((n + 1) * lucas(n + 1) - fib(n), 5)
    if rem:
        raise ArithmeticError(f"total_capacity({n}): division by 5 not exact")
    return head - 2 * fib(n + 1) + n + 2


def sign_balance(n: int) -> int:
    """(number of even-capacity) - (number of odd-capacity)
    {1,2}-compositions of n:  2n - 4 + (-1)^n * fib(n - 6)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    term = fib(n - 6)
    return 2 * n - 4 + (term if n % 2 == 0 else -term)


def count_by_capacity_ones(n: int, k: int, j: int) -> int:
    """Number of {1,2}-compositions of n with capacity k and exactly j
    parts equal to 1.

    Requires n >= j >= 0, k >= 0, and n = j (mod 2); returns 0 for j < k
    and for k >= 1 with n < j + 4.
    """
    if n < 0 or k < 0 or j < 0:
        raise ValueError("arguments must be >= 0")
    if n < j:
        raise ValueError(f"need n >= j, got n={n}, j={j}")
    if (n - j) % 2:
        raise ValueError(f"need n = j (mod 2), got n={n}, j={j}")
    if j < k:
        return 0
    if k == 0:
        return 1 if n == j else j + 1
    if n < j + 4:
        return 0
    return (j - k + 1) * binom((n - j - 4) // 2 + k, k)


# ---------------------------------------------------------------------------
# Fibonacci polynomials and the colored generalization
# ---------------------------------------------------------------------------

def _fib_poly_list(n: int) -> List[TriPoly]:
    # [F_0 .. F_n] with F_0 = 1, F_1 = p, F_k = p*F_{k-1} + F_{k-2}
    values = [ONE, P]
    for _ in range(2, n + 1):
        values.append(P * values[-1] + values[-2])
    return values[: n + 1]


def fib_polynomial(n: int) -> TriPoly:
    """Fibonacci polynomial in p: F(0) = 1, F(1) = p,
    F(n) = p*F(n-1) + F(n-2); F(-1) = 0."""
    if n == -1:
        return ZERO
    if n < -1:
        raise ValueError("fib_polynomial is defined for n >= -1")
    return _fib_poly_list(n)[n]


def fib_polynomial_value(n: int, p0: int) -> int:
    """fib_polynomial(n) evaluated at p = p0, computed directly on ints."""
    if n == -1:
        return 0
    if n < -1:
        raise ValueError("defined for n >= -1")
    a, b = 1, p0  # F_0, F_1
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, p0 * b + a
    return b


def total_capacity_colored(n: int, p0: int) -> int:
    """Total capacity over {1,2}-compositions of n in which every 1 gets
    one of p0 colors:
    (p0^2*n*F(n) + 2*p0*(n+1)*F(n-1)) / (p0^2 + 4) - 2*p0*F(n+1)
    + p0^n * (n + 2*p0^2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if p0 < 1:
        raise ValueError("p0 must be >= 1")
    f_prev = fib_polynomial_value(n - 1, p0)
    f_n = fib_polynomial_value(n, p0)
    f_next = fib_polynomial_value(n + 1, p0)
    head, rem = divmod(p0 * p0 * n * f_n + 2 * p0 * (n + 1) * f_prev, p0 * p0 + 4)
    if rem:
        raise ArithmeticError(
            f"total_capacity_colored({n}, {p0}): division by p0^2+4 not exact"
        )
    return head - 2 * p0 * f_next + p0**n * (n + 2 * p0 * p0)


def _divide_by_p2_plus_4(poly: TriPoly) -> TriPoly:
    # exact division of a polynomial in p alone by p^2 + 4
    degree = 0
    for (ey, ep, eq) in poly.terms:
        if ey or eq:
            raise ValueError("dividend must be a polynomial in p only")
        degree = max(degree, ep)
    coeffs = [0] * (degree + 1)
    for (_, ep, _), coef in poly.terms.items():
        coeffs[ep] = coef
    quotient = [0] * max(degree - 1, 1)
    for i in range(degree, 1, -1):
        quotient[i - 2] = coeffs[i]
        coeffs[i - 2] -= 4 * coeffs[i]
        coeffs[i] = 0
    if coeffs[0] or (degree >= 1 and coeffs[1]):
        raise ArithmeticError("division by p^2 + 4 left a remainder")
    return TriPoly({(0, e, 0): c for e, c in enumerate(quotient) if c})


def fib_poly_convolution(n: int) -> Tuple[TriPoly, TriPoly]:
    """Both sides of the Fibonacci-polynomial convolution identity:
    sum_{i=0}^{n-1} F(i)*F(n-1-i)  ==  (p*n*F(n) + 2(n+1)*F(n-1)) / (p^2+4).

    The right side is computed by exact polynomial division (nonzero
    remainder raises).  Returns (left, right).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    polys = _fib_poly_list(n)
    left = ZERO
    for i in range(n):
        left = left + polys[i] * polys[n - 1 - i]
    f_prev = fib_polynomial(n - 1)
    numerator = P * (n * polys[n]) + (2 * (n + 1)) * f_prev
    right = _divide_by_p2_plus_4(numerator)
    return left, right


def marked_convolution(n: int) -> Tuple[int, int]:
    """Number of {1,2}-compositions of n with one marked 1, both ways:
    the convolution sum_{i=0}^{n-1} fib(i)*fib(n-1-i) and the closed form
    ((n+1)*lucas(n+1) - fib(n)) / 5.  Returns (sum, closed form)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    conv = sum(fib(i) * fib(n - 1 - i) for i in range(n))
    head, rem = divmod((n + 1) * lucas(n + 1) - fib(n), 5)
    if rem:
        raise ArithmeticError(f"marked_convolution({n}): division by 5 not exact")
    return conv, head


def double_sum_identity(n: int, which: int) -> Tuple[int, int]:
    """Evaluate one of the three binomial double-sum identities obtained
    by summing the capacity counts (plainly, linearly in k, or with
    alternating signs).  Returns (double sum, closed right side).

    which = 1:  sum (n-k) C(k-r-2, r-1)                ==  fib(n) - 1 - floor(n^2/4)
    which = 2:  sum (n-k)(k-r-2) C(k-r-3, r-1)         ==  total_capacity(n)
    which = 3:  sum (-1)^(k-1) (n-k) C(k-r-2, r-1)     ==  2n - 5 - floor(n^2/4)
                                                           + (-1)^n fib(n-6)
    with r = 1..floor((n-3)/2) and k = 2r+2..n-1 throughout; n >= 5.
    """
    if n < 5:
        raise ValueError("n must be >= 5")
    if which not in (1, 2, 3):
        raise ValueError("which must be 1, 2, or 3")
    m = (n - 3) // 2
    left = 0
    for r in range(1, m + 1):
        for k in range(2 * r + 2, n):
            if which == 1:
                left += (n - k) * binom(k - r - 2, r - 1)
            elif which == 2:
                left += (n - k) * (k - r - 2) * binom(k - r - 3, r - 1)
            else:
                sign = -1 if k % 2 == 0 else 1
                left += sign * (n - k) * binom(k - r - 2, r - 1)
    if which == 1:
        right = fib(n) - 1 - n * n // 4
    elif which == 2:
        right = total_capacity(n)
    else:
        term = fib(n - 6)
        right = 2 * n - 5 - n * n // 4 + (term if n % 2 == 0 else -term)
    return left, right
