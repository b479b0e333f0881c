"""Generating-function models: every sequence and distribution in the
package, reconstructed a third way as a rational (or q-hypergeometric)
series in x and expanded exactly to a requested truncation order.

Each model is registered under a stable CLI-visible name; builders take
the truncation order and return an :class:`~capdist.algebra.XSeries`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict

from .algebra import ONE, P, Q, TriPoly, XSeries, Y, rational_series

__all__ = [
    "GfModel",
    "MODELS",
    "series_capacity_dist",
    "series_capacity_zero",
    "series_capacity_k",
    "series_even_interior",
    "series_joint",
    "series_joint_q1",
    "series_total_capacity",
    "series_sign_balance",
    "joint_last2_series",
    "functional_equation_residual",
    "functional_equation_check",
]


def _xp(order: int, powers: dict) -> XSeries:
    return XSeries.from_x_poly(powers, order)


def series_capacity_dist(order: int) -> XSeries:
    """Bivariate series whose x^n coefficient is the capacity distribution
    polynomial b_n(y):
    (1 - x(1+y) + x^2 y + x^3 (1-y)) / ((1-x)^2 (1 - xy - x^2))."""
    numer = _xp(order, {0: ONE, 1: -(ONE + Y), 2: Y, 3: ONE - Y})
    denom = _xp(order, {0: ONE, 1: -ONE}) ** 2 * _xp(order, {0: ONE, 1: -Y, 2: -ONE})
    return rational_series(numer, denom)


def series_capacity_zero(order: int) -> XSeries:
    """Series of the counts of capacity-0 {1,2}-compositions:
    (1 - x + x^3) / ((1-x)^2 (1-x^2))."""
    numer = _xp(order, {0: ONE, 1: -ONE, 3: ONE})
    denom = _xp(order, {0: ONE, 1: -ONE}) ** 2 * _xp(order, {0: ONE, 2: -ONE})
    return rational_series(numer, denom)


def series_capacity_k(k: int, order: int) -> XSeries:
    """Series of the counts of capacity-k {1,2}-compositions, k >= 1:
    x^(k+4) / ((1-x)^2 (1-x^2)^(k+1))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    numer = _xp(order, {k + 4: ONE})
    denom = _xp(order, {0: ONE, 1: -ONE}) ** 2 * _xp(order, {0: ONE, 2: -ONE}) ** (
        k + 1
    )
    return rational_series(numer, denom)


def series_even_interior(order: int) -> XSeries:
    """Series of the even-interior composition counts d(n):
    (1 - x^2 + x^3) / (1 - x - 2x^2 + 2x^3)."""
    numer = _xp(order, {0: ONE, 2: -ONE, 3: ONE})
    denom = _xp(order, {0: ONE, 1: -ONE, 2: TriPoly.const(-2), 3: TriPoly.const(2)})
    return rational_series(numer, denom)


def series_joint(order: int) -> XSeries:
    """Trivariate series whose x^n coefficient is the joint
    (capacity, ones, sigma) distribution polynomial in (y, p, q):

        1/(1-px) + sum_{m>=1} q^(m^2) x^(2m)
                   / ((1-px)(1-p q^m x) prod_{j=1}^{m-1} (1 - p q^j x y)).

    Summands with 2m > order contribute nothing at this truncation, so the
    infinite sum is cut at m = order // 2 without loss.
    """
    one_minus_px = _xp(order, {0: ONE, 1: -P})
    total = one_minus_px.invert()
    for m in range(1, order // 2 + 1):
        denom = one_minus_px * _xp(order, {0: ONE, 1: -(P * Q**m)})
        for j in range(1, m):
            denom = denom * _xp(order, {0: ONE, 1: -(P * Y * Q**j)})
        numer = _xp(order, {2 * m: Q ** (m * m)})
        total = total + numer * denom.invert()
    return total


def series_joint_q1(order: int) -> XSeries:
    """The q = 1 specialization of :func:`series_joint` in closed rational
    form: (1 - px(1+y) + p^2 x^2 y + p x^3 (1-y)) / ((1-px)^2 (1-pxy-x^2))."""
    numer = _xp(order, {0: ONE, 1: -(P * (ONE + Y)), 2: P * P * Y, 3: P * (ONE - Y)})
    denom = _xp(order, {0: ONE, 1: -P}) ** 2 * _xp(order, {0: ONE, 1: -(P * Y), 2: -ONE})
    return rational_series(numer, denom)


def series_total_capacity(order: int, colored: bool = False) -> XSeries:
    """Series of total capacity per n:  x^5 / ((1-x)^2 (1-x-x^2)^2), or the
    1-colored variant  p x^5 / ((1-px)^2 (1-px-x^2)^2) when ``colored``."""
    if colored:
        numer = _xp(order, {5: P})
        denom = (
            _xp(order, {0: ONE, 1: -P}) ** 2
            * _xp(order, {0: ONE, 1: -P, 2: -ONE}) ** 2
        )
    else:
        numer = _xp(order, {5: ONE})
        denom = (
            _xp(order, {0: ONE, 1: -ONE}) ** 2
            * _xp(order, {0: ONE, 1: -ONE, 2: -ONE}) ** 2
        )
    return rational_series(numer, denom)


def series_sign_balance(order: int) -> XSeries:
    """Series of the sign balances b_n(-1) in closed rational form:
    (1 - x^2 + 2x^3) / ((1-x)^2 (1 + x - x^2))."""
    numer = _xp(order, {0: ONE, 2: -ONE, 3: TriPoly.const(2)})
    denom = _xp(order, {0: ONE, 1: -ONE}) ** 2 * _xp(order, {0: ONE, 1: ONE, 2: -ONE})
    return rational_series(numer, denom)


def joint_last2_series(order: int) -> XSeries:
    """The part of :func:`series_joint` coming from compositions that end
    in 2:  recovered as (1 - px) * F(x) - 1."""
    full = series_joint(order)
    return _xp(order, {0: ONE, 1: -P}) * full - XSeries.one(order)


def functional_equation_residual(order: int) -> XSeries:
    """Residual of the functional equation satisfied by the end-in-2 part
    G(x) of the joint series:

        G(x) - qx^2/(1-pqx) - qx^2/(1-pqxy) * G(qx)

    which is identically 0 when expanded to any order.
    """
    last2 = joint_last2_series(order)
    qx2 = _xp(order, {2: Q})
    term1 = qx2 * _xp(order, {0: ONE, 1: -(P * Q)}).invert()
    term2 = qx2 * _xp(order, {0: ONE, 1: -(P * Q * Y)}).invert() * last2.scale_x_by_q()
    return last2 - term1 - term2


def functional_equation_check(order: int) -> bool:
    """True iff the functional-equation residual vanishes to ``order``."""
    return all(c.is_zero() for c in functional_equation_residual(order).coeffs)


@dataclass(frozen=True)
class GfModel:
    """A registered generating-function model."""

    name: str
    builder: Callable[..., XSeries]
    description: str
    needs_k: bool = False


MODELS: Dict[str, GfModel] = {
    model.name: model
    for model in [
        GfModel("gf.F", series_capacity_dist, "capacity distribution b_n(y)"),
        GfModel("gf.w0", series_capacity_zero, "capacity-0 counts"),
        GfModel(
            "gf.wk", series_capacity_k, "capacity-k counts (requires --k)", needs_k=True
        ),
        GfModel("gf.d", series_even_interior, "even-interior composition counts"),
        GfModel("gf.Fpq", series_joint, "joint (capacity, ones, sigma) distribution"),
        GfModel("gf.Fp1", series_joint_q1, "joint distribution at q = 1"),
        GfModel("gf.totcap", series_total_capacity, "total capacity per n"),
        GfModel(
            "gf.F2check",
            functional_equation_residual,
            "functional-equation residual for the end-in-2 joint series",
        ),
    ]
}
