"""Sequence builders driven purely by recurrences.

These are deliberately independent of the closed forms and of the series
expansions in the sibling modules, so that agreement between the three
routes is a meaningful cross-check.  Seeds for the even-interior count
come from exhaustive enumeration rather than hand-entered constants.
"""

from __future__ import annotations

from typing import List, Tuple

from . import compositions
from .algebra import ONE, P, Q, TriPoly, Y, ZERO

__all__ = [
    "capacity_dist_rec3",
    "capacity_dist_rec4",
    "joint_dist_seq",
    "even_interior_rec1",
    "even_interior_rec2",
]


def capacity_dist_rec3(n_max: int) -> List[TriPoly]:
    """Capacity distribution polynomials b[0..n_max] over
    {1,2}-compositions, by the third-order recurrence
    b_n = (1+y) b_{n-1} + (1-y) b_{n-2} - b_{n-3} + 1 - y  (n >= 3),
    with b_0 = b_1 = 1 and b_2 = 2."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    one_plus = ONE + Y
    one_minus = ONE - Y
    seq = [ONE, ONE, TriPoly.const(2)]
    for n in range(3, n_max + 1):
        seq.append(one_plus * seq[n - 1] + one_minus * seq[n - 2] - seq[n - 3] + one_minus)
    return seq[: n_max + 1]


def capacity_dist_rec4(n_max: int) -> List[TriPoly]:
    """Same sequence as :func:`capacity_dist_rec3`, by the fourth-order
    recurrence b_n = (2+y) b_{n-1} - 2y b_{n-2} - (2-y) b_{n-3} + b_{n-4}
    (n >= 4), with b_0 = b_1 = 1, b_2 = 2, b_3 = 3."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    two_plus = TriPoly.const(2) + Y
    two_minus = TriPoly.const(2) - Y
    twice_y = 2 * Y
    seq = [ONE, ONE, TriPoly.const(2), TriPoly.const(3)]
    for n in range(4, n_max + 1):
        seq.append(
            two_plus * seq[n - 1]
            - twice_y * seq[n - 2]
            - two_minus * seq[n - 3]
            + seq[n - 4]
        )
    return seq[: n_max + 1]


def joint_dist_seq(n_max: int) -> Tuple[List[TriPoly], List[TriPoly], List[TriPoly]]:
    """Joint (capacity, ones, sigma) distribution polynomials in (y, p, q)
    over {1,2}-compositions, split by the final part.

    Returns (full, last1, last2) where for n >= 1:
      last1[n] = p * full[n-1],
      last2[n] = p^(n-2) q^(n-1)
                 + sum_{j=2}^{n-2} (p y)^(j-2) q^(n-1) last2[n-j],
      full[n]  = last1[n] + last2[n],
    with full[0] = 1, last2[0] = last2[1] = 0.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    full = [ONE]
    last1 = [ZERO]
    last2 = [ZERO]
    py = P * Y
    for n in range(1, n_max + 1):
        end1 = P * full[n - 1]
        if n >= 2:
            end2 = TriPoly.monomial(1, ep=n - 2, eq=n - 1)
            q_pow = Q ** (n - 1)
            for j in range(2, n - 1):
                if last2[n - j].is_zero():
                    continue
                end2 = end2 + (py ** (j - 2)) * q_pow * last2[n - j]
        else:
            end2 = ZERO
        last1.append(end1)
        last2.append(end2)
        full.append(end1 + end2)
    return full, last1, last2


def _even_interior_seeds() -> List[int]:
    # d(0..3) counted exhaustively
    return [sum(1 for _ in compositions.iter_even_interior(n)) for n in range(4)]


def even_interior_rec1(n_max: int) -> List[int]:
    """Counts d[0..n_max] of even-interior compositions by
    d(n) = d(n-1) + 2 d(n-2) - 2 d(n-3)  (n >= 4)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    seq = _even_interior_seeds()
    for n in range(4, n_max + 1):
        seq.append(seq[n - 1] + 2 * seq[n - 2] - 2 * seq[n - 3])
    return seq[: n_max + 1]


def even_interior_rec2(n_max: int) -> List[int]:
    """Counts d[0..n_max] of even-interior compositions by
    d(n) = 2 d(n-2) + 1  (n >= 3)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    seq = _even_interior_seeds()[:3]
    for n in range(3, n_max + 1):
        seq.append(2 * seq[n - 2] + 1)
    return seq[: n_max + 1]
