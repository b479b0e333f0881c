"""Executable bijections and involutions on composition families.

Three constructions live here:

* a codec between capacity-k {1,2}-compositions and their run-length data
  (leading 1s, trailing 1s, and the sizes of the 2-runs separated by the
  k water-cell 1s);

* a two-stage sign-changing pairing on the compositions whose outermost
  2s are separated, whose fixed points account exactly for the sign
  balance;

* the two growth maps that realize the even-interior count recurrences
  d(n) = 2 d(n-2) + 1 and d(n) = d(n-1) + 2 d(n-2) - 2 d(n-3).

Every map here is validated exhaustively in the verifier: round trips,
sign flips, disjointness and coverage of images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .compositions import (
    Composition,
    _cap12,
    _require_parts_12,
    even_interior,
    iter_compositions_12,
    outer_twos_separated,
    profile,
)

__all__ = [
    "RunCode",
    "encode_capacity_runs",
    "decode_capacity_runs",
    "PairingStep",
    "sign_pairing",
    "pairing_sign_sum",
    "extend_even_interior",
    "missed_composition",
    "extend_ending_one",
    "marked_counts",
]


# ---------------------------------------------------------------------------
# Run-length codec for capacity-k compositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunCode:
    """Run-length data of a capacity-k {1,2}-composition
    1^lead 2^a0 1 2^a1 1 ... 1 2^ak 1^trail, with two_runs = (a0..ak).

    The k separating single 1s are exactly the water cells, so
    lead + trail + 2*sum(two_runs) = n - k, and a0, ak >= 1.
    """

    lead_ones: int
    trail_ones: int
    two_runs: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.two_runs) - 1


def encode_capacity_runs(c: Composition) -> RunCode:
    """Encode a {1,2}-composition with capacity >= 1 as a :class:`RunCode`."""
    _require_parts_12(c)
    parts = c.parts
    if _cap12(parts) < 1:
        raise ValueError("composition has capacity 0: no run code exists")
    lead = 0
    while parts[lead] == 1:
        lead += 1
    trail = 0
    while parts[len(parts) - 1 - trail] == 1:
        trail += 1
    middle = parts[lead : len(parts) - trail]
    runs = []
    current = 0
    for part in middle:
        if part == 2:
            current += 1
        else:
            runs.append(current)
            current = 0
    runs.append(current)
    return RunCode(lead_ones=lead, trail_ones=trail, two_runs=tuple(runs))


def decode_capacity_runs(n: int, k: int, code: RunCode) -> Composition:
    """Rebuild the composition of n with capacity k from its run code.
    Raises if the code violates any invariant."""
    if k < 1:
        raise ValueError("k must be >= 1")
    runs = code.two_runs
    if len(runs) != k + 1:
        raise ValueError(f"need {k + 1} runs of 2s, got {len(runs)}")
    if code.lead_ones < 0 or code.trail_ones < 0 or any(a < 0 for a in runs):
        raise ValueError("run code entries must be >= 0")
    if runs[0] < 1 or runs[-1] < 1:
        raise ValueError("first and last runs of 2s must be nonempty")
    if code.lead_ones + code.trail_ones + 2 * sum(runs) != n - k:
        raise ValueError("run code does not sum to n")
    parts = [1] * code.lead_ones
    for i, run in enumerate(runs):
        if i:
            parts.append(1)
        parts.extend([2] * run)
    parts.extend([1] * code.trail_ones)
    return Composition(parts)


# ---------------------------------------------------------------------------
# Sign-changing pairing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairingStep:
    """Outcome of the sign pairing at one composition: either a partner of
    opposite sign (kind 'stage1' or 'stage2') or a fixed point (kind
    'fixed', with fixed_class 'rho' for the lone alternating composition
    2 1 2 1^(n-5) or 'terminal_double_one' for 2 beta 1 1 2)."""

    kind: str
    partner: Optional[Composition]
    fixed_class: str = "none"


def sign_pairing(c: Composition) -> PairingStep:
    """Apply the two-stage sign-changing pairing to a composition whose
    outermost 2s are separated.

    Write c = 1^x 2 alpha 2 1^y with x, y maximal (alpha nonempty).
    Stage 1 swaps a leading 1 against the final part of alpha:
      x >= 1 and alpha ends in 1  <->  alpha ends in 2.
    Survivors have x = 0 and alpha ending in 1; stage 2 then swaps the
    final part of alpha' (alpha = alpha' 1) against a trailing 1:
      2 (beta 2 1) 2 1^y  <->  2 (beta 1 1) 2 1^(y+1).
    Fixed points: 2 1 2 1^y (class 'rho') and 2 beta 1 1 2 with beta any
    {1,2}-composition (class 'terminal_double_one').  Partners always
    differ by exactly one water cell, so their signs are opposite.
    """
    if not outer_twos_separated(c):
        raise ValueError("outermost 2s are not separated: no pairing defined")
    parts = c.parts
    x = 0
    while parts[x] == 1:
        x += 1
    y = 0
    while parts[len(parts) - 1 - y] == 1:
        y += 1
    last2 = len(parts) - 1 - y
    alpha = parts[x + 1 : last2]
    ones_x = (1,) * x
    ones_y = (1,) * y
    if x >= 1 and alpha[-1] == 1:
        partner = ones_x[:-1] + (2,) + alpha[:-1] + (2, 2) + ones_y
        return PairingStep("stage1", Composition(partner))
    if alpha[-1] == 2:
        partner = ones_x + (1, 2) + alpha[:-1] + (1, 2) + ones_y
        return PairingStep("stage1", Composition(partner))
    # survivor: x == 0 and alpha ends in 1
    inner = alpha[:-1]
    if not inner:
        return PairingStep("fixed", None, "rho")
    if inner[-1] == 2:
        partner = (2,) + inner[:-1] + (1, 1, 2) + ones_y + (1,)
        return PairingStep("stage2", Composition(partner))
    if y >= 1:
        partner = (2,) + inner[:-1] + (2, 1, 2) + ones_y[:-1]
        return PairingStep("stage2", Composition(partner))
    return PairingStep("fixed", None, "terminal_double_one")


def pairing_sign_sum(n: int) -> int:
    """Sum of (-1)^capacity over all compositions of n whose outermost 2s
    are separated, evaluated by running the pairing and adding only the
    fixed points (paired members cancel)."""
    if n < 5:
        raise ValueError("the family is empty below n = 5")
    total = 0
    for c in iter_compositions_12(n):
        if not outer_twos_separated(c):
            continue
        step = sign_pairing(c)
        if step.kind == "fixed":
            total += 1 if _cap12(c.parts) % 2 == 0 else -1
    return total


# ---------------------------------------------------------------------------
# Growth maps behind the even-interior count recurrences
# ---------------------------------------------------------------------------

def extend_even_interior(c: Composition, op: int) -> Composition:
    """Grow an even-interior composition of n-2 into one of n.

    With z the final part: if z is even, op 1 replaces z by z+2 and op 2
    appends a 2; if z is odd, op 1 replaces z by z+2 and op 2 replaces z
    by z+1, 1.  Over both ops this hits every even-interior composition
    of n exactly once, except :func:`missed_composition`.
    """
    if op not in (1, 2):
        raise ValueError("op must be 1 or 2")
    if not c.parts:
        raise ValueError("composition must be nonempty")
    if not even_interior(c):
        raise ValueError("composition has an odd interior part")
    parts = c.parts
    z = parts[-1]
    if op == 1:
        return Composition(parts[:-1] + (z + 2,))
    if z % 2 == 0:
        return Composition(parts + (2,))
    return Composition(parts[:-1] + (z + 1, 1))


def missed_composition(n: int) -> Composition:
    """The single even-interior composition of n not produced by
    :func:`extend_even_interior`: (n-2, 2) for odd n, (n-1, 1) for even."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if n % 2:
        return Composition((n - 2, 2))
    return Composition((n - 1, 1))


def extend_ending_one(c: Composition, op: int) -> Composition:
    """Grow an even-interior composition of n-2 ending in 1 into one of n
    ending in 1: op 1 inserts a 2 directly before the terminal 1, op 2
    adds 2 to the penultimate part.  Over both ops this hits every
    even-interior composition of n ending in 1 exactly once (n >= 4)."""
    if op not in (1, 2):
        raise ValueError("op must be 1 or 2")
    if len(c.parts) < 2 or c.parts[-1] != 1:
        raise ValueError("composition must end in 1 and have >= 2 parts")
    if not even_interior(c):
        raise ValueError("composition has an odd interior part")
    parts = c.parts
    if op == 1:
        return Composition(parts[:-1] + (2, 1))
    return Composition(parts[:-2] + (parts[-2] + 2, 1))


# ---------------------------------------------------------------------------
# Marked compositions
# ---------------------------------------------------------------------------

def marked_counts(n: int) -> Tuple[int, int]:
    """Exhaustive counts of marked {1,2}-compositions of n: pairs of a
    composition and one marked part 1.

    Returns (all such pairs, pairs whose marked 1 is not a water cell,
    i.e. lies in the initial or terminal run of 1s).  The difference is
    the number of pairs whose marked 1 is a water cell, which equals the
    total capacity.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    star = 0
    non_water = 0
    for c in iter_compositions_12(n):
        stats = profile(c)
        star += stats.ones
        non_water += stats.ones - stats.capacity
    return star, non_water
