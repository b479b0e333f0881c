"""Compositions, bargraphs, and water-capacity statistics.

A composition is a finite sequence of positive integer parts.  Drawn as a
bargraph (column i has height = part i), some unit cells outside the graph
would trap water; the number of such cells is the composition's *capacity*.

For compositions with all parts in {1, 2} the capacity equals the number of
1-parts lying strictly between the first and the last 2, and this module
carries the full statistic bundle for that family: capacity, the number of
1s and 2s, the sign (-1)^capacity, and the tiling weight sigma (number of
2s plus the sum of the partial sums of parts to the left of each 2, i.e.
the positions covered by left halves of dominoes in the square-and-domino
reading).

Enumerators yield compositions in lexicographic order (1 < 2 < 3 < ...)
and are deterministic.  All values are immutable; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

__all__ = [
    "Composition",
    "Stats",
    "capacity",
    "ones_between_outer_twos",
    "profile",
    "iter_compositions_12",
    "iter_even_interior",
    "even_interior",
    "outer_twos_separated",
    "ends_in_one",
    "one_between_last_twos",
    "last_twos_adjacent",
    "ends_in_two_one",
    "render_bargraph",
    "capacity_counts",
    "capacity_ones_counts",
    "joint_counts",
]


class Composition:
    """An immutable composition: a sequence of parts, each >= 1.

    The empty composition (of 0) is allowed.  Equality and hashing are
    part-by-part.  ``n`` caches the sum of the parts.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(parts)
        for part in parts:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, Composition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Composition({self.text()!r})"

    def __str__(self) -> str:
        return self.text()

    def text(self) -> str:
        """Compact digit string when all parts are single-digit,
        comma-separated integers otherwise.  Empty composition -> ''."""
        if all(part <= 9 for part in self.parts):
            return "".join(str(part) for part in self.parts)
        return ",".join(str(part) for part in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse either format produced by :meth:`text`.

        ``"21121"`` -> (2,1,1,2,1); ``"3,1,2"`` -> (3,1,2); ``""`` -> empty.
        """
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            try:
                parts = tuple(int(tok) for tok in text.split(","))
            except ValueError:
                raise ValueError(f"bad composition string: {text!r}") from None
            return cls(parts)
        if text.isdigit():
            return cls(tuple(int(ch) for ch in text))
        raise ValueError(f"bad composition string: {text!r}")


@dataclass(frozen=True)
class Stats:
    """Statistic bundle of one composition.

    ``sigma`` is defined only when every part is 1 or 2; it is None
    otherwise.  On {1,2}-compositions: ones + 2*twos = n and
    sign == (-1)**capacity.
    """

    capacity: int
    ones: int
    twos: int
    sigma: Optional[int]
    sign: int


def _side_maxima_capacity(parts: Sequence[int]) -> int:
    # water above column i: max(0, min(maxLeft_i, maxRight_i) - h_i),
    # maxima over strictly smaller / larger column indices
    m = len(parts)
    if m < 3:
        return 0
    lefts = [0] * m
    best = 0
    for i in range(m):
        lefts[i] = best
        if parts[i] > best:
            best = parts[i]
    total = 0
    right = 0
    for i in range(m - 1, -1, -1):
        level = lefts[i] if lefts[i] < right else right
        if level > parts[i]:
            total += level - parts[i]
        if parts[i] > right:
            right = parts[i]
    return total


def capacity(c: Composition) -> int:
    """Number of water cells of the bargraph of ``c`` (any part sizes)."""
    return _side_maxima_capacity(c.parts)


def _cap12(parts: Sequence[int]) -> int:
    # {1,2} fast path: 1s strictly between the first and last 2
    first = -1
    last = -1
    for i, part in enumerate(parts):
        if part == 2:
            if first < 0:
                first = i
            last = i
    if first < 0 or first == last:
        return 0
    count = 0
    for i in range(first + 1, last):
        if parts[i] == 1:
            count += 1
    return count


def ones_between_outer_twos(c: Composition) -> int:
    """Capacity of a {1,2}-composition, computed as the number of 1-parts
    strictly between its first and last 2.  Rejects parts > 2."""
    _require_parts_12(c)
    return _cap12(c.parts)


def _sigma12(parts: Sequence[int]) -> int:
    total = 0
    running = 0
    for part in parts:
        if part == 2:
            total += 1 + running
        running += part
    return total


def profile(c: Composition) -> Stats:
    """All per-composition statistics in one pass."""
    parts = c.parts
    ones = 0
    twos = 0
    small = True
    for part in parts:
        if part == 1:
            ones += 1
        elif part == 2:
            twos += 1
        else:
            small = False
    cap = _cap12(parts) if small else _side_maxima_capacity(parts)
    sigma = _sigma12(parts) if small else None
    return Stats(
        capacity=cap,
        ones=ones,
        twos=twos,
        sigma=sigma,
        sign=1 if cap % 2 == 0 else -1,
    )


def _require_parts_12(c: Composition) -> None:
    for part in c.parts:
        if part > 2:
            raise ValueError(f"composition has a part > 2: {part}")


# ---------------------------------------------------------------------------
# Enumerators
# ---------------------------------------------------------------------------

def _iter_parts_12(n: int, prefix: tuple = ()) -> Iterator[tuple]:
    if n == 0:
        yield prefix
        return
    yield from _iter_parts_12(n - 1, prefix + (1,))
    if n >= 2:
        yield from _iter_parts_12(n - 2, prefix + (2,))


def iter_compositions_12(n: int) -> Iterator[Composition]:
    """All compositions of n with parts in {1, 2}, lexicographic order.

    Yields exactly fib(n) compositions (paper-style Fibonacci with
    f(0) = f(1) = 1); n = 0 yields the single empty composition.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    for parts in _iter_parts_12(n):
        yield Composition(parts)


def _iter_tail_even(m: int) -> Iterator[tuple]:
    # compositions of m (>= 1 part) whose every part except the last is even
    for first in range(1, m + 1):
        if first == m:
            yield (m,)
        elif first % 2 == 0:
            for rest in _iter_tail_even(m - first):
                yield (first,) + rest


def iter_even_interior(n: int) -> Iterator[Composition]:
    """All compositions of n whose interior parts (all but the first and
    last) are even, in lexicographic order.  One- and two-part
    compositions always qualify; n = 0 yields the empty composition."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield Composition(())
        return
    for first in range(1, n):
        for rest in _iter_tail_even(n - first):
            yield Composition((first,) + rest)
    yield Composition((n,))


def even_interior(c: Composition) -> bool:
    """True iff every interior part of ``c`` (all but the first and the
    last) is even."""
    return all(part % 2 == 0 for part in c.parts[1:-1])


# ---------------------------------------------------------------------------
# Family predicates ({1,2} parts only)
# ---------------------------------------------------------------------------

def outer_twos_separated(c: Composition) -> bool:
    """True iff ``c`` has at least two 2s and at least one part strictly
    between its first and last 2.  (Empty for n <= 4.)"""
    _require_parts_12(c)
    parts = c.parts
    first = -1
    last = -1
    for i, part in enumerate(parts):
        if part == 2:
            if first < 0:
                first = i
            last = i
    return first >= 0 and last - first >= 2


def ends_in_one(c: Composition) -> bool:
    """True iff the final part is 1."""
    _require_parts_12(c)
    return bool(c.parts) and c.parts[-1] == 1


def _last_two_positions(parts: Sequence[int]):
    # indices of the last two 2s, or None
    last = second = -1
    for i in range(len(parts) - 1, -1, -1):
        if parts[i] == 2:
            if last < 0:
                last = i
            else:
                second = i
                break
    if second < 0:
        return None
    return second, last


def one_between_last_twos(c: Composition) -> bool:
    """True iff ``c`` has at least two 2s and some 1 lies strictly between
    the rightmost two of them."""
    _require_parts_12(c)
    pos = _last_two_positions(c.parts)
    if pos is None:
        return False
    lo, hi = pos
    return any(c.parts[i] == 1 for i in range(lo + 1, hi))


def last_twos_adjacent(c: Composition) -> bool:
    """True iff ``c`` has at least two 2s and the rightmost two are
    adjacent parts."""
    _require_parts_12(c)
    pos = _last_two_positions(c.parts)
    return pos is not None and pos[1] == pos[0] + 1


def ends_in_two_one(c: Composition) -> bool:
    """True iff the last two parts are 2, 1."""
    _require_parts_12(c)
    return len(c.parts) >= 2 and c.parts[-2:] == (2, 1)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_bargraph(c: Composition) -> str:
    """ASCII bargraph, one text row per height level, top row first.
    Filled cells are '#', water cells '~'.  Empty composition -> ''."""
    parts = c.parts
    if not parts:
        return ""
    m = len(parts)
    lefts = [0] * m
    best = 0
    for i in range(m):
        lefts[i] = best
        best = max(best, parts[i])
    levels = [0] * m
    right = 0
    for i in range(m - 1, -1, -1):
        levels[i] = min(lefts[i], right)
        right = max(right, parts[i])
    rows = []
    for h in range(max(parts), 0, -1):
        row = []
        for i in range(m):
            if parts[i] >= h:
                row.append("#")
            elif levels[i] >= h:
                row.append("~")
            else:
                row.append(" ")
        rows.append("".join(row).rstrip())
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# Exhaustive tallies over the {1,2} family (the brute-force route)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def capacity_counts(n: int) -> dict:
    """Tally {capacity: count} over all {1,2}-compositions of n.
    Treat the returned dict as read-only."""
    counts: dict = {}
    for parts in _iter_parts_12(n):
        k = _cap12(parts)
        counts[k] = counts.get(k, 0) + 1
    return counts


@lru_cache(maxsize=None)
def capacity_ones_counts(n: int) -> dict:
    """Tally {(capacity, number of 1s): count} over {1,2}-compositions."""
    counts: dict = {}
    for parts in _iter_parts_12(n):
        key = (_cap12(parts), len(parts) * 2 - n)
        counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=None)
def joint_counts(n: int) -> dict:
    """Tally {(capacity, ones, sigma): count} over {1,2}-compositions."""
    counts: dict = {}
    for parts in _iter_parts_12(n):
        key = (_cap12(parts), len(parts) * 2 - n, _sigma12(parts))
        counts[key] = counts.get(key, 0) + 1
    return counts
