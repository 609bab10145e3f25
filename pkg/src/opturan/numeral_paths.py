"""Digit-rule triangulations and the path families they certify.

`numeral_graph(base, width)` builds the triangulated outerplanar graph on
base**width vertices whose chords follow positional-arithmetic rules:
every multiple of base**s is chained to its neighbouring multiples
(cyclically, with 0 standing in for base**width), and every vertex is
joined to the value obtained by zeroing its last nonzero digit.  With
width 1 this is exactly the fan.

Large families of equal-length paths between two fixed vertices are
indexed by *step schedules*: integer sequences starting at 0, rising by at
most 1 per step, capped at width-2.  The schedule entry prescribes the
number of trailing zeros after each step, which pins down the step itself
(zero the last nonzero digit, or subtract a power of the base).  Distinct
schedules yield distinct paths, so the schedule count is a certified lower
bound on the number of fixed-endpoint paths.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterator, Sequence

from .graph_core import Graph, Mop, MopError
from .guards import check_limit

__all__ = [
    "NumeralGraph",
    "numeral_graph",
    "StepSchedule",
    "count_schedules",
    "enumerate_schedules",
    "count_schedules_with_multiplicities",
    "schedule_to_path",
    "schedule_count_lower_bound",
    "schedule_count_lower_bound_exact",
    "admissible_pairs",
]

NUMERAL_VERTEX_LIMIT = 10**6
SCHEDULE_ENUM_LIMIT = 20


def _zero_last_nonzero(x: int, base: int) -> int:
    """x with its last (least significant) nonzero base-digit set to zero."""
    p = 1
    while x % (p * base) == 0:
        p *= base
    return x - ((x // p) % base) * p


def _trailing_zeros(x: int, base: int) -> int:
    if x == 0:
        raise ValueError("0 has no last nonzero digit")
    q = 0
    while x % base == 0:
        x //= base
        q += 1
    return q


def _digits(x: int, base: int, width: int) -> list[int]:
    """Base digits, most significant first, fixed width."""
    out = [0] * width
    for i in range(width - 1, -1, -1):
        out[i] = x % base
        x //= base
    return out


@dataclass(frozen=True)
class NumeralGraph:
    """The digit-rule triangulation on base**width vertices."""

    base: int
    width: int
    mop: Mop

    @property
    def n(self) -> int:
        return self.mop.n

    @property
    def graph(self) -> Graph:
        return self.mop.graph

    def adjacent_by_rule(self, x: int, y: int) -> bool:
        """Adjacency decided from the construction rules alone, without a
        graph lookup."""
        n = self.base**self.width
        if not (0 <= x < n and 0 <= y < n):
            return False
        return _adjacent_by_rule(x, y, self.base, self.width)


def numeral_graph(base: int, width: int,
                  limit: int | None = NUMERAL_VERTEX_LIMIT) -> NumeralGraph:
    """Build the digit-rule triangulation.

    The edge set is re-validated as a polygon-plus-chords triangulation; a
    failure there means the construction itself is broken, so it surfaces
    as a RuntimeError rather than bad input.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    n = base**width
    check_limit(n, limit, "vertex count base**width")
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got base**width={n}")
    chords = set()
    step = base  # the step=1 chain is the polygon boundary itself
    for _ in range(1, width):
        for r in range(0, n, step):
            a, b = r, (r + step) % n
            if a > b:
                a, b = b, a
            if 2 <= b - a <= n - 2:
                chords.add((a, b))
        step *= base
    for x in range(1, n):
        a, b = _zero_last_nonzero(x, base), x
        if 2 <= b - a <= n - 2:
            chords.add((a, b))
    try:
        mop = Mop(n, frozenset(chords))
    except MopError as exc:
        raise RuntimeError(
            f"digit-rule edge set for base={base}, width={width} is not a "
            f"triangulation: {exc}"
        ) from exc
    return NumeralGraph(base=base, width=width, mop=mop)


# ---------------------------------------------------------------------------
# Step schedules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StepSchedule:
    """Sequence of prescribed trailing-zero counts: starts at 0, never
    rises by more than 1, never exceeds width-2."""

    values: tuple[int, ...]
    width: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        vs = self.values
        if self.width < 2:
            raise ValueError(f"width must be >= 2, got {self.width}")
        if vs:
            if vs[0] != 0:
                raise ValueError(f"schedule must start at 0, got {vs[0]}")
            cap = self.width - 2
            prev = vs[0]
            for i, v in enumerate(vs):
                if v < 0 or v > cap:
                    raise ValueError(f"schedule value {v} at position {i} outside 0..{cap}")
                if i and v > prev + 1:
                    raise ValueError(
                        f"schedule rises from {prev} to {v} at position {i}"
                    )
                prev = v

    def __len__(self):
        return len(self.values)


def count_schedules(length: int, width: int) -> int:
    """Number of step schedules of the given length and digit width, by
    dynamic programming over (position, current value).  The empty
    schedule counts once."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if width < 2:
        raise ValueError(f"width must be >= 2, got {width}")
    if length == 0:
        return 1
    cap = width - 2
    ways = [0] * (cap + 1)
    ways[0] = 1
    for _ in range(length - 1):
        # next value u is reachable from any current value v >= u-1
        suffix = [0] * (cap + 2)
        for v in range(cap, -1, -1):
            suffix[v] = suffix[v + 1] + ways[v]
        ways = [suffix[max(u - 1, 0)] for u in range(cap + 1)]
    return sum(ways)


def enumerate_schedules(length: int, width: int,
                        limit: int | None = SCHEDULE_ENUM_LIMIT) -> Iterator[StepSchedule]:
    """All step schedules in lexicographic order."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if width < 2:
        raise ValueError(f"width must be >= 2, got {width}")
    check_limit(length, limit, "schedule length")
    if length == 0:
        yield StepSchedule((), width)
        return
    cap = width - 2
    values = [0] * length

    def rec(i: int):
        if i == length:
            yield StepSchedule(tuple(values), width)
            return
        for v in range(0, min(values[i - 1] + 1, cap) + 1):
            values[i] = v
            yield from rec(i + 1)

    yield from rec(1)


def count_schedules_with_multiplicities(counts: Sequence[int]) -> int:
    """Number of step schedules in which value i occurs exactly counts[i]
    times, all counts positive: the product over consecutive value pairs of
    C(m_i + m_{i+1} - 1, m_i - 1).

    Interleaving the occurrences of i and i+1 independently for each i
    determines the schedule uniquely; each interleaving must start with i
    and is otherwise free.
    """
    counts = list(counts)
    if not counts:
        raise ValueError("need at least one multiplicity")
    if any(m <= 0 for m in counts):
        raise ValueError(f"all multiplicities must be positive, got {counts}")
    result = 1
    for i in range(len(counts) - 1):
        result *= comb(counts[i] + counts[i + 1] - 1, counts[i] - 1)
    return result


# ---------------------------------------------------------------------------
# Schedule-indexed paths
# ---------------------------------------------------------------------------

def schedule_to_path(a: int, b: int, schedule: StepSchedule, base: int,
                     width: int, edge_count: int) -> list[int]:
    """The path of edge_count edges from a to b indexed by the schedule.

    Phase 1 walks edge_count - 2*width steps driven by the schedule (each
    entry names the trailing-zero count after its step, which pins the step
    down).  The remaining 2*width steps descend to 0, rebuild the leading
    digits of b, and finish with unit increments on the last digit, padded
    so the total comes out exactly.

    Requires every base-digit of a and b to be at least edge_count, with
    differing leading digits, and edge_count < base; distinct schedules
    then give distinct vertex sequences.
    """
    n = base**width
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"endpoints {a},{b} outside 0..{n - 1}")
    if schedule.width != width or len(schedule) != edge_count - 2 * width:
        raise ValueError(
            f"schedule has parameters ({len(schedule)},{schedule.width}); "
            f"need ({edge_count - 2 * width},{width})"
        )
    if edge_count >= base:
        raise ValueError(f"edge count {edge_count} must be below the base {base}")
    da, db = _digits(a, base, width), _digits(b, base, width)
    if min(min(da), min(db)) < edge_count:
        raise ValueError(f"every digit of {a} and {b} must be >= {edge_count}")
    if da[0] == db[0]:
        raise ValueError(f"{a} and {b} must differ in their leading digit")

    path = [a]
    cur = a
    for g in schedule.values:
        q = _trailing_zeros(cur, base)
        if g == q + 1:
            cur = _zero_last_nonzero(cur, base)
        else:  # schedule validity gives g <= q here
            cur -= base**g
        path.append(cur)
    zeroing_steps = 0
    while cur != 0:
        cur = _zero_last_nonzero(cur, base)
        path.append(cur)
        zeroing_steps += 1
    for i in range(width - 1):
        cur += db[i] * base ** (width - 1 - i)
        path.append(cur)
    pad = width - zeroing_steps
    cur = b - pad
    path.append(cur)
    for _ in range(pad):
        cur += 1
        path.append(cur)

    if len(path) != edge_count + 1 or len(set(path)) != len(path):
        raise RuntimeError(
            f"schedule walk produced {len(path)} vertices with repeats for "
            f"a={a}, b={b}, schedule={schedule.values}; this is a bug"
        )
    for x, y in zip(path, path[1:]):
        if not _adjacent_by_rule(x, y, base, width):
            raise RuntimeError(
                f"consecutive labels {x},{y} are not adjacent under the digit "
                f"rules (base={base}, width={width}); this is a bug"
            )
    return path


def _adjacent_by_rule(x: int, y: int, base: int, width: int) -> bool:
    n = base**width
    if x == y:
        return False
    step = 1
    for _ in range(width):
        if x % step == 0 and y % step == 0 and (x - y) % n in (step, n - step):
            return True
        step *= base
    return (x != 0 and _zero_last_nonzero(x, base) == y) or (
        y != 0 and _zero_last_nonzero(y, base) == x
    )


def schedule_count_lower_bound_exact(edge_count: int) -> Fraction:
    """Exact rational evaluation of the closed-form floor
    2**(2k - 5t) / (2*sqrt(k))**t with t = floor(sqrt(k)), valid as a lower
    bound certificate because (2*sqrt(k))**sqrt(k) is at least the rational
    denominator used here."""
    k = edge_count
    t = isqrt(k)
    if k < 16 or t < 4:
        raise ValueError(f"need edge_count >= 16 so floor(sqrt) >= 4, got {k}")
    if t * t == k:
        denom = Fraction((2 * t) ** t)
    else:
        # rational lower bracket of sqrt(k), then the smaller exponent t
        root_floor = Fraction(isqrt(k * 4**30), 2**30)
        denom = (2 * root_floor) ** t
    return Fraction(2 ** (2 * k - 5 * t)) / denom


def schedule_count_lower_bound(edge_count: int) -> float:
    """Float view of schedule_count_lower_bound_exact, for reporting."""
    return float(schedule_count_lower_bound_exact(edge_count))


def admissible_pairs(base: int, width: int, edge_count: int,
                     exhaustive_cap: int = 10_000, sample_size: int = 100,
                     seed: int = 20240901) -> list[tuple[int, int]]:
    """Ordered endpoint pairs eligible for schedule_to_path: all digits in
    [edge_count, base-1] and differing leading digits.

    Exhaustive (sorted) when there are at most exhaustive_cap pairs,
    otherwise a reproducible fixed-seed sample of sample_size pairs.
    """
    if edge_count >= base:
        raise ValueError(f"edge count {edge_count} must be below the base {base}")
    lo, hi = edge_count, base - 1
    span = hi - lo + 1
    total = (span**width) * (span - 1) * span ** (width - 1)
    rng = random.Random(seed)

    def from_digits(ds):
        x = 0
        for d in ds:
            x = x * base + d
        return x

    if total <= exhaustive_cap:
        out = []
        for ad in itertools.product(range(lo, hi + 1), repeat=width):
            for bd in itertools.product(range(lo, hi + 1), repeat=width):
                if ad[0] != bd[0]:
                    out.append((from_digits(ad), from_digits(bd)))
        return out
    out = []
    seen = set()
    while len(out) < sample_size:
        ad = [rng.randint(lo, hi) for _ in range(width)]
        bd = [rng.randint(lo, hi) for _ in range(width)]
        if ad[0] == bd[0]:
            continue
        pair = (from_digits(ad), from_digits(bd))
        if pair in seen:
            continue
        seen.add(pair)
        out.append(pair)
    return out
