"""Lattice paths with prescribed north-run lengths and their statistics.

A path is encoded by its run-length vector ``(k_1, ..., k_m)`` together with
the rank sequence ``(r_1, ..., r_m)``, where ``r_i`` is ``y - x`` at the start
of the i-th north run.  The rank sequence determines the path: after run ``i``
the path takes ``r_i + k_i - r_{i+1}`` unit east steps (with ``r_{m+1} = 0``).

Two independent routes to the statistics are provided: the general
rank-tableau bounce algorithm (:func:`path_stats`) and closed-form piecewise
formulas for the three supported shape families (:func:`closed_stats_three`,
:func:`closed_stats_k4`, :func:`closed_stats_kaaa`).  The test suite checks
them against each other exhaustively on small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .errors import DomainError, InternalInvariantError


@dataclass(frozen=True)
class KVector:
    """An ordered tuple of positive run lengths."""

    parts: Tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise DomainError("run-length vector must be nonempty")
        if any(p < 1 for p in parts):
            raise DomainError(f"run lengths must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class DyckPath:
    """A path above the diagonal, stored as its rank sequence."""

    kvec: KVector
    ranks: Tuple[int, ...]

    def __init__(self, kvec: KVector, ranks: Sequence[int]):
        if not isinstance(kvec, KVector):
            kvec = KVector(kvec)
        ranks = tuple(int(r) for r in ranks)
        if len(ranks) != kvec.m:
            raise DomainError(f"need {kvec.m} ranks, got {len(ranks)}")
        if ranks[0] != 0:
            raise DomainError("first rank must be 0")
        for i in range(kvec.m):
            nxt = ranks[i + 1] if i + 1 < kvec.m else 0
            if nxt < 0 or nxt > ranks[i] + kvec.parts[i]:
                raise DomainError(
                    f"rank sequence {ranks} invalid for runs {kvec.parts} at position {i + 1}"
                )
        object.__setattr__(self, "kvec", kvec)
        object.__setattr__(self, "ranks", ranks)

    @property
    def east_runs(self) -> Tuple[int, ...]:
        """Number of unit east steps after each north run; sums to n."""
        ranks, parts = self.ranks, self.kvec.parts
        out = []
        for i in range(len(parts)):
            nxt = ranks[i + 1] if i + 1 < len(parts) else 0
            out.append(ranks[i] + parts[i] - nxt)
        return tuple(out)

    @property
    def area(self) -> int:
        return sum(self.ranks)


@dataclass(frozen=True)
class BounceTrace:
    """Record of one run of the rank-tableau bounce algorithm."""

    bounce_points: Tuple[Tuple[int, int], ...]
    leg_lengths: Tuple[int, ...]
    horizontal_counts: Tuple[int, ...]
    tableau: Tuple[Tuple[int, ...], ...]

    @property
    def bounce(self) -> int:
        return sum(i * v for i, v in enumerate(self.leg_lengths))

    def first_row_sum(self) -> int:
        return sum(column[0] for column in self.tableau)


class PathStats(NamedTuple):
    area: int
    bounce: int
    trace: BounceTrace


def enumerate_paths(kvec: KVector) -> Iterator[DyckPath]:
    """Yield every valid path, in descending lexicographic rank order.

    The first path emitted is the one hugging the staircase (maximal ranks)
    and the last is the one hugging the diagonal (all ranks zero).
    """
    if not isinstance(kvec, KVector):
        kvec = KVector(kvec)
    parts = kvec.parts
    m = kvec.m

    def extend(prefix: List[int]) -> Iterator[DyckPath]:
        i = len(prefix)
        if i == m:
            yield DyckPath(kvec, tuple(prefix))
            return
        top = prefix[-1] + parts[i - 1]
        for r in range(top, -1, -1):
            prefix.append(r)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([0])


def count_paths(kvec: KVector) -> int:
    """Number of valid rank sequences, without enumerating them."""
    if not isinstance(kvec, KVector):
        kvec = KVector(kvec)
    ways = [1]  # ways[r] = rank sequences so far ending at rank r
    for k in kvec.parts[:-1]:
        prefix = [0]
        for w in ways:
            prefix.append(prefix[-1] + w)
        # the next rank r' needs a predecessor r with r + k >= r'
        ways = [prefix[-1] - prefix[max(0, rp - k)] for rp in range(len(ways) + k)]
    return sum(ways)


def path_stats(path: DyckPath) -> PathStats:
    """Area plus the bounce statistic computed by the rank-tableau algorithm.

    The bounce path starts at the origin and alternates between vertical legs
    (stopping at the start of an east step of the path) and horizontal moves
    whose length is read off the tableau.  Each vertical leg consumes whole
    north runs; run ``j`` fills a tableau column with ``k_j + 1`` consecutive
    values starting at the leg index.
    """
    kvec, ranks = path.kvec, path.ranks
    parts = kvec.parts
    n, m = kvec.n, kvec.m

    # run j spans heights [heights[j], heights[j+1]]
    heights = [0]
    for k in parts:
        heights.append(heights[-1] + k)
    run_of_height = {h: j for j, h in enumerate(heights)}

    # east run j starts at x = east_x[j] at height heights[j+1]
    east = path.east_runs
    east_x = []
    x = 0
    for a in east:
        east_x.append(x)
        x += a

    def stop_height(px: int, py: int) -> Optional[int]:
        best = None
        for j in range(m):
            if east[j] and east_x[j] <= px < east_x[j] + east[j]:
                h = heights[j + 1]
                if h >= py and (best is None or h < best):
                    best = h
        return best

    columns: List[List[int]] = [[] for _ in range(m)]
    filled = 0
    points = [(0, 0)]
    legs: List[int] = []
    horiz: List[int] = []
    px, py = 0, 0
    for step in range(2 * (n + m) + 4):
        if (px, py) == (n, n):
            break
        qy = stop_height(px, py)
        if qy is None:
            raise InternalInvariantError(
                f"bounce leg from ({px},{py}) found no east step on path {ranks} of {parts}"
            )
        v = run_of_height[qy] - run_of_height[py]
        for _ in range(v):
            columns[filled] = list(range(step, step + parts[filled] + 1))
            filled += 1
        h = sum(column.count(step + 1) for column in columns[:filled])
        legs.append(v)
        horiz.append(h)
        px, py = px + h, qy
        points.append((px, py))
    else:
        raise InternalInvariantError(
            f"bounce algorithm did not reach ({n},{n}) on path {ranks} of {parts}"
        )

    trace = BounceTrace(
        bounce_points=tuple(points),
        leg_lengths=tuple(legs),
        horizontal_counts=tuple(horiz),
        tableau=tuple(tuple(col) for col in columns),
    )
    if sum(legs) != m:
        raise InternalInvariantError(f"bounce legs consumed {sum(legs)} of {m} runs")
    bounce = sum(i * v for i, v in enumerate(legs))
    if bounce != trace.first_row_sum():
        raise InternalInvariantError("bounce disagrees with tableau first row")
    return PathStats(area=sum(ranks), bounce=bounce, trace=trace)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# -- closed forms, one per shape family -------------------------------------
#
# Each formula is valid on the closure of the path region (sizes may be 0),
# which the cone catalog relies on; the rank inequalities are still enforced.


def stats_three(k1: int, k2: int, k3: int, r2: int, r3: int) -> Tuple[int, int]:
    """Area and bounce for a three-run path given the free ranks r2, r3."""
    if min(k1, k2, k3) < 0:
        raise DomainError("run lengths must be nonnegative")
    if not (0 <= r2 <= k1):
        raise DomainError(f"need 0 <= r2 <= k1, got r2={r2}, k1={k1}")
    if not (0 <= r3 <= r2 + k2):
        raise DomainError(f"need 0 <= r3 <= r2 + k2, got r3={r3}")
    area = r2 + r3
    gap = r2 + k2 - r3
    if gap >= 2 * min(r2, k2):
        bounce = 2 * (k1 - r2) + gap - min(r2, k2)
    else:
        bounce = 2 * (k1 - r2) + _ceil_div(gap, 2)
    return area, bounce


def closed_stats_three(k1: int, k2: int, k3: int, r2: int, r3: int) -> Tuple[int, int]:
    return stats_three(k1, k2, k3, r2, r3)


def stats_k4(k: int, a: int, b: int, c: int) -> Tuple[int, int]:
    """Area and bounce for four equal runs of length k.

    The coordinates relate to ranks by ``r2 = k - a``, ``r3 = 2k - a - b``,
    ``r4 = 3k - a - b - c``.
    """
    if not (0 <= a <= k):
        raise DomainError(f"need 0 <= a <= k, got a={a}, k={k}")
    if not (0 <= b <= 2 * k - a):
        raise DomainError(f"need 0 <= b <= 2k - a, got b={b}")
    if not (0 <= c <= 3 * k - a - b):
        raise DomainError(f"need 0 <= c <= 3k - a - b, got c={c}")
    area = 6 * k - 3 * a - 2 * b - c
    if b >= 2 * k - 2 * a:
        if c >= 4 * k - 2 * a - 2 * b:
            bounce = 6 * a + 3 * b + c - 4 * k
        else:
            bounce = 5 * a + 2 * b + _ceil_div(c, 2) - 2 * k
    elif b % 2 == 0:
        if 2 * c >= 6 * k - 2 * a - 3 * b:
            bounce = 4 * a + 2 * b + c - 2 * k
        elif 2 * c >= 6 * k - 6 * a - 3 * b:
            bounce = 2 * a + b // 2 + k + _ceil_div(6 * a + 3 * b + 2 * c - 6 * k, 4)
        else:
            bounce = 3 * a + b + _ceil_div(c, 3)
    else:
        half = 3 * (b + 1) // 2
        if c >= 3 * k - a - half + 1:
            bounce = 4 * a + 2 * b + c - 2 * k + 1
        elif c >= 3 * k - 3 * a - half + 1:
            bounce = 2 * a + (b + 1) // 2 + k + _ceil_div(3 * a + half + c - 3 * k - 1, 2)
        else:
            bounce = 3 * a + b + 1 + _ceil_div(c - 1, 3)
    return area, bounce


def closed_stats_k4(k: int, a: int, b: int, c: int) -> Tuple[int, int]:
    return stats_k4(k, a, b, c)


def stats_kaaa(k: int, m: int, a: int, b: int, c: int) -> Tuple[int, int]:
    """Area and bounce for runs (k, k+m, k+m, k+m).

    Coordinates relate to ranks by ``r2 = k - a``, ``r3 = 2k + m - a - b``,
    ``r4 = 3k + 2m - a - b - c``.  Specializes to :func:`stats_k4` at m = 0.
    """
    if m < 0:
        raise DomainError(f"need m >= 0, got {m}")
    if not (0 <= a <= k):
        raise DomainError(f"need 0 <= a <= k, got a={a}, k={k}")
    if not (0 <= b <= 2 * k + m - a):
        raise DomainError(f"need 0 <= b <= 2k + m - a, got b={b}")
    if not (0 <= c <= 3 * k + 2 * m - a - b):
        raise DomainError(f"need 0 <= c <= 3k + 2m - a - b, got c={c}")
    area = 6 * k + 3 * m - 3 * a - 2 * b - c
    hb = _ceil_div(b, 2)
    if b == 0:
        if c == 0:
            bounce = 3 * a
        elif c <= 3 * (k - a):
            bounce = 3 * a + _ceil_div(c, 3)
        else:
            bounce = 2 * a + k + _ceil_div(c - 3 * (k - a), 2)
    elif b <= 2 * (k - a):
        if c == 0:
            bounce = 3 * a + 2 * hb
        elif b % 2 == 0:
            if c <= 3 * (k - a - hb):
                bounce = 3 * a + 2 * hb + _ceil_div(c, 3)
            elif c <= 3 * (k - hb) - a + 2 * m:
                bounce = 2 * a + hb + k + _ceil_div(c - 3 * (k - a - hb), 2)
            else:
                bounce = c - 2 * k + 4 * a + 4 * hb - m
        else:
            if c - 1 <= 3 * (k - a - hb):
                bounce = 3 * a + 2 * hb + _ceil_div(c - 1, 3)
            elif c - 1 <= 3 * (k - hb) - a + 2 * m:
                bounce = 2 * a + hb + k + _ceil_div(c - 1 - 3 * (k - a - hb), 2)
            else:
                bounce = c - 1 - 2 * k + 4 * a + 4 * hb - m
    else:
        if c <= 2 * (2 * k - a + m - b):
            bounce = 5 * a + 2 * b - 2 * k + _ceil_div(c, 2)
        else:
            bounce = 6 * a + 3 * b - 4 * k + c - m
    return area, bounce


def closed_stats_kaaa(k: int, m: int, a: int, b: int, c: int) -> Tuple[int, int]:
    return stats_kaaa(k, m, a, b, c)
