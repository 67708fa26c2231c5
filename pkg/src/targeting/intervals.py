"""Finite unions of closed subintervals of [0, 1] with Lebesgue measure.

An ``IntervalSet`` is an immutable, canonical value: intervals are sorted,
pairwise disjoint and separated by gaps of at least ``MERGE_GAP``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError

MERGE_GAP = 1e-12


@dataclass(frozen=True)
class IntervalSet:
    intervals: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        # Direct construction goes through the same canonicalisation as
        # ``normalize`` so that every instance satisfies the invariants.
        object.__setattr__(self, "intervals", _canonical(self.intervals))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def single(cls, lo: float, hi: float) -> "IntervalSet":
        return cls(((lo, hi),))

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        """Parse a literal such as ``"0.4,0.5;0.6,0.7"``.

        An empty or blank string denotes the empty set.
        """
        pairs = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = chunk.split(",")
            if len(parts) != 2:
                raise DomainError(f"malformed interval {chunk!r}; expected 'lo,hi'")
            try:
                lo, hi = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise DomainError(f"malformed interval {chunk!r}") from exc
            pairs.append((lo, hi))
        return normalize(pairs)

    def format(self, digits: int = 9) -> str:
        return ";".join(f"{lo:.{digits}g},{hi:.{digits}g}" for lo, hi in self.intervals)

    @property
    def measure(self) -> float:
        return measure(self)

    def __bool__(self):
        return bool(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __contains__(self, t: float) -> bool:
        return contains(self, t)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return intersect(self, other)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return union(self, other)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return difference(self, other)

    def __str__(self):
        if not self.intervals:
            return "{}"
        return "{" + ", ".join(f"[{lo:.9g},{hi:.9g}]" for lo, hi in self.intervals) + "}"


def _canonical(raw: Iterable[Sequence[float]]) -> tuple[tuple[float, float], ...]:
    pairs = []
    for pair in raw:
        if len(pair) != 2:
            raise DomainError(f"interval must be a (lo, hi) pair, got {pair!r}")
        lo, hi = float(pair[0]), float(pair[1])
        if not (0.0 <= lo <= 1.0 and 0.0 <= hi <= 1.0):
            raise DomainError(f"interval endpoints must lie in [0, 1], got ({lo}, {hi})")
        if lo > hi:
            raise DomainError(f"interval has lo > hi: ({lo}, {hi})")
        pairs.append((lo, hi))
    pairs.sort()
    merged: list[tuple[float, float]] = []
    for lo, hi in pairs:
        if merged and lo - merged[-1][1] < MERGE_GAP:
            prev_lo, prev_hi = merged[-1]
            merged[-1] = (prev_lo, max(prev_hi, hi))
        else:
            merged.append((lo, hi))
    return tuple(merged)


def normalize(raw: Iterable[Sequence[float]]) -> IntervalSet:
    """Sort and merge ``(lo, hi)`` pairs into canonical form.

    Degenerate pairs ``(x, x)`` are kept; they carry zero measure.
    """
    return IntervalSet(tuple(raw))


def measure(s: IntervalSet) -> float:
    return sum(hi - lo for lo, hi in s.intervals)


def _drop_degenerate(pairs):
    return IntervalSet(tuple((lo, hi) for lo, hi in pairs if hi > lo))


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out = []
    i = j = 0
    xs, ys = a.intervals, b.intervals
    while i < len(xs) and j < len(ys):
        lo = max(xs[i][0], ys[j][0])
        hi = min(xs[i][1], ys[j][1])
        if lo < hi:
            out.append((lo, hi))
        if xs[i][1] < ys[j][1]:
            i += 1
        else:
            j += 1
    return _drop_degenerate(out)


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return _drop_degenerate(a.intervals + b.intervals)


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out = []
    for lo, hi in a.intervals:
        cur = lo
        for blo, bhi in b.intervals:
            if bhi <= cur:
                continue
            if blo >= hi:
                break
            if blo > cur:
                out.append((cur, blo))
            cur = max(cur, bhi)
            if cur >= hi:
                break
        if cur < hi:
            out.append((cur, hi))
    return _drop_degenerate(out)


def contains(s: IntervalSet, t: float) -> bool:
    return any(lo <= t <= hi for lo, hi in s.intervals)


def complement_within(s: IntervalSet, lo: float, hi: float) -> IntervalSet:
    """Return ``[lo, hi]`` minus ``s``."""
    return difference(IntervalSet.single(lo, hi), s)
