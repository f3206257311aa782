"""Highest-weight partitions of B(Lambda_0) x B(Lambda_i) and their multiplicity tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .crystal import AffineWeight, ExtendedYoungDiagram, Partition, weight_of
from .qseries import QSeries, SeriesRangeError


class ConsistencyError(AssertionError):
    """Raised when two independent computations of the same quantity disagree."""


class NotMaximalError(ValueError):
    pass


def index_range(n: int, i: int) -> range:
    """The summand indices ``ceil(i/2) .. floor((n+i)/2)``."""
    return range((i + 1) // 2, (n + i) // 2 + 1)


def partner(n: int, i: int, t: int) -> int:
    return i - t if t <= i else n + i - t


def min_depth(n: int, i: int, t: int) -> int:
    return abs(i - t)


def min_cost(n: int, i: int, t: int) -> int:
    """Box count of the unique highest-weight partition at the smallest depth."""
    return (i - t) * (n - t) if t <= i else t * (t - i)


def _check_params(n: int, i: int) -> None:
    if n < 2 or not 0 <= i < n:
        raise ValueError(f"need n >= 2 and 0 <= i < n, got n={n}, i={i}")


def _check_t(n: int, i: int, t: int) -> None:
    if t not in index_range(n, i):
        r = index_range(n, i)
        raise ValueError(f"t={t} outside {r.start}..{r.stop - 1} for n={n}, i={i}")


@dataclass(frozen=True, order=True)
class WeightLabel:
    """The summand ``Lambda_t + Lambda_u - k delta``."""

    t: int
    u: int
    k: int

    def __str__(self) -> str:
        return f"Λ_{self.t} + Λ_{self.u} - {self.k}δ"


def is_maximal_partition(p: Partition, n: int, i: int) -> bool:
    runs = p.runs
    if not runs:
        return True
    if any(f >= n for _, f in runs):
        return False
    if (runs[0][0] - runs[0][1] + i) % n:
        return False
    return all(
        (f + g + lam - mu) % n == 0
        for (lam, f), (mu, g) in zip(runs, runs[1:])
    )


def enumerate_maximal(n: int, i: int, max_boxes: int) -> list[Partition]:
    """Every highest-weight partition with at most ``max_boxes`` boxes.

    Both congruences only couple neighbouring runs, so every prefix of a
    valid run sequence is itself valid and the search never backtracks
    out of a dead branch.  Ordered by box count, then parts in decreasing
    lexicographic order.
    """
    _check_params(n, i)
    if max_boxes < 0:
        raise ValueError("max_boxes must be nonnegative")
    found = [Partition()]
    for runs in _extend(n, i, [], max_boxes):
        found.append(Partition(tuple(runs)))
    found.sort(key=lambda p: (p.box_count, tuple(-x for x in p.parts)))
    return found


def _extend(n: int, i: int, runs: list[tuple[int, int]], budget: int) -> Iterator[list[tuple[int, int]]]:
    if not runs:
        for f in range(1, n):
            # lambda_1 - f_1 + i = 0 (mod n)
            lam = (f - i) % n or n
            while lam * f <= budget:
                nxt = [(lam, f)]
                yield nxt
                yield from _extend(n, i, nxt, budget - lam * f)
                lam += n
        return
    lam, f = runs[-1]
    for mu in range(lam - 1, 0, -1):
        g = -(f + lam - mu) % n
        if g == 0 or mu * g > budget:
            continue
        nxt = runs + [(mu, g)]
        yield nxt
        yield from _extend(n, i, nxt, budget - mu * g)


def weight_label(p: Partition, n: int, i: int) -> WeightLabel:
    """Summand label of a highest-weight partition.

    ``t`` and ``u`` come from the residues of ``lambda_l - s_(l-1) + i`` and
    ``i - s_l``; ``k`` is the number of 0-coloured boxes.  The result is
    checked against the weight obtained from the raw colour counts.
    """
    _check_params(n, i)
    if not is_maximal_partition(p, n, i):
        raise NotMaximalError(f"{p} is not a highest-weight partition for n={n}, i={i}")
    idx = index_range(n, i)
    if not p.runs:
        t = i if i in idx else 0
        label = WeightLabel(t, partner(n, i, t), 0)
    else:
        s_last = p.length
        s_prev = s_last - p.runs[-1][1]
        rho1 = (p.runs[-1][0] - s_prev + i) % n
        rho2 = (i - s_last) % n
        if rho1 == rho2:
            t = u = rho1
        elif rho1 in idx:
            t, u = rho1, rho2
        else:
            t, u = rho2, rho1
        if t not in idx or (t + u - i) % n:
            raise ConsistencyError(f"residues {rho1}, {rho2} of {p} give no valid label")
        d = ExtendedYoungDiagram(p, i, n)
        label = WeightLabel(t, u, d.color_counts()[0])
        direct = AffineWeight.fundamental(0, n) + weight_of(d)
        expected = (
            AffineWeight.fundamental(t, n)
            + AffineWeight.fundamental(u, n)
            - label.k * AffineWeight.delta(n)
        )
        if direct != expected:
            raise ConsistencyError(f"{p}: colour count gives {direct}, residues give {expected}")
    if label.k < min_depth(n, i, label.t):
        raise ConsistencyError(f"{p}: depth {label.k} below the minimum for t={label.t}")
    return label


@dataclass(frozen=True)
class MultiplicityTable:
    n: int
    i: int
    max_boxes: int
    entries: dict[WeightLabel, int] = field(default_factory=dict)
    completeness: dict[int, int] = field(default_factory=dict)

    def count(self, t: int, k: int) -> int:
        if k > self.completeness[t]:
            raise SeriesRangeError(f"b[t={t}, k={k}] needs more than {self.max_boxes} boxes")
        return self.entries.get(WeightLabel(t, partner(self.n, self.i, t), k), 0)

    def labels(self) -> list[WeightLabel]:
        return sorted(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())


def multiplicity_table(n: int, i: int, max_boxes: int) -> MultiplicityTable:
    entries: dict[WeightLabel, int] = {}
    for p in enumerate_maximal(n, i, max_boxes):
        lab = weight_label(p, n, i)
        entries[lab] = entries.get(lab, 0) + 1
    completeness = {}
    for t in index_range(n, i):
        r = min_depth(n, i, t)
        spare = max_boxes - min_cost(n, i, t)
        completeness[t] = r + spare // n if spare >= 0 else r - 1
    return MultiplicityTable(n, i, max_boxes, entries, completeness)


def series_from_table(tbl: MultiplicityTable, t: int) -> QSeries:
    """``B_t(q) = sum_k b[t, k] q^(k - r)`` on the range the table guarantees."""
    _check_t(tbl.n, tbl.i, t)
    r = min_depth(tbl.n, tbl.i, t)
    top = tbl.completeness[t]
    if top < r:
        raise SeriesRangeError(
            f"table with {tbl.max_boxes} boxes holds no complete coefficient for t={t}"
        )
    return QSeries.from_coeffs([tbl.count(t, k) for k in range(r, top + 1)])


def expected_rectangle(n: int, i: int, t: int) -> Partition:
    """``i - t`` rows of length ``n - t`` when ``t < i``; ``t`` rows of length ``t - i`` when ``t > i``."""
    if t < i:
        return Partition(((n - t, i - t),))
    if t > i:
        return Partition(((t - i, t),))
    return Partition()


def rectangle_check(n: int, i: int, t: int) -> Partition:
    _check_params(n, i)
    _check_t(n, i, t)
    r = min_depth(n, i, t)
    hits = [
        p for p in enumerate_maximal(n, i, min_cost(n, i, t))
        if weight_label(p, n, i) == WeightLabel(t, partner(n, i, t), r)
    ]
    if len(hits) != 1:
        raise ConsistencyError(f"n={n}, i={i}, t={t}: {len(hits)} partitions at minimal depth")
    want = expected_rectangle(n, i, t)
    if hits[0] != want:
        raise ConsistencyError(f"n={n}, i={i}, t={t}: found {hits[0]}, expected rectangle {want}")
    return hits[0]
