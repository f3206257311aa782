"""Extended Young diagrams as a crystal for level-one affine sl(n) modules.

Boxes are coloured ``(charge + column - row) mod n`` with rows and columns
counted from 1 at the top-left corner.  The j-signature is read over the
columns from right to left, starting at the one empty column just past the
first row; f_j adds a box at the first surviving ``+`` of the reduced
signature and e_j removes the box at the last surviving ``-``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class BoxError(IndexError):
    """Raised when asking for the colour of a box that is not in the diagram."""


class RegularityError(ValueError):
    """Raised when a crystal operation is applied to a diagram that is not n-regular."""


_RUN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class Partition:
    """A partition stored as runs ``((lambda_1, f_1), ..., (lambda_l, f_l))``."""

    runs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        runs = tuple((int(p), int(f)) for p, f in self.runs)
        for p, f in runs:
            if p < 1 or f < 1:
                raise ValueError(f"run {p}^{f} must have positive part and multiplicity")
        for (p, _), (q, _) in zip(runs, runs[1:]):
            if p <= q:
                raise ValueError(f"parts must strictly decrease between runs: {runs}")
        object.__setattr__(self, "runs", runs)

    @classmethod
    def from_parts(cls, parts) -> Partition:
        parts = sorted((int(p) for p in parts if p), reverse=True)
        runs: list[list[int]] = []
        for p in parts:
            if runs and runs[-1][0] == p:
                runs[-1][1] += 1
            else:
                runs.append([p, 1])
        return cls(tuple((p, f) for p, f in runs))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"5,4,1^2"``; an empty string, ``"()"`` or ``"0"`` is the empty partition."""
        body = text.strip().strip("()").strip()
        if body in ("", "0", "∅"):
            return cls()
        parts: list[int] = []
        for chunk in body.split(","):
            m = _RUN.match(chunk)
            if not m:
                raise ValueError(f"malformed partition run {chunk!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        if any(p == 0 for p in parts):
            raise ValueError("parts must be positive")
        return cls.from_parts(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(p for p, f in self.runs for _ in range(f))

    @property
    def box_count(self) -> int:
        return sum(p * f for p, f in self.runs)

    @property
    def length(self) -> int:
        return sum(f for _, f in self.runs)

    def __str__(self) -> str:
        if not self.runs:
            return "()"
        return "(" + ",".join(str(p) if f == 1 else f"{p}^{f}" for p, f in self.runs) + ")"


class Signature(NamedTuple):
    raw: str
    columns: tuple[int, ...]
    reduced: str
    reduced_columns: tuple[int, ...]

    @property
    def epsilon(self) -> int:
        return self.reduced.count("-")

    @property
    def phi(self) -> int:
        return self.reduced.count("+")


@dataclass(frozen=True)
class AffineWeight:
    """An element ``sum_j c_j Lambda_j + d delta`` of the weight lattice."""

    lambda_coeffs: tuple[int, ...]
    delta_coeff: int = 0

    @classmethod
    def fundamental(cls, j: int, n: int) -> AffineWeight:
        c = [0] * n
        c[j % n] = 1
        return cls(tuple(c))

    @classmethod
    def simple_root(cls, j: int, n: int) -> AffineWeight:
        """``alpha_j = 2 Lambda_j - Lambda_(j-1) - Lambda_(j+1) + [j = 0] delta``."""
        c = [0] * n
        c[j % n] += 2
        c[(j - 1) % n] -= 1
        c[(j + 1) % n] -= 1
        return cls(tuple(c), 1 if j % n == 0 else 0)

    @classmethod
    def delta(cls, n: int) -> AffineWeight:
        return cls((0,) * n, 1)

    @property
    def n(self) -> int:
        return len(self.lambda_coeffs)

    @property
    def level(self) -> int:
        return sum(self.lambda_coeffs)

    def __add__(self, other: AffineWeight) -> AffineWeight:
        return AffineWeight(
            tuple(a + b for a, b in zip(self.lambda_coeffs, other.lambda_coeffs, strict=True)),
            self.delta_coeff + other.delta_coeff,
        )

    def __sub__(self, other: AffineWeight) -> AffineWeight:
        return self + other * -1

    def __mul__(self, k: int) -> AffineWeight:
        return AffineWeight(tuple(k * a for a in self.lambda_coeffs), k * self.delta_coeff)

    __rmul__ = __mul__

    def __str__(self) -> str:
        pieces = [(c, f"Λ_{j}") for j, c in enumerate(self.lambda_coeffs) if c]
        if self.delta_coeff:
            pieces.append((self.delta_coeff, "δ"))
        if not pieces:
            return "0"
        out = []
        for c, sym in pieces:
            mag = "" if abs(c) == 1 else str(abs(c))
            if not out:
                out.append(("-" if c < 0 else "") + mag + sym)
            else:
                out.append(("- " if c < 0 else "+ ") + mag + sym)
        return " ".join(out)


@dataclass(frozen=True)
class ExtendedYoungDiagram:
    shape: Partition
    charge: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank n must be at least 2, got {self.n}")
        if not 0 <= self.charge < self.n:
            raise ValueError(f"charge {self.charge} outside [0, {self.n})")

    @classmethod
    def from_parts(cls, parts, charge: int, n: int) -> ExtendedYoungDiagram:
        return cls(Partition.from_parts(parts), charge, n)

    def is_regular(self) -> bool:
        return all(f < self.n for _, f in self.shape.runs)

    def height(self, c: int) -> int:
        """Number of boxes in column ``c >= 1``."""
        if c <= 0:
            raise ValueError("column heights are defined for c >= 1")
        return sum(f for p, f in self.shape.runs if p >= c)

    def color(self, row: int, col: int) -> int:
        return (self.charge + col - row) % self.n

    def color_counts(self) -> list[int]:
        counts = [0] * self.n
        for row, length in enumerate(self.shape.parts, start=1):
            full, rest = divmod(length, self.n)
            for j in range(self.n):
                counts[j] += full
            for col in range(1, rest + 1):
                counts[self.color(row, col)] += 1
        return counts

    def __str__(self) -> str:
        return f"{self.shape} charge {self.charge} (n={self.n})"


def color_at(d: ExtendedYoungDiagram, row: int, col: int) -> int:
    parts = d.shape.parts
    if row < 1 or col < 1 or row > len(parts) or col > parts[row - 1]:
        raise BoxError(f"no box at row {row}, column {col} in {d.shape}")
    return d.color(row, col)


def _require_regular(d: ExtendedYoungDiagram) -> None:
    if not d.is_regular():
        raise RegularityError(f"{d.shape} is not {d.n}-regular")


def _heights(d: ExtendedYoungDiagram) -> list[int]:
    """``h[c]`` for ``c = 0 .. lambda_1 + 2``, with ``h[0]`` standing in for infinity."""
    parts = d.shape.parts
    width = parts[0] if parts else 0
    h = [len(parts) + 1] + [0] * (width + 2)
    for p in parts:
        for c in range(1, p + 1):
            h[c] += 1
    return h


def addable_columns(d: ExtendedYoungDiagram) -> list[tuple[int, int]]:
    """``(column, colour of the box that would be added)``, rightmost column first."""
    h = _heights(d)
    width = len(h) - 3
    return [(c, d.color(h[c] + 1, c)) for c in range(width + 1, 0, -1) if h[c - 1] > h[c]]


def removable_columns(d: ExtendedYoungDiagram) -> list[tuple[int, int]]:
    """``(column, colour of its bottom box)``, rightmost column first."""
    h = _heights(d)
    width = len(h) - 3
    return [(c, d.color(h[c], c)) for c in range(width, 0, -1) if h[c] > h[c + 1]]


def j_signature(d: ExtendedYoungDiagram, j: int) -> Signature:
    _require_regular(d)
    h = _heights(d)
    width = len(h) - 3
    raw: list[str] = []
    cols: list[int] = []
    for c in range(width + 1, 0, -1):
        if h[c - 1] > h[c] and d.color(h[c] + 1, c) == j:
            raw.append("+")
            cols.append(c)
        elif h[c] > h[c + 1] and d.color(h[c], c) == j:
            raw.append("-")
            cols.append(c)
    stack: list[tuple[str, int]] = []
    for sign, c in zip(raw, cols):
        if sign == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((sign, c))
    return Signature(
        "".join(raw),
        tuple(cols),
        "".join(s for s, _ in stack),
        tuple(c for _, c in stack),
    )


def _with_parts(d: ExtendedYoungDiagram, parts: list[int]) -> ExtendedYoungDiagram:
    return ExtendedYoungDiagram(Partition.from_parts(parts), d.charge, d.n)


def apply_f(d: ExtendedYoungDiagram, j: int) -> ExtendedYoungDiagram | None:
    sig = j_signature(d, j)
    pos = sig.reduced.find("+")
    if pos < 0:
        return None
    c = sig.reduced_columns[pos]
    parts = list(d.shape.parts)
    row = d.height(c) if c <= (parts[0] if parts else 0) else 0
    if row == len(parts):
        parts.append(1)
    else:
        parts[row] += 1
    return _with_parts(d, parts)


def apply_e(d: ExtendedYoungDiagram, j: int) -> ExtendedYoungDiagram | None:
    sig = j_signature(d, j)
    pos = sig.reduced.rfind("-")
    if pos < 0:
        return None
    c = sig.reduced_columns[pos]
    parts = list(d.shape.parts)
    parts[d.height(c) - 1] -= 1
    return _with_parts(d, parts)


def epsilon(d: ExtendedYoungDiagram, j: int) -> int:
    return j_signature(d, j).epsilon


def phi(d: ExtendedYoungDiagram, j: int) -> int:
    return j_signature(d, j).phi


def weight_of(d: ExtendedYoungDiagram) -> AffineWeight:
    """``Lambda_charge - sum_j (#j-coloured boxes) alpha_j``."""
    w = AffineWeight.fundamental(d.charge, d.n)
    for j, m in enumerate(d.color_counts()):
        if m:
            w = w - m * AffineWeight.simple_root(j, d.n)
    return w


def maximal_by_columns(d: ExtendedYoungDiagram) -> bool:
    """Highest-weight test from the column colours alone.

    The rightmost removable column must be 0-removable, and for every k the
    colour of the k-th addable column must match that of the (k+1)-st
    removable column, both counted from the right.
    """
    _require_regular(d)
    adm = addable_columns(d)
    rem = removable_columns(d)
    if not rem:
        return True
    if rem[0][1] != 0:
        return False
    return all(adm[k][1] == rem[k + 1][1] for k in range(min(len(adm), len(rem) - 1)))


def maximal_by_operators(d: ExtendedYoungDiagram) -> bool:
    """``e_j d = 0`` for ``j != 0`` and ``e_0^2 d = 0``."""
    return all(epsilon(d, j) <= (1 if j == 0 else 0) for j in range(d.n))


def regular_partitions(n: int, boxes: int) -> Iterator[Partition]:
    """All partitions of ``boxes`` with every multiplicity below ``n``."""
    for runs in _regular_runs(n, boxes, boxes):
        yield Partition(tuple(runs))


def _regular_runs(n: int, boxes: int, max_part: int) -> Iterator[list[tuple[int, int]]]:
    if boxes == 0:
        yield []
        return
    for p in range(min(max_part, boxes), 0, -1):
        for f in range(1, min(n - 1, boxes // p) + 1):
            for rest in _regular_runs(n, boxes - p * f, p - 1):
                yield [(p, f)] + rest
