"""Theta-series side of the decomposition: the linear system for the B-series.

The principally specialised character identity expresses ``phi(q^n)`` as a
combination of the multiplicity series ``B_t(q^n)`` with theta-series
coefficients.  Splitting each theta series by the residue of its exponents
mod ``n`` gives the square system ``sum_t B_t(q) a_tj(q) = [j = i] phi(q)``,
which Cramer's rule solves whenever the residues of ``(j - i) j`` are
pairwise distinct over the index range.
"""
from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

from .decomp import (
    ConsistencyError,
    MultiplicityTable,
    index_range,
    min_cost,
    multiplicity_table,
    series_from_table,
)
from .qseries import (
    NotAUnitError,
    QSeries,
    ThetaSpec,
    det_series,
    dilate,
    euler_phi,
    first_mismatch,
    invert,
    mul,
    qshift,
    theta_expand,
    theta_normalized,
)


class UnsupportedParametersError(ValueError):
    """Raised when the residue classes collide and the system is not square."""


def psi_spec(n: int, i: int, t: int, j: int) -> ThetaSpec:
    """Theta specialisation of the residue-``j`` subseries, with ``q^(1/n)`` taken."""
    if not 0 <= j < n:
        raise ValueError(f"j={j} outside 0..{n - 1}")
    r = n * (n + 3) // 2 - 2 * t + i - (n + 2) * j
    s = n * (n + 1) // 2 + 2 * t - i + (n + 2) * j
    return ThetaSpec((-1) ** n, r, s)


def mu_exponent(t: int, i: int, k: int, n: int) -> int:
    # numerator may be negative; // floors toward -inf
    return k * (k - 1) // 2 + ((t + k - i) * (t + k)) // n


def _entry_shift(n: int, i: int, t: int, k: int) -> int:
    return mu_exponent(t, i, k, n) - (t - i if t <= i else 0)


def entry_indices(n: int, i: int, t: int, j: int) -> list[int]:
    """Theta indices ``k`` feeding ``a_tj``: ``j - t`` and ``i - j - t`` mod ``n``."""
    ks = [(j - t) % n, (i - j - t) % n]
    return ks[:1] if ks[0] == ks[1] else ks


def residue(n: int, i: int, j: int) -> int:
    return ((j - i) * j) % n


def a_entry(n: int, i: int, t: int, j: int, order: int) -> QSeries:
    """Coefficient of ``B_t`` in the residue-``(j-i)j`` equation."""
    idx = index_range(n, i)
    if t not in idx or j not in idx:
        raise ValueError(f"t={t}, j={j} must lie in {idx.start}..{idx.stop - 1}")
    total = QSeries.zero(order)
    for k in entry_indices(n, i, t, j):
        m = _entry_shift(n, i, t, k)
        term = qshift(theta_normalized(psi_spec(n, i, t, k), order - m), m)
        total = total + (-term if k % 2 else term)
    low = total.leading_exponent()
    if low is not None and low < 0:
        raise ConsistencyError(f"a[t={t}, j={j}] for n={n}, i={i} has a q^{low} term")
    return total.with_valuation(0) if total.valuation < 0 else total


@dataclass(frozen=True)
class AMatrix:
    """Rows indexed by the equation index ``j``, columns by ``t``."""

    n: int
    i: int
    indices: tuple[int, ...]
    entries: tuple[tuple[QSeries, ...], ...]
    order: int

    @property
    def dim(self) -> int:
        return len(self.indices)

    def entry(self, j: int, t: int) -> QSeries:
        return self.entries[self.indices.index(j)][self.indices.index(t)]

    def det(self) -> QSeries:
        return det_series(self.entries)

    def minor(self, j: int, t: int) -> list[list[QSeries]]:
        rj, ct = self.indices.index(j), self.indices.index(t)
        return [
            [e for c, e in enumerate(row) if c != ct]
            for r, row in enumerate(self.entries) if r != rj
        ]


def build_A(n: int, i: int, order: int) -> AMatrix:
    idx = tuple(index_range(n, i))
    rows = tuple(tuple(a_entry(n, i, t, j, order) for t in idx) for j in idx)
    return AMatrix(n, i, idx, rows, order)


def propmod_witness(n: int, i: int) -> tuple[int, int] | None:
    """A nontrivial solution of ``(j' - j)(j' + j - i) = 0 (mod n)``, if any."""
    for j in range(n):
        for jp in range(n):
            if (jp - j) * (jp + j - i) % n == 0 and jp != j and (jp + j - i) % n:
                return j, jp
    return None


def propmod_brute(n: int, i: int) -> bool:
    return propmod_witness(n, i) is None


def propmod_classify(n: int, i: int) -> bool:
    if isprime(n):
        return True
    if i % 2 == 0:
        return n % 2 == 0 and n > 4 and isprime(n // 2)
    return n & (n - 1) == 0


def cramer_B(n: int, i: int, t: int, order: int) -> QSeries:
    """``B_t(q) = (-1)^(i+t) phi(q) det(A without row i, column t) / det(A)``.

    ``det A`` may start at ``q^v`` with ``v > 0`` (first seen at ``n = 5``);
    the matrix is then built ``v`` terms deeper so the quotient still
    reaches ``q^order``.
    """
    if not propmod_classify(n, i):
        raise UnsupportedParametersError(
            f"residues of (j-i)j mod {n} collide for i={i}; the system is not square"
        )
    a = build_A(n, i, order)
    if t not in a.indices:
        raise ValueError(f"t={t} outside {a.indices}")
    det = a.det()
    v = det.leading_exponent()
    if v is None:
        raise NotAUnitError(f"det A vanishes through q^{order}")
    if v:
        a = build_A(n, i, order + v)
        det = a.det()
    if det[v] not in (1, -1):
        raise NotAUnitError(f"det A has leading coefficient {det[v]} at q^{v}")
    minor = a.minor(i, t)
    numer = det_series(minor) if minor else QSeries.one(a.order)
    pos = a.indices.index(i) + a.indices.index(t)
    numer = mul(euler_phi(a.order), numer)
    if pos % 2:
        numer = -numer
    out = mul(numer, invert(det, order)).truncate(order)
    low = out.leading_exponent()
    if low is not None and low < 0:
        raise ConsistencyError(f"B_{t} for n={n}, i={i} has a q^{low} term")
    return out.with_valuation(0) if out.valuation < 0 else out


# the master character identity ---------------------------------------------


def eq2_factor(n: int, i: int, t: int, order: int) -> QSeries:
    """``q^cost f(-q^(2t-i+1), -q^(n-2t+i+1))``, the coefficient of ``B_t(q^n)``."""
    spec = ThetaSpec(-1, 2 * t - i + 1, n - 2 * t + i + 1)
    cost = min_cost(n, i, t)
    if order < cost:
        return QSeries.zero(order)
    return qshift(theta_expand(spec, order - cost), cost)


def leq_factor(n: int, i: int, t: int, order: int) -> QSeries:
    """The same coefficient split into residue classes ``sum_k +-q^E Psi_tk(q^n)``."""
    total = QSeries.zero(order)
    for k in range(n):
        e = n * k * (k - 1) // 2 + (t + k - i) * (t + k) - (n * (t - i) if t <= i else 0)
        # Psi(q^n) through order - e needs Psi through floor((order - e) / n)
        body = theta_normalized(psi_spec(n, i, t, k), (order - e) // n)
        term = _pad_to(qshift(dilate(body, n), e), order, n)
        total = total + (-term if k % 2 else term)
    return total


def _pad_to(a: QSeries, order: int, n: int) -> QSeries:
    # the gap after a dilated series holds structural zeros up to the next multiple of n
    if order - a.order >= n:
        raise ConsistencyError("dilated series does not reach the requested order")
    return QSeries(a.valuation, a.coeffs + (0,) * (order - a.order))


def residue_sorted_factor(n: int, i: int, t: int, order: int) -> QSeries:
    """``sum_j q^((j-i)j mod n) a_tj(q^n)`` over the index range."""
    total = QSeries.zero(order)
    for j in index_range(n, i):
        res = residue(n, i, j)
        if res > order:
            continue
        ent = a_entry(n, i, t, j, (order - res) // n)
        term = _pad_to(qshift(dilate(ent, n), res), order, n)
        total = total + term
    return total


@dataclass(frozen=True)
class MasterReport:
    n: int
    i: int
    order: int
    theta_mismatch: int | None
    psi_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.theta_mismatch is None and self.psi_mismatch is None

    def __str__(self) -> str:
        if self.ok:
            return f"n={self.n} i={self.i}: phi(q^{self.n}) reproduced through q^{self.order}"
        return (
            f"n={self.n} i={self.i}: mismatch at q^{self.theta_mismatch} (theta form), "
            f"q^{self.psi_mismatch} (residue form)"
        )


def _dilated_B(tbl: MultiplicityTable, t: int, order: int) -> QSeries:
    """``B_t(q^n)`` through ``q^order``, read only where the table is complete."""
    n = tbl.n
    need = order // n
    b = series_from_table(tbl, t)
    if b.order < need:
        raise ConsistencyError(f"table for t={t} complete through {b.order} terms, need {need}")
    return _pad_to(dilate(b.truncate(need), n), order, n)


def verify_master(n: int, i: int, order: int, tbl: MultiplicityTable | None = None) -> MasterReport:
    """Check ``phi(q^n) = sum_t B_t(q^n) * factor_t(q)`` with enumerated ``B_t``.

    The factor is taken both as one theta series and as its residue
    decomposition into ``Psi`` series.  Holds for every ``(n, i)``.
    """
    if tbl is None:
        tbl = multiplicity_table(n, i, order)
    if (tbl.n, tbl.i) != (n, i):
        raise ValueError(f"table is for n={tbl.n}, i={tbl.i}")
    target = _pad_to(dilate(euler_phi(order // n), n), order, n)
    theta_side = QSeries.zero(order)
    psi_side = QSeries.zero(order)
    for t in index_range(n, i):
        cost = min_cost(n, i, t)
        if cost > order:
            continue
        b = _dilated_B(tbl, t, order - cost)
        theta_f = eq2_factor(n, i, t, order)
        psi_f = leq_factor(n, i, t, order).with_valuation(cost)
        theta_side = theta_side + mul(b, theta_f)
        psi_side = psi_side + mul(b, psi_f)
    return MasterReport(
        n, i, order,
        first_mismatch(theta_side, target, 0, order),
        first_mismatch(psi_side, target, 0, order),
    )
