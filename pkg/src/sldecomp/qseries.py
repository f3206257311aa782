"""Truncated Laurent series in one variable ``q`` with exact integer coefficients.

A :class:`QSeries` stores the coefficients on an explicit inclusive exponent
range ``[valuation, order]``.  Coefficients below ``valuation`` are zero by
construction; coefficients above ``order`` are *unknown*, and reading them is
an error.  Binary operations shrink the known range to what both operands
actually determine, so an identity check can never pass on data that was
silently cut off.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class SeriesRangeError(ValueError):
    """Raised when a coefficient outside the known exponent range is needed."""


class NotAUnitError(ArithmeticError):
    """Raised when inverting a series whose leading coefficient is not +-1."""


class DivergentThetaError(ValueError):
    """Raised for a theta specialisation with r + s <= 0."""


class UnsupportedFormError(ValueError):
    """Raised when the product form is requested for negative exponents."""


class ShapeError(ValueError):
    """Raised for empty or ragged matrices."""


@dataclass(frozen=True)
class QSeries:
    valuation: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesRangeError("a QSeries needs at least one tracked exponent")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))

    # construction -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], valuation: int = 0) -> QSeries:
        return cls(valuation, tuple(int(c) for c in coeffs))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int, valuation: int | None = None) -> QSeries:
        """Build from ``{exponent: coefficient}``; exponents above ``order`` are dropped."""
        if valuation is None:
            valuation = min([e for e in terms if e <= order] + [min(0, order)])
        if order < valuation:
            raise SeriesRangeError(f"order {order} below valuation {valuation}")
        coeffs = [0] * (order - valuation + 1)
        for e, c in terms.items():
            if e > order:
                continue
            if e < valuation:
                raise SeriesRangeError(f"term q^{e} below valuation {valuation}")
            coeffs[e - valuation] += c
        return cls(valuation, tuple(coeffs))

    @classmethod
    def zero(cls, order: int, valuation: int = 0) -> QSeries:
        return cls(valuation, (0,) * (order - valuation + 1))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> QSeries:
        lo = min(exponent, order, 0)
        return cls.from_terms({exponent: coeff}, order, valuation=lo)

    # access --------------------------------------------------------------

    @property
    def order(self) -> int:
        return self.valuation + len(self.coeffs) - 1

    def __getitem__(self, e: int) -> int:
        if e > self.order:
            raise SeriesRangeError(f"coefficient of q^{e} unknown (order {self.order})")
        if e < self.valuation:
            return 0
        return self.coeffs[e - self.valuation]

    def coefficients(self, lo: int, hi: int) -> list[int]:
        return [self[e] for e in range(lo, hi + 1)]

    def terms(self) -> dict[int, int]:
        return {self.valuation + k: c for k, c in enumerate(self.coeffs) if c}

    def leading_exponent(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return self.valuation + k
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise SeriesRangeError(f"cannot extend order {self.order} to {order}")
        if order < self.valuation:
            raise SeriesRangeError(f"order {order} below valuation {self.valuation}")
        return QSeries(self.valuation, self.coeffs[: order - self.valuation + 1])

    def with_valuation(self, valuation: int) -> QSeries:
        """Re-anchor the stored range at ``valuation``.

        Lowering pads with zeros; raising is allowed only over zero coefficients.
        """
        if valuation <= self.valuation:
            return QSeries(valuation, (0,) * (self.valuation - valuation) + self.coeffs)
        if valuation > self.order:
            raise SeriesRangeError(f"valuation {valuation} beyond order {self.order}")
        cut = valuation - self.valuation
        if any(self.coeffs[:cut]):
            raise SeriesRangeError(f"nonzero coefficients below q^{valuation}")
        return QSeries(valuation, self.coeffs[cut:])

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, self.order, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries(self.valuation, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, self.order, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.valuation, tuple(other * c for c in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_series(self)


def add(a: QSeries, b: QSeries) -> QSeries:
    lo = min(a.valuation, b.valuation)
    hi = min(a.order, b.order)
    if hi < lo:
        raise SeriesRangeError("operands share no exponent range")
    return QSeries(lo, tuple(a[e] + b[e] for e in range(lo, hi + 1)))


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, known through ``min(lead(a) + b.order, lead(b) + a.order)``.

    Stored zeros below the leading term are known zeros, so they do not
    limit the range.
    """
    la, lb = _lead_or_past(a), _lead_or_past(b)
    lo = a.valuation + b.valuation
    hi = max(lo, min(la + b.order, lb + a.order))
    out = [0] * (hi - lo + 1)
    bc = b.coeffs
    for ka, ca in enumerate(a.coeffs):
        if not ca:
            continue
        limit = hi - lo - ka
        if limit < 0:
            break
        for kb in range(min(limit + 1, len(bc))):
            cb = bc[kb]
            if cb:
                out[ka + kb] += ca * cb
    return QSeries(lo, tuple(out))


def _lead_or_past(a: QSeries) -> int:
    lead = a.leading_exponent()
    return a.order + 1 if lead is None else lead


def invert(a: QSeries, target_order: int) -> QSeries:
    """Return ``b`` with ``a * b == 1`` through ``q^target_order``.

    The leading nonzero coefficient of ``a`` (at ``q^v``) must be +-1; the
    result has valuation ``-v`` and order ``target_order - v``.
    """
    v = a.leading_exponent()
    if v is None:
        raise NotAUnitError("cannot invert the zero series")
    lead = a[v]
    if lead not in (1, -1):
        raise NotAUnitError(f"leading coefficient {lead} at q^{v} is not a unit")
    if target_order < 0:
        raise SeriesRangeError("target order must be nonnegative")
    need = target_order + v
    if a.order < need:
        raise SeriesRangeError(f"inverse through q^{target_order} needs input through q^{need}, have {a.order}")
    length = target_order + 1
    src = [a[v + k] for k in range(length)]
    nz = [k for k in range(1, length) if src[k]]
    out = [0] * length
    for m in range(length):
        acc = 1 if m == 0 else 0
        for k in nz:
            if k > m:
                break
            acc -= src[k] * out[m - k]
        out[m] = acc * lead  # lead is its own inverse
    return QSeries(-v, tuple(out))


def divide(a: QSeries, b: QSeries, target_order: int) -> QSeries:
    """Quotient ``a / b`` through ``q^target_order``; ``b`` must have a unit leading coefficient."""
    v = b.leading_exponent()
    if v is None:
        raise NotAUnitError("division by the zero series")
    b = b.with_valuation(v)
    inv = invert(b, target_order - a.valuation + v)
    return mul(a, inv).truncate(target_order)


def dilate(a: QSeries, n: int) -> QSeries:
    """Substitute ``q -> q^n``."""
    if n < 1:
        raise ValueError("dilation factor must be positive")
    if n == 1:
        return a
    out = [0] * (n * (len(a.coeffs) - 1) + 1)
    out[::n] = a.coeffs
    return QSeries(n * a.valuation, tuple(out))


def qshift(a: QSeries, m: int) -> QSeries:
    return QSeries(a.valuation + m, a.coeffs)


def first_mismatch(a: QSeries, b: QSeries, lo: int | None = None, hi: int | None = None) -> int | None:
    """Lowest exponent in ``[lo, hi]`` where ``a`` and ``b`` differ, else ``None``.

    The default range is the intersection of what both series know.
    """
    if lo is None:
        lo = min(a.valuation, b.valuation)
    if hi is None:
        hi = min(a.order, b.order)
    for e in range(lo, hi + 1):
        if a[e] != b[e]:
            return e
    return None


def agree(a: QSeries, b: QSeries, hi: int | None = None) -> bool:
    return first_mismatch(a, b, hi=hi) is None


def format_series(a: QSeries) -> str:
    pieces: list[str] = []
    for e, c in sorted(a.terms().items()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


# theta series --------------------------------------------------------------


@dataclass(frozen=True)
class ThetaSpec:
    """The specialisation ``f(sign*q^r, sign*q^s)`` of the two-variable theta series."""

    sign: int
    r: int
    s: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def exponent(self, k: int) -> int:
        return (self.r * k * (k - 1) + self.s * k * (k + 1)) // 2

    def swapped(self) -> ThetaSpec:
        return ThetaSpec(self.sign, self.s, self.r)

    def __str__(self) -> str:
        sg = "-" if self.sign < 0 else ""
        return f"f({sg}q^{self.r},{sg}q^{self.s})"


def _check_convergent(spec: ThetaSpec) -> None:
    if spec.r + spec.s <= 0:
        raise DivergentThetaError(f"{spec}: r + s = {spec.r + spec.s} must be positive")


def theta_expand(spec: ThetaSpec, target_order: int) -> QSeries:
    """Expand the bilateral sum ``sum_k sign^k q^(r k(k-1)/2 + s k(k+1)/2)``.

    The exponent is a convex parabola in ``k``; scanning outward from its
    integer vertex visits every term below ``target_order`` exactly once.
    """
    _check_convergent(spec)
    total = spec.r + spec.s
    vertex = (spec.r - spec.s + total) // (2 * total)  # round(-(s-r) / 2(r+s))
    lowest = spec.exponent(vertex)
    if target_order < lowest:
        raise SeriesRangeError(f"{spec} starts at q^{lowest}, above target order {target_order}")
    terms: dict[int, int] = {}
    for step in (1, -1):
        k = vertex if step == 1 else vertex - 1
        while True:
            e = spec.exponent(k)
            if e > target_order:
                break
            terms[e] = terms.get(e, 0) + (spec.sign if k % 2 else 1)
            k += step
    return QSeries.from_terms(terms, target_order, valuation=lowest)


def _times_binomial(coeffs: list[int], c: int, e: int) -> None:
    """In place: multiply a power series (valuation 0) by ``1 + c q^e``."""
    if e == 0:
        for k in range(len(coeffs)):
            coeffs[k] *= 1 + c
        return
    for k in range(len(coeffs) - 1, e - 1, -1):
        coeffs[k] += c * coeffs[k - e]


def theta_triple_product(spec: ThetaSpec, target_order: int) -> QSeries:
    """Expand ``f(u, v)`` through its Jacobi triple product form.

    With ``u = eps q^r`` and ``v = eps q^s`` the factors are
    ``(1 - q^(k(r+s))) (1 + eps q^((k-1)r + ks)) (1 + eps q^(kr + (k-1)s))``.
    """
    _check_convergent(spec)
    if spec.r < 0 or spec.s < 0:
        raise UnsupportedFormError(f"{spec}: product form needs nonnegative exponents; use shift_normalize")
    if target_order < 0:
        raise SeriesRangeError("product form has valuation 0")
    total = spec.r + spec.s
    coeffs = [0] * (target_order + 1)
    coeffs[0] = 1
    k = 1
    while (k - 1) * total <= target_order:
        for c, e in (
            (-1, k * total),
            (spec.sign, (k - 1) * spec.r + k * spec.s),
            (spec.sign, k * spec.r + (k - 1) * spec.s),
        ):
            if e <= target_order:
                _times_binomial(coeffs, c, e)
        k += 1
    return QSeries(0, tuple(coeffs))


def shift_normalize(spec: ThetaSpec) -> tuple[int, int, ThetaSpec]:
    """Rewrite ``spec`` as ``sigma * q^m * f(...)`` with nonnegative exponents.

    Uses ``f(eps q^r, eps q^s) = eps q^r f(eps q^(2r+s), eps q^(-r))`` (and its
    mirror image), each application contributing one factor of ``eps``.
    """
    _check_convergent(spec)
    sigma, power, r, s = 1, 0, spec.r, spec.s
    while r < 0 or s < 0:
        sigma *= spec.sign
        if r < 0:
            power += r
            r, s = 2 * r + s, -r
        else:
            power += s
            r, s = -s, r + 2 * s
    return sigma, power, ThetaSpec(spec.sign, r, s)


def theta_normalized(spec: ThetaSpec, target_order: int) -> QSeries:
    """Expand ``spec`` through its normalised form, as a Laurent series."""
    sigma, power, norm = shift_normalize(spec)
    if target_order < power:
        return QSeries.zero(target_order, valuation=target_order)
    body = theta_expand(norm, target_order - power)
    return qshift(body, power) * sigma


def euler_phi(target_order: int) -> QSeries:
    """``prod_{j>=1} (1 - q^j)`` by direct multiplication."""
    if target_order < 0:
        raise SeriesRangeError("target order must be nonnegative")
    coeffs = [0] * (target_order + 1)
    coeffs[0] = 1
    for j in range(1, target_order + 1):
        _times_binomial(coeffs, -1, j)
    return QSeries(0, tuple(coeffs))


def det_series(m: Sequence[Sequence[QSeries]]) -> QSeries:
    """Determinant by cofactor expansion along the first row (division free)."""
    d = len(m)
    if d == 0 or any(len(row) != d for row in m):
        raise ShapeError("determinant needs a nonempty square matrix")
    if d > 8:
        raise ShapeError(f"cofactor expansion limited to dimension 8, got {d}")
    return _det(m)


def _det(m: Sequence[Sequence[QSeries]]) -> QSeries:
    d = len(m)
    if d == 1:
        return m[0][0]
    if d == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for col in range(d):
        minor = [row[:col] + row[col + 1:] for row in m[1:]]
        term = m[0][col] * _det(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total
