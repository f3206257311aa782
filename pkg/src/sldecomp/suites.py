"""Named verification suites run by ``sldecomp verify``.

Every suite returns a list of :class:`Check` rows; a suite passes when all of
its rows do.  Defaults are sized to finish in seconds.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .crystal import ExtendedYoungDiagram, maximal_by_columns, maximal_by_operators, regular_partitions
from .decomp import index_range, is_maximal_partition, multiplicity_table, series_from_table
from .identities import (
    build_A,
    cramer_B,
    propmod_brute,
    propmod_classify,
    psi_spec,
    verify_master,
)
from .qseries import (
    QSeries,
    ThetaSpec,
    divide,
    euler_phi,
    first_mismatch,
    mul,
    qshift,
    shift_normalize,
    theta_expand,
    theta_triple_product,
)


@dataclass(frozen=True)
class Check:
    name: str
    params: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail and not self.ok else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name} {self.params}{tail}"


def _mismatch_check(name: str, params: str, a: QSeries, b: QSeries, lo: int, hi: int) -> Check:
    bad = first_mismatch(a, b, lo, hi)
    return Check(name, params, bad is None, "" if bad is None else f"first mismatch at q^{bad}")


def theta(sign: int, r: int, s: int, order: int) -> QSeries:
    return theta_expand(ThetaSpec(sign, r, s), order)


def all_psi_specs(max_n: int = 6) -> list[ThetaSpec]:
    specs = set()
    for n in range(2, max_n + 1):
        for i in range(n):
            for t in index_range(n, i):
                for j in range(n):
                    specs.add(psi_spec(n, i, t, j))
    return sorted(specs, key=lambda s: (s.r + s.s, s.r, s.sign))


def triple_product_suite(order: int = 200) -> list[Check]:
    specs = {ThetaSpec(-1, 1, 2), ThetaSpec(1, 1, 1), ThetaSpec(-1, 6, 9), ThetaSpec(-1, 3, 12)}
    for spec in all_psi_specs():
        specs.add(shift_normalize(spec)[2])
    out = []
    for spec in sorted(specs, key=lambda s: (s.r + s.s, s.r, s.sign)):
        out.append(_mismatch_check(
            "triple-product", f"{spec} order={order}",
            theta_expand(spec, order), theta_triple_product(spec, order), 0, order,
        ))
    return out


def shift_identity_suite(order: int = 60) -> list[Check]:
    specs = set(all_psi_specs()) | {ThetaSpec(-1, -4, 19), ThetaSpec(1, -5, 29), ThetaSpec(-1, 1, 2)}
    out = []
    for spec in sorted(specs, key=lambda s: (s.r + s.s, s.r, s.sign)):
        sigma, m, norm = shift_normalize(spec)
        raw = theta_expand(spec, order)
        rebuilt = qshift(theta_expand(norm, order - m), m) * sigma
        ok_form = norm.r >= 0 and norm.s >= 0
        chk = _mismatch_check("shift-identity", f"{spec} order={order}", raw, rebuilt, raw.valuation, order)
        out.append(chk if ok_form else Check(chk.name, chk.params, False, "negative exponent left"))
    return out


def character_count_suite(max_boxes: int = 25, ranks=(2, 3)) -> list[Check]:
    out = []
    phi = euler_phi(max_boxes)
    for n in ranks:
        char = divide(theta(-1, n, 2 * n, max_boxes), phi, max_boxes)
        counts = [sum(1 for _ in regular_partitions(n, m)) for m in range(max_boxes + 1)]
        # the count is the same for every charge: colouring does not constrain regularity
        for i in range(n):
            bad = next((m for m in range(max_boxes + 1) if counts[m] != char[m]), None)
            out.append(Check(
                "character-count", f"n={n} i={i} max_boxes={max_boxes}", bad is None,
                "" if bad is None else f"m={bad}: {counts[bad]} diagrams vs {char[bad]}",
            ))
    return out


def oracle_equivalence_suite(max_boxes: int = 14, ranks=(2, 3, 4)) -> list[Check]:
    out = []
    for n in ranks:
        partitions = [p for m in range(max_boxes + 1) for p in regular_partitions(n, m)]
        for i in range(n):
            bad = []
            for p in partitions:
                d = ExtendedYoungDiagram(p, i, n)
                verdicts = (is_maximal_partition(p, n, i), maximal_by_columns(d), maximal_by_operators(d))
                if len(set(verdicts)) > 1:
                    bad.append(str(p))
            out.append(Check(
                "oracle-equivalence", f"n={n} i={i} max_boxes={max_boxes} diagrams={len(partitions)}",
                not bad, f"disagree on {', '.join(bad[:5])}",
            ))
    return out


def master_suite(order_per_n: int = 4, ranks=range(2, 7)) -> list[Check]:
    out = []
    for n in ranks:
        for i in range(n):
            rep = verify_master(n, i, order_per_n * n)
            out.append(Check("master", f"n={n} i={i} order={rep.order}", rep.ok, str(rep)))
    return out


def dets_suite(order: int = 40) -> list[Check]:
    phi = euler_phi(order)
    return [
        _mismatch_check("dets", f"n=3 i=1 det=phi^2 order={order}",
                        build_A(3, 1, order).det(), mul(phi, phi), 0, order),
        _mismatch_check("dets", f"n=4 i=1 det=phi*f(-q,-q) order={order}",
                        build_A(4, 1, order).det(), mul(phi, theta(-1, 1, 1, order)), 0, order),
    ]


def closed_forms(order: int) -> dict[tuple[int, int, int], QSeries]:
    """Closed theta-quotient forms of ``B_t^1`` for ``n = 2, 3, 4``."""
    phi = euler_phi(order)
    ff = theta(-1, 1, 1, order)
    n4_b1 = theta(1, 11, 13, order) - qshift(theta(1, 5, 19, order - 1), 1)
    n4_b2 = theta(1, 7, 17, order) - qshift(theta(1, 1, 23, order - 2), 2)
    return {
        (2, 1, 1): divide(phi, ff, order),
        (3, 1, 1): divide(theta(-1, 6, 9, order), phi, order),
        (3, 1, 2): divide(theta(-1, 3, 12, order), phi, order),
        (4, 1, 1): divide(n4_b1, ff, order),
        (4, 1, 2): divide(n4_b2, ff, order),
    }


def closed_forms_suite(order: int = 40, max_boxes: int = 34) -> list[Check]:
    out = []
    forms = closed_forms(order)
    tables = {}
    for (n, i, t), form in forms.items():
        out.append(_mismatch_check(
            "closed-forms", f"cramer n={n} i={i} t={t} order={order}",
            cramer_B(n, i, t, order), form, 0, order,
        ))
        tbl = tables.setdefault((n, i), multiplicity_table(n, i, max_boxes))
        enum = series_from_table(tbl, t)
        top = min(order, enum.order)
        out.append(_mismatch_check(
            "closed-forms", f"enumeration n={n} i={i} t={t} through q^{top}", enum, form, 0, top,
        ))
    return out


def propmod_suite(max_n: int = 60) -> list[Check]:
    bad = [(n, i) for n in range(2, max_n + 1) for i in range(n) if propmod_brute(n, i) != propmod_classify(n, i)]
    return [Check("propmod", f"n<={max_n} all i", not bad, f"disagree at {bad[:5]}")]


def distinct_part_counts(order: int) -> list[int]:
    """Coefficients of ``prod_j (1 + q^j)``."""
    coeffs = [1] + [0] * order
    for j in range(1, order + 1):
        for m in range(order, j - 1, -1):
            coeffs[m] += coeffs[m - j]
    return coeffs


def euler_n2_suite(order: int = 30) -> list[Check]:
    tbl = multiplicity_table(2, 1, 2 * order)
    enum = series_from_table(tbl, 1)
    want = QSeries.from_coeffs(distinct_part_counts(order))
    return [_mismatch_check("euler-n2", f"n=2 i=1 k<={order}", enum, want, 0, order)]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "triple-product": triple_product_suite,
    "shift-identity": shift_identity_suite,
    "character-count": character_count_suite,
    "oracle-equivalence": oracle_equivalence_suite,
    "master": master_suite,
    "dets": dets_suite,
    "closed-forms": closed_forms_suite,
    "propmod": propmod_suite,
    "euler-n2": euler_n2_suite,
}
