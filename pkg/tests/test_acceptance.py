"""Acceptance criteria, one test each, with the stated time bounds.

A summary line ``PASS criterion N: ...`` or ``FAIL criterion N: ...`` is
printed for every criterion at the end of the run.
"""
import time
from contextlib import contextmanager

import pytest

from sldecomp.crystal import ExtendedYoungDiagram, Partition, maximal_by_columns, maximal_by_operators
from sldecomp.decomp import (
    enumerate_maximal,
    expected_rectangle,
    index_range,
    is_maximal_partition,
    min_depth,
    multiplicity_table,
    partner,
    rectangle_check,
    series_from_table,
    weight_label,
    WeightLabel,
)
from sldecomp.identities import build_A, cramer_B, leq_factor, propmod_brute, propmod_classify, verify_master
from sldecomp.qseries import ThetaSpec, divide, euler_phi, first_mismatch, mul, qshift, theta_expand
from sldecomp.suites import shift_identity_suite, triple_product_suite

from oracles import all_partitions, partition_counts, product_coeffs

criterion = pytest.mark.criterion


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, bound {seconds}s"


def theta(sign, r, s, order):
    return theta_expand(ThetaSpec(sign, r, s), order)


def convolve(a, b, order):
    return [sum(a[m] * b[k - m] for m in range(k + 1)) for k in range(order + 1)]


def over_phi(factors, order):
    """Coefficients of prod(1 + c q^e) / phi(q), computed with sympy and partition counts."""
    return convolve(product_coeffs(factors, order), partition_counts(order), order)


def enumerated(n, i, t, max_boxes):
    return series_from_table(multiplicity_table(n, i, max_boxes), t)


@criterion(1, "n=2 i=1 B_1 = 1,1,1,2,2,3,4,5 by enumeration and Cramer")
def test_criterion_1():
    want = [1, 1, 1, 2, 2, 3, 4, 5]
    with within(1):
        assert enumerated(2, 1, 1, 16).coefficients(0, 7) == want
        assert cramer_B(2, 1, 1, 7).coefficients(0, 7) == want


@criterion(2, "n=2 i=1 multiplicities count partitions into distinct parts, k <= 30")
def test_criterion_2():
    from sympy.utilities.iterables import partitions

    distinct = [1] + [sum(1 for p in partitions(k) if all(f == 1 for f in p.values())) for k in range(1, 31)]
    with within(5):
        tbl = multiplicity_table(2, 1, 60)
        assert [tbl.count(1, k) for k in range(31)] == distinct


@criterion(3, "n=3 i=1 det A = phi^2, closed forms for B_1 and B_2, enumeration through k <= 10")
def test_criterion_3():
    N = 40
    with within(10):
        phi = euler_phi(N)
        assert first_mismatch(build_A(3, 1, N).det(), mul(phi, phi), 0, N) is None
        b1 = divide(theta(-1, 6, 9, N), phi, N)
        b2 = divide(theta(-1, 3, 12, N), phi, N)
        assert first_mismatch(cramer_B(3, 1, 1, N), b1, 0, N) is None
        assert first_mismatch(cramer_B(3, 1, 2, N), b2, 0, N) is None
        tbl = multiplicity_table(3, 1, 32)
        # B_t(q) = sum_k b_tk q^(k - r), so k <= 10 means exponent <= 10 - r
        for t, form in ((1, b1), (2, b2)):
            top = 10 - min_depth(3, 1, t)
            enum = series_from_table(tbl, t)
            assert enum.order >= top
            assert first_mismatch(enum, form, 0, top) is None


@criterion(4, "n=3 i=1 counts of highest-weight partitions of 3k and 3k+2 match product forms, k <= 10")
def test_criterion_4():
    K = 10
    with within(10):
        sizes = [p.box_count for p in enumerate_maximal(3, 1, 3 * K + 2)]
        a = [sizes.count(3 * k) for k in range(K + 1)]
        b = [sizes.count(3 * k + 2) for k in range(K + 1)]
        js = range(1, K + 2)
        num_a = [(-1, e) for j in js for e in (15 * j, 15 * j - 6, 15 * j - 9)]
        num_b = [(-1, e) for j in js for e in (15 * j, 15 * j - 3, 15 * j - 12)]
        assert a == over_phi(num_a, K)
        assert b == over_phi(num_b, K)
        # every such partition satisfies the congruence lambda_1 - f_1 + 1 = 0 (mod 3)
        for p in enumerate_maximal(3, 1, 3 * K + 2):
            if p.runs:
                assert (p.runs[0][0] - p.runs[0][1] + 1) % 3 == 0


@criterion(5, "n=4 i=1 det A = phi f(-q,-q), closed forms for B_1 and B_2, enumeration through k <= 8")
def test_criterion_5():
    N = 40
    with within(30):
        phi, ff = euler_phi(N), theta(-1, 1, 1, N)
        assert first_mismatch(build_A(4, 1, N).det(), mul(phi, ff), 0, N) is None
        b1 = divide(theta(1, 11, 13, N) - qshift(theta(1, 5, 19, N - 1), 1), ff, N)
        b2 = divide(theta(1, 7, 17, N) - qshift(theta(1, 1, 23, N - 2), 2), ff, N)
        assert first_mismatch(cramer_B(4, 1, 1, N), b1, 0, N) is None
        assert first_mismatch(cramer_B(4, 1, 2, N), b2, 0, N) is None
        tbl = multiplicity_table(4, 1, 34)
        for t, form in ((1, b1), (2, b2)):
            top = 8 - min_depth(4, 1, t)
            enum = series_from_table(tbl, t)
            assert enum.order >= top
            assert first_mismatch(enum, form, 0, top) is None


@criterion(6, "n=2 i=0 residue split reproduces f(-q,-q^3) and q f(-q,-q^3)")
def test_criterion_6():
    N = 60
    with within(1):
        f13 = theta(-1, 1, 3, N)
        assert f13.truncate(10).terms() == {0: 1, 1: -1, 3: -1, 6: 1, 10: 1}
        assert first_mismatch(leq_factor(2, 0, 0, N), f13, 0, N) is None
        assert first_mismatch(leq_factor(2, 0, 1, N), qshift(theta(-1, 1, 3, N - 1), 1), 0, N) is None


@criterion(7, "master equation for every (n, i), n = 2..6, through order 4n")
def test_criterion_7():
    with within(120):
        bad = []
        for n in range(2, 7):
            for i in range(n):
                rep = verify_master(n, i, 4 * n)
                if not rep.ok:
                    bad.append(str(rep))
        assert not bad
        assert not propmod_classify(6, 1)


@criterion(8, "congruence, column and operator maximality tests agree on diagrams up to 18 boxes")
def test_criterion_8():
    with within(120):
        bad = []
        for n in (2, 3, 4):
            diagrams = [Partition.from_parts(p) for p in all_partitions(18)
                        if all(p.count(x) < n for x in set(p))]
            for i in range(n):
                for p in diagrams:
                    d = ExtendedYoungDiagram(p, i, n)
                    v = {is_maximal_partition(p, n, i), maximal_by_columns(d), maximal_by_operators(d)}
                    if len(v) > 1:
                        bad.append((n, i, str(p)))
        assert not bad


@criterion(9, "n-regular diagrams with m boxes counted by phi(q^n)/phi(q), m <= 25")
def test_criterion_9():
    M = 25
    with within(30):
        for n in (2, 3):
            counts = [0] * (M + 1)
            for p in all_partitions(M):
                if all(p.count(x) < n for x in set(p)):
                    counts[sum(p)] += 1
            want = over_phi([(-1, n * j) for j in range(1, M // n + 1)], M)
            assert counts == want
            # the package's own series arithmetic agrees
            got = divide(theta(-1, n, 2 * n, M), euler_phi(M), M)
            assert got.coefficients(0, M) == want


@criterion(10, "residue-collision brute force equals the closed-form classification, n <= 60")
def test_criterion_10():
    with within(5):
        bad = [(n, i) for n in range(2, 61) for i in range(n) if propmod_brute(n, i) != propmod_classify(n, i)]
        assert not bad


@criterion(11, "triple product to order 200 and shift normalisation to order 60 for every spec used")
def test_criterion_11():
    with within(10):
        rows = triple_product_suite(200) + shift_identity_suite(60)
        assert [r.line() for r in rows if not r.ok] == []
        assert len(rows) > 100


@criterion(12, "minimal-depth summand has multiplicity one, realised by a rectangle, n <= 5")
def test_criterion_12():
    with within(10):
        for n in range(2, 6):
            for i in range(n):
                for t in index_range(n, i):
                    p = rectangle_check(n, i, t)
                    assert p == expected_rectangle(n, i, t)
                    tbl = multiplicity_table(n, i, p.box_count)
                    assert tbl.entries[WeightLabel(t, partner(n, i, t), min_depth(n, i, t))] == 1
                    assert weight_label(p, n, i).k == min_depth(n, i, t)
