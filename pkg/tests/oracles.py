"""Independent reference computations used to freeze expected values.

None of these share code with the package: series come from sympy polynomial
expansion or from literal term-by-term sums, partitions from sympy's
generator.
"""
from __future__ import annotations

import sympy
from sympy.utilities.iterables import partitions as sympy_partitions

q = sympy.Symbol("q")


def poly_coeffs(expr, order: int) -> list[int]:
    """Coefficients of q^0 .. q^order of a polynomial expression in q."""
    p = sympy.Poly(sympy.expand(expr), q)
    return [int(p.coeff_monomial(q**e)) for e in range(order + 1)]


def product_coeffs(factors_exponents: list[tuple[int, int]], order: int) -> list[int]:
    """Expand prod (1 + c q^e) over the given (c, e) pairs with sympy, truncated."""
    expr = sympy.Integer(1)
    for c, e in factors_exponents:
        if e <= order:
            expr = sympy.expand(expr * (1 + c * q**e))
            expr = sum(
                (coef * q**m for (m,), coef in sympy.Poly(expr, q).terms() if m <= order),
                sympy.Integer(0),
            )
    return poly_coeffs(expr, order)


def euler_product(order: int) -> list[int]:
    return product_coeffs([(-1, j) for j in range(1, order + 1)], order)


def bilateral(sign_u: int, r: int, sign_v: int, s: int, lo: int, hi: int, k_range: int = 200) -> dict[int, int]:
    """f(u, v) with u = sign_u q^r, v = sign_v q^s, summed literally over |k| <= k_range."""
    out: dict[int, int] = {}
    for k in range(-k_range, k_range + 1):
        a, b = k * (k - 1) // 2, k * (k + 1) // 2
        e = r * a + s * b
        if lo <= e <= hi:
            out[e] = out.get(e, 0) + sign_u**a * sign_v**b
    return {e: c for e, c in out.items() if c}


def pentagonal(order: int) -> dict[int, int]:
    """Euler's pentagonal number series."""
    out = {}
    for k in range(-order, order + 1):
        e = k * (3 * k - 1) // 2
        if 0 <= e <= order:
            out[e] = (-1) ** k
    return out


def partition_counts(order: int) -> list[int]:
    return [sum(1 for _ in sympy_partitions(m)) if m else 1 for m in range(order + 1)]


def all_partitions(max_boxes: int):
    """Every partition of 0..max_boxes as a descending tuple of parts."""
    yield ()
    for m in range(1, max_boxes + 1):
        for mult in sympy_partitions(m):
            yield tuple(sorted((p for p, f in mult.items() for _ in range(f)), reverse=True))
