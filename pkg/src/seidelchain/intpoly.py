"""Exact arithmetic for integer polynomials and characteristic polynomials.

Polynomials are tuples of Python ints in ascending power order, so (c0, c1,
c2) is c0 + c1*x + c2*x^2.  Everything here is exact: no floats, no rounding.
The root machinery (integer-root stripping, Yun square-free decomposition,
Sturm isolation, sign-certified bisection) assumes monic inputs whose
remaining roots are all real, which holds for characteristic polynomials of
symmetric integer matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntPoly = tuple[int, ...]


def poly_trim(p) -> IntPoly:
    """Drop trailing zero coefficients; the zero polynomial becomes ()."""
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_pow(a: IntPoly, e: int) -> IntPoly:
    out: IntPoly = (1,)
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def poly_derivative(p: IntPoly) -> IntPoly:
    return poly_trim(tuple(i * c for i, c in enumerate(p)))[1:] if len(p) > 1 else ()


def poly_eval(p: IntPoly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_degree(p: IntPoly) -> int:
    return len(p) - 1


def sign_at(p: IntPoly, x: Fraction) -> int:
    """Sign of p(x) at a rational point, computed with integer arithmetic."""
    num, den = x.numerator, x.denominator
    d = len(p) - 1
    if d < 0:
        return 0
    acc = 0
    den_pow = 1
    for i in range(d, -1, -1):
        acc = acc * num + p[i] * den_pow
        if i:
            den_pow *= den
    return (acc > 0) - (acc < 0)


def synthetic_div(p: IntPoly, r: int) -> tuple[IntPoly, int]:
    """Divide p by (x - r): returns (quotient, remainder = p(r))."""
    acc = 0
    out = []
    for c in reversed(p):
        acc = acc * r + c
        out.append(acc)
    rem = out.pop()
    out.reverse()
    return tuple(out), rem


def content(p: IntPoly) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def primitive(p: IntPoly) -> IntPoly:
    """Divide out the content and normalize the leading coefficient positive."""
    p = poly_trim(p)
    if not p:
        return p
    g = content(p)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def cauchy_bound(p: IntPoly) -> int:
    """Integer B with every real root of p inside (-B, B) (p nonconstant)."""
    lead = abs(p[-1])
    top = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    return 1 + (top + lead - 1) // lead


def integer_roots(p: IntPoly, bound: int | None = None) -> tuple[dict[int, int], IntPoly]:
    """Strip all integer roots of a monic integer polynomial.

    Candidate roots are 0 plus the divisors of the running constant term that
    fall inside [-bound, bound] (defaulting to the Cauchy bound); -1 is always
    tried first.  Returns ({root: multiplicity}, residual factor); the
    residual has no integer roots, hence (being monic) no rational roots.
    """
    p = poly_trim(p)
    if not p or p[-1] != 1:
        raise ValueError("integer_roots expects a monic polynomial")
    roots: dict[int, int] = {}
    while len(p) > 1 and p[0] == 0:
        roots[0] = roots.get(0, 0) + 1
        p = p[1:]
    if len(p) == 1:
        return roots, p
    b = bound if bound is not None else cauchy_bound(p)
    candidates = [-1] + [d for d in range(-b, b + 1) if d not in (0, -1)]
    for d in candidates:
        while len(p) > 1 and p[0] % d == 0:
            q, rem = synthetic_div(p, d)
            if rem != 0:
                break
            roots[d] = roots.get(d, 0) + 1
            p = q
    return roots, p


# ---------------------------------------------------------------------------
# Rational-coefficient helpers (only used to build exact gcds / Sturm chains)
# ---------------------------------------------------------------------------

def _f_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _f_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _f_trim(a[:])
    b = _f_trim(b[:])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        coef = a[-1] / b[-1]
        q[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] -= coef * c
        _f_trim(a)
    return q, a


def _to_fractions(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p]


def _int_scaled(p: list[Fraction], keep_sign: bool) -> IntPoly:
    """Clear denominators and divide out the content (positive scaling only).

    With keep_sign=False the leading coefficient is additionally normalized
    positive ("primitive part"); with keep_sign=True the sign pattern of p is
    preserved exactly, which Sturm chains require.
    """
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = tuple(int(c * den) for c in p)
    g = content(ints)
    if not keep_sign and ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    fa, fb = _to_fractions(poly_trim(a)), _to_fractions(poly_trim(b))
    while fb:
        _, r = _f_divmod(fa, fb)
        fa, fb = fb, _f_trim(r)
    return _int_scaled(fa, keep_sign=False)


def poly_div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient a / b up to primitive scaling; raises on a remainder."""
    q, r = _f_divmod(_to_fractions(poly_trim(a)), _to_fractions(poly_trim(b)))
    if _f_trim(r):
        raise ValueError("polynomial division is not exact")
    return _int_scaled(q, keep_sign=False)


def _f_derivative(p: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(p)][1:]


def _f_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _f_trim(out)


def _f_monic(p: list[Fraction]) -> list[Fraction]:
    lead = p[-1]
    return [c / lead for c in p]


def _f_gcd_monic(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _f_trim(a[:]), _f_trim(b[:])
    while b:
        _, r = _f_divmod(a, b)
        a, b = b, _f_trim(r)
    return _f_monic(a)


def _f_div_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    q, r = _f_divmod(a[:], b)
    if _f_trim(r):
        raise ValueError("polynomial division is not exact")
    return _f_trim(q)


def square_free_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition: [(f_i, i)] with p ~ prod f_i^i, each f_i square-free.

    Runs exactly over the rationals (rescaling intermediates would corrupt
    the c - b' update); factors come back as primitive integer polynomials
    with positive leading coefficient, pairwise coprime.
    """
    p = primitive(p)
    if poly_degree(p) < 1:
        return []
    fp = _to_fractions(p)
    fdp = _f_derivative(fp)
    fa = _f_gcd_monic(fp, fdp)
    if len(fa) == 1:
        return [(p, 1)]
    fb = _f_div_exact(fp, fa)
    fc = _f_div_exact(fdp, fa)
    fd = _f_sub(fc, _f_derivative(fb))
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while len(fb) > 1:
        ff = _f_gcd_monic(fb, fd) if fd else _f_monic(fb)
        if len(ff) > 1:
            out.append((_int_scaled(ff, keep_sign=False), i))
        fb = _f_div_exact(fb, ff)
        fc = _f_div_exact(fd, ff) if fd else []
        fd = _f_sub(fc, _f_derivative(fb))
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm isolation and certified bisection
# ---------------------------------------------------------------------------

def sturm_chain(p: IntPoly) -> list[IntPoly]:
    chain = [primitive(p)]
    dp = primitive(poly_derivative(p))
    if dp:
        chain.append(dp)
    while poly_degree(chain[-1]) > 0:
        _, r = _f_divmod(_to_fractions(chain[-2]), _to_fractions(chain[-1]))
        r = _f_trim(r)
        if not r:
            break
        chain.append(_int_scaled([-c for c in r], keep_sign=True))
    return chain


def _variations(chain: list[IntPoly], x: Fraction) -> int:
    signs = [s for s in (sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_between(chain: list[IntPoly], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi], via Sturm sign variations."""
    return _variations(chain, lo) - _variations(chain, hi)


def isolate_real_roots(p: IntPoly, bound: int | None = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals, each containing exactly one real root of p.

    p must be square-free with no rational roots, so the (always dyadic)
    interval endpoints are never roots themselves.
    """
    p = primitive(p)
    if poly_degree(p) < 1:
        return []
    b = Fraction(bound if bound is not None else cauchy_bound(p))
    chain = sturm_chain(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        cnt = count_roots_between(chain, lo, hi)
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if sign_at(p, mid) == 0:
            raise ValueError("rational root encountered during isolation")
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return out


def refine_root(p: IntPoly, lo: Fraction, hi: Fraction,
                width: Fraction = Fraction(1, 2 ** 40)) -> tuple[Fraction, Fraction, int, int]:
    """Shrink an isolating interval by sign bisection to the requested width.

    Returns (lo, hi, sign at lo, sign at hi); the differing endpoint signs are
    the certificate that a root lies inside.
    """
    s_lo, s_hi = sign_at(p, lo), sign_at(p, hi)
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise ValueError("interval endpoints do not certify a sign change")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sign_at(p, mid)
        if s_mid == 0:
            raise ValueError("rational root encountered during refinement")
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi, s_lo, s_hi


# ---------------------------------------------------------------------------
# Characteristic polynomial
# ---------------------------------------------------------------------------

def char_poly_ints(matrix) -> IntPoly:
    """Monic characteristic polynomial det(xI - M) of an integer matrix.

    Faddeev-LeVerrier trace recursion; every division is exact over the
    integers, so coefficients come out as exact arbitrary-precision integers.
    """
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return (1,)
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs_desc = [1]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        ck = -(tr // k)
        coeffs_desc.append(ck)
        for i in range(n):
            am[i][i] += ck
        m = am
    return tuple(reversed(coeffs_desc))
