"""Seidel matrices, quotient matrices, and exact spectra of chain graphs.

The Seidel matrix of a simple graph is J - I - 2A: -1 on edges, +1 on
non-edges, 0 on the diagonal.  For a chain graph with 2k cells the spectrum
splits as spectrum(Q) together with -1 repeated n - 2k times, where Q is the
2k x 2k quotient matrix of the cell partition, so exact spectra cost O(k^3)
bigint work instead of O(n^3).

Eigenvalues are exact objects: plain ints, quadratic surds (a +- sqrt(D))/c,
or sign-certified root intervals of an integer polynomial factor (width at
most 2^-40).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from . import intpoly
from .chain import BlockString
from .graphs import Graph

CHAR_POLY_ORDER_CAP = 256
INTERVAL_WIDTH = Fraction(1, 2 ** 40)


# ---------------------------------------------------------------------------
# Exact eigenvalue representations
# ---------------------------------------------------------------------------

def _extract_square_part(d: int) -> tuple[int, int]:
    """Write d = f^2 * d' with d' square-free below the trial bound."""
    f = 1
    i = 2
    while i * i <= d and i <= 100_000:
        while d % (i * i) == 0:
            d //= i * i
            f *= i
        i += 1
    return f, d


@dataclass(frozen=True)
class Surd:
    """The real quadratic irrational (a + sign*sqrt(d)) / c, c > 0, d not square."""

    a: int
    sign: int
    d: int
    c: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        if self.c == 0:
            raise ValueError("zero denominator")
        if self.d <= 0:
            raise ValueError("radicand must be positive")
        if math.isqrt(self.d) ** 2 == self.d:
            raise ValueError("radicand is a perfect square; use an int instead")

    @classmethod
    def make(cls, a: int, sign: int, d: int, c: int) -> Surd:
        """Normalized constructor: positive denominator, reduced radicand."""
        if c < 0:
            a, sign, c = -a, -sign, -c
        f, d = _extract_square_part(d)
        g = math.gcd(math.gcd(abs(a), f), c)
        return cls(a // g, sign, (f // g) ** 2 * d, c // g)

    def _key(self) -> tuple[Fraction, int, Fraction]:
        return Fraction(self.a, self.c), self.sign, Fraction(self.d, self.c * self.c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(("surd", self._key()))

    def negate(self) -> Surd:
        return Surd.make(-self.a, -self.sign, self.d, self.c)

    def reciprocal(self) -> Surd:
        # 1 / ((a + s sqrt(d))/c) = c (a - s sqrt(d)) / (a^2 - d)
        e = self.a * self.a - self.d
        if e == 0:
            raise ZeroDivisionError("surd is zero")
        return Surd.make(self.c * self.a, -self.sign, self.c * self.c * self.d, e)

    def bounds(self, bits: int = 60) -> tuple[Fraction, Fraction]:
        r = math.isqrt(self.d << (2 * bits))
        lo_s = Fraction(r, 1 << bits)
        hi_s = Fraction(r + 1, 1 << bits)
        if self.sign > 0:
            return (self.a + lo_s) / self.c, (self.a + hi_s) / self.c
        return (self.a - hi_s) / self.c, (self.a - lo_s) / self.c

    def __float__(self) -> float:
        lo, hi = self.bounds()
        return float((lo + hi) / 2)

    def __str__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"({self.a}{s}√{self.d})/{self.c}"


_STURM_CACHE: dict[tuple[int, ...], list[tuple[int, ...]]] = {}


def _cached_sturm(poly: tuple[int, ...]) -> list[tuple[int, ...]]:
    chain = _STURM_CACHE.get(poly)
    if chain is None:
        chain = intpoly.sturm_chain(poly)
        _STURM_CACHE[poly] = chain
    return chain


@dataclass(frozen=True)
class RootInterval:
    """A real algebraic number: the unique root of `poly` inside (lo, hi).

    poly is primitive, square-free, and has no rational roots; sign_lo and
    sign_hi record the certifying sign change at the endpoints.
    """

    poly: tuple[int, ...]
    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    @classmethod
    def from_isolating(cls, poly: tuple[int, ...], lo: Fraction, hi: Fraction,
                       width: Fraction = INTERVAL_WIDTH) -> RootInterval:
        lo, hi, s_lo, s_hi = intpoly.refine_root(poly, lo, hi, width)
        return cls(poly, lo, hi, s_lo, s_hi)

    def refined(self, width: Fraction) -> RootInterval:
        if self.hi - self.lo <= width:
            return self
        lo, hi, s_lo, s_hi = intpoly.refine_root(self.poly, self.lo, self.hi, width)
        return RootInterval(self.poly, lo, hi, s_lo, s_hi)

    def bounds(self, bits: int = 40) -> tuple[Fraction, Fraction]:
        r = self.refined(Fraction(1, 1 << bits))
        return r.lo, r.hi

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootInterval):
            return NotImplemented
        if self.poly != other.poly:
            return False
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo >= hi:
            return False
        return intpoly.count_roots_between(_cached_sturm(self.poly), lo, hi) == 1

    def __hash__(self) -> int:
        return hash(("rootinterval", self.poly))

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def __str__(self) -> str:
        return f"[{_decimal_string(self.lo)},{_decimal_string(self.hi)}]"


Eigenvalue = Union[int, Surd, RootInterval]


def _surd_poly_value(poly: tuple[int, ...], v: Surd) -> tuple[Fraction, Fraction]:
    """Evaluate an integer polynomial at a surd as (rational, coeff of sqrt(d))."""
    rat, rad = Fraction(0), Fraction(0)
    av, sv = Fraction(v.a, v.c), Fraction(v.sign, v.c)
    for c in reversed(poly):
        # (rat + rad*sqrt(d)) * (av + sv*sqrt(d)) + c
        rat, rad = rat * av + rad * sv * v.d + c, rat * sv + rad * av
    return rat, rad


def values_equal(u: Eigenvalue, v: Eigenvalue) -> bool:
    """Exact equality across eigenvalue representations."""
    if isinstance(u, int) and isinstance(v, int):
        return u == v
    if isinstance(u, Surd) and isinstance(v, Surd):
        return u == v
    if isinstance(u, RootInterval) and isinstance(v, RootInterval):
        return u == v
    if isinstance(u, int) or isinstance(v, int):
        return False  # surds and root intervals are irrational
    if isinstance(u, Surd):
        u, v = v, u
    # u: RootInterval, v: Surd
    rat, rad = _surd_poly_value(u.poly, v)
    if rat != 0 or rad != 0:
        return False
    vlo, vhi = v.bounds(80)
    return vlo < u.hi and u.lo < vhi


def value_bounds(v: Eigenvalue, bits: int = 40) -> tuple[Fraction, Fraction]:
    if isinstance(v, int):
        return Fraction(v), Fraction(v)
    return v.bounds(bits)


def value_cmp(u: Eigenvalue, v: Eigenvalue) -> int:
    if values_equal(u, v):
        return 0
    for bits in (40, 80, 160, 320, 640):
        ulo, uhi = value_bounds(u, bits)
        vlo, vhi = value_bounds(v, bits)
        if uhi < vlo:
            return -1
        if vhi < ulo:
            return 1
    raise ArithmeticError("could not separate two distinct eigenvalues")


def value_to_float(v: Eigenvalue) -> float:
    if isinstance(v, int):
        return float(v)
    return float(v)


def _decimal_string(fr: Fraction) -> str:
    """Exact decimal rendering of a rational with denominator 2^a * 5^b."""
    num, den = fr.numerator, fr.denominator
    a = b = 0
    while den % 2 == 0:
        den //= 2
        a += 1
    while den % 5 == 0:
        den //= 5
        b += 1
    if den != 1:
        raise ValueError("denominator is not of the form 2^a * 5^b")
    digits = max(a, b)
    scaled = num * 10 ** digits // fr.denominator
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def value_to_string(v: Eigenvalue) -> str:
    if isinstance(v, int):
        return f"int:{v}"
    if isinstance(v, Surd):
        return f"surd:{v}"
    return f"interval:{v}"


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeidelMatrix:
    """Symmetric {-1, 0, +1} matrix with zero diagonal: J - I - 2A."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries are not an n x n matrix")
        for i in range(self.n):
            if self.entries[i][i] != 0:
                raise ValueError("diagonal must be zero")
            for j in range(i + 1, self.n):
                if self.entries[i][j] not in (-1, 1):
                    raise ValueError("off-diagonal entries must be -1 or +1")
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix must be symmetric")


def seidel_matrix(g: Graph) -> SeidelMatrix:
    """Seidel matrix of any simple graph: -1 on edges, +1 on non-edges."""
    rows = []
    for v in range(g.n):
        adj = g.rows[v]
        rows.append(tuple(
            0 if w == v else (-1 if (adj >> w) & 1 else 1)
            for w in range(g.n)
        ))
    return SeidelMatrix(g.n, tuple(rows))


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient of the Seidel matrix over the 2k-cell chain partition."""

    size: int
    entries: tuple[tuple[int, ...], ...]
    cell_sizes: tuple[int, ...]


def quotient_matrix(b: BlockString) -> QuotientMatrix:
    """The 2k x 2k quotient matrix of a block string's cell partition.

    Diagonal entry for cell C_p is |C_p| - 1; the (p, q) entry is
    sigma * |C_q| where sigma is -1 exactly when one cell is the i-th 0-cell
    and the other the j-th 1-cell with i <= j (an adjacent pair of cells).
    """
    cells = [(lab, size) for lab, _start, size in b.cells()]
    m = len(cells)
    rows = []
    for p in range(m):
        lab_p = cells[p][0]
        block_p = p // 2 + 1
        row = []
        for q in range(m):
            lab_q, size_q = cells[q]
            if p == q:
                row.append(size_q - 1)
                continue
            if lab_p == lab_q:
                row.append(size_q)
                continue
            i = block_p if lab_p == "0" else q // 2 + 1
            j = q // 2 + 1 if lab_q == "1" else block_p
            row.append(-size_q if i <= j else size_q)
        rows.append(tuple(row))
    return QuotientMatrix(m, tuple(rows), tuple(size for _lab, size in cells))


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial, coefficients in ascending power order."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _matrix_entries(m) -> tuple[tuple[int, ...], ...]:
    if isinstance(m, (SeidelMatrix, QuotientMatrix)):
        return m.entries
    return tuple(tuple(int(x) for x in row) for row in m)


def char_poly(m) -> CharPoly:
    """Exact monic characteristic polynomial of an integer matrix (order <= 256)."""
    entries = _matrix_entries(m)
    if len(entries) > CHAR_POLY_ORDER_CAP:
        raise ValueError(f"matrix order exceeds cap {CHAR_POLY_ORDER_CAP}")
    return CharPoly(intpoly.char_poly_ints(entries))


# ---------------------------------------------------------------------------
# Exact spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactSpectrum:
    """Eigenvalue multiset: ((value, multiplicity), ...) sorted ascending."""

    entries: tuple[tuple[Eigenvalue, int], ...]

    @property
    def n(self) -> int:
        return sum(m for _v, m in self.entries)

    @property
    def distinct_count(self) -> int:
        return len(self.entries)

    @property
    def min_value(self) -> Eigenvalue:
        return self.entries[0][0]

    @property
    def max_value(self) -> Eigenvalue:
        return self.entries[-1][0]

    def multiplicity(self, value: Eigenvalue) -> int:
        for v, m in self.entries:
            if values_equal(v, value):
                return m
        return 0

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v, _m in self.entries)

    def to_floats(self) -> list[float]:
        out: list[float] = []
        for v, m in self.entries:
            out.extend([value_to_float(v)] * m)
        return out

    def serialize(self) -> list[dict]:
        return [{"value": value_to_string(v), "mult": m} for v, m in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactSpectrum):
            return NotImplemented
        if len(self.entries) != len(other.entries):
            return False
        return all(
            m1 == m2 and values_equal(v1, v2)
            for (v1, m1), (v2, m2) in zip(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash(tuple(m for _v, m in self.entries))

    def __str__(self) -> str:
        parts = []
        for v, m in self.entries:
            parts.append(str(v) if m == 1 else f"{v}^{m}")
        return "{" + ", ".join(parts) + "}"

    def validate(self) -> None:
        """Check the trace and Frobenius identities for a Seidel spectrum.

        Both sums are integers (0 and n(n-1)); surd contributions are checked
        symbolically, interval contributions by enclosure, which is exact
        because the enclosures are far narrower than 1.
        """
        n = self.n
        if n <= 0:
            raise ValueError("empty spectrum")
        _assert_integer_sum(self.entries, power=1, target=0)
        _assert_integer_sum(self.entries, power=2, target=n * (n - 1))


def _assert_integer_sum(entries, power: int, target: int) -> None:
    rational = Fraction(0)
    radicals: dict[Fraction, Fraction] = {}
    lo_sum = Fraction(0)
    hi_sum = Fraction(0)
    has_interval = False
    for v, m in entries:
        if isinstance(v, int):
            val = Fraction(v ** power)
            rational += m * val
            lo_sum += m * val
            hi_sum += m * val
        elif isinstance(v, Surd):
            if power == 1:
                rat, rad = Fraction(v.a, v.c), Fraction(v.sign, v.c)
            else:
                rat = Fraction(v.a * v.a + v.d, v.c * v.c)
                rad = Fraction(2 * v.a * v.sign, v.c * v.c)
            # Coefficients of sqrt(d), keyed by the reduced radicand, must
            # cancel exactly across conjugate branches.
            key = Fraction(v.d)
            radicals[key] = radicals.get(key, Fraction(0)) + m * rad
            rational += m * rat
            lo, hi = v.bounds(80)
            plo, phi = _power_bounds(lo, hi, power)
            lo_sum += m * plo
            hi_sum += m * phi
        else:
            has_interval = True
            lo, hi = v.lo, v.hi
            plo, phi = _power_bounds(lo, hi, power)
            lo_sum += m * plo
            hi_sum += m * phi
    if not has_interval:
        if rational != target or any(coef != 0 for coef in radicals.values()):
            raise ValueError(f"spectrum identity failed: power {power} sum != {target}")
    else:
        if not (lo_sum <= target <= hi_sum) or hi_sum - lo_sum >= 1:
            raise ValueError(f"spectrum identity failed: power {power} enclosure misses {target}")


def _power_bounds(lo: Fraction, hi: Fraction, power: int) -> tuple[Fraction, Fraction]:
    if power == 1:
        return lo, hi
    if lo >= 0:
        return lo * lo, hi * hi
    if hi <= 0:
        return hi * hi, lo * lo
    return Fraction(0), max(lo * lo, hi * hi)


def spectrum_from_counts(counts) -> ExactSpectrum:
    """Build a sorted ExactSpectrum from (value, multiplicity) pairs, merging equals."""
    merged: list[list] = []
    for v, m in counts:
        if m == 0:
            continue
        for slot in merged:
            if values_equal(slot[0], v):
                slot[1] += m
                break
        else:
            merged.append([v, m])
    merged.sort(key=functools.cmp_to_key(lambda x, y: value_cmp(x[0], y[0])))
    return ExactSpectrum(tuple((v, m) for v, m in merged))


def quotient_spectrum(b: BlockString) -> ExactSpectrum:
    """Exact eigenvalue multiset of the quotient matrix (2k values with multiplicity)."""
    q = quotient_matrix(b)
    if q.size > CHAR_POLY_ORDER_CAP:
        raise ValueError(f"quotient order {q.size} exceeds cap {CHAR_POLY_ORDER_CAP}")
    cp = char_poly(q)
    # All eigenvalues lie in [-(n-1), n-1]: every |row| sum of Q is n - 1.
    bound = b.n
    int_roots, residual = intpoly.integer_roots(cp.coeffs, bound=bound)
    counts: list[tuple[Eigenvalue, int]] = [(z, m) for z, m in int_roots.items()]
    found = sum(int_roots.values())
    if intpoly.poly_degree(residual) >= 1:
        for factor, mult in intpoly.square_free_decomposition(residual):
            deg = intpoly.poly_degree(factor)
            if deg == 1:
                raise ArithmeticError("rational root escaped integer stripping")
            if deg == 2:
                c0, c1, c2 = factor
                if c2 != 1:
                    raise ArithmeticError("residual factor is not monic")
                disc = c1 * c1 - 4 * c0
                counts.append((Surd.make(-c1, 1, disc, 2), mult))
                counts.append((Surd.make(-c1, -1, disc, 2), mult))
            else:
                for lo, hi in intpoly.isolate_real_roots(factor, bound=bound):
                    counts.append((RootInterval.from_isolating(factor, lo, hi), mult))
            found += deg * mult
    if found != cp.degree:
        raise ArithmeticError("failed to account for every quotient eigenvalue")
    return spectrum_from_counts(counts)


def exact_spectrum(b: BlockString) -> ExactSpectrum:
    """Exact Seidel spectrum of the chain graph of b.

    Computed as the quotient spectrum plus the eigenvalue -1 with
    multiplicity n - 2k; the result always carries -1 with multiplicity at
    least n - 2k + 1.
    """
    qs = quotient_spectrum(b)
    counts = list(qs.entries)
    extra = b.n - 2 * b.k
    if extra:
        counts.append((-1, extra))
    sp = spectrum_from_counts(counts)
    sp.validate()
    return sp


def numeric_spectrum(s: SeidelMatrix) -> list[float]:
    """Floating-point eigenvalues, ascending; the independent numeric oracle."""
    if s.n > 2000:
        raise ValueError("numeric_spectrum is capped at 2000 vertices")
    try:
        vals = np.linalg.eigvalsh(np.array(s.entries, dtype=float))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise ValueError(f"eigensolver did not converge: {exc}") from exc
    return [float(x) for x in np.sort(vals)]


def is_integral(sp: ExactSpectrum) -> bool:
    """True iff every eigenvalue is an integer."""
    return sp.is_integral()


# ---------------------------------------------------------------------------
# Equiangular line parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquiangularParams:
    """Line system parameters read off a Seidel spectrum.

    n lines in dimension n - mult(lambda_min), pairwise angle
    arccos(1/|lambda_min|).
    """

    lines: int
    dimension: int
    cosine: Union[Fraction, Surd, RootInterval]
    lambda_min: Eigenvalue
    multiplicity: int


def _reciprocal_abs(v: Eigenvalue) -> Union[Fraction, Surd, RootInterval]:
    """1/|v| for a negative eigenvalue v < -1."""
    if isinstance(v, int):
        return Fraction(1, -v)
    if isinstance(v, Surd):
        return v.negate().reciprocal()
    # Root of p in (lo, hi) maps to the root of y^d p(-1/y) in (-1/lo, -1/hi).
    d = len(v.poly) - 1
    rev = intpoly.primitive(tuple(v.poly[d - i] * (-1) ** (d - i) for i in range(d + 1)))
    y_lo, y_hi = -1 / v.lo, -1 / v.hi
    # Re-isolate with dyadic endpoints: the target lies in (0, 1), and it is
    # the unique reversed-poly root inside (y_lo, y_hi).
    chain = _cached_sturm(rev)
    for lo, hi in intpoly.isolate_real_roots(rev, bound=1):
        a, b = max(lo, y_lo), min(hi, y_hi)
        if a < b and intpoly.count_roots_between(chain, a, b) == 1:
            return RootInterval.from_isolating(rev, lo, hi)
    raise ArithmeticError("failed to isolate the reciprocal eigenvalue")


def equiangular_params(sp: ExactSpectrum) -> EquiangularParams:
    """Equiangular-line parameters of a Seidel spectrum.

    Requires lambda_min < -1; a spectrum whose least eigenvalue is -1 (or
    larger) carries no nontrivial line system and is reported as degenerate.
    """
    lam = sp.min_value
    mult = sp.entries[0][1]
    if value_cmp(lam, -1) >= 0:
        raise ValueError("degenerate spectrum: smallest eigenvalue is not below -1")
    n = sp.n
    return EquiangularParams(
        lines=n,
        dimension=n - mult,
        cosine=_reciprocal_abs(lam),
        lambda_min=lam,
        multiplicity=mult,
    )
