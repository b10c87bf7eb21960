"""Cospectral pairs and Seidel-integral families of chain graphs.

Two shapes of block string drive everything here:

* unit chains 0 1^a 0^a 1^b (a single leading 0-vertex, equal middle
  blocks): the n-vertex unit chain with a = m has Seidel spectrum
  -1^(n-3), 2m-1, and -(m+1) + (n +- sqrt((n-2m)(n+6m)))/2, so it is
  integral exactly when (n-2m)(n+6m) is a perfect square.
* mirror chains 0^s 1^2s 0^2s 1^s, always integral with spectrum
  -1^(6s-3), -(2s+1), (4s-1)^2.

Pairs of unit chains with the same spectrum arise for every odd r >= 1 via
m = 3(r+1)/2; the parameterized families below enumerate perfect-square
solutions (n, m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chain import BlockString
from .spectra import (
    ExactSpectrum,
    Surd,
    exact_spectrum,
    spectrum_from_counts,
)


def integer_sqrt(x: int) -> int:
    """Exact floor square root of a nonnegative integer."""
    if x < 0:
        raise ValueError("integer_sqrt of a negative number")
    return math.isqrt(x)


def is_perfect_square(x: int) -> bool:
    if x < 0:
        raise ValueError("is_perfect_square of a negative number")
    return math.isqrt(x) ** 2 == x


def unit_chain_string(a: int, b: int) -> BlockString:
    """The block string 0 1^a 0^a 1^b."""
    if a < 1 or b < 1:
        raise ValueError("block sizes must be positive")
    return BlockString(((1, a), (a, b)))


def mirror_chain_string(s: int) -> BlockString:
    """The block string 0^s 1^2s 0^2s 1^s."""
    if s < 1:
        raise ValueError("s must be positive")
    return BlockString(((s, 2 * s), (2 * s, s)))


def unit_chain_spectrum(n: int, m: int) -> ExactSpectrum:
    """Predicted Seidel spectrum of the n-vertex unit chain 0 1^m 0^m 1^(n-2m-1).

    -1 with multiplicity n-3, the value 2m-1, and the conjugate pair
    -(m+1) + (n +- sqrt(D))/2 with D = (n-2m)(n+6m).  D has the parity of n,
    so whenever D is a perfect square the pair is integral; coinciding values
    are merged (at n = 3m the upper branch equals 2m-1).
    """
    if m < 1 or n <= 2 * m + 1:
        raise ValueError("need n > 2m+1 >= 3")
    disc = (n - 2 * m) * (n + 6 * m)
    counts: list[tuple] = [(-1, n - 3), (2 * m - 1, 1)]
    if is_perfect_square(disc):
        root = math.isqrt(disc)
        for sign in (1, -1):
            num = n + sign * root - 2 * (m + 1)
            if num % 2:
                raise ArithmeticError("parity violation in integral branch")
            counts.append((num // 2, 1))
    else:
        counts.append((Surd.make(n - 2 * m - 2, 1, disc, 2), 1))
        counts.append((Surd.make(n - 2 * m - 2, -1, disc, 2), 1))
    sp = spectrum_from_counts(counts)
    sp.validate()
    return sp


# ---------------------------------------------------------------------------
# Cospectral pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CospectralPair:
    """Two inequivalent unit chains sharing an exact Seidel spectrum.

    For odd r >= 1 and m = 3(r+1)/2: the strings 0 1^m 0^m 1^(2m+r) and
    0 1^2m 0^2m 1^r on n = 4m+r+1 vertices.  Predicted spectrum:
    -1^(n-3), -(2m-r), 2m-1, 4m-1, so the least eigenvalue is -(2m-r)
    (simple) and the spectral radius is 4m-1 = n-(r+2).
    """

    r: int
    m: int
    n: int
    string_a: BlockString
    string_b: BlockString
    predicted: ExactSpectrum

    def verify(self) -> bool:
        """Recompute both exact spectra and compare with the prediction."""
        sa = exact_spectrum(self.string_a)
        sb = exact_spectrum(self.string_b)
        return sa == self.predicted and sb == self.predicted

    def serialize(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "n": self.n,
            "string_a": self.string_a.caret(),
            "string_b": self.string_b.caret(),
            "spectrum": self.predicted.serialize(),
        }


def generate_cospectral_pair(r: int) -> CospectralPair:
    if r < 1 or r % 2 == 0:
        raise ValueError("r must be an odd positive integer")
    m = 3 * (r + 1) // 2
    n = 4 * m + r + 1
    predicted = spectrum_from_counts([
        (-1, n - 3),
        (-(2 * m - r), 1),
        (2 * m - 1, 1),
        (4 * m - 1, 1),
    ])
    predicted.validate()
    return CospectralPair(
        r=r,
        m=m,
        n=n,
        string_a=unit_chain_string(m, 2 * m + r),
        string_b=unit_chain_string(2 * m, r),
        predicted=predicted,
    )


def cospectral_pairs_up_to(n_max: int) -> list[CospectralPair]:
    """All cospectral pairs with n = 4m+r+1 <= n_max, ascending r."""
    out = []
    r = 1
    while True:
        pair = generate_cospectral_pair(r)
        if pair.n > n_max:
            return out
        out.append(pair)
        r += 2


# ---------------------------------------------------------------------------
# Integral families
# ---------------------------------------------------------------------------

def mirror_chain_family(s: int) -> tuple[BlockString, ExactSpectrum]:
    """The integral mirror chain 0^s 1^2s 0^2s 1^s with its predicted spectrum."""
    if s < 1:
        raise ValueError("s must be positive")
    predicted = spectrum_from_counts([
        (-1, 6 * s - 3),
        (-(2 * s + 1), 1),
        (4 * s - 1, 2),
    ])
    predicted.validate()
    return mirror_chain_string(s), predicted


_FAMILY_PARAMS = {
    "F1": (lambda r: (3 * r, r), 2),
    "F2": (lambda r: (13 * r, 6 * r), 2),
    "F3": (lambda r: (13 * r, 2 * r), 2),
    "F4": (lambda r: (2 * r * r + 2 * r + 2, r * r + r), 1),
    "F5": (lambda r: (4 * r * r - 2 * r + 1, r), 3),
    "F6": (lambda r: (4 * r * r + 4 * r + 4, 2 * r * r + 2 * r), 1),
}

SPORADIC_PAIRS: tuple[tuple[int, int], ...] = ((6, 2), (14, 6), (12, 4))

FAMILY_IDS: tuple[str, ...] = ("F1", "F2", "F3", "F4", "F5", "F6", "S")


def integral_family_params(family_id: str, r: int) -> tuple[int, int]:
    """The (n, m) pair of a parameterized integral family member.

    F1: (3r, r), F2: (13r, 6r), F3: (13r, 2r) for r >= 2; F4:
    (2r^2+2r+2, r^2+r), F6: (4r^2+4r+4, 2r^2+2r) for r >= 1; F5:
    (4r^2-2r+1, r) for r >= 3.  "S" indexes the sporadic pairs (6,2),
    (14,6), (12,4) with r in {0, 1, 2}.
    """
    if family_id == "S":
        if not 0 <= r < len(SPORADIC_PAIRS):
            raise ValueError("sporadic index must be 0, 1, or 2")
        return SPORADIC_PAIRS[r]
    if family_id not in _FAMILY_PARAMS:
        raise ValueError(f"unknown family {family_id!r}")
    formula, r_min = _FAMILY_PARAMS[family_id]
    if r < r_min:
        raise ValueError(f"family {family_id} requires r >= {r_min}")
    return formula(r)


@dataclass(frozen=True)
class IntegralFamily:
    """One member of a Seidel-integral unit-chain family."""

    family_id: str
    r: int
    n: int
    m: int
    string: BlockString
    predicted: ExactSpectrum

    def verify(self) -> bool:
        sp = exact_spectrum(self.string)
        return sp == self.predicted and sp.is_integral()

    def serialize(self) -> dict:
        return {
            "family": self.family_id,
            "r": self.r,
            "n": self.n,
            "m": self.m,
            "string": self.string.caret(),
            "spectrum": self.predicted.serialize(),
        }


def generate_integral_family(family_id: str, r: int) -> IntegralFamily:
    n, m = integral_family_params(family_id, r)
    return IntegralFamily(
        family_id=family_id,
        r=r,
        n=n,
        m=m,
        string=unit_chain_string(m, n - 2 * m - 1),
        predicted=unit_chain_spectrum(n, m),
    )


def classify_integral_pair(n: int, m: int) -> tuple[str, ...]:
    """Family ids whose stated parameter ranges generate (n, m)."""
    tags = []
    if n == 3 * m and m >= 2:
        tags.append("F1")
    if m % 6 == 0 and m // 6 >= 2 and n == 13 * (m // 6):
        tags.append("F2")
    if m % 2 == 0 and m // 2 >= 2 and n == 13 * (m // 2):
        tags.append("F3")
    r4 = (math.isqrt(4 * m + 1) - 1) // 2
    if r4 >= 1 and r4 * r4 + r4 == m and n == 2 * m + 2:
        tags.append("F4")
    if m >= 3 and n == 4 * m * m - 2 * m + 1:
        tags.append("F5")
    if m % 2 == 0:
        half = m // 2
        r6 = (math.isqrt(4 * half + 1) - 1) // 2
        if r6 >= 1 and r6 * r6 + r6 == half and n == 2 * m + 4:
            tags.append("F6")
    if (n, m) in SPORADIC_PAIRS:
        tags.append("S")
    return tuple(tags)


@dataclass(frozen=True)
class ScanHit:
    """One (n, m) with perfect-square discriminant found by the brute scan."""

    n: int
    m: int
    families: tuple[str, ...]
    verified_integral: bool

    @property
    def unclassified(self) -> bool:
        return not self.families

    def serialize(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "families": list(self.families),
            "unclassified": self.unclassified,
            "verified": self.verified_integral,
        }


def scan_seidel_integral(n_max: int) -> list[ScanHit]:
    """All (n, m) with 2m+1 < n <= n_max whose unit chain is Seidel integral.

    Brute perfect-square scan of (n-2m)(n+6m); every hit's exact spectrum is
    recomputed and checked integral.  Hits outside all family ranges are
    surfaced as unclassified, never suppressed.
    """
    if n_max > 500:
        raise ValueError("scan is capped at n_max = 500")
    hits = []
    for n in range(4, n_max + 1):
        for m in range(1, (n - 1) // 2 + 1):
            if n <= 2 * m + 1:
                continue
            if not is_perfect_square((n - 2 * m) * (n + 6 * m)):
                continue
            sp = exact_spectrum(unit_chain_string(m, n - 2 * m - 1))
            hits.append(ScanHit(
                n=n,
                m=m,
                families=classify_integral_pair(n, m),
                verified_integral=sp.is_integral(),
            ))
    return hits
