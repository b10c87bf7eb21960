import random
from fractions import Fraction

import pytest

from seidelchain import (
    Surd,
    classify_integral_pair,
    cospectral_pairs_up_to,
    equiangular_params,
    exact_spectrum,
    generate_cospectral_pair,
    generate_integral_family,
    integer_sqrt,
    integral_family_params,
    is_perfect_square,
    mirror_chain_family,
    mirror_chain_string,
    scan_seidel_integral,
    spectrum_from_counts,
    unit_chain_spectrum,
    unit_chain_string,
)


# ---------------------------------------------------------------------------
# Integer square root oracle
# ---------------------------------------------------------------------------

def test_perfect_square_basics():
    assert is_perfect_square(0) and is_perfect_square(1) and is_perfect_square(196)
    assert not is_perfect_square(20)
    big = (10 ** 30 + 7) ** 2
    assert is_perfect_square(big) and not is_perfect_square(big + 1)
    assert integer_sqrt(big) == 10 ** 30 + 7
    assert integer_sqrt(17) == 4
    with pytest.raises(ValueError):
        is_perfect_square(-4)
    with pytest.raises(ValueError):
        integer_sqrt(-1)


def test_family_discriminants_are_squares():
    for fam in ("F1", "F2", "F3", "F4", "F5", "F6"):
        r0 = {"F5": 3}.get(fam, {"F4": 1, "F6": 1}.get(fam, 2))
        for r in range(r0, 51):
            n, m = integral_family_params(fam, r)
            assert is_perfect_square((n - 2 * m) * (n + 6 * m)), (fam, r)
    for idx in range(3):
        n, m = integral_family_params("S", idx)
        assert is_perfect_square((n - 2 * m) * (n + 6 * m))


# ---------------------------------------------------------------------------
# Cospectral pairs
# ---------------------------------------------------------------------------

def test_pair_r1():
    p = generate_cospectral_pair(1)
    assert (p.r, p.m, p.n) == (1, 3, 14)
    assert p.string_a.caret() == "0 1^3 0^3 1^7"
    assert p.string_b.caret() == "0 1^6 0^6 1"
    assert p.predicted.entries == ((-5, 1), (-1, 11), (5, 1), (11, 1))
    assert p.verify()


def test_pair_r3_and_r19():
    p = generate_cospectral_pair(3)
    assert (p.m, p.n) == (6, 28)
    assert p.predicted.entries == ((-9, 1), (-1, 25), (11, 1), (23, 1))
    p = generate_cospectral_pair(19)
    assert (p.m, p.n) == (30, 140)
    assert p.predicted.entries == ((-41, 1), (-1, 137), (59, 1), (119, 1))


@pytest.mark.parametrize("bad_r", [0, -1, 2, 6])
def test_pair_rejects_bad_r(bad_r):
    with pytest.raises(ValueError):
        generate_cospectral_pair(bad_r)


def test_pairs_are_exactly_cospectral():
    for r in range(1, 43, 2):
        p = generate_cospectral_pair(r)
        sa, sb = exact_spectrum(p.string_a), exact_spectrum(p.string_b)
        assert sa == sb == p.predicted
        assert sa.distinct_count == 4
        # Least eigenvalue -(2m-r) is simple; spectral radius is n-(r+2).
        assert sa.min_value == -(2 * p.m - p.r) and sa.entries[0][1] == 1
        assert sa.max_value == p.n - (p.r + 2) == 4 * p.m - 1


def test_pair_equiangular_parameters():
    for r in (1, 3, 5):
        p = generate_cospectral_pair(r)
        ep = equiangular_params(exact_spectrum(p.string_a))
        assert ep.lines == p.n == 4 * p.m + p.r + 1
        assert ep.dimension == p.n - 1
        assert ep.cosine == Fraction(1, 2 * p.m - p.r)


def test_pairs_up_to():
    pairs = cospectral_pairs_up_to(140)
    assert [p.n for p in pairs] == [14, 28, 42, 56, 70, 84, 98, 112, 126, 140]
    assert cospectral_pairs_up_to(13) == []


# ---------------------------------------------------------------------------
# Mirror chains
# ---------------------------------------------------------------------------

def test_mirror_family_small():
    s, sp = mirror_chain_family(1)
    assert s.caret() == "0 1^2 0^2 1"
    assert sp.entries == ((-3, 1), (-1, 3), (3, 2))
    s, sp = mirror_chain_family(5)
    assert s.caret() == "0^5 1^10 0^10 1^5"
    assert sp.entries == ((-11, 1), (-1, 27), (19, 2))


def test_mirror_family_exact_and_shape():
    for s in range(1, 11):
        string, predicted = mirror_chain_family(s)
        sp = exact_spectrum(string)
        assert sp == predicted
        assert sp.is_integral()
        assert sp.distinct_count == 3
        # trace identity in closed form
        assert -(6 * s - 3) - (2 * s + 1) + 2 * (4 * s - 1) == 0


def test_mirror_string_rejects_bad_s():
    with pytest.raises(ValueError):
        mirror_chain_string(0)


# ---------------------------------------------------------------------------
# Unit-chain spectra and parameterized families
# ---------------------------------------------------------------------------

def test_unit_chain_spectrum_examples():
    assert unit_chain_spectrum(15, 5).entries == ((-6, 1), (-1, 12), (9, 2))
    assert unit_chain_spectrum(14, 6).entries == ((-5, 1), (-1, 11), (5, 1), (11, 1))
    sp = unit_chain_spectrum(4, 1)
    assert sp.entries == (
        (Surd.make(0, -1, 5, 1), 1), (-1, 1), (1, 1), (Surd.make(0, 1, 5, 1), 1))
    assert not sp.is_integral()


def test_unit_chain_spectrum_matches_exact():
    rng = random.Random(51)
    for _ in range(30):
        m = rng.randint(1, 12)
        n = rng.randint(2 * m + 2, 2 * m + 60)
        assert unit_chain_spectrum(n, m) == exact_spectrum(unit_chain_string(m, n - 2 * m - 1))


def test_unit_chain_spectrum_validates_input():
    with pytest.raises(ValueError):
        unit_chain_spectrum(5, 2)  # n = 2m+1
    with pytest.raises(ValueError):
        unit_chain_spectrum(4, 0)


@pytest.mark.parametrize("family,r,expected", [
    ("F1", 2, (6, 2)),
    ("F2", 2, (26, 12)),
    ("F3", 2, (26, 4)),
    ("F4", 1, (6, 2)),
    ("F5", 3, (31, 3)),
    ("F6", 1, (12, 4)),
    ("S", 0, (6, 2)),
    ("S", 1, (14, 6)),
    ("S", 2, (12, 4)),
])
def test_family_params(family, r, expected):
    assert integral_family_params(family, r) == expected


@pytest.mark.parametrize("family,r", [
    ("F1", 1), ("F2", 1), ("F3", 0), ("F4", 0), ("F5", 2), ("F6", 0),
    ("S", 3), ("S", -1), ("XX", 2),
])
def test_family_params_rejects(family, r):
    with pytest.raises(ValueError):
        integral_family_params(family, r)


def test_generated_families_are_integral():
    for fam in ("F1", "F2", "F3", "F4", "F5", "F6"):
        r0 = {"F5": 3, "F4": 1, "F6": 1}.get(fam, 2)
        for r in range(r0, r0 + 5):
            member = generate_integral_family(fam, r)
            assert member.predicted.is_integral()
            assert member.verify()


def test_sporadics_verify():
    for idx in range(3):
        member = generate_integral_family("S", idx)
        assert member.verify()


# ---------------------------------------------------------------------------
# Brute scan
# ---------------------------------------------------------------------------

def test_scan_to_15_frozen():
    hits = {(h.n, h.m): h for h in scan_seidel_integral(15)}
    assert set(hits) == {(6, 2), (9, 3), (12, 4), (13, 2), (14, 3), (14, 6), (15, 5)}
    assert all(h.verified_integral for h in hits.values())
    assert hits[(6, 2)].families == ("F1", "F4", "S")
    assert hits[(12, 4)].families == ("F1", "F6", "S")
    assert hits[(14, 6)].families == ("F4", "S")
    assert hits[(15, 5)].families == ("F1",)
    # The r=1 members of the 13r families and the r=1 cospectral string fall
    # outside every stated family range.
    assert hits[(13, 2)].unclassified
    assert hits[(14, 3)].unclassified


def test_scan_contains_all_family_members():
    hits = {(h.n, h.m) for h in scan_seidel_integral(100)}
    for fam in ("F1", "F2", "F3", "F4", "F5", "F6"):
        r0 = {"F5": 3, "F4": 1, "F6": 1}.get(fam, 2)
        r = r0
        while True:
            n, m = integral_family_params(fam, r)
            if n > 100:
                break
            assert (n, m) in hits, (fam, r)
            r += 1


def test_scan_cap():
    with pytest.raises(ValueError):
        scan_seidel_integral(501)


def test_scan_hit_serialization():
    hit = scan_seidel_integral(6)[0]
    doc = hit.serialize()
    assert doc == {
        "n": 6, "m": 2, "families": ["F1", "F4", "S"],
        "unclassified": False, "verified": True,
    }


def test_classify_integral_pair_direct():
    assert classify_integral_pair(26, 12) == ("F2", "F4")
    assert classify_integral_pair(31, 3) == ("F5",)
    assert classify_integral_pair(19, 5) == ()


def test_predicted_spectra_satisfy_identities():
    # spectrum_from_counts + validate() runs the trace/Frobenius identities.
    for r in (1, 5, 9):
        generate_cospectral_pair(r).predicted.validate()
    for s in (1, 4, 8):
        mirror_chain_family(s)[1].validate()
    with pytest.raises(ValueError):
        # trace is 0 but the Frobenius sum is 2, not 3*2
        spectrum_from_counts([(-1, 1), (0, 1), (1, 1)]).validate()
