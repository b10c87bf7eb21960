import random
from fractions import Fraction

import pytest

from conftest import random_block_string
from seidelchain import (
    Graph,
    RootInterval,
    Surd,
    build_chain_graph,
    char_poly,
    chain_graph,
    equiangular_params,
    exact_spectrum,
    is_integral,
    numeric_spectrum,
    parse_block_string,
    quotient_matrix,
    quotient_spectrum,
    seidel_matrix,
    spectrum_from_counts,
)
from seidelchain import intpoly
from seidelchain.spectra import (
    value_cmp,
    value_to_string,
    values_equal,
)


# ---------------------------------------------------------------------------
# Seidel and quotient matrices
# ---------------------------------------------------------------------------

def test_seidel_k2():
    s = seidel_matrix(chain_graph("01"))
    assert s.entries == ((0, -1), (-1, 0))


def test_seidel_empty_graph():
    s = seidel_matrix(Graph.empty(3))
    assert s.entries == ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def test_seidel_block_template():
    # 0 1^2 0^2 1: cells {0}, {1,2}, {3,4}, {5}; edges 0-1, 0-2, 0-5, 3-5, 4-5.
    s = seidel_matrix(chain_graph("0 1^2 0^2 1"))
    assert s.entries == (
        (0, -1, -1, 1, 1, -1),
        (-1, 0, 1, 1, 1, 1),
        (-1, 1, 0, 1, 1, 1),
        (1, 1, 1, 0, 1, -1),
        (1, 1, 1, 1, 0, -1),
        (-1, 1, 1, -1, -1, 0),
    )


def test_seidel_entry_identities():
    rng = random.Random(21)
    for _ in range(10):
        g = build_chain_graph(random_block_string(rng, max_k=4, max_n=25))
        s = seidel_matrix(g)
        assert sum(s.entries[i][i] for i in range(s.n)) == 0
        assert sum(x * x for row in s.entries for x in row) == s.n * (s.n - 1)


def test_quotient_matrix_examples():
    q = quotient_matrix(parse_block_string("0 1^3 0^3 1^7"))
    assert q.entries == (
        (0, -3, 3, -7),
        (-1, 2, 3, 7),
        (1, 3, 2, -7),
        (-1, 3, -3, 6),
    )
    assert q.cell_sizes == (1, 3, 3, 7)
    assert quotient_matrix(parse_block_string("01")).entries == ((0, -1), (-1, 0))


def test_quotient_row_sums_are_equitable():
    rng = random.Random(22)
    for _ in range(15):
        b = random_block_string(rng, max_k=4, max_n=25)
        g = build_chain_graph(b)
        s = seidel_matrix(g)
        q = quotient_matrix(b)
        cells = [(start, size) for _lab, start, size in b.cells()]
        for p, (p_start, p_size) in enumerate(cells):
            for qq, (q_start, q_size) in enumerate(cells):
                for v in range(p_start, p_start + p_size):
                    row_sum = sum(s.entries[v][w] for w in range(q_start, q_start + q_size))
                    assert row_sum == q.entries[p][qq]


def test_char_poly_order_cap():
    with pytest.raises(ValueError):
        char_poly([[0] * 257 for _ in range(257)])


# ---------------------------------------------------------------------------
# Exact spectra
# ---------------------------------------------------------------------------

def test_exact_spectrum_examples():
    assert exact_spectrum(parse_block_string("01^3 0^3 1^7")).entries == (
        (-5, 1), (-1, 11), (5, 1), (11, 1))
    assert exact_spectrum(parse_block_string("0^2 1^4 0^4 1^2")).entries == (
        (-5, 1), (-1, 9), (7, 2))
    assert exact_spectrum(parse_block_string("01^6 0^6 1^26")).entries == (
        (-10, 1), (-1, 36), (11, 1), (35, 1))
    assert exact_spectrum(parse_block_string("01")).entries == ((-1, 1), (1, 1))


def test_exact_spectrum_complete_bipartite():
    # K_{3,7}: quotient roots -1 and 9, then -1 appended n-2k = 8 more times.
    assert exact_spectrum(parse_block_string("0^3 1^7")).entries == ((-1, 9), (9, 1))


def test_full_char_poly_factors_through_quotient():
    rng = random.Random(23)
    for _ in range(10):
        b = random_block_string(rng, max_k=4, max_n=40)
        g = build_chain_graph(b)
        full = char_poly(seidel_matrix(g)).coeffs
        quot = char_poly(quotient_matrix(b)).coeffs
        lifted = intpoly.poly_mul(quot, intpoly.poly_pow((1, 1), b.n - 2 * b.k))
        assert full == lifted


def test_exact_matches_numeric_oracle():
    rng = random.Random(24)
    for _ in range(60):
        b = random_block_string(rng, max_k=6, max_n=60)
        sp = exact_spectrum(b)
        assert sp.n == b.n
        approx = sp.to_floats()
        numeric = numeric_spectrum(seidel_matrix(build_chain_graph(b)))
        assert len(approx) == len(numeric)
        for a, x in zip(approx, numeric):
            assert abs(a - x) < 1e-8


def test_minus_one_multiplicity():
    rng = random.Random(25)
    for _ in range(40):
        b = random_block_string(rng, max_k=6, max_n=60)
        sp = exact_spectrum(b)
        assert sp.multiplicity(-1) == b.n - 2 * b.k + 1


def test_quotient_eigenvalue_multiplicity_at_most_two():
    rng = random.Random(26)
    for _ in range(40):
        b = random_block_string(rng, max_k=8, max_n=60)
        qs = quotient_spectrum(b)
        assert qs.n == 2 * b.k
        assert all(m <= 2 for _v, m in qs.entries)


def test_interval_eigenvalues_certified():
    # k=3 alternating singletons: the quotient residual exceeds degree 2.
    b = parse_block_string("010101")
    sp = exact_spectrum(b)
    numeric = numeric_spectrum(seidel_matrix(build_chain_graph(b)))
    for a, x in zip(sp.to_floats(), numeric):
        assert abs(a - x) < 1e-8
    intervals = [v for v, _m in sp.entries if isinstance(v, RootInterval)]
    assert intervals, "expected interval-certified eigenvalues"
    for iv in intervals:
        assert iv.hi - iv.lo <= Fraction(1, 2 ** 40)
        assert iv.sign_lo != iv.sign_hi
        assert intpoly.sign_at(iv.poly, iv.lo) == iv.sign_lo
        assert intpoly.sign_at(iv.poly, iv.hi) == iv.sign_hi


def test_spectrum_validation_rejects_bad_multiset():
    with pytest.raises(ValueError):
        spectrum_from_counts([(-1, 2), (3, 1)]).validate()  # trace is 1, not 0


def test_is_integral():
    assert is_integral(exact_spectrum(parse_block_string("0 1^2 0^2 1")))
    assert not is_integral(exact_spectrum(parse_block_string("0101")))
    assert is_integral(spectrum_from_counts([(-3, 1), (-1, 3), (3, 2)]))


# ---------------------------------------------------------------------------
# Exact value machinery
# ---------------------------------------------------------------------------

def test_surd_normalization_and_equality():
    assert Surd.make(0, 1, 20, 2) == Surd.make(0, 1, 5, 1)
    assert Surd.make(2, -1, 8, 4) == Surd.make(1, -1, 2, 2)
    assert Surd.make(0, 1, 5, 1) != Surd.make(0, -1, 5, 1)
    with pytest.raises(ValueError):
        Surd.make(0, 1, 9, 1)  # perfect square radicand


def test_surd_arithmetic_helpers():
    v = Surd.make(0, -1, 5, 1)       # -sqrt(5)
    w = v.negate()
    assert float(w) == pytest.approx(5 ** 0.5, abs=1e-12)
    r = w.reciprocal()               # 1/sqrt(5) = sqrt(5)/5
    assert r == Surd.make(0, 1, 5, 5)
    assert float(r) == pytest.approx(1 / 5 ** 0.5, abs=1e-12)


def test_value_comparison_and_sorting():
    root5 = Surd.make(0, 1, 5, 1)
    assert value_cmp(-3, -1) < 0
    assert value_cmp(root5, 2) > 0
    assert value_cmp(root5, 3) < 0
    assert value_cmp(root5, root5) == 0
    assert values_equal(2, 2) and not values_equal(2, root5)


def test_value_serialization():
    assert value_to_string(-5) == "int:-5"
    assert value_to_string(Surd.make(1, 1, 5, 2)) == "surd:(1+√5)/2"
    sp = exact_spectrum(parse_block_string("0101"))
    rendered = [e["value"] for e in sp.serialize()]
    assert rendered[0] == "surd:(0-√5)/1"
    assert rendered[1] == "int:-1"


# ---------------------------------------------------------------------------
# Equiangular parameters
# ---------------------------------------------------------------------------

def test_equiangular_cospectral_pair_n14():
    ep = equiangular_params(exact_spectrum(parse_block_string("01^3 0^3 1^7")))
    assert (ep.lines, ep.dimension) == (14, 13)
    assert ep.cosine == Fraction(1, 5)
    assert ep.lambda_min == -5 and ep.multiplicity == 1


def test_equiangular_mirror_s1():
    ep = equiangular_params(exact_spectrum(parse_block_string("0 1^2 0^2 1")))
    assert (ep.lines, ep.dimension) == (6, 5)
    assert ep.cosine == Fraction(1, 3)


def test_equiangular_surd_cosine():
    ep = equiangular_params(exact_spectrum(parse_block_string("0101")))
    assert ep.lambda_min == Surd.make(0, -1, 5, 1)
    assert ep.cosine == Surd.make(0, 1, 5, 5)
    assert ep.dimension == 3


def test_equiangular_interval_cosine():
    sp = exact_spectrum(parse_block_string("010101"))
    ep = equiangular_params(sp)
    assert isinstance(ep.cosine, RootInterval)
    lam = float(sp.min_value)
    assert float(ep.cosine) == pytest.approx(1 / abs(lam), abs=1e-9)


def test_equiangular_degenerate():
    with pytest.raises(ValueError):
        equiangular_params(exact_spectrum(parse_block_string("01")))
    with pytest.raises(ValueError):
        equiangular_params(spectrum_from_counts([(-1, 2), (2, 1)]))


def test_numeric_spectrum_cap():
    with pytest.raises(ValueError):
        numeric_spectrum(seidel_matrix(Graph.empty(2001)))


def test_exact_spectrum_quotient_order_cap():
    from seidelchain import BlockString
    big = BlockString(((1, 1),) * 129)  # 2k = 258
    with pytest.raises(ValueError):
        quotient_spectrum(big)
