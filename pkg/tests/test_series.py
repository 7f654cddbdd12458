import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_eta, naive_eta_quotient, naive_product
from pod2kit import series as S
from pod2kit.series import EtaQuotientSpec, SeriesError, TruncatedSeries, make_series


def coeffs_of(s):
    return list(s.coeffs)


# construction

def test_make_series_examples():
    assert coeffs_of(make_series([1], 1)) == [1]
    q = make_series([0, 1], 2)
    assert q.order == 2 and q[1] == 1
    assert make_series([1, -1, -1], 3) == S.eta_product(1, 3)


@pytest.mark.parametrize("coeffs, order", [([1, 2], 3), ([], 0), ([1], 0)])
def test_make_series_rejects_bad_shapes(coeffs, order):
    with pytest.raises(SeriesError):
        make_series(coeffs, order)


def test_json_round_trip_keeps_big_integers():
    s = S.invert(S.eta_product(1, 500))
    assert max(abs(c) for c in s) > 2**64
    assert TruncatedSeries.from_json(s.to_json()) == s


# ring operations

def test_mul_examples():
    one_plus_q = make_series([1, 1, 0], 3)
    one_minus_q = make_series([1, -1, 0], 3)
    assert coeffs_of(one_plus_q * one_minus_q) == [1, 0, -1]
    f1 = S.eta_product(1, 10)
    assert S.mul(f1, S.invert(f1)) == S.constant(1, 10)
    f1_cubed = S.mul(S.mul(f1, f1), f1)
    assert f1_cubed[1] == -3


def test_mul_truncates_to_smaller_order():
    a = make_series([1, 1, 1, 1], 4)
    b = make_series([1, 1], 2)
    assert (a * b).order == 2
    assert (a + b).order == 2


def test_add_negate_scale():
    q = S.monomial(1, 5)
    assert S.add(q, S.negate(q)) == S.zero(5)
    psi = S.psi_series(20)
    assert coeffs_of(S.scale(psi, 2)) == [2 * c for c in psi]
    assert 1 - q == make_series([1, -1, 0, 0, 0], 5)


def test_invert_examples():
    assert coeffs_of(S.invert(make_series([1, -1, 0, 0], 4))) == [1, 1, 1, 1]
    assert coeffs_of(S.invert(S.eta_product(1, 6))) == [1, 1, 2, 3, 5, 7]
    f2 = S.eta_product(2, 40)
    assert S.invert(S.invert(f2)) == f2


def test_invert_partition_numbers_against_brute_force():
    # count partitions of n by listing them
    def count(n, largest):
        if n == 0:
            return 1
        return sum(count(n - k, k) for k in range(1, min(n, largest) + 1))

    inv = S.invert(S.eta_product(1, 25))
    assert list(inv) == [count(n, n) for n in range(25)]


def test_invert_rejects_non_unit():
    with pytest.raises(SeriesError):
        S.invert(make_series([2, 1], 2))
    with pytest.raises(SeriesError):
        S.invert(make_series([0, 1], 2))


def test_negative_unit_constant_term():
    a = make_series([-1, 3, 0, 5, -2], 5)
    assert S.mul(a, S.invert(a)) == S.constant(1, 5)
    assert S.power(a, 3) == S.mul(S.mul(a, a), a)
    assert S.power(a, -2) == S.power(S.invert(a), 2)


@pytest.mark.parametrize("e", [-7, -3, -1, 0, 1, 2, 5, 24])
def test_power_matches_invert_then_repeated_product(e):
    base = S.eta_product(1, 60)
    src = S.invert(base) if e < 0 else base
    expected = S.constant(1, 60)
    for _ in range(abs(e)):
        expected = S.mul(expected, src)
    assert S.power(base, e) == expected


def test_power_of_non_unit_series():
    a = make_series([2, 1, 0, 0], 4)
    assert coeffs_of(S.power(a, 3)) == [8, 12, 6, 1]


# property tests

small_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def series_triple(draw):
    n = draw(st.integers(min_value=1, max_value=64))
    make = lambda: TruncatedSeries(tuple(draw(st.lists(small_ints, min_size=n, max_size=n))))
    return make(), make(), make()


@settings(max_examples=60, deadline=None)
@given(series_triple())
def test_ring_laws(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@st.composite
def unit_series(draw):
    n = draw(st.integers(min_value=1, max_value=64))
    head = draw(st.sampled_from([1, -1]))
    tail = draw(st.lists(small_ints, min_size=n - 1, max_size=n - 1))
    return TruncatedSeries((head, *tail))


@settings(max_examples=100, deadline=None)
@given(unit_series())
def test_invert_is_a_two_sided_inverse(a):
    assert S.mul(a, S.invert(a)) == S.constant(1, a.order)


@settings(max_examples=40, deadline=None)
@given(unit_series(), st.integers(min_value=-6, max_value=6))
def test_power_laws(a, e):
    assert S.mul(S.power(a, e), S.power(a, -e)) == S.constant(1, a.order)


# eta products

def test_eta_product_examples():
    f1 = S.eta_product(1, 13)
    expected = [0] * 13
    for n, c in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)]:
        expected[n] = c
    assert list(f1) == expected
    assert list(S.eta_product(3, 4)) == [1, 0, 0, -1]


@pytest.mark.parametrize("j", range(1, 13))
def test_pentagonal_matches_naive_product(j):
    assert list(S.eta_product(j, 300)) == naive_eta(j, 300)


def test_expand_eta_quotient_examples():
    pod2 = EtaQuotientSpec([(2, 2), (8, 1), (1, -1), (4, -2)])
    assert list(S.expand_eta_quotient(pod2, 8)) == [1, 1, 0, 1, 2, 2, 1, 2]
    assert S.expand_eta_quotient(EtaQuotientSpec([(1, 1)]), 50) == S.eta_product(1, 50)
    delta = S.expand_eta_quotient(EtaQuotientSpec([(1, 24)], 1), 4)
    assert list(delta) == [0, 1, -24, 252]


@pytest.mark.parametrize("pairs, shift", [
    ([(2, 2), (8, 1), (1, -1), (4, -2)], 0),
    ([(6, 4), (9, 6), (3, -8), (18, -3)], 0),
    ([(18, 2), (24, 4), (36, 6), (9, -1), (12, -8), (72, -3)], 1),
    ([(1, 24)], 1),
    ([(5, 1), (5, 1), (2, -3)], 2),
])
def test_expand_eta_quotient_matches_schoolbook(pairs, shift):
    got = S.expand_eta_quotient(EtaQuotientSpec(pairs, shift), 160)
    assert list(got) == naive_eta_quotient(pairs, 160, shift)


def test_eta_quotient_duplicate_dilations_add():
    spec = EtaQuotientSpec([(2, 3), (2, -1), (1, 2), (1, -2)])
    assert spec.exponents() == {2: 2}
    assert S.expand_eta_quotient(spec, 30) == S.power(S.eta_product(2, 30), 2)


def test_eta_quotient_shift_beyond_order_is_zero():
    assert S.expand_eta_quotient(EtaQuotientSpec([(1, 1)], 9), 5) == S.zero(5)


def test_eta_spec_validation():
    with pytest.raises(SeriesError):
        EtaQuotientSpec([(0, 1)])
    with pytest.raises(SeriesError):
        EtaQuotientSpec([(1, 1)], -1)


# theta functions

def test_theta_examples():
    assert list(S.psi_series(7)) == [1, 1, 0, 1, 0, 0, 1]
    assert list(S.phi_series(5)) == [1, 2, 0, 0, 2]
    assert list(S.psi_neg(7)) == [1, -1, 0, -1, 0, 0, 1]


def _direct_phi(order, sign):
    return S.from_support([(0, 1)] + [(n * n, 2 * sign**n) for n in range(1, order) if n * n < order], order)


def _direct_psi(order, sign):
    terms, n = [], 0
    while n * (n + 1) // 2 < order:
        t = n * (n + 1) // 2
        terms.append((t, sign**t))
        n += 1
    return S.from_support(terms, order)


def test_theta_functions_match_direct_sums_at_order_500():
    assert S.psi_series(500) == _direct_psi(500, 1)
    assert S.psi_neg(500) == _direct_psi(500, -1)
    assert S.phi_series(500) == _direct_phi(500, 1)
    assert S.phi_neg(500) == _direct_phi(500, -1)


def test_theta_f_general_specialisations():
    assert S.theta_f_general(1, 1, 1, 3, 200) == S.psi_series(200)
    assert S.theta_f_general(-1, 1, -1, 2, 200) == S.eta_product(1, 200)
    assert S.theta_f_general(1, 1, 1, 1, 200) == S.phi_series(200)


def test_theta_f_general_domain():
    with pytest.raises(SeriesError):
        S.theta_f_general(1, 0, 1, 0, 10)


def _triple_product(sa, ea, sb, eb, order):
    # (-a; ab)(-b; ab)(ab; ab) with a = sa q^ea, b = sb q^eb
    s_ab, e_ab = sa * sb, ea + eb
    factors = []
    for n in range(order):
        if ea + n * e_ab < order:
            factors.append((sa * s_ab**n, ea + n * e_ab))
        if eb + n * e_ab < order:
            factors.append((sb * s_ab**n, eb + n * e_ab))
        if (n + 1) * e_ab < order:
            factors.append((-(s_ab ** (n + 1)), (n + 1) * e_ab))
    return naive_product(factors, order)


@pytest.mark.parametrize("args", [(1, 1, 1, 1), (1, 1, 1, 3), (-1, 1, -1, 2)])
def test_jacobi_triple_product(args):
    assert list(S.theta_f_general(*args, 300)) == _triple_product(*args, 300)


# structural transforms

def test_extract_and_magnify_examples():
    s = S.psi_series(40)
    assert S.extract_progression(s, 1, 0) == s
    assert list(S.magnify(make_series([1, 1], 2), 2)) == [1, 0, 1]
    assert S.magnify(S.constant(1, 1), 7) == S.constant(1, 1)
    assert S.extract_progression(S.magnify(s, 5), 5, 0) == s


def test_extract_order_is_ceiling():
    s = S.psi_series(10)
    assert S.extract_progression(s, 3, 2).order == 3  # indices 2, 5, 8
    assert S.extract_progression(s, 3, 0).order == 4


@settings(max_examples=50, deadline=None)
@given(st.lists(small_ints, min_size=1, max_size=40), st.integers(min_value=1, max_value=7), st.data())
def test_extract_magnify_round_trip(cs, m, data):
    s = TruncatedSeries(tuple(cs))
    r = data.draw(st.integers(min_value=0, max_value=m - 1))
    big = S.magnify(s, m)
    if r == 0:
        assert S.extract_progression(big, m, 0) == s
    elif r < big.order:
        part = S.extract_progression(big, m, r)
        assert part == S.zero(part.order)


def test_extract_rejects_bad_offset():
    with pytest.raises(SeriesError):
        S.extract_progression(S.psi_series(10), 3, 3)


def test_magnify_with_shift():
    s = S.magnify(make_series([1, 2], 2), 8, q_shift=1)
    assert s.order == 10
    assert s[1] == 1 and s[9] == 2 and sum(abs(c) for c in s) == 3


def test_mod_reduce_and_series_eq_mod():
    f1, f2 = S.eta_product(1, 50), S.eta_product(2, 50)
    assert S.series_eq_mod(S.mul(f1, f1), f2, 2, 50)
    assert not S.series_eq_mod(S.eta_product(1, 3), S.eta_product(2, 3), 2, 3)
    assert all(0 <= c < 8 for c in S.mod_reduce(S.scale(f1, -3), 8))
    with pytest.raises(SeriesError):
        S.mod_reduce(f1, 1)
    with pytest.raises(SeriesError):
        S.series_eq_mod(f1, f2, 2, 51)


def test_delta_mod_2_is_odd_square_indicator():
    delta = S.expand_eta_quotient(EtaQuotientSpec([(1, 24)], 1), 200)
    odd_squares = {x * x for x in range(1, 15, 2)}
    assert [n for n, c in enumerate(S.mod_reduce(delta, 2)) if c] == sorted(s for s in odd_squares if s < 200)
