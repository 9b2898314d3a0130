"""Series arithmetic: worked values plus the algebraic laws as properties."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from newtonspec import SpectrumSeries, one_minus_z_pow, z_minus_one_pow

from conftest import series


def naive_mul_one_minus_z(terms, k):
    """Independent expansion oracle: repeated convolution with (1 - z)."""
    data = dict(terms)
    for _ in range(k):
        out = {}
        for e, c in data.items():
            out[e] = out.get(e, 0) + c
            out[e + 1] = out.get(e + 1, 0) - c
        data = {e: c for e, c in out.items() if c}
    return data


exponents = st.fractions(
    min_value=-4, max_value=8, max_denominator=12
)
series_strategy = st.builds(
    SpectrumSeries,
    st.lists(st.tuples(exponents, st.integers(-9, 9)), max_size=8),
)


def test_add_cancellation():
    assert series(("0", 1), ("1", 1)) + series(("0", -1)) == series(("1", 1))


def test_add_identity():
    s = series(("1/2", 2), ("3", -1))
    assert SpectrumSeries.zero() + s == s


def test_add_like_terms():
    assert series(("1/2", 1)) + series(("1/2", 1)) == series(("1/2", 2))


def test_mul_one_minus_z_basic():
    s = series(("0", 1), ("1/2", 1))
    assert s.mul_one_minus_z_pow(1) == series(
        ("0", 1), ("1/2", 1), ("1", -1), ("3/2", -1)
    )
    assert SpectrumSeries.one().mul_one_minus_z_pow(2) == series(
        ("0", 1), ("1", -2), ("2", 1)
    )


def test_mul_one_minus_z_half_steps():
    # telescoping of sum_{j=0..4} z^{j/2} times (1 - z); value frozen from
    # the naive expansion oracle
    s = SpectrumSeries({Fraction(j, 2): 1 for j in range(5)})
    got = s.mul_one_minus_z_pow(1)
    oracle = naive_mul_one_minus_z({Fraction(j, 2): 1 for j in range(5)}, 1)
    assert got == SpectrumSeries(oracle)
    assert got == series(("0", 1), ("1/2", 1), ("5/2", -1), ("3", -1))


@given(series_strategy, st.integers(0, 4))
def test_mul_one_minus_z_matches_oracle(s, k):
    assert s.mul_one_minus_z_pow(k) == SpectrumSeries(
        naive_mul_one_minus_z(dict(s.items()), k)
    )


def test_eval_at_one_examples():
    assert series(("0", 1), ("1/2", 3), ("1", 3), ("3/2", 1)).eval_at_one() == 8
    assert SpectrumSeries.zero().eval_at_one() == 0
    assert series(("1/2", 1), ("1", 3), ("3/2", 1)).eval_at_one() == 5


def test_reflect_examples():
    s = series(("1/2", 1), ("1", 3), ("3/2", 1))
    assert s.reflect(2) == s
    assert SpectrumSeries.one().reflect(0) == SpectrumSeries.one()
    palindrome = series(("0", 1), ("2", 1))
    assert palindrome.reflect(2) == palindrome


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
)
def test_fraction_arithmetic_is_exact(x, y):
    a, b = x.numerator, x.denominator
    c, d = y.numerator, y.denominator
    assert (x + y) * (b * d) == a * d + c * b


@given(series_strategy)
def test_one_minus_z_powers_compose(s):
    assert s.mul_one_minus_z_pow(1).mul_one_minus_z_pow(1) == s.mul_one_minus_z_pow(2)


@given(series_strategy, st.integers(1, 4))
def test_one_minus_z_annihilates_mass(s, k):
    assert s.mul_one_minus_z_pow(k).eval_at_one() == 0


@given(series_strategy, st.integers(-3, 6))
def test_reflect_is_involution(s, n):
    assert s.reflect(n).reflect(n) == s


@given(series_strategy)
def test_terms_ascend(s):
    exps = s.exponents()
    assert list(exps) == sorted(exps)
    assert all(c != 0 for _, c in s.items())


@given(series_strategy)
def test_json_round_trip(s):
    payload = s.to_json()
    assert payload == sorted(payload, key=lambda t: Fraction(t["exponent"]))
    assert SpectrumSeries.from_json(payload) == s


def test_z_minus_one_pow():
    assert z_minus_one_pow(2) == series(("0", 1), ("1", -2), ("2", 1))
    assert z_minus_one_pow(0) == SpectrumSeries.one()
    assert one_minus_z_pow(3) == series(("0", 1), ("1", -3), ("2", 3), ("3", -1))


def test_rendering():
    assert str(series(("0", 1), ("1/2", 3), ("1", 3), ("3/2", 1))) == (
        "1 + 3 z^{1/2} + 3 z + z^{3/2}"
    )
    assert str(series(("0", 1), ("1", 14), ("2", 5))) == "1 + 14 z + 5 z^2"
    assert str(SpectrumSeries.zero()) == "0"
    assert str(series(("0", -1), ("1", 1))) == "-1 + z"
