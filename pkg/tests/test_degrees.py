import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromverify.degrees import (DigitVector, IdealSpec, beta_modulus, beta_residue, digits_of,
                                 is_invariant, minimal_vq_exponent, minimal_vq_exponent_scan, qk)


@pytest.mark.parametrize("p,k,want", [(5, 1, 8), (5, 2, 48), (5, 3, 248), (7, 3, 684),
                                      (7, 4, 4800), (2, 1, 2)])
def test_qk(p, k, want):
    assert qk(p, k) == want


def test_invariant_prime_ideals():
    for p in (3, 5, 7, 11):
        for n in range(1, 6):
            assert is_invariant(IdealSpec.from_exponents(p, 1, [1] * (n - 1)))


def test_p_squared_v1_not_invariant():
    # e0 - 1 = 1 > e1 = 0
    assert not is_invariant(IdealSpec.from_exponents(5, 2, [1]))


def test_p_squared_vp_invariant():
    # (p^2, v_1^p): e0 - 1 = 1 <= e1 = 1
    assert is_invariant(IdealSpec.from_exponents(5, 2, [5]))


@pytest.mark.parametrize("k", range(1, 26))
def test_jk_invariant(k):
    assert is_invariant(IdealSpec.from_exponents(5, 1, [1, k]))


def test_strict_mode_uses_en():
    spec = IdealSpec.from_exponents(5, 1, [1, 3])  # s_2 = 3, e_2 = 0
    assert is_invariant(spec)
    assert not is_invariant(spec, e_n=0)  # 3 <= 5^0 fails
    assert is_invariant(spec, e_n=1)


def test_middle_condition():
    # (p, v_1^2, v_2): s_1 = 2 needs 2 <= p^(e_2 - e_1) = p^0
    assert not is_invariant(IdealSpec.from_exponents(5, 1, [2, 1]))
    assert is_invariant(IdealSpec.from_exponents(5, 1, [2, 5]))


def test_ideal_parse():
    spec = IdealSpec.parse(5, "1;1*p^0,1*p^2")
    assert spec.pairs == ((1, 0), (1, 2))
    assert IdealSpec.parse(5, "1;1,25") == spec
    with pytest.raises(ValueError):
        IdealSpec.parse(5, "1;5*p^0")
    with pytest.raises(ValueError):
        IdealSpec.parse(5, "1;v2")


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_minimal_exponent_closed_form_matches_scan(p, n):
    assert minimal_vq_exponent(p, n) == minimal_vq_exponent_scan(p, n)


def test_minimal_exponent_values():
    assert minimal_vq_exponent(5, 3) == 26
    assert minimal_vq_exponent(7, 4) == 393
    assert minimal_vq_exponent(3, 2) == 1
    assert 48 * 26 % 248 == 8


# generators of the subalgebra on h_{i,j}, i <= 3, at (p, n) = (7, 4) and their digits
ALG_GEN = {
    (1, 1): "0010", (2, 0): "0011", (2, 1): "0110", (3, 0): "0111", (3, 1): "1110", (3, 3): "1011",
    (1, 0): "0001", (1, 2): "0100", (1, 3): "1000", (2, 2): "1100", (2, 3): "1001", (3, 2): "1101",
}


@pytest.mark.parametrize("gen,digits", sorted(ALG_GEN.items()))
def test_generator_digits(gen, digits):
    i, j = gen
    d = digits_of(7, 4, 7**j * qk(7, i))
    assert "".join(map(str, d.digits)) == digits
    # the first group has a 1 in the p^1 place, the second a 0
    assert d.place(1) == int(digits[2])


def test_digits_zero_and_reject():
    d = digits_of(7, 4, 0)
    assert d.digits == (0, 0, 0, 0) and d.weight == 0
    assert digits_of(7, 4, 13) is None
    assert str(digits_of(7, 4, -12)) == "(1110)"


@given(st.sampled_from([(3, 2), (5, 3), (7, 4)]), st.integers(-10**6, 10**6))
def test_digits_round_trip(pn, k):
    p, n = pn
    t = k * qk(p, 1)
    d = digits_of(p, n, t)
    assert (d.value() - t) % qk(p, n) == 0
    assert all(0 <= a < p for a in d.digits)
    assert d.digits <= (1,) * n


@given(st.lists(st.integers(0, 6), min_size=4, max_size=4),
       st.lists(st.integers(0, 6), min_size=4, max_size=4))
def test_weight_additive(a, b):
    x, y = DigitVector(7, tuple(a)), DigitVector(7, tuple(b))
    s = x + y
    assert s.weight == x.weight + y.weight
    assert s.value() == x.value() + y.value()
    assert not s.normalized


def test_unnormalized_shift_congruence():
    # (a1+k ... a4+k)_N is congruent to (a1 ... a4) mod q_4
    base = DigitVector(7, (1, 1, 1, 0))
    ones = DigitVector(7, (1, 1, 1, 1))
    assert (base + ones).value() % 4800 == base.value()


@pytest.mark.parametrize("w,u", [(698, 42), (796, 58), (82, 0)])
def test_beta_residue(w, u):
    assert beta_residue(7, w) == (w, u)


@given(st.sampled_from([3, 5, 7, 11]), st.integers(0, 10**5), st.integers(0, 50))
def test_beta_residue_periodic(p, w, c):
    assert beta_residue(p, w + beta_modulus(p) * c)[1] == beta_residue(p, w)[1]
