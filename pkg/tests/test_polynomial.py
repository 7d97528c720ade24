from __future__ import annotations

import random

import pytest
import sympy

from cliffordfactor.algebra import DH, EPS, H, S, clifford
from cliffordfactor.errors import (
    DegenerateTransformation,
    LeadingCoefficientNotInvertible,
    ZeroPolynomial,
)
from cliffordfactor.polynomial import (
    AlgebraPolynomial,
    RealPolynomial,
    divide,
    eval_left,
    eval_right,
    is_real_norm,
    lquo,
    lrem,
    moebius,
    mrpf,
    norm_poly,
    rquo,
    rrem,
    shift,
)
from cliffordfactor.rational import rat, to_fraction
from cliffordfactor.textio import parse_element, parse_polynomial

from helpers import rand_element, rand_poly, real_poly

T = sympy.Symbol("t")


def to_sympy(P: RealPolynomial):
    return sympy.Poly([to_fraction(c) for c in reversed(P.coeffs)] or [0], T)


def from_sympy(p) -> RealPolynomial:
    return RealPolynomial([rat(sympy.Rational(c).p) / int(sympy.Rational(c).q) for c in reversed(p.all_coeffs())])


# --------------------------------------------------------------------------
# multiplication and evaluation


def test_product_of_linear_factors_keeps_order():
    rng = random.Random(1)
    for _ in range(50):
        r, q = rand_element(rng, H), rand_element(rng, H)
        C = AlgebraPolynomial.linear(r) * AlgebraPolynomial.linear(q)
        assert C == AlgebraPolynomial([r * q, -(r + q), H.one], H)


def test_multiplying_by_one():
    rng = random.Random(2)
    A = rand_poly(rng, S, 3)
    assert A * AlgebraPolynomial([S.one], S) == A


@pytest.mark.xfail(strict=True, reason="printed factor order does not multiply out under ij = k (ledgered)")
def test_circular_translation_printed_product():
    A = parse_polynomial("(t - k + eps*(-j))(t + k)", "DH")  # a = b = 0
    assert A == parse_polynomial("t^2 + 1 - eps*(j t - i)", "DH")


def test_circular_translation_reversed_product():
    for a, b in [(0, 0), (1, 2), (-3, rat(1) / 2)]:
        text = f"(t + k - eps*(({a})i + ({b})j))(t - k + eps*(({a})i + ({b} - 1)j))"
        assert parse_polynomial(text, "DH") == parse_polynomial("t^2 + 1 - eps*(j t - i)", "DH")


def test_evaluation_at_a_right_zero():
    rng = random.Random(3)
    for _ in range(50):
        r, q = rand_element(rng, H), rand_element(rng, H)
        C = AlgebraPolynomial.linear(r) * AlgebraPolynomial.linear(q)
        assert eval_right(C, q) == 0
        assert eval_right(C, r) == r * q - q * r


def test_constant_evaluates_to_itself():
    c = parse_element("1 + 2i", "H")
    P = AlgebraPolynomial([c], H)
    assert eval_right(P, parse_element("j", "H")) == c
    assert eval_left(P, parse_element("j", "H")) == c


def test_left_evaluation_sees_left_factors():
    rng = random.Random(4)
    for _ in range(50):
        r, q = rand_element(rng, H), rand_element(rng, H)
        C = AlgebraPolynomial.linear(r) * AlgebraPolynomial.linear(q)
        assert eval_left(C, r) == 0


# --------------------------------------------------------------------------
# division


def test_division_by_non_invertible_leading_coefficient():
    F = parse_polynomial("t", "DH")
    G = parse_polynomial("t eps", "DH")
    with pytest.raises(LeadingCoefficientNotInvertible):
        divide(F, G)


def test_two_quotients_for_a_zero_divisor_leading_coefficient():
    Q1 = parse_polynomial("t + 1 + 3is + js + 2ks", "S")
    S1 = parse_polynomial("1 + js", "S")
    Q2 = parse_polynomial("t + 5 - is + js + 2ks", "S")
    S2 = parse_polynomial("1 - 3js - 4ks", "S")
    G = parse_polynomial("(1 + is)t + 2js - ks", "S")
    F = parse_polynomial("(1 + is)t^2 + (4 + 4is + 5js + 2ks)t + 5 - 5is + 6js - 7ks", "S")
    assert Q1 * G + S1 == F
    assert Q2 * G + S2 == F
    with pytest.raises(LeadingCoefficientNotInvertible):
        divide(F, G)


def test_divide_by_one():
    rng = random.Random(5)
    F = rand_poly(rng, H, 3)
    q, r = divide(F, AlgebraPolynomial([H.one], H))
    assert q == F and r.is_zero()


@pytest.mark.parametrize("alg", [H, S, DH, clifford(1, 1, 1)])
def test_division_identities(alg):
    rng = random.Random(6)
    for _ in range(100):
        F = rand_poly(rng, alg, rng.randint(0, 4))
        G = rand_poly(rng, alg, rng.randint(1, 2), monic=True)
        dl = divide(F, G, "left")
        assert dl.quotient * G + dl.remainder == F
        assert dl.remainder.degree < G.degree
        dr = divide(F, G, "right")
        assert G * dr.quotient + dr.remainder == F
        assert lquo(F, G) == dl.quotient and lrem(F, G) == dl.remainder
        assert rquo(F, G) == dr.quotient and rrem(F, G) == dr.remainder


def test_remainder_agrees_with_evaluation_at_zeros_of_divisor():
    rng = random.Random(7)
    for _ in range(100):
        F = rand_poly(rng, H, 3)
        r = rand_element(rng, H)
        G = AlgebraPolynomial.linear(rand_element(rng, H)) * AlgebraPolynomial.linear(r)
        assert eval_right(G, r) == 0
        assert eval_right(F, r) == eval_right(lrem(F, G), r)


# --------------------------------------------------------------------------
# norm polynomial and mrpf


def test_norm_of_six_factorization_example():
    C = parse_polynomial("t^2 - (2 + 2is + js)t + 2is + js + 2ks + 1", "S")
    assert is_real_norm(C) == RealPolynomial.from_roots([0, -1, 2, 3])


def test_norm_of_two_is_example():
    assert is_real_norm(parse_polynomial("t^2 + 2is", "S")) == real_poly(1, 0, 0, 0, -4)


def test_norm_fast_path_matches_generic_product():
    rng = random.Random(7)
    for alg in (H, S):
        for _ in range(200):
            C = rand_poly(rng, alg, rng.randint(0, 4))
            assert norm_poly(C) == C * C.conj()


def test_norm_of_one():
    assert norm_poly(AlgebraPolynomial([H.one], H)) == AlgebraPolynomial([H.one], H)


def test_non_real_norm_detected():
    assert is_real_norm(parse_polynomial("t^2 + eps", "DH")) is None
    assert is_real_norm(parse_polynomial("t^2 + 1 + eps*i", "DH")) is not None


def test_mrpf_examples():
    real_c = parse_polynomial("t^3 - t^2 + t - 1", "H")
    assert mrpf(real_c) == real_poly(1, -1, 1, -1)
    C = parse_polynomial("t^2 - (2i+j+2)t + (2i+j+2k+1)", "H")
    assert mrpf(C) == real_poly(1)
    assert mrpf(C * AlgebraPolynomial.from_real(real_poly(1, 0, 1), H)) == real_poly(1, 0, 1)
    with pytest.raises(ZeroPolynomial):
        mrpf(AlgebraPolynomial([], H))


def test_mrpf_matches_sympy_component_gcd():
    rng = random.Random(8)
    for _ in range(50):
        C = rand_poly(rng, H, 2)
        P = real_poly(1, rng.randint(-3, 3), rng.randint(-3, 3))
        CP = C * AlgebraPolynomial.from_real(P, H)
        comps = [to_sympy(p) for p in CP.component_polys() if p]
        g = comps[0]
        for c in comps[1:]:
            g = sympy.gcd(g, c)
        assert mrpf(CP) == from_sympy(sympy.Poly(g, T).monic())


def test_norm_is_multiplicative_on_real_norm_polynomials():
    rng = random.Random(9)
    for alg in (H, S):
        for _ in range(100):
            A, B = rand_poly(rng, alg, 2), rand_poly(rng, alg, 1)
            assert norm_poly(A * B) == norm_poly(A) * norm_poly(B)


# --------------------------------------------------------------------------
# real polynomials against sympy


def test_real_division_and_gcd_match_sympy():
    rng = random.Random(10)
    for _ in range(200):
        P = RealPolynomial([rat(rng.randint(-6, 6)) for _ in range(rng.randint(1, 6))])
        Q = RealPolynomial([rat(rng.randint(-6, 6)) for _ in range(rng.randint(1, 4))])
        if Q.is_zero():
            continue
        q, r = divmod(P, Q)
        sq, sr = sympy.div(to_sympy(P), to_sympy(Q))
        assert q == from_sympy(sq) and r == from_sympy(sr)
        if P:
            g = sympy.gcd(to_sympy(P), to_sympy(Q))
            assert P.gcd(Q) == from_sympy(sympy.Poly(g, T).monic())


# --------------------------------------------------------------------------
# Moebius transformations


def test_shift_example():
    C = AlgebraPolynomial.from_real(real_poly(1, -2, 2), H)
    assert shift(C, 1) == AlgebraPolynomial.from_real(real_poly(1, 0, 1), H)


def test_moebius_identity_and_swap():
    rng = random.Random(11)
    C = rand_poly(rng, S, 3)
    assert moebius(C, 1, 0, 0, 1) == C
    t = AlgebraPolynomial.t(H)
    assert moebius(t, 0, 1, 1, 0) == AlgebraPolynomial([H.one], H)


def test_moebius_inverse_scales_by_determinant_power():
    rng = random.Random(12)
    for _ in range(30):
        C = rand_poly(rng, H, 3)
        a, b, c, d = rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(1, 3)
        det = a * d - b * c
        if det == 0:
            continue
        back = moebius(moebius(C, a, b, c, d), d, -b, -c, a)
        assert back == C * rat(det) ** C.degree


def test_degenerate_moebius_rejected():
    with pytest.raises(DegenerateTransformation):
        moebius(AlgebraPolynomial.t(H), 1, 2, 2, 4)


def test_trailing_zeros_trimmed():
    P = AlgebraPolynomial([H.one, H.zero, H.zero], H)
    assert P.degree == 0
    assert AlgebraPolynomial([], H).degree == -1
    assert (EPS * AlgebraPolynomial.t(DH)).degree == 1
