import random
from fractions import Fraction

import pytest

from dworkgm.weyl import (LaurentPoly, ParseError, WeylOp, euler_factorization,
                          euler_op, euler_product, fourier, indicial_polynomial,
                          mobius_infinity, parse_op, singular_support)


def rand_op(rng, localized=False, terms=4):
    coeffs = []
    for _ in range(rng.randint(0, terms)):
        k = rng.randint(0, 6)
        m = rng.randint(-6 if localized else 0, 6)
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        while len(coeffs) <= k:
            coeffs.append(LaurentPoly())
        coeffs[k] = coeffs[k] + LaurentPoly.term(c, m)
    return WeylOp(coeffs)


# -- parser ------------------------------------------------------------------

def test_parse_euler_minus_half():
    op = parse_op("D - 1/2")
    assert op.coeff(1) == LaurentPoly.term(1, 1)
    assert op.coeff(0) == LaurentPoly.term(Fraction(-1, 2))


def test_parse_commutator_desugars():
    assert parse_op("d*t") == parse_op("t*d + 1")
    assert parse_op("t^-1 * D") == parse_op("d")


def test_parse_print_round_trip():
    samples = ["D - 1/2", "t^2*d^2 + t*d", "-1/2*t^-3 + d^4", "0",
               "3*t^5*d^2 - 7/4*d + 2", "t^-1"]
    for text in samples:
        op = parse_op(text)
        assert parse_op(str(op)) == op
    rng = random.Random(5)
    for _ in range(200):
        op = rand_op(rng, localized=True)
        assert parse_op(str(op)) == op


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_op("t + * d")
    assert err.value.position == 4
    with pytest.raises(ParseError, match="rational literal"):
        parse_op("t/2")
    with pytest.raises(ParseError, match="rational literal"):
        parse_op("(1+1)/2")
    with pytest.raises(ParseError, match="only on t"):
        parse_op("d^-1")
    with pytest.raises(ParseError, match="only on t"):
        parse_op("(t)^-1")
    with pytest.raises(ParseError, match="denominator"):
        parse_op("1/0")
    with pytest.raises(ParseError):
        parse_op("t +")


def test_parse_precedence_and_power():
    assert parse_op("2^3") == WeylOp.constant(8)
    assert parse_op("t^2*d + 1") == parse_op("(t^2)*(d) + 1")
    assert parse_op("-D") == -euler_op()


# -- ring arithmetic -----------------------------------------------------------

def test_commutation_relation():
    t, d = WeylOp.t(), WeylOp.d()
    assert d * t - t * d == WeylOp.one()


def test_euler_squared():
    # expand by hand with the commutation rule: D*D = t^2 d^2 + t d
    assert euler_op() * euler_op() == parse_op("t^2*d^2 + t*d")


def test_euler_operators_commute():
    a, b = Fraction(2, 3), Fraction(-5, 7)
    left = (euler_op() - WeylOp.constant(a)) * (euler_op() - WeylOp.constant(b))
    right = (euler_op() - WeylOp.constant(b)) * (euler_op() - WeylOp.constant(a))
    assert left == right


def test_ring_laws_on_random_operators():
    rng = random.Random(42)
    for _ in range(1000):
        a, b, c = (rand_op(rng, localized=True, terms=3) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)


def test_euler_factorization_small():
    assert euler_factorization(1) == euler_op()
    assert euler_factorization(2) == parse_op("t^2*d^2")


def test_euler_factorization_matches_power():
    for d in range(1, 13):
        assert euler_factorization(d) == WeylOp.t(d) * WeylOp.d(d)


def test_euler_product_matches_repeated_multiplication():
    rng = random.Random(11)
    for _ in range(50):
        constants = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                     for _ in range(rng.randint(0, 6))]
        by_product = WeylOp.one()
        for c in constants:
            by_product = by_product * (euler_op() - WeylOp.constant(c))
        assert euler_product(constants) == by_product


# -- Fourier substitution -------------------------------------------------------

def test_fourier_generators():
    assert fourier(parse_op("t")) == parse_op("d")
    assert fourier(parse_op("d")) == parse_op("-t")
    # d*(-t) = -t*d - 1
    assert fourier(euler_op()) == parse_op("-D - 1")


def test_fourier_is_ring_map():
    rng = random.Random(7)
    for _ in range(200):
        a, b = rand_op(rng), rand_op(rng)
        assert fourier(a * b) == fourier(a) * fourier(b)
        assert fourier(a + b) == fourier(a) + fourier(b)


def test_fourier_inverse_round_trip():
    rng = random.Random(8)
    for _ in range(200):
        a = rand_op(rng)
        assert fourier(fourier(a, "forward"), "inverse") == a
        assert fourier(fourier(a, "inverse"), "forward") == a


def test_fourier_rejects_laurent():
    with pytest.raises(ValueError, match="t\\^-1"):
        fourier(parse_op("t^-1"))


# -- point at infinity ----------------------------------------------------------

def test_mobius_examples():
    alpha = Fraction(3, 4)
    assert mobius_infinity(euler_op() - WeylOp.constant(alpha)) == \
        parse_op("-D - 3/4")
    assert mobius_infinity(parse_op("t")) == parse_op("t^-1")


def test_mobius_involution():
    rng = random.Random(9)
    for _ in range(300):
        a = rand_op(rng, localized=True)
        assert mobius_infinity(mobius_infinity(a)) == a


def test_mobius_is_ring_map():
    rng = random.Random(10)
    for _ in range(100):
        a, b = rand_op(rng, localized=True, terms=3), rand_op(rng, localized=True, terms=3)
        assert mobius_infinity(a * b) == mobius_infinity(a) * mobius_infinity(b)


def test_mobius_moves_hypergeometric_singularity():
    # gamma*(D - a) - t*(D - b) has its finite singularity at gamma;
    # in the coordinate at infinity it sits at 1/gamma.
    gamma = Fraction(1, 4)
    op = parse_op("1/4*(D - 1/2) - t*(D - 1/3)")
    moved = mobius_infinity(op)
    assert singular_support(moved).finite_rational == (1 / gamma,)


# -- indicial polynomials ---------------------------------------------------------

def test_indicial_kummer_both_places():
    op = parse_op("D - 1/2")
    for place in ("zero", "infinity"):
        ind = indicial_polynomial(op, place)
        assert ind.coeffs == (Fraction(-1, 2), Fraction(1))
        assert ind.root_multiset() == {Fraction(1, 2): 1}


def test_indicial_of_pure_derivation():
    ind = indicial_polynomial(parse_op("d"), "zero")
    assert ind.root_multiset() == {Fraction(0): 1}


def test_indicial_worked_hypergeometric():
    # gamma = 1/432, alpha = (0, 0), beta = (1/6, 5/6)
    op = parse_op("1/432*D*D - t*(D - 1/6)*(D - 5/6)")
    at_zero = indicial_polynomial(op, "zero")
    assert at_zero.coeffs == (Fraction(0), Fraction(0), Fraction(1))  # s^2
    assert at_zero.root_multiset() == {Fraction(0): 2}
    at_inf = indicial_polynomial(op, "infinity")
    assert at_inf.root_multiset() == {Fraction(1, 6): 1, Fraction(5, 6): 1}


def test_indicial_rejects_zero_operator():
    with pytest.raises(ValueError):
        indicial_polynomial(WeylOp.zero(), "zero")


def test_has_roots_exactly_is_product_comparison():
    ind = indicial_polynomial(parse_op("(D - 2)*(D - 1/3)"), "zero")
    assert ind.has_roots_exactly([2, Fraction(1, 3)])
    assert not ind.has_roots_exactly([2, Fraction(2, 3)])
    assert not ind.has_roots_exactly([2])


def test_indicial_roots_with_irrational_part():
    # (D^2 - 2)(D - 1/2): rational root 1/2, irreducible factor s^2 - 2
    ind = indicial_polynomial(parse_op("(D*D - 2)*(D - 1/2)"), "zero")
    rational, leftovers = ind.roots()
    assert rational == ((Fraction(1, 2), 1),)
    assert leftovers == ("s^2 - 2",)


# -- singular support ---------------------------------------------------------------

def test_kummer_has_no_finite_singularity():
    ss = singular_support(parse_op("D - 2/3"))
    assert ss.finite_rational == ()
    assert ss.regular_at_zero and ss.regular_at_infinity


def test_confluent_shape_is_irregular_at_infinity():
    # gamma*(D - a) - t, type (1, 0)
    ss = singular_support(parse_op("3*(D - 1/2) - t"))
    assert ss.regular_at_zero
    assert not ss.regular_at_infinity


def test_singular_support_irrational_points_stay_factored():
    # leading coefficient t^2 - 2: no rational root, factor reported
    ss = singular_support(parse_op("(t^2 - 2)*d + 1"))
    assert ss.finite_rational == ()
    assert ss.other_factors == ("t^2 - 2",)


def test_singular_support_rejects_zero():
    with pytest.raises(ValueError):
        singular_support(WeylOp.zero())


def test_printer_is_deterministic():
    op = parse_op("1/3*t^2*d^2 - t*d + 5 - t^-2")
    assert str(op) == str(parse_op(str(op)))
    assert str(WeylOp.zero()) == "0"
