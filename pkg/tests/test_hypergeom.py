import random
from fractions import Fraction

import pytest

from dworkgm import weyl
from dworkgm.hypergeom import (ExpMultiset, FactorList, KummerModule,
                               PushforwardHyp, cancel, canonical_rep, delta,
                               euler_char, exponents, hyp_factor, hyp_operator,
                               is_irreducible, kummer, kummer_twist,
                               puncture_fiber_cohomology, make_hyp, power_pullback,
                               power_pushforward, structure)
from conftest import random_hyp_data

F = Fraction


def test_canonical_representatives():
    assert canonical_rep(0) == 1
    assert canonical_rep(1) == 1
    assert canonical_rep(F(5, 3)) == F(2, 3)
    assert canonical_rep(F(-1, 3)) == F(2, 3)
    assert canonical_rep(F(1, 3)) == F(1, 3)


def test_multiset_equality_is_class_wise():
    assert ExpMultiset([0, 0]) == ExpMultiset([1, 1])
    assert ExpMultiset([F(1, 3)]) == ExpMultiset([F(4, 3)])
    assert ExpMultiset([F(1, 3)]) != ExpMultiset([F(1, 3), F(1, 3)])


# -- cancel ---------------------------------------------------------------------

def test_cancel_worked_examples():
    a, b = cancel([1, 1, 1], [F(1, 3), F(2, 3), 1])
    assert a == ExpMultiset([1, 1]) and b == ExpMultiset([F(1, 3), F(2, 3)])

    a, b = cancel([F(1, 2), F(1, 2), 1, 1, 1, 1],
                  [F(k, 6) for k in range(1, 7)])
    assert a == ExpMultiset([F(1, 2), 1, 1, 1])
    assert b == ExpMultiset([F(1, 6), F(2, 6), F(4, 6), F(5, 6)])

    a, b = cancel([], [F(1, 2)])
    assert len(a) == 0 and b == ExpMultiset([F(1, 2)])


def test_cancel_idempotent_order_independent():
    rng = random.Random(3)
    for _ in range(200):
        xs = [F(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(rng.randint(0, 6))]
        ys = [F(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(rng.randint(0, 6))]
        a, b = cancel(xs, ys)
        # disjoint after one pass, stable under a second
        assert not (a.classes() & b.classes())
        assert cancel(a, b) == (a, b)
        # order independent and length-difference preserving
        rng.shuffle(xs), rng.shuffle(ys)
        a2, b2 = cancel(xs, ys)
        assert (a2, b2) == (a, b)
        assert len(a) - len(b) == len(xs) - len(ys)


# -- construction ------------------------------------------------------------------

def test_make_hyp_delta_type():
    h = make_hyp(F(1, 3))
    assert h.type == (0, 0) and h.is_delta


def test_make_hyp_reduce_displays_canonical():
    h = make_hyp(F(1, 27), [1, 1, 1], [F(1, 3), F(2, 3), 1], reduce=True)
    assert h.alpha == ExpMultiset([0, 0])
    assert h.display() == "Hyp(gamma=1/27; alpha=[1, 1]; beta=[1/3, 2/3])"


def test_make_hyp_full_cancellation():
    h = make_hyp(1, [F(1, 2)], [F(1, 2)], reduce=True)
    assert h.type == (0, 0)


def test_make_hyp_rejects_zero_gamma():
    with pytest.raises(ValueError):
        make_hyp(0, [1], [2])


# -- operator realization -------------------------------------------------------------

def test_hyp_operator_examples():
    assert hyp_operator(make_hyp(F(2, 5))) == weyl.parse_op("2/5 - t")
    assert hyp_operator(make_hyp(1, [0], [])) == weyl.parse_op("D - t")
    expected = weyl.parse_op("1/27*D*D - t*(D - 1/3)*(D - 2/3)")
    assert hyp_operator(make_hyp(F(1, 27), [0, 0], [F(1, 3), F(2, 3)])) == expected


def test_operator_uses_stored_representatives():
    lowered = make_hyp(1, [0], [F(1, 2)])
    raised = make_hyp(1, [1], [F(3, 2)])
    # equal as data mod Z, but realized on the chosen representatives
    assert lowered == raised
    assert hyp_operator(lowered) != hyp_operator(raised)
    assert weyl.indicial_polynomial(hyp_operator(raised), "zero").root_multiset() \
        == {F(1): 1}


# -- irreducibility and exponents ----------------------------------------------------

def test_irreducibility_criterion():
    assert is_irreducible(make_hyp(1, [0, 0], [F(1, 3), F(2, 3)]))
    assert not is_irreducible(make_hyp(1, [F(1, 2)], [F(3, 2)]))
    assert is_irreducible(make_hyp(1))


def test_reduce_always_gives_irreducible():
    rng = random.Random(4)
    for _ in range(100):
        xs = [F(rng.randint(-9, 9), rng.randint(1, 8)) for _ in range(rng.randint(0, 5))]
        ys = [F(rng.randint(-9, 9), rng.randint(1, 8)) for _ in range(rng.randint(0, 5))]
        assert is_irreducible(make_hyp(1, xs, ys, reduce=True))


def test_exponents_worked_example():
    h = make_hyp(F(1, 27), [0, 0], [F(1, 3), F(2, 3)])
    assert exponents(h, "zero") == ExpMultiset([0, 0])
    assert exponents(h, "infinity") == ExpMultiset([F(1, 3), F(2, 3)])


def test_exponents_reject_reducible():
    with pytest.raises(ValueError, match="irreducible"):
        exponents(make_hyp(1, [F(1, 2)], [F(3, 2)]), "zero")


def test_exponent_indicial_agreement_sample():
    for h in random_hyp_data(50, seed=1202):
        op = hyp_operator(h)
        for place, source in (("zero", h.alpha), ("infinity", h.beta)):
            ind = weyl.indicial_polynomial(op, place)
            assert ind.has_roots_exactly(source.reps)
        ss = weyl.singular_support(op)
        assert ss.finite_rational == (h.gamma,)
        assert ss.regular_at_zero and ss.regular_at_infinity


def test_operator_recovers_parameters():
    # type, exponent classes and gamma are all readable off the operator
    h = make_hyp(F(3, 7), [F(1, 5), F(2, 5)], [F(1, 2), F(1, 3)])
    op = hyp_operator(h)
    assert op.order() == 2
    assert weyl.indicial_polynomial(op, "zero").has_roots_exactly(h.alpha.reps)
    assert weyl.indicial_polynomial(op, "infinity").has_roots_exactly(h.beta.reps)
    assert weyl.singular_support(op).finite_rational == (F(3, 7),)


# -- twists ---------------------------------------------------------------------------

def test_twist_examples():
    h = make_hyp(1, [0], [F(1, 2)])
    assert kummer_twist(h, 0) == h
    twisted = kummer_twist(h, F(1, 3))
    assert twisted.alpha == ExpMultiset([F(1, 3)])
    assert twisted.beta == ExpMultiset([F(5, 6)])
    assert kummer_twist(twisted, F(-1, 3)) == h


def test_twist_preserves_irreducibility_and_shifts_exponents():
    rng = random.Random(6)
    for h in random_hyp_data(40, seed=77):
        eta = F(rng.randint(-6, 6), rng.randint(1, 6))
        twisted = kummer_twist(h, eta)
        assert is_irreducible(twisted)
        op = hyp_operator(twisted)
        assert weyl.indicial_polynomial(op, "zero").has_roots_exactly(
            [a + eta for a in h.alpha.reps])


# -- power maps -----------------------------------------------------------------------

def test_pullback_examples():
    assert power_pullback(KummerModule(F(1, 2)), -6) == structure()
    assert power_pullback(KummerModule(F(1, 3)), 1) == kummer(F(1, 3))
    assert power_pullback(KummerModule(F(1, 3)), 2) == kummer(F(2, 3))
    with pytest.raises(ValueError):
        power_pullback(KummerModule(F(1, 3)), 0)


def test_pullback_hyp_is_bookkeeping():
    h = make_hyp(1, [F(1, 2)], [F(1, 3)])
    note = power_pullback(h, -6)
    assert note.power == -6
    assert note.alpha == ExpMultiset([1])
    assert note.beta == ExpMultiset([1])


def test_pushforward_examples():
    assert power_pushforward(KummerModule(0), 3) == \
        FactorList([kummer(F(1, 3)), kummer(F(2, 3)), structure()])
    assert power_pushforward(KummerModule(F(2, 5)), 1) == FactorList([kummer(F(2, 5))])
    assert power_pushforward(KummerModule(F(1, 2)), 2) == \
        FactorList([kummer(F(1, 4)), kummer(F(3, 4))])


def test_pushforward_hyp_pair():
    h = make_hyp(F(1, 432), [0, 0], [F(1, 6), F(5, 6)])
    pair = power_pushforward(h, 2)
    assert isinstance(pair, PushforwardHyp)
    assert pair.rank == 4
    assert pair.exponents("zero") == ExpMultiset([F(1, 2), 1, F(1, 2), 1])
    assert pair.exponents("infinity") == \
        ExpMultiset([F(1, 12), F(7, 12), F(5, 12), F(11, 12)])


def test_pushforward_scaling_recovers_classes():
    rng = random.Random(12)
    for _ in range(100):
        alpha = F(rng.randint(-12, 12), rng.randint(1, 9))
        e = rng.randint(1, 5)
        pushed = power_pushforward(KummerModule(alpha), e)
        recovered = ExpMultiset(
            canonical_rep((f.param if f.kind == "kummer" else F(1)) * e)
            for f in pushed
        )
        assert recovered == ExpMultiset([alpha] * e)


def test_pushforward_preserves_euler_char():
    kummers = FactorList([kummer(F(1, 2)), kummer(F(1, 3))])
    pushed = FactorList([])
    for f in kummers:
        pushed = pushed + power_pushforward(KummerModule(f.param), 4)
    assert euler_char(kummers) == euler_char(pushed) == 0
    h = make_hyp(F(1, 27), [0, 0], [F(1, 3), F(2, 3)])
    pair = power_pushforward(h, 3)
    assert euler_char(FactorList([hyp_factor(pair.base)])) == -1


# -- Euler characteristics ---------------------------------------------------------------

def test_euler_char_examples():
    assert euler_char(FactorList([kummer(F(1, 2)), kummer(F(1, 3))])) == 0
    h = make_hyp(F(1, 27), [0, 0], [F(1, 3), F(2, 3)])
    assert euler_char(FactorList([hyp_factor(h)])) == -1
    assert euler_char(FactorList([])) == 0
    assert euler_char(FactorList([delta(F(1, 7))])) == -1


def test_euler_char_additive():
    a = FactorList([kummer(F(1, 2)), delta(1)])
    b = FactorList([hyp_factor(make_hyp(2, [0], [F(1, 2)]))])
    assert euler_char(a + b) == euler_char(a) + euler_char(b)


def test_euler_char_rejects_reducible():
    with pytest.raises(ValueError, match="reducible"):
        euler_char(FactorList([hyp_factor(make_hyp(1, [F(1, 2)], [F(3, 2)]))]))


def test_factor_list_equality_mod_z():
    assert FactorList([kummer(F(1, 2)), structure()]) == \
        FactorList([kummer(F(3, 2)), kummer(1)])


# -- fiber over the puncture -----------------------------------------------------------

def test_puncture_fiber_integral_case():
    table = puncture_fiber_cohomology(1, (1, 1, 2))
    assert table == {-1: FactorList([structure()]),
                     0: FactorList([structure(), structure()])}
    assert puncture_fiber_cohomology(0, (1, 1, 2)) == table


def test_puncture_fiber_kummer_case():
    table = puncture_fiber_cohomology(F(1, 2), (1, 1, 2))
    assert table == {0: FactorList([kummer(F(1, 2))])}


def test_puncture_fiber_precondition():
    with pytest.raises(ValueError, match="integer"):
        puncture_fiber_cohomology(F(1, 3), (1, 1, 2))
