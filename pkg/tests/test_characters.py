import pytest

from matroid_hopf import (
    Monomial,
    NotInfinitesimal,
    Polynomial,
    alpha,
    alpha_four_factor,
    conv_exp,
    conv_unit,
    convolve,
    delta_coloop,
    delta_loop,
    linear_combination,
    poly_P,
    poly_P_closed_form,
    poly_P_convolution_rhs,
    poly_P_recursion_check,
    uniform,
)
from matroid_hopf.characters import alpha_of_monomial
from matroid_hopf.formal import ONE, S, X, Y, ZERO
from matroid_hopf.matroid import BadElement


def mono(*matroids):
    out = Monomial.unit()
    for m in matroids:
        out = out * Monomial.from_matroid(m)
    return out


COLOOP_LOOP = mono(uniform(1, 1), uniform(0, 1))


class TestConvolve:
    def test_coloop_then_loop(self):
        f = convolve(delta_coloop(), delta_loop())
        assert f(COLOOP_LOOP) == ONE

    def test_loop_then_coloop(self):
        f = convolve(delta_loop(), delta_coloop())
        assert f(COLOOP_LOOP) == ONE

    def test_unit_is_neutral(self, catalog_reps):
        f = convolve(conv_unit(), delta_loop())
        g = convolve(delta_loop(), conv_unit())
        for m in catalog_reps:
            target = mono(m)
            assert f(target) == delta_loop()(target)
            assert g(target) == delta_loop()(target)

    def test_associativity(self, catalog_reps):
        a, b, c = delta_coloop(), delta_loop(), conv_unit()
        lhs = convolve(convolve(a, b), c)
        rhs = convolve(a, convolve(b, c))
        for m in catalog_reps:
            if m.n <= 3:
                assert lhs(mono(m)) == rhs(mono(m))

    def test_infinitesimal_values(self):
        assert delta_loop()(mono(uniform(0, 1))) == ONE
        assert delta_loop()(mono(uniform(1, 1))) == ZERO
        assert delta_loop()(Monomial.unit()) == ZERO
        assert delta_loop()(mono(uniform(0, 2))) == ZERO
        assert delta_coloop()(mono(uniform(1, 1))) == ONE
        assert delta_coloop()(mono(uniform(2, 2))) == ZERO


class TestConvExp:
    def test_unit_value(self):
        f = conv_exp(linear_combination([(X, delta_coloop()), (Y, delta_loop())]))
        assert f(Monomial.unit()) == ONE

    def test_coloop_plus_loop(self):
        f = conv_exp(linear_combination([(X, delta_coloop()), (Y, delta_loop())]))
        assert f(COLOOP_LOOP) == X * Y

    def test_two_coloops(self):
        f = conv_exp(linear_combination([(ONE, delta_coloop())]))
        assert f(mono(uniform(2, 2))) == ONE

    def test_not_infinitesimal_rejected(self):
        with pytest.raises(NotInfinitesimal):
            conv_exp(conv_unit())

    def test_closed_form_on_catalog(self, catalog_reps):
        f = conv_exp(linear_combination([(X, delta_coloop()), (Y, delta_loop())]))
        for m in catalog_reps:
            c, l = m.element_counts()
            assert f(mono(m)) == X**c * Y**l

    def test_integrality_asserted(self, catalog_reps):
        f = conv_exp(linear_combination([(S, delta_coloop()), (S, delta_loop())]))
        for m in catalog_reps:
            assert f(mono(m)).has_integer_coefficients()


class TestAlpha:
    def test_empty(self):
        assert alpha(uniform(0, 0)) == ONE

    def test_u24(self):
        assert alpha(uniform(2, 4)) == S**4 * X**4

    def test_single_loop(self):
        assert alpha(uniform(0, 1)) == S * Y

    def test_power_identity(self, catalog_reps):
        for m in catalog_reps:
            assert alpha(m) == S**m.n * poly_P(m)

    def test_four_factor_agrees(self, catalog_reps):
        assert alpha_four_factor(uniform(0, 0)) == ONE
        assert alpha_four_factor(uniform(2, 4)) == S**4 * X**4
        for m in catalog_reps:
            assert alpha_four_factor(m) == alpha(m)

    def test_character_property(self, catalog_reps):
        small = [m for m in catalog_reps if m.n <= 2]
        for m1 in small:
            for m2 in small:
                assert alpha_of_monomial(mono(m1) * mono(m2)) == alpha(m1) * alpha(m2)


class TestPolyP:
    def test_u24(self):
        assert poly_P(uniform(2, 4)) == X**4

    def test_loop_example(self, loop_example):
        assert poly_P(loop_example) == X**3 * Y

    def test_empty(self):
        assert poly_P(uniform(0, 0)) == ONE

    def test_closed_form(self, catalog_reps):
        for m in catalog_reps:
            assert poly_P(m) == poly_P_closed_form(m)

    def test_multiplicative(self, catalog_reps):
        small = [m for m in catalog_reps if m.n <= 2]
        for m1 in small:
            for m2 in small:
                assert poly_P(m1.direct_sum(m2)) == poly_P(m1) * poly_P(m2)


class TestConvolutionIdentity:
    def test_u12(self):
        assert poly_P_convolution_rhs(uniform(1, 2)) == X**2

    def test_single_loop(self):
        assert poly_P_convolution_rhs(uniform(0, 1)) == Y

    def test_all_catalog(self, catalog_reps):
        for m in catalog_reps:
            assert poly_P_convolution_rhs(m) == poly_P(m)


class TestRecursions:
    def test_loop_element(self, loop_example):
        assert poly_P_recursion_check(loop_example, 3)

    def test_uniform(self):
        for e in range(4):
            assert poly_P_recursion_check(uniform(2, 4), e)

    def test_single_coloop(self):
        assert poly_P_recursion_check(uniform(1, 1), 0)

    def test_all_catalog(self, catalog_reps):
        for m in catalog_reps:
            for e in range(m.n):
                assert poly_P_recursion_check(m, e)

    def test_bad_element(self):
        with pytest.raises(BadElement):
            poly_P_recursion_check(uniform(1, 1), 1)


class TestNegativeWitnesses:
    def test_no_deletion_contraction_recursion(self):
        m = uniform(1, 2)
        e = 0b01  # neither a loop nor a coloop
        lhs = poly_P(m)
        rhs = poly_P(m.contract(e)) + poly_P(m.delete(e))
        assert lhs == X**2
        assert rhs == X + Y
        assert lhs != rhs

    def test_not_dual_invariant(self):
        u01, u11 = uniform(0, 1), uniform(1, 1)
        assert u01 == u11.dual()
        assert poly_P(u01) == Y
        assert poly_P(u11) == X
        assert poly_P(u01) != poly_P(u11)

    def test_not_dual_invariant_with_swap(self):
        # P_M(x, y) also differs from P of the dual with x and y exchanged
        u12 = uniform(1, 2)
        assert u12.dual() == u12
        dual_poly = poly_P(u12.dual())
        swapped = Polynomial(
            {(e[1], e[0], e[2]): c for e, c in dual_poly.terms.items()}
        )
        assert poly_P(u12) == X**2
        assert swapped == Y**2
        assert poly_P(u12) != swapped
