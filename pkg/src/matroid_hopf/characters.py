"""Convolution characters of the restriction-deletion Hopf algebra.

Linear functionals send monomials to exact polynomials in x, y, s.  The two
infinitesimal characters detect a single loop and a single coloop; scaled
combinations of them exponentiate (finitely, degree by degree) to genuine
characters, and a two-factor convolution of such exponentials recovers the
subset-sum polynomial invariant up to a power of s.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .formal import Monomial, Polynomial, ONE, S, X, Y, ZERO
from .hopf import CoproductMode, coproduct_monomial
from .matroid import BadElement, Matroid, uniform


class NotInfinitesimal(ValueError):
    pass


class LinearFunctional:
    """A linear map from monomials to polynomials, memoized per monomial.

    ``kind`` is one of "infinitesimal" (vanishes on the unit and on any
    product of two or more classes), "character" (unit value 1,
    multiplicative across factors), or "generic".  ``integer_valued`` marks
    functionals whose values provably have integer coefficients; the
    convolution exponential asserts this clears its factorials.
    """

    def __init__(self, rule, kind: str, name: str = "", integer_valued: bool = False):
        self._rule = rule
        self.kind = kind
        self.name = name
        self.integer_valued = integer_valued
        self._memo: dict[Monomial, Polynomial] = {}

    def __call__(self, m: Monomial) -> Polynomial:
        hit = self._memo.get(m)
        if hit is None:
            hit = self._rule(m)
            self._memo[m] = hit
        return hit

    def __repr__(self) -> str:
        return f"LinearFunctional({self.name or self.kind})"


def indicator(key_matroid: Matroid, name: str) -> LinearFunctional:
    """Infinitesimal character supported on one connected class."""
    target = Monomial.from_matroid(key_matroid)
    if len(target.factors) != 1:
        raise ValueError("indicator support must be a single connected class")

    def rule(m: Monomial) -> Polynomial:
        return ONE if m == target else ZERO

    return LinearFunctional(rule, "infinitesimal", name, integer_valued=True)


@lru_cache(maxsize=None)
def delta_loop() -> LinearFunctional:
    """1 on the class of a single loop, 0 elsewhere."""
    return indicator(uniform(0, 1), "delta_loop")


@lru_cache(maxsize=None)
def delta_coloop() -> LinearFunctional:
    """1 on the class of a single coloop, 0 elsewhere."""
    return indicator(uniform(1, 1), "delta_coloop")


def linear_combination(parts: list[tuple[Polynomial, LinearFunctional]], name: str = "") -> LinearFunctional:
    """Sum of polynomial multiples of functionals."""

    def rule(m: Monomial) -> Polynomial:
        out = ZERO
        for coeff, f in parts:
            out = out + coeff * f(m)
        return out

    kind = (
        "infinitesimal"
        if all(f.kind == "infinitesimal" for _, f in parts)
        else "generic"
    )
    integer = all(
        f.integer_valued and c.has_integer_coefficients() for c, f in parts
    )
    return LinearFunctional(rule, kind, name, integer_valued=integer)


def conv_unit() -> LinearFunctional:
    """The convolution unit: the counit followed by the algebra unit."""

    def rule(m: Monomial) -> Polynomial:
        return ONE if m.is_unit else ZERO

    return LinearFunctional(rule, "character", "unit", integer_valued=True)


def convolve(f: LinearFunctional, g: LinearFunctional) -> LinearFunctional:
    """Convolution along the restriction-deletion coproduct."""

    def rule(m: Monomial) -> Polynomial:
        out = ZERO
        for (a, b), c in coproduct_monomial(CoproductMode.RD, m).terms.items():
            out = out + c * (f(a) * g(b))
        return out

    kind = "character" if f.kind == "character" and g.kind == "character" else "generic"
    name = f"({f.name}*{g.name})"
    return LinearFunctional(
        rule, kind, name, integer_valued=f.integer_valued and g.integer_valued
    )


def conv_exp(f: LinearFunctional) -> LinearFunctional:
    """Convolution exponential of an infinitesimal functional.

    The sum over k of the k-fold convolution power divided by k! is finite
    on each monomial because an infinitesimal functional kills the unit, so
    the k-th power vanishes below degree k.  Exact rational arithmetic; when
    the input is integer valued the result must be too, and this is checked.
    """
    if f(Monomial.unit()) != ZERO:
        raise NotInfinitesimal(
            "convolution exponential needs a functional vanishing on the unit"
        )
    powers = [conv_unit(), f]

    def rule(m: Monomial) -> Polynomial:
        degree = m.degree
        while len(powers) <= degree:
            powers.append(convolve(powers[-1], f))
        out = ZERO
        factorial = 1
        for k in range(degree + 1):
            if k:
                factorial *= k
            out = out + powers[k](m) / Fraction(factorial)
        if f.integer_valued and not out.has_integer_coefficients():
            raise AssertionError(
                f"exponential of {f.name or 'functional'} failed to clear "
                f"factorials on {m}"
            )
        return out

    return LinearFunctional(
        rule, "character", f"exp({f.name})", integer_valued=f.integer_valued
    )


@lru_cache(maxsize=None)
def alpha_functional() -> LinearFunctional:
    """exp(s(coloop + (y-1) loop)) convolved with exp(s((x-1) coloop + loop))."""
    first = conv_exp(
        linear_combination(
            [(S, delta_coloop()), (S * (Y - ONE), delta_loop())], "s{dc+(y-1)dl}"
        )
    )
    second = conv_exp(
        linear_combination(
            [(S * (X - ONE), delta_coloop()), (S, delta_loop())], "s{(x-1)dc+dl}"
        )
    )
    return convolve(first, second)


@lru_cache(maxsize=None)
def alpha_four_factor_functional() -> LinearFunctional:
    """Four-factor form: the pair of mutually inverse middle exponentials inserted."""
    factors = [
        linear_combination(
            [(S, delta_coloop()), (S * (Y - ONE), delta_loop())], "s{dc+(y-1)dl}"
        ),
        linear_combination(
            [(-1 * S, delta_coloop()), (S, delta_loop())], "s{-dc+dl}"
        ),
        linear_combination(
            [(S, delta_coloop()), (-1 * S, delta_loop())], "s{dc-dl}"
        ),
        linear_combination(
            [(S * (X - ONE), delta_coloop()), (S, delta_loop())], "s{(x-1)dc+dl}"
        ),
    ]
    out = conv_exp(factors[0])
    for part in factors[1:]:
        out = convolve(out, conv_exp(part))
    return out


def alpha(matroid: Matroid) -> Polynomial:
    """The character value at a matroid class; equals s^|E| P_M(x, y)."""
    return alpha_functional()(Monomial.from_matroid(matroid))


def alpha_of_monomial(m: Monomial) -> Polynomial:
    return alpha_functional()(m)


def alpha_four_factor(matroid: Matroid) -> Polynomial:
    return alpha_four_factor_functional()(Monomial.from_matroid(matroid))


def poly_P(matroid: Matroid) -> Polynomial:
    """Subset sum of (x-1)^(c(E)-c(A)) (y-1)^(l(A)) over all subsets A."""
    c_total, _ = matroid.element_counts()
    out = ZERO
    xm1 = X - ONE
    ym1 = Y - ONE
    for a in range(1 << matroid.n):
        c_a, l_a = matroid.element_counts(a)
        out = out + xm1 ** (c_total - c_a) * ym1**l_a
    return out


def poly_P_closed_form(matroid: Matroid) -> Polynomial:
    """x^c(E) y^l(E), the monomial the subset sum collapses to."""
    c, l = matroid.element_counts()
    return X**c * Y**l


def poly_P_convolution_rhs(matroid: Matroid) -> Polynomial:
    """Sum over subsets A of P_{M|A}(0, y) P_{M\\A}(x, 0)."""
    out = ZERO
    for a in range(1 << matroid.n):
        left = poly_P(matroid.restrict(a)).eval(x=0)
        right = poly_P(matroid.delete(a)).eval(y=0)
        out = out + left * right
    return out


def poly_P_recursion_check(matroid: Matroid, e: int) -> bool:
    """Exact check of the one-element deletion recursion at element e.

    Deleting a loop multiplies the invariant by y; deleting any other
    element multiplies it by x.
    """
    if not 0 <= e < matroid.n:
        raise BadElement(f"element {e} outside ground set of size {matroid.n}")
    factor = Y if matroid.is_loop(e) else X
    return poly_P(matroid) == factor * poly_P(matroid.delete(1 << e))
