"""The two coalgebra structures on matroid classes and the antipode.

The restriction-contraction coproduct sends a matroid to the sum over all
ground-set subsets A of (restriction to A) tensor (contraction of A); the
restriction-deletion coproduct replaces the contraction with the deletion.
Both extend multiplicatively to monomials.  The restriction-deletion
bialgebra is a Hopf algebra; its antipode is computed by the subset
recursion with memoization per isomorphism class.
"""

from __future__ import annotations

from enum import Enum
from typing import Literal

from .canonical import GroundSetTooLarge, IsoKey, MAX_GROUND_SET
from .formal import Monomial, ModuleElement, TensorElement, module_product
from .matroid import Matroid


class CoproductMode(Enum):
    RC = "rc"
    RD = "rd"


def _check_size(matroid: Matroid) -> None:
    if matroid.n > MAX_GROUND_SET:
        raise GroundSetTooLarge(matroid.n)


def coproduct(mode: CoproductMode, matroid: Matroid) -> TensorElement:
    """Sum over all subsets A of restriction(A) tensor (deletion|contraction)(A)."""
    _check_size(matroid)
    terms: dict[tuple[Monomial, ...], int] = {}
    for a in range(1 << matroid.n):
        left = Monomial.from_matroid(matroid.restrict(a))
        if mode is CoproductMode.RD:
            right = Monomial.from_matroid(matroid.delete(a))
        else:
            right = Monomial.from_matroid(matroid.contract(a))
        legs = (left, right)
        terms[legs] = terms.get(legs, 0) + 1
    return TensorElement(2, terms)


_coproduct_monomial_cache: dict[tuple[CoproductMode, Monomial], TensorElement] = {}


def coproduct_monomial(mode: CoproductMode, m: Monomial) -> TensorElement:
    """Multiplicative extension of the coproduct to monomials."""
    hit = _coproduct_monomial_cache.get((mode, m))
    if hit is not None:
        return hit
    out = TensorElement.from_term((Monomial.unit(), Monomial.unit()))
    for key in m.factors:
        out = out.legwise_product(coproduct(mode, key.matroid()))
    _coproduct_monomial_cache[(mode, m)] = out
    return out


def coproduct_element(mode: CoproductMode, e: ModuleElement) -> TensorElement:
    """Linear extension of the monomial coproduct."""
    out = TensorElement.zero(2)
    for m, c in e.terms.items():
        out = out + c * coproduct_monomial(mode, m)
    return out


def counit(e: ModuleElement) -> int:
    """Coefficient of the unit monomial."""
    return e.coefficient(Monomial.unit())


def iterated_coproduct(
    mode: CoproductMode, matroid: Matroid, side: Literal["left", "right"]
) -> TensorElement:
    """(coproduct (x) Id) o coproduct, or (Id (x) coproduct) o coproduct."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    outer = coproduct(mode, matroid)
    terms: dict[tuple[Monomial, ...], int] = {}
    for (a, b), c in outer.terms.items():
        inner = coproduct_monomial(mode, a if side == "left" else b)
        for (p, q), c2 in inner.terms.items():
            legs = (p, q, b) if side == "left" else (a, p, q)
            terms[legs] = terms.get(legs, 0) + c * c2
    return TensorElement(3, terms)


def apply_counit_left(t: TensorElement) -> ModuleElement:
    """(counit (x) Id) collapsed to a module element; arity 2."""
    if t.arity != 2:
        raise ValueError("expected an arity-2 tensor")
    out: dict[Monomial, int] = {}
    for (a, b), c in t.terms.items():
        if a.is_unit:
            out[b] = out.get(b, 0) + c
    return ModuleElement(out)


def apply_counit_right(t: TensorElement) -> ModuleElement:
    """(Id (x) counit) collapsed to a module element; arity 2."""
    if t.arity != 2:
        raise ValueError("expected an arity-2 tensor")
    out: dict[Monomial, int] = {}
    for (a, b), c in t.terms.items():
        if b.is_unit:
            out[a] = out.get(a, 0) + c
    return ModuleElement(out)


_antipode_cache: dict[Monomial, ModuleElement] = {}


def antipode_rd(key: IsoKey) -> ModuleElement:
    """Antipode of a matroid class in the restriction-deletion Hopf algebra.

    S(1) = 1 and S(M) = -M - sum over proper nonempty A of S(M|A) . (M\\A),
    memoized per isomorphism class.
    """
    if key.n > MAX_GROUND_SET:
        raise GroundSetTooLarge(key.n)
    return _antipode_matroid(key.matroid())


def _antipode_matroid(matroid: Matroid) -> ModuleElement:
    m = Monomial.from_matroid(matroid)
    hit = _antipode_cache.get(m)
    if hit is not None:
        return hit
    if m.is_unit:
        result = ModuleElement.one()
    else:
        result = -ModuleElement.from_monomial(m)
        full = matroid.full_mask
        for a in range(1, full):
            part = module_product(
                _antipode_matroid(matroid.restrict(a)),
                ModuleElement.from_matroid(matroid.delete(a)),
            )
            result = result - part
    _antipode_cache[m] = result
    return result


def antipode_element(e: ModuleElement) -> ModuleElement:
    """Linear and multiplicative extension of the antipode to elements."""
    out = ModuleElement.zero()
    for m, c in e.terms.items():
        acc = ModuleElement.one()
        for key in m.factors:
            acc = module_product(acc, antipode_rd(key))
        out = out + c * acc
    return out


def convolve_antipode_identity(matroid: Matroid, antipode_side: Literal["left", "right"]) -> ModuleElement:
    """Multiply after (S (x) Id) or (Id (x) S) applied to the RD coproduct."""
    t = coproduct(CoproductMode.RD, matroid)
    out = ModuleElement.zero()
    for (a, b), c in t.terms.items():
        if antipode_side == "left":
            part = module_product(antipode_element(ModuleElement.from_monomial(a)),
                                  ModuleElement.from_monomial(b))
        else:
            part = module_product(ModuleElement.from_monomial(a),
                                  antipode_element(ModuleElement.from_monomial(b)))
        out = out + c * part
    return out
