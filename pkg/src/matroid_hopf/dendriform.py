"""Dendriform splittings of the reduced coproducts.

The reduced coproduct (full coproduct minus both boundary terms) splits
into a left part summing over dependent proper nonempty subsets and a right
part summing over independent ones.  Each split makes the augmentation
ideal a dendriform coalgebra; the pair does not satisfy the codendriform
bialgebra compatibility, and the gap is computable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .formal import Monomial, TensorElement
from .hopf import CoproductMode, _check_size
from .matroid import Matroid


class EmptyMatroidError(ValueError):
    pass


class SplitHalf(Enum):
    PREC = "prec"
    SUCC = "succ"
    BOTH = "both"


@dataclass(frozen=True)
class SplitPair:
    """The two halves of a reduced coproduct; prec + succ recovers it."""

    prec: TensorElement
    succ: TensorElement


def _require_nonempty(matroid: Matroid) -> None:
    if matroid.n == 0:
        raise EmptyMatroidError(
            "the empty matroid is not in the augmentation ideal"
        )


def reduced_coproduct(mode: CoproductMode, matroid: Matroid) -> TensorElement:
    """Coproduct minus the boundary terms M (x) 1 and 1 (x) M."""
    return _split_sum(mode, matroid, SplitHalf.BOTH)


def split(mode: CoproductMode, matroid: Matroid) -> SplitPair:
    """prec sums over dependent proper nonempty subsets, succ over independent."""
    return SplitPair(
        prec=_split_sum(mode, matroid, SplitHalf.PREC),
        succ=_split_sum(mode, matroid, SplitHalf.SUCC),
    )


def _split_sum(mode: CoproductMode, matroid: Matroid, half: SplitHalf) -> TensorElement:
    _require_nonempty(matroid)
    _check_size(matroid)
    terms: dict[tuple[Monomial, ...], int] = {}
    full = matroid.full_mask
    for a in range(1, full):
        independent = matroid.is_independent(a)
        if half is SplitHalf.PREC and independent:
            continue
        if half is SplitHalf.SUCC and not independent:
            continue
        left = Monomial.from_matroid(matroid.restrict(a))
        if mode is CoproductMode.RD:
            right = Monomial.from_matroid(matroid.delete(a))
        else:
            right = Monomial.from_matroid(matroid.contract(a))
        legs = (left, right)
        terms[legs] = terms.get(legs, 0) + 1
    return TensorElement(2, terms)


def _split_sum_monomial(mode: CoproductMode, m: Monomial, half: SplitHalf) -> TensorElement:
    """Split maps on a monomial, through its representative direct sum."""
    return _split_sum(mode, m.matroid(), half)


def _compose(
    mode: CoproductMode, outer: TensorElement, leg: int, half: SplitHalf
) -> TensorElement:
    """Apply a split map to one leg of an arity-2 tensor, giving arity 3."""
    terms: dict[tuple[Monomial, ...], int] = {}
    for (a, b), c in outer.terms.items():
        inner = _split_sum_monomial(mode, a if leg == 0 else b, half)
        for (p, q), c2 in inner.terms.items():
            legs = (p, q, b) if leg == 0 else (a, p, q)
            terms[legs] = terms.get(legs, 0) + c * c2
    return TensorElement(3, terms)


@dataclass(frozen=True)
class DendriformReport:
    """Outcome of the three dendriform coalgebra axioms."""

    axiom1: bool
    axiom2: bool
    axiom3: bool

    def all_hold(self) -> bool:
        return self.axiom1 and self.axiom2 and self.axiom3


def check_dendriform_axioms(mode: CoproductMode, matroid: Matroid) -> DendriformReport:
    """Evaluate both sides of the three axioms exactly on one matroid.

    Axiom 1: (prec (x) Id) o prec = (Id (x) (prec + succ)) o prec.
    Axiom 2: (succ (x) Id) o prec = (Id (x) prec) o succ.
    Axiom 3: ((prec + succ) (x) Id) o succ = (Id (x) succ) o succ.
    """
    _require_nonempty(matroid)
    halves = split(mode, matroid)
    a1_lhs = _compose(mode, halves.prec, 0, SplitHalf.PREC)
    a1_rhs = _compose(mode, halves.prec, 1, SplitHalf.BOTH)
    a2_lhs = _compose(mode, halves.prec, 0, SplitHalf.SUCC)
    a2_rhs = _compose(mode, halves.succ, 1, SplitHalf.PREC)
    a3_lhs = _compose(mode, halves.succ, 0, SplitHalf.BOTH)
    a3_rhs = _compose(mode, halves.succ, 1, SplitHalf.SUCC)
    return DendriformReport(a1_lhs == a1_rhs, a2_lhs == a2_rhs, a3_lhs == a3_rhs)


def codendriform_gap(m1: Matroid, m2: Matroid) -> TensorElement:
    """LHS minus RHS of the codendriform compatibility for succ on a product.

    The compatibility demands, writing a' (x) a'' for the reduced coproduct
    and the succ subscript for the right split (restriction-deletion case):

        succ(MN) = M'N'_succ (x) M''N''_succ + M' (x) M''N
                   + MN'_succ (x) N''_succ + N'_succ (x) MN''_succ + M (x) N.

    A nonzero return value witnesses that the compatibility fails.
    """
    _require_nonempty(m1)
    _require_nonempty(m2)
    mode = CoproductMode.RD
    mono1 = Monomial.from_matroid(m1)
    mono2 = Monomial.from_matroid(m2)
    lhs = _split_sum(mode, m1.direct_sum(m2), SplitHalf.SUCC)

    red1 = reduced_coproduct(mode, m1)
    succ2 = split(mode, m2).succ
    rhs = TensorElement.zero(2)
    rhs = rhs + red1.legwise_product(succ2)
    rhs = rhs + _attach(red1, right=mono2)
    rhs = rhs + _attach(succ2, left_prefix=mono1)
    rhs = rhs + _attach(succ2, right=mono1)
    rhs = rhs + TensorElement.from_term((mono1, mono2))
    return lhs - rhs


def _attach(
    t: TensorElement, left_prefix: Monomial | None = None, right: Monomial | None = None
) -> TensorElement:
    """Multiply one leg of every term by a fixed monomial."""
    terms: dict[tuple[Monomial, ...], int] = {}
    for (a, b), c in t.terms.items():
        if left_prefix is not None:
            a = left_prefix * a
        if right is not None:
            b = right * b
        terms[(a, b)] = terms.get((a, b), 0) + c
    return TensorElement(2, terms)
