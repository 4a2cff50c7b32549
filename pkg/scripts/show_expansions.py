#!/usr/bin/env python3
"""Print the notable exact expansions on one screen.

Usage: python scripts/show_expansions.py
"""

from matroid_hopf import (
    CoproductMode,
    antipode_rd,
    canonical_key,
    codendriform_gap,
    coproduct,
    iterated_coproduct,
    poly_P,
    split,
    uniform,
)
from matroid_hopf.characters import alpha


def main():
    u12, u13, u24, u33 = uniform(1, 2), uniform(1, 3), uniform(2, 4), uniform(3, 3)

    print("restriction-deletion coproducts")
    for m, name in ((u12, "U_{1,2}"), (u13, "U_{1,3}"), (u24, "U_{2,4}")):
        print(f"  D({name}) = {coproduct(CoproductMode.RD, m)}")
    print(f"  D(U_{{1,2}} + U_{{1,3}}) = {coproduct(CoproductMode.RD, u12.direct_sum(u13))}")

    print("\niterated coproduct of U_{2,4} (left)")
    print(f"  {iterated_coproduct(CoproductMode.RD, u24, 'left')}")

    print("\nrestriction-contraction coproduct")
    print(f"  D(U_{{1,2}}) = {coproduct(CoproductMode.RC, u12)}")

    print("\nantipode")
    print(f"  S(U_{{3,3}}) = {antipode_rd(canonical_key(u33))}")

    print("\ndendriform split of U_{1,3} (restriction-deletion)")
    halves = split(CoproductMode.RD, u13)
    print(f"  prec = {halves.prec}")
    print(f"  succ = {halves.succ}")

    print("\ncodendriform gap witnesses")
    print(f"  gap(U_{{1,1}}, U_{{1,1}}) = {codendriform_gap(uniform(1, 1), uniform(1, 1))}")
    print(f"  gap(U_{{0,1}}, U_{{0,1}}) = {codendriform_gap(uniform(0, 1), uniform(0, 1))}")

    print("\npolynomial invariant and character")
    for m, name in ((u24, "U_{2,4}"), (uniform(0, 1), "U_{0,1}"), (u12, "U_{1,2}")):
        print(f"  P_{name} = {poly_P(m)},  alpha = {alpha(m)}")


if __name__ == "__main__":
    main()
