"""Independent brute-force references used by tests.

These deliberately avoid the package's own enumeration and canonicalization
code paths: families are encoded as bitsets over the power set and orbits
are taken over all permutations directly.
"""

from itertools import permutations


def family_is_matroid(masks, n):
    fam = set(masks)
    if not fam or 0 not in fam:
        return False
    for s in fam:
        rest = s
        while rest:
            bit = rest & -rest
            if (s ^ bit) not in fam:
                return False
            rest ^= bit
    by_size = {}
    for s in fam:
        by_size.setdefault(bin(s).count("1"), []).append(s)
    for k, xs in by_size.items():
        for y in by_size.get(k - 1, []):
            for x in xs:
                grow = x & ~y
                ok = False
                while grow:
                    bit = grow & -grow
                    if (y | bit) in fam:
                        ok = True
                        break
                    grow ^= bit
                if not ok:
                    return False
    return True


def permuted_family(masks, perm):
    out = []
    for s in masks:
        t = 0
        for e in range(len(perm)):
            if s >> e & 1:
                t |= 1 << perm[e]
        out.append(t)
    return out


def orbit_code(masks, n):
    """Minimal power-set-bitset encoding of the family over all relabelings."""
    best = None
    for perm in permutations(range(n)):
        code = 0
        for t in permuted_family(masks, perm):
            code |= 1 << t
        if best is None or code < best:
            best = code
    return best


def unpruned_counts(n):
    """(labeled, classes) by scanning every family of subsets of an n-set."""
    labeled = 0
    reps = set()
    subsets = 1 << n
    for fam_code in range(1, 1 << subsets):
        masks = [s for s in range(subsets) if fam_code >> s & 1]
        if 0 not in masks or not family_is_matroid(masks, n):
            continue
        labeled += 1
        reps.add(orbit_code(masks, n))
    return labeled, len(reps)
