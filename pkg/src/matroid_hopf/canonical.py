"""Canonical forms of matroids up to isomorphism.

Two matroids are isomorphic iff some relabeling of one's ground set carries
its independent-set family onto the other's.  The canonical key of a matroid
is the lexicographically least sorted family over all n! relabelings, found
by a branch-and-bound search that assigns new labels one at a time and
prunes any prefix already beaten by the best complete encoding.  Keys keep
the full canonical family so they decode back into representative matroids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from itertools import permutations

from .matroid import Matroid, elements_of, mask_of

MAX_GROUND_SET = 10


class GroundSetTooLarge(ValueError):
    def __init__(self, n: int):
        super().__init__(
            f"ground set of size {n} exceeds the canonicalization limit "
            f"{MAX_GROUND_SET}"
        )
        self.n = n


@total_ordering
@dataclass(frozen=True)
class IsoKey:
    """Canonical representative of a matroid isomorphism class.

    Totally ordered by (n, rank, canonical family), lexicographically.
    """

    n: int
    rank: int
    family: tuple[int, ...] = field(repr=False)

    def sort_key(self):
        return (self.n, self.rank, self.family)

    def __lt__(self, other: IsoKey) -> bool:
        return self.sort_key() < other.sort_key()

    def matroid(self) -> Matroid:
        return Matroid(self.n, self.family)

    def is_uniform(self) -> bool:
        return self.matroid().is_uniform()

    def render(self) -> str:
        if self.is_uniform():
            return f"U_{{{self.rank},{self.n}}}"
        masks = ",".join(str(s) for s in self.family)
        return f"M[{self.n};{masks}]"

    def __str__(self) -> str:
        return self.render()


_key_cache: dict[tuple[int, tuple[int, ...]], IsoKey] = {}


def canonical_key(matroid: Matroid) -> IsoKey:
    """Canonical key of a matroid's isomorphism class.

    Pure and memoized by the raw family; the cache only ever stores the
    value the search would recompute, so concurrent use is safe.
    """
    if matroid.n > MAX_GROUND_SET:
        raise GroundSetTooLarge(matroid.n)
    cache_key = (matroid.n, matroid.independents)
    hit = _key_cache.get(cache_key)
    if hit is not None:
        return hit
    rank = matroid.rank() if matroid.n else 0
    if matroid.is_uniform():
        # every relabeling fixes a uniform family
        fam = matroid.independents
    else:
        fam = _min_relabeling(matroid.n, matroid.independents)
    key = IsoKey(matroid.n, rank, fam)
    _key_cache[cache_key] = key
    return key


def is_isomorphic(m1: Matroid, m2: Matroid) -> bool:
    """True iff the two matroids have equal canonical keys.

    Cheap invariants (size, rank, loop count, independent-set counts per
    cardinality) reject most non-isomorphic pairs before any search runs.
    """
    for m in (m1, m2):
        if m.n > MAX_GROUND_SET:
            raise GroundSetTooLarge(m.n)
    if _invariants(m1) != _invariants(m2):
        return False
    return canonical_key(m1) == canonical_key(m2)


def _invariants(m: Matroid):
    sizes = [0] * (m.n + 1)
    for s in m.independents:
        sizes[s.bit_count()] += 1
    rank = m.rank() if m.n else 0
    return (m.n, rank, m.loops().bit_count(), tuple(sizes))


def _min_relabeling(n: int, family: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least sorted family over all relabelings.

    New labels 0..n-1 are assigned to original elements one position at a
    time.  Once j labels are placed, every family mask contained in the
    assigned elements is fully remapped and below 2^j, while every other
    mask is at least 2^j; comparing that determined prefix against the best
    encoding found so far soundly prunes entire assignment subtrees.
    """
    best = list(family)

    def remapped_prefix(assigned: list[int]) -> list[int]:
        amask = mask_of(assigned)
        newpos = {e: i for i, e in enumerate(assigned)}
        out = []
        for s in family:
            if s & ~amask == 0:
                out.append(mask_of(newpos[e] for e in elements_of(s)))
        out.sort()
        return out

    def descend(assigned: list[int], remaining: list[int]) -> None:
        nonlocal best
        j = len(assigned)
        prefix = remapped_prefix(assigned)
        limit = 1 << j
        i = 0
        while i < len(prefix) and i < len(best):
            if best[i] >= limit or prefix[i] != best[i]:
                break
            i += 1
        if i < len(prefix):
            # prefix entries always stay below limit, so len(prefix) <= len(best)
            if best[i] < limit and prefix[i] > best[i]:
                return  # determined prefix already worse
        elif len(prefix) < sum(1 for b in best if b < limit):
            return  # candidate runs out of small masks first
        if not remaining:
            if prefix < best:
                best = prefix
            return
        for k, e in enumerate(remaining):
            descend(assigned + [e], remaining[:k] + remaining[k + 1 :])

    descend([], list(range(n)))
    return tuple(best)


def all_permutation_key(matroid: Matroid) -> tuple[int, ...]:
    """Reference canonical family via plain minimum over all n! relabelings."""
    best = None
    for perm in permutations(range(matroid.n)):
        fam = tuple(
            sorted(
                mask_of(perm[e] for e in elements_of(s))
                for s in matroid.independents
            )
        )
        if best is None or fam < best:
            best = fam
    return best if best is not None else matroid.independents
