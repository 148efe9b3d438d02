"""Partitions, tuples of partitions, their statistics and partial orders.

A partition is a plain tuple of weakly decreasing positive ints, ``()`` being
the empty partition.  An N-tuple of partitions is a tuple of such tuples.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cache
from itertools import product
from math import comb, factorial, prod

Partition = tuple[int, ...]
PartitionTuple = tuple[Partition, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition (zeros are dropped)."""
    lam = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts of {lam} are not weakly decreasing")
    return lam


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def n_stat(lam: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(lam))


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(sorted(Counter(lam).items()))


def z_stat(lam: Partition) -> int:
    """z_lambda = prod i^{m_i} m_i!."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


@dataclass(frozen=True)
class PartitionStats:
    size: int
    length: int
    conjugate: Partition
    n: int
    z: int
    multiplicities: dict


def stats(lam: Partition) -> PartitionStats:
    lam = partition(lam)
    return PartitionStats(size(lam), len(lam), conjugate(lam), n_stat(lam), z_stat(lam), multiplicities(lam))


def part(lam: Partition, i: int) -> int:
    """lambda_i with 1-based index, 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def arm(lam: Partition, i: int, j: int) -> int:
    return part(lam, i) - j


def leg(lam: Partition, i: int, j: int) -> int:
    return part(conjugate(lam), j) - i


def arm_leg(lam: Partition, mu: Partition, cell: tuple[int, int]) -> tuple[int, int]:
    """(A_lam(i,j), L_mu(i,j)) evaluated literally, also outside the diagrams."""
    i, j = cell
    if i < 1 or j < 1:
        raise ValueError("cells are 1-based")
    return arm(lam, i, j), leg(mu, i, j)


def cells(lam: Partition) -> list[tuple[int, int]]:
    return [(i, j) for i, p in enumerate(lam, 1) for j in range(1, p + 1)]


def contains(lam: Partition, mu: Partition) -> bool:
    """lam contains mu as Young diagrams."""
    return len(mu) <= len(lam) and all(a >= b for a, b in zip(lam, mu))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance lam >= mu for partitions of equal size."""
    if size(lam) != size(mu):
        return False
    s1 = s2 = 0
    for k in range(max(len(lam), len(mu))):
        s1 += part(lam, k + 1)
        s2 += part(mu, k + 1)
        if s1 < s2:
            return False
    return True


@dataclass(frozen=True)
class CheckStats:
    check: Partition
    I: int


def check_partition(lam: Partition) -> Partition:
    """Cells with non-zero arm length: one box removed from the end of every row."""
    return partition(p - 1 for p in lam)


def check_stats(lam: Partition) -> CheckStats:
    lam = partition(lam)
    chk = check_partition(lam)
    lc = conjugate(lam)
    return CheckStats(chk, sum(lc[j - 1] for _, j in cells(chk)))


# tuples -----------------------------------------------------------------------

def tuple_size(lams: PartitionTuple) -> int:
    return sum(size(lam) for lam in lams)


def profile(lams: PartitionTuple) -> tuple[int, ...]:
    return tuple(size(lam) for lam in lams)


def canonical_key(lams: PartitionTuple):
    """Sort key; sorting with reverse=True gives the canonical order."""
    return tuple(reversed(profile(lams))), tuple(reversed(lams))


def canonical_sort(items: Iterable[PartitionTuple]) -> list[PartitionTuple]:
    return sorted(items, key=canonical_key, reverse=True)


def dual_sort(items: Iterable[PartitionTuple]) -> list[PartitionTuple]:
    items = list(items)
    prof_sorted = sorted(items, key=lambda x: tuple(reversed(profile(x))))
    # stable two-pass: ties inside one profile keep the canonical order
    by_profile: dict = {}
    for lams in canonical_sort(items):
        by_profile.setdefault(profile(lams), []).append(lams)
    out, seen = [], set()
    for lams in prof_sorted:
        p = profile(lams)
        if p not in seen:
            seen.add(p)
            out.extend(by_profile[p])
    return out


@cache
def enumerate_tuples(n: int, N: int) -> tuple[PartitionTuple, ...]:
    """All N-tuples of partitions of total size n in canonical order."""
    if n < 0 or N < 1:
        raise ValueError("need n >= 0 and N >= 1")
    out = []
    for sizes in compositions(n, N):
        out.extend(product(*(partitions_of(s) for s in sizes)))
    return tuple(canonical_sort(out))


def compositions(n: int, N: int):
    """Weak compositions of n into N parts."""
    if N == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, N - 1):
            yield (first,) + rest


def _check_arity(lams: PartitionTuple, mus: PartitionTuple):
    if len(lams) != len(mus):
        raise ValueError(f"arity mismatch: {len(lams)} vs {len(mus)}")


def star_greater(lams: PartitionTuple, mus: PartitionTuple) -> bool:
    """Strict order comparing tail sums of the size profile."""
    _check_arity(lams, mus)
    if tuple_size(lams) != tuple_size(mus) or profile(lams) == profile(mus):
        return False
    a = b = 0
    for lam, mu in zip(reversed(lams), reversed(mus)):
        a += size(lam)
        b += size(mu)
        if a < b:
            return False
    return True


def _bridge_exists(lam: Partition, mu: Partition, target: int) -> bool:
    """Is there nu containing lam and mu with |nu| = target?"""
    union = tuple(max(part(lam, i), part(mu, i)) for i in range(1, max(len(lam), len(mu)) + 1))
    return size(union) <= target


def succ_star(lams: PartitionTuple, mus: PartitionTuple) -> bool:
    """Refined strict order: star plus a containing diagram for every component."""
    if not star_greater(lams, mus):
        return False
    N = len(lams)
    for alpha in range(N):
        shift = sum(size(lams[b]) - size(mus[b]) for b in range(alpha + 1, N))
        if not _bridge_exists(lams[alpha], mus[alpha], size(lams[alpha]) + shift):
            return False
    return True


def tuple_dominance(lams: PartitionTuple, mus: PartitionTuple) -> bool:
    """Equal size profile and componentwise dominance (reflexive)."""
    _check_arity(lams, mus)
    return profile(lams) == profile(mus) and all(dominates(a, b) for a, b in zip(lams, mus))


def _dominance_down(lams: PartitionTuple) -> list[PartitionTuple]:
    return list(product(*([m for m in partitions_of(size(lam)) if dominates(lam, m)] for lam in lams)))


def _dominance_up(lams: PartitionTuple) -> list[PartitionTuple]:
    return list(product(*([m for m in partitions_of(size(lam)) if dominates(m, lam)] for lam in lams)))


def wstar(lams: PartitionTuple, rhos: PartitionTuple) -> bool:
    """lam >= mu (succ_star or equal) nu >= rho for some mu, nu."""
    _check_arity(lams, rhos)
    if tuple_size(lams) != tuple_size(rhos):
        return False
    ups = set(_dominance_up(rhos))
    for mu in _dominance_down(lams):
        if mu in ups:
            return True
        if any(succ_star(mu, nu) for nu in ups):
            return True
    return False


ORDERINGS = {
    "dominance": tuple_dominance,
    "star": star_greater,
    "succ_star": succ_star,
    "wstar": wstar,
}


def orderings(lams: PartitionTuple, mus: PartitionTuple, which: str) -> bool:
    try:
        fn = ORDERINGS[which]
    except KeyError:
        raise ValueError(f"unknown ordering {which!r}") from None
    return fn(tuple(lams), tuple(mus))


def interleavings(lam: Partition) -> list[PartitionTuple]:
    """All pairs whose merged parts are a rearrangement of lam."""
    counts = Counter(partition(lam))
    keys = sorted(counts, reverse=True)
    out = []
    for split in product(*(range(counts[k] + 1) for k in keys)):
        first = tuple(k for k, m in zip(keys, split) for _ in range(m))
        second = tuple(k for k, m in zip(keys, split) for _ in range(counts[k] - m))
        out.append((first, second))
    return canonical_sort(out)


def partition_count(n: int) -> int:
    return len(partitions_of(n))


def n_from_conjugate(lam: Partition) -> int:
    return sum(comb(c, 2) for c in conjugate(lam))


def partition_text(lam: Partition) -> str:
    """[2,1]; the empty partition is []."""
    return "[" + ",".join(str(p) for p in lam) + "]"


def tuple_text(lams: PartitionTuple) -> str:
    """[[1],[]] for a tuple of partitions."""
    return "[" + ",".join(partition_text(lam) for lam in lams) + "]"


def from_obj(obj: Sequence) -> Partition | PartitionTuple:
    """Inverse of the JSON form: a list of ints or a list of lists."""
    if obj and isinstance(obj[0], (list, tuple)):
        return tuple(partition(x) for x in obj)
    return partition(obj)
