"""Integer partitions, set partitions, tableaux, and split chains."""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import comb, factorial

from .util import PARTITION_CAP, SET_PARTITION_CAP, check_cap


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (empty allowed)."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(v) for v in parts)
        for i, v in enumerate(parts):
            if v < 1:
                raise ValueError(f"parts must be positive integers, got {parts}")
            if i and parts[i - 1] < v:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        """Conjugate shape: column lengths of the diagram."""
        if not self:
            return Partition()
        return Partition(sum(1 for v in self if v > i) for i in range(self[0]))

    def multiplicities(self) -> Counter:
        return Counter(self)

    def pad(self, length: int) -> tuple:
        """Parts extended by zeros to the given length (plain tuple)."""
        if length < len(self):
            raise ValueError(f"cannot pad {self} to length {length}")
        return tuple(self) + (0,) * (length - len(self))


def partitions_of(k: int, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of k, in decreasing lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    check_cap(k, cap, "partition size")
    out: list[Partition] = []

    def descend(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(k, k, ())
    return out


def two_column(k: int, p: int) -> Partition:
    """The shape with p rows of 2 and k-2p rows of 1."""
    if not 0 <= 2 * p <= k:
        raise ValueError(f"need 0 <= 2p <= k, got k={k}, p={p}")
    return Partition((2,) * p + (1,) * (k - 2 * p))


def two_row(k: int, p: int) -> Partition:
    """The shape (k-p, p); transpose of two_column(k, p)."""
    if not 0 <= 2 * p <= k:
        raise ValueError(f"need 0 <= 2p <= k, got k={k}, p={p}")
    return Partition((k - p, p)) if p else Partition((k,) if k else ())


def dominance_leq(mu, lam) -> bool:
    """True iff mu is dominated by lam (prefix sums of mu never exceed lam's)."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise ValueError(f"sizes differ: |{mu}| != |{lam}|")
    width = max(len(mu), len(lam), 1)
    mu_pad, lam_pad = mu.pad(width), lam.pad(width)
    acc_mu = acc_lam = 0
    for a, b in zip(mu_pad, lam_pad):
        acc_mu += a
        acc_lam += b
        if acc_mu > acc_lam:
            return False
    return True


def distinct_permutations(entries):
    """All distinct orderings of a multiset, each exactly once."""
    entries = tuple(entries)
    n = len(entries)
    counts = sorted(Counter(entries).items())
    out = []

    def place(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for idx, (value, cnt) in enumerate(counts):
            if cnt == 0:
                continue
            counts[idx] = (value, cnt - 1)
            place(prefix + [value])
            counts[idx] = (value, cnt)

    place([])
    return out


def distinct_permutation_count(entries) -> int:
    """len(entries)! divided by the factorials of the multiplicities."""
    entries = tuple(entries)
    n = factorial(len(entries))
    for cnt in Counter(entries).values():
        n //= factorial(cnt)
    return n


def set_partitions(k: int, cap: int = SET_PARTITION_CAP) -> list[tuple]:
    """All set partitions of {1..k}; blocks sorted, ordered by their minima."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    check_cap(k, cap, "set partition ground-set size")
    out: list[tuple] = []
    blocks: list[list[int]] = []

    def extend(i):
        if i > k:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            extend(i + 1)
            b.pop()
        blocks.append([i])
        extend(i + 1)
        blocks.pop()

    extend(1)
    return out


def set_partition_type(blocks) -> Partition:
    """Cycle-type-style shape: block sizes in decreasing order."""
    return Partition(sorted((len(b) for b in blocks), reverse=True))


def set_partitions_of_type(mu, cap: int = SET_PARTITION_CAP) -> list[tuple]:
    mu = Partition(mu)
    return [p for p in set_partitions(mu.size, cap) if set_partition_type(p) == mu]


def count_set_partitions_of_type(mu) -> int:
    """k! / (prod of part factorials * prod of multiplicity factorials)."""
    mu = Partition(mu)
    n = factorial(mu.size)
    for part in mu:
        n //= factorial(part)
    for mult in mu.multiplicities().values():
        n //= factorial(mult)
    return n


def refines(fine, coarse) -> bool:
    """True iff every block of `fine` sits inside a block of `coarse`."""
    lookup = {}
    for idx, block in enumerate(coarse):
        for v in block:
            lookup[v] = idx
    return all(len({lookup[v] for v in block}) == 1 for block in fine)


def semistandard_tableaux(shape, max_entry=None, weight=None):
    """SSYT of the given shape, as tuples of row tuples.

    Entries come from 1..max_entry; if weight is given, the number of t's
    must equal weight[t-1] (and max_entry defaults to len(weight)). Rows
    weakly increase, columns strictly increase.
    """
    shape = Partition(shape)
    if weight is not None:
        weight = tuple(int(w) for w in weight)
        if any(w < 0 for w in weight):
            raise ValueError("weight entries must be nonnegative")
        if max_entry is None:
            max_entry = len(weight)
        if sum(weight) != shape.size:
            return
    if max_entry is None:
        raise ValueError("need max_entry or weight")
    if not shape:
        yield ()
        return

    remaining = list(weight) if weight is not None else None
    rows = [[0] * r for r in shape]
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]

    def fill(idx):
        if idx == len(cells):
            yield tuple(tuple(r) for r in rows)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            rows[i][j] = v
            yield from fill(idx + 1)
            if remaining is not None:
                remaining[v - 1] += 1

    yield from fill(0)


@lru_cache(maxsize=None)
def _kostka_cached(lam: tuple, mu: tuple) -> int:
    return sum(1 for _ in semistandard_tableaux(lam, weight=mu))


def kostka(lam, mu, cap: int = PARTITION_CAP) -> int:
    """Number of SSYT of shape lam and weight mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"sizes differ: |{lam}| != |{mu}|")
    check_cap(lam.size, cap, "tableau size")
    return _kostka_cached(tuple(lam), tuple(mu))


def hooks_and_contents(lam):
    """Hook lengths and contents per cell, row-major, as two tuples."""
    lam = Partition(lam)
    lam_t = lam.transpose()
    hooks, contents = [], []
    for i, row in enumerate(lam):
        for j in range(row):
            hooks.append((row - j) + (lam_t[j] - i) - 1)
            contents.append(j - i)
    return tuple(hooks), tuple(contents)


def split_chains(k: int, l: int, m: int, cap: int = PARTITION_CAP) -> list[tuple]:
    """Maps [k] -> [m] increasing on 1..k-l and on k-l+1..k, as value tuples."""
    if not 0 <= l <= k:
        raise ValueError(f"need 0 <= l <= k, got k={k}, l={l}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    check_cap(m, cap, "split-chain codomain")
    heads = list(itertools.combinations(range(1, m + 1), k - l))
    tails = list(itertools.combinations(range(1, m + 1), l))
    return [h + t for h in heads for t in tails]


def chain_multiplicity(i_map, m: int) -> tuple:
    """Preimage sizes |i^{-1}(j)| for j = 1..m, a weak composition."""
    counts = [0] * m
    for v in i_map:
        counts[v - 1] += 1
    return tuple(counts)


def split_chain_type_count(k: int, l: int, q: int, cap: int = PARTITION_CAP) -> int:
    """Split chains [k] -> [k] hitting q values twice and k-2q values once."""
    if not 0 <= 2 * q <= k:
        raise ValueError(f"need 0 <= 2q <= k, got k={k}, q={q}")
    target = Partition((2,) * q + (1,) * (k - 2 * q))
    total = 0
    for i_map in split_chains(k, l, k, cap):
        counts = chain_multiplicity(i_map, k)
        shape = Partition(sorted((c for c in counts if c), reverse=True))
        if shape == target:
            total += 1
    return total


def split_chain_count_formula(k: int, l: int, q: int) -> int:
    """binom(k,l) binom(k-l,q) binom(l,q), the closed split-chain count."""
    return comb(k, l) * comb(k - l, q) * comb(l, q)
