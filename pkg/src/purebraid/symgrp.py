"""Permutations of {1..n}, cycle types and conjugacy-class bookkeeping.

Composition is right-to-left: ``compose(p, q)(x) == p(q(x))``.  With this
convention ``compose(transposition(3, 1), transposition(3, 2))`` is the
3-cycle ``1 -> 2 -> 3 -> 1``.
"""

from __future__ import annotations

import random
from math import factorial
from typing import Iterable, Iterator, Sequence

from .partitions import Partition

CycleType = Partition


class Permutation:
    """Bijection of ``{1..n}`` stored as its 1-based image array."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return f"Permutation<{self.n}>{cyc or '()'}"

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def cycles(self) -> list:
        """Disjoint cycles, fixed points included, each starting at its minimum."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    @property
    def sign(self) -> int:
        return cycle_type(self).sign

    def to_json(self) -> list:
        return list(self.images)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def from_cycles(n: int, *cycles: Iterable[int]) -> Permutation:
    """``from_cycles(5, (1, 2, 3))`` is the 3-cycle 1 -> 2 -> 3 -> 1 in S_5."""
    images = list(range(1, n + 1))
    for cyc in cycles:
        cyc = list(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
    return Permutation(images)


def transposition(n: int, k: int) -> Permutation:
    """The adjacent transposition ``(k, k+1)`` in S_n."""
    if not 1 <= k < n:
        raise ValueError(f"adjacent transposition index {k} out of range for n={n}")
    return from_cycles(n, (k, k + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    return Permutation(p.images[x - 1] for x in q.images)


def cycle_type(p: Permutation) -> CycleType:
    return Partition.from_parts(len(c) for c in p.cycles())


def embed_fixing_last(p: Permutation, N: int) -> Permutation:
    if N <= p.n:
        raise ValueError(f"target degree {N} must exceed {p.n}")
    return Permutation(p.images + tuple(range(p.n + 1, N + 1)))


def class_size(mu: Sequence[int]) -> int:
    mu = Partition(mu)
    denom = 1
    for j, a in mu.multiplicities.items():
        denom *= j**a * factorial(a)
    return factorial(mu.n) // denom


def class_representative(mu: Sequence[int]) -> Permutation:
    """Consecutive cycles, largest parts first: (3,3) -> (1 2 3)(4 5 6)."""
    mu = Partition(mu)
    cycles = []
    start = 1
    for part in mu:
        cycles.append(range(start, start + part))
        start += part
    return from_cycles(mu.n, *cycles)


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def reduced_word(p: Permutation) -> list:
    """Indices ``k`` with ``p == tau_{k1} * tau_{k2} * ...`` (adjacent transpositions).

    Obtained by bubble-sorting the image array; the word length is the
    inversion count.
    """
    arr = list(p.images)
    word = []
    # Each swap at position k right-multiplies by tau_k; reversing recovers p.
    changed = True
    while changed:
        changed = False
        for k in range(1, len(arr)):
            if arr[k - 1] > arr[k]:
                arr[k - 1], arr[k] = arr[k], arr[k - 1]
                word.append(k)
                changed = True
    return word[::-1]
