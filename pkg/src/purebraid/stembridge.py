"""Cyclic exponents of permutations in irreducible representations of S_n.

The eigenvalues of an element of cycle type ``mu`` acting in the irreducible
representation of shape ``lam`` are ``zeta_m ** e`` where ``e`` ranges over the
``mu``-indices of the standard tableaux of shape ``lam`` and ``m`` is the order
of the element.  Here that multiset is computed exactly as residues mod ``m``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import CertificateError
from .partitions import (
    Partition,
    StandardTableau,
    descent_set,
    enumerate_syt,
    hook_tableau,
    partitions_of,
)


@dataclass(frozen=True)
class CyclicExponentMultiset:
    m: int
    exponents: Counter

    def __post_init__(self):
        if any(not 0 <= e < self.m for e in self.exponents):
            raise ValueError("residues must lie in [0, m)")

    @property
    def size(self) -> int:
        return sum(self.exponents.values())

    def multiplicity(self, e: int) -> int:
        return self.exponents.get(e % self.m, 0)

    def __contains__(self, e) -> bool:
        return self.multiplicity(e) > 0

    def __eq__(self, other):
        return (
            isinstance(other, CyclicExponentMultiset)
            and self.m == other.m
            and +self.exponents == +other.exponents
        )


def b_vector(mu: Sequence[int]) -> tuple:
    mu = Partition(mu)
    m = mu.m
    out = []
    for part in mu:
        step = m // part
        out.extend(step * i for i in range(1, part + 1))
    return tuple(out)


def mu_index(tableau: StandardTableau, mu: Sequence[int]) -> int:
    mu = Partition(mu)
    if tableau.n != mu.n:
        raise ValueError(f"tableau has {tableau.n} cells but mu partitions {mu.n}")
    b = b_vector(mu)
    return sum(b[k - 1] for k in descent_set(tableau)) % mu.m


def cyclic_exponents(lam: Sequence[int], mu: Sequence[int]) -> CyclicExponentMultiset:
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |lambda|={lam.n}, |mu|={mu.n}")
    counts = Counter(mu_index(t, mu) for t in enumerate_syt(lam))
    return CyclicExponentMultiset(mu.m, counts)


def hook_shape(N: int) -> Partition:
    """The shape ``(N-3, 1, 1, 1)``."""
    if N < 4:
        raise ValueError(f"(N-3,1,1,1) needs N >= 4, got {N}")
    return Partition([N - 3, 1, 1, 1])


def zero_index_tableau(N: int, mu: Sequence[int]) -> StandardTableau:
    """A tableau of shape ``(N-3,1,1,1)`` whose ``mu``-index is 0 mod ``m``.

    The first column ``1 < i+1 < j+1 < k+1`` fixes the descent set ``{i, j, k}``.
    """
    if N < 6:
        raise ValueError(f"N must be at least 6, got {N}")
    mu = Partition(mu)
    if mu.n != N:
        raise ValueError(f"{mu!r} is not a partition of {N}")
    mu1 = mu[0]
    if mu1 == 1:
        descents = (1, 2, 3)  # identity: m = 1, any tableau works
    elif mu1 == N:
        descents = (3, N - 2, N - 1)
    elif mu1 >= 3:
        descents = (1, mu1 - 1, mu1)
    elif mu.a(2) == 1:
        descents = (2, 3, 4)
    else:
        descents = (1, 2, 3)
    return hook_tableau(N, [1] + [d + 1 for d in descents])


def find_zero_index_tableaux(N: int, mu: Sequence[int]) -> list:
    """Brute force: every tableau of shape ``(N-3,1,1,1)`` with ``mu``-index 0."""
    return [t for t in enumerate_syt(hook_shape(N)) if mu_index(t, mu) == 0]


@dataclass(frozen=True)
class TableauCertificate:
    mu: Partition
    tableau: StandardTableau
    index: int
    witnesses: int  # zero-index tableaux found by brute force

    @property
    def m(self) -> int:
        return self.mu.m

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "m": self.m,
            "tableau": self.tableau.to_json(),
            "descents": sorted(descent_set(self.tableau)),
            "index": self.index,
        }


def eigenvalue_one_certificates(N: int) -> dict:
    """Map every ``mu`` of ``N`` to a validated zero-index tableau certificate."""
    if N < 6:
        raise ValueError(f"N must be at least 6, got {N}")
    out = {}
    for mu in partitions_of(N):
        tableau = zero_index_tableau(N, mu)
        index = mu_index(tableau, mu)
        if index != 0:
            raise CertificateError(f"constructed tableau for {mu!r} has index {index}")
        found = find_zero_index_tableaux(N, mu)
        if not found:
            raise CertificateError(f"no zero-index tableau exists for {mu!r}")
        if tableau not in found:
            raise CertificateError(f"brute force disagrees with construction for {mu!r}")
        out[mu] = TableauCertificate(mu, tableau, index, len(found))
    return out


def validate_certificate_json(entry: dict) -> bool:
    """Re-check one serialized tableau certificate from scratch."""
    mu = Partition(entry["mu"])
    tableau = StandardTableau(entry["tableau"])
    return (
        mu.m == entry["m"]
        and tableau.shape == hook_shape(mu.n)
        and sorted(descent_set(tableau)) == list(entry["descents"])
        and mu_index(tableau, mu) == entry["index"] == 0
    )
