"""Reidemeister numbers of automorphisms of free abelian groups.

For an integer matrix ``A`` acting on ``Z^k`` the number of twisted conjugacy
classes is the order of the cokernel of ``I - A``: ``|det(I - A)|`` when that
is nonzero and infinite otherwise.  Two routes compute it: a fraction-free
(Bareiss) determinant and, independently, the Smith normal form.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import CertificateError

INFINITE = math.inf


def as_matrix(a: Sequence[Sequence[int]]) -> list:
    """Copy ``a`` into a list of int rows, checking that it is square."""
    rows = [[int(x) for x in row] for row in a]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix must be square")
    return rows


def identity_matrix(k: int) -> list:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def mat_mul(a, b) -> list:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def bareiss_det(a: Sequence[Sequence[int]]) -> int:
    m = as_matrix(a)
    k = len(m)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if m[r][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        piv = m[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * piv - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = piv
    return sign * m[-1][-1]


def smith_normal_form(a: Sequence[Sequence[int]]) -> list:
    """Diagonal of the Smith normal form (non-negative, each dividing the next)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
            if not entries:
                return diag + [0] * (min(rows, cols) - t)
            _, pi, pj = min(entries)
            m[t], m[pi] = m[pi], m[t]
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            piv = m[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = m[i][t] // piv
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                clean &= m[i][t] == 0
            for j in range(t + 1, cols):
                q = m[t][j] // piv
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                clean &= m[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % piv), None)
            if bad is None:
                break
            # fold an offending row in so the next pass shrinks the pivot
            m[t] = [x + y for x, y in zip(m[t], m[bad])]
        diag.append(abs(m[t][t]))
    return diag


def _i_minus(a) -> list:
    m = as_matrix(a)
    return [[int(i == j) - x for j, x in enumerate(row)] for i, row in enumerate(m)]


def reidemeister_of_matrix(a: Sequence[Sequence[int]]):
    det = bareiss_det(_i_minus(a))
    return INFINITE if det == 0 else abs(det)


def snf_oracle(a: Sequence[Sequence[int]]):
    divisors = smith_normal_form(_i_minus(a))
    if 0 in divisors:
        return INFINITE
    return math.prod(divisors)


def product_formula(blocks: Sequence[Sequence[Sequence[int]]]):
    """Reidemeister number of a filtered map from its layers; infinity absorbs."""
    if not blocks:
        raise ValueError("need at least one block")
    total = 1
    for block in blocks:
        total = total * reidemeister_of_matrix(block)
    return total


@dataclass(frozen=True)
class Pm1Report:
    has_pm1: bool
    lower_bound: object  # int or INFINITE


def pm1_bound(a: Sequence[Sequence[int]]) -> Pm1Report:
    """Lower bound on R(A) from eigenvalues 1 or -1, read off ``det(+-I - A)``."""
    m = as_matrix(a)
    if bareiss_det(_i_minus(m)) == 0:
        return Pm1Report(True, INFINITE)
    plus = [[int(i == j) + x for j, x in enumerate(row)] for i, row in enumerate(m)]
    if bareiss_det(plus) == 0:
        return Pm1Report(True, 2)
    return Pm1Report(False, 1)


def format_count(count) -> object:
    return "infinity" if count == INFINITE else int(count)


def parse_count(value):
    return INFINITE if value == "infinity" else int(value)


# --- random harness ---------------------------------------------------------------


def random_unimodular(k: int, rng: random.Random, steps: int | None = None) -> tuple:
    """A random ``U`` with ``det U = +-1`` together with ``U^-1``.

    Built from elementary row operations with multipliers in ``[-2, 2]``.
    """
    u = identity_matrix(k)
    inv = identity_matrix(k)
    if k == 1:
        return ([[-1]], [[-1]]) if rng.random() < 0.5 else (u, inv)
    for _ in range(steps if steps is not None else 3 * k):
        i, j = rng.sample(range(k), 2)
        c = rng.choice((-2, -1, 1, 2))
        # U <- E U with E = I + c e_ij;  U^-1 <- U^-1 E^-1
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        for row in inv:
            row[j] -= c * row[i]
    return u, inv


def random_signed_permutation_matrix(k: int, rng: random.Random) -> list:
    perm = list(range(k))
    rng.shuffle(perm)
    m = [[0] * k for _ in range(k)]
    for j, i in enumerate(perm):
        m[i][j] = rng.choice((1, -1))
    return m


def random_finite_order_matrix(k: int, rng: random.Random) -> list:
    u, inv = random_unimodular(k, rng)
    return mat_mul(mat_mul(u, random_signed_permutation_matrix(k, rng)), inv)


def random_block_triangular(sizes: Sequence[int], rng: random.Random, lo: int = -3, hi: int = 3) -> tuple:
    """Block-upper-triangular matrix with random blocks; returns ``(matrix, diagonal blocks)``."""
    k = sum(sizes)
    m = [[0] * k for _ in range(k)]
    blocks = []
    offset = 0
    for size in sizes:
        block = [[rng.randint(lo, hi) for _ in range(size)] for _ in range(size)]
        blocks.append(block)
        for i in range(size):
            for j in range(size):
                m[offset + i][offset + j] = block[i][j]
            for j in range(offset + size, k):
                m[offset + i][j] = rng.randint(lo, hi)
        offset += size
    return m, blocks


# --- the four-strand argument -----------------------------------------------------


def p4_rank(k: int) -> int:
    """Rank of the k-th lower central quotient of the metabelianized P_4 (k >= 3)."""
    if k < 3:
        raise ValueError("rank constant only recorded for k >= 3")
    return 5 * (k - 1)


@dataclass(frozen=True)
class P4Bound:
    layers: int
    bound: int
    ranks: dict
    harness: list = field(default_factory=list)  # (k, size, has_pm1)

    def to_json(self) -> dict:
        return {
            "layers": self.layers,
            "bound": self.bound,
            "ranks": {str(k): r for k, r in self.ranks.items()},
            "odd_rank_checks": [{"k": k, "size": size, "has_pm1": ok} for k, size, ok in self.harness],
        }


def p4_even_layer_bound(L: int, rng: random.Random | None = None) -> P4Bound:
    """Lower bound ``2**(L-1)`` from the even layers 4, 6, ..., 2L.

    Each even layer has odd rank, so a finite-order automorphism of it has a
    real eigenvalue +-1 and contributes a factor >= 2.  That step is exercised
    on one random finite-order matrix per even layer.
    """
    if L < 2:
        raise ValueError(f"L must be at least 2, got {L}")
    rng = rng or random.Random(0)
    ranks = {k: p4_rank(k) for k in range(3, 2 * L + 1)}
    harness = []
    for k in range(4, 2 * L + 1, 2):
        size = ranks[k]
        if size % 2 == 0:
            raise CertificateError(f"rank {size} of layer {k} is not odd")
        report = pm1_bound(random_finite_order_matrix(size, rng))
        if not report.has_pm1:
            raise CertificateError(f"finite-order matrix of odd size {size} lacks eigenvalue +-1")
        harness.append((k, size, report.has_pm1))
    return P4Bound(L, 2 ** (L - 1), ranks, harness)
