"""Induced automorphism actions on the first two lower-central-series quotients.

The abelianization of P_s has basis ``A_{i,j}`` (pairs); the next quotient
has basis ``alpha_{i,j,k}`` (increasing triples), the class of the commutator
``[A_{i,j}, A_{j,k}]``.  The standard generators act by signed monomial
matrices on both bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .symgrp import Permutation, transposition


@dataclass(frozen=True)
class TripleBasis:
    s: int
    triples: tuple
    index: dict

    @classmethod
    def of(cls, s: int) -> "TripleBasis":
        triples = tuple(combinations(range(1, s + 1), 3))
        return cls(s, triples, {t: i for i, t in enumerate(triples)})

    def __len__(self):
        return len(self.triples)


@dataclass(frozen=True)
class PairBasis:
    s: int
    pairs: tuple
    index: dict

    @classmethod
    def of(cls, s: int) -> "PairBasis":
        pairs = tuple(combinations(range(1, s + 1), 2))
        return cls(s, pairs, {p: i for i, p in enumerate(pairs)})

    def __len__(self):
        return len(self.pairs)


class SignedMonomialMatrix:
    """Matrix sending basis vector ``j`` to ``sign[j] * e_{target[j]}``.

    Column ``j`` holds its single nonzero entry in row ``target[j]``.
    """

    __slots__ = ("target", "sign")

    def __init__(self, target: Sequence[int], sign: Sequence[int]):
        target, sign = tuple(target), tuple(sign)
        if len(target) != len(sign):
            raise ValueError("target and sign lengths differ")
        if sorted(target) != list(range(len(target))):
            raise ValueError("target is not a permutation of the basis indices")
        if any(x not in (1, -1) for x in sign):
            raise ValueError("signs must be +1 or -1")
        self.target = target
        self.sign = sign

    @property
    def dim(self) -> int:
        return len(self.target)

    @classmethod
    def identity(cls, dim: int) -> "SignedMonomialMatrix":
        return cls(range(dim), (1,) * dim)

    def __matmul__(self, other: "SignedMonomialMatrix") -> "SignedMonomialMatrix":
        return smm_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, SignedMonomialMatrix) and (self.target, self.sign) == (other.target, other.sign)

    def __hash__(self):
        return hash((self.target, self.sign))

    def __neg__(self):
        return SignedMonomialMatrix(self.target, tuple(-x for x in self.sign))

    def __repr__(self):
        return f"SignedMonomialMatrix(dim={self.dim})"

    def inverse(self) -> "SignedMonomialMatrix":
        target = [0] * self.dim
        sign = [0] * self.dim
        for j, (t, e) in enumerate(zip(self.target, self.sign)):
            target[t] = j
            sign[t] = e
        return SignedMonomialMatrix(target, sign)

    def with_flipped_sign(self, j: int) -> "SignedMonomialMatrix":
        sign = list(self.sign)
        sign[j] = -sign[j]
        return SignedMonomialMatrix(self.target, sign)

    def to_dense(self) -> list:
        rows = [[0] * self.dim for _ in range(self.dim)]
        for j, (t, e) in enumerate(zip(self.target, self.sign)):
            rows[t][j] = e
        return rows

    def cycle_factors(self) -> list:
        """``(length, sign product)`` for each cycle of the underlying index permutation."""
        seen = [False] * self.dim
        out = []
        for start in range(self.dim):
            if seen[start]:
                continue
            length, prod, j = 0, 1, start
            while not seen[j]:
                seen[j] = True
                prod *= self.sign[j]
                length += 1
                j = self.target[j]
            out.append((length, prod))
        return out

    def to_json(self, labels: Sequence) -> dict:
        return {
            "dim": self.dim,
            "map": [[list(labels[j]), list(labels[t]), e] for j, (t, e) in enumerate(zip(self.target, self.sign))],
        }

    @classmethod
    def from_json(cls, data: dict, labels: Sequence) -> "SignedMonomialMatrix":
        index = {tuple(lab): i for i, lab in enumerate(labels)}
        target = [0] * data["dim"]
        sign = [0] * data["dim"]
        for src, dst, e in data["map"]:
            target[index[tuple(src)]] = index[tuple(dst)]
            sign[index[tuple(src)]] = e
        return cls(target, sign)


def smm_multiply(m1: SignedMonomialMatrix, m2: SignedMonomialMatrix) -> SignedMonomialMatrix:
    if m1.dim != m2.dim:
        raise ValueError(f"dimension mismatch: {m1.dim} vs {m2.dim}")
    t1, s1 = m1.target, m1.sign
    return SignedMonomialMatrix(
        [t1[t] for t in m2.target],
        [e * s1[t] for t, e in zip(m2.target, m2.sign)],
    )


def smm_trace(m: SignedMonomialMatrix) -> int:
    return sum(e for j, (t, e) in enumerate(zip(m.target, m.sign)) if t == j)


def char_poly(m: SignedMonomialMatrix) -> list:
    """Coefficients of ``det(x I - M)``, lowest degree first.

    Each cycle of length ``l`` with sign product ``c`` contributes ``x**l - c``.
    """
    coeffs = [1]
    for length, prod in m.cycle_factors():
        factor = [-prod] + [0] * (length - 1) + [1]
        out = [0] * (len(coeffs) + length)
        for i, a in enumerate(coeffs):
            if a:
                for j, b in enumerate(factor):
                    out[i + j] += a * b
        coeffs = out
    return coeffs


def det_I_minus(m: SignedMonomialMatrix) -> int:
    """``det(I - M)``; zero exactly when 1 is an eigenvalue."""
    det = 1
    for _, prod in m.cycle_factors():
        det *= 1 - prod
    return det


def eigen_residues(m: SignedMonomialMatrix, order: int) -> list:
    """Eigenvalues of ``M`` as sorted exponents ``e`` of ``exp(2 pi i e / order)``.

    ``order`` must be a multiple of the order of ``M``.
    """
    out = []
    for length, prod in m.cycle_factors():
        if prod == 1:
            if order % length:
                raise ValueError(f"cycle of length {length} incompatible with order {order}")
            step = order // length
            out.extend(step * k for k in range(length))
        else:
            if order % (2 * length):
                raise ValueError(f"negative cycle of length {length} incompatible with order {order}")
            step = order // (2 * length)
            out.extend(step * (2 * k + 1) for k in range(length))
    return sorted(out)


# --- the actions ----------------------------------------------------------------


def _check_triple(t, s: int):
    r, u, v = t
    if not 1 <= r < u < v <= s:
        raise ValueError(f"triple {t} is not strictly increasing inside 1..{s}")


def act_on_triple(pi: Permutation, t: Sequence[int]) -> tuple:
    """Image of ``alpha_t`` under the automorphism inducing ``pi``: ``(triple, sign)``.

    The images are sorted; the sign is +1 when the sort is a cyclic shift
    and -1 when it swaps two entries.
    """
    t = tuple(t)
    _check_triple(t, pi.n)
    images = [pi(x) for x in t]
    ordered = tuple(sorted(images))
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if images[i] > images[j])
    return ordered, (-1 if inversions % 2 else 1)


def rho_matrix(pi: Permutation, s: int | None = None) -> SignedMonomialMatrix:
    s = pi.n if s is None else s
    if pi.n != s:
        raise ValueError(f"permutation has degree {pi.n}, expected {s}")
    if s < 4:
        raise ValueError(f"need at least 4 strands, got {s}")
    basis = triple_basis(s)
    target, sign = [], []
    for t in basis.triples:
        image, e = act_on_triple(pi, t)
        target.append(basis.index[image])
        sign.append(e)
    return SignedMonomialMatrix(target, sign)


def permutation_pair_matrix(pi: Permutation) -> SignedMonomialMatrix:
    """Permutation action ``A_{i,j} -> A_{pi(i),pi(j)}`` on pairs."""
    basis = pair_basis(pi.n)
    return SignedMonomialMatrix(
        [basis.index[tuple(sorted((pi(i), pi(j))))] for i, j in basis.pairs],
        (1,) * len(basis),
    )


EPSILON = "epsilon"


def pair_matrix(g, s: int) -> SignedMonomialMatrix:
    """Action on pairs of ``omega_k`` (``g = k``, 1 <= k < s) or of ``epsilon``."""
    if g == EPSILON:
        return -SignedMonomialMatrix.identity(comb(s, 2))
    if isinstance(g, bool) or not isinstance(g, int) or not 1 <= g < s:
        raise ValueError(f"invalid generator tag {g!r} for s={s}")
    return permutation_pair_matrix(transposition(s, g))


def epsilon_triple_action(s: int) -> SignedMonomialMatrix:
    if s < 4:
        raise ValueError(f"need at least 4 strands, got {s}")
    return SignedMonomialMatrix.identity(comb(s, 3))


def bracket(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Class of ``[A_p, A_q]`` for pairs sharing exactly one strand: ``(triple, sign)``.

    With ``i < j < k``: ``[A_ij, A_jk] = alpha``, while ``[A_ik, A_jk]``,
    ``[A_ij, A_ik]`` and ``[A_jk, A_ij]`` are ``alpha^-1``; the bracket is
    alternating.
    """
    p, q = tuple(sorted(p)), tuple(sorted(q))
    if len(set(p) & set(q)) != 1:
        raise ValueError(f"pairs {p} and {q} must share exactly one strand")
    i, j, k = sorted(set(p) | set(q))
    positive = {((i, j), (j, k)), ((j, k), (i, k)), ((i, k), (i, j))}
    negative = {((j, k), (i, j)), ((i, k), (j, k)), ((i, j), (i, k))}
    if (p, q) in positive:
        return (i, j, k), 1
    assert (p, q) in negative
    return (i, j, k), -1


def triple_action_from_pairs(pm: SignedMonomialMatrix, s: int) -> SignedMonomialMatrix:
    """Triple-level matrix induced by a pair-level automorphism via commutators.

    ``alpha_{r,u,v} = [A_{r,u}, A_{u,v}]`` maps to the bracket of the images.
    """
    pairs = pair_basis(s)
    triples = triple_basis(s)
    if pm.dim != len(pairs):
        raise ValueError(f"pair matrix has dim {pm.dim}, expected {len(pairs)}")
    target, sign = [], []
    for r, u, v in triples.triples:
        a = pairs.index[(r, u)]
        b = pairs.index[(u, v)]
        image, e = bracket(pairs.pairs[pm.target[a]], pairs.pairs[pm.target[b]])
        target.append(triples.index[image])
        sign.append(e * pm.sign[a] * pm.sign[b])
    return SignedMonomialMatrix(target, sign)


@lru_cache(maxsize=None)
def triple_basis(s: int) -> TripleBasis:
    return TripleBasis.of(s)


@lru_cache(maxsize=None)
def pair_basis(s: int) -> PairBasis:
    return PairBasis.of(s)
