"""Exact character values of the symmetric groups.

Two independent routes are kept side by side: closed-form polynomials in the
numbers of fixed points, 2-cycles and 3-cycles for the six smallest-degree
irreducibles (labels A-F), and the Murnaghan-Nakayama rule for arbitrary
shapes.  All arithmetic is over ``int`` and ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping, Sequence

from .errors import CertificateError
from .partitions import Partition, hook_dimension, partitions_of
from .symgrp import class_size


class AmbiguousIdentification(CertificateError):
    """More than one irreducible matches the supplied trace data."""


def _binom_poly(x: int, k: int) -> int:
    """``x choose k`` as a polynomial in ``x``, valid for negative ``x`` too."""
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


CLOSED_FORM_SHAPES = {
    "A": lambda n: (n,),
    "B": lambda n: (n - 1, 1),
    "C": lambda n: (n - 2, 2),
    "D": lambda n: (n - 2, 1, 1),
    "E": lambda n: (n - 3, 3),
    "F": lambda n: (n - 3, 1, 1, 1),
}


def chi_closed_form(label: str, mu: Sequence[int]) -> int:
    """Closed-form character value of irreducible ``label`` at cycle type ``mu``."""
    mu = Partition(mu)
    a1, a2, a3 = mu.a(1), mu.a(2), mu.a(3)
    if label == "A":
        value = Fraction(1)
    elif label == "B":
        value = Fraction(a1 - 1)
    elif label == "C":
        value = Fraction(2 * a2 + a1 * (a1 - 3), 2)
    elif label == "D":
        value = Fraction(-2 * a2 + a1 * a1 - 3 * a1 + 2, 2)
    elif label == "E":
        value = Fraction(6 * a3 + 6 * a2 * (a1 - 1) + a1 * (a1 - 1) * (a1 - 5), 6)
    elif label == "F":
        value = Fraction(a3 - a2 * (a1 - 1) + _binom_poly(a1 - 1, 3))
    else:
        raise ValueError(f"unknown representation label {label!r}")
    if value.denominator != 1:
        raise CertificateError(f"non-integral character value {value} for {label} at {mu!r}")
    return int(value)


def _beta_set(lam: tuple) -> tuple:
    ell = len(lam)
    return tuple(part + ell - 1 - i for i, part in enumerate(lam))


def _from_beta(beta) -> tuple:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return tuple(p for p in (b - (ell - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # leg length = beads strictly between target and b
        leg = sum(1 for c in beta if target < c < b)
        smaller = _from_beta((occupied - {b}) | {target})
        value = _mn(smaller, rest)
        total += -value if leg % 2 else value
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character ``chi_lam(mu)`` by the Murnaghan-Nakayama rule."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |lambda|={lam.n}, |mu|={mu.n}")
    return _mn(tuple(lam), tuple(mu))


@dataclass(frozen=True)
class ClassFunction:
    """A class function on S_n, keyed by cycle type."""

    n: int
    values: Mapping

    def __post_init__(self):
        missing = [mu for mu in partitions_of(self.n) if mu not in self.values]
        if missing:
            raise ValueError(f"class function undefined on {missing[:3]}")

    def __call__(self, mu: Sequence[int]):
        return self.values[Partition(mu)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_degree(self, other)
        return ClassFunction(self.n, {mu: self.values[mu] + other.values[mu] for mu in self.values})

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.n, {mu: c * v for mu, v in self.values.items()})


def _same_degree(f: ClassFunction, g: ClassFunction):
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} vs {g.n}")


def character(lam: Sequence[int]) -> ClassFunction:
    lam = Partition(lam)
    return ClassFunction(lam.n, {mu: mn_character(lam, mu) for mu in partitions_of(lam.n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: 1 for mu in partitions_of(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: mu.sign for mu in partitions_of(n)})


def sign_twist(chi: ClassFunction) -> ClassFunction:
    return ClassFunction(chi.n, {mu: mu.sign * v for mu, v in chi.values.items()})


def inner_product(chi1: ClassFunction, chi2: ClassFunction) -> Fraction:
    _same_degree(chi1, chi2)
    total = sum(class_size(mu) * chi1.values[mu] * chi2.values[mu] for mu in partitions_of(chi1.n))
    return Fraction(total, factorial(chi1.n))


def character_table(n: int) -> dict:
    """JSON-ready table; rows and columns both in canonical partition order."""
    parts = partitions_of(n)
    return {
        "n": n,
        "partitions": [list(p) for p in parts],
        "table": [[mn_character(lam, mu) for mu in parts] for lam in parts],
    }


# --- the five-class obstruction system -------------------------------------------


def obstruction_classes(n: int) -> list:
    """Identity, (123), (123)(456), (123)(456)(789), (12)(34) as cycle types of S_n."""
    return [
        Partition([1] * n),
        Partition([3] + [1] * (n - 3)),
        Partition([3, 3] + [1] * (n - 6)),
        Partition([3, 3, 3] + [1] * (n - 9)),
        Partition([2, 2] + [1] * (n - 4)),
    ]


def expected_hook_traces(n: int) -> list:
    """Fixed-minus-twisted triple counts at the five obstruction classes."""
    return [
        comb(n - 1, 3),
        comb(n - 4, 3) + 1,
        comb(n - 7, 3) + 2,
        comb(n - 10, 3) + 3,
        comb(n - 5, 3) - 2 * (n - 5),
    ]


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> tuple:
    """Solve a square rational system by Gauss-Jordan elimination.

    Raises ``CertificateError`` when the system is singular.
    """
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise CertificateError("linear system is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[-1] for row in aug)


@dataclass(frozen=True)
class ObstructionResult:
    n: int
    matrix: tuple
    rhs: tuple
    solution: tuple  # (x_a, x_b, x_c, x_d, x_e)

    @property
    def contradiction(self) -> bool:
        """True when the trivial-character multiplicity would be negative."""
        return self.solution[0] < 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": [list(mu) for mu in obstruction_classes(self.n)],
            "rhs": list(self.rhs),
            "solution": [str(x) for x in self.solution],
            "contradiction": self.contradiction,
        }


def obstruction_system(n: int, rhs: Sequence[int] | None = None) -> ObstructionResult:
    """Solve for multiplicities of characters A-E matching the hook traces on even classes.

    ``rhs`` defaults to the closed-form trace counts; callers may pass
    measured traces instead.
    """
    if n < 13:
        raise ValueError(f"the obstruction system needs n >= 13, got {n}")
    classes = obstruction_classes(n)
    matrix = tuple(tuple(chi_closed_form(label, mu) for label in "ABCDE") for mu in classes)
    rhs = tuple(expected_hook_traces(n) if rhs is None else rhs)
    solution = solve_exact(matrix, rhs)
    return ObstructionResult(n, matrix, rhs, solution)


# --- identifying the braid representation -----------------------------------------


def sign_twist_witness(lam: Sequence[int], trace_data: Mapping) -> Partition | None:
    """An odd class where the data matches ``chi_lam`` but not its sign twist.

    Returns ``None`` only if no supplied odd class separates the two.
    """
    for mu in sorted(trace_data, key=lambda p: (-p.a(1), tuple(p))):
        if mu.sign == -1:
            value = mn_character(lam, mu)
            if value != 0 and trace_data[mu] == value:
                return Partition(mu)
    return None


def identify_irrep(s: int, trace_data: Mapping) -> Partition:
    """Find the irreducible of S_{s+1} whose character matches ``trace_data``.

    ``trace_data`` maps cycle types of S_{s+1} (each with a fixed point) to
    traces; it must cover every such class.  Candidates are the shapes whose
    dimension is ``C(s, 3)``.
    """
    if s < 5:
        raise ValueError(f"s must be at least 5, got {s}")
    N = s + 1
    data = {Partition(mu): v for mu, v in trace_data.items()}
    needed = [mu for mu in partitions_of(N) if mu.a(1) >= 1]
    missing = [mu for mu in needed if mu not in data]
    if missing:
        raise ValueError(f"trace data missing classes {missing[:3]}")
    dim = comb(s, 3)
    candidates = [lam for lam in partitions_of(N) if hook_dimension(lam) == dim]
    matches = [lam for lam in candidates if all(mn_character(lam, mu) == data[mu] for mu in needed)]
    if not matches:
        raise CertificateError(f"no irreducible of S_{N} matches the trace data")
    if len(matches) > 1:
        raise AmbiguousIdentification(f"several irreducibles match: {matches}")
    lam = matches[0]
    if lam.conjugate() != lam and sign_twist_witness(lam, data) is None:
        raise CertificateError(f"cannot separate {lam!r} from its sign twist")
    return lam
