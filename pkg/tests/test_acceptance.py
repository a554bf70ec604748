"""Acceptance suite: one test per criterion, each timed against its limit."""

import contextlib
import json
import random
import time
from collections import Counter
from fractions import Fraction
from math import comb


from conftest import ACCEPTANCE_RESULTS
from purebraid.braidrep import (
    EPSILON,
    SignedMonomialMatrix,
    det_I_minus,
    eigen_residues,
    rho_matrix,
    smm_trace,
)
from purebraid.certify import CERTIFIED, build_generators, certify, main
from purebraid.characters import (
    character,
    chi_closed_form,
    identify_irrep,
    inner_product,
    mn_character,
    obstruction_classes,
    obstruction_system,
    sign_twist_witness,
)
from purebraid.partitions import Partition, descent_set, enumerate_syt, partitions_of
from purebraid.reidemeister import (
    INFINITE,
    mat_mul,
    p4_even_layer_bound,
    pm1_bound,
    product_formula,
    random_block_triangular,
    random_finite_order_matrix,
    reidemeister_of_matrix,
    snf_oracle,
)
from purebraid.stembridge import (
    cyclic_exponents,
    eigenvalue_one_certificates,
    find_zero_index_tableaux,
    zero_index_tableau,
)
from purebraid.symgrp import (
    all_permutations,
    class_representative,
    cycle_type,
    embed_fixing_last,
    random_permutation,
    reduced_word,
)


@contextlib.contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        line = f"criterion {number} FAIL  {title} ({elapsed:.2f}s): {exc}"
        print(line)
        ACCEPTANCE_RESULTS.append(line)
        raise
    line = f"criterion {number} PASS  {title} ({elapsed:.2f}s, limit {limit}s)"
    print(line)
    ACCEPTANCE_RESULTS.append(line)


def dense(m: SignedMonomialMatrix):
    return m.to_dense()


def dense_identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def word_matrix(gens, p):
    out = SignedMonomialMatrix.identity(gens[0].dim)
    for k in reduced_word(p):
        out = out @ gens[k - 1]
    return out


def fraction_det(a):
    m = [[Fraction(x) for x in row] for row in a]
    k = len(m)
    det = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, k):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return int(det)


def test_criterion_1_relations():
    with criterion(1, "relation suite s=5..9", 60):
        for s in range(5, 10):
            gens = build_generators(s)
            for level, mats, eps, expected in (
                ("pairs", gens.pairs, gens.pair_epsilon, -1),
                ("triples", gens.triples, gens.triple_epsilon, 1),
            ):
                k = mats[0].dim
                one = dense_identity(k)
                w = [dense(m) for m in mats]
                e = dense(eps)
                assert e == [[expected * x for x in row] for row in one], (s, level, "epsilon")
                for i, a in enumerate(w):
                    assert mat_mul(a, a) == one, (s, level, i)
                    assert mat_mul(a, e) == mat_mul(e, a), (s, level, i)
                    for j in range(i + 1, len(w)):
                        b = w[j]
                        if j == i + 1:
                            assert mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b), (s, level, i, j)
                        else:
                            assert mat_mul(a, b) == mat_mul(b, a), (s, level, i, j)


def test_criterion_2_characters():
    with criterion(2, "trace(rho) equals Murnaghan-Nakayama", 120):
        rng = random.Random(2024)
        for s in range(5, 11):
            N = s + 1
            lam = Partition([N - 3, 1, 1, 1])
            gens = build_generators(s).triples
            if s <= 6:
                elements = list(all_permutations(s))
            else:
                elements = [random_permutation(s, rng) for _ in range(200)]
            for p in elements:
                m = word_matrix(gens, p)
                assert m == rho_matrix(p)
                mu = cycle_type(embed_fixing_last(p, N))
                assert smm_trace(m) == mn_character(lam, mu), (s, p)
            # the image of omega_1 is a transposition
            assert smm_trace(gens[0]) == chi_closed_form("F", [2] + [1] * (N - 2))
        for N in range(6, 16):
            for mu in partitions_of(N):
                assert chi_closed_form("F", mu) == mn_character([N - 3, 1, 1, 1], mu)
        # five evaluations at N = 13, from the binomial formulas
        n = 13
        formulas = [comb(n - 1, 3), comb(n - 4, 3) + 1, comb(n - 7, 3) + 2, comb(n - 10, 3) + 3,
                    comb(n - 5, 3) - 2 * (n - 5)]
        assert formulas == [220, 85, 22, 4, 40]
        measured = [smm_trace(rho_matrix(class_representative(mu[:-1]))) for mu in obstruction_classes(n)]
        assert measured == [220, 85, 22, 4, 40]
        assert [mn_character([n - 3, 1, 1, 1], mu) for mu in obstruction_classes(n)] == formulas


def test_criterion_3_obstruction():
    with criterion(3, "obstruction system n=13..15", 1):
        for n in (13, 14, 15):
            result = obstruction_system(n)
            assert result.solution == (5 - n, 1, 5 - n, n - 5, 1)
            assert all(isinstance(x, Fraction) for x in result.solution)
            assert result.contradiction


def test_criterion_4_irreducibility():
    with criterion(4, "irreducibility and identification N=6..12", 120):
        for N in range(6, 13):
            s = N - 1
            lam = Partition([N - 3, 1, 1, 1])
            chi = character(lam)
            assert inner_product(chi, chi) == 1
            traces = {}
            for mu in partitions_of(N):
                if mu.a(1) >= 1:
                    rep = class_representative(mu[:-1])
                    traces[mu] = smm_trace(rho_matrix(rep, s))
            assert identify_irrep(s, traces) == lam
            witness = sign_twist_witness(lam, traces)
            if N == 7:
                assert lam.conjugate() == lam
                continue
            assert witness is not None and witness.sign == -1
            assert traces[witness] == mn_character(lam, witness) != -mn_character(lam, witness)


def test_criterion_5_stembridge():
    with criterion(5, "char_poly eigenvalues equal cyclic exponents, S_5..S_7", 180):
        for s in (5, 6, 7):
            N = s + 1
            lam = (N - 3, 1, 1, 1)
            cache = {}
            for p in all_permutations(s):
                mu = cycle_type(embed_fixing_last(p, N))
                if mu not in cache:
                    cache[mu] = cyclic_exponents(lam, mu)
                expected = cache[mu]
                got = Counter(eigen_residues(rho_matrix(p), mu.m))
                assert expected.m == mu.m
                assert +got == +expected.exponents, (s, p)


def _index_oracle(tableau, mu):
    # b_mu from scratch: the l-th entry of block r of length k is l * m / k
    m = mu.m
    b = [step * m // part for part in mu for step in range(1, part + 1)]
    return sum(b[d - 1] for d in descent_set(tableau)) % m


def test_criterion_6_eigenvalue_one():
    with criterion(6, "eigenvalue-1 certificates and det(I - rho) = 0", 180):
        for N in range(6, 14):
            certs = eigenvalue_one_certificates(N)
            assert set(certs) == set(partitions_of(N))
            hooks = list(enumerate_syt([N - 3, 1, 1, 1]))
            for mu in partitions_of(N):
                t = zero_index_tableau(N, mu)
                assert _index_oracle(t, mu) == 0
                found = [h for h in hooks if _index_oracle(h, mu) == 0]
                assert found and t in found
                assert found == find_zero_index_tableaux(N, mu)
        rng = random.Random(6)
        for s in (5, 6, 7):
            assert all(det_I_minus(rho_matrix(p)) == 0 for p in all_permutations(s))
        for s in (8, 9):
            for _ in range(500):
                m = rho_matrix(random_permutation(s, rng))
                assert det_I_minus(m) == 0
        # dense route on a handful, as an oracle for the cycle-factor formula
        for _ in range(10):
            m = rho_matrix(random_permutation(7, rng))
            a = m.to_dense()
            assert fraction_det([[int(i == j) - x for j, x in enumerate(row)] for i, row in enumerate(a)]) == 0


def test_criterion_7_reidemeister():
    with criterion(7, "Reidemeister arithmetic", 60):
        rng = random.Random(7)
        for _ in range(200):
            k = rng.randint(1, 6)
            a = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)]
            ref = abs(fraction_det([[int(i == j) - x for j, x in enumerate(row)] for i, row in enumerate(a)]))
            want = INFINITE if ref == 0 else ref
            assert reidemeister_of_matrix(a) == snf_oracle(a) == want, a
        for _ in range(100):
            sizes = [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
            m, blocks = random_block_triangular(sizes, rng)
            assert product_formula(blocks) == reidemeister_of_matrix(m) == snf_oracle(m)
        sizes = [1, 3, 5, 7, 9, 11, 13, 15, 25]
        for i in range(100):
            k = sizes[i % len(sizes)]
            a = random_finite_order_matrix(k, rng)
            report = pm1_bound(a)
            assert report.has_pm1
            count = reidemeister_of_matrix(a)
            assert count >= report.lower_bound >= 2
        bound = p4_even_layer_bound(5, random.Random(0))
        assert bound.bound == 16 and all(bound.ranks[k] % 2 for k in (4, 6, 8, 10))


def test_criterion_8_end_to_end(tmp_path, capsys):
    with criterion(8, "certify --strands 6 and single-sign mutations", 180):
        out = tmp_path / "cert.json"
        assert main(["--strands", "6", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["verdict"] == CERTIFIED
        gens = build_generators(6)
        mutations = 0
        for level, mats, eps in (("pairs", gens.pairs, gens.pair_epsilon),
                                 ("triples", gens.triples, gens.triple_epsilon)):
            for k, m in list(enumerate(mats, start=1)) + [(EPSILON, eps)]:
                for j in range(m.dim):
                    cert = certify(6, generators=gens.replace(level, k, m.with_flipped_sign(j)))
                    assert cert.verdict.startswith("FALSIFIED"), (level, k, j)
                    mutations += 1
        assert mutations == 6 * 15 + 6 * 20
