"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line; run with
``pytest tests/test_acceptance.py -v -rA`` to see them.  All comparisons are
exact integer comparisons.
"""

import random
import time
from functools import reduce

import numpy as np

from bentgraph.boolfn import BooleanFunction, PointSet, from_truth_table, is_bent
from bentgraph.cayley import build_cayley, component_count, integer_rank, spectrum_symmetry_report
from bentgraph.genlab import enumerate_bent, mm_bent, nyberg_vectorial_bent, random_function
from bentgraph.srg import (check_fundamental_identity, check_srg, is_srg_lambda_eq_mu,
                           paper_discrepancy, params_from_spectrum, predicted_bent_params,
                           spectrum_from_params)
from bentgraph.transform import butterfly, cayley_eigenvalues, fourier, signed_walsh
from bentgraph.vectorial import (check_support_srg_condition, nary_symmetric_difference,
                                 subset_edge_sets_agree, symmetric_difference)

from conftest import all_functions, random_tables
from oracles import brute_nonlinearity, character_matrix


def verdict(num, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_1_parameter_table():
    t0 = time.perf_counter()
    problems = []
    counted = {}
    for n in (2, 4, 6, 8, 10):
        plus, minus = predicted_bent_params(n)
        f = mm_bent(n)
        if f.weight != (1 << (n - 1)) - (1 << (n // 2 - 1)):
            problems.append(f"n={n}: generated weight {f.weight}")
        got_minus = check_srg(build_cayley(f)).params
        got_plus = check_srg(build_cayley(f.complement())).params
        counted[n] = (got_plus, got_minus)
        if got_minus.as_tuple() != minus.as_tuple():
            problems.append(f"n={n} minus: {got_minus} != {minus}")
        if got_plus.as_tuple() != plus.as_tuple():
            problems.append(f"n={n} plus: {got_plus} != {plus}")
    # The loopless weight-3 function at n=2 is K4: complete-graph convention.
    k4 = check_srg(build_cayley(from_truth_table(2, "0111"))).params
    if not (k4.matches(predicted_bent_params(2)[0]) and not k4.mu_defined):
        problems.append(f"K4 counted as {k4}")
    notes = [paper_discrepancy(2, k4), paper_discrepancy(2, counted[2][0]),
             paper_discrepancy(4, counted[4][1])]
    for note in notes:
        print("  warning:", note)
    if not (notes[0] and "(4, 3, 1, 1)" in notes[0] and notes[1] and "(4, 3, 1, 1)" in notes[1]):
        problems.append("missing discrepancy warning for printed srg(4,3,1,1)")
    if not (notes[2] and "(16, 10, 2, 2)" in notes[2]):
        problems.append("missing discrepancy warning for printed srg(16,10,2,2)")
    expected = {6: ((64, 36, 20, 20), (64, 28, 12, 12)),
                8: ((256, 136, 72, 72), (256, 120, 56, 56)),
                10: ((1024, 528, 272, 272), (1024, 496, 240, 240))}
    for n, (p, m) in expected.items():
        if (counted[n][0].as_tuple(), counted[n][1].as_tuple()) != (p, m):
            problems.append(f"n={n} table mismatch")
    elapsed = time.perf_counter() - t0
    if elapsed >= 10:
        problems.append(f"runtime {elapsed:.1f}s")
    verdict(1, "srg parameter table n=2..10", not problems,
            "; ".join(problems) or f"{elapsed:.2f}s")


def test_2_bent_iff_srg_lambda_eq_mu():
    t0 = time.perf_counter()
    disagreements = []
    checked = 0
    for n in (2, 4):
        size = 1 << n
        for t in range(1 << (size - 1)):
            f = BooleanFunction(n, (0,) + tuple((t >> (size - 2 - j)) & 1 for j in range(size - 1)))
            checked += 1
            b = bool(is_bent(f))
            r = is_srg_lambda_eq_mu(f)
            if b != r.holds:
                disagreements.append(f"n={n} b:{f.to_bits()} bent={b} graph={r.params}")
    elapsed = time.perf_counter() - t0
    for d in disagreements:
        print("  disagreement:", d)
    ok = not disagreements and elapsed < 120
    verdict(2, "bent <=> srg(lambda=mu), exhaustive n=2 and n=4 with f(0)=0", ok,
            f"{checked} functions, {len(disagreements)} disagreements, {elapsed:.1f}s")


def test_3_eigenvector_theorem():
    bad = 0
    total = 0
    for n in (2, 3, 4):
        h = character_matrix(n)  # row w is Q_w
        for seed in range(200):
            f = random_function(n, seed + 1000 * n)
            a = np.array([[f.table[u ^ w] for w in range(1 << n)] for u in range(1 << n)], dtype=np.int64)
            lam = np.array(cayley_eigenvalues(f).indexed, dtype=np.int64)
            aq = a @ h.T                  # column w is A Q_w
            if not np.array_equal(aq, h.T * lam[None, :]):
                bad += 1
            total += 1
    verdict(3, "A Q_w = lambda_w Q_w for all w, n=2,3,4", bad == 0, f"{total} functions, {bad} failures")


def test_4_spectral_bookkeeping():
    sample = list(all_functions(2))
    for n in (3, 4):
        sample += [random_function(n, 5000 + 100 * n + s) for s in range(200)]
    problems = []
    connected = 0
    for f in sample:
        ev = cayley_eigenvalues(f)
        if ev.largest != f.weight or max(ev.indexed) != ev.largest:
            problems.append(f"lambda0 b:{f.to_bits()}")
        if ev.multiset[ev.largest] != component_count(f):
            problems.append(f"multiplicity b:{f.to_bits()}")
        a = [[f.table[u ^ w] for w in range(1 << f.n)] for u in range(1 << f.n)]
        if integer_rank(a) != sum(1 for x in ev.indexed if x):
            problems.append(f"rank b:{f.to_bits()}")
        rep = spectrum_symmetry_report(f)
        if rep.connected:
            connected += 1
            if rep.has_minus_lambda0 != rep.spectrum_symmetric:
                problems.append(f"symmetry b:{f.to_bits()}")
    verdict(4, "lambda0, multiplicity, rank, spectral symmetry", not problems,
            f"{len(sample)} functions, {connected} connected; " + "; ".join(problems[:5]))


def test_5_conversion_round_trips():
    problems = []
    emitted = []
    for n in (2, 4, 6, 8, 10):
        for p in predicted_bent_params(n):
            s = spectrum_from_params(p)
            if params_from_spectrum(s) != p:
                problems.append(f"round trip {p}")
            if s.k + s.m1 * s.theta1 + s.m2 * s.theta2 != 0 or 1 + s.m1 + s.m2 != p.v:
                problems.append(f"trace/count {p}")
            if spectrum_from_params(params_from_spectrum(s)) != s:
                problems.append(f"reverse round trip {s}")
            emitted.append(p)
        f = mm_bent(n)
        emitted += [check_srg(build_cayley(f)).params, check_srg(build_cayley(f.complement())).params]
    for p in emitted:
        if p.mu_defined and not check_fundamental_identity(p):
            problems.append(f"identity {p}")
    verdict(5, "spectrum <-> parameters round trips and identities", not problems,
            f"{len(emitted)} parameter sets; " + "; ".join(problems))


def test_6_enumeration_counts():
    t0 = time.perf_counter()
    two = enumerate_bent(2)
    four = enumerate_bent(4)
    brute_two = [f for f in all_functions(2) if brute_nonlinearity(f) == 1]
    elapsed = time.perf_counter() - t0
    ok = (len(two) == 8 and len(four) == 896
          and [f.table for f in two] == [f.table for f in brute_two] and elapsed < 30)
    verdict(6, "enumerate_bent(2) = 8, enumerate_bent(4) = 896", ok,
            f"{len(two)}, {len(four)}, {elapsed:.2f}s")


def test_7_vectorial_proposition():
    t0 = time.perf_counter()
    problems = []
    subsets = 0
    for n in (4, 6):
        F = nyberg_vectorial_bent(n)
        for r in check_support_srg_condition(F):
            subsets += 1
            if not (r.lambda_eq_mu and r.bridge_ok and subset_edge_sets_agree(F, r.indicator)):
                problems.append(f"n={n} subset {r.subset}: {r.params}")
    elapsed = time.perf_counter() - t0
    ok = not problems and subsets == 3 + 7 and elapsed < 10
    verdict(7, "symmetric-difference Cayley graphs of Nyberg n=4,6", ok,
            f"{subsets} subsets, {elapsed:.2f}s; " + "; ".join(problems))


def test_8_symmetric_difference_laws():
    rng = random.Random(8)
    failures = 0
    trials = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        top = 1 << n

        def rand_set():
            return PointSet(n, frozenset(rng.randrange(top) for _ in range(rng.randint(0, min(top, 40)))))

        a, b, c = rand_set(), rand_set(), rand_set()
        empty = PointSet(n, frozenset())
        sd = symmetric_difference
        checks = [
            sd(a, b) == sd(b, a),
            sd(sd(a, b), c) == sd(a, sd(b, c)),
            sd(a, empty) == a,
            sd(a, a) == empty,
        ]
        coll = [rand_set() for _ in range(rng.randint(1, 7))]
        checks.append(nary_symmetric_difference(coll) == reduce(sd, coll))
        failures += checks.count(False)
        trials += 1
    verdict(8, "symmetric difference group laws and n-ary fold", failures == 0,
            f"{trials} trials, {failures} failures")


def test_9_transform_oracle():
    problems = []
    tested = 0
    h2 = character_matrix(2)
    for f in all_functions(2):
        if list(fourier(f).numerators) != (h2 @ np.array(f.table, dtype=np.int64)).tolist():
            problems.append(f"n=2 b:{f.to_bits()}")
        tested += 1
    for n in range(3, 9):
        fs = list(random_tables(n, 1000, seed=900 + n))
        rows = np.array([f.table for f in fs], dtype=np.int64)
        fast = butterfly(rows)
        naive = rows @ character_matrix(n).T
        if not np.array_equal(fast, naive):
            problems.append(f"n={n} butterfly != naive")
        for f, nums in zip(fs, fast.tolist()):
            s = signed_walsh(f).values
            if sum(x * x for x in s) != 1 << (2 * n):
                problems.append(f"Parseval n={n}")
            if s[0] != (1 << n) - 2 * nums[0] or any(s[w] != -2 * nums[w] for w in range(1, 1 << n)):
                problems.append(f"Walsh/Fourier relation n={n}")
        tested += len(fs)
    verdict(9, "butterfly = naive, Parseval, S(w) = -2 lambda_w", not problems,
            f"{tested} functions; " + "; ".join(problems[:5]))
