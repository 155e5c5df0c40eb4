"""One test per acceptance criterion, exact equality throughout.

Each test prints a single PASS/FAIL line (visible even without ``-s``).
"""

import math
import time

import pytest

from gmfsym import verify
from gmfsym.class_sets import class_partition, equivalence_class, x_set
from gmfsym.cli import main
from gmfsym.gmf_eval import (
    I,
    ZERO,
    built_in_weights,
    chi_hat,
    evaluate,
    gaussian_cyclic_weights,
    inverse_weights,
    random_function_weights,
    s_sigma_matrix,
)
from gmfsym.jsonio import perm_from_json
from gmfsym.perm_core import decompose, enumerate_sn, parse_cycle_string

SEED = 20240601


@pytest.fixture
def verdict_line(capsys):
    def emit(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        assert ok, detail
    return emit


def test_c1_ssigma_sum_sweep(verdict_line):
    start = time.perf_counter()
    failures, cases, timing_6 = [], 0, 0.0
    for n in range(1, 7):
        t0 = time.perf_counter()
        suite = verify.standard_suite(n, SEED)
        if n % 4 == 0:
            assert gaussian_cyclic_weights(n).elements == suite["gaussian-cyclic"].elements
        for label, w in suite.items():
            v = verify.check_ssigma_sum(w)
            cases += v.cases
            if not v.holds:
                failures.append((n, label, v.witness))
        if n == 6:
            timing_6 = time.perf_counter() - t0
    ok = not failures and timing_6 < 120
    verdict_line("1 d(S_sigma) = sum over X_sigma, n=1..6", ok,
                 f"{cases} (w, sigma) cases, failures={failures[:1]}, n=6 took {timing_6:.1f}s, "
                 f"total {time.perf_counter() - start:.1f}s")


def test_c2_perm_equals_xset_size(verdict_line):
    results, t7 = {}, 0.0
    for n in range(1, 8):
        t0 = time.perf_counter()
        v = verify.check_perm_xset(n)
        results[n] = (v.holds, v.cases)
        if n == 7:
            t7 = time.perf_counter() - t0
    ok = all(h and c == math.factorial(n) for n, (h, c) in results.items()) and t7 < 300
    verdict_line("2 perm(S_sigma) = |X_sigma|, n=1..7", ok, f"{results}, n=7 took {t7:.1f}s")


def test_c3_equality_criterion(verdict_line):
    bad = []
    pairs = 0
    for n in range(1, 6):
        for k in range(20):
            phi = random_function_weights(n, SEED + 100 * n + k, label="phi")
            psi = inverse_weights(phi, label="psi")
            crit = verify.check_equality_criterion(phi, psi)
            sampled = verify.cross_validate_equality(phi, psi, trials=100, seed=SEED + k)
            pairs += 1
            if not (crit.holds and crit.outcome == "equal" and sampled.holds and sampled.cases == 100):
                bad.append((n, k))
    negative = {}
    for n in range(2, 6):
        t, s = built_in_weights("trivial", n), built_in_weights("sign", n)
        v = verify.check_equality_criterion(t, s)
        ineq = v.witness["inequalities"][1]
        negative[n] = (
            v.outcome == "not-equal"
            and perm_from_json(v.witness["sigma"]) == parse_cycle_string("(1 2)", n)
            and (ineq["lhs"]["value"], ineq["rhs"]["value"]) == ("1", "-1")
        )
    ok = not bad and all(negative.values())
    verdict_line("3 equality criterion", ok,
                 f"{pairs} conjugate pairs equal with 100 samples each (bad={bad}); "
                 f"trivial vs sign -> S_(1 2) gives 1 vs -1 for n=2..5: {negative}")


def test_c4_transpose_criterion(verdict_line):
    sym = {}
    for n in range(1, 6):
        for name in ("sign", "trivial"):
            v = verify.check_transpose_criterion(built_in_weights(name, n), trials=100, seed=SEED)
            sym[(n, name)] = v.holds and v.outcome == "symmetric" and v.stats["samples"] == 100
    w = gaussian_cyclic_weights(4)
    v = verify.check_transpose_criterion(w, trials=100, seed=SEED)
    chi_ineq, d_ineq = v.witness["inequalities"]
    d_ab, d_ba = d_ineq["lhs"]["value"], d_ineq["rhs"]["value"]
    sigma = perm_from_json(v.witness["sigma"])
    asym_ok = (
        v.holds and v.outcome == "asymmetric"
        and sigma == parse_cycle_string("(1 2 3 4)", 4)
        and chi_hat(w, sigma) == I
        and v.witness["symmetric_factors"] is True
        and (d_ab, d_ba) == (str(I), str(-I))
        and verify.replay_witness(v.witness, (w,))[0]
    )
    ok = all(sym.values()) and asym_ok
    verdict_line("4 transpose criterion", ok,
                 f"sign/trivial pass 100 samples for n=1..5: {all(sym.values())}; "
                 f"cyclic chi fails at {sigma}: d(AB)={d_ab}, d(BA)={d_ba}")


def test_c5_three_cycle_square(verdict_line):
    t0 = time.perf_counter()
    results = {n: verify.check_lemma_ssq(n) for n in range(3, 7)}
    elapsed = time.perf_counter() - t0
    ok = all(v.holds for v in results.values()) and elapsed < 10
    counts = {n: v.cases for n, v in results.items()}
    verdict_line("5 S_sigma^2 = C_sigma + I on 3-cycles, n=3..6", ok, f"entries checked {counts}, {elapsed:.2f}s")


def test_c6_det_multiplicativity(verdict_line):
    positive = {}
    for n in range(2, 6):
        v = verify.check_det_multiplicativity(built_in_weights("sign", n), trials=100, seed=SEED)
        f3c = 1 + n * (n - 1) // 2 + n * (n - 1) * (n - 2) // 3
        positive[n] = (v.holds and v.outcome == "multiplicative" and v.stats["pairs"] == f3c ** 2
                       and v.stats["pair_failures"] == 0 and v.stats["det_samples"] == 100, v.stats["pairs"])
    v3 = verify.check_det_multiplicativity(built_in_weights("trivial", 3), trials=100, seed=SEED)
    lhs3, rhs3 = (v3.witness["inequalities"][0][s]["value"] for s in ("lhs", "rhs"))
    cyc = parse_cycle_string("(1 2 3)", 3)
    neg3 = (v3.outcome == "not-multiplicative" and perm_from_json(v3.witness["sigma"]) == cyc
            and perm_from_json(v3.witness["tau"]) == cyc and (lhs3, rhs3) == ("4", "16"))
    s = s_sigma_matrix(cyc)
    direct = (evaluate(built_in_weights("trivial", 3), s) ** 2, evaluate(built_in_weights("trivial", 3), s @ s))
    v2 = verify.check_det_multiplicativity(built_in_weights("trivial", 2), trials=100, seed=SEED)
    lhs2, rhs2 = (v2.witness["inequalities"][0][s]["value"] for s in ("lhs", "rhs"))
    neg2 = v2.outcome == "not-multiplicative" and (lhs2, rhs2) == ("128", "64")
    ok = all(p[0] for p in positive.values()) and positive[4][1] == 225 and neg3 and direct == (4, 16) and neg2
    verdict_line("6 multiplicativity on F3c vs det", ok,
                 f"sign pairs per n {{n: count}} = { {n: p[1] for n, p in positive.items()} }; "
                 f"trivial S3: {lhs3} vs {rhs3}; trivial S2 all-twos: {lhs2} vs {rhs2}")


def test_c7_oracles(verdict_line):
    gmf = {}
    for n in range(1, 6):
        for label, w in verify.standard_suite(n, SEED).items():
            v = verify.check_gmf_oracle(w, trials=50, seed=SEED)
            gmf[(n, label)] = v.holds and v.cases == 50
    perm = {}
    for n in range(1, 9):
        v = verify.check_permanent_oracle(n, trials=50, seed=SEED)
        perm[n] = v.holds and v.cases == 50
    ok = all(gmf.values()) and all(perm.values())
    verdict_line("7 oracle equivalence", ok,
                 f"evaluate vs brute force: {sum(gmf.values())}/{len(gmf)} (n, weight) combos x 50; "
                 f"Ryser vs naive: {sum(perm.values())}/{len(perm)} sizes x 50")


def test_c8_structural_counts(verdict_line):
    bad = []
    checked = 0
    for n in range(1, 8):
        for p in enumerate_sn(n):
            checked += 1
            lengths = [len(c) for c in decompose(p)]
            want_class = 2 ** sum(1 for s in lengths if s >= 3)
            want_x = math.prod(1 if s == 2 else (2 if s % 2 else 4) for s in lengths)
            if len(equivalence_class(p)) != want_class or len(x_set(p)) != want_x:
                bad.append(p)
        classes = class_partition(n)
        union = frozenset().union(*(c.members for c in classes))
        if sum(len(c) for c in classes) != math.factorial(n) or len(union) != math.factorial(n):
            bad.append(f"partition n={n}")
    verdict_line("8 structural counts, n=1..7", not bad, f"{checked} permutations, problems={bad[:3]}")


def test_c9_witness_integrity(verdict_line, capsys):
    problems = []
    replayed = 0
    exit_ok = {}
    for n in range(1, 6):
        suite = verify.standard_suite(n, SEED)
        verdicts = verify.run_all(n, seed=SEED, trials=20)
        for v in verdicts:
            if not v.holds and v.witness is None:
                problems.append(f"n={n} {v.claim}: failing without witness")
            if v.witness is not None:
                ok, why = verify.replay_verdict(v, suite)
                replayed += 1
                if not ok:
                    problems.append(f"n={n} {v.claim}: {why}")
        aggregate = all(v.holds for v in verdicts)
        code = main(["verify-all", "--n", str(n), "--seed", str(SEED), "--trials", "20", "--threads", "1"])
        capsys.readouterr()
        exit_ok[n] = code == (0 if aggregate else 1)
    # a genuinely false verdict: the pair test alone at n = 2 cannot see perm != det
    w = built_in_weights("trivial", 2)
    v = verify.check_det_multiplicativity(w, trials=20, seed=SEED, proof_probe=False)
    false_ok = (not v.holds) and verify.replay_witness(v.witness, (w,))[0]
    ok = not problems and all(exit_ok.values()) and false_ok
    verdict_line("9 witness integrity and verify-all exit status", ok,
                 f"{replayed} witnesses replayed, problems={problems[:2]}, exit codes match: {exit_ok}, "
                 f"false verdict replays: {false_ok}")
