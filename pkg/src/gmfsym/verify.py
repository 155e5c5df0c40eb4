"""Exhaustive and sampled checkers for the identities about d_chi^G.

Every checker returns a :class:`Verdict`. ``holds`` says whether the claim
was confirmed on this input; ``outcome`` records which side of an
equivalence the input fell on (e.g. two functions being "equal" or
"not-equal"). Whenever there is an inequality to show, ``witness`` carries
it as a list of ``{"lhs": expr, "rhs": expr}`` records. Each expr names a
computation together with its value, so :func:`replay_witness` can redo the
computation from scratch.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .class_sets import class_partition, equivalence_class, x_set
from .gmf_eval import (
    ONE,
    ZERO,
    ExactComplex,
    SquareMatrix,
    WeightedGroup,
    WeightError,
    built_in_weights,
    c_sigma,
    chi_hat,
    class_function_weights,
    constant,
    determinant,
    evaluate,
    gaussian_cyclic_weights,
    identity,
    inverse_weights,
    is_class_function,
    permanent,
    permanent_naive,
    permutation_matrix,
    random_class_table,
    random_function_weights,
    random_matrix,
    random_symmetric_matrix,
    s_sigma_matrix,
)
from .jsonio import matrix_from_json, matrix_to_json, perm_from_json, perm_to_json
from .perm_core import (
    DegreeError,
    Permutation,
    enumerate_f3c,
    enumerate_sn,
    inverse,
    three_cycles,
    two_involution_factorization,
)

DEFAULT_TRIALS = 100
DEFAULT_BOUND = 5


@dataclass
class Verdict:
    claim: str
    holds: bool
    cases: int
    subjects: tuple = ()
    outcome: str | None = None
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "subjects": list(self.subjects),
            "holds": self.holds,
            "outcome": self.outcome,
            "cases": self.cases,
            "stats": self.stats,
            "witness": self.witness,
        }


# -- witness expressions ---------------------------------------------------------

def _expr(op: str, value, **args) -> dict:
    out = {"op": op}
    out.update(args)
    out["value"] = str(value)
    return out


def _gmf_expr(k: int, w: WeightedGroup, a: SquareMatrix) -> dict:
    return _expr("gmf", evaluate(w, a), weights=k, matrix=matrix_to_json(a))


def _inequality(lhs: dict, rhs: dict) -> dict:
    return {"lhs": lhs, "rhs": rhs}


def _compute(expr: dict, weights: tuple) -> ExactComplex:
    op = expr["op"]

    def w():
        return weights[expr["weights"] - 1]

    if op == "gmf":
        return evaluate(w(), matrix_from_json(expr["matrix"]))
    if op == "brute_gmf":
        return brute_force_gmf(w(), matrix_from_json(expr["matrix"]))
    if op == "product":
        out = ONE
        for f in expr["factors"]:
            out = out * _compute(f, weights)
        return out
    if op == "xset_sum":
        sigma = perm_from_json(expr["sigma"])
        return sum((chi_hat(w(), t) for t in x_set(sigma).members), ZERO)
    if op == "xset_size":
        return ExactComplex(len(x_set(perm_from_json(expr["sigma"])).members))
    if op == "class_sum":
        sigma = perm_from_json(expr["sigma"])
        return sum((chi_hat(w(), t) for t in equivalence_class(sigma).members), ZERO)
    if op == "chi_hat":
        return chi_hat(w(), perm_from_json(expr["sigma"]))
    if op == "permanent":
        return permanent(matrix_from_json(expr["matrix"]))
    if op == "permanent_naive":
        return permanent_naive(matrix_from_json(expr["matrix"]))
    if op == "determinant":
        return determinant(matrix_from_json(expr["matrix"]))
    if op == "square_entry":
        s = s_sigma_matrix(perm_from_json(expr["sigma"]))
        return (s @ s).entry(expr["i"], expr["j"])
    if op == "c_plus_delta":
        sigma = perm_from_json(expr["sigma"])
        i, j = expr["i"], expr["j"]
        return ExactComplex(c_sigma(sigma, i, j) + (1 if i == j else 0))
    raise ValueError(f"unknown witness op {op!r}")


def replay_witness(witness: dict, weights: tuple) -> tuple:
    """Recompute every inequality in ``witness``.

    Returns (ok, problems): ok is True when each side reproduces its recorded
    value and the two sides differ.
    """
    problems = []
    for k, ineq in enumerate(witness.get("inequalities", [])):
        values = []
        for side in ("lhs", "rhs"):
            expr = ineq[side]
            got = _compute(expr, weights)
            if got != ExactComplex.parse(expr["value"]):
                problems.append(f"inequality {k} {side}: recorded {expr['value']}, recomputed {got}")
            values.append(got)
        if values[0] == values[1]:
            problems.append(f"inequality {k}: both sides equal {values[0]}")
    if not witness.get("inequalities"):
        problems.append("witness has no inequality")
    return (not problems), problems


# -- independent oracle -------------------------------------------------------------

def brute_force_gmf(w: WeightedGroup, a: SquareMatrix) -> ExactComplex:
    """Sum chi_hat(p) * prod_i a[i, p(i)] over all of S_n.

    Deliberately shares nothing with ``evaluate``: it walks S_n with
    itertools rather than the group's element list, and multiplies the
    ExactComplex entries directly instead of using the integer kernels.
    """
    if a.n != w.n:
        raise DegreeError(f"matrix is {a.n}x{a.n} but the group acts on {w.n} points")
    total = ZERO
    rows = a.rows
    for images in itertools.permutations(range(1, a.n + 1)):
        weight = w.chi.get(Permutation(images), ZERO)
        if not weight:
            continue
        prod = weight
        for i, j in enumerate(images):
            prod = prod * rows[i][j - 1]
        total = total + prod
    return total


def _trial_seeds(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [rng.randrange(2 ** 32) for _ in range(count)]


# -- checkers -----------------------------------------------------------------------

def check_ssigma_sum(w: WeightedGroup) -> Verdict:
    """d(S_sigma) equals the sum of chi_hat over X_sigma, for every sigma in S_n."""
    failures = 0
    witness = None
    cases = 0
    for sigma in enumerate_sn(w.n):
        cases += 1
        s = s_sigma_matrix(sigma)
        lhs = evaluate(w, s)
        rhs = sum((chi_hat(w, t) for t in x_set(sigma).members), ZERO)
        if lhs != rhs:
            failures += 1
            if witness is None:
                witness = {
                    "sigma": perm_to_json(sigma),
                    "inequalities": [_inequality(
                        _expr("gmf", lhs, weights=1, matrix=matrix_to_json(s)),
                        _expr("xset_sum", rhs, weights=1, sigma=perm_to_json(sigma)),
                    )],
                }
    return Verdict("ssigma-sum", failures == 0, cases, (w.label,), None, witness, {"failures": failures})


def check_perm_xset(n: int) -> Verdict:
    """perm(S_sigma) == |X_sigma| with the permanent from Ryser's formula."""
    failures = 0
    witness = None
    cases = 0
    for sigma in enumerate_sn(n):
        cases += 1
        s = s_sigma_matrix(sigma)
        p = permanent(s)
        size = len(x_set(sigma).members)
        if p != size:
            failures += 1
            if witness is None:
                witness = {
                    "sigma": perm_to_json(sigma),
                    "inequalities": [_inequality(
                        _expr("permanent", p, matrix=matrix_to_json(s)),
                        _expr("xset_size", size, sigma=perm_to_json(sigma)),
                    )],
                }
    return Verdict("perm-xset", failures == 0, cases, (), None, witness, {"n": n, "failures": failures})


def _check_same_degree(w1: WeightedGroup, w2: WeightedGroup) -> None:
    if w1.n != w2.n:
        raise DegreeError(f"degree mismatch: {w1.n} vs {w2.n}")


def check_equality_criterion(w1: WeightedGroup, w2: WeightedGroup) -> Verdict:
    """Compare class sums over every [sigma]; cross-check against d(S_sigma).

    If some class sum differs the outcome is "not-equal" and the verdict
    holds once a distinguishing S_sigma is found. If all class sums agree the
    outcome is "equal" and it holds when no S_sigma distinguishes the two.
    """
    _check_same_degree(w1, w2)
    n = w1.n
    classes = class_partition(n)
    bad_class = None
    for cls in classes:
        s1 = sum((chi_hat(w1, t) for t in cls.members), ZERO)
        s2 = sum((chi_hat(w2, t) for t in cls.members), ZERO)
        if s1 != s2:
            bad_class = (cls, s1, s2)
            break
    scanned = 0
    distinguishing = None
    for sigma in enumerate_sn(n):
        scanned += 1
        s = s_sigma_matrix(sigma)
        v1, v2 = evaluate(w1, s), evaluate(w2, s)
        if v1 != v2:
            distinguishing = (sigma, s, v1, v2)
            break
    cases = len(classes) + scanned
    subjects = (w1.label, w2.label)
    stats = {"classes": len(classes), "sigmas_scanned": scanned}
    inequalities = []
    witness = None
    if bad_class is not None:
        cls, s1, s2 = bad_class
        rep = perm_to_json(cls.representative)
        inequalities.append(_inequality(
            _expr("class_sum", s1, weights=1, sigma=rep),
            _expr("class_sum", s2, weights=2, sigma=rep),
        ))
    if distinguishing is not None:
        sigma, s, v1, v2 = distinguishing
        inequalities.append(_inequality(
            _expr("gmf", v1, weights=1, matrix=matrix_to_json(s)),
            _expr("gmf", v2, weights=2, matrix=matrix_to_json(s)),
        ))
    if inequalities:
        witness = {"inequalities": inequalities}
        if bad_class is not None:
            witness["class_representative"] = perm_to_json(bad_class[0].representative)
        if distinguishing is not None:
            witness["sigma"] = perm_to_json(distinguishing[0])
    outcome = "equal" if bad_class is None else "not-equal"
    holds = (bad_class is None) == (distinguishing is None)
    return Verdict("equality-criterion", holds, cases, subjects, outcome, witness, stats)


def cross_validate_equality(
    w1: WeightedGroup, w2: WeightedGroup, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Verdict:
    """Back the class-sum criterion with random symmetric matrices.

    "equal" must survive every sample exactly; "not-equal" must come with an
    S_sigma that still separates the two functions when re-evaluated.
    """
    crit = check_equality_criterion(w1, w2)
    subjects = crit.subjects
    if crit.outcome == "equal":
        for t, s in enumerate(_trial_seeds(seed, trials)):
            a = random_symmetric_matrix(w1.n, s, bound)
            v1, v2 = evaluate(w1, a), evaluate(w2, a)
            if v1 != v2:
                witness = {"inequalities": [_inequality(
                    _expr("gmf", v1, weights=1, matrix=matrix_to_json(a)),
                    _expr("gmf", v2, weights=2, matrix=matrix_to_json(a)),
                )]}
                return Verdict("equality-sampled", False, t + 1, subjects, "equal", witness, {"trials": trials})
        return Verdict("equality-sampled", crit.holds, trials, subjects, "equal", crit.witness, {"trials": trials})
    confirmed = False
    if crit.witness is not None and "sigma" in crit.witness:
        s = s_sigma_matrix(perm_from_json(crit.witness["sigma"]))
        confirmed = evaluate(w1, s) != evaluate(w2, s)
    return Verdict("equality-sampled", crit.holds and confirmed, 1, subjects, "not-equal", crit.witness, {"trials": 0})


def check_transpose_criterion(
    w: WeightedGroup, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Verdict:
    """chi_hat(p) == chi_hat(p^-1) for all p, against d(A) = d(A^T) and d(AB) = d(BA).

    Off G both sides vanish and G is inverse-closed, so the scan runs over G
    in lexicographic order. A failure at sigma is turned into symmetric
    permutation matrices A = P_beta, B = P_alpha with AB = P_sigma
    (rows map i to column p(i), so P_x P_y = P_{y x}).
    """
    cases = 0
    failing = None
    for sigma in sorted(w.elements):
        cases += 1
        if chi_hat(w, sigma) != chi_hat(w, inverse(sigma)):
            failing = sigma
            break
    if failing is not None:
        alpha, beta = two_involution_factorization(failing)
        a, b = permutation_matrix(beta), permutation_matrix(alpha)
        ab, ba = a @ b, b @ a
        d_ab, d_ba = evaluate(w, ab), evaluate(w, ba)
        witness = {
            "sigma": perm_to_json(failing),
            "alpha": perm_to_json(alpha),
            "beta": perm_to_json(beta),
            "symmetric_factors": a.symmetric and b.symmetric,
            "inequalities": [
                _inequality(
                    _expr("chi_hat", chi_hat(w, failing), weights=1, sigma=perm_to_json(failing)),
                    _expr("chi_hat", chi_hat(w, inverse(failing)), weights=1, sigma=perm_to_json(inverse(failing))),
                ),
                _inequality(
                    _expr("gmf", d_ab, weights=1, matrix=matrix_to_json(ab)),
                    _expr("gmf", d_ba, weights=1, matrix=matrix_to_json(ba)),
                ),
            ],
        }
        holds = d_ab != d_ba and a.symmetric and b.symmetric and ab == permutation_matrix(failing)
        return Verdict("transpose-criterion", holds, cases, (w.label,), "asymmetric", witness, {"samples": 0})

    for s in _trial_seeds(seed, trials):
        cases += 1
        a = random_matrix(w.n, s, bound, gaussian=True)
        d_a, d_at = evaluate(w, a), evaluate(w, a.transpose())
        if d_a != d_at:
            witness = {"inequalities": [_inequality(
                _expr("gmf", d_a, weights=1, matrix=matrix_to_json(a)),
                _expr("gmf", d_at, weights=1, matrix=matrix_to_json(a.transpose())),
            )]}
            return Verdict("transpose-criterion", False, cases, (w.label,), "symmetric", witness)
        b1 = random_symmetric_matrix(w.n, s ^ 0x5A5A5A5A, bound)
        b2 = random_symmetric_matrix(w.n, s ^ 0xA5A5A5A5, bound)
        d12, d21 = evaluate(w, b1 @ b2), evaluate(w, b2 @ b1)
        if d12 != d21:
            witness = {"inequalities": [_inequality(
                _expr("gmf", d12, weights=1, matrix=matrix_to_json(b1 @ b2)),
                _expr("gmf", d21, weights=1, matrix=matrix_to_json(b2 @ b1)),
            )]}
            return Verdict("transpose-criterion", False, cases, (w.label,), "symmetric", witness)
    return Verdict("transpose-criterion", True, cases, (w.label,), "symmetric", None, {"samples": trials})


def check_lemma_ssq(n: int) -> Verdict:
    """For each 3-cycle sigma: (S_sigma^2)[i, j] == C_sigma(i, j) + delta_ij."""
    if n < 3:
        raise ValueError("the 3-cycle lemma needs n >= 3")
    cases = 0
    failures = 0
    witness = None
    for sigma in three_cycles(n):
        s = s_sigma_matrix(sigma)
        sq = s @ s
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                cases += 1
                want = c_sigma(sigma, i, j) + (1 if i == j else 0)
                got = sq.entry(i, j)
                if got != want:
                    failures += 1
                    if witness is None:
                        p = perm_to_json(sigma)
                        witness = {"sigma": p, "i": i, "j": j, "inequalities": [_inequality(
                            _expr("square_entry", got, sigma=p, i=i, j=j),
                            _expr("c_plus_delta", want, sigma=p, i=i, j=j),
                        )]}
    return Verdict("lemma-ssq", failures == 0, cases, (), None, witness, {"n": n, "failures": failures})


def _require_character_like(w: WeightedGroup) -> None:
    if not chi_hat(w, Permutation.identity(w.n)):
        raise WeightError("chi(id) = 0: not a character, and the multiplicativity argument divides by it")
    if not is_class_function(w):
        raise WeightError("chi is not constant on conjugacy classes of G, so it is not a character")


def check_det_multiplicativity(
    w: WeightedGroup,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    proof_probe: bool = True,
) -> Verdict:
    """d(S_sigma) d(S_tau) == d(S_sigma S_tau) on F_3^c(n) pairs, against d == det.

    Pairs are scanned in enumerate_f3c order. For n = 2 the pair tests alone
    cannot tell the permanent from the determinant (both give 1 on I and on
    the swap), so ``proof_probe`` adds the 2x2 all-twos matrix A with the
    test d(A)^2 == d(A^2). Outcome "multiplicative" must coincide with
    d == det on ``trials`` random matrices.
    """
    _require_character_like(w)
    n = w.n
    f3c = list(enumerate_f3c(n))
    mats = {s: s_sigma_matrix(s) for s in f3c}
    vals = {s: evaluate(w, mats[s]) for s in f3c}
    failures = 0
    first = None
    cases = 0
    for sigma in f3c:
        for tau in f3c:
            cases += 1
            prod = mats[sigma] @ mats[tau]
            lhs = vals[sigma] * vals[tau]
            rhs = evaluate(w, prod)
            if lhs != rhs:
                failures += 1
                if first is None:
                    first = {
                        "sigma": perm_to_json(sigma),
                        "tau": perm_to_json(tau),
                        "inequalities": [_inequality(
                            _expr("product", lhs, factors=[
                                _expr("gmf", vals[sigma], weights=1, matrix=matrix_to_json(mats[sigma])),
                                _expr("gmf", vals[tau], weights=1, matrix=matrix_to_json(mats[tau])),
                            ]),
                            _expr("gmf", rhs, weights=1, matrix=matrix_to_json(prod)),
                        )],
                    }
    stats = {"pairs": len(f3c) ** 2, "pair_failures": failures}
    if n == 2 and proof_probe:
        cases += 1
        a = constant(2, 2)
        d_a = evaluate(w, a)
        d_a2 = evaluate(w, a @ a)
        stats["probe"] = {"d(A)^2": str(d_a * d_a), "d(A^2)": str(d_a2)}
        if d_a * d_a != d_a2:
            failures += 1
            if first is None:
                first = {"probe": "all-twos", "inequalities": [_inequality(
                    _expr("gmf", d_a2, weights=1, matrix=matrix_to_json(a @ a)),
                    _expr("product", d_a * d_a, factors=[_gmf_expr(1, w, a), _gmf_expr(1, w, a)]),
                )]}
    multiplicative = failures == 0
    if not multiplicative:
        return Verdict("det-multiplicativity", True, cases, (w.label,), "not-multiplicative", first, stats)
    for s in _trial_seeds(seed, trials):
        cases += 1
        a = random_matrix(n, s, bound, gaussian=True)
        d, det = evaluate(w, a), determinant(a)
        if d != det:
            witness = {"inequalities": [_inequality(
                _expr("gmf", d, weights=1, matrix=matrix_to_json(a)),
                _expr("determinant", det, matrix=matrix_to_json(a)),
            )]}
            return Verdict("det-multiplicativity", False, cases, (w.label,), "multiplicative", witness, stats)
    stats["det_samples"] = trials
    return Verdict("det-multiplicativity", True, cases, (w.label,), "multiplicative", None, stats)


def check_character_equality_corollary(w1: WeightedGroup, w2: WeightedGroup) -> Verdict:
    """For class functions on S_n, the criterion says "equal" exactly when the tables agree."""
    _check_same_degree(w1, w2)
    for w in (w1, w2):
        if not w.is_full_symmetric_group():
            raise WeightError(f"{w.label or 'weights'}: the group is not all of S_{w.n}")
        if not is_class_function(w):
            raise WeightError(f"{w.label or 'weights'}: chi is not a class function")
    crit = check_equality_criterion(w1, w2)
    differing = next((p for p in enumerate_sn(w1.n) if w1.chi[p] != w2.chi[p]), None)
    tables_equal = differing is None
    consistent = (crit.outcome == "equal") == tables_equal
    witness = crit.witness
    if differing is not None:
        p = perm_to_json(differing)
        ineq = _inequality(
            _expr("chi_hat", w1.chi[differing], weights=1, sigma=p),
            _expr("chi_hat", w2.chi[differing], weights=2, sigma=p),
        )
        witness = {**(witness or {}), "inequalities": (witness or {}).get("inequalities", []) + [ineq]}
    return Verdict(
        "character-equality", crit.holds and consistent, crit.cases + 1, crit.subjects, crit.outcome, witness,
        {"tables_equal": tables_equal},
    )


def check_gmf_oracle(w: WeightedGroup, trials: int = 50, seed: int = 0, bound: int = DEFAULT_BOUND) -> Verdict:
    """evaluate against brute_force_gmf on random Gaussian-integer matrices."""
    for t, s in enumerate(_trial_seeds(seed, trials)):
        a = random_matrix(w.n, s, bound, gaussian=True)
        fast, slow = evaluate(w, a), brute_force_gmf(w, a)
        if fast != slow:
            witness = {"inequalities": [_inequality(
                _expr("gmf", fast, weights=1, matrix=matrix_to_json(a)),
                _expr("brute_gmf", slow, weights=1, matrix=matrix_to_json(a)),
            )]}
            return Verdict("gmf-oracle", False, t + 1, (w.label,), None, witness)
    return Verdict("gmf-oracle", True, trials, (w.label,))


def check_permanent_oracle(n: int, trials: int = 50, seed: int = 0, bound: int = DEFAULT_BOUND) -> Verdict:
    """Ryser's permanent against the sum over S_n with trivial weights."""
    for t, s in enumerate(_trial_seeds(seed, trials)):
        a = random_matrix(n, s, bound, gaussian=(t % 2 == 1))
        fast, slow = permanent(a), permanent_naive(a)
        if fast != slow:
            witness = {"inequalities": [_inequality(
                _expr("permanent", fast, matrix=matrix_to_json(a)),
                _expr("permanent_naive", slow, matrix=matrix_to_json(a)),
            )]}
            return Verdict("permanent-oracle", False, t + 1, (), None, witness, {"n": n})
    return Verdict("permanent-oracle", True, trials, (), None, None, {"n": n})


# -- the full run ---------------------------------------------------------------------

def standard_suite(n: int, seed: int) -> dict:
    """Weight functions exercised by run_all, keyed by label."""
    suite = {
        "trivial": built_in_weights("trivial", n),
        "sign": built_in_weights("sign", n),
    }
    if n >= 4:
        suite["gaussian-cyclic"] = gaussian_cyclic_weights(n)
    table = random_class_table(n, seed, gaussian=False)
    suite["class-table"] = class_function_weights(n, table, label="class-table")
    table2 = random_class_table(n, seed + 1, gaussian=False)
    suite["class-table-2"] = class_function_weights(n, table2, label="class-table-2")
    suite["random"] = random_function_weights(n, seed + 2, label="random")
    phi = random_function_weights(n, seed + 3, label="conjugate-phi")
    suite["conjugate-phi"] = phi
    suite["conjugate-psi"] = inverse_weights(phi, label="conjugate-psi")
    return suite


def _plan(n: int, seed: int, trials: int) -> list:
    """(function name, weight labels, extra args) for every check in the run."""
    suite_labels = list(standard_suite_labels(n))
    plan = []
    for label in suite_labels:
        plan.append(("check_ssigma_sum", (label,), {}))
    plan.append(("check_perm_xset", (), {"n": n}))
    pairs = [("conjugate-phi", "conjugate-psi"), ("trivial", "trivial"), ("class-table", "random")]
    if n >= 2:
        pairs.append(("trivial", "sign"))
    for a, b in pairs:
        plan.append(("check_equality_criterion", (a, b), {}))
        plan.append(("cross_validate_equality", (a, b), {"trials": trials, "seed": seed}))
    for label in suite_labels:
        plan.append(("check_transpose_criterion", (label,), {"trials": trials, "seed": seed}))
    if n >= 3:
        plan.append(("check_lemma_ssq", (), {"n": n}))
    det_labels = ["trivial", "sign", "class-table"] + (["gaussian-cyclic"] if n >= 4 else [])
    for label in det_labels:
        plan.append(("check_det_multiplicativity", (label,), {"trials": trials, "seed": seed}))
    for a, b in [("trivial", "sign"), ("sign", "sign"), ("class-table", "class-table-2")]:
        plan.append(("check_character_equality_corollary", (a, b), {}))
    for label in suite_labels:
        plan.append(("check_gmf_oracle", (label,), {"trials": min(trials, 50), "seed": seed}))
    plan.append(("check_permanent_oracle", (), {"n": n, "trials": min(trials, 50), "seed": seed}))
    return plan


def standard_suite_labels(n: int) -> list:
    labels = ["trivial", "sign"]
    if n >= 4:
        labels.append("gaussian-cyclic")
    return labels + ["class-table", "class-table-2", "random", "conjugate-phi", "conjugate-psi"]


_CHECKERS = {
    "check_ssigma_sum": check_ssigma_sum,
    "check_perm_xset": check_perm_xset,
    "check_equality_criterion": check_equality_criterion,
    "cross_validate_equality": cross_validate_equality,
    "check_transpose_criterion": check_transpose_criterion,
    "check_lemma_ssq": check_lemma_ssq,
    "check_det_multiplicativity": check_det_multiplicativity,
    "check_character_equality_corollary": check_character_equality_corollary,
    "check_gmf_oracle": check_gmf_oracle,
    "check_permanent_oracle": check_permanent_oracle,
}


def _run_task(n: int, seed: int, task) -> Verdict:
    name, labels, kwargs = task
    suite = standard_suite(n, seed)
    return _CHECKERS[name](*(suite[lbl] for lbl in labels), **kwargs)


def run_all(n: int, seed: int = 0, trials: int = DEFAULT_TRIALS, threads: int = 1) -> list:
    """Run every checker over the standard suite; order is fixed by the plan, not by workers."""
    plan = _plan(n, seed, trials)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_task, [n] * len(plan), [seed] * len(plan), plan))
    suite = standard_suite(n, seed)
    return [_CHECKERS[name](*(suite[lbl] for lbl in labels), **kw) for name, labels, kw in plan]


def replay_verdict(verdict: Verdict, suite: dict) -> tuple:
    weights = tuple(suite[label] for label in verdict.subjects)
    return replay_witness(verdict.witness or {}, weights)


def report_json(n: int, seed: int, verdicts: list) -> str:
    body = {
        "n": n,
        "seed": seed,
        "holds": all(v.holds for v in verdicts),
        "verdicts": [v.to_json() for v in verdicts],
    }
    return json.dumps(body, indent=2, sort_keys=True)


def report_table(verdicts: list) -> str:
    lines = [f"{'claim':<22} {'subjects':<30} {'outcome':<20} {'cases':>7}  result"]
    for v in verdicts:
        subj = ",".join(v.subjects) or "-"
        lines.append(f"{v.claim:<22} {subj:<30} {v.outcome or '-':<20} {v.cases:>7}  {'holds' if v.holds else 'FAILS'}")
    failed = sum(not v.holds for v in verdicts)
    lines.append(f"{len(verdicts)} checks, {failed} failing")
    return "\n".join(lines)


def default_threads() -> int:
    return os.cpu_count() or 1
