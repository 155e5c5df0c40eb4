"""Command-line front end: ``gmfsym <command> [flags]``.

Exit status: 0 on success or a check that holds, 1 when a check fails
(the witness is printed), 2 on bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import verify
from .class_sets import count_type_ii_cycles, equivalence_class, type_of, x_set, x_set_partition
from .gmf_eval import (
    NotASubgroupError,
    WeightError,
    determinant,
    evaluate,
    permanent,
    s_sigma_matrix,
)
from .jsonio import (
    InputError,
    load_arg,
    load_weighted_group,
    matrix_from_json,
    matrix_to_json,
    perm_from_json,
    perm_to_json,
)
from .perm_core import (
    DegreeError,
    EnumerationCapError,
    cycle_type,
    override_cap,
    sign,
    two_involution_factorization,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: usage error: {message}\n")


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _perm(args):
    if args.perm is None:
        raise InputError("--perm is required")
    return perm_from_json(load_arg(args.perm), args.n)


def _matrix(args):
    if args.matrix is None:
        raise InputError("--matrix is required")
    a = matrix_from_json(load_arg(args.matrix))
    if args.n is not None and a.n != args.n:
        raise DegreeError(f"matrix is {a.n}x{a.n} but --n is {args.n}")
    return a


def _weights(args, flag: str = "weights", n: int | None = None):
    value = getattr(args, flag)
    if value is None:
        raise InputError(f"--{flag} is required")
    w = load_weighted_group(value, n if n is not None else args.n)
    w.label = w.label or flag
    return w


def _members_text(header: str, members) -> str:
    return "\n".join([header] + [f"  {p}" for p in sorted(members)])


# -- commands ---------------------------------------------------------------------

def cmd_classify(args) -> int:
    p = _perm(args)
    cls = equivalence_class(p)
    xs = x_set(p)
    info = {
        "perm": perm_to_json(p),
        "cycles": str(p),
        "cycle_type": list(cycle_type(p)),
        "sign": sign(p),
        "type": type_of(p).value,
        "type_ii_cycles": count_type_ii_cycles(p),
        "class_size": len(cls.members),
        "xset_size": len(xs.members),
    }
    text = "\n".join([
        f"{p}: {info['type']}",
        f"cycle type {info['cycle_type']}, sign {info['sign']}",
        f"|[sigma]| = {info['class_size']}, |X_sigma| = {info['xset_size']}",
    ])
    _emit(args, info, text)
    return EXIT_OK


def cmd_class(args) -> int:
    p = _perm(args)
    cls = equivalence_class(p)
    members = sorted(cls.members)
    payload = {
        "representative": perm_to_json(cls.representative),
        "members": [perm_to_json(m) for m in members],
        "size": len(members),
    }
    _emit(args, payload, _members_text(f"[{p}]: {len(members)} members", members))
    return EXIT_OK


def cmd_xset(args) -> int:
    p = _perm(args)
    members = sorted(x_set(p).members)
    payload = {"source": perm_to_json(p), "members": [perm_to_json(m) for m in members], "size": len(members)}
    _emit(args, payload, _members_text(f"X_{p}: {len(members)} members", members))
    return EXIT_OK


def cmd_partition(args) -> int:
    p = _perm(args)
    part = x_set_partition(p)

    def cls_json(c):
        members = [perm_to_json(m) for m in sorted(c.members)]
        return {"representative": perm_to_json(c.representative), "members": members, "size": len(members)}

    payload = {
        "source": perm_to_json(p),
        "own_class": cls_json(part.own_class),
        "type_ii_cycles": [str(c) for c in part.type_ii_cycles],
        "pieces": [
            {"index_set": list(piece.index_set), "classes": [cls_json(c) for c in piece.classes]}
            for piece in part.pieces
        ],
    }
    lines = [f"X_{p} = [{p}] plus {len(part.pieces)} pieces"]
    lines.append(f"  [{part.own_class.representative}]: " + " ".join(map(str, sorted(part.own_class.members))))
    for piece in part.pieces:
        for c in piece.classes:
            lines.append(f"  S={list(piece.index_set)} [{c.representative}]: " + " ".join(map(str, sorted(c.members))))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _matrix_text(a) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in a.rows)


def cmd_ssigma(args) -> int:
    a = s_sigma_matrix(_perm(args))
    _emit(args, matrix_to_json(a), _matrix_text(a))
    return EXIT_OK


def cmd_eval(args) -> int:
    a = _matrix(args)
    w = _weights(args, n=a.n)
    if w.n != a.n:
        raise DegreeError(f"weights act on {w.n} points but the matrix is {a.n}x{a.n}")
    value = evaluate(w, a)
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_perm(args) -> int:
    value = permanent(_matrix(args))
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_det(args) -> int:
    value = determinant(_matrix(args))
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_factor_involutions(args) -> int:
    p = _perm(args)
    alpha, beta = two_involution_factorization(p)
    payload = {"perm": perm_to_json(p), "alpha": perm_to_json(alpha), "beta": perm_to_json(beta)}
    _emit(args, payload, f"{p} = {alpha} * {beta}")
    return EXIT_OK


def _report(args, v: verify.Verdict) -> int:
    if args.json:
        print(json.dumps(v.to_json(), indent=2, sort_keys=True))
    else:
        subj = f" [{', '.join(v.subjects)}]" if v.subjects else ""
        outcome = f" ({v.outcome})" if v.outcome else ""
        print(f"{v.claim}{subj}{outcome}: {v.cases} cases, {'holds' if v.holds else 'FAILS'}")
        if v.witness is not None:
            print("witness: " + json.dumps(v.witness, sort_keys=True))
    return EXIT_OK if v.holds else EXIT_FAILED


def _two_weights(args):
    w1 = _weights(args, "weights")
    w2 = _weights(args, "weights2", n=w1.n)
    if w1.n != w2.n:
        raise DegreeError(f"weights act on {w1.n} and {w2.n} points")
    return w1, w2


def cmd_check_equality(args) -> int:
    w1, w2 = _two_weights(args)
    return _report(args, verify.cross_validate_equality(w1, w2, args.trials, args.seed))


def cmd_check_transpose(args) -> int:
    return _report(args, verify.check_transpose_criterion(_weights(args), args.trials, args.seed))


def cmd_check_ssigma(args) -> int:
    return _report(args, verify.check_ssigma_sum(_weights(args)))


def _need_n(args) -> int:
    if args.n is None:
        raise InputError("--n is required")
    return args.n


def cmd_check_perm_xset(args) -> int:
    return _report(args, verify.check_perm_xset(_need_n(args)))


def cmd_check_lemma_ssq(args) -> int:
    n = _need_n(args)
    if n < 3:
        raise InputError("check-lemma-ssq needs --n >= 3")
    return _report(args, verify.check_lemma_ssq(n))


def cmd_check_det_mult(args) -> int:
    w = _weights(args)
    return _report(args, verify.check_det_multiplicativity(
        w, args.trials, args.seed, proof_probe=not args.no_proof_probe))


def cmd_verify_all(args) -> int:
    n = _need_n(args)
    threads = args.threads if args.threads is not None else verify.default_threads()
    verdicts = verify.run_all(n, args.seed, args.trials, threads=threads)
    if args.json:
        print(verify.report_json(n, args.seed, verdicts))
    else:
        print(verify.report_table(verdicts))
        for v in verdicts:
            if not v.holds:
                print(f"witness for {v.claim} [{', '.join(v.subjects)}]: " + json.dumps(v.witness, sort_keys=True))
    return EXIT_OK if all(v.holds for v in verdicts) else EXIT_FAILED


COMMANDS = {
    "classify": (cmd_classify, "type, cycle type and set sizes of --perm"),
    "class": (cmd_class, "list the equivalence class [sigma] of --perm"),
    "xset": (cmd_xset, "list X_sigma for --perm"),
    "partition": (cmd_partition, "split X_sigma into equivalence classes"),
    "ssigma": (cmd_ssigma, "print the 0/1 matrix S_sigma of --perm"),
    "eval": (cmd_eval, "evaluate the weighted sum for --weights on --matrix"),
    "perm": (cmd_perm, "permanent of --matrix"),
    "det": (cmd_det, "determinant of --matrix"),
    "factor-involutions": (cmd_factor_involutions, "write --perm as a product of two involutions"),
    "check-equality": (cmd_check_equality, "class-sum equality test for --weights vs --weights2"),
    "check-transpose": (cmd_check_transpose, "chi(p) = chi(p^-1) test with sampled d(A) = d(A^T)"),
    "check-ssigma": (cmd_check_ssigma, "d(S_sigma) = sum over X_sigma, all sigma"),
    "check-perm-xset": (cmd_check_perm_xset, "perm(S_sigma) = |X_sigma| for all sigma in S_n"),
    "check-lemma-ssq": (cmd_check_lemma_ssq, "entrywise square of S_sigma for 3-cycles"),
    "check-det-mult": (cmd_check_det_mult, "multiplicativity on small permutations vs d = det"),
    "verify-all": (cmd_verify_all, "run every check on the standard weight suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--n", type=int, help="degree")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=verify.DEFAULT_TRIALS)
    common.add_argument("--cap", type=int, help="largest n allowed for full S_n enumeration")
    common.add_argument("--threads", type=int, help="worker processes for verify-all (default: all cores)")
    common.add_argument("--perm", help="permutation: cycle notation, image list or JSON (or @file)")
    common.add_argument("--matrix", help="matrix JSON, @file, or identity<n>/ones<n>/twos<n>/ssigma:<perm>")
    common.add_argument("--weights", help="weights JSON, @file, or trivial/sign")
    common.add_argument("--weights2", help="second weights for check-equality")
    common.add_argument("--no-proof-probe", action="store_true",
                        help="check-det-mult: skip the 2x2 all-twos test at n = 2")

    parser = _Parser(prog="gmfsym", description="Exact generalized matrix function checks over S_n.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cap is not None and args.cap < 1:
            raise InputError("--cap must be positive")
        if args.trials < 0:
            raise InputError("--trials must be non-negative")
        if args.threads is not None and args.threads < 1:
            raise InputError("--threads must be at least 1")
        with override_cap(args.cap) if args.cap is not None else contextlib.nullcontext():
            return COMMANDS[args.command][0](args)
    except DegreeError as exc:
        msg = str(exc).removeprefix("degree mismatch: ")
        print(f"gmfsym: degree mismatch: {msg}", file=sys.stderr)
    except EnumerationCapError as exc:
        print(f"gmfsym: enumeration cap: {exc}", file=sys.stderr)
    except NotASubgroupError as exc:
        print(f"gmfsym: invalid group: {exc}", file=sys.stderr)
    except WeightError as exc:
        print(f"gmfsym: invalid weights: {exc}", file=sys.stderr)
    except InputError as exc:
        print(f"gmfsym: input error: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"gmfsym: invalid value: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
