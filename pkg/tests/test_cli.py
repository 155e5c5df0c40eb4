import json
import subprocess
import sys

import pytest

from gmfsym.cli import main
from gmfsym.gmf_eval import ExactComplex
from gmfsym.jsonio import matrix_from_json, perm_from_json
from gmfsym.perm_core import enumeration_cap

CYCLIC4 = json.dumps({
    "n": 4,
    "group": "cyclic:(1 2 3 4)",
    "chi": [
        {"perm": "()", "value": "1"},
        {"perm": "(1 2 3 4)", "value": "i"},
        {"perm": "(1 3)(2 4)", "value": "-1"},
        {"perm": "(1 4 3 2)", "value": "-i"},
    ],
})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCommands:
    def test_xset(self, capsys):
        code, out, _ = run(capsys, "xset", "--perm", '{"n":4,"cycles":[[1,2,3,4]]}')
        assert code == 0
        assert out.splitlines()[0].endswith("4 members")
        assert len(out.splitlines()) == 5

    def test_check_perm_xset(self, capsys):
        code, out, _ = run(capsys, "check-perm-xset", "--n", "5")
        assert code == 0 and "120 cases, holds" in out

    def test_eval_sign_identity(self, capsys):
        code, out, _ = run(capsys, "eval", "--weights", "sign", "--matrix", "identity3")
        assert code == 0 and out.strip() == "1"

    def test_perm_and_det(self, capsys):
        assert run(capsys, "perm", "--matrix", "eights2")[1].strip() == "128"
        assert run(capsys, "det", "--matrix", "ssigma:(1 2 3)")[1].strip() == "2"

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "--perm", "(1 2)(3 4 5 6)", "--json")
        body = json.loads(out)
        assert code == 0 and body["type"] == "type-II" and body["xset_size"] == 4 and body["class_size"] == 2

    def test_class_and_partition(self, capsys):
        body = json.loads(run(capsys, "class", "--perm", "(1 2 3)(4 5 6)", "--json")[1])
        assert body["size"] == 4
        body = json.loads(run(capsys, "partition", "--perm", "(1 2 3 4)(5 6 7 8)", "--json")[1])
        total = body["own_class"]["size"] + sum(c["size"] for p in body["pieces"] for c in p["classes"])
        assert total == 16

    def test_factor_involutions(self, capsys):
        body = json.loads(run(capsys, "factor-involutions", "--perm", "(1 2 3 4 5)", "--json")[1])
        from gmfsym.perm_core import compose
        assert compose(perm_from_json(body["alpha"]), perm_from_json(body["beta"])) == perm_from_json(body["perm"])

    def test_check_transpose_witness(self, capsys):
        code, out, _ = run(capsys, "check-transpose", "--weights", CYCLIC4, "--json")
        body = json.loads(out)
        assert code == 0 and body["outcome"] == "asymmetric"
        vals = [body["witness"]["inequalities"][1][s]["value"] for s in ("lhs", "rhs")]
        assert [ExactComplex.parse(v) for v in vals] == [ExactComplex(0, 1), ExactComplex(0, -1)]

    def test_check_equality(self, capsys):
        code, out, _ = run(capsys, "check-equality", "--weights", "trivial", "--weights2", "sign", "--n", "3")
        assert code == 0 and "not-equal" in out

    def test_check_det_mult_exit_codes(self, capsys):
        assert run(capsys, "check-det-mult", "--weights", "sign", "--n", "3", "--trials", "5")[0] == 0
        assert run(capsys, "check-det-mult", "--weights", "trivial", "--n", "2", "--trials", "5")[0] == 0
        code, out, _ = run(capsys, "check-det-mult", "--weights", "trivial", "--n", "2", "--no-proof-probe")
        assert code == 1 and "FAILS" in out and "witness" in out

    def test_other_checks(self, capsys):
        assert run(capsys, "check-ssigma", "--weights", CYCLIC4)[0] == 0
        assert run(capsys, "check-lemma-ssq", "--n", "4")[0] == 0

    def test_verify_all(self, capsys):
        code, out, _ = run(capsys, "verify-all", "--n", "3", "--trials", "5", "--threads", "1", "--json")
        body = json.loads(out)
        assert code == 0 and body["holds"] is True
        assert code == (0 if all(v["holds"] for v in body["verdicts"]) else 1)


class TestJsonRoundTrip:
    def test_matrix_output_reparses(self, capsys):
        out = run(capsys, "ssigma", "--perm", "(1 3 2)(4 5)", "--json")[1]
        assert matrix_from_json(out) == matrix_from_json("ssigma:(1 3 2)(4 5)")

    def test_value_output_reparses(self, capsys):
        m = json.dumps({"n": 2, "entries": [["1/2", "i"], ["2", "1/3-i"]]})
        out = run(capsys, "det", "--matrix", m, "--json")[1]
        assert ExactComplex.parse(json.loads(out)["value"]) == ExactComplex.parse("1/6-5/2 i")


class TestInputErrors:
    @pytest.mark.parametrize("argv, needle", [
        (["eval", "--weights", "sign", "--matrix", "identity3", "--n", "4"], "degree mismatch"),
        (["eval", "--weights", '{"n":3', "--matrix", "ones3"], "malformed JSON"),
        (["eval", "--weights", '{"n":3,"group":[[2,1,3]],"chi_builtin":"trivial"}', "--matrix", "ones3"], "not a subgroup"),
        (["eval", "--weights", '{"n":2,"group":"S_n","chi":[{"perm":"()","value":"1"}]}', "--matrix", "ones2"],
         "chi missing"),
        (["eval", "--weights", "sign", "--matrix", '{"entries":[["1","1/x"],["0","1"]]}'], "bad exact complex"),
        (["check-ssigma", "--weights", "sign", "--n", "10"], "enumeration cap"),
        (["check-perm-xset"], "--n is required"),
        (["xset", "--perm", "(1 2"], "unbalanced"),
    ])
    def test_exit_2_with_diagnostic(self, capsys, argv, needle):
        code, _, err = run(capsys, *argv)
        assert code == 2 and needle in err

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_cap_flag_is_scoped(self, capsys):
        assert run(capsys, "check-perm-xset", "--n", "4", "--cap", "3")[0] == 2
        assert enumeration_cap() == 9


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gmfsym", "eval", "--weights", "sign", "--matrix", "identity3"],
                          capture_output=True, text=True, encoding="utf-8")
    assert proc.returncode == 0 and proc.stdout.strip() == "1"


def test_deterministic_output(capsys):
    argv = ["verify-all", "--n", "3", "--seed", "5", "--trials", "5", "--threads", "1", "--json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
