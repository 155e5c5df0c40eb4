import json

import pytest
from hypothesis import given

from conftest import permutations
from gmfsym.gmf_eval import ExactComplex, I, NotASubgroupError, WeightError, random_matrix
from gmfsym.jsonio import (
    InputError,
    exact_from_json,
    load_arg,
    load_weighted_group,
    matrix_from_json,
    matrix_to_json,
    perm_from_json,
    perm_to_json,
    weights_from_json,
    weights_to_json,
)
from gmfsym.perm_core import DegreeError, Permutation, parse_cycle_string

CYCLIC4 = {
    "n": 4,
    "group": "cyclic:(1 2 3 4)",
    "chi": [
        {"perm": "()", "value": "1"},
        {"perm": "(1 2 3 4)", "re": "0", "im": "1"},
        {"perm": "(1 3)(2 4)", "value": "-1"},
        {"perm": "(1 4 3 2)", "value": "-i"},
    ],
}


class TestPerms:
    def test_forms(self):
        want = Permutation([2, 1, 5, 3, 4])
        assert perm_from_json({"n": 5, "images": [2, 1, 5, 3, 4]}) == want
        assert perm_from_json({"n": 5, "cycles": [[1, 2], [3, 5, 4]]}) == want
        assert perm_from_json("(1 2)(3 5 4)", 5) == want
        assert perm_from_json('{"n": 5, "images": [2, 1, 5, 3, 4]}') == want
        assert perm_from_json([2, 1, 5, 3, 4]) == want

    @given(permutations())
    def test_round_trip(self, p):
        assert perm_from_json(json.loads(json.dumps(perm_to_json(p)))) == p

    def test_errors(self):
        with pytest.raises(InputError):
            perm_from_json({"n": 3, "images": [1, 1, 2]})
        with pytest.raises(InputError):
            perm_from_json({"n": 4, "images": [1, 2, 3]})
        with pytest.raises(InputError):
            perm_from_json({"cycles": [[1, 2]]})
        with pytest.raises(DegreeError):
            perm_from_json([2, 1], 3)


class TestMatrices:
    def test_round_trip(self):
        for seed in range(5):
            a = random_matrix(4, seed, gaussian=True).scale(ExactComplex.parse("1/3"))
            assert matrix_from_json(json.loads(json.dumps(matrix_to_json(a)))) == a

    def test_names(self):
        assert matrix_from_json("twos2").entry(1, 2) == 2
        assert matrix_from_json("identity3").entry(2, 2) == 1
        assert matrix_from_json("ssigma:(1 2 3)").entry(1, 1) == 0

    def test_entry_forms(self):
        assert exact_from_json(3) == 3
        assert exact_from_json({"re": "1/2", "im": "-1"}) == ExactComplex.parse("1/2-i")
        with pytest.raises(InputError):
            exact_from_json(True)
        with pytest.raises(InputError):
            exact_from_json(0.5)
        with pytest.raises(InputError, match="bad exact complex"):
            matrix_from_json({"entries": [["1", "zz"], ["0", "1"]]})

    def test_shape_errors(self):
        with pytest.raises(InputError):
            matrix_from_json({"entries": [["1", "2"]]})
        with pytest.raises(InputError):
            matrix_from_json({"n": 3, "entries": [["1"]]})
        with pytest.raises(InputError, match="malformed JSON"):
            matrix_from_json("{nope")


class TestWeights:
    def test_builtin_shapes(self):
        w = weights_from_json({"n": 3, "group": "S_n", "chi_builtin": "sign"})
        assert w.chi[parse_cycle_string("(1 2)", 3)] == -1
        assert weights_from_json("trivial", 2).order == 2
        with pytest.raises(InputError):
            weights_from_json("trivial")

    def test_cyclic(self):
        w = weights_from_json(CYCLIC4)
        assert w.order == 4
        assert w.chi[parse_cycle_string("(1 2 3 4)", 4)] == I

    def test_class_table(self):
        w = weights_from_json({"n": 3, "class_table": {"[1,1,1]": "2", "[2,1]": "0", "[3]": {"re": "-1", "im": "0"}}})
        assert w.chi[parse_cycle_string("(1 3 2)", 3)] == -1

    def test_validation(self):
        with pytest.raises(NotASubgroupError, match="not a subgroup"):
            weights_from_json({"n": 3, "group": [[2, 1, 3]], "chi_builtin": "trivial"})
        with pytest.raises(WeightError, match="missing"):
            weights_from_json({**CYCLIC4, "chi": CYCLIC4["chi"][:3]})
        with pytest.raises(WeightError, match="not in the group"):
            weights_from_json({**CYCLIC4, "chi": CYCLIC4["chi"] + [{"perm": "(1 2)", "value": "1"}]})
        with pytest.raises(InputError):
            weights_from_json({"n": 3, "class_table": {"[3]": "1"}})
        with pytest.raises(InputError):
            weights_from_json({"n": 3, "group": "Q_8", "chi_builtin": "trivial"})

    def test_round_trip(self):
        w = weights_from_json(CYCLIC4)
        again = weights_from_json(json.loads(json.dumps(weights_to_json(w))))
        assert dict(again.chi) == dict(w.chi)

    def test_file_argument(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text(json.dumps(CYCLIC4), encoding="utf-8")
        assert load_weighted_group(f"@{path}").order == 4
        assert load_weighted_group(str(path)).order == 4
        assert load_arg("(1 2)") == "(1 2)"
        with pytest.raises(InputError):
            load_arg(f"@{tmp_path / 'missing.json'}")
