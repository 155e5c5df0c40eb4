"""JSON forms of the library values (permutations, matrices, weights).

Rationals travel as strings ("a/b", "a/b+c/d i") so nothing is rounded.
"""

from __future__ import annotations

import json
import os
import re

from .gmf_eval import (
    ExactComplex,
    SquareMatrix,
    WeightedGroup,
    WeightError,
    alternating_group,
    built_in_weights,
    class_function_weights,
    constant,
    cyclic_group,
    identity,
    permutation_matrix,
    s_sigma_matrix,
    symmetric_group,
)
from .perm_core import DegreeError, Permutation, from_cycles, parse_cycle_string, sign


class InputError(ValueError):
    """Malformed user input (bad JSON, bad literal, wrong shape)."""


# -- permutations -------------------------------------------------------------

def perm_to_json(p: Permutation) -> dict:
    return {"n": p.n, "images": list(p.images)}


def perm_from_json(obj, n: int | None = None) -> Permutation:
    """Accept {"n", "images"}, {"n", "cycles"}, a bare image list or cycle notation."""
    if isinstance(obj, str):
        text = obj.strip()
        if text.startswith("{") or text.startswith("["):
            return perm_from_json(_loads(text), n)
        try:
            return parse_cycle_string(text, n)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        if isinstance(obj, list):
            p = Permutation(obj)
        elif isinstance(obj, dict):
            deg = obj.get("n", n)
            if "images" in obj:
                p = Permutation(obj["images"])
                if deg is not None and p.n != deg:
                    raise InputError(f"images have length {p.n} but n is {deg}")
            elif "cycles" in obj:
                if deg is None:
                    raise InputError("cycle form needs \"n\"")
                p = from_cycles(int(deg), [tuple(c) for c in obj["cycles"]])
            else:
                raise InputError("permutation object needs \"images\" or \"cycles\"")
        else:
            raise InputError(f"cannot read a permutation from {obj!r}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad permutation: {exc}") from None
    if n is not None and p.n != n:
        raise DegreeError(f"permutation has degree {p.n}, expected {n}")
    return p


# -- matrices -----------------------------------------------------------------

def exact_to_str(x: ExactComplex) -> str:
    return str(x)


def exact_from_json(v) -> ExactComplex:
    if isinstance(v, bool):
        raise InputError(f"bad rational literal {v!r}")
    if isinstance(v, int):
        return ExactComplex(v)
    if isinstance(v, str):
        try:
            return ExactComplex.parse(v)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if isinstance(v, dict) and "re" in v:
        return exact_from_json(v["re"]) + exact_from_json(v.get("im", "0")) * ExactComplex(0, 1)
    raise InputError(f"bad rational literal {v!r} (use a string like \"3/2\" or \"1+2 i\")")


def matrix_to_json(a: SquareMatrix) -> dict:
    return {"n": a.n, "entries": [[str(x) for x in row] for row in a.rows]}


_NAMED_MATRIX = re.compile(r"^(identity|ones|twos|eights)(\d+)$")


def matrix_from_json(obj) -> SquareMatrix:
    """Read matrix JSON, or a name: identity<n>, ones<n>, ssigma:<perm>, pmatrix:<perm>."""
    if isinstance(obj, str):
        text = obj.strip()
        m = _NAMED_MATRIX.match(text)
        if m:
            n = int(m.group(2))
            if n < 1:
                raise InputError("matrix size must be positive")
            kind = m.group(1)
            if kind == "identity":
                return identity(n)
            return constant(n, {"ones": 1, "twos": 2, "eights": 8}[kind])
        if text.startswith("ssigma:"):
            return s_sigma_matrix(perm_from_json(text[len("ssigma:"):]))
        if text.startswith("pmatrix:"):
            return permutation_matrix(perm_from_json(text[len("pmatrix:"):]))
        return matrix_from_json(_loads(text))
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError("matrix JSON needs an \"entries\" array")
    rows = [[exact_from_json(v) for v in row] for row in obj["entries"]]
    try:
        a = SquareMatrix(rows)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if "n" in obj and obj["n"] != a.n:
        raise InputError(f"matrix declares n={obj['n']} but has {a.n} rows")
    return a


# -- weighted groups ------------------------------------------------------------

def _partition_key(text: str) -> tuple:
    try:
        parts = json.loads(text) if text.strip().startswith("[") else [int(x) for x in text.replace(",", " ").split()]
        return tuple(int(x) for x in parts)
    except (ValueError, TypeError):
        raise InputError(f"bad cycle-type key {text!r}") from None


def weights_from_json(obj, n: int | None = None) -> WeightedGroup:
    """Build a validated WeightedGroup.

    Shapes: {"n", "group", "chi"}, {"n", "group", "chi_builtin"},
    {"n", "class_table"}; "group" is "S_n", "A_n", "cyclic:<perm>" or a list
    of permutations. A bare "trivial"/"sign" string needs ``n``.
    """
    if isinstance(obj, str):
        text = obj.strip()
        if text in ("trivial", "sign"):
            if n is None:
                raise InputError(f"weights {text!r} need a degree (--n or a matrix)")
            return built_in_weights(text, n)
        if text.startswith("{"):
            return weights_from_json(_loads(text), n)
        raise InputError(f"unknown weights {text!r}")
    if not isinstance(obj, dict):
        raise InputError("weights must be a JSON object")
    deg = obj.get("n", n)
    if deg is None:
        raise InputError("weights need \"n\"")
    deg = int(deg)
    if n is not None and deg != n:
        raise DegreeError(f"weights have degree {deg}, expected {n}")
    label = obj.get("label", "")

    if "class_table" in obj:
        table = {_partition_key(k): exact_from_json(v) for k, v in obj["class_table"].items()}
        try:
            return class_function_weights(deg, table, label=label or "class-table")
        except WeightError as exc:
            raise InputError(str(exc)) from None

    group = obj.get("group", "S_n")
    if isinstance(group, str):
        g = group.strip()
        if g == "S_n":
            elements = sorted(symmetric_group(deg))
        elif g == "A_n":
            elements = sorted(alternating_group(deg))
        elif g.startswith("cyclic:"):
            elements = cyclic_group(perm_from_json(g[len("cyclic:"):], deg))
        else:
            raise InputError(f"unknown group shorthand {group!r}")
    else:
        elements = [perm_from_json(p, deg) for p in group]

    if "chi_builtin" in obj:
        name = obj["chi_builtin"]
        if name == "trivial":
            chi = {p: 1 for p in elements}
        elif name == "sign":
            chi = {p: sign(p) for p in elements}
        else:
            raise InputError(f"unknown chi_builtin {name!r}")
    elif "chi" in obj:
        chi = {}
        for item in obj["chi"]:
            p = perm_from_json(item["perm"], deg)
            if "value" in item:
                chi[p] = exact_from_json(item["value"])
            else:
                chi[p] = exact_from_json({"re": item.get("re", "0"), "im": item.get("im", "0")})
        elem_set = set(elements)
        extra = [p for p in chi if p not in elem_set]
        if extra:
            raise WeightError(f"chi given on {extra[0]}, which is not in the group")
        missing = [p for p in elements if p not in chi]
        if missing:
            raise WeightError(f"chi missing a value for {missing[0]}")
    else:
        raise InputError("weights need \"chi\", \"chi_builtin\" or \"class_table\"")
    # shorthand groups are generated here, so they are subgroups by construction
    return WeightedGroup(deg, chi, trusted=isinstance(group, str), label=label)


def weights_to_json(w: WeightedGroup) -> dict:
    chi = [
        {"perm": perm_to_json(p), "re": str(v.re), "im": str(v.im)}
        for p, v in sorted(w.chi.items())
    ]
    return {"n": w.n, "group": [perm_to_json(p) for p in sorted(w.elements)], "chi": chi}


# -- helpers --------------------------------------------------------------------

def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def load_arg(value: str):
    """A flag value: inline text, or @path / an existing file path to read."""
    path = value[1:] if value.startswith("@") else value
    if (value.startswith("@") or (not value.lstrip().startswith(("{", "[", "(")) and os.path.isfile(path))):
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
    return value


def load_weighted_group(value: str, n: int | None = None) -> WeightedGroup:
    return weights_from_json(load_arg(value), n)
