"""Evaluator for parsed assertion programs.

Pure: the environment is never mutated; quantifier tuples get fresh child
environments. Quantifiers with k variables range over all k-tuples (with
repetition) of the domain array; positional indexes of quantifier variables
are available through index(v).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import singledispatch
from typing import Optional

from ..color import Color, lab_coords
from ..cvd import simulate_cvd
from ..metrics import contrast, delta_e_2000, euclidean_dist
from ..naming import name_color
from ..palette import Palette
from ..spaces import convert_coords
from . import nodes as n


class EvalError(Exception):
    def __init__(self, message: str, path: str):
        self.message = message
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Env:
    bindings: dict = field(default_factory=dict)
    indexes: dict = field(default_factory=dict)

    @classmethod
    def for_palette(cls, palette: Palette) -> "Env":
        return cls({"colors": list(palette.colors), "background": palette.background}, {})

    def bound(self, names_to_values: dict, names_to_indexes: dict) -> "Env":
        return Env({**self.bindings, **names_to_values}, {**self.indexes, **names_to_indexes})


def evaluate(program: n.Node, env: Env) -> bool:
    result = _eval(program, env)
    if not isinstance(result, bool):
        raise EvalError(f"program produced {type(result).__name__}, expected bool", program.path)
    return result


def speed(xs: list[float], path: str = "$") -> list[float]:
    """Sequential differences; needs at least two elements."""
    if len(xs) < 2:
        raise EvalError("speed needs at least 2 elements", path)
    return [xs[i + 1] - xs[i] for i in range(len(xs) - 1)]


@singledispatch
def _eval(node: n.Node, env: Env):
    raise EvalError(f"no evaluator for {type(node).__name__}", node.path)


@_eval.register
def _(node: n.BoolLit, env: Env):
    return node.value


@_eval.register
def _(node: n.NumLit, env: Env):
    return node.value


@_eval.register
def _(node: n.StrLit, env: Env):
    return node.value


@_eval.register
def _(node: n.ColorLit, env: Env):
    return node.value


@_eval.register
def _(node: n.Var, env: Env):
    try:
        return env.bindings[node.name]
    except KeyError:
        raise EvalError(f"unbound variable {node.name!r}", node.path) from None


@_eval.register
def _(node: n.IndexOf, env: Env):
    try:
        return float(env.indexes[node.name])
    except KeyError:
        raise EvalError(f"no positional index for {node.name!r}", node.path) from None


@_eval.register
def _(node: n.Not, env: Env):
    return not _eval(node.expr, env)


@_eval.register
def _(node: n.NaryBool, env: Env):
    # Strict: every operand is evaluated, so a broken subexpression always
    # surfaces as an error instead of vanishing behind a short circuit.
    results = [_eval(item, env) for item in node.items]
    return all(results) if node.op == "and" else any(results)


@_eval.register
def _(node: n.Quantifier, env: Env):
    domain = _eval(node.source, env)
    k = len(node.varbs)
    indexes = range(len(domain))

    def tuples(prefix):
        if len(prefix) == k:
            yield prefix
            return
        for i in indexes:
            yield from tuples(prefix + (i,))

    # Strict: the predicate runs for every tuple surviving the where clause.
    results = []
    for combo in tuples(()):
        child = env.bound(
            {v: domain[i] for v, i in zip(node.varbs, combo)},
            {v: i for v, i in zip(node.varbs, combo)},
        )
        if node.where is not None and not _eval(node.where, child):
            continue
        results.append(_eval(node.predicate, child))
    return all(results) if node.kind == "all" else any(results)


def _values_equal(a, b) -> bool:
    if isinstance(a, Color) and isinstance(b, Color):
        return lab_coords(a) == lab_coords(b)
    return a == b


@_eval.register
def _(node: n.Compare, env: Env):
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    if node.op == "==":
        return _values_equal(left, right)
    if node.op == "!=":
        return not _values_equal(left, right)
    if node.op == "<":
        return left < right
    return left > right


@_eval.register
def _(node: n.Similar, env: Env):
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    if isinstance(left, Color):
        return delta_e_2000(left, right) <= node.threshold
    if isinstance(left, str):
        return left == right
    return abs(left - right) <= node.threshold


@_eval.register
def _(node: n.Arith, env: Env):
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "%":
        if right == 0:
            raise EvalError("modulo by zero", node.path)
        return math.fmod(left, right)
    return abs(left - right)  # absDiff


@_eval.register
def _(node: n.Agg, env: Env):
    xs = _eval(node.source, env)
    op = node.op
    if op == "count":
        return float(len(xs))
    if op == "sum":
        return float(sum(xs))
    if not xs:
        raise EvalError(f"{op} of an empty array", node.path)
    if op == "min":
        return min(xs)
    if op == "max":
        return max(xs)
    if op == "mean":
        return sum(xs) / len(xs)
    if op == "std":
        # Population standard deviation.
        m = sum(xs) / len(xs)
        return math.sqrt(sum((x - m) ** 2 for x in xs) / len(xs))
    if op == "extent":
        return max(xs) - min(xs)
    if op == "first":
        return xs[0]
    return xs[-1]  # last


@_eval.register
def _(node: n.ArrayLit, env: Env):
    return [_eval(item, env) for item in node.items]


@_eval.register
def _(node: n.MapOp, env: Env):
    xs = _eval(node.source, env)
    return [_eval(node.func, env.bound({node.varb: x}, {})) for x in xs]


@_eval.register
def _(node: n.FilterOp, env: Env):
    xs = _eval(node.source, env)
    return [x for x in xs if _eval(node.func, env.bound({node.varb: x}, {}))]


@_eval.register
def _(node: n.SortOp, env: Env):
    xs = _eval(node.source, env)
    return sorted(xs, key=lambda x: _eval(node.key, env.bound({node.varb: x}, {})))


@_eval.register
def _(node: n.SpeedOp, env: Env):
    return speed(_eval(node.source, env), node.path)


@_eval.register
def _(node: n.PairMetric, env: Env):
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    if node.op == "dist":
        return euclidean_dist(left, right, node.param)
    if node.op == "deltaE":
        return delta_e_2000(left, right)
    return contrast(left, right, node.param)


@_eval.register
def _(node: n.Channel, env: Env):
    color: Color = _eval(node.color, env)
    coords = convert_coords(color.coords, color.space, node.space)
    from ..spaces import axis_names

    return coords[axis_names(node.space).index(node.axis)]


@_eval.register
def _(node: n.CvdSimOp, env: Env):
    return simulate_cvd(_eval(node.color, env), node.kind)


@_eval.register
def _(node: n.NameOp, env: Env):
    return name_color(_eval(node.color, env))


@_eval.register
def _(node: n.IsTagOp, env: Env):
    return _eval(node.color, env).has_tag(node.tag)
