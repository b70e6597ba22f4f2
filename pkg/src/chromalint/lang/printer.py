"""Deterministic human-readable rendering of assertion programs.

Display-only; nothing parses this format back. Quantifiers render as
"ALL a, b IN colors WHERE ... SUCH THAT ...", metric calls in function form
with upper-cased algorithm names, and channel extraction as "space.axis(x)"
(shortened to "space.axis" when it is the body of a map/sort over that
variable).
"""

from __future__ import annotations

from functools import singledispatch

from ..color import format_color
from . import nodes as n


def print_program(program: n.Node) -> str:
    return _p(program)


@singledispatch
def _p(node: n.Node) -> str:
    raise TypeError(f"no printer for {type(node).__name__}")


@_p.register
def _(node: n.BoolLit):
    return "true" if node.value else "false"


@_p.register
def _(node: n.NumLit):
    v = node.value
    return str(int(v)) if v == int(v) else f"{v:g}"


@_p.register
def _(node: n.StrLit):
    return f"'{node.value}'"


@_p.register
def _(node: n.ColorLit):
    return format_color(node.value)


@_p.register
def _(node: n.Var):
    return node.name


@_p.register
def _(node: n.IndexOf):
    return f"index({node.name})"


@_p.register
def _(node: n.Not):
    return f"NOT {_p(node.expr)}"


@_p.register
def _(node: n.NaryBool):
    joiner = " AND " if node.op == "and" else " OR "
    return "(" + joiner.join(_p(item) for item in node.items) + ")"


@_p.register
def _(node: n.Quantifier):
    head = "ALL" if node.kind == "all" else "EXIST"
    varbs = ", ".join(node.varbs)
    where = f" WHERE {_p(node.where)}" if node.where is not None else ""
    return f"{head} {varbs} IN {_p(node.source)}{where} SUCH THAT {_p(node.predicate)}"


@_p.register
def _(node: n.Compare):
    return f"{_p(node.left)} {node.op} {_p(node.right)}"


@_p.register
def _(node: n.Similar):
    t = node.threshold
    ts = str(int(t)) if t == int(t) else f"{t:g}"
    return f"similar({_p(node.left)}, {_p(node.right)}, {ts})"


@_p.register
def _(node: n.Arith):
    if node.op == "absDiff":
        return f"absDiff({_p(node.left)}, {_p(node.right)})"
    return f"({_p(node.left)} {node.op} {_p(node.right)})"


@_p.register
def _(node: n.Agg):
    return f"{node.op}({_p(node.source)})"


@_p.register
def _(node: n.ArrayLit):
    return "[" + ", ".join(_p(item) for item in node.items) + "]"


def _body(func: n.Node, varb: str) -> str:
    # "map(colors, lab.l)" shorthand when the body is a bare channel read of
    # the loop variable.
    if isinstance(func, n.Channel) and isinstance(func.color, n.Var) and func.color.name == varb:
        return f"{func.space}.{func.axis}"
    if isinstance(func, n.Var) and func.name == varb:
        return varb
    return _p(func)


@_p.register
def _(node: n.MapOp):
    return f"map({_p(node.source)}, {_body(node.func, node.varb)})"


@_p.register
def _(node: n.FilterOp):
    return f"filter({_p(node.source)}, {_body(node.func, node.varb)})"


@_p.register
def _(node: n.SortOp):
    return f"sort({_p(node.source)}, {_body(node.key, node.varb)})"


@_p.register
def _(node: n.SpeedOp):
    return f"speed({_p(node.source)})"


@_p.register
def _(node: n.PairMetric):
    param = node.param.upper() if node.op == "contrast" else node.param
    return f"{node.op}({_p(node.left)}, {_p(node.right)}, {param})"


@_p.register
def _(node: n.Channel):
    return f"{node.space}.{node.axis}({_p(node.color)})"


@_p.register
def _(node: n.CvdSimOp):
    return f"cvdSim({_p(node.color)}, {node.kind})"


@_p.register
def _(node: n.NameOp):
    return f"name({_p(node.color)})"


@_p.register
def _(node: n.IsTagOp):
    return f"isTag({_p(node.color)}, '{node.tag}')"
