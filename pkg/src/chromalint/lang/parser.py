"""Parse and type-check assertion programs from their JSON document form.

Parsing and checking run in one bottom-up pass; every error carries the JSON
path of the offending node. Bare strings resolve, in order, to `index(v)`
lookups, bound variables, color literals, then string literals.
"""

from __future__ import annotations

import re
from typing import Optional

from ..color import ColorParseError, parse_color
from ..cvd import CVD_TYPES
from ..metrics import CONTRAST_ALGORITHMS
from ..spaces import SPACES, axis_names
from . import nodes as n

DELTA_E_ALGORITHMS = ("2000",)

COMPARE_KEYS = ("==", "!=", "<", ">")
ARITH_KEYS = ("+", "-", "*", "%", "absDiff")
AGG_KEYS = ("count", "sum", "min", "max", "std", "mean", "first", "last", "extent")

_INDEX_RE = re.compile(r"\Aindex\(([A-Za-z_][A-Za-z0-9_]*)\)\Z")
_COLORISH_RE = re.compile(r"\A(#|srgb\(|lab\(|lch\(|hsl\(|hsv\()")


class ProgramParseError(ValueError):
    def __init__(self, message: str, path: str):
        self.message = message
        self.path = path
        super().__init__(f"{path}: {message}")


class _Scope:
    """Static bindings: name -> (type, is_quantifier_bound)."""

    def __init__(self, parent: Optional["_Scope"] = None):
        self.parent = parent
        self.entries: dict[str, tuple[n.Type, bool]] = {}

    def lookup(self, name: str):
        s = self
        while s is not None:
            if name in s.entries:
                return s.entries[name]
            s = s.parent
        return None

    def child(self) -> "_Scope":
        return _Scope(self)

    def bind(self, name: str, typ: n.Type, quant: bool, path: str):
        if name in self.entries:
            raise ProgramParseError(f"duplicate variable {name!r}", path)
        if self.lookup(name) is not None:
            raise ProgramParseError(f"variable {name!r} shadows an enclosing binding", path)
        self.entries[name] = (typ, quant)


def _root_scope() -> _Scope:
    s = _Scope()
    s.entries["colors"] = (("array", "color"), False)
    s.entries["background"] = ("color", False)
    return s


def type_name(t: n.Type) -> str:
    if isinstance(t, tuple):
        return f"array<{type_name(t[1])}>"
    return t


def parse_program(document) -> n.Node:
    """Parse a JSON program document into a type-checked, bool-typed AST."""
    node, typ = _parse(document, "$", _root_scope())
    if typ != "bool":
        raise ProgramParseError(f"program must evaluate to a boolean, got {type_name(typ)}", "$")
    return node


def infer_type(document) -> n.Type:
    """Type of an arbitrary (not necessarily boolean) expression document."""
    return _parse(document, "$", _root_scope())[1]


def _parse(doc, path: str, scope: _Scope) -> tuple[n.Node, n.Type]:
    if isinstance(doc, bool):
        return n.BoolLit(path, doc), "bool"
    if isinstance(doc, (int, float)):
        return n.NumLit(path, float(doc)), "num"
    if isinstance(doc, str):
        return _parse_string(doc, path, scope)
    if isinstance(doc, list):
        return _parse_array_literal(doc, path, scope)
    if isinstance(doc, dict):
        if len(doc) != 1:
            raise ProgramParseError("expected exactly one node key", path)
        key, body = next(iter(doc.items()))
        return _parse_keyed(key, body, path, scope)
    raise ProgramParseError(f"unsupported node of type {type(doc).__name__}", path)


def _parse_string(text: str, path: str, scope: _Scope):
    m = _INDEX_RE.match(text)
    if m:
        name = m.group(1)
        entry = scope.lookup(name)
        if entry is None or not entry[1]:
            raise ProgramParseError(f"index() of non-quantifier variable {name!r}", path)
        return n.IndexOf(path, name), "num"
    entry = scope.lookup(text)
    if entry is not None:
        return n.Var(path, text, entry[0]), entry[0]
    if _COLORISH_RE.match(text):
        try:
            return n.ColorLit(path, parse_color(text)), "color"
        except ColorParseError as e:
            raise ProgramParseError(str(e), path) from None
    return n.StrLit(path, text), "string"


def _parse_array_literal(items: list, path: str, scope: _Scope):
    parsed = []
    elem_type: Optional[n.Type] = None
    for i, item in enumerate(items):
        node, typ = _parse(item, f"{path}[{i}]", scope)
        if elem_type is None:
            elem_type = typ
        elif typ != elem_type:
            raise ProgramParseError(
                f"mixed array element types: {type_name(elem_type)} and {type_name(typ)}",
                f"{path}[{i}]",
            )
        parsed.append(node)
    if elem_type is None:
        elem_type = "num"
    return n.ArrayLit(path, tuple(parsed)), ("array", elem_type)


def _field(body, name: str, path: str, optional: bool = False):
    if not isinstance(body, dict):
        raise ProgramParseError("expected an object body", path)
    if name not in body:
        if optional:
            return None
        raise ProgramParseError(f"missing field {name!r}", path)
    return body[name]


def _check_fields(body, allowed: set[str], path: str):
    if not isinstance(body, dict):
        raise ProgramParseError("expected an object body", path)
    extra = set(body) - allowed
    if extra:
        raise ProgramParseError(f"unknown field(s): {', '.join(sorted(extra))}", path)


def _expect(typ: n.Type, want: n.Type, path: str, what: str):
    if typ != want:
        raise ProgramParseError(f"{what} must be {type_name(want)}, got {type_name(typ)}", path)


def _expect_array(typ: n.Type, path: str, what: str) -> n.Type:
    if not isinstance(typ, tuple):
        hint = " (unbound variable?)" if typ == "string" else ""
        raise ProgramParseError(f"{what} must be an array, got {type_name(typ)}{hint}", path)
    return typ[1]


def _parse_keyed(key: str, body, path: str, scope: _Scope):
    p = f"{path}.{key}"

    if key == "not":
        node, typ = _parse(body, p, scope)
        _expect(typ, "bool", p, "operand of not")
        return n.Not(path, node), "bool"

    if key in ("and", "or"):
        if not isinstance(body, list):
            raise ProgramParseError(f"{key} expects an array of expressions", p)
        items = []
        for i, item in enumerate(body):
            node, typ = _parse(item, f"{p}[{i}]", scope)
            _expect(typ, "bool", f"{p}[{i}]", f"operand of {key}")
            items.append(node)
        return n.NaryBool(path, key, tuple(items)), "bool"

    if key in ("all", "exist"):
        _check_fields(body, {"in", "varbs", "where", "predicate"}, p)
        source, src_type = _parse(_field(body, "in", p), f"{p}.in", scope)
        elem = _expect_array(src_type, f"{p}.in", "quantifier domain")
        varbs = _field(body, "varbs", p)
        if not isinstance(varbs, list) or not varbs or not all(isinstance(v, str) for v in varbs):
            raise ProgramParseError("varbs must be a non-empty array of names", f"{p}.varbs")
        inner = scope.child()
        for v in varbs:
            inner.bind(v, elem, True, f"{p}.varbs")
        where_doc = _field(body, "where", p, optional=True)
        where = None
        if where_doc is not None:
            where, wt = _parse(where_doc, f"{p}.where", inner)
            _expect(wt, "bool", f"{p}.where", "where clause")
        pred, pt = _parse(_field(body, "predicate", p), f"{p}.predicate", inner)
        _expect(pt, "bool", f"{p}.predicate", "predicate")
        return n.Quantifier(path, key, tuple(varbs), source, where, pred), "bool"

    if key in COMPARE_KEYS:
        _check_fields(body, {"left", "right"}, p)
        left, lt = _parse(_field(body, "left", p), f"{p}.left", scope)
        right, rt = _parse(_field(body, "right", p), f"{p}.right", scope)
        if lt != rt:
            raise ProgramParseError(
                f"cannot compare {type_name(lt)} with {type_name(rt)}", p
            )
        if key in ("<", ">"):
            _expect(lt, "num", p, f"operand of {key}")
        elif isinstance(lt, tuple):
            raise ProgramParseError(f"cannot compare arrays with {key}", p)
        return n.Compare(path, key, left, right), "bool"

    if key == "similar":
        _check_fields(body, {"left", "right", "threshold"}, p)
        left, lt = _parse(_field(body, "left", p), f"{p}.left", scope)
        right, rt = _parse(_field(body, "right", p), f"{p}.right", scope)
        if lt != rt:
            raise ProgramParseError(
                f"cannot compare {type_name(lt)} with {type_name(rt)}", p
            )
        if lt not in ("num", "color", "string"):
            raise ProgramParseError(f"similar is not defined for {type_name(lt)}", p)
        threshold = _field(body, "threshold", p, optional=(lt == "string"))
        if threshold is None:
            threshold = 0.0
        if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
            raise ProgramParseError("threshold must be a number", f"{p}.threshold")
        return n.Similar(path, left, right, float(threshold)), "bool"

    if key in ARITH_KEYS:
        _check_fields(body, {"left", "right"}, p)
        left, lt = _parse(_field(body, "left", p), f"{p}.left", scope)
        right, rt = _parse(_field(body, "right", p), f"{p}.right", scope)
        _expect(lt, "num", f"{p}.left", f"operand of {key}")
        _expect(rt, "num", f"{p}.right", f"operand of {key}")
        return n.Arith(path, key, left, right), "num"

    if key in AGG_KEYS:
        source, src_type = _parse(body, p, scope)
        elem = _expect_array(src_type, p, f"operand of {key}")
        if key in ("sum", "min", "max", "std", "mean", "extent"):
            _expect(elem, "num", p, f"elements aggregated by {key}")
            return n.Agg(path, key, source), "num"
        if key == "count":
            return n.Agg(path, key, source), "num"
        return n.Agg(path, key, source), elem  # first | last

    if key in ("map", "filter", "sort"):
        _check_fields(body, {"in", "varb", "func"}, p)
        source, src_type = _parse(_field(body, "in", p), f"{p}.in", scope)
        elem = _expect_array(src_type, f"{p}.in", f"input of {key}")
        varb = _field(body, "varb", p)
        if not isinstance(varb, str):
            raise ProgramParseError("varb must be a name", f"{p}.varb")
        inner = scope.child()
        inner.bind(varb, elem, False, f"{p}.varb")
        func, ft = _parse(_field(body, "func", p), f"{p}.func", inner)
        if key == "map":
            return n.MapOp(path, source, varb, func), ("array", ft)
        if key == "filter":
            _expect(ft, "bool", f"{p}.func", "filter function")
            return n.FilterOp(path, source, varb, func), ("array", elem)
        if ft not in ("num", "string"):
            raise ProgramParseError(f"sort key must be num or string, got {type_name(ft)}", f"{p}.func")
        return n.SortOp(path, source, varb, func), ("array", elem)

    if key == "speed":
        source, src_type = _parse(body, p, scope)
        elem = _expect_array(src_type, p, "input of speed")
        _expect(elem, "num", p, "elements of speed input")
        return n.SpeedOp(path, source), ("array", "num")

    if key in ("dist", "deltaE", "contrast"):
        param_field = {"dist": "space", "deltaE": "algorithm", "contrast": "algorithm"}[key]
        _check_fields(body, {"left", "right", param_field}, p)
        left, lt = _parse(_field(body, "left", p), f"{p}.left", scope)
        right, rt = _parse(_field(body, "right", p), f"{p}.right", scope)
        _expect(lt, "color", f"{p}.left", f"operand of {key}")
        _expect(rt, "color", f"{p}.right", f"operand of {key}")
        param = _field(body, param_field, p)
        valid = {"dist": SPACES, "deltaE": DELTA_E_ALGORITHMS, "contrast": CONTRAST_ALGORITHMS}[key]
        if param not in valid:
            raise ProgramParseError(
                f"unknown {param_field} {param!r} (expected one of {', '.join(valid)})",
                f"{p}.{param_field}",
            )
        return n.PairMetric(path, key, param, left, right), "num"

    if key == "channel":
        _check_fields(body, {"color", "space", "axis"}, p)
        color, ct = _parse(_field(body, "color", p), f"{p}.color", scope)
        _expect(ct, "color", f"{p}.color", "operand of channel")
        space = _field(body, "space", p)
        if space not in SPACES:
            raise ProgramParseError(f"unknown space {space!r}", f"{p}.space")
        axis = _field(body, "axis", p)
        if axis not in axis_names(space):
            raise ProgramParseError(
                f"space {space!r} has no axis {axis!r} (axes: {', '.join(axis_names(space))})",
                f"{p}.axis",
            )
        return n.Channel(path, space, axis, color), "num"

    if key == "cvdSim":
        _check_fields(body, {"color", "type"}, p)
        color, ct = _parse(_field(body, "color", p), f"{p}.color", scope)
        _expect(ct, "color", f"{p}.color", "operand of cvdSim")
        kind = _field(body, "type", p)
        if kind not in CVD_TYPES:
            raise ProgramParseError(f"unknown CVD type {kind!r}", f"{p}.type")
        return n.CvdSimOp(path, kind, color), "color"

    if key == "name":
        color, ct = _parse(body, p, scope)
        _expect(ct, "color", p, "operand of name")
        return n.NameOp(path, color), "string"

    if key == "isTag":
        _check_fields(body, {"color", "value"}, p)
        color, ct = _parse(_field(body, "color", p), f"{p}.color", scope)
        _expect(ct, "color", f"{p}.color", "operand of isTag")
        tag = _field(body, "value", p)
        if not isinstance(tag, str):
            raise ProgramParseError("isTag value must be a string", f"{p}.value")
        return n.IsTagOp(path, tag.lower(), color), "bool"

    raise ProgramParseError(f"unknown node key {key!r}", path)
