"""AST node types for the palette assertion language."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..color import Color

# Types are "bool" | "num" | "string" | "color" | ("array", elem).
Type = Union[str, tuple]


@dataclass(frozen=True)
class Node:
    path: str


@dataclass(frozen=True)
class BoolLit(Node):
    value: bool


@dataclass(frozen=True)
class NumLit(Node):
    value: float


@dataclass(frozen=True)
class StrLit(Node):
    value: str


@dataclass(frozen=True)
class ColorLit(Node):
    value: Color


@dataclass(frozen=True)
class Var(Node):
    name: str
    type: Type


@dataclass(frozen=True)
class IndexOf(Node):
    name: str


@dataclass(frozen=True)
class Not(Node):
    expr: Node


@dataclass(frozen=True)
class NaryBool(Node):
    op: str  # "and" | "or"
    items: tuple[Node, ...]


@dataclass(frozen=True)
class Quantifier(Node):
    kind: str  # "all" | "exist"
    varbs: tuple[str, ...]
    source: Node
    where: Optional[Node]
    predicate: Node


@dataclass(frozen=True)
class Compare(Node):
    op: str  # "==" | "!=" | "<" | ">"
    left: Node
    right: Node


@dataclass(frozen=True)
class Similar(Node):
    left: Node
    right: Node
    threshold: float


@dataclass(frozen=True)
class Arith(Node):
    op: str  # "+" | "-" | "*" | "%" | "absDiff"
    left: Node
    right: Node


@dataclass(frozen=True)
class Agg(Node):
    op: str  # count|sum|min|max|std|mean|first|last|extent
    source: Node


@dataclass(frozen=True)
class ArrayLit(Node):
    items: tuple[Node, ...]


@dataclass(frozen=True)
class MapOp(Node):
    source: Node
    varb: str
    func: Node


@dataclass(frozen=True)
class FilterOp(Node):
    source: Node
    varb: str
    func: Node


@dataclass(frozen=True)
class SortOp(Node):
    source: Node
    varb: str
    key: Node


@dataclass(frozen=True)
class SpeedOp(Node):
    source: Node


@dataclass(frozen=True)
class PairMetric(Node):
    op: str  # "dist" | "deltaE" | "contrast"
    param: str  # space / algorithm
    left: Node
    right: Node


@dataclass(frozen=True)
class Channel(Node):
    space: str
    axis: str
    color: Node


@dataclass(frozen=True)
class CvdSimOp(Node):
    kind: str
    color: Node


@dataclass(frozen=True)
class NameOp(Node):
    color: Node


@dataclass(frozen=True)
class IsTagOp(Node):
    tag: str
    color: Node
