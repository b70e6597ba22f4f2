"""Assertion language: JSON program parsing, evaluation, and printing."""

from .evaluate import Env, EvalError, evaluate, speed
from .parser import ProgramParseError, infer_type, parse_program
from .printer import print_program

__all__ = [
    "Env",
    "EvalError",
    "ProgramParseError",
    "evaluate",
    "infer_type",
    "parse_program",
    "print_program",
    "speed",
]
