"""Seeded generator of random well-typed programs and palettes.

Programs stay within quantifier depth 2 and arrays of at most 5 elements,
matching the regime the brute-force oracle is trusted in. Generated programs
may still hit runtime errors (empty-array aggregates via filter); agreement
checks treat matching errors as agreement.
"""

import random

from chromalint.palette import Palette
from chromalint.color import Color

AXES = [("lab", "l"), ("lab", "a"), ("lab", "b"), ("lch", "c"), ("lch", "h"), ("srgb", "g")]
TAGS = ["brand", "axis", "text", "blue"]


def random_palette(rng: random.Random) -> Palette:
    colors = []
    for _ in range(rng.randint(1, 5)):
        tags = frozenset(rng.sample(TAGS, rng.randint(0, 2)))
        colors.append(Color("srgb", (rng.random(), rng.random(), rng.random()), tags))
    background = Color("srgb", (rng.random(), rng.random(), rng.random()))
    ptype = rng.choice(["categorical", "sequential", "diverging"])
    return Palette("gen", tuple(colors), background, ptype)


class ProgramGen:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.counter = 0

    def fresh_var(self) -> str:
        self.counter += 1
        return f"v{self.counter}"

    def program(self):
        return self.bool_expr(depth=2, color_vars=[])

    def bool_expr(self, depth: int, color_vars: list):
        r = self.rng
        choices = ["lit", "not", "andor", "cmp", "similar_num"]
        if color_vars:
            choices += ["istag", "similar_color", "name_eq"]
        if depth > 0:
            choices += ["quant", "quant", "quant"]
        kind = r.choice(choices)
        if kind == "lit":
            return r.choice([True, False])
        if kind == "not":
            return {"not": self.bool_expr(depth, color_vars)}
        if kind == "andor":
            k = r.choice(["and", "or"])
            return {k: [self.bool_expr(depth, color_vars) for _ in range(r.randint(2, 3))]}
        if kind == "cmp":
            op = r.choice(["==", "!=", "<", ">"])
            return {op: {"left": self.num_expr(depth, color_vars),
                         "right": self.num_expr(depth, color_vars)}}
        if kind == "similar_num":
            return {"similar": {"left": self.num_expr(depth, color_vars),
                                "right": self.num_expr(depth, color_vars),
                                "threshold": round(r.uniform(0, 30), 2)}}
        if kind == "istag":
            return {"isTag": {"color": r.choice(color_vars), "value": r.choice(TAGS)}}
        if kind == "similar_color":
            return {"similar": {"left": r.choice(color_vars),
                                "right": self.color_expr(color_vars),
                                "threshold": round(r.uniform(0, 40), 2)}}
        if kind == "name_eq":
            return {"==": {"left": {"name": r.choice(color_vars)}, "right": "unmistakablename"}}
        return self.quantifier(depth, color_vars)

    def quantifier(self, depth: int, color_vars: list):
        r = self.rng
        kind = r.choice(["all", "exist"])
        varbs = [self.fresh_var() for _ in range(r.randint(1, 2))]
        body = {
            "in": "colors",
            "varbs": varbs,
            "predicate": self.bool_expr(depth - 1, color_vars + varbs),
        }
        if r.random() < 0.5:
            if len(varbs) == 2 and r.random() < 0.6:
                body["where"] = {"<": {"left": f"index({varbs[0]})", "right": f"index({varbs[1]})"}}
            else:
                body["where"] = self.bool_expr(depth - 1, color_vars + varbs)
        return {kind: body}

    def color_expr(self, color_vars: list):
        r = self.rng
        if color_vars and r.random() < 0.6:
            base = r.choice(color_vars)
        else:
            base = "#%06x" % r.randrange(1 << 24)
        if r.random() < 0.3:
            return {"cvdSim": {"color": base, "type": r.choice(
                ["deuteranopia", "protanopia", "tritanopia", "grayscale"])}}
        return base

    def num_expr(self, depth: int, color_vars: list):
        r = self.rng
        choices = ["lit", "lit", "arith", "agg"]
        if color_vars:
            choices += ["channel", "metric", "metric"]
        kind = r.choice(choices)
        if kind == "lit":
            return round(r.uniform(-20, 120), 2)
        if kind == "arith":
            op = r.choice(["+", "-", "*", "%", "absDiff"])
            return {op: {"left": self.num_expr(0, color_vars),
                         "right": self.num_expr(0, color_vars)}}
        if kind == "channel":
            space, axis = r.choice(AXES)
            return {"channel": {"color": r.choice(color_vars), "space": space, "axis": axis}}
        if kind == "metric":
            op = r.choice(["deltaE", "contrast", "dist"])
            left = r.choice(color_vars)
            right = self.color_expr(color_vars)
            if op == "deltaE":
                return {"deltaE": {"left": left, "right": right, "algorithm": "2000"}}
            if op == "contrast":
                return {"contrast": {"left": left, "right": right,
                                     "algorithm": r.choice(["wcag21", "lstar", "apca"])}}
            return {"dist": {"left": left, "right": right,
                             "space": r.choice(["lab", "lch", "srgb", "hsl"])}}
        return {r.choice(["count", "sum", "min", "max", "std", "mean", "first", "last", "extent"]):
                self.num_array(depth, color_vars)}

    def num_array(self, depth: int, color_vars: list):
        r = self.rng
        kind = r.choice(["lit", "map", "sort", "speed", "filter"])
        if kind == "lit":
            return [round(r.uniform(-50, 150), 2) for _ in range(r.randint(1, 5))]
        if kind == "map":
            v = self.fresh_var()
            space, axis = r.choice(AXES)
            return {"map": {"in": "colors", "varb": v,
                            "func": {"channel": {"color": v, "space": space, "axis": axis}}}}
        if kind == "sort":
            v = self.fresh_var()
            return {"sort": {"in": self.num_array(depth, color_vars), "varb": v, "func": v}}
        if kind == "speed":
            return {"speed": self.num_array(depth, color_vars)}
        v = self.fresh_var()
        return {"filter": {"in": self.num_array(depth, color_vars), "varb": v,
                           "func": {">": {"left": v, "right": round(r.uniform(-50, 150), 2)}}}}
