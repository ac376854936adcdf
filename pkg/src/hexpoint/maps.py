"""Small total expression language for the continuous test maps.

Grammar (one expression per output coordinate, coordinates joined by ';'):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | atom
    atom    := NUMBER | VARIABLE | FUNC '(' expr (',' expr)* ')' | '(' expr ')'
    NUMBER  := digits ['.' digits]
    FUNC    := min | max | abs | sin | cos | sqrt | clamp01

Variables are `x` (interval maps), `x, y` (unit-square maps) or `l0..lm`
(simplex maps).  Evaluation is deterministic and total on the declared
domain: division by anything smaller than 1e-12 in magnitude raises, and
results are checked against the codomain with tolerance 1e-9.
"""

import math
from dataclasses import dataclass, field

from .errors import (
    ArityError,
    DivisionByZero,
    MapRangeError,
    MapSyntaxError,
    NumericDomainError,
    UnknownMapName,
)

RANGE_TOL = 1e-9
_DIV_EPS = 1e-12

_FUNCS = {
    "abs": (1, abs),
    "sin": (1, math.sin),
    "cos": (1, math.cos),
    "sqrt": (1, None),  # guarded below
    "clamp01": (1, lambda v: min(max(v, 0.0), 1.0)),
    "min": (2, min),
    "max": (2, max),
}


# -- tokenizer ---------------------------------------------------------------

def _tokens(src: str):
    """Yield (kind, text, offset); kinds: num ident op lparen rparen comma end."""
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            seen_dot = False
            while j < n and (src[j].isdigit() or (src[j] == "." and not seen_dot)):
                seen_dot = seen_dot or src[j] == "."
                j += 1
            yield ("num", src[i:j], i)
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            yield ("ident", src[i:j], i)
            i = j
        elif ch in "+-*/":
            yield ("op", ch, i)
            i += 1
        elif ch == "(":
            yield ("lparen", ch, i)
            i += 1
        elif ch == ")":
            yield ("rparen", ch, i)
            i += 1
        elif ch == ",":
            yield ("comma", ch, i)
            i += 1
        else:
            raise MapSyntaxError(
                f"unexpected character {ch!r}", i,
                frozenset({"number", "variable", "operator", "(", ")"}),
            )
    yield ("end", "", n)


class _Parser:
    def __init__(self, src: str, variables: tuple[str, ...]):
        self.src = src
        self.variables = variables
        self.toks = list(_tokens(src))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: set[str]):
        kind, text, off = self.peek()
        raise MapSyntaxError(
            f"unexpected {text!r}" if text else "unexpected end of input",
            off, frozenset(expected),
        )

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = ("bin", op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            node = ("bin", op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return ("neg", self.unary())
        return self.atom()

    def atom(self):
        kind, text, off = self.peek()
        if kind == "num":
            self.take()
            return ("num", float(text))
        if kind == "ident":
            self.take()
            if text in _FUNCS:
                if self.peek()[0] != "lparen":
                    self.fail({"("})
                self.take()
                args = [self.expr()]
                while self.peek()[0] == "comma":
                    self.take()
                    args.append(self.expr())
                if self.peek()[0] != "rparen":
                    self.fail({")", ","})
                self.take()
                want = _FUNCS[text][0]
                if len(args) != want:
                    raise ArityError(f"{text} takes {want} argument(s), got {len(args)}")
                return ("call", text, tuple(args))
            if text not in self.variables:
                raise ArityError(
                    f"unknown variable {text!r}; this map's variables are {self.variables}"
                )
            return ("var", text)
        if kind == "lparen":
            self.take()
            node = self.expr()
            if self.peek()[0] != "rparen":
                self.fail({")"})
            self.take()
            return node
        self.fail({"number", "variable", "(", "-"})


def _eval_node(node, env) -> float:
    op = node[0]
    if op == "num":
        return node[1]
    if op == "var":
        return env[node[1]]
    if op == "neg":
        return -_eval_node(node[1], env)
    if op == "bin":
        left = _eval_node(node[2], env)
        right = _eval_node(node[3], env)
        sym = node[1]
        if sym == "+":
            return left + right
        if sym == "-":
            return left - right
        if sym == "*":
            return left * right
        if abs(right) < _DIV_EPS:
            raise DivisionByZero(f"denominator {right!r} below {_DIV_EPS}")
        return left / right
    name = node[1]
    args = [_eval_node(a, env) for a in node[2]]
    if name == "sqrt":
        v = args[0]
        if v < 0:
            if v > -_DIV_EPS:
                v = 0.0
            else:
                raise NumericDomainError(f"sqrt of negative value {v}")
        return math.sqrt(v)
    return _FUNCS[name][1](*args)


def _print_node(node) -> str:
    op = node[0]
    if op == "num":
        return repr(node[1])
    if op == "var":
        return node[1]
    if op == "neg":
        return f"(-{_print_node(node[1])})"
    if op == "bin":
        return f"({_print_node(node[2])} {node[1]} {_print_node(node[3])})"
    return f"{node[1]}({', '.join(_print_node(a) for a in node[2])})"


# -- map objects -------------------------------------------------------------

@dataclass(frozen=True)
class MapSpec:
    """A parsed, evaluable map on [0,1], the unit square, or a simplex."""

    domain: str  # "interval" | "square" | "simplex"
    m: int  # simplex dimension; 0 for interval, ignored for square
    variables: tuple[str, ...]
    exprs: tuple
    source: str

    @property
    def arity(self) -> int:
        return len(self.exprs)

    def __call__(self, point):
        return self.eval(point)

    def eval(self, point):
        """Evaluate componentwise and enforce the codomain (tol 1e-9)."""
        if self.domain == "interval":
            env = {"x": float(point)}
            out = _eval_node(self.exprs[0], env)
            if out < -RANGE_TOL or out > 1 + RANGE_TOL:
                raise MapRangeError(f"f({point}) = {out} leaves [0,1]")
            return out
        if self.domain == "square":
            x, y = point
            env = {"x": float(x), "y": float(y)}
            out = tuple(_eval_node(e, env) for e in self.exprs)
            for c in out:
                if c < -RANGE_TOL or c > 1 + RANGE_TOL:
                    raise MapRangeError(f"f({point}) = {out} leaves the unit square")
            return out
        env = {f"l{i}": float(point[i]) for i in range(self.m + 1)}
        out = tuple(_eval_node(e, env) for e in self.exprs)
        if any(c < -RANGE_TOL for c in out) or abs(sum(out) - 1.0) > RANGE_TOL:
            raise MapRangeError(f"f({point}) = {out} leaves the simplex")
        return out

    def to_source(self) -> str:
        return "; ".join(_print_node(e) for e in self.exprs)

    def rename_variables(self, mapping: dict[str, str], domain: str, m: int) -> "MapSpec":
        def walk(node):
            if node[0] == "var":
                return ("var", mapping[node[1]])
            if node[0] == "neg":
                return ("neg", walk(node[1]))
            if node[0] == "bin":
                return ("bin", node[1], walk(node[2]), walk(node[3]))
            if node[0] == "call":
                return ("call", node[1], tuple(walk(a) for a in node[2]))
            return node

        exprs = tuple(walk(e) for e in self.exprs)
        variables = _domain_variables(domain, m)
        spec = MapSpec(domain, m, variables, exprs, "")
        return MapSpec(domain, m, variables, exprs, spec.to_source())


def _domain_variables(domain: str, m: int) -> tuple[str, ...]:
    if domain == "interval":
        return ("x",)
    if domain == "square":
        return ("x", "y")
    return tuple(f"l{i}" for i in range(m + 1))


def _parse_exprs(src: str, variables: tuple[str, ...], want: int):
    parts = src.split(";")
    if len(parts) != want:
        raise ArityError(f"expected {want} coordinate expression(s), got {len(parts)}")
    exprs = []
    offset = 0
    for part in parts:
        parser = _Parser(part, variables)
        try:
            node = parser.expr()
            if parser.peek()[0] != "end":
                parser.fail({"operator", "end of expression"})
        except MapSyntaxError as e:
            raise MapSyntaxError(str(e).rsplit(" at offset", 1)[0],
                                 e.offset + offset, e.expected) from None
        exprs.append(node)
        offset += len(part) + 1
    return tuple(exprs)


def parse(src: str, arity: int) -> MapSpec:
    """Parse a map on [0,1] (arity 1) or the unit square (arity 2)."""
    if arity == 1:
        domain, m = "interval", 0
    elif arity == 2:
        domain, m = "square", 0
    else:
        raise ArityError(f"arity must be 1 or 2, got {arity}")
    variables = _domain_variables(domain, m)
    return MapSpec(domain, m, variables, _parse_exprs(src, variables, arity), src)


def parse_simplex(src: str, m: int) -> MapSpec:
    """Parse a map on the m-simplex; variables l0..lm, m+1 coordinates."""
    if m < 1:
        raise ArityError(f"simplex dimension must be >= 1, got {m}")
    variables = _domain_variables("simplex", m)
    return MapSpec("simplex", m, variables, _parse_exprs(src, variables, m + 1), src)


def interval_as_simplex(spec: MapSpec) -> MapSpec:
    """Lift an interval map to the 1-simplex via x = l1 (so l0 = 1 - x)."""
    if spec.domain != "interval":
        raise ArityError("only interval maps can be lifted to the 1-simplex")
    body = spec.rename_variables({"x": "l1"}, "simplex", 1)
    expr = body.exprs[0]
    exprs = (("bin", "-", ("num", 1.0), expr), expr)
    out = MapSpec("simplex", 1, ("l0", "l1"), exprs, "")
    return MapSpec("simplex", 1, ("l0", "l1"), exprs, out.to_source())


# -- catalog -----------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    source: str
    domain: str
    m: int = 0
    fixed_points: tuple = ()
    every_point_fixed: bool = False
    lipschitz: float | None = None
    contraction_factor: float | None = None
    note: str = ""
    spec: MapSpec = field(init=False, compare=False)

    def __post_init__(self):
        if self.domain == "simplex":
            spec = parse_simplex(self.source, self.m)
        else:
            spec = parse(self.source, 1 if self.domain == "interval" else 2)
        object.__setattr__(self, "spec", spec)


_CATALOG = [
    CatalogEntry("identity", "x; y", "square", every_point_fixed=True, lipschitz=1.0,
                 note="every point is fixed"),
    CatalogEntry("identity_1d", "x", "interval", every_point_fixed=True, lipschitz=1.0,
                 note="every point is fixed"),
    CatalogEntry("const_center", "0.5; 0.5", "square", fixed_points=((0.5, 0.5),),
                 lipschitz=0.0, contraction_factor=0.0),
    CatalogEntry("const_corner", "1; 1", "square", fixed_points=((1.0, 1.0),),
                 lipschitz=0.0, contraction_factor=0.0),
    CatalogEntry("const_1d", "0.7", "interval", fixed_points=(0.7,),
                 lipschitz=0.0, contraction_factor=0.0),
    CatalogEntry("rotation180", "1 - x; 1 - y", "square", fixed_points=((0.5, 0.5),),
                 lipschitz=1.0, note="half turn about the center"),
    CatalogEntry("reflect_1d", "1 - x", "interval", fixed_points=(0.5,), lipschitz=1.0),
    CatalogEntry("contraction", "(x + 0.5)/2; (y + 0.25)/2", "square",
                 fixed_points=((0.5, 0.25),), lipschitz=0.5, contraction_factor=0.5),
    CatalogEntry("contraction_1d", "x/2 + 0.3", "interval", fixed_points=(0.6,),
                 lipschitz=0.5, contraction_factor=0.5),
    CatalogEntry("shear_clamped", "clamp01(x + y/2 - 0.25); y", "square",
                 lipschitz=1.5, note="fixed line y = 0.5 plus clamped bands"),
    CatalogEntry("logistic_1d", "3.5*x*(1 - x)", "interval",
                 fixed_points=(0.0, 5.0 / 7.0), lipschitz=3.5),
    CatalogEntry("identity_simplex", "l0; l1; l2", "simplex", m=2,
                 every_point_fixed=True, lipschitz=1.0),
    CatalogEntry("const_barycenter_simplex", "1/3; 1/3; 1/3", "simplex", m=2,
                 fixed_points=((1 / 3, 1 / 3, 1 / 3),), lipschitz=0.0,
                 contraction_factor=0.0),
    CatalogEntry("cycle_simplex", "l2; l0; l1", "simplex", m=2,
                 fixed_points=((1 / 3, 1 / 3, 1 / 3),), lipschitz=1.0,
                 note="cyclic coordinate rotation; barycenter is the unique fixed point"),
    CatalogEntry("contraction_simplex",
                 "(l0 + 1/3)/2; (l1 + 1/3)/2; (l2 + 1/3)/2", "simplex", m=2,
                 fixed_points=((1 / 3, 1 / 3, 1 / 3),), lipschitz=0.5,
                 contraction_factor=0.5),
]


def catalog() -> list[CatalogEntry]:
    return list(_CATALOG)


def get_entry(name: str) -> CatalogEntry:
    for entry in _CATALOG:
        if entry.name == name:
            return entry
    raise UnknownMapName(f"no catalog map named {name!r}")


def get_map(name: str) -> MapSpec:
    return get_entry(name).spec
