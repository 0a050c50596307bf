"""Named graph families and a one-line mini-language for them.

Grammar (``+`` and ``v`` share one precedence level, left-associative)::

    expr  := term (('+' | 'v') term)*
    term  := '(' expr ')' | atom
    atom  := 'K' INT | 'Kmn:' INT ',' INT | 'S' INT | 'P' INT | 'C' INT | 'E' INT

``+`` is disjoint union and ``v`` is join. ``E<n>`` is the edgeless graph on n
vertices (the complement of K_n).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from .graph import Graph, GraphFormatError, disjoint_union, join, vertex_pairs


@dataclass(frozen=True)
class Complete:
    n: int

    def __str__(self) -> str:
        return f"K{self.n}"


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int

    def __str__(self) -> str:
        return f"Kmn:{self.m},{self.n}"


@dataclass(frozen=True)
class Star:
    """Star with one centre and ``k`` leaves; realizes ``CompleteBipartite(1, k)``."""

    k: int

    def __str__(self) -> str:
        return f"S{self.k}"


@dataclass(frozen=True)
class Path:
    n: int

    def __str__(self) -> str:
        return f"P{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __str__(self) -> str:
        return f"C{self.n}"


@dataclass(frozen=True)
class Empty:
    n: int

    def __str__(self) -> str:
        return f"E{self.n}"


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple

    def __str__(self) -> str:
        return "(" + "+".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Join:
    parts: tuple

    def __str__(self) -> str:
        return "(" + "v".join(map(str, self.parts)) + ")"


GraphFamily = Complete | CompleteBipartite | Star | Path | Cycle | Empty | DisjointUnion | Join


def _require_positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"family parameter {name} must be a positive integer, got {value!r}")


def generate(family: GraphFamily) -> Graph:
    """Build the canonical labeling of a family instance."""
    match family:
        case Complete(n):
            _require_positive(n=n)
            return Graph(n, vertex_pairs(n))
        case CompleteBipartite(m, n):
            _require_positive(m=m, n=n)
            return Graph(m + n, ((u, m + v) for u in range(m) for v in range(n)))
        case Star(k):
            _require_positive(k=k)
            return generate(CompleteBipartite(1, k))
        case Path(n):
            _require_positive(n=n)
            return Graph(n, ((i, i + 1) for i in range(n - 1)))
        case Cycle(n):
            if not isinstance(n, int) or n < 3:
                raise ValueError(f"cycle needs at least 3 vertices, got {n!r}")
            return Graph(n, [*((i, i + 1) for i in range(n - 1)), (n - 1, 0)])
        case Empty(n):
            _require_positive(n=n)
            return Graph(n)
        case DisjointUnion(parts):
            if not parts:
                raise ValueError("disjoint union of no families")
            return disjoint_union(generate(p) for p in parts)
        case Join(parts):
            if not parts:
                raise ValueError("join of no families")
            return reduce(join, (generate(p) for p in parts))
    raise TypeError(f"not a graph family: {family!r}")


# -- mini-language -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(Kmn:(\d+),(\d+))|([KSPCE])(\d+)|([()+v]))")
_ATOMS = {"K": Complete, "S": Star, "P": Path, "C": Cycle, "E": Empty}


def _tokenize(text: str) -> list[tuple]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise GraphFormatError(f"unexpected input at offset {pos} in family {text!r}")
        if m.group(1):
            tokens.append(("atom", CompleteBipartite(int(m.group(2)), int(m.group(3)))))
        elif m.group(4):
            tokens.append(("atom", _ATOMS[m.group(4)](int(m.group(5)))))
        else:
            tokens.append(("op", m.group(6)))
        pos = m.end()
    return tokens


def parse_family(text: str) -> GraphFamily:
    """Parse e.g. ``K4+K6``, ``K2vK3``, ``Kmn:2,3`` or ``(E2vE3)+K1``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def term():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise GraphFormatError(f"unexpected end of family {text!r}")
        pos += 1
        if tok[0] == "atom":
            return tok[1]
        if tok[1] == "(":
            inner = expr()
            if peek() != ("op", ")"):
                raise GraphFormatError(f"unbalanced parenthesis in family {text!r}")
            pos += 1
            return inner
        raise GraphFormatError(f"unexpected {tok[1]!r} in family {text!r}")

    def expr():
        nonlocal pos
        left = term()
        while peek() in (("op", "+"), ("op", "v")):
            op = tokens[pos][1]
            pos += 1
            right = term()
            left = DisjointUnion((left, right)) if op == "+" else Join((left, right))
        return left

    result = expr()
    if pos != len(tokens):
        raise GraphFormatError(f"trailing input in family {text!r}")
    try:
        generate(result)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    return result
