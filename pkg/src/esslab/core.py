"""Shared exact-arithmetic types: rationals, graphs, symmetric games, strategies.

Every number that reaches a payoff, a probability or an interval endpoint is a
:class:`fractions.Fraction`. Floats only show up in rendered reports.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ConsistencyError(RuntimeError):
    """Two independent computations of the same exact quantity disagree."""


class ParseError(ValueError):
    """Malformed input file or literal."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_rational(text: RationalLike) -> Fraction:
    """Parse an integer or ``p/q`` literal.

    Decimal literals are rejected on purpose: ``"0.1"`` would have to be
    rounded or reinterpreted, and the whole package refuses to do either.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ParseError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational literal: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical ``p/q`` (or bare integer) string for an exact rational."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_fraction_vector(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


# --------------------------------------------------------------------------
# Graphs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.n}")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """0/1 adjacency matrix, row/column ``i`` is vertex ``i + 1``."""
        return tuple(
            tuple(1 if self.has_edge(u, v) else 0 for v in self.vertices)
            for u in self.vertices
        )

    def neighbours(self, u: int) -> set[int]:
        return {v for v in self.vertices if v != u and self.has_edge(u, v)}

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {(min(u, v), max(u, v))})

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))


def parse_graph(text: str | bytes) -> Graph:
    """Read the ``p n m`` / ``e u v`` edge-list format (``c`` lines are comments)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    declared_m = 0
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected 'p <n> <m>', got {line!r}", lineno)
            try:
                n, declared_m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer header field in {line!r}", lineno) from None
            if n < 1 or declared_m < 0:
                raise ParseError(f"invalid header {line!r}", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before 'p' header", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in edges:
                raise ParseError(f"duplicate edge {key}", lineno)
            edges.add(key)
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if declared_m != len(edges):
        raise ParseError(f"header declares {declared_m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def render_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Games and strategies
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricGame:
    """Row player's payoff matrix; the column player uses its transpose."""

    payoff: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        rows = tuple(as_fraction_vector(row) for row in self.payoff)
        size = len(rows)
        if size == 0:
            raise ValueError("game needs at least one pure strategy")
        for i, row in enumerate(rows):
            if len(row) != size:
                raise ValueError(f"payoff row {i} has length {len(row)}, expected {size}")
        object.__setattr__(self, "payoff", rows)
        labels = tuple(self.labels) if self.labels else tuple(str(i + 1) for i in range(size))
        if len(labels) != size:
            raise ValueError(f"{len(labels)} labels for {size} strategies")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], labels: Sequence[str] = ()) -> "SymmetricGame":
        return cls(tuple(tuple(parse_rational(x) for x in r) for r in rows), tuple(labels))

    @property
    def size(self) -> int:
        return len(self.payoff)

    def pure(self, i: int | str) -> "MixedStrategy":
        if isinstance(i, str):
            i = self.labels.index(i)
        return MixedStrategy.pure(self.size, i)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.payoff)

    def payoffs_against(self, t: "MixedStrategy") -> tuple[Fraction, ...]:
        """``U1(i, t)`` for every pure strategy ``i``, i.e. ``A t``."""
        _check_size(self, t)
        nz = t.support
        return tuple(sum((row[j] * t.probs[j] for j in nz), Fraction(0)) for row in self.payoff)

    def to_json(self) -> dict:
        return {
            "n": self.size,
            "labels": list(self.labels),
            "payoffs": [[format_rational(x) for x in row] for row in self.payoff],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymmetricGame":
        try:
            n = int(data["n"])
            rows = data["payoffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"game JSON needs 'n' and 'payoffs': {exc}") from None
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParseError(f"payoff matrix is not {n}x{n}")
        labels = data.get("labels") or ()
        return cls(tuple(tuple(parse_rational(x) for x in r) for r in rows), tuple(labels))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "SymmetricGame":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class MixedStrategy:
    """Exact probability vector; the support is always recomputed from ``probs``."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = as_fraction_vector(self.probs)
        if not probs:
            raise ValueError("empty strategy")
        if any(p < 0 for p in probs):
            raise ValueError(f"negative probability in {[format_rational(p) for p in probs]}")
        total = sum(probs, Fraction(0))
        if total != 1:
            raise ValueError(f"probabilities sum to {format_rational(total)}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def pure(cls, size: int, i: int) -> "MixedStrategy":
        if not 0 <= i < size:
            raise IndexError(f"pure strategy {i} outside 0..{size - 1}")
        return cls(tuple(Fraction(int(j == i)) for j in range(size)))

    @classmethod
    def uniform(cls, size: int, over: Iterable[int] | None = None) -> "MixedStrategy":
        idx = list(range(size)) if over is None else sorted(set(over))
        w = Fraction(1, len(idx))
        return cls(tuple(w if j in idx else Fraction(0) for j in range(size)))

    @property
    def size(self) -> int:
        return len(self.probs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)

    @property
    def is_pure(self) -> bool:
        return len(self.support) == 1

    def __getitem__(self, i: int) -> Fraction:
        return self.probs[i]

    def blend(self, other: "MixedStrategy", eps: Fraction) -> "MixedStrategy":
        """Population ``(1 - eps) * self + eps * other``."""
        eps = Fraction(eps)
        return MixedStrategy(tuple((1 - eps) * a + eps * b for a, b in zip(self.probs, other.probs)))

    def to_json(self) -> list[str]:
        return [format_rational(p) for p in self.probs]

    @classmethod
    def from_json(cls, data: Sequence[RationalLike]) -> "MixedStrategy":
        if not isinstance(data, list):
            raise ParseError("strategy JSON must be an array of rational literals")
        return cls(tuple(parse_rational(x) for x in data))

    def describe(self, labels: Sequence[str] | None = None) -> str:
        names = labels or [str(i + 1) for i in range(self.size)]
        if self.is_pure:
            return names[self.support[0]]
        return "[" + ", ".join(f"{format_rational(self.probs[i])}:{names[i]}" for i in self.support) + "]"


def _check_size(game: SymmetricGame, *strategies: MixedStrategy) -> None:
    for s in strategies:
        if s.size != game.size:
            raise ValueError(f"strategy of size {s.size} used with a game of size {game.size}")


def expected_payoff(game: SymmetricGame, s: MixedStrategy, t: MixedStrategy) -> Fraction:
    """``U1(s, t) = s^T A t``, exactly."""
    _check_size(game, s, t)
    total = Fraction(0)
    tsupp = t.support
    for i in s.support:
        row = game.payoff[i]
        total += s.probs[i] * sum((row[j] * t.probs[j] for j in tsupp), Fraction(0))
    return total
