"""Threshold graphs T(n, sigma) and the labelings of their non-edges.

A threshold graph on vertices ``0..n`` is built by appending vertices
``1..n`` one at a time, each either adjacent to every earlier vertex
(dominating) or to none of them (isolated).  ``sigma`` records the isolated
ones, so for ``u < v`` the pair ``uv`` is an edge exactly when ``v`` is not in
``sigma``.  The pair ``(n, sigma)`` is a complete isomorphism invariant, and
it is the only thing stored; adjacency is always derived.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "ThresholdGraph",
    "NonEdge",
    "LabeledNonEdge",
    "NotSimpleGraphError",
    "make",
    "is_edge",
    "non_edges",
    "isolated_above",
    "beta_label",
    "lambda_label",
    "labeled_complement",
    "append_dominating",
    "append_isolated",
    "adjacency",
    "edges",
    "recognize",
    "parse_edge_list",
    "enumerate_graphs",
    "coedge_generators",
    "format_generators",
]


class NotSimpleGraphError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ThresholdGraph:
    n: int
    sigma: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        sigma = frozenset(self.sigma)
        if any(not 1 <= v <= self.n for v in sigma):
            raise ValueError("sigma out of range")
        object.__setattr__(self, "sigma", sigma)

    @property
    def vertices(self) -> range:
        return range(self.n + 1)

    def sorted_sigma(self) -> list[int]:
        return sorted(self.sigma)

    def to_dict(self) -> dict:
        return {"n": self.n, "sigma": self.sorted_sigma()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "ThresholdGraph":
        return cls(int(data["n"]), frozenset(int(v) for v in data["sigma"]))

    @classmethod
    def from_json(cls, text: str) -> "ThresholdGraph":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        inner = ",".join(map(str, self.sorted_sigma()))
        return f"T({self.n},{{{inner}}})"


class NonEdge(NamedTuple):
    u: int
    v: int

    def __str__(self) -> str:
        return f"{self.u}{self.v}" if self.v < 10 else f"{self.u}-{self.v}"


class LabeledNonEdge(NamedTuple):
    edge: NonEdge
    beta_label: range
    lambda_label: int


def make(n: int, sigma: Iterable[int] = ()) -> ThresholdGraph:
    return ThresholdGraph(n, frozenset(sigma))


def _check_vertex(T: ThresholdGraph, v: int) -> None:
    if not 0 <= v <= T.n:
        raise ValueError(f"vertex {v} out of range 0..{T.n}")


def is_edge(T: ThresholdGraph, u: int, v: int) -> bool:
    _check_vertex(T, u)
    _check_vertex(T, v)
    if u == v:
        raise ValueError("a vertex is not adjacent to itself")
    return max(u, v) not in T.sigma


def non_edges(T: ThresholdGraph) -> list[NonEdge]:
    """All non-edges ``uv`` with ``u < v``; there are ``sum(sigma)`` of them."""
    return [NonEdge(u, v) for v in sorted(T.sigma) for u in range(v)]


def isolated_above(T: ThresholdGraph, v: int) -> int:
    _check_vertex(T, v)
    return sum(1 for w in T.sigma if w > v)


def _require_non_edge(T: ThresholdGraph, e: Sequence[int]) -> NonEdge:
    u, v = sorted(e)
    _check_vertex(T, u)
    _check_vertex(T, v)
    if u == v or v not in T.sigma:
        raise ValueError("not a non-edge")
    return NonEdge(u, v)


def beta_label(T: ThresholdGraph, e: Sequence[int]) -> range:
    """The interval ``u+1 .. u+1+i_T(v)`` attached to the non-edge ``uv``."""
    u, v = _require_non_edge(T, e)
    return range(u + 1, u + 2 + isolated_above(T, v))


def lambda_label(T: ThresholdGraph, e: Sequence[int]) -> int:
    u, v = _require_non_edge(T, e)
    return u + 1 + isolated_above(T, v)


def labeled_complement(T: ThresholdGraph) -> list[LabeledNonEdge]:
    """Every non-edge together with its interval label and its point label."""
    out = []
    above = 0
    # walk sigma from the top so i_T(v) is a running count
    for v in sorted(T.sigma, reverse=True):
        for u in range(v):
            lo, hi = u + 1, u + 1 + above
            out.append(LabeledNonEdge(NonEdge(u, v), range(lo, hi + 1), hi))
        above += 1
    out.sort(key=lambda item: (item.edge.v, item.edge.u))
    return out


def append_dominating(T: ThresholdGraph) -> ThresholdGraph:
    return ThresholdGraph(T.n + 1, T.sigma)


def append_isolated(T: ThresholdGraph) -> ThresholdGraph:
    return ThresholdGraph(T.n + 1, T.sigma | {T.n + 1})


def adjacency(T: ThresholdGraph) -> list[list[bool]]:
    size = T.n + 1
    return [[u != v and max(u, v) not in T.sigma for v in range(size)] for u in range(size)]


def edges(T: ThresholdGraph) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, T.n + 1) if v not in T.sigma for u in range(v)]


def recognize(matrix: Sequence[Sequence[bool | int]]) -> ThresholdGraph | None:
    """Return the threshold graph isomorphic to ``matrix``, or ``None``.

    Vertices are peeled off while some remaining vertex is isolated or
    dominating in the remaining graph; the k-th vertex peeled receives label
    ``m - k`` and is recorded in sigma when it was isolated.  A vertex that is
    both (only possible once two vertices remain and they are adjacent) counts
    as dominating.  The last vertex left becomes vertex 0.
    """
    size = len(matrix)
    for row in matrix:
        if len(row) != size:
            raise NotSimpleGraphError("not a simple graph")
    for u in range(size):
        if matrix[u][u]:
            raise NotSimpleGraphError("not a simple graph")
        for v in range(u + 1, size):
            if bool(matrix[u][v]) != bool(matrix[v][u]):
                raise NotSimpleGraphError("not a simple graph")
    if size < 2:
        raise ValueError("recognition needs at least two vertices")

    nbrs = [sum(1 << v for v in range(size) if matrix[u][v]) for u in range(size)]
    remaining = (1 << size) - 1
    sigma = set()
    for label in range(size - 1, 0, -1):
        alive = remaining.bit_count()
        peeled = None
        isolated = False
        for u in range(size):
            if not remaining >> u & 1:
                continue
            degree = (nbrs[u] & remaining).bit_count()
            if degree == alive - 1:
                peeled = u
                break
            if degree == 0 and peeled is None:
                peeled, isolated = u, True
        if peeled is None:
            return None
        if isolated:
            sigma.add(label)
        remaining &= ~(1 << peeled)
    return ThresholdGraph(size - 1, frozenset(sigma))


def parse_edge_list(text: str, m: int) -> list[list[bool]]:
    """Adjacency matrix on vertices ``0..m`` from tokens like ``"0-3,1-3"``."""
    matrix = [[False] * (m + 1) for _ in range(m + 1)]
    for token in filter(None, (t.strip() for t in text.split(","))):
        a, sep, b = token.partition("-")
        if not sep:
            raise ValueError(f"malformed edge token {token!r}")
        u, v = int(a), int(b)
        if not (0 <= u <= m and 0 <= v <= m):
            raise ValueError(f"edge {token!r} out of range 0..{m}")
        if u == v:
            raise NotSimpleGraphError("not a simple graph")
        matrix[u][v] = matrix[v][u] = True
    return matrix


def enumerate_graphs(n: int) -> Iterator[ThresholdGraph]:
    """All 2^n graphs T(n, sigma), sigma by size then lexicographically."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for size in range(n + 1):
        for sigma in combinations(range(1, n + 1), size):
            yield ThresholdGraph(n, frozenset(sigma))


def coedge_generators(T: ThresholdGraph) -> list[tuple[int, int]]:
    """Index pairs ``(u, v)`` of the generators ``x_u x_v`` of the coedge ideal."""
    return sorted(tuple(e) for e in non_edges(T))


def format_generators(gens: Iterable[tuple[int, int]], style: str = "plain") -> str:
    if style == "plain":
        fmt = "x{}*x{}"
    elif style == "cas":
        fmt = "x_{}*x_{}"
    else:
        raise ValueError(f"unknown monomial format {style!r}")
    return ", ".join(fmt.format(u, v) for u, v in gens)
