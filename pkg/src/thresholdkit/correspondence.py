"""Maps between threshold graphs, Betti sequences and anti-lecture hall compositions.

Betti sequences and compositions are plain tuples of ints of length ``n``.
A Betti sequence ``(b_1, ..., b_n)`` stands for the graded Betti numbers
``b_k = beta_{k,k+1}`` of the quotient by the coedge ideal; an anti-lecture
hall composition (ALHC) bounded by ``t`` satisfies
``t >= l_1/1 >= l_2/2 >= ... >= l_n/n >= 0``.  The correspondence uses t = 1.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .combinatorics import binomial
from .graphs import (
    ThresholdGraph,
    adjacency,
    append_dominating,
    append_isolated,
    labeled_complement,
)

__all__ = [
    "InvalidSequenceError",
    "alhc_of",
    "betti_of",
    "betti_from_alhc",
    "alhc_from_betti",
    "graph_from_alhc",
    "graph_from_betti",
    "betti_oracle",
    "subset_component_sum",
    "shift_betti",
    "shift_alhc",
    "validate_alhc",
    "enumerate_alhc",
    "projective_dimension",
    "is_betti_sequence",
    "iter_shift_tree",
]


class InvalidSequenceError(ValueError):
    """A sequence that is not in the image of the correspondence."""


def alhc_of(T: ThresholdGraph) -> tuple[int, ...]:
    """Count non-edges by their point label: ``l_k = #{uv : u + 1 + i_T(v) = k}``."""
    counts = [0] * T.n
    for item in labeled_complement(T):
        counts[item.lambda_label - 1] += 1
    return tuple(counts)


def betti_of(T: ThresholdGraph) -> tuple[int, ...]:
    """Betti sequence from the interval labeling of the non-edges.

    Each non-edge ``uv`` contributes ``C(v, u+1) * C(i_T(v), k-u-1)`` to
    ``b_k`` for every ``k`` in its interval label.
    """
    betti = [0] * T.n
    for (u, v), interval, _ in labeled_complement(T):
        above = len(interval) - 1
        head = binomial(v, u + 1)
        for k in interval:
            betti[k - 1] += head * binomial(above, k - u - 1)
    return tuple(betti)


def _check_alhc(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not lam:
        raise ValueError("empty sequence")
    if not validate_alhc(lam, 1):
        raise InvalidSequenceError("ratio condition violated")
    return lam


def betti_from_alhc(lam: Sequence[int]) -> tuple[int, ...]:
    """``b_i = sum_{k>=i} C(k-1, i-1) l_k``."""
    lam = _check_alhc(lam)
    n = len(lam)
    return tuple(
        sum(binomial(k - 1, i - 1) * lam[k - 1] for k in range(i, n + 1))
        for i in range(1, n + 1)
    )


def _inverse_transform(beta: Sequence[int]) -> tuple[int, ...]:
    n = len(beta)
    return tuple(
        sum((-1) ** (i + k) * binomial(k - 1, i - 1) * beta[k - 1] for k in range(i, n + 1))
        for i in range(1, n + 1)
    )


def alhc_from_betti(beta: Sequence[int]) -> tuple[int, ...]:
    """``l_i = sum_{k>=i} (-1)^(i+k) C(k-1, i-1) b_k``; rejects non-Betti input."""
    beta = tuple(beta)
    if not beta:
        raise ValueError("empty sequence")
    lam = _inverse_transform(beta)
    if not validate_alhc(lam, 1):
        raise InvalidSequenceError("not a 2-linear Betti sequence")
    return lam


def graph_from_alhc(lam: Sequence[int]) -> ThresholdGraph:
    """Dominating vertices are the nonzero values of ``k - l_k``; sigma is the rest."""
    lam = _check_alhc(lam)
    n = len(lam)
    dominating = {k - lam[k - 1] for k in range(1, n + 1)} - {0}
    return ThresholdGraph(n, frozenset(range(1, n + 1)) - dominating)


def graph_from_betti(beta: Sequence[int]) -> ThresholdGraph:
    beta = tuple(beta)
    T = graph_from_alhc(alhc_from_betti(beta))
    # the round trip is the membership certificate
    if betti_of(T) != beta:
        raise InvalidSequenceError("not a 2-linear Betti sequence")
    return T


def is_betti_sequence(beta: Sequence[int]) -> bool:
    try:
        graph_from_betti(beta)
    except ValueError:
        return False
    return True


def _component_counts(nbrs: Sequence[int]) -> list[int]:
    """Number of connected components of the induced subgraph on every vertex subset.

    ``comps[W] = 1 + comps[W minus C]`` where ``C`` is the component of the
    lowest vertex of ``W``; ``C`` is grown by repeatedly adding neighbours,
    using a table of neighbourhood unions over all subsets.
    """
    size = len(nbrs)
    full = 1 << size
    reach = [0] * full
    for W in range(1, full):
        low = W & -W
        reach[W] = reach[W ^ low] | nbrs[low.bit_length() - 1]
    comps = [0] * full
    for W in range(1, full):
        comp = W & -W
        while True:
            grown = (comp | reach[comp]) & W
            if grown == comp:
                break
            comp = grown
        comps[W] = 1 + comps[W ^ comp]
    return comps


def subset_component_sum(matrix: Sequence[Sequence[bool | int]]) -> tuple[int, ...]:
    """For each ``k >= 1``: sum over (k+1)-subsets W of (components of G[W] - 1).

    Works for any simple graph on vertices ``0..m``.  The result equals the
    Betti sequence of the coedge-ideal quotient only when the graph is chordal.
    """
    size = len(matrix)
    if size > 20:
        raise ValueError("subset sums are limited to 20 vertices")
    nbrs = [sum(1 << v for v in range(size) if matrix[u][v]) for u in range(size)]
    comps = _component_counts(nbrs)
    out = [0] * size
    for W in range(1, 1 << size):
        out[W.bit_count() - 1] += comps[W] - 1
    # entry for k = 0 (single vertices) is always 0; drop it
    return tuple(out[1:])


def betti_oracle(T: ThresholdGraph) -> tuple[int, ...]:
    """Brute-force Betti sequence of ``T`` from connected components of induced subgraphs."""
    return subset_component_sum(adjacency(T))


def shift_betti(beta: Sequence[int], mode: str) -> tuple[int, ...]:
    """Betti sequence after appending a dominating or isolated vertex."""
    beta = tuple(beta)
    n = len(beta)
    if mode == "dominating":
        return beta + (0,)
    if mode == "isolated":
        low = beta + (0,)
        high = (0,) + beta
        return tuple(a + b + binomial(n + 1, k) for k, (a, b) in enumerate(zip(low, high), 1))
    raise ValueError(f"unknown mode {mode!r}")


def shift_alhc(lam: Sequence[int], mode: str) -> tuple[int, ...]:
    lam = tuple(lam)
    if mode == "dominating":
        return lam + (0,)
    if mode == "isolated":
        return (1,) + tuple(x + 1 for x in lam)
    raise ValueError(f"unknown mode {mode!r}")


def validate_alhc(seq: Sequence[int], t: int = 1) -> bool:
    """Check ``t >= l_1/1 >= ... >= l_n/n >= 0`` by cross-multiplication."""
    seq = tuple(seq)
    if not seq or any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in seq):
        return False
    if seq[0] > t:
        return False
    # l_k / k >= l_{k+1} / (k+1)
    return all(seq[k - 1] * (k + 1) >= seq[k] * k for k in range(1, len(seq)))


def enumerate_alhc(n: int, t: int = 1) -> Iterator[tuple[int, ...]]:
    """Depth-first generation of every ALHC of length ``n`` bounded by ``t``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if t < 0:
        raise ValueError("t must be nonnegative")
    prefix: list[int] = []

    def extend(k: int) -> Iterator[tuple[int, ...]]:
        if k > n:
            yield tuple(prefix)
            return
        # largest l_k with l_k / k <= previous ratio
        top = t if k == 1 else prefix[-1] * k // (k - 1)
        for value in range(top + 1):
            prefix.append(value)
            yield from extend(k + 1)
            prefix.pop()

    yield from extend(1)


def projective_dimension(beta: Sequence[int]) -> int:
    for k in range(len(beta), 0, -1):
        if beta[k - 1]:
            return k
    return 0


def iter_shift_tree(n: int) -> Iterator[tuple[ThresholdGraph, tuple[int, ...], tuple[int, ...]]]:
    """Walk the dominating/isolated tree from T(1, {}) and T(1, {1}) down to depth ``n``.

    Yields ``(T, betti, alhc)`` for the leaves, with Betti sequence and
    composition propagated by the shift rules only.
    """
    def walk(T, beta, lam):
        if T.n == n:
            yield T, beta, lam
            return
        yield from walk(append_dominating(T), shift_betti(beta, "dominating"), shift_alhc(lam, "dominating"))
        yield from walk(append_isolated(T), shift_betti(beta, "isolated"), shift_alhc(lam, "isolated"))

    yield from walk(ThresholdGraph(1, frozenset()), (0,), (0,))
    yield from walk(ThresholdGraph(1, frozenset({1})), (1,), (1,))
