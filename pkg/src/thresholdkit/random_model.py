"""Expectations under the random threshold graph model T(n, p).

In T(n, p) each vertex ``i`` in ``1..n`` joins sigma independently with
probability ``p``.  Expected Betti numbers, compositions and projective
dimension are available three ways, which are checked against each other:
closed forms, row-by-row recurrences, and exact enumeration of all 2^n
graphs with rational weights.  :func:`monte_carlo` adds a seeded sampling
estimate with standard errors.

Sampling uses numpy's PCG64.  Samples are split into fixed chunks of
``CHUNK_SIZE``; chunk ``c`` draws from ``PCG64(SeedSequence(seed,
spawn_key=(c,)))`` a ``(count, n)`` array of uniforms, and vertex ``i`` is
isolated when column ``i - 1`` is below ``p``.  Since every chunk owns its
stream, splitting chunks over workers does not change the result.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .combinatorics import binomial, format_rational, geometric_factor
from .correspondence import alhc_of, betti_of
from .graphs import ThresholdGraph, enumerate_graphs

__all__ = [
    "STATISTICS",
    "METHODS",
    "CHUNK_SIZE",
    "ENUMERATION_LIMIT",
    "ExpectationReport",
    "sample",
    "draw_masks",
    "prob_projdim",
    "expected_projdim",
    "expected_projdim_recurrence",
    "expected_betti_closed",
    "expected_betti_recurrence",
    "expected_alhc_alternating",
    "expected_alhc_lattice",
    "expected_alhc_recurrence",
    "closed_form",
    "recurrence",
    "exact_expectation",
    "monte_carlo",
    "expectation",
    "default_workers",
]

STATISTICS = ("betti", "alhc", "projdim")
METHODS = ("closed", "recurrence", "enumerate", "mc")
CHUNK_SIZE = 8192
ENUMERATION_LIMIT = 16
THREADS_ENV = "THRESHOLDKIT_THREADS"


def default_workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class ExpectationReport:
    statistic: str
    method: str
    n: int
    p: Fraction | float
    values: list
    samples: int | None = None
    seed: int | None = None
    std_errors: list[float] | None = field(default=None)

    def to_dict(self) -> dict:
        out = {"statistic": self.statistic, "method": self.method, "n": self.n}
        if self.method == "mc":
            out["p"] = self.p
            out["samples"] = self.samples
            out["seed"] = self.seed
            out["values"] = [
                {"estimate": est, "std_error": se}
                for est, se in zip(self.values, self.std_errors)
            ]
        else:
            out["p"] = format_rational(self.p)
            out["values"] = [format_rational(v) for v in self.values]
        return out


def _exact_p(p) -> Fraction:
    if isinstance(p, float):
        raise TypeError("exact methods need a rational p, not a float")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return p


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")


# -- sampling ---------------------------------------------------------------

def _chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def draw_masks(n: int, p: float, seed: int, chunk: int, count: int) -> np.ndarray:
    """Bitmasks of sigma for ``count`` draws of chunk ``chunk`` (bit ``i-1`` is vertex ``i``)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if n > 62:
        raise ValueError("sampling supports n <= 62")
    uniforms = _chunk_generator(seed, chunk).random((count, n))
    weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    return (uniforms < p).astype(np.int64) @ weights


def _graph_from_mask(n: int, mask: int) -> ThresholdGraph:
    return ThresholdGraph(n, frozenset(i + 1 for i in range(n) if mask >> i & 1))


def sample(n: int, p: float, seed: int) -> ThresholdGraph:
    """One draw of T(n, p); it is the first sample of :func:`monte_carlo` with this seed."""
    _check_n(n)
    mask = int(draw_masks(n, float(p), seed, 0, 1)[0])
    return _graph_from_mask(n, mask)


# -- projective dimension ---------------------------------------------------

def prob_projdim(n: int, p, m: int) -> Fraction:
    """Probability that the projective dimension is ``m`` (for ``1 <= m <= n``)."""
    p = _exact_p(p)
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in 1..{n}, got {m}")
    return p * (1 - p) ** (n - m)


def expected_projdim(n: int, p) -> Fraction:
    p = _exact_p(p)
    _check_n(n)
    if p == 0:
        return Fraction(0)
    q = 1 - p
    return n + (q ** (n + 1) - q) / p


def expected_projdim_recurrence(n: int, p) -> Fraction:
    # vertex n isolated -> dimension n, otherwise that of T(n-1, p)
    p = _exact_p(p)
    _check_n(n)
    value = Fraction(0)
    for size in range(1, n + 1):
        value = (1 - p) * value + p * size
    return value


# -- Betti numbers ----------------------------------------------------------

def expected_betti_closed(n: int, p, k: int) -> Fraction:
    p = _exact_p(p)
    if not 1 <= k <= n:
        return Fraction(0)
    return binomial(n + 1, k + 1) * geometric_factor(p, k)


def expected_betti_recurrence(n: int, p) -> list[Fraction]:
    p = _exact_p(p)
    _check_n(n)
    row: list[Fraction] = []
    for size in range(1, n + 1):
        prev = row + [Fraction(0)]
        row = [
            prev[k - 1] + p * (prev[k - 2] if k >= 2 else 0) + p * binomial(size, k)
            for k in range(1, size + 1)
        ]
    return row


# -- compositions -----------------------------------------------------------

def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")


def expected_alhc_alternating(n: int, p, k: int) -> Fraction:
    p = _exact_p(p)
    _check_k(n, k)
    return sum(
        (
            (-1) ** (i + k) * binomial(n + 1, i + 1) * binomial(i - 1, k - 1) * geometric_factor(p, i)
            for i in range(k, n + 1)
        ),
        Fraction(0),
    )


def expected_alhc_lattice(n: int, p, k: int) -> Fraction:
    """Sum over ``1 <= i <= m <= j <= n`` of ``C(j-i, m-i) p^(j-m+1) (1-p)^(m-i)``, ``m = n-k+1``."""
    p = _exact_p(p)
    _check_k(n, k)
    q = 1 - p
    m = n - k + 1
    total = Fraction(0)
    for i in range(1, m + 1):
        for j in range(m, n + 1):
            total += binomial(j - i, m - i) * p ** (j - m + 1) * q ** (m - i)
    return total


def expected_alhc_recurrence(n: int, p) -> list[Fraction]:
    p = _exact_p(p)
    _check_n(n)
    row: list[Fraction] = []
    for size in range(1, n + 1):
        prev = row + [Fraction(0)]
        row = [
            (1 - p) * prev[k - 1] + p * (prev[k - 2] if k >= 2 else 0) + p
            for k in range(1, size + 1)
        ]
    return row


# -- whole reports ----------------------------------------------------------

def _statistic(name: str) -> Callable[[ThresholdGraph], Sequence[int]]:
    if name == "betti":
        return betti_of
    if name == "alhc":
        return alhc_of
    if name == "projdim":
        return lambda T: (max(T.sigma, default=0),)
    raise ValueError(f"unknown statistic {name!r}; choose from {', '.join(STATISTICS)}")


def closed_form(n: int, p, statistic: str, variant: str = "alternating") -> ExpectationReport:
    """Closed-form row; ``variant`` picks the alternating or lattice-path ALHC formula."""
    p = _exact_p(p)
    _check_n(n)
    if statistic == "betti":
        values = [expected_betti_closed(n, p, k) for k in range(1, n + 1)]
    elif statistic == "alhc":
        formula = {"alternating": expected_alhc_alternating, "lattice": expected_alhc_lattice}[variant]
        values = [formula(n, p, k) for k in range(1, n + 1)]
    elif statistic == "projdim":
        values = [expected_projdim(n, p)]
    else:
        _statistic(statistic)
    return ExpectationReport(statistic, "closed", n, p, values)


def recurrence(n: int, p, statistic: str) -> ExpectationReport:
    p = _exact_p(p)
    if statistic == "betti":
        values = expected_betti_recurrence(n, p)
    elif statistic == "alhc":
        values = expected_alhc_recurrence(n, p)
    elif statistic == "projdim":
        values = [expected_projdim_recurrence(n, p)]
    else:
        _statistic(statistic)
    return ExpectationReport(statistic, "recurrence", n, p, values)


def exact_expectation(n: int, p, statistic: str) -> ExpectationReport:
    """Weighted sum of ``statistic`` over every T(n, sigma).

    The weight ``p^|sigma| (1-p)^(n-|sigma|)`` depends only on ``|sigma|``, so
    integer totals are accumulated per size before weighting.
    """
    p = _exact_p(p)
    _check_n(n)
    if n > ENUMERATION_LIMIT:
        raise ValueError("n too large for enumeration")
    stat = _statistic(statistic)
    width = 1 if statistic == "projdim" else n
    totals = [[0] * width for _ in range(n + 1)]
    for T in enumerate_graphs(n):
        bucket = totals[len(T.sigma)]
        for idx, value in enumerate(stat(T)):
            bucket[idx] += value
    values = [Fraction(0)] * width
    for size, bucket in enumerate(totals):
        weight = p**size * (1 - p) ** (n - size)
        for idx in range(width):
            values[idx] += weight * bucket[idx]
    return ExpectationReport(statistic, "enumerate", n, p, values)


def _chunk_counts(n: int, p: float, seed: int, chunk: int, count: int) -> Counter:
    masks, freq = np.unique(draw_masks(n, p, seed, chunk, count), return_counts=True)
    return Counter(dict(zip(masks.tolist(), freq.tolist())))


def monte_carlo(
    n: int,
    p: float,
    statistic: str,
    samples: int,
    seed: int,
    workers: int | None = None,
) -> ExpectationReport:
    """Sample mean and standard error of ``statistic`` over ``samples`` draws of T(n, p)."""
    _check_n(n)
    if samples < 1:
        raise ValueError("samples must be positive")
    p = float(p)
    stat = _statistic(statistic)
    chunks = [
        (c, min(CHUNK_SIZE, samples - c * CHUNK_SIZE))
        for c in range(math.ceil(samples / CHUNK_SIZE))
    ]
    workers = workers or default_workers()
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _chunk_counts(n, p, seed, *job), chunks))
    else:
        parts = [_chunk_counts(n, p, seed, c, count) for c, count in chunks]
    counts: Counter = Counter()
    for part in parts:
        counts.update(part)

    width = 1 if statistic == "projdim" else n
    sums = [0] * width
    squares = [0] * width
    for mask, freq in counts.items():
        for idx, value in enumerate(stat(_graph_from_mask(n, mask))):
            sums[idx] += freq * value
            squares[idx] += freq * value * value
    # integer totals keep the result independent of summation order
    means, errors = [], []
    for s, ss in zip(sums, squares):
        means.append(float(Fraction(s, samples)))
        if samples > 1:
            var = Fraction(ss * samples - s * s, samples * samples * (samples - 1))
            errors.append(math.sqrt(var))
        else:
            errors.append(0.0)
    return ExpectationReport(statistic, "mc", n, p, means, samples=samples, seed=seed, std_errors=errors)


def expectation(n: int, p, statistic: str, method: str, samples: int | None = None, seed: int = 0) -> ExpectationReport:
    if method == "closed":
        return closed_form(n, p, statistic)
    if method == "recurrence":
        return recurrence(n, p, statistic)
    if method == "enumerate":
        return exact_expectation(n, p, statistic)
    if method == "mc":
        if samples is None:
            raise ValueError("mc needs a sample count")
        return monte_carlo(n, p, statistic, samples, seed)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
