"""Streaming enumeration of all set partitions of {1..n}.

A partition is carried as a restricted growth string (RGS): an array
a[0..n-1] of block labels with a[0] = 0 and a[i] <= 1 + max(a[0..i-1]);
element i+1 belongs to block a[i].  RGS are in bijection with set
partitions, so enumerating partitions means enumerating valid strings.

Five interchangeable engines produce every RGS of a given size exactly
once, each with O(n) state and a purely iterative step (no recursion):

  reference    lexicographic order by literal application of the successor
               rule; the slow, obviously-correct baseline
  hutchinson   lexicographic; rebuilds the per-position limit array from
               scratch before every step
  semba        lexicographic; maintains the limit array incrementally and
               sweeps the last position on the hot path
  er           reverse lexicographic; decrements the rightmost positive
               label and refills the suffix with the maximal staircase
  djokic       lexicographic with the leanest step: the last-position limit
               lives in a scalar and suffix refills write a constant

Engines are iterators.  next(engine) hands out a *view* of the internal
label list; it is overwritten by the following next() call, so callers
that keep emissions must copy them.  Emission order is engine-specific
and deliberately unconstrained; only the emitted set is part of the
contract.  Exhausted engines raise StopIteration (use next(engine, None)
for an optional-style result).

Full-run operations (count_all, checksum_all, fold_all) bypass the
per-emission Python layer and run compiled loops; see _kernels.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from ._kernels import FNV_PRIME, FNV_SEED, FULL_RUN_MAX_N

DEFAULT_MAX_N = 26
LARGE_MAX_N = 64

ENGINES = ("reference", "hutchinson", "semba", "er", "djokic")

_U64_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class RestrictedGrowthString:
    """One set partition, encoded as its label array."""

    n: int
    labels: tuple[int, ...]


@dataclass(frozen=True)
class BlockPartition:
    """One set partition as explicit blocks, ordered by minimum element."""

    n: int
    blocks: tuple[tuple[int, ...], ...]


def _check_n(n: int, allow_large: bool = False) -> int:
    limit = LARGE_MAX_N if allow_large else DEFAULT_MAX_N
    if n < 1 or n > limit:
        raise ValueError(
            f"n must be in 1..{limit}, got {n!r}"
            + ("" if allow_large else " (pass allow_large=True to raise the cap)")
        )
    return n


def _check_engine(algorithm: str) -> str:
    if algorithm not in ENGINES:
        raise ValueError(
            f"unknown engine {algorithm!r}; valid engines: {', '.join(ENGINES)}"
        )
    return algorithm


def is_valid_rgs(labels) -> bool:
    """True iff labels satisfies both restricted-growth invariants."""
    if len(labels) == 0 or labels[0] != 0:
        return False
    m = 0
    for v in labels[1:]:
        if v < 0 or v > m + 1:
            return False
        if v > m:
            m = v
    return True


def _validated(r: RestrictedGrowthString) -> RestrictedGrowthString:
    if r.n != len(r.labels) or not is_valid_rgs(r.labels):
        raise ValueError(f"not a valid restricted growth string: {r!r}")
    return r


def rgs_first(n: int, allow_large: bool = False) -> RestrictedGrowthString:
    """The lexicographically first RGS of size n: the single-block partition."""
    _check_n(n, allow_large)
    return RestrictedGrowthString(n=n, labels=(0,) * n)


def rgs_successor(r: RestrictedGrowthString):
    """The lexicographically next RGS, or None at the maximum.

    Rule: find the largest position j >= 1 with labels[j] <= max of the
    prefix, increment it and zero the suffix.  The maximum is the
    all-singletons staircase 0,1,2,...
    """
    _validated(r)
    labels = list(r.labels)
    if _advance_lex(labels):
        return RestrictedGrowthString(n=r.n, labels=tuple(labels))
    return None


def _advance_lex(a: list) -> bool:
    # in-place lexicographic successor; False at the maximum
    n = len(a)
    for j in range(n - 1, 0, -1):
        m = max(a[:j])
        if a[j] <= m:
            a[j] += 1
            for i in range(j + 1, n):
                a[i] = 0
            return True
    return False


def rgs_to_blocks(r: RestrictedGrowthString) -> BlockPartition:
    """Decode an RGS into explicit blocks (canonical min-element order)."""
    _validated(r)
    blocks = [[] for _ in range(max(r.labels) + 1)]
    for element, label in enumerate(r.labels, start=1):
        blocks[label].append(element)
    return BlockPartition(n=r.n, blocks=tuple(tuple(b) for b in blocks))


def blocks_to_rgs(p: BlockPartition) -> RestrictedGrowthString:
    """Encode explicit blocks back into an RGS; inverse of rgs_to_blocks."""
    labels = [-1] * p.n
    for index, block in enumerate(p.blocks):
        if not block:
            raise ValueError("empty block")
        if list(block) != sorted(set(block)):
            raise ValueError(f"block {block!r} is not strictly increasing")
        if index > 0 and block[0] <= p.blocks[index - 1][0]:
            raise ValueError("blocks are not ordered by minimum element")
        for element in block:
            if not 1 <= element <= p.n:
                raise ValueError(f"element {element!r} outside 1..{p.n}")
            if labels[element - 1] != -1:
                raise ValueError(f"element {element!r} appears in two blocks")
            labels[element - 1] = index
    if -1 in labels:
        missing = labels.index(-1) + 1
        raise ValueError(f"element {missing} is missing from the blocks")
    r = RestrictedGrowthString(n=p.n, labels=tuple(labels))
    return _validated(r)


class _Engine:
    """Iterative generator state shared by all engines.

    Subclasses keep the current string in self._labels plus whatever O(n)
    work arrays they need, and implement _advance() -> bool.
    """

    algorithm = "?"

    def __init__(self, n: int, allow_large: bool = False):
        self.n = _check_n(n, allow_large)
        self.exhausted = False
        self._started = False
        self._labels = [0] * n

    def __iter__(self):
        return self

    def __next__(self) -> list:
        if self.exhausted:
            raise StopIteration
        if not self._started:
            self._started = True
            return self._labels
        if self._advance():
            return self._labels
        self.exhausted = True
        raise StopIteration

    def _advance(self) -> bool:
        raise NotImplementedError


class ReferenceEngine(_Engine):
    algorithm = "reference"

    def _advance(self) -> bool:
        return _advance_lex(self._labels)


class HutchinsonEngine(_Engine):
    algorithm = "hutchinson"

    def __init__(self, n, allow_large=False):
        super().__init__(n, allow_large)
        self._limit = [0] * n

    def _advance(self) -> bool:
        a, b, n = self._labels, self._limit, self.n
        m = 0
        for i in range(1, n):
            if a[i - 1] > m:
                m = a[i - 1]
            b[i] = m + 1
        j = n - 1
        while j >= 1 and a[j] == b[j]:
            j -= 1
        if j < 1:
            return False
        a[j] += 1
        for i in range(j + 1, n):
            a[i] = 0
        return True


class SembaEngine(_Engine):
    algorithm = "semba"

    def __init__(self, n, allow_large=False):
        super().__init__(n, allow_large)
        self._limit = [0] + [1] * (n - 1)

    def _advance(self) -> bool:
        a, b, n = self._labels, self._limit, self.n
        if n > 1 and a[n - 1] < b[n - 1]:
            a[n - 1] += 1
            return True
        j = n - 2
        while j >= 1 and a[j] == b[j]:
            j -= 1
        if j < 1:
            return False
        a[j] += 1
        for i in range(j + 1, n):
            a[i] = 0
        for i in range(j + 1, n):
            b[i] = max(b[i - 1], a[i - 1] + 1)
        return True


class ErEngine(_Engine):
    algorithm = "er"

    def __init__(self, n, allow_large=False):
        super().__init__(n, allow_large)
        self._labels = list(range(n))
        self._max = list(range(n))  # max of labels[0..i]

    def _advance(self) -> bool:
        a, mx, n = self._labels, self._max, self.n
        j = n - 1
        while j >= 1 and a[j] == 0:
            j -= 1
        if j < 1:
            return False
        a[j] -= 1
        m = mx[j - 1]
        if a[j] > m:
            m = a[j]
        mx[j] = m
        for i in range(j + 1, n):
            m += 1
            a[i] = m
            mx[i] = m
        return True


class DjokicEngine(_Engine):
    algorithm = "djokic"

    def __init__(self, n, allow_large=False):
        super().__init__(n, allow_large)
        self._limit = [0] + [1] * (n - 1)
        self._last_limit = self._limit[n - 1] if n > 1 else 0

    def _advance(self) -> bool:
        a, b, n = self._labels, self._limit, self.n
        if a[n - 1] < self._last_limit:
            a[n - 1] += 1
            return True
        j = n - 2
        while j >= 1 and a[j] == b[j]:
            j -= 1
        if j < 1:
            return False
        a[j] += 1
        nb = b[j] + 1 if a[j] == b[j] else b[j]
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = nb
        self._last_limit = nb
        return True


_ENGINE_CLASSES = {
    "reference": ReferenceEngine,
    "hutchinson": HutchinsonEngine,
    "semba": SembaEngine,
    "er": ErEngine,
    "djokic": DjokicEngine,
}


def make_generator(algorithm: str, n: int, allow_large: bool = False) -> _Engine:
    """A fresh generator for the given engine and set size."""
    return _ENGINE_CLASSES[_check_engine(algorithm)](n, allow_large)


def _check_full_run_n(n: int) -> int:
    _check_n(n, allow_large=True)
    if n > FULL_RUN_MAX_N:
        raise ValueError(
            f"full runs are limited to n <= {FULL_RUN_MAX_N} "
            f"(the 64-bit emission counter would overflow), got {n!r}"
        )
    return n


def fold_all(algorithm: str, n: int) -> tuple[int, int]:
    """One full compiled run: (emission count, checksum over every label)."""
    _check_engine(algorithm)
    _check_full_run_n(n)
    count, acc = _kernels.KERNELS[algorithm](n, True)
    return int(count), int(acc)


def count_all(algorithm: str, n: int) -> int:
    """Number of emissions in a full run, streamed with O(n) memory."""
    _check_engine(algorithm)
    _check_full_run_n(n)
    count, _ = _kernels.KERNELS[algorithm](n, False)
    return int(count)


def checksum_all(algorithm: str, n: int) -> int:
    """Order-dependent 64-bit checksum of a full run.

    Folds every emitted label v at string position i as
    acc <- (acc XOR (v + i)) * FNV_PRIME, seeded with FNV_SEED, mod 2^64.
    Deterministic per engine; engines with different emission orders give
    different values by design.
    """
    return fold_all(algorithm, n)[1]


def _fold_labels(acc: int, labels) -> int:
    # pure-Python mirror of the kernel fold; used for cross-checking
    for i, v in enumerate(labels):
        acc = ((acc ^ (v + i)) * FNV_PRIME) & _U64_MASK
    return acc
