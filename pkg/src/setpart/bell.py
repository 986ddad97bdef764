"""Bell numbers: exact values plus two closed-form estimates.

Exact values come from the binomial recursion

    B_n = 1 + sum_{k=1}^{n-1} C(n-1, k) * B_k,      B_0 = B_1 = 1,

computed in arbitrary precision with the binomials built row-wise from the
multiplicative Pascal recurrence.  bell_triangle() builds the same numbers
through the additive triangle construction and serves as an independent
cross-check that never touches a binomial.

The two estimates are the Moser-Wyman asymptotic approximation (very
accurate even at small n) and the Berend-Tassa upper bound (simpler, always
above the true value).  Both are evaluated in natural-log space because
their direct values overflow doubles near n ~ 120; the direct value is
attached whenever it is representable.
"""
from __future__ import annotations

import math
import sys
import threading
from dataclasses import dataclass
from typing import Optional

from .lambertw import lambert_w0

MAX_N = 1000

_LN2 = math.log(2.0)
_MAX_EXP_ARG = math.log(sys.float_info.max)

# First 20 Bell numbers (n = 1..20); handy as reference data for
# verification commands and sanity checks.
BELL_NUMBERS_1_TO_20 = (
    1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975,
    678570, 4213597, 27644437, 190899322, 1382958545,
    10480142147, 82864869804, 682076806159, 5832742205057,
    51724158235372,
)


@dataclass(frozen=True)
class ExactBell:
    """Exact Bell number: the count of set partitions of an n-element set."""

    n: int
    value: int


@dataclass(frozen=True)
class LogApprox:
    """An approximate Bell value carried in natural-log space.

    direct_value is exp(log_value) when that fits in a double, else None.
    """

    n: int
    log_value: float
    direct_value: Optional[float]


# Shared memo of exact values, extended under a lock.  Lock-free reads are
# safe in CPython: the list only ever grows by append, and an element is
# appended only after it is fully computed.
_memo = [1, 1]
_memo_lock = threading.Lock()


def _check_range(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n must be in 0..{MAX_N}, got {n!r}")


def _extend_memo(n: int) -> None:
    if len(_memo) > n:
        return
    with _memo_lock:
        for m in range(len(_memo), n + 1):
            binom = 1  # C(m-1, k), built multiplicatively
            total = 1
            for k in range(1, m):
                binom = binom * (m - k) // k
                total += binom * _memo[k]
            _memo.append(total)


def bell_exact(n: int) -> ExactBell:
    """Exact Bell number B_n for 0 <= n <= 1000."""
    _check_range(n)
    _extend_memo(n)
    return ExactBell(n=n, value=_memo[n])


def bell_triangle(n_max: int) -> list[ExactBell]:
    """Bell numbers B_0..B_n_max via the additive triangle.

    Independent of bell_exact(): each row starts with the previous row's
    last entry and accumulates by addition only.  The row heads are the
    Bell numbers.
    """
    _check_range(n_max)
    out = [ExactBell(0, 1)]
    row = [1]
    for n in range(1, n_max + 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        out.append(ExactBell(n, nxt[0]))
        row = nxt
    return out


def _direct(log_value: float) -> Optional[float]:
    return math.exp(log_value) if log_value < _MAX_EXP_ARG else None


def bell_moser_wyman(n: int) -> LogApprox:
    """Moser-Wyman approximation B*_n, in log space.

    With w the principal Lambert W value at n (w*exp(w) = n):

        B*_n = exp(n*w + n/w - n - 1) / sqrt(w + 1)
               * (1 - w^2 (2w^2 + 7w + 10) / (24 n (w+1)^3))
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    w = lambert_w0(float(n)).eta
    correction = 1.0 - w * w * (2.0 * w * w + 7.0 * w + 10.0) / (
        24.0 * n * (w + 1.0) ** 3
    )
    log_value = (
        n * w + n / w - n - 1.0 - 0.5 * math.log(w + 1.0) + math.log(correction)
    )
    return LogApprox(n=n, log_value=log_value, direct_value=_direct(log_value))


def bell_berend_tassa(n: int) -> LogApprox:
    """Berend-Tassa upper bound (0.792 n / ln(n+1))^n, in log space.

    Strictly exceeds B_n for every n >= 1; tight for small n, loose for
    large n (about a factor of 4 at n = 20).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    log_value = n * (math.log(0.792 * n) - math.log(math.log(n + 1.0)))
    return LogApprox(n=n, log_value=log_value, direct_value=_direct(log_value))


def log_bell_exact(n: int) -> float:
    """Natural log of the exact B_n, good to ~1e-15 relative."""
    return _log_big_int(bell_exact(n).value)


def relative_error_mw(n: int) -> float:
    """|B*_n / B_n - 1| with B_n exact, for 2 <= n <= 1000."""
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in 2..{MAX_N}, got {n!r}")
    return abs(math.expm1(bell_moser_wyman(n).log_value - log_bell_exact(n)))


def _log_big_int(value: int) -> float:
    # bit length plus the leading 64 bits of mantissa; relative error of the
    # truncation is below 2**-63
    k = value.bit_length()
    if k <= 64:
        return math.log(value)
    shift = k - 64
    return math.log(value >> shift) + shift * _LN2
