"""Principal-branch Lambert W for nonnegative real arguments.

Solves eta * exp(eta) = x for x >= 0 by Halley iteration.  Only the
principal branch on the nonnegative axis is provided; that is the only
regime the Bell-number approximations need.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

_MAX_ITERATIONS = 50
_STEP_TOLERANCE = 1e-14
_RESIDUAL_BOUND = 1e-12


@dataclass(frozen=True)
class WSolution:
    """One solution of eta * exp(eta) = x.

    residual is |eta*exp(eta) - x| / max(x, 1) and is guaranteed to be
    at most 1e-12.
    """

    x: float
    eta: float
    residual: float


def lambert_w0(x: float) -> WSolution:
    """Solve eta * exp(eta) = x on the principal branch, x >= 0.

    Raises ValueError for negative, NaN or infinite input, and
    ArithmeticError if the iteration fails to converge (not observed for
    any finite x >= 0).
    """
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"lambert_w0 needs a finite argument, got {x!r}")
    if x < 0.0:
        raise ValueError(f"lambert_w0 is defined for x >= 0 only, got {x!r}")
    if x == 0.0:
        return WSolution(x=0.0, eta=0.0, residual=0.0)

    # initial guess: asymptotic for large x, linearized for small x
    eta = math.log1p(x) if x >= math.e else x / (1.0 + x)
    for _ in range(_MAX_ITERATIONS):
        e = math.exp(eta)
        f = eta * e - x
        # Halley step for f(eta) = eta*exp(eta) - x
        denom = e * (eta + 1.0) - (eta + 2.0) * f / (2.0 * eta + 2.0)
        step = f / denom
        eta -= step
        if abs(step) <= _STEP_TOLERANCE * max(abs(eta), 1e-300):
            break
    else:
        raise ArithmeticError(f"lambert_w0 did not converge for x={x!r}")

    eta = max(eta, 0.0)
    residual = abs(eta * math.exp(eta) - x) / max(x, 1.0)
    if residual > _RESIDUAL_BOUND:
        raise ArithmeticError(
            f"lambert_w0 residual {residual:.3e} exceeds bound for x={x!r}"
        )
    return WSolution(x=x, eta=eta, residual=residual)
