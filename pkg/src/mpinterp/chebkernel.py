"""Chebyshev polynomials of the second kind and trigonometric summation identities.

Every summation identity is available in two forms: a literal term-by-term
summation (`*_direct`) and an equivalent closed form (`*_closed`).  The direct
forms are unconditionally valid and serve as oracles; the closed forms are
O(1) in the summation length but refuse to evaluate when a guarded
denominator is within `SINGULAR_THRESHOLD` of zero, raising
:class:`SingularityError` so the caller can fall back to the direct sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, SingularityError

#: Default guard: closed forms refuse when a denominator |sin(.)| drops below this.
SINGULAR_THRESHOLD = 1e-8

#: Slack accepted on |x| <= 1 domain checks (double rounding of cosines).
DOMAIN_TOL = 1e-12


class TrigSumKind(Enum):
    """Selects one of the six summation identities.

    ODD_COSINE, COSINE and SINE take parameters ``(m, x)``:

        ODD_COSINE: sum_{l=0..m} cos((2l+1) x)
        COSINE:     sum_{l=1..m} cos(l x)
        SINE:       sum_{l=1..m} sin(l x)

    SIN_SIN, COS_COS and SIN_COS take ``(l, alpha, beta)``:

        SIN_SIN: sum_{i=0..l} sin((i+1) alpha) sin((i+1) beta)
        COS_COS: sum_{i=0..l} cos((i+1) alpha) cos((i+1) beta)
        SIN_COS: sum_{i=0..l} sin((i+1) alpha) cos((i+1) beta)
    """

    ODD_COSINE = "odd_cosine"
    COSINE = "cosine"
    SINE = "sine"
    SIN_SIN = "sin_sin"
    COS_COS = "cos_cos"
    SIN_COS = "sin_cos"


def _checked_x(x: float) -> float:
    if abs(x) > 1.0 + DOMAIN_TOL:
        raise DomainError(f"argument {x!r} outside [-1, 1]")
    return min(1.0, max(-1.0, x))


def cheb_u(j: int, x: float) -> float:
    """Chebyshev polynomial of the second kind, U_j(x), for j >= -1.

    U_{-1} is identically zero by convention.  The three-term recurrence is
    exact at x = +-1, returning the limit (j+1) * (+-1)^j of the sin ratio.
    """
    if j < -1:
        raise ValueError(f"j must be >= -1, got {j}")
    if j == -1:
        _checked_x(x)
        return 0.0
    x = _checked_x(x)
    prev, cur = 1.0, 2.0 * x
    if j == 0:
        return prev
    for _ in range(j - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_t(j: int, x: float) -> float:
    """Chebyshev polynomial of the first kind, T_j(x) = cos(j arccos x)."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    x = _checked_x(x)
    return math.cos(j * math.acos(x))


def cheb_u_values(jmax: int, x) -> np.ndarray:
    """U_0(x)..U_jmax(x) for an array of abscissas, shape (len(x), jmax+1).

    Vectorized recurrence used by the node-sum engines.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(np.abs(x) > 1.0 + DOMAIN_TOL):
        raise DomainError("abscissa outside [-1, 1]")
    x = np.clip(x, -1.0, 1.0)
    out = np.empty((x.shape[0], jmax + 1))
    out[:, 0] = 1.0
    if jmax >= 1:
        out[:, 1] = 2.0 * x
    for j in range(2, jmax + 1):
        out[:, j] = 2.0 * x * out[:, j - 1] - out[:, j - 2]
    return out


def _guard(value: float, threshold: float, what: str) -> float:
    if abs(value) < threshold:
        raise SingularityError(f"|{what}| = {abs(value):.3e} below threshold {threshold:.3e}")
    return value


def trig_sum_direct(kind: TrigSumKind, *params: float) -> float:
    """Literal left-hand-side summation of the selected identity."""
    if kind in (TrigSumKind.ODD_COSINE, TrigSumKind.COSINE, TrigSumKind.SINE):
        m, x = params
        m = int(m)
        if kind is TrigSumKind.ODD_COSINE:
            ell = np.arange(m + 1)
            return float(np.sum(np.cos((2 * ell + 1) * x)))
        ell = np.arange(1, m + 1)
        if kind is TrigSumKind.COSINE:
            return float(np.sum(np.cos(ell * x)))
        return float(np.sum(np.sin(ell * x)))
    l, alpha, beta = params
    i = np.arange(int(l) + 1) + 1
    if kind is TrigSumKind.SIN_SIN:
        return float(np.sum(np.sin(i * alpha) * np.sin(i * beta)))
    if kind is TrigSumKind.COS_COS:
        return float(np.sum(np.cos(i * alpha) * np.cos(i * beta)))
    return float(np.sum(np.sin(i * alpha) * np.cos(i * beta)))


def trig_sum_closed(
    kind: TrigSumKind, *params: float, threshold: float = SINGULAR_THRESHOLD
) -> float:
    """Closed-form right-hand side of the selected identity.

    Raises :class:`SingularityError` when a guarded denominator is below
    ``threshold``; use :func:`trig_sum_direct` in that case.
    """
    if kind is TrigSumKind.ODD_COSINE:
        m, x = params
        return math.sin(2 * (int(m) + 1) * x) / (2 * _guard(math.sin(x), threshold, "sin x"))
    if kind in (TrigSumKind.COSINE, TrigSumKind.SINE):
        m, x = params
        m = int(m)
        half = _guard(math.sin(x / 2), threshold, "sin(x/2)")
        if kind is TrigSumKind.COSINE:
            return math.sin(m * x / 2) / half * math.cos((m + 1) * x / 2)
        return math.sin(m * x / 2) / half * math.sin((m + 1) * x / 2)

    l, alpha, beta = params
    l = int(l)
    dm = _guard(math.sin((alpha - beta) / 2), threshold, "sin((alpha-beta)/2)")
    dp = _guard(math.sin((alpha + beta) / 2), threshold, "sin((alpha+beta)/2)")
    c = 2 * l + 3
    if kind is TrigSumKind.SIN_SIN:
        return math.sin(c * (alpha - beta) / 2) / (4 * dm) - math.sin(c * (alpha + beta) / 2) / (4 * dp)
    if kind is TrigSumKind.COS_COS:
        return (
            math.sin(c * (alpha - beta) / 2) / (4 * dm)
            + math.sin(c * (alpha + beta) / 2) / (4 * dp)
            - 0.5
        )
    # SIN_COS
    return (
        (math.cos((alpha - beta) / 2) - math.cos(c * (alpha - beta) / 2)) / (4 * dm)
        + (math.cos((alpha + beta) / 2) - math.cos(c * (alpha + beta) / 2)) / (4 * dp)
    )


def weighted_sine_product_sum_direct(l: int, alpha: float, beta: float) -> float:
    """(sin alpha / sin beta) * sum_{i=0..l} sin((i+1)alpha) sin((i+1)beta), term by term."""
    if math.sin(beta) == 0.0:
        raise SingularityError("sin(beta) = 0")
    return math.sin(alpha) / math.sin(beta) * trig_sum_direct(TrigSumKind.SIN_SIN, l, alpha, beta)


def weighted_sine_product_sum_closed(
    l: int, alpha: float, beta: float, threshold: float = SINGULAR_THRESHOLD
) -> float:
    """Closed form of :func:`weighted_sine_product_sum_direct`.

    Requires sin(beta) != 0 and sin((alpha +- beta)/2) != 0 (guarded).
    """
    sb = _guard(math.sin(beta), threshold, "sin(beta)")
    dm = _guard(math.sin((alpha - beta) / 2), threshold, "sin((alpha-beta)/2)")
    dp = _guard(math.sin((alpha + beta) / 2), threshold, "sin((alpha+beta)/2)")
    c = 2 * l + 3
    s1 = math.sin(c * (alpha - beta) / 2)
    s2 = math.sin(c * (alpha + beta) / 2)
    ca2, cb2 = math.cos(alpha / 2), math.cos(beta / 2)
    return ca2 * cb2 / (2 * sb) * (s1 - s2) + ca2 / (4 * cb2) * (
        math.cos((alpha - beta) / 2) / dm * s1 + math.cos((alpha + beta) / 2) / dp * s2
    )


@dataclass(frozen=True)
class TripleSineArgs:
    """Arguments of the modulated sine-product sum.

    The sum is  sum_{j=0..n} sin((j+1)x) sin((j+1)y) sin((2n-2j+3)z);
    its closed form needs sin((x+y +- 2z)/2) != 0 and sin((x-y +- 2z)/2) != 0.
    """

    n: int
    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")


def triple_sine_sum_direct(args: TripleSineArgs) -> float:
    """Brute-force evaluation of the modulated sine-product sum."""
    j = np.arange(args.n + 1)
    return float(
        np.sum(
            np.sin((j + 1) * args.x)
            * np.sin((j + 1) * args.y)
            * np.sin((2 * args.n - 2 * j + 3) * args.z)
        )
    )


def triple_sine_sum_closed(
    args: TripleSineArgs, threshold: float = SINGULAR_THRESHOLD
) -> float:
    """Eight-term closed form of the modulated sine-product sum."""
    n, x, y, z = args.n, args.x, args.y, args.z
    s = x - y
    u = x + y
    d1 = _guard(math.sin((s - 2 * z) / 2), threshold, "sin((x-y-2z)/2)")
    d2 = _guard(math.sin((s + 2 * z) / 2), threshold, "sin((x-y+2z)/2)")
    d3 = _guard(math.sin((u - 2 * z) / 2), threshold, "sin((x+y-2z)/2)")
    d4 = _guard(math.sin((u + 2 * z) / 2), threshold, "sin((x+y+2z)/2)")
    c = 2 * n + 3
    w = (8 + 4 * n) * z
    total = (math.cos((s + w) / 2) - math.cos((c * s + 4 * z) / 2)) / (8 * d1)
    total += (math.cos((c * s - 4 * z) / 2) - math.cos((s - w) / 2)) / (8 * d2)
    total += (math.cos((c * u + 4 * z) / 2) - math.cos((u + w) / 2)) / (8 * d3)
    total += (math.cos((u - w) / 2) - math.cos((c * u - 4 * z) / 2)) / (8 * d4)
    return total
