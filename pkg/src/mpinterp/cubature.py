"""Cubature at the Morrow-Patterson nodes for the product measure
sqrt(1-x^2) sqrt(1-y^2) dx dy.

The rule with weights C_n (1-x_m^2)(1-y_k^2) integrates every bivariate
polynomial of total degree <= 2n exactly.  Values are reported both raw
(against the measure of total mass pi^2/4) and normalized (mass 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .chebkernel import cheb_u_values
from .errors import InvalidDegreeError
from .nodes import NodeSet, morrow_patterson, scale_factor


@dataclass(frozen=True)
class CubatureRule:
    degree: int
    nodes: NodeSet
    weights: np.ndarray
    exactness: int

    def __post_init__(self):
        self.weights.setflags(write=False)


class IntegrationResult(NamedTuple):
    raw: float         # approximates integral of f against the measure itself
    normalized: float  # raw * 4/pi^2


def cubature_rule(n: int) -> CubatureRule:
    """Degree-2n exact rule at the Morrow-Patterson nodes of even degree n."""
    ns = morrow_patterson(n)
    return CubatureRule(degree=n, nodes=ns, weights=ns.weights, exactness=2 * n)


def integrate(rule: CubatureRule, f: Callable[[float, float], float]) -> IntegrationResult:
    """Apply the rule to an arbitrary function (no exactness claim beyond P_{2n})."""
    vals = np.array([f(x, y) for x, y in rule.nodes.points])
    if not np.all(np.isfinite(vals)):
        bad = int(np.argmax(~np.isfinite(vals)))
        x, y = rule.nodes.points[bad]
        raise ValueError(f"non-finite integrand value at node ({x!r}, {y!r})")
    normalized = float(np.dot(rule.weights, vals))
    return IntegrationResult(raw=np.pi**2 / 4 * normalized, normalized=normalized)


def discrete_moment_direct(n: int, i: int, j: int) -> float:
    """Literal node sum  sum_{m,k} (1-x_m^2)(1-y_k^2) U_i(x_m) U_j(y_k)."""
    if n < 2 or n % 2 != 0:
        raise InvalidDegreeError(f"degree must be even and >= 2, got {n}")
    ns = morrow_patterson(n)
    x, y = ns.points[:, 0], ns.points[:, 1]
    ui = cheb_u_values(i, x)[:, i]
    uj = cheb_u_values(j, y)[:, j]
    return float(np.sum((1 - x**2) * (1 - y**2) * ui * uj))


def _multiple_form(value: int, d: int):
    """Classify value as q*d ('exact'), q*d - 2 ('shifted'), or neither."""
    if value % d == 0:
        return "exact", value // d
    if (value + 2) % d == 0:
        return "shifted", (value + 2) // d
    return None, None


def discrete_moment_closed(n: int, i: int, j: int) -> float:
    """Case-table evaluation of :func:`discrete_moment_direct`.

    The sum vanishes unless n+2 divides i or i+2 AND n+3 divides j or j+2;
    in the four divisibility cases it equals
    +- (n+2)(n+3)/16 * [(-1)^q_i + (-1)^q_j], the sign being + when the two
    divisibility forms agree (both exact multiples or both shifted by -2).
    """
    if n < 2 or n % 2 != 0:
        raise InvalidDegreeError(f"degree must be even and >= 2, got {n}")
    if i < 0 or j < 0:
        raise ValueError("basis indices must be nonnegative")
    form_i, qi = _multiple_form(i, n + 2)
    form_j, qj = _multiple_form(j, n + 3)
    if form_i is None or form_j is None:
        return 0.0
    sign = 1.0 if form_i == form_j else -1.0
    return sign * (n + 2) * (n + 3) / 16.0 * ((-1.0) ** qi + (-1.0) ** qj)


def exactness_table(n: int, max_total_degree: int | None = None) -> list:
    """Normalized rule applied to every product basis function U_i(x)U_j(y).

    Returns rows (i, j, value, |value - expected|) for 0 <= i+j <= the given
    total degree (default 2n).  The exact normalized integral is 1 for
    (i, j) = (0, 0) and 0 otherwise.
    """
    if max_total_degree is None:
        max_total_degree = 2 * n
    cn = scale_factor(n)
    ns = morrow_patterson(n)
    x, y = ns.points[:, 0], ns.points[:, 1]
    jmax = max_total_degree
    Ux = cheb_u_values(jmax, x)
    Uy = cheb_u_values(jmax, y)
    wgt = (1 - x**2) * (1 - y**2)
    rows = []
    for i in range(max_total_degree + 1):
        for j in range(max_total_degree - i + 1):
            val = cn * float(np.sum(wgt * Ux[:, i] * Uy[:, j]))
            expected = 1.0 if (i == 0 and j == 0) else 0.0
            rows.append((i, j, val, abs(val - expected)))
    return rows
