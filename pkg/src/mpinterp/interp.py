"""Interpolation at the Morrow-Patterson nodes and Lebesgue function machinery.

The reproducing kernel of the node family,

    K(node, p) = sum_{0 <= i+j <= n} U_i(x_m) U_j(y_k) U_i(px) U_j(py),

is available through two interchangeable evaluators: a direct double sum with
prefix-sum reuse, and a closed-form route that collapses the double sum into
a handful of trigonometric terms per node.  The closed form degenerates when
an evaluation point approaches the boundary of the square or lines up with a
node angle; those entries silently fall back to the direct evaluator and are
counted in the diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .chebkernel import SINGULAR_THRESHOLD, cheb_u_values
from .errors import DomainError, ParameterError
from .nodes import Point2, emp_scale, mp_angle_pairs, scale_factor

AUTO_FAST_MIN_DEGREE = 12  # closed-form overhead dominates below this

_EPS = 2.3e-16
#: Closed-form entries whose estimated rounding error exceeds this budget are
#: rerouted to the direct evaluator (the equivalence contract is 1e-9).
_FAST_ERROR_BUDGET = 2.5e-10


class KernelMethod(Enum):
    DIRECT = "direct"
    FAST = "fast"
    AUTO = "auto"


@dataclass(frozen=True)
class KernelEvalConfig:
    method: KernelMethod = KernelMethod.AUTO
    singular_threshold: float = SINGULAR_THRESHOLD

    def __post_init__(self):
        if not 0.0 < self.singular_threshold < 1e-2:
            raise ParameterError(
                f"singular_threshold must lie in (0, 1e-2), got {self.singular_threshold}"
            )

    def resolve(self, n: int) -> KernelMethod:
        if self.method is KernelMethod.AUTO:
            return KernelMethod.FAST if n >= AUTO_FAST_MIN_DEGREE else KernelMethod.DIRECT
        return self.method


@dataclass
class KernelDiagnostics:
    """Counts kernel entries that were rerouted to the direct evaluator."""

    fallback_count: int = 0


DEFAULT_CONFIG = KernelEvalConfig()


class _NodeData(NamedTuple):
    w: np.ndarray        # node x-angles, one per node
    v: np.ndarray        # node y-angles
    sin_w: np.ndarray
    sin_v: np.ndarray
    cos_w2: np.ndarray   # cos(w/2)
    ux: np.ndarray       # U_i(cos w), shape (N, n+1)
    uy: np.ndarray       # U_j(cos v)
    weights: np.ndarray  # cubature weights C_n sin^2 w sin^2 v


@lru_cache(maxsize=64)
def _node_data(n: int) -> _NodeData:
    angles = mp_angle_pairs(n)
    w, v = angles[:, 0], angles[:, 1]
    sin_w, sin_v = np.sin(w), np.sin(v)
    ux = cheb_u_values(n, np.cos(w))
    uy = cheb_u_values(n, np.cos(v))
    weights = scale_factor(n) * sin_w**2 * sin_v**2
    return _NodeData(w, v, sin_w, sin_v, np.cos(w / 2), ux, uy, weights)


def _point_u(n: int, angle: float) -> np.ndarray:
    return cheb_u_values(n, np.cos([angle]))[0]


def kernel_direct(n: int, node_angles, point_angles) -> float:
    """Truncated tensor kernel via the double sum, one (node, point) pair.

    The inner j-sum is shared across i through a prefix sum, so the cost is
    linear in n once the four U-vectors are in hand.
    """
    w, v = node_angles
    theta, phi = point_angles
    uw = _point_u(n, w)
    uv = _point_u(n, v)
    ut = _point_u(n, theta)
    up = _point_u(n, phi)
    prefix = np.cumsum(uv * up)[::-1]  # index i holds sum_{j <= n-i}
    return float(np.dot(uw * ut, prefix))


def _triple_sine_block(cs, ss, cS, sS, cu, su, cU, sU, cz, sz, c2z, s2z, cNz, sNz):
    """Closed-form modulated sine-product sums for a block of arguments.

    The half-angle cos/sin of (v -+ phi) enter as 2D arrays; all z-dependent
    factors are 1D per-node arrays, so each output entry costs a few fused
    multiplies instead of fresh trig calls.  Returns (value, min |denominator|).
    """
    den1 = ss * cz - cs * sz
    den2 = ss * cz + cs * sz
    den3 = su * cz - cu * sz
    den4 = su * cz + cu * sz
    with np.errstate(divide="ignore", invalid="ignore"):
        total = ((cs * cNz - ss * sNz) - (cS * c2z - sS * s2z)) / den1
        total += ((cS * c2z + sS * s2z) - (cs * cNz + ss * sNz)) / den2
        total += ((cU * c2z - sU * s2z) - (cu * cNz - su * sNz)) / den3
        total += ((cu * cNz + su * sNz) - (cU * c2z + sU * s2z)) / den4
    min_den = np.minimum(
        np.minimum(np.abs(den1), np.abs(den2)), np.minimum(np.abs(den3), np.abs(den4))
    )
    return total / 8.0, min_den


def _weighted_block_direct(
    n: int, theta: float, phis: np.ndarray, node_idx: Optional[np.ndarray] = None
) -> np.ndarray:
    """Weighted kernel entries omega * K for one x-angle row, via the double sum.

    Returns shape (len(phis), #nodes); ``node_idx`` restricts the node set.
    """
    nd = _node_data(n)
    ux = nd.ux if node_idx is None else nd.ux[node_idx]
    uy = nd.uy if node_idx is None else nd.uy[node_idx]
    wgt = nd.weights if node_idx is None else nd.weights[node_idx]
    ut = _point_u(n, theta)
    up = cheb_u_values(n, np.cos(phis))
    g = ux * ut                                        # (S, n+1)
    h = np.cumsum(uy[:, None, :] * up[None, :, :], axis=2)[:, :, ::-1]
    k = np.einsum("si,sbi->bs", g, h)
    return wgt[None, :] * k


def _weighted_block_fast(n: int, theta: float, phis: np.ndarray, threshold: float):
    """Weighted kernel entries via the closed form, with per-entry fallback.

    Returns (block of shape (len(phis), #nodes), fallback entry count).
    """
    nd = _node_data(n)
    N = len(nd.w)
    B = len(phis)
    sin_t = math.sin(theta)
    cos_t2 = math.cos(theta / 2)
    if abs(sin_t) < threshold or abs(cos_t2) < threshold:
        return _weighted_block_direct(n, theta, phis), B * N

    sin_p = np.sin(phis)
    bad_phi = np.abs(sin_p) < threshold

    z1 = (nd.w - theta) / 2
    z2 = (nd.w + theta) / 2
    sz1, cz1 = np.sin(z1), np.cos(z1)
    sz2, cz2 = np.sin(z2), np.cos(z2)
    bad_node = (np.abs(sz1) < threshold) | (np.abs(sz2) < threshold)

    half_s = (nd.v[None, :] - phis[:, None]) / 2       # (B, N)
    half_u = (nd.v[None, :] + phis[:, None]) / 2
    c = 2 * n + 3
    cs, ss = np.cos(half_s), np.sin(half_s)
    cS, sS = np.cos(c * half_s), np.sin(c * half_s)
    cu, su = np.cos(half_u), np.sin(half_u)
    cU, sU = np.cos(c * half_u), np.sin(c * half_u)

    nz = 2 * n + 4
    ups1, den_a = _triple_sine_block(
        cs, ss, cS, sS, cu, su, cU, sU,
        cz1, sz1, np.cos(2 * z1), np.sin(2 * z1), np.cos(nz * z1), np.sin(nz * z1),
    )
    ups2, den_b = _triple_sine_block(
        cs, ss, cS, sS, cu, su, cU, sU,
        cz2, sz2, np.cos(2 * z2), np.sin(2 * z2), np.cos(nz * z2), np.sin(nz * z2),
    )
    bad_node = bad_node | (den_a < threshold).any(axis=0) | (den_b < threshold).any(axis=0)

    p1 = nd.cos_w2 * cos_t2 / (2 * sin_t)
    p2 = nd.cos_w2 / (4 * cos_t2)
    with np.errstate(divide="ignore", invalid="ignore"):
        ct1, ct2 = cz1 / sz1, cz2 / sz2
        kappa = p1 * (ups1 - ups2) + p2 * (ct1 * ups1 + ct2 * ups2)
        block = scale_factor(n) * nd.sin_v[None, :] * kappa / sin_p[:, None]
        # first-order rounding estimate of the closed form; entries whose
        # amplified error could breach the equivalence budget go direct
        amp1 = (np.abs(p1) + np.abs(p2 * ct1)) / den_a
        amp2 = (np.abs(p1) + np.abs(p2 * ct2)) / den_b
        err_est = (
            2 * _EPS * (amp1 + amp2)
            / (nd.sin_v * nd.sin_w**2)
            / np.abs(sin_p)[:, None]
        )
    entry_bad = err_est > _FAST_ERROR_BUDGET
    # rows dominated by flagged entries (phi close to an edge) are cheaper to
    # redo wholesale than node by node
    bad_phi = bad_phi | (entry_bad.mean(axis=1) > 0.25)
    bad_node = bad_node | (entry_bad & ~bad_phi[:, None]).any(axis=0)

    fallbacks = 0
    if bad_node.any():
        idx = np.flatnonzero(bad_node)
        block[:, idx] = _weighted_block_direct(n, theta, phis, node_idx=idx)
        fallbacks += B * len(idx)
    if bad_phi.any():
        rows = np.flatnonzero(bad_phi)
        block[rows, :] = _weighted_block_direct(n, theta, phis[rows])
        fallbacks += len(rows) * N - int(np.sum(bad_node)) * len(rows)
    return block, fallbacks


def kernel_fast(
    n: int,
    node_angles,
    point_angles,
    cfg: KernelEvalConfig = DEFAULT_CONFIG,
    diagnostics: Optional[KernelDiagnostics] = None,
) -> float:
    """Closed-form kernel for one (node, point) pair.

    Matches :func:`kernel_direct`; falls back to it (and bumps the
    diagnostics counter) whenever a guarded denominator is too small.
    """
    w, v = node_angles
    theta, phi = point_angles
    thr = cfg.singular_threshold
    z1, z2 = (w - theta) / 2, (w + theta) / 2
    guards = (
        math.sin(theta), math.sin(phi), math.cos(theta / 2),
        math.sin(z1), math.sin(z2),
    )
    fall = any(abs(g) < thr for g in guards)
    if not fall:
        from .chebkernel import TripleSineArgs, triple_sine_sum_closed
        from .errors import SingularityError

        try:
            u1 = triple_sine_sum_closed(TripleSineArgs(n, v, phi, z1), threshold=thr)
            u2 = triple_sine_sum_closed(TripleSineArgs(n, v, phi, z2), threshold=thr)
        except SingularityError:
            fall = True
    if not fall:
        # same first-order rounding estimate as the batched path
        p1 = abs(math.cos(w / 2) * math.cos(theta / 2) / (2 * math.sin(theta)))
        p2 = abs(math.cos(w / 2) / (4 * math.cos(theta / 2)))
        amp = 0.0
        for z, u in ((z1, u1), (z2, u2)):
            den = min(
                abs(math.sin((v - phi - 2 * z) / 2)), abs(math.sin((v - phi + 2 * z) / 2)),
                abs(math.sin((v + phi - 2 * z) / 2)), abs(math.sin((v + phi + 2 * z) / 2)),
            )
            amp += (p1 + p2 * abs(math.cos(z) / math.sin(z))) / den
        err_est = 2 * _EPS * amp / (
            math.sin(v) * math.sin(w) ** 2 * abs(math.sin(phi))
        )
        fall = err_est > _FAST_ERROR_BUDGET
    if fall:
        if diagnostics is not None:
            diagnostics.fallback_count += 1
        return kernel_direct(n, node_angles, point_angles)
    kappa = math.cos(w / 2) * math.cos(theta / 2) / (2 * math.sin(theta)) * (u1 - u2)
    kappa += math.cos(w / 2) / (4 * math.cos(theta / 2)) * (
        math.cos(z1) / math.sin(z1) * u1 + math.cos(z2) / math.sin(z2) * u2
    )
    return kappa / (math.sin(v) * math.sin(phi) * math.sin(w) ** 2)


def _weighted_row(
    n: int, theta: float, phi: float, cfg: KernelEvalConfig,
    diagnostics: Optional[KernelDiagnostics] = None,
) -> np.ndarray:
    """Weighted kernel over all nodes at one evaluation point."""
    if cfg.resolve(n) is KernelMethod.FAST:
        block, falls = _weighted_block_fast(
            n, theta, np.array([phi]), cfg.singular_threshold
        )
        if diagnostics is not None:
            diagnostics.fallback_count += falls
        return block[0]
    return _weighted_block_direct(n, theta, np.array([phi]))[0]


def _to_angles(point) -> tuple[float, float]:
    x, y = point
    if abs(x) > 1 + 1e-12 or abs(y) > 1 + 1e-12:
        raise DomainError(f"point ({x}, {y}) outside the square")
    return math.acos(min(1.0, max(-1.0, x))), math.acos(min(1.0, max(-1.0, y)))


def interpolate(
    n: int,
    samples: Sequence[float],
    point,
    cfg: KernelEvalConfig = DEFAULT_CONFIG,
    diagnostics: Optional[KernelDiagnostics] = None,
) -> float:
    """Value at ``point`` of the degree-n interpolant matching ``samples``.

    ``samples`` must be aligned with the node ordering of
    :func:`mpinterp.nodes.morrow_patterson`.
    """
    samples = np.asarray(samples, dtype=float)
    expected = (n + 1) * (n + 2) // 2
    if samples.shape != (expected,):
        raise ValueError(f"expected {expected} samples, got shape {samples.shape}")
    theta, phi = _to_angles(point)
    row = _weighted_row(n, theta, phi, cfg, diagnostics)
    return float(np.dot(row, samples))


def lebesgue_function(
    n: int,
    point,
    cfg: KernelEvalConfig = DEFAULT_CONFIG,
    diagnostics: Optional[KernelDiagnostics] = None,
) -> float:
    """Sum of absolute weighted kernel values at ``point``."""
    theta, phi = _to_angles(point)
    row = _weighted_row(n, theta, phi, cfg, diagnostics)
    return float(np.abs(row).sum())


# ---------------------------------------------------------------------------
# grid evaluation


@dataclass(frozen=True)
class GridSpec:
    """Tensor evaluation grid on the square.

    ``kind`` is "cl" (Chebyshev-Lobatto) or "equi" (equally spaced);
    ``per_side`` defaults to max(101, 4n+1).  Both kinds contain the corners.
    """

    kind: str = "cl"
    per_side: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("cl", "equi"):
            raise ParameterError(f"grid kind must be 'cl' or 'equi', got {self.kind!r}")
        if self.per_side is not None and self.per_side < 3:
            raise ParameterError(f"per_side must be >= 3, got {self.per_side}")

    def side_count(self, n: int) -> int:
        return self.per_side if self.per_side is not None else max(101, 4 * n + 1)

    def axis(self, n: int) -> np.ndarray:
        m = self.side_count(n)
        if self.kind == "cl":
            return np.cos(np.linspace(np.pi, 0.0, m))
        return np.linspace(-1.0, 1.0, m)

    def describe(self, n: int) -> str:
        m = self.side_count(n)
        return f"{self.kind}:{m}x{m}"


def _lebesgue_tensor_direct(n: int, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
    """Lebesgue function over a tensor angle grid via batched double sums."""
    nd = _node_data(n)
    N = len(nd.w)
    A, B = len(thetas), len(phis)
    ut = cheb_u_values(n, np.cos(thetas))
    up = cheb_u_values(n, np.cos(phis))
    h = np.cumsum(nd.uy[:, None, :] * up[None, :, :], axis=2)[:, :, ::-1]  # (N,B,n+1)
    lam = np.empty((A, B))
    chunk = max(1, int(3e7 / (N * B)))
    for a0 in range(0, A, chunk):
        a1 = min(A, a0 + chunk)
        g = nd.ux[:, None, :] * ut[None, a0:a1, :]                         # (N,ca,n+1)
        k = np.einsum("nai,nbi->nab", g, h, optimize=True)
        lam[a0:a1, :] = np.einsum("n,nab->ab", nd.weights, np.abs(k))
    return lam


def _lebesgue_tensor_fast(
    n: int, thetas: np.ndarray, phis: np.ndarray, threshold: float
):
    """Lebesgue function over a tensor angle grid via the closed-form kernel."""
    lam = np.empty((len(thetas), len(phis)))
    fallbacks = 0
    for a, theta in enumerate(thetas):
        block, falls = _weighted_block_fast(n, float(theta), phis, threshold)
        fallbacks += falls
        lam[a, :] = np.abs(block).sum(axis=1)
    return lam, fallbacks


def lebesgue_grid_eval(
    n: int,
    spec: GridSpec = GridSpec(),
    cfg: KernelEvalConfig = DEFAULT_CONFIG,
    family: str = "mp",
):
    """Evaluate the Lebesgue function on a tensor grid.

    Returns (xs, ys, lam, fallback_count) with lam[a, b] at (xs[a], ys[b]).
    ``family`` "emp" evaluates the extended node family; its Lebesgue function
    is the base one composed with the coordinatewise contraction onto the
    extreme-row rectangle.
    """
    xs = spec.axis(n)
    ys = xs.copy()
    if family == "emp":
        alpha, beta = emp_scale(n)
        thetas = np.arccos(np.clip(alpha * xs, -1, 1))
        phis = np.arccos(np.clip(beta * ys, -1, 1))
    elif family == "mp":
        thetas = np.arccos(np.clip(xs, -1, 1))
        phis = np.arccos(np.clip(ys, -1, 1))
    else:
        raise ParameterError(f"family must be 'mp' or 'emp', got {family!r}")
    if cfg.resolve(n) is KernelMethod.FAST:
        lam, fallbacks = _lebesgue_tensor_fast(n, thetas, phis, cfg.singular_threshold)
    else:
        lam, fallbacks = _lebesgue_tensor_direct(n, thetas, phis), 0
    return xs, ys, lam, fallbacks


@dataclass(frozen=True)
class LebesgueReport:
    degree: int
    mesh_descriptor: str
    mesh_size: int
    constant_estimate: float
    argmax: Point2
    corner_value: float
    fit_lower: float
    fit_upper: float
    cubic_bound: float
    certified_upper_bound: Optional[float] = None
    fast_fallback_count: int = 0
    family: str = "mp"


def bound_hyperinterp(n: int) -> float:
    """Cubic-order upper bound for the operator norm."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    radicand = (n + 1) * (n + 2) * (n + 3) * (n + 4) * (2 * n * n + 10 * n + 15)
    return math.sqrt(radicand) / (6 * math.sqrt(10))


def subsquare_bound(n: int, delta: float = math.sqrt(3) / 2) -> float:
    """Analytic ceiling for the Lebesgue function on [-delta, delta]^2.

    Equals C_n (n+1)^3 (n/2+1) / (1 - delta^2); at the default delta the
    prefactor is 4 and the bound is O(n^2).
    """
    if n < 2 or n % 2 != 0:
        raise ValueError(f"degree must be even and >= 2, got {n}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return scale_factor(n) * (n + 1) ** 3 * (n // 2 + 1) / (1.0 - delta**2)


def _corner_value(n: int, family: str) -> float:
    """Largest Lebesgue-function value over the four exact corners of Q."""
    cfg = KernelEvalConfig(method=KernelMethod.DIRECT)
    corners = [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)]
    if family == "emp":
        alpha, beta = emp_scale(n)
        corners = [(alpha * x, beta * y) for x, y in corners]
    return max(lebesgue_function(n, c, cfg) for c in corners)


def lebesgue_constant(
    n: int,
    mesh=None,
    cfg: KernelEvalConfig = DEFAULT_CONFIG,
    family: str = "mp",
) -> LebesgueReport:
    """Maximum of the Lebesgue function over an evaluation mesh.

    ``mesh`` is a :class:`GridSpec` (default) or an admissible mesh from
    :mod:`mpinterp.meshes`; in the latter case the report carries the
    certified upper bound  estimate / cos(pi/mu).  Ties in the maximization
    (within 1e-14 relative) resolve to the lexicographically smallest point.
    """
    diagnostics = KernelDiagnostics()
    if mesh is None:
        mesh = GridSpec()
    if isinstance(mesh, GridSpec):
        xs, ys, lam, fallbacks = lebesgue_grid_eval(n, mesh, cfg, family)
        vmax = float(lam.max())
        tol = 1e-14 * max(1.0, vmax)
        cand = np.argwhere(lam >= vmax - tol)
        # argwhere is row-major over ascending (x, y): first hit is smallest
        a, b = cand[0]
        argmax = Point2(float(xs[a]), float(ys[b]))
        descriptor = mesh.describe(n)
        size = lam.size
        certified = None
    else:
        pts = mesh.all_points()
        if len(pts) == 0:
            raise ParameterError("mesh is empty")
        if family == "emp":
            alpha, beta = emp_scale(n)
            eval_pts = pts * (alpha, beta)
        else:
            eval_pts = pts
        vals = np.array(
            [lebesgue_function(n, p, cfg, diagnostics) for p in eval_pts]
        )
        vmax = float(vals.max())
        tol = 1e-14 * max(1.0, vmax)
        cand = np.flatnonzero(vals >= vmax - tol)
        order = np.lexsort((pts[cand, 1], pts[cand, 0]))
        argmax = Point2(*pts[cand[order[0]]])
        descriptor = mesh.describe()
        size = len(pts)
        certified = vmax * mesh.certified_factor if mesh.mu is not None else None
        fallbacks = diagnostics.fallback_count
    return LebesgueReport(
        degree=n,
        mesh_descriptor=descriptor,
        mesh_size=size,
        constant_estimate=vmax,
        argmax=argmax,
        corner_value=_corner_value(n, family),
        fit_lower=(0.7 * n + 1) ** 2,
        fit_upper=(0.75 * n + 1) ** 2,
        cubic_bound=bound_hyperinterp(n),
        certified_upper_bound=certified,
        fast_fallback_count=fallbacks,
        family=family,
    )
