"""Construction of the Morrow-Patterson, Padua and extended node families.

The Morrow-Patterson set of even degree n lives on the square Q = [-1,1]^2
and has (n+1)(n+2)/2 interior points

    x_m = cos(m pi / (n+2)),                      m = 1..n+1,
    y_k = cos(2k pi / (n+3))      for odd m,      k = 1..n/2+1,
    y_k = cos((2k-1) pi / (n+3))  for even m.

The same set arises by sampling a degenerate Lissajous curve at equispaced
parameters (the Padua points of degree n+2) and discarding the boundary
samples; both routes are implemented and cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from .chebkernel import cheb_u
from .errors import DomainError, InvalidDegreeError

#: Euclidean tolerance for merging coincident curve samples.
DEDUP_TOL = 1e-12

#: |coordinate| >= 1 - this counts as lying on the boundary of Q.
BOUNDARY_TOL = 1e-12


class Point2(NamedTuple):
    x: float
    y: float


class NodeFamily(Enum):
    MP = "mp"
    PADUA = "padua"
    EMP = "emp"
    MESH_A = "mesh-a"
    MESH_B = "mesh-b"


@dataclass(frozen=True)
class NodeSet:
    """An ordered family of nodes with optional weights and angle pairs.

    ``points`` is an (N, 2) array; ``weights`` and ``angles`` (the (w, v)
    pairs with x = cos w, y = cos v) are aligned with it when present.
    Instances are immutable; the arrays are marked read-only.
    """

    family: NodeFamily
    degree: int
    points: np.ndarray
    weights: Optional[np.ndarray] = None
    angles: Optional[np.ndarray] = None

    def __post_init__(self):
        for arr in (self.points, self.weights, self.angles):
            if arr is not None:
                arr.setflags(write=False)

    def __len__(self) -> int:
        return self.points.shape[0]

    def point(self, i: int) -> Point2:
        return Point2(float(self.points[i, 0]), float(self.points[i, 1]))


def scale_factor(n: int) -> float:
    """Normalization constant 8 / ((n+2)(n+3)) of the cubature weights."""
    return 8.0 / ((n + 2) * (n + 3))


def _require_even(n: int) -> None:
    if n < 2 or n % 2 != 0:
        raise InvalidDegreeError(f"degree must be even and >= 2, got {n}")


def mp_angle_pairs(n: int) -> np.ndarray:
    """The (w_m, v_k) angle grid of the degree-n set, row-major in (m, k)."""
    _require_even(n)
    pairs = np.empty(((n + 1) * (n // 2 + 1), 2))
    idx = 0
    for m in range(1, n + 2):
        w = m * np.pi / (n + 2)
        for k in range(1, n // 2 + 2):
            v = 2 * k * np.pi / (n + 3) if m % 2 == 1 else (2 * k - 1) * np.pi / (n + 3)
            pairs[idx] = (w, v)
            idx += 1
    return pairs


def morrow_patterson(n: int) -> NodeSet:
    """The Morrow-Patterson set of even degree n, with weights and angles."""
    angles = mp_angle_pairs(n)
    points = np.cos(angles)
    return NodeSet(
        family=NodeFamily.MP,
        degree=n,
        points=points,
        weights=mp_weights(n),
        angles=angles,
    )


def mp_weights(n: int) -> np.ndarray:
    """Cubature weights C_n (1-x_m^2)(1-y_k^2), aligned with morrow_patterson(n)."""
    angles = mp_angle_pairs(n)
    s = np.sin(angles)
    return scale_factor(n) * s[:, 0] ** 2 * s[:, 1] ** 2


def lissajous_point(n: int, t: float, sign: int = -1) -> Point2:
    """Point of the degenerate Lissajous curve generating the degree-n family.

    sign=-1 gives (-cos((n+3)t), -cos((n+2)t)), whose equispaced samples are
    the Padua points of degree n+2; sign=+1 gives the reflected curve whose
    samples are the negated set.
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be +-1, got {sign}")
    return Point2(sign * np.cos((n + 3) * t), sign * np.cos((n + 2) * t))


def lissajous_samples(n: int, count: int, sign: int = -1) -> np.ndarray:
    """``count`` equispaced curve points over t in [0, pi], as an (count, 2) array."""
    t = np.linspace(0.0, np.pi, count)
    return np.stack([sign * np.cos((n + 3) * t), sign * np.cos((n + 2) * t)], axis=1)


def _dedup_clusters(pts: np.ndarray, tol: float = DEDUP_TOL):
    """Group coincident rows of ``pts``; returns (representatives, multiplicities).

    Coincident samples agree to ~1e-15, far below the separation of distinct
    points, so transitive merging of all pairs within ``tol`` recovers the
    exact self-intersection classes.  Output is ordered lexicographically.
    """
    from scipy.spatial import cKDTree

    parent = np.arange(len(pts))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in cKDTree(pts).query_pairs(r=tol, p=np.inf):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    roots = np.array([find(i) for i in range(len(pts))])
    reps_idx = np.unique(roots)
    reps = pts[reps_idx]
    counts = np.array([np.sum(roots == r) for r in reps_idx])
    order = np.lexsort((reps[:, 1], reps[:, 0]))
    return reps[order], counts[order]


def padua(N: int) -> NodeSet:
    """Padua points of degree N >= 1 by sampling the degenerate Lissajous curve.

    Samples the curve at t_k = pi k / (N(N+1)), k = 0..N(N+1), and merges the
    coincident interior self-intersections; (N+1)(N+2)/2 points remain.
    """
    if N < 1:
        raise InvalidDegreeError(f"Padua degree must be >= 1, got {N}")
    k = np.arange(N * (N + 1) + 1)
    t = np.pi * k / (N * (N + 1))
    raw = np.stack([-np.cos((N + 1) * t), -np.cos(N * t)], axis=1)
    reps, _ = _dedup_clusters(raw)
    return NodeSet(family=NodeFamily.PADUA, degree=N, points=reps)


def padua_sample_multiplicities(N: int):
    """Deduplicated Padua points together with per-point sample multiplicities."""
    k = np.arange(N * (N + 1) + 1)
    t = np.pi * k / (N * (N + 1))
    raw = np.stack([-np.cos((N + 1) * t), -np.cos(N * t)], axis=1)
    return _dedup_clusters(raw)


def boundary_mask(points: np.ndarray, tol: float = BOUNDARY_TOL) -> np.ndarray:
    """True for points on the boundary of Q (|x| or |y| within tol of 1)."""
    return (np.abs(points[:, 0]) >= 1.0 - tol) | (np.abs(points[:, 1]) >= 1.0 - tol)


def mp_from_padua(n: int) -> NodeSet:
    """Degree-n Morrow-Patterson set obtained from Padua(n+2) minus the edge points.

    The interior Padua points are matched to the direct construction (they
    agree to ~1e-14) and returned in the canonical row-major ordering with
    the standard weights and angles attached.
    """
    _require_even(n)
    pad = padua(n + 2)
    interior = pad.points[~boundary_mask(pad.points)]
    direct = morrow_patterson(n)
    if len(interior) != len(direct):
        raise RuntimeError(
            f"edge removal left {len(interior)} points, expected {len(direct)}"
        )
    # match each canonical node to its sampled twin
    used = np.zeros(len(interior), dtype=bool)
    matched = np.empty_like(direct.points)
    for i, (x, y) in enumerate(direct.points):
        d = np.max(np.abs(interior - (x, y)), axis=1)
        j = int(np.argmin(d))
        if d[j] > 1e-10 or used[j]:
            raise RuntimeError("sampled points do not match the direct construction")
        used[j] = True
        matched[i] = interior[j]
    return NodeSet(
        family=NodeFamily.MP,
        degree=n,
        points=matched,
        weights=direct.weights,
        angles=direct.angles,
    )


def extended_mp(n: int) -> NodeSet:
    """Extended Morrow-Patterson points: coordinatewise rescaled so the
    extreme rows touch the boundary of Q.

    x is divided by cos(pi/(n+2)) and y by cos(pi/(n+3)); results are clipped
    to [-1, 1] to absorb ~1e-16 rounding on the rows that map onto the
    boundary.
    """
    base = morrow_patterson(n)
    alpha = np.cos(np.pi / (n + 2))
    beta = np.cos(np.pi / (n + 3))
    pts = base.points / (alpha, beta)
    if np.any(np.abs(pts) > 1.0 + 1e-14):
        raise RuntimeError("rescaled point left the square")
    return NodeSet(family=NodeFamily.EMP, degree=n, points=np.clip(pts, -1.0, 1.0))


def emp_scale(n: int) -> tuple[float, float]:
    """The (alpha, beta) contraction mapping EMP evaluation points into MP ones."""
    return np.cos(np.pi / (n + 2)), np.cos(np.pi / (n + 3))


def mp_angle_grid(nu: int) -> np.ndarray:
    """Angle grid of degree nu for mesh construction, any nu >= 1.

    Even nu reproduces the angles of ``morrow_patterson(nu)``.  Odd nu uses
    the same parity rule with row-dependent lengths: odd rows carry the even
    multiples 2k pi/(nu+3) up to (nu+1)pi/(nu+3), even rows the odd multiples
    up to (nu+2)pi/(nu+3).  Total (nu+1)(nu+2)/2 pairs either way.
    """
    if nu < 1:
        raise InvalidDegreeError(f"degree must be >= 1, got {nu}")
    if nu % 2 == 0:
        return mp_angle_pairs(nu)
    pairs = []
    for m in range(1, nu + 2):
        w = m * np.pi / (nu + 2)
        if m % 2 == 1:
            for k in range(1, (nu + 1) // 2 + 1):
                pairs.append((w, 2 * k * np.pi / (nu + 3)))
        else:
            for k in range(1, (nu + 3) // 2 + 1):
                pairs.append((w, (2 * k - 1) * np.pi / (nu + 3)))
    return np.asarray(pairs)


@dataclass(frozen=True)
class RectGrid:
    """A rectangular coordinate grid: the product of two ascending lists."""

    xs: np.ndarray
    ys: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.xs), len(self.ys)


@dataclass(frozen=True)
class InterlacingDecomposition:
    """Split of the degree-n set into two interlacing rectangular grids.

    ``grid_u`` collects the odd-m rows, ``grid_x`` the even-m rows.  The
    associated lower index set ``lower_set`` has the cardinality of the full
    node set and coincides with the total-degree-n triangle.
    """

    grid_u: RectGrid
    grid_x: RectGrid
    lower_set: list

    @property
    def cardinality(self) -> int:
        return len(self.lower_set)


def _interlaced(a: np.ndarray, b: np.ndarray) -> bool:
    """Strict coordinate interlacing: merging a and b alternates membership."""
    merged = np.concatenate([a, b])
    labels = np.concatenate([np.zeros(len(a), dtype=int), np.ones(len(b), dtype=int)])
    order = np.argsort(merged)
    lab = labels[order]
    return all(lab[i] != lab[i + 1] for i in range(len(lab) - 1))


def interlacing_decomposition(n: int) -> InterlacingDecomposition:
    """Decompose the degree-n set by row parity and build the lower set.

    Verifies the interlacing order conditions and the cardinality identity
    |L| = (mu+1)(nu+1) + (r+1)(s+1) = (n+1)(n+2)/2.  A violation raises
    RuntimeError (it would indicate a construction bug, not bad input).
    """
    _require_even(n)
    xs_odd = np.sort(np.cos(np.arange(1, n + 2, 2) * np.pi / (n + 2)))
    xs_even = np.sort(np.cos(np.arange(2, n + 1, 2) * np.pi / (n + 2)))
    ys_odd = np.sort(np.cos(2 * np.arange(1, n // 2 + 2) * np.pi / (n + 3)))
    ys_even = np.sort(np.cos((2 * np.arange(1, n // 2 + 2) - 1) * np.pi / (n + 3)))
    if not (_interlaced(xs_odd, xs_even) and _interlaced(ys_odd, ys_even)):
        raise RuntimeError("interlacing violated")

    mu, nu = len(xs_odd) - 1, len(ys_odd) - 1      # = n/2, n/2
    r, s = len(xs_even) - 1, len(ys_even) - 1      # = n/2 - 1, n/2
    if not (abs(r - mu) <= 1 and abs(s - nu) <= 1):
        raise RuntimeError("grid shapes not within interlacing bounds")

    # K1 = lower triangle {i+j <= n/2-1} inside I_{r,s}; its rotated
    # complement K2 equals K1, and the assembled L is the degree-n triangle.
    k1 = [(i, j) for i in range(r + 1) for j in range(s + 1) if i + j <= n // 2 - 1]
    k2 = [
        (i, j)
        for i in range(r + 1)
        for j in range(s + 1)
        if (r - i, s - j) not in set(k1)
    ]
    lower = [(i, j) for i in range(mu + 1) for j in range(nu + 1)]
    lower += [(i + mu + 1, j) for (i, j) in k1]
    lower += [(i, j + nu + 1) for (i, j) in k2]
    expected = (mu + 1) * (nu + 1) + (r + 1) * (s + 1)
    if len(set(lower)) != expected or expected != (n + 1) * (n + 2) // 2:
        raise RuntimeError("lower set cardinality mismatch")
    return InterlacingDecomposition(
        grid_u=RectGrid(xs_odd, ys_odd),
        grid_x=RectGrid(xs_even, ys_even),
        lower_set=sorted(lower),
    )


def vanishing_polynomial(n: int, j: int, x1: float, x2: float) -> float:
    """The two-term product polynomial of family degree n, 0 <= j <= n:

        U_j(x1) U_{n-j}(x2) + U_{n-j-1}(x1) U_j(x2)

    with the U_{-1} = 0 convention covering j = n.  The common zeros of the
    family of degree n are exactly the node set of degree n-1: a nonzero
    polynomial of total degree n cannot vanish on a set that is unisolvent
    for that same degree, so the annihilating family sits one degree above
    the nodes it cuts out.
    """
    if not 0 <= j <= n:
        raise ValueError(f"j must satisfy 0 <= j <= n, got j={j}, n={n}")
    if abs(x1) > 1.0 + 1e-12 or abs(x2) > 1.0 + 1e-12:
        raise DomainError("arguments outside the square")
    return cheb_u(j, x1) * cheb_u(n - j, x2) + cheb_u(n - j - 1, x1) * cheb_u(j, x2)


class EquispacingReport(NamedTuple):
    degree: int
    min_nearest: float
    max_nearest: float
    ratio: float


def dubiner_equispacing_check(n: int) -> EquispacingReport:
    """Nearest-neighbor statistics of the node set in the Dubiner metric.

    On the angle grid the Dubiner metric is the max-metric, so the
    nearest-neighbor distances are computed there directly.
    """
    from .meshes import dubiner_distance  # local import; meshes depends on nodes

    ns = morrow_patterson(n)
    pts = [ns.point(i) for i in range(len(ns))]
    nearest = []
    for i, p in enumerate(pts):
        d = min(dubiner_distance(p, q) for j, q in enumerate(pts) if j != i)
        nearest.append(d)
    lo, hi = min(nearest), max(nearest)
    return EquispacingReport(n, lo, hi, hi / lo)
