"""Dubiner-metric geometry and admissible polynomial meshes on the square.

Two supplemented node grids (variants A and B) and the bare grid of doubled
degree are norming sets: for any bivariate polynomial p of total degree n and
any mu > 2,

    sup_Q |p|  <=  (1 / cos(pi/mu)) * max over the mesh of |p|,

where the mesh degree is ceil(mu*n) (A, B) or ceil(2*mu*n) (bare grid).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .chebkernel import cheb_u_values
from .errors import DomainError, ParameterError
from .nodes import NodeFamily, NodeSet, mp_angle_grid


def dubiner_distance(p, q) -> float:
    """max(|arccos px - arccos qx|, |arccos py - arccos qy|), in [0, pi]."""
    vals = []
    for (a, b) in ((p[0], q[0]), (p[1], q[1])):
        if abs(a) > 1 + 1e-12 or abs(b) > 1 + 1e-12:
            raise DomainError("point outside the square")
        vals.append(abs(math.acos(min(1, max(-1, a))) - math.acos(min(1, max(-1, b)))))
    return max(vals)


@dataclass(frozen=True)
class AdmissibleMesh:
    """A node grid plus (possibly empty) supplementary points.

    ``mu`` is attached when the mesh was built to certify a sup-norm bound;
    the certified factor is then 1 / cos(pi/mu).
    """

    base: NodeSet
    extras: np.ndarray           # (k, 2) points, possibly k = 0
    extra_angles: np.ndarray     # matching (w, v) pairs
    nu: int
    mu: Optional[float] = None

    def __post_init__(self):
        self.extras.setflags(write=False)
        self.extra_angles.setflags(write=False)

    @property
    def certified_factor(self) -> float:
        if self.mu is None:
            raise ParameterError("mesh carries no certification parameter mu")
        return 1.0 / math.cos(math.pi / self.mu)

    def all_points(self) -> np.ndarray:
        if len(self.extras) == 0:
            return self.base.points
        return np.vstack([self.base.points, self.extras])

    def all_angles(self) -> np.ndarray:
        if len(self.extra_angles) == 0:
            return self.base.angles
        return np.vstack([self.base.angles, self.extra_angles])

    def extras_mask(self) -> np.ndarray:
        return np.arange(len(self.base) + len(self.extras)) >= len(self.base)

    def describe(self) -> str:
        name = self.base.family.value
        tag = f"{name}:nu={self.nu}"
        if self.mu is not None:
            tag += f",mu={self.mu:g}"
        return tag

    def __len__(self) -> int:
        return len(self.base) + len(self.extras)


def _grid_nodeset(nu: int, family: NodeFamily) -> NodeSet:
    angles = mp_angle_grid(nu)
    return NodeSet(family=family, degree=nu, points=np.cos(angles), angles=angles)


def mesh_a(nu: int) -> AdmissibleMesh:
    """Degree-nu grid supplemented by two corners of Q.

    The supplements plug the two empty cells of the angle-space tiling:
    (1,1),(-1,1) for even nu and (1,1),(1,-1) for odd nu.
    """
    if nu % 2 == 0:
        extra_angles = np.array([[0.0, 0.0], [np.pi, 0.0]])
    else:
        extra_angles = np.array([[0.0, 0.0], [0.0, np.pi]])
    return AdmissibleMesh(
        base=_grid_nodeset(nu, NodeFamily.MESH_A),
        extras=np.cos(extra_angles),
        extra_angles=extra_angles,
        nu=nu,
    )


def mesh_b(nu: int) -> AdmissibleMesh:
    """Degree-nu grid supplemented by two interior points.

    Same covering radius as variant A but confined to the closed rectangle
    spanned by the extreme node rows.
    """
    if nu % 2 == 0:
        extra_angles = np.array(
            [[np.pi / (nu + 2), np.pi / (nu + 3)],
             [(nu + 1) * np.pi / (nu + 2), np.pi / (nu + 3)]]
        )
    else:
        extra_angles = np.array(
            [[np.pi / (nu + 2), np.pi / (nu + 3)],
             [np.pi / (nu + 2), (nu + 2) * np.pi / (nu + 3)]]
        )
    return AdmissibleMesh(
        base=_grid_nodeset(nu, NodeFamily.MESH_B),
        extras=np.cos(extra_angles),
        extra_angles=extra_angles,
        nu=nu,
    )


def covering_radius(mesh, probe_density: int = 800) -> float:
    """Largest Dubiner distance from the square to the mesh, probed on a grid.

    The Dubiner metric is the max-metric in angle space, so the radius is
    estimated by nearest-neighbor queries over a probe_density^2 angle grid;
    the answer carries a resolution of about pi/probe_density.
    """
    if probe_density < 100:
        raise ParameterError(f"probe_density must be >= 100, got {probe_density}")
    if isinstance(mesh, AdmissibleMesh):
        angles = mesh.all_angles()
    else:
        pts = np.asarray(mesh, dtype=float).reshape(-1, 2)
        if len(pts) == 0:
            raise ParameterError("mesh is empty")
        angles = np.arccos(np.clip(pts, -1, 1))
    from scipy.spatial import cKDTree

    t = np.linspace(0.0, np.pi, probe_density)
    tree = cKDTree(angles)
    worst = 0.0
    rows_per_block = max(1, 200_000 // probe_density)
    for r0 in range(0, probe_density, rows_per_block):
        rows = t[r0 : r0 + rows_per_block]
        W, V = np.meshgrid(rows, t, indexing="ij")
        probes = np.column_stack([W.ravel(), V.ravel()])
        d, _ = tree.query(probes, p=np.inf)
        worst = max(worst, float(d.max()))
    return worst


def certified_sup_norm(
    poly_eval: Callable, n: int, mu: float, variant: str = "A"
) -> tuple[float, AdmissibleMesh]:
    """Certified upper bound for sup_Q |p| of a degree-n polynomial.

    ``poly_eval`` must accept coordinate arrays.  The caller is responsible
    for deg p <= n; nothing is checked.  Variants: "A" and "B" use the
    supplemented meshes of degree ceil(mu*n), "MP2" the bare grid of degree
    ceil(2*mu*n).  Requires mu > 2.
    """
    if mu <= 2:
        raise ParameterError(f"mu must exceed 2, got {mu}")
    variant = variant.upper()
    if variant == "A":
        mesh = mesh_a(math.ceil(mu * n))
    elif variant == "B":
        mesh = mesh_b(math.ceil(mu * n))
    elif variant == "MP2":
        nu = math.ceil(2 * mu * n)
        mesh = AdmissibleMesh(
            base=_grid_nodeset(nu, NodeFamily.MP),
            extras=np.empty((0, 2)),
            extra_angles=np.empty((0, 2)),
            nu=nu,
        )
    else:
        raise ParameterError(f"variant must be A, B or MP2, got {variant!r}")
    mesh = replace(mesh, mu=float(mu))
    pts = mesh.all_points()
    vals = np.abs(np.asarray(poly_eval(pts[:, 0], pts[:, 1]), dtype=float))
    return float(vals.max()) * mesh.certified_factor, mesh


def random_polynomial(n: int, rng: np.random.Generator):
    """Random element of the degree-n space with standard normal coefficients
    in the orthonormal product basis.  Returns a vectorized evaluator.
    """
    coeffs = np.zeros((n + 1, n + 1))
    for i in range(n + 1):
        coeffs[i, : n - i + 1] = rng.standard_normal(n - i + 1)
    scale = 2.0 / np.pi  # orthonormalization of the product basis

    def eval_poly(xs, ys):
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        ys = np.atleast_1d(np.asarray(ys, dtype=float))
        ux = cheb_u_values(n, xs)
        uy = cheb_u_values(n, ys)
        return scale * np.einsum("pi,ij,pj->p", ux, coeffs, uy)

    return eval_poly


def fine_grid_norm(poly_eval: Callable, degree_hint: int = 0, per_side: int = 201) -> float:
    """Reference sup-norm estimate on a per_side^2 Chebyshev-Lobatto grid."""
    x = np.cos(np.linspace(np.pi, 0.0, per_side))
    X, Y = np.meshgrid(x, x, indexing="ij")
    vals = np.abs(np.asarray(poly_eval(X.ravel(), Y.ravel()), dtype=float))
    return float(vals.max())
