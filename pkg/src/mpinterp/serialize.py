"""CSV / JSON serialization of node sets and meshes.

All floating-point values are written with 17 significant digits, which
round-trips IEEE doubles exactly.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .nodes import NodeSet


def fmt(v: float) -> str:
    """17-significant-digit decimal form of a double."""
    return format(float(v), ".17g")


def nodeset_to_csv(ns: NodeSet, extras_mask: Optional[np.ndarray] = None) -> str:
    """CSV form: one node per row.

    Plain node sets get columns ``x,y`` plus ``weight`` when weights are
    present.  Meshes pass ``extras_mask`` and get columns ``x,y,is_extra``.
    """
    lines = []
    if extras_mask is not None:
        lines.append("x,y,is_extra")
        for (x, y), e in zip(ns.points, extras_mask):
            lines.append(f"{fmt(x)},{fmt(y)},{int(e)}")
    elif ns.weights is not None:
        lines.append("x,y,weight")
        for (x, y), w in zip(ns.points, ns.weights):
            lines.append(f"{fmt(x)},{fmt(y)},{fmt(w)}")
    else:
        lines.append("x,y")
        for x, y in ns.points:
            lines.append(f"{fmt(x)},{fmt(y)}")
    return "\n".join(lines) + "\n"


def nodeset_to_json(ns: NodeSet, extras_mask: Optional[np.ndarray] = None) -> str:
    """JSON object {family, degree, points, weights[, is_extra]}."""
    parts = [
        f'"family": "{ns.family.value}"',
        f'"degree": {ns.degree}',
        "\"points\": ["
        + ", ".join(f"[{fmt(x)}, {fmt(y)}]" for x, y in ns.points)
        + "]",
    ]
    if ns.weights is not None:
        parts.append('"weights": [' + ", ".join(fmt(w) for w in ns.weights) + "]")
    else:
        parts.append('"weights": null')
    if extras_mask is not None:
        parts.append('"is_extra": [' + ", ".join(str(int(e)) for e in extras_mask) + "]")
    return "{" + ", ".join(parts) + "}\n"


def xy_table_to_csv(points: np.ndarray, header: str = "x,y") -> str:
    """Bare coordinate table (used for curve samples)."""
    lines = [header]
    for row in points:
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"
