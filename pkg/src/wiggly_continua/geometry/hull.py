"""
Convex hull, rotating calipers and strip fitting.

Planar hulls come from Andrew's monotone chain; large inputs are first
reduced with Qhull. Width and diameter are read off the hull with a single
rotating-calipers pass over its antipodal pairs.
"""

import logging
import math

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from ..exceptions import EmptyPointSetError
from .types import StripFit

logger = logging.getLogger("wiggly-continua.geometry")

QHULL_MIN_POINTS = 64


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def _monotone_chain(points: np.ndarray) -> np.ndarray:
    pts = np.unique(points, axis=0)
    if len(pts) <= 2:
        return pts

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return np.array(lower[:-1] + upper[:-1])


def convex_hull(points: np.ndarray) -> np.ndarray:
    """
    Compute the convex hull of a planar point set.

    Args:
        points: Array of shape (n, 2)

    Returns:
        Hull vertices in counter-clockwise order, a subset of the input.
        Collinear input yields its two extreme points; a single distinct
        point yields one vertex.

    Raises:
        EmptyPointSetError: If ``points`` is empty
    """
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        error_msg = "convex hull of an empty point set"
        raise EmptyPointSetError(error_msg)
    pts = pts.reshape(-1, 2)

    if len(pts) >= QHULL_MIN_POINTS:
        try:
            hull = ConvexHull(pts)
            # Qhull keeps near-collinear vertices; rerun the chain on its output
            pts = pts[hull.vertices]
        except QhullError:
            logger.debug("Qhull rejected degenerate input, using monotone chain")
    return _monotone_chain(pts)


def _calipers(hull: np.ndarray) -> tuple[float, np.ndarray, float, float]:
    """Width, inward normal of the narrowest edge, anchor and diameter."""
    h = len(hull)
    nxt = np.roll(hull, -1, axis=0)
    edges = nxt - hull
    lengths = np.hypot(edges[:, 0], edges[:, 1])

    best_width = math.inf
    best_normal = np.array([0.0, 1.0])
    best_anchor = 0.0
    diameter = 0.0
    j = 1
    for i in range(h):
        e = edges[i]
        if lengths[i] == 0.0:
            continue

        def height(k: int, i: int = i, e: np.ndarray = e) -> float:
            d = hull[k] - hull[i]
            return float(e[0] * d[1] - e[1] * d[0])

        steps = 0
        while height((j + 1) % h) > height(j) and steps < h:
            j = (j + 1) % h
            steps += 1

        after = hull[(j + 1) % h]
        diameter = max(
            diameter,
            float(np.linalg.norm(hull[j] - hull[i])),
            float(np.linalg.norm(hull[j] - nxt[i])),
            float(np.linalg.norm(after - hull[i])),
            float(np.linalg.norm(after - nxt[i])),
        )
        width = height(j) / lengths[i]
        normal = np.array([-e[1], e[0]]) / lengths[i]
        low = float(hull[i] @ normal)
        anchor = low + width / 2.0

        # canonical orientation: angle in [0, pi)
        if normal[1] < 0 or (normal[1] == 0 and normal[0] < 0):
            normal = -normal
            anchor = -anchor
        if _prefer(width, normal, best_width, best_normal):
            best_width, best_normal, best_anchor = width, normal, anchor
    return best_width, best_normal, best_anchor, diameter


def _prefer(
    width: float, normal: np.ndarray, best_width: float, best_normal: np.ndarray
) -> bool:
    if not math.isfinite(best_width):
        return True
    tol = 1e-12 * max(1.0, best_width)
    if width < best_width - tol:
        return True
    if width <= best_width + tol:
        return math.atan2(normal[1], normal[0]) < math.atan2(
            best_normal[1], best_normal[0]
        )
    return False


def min_width_strip(points: np.ndarray) -> StripFit:
    """
    Find the narrowest strip containing a planar point set.

    Ties between equally narrow strips are broken in favour of the normal
    with the smallest angle in [0, π).

    Args:
        points: Array of shape (n, 2)

    Returns:
        The strip fit; fewer than three distinct or collinear points give
        width 0

    Raises:
        EmptyPointSetError: If ``points`` is empty
    """
    hull = convex_hull(points)
    if len(hull) == 1:
        return StripFit(direction=(0.0, 1.0), width=0.0, anchor=float(hull[0][1]))
    if len(hull) == 2:
        d = hull[1] - hull[0]
        normal = np.array([-d[1], d[0]]) / float(np.hypot(d[0], d[1]))
        if normal[1] < 0 or (normal[1] == 0 and normal[0] < 0):
            normal = -normal
        return StripFit(
            direction=(float(normal[0]), float(normal[1])),
            width=0.0,
            anchor=float(hull[0] @ normal),
        )
    width, normal, anchor, _ = _calipers(hull)
    return StripFit(
        direction=(float(normal[0]), float(normal[1])),
        width=max(width, 0.0),
        anchor=anchor,
    )


def principal_axis_fit(points: np.ndarray) -> StripFit:
    """
    Approximate strip fit for point sets in three or more dimensions.

    The axis is the least-squares line through the centroid; the reported
    width is twice the largest distance from that line.
    """
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        error_msg = "strip fit of an empty point set"
        raise EmptyPointSetError(error_msg)
    centroid = pts.mean(axis=0)
    centred = pts - centroid
    if len(pts) == 1 or not np.any(centred):
        axis = np.zeros(pts.shape[1])
        axis[0] = 1.0
        return StripFit(tuple(float(a) for a in axis), 0.0, 0.0, approximate=True)
    _, _, vt = np.linalg.svd(centred, full_matrices=False)
    axis = vt[0]
    along = centred @ axis
    offsets = centred - np.outer(along, axis)
    width = 2.0 * float(np.max(np.linalg.norm(offsets, axis=1)))
    return StripFit(
        direction=tuple(float(a) for a in axis),
        width=width,
        anchor=float(centroid @ axis),
        approximate=True,
    )


def convex_hull_diameter(points: np.ndarray) -> float:
    """
    Diameter of a point set, read off its convex hull.

    Planar sets use rotating calipers; higher-dimensional sets compare all
    pairs of Qhull vertices.

    Raises:
        EmptyPointSetError: If ``points`` is empty
    """
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        error_msg = "diameter of an empty point set"
        raise EmptyPointSetError(error_msg)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.shape[1] == 1:
        return float(pts.max() - pts.min())
    if pts.shape[1] == 2:
        hull = convex_hull(pts)
        if len(hull) == 1:
            return 0.0
        if len(hull) == 2:
            return float(np.linalg.norm(hull[1] - hull[0]))
        return _calipers(hull)[3]

    vertices = pts
    try:
        vertices = pts[ConvexHull(pts).vertices]
    except QhullError:
        logger.debug("Qhull rejected degenerate input, comparing all pairs")
    diffs = vertices[:, None, :] - vertices[None, :, :]
    return float(np.sqrt((diffs**2).sum(axis=-1)).max())
