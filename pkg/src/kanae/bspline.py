"""Uniform B-spline basis functions on an extended knot grid.

Every edge activation of a KAN layer is a linear combination of the basis
functions defined here.  The grid covers ``[domain_min, domain_max]`` with
``grid_size`` equal intervals and is extended ``degree`` extra steps beyond
each end, so that exactly ``grid_size + degree`` basis functions live on it.
Evaluation uses the Cox-de Boor recursion, vectorized over batches of inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SplineGrid",
    "make_grid",
    "basis_eval",
    "basis_eval_batch",
    "basis_derivative",
    "basis_derivative_batch",
]


@dataclass(frozen=True)
class SplineGrid:
    """Knot layout and degree shared by all edges of a KAN layer.

    Attributes
    ----------
    grid_size : int
        Number of intervals between ``domain_min`` and ``domain_max``.
    degree : int
        Polynomial degree of the basis functions.
    domain_min, domain_max : float
        Interval the grid is built on; inputs are expected (but not
        required) to live inside it.
    knots : np.ndarray
        ``grid_size + 2 * degree + 1`` uniformly spaced knots, extended
        ``degree`` steps beyond each end of the domain.  Read-only.
    """

    grid_size: int
    degree: int
    domain_min: float
    domain_max: float
    knots: np.ndarray

    def basis_count(self) -> int:
        """Number of basis functions supported on this grid."""
        return self.grid_size + self.degree

    @property
    def spacing(self) -> float:
        """Knot spacing ``(domain_max - domain_min) / grid_size``."""
        return (self.domain_max - self.domain_min) / self.grid_size


def make_grid(
    grid_size: int,
    degree: int,
    domain_min: float = -1.0,
    domain_max: float = 1.0,
) -> SplineGrid:
    """Build a uniform extended knot grid.

    Parameters
    ----------
    grid_size : int
        Number of grid intervals, at least 1.
    degree : int
        Spline degree, at least 0.
    domain_min, domain_max : float
        Domain endpoints with ``domain_min < domain_max``.

    Returns
    -------
    SplineGrid
        Grid whose knots hit the domain endpoints exactly at indices
        ``degree`` and ``grid_size + degree``.
    """
    if grid_size < 1:
        raise ValueError(f"grid_size must be >= 1, got {grid_size}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if not (np.isfinite(domain_min) and np.isfinite(domain_max)):
        raise ValueError("domain endpoints must be finite")
    if domain_min >= domain_max:
        raise ValueError(
            f"domain_min must be < domain_max, got [{domain_min}, {domain_max}]"
        )
    # Affine blend instead of min + i*h so both endpoints land exactly.
    t = np.arange(-degree, grid_size + degree + 1, dtype=np.float64) / grid_size
    knots = domain_min * (1.0 - t) + domain_max * t
    knots.flags.writeable = False
    return SplineGrid(
        grid_size=grid_size,
        degree=degree,
        domain_min=float(domain_min),
        domain_max=float(domain_max),
        knots=knots,
    )


def _bases_up_to(knots: np.ndarray, xs: np.ndarray, degree: int) -> np.ndarray:
    """Degree-``degree`` basis values for a flat input vector.

    Cox-de Boor recursion over the whole batch at once.  With uniform
    extended knots no two knots coincide, so the denominators never vanish.
    Returns shape ``(len(xs), len(knots) - 1 - degree)``.
    """
    t = knots.astype(xs.dtype, copy=False)
    x = xs[:, None]
    bases = ((x >= t[:-1]) & (x < t[1:])).astype(xs.dtype)
    for d in range(1, degree + 1):
        left = (x - t[: -(d + 1)]) / (t[d:-1] - t[: -(d + 1)]) * bases[:, :-1]
        right = (t[d + 1 :] - x) / (t[d + 1 :] - t[1:-d]) * bases[:, 1:]
        bases = left + right
    return bases


def basis_eval_batch(grid: SplineGrid, xs: np.ndarray) -> np.ndarray:
    """Evaluate all basis functions at each point of a batch.

    Parameters
    ----------
    grid : SplineGrid
    xs : np.ndarray
        Flat vector of finite evaluation points.

    Returns
    -------
    np.ndarray
        Matrix of shape ``(len(xs), grid.basis_count())``; row ``i`` holds
        the basis values at ``xs[i]``.
    """
    xs = np.asarray(xs)
    if xs.ndim != 1:
        raise ValueError(f"xs must be 1-d, got shape {xs.shape}")
    if not np.issubdtype(xs.dtype, np.floating):
        xs = xs.astype(np.float64)
    if xs.size and not np.isfinite(xs).all():
        raise ValueError("evaluation points must be finite")
    return _bases_up_to(grid.knots, xs, grid.degree)


def basis_eval(grid: SplineGrid, x: float) -> np.ndarray:
    """Evaluate all basis functions at a single point.

    Identical (bitwise) to the corresponding row of :func:`basis_eval_batch`.
    """
    return basis_eval_batch(grid, np.array([x], dtype=np.float64))[0]


def basis_derivative_batch(grid: SplineGrid, xs: np.ndarray) -> np.ndarray:
    """First derivatives of all basis functions at each point of a batch.

    Uses the standard recurrence expressing a degree-``K`` derivative in
    terms of two degree-``K-1`` basis functions.  Requires ``degree >= 1``.
    """
    k = grid.degree
    if k < 1:
        raise ValueError("basis derivative requires degree >= 1")
    xs = np.asarray(xs)
    if xs.ndim != 1:
        raise ValueError(f"xs must be 1-d, got shape {xs.shape}")
    if not np.issubdtype(xs.dtype, np.floating):
        xs = xs.astype(np.float64)
    if xs.size and not np.isfinite(xs).all():
        raise ValueError("evaluation points must be finite")
    t = grid.knots.astype(xs.dtype, copy=False)
    lower = _bases_up_to(grid.knots, xs, k - 1)
    denom_left = t[k:-1] - t[: -(k + 1)]
    denom_right = t[k + 1 :] - t[1:-k]
    return k * (lower[:, :-1] / denom_left - lower[:, 1:] / denom_right)


def basis_derivative(grid: SplineGrid, x: float) -> np.ndarray:
    """First derivatives of all basis functions at a single point."""
    return basis_derivative_batch(grid, np.array([x], dtype=np.float64))[0]
