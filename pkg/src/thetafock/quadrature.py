"""Weighted inner products on the strip and on the base interval.

Strip inner product for the Gaussian-weighted space on S = [0,1] x R:

    <f, g> = integral over S of f(z) conj(g(z)) exp(-nu*|z|^2) dm(z),

computed as a trapezoid rule in x (spectrally accurate for 1-periodic
integrands) tensored with Gauss-Hermite in y under the substitution
u = sqrt(nu) * (y - y_shift).  The Gauss-Hermite weight exp(-u^2) is
removed analytically, so the combined node weight carries the exponent
u^2 - nu*|z|^2, which is linear in y and never overflows.  The shift
recenters the rule on the Gaussian bump of the integrand; for a pair of
Fourier modes n and m of the space with character alpha the bump sits at
y = -pi*(alpha + (n+m)/2)/nu.

Line inner product on [0, sqrt(2)] is a plain trapezoid rule, spectrally
accurate for the sqrt(2)-periodic functions it is used on.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import DomainError, EvaluationError

SQRT2 = math.sqrt(2.0)


@lru_cache(maxsize=32)
def _hermgauss(order):
    return np.polynomial.hermite.hermgauss(order)


@dataclass(frozen=True)
class StripScheme:
    """Tensor quadrature on the strip: trapezoid nodes in x, Gauss-Hermite
    order in y, and the recentering shift of the y rule."""

    x_points: int = 64
    y_order: int = 64
    y_shift: float = 0.0

    def __post_init__(self):
        if self.x_points < 4:
            raise DomainError(f"x_points must be >= 4, got {self.x_points}")
        if self.y_order < 8:
            raise DomainError(f"y_order must be >= 8, got {self.y_order}")
        if not math.isfinite(self.y_shift):
            raise DomainError(f"y_shift must be finite, got {self.y_shift}")

    @classmethod
    def centered(cls, nu, alpha, n_bar, x_points=64, y_order=64):
        """Scheme recentered on the Gaussian bump of mode index n_bar
        (use the midpoint (n+m)/2 for a pair of modes n, m)."""
        if nu <= 0.0:
            raise DomainError(f"nu must be positive, got {nu}")
        return cls(x_points=x_points, y_order=y_order, y_shift=-math.pi * (alpha + n_bar) / nu)

    def doubled(self):
        return StripScheme(2 * self.x_points, 2 * self.y_order, self.y_shift)


@dataclass(frozen=True)
class LineScheme:
    """Trapezoid rule with q_points nodes on [0, sqrt(2)]."""

    q_points: int = 256

    def __post_init__(self):
        if self.q_points < 4:
            raise DomainError(f"q_points must be >= 4, got {self.q_points}")

    def doubled(self):
        return LineScheme(2 * self.q_points)


def _trapezoid_weights(n, length):
    w = np.full(n, length / (n - 1))
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def _evaluate_on(f, nodes, label):
    """Evaluate a callable on an ndarray of nodes, falling back to pointwise
    evaluation for scalar-only callables, and check finiteness."""
    vals = None
    try:
        cand = np.asarray(f(nodes), dtype=complex)
        if cand.shape == nodes.shape:
            vals = cand
    except Exception:
        vals = None
    if vals is None:
        vals = np.vectorize(f, otypes=[complex])(nodes)
    bad = ~np.isfinite(vals)
    if bad.any():
        where = nodes[bad].ravel()[0]
        raise EvaluationError(f"{label} returned a non-finite value at node {where}")
    return vals


def strip_inner_product(f, g, nu, scheme=StripScheme()):
    """Gaussian-weighted inner product <f, g> on the strip [0,1] x R.

    f and g are callables of a complex argument (vectorized callables are
    evaluated on the full node grid at once).  Conjugate-linear in g.
    """
    if nu <= 0.0:
        raise DomainError(f"nu must be positive, got {nu}")
    xs = np.linspace(0.0, 1.0, scheme.x_points)
    wx = _trapezoid_weights(scheme.x_points, 1.0)
    u, wu = _hermgauss(scheme.y_order)
    ys = u / math.sqrt(nu) + scheme.y_shift
    grid = xs[:, None] + 1j * ys[None, :]
    fv = _evaluate_on(f, grid, "f")
    gv = _evaluate_on(g, grid, "g")
    # exp(-u^2) of the Gauss-Hermite weight cancels analytically against the
    # substitution; u^2 - nu*(x^2 + y^2) is linear in y so it never overflows.
    logw = u[None, :] ** 2 - nu * (xs[:, None] ** 2 + ys[None, :] ** 2)
    weights = np.exp(logw) * wu[None, :] / math.sqrt(nu)
    cell = fv * np.conj(gv) * weights
    return complex(np.sum(cell * wx[:, None]))


def line_inner_product(phi1, phi2, scheme=LineScheme()):
    """Plain L^2 inner product <phi1, phi2> on the interval [0, sqrt(2)]."""
    qs = np.linspace(0.0, SQRT2, scheme.q_points)
    w = _trapezoid_weights(scheme.q_points, SQRT2)
    v1 = _evaluate_on(phi1, qs, "phi1")
    v2 = _evaluate_on(phi2, qs, "phi2")
    return complex(np.sum(v1 * np.conj(v2) * w))
