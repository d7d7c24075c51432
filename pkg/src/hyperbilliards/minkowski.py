"""Linear algebra of 3D Minkowski space with signature (-, +, +).

Index 0 is the time-like axis throughout; vectors are plain numpy arrays
of shape (3,). The hyperboloid of one sheet is the level set <x, x> = 1.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NonPositiveNormError

# Metric signature diag(-1, 1, 1) as a vector of signs.
METRIC_SIGNS = np.array([-1.0, 1.0, 1.0])

# Relative tolerance for light-like classification: <v,v> compared against
# the Euclidean norm squared. Doubles lose several digits through chord maps.
EPS_CAUSAL = 1e-10

# Default tolerance for hyperboloid membership.
TOL_ON_H = 1e-9


class CausalClass(Enum):
    SPACE_LIKE = "space-like"
    LIGHT_LIKE = "light-like"
    TIME_LIKE = "time-like"
    ZERO = "zero"


def mvec(x0, x1, x2) -> np.ndarray:
    """Build a Minkowski 3-vector, rejecting non-finite components."""
    v = np.array([x0, x1, x2], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def inner(x, y) -> float:
    """Minkowski product -x0*y0 + x1*y1 + x2*y2."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(np.dot(METRIC_SIGNS * x, y))


def norm2(v) -> float:
    return inner(v, v)


def causal_class(v, eps: float = EPS_CAUSAL) -> CausalClass:
    v = np.asarray(v, dtype=float)
    scale = float(np.dot(v, v))
    if scale == 0.0:
        return CausalClass.ZERO
    s = inner(v, v)
    if abs(s) <= eps * scale:
        return CausalClass.LIGHT_LIKE
    return CausalClass.SPACE_LIKE if s > 0.0 else CausalClass.TIME_LIKE


@dataclass(frozen=True)
class Bivector:
    """Components x_i*y_j - x_j*y_i of the skew operator x ^ y."""

    w01: float
    w02: float
    w12: float

    def as_matrix(self) -> np.ndarray:
        """Matrix of x (x) y* - y (x) x*, with w* z = <w, z>."""
        w = np.array([[0.0, self.w01, self.w02],
                      [-self.w01, 0.0, self.w12],
                      [-self.w02, -self.w12, 0.0]])
        return w * METRIC_SIGNS  # scales columns by the metric signs


def wedge(x, y) -> Bivector:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return Bivector(w01=float(x[0] * y[1] - x[1] * y[0]),
                    w02=float(x[0] * y[2] - x[2] * y[0]),
                    w12=float(x[1] * y[2] - x[2] * y[1]))


def wedge_matrix(x, y) -> np.ndarray:
    """x (x) y* - y (x) x* as a 3x3 matrix."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.outer(x, METRIC_SIGNS * y) - np.outer(y, METRIC_SIGNS * x)


def wedge_norm2(x, y) -> float:
    """<x,y>^2 - <x,x><y,y>, the signed area squared of the parallelogram.

    Coordinate identity: equals -w12^2 + w02^2 + w01^2.
    """
    return inner(x, y) ** 2 - inner(x, x) * inner(y, y)


def on_hyperboloid(x, tol: float = TOL_ON_H) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(inner(x, x) - 1.0) <= tol


def renormalize_to_h(x) -> np.ndarray:
    """Scale x onto the hyperboloid <x,x> = 1."""
    x = np.asarray(x, dtype=float)
    s = inner(x, x)
    scale = float(np.dot(x, x))
    if s <= EPS_CAUSAL * max(scale, 1e-300):
        raise NonPositiveNormError(f"<x,x> = {s!r} is not positive")
    return x / np.sqrt(s)


def project_tangent(x, v) -> np.ndarray:
    """Component of v Minkowski-orthogonal to x (x not light-like)."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    return v - (inner(v, x) / inner(x, x)) * x


def normalize_direction(v, eps: float = EPS_CAUSAL) -> np.ndarray:
    """Normalize per causal class.

    Space- and time-like vectors are scaled to <v,v> = +/-1; light-like
    vectors carry no Minkowski scale, so the largest component is set to
    magnitude 1 for reproducibility.
    """
    v = np.asarray(v, dtype=float)
    cls = causal_class(v, eps)
    if cls is CausalClass.ZERO:
        raise ValueError("cannot normalize the zero vector")
    if cls is CausalClass.LIGHT_LIKE:
        return v / np.max(np.abs(v))
    return v / np.sqrt(abs(inner(v, v)))
