"""Floating-point oracles: Gauss quadrature, panel integration, inversion.

These routines cross-check the exact combinatorial layer.  The Gauss rule
comes from the spectral decomposition of the truncated Jacobi matrix and
integrates polynomials of degree <= 2n-1 exactly against the law, atoms
included.  Panel integration covers the continuous part only and is paired
with the explicit atom list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, NumericError
from .meixner import MeixnerLaw, MeixnerParams, cauchy_transform, jacobi_coefficients

_WEIGHT_SUM_TOL = 1e-12
_TARGET_ABS_ERROR = 1e-10
_MAX_PANELS = 1 << 18

# 10-point Gauss-Legendre reference nodes/weights on [-1, 1]
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes (strictly increasing) and positive weights summing to one."""

    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.nodes, self.nodes[1:])):
            raise NumericError("quadrature nodes are not strictly increasing")
        if any(w <= 0 for w in self.weights):
            raise NumericError("quadrature weights must be positive")
        if abs(sum(self.weights) - 1.0) > _WEIGHT_SUM_TOL:
            raise NumericError(f"weights sum to {sum(self.weights)!r}, not 1")

    def integrate(self, f) -> float:
        return float(sum(w * f(x) for x, w in zip(self.nodes, self.weights)))


@dataclass(frozen=True)
class IntegralEstimate:
    value: float
    error: float


def gauss_rule(p: MeixnerParams, n: int) -> QuadratureRule:
    """Gauss rule with n nodes for mu_{a,b} via the Jacobi matrix.

    Nodes are eigenvalues of the n x n symmetric tridiagonal truncation,
    weights the squared first components of the normalized eigenvectors.
    At b = -1 the matrix decouples and produces repeated zero-weight
    copies of the diagonal entry; duplicates are merged and weights below
    1e-14 dropped so the rule stays a valid discrete measure.
    """
    diag, off = jacobi_coefficients(p, n)
    d = np.asarray([float(v) for v in diag])
    e = np.asarray([float(v) for v in off])
    try:
        if n == 1:
            vals, vecs = np.array([d[0]]), np.array([[1.0]])
        else:
            vals, vecs = eigh_tridiagonal(d, e)
    except Exception as exc:  # pragma: no cover - eigensolver failure
        raise NumericError(f"tridiagonal eigensolver failed: {exc}") from exc
    order = np.argsort(vals)
    nodes = vals[order]
    weights = vecs[0, order] ** 2

    scale = 1.0 + float(np.max(np.abs(nodes)))
    merged: list[list[float]] = []
    for x, w in zip(nodes, weights):
        if merged and x - merged[-1][0] <= 1e-12 * scale:
            merged[-1][1] += w
        else:
            merged.append([float(x), float(w)])
    kept = [(x, w) for x, w in merged if w > 1e-14]
    total = sum(w for _, w in kept)
    return QuadratureRule(
        nodes=tuple(x for x, _ in kept),
        weights=tuple(w / total for _, w in kept),
    )


def _continuous_panel_sum(law: MeixnerLaw, f, panels: int) -> float:
    """Composite Gauss-Legendre pass over the continuous part.

    Substituting x = a + r cos(theta) absorbs the edge square-root of the
    density into sin^2(theta), so the theta-integrand is smooth and the
    panels converge fast.
    """
    a = float(law.params.a)
    b = float(law.params.b)
    lo, hi = law.support
    r = 0.5 * (hi - lo)
    if r == 0.0:
        return 0.0
    h = math.pi / panels
    total = 0.0
    for k in range(panels):
        mid = (k + 0.5) * h
        theta = mid + 0.5 * h * _GL_NODES
        x = a + r * np.cos(theta)
        sin2 = np.sin(theta) ** 2
        q = b * x * x + a * x + 1.0
        vals = np.array([f(float(xi)) for xi in x])
        total += 0.5 * h * float(np.dot(_GL_WEIGHTS, vals * r * r * sin2 / (2.0 * math.pi * q)))
    return total


def panel_integral(law: MeixnerLaw, f, panels: int) -> float:
    """Fixed-resolution integral of f against the law (atoms included)."""
    atom_part = sum(w * f(x) for x, w in law.atoms)
    return _continuous_panel_sum(law, f, panels) + atom_part


def integrate_against_law(law: MeixnerLaw, f, panels: int = 8) -> IntegralEstimate:
    """Adaptive integral of f against the law, target absolute error 1e-10.

    Panel count doubles until successive refinements agree; the atom sum
    is added afterwards.  Raises NumericError (carrying the best estimate)
    if the cap is reached first.
    """
    if panels < 1:
        raise ValueError(f"panels must be >= 1, got {panels}")
    atom_part = sum(w * f(x) for x, w in law.atoms)
    coarse = _continuous_panel_sum(law, f, panels)
    while panels <= _MAX_PANELS:
        panels *= 2
        fine = _continuous_panel_sum(law, f, panels)
        err = abs(fine - coarse)
        if err <= _TARGET_ABS_ERROR:
            return IntegralEstimate(value=fine + atom_part, error=err)
        coarse = fine
    raise NumericError(
        f"panel integration did not reach {_TARGET_ABS_ERROR:g} within {_MAX_PANELS} panels",
        best_estimate=coarse + atom_part,
    )


def stieltjes_invert(p: MeixnerParams, x: float, eps: float) -> float:
    """-(1/pi) Im G(x + i eps); tends to the density at continuity points."""
    if eps <= 0:
        raise DomainError(f"eps must be > 0, got {eps}")
    g = cauchy_transform(p, complex(float(x), float(eps)))
    return -g.imag / math.pi
