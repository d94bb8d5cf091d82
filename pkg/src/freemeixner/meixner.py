"""The standardized free Meixner family of probability laws.

For parameters a real and b >= -1, mu_{a,b} is the mean-zero variance-one
law whose Cauchy-Stieltjes transform is

    G(z) = ((1+2b) z + a - sqrt((z-a)^2 - 4(1+b))) / (2 (b z^2 + a z + 1)),

equivalently the orthogonality measure of the monic polynomial system with
the constant-coefficient three-term recurrence

    x p_n = p_{n+1} + a p_n + (1+b) p_{n-1}   (n >= 2),

with p_0 = 1, p_1 = x, p_2 = x^2 - a x - 1.  The absolutely continuous part
is sqrt(4(1+b) - (x-a)^2) / (2 pi (b x^2 + a x + 1)) on the interval
[a - 2 sqrt(1+b), a + 2 sqrt(1+b)]; up to two atoms sit at real roots of
b x^2 + a x + 1 outside that interval, weighted by the residue of G there.

The family splits into six types (semicircle, free Poisson, free Pascal,
free Gamma, pure free Meixner, free binomial) according to the sign of b
and of a^2 - 4b, and is closed under dilation, translation, and free
convolution powers.  Moment and cumulant computations below are exact for
rational (a, b); the analytic layer works in double precision.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .cumulants import (
    CumulantSequence,
    MomentSequence,
    moments_to_cumulants,
)
from .errors import DomainError
from .ncpart import enumerate_nc_le2
from .scalars import Scalar, as_scalar, exact_sqrt, is_exact

_ATOM_WEIGHT_FLOOR = 1e-12


@dataclass(frozen=True)
class MeixnerParams:
    """Parameters (a, b) of a standardized free Meixner law; b >= -1."""

    a: Scalar
    b: Scalar

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "b", as_scalar(self.b))
        if self.b < -1:
            raise DomainError(f"b must be >= -1, got {self.b}")

    @property
    def is_exact(self) -> bool:
        return is_exact(self.a) and is_exact(self.b)


@dataclass(frozen=True)
class SemicircleParams:
    """Mean and variance of a semicircle law (variance 0 means a point mass)."""

    mean: Scalar
    variance: Scalar

    def __post_init__(self):
        object.__setattr__(self, "mean", as_scalar(self.mean))
        object.__setattr__(self, "variance", as_scalar(self.variance))
        if self.variance < 0:
            raise DomainError(f"variance must be >= 0, got {self.variance}")


@dataclass(frozen=True)
class LevyParams:
    """Drift/curvature parameters (eta, sigma) of the quadratic-variance
    free Levy process; sigma >= 0."""

    eta: Scalar
    sigma: Scalar

    def __post_init__(self):
        object.__setattr__(self, "eta", as_scalar(self.eta))
        object.__setattr__(self, "sigma", as_scalar(self.sigma))
        if self.sigma < 0:
            raise DomainError(f"sigma must be >= 0, got {self.sigma}")


class MeixnerType(enum.Enum):
    SEMICIRCLE = "Semicircle"
    FREE_POISSON = "FreePoisson"
    FREE_PASCAL = "FreePascal"
    FREE_GAMMA = "FreeGamma"
    PURE_FREE_MEIXNER = "PureFreeMeixner"
    FREE_BINOMIAL = "FreeBinomial"


def support(p: MeixnerParams) -> tuple[float, float]:
    """Endpoints of the continuous support, [a - 2 sqrt(1+b), a + 2 sqrt(1+b)]."""
    a = float(p.a)
    half = 2.0 * math.sqrt(float(1 + p.b))
    return (a - half, a + half)


def density(p: MeixnerParams, x: float) -> float:
    """Absolutely continuous density at x; 0 outside the open support.

    Returns exactly 0 at the support endpoints (even where the density has
    an integrable edge singularity) so that grid evaluation never divides
    0 by 0; the endpoints carry no mass either way.
    """
    a = float(p.a)
    b = float(p.b)
    x = float(x)
    lo, hi = support(p)
    if x <= lo or x >= hi:
        return 0.0
    rad = 4.0 * (1.0 + b) - (x - a) ** 2
    q = b * x * x + a * x + 1.0
    if q <= 0.0:
        raise DomainError(
            f"density denominator b x^2 + a x + 1 vanished inside the support at x={x}"
        )
    return math.sqrt(max(rad, 0.0)) / (2.0 * math.pi * q)


def _w_real(a: float, x: float, lo: float, hi: float) -> float:
    """sqrt((x-a)^2 - 4(1+b)) on the real axis outside the support, signed
    like (x-a) so the branch matches the large-|z| normalization.

    Factored as (x-lo)(x-hi) so that roots sitting on a support endpoint
    give an exact zero instead of sqrt-amplified rounding noise.
    """
    rad = (x - lo) * (x - hi)
    root = math.sqrt(max(rad, 0.0))
    return root if x >= a else -root


def atoms(p: MeixnerParams) -> list[tuple[float, float]]:
    """Point masses of the law as (location, weight) pairs.

    Candidates are the real roots of b x^2 + a x + 1 outside the open
    support; the weight is the residue of the Cauchy transform there and
    candidates with weight <= 1e-12 are dropped.  A double root (on the
    free Gamma parabola a^2 = 4b) always carries residue zero.
    """
    a = float(p.a)
    b = float(p.b)
    lo, hi = support(p)

    if b == 0.0:
        roots = [] if a == 0.0 else [-1.0 / a]
    else:
        disc = p.a * p.a - 4 * p.b if p.is_exact else a * a - 4.0 * b
        if disc <= 0:
            roots = []
        else:
            root = math.sqrt(float(disc))
            roots = [(-a - root) / (2.0 * b), (-a + root) / (2.0 * b)]

    found = []
    scale = 1.0 + abs(a) + abs(b)
    for x0 in roots:
        if lo < x0 < hi:
            continue
        qp = 2.0 * b * x0 + a
        if abs(qp) <= 1e-9 * scale:
            # effectively a double root; residue vanishes identically
            continue
        w0 = _w_real(a, x0, lo, hi)
        numer = (1.0 + 2.0 * b) * x0 + a - w0
        weight = numer / (2.0 * qp)
        if weight > _ATOM_WEIGHT_FLOOR:
            found.append((x0, weight))
    found.sort(key=lambda t: t[0])
    return found


@dataclass(frozen=True)
class MeixnerLaw:
    """A free Meixner law with its derived support and atom list."""

    params: MeixnerParams
    support: tuple[float, float]
    atoms: tuple[tuple[float, float], ...]

    @classmethod
    def from_params(cls, p: MeixnerParams) -> "MeixnerLaw":
        return cls(params=p, support=support(p), atoms=tuple(atoms(p)))

    def density(self, x: float) -> float:
        return density(self.params, x)


def cauchy_transform(p: MeixnerParams, z: complex) -> complex:
    """G(z) = integral of 1/(z - y) against the law.

    The square root carries the branch with sqrt((z-a)^2 - 4(1+b)) ~ (z-a)
    at infinity, so G(z) ~ 1/z and Im G <= 0 on the upper half plane.
    Real z must avoid the support and the atoms.
    """
    a = float(p.a)
    b = float(p.b)
    z = complex(z)
    lo, hi = support(p)
    if z.imag == 0.0:
        x = z.real
        if lo < hi and lo <= x <= hi:
            raise DomainError(
                f"Cauchy transform undefined on the support [{lo:g}, {hi:g}] (x={x:g})"
            )
    half = 2.0 * math.sqrt(1.0 + b)
    w = cmath.sqrt(z - a - half) * cmath.sqrt(z - a + half)
    if b == -1.0:
        denom = z * z - a * z - 1.0
    else:
        denom = (1.0 + 2.0 * b) * z + a + w
    if z.imag == 0.0 and abs(denom) <= 1e-12 * (1.0 + abs(z.real)):
        raise DomainError(f"Cauchy transform has a pole (atom) at z={z.real:g}")
    if b == -1.0:
        return (z - a) / denom
    # Rationalized form of the textbook expression: multiplying numerator
    # and denominator by (1+2b) z + a + w cancels b z^2 + a z + 1 exactly,
    # which keeps the evaluation stable near non-atomic roots of that
    # quadratic.
    return 2.0 * (1.0 + b) / denom


def series_radius(p: MeixnerParams) -> float:
    """Conservative |z| bound keeping 30-term power series at float accuracy."""
    return 0.2 / (1.0 + abs(float(p.a)) + math.sqrt(1.0 + abs(float(p.b))))


def r_transform(p: MeixnerParams, z: complex) -> complex:
    """R-transform r(z) = 2z / (1 - az + sqrt((1-az)^2 - 4 z^2 b)).

    Evaluated on the branch continuous at 0 with r(0) = 0; the power-series
    coefficients of r are the free cumulants shifted by one index, and r
    always satisfies z b r^2 - (1 - a z) r + z = 0.
    """
    a = float(p.a)
    b = float(p.b)
    z = complex(z)
    if abs(z) > series_radius(p):
        raise DomainError(
            f"|z| = {abs(z):g} exceeds the guarded radius {series_radius(p):g}"
        )
    rad = (1.0 - a * z) ** 2 - 4.0 * z * z * b
    if rad.real <= 0.0 and abs(rad.imag) <= 1e-12 * (1.0 + abs(rad)):
        raise DomainError("z too close to a branch point of the R-transform")
    denom = 1.0 - a * z + cmath.sqrt(rad)
    if abs(denom) <= 1e-300:
        raise DomainError("R-transform denominator vanished")
    return 2.0 * z / denom


def moments(p: MeixnerParams, order: int) -> MomentSequence:
    """Raw moments (m_0, ..., m_order); exact for rational parameters.

    Uses the quadratic recursion

        m_{n+2} = m_n + a m_{n+1}
                  + sum_{j=1}^{n} m_j (m_{n-j} + a m_{n+1-j} + b m_{n+2-j}),

    obtained by isolating the j = 0 term of the conditional-variance
    recursion; at b = -1 the law is two atoms on the roots of
    x^2 - a x - 1, so m_{n+2} = a m_{n+1} + m_n instead.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    a, b = p.a, p.b
    one = Fraction(1) if p.is_exact else 1.0
    m: list[Scalar] = [one, 0 * one]
    if b == -1:
        while len(m) < order + 1:
            m.append(a * m[-1] + m[-2])
    else:
        for n in range(order - 1):
            nxt = m[n] + a * m[n + 1]
            for j in range(1, n + 1):
                nxt += m[j] * (m[n - j] + a * m[n + 1 - j] + b * m[n + 2 - j])
            m.append(nxt)
    return MomentSequence(tuple(m[: order + 1]))


def semicircle_moments(w: SemicircleParams, order: int) -> MomentSequence:
    """Raw moments of the semicircle law with the given mean and variance.

    Central moments are Catalan(k) * variance^k at order 2k and zero at odd
    orders; raw moments follow by a binomial shift.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    mean, var = w.mean, w.variance
    central: list[Scalar] = []
    for n in range(order + 1):
        if n % 2 == 1:
            central.append(0)
        else:
            k = n // 2
            catalan = math.comb(2 * k, k) // (k + 1)
            central.append(catalan * var ** k)
    raw = []
    for n in range(order + 1):
        acc = 0
        for j in range(n + 1):
            acc += math.comb(n, j) * mean ** (n - j) * central[j]
        raw.append(acc)
    return MomentSequence(tuple(raw))


def cumulants(p: MeixnerParams, order: int, method: str = "nc_le2") -> CumulantSequence:
    """Free cumulants (R_1, ..., R_order) of mu_{a,b}.

    All methods agree exactly; each one exercises a different identity:

    - ``nc_le2``: R_{n+2} = sum over non-crossing pair/singleton partitions
      of {1..n} of a^(#singletons) b^(#pairs), valid for every b >= -1;
    - ``semicircle``: R_{n+2} is the n-th raw moment of the semicircle law
      with mean a and variance b (requires b >= 0, where that is a measure);
    - ``from_moments``: invert the moment recursion through the general
      moment/cumulant transform.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    a, b = p.a, p.b
    if method == "nc_le2":
        one = Fraction(1) if p.is_exact else 1.0
        values: list[Scalar] = [0 * one, one]
        for n in range(1, order - 1):
            acc = 0
            for part in enumerate_nc_le2(n):
                k = len(part.blocks)
                s = sum(1 for blk in part.blocks if len(blk) == 1)
                acc += a ** s * b ** (k - s)
            values.append(acc * one)
        return CumulantSequence(tuple(values))
    if method == "semicircle":
        if b < 0:
            raise DomainError(
                f"semicircle method needs b >= 0 (got b={b}); the shifted "
                "semicircle is not a measure below that"
            )
        sm = semicircle_moments(SemicircleParams(a, b), order - 2)
        return CumulantSequence((0,) + tuple(sm.values))
    if method == "from_moments":
        return moments_to_cumulants(moments(p, order))
    raise ValueError(f"unknown method {method!r}; use nc_le2, semicircle or from_moments")


def orthogonal_polynomial(p: MeixnerParams, n: int, x) -> Scalar:
    """Value of the n-th monic orthogonal polynomial of the law at x."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    x = as_scalar(x)
    a, b = p.a, p.b
    if n == 0:
        return 1 * x ** 0
    prev = 1 * x ** 0
    cur = x
    # first recursion step has off-diagonal coefficient 1, later ones 1+b
    for k in range(1, n):
        off = 1 if k == 1 else 1 + b
        prev, cur = cur, (x - a) * cur - off * prev
    return cur


def jacobi_coefficients(p: MeixnerParams, n: int) -> tuple[tuple, tuple]:
    """Diagonal and off-diagonal of the n x n Jacobi matrix of the law.

    Diagonal (0, a, a, ...); off-diagonal entries are the positive square
    roots of (1, 1+b, 1+b, ...).
    """
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    a, b = p.a, p.b
    diag = (0,) + (a,) * (n - 1)
    if n == 1:
        return diag, ()
    off = (1,) + (exact_sqrt(1 + b),) * (n - 2)
    return diag, off


def classify(p: MeixnerParams) -> MeixnerType:
    """Which of the six types the law belongs to.

    Boundaries are decided exactly for rational parameters; for floats the
    free Gamma parabola a^2 = 4b is tested with tolerance 1e-12.
    """
    a, b = p.a, p.b
    if b < -1:
        raise DomainError(f"b must be >= -1, got {b}")
    if b < 0:
        return MeixnerType.FREE_BINOMIAL
    if b == 0:
        return MeixnerType.SEMICIRCLE if a == 0 else MeixnerType.FREE_POISSON
    gap = a * a - 4 * b
    if not p.is_exact and abs(gap) <= 1e-12:
        gap = 0
    if gap > 0:
        return MeixnerType.FREE_PASCAL
    if gap == 0:
        return MeixnerType.FREE_GAMMA
    return MeixnerType.PURE_FREE_MEIXNER


def binomial_decomposition(p: MeixnerParams):
    """Write a free binomial law as a dilated convolution power of a
    two-point law: mu_{a,b} = D_lam(mu_{a/lam, -1} ^ boxplus t) with
    t = -1/b and lam = sqrt(|b|).  Requires -1 <= b < 0."""
    a, b = p.a, p.b
    if not b < 0:
        raise DomainError(f"binomial decomposition needs -1 <= b < 0, got b={b}")
    lam = exact_sqrt(-b)
    two_point = MeixnerParams(a / lam, -1)
    t = -1 / b if is_exact(b) else -1.0 / b
    return two_point, t, lam


def levy_marginal(l: LevyParams, t) -> tuple[MeixnerParams, Scalar]:
    """Law of the time-t marginal of the quadratic-variance free Levy
    process: a dilation by sqrt(t) of mu_{eta/sqrt(t), sigma/t}.

    Returns the standardized parameters and the dilation factor.  The
    R-transform of the marginal is 2 z t / (1 - eta z
    + sqrt((1 - eta z)^2 - 4 z^2 sigma)).
    """
    t = as_scalar(t)
    if t <= 0:
        raise DomainError(f"time must be > 0, got {t}")
    root = exact_sqrt(t)
    params = MeixnerParams(l.eta / root, l.sigma / t)
    return params, root


def moment_generating(p: MeixnerParams, z: complex, order: int = 30) -> complex:
    """Truncated moment generating series M(z) = sum m_n z^n, n <= order.

    Within the guarded radius the truncation error sits below float
    precision, and M satisfies
    (z^2 + a z + b) M^2 - (1 + a z + 2 b) M + 1 + b = 0 up to that error.
    """
    z = complex(z)
    if abs(z) > series_radius(p):
        raise DomainError(
            f"|z| = {abs(z):g} exceeds the guarded radius {series_radius(p):g}"
        )
    ms = moments(p, order)
    acc = 0j
    for m in reversed(ms.values):
        acc = acc * z + complex(float(m))
    return acc
