"""Moment / free-cumulant calculus.

A moment sequence (m_0, ..., m_N) and a free-cumulant sequence
(R_1, ..., R_N) determine each other through the sum over non-crossing
partitions

    m_n = sum over NC(n) of prod over blocks B of R_{|B|}.

Decomposing each partition by the block containing 1 turns this into the
recursion

    m_n = sum_{s=1}^{n} R_s * sum_{i_1+...+i_s = n-s} m_{i_1} ... m_{i_s},

which is what the transforms below evaluate; the brute-force partition sum
stays available through :mod:`freemeixner.ncpart` as an independent check.
Free cumulants add under free convolution, which makes the convolution
algebra on cumulant sequences elementwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, OrderCapError
from .ncpart import _nc_zero
from .scalars import Scalar, as_scalar, is_exact

# Guards the O(N^3) recursions and the NC enumerations behind joint moments.
MAX_ORDER = 64


def _coerce_values(values):
    return tuple(as_scalar(v) for v in values)


@dataclass(frozen=True)
class MomentSequence:
    """Raw moments (m_0, ..., m_N) of a probability law, with m_0 = 1."""

    values: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _coerce_values(self.values))
        if not self.values:
            raise ValueError("moment sequence needs at least m_0")
        if self.values[0] != 1:
            raise ValueError(f"m_0 must be 1, got {self.values[0]}")

    @property
    def order(self) -> int:
        return len(self.values) - 1

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def moment(self, n: int) -> Scalar:
        """m_n for 0 <= n <= order."""
        if not 0 <= n <= self.order:
            raise IndexError(f"moment order {n} outside 0..{self.order}")
        return self.values[n]


@dataclass(frozen=True)
class CumulantSequence:
    """Free cumulants (R_1, ..., R_N); any real sequence is admissible."""

    values: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _coerce_values(self.values))
        if not self.values:
            raise ValueError("cumulant sequence needs at least R_1")

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def cumulant(self, n: int) -> Scalar:
        """R_n for 1 <= n <= order."""
        if not 1 <= n <= self.order:
            raise IndexError(f"cumulant order {n} outside 1..{self.order}")
        return self.values[n - 1]


@dataclass(frozen=True)
class FreePairSpec:
    """A free pair (X, Y) determined by the cumulants of S = X + Y.

    ``alpha`` is the variance split tau(X^2) of a centered standardized
    pair; the marginal cumulants are derived, never stored, so they cannot
    drift out of sync: R_n(X) = alpha R_n(S) and R_n(Y) = (1-alpha) R_n(S).
    """

    s_cumulants: CumulantSequence
    alpha: Scalar

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if not 0 < self.alpha < 1:
            raise DomainError(f"alpha must lie in (0,1), got {self.alpha}")

    @property
    def beta(self) -> Scalar:
        return 1 - self.alpha

    @property
    def order(self) -> int:
        return self.s_cumulants.order

    def x_cumulants(self) -> CumulantSequence:
        return CumulantSequence(tuple(self.alpha * r for r in self.s_cumulants.values))

    def y_cumulants(self) -> CumulantSequence:
        return CumulantSequence(tuple(self.beta * r for r in self.s_cumulants.values))


def _check_order(n):
    if n > MAX_ORDER:
        raise OrderCapError(f"order {n} exceeds the supported cap {MAX_ORDER}")


def cumulants_to_moments(r: CumulantSequence) -> MomentSequence:
    """Moments of the law whose free cumulants are ``r``.

    Exact when the cumulants are rational.  m_0 = 1 always.
    """
    _check_order(r.order)
    one = Fraction(1) if r.is_exact else 1.0
    m = [one]
    for n in range(1, r.order + 1):
        # conv[s][t] built incrementally: coefficient of z^t in (sum m_j z^j)^s
        row = [one] + [0] * (n - 1)  # s = 0
        total = 0
        for s in range(1, n + 1):
            limit = n - s
            new = [0] * (limit + 1)
            for t in range(limit + 1):
                acc = 0
                for j in range(t + 1):
                    acc += row[t - j] * m[j]
                new[t] = acc
            row = new
            total += r.cumulant(s) * row[limit]
        m.append(total)
    return MomentSequence(tuple(m))


def moments_to_cumulants(m: MomentSequence) -> CumulantSequence:
    """The unique cumulant sequence reproducing the given moments.

    Solves the partition sum order by order: the full-block partition
    contributes R_n linearly with coefficient 1, so each R_n is read off
    after subtracting the contribution of smaller blocks.
    """
    _check_order(m.order)
    if m.order < 1:
        raise ValueError("need at least m_1 to extract cumulants")
    r: list[Scalar] = []
    for n in range(1, m.order + 1):
        partial = CumulantSequence(tuple(r) + (0,))
        lower = cumulants_to_moments(partial).moment(n)
        r.append(m.moment(n) - lower)
    return CumulantSequence(tuple(r))


def free_convolve(r1: CumulantSequence, r2: CumulantSequence) -> CumulantSequence:
    """Cumulants of X + Y for free X, Y: elementwise sum."""
    if r1.order != r2.order:
        raise ValueError(f"order mismatch: {r1.order} vs {r2.order}")
    return CumulantSequence(tuple(a + b for a, b in zip(r1.values, r2.values)))


def convolution_power(r: CumulantSequence, t, formal: bool = False) -> CumulantSequence:
    """Cumulants of the t-fold free convolution power: R_n -> t R_n.

    The power is a probability law only for t >= 1; pass ``formal=True``
    to scale cumulants formally below that.
    """
    t = as_scalar(t)
    if t < 1 and not formal:
        raise DomainError(
            f"free convolution power requires t >= 1 (got {t}); "
            "set formal=True for formal cumulant scaling"
        )
    return CumulantSequence(tuple(t * v for v in r.values))


def dilate(r: CumulantSequence, lam) -> CumulantSequence:
    """Cumulants of the pushforward under x -> lam * x: R_n -> lam^n R_n."""
    lam = as_scalar(lam)
    return CumulantSequence(tuple(lam ** n * v for n, v in enumerate(r.values, start=1)))


def translate(r: CumulantSequence, c) -> CumulantSequence:
    """Cumulants of the law shifted by c; only R_1 moves."""
    c = as_scalar(c)
    return CumulantSequence((r.values[0] + c,) + r.values[1:])


_LETTER_MASK = {"X": 1, "Y": 2, "S": 0}


def free_pair_moment(x_cum: CumulantSequence, y_cum: CumulantSequence, word) -> Scalar:
    """tau(Z_1 ... Z_n) for free X, Y with the given cumulants.

    Each Z_i is one of "X", "Y", "S" with S = X + Y.  Expanding every S by
    multilinearity and dropping mixed cumulants leaves, per non-crossing
    block: 0 if the block sees both X and Y, R_k(X) if it sees X, R_k(Y)
    if it sees Y, and R_k(X) + R_k(Y) if it is all S.
    """
    letters = list(word)
    if not letters:
        raise ValueError("word must be nonempty")
    n = len(letters)
    order = min(x_cum.order, y_cum.order)
    if n > order:
        raise OrderCapError(f"word length {n} exceeds available order {order}")
    try:
        masks = [_LETTER_MASK[w] for w in letters]
    except KeyError as exc:
        raise ValueError(f"word symbols must be X, Y or S (got {exc.args[0]!r})") from exc

    xv = x_cum.values
    yv = y_cum.values
    sv = tuple(a + b for a, b in zip(xv, yv))
    exact = x_cum.is_exact and y_cum.is_exact
    total = Fraction(0) if exact else 0.0
    for blocks in _nc_zero(n):
        prod = Fraction(1) if exact else 1.0
        for block in blocks:
            mask = 0
            for i in block:
                mask |= masks[i]
            if mask == 3:
                prod = 0
                break
            k = len(block) - 1
            if mask == 1:
                prod *= xv[k]
            elif mask == 2:
                prod *= yv[k]
            else:
                prod *= sv[k]
            if prod == 0:
                break
        total += prod
    return total


def joint_moment_free_pair(pair: FreePairSpec, word) -> Scalar:
    """tau of a word in {X, Y, S} for an alpha-split free pair."""
    return free_pair_moment(pair.x_cumulants(), pair.y_cumulants(), word)


def q_integer(n: int, q) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0."""
    q = as_scalar(q)
    return sum((q ** i for i in range(n)), Fraction(0) if is_exact(q) else 0.0)


def q_factorial(n: int, q) -> Scalar:
    out = as_scalar(1) if is_exact(as_scalar(q)) else 1.0
    for i in range(1, n + 1):
        out = out * q_integer(i, q)
    return out


def q_binomial(n: int, k: int, q) -> Scalar:
    """Gaussian binomial coefficient [n choose k]_q; reduces to 1 at q = 0."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return q_factorial(n, q) / (q_factorial(n - k, q) * q_factorial(k, q))


def q_cumulants(a, b, q, order: int) -> CumulantSequence:
    """The q-deformed cumulant recursion interpolating free (q=0) and
    classical (q=1) behavior.

    Starts from R_1 = 0, R_2 = 1 and applies

        R_{n+1} = a R_n + b * sum_{j=2}^{n-1} [n-1 choose j-1]_q R_j R_{n+1-j}

    for n >= 2.  At q = 0 this reproduces the free cumulants of the
    standardized law with parameters (a, b).
    """
    a = as_scalar(a)
    b = as_scalar(b)
    q = as_scalar(q)
    if not -1 < q <= 1:
        raise DomainError(f"q must lie in (-1, 1], got {q}")
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    _check_order(order)
    exact = is_exact(a) and is_exact(b) and is_exact(q)
    r: list[Scalar] = [Fraction(0) if exact else 0.0, Fraction(1) if exact else 1.0]
    for n in range(2, order):
        nxt = a * r[n - 1]
        for j in range(2, n):
            nxt += b * q_binomial(n - 1, j - 1, q) * r[j - 1] * r[n - j]
        r.append(nxt)
    return CumulantSequence(tuple(r))
