"""The free convolution algebra on cumulant sequences.

Free cumulants add under free convolution, scale elementwise under
convolution powers, and pick up a factor lambda^n under dilation.  The
free binomial laws decompose as dilated convolution powers of two-point
laws; at b = -1/2 that reproduces the arcsine law.
"""

from fractions import Fraction as F

from freemeixner import (
    MeixnerParams,
    binomial_decomposition,
    classify,
    convolution_power,
    cumulants,
    cumulants_to_moments,
    dilate,
    free_convolve,
    moments,
)


def main():
    semicircle = cumulants(MeixnerParams(0, 0), 8)
    doubled = free_convolve(semicircle, semicircle)
    print("semicircle + free copy: cumulants", [str(v) for v in doubled.values])
    print("  (only the variance moved: free convolution is additive on cumulants)")

    print("\nDilated convolution powers reparametrize the family:")
    lam = F(2)
    lhs = dilate(convolution_power(cumulants(MeixnerParams(F(1), F(1)), 8), lam ** 2), 1 / lam)
    rhs = cumulants(MeixnerParams(F(1, 2), F(1, 4)), 8)
    print(f"  D_(1/2)(mu_(1,1)^boxplus4) == mu_(1/2,1/4) at cumulant level: {lhs.values == rhs.values}")

    print("\nEvery free binomial law is a dilated power of a two-point law:")
    for a, b in [(F(1), F(-1, 4)), (F(0), F(-1, 2))]:
        p = MeixnerParams(a, b)
        two_point, t, lam = binomial_decomposition(p)
        print(f"  mu_({a},{b})  [{classify(p).value}]")
        print(f"    = D_{lam}( mu_({two_point.a},{two_point.b}) ^ boxplus {t} )")
        rebuilt = cumulants_to_moments(
            dilate(convolution_power(cumulants(two_point, 10), t), lam)
        )
        direct = moments(p, 10)
        agree = all(
            abs(float(x) - float(y)) < 1e-12 for x, y in zip(rebuilt.values, direct.values)
        )
        print(f"    moments through order 10 agree: {agree}")

    arcsine = moments(MeixnerParams(F(0), F(-1, 2)), 10)
    print("\nArcsine moments (central binomials over powers of two):")
    print(" ", [str(v) for v in arcsine.values])


if __name__ == "__main__":
    main()
