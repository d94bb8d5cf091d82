"""Non-crossing partitions and the moment/cumulant dictionary.

Moments are sums over non-crossing partitions of products of block
cumulants; restricting to blocks of size <= 2 computes the cumulants of
the two-parameter family directly.  Everything here runs in exact rational
arithmetic.
"""

from fractions import Fraction as F

from freemeixner import (
    MeixnerParams,
    cumulants,
    cumulants_to_moments,
    enumerate_nc,
    enumerate_nc_le2,
    moments_to_cumulants,
    singleton_count,
)


def main():
    print("Partition counts (Catalan / Motzkin patterns):")
    for n in range(9):
        print(f"  n={n}:  |NC(n)| = {len(enumerate_nc(n)):5d}"
              f"   |NC<=2(n)| = {len(enumerate_nc_le2(n)):4d}")

    print("\nNC<=2(3), the four pair/singleton partitions behind R_5:")
    a, b = F(1), F(1)
    total = 0
    for part in enumerate_nc_le2(3):
        s = singleton_count(part)
        k = len(part.blocks)
        term = a ** s * b ** (k - s)
        total += term
        print(f"  {part}   singletons={s}  term a^{s} b^{k - s} = {term}")
    print(f"  sum = {total}  (the fifth cumulant a^3 + 3ab at a=b=1 is 4)")

    print("\nCumulants of mu_{1,1} and the moments they generate:")
    seq = cumulants(MeixnerParams(a, b), 8)
    ms = cumulants_to_moments(seq)
    print(f"  R_1..R_8 = {[str(v) for v in seq.values]}")
    print(f"  m_0..m_8 = {[str(v) for v in ms.values]}")

    back = moments_to_cumulants(ms)
    print(f"  round trip recovers cumulants exactly: {back.values == seq.values}")


if __name__ == "__main__":
    main()
