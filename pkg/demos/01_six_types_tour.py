"""Tour of the six types in the (a, b) parameter half-plane.

Each standardized law mu_{a,b} is one of: semicircle, free Poisson, free
Pascal, free Gamma, pure free Meixner, or free binomial.  This script
classifies a spread of parameter points and prints each law's support,
atoms, and a coarse ASCII sketch of the continuous density.
"""

from fractions import Fraction as F

from freemeixner import MeixnerLaw, MeixnerParams, classify, density

POINTS = [
    (F(0), F(0)),        # the single semicircle point
    (F(2), F(0)),        # free Poisson boundary line b = 0
    (F(3), F(1)),        # free Pascal: b > 0, a^2 > 4b
    (F(2), F(1)),        # free Gamma parabola: a^2 = 4b
    (F(1), F(1)),        # pure free Meixner: a^2 < 4b
    (F(1), F(-1, 4)),    # free binomial strip: -1 <= b < 0
    (F(0), F(-1)),       # two-point boundary b = -1
]


def sketch(p, width=60, height=8):
    lo, hi = MeixnerLaw.from_params(p).support
    if lo == hi:
        return ["(purely atomic; no continuous part)"]
    xs = [lo + (hi - lo) * k / (width - 1) for k in range(width)]
    ys = [density(p, x) for x in xs]
    top = max(ys) or 1.0
    rows = []
    for level in range(height, 0, -1):
        cut = top * (level - 0.5) / height
        rows.append("".join("#" if y >= cut else " " for y in ys))
    return rows


def main():
    for a, b in POINTS:
        p = MeixnerParams(a, b)
        law = MeixnerLaw.from_params(p)
        print("=" * 64)
        print(f"(a, b) = ({a}, {b})  ->  {classify(p).value}")
        print(f"  support: [{law.support[0]:+.4f}, {law.support[1]:+.4f}]")
        if law.atoms:
            for loc, w in law.atoms:
                print(f"  atom:    {w:.4f} at x = {loc:+.4f}")
        else:
            print("  atoms:   none")
        for row in sketch(p):
            print("   " + row)
    print("=" * 64)


if __name__ == "__main__":
    main()
