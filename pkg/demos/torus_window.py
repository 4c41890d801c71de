"""Rewrite a few torus skeins over the window basis and take reduced traces.

Usage: python3 demos/torus_window.py [n]
"""

import sys

from skeinlab.cyclotomic import root_spec
from skeinlab.torus_algebra import TorusSkein, product, reduced_trace, rewrite_to_window


def main(n: int = 5) -> None:
    spec = root_spec(n)
    M = spec.M
    print(f"n={n} m={spec.m} M={M}")
    for a, b in [(1, 0), (M, 0), (M + 1, 0), (M, 1), (M + 1, M + 2)]:
        x = TorusSkein.e(n, a, b)
        exp = rewrite_to_window(x, spec)
        assert exp.expand(spec) == product(exp.denominator, x, spec)
        print(f"e({a},{b}): denominator {exp.denominator}")
        for p, c in sorted(exp.coefficients.items()):
            print(f"    window {p}: {c}")
        print(f"    reduced trace: {reduced_trace(x, spec)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
