"""Smoke test for the mlvkernel extension module.

Usage: python test_python_smoke.py <dir-containing-module>
"""

import math
import sys

if len(sys.argv) > 1:
    sys.path.insert(0, sys.argv[1])

import mlvkernel as mk


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)
    print("ok:", msg)


# Parsing and printing round trip.
p = mk.parse("z(2,1)", level=3)
q = mk.parse("z(3,2)", level=3)
check(str(p) == "z(2,1)", "parse/print generator")
check(p.level == 3 and p.term_count == 1, "poly metadata")

# Stuffle with the diagonal twist collision.
s = mk.stuffle(p, q)
expect = mk.parse("z(2,1)z(3,2) + z(3,2)z(2,1) + z(5,0)", level=3)
check(s == expect, "stuffle at level 3")

# Shuffle on the binary alphabet.
a = mk.parse("z(2,0)", level=1)
b = mk.parse("z(1,0)", level=1)
sh = mk.shuffle(a, b)
check(sh == mk.parse("2*z(2,0)z(1,0) + z(1,0)z(2,0)", level=1), "shuffle")

# Twist maps invert each other.
w = mk.parse("z(2,1)z(3,1)", level=3)
check(str(mk.map_I(w)) == "z(2,1)z(3,2)", "prefix-sum map")
check(mk.map_I_inv(mk.map_I(w)) == w, "map round trip")

# Regularization: y0 has a degree-1 coefficient of 1.
coeffs = mk.regularize(mk.parse("y0", level=1), side="star")
check(len(coeffs) == 2 and coeffs[0].is_zero() and str(coeffs[1]) == "1",
      "regularization of y0")

# Double-shuffle kernel element evaluates to ~0.
e = mk.fds_element_star(a, mk.parse("z(3,0)", level=1))
r = mk.eval_poly(e)
check(abs(r["value"]) < 1e-8, "kernel element vanishes numerically")

# Euler: zeta(2,1) = zeta(3).
z21 = mk.eval_poly(mk.parse("z(2,0)z(1,0)", level=1))
check(abs(z21["value"].real - 1.2020569031595942) < 1e-9, "zeta(2,1) = zeta(3)")

# Congruence-class sums, both routes.
x = mk.eval_zeta_N([2], [0], 2)
d = mk.eval_zeta_N_direct([2], [0], 2)
check(abs(x["value"] - d["value"]) <= x["err"] + d["err"], "route agreement")
check(abs(x["value"].real - math.pi**2 / 12) < 1e-10, "zeta_2(2;0) = pi^2/12")

# Divergent input raises.
try:
    mk.eval_poly(mk.parse("z(1,0)", level=1))
    check(False, "divergence detection")
except mk.MlvDivergenceError:
    check(True, "divergence detection")

# A tiny verification run.
reports = mk.verify("corollaries", level=1, kmax=4)
check(len(reports) > 0 and all(r["pass"] for r in reports if not r["informational"]),
      "verify(corollaries, level=1)")

print("python smoke test passed")
