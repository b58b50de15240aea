"""
Where the quadratic-form energy stops being exact
=================================================

For two-tap channels (1, eps) the closed form E(s) = d^2 s'Gs is an upper
bound that is tight exactly when G = (MM')^{-1} is diagonally dominant.
The off-diagonal mass of G grows like 2*eps/(1-eps), so dominance fails
past eps = 1/3.  This script sweeps eps across that boundary and compares
the closed form against the certified QP optimum over all patterns.
"""

import numpy as np

from isicap import ChannelSpec, build_operators, pattern_from_code, solve_energy_qp

DELTA = 0.3
N = 8

print(f"two-tap channels (1, eps) at block length {N}")
print(f"{'eps':>5}  {'2e/(1-e)':>8}  {'dd_flag':>7}  {'max QP shortfall':>16}")
for eps in (0.10, 0.20, 0.30, 1 / 3, 0.35, 0.40, 0.50):
    ops = build_operators(ChannelSpec((1.0, eps), DELTA, N))
    gram = ops.gram_inverse()
    worst = 0.0
    for code in range(1 << N):
        s = pattern_from_code(code, N)
        closed = DELTA**2 * float(s @ gram @ s)
        sol = solve_energy_qp(ops, s, gap_tol=1e-10)
        worst = max(worst, (closed - sol.energy) / closed)
    print(f"{eps:5.3f}  {2 * eps / (1 - eps):8.4f}  {str(ops.dd_flag):>7}  {worst:16.3e}")

print()
print("Below the boundary the two agree to solver precision; above it the")
print("true minimum drops below the quadratic form (about 1% at eps=0.4),")
print("which is why non-dominant channels always route through the QP.")
