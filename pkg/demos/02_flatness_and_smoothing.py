"""Flatness factor and smoothing parameter, two ways.

The flatness factor is computed as a certified dual theta sum; an
independent oracle maximizes |V f_Lambda(z) - 1| on a grid over the
fundamental region.  The smoothing parameter inverts the same sum, and
Banaszczyk's inequality provides the tail bounds used everywhere.
"""

import math

from latsec.gaussians import (banaszczyk_constant, banaszczyk_tail,
                              flatness_factor, flatness_factor_grid,
                              smoothing_parameter)
from latsec.lattices import Lattice

z2 = Lattice.integer(2)

print("=== flatness factor of Z^2 ===")
for sigma in (0.5, 0.75, 1.0, 1.5):
    eps = flatness_factor(z2, sigma)
    print(f"sigma = {sigma}: eps = {eps:.6e}")

print("\n=== dual-theta vs fundamental-region grid oracle ===")
for sigma in (0.8, 1.0):
    theta = flatness_factor(z2, sigma)
    grid = flatness_factor_grid(z2, sigma, resolution=200)
    print(f"sigma = {sigma}: theta {theta:.10e}  grid {grid:.10e}  "
          f"diff {abs(theta - grid):.1e}")

print("\n=== smoothing parameter / flatness duality ===")
eps = flatness_factor(z2, 1.0)
eta = smoothing_parameter(z2, eps)
print(f"eps_Lambda(1) = {eps:.6e}")
print(f"eta_eps = {eta:.12f}  vs  sqrt(2 pi) = {math.sqrt(2 * math.pi):.12f}")

print("\n=== Banaszczyk tail bound ===")
z8 = Lattice.integer(8)
for c in (0.8, 1.0, 1.5):
    cc = banaszczyk_constant(c)
    tau = math.sqrt(8) * c * 1.05
    lhs, rhs, holds = banaszczyk_tail(z8, tau, c)
    print(f"c = {c}: C = {cc:.4f}, tau = {tau:.3f}: "
          f"sum = {lhs:.3e} <= {rhs:.3e} ({holds})")

print("\n=== scaling behaviour ===")
for alpha in (1.0, 2.0, 3.0):
    eta = smoothing_parameter(z2.scale(alpha), 1e-3)
    print(f"eta_0.001(alpha Z^2) at alpha = {alpha}: {eta:.6f}")
