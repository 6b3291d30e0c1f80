"""Tour of the lattice geometry layer.

Builds the catalog lattices, computes their enumerative invariants (minimum
distance, Hermite invariant, normalized product distance), and checks them
against the discriminant bounds that make ideal lattices good wiretap codes.
"""

import numpy as np

from latsec import catalog
from latsec.lattices import Lattice

print("=== integer lattices ===")
z4 = Lattice.integer(4)
lam1, witness = z4.min_distance()
print(f"Z^4: volume {z4.volume}, lambda1 {lam1}, witness {witness}")
print(f"     dual volume {z4.dual().volume} (product = "
      f"{z4.volume * z4.dual().volume})")

print("\n=== catalog ideal lattices ===")
for name in ("gaussian-integers", "cyclotomic5", "cyclotomic8", "cyclotomic12"):
    field = catalog.field(name)
    lat = catalog.lattice(name)
    k, disc = field.k, abs(field.discriminant)
    lam1, _ = lat.min_distance()
    h = lat.hermite_invariant()
    p, np_norm, radius = lat.product_distance()
    bound_np = 2.0 ** (k / 2) / disc ** 0.25
    bound_h = 2 * k / disc ** (1 / (2 * k))
    print(f"{name}: k={k} |d|={disc} V={lat.volume:.4f}")
    print(f"   lambda1^2 = {lam1 ** 2:.4f}   h = {h:.4f} (bound {bound_h:.4f})")
    print(f"   p = {p:.4f}  Np = {np_norm:.4f} (bound {bound_np:.4f}, "
          f"enumerated within radius {radius:.3f})")
    d = lat.dual()
    print(f"   dual: h = {d.hermite_invariant():.4f}  "
          f"Np = {d.product_distance()[1]:.4f}")

print("\n=== multi-block matrix lattice (golden order) ===")
gl = catalog.lattice("golden-order")
pd, delta, radius = gl.pdet_min()
print(f"golden-order: 2kn^2 = 8 dims, V = {gl.volume}")
print(f"   min |pdet| = {pd} (radius {radius:.3f}), delta = {delta:.4f}")
x = gl.generators[0]
print(f"   first generator block:\n{np.round(x, 4)}")
