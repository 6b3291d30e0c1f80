"""Number fields and the golden division algebra, end to end.

Exact integral-basis arithmetic feeds the canonical embedding; the
codifferent gives the dual lattice, and the left regular representation of
the golden algebra produces the 8-dimensional multi-block matrix lattice.
"""

import numpy as np

from latsec import catalog
from latsec.algebras import algebra_codifferent
from latsec.numberfields import codifferent_ideal, codifferent_pairing_matrix

print("=== Q(zeta_5): embedding and codifferent ===")
f5 = catalog.field("cyclotomic5")
print(f"discriminant {f5.discriminant}, selected embeddings {f5.embeddings}")
lat5 = catalog.lattice("cyclotomic5")
print(f"V(psi(O_F)) = {lat5.volume:.6f} = 2^-k sqrt|d| = "
      f"{2.0 ** -2 * abs(f5.discriminant) ** 0.5:.6f}")
cod = codifferent_ideal(f5)
print(f"N(O_F^v) = {cod.norm} = 1/|d_F|")
pair = codifferent_pairing_matrix(f5)
print(f"pairing of 2 conj(psi(O^v)) against dual(psi(O)): integer = "
      f"{np.allclose(pair, np.round(pair), atol=1e-9)}, "
      f"det = {np.linalg.det(np.round(pair)):.0f}")

print("\n=== golden algebra (Q(i,sqrt5)/Q(i), sigma, gamma=i) ===")
alg = catalog.algebra("golden-order")
u = alg.from_u_power(1)
print("phi(u) =")
print(np.round(alg.left_regular(u), 6))
one = alg.element([alg.E.one(), alg.E.zero()])
theta = alg.element([alg.E.gen_power(1), alg.E.zero()])
print("psi(theta) (golden-ratio diagonal block):")
print(np.round(alg.psi(theta), 6))

gl = alg.multiblock_embed()
d = alg.z_discriminant()
print(f"\nd(Gamma/Z) = {d}; V(psi(Gamma)) = {gl.volume} "
      f"= 2^-4 sqrt|d| = {2.0 ** -4 * abs(d) ** 0.5}")
pd, delta, _ = gl.pdet_min()
print(f"min |pdet| = {pd} (attained at 1), delta = {delta:.4f}")

dualv = algebra_codifferent(alg)
pair = np.linalg.solve(gl.real_lattice.dual().basis, dualv.real_lattice.basis)
print(f"2 psi(Gamma^v)^h vs dual(psi(Gamma)): integer pairing = "
      f"{np.allclose(pair, np.round(pair), atol=1e-9)}, "
      f"|det| = {abs(np.linalg.det(np.round(pair))):.0f}")

print("\n=== reduced norm = product determinant ===")
rng = np.random.default_rng(4)
from fractions import Fraction
for _ in range(3):
    xs = [[[Fraction(int(rng.integers(-2, 3))), Fraction(int(rng.integers(-2, 3)))]
           for _ in range(2)] for _ in range(2)]
    a = alg.element(xs)
    pd = abs(gl.pdet(alg.psi(a)))
    nq = abs(float(alg.F.norm(alg.reduced_norm_f(a))))
    print(f"|pdet(psi(a))|^2 = {pd ** 2:.6f}   |N(a)| = {nq:.6f}")
