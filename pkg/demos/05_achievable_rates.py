"""Achievable-rate curves and the constant gaps (figure-style data).

Reproduces the rate curves for the single-antenna Rayleigh and Gaussian
wiretap channels: R_max = C_b - C_e - kappa with kappa from the
constant-root-discriminant number-field towers or from the Conway-Thompson
self-dual family.  The same numbers come out of the `latsec rates` CLI.
"""

from latsec.rates import (CONWAY_THOMPSON_GAP_NATS, RateBudget,
                          achievable_rates,
                          kappa_as_db_shift, nats_to_bits,
                          positive_rate_crossing, rate_constants,
                          rayleigh_capacity, snr_db_to_linear)

G = 92.368
kappa_nf = rate_constants(G, 1).kappa_siso_nats
print(f"number-field gap (rd = {G}): {kappa_nf:.4f} nats = "
      f"{nats_to_bits(kappa_nf):.4f} bits")
print(f"  high-SNR dB equivalent: {kappa_as_db_shift(kappa_nf):.2f} dB")
print(f"Conway-Thompson Gaussian gap: {CONWAY_THOMPSON_GAP_NATS:.4f} nats = "
      f"{nats_to_bits(CONWAY_THOMPSON_GAP_NATS):.4f} bits")
kappa_m2 = rate_constants(G, 2).kappa_mimo_nats
print(f"MIMO n=2 gap: {kappa_m2:.4f} nats")

print("\n=== Rayleigh wiretap, Eve at 5 dB ===")
c_e = float(rayleigh_capacity(snr_db_to_linear(5.0)))
print(f"C_e = {c_e:.4f} nats")
print(" SNR_b |    C_b    | R_max (nf) | R_max (CT)")
for db in range(10, 55, 5):
    c_b = float(rayleigh_capacity(snr_db_to_linear(db)))
    r_nf = c_b - c_e - kappa_nf
    r_ct = c_b - c_e - CONWAY_THOMPSON_GAP_NATS
    print(f"  {db:4d} | {c_b:9.4f} | {r_nf:10.4f} | {r_ct:10.4f}")
cross = positive_rate_crossing(kappa_nf, 5.0, law="rayleigh")
print(f"positive-rate threshold: Bob SNR = {cross:.2f} dB "
      f"(advantage {cross - 5.0:.2f} dB)")

print("\n=== Gaussian wiretap, Eve at 5 dB ===")
cross_g = positive_rate_crossing(CONWAY_THOMPSON_GAP_NATS, 5.0, law="gaussian")
print(f"Conway-Thompson positive-rate threshold: Bob SNR = {cross_g:.2f} dB "
      f"(~6 dB loss)")

print("\n=== threshold structure (root-discriminant budget) ===")
budget = RateBudget(C_b=9.0, C_e=c_e, geom_b=2 / G, geom_e=2 / G)
r_max, rp_min, rsum_max = achievable_rates(budget, "siso-fading")
print(f"R' > {rp_min:.4f}, R + R' < {rsum_max:.4f}  =>  R < {r_max:.4f} nats")
