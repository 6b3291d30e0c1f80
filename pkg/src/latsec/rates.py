"""Achievable-rate thresholds and constant-gap arithmetic.

All rates are in nats per complex channel use.  The secrecy scheme achieves
R < C_b - C_e - kappa where the gap depends only on geometric invariants of
the base lattice and its dual:

  fading (SISO):  kappa = 2 ln(2/pi) - ln(t_b t_e),  t = Np(.)^{2/k}
  Gaussian:       same with Hermite-invariant constants h_b, h_e
  MIMO:           kappa = 2n ln(2n/pi) - ln(d_b d_e), d = delta(.)^{2/k}

For the constant-root-discriminant number-field towers t_b = t_e = 2/rd,
giving kappa = 2 ln(rd/pi); the division-algebra towers give
kappa = 2n ln(n rd beta^{(n-1)/n} / pi) with beta = 23^{1/10}; Conway-Thompson
self-dual lattices give the Gaussian-case gap ln(4e/pi).
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

MARTINET_ROOT_DISCRIMINANT = 92.368
BETA = 23.0 ** 0.1
CONWAY_THOMPSON_GAP_NATS = math.log(4.0 * math.e / math.pi)
LN2 = math.log(2.0)

MODES = ("siso-fading", "gaussian", "mimo", "compound")


def nats_to_bits(x):
    return x / LN2


@dataclass(frozen=True)
class GapConstants:
    """Constant-gap summary for a root discriminant and antenna count."""

    rd: float
    n: int
    kappa_siso_nats: float
    kappa_mimo_nats: float

    @property
    def kappa_siso_bits(self):
        return nats_to_bits(self.kappa_siso_nats)

    @property
    def kappa_mimo_bits(self):
        return nats_to_bits(self.kappa_mimo_nats)


def rate_constants(rd, n=1) -> GapConstants:
    """Gap constants for a (root-discriminant, antennas) pair.

    kappa_siso = 2 ln(rd/pi); kappa_mimo = 2n ln(n rd beta^{(n-1)/n} / pi),
    which reduces to the SISO value at n = 1.
    """
    if rd <= 0:
        raise ValueError("root discriminant must be positive")
    n = int(n)
    kappa_siso = 2.0 * math.log(rd / math.pi)
    kappa_mimo = 2.0 * n * math.log(n * rd * BETA ** ((n - 1) / n) / math.pi)
    return GapConstants(rd=float(rd), n=n, kappa_siso_nats=kappa_siso,
                        kappa_mimo_nats=kappa_mimo)


def conway_thompson_hermite(n):
    """Asymptotic Hermite invariant n/(2 pi e) of the self-dual family."""
    return n / (2.0 * math.pi * math.e)


@dataclass(frozen=True)
class RateBudget:
    """Capacities and geometric constants feeding the rate thresholds.

    ``geom_b`` / ``geom_e`` are t_b/t_e (fading), h_b/h_e (Gaussian) or
    d_b/d_e (MIMO) depending on the mode.
    """

    C_b: float
    C_e: float
    geom_b: float
    geom_e: float
    n: int = 1

    def __post_init__(self):
        if self.geom_b <= 0 or self.geom_e <= 0:
            raise ValueError("geometric constants must be positive")


def achievable_rates(budget: RateBudget, mode):
    """(R_max, R_prime_min, R_sum_max) for the selected mode.

    R_max may be negative: that is a valid "no positive secrecy rate" answer.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    n = budget.n
    if mode in ("siso-fading", "gaussian") and n != 1:
        raise ValueError(f"mode {mode} requires n = 1")
    if mode in ("siso-fading", "gaussian"):
        r_prime_min = budget.C_e + math.log(math.e / math.pi) - math.log(budget.geom_e)
        r_sum_max = budget.C_b - math.log(4.0 / (math.pi * math.e)) + math.log(budget.geom_b)
    else:
        r_prime_min = (budget.C_e + n * math.log(n * math.e / math.pi)
                       - math.log(budget.geom_e))
        r_sum_max = (budget.C_b - n * math.log(4.0 * n / (math.pi * math.e))
                     + math.log(budget.geom_b))
    kappa = (2.0 * n * math.log(2.0 * n / math.pi)
             - math.log(budget.geom_b * budget.geom_e))
    r_max = budget.C_b - budget.C_e - kappa
    return r_max, r_prime_min, r_sum_max


def gaussian_capacity(rho):
    """ln(1 + rho), nats per complex channel use."""
    return np.log1p(rho)


def rayleigh_capacity(rho):
    """E[ln(1 + rho |h|^2)] for |h|^2 ~ Exp(1): e^{1/rho} E_1(1/rho)."""
    rho = np.asarray(rho, dtype=float)
    inv = 1.0 / rho
    return np.exp(inv) * exp1(inv)


def snr_db_to_linear(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0)


def kappa_as_db_shift(kappa_nats):
    """High-SNR horizontal shift of the rate curve in dB (ln 10 / 10 per dB)."""
    return kappa_nats / (math.log(10.0) / 10.0)


def positive_rate_crossing(kappa_nats, snr_e_db, law="rayleigh",
                           lo_db=-10.0, hi_db=80.0):
    """Bob SNR (dB) at which C_b first exceeds C_e + kappa for the given law."""
    cap = rayleigh_capacity if law == "rayleigh" else gaussian_capacity
    target = float(cap(snr_db_to_linear(snr_e_db))) + kappa_nats

    def f(db):
        return float(cap(snr_db_to_linear(db))) - target

    if f(hi_db) < 0:
        raise ValueError("crossing above search range")
    lo, hi = lo_db, hi_db
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# -- compound / arbitrarily varying uncertainty sets ---------------------------

def logdet_statistic(blocks, rho):
    """(1/k) sum_i ln det(I + rho H_i^H H_i) over channel blocks."""
    vals = []
    for h in blocks:
        h = np.atleast_2d(np.asarray(h, dtype=complex))
        g = np.eye(h.shape[1]) + rho * h.conj().T @ h
        sign, logdet = np.linalg.slogdet(g)
        vals.append(logdet)
    return float(np.mean(vals))


def compound_sets_check(blocks_b, blocks_e, C_b, C_e, rho_b, rho_e):
    """Membership of block-diagonal channel pairs in the uncertainty sets.

    The compound sets require every block to satisfy the log-det inequality
    individually (static channels); the arbitrarily-varying sets only
    constrain the per-block average.  Returns the statistics and booleans.
    """
    stat_b = logdet_statistic(blocks_b, rho_b)
    stat_e = logdet_statistic(blocks_e, rho_e)
    per_b = [logdet_statistic([h], rho_b) for h in blocks_b]
    per_e = [logdet_statistic([h], rho_e) for h in blocks_e]
    return {
        "stat_b": stat_b,
        "stat_e": stat_e,
        "av_in_bob_set": stat_b >= C_b,
        "av_in_eve_set": stat_e <= C_e,
        "compound_in_bob_set": all(v >= C_b for v in per_b),
        "compound_in_eve_set": all(v <= C_e for v in per_e),
    }
