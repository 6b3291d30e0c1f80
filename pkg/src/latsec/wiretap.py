"""Nested-lattice wiretap codes with discrete-Gaussian shaping.

A code C(Lambda_b, Lambda_e) scales a base lattice to the target volumes

    V(Lambda_e) = (pi e P)^k / e^{k R'},
    V(Lambda_b) = (pi e P)^k / e^{k (R + R')}           (SISO, sigma_s^2 = P)

(MIMO: exponents n^2 k and nk, sigma_s^2 = P/n), realizing the nesting as
Lambda_e = s * Lambda_b for a positive integer s, so the confidential rate is
quantized to R = 2 ln s (MIMO: 2 n ln s).  Messages are coset leaders of
Lambda_b inside the half-open fundamental parallelotope of Lambda_e; encoding
samples the discrete Gaussian D_{Lambda_e + leader, sigma_s}.
"""

import itertools
import math

import numpy as np

from .errors import NestingError
from .gaussians import DiscreteGaussianSampler, flatness_factor
from .lattices import MatrixLattice
from .linalg import herm_inv_sqrt


class WiretapCode:
    """Nested pair Lambda_e subset Lambda_b with shaping parameter sigma_s."""

    def __init__(self, base, scale_ratio, alpha_b, R, R_prime, P, n=1,
                 power_backoff=0.0, theta_t=0.1):
        self.base = base
        self.is_matrix = isinstance(base, MatrixLattice)
        self.n = int(n)
        self.s = int(scale_ratio)
        self.alpha_b = float(alpha_b)
        self.alpha_e = self.alpha_b * self.s
        self.R = float(R)
        self.R_prime = float(R_prime)
        self.P = float(P)
        self.power_backoff = float(power_backoff)
        self.theta_t = float(theta_t)
        sigma_s2 = (self.P / self.n) * (1.0 - self.power_backoff)
        self.sigma_s = math.sqrt(sigma_s2)

        base_lat = base.real_lattice if self.is_matrix else base
        self.lattice_b = base_lat.scale(self.alpha_b)
        self.lattice_e = base_lat.scale(self.alpha_e)
        self.k = base_lat.dim_complex if not self.is_matrix else base.block_rows
        dim = base_lat.dim_real
        self.num_messages = self.s ** dim
        self._dim = dim
        self._leader_coords = np.array(
            list(itertools.product(range(self.s), repeat=dim)), dtype=np.int64)
        self._validate()

    def _validate(self):
        # nesting: every Lambda_e generator has integer coords in Lambda_b
        coords = np.linalg.solve(self.lattice_b.basis, self.lattice_e.basis)
        if not np.allclose(coords, np.round(coords), atol=1e-9):
            raise NestingError("Lambda_e is not a sublattice of Lambda_b")
        index = self.lattice_e.volume / self.lattice_b.volume
        if abs(index - self.num_messages) > 1e-6 * self.num_messages:
            raise NestingError("volume ratio does not match the coset count")
        expected = self._target_volume_e()
        if abs(self.lattice_e.volume - expected) > 1e-9 * expected:
            raise NestingError("Lambda_e volume does not match the rate bookkeeping")

    def _target_volume_e(self):
        if self.is_matrix:
            nn = self.n
            return ((math.pi * math.e * self.P / nn) ** (nn * nn * self.k)
                    / math.exp(nn * self.k * self.R_prime))
        return ((math.pi * math.e * self.P) ** self.k
                / math.exp(self.k * self.R_prime))

    # -- messages and cosets ---------------------------------------------------

    def coset_leader(self, m):
        """Real lattice vector of the m-th coset leader (lexicographic order)."""
        if not 0 <= m < self.num_messages:
            raise ValueError(f"message index {m} out of range")
        return self.lattice_b.basis @ self._leader_coords[m].astype(float)

    def coset_index(self, x_real):
        """Message index of a point of Lambda_b (reduction mod Lambda_e)."""
        coords = np.linalg.solve(self.lattice_b.basis, np.asarray(x_real, float))
        ic = np.round(coords).astype(np.int64)
        if not np.allclose(coords, ic, atol=1e-6):
            raise ValueError("point is not in Lambda_b")
        digits = np.mod(ic, self.s)
        # lexicographic mixed-radix index, most significant digit first
        idx = 0
        for d in digits:
            idx = idx * self.s + int(d)
        return idx

    def _sampler(self, m):
        if not hasattr(self, "_samplers"):
            self._samplers = {}
        if m not in self._samplers:
            self._samplers[m] = DiscreteGaussianSampler(
                self.lattice_e, shift=self.coset_leader(m), sigma=self.sigma_s)
        return self._samplers[m]

    def encode(self, m, rng, size=None):
        """Sample x in Lambda_e + leader(m) from the shaping discrete Gaussian.

        Returns real vectors; ``decode`` of any returned point recovers m.
        """
        return self._sampler(m).sample(rng, size=size)

    def shaping_flatness(self, tail_tol=1e-12):
        """Flatness factor of Lambda_e at sqrt(theta_t * P) (power-check input)."""
        theta = (math.pi - self.theta_t) / math.pi
        sigma = math.sqrt(theta) * self.sigma_s
        return flatness_factor(self.lattice_e, sigma, tail_tol=tail_tol)

    def power_check(self, m, trials, rng):
        """Empirical per-dimension power against the shaping-lemma bound.

        Returns (empirical E||x||^2, analytic center k*sigma_s^2*..., bound).
        """
        xs = self.encode(m, rng, size=trials)
        emp = float(np.einsum("ij,ij->i", xs, xs).mean())
        eps = self.shaping_flatness()
        dim_c = self._dim // 2
        center = dim_c * self.sigma_s ** 2
        bound = 2.0 * math.pi * eps / (1.0 - eps) * self.sigma_s ** 2
        return emp, center, bound


def build_code(base, R, R_prime, P, n=1, power_backoff=0.0, theta_t=0.1,
               rate_tol=1e-9) -> WiretapCode:
    """Build C(Lambda_b, Lambda_e) at the requested rates.

    The integer-scalar nesting quantizes R to the ladder 2 n ln s; a request
    off the ladder raises NestingError carrying the nearest feasible rate.
    """
    if R <= 0 or R_prime <= 0:
        raise NestingError("rates must be positive")
    n = int(n)
    s = max(2, round(math.exp(R / (2.0 * n))))
    feasible = 2.0 * n * math.log(s)
    if abs(feasible - R) > rate_tol:
        cands = sorted({max(2, s - 1), s, s + 1})
        near = min((2.0 * n * math.log(c) for c in cands),
                   key=lambda r: abs(r - R))
        raise NestingError(
            f"rate {R} not on the nesting ladder; nearest feasible R = {near}",
            nearest_rate=near)
    is_matrix = isinstance(base, MatrixLattice)
    base_lat = base.real_lattice if is_matrix else base
    dim = base_lat.dim_real
    if is_matrix:
        if n != base.block_size:
            raise NestingError(
                f"antenna count {n} does not match the base block size "
                f"{base.block_size}")
        k = base.block_rows
        target_e = ((math.pi * math.e * P / n) ** (n * n * k)
                    / math.exp(n * k * R_prime))
    else:
        if n != 1:
            raise NestingError("vector codes require n = 1")
        k = base_lat.dim_complex
        target_e = (math.pi * math.e * P) ** k / math.exp(k * R_prime)
    alpha_e = (target_e / base_lat.volume) ** (1.0 / dim)
    alpha_b = alpha_e / s
    return WiretapCode(base, s, alpha_b, R, R_prime, P, n=n,
                       power_backoff=power_backoff, theta_t=theta_t)


def secrecy_threshold_check(code: WiretapCode, h_blocks, sigma_e2, c=1.0,
                            tail_tol=1e-9, max_points=2_000_000):
    """Eve-side flatness, leakage bound, and the sufficient-condition verdict.

    ``h_blocks`` is the fixed eavesdropper realization: complex gains (SISO)
    or a list of square blocks (MIMO, n_e = n).  Computes the exact flatness
    factor of the whitened faded lattice eps = eps_{Sigma^{-1/2} H_e
    Lambda_e}(1), the analytic leakage bound 8 m k eps R - 8 eps ln(8 eps)
    (m = 1 for SISO, n^2 for MIMO), and whether the product-distance
    sufficient condition holds at parameter c.
    """
    k = code.k
    n = code.n
    sigma_s2 = code.sigma_s ** 2
    if code.is_matrix:
        hmat = _block_diag([np.asarray(b, dtype=complex) for b in h_blocks])
    else:
        hmat = np.diag(np.asarray(h_blocks, dtype=complex))
    hh = hmat @ hmat.conj().T
    sigma_inv = np.linalg.inv(hh) / sigma_s2 + np.eye(hh.shape[0]) / sigma_e2
    sigma = np.linalg.inv(sigma_inv)
    white = herm_inv_sqrt(sigma)
    fade = white @ hmat
    if code.is_matrix:
        fade = np.kron(fade, np.eye(n))
    faded_lat = code.lattice_e.transform(fade)
    eps = flatness_factor(faded_lat, 1.0, tail_tol=tail_tol)
    mult = 1 if not code.is_matrix else n * n
    # the variational-distance-to-leakage conversion needs 8 eps <= 1;
    # past that no finite bound is claimed (vacuous)
    if 0.0 < eps <= 0.125:
        leak = 8.0 * mult * k * eps * code.R - 8.0 * eps * math.log(8.0 * eps)
    elif eps == 0.0:
        leak = 0.0
    else:
        leak = math.inf
    # sufficient condition from the product-distance / pdet route
    rho_e = sigma_s2 / sigma_e2
    if code.is_matrix:
        logdets = []
        for b in h_blocks:
            b = np.asarray(b, dtype=complex)
            g = np.eye(b.shape[1]) + rho_e * b.conj().T @ b
            logdets.append(float(np.linalg.slogdet(g)[1]))
        cbar = float(np.mean(logdets))
        dual = code_dual_matrix(code)
        pdet_star = dual.pdet_min()[0]
        lhs = (2.0 * c * math.sqrt(n) * math.exp(cbar / (2 * n))
               / (pdet_star ** (1.0 / (n * k)) * code.sigma_s * math.sqrt(2 * math.pi)))
    else:
        gains = 1.0 + rho_e * np.abs(np.asarray(h_blocks, dtype=complex)) ** 2
        cbar = float(np.log(gains).mean())
        p_star = code.lattice_e.dual().product_distance()[0]
        lhs = (2.0 * c * math.exp(cbar / 2.0)
               / (p_star ** (1.0 / k) * math.sqrt(2.0 * math.pi * sigma_s2)))
    return {"epsilon": eps, "leakage_bound": leak,
            "condition_met": bool(lhs <= 1.0), "condition_lhs": lhs,
            "eve_logdet_mean": cbar}


def code_dual_matrix(code: WiretapCode) -> MatrixLattice:
    """Dual of the Eve-side lattice of a matrix code, as a MatrixLattice."""
    base_dual = code.base.dual()
    return base_dual.scale(1.0 / code.alpha_e)


def _block_diag(blocks):
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=complex)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
