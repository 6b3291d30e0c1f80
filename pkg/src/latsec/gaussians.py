"""Lattice Gaussian measures: flatness factor, smoothing, exact sampling.

The flatness factor of a lattice at (complex, per-dimension) parameter sigma
is the maximum deviation of the lattice-periodized Gaussian from uniform over
a fundamental region.  By Poisson summation it equals the dual theta sum

    eps_Lambda(sigma) = sum_{x* in dual, x* != 0} exp(-pi^2 sigma^2 ||x*||^2),

with the maximum attained at the origin since every Fourier coefficient is
positive.  Correlated parameters are always reduced to the scalar case by
whitening: eps_Lambda(sqrt(Sigma)) = eps_{Sigma^{-1/2} Lambda}(1).

All theta-like sums carry a certified tail bound obtained from Banaszczyk's
inequality: with rho(A) = sum_{x in A} exp(-pi ||x||^2) and C = c sqrt(2 pi e)
exp(-pi c^2) < 1 for c >= 1/sqrt(2 pi),

    rho(L \\ c sqrt(n) B) < C^n rho(L),      (and < 2 C^n rho(L) for cosets)

so enumerating a ball and applying the bound gives rigorous truncation error.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .errors import NotSmoothEnough, TailToleranceError
from .lattices import Lattice
from .linalg import complex_to_real, herm_inv_sqrt, herm_sqrt, real_rep, real_to_complex

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def banaszczyk_constant(c):
    """C = c sqrt(2 pi e) exp(-pi c^2); < 1 exactly when c > 1/sqrt(2 pi)."""
    return c * math.sqrt(2.0 * math.pi * math.e) * math.exp(-math.pi * c * c)


# ---------------------------------------------------------------------------
# certified theta sums
# ---------------------------------------------------------------------------

def theta_sum(lat: Lattice, a, tail_tol=1e-12, max_points=2_000_000,
              stop_above=None):
    """Certified sum_{x in Lambda \\ 0} exp(-a ||x||^2).

    Returns ``(value, tail_bound)`` with the guarantee that the true sum lies
    in [value, value + tail_bound] and tail_bound <= tail_tol.  If
    ``stop_above`` is given and the partial sum already exceeds it, the search
    stops early and returns (partial, inf): a certified lower bound, enough to
    know the sum is large.  Raises TailToleranceError if the certificate
    cannot be achieved.
    """
    a = float(a)
    if a <= 0:
        raise ValueError("exponent coefficient must be positive")
    n = lat.dim_real
    tau = math.sqrt(a / math.pi)
    # start just above the smallest certifiable radius
    radius = 1.05 * math.sqrt(n) * _INV_SQRT_2PI / tau
    for _ in range(200):
        c = tau * radius / math.sqrt(n)
        cc = banaszczyk_constant(c)
        if cc >= 1.0 - 1e-12:
            radius *= 1.3
            continue
        pts = lat.enumerate(radius, point_budget=max_points)
        vecs = pts @ lat.basis.T
        norms2 = np.einsum("ij,ij->i", vecs, vecs) if len(pts) else np.zeros(0)
        inner = float(np.exp(-a * norms2).sum()) if len(pts) else 0.0
        if stop_above is not None and inner >= stop_above:
            return inner, math.inf
        rho_in = 1.0 + inner
        tail = cc ** n * rho_in / (1.0 - cc ** n)
        if tail <= tail_tol:
            return inner, tail
        radius *= 1.3
    raise TailToleranceError(
        f"theta tail bound not achievable at tol={tail_tol} within budget")


def _shift_to_real(shift, lat):
    """Normalize a coset shift: complex length-k or real length-2k accepted."""
    if shift is None:
        return np.zeros(lat.dim_real)
    arr = np.asarray(shift)
    if np.iscomplexobj(arr):
        return complex_to_real(arr.astype(complex))
    arr = arr.astype(float)
    if arr.shape == (lat.dim_real,):
        return arr
    if arr.shape == (lat.dim_complex,):
        return complex_to_real(arr.astype(complex))
    raise ValueError("shift must have length k (complex) or 2k (real)")


def _coset_weights(lat: Lattice, shift_real, sigma, rel_tail=1e-12,
                   max_points=2_000_000, trunc_mult=1.5):
    """Truncated Gaussian weights over the coset (Lambda + shift).

    Returns ``(points_real, weights, rel_tail_bound)`` where points are the
    real coset vectors inside the certified ball, weights are the normalized
    exp(-||x||^2 / sigma^2) masses, and rel_tail_bound bounds the truncated-out
    relative mass.  The coset version of Banaszczyk's bound carries a factor 2.
    """
    sigma = float(sigma)
    a = 1.0 / sigma ** 2
    n = lat.dim_real
    tau = math.sqrt(a / math.pi)
    shift = np.asarray(shift_real, dtype=float)
    # start at one Banaszczyk radius and grow until the mass certificate
    # holds; trunc_mult can push the start lower for dense high-dim clouds
    radius = min(trunc_mult, 1.0) * math.sqrt(n) / tau
    for _ in range(200):
        c = tau * radius / math.sqrt(n)
        cc = banaszczyk_constant(c)
        if cc >= 1.0 - 1e-12:
            radius *= 1.3
            continue
        # unshifted rho(tau Lambda) upper bound for the coset tail
        pts0 = lat.enumerate(radius, point_budget=max_points)
        if len(pts0):
            v0 = pts0 @ lat.basis.T
            rho_lat = 1.0 + float(np.exp(-a * np.einsum("ij,ij->i", v0, v0)).sum())
        else:
            rho_lat = 1.0
        rho_lat_ub = rho_lat / (1.0 - cc ** n)
        tail = 2.0 * cc ** n * rho_lat_ub
        # coset points: x = shift + lattice point, ||x|| <= radius
        # enumerate lattice points near -shift
        coords = _coset_points_in_ball(lat, -shift, radius, max_points)
        vecs = coords @ lat.basis.T + shift
        w = np.exp(-a * np.einsum("ij,ij->i", vecs, vecs))
        total = float(w.sum())
        if total <= 0:
            radius *= 1.5
            continue
        rel_tail_bound = tail / total
        if rel_tail_bound <= rel_tail:
            return vecs, w / total, rel_tail_bound
        radius *= 1.12
    raise TailToleranceError("coset truncation certificate not achievable")


def _coset_points_in_ball(lat, center_real, radius, max_points):
    """Integer coords x with ||basis @ x - center|| <= radius (center included)."""
    from .reduction import closest_point, enumerate_in_ball

    # shift by the closest lattice point so the local ball is centered near 0
    c0 = closest_point(lat.basis, np.asarray(center_real, dtype=float))
    resid = np.asarray(center_real, dtype=float) - lat.basis @ c0
    extra = float(np.linalg.norm(resid))
    pts = enumerate_in_ball(lat.basis, radius + extra, point_budget=max_points)
    pts = np.vstack([np.zeros((1, lat.dim_real), dtype=np.int64), pts])
    pts = pts + c0
    vecs = pts @ lat.basis.T - np.asarray(center_real, dtype=float)
    keep = np.einsum("ij,ij->i", vecs, vecs) <= radius ** 2 * (1 + 1e-12)
    return pts[keep]


# ---------------------------------------------------------------------------
# Gaussian spec and flatness factor
# ---------------------------------------------------------------------------

@dataclass
class GaussianSpec:
    """Circularly symmetric complex Gaussian f_{sqrt(Sigma), c}.

    Either a scalar per-complex-dimension ``sigma`` or a Hermitian positive
    definite ``covariance`` (k x k) may be given; ``center`` is a complex
    k-vector (zero by default).
    """

    sigma: float | None = None
    covariance: np.ndarray | None = None
    center: np.ndarray | None = None

    def __post_init__(self):
        if (self.sigma is None) == (self.covariance is None):
            raise ValueError("specify exactly one of sigma / covariance")
        if self.covariance is not None:
            self.covariance = np.asarray(self.covariance, dtype=complex)
            w = np.linalg.eigvalsh(self.covariance)
            if np.any(w <= 0):
                raise ValueError("covariance must be positive definite")

    def covariance_for(self, k):
        if self.sigma is not None:
            return self.sigma ** 2 * np.eye(k, dtype=complex)
        return self.covariance

    def center_for(self, k):
        if self.center is None:
            return np.zeros(k, dtype=complex)
        return np.asarray(self.center, dtype=complex)

    def whitened_lattice(self, lat: Lattice):
        """sqrt(Sigma)^{-1} Lambda, reducing correlated flatness to sigma = 1."""
        if self.sigma is not None:
            return lat.scale(1.0 / self.sigma)
        m = herm_inv_sqrt(self.covariance)
        return lat.transform(m)

    def density(self, z):
        """f_{sqrt(Sigma),c}(z) for complex row vectors z (last axis = k)."""
        z = np.atleast_2d(np.asarray(z, dtype=complex))
        k = z.shape[-1]
        sig = self.covariance_for(k)
        c = self.center_for(k)
        diff = z - c
        inv = np.linalg.inv(sig)
        quad = np.einsum("...i,ij,...j->...", diff.conj(), inv, diff).real
        norm = math.pi ** k * float(np.linalg.det(sig).real)
        return np.exp(-quad) / norm

    def sample(self, rng, size, k):
        """Draw complex Gaussian rows of shape (size, k)."""
        sig = self.covariance_for(k)
        half = herm_sqrt(sig / 2.0)
        z = rng.normal(size=(size, k)) + 1j * rng.normal(size=(size, k))
        return self.center_for(k) + z @ half.T


def flatness_factor(lat: Lattice, spec, tail_tol=1e-12, stop_above=None):
    """Flatness factor eps_Lambda(sqrt(Sigma)) via the dual theta sum.

    ``spec`` may be a GaussianSpec or a scalar sigma.  The correlated case is
    whitened first; the returned value carries a certified tail <= tail_tol.
    With ``stop_above`` set, a value >= stop_above is only a lower bound
    (the sum is abandoned once it is known to be that large).
    """
    if not isinstance(spec, GaussianSpec):
        spec = GaussianSpec(sigma=float(spec))
    white = spec.whitened_lattice(lat)
    dual = white.dual()
    value, _ = theta_sum(dual, math.pi ** 2, tail_tol=tail_tol,
                         stop_above=stop_above)
    return value


def flatness_factor_grid(lat: Lattice, sigma, resolution=200, tail_rel=1e-10):
    """Independent grid-maximization oracle for 2-dimensional lattices.

    Evaluates max over the fundamental parallelotope of
    |V * f_{sigma,Lambda}(z) - 1| by direct periodization of the primal
    Gaussian (no dual sum involved).
    """
    if lat.dim_real != 2:
        raise ValueError("grid oracle is implemented for 2-dim lattices only")
    sigma = float(sigma)
    # fundamental parallelotope sample points (corner included, so the lattice
    # point itself, where the deviation peaks, is on the grid)
    t = np.arange(resolution) / resolution
    tt = np.stack(np.meshgrid(t, t, indexing="ij"), axis=-1).reshape(-1, 2)
    zs = tt @ lat.basis.T
    a = 1.0 / sigma ** 2
    diag = float(np.linalg.norm(np.abs(lat.basis).sum(axis=1)))
    pts, _ = _primal_cloud(lat, a=a, rel=tail_rel, extra=diag)
    diffs = zs[:, None, :] - pts[None, :, :]
    vals = np.exp(-a * np.einsum("pqi,pqi->pq", diffs, diffs)).sum(axis=1)
    dens = vals / (math.pi * sigma ** 2)
    dev = np.abs(lat.volume * dens - 1.0)
    return float(dev.max())


def _primal_cloud(lat, a, rel, extra):
    """Lattice points (including 0) within a certified radius for density sums.

    The returned tail bounds the coset sum of exp(-a ||x - z||^2) over
    excluded points, uniformly over z within ``extra`` of the origin.
    """
    sigma2 = 1.0 / a
    n = lat.dim_real
    tau = math.sqrt(a / math.pi)
    radius = 6.0 * math.sqrt(n * sigma2 / 2.0) + extra
    for _ in range(60):
        pts = lat.enumerate(radius)
        pts = np.vstack([np.zeros((1, n), dtype=np.int64), pts])
        vecs = pts @ lat.basis.T
        norms2 = np.einsum("ij,ij->i", vecs, vecs)
        rho_in = float(np.exp(-a * norms2).sum())
        c = tau * max(radius - extra, 1e-9) / math.sqrt(n)
        cc = banaszczyk_constant(c)
        if cc < 1.0:
            rho_ub = rho_in / (1.0 - cc ** n)
            tail = 2.0 * cc ** n * rho_ub / (1.0 - cc ** n)
            if tail <= rel:
                return vecs, tail
        radius *= 1.3
    raise TailToleranceError("primal cloud radius not certifiable")


def smoothing_parameter(lat: Lattice, eps, rel_tol=1e-10):
    """Smallest s with sum_{x* != 0} exp(-(pi/2) s^2 ||x*||^2) <= eps.

    Related to the flatness factor by sqrt(2 pi) sigma = eta_eps(Lambda)
    iff eps_Lambda(sigma) = eps.
    """
    if not 0 < eps < 1:
        raise ValueError("eps must be in (0, 1)")
    dual = lat.dual()

    def dual_sum(s):
        tol = max(1e-16, eps * 1e-13)
        val, _ = theta_sum(dual, 0.5 * math.pi * s * s, tail_tol=tol)
        return val

    lam1_dual, _ = dual.min_distance()
    s_hi = math.sqrt(2.0 * math.log(2.0 / eps) / math.pi) / lam1_dual + 1.0
    while dual_sum(s_hi) > eps:
        s_hi *= 2.0
    s_lo = s_hi / 2.0
    while dual_sum(s_lo) <= eps:
        s_lo /= 2.0
        if s_lo < 1e-12:
            raise TailToleranceError("smoothing bisection bracket collapsed")
    for _ in range(200):
        mid = 0.5 * (s_lo + s_hi)
        if dual_sum(mid) <= eps:
            s_hi = mid
        else:
            s_lo = mid
        if (s_hi - s_lo) <= rel_tol * s_hi:
            break
    return s_hi


def banaszczyk_tail(lat: Lattice, tau, c):
    """Evaluate the Banaszczyk tail inequality on Lambda.

    Returns ``(lhs, rhs_bound, holds)`` where lhs is the certified sum
    sum_{x != 0} exp(-tau^2 pi ||x||^2), rhs = C^n/(1 - C^n), and holds
    reports lhs <= rhs.  If tau violates the precondition
    tau > sqrt(n) c / lambda1, holds is None (not applicable).
    """
    if c <= _INV_SQRT_2PI:
        raise ValueError("c must exceed 1/sqrt(2 pi)")
    n = lat.dim_real
    lam1, _ = lat.min_distance()
    cc = banaszczyk_constant(c)
    rhs = cc ** n / (1.0 - cc ** n) if cc < 1.0 else math.inf
    lhs, _ = theta_sum(lat, math.pi * tau * tau,
                       tail_tol=max(1e-18, 1e-9 * rhs if math.isfinite(rhs) else 1e-18))
    if tau <= math.sqrt(n) * c / lam1:
        return lhs, rhs, None
    return lhs, rhs, bool(lhs <= rhs)


# ---------------------------------------------------------------------------
# exact truncated discrete Gaussian sampler
# ---------------------------------------------------------------------------

class DiscreteGaussianSampler:
    """Exact categorical sampler for D_{Lambda + shift, sqrt(Sigma)}.

    The support is truncated to a ball whose discarded relative mass is
    certified below ``mass_tol`` (Banaszczyk coset bound); within it, the
    sampler is exact.  Construction precomputes the normalized point cloud;
    sampling only consumes the supplied RNG stream, so independent streams
    may be used concurrently.
    """

    def __init__(self, lattice: Lattice, shift=None, sigma=1.0,
                 covariance=None, trunc_mult=1.5, mass_tol=1e-12):
        self.lattice = lattice
        shift_real = _shift_to_real(shift, lattice)
        self.shift_real = shift_real
        if covariance is not None:
            # whiten: sample the transformed lattice at sigma = 1, map back
            m = herm_inv_sqrt(covariance)
            white = lattice.transform(m)
            wshift = real_rep(m) @ shift_real
            self._white = DiscreteGaussianSampler(white, shift=wshift, sigma=1.0,
                                                  trunc_mult=trunc_mult,
                                                  mass_tol=mass_tol)
            back = real_rep(herm_sqrt(covariance))
            self.points_real = self._white.points_real @ back.T
            self.weights = self._white.weights
            self.truncation_error = self._white.truncation_error
            self.sigma = None
            self.covariance = np.asarray(covariance, dtype=complex)
        else:
            self.sigma = float(sigma)
            self.covariance = None
            pts, w, tail = _coset_weights(lattice, shift_real, self.sigma,
                                          rel_tail=mass_tol,
                                          trunc_mult=trunc_mult)
            self.points_real = pts
            self.weights = w
            self.truncation_error = tail
        self.trunc_mult = trunc_mult
        self._cumw = np.cumsum(self.weights)
        self._cumw[-1] = 1.0

    @property
    def support_size(self):
        return len(self.weights)

    def sample(self, rng, size=None):
        """Draw lattice points; returns real vectors (size x 2k) or one vector."""
        u = rng.random(size if size is not None else 1)
        idx = np.searchsorted(self._cumw, u, side="left")
        out = self.points_real[idx]
        return out if size is not None else out[0]

    def sample_complex(self, rng, size=None):
        out = self.sample(rng, size=size if size is not None else 1)
        z = real_to_complex(out)
        return z if size is not None else z[0]

    def entropy(self):
        """Exact entropy (nats) of the truncated point distribution."""
        w = self.weights[self.weights > 0]
        return float(-(w * np.log(w)).sum())

    def second_moment(self):
        """Exact E||x||^2 over the truncated support."""
        n2 = np.einsum("ij,ij->i", self.points_real, self.points_real)
        return float((self.weights * n2).sum())


# ---------------------------------------------------------------------------
# executable lemma checks
# ---------------------------------------------------------------------------

def binned_l1_distance(samples_complex, target_cov, bins_per_dim,
                       rng=None, null_reps=64, bootstrap_reps=64):
    """Binned L1 distance between complex samples and f_{sqrt(Sigma0)}.

    Samples are whitened by Sigma0^{-1/2}; each real dimension is split into
    equal-mass standard-normal quantile bins, making the target multinomial
    uniform.  Returns a dict with the raw binned L1, a null-calibrated
    (debiased) estimate, the analytic/simulated null floor, and a bootstrap
    standard error.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    z = np.asarray(samples_complex)
    if z.ndim == 1:
        z = z[:, None]
    k = z.shape[1]
    white = herm_inv_sqrt(np.asarray(target_cov, dtype=complex) * 0.5)
    # real coordinates have covariance Sigma0/2 per real dim pair
    zr = complex_to_real(z @ white.T)
    d = 2 * k
    edges = stats.norm.ppf(np.arange(1, bins_per_dim) / bins_per_dim)
    idx = np.zeros(len(zr), dtype=np.int64)
    for j in range(d):
        idx = idx * bins_per_dim + np.searchsorted(edges, zr[:, j], side="left")
    n_cells = bins_per_dim ** d
    counts = np.bincount(idx, minlength=n_cells).astype(float)
    n = float(len(zr))
    p0 = 1.0 / n_cells
    raw = float(np.abs(counts / n - p0).sum())
    # parametric null calibration: same statistic when H0 is exactly true
    null_vals = np.empty(null_reps)
    for r in range(null_reps):
        cn = rng.multinomial(int(n), np.full(n_cells, p0))
        null_vals[r] = np.abs(cn / n - p0).sum()
    null_floor = float(null_vals.mean())
    null_sd = float(null_vals.std(ddof=1))
    # bootstrap SE of the raw statistic
    p_hat = counts / n
    boot = np.empty(bootstrap_reps)
    for r in range(bootstrap_reps):
        cb = rng.multinomial(int(n), p_hat)
        boot[r] = np.abs(cb / n - p0).sum()
    boot_se = float(boot.std(ddof=1))
    debiased = max(0.0, raw - null_floor)
    se = max(boot_se, null_sd)
    return {"raw": raw, "debiased": debiased, "null_floor": null_floor,
            "se": se}


def regev_mixture_check(lat: Lattice, shift, sigma1, sigma2, trials, rng,
                        bins_per_dim=None, batch=1_000_000):
    """Empirical check of the discrete+continuous Gaussian mixture lemma.

    X1 ~ D_{Lambda+shift, sqrt(Sigma1)}, X2 ~ f_{sqrt(Sigma2)}; the density of
    X1 + X2 should be within L1 distance 4 * eps of f_{sqrt(Sigma0)}, where
    Sigma0 = Sigma1 + Sigma2 and eps is the flatness factor at Sigma with
    Sigma^{-1} = Sigma1^{-1} + Sigma2^{-1}.  Raises NotSmoothEnough when
    eps > 1/2 (the lemma's precondition).
    """
    k = lat.dim_complex
    s1 = _as_cov(sigma1, k)
    s2 = _as_cov(sigma2, k)
    sigma = np.linalg.inv(np.linalg.inv(s1) + np.linalg.inv(s2))
    eps = flatness_factor(lat, GaussianSpec(covariance=sigma))
    if eps > 0.5:
        raise NotSmoothEnough(f"flatness factor {eps:.3g} exceeds 1/2")
    s0 = s1 + s2
    sampler = DiscreteGaussianSampler(lat, shift=shift, covariance=s1)
    spec2 = GaussianSpec(covariance=s2)
    if bins_per_dim is None:
        bins_per_dim = 64 if k == 1 else 16
    zs = []
    remaining = trials
    while remaining > 0:
        m = min(batch, remaining)
        x1 = real_to_complex(sampler.sample(rng, size=m))
        x2 = spec2.sample(rng, m, k)
        zs.append(x1 + x2)
        remaining -= m
    z = np.concatenate(zs, axis=0)
    est = binned_l1_distance(z, s0, bins_per_dim, rng=rng)
    est["bound"] = 4.0 * eps
    est["epsilon"] = eps
    return est


def _as_cov(sig, k):
    """Covariance matrix from a scalar (sigma^2-style covariance) or a matrix."""
    arr = np.asarray(sig)
    if arr.ndim == 0:
        return float(arr) * np.eye(k, dtype=complex)
    return arr.astype(complex)


def linear_transform_check(lat: Lattice, shift, sigma, a_matrix, trials, rng):
    """Chi-square check that A X has law D_{A(Lambda+shift), sqrt(A Sigma A^H)}.

    Samples X from the discrete Gaussian, maps through A, and compares
    per-point frequencies with the analytic weights of the transformed
    distribution (computed from the transformed covariance, not by reusing
    the source weights).  Returns the scipy chi-square p-value.
    """
    a_matrix = np.asarray(a_matrix, dtype=complex)
    if abs(np.linalg.det(a_matrix)) < 1e-12:
        raise ValueError("transform must be invertible")
    k = lat.dim_complex
    cov = _as_cov(sigma, k)
    sampler = DiscreteGaussianSampler(lat, shift=shift, covariance=cov)
    # analytic transformed weights on the mapped support
    mapped = real_to_complex(sampler.points_real) @ a_matrix.T
    cov_t = a_matrix @ cov @ a_matrix.conj().T
    inv_t = np.linalg.inv(cov_t)
    quad = np.einsum("ij,jk,ik->i", mapped.conj(), inv_t, mapped).real
    w = np.exp(-(quad - quad.min()))
    w /= w.sum()
    draws = rng.random(trials)
    idx = np.searchsorted(np.cumsum(sampler.weights), draws, side="left")
    counts = np.bincount(idx, minlength=sampler.support_size).astype(float)
    # merge cells with tiny expectation into one bin for a valid chi-square
    exp = w * trials
    big = exp >= 5.0
    obs_b = np.concatenate([counts[big], [counts[~big].sum()]])
    exp_b = np.concatenate([exp[big], [exp[~big].sum()]])
    keep = exp_b > 0
    chi2, p = stats.chisquare(obs_b[keep], exp_b[keep])
    return {"p_value": float(p), "chi2": float(chi2), "cells": int(keep.sum())}


def subgaussian_mgf_check(lat: Lattice, shift, sigma, a_matrix, t_vectors):
    """Exact moment-generating-function bound check for discrete Gaussians.

    For each complex test vector t, evaluates E[exp(Re(t^H A x))] over the
    truncated support of D_{Lambda+shift, sigma} and divides by the bound
    ((1+eps)/(1-eps)) exp(sigma^2 ||A^H t||^2 / 4).  Returns the worst ratio
    (should be <= 1).
    """
    eps = flatness_factor(lat, sigma)
    if eps >= 1.0:
        raise NotSmoothEnough(f"flatness factor {eps:.3g} >= 1")
    a_matrix = np.asarray(a_matrix, dtype=complex)
    sampler = DiscreteGaussianSampler(lat, shift=shift, sigma=sigma)
    x = real_to_complex(sampler.points_real)
    worst = 0.0
    for t in np.atleast_2d(np.asarray(t_vectors, dtype=complex)):
        vals = np.exp(((x @ a_matrix.T) @ t.conj()).real)
        mgf = float((sampler.weights * vals).sum())
        bound = (1.0 + eps) / (1.0 - eps) * math.exp(
            sigma ** 2 * float(np.linalg.norm(a_matrix.conj().T @ t) ** 2) / 4.0)
        worst = max(worst, mgf / bound)
    return worst
