"""Fading/MIMO wiretap channel simulation and decoding.

Channel realizations are block-diagonal: k blocks of shape (n_rx, n_tx)
(scalars for single-antenna laws).  Bob's decoder performs MMSE-GDFE
preprocessing -- the thin QR of the SNR-augmented channel -- which turns
regularized MAP decoding into an exact closest-point search in R Lambda_b.

Monte Carlo loops are seeded per trial from a master seed by counter, so
results are bit-identical for a fixed seed regardless of worker count or
trial-range splitting.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import reduction
from .errors import EnumerationLimit
from .gaussians import banaszczyk_constant, binned_l1_distance, flatness_factor, theta_sum
from .lattices import Lattice
from .linalg import complex_to_real, real_rep, real_to_complex
from .rates import rayleigh_capacity
from .wiretap import WiretapCode

LAWS = ("static", "rayleigh_iid", "block_fading", "custom_sequence")


@dataclass
class FadingSpec:
    """Channel-law description for one link.

    ``static_value`` is the fixed gain (scalar or n_rx x n_tx matrix) for the
    static law; ``block_len`` the coherence length for block fading;
    ``sequence`` a callable (rng, k) -> (k, n_rx, n_tx) array for custom laws.
    ``snr`` is the per-symbol SNR rho used in the log-det statistic.
    """

    law: str = "rayleigh_iid"
    n_tx: int = 1
    n_rx: int = 1
    noise_var: float = 1.0
    snr: float = 1.0
    static_value: object = 1.0
    block_len: int = 1
    sequence: Optional[Callable] = None

    def __post_init__(self):
        if self.law not in LAWS:
            raise ValueError(f"unknown law {self.law!r}")
        if self.noise_var <= 0 or self.block_len < 1:
            raise ValueError("noise_var must be positive and block_len >= 1")
        if self.n_rx < self.n_tx:
            raise ValueError("n_rx >= n_tx is assumed throughout")

    def static_block(self):
        v = np.asarray(self.static_value, dtype=complex)
        if v.ndim == 0:
            v = v * np.eye(self.n_rx, self.n_tx, dtype=complex)
        return v.reshape(self.n_rx, self.n_tx)


@dataclass
class ChannelRealization:
    """Block-diagonal realization with its log-det statistic."""

    blocks: np.ndarray          # (k, n_rx, n_tx)
    snr: float
    statistic: float = field(init=False)

    def __post_init__(self):
        self.statistic = logdet_mean(self.blocks, self.snr)

    @property
    def k(self):
        return self.blocks.shape[0]

    def diag_matrix(self):
        k, nr, nt = self.blocks.shape
        out = np.zeros((k * nr, k * nt), dtype=complex)
        for i in range(k):
            out[i * nr:(i + 1) * nr, i * nt:(i + 1) * nt] = self.blocks[i]
        return out


def logdet_mean(blocks, rho):
    blocks = np.asarray(blocks, dtype=complex)
    g = np.eye(blocks.shape[2]) + rho * np.einsum("kij,kil->kjl",
                                                  blocks.conj(), blocks)
    sign, logdet = np.linalg.slogdet(g)
    return float(np.mean(logdet.real))


def draw_channel(spec: FadingSpec, k, rng) -> ChannelRealization:
    """One block-diagonal realization of the law."""
    nr, nt = spec.n_rx, spec.n_tx
    if spec.law == "static":
        blocks = np.broadcast_to(spec.static_block(), (k, nr, nt)).copy()
    elif spec.law == "rayleigh_iid":
        blocks = _cn01(rng, (k, nr, nt))
    elif spec.law == "block_fading":
        nblocks = -(-k // spec.block_len)
        draws = _cn01(rng, (nblocks, nr, nt))
        blocks = np.repeat(draws, spec.block_len, axis=0)[:k]
    else:
        blocks = np.asarray(spec.sequence(rng, k), dtype=complex).reshape(k, nr, nt)
    return ChannelRealization(blocks=blocks, snr=spec.snr)


def _cn01(rng, shape):
    return (rng.normal(size=shape) + 1j * rng.normal(size=shape)) / math.sqrt(2.0)


def ergodic_capacity(spec: FadingSpec, rng=None, mc_k=200_000):
    """Long-run mean of the log-det statistic for the law."""
    if spec.law == "static":
        return logdet_mean(spec.static_block()[None], spec.snr)
    if spec.law in ("rayleigh_iid", "block_fading") and spec.n_tx == spec.n_rx == 1:
        return float(rayleigh_capacity(spec.snr))
    rng = rng if rng is not None else np.random.default_rng(0)
    real = draw_channel(spec, mc_k, rng)
    return real.statistic


def two_level_static_sequence(g_low, g_high):
    """Non-ergodic sequence: one of two static gains, chosen once per draw.

    The statistic never concentrates, so k * P{deviation} grows linearly --
    the canonical example excluded by the fast-LLN requirement on Eve's side.
    """
    def seq(rng, k):
        g = g_low if rng.random() < 0.5 else g_high
        return np.full((k, 1, 1), g, dtype=complex)
    return seq


def lln_diagnostic(spec: FadingSpec, k_list, delta, trials, master_seed=0,
                   capacity=None):
    """Deviation probabilities P{|statistic - C| > delta} per k.

    Returns a list of dicts {k, p_hat, k_p_hat}; the Eve-side fast-LLN
    condition asks k * p_hat -> 0.
    """
    if trials < 1000:
        raise ValueError("trials >= 1000 required for a stable estimate")
    cap = capacity if capacity is not None else ergodic_capacity(
        spec, rng=np.random.default_rng([master_seed, 0xC0FFEE]))
    out = []
    for ki, k in enumerate(k_list):
        rng = np.random.default_rng([master_seed, ki])
        stats = np.empty(trials)
        for t in range(trials):
            stats[t] = draw_channel(spec, k, rng).statistic
        p_hat = float(np.mean(np.abs(stats - cap) > delta))
        out.append({"k": int(k), "p_hat": p_hat, "k_p_hat": k * p_hat,
                    "capacity": cap})
    return out


# ---------------------------------------------------------------------------
# MMSE-GDFE preprocessing and MAP decoding
# ---------------------------------------------------------------------------

def mmse_gdfe(h_matrix, rho):
    """Thin QR of the SNR-augmented channel.

    Returns (R, Q1) with R^H R = H^H H + I/rho and
    Q1^H Q1 + (1/rho)(R^{-1})^H R^{-1} = I; R has positive real diagonal.
    """
    h = np.atleast_2d(np.asarray(h_matrix, dtype=complex))
    m = h.shape[1]
    aug = np.vstack([h, np.eye(m, dtype=complex) / math.sqrt(rho)])
    q, r = np.linalg.qr(aug)
    phase = np.diag(r).copy()
    phase = np.where(np.abs(phase) < 1e-300, 1.0, phase / np.abs(phase))
    r = np.diag(phase.conj()) @ r
    q = q @ np.diag(phase)
    return r, q[:h.shape[0], :]


def decode_map(code: WiretapCode, y, realization: ChannelRealization,
               noise_var):
    """Exact MAP decoding: argmin over Lambda_b of (1/rho)||x||^2 + ||y - Hx||^2.

    Reduces to a closest-point search in R Lambda_b after MMSE-GDFE
    preprocessing; returns the coset (message) index of the minimizer.
    """
    rho = code.sigma_s ** 2 / noise_var
    h = realization.diag_matrix()
    r, q1 = mmse_gdfe(h, rho)
    if code.is_matrix:
        r = np.kron(r, np.eye(code.n, dtype=complex))
        q1 = np.kron(q1, np.eye(code.n, dtype=complex))
    target = q1.conj().T @ np.asarray(y, dtype=complex)
    metric_basis = real_rep(r) @ code.lattice_b.basis
    coords = reduction.closest_point(metric_basis, complex_to_real(target))
    return code.coset_index(code.lattice_b.basis @ coords.astype(float))


def union_bound_static(code: WiretapCode, realization: ChannelRealization,
                       noise_var, c=1.0, tail_tol=1e-9):
    """Analytic union bound (and its Banaszczyk cap) for a fixed channel.

    union = ((1+eps)/(1-eps)) * sum_{x in R Lambda_b, x != 0} e^{-||x||^2/(4 sigma_b^2)};
    the cap (1+eps)/(1-eps) * eps_k applies when tau = 1/(2 sigma_b sqrt(pi))
    exceeds sqrt(dim) c / lambda1(R Lambda_b).
    """
    rho = code.sigma_s ** 2 / noise_var
    r, _ = mmse_gdfe(realization.diag_matrix(), rho)
    if code.is_matrix:
        r = np.kron(r, np.eye(code.n, dtype=complex))
    metric = Lattice(real_rep(r) @ code.lattice_b.basis)
    dim = metric.dim_real
    lam1, _ = metric.min_distance()
    tau = 1.0 / (2.0 * math.sqrt(math.pi * noise_var))
    cond = tau > math.sqrt(dim) * c / lam1
    cc = banaszczyk_constant(c)
    eps_k = cc ** dim / (1.0 - cc ** dim)
    eps_shape = flatness_factor(code.lattice_e, code.sigma_s, stop_above=1.0)
    if eps_shape >= 1.0:
        # subgaussian factor undefined: no finite union bound is claimed
        return {"union_bound": math.inf, "banaszczyk_bound": math.inf,
                "tau_condition": bool(cond), "eps_shape": eps_shape}
    subg = (1.0 + eps_shape) / (1.0 - eps_shape)
    a = 1.0 / (4.0 * noise_var)
    theta, _ = theta_sum(metric, a, tail_tol=tail_tol)
    union = subg * theta
    return {"union_bound": union, "banaszczyk_bound": subg * eps_k,
            "tau_condition": bool(cond), "eps_shape": eps_shape}


# ---------------------------------------------------------------------------
# Monte Carlo experiments
# ---------------------------------------------------------------------------

def _trial_rng(master_seed, *counters):
    return np.random.default_rng([int(master_seed) & 0xFFFFFFFFFFFFFFFF,
                                  *[int(c) for c in counters]])


def error_prob_mc(code: WiretapCode, spec_b: FadingSpec, trials,
                  master_seed=0, k=None, c=1.0, threads=1):
    """Monte Carlo error probability with the analytic fixed-channel bounds.

    Each trial encodes a uniform message, passes it through an independent
    channel/noise draw, and MAP-decodes.  For the static law the union bound
    and its Banaszczyk cap are evaluated once; for random laws they are NaN
    (they are fixed-channel statements).  Deterministic in (master_seed,
    trials); ``threads`` only affects speed.
    """
    k = k if k is not None else code.k
    errors = np.zeros(trials, dtype=np.int8)
    static = spec_b.law == "static"
    fixed_real = draw_channel(spec_b, k, _trial_rng(master_seed, 0)) if static else None

    def run(trial):
        rng = _trial_rng(master_seed, 1, trial)
        m = int(rng.integers(code.num_messages))
        x = real_to_complex(code.encode(m, rng))
        real = fixed_real if static else draw_channel(spec_b, k, rng)
        h = real.diag_matrix()
        if code.is_matrix:
            hx = np.kron(h, np.eye(code.n)) @ x
        else:
            hx = h @ x
        w = _cn01(rng, hx.shape) * math.sqrt(spec_b.noise_var)
        y = hx + w
        m_hat = decode_map(code, y, real, spec_b.noise_var)
        errors[trial] = m_hat != m

    if threads <= 1:
        for t in range(trials):
            run(t)
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            list(ex.map(run, range(trials)))
    p_e = float(errors.mean())
    se = math.sqrt(max(p_e * (1 - p_e), 1.0 / trials) / trials)
    out = {"P_e_hat": p_e, "se": se, "trials": trials,
           "union_bound": float("nan"), "banaszczyk_bound": float("nan"),
           "tau_condition": None}
    if static:
        out.update(union_bound_static(code, fixed_real, spec_b.noise_var, c=c))
    return out


def eve_observe(code: WiretapCode, m, spec_e: FadingSpec, rng, k=None,
                realization: ChannelRealization = None):
    """One observation at Eve, with the rectangular-channel reduction.

    Returns a dict with the (possibly reduced) observation ``z``, the
    discarded pure-noise component ``z_noise`` (empty when n_rx = n_tx), the
    realization, and the resample count for rank-deficient draws.
    """
    k = k if k is not None else code.k
    resamples = 0
    real = realization
    while True:
        if real is None:
            real = draw_channel(spec_e, k, rng)
        h = real.diag_matrix()
        if np.linalg.matrix_rank(h) == h.shape[1]:
            break
        real = None
        resamples += 1
        if resamples > 100:
            raise EnumerationLimit("persistent rank-deficient channel draws")
    x = real_to_complex(code.encode(m, rng))
    if code.is_matrix:
        hx = np.kron(h, np.eye(code.n)) @ x
    else:
        hx = h @ x
    w = _cn01(rng, (h.shape[0] * (code.n if code.is_matrix else 1),)) \
        * math.sqrt(spec_e.noise_var)
    z_full = hx + w
    if spec_e.n_rx == spec_e.n_tx:
        return {"z": z_full, "z_noise": np.zeros(0, dtype=complex),
                "realization": real, "resamples": resamples,
                "reduced_blocks": real.blocks}
    q, r = np.linalg.qr(h)
    phase = np.diag(r).copy()
    phase = np.where(np.abs(phase) < 1e-300, 1.0, phase / np.abs(phase))
    r = np.diag(phase.conj()) @ r
    q = q @ np.diag(phase)
    if code.is_matrix:
        q = np.kron(q, np.eye(code.n))
    z_prime = q.conj().T @ z_full
    # orthogonal complement carries pure noise
    q_full, _ = np.linalg.qr(np.asarray(q, dtype=complex), mode="complete")
    q_perp = q_full[:, q.shape[1]:]
    z_noise = q_perp.conj().T @ z_full
    nt = spec_e.n_tx
    red_blocks = np.array([r[i * nt:(i + 1) * nt, i * nt:(i + 1) * nt]
                           for i in range(k)])
    return {"z": z_prime, "z_noise": z_noise, "realization": real,
            "resamples": resamples, "reduced_blocks": red_blocks}


def leakage_estimate(code: WiretapCode, spec_e: FadingSpec, trials,
                     master_seed=0, k=None, bins_per_dim=None,
                     realization: ChannelRealization = None, batch=500_000):
    """Max-over-messages binned L1 distance of Eve's output to f_{sqrt(Sigma0)}.

    Fixed-channel experiment (the realization is drawn once if not given);
    Sigma0 = sigma_s^2 H H^H + sigma_e^2 I.  Returns the per-message debiased
    estimates, their max, and the analytic flatness 4*eps bound alongside.
    """
    from .wiretap import secrecy_threshold_check

    k = k if k is not None else code.k
    if k > 2 and not code.is_matrix:
        raise ValueError("density estimation regime is k <= 2")
    rng0 = _trial_rng(master_seed, 0)
    real = realization if realization is not None else draw_channel(spec_e, k, rng0)
    h = real.diag_matrix()
    if code.is_matrix:
        h = np.kron(h, np.eye(code.n))
    sigma0 = code.sigma_s ** 2 * (h @ h.conj().T) \
        + spec_e.noise_var * np.eye(h.shape[0], dtype=complex)
    if bins_per_dim is None:
        bins_per_dim = 64 if h.shape[0] == 1 else 16
    if code.is_matrix:
        blocks = real.blocks
    else:
        blocks = np.array([b[0, 0] for b in real.blocks])
    thresh = secrecy_threshold_check(code, blocks, spec_e.noise_var)
    per_message = []
    for m in range(code.num_messages):
        rng = _trial_rng(master_seed, 2, m)
        zs = []
        left = trials
        while left > 0:
            b = min(batch, left)
            x = real_to_complex(code.encode(m, rng, size=b))
            w = _cn01(rng, (b, h.shape[0])) * math.sqrt(spec_e.noise_var)
            zs.append(x @ h.T + w)
            left -= b
        z = np.concatenate(zs, axis=0)
        est = binned_l1_distance(z, sigma0, bins_per_dim, rng=rng)
        per_message.append(est)
    v_max = max(e["debiased"] for e in per_message)
    se_max = max(e["se"] for e in per_message)
    return {"V_per_message": per_message, "V_max": v_max, "se": se_max,
            "bound": 4.0 * thresh["epsilon"], "epsilon": thresh["epsilon"],
            "condition_met": thresh["condition_met"]}
