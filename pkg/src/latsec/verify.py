"""Named lemma-level verification suites, runnable from the CLI.

Each suite is a list of (name, callable) pairs; a check returns a detail
string on success and raises AssertionError (with detail) on failure.  The
suites re-run the module invariants at light trial counts; the pytest suite
covers the same ground at full depth.
"""

import itertools
import math

import numpy as np

from . import catalog
from .algebras import algebra_codifferent, golden_algebra
from .channels import (FadingSpec, draw_channel, decode_map, error_prob_mc,
                       eve_observe, lln_diagnostic, mmse_gdfe,
                       two_level_static_sequence)
from .gaussians import (DiscreteGaussianSampler, banaszczyk_constant,
                        banaszczyk_tail, flatness_factor, flatness_factor_grid,
                        linear_transform_check, regev_mixture_check,
                        smoothing_parameter, subgaussian_mgf_check)
from .lattices import Lattice, devectorize, vectorize
from .linalg import real_to_complex
from .numberfields import (codifferent_ideal, codifferent_pairing_matrix,
                           ideal_lattice)
from .rates import RateBudget, achievable_rates, rate_constants
from .wiretap import build_code, secrecy_threshold_check


def _assert(cond, detail):
    if not cond:
        raise AssertionError(detail)
    return detail


# -- lattice suite -------------------------------------------------------------

def _check_dual_roundtrip():
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(5):
        b = rng.normal(size=(4, 4)) + 2.0 * np.eye(4)
        lat = Lattice(b)
        dd = lat.dual().dual()
        worst = max(worst, float(np.abs(dd.basis - lat.basis).max()))
        prod = lat.volume * lat.dual().volume
        worst = max(worst, abs(prod - 1.0))
    return _assert(worst < 1e-9, f"dual roundtrip worst dev {worst:.2e}")


def _check_pairing_integrality():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(5):
        b = rng.normal(size=(4, 4)) + 2.0 * np.eye(4)
        lat = Lattice(b)
        pair = lat.dual().basis.T @ lat.basis
        worst = max(worst, float(np.abs(pair - np.round(pair)).max()))
    return _assert(worst < 1e-9, f"pairing integrality dev {worst:.2e}")


def _check_amgm_chain():
    names = ["gaussian-integers", "cyclotomic5", "cyclotomic8", "cyclotomic12"]
    margins = []
    for name in names:
        lat = catalog.lattice(name)
        k = lat.dim_complex
        _, np_norm, _ = lat.product_distance()
        h = lat.hermite_invariant()
        lhs = np_norm ** 2
        rhs = h ** k / k ** k
        _assert(lhs <= rhs * (1 + 1e-9), f"{name}: AM-GM chain violated")
        margins.append(rhs - lhs)
    return f"AM-GM chain holds; min margin {min(margins):.3e}"


def _check_enumeration_oracle():
    rng = np.random.default_rng(12)
    for t in range(3):
        b = rng.normal(size=(4, 4)) + 2.0 * np.eye(4)
        lat = Lattice(b)
        lam, _ = lat.min_distance()
        best = np.inf
        for c in itertools.product(range(-5, 6), repeat=4):
            if not any(c):
                continue
            v = b @ np.array(c, dtype=float)
            best = min(best, float(v @ v))
        _assert(abs(lam ** 2 - best) < 1e-9,
                f"enumeration vs brute force mismatch on trial {t}")
    return "min_distance matches brute force on random 4-dim lattices"


def _check_vectorize_isometry():
    rng = np.random.default_rng(13)
    h = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    x = rng.normal(size=(4, 2)) + 1j * rng.normal(size=(4, 2))
    lhs = vectorize(h @ x)
    rhs = np.kron(h, np.eye(2)) @ vectorize(x)
    dev = float(np.abs(lhs - rhs).max())
    _assert(dev < 1e-12, f"tensor identity dev {dev:.2e}")
    iso = abs(np.linalg.norm(vectorize(x)) - np.linalg.norm(x))
    _assert(iso < 1e-12, f"isometry dev {iso:.2e}")
    back = devectorize(vectorize(x), 4, 2)
    _assert(np.allclose(back, x), "devectorize roundtrip failed")
    return "vectorize isometry and tensor identity hold"


def _check_norm_pdet_chain():
    lat = catalog.lattice("golden-order")
    pts = lat.real_lattice.enumerate(2.5)
    for c in pts[:500]:
        x = lat.matrix(c)
        n2 = float(np.linalg.norm(x) ** 2)
        pd = abs(lat.pdet(x))
        nk = lat.block_size * lat.block_rows
        _assert(n2 >= nk * pd ** (2.0 / nk) - 1e-9, "norm/pdet inequality violated")
    return "norm >= nk |pdet|^{2/nk} on enumerated golden-order matrices"


# -- gauss suite ----------------------------------------------------------------

def _check_flatness_oracle():
    cases = [("z2", Lattice.integer(2))]
    rng = np.random.default_rng(14)
    b = rng.normal(size=(2, 2)) + 1.5 * np.eye(2)
    cases.append(("random2", Lattice(b / abs(np.linalg.det(b)) ** 0.5)))
    cases.append(("Q(i)", catalog.lattice("gaussian-integers")))
    worst = 0.0
    for name, lat in cases:
        theta = flatness_factor(lat, 1.0)
        grid = flatness_factor_grid(lat, 1.0, resolution=200)
        worst = max(worst, abs(theta - grid))
    return _assert(worst < 1e-6, f"flatness oracle dev {worst:.2e}")


def _check_smoothing_flatness_roundtrip():
    lat = Lattice.integer(2)
    eps = flatness_factor(lat, 1.0)
    eta = smoothing_parameter(lat, eps)
    dev = abs(eta - math.sqrt(2 * math.pi)) / math.sqrt(2 * math.pi)
    return _assert(dev < 1e-8, f"eta/flatness roundtrip rel dev {dev:.2e}")


def _check_banaszczyk_suite():
    lats = [Lattice.integer(2), Lattice.integer(4),
            catalog.lattice("cyclotomic5")]
    for lat in lats:
        lam1, _ = lat.min_distance()
        n = lat.dim_real
        for c in (0.8, 1.0, 1.5):
            tau = math.sqrt(n) * c / lam1 * 1.05
            lhs, rhs, holds = banaszczyk_tail(lat, tau, c)
            _assert(holds, f"Banaszczyk tail fails at c={c} on {n}-dim lattice")
            # flatness form of the bound at the boundary radius
            sigma = math.sqrt(n) * c / (math.sqrt(math.pi) * lam1)
            eps = flatness_factor(lat.dual(), sigma)
            cc = banaszczyk_constant(c)
            _assert(eps <= cc ** n / (1 - cc ** n) + 1e-12,
                    f"flatness-form bound fails at c={c}")
    return "Banaszczyk tail and flatness-form bounds hold on the test lattices"


def _check_sampler_normalization():
    lat = Lattice.integer(2)
    s = DiscreteGaussianSampler(lat, shift=np.array([0.5 + 0.5j]), sigma=1.3)
    total = float(s.weights.sum())
    _assert(abs(total - 1.0) < 1e-12, "weights do not sum to 1")
    _assert(s.truncation_error < 1e-12, "truncation mass above certificate")
    return f"sampler normalized; certified truncation {s.truncation_error:.1e}"


def _check_regev_light():
    lat = Lattice.integer(2)
    rng = np.random.default_rng(15)
    est = regev_mixture_check(lat, None, 4.0, 4.0, trials=200_000, rng=rng)
    _assert(est["debiased"] <= est["bound"] + 3 * est["se"],
            f"mixture distance {est['debiased']:.4f} above 4eps + 3se")
    return (f"mixture L1 debiased {est['debiased']:.4f} <= "
            f"4eps + 3se (eps={est['epsilon']:.2e})")


def _check_linear_transform_light():
    lat = Lattice.integer(2)
    rng = np.random.default_rng(16)
    a = np.array([[1.2 + 0.3j]])
    res = linear_transform_check(lat, None, 2.0, a, trials=200_000, rng=rng)
    _assert(res["p_value"] > 0.01, f"chi-square p={res['p_value']:.4f}")
    return f"linear transform chi-square p={res['p_value']:.3f}"


def _check_subgaussian_light():
    lat = Lattice.integer(2)
    angles = np.linspace(0, 2 * math.pi, 20, endpoint=False)
    ts = [np.array([r * np.exp(1j * a)]) for a in angles for r in (0.7, 2.0)]
    worst = subgaussian_mgf_check(lat, None, 2.0, np.eye(1), ts)
    return _assert(worst <= 1.0 + 1e-12, f"MGF ratio {worst:.6f} exceeds 1")


# -- algebra suite ---------------------------------------------------------------

def _check_ideal_lattice_bounds():
    for name in ("gaussian-integers", "cyclotomic5", "cyclotomic8",
                 "cyclotomic12", "cyclotomic15", "cyclotomic16"):
        field = catalog.field(name)
        lat = ideal_lattice(field)
        bound_np = 2.0 ** (field.k / 2.0) / abs(field.discriminant) ** 0.25
        bound_h = 2.0 * field.k / abs(field.discriminant) ** (1.0 / (2 * field.k))
        for which, lt in (("primal", lat), ("dual", lat.dual())):
            _, np_norm, _ = lt.product_distance()
            _assert(np_norm >= bound_np - 1e-9,
                    f"{name} {which}: Np {np_norm:.6f} < bound {bound_np:.6f}")
            h = lt.hermite_invariant()
            _assert(h >= bound_h - 1e-9,
                    f"{name} {which}: h {h:.6f} < bound {bound_h:.6f}")
    return "Np and Hermite bounds hold for all catalog ideal lattices and duals"


def _check_smoothing_discriminant_bound():
    c = 1.0
    for name in ("gaussian-integers", "cyclotomic5", "cyclotomic8",
                 "cyclotomic12", "cyclotomic15", "cyclotomic16"):
        field = catalog.field(name)
        lat = ideal_lattice(field)
        n = 2 * field.k
        sigma = c * abs(field.discriminant) ** (1.0 / n) / math.sqrt(2 * math.pi)
        eps = flatness_factor(lat, sigma)
        cc = banaszczyk_constant(c)
        bound = cc ** n / (1 - cc ** n)
        _assert(eps <= bound + 1e-12,
                f"{name}: root-discriminant flatness bound fails ({eps:.3e} > {bound:.3e})")
    return "root-discriminant smoothing bound holds on all catalog fields"


def _check_codifferent():
    for name in ("gaussian-integers", "cyclotomic5"):
        field = catalog.field(name)
        pair = codifferent_pairing_matrix(field)
        _assert(np.allclose(pair, np.round(pair), atol=1e-9),
                f"{name}: codifferent pairing not integral")
        _assert(abs(abs(np.linalg.det(np.round(pair))) - 1.0) < 1e-9,
                f"{name}: codifferent pairing not unimodular")
        cod = codifferent_ideal(field)
        _assert(cod.norm == abs(1) / abs(field.discriminant) or
                float(cod.norm) * abs(field.discriminant) == 1.0,
                f"{name}: codifferent norm != 1/|d|")
    return "codifferent embeds as half the conjugated dual on catalog fields"


def _check_golden_order():
    alg = golden_algebra()
    lat = alg.multiblock_embed()
    d = alg.z_discriminant()
    expected = 2.0 ** (-4) * math.sqrt(abs(d))
    _assert(abs(lat.volume - expected) < 1e-6 * expected, "volume identity failed")
    pd, _, _ = lat.pdet_min()
    _assert(abs(pd - 1.0) < 1e-9, f"min |pdet| = {pd} != 1")
    dualv = algebra_codifferent(alg)
    pair = np.linalg.solve(lat.real_lattice.dual().basis, dualv.real_lattice.basis)
    _assert(np.allclose(pair, np.round(pair), atol=1e-9),
            "trace-dual pairing not integral")
    _assert(abs(abs(np.linalg.det(np.round(pair))) - 1.0) < 1e-9,
            "trace-dual pairing not unimodular")
    ratio = (dualv.volume / 2.0 ** 8 / lat.volume) ** 0.5
    _assert(abs(ratio - abs(d) ** -0.5) < 1e-12 + 1e-9 * ratio,
            "codifferent norm identity (reduced norm vs discriminant) failed")
    rng = np.random.default_rng(17)
    from fractions import Fraction
    worst = 0.0
    for _ in range(100):
        xs = [[[Fraction(int(rng.integers(-3, 4))), Fraction(int(rng.integers(-3, 4)))]
               for _ in range(2)] for _ in range(2)]
        a = alg.element(xs)
        pd_num = abs(lat.pdet(alg.psi(a))) ** 2
        nq = abs(float(alg.F.norm(alg.reduced_norm_f(a))))
        worst = max(worst, abs(pd_num - nq) / max(nq, 1.0))
    _assert(worst < 1e-8, f"reduced-norm identity rel dev {worst:.2e}")
    return "golden order: volume, min pdet, trace-dual pairing, norm identity hold"


def _check_rate_constants():
    gc = rate_constants(92.368, 1)
    _assert(6.75 <= gc.kappa_siso_nats <= 6.77, "SISO gap constant out of range")
    _assert(abs(rate_constants(math.pi, 1).kappa_siso_nats) < 1e-12,
            "rd = pi should give zero gap")
    return f"gap constants: kappa({gc.rd}) = {gc.kappa_siso_nats:.4f} nats"


# -- wiretap suite ----------------------------------------------------------------

def _check_coset_bijection():
    rng = np.random.default_rng(18)
    for name in ("gaussian-integers", "cyclotomic5"):
        lat = catalog.lattice(name)
        code = build_code(lat, R=math.log(4), R_prime=3.0, P=1.0)
        for m in range(min(code.num_messages, 16)):
            x = code.encode(m, rng)
            _assert(code.coset_index(x) == m, f"{name}: coset roundtrip failed at {m}")
    return "encode/decode coset bijection holds on catalog codes"


def _check_rate_formula_consistency():
    for rd in (10.0, 50.0, 92.368, 300.0):
        t = 2.0 / rd
        budget = RateBudget(C_b=9.0, C_e=1.0, geom_b=t, geom_e=t)
        r_max, _, _ = achievable_rates(budget, "siso-fading")
        direct = 9.0 - 1.0 - 2.0 * math.log(rd / math.pi)
        _assert(abs(r_max - direct) < 1e-12, f"rate formula mismatch at rd={rd}")
    return "achievable_rates matches the closed-form gap on a root-discriminant grid"


def _check_rate_monotonicity():
    base = RateBudget(C_b=8.0, C_e=2.0, geom_b=0.05, geom_e=0.05)
    r0, _, _ = achievable_rates(base, "siso-fading")
    for db in (0.5, 1.0):
        up = RateBudget(C_b=8.0 + db, C_e=2.0, geom_b=0.05, geom_e=0.05)
        _assert(achievable_rates(up, "siso-fading")[0] > r0, "not increasing in C_b")
        dn = RateBudget(C_b=8.0, C_e=2.0 + db, geom_b=0.05, geom_e=0.05)
        _assert(achievable_rates(dn, "siso-fading")[0] < r0, "not decreasing in C_e")
        gg = RateBudget(C_b=8.0, C_e=2.0, geom_b=0.05 * 2, geom_e=0.05)
        _assert(achievable_rates(gg, "siso-fading")[0] > r0, "not increasing in t_b t_e")
    # one-sided bounds give rates <= exact-CSI rates
    onesided = RateBudget(C_b=7.5, C_e=2.5, geom_b=0.05, geom_e=0.05)
    _assert(achievable_rates(onesided, "siso-fading")[0] <= r0,
            "one-sided variant exceeds exact-CSI rate")
    return "rate monotonicity and one-sided variants hold on the grid"


def _check_secrecy_threshold():
    lat = catalog.lattice("gaussian-integers")
    code = build_code(lat, R=math.log(4), R_prime=3.0, P=1.0)
    res = secrecy_threshold_check(code, np.array([1.0 + 0j]), sigma_e2=4.0)
    _assert(res["condition_met"], "sufficient condition should hold at R'=3")
    low = build_code(lat, R=math.log(4), R_prime=0.5, P=1.0)
    res_low = secrecy_threshold_check(low, np.array([1.0 + 0j]), sigma_e2=4.0)
    _assert(not res_low["condition_met"], "condition should fail at R'=0.5")
    return (f"threshold verdicts correct; eps(R'=3) = {res['epsilon']:.2e}, "
            f"eps(R'=0.5) = {res_low['epsilon']:.2e}")


# -- channel suite -----------------------------------------------------------------

def _check_mmse_identities():
    rng = np.random.default_rng(19)
    for _ in range(10):
        h = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / math.sqrt(2)
        rho = float(rng.uniform(0.5, 20.0))
        r, q1 = mmse_gdfe(h, rho)
        dev1 = np.abs(r.conj().T @ r - (h.conj().T @ h + np.eye(2) / rho)).max()
        rinv = np.linalg.inv(r)
        dev2 = np.abs(q1.conj().T @ q1 + rinv.conj().T @ rinv / rho - np.eye(2)).max()
        _assert(max(dev1, dev2) < 1e-10, "MMSE identity violated")
    return "MMSE-GDFE identities hold to 1e-10 on random draws"


def _check_decode_oracle():
    import itertools as it

    lat = catalog.lattice("gaussian-integers")
    code = build_code(lat, R=math.log(4), R_prime=1.0, P=1.0)
    spec = FadingSpec(law="static", static_value=1.0, noise_var=0.1,
                      snr=code.sigma_s ** 2 / 0.1)
    real = draw_channel(spec, 1, np.random.default_rng(0))
    rng = np.random.default_rng(20)
    rho = code.sigma_s ** 2 / spec.noise_var
    for t in range(100):
        y = (rng.normal(size=1) + 1j * rng.normal(size=1)) * 1.5
        m_hat = decode_map(code, y, real, spec.noise_var)
        best, bm = np.inf, None
        for c in it.product(range(-6, 7), repeat=2):
            x = code.lattice_b.basis @ np.array(c, dtype=float)
            xc = real_to_complex(x)
            metric = (np.abs(xc) ** 2).sum() / rho + np.abs(y - xc) ** 2
            val = float(metric.sum())
            if val < best - 1e-12:
                best, bm = val, code.coset_index(x)
        _assert(m_hat == bm, f"decode disagrees with brute-force MAP at trial {t}")
    return "decode_map equals brute-force MAP on 100 instances"


def _check_error_bound_light():
    lat = catalog.lattice("gaussian-integers")
    code = build_code(lat, R=math.log(4), R_prime=1.0, P=1.0)
    spec = FadingSpec(law="static", static_value=1.0, noise_var=0.02,
                      snr=code.sigma_s ** 2 / 0.02)
    res = error_prob_mc(code, spec, trials=2000, master_seed=5)
    _assert(res["tau_condition"], "tau condition should hold at this SNR")
    _assert(res["P_e_hat"] <= res["union_bound"] + 3 * res["se"],
            "P_e above union bound + 3 SE")
    _assert(res["union_bound"] <= res["banaszczyk_bound"] + 1e-12,
            "union bound above its Banaszczyk cap")
    return (f"P_e {res['P_e_hat']:.1e} <= union {res['union_bound']:.2e} "
            f"<= cap {res['banaszczyk_bound']:.2e}")


def _check_rectangular_reduction():
    lat = catalog.lattice("gaussian-integers")
    code = build_code(lat, R=math.log(4), R_prime=3.0, P=1.0)
    spec = FadingSpec(law="rayleigh_iid", n_tx=1, n_rx=2, noise_var=1.0, snr=1.0)
    rng = np.random.default_rng(21)
    for _ in range(20):
        obs = eve_observe(code, 0, spec, rng)
        h = obs["realization"].diag_matrix()
        ld_full = np.linalg.slogdet(np.eye(1) + spec.snr * h.conj().T @ h)[1]
        ld_red = sum(np.linalg.slogdet(np.eye(1) + spec.snr * b.conj().T @ b)[1]
                     for b in obs["reduced_blocks"])
        _assert(abs(ld_full - ld_red) < 1e-9, "log-det not preserved by reduction")
    return "log-det invariance of the rectangular-Eve reduction holds"


def _check_lln_trends():
    spec = FadingSpec(law="rayleigh_iid", noise_var=1.0, snr=10 ** 0.5)
    diag = lln_diagnostic(spec, [10, 40, 160], delta=0.3, trials=1500, master_seed=3)
    kp = [d["k_p_hat"] for d in diag]
    _assert(kp[0] > kp[1] > kp[2] - 1e-12, f"Rayleigh k*P trend not decreasing: {kp}")
    adv = FadingSpec(law="custom_sequence",
                     sequence=two_level_static_sequence(0.5, 2.0),
                     noise_var=1.0, snr=3.0)
    diag2 = lln_diagnostic(adv, [10, 40, 160], delta=0.1, trials=1500, master_seed=3)
    kp2 = [d["k_p_hat"] for d in diag2]
    _assert(kp2[0] <= kp2[1] <= kp2[2], f"adversarial k*P trend not increasing: {kp2}")
    return f"LLN trends: rayleigh {kp} decreasing, adversarial {kp2} increasing"


SUITES = {
    "lattice": [
        ("dual-roundtrip", _check_dual_roundtrip),
        ("pairing-integrality", _check_pairing_integrality),
        ("amgm-chain", _check_amgm_chain),
        ("enumeration-oracle", _check_enumeration_oracle),
        ("vectorize-isometry", _check_vectorize_isometry),
        ("norm-pdet-chain", _check_norm_pdet_chain),
    ],
    "gauss": [
        ("flatness-oracle", _check_flatness_oracle),
        ("smoothing-roundtrip", _check_smoothing_flatness_roundtrip),
        ("banaszczyk-suite", _check_banaszczyk_suite),
        ("sampler-normalization", _check_sampler_normalization),
        ("gaussian-mixture", _check_regev_light),
        ("linear-transform", _check_linear_transform_light),
        ("subgaussian-mgf", _check_subgaussian_light),
    ],
    "algebra": [
        ("ideal-lattice-bounds", _check_ideal_lattice_bounds),
        ("root-discriminant-smoothing", _check_smoothing_discriminant_bound),
        ("codifferent-duality", _check_codifferent),
        ("golden-order", _check_golden_order),
        ("gap-constants", _check_rate_constants),
    ],
    "wiretap": [
        ("coset-bijection", _check_coset_bijection),
        ("rate-formula", _check_rate_formula_consistency),
        ("rate-monotonicity", _check_rate_monotonicity),
        ("secrecy-threshold", _check_secrecy_threshold),
    ],
    "channel": [
        ("mmse-identities", _check_mmse_identities),
        ("decode-oracle", _check_decode_oracle),
        ("error-bound", _check_error_bound_light),
        ("rectangular-reduction", _check_rectangular_reduction),
        ("lln-trends", _check_lln_trends),
    ],
}


def run_suite(suite_name):
    """Run a named suite (or 'all'); returns a list of result dicts."""
    if suite_name == "all":
        names = list(SUITES)
    elif suite_name in SUITES:
        names = [suite_name]
    else:
        raise KeyError(f"unknown suite {suite_name!r}; "
                       f"known: {sorted(SUITES) + ['all']}")
    results = []
    for sname in names:
        for cname, fn in SUITES[sname]:
            try:
                detail = fn()
                results.append({"suite": sname, "check": cname,
                                "passed": True, "detail": detail})
            except AssertionError as exc:
                results.append({"suite": sname, "check": cname,
                                "passed": False, "detail": str(exc)})
    return results
