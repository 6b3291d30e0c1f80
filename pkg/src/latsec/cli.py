"""Experiment driver: lattice-audit, rates, simulate, verify.

Each subcommand reads a flat key=value config (--config), with --seed
overriding the config seed; outputs are deterministic CSV (--out, stdout
otherwise).  Exit codes: 0 success, 1 verification failure, 2 config error.
--threads changes speed only, never results.
"""

import argparse
import os
import sys

import numpy as np

from . import catalog, formats, verify
from .channels import FadingSpec, error_prob_mc, leakage_estimate
from .errors import ConfigError, LatsecError
from .lattices import MatrixLattice
from .rates import (CONWAY_THOMPSON_GAP_NATS, MARTINET_ROOT_DISCRIMINANT,
                    gaussian_capacity, nats_to_bits, rate_constants,
                    rayleigh_capacity, snr_db_to_linear)
from .wiretap import build_code, secrecy_threshold_check

AUDIT_KEYS = ("lattice", "seed")
RATES_KEYS = ("law", "snr_e_db", "snr_b_db", "constants", "seed")
SIM_KEYS = ("base", "R", "R_prime", "P", "n", "k_list", "trials",
            "snr_b_db", "snr_e_db", "law_b", "law_e", "estimate_leakage",
            "leakage_trials", "seed")
VERIFY_KEYS = ("suite", "seed")


def _load_config(path, allowed, required):
    if path is None:
        raise ConfigError("--config is required for this command")
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return formats.parse_kv_text(text, allowed_keys=allowed, required_keys=required)


def _resolve_lattice(ref):
    if os.path.exists(ref):
        return formats.read_lattice(ref)
    return catalog.lattice(ref)


def cmd_lattice_audit(cfg, seed, out_path):
    lat = _resolve_lattice(cfg["lattice"])
    chash = formats.config_hash(cfg)
    header = ["master_seed", "config_hash", "lattice", "dim_complex", "volume",
              "lambda1", "hermite", "np_norm", "delta", "min_pdet",
              "dual_check", "np_bound_margin", "hermite_bound_margin"]
    if isinstance(lat, MatrixLattice):
        base = lat.real_lattice
        pd, delta, _ = lat.pdet_min()
        np_norm = float("nan")  # coordinate products are a vector-lattice notion
    else:
        base = lat
        pd, delta = float("nan"), float("nan")
        np_norm = base.product_distance()[1]
    lam1, _ = base.min_distance()
    h = base.hermite_invariant()
    dual_ok = abs(base.volume * base.dual().volume - 1.0) < 1e-9
    np_margin = h_margin = float("nan")
    if not isinstance(lat, MatrixLattice) and lat.provenance == "number-field":
        # margins against the discriminant bounds when the entry is a field
        name = cfg["lattice"]
        try:
            field = catalog.field(name)
            k = field.k
            np_margin = np_norm - 2.0 ** (k / 2.0) / abs(field.discriminant) ** 0.25
            h_margin = h - 2.0 * k / abs(field.discriminant) ** (1.0 / (2 * k))
        except (ConfigError, LatsecError):
            pass
    rows = [[seed, chash, cfg["lattice"], base.dim_complex, base.volume,
             lam1, h, np_norm, delta, pd, dual_ok, np_margin, h_margin]]
    text = formats.write_csv(out_path, header, rows)
    if out_path is None:
        sys.stdout.write(text)
    return 0


def _parse_constants(value):
    """Comma list: number-field[:rd], conway-thompson, user:<kappa_nats>."""
    sets = []
    for item in value.split(","):
        item = item.strip()
        if not item:
            continue
        if item.startswith("number-field"):
            rd = MARTINET_ROOT_DISCRIMINANT
            if ":" in item:
                rd = float(item.split(":", 1)[1])
            sets.append((f"nf_{rd:g}", rate_constants(rd, 1).kappa_siso_nats))
        elif item == "conway-thompson":
            sets.append(("conway_thompson", CONWAY_THOMPSON_GAP_NATS))
        elif item.startswith("user:"):
            sets.append(("user", float(item.split(":", 1)[1])))
        else:
            raise ConfigError(f"unknown constants entry {item!r}")
    if not sets:
        raise ConfigError("constants list is empty")
    return sets


def cmd_rates(cfg, seed, out_path):
    law = cfg["law"]
    if law not in ("gaussian", "rayleigh"):
        raise ConfigError("law must be gaussian or rayleigh")
    cap = gaussian_capacity if law == "gaussian" else rayleigh_capacity
    snr_e_db = float(cfg["snr_e_db"])
    grid = formats.parse_grid(cfg["snr_b_db"])
    if not grid:
        raise ConfigError("snr_b_db grid is empty")
    const_sets = _parse_constants(cfg.get("constants", "number-field"))
    c_e = float(cap(snr_db_to_linear(snr_e_db)))
    chash = formats.config_hash(cfg)
    header = ["master_seed", "config_hash", "law", "snr_e_db", "snr_b_db",
              "C_b_nats", "C_e_nats"]
    for name, _ in const_sets:
        header += [f"R_max_nats_{name}", f"R_max_bits_{name}"]
    rows = []
    for db in grid:
        c_b = float(cap(snr_db_to_linear(db)))
        row = [seed, chash, law, snr_e_db, db, c_b, c_e]
        for _, kappa in const_sets:
            r = c_b - c_e - kappa
            row += [r, nats_to_bits(r)]
        rows.append(row)
    text = formats.write_csv(out_path, header, rows)
    if out_path is None:
        sys.stdout.write(text)
    return 0


def cmd_simulate(cfg, seed, out_path, threads):
    base_refs = [b.strip() for b in cfg["base"].split("|") if b.strip()]
    r_conf = float(cfg["R"])
    r_prime = float(cfg["R_prime"])
    power = float(cfg.get("P", "1.0"))
    n = int(cfg.get("n", "1"))
    k_filter = formats.parse_int_list(cfg["k_list"]) if "k_list" in cfg else None
    trials = int(cfg["trials"])
    snr_b_db = float(cfg["snr_b_db"])
    snr_e_db = float(cfg["snr_e_db"])
    law_b = cfg.get("law_b", "static")
    law_e = cfg.get("law_e", "static")
    do_leak = cfg.get("estimate_leakage", "false").lower() == "true"
    leak_trials = int(cfg.get("leakage_trials", "200000"))
    chash = formats.config_hash(cfg)
    header = ["master_seed", "config_hash", "k", "SNR_b_dB", "SNR_e_dB", "R",
              "R_prime", "P_e_hat", "union_bound", "epsilon_k", "V_hat",
              "condition_met"]
    rows = []
    for name in base_refs:
        lat = _resolve_lattice(name)
        code = build_code(lat, R=r_conf, R_prime=r_prime, P=power, n=n)
        if k_filter is not None and code.k not in k_filter:
            continue
        sigma_b2 = code.sigma_s ** 2 / snr_db_to_linear(snr_b_db)
        sigma_e2 = code.sigma_s ** 2 / snr_db_to_linear(snr_e_db)
        spec_b = FadingSpec(law=law_b, noise_var=sigma_b2,
                            snr=snr_db_to_linear(snr_b_db))
        spec_e = FadingSpec(law=law_e, noise_var=sigma_e2,
                            snr=snr_db_to_linear(snr_e_db))
        if trials > 0:
            res = error_prob_mc(code, spec_b, trials, master_seed=seed,
                                threads=threads)
        else:
            # thresholds only: exact shaping clouds can be infeasible at
            # large k * R', but the flatness column never needs sampling
            res = {"P_e_hat": float("nan"), "union_bound": float("nan")}
        if code.is_matrix:
            ones = np.broadcast_to(np.eye(code.n), (code.k, code.n, code.n))
            thr = secrecy_threshold_check(code, list(ones), sigma_e2)
        else:
            thr = secrecy_threshold_check(
                code, np.ones(code.k, dtype=complex), sigma_e2)
        v_hat = float("nan")
        if do_leak and not code.is_matrix and code.k <= 2:
            leak = leakage_estimate(code, spec_e, leak_trials,
                                    master_seed=seed)
            v_hat = leak["V_max"]
        rows.append([seed, chash, code.k, snr_b_db, snr_e_db, code.R,
                     code.R_prime, res["P_e_hat"], res["union_bound"],
                     thr["epsilon"], v_hat, thr["condition_met"]])
    text = formats.write_csv(out_path, header, rows)
    if out_path is None:
        sys.stdout.write(text)
    return 0


def cmd_verify(cfg, seed, out_path, suite_arg=None):
    suite = suite_arg or (cfg.get("suite", "all") if cfg else "all")
    try:
        results = verify.run_suite(suite)
    except KeyError as exc:
        raise ConfigError(str(exc)) from exc
    chash = formats.config_hash(cfg or {"suite": suite})
    header = ["master_seed", "config_hash", "suite", "check", "passed", "detail"]
    rows = [[seed, chash, r["suite"], r["check"], r["passed"],
             r["detail"].replace(",", ";")] for r in results]
    text = formats.write_csv(out_path, header, rows)
    if out_path is None:
        sys.stdout.write(text)
    failed = [r for r in results if not r["passed"]]
    for r in results:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"{status} {r['suite']}/{r['check']}: {r['detail']}",
              file=sys.stderr)
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latsec",
        description="lattice wiretap-coding experiment driver")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("lattice-audit", "rates", "simulate", "verify"):
        p = sub.add_parser(name)
        p.add_argument("--config", default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--threads", type=int, default=1)
        if name == "verify":
            p.add_argument("suite", nargs="?", default=None)
    return parser


_KEYSETS = {"lattice-audit": (AUDIT_KEYS, ("lattice",)),
            "rates": (RATES_KEYS, ("law", "snr_e_db", "snr_b_db")),
            "simulate": (SIM_KEYS, ("base", "R", "R_prime", "trials",
                                    "snr_b_db", "snr_e_db")),
            "verify": (VERIFY_KEYS, ())}


def main(argv=None):
    args = build_parser().parse_args(argv)
    allowed, required = _KEYSETS[args.command]
    try:
        if args.command == "verify" and args.config is None:
            cfg = {}
        else:
            cfg = _load_config(args.config, allowed, required)
        seed = args.seed if args.seed is not None else int(cfg.get("seed", "0"))
        if args.command == "lattice-audit":
            return cmd_lattice_audit(cfg, seed, args.out)
        if args.command == "rates":
            return cmd_rates(cfg, seed, args.out)
        if args.command == "simulate":
            return cmd_simulate(cfg, seed, args.out, args.threads)
        return cmd_verify(cfg, seed, args.out, suite_arg=args.suite)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except LatsecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
