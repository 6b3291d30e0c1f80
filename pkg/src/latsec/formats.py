"""File formats: lattice exchange files, experiment configs, CSV output.

All on-disk formats are flat ``key = value`` text.  Unknown keys are errors
(no silent typos); every CSV row carries the master seed and a hash of the
canonicalized config so outputs are traceable to their inputs.
"""

import hashlib
import io

import numpy as np

from .errors import ConfigError
from .lattices import Lattice


def parse_kv_text(text, allowed_keys=None, required_keys=()):
    """Parse flat key=value lines ('#' comments allowed)."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    if allowed_keys is not None:
        unknown = set(out) - set(allowed_keys)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    missing = set(required_keys) - set(out)
    if missing:
        raise ConfigError(f"missing config keys: {sorted(missing)}")
    return out


def config_hash(cfg: dict):
    """Stable short hash of a parsed config (sorted canonical form)."""
    canon = "\n".join(f"{k}={cfg[k]}" for k in sorted(cfg))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def parse_float_list(value):
    try:
        return [float(v) for v in value.replace(",", " ").split()]
    except ValueError as exc:
        raise ConfigError(f"bad numeric list {value!r}") from exc


def parse_int_list(value):
    try:
        return [int(v) for v in value.replace(",", " ").split()]
    except ValueError as exc:
        raise ConfigError(f"bad integer list {value!r}") from exc


def parse_grid(value):
    """Either an explicit list or 'start:stop:step' (inclusive stop)."""
    if ":" in value:
        parts = value.split(":")
        if len(parts) != 3:
            raise ConfigError(f"grid must be start:stop:step, got {value!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ConfigError("grid step must be positive")
        n = int(round((stop - start) / step))
        return [start + i * step for i in range(n + 1)]
    return parse_float_list(value)


# -- lattice exchange format ---------------------------------------------------

LATTICE_FILE_KEYS = ("dim_complex", "basis", "provenance")


def lattice_to_text(lat: Lattice):
    rows = " ".join(repr(float(v)) for v in lat.basis.reshape(-1))
    return (f"dim_complex = {lat.dim_complex}\n"
            f"provenance = {lat.provenance}\n"
            f"basis = {rows}\n")


def lattice_from_text(text) -> Lattice:
    cfg = parse_kv_text(text, allowed_keys=LATTICE_FILE_KEYS,
                        required_keys=LATTICE_FILE_KEYS)
    k = int(cfg["dim_complex"])
    vals = parse_float_list(cfg["basis"])
    if len(vals) != (2 * k) ** 2:
        raise ConfigError(
            f"basis needs {(2 * k) ** 2} reals (row-major 2k x 2k), got {len(vals)}")
    basis = np.array(vals).reshape(2 * k, 2 * k)
    return Lattice(basis, provenance=cfg["provenance"])


def write_lattice(path, lat: Lattice):
    with open(path, "w") as fh:
        fh.write(lattice_to_text(lat))


def read_lattice(path) -> Lattice:
    with open(path) as fh:
        return lattice_from_text(fh.read())


# -- code descriptor -----------------------------------------------------------

CODE_DESCRIPTOR_KEYS = ("base", "R", "R_prime", "P", "n", "seed")


def parse_code_descriptor(text):
    cfg = parse_kv_text(text, allowed_keys=CODE_DESCRIPTOR_KEYS,
                        required_keys=("base", "R", "R_prime", "P"))
    return {
        "base": cfg["base"],
        "R": float(cfg["R"]),
        "R_prime": float(cfg["R_prime"]),
        "P": float(cfg["P"]),
        "n": int(cfg.get("n", "1")),
        "seed": int(cfg.get("seed", "0")),
    }


# -- CSV output ---------------------------------------------------------------

def format_cell(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, np.generic):
        v = v.item()
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(header, rows):
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(format_cell(v) for v in row) + "\n")
    return buf.getvalue()


def write_csv(path, header, rows):
    text = rows_to_csv(header, rows)
    if path is None:
        return text
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return text
