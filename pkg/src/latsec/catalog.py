"""Named catalog of desk-scale lattices, fields, and algebras.

Entries are listed in the shipped manifest (``data/catalog.txt``) together
with their invariant data (discriminants, dimensions); constructors live
here, and the invariants are re-verified every time an entry is loaded.
"""

import importlib.resources
from dataclasses import dataclass

import numpy as np

from .algebras import golden_algebra
from .errors import ConfigError, ConsistencyError
from .lattices import Lattice
from .numberfields import (NumberFieldCtx, cyclotomic5, cyclotomic8,
                           cyclotomic12, cyclotomic15, cyclotomic16,
                           gaussian_rationals, ideal_lattice)

_FIELD_MAKERS = {
    "gaussian-integers": gaussian_rationals,
    "cyclotomic5": cyclotomic5,
    "cyclotomic8": cyclotomic8,
    "cyclotomic12": cyclotomic12,
    "cyclotomic15": cyclotomic15,
    "cyclotomic16": cyclotomic16,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str            # field | algebra | integer-lattice
    dim_complex: int
    discriminant: int | None


def manifest_text():
    return importlib.resources.files("latsec").joinpath(
        "data/catalog.txt").read_text()


def load_manifest():
    """Parse the manifest into CatalogEntry records."""
    entries = {}
    for line in manifest_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = dict(p.split("=", 1) for p in line.split())
        name = parts["name"]
        entries[name] = CatalogEntry(
            name=name, kind=parts["kind"], dim_complex=int(parts["k"]),
            discriminant=int(parts["disc"]) if parts.get("disc", "none") != "none" else None)
    return entries


def names():
    return sorted(load_manifest())


def field(name) -> NumberFieldCtx:
    if name not in _FIELD_MAKERS:
        raise ConfigError(f"unknown field {name!r}; known: {sorted(_FIELD_MAKERS)}")
    ctx = _FIELD_MAKERS[name]()
    entry = load_manifest().get(name)
    if entry is None or entry.discriminant != ctx.discriminant:
        raise ConsistencyError(f"manifest invariants disagree for {name}")
    if not ctx.check_embedding_discriminant():
        raise ConsistencyError(f"{name}: embedding/discriminant identity failed")
    return ctx


def lattice(name):
    """Load a catalog lattice (field embeddings, integer lattices, algebras)."""
    entries = load_manifest()
    if name not in entries:
        raise ConfigError(f"unknown catalog entry {name!r}; known: {sorted(entries)}")
    entry = entries[name]
    if entry.kind == "field":
        return ideal_lattice(field(name))
    if entry.kind == "integer-lattice":
        return Lattice.integer(2 * entry.dim_complex)
    if entry.kind == "algebra":
        alg = algebra(name)
        lat = alg.multiblock_embed()
        expected = 2.0 ** (-alg.F.k * alg.n ** 2) * np.sqrt(abs(alg.z_discriminant()))
        if abs(lat.volume - expected) > 1e-6 * expected:
            raise ConsistencyError(f"{name}: order volume identity failed")
        return lat
    raise ConfigError(f"unsupported catalog kind {entry.kind!r}")


def algebra(name):
    if name != "golden-order":
        raise ConfigError(f"unknown algebra {name!r}; known: ['golden-order']")
    alg = golden_algebra()
    entry = load_manifest()[name]
    if entry.discriminant != alg.z_discriminant():
        raise ConsistencyError("manifest discriminant disagrees for golden-order")
    return alg


def is_matrix_entry(name):
    return load_manifest()[name].kind == "algebra"
