import numpy as np
import pytest

from latsec import catalog
from latsec.lattices import Lattice


@pytest.fixture(scope="session")
def z2():
    return Lattice.integer(2)


@pytest.fixture(scope="session")
def z4():
    return Lattice.integer(4)


@pytest.fixture(scope="session")
def lat_qi():
    return catalog.lattice("gaussian-integers")


@pytest.fixture(scope="session")
def lat_z5():
    return catalog.lattice("cyclotomic5")


@pytest.fixture(scope="session")
def field_qi():
    return catalog.field("gaussian-integers")


@pytest.fixture(scope="session")
def field_z5():
    return catalog.field("cyclotomic5")


@pytest.fixture(scope="session")
def golden():
    return catalog.algebra("golden-order")


@pytest.fixture(scope="session")
def golden_lattice(golden):
    return golden.multiblock_embed()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240801)


def random_lattice(seed, dim=4, cond=2.0):
    r = np.random.default_rng(seed)
    return Lattice(r.normal(size=(dim, dim)) + cond * np.eye(dim))
