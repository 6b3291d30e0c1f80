"""Number-field factories: embeddings, ideal lattices, codifferent duality."""

import math
from fractions import Fraction

import numpy as np
import pytest

from latsec.errors import ConsistencyError
from latsec.numberfields import (FractionalIdealBasis, NumberFieldCtx,
                                 codifferent_ideal, codifferent_lattice,
                                 codifferent_pairing_matrix, cyclotomic5,
                                 cyclotomic8, cyclotomic12, cyclotomic15,
                                 cyclotomic16, gaussian_rationals,
                                 ideal_lattice)

FIELDS = {
    # name -> (maker, |discriminant|, k)
    "qi": (gaussian_rationals, 4, 1),
    "z5": (cyclotomic5, 125, 2),
    "z8": (cyclotomic8, 256, 2),
    "z12": (cyclotomic12, 144, 2),
    "z15": (cyclotomic15, 1265625, 4),
    "z16": (cyclotomic16, 16777216, 4),
}


class TestFieldConstruction:
    @pytest.mark.parametrize("name", FIELDS)
    def test_discriminants(self, name):
        mk, disc, k = FIELDS[name]
        f = mk()
        assert abs(f.discriminant) == disc
        assert f.k == k
        assert f.check_embedding_discriminant()

    def test_not_totally_complex_rejected(self):
        with pytest.raises(ConsistencyError):
            NumberFieldCtx([-2, 0])  # x^2 - 2 has real roots

    def test_exact_arithmetic(self):
        f = cyclotomic5()
        zeta = [Fraction(0), Fraction(1), Fraction(0), Fraction(0)]
        # zeta * zeta^3 = zeta^4 = -(1 + zeta + zeta^2 + zeta^3)
        zeta3 = [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]
        zeta4 = f.mul(zeta, zeta3)
        assert zeta4 == [Fraction(-1)] * 4
        # and zeta * zeta^4 = zeta^5 = 1
        assert f.mul(zeta, zeta4) == [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        # norm of a unit is +-1
        assert abs(f.norm(zeta)) == 1

    def test_trace_via_embeddings(self):
        f = cyclotomic8()
        x = [Fraction(2), Fraction(1), Fraction(0), Fraction(-1)]
        exact = f.trace(x)
        numeric = f.embed_all(x).sum()
        assert abs(complex(exact) - numeric) < 1e-9


class TestIdealLattice:
    @pytest.mark.parametrize("name,vol", [
        ("qi", 1.0), ("z5", 2.0 ** -2 * math.sqrt(125)),
        ("z8", 4.0), ("z12", 3.0),
        ("z15", 2.0 ** -4 * math.sqrt(1265625)),
        ("z16", 256.0)])
    def test_volumes(self, name, vol):
        mk, _, _ = FIELDS[name]
        lat = ideal_lattice(mk())
        assert abs(lat.volume - vol) < 1e-9 * max(vol, 1)

    def test_principal_ideal_volume(self):
        f = gaussian_rationals()
        # (1+i) Z[i]: norm 2, volume 2 * V(Z[i]) = 2
        ideal = FractionalIdealBasis.principal(f, [1, 1])
        assert ideal.norm == 2
        lat = ideal_lattice(f, ideal)
        assert abs(lat.volume - 2.0) < 1e-9

    def test_ideal_lattice_is_sublattice(self):
        f = cyclotomic5()
        ideal = FractionalIdealBasis.principal(f, [1, 1, 0, 0])
        full = ideal_lattice(f)
        sub = ideal_lattice(f, ideal)
        coords = np.linalg.solve(full.basis, sub.basis)
        assert np.allclose(coords, np.round(coords), atol=1e-9)

    def test_ideal_product_bound(self):
        # the bound covers every fractional ideal, not just O_F
        f = gaussian_rationals()
        ideal = FractionalIdealBasis.principal(f, [2, 1])
        lat = ideal_lattice(f, ideal)
        for lt in (lat, lat.dual()):
            _, np_norm, _ = lt.product_distance()
            assert np_norm >= 2.0 ** 0.5 / 4.0 ** 0.25 - 1e-9


class TestCodifferent:
    @pytest.mark.parametrize("name", FIELDS)
    def test_norm_is_inverse_discriminant(self, name):
        mk, disc, _ = FIELDS[name]
        cod = codifferent_ideal(mk())
        assert cod.norm == Fraction(1, disc)

    def test_qi_codifferent_is_half(self):
        f = gaussian_rationals()
        lat = codifferent_lattice(f)
        # O^v = (1/2) Z[i]
        assert abs(lat.volume - 0.25) < 1e-12

    @pytest.mark.parametrize("name", FIELDS)
    def test_dual_identity(self, name):
        mk, _, _ = FIELDS[name]
        pair = codifferent_pairing_matrix(mk())
        assert np.allclose(pair, np.round(pair), atol=1e-9)
        assert abs(abs(np.linalg.det(np.round(pair))) - 1.0) < 1e-9

    def test_hermite_bound_both_sides(self):
        for name in FIELDS:
            mk, disc, k = FIELDS[name]
            lat = ideal_lattice(mk())
            bound = 2.0 * k / disc ** (1.0 / (2 * k))
            assert lat.hermite_invariant() >= bound - 1e-9
            assert lat.dual().hermite_invariant() >= bound - 1e-9
