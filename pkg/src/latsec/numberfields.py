"""Totally complex number fields, canonical embeddings, and ideal lattices.

Field elements are exact rational coordinate vectors over the power basis of
a root of the defining polynomial; arithmetic (products, traces, norms,
multiplication matrices) is exact via Fractions, and floating point only
enters at the embedding boundary, where roots are Newton-refined to ~1e-15.

The relative canonical embedding psi maps x to (sigma_1(x), ..., sigma_k(x)),
one embedding chosen from each complex-conjugate pair; psi(I) of a fractional
ideal is a 2k-dimensional lattice with volume N(I) * 2^{-k} * sqrt(|d_F|).
The codifferent (trace-dual ideal) embeds as half the conjugated dual:
dual(psi(O_F)) = 2 * conj(psi(O_F^v)).
"""

from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, InvalidLattice
from .lattices import Lattice
from .linalg import frac_mat_det, frac_mat_inv, newton_power_sums


class NumberFieldCtx:
    """Totally complex field of degree 2k with exact integral-basis arithmetic.

    ``defining_polynomial`` lists the monic polynomial's lower coefficients
    [a_0, ..., a_{2k-1}]; ``integral_basis`` gives each basis element as
    rational coordinates over the power basis (defaults to the power basis
    itself, which is correct for the shipped cyclotomic catalog).
    """

    def __init__(self, defining_polynomial, integral_basis=None, name="field"):
        self.name = name
        self.poly = [Fraction(c) for c in defining_polynomial]
        self.degree = len(self.poly)
        if self.degree % 2:
            raise ConsistencyError("totally complex fields have even degree")
        self.k = self.degree // 2
        if integral_basis is None:
            integral_basis = [[Fraction(int(i == j)) for j in range(self.degree)]
                              for i in range(self.degree)]
        self.integral_basis = [[Fraction(c) for c in row] for row in integral_basis]
        self._power_sums = newton_power_sums(self.poly, 2 * self.degree)
        self._roots = self._refined_roots()
        if np.any(np.abs(self._roots.imag) < 1e-9):
            raise ConsistencyError(f"{name}: field is not totally complex")
        # one root per conjugate pair, deterministic order
        pos = self._roots[self._roots.imag > 0]
        order = np.lexsort((pos.imag, pos.real))
        self.embeddings = pos[order]
        if len(self.embeddings) != self.k:
            raise ConsistencyError(f"{name}: embedding selection failed")
        self.discriminant = self._discriminant()

    def _refined_roots(self):
        coeffs = [1.0] + [float(c) for c in reversed(self.poly)]
        roots = np.roots(coeffs)
        # Newton refinement on the monic polynomial
        poly = np.array(coeffs)
        dpoly = np.polyder(poly)
        for _ in range(50):
            val = np.polyval(poly, roots)
            der = np.polyval(dpoly, roots)
            step = val / der
            roots = roots - step
            if np.max(np.abs(step)) < 1e-15:
                break
        return roots

    # -- exact arithmetic on power-basis coordinate vectors -------------------

    def mul(self, a, b):
        """Product of two elements given as power-basis rational vectors."""
        m = self.degree
        prod = [Fraction(0)] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                prod[i + j] += ai * bj
        # reduce powers >= m using theta^m = -(a_{m-1} theta^{m-1} + ... + a_0)
        for p in range(2 * m - 2, m - 1, -1):
            c = prod[p]
            if c == 0:
                continue
            prod[p] = Fraction(0)
            for j in range(m):
                prod[p - m + j] -= c * self.poly[j]
        return prod[:m]

    def trace(self, a):
        """Exact Tr_{F/Q} via Newton power sums."""
        return sum((c * self._power_sums[j] for j, c in enumerate(a)), Fraction(0))

    def norm(self, a):
        """Exact N_{F/Q} as the determinant of the multiplication matrix."""
        m = self.degree
        cols = []
        basis_vec = [[Fraction(int(i == j)) for i in range(m)] for j in range(m)]
        for j in range(m):
            cols.append(self.mul(a, basis_vec[j]))
        mat = [[cols[j][i] for j in range(m)] for i in range(m)]
        return frac_mat_det(mat)

    def element_from_integral_coords(self, coords):
        """Power-basis vector of sum_i coords[i] * integral_basis[i]."""
        m = self.degree
        out = [Fraction(0)] * m
        for c, b in zip(coords, self.integral_basis):
            c = Fraction(c)
            if c == 0:
                continue
            for j in range(m):
                out[j] += c * b[j]
        return out

    def trace_form_gram(self, elements):
        """Exact Gram matrix Tr(e_i * e_j) for a list of elements."""
        n = len(elements)
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                t = self.trace(self.mul(elements[i], elements[j]))
                gram[i][j] = t
                gram[j][i] = t
        return gram

    def _discriminant(self):
        gram = self.trace_form_gram(self.integral_basis)
        d = frac_mat_det(gram)
        if d.denominator != 1:
            raise ConsistencyError(f"{self.name}: integral basis gives fractional discriminant")
        return int(d)

    # -- embeddings ------------------------------------------------------------

    def embed(self, a):
        """psi(a): complex k-vector of the selected embeddings."""
        coeffs = np.array([float(c) for c in a])
        powers = np.vander(self.embeddings, self.degree, increasing=True)
        return powers @ coeffs

    def embed_all(self, a):
        """All 2k embeddings (selected ones and their conjugates)."""
        coeffs = np.array([float(c) for c in a])
        powers = np.vander(self._roots, self.degree, increasing=True)
        return powers @ coeffs

    def check_embedding_discriminant(self, rel_tol=1e-6):
        """|det of the full embedding matrix|^2 == |d_F| (numerical check)."""
        mat = np.array([self.embed_all(b) for b in self.integral_basis]).T
        val = abs(np.linalg.det(mat)) ** 2
        return abs(val - abs(self.discriminant)) <= rel_tol * abs(self.discriminant)


class FractionalIdealBasis:
    """Fractional ideal given by an explicit module basis over the integral basis."""

    def __init__(self, field: NumberFieldCtx, coord_rows, name="ideal"):
        self.field = field
        self.name = name
        m = field.degree
        self.coords = [[Fraction(c) for c in row] for row in coord_rows]
        if len(self.coords) != m or any(len(r) != m for r in self.coords):
            raise ConsistencyError("ideal basis must be square over the integral basis")
        det = frac_mat_det(self.coords)
        if det == 0:
            raise ConsistencyError("ideal basis does not span a full-rank module")
        self.norm = abs(det)

    @classmethod
    def ring_of_integers(cls, field):
        m = field.degree
        eye = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        return cls(field, eye, name="O_F")

    @classmethod
    def principal(cls, field, gen_integral_coords, name=None):
        """Principal ideal (g) with g given in integral-basis coordinates."""
        g = field.element_from_integral_coords(gen_integral_coords)
        rows = []
        inv_b = frac_mat_inv([[field.integral_basis[j][i]
                               for j in range(field.degree)]
                              for i in range(field.degree)])
        for b in field.integral_basis:
            prod = field.mul(g, b)
            # express the product back in integral-basis coordinates
            coords = [sum(inv_b[i][t] * prod[t] for t in range(field.degree))
                      for i in range(field.degree)]
            rows.append(coords)
        return cls(field, rows, name=name or "principal")

    def elements(self):
        """Ideal basis as power-basis rational vectors."""
        return [self.field.element_from_integral_coords(row) for row in self.coords]


def ideal_lattice(field: NumberFieldCtx, ideal: FractionalIdealBasis = None) -> Lattice:
    """psi(I) as a 2k-dimensional lattice (I defaults to the ring of integers)."""
    if ideal is None:
        ideal = FractionalIdealBasis.ring_of_integers(field)
    if ideal.field is not field:
        raise ConsistencyError("ideal does not belong to this field")
    vecs = [field.embed(e) for e in ideal.elements()]
    lat = Lattice.from_complex_basis(vecs, provenance="number-field")
    expected = float(ideal.norm) * 2.0 ** (-field.k) * np.sqrt(abs(field.discriminant))
    if abs(lat.volume - expected) > 1e-6 * expected:
        raise InvalidLattice(
            f"{field.name}: embedded volume {lat.volume} != {expected}")
    return lat


def codifferent_ideal(field: NumberFieldCtx) -> FractionalIdealBasis:
    """Trace-dual basis of the integral basis, as a fractional ideal basis."""
    gram = field.trace_form_gram(field.integral_basis)
    inv = frac_mat_inv(gram)
    # dual elements in integral coordinates: rows of gram^{-1}
    return FractionalIdealBasis(field, inv, name="O_F^v")


def codifferent_lattice(field: NumberFieldCtx) -> Lattice:
    """psi(O_F^v); satisfies dual(psi(O_F)) = 2 conj(psi(O_F^v)) as point sets."""
    codiff = codifferent_ideal(field)
    vecs = [field.embed(e) for e in codiff.elements()]
    return Lattice.from_complex_basis(vecs, provenance="number-field")


def codifferent_pairing_matrix(field: NumberFieldCtx):
    """Pairing of 2*conj(psi(O_F^v)) against dual(psi(O_F)) basis vectors.

    Returns the real matrix Re(b_i^H d_j) where b_i are the doubled conjugated
    codifferent vectors and d_j the dual basis; integrality and unimodularity
    certify the point-set identity.
    """
    lat = ideal_lattice(field)
    dual = lat.dual()
    codiff = codifferent_ideal(field)
    cvecs = [2.0 * np.conj(field.embed(e)) for e in codiff.elements()]
    from .linalg import complex_to_real
    cb = np.column_stack([complex_to_real(v) for v in cvecs])
    return np.linalg.solve(dual.basis, cb)


# -- shipped catalog fields ---------------------------------------------------

def gaussian_rationals():
    """Q(i) = Q[x]/(x^2+1), discriminant -4, k = 1."""
    return NumberFieldCtx([1, 0], name="Q(i)")


def cyclotomic5():
    """Q(zeta_5) = Q[x]/(x^4+x^3+x^2+x+1), discriminant 125, k = 2."""
    return NumberFieldCtx([1, 1, 1, 1], name="Q(zeta5)")


def cyclotomic8():
    """Q(zeta_8) = Q[x]/(x^4+1), discriminant 256, k = 2."""
    return NumberFieldCtx([1, 0, 0, 0], name="Q(zeta8)")


def cyclotomic12():
    """Q(zeta_12) = Q[x]/(x^4-x^2+1), discriminant 144, k = 2."""
    return NumberFieldCtx([1, 0, -1, 0], name="Q(zeta12)")


def cyclotomic15():
    """Q(zeta_15) = Q[x]/(Phi_15), discriminant 3^4 5^6, k = 4."""
    return NumberFieldCtx([1, -1, 0, 1, -1, 1, 0, -1], name="Q(zeta15)")


def cyclotomic16():
    """Q(zeta_16) = Q[x]/(x^8+1), discriminant 2^24, k = 4."""
    return NumberFieldCtx([1, 0, 0, 0, 0, 0, 0, 0], name="Q(zeta16)")
