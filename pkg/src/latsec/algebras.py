"""Cyclic division algebras and multi-block matrix lattices.

An algebra (E/F, sigma, gamma) of degree n over a totally complex center F of
degree 2k is represented u-adically: elements are tuples (x_0, ..., x_{n-1})
with x_i in E, subject to x u = u sigma(x) and u^n = gamma.  The left regular
representation phi embeds the algebra into M_n(E); stacking the k selected
embeddings of F (extended to E) gives the multi-block map psi into
M_{nk x n}(C), whose image of a Z-order is a 2kn^2-dimensional matrix lattice
with min |pdet| = 1 and volume 2^{-kn^2} sqrt(|d(Gamma/Z)|).

E-arithmetic is exact: E-elements are vectors of F-elements over the power
basis of the relative generator, and F-elements are exact rational vectors.
"""

from fractions import Fraction

import numpy as np

from .errors import ConsistencyError
from .lattices import MatrixLattice
from .linalg import frac_mat_det, frac_mat_inv
from .numberfields import NumberFieldCtx, gaussian_rationals


class RelativeExtension:
    """Cyclic extension E/F of degree n with Galois generator sigma.

    ``rel_poly`` lists the monic relative minimal polynomial's lower
    coefficients as F-elements (power-basis rational vectors over F);
    ``sigma_image`` is sigma(theta_E) as an E-element.
    """

    def __init__(self, field: NumberFieldCtx, rel_poly, sigma_image, name="E"):
        self.F = field
        self.n = len(rel_poly)
        self.rel_poly = [self._f(c) for c in rel_poly]
        self.sigma_image = [self._f(c) for c in sigma_image]
        self.name = name
        if len(self.sigma_image) != self.n:
            raise ConsistencyError("sigma image must be an E-element")
        # complex root of the embedded relative polynomial per F-embedding
        self._rel_roots = []
        for i in range(self.F.k):
            coeffs = [1.0] + [complex(self._embed_f(c, i))
                              for c in reversed(self.rel_poly)]
            roots = np.roots(coeffs)
            roots = roots[np.lexsort((roots.imag, roots.real))]
            root = roots[0]
            poly = np.array(coeffs)
            dpoly = np.polyder(poly)
            for _ in range(60):
                step = np.polyval(poly, root) / np.polyval(dpoly, root)
                root = root - step
                if abs(step) < 1e-15:
                    break
            self._rel_roots.append(root)

    def _f(self, coeffs):
        """Normalize an F-element (rational vector over the F power basis)."""
        m = self.F.degree
        out = [Fraction(c) for c in coeffs]
        if len(out) != m:
            raise ConsistencyError("F-element has wrong length")
        return out

    def _embed_f(self, a, i):
        return self.F.embed(a)[i]

    # E-elements: list of n F-elements ------------------------------------

    def zero(self):
        m = self.F.degree
        return [[Fraction(0)] * m for _ in range(self.n)]

    def one(self):
        e = self.zero()
        e[0][0] = Fraction(1)
        return e

    def from_f(self, a):
        e = self.zero()
        e[0] = self._f(a)
        return e

    def gen_power(self, j):
        """theta_E^j for 0 <= j < n."""
        e = self.zero()
        e[j][0] = Fraction(1)
        return e

    def add(self, a, b):
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    def scale_f(self, c, a):
        """Multiply an E-element by an F-element."""
        return [self.F.mul(c, row) for row in a]

    def mul(self, a, b):
        """Exact product in E (polynomial multiplication mod rel_poly)."""
        m = self.F.degree
        prod = [[Fraction(0)] * m for _ in range(2 * self.n - 1)]
        for i, ai in enumerate(a):
            if all(c == 0 for c in ai):
                continue
            for j, bj in enumerate(b):
                if all(c == 0 for c in bj):
                    continue
                p = self.F.mul(ai, bj)
                row = prod[i + j]
                prod[i + j] = [x + y for x, y in zip(row, p)]
        for p in range(2 * self.n - 2, self.n - 1, -1):
            c = prod[p]
            if all(x == 0 for x in c):
                continue
            prod[p] = [Fraction(0)] * m
            for j in range(self.n):
                corr = self.F.mul(c, self.rel_poly[j])
                prod[p - self.n + j] = [x - y for x, y in
                                        zip(prod[p - self.n + j], corr)]
        return prod[:self.n]

    def sigma(self, a):
        """Galois action: substitute sigma(theta_E) for theta_E."""
        out = self.zero()
        power = self.one()
        for j in range(self.n):
            term = self.scale_f_vec(a[j], power)
            out = self.add(out, term)
            if j < self.n - 1:
                power = self.mul(power, self.sigma_image)
        return out

    def scale_f_vec(self, c, e):
        return [self.F.mul(c, row) for row in e]

    def sigma_pow(self, a, j):
        for _ in range(j % self.n):
            a = self.sigma(a)
        return a

    def trace_to_f(self, a):
        """Tr_{E/F}(a) = sum of sigma powers, must land in F."""
        acc = self.zero()
        cur = a
        for _ in range(self.n):
            acc = self.add(acc, cur)
            cur = self.sigma(cur)
        for row in acc[1:]:
            if any(c != 0 for c in row):
                raise ConsistencyError("relative trace did not land in F")
        return acc[0]

    def embed(self, a, i):
        """Embedding of an E-element extending the i-th embedding of F."""
        root = self._rel_roots[i]
        val = 0j
        for j in range(self.n):
            val += complex(self._embed_f(a[j], i)) * root ** j
        return val


class AlgebraElement:
    """u-adic element x_0 + u x_1 + ... + u^{n-1} x_{n-1} of a cyclic algebra."""

    __slots__ = ("alg", "xs")

    def __init__(self, alg, xs):
        self.alg = alg
        self.xs = xs

    def __add__(self, other):
        ext = self.alg.E
        return AlgebraElement(self.alg, [ext.add(a, b)
                                         for a, b in zip(self.xs, other.xs)])

    def __mul__(self, other):
        return self.alg.multiply(self, other)


class CyclicAlgebraCtx:
    """Cyclic algebra (E/F, sigma, gamma) with a designated Z-order.

    ``order_basis_xs`` lists each order-basis element in u-adic form as a list
    of n E-elements.
    """

    def __init__(self, ext: RelativeExtension, gamma, order_basis_xs, name="algebra"):
        self.E = ext
        self.F = ext.F
        self.n = ext.n
        self.gamma = ext._f(gamma)
        self.name = name
        self.order_basis = [AlgebraElement(self, xs) for xs in order_basis_xs]
        expected = 2 * self.n ** 2 * self.F.k
        if len(self.order_basis) != expected:
            raise ConsistencyError(
                f"order basis needs {expected} elements, got {len(self.order_basis)}")

    def element(self, xs):
        return AlgebraElement(self, xs)

    def from_u_power(self, j, x=None):
        """u^j * x with x in E (defaults to 1)."""
        ext = self.E
        xs = [ext.zero() for _ in range(self.n)]
        xs[j] = x if x is not None else ext.one()
        return AlgebraElement(self, xs)

    def multiply(self, a, b):
        """Exact product using u^i x u^j y = gamma^{(i+j) div n} u^{(i+j) mod n} sigma^j(x) y."""
        ext = self.E
        out = [ext.zero() for _ in range(self.n)]
        for i, xi in enumerate(a.xs):
            if all(all(c == 0 for c in row) for row in xi):
                continue
            for j, yj in enumerate(b.xs):
                if all(all(c == 0 for c in row) for row in yj):
                    continue
                term = ext.mul(ext.sigma_pow(xi, j), yj)
                idx = i + j
                if idx >= self.n:
                    idx -= self.n
                    term = ext.scale_f_vec(self.gamma, term)
                out[idx] = ext.add(out[idx], term)
        return AlgebraElement(self, out)

    def reduced_trace_f(self, a: AlgebraElement):
        """tr_{D/F}(a) = Tr_{E/F}(x_0)."""
        return self.E.trace_to_f(a.xs[0])

    def reduced_trace_q(self, a: AlgebraElement):
        """Exact tr_{D/Q}(a) = Tr_{F/Q}(Tr_{E/F}(x_0))."""
        return self.F.trace(self.reduced_trace_f(a))

    def reduced_norm_f(self, a: AlgebraElement):
        """Exact reduced norm N_{D/F}(a) = det(phi(a)), as an F-element."""
        mat = self.left_regular_symbolic(a)
        det = self._exact_det(mat)
        for row in det[1:]:
            if any(c != 0 for c in row):
                raise ConsistencyError("reduced norm did not land in F")
        return det[0]

    def _exact_det(self, mat):
        ext = self.E
        n = len(mat)
        if n == 1:
            return mat[0][0]
        det = ext.zero()
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            term = ext.mul(mat[0][j], self._exact_det(minor))
            if j % 2:
                term = [[-c for c in row] for row in term]
            det = ext.add(det, term)
        return det

    def left_regular_symbolic(self, a: AlgebraElement):
        """phi(a) as an n x n matrix of E-elements.

        Entry (r, c) is sigma^c(x_{r-c}) when r >= c and gamma sigma^c(x_{n+r-c})
        otherwise (the gamma sits above the diagonal).
        """
        ext = self.E
        n = self.n
        mat = [[None] * n for _ in range(n)]
        for r in range(n):
            for c in range(n):
                if r >= c:
                    entry = ext.sigma_pow(a.xs[r - c], c)
                else:
                    entry = ext.scale_f_vec(self.gamma,
                                            ext.sigma_pow(a.xs[n + r - c], c))
                mat[r][c] = entry
        return mat

    def left_regular(self, a: AlgebraElement, embedding_index=0):
        """phi(a) embedded into M_n(C) through the chosen embedding of F."""
        mat = self.left_regular_symbolic(a)
        n = self.n
        out = np.empty((n, n), dtype=complex)
        for r in range(n):
            for c in range(n):
                out[r, c] = self.E.embed(mat[r][c], embedding_index)
        return out

    def psi(self, a: AlgebraElement):
        """Multi-block embedding: stacked alpha_i(phi(a)), shape (nk, n)."""
        blocks = [self.left_regular(a, i) for i in range(self.F.k)]
        return np.vstack(blocks)

    def multiblock_embed(self) -> MatrixLattice:
        """psi(order) as a 2kn^2-dimensional multi-block matrix lattice."""
        gens = [self.psi(w) for w in self.order_basis]
        lat = MatrixLattice(gens, self.n, provenance="division-algebra")
        return lat

    def order_gram_exact(self):
        """Exact reduced-trace Gram matrix of the order basis."""
        ws = self.order_basis
        r = len(ws)
        gram = [[Fraction(0)] * r for _ in range(r)]
        for i in range(r):
            for j in range(i, r):
                t = self.reduced_trace_q(self.multiply(ws[i], ws[j]))
                gram[i][j] = t
                gram[j][i] = t
        return gram

    def z_discriminant(self):
        """d(Gamma/Z) = det of the reduced-trace Gram (a nonzero integer)."""
        d = frac_mat_det(self.order_gram_exact())
        if d == 0:
            raise ConsistencyError("order trace form is singular")
        if d.denominator != 1:
            raise ConsistencyError("order discriminant is not an integer")
        return int(d)

    def codifferent_basis(self):
        """Basis of Gamma^v, dual to the order basis under tr_{D/Q}."""
        gram = self.order_gram_exact()
        inv = frac_mat_inv(gram)
        ws = self.order_basis
        out = []
        ext = self.E
        for i in range(len(ws)):
            acc = AlgebraElement(self, [ext.zero() for _ in range(self.n)])
            for j, w in enumerate(ws):
                c = inv[i][j]
                if c == 0:
                    continue
                scaled = AlgebraElement(
                    self, [ext.scale_f_vec([c] + [Fraction(0)] * (self.F.degree - 1),
                                           comp) for comp in w.xs])
                acc = acc + scaled
            out.append(acc)
        return out


def block_conj_transpose(x, n):
    """X^h: stack the conjugate transposes of the n x n blocks of X."""
    x = np.asarray(x, dtype=complex)
    k = x.shape[0] // n
    return np.vstack([x[i * n:(i + 1) * n, :].conj().T for i in range(k)])


def algebra_codifferent(alg: CyclicAlgebraCtx) -> MatrixLattice:
    """2 psi(Gamma^v)^h; equals the dual of psi(Gamma) under Re Tr(X^H Y)."""
    gens = [2.0 * block_conj_transpose(alg.psi(w), alg.n)
            for w in alg.codifferent_basis()]
    return MatrixLattice(gens, alg.n, provenance="division-algebra")


def golden_algebra() -> CyclicAlgebraCtx:
    """The Golden division algebra (Q(i, sqrt5)/Q(i), sigma, gamma=i).

    E = F(theta) with theta the golden ratio (theta^2 = theta + 1) and
    sigma(theta) = 1 - theta; the natural order is O_E + u O_E with
    O_E = Z[i][theta].
    """
    F = gaussian_rationals()
    one = [Fraction(1), Fraction(0)]
    zero = [Fraction(0), Fraction(0)]
    i_elt = [Fraction(0), Fraction(1)]
    # y^2 - y - 1: lower coefficients [-1, -1]
    ext = RelativeExtension(F, rel_poly=[[-1, 0], [-1, 0]],
                            sigma_image=[one, [Fraction(-1), Fraction(0)]],
                            name="Q(i,sqrt5)")
    gamma = i_elt
    order = []
    for j in range(2):            # u-power
        for fe in (one, i_elt):   # F-part
            for ep in range(2):   # theta-power
                x = ext.scale_f_vec(fe, ext.gen_power(ep))
                slots = [ext.zero(), ext.zero()]
                slots[j] = x
                order.append(slots)
    return CyclicAlgebraCtx(ext, gamma, order, name="golden")
