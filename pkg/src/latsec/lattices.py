"""Lattices in complex k-space with exact enumerative invariants.

A lattice is stored as a real 2k x 2k generator matrix whose columns are the
basis vectors; complex k-space is identified with real 2k-space by stacking
real over imaginary parts, which turns Re(x^H y) into the canonical real
inner product.  The dual is taken with respect to that pairing, so the real
form is the canonical one.

Multi-block matrix lattices live in M_{nk x n}(C) with inner product
Re Tr(X^H Y); they are carried by an ordinary lattice over the vectorization
xi(X) (row-major stacking), which is an isometry satisfying
xi(H X) = (H kron I_n) xi(X).
"""

import numpy as np

from . import reduction
from .errors import EnumerationLimit, InvalidLattice
from .linalg import complex_to_real, real_rep, real_to_complex

_PRODUCT_ZERO_TOL = 1e-12


class Lattice:
    """Full-rank lattice in C^k, stored as a real 2k x 2k generator matrix."""

    def __init__(self, basis, provenance="explicit"):
        basis = np.array(basis, dtype=float)
        if basis.ndim != 2 or basis.shape[0] != basis.shape[1]:
            raise InvalidLattice("generator matrix must be square")
        if basis.shape[0] % 2:
            raise InvalidLattice("real dimension must be even (complex k-space)")
        self.basis = basis
        self.dim_real = basis.shape[0]
        self.dim_complex = basis.shape[0] // 2
        self.provenance = provenance
        self._gram = basis.T @ basis
        det = np.linalg.det(self._gram)
        if det <= 0 or not np.isfinite(det):
            raise InvalidLattice("basis columns are linearly dependent")
        self._volume = float(np.sqrt(det))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_complex_basis(cls, vectors, provenance="explicit"):
        """Build from 2k complex basis vectors in C^k (rows or columns of a list)."""
        vecs = [complex_to_real(v) for v in vectors]
        basis = np.column_stack(vecs)
        return cls(basis, provenance=provenance)

    @classmethod
    def integer(cls, dim_real):
        """The integer lattice Z^dim_real (dim_real = 2k)."""
        return cls(np.eye(dim_real), provenance="explicit")

    # -- basic geometry --------------------------------------------------------

    @property
    def gram(self):
        return self._gram

    @property
    def volume(self):
        return self._volume

    def vector(self, coords):
        """Real lattice vector for integer coordinates."""
        return self.basis @ np.asarray(coords, dtype=float)

    def complex_vector(self, coords):
        return real_to_complex(self.vector(coords))

    def coords(self, vec_real):
        """Real coordinates of a point in the basis (not rounded)."""
        return np.linalg.solve(self.basis, np.asarray(vec_real, dtype=float))

    def scale(self, alpha):
        """The lattice alpha * Lambda."""
        return Lattice(self.basis * float(alpha), provenance=self.provenance)

    def transform(self, a_complex):
        """Apply an invertible complex k x k matrix to the lattice."""
        m = real_rep(a_complex)
        return Lattice(m @ self.basis, provenance=self.provenance)

    def dual(self):
        """Dual lattice w.r.t. the real pairing Re(x^H y)."""
        try:
            bstar = np.linalg.inv(self.basis).T
        except np.linalg.LinAlgError as exc:
            raise InvalidLattice("singular basis") from exc
        return Lattice(bstar, provenance=self.provenance)

    # -- enumerative invariants ------------------------------------------------

    def enumerate(self, radius, point_budget=reduction.DEFAULT_POINT_BUDGET):
        """Integer coordinates of all nonzero vectors with norm <= radius."""
        return reduction.enumerate_in_ball(self.basis, radius, point_budget=point_budget)

    def min_distance(self, radius_hint=None):
        """Exact minimum distance via enumeration; returns (lambda1, witness).

        The witness is the real lattice vector; its coordinate vector is the
        lexicographically smallest one achieving lambda1.
        """
        if self.dim_real > reduction.MAX_DIM:
            raise EnumerationLimit(
                f"dimension {self.dim_real} exceeds enumeration limit")
        if radius_hint is None:
            lam, coords = reduction.shortest_vector(self.basis)
            return lam, self.vector(coords)
        radius = float(radius_hint)
        while True:
            pts = self.enumerate(radius)
            if len(pts):
                break
            radius *= 2.0
        vecs = pts @ self.basis.T
        norms2 = np.einsum("ij,ij->i", vecs, vecs)
        lam2 = norms2.min()
        cand = pts[norms2 <= lam2 * (1 + 1e-9)]
        order = np.lexsort(cand.T[::-1])
        witness = cand[order[0]]
        return float(np.sqrt(lam2)), self.vector(witness)

    def hermite_invariant(self):
        """lambda1^2 / V^{1/k}; scale invariant."""
        lam1, _ = self.min_distance()
        return lam1 ** 2 / self._volume ** (1.0 / self.dim_complex)

    def product_distance(self):
        """Certified enumerated minimum of prod |x_i| and its normalization.

        Returns ``(p, np_norm, radius)``.  All nonzero vectors with norm at
        most ``radius`` were enumerated; ``p`` is the smallest product of
        coordinate moduli among them (coordinates below 1e-12 count as zero,
        giving p = 0, which can happen for non-algebraic lattices).  The AM-GM
        inequality guarantees radius^2 >= k * t^{2/k} for the initial upper
        bound t, so the ball covers the region where smaller products could
        hide at minimal norm.
        """
        k = self.dim_complex
        if k > 8:
            raise EnumerationLimit(f"complex dimension {k} exceeds product limit 8")
        lam1, witness = self.min_distance()
        t0 = _coord_product(real_to_complex(witness))
        for j in range(self.dim_real):
            t0 = min(t0, _coord_product(real_to_complex(self.basis[:, j])))
        if t0 <= _PRODUCT_ZERO_TOL:
            radius = lam1 * (1 + 1e-9)
        else:
            radius = float(np.sqrt(k) * t0 ** (1.0 / k)) * (1 + 1e-9)
        radius = max(radius, lam1 * (1 + 1e-9))
        pts = self.enumerate(radius)
        vecs = real_to_complex(pts @ self.basis.T)
        mods = np.abs(vecs)
        mods = np.where(mods < _PRODUCT_ZERO_TOL, 0.0, mods)
        p = float(np.prod(mods, axis=1).min())
        np_norm = p / np.sqrt(self._volume)
        return p, np_norm, radius


def _coord_product(z):
    mods = np.abs(np.asarray(z))
    mods = np.where(mods < _PRODUCT_ZERO_TOL, 0.0, mods)
    return float(np.prod(mods))


# -- matrix lattices ----------------------------------------------------------

def vectorize(x):
    """Isometry M_{nk x n}(C) -> C^{n^2 k} (row-major stacking).

    Satisfies xi(H X) = (H kron I_n) xi(X) for H acting on the left.
    """
    return np.asarray(x, dtype=complex).reshape(-1)


def devectorize(v, block_rows, cols):
    """Inverse of :func:`vectorize` onto an (block_rows x cols) matrix."""
    v = np.asarray(v, dtype=complex)
    if v.size != block_rows * cols:
        raise ValueError("vector length does not match matrix shape")
    return v.reshape(block_rows, cols)


class MatrixLattice:
    """Lattice of stacked n x n blocks in M_{nk x n}(C).

    Carried by a real lattice over xi; product-determinant semantics are
    evaluated blockwise.
    """

    def __init__(self, generators, block_size, provenance="explicit"):
        gens = [np.asarray(g, dtype=complex) for g in generators]
        n = int(block_size)
        rows = gens[0].shape[0]
        if rows % n or gens[0].shape[1] != n:
            raise InvalidLattice("generators must be (n*k) x n matrices")
        k = rows // n
        if len(gens) != 2 * n * n * k:
            raise InvalidLattice("need 2*n^2*k generators for a full-rank lattice")
        self.block_size = n
        self.block_rows = k
        self.generators = gens
        self.provenance = provenance
        cols = [complex_to_real(vectorize(g)) for g in gens]
        self.real_lattice = Lattice(np.column_stack(cols), provenance=provenance)

    @property
    def dim_complex(self):
        return self.block_size ** 2 * self.block_rows

    @property
    def volume(self):
        return self.real_lattice.volume

    def matrix(self, coords):
        """Lattice matrix for integer coordinates."""
        out = np.zeros_like(self.generators[0])
        for c, g in zip(np.asarray(coords), self.generators):
            if c:
                out = out + c * g
        return out

    def blocks(self, x):
        n = self.block_size
        return [x[i * n:(i + 1) * n, :] for i in range(self.block_rows)]

    def pdet(self, x):
        """Product of the k block determinants."""
        return np.prod([np.linalg.det(b) for b in self.blocks(x)])

    def scale(self, alpha):
        return MatrixLattice([alpha * g for g in self.generators],
                             self.block_size, provenance=self.provenance)

    def dual(self):
        """Dual matrix lattice w.r.t. Re Tr(X^H Y)."""
        dual_real = self.real_lattice.dual()
        n, k = self.block_size, self.block_rows
        gens = [devectorize(real_to_complex(dual_real.basis[:, j]), n * k, n)
                for j in range(dual_real.dim_real)]
        return MatrixLattice(gens, n, provenance=self.provenance)

    def pdet_min(self, coord_box=None, point_budget=reduction.DEFAULT_POINT_BUDGET):
        """Minimum |pdet| over enumerated nonzero lattice matrices.

        Returns ``(pdet, delta, radius)``.  The search ball obeys the norm
        inequality ||X||^2 >= nk |pdet(X)|^{2/nk}, so its squared radius is
        nk * t^{2/nk} for the initial upper bound t.  If ``coord_box`` is
        given, an exhaustive integer-coordinate box search is used instead and
        the reported radius is NaN.
        """
        n, k = self.block_size, self.block_rows
        dim = 2 * n * n * k
        if dim > 16:
            raise EnumerationLimit(f"total dimension {dim} exceeds pdet limit 16")
        if coord_box is not None:
            best = self._pdet_box_search(coord_box)
            return best, best / self.volume ** (1.0 / (2 * n)), float("nan")
        lam1, _ = self.real_lattice.min_distance()
        t0 = min(abs(self.pdet(g)) for g in self.generators)
        wit_coords = reduction.shortest_vector(self.real_lattice.basis)[1]
        t0 = min(t0, abs(self.pdet(self.matrix(wit_coords))))
        if t0 <= _PRODUCT_ZERO_TOL:
            radius = lam1 * (1 + 1e-9)
        else:
            radius = float(np.sqrt(n * k) * t0 ** (1.0 / (n * k))) * (1 + 1e-9)
        radius = max(radius, lam1 * (1 + 1e-9))
        pts = self.real_lattice.enumerate(radius, point_budget=point_budget)
        best = np.inf
        for c in pts:
            val = abs(self.pdet(self.matrix(c)))
            if val < _PRODUCT_ZERO_TOL:
                val = 0.0
            best = min(best, val)
        delta = best / self.volume ** (1.0 / (2 * n))
        return float(best), float(delta), radius

    def _pdet_box_search(self, bound, chunk=200_000):
        """Exhaustive |pdet| minimum over integer coordinates in [-bound, bound]."""
        dim = 2 * self.block_size ** 2 * self.block_rows
        side = 2 * bound + 1
        total = side ** dim
        gen_stack = np.stack(self.generators)  # (dim, nk, n)
        best = np.inf
        idx = np.arange(0, total, dtype=np.int64)
        for start in range(0, total, chunk):
            block = idx[start:start + chunk]
            coords = np.empty((len(block), dim), dtype=np.int64)
            rem = block.copy()
            for d in range(dim):
                coords[:, d] = rem % side - bound
                rem //= side
            nz = np.any(coords, axis=1)
            coords = coords[nz]
            if not len(coords):
                continue
            mats = np.tensordot(coords.astype(float), gen_stack, axes=(1, 0))
            vals = np.ones(len(coords))
            n = self.block_size
            for i in range(self.block_rows):
                blocks = mats[:, i * n:(i + 1) * n, :]
                vals = vals * np.abs(np.linalg.det(blocks))
            best = min(best, float(vals.min()))
        return best
