"""Small numerical and exact-rational linear algebra helpers.

Complex k-space is identified with real 2k-space by stacking real parts
over imaginary parts, so that Re(x^H y) becomes the canonical real inner
product.  All conversions between the two views live here.
"""

from fractions import Fraction

import numpy as np


def complex_to_real(z):
    """Map a complex vector (or stacked vectors, last axis) to (Re; Im)."""
    z = np.asarray(z, dtype=complex)
    return np.concatenate([z.real, z.imag], axis=-1)


def real_to_complex(x):
    """Inverse of :func:`complex_to_real`."""
    x = np.asarray(x, dtype=float)
    m = x.shape[-1]
    if m % 2:
        raise ValueError("real vector must have even length")
    k = m // 2
    return x[..., :k] + 1j * x[..., k:]


def real_rep(a):
    """Real 2k x 2k representation of a complex k x k matrix.

    Acts on (Re z; Im z) exactly as ``a`` acts on ``z``.
    """
    a = np.asarray(a, dtype=complex)
    return np.block([[a.real, -a.imag], [a.imag, a.real]])


def herm_sqrt(sigma):
    """Hermitian positive-definite square root."""
    sigma = np.asarray(sigma, dtype=complex)
    w, v = np.linalg.eigh(sigma)
    if np.any(w <= 0):
        raise ValueError("matrix is not positive definite")
    return (v * np.sqrt(w)) @ v.conj().T


def herm_inv_sqrt(sigma):
    """Hermitian positive-definite inverse square root."""
    sigma = np.asarray(sigma, dtype=complex)
    w, v = np.linalg.eigh(sigma)
    if np.any(w <= 0):
        raise ValueError("matrix is not positive definite")
    return (v / np.sqrt(w)) @ v.conj().T


def frac_matrix(rows):
    """Build a list-of-lists Fraction matrix from any rational-like entries."""
    return [[Fraction(x) for x in row] for row in rows]


def frac_mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        for j in range(p):
            s = Fraction(0)
            for t in range(m):
                s += a[i][t] * b[t][j]
            out[i][j] = s
    return out


def frac_mat_inv(a):
    """Exact inverse of a square Fraction matrix (Gauss-Jordan)."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular rational matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def frac_mat_det(a):
    """Exact determinant of a square Fraction matrix."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv_p = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv_p
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def newton_power_sums(coeffs, up_to):
    """Power sums of the roots of a monic integer polynomial.

    ``coeffs`` are [a_0, ..., a_{m-1}] of x^m + a_{m-1} x^{m-1} + ... + a_0.
    Returns [p_0, ..., p_up_to] as Fractions, p_j = sum of j-th powers of roots.
    """
    m = len(coeffs)
    a = [Fraction(c) for c in coeffs]
    p = [Fraction(m)]
    for j in range(1, up_to + 1):
        s = Fraction(0)
        for i in range(1, min(j - 1, m) + 1):
            s += a[m - i] * p[j - i]
        if j <= m:
            s += Fraction(j) * a[m - j]
        p.append(-s)
    return p
