"""LLL reduction and exact sphere enumeration (Fincke-Pohst / Schnorr-Euchner).

All routines work on real generator matrices whose *columns* are the basis
vectors.  They are meant for desk-scale dimensions (<= 24); the enumeration
is exact and deterministic.
"""

import numpy as np

from .errors import EnumerationLimit, InvalidLattice

MAX_DIM = 24
DEFAULT_POINT_BUDGET = 5_000_000


def lll_reduce(basis, delta=0.99):
    """LLL-reduce a column basis.

    Returns ``(reduced, unimodular)`` with ``reduced = basis @ unimodular``.
    """
    b = np.array(basis, dtype=float)
    n = b.shape[1]
    u = np.eye(n, dtype=np.int64)

    def gso(bmat):
        q = np.zeros_like(bmat)
        mu = np.zeros((n, n))
        norms = np.zeros(n)
        for i in range(n):
            q[:, i] = bmat[:, i]
            for j in range(i):
                mu[i, j] = q[:, j] @ bmat[:, i] / norms[j]
                q[:, i] -= mu[i, j] * q[:, j]
            norms[i] = q[:, i] @ q[:, i]
            if norms[i] <= 0:
                raise InvalidLattice("basis columns are linearly dependent")
        return mu, norms

    mu, norms = gso(b)
    k = 1
    iters = 0
    while k < n:
        iters += 1
        if iters > 100_000:
            raise EnumerationLimit("LLL failed to terminate")
        for j in range(k - 1, -1, -1):
            m = round(mu[k, j])
            if m != 0:
                b[:, k] -= m * b[:, j]
                u[:, k] -= m * u[:, j]
                mu, norms = gso(b)
        if norms[k] >= (delta - mu[k, k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[:, [k - 1, k]] = b[:, [k, k - 1]]
            u[:, [k - 1, k]] = u[:, [k, k - 1]]
            mu, norms = gso(b)
            k = max(k - 1, 1)
    return b, u


def _upper_triangular(basis):
    """QR with positive diagonal; returns R such that ||B x|| = ||R x||."""
    q, r = np.linalg.qr(basis)
    sign = np.sign(np.diag(r))
    sign[sign == 0] = 1.0
    return sign[:, None] * r


def enumerate_in_ball(basis, radius, point_budget=DEFAULT_POINT_BUDGET):
    """All integer coordinate vectors x != 0 with ||basis @ x|| <= radius.

    Output rows are sorted lexicographically, so the result is deterministic.
    """
    b = np.asarray(basis, dtype=float)
    n = b.shape[1]
    if n > MAX_DIM:
        raise EnumerationLimit(f"dimension {n} exceeds enumeration limit {MAX_DIM}")
    red, u = lll_reduce(b)
    r = _upper_triangular(red)
    rad2 = float(radius) ** 2 * (1 + 1e-12) + 1e-300

    coords = []
    x = np.zeros(n, dtype=np.int64)
    rdiag = np.diag(r)

    # depth-first interval enumeration from the last coordinate down;
    # center[i] carries the offsets induced by the already-fixed levels
    def recurse(level, partial, center):
        if len(coords) > point_budget:
            raise EnumerationLimit("enumeration point budget exceeded")
        rem = rad2 - partial
        if rem < 0:
            return
        bound = np.sqrt(rem) / abs(r[level, level])
        c = center[level]
        lo = int(np.ceil(c - bound - 1e-12))
        hi = int(np.floor(c + bound + 1e-12))
        for xi in range(lo, hi + 1):
            x[level] = xi
            d = r[level, level] * (xi - c)
            new_partial = partial + d * d
            if new_partial > rad2:
                continue
            if level == 0:
                if np.any(x):
                    coords.append(x.copy())
            else:
                recurse(level - 1, new_partial, center - (xi * r[:, level]) / rdiag)
        x[level] = 0

    recurse(n - 1, 0.0, np.zeros(n))
    if not coords:
        return np.zeros((0, n), dtype=np.int64)
    arr = np.array(coords, dtype=np.int64) @ u.T  # back to original coordinates
    order = np.lexsort(arr.T[::-1])
    return arr[order]


def closest_point(basis, target, point_budget=DEFAULT_POINT_BUDGET):
    """Exact closest lattice point to ``target`` (Schnorr-Euchner search).

    Returns integer coordinates x minimizing ||basis @ x - target||; near-ties
    (within 1e-12 relative) are broken toward the lexicographically smallest
    coordinate vector in the reduced frame, so the result is deterministic.
    """
    b = np.asarray(basis, dtype=float)
    n = b.shape[1]
    if n > MAX_DIM:
        raise EnumerationLimit(f"dimension {n} exceeds enumeration limit {MAX_DIM}")
    red, u = lll_reduce(b)
    r = _upper_triangular(red)
    y = np.linalg.solve(red, np.asarray(target, dtype=float))

    best = {"dist2": np.inf, "coords": None}
    x = np.zeros(n, dtype=np.int64)
    visited = [0]
    rdiag = np.diag(r)

    def record():
        cur = x.copy()
        prev = best["coords"]
        if prev is None or tuple(cur) < tuple(prev):
            best["coords"] = cur

    def recurse(level, partial, center):
        visited[0] += 1
        if visited[0] > point_budget:
            raise EnumerationLimit("enumeration point budget exceeded")
        c = center[level]
        xi0 = int(np.round(c))
        step = 0
        while True:
            cand = [xi0] if step == 0 else [xi0 - step, xi0 + step]
            advanced = False
            for xi in cand:
                d = r[level, level] * (xi - c)
                new_partial = partial + d * d
                if new_partial > best["dist2"] * (1 + 1e-12) + 1e-300:
                    continue
                advanced = True
                x[level] = xi
                if level == 0:
                    if new_partial < best["dist2"] * (1 - 1e-12):
                        best["dist2"] = new_partial
                        best["coords"] = x.copy()
                    else:
                        best["dist2"] = min(best["dist2"], new_partial)
                        record()
                else:
                    recurse(level - 1, new_partial,
                            center - ((xi - y[level]) * r[:, level]) / rdiag)
            if not advanced and step > 0:
                break
            step += 1
        x[level] = 0

    recurse(n - 1, 0.0, y.copy())
    coords = u @ best["coords"]
    return coords.astype(np.int64)


def shortest_vector(basis, point_budget=DEFAULT_POINT_BUDGET):
    """Exact shortest nonzero vector; returns (norm, integer coords).

    The witness is the lexicographically smallest coordinate vector among
    those achieving the minimum (both signs considered).
    """
    b = np.asarray(basis, dtype=float)
    red, _ = lll_reduce(b)
    radius = np.sqrt(np.min(np.sum(red * red, axis=0))) * (1 + 1e-9)
    while True:
        pts = enumerate_in_ball(b, radius, point_budget=point_budget)
        if len(pts):
            break
        radius *= 2.0
    vecs = pts @ b.T
    norms2 = np.sum(vecs * vecs, axis=1)
    lam2 = norms2.min()
    mask = norms2 <= lam2 * (1 + 1e-9)
    cand = pts[mask]
    order = np.lexsort(cand.T[::-1])
    witness = cand[order[0]]
    return float(np.sqrt(lam2)), witness
