"""The projective space PG(r, q): canonical points, flats, incidence, span,
and the duality between points and hyperplanes.

A point is a tuple of r+1 element encodings normalized so the leftmost
nonzero coordinate is 1.  Hyperplane coefficient vectors use the identical
normal form, so reinterpreting one as a point of the dual space is the
identity on coordinates.  Enumeration is deterministic: points grouped by
the position of their leading 1, trailing coordinates counted upward, so
PG(1, 2) lists (1,0), (1,1), (0,1).

Everything here is pure and the per-(q, r) point tables are cached, which
keeps repeated spectrum computations on the same ambient space cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DimensionMismatch
from .gf import Field

# hyperplane-block chunking keeps each intermediate under ~200 MB
_CHUNK_ELEMS = 24_000_000

_POINTS_CACHE: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
_FORMS_CACHE: dict[tuple[int, int], np.ndarray] = {}


def theta(j: int, q: int) -> int:
    """Number of points of a j-flat of PG(r, q): (q^(j+1)-1)/(q-1); 0 for j < 0."""
    if j < 0:
        return 0
    return (q ** (j + 1) - 1) // (q - 1)


def normalize_point(F: Field, coords) -> tuple[int, ...]:
    """Scale so the leftmost nonzero coordinate is 1 (canonical form)."""
    coords = tuple(coords)
    for c in coords:
        if c != 0:
            if c == 1:
                return coords
            s = F.inv(c)
            return tuple(F.mul(s, x) for x in coords)
    raise ValueError("the zero vector is not a projective point")


def point_key(P: tuple[int, ...]) -> tuple:
    """Sort key matching enumeration order for canonical points."""
    for i, c in enumerate(P):
        if c != 0:
            return (i, P[i + 1 :])
    raise ValueError("the zero vector is not a projective point")


def enumerate_points(F: Field, r: int) -> tuple[tuple[int, ...], ...]:
    """All theta(r, q) canonical points of PG(r, q), in enumeration order."""
    key = (F.q, r)
    cached = _POINTS_CACHE.get(key)
    if cached is None:
        q = F.q
        pts = []
        for pivot in range(r + 1):
            head = (0,) * pivot + (1,)
            for tail in product(range(q), repeat=r - pivot):
                pts.append(head + tail)
        cached = tuple(pts)
        assert len(cached) == theta(r, q)
        _POINTS_CACHE[key] = cached
    return cached


def dot(F: Field, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def incident(F: Field, P, H) -> bool:
    """True iff the point P lies on the hyperplane with coefficients H."""
    if len(P) != len(H):
        raise DimensionMismatch(f"point has {len(P)} coordinates, hyperplane {len(H)}")
    return dot(F, P, H) == 0


def dual_point(H) -> tuple[int, ...]:
    """Hyperplane coefficients reinterpreted as a point of the dual space."""
    return tuple(H)


def dual_hyperplane(P) -> tuple[int, ...]:
    """Point coordinates reinterpreted as hyperplane coefficients of the dual."""
    return tuple(P)


@dataclass(frozen=True)
class Flat:
    """A projective subspace given by its reduced-echelon basis rows."""

    r: int  # ambient dimension
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis) - 1


def rref(F: Field, rows) -> tuple[tuple[int, ...], ...]:
    """Unique reduced row echelon form over GF(q), zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    width = len(mat[0])
    lead = 0
    for col in range(width):
        pivot = next((i for i in range(lead, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[lead], mat[pivot] = mat[pivot], mat[lead]
        inv = F.inv(mat[lead][col])
        if inv != 1:
            mat[lead] = [F.mul(inv, x) for x in mat[lead]]
        for i in range(len(mat)):
            if i != lead and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(mat[i], mat[lead])]
        lead += 1
        if lead == len(mat):
            break
    return tuple(tuple(row) for row in mat[:lead])


def rank(F: Field, rows, stop_at: int | None = None) -> int:
    """Rank over GF(q); stops early once stop_at is reached."""
    echelon: dict[int, list[int]] = {}
    for row in rows:
        v = list(row)
        col = 0
        width = len(v)
        while col < width:
            if v[col] == 0:
                col += 1
                continue
            basis_row = echelon.get(col)
            if basis_row is None:
                inv = F.inv(v[col])
                if inv != 1:
                    v = [F.mul(inv, x) for x in v]
                echelon[col] = v
                break
            f = v[col]
            v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, basis_row)]
        if stop_at is not None and len(echelon) >= stop_at:
            return len(echelon)
    return len(echelon)


def span(F: Field, points) -> Flat:
    """Smallest flat containing the given points (canonical basis)."""
    pts = list(points)
    if not pts:
        raise ValueError("span of an empty point set is undefined")
    return Flat(r=len(pts[0]) - 1, basis=rref(F, pts))


def flat_points(F: Field, flat: Flat) -> list[tuple[int, ...]]:
    """All theta(dim, q) canonical points of a flat, sorted canonically."""
    basis = flat.basis
    q = F.q
    pts = []
    for t in range(len(basis)):
        anchor = basis[t]
        rest = basis[t + 1 :]
        for coeffs in product(range(q), repeat=len(rest)):
            vec = list(anchor)
            for c, row in zip(coeffs, rest):
                if c:
                    for i, x in enumerate(row):
                        if x:
                            vec[i] = F.add(vec[i], F.mul(c, x))
            pts.append(normalize_point(F, vec))
    pts.sort(key=point_key)
    assert len(pts) == theta(flat.dim, q)
    return pts


def hyperplane_flat(F: Field, coeffs) -> Flat:
    """The (r-1)-flat of points annihilated by a coefficient vector."""
    coeffs = normalize_point(F, coeffs)
    k = len(coeffs)
    pivot = next(i for i, c in enumerate(coeffs) if c != 0)
    rows = []
    for c in range(k):
        if c == pivot:
            continue
        row = [0] * k
        row[c] = 1
        row[pivot] = F.neg(coeffs[c])
        rows.append(row)
    return Flat(r=k - 1, basis=rref(F, rows))


def line_points_through(F: Field, P, R) -> list[tuple[int, ...]]:
    """The q+1 points of the line joining two distinct points."""
    if tuple(P) == tuple(R):
        raise ValueError("a line needs two distinct points")
    pts = [normalize_point(F, R)]
    for lam in range(F.q):
        vec = [F.add(a, F.mul(lam, b)) for a, b in zip(P, R)]
        pts.append(normalize_point(F, vec))
    assert len(set(pts)) == F.q + 1
    return pts


def _forms_matrix(F: Field, r: int) -> np.ndarray:
    key = (F.q, r)
    cached = _FORMS_CACHE.get(key)
    if cached is None:
        pts = enumerate_points(F, r)
        cached = F.linear_form_matrix(np.array(pts, dtype=np.int64))
        _FORMS_CACHE[key] = cached
    return cached


def hyperplane_multiplicities(F: Field, r: int, support, weights) -> np.ndarray:
    """Weighted incidence counts over every hyperplane of PG(r, q).

    Returns an int64 array indexed like enumerate_points(F, r) (hyperplane
    coefficient vectors share the point enumeration), whose entry for H is
    sum of weights over support points lying on H.  Exact: all arithmetic
    stays on small integers represented in float64.
    """
    pts = enumerate_points(F, r)
    n_forms = len(pts)
    h, p = F.h, F.p
    X = F.digit_rows(np.array(list(support), dtype=np.int64))
    w = np.asarray(list(weights), dtype=np.float64)
    s = X.shape[0]
    forms = _forms_matrix(F, r)
    out = np.empty(n_forms, dtype=np.int64)
    chunk = max(1, _CHUNK_ELEMS // max(1, s * h))
    for a in range(0, n_forms, chunk):
        b = min(n_forms, a + chunk)
        R = X @ forms[:, a * h : b * h]
        R %= p
        if h == 1:
            Z = R == 0.0
        else:
            Z = (R.reshape(s, b - a, h) == 0.0).all(axis=2)
        out[a:b] = np.rint(w @ Z).astype(np.int64)
    return out
