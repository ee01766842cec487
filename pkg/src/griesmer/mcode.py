"""Multiset model of a linear code over GF(q).

A full-support [n, k, d]_q code is represented by the multiset of its
generator-matrix columns viewed as points of PG(k-1, q).  All parameters
are computed exactly from hyperplane multiplicities: n - d is the largest
one, the divisor is the gcd of the weights n - m(H), and the spectrum a_i
counts hyperplanes of multiplicity i.  A brute-force enumeration of all
q^k codewords is provided as an independent oracle; it never touches the
hyperplane machinery.

File formats (plain text, exact round trip):
  multiset          header "q k", then one support line per point:
                    "multiplicity c0 c1 ... c_{k-1}" using element encodings
  generator matrix  header "q k n", then k rows of n element encodings
A JSON sidecar "<path>.meta.json" carries construction provenance when the
multiset has any.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import pg
from .errors import FileFormatError, NotFullRank, TooLarge, ZeroColumn
from .gf import Field, field

DEFAULT_MAX_ORACLE = 10**7
_ORACLE_ENV = "GRIESMER_MAX_ORACLE"
_CHUNK_ELEMS = 24_000_000


@dataclass(frozen=True)
class CodeParams:
    """Exact parameters of a multiset code.

    lam[i] is the number of points of PG(k-1, q) carrying multiplicity i,
    so lam[0] counts the holes and len(lam) == gamma0 + 1.
    """

    n: int
    k: int
    d: int
    divisor: int
    gamma0: int
    lam: tuple[int, ...]


class PointMultiset:
    """Immutable multiset of points of PG(r, q) with positive multiplicities."""

    def __init__(self, F: Field, r: int, mults, meta: dict | None = None):
        cleaned: dict[tuple[int, ...], int] = {}
        for P, m in dict(mults).items():
            m = int(m)
            if m < 0:
                raise ValueError(f"negative multiplicity {m}")
            if m == 0:
                continue
            P = pg.normalize_point(F, P)
            if len(P) != r + 1:
                raise ValueError(f"point {P} does not live in PG({r}, {F.q})")
            if any(not (0 <= c < F.q) for c in P):
                raise ValueError(f"coordinate out of range in {P}")
            cleaned[P] = cleaned.get(P, 0) + m
        if not cleaned:
            raise ValueError("a code multiset needs at least one point")
        self.field = F
        self.r = r
        self.mults = cleaned
        self.support = tuple(sorted(cleaned, key=pg.point_key))
        self.meta = dict(meta or {})
        self._mvec: np.ndarray | None = None
        self._params: CodeParams | None = None

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return self.r + 1

    @property
    def n(self) -> int:
        return sum(self.mults.values())

    @property
    def gamma0(self) -> int:
        return max(self.mults.values())

    def mult(self, P) -> int:
        return self.mults.get(pg.normalize_point(self.field, P), 0)

    def hyperplane_mults(self) -> np.ndarray:
        """m(H) for every hyperplane, indexed like pg.enumerate_points."""
        if self._mvec is None:
            weights = [self.mults[P] for P in self.support]
            self._mvec = pg.hyperplane_multiplicities(
                self.field, self.r, self.support, weights
            )
            self._mvec.setflags(write=False)
        return self._mvec

    def lambda_counts(self) -> tuple[int, ...]:
        counts = Counter(self.mults.values())
        lam = [counts.get(i, 0) for i in range(self.gamma0 + 1)]
        lam[0] = pg.theta(self.r, self.q) - len(self.support)
        return tuple(lam)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointMultiset)
            and self.q == other.q
            and self.r == other.r
            and self.mults == other.mults
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"PointMultiset(PG({self.r},{self.q}), n={self.n}, support={len(self.support)})"


def multiset_multiplicity(M: PointMultiset, points) -> int:
    """Total multiplicity of a point set: sum of mult(P) over the set."""
    canonical = {pg.normalize_point(M.field, P) for P in points}
    return sum(M.mults.get(P, 0) for P in canonical)


def hyperplane_spectrum(M: PointMultiset) -> dict[int, int]:
    """Counts a_i of hyperplanes with multiplicity i (only nonzero entries)."""
    vals, counts = np.unique(M.hyperplane_mults(), return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


def code_params(M: PointMultiset) -> CodeParams:
    """Exact [n, k, d]_q parameters plus divisor and multiplicity profile."""
    if M._params is not None:
        return M._params
    k = M.k
    if pg.rank(M.field, M.support, stop_at=k) < k:
        raise NotFullRank(f"support spans a proper subspace of PG({M.r}, {M.q})")
    mvec = M.hyperplane_mults()
    n = M.n
    d = n - int(mvec.max())
    divisor = int(np.gcd.reduce(n - mvec))
    M._params = CodeParams(
        n=n, k=k, d=d, divisor=divisor, gamma0=M.gamma0, lam=M.lambda_counts()
    )
    return M._params


def is_divisible(M: PointMultiset, m: int) -> bool:
    """True iff every codeword weight n - m(H) is divisible by m (> 1)."""
    if m <= 1:
        raise ValueError(f"divisibility modulus must exceed 1, got {m}")
    mvec = M.hyperplane_mults()
    return not (((M.n - mvec) % m) != 0).any()


def generator_matrix(M: PointMultiset) -> np.ndarray:
    """k x n matrix whose columns repeat each support point mult times.

    Column order is deterministic: points in enumeration order, repeats
    adjacent.
    """
    params = code_params(M)  # NotFullRank check
    cols = []
    for P in M.support:
        cols.extend([P] * M.mults[P])
    G = np.array(cols, dtype=np.int64).T
    assert G.shape == (params.k, params.n)
    return G


def multiset_from_matrix(G, q: int, meta: dict | None = None) -> PointMultiset:
    """Inverse of generator_matrix: proportional columns collapse to one point."""
    F = field(q)
    G = np.asarray(G, dtype=np.int64)
    if G.ndim != 2 or G.shape[0] < 1:
        raise FileFormatError("generator matrix must be two-dimensional")
    k, n = G.shape
    mults: dict[tuple[int, ...], int] = {}
    for j in range(n):
        col = tuple(int(x) for x in G[:, j])
        if all(c == 0 for c in col):
            raise ZeroColumn(f"column {j} is zero (code would not have full support)")
        P = pg.normalize_point(F, col)
        mults[P] = mults.get(P, 0) + 1
    M = PointMultiset(F, k - 1, mults, meta=meta)
    if pg.rank(F, M.support, stop_at=k) < k:
        raise NotFullRank("matrix rank is below the number of rows")
    return M


def _oracle_bound(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(_ORACLE_ENV)
    return int(env) if env else DEFAULT_MAX_ORACLE


def oracle_weight_distribution(M: PointMultiset, max_codewords: int | None = None) -> dict[int, int]:
    """Exact weight distribution by enumerating all q^k codewords.

    Entirely independent of the hyperplane computation: it expands the
    generator matrix and walks every message vector.  Refuses to run past
    the configured bound (GRIESMER_MAX_ORACLE, default 10^7 codewords).
    """
    F = M.field
    k, q = M.k, M.q
    total = q**k
    bound = _oracle_bound(max_codewords)
    if total > bound:
        raise TooLarge(f"{total} codewords exceed the oracle bound {bound}")
    G = generator_matrix(M)
    n = G.shape[1]
    h, p = F.h, F.p
    forms = F.linear_form_matrix(G.T)  # one form per codeword coordinate
    kh = k * h
    weights = np.zeros(n + 1, dtype=np.int64)
    place = p ** np.arange(kh, dtype=np.int64)
    chunk = max(1, _CHUNK_ELEMS // max(1, n * h))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        D = ((idx[:, None] // place[None, :]) % p).astype(np.float64)
        R = D @ forms
        R %= p
        if h == 1:
            zeros = (R == 0.0).sum(axis=1)
        else:
            zeros = (R.reshape(len(idx), n, h) == 0.0).all(axis=2).sum(axis=1)
        w = n - zeros.astype(np.int64)
        weights += np.bincount(w, minlength=n + 1)
    return {int(w): int(c) for w, c in enumerate(weights) if c}


# ---------------------------------------------------------------------------
# file formats


def _meta_path(path) -> Path:
    return Path(str(path) + ".meta.json")


def write_multiset(M: PointMultiset, path) -> None:
    lines = [f"{M.q} {M.k}"]
    for P in M.support:
        lines.append(f"{M.mults[P]} " + " ".join(str(c) for c in P))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")
    if M.meta:
        _meta_path(path).write_text(
            json.dumps(M.meta, sort_keys=True, indent=2) + "\n", encoding="ascii"
        )


def read_multiset(path) -> PointMultiset:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise FileFormatError(f"{path}: expected a 'q k' header")
    try:
        q, k = int(rows[0][0]), int(rows[0][1])
    except ValueError as exc:
        raise FileFormatError(f"{path}: malformed header") from exc
    if k < 1:
        raise FileFormatError(f"{path}: dimension must be positive")
    F = field(q)
    mults: dict[tuple[int, ...], int] = {}
    for ln_no, row in enumerate(rows[1:], start=2):
        if len(row) != k + 1:
            raise FileFormatError(f"{path}:{ln_no}: expected multiplicity plus {k} coordinates")
        try:
            vals = [int(x) for x in row]
        except ValueError as exc:
            raise FileFormatError(f"{path}:{ln_no}: non-integer entry") from exc
        m, coords = vals[0], tuple(vals[1:])
        if m < 1:
            raise FileFormatError(f"{path}:{ln_no}: multiplicity must be positive")
        if any(not (0 <= c < q) for c in coords):
            raise FileFormatError(f"{path}:{ln_no}: coordinate outside [0, {q})")
        try:
            P = pg.normalize_point(F, coords)
        except ValueError as exc:
            raise FileFormatError(f"{path}:{ln_no}: {exc}") from exc
        if P != coords:
            raise FileFormatError(f"{path}:{ln_no}: point is not in canonical form")
        if P in mults:
            raise FileFormatError(f"{path}:{ln_no}: duplicate point")
        mults[P] = m
    if not mults:
        raise FileFormatError(f"{path}: no support points")
    meta = None
    mp = _meta_path(path)
    if mp.exists():
        meta = json.loads(mp.read_text(encoding="ascii"))
    return PointMultiset(F, k - 1, mults, meta=meta)


def write_gmatrix(M: PointMultiset, path) -> None:
    G = generator_matrix(M)
    k, n = G.shape
    lines = [f"{M.q} {k} {n}"]
    for row in G:
        lines.append(" ".join(str(int(x)) for x in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_gmatrix(path) -> PointMultiset:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 3:
        raise FileFormatError(f"{path}: expected a 'q k n' header")
    try:
        q, k, n = (int(x) for x in rows[0])
    except ValueError as exc:
        raise FileFormatError(f"{path}: malformed header") from exc
    if len(rows) != k + 1 or any(len(r) != n for r in rows[1:]):
        raise FileFormatError(f"{path}: expected {k} rows of {n} entries")
    try:
        G = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise FileFormatError(f"{path}: non-integer entry") from exc
    if any(not (0 <= x < q) for r in G for x in r):
        raise FileFormatError(f"{path}: entry outside [0, {q})")
    return multiset_from_matrix(G, q)
