"""Arc and line-configuration constructions of divisible codes.

The raw material is a normal rational curve: the q+1 points
(1, t, t^2, ..., t^{k-2}, 0) for t in GF(q) plus the limit point
(0,...,0,1,0), all inside the hyperplane [0,...,0,1] of PG(k-1, q).
Joining the curve points to a transversal line l0 through (1,0,...,0)
yields q further lines; unions of those lines minus l0, weighted copies of
a few special points, and one extra point Q off the configuration produce
two families of q-divisible codes (code_c1 and code_c2 below).

Nothing is taken on faith: every constructor recomputes the parameters,
the divisibility, and the count of maximal-multiplicity hyperplanes from
scratch and refuses to return a code that misses its contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import pg
from .errors import (
    ArcConditionViolated,
    ConfigDegenerate,
    OutOfScope,
    ParamMismatch,
    SpectrumMismatch,
)
from .gf import Field, field
from .mcode import PointMultiset, code_params, hyperplane_spectrum, is_divisible


def _choose(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def normal_rational_curve(k: int, q: int) -> list[tuple[int, ...]]:
    """The (q+1)-arc P_0, ..., P_q in the hyperplane [0,...,0,1] of PG(k-1, q).

    P_0 = (1,0,...,0), P_i = (1, a^i, a^{2i}, ..., a^{(k-2)i}, 0) for the
    primitive element a, and P_q = (0,...,0,1,0).  Needs q >= k-2 so that
    q+1 points can be an arc in a (k-2)-dimensional space.
    """
    if k < 4:
        raise OutOfScope(f"curve constructions need dimension k >= 4, got {k}")
    if q < k - 2:
        raise ArcConditionViolated(f"q={q} < k-2={k - 2}: no (q+1)-arc of this size")
    F = field(q)
    points = [(1,) + (0,) * (k - 1)]
    for i in range(1, q):
        points.append(tuple(F.alpha_power(j * i) for j in range(k - 1)) + (0,))
    points.append((0,) * (k - 2) + (1, 0))
    return points


def arc_check(F: Field, points, ambient: pg.Flat) -> bool:
    """True iff every (dim+1)-subset of the points spans the ambient flat."""
    from itertools import combinations

    r = ambient.dim
    pts = [pg.normalize_point(F, P) for P in points]
    if len(pts) < r + 1:
        return False
    for subset in combinations(pts, r + 1):
        if pg.rank(F, subset, stop_at=r + 1) < r + 1:
            return False
    # membership in the ambient flat
    flat_set = set(pg.flat_points(F, ambient))
    return all(P in flat_set for P in pts)


@dataclass(frozen=True)
class LineConfig:
    """Verified arc-and-lines configuration in PG(k-1, q).

    arc:    P_0..P_q on the hyperplane [0,...,0,1]
    l0:     the transversal line (P_0, Q_1, ..., Q_q), meeting that
            hyperplane only at P_0
    lines:  l_1..l_q where l_i joins P_i with Q_i; the sets l_i minus l0
            are pairwise disjoint with q points each
    q_point: Q = (0,1,0,...,0,1), on none of those lines
    """

    k: int
    q: int
    arc: tuple[tuple[int, ...], ...]
    l0: tuple[tuple[int, ...], ...]
    lines: tuple[tuple[tuple[int, ...], ...], ...]
    q_point: tuple[int, ...]


def line_config(k: int, q: int) -> LineConfig:
    """Build and verify the full configuration; raises ConfigDegenerate on
    any failed invariant (which would be a bug, not bad input)."""
    arc = normal_rational_curve(k, q)
    F = field(q)
    P0 = arc[0]

    qs = [(1,) + (0,) * (k - 2) + (F.alpha_power(i),) for i in range(1, q)]
    qs.append((0,) * (k - 1) + (1,))
    l0 = (P0, *qs)

    l0_span = pg.span(F, [P0, qs[-1]])
    if set(pg.flat_points(F, l0_span)) != set(l0):
        raise ConfigDegenerate("transversal line does not consist of the stated points")

    hyper = pg.Flat(
        r=k - 1,
        basis=tuple(tuple(1 if j == i else 0 for j in range(k)) for i in range(k - 1)),
    )
    if not all(P[-1] == 0 for P in arc):
        raise ConfigDegenerate("arc point falls outside the reference hyperplane")
    if not arc_check(F, arc, hyper):
        raise ConfigDegenerate("curve points fail the arc condition")

    l0_set = set(l0)
    if sum(1 for P in l0 if P[-1] == 0) != 1:
        raise ConfigDegenerate("transversal line must meet the hyperplane only at P_0")

    lines = []
    seen: set[tuple[int, ...]] = set()
    for i in range(1, q + 1):
        li = tuple(
            sorted(pg.line_points_through(F, arc[i], l0[i]), key=pg.point_key)
        )
        off = set(li) - l0_set
        if len(off) != q:
            raise ConfigDegenerate(f"line {i} shares more than one point with l0")
        if off & seen:
            raise ConfigDegenerate(f"line {i} overlaps an earlier line off l0")
        seen |= off
        lines.append(li)

    q_point = (0, 1) + (0,) * (k - 3) + (1,)
    return LineConfig(
        k=k, q=q, arc=tuple(arc), l0=l0, lines=tuple(lines), q_point=q_point
    )


def _config_meta(cfg: LineConfig, family: str) -> dict:
    return {
        "construction": {
            "family": family,
            "q": cfg.q,
            "k": cfg.k,
            "arc": [list(P) for P in cfg.arc],
            "l0": [list(P) for P in cfg.l0],
            "lines": [[list(P) for P in line] for line in cfg.lines],
            "q_point": list(cfg.q_point),
        }
    }


def _config_meta_from(base: PointMultiset, family: str) -> dict:
    meta = {"construction": dict(base.meta["construction"])}
    meta["construction"]["family"] = family
    return meta


def base_code_1(k: int, q: int) -> PointMultiset:
    """[q^2+q-1, k, q^2-(k-3)q]_q: all q lines minus l0, plus P_0 weighted q-1."""
    cfg = line_config(k, q)
    l0_set = set(cfg.l0)
    mults: dict[tuple[int, ...], int] = {}
    for line in cfg.lines:
        for P in line:
            if P not in l0_set:
                mults[P] = 1
    mults[cfg.arc[0]] = q - 1
    return PointMultiset(field(q), k - 1, mults, meta=_config_meta(cfg, "base1"))


def base_code_2(k: int, q: int) -> PointMultiset:
    """[q^2+2q-2, k, q^2-(k-3)q]_q: lines l_1..l_{q-1} minus l0, P_0 and Q_q
    weighted q-1, P_q weighted q."""
    cfg = line_config(k, q)
    l0_set = set(cfg.l0)
    mults: dict[tuple[int, ...], int] = {}
    for line in cfg.lines[: q - 1]:
        for P in line:
            if P not in l0_set:
                mults[P] = 1
    for special, weight in ((cfg.arc[0], q - 1), (cfg.l0[-1], q - 1), (cfg.arc[q], q)):
        if special in mults:
            raise ConfigDegenerate(f"special point {special} collides with a line point")
        mults[special] = weight
    return PointMultiset(field(q), k - 1, mults, meta=_config_meta(cfg, "base2"))


def _gate_dimension(k: int, allow_experimental: bool, what: str) -> None:
    if k >= 6:
        return
    if k == 5 and allow_experimental:
        return
    if k == 5:
        raise OutOfScope(
            f"{what} is only proven for k >= 6; pass allow_experimental to try k=5 "
            "with every claim checked at runtime"
        )
    raise OutOfScope(f"{what} needs k >= 6, got {k}")


def _check_q_point_clear(base: PointMultiset, q_point) -> None:
    # adding Q with weight q keeps n-d only if no maximal hyperplane holds Q
    F = base.field
    mvec = base.hyperplane_mults()
    top = int(mvec.max())
    pts = pg.enumerate_points(F, base.r)
    for idx in (mvec == top).nonzero()[0]:
        if pg.incident(F, q_point, pts[int(idx)]):
            raise ConfigDegenerate(
                "a maximal-multiplicity hyperplane contains the extra point Q"
            )


def _verified(M: PointMultiset, n: int, d: int, q: int, spec_index: int, spec_count: int) -> PointMultiset:
    params = code_params(M)
    if (params.n, params.d) != (n, d):
        raise ParamMismatch(
            f"built [{params.n},{params.k},{params.d}]_{q}, wanted [{n},{M.k},{d}]_{q}"
        )
    if not is_divisible(M, q):
        raise ParamMismatch(f"weights are not all divisible by {q}")
    got = hyperplane_spectrum(M).get(spec_index, 0)
    if got != spec_count:
        raise SpectrumMismatch(
            f"a_{spec_index} = {got}, expected {spec_count}"
        )
    return M


def code_c1(k: int, q: int, allow_experimental: bool = False) -> PointMultiset:
    """[q^2+2q-1, k, q^2-(k-4)q]_q built by adding Q with weight q to
    base_code_1; the count of maximal hyperplanes must equal
    C(q, k-4) + C(q, k-3)."""
    _gate_dimension(k, allow_experimental, "code_c1")
    base = base_code_1(k, q)
    q_point = tuple(base.meta["construction"]["q_point"])
    _check_q_point_clear(base, q_point)
    mults = dict(base.mults)
    mults[q_point] = q
    meta = _config_meta_from(base, "c1")
    M = PointMultiset(base.field, base.r, mults, meta=meta)
    return _verified(
        M,
        n=q * q + 2 * q - 1,
        d=q * q - (k - 4) * q,
        q=q,
        spec_index=(k - 2) * q - 1,
        spec_count=_choose(q, k - 4) + _choose(q, k - 3),
    )


def code_c2(k: int, q: int, allow_experimental: bool = False) -> PointMultiset:
    """[q^2+3q-2, k, q^2-(k-4)q]_q built by adding Q with weight q to
    base_code_2; the count of maximal hyperplanes must equal
    C(q-1, k-3) + 2*C(q-1, k-4) + C(q-1, k-5)."""
    _gate_dimension(k, allow_experimental, "code_c2")
    base = base_code_2(k, q)
    q_point = tuple(base.meta["construction"]["q_point"])
    _check_q_point_clear(base, q_point)
    mults = dict(base.mults)
    mults[q_point] = q
    meta = _config_meta_from(base, "c2")
    M = PointMultiset(base.field, base.r, mults, meta=meta)
    return _verified(
        M,
        n=q * q + 3 * q - 2,
        d=q * q - (k - 4) * q,
        q=q,
        spec_index=(k - 1) * q - 2,
        spec_count=_choose(q - 1, k - 3) + 2 * _choose(q - 1, k - 4) + _choose(q - 1, k - 5),
    )
