"""Code transformations: projective dual and geometric puncturing.

The dual sends a hyperplane of multiplicity n-d-j*m to a point of the dual
space with multiplicity j (coefficient vectors and dual points share one
normal form, so the mapping is the identity on coordinates).  The result
is t-divisible with t = q^(k-2)/m, has n* = n*t*q - (d/m)*theta_{k-1} and
d* = ((n-d)q - n)*t, and its spectrum mirrors the multiplicity profile of
the input: a*_{n*-d*-j*t} equals the number of input j-points.  All of
that is recomputed and enforced here, never assumed.

Puncturing removes one unit of multiplicity from every point of a flat
that sits inside the support (a t-flat removal costs theta_t in length and
at most q^t in distance), or from a single point.  Repeated line removals
need pairwise disjoint lines inside the support; find_disjoint_lines runs
a deterministic lexicographic backtracking search, by default inside the
dual hyperplane recorded by the construction provenance.
"""

from __future__ import annotations

from . import pg
from .errors import (
    DistanceTooSmall,
    DivisibilityViolated,
    FlatNotInSupport,
    IntersectionNonempty,
    NotEnoughLines,
    NotFullRank,
    NoZeroPoint,
    ParamMismatch,
    PointNotInSupport,
    RankLost,
)
from .mcode import PointMultiset, code_params, hyperplane_spectrum


def _is_power_of(m: int, p: int) -> int | None:
    e = 0
    while m % p == 0 and m > 1:
        m //= p
        e += 1
    return e if m == 1 else None


def projective_dual(M: PointMultiset, m: int) -> PointMultiset:
    """The dual code on PG(k-1, q)*, certified against the closed forms."""
    F = M.field
    k, q = M.k, M.q
    params = code_params(M)
    n, d = params.n, params.d

    exponent = _is_power_of(m, F.p) if m > 1 else None
    if exponent is None or not 1 <= exponent <= F.h * (k - 2):
        raise DivisibilityViolated(
            f"divisor {m} is not p^r with 1 <= r <= h(k-2) for q = {q}"
        )
    if params.divisor % m:
        raise DivisibilityViolated(f"code is not {m}-divisible (divisor {params.divisor})")
    if params.lam[0] == 0:
        raise NoZeroPoint("every point of the ambient space carries multiplicity")

    mvec = M.hyperplane_mults()
    points = pg.enumerate_points(F, M.r)
    nd = n - d
    low = [points[int(i)] for i in (mvec < nd).nonzero()[0]]
    if pg.rank(F, low, stop_at=k) < k:
        raise IntersectionNonempty(
            "hyperplanes below maximal multiplicity share a common point"
        )

    t = q ** (k - 2) // m
    dual_mults: dict[tuple[int, ...], int] = {}
    for idx, mh in enumerate(mvec):
        j = (nd - int(mh)) // m
        if j > 0:
            dual_mults[points[idx]] = j

    meta: dict = {"transform": {"op": "dual", "m": m, "t": t}}
    construction = M.meta.get("construction")
    if construction:
        meta["construction"] = construction
        # all zero-multiplicity dual points lie on the dual of l0, which
        # sits inside the dual hyperplane of any point of l0; recording
        # that hyperplane gives the skew-line search a region where
        # success is guaranteed for up to q-1 lines
        meta["skew_region"] = list(construction["l0"][1])
        meta["transform"]["source_family"] = construction.get("family")
    dual = PointMultiset(F, M.r, dual_mults, meta=meta)

    dparams = code_params(dual)
    n_star = n * t * q - (d // m) * pg.theta(k - 1, q)
    d_star = (nd * q - n) * t
    if (dparams.n, dparams.d) != (n_star, d_star):
        raise ParamMismatch(
            f"dual is [{dparams.n},{k},{dparams.d}]_{q}, closed forms give "
            f"[{n_star},{k},{d_star}]_{q}"
        )
    if dparams.divisor % t:
        raise ParamMismatch(f"dual divisor {dparams.divisor} is not a multiple of {t}")
    expected = {
        n_star - d_star - j * t: lam
        for j, lam in enumerate(params.lam)
        if lam
    }
    if hyperplane_spectrum(dual) != expected:
        raise ParamMismatch("dual spectrum does not mirror the input multiplicity profile")
    return dual


def _carried_meta(M: PointMultiset, step: dict) -> dict:
    meta = {k: v for k, v in M.meta.items() if k in ("construction", "skew_region")}
    meta["history"] = list(M.meta.get("history", [])) + [step]
    return meta


def puncture_flat(M: PointMultiset, flat: pg.Flat) -> PointMultiset:
    """Remove one unit of multiplicity from every point of the flat."""
    F = M.field
    pts = pg.flat_points(F, flat)
    if any(M.mults.get(P, 0) < 1 for P in pts):
        raise FlatNotInSupport("the flat has a point with multiplicity 0")
    params = code_params(M)
    t = flat.dim
    if params.d <= F.q**t:
        raise DistanceTooSmall(f"need d > q^{t} = {F.q ** t}, have d = {params.d}")
    mults = dict(M.mults)
    for P in pts:
        mults[P] -= 1
    step = {"op": "puncture_flat", "t": t, "points": [list(P) for P in pts]}
    out = PointMultiset(F, M.r, mults, meta=_carried_meta(M, step))
    try:
        new = code_params(out)
    except NotFullRank as exc:
        raise RankLost("support no longer spans after flat removal") from exc
    if new.n != params.n - pg.theta(t, F.q) or new.d < params.d - F.q**t:
        raise ParamMismatch(
            f"flat removal gave [{new.n},{new.k},{new.d}], violating the lower bound"
        )
    return out


def puncture_point(M: PointMultiset, P) -> PointMultiset:
    """Remove one unit of multiplicity from a single point."""
    F = M.field
    P = pg.normalize_point(F, P)
    if M.mults.get(P, 0) < 1:
        raise PointNotInSupport(f"{P} has multiplicity 0")
    params = code_params(M)
    if params.d <= 1:
        raise DistanceTooSmall("need d > 1 to puncture a point")
    mults = dict(M.mults)
    mults[P] -= 1
    step = {"op": "puncture_point", "point": list(P)}
    out = PointMultiset(F, M.r, mults, meta=_carried_meta(M, step))
    try:
        new = code_params(out)
    except NotFullRank as exc:
        raise RankLost("support no longer spans after point removal") from exc
    if new.n != params.n - 1 or new.d not in (params.d - 1, params.d):
        raise ParamMismatch(
            f"point removal gave [{new.n},{new.k},{new.d}] from [{params.n},{params.k},{params.d}]"
        )
    return out


def _iter_candidate_lines(F, region_support, support_set):
    """Lines whose q+1 points all lie in the support, in lexicographic
    order, each generated once at its smallest point."""
    for i, P in enumerate(region_support):
        covered: set[tuple[int, ...]] = set()
        for R in region_support[i + 1 :]:
            if R in covered:
                continue
            pts = pg.line_points_through(F, P, R)
            covered.update(pts)
            key = sorted(pts, key=pg.point_key)
            if key[0] != P:
                continue  # generated at its own anchor instead
            if all(pt in support_set for pt in pts):
                yield tuple(key)


def find_disjoint_lines(
    M: PointMultiset, count: int, within: pg.Flat | None = None
) -> list[pg.Flat]:
    """Pairwise disjoint lines with every point in the support.

    Deterministic: candidates are enumerated in lexicographic order and a
    depth-first search returns the first feasible combination, pulling
    candidates lazily so small requests stop early.  When `within` is
    omitted the search region defaults to the hyperplane recorded in the
    construction provenance, else the whole space.
    """
    if count < 1:
        raise ValueError("need a positive number of lines")
    F = M.field
    if within is None and "skew_region" in M.meta:
        within = pg.hyperplane_flat(F, tuple(M.meta["skew_region"]))
    if within is not None:
        pool = pg.flat_points(F, within)
    else:
        pool = list(pg.enumerate_points(F, M.r))
    support_set = set(M.support)
    region_support = [P for P in pool if P in support_set]
    per_line = F.q + 1
    if count * per_line > len(region_support):
        raise NotEnoughLines(
            f"{count} disjoint lines need {count * per_line} support points, "
            f"the region has {len(region_support)}"
        )

    lines: list[tuple[tuple[int, ...], ...]] = []
    feeder = _iter_candidate_lines(F, region_support, support_set)
    exhausted = False

    def line_at(idx: int):
        nonlocal exhausted
        while len(lines) <= idx and not exhausted:
            nxt = next(feeder, None)
            if nxt is None:
                exhausted = True
            else:
                lines.append(nxt)
        return lines[idx] if idx < len(lines) else None

    chosen: list[tuple[tuple[int, ...], ...]] = []
    used: set[tuple[int, ...]] = set()

    def extend(start: int) -> bool:
        if len(chosen) == count:
            return True
        if (count - len(chosen)) * per_line > len(region_support) - len(used):
            return False
        idx = start
        while (line := line_at(idx)) is not None:
            if used.isdisjoint(line):
                chosen.append(line)
                used.update(line)
                if extend(idx + 1):
                    return True
                chosen.pop()
                used.difference_update(line)
            idx += 1
        return False

    if not extend(0):
        raise NotEnoughLines(
            f"fewer than {count} pairwise disjoint support lines exist in the region"
        )
    return [pg.span(F, line[:2]) for line in chosen]
