"""Two-sided Kobayashi bounds for tube domains over bounded convex bases.

The lower bound projects the tube onto supporting slabs (strips) and takes
the best strip distance; every holomorphic projection contracts, so this
never exceeds the true distance.  The upper bound evaluates explicit
analytic-disc competitors: affine discs, the chord-slice disc for pairs
with equal imaginary parts, chained affine discs for far pairs, and the
exact product formula over box bases.  The pair (lower, upper) brackets
the true distance; on segments joining antipodal boundary points of the
base the two sides coincide up to rounding.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from ._sampling import sphere_directions
from .closed_forms import stable_arctanh, strip_distance_offset, strip_density_offset
from .domains import (Box, ConvexBase, EuclideanBall, LinearImage, Polytope, base_dim,
                      base_facet_normals, base_membership, base_support, chord_interval)

DIRECTIONS_PER_DIM = 64


class TubeMetricError(RuntimeError):
    """No admissible competitor found; should not happen for convex tubes."""


def _normalize_rows(rows: list[np.ndarray]) -> list[np.ndarray]:
    out = []
    for r in rows:
        n = float(np.linalg.norm(r))
        if n > 1e-14:
            out.append(r / n)
    return out


@functools.lru_cache(maxsize=64)
def _base_direction_block(base: ConvexBase) -> tuple:
    """Cached (directions, supports+, supports-) for the base-only sweep."""
    n = base_dim(base)
    rows: list[np.ndarray] = []
    if isinstance(base, Polytope):
        rows.extend(_normalize_rows(base_facet_normals(base)))
    else:
        rows.extend(list(sphere_directions(DIRECTIONS_PER_DIM * n, n)))
        rows.extend(_normalize_rows(base_facet_normals(base)))
    eye = np.eye(n)
    rows.extend(eye[j] for j in range(n))
    rows.extend(-eye[j] for j in range(n))
    dirs = np.vstack(rows)
    his = support_batch(base, dirs)
    los = -support_batch(base, -dirs)
    dirs.setflags(write=False)
    his.setflags(write=False)
    los.setflags(write=False)
    return dirs, his, los


def direction_set(base: ConvexBase, extras: tuple = ()) -> np.ndarray:
    """Unit directions for the slab sweep: a deterministic spread of
    64*dim, the coordinate axes, any facet normals, and caller extras."""
    dirs, _, _ = _base_direction_block(base)
    ex = _normalize_rows([np.asarray(e, dtype=float) for e in extras])
    if not ex:
        return dirs
    return np.vstack([dirs, np.vstack(ex)])


def support_batch(base: ConvexBase, dirs: np.ndarray) -> np.ndarray:
    if isinstance(base, EuclideanBall):
        return dirs @ np.asarray(base.center) + base.radius * np.linalg.norm(dirs, axis=1)
    if isinstance(base, Box):
        lo = np.asarray(base.lo)
        hi = np.asarray(base.hi)
        return np.sum(np.where(dirs >= 0.0, dirs * hi, dirs * lo), axis=1)
    if isinstance(base, LinearImage):
        a = np.asarray(base.matrix, dtype=float)
        return support_batch(base.base, dirs @ a)
    return np.array([base_support(base, d) for d in dirs])


def _strip_distances_vec(lo: np.ndarray, hi: np.ndarray, pu: np.ndarray, pv: np.ndarray) -> np.ndarray:
    """Vectorized strip distance in {lo_i < Re < hi_i} between pu_i and pv_i."""
    a = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x1 = pu.real - mid
    x2 = pv.real - mid
    dy = pu.imag - pv.imag
    p = math.pi * dy / (4.0 * a)
    q = math.pi * (x1 - x2) / (4.0 * a)
    c = np.cos(math.pi * x1 / (2.0 * a)) * np.cos(math.pi * x2 / (2.0 * a))
    c = np.maximum(c, 1e-300)
    ap = np.abs(p)
    out = np.empty_like(a)
    big = ap > 350.0
    if np.any(big):
        out[big] = ap[big] - 0.5 * np.log(c[big])
    small = ~big
    s = np.sqrt(np.sinh(p[small]) ** 2 + np.sin(q[small]) ** 2)
    out[small] = np.arcsinh(s / np.sqrt(c[small]))
    return out


def caratheodory_lower(base: ConvexBase, u, v, extras: tuple = ()) -> float:
    """Supporting-slab lower bound for the tube distance.

    Sweeps the direction set plus the real/imaginary parts of v - u and
    returns the largest strip distance among the slab projections.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if not base_membership(base, u.real) or not base_membership(base, v.real):
        raise ValueError("points must lie in the open tube")
    w = v - u
    dirs0, his0, los0 = _base_direction_block(base)
    ex = _normalize_rows([w.real, w.imag] + [np.asarray(e, dtype=float) for e in extras])
    if ex:
        ex_dirs = np.vstack(ex)
        dirs = np.vstack([dirs0, ex_dirs])
        his = np.concatenate([his0, support_batch(base, ex_dirs)])
        los = np.concatenate([los0, -support_batch(base, -ex_dirs)])
    else:
        dirs, his, los = dirs0, his0, los0
    pu = dirs @ u
    pv = dirs @ v
    # interior points project strictly inside every slab
    vals = _strip_distances_vec(los, his, pu, pv)
    return float(np.max(vals))


def _ellipse_extent(a: np.ndarray, b: np.ndarray, d: np.ndarray) -> float:
    """sup over alpha^2 + beta^2 <= 1 of <d, alpha a + beta b>."""
    return math.hypot(float(np.dot(d, a)), float(np.dot(d, b)))


def affine_disc_tau(base: ConvexBase, anchor: np.ndarray, w: np.ndarray) -> float:
    """Smallest tau with Re(anchor) + {Re(lam w)/tau : |lam| <= 1} inside base.

    The affine disc lam -> anchor + lam w / tau is then admissible; tau is
    exact for boxes, polytopes and their linear images, and Newton-solved
    (with a verified pad) for ball bases.
    """
    x = np.asarray(anchor, dtype=float)
    a = np.asarray(w, dtype=complex).real.astype(float)
    b = np.asarray(w, dtype=complex).imag.astype(float)
    if isinstance(base, Box):
        lo = np.asarray(base.lo)
        hi = np.asarray(base.hi)
        taus = [math.hypot(aj, bj) / min(hj - xj, xj - lj)
                for aj, bj, lj, hj, xj in zip(a, b, lo, hi, x)]
        return max(taus)
    if isinstance(base, Polytope):
        taus = []
        for n_i, b_i in zip(base.normals, base.offsets):
            n_i = np.asarray(n_i, dtype=float)
            slack = b_i - float(np.dot(n_i, x))
            taus.append(_ellipse_extent(a, b, n_i) / slack)
        return max(taus)
    if isinstance(base, LinearImage):
        inv = np.linalg.inv(np.asarray(base.matrix, dtype=float))
        return affine_disc_tau(base.base, inv @ x, inv @ a + 1j * (inv @ b))
    if isinstance(base, EuclideanBall):
        return _ball_disc_tau(base, x, a, b)
    raise ValueError(f"unsupported base {base!r}")


def _ellipse_farthest(a: np.ndarray, b: np.ndarray, m: np.ndarray) -> tuple[float, np.ndarray]:
    """max over theta of |cos(th) a + sin(th) b + m| and the maximizer point.

    Writing x = (cos th, sin th), the square is x^T S x + 2 g^T x + |m|^2
    with S = [a b]^T [a b]; the circle-constrained maximizer solves the
    trust-region secular equation sum g_i^2/(lam - s_i)^2 = 1 for
    lam > s_max in the eigenbasis of S.  All scalar 2x2 arithmetic.
    """
    s11 = float(np.dot(a, a))
    s22 = float(np.dot(b, b))
    s12 = float(np.dot(a, b))
    g1 = float(np.dot(a, m))
    g2 = float(np.dot(b, m))
    m2 = float(np.dot(m, m))
    # eigendecomposition of [[s11, s12], [s12, s22]]
    half_tr = 0.5 * (s11 + s22)
    disc = math.sqrt(max(0.0, (0.5 * (s11 - s22)) ** 2 + s12 * s12))
    e_hi, e_lo = half_tr + disc, half_tr - disc
    # top eigenvector from whichever row gives the larger residual vector
    cand1 = (s12, e_hi - s11)
    cand2 = (e_hi - s22, s12)
    n1 = math.hypot(*cand1)
    n2 = math.hypot(*cand2)
    if max(n1, n2) < 1e-300:
        c, s = (1.0, 0.0) if s11 >= s22 else (0.0, 1.0)
    elif n1 >= n2:
        c, s = cand1[0] / n1, cand1[1] / n1
    else:
        c, s = cand2[0] / n2, cand2[1] / n2
    # eigvec for e_hi is (c, s); for e_lo it's (-s, c)
    gt1 = c * g1 + s * g2
    gt2 = -s * g1 + c * g2
    gnorm = math.hypot(gt1, gt2)
    if gnorm <= 1e-14 * max(1.0, abs(e_hi)):
        # linear term below rounding: quadratic-only maximizer
        xt1, xt2 = 1.0, 0.0
    elif abs(gt1) < 1e-14 * gnorm and abs(gt2) / max(e_hi - e_lo, 1e-300) <= 1.0:
        # hard case: free component along the top eigenvector
        xt2 = gt2 / max(e_hi - e_lo, 1e-300)
        xt1 = math.sqrt(max(0.0, 1.0 - xt2 * xt2))
    else:
        lo = e_hi + 0.5 * abs(gt1) if abs(gt1) > 0 else e_hi + 1e-18 * max(1.0, abs(e_hi))
        hi = e_hi + gnorm
        lam = hi
        for _ in range(60):
            d1 = lam - e_hi
            d2 = lam - e_lo
            phi = (gt1 / d1) ** 2 + (gt2 / d2) ** 2
            resid = phi - 1.0
            if abs(resid) < 1e-14:
                break
            if resid > 0.0:
                lo = lam
            else:
                hi = lam
            dphi = -2.0 * (gt1 * gt1 / d1 ** 3 + gt2 * gt2 / d2 ** 3)
            step = lam - resid / dphi if dphi != 0.0 else 0.5 * (lo + hi)
            lam = step if lo < step < hi else 0.5 * (lo + hi)
        xt1 = gt1 / (lam - e_hi)
        xt2 = gt2 / (lam - e_lo)
        nrm = math.hypot(xt1, xt2)
        if nrm > 0:
            xt1, xt2 = xt1 / nrm, xt2 / nrm
    x1 = c * xt1 - s * xt2
    x2 = s * xt1 + c * xt2
    val = (s11 * x1 * x1 + 2.0 * s12 * x1 * x2 + s22 * x2 * x2
           + 2.0 * (g1 * x1 + g2 * x2) + m2)
    # the antipode competes when the linear term is small
    val_neg = (s11 * x1 * x1 + 2.0 * s12 * x1 * x2 + s22 * x2 * x2
               - 2.0 * (g1 * x1 + g2 * x2) + m2)
    if val_neg > val:
        x1, x2, val = -x1, -x2, val_neg
    point = x1 * a + x2 * b + m
    return math.sqrt(max(val, 0.0)), point


def _ball_disc_tau(base: EuclideanBall, x: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    """Smallest tau with max_theta |cos(th) a + sin(th) b + tau m| = tau r.

    Solved by Newton on tau; the derivative of the max is <d*, m> for the
    farthest direction d* (envelope theorem), and |m| < r makes the fixed
    point unique.  The result is padded and verified so the affine disc it
    certifies genuinely stays in the tube.
    """
    m = x - np.asarray(base.center)
    r = base.radius
    if len(base.center) == 1:
        e = math.hypot(a[0], b[0])
        return max(e / (r - m[0]), e / (r + m[0]))
    e0, _ = _ellipse_farthest(a, b, 0.0 * m)
    if e0 == 0.0:
        return 0.0
    tau = e0 / r
    for _ in range(100):
        big_m, point = _ellipse_farthest(a, b, tau * m)
        if big_m <= tau * r * (1.0 + 5e-14):
            break
        norm_pt = float(np.linalg.norm(point))
        slope = float(np.dot(point, m)) / norm_pt if norm_pt > 0 else 0.0
        denom = r - slope
        tau_new = (big_m - tau * slope) / denom if denom > 1e-15 else big_m / r
        tau = max(tau_new, tau * (1.0 + 1e-16))
    tau *= 1.0 + 1e-10
    for _ in range(60):
        big_m, _ = _ellipse_farthest(a, b, tau * m)
        if big_m <= tau * r:
            break
        tau = big_m / r * (1.0 + 1e-12)
    return tau


def _chain_upper(base: ConvexBase, u: np.ndarray, v: np.ndarray,
                 tau_hint: float | None = None) -> float:
    """Upper bound by chaining affine discs along the Euclidean segment.

    Convexity keeps the segment inside the tube, and the Kobayashi
    distance satisfies the triangle inequality, so summing per-leg disc
    bounds is an upper bound for the whole pair.  The disc parameter
    scales roughly linearly in the leg length, so the leg count is chosen
    arithmetically from the whole-pair tau and doubled on failure.
    """
    tau0 = tau_hint if tau_hint is not None else affine_disc_tau(base, u.real, v - u)
    if tau0 < 0.7:
        return stable_arctanh(tau0)
    legs = max(2, int(math.ceil(tau0 / 0.5)))
    for _ in range(8):
        total = 0.0
        ok = True
        pts = [u + (v - u) * (i / legs) for i in range(legs + 1)]
        for p, q in zip(pts, pts[1:]):
            tau = affine_disc_tau(base, p.real, q - p)
            if tau >= 0.95:
                ok = False
                break
            total += stable_arctanh(tau)
        if ok:
            return total
        legs *= 2
    raise TubeMetricError("affine chain failed to refine")


def _cheap_uppers(base: ConvexBase, u: np.ndarray, v: np.ndarray) -> list[float]:
    """Closed-form disc competitors: box product and the chord slice."""
    candidates: list[float] = []
    if isinstance(base, Box):
        # product of strips: the coordinate-wise geodesic disc is exact
        vals = [strip_distance_offset(l, h, complex(a), complex(b))
                for l, h, a, b in zip(base.lo, base.hi, u, v)]
        candidates.append(max(vals))
    if float(np.max(np.abs(u.imag - v.imag))) < 1e-13:
        delta = (v - u).real
        if float(np.linalg.norm(delta)) > 1e-15:
            s_lo, s_hi = chord_interval(base, u.real, delta)
            candidates.append(strip_distance_offset(s_lo, s_hi, 0.0 + 0.0j, 1.0 + 0.0j))
    return candidates


def _vertical_cap(base: ConvexBase, x: np.ndarray, y: np.ndarray) -> float:
    """Upper bound for K(x, x + iy) by chained affine discs.

    Along a vertical segment every point has real part x, so the per-leg
    disc parameter is exactly tau0/legs and one tau evaluation covers the
    whole chain.
    """
    if float(np.linalg.norm(y)) < 1e-300:
        return 0.0
    tau0 = affine_disc_tau(base, x, 1j * y.astype(complex))
    legs = max(1, int(math.ceil(tau0 / 0.5)))
    return legs * stable_arctanh(tau0 / legs)


def _via_real_upper(base: ConvexBase, u: np.ndarray, v: np.ndarray) -> float:
    """Upper bound routing through the real points below u and v:
    vertical descent, chord slice across, vertical ascent."""
    total = _vertical_cap(base, u.real, u.imag) + _vertical_cap(base, v.real, v.imag)
    delta = (v - u).real
    if float(np.linalg.norm(delta)) > 1e-15:
        s_lo, s_hi = chord_interval(base, u.real, delta)
        total += strip_distance_offset(s_lo, s_hi, 0.0 + 0.0j, 1.0 + 0.0j)
    return total


def lempert_upper(base: ConvexBase, u, v, good_enough: float | None = None) -> float:
    """Analytic-disc upper bound for the tube distance (family minimum).

    Competitors, cheapest first: the exact product disc over box bases,
    the chord-slice disc for equal-imaginary pairs, affine discs in both
    orders, and chained affine discs as a convexity fallback.  When
    `good_enough` is given, evaluation stops once a candidate reaches it
    (used to skip the affine solve when a cheap disc is already tight).
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if not base_membership(base, u.real) or not base_membership(base, v.real):
        raise ValueError("points must lie in the open tube")
    if np.array_equal(u, v):
        return 0.0
    candidates = _cheap_uppers(base, u, v)
    if good_enough is not None and candidates and min(candidates) <= good_enough:
        return min(candidates)
    taus = []
    for p, q in ((u, v), (v, u)):
        tau = affine_disc_tau(base, p.real, q - p)
        taus.append(tau)
        if tau < 1.0:
            candidates.append(stable_arctanh(tau))
            if good_enough is not None and candidates[-1] <= good_enough:
                return min(candidates)
    had_disc = len(candidates) > 0
    candidates.append(_via_real_upper(base, u, v))
    if not had_disc and min(taus) < 6.0:
        # mid-range pair with no admissible single disc: the short chain
        # is usually tighter than the via-real route
        candidates.append(_chain_upper(base, u, v, tau_hint=min(taus)))
    return min(candidates)


def tube_distance_bounds(base: ConvexBase, u, v) -> tuple[float, float]:
    """(lower, upper) bracket of the tube Kobayashi distance."""
    lo = caratheodory_lower(base, u, v)
    if base_dim(base) == 1:
        # a 1-d tube IS a strip: the slab projection is a biholomorphism
        return lo, lo
    hi = lempert_upper(base, u, v, good_enough=lo * (1.0 + 1e-12) + 1e-14)
    if hi < lo:
        if hi < lo - 1e-9:
            raise TubeMetricError(f"bracket inverted: lower {lo} > upper {hi}")
        hi = lo
    return lo, hi


def _parallel_scalar(re: np.ndarray, im: np.ndarray) -> tuple[np.ndarray, complex] | None:
    """If v = zeta * delta for a real direction delta, return (delta, zeta)."""
    nr = float(np.linalg.norm(re))
    ni = float(np.linalg.norm(im))
    if nr < 1e-15 and ni < 1e-15:
        return None
    if ni < 1e-15:
        return re / nr, complex(nr)
    if nr < 1e-15:
        return im / ni, complex(0.0, ni)
    cross = re / nr - im / ni
    cross2 = re / nr + im / ni
    if float(np.linalg.norm(cross)) < 1e-12:
        return re / nr, complex(nr, ni)
    if float(np.linalg.norm(cross2)) < 1e-12:
        return re / nr, complex(nr, -ni)
    return None


def tube_metric_bounds(base: ConvexBase, z, v) -> tuple[float, float]:
    """(lower, upper) bracket of the infinitesimal tube metric at z along v."""
    z = np.asarray(z, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if not base_membership(base, z.real):
        raise ValueError("base point must lie in the open tube")
    if float(np.linalg.norm(v)) == 0.0:
        return 0.0, 0.0
    extras = (v.real, v.imag)
    dirs = direction_set(base, extras)
    his = support_batch(base, dirs)
    los = -support_batch(base, -dirs)
    pz = dirs @ z
    pv = dirs @ v
    a = 0.5 * (his - los)
    mid = 0.5 * (his + los)
    dens = (math.pi / (4.0 * a)) * np.abs(pv) / np.cos(math.pi * (pz.real - mid) / (2.0 * a))
    lower = float(np.max(dens))
    if base_dim(base) == 1:
        return lower, lower

    uppers = []
    if isinstance(base, Box):
        vals = [strip_density_offset(l, h, complex(zz), complex(vv))
                for l, h, zz, vv in zip(base.lo, base.hi, z, v)]
        uppers.append(max(vals))
    par = _parallel_scalar(v.real, v.imag)
    if par is not None:
        delta, zeta = par
        s_lo, s_hi = chord_interval(base, z.real, delta)
        uppers.append(abs(zeta) * strip_density_offset(s_lo, s_hi, 0.0 + 0.0j, 1.0 + 0.0j))
    if not uppers or min(uppers) > lower * (1.0 + 1e-12) + 1e-14:
        uppers.append(affine_disc_tau(base, z.real, v))
    upper = min(uppers)
    if upper < lower:
        if upper < lower - 1e-9 * max(1.0, lower):
            raise TubeMetricError("infinitesimal bracket inverted")
        upper = lower
    return lower, upper
