"""Kobayashi distance, infinitesimal metric, and hyperbolic length for every
model-domain kind.

Routing:

* disc / strip / half-plane / ball / polydisc: closed forms;
* punctured disc / annulus: verified finite search over the deck lattice of
  the exponential covering from the half-plane / strip;
* tube over a convex base: certified sandwich (slab lower bound, analytic
  disc upper bound);
* Reinhardt-log domains: deck search over the exp covering from the tube;
* scaled ellipsoids: exact ball formula when eps = 0, inscribed/
  circumscribed ball sandwich otherwise.

Every function is pure; results for sandwich kinds carry their bracket gap
instead of pretending to be exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed_forms as cf
from .domains import (Annulus, LeftHalfPlane, ModelDomain, NonInteriorError, Polydisc,
                      PuncturedDisc, ReinhardtLog, ScaledEllipsoid, Strip, TubeOverBase,
                      UnitBall, UnitDisc, base_support, dim, require_interior)
from .quadrature import adaptive_simpson
from .tube import tube_distance_bounds, tube_metric_bounds

TWO_PI = 2.0 * math.pi
DECK_ENUM_CAP = 200_000


class DeckBoundError(RuntimeError):
    """The auto-bound rule could not certify the deck search."""


class SandwichGapError(RuntimeError):
    """A sandwich bracket exceeded the caller's gap tolerance."""


@dataclass(frozen=True)
class DistanceValue:
    """A distance together with how it was obtained.

    method is one of 'closed-form', 'deck-infimum', 'sandwich'; for
    sandwich results value is the midpoint of [lower, upper] and gap the
    bracket width (0 for the exact methods).
    """

    value: float
    method: str
    gap: float = 0.0
    deck_index: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.value < 0.0 or self.gap < 0.0:
            raise ValueError("distance and gap must be nonnegative")

    @property
    def lower(self) -> float:
        return self.value - 0.5 * self.gap

    @property
    def upper(self) -> float:
        return self.value + 0.5 * self.gap


def covering_of(domain: ModelDomain) -> ModelDomain:
    """The exp-covering space used for the deck-infimum kinds."""
    if isinstance(domain, PuncturedDisc):
        return LeftHalfPlane()
    if isinstance(domain, Annulus):
        return Strip(domain.R)
    if isinstance(domain, ReinhardtLog):
        return TubeOverBase(domain.base)
    raise ValueError(f"{domain!r} has no registered covering")


def _cover_eval(cover: ModelDomain):
    """Distance evaluator on the cover returning a (lower, upper) pair.

    `cap` is the best upper bound found so far: translates whose cheap
    lower bound already exceeds it skip the expensive disc competitors
    and report an infinite upper (they can never be the minimizer).
    """
    if isinstance(cover, LeftHalfPlane):
        def ev(u, v, cap=None):
            d = cf.halfplane_distance(complex(u[0]), complex(v[0]))
            return d, d
        return ev
    if isinstance(cover, Strip):
        a = cover.halfwidth

        def ev(u, v, cap=None):
            d = cf.strip_distance(a, complex(u[0]), complex(v[0]))
            return d, d
        return ev
    if isinstance(cover, TubeOverBase):
        from .tube import caratheodory_lower, lempert_upper

        def ev(u, v, cap=None):
            lo = caratheodory_lower(cover.base, u, v)
            if cap is not None and lo > cap:
                return lo, math.inf
            hi = lempert_upper(cover.base, u, v, good_enough=lo * (1.0 + 1e-12) + 1e-14)
            return lo, max(lo, hi)
        return ev
    raise ValueError(f"{cover!r} is not a supported covering")


def _coordinate_halfwidths(cover: ModelDomain) -> np.ndarray:
    if isinstance(cover, LeftHalfPlane):
        return np.array([math.inf])  # handled separately
    if isinstance(cover, Strip):
        return np.array([cover.halfwidth])
    if isinstance(cover, TubeOverBase):
        n = dim(cover)
        eye = np.eye(n)
        return np.array([0.5 * (base_support(cover.base, eye[j]) + base_support(cover.base, -eye[j]))
                         for j in range(n)])
    raise ValueError(f"{cover!r} is not a supported covering")


def _offset_lower_bound(cover: ModelDomain, u: np.ndarray, v: np.ndarray,
                        halfwidths: np.ndarray, nu: np.ndarray) -> float:
    """Cheap lower bound for the cover distance to v + 2*pi*i*nu.

    Strip-like covers: each coordinate slab gives pi * |dy_j| / (4 a_j);
    the half-plane uses arcsinh of the vertical gap.
    """
    dy = u.imag - v.imag - TWO_PI * nu
    if isinstance(cover, LeftHalfPlane):
        xu, xv = -u[0].real, -v[0].real
        return math.asinh(abs(dy[0]) / (2.0 * math.sqrt(xu * xv)))
    return float(np.max(math.pi * np.abs(dy) / (4.0 * halfwidths)))


def _offset_threshold(cover: ModelDomain, u: np.ndarray, v: np.ndarray,
                      halfwidths: np.ndarray, best: float) -> np.ndarray:
    """Per-coordinate |dy_j| beyond which the cheap bound exceeds best."""
    if isinstance(cover, LeftHalfPlane):
        xu, xv = -u[0].real, -v[0].real
        return np.array([2.0 * math.sqrt(xu * xv) * math.sinh(best)])
    return 4.0 * halfwidths * best / math.pi


def deck_infimum(cover: ModelDomain, u, v, lattice_bound: int | None = None
                 ) -> tuple[DistanceValue, tuple[int, ...]]:
    """Minimum over deck translates v + 2*pi*i*nu of the cover distance.

    With lattice_bound=None the search radius is grown until the slab
    lower bound at the next shell provably exceeds the best value found,
    so the returned minimum is attained and certified.  An explicit
    lattice_bound is honored but still checked; failure to certify raises
    DeckBoundError with the remaining gap.
    """
    u = require_interior(cover, u)
    v = require_interior(cover, v)
    n = dim(cover)
    ev = _cover_eval(cover)
    halfwidths = _coordinate_halfwidths(cover)
    dy = u.imag - v.imag
    nu0 = np.round(dy / TWO_PI).astype(int)
    lo0, hi0 = ev(u, v + TWO_PI * 1j * nu0)
    best_hi = hi0
    best_lo = lo0
    best_nu = tuple(int(k) for k in nu0)
    if not math.isfinite(best_hi):
        raise DeckBoundError("initial deck translate has no finite upper bound")
    evaluated = {best_nu}

    def bounds_for(best: float) -> np.ndarray:
        thr = _offset_threshold(cover, u, v, halfwidths, best)
        return np.floor((np.abs(dy) + thr) / TWO_PI).astype(int) + 1

    for _ in range(64):
        limit = bounds_for(best_hi) if lattice_bound is None else np.full(n, lattice_bound, dtype=int)
        total = int(np.prod(2 * limit + 1))
        if total > DECK_ENUM_CAP:
            raise DeckBoundError(f"deck enumeration needs {total} lattice points")
        improved = False
        for nu in _lattice_box(limit):
            if nu in evaluated:
                continue
            arr = np.asarray(nu)
            if _offset_lower_bound(cover, u, v, halfwidths, arr) > best_hi:
                continue
            lo, hi = ev(u, v + TWO_PI * 1j * arr, cap=best_hi)
            evaluated.add(nu)
            best_lo = min(best_lo, lo)
            if hi < best_hi:
                best_hi = hi
                best_nu = nu
                improved = True
        if lattice_bound is not None:
            needed = bounds_for(best_hi)
            if np.any(needed > lattice_bound):
                gap = float(np.max(needed - lattice_bound))
                raise DeckBoundError(
                    f"lattice bound {lattice_bound} cannot certify the minimum "
                    f"(rule wants {needed.tolist()}; shortfall {gap})")
            break
        if not improved and np.all(bounds_for(best_hi) <= limit):
            break
    value = 0.5 * (best_lo + best_hi)
    gap = max(0.0, best_hi - best_lo)
    method = "deck-infimum" if gap == 0.0 else "sandwich"
    return DistanceValue(value, method, gap, best_nu), best_nu


def _lattice_box(limit: np.ndarray):
    """Lattice points of prod [-B_j, B_j], lexicographically sorted."""
    import itertools

    return itertools.product(*[range(-int(b), int(b) + 1) for b in limit])


def _canonical_order(z: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # exact symmetry by construction: evaluate every pair in a fixed order
    # (vectorized complex arithmetic is not bitwise conjugation-symmetric)
    kz = tuple((c.real, c.imag) for c in z)
    kw = tuple((c.real, c.imag) for c in w)
    return (w, z) if kw < kz else (z, w)


def distance(domain: ModelDomain, z, w, gap_tol: float | None = None,
             lattice_bound: int | None = None) -> DistanceValue:
    """Kobayashi distance between interior points of a model domain.

    Symmetric in (z, w) exactly: the pair is evaluated in a canonical
    order, so distance(D, z, w) and distance(D, w, z) are bit-identical.
    """
    z = require_interior(domain, z)
    w = require_interior(domain, w)
    z, w = _canonical_order(z, w)
    if isinstance(domain, UnitDisc):
        return DistanceValue(cf.disc_distance(complex(z[0]), complex(w[0])), "closed-form")
    if isinstance(domain, Strip):
        return DistanceValue(cf.strip_distance(domain.halfwidth, complex(z[0]), complex(w[0])),
                             "closed-form")
    if isinstance(domain, LeftHalfPlane):
        return DistanceValue(cf.halfplane_distance(complex(z[0]), complex(w[0])), "closed-form")
    if isinstance(domain, UnitBall):
        return DistanceValue(cf.ball_distance(z, w), "closed-form")
    if isinstance(domain, Polydisc):
        return DistanceValue(cf.polydisc_distance(z, w), "closed-form")
    if isinstance(domain, (PuncturedDisc, Annulus, ReinhardtLog)):
        cover = covering_of(domain)
        val, _ = deck_infimum(cover, _principal_log(z), _principal_log(w), lattice_bound)
        _check_gap(val, gap_tol)
        return val
    if isinstance(domain, TubeOverBase):
        lo, hi = tube_distance_bounds(domain.base, z, w)
        val = DistanceValue(0.5 * (lo + hi), "sandwich", hi - lo)
        _check_gap(val, gap_tol)
        return val
    if isinstance(domain, ScaledEllipsoid):
        if domain.eps == 0.0:
            return DistanceValue(cf.ball_distance(z, w), "closed-form")
        from .scaling import inscribed_radius

        r_in = inscribed_radius(domain.eps, domain.t, domain.dim)
        if float(np.linalg.norm(z)) >= r_in or float(np.linalg.norm(w)) >= r_in:
            raise NonInteriorError(
                f"perturbed-ellipsoid distances are bracketed only inside the "
                f"inscribed ball of radius {r_in:.6f}")
        lo = cf.ball_distance(z, w)          # Omega_t inside the unit ball
        hi = cf.ball_distance(z / r_in, w / r_in)
        hi = max(hi, lo)
        val = DistanceValue(0.5 * (lo + hi), "sandwich", hi - lo)
        _check_gap(val, gap_tol)
        return val
    raise ValueError(f"no metric engine for {domain!r}")


def _check_gap(val: DistanceValue, gap_tol: float | None):
    if gap_tol is not None and val.gap > gap_tol:
        raise SandwichGapError(f"sandwich gap {val.gap:.3e} exceeds tolerance {gap_tol:.3e}")


def _principal_log(z: np.ndarray) -> np.ndarray:
    return np.log(np.abs(z)) + 1j * np.angle(z)


def infinitesimal_metric(domain: ModelDomain, z, v) -> float:
    """Infinitesimal Kobayashi metric k(z; v); degree-1 homogeneous in v.

    Exact for the closed-form and covered kinds; tube/Reinhardt/perturbed
    ellipsoid values are bracket midpoints (use `distance` when the gap
    matters).
    """
    z = require_interior(domain, z)
    v = np.atleast_1d(np.asarray(v, dtype=complex))
    if v.size != dim(domain):
        raise ValueError("tangent vector dimension mismatch")
    if isinstance(domain, UnitDisc):
        return cf.disc_density(complex(z[0]), complex(v[0]))
    if isinstance(domain, Strip):
        return cf.strip_density(domain.halfwidth, complex(z[0]), complex(v[0]))
    if isinstance(domain, LeftHalfPlane):
        return cf.halfplane_density(complex(z[0]), complex(v[0]))
    if isinstance(domain, UnitBall):
        return cf.ball_density(z, v)
    if isinstance(domain, Polydisc):
        return cf.polydisc_density(z, v)
    if isinstance(domain, PuncturedDisc):
        return cf.punctured_density(complex(z[0]), complex(v[0]))
    if isinstance(domain, Annulus):
        return cf.annulus_density(domain.R, complex(z[0]), complex(v[0]))
    if isinstance(domain, TubeOverBase):
        lo, hi = tube_metric_bounds(domain.base, z, v)
        return 0.5 * (lo + hi)
    if isinstance(domain, ReinhardtLog):
        # exp: tube -> Reinhardt is a local isometry; pull back along it
        lo, hi = tube_metric_bounds(domain.base, _principal_log(z), v / z)
        return 0.5 * (lo + hi)
    if isinstance(domain, ScaledEllipsoid):
        if domain.eps == 0.0:
            return cf.ball_density(z, v)
        from .scaling import inscribed_radius

        r_in = inscribed_radius(domain.eps, domain.t, domain.dim)
        if float(np.linalg.norm(z)) >= r_in:
            raise NonInteriorError(
                f"perturbed-ellipsoid metric is bracketed only inside the "
                f"inscribed ball of radius {r_in:.6f}")
        lo = cf.ball_density(z, v)
        hi = cf.ball_density(z / r_in, v / r_in)
        return 0.5 * (lo + max(lo, hi))
    raise ValueError(f"no metric engine for {domain!r}")


def hyperbolic_length(domain: ModelDomain, curve, s: float, t: float,
                      tol: float = 1e-8, fd_step: float = 1e-6) -> float:
    """Length int_s^t k(curve(u); curve'(u)) du by adaptive Simpson.

    `curve` is a GeodesicCurve or a plain sampler u -> point; without an
    analytic derivative a central difference with step `fd_step` is used.
    Raises NonInteriorError if the curve leaves the domain on [s, t].
    """
    if s > t:
        raise ValueError("need s <= t")
    if s == t:
        return 0.0
    sample = getattr(curve, "sample", curve)
    deriv = getattr(curve, "derivative", None)
    if deriv is None:
        def deriv(u):
            return (np.asarray(sample(u + fd_step)) - np.asarray(sample(u - fd_step))) / (2.0 * fd_step)

    def integrand(u: float) -> float:
        p = sample(u)
        require_interior(domain, p)
        return infinitesimal_metric(domain, p, deriv(u))

    return adaptive_simpson(integrand, s, t, tol=tol)
