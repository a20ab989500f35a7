"""Model domains and convex bases.

Domain descriptors are small frozen dataclasses; every operation on them is
a pure function, so descriptors are safe to share across workers.  Points
are 1-d complex ndarrays (scalars are accepted at the API edge and lifted).

The available kinds:

==================  =========================================================
UnitDisc            open unit disc in C
PuncturedDisc       unit disc minus the origin
Annulus(R)          1/R < |z| < R, R > 1
Strip(R)            -log R < Re z < log R (covers the annulus via exp)
LeftHalfPlane       Re z < 0 (covers the punctured disc via exp)
UnitBall(n)         Euclidean unit ball of C^n
Polydisc(n)         product of n unit discs
TubeOverBase(base)  {z : Re z in base}, base a bounded convex set in R^n
ReinhardtLog(base)  {z : z_j != 0, log|z| in base} = exp(TubeOverBase(base))
ScaledEllipsoid     A_t^{-1} of the perturbed ball {-1+|z|^2+eps|z-e_1|^4<0}
==================  =========================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mobius import ball_scaling_map

BOUNDARY_TOL = 1e-12


class DomainError(ValueError):
    """Dimension mismatches and malformed descriptors."""


class NonInteriorError(ValueError):
    """A point required to be interior is not."""


def as_point(z) -> np.ndarray:
    """Lift scalars/sequences to a 1-d complex ndarray and validate finiteness."""
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    if arr.ndim != 1 or arr.size < 1:
        raise DomainError("a point must be a scalar or a 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError("point has non-finite coordinates")
    return arr


# ---------------------------------------------------------------------------
# convex bases (log-images of Reinhardt domains, tube bases)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EuclideanBall:
    center: tuple[float, ...]
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError("ball radius must be positive")


@dataclass(frozen=True)
class Box:
    lo: tuple[float, ...]
    hi: tuple[float, ...]

    def __post_init__(self):
        if len(self.lo) != len(self.hi) or any(l >= h for l, h in zip(self.lo, self.hi)):
            raise DomainError("box needs lo < hi coordinatewise")


@dataclass(frozen=True)
class Polytope:
    """Open polytope {x : <n_i, x> < b_i}; an interior point may be supplied."""

    normals: tuple[tuple[float, ...], ...]
    offsets: tuple[float, ...]
    interior: tuple[float, ...] | None = None


@dataclass(frozen=True)
class LinearImage:
    """Exact linear image A(base) of another base, A invertible.

    Membership and support are delegated to the source through A^{-1} and
    A^T, so no facet approximation is involved.
    """

    matrix: tuple[tuple[float, ...], ...]
    base: "ConvexBase"


ConvexBase = EuclideanBall | Box | Polytope | LinearImage


def base_dim(base: ConvexBase) -> int:
    if isinstance(base, EuclideanBall):
        return len(base.center)
    if isinstance(base, Box):
        return len(base.lo)
    if isinstance(base, Polytope):
        return len(base.normals[0])
    if isinstance(base, LinearImage):
        return len(base.matrix)
    raise DomainError(f"unknown base {base!r}")


def base_membership(base: ConvexBase, x) -> bool:
    x = np.asarray(x, dtype=float)
    if x.shape != (base_dim(base),):
        raise DomainError("base point has wrong dimension")
    if isinstance(base, EuclideanBall):
        return float(np.linalg.norm(x - np.asarray(base.center))) < base.radius
    if isinstance(base, Box):
        return bool(np.all(x > np.asarray(base.lo)) and np.all(x < np.asarray(base.hi)))
    if isinstance(base, Polytope):
        a = np.asarray(base.normals)
        b = np.asarray(base.offsets)
        return bool(np.all(a @ x < b))
    if isinstance(base, LinearImage):
        inv = np.linalg.inv(np.asarray(base.matrix, dtype=float))
        return base_membership(base.base, inv @ x)
    raise DomainError(f"unknown base {base!r}")


def base_support(base: ConvexBase, d) -> float:
    """Support function h(d) = sup over the base of <d, x>."""
    d = np.asarray(d, dtype=float)
    if isinstance(base, EuclideanBall):
        return float(np.dot(d, base.center) + base.radius * np.linalg.norm(d))
    if isinstance(base, Box):
        lo = np.asarray(base.lo)
        hi = np.asarray(base.hi)
        return float(np.sum(np.where(d >= 0.0, d * hi, d * lo)))
    if isinstance(base, Polytope):
        return _polytope_support(base, d)
    if isinstance(base, LinearImage):
        a = np.asarray(base.matrix, dtype=float)
        return base_support(base.base, a.T @ d)
    raise DomainError(f"unknown base {base!r}")


def _polytope_support(base: Polytope, d: np.ndarray) -> float:
    # H-representation support needs an LP; bounded polytopes only.
    from scipy.optimize import linprog

    a = np.asarray(base.normals, dtype=float)
    b = np.asarray(base.offsets, dtype=float)
    res = linprog(-d, A_ub=a, b_ub=b, bounds=[(None, None)] * a.shape[1], method="highs")
    if not res.success:
        raise DomainError("polytope support LP failed (unbounded or empty base?)")
    return float(-res.fun)


def base_reference(base: ConvexBase) -> np.ndarray:
    """A canonical interior point."""
    if isinstance(base, EuclideanBall):
        return np.asarray(base.center, dtype=float)
    if isinstance(base, Box):
        return 0.5 * (np.asarray(base.lo) + np.asarray(base.hi))
    if isinstance(base, Polytope):
        if base.interior is not None:
            return np.asarray(base.interior, dtype=float)
        return _polytope_interior(base)
    if isinstance(base, LinearImage):
        return np.asarray(base.matrix, dtype=float) @ base_reference(base.base)
    raise DomainError(f"unknown base {base!r}")


def _polytope_interior(base: Polytope) -> np.ndarray:
    # Chebyshev center: maximize r s.t. <n_i, x> + r |n_i| <= b_i.
    from scipy.optimize import linprog

    a = np.asarray(base.normals, dtype=float)
    b = np.asarray(base.offsets, dtype=float)
    norms = np.linalg.norm(a, axis=1, keepdims=True)
    n = a.shape[1]
    cols = np.hstack([a, norms])
    cost = np.zeros(n + 1)
    cost[-1] = -1.0
    res = linprog(cost, A_ub=cols, b_ub=b, bounds=[(None, None)] * n + [(0, None)], method="highs")
    if not res.success or res.x[-1] <= 0:
        raise DomainError("polytope has empty interior")
    return res.x[:n]


def base_facet_normals(base: ConvexBase) -> list[np.ndarray]:
    """Outward facet normals when the base has finitely many; else []."""
    if isinstance(base, Box):
        n = len(base.lo)
        eye = np.eye(n)
        return [eye[j] for j in range(n)] + [-eye[j] for j in range(n)]
    if isinstance(base, Polytope):
        return [np.asarray(row, dtype=float) for row in base.normals]
    if isinstance(base, LinearImage):
        inv_t = np.linalg.inv(np.asarray(base.matrix, dtype=float)).T
        return [inv_t @ d for d in base_facet_normals(base.base)]
    return []


def base_margin(base: ConvexBase, x) -> float:
    """Distance-like slack of x inside the base (<= true boundary distance)."""
    x = np.asarray(x, dtype=float)
    if isinstance(base, EuclideanBall):
        return base.radius - float(np.linalg.norm(x - np.asarray(base.center)))
    if isinstance(base, Box):
        return float(min(np.min(x - np.asarray(base.lo)), np.min(np.asarray(base.hi) - x)))
    if isinstance(base, Polytope):
        a = np.asarray(base.normals, dtype=float)
        b = np.asarray(base.offsets, dtype=float)
        norms = np.linalg.norm(a, axis=1)
        return float(np.min((b - a @ x) / norms))
    if isinstance(base, LinearImage):
        a = np.asarray(base.matrix, dtype=float)
        inv = np.linalg.inv(a)
        # |x - w| >= |A^{-1}x - A^{-1}w| / ||A^{-1}|| for boundary points w
        return base_margin(base.base, inv @ x) / max(float(np.linalg.norm(inv, 2)), 1e-300)
    raise DomainError(f"unknown base {base!r}")


def chord_interval(base: ConvexBase, p, direction) -> tuple[float, float]:
    """Parameter interval {s : p + s*direction in base}; p must be interior."""
    p = np.asarray(p, dtype=float)
    d = np.asarray(direction, dtype=float)
    if isinstance(base, EuclideanBall):
        q = p - np.asarray(base.center)
        aa = float(np.dot(d, d))
        bb = 2.0 * float(np.dot(q, d))
        cc = float(np.dot(q, q)) - base.radius ** 2
        disc = bb * bb - 4.0 * aa * cc
        root = math.sqrt(max(disc, 0.0))
        return ((-bb - root) / (2.0 * aa), (-bb + root) / (2.0 * aa))
    if isinstance(base, Box):
        lo_s, hi_s = -math.inf, math.inf
        lo = np.asarray(base.lo)
        hi = np.asarray(base.hi)
        for j in range(len(d)):
            if d[j] == 0.0:
                continue
            s1 = (lo[j] - p[j]) / d[j]
            s2 = (hi[j] - p[j]) / d[j]
            lo_s = max(lo_s, min(s1, s2))
            hi_s = min(hi_s, max(s1, s2))
        return lo_s, hi_s
    if isinstance(base, Polytope):
        a = np.asarray(base.normals, dtype=float)
        b = np.asarray(base.offsets, dtype=float)
        lo_s, hi_s = -math.inf, math.inf
        ax = a @ p
        ad = a @ d
        for slack, rate in zip(b - ax, ad):
            if rate > 0.0:
                hi_s = min(hi_s, slack / rate)
            elif rate < 0.0:
                lo_s = max(lo_s, slack / rate)
        return lo_s, hi_s
    if isinstance(base, LinearImage):
        inv = np.linalg.inv(np.asarray(base.matrix, dtype=float))
        return chord_interval(base.base, inv @ p, inv @ d)
    raise DomainError(f"unknown base {base!r}")


def to_polytope(base: ConvexBase, facets_per_pair: int = 64) -> Polytope:
    """Outer polytope approximation via tangent half-spaces.

    Exact for boxes/polytopes; smooth bases (balls, their linear images)
    get `facets_per_pair` tangent directions per coordinate 2-plane.  Kept
    for serialization/interop; internal computations use exact supports.
    """
    if isinstance(base, Polytope):
        return base
    if isinstance(base, Box):
        n = len(base.lo)
        eye = np.eye(n)
        normals = [tuple(eye[j]) for j in range(n)] + [tuple(-eye[j]) for j in range(n)]
        offsets = list(base.hi) + [-l for l in base.lo]
        return Polytope(tuple(normals), tuple(offsets), tuple(base_reference(base)))
    n = base_dim(base)
    dirs: list[np.ndarray] = []
    if n == 1:
        dirs = [np.array([1.0]), np.array([-1.0])]
    else:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(facets_per_pair):
                    ang = 2.0 * math.pi * k / facets_per_pair
                    d = np.zeros(n)
                    d[i] = math.cos(ang)
                    d[j] = math.sin(ang)
                    dirs.append(d)
    normals = tuple(tuple(d) for d in dirs)
    offsets = tuple(base_support(base, d) for d in dirs)
    return Polytope(normals, offsets, tuple(base_reference(base)))


# ---------------------------------------------------------------------------
# model domains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitDisc:
    pass


@dataclass(frozen=True)
class PuncturedDisc:
    pass


@dataclass(frozen=True)
class Annulus:
    R: float

    def __post_init__(self):
        if self.R <= 1.0:
            raise DomainError("annulus needs R > 1")


@dataclass(frozen=True)
class Strip:
    """H_R = {-log R < Re z < log R}."""

    R: float

    def __post_init__(self):
        if self.R <= 1.0:
            raise DomainError("strip needs R > 1")

    @property
    def halfwidth(self) -> float:
        return math.log(self.R)


@dataclass(frozen=True)
class LeftHalfPlane:
    """{Re z < 0}; the exp-cover of the punctured disc."""


@dataclass(frozen=True)
class UnitBall:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("ball dimension must be >= 1")


@dataclass(frozen=True)
class Polydisc:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("polydisc dimension must be >= 1")


@dataclass(frozen=True)
class TubeOverBase:
    base: ConvexBase


@dataclass(frozen=True)
class ReinhardtLog:
    base: ConvexBase


@dataclass(frozen=True)
class ScaledEllipsoid:
    """A_t^{-1}(Omega_0) for Omega_0 = {-1 + |z|^2 + eps |z - e_1|^4 < 0}."""

    eps: float
    t: float
    dim: int = 2

    def __post_init__(self):
        if self.eps < 0.0:
            raise DomainError("eps must be >= 0")
        if not 0.0 <= self.t < 1.0:
            raise DomainError("scaling parameter t must lie in [0, 1)")


ModelDomain = (UnitDisc | PuncturedDisc | Annulus | Strip | LeftHalfPlane | UnitBall
               | Polydisc | TubeOverBase | ReinhardtLog | ScaledEllipsoid)


def dim(domain: ModelDomain) -> int:
    if isinstance(domain, (UnitDisc, PuncturedDisc, Annulus, Strip, LeftHalfPlane)):
        return 1
    if isinstance(domain, (UnitBall, Polydisc)):
        return domain.dim
    if isinstance(domain, (TubeOverBase, ReinhardtLog)):
        return base_dim(domain.base)
    if isinstance(domain, ScaledEllipsoid):
        return domain.dim
    raise DomainError(f"unknown domain {domain!r}")


def log_coordinates(z) -> np.ndarray:
    """(log|z_1|, ..., log|z_n|); every coordinate must be nonzero."""
    z = as_point(z)
    mags = np.abs(z)
    if np.any(mags == 0.0):
        raise DomainError("log coordinates need all z_j != 0")
    return np.log(mags)


def ellipsoid_defining_function(eps: float, z) -> float:
    """rho(z) = -1 + |z|^2 + eps |z - e_1|^4; Omega_0 = {rho < 0}.

    The quartic term is the fixed perturbation vanishing to order 4 at e_1,
    so Omega_0 agrees with the unit ball to higher than second order there.
    """
    if eps < 0.0:
        raise DomainError("eps must be >= 0")
    z = as_point(z)
    e1 = np.zeros(z.size, dtype=complex)
    e1[0] = 1.0
    d2 = float(np.sum(np.abs(z - e1) ** 2))
    return -1.0 + float(np.sum(np.abs(z) ** 2)) + eps * d2 * d2


def membership(domain: ModelDomain, z) -> bool:
    """True iff z is an interior point of the domain."""
    z = as_point(z)
    if z.size != dim(domain):
        raise DomainError(f"point dimension {z.size} does not match domain {domain!r}")
    if isinstance(domain, UnitDisc):
        return abs(z[0]) < 1.0
    if isinstance(domain, PuncturedDisc):
        return 0.0 < abs(z[0]) < 1.0
    if isinstance(domain, Annulus):
        return 1.0 / domain.R < abs(z[0]) < domain.R
    if isinstance(domain, Strip):
        return abs(z[0].real) < domain.halfwidth
    if isinstance(domain, LeftHalfPlane):
        return z[0].real < 0.0
    if isinstance(domain, UnitBall):
        return float(np.sum(np.abs(z) ** 2)) < 1.0
    if isinstance(domain, Polydisc):
        return bool(np.all(np.abs(z) < 1.0))
    if isinstance(domain, TubeOverBase):
        return base_membership(domain.base, z.real)
    if isinstance(domain, ReinhardtLog):
        if np.any(np.abs(z) == 0.0):
            return False
        return base_membership(domain.base, np.log(np.abs(z)))
    if isinstance(domain, ScaledEllipsoid):
        return ellipsoid_defining_function(domain.eps, ball_scaling_map(domain.t, z)) < 0.0
    raise DomainError(f"unknown domain {domain!r}")


def require_interior(domain: ModelDomain, z) -> np.ndarray:
    z = as_point(z)
    if not membership(domain, z):
        raise NonInteriorError(f"point {z} is not interior to {domain!r}")
    return z


def reference_point(domain: ModelDomain) -> np.ndarray:
    """The canonical interior point used by grids and validity checks."""
    n = dim(domain)
    if isinstance(domain, (UnitDisc, Strip, UnitBall, Polydisc)):
        return np.zeros(n, dtype=complex)
    if isinstance(domain, PuncturedDisc):
        return np.array([0.5 + 0.0j])
    if isinstance(domain, Annulus):
        return np.array([1.0 + 0.0j])
    if isinstance(domain, LeftHalfPlane):
        return np.array([-1.0 + 0.0j])
    if isinstance(domain, TubeOverBase):
        return base_reference(domain.base).astype(complex)
    if isinstance(domain, ReinhardtLog):
        return np.exp(base_reference(domain.base)).astype(complex)
    if isinstance(domain, ScaledEllipsoid):
        return np.zeros(n, dtype=complex)
    raise DomainError(f"unknown domain {domain!r}")


def escape_margin(domain: ModelDomain, z) -> float:
    """Positive gauge of how far z sits from escaping the domain.

    For bounded kinds this is (an underestimate of) the Euclidean boundary
    distance; unbounded kinds also decay as |Im z| grows so that compactly
    divergent sequences are detected.
    """
    z = as_point(z)
    if isinstance(domain, UnitDisc):
        return 1.0 - abs(z[0])
    if isinstance(domain, PuncturedDisc):
        return min(1.0 - abs(z[0]), abs(z[0]))
    if isinstance(domain, Annulus):
        return min(domain.R - abs(z[0]), abs(z[0]) - 1.0 / domain.R)
    if isinstance(domain, Strip):
        return min(domain.halfwidth - abs(z[0].real), 1.0 / (1.0 + abs(z[0].imag)))
    if isinstance(domain, LeftHalfPlane):
        return min(-z[0].real, 1.0 / (1.0 + abs(z[0])))
    if isinstance(domain, UnitBall):
        return 1.0 - float(np.linalg.norm(z))
    if isinstance(domain, Polydisc):
        return float(np.min(1.0 - np.abs(z)))
    if isinstance(domain, TubeOverBase):
        return min(base_margin(domain.base, z.real), 1.0 / (1.0 + float(np.linalg.norm(z.imag))))
    if isinstance(domain, ReinhardtLog):
        if np.any(np.abs(z) == 0.0):
            return 0.0
        return base_margin(domain.base, np.log(np.abs(z)))
    if isinstance(domain, ScaledEllipsoid):
        # defining-function residual; gradient has modulus ~2 near the sphere
        return max(0.0, -ellipsoid_defining_function(domain.eps, ball_scaling_map(domain.t, z)) / 2.0)
    raise DomainError(f"unknown domain {domain!r}")


def boundary_residual(domain: ModelDomain, z) -> float:
    """How far z is from the topological boundary (0 = exactly on it)."""
    z = as_point(z)
    if isinstance(domain, (UnitDisc, UnitBall)):
        return abs(float(np.linalg.norm(z)) - 1.0)
    if isinstance(domain, PuncturedDisc):
        return min(abs(abs(z[0]) - 1.0), abs(z[0]))
    if isinstance(domain, Annulus):
        return min(abs(abs(z[0]) - domain.R), abs(abs(z[0]) - 1.0 / domain.R))
    if isinstance(domain, Strip):
        return abs(abs(z[0].real) - domain.halfwidth)
    if isinstance(domain, LeftHalfPlane):
        return abs(z[0].real)
    if isinstance(domain, Polydisc):
        inside = np.abs(z) <= 1.0
        if not np.all(inside):
            return float(np.max(np.abs(z) - 1.0))
        return float(np.min(np.abs(np.abs(z) - 1.0)))
    if isinstance(domain, ScaledEllipsoid):
        return abs(ellipsoid_defining_function(domain.eps, ball_scaling_map(domain.t, z))) / 2.0
    if isinstance(domain, ReinhardtLog):
        if np.any(np.abs(z) == 0.0):
            return 0.0
        return abs(base_margin(domain.base, np.log(np.abs(z))))
    if isinstance(domain, TubeOverBase):
        return abs(base_margin(domain.base, z.real))
    raise DomainError(f"unknown domain {domain!r}")


@dataclass(frozen=True)
class BoundaryPoint:
    """A point certified to lie on the boundary of its domain."""

    domain: ModelDomain
    point: tuple[complex, ...]

    def __post_init__(self):
        res = boundary_residual(self.domain, np.asarray(self.point))
        if res > BOUNDARY_TOL:
            raise DomainError(f"point is {res:.3e} away from the boundary")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.point, dtype=complex)


def boundary_point(domain: ModelDomain, z) -> BoundaryPoint:
    z = as_point(z)
    return BoundaryPoint(domain, tuple(complex(c) for c in z))


# ---------------------------------------------------------------------------
# serialization (schemas/v1); round-trips are lossless
# ---------------------------------------------------------------------------

def base_to_dict(base: ConvexBase) -> dict:
    if isinstance(base, EuclideanBall):
        return {"kind": "ball", "center": list(base.center), "radius": base.radius}
    if isinstance(base, Box):
        return {"kind": "box", "lo": list(base.lo), "hi": list(base.hi)}
    if isinstance(base, Polytope):
        out = {"kind": "polytope", "normals": [list(r) for r in base.normals],
               "offsets": list(base.offsets)}
        if base.interior is not None:
            out["interior"] = list(base.interior)
        return out
    if isinstance(base, LinearImage):
        return {"kind": "linear-image", "matrix": [list(r) for r in base.matrix],
                "base": base_to_dict(base.base)}
    raise DomainError(f"unknown base {base!r}")


def base_from_dict(data: dict) -> ConvexBase:
    kind = data.get("kind")
    if kind == "ball":
        return EuclideanBall(tuple(float(c) for c in data["center"]), float(data["radius"]))
    if kind == "box":
        return Box(tuple(float(c) for c in data["lo"]), tuple(float(c) for c in data["hi"]))
    if kind == "polytope":
        interior = data.get("interior")
        return Polytope(tuple(tuple(float(c) for c in r) for r in data["normals"]),
                        tuple(float(c) for c in data["offsets"]),
                        None if interior is None else tuple(float(c) for c in interior))
    if kind == "linear-image":
        return LinearImage(tuple(tuple(float(c) for c in r) for r in data["matrix"]),
                           base_from_dict(data["base"]))
    raise DomainError(f"unknown base kind {kind!r}")


def domain_to_dict(domain: ModelDomain) -> dict:
    if isinstance(domain, UnitDisc):
        return {"kind": "unit-disc"}
    if isinstance(domain, PuncturedDisc):
        return {"kind": "punctured-disc"}
    if isinstance(domain, Annulus):
        return {"kind": "annulus", "R": domain.R}
    if isinstance(domain, Strip):
        return {"kind": "strip", "R": domain.R}
    if isinstance(domain, LeftHalfPlane):
        return {"kind": "left-half-plane"}
    if isinstance(domain, UnitBall):
        return {"kind": "unit-ball", "dim": domain.dim}
    if isinstance(domain, Polydisc):
        return {"kind": "polydisc", "dim": domain.dim}
    if isinstance(domain, TubeOverBase):
        return {"kind": "tube", "base": base_to_dict(domain.base)}
    if isinstance(domain, ReinhardtLog):
        return {"kind": "reinhardt-log", "base": base_to_dict(domain.base)}
    if isinstance(domain, ScaledEllipsoid):
        return {"kind": "scaled-ellipsoid", "eps": domain.eps, "t": domain.t, "dim": domain.dim}
    raise DomainError(f"unknown domain {domain!r}")


def domain_from_dict(data: dict) -> ModelDomain:
    kind = data.get("kind")
    if kind == "unit-disc":
        return UnitDisc()
    if kind == "punctured-disc":
        return PuncturedDisc()
    if kind == "annulus":
        return Annulus(float(data["R"]))
    if kind == "strip":
        return Strip(float(data["R"]))
    if kind == "left-half-plane":
        return LeftHalfPlane()
    if kind == "unit-ball":
        return UnitBall(int(data["dim"]))
    if kind == "polydisc":
        return Polydisc(int(data["dim"]))
    if kind == "tube":
        return TubeOverBase(base_from_dict(data["base"]))
    if kind == "reinhardt-log":
        return ReinhardtLog(base_from_dict(data["base"]))
    if kind == "scaled-ellipsoid":
        return ScaledEllipsoid(float(data["eps"]), float(data["t"]), int(data["dim"]))
    raise DomainError(f"unknown domain kind {kind!r}")


def containing_ball_inflation(eps: float) -> float:
    """delta_0 such that Omega_0 sits in the ball of radius 1 + delta_0
    centered at -delta_0 e_1.

    For the quartic perturbation family rho < 0 forces |z| < 1 outright, so
    delta_0 = 0 certifies the containment for every eps >= 0.
    """
    if eps < 0.0:
        raise DomainError("eps must be >= 0")
    return 0.0
