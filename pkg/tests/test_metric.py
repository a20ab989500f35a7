import cmath
import math

import numpy as np
import pytest

from kobalab import (Annulus, DeckBoundError, LeftHalfPlane, Polydisc, PuncturedDisc,
                     SandwichGapError, Strip, TubeOverBase, UnitBall, UnitDisc,
                     deck_infimum, distance, hyperbolic_length, infinitesimal_metric)
from kobalab import closed_forms as cf
from kobalab.domains import EuclideanBall, NonInteriorError
from kobalab.geodesics import ball_geodesic_segment

GEN = np.random.default_rng(11)


def disc_pts(n, radius=0.9):
    out = []
    for _ in range(n):
        r = radius * math.sqrt(GEN.uniform())
        th = GEN.uniform(0, 2 * math.pi)
        out.append(r * cmath.exp(1j * th))
    return out


def test_distance_trivia():
    assert distance(UnitDisc(), 0.0, 0.0).value == 0.0
    for r in (0.2, 0.5, 0.8):
        # Schwarz-Pick equality on the linear slice: oracle is the
        # one-dimensional Poincare distance
        got = distance(UnitBall(2), [0.0, 0.0], [r, 0.0]).value
        assert got == pytest.approx(math.atanh(r), abs=1e-14)


def test_annulus_real_positive_reduces_to_strip():
    R = 4.0
    a = math.log(R)
    for t, s in [(0.5, 2.0), (0.3, 0.9), (1.1, 3.5)]:
        got = distance(Annulus(R), t, s)
        want = cf.strip_distance(a, math.log(t), math.log(s))
        assert got.value == pytest.approx(want, abs=1e-14)
        assert got.deck_index == (0,)


def test_strip_formula_against_tan_map():
    # independent oracle: the conformal map tan(pi z / 4a) onto the disc
    a = math.log(3.0)
    gen = np.random.default_rng(1)
    for _ in range(200):
        z = complex(gen.uniform(-0.95 * a, 0.95 * a), gen.uniform(-3, 3))
        w = complex(gen.uniform(-0.95 * a, 0.95 * a), gen.uniform(-3, 3))
        tz = cmath.tan(math.pi * z / (4 * a))
        tw = cmath.tan(math.pi * w / (4 * a))
        assert cf.strip_distance(a, z, w) == pytest.approx(
            cf.disc_distance(tz, tw), abs=1e-10)


def test_strip_distance_large_separation():
    # arcsinh form stays finite and linear where arctanh overflows
    a = math.log(4.0)
    d1 = cf.strip_distance(a, 0.0, 0.0 + 100j)
    assert d1 == pytest.approx(math.pi * 100 / (4 * a), rel=1e-10)
    d2 = cf.strip_distance(a, 0.0, 0.0 + 2000j)
    assert d2 == pytest.approx(math.pi * 2000 / (4 * a), rel=1e-10)


@pytest.mark.parametrize("domain,sampler", [
    (UnitDisc(), lambda: np.array([disc_pts(1)[0]])),
    (Strip(4.0), lambda: np.array([complex(GEN.uniform(-1.3, 1.3), GEN.uniform(-4, 4))])),
    (UnitBall(2), lambda: _ball_pt(2)),
    (Polydisc(2), lambda: np.array(disc_pts(2))),
    (PuncturedDisc(), lambda: np.array([disc_pts(1)[0] or 0.3])),
    (Annulus(4.0), lambda: np.array([math.exp(GEN.uniform(-1.3, 1.3))
                                     * cmath.exp(1j * GEN.uniform(0, 2 * math.pi))])),
])
def test_metric_axioms(domain, sampler):
    for _ in range(120):
        z, w, v = sampler(), sampler(), sampler()
        if isinstance(domain, PuncturedDisc) and (abs(z[0]) < 1e-3 or abs(w[0]) < 1e-3
                                                  or abs(v[0]) < 1e-3):
            continue
        dzw = distance(domain, z, w).value
        dwz = distance(domain, w, z).value
        assert dzw == dwz  # symmetry is exact, not approximate
        assert distance(domain, z, z).value == 0.0
        dzv = distance(domain, z, v).value
        dwv = distance(domain, w, v).value
        assert dzw <= dzv + dwv + 1e-9


def _ball_pt(n):
    g = GEN.normal(size=n) + 1j * GEN.normal(size=n)
    return 0.9 * GEN.uniform() ** (1 / (2 * n)) * g / np.linalg.norm(g)


def test_infinitesimal_trivia():
    assert infinitesimal_metric(UnitDisc(), 0.0, 1.0) == pytest.approx(1.0)
    assert infinitesimal_metric(UnitDisc(), 0.3 + 0.1j, 0.0) == 0.0
    # degree-1 homogeneity is exact
    k1 = infinitesimal_metric(UnitBall(2), [0.2, 0.1j], [0.3, -0.4j])
    k2 = infinitesimal_metric(UnitBall(2), [0.2, 0.1j], [0.75, -1.0j])
    assert k2 == pytest.approx(2.5 * k1, rel=1e-14)


def test_punctured_density_against_finite_difference():
    # oracle: finite difference of the deck-infimum distance
    for t in (0.2, 0.5, 0.8):
        for v in (1.0, 1j, 0.6 - 0.8j):
            k = infinitesimal_metric(PuncturedDisc(), t, v)
            h = 1e-6
            fd = distance(PuncturedDisc(), t, t + h * v).value / h
            assert k == pytest.approx(fd, rel=1e-4)


def test_annulus_density_against_finite_difference():
    R = 4.0
    for z in (0.5, 1.5 + 0.5j, 3.0j):
        if not abs(1 / R) < abs(z) < R:
            continue
        k = infinitesimal_metric(Annulus(R), z, 1.0)
        fd = distance(Annulus(R), z, z + 1e-6).value / 1e-6
        assert k == pytest.approx(fd, rel=1e-4)


def test_hyperbolic_length_constant_curve():
    assert hyperbolic_length(UnitDisc(), lambda t: np.array([0.3 + 0j]), 0.0, 2.0) == 0.0


def test_hyperbolic_length_radial_segment():
    val = hyperbolic_length(UnitDisc(), lambda t: np.array([t + 0j]), 0.0, 0.5)
    assert val == pytest.approx(math.atanh(0.5), abs=1e-8)


def test_hyperbolic_length_reparametrization_invariance():
    g = ball_geodesic_segment(2, [0.1, 0.2j], [-0.3, 0.4])
    t_end = g.interval.b

    def repar(u):  # monotone smooth [0,1] -> [0, t_end]
        return t_end * (u ** 2 + u) / 2.0

    direct = hyperbolic_length(UnitBall(2), g, 0.0, t_end)
    warped = hyperbolic_length(UnitBall(2), lambda u: g.sample(repar(u)), 0.0, 1.0)
    assert warped == pytest.approx(direct, abs=1e-6)


def test_hyperbolic_length_rejects_exiting_curve():
    with pytest.raises(NonInteriorError):
        hyperbolic_length(UnitDisc(), lambda t: np.array([t + 0j]), 0.0, 1.5)


def test_deck_infimum_identical_points():
    val, nu = deck_infimum(Strip(4.0), [0.2 + 1j], [0.2 + 1j])
    assert val.value == 0.0 and nu == (0,)


def test_deck_infimum_shift_by_period():
    u = np.array([-0.4 + 0.3j])
    v = np.array([-0.9 - 0.2j])
    base_val, base_nu = deck_infimum(LeftHalfPlane(), u, v)
    shifted_val, shifted_nu = deck_infimum(LeftHalfPlane(), u, v + 2j * math.pi)
    assert shifted_val.value == pytest.approx(base_val.value, abs=1e-14)
    assert shifted_nu[0] == base_nu[0] - 1


def test_deck_infimum_real_tube_points_minimize_at_zero():
    base = EuclideanBall((0.0, 0.0), 1.0)
    gen = np.random.default_rng(4)
    for _ in range(20):
        u = gen.uniform(-0.5, 0.5, size=2).astype(complex)
        v = gen.uniform(-0.5, 0.5, size=2).astype(complex)
        _, nu = deck_infimum(TubeOverBase(base), u, v)
        assert nu == (0, 0)


def test_deck_brute_force_oracle():
    gen = np.random.default_rng(9)
    for _ in range(60):
        r1, r2 = gen.uniform(0.05, 0.95, 2)
        t1, t2 = gen.uniform(0, 2 * math.pi, 2)
        z, w = r1 * cmath.exp(1j * t1), r2 * cmath.exp(1j * t2)
        got = distance(PuncturedDisc(), z, w).value
        brute = min(cf.halfplane_distance(cmath.log(z), cmath.log(w) + 2j * math.pi * k)
                    for k in range(-10, 11))
        assert got == pytest.approx(brute, abs=1e-12)


def test_deck_bound_certification_failure():
    # vertical far pair: bound 0 cannot certify the minimum
    with pytest.raises(DeckBoundError):
        deck_infimum(Strip(4.0), [0.0 + 0j], [0.0 + 40j], lattice_bound=0)


def test_sandwich_gap_tolerance():
    base = EuclideanBall((0.0, 0.0), 1.0)
    z = np.array([0.2 + 0.4j, -0.1 + 0.2j])
    w = np.array([-0.3 - 0.2j, 0.4 + 0.1j])
    val = distance(TubeOverBase(base), z, w)
    assert val.method == "sandwich" and val.gap > 0.0
    assert val.value == pytest.approx(0.5 * (val.lower + val.upper))
    with pytest.raises(SandwichGapError):
        distance(TubeOverBase(base), z, w, gap_tol=val.gap / 10.0)


def test_non_interior_rejected():
    with pytest.raises(NonInteriorError):
        distance(UnitDisc(), 0.0, 1.5)
