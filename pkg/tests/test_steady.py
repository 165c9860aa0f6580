import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import OMEGA0, draws
from qheatswitch import (
    BathSpec,
    DriveSpec,
    build_generator,
    heat_components_hot,
    steady_analytic,
    steady_analytic_dephasing,
    steady_numeric,
    undriven_reference,
)

rates = st.floats(1e8, 1e10)
occ = st.floats(0.0, 1.0)


def test_undriven_limit(fig2_baths):
    hot, cold = fig2_baths
    ss = steady_analytic(hot, cold, DriveSpec(OMEGA0, 0.0, 1e9))
    z0, _ = undriven_reference(hot, cold, OMEGA0)
    assert ss.x_tilde_inf == 0 and ss.y_tilde_inf == 0
    assert ss.z_tilde_inf == pytest.approx(z0, rel=1e-14)


def test_resonance_kills_in_phase_coherence(fig2_baths):
    assert steady_analytic(*fig2_baths, DriveSpec(OMEGA0, 3e9, 0.0)).x_tilde_inf == 0


def test_saturation_at_strong_drive(fig2_baths):
    a = steady_analytic(*fig2_baths, DriveSpec(OMEGA0, 1e16, 1e9))
    b = steady_analytic(*fig2_baths, DriveSpec(OMEGA0, 1e17, 1e9))
    # coherences fall as 1/g, the inversion as 1/g^2
    assert b.x_tilde_inf < 0 and b.x_tilde_inf == pytest.approx(a.x_tilde_inf / 10, rel=1e-9)
    assert b.y_tilde_inf > 0 and b.y_tilde_inf == pytest.approx(a.y_tilde_inf / 10, rel=1e-9)
    assert b.z_tilde_inf < 0 and b.z_tilde_inf == pytest.approx(a.z_tilde_inf / 100, rel=1e-9)


def test_fig2_z0(fig2_baths):
    z0, j0 = undriven_reference(*fig2_baths, OMEGA0)
    assert z0 == pytest.approx(-2 * 2.7e9 / 7.776e9, rel=1e-14)
    assert round(z0, 4) == -0.6944
    assert j0 > 0


def test_undriven_reference_limits():
    hot, cold = BathSpec(1e9, 0.2), BathSpec(3e9, 0.2)
    assert undriven_reference(hot, cold, OMEGA0)[1] == pytest.approx(0.0, abs=1e-35)
    hot = BathSpec(1e9, 0.3)
    z0, j0 = undriven_reference(hot, BathSpec(1e-6, 0.0), OMEGA0)
    assert z0 == pytest.approx(-1 / 1.6, rel=1e-9)
    assert abs(j0) < 1e-9 * 1e9 * 1.05e-34 * OMEGA0


def test_undriven_reference_matches_numeric_heat(fig2_baths):
    hot, cold = fig2_baths
    drive = DriveSpec(OMEGA0, 0.0, 0.0)
    state = steady_numeric(build_generator(hot, cold, drive))
    j_cl, j_q = heat_components_hot(state, hot, drive)
    assert j_cl == pytest.approx(undriven_reference(hot, cold, OMEGA0)[1], rel=1e-12)
    assert j_q == 0


def test_strong_dephasing_limit(fig2_baths):
    hot, cold = fig2_baths
    ss = steady_analytic_dephasing(hot, cold, DriveSpec(OMEGA0, 3e9, 1e9), 1e20)
    assert abs(ss.x_tilde_inf) < 1e-9 and abs(ss.y_tilde_inf) < 1e-9
    assert ss.z_tilde_inf == pytest.approx(-(hot.gamma + cold.gamma) / (hot.total + cold.total), rel=1e-9)


def test_reduction_chain():
    for hot, cold, drive, _ in draws(500, seed=11):
        a = steady_analytic(hot, cold, drive)
        b = steady_analytic_dephasing(hot, cold, drive, 0.0)
        for u, v in zip((a.x_tilde_inf, a.y_tilde_inf, a.z_tilde_inf), (b.x_tilde_inf, b.y_tilde_inf, b.z_tilde_inf)):
            assert u == pytest.approx(v, rel=1e-14, abs=0)
        undriven = steady_analytic(hot, cold, DriveSpec(drive.omega0, 0.0, drive.delta))
        assert undriven.z_tilde_inf == pytest.approx(undriven_reference(hot, cold, drive.omega0)[0], rel=1e-14)


def test_matches_numeric_with_dephasing():
    for hot, cold, drive, gphi in draws(300, seed=12):
        ana = steady_analytic_dephasing(hot, cold, drive, gphi)
        num = steady_numeric(build_generator(hot, cold, drive, gphi))
        np.testing.assert_allclose(
            [num.x_tilde, num.y_tilde, num.z], [ana.x_tilde_inf, ana.y_tilde_inf, ana.z_tilde_inf], rtol=1e-10
        )


@settings(max_examples=300)
@given(rates, rates, occ, occ, st.floats(1e6, 1e11), st.floats(1e6, 1e11))
def test_state_invariants(gh, gc, nh, nc, g, delta):
    hot, cold = BathSpec(gh, nh), BathSpec(gc, nc)
    ss = steady_analytic(hot, cold, DriveSpec(OMEGA0, g, delta))
    assert ss.x_tilde_inf**2 + ss.y_tilde_inf**2 + ss.z_tilde_inf**2 <= 1 + 1e-12
    assert ss.z_tilde_inf < 0
    assert math.copysign(1, ss.x_tilde_inf) == -1  # g, delta > 0
    neg = steady_analytic(hot, cold, DriveSpec(OMEGA0, g, -delta))
    assert neg.x_tilde_inf == -ss.x_tilde_inf
    assert neg.y_tilde_inf == ss.y_tilde_inf
    assert neg.z_tilde_inf == ss.z_tilde_inf


@settings(max_examples=100)
@given(rates, rates, occ, occ, st.floats(-1e11, 1e11))
def test_population_inversion_shrinks_with_drive(gh, gc, nh, nc, delta):
    hot, cold = BathSpec(gh, nh), BathSpec(gc, nc)
    gt = hot.total + cold.total
    zs = [abs(steady_analytic(hot, cold, DriveSpec(OMEGA0, g, delta)).z_tilde_inf) for g in np.linspace(0, 10 * gt, 50)]
    assert np.all(np.diff(zs) < 0)
