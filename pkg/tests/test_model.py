import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from extblasius import (
    ExtendedParams,
    PhaseState,
    ScaleFactor,
    UnscalableEndpointError,
    bc_residuals,
    blasius_rhs,
    lambda_from_endpoint,
    missing_ic,
    rescale_params,
    rescale_solution,
    rhs,
)

lams = st.floats(0.5, 2.0)
finite = st.floats(-10.0, 10.0)


# ---------------------------------------------------------------- rhs

@pytest.mark.parametrize(
    "state,expected",
    [
        ((0.0, 0.0, 1.0), (0.0, 1.0, 0.0)),
        ((1.0, 1.0, 0.0), (1.0, 0.0, 0.0)),
        ((2.0, 0.5, 0.25), (0.5, 0.25, -0.5)),
    ],
)
def test_rhs_examples(state, expected):
    assert rhs(state) == expected


@given(f=finite, df=finite, d2f=finite)
def test_rhs_matches_compiled_field(f, df, d2f):
    assert tuple(blasius_rhs(0.0, np.array([f, df, d2f]))) == rhs((f, df, d2f))


# ---------------------------------------------------------- types

def test_extended_params_rejects_negative_slip():
    with pytest.raises(ValueError):
        ExtendedParams(p1=0.1, p2=-0.1)
    ExtendedParams(p1=-0.5, p2=0.0)  # opposing wall motion is allowed


def test_scale_factor_constants_and_domain():
    assert ScaleFactor.DELTA1 == 2
    assert ScaleFactor.DELTA2 == -1
    with pytest.raises(ValueError):
        ScaleFactor(0.0)
    with pytest.raises(ValueError):
        ScaleFactor(-1.0)


def test_phase_state_array_roundtrip():
    s = PhaseState(1.0, 2.0, 3.0)
    assert np.array_equal(s.as_array(), [1.0, 2.0, 3.0])


# ---------------------------------------------------------- lambda_from_endpoint

def test_lambda_identity():
    assert float(lambda_from_endpoint(1.0)) == 1.0


def test_lambda_from_reference_row():
    # Oracle: the ratio of published parameter columns, p2 / p2_star.
    expected = 0.333807506 / 0.25
    assert float(lambda_from_endpoint(1.782839)) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("bad", [-0.3, 0.0, math.nan])
def test_lambda_rejects_nonpositive(bad):
    with pytest.raises(UnscalableEndpointError, match="unscalable"):
        lambda_from_endpoint(bad)


@given(slope=st.floats(1e-6, 1e6))
def test_lambda_squares_back(slope):
    lam = float(lambda_from_endpoint(slope))
    assert lam**2 == pytest.approx(slope, rel=1e-15)


# ---------------------------------------------------------- missing_ic

def test_missing_ic_identity():
    assert missing_ic(ScaleFactor(1.0), 1.0) == 1.0


def test_missing_ic_reference_row1():
    assert missing_ic(ScaleFactor(1.335230)) == pytest.approx(0.4200797, abs=1e-6)


def test_missing_ic_from_trace_lambda():
    # Oracle: direct arithmetic on the converged scale factor.
    lam = 1.448927239
    assert missing_ic(ScaleFactor(lam)) == pytest.approx(lam**-3, rel=1e-15)
    assert missing_ic(ScaleFactor(lam)) == pytest.approx(0.328746, abs=1e-5)


# ---------------------------------------------------------- rescale_params

def test_rescale_params_identity():
    p = rescale_params(ScaleFactor(1.0), 0.3, 0.7)
    assert (p.p1, p.p2) == (0.3, 0.7)


def test_rescale_params_reference_rows():
    # lam taken from the published p2 column (p2_star = 0.25 and 1).
    p = rescale_params(ScaleFactor(0.333807506 / 0.25), 0.25, 0.25)
    assert p.p1 == pytest.approx(0.1402258, abs=1e-6)
    assert p.p2 == pytest.approx(0.3338075, abs=1e-6)
    p = rescale_params(ScaleFactor(1.681291175), 1.0, 1.0)
    assert p.p1 == pytest.approx(0.3537644, abs=1e-6)
    assert p.p2 == pytest.approx(1.6812912, abs=1e-6)


@given(lam=lams, p1=finite, p2=st.floats(0.0, 10.0))
def test_rescale_params_inverts_group_action(lam, p2, p1):
    # Applying the forward action to the rescaled pair returns the stars.
    sf = ScaleFactor(lam)
    p = rescale_params(sf, p1, p2)
    assert lam**ScaleFactor.DELTA1 * p.p1 == pytest.approx(p1, rel=1e-12, abs=1e-12)
    assert lam**ScaleFactor.DELTA2 * p.p2 == pytest.approx(p2, rel=1e-12, abs=1e-12)


# ---------------------------------------------------------- rescale_solution

def test_rescale_solution_identity(short_starred):
    out = rescale_solution(ScaleFactor(1.0), short_starred)
    assert np.array_equal(out.grid, short_starred.grid)
    assert np.array_equal(out.states, short_starred.states)


def test_rescale_solution_reproduces_skin_friction(classic_fine):
    rescaled = rescale_solution(classic_fine.lam, classic_fine.starred)
    assert rescaled.states[0, 2] == pytest.approx(0.469599988, abs=1e-8)


def test_rescale_solution_stretches_domain(classic):
    # lam > 1 here, so the physical domain is longer than the starred one.
    lam = float(classic.lam)
    assert lam > 1
    assert classic.rescaled.grid[-1] == pytest.approx(lam * classic.starred.grid[-1])
    assert classic.rescaled.grid[-1] > classic.starred.grid[-1]


@given(lam1=lams, lam2=lams)
def test_group_closure(short_starred, lam1, lam2):
    twice = rescale_solution(ScaleFactor(lam2), rescale_solution(ScaleFactor(lam1), short_starred))
    once = rescale_solution(ScaleFactor(lam1 * lam2), short_starred)
    assert np.allclose(twice.grid, once.grid, rtol=1e-12, atol=0)
    assert np.allclose(twice.states, once.states, rtol=1e-12, atol=0)


@given(lam=lams)
def test_group_inverse(short_starred, lam):
    back = rescale_solution(ScaleFactor(1 / lam), rescale_solution(ScaleFactor(lam), short_starred))
    assert np.allclose(back.grid, short_starred.grid, rtol=1e-12, atol=0)
    assert np.allclose(back.states, short_starred.states, rtol=1e-12, atol=0)


def _ode_residual(traj):
    # centered finite difference of f'' against -f f''
    h = traj.grid[1] - traj.grid[0]
    d2f = traj.states[:, 2]
    fd3 = (d2f[2:] - d2f[:-2]) / (2 * h)
    return fd3 + traj.states[1:-1, 0] * d2f[1:-1]


def test_rescaled_trajectory_satisfies_ode(short_starred):
    lam = 1.3
    starred_res = _ode_residual(short_starred)
    rescaled_res = _ode_residual(rescale_solution(ScaleFactor(lam), short_starred))
    eps = np.max(np.abs(starred_res))
    assert eps < 1e-3  # sanity: the starred run solves the equation
    assert np.max(np.abs(rescaled_res)) <= lam**-4 * eps * (1 + 1e-9)
    assert np.allclose(rescaled_res, lam**-4 * starred_res, rtol=1e-9, atol=1e-14)


def test_weyl_positivity(classic):
    d2f = classic.rescaled.states[:, 2]
    assert np.all(d2f > 0)
    assert np.all(np.diff(d2f) < 0)


# ---------------------------------------------------------- bc_residuals

def test_bc_residuals_classic(classic):
    r0, r_slip, r_inf = bc_residuals(classic.rescaled, classic.params)
    assert abs(r0) < 1e-6 and abs(r_slip) < 1e-6 and abs(r_inf) < 1e-6


def test_bc_residuals_reference_row(table1_results):
    res = table1_results[0]
    _, r_slip, _ = bc_residuals(res.rescaled, res.params)
    assert abs(r_slip) < 1e-6


def test_bc_residuals_detect_wrong_params(table1_results):
    res = table1_results[0]
    wrong = ExtendedParams(p1=res.params.p1 + 0.1, p2=res.params.p2)
    _, r_slip, _ = bc_residuals(res.rescaled, wrong)
    assert abs(r_slip) == pytest.approx(0.1, abs=1e-6)
