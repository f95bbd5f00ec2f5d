import numpy as np
import pytest
from hypothesis import given, strategies as st

from quadbound.errors import DomainError, UnsupportedCaseError
from quadbound.geometry import cheb_eval, inverse_joukowski, joukowski
from quadbound.measures import (CaseId, check_size, density_coeffs, induced_poly, induced_poly_case_I,
                                induced_poly_case_I_coeffs, induced_poly_diag, induced_weight_value,
                                modified_moment, moment_vector, theta_density, weight_value)

DIAG = ["1", "2", "3", "4"]


def all_cases(nmax=20):
    yield CaseId("I")
    for tag in DIAG:
        for n in range(1 if tag != "1" else 2, nmax + 1):
            yield CaseId(tag, n)


def oracle_density(case, theta):
    # theta-integrand rebuilt from the Chebyshev polynomials, not from the cosine coefficients
    t = np.cos(theta)
    n = case.n
    if case.tag == "I":
        return t * t
    if case.tag == "1":
        return cheb_eval("T", True, n, t) ** 2
    if case.tag == "2":
        return (cheb_eval("U", True, n, t) * np.sin(theta)) ** 2
    if case.tag == "3":
        return cheb_eval("V", True, n, t) ** 2 * (1 + t)
    return cheb_eval("V", True, n, -t) ** 2 * (1 - t)


def oracle_moment(case, k, npts=10000):
    theta = (np.arange(npts) + 0.5) * np.pi / npts
    return np.pi / npts * np.sum(np.cos(k * theta) * oracle_density(case, theta))


def test_case_id_validation():
    assert CaseId("i").tag == "I"
    assert str(CaseId("3", 4)) == "Case3(n=4)"
    with pytest.raises(DomainError):
        CaseId("1", 1)
    with pytest.raises(DomainError):
        CaseId("I", 2)
    with pytest.raises(DomainError):
        CaseId("5", 2)
    with pytest.raises(DomainError):
        CaseId("2", 0)


def test_check_size():
    check_size(CaseId("I"), 7)
    check_size(CaseId("2", 3), 3)
    with pytest.raises(UnsupportedCaseError):
        check_size(CaseId("2", 3), 4)
    with pytest.raises(UnsupportedCaseError):
        check_size(CaseId("I"), 0)


def test_weight_value_examples():
    assert weight_value(1, 0.0) == 1.0
    assert weight_value(2, 0.0) == 1.0
    assert weight_value(3, 0.5) == pytest.approx(np.sqrt(0.5 / 1.5), rel=1e-15)
    assert weight_value(3, 0.5) == pytest.approx(0.5773502691896257)
    assert weight_value(4, -0.5) == pytest.approx(weight_value(3, 0.5))
    for t in (1.0, -1.0, 1.5):
        with pytest.raises(DomainError):
            weight_value(1, t)
    with pytest.raises(DomainError):
        weight_value(5, 0.1)


@given(st.integers(1, 4), st.floats(-0.999, 0.999))
def test_weights_positive(i, t):
    assert weight_value(i, t) > 0


def test_induced_weight_examples():
    assert induced_weight_value(CaseId("I"), 0.0) == 0.0
    assert induced_weight_value(CaseId("1", 2), np.cos(np.pi / 4)) == pytest.approx(0.0, abs=1e-15)
    assert induced_weight_value(CaseId("2", 1), 0.3) == pytest.approx(0.09 * np.sqrt(0.91), rel=1e-14)
    assert induced_weight_value(CaseId("2", 1), 0.3) == pytest.approx(0.0858545, rel=1e-6)
    with pytest.raises(DomainError):
        induced_weight_value(CaseId("3", 2), 1.0)


@given(st.integers(1, 20), st.floats(-0.999, 0.999))
def test_case4_reflection_exact(n, t):
    assert induced_weight_value(CaseId("4", n), t) == induced_weight_value(CaseId("3", n), -t)


@pytest.mark.parametrize("case", [CaseId("I"), CaseId("1", 3), CaseId("2", 4), CaseId("3", 2), CaseId("4", 5)])
def test_theta_density_matches_t_density(case):
    theta = np.linspace(0.01, np.pi - 0.01, 41)
    t = np.cos(theta)
    np.testing.assert_allclose(theta_density(case, theta), induced_weight_value(case, t) * np.sin(theta),
                               rtol=1e-9, atol=1e-14)


def test_moment_examples():
    assert modified_moment(CaseId("I"), 0) == pytest.approx(np.pi / 2, rel=1e-15)
    assert modified_moment(CaseId("I"), 2) == pytest.approx(np.pi / 4, rel=1e-15)
    for n in range(2, 12):
        assert modified_moment(CaseId("1", n), 0) == pytest.approx(np.pi / 2 ** (2 * n - 1), rel=1e-15)
    with pytest.raises(DomainError):
        modified_moment(CaseId("I"), -1)


def test_moments_against_oracle():
    for case in all_cases():
        n = case.n
        for k in range(4 * n + 5):
            exact = modified_moment(case, k)
            ref = oracle_moment(case, k)
            scale = modified_moment(case, 0)
            assert abs(exact - ref) <= 1e-12 * scale, (case, k)


def test_moment_vector_invariants():
    for case in all_cases(10):
        v = moment_vector(case, 4 * case.n + 4)
        assert v[0] > 0
        if case.tag in ("I", "1", "2"):
            assert np.all(v[1::2] == 0)
    # cases 3 and 4 have a nonzero odd moment of opposite sign
    m3 = moment_vector(CaseId("3", 3), 10)
    m4 = moment_vector(CaseId("4", 3), 10)
    assert m3[7] != 0
    np.testing.assert_allclose(m4, m3 * (-1.0) ** np.arange(10))


def test_density_coeff_lengths():
    assert len(density_coeffs(CaseId("I"))) == 3
    assert len(density_coeffs(CaseId("2", 4))) == 11


def test_induced_poly_case_I_examples():
    assert induced_poly_case_I(1, 0.0) == 0.0
    # m = 2: pi = T2/2 - 1/4 = t^2 - 3/4, so 1/4 at t = 1
    assert induced_poly_case_I(2, 1.0) == pytest.approx(0.25, rel=1e-15)
    for m in (2, 4, 6, 8):
        closed = (2.0 ** (2 * m + 2) + 1) / (2.0 ** m * 2.0 ** m * 5)
        assert induced_poly_case_I(m, 1.25) == pytest.approx(closed, rel=1e-14)


@pytest.mark.parametrize("m", range(1, 13))
def test_induced_poly_case_I_orthogonal(m):
    case = CaseId("I")
    npts = 4000
    theta = (np.arange(npts) + 0.5) * np.pi / npts
    p = induced_poly_case_I(m, np.cos(theta))
    g = theta_density(case, theta)
    for k in range(m):
        val = np.pi / npts * np.sum(p * np.cos(k * theta) * g)
        assert abs(val) <= 1e-13


@pytest.mark.parametrize("m", [1, 2, 5, 8, 12])
def test_induced_poly_case_I_monic(m):
    # leading coefficient by the m-th finite difference
    h = 0.25
    zs = h * (np.arange(m + 1) - m / 2)
    vals = np.array([induced_poly_case_I(m, z) for z in zs])
    from math import comb, factorial
    diff = sum((-1) ** (m - j) * comb(m, j) * vals[j] for j in range(m + 1))
    assert diff / (factorial(m) * h ** m) == pytest.approx(1.0, rel=1e-8)
    c = induced_poly_case_I_coeffs(m)
    assert c[m] * 2 ** (m - 1) == pytest.approx(1.0)


def test_induced_poly_case_I_zeta_route():
    zeta = 1.3 * np.exp(1j * np.linspace(0, np.pi, 9))
    z = joukowski(zeta)
    from numpy.polynomial import chebyshev as C
    for m in range(1, 13):
        np.testing.assert_allclose(induced_poly_case_I(m, z), C.chebval(z, induced_poly_case_I_coeffs(m)),
                                   rtol=1e-12)


def test_induced_poly_diag_examples():
    assert induced_poly_diag(CaseId("1", 3), np.cos(np.pi / 6)) == pytest.approx(0.0, abs=1e-15)
    assert induced_poly_diag(CaseId("2", 2), 1.0) == pytest.approx(0.5)
    assert induced_poly_diag(CaseId("3", 4), 2.0) == pytest.approx(12.125)
    assert induced_poly_diag(CaseId("4", 3), 0.4) == pytest.approx(-induced_poly_diag(CaseId("4", 3), -0.4))
    with pytest.raises(UnsupportedCaseError):
        induced_poly_diag(CaseId("I"), 0.5)
    with pytest.raises(UnsupportedCaseError):
        induced_poly(CaseId("2", 3), 4, 0.5)


@pytest.mark.parametrize("case", [c for c in all_cases(20) if c.tag != "I"])
def test_diag_poly_orthogonal(case):
    n = case.n
    npts = 4 * n + 64
    theta = (np.arange(npts) + 0.5) * np.pi / npts
    p = induced_poly_diag(case, np.cos(theta))
    g = theta_density(case, theta)
    mass = modified_moment(case, 0)
    for k in range(n):
        assert abs(np.pi / npts * np.sum(p * np.cos(k * theta) * g)) <= 1e-11 * mass
