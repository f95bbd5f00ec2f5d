import numpy as np
import pytest
from hypothesis import given, strategies as st

from quadbound.errors import AccuracyError, BranchError, UnsupportedCaseError
from quadbound.geometry import inverse_joukowski, joukowski
from quadbound.kernels import (kernel_closed, kernel_oracle, kernel_on_ellipse, kernel_zeta, varrho_closed,
                               varrho_zeta)
from quadbound.measures import CaseId, induced_poly

RHOS = np.linspace(1.05, 4.0, 8)
THETAS = np.linspace(0.0, np.pi, 5)
GRID = [(r, t) for r in RHOS for t in THETAS]          # 40 points


def grid_cases(nmax=10, mmax=12):
    for m in range(1, mmax + 1):
        yield CaseId("I"), m
    for tag in "1234":
        for n in range(1 if tag != "1" else 2, nmax + 1):
            yield CaseId(tag, n), n


# printed closed forms, written directly in zeta as displayed

def printed_case1(n, zeta):
    return np.pi * (3 * zeta ** (2 * n) + 1) / (
        2.0 ** (2 * n - 2) * zeta ** (3 * n) * (zeta - 1 / zeta) * (zeta ** n + zeta ** -n))


def printed_case2(n, zeta):
    return np.pi * (2 * zeta ** (2 * n + 2) - zeta ** (2 * n) - 1) / (
        2.0 ** (2 * n) * zeta ** (3 * n + 2) * (zeta - 1 / zeta) * (zeta ** n + zeta ** -n))


def printed_case3(n, zeta):
    return np.pi * (2 * zeta ** (2 * n + 1) + zeta ** (2 * n) + 1) / (
        2.0 ** (2 * n) * zeta ** (3 * n + 1) * (zeta - 1 / zeta) * (zeta ** n + zeta ** -n))


def printed_case_I_odd(m, zeta):
    s = sum((-1) ** j * (m - 2 * j) * (zeta ** (m - 2 * j) + zeta ** (2 * j - m)) for j in range((m - 1) // 2 + 1))
    return np.pi * ((m + 2) * zeta ** 2 + m) / (zeta ** (m + 2) * (zeta - 1 / zeta) * s)


def printed_case_I_even(m, zeta):
    return np.pi * (zeta ** 2 + 1) ** 2 * (1 + (-1) ** (m // 2) * zeta ** m) / (
        zeta ** 2 * (zeta - 1 / zeta) * (zeta ** (2 * m + 2) + 1))


def test_kernel_value_fields():
    kv = kernel_closed(CaseId("2", 3), 3, 0.3 + 0.9j)
    assert abs(joukowski(kv.zeta) - kv.z) <= 1e-12
    assert abs(kv.zeta) > 1


def test_case1_example():
    kv = kernel_closed(CaseId("1", 2), 2, 1.25)
    expected = np.pi * (3 * 2 ** 4 + 1) / (2 ** 2 * 2 ** 6 * (2 - 0.5) * (2 ** 2 + 2 ** -2))
    assert kv.value == pytest.approx(expected, rel=1e-14)
    assert kv.value == pytest.approx(0.0943248, rel=1e-6)
    assert kv.value == pytest.approx(kernel_oracle(CaseId("1", 2), 2, 1.25), rel=1e-12)


def test_case3_asymptotics():
    # the displayed normalisation tends to 1; the kernel of V^2 sqrt((1+t)/(1-t)) dt is twice that
    for zeta in (1e3, 1e5):
        k = kernel_zeta(CaseId("3", 1), 1, zeta)
        assert (k / 2 * zeta ** 3 * 4 / (2 * np.pi)).real == pytest.approx(1.0, rel=2e-3)
        assert k == pytest.approx(2 * printed_case3(1, zeta), rel=1e-12)


def test_case_I_even_example_at_3i():
    z = joukowski(3j)
    kv = kernel_closed(CaseId("I"), 2, z)
    assert kv.value == pytest.approx(kernel_oracle(CaseId("I"), 2, z), rel=1e-12)
    # the displayed even-m form carries the extra factor 1 + (-1)^(m/2) zeta^m = 1 - (3i)^2 = 10
    assert printed_case_I_even(2, 3j) == pytest.approx(10 * kv.value, rel=1e-12)


@pytest.mark.parametrize("n", range(2, 11))
def test_case1_and_2_match_display(n):
    zeta = 1.7 * np.exp(0.4j)
    assert kernel_zeta(CaseId("1", n), n, zeta) == pytest.approx(printed_case1(n, zeta), rel=1e-13)
    assert kernel_zeta(CaseId("2", n), n, zeta) == pytest.approx(printed_case2(n, zeta), rel=1e-13)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9, 11])
def test_case_I_odd_matches_display(m):
    for zeta in (1.3, 2.0 * np.exp(1.1j), -3.0 + 0.5j):
        assert kernel_zeta(CaseId("I"), m, zeta) == pytest.approx(printed_case_I_odd(m, zeta), rel=1e-12)


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10, 12])
def test_case_I_even_display_off_by_factor(m):
    for zeta in (1.3, 2.0 * np.exp(1.1j)):
        ratio = printed_case_I_even(m, zeta) / kernel_zeta(CaseId("I"), m, zeta)
        assert ratio == pytest.approx(1 + (-1) ** (m // 2) * zeta ** m, rel=1e-12)


@pytest.mark.parametrize("case, size", list(grid_cases()), ids=str)
def test_oracle_equivalence_grid(case, size):
    for rho, theta in GRID:
        z = joukowski(rho * np.exp(1j * theta))
        closed = kernel_closed(case, size, z).value
        ref = kernel_oracle(case, size, z)
        assert abs(closed - ref) <= 1e-9 * abs(ref), (rho, theta)


@pytest.mark.parametrize("n", range(1, 11))
def test_case4_reflection(n):
    for rho, theta in GRID[::3]:
        z = joukowski(rho * np.exp(1j * theta))
        k4 = kernel_closed(CaseId("4", n), n, z).value
        k3 = kernel_closed(CaseId("3", n), n, -z).value
        assert abs(k4 + k3) <= 1e-12 * abs(k3)
        assert abs(-k3 - kernel_oracle(CaseId("4", n), n, z)) <= 1e-9 * abs(k3)


def test_off_axis_example_all_cases():
    z = 0.3 + 0.9j
    for case, size in grid_cases(8, 8):
        assert kernel_closed(case, size, z).value == pytest.approx(kernel_oracle(case, size, z), rel=1e-10)


@given(st.sampled_from(list(grid_cases(6, 6))), st.floats(1.02, 6.0), st.floats(0.0, 2 * np.pi))
def test_schwarz_symmetry(cs, rho, theta):
    case, size = cs
    zeta = rho * np.exp(1j * theta)
    a = kernel_zeta(case, size, zeta)
    b = kernel_zeta(case, size, np.conj(zeta))
    assert abs(b - np.conj(a)) <= 1e-13 * abs(a)
    assert abs(varrho_zeta(case, size, np.conj(zeta)) - np.conj(varrho_zeta(case, size, zeta))) <= \
        1e-13 * abs(varrho_zeta(case, size, zeta))


@given(st.sampled_from(list(grid_cases(8, 8))), st.floats(1.05, 5.0), st.floats(0.0, np.pi))
def test_kernel_is_varrho_over_poly(cs, rho, theta):
    case, size = cs
    z = joukowski(rho * np.exp(1j * theta))
    k = kernel_closed(case, size, z).value
    assert abs(k - varrho_closed(case, size, z) / induced_poly(case, size, z)) <= 1e-11 * abs(k)


@pytest.mark.parametrize("tag", "1234")
@pytest.mark.parametrize("n", [2, 5, 10])
def test_decay_rate(tag, n):
    case = CaseId(tag, n)
    k10, k100 = (abs(kernel_zeta(case, n, r)) for r in (10.0, 100.0))
    slope = np.log(k100 / k10) / np.log(10.0)
    assert abs(slope + (2 * n + 1)) <= 0.05


def test_varrho_examples():
    z = 1.25
    expected = (np.pi / 4) * 0.25 * (2 / 1.5) * (2 / 2 - 1 / 8 - 1 / 32)
    assert varrho_closed(CaseId("2", 1), 1, z) == pytest.approx(expected, rel=1e-14)
    for n in (2, 3, 6):
        zeta = 1e4
        lead = varrho_zeta(CaseId("1", n), n, zeta) * zeta ** (n + 1)
        assert lead.real == pytest.approx(6 * np.pi / 2 ** (3 * n - 1), rel=1e-6)


def test_no_overflow_far_out():
    for case, size in [(CaseId("1", 20), 20), (CaseId("I"), 25), (CaseId("3", 20), 20)]:
        k = kernel_zeta(case, size, 300.0 * np.exp(0.2j))
        assert np.isfinite(k) and k != 0


def test_kernel_on_ellipse_broadcast():
    v = kernel_on_ellipse(CaseId("2", 3), 3, [1.5, 2.0], np.linspace(0, np.pi, 7))
    assert v.shape == (2, 7)
    assert v[1, 3] == pytest.approx(kernel_zeta(CaseId("2", 3), 3, 2.0j))


def test_errors():
    with pytest.raises(BranchError):
        kernel_closed(CaseId("1", 3), 3, 0.2)
    with pytest.raises(AccuracyError):
        kernel_oracle(CaseId("1", 3), 3, 0.2 + 1e-7j)
    with pytest.raises(UnsupportedCaseError):
        kernel_closed(CaseId("1", 3), 4, 2.0)


@pytest.mark.parametrize("case, size", list(grid_cases(10, 12)), ids=str)
def test_profile_proportional_to_modulus_squared(case, size):
    from quadbound.kernels import kernel_profile
    rho = np.array([1.02, 1.3, 2.5])
    theta = np.linspace(0, np.pi, 65)
    q = kernel_profile(case, size, rho, theta) / np.abs(kernel_on_ellipse(case, size, rho, theta)) ** 2
    np.testing.assert_allclose(q / q[:, :1], 1.0, rtol=1e-10)
