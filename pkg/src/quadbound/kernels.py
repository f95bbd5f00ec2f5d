"""Error kernels K = varrho / pi_hat of the induced Gauss rules.

The remainder of the size-point rule is R(f) = (1/2 pi i) oint K(z) f(z) dz with
varrho(z) = int pi_hat(t) / (z - t) dsigma_hat(t). All closed forms are written
in w = 1/zeta (|w| < 1) with the leading power w^(2 size + 1) explicit, so no
positive power of zeta is ever formed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, UnsupportedCaseError
from .geometry import inverse_joukowski, joukowski
from .measures import CaseId, check_size, density_coeffs, induced_poly, induced_poly_case_I_coeffs


@dataclass(frozen=True)
class KernelValue:
    z: complex
    zeta: complex
    value: complex


def _odd_sum_w(m, w, w2, wm1):
    # S(w) = sum_j (-1)^j (m-2j) (w^(2j) + w^(2m-2j)), i.e. zeta^-m times the
    # two-sided sum in the odd-m kernel; Horner in w^2 for each half
    lo = np.zeros_like(w)
    for j in range((m - 1) // 2, -1, -1):
        lo = lo * w2 + (-1) ** j * (m - 2 * j)
    hi = np.zeros_like(w)
    for j in range((m - 1) // 2 + 1):
        hi = hi * w2 + (-1) ** j * (m - 2 * j)
    # hi holds sum_j c_j w^(2((m-1)/2 - j)); shift to powers 2m-2j
    return lo + hi * wm1


def _kernel(case: CaseId, size: int, power):
    """K in terms of w = 1/zeta; power(k) returns w^k."""
    w, w2 = power(1), power(2)
    if case.tag == "I":
        m = size
        lead = np.pi * power(2 * m + 1) / (1 - w2)
        if m % 2 == 0:
            return lead * (1 + w2) ** 2 / (1 + power(2 * m + 2))
        return lead * ((m + 2) + m * w2) / _odd_sum_w(m, w, w2, power(m + 1))
    n = case.n
    w2n = power(2 * n)
    lead = np.pi * w2n * w / (4.0 ** n * (1 - w2) * (1 + w2n))
    if case.tag == "1":
        return 4 * lead * (3 + w2n)
    if case.tag == "2":
        return lead * (2 - w2 - w2n * w2)
    if case.tag == "3":
        return 2 * lead * (2 + w + w2n * w)
    # reflection t -> -t of case 3: K4(z) = -K3(-z)
    return 2 * lead * (2 - w - w2n * w)


def kernel_zeta(case: CaseId, size: int, zeta):
    """K at z = (zeta + 1/zeta)/2 for |zeta| > 1 (vectorised over zeta)."""
    check_size(case, size)
    w = 1.0 / np.asarray(zeta, dtype=complex)
    cache = {1: w}

    def power(k):
        if k not in cache:
            h = power(k // 2)
            cache[k] = h * h if k % 2 == 0 else h * h * w
        return cache[k]

    return _kernel(case, size, power)


def varrho_zeta(case: CaseId, size: int, zeta):
    """varrho(z) = int pi_hat(t)/(z-t) dsigma_hat(t) at z = J(zeta)."""
    check_size(case, size)
    w = 1.0 / np.asarray(zeta, dtype=complex)
    w2 = w * w
    # int_0^pi cos(k theta)/(z - cos theta) d theta = 2 pi w^(k+1) / (1 - w^2)
    base = 2 * np.pi * w / (1 - w2)
    if case.tag == "I":
        m = size
        if m % 2 == 0:
            return base * (1 + w2) * w ** m / 2.0 ** (m + 1)
        return base * w ** m * ((m + 2) + m * w2) / (m * 2.0 ** (m + 1))
    n = case.n
    pre = base * w ** n / 2.0 ** (3 * n)
    if case.tag == "1":
        return pre * (6 + 2 * w ** (2 * n))
    if case.tag == "2":
        return 0.5 * pre * (2 - w2 - w ** (2 * n + 2))
    if case.tag == "3":
        return pre * (2 + w + w ** (2 * n + 1))
    # varrho4(z) = (-1)^(n+1) varrho3(-z)
    return pre * (2 - w - w ** (2 * n + 1))


def kernel_closed(case: CaseId, size: int, z) -> KernelValue:
    zeta = inverse_joukowski(z)
    return KernelValue(complex(z), complex(zeta), complex(kernel_zeta(case, size, zeta)))


def varrho_closed(case: CaseId, size: int, z) -> complex:
    return complex(varrho_zeta(case, size, inverse_joukowski(z)))


def _poly_on_theta(case: CaseId, size: int, theta):
    if case.tag == "I":
        c = induced_poly_case_I_coeffs(size)
        return np.cos(np.multiply.outer(theta, np.arange(size + 1))) @ c
    return np.cos(case.n * theta) / 2.0 ** (case.n - 1)


def _cut_distance(z):
    x = min(max(z.real, -1.0), 1.0)
    return abs(z - x)


def kernel_oracle(case: CaseId, size: int, z, rtol: float = 1e-12, max_points: int = 2 ** 20) -> complex:
    """K(z) by quadrature, independent of the closed forms.

    Uses varrho(z) pi_hat(z) = int pi_hat(t)^2/(z-t) dsigma_hat(t) (orthogonality
    removes the polynomial part), which has no cancellation, and a midpoint
    rule in theta with doubling until two estimates agree to rtol.
    """
    check_size(case, size)
    z = complex(z)
    if _cut_distance(z) <= 1e-6:
        raise AccuracyError("point too close to the cut for the quadrature oracle")
    c = density_coeffs(case)
    npts, prev = 256, None
    while npts <= max_points:
        theta = (np.arange(npts) + 0.5) * np.pi / npts
        g = np.cos(np.multiply.outer(theta, np.arange(len(c)))) @ c
        p = _poly_on_theta(case, size, theta)
        val = np.pi / npts * np.sum(p * p * g / (z - np.cos(theta)))
        if prev is not None and abs(val - prev) <= rtol * abs(val):
            pz = induced_poly(case, size, z)
            return complex(val / pz ** 2)
        prev, npts = val, 2 * npts
    raise AccuracyError("kernel quadrature did not converge", estimate=prev)


def kernel_on_ellipse(case: CaseId, size: int, rho, theta):
    """K on E_rho at angle(s) theta; broadcasts rho against theta.

    Powers of w = rho^-1 e^(-i theta) are outer products of 1-D factors, which
    avoids complex powers over the whole (rho, theta) grid.
    """
    check_size(case, size)
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    cache = {}

    def power(k):
        if k not in cache:
            cache[k] = np.multiply.outer(rho ** -float(k), np.exp(-1j * k * theta))
        return cache[k]

    return _kernel(case, size, power)


def _poly_mod2(coeffs, rho, theta):
    # |sum_k c_k w^k|^2 on |w| = 1/rho, w = e^(-i theta)/rho, in real arithmetic
    terms = list(coeffs.items())
    out = np.zeros((len(rho), len(theta)))
    out += sum(c * c * rho ** (-2.0 * e) for e, c in terms)[:, None]
    for i, (e1, c1) in enumerate(terms):
        for e2, c2 in terms[i + 1:]:
            out += np.multiply.outer(2 * c1 * c2 * rho ** (-float(e1 + e2)), np.cos((e2 - e1) * theta))
    return out


def kernel_profile(case: CaseId, size: int, rho, theta):
    """|K|^2 on E_rho up to a positive factor depending on rho only.

    Meant for locating the maximum over theta; shape (len(rho), len(theta)).
    """
    check_size(case, size)
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    den = _poly_mod2({0: 1.0, 2: -1.0}, rho, theta)
    if case.tag == "I":
        m = size
        if m % 2 == 0:
            num = _poly_mod2({0: 1.0, 2: 1.0}, rho, theta) ** 2
            return num / (den * _poly_mod2({0: 1.0, 2 * m + 2: 1.0}, rho, theta))
        w = np.multiply.outer(1.0 / rho, np.exp(-1j * theta))
        s = _odd_sum_w(m, w, w * w, np.multiply.outer(rho ** -float(m + 1), np.exp(-1j * (m + 1) * theta)))
        num = _poly_mod2({0: m + 2.0, 2: float(m)}, rho, theta)
        return num / (den * (s.real ** 2 + s.imag ** 2))
    n = case.n
    den = den * _poly_mod2({0: 1.0, 2 * n: 1.0}, rho, theta)
    if case.tag == "1":
        num = {0: 3.0, 2 * n: 1.0}
    elif case.tag == "2":
        num = {0: 2.0, 2: -1.0, 2 * n + 2: -1.0}
    elif case.tag == "3":
        num = {0: 2.0, 1: 1.0, 2 * n + 1: 1.0}
    else:
        num = {0: 2.0, 1: -1.0, 2 * n + 1: -1.0}
    return _poly_mod2(num, rho, theta) / den


def kernel_z(case: CaseId, size: int, z):
    return kernel_zeta(case, size, inverse_joukowski(z))


__all__ = [
    "KernelValue", "kernel_zeta", "varrho_zeta", "kernel_closed", "varrho_closed",
    "kernel_oracle", "kernel_on_ellipse", "kernel_profile", "kernel_z", "joukowski",
]
