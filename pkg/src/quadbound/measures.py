"""Chebyshev weights, induced measures and their modified moments.

Every induced measure becomes g(theta) d(theta) on [0, pi] after t = cos(theta),
with g a finite cosine polynomial. Storing the cosine coefficients of g makes
the Chebyshev-T moments exact:

    int T_k dsigma = int_0^pi cos(k theta) g(theta) d(theta)
                   = pi c_0 (k = 0),  (pi/2) c_k (k >= 1).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as C

from .errors import DomainError, UnsupportedCaseError
from .geometry import ZETA_FORM_THRESHOLD, cheb_eval, inverse_joukowski

TAGS = ("I", "1", "2", "3", "4")


@dataclass(frozen=True)
class CaseId:
    """Induced measure selector.

    tag "I" is the measure t^2/sqrt(1-t^2) dt (first-kind weight induced by
    pi_1 = t) with a free rule size m; tags "1".."4" are the diagonal cases,
    where the rule size equals n.
    """

    tag: str
    n: int = 1

    def __post_init__(self):
        tag = str(self.tag).upper()
        if tag not in TAGS:
            raise DomainError(f"unknown case {self.tag!r}; expected one of {TAGS}")
        object.__setattr__(self, "tag", tag)
        if int(self.n) != self.n or self.n < 1:
            raise DomainError("n must be a positive integer")
        if tag == "I" and self.n != 1:
            raise DomainError("case I has n = 1")
        if tag == "1" and self.n < 2:
            raise DomainError("case 1 requires n > 1 (n = 1 is case I)")

    @property
    def diagonal(self) -> bool:
        return self.tag != "I"

    def __str__(self):
        return "CaseI" if self.tag == "I" else f"Case{self.tag}(n={self.n})"


def case_id(tag, n: int = 1) -> CaseId:
    return CaseId(str(tag), n)


def check_size(case: CaseId, size: int) -> None:
    if int(size) != size or size < 1:
        raise UnsupportedCaseError(f"size must be a positive integer, got {size!r}")
    if case.diagonal and size != case.n:
        raise UnsupportedCaseError(
            f"{case}: only the diagonal rule size == n = {case.n} is available, got {size}")


def _check_open(t):
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) >= 1):
        raise DomainError("t must lie in (-1, 1)")
    return t


def weight_value(i: int, t):
    """Chebyshev weight of kind i at t in (-1, 1).

    1: (1-t^2)^(-1/2); 2: (1-t^2)^(1/2); 3: sqrt((1-t)/(1+t)); 4: sqrt((1+t)/(1-t)).
    """
    t = _check_open(t)
    if i == 1:
        return 1.0 / np.sqrt(1 - t * t)
    if i == 2:
        return np.sqrt(1 - t * t)
    if i == 3:
        return np.sqrt((1 - t) / (1 + t))
    if i == 4:
        return np.sqrt((1 + t) / (1 - t))
    raise DomainError(f"weight kind must be 1..4, got {i!r}")


def induced_weight_value(case: CaseId, t):
    """Density of the induced measure with respect to dt."""
    t = _check_open(t)
    n = case.n
    if case.tag == "I":
        return t * t / np.sqrt(1 - t * t)
    if case.tag == "1":
        return cheb_eval("T", True, n, t) ** 2 / np.sqrt(1 - t * t)
    if case.tag == "2":
        return cheb_eval("U", True, n, t) ** 2 * np.sqrt(1 - t * t)
    if case.tag == "3":
        return cheb_eval("V", True, n, t) ** 2 * np.sqrt((1 + t) / (1 - t))
    return induced_weight_value(CaseId("3", n), -t)


def density_coeffs(case: CaseId) -> np.ndarray:
    """Cosine coefficients c_j of the theta-density g = sum_j c_j cos(j theta)."""
    n = case.n
    if case.tag == "I":
        c = np.zeros(3)
        c[0] = c[2] = 0.5                          # cos^2
        return c
    if case.tag == "1":
        c = np.zeros(2 * n + 1)
        c[0] = c[2 * n] = 0.5 / 4.0 ** (n - 1)     # cos^2(n theta) / 4^(n-1)
        return c
    if case.tag == "2":
        c = np.zeros(2 * n + 3)
        c[0] = 0.5 / 4.0 ** n                       # sin^2((n+1) theta) / 4^n
        c[2 * n + 2] = -0.5 / 4.0 ** n
        return c
    c = np.zeros(2 * n + 2)
    sign = 1.0 if case.tag == "3" else -1.0        # (1 +- cos((2n+1) theta)) / 4^n
    c[0] = 1.0 / 4.0 ** n
    c[2 * n + 1] = sign / 4.0 ** n
    return c


def theta_density(case: CaseId, theta):
    c = density_coeffs(case)
    theta = np.asarray(theta, dtype=float)
    return np.cos(np.multiply.outer(theta, np.arange(len(c)))) @ c


def modified_moment(case: CaseId, k: int) -> float:
    """int T_k(t) dsigma_hat(t), exact."""
    if k < 0:
        raise DomainError("moment index must be nonnegative")
    c = density_coeffs(case)
    if k == 0:
        return np.pi * c[0]
    return 0.5 * np.pi * c[k] if k < len(c) else 0.0


def moment_vector(case: CaseId, count: int) -> np.ndarray:
    return np.array([modified_moment(case, k) for k in range(count)])


def induced_poly_case_I_coeffs(m: int) -> np.ndarray:
    """Chebyshev-T coefficients of the monic degree-m polynomial orthogonal
    with respect to t^2/sqrt(1-t^2) dt."""
    if m < 1:
        raise DomainError("m must be >= 1")
    c = np.zeros(m + 1)
    for j in range(m // 2 + 1):
        deg = m - 2 * j
        if m % 2 == 0:
            c[deg] = (-1) ** j / 2.0 ** (m - 1)
        else:
            c[deg] = (-1) ** j / 2.0 ** (m - 1) * deg / m
    if m % 2 == 0:
        c[0] *= 0.5                                 # T_0 enters with half weight
    return c


def induced_poly_case_I(m: int, z):
    """Monic induced polynomial of case I, degree m, at real or complex z."""
    c = induced_poly_case_I_coeffs(m)
    z = np.asarray(z)
    real_in = not np.iscomplexobj(z)
    zc = z.astype(complex)
    big = np.abs(zc) > ZETA_FORM_THRESHOLD
    out = np.empty(zc.shape, dtype=complex)
    if np.any(big):
        zeta = inverse_joukowski(zc[big])
        # only nonpositive powers inside the sum, leading power factored out
        w = 1.0 / zeta
        acc = sum(c[d] * 0.5 * (w ** (m - d) + w ** (m + d)) for d in range(m + 1) if c[d] != 0)
        out[big] = zeta ** m * acc
    if np.any(~big):
        out[~big] = C.chebval(zc[~big], c)
    if real_in:
        out = out.real
    return out[()] if out.ndim == 0 else out


def induced_poly_diag(case: CaseId, z):
    """Monic polynomial T_n / 2^(n-1) orthogonal for the diagonal induced measure."""
    if not case.diagonal:
        raise UnsupportedCaseError("case I has no diagonal induced polynomial; use induced_poly_case_I")
    return cheb_eval("T", True, case.n, z)


def induced_poly(case: CaseId, size: int, z):
    """Node polynomial of the size-point Gauss rule of the induced measure."""
    check_size(case, size)
    if case.tag == "I":
        return induced_poly_case_I(size, z)
    return induced_poly_diag(case, z)
