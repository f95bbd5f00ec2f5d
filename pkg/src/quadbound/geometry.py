"""Joukowski geometry of the ellipses E_rho and Chebyshev polynomial evaluation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BranchError, DomainError

# |z| above which Chebyshev values are taken from the zeta form instead of the
# three-term recurrence (the recurrence loses digits to growth for large |z|)
ZETA_FORM_THRESHOLD = 1.2
CUT_TOL = 1e-13


@dataclass(frozen=True)
class EllipseParam:
    """Ellipse with foci +-1 and sum of semi-axes rho."""

    rho: float

    def __post_init__(self):
        if not np.isfinite(self.rho) or self.rho <= 1.0:
            raise DomainError(f"rho must be > 1, got {self.rho!r}")

    @property
    def a1(self) -> float:
        return 0.5 * (self.rho + 1.0 / self.rho)

    @property
    def b1(self) -> float:
        return 0.5 * (self.rho - 1.0 / self.rho)

    def a(self, m: int) -> float:
        """a_m = (rho^m + rho^-m)/2."""
        return 0.5 * (self.rho ** m + self.rho ** (-m))


def joukowski(zeta):
    zeta = np.asarray(zeta, dtype=complex)
    if np.any(zeta == 0):
        raise DomainError("joukowski is undefined at zeta = 0")
    out = 0.5 * (zeta + 1.0 / zeta)
    return out[()] if out.ndim == 0 else out


def inverse_joukowski(z):
    """Preimage zeta with |zeta| > 1 of z under the Joukowski map.

    Both roots z +- sqrt(z^2 - 1) are formed and the one outside the unit
    circle is kept; points on [-1, 1] give |zeta| = 1 for both and are rejected.
    """
    z = np.asarray(z, dtype=complex)
    s = np.sqrt(z * z - 1.0)
    zp, zm = z + s, z - s
    ap, am = np.abs(zp), np.abs(zm)
    on_cut = (np.abs(z.imag) <= CUT_TOL) & (np.abs(z.real) <= 1.0 + CUT_TOL)
    if np.any(on_cut) or np.any(np.abs(ap - am) == 0):
        raise BranchError("point on the cut [-1, 1]")
    out = np.where(ap > am, zp, zm)
    return out[()] if out.ndim == 0 else out


def ellipse_point(e: EllipseParam, theta):
    return joukowski(e.rho * np.exp(1j * np.asarray(theta, dtype=float)))


def _zeta_form(kind, k, zeta):
    if kind == "T":
        return 0.5 * (zeta ** k + zeta ** (-k))
    if kind == "U":
        return (zeta ** (k + 1) - zeta ** (-k - 1)) / (zeta - 1.0 / zeta)
    # V_k(z) = (zeta^(k+1) + zeta^-k) / (zeta + 1)
    return (zeta ** (k + 1) + zeta ** (-k)) / (zeta + 1.0)


def _recurrence(kind, k, z):
    p0 = np.ones_like(z)
    if k == 0:
        return p0
    p1 = {"T": z, "U": 2 * z, "V": 2 * z - 1}[kind]
    for _ in range(k - 1):
        p0, p1 = p1, 2 * z * p1 - p0
    return p1


def cheb_eval(kind: str, monic: bool, k: int, z):
    """Chebyshev polynomial of the first (T), second (U) or third (V) kind.

    Monic scalings: T_k / 2^(k-1) (k >= 1), U_k / 2^k, V_k / 2^k.
    """
    if kind not in ("T", "U", "V"):
        raise DomainError(f"unknown Chebyshev kind {kind!r}")
    if k < 0:
        raise DomainError("degree must be nonnegative")
    z = np.asarray(z)
    real_in = not np.iscomplexobj(z)
    zc = z.astype(complex)
    big = np.abs(zc) > ZETA_FORM_THRESHOLD
    out = np.empty(zc.shape, dtype=complex)
    if np.any(big):
        zeta = inverse_joukowski(zc[big])
        out[big] = _zeta_form(kind, k, zeta)
    if np.any(~big):
        out[~big] = _recurrence(kind, k, zc[~big])
    if monic:
        if kind == "T":
            out = out / 2.0 ** (k - 1) if k > 0 else out
        else:
            out = out / 2.0 ** k
    if real_in:
        out = out.real
    return out[()] if out.ndim == 0 else out


def ellipse_length_upper(e: EllipseParam) -> float:
    """Series upper estimate of the perimeter of E_rho."""
    a = e.a1
    return 2 * np.pi * a * (1 - 0.25 * a ** -2 - 3 / 64 * a ** -4 - 5 / 256 * a ** -6)


def ellipse_perimeter(e: EllipseParam, npts: int = 512) -> float:
    """Perimeter of E_rho by the trapezoid rule on |dz/dtheta|."""
    theta = 2 * np.pi * np.arange(npts) / npts
    zeta = e.rho * np.exp(1j * theta)
    return 2 * np.pi * np.mean(0.5 * np.abs(zeta - 1.0 / zeta))
