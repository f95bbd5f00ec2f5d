"""Integrands used for the bounds: f0 = exp(w t^2), f1 = exp(cos(w t)) and custom."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError
from .geometry import EllipseParam


@dataclass(frozen=True)
class TestFunction:
    """Analytic integrand with optional closed-form log sup-norm on E_rho.

    log_eval gives log f(z) (any branch) for complex z; it lets Chebyshev
    coefficients be formed without overflow.
    """

    __test__ = False  # not a pytest class

    tag: str
    omega: float
    eval: Callable
    log_eval: Callable
    log_sup_closed: Optional[Callable[[float], float]] = None
    even: bool = False
    rho_f: float = np.inf

    def __call__(self, t):
        return self.eval(t)


def f0(omega: float) -> TestFunction:
    if not omega > 0:
        raise DomainError("omega must be positive")
    return TestFunction(
        "f0", omega,
        lambda t: np.exp(omega * np.asarray(t) ** 2),
        lambda z: omega * np.asarray(z) ** 2,
        lambda rho: omega * (0.5 * (rho + 1.0 / rho)) ** 2,
        even=True,
    )


def f1(omega: float) -> TestFunction:
    if not omega > 0:
        raise DomainError("omega must be positive")
    return TestFunction(
        "f1", omega,
        lambda t: np.exp(np.cos(omega * np.asarray(t))),
        lambda z: np.cos(omega * np.asarray(z)),
        lambda rho: np.cosh(omega * 0.5 * (rho - 1.0 / rho)),
        even=True,
    )


def custom(fn: Callable, rho_f: float = np.inf, even: bool = False, log_fn: Optional[Callable] = None) -> TestFunction:
    """Wrap a vectorised complex-capable f; sup-norms are then found numerically.

    log_fn, if given, returns log f(z) directly and avoids overflow for fast-growing f.
    """
    log_eval = log_fn if log_fn is not None else (lambda z: np.log(fn(z) + 0j))
    return TestFunction("custom", 0.0, fn, log_eval, None, even, rho_f)


def make(tag: str, omega: float) -> TestFunction:
    if tag == "f0":
        return f0(omega)
    if tag == "f1":
        return f1(omega)
    raise DomainError(f"unknown test function {tag!r}")


def _log_sup_numeric(f: TestFunction, rho: float, npts: int = 1024) -> float:
    theta = 2 * np.pi * np.arange(npts) / npts
    z = 0.5 * (rho * np.exp(1j * theta) + np.exp(-1j * theta) / rho)
    v = np.real(f.log_eval(z))
    i = int(np.argmax(v))
    h = 2 * np.pi / npts

    def neg(th):
        zz = 0.5 * (rho * np.exp(1j * th) + np.exp(-1j * th) / rho)
        return -float(np.real(f.log_eval(zz)))

    res = minimize_scalar(neg, bounds=(theta[i] - h, theta[i] + h), method="bounded",
                          options={"xatol": 1e-12})
    return max(v[i], -res.fun)


def log_sup_norm(f: TestFunction, rho) -> float:
    if f.log_sup_closed is not None:
        with np.errstate(over="ignore"):
            return f.log_sup_closed(rho)
    return _log_sup_numeric(f, float(rho))


def sup_norm(f: TestFunction, e: EllipseParam) -> float:
    """max |f| on E_rho."""
    with np.errstate(over="ignore"):
        return float(np.exp(log_sup_norm(f, e.rho)))


def chebyshev_coefficient(f: TestFunction, k: int) -> float:
    """a_k in f = sum' a_k T_k, to full relative accuracy.

    a_k = 2 * mean over |zeta| = R of f(J(zeta)) zeta^-k, with R at the saddle
    of log sup - k log R so the summands carry no wasted dynamic range.
    """
    upper = np.log(min(f.rho_f, 1e6)) if np.isfinite(f.rho_f) else np.log(1e6)
    upper = upper - 1e-9 if np.isfinite(f.rho_f) else upper

    def obj(s):
        return float(log_sup_norm(f, np.exp(s))) - k * s

    grid = np.linspace(1e-3, upper, 400)
    vals = np.array([obj(s) for s in grid])
    vals[~np.isfinite(vals)] = np.inf
    i = int(np.argmin(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    s = minimize_scalar(obj, bounds=(lo, hi), method="bounded", options={"xatol": 1e-8}).x
    npts = max(2 * k + 64, 256)
    phi = 2 * np.pi * np.arange(npts) / npts
    zeta = np.exp(s + 1j * phi)
    z = 0.5 * (zeta + 1.0 / zeta)
    shift = obj(s)
    vals = np.exp(f.log_eval(z) - k * (s + 1j * phi) - shift)
    coef = 2 * np.mean(vals).real * np.exp(shift)
    return coef
