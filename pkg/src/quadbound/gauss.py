"""Gauss rules for the induced measures.

Recurrence coefficients come from exact Chebyshev-T modified moments through
the modified Chebyshev (Wheeler) algorithm; nodes and weights from the Jacobi
matrix by an implicit-shift QL iteration that tracks only the first row of
the eigenvector matrix (Golub-Welsch).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import AccuracyError, ConvergenceError, InstabilityError, NumericError
from .measures import CaseId, check_size, density_coeffs, moment_vector


@dataclass(frozen=True)
class RecurrenceCoeffs:
    alpha: np.ndarray
    beta: np.ndarray


@dataclass(frozen=True)
class GaussRule:
    case: CaseId
    size: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)


def _frozen(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def modified_chebyshev(mom, count):
    """Wheeler's algorithm with monic Chebyshev-T auxiliaries.

    mom[k] = int T_k dsigma for k < 2 count. The monic auxiliaries satisfy
    p_{k+1} = t p_k - b_k p_{k-1} with b_1 = 1/2, b_k = 1/4 (k >= 2).
    """
    if len(mom) < 2 * count:
        raise ValueError("need 2*count moments")
    L = 2 * count
    m = np.array(mom[:L], dtype=float)
    m[1:] = m[1:] / 2.0 ** np.arange(L - 1)          # moments of monic T_k
    b = np.full(L, 0.25)
    b[0], b[1] = 0.0, 0.5
    alpha = np.zeros(count)
    beta = np.zeros(count)
    sig_prev = np.zeros(L)
    sig = m.copy()
    alpha[0] = sig[1] / sig[0]
    beta[0] = sig[0]
    if not beta[0] > 0:
        raise InstabilityError(0, beta[0])
    for k in range(1, count):
        nxt = np.zeros(L)
        for l in range(k, L - k):
            nxt[l] = sig[l + 1] - alpha[k - 1] * sig[l] - beta[k - 1] * sig_prev[l] + b[l] * sig[l - 1]
        if not nxt[k] > 0:
            raise InstabilityError(k, nxt[k])
        alpha[k] = nxt[k + 1] / nxt[k] - sig[k] / sig[k - 1]
        beta[k] = nxt[k] / sig[k - 1]
        sig_prev, sig = sig, nxt
    return alpha, beta


def recurrence_coeffs(case: CaseId, count: int) -> RecurrenceCoeffs:
    if count < 1:
        raise ValueError("count must be >= 1")
    alpha, beta = modified_chebyshev(moment_vector(case, 2 * count), count)
    return RecurrenceCoeffs(_frozen(alpha), _frozen(beta))


def tridiag_eig_first(diag, off, tol: float = 1e-14, max_sweeps: int = 50):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Implicit-shift QL with Wilkinson-type shifts. diag has length n, off has
    length n-1. Returns (eigenvalues, first components), unsorted.
    """
    d = np.array(diag, dtype=float)
    n = len(d)
    e = np.zeros(n)
    e[: n - 1] = off
    z = np.zeros(n)
    z[0] = 1.0
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= tol * dd:
                    break
                m += 1
            if m == l:
                break
            if sweeps == max_sweeps:
                raise ConvergenceError(f"QL iteration failed for eigenvalue {l}")
            sweeps += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + np.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                bb = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s, c = f / r, g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * bb
                p = s * r
                d[i + 1] = g + p
                g = c * r - bb
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z


def first_components(alpha, beta, nodes):
    """Squared first components of the normalised Jacobi eigenvectors at the given eigenvalues.

    The eigenvector for eigenvalue x is (q_0(x), ..., q_{n-1}(x)) with q_k the
    orthonormal polynomials scaled so q_0 = 1. Building it from the recurrence
    keeps full relative accuracy in the small components, which the rotations
    accumulated by QL do not. The sum runs in extended precision where available.
    """
    x = np.asarray(nodes, dtype=np.longdouble)
    alpha = np.asarray(alpha, dtype=np.longdouble)
    sb = np.sqrt(np.asarray(beta, dtype=np.longdouble))
    q_prev, q = np.zeros_like(x), np.ones_like(x)
    total = np.ones_like(x)
    for k in range(len(alpha) - 1):
        q_prev, q = q, ((x - alpha[k]) * q - (sb[k] if k else 0.0) * q_prev) / sb[k + 1]
        total += q * q
    return np.asarray(1.0 / total, dtype=float)


def newton_polish(alpha, beta, x):
    """One Newton step on the zeros of p_n, with p_n and p_n' from the recurrence.

    alpha has length n, beta length n + 1.
    """
    x = np.asarray(x, dtype=np.longdouble)
    alpha = np.asarray(alpha, dtype=np.longdouble)
    sb = np.sqrt(np.asarray(beta, dtype=np.longdouble))
    q_prev, q = np.zeros_like(x), np.ones_like(x)
    d_prev, d = np.zeros_like(x), np.zeros_like(x)
    for k in range(len(alpha)):
        b = sb[k] if k else 0.0
        q_prev, q, d_prev, d = (q, ((x - alpha[k]) * q - b * q_prev) / sb[k + 1],
                                d, (q + (x - alpha[k]) * d - b * d_prev) / sb[k + 1])
    return np.asarray(x - q / d, dtype=float)


@lru_cache(maxsize=None)
def _rule(case: CaseId, size: int) -> GaussRule:
    rc = recurrence_coeffs(case, size + 1)
    alpha, beta = rc.alpha[:size], rc.beta
    nodes, _ = tridiag_eig_first(alpha, np.sqrt(beta[1:size]))
    nodes = np.sort(newton_polish(alpha, beta, nodes))
    weights = beta[0] * first_components(alpha, beta[:size], nodes)
    return GaussRule(case, size, _frozen(nodes), _frozen(weights))


def gauss_rule(case: CaseId, size: int) -> GaussRule:
    """size-point Gauss rule of the induced measure (cached, read-only arrays)."""
    check_size(case, size)
    return _rule(case, int(size))


def apply_rule(rule: GaussRule, f: Callable) -> float:
    vals = np.asarray(f(rule.nodes), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise NumericError("integrand is not finite at a node")
    return float(np.dot(rule.weights, vals))


def theta_integral(case: CaseId, f: Callable, npts: int) -> tuple[float, float]:
    """Midpoint (Gauss-Chebyshev) rule in theta; returns (integral, int |f| dsigma)."""
    c = density_coeffs(case)
    theta = (np.arange(npts) + 0.5) * np.pi / npts
    g = np.cos(np.multiply.outer(theta, np.arange(len(c)))) @ c
    fv = np.asarray(f(np.cos(theta)), dtype=float)
    h = np.pi / npts
    return h * np.sum(fv * g), h * np.sum(np.abs(fv * g))


def reference_integral(case: CaseId, f: Callable, rtol: float = 1e-14, max_points: int = 2 ** 20) -> float:
    """int f dsigma_hat by theta-space Gauss-Chebyshev with doubling."""
    npts = 64
    prev, _ = theta_integral(case, f, npts)
    gap = np.inf
    while 2 * npts <= max_points:
        npts *= 2
        cur, scale = theta_integral(case, f, npts)
        gap = abs(cur - prev)
        if gap <= rtol * max(abs(cur), scale):
            return float(cur)
        prev = cur
    raise AccuracyError("reference integral did not converge", estimate=prev, gap=gap)


def actual_error(case: CaseId, size: int, f: Callable) -> float:
    """|reference integral - rule value| in double precision."""
    return abs(reference_integral(case, f) - apply_rule(gauss_rule(case, size), f))


def remainder_on_chebyshev(case: CaseId, size: int, k: int) -> float:
    """R(T_k) = int T_k dsigma_hat - Q(T_k)."""
    rule = gauss_rule(case, size)
    c = density_coeffs(case)
    mom = np.pi * c[0] if k == 0 else (0.5 * np.pi * c[k] if k < len(c) else 0.0)
    tk = np.cos(k * np.arccos(np.clip(rule.nodes, -1.0, 1.0)))
    return mom - float(np.dot(rule.weights, tk))


def remainder_series(case: CaseId, size: int, coeff: Callable[[int], float], even: bool = False,
                     rtol: float = 1e-17, max_terms: int = 4000) -> float:
    """R(f) = sum_{k >= 2 size} a_k R(T_k) from Chebyshev coefficients a_k of f.

    Resolves remainders far below the double-precision floor of the direct
    difference, because each a_k is computed to full relative accuracy.
    """
    rule = gauss_rule(case, size)
    mass = rule.weights.sum()
    total, quiet = 0.0, 0
    k = 2 * size
    step = 1
    if even and k % 2:
        k += 1
    if even:
        step = 2
    for _ in range(max_terms):
        a = coeff(k)
        total += a * remainder_on_chebyshev(case, size, k)
        if abs(a) * 2 * mass <= rtol * abs(total):
            quiet += 1
            if quiet >= 4:
                return total
        else:
            quiet = 0
        k += step
    raise AccuracyError("Chebyshev remainder series did not converge", estimate=total)
