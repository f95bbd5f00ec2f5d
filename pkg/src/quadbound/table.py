"""Table rows: bounds, actual error and integral for (size, omega) pairs."""
from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .bounds import bound_r1, bound_r2, bound_r3
from .errors import UnsupportedCaseError
from .functions import chebyshev_coefficient, make
from .gauss import apply_rule, gauss_rule, reference_integral, remainder_series
from .measures import CaseId, check_size

COLUMNS = ["size", "omega", "r1", "r2", "r3", "error", "integral", "rho1", "rho2", "rho3", "flags"]
# the series and direct error routes must agree to ROUTE_RTOL relative plus
# the rounding floor of the direct difference
ROUTE_RTOL = 1e-3
ERROR_FLOOR = 5e-16


@dataclass(frozen=True)
class TableRequest:
    case: str
    function: str
    omegas: tuple
    sizes: tuple
    format: str = "csv"
    rho_step: Optional[float] = None
    compare: bool = False


@dataclass
class TableRow:
    size: int
    omega: float
    r1: float
    r2: Optional[float]
    r3: Optional[float]
    error: float
    integral: float
    rho1: float
    rho2: Optional[float]
    rho3: Optional[float]
    flags: list = field(default_factory=list)

    def as_dict(self):
        return {k: getattr(self, k) for k in COLUMNS}


def _case_for(tag: str, size: int) -> CaseId:
    return CaseId(tag, 1) if str(tag).upper() == "I" else CaseId(tag, size)


def validate(req: TableRequest) -> None:
    if not req.sizes:
        raise UnsupportedCaseError("sizes list is empty")
    if not req.omegas:
        raise UnsupportedCaseError("omegas list is empty")
    if req.function not in ("f0", "f1"):
        raise UnsupportedCaseError(f"function must be f0 or f1, got {req.function!r}")
    if req.format not in ("csv", "json", "pretty"):
        raise UnsupportedCaseError(f"unknown format {req.format!r}")
    for s in req.sizes:
        try:
            check_size(_case_for(req.case, s), s)
        except ValueError as exc:
            raise UnsupportedCaseError(f"size {s} invalid for case {req.case}: {exc}") from exc
    for w in req.omegas:
        if not w > 0:
            raise UnsupportedCaseError("omega must be positive")


def compute_row(tag: str, fn: str, size: int, omega: float, rho_step=None) -> TableRow:
    case = _case_for(tag, size)
    f = make(fn, omega)
    flags = []
    b1 = bound_r1(case, size, f, rho_step)
    flags += list(b1.flags)
    b2 = b3 = None
    if case.diagonal:
        b2 = bound_r2(case, size, f, rho_step)
        b3 = bound_r3(case, size, f, rho_step)
        flags += [x for x in b2.flags + b3.flags if x not in flags]
    integral = reference_integral(case, f)
    err = abs(remainder_series(case, size, lambda k: chebyshev_coefficient(f, k), even=f.even))
    direct = abs(integral - apply_rule(gauss_rule(case, size), f))
    if abs(direct - err) > ROUTE_RTOL * err + 100 * ERROR_FLOOR * abs(integral):
        flags.append("error-routes-disagree")
    if case.tag == "I" and size % 2 == 0 and "even-m" not in flags:
        flags.append("even-m")
    return TableRow(size, omega, b1.value, b2 and b2.value, b3 and b3.value, err, integral,
                    b1.rho_opt, b2 and b2.rho_opt, b3 and b3.rho_opt, flags)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("QUADBOUND_THREADS", "1")))
    except ValueError:
        return 1


def run_table(req: TableRequest) -> list:
    """One row per (size, omega), in request order (omega outer, size inner)."""
    validate(req)
    jobs = [(s, w) for w in req.omegas for s in req.sizes]
    work = lambda sw: compute_row(req.case, req.function, sw[0], sw[1], req.rho_step)
    nthreads = _threads()
    if nthreads > 1:
        with ThreadPoolExecutor(nthreads) as pool:
            rows = list(pool.map(work, jobs))
    else:
        rows = [work(j) for j in jobs]
    if req.compare:
        from .golden import compare_row
        for row in rows:
            row.flags += compare_row(req.case, req.function, row)
    return rows


def _fmt6(v):
    return "" if v is None else f"{v:.5e}"


def pretty_number(v, digits: int = 3) -> str:
    """1.026e-14 -> '1.026(-14)'."""
    if v is None:
        return "-"
    if v == 0:
        return f"{0:.{digits}f}(+0)"
    e = int(math.floor(math.log10(abs(v))))
    m = v / 10.0 ** e
    if round(abs(m), digits) >= 10:
        m /= 10
        e += 1
    return f"{m:.{digits}f}({e:+d})"


def emit(rows, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow([r.size, repr(float(r.omega))] + [_fmt6(getattr(r, k)) for k in COLUMNS[2:-1]]
                       + [";".join(r.flags)])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
    if fmt == "pretty":
        head = ["size,omega", "r1", "r2", "r3", "Error", "I"]
        body = [[f"{r.size}, {r.omega:g}", pretty_number(r.r1), pretty_number(r.r2), pretty_number(r.r3),
                 pretty_number(r.error), pretty_number(r.integral, 4)] + ([" ".join(r.flags)] if r.flags else [])
                for r in rows]
        widths = [max(len(x[i]) for x in [head] + body) for i in range(len(head))]
        out = ["  ".join(h.ljust(wd) for h, wd in zip(head, widths))]
        for b in body:
            cells = [c.ljust(wd) for c, wd in zip(b, widths)] + b[len(head):]
            out.append("  ".join(cells).rstrip())
        return "\n".join(out) + "\n"
    raise UnsupportedCaseError(f"unknown format {fmt!r}")


def parse_csv(text: str) -> list:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        num = lambda k: float(rec[k]) if rec[k] != "" else None
        rows.append(TableRow(int(rec["size"]), float(rec["omega"]), num("r1"), num("r2"), num("r3"),
                             num("error"), num("integral"), num("rho1"), num("rho2"), num("rho3"),
                             [x for x in rec["flags"].split(";") if x]))
    return rows
