"""quadbound command line: table, bound, rhostar, rule."""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import BOUNDS, find_rho_star
from .errors import NumericError, QuadboundError
from .functions import make
from .gauss import gauss_rule
from .measures import CaseId
from .table import TableRequest, emit, run_table

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class UsageError(Exception):
    pass


def _numbers(values, conv):
    out = []
    for v in values:
        for part in str(v).split(","):
            if part.strip():
                try:
                    out.append(conv(part))
                except ValueError:
                    raise UsageError(f"not a number: {part!r}")
    return out


def _case(tag, size):
    return CaseId(tag, 1) if str(tag).upper() == "I" else CaseId(tag, size)


def build_parser():
    p = argparse.ArgumentParser(prog="quadbound", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, many=False):
        sp.add_argument("--case", required=True, choices=["I", "1", "2", "3", "4"])
        sp.add_argument("--size", required=True, nargs="+" if many else None,
                        help="rule size(s); comma or space separated" if many else "rule size")

    t = sub.add_parser("table", help="bounds, actual error and integral per (size, omega)")
    common(t, many=True)
    t.add_argument("--fn", required=True, choices=["f0", "f1"])
    t.add_argument("--omega", required=True, nargs="+")
    t.add_argument("--format", default="csv", choices=["csv", "json", "pretty"])
    t.add_argument("--rho-step", type=float, default=None,
                   help="minimise over the fixed grid rho = 1 + k*step instead of the continuous search")
    t.add_argument("--compare", action="store_true", help="flag cells that differ from published values")

    b = sub.add_parser("bound", help="a single error bound")
    b.add_argument("--family", required=True, choices=sorted(BOUNDS))
    common(b)
    b.add_argument("--fn", required=True, choices=["f0", "f1"])
    b.add_argument("--omega", required=True, type=float)
    b.add_argument("--rho-step", type=float, default=None)

    r = sub.add_parser("rhostar", help="threshold rho* for the max-modulus location")
    common(r)

    q = sub.add_parser("rule", help="nodes and weights of the Gauss rule")
    common(q)
    q.add_argument("--format", default="json", choices=["json"])
    return p


def run(argv=None, out=sys.stdout) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            req = TableRequest(args.case, args.fn, tuple(_numbers(args.omega, float)),
                               tuple(_numbers(args.size, int)), args.format, args.rho_step, args.compare)
            out.write(emit(run_table(req), args.format))
        elif args.command == "bound":
            size = int(args.size)
            res = BOUNDS[args.family](_case(args.case, size), size, make(args.fn, args.omega), args.rho_step)
            out.write(json.dumps({"family": res.family, "value": res.value, "rho_opt": res.rho_opt,
                                  "rho_star": res.rho_star, "flags": list(res.flags)}) + "\n")
        elif args.command == "rhostar":
            size = int(args.size)
            out.write(f"{find_rho_star(_case(args.case, size), size):.4f}\n")
        elif args.command == "rule":
            size = int(args.size)
            rule = gauss_rule(_case(args.case, size), size)
            out.write(json.dumps({"case": args.case, "size": size, "nodes": rule.nodes.tolist(),
                                  "weights": rule.weights.tolist()}) + "\n")
    except UsageError as exc:
        print(f"quadbound: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"quadbound: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (QuadboundError, ValueError) as exc:
        print(f"quadbound: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
