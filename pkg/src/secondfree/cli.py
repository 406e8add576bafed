"""Command line front end: enumerate, formula, eval, verify, semicircle, graph.

Exit codes: 0 success, 1 mismatch in verify/semicircle, 2 flag or size-bound
errors, 3 malformed cumulant spec file.  Output is assembled in full before
anything is written, so error paths print nothing to standard output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .annular import enumerate_psnc, enumerate_snc
from .formula_engine import formula, semicircle_closed_form, support_of
from .index_sets import FAMILY_NAMES, family, member_text
from .nc_disk import enumerate_nc
from .oracle import ORACLE_BOUND_PM, ORACLE_BOUND_PROD, extract_cumulants
from .perm_core import Permutation
from .pi_graph import PiGraph, flexible_pairs
from .sym_poly import CumulantSpec

SETS = ("nc", "snc", "psnc") + FAMILY_NAMES
SET_ALIASES = {"spoke": "Spoke", "sncpar": "SncPar", "nc2nonpar": "Nc2NonPar"}


class UsageError(Exception):
    pass


class SpecError(Exception):
    pass


def _set_name(text: str) -> str:
    name = SET_ALIASES.get(text.lower(), text)
    if name not in SETS:
        raise argparse.ArgumentTypeError(f"unknown set {text!r}; choose from {', '.join(SETS)}")
    return name


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="secondfree", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list or count an indexing set")
    e.add_argument("--set", dest="set_name", type=_set_name, required=True, metavar="SET",
                   help="one of " + ", ".join(SETS))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int)
    e.add_argument("--count", action="store_true", help="print only the number of members")
    e.add_argument("--bound", type=int, help="override the default size bound")
    fmt = e.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")

    f = sub.add_parser("formula", help="emit a cumulant formula as a polynomial")
    f.add_argument("--target", required=True, choices=("anti", "comm", "prod", "anti1", "prod1"))
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--m", type=int)
    f.add_argument("--format", default="latex", choices=("latex", "json"))

    v = sub.add_parser("eval", help="evaluate a formula at given cumulant values")
    v.add_argument("--target", required=True, choices=("anti", "comm", "prod", "anti1", "prod1"))
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int)
    v.add_argument("--a", required=True, help="JSON spec file for a")
    v.add_argument("--b", required=True, help="JSON spec file for b")

    r = sub.add_parser("verify", help="compare the engine with the brute-force oracle")
    r.add_argument("--target", required=True, choices=("anti", "comm", "prod"))
    r.add_argument("--max-total", type=int, required=True)
    r.add_argument("--seed", type=int, default=0, help="seed for random specs when --a/--b are absent")
    r.add_argument("--a", help="JSON spec file for a")
    r.add_argument("--b", help="JSON spec file for b")

    s = sub.add_parser("semicircle", help="compare the engine with the semicircular closed form")
    s.add_argument("--target", required=True, choices=("anti", "comm", "prod"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    for name in ("k2a", "k22a", "k2b", "k22b"):
        s.add_argument(f"--{name}", type=Fraction, default=Fraction(1))

    g = sub.add_parser("graph", help="DOT drawing of the graph of a permutation")
    g.add_argument("--pi", required=True, help='cycle notation, e.g. "(1,4)(2,3)"')
    g.add_argument("--n", type=int, required=True, help="outer circle size")
    g.add_argument("--m", type=int, default=0, help="inner circle size")
    return ap


def _load_spec(path: str) -> CumulantSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            return CumulantSpec.from_dict(json.load(fh))
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SpecError(f"malformed spec {path}: {exc}") from None


def _need_m(args) -> int:
    if args.m is None:
        raise UsageError("--m is required here")
    return args.m


def cmd_enumerate(args) -> str:
    name, n = args.set_name, args.n
    kw = {} if args.bound is None else {"bound": args.bound}
    if name == "nc":
        if args.m is not None:
            raise UsageError("set nc takes only --n")
        members = enumerate_nc(n, **kw)
        text_of, dict_of = str, str
        head = {"family": "nc", "n": n}
    else:
        m = _need_m(args)
        if name == "snc":
            members = enumerate_snc(n, m, **kw)
            text_of, dict_of = str, str
        elif name == "psnc":
            members = enumerate_psnc(n, m, **kw)
            text_of, dict_of = member_text, lambda x: x.to_dict()
        else:
            fam = family(name, n, m, **kw)
            if args.fmt == "json":
                return json.dumps(fam.to_dict(with_members=not args.count), ensure_ascii=False) + "\n"
            if args.count:
                return f"{fam.count}\n"
            return "".join(member_text(x) + "\n" for x in fam.members)
        head = {"family": name, "n": n, "m": m}
    if args.fmt == "json":
        head["count"] = len(members)
        if not args.count:
            head["members"] = [dict_of(x) for x in members]
        return json.dumps(head, ensure_ascii=False) + "\n"
    if args.count:
        return f"{len(members)}\n"
    return "".join(text_of(x) + "\n" for x in members)


def cmd_formula(args) -> str:
    poly = formula(args.target, args.n, args.m)
    if args.format == "json":
        return json.dumps(poly.to_dict()) + "\n"
    return poly.to_latex() + "\n"


def cmd_eval(args) -> str:
    a, b = _load_spec(args.a), _load_spec(args.b)
    if args.target not in ("anti1", "prod1"):
        _need_m(args)
    poly = formula(args.target, args.n, args.m, support_of(a, b))
    return f"{poly.evaluate(a, b)}\n"


def random_spec(rng: random.Random, max_total: int) -> CumulantSpec:
    """Random rationals for every cumulant of total order ≤ max_total."""
    def q():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    first = {j: q() for j in range(1, max_total + 1)}
    second = {(j, k): q() for j in range(1, max_total) for k in range(j, max_total - j + 1)}
    return CumulantSpec(first, second)


def verify_table(target: str, max_total: int, a: CumulantSpec, b: CumulantSpec):
    """Rows (label, engine, oracle) for every order up to ``max_total``."""
    k1, k2 = extract_cumulants(target, a, b, max_total)
    rows = []
    first_target = {"anti": "anti1", "prod": "prod1"}.get(target)
    if first_target is not None:
        for k in range(1, max_total + 1):
            rows.append((f"({k})", formula(first_target, k).evaluate(a, b), k1[k]))
    for (p, q), val in sorted(k2.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        rows.append((f"({p},{q})", formula(target, p, q).evaluate(a, b), val))
    return rows


def cmd_verify(args):
    bound = ORACLE_BOUND_PROD if args.target == "prod" else ORACLE_BOUND_PM
    if not 2 <= args.max_total <= bound:
        raise UsageError(f"--max-total must lie in 2..{bound} for target {args.target}")
    if (args.a is None) != (args.b is None):
        raise UsageError("give both --a and --b or neither")
    if args.a is not None:
        a, b = _load_spec(args.a), _load_spec(args.b)
    else:
        rng = random.Random(args.seed)
        a, b = random_spec(rng, args.max_total), random_spec(rng, args.max_total)
    rows = verify_table(args.target, args.max_total, a, b)
    lines = [f"{'order':<8}{'engine':>24}{'oracle':>24}  status"]
    first_bad = None
    for label, eng, orc in rows:
        ok = eng == orc
        lines.append(f"{label:<8}{str(eng):>24}{str(orc):>24}  {'ok' if ok else 'MISMATCH'}")
        if not ok and first_bad is None:
            first_bad = (label, eng, orc)
    if first_bad is None:
        lines.append("PASS")
        return "\n".join(lines) + "\n", 0
    lines.append(f"FAIL at {first_bad[0]}: engine {first_bad[1]} vs oracle {first_bad[2]}")
    return "\n".join(lines) + "\n", 1


def cmd_semicircle(args):
    a = CumulantSpec.semicircle(args.k2a, args.k22a)
    b = CumulantSpec.semicircle(args.k2b, args.k22b)
    engine = formula(args.target, args.n, args.m, support_of(a, b)).evaluate(a, b)
    closed = semicircle_closed_form(args.target, args.n, args.m, args.k2a, args.k22a, args.k2b, args.k22b)
    ok = engine == closed
    return f"engine {engine} vs closed form {closed}, {'PASS' if ok else 'FAIL'}\n", 0 if ok else 1


def cmd_graph(args) -> str:
    size = args.n + args.m
    try:
        p = Permutation.parse(args.pi, size)
    except ValueError as exc:
        raise UsageError(f"bad permutation: {exc}") from None
    g = PiGraph.of(p)
    try:
        dashed = [(x + 1) // 2 for x, _ in flexible_pairs(p, args.n, args.m)] if args.m else []
    except ValueError:
        dashed = []
    return g.to_dot(dashed=dashed)


def run(argv=None) -> tuple[int, str, str]:
    """(exit code, stdout text, stderr text) without touching the real streams."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        if args.command == "enumerate":
            return 0, cmd_enumerate(args), ""
        if args.command == "formula":
            return 0, cmd_formula(args), ""
        if args.command == "eval":
            return 0, cmd_eval(args), ""
        if args.command == "verify":
            out, code = cmd_verify(args)
            return code, out, ""
        if args.command == "semicircle":
            out, code = cmd_semicircle(args)
            return code, out, ""
        return 0, cmd_graph(args), ""
    except SpecError as exc:
        return 3, "", f"error: {exc}\n"
    except (UsageError, ValueError) as exc:
        return 2, "", f"error: {exc}\n"


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
