"""Command-line front end.

Every subcommand prints one JSON document
``{"schema": 1, "command": ..., "result": ...}`` unless ``--pretty`` asks
for a human-readable rendering.  Exit codes: 0 ok, 1 usage error (bad
arguments, unparsable polynomial, refused input), 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cycpart import ConductorLimitError, cyclotomic_part
from .poly import ParseError, parse_poly

SCHEMA = 1


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ------------------------------------------------------------ commands

def _cmd_cyclo_part(args):
    f = parse_poly(args.poly)
    if len(f.used_vars()) > 1:
        raise UsageError("cyclo-part needs a univariate polynomial")
    res = cyclotomic_part(f, method=args.method)
    out = res.to_json()
    pretty = f"{out['part']}\nroots: " + (", ".join(
        f"zeta_{r['order']}^{r['exp']}" for r in out["roots"]) or "none")
    return out, pretty


def _families_out(fams):
    out = [f.to_json() for f in fams]
    lines = [json.dumps(d, sort_keys=True) for d in out]
    return out, "\n".join(lines) or "no solutions"


def _cmd_solve_family(args):
    from .famsolve import solve_param_family
    f = parse_poly(args.poly)
    fams = solve_param_family(f, param=args.param, var=args.var)
    return _families_out(fams)


def _cmd_solve_curve(args):
    from .famsolve import solve_param_curve
    f = parse_poly(args.poly)
    vs = tuple(v.strip() for v in args.vars.split(","))
    if len(vs) != 2:
        raise UsageError("--vars takes two comma-separated names")
    fams = solve_param_curve(f, param=args.param, vars=vs)
    return _families_out(fams)


def _cmd_metallic(args):
    from . import metallic as mt
    if args.action == "classify":
        ps = sorted(mt.classify_metallic(), key=mt.MetallicParam.sort_key)
        return [p.to_json() for p in ps], "{" + ", ".join(p.display for p in ps) + "}"
    if args.action == "table":
        try:
            rows = mt.realization_table()
        except AssertionError as exc:
            raise VerificationError(str(exc)) from exc
        out = [{"y0": p.to_json(), "realization": r.to_json()} for p, r in rows]
        lines = ["| y0 | N | numerator | denominator |", "|---|---|---|---|"]
        lines += [f"| {p.display} | {r.N} | abs(1-z^{r.a_exp}) | abs(1-z^{r.b_exp}) |" for p, r in rows]
        return out, "\n".join(lines)
    N, a, b = args.N, args.a, args.b
    _check_triple(N, a, b, coprime=False)
    p = mt.is_metallic_ratio(N, a, b, method=args.method)
    out = {"N": N, "a": a, "b": b, "metallic": p is not None,
           "y0": p.to_json() if p else None}
    return out, (f"y0 = {p.display}" if p else "not a metallic mean")


def _check_triple(N, a, b, coprime=True):
    import math
    if N < 3 or not (1 <= a < N and 1 <= b < N):
        raise UsageError("need N >= 3 and 1 <= a, b < N")
    if coprime and math.gcd(a, b) != 1:
        raise UsageError("a and b must be coprime")


def _cmd_ratio(args):
    from . import diagonals as dg
    from .exact import totient
    N, a, b = args.N, args.a, args.b
    _check_triple(N, a, b)
    if args.action == "degree":
        try:
            deg, method = dg.ratio_degree(N, a, b)
        except AssertionError as exc:
            raise VerificationError(str(exc)) from exc
        phi = totient(4 * N)
        out = {"N": N, "a": a, "b": b, "degree": deg, "method": method, "phi_4N": phi}
        if N % 2 == 0:
            out["at_least_phi_over_10"] = 10 * deg >= phi
            out["at_least_phi_over_16"] = 16 * deg >= phi
        return out, f"[Q(d1/d2):Q] = {deg} ({method})"
    if args.action == "defective":
        d = dg.is_defective(N, a, b)
        out = {"N": N, "a": a, "b": b, **d.to_json()}
        return out, f"{'defective' if d.defective else 'not defective'} ({d.status}, k={d.k})"
    mp = dg.ratio_minpoly(N, a, b)
    out = {"N": N, "a": a, "b": b, "minpoly": mp.to_text(), "pretty": mp.pretty(),
           "degree": mp.degree("t")}
    return out, mp.pretty()


def _cmd_cj(args):
    from . import diagonals as dg
    if args.action == "list":
        if args.bound < 1:
            raise UsageError("--bound must be positive")
        sols = dg.cj_solutions(args.bound)
        out = [s.to_json() for s in sols]
        return out, "\n".join(f"{s.kind}: {{{', '.join(map(str, s.values))}}}" for s in sols)
    res = dg.lemma42_solutions()
    out = res.to_json()
    if res.quarantined:
        raise VerificationError(f"quarantined entries: {res.quarantined}", out)
    pretty = f"{len(res.families)} families, {len(res.rows)} table rows verified"
    return out, pretty


def _cmd_scan(args):
    from . import diagonals as dg
    from . import metallic as mt
    if args.nmax < 3 or args.jobs < 1:
        raise UsageError("need --nmax >= 3 and --jobs >= 1")
    found = dg.theorem11_scan(args.nmax, jobs=args.jobs)
    ps = sorted(found, key=mt.MetallicParam.sort_key)
    table = {p for p, r in ((mt.MetallicParam(a, s), N) for (a, s), N, _, _ in mt.TABLE_ROWS)
             if r <= args.nmax}
    out = {"nmax": args.nmax, "values": [p.to_json() for p in ps],
           "count": len(ps), "table_values_present": table <= found}
    if args.nmax >= 286:
        out["matches_classification"] = found == set(mt.THEOREM_SET)
        if not out["matches_classification"]:
            raise VerificationError("scan differs from the classification", out)
    if not out["table_values_present"]:
        raise VerificationError("a table value is missing from the scan", out)
    return out, "{" + ", ".join(p.display for p in ps) + "}"


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclopoint", description="Cyclotomic points and diagonal ratios.")
    p.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("cyclo-part", help="cyclotomic part of a univariate polynomial")
    c.add_argument("poly")
    c.add_argument("--method", choices=("enumerate", "graeffe", "checked"), default="checked")
    c.set_defaults(fn=_cmd_cyclo_part)

    c = sub.add_parser("solve-family", help="(n0, zeta) with f(n0, zeta) = 0")
    c.add_argument("poly")
    c.add_argument("--param", default="n")
    c.add_argument("--var", default="x")
    c.set_defaults(fn=_cmd_solve_family)

    c = sub.add_parser("solve-curve", help="(n0, zeta, xi) with f(n0, zeta, xi) = 0")
    c.add_argument("poly")
    c.add_argument("--param", default="n")
    c.add_argument("--vars", default="x,y")
    c.set_defaults(fn=_cmd_solve_curve)

    m = sub.add_parser("metallic", help="metallic means as diagonal ratios")
    ms = m.add_subparsers(dest="action", parser_class=_Parser)
    ms.add_parser("classify")
    ms.add_parser("table")
    t = ms.add_parser("test")
    for name in ("N", "a", "b"):
        t.add_argument(name, type=int)
    t.add_argument("--method", choices=("field", "fast"), default="field")
    m.set_defaults(fn=_cmd_metallic)

    r = sub.add_parser("ratio", help="degree and defectiveness of d1/d2")
    rs = r.add_subparsers(dest="action", parser_class=_Parser)
    for action in ("degree", "defective", "minpoly"):
        q = rs.add_parser(action)
        for name in ("N", "a", "b"):
            q.add_argument(name, type=int)
    r.set_defaults(fn=_cmd_ratio)

    j = sub.add_parser("cj", help="vanishing four-term cosine sums")
    js = j.add_subparsers(dest="action", parser_class=_Parser)
    q = js.add_parser("list")
    q.add_argument("--bound", type=int, default=6)
    js.add_parser("lemma42")
    j.set_defaults(fn=_cmd_cj)

    s = sub.add_parser("scan", help="union of metallic ratios over N-gons")
    s.add_argument("--nmax", type=int, default=60)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=_cmd_scan)
    return p


def _command_name(args):
    parts = [args.command]
    if getattr(args, "action", None):
        parts.append(args.action)
    return " ".join(parts)


def _emit(doc, pretty_text, pretty, stream):
    if pretty:
        stream.write(pretty_text.rstrip("\n") + "\n")
    else:
        stream.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    from .famsolve import DegenerateInputError

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    pretty = False
    if "--pretty" in argv:
        pretty = True
        argv = [a for a in argv if a != "--pretty"]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("missing subcommand")
        if args.command in ("metallic", "ratio", "cj") and not args.action:
            raise UsageError(f"{args.command}: missing action")
        result, text = args.fn(args)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except (ParseError, DegenerateInputError, ConductorLimitError, ValueError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except VerificationError as exc:
        detail = exc.args[1] if len(exc.args) > 1 else None
        doc = {"schema": SCHEMA, "command": _command_name(args), "error": str(exc.args[0]),
               "result": detail}
        _emit(doc, f"verification failed: {exc.args[0]}", pretty, stdout)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        stderr.write(f"verification failure: {exc}\n")
        return 2
    doc = {"schema": SCHEMA, "command": _command_name(args), "result": result}
    _emit(doc, text, pretty, stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
