"""Command-line front end.

Exit codes: 0 success / pass, 1 identity failure or non-positivity, 2 usage error.
Every global flag can also come from the environment as NABLASYM_<FLAG>.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import combinat as cb

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv", "text")
BASIS_ALIASES = {"schur": "s", "s": "s", "monomial": "m", "m": "m", "elementary": "e", "e": "e",
                 "homogeneous": "h", "h": "h", "power": "p", "p": "p"}


class UsageError(Exception):
    pass


def _env(name, default):
    return os.environ.get("NABLASYM_" + name.upper().replace("-", "_"), default)


def _add_globals(p, suppress):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--trunc", type=int, default=d, help="degree truncation (default 8)")
    p.add_argument("--threads", type=int, default=d, help="worker processes (default 1)")
    p.add_argument("--format", choices=FORMATS, default=d, help="output format")
    p.add_argument("--seed", type=int, default=d, help="seed for randomized checks")


def _intlist(s):
    try:
        return [int(x) for x in s.replace("[", "").replace("]", "").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {s!r}")


def build_parser():
    ap = argparse.ArgumentParser(prog="nablasym", description="Exact computations with nabla, "
                                 "creation operators and parking functions.")
    _add_globals(ap, suppress=False)
    sub = ap.add_subparsers(dest="cmd", metavar="COMMAND")
    sub.required = True

    def cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        _add_globals(sp, suppress=True)
        return sp

    sp = cmd("expand", "evaluate an expression and print its expansion")
    sp.add_argument("expr")
    sp.add_argument("--basis", default="schur", help="schur|m|e|h|p (default schur)")

    sp = cmd("verify", "run a registry identity check")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--all", action="store_true", help="run every entry over its grid")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--list", action="store_true", help="list registry names")
    for k in ("n", "k", "l", "a", "flip", "qshift"):
        sp.add_argument("--" + k, type=int, default=None)
    sp.add_argument("--alpha", type=_intlist, default=None)

    sp = cmd("pf", "parking function enumeration")
    sp.add_argument("action", choices=("list", "genfun"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--touch", type=_intlist, default=None)
    sp.add_argument("--weight", choices=("none", "ret", "erun"), default="none",
                    help="genfun weight: [ret]_q or [erun(touch)+1]_q")
    sp.add_argument("--schur", action="store_true", help="genfun: solve into Schur functions")

    sp = cmd("positivity", "Schur positivity report for nabla of an expression")
    sp.add_argument("expr")
    sp.add_argument("--sign", type=int, choices=(-1, 1), default=1)

    sp = cmd("kostka", "modified q,t-Kostka table")
    sp.add_argument("--n", type=int, required=True)
    return ap


def _config(args):
    cfg = {}
    for name, conv, default in (("trunc", int, 8), ("threads", int, 1), ("format", str, None),
                                ("seed", int, 0)):
        v = getattr(args, name, None)
        if v is None:
            raw = _env(name, None)
            if raw is not None:
                try:
                    v = conv(raw)
                except ValueError:
                    raise UsageError(f"bad NABLASYM_{name.upper()} value {raw!r}")
        cfg[name] = default if v is None else v
    if cfg["trunc"] < 1:
        raise UsageError("--trunc must be at least 1")
    if cfg["threads"] < 1:
        raise UsageError("--threads must be at least 1")
    if cfg["format"] is not None and cfg["format"] not in FORMATS:
        raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
    return cfg


# -- output -----------------------------------------------------------------------


def _emit_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _emit_csv(header, rows, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


# -- commands -----------------------------------------------------------------------


def cmd_expand(args, cfg, out):
    from .expr import eval_expr
    from .symfun import basis_extract, to_json_obj
    basis = BASIS_ALIASES.get(args.basis)
    if basis is None:
        raise UsageError(f"unknown basis {args.basis!r}")
    f = eval_expr(args.expr)
    fmt = cfg["format"] or "json"
    if fmt == "json":
        _emit_json(to_json_obj(f, basis), out)
    else:
        co = basis_extract(f, basis)
        keys = sorted(co, key=lambda k: (sum(k), cb.sort_key(k)))
        if fmt == "csv":
            _emit_csv(["basis", "partition", "coeff"], [[basis, cb.render(k), str(co[k])] for k in keys], out)
        else:
            for k in keys:
                out.write(f"{basis}{cb.render(k)}: {co[k]}\n")
            if not keys:
                out.write("0\n")
    return EXIT_OK


def _verify_params(args, cfg):
    from .identities import REGISTRY
    ent = REGISTRY[args.name]
    prm = {}
    for k in ("n", "k", "l", "a", "flip", "qshift", "alpha"):
        v = getattr(args, k)
        if v is not None:
            prm[k] = v
    if "seed" in ent.params:
        prm["seed"] = cfg["seed"]
    if "max_degree" in ent.params and args.max_degree is not None:
        prm["max_degree"] = args.max_degree
    return prm


def cmd_verify(args, cfg, out):
    from . import identities as ids
    if args.list:
        for name in ids.names():
            out.write(f"{name}\t{' '.join(ids.REGISTRY[name].params)}\t{ids.REGISTRY[name].doc.splitlines()[0]}\n")
        return EXIT_OK
    if args.all:
        if args.name:
            raise UsageError("give either an identity name or --all")
        reports = ids.run_all(args.max_degree or 6, threads=cfg["threads"])
    else:
        if not args.name:
            raise UsageError("verify needs an identity name or --all")
        if args.name not in ids.REGISTRY:
            raise UsageError(f"unknown identity {args.name!r}")
        reports = [ids.check(args.name, _verify_params(args, cfg)).to_json_obj()]
    fmt = cfg["format"] or "json"
    if fmt == "json":
        _emit_json(reports if args.all else reports[0], out)
    elif fmt == "csv":
        _emit_csv(["identity", "params", "verdict", "witness", "elapsed_ms"],
                  [[r["identity"], json.dumps(r["params"]), r["verdict"], json.dumps(r["witness"]),
                    r["elapsed_ms"]] for r in reports], out)
    else:
        for r in reports:
            tag = "PASS" if r["verdict"] else "FAIL"
            line = f"{tag} {r['identity']} {json.dumps(r['params'])} {r['elapsed_ms']}ms"
            if r["witness"]:
                line += f" witness={json.dumps(r['witness'])}"
            out.write(line + "\n")
    return EXIT_OK if all(r["verdict"] for r in reports) else EXIT_FAIL


def cmd_pf(args, cfg, out):
    from . import parking as pk
    from .exactalg import q_int
    if args.n < 1 or args.n > 8:
        raise UsageError("pf needs 1 <= n <= 8")
    touch = tuple(args.touch) if args.touch else None
    if touch is not None and (any(x < 1 for x in touch) or sum(touch) != args.n):
        raise UsageError("--touch must be a composition of n")
    fmt = cfg["format"]
    if args.action == "list":
        fmt = fmt or "csv"
        if fmt == "csv":
            pk.pf_csv(args.n, touch, out=out)
        else:
            rows = []
            for P in pk.enumerate_pf(args.n, touch):
                st = pk.stats(P)
                rows.append({"rows": [list(r) for r in P.rows], "area": st.area, "dinv": st.dinv,
                             "touch": list(st.touch), "sigma": list(st.sigma), "ides": sorted(st.ides)})
            if fmt == "json":
                _emit_json({"n": args.n, "count": len(rows), "parking_functions": rows}, out)
            else:
                for r in rows:
                    out.write(f"{r['rows']} area={r['area']} dinv={r['dinv']} touch={r['touch']} "
                              f"sigma={r['sigma']} ides={r['ides']}\n")
        return EXIT_OK
    pw = None
    if args.weight == "ret":
        pw = lambda a: q_int(pk.touch_of(a)[0]).num
    elif args.weight == "erun":
        pw = lambda a: q_int(pk.erun(pk.touch_of(a)) + 1).num
    fv = pk.pf_genfun(args.n, touch=touch, path_weight=pw, threads=cfg["threads"])
    fmt = fmt or "json"
    if args.schur:
        from .symfun import fund_solve
        co = fund_solve(fv)
        keys = sorted(co, key=cb.sort_key)
        items = [(cb.render(k), str(co[k])) for k in keys]
        head = "partition"
    else:
        keys = sorted(fv.coeffs, key=lambda S: (len(S), sorted(S)))
        items = [(cb.render(sorted(S)), str(fv.coeffs[S])) for S in keys]
        head = "ides"
    if fmt == "json":
        _emit_json({"n": args.n, "touch": list(touch) if touch else None, "weight": args.weight,
                    "basis": "s" if args.schur else "F",
                    "terms": [{head: json.loads(k), "coeff": c} for k, c in items]}, out)
    elif fmt == "csv":
        _emit_csv([head, "coeff"], items, out)
    else:
        for k, c in items:
            out.write(f"{'s' if args.schur else 'F'}{k}: {c}\n")
    return EXIT_OK


def cmd_positivity(args, cfg, out):
    from .expr import eval_expr
    from .macdonald import nabla_positivity_report
    f = eval_expr(args.expr)
    rep = nabla_positivity_report(f, args.sign)
    fmt = cfg["format"] or "json"
    rows = [[cb.render(r["partition"]), str(r["coeff"]), r["polynomial"] is not None, r["nonneg"]]
            for r in rep["rows"]]
    if fmt == "json":
        _emit_json({"expr": args.expr, "sign": args.sign, "verdict": rep["verdict"],
                    "rows": [{"partition": json.loads(a), "coeff": b, "polynomial": c, "nonneg": d}
                             for a, b, c, d in rows]}, out)
    elif fmt == "csv":
        _emit_csv(["partition", "coeff", "polynomial", "nonneg"], rows, out)
    else:
        for a, b, c, d in rows:
            out.write(f"s{a}: {b} {'ok' if d else 'NOT in N[q,t]'}\n")
        out.write(f"verdict: {'positive' if rep['verdict'] else 'not positive'}\n")
    return EXIT_OK if rep["verdict"] else EXIT_FAIL


def cmd_kostka(args, cfg, out):
    from .macdonald import kostka_table
    from .symfun import _check
    if args.n < 1:
        raise UsageError("kostka needs n >= 1")
    _check(args.n)
    table = kostka_table(args.n)
    parts = cb.enumerate_partitions(args.n)
    rows = [[cb.render(mu), cb.render(lam), str(table[mu].get(lam, 0))] for mu in parts for lam in parts]
    fmt = cfg["format"] or "json"
    if fmt == "json":
        _emit_json({"n": args.n, "entries": [{"mu": json.loads(a), "lambda": json.loads(b), "coeff": c}
                                              for a, b, c in rows]}, out)
    elif fmt == "csv":
        _emit_csv(["mu", "lambda", "coeff"], rows, out)
    else:
        for a, b, c in rows:
            out.write(f"K~[{b}, {a}] = {c}\n")
    return EXIT_OK


COMMANDS = {"expand": cmd_expand, "verify": cmd_verify, "pf": cmd_pf, "positivity": cmd_positivity,
            "kostka": cmd_kostka}


def _error(code, msg, err):
    err.write(json.dumps({"error": code, "message": str(msg)}) + "\n")


def main(argv=None, out=None, err=None):
    from .expr import ParseError
    from .identities import IdentityError
    from .symfun import DegreeOverflow, InconsistentSystem, set_trunc, truncation
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0) and EXIT_USAGE
    try:
        cfg = _config(args)
        set_trunc(cfg["trunc"])
        with truncation(cfg["trunc"]):
            buf = io.StringIO()
            code = COMMANDS[args.cmd](args, cfg, buf)
        out.write(buf.getvalue())
        return code
    except UsageError as ex:
        _error("usage", ex, err)
    except ParseError as ex:
        _error("syntax", ex, err)
    except DegreeOverflow as ex:
        _error("degree-overflow", ex, err)
    except IdentityError as ex:
        _error("bad-parameters", ex, err)
    except InconsistentSystem as ex:
        _error("inconsistent", ex, err)
        return EXIT_FAIL
    except (ValueError, ZeroDivisionError) as ex:
        _error("invalid", ex, err)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
