"""Command line interface; JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 domain error, 2 failed internal assertion, 64 usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import acceptance
from . import family as fam
from .classify import classify, cmz_pattern, is_minimal, level_t_moves
from .relators import (CableRelatorParams, TorusRelatorParams, classify_one_two_band,
                       knot_signature, relator_word, validate)
from .whitehead_graph import (build, cut_vertices, is_connected, is_robust,
                              minimality_and_level, weight_form)
from .words import WordSyntaxError, cyclic_reduce, parse

EXIT_OK, EXIT_DOMAIN, EXIT_ASSERT, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def parse_ranges(text: str) -> list:
    """``lo..hi[,lo..hi]`` or single integers, negative bounds allowed.

    >>> parse_ranges("2..4,-4..-2")
    [-4, -3, -2, 2, 3, 4]
    >>> parse_ranges("3")
    [3]
    """
    values = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad range {part!r}") from None
            values.update(range(lo, hi + 1))
        else:
            try:
                values.add(int(part))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad integer {part!r}") from None
    return sorted(values)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad parameter list {text!r}") from None


def _emit(obj, out):
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


# -- handlers ------------------------------------------------------------------------

def _graph_json(words) -> dict:
    g = build(*words)
    wf = weight_form(g)
    out = {"edges": g.as_dict(), "connected": is_connected(g),
           "cut_vertices": sorted(cut_vertices(g)), "robust": is_robust(g),
           "weight_form": list(wf) if wf else None}
    if wf is not None:
        minimal, level = minimality_and_level(wf)
        out["minimal"] = minimal
        out["level_moves"] = sorted(m.token for m in level)
    return out


def cmd_reduce(args, out):
    w = parse(args.word)
    cw, conj = cyclic_reduce(w)
    _emit({"reduced": str(w), "cyclic": str(cw), "conjugator": str(conj),
           "length": cw.length}, out)


def cmd_classify(args, out):
    c = classify(args.word)
    data = c.to_json()
    pat = cmz_pattern(args.word)
    data["cmz_pattern"] = pat.to_json() if pat else None
    _emit(data, out)


def cmd_graph(args, out):
    _emit(_graph_json(args.words), out)


def _relator_params(args):
    vals = args.params
    if args.kind == "torus":
        if vals is None:
            vals = [args.n, args.s] + ([args.a, args.b] if args.a is not None else [])
        if None in vals:
            raise UsageError("relator torus needs --params n,s[,a,b] or --n/--s[/--a/--b]")
        if len(vals) == 2:
            return TorusRelatorParams.rectangular(*vals)
        if len(vals) == 4:
            return TorusRelatorParams.nonrectangular(*vals)
        raise UsageError("relator torus takes n,s or n,s,a,b")
    if vals is None:
        vals = [args.n, args.s, args.a, args.b, args.m]
        if None in vals:
            raise UsageError("relator cable needs --params n,s,a,b,m or --n/--s/--a/--b/--m")
    if len(vals) != 5:
        raise UsageError("relator cable takes n,s,a,b,m")
    n, s, a, b, m = vals
    return CableRelatorParams(m, n, s, a, b)


def cmd_relator(args, out):
    if args.kind == "bandclass":
        return cmd_bandclass(args, out)
    params = validate(_relator_params(args))
    w = relator_word(params)
    _emit({"params": params.to_json(), "word": str(w),
           "signature": str(knot_signature(params)), "graph": _graph_json([w]),
           "minimal": is_minimal(w),
           "level_moves": sorted(m.token for m in level_t_moves(w))}, out)


def cmd_bandclass(args, out):
    vals = args.params
    if vals is None:
        vals = [args.a, args.b, args.m, args.n, args.s]
    if None in vals or len(vals) != 5:
        raise UsageError("bandclass needs --params a,b,m,n,s or all of --a --b --m --n --s")
    v = classify_one_two_band(*vals)
    _emit(v.to_json(), out)
    if not v.agrees_with_proof:
        raise AssertionError(f"verdict {v.kind} is outside the case analysis")


def _closed(args):
    return fam.delta_closed_corrected if args.closed == "corrected" else fam.delta_closed


def cmd_family_delta(args, out):
    d = fam.delta_direct(args.case, args.p, args.J, args.m)
    c = _closed(args)(args.case, args.p, args.J, args.m)
    _emit({"direct": d, "closed": c, "unimodular": abs(d) == 1}, out)
    if abs(d) != abs(c):
        raise AssertionError(f"|direct| {abs(d)} != |closed| {abs(c)}")


def cmd_family_scan(args, out):
    hits = fam.scan(args.p, args.J, args.m, cases=args.case, jobs=args.jobs)
    rows = [{"case": c, "p": p, "J": J, "m": m, "delta": fam.delta_direct(c, p, J, m)}
            for c, p, J, m in hits]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["case", "p", "J", "m", "delta"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        for row in rows:
            _emit(row, out)


def cmd_family_certify(args, out):
    reports = fam.certify(args.p, args.J, args.m, cases=args.case, jobs=args.jobs)
    closed = _closed(args)
    problems = []
    for r in reports:
        data = r.to_json()
        for case in data["cases"]:
            case["closed"] = closed(case["case"], r.p, r.J, r.m)
            case["agrees"] = abs(case["direct"]) == abs(case["closed"])
            if not case["agrees"]:
                problems.append(f"case {case['case']} at {(r.p, r.J, r.m)}")
        for cert in r.certificates:
            if cert.prop48.kind == "Inconclusive":
                problems.append(f"no certificate for case {cert.case} at {(r.p, r.J, r.m)}")
        if args.hits_only and not r.certificates:
            continue
        if args.format == "csv":
            continue
        _emit(data, out)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "J", "m", "case", "direct", "closed", "unimodular", "certificate"])
        for r in reports:
            certs = {c.case: c for c in r.certificates}
            for cr in r.cases:
                cert = certs.get(cr.case)
                if args.hits_only and cert is None:
                    continue
                writer.writerow([r.p, r.J, r.m, cr.case, cr.direct,
                                 closed(cr.case, r.p, r.J, r.m), cr.unimodular,
                                 "" if cert is None else cert.prop48.kind])
        out.write(buf.getvalue())
    if problems:
        raise AssertionError(f"{len(problems)} assertion failures, first: {problems[0]}")


def cmd_selftest(args, out):
    failed = 0
    for crit in acceptance.CRITERIA:
        if args.only and crit.number not in args.only:
            continue
        r = crit(fast=not args.full, seed=args.seed)
        _emit({"criterion": r.number, "name": r.name,
               "passed": r.passed and r.in_budget, "detail": r.detail}, out)
        failed += not (r.passed and r.in_budget)
    if failed:
        raise AssertionError(f"{failed} acceptance criteria failed")


# -- parser ---------------------------------------------------------------------------

def _add_family_args(p, with_case_range=True):
    p.add_argument("--p", type=parse_ranges, default=list(fam.DEFAULT_P))
    p.add_argument("--J", type=parse_ranges, default=list(fam.DEFAULT_J))
    p.add_argument("--m", type=parse_ranges, default=list(fam.DEFAULT_M))
    p.add_argument("--case", type=parse_ranges, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--closed", choices=("published", "corrected"), default="published",
                   help="closed determinant forms to compare against")


def _add_delta_args(p):
    p.add_argument("--case", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--closed", choices=("published", "corrected"), default="published")


def _add_band_args(p):
    p.add_argument("--params", type=_int_list, default=None, help="a,b,m,n,s")
    for name in ("a", "b", "m", "n", "s"):
        p.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="psfknots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", help="free and cyclic reduction")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("classify", help="primitive / proper power / neither")
    p.add_argument("word")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("graph", help="Whitehead graph analysis")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("relator", help="torus and cable relators, band classifier")
    p.add_argument("kind", choices=("torus", "cable", "bandclass"))
    p.add_argument("--params", type=_int_list, default=None,
                   help="torus n,s[,a,b]; cable n,s,a,b,m; bandclass a,b,m,n,s")
    for name in ("n", "s", "a", "b", "m"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.set_defaults(func=cmd_relator)

    p = sub.add_parser("bandclass", help="one band / two band classifier")
    _add_band_args(p)
    p.set_defaults(func=cmd_bandclass)

    fp = sub.add_parser("family", help="the P/SF family engine")
    fsub = fp.add_subparsers(dest="family_command", required=True, parser_class=_Parser)
    for name, func in (("scan", cmd_family_scan), ("certify", cmd_family_certify)):
        for q in (fsub.add_parser(name), sub.add_parser(f"family-{name}")):
            _add_family_args(q)
            if name == "certify":
                q.add_argument("--hits-only", action="store_true")
            q.set_defaults(func=func)
    for q in (fsub.add_parser("delta"), sub.add_parser("family-delta")):
        _add_delta_args(q)
        q.set_defaults(func=cmd_family_delta)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--full", action="store_true", help="full sample sizes")
    p.add_argument("--only", type=parse_ranges, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


_NEGATIVE_VALUE = re.compile(r"^-\d[\d.,-]*$")


def _join_negative_values(argv: list) -> list:
    """``--m -8..8`` becomes ``--m=-8..8`` so argparse keeps the value."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as e:
        err.write(str(e) if str(e).endswith("\n") else f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    except AssertionError as e:
        err.write(f"assertion failed: {e}\n")
        return EXIT_ASSERT
    except (WordSyntaxError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())
