"""Batch front end: parse inputs, run commands, cache byte-identical output.

Exit codes: 0 success, 1 check failure, 2 usage or parse error,
3 budget exceeded.  With a cache directory configured (flag or the
FFHYPER_CACHE_DIR environment variable), a repeated invocation with
the same canonical inputs replays the stored bytes exactly.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .admissible import is_admissible, random_symmetric_poly
from .bounds import b_set_bound, enumerate_B, enumerate_X, slavov_count, weil_check
from .errors import BudgetExceeded, FFHyperError, ParseError
from .field import Field
from .hypergraph import (
    DEFAULT_MEM_BUDGET,
    DEFAULT_TUPLE_BUDGET,
    build_hypergraph,
    count_epo_charsum,
    count_epo_direct,
    count_m_subsets,
    omega_clique,
    paley,
)
from .parse import parse_poly, poly_to_text
from .poly import UniPoly
from .verify import run_checks

CSV_VERSION = 1


def _frac_str(fr):
    fr = Fraction(fr)
    return "%d/%d" % (fr.numerator, fr.denominator)


def _infer_nvars(text):
    return max((int(m) for m in re.findall(r"x(\d+)", text)), default=0)


def _parse_field(spec):
    text = spec.strip()
    if text.isdigit():
        return Field.from_order(int(text))
    return Field.from_spec(text)


def _get_poly(args, F, nvars=None):
    if args.poly is None:
        raise ParseError("--poly is required for this command")
    if nvars is None:
        nvars = args.k or _infer_nvars(args.poly)
    if nvars < 1:
        raise ParseError("cannot infer the variable count; pass --k")
    return parse_poly(F, nvars, args.poly)


def _get_hypergraph(args, F):
    if args.paley:
        k = args.k or 2
        Y = paley(F, k)
    else:
        f = _get_poly(args, F)
        Y = build_hypergraph(F, f, mem_budget=args.budget_mem)
    return Y


def _json_text(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(command, tag, header, rows):
    lines = ["# ffhyper csv v%d %s%s" % (CSV_VERSION, command, tag), ",".join(header)]
    lines.extend(",".join(str(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def _maybe_cache(args, canon, compute):
    cdir = getattr(args, "cache_dir", None) or os.environ.get("FFHYPER_CACHE_DIR")
    if not cdir:
        return compute()
    canon = dict(canon)
    canon["version"] = __version__
    canon["format"] = getattr(args, "format", "json")
    key = hashlib.sha256(json.dumps(canon, sort_keys=True).encode()).hexdigest()
    path = os.path.join(cdir, key + ".json")
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
        return entry["exit"], entry["output"]
    code, text = compute()
    os.makedirs(cdir, exist_ok=True)
    tmp = "%s.%d.tmp" % (path, os.getpid())
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump({"version": __version__, "exit": code, "output": text}, fh)
    os.replace(tmp, path)
    return code, text


# ---------------------------------------------------------------------------
# Command handlers.  Each returns (exit_code, output_text).
# ---------------------------------------------------------------------------

def cmd_admissible(args):
    F = _parse_field(args.field)
    f = _get_poly(args, F)
    canon = {"command": "admissible", "field": F.spec_string(), "poly": poly_to_text(f)}

    def compute():
        verdict = is_admissible(f)
        out = {"command": "admissible", "field": F.spec_string(),
               "poly": poly_to_text(f)}
        out.update(verdict.to_json())
        return 0, _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_epo(args):
    F = _parse_field(args.field)
    Y = _get_hypergraph(args, F)
    ftext = poly_to_text(Y.poly)
    canon = {"command": "epo", "field": F.spec_string(), "poly": ftext,
             "method": args.method}

    def compute():
        q, k, d = F.q, Y.k, Y.poly.total_degree
        code = 0
        out = {"command": "epo", "field": F.spec_string(), "poly": ftext,
               "k": k, "d": d, "method": args.method}
        rows = []
        direct = charsum = None
        if args.method in ("direct", "both"):
            direct = count_epo_direct(Y, workers=args.workers, budget=args.budget_tuples)
            out["direct"] = direct.to_json()
            rows.append([q, k, d, "direct", direct.observed,
                         _frac_str(direct.predicted_main), _frac_str(direct.deviation),
                         repr(direct.relative_deviation)])
        if args.method in ("charsum", "both"):
            charsum = count_epo_charsum(Y, workers=args.workers,
                                        budget=args.budget_tuples)
            out["charsum"] = {
                "S": str(charsum["S"]),
                "estimate": _frac_str(charsum["estimate"]),
                "predicted_main": _frac_str(charsum["predicted_main"]),
                "deviation": _frac_str(charsum["deviation"]),
            }
            rel = float(charsum["deviation"] / charsum["predicted_main"])
            rows.append([q, k, d, "charsum", _frac_str(charsum["estimate"]),
                         _frac_str(charsum["predicted_main"]),
                         _frac_str(charsum["deviation"]), repr(rel)])
        if args.method == "both":
            diff = abs(Fraction(direct.observed) - charsum["estimate"])
            bound = None
            if k in (2, 3):
                bound = (8 if k == 2 else 40) * q ** (2 * k - 1)
            agree = bound is None or diff <= bound
            out["agreement"] = {"difference": _frac_str(diff),
                                "bound": bound, "pass": agree}
            if not agree:
                code = 1
        if args.format == "csv":
            header = ("q", "k", "d", "method", "observed", "predicted",
                      "deviation", "relative_deviation")
            return code, _csv_text("epo", "", header, rows)
        return code, _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_tuples(args):
    F = _parse_field(args.field)
    Y = _get_hypergraph(args, F)
    if args.m is None or args.m < Y.k:
        raise ParseError("--m must be provided and at least the uniformity k")
    ftext = poly_to_text(Y.poly)
    canon = {"command": "tuples", "field": F.spec_string(), "poly": ftext,
             "m": args.m}

    def compute():
        rep = count_m_subsets(Y, args.m, workers=args.workers,
                              budget=args.budget_tuples)
        code = 0 if rep.within_envelope else 1
        if args.format == "csv":
            header = ("q", "k", "d", "m", "observed", "predicted", "deviation",
                      "relative_deviation", "envelope", "within_envelope")
            row = [F.q, Y.k, Y.poly.total_degree, args.m, rep.observed,
                   _frac_str(rep.predicted_main), _frac_str(rep.deviation),
                   repr(rep.relative_deviation), repr(rep.envelope),
                   rep.within_envelope]
            return code, _csv_text("tuples", "", header, [row])
        out = {"command": "tuples", "field": F.spec_string(), "poly": ftext,
               "k": Y.k, "m": args.m}
        out.update(rep.to_json())
        return code, _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_clique(args):
    F = _parse_field(args.field)
    Y = _get_hypergraph(args, F)
    ftext = poly_to_text(Y.poly)
    canon = {"command": "clique", "field": F.spec_string(), "poly": ftext}

    def compute():
        omega, exact = omega_clique(Y, node_budget=args.budget_tuples)
        out = {"command": "clique", "field": F.spec_string(), "poly": ftext,
               "k": Y.k, "omega": omega, "exact": exact}
        return 0, _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_weil(args):
    F = _parse_field(args.field)
    g = UniPoly.from_multi(_get_poly(args, F, nvars=1))
    a = args.s if args.s is not None else 1
    canon = {"command": "weil", "field": F.spec_string(),
             "poly": poly_to_text(g.to_multi()), "a": a}

    def compute():
        w = weil_check(F, g, a)
        out = {"command": "weil", "field": F.spec_string(),
               "poly": poly_to_text(g.to_multi()), "a": a}
        out.update(w.to_json())
        code = 1 if w.applicable and not w.holds else 0
        return code, _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_xset(args):
    F = _parse_field(args.field)
    f = _get_poly(args, F)
    canon = {"command": "xset", "field": F.spec_string(), "poly": poly_to_text(f)}

    def compute():
        X = enumerate_X(F, f)
        out = {"command": "xset", "field": F.spec_string(), "poly": poly_to_text(f)}
        out.update(X.to_json())
        out["members"] = [list(u) for u in X.members]
        out["constant_members"] = [list(u) for u in X.constant_members]
        return (0 if X.holds else 1), _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_bset(args):
    F = _parse_field(args.field)
    f = _get_poly(args, F)
    canon = {"command": "bset", "field": F.spec_string(), "poly": poly_to_text(f)}

    def compute():
        B = enumerate_B(F, f, budget=args.budget_tuples)
        bound = b_set_bound(F.q, f.nvars, f.total_degree)
        out = {"command": "bset", "field": F.spec_string(), "poly": poly_to_text(f),
               "k": f.nvars, "d": f.total_degree, "size": len(B),
               "empirical_bound": bound, "holds": len(B) <= bound,
               "members": [list(t) for t in sorted(B)]}
        return (0 if len(B) <= bound else 1), _json_text(out)

    return _maybe_cache(args, canon, compute)


def cmd_slavov(args):
    F = _parse_field(args.field)
    if args.poly is None:
        raise ParseError("--poly is required: a ';'-separated family")
    texts = [t.strip() for t in args.poly.split(";") if t.strip()]
    if not texts:
        raise ParseError("empty polynomial family")
    m = args.m or max(_infer_nvars(t) for t in texts)
    if m < 1:
        raise ParseError("cannot infer the variable count; pass --m")
    family = [parse_poly(F, m, t) for t in texts]
    canon = {"command": "slavov", "field": F.spec_string(), "m": m,
             "family": [poly_to_text(g) for g in family]}

    def compute():
        rep = slavov_count(F, family, check_condition=True, budget=args.budget_tuples)
        out = {"command": "slavov", "field": F.spec_string(), "m": m,
               "family": [poly_to_text(g) for g in family]}
        out.update(rep.to_json())
        code = 0 if rep.notes["condition_ok"] else 1
        return code, _json_text(out)

    return _maybe_cache(args, canon, compute)


# ---------------------------------------------------------------------------
# Scan: a seeded sweep over (q, random symmetric f) emitting CSV rows.
# ---------------------------------------------------------------------------

def _row_seed(seed, q, i):
    return (seed * 1000003 + q) * 1000003 + i


def _scan_row(job):
    q, i, k, d, m, seed = job
    F = Field.from_order(q)
    f = random_symmetric_poly(F, k, d, seed=_row_seed(seed, q, i))
    verdict = is_admissible(f)
    cells = [str(q), str(i), poly_to_text(f), verdict.status]
    if verdict.admissible:
        Y = build_hypergraph(F, f)
        epo = count_epo_direct(Y)
        tup = count_m_subsets(Y, m, with_envelope=False)
        cells += [str(epo.observed), repr(epo.relative_deviation),
                  str(tup.observed), repr(tup.relative_deviation)]
    else:
        cells += ["", "", "", ""]
    return ",".join(cells)


def scan_text(fields, samples, k, d, m, seed, workers):
    """Deterministic CSV sweep; byte-identical across worker counts."""
    jobs = [(q, i, k, d, m, seed) for q in fields for i in range(samples)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_scan_row, jobs))
    else:
        rows = [_scan_row(j) for j in jobs]
    header = ("q,index,poly,status,epo_observed,epo_rel_dev,"
              "tuples_observed,tuples_rel_dev")
    tag = " seed=%d k=%d d=%d m=%d" % (seed, k, d, m)
    return _csv_text("scan", tag, header.split(","), [r.split(",") for r in rows])


def cmd_scan(args):
    if args.field is None:
        raise ParseError("--field is required: a comma-separated q list")
    try:
        fields = tuple(int(t) for t in args.field.split(",") if t.strip())
    except ValueError:
        raise ParseError("--field for scan must be a comma-separated integer list")
    if not fields:
        raise ParseError("empty field list")
    k = args.k or 2
    d = args.d or 2
    m = args.m or max(3, k)
    if m < k:
        raise ParseError("--m must be at least k")
    canon = {"command": "scan", "fields": list(fields), "samples": args.samples,
             "k": k, "d": d, "m": m, "seed": args.seed}

    def compute():
        return 0, scan_text(fields, args.samples, k, d, m, args.seed, args.workers)

    return _maybe_cache(args, canon, compute)


def cmd_verify(args):
    report = run_checks(only=args.only, workers=args.workers)
    return (0 if report["passed"] else 1), _json_text(report)


# ---------------------------------------------------------------------------
# Argument parsing and dispatch.
# ---------------------------------------------------------------------------

HANDLERS = {
    "admissible": cmd_admissible,
    "epo": cmd_epo,
    "tuples": cmd_tuples,
    "clique": cmd_clique,
    "weil": cmd_weil,
    "xset": cmd_xset,
    "bset": cmd_bset,
    "slavov": cmd_slavov,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ffhyper",
        description="Hypergraphs from symmetric polynomials over odd finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        sp = sub.add_parser(name)
        sp.add_argument("--field", help="field size q or p^n spec")
        sp.add_argument("--poly", help="polynomial text in x1..xk")
        sp.add_argument("--k", type=int, help="uniformity / variable count")
        sp.add_argument("--m", type=int, help="tuple or family arity")
        sp.add_argument("--s", type=int, help="scalar multiplier handle (weil)")
        sp.add_argument("--d", type=int, help="polynomial degree (scan)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--budget-tuples", type=int, default=DEFAULT_TUPLE_BUDGET)
        sp.add_argument("--budget-mem", type=int, default=DEFAULT_MEM_BUDGET)
        sp.add_argument("--format", choices=("json", "csv"),
                        default="csv" if name == "scan" else "json")
        sp.add_argument("--out", help="write output to a file instead of stdout")
        sp.add_argument("--cache-dir", help="result cache directory")
        sp.add_argument("--method", choices=("direct", "charsum", "both"),
                        default="direct")
        sp.add_argument("--paley", action="store_true",
                        help="use the sum polynomial x1+...+xk")
        sp.add_argument("--only", help="filter verify checks by substring")
        sp.add_argument("--samples", type=int, default=50,
                        help="random polynomials per field (scan)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.field is None and args.command not in ("verify",):
            raise ParseError("--field is required")
        code, text = HANDLERS[args.command](args)
    except ParseError as exc:
        print("ffhyper: %s" % exc, file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print("ffhyper: budget exceeded: %s" % exc, file=sys.stderr)
        return 3
    except (FFHyperError, ValueError) as exc:
        print("ffhyper: %s" % exc, file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
