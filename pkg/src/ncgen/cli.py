"""Command-line interface.

Subcommands:
  lyndon    enumerate Lyndon words over X, Y, or Y0
  table     print reference tables (dual bases, pi/sigma, C^-, Eulerian)
  verify    run identity checks; prints a JSON report, exit 0 iff pass
  eval      evaluate a polylogarithm or a negative-index harmonic sum
  simulate  truncated Chen/Fliess output of a polynomial system

Global flags: --format {text,json}, --precision DIGITS, --seed N.
The environment variable NCGEN_MAX_DEPTH caps every depth-like argument.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from ncgen.words import (
    X,
    Y,
    Y0,
    lyndon_words,
    str_to_word,
    word_to_str,
)


class CLIError(Exception):
    pass


def _parse_word(text):
    try:
        return str_to_word(text)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _roundfloats(obj, digits):
    if isinstance(obj, float):
        return float("%.*g" % (digits, obj))
    if isinstance(obj, dict):
        return {k: _roundfloats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_roundfloats(v, digits) for v in obj]
    return obj


def _emit(args, payload, text_lines=None):
    payload = _roundfloats(payload, args.precision)
    if args.format == "json" or text_lines is None:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines(payload):
            print(line)


def _depth_cap(args):
    cap = os.environ.get("NCGEN_MAX_DEPTH")
    if not cap:
        return
    cap = int(cap)
    for attr in ("depth", "max_len", "max_weight", "max_n"):
        val = getattr(args, attr, None)
        if val is not None and val > cap:
            raise CLIError(
                "%s=%d exceeds NCGEN_MAX_DEPTH=%d" % (attr, val, cap))


# ---------------------------------------------------------------------------
# lyndon

def cmd_lyndon(args):
    try:
        words = lyndon_words(args.alphabet, max_length=args.max_len,
                             max_weight=args.max_weight)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    payload = {"alphabet": args.alphabet,
               "count": len(words),
               "words": [word_to_str(w, args.alphabet) for w in words]}
    _emit(args, payload, lambda p: p["words"])
    return 0


# ---------------------------------------------------------------------------
# tables

def _poly_json(p):
    return p.to_json_dict()["terms"]


def cmd_table(args):
    from ncgen import asymptotics, hopf, ncpoly, negpolylog

    if args.which == "dual-bases":
        alphabet = args.alphabet
        try:
            lws = lyndon_words(alphabet, max_length=args.max_len,
                               max_weight=args.max_weight)
        except ValueError as exc:
            raise CLIError(str(exc)) from None
        rows = []
        for l in lws:
            if alphabet == X:
                p, s = hopf.pbw_p(l), hopf.dual_s(l)
            else:
                p, s = hopf.pbw_pi(l), hopf.dual_sigma(l)
            rows.append({"lyndon": word_to_str(l, alphabet),
                         "p": _poly_json(p), "s": _poly_json(s)})
        payload = {"alphabet": alphabet, "rows": rows}
        _emit(args, payload, lambda pl: [
            "%-12s  P = %s\n%-12s  S = %s" % (
                r["lyndon"], ncpoly.poly_to_str(_terms_to_poly(r["p"], pl["alphabet"])),
                "", ncpoly.poly_to_str(_terms_to_poly(r["s"], pl["alphabet"])))
            for r in pl["rows"]])
        return 0

    if args.which == "pi-sigma":
        if args.max_weight is None:
            raise CLIError("pi-sigma needs --max-weight")
        rows = []
        for w in ncpoly.words_up_to(Y, args.max_weight):
            if not w:
                continue
            rows.append({"word": word_to_str(w, Y),
                         "pi": _poly_json(hopf.pbw_pi(w)),
                         "sigma": _poly_json(hopf.dual_sigma(w))})
        _emit(args, {"rows": rows}, lambda pl: [
            "%-10s  Pi = %-40s Sigma = %s" % (
                r["word"], ncpoly.poly_to_str(_terms_to_poly(r["pi"], Y)),
                ncpoly.poly_to_str(_terms_to_poly(r["sigma"], Y)))
            for r in pl["rows"]])
        return 0

    if args.which == "cminus":
        if args.max_weight is None:
            raise CLIError("cminus needs --max-weight")
        rows = []
        for w in ncpoly.words_up_to(Y, args.max_weight):
            if not w:
                continue
            rows.append({"word": word_to_str(w, Y),
                         "degree": asymptotics.growth_degree(w),
                         "c_minus": str(asymptotics.c_minus(w)),
                         "b_minus": str(asymptotics.b_minus(w))})
        _emit(args, {"rows": rows}, lambda pl: [
            "%-10s d=%-3s C=%-12s B=%s" % (r["word"], r["degree"],
                                           r["c_minus"], r["b_minus"])
            for r in pl["rows"]])
        return 0

    if args.which == "eulerian":
        n_max = args.max_n if args.max_n is not None else 6
        rows = []
        for n in range(1, n_max + 1):
            rows.append({"n": n,
                         "values": [str(negpolylog.eulerian(n, k))
                                    for k in range(max(n - 1, 0) + 1)]})
        _emit(args, {"rows": rows}, lambda pl: [
            "n=%d: %s" % (r["n"], " ".join(r["values"])) for r in pl["rows"]])
        return 0

    raise CLIError("unknown table %r" % args.which)


def _terms_to_poly(terms, alphabet):
    from ncgen.ncpoly import NCPoly
    return NCPoly.from_json_dict({"terms": terms}, alphabet)


# ---------------------------------------------------------------------------
# verify

def _grouplike_err(series, product, depth):
    from ncgen.ncpoly import shuffle_words, stuffle_words, words_up_to
    from ncgen.words import weight
    word_product = {"shuffle": shuffle_words, "stuffle": stuffle_words}[product]
    ws = words_up_to(series.alphabet, depth)
    worst = 0.0
    for u in ws:
        du = weight(u, series.alphabet)
        for v in ws:
            if du + weight(v, series.alphabet) > depth:
                continue
            # keep Fractions exact; only the final error becomes a float
            lhs = series.coeff(u) * series.coeff(v)
            rhs = sum(c * series.coeff(w)
                      for w, c in word_product(u, v).items())
            worst = max(worst, abs(float(lhs - rhs)))
    return worst


def verify_duality(args):
    from ncgen import hopf
    from ncgen.ncpoly import words_up_to
    depth = args.depth or 4
    alphabet = args.alphabet
    ws = [w for w in words_up_to(alphabet, depth) if w]
    worst = 0
    for u in ws:
        su = hopf.dual_s(u) if alphabet == X else hopf.dual_sigma(u)
        for v in ws:
            pv = hopf.pbw_p(v) if alphabet == X else hopf.pbw_pi(v)
            got = sum((c * su.coeff(w) for w, c in pv.terms.items()),
                      Fraction(0))
            worst = max(worst, abs(got - (1 if u == v else 0)))
    return {"identity": "dual-bases-pairing", "alphabet": alphabet,
            "depth": depth, "max_abs_err": float(worst), "pass": worst == 0}


def verify_grouplike(args):
    from ncgen.polylog import harmonic_series
    from ncgen.renorm import z_shuffle_series, z_stuffle_series
    depth = args.depth or 4
    h_err = _grouplike_err(harmonic_series(10, depth), "stuffle", depth)
    zsh_err = _grouplike_err(z_shuffle_series(depth), "shuffle", depth)
    zst_err = _grouplike_err(z_stuffle_series(depth), "stuffle", depth)
    worst = max(h_err, zsh_err, zst_err)
    return {"identity": "grouplike", "depth": depth,
            "harmonic_err": h_err, "z_shuffle_err": zsh_err,
            "z_stuffle_err": zst_err,
            "max_abs_err": worst,
            "pass": h_err == 0.0 and max(zsh_err, zst_err) <= 1e-3}


def verify_bridge(args):
    from ncgen.renorm import bridge_check
    depth = args.depth or 4
    report = bridge_check(depth)
    return {"identity": "bridge", "depth": depth,
            "max_abs_err": report["max_abs_err"], "pass": report["pass"]}


def verify_abel(args):
    from ncgen.renorm import abel_limits_check
    depth = args.depth or 3
    report = abel_limits_check(max_weight=depth)
    return {"identity": "abel", "depth": depth,
            "max_abs_err": report["max_fitted_gap"], "pass": report["pass"]}


def verify_cminus(args):
    import random
    from ncgen.asymptotics import cone_linear_check
    rng = random.Random(args.seed)
    depth = args.depth or 4
    trials = 100
    ok = True
    for _ in range(trials):
        u = tuple(rng.randint(0, depth) for _ in range(rng.randint(1, 3)))
        v = tuple(rng.randint(0, depth) for _ in range(rng.randint(1, 3)))
        ok = ok and cone_linear_check(u, v, "shuffle")
        ok = ok and cone_linear_check(u, v, "stuffle")
    return {"identity": "cminus-cone-linearity", "depth": depth,
            "trials": trials, "max_abs_err": 0.0 if ok else 1.0, "pass": ok}


def verify_faulhaber(args):
    from ncgen.negpolylog import faulhaber_roundtrip
    from ncgen.ncpoly import words_up_to

    depth = args.depth or 6
    ok = True
    tested = 0
    for w in words_up_to(Y, depth):
        if not w or len(w) > 3:
            continue
        ok = ok and faulhaber_roundtrip(w)
        tested += 1
    return {"identity": "faulhaber-roundtrip", "depth": depth,
            "words": tested, "max_abs_err": 0.0 if ok else 1.0, "pass": ok}


def verify_dynsys(args):
    from ncgen.dynsys import (
        StatePoly,
        chen_ode,
        residual_identity_check,
        shuffle_morphism_check,
        system_hypergeometric,
    )
    from ncgen.rational import rep_hypergeometric
    from ncgen.ncpoly import words_up_to
    depth = args.depth or 4
    q0 = (Fraction(2, 3), Fraction(-1, 5))
    t = (Fraction(1, 4), Fraction(1, 4), Fraction(1, 3))
    system = system_hypergeometric(*t, q0)
    rep = rep_hypergeometric(*t, q0=q0)
    exact_ok = all(system.fliess_coefficient(w) == rep.coefficient(w)
                   for w in words_up_to(X, min(depth, 5)))
    full = chen_ode(0.2, 0.5, depth)
    comp = chen_ode(0.35, 0.5, depth) * chen_ode(0.2, 0.35, depth)
    path_err = full.max_abs_diff(comp)
    q1 = StatePoly.coord(2, 0)
    q2 = StatePoly.coord(2, 1)
    shuffle_ok = shuffle_morphism_check(system, q1, q2, min(depth, 4))
    residual_ok = residual_identity_check(system, (0, 1), min(depth, 4))
    ok = exact_ok and shuffle_ok and residual_ok and path_err <= 1e-8
    return {"identity": "dynsys", "depth": depth,
            "rep_vs_fields_exact": exact_ok,
            "path_composition_err": path_err,
            "shuffle_morphism": shuffle_ok,
            "residual_identity": residual_ok,
            "max_abs_err": path_err if ok else max(path_err, 1.0),
            "pass": ok}


VERIFIERS = {
    "duality": verify_duality,
    "grouplike": verify_grouplike,
    "bridge": verify_bridge,
    "abel": verify_abel,
    "cminus": verify_cminus,
    "faulhaber": verify_faulhaber,
    "dynsys": verify_dynsys,
}


def cmd_verify(args):
    report = VERIFIERS[args.which](args)
    report = _roundfloats(report, args.precision)
    print(json.dumps(report, indent=2))
    return 0 if report["pass"] else 1


# ---------------------------------------------------------------------------
# eval

def cmd_eval(args):
    if args.which == "li":
        from ncgen.polylog import polylog_eval
        word, _ = _parse_word(args.word)
        if args.z is None:
            raise CLIError("li needs --z")
        try:
            value, tail = polylog_eval(word, args.z, terms=args.terms)
        except ValueError as exc:
            raise CLIError(str(exc)) from None
        payload = {"word": args.word, "z": args.z, "terms": args.terms,
                   "value": value, "tail_bound": tail}
        _emit(args, payload,
              lambda p: ["Li_{%s}(%g) = %s  (tail <= %s)"
                         % (p["word"], p["z"], p["value"], p["tail_bound"])])
        return 0

    if args.which == "hneg":
        from ncgen.negpolylog import h_neg, h_neg_value
        word, alphabet = _parse_word(args.word)
        if alphabet == X:
            raise CLIError("hneg expects a Y/Y0 word such as 'y2 y1'")
        if args.n is not None:
            val = h_neg_value(word, args.n)
            payload = {"word": args.word, "n": args.n, "value": str(val)}
            _emit(args, payload,
                  lambda p: ["H^-_{%s}(%d) = %s" % (p["word"], p["n"],
                                                    p["value"])])
            return 0
        poly = h_neg(word)
        payload = {"word": args.word, "polynomial": poly.to_json_dict()}
        _emit(args, payload,
              lambda p: ["H^-_{%s}(N): coefs %s" %
                         (p["word"], p["polynomial"]["coefs"])])
        return 0

    raise CLIError("unknown eval target %r" % args.which)


# ---------------------------------------------------------------------------
# simulate

def cmd_simulate(args):
    from ncgen.dynsys import (
        chen_drift,
        chen_ode,
        fliess_output,
        load_system,
    )
    try:
        system = load_system(args.system)
    except (OSError, KeyError, ValueError) as exc:
        raise CLIError("cannot load system: %s" % exc) from None
    depth = args.depth
    if args.z is not None:
        z0 = args.z0 if args.z0 is not None else (system.z0 or 0.2)
        chen = chen_ode(z0, args.z, depth)
        y = fliess_output(system, chen, depth)
        payload = {"mode": "forms", "z0": z0, "z": args.z,
                   "depth": depth, "output": y}
    elif args.T is not None:
        controls = tuple(float(c) for c in args.controls.split(","))
        if len(controls) < len(system.fields):
            raise CLIError("need %d controls" % len(system.fields))
        chen = chen_drift(args.T, depth, controls)
        y = fliess_output(system, chen, depth)
        payload = {"mode": "drift", "T": args.T, "controls": list(controls),
                   "depth": depth, "output": y}
    else:
        raise CLIError("simulate needs --z or --T")
    _emit(args, payload, lambda p: ["output = %s" % p["output"]])
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser():
    parser = argparse.ArgumentParser(
        prog="ncgen",
        description="Exact computer algebra for shuffle/stuffle Hopf "
                    "algebras, polylogarithms, harmonic sums, and "
                    "truncated Chen/Fliess series.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--precision", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lyndon", help="enumerate Lyndon words")
    p.add_argument("--alphabet", choices=(X, Y, Y0), default=X)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=None)
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("table", help="reference tables")
    p.add_argument("which", choices=("dual-bases", "pi-sigma", "cminus",
                                     "eulerian"))
    p.add_argument("--alphabet", choices=(X, Y), default=X)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="identity checks (JSON report)")
    p.add_argument("which", choices=sorted(VERIFIERS))
    p.add_argument("--alphabet", choices=(X, Y), default=X)
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate quantities")
    p.add_argument("which", choices=("li", "hneg"))
    p.add_argument("--word", required=True)
    p.add_argument("--z", type=float, default=None)
    p.add_argument("--terms", type=int, default=400)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("simulate", help="truncated Chen/Fliess output")
    p.add_argument("--system", required=True)
    p.add_argument("--z", type=float, default=None)
    p.add_argument("--z0", type=float, default=None)
    p.add_argument("--T", type=float, default=None)
    p.add_argument("--controls", default="1.0,0.0")
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _depth_cap(args)
        return args.func(args)
    except CLIError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
