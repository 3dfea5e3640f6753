"""Command-line entry point.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource
guard abort.  JSON is written to stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from .laurent import LaurentPoly
from .quotient import (
    AlgebraElement,
    DEFAULT_SPAN_CAP,
    RelationSystem,
    ResourceGuardError,
    act_on_tuple,
    canonical_form_lam,
    equal_in_quotient,
    equivalence_class,
)
from .shapes import conjugate, core_and_quotient, partitions_up_to

log = logging.getLogger("ribbon_llt")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

ALGEBRAS = {"lam": "lam", "lam-le": "lam_le", "rot-le": "rot_le", "bij": "bij"}


class UsageError(Exception):
    pass


def _ints(s: str) -> tuple:
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}") from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from None


def _relation_system(args) -> RelationSystem:
    kind = ALGEBRAS[args.algebra]
    if kind != "bij":
        return RelationSystem(kind, args.k)
    choices = {}
    if args.choices:
        raw = _load_json(args.choices)
        for key, ch in raw.items():
            choices[_ints(key)] = ch
    return RelationSystem.bijectivization(args.k, choices)


def _poly_json(p: LaurentPoly) -> list:
    return p.to_triples()


def _schur_json(d: dict) -> dict:
    return {",".join(map(str, lam)): _poly_json(c) for lam, c in sorted(d.items(), reverse=True)}


def _emit(obj, args):
    if getattr(args, "format", "json") == "text" and isinstance(obj, dict) and "text" in obj:
        print(obj["text"])
    else:
        print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------------------
# subcommands


def cmd_core_quot(args):
    core, quot = core_and_quotient(_ints(args.partition), args.k)
    _emit({"core": list(core), "quotient": [list(p) for p in quot]}, args)
    return EXIT_OK


def cmd_nf(args):
    v = _ints(args.word)
    nf = canonical_form_lam(v, args.k)
    out = nf.to_json()
    out["text"] = "0" if nf.is_zero else f"q^{nf.power} * {list(nf.rep)}"
    _emit(out, args)
    return EXIT_OK


def cmd_class(args):
    cls = equivalence_class(_ints(args.word), args.k, cap=args.class_cap)
    _emit({"size": len(cls), "words": [list(w) for w in sorted(cls)]}, args)
    return EXIT_OK


def cmd_act(args):
    delta = [list(_ints(p)) for p in args.tuple.split("/")]
    if len(delta) != args.k:
        raise UsageError(f"--tuple needs {args.k} '/'-separated partitions")
    d = _ints(args.offsets) if args.offsets else None
    res = act_on_tuple(delta, _ints(args.word), args.k, d)
    _emit({"result": None if res is None else [list(p) for p in res]}, args)
    return EXIT_OK


def cmd_equal(args):
    rs = _relation_system(args)
    f, g = AlgebraElement.from_word(_ints(args.lhs)), AlgebraElement.from_word(_ints(args.rhs))
    eq = equal_in_quotient(f, g, rs, args.span_cap)
    _emit({"equal": eq}, args)
    return EXIT_OK


def cmd_rsst(args):
    from .rsst import Rsst, arrows, enumerate_rsst, sqread
    from .shapes import RestrictedShape

    if args.rsst_cmd == "enumerate":
        if args.carved:
            shape = RestrictedShape(_ints(args.shape), _ints(args.carved))
        else:
            shape = tuple(int(x) for x in _ints(args.shape))
        ts = enumerate_rsst(shape, flags=_ints(args.flags) if args.flags else None,
                            contents=_ints(args.contents) if args.contents else None)
        _emit({"count": len(ts), "tableaux": [t.to_json() for t in ts]}, args)
        return EXIT_OK
    t = Rsst.from_json(_load_json(args.tableau))
    if args.rsst_cmd == "sqread":
        w = sqread(t)
        _emit({"sqread": list(w), "text": " ".join(map(str, w))}, args)
    else:
        _emit({"arrows": [{"tail": list(a), "head": list(b), "kind": k} for a, b, k in arrows(t)]}, args)
    return EXIT_OK


def cmd_ncsf(args):
    from .ncsf import FlagSpec, flagged_schur, flagged_schur_lam, verify_equal_columns_commute, verify_theorem_main
    from .ncsf import _terms_json

    if args.ncsf_cmd == "j":
        spec = FlagSpec.flagged(_ints(args.alpha), _ints(args.flags))
        rs = _relation_system(args)
        if args.reduce and rs.kind == "lam":
            _emit({"terms": _terms_json(flagged_schur_lam(spec, rs.k))}, args)
        else:
            f = flagged_schur(spec)
            _emit({"terms": [[list(w), c.to_triples()] for w, c in sorted(f.terms.items())]}, args)
        return EXIT_OK
    if args.ncsf_cmd == "verify-lemma":
        ok = verify_equal_columns_commute(args.a, args.m, args.x, args.k)
        _emit({"status": "ok" if ok else "mismatch"}, args)
        return EXIT_OK if ok else EXIT_FAIL
    # verify-main
    if args.lam:
        lam = _ints(args.lam)
        flags = _ints(args.flags) if args.flags else (args.max_flag,) * len(conjugate(lam))
        rep = verify_theorem_main(lam, flags, args.k)
        _emit(rep, args)
        return EXIT_OK if rep["status"] == "ok" else EXIT_FAIL
    return _verify_main_sweep(args)


def _sweep_one(job):
    from .ncsf import verify_theorem_main

    lam, flags, k = job
    return verify_theorem_main(lam, flags, k)


def _flag_tuples(length, max_flag):
    def rec(prefix):
        if len(prefix) == length:
            yield prefix
            return
        for n in range(prefix[-1] if prefix else 0, max_flag + 1):
            yield from rec(prefix + (n,))
    yield from rec(())


def _verify_main_sweep(args):
    jobs = [(lam, flags, args.k)
            for lam in partitions_up_to(args.max_size) if lam
            for flags in _flag_tuples(len(conjugate(lam)), args.max_flag)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            reports = list(ex.map(_sweep_one, jobs, chunksize=16))
    else:
        reports = [_sweep_one(j) for j in jobs]
    bad = [r for r in reports if r["status"] != "ok"]
    _emit({"instances": len(reports), "mismatches": len(bad), "failures": bad[:10]}, args)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_llt(args):
    from .llt import SkewTuple, llt_polynomial, qlr_coefficients, qlr_oracle, spin_llt

    if args.llt_cmd == "spin":
        f = spin_llt(_ints(args.mu), _ints(args.nu), args.k)
        _emit(f.to_json(), args)
        return EXIT_OK
    beta = SkewTuple.from_json(_load_json(args.tuple))
    if args.llt_cmd == "poly":
        if beta.k != args.k:
            raise UsageError(f"tuple has {beta.k} components but --k is {args.k}")
        f = llt_polynomial(beta, args.k)
        if args.q1:
            f = f.at_one()
        out = f.to_json()
        if args.vars:
            out["monomials"] = [[list(e), c.to_triples()] for e, c in sorted(f.monomial_coefficients(args.vars).items())]
        _emit(out, args)
        return EXIT_OK
    # qlr
    lam = _ints(args.lam) if args.lam else None
    coeffs = qlr_oracle(beta) if args.oracle else qlr_coefficients(beta, lam)
    if lam is not None:
        coeffs = {lam: coeffs.get(lam, LaurentPoly())}
    out = _schur_json(coeffs)
    if lam is not None:
        out = {"lambda": list(lam), "coeff": _poly_json(coeffs[lam]), "text": coeffs[lam].format()}
    _emit(out, args)
    return EXIT_OK


def cmd_conjecture(args):
    from .conjecture import admissible_instances, check_letter_peeling

    if args.y is not None or args.x is not None:
        if args.x is None or args.m is None:
            raise UsageError("--m and --x are required for a single instance")
        y = _ints(args.y or "")
        n = _ints(args.n or "")
        ok = check_letter_peeling(args.m, n, args.x, y, args.a, args.span_cap)
        _emit({"holds": ok}, args)
        return EXIT_OK if ok else EXIT_FAIL
    results = []
    for t in args.t:
        for inst in admissible_instances(t, args.max_letter, args.max_a, args.span_cap):
            ok = check_letter_peeling(*inst, span_cap=args.span_cap)
            results.append((inst, ok))
    bad = [list(map(list, [[i[0]], i[1], [i[2]], i[3], [i[4]]])) for i, ok in results if not ok]
    _emit({"instances": len(results), "counterexamples": bad}, args)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_golden(args):
    from .golden import run_goldens

    rows = run_goldens()
    bad = [label for label, ok, _, _ in rows if not ok]
    report = {"total": len(rows), "failed": bad,
              "text": "\n".join(f"{'PASS' if ok else 'FAIL'} {label}" for label, ok, _, _ in rows)}
    _emit(report, args)
    return EXIT_OK if not bad else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=3)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--algebra", choices=sorted(ALGEBRAS), default="lam")
    common.add_argument("--choices", help="JSON map 'a,b,c' -> knuth|rotation for --algebra bij")
    common.add_argument("--class-cap", type=int, default=None)
    common.add_argument("--span-cap", type=int, default=DEFAULT_SPAN_CAP)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="ribbon-llt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("core-quot", parents=[common], help="k-core and k-quotient of a partition")
    s.add_argument("--partition", required=True)
    s.set_defaults(func=cmd_core_quot)

    s = sub.add_parser("nf", parents=[common], help="canonical form of a word in Lam's algebra")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("class", parents=[common], help="q=1 equivalence class of a word")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_class)

    s = sub.add_parser("act", parents=[common], help="act on a k-tuple of partitions")
    s.add_argument("--tuple", required=True, help="partitions separated by '/', e.g. '1/1,1/2,1'")
    s.add_argument("--word", required=True)
    s.add_argument("--offsets")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("equal", parents=[common], help="compare two words in a quotient")
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("rsst", help="restricted square strict tableaux")
    rs = s.add_subparsers(dest="rsst_cmd", required=True)
    e = rs.add_parser("enumerate", parents=[common])
    e.add_argument("--shape", required=True, help="row lengths, or column lengths with --carved")
    e.add_argument("--carved")
    e.add_argument("--flags")
    e.add_argument("--contents")
    for name in ("sqread", "arrows"):
        x = rs.add_parser(name, parents=[common])
        x.add_argument("--tableau", required=True, help="RSST JSON file")
    s.set_defaults(func=cmd_rsst)

    s = sub.add_parser("ncsf", help="noncommutative flagged Schur functions")
    ns = s.add_subparsers(dest="ncsf_cmd", required=True)
    j = ns.add_parser("j", parents=[common])
    j.add_argument("--alpha", required=True)
    j.add_argument("--flags", required=True)
    j.add_argument("--reduce", action="store_true")
    vm = ns.add_parser("verify-main", parents=[common])
    vm.add_argument("--lambda", dest="lam")
    vm.add_argument("--flags")
    vm.add_argument("--max-size", type=int, default=6)
    vm.add_argument("--max-flag", type=int, default=8)
    vl = ns.add_parser("verify-lemma", parents=[common])
    vl.add_argument("--a", type=int, required=True)
    vl.add_argument("--m", type=int, required=True)
    vl.add_argument("--x", type=int, required=True)
    s.set_defaults(func=cmd_ncsf)

    s = sub.add_parser("llt", help="LLT polynomials and q-LR coefficients")
    ls = s.add_subparsers(dest="llt_cmd", required=True)
    lp = ls.add_parser("poly", parents=[common])
    lp.add_argument("--tuple", required=True)
    lp.add_argument("--q1", action="store_true")
    lp.add_argument("--vars", type=int)
    lq = ls.add_parser("qlr", parents=[common])
    lq.add_argument("--tuple", required=True)
    lq.add_argument("--lambda", dest="lam")
    lq.add_argument("--oracle", action="store_true")
    lsp = ls.add_parser("spin", parents=[common])
    lsp.add_argument("--mu", required=True)
    lsp.add_argument("--nu", default="")
    s.set_defaults(func=cmd_llt)

    s = sub.add_parser("conjecture", parents=[common], help="check the letter-peeling identity in rot-le")
    s.add_argument("--m", type=int)
    s.add_argument("--n")
    s.add_argument("--x", type=int)
    s.add_argument("--y")
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--t", type=int, nargs="+", default=[0, 1])
    s.add_argument("--max-letter", type=int, default=8)
    s.add_argument("--max-a", type=int, default=3)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("golden", parents=[common], help="recompute the published worked values")
    s.set_defaults(func=cmd_golden)
    return p


# convenience aliases: `qlr ...` and `verify-main ...` at top level
_ALIASES = {"qlr": ["llt", "qlr"], "verify-main": ["ncsf", "verify-main"], "poly": ["llt", "poly"],
            "spin": ["llt", "spin"]}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] in _ALIASES:
        argv = _ALIASES[argv[0]] + argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "k", 1) < 1 or getattr(args, "span_cap", 1) < 1 or getattr(args, "jobs", 1) < 1:
        print("error: --k, --span-cap and --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "class_cap", None) is not None and args.class_cap < 1:
        print("error: --class-cap must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
