"""Command line entry point: ``posdet <subcommand> ...``."""

import argparse
import json
import sys

from .lattice import one, sub, zero
from .linalg import field_from_string
from .textio import parse_file, build_module, ParseError
from .boxmod import pullback_functor, alexander_dual, annihilator_and_dim
from .homological import betti_table, ext_window, classify
from . import harness


def _vec(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def _load(args):
    doc = parse_file(args.file)
    return doc, build_module(doc, field_from_string(args.field))


def _print_dims(M, out):
    for a, d in sorted(M.dims.items()):
        if d:
            print(f"{_vec(a)}  {d}", file=out)


def cmd_radical(args, out):
    doc, M = _load(args)
    if not doc.modules and len(doc.ideals) == 1:
        name, I = next(iter(doc.ideals.items()))
        rad = I.radical()
        check = I.radical_by_degrees(I.tight_bound())
        print(f"sqrt({name}) = {rad.to_text(doc.names)}", file=out)
        if rad != check:
            print("error: the two radical algorithms disagree", file=out)
            return 1
        return 0
    print(f"# r*M on {_vec(zero(M.n))}..{_vec(one(M.n))}: degree  dim", file=out)
    _print_dims(pullback_functor(M, "r"), out)
    return 0


def cmd_betti(args, out):
    _, M = _load(args)
    for line in betti_table(M).lines(total=args.total):
        print(line, file=out)
    return 0


def cmd_dim(args, out):
    _, M = _load(args)
    print(annihilator_and_dim(M)[1], file=out)
    return 0


def cmd_depth(args, out):
    _, M = _load(args)
    print(classify(M).depth, file=out)
    return 0


def cmd_cm(args, out):
    _, M = _load(args)
    c = classify(M)
    for key in ("projdim", "depth", "dim", "is_CM", "is_seq_CM", "is_gen_CM"):
        print(f"{key:<10} {getattr(c, key)}", file=out)
    return 0


def cmd_adual(args, out):
    _, M = _load(args)
    print(f"# A_t(M) with t={_vec(M.hi)}: degree  dim", file=out)
    _print_dims(alexander_dual(M), out)
    return 0


def cmd_ext(args, out):
    _, M = _load(args)
    c = one(M.n) if args.c == "one" else M.hi
    E = ext_window(M, c, args.p)
    print(f"# Ext^{args.p}(M, S(-{_vec(c)})) on {_vec(E.lo)}..{_vec(E.hi)}: degree  dim", file=out)
    _print_dims(E, out)
    return 0


def _emit_records(reports, path, out):
    lines = [r.jsonl() for r in reports if r.records]
    if path == "-":
        print("", file=out)
        print("\n".join(lines), file=out)
    elif path:
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def cmd_verify(args, out):
    if args.repro:
        verdict, fails, notes = harness.run_repro(args.repro)
        print(f"{args.repro}: {verdict}", file=out)
        for m in fails + notes:
            print(f"  {m}", file=out)
        return 0 if verdict != "fail" else 1
    names = [args.check] if args.check else list(harness.CHECKS)
    unknown = [n for n in names if n not in harness.CHECKS]
    if unknown:
        print(f"unknown check {unknown[0]!r}; known: {', '.join(harness.CHECKS)}", file=sys.stderr)
        return 2
    reports = []
    for name in names:
        r = harness.check_suite(name, count=args.count, seed=args.seed)
        reports.append(r)
        print(r.summary(), file=out, flush=True)
        for f in r.failures[:5]:
            print(f"  FAIL seed={f.seed} {f.message.splitlines()[0]}", file=out)
        if r.findings:
            seed, msg = r.findings[0]
            print(f"  reported ({len(r.findings)}), first at seed={seed}: {msg}", file=out)
        if r.failures and args.repro_dir:
            for p in r.write_repro(args.repro_dir):
                print(f"  reproduction written to {p}", file=out)
    failed = sum(len(r.failures) for r in reports)
    print(f"{'OK' if not failed else 'FAILED'}: {failed} failures in "
          f"{sum(r.instances for r in reports)} instances", file=out)
    _emit_records(reports, args.records, out)
    return 0 if not failed else 1


def cmd_paper_examples(args, out):
    r = harness.paper_examples()
    for rec in r.records:
        print(f"{rec['verdict'].upper():<5} {rec['assertion']}  [{rec['detail']}]", file=out)
    print(r.summary(), file=out)
    return 0 if r.ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="posdet",
                                description="Positively determined multigraded modules.")
    subs = p.add_subparsers(dest="command", required=True)

    def module_cmd(name, fn, help_):
        sp = subs.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--field", default="q", help="q (rationals) or fp:<p>")
        sp.set_defaults(fn=fn)
        return sp

    module_cmd("radical", cmd_radical, "radical of an ideal, or r*M of a module")
    b = module_cmd("betti", cmd_betti, "multigraded Betti numbers")
    b.add_argument("--total", action="store_true", help="aggregate by total degree")
    module_cmd("dim", cmd_dim, "Krull dimension")
    module_cmd("depth", cmd_depth, "depth")
    module_cmd("cm", cmd_cm, "projdim, depth, dim and CM-type flags")
    module_cmd("adual", cmd_adual, "Alexander dual A_t")
    e = module_cmd("ext", cmd_ext, "Ext^p(M, S(-c)) on the window [c-t, c]")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--c", choices=["one", "t"], default="one")

    v = subs.add_parser("verify", help="run the theorem checks on random instances")
    v.add_argument("--check", help="one check name (default: all)")
    v.add_argument("--count", type=int, help="instances per check (default: per-check)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--records", default="-",
                   help="where to write JSON lines, '-' for stdout, '' to disable")
    v.add_argument("--repro-dir", help="write one reproduction file per failure here")
    v.add_argument("--repro", help="re-run a reproduction file")
    v.set_defaults(fn=cmd_verify)

    pe = subs.add_parser("paper-examples", help="the two worked examples")
    pe.set_defaults(fn=cmd_paper_examples)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
