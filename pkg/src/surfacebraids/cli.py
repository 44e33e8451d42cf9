"""Command-line front end.

Subcommands:

* ``presentation --preset P --n N --g G [--format json|text]``
* ``verify --suite S [--n N --g G | --n-max N --g-max G]``
* ``nq --preset P --n N --g G --class C``
* ``derive FILE``
* ``action --n N --g G [--format json|text]``

Reports go to stdout, diagnostics to stderr.  Exit status: 0 if all checks
pass, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import derivations, nilpotent, splitting
from .presentations import (PRESETS, PresentationError, build_presentation)
from .words import format_word

VERIFY_SUITES = derivations.SUITES + ("almost-direct", "all")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _cmd_presentation(args) -> int:
    pres = build_presentation(args.preset, args.n, args.g)
    if args.format == "json":
        _emit({"preset": pres.preset, "n": pres.n, "g": pres.g,
               "generators": [repr(gid) for gid in pres.generators],
               "relators": [format_word(r) for r in pres.relators]})
    else:
        print(f"preset {pres.preset}  n={pres.n}  g={pres.g}")
        print(f"generators ({len(pres.generators)}):")
        print("  " + " ".join(repr(gid) for gid in pres.generators))
        print(f"relators ({len(pres.relators)}):")
        if pres.instances:
            for inst in pres.instances:
                print(f"  {inst}: {format_word(inst.lhs)} = {format_word(inst.rhs)}")
        else:
            for rel in pres.relators:
                print(f"  {format_word(rel)} = 1")
    return EXIT_OK


def _grid(args):
    if args.n is not None:
        return [(args.n, args.g if args.g is not None else 1)]
    n_max = args.n_max if args.n_max is not None else 3
    g_max = args.g_max if args.g_max is not None else 2
    return [(n, g) for n in range(2, n_max + 1) for g in range(1, g_max + 1)]


def _run_suite(suite: str, n: int, g: int) -> dict:
    if suite == "almost-direct":
        return splitting.almost_direct_check(n, g).to_dict()
    report = derivations.builtin_suite(suite, n, g)
    return report.to_dict()


def _cmd_verify(args) -> int:
    suites = list(derivations.SUITES) + ["almost-direct"] \
        if args.suite == "all" else [args.suite]
    started = time.perf_counter()
    results = []
    all_pass = True
    for n, g in _grid(args):
        for suite in suites:
            res = _run_suite(suite, n, g)
            results.append(res)
            all_pass = all_pass and res["pass"]
    results.sort(key=lambda r: (r.get("suite", r.get("name", "")),
                                r.get("n", 0), r.get("g", 0)))
    summary = {"total": len(results),
               "passed": sum(1 for r in results if r["pass"]),
               "failed": sum(1 for r in results if not r["pass"])}
    _emit({"command": "verify", "suite": args.suite, "results": results,
           "summary": summary,
           "duration_seconds": round(time.perf_counter() - started, 3)})
    return EXIT_OK if all_pass else EXIT_FAIL


def _cmd_nq(args) -> int:
    pres = build_presentation(args.preset, args.n, args.g)
    quotients = nilpotent.lcs_quotients(pres, args.nq_class)
    _emit({"preset": pres.preset, "n": pres.n, "g": pres.g,
           "class": args.nq_class,
           "quotients": [{"class": q.weight, "rank": q.rank,
                          "torsion": list(q.torsion)}
                         for q in quotients.quotients],
           "rational_ranks": list(quotients.rational_ranks)})
    return EXIT_OK


def _cmd_derive(args) -> int:
    script = derivations.load_script(args.file)
    report = derivations.check_derivation(script, keep_intermediates=False)
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_action(args) -> int:
    n, g = args.n, args.g
    alphabet = splitting.kernel_alphabet(n, g)
    conjugators = ([("a", (1, k)) for k in range(1, g + 1)]
                   + [("b", (1, k)) for k in range(1, g + 1)])
    rules = []
    from .words import GeneratorId
    for kind, idx in conjugators:
        conj = GeneratorId(kind, idx)
        for target in alphabet.members:
            image = splitting.forward_rule(conj, target, n, g)
            rules.append((conj, target, image))
    if args.format == "json":
        _emit({"n": n, "g": g,
               "kernel_alphabet": [repr(m) for m in alphabet.members],
               "rules": [{"conjugator": repr(c), "target": repr(t),
                          "image": format_word(w)} for c, t, w in rules],
               "matrices": [
                   {"letter": repr(GeneratorId(kind, idx)),
                    "rows": [list(row) for row in
                             splitting.action_matrix(GeneratorId(kind, idx),
                                                     n, g).rows]}
                   for kind, idx in conjugators]})
    else:
        print(f"kernel alphabet ({len(alphabet.members)}): "
              + " ".join(repr(m) for m in alphabet.members))
        print("conjugation rules:")
        for conj, target, image in rules:
            print(f"  ^{conj!r} {target!r} = {format_word(image)}")
        print("action matrices on the abelianized kernel (rows = basis):")
        for kind, idx in conjugators:
            mat = splitting.action_matrix(GeneratorId(kind, idx), n, g)
            print(f"  {GeneratorId(kind, idx)!r}:")
            for row in mat.rows:
                print("    " + " ".join(f"{v:3d}" for v in row))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfacebraids",
        description="presentations, word-identity verification and "
                    "nilpotent quotients for surface pure braid groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presentation", help="build and print a presentation")
    p.add_argument("--preset", required=True, choices=PRESETS)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("verify", help="run built-in verification suites")
    p.add_argument("--suite", required=True, choices=VERIFY_SUITES)
    p.add_argument("--n", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--g-max", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("nq", help="lower central series quotients")
    p.add_argument("--preset", required=True, choices=PRESETS)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--class", dest="nq_class", type=int, default=2,
                   choices=(1, 2, 3))
    p.set_defaults(func=_cmd_nq)

    p = sub.add_parser("derive", help="replay a derivation script file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("action", help="conjugation rule table and matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_action)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (PresentationError, ValueError, OSError,
            nilpotent.ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
