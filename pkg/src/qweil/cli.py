"""qweil command line: verification suites, spectra, cohomology and expression evaluation."""

from __future__ import annotations

import argparse
import json
import sys

from . import modules as md
from .checks import SUITE_NAMES, run_suite
from .parser import ExprError, evaluate_text, sort_name

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _lambda_arg(text: str):
    if text == "generic":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'generic', got {text!r}") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _sign_arg(text: str) -> int:
    if text in ("+", "plus", "+1"):
        return 1
    if text in ("-", "minus", "-1"):
        return -1
    raise argparse.ArgumentTypeError("spin module must be + or -")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qweil", description="Exact computations in the quantum Weil algebra of sl2.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.add_argument("--no-timing", action="store_true", help="report ms as 0 so output is byte-stable")

    s = sub.add_parser("spectrum", help="eigenvalues and eigenvectors of D_q on the blocks N_k")
    s.add_argument("--lambda", dest="lam", required=True, type=_lambda_arg, help="integer or 'generic'")
    s.add_argument("--blocks", required=True, type=_positive)
    s.add_argument("--module", choices=("verma", "finite"), default="verma")
    s.add_argument("--spin", type=_sign_arg, default=-1, help="spin module, + or - (default -)")
    s.add_argument("--json", action="store_true")

    c = sub.add_parser("cohomology", help="Dirac cohomology of a Verma or finite-dimensional module")
    c.add_argument("--lambda", dest="lam", required=True, type=_lambda_arg, help="integer or 'generic'")
    c.add_argument("--module", choices=("verma", "finite"), default="verma")
    c.add_argument("--depth", type=_positive, default=12)
    c.add_argument("--spin", type=_sign_arg, default=-1, help="spin module, + or - (default -)")
    c.add_argument("--json", action="store_true")

    e = sub.add_parser("eval", help="evaluate an expression to normal form")
    e.add_argument("expr")
    e.add_argument("--json", action="store_true")
    return p


def _module(lam, kind: str) -> md.Module:
    if kind == "finite":
        if lam is None or lam < 0:
            raise ValueError("finite modules need --lambda n with n >= 0")
        return md.Module.finite(lam)
    return md.Module.verma(lam)


def _cmd_verify(args) -> int:
    report = run_suite(args.suite)
    if args.json:
        print(report.to_json(timing=not args.no_timing))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _matrix_strings(m) -> list:
    return [[str(x) for x in row] for row in m]


def _cmd_spectrum(args) -> int:
    module = _module(args.lam, args.module)
    last = args.blocks if not module.is_finite else min(args.blocks, module.top)
    blocks = []
    for k in range(1, last + 1):
        try:
            sp = md.spectrum(k, module, args.spin)
            blocks.append(
                {
                    "block": k,
                    "eigenpairs": [
                        {"eigenvalue": str(ev), "eigenvector": [str(x) for x in vec]} for ev, vec in sp.eigenpairs
                    ],
                }
            )
        except ValueError:
            jf = md.jordan_form(k, module, args.spin)
            blocks.append(
                {"block": k, "degenerate": True, "matrix": _matrix_strings(jf.matrix), "jordan_form": _matrix_strings(jf.form)}
            )
    top = str(md.dirac_singleton(module, args.spin))
    if args.json:
        out = {"lambda": module.label, "module": args.module, "spin": "+" if args.spin > 0 else "-", "top": top, "blocks": blocks}
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"D_q on {args.module} module, lambda = {module.label}, spin module S{'+' if args.spin > 0 else '-'}")
    print(f"basis of N_k: w_{{{module.weight_label(0)}-2k}} ox s1, w_{{{module.weight_label(0)}-2(k-1)}} ox s-1")
    print(f"top vector w_{{{module.weight_label(0)}}} ox s1: eigenvalue {top}")
    for b in blocks:
        if b.get("degenerate"):
            print(f"block {b['block']}: degenerate, nilpotent with Jordan form {b['jordan_form']}")
            continue
        print(f"block {b['block']}:")
        for pair in b["eigenpairs"]:
            print(f"  eigenvalue  {pair['eigenvalue']}")
            print(f"  eigenvector [{pair['eigenvector'][0]}, {pair['eigenvector'][1]}]")
    return EXIT_OK


def _cmd_cohomology(args) -> int:
    module = _module(args.lam, args.module)
    result = md.cohomology_of(module, args.depth, args.spin)
    basis = [str(v) for v in result.basis()]
    if args.json:
        out = {
            "lambda": module.label,
            "module": args.module,
            "spin": "+" if args.spin > 0 else "-",
            "blocks_examined": len(result.blocks),
            "dimension": result.dimension,
            "basis": basis,
        }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"Dirac cohomology of the {args.module} module with lambda = {module.label} (blocks examined: {len(result.blocks)})")
    print(f"dimension: {result.dimension}")
    print("basis: " + (", ".join(basis) if basis else "(none)"))
    return EXIT_OK


def _cmd_eval(args) -> int:
    value = evaluate_text(args.expr)
    if args.json:
        print(json.dumps({"sort": sort_name(value), "value": str(value)}))
    else:
        print(value)
    return EXIT_OK


COMMANDS = {"verify": _cmd_verify, "spectrum": _cmd_spectrum, "cohomology": _cmd_cohomology, "eval": _cmd_eval}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ExprError as exc:
        print(f"qweil: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"qweil: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
