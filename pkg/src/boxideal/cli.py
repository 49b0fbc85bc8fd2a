"""Command-line entry point: ``boxideal <command> ...``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input,
3 a computation ran out of budget (or a check could only be done partially).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .blowup import GenericityError, build_model, model_to_json, structural_report, verify_surface, \
    verify_vanishing, weak_box_report
from .box import BoxMatrix, all_minor_list, all_minors, format_box_spec, parse_box_spec
from .groebner import Budget, BudgetExhausted, ideals_equal, is_groebner_basis, standard_monomial_count
from .poly import StructuralError
from .segre import DEFAULT_KERNEL_GATE, ConcreteTensor, GateExceeded, hilbert_formula, is_decomposable, \
    kernel_oracle

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass
class Outcome:
    doc: dict
    text: list
    code: int = EXIT_OK


def _budget(args) -> Budget:
    return Budget.from_env(max_pairs=args.budget_spairs)


def _box(spec: str) -> BoxMatrix:
    try:
        return BoxMatrix.generic(parse_box_spec(spec))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_minors(args) -> Outcome:
    A = _box(args.spec)
    gens = [str(g) for g in all_minor_list(A)]
    doc = {"box": format_box_spec(A.sizes), "count": len(gens), "generators": gens}
    return Outcome(doc, [f"{len(gens)} minors of {doc['box']}"] + gens)


def cmd_gb_verify(args) -> Outcome:
    A = _box(args.spec)
    gens = all_minor_list(A)
    if args.mutate and gens:
        # the leading monomial of one minor forces its trailing term into the ideal
        gens = gens + [A.order.one().mul_term(1, gens[0].leading_monomial())]
    cert = is_groebner_basis(gens, A.order)
    doc = {
        "box": format_box_spec(A.sizes),
        "mutated": bool(args.mutate),
        "generators": len(gens),
        "status": "pass" if cert.ok else "fail",
        "pairs_checked": cert.pairs_checked,
        "pairs_skipped_coprime": cert.pairs_skipped_coprime,
    }
    if not cert.ok:
        i, j = cert.pair
        doc["failing_pair"] = [str(gens[i]), str(gens[j])]
        doc["remainder"] = str(cert.remainder)
    text = [f"gb-verify {doc['box']}: {doc['status']} ({cert.pairs_checked} S-pairs reduced)"]
    if not cert.ok:
        text.append(f"  S({doc['failing_pair'][0]}, {doc['failing_pair'][1]}) -> {doc['remainder']}")
    return Outcome(doc, text, EXIT_OK if cert.ok else EXIT_FAIL)


def cmd_hilbert(args) -> Outcome:
    A = _box(args.spec)
    if args.tmax < 0:
        raise InputError("--tmax must be non-negative")
    gb = all_minors(A).groebner(_budget(args))
    rows, ok = [], True
    for t in range(args.tmax + 1):
        f_ideal, f_quot = hilbert_formula(A.sizes, t)
        s = standard_monomial_count(gb, t)
        agree = (f_ideal, f_quot) == (s.ideal_dim, s.quotient_dim)
        ok &= agree
        rows.append({"t": t, "formula": [f_ideal, f_quot], "enumeration": [s.ideal_dim, s.quotient_dim],
                     "agree": agree})
    doc = {"box": format_box_spec(A.sizes), "tmax": args.tmax, "status": "pass" if ok else "fail", "rows": rows}
    text = [f"hilbert {doc['box']}  (t: ideal/quotient formula | enumeration)"]
    text += [f"  {r['t']}: {r['formula'][0]}/{r['formula'][1]} | {r['enumeration'][0]}/{r['enumeration'][1]}"
             f"{'' if r['agree'] else '  MISMATCH'}" for r in rows]
    return Outcome(doc, text, EXIT_OK if ok else EXIT_FAIL)


def cmd_segre_kernel(args) -> Outcome:
    A = _box(args.spec)
    budget = _budget(args)
    try:
        K = kernel_oracle(A.sizes, args.gate_positions, budget)
    except GateExceeded as exc:
        raise InputError(str(exc)) from exc
    equal = ideals_equal(K, all_minors(A), budget)
    doc = {"box": format_box_spec(A.sizes), "status": "equal" if equal else "different",
           "kernel": [str(g) for g in K.generators]}
    text = [f"segre-kernel {doc['box']}: {doc['status']} ({len(K.generators)} kernel generators)"]
    return Outcome(doc, text, EXIT_OK if equal else EXIT_FAIL)


def cmd_decompose(args) -> Outcome:
    try:
        T = ConcreteTensor.load(args.tensor)
        dec = is_decomposable(T)
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.tensor}: {exc}") from exc
    doc = {"sizes": list(T.sizes), **dec.to_json()}
    if dec.decomposable:
        text = ["decomposable"] + [f"  v{l}: " + " ".join(f) for l, f in enumerate(doc["factors"], 1)]
    else:
        w = dec.witness
        text = [f"not decomposable: minor about axis {w['axis']} at {w['p']}, {w['q']} is {w['value']}"]
    return Outcome(doc, text)


def cmd_blowup(args) -> Outcome:
    if args.d < 1 or args.n < 1:
        raise InputError("--d and --n must be at least 1")
    budget = _budget(args)
    try:
        model = build_model(args.d, args.n, args.seed)
    except GenericityError as exc:
        doc = {"d": args.d, "n": args.n, "seed": args.seed, "status": "fail", "error": str(exc)}
        return Outcome(doc, [f"blowup: {exc}"], EXIT_FAIL)
    reports = {
        "construction": structural_report(model),
        "vanishing": verify_vanishing(model),
        "surface": verify_surface(model, budget),
    }
    weak = weak_box_report(model, args.gate_positions, budget)
    failed = [c.name for r in reports.values() for c in r.checks if not c.passed]
    partial = any(r.partial for r in reports.values())
    status = "fail" if failed else ("partial" if partial else "pass")
    doc = {
        "status": status,
        "model": model_to_json(model),
        "checks": {k: r.to_json() for k, r in reports.items()},
        "weak_box": weak.to_json(),
    }
    text = [f"blowup d={args.d} n={args.n} seed={args.seed}: {status}",
            f"  {len(model.rel.relations)} linear forms, {len(model.ideal.generators) - len(model.rel.relations)}"
            f" quadrics in {model.p + 1} variables"]
    for name, r in reports.items():
        for c in r.checks:
            text.append(f"  [{c.to_json()['status']}] {name}.{c.name}: {c.detail}")
    for cond in "abcd":
        v = getattr(weak, cond)
        text.append(f"  [info] weak_box.{cond}: {v.status} {v.detail}")
    code = EXIT_FAIL if failed else (EXIT_BUDGET if partial else EXIT_OK)
    return Outcome(doc, text, code)


COMMANDS = {
    "minors": cmd_minors,
    "gb-verify": cmd_gb_verify,
    "hilbert": cmd_hilbert,
    "segre-kernel": cmd_segre_kernel,
    "decompose": cmd_decompose,
    "blowup": cmd_blowup,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--budget-spairs", type=int, default=None,
                        help="S-pair budget (default from BOXIDEAL_BUDGET_SPAIRS or built-in)")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="boxideal", description="Ideals of 2x2 minors of box-shaped matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("minors", parents=[common], help="list the 2x2 minors of a generic box")
    s.add_argument("spec", help="box sizes, e.g. 2x3x4")

    s = sub.add_parser("gb-verify", parents=[common], help="Buchberger-criterion check of the minors")
    s.add_argument("spec")
    s.add_argument("--mutate", action="store_true", help="corrupt the generator set (negative control)")

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert function: closed form vs enumeration")
    s.add_argument("spec")
    s.add_argument("--tmax", type=int, default=4)

    s = sub.add_parser("segre-kernel", parents=[common], help="compare the Segre kernel with the minors")
    s.add_argument("spec")
    s.add_argument("--gate-positions", type=int, default=DEFAULT_KERNEL_GATE)

    s = sub.add_parser("decompose", parents=[common], help="decide whether a tensor is decomposable")
    s.add_argument("tensor", help="JSON file with 'sizes' and 'entries'")

    s = sub.add_parser("blowup", parents=[common], help="build and verify a blown-up plane model")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--gate-positions", type=int, default=24, help="size gate for the weak-box ideal check")
    return p


def render(outcome: Outcome, args) -> str:
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command, **outcome.doc}
        return json.dumps(doc, indent=2) + "\n"
    return "\n".join(outcome.text) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        outcome = COMMANDS[args.command](args)
    except (InputError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    out = render(outcome, args)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
