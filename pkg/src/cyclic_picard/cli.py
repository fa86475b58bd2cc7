"""Command-line front end.

    cyclic-picard pic-b H G N
    cyclic-picard pic-jac G D
    cyclic-picard class G D N K
    cyclic-picard disc-class G D N
    cyclic-picard disc-algebra N H_EXPR
    cyclic-picard sweep [--g A..B] [--n A..B] [--d A..B]

Every command takes ``--format human|machine``.  Machine output is a JSON
document with a fixed key order; human output prints the same leaves as an
aligned table.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fgab import FgAbGroup, IntegerMatrix, Presentation, presentation_to_group
from .discriminant import (
    cyclic_cover_algebra,
    discriminant,
    trace_form,
)
from .picard import (
    GenusRegime,
    IntegralityViolation,
    OutOfFormulaRange,
    UnsupportedRegime,
    det_pushforward_class,
    discriminant_class,
)
from .poly import parse_poly
from .theorem import (
    CoverParams,
    NonIntegral,
    UnsupportedCase,
    Verdict,
    picard_report,
    sweep,
    verify,
)

SCHEMA_VERSION = "1"


def _group(g: FgAbGroup | None):
    if g is None:
        return None
    return {
        "invariant_factors": list(g.invariant_factors),
        "free_rank": g.free_rank,
        "text": str(g),
    }


def _matrix(m: IntegerMatrix) -> list[list[int]]:
    return m.to_lists()


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B or an integer") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


# -- payload builders ---------------------------------------------------------

def pic_b_payload(h: int, g: int, n: int) -> tuple[dict, bool]:
    """Payload plus a flag telling whether the report is acceptable."""
    p = CoverParams(h, g, n)
    out = {"params": {"h": h, "g": g, "n": n}}
    rep = picard_report(p)
    out["d"] = str(rep.d) if isinstance(rep.d, NonIntegral) else rep.d
    out["empty"] = rep.empty
    if rep.empty:
        return out, True
    outcome = verify(p)
    out["regime"] = rep.regime.kind.value
    out["generators"] = list(rep.generators)
    out["relations"] = _matrix(rep.presentation.relations)
    out["structure"] = _group(rep.structure)
    out["closed_form"] = _group(rep.closed_form)
    out["verdict"] = outcome.verdict.value
    out["isomorphism_guaranteed"] = rep.isomorphism_guaranteed
    out["note"] = rep.note
    out["hypotheses"] = rep.hypotheses_met
    return out, outcome.verdict is not Verdict.MISMATCH


def pic_jac_payload(g: int, d: int) -> dict:
    regime = GenusRegime(g, d)
    basis = regime.basis
    return {
        "params": {"g": g, "d": d},
        "regime": regime.kind.value,
        "generators": list(basis.symbols),
        "relations": _matrix(basis.jac_relations),
        "structure": _group(presentation_to_group(Presentation(len(basis.symbols), basis.jac_relations))),
    }


def class_payload(g: int, d: int, n: int, k: int) -> dict:
    regime = GenusRegime(g, d)
    c = det_pushforward_class(regime, n, k)
    return {
        "params": {"g": g, "d": d, "n": n, "k": k},
        "regime": regime.kind.value,
        "generators": list(regime.symbols),
        "exponents": list(c.exponents),
    }


def disc_class_payload(g: int, d: int, n: int) -> dict:
    regime = GenusRegime(g, d)
    c = discriminant_class(regime, n)
    return {
        "params": {"g": g, "d": d, "n": n},
        "regime": regime.kind.value,
        "generators": list(regime.symbols),
        "exponents": list(c.exponents),
    }


def disc_algebra_payload(n: int, h_expr: str) -> dict:
    h = parse_poly(h_expr)
    alg = cyclic_cover_algebra(n, h)
    tf = trace_form(alg)
    return {
        "params": {"n": n, "h": str(h)},
        "basis": list(alg.basis),
        "trace_form": [[str(e) for e in row] for row in tf.matrix],
        "discriminant": str(discriminant(alg)),
    }


def sweep_payload(gs: range, ns: range, ds: range, jobs: int, strict: bool) -> tuple[dict, bool]:
    summary = sweep(gs, ns, ds, jobs=jobs)
    counts = {v.value: summary.count(v) for v in Verdict}
    out = {
        "ranges": {
            "g": [gs.start, gs.stop - 1],
            "n": [ns.start, ns.stop - 1],
            "d": [ds.start, ds.stop - 1],
        },
        "total": len(summary.outcomes),
        "counts": counts,
        "mismatches": [
            {
                "h": o.params.h, "g": o.params.g, "n": o.params.n,
                "computed": _group(o.computed), "claimed": _group(o.claimed),
            }
            for o in summary.mismatches
        ],
    }
    ok = counts["Mismatch"] == 0 and not (strict and counts["NotCovered"])
    return out, ok


# -- rendering ------------------------------------------------------------------

def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, rows)
    else:
        rows.append((prefix, value))


def _leaf(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return json.dumps(value)
    return str(value)


def render_human(command: str, payload: dict) -> str:
    if payload.get("empty") is True:
        p = payload["params"]
        d = payload["d"]
        num, den = (int(x) for x in d.split("/"))
        why = "not integral" if num % den else "negative"
        return f"{command} h={p['h']} g={p['g']} n={p['n']}: empty moduli (d = {d} {why})\n"
    rows: list = []
    _flatten("", payload, rows)
    width = max(len(k) for k, _ in rows)
    lines = [command]
    lines += [f"  {k.ljust(width)}  {_leaf(v)}" for k, v in rows]
    return "\n".join(lines) + "\n"


def render_machine(command: str, argv: list[str], payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": [command] + argv, "payload": payload}
    return json.dumps(doc, indent=2) + "\n"


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-picard",
        description="Integral Picard groups of stacks of uniform cyclic covers of curves.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--strict", action="store_true",
                        help="treat NotCovered outcomes as failures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pic-b", parents=[common], help="Picard group of B_{h,g,n}")
    p.add_argument("h", type=_nonneg)
    p.add_argument("g", type=_nonneg)
    p.add_argument("n", type=int)

    p = sub.add_parser("pic-jac", parents=[common], help="Picard group of the universal Jacobian")
    p.add_argument("g", type=_nonneg)
    p.add_argument("d", type=int)

    p = sub.add_parser("class", parents=[common], help="class of det pi_*(L^n (x) w^k)")
    for name in ("g", "d", "n", "k"):
        p.add_argument(name, type=_nonneg if name == "g" else int)

    p = sub.add_parser("disc-class", parents=[common], help="class of the branch divisor")
    p.add_argument("g", type=_nonneg)
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("disc-algebra", parents=[common], help="trace form of R[x]/(x^n - h)")
    p.add_argument("n", type=int)
    p.add_argument("h_expr")

    p = sub.add_parser("sweep", parents=[common], help="compare both routes over a grid")
    p.add_argument("--g", type=parse_range, default=range(0, 6))
    p.add_argument("--n", type=parse_range, default=range(2, 13))
    p.add_argument("--d", type=parse_range, default=range(1, 13))
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    ok = True
    try:
        if args.command == "pic-b":
            payload, ok = pic_b_payload(args.h, args.g, args.n)
            if args.strict and payload.get("verdict") == "NotCovered":
                ok = False
        elif args.command == "pic-jac":
            payload = pic_jac_payload(args.g, args.d)
        elif args.command == "class":
            payload = class_payload(args.g, args.d, args.n, args.k)
        elif args.command == "disc-class":
            payload = disc_class_payload(args.g, args.d, args.n)
        elif args.command == "disc-algebra":
            payload = disc_algebra_payload(args.n, args.h_expr)
        else:
            payload, ok = sweep_payload(args.g, args.n, args.d, args.jobs, args.strict)
    except (UnsupportedCase, OutOfFormulaRange, UnsupportedRegime, IntegralityViolation, ValueError) as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2

    if args.format == "machine":
        sys.stdout.write(render_machine(args.command, argv[1:], payload))
    else:
        sys.stdout.write(render_human(args.command, payload))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
