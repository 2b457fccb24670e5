"""Command-line front end: enumeration listings, basis-matrix exports,
decomposition tables, invariant verification suites, and pyramid reports.

JSON is the canonical output format; CSV and LaTeX are lossy views.  Exit
codes: 0 success, 1 verification failure, 2 usage error.  Identical
configurations produce byte-identical output: every listing is sorted and
block results are merged in a fixed order regardless of --jobs.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import itertools
import json
import random
import sys

from . import bases, characters
from .combinatorics import (
    Partition,
    SignedMultiPartition,
    enumerate_tableaux,
    pyramid_report,
)
from .laurent import ONE, in_qinv_lattice
from .tensor_space import (
    TensorElement,
    bar_involution,
    hecke_act,
    hecke_act_inverse,
    wt_key,
)

SUITES = ("hecke", "bar", "dcb", "xi", "theoremC", "sameDCB", "all")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Input grammars.
# ---------------------------------------------------------------------------


def parse_shape(text: str) -> SignedMultiPartition:
    """Parse "2,1:+ / 2:-" into a signed multi-partition."""
    pieces = []
    for chunk in text.split("/"):
        chunk = chunk.strip()
        if chunk.count(":") != 1:
            raise UsageError(f"malformed shape piece: {chunk!r}")
        parts_text, sign = chunk.split(":")
        sign = sign.strip()
        if sign not in "+-" or not sign:
            raise UsageError(f"piece sign must be '+' or '-': {chunk!r}")
        try:
            parts = tuple(int(p) for p in parts_text.strip().split(","))
            pieces.append((Partition(parts), sign))
        except ValueError as exc:
            raise UsageError(f"malformed shape piece: {chunk!r} ({exc})") from exc
    return SignedMultiPartition(tuple(pieces))


def parse_window(text: str) -> tuple[int, int]:
    """Parse "0..6" into an inclusive integer interval."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"window must look like '0..6', got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"window must look like '0..6', got {text!r}") from exc


def parse_weight(text: str) -> dict[int, int]:
    """Parse "1:1,2:-1" into a signed weight mapping."""
    out: dict[int, int] = {}
    for chunk in text.split(","):
        a, sep, c = chunk.partition(":")
        if not sep:
            raise UsageError(f"weight entries must look like 'a:c', got {chunk!r}")
        try:
            out[int(a)] = int(c)
        except ValueError as exc:
            raise UsageError(f"weight entries must look like 'a:c', got {chunk!r}") from exc
    return {a: c for a, c in out.items() if c}


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Commands.
# ---------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    shape = parse_shape(args.shape)
    window = parse_window(args.window)
    signs = shape.sign_sequence()
    rows = []
    for mt in enumerate_tableaux(shape, args.kind, window):
        if args.weight is not None:
            target = tuple(sorted(parse_weight(args.weight).items()))
            if wt_key(mt.row_reading(), signs) != target:
                continue
        rows.append(
            {
                "tableau": bases.tableau_json(mt),
                "display": str(mt),
                "row_reading": list(mt.row_reading()),
                "column_reading": list(mt.column_reading()),
                "weight": {str(a): c for a, c in sorted(mt.weight().items())},
            }
        )
    if args.format == "json":
        _emit(_json({"shape": str(shape), "window": list(window), "kind": args.kind, "tableaux": rows}), args.out)
    elif args.format == "csv":
        lines = ["tableau,row_reading,column_reading"]
        for r in rows:
            lines.append(
                f"\"{r['display']}\",\"{' '.join(map(str, r['row_reading']))}\","
                f"\"{' '.join(map(str, r['column_reading']))}\""
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [r["display"] for r in rows]
        _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return 0


def _weights_for(shape: SignedMultiPartition, window: tuple[int, int], kind: str):
    signs = shape.sign_sequence()
    seen = []
    for mt in enumerate_tableaux(shape, kind, window):
        key = wt_key(mt.row_reading(), signs)
        if key not in seen:
            seen.append(key)
    return sorted(seen)


def _dcb_block(task):
    shape_text, window, space, weight = task
    shape = parse_shape(shape_text)
    mu = dict(weight)
    if space == "t":
        blk = bases.dcb_T(shape.sign_sequence(), window, mu)
    elif space == "s":
        blk = bases.dcb_S(shape, window, mu)
    else:
        blk = bases.dcb_P(shape, window, mu)
    data = blk.to_json()
    data["weight"] = {str(a): c for a, c in sorted(mu.items())}
    return data, blk.to_latex()


def _run_blocks(tasks, jobs):
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_dcb_block, tasks))
    return [_dcb_block(t) for t in tasks]


def cmd_dcb(args) -> int:
    shape = parse_shape(args.shape)
    window = parse_window(args.window)
    if args.weight is not None:
        weights = [tuple(sorted(parse_weight(args.weight).items()))]
    else:
        kind = {"t": "row", "s": "row", "p": "std"}[args.space]
        weights = _weights_for(shape, window, kind)
        if args.space == "t":
            signs = shape.sign_sequence()
            lo, hi = window
            weights = sorted(
                {
                    wt_key(f, signs)
                    for f in itertools.product(range(lo, hi + 1), repeat=len(signs))
                }
            )
    tasks = [(args.shape, window, args.space, w) for w in weights]
    try:
        results = _run_blocks(tasks, args.jobs)
    except bases.RouteDisagreement as exc:
        _emit(_json({"error": "route disagreement", "detail": str(exc)}), args.out)
        return 1
    if args.format == "latex":
        _emit("\n\n".join(latex for _, latex in results) + "\n", args.out)
    else:
        _emit(
            _json(
                {
                    "shape": str(shape),
                    "window": list(window),
                    "space": args.space,
                    "blocks": [data for data, _ in results],
                }
            ),
            args.out,
        )
    return 0


def cmd_decompose(args) -> int:
    shape = parse_shape(args.shape)
    window = parse_window(args.window)
    if args.weight is not None:
        weights = [tuple(sorted(parse_weight(args.weight).items()))]
    else:
        weights = _weights_for(shape, window, "std")
    tables = [
        characters.decomposition_matrix(shape, window, dict(w)) for w in weights
    ]
    if args.format == "csv":
        _emit("\n".join(t.to_csv() for t in tables), args.out)
    elif args.format == "latex":
        _emit("\n\n".join(t.to_latex() for t in tables) + "\n", args.out)
    else:
        _emit(_json({"tables": [t.to_json() for t in tables]}), args.out)
    return 0


def cmd_report(args) -> int:
    shape = parse_shape(args.shape)
    theta = None
    if args.theta is not None:
        try:
            theta = tuple(int(x) for x in args.theta.split(","))
        except ValueError as exc:
            raise UsageError(f"theta must be comma-separated integers: {args.theta!r}") from exc
    rep = pyramid_report(shape, theta)
    if args.format == "json":
        _emit(_json(rep.to_json()), args.out)
    else:
        ref = rep.refinement
        lines = [
            f"shape: {shape}",
            "g(0) = " + "⊕".join(rep.g0),
            f"q^+ = {list(rep.q_plus)}",
            f"q^- = {list(rep.q_minus)}",
            f"jordan type: ({','.join(map(str, rep.jordan_type[0]))}|{','.join(map(str, rep.jordan_type[1]))})",
            f"levi blocks: {list(rep.levi_blocks)}",
            f"theta: {list(rep.theta)}",
            f"refined shape: {ref.ulam}",
            f"refined signs: {''.join(ref.uep)}",
            f"sign sequence: {''.join(ref.s)}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# Verification suites.
# ---------------------------------------------------------------------------


def _sp(*pieces):
    return SignedMultiPartition(tuple((Partition(p), s) for p, s in pieces))


def _random_element(signs, window, rng):
    lo, hi = window
    x = TensorElement(signs, window)
    for _ in range(3):
        f = tuple(rng.randint(lo, hi) for _ in signs)
        c = ONE * rng.randint(-3, 3) + bases.q_power(rng.randint(-2, 2))
        x = x + TensorElement.monomial(signs, window, f, c)
    return x


def _suite_hecke() -> tuple[bool, dict]:
    window = (1, 3)
    zeta = bases.LaurentPoly({-1: 1, 1: -1})  # q^-1 - q
    for signs in (("+", "+"), ("+", "-"), ("-", "+", "+"), ("+", "-", "+")):
        for f in itertools.product(range(1, 4), repeat=len(signs)):
            x = TensorElement.monomial(signs, window, f)
            # H_i is defined only inside a constant-sign run.
            for i in range(1, len(signs)):
                if signs[i - 1] != signs[i]:
                    continue
                h = hecke_act(i, x)
                # quadratic relation: H_i^2 = (q^-1 - q) H_i + 1
                if hecke_act(i, h) != h.scale(zeta) + x:
                    return False, {"signs": signs, "f": f, "relation": "quadratic", "i": i}
            for i in range(1, len(signs) - 1):
                if not signs[i - 1] == signs[i] == signs[i + 1]:
                    continue
                lhs = hecke_act(i, hecke_act(i + 1, hecke_act(i, x)))
                rhs = hecke_act(i + 1, hecke_act(i, hecke_act(i + 1, x)))
                if lhs != rhs:
                    return False, {"signs": signs, "f": f, "relation": "braid", "i": i}
    return True, {}


def _suite_bar() -> tuple[bool, dict]:
    rng = random.Random(20260824)
    window = (1, 3)
    for signs in (("+", "+"), ("+", "-"), ("-", "-", "+")):
        for _ in range(10):
            x = _random_element(signs, window, rng)
            if bar_involution(bar_involution(x)) != x:
                return False, {"signs": signs, "property": "involution"}
            for i in range(1, len(signs)):
                if signs[i - 1] != signs[i]:
                    continue
                if bar_involution(hecke_act(i, x)) != hecke_act_inverse(
                    i, bar_involution(x)
                ):
                    return False, {"signs": signs, "property": "hecke twist", "i": i}
    return True, {}


def _suite_dcb() -> tuple[bool, dict]:
    for shape, window in [
        (_sp(((1,), "+"), ((1,), "+")), (1, 2)),
        (_sp(((1, 1), "+")), (1, 3)),
        (_sp(((2,), "+"), ((1, 1), "-")), (1, 2)),
    ]:
        for mu, _ in bases.weight_blocks(shape, window, "row"):
            blk = bases.dcb_S(shape, window, mu)
            for t in blk.order:
                canon = blk.canon[t]
                if canon.get(t) != ONE:
                    return False, {"shape": str(shape), "weight": mu, "property": "diagonal"}
                for g, c in canon.items():
                    if g != t and not in_qinv_lattice(c):
                        return False, {"shape": str(shape), "weight": mu, "property": "lattice"}
                elem = bases.SElement(shape, window, dict(canon))
                if bases.bar_S(elem).coeffs != elem.coeffs:
                    return False, {"shape": str(shape), "weight": mu, "property": "bar invariance"}
    return True, {}


def _suite_xi() -> tuple[bool, dict]:
    for shape, window in [
        (_sp(((2, 1), "+")), (1, 3)),
        (_sp(((2, 1), "-")), (1, 3)),
    ]:
        images = bases.xi_wedge_images(shape, window)
        for mt, el in images.items():
            if (not el.is_zero()) != mt.is_std():
                return False, {"shape": str(shape), "tableau": str(mt), "property": "nonvanishing"}
    return True, {}


def _suite_theoremC() -> tuple[bool, dict]:
    for shape, window in [
        (_sp(((2, 1), "+"), ((2,), "-")), (0, 2)),
        (_sp(((1, 1), "+"), ((2,), "+")), (1, 3)),
    ]:
        rep = characters.theoremC_check(shape, window)
        if not rep["pass"]:
            return False, rep
    return True, {}


def _suite_sameDCB() -> tuple[bool, dict]:
    for shape, window in [
        (_sp(((1, 1), "+")), (1, 2)),
        (_sp(((2,), "-")), (1, 2)),
        (_sp(((2, 1), "+")), (1, 3)),
        (_sp(((1,), "+"), ((1, 1), "-")), (1, 2)),
    ]:
        for mu, _ in bases.weight_blocks(shape, window, "row"):
            a = bases.dcb_S(shape, window, mu)
            b = bases.sym_ideal_dcb(shape, window, mu)
            if a.order != b.order or a.canon != b.canon:
                return False, {"shape": str(shape), "weight": mu, "property": "identification"}
    return True, {}


def cmd_verify(args) -> int:
    runners = {
        "hecke": _suite_hecke,
        "bar": _suite_bar,
        "dcb": _suite_dcb,
        "xi": _suite_xi,
        "theoremC": _suite_theoremC,
        "sameDCB": _suite_sameDCB,
    }
    names = list(runners) if args.suite == "all" else [args.suite]
    failures = []
    for name in names:
        ok, detail = runners[name]()
        print(("PASS" if ok else "FAIL") + f" {name}")
        if not ok:
            failures.append({"suite": name, "detail": detail})
    if failures:
        print(json.dumps({"failures": failures}, sort_keys=True))
        return 1
    return 0


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchar",
        description="Exact dual-canonical-basis and character-table computations "
        "for signed multi-pyramids at a finite window.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape_required=True):
        p.add_argument("--shape", required=shape_required, help='signed multi-partition, e.g. "2,1:+ / 2:-"')
        p.add_argument("--window", default="1..3", help='inclusive entry interval, e.g. "0..6"')
        p.add_argument("--weight", default=None, help='signed weight filter, e.g. "1:1,2:1"')
        p.add_argument("--format", choices=("json", "csv", "latex", "text"), default="json")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--jobs", type=int, default=1, help="parallel block jobs")

    p = sub.add_parser("enumerate", help="list Row/Col/Std tableaux with readings and weights")
    common(p)
    p.add_argument("--kind", choices=("row", "col", "std"), default="std")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("dcb", help="export dual canonical basis matrices per weight block")
    common(p)
    p.add_argument("--space", choices=("t", "s", "p"), default="s")
    p.set_defaults(fn=cmd_dcb)

    p = sub.add_parser("decompose", help="export decomposition tables")
    common(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", help="run an invariant verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="pyramid statistics and Levi data")
    common(p)
    p.add_argument("--theta", default=None, help="comma-separated integers, one per piece")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except bases.RouteDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
