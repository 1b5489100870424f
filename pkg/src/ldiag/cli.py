"""Command-line front end.

Exit status: 0 success, 1 a check found a counterexample, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .diagram import (
    canonical_unlabel,
    concat,
    configured_max_weight,
    deck,
    enumerate_by_weight,
    factor_irreducibles,
    format_matrix,
    monomial_of,
    parse_matrix,
)
from .errors import DiagramError
from .formal import dumps
from .hopf import STRUCTURES, HopfStructure, antipode, verify_hopf_axioms
from .oracles import (
    format_word_sum,
    mqsym_oracle_product,
    mzv_truncated,
    parse_composition,
    quasi_shuffle,
    stuffle_check,
)
from .product import deformed_product


class UsageError(Exception):
    pass


class _Stdin:
    """Hands out one stdin line per ``-`` argument."""

    def __init__(self, stream):
        self.stream = stream
        self.lines = None

    def next(self) -> str:
        if self.lines is None:
            self.lines = [ln for ln in self.stream.read().splitlines() if ln.strip()]
        if not self.lines:
            raise UsageError("stdin exhausted")
        return self.lines.pop(0)


def _matrix(arg: str, stdin: _Stdin):
    return parse_matrix(stdin.next() if arg == "-" else arg)


def _structure(args) -> HopfStructure:
    base = STRUCTURES[args.structure]
    qc = base.qc0 if getattr(args, "qc", None) is None else args.qc
    qs = base.qs0 if getattr(args, "qs", None) is None else args.qs
    t = base.t if getattr(args, "t", None) is None else args.t
    variant = getattr(args, "variant", None) or "black-split"
    try:
        return HopfStructure(qc, qs, t, variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit_sum(x, fmt: str, out) -> None:
    if fmt == "json":
        print(dumps(x.to_json_obj()), file=out)
    else:
        print(x.to_text(), file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ldiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name, help_, *matrices, fmt=True):
        p = sub.add_parser(name, help=help_)
        for m in matrices:
            p.add_argument(m, help="matrix text such as '1 0; 0 2', 'e' for empty, '-' for stdin")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    def structure_opts(p, qc_qs=True):
        p.add_argument("--structure", choices=sorted(STRUCTURES), default="ldiag")
        if qc_qs:
            p.add_argument("--qc", type=int)
            p.add_argument("--qs", type=int)

    p = add("product", "deformed product of two diagrams", "left", "right")
    p.add_argument("--qc", type=int, help="specialize qc (requires --qs)")
    p.add_argument("--qs", type=int, help="specialize qs (requires --qc)")
    add("concat", "concatenation [d1|d2]", "left", "right")
    p = add("coproduct", "coproduct under a Hopf structure", "matrix")
    structure_opts(p, qc_qs=False)
    p.add_argument("--variant", choices=("black-split", "white-split"))
    p = add("antipode", "antipode under a Hopf structure", "matrix")
    structure_opts(p, qc_qs=False)
    p.add_argument("--variant", choices=("black-split", "white-split"))
    p = sub.add_parser("verify", help="check Hopf axioms on all diagrams up to a weight")
    structure_opts(p)
    p.add_argument("--t", type=int, choices=(0, 1))
    p.add_argument("--variant", choices=("black-split", "white-split"))
    p.add_argument("--max-weight", type=int, default=2)
    p = sub.add_parser("enumerate", help="all packed matrices of a given weight")
    p.add_argument("weight", type=int, help="total weight (capped by $LDIAG_MAX_WEIGHT, default 5)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add("factor", "factor into concatenation-irreducibles", "matrix")
    add("monomial", "spot-type monomial L^alpha V^beta", "matrix")
    add("unlabel", "canonical unlabelled representative", "matrix")
    p = sub.add_parser("stuffle", help="quasi-shuffle of two compositions")
    p.add_argument("u", help="comma-separated parts, e.g. 2,3 ('' for empty)")
    p.add_argument("v")
    p.add_argument("--N", type=int, help="also report the truncated stuffle residual")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p = sub.add_parser("mzv", help="truncated Euler-Zagier sum")
    p.add_argument("s", help="comma-separated parts, e.g. 2,3")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add("oracle-compare", "product at (1,1) vs brute-force MQSym product", "left", "right")
    return parser


def run(argv: Sequence[str] | None = None, stdin=None, out=None) -> int:
    out = out or sys.stdout
    reader = _Stdin(stdin or sys.stdin)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, reader, out)
    except (DiagramError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, reader: _Stdin, out) -> int:
    verb = args.verb
    fmt = getattr(args, "format", "text")

    if verb == "product":
        d1, d2 = _matrix(args.left, reader), _matrix(args.right, reader)
        if (args.qc is None) != (args.qs is None):
            raise UsageError("--qc and --qs must be given together")
        _emit_sum(deformed_product(d1, d2, args.qc, args.qs), fmt, out)
    elif verb == "concat":
        d = concat(_matrix(args.left, reader), _matrix(args.right, reader))
        print(dumps(d.tolist()) if fmt == "json" else format_matrix(d), file=out)
    elif verb == "coproduct":
        h = _structure(args)
        _emit_sum(h.coproduct(_matrix(args.matrix, reader)), fmt, out)
    elif verb == "antipode":
        h = _structure(args)
        _emit_sum(antipode(_matrix(args.matrix, reader), h), fmt, out)
    elif verb == "verify":
        h = _structure(args)
        report = verify_hopf_axioms(deck(args.max_weight), h)
        print(dumps(report.to_json_obj()), file=out)
        return 0 if report.all_passed else 1
    elif verb == "enumerate":
        cap = configured_max_weight()
        ds = enumerate_by_weight(args.weight, cap)
        if fmt == "json":
            print(dumps([d.tolist() for d in ds]), file=out)
        else:
            print("\n".join(format_matrix(d) for d in ds), file=out)
    elif verb == "factor":
        fs = factor_irreducibles(_matrix(args.matrix, reader))
        if fmt == "json":
            print(dumps([f.tolist() for f in fs]), file=out)
        else:
            print("\n".join(format_matrix(f) for f in fs), file=out)
    elif verb == "monomial":
        m = monomial_of(_matrix(args.matrix, reader))
        if fmt == "json":
            obj = {
                "alpha": {str(k): v for k, v in m.alpha.items()},
                "beta": {str(k): v for k, v in m.beta.items()},
            }
            print(dumps(obj), file=out)
        else:
            print(m, file=out)
    elif verb == "unlabel":
        u = canonical_unlabel(_matrix(args.matrix, reader))
        print(dumps(u.canon.tolist()) if fmt == "json" else format_matrix(u.canon), file=out)
    elif verb == "stuffle":
        u, v = parse_composition(args.u), parse_composition(args.v)
        terms = quasi_shuffle(u, v)
        residual = None
        if args.N is not None:
            if len(u) != 1 or len(v) != 1:
                raise UsageError("--N needs single-part compositions a and b")
            residual = stuffle_check(u[0], v[0], args.N)
        if fmt == "json":
            obj = {
                "terms": [
                    {"composition": list(w), "coeff": c} for w, c in sorted(terms.items())
                ]
            }
            if residual is not None:
                obj["residual"] = residual
            print(dumps(obj), file=out)
        else:
            print(format_word_sum(terms), file=out)
            if residual is not None:
                print(f"residual: {residual:.3e}", file=out)
    elif verb == "mzv":
        value = mzv_truncated(parse_composition(args.s), args.N)
        if fmt == "json":
            print(json.dumps({"s": list(parse_composition(args.s)), "N": args.N, "value": value}), file=out)
        else:
            print(f"{value:.6f}", file=out)
    elif verb == "oracle-compare":
        d1, d2 = _matrix(args.left, reader), _matrix(args.right, reader)
        ours = deformed_product(d1, d2, 1, 1)
        oracle = mqsym_oracle_product(d1, d2)
        same = ours == oracle
        if fmt == "json":
            obj = {"equal": same, "product": ours.to_json_obj(), "oracle": oracle.to_json_obj()}
            print(dumps(obj), file=out)
        else:
            print("equal" if same else "MISMATCH", file=out)
            print(ours.to_text(), file=out)
        return 0 if same else 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
