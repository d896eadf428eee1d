"""Command-line front-end.

Exit codes: 0 ok, 1 malformed input, 2 validation failure, 3 verification
failure, 4 a check was skipped by a resource bound under ``--strict``.
"""

import argparse
import sys

from . import serialize as ser
from .biliaison import descend_chain, terminal_cells
from .errors import (ClosureViolation, IdealError, LadderError, MalformedDocument,
                     MissingUpperOutsideCorner)
from .height import h_plus
from .ideal import embed_block_matrix, from_cogenerated, normalize, pivot
from .polyarith.groebner import Bounds
from .polyarith.minors import expand_minor, ladder_ring

OK, MALFORMED, INVALID, VERIFY_FAILED, STRICT_SKIP = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; here bad usage is malformed input
    def error(self, message):
        raise _UsageError(message)


def _range_pair(text):
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise _UsageError(f"expected a..b, got {text!r}") from None


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from None


def _block(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise _UsageError(f"expected r1..r2,c1..c2, got {text!r}")
    return _range_pair(parts[0]), _range_pair(parts[1])


def build_parser():
    p = _Parser(prog="symladder", description="Symmetric ladder ideals and their descent.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    sub.add_parser("validate", help="check a ladder or ideal document").add_argument("file")

    r = sub.add_parser("render", help="ASCII picture of the plus part")
    r.add_argument("file")
    r.add_argument("--hplus", action="store_true", help="mark the cells of H+ with H")
    r.add_argument("--points", action="store_true", help="mark distinguished points with *")

    sub.add_parser("info", help="points, sizes, normalization, height").add_argument("file")

    g = sub.add_parser("gens", help="list the generating minors")
    g.add_argument("file")
    g.add_argument("--expand", action="store_true", help="print expanded polynomials")

    d = sub.add_parser("descend", help="run the descent and emit a certificate")
    d.add_argument("file")
    d.add_argument("--out", help="write the certificate here instead of stdout")

    v = sub.add_parser("verify", help="check every descent step with the oracle")
    v.add_argument("file")
    v.add_argument("--field", default="fp:32003", help="q or fp:<p> (default fp:32003)")
    v.add_argument("--max-degree", type=int, default=30)
    v.add_argument("--steps", type=_range_pair, help="1-based inclusive range a..b")
    v.add_argument("--strict", action="store_true", help="treat skipped checks as failures")

    c = sub.add_parser("cogenerated", help="ideal cogenerated by alpha in a ladder")
    c.add_argument("file")
    c.add_argument("--alpha", type=_int_list, required=True)

    e = sub.add_parser("embed", help="t-minors of a matrix with a symmetric block")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--block", type=_block, required=True, help="r1..r2,c1..c2")
    e.add_argument("--t", type=int, required=True)
    return p


# loading

def _load_any(path):
    """A ladder document gives (ladder, None); an ideal document gives (ladder, ideal)."""
    doc = ser.load(path)
    if isinstance(doc, dict) and "ladder" in doc:
        ideal = ser.ideal_from_doc(doc)
        return ideal.ladder, ideal
    return ser.ladder_from_doc(doc), None


def _load_ideal(path):
    _, ideal = _load_any(path)
    if ideal is None:
        raise MalformedDocument(f"{path} holds a ladder; an ideal document is needed")
    return ideal


# verbs

def render(ladder, ideal=None, hplus=False, points=False):
    """Rows of the n x n grid: ``.`` outside, ``#`` plus cell, ``H`` in H+, ``*`` point."""
    marks = {c: "#" for c in ladder.plus_cells}
    if hplus and ideal is not None:
        for c in h_plus(normalize(ideal)).h_plus:
            marks[c] = "H"
    if points and ideal is not None:
        for c in ideal.points:
            marks[c] = "*"
    n = ladder.n
    return [" ".join(marks.get((i, j), ".") for j in range(1, n + 1)) for i in range(1, n + 1)]


def info_lines(ideal):
    norm = normalize(ideal)
    lines = [
        f"n: {ideal.n}",
        f"ladder cells: {len(ideal.ladder)}",
        f"points: {[list(p) for p in ideal.points]}",
        f"t: {list(ideal.sizes)}",
    ]
    if norm == ideal:
        lines.append("normalized: yes")
    elif norm.is_zero:
        lines.append("normalized: zero ideal")
    else:
        lines.append(f"normalized: points {[list(p) for p in norm.points]} "
                     f"t {list(norm.sizes)} ({len(norm.ladder)} cells)")
    lines.append(f"height: {h_plus(norm).height}")
    lines.append(f"generators: {len(norm.generators)}")
    if not norm.is_zero:
        k = pivot(norm)
        lines.append(f"pivot: {k if k is not None else 'none'}")
    return lines


def _ladder_info(ladder):
    cd = ladder.corner_data
    return [
        f"n: {ladder.n}",
        f"ladder cells: {len(ladder)}",
        f"lower inside corners: {[list(c) for c in cd.lower_inside]}",
        f"upper inside corners: {[list(c) for c in cd.upper_inside]}",
        f"upper outside corners: {[list(c) for c in cd.upper_outside]}",
    ]


def _plural(k, word):
    return f"{k} {word}" if k == 1 else f"{k} {word}s"


def descend_summary(cert):
    terms = len(terminal_cells(cert))
    return (f"{_plural(cert.biliaison_count, 'biliaison')}, "
            f"{_plural(cert.g_link_count, 'G-link')}, "
            f"terminal: {_plural(terms, 'linear form')}")


def _cmd_validate(args, out):
    ladder, ideal = _load_any(args.file)
    doc = ser.ideal_to_doc(ideal) if ideal is not None else ser.ladder_to_doc(ladder)
    print(ser.dumps(doc), file=out)
    return OK


def _cmd_render(args, out):
    ladder, ideal = _load_any(args.file)
    for row in render(ladder, ideal, hplus=args.hplus, points=args.points):
        print(row, file=out)
    return OK


def _cmd_info(args, out):
    ladder, ideal = _load_any(args.file)
    lines = _ladder_info(ladder) if ideal is None else info_lines(ideal)
    print("\n".join(lines), file=out)
    return OK


def _cmd_gens(args, out):
    ideal = _load_ideal(args.file)
    gens = ideal.generators
    if not args.expand:
        print(ser.dumps(ser.minors_to_doc(gens)), file=out)
        return OK
    ring = ladder_ring(ideal.ladder.plus_cells)
    for m in gens:
        print(f"{m} = {expand_minor(m, ideal.n, ring).to_text()}", file=out)
    return OK


def _cmd_descend(args, out):
    cert = descend_chain(_load_ideal(args.file))
    text = ser.dumps(ser.certificate_to_doc(cert))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(descend_summary(cert), file=out)
    else:
        print(text, file=out)
        print(descend_summary(cert), file=sys.stderr)
    return OK


def _cmd_verify(args, out):
    from .polyarith.verify import parse_field, verify_step

    try:
        parse_field(args.field)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    cert = descend_chain(_load_ideal(args.file))
    lo, hi = args.steps or (1, len(cert.steps))
    bounds = Bounds(max_degree=args.max_degree)
    reports = []
    for idx, step in enumerate(cert.steps, start=1):
        if lo <= idx <= hi:
            reports.append(verify_step(step, field=args.field, bounds=bounds, index=idx))
    print(ser.dumps([ser.report_to_doc(r) for r in reports]), file=out)
    failed = sum(len(r.failed) for r in reports)
    skipped = sum(len(r.skipped) for r in reports)
    checks = sum(len(r.checks) for r in reports)
    print(f"{len(reports)} steps, {checks} checks: {failed} failed, {skipped} skipped",
          file=sys.stderr)
    if failed:
        return VERIFY_FAILED
    if skipped and args.strict:
        return STRICT_SKIP
    return OK


def _cmd_cogenerated(args, out):
    ladder, _ = _load_any(args.file)
    ideal = from_cogenerated(ladder, args.alpha)
    print("\n".join(info_lines(ideal)), file=out)
    return OK


def _cmd_embed(args, out):
    rows, cols = args.block
    ideal = embed_block_matrix(args.m, args.n, rows, cols, args.t)
    print("\n".join(info_lines(ideal)), file=out)
    return OK


_VERBS = {
    "validate": _cmd_validate, "render": _cmd_render, "info": _cmd_info, "gens": _cmd_gens,
    "descend": _cmd_descend, "verify": _cmd_verify, "cogenerated": _cmd_cogenerated,
    "embed": _cmd_embed,
}


def _witness_text(exc):
    if isinstance(exc, ClosureViolation) and exc.witness:
        (i, j), (h, k) = exc.witness
        missing = " ".join(str(tuple(c)) for c in exc.missing or [])
        return f"witness: ({i}, {j}) ({h}, {k}) missing {missing}"
    if isinstance(exc, MissingUpperOutsideCorner) and exc.corner:
        return f"witness: corner {tuple(exc.corner)}"
    return None


def run(argv, out=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _VERBS[args.verb](args, out)
    except (_UsageError, MalformedDocument) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except (LadderError, IdealError) as exc:
        print(f"invalid: {exc}", file=out)
        w = _witness_text(exc)
        if w:
            print(w, file=out)
        return INVALID


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
