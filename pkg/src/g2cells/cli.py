"""Command line front end with exact rational input and output.

Rational parameters are given as comma-separated ``p/q`` or integer
strings and are parsed losslessly.  Output is deterministic: identical
inputs and seed produce byte-identical output.  Data goes to stdout,
diagnostics to stderr; ``--out FILE`` redirects the data stream.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import chamber, checks, components, deodhar, fixtures, minors
from .scalars import parse_rational
from .weyl import WORD_I_TILDE, enumerate_distinguished


def _parse_word(text):
    word = tuple(int(ch) for ch in text.replace(",", ""))
    if any(i not in (1, 2) for i in word):
        raise argparse.ArgumentTypeError("words use the letters 1 and 2")
    return word


def _parse_params(text):
    return tuple(parse_rational(piece) for piece in text.split(","))


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tabular(args, header, rows):
    """Render rows as aligned text, json, or csv per --format."""
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        return json.dumps(payload, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [
        max(len(str(h)), *(len(str(row[k])) for row in rows)) if rows else len(str(h))
        for k, h in enumerate(header)
    ]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_distinguished(args):
    rows = []
    for sub in enumerate_distinguished(args.word):
        rows.append(
            (
                sub.name,
                " ".join(sub.sigma_names()),
                ",".join(map(str, sub.I)) or "-",
                ",".join(map(str, sub.J)) or "-",
                ",".join(map(str, sub.K)) or "-",
                sub.dim,
                sub.codim,
            )
        )
    _emit(args, _tabular(args, ("name", "chain", "I", "J", "K", "dim", "codim"), rows))
    return 0


def cmd_cells(args):
    rows = []
    for fam in deodhar.families():
        rows.append(
            (
                fam.name,
                " ".join(repr(s) for s in fam.sigma),
                ",".join(map(str, fam.I)) or "-",
                ",".join(map(str, fam.J)) or "-",
                ",".join(map(str, fam.K)) or "-",
                fam.dim,
                fam.codim,
                ",".join(fam.param_signature()),
            )
        )
    _emit(
        args,
        _tabular(
            args,
            ("family", "chain", "I", "J", "K", "dim", "codim", "params"),
            rows,
        ),
    )
    return 0


def _split_params(fam, params):
    if len(params) != 6 - len(fam.J):
        raise SystemExit(
            "family %s takes %d parameters (%s)"
            % (fam.name, 6 - len(fam.J), ",".join(fam.param_signature()))
        )
    t, m = [], []
    it = iter(params)
    for name in fam.param_signature():
        (t if name.startswith("t") else m).append(next(it))
    return tuple(t), tuple(m)


def cmd_cell_point(args):
    fam = deodhar.family_by_name(args.family)
    t, m = _split_params(fam, args.params)
    cell = deodhar.CellId(fam, tuple(1 if v > 0 else -1 for v in t))
    point = deodhar.cell_point(cell, t, m)
    from . import rep as _rep

    chain = deodhar.position_chain(cell, t, m)
    lines = [
        "cell             %s" % cell.display(),
        "unipotent-lower  %s" % _rep.is_unipotent_lower(point),
        "in-big-cell      %s" % (deodhar.bruhat_position_plus(point) is deodhar.W.w0),
        "chain            %s" % " ".join(repr(w) for w in chain),
        "chain-valid      %s" % deodhar.verify_cell_chain(cell, t, m),
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_minors(args):
    table = minors.symbolic_minors()
    lines = []
    for label in minors.LEVEL1_LABELS + minors.LEVEL2_LABELS:
        lines.append("%-6s = %s" % (label, table[label]))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_epsilon(args):
    from . import rep as _rep

    xel = _rep.group_product(
        _rep.x(i, t) for i, t in zip(args.word, args.params)
    )
    try:
        values = chamber.epsilon_factorize(xel, args.word).params
    except chamber.NotFactorizable:
        _emit(args, "not-factorizable\n")
        return 0
    if tuple(args.word) == WORD_I_TILDE:
        assert values == chamber.closed_form_epsilon(args.params)
    _emit(args, " ".join(str(v) for v in values) + "\n")
    return 0


def cmd_alpha(args):
    fam = deodhar.family_by_name(args.family)
    t, m = _split_params(fam, args.params)
    cell = deodhar.CellId(fam, tuple(1 if v > 0 else -1 for v in t))
    point = deodhar.cell_point(cell, t, m)
    try:
        values = chamber.alpha_factorize(point, args.word).params
    except chamber.NotFactorizable:
        _emit(args, "not-factorizable\n")
        return 0
    if tuple(args.word) == WORD_I_TILDE and fam.codim > 0:
        assert values == chamber.closed_form_alpha(fam.name, t, m)
    _emit(args, " ".join(str(v) for v in values) + "\n")
    return 0


def cmd_graph(args):
    partition = components.compute_figure1(args.samples, args.seed)
    rows = []
    for num in sorted(partition.components):
        members = partition.components[num]
        for word in ("i", "it"):
            cells = sorted(n.signs for n in members if n.word == word)
            rows.append((num, "121212" if word == "i" else "212121", " ".join(cells)))
    _emit(args, _tabular(args, ("component", "word", "cells"), rows))
    return 0


def cmd_bijection(args):
    bij = components.match_plus_components(args.samples, args.seed)
    rows = [(letter, number) for letter, number in sorted(bij.items())]
    _emit(args, _tabular(args, ("letter", "component"), rows))
    return 0


def _classification_rows(args):
    rows = []
    for name in fixtures.TABLE_ORDER:
        for r in components.classification_tables(args.samples, args.seed)[name]:
            rows.append((r.cell, r.family, r.signs, r.letter, r.component, r.codim))
    return rows


def cmd_classify(args):
    if args.signs:
        r = components.classify_cell(args.signs, args.samples, args.seed)
        rows = [(r.cell, r.family, r.signs, r.letter, r.component, r.codim)]
    else:
        rows = _classification_rows(args)
    _emit(
        args,
        _tabular(args, ("cell", "family", "signs", "letter", "component", "codim"), rows),
    )
    return 0


def cmd_euler(args):
    report = components.euler_report(args.samples, args.seed)
    rows = [
        (num,) + report.per_component[num] for num in sorted(report.per_component)
    ]
    _emit(args, _tabular(args, ("component", "codim0", "codim1", "codim2", "euler"), rows))
    return 0


def cmd_verify(args):
    lines = []

    def progress(result):
        status = "PASS" if result.passed else "FAIL"
        line = "[%s] %d. %s" % (status, result.number, result.name)
        if not result.passed:
            line += "\n       %s" % result.detail
        print(line, file=sys.stderr)
        lines.append(line)

    results = checks.run_all(progress)
    ok = all(r.passed for r in results)
    summary = "verified %d/%d checks" % (sum(r.passed for r in results), len(results))
    lines.append(summary)
    print(summary, file=sys.stderr)
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        payload = [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ]
        _emit(args, json.dumps(payload, indent=1) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(("number", "name", "passed", "detail"))
        for r in results:
            writer.writerow((r.number, r.name, r.passed, r.detail))
        _emit(args, buf.getvalue())
    else:
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="g2cells",
        description="Deodhar cells and connected components of the opposed "
        "big-cell intersection in the real G2 flag variety, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write output to a file instead of stdout")
        return p

    p = add("distinguished", cmd_distinguished, help="list distinguished subexpressions")
    p.add_argument("--word", type=_parse_word, default=(1, 2, 1, 2, 1, 2))
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = add("cells", cmd_cells, help="list the eight Deodhar cell families")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = add("cell-point", cmd_cell_point, help="evaluate and check one cell point")
    p.add_argument("--family", required=True)
    p.add_argument("--params", type=_parse_params, required=True,
                   help="comma-separated rationals in the family's signature order")

    p = add("minors", cmd_minors, help="print the twelve symbolic generalized minors")
    p.add_argument(
        "--symbolic",
        action="store_true",
        default=True,
        help="print the symbolic polynomial table (the default and only mode)",
    )

    p = add("epsilon", cmd_epsilon, help="factorization parameters of the epsilon map")
    p.add_argument("--params", type=_parse_params, required=True,
                   help="six rationals a,b,c,d,e,f")
    p.add_argument("--word", type=_parse_word, default=WORD_I_TILDE)

    p = add("alpha", cmd_alpha, help="factorization parameters of the alpha map")
    p.add_argument("--family", required=True)
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--word", type=_parse_word, default=WORD_I_TILDE)

    for name, fn, helptext in (
        ("graph", cmd_graph, "connected components of the 128 sign cells"),
        ("bijection", cmd_bijection, "match upper letter components to numbers"),
        ("classify", cmd_classify, "classify Deodhar cells into components"),
        ("euler", cmd_euler, "Euler characteristics per component"),
    ):
        p = add(name, fn, help=helptext)
        p.add_argument("--samples", type=int, default=8)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if name == "classify":
            p.add_argument("--signs", help="classify a single cell display string")

    p = add("verify", cmd_verify, help="run every acceptance check")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
