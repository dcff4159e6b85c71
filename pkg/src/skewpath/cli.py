"""Command-line front end.

Exit status: 0 when an answer was computed (including "none" and
"infeasible"), 1 for usage errors, 2 for bad input, 3 when a size guard
stops an exhaustive search.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable

from . import oracle
from .exceptions import GuardExceeded, InputError
from .general import (
    constrained_ham_path,
    extend_partial,
    parse_constraints,
    parse_graph,
    parse_partial,
)
from .hamilton import enumerate_ham_paths, format_path, ham_path_any, ham_path_from, min_path_cover
from .labeling import best_l21, iter_lambda_rectangles, lambda_rectangle
from .table import BoxVertex, classify_pattern, component_count, load_table
from .toughness import (
    deficit,
    is_path_start,
    is_pathwise_tough,
    is_tough_vertex,
    max_path_length,
    path_cover_number,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Out:
    """Writes either text or a JSON document, depending on --format."""

    def __init__(self, fmt: str):
        self.fmt = fmt

    def line(self, text: str) -> None:
        sys.stdout.write(text + "\n")

    def json(self, doc) -> None:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")

    def emit(self, text: str, doc) -> None:
        if self.fmt == "json":
            self.json(doc)
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _table(path: str):
    try:
        return load_table(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _vertex(text: str) -> BoxVertex:
    return BoxVertex.parse(text)


def _path_doc(vertices) -> list[str] | None:
    return None if vertices is None else [str(v) for v in vertices]


# subcommands -------------------------------------------------------------


def cmd_classify(args, out: _Out) -> None:
    t = _table(args.table)
    pc = classify_pattern(t)
    comps = component_count(t, pc)
    text = "empty" if t.n == 0 else f"{pc.describe()} components={comps}"
    out.emit(text, {**pc.to_dict(), "components": comps})


def cmd_invariants(args, out: _Out) -> None:
    t = _table(args.table)
    df = deficit(t)
    tough = is_pathwise_tough(t)
    pi = path_cover_number(t)
    ell = max_path_length(t) if t.n else None
    text = (
        f"n={t.n} DF={df.value} pathwise_tough={str(bool(tough)).lower()} "
        f"pi={pi} ell={'none' if ell is None else ell}"
    )
    doc = {
        "n": t.n,
        "deficit": df.to_dict(),
        "toughness": tough.to_dict(),
        "path_cover_number": pi,
        "max_path_length": ell,
    }
    out.emit(text, doc)


def cmd_tough(args, out: _Out) -> None:
    t = _table(args.table)
    if args.vertex is None and not args.all:
        rep = is_pathwise_tough(t)
        out.emit(rep.describe(), rep.to_dict())
        return
    verts = [t.check_vertex(_vertex(args.vertex))] if args.vertex else list(t.vertices())
    rows = [(v, is_tough_vertex(t, v), is_path_start(t, v)) for v in verts]
    text = "".join(
        f"{v} tough={str(a).lower()} path_start={str(b).lower()}\n" for v, a, b in rows
    )
    doc = [{"vertex": str(v), "tough": a, "path_start": b} for v, a, b in rows]
    out.emit(text or "\n", doc)


def _stream(out: _Out, items: Iterable, render: Callable, sep: str = "") -> None:
    """Print items as they arrive; on interrupt keep what was printed."""
    docs = []
    count = 0
    try:
        for item in items:
            text, doc = render(item)
            if out.fmt == "json":
                docs.append(doc)
            else:
                if count and sep:
                    sys.stdout.write(sep)
                sys.stdout.write(text)
                sys.stdout.flush()
            count += 1
    finally:
        if out.fmt == "json":
            out.json(docs)
        elif not count:
            out.line("none")
        sys.stdout.flush()


def cmd_hampath(args, out: _Out) -> None:
    t = _table(args.table)
    start = t.check_vertex(_vertex(args.start)) if args.start else None
    if args.enumerate:
        if start:
            starts = [start]
        elif args.mode == "boxes":
            starts = [BoxVertex(i, j, 0) for i, j in t.nonempty_boxes()]
        else:
            starts = list(t.vertices())

        def paths():
            left = args.limit
            for s in starts:
                if left is not None and left <= 0:
                    return
                for p in enumerate_ham_paths(t, s, mode=args.mode, limit=left):
                    yield p
                    if left is not None:
                        left -= 1

        _stream(out, paths(), lambda p: (str(p) + "\n", [str(v) for v in p]))
        return
    if t.n == 0:
        out.emit("none (empty table)", {"path": None, "reason": "empty"})
        return
    path = ham_path_from(t, start) if start else ham_path_any(t)
    if path is None:
        out.emit("none", {"path": None, "reason": "no-path"})
    else:
        out.emit(format_path(path.vertices), {"path": _path_doc(path.vertices), "reason": None})


def cmd_pathcover(args, out: _Out) -> None:
    t = _table(args.table)
    if t.n == 0:
        out.emit("none", {"paths": []})
        return
    cover = min_path_cover(t)
    out.emit(cover.to_text(), {"paths": [[str(v) for v in p] for p in cover.paths]})


def cmd_label(args, out: _Out) -> None:
    t = _table(args.table)
    lab, span = best_l21(t)
    text = f"# span={span.value} exact={str(span.exact).lower()}\n" + lab.to_text()
    doc = {**lab.to_dict(), "span": span.value, "exact": span.exact}
    out.emit(text, doc)


def cmd_rectangle(args, out: _Out) -> None:
    if args.enumerate:
        rects = iter_lambda_rectangles(args.m, args.n, limit=args.limit)
        _stream(out, rects, lambda r: (r.to_text(), [list(x) for x in r.rows]), sep="\n")
        return
    rect = lambda_rectangle(args.m, args.n)
    if rect is None:
        out.emit("none", {"rectangle": None})
    else:
        out.emit(rect.to_text(), {"rectangle": [list(x) for x in rect.rows]})


def cmd_extend(args, out: _Out) -> None:
    g = parse_graph(_read(args.graph))
    pl = parse_partial(_read(args.partial))
    labels = extend_partial(g, pl, force=args.force)
    if labels is None:
        out.emit("infeasible", {"labels": None})
        return
    text = "".join(f"{v} {labels[v]}\n" for v in range(g.n))
    out.emit(text, {"labels": {str(v): labels[v] for v in range(g.n)}})


def cmd_consistent(args, out: _Out) -> None:
    g = parse_graph(_read(args.graph))
    cs = parse_constraints(_read(args.constraints))
    path = constrained_ham_path(g, cs, force=args.force)
    if path is None:
        out.emit("infeasible", {"path": None})
    else:
        out.emit(" ".join(map(str, path)), {"path": path})


def _oracle_graph(args):
    if args.graph:
        return parse_graph(_read(args.graph))
    if args.table:
        return _table(args.table)
    raise InputError("give a table file or --graph")


def cmd_oracle(args, out: _Out) -> None:
    what = args.what
    g = _oracle_graph(args)
    is_table = not args.graph
    if what == "hampaths":
        start = _vertex(args.start) if args.start and is_table else (int(args.start) if args.start else None)
        paths = oracle.brute_ham_paths(g, start)
        text = "".join(" ".join(map(str, p)) + "\n" for p in paths) or "none"
        out.emit(text, [[str(v) for v in p] for p in paths])
    elif what == "pathcover":
        k = oracle.brute_path_cover(g)
        out.emit(str(k), {"path_cover_number": k})
    elif what == "longest":
        k = oracle.brute_longest_path(g)
        out.emit(str(k), {"max_path_length": k})
    elif what == "pathwise":
        ok = oracle.brute_pathwise_tough(g)
        out.emit(f"pathwise_tough={str(ok).lower()}", {"pathwise_tough": ok})
    elif what == "l21":
        # for a table the coloring lives on L(H), not on the skew graph
        target = oracle.line_graph(g) if is_table else g
        k = oracle.brute_l21(target)
        out.emit(str(k), {"l21_span": k})


# parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skewpath", description="Hamiltonian paths and labelings of skew graphs.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="tabular pattern and component count")
    s.add_argument("table")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("invariants", help="n, DF, pathwise toughness, pi and ell")
    s.add_argument("table")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("tough", help="pathwise toughness or per-vertex verdicts")
    s.add_argument("table")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--vertex", metavar="R,C,K")
    grp.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_tough)

    s = sub.add_parser("hampath", help="a Hamiltonian path, or all of them")
    s.add_argument("table")
    s.add_argument("--from", dest="start", metavar="R,C,K")
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--mode", choices=("vertices", "boxes"), default="vertices")
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_hampath)

    s = sub.add_parser("pathcover", help="a minimum path cover")
    s.add_argument("table")
    s.set_defaults(func=cmd_pathcover)

    s = sub.add_parser("label", help="L(2,1)-coloring of L(H)")
    s.add_argument("table")
    s.set_defaults(func=cmd_label)

    s = sub.add_parser("rectangle", help="lambda-rectangle of size M x N")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_rectangle)

    s = sub.add_parser("extend", help="extend a partial lambda-labeling of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--partial", required=True)
    s.add_argument("--force", action="store_true", help="ignore the size guard")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("consistent", help="Hamiltonian path obeying position or gap constraints")
    s.add_argument("--graph", required=True)
    s.add_argument("--constraints", required=True)
    s.add_argument("--force", action="store_true", help="ignore the size guard")
    s.set_defaults(func=cmd_consistent)

    s = sub.add_parser("oracle", help="brute-force reference values")
    s.add_argument("what", choices=("hampaths", "pathcover", "longest", "pathwise", "l21"))
    s.add_argument("table", nargs="?")
    s.add_argument("--graph")
    s.add_argument("--from", dest="start")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.format)
    try:
        args.func(args, out)
    except InputError as exc:
        print(f"skewpath: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"skewpath: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except KeyboardInterrupt:
        sys.stdout.flush()
        print("skewpath: interrupted", file=sys.stderr)
        return 130
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
