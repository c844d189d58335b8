"""Command-line interface.

Subcommands: gen | embed | verify | mbt | theorem-check | render.
Exit codes: 0 ok, 1 invalid certificate, 2 bad input, 3 internal
construction failure, 4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .documents import EmbeddingDocument, GenericGraphDocument, GraphDocument
from .embedding import embed_halin
from .exceptions import (
    ConstructionError,
    DocumentError,
    GuardExceededError,
    InvalidHalinError,
)
from .halin import enumerate_halin, make_halin, random_halin, wheel
from .render import render_dot, render_svg
from .verification import exact_mbt, oracle_vertex_limit, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BAD_INPUT = 2
EXIT_CONSTRUCTION = 3
EXIT_GUARD = 4

PRISM = (((0, 1), (0, 2), (0, 3), (1, 4), (1, 5)), (2, 4, 5, 3))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InvalidHalinError as exc:
        print("error: input is not a valid Halin graph:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  - {violation}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ConstructionError as exc:
        path = _save_counterexample(exc.instance)
        print(f"error: {exc}", file=sys.stderr)
        print(f"counterexample saved to {path}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halin-book",
        description="Matching book embeddings of Halin graphs: generate, embed, verify, render, "
        "and check the page-count formula against an exact oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit graph documents (JSON, one per line)")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    gen_wheel = gen_sub.add_parser("wheel", help="the wheel on M vertices")
    gen_wheel.add_argument("m", type=int)
    gen_wheel.set_defaults(func=_cmd_gen_wheel)
    gen_prism = gen_sub.add_parser("prism", help="the triangular prism")
    gen_prism.set_defaults(func=_cmd_gen_prism)
    gen_random = gen_sub.add_parser("random", help="a seeded pseudo-random Halin graph")
    gen_random.add_argument("interior", type=int, help="number of interior vertices")
    gen_random.add_argument("--max-child", type=int, default=5)
    gen_random.add_argument("--seed", type=int, default=0)
    gen_random.set_defaults(func=_cmd_gen_random)
    gen_enum = gen_sub.add_parser("enumerate", help="all Halin graphs up to N vertices")
    gen_enum.add_argument("n", type=int)
    gen_enum.add_argument("--limit", type=int, default=None, help="raise the enumeration guard")
    gen_enum.set_defaults(func=_cmd_gen_enumerate)

    embed = sub.add_parser("embed", help="embed a Halin graph document")
    embed.add_argument("graph", help="graph document path, or - for stdin")
    embed.set_defaults(func=_cmd_embed)

    verify = sub.add_parser("verify", help="validate an embedding against its graph")
    verify.add_argument("graph")
    verify.add_argument("embedding")
    verify.set_defaults(func=_cmd_verify)

    mbt = sub.add_parser("mbt", help="exact matching book thickness (small graphs)")
    mbt.add_argument("graph")
    mbt.add_argument("--no-halin", action="store_true", help="input is a bare vertex/edge list")
    mbt.add_argument("--limit", type=int, default=None, help="raise the oracle vertex guard")
    mbt.add_argument("--witness", metavar="PATH", help="write a witness embedding document")
    mbt.set_defaults(func=_cmd_mbt)

    check = sub.add_parser(
        "theorem-check", help="embed + verify + oracle-check every Halin graph up to a size"
    )
    check.add_argument("--max-vertices", type=int, default=9)
    check.add_argument("--limit", type=int, default=None, help="raise the size guards")
    check.set_defaults(func=_cmd_theorem_check)

    render = sub.add_parser("render", help="draw a verified embedding")
    render.add_argument("graph")
    render.add_argument("embedding")
    render.add_argument("--format", choices=("svg", "dot"), default="svg")
    render.set_defaults(func=_cmd_render)

    return parser


# ----------------------------------------------------------------------
# gen
# ----------------------------------------------------------------------


def _cmd_gen_wheel(args: argparse.Namespace) -> int:
    if args.m < 4:
        print("error: wheel needs at least 4 vertices", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(GraphDocument.from_halin(wheel(args.m)).to_json())
    return EXIT_OK


def _cmd_gen_prism(args: argparse.Namespace) -> int:
    print(GraphDocument.from_halin(make_halin(*PRISM)).to_json())
    return EXIT_OK


def _cmd_gen_random(args: argparse.Namespace) -> int:
    if args.interior < 1 or args.max_child < 3:
        print("error: need interior >= 1 and --max-child >= 3", file=sys.stderr)
        return EXIT_BAD_INPUT
    h = random_halin(args.interior, args.max_child, args.seed)
    print(GraphDocument.from_halin(h).to_json())
    return EXIT_OK


def _cmd_gen_enumerate(args: argparse.Namespace) -> int:
    kwargs = {} if args.limit is None else {"guard": args.limit}
    for h in enumerate_halin(args.n, **kwargs):
        print(GraphDocument.from_halin(h).to_json())
    return EXIT_OK


# ----------------------------------------------------------------------
# embed / verify / mbt
# ----------------------------------------------------------------------


def _cmd_embed(args: argparse.Namespace) -> int:
    doc = GraphDocument.from_json(_read(args.graph))
    h, labels = doc.to_halin()
    emb = embed_halin(h)
    print(EmbeddingDocument.from_embedding(emb, labels).to_json())
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    graph, emb, _labels = _load_pair(args.graph, args.embedding)
    try:
        report = validate(graph, emb)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if report.is_valid:
        print(f"VALID {emb.page_count} pages")
        return EXIT_OK
    print("INVALID embedding:")
    for line in report.lines():
        print(f"  - {line}")
    return EXIT_INVALID


def _cmd_mbt(args: argparse.Namespace) -> int:
    if args.no_halin:
        doc = GenericGraphDocument.from_json(_read(args.graph))
        graph, labels = doc.to_graph()
    else:
        h, labels = GraphDocument.from_json(_read(args.graph)).to_halin()
        graph = h.graph()
    value, witness = exact_mbt(graph, limit=args.limit)
    print(value)
    if args.witness:
        with open(args.witness, "w", encoding="utf-8") as fh:
            fh.write(EmbeddingDocument.from_embedding(witness, labels).to_json() + "\n")
    return EXIT_OK


# ----------------------------------------------------------------------
# theorem-check
# ----------------------------------------------------------------------


def _cmd_theorem_check(args: argparse.Namespace) -> int:
    enum_kwargs = {} if args.limit is None else {"guard": args.limit}
    oracle_cap = oracle_vertex_limit(args.limit)
    header = f"{'graph':>5}  {'n':>2}  {'delta':>5}  {'pages':>5}  {'formula':>7}  {'mbt':>4}  status"
    print(header)
    failures = 0
    total = 0
    for index, h in enumerate(enumerate_halin(args.max_vertices, **enum_kwargs)):
        total += 1
        graph = h.graph()
        delta = h.max_degree()
        formula = 4 if delta == 3 else delta
        emb = embed_halin(h)
        report = validate(graph, emb)
        problems = []
        if not report.is_valid:
            problems.append("invalid embedding")
        if emb.page_count != formula:
            problems.append(f"pages {emb.page_count} != formula {formula}")
        if len(h.vertices) <= oracle_cap:
            mbt_value, _ = exact_mbt(graph, limit=oracle_cap)
            mbt_text = str(mbt_value)
            if mbt_value != formula:
                problems.append(f"oracle mbt {mbt_value} != formula {formula}")
        else:
            mbt_text = "-"
        status = "ok" if not problems else "FAIL: " + "; ".join(problems)
        print(
            f"{index:>5}  {len(h.vertices):>2}  {delta:>5}  {emb.page_count:>5}  "
            f"{formula:>7}  {mbt_text:>4}  {status}"
        )
        if problems:
            failures += 1
            path = _save_counterexample(GraphDocument.from_halin(h).to_dict())
            print(f"counterexample saved to {path}", file=sys.stderr)
    if failures:
        print(f"FAIL {failures}/{total} graphs disagree")
        return EXIT_INVALID
    print(f"PASS {total}/{total} graphs match the page formula")
    return EXIT_OK


# ----------------------------------------------------------------------
# render
# ----------------------------------------------------------------------


def _cmd_render(args: argparse.Namespace) -> int:
    graph, emb, labels = _load_pair(args.graph, args.embedding)
    try:
        report = validate(graph, emb)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if not report.is_valid:
        print("refusing to render an invalid embedding:", file=sys.stderr)
        for line in report.lines():
            print(f"  - {line}", file=sys.stderr)
        return EXIT_INVALID
    if args.format == "svg":
        sys.stdout.write(render_svg(emb, labels))
    else:
        sys.stdout.write(render_dot(emb, labels))
    return EXIT_OK


# ----------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_pair(graph_path: str, embedding_path: str):
    doc = GraphDocument.from_json(_read(graph_path))
    h, id_to_label = doc.to_halin()
    emb_doc = EmbeddingDocument.from_json(_read(embedding_path))
    emb, _ = emb_doc.to_embedding({lab: i for i, lab in id_to_label.items()})
    return h.graph(), emb, id_to_label


def _save_counterexample(payload: dict) -> str:
    fd, path = tempfile.mkstemp(prefix="halinbook_counterexample_", suffix=".json", dir=os.getcwd())
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return path


if __name__ == "__main__":
    sys.exit(main())
