"""Command-line driver.

Exit codes: 0 success, 1 a verification found a defect, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from . import families
from .analysis import HilbertTable, compare_presentations, hilbert_table, is_central
from .expr import parse_lie_expr
from .lyndon import WeightedAlphabet
from .presentation import IdealCache
from .suites import SUITES

log = logging.getLogger("grlie")

EXIT_OK, EXIT_DEFECT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _setup_logging() -> None:
    level = os.environ.get("GRLIE_LOG", "warn").lower()
    levels = {"error": logging.ERROR, "warn": logging.WARNING,
              "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(
        stream=sys.stderr, level=levels.get(level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _family_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=families.FAMILIES, required=required)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--strands", type=int, default=0)
    p.add_argument("--punctures", type=int, default=0)
    p.add_argument(
        "--generators", default="x,y",
        help="free family only: comma-separated names, optional :weight (e.g. x,y,u:2)",
    )


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--output", default="-", help="output path (default: standard output)")
    p.add_argument("--threads", type=int, default=0, help="0 = sequential")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grlie", description="Graded components of presented Lie algebras over Z."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="free ranks and torsion degree by degree")
    _family_args(p)
    _common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    _family_args(p, required=False)
    _common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("central", help="test whether an element is central")
    _family_args(p)
    _common(p)
    p.add_argument("--element", required=True, help="Lie expression, e.g. 'A[1,2]+A[1,3]'")

    p = sub.add_parser("compare", help="compare two presentations degree by degree")
    p.add_argument("left", help="family spec, e.g. ihara_sphere:strands=4")
    p.add_argument("right", help="family spec, e.g. kv_sphere:strands=4")
    _common(p)
    return parser


def parse_family_spec(text: str):
    """``"bezrukavnikov:genus=1,strands=2"`` -> presentation."""
    name, _, rest = text.partition(":")
    kwargs = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq or key not in ("genus", "strands", "punctures", "generators"):
            raise UsageError(f"bad family parameter {item!r} in {text!r}")
        kwargs[key] = val if key == "generators" else int(val)
    if "generators" in kwargs:
        kwargs["generators"] = kwargs["generators"].replace(";", ",")
    return families.build(name, **kwargs)


def _presentation(args):
    return families.build(
        args.family, genus=args.genus, strands=args.strands,
        punctures=args.punctures, generators=args.generators,
    )


def format_table(table: HilbertTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_json()) + "\n"
    lines = ["d\tfree_rank\ttorsion"]
    for d, row in enumerate(table.rows, start=1):
        lines.append(f"{d}\t{row.free_rank}\t{','.join(map(str, row.torsion))}")
    return "\n".join(lines) + "\n"


def _emit(args, text: str) -> None:
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def _table(args) -> int:
    table = hilbert_table(_presentation(args), args.max_degree, threads=args.threads)
    _emit(args, format_table(table, args.format))
    return EXIT_OK


def _verify(args) -> int:
    if args.suite in ("witt", "jacobi", "roundtrip"):
        names, weights = families.parse_generators(args.generators)
        alphabet = WeightedAlphabet(tuple(names), tuple(weights))
    else:
        alphabet = None
    kw = dict(
        alphabet=alphabet, max_degree=args.max_degree, seed=args.seed,
        genus=args.genus, strands=args.strands, threads=args.threads,
    )
    if args.samples is not None:
        kw["samples"] = args.samples
    result = SUITES[args.suite](**kw)
    for msg in result.failures:
        log.error("%s: %s", result.name, msg)
    payload = {
        "suite": result.name,
        "checks": result.checks,
        "failures": result.failures,
        "passed": result.passed,
    }
    if args.format == "json":
        text = json.dumps(payload) + "\n"
    else:
        text = f"suite\tchecks\tfailures\tpassed\n{result.name}\t{result.checks}\t" \
               f"{len(result.failures)}\t{str(result.passed).lower()}\n"
    _emit(args, text)
    return EXIT_OK if result.passed else EXIT_DEFECT


def _central(args) -> int:
    p = _presentation(args)
    e = parse_lie_expr(args.element, p)
    cache = IdealCache(p, threads=args.threads)
    verdict = is_central(e, p, args.max_degree, cache)
    payload = {"family": p.name, "params": p.params.as_dict(),
               "element": args.element, "degree": e.degree, "central": verdict}
    if args.format == "json":
        text = json.dumps(payload) + "\n"
    else:
        text = f"element\tdegree\tcentral\n{args.element}\t{e.degree}\t{str(verdict).lower()}\n"
    _emit(args, text)
    return EXIT_OK if verdict else EXIT_DEFECT


def _compare(args) -> int:
    left, right = parse_family_spec(args.left), parse_family_spec(args.right)
    cmp = compare_presentations(left, right, args.max_degree)
    if not cmp.torsion_equal():
        log.warning("torsion differs between %s and %s (reported, not asserted)",
                    args.left, args.right)
    if args.format == "json":
        text = json.dumps(cmp.to_json()) + "\n"
    else:
        lines = ["d\tleft_free_rank\tright_free_rank\tleft_torsion\tright_torsion"]
        for r in cmp.rows:
            lines.append(
                f"{r.d}\t{r.left.free_rank}\t{r.right.free_rank}\t"
                f"{','.join(map(str, r.left.torsion))}\t{','.join(map(str, r.right.torsion))}"
            )
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK if cmp.ranks_equal() else EXIT_DEFECT


def run(argv: Optional[List[str]] = None) -> int:
    _setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.max_degree < 1:
        print("grlie: --max-degree must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    handler = {"table": _table, "verify": _verify, "central": _central,
               "compare": _compare}[args.command]
    try:
        return handler(args)
    except (UsageError, ValueError, KeyError) as exc:
        # ValueError covers bad family parameters and expression errors
        print(f"grlie: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"grlie: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
