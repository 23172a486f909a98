"""Command-line interface.

    snipkit compute --corpus papers.jsonl --citing-year 2007 --out results.tsv
    snipkit stats --results results.tsv --indicator snip
    snipkit sensitivity --corpus papers.jsonl --citing-year 2007 --variant field-window-short
    snipkit generate --seed 1 --out papers.jsonl

Exit status: 0 on success, 1 for usage errors, 2 for data errors.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .corpus import CorpusError, read_corpus, write_corpus
from .indicators import NoEligibleJournals, compute_all
from .report import RunManifest, read_column, render_compute, render_sensitivity, render_stats
from .sensitivity import Variant, run_sensitivity
from .stats import distribution_summary, histogram
from .synth import GeneratorSpec, generate_corpus
from .windows import WindowConfig

log = logging.getLogger("snipkit")

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _add_window_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", required=True, help="line-delimited JSON corpus")
    p.add_argument("--registry", help="file with one database source id per line")
    p.add_argument("--citing-year", type=int, required=True)
    p.add_argument("--indicator-window", type=int, default=3, metavar="YEARS")
    p.add_argument("--field-window", type=int, default=10, metavar="YEARS")
    p.add_argument("--out", default="-", help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="snipkit", description="Source-normalized journal impact indicators.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="per-journal indicator table")
    _add_window_flags(p)

    p = sub.add_parser("stats", help="distribution summary and histogram of one indicator column")
    p.add_argument("--results", required=True, help="TSV written by 'compute'")
    p.add_argument("--indicator", required=True, help="column name, e.g. snip or rip")
    p.add_argument("--out", default="-")

    p = sub.add_parser("sensitivity", help="DIFF between default and variant windows")
    _add_window_flags(p)
    p.add_argument("--variant", required=True, choices=[v.value for v in Variant])

    p = sub.add_parser("generate", help="write a seeded synthetic corpus")
    d = GeneratorSpec()
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--fields", type=int, default=d.n_fields)
    p.add_argument("--journals-per-field", type=int, default=d.journals_per_field)
    p.add_argument("--first-year", type=int, default=d.first_year)
    p.add_argument("--last-year", type=int, default=d.last_year)
    p.add_argument("--papers-per-year", type=float, default=d.papers_per_journal_year,
                   help="mean papers per journal per year")
    p.add_argument("--refs-mean", type=_float_list, default=d.refs_per_paper_mean,
                   help="mean references per paper; one value or one per field, comma-separated")
    p.add_argument("--coverage-target", type=float, default=1.0 - d.external_fraction,
                   help="share of references that point into the database")
    p.add_argument("--review-fraction", type=float, default=d.review_fraction)
    p.add_argument("--ineligible-fraction", type=float, default=d.ineligible_fraction)
    p.add_argument("--cross-field-fraction", type=float, default=d.cross_field_fraction)
    p.add_argument("--out", required=True)
    return parser


def _config(args) -> WindowConfig:
    try:
        return WindowConfig.default(args.citing_year, args.indicator_window, args.field_window)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_compute(args) -> None:
    config = _config(args)
    corpus = read_corpus(args.corpus, args.registry)
    log.info("read %d records, %d sources", len(corpus), len(corpus.source_registry))
    results, summary = compute_all(corpus, config)
    manifest = RunManifest(
        "compute",
        config,
        corpus_digest=corpus.digest(),
        extra=(("n_median_journals", str(summary.n_eligible)), ("median_dcp", repr(summary.median_dcp))),
    )
    _write(args.out, render_compute(results, manifest))


def cmd_stats(args) -> None:
    with open(args.results, encoding="utf-8") as fh:
        text = fh.read()
    try:
        values = [v for v in read_column(text, args.indicator) if v is not None]
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if not values:
        raise ValueError(f"column {args.indicator!r} has no values")
    manifest = RunManifest("stats", extra=(("results", args.results), ("indicator", args.indicator)))
    _write(args.out, render_stats(args.indicator, distribution_summary(values), histogram(values), manifest))


def cmd_sensitivity(args) -> None:
    config = _config(args)
    corpus = read_corpus(args.corpus, args.registry)
    report = run_sensitivity(corpus, config, Variant(args.variant))
    manifest = RunManifest(
        "sensitivity",
        config,
        variant_config=report.variant_config,
        corpus_digest=corpus.digest(),
        extra=(("variant", args.variant),),
    )
    _write(args.out, render_sensitivity(report, manifest))


def cmd_generate(args) -> None:
    try:
        spec = GeneratorSpec(
            seed=args.seed,
            n_fields=args.fields,
            journals_per_field=args.journals_per_field,
            first_year=args.first_year,
            last_year=args.last_year,
            papers_per_journal_year=args.papers_per_year,
            refs_per_paper_mean=args.refs_mean,
            external_fraction=1.0 - args.coverage_target,
            review_fraction=args.review_fraction,
            ineligible_fraction=args.ineligible_fraction,
            cross_field_fraction=args.cross_field_fraction,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    corpus = generate_corpus(spec)
    write_corpus(corpus, args.out)
    log.info("wrote %d records to %s", len(corpus), args.out)


COMMANDS = {
    "compute": cmd_compute,
    "stats": cmd_stats,
    "sensitivity": cmd_sensitivity,
    "generate": cmd_generate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"snipkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CorpusError, NoEligibleJournals, ValueError, OSError) as exc:
        print(f"snipkit: {exc}", file=sys.stderr)
        return EXIT_DATA
    return 0


if __name__ == "__main__":
    sys.exit(main())
