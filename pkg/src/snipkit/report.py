"""Tab-separated report writers and readers.

Reports start with one ``#`` manifest line; data rows never contain
timestamps, so they are byte-stable for identical inputs.
"""

from __future__ import annotations

import datetime as _dt
import os
from collections.abc import Iterable
from dataclasses import dataclass

from . import __version__
from .indicators import JournalIndicators
from .sensitivity import SensitivityReport
from .stats import PERCENTILES, DistributionSummary
from .windows import WindowConfig

COMPUTE_COLUMNS = (
    "source_id",
    "n_papers",
    "pct_reviews",
    "rip",
    "coverage_pct",
    "dcp",
    "rdcp",
    "snip",
    "pct_self_cites",
    "pct_subfield_refs_to_journal",
)


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def _timestamp() -> str:
    # SOURCE_DATE_EPOCH pins the manifest time for reproducible output
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    now = (
        _dt.datetime.fromtimestamp(int(epoch), _dt.timezone.utc)
        if epoch
        else _dt.datetime.now(_dt.timezone.utc)
    )
    return now.replace(microsecond=0).isoformat()


@dataclass(frozen=True)
class RunManifest:
    command: str
    config: WindowConfig | None = None
    variant_config: WindowConfig | None = None
    corpus_digest: str | None = None
    extra: tuple[tuple[str, str], ...] = ()
    tool_version: str = __version__
    timestamp: str = ""

    def line(self) -> str:
        items = [("tool", f"snipkit {self.tool_version}"), ("command", self.command)]
        if self.config is not None:
            items += _config_items(self.config, "")
        if self.variant_config is not None:
            items += _config_items(self.variant_config, "variant_")
        if self.corpus_digest is not None:
            items.append(("corpus_sha256", self.corpus_digest))
        items += list(self.extra)
        items.append(("timestamp", self.timestamp or _timestamp()))
        return "# " + "\t".join(f"{k}={v}" for k, v in items) + "\n"


def _config_items(config: WindowConfig, prefix: str) -> list[tuple[str, str]]:
    return [
        (prefix + "citing_year", str(config.citing_year)),
        (prefix + "indicator_window", str(config.indicator_window)),
        (prefix + "field_window", str(config.field_window)),
    ]


def _row(values: Iterable) -> str:
    return "\t".join(fmt(v) for v in values) + "\n"


def compute_rows(results: list[JournalIndicators]) -> list[list]:
    rows = []
    for j in sorted(results, key=lambda j: j.source_id):
        rows.append(
            [
                j.source_id,
                j.n_papers,
                j.pct_reviews,
                j.rip,
                None if j.f is None else 100.0 * j.f,
                j.r_db,
                j.rdcp,
                j.snip,
                j.pct_self_cites,
                j.pct_field_refs_to_journal,
            ]
        )
    return rows


def render_compute(results: list[JournalIndicators], manifest: RunManifest) -> str:
    out = [manifest.line(), _row(COMPUTE_COLUMNS)]
    out += [_row(r) for r in compute_rows(results)]
    return "".join(out)


def read_table(text: str) -> tuple[list[str], list[list[str]]]:
    """Header and rows of the first table in a report, skipping ``#`` lines."""
    header: list[str] | None = None
    rows: list[list[str]] = []
    for line in text.splitlines():
        if line.startswith("#"):
            if header is not None:
                break
            continue
        if not line.strip():
            continue
        cells = line.split("\t")
        if header is None:
            header = cells
        else:
            rows.append(cells)
    if header is None:
        raise ValueError("report contains no table")
    return header, rows


def read_column(text: str, name: str) -> list[float | None]:
    header, rows = read_table(text)
    if name not in header:
        raise KeyError(f"unknown indicator {name!r}; columns: {', '.join(header[1:])}")
    i = header.index(name)
    return [float(r[i]) if i < len(r) and r[i] != "" else None for r in rows]


def render_stats(
    name: str, summary: DistributionSummary, hist: dict[float, float], manifest: RunManifest
) -> str:
    out = [manifest.line()]
    out.append(_row(["indicator", "n", "mean", "std", "skewness"] + [f"p{p}" for p in PERCENTILES]))
    out.append(
        _row([name, summary.n, summary.mean, summary.std, summary.skewness] + [summary.percentiles[p] for p in PERCENTILES])
    )
    out.append("# histogram: unit bins [k, k+1) labelled by midpoint\n")
    out.append(_row(["midpoint", "pct_journals"]))
    out += [f"{mid:.1f}\t{pct:.2f}\n" for mid, pct in sorted(hist.items())]
    return "".join(out)


def render_sensitivity(report: SensitivityReport, manifest: RunManifest) -> str:
    out = [manifest.line(), _row(["indicator", "stratum", "n", "mean_diff", "median_diff"])]
    out += [_row([a.indicator, a.stratum, a.n, a.mean, a.median]) for a in report.aggregates]
    names = list(next(iter(report.per_journal.values())).diff) if report.per_journal else []
    out.append("# per-journal DIFF (percent)\n")
    header = ["source_id", "big"]
    for k in names:
        header += [f"{k}_default", f"{k}_variant", f"{k}_diff"]
    out.append(_row(header))
    for sid in sorted(report.per_journal):
        jd = report.per_journal[sid]
        row: list = [sid, jd.big]
        for k in names:
            row += [jd.default[k], jd.variant[k], jd.diff[k]]
        out.append(_row(row))
    return "".join(out)
