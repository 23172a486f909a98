"""Window-sensitivity runs: default vs. variant configuration, compared by DIFF."""

from __future__ import annotations

import enum
import statistics
from dataclasses import dataclass

from .corpus import Corpus, erase_non_papers
from .index import build_index, papers_of_journal
from .indicators import JournalIndicators, compute_index
from .windows import WindowConfig, YearWindow

BIG_JOURNAL_PAPERS_PER_YEAR = 100
COMPARED = ("rip", "snip")


class Variant(enum.Enum):
    NONE = "none"
    FIELD_WINDOW_SHORT = "field-window-short"
    INDICATOR_WINDOW_SHORT = "indicator-window-short"
    SHIFT_CITING_YEAR = "shift-citing-year"

    def apply(self, config: WindowConfig) -> WindowConfig:
        if self is Variant.NONE:
            return config
        if self is Variant.FIELD_WINDOW_SHORT:
            return WindowConfig(config.citing_year, config.indicator_window, config.indicator_window)
        if self is Variant.INDICATOR_WINDOW_SHORT:
            return WindowConfig(
                config.citing_year, YearWindow.preceding(config.citing_year, 2), config.field_window
            )
        return config.shifted(-1)


def diff(v_default: float | None, v_variant: float | None) -> float | None:
    """Absolute difference in percent of the pair mean. ``diff(0, 0) == 0``."""
    if v_default is None or v_variant is None:
        return None
    if v_default == v_variant:
        return 0.0
    mean = (v_variant + v_default) / 2
    if mean == 0:
        raise ValueError("DIFF undefined for values summing to zero")
    return abs(100.0 * (v_variant - v_default) / mean)


@dataclass(frozen=True)
class JournalDiff:
    source_id: str
    big: bool
    default: dict[str, float | None]
    variant: dict[str, float | None]
    diff: dict[str, float | None]


@dataclass(frozen=True)
class DiffAggregate:
    indicator: str
    stratum: str  # "all" or "big"
    n: int
    mean: float | None
    median: float | None


@dataclass(frozen=True)
class SensitivityReport:
    default_config: WindowConfig
    variant_config: WindowConfig
    per_journal: dict[str, JournalDiff]
    aggregates: list[DiffAggregate]

    def aggregate(self, indicator: str, stratum: str) -> DiffAggregate:
        for a in self.aggregates:
            if a.indicator == indicator and a.stratum == stratum:
                return a
        raise KeyError((indicator, stratum))


def is_big_journal(index, source_id: str, window: YearWindow, threshold: int = BIG_JOURNAL_PAPERS_PER_YEAR) -> bool:
    return all(len(papers_of_journal(index, source_id, YearWindow(y, y))) >= threshold for y in window)


def run_sensitivity(
    corpus: Corpus,
    default_config: WindowConfig,
    variant: Variant | WindowConfig,
    indicators: tuple[str, ...] = COMPARED,
) -> SensitivityReport:
    """Compute indicators under both configurations and summarize per-journal DIFF.

    ``variant`` is one of the named variants or any custom WindowConfig.
    Journals with a null value in either run drop out of that indicator's
    aggregates. "big" journals have at least 100 papers in every year of the
    default indicator window.
    """
    variant_config = variant.apply(default_config) if isinstance(variant, Variant) else variant
    index = build_index(erase_non_papers(corpus))
    base, _ = compute_index(index, default_config)
    other, _ = compute_index(index, variant_config)
    other_by_id: dict[str, JournalIndicators] = {j.source_id: j for j in other}

    per_journal: dict[str, JournalDiff] = {}
    for j in base:
        v = other_by_id[j.source_id]
        d_vals = {k: getattr(j, k) for k in indicators}
        v_vals = {k: getattr(v, k) for k in indicators}
        per_journal[j.source_id] = JournalDiff(
            j.source_id,
            is_big_journal(index, j.source_id, default_config.indicator_window),
            d_vals,
            v_vals,
            {k: diff(d_vals[k], v_vals[k]) for k in indicators},
        )

    aggregates = []
    for k in indicators:
        for stratum in ("all", "big"):
            vals = [
                jd.diff[k]
                for jd in per_journal.values()
                if jd.diff[k] is not None and (stratum == "all" or jd.big)
            ]
            aggregates.append(
                DiffAggregate(
                    k,
                    stratum,
                    len(vals),
                    statistics.fmean(vals) if vals else None,
                    statistics.median(vals) if vals else None,
                )
            )
    return SensitivityReport(default_config, variant_config, per_journal, aggregates)
