"""Frozen citation index over an erased corpus."""

from __future__ import annotations

import gc
from collections import Counter, defaultdict
from contextlib import contextmanager
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import NamedTuple

from .corpus import Corpus, PaperRecord
from .windows import YearWindow


class RefTally(NamedTuple):
    """References of one paper grouped by where they point.

    ``target`` is the resolved paper id, or None for a database-external
    reference. ``year`` and ``source`` come from the resolved record when
    there is one, otherwise from the reference itself.
    """

    target: str | None
    year: int
    source: str | None
    count: int

    @property
    def resolved(self) -> bool:
        return self.target is not None


@dataclass(frozen=True)
class CitationIndex:
    papers: Mapping[str, PaperRecord]
    by_source_year: Mapping[tuple[str, int], frozenset[str]]
    by_year: Mapping[int, tuple[str, ...]]
    citers_of: Mapping[str, Mapping[str, int]]
    refs_windowed: Mapping[str, tuple[RefTally, ...]]
    sources: frozenset[str]

    def refs(self, paper_id: str) -> tuple[RefTally, ...]:
        return self.refs_windowed.get(paper_id, ())


@contextmanager
def _gc_paused():
    # bulk allocation of small tuples triggers many useless collections
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def build_index(corpus: Corpus) -> CitationIndex:
    """Index a corpus that has already been through ``erase_non_papers``.

    Resolution happens here, by paper id only. References whose target does
    not resolve and that carry no year are dropped from the tallies: they can
    never fall inside a cited-year window.
    """
    with _gc_paused():
        return _build_index(corpus)


def _build_index(corpus: Corpus) -> CitationIndex:
    papers = {p.paper_id: p for p in corpus.papers}
    by_source_year: dict[tuple[str, int], set[str]] = defaultdict(set)
    by_year: dict[int, list[str]] = defaultdict(list)
    citers_of: dict[str, Counter] = defaultdict(Counter)
    refs_windowed: dict[str, tuple[RefTally, ...]] = {}

    for p in corpus.papers:
        by_source_year[(p.source_id, p.pub_year)].add(p.paper_id)
        by_year[p.pub_year].append(p.paper_id)
        tally: Counter = Counter()
        for ref in p.references:
            target = papers.get(ref.target_paper_id) if ref.target_paper_id is not None else None
            if target is not None:
                citers_of[target.paper_id][p.paper_id] += 1
                tally[(target.paper_id, target.pub_year, target.source_id)] += 1
            elif ref.target_year is not None:
                tally[(None, ref.target_year, ref.target_source_id)] += 1
        refs_windowed[p.paper_id] = tuple(RefTally(t, y, s, n) for (t, y, s), n in tally.items())

    return CitationIndex(
        papers=MappingProxyType(papers),
        by_source_year=MappingProxyType({k: frozenset(v) for k, v in by_source_year.items()}),
        by_year=MappingProxyType({k: tuple(sorted(v)) for k, v in by_year.items()}),
        citers_of=MappingProxyType({k: MappingProxyType(dict(v)) for k, v in citers_of.items()}),
        refs_windowed=MappingProxyType(refs_windowed),
        sources=corpus.source_registry,
    )


def papers_of_journal(index: CitationIndex, source_id: str, window: YearWindow) -> set[str]:
    out: set[str] = set()
    for year in window:
        out |= index.by_source_year.get((source_id, year), frozenset())
    return out


def citations_to(
    index: CitationIndex,
    paper_ids: Iterable[str],
    citing_year: int,
    citing_source: str | None = None,
) -> int:
    """Citations given in ``citing_year`` to ``paper_ids``, counting duplicates.

    With ``citing_source`` only citations from papers of that source count.
    """
    total = 0
    for pid in paper_ids:
        for citer, mult in index.citers_of.get(pid, {}).items():
            cp = index.papers[citer]
            if cp.pub_year == citing_year and (citing_source is None or cp.source_id == citing_source):
                total += mult
    return total
