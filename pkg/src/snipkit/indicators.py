"""Per-journal impact indicators and the database-wide DCP median.

Quantities for journal j in citing year Y:

* ``cites / n_papers`` -- raw impact per paper (RIP): citations given in Y to
  papers j published in the indicator window, divided by their number.
* subject field -- papers published in Y that cite at least one paper of j
  from the (longer) field window.
* ``r`` -- mean number of references per field paper whose cited year lies in
  the indicator window (citation potential).
* ``r_db`` -- the same, counting only references that resolve to papers in the
  database; ``f = r_db / r`` is the database coverage of the field.
* ``rdcp = r_db / median(r_db over journals)`` and ``snip = rip / rdcp``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import asdict, dataclass

from .corpus import Corpus, erase_non_papers
from .index import CitationIndex, build_index, citations_to, papers_of_journal
from .windows import WindowConfig


class UndefinedIndicator(ValueError):
    """An indicator's denominator is zero for this journal."""


class NoEligibleJournals(ValueError):
    """No journal has a defined database citation potential."""


@dataclass(frozen=True)
class SubjectField:
    source_id: str
    citing_papers: frozenset[str]

    @property
    def m(self) -> int:
        return len(self.citing_papers)


@dataclass(frozen=True)
class FieldRefCounts:
    total: int  # windowed references, resolved or not
    in_database: int  # windowed references resolving to a corpus paper
    to_journal: int  # windowed references resolving to a paper of the journal


@dataclass(frozen=True)
class JournalIndicators:
    source_id: str
    n_papers: int
    pct_reviews: float | None
    cites: int
    rip: float | None
    m: int
    r: float | None
    f: float | None
    r_db: float | None
    rdcp: float | None
    snip: float | None
    pct_self_cites: float | None
    pct_field_refs_to_journal: float | None

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DatabaseSummary:
    n_eligible: int
    median_dcp: float


def raw_impact_per_paper(index: CitationIndex, source_id: str, config: WindowConfig) -> float:
    papers = papers_of_journal(index, source_id, config.indicator_window)
    if not papers:
        raise UndefinedIndicator(f"{source_id}: no papers in {config.indicator_window}")
    return citations_to(index, papers, config.citing_year) / len(papers)


def delimit_subject_field(index: CitationIndex, source_id: str, config: WindowConfig) -> SubjectField:
    members: set[str] = set()
    for pid in papers_of_journal(index, source_id, config.field_window):
        for citer in index.citers_of.get(pid, {}):
            if index.papers[citer].pub_year == config.citing_year:
                members.add(citer)
    return SubjectField(source_id, frozenset(members))


def field_ref_counts(index: CitationIndex, field: SubjectField, config: WindowConfig) -> FieldRefCounts:
    window = config.indicator_window
    total = in_db = to_journal = 0
    for pid in field.citing_papers:
        for t in index.refs(pid):
            if t.year not in window:
                continue
            total += t.count
            if t.resolved:
                in_db += t.count
                if t.source == field.source_id:
                    to_journal += t.count
    return FieldRefCounts(total, in_db, to_journal)


def citation_potential(index: CitationIndex, field: SubjectField, config: WindowConfig) -> float:
    if field.m == 0:
        raise UndefinedIndicator(f"{field.source_id}: empty subject field")
    return field_ref_counts(index, field, config).total / field.m


def database_citation_potential(
    index: CitationIndex, field: SubjectField, config: WindowConfig
) -> tuple[float, float | None]:
    """Return ``(r_db, f)``. ``f`` is None when the field cites nothing in the window."""
    if field.m == 0:
        raise UndefinedIndicator(f"{field.source_id}: empty subject field")
    counts = field_ref_counts(index, field, config)
    f = counts.in_database / counts.total if counts.total else None
    return counts.in_database / field.m, f


def median_dcp(values: list[float]) -> float:
    if not values:
        raise NoEligibleJournals("no journal with a defined database citation potential")
    s = sorted(values)
    mid = len(s) // 2
    if len(s) % 2:
        return s[mid]
    return (s[mid - 1] + s[mid]) / 2


def relative_dcp(r_db: float, m_db: float) -> float:
    if not m_db > 0:
        raise ValueError(f"median DCP must be positive, got {m_db}")
    return r_db / m_db


def snip(rip: float | None, rdcp: float | None) -> float | None:
    if rip is None or rdcp is None or rdcp == 0:
        return None
    return rip / rdcp


def self_citation_pct(index: CitationIndex, source_id: str, config: WindowConfig) -> float:
    papers = papers_of_journal(index, source_id, config.indicator_window)
    cites = citations_to(index, papers, config.citing_year)
    if cites == 0:
        raise UndefinedIndicator(f"{source_id}: not cited")
    return 100.0 * citations_to(index, papers, config.citing_year, citing_source=source_id) / cites


def subfield_refs_to_journal_pct(
    index: CitationIndex, field: SubjectField, source_id: str, config: WindowConfig
) -> float:
    if field.source_id != source_id:
        field = SubjectField(source_id, field.citing_papers)
    counts = field_ref_counts(index, field, config)
    if counts.total == 0:
        raise UndefinedIndicator(f"{source_id}: no windowed references in field")
    return 100.0 * counts.to_journal / counts.total


def _pct(num: int, den: int) -> float | None:
    return 100.0 * num / den if den else None


def _scan_citing_year(index: CitationIndex, config: WindowConfig) -> dict[str, list[int]]:
    """One pass over the citing year's papers.

    Returns per cited source: [cites, self_cites, m, total_refs, in_db_refs, refs_to_journal].
    """
    iw, fw = config.indicator_window, config.field_window
    acc: dict[str, list[int]] = defaultdict(lambda: [0, 0, 0, 0, 0, 0])
    for pid in index.by_year.get(config.citing_year, ()):
        own = index.papers[pid].source_id
        total = in_db = 0
        to_source: dict[str, int] = defaultdict(int)
        field_of: set[str] = set()
        for t in index.refs(pid):
            if t.resolved and t.year in fw:
                field_of.add(t.source)
            if t.year in iw:
                total += t.count
                if t.resolved:
                    in_db += t.count
                    to_source[t.source] += t.count
        for src, n in to_source.items():
            a = acc[src]
            a[0] += n
            if src == own:
                a[1] += n
        for src in field_of:
            a = acc[src]
            a[2] += 1
            a[3] += total
            a[4] += in_db
            a[5] += to_source.get(src, 0)
    return acc


def _journal_partial(index: CitationIndex, source_id: str, config: WindowConfig, acc: list[int]) -> dict:
    papers = papers_of_journal(index, source_id, config.indicator_window)
    n = len(papers)
    reviews = sum(1 for pid in papers if index.papers[pid].is_review)
    cites, self_cites, m, total, in_db, to_journal = acc
    return dict(
        source_id=source_id,
        n_papers=n,
        pct_reviews=_pct(reviews, n),
        cites=cites,
        rip=cites / n if n else None,
        m=m,
        r=total / m if m else None,
        f=in_db / total if m and total else None,
        r_db=in_db / m if m else None,
        pct_self_cites=_pct(self_cites, cites),
        pct_field_refs_to_journal=_pct(to_journal, total),
    )


def compute_index(index: CitationIndex, config: WindowConfig) -> tuple[list[JournalIndicators], DatabaseSummary]:
    """Evaluate every registered source against a prebuilt index."""
    acc = _scan_citing_year(index, config)
    empty = [0, 0, 0, 0, 0, 0]
    partial = [_journal_partial(index, s, config, acc.get(s, empty)) for s in sorted(index.sources)]
    dcps = [p["r_db"] for p in partial if p["r_db"] is not None]
    m_db = median_dcp(dcps)
    out = []
    for p in partial:
        rdcp = None
        if p["r_db"] is not None and m_db > 0:
            rdcp = relative_dcp(p["r_db"], m_db)
        out.append(JournalIndicators(**p, rdcp=rdcp, snip=snip(p["rip"], rdcp)))
    return out, DatabaseSummary(len(dcps), m_db)


def compute_all(corpus: Corpus, config: WindowConfig) -> tuple[list[JournalIndicators], DatabaseSummary]:
    """Erase non-papers, index, and compute the indicator set for every source.

    Journals whose denominators vanish carry None in the affected fields.
    Raises NoEligibleJournals when no journal has a non-empty subject field.
    """
    return compute_index(build_index(erase_non_papers(corpus)), config)


def indicators_close(a: JournalIndicators, b: JournalIndicators, tol: float = 1e-9) -> bool:
    """Field-by-field equality, treating None == None and floats within ``tol``."""
    for key, va in a.as_dict().items():
        vb = getattr(b, key)
        if va is None or vb is None:
            if va is not vb:
                return False
        elif isinstance(va, float) or isinstance(vb, float):
            if not math.isclose(va, vb, rel_tol=tol, abs_tol=tol):
                return False
        elif va != vb:
            return False
    return True
