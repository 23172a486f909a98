"""Source-normalized journal impact (SNIP) indicators from citation corpora."""

__version__ = "0.1.0"

from .corpus import (  # noqa: E402
    Corpus,
    CorpusError,
    DocType,
    PaperRecord,
    ReferenceRecord,
    erase_non_papers,
    parse_corpus,
    read_corpus,
    serialize_corpus,
)
from .index import CitationIndex, build_index, citations_to, papers_of_journal  # noqa: E402
from .indicators import (  # noqa: E402
    DatabaseSummary,
    JournalIndicators,
    NoEligibleJournals,
    SubjectField,
    UndefinedIndicator,
    citation_potential,
    compute_all,
    database_citation_potential,
    delimit_subject_field,
    median_dcp,
    raw_impact_per_paper,
    relative_dcp,
    self_citation_pct,
    snip,
    subfield_refs_to_journal_pct,
)
from .windows import WindowConfig, YearWindow  # noqa: E402

__all__ = [
    "CitationIndex",
    "Corpus",
    "CorpusError",
    "DatabaseSummary",
    "DocType",
    "JournalIndicators",
    "NoEligibleJournals",
    "PaperRecord",
    "ReferenceRecord",
    "SubjectField",
    "UndefinedIndicator",
    "WindowConfig",
    "YearWindow",
    "build_index",
    "citation_potential",
    "citations_to",
    "compute_all",
    "database_citation_potential",
    "delimit_subject_field",
    "erase_non_papers",
    "median_dcp",
    "papers_of_journal",
    "parse_corpus",
    "raw_impact_per_paper",
    "read_corpus",
    "relative_dcp",
    "self_citation_pct",
    "serialize_corpus",
    "snip",
    "subfield_refs_to_journal_pct",
]
