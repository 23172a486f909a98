"""Seeded synthetic corpora.

Journals are grouped into fields. Papers cite uniformly at random among the
records of their own field published 1-10 years earlier, so every paper has
the same chance of being cited and fields differ only in how many references
their papers carry. A fixed share of references goes to literature outside
the database and carries a year but no resolvable id.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, PaperRecord, ReferenceRecord

# Recent literature is cited more often than old literature.
DEFAULT_AGE_WEIGHTS = (0.14, 0.16, 0.15, 0.12, 0.10, 0.09, 0.07, 0.07, 0.05, 0.05)


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int = 0
    n_fields: int = 5
    journals_per_field: int = 10
    first_year: int = 1996
    last_year: int = 2007
    papers_per_journal_year: float = 2.0
    refs_per_paper_mean: tuple[float, ...] = (10.0,)
    external_fraction: float = 0.20
    review_fraction: float = 0.05
    proceedings_fraction: float = 0.10
    ineligible_fraction: float = 0.0
    cross_field_fraction: float = 0.0
    journal_size_shape: float | None = 4.0  # gamma shape of per-journal size multipliers; None = equal sizes
    age_weights: tuple[float, ...] = DEFAULT_AGE_WEIGHTS

    def __post_init__(self):
        if self.n_fields < 1 or self.journals_per_field < 1:
            raise ValueError("need at least one field and one journal per field")
        if self.last_year < self.first_year:
            raise ValueError("empty year range")
        if self.papers_per_journal_year <= 0:
            raise ValueError("papers_per_journal_year must be positive")
        if len(self.refs_per_paper_mean) not in (1, self.n_fields):
            raise ValueError("refs_per_paper_mean needs one value or one per field")
        if any(m <= 0 for m in self.refs_per_paper_mean):
            raise ValueError("reference means must be positive")
        for name in (
            "external_fraction",
            "review_fraction",
            "proceedings_fraction",
            "ineligible_fraction",
            "cross_field_fraction",
        ):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.review_fraction + self.proceedings_fraction > 1.0:
            raise ValueError("review_fraction + proceedings_fraction exceeds 1")
        if not self.age_weights or any(w < 0 for w in self.age_weights) or sum(self.age_weights) <= 0:
            raise ValueError("age_weights must be non-negative with positive sum")
        if self.journal_size_shape is not None and self.journal_size_shape <= 0:
            raise ValueError("journal_size_shape must be positive")

    def refs_mean(self, field: int) -> float:
        means = self.refs_per_paper_mean
        return means[0] if len(means) == 1 else means[field]


def journal_id(field: int, journal: int) -> str:
    return f"F{field:02d}J{journal:03d}"


def generate_with_ledger(spec: GeneratorSpec) -> tuple[Corpus, Counter]:
    """Generate a corpus and the count of eligible papers per (source, year)."""
    rng = np.random.default_rng(spec.seed)
    journals = [(f, journal_id(f, k)) for f in range(spec.n_fields) for k in range(spec.journals_per_field)]
    if spec.journal_size_shape is None:
        size = {j: 1.0 for _, j in journals}
    else:
        draws = rng.gamma(spec.journal_size_shape, 1.0 / spec.journal_size_shape, len(journals))
        size = {j: float(d) for (_, j), d in zip(journals, draws)}

    ages = np.arange(1, len(spec.age_weights) + 1)
    weights = np.asarray(spec.age_weights, dtype=float)
    # pool[(field, year)] -> (id, source) of every record, eligible or not, in that field-year
    pool: dict[tuple[int, int], list[tuple[str, str]]] = {}
    papers: list[PaperRecord] = []
    ledger: Counter = Counter()

    for year in range(spec.first_year, spec.last_year + 1):
        w = np.where(year - ages >= spec.first_year, weights, 0.0)
        cdf = None
        if w.sum() > 0:
            cdf = np.cumsum(w) / w.sum()
            cdf[np.flatnonzero(w)[-1] :] = 1.0
        new_records: list[tuple[int, tuple[str, str]]] = []
        for field, jid in journals:
            n = int(rng.poisson(spec.papers_per_journal_year * size[jid]))
            for i in range(n):
                pid = f"{jid}-{year}-{i:04d}"
                doc_type = _draw_doc_type(rng, spec)
                refs: tuple[ReferenceRecord, ...] = ()
                if cdf is not None:
                    refs = _draw_references(rng, spec, field, year, ages, cdf, pool)
                papers.append(PaperRecord(pid, jid, year, doc_type, refs))
                new_records.append((field, (pid, jid)))
                if doc_type in ("article", "review", "proceedings"):
                    ledger[(jid, year)] += 1
        for field, rec in new_records:
            pool.setdefault((field, year), []).append(rec)

    return Corpus(tuple(papers), frozenset(j for _, j in journals)), ledger


def generate_corpus(spec: GeneratorSpec) -> Corpus:
    return generate_with_ledger(spec)[0]


def _draw_doc_type(rng: np.random.Generator, spec: GeneratorSpec) -> str:
    if rng.random() < spec.ineligible_fraction:
        return "editorial"
    u = rng.random()
    if u < spec.review_fraction:
        return "review"
    if u < spec.review_fraction + spec.proceedings_fraction:
        return "proceedings"
    return "article"


def _draw_references(rng, spec: GeneratorSpec, field: int, year: int, ages, cdf, pool) -> tuple[ReferenceRecord, ...]:
    n = int(rng.poisson(spec.refs_mean(field)))
    if n == 0:
        return ()
    idx = np.searchsorted(cdf, rng.random(n), side="right")
    years = year - ages[idx]
    external = rng.random(n) < spec.external_fraction
    cross = rng.random(n) < spec.cross_field_fraction if spec.n_fields > 1 else np.zeros(n, dtype=bool)
    shift = rng.integers(1, max(spec.n_fields, 2), size=n)
    pick = rng.random(n)
    refs = []
    for k in range(n):
        target_year = int(years[k])
        if external[k]:
            refs.append(ReferenceRecord(target_year=target_year))
            continue
        target_field = (field + int(shift[k])) % spec.n_fields if cross[k] else field
        candidates = pool.get((target_field, target_year))
        if not candidates:
            # nothing was published there, so the reference points outside the database
            refs.append(ReferenceRecord(target_year=target_year))
            continue
        pid, src = candidates[int(pick[k] * len(candidates))]
        refs.append(ReferenceRecord(pid, src, target_year))
    return tuple(refs)
