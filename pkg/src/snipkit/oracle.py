"""Brute-force reference implementation of the indicator set.

Everything here is recomputed by scanning reference lists directly. Nothing
from the index or the indicator module is used apart from the result types,
so a counting bug in either path shows up as a disagreement.
"""

from __future__ import annotations

import statistics

from .corpus import Corpus
from .indicators import DatabaseSummary, JournalIndicators, NoEligibleJournals
from .windows import WindowConfig

PAPER_LABELS = ("article", "review", "proceedings")


def naive_oracle(corpus: Corpus, config: WindowConfig) -> tuple[list[JournalIndicators], DatabaseSummary]:
    eligible = [p for p in corpus.papers if p.doc_type in PAPER_LABELS]
    lookup = {p.paper_id: p for p in eligible}
    year = config.citing_year
    i_lo, i_hi = config.indicator_window.first, config.indicator_window.last
    f_lo, f_hi = config.field_window.first, config.field_window.last
    citing = [p for p in eligible if p.pub_year == year]

    rows = []
    for j in sorted(corpus.source_registry):
        published = [p for p in eligible if p.source_id == j and i_lo <= p.pub_year <= i_hi]
        published_ids = {p.paper_id for p in published}
        n = len(published)
        reviews = len([p for p in published if p.doc_type == "review"])

        cites = self_cites = 0
        for c in citing:
            for ref in c.references:
                if ref.target_paper_id is not None and ref.target_paper_id in published_ids:
                    cites += 1
                    if c.source_id == j:
                        self_cites += 1

        field = []
        for c in citing:
            for ref in c.references:
                t = lookup.get(ref.target_paper_id) if ref.target_paper_id is not None else None
                if t is not None and t.source_id == j and f_lo <= t.pub_year <= f_hi:
                    field.append(c)
                    break

        total = in_db = to_j = 0
        for c in field:
            for ref in c.references:
                t = lookup.get(ref.target_paper_id) if ref.target_paper_id is not None else None
                ref_year = t.pub_year if t is not None else ref.target_year
                if ref_year is None or ref_year < i_lo or ref_year > i_hi:
                    continue
                total += 1
                if t is not None:
                    in_db += 1
                    if t.source_id == j:
                        to_j += 1

        m = len(field)
        rows.append(
            dict(
                source_id=j,
                n_papers=n,
                pct_reviews=100.0 * reviews / n if n > 0 else None,
                cites=cites,
                rip=cites / n if n > 0 else None,
                m=m,
                r=total / m if m > 0 else None,
                f=in_db / total if m > 0 and total > 0 else None,
                r_db=in_db / m if m > 0 else None,
                pct_self_cites=100.0 * self_cites / cites if cites > 0 else None,
                pct_field_refs_to_journal=100.0 * to_j / total if total > 0 else None,
            )
        )

    dcps = [row["r_db"] for row in rows if row["r_db"] is not None]
    if len(dcps) == 0:
        raise NoEligibleJournals("no journal with a defined database citation potential")
    m_db = statistics.median(dcps)

    out = []
    for row in rows:
        rdcp = row["r_db"] / m_db if row["r_db"] is not None and m_db > 0 else None
        s = row["rip"] / rdcp if row["rip"] is not None and rdcp else None
        out.append(JournalIndicators(**row, rdcp=rdcp, snip=s))
    return out, DatabaseSummary(len(dcps), m_db)
