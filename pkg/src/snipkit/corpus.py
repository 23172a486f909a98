"""Corpus data model, line-delimited record format, and document-type erasure.

Each input line is one JSON object::

    {"id": "p1", "src": "J1", "yr": 2006, "ty": "article", "refs": [{"id": "p0"}, {"yr": 2004}]}

Only articles, reviews and proceedings papers count as papers. Everything
else is removed by :func:`erase_non_papers` before any counting happens.
"""

from __future__ import annotations

import enum
import hashlib
import json
from collections.abc import Iterable
from dataclasses import dataclass, field

MIN_YEAR = 1900
MAX_YEAR = 2100


class CorpusError(ValueError):
    """Raised for malformed or inconsistent corpus input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DocType(enum.Enum):
    ARTICLE = "article"
    REVIEW = "review"
    PROCEEDINGS = "proceedings"
    OTHER = "other"

    @classmethod
    def from_label(cls, label: str) -> DocType:
        for kind in (cls.ARTICLE, cls.REVIEW, cls.PROCEEDINGS):
            if label == kind.value:
                return kind
        return cls.OTHER

    @property
    def eligible(self) -> bool:
        return self is not DocType.OTHER


@dataclass(frozen=True)
class ReferenceRecord:
    """One entry of a reference list. Any field may be missing, but not all."""

    target_paper_id: str | None = None
    target_source_id: str | None = None
    target_year: int | None = None

    def to_json(self) -> dict:
        out: dict = {}
        if self.target_paper_id is not None:
            out["id"] = self.target_paper_id
        if self.target_source_id is not None:
            out["src"] = self.target_source_id
        if self.target_year is not None:
            out["yr"] = self.target_year
        return out


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    source_id: str
    pub_year: int
    doc_type: str  # raw label, kept so serialization round-trips
    references: tuple[ReferenceRecord, ...] = ()

    @property
    def kind(self) -> DocType:
        return DocType.from_label(self.doc_type)

    @property
    def eligible(self) -> bool:
        return self.kind.eligible

    @property
    def is_review(self) -> bool:
        return self.kind is DocType.REVIEW

    def to_json(self) -> dict:
        return {
            "id": self.paper_id,
            "src": self.source_id,
            "yr": self.pub_year,
            "ty": self.doc_type,
            "refs": [r.to_json() for r in self.references],
        }

    def to_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class Corpus:
    papers: tuple[PaperRecord, ...] = ()
    source_registry: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        seen: set[str] = set()
        for p in self.papers:
            if p.paper_id in seen:
                raise CorpusError(f"duplicate paper id {p.paper_id!r}")
            seen.add(p.paper_id)
            if p.source_id not in self.source_registry:
                raise CorpusError(f"source {p.source_id!r} of paper {p.paper_id!r} is not registered")

    def __len__(self) -> int:
        return len(self.papers)

    def by_id(self) -> dict[str, PaperRecord]:
        return {p.paper_id: p for p in self.papers}

    def digest(self) -> str:
        """SHA-256 over the canonical, id-sorted serialization (line order does not matter)."""
        h = hashlib.sha256()
        for p in sorted(self.papers, key=lambda p: p.paper_id):
            h.update(p.to_line().encode("utf-8"))
            h.update(b"\n")
        for s in sorted(self.source_registry):
            h.update(b"\x00" + s.encode("utf-8"))
        return h.hexdigest()


def _parse_reference(obj, lineno: int) -> ReferenceRecord:
    if not isinstance(obj, dict):
        raise CorpusError("reference must be an object", lineno)
    unknown = set(obj) - {"id", "src", "yr"}
    if unknown:
        raise CorpusError(f"unknown reference keys {sorted(unknown)}", lineno)
    rid, src, yr = obj.get("id"), obj.get("src"), obj.get("yr")
    if rid is None and src is None and yr is None:
        raise CorpusError("reference has none of id, src, yr", lineno)
    if rid is not None and (not isinstance(rid, str) or not rid):
        raise CorpusError("reference id must be a non-empty string", lineno)
    if src is not None and (not isinstance(src, str) or not src):
        raise CorpusError("reference src must be a non-empty string", lineno)
    if yr is not None and (not isinstance(yr, int) or isinstance(yr, bool)):
        raise CorpusError("reference yr must be an integer", lineno)
    return ReferenceRecord(rid, src, yr)


def parse_record(line: str, lineno: int = 0, year_range: tuple[int, int] = (MIN_YEAR, MAX_YEAR)) -> PaperRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"invalid JSON ({exc.msg})", lineno) from None
    if not isinstance(obj, dict):
        raise CorpusError("record must be a JSON object", lineno)
    missing = [k for k in ("id", "src", "yr", "ty", "refs") if k not in obj]
    if missing:
        raise CorpusError(f"missing fields {missing}", lineno)
    pid, src, yr, ty, refs = obj["id"], obj["src"], obj["yr"], obj["ty"], obj["refs"]
    if not isinstance(pid, str) or not pid:
        raise CorpusError("id must be a non-empty string", lineno)
    if not isinstance(src, str) or not src:
        raise CorpusError("src must be a non-empty string", lineno)
    if not isinstance(yr, int) or isinstance(yr, bool):
        raise CorpusError("yr must be an integer", lineno)
    lo, hi = year_range
    if not lo <= yr <= hi:
        raise CorpusError(f"yr {yr} outside {lo}-{hi}", lineno)
    if not isinstance(ty, str) or not ty:
        raise CorpusError("ty must be a non-empty string", lineno)
    if not isinstance(refs, list):
        raise CorpusError("refs must be an array", lineno)
    return PaperRecord(pid, src, yr, ty, tuple(_parse_reference(r, lineno) for r in refs))


def parse_corpus(
    lines: Iterable[str],
    registry: Iterable[str] | None = None,
    year_range: tuple[int, int] = (MIN_YEAR, MAX_YEAR),
) -> Corpus:
    """Parse and validate a line-delimited corpus.

    Blank lines are skipped. When ``registry`` is None the registry is the set
    of sources that publish at least one record.
    """
    papers: list[PaperRecord] = []
    line_of: dict[str, int] = {}
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        rec = parse_record(line, lineno, year_range)
        if rec.paper_id in line_of:
            raise CorpusError(
                f"duplicate paper id {rec.paper_id!r} (first seen on line {line_of[rec.paper_id]})", lineno
            )
        line_of[rec.paper_id] = lineno
        papers.append(rec)

    by_id = {p.paper_id: p for p in papers}
    for p in papers:
        for ref in p.references:
            target = by_id.get(ref.target_paper_id) if ref.target_paper_id else None
            if target is None:
                continue
            if ref.target_source_id is not None and ref.target_source_id != target.source_id:
                raise CorpusError(
                    f"reference to {target.paper_id!r} gives src {ref.target_source_id!r}, "
                    f"record says {target.source_id!r}",
                    line_of[p.paper_id],
                )
            if ref.target_year is not None and ref.target_year != target.pub_year:
                raise CorpusError(
                    f"reference to {target.paper_id!r} gives yr {ref.target_year}, record says {target.pub_year}",
                    line_of[p.paper_id],
                )

    if registry is None:
        reg = frozenset(p.source_id for p in papers)
    else:
        reg = frozenset(s.strip() for s in registry if s.strip())
        for p in papers:
            if p.source_id not in reg:
                raise CorpusError(f"source {p.source_id!r} not in registry", line_of[p.paper_id])
    return Corpus(tuple(papers), reg)


def read_corpus(path, registry_path=None, year_range: tuple[int, int] = (MIN_YEAR, MAX_YEAR)) -> Corpus:
    registry = None
    if registry_path is not None:
        with open(registry_path, encoding="utf-8") as fh:
            registry = fh.read().splitlines()
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh, registry, year_range)


def serialize_corpus(corpus: Corpus) -> str:
    return "".join(p.to_line() + "\n" for p in corpus.papers)


def write_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_corpus(corpus))


def erase_non_papers(corpus: Corpus) -> Corpus:
    """Drop every record that is not an article, review or proceedings paper.

    Reference lists are left as they are; a reference pointing at an erased
    record simply stops resolving once the index is built.
    """
    kept = tuple(p for p in corpus.papers if p.eligible)
    if len(kept) == len(corpus.papers):
        return corpus
    return Corpus(kept, corpus.source_registry)
