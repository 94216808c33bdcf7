"""Ingest raw author-ID lines and build name/email frequency tables.

An author ID is the commit-author string ``first-name last-name<email>``
as recorded by git. Nothing about that format is enforced by git itself, so
parsing has to be total: any line within the size bound yields a record,
with empty fields where the structure is missing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .fileio import open_bytes_reader

log = logging.getLogger(__name__)

DEFAULT_MAX_RECORD_BYTES = 10_000


@dataclass(frozen=True)
class RawRecord:
    """One line of the input file, newline stripped, decoded with replacement."""

    line_no: int  # 1-based
    raw: str


@dataclass(frozen=True)
class ParsedAuthor:
    """Structured view of one author-ID string.

    `id` is always the original line. `username` and `domain` are only set
    when `email` has exactly one '@' with nonempty sides, in which case
    ``username + "@" + domain == email``.
    """

    id: str
    full_name: str = ""
    first_name: str = ""
    last_name: str = ""
    email: str = ""
    username: str = ""
    domain: str = ""


@dataclass
class FrequencyTables:
    """Corpus-level counts keyed by normalized name / email."""

    first_name_count: dict[str, int] = field(default_factory=dict)
    last_name_count: dict[str, int] = field(default_factory=dict)
    email_count: dict[str, int] = field(default_factory=dict)


def normalize_name(token: str) -> str:
    """Case-fold and trim surrounding non-alphanumerics (no diacritic folding)."""
    token = token.casefold()
    start = 0
    end = len(token)
    while start < end and not token[start].isalnum():
        start += 1
    while end > start and not token[end - 1].isalnum():
        end -= 1
    return token[start:end]


def normalize_email(email: str) -> str:
    return email.lower()


def parse_author_id(raw: str) -> ParsedAuthor:
    """Parse one author-ID string; never raises on in-bound input.

    The email is taken strictly between the last '<' and the last '>' after
    it; junk name text may itself contain '<', so taking the last pair is
    robust against that. A line with no complete '<...>' is all name.
    """
    lt = raw.rfind("<")
    gt = raw.rfind(">")
    if lt >= 0 and gt > lt:
        email = raw[lt + 1 : gt].strip()
        name_part = raw[:lt].strip()
    else:
        email = ""
        name_part = raw.strip()

    tokens = name_part.split()
    first = tokens[0] if tokens else ""
    last = tokens[-1] if len(tokens) >= 2 else ""

    username = domain = ""
    if email.count("@") == 1:
        local, _, dom = email.partition("@")
        if local and dom:
            username, domain = local, dom

    return ParsedAuthor(
        id=raw,
        full_name=name_part,
        first_name=first,
        last_name=last,
        email=email,
        username=username,
        domain=domain,
    )


def read_raw_records(
    path, max_record_bytes: int = DEFAULT_MAX_RECORD_BYTES
) -> tuple[list[RawRecord], int]:
    """Read one record per line, deduplicating exact byte-equal lines.

    Returns the records in file order plus the number of skipped lines
    (empty, or longer than `max_record_bytes`). Plain and gzipped files are
    both accepted (sniffed by magic bytes).
    """
    records: list[RawRecord] = []
    seen: set[bytes] = set()
    skipped = 0
    with open_bytes_reader(path) as fh:
        for line_no, bline in enumerate(fh, start=1):
            bline = bline.rstrip(b"\r\n")
            if not bline:
                skipped += 1
                continue
            if len(bline) > max_record_bytes:
                skipped += 1
                log.debug("line %d skipped: %d bytes exceeds limit", line_no, len(bline))
                continue
            if bline in seen:
                continue
            seen.add(bline)
            records.append(RawRecord(line_no, bline.decode("utf-8", errors="replace")))
    return records, skipped


def ingest_corpus(
    path, max_record_bytes: int = DEFAULT_MAX_RECORD_BYTES
) -> tuple[list[ParsedAuthor], int]:
    """Ingest and parse a corpus file; returns (records, skip_count)."""
    raw_records, skipped = read_raw_records(path, max_record_bytes)
    return [parse_author_id(r.raw) for r in raw_records], skipped


def build_frequency_tables(records: Iterable[ParsedAuthor]) -> FrequencyTables:
    """Count normalized first/last names and distinct author IDs per email.

    Name counts include every record whose name field is nonempty (keyed by
    the normalized form, which may collapse to ""), so the totals match the
    record counts exactly. Email counts are per distinct author ID.
    """
    tables = FrequencyTables()
    ids_seen_per_email: dict[str, set[str]] = {}
    for rec in records:
        if rec.first_name:
            key = normalize_name(rec.first_name)
            tables.first_name_count[key] = tables.first_name_count.get(key, 0) + 1
        if rec.last_name:
            key = normalize_name(rec.last_name)
            tables.last_name_count[key] = tables.last_name_count.get(key, 0) + 1
        if rec.email:
            ids_seen_per_email.setdefault(normalize_email(rec.email), set()).add(rec.id)
    tables.email_count = {email: len(ids) for email, ids in ids_seen_per_email.items()}
    return tables
