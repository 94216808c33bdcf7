"""Build the three author-ID maps, close them transitively, emit blocks.

Each map proposes groups of record indices that plausibly co-refer:

* email map: IDs sharing the exact same valid email,
* name map: IDs sharing the exact same uncommon, informative (first, last),
* handle map: IDs tied to the same GitHub handle by an external file.

Union-find over all groups yields the blocks. All-pairs comparison over the
whole corpus is quadratic and infeasible at scale; within small blocks it
is cheap, which is the entire point of this stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import FrequencyTables, ParsedAuthor, normalize_email, normalize_name
from .fileio import atomic_text_writer, open_text_reader, sanitize_field
from .filters import FilterConfig, is_informative_name, is_valid_email

DEFAULT_MAX_BLOCK_SIZE = 1024


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


@dataclass(frozen=True)
class Block:
    """One connected component of the map graph; members are record indices."""

    block_id: int
    members: tuple[int, ...]

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1


@dataclass(frozen=True)
class HandleMapEntry:
    handle: str
    author_id: str


def build_email_map(
    records: Sequence[ParsedAuthor], junk: set[str], cfg: FilterConfig
) -> list[list[int]]:
    """Groups of record indices sharing the same valid normalized email."""
    by_email: dict[str, list[int]] = {}
    for i, rec in enumerate(records):
        if is_valid_email(rec.email, junk, cfg):
            by_email.setdefault(normalize_email(rec.email), []).append(i)
    groups = [members for members in by_email.values() if len(members) >= 2]
    groups.sort(key=lambda g: g[0])
    return groups


def build_name_map(
    records: Sequence[ParsedAuthor], tables: FrequencyTables, cfg: FilterConfig
) -> list[list[int]]:
    """Groups sharing the same informative (first, last) name.

    Groups larger than `cfg.name_group_max` are dropped outright: a name
    shared that widely (think "John Smith") says nothing about identity.
    """
    by_name: dict[tuple[str, str], list[int]] = {}
    for i, rec in enumerate(records):
        first = normalize_name(rec.first_name)
        last = normalize_name(rec.last_name)
        if is_informative_name(first, last, cfg):
            by_name.setdefault((first, last), []).append(i)
    groups = [
        members
        for members in by_name.values()
        if 2 <= len(members) <= cfg.name_group_max
    ]
    groups.sort(key=lambda g: g[0])
    return groups


def build_handle_map(
    entries: Iterable[HandleMapEntry], records: Sequence[ParsedAuthor]
) -> tuple[list[list[int]], int]:
    """Groups of records sharing a GitHub handle, plus the unknown-ID count.

    Entries whose author_id does not exactly match any record are ignored
    and counted.
    """
    index_of = {rec.id: i for i, rec in enumerate(records)}
    by_handle: dict[str, set[int]] = {}
    ignored = 0
    for entry in entries:
        idx = index_of.get(entry.author_id)
        if idx is None:
            ignored += 1
            continue
        by_handle.setdefault(entry.handle, set()).add(idx)
    groups = [sorted(members) for members in by_handle.values() if len(members) >= 2]
    groups.sort()
    return groups, ignored


def read_handle_map(path) -> list[HandleMapEntry]:
    """Read `handle;author_id` lines (plain or gzip); blank lines skipped."""
    entries = []
    with open_text_reader(path) as fh:
        for line in fh:
            line = line.rstrip("\r\n")
            if not line:
                continue
            handle, _, author_id = line.partition(";")
            if handle:
                entries.append(HandleMapEntry(handle, author_id))
    return entries


def union_find_closure(n: int, edge_groups: Iterable[Sequence[int]]) -> UnionFind:
    """Union-find after merging each group (treated as a clique) of indices."""
    uf = UnionFind(n)
    for group in edge_groups:
        for idx in group:
            if not 0 <= idx < n:
                raise ValueError(f"group index {idx} out of range 0..{n - 1}")
        anchor = group[0]
        for idx in group[1:]:
            uf.union(anchor, idx)
    return uf


def form_blocks(records: Sequence[ParsedAuthor], uf: UnionFind) -> list[Block]:
    """One block per component, numbered by smallest member ID string.

    Singletons are retained (flagged via `Block.is_singleton`) so the blocks
    always partition the record set.
    """
    components: dict[int, list[int]] = {}
    for i in range(len(records)):
        components.setdefault(uf.find(i), []).append(i)
    ordered = sorted(
        components.values(), key=lambda members: min(records[i].id for i in members)
    )
    return [
        Block(block_id=bid, members=tuple(sorted(members)))
        for bid, members in enumerate(ordered)
    ]


def block_pair_count(blocks: Iterable[Block]) -> int:
    """Total within-block comparisons: sum of C(|b|, 2)."""
    return sum(len(b.members) * (len(b.members) - 1) // 2 for b in blocks)


def write_blocks_file(
    blocks: Iterable[Block],
    records: Sequence[ParsedAuthor],
    tables: FrequencyTables,
    path,
) -> None:
    """Write the gzipped blocks artifact, one line per (block, member).

    Line format: `block_id;first_name_freq;last_name_freq;full_name;email;
    author_id`, sorted by (block_id, author_id). Fields are sanitized so the
    file stays strictly six columns.
    """
    rows = []
    for block in blocks:
        for i in block.members:
            rec = records[i]
            ffreq = (
                tables.first_name_count.get(normalize_name(rec.first_name), 0)
                if rec.first_name
                else 0
            )
            lfreq = (
                tables.last_name_count.get(normalize_name(rec.last_name), 0)
                if rec.last_name
                else 0
            )
            rows.append((block.block_id, rec.id, ffreq, lfreq, rec.full_name, rec.email))
    rows.sort(key=lambda row: (row[0], row[1]))
    with atomic_text_writer(path, use_gzip=True) as out:
        for block_id, author_id, ffreq, lfreq, full_name, email in rows:
            out.write(
                f"{block_id};{ffreq};{lfreq};{sanitize_field(full_name)};"
                f"{sanitize_field(email)};{sanitize_field(author_id)}\n"
            )


def read_blocks_file(path) -> list[tuple[int, str]]:
    """Read (block_id, author_id) pairs back from a blocks file."""
    out = []
    with open_text_reader(path) as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            parts = line.split(";")
            if len(parts) != 6:
                raise ValueError(f"{path}:{line_no}: expected 6 fields, got {len(parts)}")
            out.append((int(parts[0]), parts[5]))
    return out
