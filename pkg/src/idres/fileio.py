"""Shared file helpers: gzip sniffing, deterministic writers, atomic replace.

All output files are written to a temp file in the target directory and
renamed into place, so re-running a stage never leaves a half-written
artifact. Gzip members are written with ``mtime=0`` and no embedded
filename, which makes outputs byte-identical across runs.
"""

from __future__ import annotations

import gzip
import io
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import BinaryIO, Iterator, TextIO

GZIP_MAGIC = b"\x1f\x8b"


def is_gzip_file(path: str | os.PathLike) -> bool:
    """True if the file starts with the gzip magic bytes."""
    with open(path, "rb") as f:
        return f.read(2) == GZIP_MAGIC


def open_bytes_reader(path: str | os.PathLike) -> BinaryIO:
    """Open a file for binary reading, transparently decompressing gzip."""
    if is_gzip_file(path):
        return gzip.open(path, "rb")
    return open(path, "rb")


def open_text_reader(path: str | os.PathLike) -> TextIO:
    """Open a (possibly gzipped) text file as UTF-8, replacing bad bytes."""
    return io.TextIOWrapper(open_bytes_reader(path), encoding="utf-8", errors="replace")


@contextmanager
def atomic_text_writer(
    path: str | os.PathLike, use_gzip: bool | None = None
) -> Iterator[TextIO]:
    """Yield a UTF-8 text stream that atomically replaces `path` on success.

    `use_gzip` defaults to True when the path ends in ".gz".
    """
    target = Path(path)
    if use_gzip is None:
        use_gzip = target.suffix == ".gz"
    fd, tmp_name = tempfile.mkstemp(
        dir=target.parent if str(target.parent) else ".",
        prefix=target.name + ".",
        suffix=".tmp",
    )
    try:
        with open(fd, "wb") as raw:
            if use_gzip:
                # mtime=0 and empty filename keep the gzip header fixed.
                with gzip.GzipFile(filename="", mode="wb", fileobj=raw, mtime=0) as gz:
                    with io.TextIOWrapper(gz, encoding="utf-8", newline="\n") as text:
                        yield text
            else:
                with io.TextIOWrapper(raw, encoding="utf-8", newline="\n") as text:
                    yield text
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def sanitize_field(value: str) -> str:
    """Replace separator and newline bytes so a field fits one ';'-row."""
    return value.replace(";", " ").replace("\n", " ").replace("\r", " ")
