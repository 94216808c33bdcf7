"""Junk-email and uninformative-name filters that gate the blocking maps.

Git enforces no policy on the author field, so high-frequency placeholder
emails (john@example.com, root@localhost, ...) and throwaway names would
otherwise glue unrelated authors into one block. The thresholds and
pattern/stop lists here are declared defaults, overridable via config file
or CLI flags.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .corpus import FrequencyTables, normalize_email

DEFAULT_JUNK_EMAIL_PATTERNS = (
    r"@example\.(com|org)$",
    r"@localhost(\.|$)",
    r"^(none|nobody|devnull|unknown|root|admin|test|user|email|noreply|no-reply)@",
    r"^[^@]*$",  # no '@' at all
)

DEFAULT_NAME_STOPLIST = (
    "unknown",
    "test",
    "admin",
    "root",
    "user",
    "administrator",
    "nobody",
    "anonymous",
    "example",
    "name",
    "firstname",
    "lastname",
)


@dataclass
class FilterConfig:
    junk_email_freq_threshold: int = 100
    junk_email_patterns: tuple[str, ...] = DEFAULT_JUNK_EMAIL_PATTERNS
    min_email_len: int = 6
    name_min_token_len: int = 2
    name_stoplist: frozenset[str] = frozenset(DEFAULT_NAME_STOPLIST)
    name_group_max: int = 12
    _compiled: tuple[re.Pattern, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.junk_email_freq_threshold <= 0:
            raise ValueError("junk_email_freq_threshold must be positive")
        if self.min_email_len <= 0 or self.name_min_token_len <= 0 or self.name_group_max <= 0:
            raise ValueError("filter thresholds must be positive")
        if not isinstance(self.name_stoplist, frozenset):
            self.name_stoplist = frozenset(self.name_stoplist)
        try:
            self._compiled = tuple(re.compile(p) for p in self.junk_email_patterns)
        except re.error as exc:
            raise ValueError(f"bad junk_pattern regex: {exc}") from exc


def detect_junk_emails(tables: FrequencyTables, cfg: FilterConfig) -> set[str]:
    """Normalized emails too frequent or pattern-matched to carry identity."""
    junk = {
        email
        for email, count in tables.email_count.items()
        if count >= cfg.junk_email_freq_threshold
    }
    for email in tables.email_count:
        if email not in junk and any(p.search(email) for p in cfg._compiled):
            junk.add(email)
    return junk


def is_valid_email(email: str, junk: set[str], cfg: FilterConfig) -> bool:
    """True if the email is shaped like a real address and not junk."""
    if not email or len(email) < cfg.min_email_len:
        return False
    if email.count("@") != 1:
        return False
    domain = email.rpartition("@")[2]
    if "." not in domain:
        return False
    return normalize_email(email) not in junk


def is_informative_name(first: str, last: str, cfg: FilterConfig) -> bool:
    """True if both normalized name tokens look like real name parts."""
    for token in (first, last):
        if len(token) < cfg.name_min_token_len:
            return False
        if token in cfg.name_stoplist:
            return False
        if not any(ch.isalpha() for ch in token):
            return False
    return True


def parse_config_file(path) -> dict[str, object]:
    """Parse a line-oriented ``key = value`` config file.

    Repeated ``junk_pattern`` / ``name_stop`` keys accumulate into lists;
    every other key keeps its last value (as a string). Blank lines and
    lines starting with '#' are ignored.
    """
    values: dict[str, object] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{line_no}: expected 'key = value'")
            key = key.strip()
            value = value.strip()
            if key in ("junk_pattern", "name_stop"):
                values.setdefault(key, []).append(value)
            else:
                values[key] = value
    return values


def filter_config_from_values(values: dict[str, object]) -> FilterConfig:
    """Build a FilterConfig from parsed config-file values (strings)."""
    kwargs = {}
    for key in (
        "junk_email_freq_threshold",
        "min_email_len",
        "name_min_token_len",
        "name_group_max",
    ):
        if key in values:
            kwargs[key] = int(values[key])
    if "junk_pattern" in values:
        kwargs["junk_email_patterns"] = tuple(values["junk_pattern"])
    if "name_stop" in values:
        kwargs["name_stoplist"] = frozenset(w.casefold() for w in values["name_stop"])
    return FilterConfig(**kwargs)
