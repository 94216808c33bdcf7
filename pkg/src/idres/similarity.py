"""Jaro-Winkler string similarity and the per-pair feature vector."""

from __future__ import annotations

from .corpus import ParsedAuthor
from .kernels import jaro, jaro_winkler

__all__ = ["jaro", "jaro_winkler", "pair_features", "FEATURE_NAMES", "FEATURE_COUNT"]

# Feature layout for one ID pair. The last two compare first name against
# last name, catching authors who write their names in the opposite order.
FEATURE_NAMES = (
    "first_first",
    "last_last",
    "full_full",
    "username_username",
    "email_email",
    "first_last",
    "last_first",
)
FEATURE_COUNT = len(FEATURE_NAMES)


def _score(a: str, b: str) -> float:
    # Two blank fields carry no identity evidence: score 0, not 1.
    if not a and not b:
        return 0.0
    return jaro_winkler(a, b)


def pair_features(p: ParsedAuthor, q: ParsedAuthor) -> tuple[float, ...]:
    """Seven Jaro-Winkler scores in [0,1] for one author-ID pair."""
    return (
        _score(p.first_name, q.first_name),
        _score(p.last_name, q.last_name),
        _score(p.full_name, q.full_name),
        _score(p.username, q.username),
        _score(p.email, q.email),
        _score(p.first_name, q.last_name),
        _score(p.last_name, q.first_name),
    )
