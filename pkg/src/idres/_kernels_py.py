"""Pure-Python kernels, the fallback when idres._kernels is not compiled.

The two implementations must agree bit-for-bit: every arithmetic expression
here is written in the same order as its compiled twin so both produce
identical IEEE-754 results.
"""

from __future__ import annotations


def jaro(a: str, b: str) -> float:
    """Jaro similarity over Unicode code points.

    Match window is floor(max(|a|,|b|)/2) - 1, clamped to >= 0. Both empty
    compares as 1.0, exactly one empty as 0.0.
    """
    la = len(a)
    lb = len(b)
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0

    window = max(la, lb) // 2 - 1
    if window < 0:
        window = 0

    a_match = [False] * la
    b_match = [False] * lb
    m = 0
    for i in range(la):
        start = i - window
        if start < 0:
            start = 0
        end = i + window + 1
        if end > lb:
            end = lb
        ca = a[i]
        for j in range(start, end):
            if not b_match[j] and ca == b[j]:
                a_match[i] = True
                b_match[j] = True
                m += 1
                break
    if m == 0:
        return 0.0

    half = 0
    k = 0
    for i in range(la):
        if a_match[i]:
            while not b_match[k]:
                k += 1
            if a[i] != b[k]:
                half += 1
            k += 1
    t = half / 2.0
    return (m / la + m / lb + (m - t) / m) / 3.0


def jaro_winkler(a: str, b: str) -> float:
    """Jaro boosted by shared prefix (cap 4, scale 0.1), after case folding."""
    a = a.casefold()
    b = b.casefold()
    j = jaro(a, b)
    cap = min(4, len(a), len(b))
    prefix = 0
    while prefix < cap and a[prefix] == b[prefix]:
        prefix += 1
    return j + prefix * 0.1 * (1.0 - j)


def forest_mean(feature, threshold, left, right, roots, values) -> float:
    """Mean leaf value over a flattened forest.

    Nodes are parallel arrays; `feature[i] < 0` marks a leaf whose value is
    stored in `threshold[i]`. Routing goes left iff the looked-up feature
    value is strictly below the node threshold.
    """
    total = 0.0
    for idx in roots:
        f = feature[idx]
        while f >= 0:
            if values[f] < threshold[idx]:
                idx = left[idx]
            else:
                idx = right[idx]
            f = feature[idx]
        total += threshold[idx]
    return total / len(roots)
