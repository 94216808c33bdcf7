# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels for the hot loops: Jaro/Jaro-Winkler and forest walks.

Semantics are contractually identical to idres._kernels_py; the arithmetic
is written in the same order so results match bit-for-bit. Strings are
compared as Unicode code points.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.string cimport memset


cdef double _jaro_core(Py_UCS4* sa, Py_ssize_t la, Py_UCS4* sb, Py_ssize_t lb,
                       unsigned char* a_match, unsigned char* b_match):
    cdef Py_ssize_t window, i, j, start, end, k
    cdef Py_ssize_t m = 0, half = 0
    cdef Py_UCS4 ca
    cdef double t

    window = (la if la > lb else lb) // 2 - 1
    if window < 0:
        window = 0

    memset(a_match, 0, la)
    memset(b_match, 0, lb)

    for i in range(la):
        start = i - window
        if start < 0:
            start = 0
        end = i + window + 1
        if end > lb:
            end = lb
        ca = sa[i]
        for j in range(start, end):
            if not b_match[j] and ca == sb[j]:
                a_match[i] = 1
                b_match[j] = 1
                m += 1
                break
    if m == 0:
        return 0.0

    k = 0
    for i in range(la):
        if a_match[i]:
            while not b_match[k]:
                k += 1
            if sa[i] != sb[k]:
                half += 1
            k += 1
    t = half / 2.0
    return (m / <double>la + m / <double>lb + (m - t) / <double>m) / 3.0


cdef double _jaro_str(unicode a, unicode b) except? -2.0:
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i
    cdef Py_UCS4 *buf
    cdef unsigned char *flags
    cdef double result

    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0

    buf = <Py_UCS4*> PyMem_Malloc((la + lb) * sizeof(Py_UCS4))
    flags = <unsigned char*> PyMem_Malloc(la + lb)
    if buf == NULL or flags == NULL:
        PyMem_Free(buf)
        PyMem_Free(flags)
        raise MemoryError()
    try:
        for i in range(la):
            buf[i] = a[i]
        for i in range(lb):
            buf[la + i] = b[i]
        result = _jaro_core(buf, la, buf + la, lb, flags, flags + la)
    finally:
        PyMem_Free(buf)
        PyMem_Free(flags)
    return result


def jaro(unicode a not None, unicode b not None):
    """Jaro similarity over Unicode code points.

    Match window is floor(max(|a|,|b|)/2) - 1, clamped to >= 0. Both empty
    compares as 1.0, exactly one empty as 0.0.
    """
    return _jaro_str(a, b)


def jaro_winkler(unicode a not None, unicode b not None):
    """Jaro boosted by shared prefix (cap 4, scale 0.1), after case folding."""
    a = a.casefold()
    b = b.casefold()
    cdef double j = _jaro_str(a, b)
    cdef Py_ssize_t cap = min(4, len(a), len(b))
    cdef Py_ssize_t prefix = 0
    while prefix < cap and a[prefix] == b[prefix]:
        prefix += 1
    return j + prefix * 0.1 * (1.0 - j)


def forest_mean(int[:] feature, double[:] threshold, int[:] left, int[:] right,
                int[:] roots, double[:] values):
    """Mean leaf value over a flattened forest.

    Nodes are parallel arrays; `feature[i] < 0` marks a leaf whose value is
    stored in `threshold[i]`. Routing goes left iff the looked-up feature
    value is strictly below the node threshold.
    """
    cdef double total = 0.0
    cdef Py_ssize_t k, idx
    cdef int f
    for k in range(roots.shape[0]):
        idx = roots[k]
        f = feature[idx]
        while f >= 0:
            if values[f] < threshold[idx]:
                idx = left[idx]
            else:
                idx = right[idx]
            f = feature[idx]
        total += threshold[idx]
    return total / roots.shape[0]
