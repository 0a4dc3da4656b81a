# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled geometric-product kernel over the 8-coefficient representation.

The sign/slot tables are loaded once at import time from ``_tables`` so the
compiled and pure kernels share a single generated source of truth.
"""

cdef int SLOT[8][8]
cdef double SIGN[8][8]


def load_tables(slot, sign):
    cdef int i, j
    for i in range(8):
        for j in range(8):
            SLOT[i][j] = slot[i][j]
            SIGN[i][j] = sign[i][j]


def gp(const double[::1] a, const double[::1] b, double[::1] out):
    """Geometric product of two length-8 coefficient arrays, written into out."""
    cdef double acc[8]
    cdef int i, j
    cdef double ai, bj
    for i in range(8):
        acc[i] = 0.0
    for i in range(8):
        ai = a[i]
        if ai == 0.0:
            continue
        for j in range(8):
            bj = b[j]
            if bj != 0.0:
                acc[SLOT[i][j]] += SIGN[i][j] * ai * bj
    for i in range(8):
        out[i] = acc[i]
