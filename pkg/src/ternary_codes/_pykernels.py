"""Numpy implementations of the inner loops, used when the extension is absent."""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 20  # max matrix cells materialised at once


def _term(table: np.ndarray, l: int, step: int, n: int) -> np.ndarray:
    if l < 0:
        return np.zeros(n, dtype=np.int8)
    return table[(l + np.arange(n, dtype=np.int64) * step) % n]


def _sums(ta, la, u, tb, lbs, v, p):
    """Yield (row slice, matrix of trace values) chunk by chunk."""
    n = len(ta)
    lbs = np.asarray(lbs, dtype=np.int64)
    a = _term(ta, la, u, n).astype(np.int16)
    steps = np.arange(n, dtype=np.int64) * v
    rows = max(1, _CHUNK // max(n, 1))
    for start in range(0, len(lbs), rows):
        block = lbs[start:start + rows]
        b = tb[(block[:, None] + steps[None, :]) % n].astype(np.int16)
        b[block < 0] = 0
        yield slice(start, start + len(block)), (a[None, :] + b) % p


def trace_counts(ta, la, u, tb, lbs, v, p):
    out = np.zeros((len(lbs), p), dtype=np.int64)
    for sl, s in _sums(ta, la, u, tb, lbs, v, p):
        for t in range(p):
            out[sl, t] = np.count_nonzero(s == t, axis=1)
    return out


def weight_histogram(ta, la, u, tb, lbs, v, p):
    n = len(ta)
    hist = np.zeros(n + 1, dtype=np.int64)
    for _, s in _sums(ta, la, u, tb, lbs, v, p):
        hist += np.bincount(np.count_nonzero(s, axis=1), minlength=n + 1)
    return hist


def pair_sums(zech, u, v):
    zech = np.asarray(zech, dtype=np.int64)
    n = len(zech)
    half = n // 2
    i, j = np.triu_indices(n, k=1)
    i = np.repeat(i.astype(np.int64), 2)
    j = np.repeat(j.astype(np.int64), 2)
    c = np.tile(np.array([1, 2], dtype=np.int64), len(i) // 2)

    def log_sum(e):
        x = (i * e) % n
        y = (j * e + np.where(c == 2, half, 0)) % n
        z = zech[(y - x) % n]
        return np.where(z < 0, -1, (x + z) % n)

    return i, j, c, log_sum(u), log_sum(v)
