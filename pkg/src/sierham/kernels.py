"""Array kernels for bulk edge generation and digit comparisons.

Every kernel exists twice: a numba-compiled driver and a pure-numpy twin
producing the same rows (possibly in a different order; graph constructors
canonicalize). The compiled path is used when numba imports cleanly and the
environment variable SIERHAM_NO_NUMBA is not set to "1".

Vertices are encoded as integers: code(v) = sum(v_i * m**(n-i)), digit v_1
most significant, so integer order equals lexicographic order on tuples.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency here
    HAS_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


USE_NUMBA = HAS_NUMBA and os.environ.get("SIERHAM_NO_NUMBA", "") != "1"


@njit(cache=True)
def _sierpinski_edges_nb(n: int, m: int) -> np.ndarray:
    total = (m ** (n + 1) - m) // 2
    out = np.empty((total, 2), np.int64)
    k = 0
    for h in range(1, n + 1):
        span = m ** (n - h)  # weight of digit h
        rep = (span - 1) // (m - 1)  # code of a length-(n-h) run of 1s
        for p in range(m ** (h - 1)):
            base = p * span * m
            for i in range(m - 1):
                for j in range(i + 1, m):
                    out[k, 0] = base + i * span + j * rep
                    out[k, 1] = base + j * span + i * rep
                    k += 1
    return out


def _sierpinski_edges_np(n: int, m: int) -> np.ndarray:
    chunks = []
    for h in range(1, n + 1):
        span = m ** (n - h)
        rep = (span - 1) // (m - 1)
        bases = np.arange(m ** (h - 1), dtype=np.int64) * (span * m)
        for i in range(m - 1):
            for j in range(i + 1, m):
                u = bases + (i * span + j * rep)
                v = bases + (j * span + i * rep)
                chunks.append(np.stack((u, v), axis=1))
    return np.concatenate(chunks, axis=0)


@njit(cache=True)
def _hamming_edges_nb(n: int, m: int) -> np.ndarray:
    total = n * (m - 1) * m**n // 2
    out = np.empty((total, 2), np.int64)
    k = 0
    for pos in range(n):  # 0 = least significant digit
        w = m**pos
        for a in range(m ** (n - pos - 1)):
            for b in range(w):
                base = a * w * m + b
                for i in range(m - 1):
                    for j in range(i + 1, m):
                        out[k, 0] = base + i * w
                        out[k, 1] = base + j * w
                        k += 1
    return out


def _hamming_edges_np(n: int, m: int) -> np.ndarray:
    chunks = []
    for pos in range(n):
        w = m**pos
        t = np.arange(m ** (n - 1), dtype=np.int64)
        bases = (t // w) * (w * m) + (t % w)
        for i in range(m - 1):
            for j in range(i + 1, m):
                chunks.append(np.stack((bases + i * w, bases + j * w), axis=1))
    return np.concatenate(chunks, axis=0)


@njit(cache=True)
def _single_twist_edges_nb(n: int, m: int) -> np.ndarray:
    total = (m ** (n + 1) - m) // 2
    out = np.empty((total, 2), np.int64)
    k = 0
    for h in range(1, n + 1):
        span = m ** (n - h)
        rep = (span - 1) // (m - 1)
        for p in range(m ** (h - 1)):
            base = p * span * m
            for i in range(m - 1):
                for j in range(i + 1, m):
                    tail = ((i + j) % m) * rep
                    out[k, 0] = base + i * span + tail
                    out[k, 1] = base + j * span + tail
                    k += 1
    return out


def _single_twist_edges_np(n: int, m: int) -> np.ndarray:
    chunks = []
    for h in range(1, n + 1):
        span = m ** (n - h)
        rep = (span - 1) // (m - 1)
        bases = np.arange(m ** (h - 1), dtype=np.int64) * (span * m)
        for i in range(m - 1):
            for j in range(i + 1, m):
                tail = ((i + j) % m) * rep
                u = bases + (i * span + tail)
                v = bases + (j * span + tail)
                chunks.append(np.stack((u, v), axis=1))
    return np.concatenate(chunks, axis=0)


@njit(cache=True)
def _digit_diff_counts_nb(a: np.ndarray, b: np.ndarray, n: int, m: int) -> np.ndarray:
    out = np.empty(a.shape[0], np.int64)
    for t in range(a.shape[0]):
        x = a[t]
        y = b[t]
        d = 0
        for _ in range(n):
            if x % m != y % m:
                d += 1
            x //= m
            y //= m
        out[t] = d
    return out


def _digit_diff_counts_np(a: np.ndarray, b: np.ndarray, n: int, m: int) -> np.ndarray:
    out = np.zeros(a.shape[0], np.int64)
    x = a.copy()
    y = b.copy()
    for _ in range(n):
        out += (x % m) != (y % m)
        x //= m
        y //= m
    return out


def sierpinski_edges(n: int, m: int) -> np.ndarray:
    """Edge codes of S(n,m), one row per edge, smaller endpoint first."""
    f = _sierpinski_edges_nb if USE_NUMBA else _sierpinski_edges_np
    return f(n, m)


def hamming_edges(n: int, m: int) -> np.ndarray:
    f = _hamming_edges_nb if USE_NUMBA else _hamming_edges_np
    return f(n, m)


def single_twist_edges(n: int, m: int) -> np.ndarray:
    f = _single_twist_edges_nb if USE_NUMBA else _single_twist_edges_np
    return f(n, m)


def digit_diff_counts(a: np.ndarray, b: np.ndarray, n: int, m: int) -> np.ndarray:
    """Number of differing base-m digits between paired codes a[t], b[t]."""
    a = np.ascontiguousarray(a, np.int64)
    b = np.ascontiguousarray(b, np.int64)
    f = _digit_diff_counts_nb if USE_NUMBA else _digit_diff_counts_np
    return f(a, b, n, m)
