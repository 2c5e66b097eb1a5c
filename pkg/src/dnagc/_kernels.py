"""Compiled inner loops for lexicode construction.

Words are int64 with the packed layout of ``words.DnaWord``. ``mode`` selects
the cross constraint: 0 none, 1 reverse-complement, 2 reverse.
"""
import numpy as np
from numba import njit

MODE_NONE, MODE_RC, MODE_R = 0, 1, 2

_M1 = np.int64(0x5555555555555555)
_M2 = np.int64(0x3333333333333333)
_M4 = np.int64(0x0F0F0F0F0F0F0F0F)
_H01 = np.int64(0x0101010101010101)


@njit(cache=True, inline="always")
def popcount(x):
    x = x - ((x >> 1) & _M1)
    x = (x & _M2) + ((x >> 2) & _M2)
    x = (x + (x >> 4)) & _M4
    return ((x * _H01) >> 56) & 0xFF


@njit(cache=True, inline="always")
def lane_distance(a, b):
    z = a ^ b
    return popcount((z | (z >> 1)) & _M1)


@njit(cache=True)
def image(x, n, mode):
    out = np.int64(0)
    y = x
    for _ in range(n):
        out = (out << 2) | (y & 3)
        y >>= 2
    if mode == MODE_RC:
        out ^= (np.int64(1) << (2 * n)) - 1
    return out


@njit(cache=True)
def gc_of(x):
    return popcount((x ^ (x >> 1)) & _M1)


@njit(cache=True)
def candidates_single(n, rank0, table, w, capacity):
    total = np.int64(1) << (2 * n)
    out = np.empty(capacity, dtype=np.int64)
    m = 0
    for k in range(total):
        r = (rank0 + k) % total
        word = np.int64(0)
        for p in range(n):
            word |= table[(r >> (2 * p)) & 3] << (2 * p)
        if gc_of(word) == w:
            out[m] = word
            m += 1
    return out[:m]


@njit(cache=True)
def candidates_factored(n, r1, r2, w, capacity):
    size = np.int64(1) << n
    out = np.empty(capacity, dtype=np.int64)
    # (x bit, y bit) -> code: 00 T, 01 A, 10 C, 11 G
    table = np.array([3, 0, 1, 2], dtype=np.int64)
    m = 0
    for i in range(size):
        x = (i + r1) % size
        if popcount(x) != w:
            continue
        for j in range(size):
            y = (j + r2) % size
            word = np.int64(0)
            for p in range(n):
                word |= table[(((x >> p) & 1) << 1) | ((y >> p) & 1)] << (2 * p)
            out[m] = word
            m += 1
    return out[:m]


@njit(cache=True)
def greedy_scan(cands, n, d, mode):
    acc = np.empty(cands.shape[0], dtype=np.int64)
    img = np.empty(cands.shape[0], dtype=np.int64)
    count = 0
    for c in cands:
        if mode != MODE_NONE and lane_distance(c, image(c, n, mode)) < d:
            continue
        ok = True
        # newest first: lexicographic neighbours conflict soonest
        for k in range(count - 1, -1, -1):
            if lane_distance(c, acc[k]) < d:
                ok = False
                break
            if mode != MODE_NONE and lane_distance(c, img[k]) < d:
                ok = False
                break
        if ok:
            acc[count] = c
            if mode != MODE_NONE:
                img[count] = image(c, n, mode)
            count += 1
    return acc[:count].copy()


@njit(cache=True)
def ball_masks(n, radius):
    """XOR masks of every displacement with at most ``radius`` changed lanes."""
    total = np.int64(1) << (2 * n)
    count = 0
    for e in range(total):
        if popcount((e | (e >> 1)) & _M1) <= radius:
            count += 1
    out = np.empty(count, dtype=np.int64)
    m = 0
    for e in range(total):
        if popcount((e | (e >> 1)) & _M1) <= radius:
            out[m] = e
            m += 1
    return out


@njit(cache=True)
def greedy_mark(cands, n, d, mode, masks):
    blocked = np.zeros(np.int64(1) << (2 * n), dtype=np.uint8)
    acc = np.empty(cands.shape[0], dtype=np.int64)
    count = 0
    for c in cands:
        if blocked[c]:
            continue
        if mode != MODE_NONE:
            im = image(c, n, mode)
            if lane_distance(c, im) < d:
                continue
        acc[count] = c
        count += 1
        for e in masks:
            blocked[c ^ e] = 1
        if mode != MODE_NONE:
            for e in masks:
                blocked[im ^ e] = 1
    return acc[:count].copy()
