"""Compiled full-enumeration loops, one per engine.

Each kernel runs a complete enumeration for a given n and returns
(count, checksum) as uint64.  with_fold toggles the checksum sink: the
counting path skips the fold, the checksum/benchmark paths keep it inside
the loop so the generation work cannot be optimized away.

The fold, applied to every label of every emitted string in order, is

    acc <- (acc XOR (label + position)) * 0x100000001b3   (mod 2^64)

seeded with 0xcbf29ce484222325.  uint64 arithmetic wraps, which is the
intended modulo-2^64 behaviour.

Counts are exact for n <= 25; B_26 no longer fits in 64 bits (and a full
run of that size is out of reach regardless).
"""
import numpy as np
from numba import njit, uint64

FNV_SEED = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3

# Full runs keep the emission counter in a uint64.
FULL_RUN_MAX_N = 25


@njit(cache=True)
def _k_reference(n, with_fold):
    # literal lexicographic successor rule: for the rightmost incrementable
    # position, the prefix maximum is recomputed from scratch
    a = np.zeros(n, np.uint64)
    acc = uint64(0xCBF29CE484222325)
    prime = uint64(0x100000001B3)
    count = uint64(0)
    while True:
        if with_fold:
            for i in range(n):
                acc = (acc ^ (a[i] + uint64(i))) * prime
        count += uint64(1)
        j = n - 1
        while j >= 1:
            m = a[0]
            for i in range(1, j):
                if a[i] > m:
                    m = a[i]
            if a[j] <= m:
                break
            j -= 1
        if j < 1:
            return count, acc
        a[j] += uint64(1)
        for i in range(j + 1, n):
            a[i] = uint64(0)


@njit(cache=True)
def _k_hutchinson(n, with_fold):
    # lexicographic; the limit array b (b[i] = 1 + max of the prefix) is
    # rebuilt in full before every step
    a = np.zeros(n, np.uint64)
    b = np.zeros(n, np.uint64)
    acc = uint64(0xCBF29CE484222325)
    prime = uint64(0x100000001B3)
    count = uint64(0)
    while True:
        if with_fold:
            for i in range(n):
                acc = (acc ^ (a[i] + uint64(i))) * prime
        count += uint64(1)
        m = uint64(0)
        for i in range(1, n):
            if a[i - 1] > m:
                m = a[i - 1]
            b[i] = m + uint64(1)
        j = n - 1
        while j >= 1 and a[j] == b[j]:
            j -= 1
        if j < 1:
            return count, acc
        a[j] += uint64(1)
        for i in range(j + 1, n):
            a[i] = uint64(0)


@njit(cache=True)
def _k_semba(n, with_fold):
    # lexicographic; limits are maintained incrementally, the last position
    # is swept without touching the rest of the string
    a = np.zeros(n, np.uint64)
    b = np.zeros(n, np.uint64)
    for i in range(1, n):
        b[i] = uint64(1)
    acc = uint64(0xCBF29CE484222325)
    prime = uint64(0x100000001B3)
    count = uint64(0)
    while True:
        if with_fold:
            for i in range(n):
                acc = (acc ^ (a[i] + uint64(i))) * prime
        count += uint64(1)
        if n > 1 and a[n - 1] < b[n - 1]:
            a[n - 1] += uint64(1)
            continue
        j = n - 2
        while j >= 1 and a[j] == b[j]:
            j -= 1
        if j < 1:
            return count, acc
        a[j] += uint64(1)
        for i in range(j + 1, n):
            a[i] = uint64(0)
        for i in range(j + 1, n):
            m = b[i - 1]
            if a[i - 1] + uint64(1) > m:
                m = a[i - 1] + uint64(1)
            b[i] = m


@njit(cache=True)
def _k_er(n, with_fold):
    # reverse lexicographic: decrement the rightmost positive label, then
    # refill the suffix with the maximal staircase
    a = np.zeros(n, np.uint64)
    mx = np.zeros(n, np.uint64)  # mx[i] = max(a[0..i])
    for i in range(n):
        a[i] = uint64(i)
        mx[i] = uint64(i)
    acc = uint64(0xCBF29CE484222325)
    prime = uint64(0x100000001B3)
    count = uint64(0)
    while True:
        if with_fold:
            for i in range(n):
                acc = (acc ^ (a[i] + uint64(i))) * prime
        count += uint64(1)
        j = n - 1
        while j >= 1 and a[j] == uint64(0):
            j -= 1
        if j < 1:
            return count, acc
        a[j] -= uint64(1)
        m = mx[j - 1]
        if a[j] > m:
            m = a[j]
        mx[j] = m
        for i in range(j + 1, n):
            m = m + uint64(1)
            a[i] = m
            mx[i] = m


@njit(cache=True)
def _k_djokic(n, with_fold):
    # lexicographic with the leanest step: the last-position limit is cached
    # in a scalar and the suffix refill writes a constant limit
    a = np.zeros(n, np.uint64)
    b = np.zeros(n, np.uint64)
    for i in range(1, n):
        b[i] = uint64(1)
    t = b[n - 1] if n > 1 else uint64(0)
    acc = uint64(0xCBF29CE484222325)
    prime = uint64(0x100000001B3)
    count = uint64(0)
    while True:
        if with_fold:
            for i in range(n):
                acc = (acc ^ (a[i] + uint64(i))) * prime
        count += uint64(1)
        if a[n - 1] < t:
            a[n - 1] += uint64(1)
            continue
        j = n - 2
        while j >= 1 and a[j] == b[j]:
            j -= 1
        if j < 1:
            return count, acc
        a[j] += uint64(1)
        nb = b[j]
        if a[j] == nb:
            nb = nb + uint64(1)
        for i in range(j + 1, n):
            a[i] = uint64(0)
            b[i] = nb
        t = nb


KERNELS = {
    "reference": _k_reference,
    "hutchinson": _k_hutchinson,
    "semba": _k_semba,
    "er": _k_er,
    "djokic": _k_djokic,
}
