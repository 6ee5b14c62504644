"""Numba-jitted kernel implementations.

Same contracts and bit-identical outputs as ``_kernels_np``; see that
module for the row conventions.  Rows are deduplicated through an
open-addressing hash table (FNV-1a over the image values, linear
probing) instead of sorted void views.
"""

import numpy as np
from numba import njit

NAME = "numba"

_FNV_OFFSET = np.uint64(14695981039346656037)
_FNV_PRIME = np.uint64(1099511628211)


@njit(cache=True)
def _hash_row(row):
    h = _FNV_OFFSET
    for t in range(row.shape[0]):
        h = (h ^ np.uint64(row[t])) * _FNV_PRIME
    return h


@njit(cache=True)
def _table_size(n):
    size = 64
    while size < 4 * (n + 2):
        size <<= 1
    return size


@njit(cache=True)
def _probe(slots, elements, row):
    """Slot holding ``row``'s index, or the empty slot where it belongs."""
    mask = np.uint64(slots.shape[0] - 1)
    pos = np.int64(_hash_row(row) & mask)
    d = row.shape[0]
    while True:
        idx = slots[pos]
        if idx < 0:
            return pos, np.int64(-1)
        match = True
        for t in range(d):
            if elements[idx, t] != row[t]:
                match = False
                break
        if match:
            return pos, idx
        pos += 1
        if pos == slots.shape[0]:
            pos = 0


@njit(cache=True)
def closure_rows(gens, cap):
    g, d = gens.shape
    slots = np.full(_table_size(cap), -1, dtype=np.int64)
    elements = np.empty((cap, d), dtype=np.int32)
    for t in range(d):
        elements[0, t] = t
    pos, _ = _probe(slots, elements, elements[0])
    slots[pos] = 0
    count = 1
    head = 0
    scratch = np.empty(d, dtype=np.int32)
    while head < count:
        for j in range(g):
            for t in range(d):
                scratch[t] = gens[j, elements[head, t]]
            pos, idx = _probe(slots, elements, scratch)
            if idx < 0:
                if count >= cap:
                    return elements[:count], False
                for t in range(d):
                    elements[count, t] = scratch[t]
                slots[pos] = count
                count += 1
        head += 1
    return elements[:count], True


@njit(cache=True)
def row_orders(elements):
    n, d = elements.shape
    out = np.empty(n, dtype=np.int64)
    seen = np.empty(d, dtype=np.uint8)
    for i in range(n):
        for t in range(d):
            seen[t] = 0
        order = np.int64(1)
        for s in range(d):
            if seen[s]:
                continue
            seen[s] = 1
            length = np.int64(1)
            j = elements[i, s]
            while j != s:
                seen[j] = 1
                length += 1
                j = elements[i, j]
            # lcm(order, length)
            a, b = order, length
            while b:
                a, b = b, a % b
            order = order // a * length
        out[i] = order
    return out


@njit(cache=True)
def _index_all(elements):
    n = elements.shape[0]
    slots = np.full(_table_size(n), -1, dtype=np.int64)
    for i in range(n):
        pos, idx = _probe(slots, elements, elements[i])
        if idx < 0:
            slots[pos] = i
    return slots


@njit(cache=True)
def conj_partition(elements, gens, gens_inv):
    n, d = elements.shape
    g = gens.shape[0]
    slots = _index_all(elements)
    class_id = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    scratch = np.empty(d, dtype=np.int32)
    next_id = 0
    for i in range(n):
        if class_id[i] >= 0:
            continue
        class_id[i] = next_id
        queue[0] = i
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            for j in range(g):
                for t in range(d):
                    scratch[t] = gens[j, elements[x, gens_inv[j, t]]]
                _, idx = _probe(slots, elements, scratch)
                if class_id[idx] < 0:
                    class_id[idx] = next_id
                    queue[tail] = idx
                    tail += 1
        next_id += 1
    return class_id


@njit(cache=True)
def mul_table(elements):
    n, d = elements.shape
    slots = _index_all(elements)
    table = np.empty((n, n), dtype=np.int32)
    scratch = np.empty(d, dtype=np.int32)
    for i in range(n):
        for j in range(n):
            for t in range(d):
                scratch[t] = elements[j, elements[i, t]]
            _, idx = _probe(slots, elements, scratch)
            table[i, j] = idx
    return table


@njit(cache=True)
def closure_idx(mul, gens_idx, id_idx):
    n = mul.shape[0]
    member = np.zeros(n, dtype=np.bool_)
    member[id_idx] = True
    if gens_idx.shape[0] == 0:
        return member
    queue = np.empty(n, dtype=np.int64)
    queue[0] = id_idx
    head, tail = 0, 1
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(gens_idx.shape[0]):
            y = mul[x, gens_idx[j]]
            if not member[y]:
                member[y] = True
                queue[tail] = y
                tail += 1
    return member
