"""Pure-numpy kernel implementations.

Fallback path for environments without numba (or with
``COGROUPS_BACKEND=numpy``).  Must stay output-identical to
``_kernels_numba``: the test suite asserts equality on shared
workloads.

Row conventions: an element is an int32 image row; ``compose(p, q)``
(p first) is the row ``q[p]``.
"""

import math

import numpy as np

NAME = "numpy"


def _row_keys(rows):
    """View each row as one opaque void scalar for sorting/searching."""
    rows = np.ascontiguousarray(rows)
    dt = np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))
    return rows.view(dt).ravel()


class _RowIndex:
    """Sorted-key lookup from image rows to their position in a matrix."""

    def __init__(self, rows):
        self.keys = _row_keys(rows)
        self.order = np.argsort(self.keys, kind="stable")
        self.sorted_keys = self.keys[self.order]

    def lookup(self, rows):
        pos = np.searchsorted(self.sorted_keys, _row_keys(rows))
        return self.order[pos]


def closure_rows(gens, cap):
    """Breadth-first closure of the generators, starting at the identity.

    Discovery order is fixed: level by level, each level's elements in
    order, generators applied in listed order.  Returns ``(elements,
    complete)``; ``complete`` is False when the closure passed ``cap``
    elements (the partial result is then meaningless to callers).
    """
    g, d = gens.shape
    ident = np.arange(d, dtype=np.int32)[None, :]
    chunks = [ident]
    seen = np.sort(_row_keys(ident))
    count = 1
    frontier = ident
    while frontier.shape[0]:
        batch = np.stack([gens[j][frontier] for j in range(g)], axis=1)
        batch = np.ascontiguousarray(batch.reshape(-1, d))
        keys = _row_keys(batch)
        uniq, first = np.unique(keys, return_index=True)
        pos = np.minimum(np.searchsorted(seen, uniq), seen.size - 1)
        fresh = seen[pos] != uniq
        order = np.sort(first[fresh])
        new_rows = batch[order]
        if new_rows.shape[0]:
            count += new_rows.shape[0]
            if count > cap:
                return np.concatenate(chunks, axis=0), False
            chunks.append(new_rows)
            seen = np.sort(np.concatenate([seen, _row_keys(new_rows)]))
        frontier = new_rows
    return np.concatenate(chunks, axis=0), True


def row_orders(elements):
    """Order (lcm of cycle lengths) of every row."""
    n, d = elements.shape
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        row = elements[i]
        seen = bytearray(d)
        order = 1
        for s in range(d):
            if seen[s]:
                continue
            seen[s] = 1
            length = 1
            j = row[s]
            while j != s:
                seen[j] = 1
                length += 1
                j = row[j]
            order = math.lcm(order, int(length))
        out[i] = order
    return out


def conj_partition(elements, gens, gens_inv):
    """Partition rows into conjugation orbits under the generators.

    Class ids are assigned in ascending order of each class's first
    element, so id order equals discovery order.
    """
    n, d = elements.shape
    index = _RowIndex(elements)
    class_id = np.full(n, -1, dtype=np.int64)
    next_id = 0
    for i in range(n):
        if class_id[i] >= 0:
            continue
        class_id[i] = next_id
        frontier = np.array([i], dtype=np.int64)
        while frontier.size:
            block = elements[frontier]
            found = []
            for j in range(gens.shape[0]):
                rows = gens[j][block[:, gens_inv[j]]]
                idx = index.lookup(rows)
                fresh = np.unique(idx[class_id[idx] < 0])
                if fresh.size:
                    class_id[fresh] = next_id
                    found.append(fresh)
            frontier = np.concatenate(found) if found else np.empty(0, np.int64)
        next_id += 1
    return class_id


def mul_table(elements):
    """Full Cayley table: table[i, j] = index of elements[i] * elements[j]."""
    n, d = elements.shape
    index = _RowIndex(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        # rows[j] = elements[j][elements[i]] = compose(e_i, e_j)
        rows = elements[:, elements[i]]
        table[i] = index.lookup(rows).astype(np.int32)
    return table


def closure_idx(mul, gens_idx, id_idx):
    """Membership mask of the subgroup generated by ``gens_idx``."""
    n = mul.shape[0]
    member = np.zeros(n, dtype=bool)
    member[id_idx] = True
    frontier = np.array([id_idx], dtype=np.int64)
    gens_idx = np.asarray(gens_idx, dtype=np.int64)
    if gens_idx.size == 0:
        return member
    while frontier.size:
        prod = np.unique(mul[np.ix_(frontier, gens_idx)])
        fresh = prod[~member[prod]]
        member[fresh] = True
        frontier = fresh
    return member
