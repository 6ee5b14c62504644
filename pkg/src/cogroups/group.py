"""Permutation groups backed by a deterministic stabilizer chain.

The chain is built by plain Schreier-generator sifting with no
randomisation: base points are the smallest moved points, orbits are
scanned in discovery order, generators in list order.  Two runs on the
same generator list produce the same chain, the same element
enumeration order, and therefore the same reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import backend
from .errors import CapExceeded, DegreeMismatch
from .perm import DTYPE, Perm, identity


@dataclass(frozen=True)
class ElementCap:
    """Upper bound for operations that enumerate all group elements."""

    max_elements: int = 200_000

    def __post_init__(self):
        if self.max_elements < 1:
            raise ValueError("cap must be positive")


DEFAULT_CAP = ElementCap()


def _cap_limit(cap):
    if cap is None:
        return DEFAULT_CAP.max_elements
    if isinstance(cap, ElementCap):
        return cap.max_elements
    return int(cap)


class _Level:
    __slots__ = ("base", "gens", "orbit", "transversal", "inv_transversal", "done")

    def __init__(self, base, degree):
        self.base = base
        self.gens = []
        self.orbit = [base]
        ident = np.arange(degree, dtype=DTYPE)
        self.transversal = {base: ident}
        self.inv_transversal = {base: ident}
        self.done = set()


def _invert(arr):
    inv = np.empty(arr.size, dtype=DTYPE)
    inv[arr] = np.arange(arr.size, dtype=DTYPE)
    return inv


class _Chain:
    """Stabilizer chain certifying order and membership."""

    def __init__(self, gen_arrays, degree):
        self.degree = degree
        self.levels = []
        self._ident = np.arange(degree, dtype=DTYPE)
        for arr in gen_arrays:
            residue, level = self._sift(arr, 0)
            if residue is not None:
                self._insert(residue, level)

    def _sift(self, arr, start):
        """Reduce ``arr`` through the chain; (residue, level) or (None, -1)."""
        cur = arr
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            c = int(cur[lv.base])
            if c == lv.base:
                continue
            uinv = lv.inv_transversal.get(c)
            if uinv is None:
                return cur, i
            cur = uinv[cur]
        if (cur == self._ident).all():
            return None, -1
        return cur, len(self.levels)

    def _insert(self, arr, level):
        if level == len(self.levels):
            base = int(np.nonzero(arr != self._ident)[0][0])
            self.levels.append(_Level(base, self.degree))
        for i in range(level + 1):
            self.levels[i].gens.append(arr)
        for i in range(level, -1, -1):
            self._close_level(i)

    def _close_level(self, i):
        """Extend orbit/transversal and sift all unseen Schreier generators."""
        lv = self.levels[i]
        while True:
            progressed = False
            p_pos = 0
            while p_pos < len(lv.orbit):
                p = lv.orbit[p_pos]
                g_pos = 0
                while g_pos < len(lv.gens):
                    pair = (p, g_pos)
                    if pair not in lv.done:
                        lv.done.add(pair)
                        progressed = True
                        s = lv.gens[g_pos]
                        u_p = lv.transversal[p]
                        q = int(s[p])
                        if q not in lv.transversal:
                            t = s[u_p]
                            lv.transversal[q] = t
                            lv.inv_transversal[q] = _invert(t)
                            lv.orbit.append(q)
                        else:
                            schreier = lv.inv_transversal[q][s[u_p]]
                            residue, j = self._sift(schreier, i + 1)
                            if residue is not None:
                                self._insert(residue, j)
                    g_pos += 1
                p_pos += 1
            if not progressed:
                return

    def order(self):
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def contains(self, arr):
        residue, _ = self._sift(arr, 0)
        return residue is None


class PermGroup:
    """Immutable permutation group given by generators plus its chain."""

    __slots__ = ("degree", "generators", "_chain", "_order", "_gen_matrix",
                 "_elements", "_partition")

    def __init__(self, generators):
        gens = tuple(generators)
        if not gens:
            raise ValueError("need at least one generator")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"degree {g.degree} vs {degree}")
        self.degree = degree
        self.generators = gens
        self._chain = _Chain([g.images for g in gens], degree)
        self._order = self._chain.order()
        self._gen_matrix = None
        self._elements = None
        self._partition = None

    @classmethod
    def from_generators(cls, generators):
        return cls(generators)

    def order(self):
        return self._order

    def __len__(self):
        return self._order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self._order})"

    def contains(self, p):
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs {self.degree}")
        return self._chain.contains(p.images)

    def __contains__(self, p):
        return self.contains(p)

    def is_trivial(self):
        return self._order == 1

    def generator_matrix(self):
        """Generators stacked as an int32 matrix, duplicates removed."""
        if self._gen_matrix is None:
            rows = []
            seen = set()
            for g in self.generators:
                if g.key not in seen:
                    seen.add(g.key)
                    rows.append(g.images)
            self._gen_matrix = np.ascontiguousarray(np.stack(rows))
        return self._gen_matrix

    def check_cap(self, cap=None):
        limit = _cap_limit(cap)
        if self._order > limit:
            raise CapExceeded(self._order, limit)

    def element_matrix(self, cap=None):
        """All elements as rows, breadth-first from the identity.

        Generators are applied in listed order, so the enumeration is
        reproducible; the result is cached on the group.
        """
        self.check_cap(cap)
        if self._elements is None:
            gens = self.generator_matrix()
            rows, complete = backend().closure_rows(gens, self._order)
            if not complete or rows.shape[0] != self._order:
                raise RuntimeError(
                    f"closure produced {rows.shape[0]} elements, "
                    f"chain says {self._order}"
                )
            self._elements = rows
        return self._elements

    def elements(self, cap=None):
        return [Perm._wrap(row) for row in self.element_matrix(cap)]

    def orbit(self, point):
        """Closure of {point} under the generators."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} outside degree {self.degree}")
        gens = self.generator_matrix()
        seen = np.zeros(self.degree, dtype=bool)
        seen[point] = True
        queue = [point]
        head = 0
        while head < len(queue):
            p = queue[head]
            head += 1
            for j in range(gens.shape[0]):
                q = int(gens[j, p])
                if not seen[q]:
                    seen[q] = True
                    queue.append(q)
        return set(queue)

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree


def group_from_generators(gens):
    """Build a group; raises on an empty list or mixed degrees."""
    return PermGroup(gens)


def trivial_group(degree):
    return PermGroup([identity(degree)])
