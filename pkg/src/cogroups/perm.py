"""Permutation arithmetic on the points 0..d-1.

A permutation is stored as its image array: ``p`` maps ``i`` to
``p.images[i]``.  The composition convention is fixed left-to-right for
the whole package: ``compose(p, q)`` maps ``i`` to ``q(p(i))``, i.e. the
left factor acts first.  Reports render cycles 1-based; everything
internal is 0-based.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .errors import DegreeMismatch

DTYPE = np.int32


class Perm:
    """An immutable permutation of 0..degree-1."""

    __slots__ = ("images", "_key")

    def __init__(self, images):
        arr = np.ascontiguousarray(images, dtype=DTYPE)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("permutation needs a nonempty 1-d image array")
        seen = np.zeros(arr.size, dtype=bool)
        if arr.min() < 0 or arr.max() >= arr.size:
            raise ValueError("image out of range")
        seen[arr] = True
        if not seen.all():
            raise ValueError("not a bijection (duplicate image)")
        arr.setflags(write=False)
        self.images = arr
        self._key = arr.tobytes()

    @classmethod
    def _wrap(cls, arr):
        """Wrap a trusted image array without re-validating."""
        self = object.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=DTYPE)
        arr.setflags(write=False)
        self.images = arr
        self._key = arr.tobytes()
        return self

    @property
    def degree(self):
        return self.images.size

    @property
    def key(self):
        """Canonical bytes key; equal iff the permutations are equal."""
        return self._key

    def __call__(self, point):
        return int(self.images[point])

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other):
        """Left-to-right product: self acts first."""
        return compose(self, other)

    def __repr__(self):
        return f"Perm({format_cycles(self)!r})"

    def is_identity(self):
        return bool((self.images == np.arange(self.degree, dtype=DTYPE)).all())

    def inverse(self):
        return inverse(self)

    def order(self):
        return element_order(self)

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each starting at its minimal point, 0-based."""
        out = []
        seen = np.zeros(self.degree, dtype=bool)
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = int(self.images[start])
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = int(self.images[j])
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out


def identity(degree):
    return Perm._wrap(np.arange(degree, dtype=DTYPE))


def compose(p, q):
    """Product applying ``p`` first: result maps i to q(p(i))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degree {p.degree} vs {q.degree}")
    return Perm._wrap(q.images[p.images])


def inverse(p):
    inv = np.empty(p.degree, dtype=DTYPE)
    inv[p.images] = np.arange(p.degree, dtype=DTYPE)
    return Perm._wrap(inv)


def conjugate(x, g):
    """g^-1 * x * g in left-to-right order (apply g^-1, then x, then g)."""
    if x.degree != g.degree:
        raise DegreeMismatch(f"degree {x.degree} vs {g.degree}")
    ginv = np.empty(g.degree, dtype=DTYPE)
    ginv[g.images] = np.arange(g.degree, dtype=DTYPE)
    return Perm._wrap(g.images[x.images[ginv]])


def element_order(p):
    """Least n >= 1 with p^n = identity: the lcm of the cycle lengths."""
    order = 1
    seen = np.zeros(p.degree, dtype=bool)
    for start in range(p.degree):
        if seen[start]:
            continue
        length = 1
        seen[start] = True
        j = int(p.images[start])
        while j != start:
            seen[j] = True
            length += 1
            j = int(p.images[j])
        order = math.lcm(order, length)
    return order


def from_cycles(cycles, degree):
    """Build a permutation from 0-based disjoint cycles."""
    arr = np.arange(degree, dtype=DTYPE)
    touched = set()
    for cyc in cycles:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            if not (0 <= a < degree):
                raise ValueError(f"point {a} outside 0..{degree - 1}")
            if a in touched:
                raise ValueError(f"point {a} repeated across cycles")
            touched.add(a)
            arr[a] = b
    return Perm(arr)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)``; ``()`` is identity."""
    stripped = text.replace(" ", "").replace(",", " ")
    if not re.fullmatch(r"(\([\d ]*\))*", stripped.replace(" ", " ")):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        pts = [int(tok) - 1 for tok in re.split(r"[,\s]+", body.strip()) if tok]
        if pts:
            cycles.append(tuple(pts))
    return from_cycles(cycles, degree)


def format_cycles(p):
    """Render in 1-based cycle notation; identity renders as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycles)
