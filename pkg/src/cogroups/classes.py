"""Conjugacy classes, element-order spectrum, and the co invariant.

For a finite group G, k(G) is the number of conjugacy classes and
pi_e(G) the set of element orders.  Elements of equal order form a
same-order class, a union of conjugacy classes, so k(G) >= |pi_e(G)|;
the difference co(G) = k(G) - |pi_e(G)| measures how far same-order
elements are from being conjugate.  A co(1) group has exactly one
element order whose same-order class splits, into exactly two
conjugacy classes (its "split order").
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import backend
from .perm import Perm, inverse

__all__ = [
    "ConjClass",
    "ClassTable",
    "CoReport",
    "Fingerprint",
    "ClassPartition",
    "class_partition",
    "conjugacy_classes",
    "order_spectrum",
    "co_report",
    "is_co1",
    "fingerprint",
]


@dataclass(frozen=True)
class ConjClass:
    representative: Perm
    size: int
    element_order: int
    centralizer_order: int


@dataclass(frozen=True)
class ClassTable:
    group_order: int
    classes: tuple[ConjClass, ...]

    @property
    def k(self):
        return len(self.classes)


@dataclass(frozen=True)
class CoReport:
    k: int
    pi_e: tuple[int, ...]
    co: int
    split_profile: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Fingerprint:
    """Conjugation-invariant identification surrogate.

    Equal for conjugate (indeed isomorphic) subgroups; within the
    built-in catalog it separates all groups at the ten target orders,
    which the tests verify.
    """

    group_order: int
    pi_e: tuple[int, ...]
    class_profile: tuple[tuple[int, int], ...]


class ClassPartition:
    """Raw conjugation-orbit partition of a group's element list."""

    def __init__(self, group, cap=None):
        self.group = group
        elements = group.element_matrix(cap)
        gens = group.generator_matrix()
        gens_inv = np.stack([inverse(Perm._wrap(row)).images for row in gens])
        self.elements = elements
        self.class_id = backend().conj_partition(elements, gens, gens_inv)
        self.n_classes = int(self.class_id.max()) + 1
        self.sizes = np.bincount(self.class_id, minlength=self.n_classes)
        # class ids are assigned in ascending first-element order
        self.rep_index = np.empty(self.n_classes, dtype=np.int64)
        seen = np.zeros(self.n_classes, dtype=bool)
        for i, cid in enumerate(self.class_id):
            if not seen[cid]:
                seen[cid] = True
                self.rep_index[cid] = i
        reps = elements[self.rep_index]
        self.rep_orders = backend().row_orders(np.ascontiguousarray(reps))
        self._row_lookup = None

    def class_of(self, p):
        """Class id of a member permutation."""
        if self._row_lookup is None:
            self._row_lookup = {
                row.tobytes(): i for i, row in enumerate(self.elements)
            }
        return int(self.class_id[self._row_lookup[p.key]])

    def table(self):
        order = self.group.order()
        classes = []
        for cid in range(self.n_classes):
            size = int(self.sizes[cid])
            rep = Perm._wrap(self.elements[self.rep_index[cid]])
            classes.append(
                ConjClass(
                    representative=rep,
                    size=size,
                    element_order=int(self.rep_orders[cid]),
                    centralizer_order=order // size,
                )
            )
        classes.sort(
            key=lambda c: (c.element_order, c.size, c.representative.images.tolist())
        )
        return ClassTable(group_order=order, classes=tuple(classes))


def class_partition(G, cap=None):
    """Partition with caching on the group instance."""
    if G._partition is None:
        G.check_cap(cap)
        G._partition = ClassPartition(G, cap)
    else:
        G.check_cap(cap)
    return G._partition


def conjugacy_classes(G, cap=None):
    """Class table sorted by (element order, size, representative)."""
    return class_partition(G, cap).table()


def order_spectrum(G, cap=None):
    """pi_e(G), computed from all elements (independent of the class table)."""
    orders = backend().row_orders(G.element_matrix(cap))
    return tuple(sorted(set(orders.tolist())))


def co_report(G, cap=None):
    table = conjugacy_classes(G, cap)
    counts = {}
    for c in table.classes:
        counts[c.element_order] = counts.get(c.element_order, 0) + 1
    pi_e = tuple(sorted(counts))
    k = table.k
    co = k - len(pi_e)
    split = tuple((o, n) for o, n in sorted(counts.items()) if n >= 2)
    report = CoReport(k=k, pi_e=pi_e, co=co, split_profile=split)
    if report.co < 0 or sum(n - 1 for _, n in split) != co:
        raise RuntimeError(f"inconsistent co report: {report}")
    return report


def is_co1(G, cap=None):
    """True iff exactly one same-order class splits, into two classes."""
    report = co_report(G, cap)
    if report.co != 1:
        return False
    if len(report.split_profile) != 1 or report.split_profile[0][1] != 2:
        raise RuntimeError(f"co=1 but split profile is {report.split_profile}")
    return True


def fingerprint(G, cap=None):
    table = conjugacy_classes(G, cap)
    profile = tuple(sorted((c.element_order, c.size) for c in table.classes))
    pi_e = tuple(sorted({c.element_order for c in table.classes}))
    return Fingerprint(
        group_order=table.group_order, pi_e=pi_e, class_profile=profile
    )
