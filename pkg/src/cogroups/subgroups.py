"""Normal subgroups, quotients, solvability, and subgroup enumeration.

Everything here stays below order 5040 for the lattice work (the scan
pre-condition), so conjugacy between subgroups is decided by exhaustive
transporter search over the ambient elements and all index arithmetic
runs over a full Cayley table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import backend
from .classes import class_partition
from .errors import CapExceeded, NotNormalError, NotSubgroupError
from .group import PermGroup, trivial_group
from .perm import Perm, compose, conjugate, identity, inverse, parse_cycles

__all__ = [
    "NormalSubgroupList",
    "SubgroupClassEntry",
    "SubgroupClassList",
    "AmbientTable",
    "centralizer_subgroup",
    "center",
    "normal_closure",
    "normal_subgroups",
    "is_elementary_abelian",
    "QuotientMap",
    "quotient",
    "derived_series_solvable",
    "subgroup_classes",
    "load_seed_file",
    "parse_seed_text",
]

SCAN_ORDER_LIMIT = 5040


# ---------------------------------------------------------------------------
# element-filter subgroups

def _group_from_rows(rows, degree):
    """Group from an explicit element list, keeping few generators."""
    target = rows.shape[0]
    gens = []
    current = None
    for row in rows:
        p = Perm._wrap(row)
        if p.is_identity():
            continue
        if current is not None and current.contains(p):
            continue
        gens.append(p)
        current = PermGroup(gens)
        if current.order() == target:
            break
    if current is None:
        return trivial_group(degree)
    if current.order() != target:
        raise RuntimeError("element filter did not produce a subgroup")
    return current


def centralizer_subgroup(G, x, cap=None):
    """{g in G : gx = xg} as a group; order = |G| / |x^G|."""
    if not G.contains(x):
        raise NotSubgroupError("element is not in the group")
    E = G.element_matrix(cap)
    xa = x.images
    mask = (xa[E] == E[:, xa]).all(axis=1)
    return _group_from_rows(E[mask], G.degree)


def center(G, cap=None):
    """Elements commuting with every generator."""
    E = G.element_matrix(cap)
    mask = np.ones(E.shape[0], dtype=bool)
    for g in G.generators:
        ga = g.images
        mask &= (ga[E] == E[:, ga]).all(axis=1)
    return _group_from_rows(E[mask], G.degree)


# ---------------------------------------------------------------------------
# normal structure

def _contains_group(G, H):
    return all(G.contains(g) for g in H.generators)


def _require_normal(G, N):
    if N.degree != G.degree or not _contains_group(G, N):
        raise NotSubgroupError("N is not a subgroup of G")
    for g in G.generators:
        for x in N.generators:
            if not N.contains(conjugate(x, g)):
                raise NotNormalError("subgroup is not normal")


def normal_closure(G, seeds):
    """Smallest normal subgroup of G containing the seed permutations."""
    gens = []
    seen = set()
    for p in seeds:
        if not p.is_identity() and p.key not in seen:
            seen.add(p.key)
            gens.append(p)
    if not gens:
        return trivial_group(G.degree)
    closure = PermGroup(gens)
    grew = True
    while grew:
        grew = False
        for g in G.generators:
            for s in list(gens):
                t = conjugate(s, g)
                if not closure.contains(t):
                    gens.append(t)
                    closure = PermGroup(gens)
                    grew = True
    return closure


@dataclass(frozen=True)
class NormalSubgroupList:
    parent_order: int
    entries: tuple[PermGroup, ...]


def _element_key(H, cap=None):
    return tuple(sorted(row.tobytes() for row in H.element_matrix(cap)))


def normal_subgroups(G, cap=None):
    """All normal subgroups, via joins of conjugacy-class closures.

    Every normal subgroup is a union of classes and is generated by the
    classes it contains, so the join closure of the single-class normal
    closures is the full set.
    """
    part = class_partition(G, cap)
    found = [trivial_group(G.degree)]

    def known(H):
        return any(
            E.order() == H.order() and _contains_group(E, H) for E in found
        )

    for cid in range(part.n_classes):
        rep = Perm._wrap(part.elements[part.rep_index[cid]])
        if rep.is_identity():
            continue
        N = normal_closure(G, [rep])
        if not known(N):
            found.append(N)
    grew = True
    while grew:
        grew = False
        for i in range(len(found)):
            for j in range(i + 1, len(found)):
                join = PermGroup(
                    list(found[i].generators) + list(found[j].generators)
                )
                if not known(join):
                    found.append(join)
                    grew = True
    # sort by order; break ties by the element sets for reproducibility
    by_order = {}
    for H in found:
        by_order.setdefault(H.order(), []).append(H)
    entries = []
    for order in sorted(by_order):
        block = by_order[order]
        if len(block) > 1:
            block.sort(key=lambda H: _element_key(H, cap))
        entries.extend(block)
    return NormalSubgroupList(parent_order=G.order(), entries=tuple(entries))


def is_elementary_abelian(N):
    """(True, p) iff abelian with every non-identity element of order p.

    The trivial group reports (True, None).
    """
    gens = [g for g in N.generators if not g.is_identity()]
    if not gens:
        return True, None
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if compose(a, b) != compose(b, a):
                return False, None
    orders = {g.order() for g in gens}
    if len(orders) != 1:
        return False, None
    p = orders.pop()
    for d in range(2, p):
        if p % d == 0:
            return False, None
    return True, p


# ---------------------------------------------------------------------------
# quotients

class QuotientMap:
    """Action of G on the right cosets of a normal subgroup N.

    The kernel of the action is exactly N, so the image is a faithful
    copy of G/N; cosets are numbered in breadth-first discovery order
    from the coset of the identity.
    """

    def __init__(self, G, N, cap=None):
        _require_normal(G, N)
        G.check_cap(cap)
        self.G = G
        self.N = N
        self._n_rows = N.element_matrix(cap)
        reps = [identity(G.degree)]
        index = {self._coset_key(reps[0]): 0}
        head = 0
        while head < len(reps):
            r = reps[head]
            head += 1
            for g in G.generators:
                s = compose(r, g)
                key = self._coset_key(s)
                if key not in index:
                    index[key] = len(reps)
                    reps.append(s)
        self.reps = reps
        self._index = index
        images = []
        for g in G.generators:
            row = [index[self._coset_key(compose(r, g))] for r in reps]
            images.append(Perm(np.array(row, dtype=np.int32)))
        self.group = PermGroup(images)
        if self.group.order() * N.order() != G.order():
            raise RuntimeError(
                f"coset action order {self.group.order()} does not match "
                f"|G|/|N| = {G.order()}/{N.order()}"
            )

    def _coset_key(self, x):
        rows = x.images[self._n_rows]
        return min(row.tobytes() for row in rows)

    def image_of(self, p):
        """Image of a group element in the coset permutation group."""
        row = [
            self._index[self._coset_key(compose(r, p))] for r in self.reps
        ]
        return Perm(np.array(row, dtype=np.int32))


def quotient(G, N, cap=None):
    """G/N as a faithful permutation group of degree |G : N|."""
    return QuotientMap(G, N, cap).group


def derived_series_solvable(G, cap=None):
    """True iff the derived series reaches the trivial group."""
    current = G
    while current.order() > 1:
        gens = current.generators
        comms = []
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                c = compose(compose(compose(inverse(a), inverse(b)), a), b)
                if not c.is_identity():
                    comms.append(c)
        derived = normal_closure(current, comms)
        if derived.order() == current.order():
            return False
        current = derived
    return True


# ---------------------------------------------------------------------------
# Cayley-table machinery and the subgroup-class scan

class AmbientTable:
    """Cayley table plus per-element data for a small ambient group."""

    def __init__(self, group, cap=None):
        self.group = group
        self.elements = group.element_matrix(cap)
        self.n = self.elements.shape[0]
        self.mul = backend().mul_table(self.elements)
        self.orders = backend().row_orders(self.elements)
        self.inv = np.argmax(self.mul == 0, axis=1).astype(np.int64)
        self._all = np.arange(self.n, dtype=np.int64)
        self._row_index = None

    def index_of(self, p):
        if self._row_index is None:
            self._row_index = {
                row.tobytes(): i for i, row in enumerate(self.elements)
            }
        idx = self._row_index.get(p.key)
        if idx is None:
            raise NotSubgroupError("element is not in the ambient group")
        return idx

    def conj_by_all(self, g):
        """c[w] = index of w^-1 * e_g * w, for every w."""
        return self.mul[self.mul[self.inv, g], self._all]

    def power_all(self, k):
        """x^k for every element index x."""
        result = np.zeros(self.n, dtype=np.int64)  # identity has index 0
        base = self._all.copy()
        while k:
            if k & 1:
                result = self.mul[result, base].astype(np.int64)
            k >>= 1
            if k:
                base = self.mul[base, base].astype(np.int64)
        return result

    def transporter_mask(self, gens_idx, target_mask):
        """Mask of w with (e_g)^w inside the target for all given g."""
        ok = np.ones(self.n, dtype=bool)
        for g in gens_idx:
            ok &= target_mask[self.conj_by_all(g)]
            if not ok.any():
                break
        return ok

    def closure_mask(self, gens_idx):
        gens_idx = np.asarray(sorted(gens_idx), dtype=np.int64)
        return backend().closure_idx(self.mul, gens_idx, 0)


class _SubRec:
    __slots__ = ("indices", "mask", "gens", "order", "profile", "class_size")

    def __init__(self, table, member_mask, gens_idx):
        self.mask = member_mask
        self.indices = np.flatnonzero(member_mask)
        self.order = int(self.indices.size)
        self.gens = tuple(gens_idx)
        self.profile = tuple(sorted(table.orders[self.indices].tolist()))
        self.class_size = None


@dataclass(frozen=True)
class SubgroupClassEntry:
    group: PermGroup
    class_size: int
    element_indices: tuple[int, ...]


@dataclass(frozen=True)
class SubgroupClassList:
    ambient_order: int
    entries: tuple[SubgroupClassEntry, ...]

    @property
    def n_classes(self):
        return len(self.entries)

    def total_subgroups(self):
        return sum(e.class_size for e in self.entries)


def subgroup_classes(ambient, perfect_seeds=(), cap=None, table=None):
    """All subgroup conjugacy classes of a small ambient group.

    Works upward by cyclic extension: each known subgroup H is extended
    by elements g of prime power order into H (g^p in H, g normalising
    H), which reaches every subgroup whose quotient over some seed is
    solvable.  ``perfect_seeds`` must therefore contain a representative
    of every perfect subgroup class; the trivial group is always
    included automatically.
    """
    if ambient.order() > SCAN_ORDER_LIMIT:
        raise CapExceeded(ambient.order(), SCAN_ORDER_LIMIT)
    if table is None:
        table = AmbientTable(ambient, cap)
    n = table.n

    classes = []
    exact_seen = set()

    def intern(member_mask, gens_idx):
        rec = _SubRec(table, member_mask, gens_idx)
        key = rec.indices.tobytes()
        if key in exact_seen:
            return None
        exact_seen.add(key)
        for known in classes:
            if known.order != rec.order or known.profile != rec.profile:
                continue
            if table.transporter_mask(rec.gens, known.mask).any():
                return None
        classes.append(rec)
        return rec

    seed_recs = [(np.zeros(n, dtype=bool), ())]
    seed_recs[0][0][0] = True
    for seed in perfect_seeds:
        gens_idx = tuple(
            table.index_of(g) for g in seed.generators if not g.is_identity()
        )
        mask = table.closure_mask(gens_idx)
        if int(mask.sum()) != seed.order():
            raise NotSubgroupError("seed closure does not match seed order")
        seed_recs.append((mask, gens_idx))
    seed_recs.sort(key=lambda rec: (int(rec[0].sum()), rec[0].tobytes()))

    queue = []
    for mask, gens_idx in seed_recs:
        rec = intern(mask, gens_idx)
        if rec is not None:
            queue.append(rec)

    primes = [p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)]
    head = 0
    while head < len(queue):
        H = queue[head]
        head += 1
        normalizer = table.transporter_mask(H.gens, H.mask)
        cofactor = n // H.order
        for p in primes:
            if cofactor % p:
                continue
            pw = table.power_all(p)
            cand = normalizer & H.mask[pw] & ~H.mask
            for g in np.flatnonzero(cand):
                gens_idx = H.gens + (int(g),)
                mask = table.closure_mask(gens_idx)
                rec = intern(mask, gens_idx)
                if rec is not None:
                    if rec.order != p * H.order:
                        raise RuntimeError("cyclic extension produced a "
                                           "non-prime-index extension")
                    queue.append(rec)

    entries = []
    for rec in sorted(queue, key=lambda r: (r.order, r.indices.tobytes())):
        norm_count = int(table.transporter_mask(rec.gens, rec.mask).sum())
        class_size = n // norm_count
        gens = [Perm._wrap(table.elements[i]) for i in rec.gens]
        group = PermGroup(gens) if gens else trivial_group(ambient.degree)
        if group.order() != rec.order:
            raise RuntimeError("representative group order mismatch")
        entries.append(
            SubgroupClassEntry(
                group=group,
                class_size=class_size,
                element_indices=tuple(rec.indices.tolist()),
            )
        )
    return SubgroupClassList(ambient_order=n, entries=tuple(entries))


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# perfect-seed files

def parse_seed_text(text, ambient):
    """Parse seed-file text: one subgroup per line, as
    ``degree; gens...`` with 1-based cycle notation, '#' comments."""
    groups = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        try:
            degree = int(parts[0])
        except ValueError:
            raise ValueError(f"seed line {lineno}: bad degree {parts[0]!r}")
        if degree != ambient.degree:
            raise NotSubgroupError(
                f"seed line {lineno}: degree {degree} does not match "
                f"ambient degree {ambient.degree}"
            )
        gens = [parse_cycles(p, degree) for p in parts[1:] if p]
        if not gens:
            gens = [identity(degree)]
        for g in gens:
            if not ambient.contains(g):
                raise NotSubgroupError(
                    f"seed line {lineno}: generator outside the ambient group"
                )
        groups.append(PermGroup(gens))
    return groups


def load_seed_file(path, ambient):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_seed_text(fh.read(), ambient)
