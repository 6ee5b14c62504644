"""Executable structural checks used by the verification harness.

Each check returns a structured report rather than a bare boolean so
the CLI can print the arithmetic it verified.  The checks:

* quotient bounds: for a normal elementary abelian N, co(G/N) <= co(G),
  and the counted refinement co(G/N) <= co(G) - t + 1 where t is the
  number of G-classes inside N minus the identity.
* fusion identity: if all order-m elements of N lie in m_fused
  equal-size N-classes but a single G-class, then
  |G:N| = m_fused * |C_G(a) : C_N(a)|.
* split propagation: if G and G/N both have exactly one split order,
  the quotient's split order is realised by the image of one of G's
  two split-class representatives.
* degree-sum feasibility: whether a target T is a sum of t squares of
  allowed character degrees (pure diophantine search; no character
  theory is computed).
* class-equation audit and the embedded centralizer-table cross-check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources

from .classes import class_partition, co_report, conjugacy_classes
from .constructions import build
from .errors import NotNormalError
from .perm import Perm
from .subgroups import (
    QuotientMap,
    is_elementary_abelian,
    normal_subgroups,
)

__all__ = [
    "QuotientBoundReport",
    "FusionIdentityReport",
    "SplitPropagationReport",
    "DegreeSumQuery",
    "check_quotient_bounds",
    "check_fusion_identity",
    "check_split_propagation",
    "degree_sum_feasible",
    "class_equation_audit",
    "centralizer_table_crosscheck",
    "load_centralizer_data",
    "CENTRALIZER_TABLE_GROUPS",
]


# ---------------------------------------------------------------------------
# quotient bounds

@dataclass(frozen=True)
class QuotientBoundReport:
    parent: str
    n_order: int
    t: int
    co_parent: int
    co_quotient: int
    bound_basic: bool
    bound_counted: bool


def _classes_inside(G, N, cap=None):
    """Number of non-identity G-classes contained in a normal N."""
    part = class_partition(G, cap)
    count = 0
    for cid in range(part.n_classes):
        if part.rep_orders[cid] == 1:
            continue
        rep = Perm._wrap(part.elements[part.rep_index[cid]])
        if N.contains(rep):
            count += 1
    return count


def check_quotient_bounds(G, cap=None, label=None):
    """One report per nontrivial proper normal elementary abelian N."""
    label = label or f"group of order {G.order()}"
    co_parent = co_report(G, cap).co
    reports = []
    for N in normal_subgroups(G, cap).entries:
        if N.order() == 1 or N.order() == G.order():
            continue
        ok, _ = is_elementary_abelian(N)
        if not ok:
            continue
        t = _classes_inside(G, N, cap)
        q = QuotientMap(G, N, cap).group
        co_q = co_report(q, cap).co
        reports.append(
            QuotientBoundReport(
                parent=label,
                n_order=N.order(),
                t=t,
                co_parent=co_parent,
                co_quotient=co_q,
                bound_basic=co_q <= co_parent,
                bound_counted=co_q <= co_parent - t + 1,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# fusion identity

@dataclass(frozen=True)
class FusionIdentityReport:
    element_order: int
    applicable: bool
    reason: str | None
    m_fused: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    holds: bool | None = None


def check_fusion_identity(G, N, m, cap=None):
    """Check |G:N| = m_fused * |C_G(a):C_N(a)| when the hypothesis holds.

    Hypothesis: the order-m elements of N fall into equal-size
    N-classes that fuse into a single G-class.  Anything else yields a
    not-applicable report with the reason.
    """
    n_table = conjugacy_classes(N, cap)
    n_classes = [c for c in n_table.classes if c.element_order == m]
    if not n_classes:
        return FusionIdentityReport(
            m, False, f"N has no elements of order {m}"
        )
    sizes = {c.size for c in n_classes}
    if len(sizes) != 1:
        return FusionIdentityReport(
            m, False, "N-classes of that order have unequal sizes"
        )
    g_part = class_partition(G, cap)
    g_ids = {g_part.class_of(c.representative) for c in n_classes}
    if len(g_ids) != 1:
        return FusionIdentityReport(
            m, False, "the N-classes do not fuse into one G-class"
        )
    a = n_classes[0].representative
    g_class_size = int(g_part.sizes[g_ids.pop()])
    cg = G.order() // g_class_size
    cn = N.order() // n_classes[0].size
    if cg % cn:
        raise RuntimeError("centralizer orders do not divide")
    m_fused = len(n_classes)
    lhs = G.order() // N.order()
    rhs = m_fused * (cg // cn)
    return FusionIdentityReport(
        m, True, None, m_fused=m_fused, lhs=lhs, rhs=rhs, holds=lhs == rhs
    )


# ---------------------------------------------------------------------------
# split propagation

@dataclass(frozen=True)
class SplitPropagationReport:
    applicable: bool
    reason: str | None
    quotient_split: int | None = None
    image_orders: tuple[int, int] | None = None
    holds: bool | None = None


def check_split_propagation(G, N, cap=None):
    """For co=1 G and G/N, the quotient split order must be the image
    order of one of G's two split-class representatives."""
    ok, _ = is_elementary_abelian(N)
    if not ok:
        raise NotNormalError("N must be elementary abelian")
    if N.order() == 1 or N.order() == G.order():
        return SplitPropagationReport(False, "N is trivial or all of G")
    rep_g = co_report(G, cap)
    if rep_g.co != 1:
        return SplitPropagationReport(False, "G is not a co=1 group")
    qmap = QuotientMap(G, N, cap)
    rep_q = co_report(qmap.group, cap)
    if rep_q.co != 1:
        return SplitPropagationReport(False, "G/N is not a co=1 group")
    n = rep_q.split_profile[0][0]
    m = rep_g.split_profile[0][0]
    g_table = conjugacy_classes(G, cap)
    reps = [c.representative for c in g_table.classes if c.element_order == m]
    image_orders = tuple(qmap.image_of(r).order() for r in reps)
    return SplitPropagationReport(
        True,
        None,
        quotient_split=n,
        image_orders=image_orders,
        holds=n in image_orders,
    )


# ---------------------------------------------------------------------------
# degree-sum feasibility

@dataclass(frozen=True)
class DegreeSumQuery:
    """Is ``target`` a sum of ``count`` squares of allowed degrees?"""

    target: int
    count: int
    allowed: tuple[int, ...]

    def __post_init__(self):
        if self.target < 0 or self.count < 0:
            raise ValueError("target and count must be non-negative")
        if not self.allowed or any(d < 1 for d in self.allowed):
            raise ValueError("allowed degrees must be positive and nonempty")


def degree_sum_feasible(query):
    """(feasible, witness) with the witness sorted ascending, or None."""
    degrees = sorted(set(query.allowed), reverse=True)
    out = []

    def search(remaining, slots, max_pos):
        if slots == 0:
            return remaining == 0
        if remaining < slots:  # every square is at least 1
            return False
        for pos in range(max_pos, len(degrees)):
            d = degrees[pos]
            sq = d * d
            if sq * slots < remaining:
                break  # degrees only shrink from here
            if sq > remaining - (slots - 1):
                continue
            out.append(d)
            if search(remaining - sq, slots - 1, pos):
                return True
            out.pop()
        return False

    if search(query.target, query.count, 0):
        return True, tuple(sorted(out))
    return False, None


# ---------------------------------------------------------------------------
# class-equation audit

def class_equation_audit(G, cap=None):
    """1 + sum of nonidentity class sizes = |G|, every size divides |G|."""
    table = conjugacy_classes(G, cap)
    order = G.order()
    total = sum(c.size for c in table.classes)
    identity_sizes = [
        c.size for c in table.classes
        if c.element_order == 1
    ]
    if identity_sizes != [1]:
        return False
    if total != order:
        return False
    return all(order % c.size == 0 for c in table.classes)


# ---------------------------------------------------------------------------
# centralizer-table cross-check

CENTRALIZER_TABLE_GROUPS = {
    "A5": "A5",
    "A6": "A6",
    "L2(16)": "PSL(2,16)",
    "L2(27)": "PSL(2,27)",
}

_DATA_PACKAGE = "cogroups.data"
_DATA_FILE = "centralizer_orders.txt"


def load_centralizer_data(path=None):
    """Parse the embedded (element order, centralizer order) data file.

    Format: one group per line, ``name order:centralizer ...``; '#'
    starts a comment.  Returns name -> Counter of pairs.
    """
    if path is None:
        text = resources.files(_DATA_PACKAGE).joinpath(_DATA_FILE).read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, *pairs = line.split()
        counter = Counter()
        for pair in pairs:
            order_s, cent_s = pair.split(":")
            counter[(int(order_s), int(cent_s))] += 1
        data[name] = counter
    return data


def centralizer_table_crosscheck(name, cap=None, data_path=None):
    """Computed (order, centralizer) multiset equals the embedded column."""
    expected = load_centralizer_data(data_path)[name]
    table = conjugacy_classes(build(CENTRALIZER_TABLE_GROUPS[name]), cap)
    computed = Counter(
        (c.element_order, c.centralizer_order) for c in table.classes
    )
    return computed == expected
