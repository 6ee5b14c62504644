"""The claim-by-claim verification suite behind ``cogroups verify-theorem``.

Every claim is an independent record with an id, the expected outcome,
the computed outcome, and a pass flag; the run is deterministic, so two
runs differ only in the timestamp.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .classes import co_report, fingerprint
from .constructions import build, desk_catalog, theorem_negatives, theorem_positives
from .lemmas import (
    DegreeSumQuery,
    check_fusion_identity,
    check_quotient_bounds,
    check_split_propagation,
    class_equation_audit,
    degree_sum_feasible,
    centralizer_table_crosscheck,
    CENTRALIZER_TABLE_GROUPS,
)
from .subgroups import normal_subgroups, subgroup_classes

__all__ = ["ClaimRecord", "VerificationSummary", "run_verification"]


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    expected: str
    computed: str
    passed: bool


@dataclass(frozen=True)
class VerificationSummary:
    records: tuple[ClaimRecord, ...]
    timestamp: str

    @property
    def overall_pass(self):
        return all(r.passed for r in self.records)

    def to_dict(self):
        return {
            "schema": 1,
            "version": __version__,
            "timestamp": self.timestamp,
            "overall": "pass" if self.overall_pass else "fail",
            "claims": [
                {
                    "id": r.claim_id,
                    "expected": r.expected,
                    "computed": r.computed,
                    "pass": r.passed,
                }
                for r in self.records
            ],
        }


# the fusion-identity cases: (G spec, order of the normal subgroup, m)
_FUSION_CASES = (
    ("S5", 60, 5),
    ("S5", 60, 3),
    ("S4", 12, 3),
    ("S4", 4, 2),
    ("A4", 4, 2),
    ("S6", 360, 5),
    ("Hol(Z5)", 5, 5),
    ("Z4", 2, 2),
)

# split-propagation cases: (G spec, |N|, expect applicable)
_SPLIT_CASES = (
    ("Hol(Z5)", 5, True),
    ("A4", 4, True),
    ("Z3:Z4", 3, True),
    ("S4", 4, False),
)

# degree-sum cases reproduced from the infeasibility arguments:
# (target, count, allowed degrees, expected feasible)
_DEGREE_CASES = (
    (36, 3, (1, 2, 3, 6), False),
    (24, 1, (1, 2, 3, 4, 6, 8, 12, 24), False),
    (24, 2, (1, 2, 3, 4, 6, 8, 12, 24), False),
    (20, 1, (1, 2, 4, 5, 10, 20), False),
    (25, 2, (1, 2, 3, 4, 5), True),
)


def _normal_of_order(G, order, cap):
    for N in normal_subgroups(G, cap).entries:
        if N.order() == order:
            return N
    raise RuntimeError(f"no normal subgroup of order {order}")


def run_verification(cap=None):
    records = []

    def claim(claim_id, expected, computed, passed):
        records.append(ClaimRecord(claim_id, expected, computed, bool(passed)))

    groups = {}

    def get(spec):
        if spec not in groups:
            groups[spec] = build(spec)
        return groups[spec]

    # the ten co=1 groups, each with its split order of multiplicity two
    for entry in theorem_positives():
        rep = co_report(get(entry.spec), cap)
        expected = f"co=1 split=({entry.split_order},2)"
        computed = f"co={rep.co} split={list(rep.split_profile)}"
        claim(
            f"co1-positive/{entry.label}",
            expected,
            computed,
            rep.co == 1 and rep.split_profile == ((entry.split_order, 2),),
        )

    # the named non-examples
    for entry in theorem_negatives():
        rep = co_report(get(entry.spec), cap)
        claim(
            f"co-negative/{entry.label}",
            f"co={entry.co} (not 1)",
            f"co={rep.co}",
            rep.co == entry.co and rep.co != 1,
        )

    # co=0 exactness at desk scale: the order <= 24 catalog plus every
    # subgroup class of S4 may contain no co=0 group beyond 1, Z2, S3
    allowed = {fingerprint(get(s), cap) for s in ("Z1", "Z2", "S3")}
    offenders = []
    for spec in desk_catalog():
        G = get(spec)
        if co_report(G, cap).co == 0 and fingerprint(G, cap) not in allowed:
            offenders.append(spec)
    for entry in subgroup_classes(get("S4"), cap=cap).entries:
        rep = co_report(entry.group, cap)
        if rep.co == 0 and fingerprint(entry.group, cap) not in allowed:
            offenders.append(f"S4 subgroup of order {entry.group.order()}")
    claim(
        "co0-desk-scale",
        "co=0 only for 1, Z2, S3",
        "no others" if not offenders else f"also {offenders}",
        not offenders,
    )

    # quotient bounds for every catalog group and every normal
    # elementary abelian subgroup
    sweep = [(e.label, e.spec) for e in theorem_positives() + theorem_negatives()]
    seen_specs = {spec for _, spec in sweep}
    for spec in desk_catalog():
        if spec not in seen_specs:
            sweep.append((spec, spec))
    for label, spec in sweep:
        for rep in check_quotient_bounds(get(spec), cap, label=label):
            claim(
                f"quotient-bound/{label}/N{rep.n_order}.t{rep.t}",
                "co(G/N) <= co(G) and co(G/N) <= co(G)-t+1",
                f"co(G)={rep.co_parent} co(G/N)={rep.co_quotient} t={rep.t}",
                rep.bound_basic and rep.bound_counted,
            )

    # fusion identity
    for spec, n_order, m in _FUSION_CASES:
        G = get(spec)
        N = _normal_of_order(G, n_order, cap)
        rep = check_fusion_identity(G, N, m, cap)
        claim(
            f"fusion/{spec}/N{n_order}/m{m}",
            "applicable and |G:N| = m_fused*|C_G(a):C_N(a)|",
            (
                f"lhs={rep.lhs} rhs={rep.rhs} (m_fused={rep.m_fused})"
                if rep.applicable
                else f"not applicable: {rep.reason}"
            ),
            rep.applicable and rep.holds,
        )

    # split propagation
    for spec, n_order, expect_applicable in _SPLIT_CASES:
        G = get(spec)
        N = _normal_of_order(G, n_order, cap)
        rep = check_split_propagation(G, N, cap)
        if expect_applicable:
            claim(
                f"split-propagation/{spec}/N{n_order}",
                "applicable and quotient split order is an image order",
                (
                    f"split={rep.quotient_split} images={rep.image_orders}"
                    if rep.applicable
                    else f"not applicable: {rep.reason}"
                ),
                rep.applicable and rep.holds,
            )
        else:
            claim(
                f"split-propagation/{spec}/N{n_order}",
                "not applicable (hypothesis fails)",
                "not applicable" if not rep.applicable else "applicable",
                not rep.applicable,
            )

    # degree-sum feasibility; each claim names the degree set it used
    for target, count, allowed_degs, expect in _DEGREE_CASES:
        feasible, witness = degree_sum_feasible(
            DegreeSumQuery(target, count, allowed_degs)
        )
        degrees = f"degrees {{{','.join(map(str, allowed_degs))}}}"
        claim(
            f"degree-sum/T{target}.t{count}",
            f"{'feasible' if expect else 'infeasible'} over {degrees}",
            (
                f"feasible witness={witness} over {degrees}"
                if feasible
                else f"infeasible over {degrees}"
            ),
            feasible == expect,
        )

    # centralizer table cross-checks
    for name in CENTRALIZER_TABLE_GROUPS:
        ok = centralizer_table_crosscheck(name, cap)
        claim(
            f"centralizer-table/{name}",
            "computed (order, centralizer) multiset equals embedded data",
            "equal" if ok else "MISMATCH",
            ok,
        )

    # class-equation audit over everything the suite touched
    for label, spec in sweep:
        ok = class_equation_audit(get(spec), cap)
        claim(
            f"class-equation/{label}",
            "sizes sum to |G| and divide |G|",
            "ok" if ok else "violated",
            ok,
        )

    timestamp = datetime.now(timezone.utc).isoformat()
    return VerificationSummary(records=tuple(records), timestamp=timestamp)
