"""cogroups: conjugacy-class vs element-order invariants of permutation groups.

For a finite group G with k(G) conjugacy classes and pi_e(G) distinct
element orders, co(G) = k(G) - |pi_e(G)| counts how many same-order
classes split into extra conjugacy classes.  This package computes co
reports for permutation groups built from a small spec language, scans
subgroup lattices for co=1 subgroups, and runs a claim-by-claim
verification suite over the bundled group catalog.
"""

__version__ = "0.1.0"

from .backend import backend_name
from .classes import (
    ClassTable,
    ConjClass,
    CoReport,
    Fingerprint,
    co_report,
    conjugacy_classes,
    fingerprint,
    is_co1,
    order_spectrum,
)
from .constructions import (
    CatalogEntry,
    ConstructionReport,
    GroupSpec,
    build,
    construction_report,
    desk_catalog,
    parse_spec,
    spec_text,
    theorem_catalog,
)
from .errors import (
    CapExceeded,
    CogroupsError,
    DegreeMismatch,
    NotNormalError,
    NotSubgroupError,
    SpecError,
    SpecParameterError,
    SpecSyntaxError,
)
from .group import DEFAULT_CAP, ElementCap, PermGroup, group_from_generators
from .lemmas import (
    DegreeSumQuery,
    check_fusion_identity,
    check_quotient_bounds,
    check_split_propagation,
    class_equation_audit,
    degree_sum_feasible,
    centralizer_table_crosscheck,
)
from .perm import Perm, compose, conjugate, element_order, identity, inverse
from .subgroups import (
    NormalSubgroupList,
    SubgroupClassList,
    center,
    centralizer_subgroup,
    derived_series_solvable,
    is_elementary_abelian,
    normal_subgroups,
    quotient,
    subgroup_classes,
)
from .verify import VerificationSummary, run_verification

__all__ = [
    "__version__",
    "backend_name",
    # permutations and groups
    "Perm", "compose", "conjugate", "element_order", "identity", "inverse",
    "PermGroup", "group_from_generators", "ElementCap", "DEFAULT_CAP",
    # class structure
    "ClassTable", "ConjClass", "CoReport", "Fingerprint",
    "conjugacy_classes", "order_spectrum", "co_report", "is_co1", "fingerprint",
    # constructions
    "GroupSpec", "ConstructionReport", "CatalogEntry",
    "parse_spec", "spec_text", "build", "construction_report",
    "theorem_catalog", "desk_catalog",
    # subgroup structure
    "NormalSubgroupList", "SubgroupClassList",
    "centralizer_subgroup", "center", "normal_subgroups",
    "is_elementary_abelian", "quotient", "derived_series_solvable",
    "subgroup_classes",
    # lemma-style checks
    "DegreeSumQuery", "check_quotient_bounds", "check_fusion_identity",
    "check_split_propagation", "degree_sum_feasible", "class_equation_audit",
    "centralizer_table_crosscheck",
    # verification
    "VerificationSummary", "run_verification",
    # errors
    "CogroupsError", "DegreeMismatch", "CapExceeded", "SpecError",
    "SpecSyntaxError", "SpecParameterError", "NotNormalError",
    "NotSubgroupError",
]
