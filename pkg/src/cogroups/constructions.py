"""Named group constructions from a small spec language.

Grammar (whitespace between tokens is ignored)::

    spec  :=  term { "x" term }
    term  :=  "PSL(2," q ")"  |  "SL(2," q ")"  |  "Hol(Z" n ")"
           |  "Z" m ":Z" n [ "@" a ]  |  "Z" n  |  "D" k  |  "S" n  |  "A" n

"D" takes the group order (so D10 has 10 elements), matching the
naming used throughout the reports.  "Zm:Zn" is the semidirect product
in which the Zn factor acts on Zm by multiplication by a; the default
a = m-1 is inversion, "@a" overrides.

The permutation representations are fixed:

* Cyclic(n): an n-cycle on n points.
* Dihedral(2m): rotation + reflection on m points (m >= 3); the order-4
  group lives on 4 points as two disjoint transpositions, since the
  2-point action is not faithful.
* Symmetric/Alternating(n): natural action on n points.
* PSL2(q): the projective line (q+1 points; infinity is the last
  point), generated by z -> z+1, z -> u*z and z -> -1/z, where u is
  the square of the field generator for odd q and the generator itself
  for even q (with a non-square scaling the group would grow to the
  full projective general linear group of twice the order).
* SL2(q): row action on the q^2-1 nonzero vectors, generated by the
  four elementary transvections with entries 1 and the field generator.
* HolCyclic(n): all affine maps x -> a*x+b on n points.
* SemidirectCyclic(m, n, a): right-regular action on its own m*n
  elements (always faithful; minimal-degree actions are error-prone).
* DirectProduct: the disjoint union of the factors' point sets.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import SpecParameterError, SpecSyntaxError
from .gf import MAX_Q, gf, prime_power
from .group import PermGroup
from .perm import DTYPE, Perm, from_cycles, identity

__all__ = [
    "GroupSpec",
    "Cyclic",
    "Dihedral",
    "Symmetric",
    "Alternating",
    "PSL2",
    "SL2",
    "HolCyclic",
    "SemidirectCyclic",
    "DirectProduct",
    "ConstructionReport",
    "CatalogEntry",
    "parse_spec",
    "spec_text",
    "build",
    "construction_report",
    "closed_form_order",
    "theorem_catalog",
    "desk_catalog",
]


class GroupSpec:
    """Base class for spec AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecParameterError(f"Z{self.n}: n must be >= 1")


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    order: int

    def __post_init__(self):
        if self.order < 4 or self.order % 2:
            raise SpecParameterError(
                f"D{self.order}: dihedral order must be even and >= 4"
            )


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecParameterError(f"S{self.n}: n must be >= 1")


@dataclass(frozen=True)
class Alternating(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecParameterError(f"A{self.n}: n must be >= 1")


@dataclass(frozen=True)
class PSL2(GroupSpec):
    q: int

    def __post_init__(self):
        if prime_power(self.q) is None or self.q > MAX_Q:
            raise SpecParameterError(
                f"PSL(2,{self.q}): q must be a prime power <= {MAX_Q}"
            )


@dataclass(frozen=True)
class SL2(GroupSpec):
    q: int

    def __post_init__(self):
        if prime_power(self.q) is None or self.q > MAX_Q:
            raise SpecParameterError(
                f"SL(2,{self.q}): q must be a prime power <= {MAX_Q}"
            )


@dataclass(frozen=True)
class HolCyclic(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecParameterError(f"Hol(Z{self.n}): n must be >= 1")


@dataclass(frozen=True)
class SemidirectCyclic(GroupSpec):
    m: int
    n: int
    action: int

    def __post_init__(self):
        m, n, a = self.m, self.n, self.action
        if m < 1 or n < 1:
            raise SpecParameterError(f"Z{m}:Z{n}: factors must be >= 1")
        if math.gcd(a % m if m > 1 else 1, m) != 1:
            raise SpecParameterError(f"Z{m}:Z{n}@{a}: gcd({a},{m}) != 1")
        if m > 1 and pow(a, n, m) != 1:
            raise SpecParameterError(
                f"Z{m}:Z{n}@{a}: need {a}^{n} = 1 mod {m} for a group action"
            )

    @staticmethod
    def default_action(m):
        """Inversion x -> -x, the action used by the dicyclic groups."""
        return (m - 1) % m if m > 1 else 1


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    left: GroupSpec
    right: GroupSpec


# ---------------------------------------------------------------------------
# parsing

_INT_RE = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def try_literal(self, lit):
        self.skip_ws()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def expect_literal(self, lit, what):
        if not self.try_literal(lit):
            raise SpecSyntaxError(f"expected {what!r}", self.pos)

    def expect_int(self, what):
        self.skip_ws()
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            raise SpecSyntaxError(f"expected {what}", self.pos)
        self.pos = m.end()
        return int(m.group())


def parse_spec(text):
    """Parse spec text; raises SpecSyntaxError / SpecParameterError."""
    sc = _Scanner(text)
    node = _parse_term(sc)
    while True:
        sc.skip_ws()
        if sc.try_literal("x"):
            node = DirectProduct(node, _parse_term(sc))
        else:
            break
    if not sc.at_end():
        raise SpecSyntaxError("unexpected trailing input", sc.pos)
    return node


def _parse_term(sc):
    sc.skip_ws()
    if sc.try_literal("PSL(2,"):
        q = sc.expect_int("field size")
        sc.expect_literal(")", ")")
        return PSL2(q)
    if sc.try_literal("SL(2,"):
        q = sc.expect_int("field size")
        sc.expect_literal(")", ")")
        return SL2(q)
    if sc.try_literal("Hol(Z"):
        n = sc.expect_int("cyclic order")
        sc.expect_literal(")", ")")
        return HolCyclic(n)
    if sc.try_literal("Z"):
        m = sc.expect_int("cyclic order")
        if sc.try_literal(":Z"):
            n = sc.expect_int("acting cyclic order")
            if sc.try_literal("@"):
                a = sc.expect_int("action multiplier")
            else:
                a = SemidirectCyclic.default_action(m)
            return SemidirectCyclic(m, n, a)
        return Cyclic(m)
    if sc.try_literal("D"):
        return Dihedral(sc.expect_int("dihedral order"))
    if sc.try_literal("S"):
        return Symmetric(sc.expect_int("degree"))
    if sc.try_literal("A"):
        return Alternating(sc.expect_int("degree"))
    raise SpecSyntaxError("expected a group term", sc.pos)


def spec_text(spec):
    """Canonical text for an AST node (parses back to an equal node)."""
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.order}"
    if isinstance(spec, Symmetric):
        return f"S{spec.n}"
    if isinstance(spec, Alternating):
        return f"A{spec.n}"
    if isinstance(spec, PSL2):
        return f"PSL(2,{spec.q})"
    if isinstance(spec, SL2):
        return f"SL(2,{spec.q})"
    if isinstance(spec, HolCyclic):
        return f"Hol(Z{spec.n})"
    if isinstance(spec, SemidirectCyclic):
        base = f"Z{spec.m}:Z{spec.n}"
        if spec.action != SemidirectCyclic.default_action(spec.m):
            base += f"@{spec.action}"
        return base
    if isinstance(spec, DirectProduct):
        return f"{spec_text(spec.left)} x {spec_text(spec.right)}"
    raise TypeError(f"not a GroupSpec: {spec!r}")


# ---------------------------------------------------------------------------
# builders

def closed_form_order(spec):
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return spec.order
    if isinstance(spec, Symmetric):
        return math.factorial(spec.n)
    if isinstance(spec, Alternating):
        return max(1, math.factorial(spec.n) // 2)
    if isinstance(spec, PSL2):
        q = spec.q
        return q * (q * q - 1) // math.gcd(2, q - 1)
    if isinstance(spec, SL2):
        q = spec.q
        return q * (q * q - 1)
    if isinstance(spec, HolCyclic):
        n = spec.n
        return n * sum(1 for u in range(1, n + 1) if math.gcd(u, n) == 1)
    if isinstance(spec, SemidirectCyclic):
        return spec.m * spec.n
    if isinstance(spec, DirectProduct):
        return closed_form_order(spec.left) * closed_form_order(spec.right)
    raise TypeError(f"not a GroupSpec: {spec!r}")


def _gens_cyclic(n):
    if n == 1:
        return [identity(1)]
    return [from_cycles([tuple(range(n))], n)]


def _gens_dihedral(order):
    m = order // 2
    if m == 2:
        return [from_cycles([(0, 1)], 4), from_cycles([(2, 3)], 4)]
    rot = np.array([(i + 1) % m for i in range(m)], dtype=DTYPE)
    ref = np.array([(m - i) % m for i in range(m)], dtype=DTYPE)
    return [Perm(rot), Perm(ref)]


def _gens_symmetric(n):
    if n == 1:
        return [identity(1)]
    if n == 2:
        return [from_cycles([(0, 1)], 2)]
    return [from_cycles([(0, 1)], n), from_cycles([tuple(range(n))], n)]


def _gens_alternating(n):
    if n <= 2:
        return [identity(n)]
    if n == 3:
        return [from_cycles([(0, 1, 2)], 3)]
    three = from_cycles([(0, 1, 2)], n)
    if n % 2:
        big = from_cycles([tuple(range(n))], n)
    else:
        big = from_cycles([tuple(range(1, n))], n)
    return [three, big]


def _gens_psl2(q):
    F = gf(q)
    inf = q
    shift = np.empty(q + 1, dtype=DTYPE)
    for z in range(q):
        shift[z] = F.add[z, 1]
    shift[inf] = inf
    u = F.primitive if q % 2 == 0 else int(F.mul[F.primitive, F.primitive])
    gens = [Perm(shift)]
    if u != 1:
        scale = np.empty(q + 1, dtype=DTYPE)
        for z in range(q):
            scale[z] = F.mul[u, z]
        scale[inf] = inf
        gens.append(Perm(scale))
    flip = np.empty(q + 1, dtype=DTYPE)
    flip[0] = inf
    flip[inf] = 0
    for z in range(1, q):
        flip[z] = F.neg[F.inv[z]]
    gens.append(Perm(flip))
    return gens


def _sl2_perm(F, matrix):
    q = F.q
    (m00, m01), (m10, m11) = matrix
    images = np.empty(q * q - 1, dtype=DTYPE)
    for a in range(q):
        for b in range(q):
            if a == 0 and b == 0:
                continue
            va = F.add[F.mul[a, m00], F.mul[b, m10]]
            vb = F.add[F.mul[a, m01], F.mul[b, m11]]
            images[a * q + b - 1] = va * q + vb - 1
    return Perm(images)


def _gens_sl2(q):
    F = gf(q)
    c = F.primitive
    mats = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
    if c != 1:
        mats += [((1, c), (0, 1)), ((1, 0), (c, 1))]
    return [_sl2_perm(F, m) for m in mats]


def _unit_group_generators(n):
    """Greedy minimal generating set of (Z/n)*, smallest units first."""
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    have = {1}
    gens = []
    for u in units:
        if u in have:
            continue
        gens.append(u)
        powers = [1]
        x = u
        while x != 1:
            powers.append(x)
            x = x * u % n
        # the unit group is abelian, so this closes the subgroup
        have = {h * p % n for h in have for p in powers}
        if len(have) == len(units):
            break
    return gens


def _gens_hol_cyclic(n):
    if n == 1:
        return [identity(1)]
    shift = np.array([(i + 1) % n for i in range(n)], dtype=DTYPE)
    gens = [Perm(shift)]
    for u in _unit_group_generators(n):
        gens.append(Perm(np.array([i * u % n for i in range(n)], dtype=DTYPE)))
    return gens


def _gens_semidirect(m, n, a):
    # right-regular action on pairs (x, y) = Z_m x Z_n, index x*n + y;
    # (x1,y1)*(x2,y2) = (x1 + a^y1 * x2, y1 + y2)
    size = m * n
    g1 = np.empty(size, dtype=DTYPE)
    g2 = np.empty(size, dtype=DTYPE)
    apow = [pow(a, y, m) if m > 1 else 0 for y in range(n)]
    for x in range(m):
        for y in range(n):
            idx = x * n + y
            g1[idx] = ((x + apow[y]) % m) * n + y
            g2[idx] = x * n + (y + 1) % n
    gens = [Perm(g1), Perm(g2)]
    return [g for g in gens if not g.is_identity()] or [identity(size)]


def _shift_perm(p, offset, degree):
    arr = np.arange(degree, dtype=DTYPE)
    arr[offset:offset + p.degree] = p.images + offset
    return Perm(arr)


def build_generators(spec):
    """Generator list of the fixed representation for ``spec``."""
    if isinstance(spec, Cyclic):
        return _gens_cyclic(spec.n)
    if isinstance(spec, Dihedral):
        return _gens_dihedral(spec.order)
    if isinstance(spec, Symmetric):
        return _gens_symmetric(spec.n)
    if isinstance(spec, Alternating):
        return _gens_alternating(spec.n)
    if isinstance(spec, PSL2):
        return _gens_psl2(spec.q)
    if isinstance(spec, SL2):
        return _gens_sl2(spec.q)
    if isinstance(spec, HolCyclic):
        return _gens_hol_cyclic(spec.n)
    if isinstance(spec, SemidirectCyclic):
        return _gens_semidirect(spec.m, spec.n, spec.action)
    if isinstance(spec, DirectProduct):
        lg = build_generators(spec.left)
        rg = build_generators(spec.right)
        dl, dr = lg[0].degree, rg[0].degree
        degree = dl + dr
        return [_shift_perm(p, 0, degree) for p in lg] + [
            _shift_perm(p, dl, degree) for p in rg
        ]
    raise TypeError(f"not a GroupSpec: {spec!r}")


def build(spec):
    """Build the permutation group for an AST node or spec text."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    group = PermGroup(build_generators(spec))
    expected = closed_form_order(spec)
    if group.order() != expected:
        raise RuntimeError(
            f"{spec_text(spec)}: built order {group.order()}, "
            f"closed form {expected}"
        )
    return group


@dataclass(frozen=True)
class ConstructionReport:
    spec: str
    degree: int
    order: int
    transitive: bool


def construction_report(spec):
    if isinstance(spec, str):
        spec = parse_spec(spec)
    group = build(spec)
    return ConstructionReport(
        spec=spec_text(spec),
        degree=group.degree,
        order=group.order(),
        transitive=group.is_transitive(),
    )


# ---------------------------------------------------------------------------
# catalogs

@dataclass(frozen=True)
class CatalogEntry:
    """Expected invariant summary for a named group.

    ``co`` values without a bracketed source in the docs were computed
    by the exhaustive-conjugation oracle in the test suite and frozen.
    """

    label: str
    spec: str
    co: int
    split_order: int | None = None


_POSITIVES = (
    CatalogEntry("A5", "A5", 1, 5),
    CatalogEntry("L2(7)", "PSL(2,7)", 1, 7),
    CatalogEntry("S5", "S5", 1, 2),
    CatalogEntry("S4", "S4", 1, 2),
    CatalogEntry("A4", "A4", 1, 3),
    CatalogEntry("D10", "D10", 1, 5),
    CatalogEntry("Hol(Z5)", "Hol(Z5)", 1, 4),
    CatalogEntry("Z3:Z4", "Z3:Z4", 1, 4),
    CatalogEntry("Z3", "Z3", 1, 3),
    CatalogEntry("Z4", "Z4", 1, 4),
)

_NEGATIVES = (
    CatalogEntry("1", "Z1", 0),
    CatalogEntry("Z2", "Z2", 0),
    CatalogEntry("S3", "S3", 0),
    CatalogEntry("Z6", "Z6", 2),
    CatalogEntry("Z15", "Z15", 11),
    CatalogEntry("A6", "A6", 2),
    CatalogEntry("S3xZ2", "S3 x Z2", 2),
    CatalogEntry("SL(2,5)", "SL(2,5)", 2),
    CatalogEntry("A5xZ2", "A5 x Z2", 4),
    CatalogEntry("S6", "S6", 5),
    CatalogEntry("A7", "A7", 2),
    CatalogEntry("A8", "A8", 6),
    CatalogEntry("L2(8)", "PSL(2,8)", 4),
)


def theorem_catalog():
    """The ten co=1 groups plus the named non-examples."""
    return _POSITIVES + _NEGATIVES


def theorem_positives():
    return _POSITIVES


def theorem_negatives():
    return _NEGATIVES


# All groups of order <= 24 expressible in the grammar, one spec per
# isomorphism type (pairwise non-isomorphic; the fingerprint tests rely
# on that).  Types outside the grammar (e.g. the quaternion groups) are
# not represented.
_DESK_SPECS = (
    "Z1",
    "Z2",
    "Z3",
    "Z4", "Z2 x Z2",
    "Z5",
    "Z6", "S3",
    "Z7",
    "Z8", "Z4 x Z2", "Z2 x Z2 x Z2", "D8",
    "Z9", "Z3 x Z3",
    "Z10", "D10",
    "Z11",
    "Z12", "Z6 x Z2", "D12", "A4", "Z3:Z4",
    "Z13",
    "Z14", "D14",
    "Z15",
    "Z16", "Z8 x Z2", "Z4 x Z4", "Z4 x Z2 x Z2", "Z2 x Z2 x Z2 x Z2",
    "D16", "Z8:Z2@3", "Z8:Z2@5", "Z4:Z4", "D8 x Z2",
    "Z17",
    "Z18", "Z3 x Z6", "D18", "S3 x Z3",
    "Z19",
    "Z20", "Z10 x Z2", "D20", "Hol(Z5)", "Z5:Z4@4",
    "Z21", "Z7:Z3@2",
    "Z22", "D22",
    "Z23",
    "Z24", "Z12 x Z2", "Z2 x Z2 x Z6", "S4", "SL(2,3)", "A4 x Z2",
    "D24", "S3 x Z4", "S3 x Z2 x Z2", "D8 x Z3", "Z3:Z8", "Z3:Z4 x Z2",
)


def desk_catalog():
    """Spec texts of the built-in groups of order <= 24."""
    return _DESK_SPECS
