import pytest

from cogroups.classes import (
    class_partition,
    co_report,
    conjugacy_classes,
    fingerprint,
    is_co1,
    order_spectrum,
)
from cogroups.group import PermGroup
from cogroups.perm import conjugate, from_cycles

from conftest import built
from oracles import closure_t, conjugacy_classes_t, order_t


def oracle_class_data(spec):
    """(element order, class size) multiset by exhaustive conjugation."""
    elements = closure_t([tuple(g.images) for g in built(spec).generators])
    return sorted(
        (order_t(next(iter(c))), len(c)) for c in conjugacy_classes_t(elements)
    )


def table_class_data(spec):
    table = conjugacy_classes(built(spec))
    return sorted((c.element_order, c.size) for c in table.classes)


@pytest.mark.parametrize(
    "spec,frozen",
    [
        # frozen values computed with the exhaustive-conjugation oracle
        ("A5", [(1, 1), (2, 15), (3, 20), (5, 12), (5, 12)]),
        ("Z4", [(1, 1), (2, 1), (4, 1), (4, 1)]),
        ("S4", [(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]),
        ("Hol(Z5)", [(1, 1), (2, 5), (4, 5), (4, 5), (5, 4)]),
        ("Z3:Z4", [(1, 1), (2, 1), (3, 2), (4, 3), (4, 3), (6, 2)]),
    ],
)
def test_class_tables_against_oracle(spec, frozen):
    assert table_class_data(spec) == oracle_class_data(spec) == frozen


def test_s4_has_two_classes_of_order_two():
    table = conjugacy_classes(built("S4"))
    assert sum(1 for c in table.classes if c.element_order == 2) == 2


def test_class_invariants():
    for spec in ["A5", "S4", "Z3:Z4", "Hol(Z5)", "S3 x Z2"]:
        g = built(spec)
        table = conjugacy_classes(g)
        assert sum(c.size for c in table.classes) == g.order()
        for c in table.classes:
            assert g.order() % c.size == 0
            assert c.size * c.centralizer_order == g.order()
        identity_classes = [c for c in table.classes if c.element_order == 1]
        assert len(identity_classes) == 1 and identity_classes[0].size == 1


def test_order_spectrum_examples():
    assert order_spectrum(built("S5")) == (1, 2, 3, 4, 5, 6)
    assert order_spectrum(built("A5")) == (1, 2, 3, 5)
    assert order_spectrum(built("Z3")) == (1, 3)


def test_order_spectrum_against_oracle():
    for spec in ["S5", "A5", "SL(2,3)", "Z3:Z4"]:
        elements = closure_t([tuple(g.images) for g in built(spec).generators])
        assert set(order_spectrum(built(spec))) == {order_t(p) for p in elements}


def test_spectrum_matches_class_table():
    for spec in ["S5", "Hol(Z5)", "D12", "PSL(2,7)"]:
        table = conjugacy_classes(built(spec))
        assert set(order_spectrum(built(spec))) == {
            c.element_order for c in table.classes
        }


def test_co_report_examples():
    a5 = co_report(built("A5"))
    assert (a5.k, a5.co, a5.split_profile) == (5, 1, ((5, 2),))
    assert co_report(built("A6")).co == 2
    assert co_report(built("S3")).co == 0
    assert co_report(built("S3 x Z2")).co == 2


def test_is_co1_examples():
    assert is_co1(built("Hol(Z5)"))
    assert co_report(built("Hol(Z5)")).split_profile == ((4, 2),)
    assert not is_co1(built("Z6"))
    assert not is_co1(built("SL(2,5)"))


def test_co_nonnegative_and_split_consistency():
    for spec in ["Z1", "Z12", "S6", "A6", "SL(2,5)", "D24", "PSL(2,8)"]:
        rep = co_report(built(spec))
        assert rep.co >= 0
        assert sum(n - 1 for _, n in rep.split_profile) == rep.co


def test_conjugation_invariance_of_classes():
    for spec in ["S4", "A5", "Z3:Z4"]:
        g = built(spec)
        part = class_partition(g)
        elements = g.elements()
        for x in elements[:: max(1, len(elements) // 10)]:
            for w in elements[:: max(1, len(elements) // 7)]:
                assert part.class_of(x) == part.class_of(conjugate(x, w))


def test_fingerprint_conjugate_subgroups_of_s6():
    # the point-stabilizer A5 and a transitive A5 inside S6
    stab = PermGroup(
        [from_cycles([(0, 1, 2)], 6), from_cycles([(0, 1, 2, 3, 4)], 6)]
    )
    trans = built("PSL(2,5)")
    s6 = built("S6")
    assert all(s6.contains(g) for g in stab.generators)
    assert all(s6.contains(g) for g in trans.generators)
    assert stab.order() == trans.order() == 60
    assert fingerprint(stab) == fingerprint(trans)
    # invariance under explicit conjugation inside S6
    w = from_cycles([(0, 5), (1, 3)], 6)
    conj = PermGroup([conjugate(g, w) for g in stab.generators])
    assert fingerprint(conj) == fingerprint(stab)


def test_fingerprint_separates():
    assert fingerprint(built("Z4")) != fingerprint(built("Z2 x Z2"))
    assert fingerprint(built("S4")) != fingerprint(built("Z3:Z4 x Z2"))


def test_class_table_sorted_and_reps_enumeration_first():
    for spec in ["S4", "A5", "Hol(Z5)", "SL(2,3)"]:
        g = built(spec)
        table = conjugacy_classes(g)
        keys = [
            (c.element_order, c.size, c.representative.images.tolist())
            for c in table.classes
        ]
        assert keys == sorted(keys)
        # representative = first member in the enumeration order
        position = {p.key: i for i, p in enumerate(g.elements())}
        part = class_partition(g)
        for c in table.classes:
            cid = part.class_of(c.representative)
            members = [
                i for i, x in enumerate(part.class_id) if x == cid
            ]
            assert position[c.representative.key] == min(members)


def test_theorem_groups_have_single_double_split():
    for spec in ["A5", "PSL(2,7)", "S5", "S4", "A4", "D10", "Hol(Z5)", "Z3:Z4", "Z3", "Z4"]:
        rep = co_report(built(spec))
        assert len(rep.split_profile) == 1
        assert rep.split_profile[0][1] == 2
