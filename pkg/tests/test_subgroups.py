import hashlib
from importlib import resources

import pytest

from cogroups.classes import co_report, fingerprint
from cogroups.errors import CapExceeded, NotNormalError, NotSubgroupError
from cogroups.group import PermGroup
from cogroups.perm import from_cycles, identity
from cogroups.subgroups import (
    center,
    centralizer_subgroup,
    derived_series_solvable,
    is_elementary_abelian,
    load_seed_file,
    normal_subgroups,
    parse_seed_text,
    quotient,
    subgroup_classes,
)

from conftest import built
from oracles import (
    all_subgroups_t,
    closure_t,
    inverses_idx_t,
    mul_table_t,
    subgroup_classes_t,
)


def oracle_subgroup_classes(spec):
    elements = closure_t([tuple(g.images) for g in built(spec).generators])
    table = mul_table_t(elements)
    subgroups = all_subgroups_t(table)
    inv = inverses_idx_t(table)
    return table, subgroups, subgroup_classes_t(table, inv, subgroups)


def test_centralizer_examples():
    a5 = built("A5")
    five = from_cycles([(0, 1, 2, 3, 4)], 5)
    two = from_cycles([(0, 1), (2, 3)], 5)
    assert centralizer_subgroup(a5, five).order() == 5
    assert centralizer_subgroup(a5, two).order() == 4
    assert centralizer_subgroup(a5, identity(5)).order() == a5.order()
    with pytest.raises(NotSubgroupError):
        centralizer_subgroup(a5, from_cycles([(0, 1)], 5))


def test_centralizer_order_matches_class_size():
    for spec in ["S4", "Hol(Z5)", "Z3:Z4"]:
        g = built(spec)
        for p in g.elements()[:: max(1, g.order() // 8)]:
            c = centralizer_subgroup(g, p)
            assert c.order() == g.order() // _class_size(g, p)


def _class_size(g, p):
    from cogroups.classes import class_partition

    part = class_partition(g)
    return int(part.sizes[part.class_of(p)])


def test_center_examples():
    assert center(built("SL(2,5)")).order() == 2
    assert center(built("S4")).order() == 1
    assert center(built("Z4")).order() == 4
    assert center(built("Z3:Z4")).order() == 2


def test_normal_subgroup_orders():
    assert [n.order() for n in normal_subgroups(built("S4")).entries] == [1, 4, 12, 24]
    assert [n.order() for n in normal_subgroups(built("A5")).entries] == [1, 60]
    # the order-4 subgroup of Z3:Z4 is cyclic and not normal
    assert [n.order() for n in normal_subgroups(built("Z3:Z4")).entries] == [
        1, 2, 3, 6, 12,
    ]


def test_normal_subgroups_against_bruteforce():
    for spec in ["S4", "Z3:Z4", "D12", "A4"]:
        table, subgroups, _ = oracle_subgroup_classes(spec)
        n = len(table)
        inv = inverses_idx_t(table)
        normal_sets = []
        for H in subgroups:
            if all(
                table[table[inv[w]][h]][w] in H for w in range(n) for h in H
            ):
                normal_sets.append(sorted(H))
        got = normal_subgroups(built(spec))
        assert sorted(len(h) for h in normal_sets) == [
            e.order() for e in got.entries
        ]


def test_normal_entries_are_conjugation_stable():
    from cogroups.perm import conjugate

    for spec in ["S4", "Z3:Z4", "SL(2,3)", "D20"]:
        g = built(spec)
        for N in normal_subgroups(g).entries:
            for x in N.generators:
                for w in g.generators:
                    assert N.contains(conjugate(x, w))


def test_normal_list_closed_under_intersection_and_join():
    for spec in ["S4", "Z3:Z4", "D12", "Z2 x Z2 x Z2"]:
        g = built(spec)
        entries = normal_subgroups(g).entries
        element_sets = [frozenset(p.key for p in N.elements()) for N in entries]
        as_set = set(element_sets)
        for i in range(len(entries)):
            for j in range(len(entries)):
                assert element_sets[i] & element_sets[j] in as_set
                join = PermGroup(
                    list(entries[i].generators) + list(entries[j].generators)
                )
                assert frozenset(p.key for p in join.elements()) in as_set


def test_elementary_abelian_examples():
    s4 = built("S4")
    v4 = next(N for N in normal_subgroups(s4).entries if N.order() == 4)
    assert is_elementary_abelian(v4) == (True, 2)
    assert is_elementary_abelian(built("Z4")) == (False, None)
    assert is_elementary_abelian(built("Z1")) == (True, None)


def test_quotient_examples():
    s4 = built("S4")
    v4 = next(N for N in normal_subgroups(s4).entries if N.order() == 4)
    q = quotient(s4, v4)
    assert q.order() == 6
    assert fingerprint(q) == fingerprint(built("S3"))

    hol = built("Hol(Z5)")
    z5 = next(N for N in normal_subgroups(hol).entries if N.order() == 5)
    q = quotient(hol, z5)
    assert q.order() == 4
    assert co_report(q).pi_e == (1, 2, 4)  # cyclic of order 4

    a4 = built("A4")
    v4a = next(N for N in normal_subgroups(a4).entries if N.order() == 4)
    assert quotient(a4, v4a).order() == 3


def test_quotient_rejects_non_normal():
    s4 = built("S4")
    z2 = PermGroup([from_cycles([(0, 1)], 4)])
    with pytest.raises(NotNormalError):
        quotient(s4, z2)
    with pytest.raises(NotSubgroupError):
        quotient(s4, built("Z2 x Z2 x Z2"))


def test_quotient_order_multiplicativity():
    for spec in ["S4", "Z3:Z4", "SL(2,3)", "D24", "Hol(Z5)"]:
        g = built(spec)
        for N in normal_subgroups(g).entries:
            assert quotient(g, N).order() * N.order() == g.order()


def test_solvability():
    assert derived_series_solvable(built("S4"))
    assert not derived_series_solvable(built("A5"))
    assert derived_series_solvable(built("Z3:Z4"))
    assert not derived_series_solvable(built("SL(2,5)"))
    assert not derived_series_solvable(built("S6"))
    assert derived_series_solvable(built("Z2 x Z2 x Z2"))


def test_subgroup_classes_s4_against_oracle():
    _, subgroups, oracle_classes = oracle_subgroup_classes("S4")
    got = subgroup_classes(built("S4"))
    assert got.n_classes == 11
    assert len(subgroups) == 30
    assert got.total_subgroups() == len(subgroups)
    assert sorted((len(H), size) for H, size in oracle_classes) == sorted(
        (e.group.order(), e.class_size) for e in got.entries
    )


def test_subgroup_classes_s5_against_oracle():
    _, subgroups, oracle_classes = oracle_subgroup_classes("S5")
    got = subgroup_classes(built("S5"), perfect_seeds=[_a5_in(5)])
    assert got.n_classes == 19
    assert len(subgroups) == 156
    assert got.total_subgroups() == 156
    assert sorted((len(H), size) for H, size in oracle_classes) == sorted(
        (e.group.order(), e.class_size) for e in got.entries
    )


def _a5_in(degree):
    return PermGroup(
        [from_cycles([(0, 1, 2)], degree), from_cycles([(0, 1, 2, 3, 4)], degree)]
    )


def test_subgroup_classes_a4():
    got = subgroup_classes(built("A4"))
    assert [(e.group.order(), e.class_size) for e in got.entries] == [
        (1, 1), (2, 3), (3, 4), (4, 1), (12, 1),
    ]


def test_subgroup_classes_solvable_ambient_needs_no_seeds():
    _, subgroups, oracle_classes = oracle_subgroup_classes("D24")
    got = subgroup_classes(built("D24"))
    assert got.n_classes == len(oracle_classes)
    assert got.total_subgroups() == len(subgroups)
    assert sorted((len(H), size) for H, size in oracle_classes) == sorted(
        (e.group.order(), e.class_size) for e in got.entries
    )


def test_subgroup_reps_live_in_ambient():
    ambient = built("S4")
    result = subgroup_classes(ambient)
    for entry in result.entries:
        for p in entry.group.elements():
            assert ambient.contains(p)
        assert len(entry.element_indices) == entry.group.order()


def test_scan_order_limit():
    with pytest.raises(CapExceeded):
        subgroup_classes(built("A8"))


def test_seed_file_round_trip(tmp_path):
    text = "4; ()\n4; (1 2 3); (1 2)(3 4)  # A4\n"
    groups = parse_seed_text(text, built("S4"))
    assert [g.order() for g in groups] == [1, 12]
    path = tmp_path / "seeds"
    path.write_text(text)
    assert [g.order() for g in load_seed_file(path, built("S4"))] == [1, 12]


def test_seed_degree_and_membership_errors():
    with pytest.raises(NotSubgroupError):
        parse_seed_text("5; (1 2)", built("S4"))
    with pytest.raises(NotSubgroupError):
        parse_seed_text("5; (1 2)", built("A5"))


def test_packaged_seed_checksums():
    # the seed files are a versioned interface: changes must be deliberate
    expected = {
        "S4.seeds": "61422bf00962da4c21dad852a7d3fb3839a8aa118d52468f9524b07ea664ff0a",
        "S5.seeds": "2df4d21644293657e04786f9eae9e1613d0219bf167547acb5c53f74b9e02e43",
        "S6.seeds": "6a3acf45c4b8d07dd4a86cc9a91b423304c7d5823a600823844d9670bad76118",
        "S7.seeds": "c1c9628d748a7589db2fcfd3a6f9533251b60ae1a957afc4e67653c4ace63adc",
        "A4.seeds": "7a2abaa2f6c9d207abf30d576ea83c377aab8fa3f312e9a4a2abcbad5cd8a416",
        "A5.seeds": "a776fccd55036a408af3ffadf1a783b1171aae6fd9d9cd7073b31f0d47761ac8",
        "A6.seeds": "b4954996242b78c57ba363936d6112acef6785fcfec6c7b0d51bce95e9a600cc",
    }
    root = resources.files("cogroups.data").joinpath("seeds")
    for name, digest in expected.items():
        text = root.joinpath(name).read_text()
        assert hashlib.sha256(text.encode()).hexdigest() == digest, name


def test_packaged_seeds_parse_and_are_perfect_subgroups():
    for ambient_spec in ["S4", "S5", "S6", "A4", "A5", "A6"]:
        ambient = built(ambient_spec)
        text = (
            resources.files("cogroups.data")
            .joinpath(f"seeds/{ambient_spec}.seeds")
            .read_text()
        )
        for seed in parse_seed_text(text, ambient):
            assert all(ambient.contains(g) for g in seed.generators)
