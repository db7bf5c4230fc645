from __future__ import annotations

import pytest

from fpdata.groups import (
    ICOS,
    OCT,
    TET,
    Cyclic,
    Dihedral,
    InvalidParameter,
    all_subgroups,
    build_group,
    centralizer,
    check_group_axioms,
    identify,
    normalizer,
    subgroup_classes,
    units_up_to_sign,
)


@pytest.mark.parametrize(
    "family,order",
    [(Cyclic(1), 1), (Cyclic(7), 7), (Dihedral(3), 6), (Dihedral(10), 20), (TET, 12), (OCT, 24), (ICOS, 60)],
)
def test_orders_and_axioms(family, order):
    G = build_group(family)
    assert G.order == order
    check_group_axioms(G)


@pytest.mark.parametrize("family", [Cyclic(0), Dihedral(0)])
def test_parameter_zero_rejected(family):
    with pytest.raises(InvalidParameter):
        build_group(family)


def test_dihedral_id_layout():
    m = 5
    G = build_group(Dihedral(m))
    orders = G.element_orders
    assert all(orders[m + i] == 2 for i in range(m))
    assert orders[1] == m
    # rotations are exactly ids 0..m-1
    assert G.closure([1]) == frozenset(range(m))


def _labels(G, noncyclic=True):
    return [c.label for c in subgroup_classes(G, noncyclic_only=noncyclic)]


def test_tet_noncyclic_classes():
    assert _labels(build_group(TET)) == ["A4", "D2"]


def test_oct_noncyclic_classes():
    assert _labels(build_group(OCT)) == ["S4", "A4", "D4", "D3", "D2", "D2s"]


def test_icos_noncyclic_classes():
    assert _labels(build_group(ICOS)) == ["A5", "A4", "D5", "D3", "D2"]


def test_dihedral4_marked_kleinians():
    assert _labels(build_group(Dihedral(4))) == ["D4", "D2u", "D2d"]


def test_normal_kleinian_in_oct():
    classes = {c.label: c for c in subgroup_classes(build_group(OCT))}
    assert classes["D2s"].is_normal
    assert not classes["D2"].is_normal
    assert classes["D2"].class_size == 3


def test_centralizers():
    G = build_group(OCT)
    assert centralizer(G, {0}) == frozenset(G.elements())
    # a half-turn whose square root lies in G: about a coordinate axis
    x = next(
        x for x in G.elements()
        if G.element_orders[x] == 2 and any(G.power(y, 2) == x for y in G.elements() if G.element_orders[y] == 4)
    )
    C = centralizer(G, {x})
    assert len(C) == 8 and identify(G, C) == Dihedral(4)

    D3 = build_group(Dihedral(3))
    assert centralizer(D3, {3}) == frozenset({0, 3})


def test_normalizers_in_dihedral():
    # m/k even: a D3 in D6 is normalized by a D6
    G = build_group(Dihedral(6))
    H = G.closure([2, 6])
    assert identify(G, H) == Dihedral(3)
    N = normalizer(G, H)
    assert len(N) == 12 and identify(G, N) == Dihedral(6)

    D3 = build_group(Dihedral(3))
    assert normalizer(D3, D3.elements()) == frozenset(D3.elements())

    # m/k odd: self-normalizing
    G = build_group(Dihedral(9))
    H = G.closure([3, 9])
    assert normalizer(G, H) == H


@pytest.mark.parametrize("m", range(1, 31))
def test_dihedral_subgroup_counts(m):
    G = build_group(Dihedral(m))
    subs = all_subgroups(G)
    for k in range(1, m + 1):
        if m % k:
            continue
        dk = [S for S in subs if identify(G, S) == Dihedral(k)] if k >= 2 else [
            S for S in subs if len(S) == 2 and any(x >= m for x in S)
        ]
        assert len(dk) == m // k
        if k >= 2:
            classes = [c for c in subgroup_classes(G) if c.iso_type == Dihedral(k)]
            assert len(classes) == (2 if (m // k) % 2 == 0 else 1)


@pytest.mark.parametrize("m", [4, 6, 8, 12, 18, 24, 30])
def test_marked_classes_meet_in_cyclic(m):
    G = build_group(Dihedral(m))
    for c in subgroup_classes(G, noncyclic_only=True):
        if c.marker != "u":
            continue
        k = c.iso_type.n
        partner = next(d for d in subgroup_classes(G) if d.iso_type == c.iso_type and d.marker == "d")
        rotations = frozenset(range(0, m, m // k))
        for A in c.conjugates:
            for B in partner.conjugates:
                assert A & B == rotations


def test_subgroup_classes_deterministic():
    G = build_group(Dihedral(12))
    first = [(c.label, c.representative) for c in subgroup_classes(G)]
    again = [(c.label, c.representative) for c in subgroup_classes(G)]
    assert first == again


@pytest.mark.parametrize("family", [Dihedral(6), TET, OCT, ICOS])
def test_subgroup_class_invariants(family):
    G = build_group(family)
    for c in subgroup_classes(G):
        H = c.representative
        assert 0 in H and G.is_subgroup(H)
        assert H <= c.normalizer
        assert c.class_size == G.order // len(c.normalizer)
        assert identify(G, H) == c.iso_type


@pytest.mark.parametrize("k,expected", [(2, [1]), (3, [1]), (5, [1, 2]), (12, [1, 5]), (10, [1, 3])])
def test_units_up_to_sign(k, expected):
    assert units_up_to_sign(k) == expected
