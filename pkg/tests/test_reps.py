from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from fpdata.groups import ICOS, OCT, TET, Cyclic, Dihedral, normalizer, subgroup_classes
from fpdata.reps import (
    conjugate_pair,
    conjugate_rep,
    faithful_rep_classes,
    pair_class_basis,
    rep_classes_of,
    stabilizer_direct,
    standard_rep_class,
)
from fpdata.rotations import build_model


@pytest.mark.parametrize(
    "iso,labels",
    [
        (Dihedral(5), ["1/5", "2/5"]),
        (TET, ["std"]),
        (OCT, ["std"]),
        (ICOS, ["+", "-"]),
        (Dihedral(12), ["1/12", "5/12"]),
        (Dihedral(2), ["std"]),
        (Cyclic(2), ["1/2"]),
        (Cyclic(7), ["1/7", "2/7", "3/7"]),
    ],
)
def test_faithful_rep_classes(iso, labels):
    assert [r.label for r in faithful_rep_classes(iso)] == labels


def _phi(k):
    return sum(1 for a in range(1, k + 1) if gcd(a, k) == 1)


@pytest.mark.parametrize("k", range(3, 25))
def test_cyclic_rep_count(k):
    assert len(faithful_rep_classes(Dihedral(k))) == _phi(k) // 2


@pytest.mark.parametrize(
    "label,chirality,expected",
    [
        ("A4", None, ["A4:std", "D2:std"]),
        ("S4", None, ["S4:std", "A4:std", "D4:1/4", "D3:1/3", "D2:std", "D2s:std"]),
        ("A5", "+", ["A5:+", "A5:-", "A4:std", "D5:+", "D5:-", "D3:1/3", "D2:std"]),
        ("A5", "-", ["A5:+", "A5:-", "A4:std", "D5:+", "D5:-", "D3:1/3", "D2:std"]),
    ],
)
def test_platonic_bases(label, chirality, expected):
    family = {"A4": TET, "S4": OCT, "A5": ICOS}[label]
    basis = pair_class_basis(build_model(family, chirality))
    assert list(basis.labels) == expected


def test_dihedral_basis_labels():
    assert list(pair_class_basis(build_model(Dihedral(2))).labels) == ["D2:std"]
    assert list(pair_class_basis(build_model(Dihedral(4))).labels) == ["D4:1/4", "D2u:std", "D2d:std"]
    labels = pair_class_basis(build_model(Dihedral(12))).labels
    assert len(labels) == 9
    assert {"D12:1/12", "D12:5/12", "D6u:1/6", "D6d:1/6", "D4:1/4", "D3u:1/3", "D3d:1/3", "D2u:std", "D2d:std"} == set(labels)


def _predicted_size(m):
    total = 0
    for k in range(2, m + 1):
        if m % k == 0:
            r = 1 if k == 2 else _phi(k) // 2
            total += r * (2 if (m // k) % 2 == 0 else 1)
    return total


@pytest.mark.parametrize("m", range(2, 201))
def test_basis_size_formula(m):
    assert _predicted_size(m) == m // 2 + (m // 4 if m % 2 == 0 else 0)


@pytest.mark.parametrize("m", range(2, 41))
def test_dihedral_basis_size(m):
    assert len(pair_class_basis(build_model(Dihedral(m)))) == _predicted_size(m)


MODELS = [
    build_model(Dihedral(6)),
    build_model(Dihedral(8)),
    build_model(Dihedral(9)),
    build_model(TET),
    build_model(OCT),
    build_model(ICOS, "+"),
    build_model(ICOS, "-"),
]
IDS = ["D6", "D8", "D9", "A4", "S4", "A5+", "A5-"]


@pytest.mark.parametrize("model", MODELS, ids=IDS)
def test_reps_are_faithful(model):
    G = model.group
    for pair in pair_class_basis(model):
        for x, t in pair.rep.angles:
            if x == 0:
                assert t == 0
            else:
                assert t != 0 and t.denominator == G.element_orders[x]


@pytest.mark.parametrize("model", MODELS, ids=IDS)
def test_stabilizer_two_ways(model):
    G = model.group
    for pair in pair_class_basis(model):
        H = pair.subgroup.representative
        direct = stabilizer_direct(model, H, pair.rep)
        N = normalizer(G, H)
        via_normalizer = frozenset(g for g in N if conjugate_rep(model, g, pair.rep) == pair.rep)
        assert direct == via_normalizer == pair.stabilizer
        assert H <= pair.stabilizer
        assert len(N) % pair.stabilizer_order == 0


@pytest.mark.parametrize("model", MODELS, ids=IDS)
def test_pairs_pairwise_inequivalent(model):
    G = model.group
    pairs = list(pair_class_basis(model))
    for i, p in enumerate(pairs):
        H = p.subgroup.representative
        images = {conjugate_pair(model, g, H, p.rep) for g in G.elements()}
        for q in pairs[i + 1:]:
            Q = q.subgroup.representative
            assert not any(K == Q and rep == q.rep for K, rep in images)


@pytest.mark.parametrize("model", MODELS, ids=IDS)
def test_basis_covers_every_pair(model):
    basis = pair_class_basis(model)
    for cls in subgroup_classes(model.group, noncyclic_only=True):
        for H in cls.conjugates:
            for rep in rep_classes_of(model, H):
                i = basis.index_of(H, rep)
                assert basis.pairs[i].subgroup.iso_type == cls.iso_type


@pytest.mark.parametrize("model", MODELS[:5], ids=IDS[:5])
def test_conjugation_is_an_action(model):
    G = model.group
    pair = pair_class_basis(model).pairs[-1]
    H, rep = pair.subgroup.representative, pair.rep
    for g in G.elements():
        for h in G.elements():
            K1, r1 = conjugate_pair(model, G.mul[g][h], H, rep)
            K2, r2 = conjugate_pair(model, g, *conjugate_pair(model, h, H, rep))
            assert K1 == K2 and r1 == r2


def test_conjugate_pair_examples():
    M = build_model(ICOS, "+")
    D5 = next(c for c in subgroup_classes(M.group) if c.label == "D5").representative
    plus = standard_rep_class(M, D5)
    assert plus.label == "+"
    assert conjugate_pair(M, 0, D5, plus) == (D5, plus)
    for g in normalizer(M.group, D5):
        assert conjugate_rep(M, g, plus) == plus

    S4 = build_model(OCT)
    for cls in subgroup_classes(S4.group):
        if str(cls.iso_type) != "D2":
            continue
        rep = standard_rep_class(S4, cls.representative)
        for g in S4.group.elements():
            K, r = conjugate_pair(S4, g, cls.representative, rep)
            assert r.label == "std" and r == standard_rep_class(S4, K)


def test_standard_rep_examples():
    M = build_model(ICOS, "-")
    assert standard_rep_class(M, M.group.elements()).label == "-"
    plus = build_model(ICOS, "+")
    x = next(x for x in plus.group.elements() if plus.turn_of[x] == Fraction(1, 5))
    rep = standard_rep_class(plus, plus.group.closure([x]))
    assert rep.turn[x] == Fraction(1, 5)
    assert rep.turn[plus.group.power(x, 2)] == Fraction(2, 5)
    S4 = build_model(OCT)
    D2 = next(c for c in subgroup_classes(S4.group) if c.label == "D2").representative
    rep = standard_rep_class(S4, D2)
    assert rep.label == "std"
    assert sorted(rep.turn.values()) == [0, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)]
