import math

import pytest

from excseq import build_diagram, category, m_sequence_poly
from excseq.shiftcat import (ShiftedObject, compatible, enumerate_clusters,
                             ordered_tuples, shifted_objects)
from excseq.wide import ambient, perp, relative_projectives

from conftest import P1, S1, S2


def test_objects_a2_m1(a2):
    objs = shifted_objects(a2, None, 1)
    assert len(objs) == 5
    assert set(objs) == {ShiftedObject(S1, 0), ShiftedObject(S2, 0), ShiftedObject(P1, 0),
                         ShiftedObject(S2, 1), ShiftedObject(P1, 1)}


def test_objects_a2_m2(a2):
    assert len(shifted_objects(a2, None, 2)) == 8  # 3 + 3 + 2


def test_objects_m0_are_projectives(a2):
    objs = shifted_objects(a2, None, 0)
    assert objs == (ShiftedObject(S2, 0), ShiftedObject(P1, 0))
    w = perp(a2, [P1])
    assert shifted_objects(a2, w, 0) == (ShiftedObject(S2, 0),)


@pytest.mark.parametrize("tag,m", [("A2", 1), ("A3", 2), ("D4", 1)])
def test_object_count_formula(tag, m):
    cat = category(tag)
    for scope in [ambient(cat)] + [perp(cat, [r]) for r in cat.roots]:
        objs = shifted_objects(cat, scope, m)
        assert len(relative_projectives(cat, scope)) == scope.rank
        assert len(objs) == len(scope.objects) * m + scope.rank


def test_compatibility_cases(a2):
    assert compatible(a2, ShiftedObject(S1, 0), ShiftedObject(S2, 1))
    assert not compatible(a2, ShiftedObject(S2, 1), ShiftedObject(P1, 0))
    assert not compatible(a2, ShiftedObject(P1, 0), ShiftedObject(P1, 0))
    assert not compatible(a2, ShiftedObject(P1, 0), ShiftedObject(P1, 1))


def test_compatibility_symmetric_irreflexive(a3):
    objs = shifted_objects(a3, None, 2)
    for a in objs:
        assert not compatible(a3, a, a)
        for b in objs:
            assert compatible(a3, a, b) == compatible(a3, b, a)


def test_clusters_a2_m1(a2):
    clusters = enumerate_clusters(a2, 1)
    want = {
        frozenset({ShiftedObject(S1, 0), ShiftedObject(P1, 0)}),
        frozenset({ShiftedObject(P1, 0), ShiftedObject(S2, 0)}),
        frozenset({ShiftedObject(S1, 0), ShiftedObject(S2, 1)}),
        frozenset({ShiftedObject(S2, 0), ShiftedObject(P1, 1)}),
        frozenset({ShiftedObject(P1, 1), ShiftedObject(S2, 1)}),
    }
    assert {frozenset(c) for c in clusters} == want


@pytest.mark.parametrize("tag,m", [("A2", 0), ("A2", 1), ("A2", 2),
                                   ("A3", 0), ("A3", 1), ("A3", 2),
                                   ("D4", 1), ("D4", 2), ("A4", 2)])
def test_cluster_counts_match_polynomial(tag, m):
    cat = category(tag)
    g = m_sequence_poly(build_diagram(tag))
    assert len(enumerate_clusters(cat, m)) * math.factorial(cat.n) == g(m)


@pytest.mark.parametrize("tag,m", [("A2", 0), ("A2", 1), ("A2", 2),
                                   ("A3", 0), ("A3", 1), ("A3", 2)])
def test_ordered_complete_tuples_match_polynomial(tag, m):
    cat = category(tag)
    g = m_sequence_poly(build_diagram(tag))
    assert len(ordered_tuples(cat, m, cat.n)) == g(m)


def test_single_zero_cluster(a3):
    clusters = enumerate_clusters(a3, 0)
    assert len(clusters) == 1
    assert all(o.level == 0 and a3.is_projective(o.root) for o in clusters[0])
