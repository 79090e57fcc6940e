"""Morse matching: frozen small cases, acyclicity, critical cells, zones."""

import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prewdvv.morse import (
    MorseMatching,
    acyclic_full_digraph,
    build_matching,
    characterize_critical,
    cherry_free_faces,
    cherry_free_matching,
    covers_all_faces,
    critical_census,
    matching_to_json,
    modified_hasse_dot,
    split_tower_faces,
    verify_acyclic,
)
from prewdvv.partitions import masks_compatible
from prewdvv.whitehouse import mask_faces


def test_frozen_smallest_matchings(matching):
    m3 = matching(3)
    assert m3.pairs == ()
    assert m3.critical == frozenset({()})
    assert critical_census(m3) == {-1: 1}

    m4 = matching(4)
    assert m4.pairs == (((), (12,)),)  # empty face with {{2,3}}
    assert m4.critical == frozenset({(20,), (24,)})  # {2,4} and {3,4}
    assert critical_census(m4) == {0: 2}


def test_frozen_critical_cells_at_five(matching):
    # cherries on the new leaf stacked over the two previous critical cells
    assert matching(5).critical == frozenset({
        (36, 52),  # {2,5},{2,4,5}
        (20, 40),  # {2,4},{3,5}
        (48, 52),  # {4,5},{2,4,5}
        (24, 36),  # {3,4},{2,5}
        (40, 56),  # {3,5},{3,4,5}
        (48, 56),  # {4,5},{3,4,5}
    })


def test_critical_cells_need_not_be_nested_chains(matching):
    crit = matching(5).critical
    incomparable = [
        f for f in crit
        if any(a & b == 0 for a in f for b in f if a != b)
    ]
    assert incomparable  # e.g. {2,4} with {3,5}
    # ... while every critical face is still laminar
    for f in crit:
        for a in f:
            for b in f:
                assert a == b or masks_compatible(a, b)


@pytest.mark.parametrize("n", range(3, 8))
def test_matching_partitions_and_is_acyclic(n, matching, delta):
    m = matching(n)
    assert covers_all_faces(m)
    report = verify_acyclic(m)
    assert report.acyclic and bool(report)
    assert report.cycle is None
    assert critical_census(m) == {n - 4: factorial(n - 2)}


@pytest.mark.parametrize("n", range(3, 8))
def test_characterize_critical(n, matching):
    rep = characterize_critical(matching(n))
    assert rep.ok
    assert rep.count == factorial(n - 2)
    assert rep.dimensions == (n - 4,)
    assert rep.tower_match


@pytest.mark.parametrize("n", range(3, 8))
def test_split_tower(n):
    tower = split_tower_faces(n)
    assert len(tower) == factorial(n - 2)
    assert all(len(f) == max(n - 3, 0) for f in tower)
    assert tower <= frozenset(mask_faces(n))


@pytest.mark.parametrize("n", range(4, 7))
def test_full_digraph_agrees(n, matching):
    assert acyclic_full_digraph(matching(n))


class TestMatchingValidation:
    def test_pair_must_be_a_cover(self):
        with pytest.raises(ValueError):
            MorseMatching(5, (((4,), (8, 16)),), frozenset())
        with pytest.raises(ValueError):
            MorseMatching(5, (((4,), (4, 8, 16)),), frozenset())

    def test_face_cannot_repeat(self):
        with pytest.raises(ValueError):
            MorseMatching(5, (((4,), (4, 8)), ((4,), (4, 16))), frozenset())
        with pytest.raises(ValueError):
            MorseMatching(5, (((4,), (4, 8)),), frozenset({(4,)}))

    def test_faces_and_n_pairs(self):
        m = MorseMatching(5, (((4,), (4, 8)),), frozenset({(16,)}))
        assert m.faces() == {(4,), (4, 8), (16,)}
        assert m.n_pairs() == 1


class TestCyclicMatching:
    """Pairing every vertex of a hollow triangle forward into the next edge
    creates the classic closed path; both checkers must see it."""

    def setup_method(self):
        self.faces = [(), (1,), (2,), (4,),
                      (1, 2), (2, 4), (1, 4)]
        self.m = MorseMatching(
            3,
            (((1,), (1, 2)), ((2,), (2, 4)), ((4,), (1, 4))),
            frozenset({()}),
        )

    def test_detected_with_certificate(self):
        report = verify_acyclic(self.m)
        assert not report.acyclic and not bool(report)
        cycle = report.cycle
        assert cycle is not None and len(cycle) == 3
        # walking the cycle: the next pair's lower face is a facet of this
        # pair's upper face, and differs from this pair's own lower face
        for (lo, hi), (nlo, nhi) in zip(cycle, cycle[1:] + cycle[:1]):
            assert set(nlo) < set(hi)
            assert nlo != lo

    def test_full_digraph_agrees_on_failure(self):
        assert not acyclic_full_digraph(self.m, faces=self.faces)


def _tree_matching(K):
    """Classical spanning-tree matching on a connected graph complex: each
    non-root vertex pairs with its tree edge, the root with the empty face."""
    edges = list(K.faces(dim=1))
    nbr = {v for e in edges for v in e}
    adj = {v: [] for v in nbr}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    root = min(nbr)
    parent_edge = {}
    seen = {root}
    queue = [root]
    while queue:
        v = queue.pop(0)
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent_edge[w] = tuple(sorted((v, w)))
                queue.append(w)
    pairs = [((), (root,))]
    pairs += [((v,), e) for v, e in parent_edge.items()]
    tree_edges = set(parent_edge.values())
    critical = frozenset(e for e in edges if e not in tree_edges)
    return MorseMatching(5, tuple(pairs), critical)


def test_spanning_tree_matching_gives_same_census(delta, matching):
    """A completely different matching on the same complex must land on the
    same critical census - six loops survive the ten-vertex graph."""
    K = delta(5)
    tm = _tree_matching(K)
    faces = set(K.faces())
    assert tm.faces() == faces
    assert verify_acyclic(tm).acyclic
    assert acyclic_full_digraph(tm, faces=faces)
    assert critical_census(tm) == critical_census(matching(5)) == {1: 6}


def _random_matching(faces, seed):
    rnd = random.Random(seed)
    order = list(faces)
    rnd.shuffle(order)
    by_len = {}
    for f in faces:
        by_len.setdefault(len(f), []).append(f)
    free = set(faces)
    pairs = []
    for f in order:
        if f not in free:
            continue
        cofaces = [g for g in by_len.get(len(f) + 1, ())
                   if g in free and set(f) < set(g)]
        if cofaces and rnd.random() < 0.9:
            g = rnd.choice(sorted(cofaces))
            pairs.append((f, g))
            free.discard(f)
            free.discard(g)
    return MorseMatching(5, tuple(pairs), frozenset(free))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_checkers_agree_on_random_matchings(seed):
    faces = sorted(mask_faces(5), key=lambda f: (len(f), f))
    m = _random_matching(faces, seed)
    fast = verify_acyclic(m)
    slow = acyclic_full_digraph(m, faces=faces)
    assert fast.acyclic == slow
    if not fast.acyclic:
        cycle = fast.cycle
        assert len(cycle) >= 2
        for (lo, hi), (nlo, nhi) in zip(cycle, cycle[1:] + cycle[:1]):
            assert set(nlo) < set(hi) and nlo != lo


class TestCherryFreeZone:
    @pytest.mark.parametrize("n", [5, 6])
    def test_zone_is_fully_paired(self, n):
        zone = cherry_free_faces(n)
        m = cherry_free_matching(n)
        assert not m.critical
        assert m.faces() == zone
        assert verify_acyclic(m).acyclic

    def test_zone_is_downward_closed(self):
        zone = cherry_free_faces(6)
        for f in zone:
            for skip in range(len(f)):
                assert f[:skip] + f[skip + 1:] in zone

    def test_requires_at_least_four(self):
        with pytest.raises(ValueError):
            cherry_free_matching(3)


class TestExports:
    def test_matching_to_json_frozen_four(self, matching):
        doc = matching_to_json(matching(4))
        assert doc == {
            "n": 4,
            "pairs": [[[], [[2, 3]]]],
            "critical": [[[2, 4]], [[3, 4]]],
        }

    def test_modified_hasse_dot(self, matching):
        dot = modified_hasse_dot(matching(4))
        assert dot.startswith("digraph")
        assert dot.count("peripheries=2") == 2
        assert dot.count("style=bold") == 1
        assert "rankdir=BT" in dot


def test_build_matching_rejects_small_sizes():
    with pytest.raises(ValueError):
        build_matching(2)
