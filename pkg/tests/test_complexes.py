"""Generic simplicial complex machinery: vectors, closure, links, joins."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prewdvv.complexes import (
    FacePoset,
    FVector,
    HVector,
    SimplicialComplex,
    f_vector_of,
    h_vector_of,
)


class TestFVector:
    def test_must_start_with_one(self):
        with pytest.raises(ValueError):
            FVector((2, 3))

    def test_getitem_by_dimension(self):
        f = FVector((1, 10, 15))
        assert f[-1] == 1
        assert f[0] == 10
        assert f[1] == 15
        assert f[5] == 0
        with pytest.raises(IndexError):
            f[-2]

    def test_dim(self):
        assert FVector((1, 10, 15)).dim == 1
        assert FVector((1,)).dim == -1


class TestHTransform:
    def test_triangle_boundary(self):
        # hollow triangle: f = (1, 3, 3), d = 2 -> h = (1, 1, 1)
        assert h_vector_of(FVector((1, 3, 3)), 2).entries == (1, 1, 1)

    def test_requires_d_at_least_dim_plus_one(self):
        with pytest.raises(ValueError):
            h_vector_of(FVector((1, 3, 3)), 1)

    def test_h0_must_be_one(self):
        with pytest.raises(ValueError):
            HVector((2, 1))

    @given(st.lists(st.integers(min_value=-50, max_value=50),
                    min_size=0, max_size=6))
    def test_roundtrip(self, tail):
        f = FVector((1, *tail))
        d = f.dim + 1 + 2  # any d above the minimum works
        h = h_vector_of(f, d)
        back = f_vector_of(h)
        assert back.entries[:len(f.entries)] == f.entries
        assert all(x == 0 for x in back.entries[len(f.entries):])


def _triangle_boundary():
    return SimplicialComplex.from_maximal("abc", [(0, 1), (1, 2), (0, 2)])


class TestSimplicialComplex:
    def test_not_closed_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex("ab", [(0, 1)])  # vertices (0,) and (1,) missing

    def test_bad_indices_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex("ab", [(1, 0), (0,), (1,)])
        with pytest.raises(ValueError):
            SimplicialComplex("ab", [(0, 2), (0,), (2,)])

    def test_from_maximal_closes_downward(self):
        K = SimplicialComplex.from_maximal("abc", [(0, 1, 2)])
        assert K.n_faces() == 8
        assert (0, 2) in K
        assert () in K

    def test_f_vector_and_dim(self):
        K = _triangle_boundary()
        assert K.f_vector().entries == (1, 3, 3)
        assert K.dim == 1

    def test_facets_and_purity(self):
        K = _triangle_boundary()
        assert K.facets() == [(0, 1), (0, 2), (1, 2)]
        assert K.is_pure()
        L = SimplicialComplex.from_maximal("abcd", [(0, 1, 2), (3,)])
        assert L.facets() == [(3,), (0, 1, 2)]
        assert not L.is_pure()

    def test_euler_reduced(self):
        assert _triangle_boundary().euler_reduced() == -1  # a circle
        cone = SimplicialComplex.from_maximal("abc", [(0, 1), (0, 2)])
        assert cone.euler_reduced() == 0

    def test_link_of_vertex_in_triangle_boundary(self):
        K = _triangle_boundary()
        L = K.link((0,))
        assert L.vertices == ("b", "c")
        assert L.f_vector().entries == (1, 2)

    def test_link_requires_a_face(self):
        with pytest.raises(ValueError):
            _triangle_boundary().link((0, 1, 2))

    def test_join_two_edges_is_solid_tetrahedron(self):
        edge = SimplicialComplex.from_maximal("ab", [(0, 1)])
        K = edge.join(edge)
        assert K.f_vector().entries == (1, 4, 6, 4, 1)
        assert K.dim == 3

    def test_join_f_polynomial_multiplies(self):
        K = _triangle_boundary()
        L = SimplicialComplex.from_maximal("de", [(0,), (1,)])
        fk, fl = K.f_vector().polynomial(), L.f_vector().polynomial()
        prod = [0] * (len(fk) + len(fl) - 1)
        for i, a in enumerate(fk):
            for j, b in enumerate(fl):
                prod[i + j] += a * b
        assert K.join(L).f_vector().entries == tuple(prod)

    def test_equality_and_repr(self):
        K = _triangle_boundary()
        assert K == _triangle_boundary()
        assert K != SimplicialComplex.from_maximal("abc", [(0, 1, 2)])
        assert "dim=1" in repr(K)

    def test_faces_iteration_order(self):
        K = _triangle_boundary()
        listed = list(K.faces())
        assert listed == sorted(listed, key=lambda f: (len(f), f))
        assert list(K.faces(dim=1)) == [(0, 1), (0, 2), (1, 2)]

    def test_to_json(self):
        doc = _triangle_boundary().to_json()
        assert doc["vertices"] == ["a", "b", "c"]
        assert [0, 1] in doc["faces"]


class TestFacePoset:
    def test_cover_edges_of_a_triangle(self):
        K = SimplicialComplex.from_maximal("abc", [(0, 1, 2)])
        poset = K.face_poset()
        assert poset.n_elements() == 8
        # each k-face covers k faces below it, plus vertices covering empty
        assert poset.n_cover_edges() == 3 * 1 + 3 * 2 + 1 * 3
        for face, sub in poset.cover_edges():
            assert len(face) == len(sub) + 1
            assert set(sub) <= set(face)

    def test_without_empty_face(self):
        K = SimplicialComplex.from_maximal("abc", [(0, 1, 2)])
        poset = K.face_poset(include_empty=False)
        assert poset.n_elements() == 7
        assert () not in poset

    def test_hasse_dot_mentions_every_face(self):
        K = SimplicialComplex.from_maximal("ab", [(0, 1)])
        dot = K.face_poset().hasse_dot()
        assert dot.startswith("digraph")
        assert "rank=same" in dot
