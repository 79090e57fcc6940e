"""Finite abstract simplicial complexes with explicit face storage.

Faces are sorted tuples of vertex indices and the empty face is always
present. Complexes are immutable after construction; links, joins, face
vectors and the face poset are all derived queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

__all__ = [
    "FVector",
    "FacePoset",
    "HVector",
    "SimplicialComplex",
    "f_vector_of",
    "h_vector_of",
]


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension, starting at the empty face: entries[0] = f_{-1}."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries or self.entries[0] != 1:
            raise ValueError("f_{-1} must be 1 (the empty face is always present)")

    def __getitem__(self, dim: int) -> int:
        """Face count in a dimension; zero above the top, IndexError below -1."""
        idx = dim + 1
        if idx < 0:
            raise IndexError(f"no faces of dimension {dim}")
        return self.entries[idx] if idx < len(self.entries) else 0

    @property
    def dim(self) -> int:
        return len(self.entries) - 2

    def polynomial(self) -> tuple[int, ...]:
        """Coefficients of f(t) = sum_i f_{i-1} t^i, ascending."""
        return self.entries


@dataclass(frozen=True)
class HVector:
    """The h-vector h_0..h_d of a complex at socle parameter d."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries or self.entries[0] != 1:
            raise ValueError("h_0 must be 1")

    @property
    def d(self) -> int:
        return len(self.entries) - 1


def h_vector_of(f: FVector, d: int) -> HVector:
    """Binomial transform of the face vector at socle parameter d.

    Requires d >= dim + 1, otherwise the transform is not defined.
    """
    if d < f.dim + 1:
        raise ValueError(f"d={d} is below complex dimension + 1 = {f.dim + 1}")
    ent = tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i - 1] for i in range(k + 1))
        for k in range(d + 1)
    )
    return HVector(ent)


def f_vector_of(h: HVector) -> FVector:
    """Inverse of h_vector_of at d = len(h) - 1; may carry trailing zeros."""
    d = h.d
    ent = tuple(
        sum(comb(d - k, j - k) * h.entries[k] for k in range(j + 1))
        for j in range(d + 1)
    )
    return FVector(ent)


def _vertex_payload(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, tuple):
        return [_vertex_payload(x) for x in v]
    return v


class SimplicialComplex:
    """A complex over an ordered vertex list; faces are sorted index tuples."""

    def __init__(self, vertices, faces, validate: bool = True):
        self.vertices = tuple(vertices)
        by_dim: dict[int, set] = {-1: {()}}
        for face in faces:
            face = tuple(face)
            by_dim.setdefault(len(face) - 1, set()).add(face)
        self._by_dim = {k: tuple(sorted(v)) for k, v in sorted(by_dim.items())}
        self._face_set = set().union(*self._by_dim.values())
        if validate:
            self._check_closed()

    def _check_closed(self):
        nv = len(self.vertices)
        for face in self._face_set:
            prev = -1
            for v in face:
                if not isinstance(v, int) or not prev < v < nv:
                    raise ValueError(f"bad face {face}: indices must be strictly "
                                     f"increasing and below {nv}")
                prev = v
            for j in range(len(face)):
                sub = face[:j] + face[j + 1:]
                if sub not in self._face_set:
                    raise ValueError(f"not closed under subsets: {face} present "
                                     f"but {sub} missing")

    @classmethod
    def from_maximal(cls, vertices, maximal) -> "SimplicialComplex":
        """Downward closure of the given generating faces."""
        faces = set()
        for m in maximal:
            m = tuple(sorted(m))
            for size in range(len(m) + 1):
                faces.update(combinations(m, size))
        return cls(vertices, faces, validate=False)

    # ---- queries ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return max(self._by_dim)

    def __contains__(self, face) -> bool:
        return tuple(face) in self._face_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self._face_set == other._face_set

    __hash__ = None

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector().entries})"

    def faces(self, dim: int | None = None):
        """Iterate faces in canonical order: by dimension, then lexicographic."""
        if dim is not None:
            yield from self._by_dim.get(dim, ())
            return
        for k in sorted(self._by_dim):
            yield from self._by_dim[k]

    def faces_of_dim(self, dim: int) -> tuple:
        return self._by_dim.get(dim, ())

    def n_faces(self, dim: int | None = None) -> int:
        if dim is not None:
            return len(self._by_dim.get(dim, ()))
        return len(self._face_set)

    def f_vector(self) -> FVector:
        return FVector(tuple(len(self._by_dim[k]) for k in sorted(self._by_dim)))

    def facets(self) -> list:
        """Faces not properly contained in another face, canonical order."""
        covered = set()
        for face in self._face_set:
            for j in range(len(face)):
                covered.add(face[:j] + face[j + 1:])
        return [f for f in self.faces() if f not in covered]

    def is_pure(self) -> bool:
        top = self.dim
        return all(len(f) - 1 == top for f in self.facets())

    def euler_reduced(self) -> int:
        """Reduced Euler characteristic, the empty face contributing -1."""
        return sum((-1) ** k * len(fs) for k, fs in self._by_dim.items())

    def link(self, face) -> "SimplicialComplex":
        """The subcomplex of faces disjoint from `face` whose union with it
        is again a face. Vertices are relabeled to the ones actually used."""
        face = tuple(face)
        if face not in self._face_set:
            raise ValueError(f"{face} is not a face of this complex")
        fs = set(face)
        sub = []
        for g in self.faces():
            if fs.intersection(g):
                continue
            if tuple(sorted(fs.union(g))) in self._face_set:
                sub.append(g)
        used = sorted({v for g in sub for v in g})
        remap = {v: i for i, v in enumerate(used)}
        return SimplicialComplex(
            (self.vertices[v] for v in used),
            (tuple(remap[v] for v in g) for g in sub),
            validate=False,
        )

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; vertices are tagged (0, v) and (1, w)."""
        verts = [(0, v) for v in self.vertices] + [(1, w) for w in other.vertices]
        off = len(self.vertices)
        faces = []
        for f in self.faces():
            for g in other.faces():
                faces.append(f + tuple(v + off for v in g))
        return SimplicialComplex(verts, faces, validate=False)

    def face_poset(self, include_empty: bool = True) -> "FacePoset":
        return FacePoset.from_faces(self._face_set, include_empty=include_empty)

    def to_json(self) -> dict:
        return {
            "vertices": [_vertex_payload(v) for v in self.vertices],
            "faces": [list(f) for f in self.faces()],
        }


@dataclass(frozen=True)
class FacePoset:
    """Face poset of a downward-closed family, ranked by cardinality.

    Cover relations connect faces differing in exactly one vertex, so they
    are enumerated by deleting single entries.
    """

    ranks: dict
    include_empty: bool

    @classmethod
    def from_faces(cls, faces, include_empty: bool = True) -> "FacePoset":
        ranks: dict[int, list] = {}
        for f in faces:
            f = tuple(f)
            if not f and not include_empty:
                continue
            ranks.setdefault(len(f), []).append(f)
        return cls({r: tuple(sorted(v)) for r, v in sorted(ranks.items())},
                   include_empty)

    def __post_init__(self):
        object.__setattr__(
            self, "_elements", frozenset(f for fs in self.ranks.values() for f in fs)
        )

    def elements(self):
        for r in sorted(self.ranks):
            yield from self.ranks[r]

    def n_elements(self) -> int:
        return len(self._elements)

    def __contains__(self, face) -> bool:
        return tuple(face) in self._elements

    @property
    def max_rank(self) -> int:
        return max(self.ranks) if self.ranks else 0

    def cover_edges(self):
        """Yield (face, subface) pairs, the face on the higher rank."""
        min_rank = min(self.ranks) if self.ranks else 0
        for r in sorted(self.ranks):
            if r == min_rank:
                continue
            for f in self.ranks[r]:
                for j in range(len(f)):
                    sub = f[:j] + f[j + 1:]
                    if sub in self._elements:
                        yield f, sub

    def n_cover_edges(self) -> int:
        return sum(1 for _ in self.cover_edges())

    def hasse_dot(self, label=None) -> str:
        """Rank-layered DOT rendering of the Hasse diagram."""
        label = label or (lambda f: str(f) if f else "{}")
        names = {}
        lines = ["digraph face_poset {", "  rankdir=BT;",
                 "  node [shape=box, fontsize=10];"]
        for r in sorted(self.ranks):
            group = []
            for i, f in enumerate(self.ranks[r]):
                names[f] = f"r{r}_{i}"
                lines.append(f'  {names[f]} [label="{label(f)}"];')
                group.append(names[f])
            lines.append("  { rank=same; " + "; ".join(group) + "; }")
        for f, sub in self.cover_edges():
            lines.append(f"  {names[sub]} -> {names[f]};")
        lines.append("}")
        return "\n".join(lines) + "\n"
