"""The Whitehouse complex: direct laminar enumeration, the five growth moves,
forest pictures of faces, links, and the face-count recurrences.

A face over the ground set {2,...,n} is a family of vertex blocks that is
pairwise nested-or-disjoint (laminar). Drawn as a forest with leaves 2..n and
one internal node per block, a face of dimension i has i+1 internal nodes.
The complex is pure of dimension n-4 with (2n-5)!! facets, and it rebuilds
recursively: every face of the (n+1)-st complex arises from exactly one face
of the n-th under exactly one of five moves that insert the new leaf n+1.

Faces travel in two representations. The public `Face` carries BlockSet
blocks; the engine-level functions work on "mask faces", tuples of block
bitmasks sorted as integers, which is what the Morse and homology layers
consume in bulk.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .complexes import FVector, HVector, SimplicialComplex
from .partitions import (
    BlockSet,
    ground_mask,
    mask_of,
    masks_compatible,
    members_of,
    vertices,
)

__all__ = [
    "Face",
    "Forest",
    "add_block_above",
    "add_block_around_all",
    "add_leaf_into",
    "add_leaf_outside",
    "build_direct",
    "build_recursive",
    "expand_level",
    "f_recurrence",
    "facet_count",
    "forest_of",
    "grow_above",
    "grow_enclose",
    "grow_into",
    "grow_outside",
    "grow_split",
    "h_recurrence",
    "link_complex",
    "link_decomposition",
    "link_wedge_profile",
    "mask_faces",
    "next_level",
    "split_leaf",
    "total_face_count",
    "vertex_masks",
]

MaskFace = tuple  # tuple of block bitmasks, sorted as integers


# ---- direct enumeration ---------------------------------------------------

def vertex_masks(n: int) -> tuple[int, ...]:
    """Vertex blocks as bitmasks, in canonical vertex order."""
    return tuple(v.mask for v in vertices(n))


def _laminar_index_faces(vmasks) -> list[tuple[int, ...]]:
    """All pairwise-compatible index families over the given blocks.

    Depth-first extension in index order; since laminarity is a pairwise
    condition, pruning against the incoming block alone is sound. The
    candidate sets are bitmasks over vertex indices, so each extension step
    is a couple of big-int ANDs.
    """
    nv = len(vmasks)
    compat = [0] * nv
    for i in range(nv):
        mi = vmasks[i]
        for j in range(i + 1, nv):
            if masks_compatible(mi, vmasks[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    out = [()]

    def grow(prefix, allowed):
        m = allowed
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            face = prefix + (v,)
            out.append(face)
            # candidates beyond v that stay compatible with v
            grow(face, allowed & compat[v] & -(low << 1))

    if nv:
        grow((), (1 << nv) - 1)
    return out


def build_direct(n: int) -> SimplicialComplex:
    """The whole complex by depth-first extension of laminar families."""
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    if n == 3:
        return SimplicialComplex((), [()], validate=False)
    return SimplicialComplex(vertices(n), _laminar_index_faces(vertex_masks(n)),
                             validate=False)


def mask_faces(n: int) -> set[MaskFace]:
    """Every face as a mask face (blocks sorted as integers)."""
    vmasks = vertex_masks(n)
    return {tuple(sorted(vmasks[i] for i in f))
            for f in _laminar_index_faces(vmasks)}


# ---- faces and forests ----------------------------------------------------

@dataclass(frozen=True)
class Face:
    """A face: canonically sorted, pairwise nested-or-disjoint blocks."""

    n: int
    blocks: tuple[BlockSet, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks))
        object.__setattr__(self, "blocks", blocks)
        for b in blocks:
            if b.n != self.n:
                raise ValueError(f"block {b} has ambient size {b.n}, face has {self.n}")
        for i, a in enumerate(blocks):
            for b in blocks[i + 1:]:
                if a.mask == b.mask:
                    raise ValueError(f"duplicate block {a}")
                if not masks_compatible(a.mask, b.mask):
                    raise ValueError(f"blocks {a} and {b} cross")

    @classmethod
    def from_members(cls, n: int, block_members) -> "Face":
        return cls(n, tuple(BlockSet.from_members(n, m) for m in block_members))

    @classmethod
    def from_masks(cls, n: int, masks) -> "Face":
        return cls(n, tuple(BlockSet(n, m) for m in masks))

    @property
    def dim(self) -> int:
        return len(self.blocks) - 1

    def mask_tuple(self) -> MaskFace:
        return tuple(sorted(b.mask for b in self.blocks))

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b.members) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict) -> "Face":
        return cls.from_members(obj["n"], obj["blocks"])

    def __repr__(self) -> str:
        inner = ",".join("{%s}" % ",".join(map(str, b.members)) for b in self.blocks)
        return f"Face(n={self.n}, {{{inner}}})"


@dataclass
class Forest:
    """Forest picture of a face: leaves 2..n, one internal node per block.

    Bare leaves (not inside any block) count as their own components. The
    child count of a block includes both its maximal sub-blocks and the
    leaves it covers directly.
    """

    n: int
    roots: tuple
    children: dict

    @property
    def component_count(self) -> int:
        return len(self.roots)

    def child_count(self, block: BlockSet) -> int:
        return len(self.children[block])

    def child_counts(self) -> dict:
        return {b: len(kids) for b, kids in self.children.items()}

    def to_dot(self) -> str:
        def node_id(x):
            if isinstance(x, BlockSet):
                return "b_" + "_".join(map(str, x.members))
            return f"l{x}"

        def node_label(x):
            if isinstance(x, BlockSet):
                return "{%s}" % ",".join(map(str, x.members))
            return str(x)

        lines = ["digraph forest {", "  node [shape=plaintext, fontsize=11];"]
        seen = []
        for root in self.roots:
            seen.append(root)
        for b, kids in self.children.items():
            seen.extend(kids)
        for x in dict.fromkeys(list(self.children) + seen):
            lines.append(f'  {node_id(x)} [label="{node_label(x)}"];')
        for b, kids in self.children.items():
            for k in kids:
                lines.append(f"  {node_id(b)} -> {node_id(k)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _display_key(x):
    return x.members if isinstance(x, BlockSet) else (x,)


def forest_of(face: Face) -> Forest:
    """Nest the blocks of a face into their forest."""
    blocks = sorted(face.blocks, key=lambda b: b.size)
    parent = {}
    for idx, b in enumerate(blocks):
        for p in blocks[idx + 1:]:
            # supersets of b form a chain, so the first hit is the parent
            if b.mask | p.mask == p.mask:
                parent[b] = p
                break
    kids: dict = {b: [] for b in face.blocks}
    roots: list = []
    for b in blocks:
        (kids[parent[b]] if b in parent else roots).append(b)
    for leaf in range(2, face.n + 1):
        bit = 1 << leaf
        home = None
        for b in blocks:  # ascending size: first block containing the leaf is minimal
            if b.mask & bit:
                home = b
                break
        (kids[home] if home is not None else roots).append(leaf)
    roots.sort(key=_display_key)
    children = {b: tuple(sorted(ks, key=_display_key)) for b, ks in kids.items()}
    return Forest(face.n, tuple(roots), children)


def link_decomposition(face: Face) -> tuple[int, ...]:
    """Sizes of the join factors of the face link, sorted ascending.

    The link is a join of one smaller Whitehouse complex per forest node:
    size c+1 for the component level and c(T)+1 for each block T.
    """
    fr = forest_of(face)
    out = [fr.component_count + 1]
    out.extend(len(kids) + 1 for kids in fr.children.values())
    return tuple(sorted(out))


def link_wedge_profile(face: Face) -> tuple[int, int]:
    """Dimension and sphere count of the wedge the face link collapses to."""
    factors = link_decomposition(face)
    dim = sum(m - 4 for m in factors) + len(factors) - 1
    count = 1
    for m in factors:
        count *= factorial(m - 2)
    return dim, count


def link_complex(n: int, face: Face) -> SimplicialComplex:
    """The link of a face, built directly from laminar enumeration.

    A family G is in the link exactly when every block of G is compatible
    with every block of the face and none coincides, so the link is itself
    a laminar enumeration over the surviving vertices.
    """
    if face.n != n:
        raise ValueError(f"face has ambient size {face.n}, expected {n}")
    fmasks = face.mask_tuple()
    taken = set(fmasks)
    verts = [v for v in vertices(n)
             if v.mask not in taken
             and all(masks_compatible(v.mask, m) for m in fmasks)]
    faces = _laminar_index_faces(tuple(v.mask for v in verts))
    return SimplicialComplex(verts, faces, validate=False)


# ---- the five growth moves (mask-face engine) ------------------------------

def grow_outside(face: MaskFace, n: int) -> MaskFace:
    """Leaf n+1 joins as a bare new component; blocks are untouched."""
    return face


def grow_enclose(face: MaskFace, n: int) -> MaskFace:
    """A new block {2,...,n} wraps everything old; leaf n+1 stays outside."""
    return tuple(sorted(face + (ground_mask(n),)))


def grow_into(face: MaskFace, block: int, n: int) -> MaskFace:
    """Leaf n+1 becomes a direct child of `block`: it joins that block and
    every block above it."""
    new = 1 << (n + 1)
    return tuple(sorted((t | new) if block | t == t else t for t in face))


def grow_above(face: MaskFace, block: int, n: int) -> MaskFace:
    """A new parent over `block` adopts leaf n+1 as a sibling of it."""
    new = 1 << (n + 1)
    return tuple(sorted(
        [block] + [(t | new) if block | t == t else t for t in face]
    ))


def grow_split(face: MaskFace, leaf: int, n: int) -> MaskFace:
    """Leaf `leaf` turns into the cherry {leaf, n+1}."""
    new = 1 << (n + 1)
    bit = 1 << leaf
    return tuple(sorted(
        [bit | new] + [(t | new) if t & bit else t for t in face]
    ))


def next_level(faces, n: int) -> list[MaskFace]:
    """All images of the five moves applied to faces of ambient size n."""
    out = []
    for f in faces:
        out.append(grow_outside(f, n))
        out.append(grow_enclose(f, n))
        for s in f:
            out.append(grow_into(f, s, n))
            out.append(grow_above(f, s, n))
        for i in range(2, n + 1):
            out.append(grow_split(f, i, n))
    return out


def expand_level(faces, n: int) -> dict:
    """Images of the five moves with provenance tags; collisions abort.

    Returns {mask_face: (tag, param)} where param is a member tuple for
    into/above, the split leaf for split, and None otherwise. A successful
    expansion certifies that the five images are pairwise disjoint and each
    move is injective.
    """
    out: dict = {}

    def put(face, tag, param):
        if face in out:
            raise RuntimeError(
                f"growth images collide on {face}: {out[face]} vs {(tag, param)}"
            )
        out[face] = (tag, param)

    for f in faces:
        put(grow_outside(f, n), "outside", None)
        put(grow_enclose(f, n), "enclose", None)
        for s in f:
            put(grow_into(f, s, n), "into", members_of(s))
            put(grow_above(f, s, n), "above", members_of(s))
        for i in range(2, n + 1):
            put(grow_split(f, i, n), "split", i)
    return out


def build_recursive(n: int) -> tuple[SimplicialComplex, dict]:
    """Rebuild the complex level by level through the growth moves.

    Returns the complex and a provenance map {face: (tag, param)} saying
    which move produced each face from the previous level; the base level
    carries ("base", None). Construction aborts on any image collision, so
    completing is itself a disjointness certificate.
    """
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    level: dict = {(): ("base", None)}
    for m in range(3, n):
        level = expand_level(level.keys(), m)
    verts = vertices(n) if n > 3 else []
    vmap = {v.mask: i for i, v in enumerate(verts)}
    faces = []
    prov = {}
    for mface, tagparam in level.items():
        iface = tuple(sorted(vmap[m] for m in mface))
        faces.append(iface)
        prov[iface] = tagparam
    return SimplicialComplex(verts, faces, validate=False), prov


# ---- Face-level wrappers for the growth moves ------------------------------

def add_leaf_outside(face: Face) -> Face:
    """Dimension-preserving: the new leaf stays a bare component."""
    return Face.from_masks(face.n + 1, grow_outside(face.mask_tuple(), face.n))


def add_block_around_all(face: Face) -> Face:
    """Dimension-raising: wrap the old ground set {2,...,n} as one block."""
    return Face.from_masks(face.n + 1, grow_enclose(face.mask_tuple(), face.n))


def add_leaf_into(face: Face, block: BlockSet) -> Face:
    """Dimension-preserving: the new leaf joins `block` and its ancestors."""
    if block not in face.blocks:
        raise ValueError(f"{block} is not a block of {face}")
    return Face.from_masks(face.n + 1,
                           grow_into(face.mask_tuple(), block.mask, face.n))


def add_block_above(face: Face, block: BlockSet) -> Face:
    """Dimension-raising: insert a new parent of `block` holding the new leaf."""
    if block not in face.blocks:
        raise ValueError(f"{block} is not a block of {face}")
    return Face.from_masks(face.n + 1,
                           grow_above(face.mask_tuple(), block.mask, face.n))


def split_leaf(face: Face, leaf: int) -> Face:
    """Dimension-raising: replace a leaf by the cherry {leaf, n+1}."""
    if not 2 <= leaf <= face.n:
        raise ValueError(f"leaf must lie in {{2,...,{face.n}}}, got {leaf}")
    return Face.from_masks(face.n + 1,
                           grow_split(face.mask_tuple(), leaf, face.n))


# ---- counting --------------------------------------------------------------

def f_recurrence(n: int) -> FVector:
    """Face counts from the level-by-level bookkeeping of the growth moves:
    f_{n,i} = (i+2) f_{n-1,i} + (n+i-1) f_{n-1,i-1}."""
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    ent = [1]
    for m in range(4, n + 1):
        prev = ent
        nxt = [0] * (m - 2)
        nxt[0] = 1
        for i in range(m - 3):
            a = prev[i + 1] if i + 1 < len(prev) else 0
            b = prev[i] if i < len(prev) else 0
            nxt[i + 1] = (i + 2) * a + (m + i - 1) * b
        ent = nxt
    return FVector(tuple(ent))


def h_recurrence(n: int) -> HVector:
    """h-vector by the companion recurrence
    h_{n,k} = (k+1) h_{n-1,k} + (2n-k-5) h_{n-1,k-1}."""
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    ent = [1]
    for m in range(4, n + 1):
        prev = ent
        nxt = [0] * (m - 2)
        for k in range(m - 2):
            a = prev[k] if k < len(prev) else 0
            b = prev[k - 1] if 0 <= k - 1 < len(prev) else 0
            nxt[k] = (k + 1) * a + (2 * m - k - 5) * b
        ent = nxt
    return HVector(tuple(ent))


def facet_count(n: int) -> int:
    """(2n-5)!!, the number of top-dimensional faces."""
    out = 1
    for k in range(2 * n - 5, 1, -2):
        out *= k
    return out


def total_face_count(n: int) -> int:
    """Number of faces of every dimension, the empty face included."""
    return sum(f_recurrence(n).entries)
