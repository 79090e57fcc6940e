"""Discrete Morse matching on the Whitehouse complex.

The matching is built level by level alongside the growth moves: at each
step the outside image is paired with the enclose image, each into image
with the matching above image, and the split copies carry the previous
level's matching verbatim. What survives unpaired is the split-transported
critical set, so the critical cells are exactly the iterated split images
of the empty face: (n-2)! cells, all of top dimension n-4.

Acyclicity is checked rank pair by rank pair: for matched pairs
(x_j, y_j) with dim y_j = dim x_j + 1, the digraph with an edge j -> l
whenever x_l is a facet of y_j (l != j) must have no directed cycle. A
brute-force check on the whole modified Hasse diagram backs this up for
small sizes.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from math import factorial

from .partitions import members_of
from .whitehouse import (
    MaskFace,
    grow_above,
    grow_enclose,
    grow_into,
    grow_outside,
    grow_split,
    mask_faces,
    next_level,
)

__all__ = [
    "AcyclicityReport",
    "CriticalReport",
    "MorseMatching",
    "acyclic_full_digraph",
    "build_matching",
    "characterize_critical",
    "cherry_free_faces",
    "cherry_free_matching",
    "covers_all_faces",
    "critical_census",
    "matching_to_json",
    "modified_hasse_dot",
    "split_tower_faces",
    "verify_acyclic",
]


@dataclass(frozen=True)
class MorseMatching:
    """A partial matching on faces: (lower, upper) pairs plus unpaired cells.

    Each pair joins a face to a coface with exactly one extra block, and no
    face may appear twice across the pairs and the critical set.
    """

    n: int
    pairs: tuple
    critical: frozenset

    def __post_init__(self):
        seen = set(self.critical)
        if len(seen) != len(self.critical):
            raise ValueError("critical set has repeats")
        for lo, hi in self.pairs:
            if len(hi) != len(lo) + 1 or not set(lo) <= set(hi):
                raise ValueError(f"pair ({lo}, {hi}) is not a cover relation")
            for f in (lo, hi):
                if f in seen:
                    raise ValueError(f"face {f} is matched or critical twice")
                seen.add(f)

    def faces(self) -> set:
        """Every face the matching touches."""
        out = set(self.critical)
        for lo, hi in self.pairs:
            out.add(lo)
            out.add(hi)
        return out

    def n_pairs(self) -> int:
        return len(self.pairs)


def build_matching(n: int) -> MorseMatching:
    """Level-by-level construction of the matching for ambient size n.

    Base level: the empty face alone, critical. Each step pairs
    (outside, enclose) and (into, above) images of every previous face and
    transports previous pairs and critical cells through every split copy.
    """
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    faces: list = [()]
    pairs: list = []
    critical: list = [()]
    for m in range(3, n):
        grown = []
        for f in faces:
            grown.append((grow_outside(f, m), grow_enclose(f, m)))
            for s in f:
                grown.append((grow_into(f, s, m), grow_above(f, s, m)))
        for lo, hi in pairs:
            for i in range(2, m + 1):
                grown.append((grow_split(lo, i, m), grow_split(hi, i, m)))
        critical = [grow_split(k, i, m) for k in critical for i in range(2, m + 1)]
        pairs = grown
        if m + 1 < n:
            faces = next_level(faces, m)
    return MorseMatching(n, tuple(pairs), frozenset(critical))


def critical_census(matching: MorseMatching) -> dict:
    """Critical cell counts keyed by dimension."""
    return dict(Counter(len(f) - 1 for f in matching.critical))


def covers_all_faces(matching: MorseMatching, faces=None) -> bool:
    """Do the pairs and critical cells hit every face exactly once?

    The exactly-once half is already enforced by construction of the
    matching, so only coverage is checked here.
    """
    if faces is None:
        faces = mask_faces(matching.n)
    return matching.faces() == set(faces)


# ---- acyclicity ------------------------------------------------------------

@dataclass(frozen=True)
class AcyclicityReport:
    """Outcome of the rank-by-rank acyclicity check.

    `cycle`, when present, is a directed cycle of matched pairs: the lower
    face of each listed pair is a facet of the upper face of the pair before
    it, wrapping around.
    """

    n: int
    acyclic: bool
    ranks_checked: tuple
    cycle: tuple | None = None

    def __bool__(self) -> bool:
        return self.acyclic


def verify_acyclic(matching: MorseMatching) -> AcyclicityReport:
    """Check the matching is acyclic, one adjacent rank pair at a time.

    Any closed alternating path up through a matched pair and down to the
    lower face of another stays inside a single rank pair, so it suffices to
    topologically sort the pair digraph at each rank. On failure the report
    carries an explicit cycle.
    """
    by_rank = defaultdict(list)
    for lo, hi in matching.pairs:
        by_rank[len(lo)].append((lo, hi))
    ranks = tuple(sorted(by_rank))
    for k in ranks:
        plist = by_rank[k]
        nj = len(plist)
        lower_index = {lo: j for j, (lo, hi) in enumerate(plist)}
        succ = [[] for _ in range(nj)]
        pred = [[] for _ in range(nj)]
        indeg = [0] * nj
        for j, (lo, hi) in enumerate(plist):
            for skip in range(len(hi)):
                l = lower_index.get(hi[:skip] + hi[skip + 1:])
                if l is not None and l != j:
                    succ[j].append(l)
                    pred[l].append(j)
                    indeg[l] += 1
        queue = deque(j for j in range(nj) if indeg[j] == 0)
        done = 0
        alive = [True] * nj
        while queue:
            j = queue.popleft()
            alive[j] = False
            done += 1
            for l in succ[j]:
                indeg[l] -= 1
                if indeg[l] == 0:
                    queue.append(l)
        if done < nj:
            # every residual node keeps a residual predecessor; walking
            # backwards must revisit a node, closing a cycle
            start = next(j for j in range(nj) if alive[j])
            path = [start]
            pos = {start: 0}
            while True:
                j = next(p for p in pred[path[-1]] if alive[p])
                if j in pos:
                    loop = path[pos[j]:]
                    loop.reverse()  # predecessor steps run against the edges
                    cycle = tuple(plist[x] for x in loop)
                    return AcyclicityReport(matching.n, False, ranks, cycle)
                pos[j] = len(path)
                path.append(j)
    return AcyclicityReport(matching.n, True, ranks)


def acyclic_full_digraph(matching: MorseMatching, faces=None) -> bool:
    """Brute-force oracle: topological-sort the whole modified Hasse diagram.

    Every cover edge points down except matched ones, which are reversed.
    Small sizes only; the rank-by-rank check is the scalable route.
    """
    face_list = sorted(faces if faces is not None else matching.faces(),
                       key=lambda f: (len(f), f))
    index = {f: i for i, f in enumerate(face_list)}
    up = dict(matching.pairs)
    succ = [[] for _ in face_list]
    indeg = [0] * len(face_list)
    for f in face_list:
        for skip in range(len(f)):
            sub = f[:skip] + f[skip + 1:]
            if up.get(sub) == f:
                a, b = index[sub], index[f]
            else:
                a, b = index[f], index[sub]
            succ[a].append(b)
            indeg[b] += 1
    queue = deque(i for i in range(len(face_list)) if indeg[i] == 0)
    done = 0
    while queue:
        i = queue.popleft()
        done += 1
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    return done == len(face_list)


# ---- the critical cells ----------------------------------------------------

def split_tower_faces(n: int) -> frozenset:
    """Iterated split images of the empty face up to ambient size n.

    Level by level the new leaf lands in a cherry on a previously available
    leaf, giving (n-2)! faces of dimension n-4.
    """
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    level: set = {()}
    for m in range(3, n):
        level = {grow_split(f, i, m) for f in level for i in range(2, m + 1)}
    return frozenset(level)


@dataclass(frozen=True)
class CriticalReport:
    """What the critical cells are: count, dimensions, and the check that
    they are exactly the iterated split images of the empty face."""

    n: int
    count: int
    expected_count: int
    dimensions: tuple
    expected_dimension: int
    tower_match: bool

    @property
    def ok(self) -> bool:
        return (self.count == self.expected_count
                and self.dimensions == (self.expected_dimension,)
                and self.tower_match)


def characterize_critical(matching: MorseMatching) -> CriticalReport:
    """Confirm the critical cells are the split tower: (n-2)! faces, all of
    top dimension, one per sequence of leaf choices."""
    n = matching.n
    dims = tuple(sorted({len(f) - 1 for f in matching.critical}))
    return CriticalReport(
        n=n,
        count=len(matching.critical),
        expected_count=factorial(n - 2),
        dimensions=dims,
        expected_dimension=n - 4,
        tower_match=matching.critical == split_tower_faces(n),
    )


# ---- the cherry-free zone --------------------------------------------------

def cherry_free_faces(n: int) -> set:
    """Faces with no two-element block containing the last leaf n.

    These are exactly the outside/enclose/into/above images, a subcomplex
    that the matching pairs away completely.
    """
    cherry_masks = {(1 << i) | (1 << n) for i in range(2, n)}
    return {f for f in mask_faces(n) if not cherry_masks.intersection(f)}


def cherry_free_matching(n: int) -> MorseMatching:
    """The perfect matching on the cherry-free zone: (outside, enclose) and
    (into, above) pairs over every face one size down. No critical cells."""
    if n < 4:
        raise ValueError(f"ambient size must be at least 4, got {n}")
    m = n - 1
    pairs = []
    for f in mask_faces(m):
        pairs.append((grow_outside(f, m), grow_enclose(f, m)))
        for s in f:
            pairs.append((grow_into(f, s, m), grow_above(f, s, m)))
    return MorseMatching(n, tuple(pairs), frozenset())


# ---- export ----------------------------------------------------------------

def _face_members(face: MaskFace) -> list:
    return [list(members_of(m)) for m in face]


def matching_to_json(matching: MorseMatching) -> dict:
    """Pairs and critical cells with blocks spelled out as member lists."""
    return {
        "n": matching.n,
        "pairs": sorted(
            [_face_members(lo), _face_members(hi)]
            for lo, hi in matching.pairs
        ),
        "critical": sorted(_face_members(f) for f in matching.critical),
    }


def modified_hasse_dot(matching: MorseMatching, faces=None) -> str:
    """DOT rendering of the modified Hasse diagram.

    Cover edges point from a face to each facet; matched edges are reversed
    and drawn bold, critical cells are doubly circled. Sizes beyond a few
    hundred faces stop being readable, so keep n small.
    """
    face_list = sorted(faces if faces is not None else matching.faces(),
                       key=lambda f: (len(f), f))
    face_set = set(face_list)
    up = dict(matching.pairs)

    def node_id(f):
        return "f" + "_".join(map(str, f)) if f else "f_empty"

    def label(f):
        if not f:
            return "{}"
        return "|".join("{%s}" % ",".join(map(str, members_of(m))) for m in f)

    lines = ["digraph morse {", "  rankdir=BT;",
             "  node [shape=box, fontsize=10];"]
    for f in face_list:
        shape = ', peripheries=2' if f in matching.critical else ""
        lines.append(f'  {node_id(f)} [label="{label(f)}"{shape}];')
    by_dim = defaultdict(list)
    for f in face_list:
        by_dim[len(f)].append(f)
    for k in sorted(by_dim):
        row = " ".join(node_id(f) + ";" for f in by_dim[k])
        lines.append("  { rank=same; %s }" % row)
    for f in face_list:
        for skip in range(len(f)):
            sub = f[:skip] + f[skip + 1:]
            if sub not in face_set:
                continue
            if up.get(sub) == f:
                lines.append(f"  {node_id(sub)} -> {node_id(f)} [style=bold];")
            else:
                lines.append(f"  {node_id(f)} -> {node_id(sub)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
