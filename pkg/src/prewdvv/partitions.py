"""Stable 2-partitions and the vertex combinatorics of the Whitehouse complex.

A vertex is the block of a stable 2-partition of {1,...,n} that avoids the
element 1: a set S inside {2,...,n} with 2 <= |S| <= n-2. Two vertices span
an edge exactly when their blocks are nested or disjoint, which is the same
as the crossing statistic a(sigma, tau) staying below 4. The crossing pairs
are the quadratic generators of the Stanley-Reisner ideal of the complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "BlockSet",
    "StablePartition",
    "a_value",
    "compatible",
    "generators_to_json",
    "ideal_generators",
    "to_partition",
    "vertices",
]


def mask_of(members) -> int:
    """Pack a collection of small nonnegative integers into a bitmask."""
    m = 0
    for x in members:
        m |= 1 << x
    return m


def members_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into the sorted tuple of its elements."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def ground_mask(n: int) -> int:
    """Bitmask of the ground set {2,...,n}."""
    return (1 << (n + 1)) - 4


def masks_compatible(a: int, b: int) -> bool:
    """Nested or disjoint, on bitmask blocks."""
    ab = a & b
    return ab == 0 or ab == a or ab == b


@dataclass(frozen=True)
class BlockSet:
    """A vertex: the partition block avoiding 1, inside the ground set {2,...,n}."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"ambient size must be at least 3, got {self.n}")
        if self.mask & ~ground_mask(self.n):
            raise ValueError(
                f"members {members_of(self.mask)} must lie in {{2,...,{self.n}}}"
            )
        size = self.mask.bit_count()
        if not 2 <= size <= self.n - 2:
            raise ValueError(
                f"block size must be between 2 and {self.n - 2}, got {size}"
            )

    @classmethod
    def from_members(cls, n: int, members) -> "BlockSet":
        return cls(n, mask_of(members))

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def complement(self) -> tuple[int, ...]:
        """The partner block of the partition, inside {1,...,n}; contains 1."""
        full = (1 << (self.n + 1)) - 2
        return members_of(full & ~self.mask)

    @property
    def sort_key(self):
        # canonical order: cardinality first, then lexicographic on members
        return (self.mask.bit_count(), self.members)

    def __lt__(self, other: "BlockSet") -> bool:
        return (self.n, *self.sort_key) < (other.n, *other.sort_key)

    def to_json(self) -> dict:
        return {"n": self.n, "members": list(self.members)}

    @classmethod
    def from_json(cls, obj: dict) -> "BlockSet":
        return cls.from_members(obj["n"], obj["members"])

    def __repr__(self) -> str:
        inner = ",".join(map(str, self.members))
        return f"BlockSet(n={self.n}, {{{inner}}})"


@dataclass(frozen=True)
class StablePartition:
    """An unordered split of {1,...,n} into two blocks, both of size >= 2.

    Stored with block1 avoiding the element 1, so equality ignores block order.
    """

    n: int
    block1: frozenset
    block2: frozenset

    def __post_init__(self):
        b1, b2 = frozenset(self.block1), frozenset(self.block2)
        if 1 in b1:
            b1, b2 = b2, b1
        object.__setattr__(self, "block1", b1)
        object.__setattr__(self, "block2", b2)
        if b1 | b2 != frozenset(range(1, self.n + 1)) or b1 & b2:
            raise ValueError(f"blocks must partition {{1,...,{self.n}}}")
        if min(len(b1), len(b2)) < 2:
            raise ValueError("both blocks need at least two elements")

    @property
    def blocks(self) -> tuple:
        return (self.block1, self.block2)

    def __repr__(self) -> str:
        a = ",".join(map(str, sorted(self.block1)))
        b = ",".join(map(str, sorted(self.block2)))
        return f"{{{a}}}/{{{b}}}"


def to_partition(v: BlockSet) -> StablePartition:
    """The stable 2-partition a vertex stands for."""
    return StablePartition(v.n, frozenset(v.members), frozenset(v.complement()))


def a_value(sigma: StablePartition, tau: StablePartition) -> int:
    """Number of distinct nonempty pairwise intersections of the blocks."""
    if sigma.n != tau.n:
        raise ValueError(f"ambient sizes differ: {sigma.n} != {tau.n}")
    cuts = {s & t for s in sigma.blocks for t in tau.blocks}
    cuts.discard(frozenset())
    return len(cuts)


def compatible(u: BlockSet, v: BlockSet) -> bool:
    """True when the blocks are nested or disjoint, i.e. the pair spans a face."""
    if u.n != v.n:
        raise ValueError(f"ambient sizes differ: {u.n} != {v.n}")
    return masks_compatible(u.mask, v.mask)


def vertices(n: int) -> list[BlockSet]:
    """All vertices for ambient size n, in canonical (cardinality, lex) order."""
    if n < 3:
        raise ValueError(f"ambient size must be at least 3, got {n}")
    out = []
    for size in range(2, n - 1):
        for combo in combinations(range(2, n + 1), size):
            out.append(BlockSet(n, mask_of(combo)))
    return out


def ideal_generators(n: int) -> list[tuple[BlockSet, BlockSet]]:
    """Crossing vertex pairs: the degree-two monomials x_u * x_v cutting out
    the face ring. Every minimal non-face of the complex has size two, so this
    list presents the whole ideal."""
    return [
        (u, v) for u, v in combinations(vertices(n), 2) if not compatible(u, v)
    ]


def generators_to_json(pairs) -> list:
    """Generator pairs as JSON data, already in canonical order."""
    return [[u.to_json(), v.to_json()] for u, v in pairs]
