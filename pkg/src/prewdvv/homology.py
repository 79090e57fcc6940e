"""Exact reduced homology of simplicial complexes, and the link-vanishing
check behind Cohen-Macaulayness of the face ring.

Boundary matrices are kept sparse (dict columns over canonical face order)
and include the augmentation, so Betti numbers come out reduced. Two
engines share them:

* field mode - column reduction over GF(p) for two independent primes,
  with the clearing trick: once the boundary one dimension up is reduced,
  its pivot rows name columns here that must die, so they are skipped.
  Both primes must report identical ranks.
* integer mode - sparse fraction-free Smith normal form, which also yields
  torsion. Slower; meant for moderate sizes and for certifying that the
  prime-field answers are characteristic-free.

The Reisner-style check computes link homology once per link isomorphism
class: links are joins of smaller Whitehouse complexes determined by the
face's forest shape, so faces with the same shape signature share a link.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex
from .whitehouse import (
    Face,
    build_direct,
    link_complex,
    link_decomposition,
    link_wedge_profile,
)

__all__ = [
    "FIELD_PRIMES",
    "BettiProfile",
    "ChainBoundary",
    "LinkClass",
    "ReisnerReport",
    "boundary_matrices",
    "boundary_square_is_zero",
    "boundary_triplets",
    "reduced_betti",
    "reisner_check",
    "smith_normal_form",
]

# two independent odd primes, far above any face count we reduce;
# disagreement between them would flag characteristic interference
FIELD_PRIMES = (30011, 30013)


# ---- boundary matrices -----------------------------------------------------

@dataclass(frozen=True)
class ChainBoundary:
    """Sparse boundary matrix from k-chains to (k-1)-chains.

    `columns[j]` maps row indices to coefficients for the j-th k-face in
    canonical order; rows index the (k-1)-faces the same way. For k = 0 the
    single row is the empty face, making this the augmentation.
    """

    k: int
    n_rows: int
    n_cols: int
    columns: tuple

    def triplets(self) -> list:
        return sorted((i, j, v)
                      for j, col in enumerate(self.columns)
                      for i, v in col.items())


def boundary_matrices(K: SimplicialComplex) -> dict:
    """All boundary matrices of the complex, keyed by source dimension."""
    out = {}
    prev = [()]
    for k in range(0, K.dim + 1):
        faces_k = list(K.faces_of_dim(k))
        index = {f: i for i, f in enumerate(prev)}
        cols = []
        for f in faces_k:
            col = {}
            for i in range(len(f)):
                col[index[f[:i] + f[i + 1:]]] = 1 if i % 2 == 0 else -1
            cols.append(col)
        out[k] = ChainBoundary(k, len(prev), len(faces_k), tuple(cols))
        prev = faces_k
    return out


def boundary_square_is_zero(K: SimplicialComplex) -> bool:
    """Symbolic check that consecutive boundaries compose to zero."""
    b = boundary_matrices(K)
    for k in range(1, K.dim + 1):
        lower = b[k - 1].columns
        for col in b[k].columns:
            acc: dict = {}
            for i, v in col.items():
                for i2, v2 in lower[i].items():
                    acc[i2] = acc.get(i2, 0) + v * v2
            if any(acc.values()):
                return False
    return True


def boundary_triplets(K: SimplicialComplex) -> dict:
    """(row, column, coefficient) triplets of every boundary matrix."""
    return {k: b.triplets() for k, b in boundary_matrices(K).items()}


# ---- field mode ------------------------------------------------------------

def _ranks_mod_p(boundaries: dict, p: int) -> dict:
    """Rank of each boundary matrix over GF(p) by sparse column reduction.

    Dimensions are processed top down so that the pivot rows discovered one
    level up clear columns at this level before any arithmetic happens on
    them (their reduction is forced to zero by d(d(x)) = 0).
    """
    ranks = {}
    cleared: set = set()
    for k in sorted(boundaries, reverse=True):
        pivots: dict = {}
        rank = 0
        for j, col in enumerate(boundaries[k].columns):
            if j in cleared:
                continue
            cur = {i: v % p for i, v in col.items() if v % p}
            while cur:
                low = max(cur)
                other = pivots.get(low)
                if other is None:
                    break
                f = cur[low]
                for i, c in other.items():
                    v = (cur.get(i, 0) - f * c) % p
                    if v:
                        cur[i] = v
                    else:
                        cur.pop(i, None)
            if cur:
                low = max(cur)
                inv = pow(cur[low], p - 2, p)
                pivots[low] = {i: (v * inv) % p for i, v in cur.items()}
                rank += 1
        ranks[k] = rank
        cleared = set(pivots)
    return ranks


# ---- integer mode ----------------------------------------------------------

def _pick_pivot(rows: dict, colrows: dict):
    """Entry of least magnitude, ties broken by least fill-in estimate."""
    best = None
    best_key = None
    for i, r in rows.items():
        ri = len(r) - 1
        for j, v in r.items():
            key = (abs(v), ri * (len(colrows[j]) - 1))
            if best_key is None or key < best_key:
                best_key = key
                best = (i, j)
    return best


def _row_add(rows: dict, colrows: dict, dst: int, src: int, factor: int):
    """row[dst] += factor * row[src]."""
    for j, v in rows[src].items():
        w = rows[dst].get(j, 0) + factor * v
        if w:
            rows[dst][j] = w
            colrows[j].add(dst)
        else:
            rows[dst].pop(j, None)
            colrows[j].discard(dst)


def _col_add(rows: dict, colrows: dict, dst: int, src: int, factor: int):
    """col[dst] += factor * col[src]."""
    for i in list(colrows[src]):
        w = rows[i].get(dst, 0) + factor * rows[i][src]
        if w:
            rows[i][dst] = w
            colrows[dst].add(i)
        else:
            rows[i].pop(dst, None)
            colrows[dst].discard(i)


def _drop_row(rows: dict, colrows: dict, i: int):
    for j in rows.pop(i):
        colrows[j].discard(i)


def _drop_col(rows: dict, colrows: dict, j: int):
    for i in colrows.pop(j):
        rows[i].pop(j, None)


def _normalize_divisibility(diag: list) -> list:
    """Fold a diagonal into a divisibility chain by pairwise gcd/lcm swaps
    (diag(a, b) is equivalent to diag(gcd, lcm))."""
    d = sorted(abs(x) for x in diag)
    again = True
    while again:
        again = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    again = True
        d.sort()
    return d


def smith_normal_form(columns, n_rows: int) -> list:
    """Invariant factors d1 | d2 | ... of a sparse integer matrix.

    Pivots of least magnitude are isolated by floor-division elimination;
    a nonzero remainder becomes the new, strictly smaller pivot, so each
    isolation terminates. Divisibility is restored at the end.
    """
    rows: dict = {}
    colrows: dict = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = v
                colrows.setdefault(j, set()).add(i)
    diag = []
    while rows:
        pi, pj = _pick_pivot(rows, colrows)
        while True:
            # clean the pivot column; a remainder takes over as pivot
            while len(colrows[pj]) > 1:
                d = rows[pi][pj]
                for i in [x for x in colrows[pj] if x != pi]:
                    q = rows[i][pj] // d
                    if q:
                        _row_add(rows, colrows, i, pi, -q)
                rest = [i for i in colrows[pj] if i != pi]
                if rest:
                    pi = min(rest, key=lambda i: abs(rows[i][pj]))
            # clean the pivot row; the column stays single-entry unless a
            # remainder moves the pivot, in which case start over
            moved = False
            while len(rows[pi]) > 1:
                d = rows[pi][pj]
                for j in [x for x in rows[pi] if x != pj]:
                    q = rows[pi][j] // d
                    if q:
                        _col_add(rows, colrows, j, pj, -q)
                rest = [j for j in rows[pi] if j != pj]
                if rest:
                    pj = min(rest, key=lambda j: abs(rows[pi][j]))
                    moved = True
                    break
            if not moved and len(colrows[pj]) == 1 and len(rows[pi]) == 1:
                break
        diag.append(abs(rows[pi][pj]))
        _drop_row(rows, colrows, pi)
        _drop_col(rows, colrows, pj)
        rows = {i: r for i, r in rows.items() if r}
        colrows = {j: c for j, c in colrows.items() if c}
    return _normalize_divisibility(diag)


# ---- Betti numbers ----------------------------------------------------------

@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers (and, in integer mode, torsion) of a complex.

    `betti[k]` is recorded for every k from -1 up to the dimension;
    `torsion[k]` lists the invariant factors above 1 of the degree-k reduced
    homology and is only populated in integer mode.
    """

    mode: str
    betti: dict
    torsion: dict
    primes: tuple | None = None

    def nonzero(self) -> dict:
        return {k: b for k, b in self.betti.items() if b}

    def is_wedge_like(self, top: int, count: int) -> bool:
        """Homology of a wedge of `count` spheres of dimension `top`?"""
        expected = {} if count == 0 else {top: count}
        return self.nonzero() == expected and not self.torsion


def reduced_betti(K: SimplicialComplex, mode: str = "field") -> BettiProfile:
    """Reduced Betti numbers of the complex, with the augmentation built in.

    Field mode reduces over both entries of FIELD_PRIMES and insists the
    ranks agree; integer mode runs Smith normal form and also reports
    torsion.
    """
    if mode not in ("field", "integer"):
        raise ValueError(f"mode must be 'field' or 'integer', got {mode!r}")
    bnd = boundary_matrices(K)
    counts = {-1: 1}
    counts.update({k: bnd[k].n_cols for k in bnd})
    torsion: dict = {}
    if mode == "field":
        per_prime = [_ranks_mod_p(bnd, p) for p in FIELD_PRIMES]
        if any(r != per_prime[0] for r in per_prime[1:]):
            raise ArithmeticError(
                f"boundary ranks differ between primes {FIELD_PRIMES}: {per_prime}"
            )
        ranks = per_prime[0]
        primes = FIELD_PRIMES
    else:
        ranks = {}
        for k, b in bnd.items():
            factors = smith_normal_form(b.columns, b.n_rows)
            ranks[k] = len(factors)
            bad = tuple(d for d in factors if d > 1)
            if bad:
                torsion[k - 1] = bad
        primes = None
    betti = {
        k: counts[k] - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(-1, K.dim + 1)
    }
    return BettiProfile(mode=mode, betti=betti, torsion=torsion, primes=primes)


# ---- link vanishing ----------------------------------------------------------

@dataclass(frozen=True)
class LinkClass:
    """One link isomorphism class: its shape signature, how many faces share
    it, and the homology of a representative link."""

    signature: tuple
    count: int
    representative: tuple
    link_dim: int
    expected_dim: int
    expected_spheres: int
    betti: dict

    @property
    def ok(self) -> bool:
        expected = ({self.expected_dim: self.expected_spheres}
                    if self.expected_spheres else {})
        nonzero = {k: b for k, b in self.betti.items() if b}
        return self.link_dim == self.expected_dim and nonzero == expected


@dataclass(frozen=True)
class ReisnerReport:
    """Link homology across all faces, one computation per link class."""

    n: int
    classes: tuple
    total_faces: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.classes)

    def census(self) -> dict:
        return {c.signature: c.count for c in self.classes}


def _link_class_betti(args):
    n, masks = args
    link = link_complex(n, Face.from_masks(n, masks))
    return reduced_betti(link, mode="field").betti


def reisner_check(n: int, jobs: int = 1) -> ReisnerReport:
    """Check every face link has homology only in its top dimension.

    Faces are grouped by the multiset of join-factor sizes read off their
    forests; one representative per group is enough because the link is
    determined by that signature. Each link must look like a wedge: reduced
    homology concentrated on top, with the predicted number of spheres.
    """
    K = build_direct(n)
    verts = list(K.vertices)
    groups: dict = {}
    counts: dict = {}
    for iface in K.faces():
        face = Face(n, tuple(verts[i] for i in iface))
        sig = link_decomposition(face)
        counts[sig] = counts.get(sig, 0) + 1
        groups.setdefault(sig, face)
    signatures = sorted(groups)
    argslist = [(n, groups[sig].mask_tuple()) for sig in signatures]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            betti_list = list(pool.map(_link_class_betti, argslist))
    else:
        betti_list = [_link_class_betti(a) for a in argslist]
    classes = []
    for sig, betti in zip(signatures, betti_list):
        face = groups[sig]
        dim, spheres = link_wedge_profile(face)
        classes.append(LinkClass(
            signature=sig,
            count=counts[sig],
            representative=face.mask_tuple(),
            link_dim=max(betti),  # betti keys run from -1 up to the link dim
            expected_dim=dim,
            expected_spheres=spheres,
            betti=betti,
        ))
    return ReisnerReport(n=n, classes=tuple(classes),
                         total_faces=sum(counts.values()))
