"""Ribbon graphs (dessins) of smoothed diagrams and their sub-dessin scans.

A dessin is a graph with a cyclic order of half-edge ends at each vertex.
Half-edges are numbered 0..2e-1 and edge i pairs half-edges 2i and 2i+1.
Faces are the orbits of h -> successor-at-vertex of the mate of h; genus
comes from Euler's relation v - e + f = 2k - 2g per component count k.

Sub-dessins keep every vertex and a subset of edges.  All subset sums in
the package route through the single scanning engine in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .diagram import (
    CapExceededError,
    DiagramError,
    PDCode,
    StateLike,
    smooth_state,
    state_circle_count,
)

__all__ = [
    "Dessin",
    "Counts",
    "WeightedDessin",
    "build_dessin",
    "dessin_counts",
    "faces",
    "dual",
    "scan_subdessins",
    "quasi_tree_counts",
    "mixed_state_face_count",
    "contract_parallel",
    "dessin_to_text",
    "dessin_from_text",
]


def _canonical(rotations: Iterable[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    verts = []
    for rot in rotations:
        rot = tuple(int(h) for h in rot)
        if not rot:
            raise DiagramError("isolated vertices are not representable")
        lo = rot.index(min(rot))
        verts.append(rot[lo:] + rot[:lo])
    verts.sort(key=lambda r: r[0])
    return tuple(verts)


@dataclass(frozen=True)
class Dessin:
    """A connected-or-not ribbon graph, rotations in canonical form."""

    rotations: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rotations", _canonical(self.rotations))
        ids = sorted(h for rot in self.rotations for h in rot)
        n = len(ids)
        if n % 2 != 0 or ids != list(range(n)):
            raise DiagramError("half-edges must be exactly 0..2e-1, each once")

    @property
    def n_edges(self) -> int:
        return sum(len(rot) for rot in self.rotations) // 2

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)


@dataclass(frozen=True)
class Counts:
    """Vertex/edge/face/component/genus/nullity bookkeeping of a dessin."""

    v: int
    e: int
    f: int
    k: int
    g: int
    n: int

    def __post_init__(self):
        if min(self.v, self.e, self.f, self.g, self.n) < 0 or self.k < 1:
            raise DiagramError(f"impossible counts {self}")
        if self.v - self.e + self.f != 2 * self.k - 2 * self.g:
            raise DiagramError(f"Euler relation fails for {self}")
        if self.n != self.e - self.v + self.k:
            raise DiagramError(f"nullity mismatch in {self}")


# ============================================================
# Construction from a smoothed diagram
# ============================================================


def build_dessin(pd: PDCode, s: StateLike, outer_corner: int = 0) -> Dessin:
    """Dessin of a state: vertices are circles, edges are crossings.

    Crossing c becomes the chord with half-edges 2c and 2c+1, attached at
    its two smoothing channels; each circle's rotation lists the chord
    ends in the circle's oriented cyclic order.
    """
    circles = smooth_state(pd, s, outer_corner)
    rotations = [
        tuple(2 * c + ch for (c, ch) in spots) for spots in circles.cyclic_orders
    ]
    return Dessin(tuple(rotations))


# ============================================================
# The subset-scan engine
# ============================================================


class _ScanState:
    """Reusable buffers for counting one edge-subset of a fixed dessin."""

    __slots__ = ("rot_lists", "vert_of", "nxt", "stamp", "parent", "v", "cur")

    def __init__(self, d: Dessin):
        self.rot_lists = [list(rot) for rot in d.rotations]
        nh = 2 * d.n_edges
        self.vert_of = [0] * nh
        for vi, rot in enumerate(self.rot_lists):
            for h in rot:
                self.vert_of[h] = vi
        self.nxt = [0] * nh
        self.stamp = [0] * nh
        self.v = len(self.rot_lists)
        self.parent = list(range(self.v))
        self.cur = 0


def _mask_counts(st: _ScanState, mask: int) -> Tuple[int, int, int]:
    """(edges, components, faces) of the sub-dessin with edge bitmask `mask`."""
    st.cur += 1
    cur = st.cur
    nxt = st.nxt
    stamp = st.stamp
    vert_of = st.vert_of
    parent = st.parent
    for i in range(st.v):
        parent[i] = i
    m = mask
    while m:
        low = m & -m
        m ^= low
        ei2 = 2 * (low.bit_length() - 1)
        a = vert_of[ei2]
        b = vert_of[ei2 + 1]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
    k = sum(1 for i in range(st.v) if parent[i] == i)

    f = 0
    for rot in st.rot_lists:
        first = -1
        prev = -1
        for h in rot:
            if (mask >> (h >> 1)) & 1:
                if prev < 0:
                    first = h
                else:
                    nxt[prev] = h
                prev = h
        if prev >= 0:
            nxt[prev] = first
        else:
            f += 1  # vertex untouched by the subset: one face of its own
    for rot in st.rot_lists:
        for h0 in rot:
            if not (mask >> (h0 >> 1)) & 1 or stamp[h0] == cur:
                continue
            f += 1
            h = h0
            while stamp[h] != cur:
                stamp[h] = cur
                h = nxt[h ^ 1]
    return mask.bit_count(), k, f


def _scan(
    d: Dessin, universe: Optional[int] = None, cap: int = 24
) -> Iterator[Tuple[int, int, int, int]]:
    """Yield (mask, edges, components, faces) for every subset of `universe`.

    Subsets are emitted in increasing bitmask order.  This is the only
    subset enumerator in the package.
    """
    e = d.n_edges
    full = (1 << e) - 1
    if universe is None:
        universe = full
    elif universe & ~full:
        raise DiagramError(f"universe {universe:#x} has bits beyond {e} edges")
    if universe.bit_count() > cap:
        raise CapExceededError(
            f"scan over {universe.bit_count()} edges exceeds the cap {cap}"
        )
    st = _ScanState(d)
    sub = 0
    while True:
        eh, k, f = _mask_counts(st, sub)
        yield sub, eh, k, f
        if sub == universe:
            return
        sub = (sub - universe) & universe


def _counts_from_efk(d: Dessin, eh: int, k: int, f: int) -> Counts:
    v = d.n_vertices
    g2 = 2 * k - v + eh - f
    if g2 < 0 or g2 % 2:
        raise DiagramError(f"bad Euler data v={v} e={eh} f={f} k={k}")
    return Counts(v, eh, f, k, g2 // 2, eh - v + k)


def dessin_counts(d: Dessin, sub: Optional[Iterable[int]] = None) -> Counts:
    """Counts of the whole dessin, or of the sub-dessin on the given edges."""
    if sub is None:
        mask = (1 << d.n_edges) - 1
    else:
        mask = 0
        for ei in sub:
            if not 0 <= ei < d.n_edges:
                raise DiagramError(f"edge index {ei} out of range")
            mask |= 1 << ei
    eh, k, f = _mask_counts(_ScanState(d), mask)
    return _counts_from_efk(d, eh, k, f)


def scan_subdessins(
    d: Dessin,
    visitor: Callable[[int, Counts], None],
    cap: int = 24,
    universe: Optional[int] = None,
) -> None:
    """Call visitor(mask, counts) for every sub-dessin, ascending by mask."""
    for mask, eh, k, f in _scan(d, universe, cap):
        visitor(mask, _counts_from_efk(d, eh, k, f))


def quasi_tree_counts(d: Dessin, cap: int = 24) -> Tuple[int, ...]:
    """s(j) = number of spanning quasi-trees (one-face sub-dessins) of genus j.

    Returns (s(0), .., s(g)) for g the genus of d; a one-face sub-dessin is
    checked to be connected with the genus Euler's relation forces.
    """
    full = dessin_counts(d)
    v = full.v
    s = [0] * (full.g + 1)
    for _, eh, k, f in _scan(d, cap=cap):
        if f != 1:
            continue
        if k != 1:
            raise DiagramError("internal error: one-face sub-dessin not connected")
        g2 = 1 + eh - v
        if g2 % 2 or g2 // 2 > full.g:
            raise DiagramError("internal error: quasi-tree genus out of range")
        s[g2 // 2] += 1
    return tuple(s)


def mixed_state_face_count(pd: PDCode, edges: Iterable[int]) -> int:
    """Circles of the state that B-smooths exactly the listed crossings.

    Equals the face count of the corresponding sub-dessin of the all-A
    dessin, which is the bridge between state sums and subset scans.
    """
    mask = 0
    for c in edges:
        if not 0 <= c < len(pd.crossings):
            raise DiagramError(f"crossing index {c} out of range")
        mask |= 1 << c
    return state_circle_count(pd, mask)


# ============================================================
# Faces and duality
# ============================================================


def faces(d: Dessin) -> Tuple[Tuple[int, ...], ...]:
    """Face orbits of the full dessin, canonicalized like rotations."""
    nh = 2 * d.n_edges
    rho_next = [0] * nh
    for rot in d.rotations:
        for i, h in enumerate(rot):
            rho_next[rot[i - 1]] = h
    seen = [False] * nh
    out: List[Tuple[int, ...]] = []
    for h0 in range(nh):
        if seen[h0]:
            continue
        orbit: List[int] = []
        h = h0
        while not seen[h]:
            seen[h] = True
            orbit.append(h)
            h = rho_next[h ^ 1]
        out.append(tuple(orbit))
    return _canonical(out)


def dual(d: Dessin) -> Dessin:
    """Geometric dual: faces become vertices, edge pairing unchanged.

    The face successor of the dual is the vertex successor of the original,
    so dual(dual(d)) == d exactly.
    """
    return Dessin(faces(d))


# ============================================================
# Parallel-chord contraction (one-vertex dessins)
# ============================================================


@dataclass(frozen=True)
class WeightedDessin:
    """One-vertex dessin whose chords carry positive multiplicities."""

    dessin: Dessin
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != self.dessin.n_edges:
            raise DiagramError("one weight per edge required")
        if any(w < 1 for w in self.weights):
            raise DiagramError("weights must be positive")


def _one_vertex_from_word(word: Sequence[int]) -> Tuple[Dessin, List[int]]:
    """Dessin of a chord word; returns it with labels in first-seen order."""
    first: Dict[int, int] = {}
    order: List[int] = []
    half: List[int] = []
    for lab in word:
        if lab in first:
            half.append(2 * first[lab] + 1)
        else:
            first[lab] = len(order)
            order.append(lab)
            half.append(2 * first[lab])
    return Dessin((tuple(half),)), order


def contract_parallel(d: Dessin) -> WeightedDessin:
    """Merge nested-adjacent parallel chords of a one-vertex dessin.

    Two chords are parallel when one's endpoints immediately flank the
    other's on both sides (pattern a b .. b a with nothing between the
    paired ends).  Merging adds multiplicities; the genus of the
    underlying dessin is asserted unchanged at every merge.
    """
    if d.n_vertices != 1:
        raise DiagramError("contract_parallel needs a one-vertex dessin")
    g0 = dessin_counts(d).g
    word = [h >> 1 for h in d.rotations[0]]
    weights = {lab: 1 for lab in set(word)}
    merged = True
    while merged:
        merged = False
        size = len(word)
        if size <= 2:
            break
        pos: Dict[int, List[int]] = {}
        for idx, lab in enumerate(word):
            pos.setdefault(lab, []).append(idx)
        for a, (s, t) in pos.items():
            b = word[(s + 1) % size]
            if b == a:
                continue
            inner = {(s + 1) % size, (t - 1) % size}
            if len(inner) == 2 and set(pos[b]) == inner:
                weights[a] += weights.pop(b)
                word = [lab for lab in word if lab != b]
                check, _ = _one_vertex_from_word(word)
                if dessin_counts(check).g != g0:
                    raise DiagramError("internal error: merge changed the genus")
                merged = True
                break
    out, order = _one_vertex_from_word(word)
    return WeightedDessin(out, tuple(weights[lab] for lab in order))


# ============================================================
# Serialization
# ============================================================


def dessin_to_text(d: Dessin) -> str:
    """Render as `V: (1 3 2 4) E: (1,2) (3,4)` with 1-based half-edge ids."""
    verts = " ".join("(" + " ".join(str(h + 1) for h in rot) + ")" for rot in d.rotations)
    edges = " ".join(f"({2 * i + 1},{2 * i + 2})" for i in range(d.n_edges))
    return f"V: {verts} E: {edges}"


_VERT_RE = re.compile(r"\(([^()]*)\)")


def dessin_from_text(text: str) -> Dessin:
    """Parse the textual form; arbitrary edge pairings are renumbered."""
    m = re.fullmatch(r"\s*V:\s*(.*?)\s*E:\s*(.*?)\s*", text, re.S)
    if not m:
        raise DiagramError("expected `V: (..) .. E: (a,b) ..`")
    vpart, epart = m.groups()
    verts: List[List[int]] = []
    rest = _VERT_RE.sub("", vpart).strip()
    if rest:
        raise DiagramError(f"stray text {rest!r} in vertex list")
    for grp in _VERT_RE.findall(vpart):
        try:
            verts.append([int(tok) for tok in grp.replace(",", " ").split()])
        except ValueError:
            raise DiagramError(f"bad vertex group ({grp})") from None
    pairs: List[Tuple[int, int]] = []
    rest = _VERT_RE.sub("", epart).strip()
    if rest:
        raise DiagramError(f"stray text {rest!r} in edge list")
    for grp in _VERT_RE.findall(epart):
        toks = grp.replace(",", " ").split()
        if len(toks) != 2:
            raise DiagramError(f"edge ({grp}) is not a pair")
        pairs.append((int(toks[0]), int(toks[1])))
    ids = sorted(h for rot in verts for h in rot)
    n = len(ids)
    if len(set(ids)) != n:
        raise DiagramError("half-edge ids must be distinct")
    if n % 2:
        raise DiagramError("a dessin needs an even number of half-edges")
    if sorted(h for pr in pairs for h in pr) != ids:
        raise DiagramError("edge pairs must cover each half-edge id exactly once")
    remap: Dict[int, int] = {}
    for i, (a, b) in enumerate(pairs):
        remap[a] = 2 * i
        remap[b] = 2 * i + 1
    return Dessin(tuple(tuple(remap[h] for h in rot) for rot in verts))
