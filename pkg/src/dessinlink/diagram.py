"""Planar diagram codes: parsing, smoothing, the state-sum bracket, generators.

A diagram is a PD code: one 4-tuple of arc labels per crossing, listed
counterclockwise starting at the incoming under-strand.  A-smoothing of
(a,b,c,d) joins the arc-ends (a,b) and (c,d); B-smoothing joins (b,c) and
(d,a).  Every downstream invariant is calibrated against this pairing.

Internally the diagram is a 4-valent planar map on "darts": dart 4c+p is
the arc-end at position p of crossing c, pointing away from the crossing.
alpha swaps the two darts of an arc; the counterclockwise successor at a
crossing is position p+1.  Faces are the orbits of sigma^-1 o alpha (the
face to the left of outward travel along a dart), and face_id[d] names
the face occupying the corner counterclockwise of dart d.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .poly import DELTA, LaurentPoly

__all__ = [
    "PDCode",
    "StateCircles",
    "DiagramError",
    "OrientationError",
    "CapExceededError",
    "A_PAIRS",
    "B_PAIRS",
    "parse_pd",
    "pd_to_text",
    "mirror",
    "smooth_state",
    "state_circle_count",
    "state_sum_bracket",
    "writhe",
    "strand_components",
    "pretzel_pd",
    "twist_pd",
    "generate_family",
    "reduce_to_one_vertex",
    "knot_table",
    "table_pd",
]


class DiagramError(ValueError):
    """Malformed, disconnected, or non-planar diagram input."""


class OrientationError(DiagramError):
    """Crossing signs are required but cannot be inferred."""


class CapExceededError(RuntimeError):
    """An exponential scan would exceed the configured cap."""


Crossing = Tuple[int, int, int, int]
StateLike = Union[int, Sequence[int], Sequence[str], str]

# Smoothing pairings by tuple position: A joins (a,b) and (c,d), B joins
# (b,c) and (d,a).  _PARTNER[bit][p] is the position joined to p under
# smoothing bit (0 = A, 1 = B); _CHANNEL[bit][p] numbers the two smoothing
# channels 0 and 1 at the crossing.
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((1, 2), (3, 0))
_PARTNER = ((1, 0, 3, 2), (3, 2, 1, 0))
_CHANNEL = ((0, 0, 1, 1), (1, 0, 0, 1))


# ============================================================
# PD codes
# ============================================================


@dataclass(frozen=True)
class PDCode:
    """A connected link diagram in planar-diagram notation."""

    crossings: Tuple[Crossing, ...]
    signs: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        crossings = tuple(tuple(int(x) for x in tup) for tup in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if not crossings:
            raise DiagramError("a PD code needs at least one crossing")
        seen: Dict[int, int] = {}
        for tup in crossings:
            if len(tup) != 4:
                raise DiagramError(f"crossing {tup} is not a 4-tuple")
            for lab in tup:
                if lab < 1:
                    raise DiagramError(f"arc label {lab} is not a positive integer")
                seen[lab] = seen.get(lab, 0) + 1
        bad = {lab: cnt for lab, cnt in seen.items() if cnt != 2}
        if bad:
            raise DiagramError(f"arc labels must occur exactly twice, got {bad}")
        if self.signs is not None:
            signs = tuple(int(s) for s in self.signs)
            object.__setattr__(self, "signs", signs)
            if len(signs) != len(crossings):
                raise DiagramError("sign list length differs from crossing count")
            if any(s not in (-1, 1) for s in signs):
                raise DiagramError("crossing signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return 2 * len(self.crossings)

    def __str__(self) -> str:
        return pd_to_text(self)


_X_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\Z")
_S_RE = re.compile(r"S\[([^\]]*)\]\Z")


def parse_pd(text: str) -> PDCode:
    """Parse whitespace-separated `X[a,b,c,d]` tokens, optionally `S[+,-,..]`.

    Arc labels are normalized to 1..n_arcs preserving their relative order.
    """
    tokens = text.split()
    if not tokens:
        raise DiagramError("empty PD input")
    crossings: List[Crossing] = []
    signs: Optional[Tuple[int, ...]] = None
    for tok in tokens:
        m = _X_RE.match(tok)
        if m:
            if signs is not None:
                raise DiagramError("S[...] must come after all crossings")
            crossings.append(tuple(int(g) for g in m.groups()))
            continue
        m = _S_RE.match(tok)
        if m:
            if signs is not None:
                raise DiagramError("duplicate S[...] token")
            entries = [e.strip() for e in m.group(1).split(",") if e.strip()]
            try:
                signs = tuple(int(e + "1") if e in ("+", "-") else int(e) for e in entries)
            except ValueError:
                raise DiagramError(f"bad sign entry in {tok!r}") from None
            continue
        raise DiagramError(f"malformed PD token {tok!r}")
    if not crossings:
        raise DiagramError("no crossings in PD input")
    labels = sorted({lab for tup in crossings for lab in tup})
    remap = {lab: i + 1 for i, lab in enumerate(labels)}
    crossings = [tuple(remap[lab] for lab in tup) for tup in crossings]
    return PDCode(tuple(crossings), signs)


def pd_to_text(pd: PDCode) -> str:
    parts = ["X[%d,%d,%d,%d]" % tup for tup in pd.crossings]
    if pd.signs is not None:
        parts.append("S[" + ",".join("+" if s > 0 else "-" for s in pd.signs) + "]")
    return " ".join(parts)


def mirror(pd: PDCode) -> PDCode:
    """Mirror image: reverse each tuple's cyclic order (swap over/under)."""
    flipped = tuple((a, d, c, b) for (a, b, c, d) in pd.crossings)
    signs = None if pd.signs is None else tuple(-s for s in pd.signs)
    return PDCode(flipped, signs)


# ============================================================
# The 4-valent planar map
# ============================================================


@dataclass(frozen=True)
class _PlanarMap:
    n: int
    alpha: Tuple[int, ...]
    face_id: Tuple[int, ...]
    n_faces: int
    # arc label -> its two darts, in tuple-scan order
    darts_of: Mapping[int, Tuple[int, int]]


@lru_cache(maxsize=512)
def _planar_map(crossings: Tuple[Crossing, ...]) -> _PlanarMap:
    n = len(crossings)
    nd = 4 * n
    occ: Dict[int, List[int]] = {}
    for c, tup in enumerate(crossings):
        for p, lab in enumerate(tup):
            occ.setdefault(lab, []).append(4 * c + p)
    alpha = [0] * nd
    for lab, darts in occ.items():
        if len(darts) != 2:
            raise DiagramError(f"arc {lab} occurs {len(darts)} times")
        a, b = darts
        alpha[a] = b
        alpha[b] = a

    # connectivity of the underlying 4-valent graph
    seen = [False] * n
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        c = stack.pop()
        for p in range(4):
            c2 = alpha[4 * c + p] >> 2
            if not seen[c2]:
                seen[c2] = True
                reached += 1
                stack.append(c2)
    if reached != n:
        raise DiagramError(f"diagram is not connected ({reached} of {n} crossings reachable)")

    # left faces: orbits of d -> sigma^-1(alpha(d))
    face_id = [-1] * nd
    nf = 0
    for d0 in range(nd):
        if face_id[d0] >= 0:
            continue
        d = d0
        while face_id[d] < 0:
            face_id[d] = nf
            a = alpha[d]
            d = (a & ~3) | ((a + 3) & 3)
        nf += 1
    if nf != n + 2:
        raise DiagramError(
            f"PD code is not planar: {nf} faces for {n} crossings (expected {n + 2})"
        )
    darts_of = {lab: (ds[0], ds[1]) for lab, ds in occ.items()}
    return _PlanarMap(n, tuple(alpha), tuple(face_id), nf, darts_of)


def _state_mask(pd: PDCode, s: StateLike) -> int:
    """Normalize a state (bitmask, 'AABB' string, or sequence) to a bitmask."""
    n = len(pd.crossings)
    if isinstance(s, int):
        if not 0 <= s < (1 << n):
            raise DiagramError(f"state mask {s} out of range for {n} crossings")
        return s
    entries = list(s)
    if len(entries) != n:
        raise DiagramError(f"state has {len(entries)} entries for {n} crossings")
    mask = 0
    for i, ch in enumerate(entries):
        if ch in ("A", "a", 0, "0"):
            bit = 0
        elif ch in ("B", "b", 1, "1"):
            bit = 1
        else:
            raise DiagramError(f"state entry {ch!r} is neither A nor B")
        mask |= bit << i
    return mask


# ============================================================
# State circles
# ============================================================


@dataclass(frozen=True)
class StateCircles:
    """Circles of a fully smoothed diagram, with oriented endpoint orders.

    Each crossing contributes two chord endpoints (crossing, channel); a
    circle's cyclic_order lists the endpoints met along its traversal,
    directed by the nesting-parity rule (depth-even circles run
    counterclockwise).
    """

    count: int
    membership: Mapping[Tuple[int, int], int]
    cyclic_orders: Tuple[Tuple[Tuple[int, int], ...], ...]

    def __post_init__(self):
        if self.count != len(self.cyclic_orders):
            raise DiagramError("circle count mismatch")
        total = sum(len(c) for c in self.cyclic_orders)
        if total != len(self.membership):
            raise DiagramError("endpoint bookkeeping mismatch")


def _trace_circles(alpha, n, mask):
    """Traverse the smoothed diagram; yields (spots, start_dart) per circle.

    The traversal at dart d crosses its smoothing channel to the partner
    dart, then follows the arc onward; marking both darts of each channel
    visits every circle exactly once, in one direction.
    """
    visited = [False] * (4 * n)
    out = []
    for d0 in range(4 * n):
        if visited[d0]:
            continue
        spots: List[Tuple[int, int]] = []
        d = d0
        while not visited[d]:
            visited[d] = True
            c = d >> 2
            p = d & 3
            bit = (mask >> c) & 1
            spots.append((c, _CHANNEL[bit][p]))
            d2 = (d & ~3) | _PARTNER[bit][p]
            visited[d2] = True
            d = alpha[d2]
        out.append((spots, d0))
    return out


def state_circle_count(pd: PDCode, s: StateLike) -> int:
    """Number of circles of the smoothed diagram (no orientation work)."""
    pm = _planar_map(pd.crossings)
    mask = _state_mask(pd, s)
    return len(_trace_circles(pm.alpha, pm.n, mask))


def smooth_state(pd: PDCode, s: StateLike, outer_corner: int = 0) -> StateCircles:
    """Smooth every crossing per the state and orient the resulting circles.

    Circle orientations follow the nesting-parity rule, computed
    combinatorially: smoothing merges the two channel corners at each
    crossing into regions, the regions of the circle arrangement form a
    tree, and breadth-first depth from the outer region (the region at the
    corner of dart `outer_corner`) gives each circle's nesting depth.
    """
    pm = _planar_map(pd.crossings)
    mask = _state_mask(pd, s)
    n = pm.n
    alpha = pm.alpha
    face_id = pm.face_id
    traced = _trace_circles(alpha, n, mask)

    # Regions: smoothing at crossing c merges the two corners its channels
    # do not cover (the corner after each pair's second position).
    parent = list(range(pm.n_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(n):
        (p0, p1), (p2, p3) = A_PAIRS if not (mask >> c) & 1 else B_PAIRS
        ra, rb = find(face_id[4 * c + p1]), find(face_id[4 * c + p3])
        if ra != rb:
            parent[ra] = rb

    # Each circle separates two regions: the faces left and right of its
    # outward travel just after crossing a channel.
    sides: List[Tuple[int, int]] = []
    for spots, d0 in traced:
        c = d0 >> 2
        p = d0 & 3
        b = (d0 & ~3) | _PARTNER[(mask >> c) & 1][p]
        left = find(face_id[b])
        right = find(face_id[(b & ~3) | ((b + 3) & 3)])
        if left == right:
            raise DiagramError("internal error: circle bounds a single region")
        sides.append((left, right))

    regions = {find(f) for f in range(pm.n_faces)}
    if len(regions) != len(traced) + 1:
        raise DiagramError("internal error: region count is not circles+1")

    # Breadth-first nesting depth over the region tree (edges = circles).
    adj: Dict[int, List[int]] = {r: [] for r in regions}
    for left, right in sides:
        adj[left].append(right)
        adj[right].append(left)
    outer = find(face_id[outer_corner])
    depth = {outer: 0}
    frontier = [outer]
    while frontier:
        nxt: List[int] = []
        for r in frontier:
            for r2 in adj[r]:
                if r2 not in depth:
                    depth[r2] = depth[r] + 1
                    nxt.append(r2)
        frontier = nxt
    if len(depth) != len(regions):
        raise DiagramError("internal error: region tree not connected")

    # Orient: a circle at even nesting depth runs counterclockwise; the
    # traversal is counterclockwise exactly when its left side is the
    # deeper (inner) region.
    oriented: List[Tuple[Tuple[int, int], ...]] = []
    for (spots, _), (left, right) in zip(traced, sides):
        dl, dr = depth[left], depth[right]
        if abs(dl - dr) != 1:
            raise DiagramError("internal error: circle sides differ by != 1 in depth")
        want_ccw = min(dl, dr) % 2 == 0
        is_ccw = dl > dr
        oriented.append(tuple(spots if want_ccw == is_ccw else spots[::-1]))

    membership = {
        spot: ci for ci, spots in enumerate(oriented) for spot in spots
    }
    return StateCircles(len(oriented), membership, tuple(oriented))


# ============================================================
# State-sum Kauffman bracket (the brute-force oracle)
# ============================================================


def _bracket_counts(alpha: Tuple[int, ...], n: int, start: int, stop: int):
    """Tally (A-minus-B exponent, circles-1) over states start <= mask < stop."""
    counts: Dict[Tuple[int, int], int] = {}
    nd = 4 * n
    visited = [-1] * nd
    p0 = _PARTNER[0]
    p1 = _PARTNER[1]
    for mask in range(start, stop):
        k = 0
        for d0 in range(nd):
            if visited[d0] == mask:
                continue
            k += 1
            d = d0
            while visited[d] != mask:
                visited[d] = mask
                d2 = (d & ~3) | (p1[d & 3] if (mask >> (d >> 2)) & 1 else p0[d & 3])
                visited[d2] = mask
                d = alpha[d2]
        key = (n - 2 * mask.bit_count(), k - 1)
        counts[key] = counts.get(key, 0) + 1
    return counts


def state_sum_bracket(pd: PDCode, cap: int = 20, workers: int = 1) -> LaurentPoly:
    """Kauffman bracket by direct summation over all 2^n states.

    <P> = sum over states of A^(#A - #B) * delta^(#circles - 1).
    """
    n = len(pd.crossings)
    if n > cap:
        raise CapExceededError(f"{n} crossings exceeds the state-sum cap {cap}")
    pm = _planar_map(pd.crossings)
    total = 1 << n
    workers = max(1, min(workers, os.cpu_count() or 1))
    if workers == 1 or total < (1 << 14):
        counts = _bracket_counts(pm.alpha, n, 0, total)
    else:
        import multiprocessing

        bounds = [total * i // workers for i in range(workers + 1)]
        args = [(pm.alpha, n, bounds[i], bounds[i + 1]) for i in range(workers)]
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            parts = pool.starmap(_bracket_counts, args)
        counts = {}
        for part in parts:
            for key, mult in part.items():
                counts[key] = counts.get(key, 0) + mult
    max_k = max(k for _, k in counts)
    dpow = [LaurentPoly.one()]
    for _ in range(max_k):
        dpow.append(dpow[-1] * DELTA)
    acc = LaurentPoly()
    for (shift, k1), mult in sorted(counts.items()):
        acc = acc + dpow[k1].shift(shift) * mult
    return acc


# ============================================================
# Orientation and writhe
# ============================================================


def strand_components(pd: PDCode) -> List[List[Tuple[int, int]]]:
    """Link components as strand walks; entries are (crossing, entry position).

    A strand entering a crossing at position p leaves at position p+2; the
    walk direction within each component is an arbitrary but fixed choice.
    """
    pm = _planar_map(pd.crossings)
    state = [0] * (4 * pm.n)  # 0 untouched, 1 entry, 2 exit
    comps: List[List[Tuple[int, int]]] = []
    for d0 in range(4 * pm.n):
        if state[d0]:
            continue
        walk: List[Tuple[int, int]] = []
        d = d0
        while state[d] == 0:
            state[d] = 1
            walk.append((d >> 2, d & 3))
            exit_d = (d & ~3) | ((d + 2) & 3)
            state[exit_d] = 2
            d = pm.alpha[exit_d]
        comps.append(walk)
    return comps


def writhe(pd: PDCode) -> int:
    """Signed crossing count of an oriented diagram.

    Explicit S[...] signs are used when present.  Otherwise the diagram
    must be a knot: the single strand is traced, and a crossing is positive
    exactly when its over-strand enters three positions counterclockwise of
    the under-entry (over entering at d for under entering at a).
    """
    if pd.signs is not None:
        return sum(pd.signs)
    comps = strand_components(pd)
    if len(comps) != 1:
        raise OrientationError(
            f"{len(comps)}-component diagram: writhe needs explicit S[...] signs"
        )
    entries: Dict[int, List[int]] = {}
    for c, p in comps[0]:
        entries.setdefault(c, []).append(p)
    total = 0
    for c, pair in entries.items():
        evens = [p for p in pair if p % 2 == 0]
        odds = [p for p in pair if p % 2 == 1]
        if len(evens) != 1 or len(odds) != 1:
            raise DiagramError(f"internal error: bad strand entries {pair} at crossing {c}")
        total += 1 if (odds[0] - evens[0]) % 4 == 3 else -1
    return total


# ============================================================
# Generators: pretzel and twist families
# ============================================================


def pretzel_pd(params: Sequence[int]) -> PDCode:
    """Pretzel link diagram: one vertical twist column per parameter.

    A column with parameter q > 0 holds q crossings whose A-smoothing is
    vertical (the column smooths to two parallel strands); q < 0 mirrors
    the column crossings, so A-smoothing is horizontal.  Column tops are
    chained cyclically left to right, as are the bottoms.
    """
    cols = [int(q) for q in params]
    if not cols:
        raise DiagramError("pretzel needs at least one column")
    if any(q == 0 for q in cols):
        raise DiagramError("pretzel parameters must be nonzero")
    m = len(cols)
    tops = [j + 1 for j in range(m)]
    bots = [m + j + 1 for j in range(m)]
    nxt = 2 * m + 1
    crossings: List[Crossing] = []
    for j, q in enumerate(cols):
        count = abs(q)
        ul, ur = tops[(j - 1) % m], tops[j]
        for i in range(count):
            if i < count - 1:
                dl, dr = nxt, nxt + 1
                nxt += 2
            else:
                dl, dr = bots[(j - 1) % m], bots[j]
            if q > 0:
                crossings.append((ul, dl, dr, ur))
            else:
                crossings.append((ur, ul, dl, dr))
            ul, ur = dl, dr
    pd = PDCode(tuple(crossings))
    _planar_map(pd.crossings)  # validate connectivity and planarity
    return pd


# Frozen orientation of the two twist regions and the closure; calibrated
# so twist(2,3) is the figure-8 knot with the one-vertex all-A dessin.
_TWIST_VARIANT = (1, 0, 1)


def _double_twist(p: int, q: int, h: int, v: int, closure: int) -> PDCode:
    """Numerator/denominator closure of p horizontal then q vertical twists.

    Builds the rational tangle from the 0-tangle (two horizontal strands):
    p twists of the two east endpoints, then q twists of the two south
    endpoints; h and v pick the crossing sign inside each region.
    """
    if p < 1 or q < 1:
        raise DiagramError("twist parameters must be >= 1")
    nw = ne = 1
    sw = se = 2
    nxt = 3
    crossings: List[Crossing] = []
    for _ in range(p):
        et, eb = nxt, nxt + 1
        nxt += 2
        if h == 0:
            crossings.append((ne, se, eb, et))
        else:
            crossings.append((se, eb, et, ne))
        ne, se = et, eb
    for _ in range(q):
        sl, sr = nxt, nxt + 1
        nxt += 2
        if v == 0:
            crossings.append((sw, sl, sr, se))
        else:
            crossings.append((se, sw, sl, sr))
        sw, se = sl, sr
    pairs = ((nw, ne), (sw, se)) if closure == 0 else ((nw, sw), (ne, se))
    relabel = {}
    for keep, drop in pairs:
        if keep == drop:
            raise DiagramError("degenerate closure: free circle")
        relabel[drop] = keep
    merged = tuple(
        tuple(relabel.get(lab, lab) for lab in tup) for tup in crossings
    )
    return parse_pd(" ".join("X[%d,%d,%d,%d]" % tup for tup in merged))


def twist_pd(p: int, q: int) -> PDCode:
    """The (p,q) double-twist knot diagram with a one-vertex all-A dessin."""
    pd = _double_twist(p, q, *_TWIST_VARIANT)
    if state_circle_count(pd, 0) != 1:
        raise DiagramError("internal error: twist diagram all-A state is not one circle")
    return pd


def generate_family(kind: str, params: Sequence[int]) -> PDCode:
    """Dispatch to a named diagram family: pretzel(q1,..) or twist(p,q)."""
    if kind == "pretzel":
        return pretzel_pd(params)
    if kind == "twist":
        if len(params) != 2:
            raise DiagramError("twist takes exactly two parameters")
        return twist_pd(params[0], params[1])
    raise DiagramError(f"unknown family {kind!r}")


# ============================================================
# Reidemeister-II reduction to a one-vertex all-A dessin
# ============================================================


def reduce_to_one_vertex(pd: PDCode) -> PDCode:
    """Clasp-insert RII pairs until the all-A state has a single circle.

    Each step picks the lowest-index crossing whose two smoothing channels
    lie on distinct all-A circles and slides one strand over the other
    next to it (two new crossings, both A-smoothing across the old gap),
    merging those circles.  The link type, hence the bracket, is
    unchanged; each step adds 2 crossings and removes 1 circle.
    """
    crossings = [list(tup) for tup in pd.crossings]
    circles = smooth_state(PDCode(tuple(tuple(t) for t in crossings)), 0)
    while circles.count > 1:
        member = circles.membership
        target = -1
        for c in range(len(crossings)):
            if member[(c, 0)] != member[(c, 1)]:
                target = c
                break
        if target < 0:
            raise DiagramError("internal error: no circle-joining crossing found")
        x = crossings[target][1]
        y = crossings[target][2]
        if x == y:
            raise DiagramError("internal error: joining crossing with x == y")
        cx, px = next(
            (c, p)
            for c in range(len(crossings))
            for p in range(4)
            if crossings[c][p] == x and (c, p) != (target, 1)
        )
        cy, py = next(
            (c, p)
            for c in range(len(crossings))
            for p in range(4)
            if crossings[c][p] == y and (c, p) != (target, 2)
        )
        top = max(max(t) for t in crossings)
        x_mid, x_far, y_mid, y_far = top + 1, top + 2, top + 3, top + 4
        crossings[cx][px] = x_far
        crossings[cy][py] = y_far
        crossings.append([y, x, y_mid, x_mid])
        crossings.append([y_mid, x_far, y_far, x_mid])
        reduced = PDCode(tuple(tuple(t) for t in crossings))
        next_circles = smooth_state(reduced, 0)
        if next_circles.count != circles.count - 1:
            raise DiagramError("internal error: clasp insertion did not merge circles")
        circles = next_circles
    out = PDCode(tuple(tuple(t) for t in crossings))
    return out


# ============================================================
# Bundled knot table
# ============================================================

_TABLE_ENV = "DESSINLINK_TABLE"


def _table_text() -> str:
    path = os.environ.get(_TABLE_ENV)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    from importlib import resources

    return resources.files("dessinlink").joinpath("tables/knots.txt").read_text("utf-8")


def knot_table() -> Dict[str, str]:
    """Bundled name -> PD string mapping (override path via DESSINLINK_TABLE)."""
    table: Dict[str, str] = {}
    for line in _table_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, pd_text = line.partition(":")
        name, pd_text = name.strip(), pd_text.strip()
        if not name or not pd_text:
            raise DiagramError(f"bad table line {line!r}")
        table[name] = pd_text
    return table


def table_pd(name: str) -> PDCode:
    table = knot_table()
    if name not in table:
        raise DiagramError(f"unknown table entry {name!r}; have {sorted(table)}")
    return parse_pd(table[name])
