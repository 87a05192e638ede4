"""Shared test utilities: braid-closure diagrams and seeded random corpora."""

import random
from typing import List, Sequence

from dessinlink.diagram import PDCode, mirror, state_circle_count, strand_components

# One line per acceptance criterion, echoed after the pytest run summary.
ACCEPTANCE_LINES: List[str] = []


def braid_pd(word: Sequence[int], n_strands: int) -> PDCode:
    """Trace closure of a braid word as a PD code.

    Letter +k crosses strand k-1 under strand k (right strand over);
    -k is the mirror crossing.  Every strand must meet a crossing.
    """
    n = n_strands
    cur = list(range(1, n + 1))
    fresh = n + 1
    tuples = []
    for letter in word:
        k = abs(letter) - 1
        if not 0 <= k < n - 1:
            raise ValueError(f"letter {letter} out of range for {n} strands")
        li, ri = cur[k], cur[k + 1]
        lo, ro = fresh, fresh + 1
        fresh += 2
        if letter > 0:
            tuples.append((li, lo, ro, ri))
        else:
            tuples.append((ri, li, lo, ro))
        cur[k], cur[k + 1] = lo, ro
    if any(cur[i] == i + 1 for i in range(n)):
        raise ValueError("closure has a crossing-free component")
    subs = {cur[i]: i + 1 for i in range(n)}
    return PDCode(
        crossings=[tuple(subs.get(x, x) for x in t) for t in tuples]
    )


def random_braid_word(rng: random.Random, n_strands: int, length: int) -> List[int]:
    """Random word over +/- generators in which every generator appears."""
    gens = list(range(1, n_strands))
    while True:
        word = [rng.choice(gens) * rng.choice((1, -1)) for _ in range(length)]
        if {abs(x) for x in word} == set(gens):
            return word


def random_diagram(rng: random.Random, max_crossings: int = 10) -> PDCode:
    """One random connected braid-closure diagram, mirrored so the all-A
    state has no more circles than the all-B state."""
    while True:
        n_strands = rng.randint(2, 4)
        length = rng.randint(max(3, n_strands), max_crossings)
        try:
            pd = braid_pd(random_braid_word(rng, n_strands, length), n_strands)
        except ValueError:
            continue
        full = (1 << pd.n) - 1
        if state_circle_count(pd, 0) > state_circle_count(pd, full):
            pd = mirror(pd)
        return pd


def corpus(seed: int, count: int, max_crossings: int = 10) -> List[PDCode]:
    """Deterministic corpus of distinct random diagrams."""
    rng = random.Random(seed)
    seen = set()
    out: List[PDCode] = []
    while len(out) < count:
        pd = random_diagram(rng, max_crossings)
        key = pd.crossings
        if key in seen:
            continue
        seen.add(key)
        out.append(pd)
    return out


def knot_corpus(seed: int, count: int, max_crossings: int = 10) -> List[PDCode]:
    """Like corpus(), keeping only single-component diagrams."""
    rng = random.Random(seed)
    seen = set()
    out: List[PDCode] = []
    while len(out) < count:
        pd = random_diagram(rng, max_crossings)
        if len(strand_components(pd)) != 1:
            continue
        key = pd.crossings
        if key in seen:
            continue
        seen.add(key)
        out.append(pd)
    return out
