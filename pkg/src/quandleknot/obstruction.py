"""Decision procedures on top of the invariants.

All verdicts are one-sided: the invariants can certify chirality,
non-embeddability, or non-classicality, but never the opposite, so the
fallback outcome is always "inconclusive".
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .coloring import InvariantQuery, colorings_tangle_boundary_mono
from .diagram import ClosedDiagram, LongDiagram, TangleDiagram, break_at, break_before_underpass, concat, mirror
from .longitude import (
    FormalSum,
    formal_sum,
    longitude_family,
    sum_equal,
    sum_included,
    sum_render,
    tangle_longitude_parts,
    tangle_sums,
)
from .quandle import eval_word

DISTINCT = "distinct"
OBSTRUCTED = "obstructed"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Outcome plus the compared sums that witness it."""

    kind: str
    sums: dict[str, FormalSum] = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "verdict": self.kind,
            "sums": {name: {s.quandle.labels[e]: c for e, c in s.terms}
                     for name, s in sorted(self.sums.items())},
        }
        return json.dumps(payload, sort_keys=True)

    def render(self) -> str:
        lines = [f"verdict: {self.kind}"]
        for name in sorted(self.sums):
            lines.append(f"  {name} = {sum_render(self.sums[name])}")
        return "\n".join(lines)


def _as_long(k: ClosedDiagram | LongDiagram) -> LongDiagram:
    # classical basepoint independence makes the break choice immaterial
    return break_at(k, 1) if isinstance(k, ClosedDiagram) else k


def chirality_test(d: ClosedDiagram | LongDiagram, query: InvariantQuery,
                   jobs: int = 1) -> Verdict:
    """Distinct sums for a diagram and its mirror certify a chiral knot."""
    long_d = _as_long(d)
    s = formal_sum(long_d, query.quandle, query, jobs)
    s_mirror = formal_sum(mirror(long_d), query.quandle, query, jobs)
    kind = DISTINCT if not sum_equal(s, s_mirror) else INCONCLUSIVE
    return Verdict(kind, {"diagram": s, "mirror": s_mirror})


def tangle_embedding_obstruction(t: TangleDiagram, k: ClosedDiagram | LongDiagram,
                                 query: InvariantQuery, jobs: int = 1) -> Verdict:
    """Obstructed iff neither tangle sum is included in the knot's formal sum."""
    s1, s2 = tangle_sums(t, query.quandle, query, jobs)
    s_knot = formal_sum(_as_long(k), query.quandle, query, jobs)
    obstructed = not sum_included(s1, s_knot) and not sum_included(s2, s_knot)
    return Verdict(OBSTRUCTED if obstructed else INCONCLUSIVE,
                   {"S1": s1, "S2": s2, "knot": s_knot})


def tangle_embedding_obstruction_families(t: TangleDiagram, k: ClosedDiagram | LongDiagram,
                                          query: InvariantQuery, jobs: int = 1) -> Verdict:
    """Experimental family-level variant of the embedding obstruction.

    If the tangle embeds, each boundary-monochromatic coloring extends to a
    coloring of the knot whose colored longitude equals one concatenation of
    the tangle's longitude parts (the same order for every coloring, fixed by
    where the basepoint sits relative to the tangle).  Obstructed iff neither
    order's automorphism multiset embeds into the knot's longitude family.
    """
    q = query.quandle
    first: Counter = Counter()
    second: Counter = Counter()
    for c in colorings_tangle_boundary_mono(t, q, query.basepoint, jobs):
        w1, w2 = tangle_longitude_parts(t, c)
        first[tuple(eval_word(q, x, w1 + w2) for x in range(len(q)))] += 1
        second[tuple(eval_word(q, x, w2 + w1) for x in range(len(q)))] += 1
    family = Counter(a.images for a in longitude_family(_as_long(k), q, query.basepoint, jobs).members)
    included = any(all(family.get(img, 0) >= mult for img, mult in order.items())
                   for order in (first, second))
    return Verdict(INCONCLUSIVE if included else OBSTRUCTED)


def basepoint_spectrum(c: ClosedDiagram, query: InvariantQuery,
                       jobs: int = 1) -> tuple[FormalSum, ...]:
    """One formal sum per arc, breaking just before each under-passage."""
    return tuple(
        formal_sum(break_before_underpass(c, i), query.quandle, query, jobs)
        for i in range(1, c.n + 1)
    )


def nonclassical_by_basepoints(c: ClosedDiagram, query: InvariantQuery,
                               jobs: int = 1) -> Verdict:
    """Two differing basepoint sums certify that the code is non-classical:
    a classical diagram would have a basepoint-independent invariant."""
    spectrum = basepoint_spectrum(c, query, jobs)
    sums = {f"break_{i}": s for i, s in enumerate(spectrum, 1)}
    distinct = any(not sum_equal(spectrum[0], s) for s in spectrum[1:])
    return Verdict(DISTINCT if distinct else INCONCLUSIVE, sums)


def connected_sum_commutativity(k1: LongDiagram, k2: LongDiagram,
                                query: InvariantQuery, jobs: int = 1) -> Verdict:
    """Compare K1#K2 with K2#K1 at both the sum and the family level."""
    q = query.quandle
    ab = concat(k1, k2)
    ba = concat(k2, k1)
    s_ab = formal_sum(ab, q, query, jobs)
    s_ba = formal_sum(ba, q, query, jobs)
    fam_ab = longitude_family(ab, q, query.basepoint, jobs)
    fam_ba = longitude_family(ba, q, query.basepoint, jobs)
    families_differ = [a.images for a in fam_ab.members] != [a.images for a in fam_ba.members]
    kind = DISTINCT if (not sum_equal(s_ab, s_ba) or families_differ) else INCONCLUSIVE
    return Verdict(kind, {"K1#K2": s_ab, "K2#K1": s_ba})
