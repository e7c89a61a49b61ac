"""Quandle longitudes, colored longitudes, invariant families, and formal sums.

The longitude of an n-crossing long diagram is the 2n-letter word that lists,
for crossing i, the under-arc entering it and then its over-arc.  The under
letter is barred exactly when the crossing sign is +1, the over letter when it
is -1; evaluating the word in a coloring and folding left-normed translations
yields a quandle automorphism.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .coloring import Coloring, InvariantQuery, colorings_long, colorings_tangle_boundary_mono
from .diagram import LongDiagram, TangleDiagram
from .quandle import Automorphism, FiniteQuandle, QuandleWord, eval_word


@dataclass(frozen=True)
class SymbolicLongitude:
    """The longitude as (arc, barred) letters over arc generators x1..x(n+1)."""

    letters: tuple[tuple[int, bool], ...]

    def render(self) -> str:
        body = ", ".join(("x̄" if barred else "x") + str(arc) for arc, barred in self.letters)
        return "{" + body + "}"


def symbolic_longitude(d: LongDiagram) -> SymbolicLongitude:
    letters = []
    for i in range(d.n):
        positive = d.sign[i] > 0
        letters.append((i + 1, positive))
        letters.append((d.over_arc[i], not positive))
    return SymbolicLongitude(tuple(letters))


def _colored_word(letters: Iterable[tuple[int, bool]], arc_colors: tuple[int, ...]) -> QuandleWord:
    return tuple((arc_colors[arc - 1], barred) for arc, barred in letters)


def colored_longitude(d: LongDiagram, q: FiniteQuandle, coloring: Coloring) -> Automorphism:
    """Evaluate the longitude word in a coloring, as a quandle automorphism."""
    if coloring.diagram != d:
        raise ValueError("coloring does not belong to this diagram")
    word = _colored_word(symbolic_longitude(d).letters, coloring.arc_colors)
    images = tuple(eval_word(q, x, word) for x in range(len(q)))
    return Automorphism(q, images)


@dataclass(frozen=True)
class AutomorphismFamily:
    """A multiset of automorphisms in canonical order (sorted image tuples)."""

    quandle: FiniteQuandle
    members: tuple[Automorphism, ...]

    def __len__(self) -> int:
        return len(self.members)


def longitude_family(d: LongDiagram, q: FiniteQuandle, basepoint: int,
                     jobs: int = 1) -> AutomorphismFamily:
    """All colored longitudes over the colorings with the given basepoint."""
    autos = [colored_longitude(d, q, c) for c in colorings_long(d, q, basepoint, jobs)]
    autos.sort(key=lambda a: a.images)
    return AutomorphismFamily(q, tuple(autos))


@dataclass(frozen=True)
class FormalSum:
    """Nonnegative integer combination of quandle elements; zero terms omitted."""

    quandle: FiniteQuandle
    terms: tuple[tuple[int, int], ...]  # (element index, coefficient), sorted by element

    @classmethod
    def from_elements(cls, q: FiniteQuandle, elements: Iterable[int]) -> "FormalSum":
        counts = Counter(elements)
        return cls(q, tuple(sorted(counts.items())))

    def coefficient(self, element: int) -> int:
        return dict(self.terms).get(element, 0)

    def mass(self) -> int:
        return sum(c for _, c in self.terms)


def sum_equal(a: FormalSum, b: FormalSum) -> bool:
    return a.terms == b.terms


def sum_included(a: FormalSum, b: FormalSum) -> bool:
    """Coefficientwise a <= b."""
    other = dict(b.terms)
    return all(coeff <= other.get(elem, 0) for elem, coeff in a.terms)


def sum_render(a: FormalSum) -> str:
    """Text like ``6 · (1,2,4)(3,5) + (1,2,3)(4,5)``; descending coefficients."""
    if not a.terms:
        return "0"
    ordered = sorted(a.terms, key=lambda t: (-t[1], a.quandle.labels[t[0]]))
    parts = []
    for elem, coeff in ordered:
        label = a.quandle.labels[elem]
        parts.append(label if coeff == 1 else f"{coeff} · {label}")
    return " + ".join(parts)


def sum_to_json(a: FormalSum) -> str:
    return json.dumps({a.quandle.labels[e]: c for e, c in a.terms}, sort_keys=True)


def formal_sum(d: LongDiagram, q: FiniteQuandle, query: InvariantQuery,
               jobs: int = 1) -> FormalSum:
    """Sum of phi(x) over all colored longitudes phi with basepoint q."""
    letters = symbolic_longitude(d).letters
    images = []
    for c in colorings_long(d, q, query.basepoint, jobs):
        word = _colored_word(letters, c.arc_colors)
        images.append(eval_word(q, query.act_on, word))
    return FormalSum.from_elements(q, images)


# --- tangle longitude parts -------------------------------------------------

def tangle_longitude_parts(t: TangleDiagram, coloring: Coloring) -> tuple[QuandleWord, QuandleWord]:
    """Per-strand colored longitude words, letters exactly as in the long case."""
    if coloring.diagram != t:
        raise ValueError("coloring does not belong to this tangle")
    words = []
    for s in (1, 2):
        letters = []
        own = coloring.strands[s - 1]
        for k, c in enumerate(t.strands[s - 1]):
            over_color = coloring.strands[c.over_strand - 1][c.over_arc - 1]
            positive = c.sign > 0
            letters.append((own[k], positive))
            letters.append((over_color, not positive))
        words.append(tuple(letters))
    return words[0], words[1]


def tangle_sums(t: TangleDiagram, q: FiniteQuandle, query: InvariantQuery,
                jobs: int = 1) -> tuple[FormalSum, FormalSum]:
    """S1 and S2: both concatenation orders of the longitude parts, summed over
    all boundary-monochromatic colorings with the query's basepoint."""
    first, second = [], []
    for c in colorings_tangle_boundary_mono(t, q, query.basepoint, jobs):
        w1, w2 = tangle_longitude_parts(t, c)
        first.append(eval_word(q, query.act_on, w1 + w2))
        second.append(eval_word(q, query.act_on, w2 + w1))
    return FormalSum.from_elements(q, first), FormalSum.from_elements(q, second)
