"""Quandle coloring enumeration for long, closed, and tangle diagrams.

Each crossing contributes the relation ``color(out) = color(in) op color(over)``
with ``op`` being ``*`` for sign +1 and ``*bar`` for sign -1.  The search
propagates forced colors in both directions along under-arcs (Q2 makes the
relation solvable for the incoming arc too), guesses an over-arc color only
when stuck, and rejects on conflict.  Branching is therefore bounded by
|Q|^(number of genuinely free over-arcs), which stays small on knot-shaped
relation systems.
"""
from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass

from .diagram import ClosedDiagram, Diagram, LongDiagram, TangleDiagram
from .quandle import FiniteQuandle

Relation = tuple[int, int, int, int]  # (out_arc, in_arc, over_arc, sign), 0-based arcs


@dataclass(frozen=True)
class Coloring:
    """Arc colors (quandle element indices) per strand, in traversal order."""

    diagram: Diagram
    strands: tuple[tuple[int, ...], ...]

    @property
    def arc_colors(self) -> tuple[int, ...]:
        """Colors of the single strand of a long or closed diagram."""
        if len(self.strands) != 1:
            raise ValueError("arc_colors is for single-strand diagrams; use strands")
        return self.strands[0]


@dataclass(frozen=True)
class InvariantQuery:
    """A quandle together with the basepoint color q and the element x acted on."""

    quandle: FiniteQuandle
    basepoint: int
    act_on: int

    def __post_init__(self):
        m = len(self.quandle)
        if not 0 <= self.basepoint < m:
            raise ValueError(f"basepoint index {self.basepoint} out of range")
        if not 0 <= self.act_on < m:
            raise ValueError(f"act-on index {self.act_on} out of range")


def _propagate(assign: list[int | None], relations: list[Relation], star, barstar) -> bool:
    """Apply forced deductions until a fixed point; False on contradiction."""
    changed = True
    while changed:
        changed = False
        for out, inn, over, sign in relations:
            cv = assign[over]
            if cv is None:
                continue
            iv, ov = assign[inn], assign[out]
            if iv is not None:
                val = star[iv][cv] if sign > 0 else barstar[iv][cv]
                if ov is None:
                    assign[out] = val
                    changed = True
                elif ov != val:
                    return False
            elif ov is not None:
                # Q2: in = out op^{-sign} over
                assign[inn] = barstar[ov][cv] if sign > 0 else star[ov][cv]
                changed = True
    return True


def _pick_guess_arc(assign: list[int | None], relations: list[Relation]) -> int | None:
    for out, inn, over, _ in relations:
        if assign[over] is None and (assign[inn] is not None or assign[out] is not None):
            return over
    for arc, value in enumerate(assign):
        if value is None:
            return arc
    return None


def _search(assign: list[int | None], relations: list[Relation], star, barstar,
            first_guesses: range | None = None) -> list[tuple[int, ...]]:
    m = len(star)
    results: list[tuple[int, ...]] = []
    stack = [(assign, first_guesses)]
    while stack:
        state, pending = stack.pop()
        if not _propagate(state, relations, star, barstar):
            continue
        arc = _pick_guess_arc(state, relations)
        if arc is None:
            results.append(tuple(state))  # type: ignore[arg-type]
            continue
        guesses = pending if pending is not None else range(m)
        for g in guesses:
            branch = list(state)
            branch[arc] = g
            stack.append((branch, None))
    return results


_WORKER_CTX: dict = {}


def _init_worker(relations, star, barstar):
    _WORKER_CTX["args"] = (relations, star, barstar)


def _run_chunk(payload):
    assign, chunk = payload
    relations, star, barstar = _WORKER_CTX["args"]
    return _search(list(assign), relations, star, barstar, first_guesses=chunk)


def _solve(num_arcs: int, relations: list[Relation], preset: dict[int, int],
           q: FiniteQuandle, jobs: int = 1) -> list[tuple[int, ...]]:
    assign: list[int | None] = [None] * num_arcs
    for arc, value in preset.items():
        assign[arc] = value
    star, barstar = q.star, q.barstar

    if jobs > 1 and hasattr(os, "fork"):
        if not _propagate(assign, relations, star, barstar):
            return []
        arc = _pick_guess_arc(assign, relations)
        if arc is not None:
            m = len(q)
            step = max(1, (m + jobs - 1) // jobs)
            chunks = [range(lo, min(lo + step, m)) for lo in range(0, m, step)]
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(jobs, initializer=_init_worker,
                          initargs=(relations, star, barstar)) as pool:
                partials = pool.map(_run_chunk, [(tuple(assign), c) for c in chunks])
            return sorted(row for part in partials for row in part)

    return sorted(_search(assign, relations, star, barstar))


def _long_relations(d: LongDiagram) -> list[Relation]:
    return [(i + 1, i, d.over_arc[i] - 1, d.sign[i]) for i in range(d.n)]


def _closed_relations(d: ClosedDiagram) -> list[Relation]:
    n = d.n
    return [((i + 1) % n, i, d.over_arc[i] - 1, d.sign[i]) for i in range(n)]


def colorings_long(d: LongDiagram, q: FiniteQuandle, basepoint: int,
                   jobs: int = 1) -> tuple[Coloring, ...]:
    """All colorings of a long diagram with arc 1 colored ``basepoint``.

    The final arc is not constrained; for classical codes it comes out equal
    to the basepoint anyway, for virtual codes it may differ.  Output is
    sorted lexicographically by arc colors.
    """
    if not 0 <= basepoint < len(q):
        raise ValueError(f"basepoint index {basepoint} out of range")
    rows = _solve(d.num_arcs, _long_relations(d), {0: basepoint}, q, jobs)
    return tuple(Coloring(d, (row,)) for row in rows)


def colorings_closed(d: ClosedDiagram, q: FiniteQuandle, basepoint: int,
                     jobs: int = 1) -> tuple[Coloring, ...]:
    """All colorings of a closed diagram with arc 1 colored ``basepoint``."""
    if not 0 <= basepoint < len(q):
        raise ValueError(f"basepoint index {basepoint} out of range")
    rows = _solve(d.num_arcs, _closed_relations(d), {0: basepoint}, q, jobs)
    return tuple(Coloring(d, (row,)) for row in rows)


def _tangle_layout(d: TangleDiagram):
    n1 = len(d.strands[0])
    offsets = (0, n1 + 1)

    def arc_index(strand: int, arc: int) -> int:
        return offsets[strand - 1] + arc - 1

    relations = []
    for s in (1, 2):
        for k, c in enumerate(d.strands[s - 1]):
            relations.append((
                arc_index(s, k + 2),
                arc_index(s, k + 1),
                arc_index(c.over_strand, c.over_arc),
                c.sign,
            ))
    total = len(d.strands[0]) + len(d.strands[1]) + 2
    return relations, arc_index, total


def colorings_tangle_boundary_mono(d: TangleDiagram, q: FiniteQuandle, basepoint: int,
                                   jobs: int = 1) -> tuple[Coloring, ...]:
    """Boundary-monochromatic colorings: all four boundary arcs get ``basepoint``.

    The end-arc constraints are installed up front, so the search simply
    rejects any branch that would violate them.
    """
    if not 0 <= basepoint < len(q):
        raise ValueError(f"basepoint index {basepoint} out of range")
    relations, arc_index, total = _tangle_layout(d)
    preset = {
        arc_index(1, 1): basepoint,
        arc_index(1, d.num_arcs(1)): basepoint,
        arc_index(2, 1): basepoint,
        arc_index(2, d.num_arcs(2)): basepoint,
    }
    rows = _solve(total, relations, preset, q, jobs)
    split = d.num_arcs(1)
    return tuple(Coloring(d, (row[:split], row[split:])) for row in rows)


def verify_coloring(c: Coloring, q: FiniteQuandle) -> bool:
    """Re-check every crossing relation directly, independent of the search."""
    d = c.diagram
    if isinstance(d, LongDiagram):
        colors = c.strands[0]
        if len(colors) != d.num_arcs:
            return False
        pairs = ((i + 1, i, d.over_arc[i] - 1, d.sign[i]) for i in range(d.n))
    elif isinstance(d, ClosedDiagram):
        colors = c.strands[0]
        if len(colors) != d.num_arcs:
            return False
        pairs = (((i + 1) % d.n, i, d.over_arc[i] - 1, d.sign[i]) for i in range(d.n))
    elif isinstance(d, TangleDiagram):
        relations, _, total = _tangle_layout(d)
        colors = c.strands[0] + c.strands[1]
        if len(colors) != total:
            return False
        pairs = iter(relations)
    else:
        raise TypeError(f"not a diagram: {d!r}")
    for out, inn, over, sign in pairs:
        expected = q.op(colors[inn], colors[over], barred=sign < 0)
        if colors[out] != expected:
            return False
    return True
