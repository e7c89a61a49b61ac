"""Shared fixture data: knot codes, tangles, quandles, and reference queries.

Knot codes come from braid-word closures (derived by ``braid_closure`` below,
which the diagram tests re-run as an audit).  Each code was validated against
independent invariants: dihedral coloring counts pin the knot determinant
(3_1 -> 3, 5_2 -> 7, 6_2 -> 11, 6_3 -> 13, 9_42 -> 7) and the conjugation
quandle values pin the chirality.
"""
from __future__ import annotations

from functools import lru_cache

import quandleknot as qk

# --- braid machinery --------------------------------------------------------

def braid_closure(word: list[int], strands: int) -> qk.ClosedDiagram:
    """Signed Gauss code of the closure of a braid word (knots only).

    Letter +j crosses the strand in position j over position j+1; -j crosses
    it under.  The closure joins each bottom position to its top position.
    """
    encounters = []
    pos = 1
    passes = 0
    while True:
        for k, letter in enumerate(word):
            j = abs(letter)
            if pos == j or pos == j + 1:
                over = (letter > 0) == (pos == j)
                encounters.append((k + 1, over, "+" if letter > 0 else "-"))
                pos = j + 1 if pos == j else j
        passes += 1
        if pos == 1:
            break
        if passes > strands:
            raise ValueError("closure is not a knot")
    if passes != strands:
        raise ValueError("closure has multiple components")
    tokens = " ".join(f"{'O' if over else 'U'}{cid}{s}" for cid, over, s in encounters)
    d = qk.from_signed_gauss(tokens)
    assert isinstance(d, qk.ClosedDiagram)
    return d


# --- knot diagram fixtures ---------------------------------------------------

UNKNOT_LONG = qk.LongDiagram((), ())

# long 5_2 with all-negative crossings; its closure is the closed 5_2 fixture
KNOT_5_2_LONG = qk.LongDiagram((4, 5, 2, 1, 3), (-1, -1, -1, -1, -1))
KNOT_5_2_CLOSED = qk.close_long(KNOT_5_2_LONG)

# same knot from a different code: mirror of the braid closure of s1^3 s2 s1^-1 s2
KNOT_5_2_CLOSED_ALT = qk.mirror(braid_closure([1, 1, 1, 2, -1, 2], 3))

TREFOIL_CLOSED = braid_closure([1, 1, 1], 2)            # (3,1,2) / +++
KNOT_6_2_CLOSED = braid_closure([1, 1, 1, -2, 1, -2], 3)
KNOT_6_3_CLOSED = braid_closure([1, 1, -2, 1, -2, -2], 3)
KNOT_9_42_CLOSED = braid_closure([1, 1, 1, -2, -1, -1, 3, -2, 3], 4)

SINGLE_NEGATIVE_KINK = qk.LongDiagram((2,), (-1,))
SINGLE_POSITIVE_KINK = qk.LongDiagram((2,), (1,))

# closed code whose basepoint spectrum is not constant; no classical diagram
# can produce it (see scripts/find_virtual_witness.py for the search grid)
VIRTUAL_WITNESS_CODE = qk.ClosedDiagram((1, 1, 2), (1, 1, 1))


def tangle_t62() -> qk.TangleDiagram:
    """The 6_2 tangle fixture: strand 1 carries three negative curls, strand 2
    a negative trefoil winding.  Reproduces the reference values: 9
    boundary-monochromatic A_6 colorings and both concatenated longitude sums
    equal to 8*(1,2,5,3,4) + (1,2,3,4,5)."""
    curl = lambda a: qk.TangleCrossing(1, a, -1)
    wind = lambda a: qk.TangleCrossing(2, a, -1)
    return qk.TangleDiagram((
        (curl(2), curl(3), curl(4)),
        (wind(3), wind(4), wind(2)),
    ))


def tangle_t62_interleaved() -> qk.TangleDiagram:
    """The fully interleaved 6_2 tangle variant: each strand passes under the
    other three times, over-arcs (3, 4, 2) crosswise, all crossings negative.
    Same coloring count as tangle_t62 but its longitude parts act trivially."""
    return qk.TangleDiagram((
        (qk.TangleCrossing(2, 3, -1), qk.TangleCrossing(2, 4, -1), qk.TangleCrossing(2, 2, -1)),
        (qk.TangleCrossing(1, 3, -1), qk.TangleCrossing(1, 4, -1), qk.TangleCrossing(1, 2, -1)),
    ))


def crossingless_tangle() -> qk.TangleDiagram:
    return qk.TangleDiagram(((), ()))


def t62_closure_long() -> qk.LongDiagram:
    """Long diagram obtained by closing tangle_t62 with crossingless arcs
    (strand 1 then strand 2; strand 2's arc a becomes arc 3 + a)."""
    t = tangle_t62()
    over, sign = [], []
    for c in t.strands[0]:
        over.append(c.over_arc if c.over_strand == 1 else 3 + c.over_arc)
        sign.append(c.sign)
    for c in t.strands[1]:
        over.append(c.over_arc if c.over_strand == 1 else 3 + c.over_arc)
        sign.append(c.sign)
    return qk.LongDiagram(tuple(over), tuple(sign))


# --- quandles and queries ----------------------------------------------------

@lru_cache(maxsize=None)
def s5_class_quandle() -> qk.FiniteQuandle:
    """Conjugacy class of (1,2)(3,4,5) in S_5: 20 elements."""
    return qk.parse_quandle_spec("conjclass:S5:(1,2)(3,4,5)")


@lru_cache(maxsize=None)
def a5_quandle() -> qk.FiniteQuandle:
    """All of A_5 under conjugation: 60 elements."""
    return qk.parse_quandle_spec("conjgroup:A5")


@lru_cache(maxsize=None)
def a6_quandle() -> qk.FiniteQuandle:
    """All of A_6 under conjugation: 360 elements."""
    return qk.parse_quandle_spec("conjgroup:A6")


def query_5_2() -> qk.InvariantQuery:
    q = s5_class_quandle()
    return qk.InvariantQuery(q, q.element_index("(1,2)(3,4,5)"), q.element_index("(1,2,3)(4,5)"))


def query_9_42() -> qk.InvariantQuery:
    q = a5_quandle()
    return qk.InvariantQuery(q, q.element_index("(1,2,3)"), q.element_index("(2,3,4)"))


def query_t62() -> qk.InvariantQuery:
    q = a6_quandle()
    return qk.InvariantQuery(q, q.element_index("(1,2,3,4)(5,6)"), q.element_index("(1,2,3,4,5)"))


def sum_of(q: qk.FiniteQuandle, terms: dict[str, int]) -> qk.FormalSum:
    """Build a FormalSum from {cycle-notation label: coefficient}."""
    return qk.FormalSum(q, tuple(sorted((q.element_index(k), v) for k, v in terms.items())))
