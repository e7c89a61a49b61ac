"""Gauss-code level diagrams for long, closed, and 2-strand tangle knots.

Only the combinatorics (over-arc references and crossing signs) are modeled;
no planarity or realizability check ever runs, which is what makes virtual
codes first-class citizens here.  Crossing i of a long diagram separates arc
i from arc i+1; arcs are 1-based.  A sign of +1 marks the crossing type whose
coloring relation uses ``*`` (see ``coloring``), -1 the ``*bar`` type.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass


def _check_signs(sign: tuple[int, ...]):
    if any(s not in (1, -1) for s in sign):
        raise ValueError("signs must be +1 or -1")


@dataclass(frozen=True)
class LongDiagram:
    """n crossings over arcs 1..n+1 in traversal order; n = 0 is the unknot."""

    over_arc: tuple[int, ...]
    sign: tuple[int, ...]

    def __post_init__(self):
        n = len(self.over_arc)
        if len(self.sign) != n:
            raise ValueError("over_arc and sign must have equal length")
        _check_signs(self.sign)
        if any(not 1 <= a <= n + 1 for a in self.over_arc):
            raise ValueError(f"over-arc reference outside 1..{n + 1}")

    @property
    def n(self) -> int:
        return len(self.over_arc)

    @property
    def num_arcs(self) -> int:
        return self.n + 1


@dataclass(frozen=True)
class ClosedDiagram:
    """n >= 1 crossings over arcs 1..n cyclically."""

    over_arc: tuple[int, ...]
    sign: tuple[int, ...]

    def __post_init__(self):
        n = len(self.over_arc)
        if n < 1:
            raise ValueError("closed diagrams need at least one crossing")
        if len(self.sign) != n:
            raise ValueError("over_arc and sign must have equal length")
        _check_signs(self.sign)
        if any(not 1 <= a <= n for a in self.over_arc):
            raise ValueError(f"over-arc reference outside 1..{n}")

    @property
    def n(self) -> int:
        return len(self.over_arc)

    @property
    def num_arcs(self) -> int:
        return self.n


@dataclass(frozen=True)
class TangleCrossing:
    """One under-passage: which strand/arc passes over, and the crossing sign."""

    over_strand: int  # 1 or 2
    over_arc: int
    sign: int


@dataclass(frozen=True)
class TangleDiagram:
    """Two oriented strands; strand s has its own arcs 1..n_s+1 in traversal order."""

    strands: tuple[tuple[TangleCrossing, ...], tuple[TangleCrossing, ...]]

    def __post_init__(self):
        if len(self.strands) != 2:
            raise ValueError("tangles have exactly two strands")
        arcs = [len(s) + 1 for s in self.strands]
        for strand in self.strands:
            for c in strand:
                if c.over_strand not in (1, 2):
                    raise ValueError(f"over_strand must be 1 or 2, got {c.over_strand}")
                if c.sign not in (1, -1):
                    raise ValueError("signs must be +1 or -1")
                if not 1 <= c.over_arc <= arcs[c.over_strand - 1]:
                    raise ValueError(
                        f"over-arc {c.over_arc} outside 1..{arcs[c.over_strand - 1]} "
                        f"on strand {c.over_strand}"
                    )

    def strand_crossings(self, s: int) -> tuple[TangleCrossing, ...]:
        return self.strands[s - 1]

    def num_arcs(self, s: int) -> int:
        return len(self.strands[s - 1]) + 1


Diagram = LongDiagram | ClosedDiagram | TangleDiagram


# --- JSON codec -----------------------------------------------------------

def parse_diagram(text: str) -> Diagram:
    """Parse the JSON wire format; inverse of serialize_diagram."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("diagram JSON must be an object with a 'kind' field")
    kind = obj["kind"]
    try:
        if kind == "long":
            return LongDiagram(tuple(obj["over_arc"]), tuple(obj["sign"]))
        if kind == "closed":
            return ClosedDiagram(tuple(obj["over_arc"]), tuple(obj["sign"]))
        if kind == "tangle":
            strands = tuple(
                tuple(
                    TangleCrossing(int(c["over_strand"]), int(c["over_arc"]), int(c["sign"]))
                    for c in strand["crossings"]
                )
                for strand in obj["strands"]
            )
            return TangleDiagram(strands)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from None
    raise ValueError(f"unknown diagram kind {kind!r}")


def serialize_diagram(d: Diagram) -> str:
    if isinstance(d, LongDiagram):
        obj = {"kind": "long", "over_arc": list(d.over_arc), "sign": list(d.sign)}
    elif isinstance(d, ClosedDiagram):
        obj = {"kind": "closed", "over_arc": list(d.over_arc), "sign": list(d.sign)}
    elif isinstance(d, TangleDiagram):
        obj = {
            "kind": "tangle",
            "strands": [
                {"crossings": [
                    {"over_strand": c.over_strand, "over_arc": c.over_arc, "sign": c.sign}
                    for c in strand
                ]}
                for strand in d.strands
            ],
        }
    else:
        raise TypeError(f"not a diagram: {d!r}")
    return json.dumps(obj)


# --- structural operations -------------------------------------------------

def mirror(d: Diagram) -> Diagram:
    """Negate every crossing sign; over/under assignments are unchanged."""
    if isinstance(d, LongDiagram):
        return LongDiagram(d.over_arc, tuple(-s for s in d.sign))
    if isinstance(d, ClosedDiagram):
        return ClosedDiagram(d.over_arc, tuple(-s for s in d.sign))
    if isinstance(d, TangleDiagram):
        return TangleDiagram(tuple(
            tuple(TangleCrossing(c.over_strand, c.over_arc, -c.sign) for c in strand)
            for strand in d.strands
        ))
    raise TypeError(f"not a diagram: {d!r}")


def _break_closed(c: ClosedDiagram, r: int, broken_to_end: bool) -> LongDiagram:
    n = c.n
    if not 1 <= r <= n:
        raise ValueError(f"arc index {r} outside 1..{n}")
    over, sign = [], []
    for k in range(n):
        idx = (r - 1 + k) % n
        a = c.over_arc[idx]
        if a == r:
            over.append(n + 1 if broken_to_end else 1)
        else:
            over.append((a - r) % n + 1)
        sign.append(c.sign[idx])
    return LongDiagram(tuple(over), tuple(sign))


def break_at(c: ClosedDiagram, r: int) -> LongDiagram:
    """Cut arc r at its start, so traversal begins with crossing r.

    Over-passages hosted on the broken arc end up on the initial arc 1.
    """
    return _break_closed(c, r, broken_to_end=False)


def break_before_underpass(c: ClosedDiagram, i: int) -> LongDiagram:
    """Cut arc i immediately before crossing i's under-passage.

    The cut point is at the arc's far end, so over-passages hosted on the
    broken arc end up on the final arc n+1.  Cutting before every
    under-passage realizes each arc as an initial arc without ambiguity,
    which is what basepoint spectra use.
    """
    return _break_closed(c, i, broken_to_end=True)


def close_long(d: LongDiagram) -> ClosedDiagram:
    """Join the initial and final arcs; references to arc n+1 become arc 1."""
    if d.n == 0:
        raise ValueError("cannot close the 0-crossing unknot (closed diagrams need n >= 1)")
    over = tuple(1 if a == d.n + 1 else a for a in d.over_arc)
    return ClosedDiagram(over, d.sign)


def concat(a: LongDiagram, b: LongDiagram) -> LongDiagram:
    """Connected sum of long diagrams: a's crossings first, b's arcs shifted."""
    over = a.over_arc + tuple(x + a.n for x in b.over_arc)
    return LongDiagram(over, a.sign + b.sign)


# --- signed Gauss code text format ----------------------------------------

_TOKEN_RE = re.compile(r"([OU])(\d+)([+-])$")


def from_signed_gauss(text: str) -> ClosedDiagram | LongDiagram:
    """Parse tokens like ``O1+ U2- ...``; ``long:`` prefix selects a long diagram.

    Each label must appear exactly once as O and once as U, with equal signs.
    Under-passages in traversal order become crossings 1..n.
    """
    body = text.strip()
    is_long = body.startswith("long:")
    if is_long:
        body = body[len("long:"):]
    tokens = []
    for raw in body.split():
        m = _TOKEN_RE.fullmatch(raw)
        if not m:
            raise ValueError(f"malformed Gauss token {raw!r}")
        tokens.append((m.group(1), m.group(2), 1 if m.group(3) == "+" else -1))

    labels = {}
    for kind, label, s in tokens:
        slot = labels.setdefault(label, {})
        if kind in slot:
            raise ValueError(f"label {label} appears more than once as {kind}")
        slot[kind] = s
    for label, slot in labels.items():
        if set(slot) != {"O", "U"}:
            raise ValueError(f"label {label} needs exactly one O and one U token")
        if slot["O"] != slot["U"]:
            raise ValueError(f"label {label} has mismatched O/U signs")

    order = [label for kind, label, _ in tokens if kind == "U"]
    crossing_of = {label: i + 1 for i, label in enumerate(order)}
    n = len(order)
    if n == 0:
        if is_long:
            return LongDiagram((), ())
        raise ValueError("closed diagrams need at least one crossing")

    over = [0] * n
    sign = [0] * n
    seen_under = 0
    for kind, label, s in tokens:
        c = crossing_of[label]
        if kind == "U":
            seen_under += 1
            sign[c - 1] = s
        else:
            arc = seen_under + 1
            if not is_long and arc == n + 1:
                arc = 1
            over[c - 1] = arc
    if is_long:
        return LongDiagram(tuple(over), tuple(sign))
    return ClosedDiagram(tuple(over), tuple(sign))


def to_signed_gauss(d: ClosedDiagram | LongDiagram) -> str:
    """Canonical token text; within an arc, over-passages are ordered by crossing."""
    is_long = isinstance(d, LongDiagram)
    n = d.n
    overs_on = {arc: [] for arc in range(1, d.num_arcs + 1)}
    for i, a in enumerate(d.over_arc, 1):
        overs_on[a].append(i)
    parts = []
    for arc in range(1, n + 1):
        for c in sorted(overs_on[arc]):
            parts.append(f"O{c}{'+' if d.sign[c - 1] > 0 else '-'}")
        parts.append(f"U{arc}{'+' if d.sign[arc - 1] > 0 else '-'}")
    if is_long:
        for c in sorted(overs_on[n + 1]):
            parts.append(f"O{c}{'+' if d.sign[c - 1] > 0 else '-'}")
        return "long: " + " ".join(parts) if parts else "long:"
    return " ".join(parts)
