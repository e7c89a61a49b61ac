"""Finite quandles as labeled operation tables.

A quandle carries two tables: ``star`` for ``*`` and ``barstar`` for the
inverse operation.  Elements are identified by position; labels are display
strings only.  Conjugation quandles use ``a * b = b^-1 a b`` and
``a *bar b = b a b^-1`` with the composition convention from ``permgroup``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import permgroup
from .permgroup import ElementSet

QuandleWord = tuple[tuple[int, bool], ...]
"""A left-normed word: (element index, barred) letters folded left to right."""


@dataclass(frozen=True)
class FiniteQuandle:
    """Operation tables star[i][j] = i * j and barstar[i][j] = i *bar j.

    ``degree`` is the permutation degree when the quandle was built from
    permutations (it lets cycle-notation labels be re-parsed), 0 otherwise.
    """

    labels: tuple[str, ...]
    star: tuple[tuple[int, ...], ...]
    barstar: tuple[tuple[int, ...], ...]
    degree: int = 0

    def __post_init__(self):
        m = len(self.labels)
        if len(set(self.labels)) != m:
            raise ValueError("labels must be pairwise distinct")
        for table in (self.star, self.barstar):
            if len(table) != m or any(len(row) != m for row in table):
                raise ValueError("operation tables must be square of size len(labels)")
            if any(not 0 <= v < m for row in table for v in row):
                raise ValueError("table entry out of range")

    def __len__(self) -> int:
        return len(self.labels)

    def op(self, i: int, j: int, barred: bool = False) -> int:
        return self.barstar[i][j] if barred else self.star[i][j]

    def element_index(self, text: str) -> int:
        """Resolve an element given by label, or by cycle notation when applicable."""
        label = text.strip()
        try:
            return self.labels.index(label)
        except ValueError:
            pass
        if self.degree > 0:
            canonical = permgroup.print_cycles(permgroup.parse_cycles(label, self.degree))
            try:
                return self.labels.index(canonical)
            except ValueError:
                raise ValueError(f"element {text!r} is not in this quandle") from None
        raise ValueError(f"element {text!r} is not in this quandle")


def from_conjugation(elements: ElementSet) -> FiniteQuandle:
    """Conjugation quandle on a mutually-conjugation-closed set of permutations."""
    members = elements.members
    index = {p: i for i, p in enumerate(members)}
    m = len(members)
    star = [[0] * m for _ in range(m)]
    barstar = [[0] * m for _ in range(m)]
    for j, b in enumerate(members):
        binv = permgroup.inverse(b)
        for i, a in enumerate(members):
            c = permgroup.compose(permgroup.compose(binv, a), b)
            if c not in index:
                raise ValueError(
                    f"set not closed under conjugation: {permgroup.print_cycles(a)} * "
                    f"{permgroup.print_cycles(b)} = {permgroup.print_cycles(c)} is missing"
                )
            star[i][j] = index[c]
            barstar[i][j] = index[permgroup.compose(permgroup.compose(b, a), binv)]
    labels = tuple(permgroup.print_cycles(p) for p in members)
    return FiniteQuandle(labels, tuple(map(tuple, star)), tuple(map(tuple, barstar)), elements.degree)


def dihedral(n: int) -> FiniteQuandle:
    """The involutory quandle on {0..n-1} with i * j = 2j - i mod n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n))
    return FiniteQuandle(tuple(str(i) for i in range(n)), table, table)


def trivial(n: int) -> FiniteQuandle:
    """The quandle with x * y = x for all x, y."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = tuple(tuple(i for _ in range(n)) for i in range(n))
    return FiniteQuandle(tuple(str(i) for i in range(n)), table, table)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking Q1-Q3; violations are data, not exceptions."""

    q1_violation: tuple[int, ...] | None
    q2_violation: tuple[int, ...] | None
    q3_violation: tuple[int, ...] | None
    q3_mode: str  # "exhaustive" or "sampled"
    q3_checked: int

    @property
    def all_ok(self) -> bool:
        return self.q1_violation is None and self.q2_violation is None and self.q3_violation is None

    def summary(self) -> str:
        lines = [
            "Q1 (idempotence): " + ("ok" if self.q1_violation is None else f"violated at {self.q1_violation}"),
            "Q2 (invertibility): " + ("ok" if self.q2_violation is None else f"violated at {self.q2_violation}"),
            f"Q3 (distributivity, {self.q3_mode}, {self.q3_checked} triples): "
            + ("ok" if self.q3_violation is None else f"violated at {self.q3_violation}"),
        ]
        return "\n".join(lines)


def verify_axioms(q: FiniteQuandle, q3_samples: int | None = None, seed: int = 0) -> AxiomReport:
    """Check Q1 over all i, Q2 over all (i, j), and Q3 over all (i, j, k).

    With ``q3_samples`` set, Q3 is checked on that many uniformly sampled
    triples instead of exhaustively (the large-quandle fast tier).
    """
    m = len(q)
    star = np.asarray(q.star, dtype=np.int64)
    barstar = np.asarray(q.barstar, dtype=np.int64)

    q1_violation = None
    diag = star[np.arange(m), np.arange(m)]
    bad = np.nonzero(diag != np.arange(m))[0]
    if bad.size:
        q1_violation = (int(bad[0]),)

    q2_violation = None
    cols = np.arange(m)[None, :].repeat(m, axis=0)
    rows = np.arange(m)[:, None].repeat(m, axis=1)
    ok = (barstar[star, cols] == rows) & (star[barstar, cols] == rows)
    bad2 = np.argwhere(~ok)
    if bad2.size:
        q2_violation = tuple(int(v) for v in bad2[0])

    q3_violation = None
    if q3_samples is None:
        checked = m * m * m
        for k in range(m):
            col = star[:, k]
            lhs = col[star]                       # (i*j)*k
            rhs = star[np.ix_(col, col)]          # (i*k)*(j*k)
            bad3 = np.argwhere(lhs != rhs)
            if bad3.size:
                i, j = (int(v) for v in bad3[0])
                q3_violation = (i, j, k)
                break
        mode = "exhaustive"
    else:
        checked = int(q3_samples)
        rng = np.random.default_rng(seed)
        i = rng.integers(0, m, size=checked)
        j = rng.integers(0, m, size=checked)
        k = rng.integers(0, m, size=checked)
        lhs = star[star[i, j], k]
        rhs = star[star[i, k], star[j, k]]
        bad3 = np.nonzero(lhs != rhs)[0]
        if bad3.size:
            t = int(bad3[0])
            q3_violation = (int(i[t]), int(j[t]), int(k[t]))
        mode = "sampled"
    return AxiomReport(q1_violation, q2_violation, q3_violation, mode, checked)


@dataclass(frozen=True)
class Automorphism:
    """A bijective self-map of a quandle, stored as full image sequence."""

    quandle: FiniteQuandle
    images: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.images[i]


def identity_automorphism(q: FiniteQuandle) -> Automorphism:
    return Automorphism(q, tuple(range(len(q))))


def translation(q: FiniteQuandle, by: int, barred: bool = False) -> Automorphism:
    """The map x -> x * by (or x *bar by); an automorphism by Q2/Q3."""
    if not 0 <= by < len(q):
        raise ValueError(f"element index {by} out of range")
    table = q.barstar if barred else q.star
    return Automorphism(q, tuple(table[i][by] for i in range(len(q))))


def compose_automorphisms(f: Automorphism, g: Automorphism) -> Automorphism:
    """Apply f first, then g, matching word concatenation order."""
    if f.quandle is not g.quandle and f.quandle != g.quandle:
        raise ValueError("automorphisms act on different quandles")
    return Automorphism(f.quandle, tuple(g.images[x] for x in f.images))


def is_automorphism(q: FiniteQuandle, images: Sequence[int]) -> bool:
    """Exhaustive bijectivity plus homomorphism check, vectorized."""
    m = len(q)
    img = np.asarray(images, dtype=np.int64)
    if img.shape != (m,) or not np.array_equal(np.sort(img), np.arange(m)):
        return False
    star = np.asarray(q.star, dtype=np.int64)
    return bool(np.array_equal(img[star], star[np.ix_(img, img)]))


def eval_word(q: FiniteQuandle, start: int, word: Iterable[tuple[int, bool]]) -> int:
    """Left-normed fold: acc <- acc * letter (or *bar letter) for each letter."""
    m = len(q)
    if not 0 <= start < m:
        raise ValueError(f"element index {start} out of range")
    acc = start
    for elem, barred in word:
        if not 0 <= elem < m:
            raise ValueError(f"element index {elem} out of range")
        acc = q.barstar[acc][elem] if barred else q.star[acc][elem]
    return acc


# --- quandle spec strings and JSON files ---------------------------------

_DIHEDRAL_RE = re.compile(r"dihedral:(\d+)$")
_TRIVIAL_RE = re.compile(r"trivial:(\d+)$")


def _parse_generators(text: str) -> ElementSet:
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise ValueError("empty generator list")
    points = [int(tok) for p in parts for tok in re.findall(r"\d+", p)]
    degree = max(points)
    return permgroup.element_set(permgroup.parse_cycles(p, degree) for p in parts)


def _group_from_spec(text: str) -> ElementSet:
    if text.startswith("gens:"):
        return _parse_generators(text[len("gens:"):])
    return permgroup.group_generators(text)


def parse_quandle_spec(spec: str) -> FiniteQuandle:
    """Build a quandle from a spec string.

    Forms: ``conjclass:<group>:<element>``, ``conjgroup:<group>``,
    ``dihedral:<n>``, ``trivial:<n>``, where ``<group>`` is S3..S8, A3..A8,
    or ``gens:<perm>;<perm>;...`` and elements are in cycle notation.
    """
    spec = spec.strip()
    if m := _DIHEDRAL_RE.fullmatch(spec):
        return dihedral(int(m.group(1)))
    if m := _TRIVIAL_RE.fullmatch(spec):
        return trivial(int(m.group(1)))
    if spec.startswith("conjclass:"):
        rest = spec[len("conjclass:"):]
        group_part, sep, element_part = rest.rpartition(":")
        if not sep or not group_part:
            raise ValueError(f"malformed conjclass spec {spec!r}")
        gens = _group_from_spec(group_part)
        g = permgroup.parse_cycles(element_part, gens.degree)
        return from_conjugation(permgroup.conjugacy_class(g, gens))
    if spec.startswith("conjgroup:"):
        gens = _group_from_spec(spec[len("conjgroup:"):])
        return from_conjugation(permgroup.close_under_generators(gens))
    raise ValueError(f"unknown quandle spec {spec!r}")


def quandle_to_json(q: FiniteQuandle) -> str:
    obj = {
        "degree": q.degree,
        "labels": list(q.labels),
        "star": [list(row) for row in q.star],
        "barstar": [list(row) for row in q.barstar],
    }
    return json.dumps(obj)


def quandle_from_json(text: str) -> FiniteQuandle:
    obj = json.loads(text)
    try:
        return FiniteQuandle(
            tuple(obj["labels"]),
            tuple(tuple(row) for row in obj["star"]),
            tuple(tuple(row) for row in obj["barstar"]),
            int(obj.get("degree", 0)),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed quandle JSON: {exc}") from None
