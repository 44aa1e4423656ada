"""Finite labelled partial orders and their composition operators.

Events are dense integer indices ``0..n-1``.  A value stores its label
tuple plus one bitmask row per event, with bit ``j`` of row ``i`` set
exactly when event ``i`` precedes-or-equals event ``j``.  Rows are kept
reflexively and transitively closed, so order queries are single bit
tests and sequential composition is closed by construction.

Refinement ``x`` below ``y`` means a monotone label-preserving bijection
exists from ``y``'s events onto ``x``'s: every ordering constraint of
``y`` is present in ``x``, so ``x`` is the more deterministic of the two.
All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

Label = str


class InvalidPartialString(ValueError):
    """A partial-order axiom or the labelling totality requirement fails."""


class TextFormatError(ValueError):
    """Malformed text in the explicit partial-string format."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transitive_closure(rows: Sequence[int]) -> list[int]:
    """Reflexive-transitive closure of bitmask adjacency rows."""
    out = [row | (1 << i) for i, row in enumerate(rows)]
    for k in range(len(out)):
        bit = 1 << k
        row_k = out[k]
        for i in range(len(out)):
            if out[i] & bit:
                out[i] |= row_k
    return out


@dataclass(frozen=True)
class PartialString:
    """A finite labelled partial order.

    ``labels[i]`` is the alphabet symbol of event ``i``.  ``order[i]`` is
    a bitmask row holding every ``j`` with ``i`` preceding-or-equal ``j``;
    rows must be reflexive, transitive and antisymmetric.  The raw
    constructor performs no checking (so :func:`validate` can report on
    hand-built relations); use :func:`from_strict_pairs` or the
    composition operators for guaranteed-valid values.
    """

    labels: tuple[Label, ...]
    order: tuple[int, ...]

    @property
    def n_events(self) -> int:
        return len(self.labels)

    def leq(self, i: int, j: int) -> bool:
        """True when event ``i`` precedes-or-equals event ``j``."""
        return bool(self.order[i] >> j & 1)

    def strict_pairs(self) -> list[tuple[int, int]]:
        """All ordered pairs with the reflexive diagonal removed."""
        return [
            (i, j)
            for i in range(self.n_events)
            for j in _bits(self.order[i] & ~(1 << i))
        ]

    def order_pair_count(self) -> int:
        """Number of order pairs, reflexive pairs included."""
        return sum(row.bit_count() for row in self.order)


@dataclass(frozen=True)
class DependenceRelation:
    """Ordered label pairs that force cross ordering under weak sequencing.

    Membership of ``(a, b)`` orders every ``a``-labelled event of the left
    operand before every ``b``-labelled event of the right operand.
    Symmetry is optional, and only labels appear, never event ids.
    """

    pairs: frozenset[tuple[Label, Label]]

    @classmethod
    def of(cls, pairs: Iterable[tuple[Label, Label]]) -> "DependenceRelation":
        return cls(frozenset((a, b) for a, b in pairs))

    @classmethod
    def full(cls, alphabet: Iterable[Label]) -> "DependenceRelation":
        labs = tuple(alphabet)
        return cls(frozenset((a, b) for a in labs for b in labs))

    @classmethod
    def none(cls) -> "DependenceRelation":
        return cls(frozenset())

    def requires(self, a: Label, b: Label) -> bool:
        return (a, b) in self.pairs


@dataclass(frozen=True)
class Morphism:
    """A monotone label-preserving bijection between two event sets.

    ``mapping[e]`` is the image of source event ``e``.  Existence of a
    morphism from ``y`` to ``x`` is exactly the refinement of ``y`` by
    ``x``; the mapping itself is the checkable witness.
    """

    mapping: tuple[int, ...]

    def is_valid(self, src: PartialString, tgt: PartialString) -> bool:
        """Re-check bijectivity, label preservation and monotonicity."""
        n = src.n_events
        if tgt.n_events != n or len(self.mapping) != n:
            return False
        if sorted(self.mapping) != list(range(n)):
            return False
        if any(src.labels[e] != tgt.labels[t] for e, t in enumerate(self.mapping)):
            return False
        for i in range(n):
            for j in _bits(src.order[i]):
                if not tgt.order[self.mapping[i]] >> self.mapping[j] & 1:
                    return False
        return True


# --------------------------------------------------------------------- #
# Constructors
# --------------------------------------------------------------------- #


def empty() -> PartialString:
    """The unique partial string with no events."""
    return PartialString((), ())


def singleton(label: Label) -> PartialString:
    """One event carrying ``label``."""
    return PartialString((label,), (1,))


def chain(labels: Iterable[Label]) -> PartialString:
    """A totally ordered partial string: a plain word."""
    labs = tuple(labels)
    n = len(labs)
    full = (1 << n) - 1
    return PartialString(labs, tuple((full >> i) << i for i in range(n)))


def from_strict_pairs(
    labels: Iterable[Label], pairs: Iterable[tuple[int, int]]
) -> PartialString:
    """Build from labels plus strict order pairs; closes and validates."""
    labs = tuple(labels)
    n = len(labs)
    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidPartialString(
                f"order pair ({i}, {j}) outside events 0..{n - 1}"
            )
        rows[i] |= 1 << j
    ps = PartialString(labs, tuple(transitive_closure(rows)))
    validate(ps)
    return ps


def validate(x: PartialString) -> None:
    """Check every axiom on ``x``, raising on the first violation.

    The error names the violated axiom and a witnessing event or event
    pair.  Apply to anything built from raw data (text files, literal
    tuples); values produced by the composition operators hold the
    axioms by construction.
    """
    n = len(x.labels)
    if len(x.order) != n:
        raise InvalidPartialString(
            f"labels are not total: {n} labels but {len(x.order)} order rows"
        )
    for i, row in enumerate(x.order):
        if row >> n:
            raise InvalidPartialString(
                f"order row {i} mentions events outside 0..{n - 1}"
            )
    for i in range(n):
        if not x.order[i] >> i & 1:
            raise InvalidPartialString(f"reflexivity violation at {i}")
    for i in range(n):
        for j in _bits(x.order[i] & ~(1 << i)):
            if x.order[j] >> i & 1:
                raise InvalidPartialString(f"antisymmetry violation at ({i}, {j})")
    for i in range(n):
        row = x.order[i]
        for j in _bits(row):
            missing = x.order[j] & ~row
            if missing:
                k = next(_bits(missing))
                raise InvalidPartialString(
                    f"transitivity violation at ({i}, {j}): missing ({i}, {k})"
                )


# --------------------------------------------------------------------- #
# Composition operators
# --------------------------------------------------------------------- #


def par(x: PartialString, y: PartialString) -> PartialString:
    """Concurrent composition: disjoint union with no cross ordering.

    ``y``'s events are renumbered up by ``x.n_events``; the refinement
    and isomorphism predicates never observe event identity, so dense
    renumbering replaces tagged coproduct pairs.
    """
    nx = x.n_events
    rows = list(x.order) + [row << nx for row in y.order]
    return PartialString(x.labels + y.labels, tuple(rows))


def seq(x: PartialString, y: PartialString) -> PartialString:
    """Strongly sequential composition: all of ``x`` before all of ``y``."""
    nx, ny = x.n_events, y.n_events
    y_block = ((1 << ny) - 1) << nx
    rows = [row | y_block for row in x.order] + [row << nx for row in y.order]
    return PartialString(x.labels + y.labels, tuple(rows))


def weakseq(
    x: PartialString, y: PartialString, dependence: DependenceRelation
) -> PartialString:
    """Weakly sequential composition under a label dependence relation.

    Starts from the concurrent composition, adds a cross pair from each
    left-block event to each right-block event whose labels are in the
    relation, then closes transitively.  Cross pairs only ever point one
    way, so antisymmetry is preserved, and the result always sits between
    ``seq(x, y)`` and ``par(x, y)`` in the refinement order: full
    dependence reproduces ``seq`` exactly, empty dependence ``par``.
    """
    nx, ny = x.n_events, y.n_events
    rows = list(x.order) + [row << nx for row in y.order]
    for i in range(nx):
        cross = 0
        for j in range(ny):
            if dependence.requires(x.labels[i], y.labels[j]):
                cross |= 1 << (nx + j)
        rows[i] |= cross
    return PartialString(x.labels + y.labels, tuple(transitive_closure(rows)))


# --------------------------------------------------------------------- #
# Refinement and isomorphism
# --------------------------------------------------------------------- #


@functools.lru_cache(maxsize=65536)
def _morphism_tables(ps: PartialString):
    """Strict down/up masks per event plus their label multisets."""
    n = ps.n_events
    down = [0] * n
    up = [0] * n
    for i in range(n):
        for j in _bits(ps.order[i] & ~(1 << i)):
            up[i] |= 1 << j
            down[j] |= 1 << i
    dprof = tuple(Counter(ps.labels[j] for j in _bits(m)) for m in down)
    uprof = tuple(Counter(ps.labels[j] for j in _bits(m)) for m in up)
    return tuple(down), tuple(up), dprof, uprof


def find_morphism(src: PartialString, tgt: PartialString) -> Optional[Morphism]:
    """Exact search for a monotone label-preserving bijection src to tgt.

    Complete backtracking over label-compatible targets.  Pruning uses
    necessary conditions only: equal label multisets, source order-pair
    count at most the target's, and per-event dominance of the strict
    down-set/up-set label multisets (a monotone injection maps the strict
    down-set of an event into the strict down-set of its image).  Absence
    is therefore definitive, not heuristic.
    """
    n = src.n_events
    if tgt.n_events != n:
        return None
    if n == 0:
        return Morphism(())
    if Counter(src.labels) != Counter(tgt.labels):
        return None
    if src.order_pair_count() > tgt.order_pair_count():
        return None

    s_down, s_up, s_dprof, s_uprof = _morphism_tables(src)
    t_down, t_up, t_dprof, t_uprof = _morphism_tables(tgt)

    cand = []
    for e in range(n):
        mask = 0
        for t in range(n):
            if (
                src.labels[e] == tgt.labels[t]
                and s_dprof[e] <= t_dprof[t]
                and s_uprof[e] <= t_uprof[t]
            ):
                mask |= 1 << t
        if not mask:
            return None
        cand.append(mask)

    todo = sorted(range(n), key=lambda e: (cand[e].bit_count(), e))
    img = [-1] * n
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        e = todo[k]
        options = cand[e] & ~used
        while options:
            low = options & -options
            options ^= low
            t = low.bit_length() - 1
            ok = True
            for e2 in _bits(s_down[e]):
                m2 = img[e2]
                if m2 >= 0 and not t_down[t] >> m2 & 1:
                    ok = False
                    break
            if ok:
                for e2 in _bits(s_up[e]):
                    m2 = img[e2]
                    if m2 >= 0 and not t_up[t] >> m2 & 1:
                        ok = False
                        break
            if ok:
                img[e] = t
                used |= low
                if place(k + 1):
                    return True
                img[e] = -1
                used ^= low
        return False

    return Morphism(tuple(img)) if place(0) else None


def refines(x: PartialString, y: PartialString) -> bool:
    """True when ``x`` carries at least ``y``'s ordering constraints.

    Decided by searching for a morphism from ``y`` onto ``x``.
    """
    return find_morphism(y, x) is not None


def isomorphic(x: PartialString, y: PartialString) -> bool:
    """Label-preserving order-isomorphism, decided as refinement both ways.

    On finite partial strings mutual refinement coincides with the
    existence of an order-isomorphism.
    """
    return refines(x, y) and refines(y, x)


def exchange_holds(
    u: PartialString, v: PartialString, x: PartialString, y: PartialString
) -> bool:
    """The interchange inequality between sequential and concurrent composition.

    Checks that ``(u par v) seq (x par y)`` refines ``(u seq x) par (v seq y)``;
    this must hold for every quadruple, so a False return flags a
    composition or search bug rather than a property of the inputs.
    """
    return refines(seq(par(u, v), par(x, y)), par(seq(u, x), seq(v, y)))


# --------------------------------------------------------------------- #
# Rendering and the explicit text format
# --------------------------------------------------------------------- #


def hasse(x: PartialString) -> list[tuple[int, int]]:
    """Cover pairs: the transitive reduction of the strict order."""
    n = x.n_events
    strict = [x.order[i] & ~(1 << i) for i in range(n)]
    covers = []
    for i in range(n):
        implied = 0
        for j in _bits(strict[i]):
            implied |= strict[j]
        for j in _bits(strict[i] & ~implied):
            covers.append((i, j))
    return sorted(covers)


def to_text(x: PartialString) -> str:
    """Serialize in the line-based text format (cover pairs only)."""
    lines = ["events:" + "".join(" " + lab for lab in x.labels)]
    lines.extend(f"order: {i} < {j}" for i, j in hasse(x))
    return "\n".join(lines)


def from_text(text: str) -> PartialString:
    """Parse the line-based text format.

    The first non-blank line is ``events: l0 l1 ...``; each further line
    is ``order: i < j`` with one strict pair.  The reflexive-transitive
    closure is computed on load, and loading fails if the closure breaks
    antisymmetry.
    """
    labels: Optional[tuple[Label, ...]] = None
    pairs: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if labels is None:
            if not line.startswith("events:"):
                raise TextFormatError("first line must start with 'events:'")
            labels = tuple(line[len("events:"):].split())
        elif line.startswith("order:"):
            left, sep, right = line[len("order:"):].partition("<")
            try:
                if not sep:
                    raise ValueError
                pairs.append((int(left), int(right)))
            except ValueError:
                raise TextFormatError(
                    f"malformed order line {line!r}; expected 'order: i < j'"
                ) from None
        else:
            raise TextFormatError(f"unrecognized line {line!r}")
    if labels is None:
        raise TextFormatError("missing 'events:' line")
    return from_strict_pairs(labels, pairs)


def to_dot(x: PartialString, name: str = "pomset") -> str:
    """Cover relation as a DOT digraph, earlier events drawn above later ones."""
    lines = [f"digraph {name} {{"]
    for i, lab in enumerate(x.labels):
        lines.append(f'  e{i} [label="{i}:{lab}"];')
    for i, j in hasse(x):
        lines.append(f"  e{i} -> e{j};")
    lines.append("}")
    return "\n".join(lines)
