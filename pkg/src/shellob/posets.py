"""Finite posets as cover digraphs, bounded posets, order complexes, and
interval-order recognition via the forbidden pair of disjoint 2-chains.

Element labels are opaque strings.  Construction accepts any set of
relation pairs, verifies acyclicity, and stores the transitive reduction
(the covers); the order relation is the reflexive-transitive closure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import IRRELEVANT, SimplicialComplex, from_facets


class NotAPosetError(ValueError):
    """The given relation pairs contain a cycle."""


class PosetParseError(ValueError):
    """Malformed poset text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FinitePoset:
    """An immutable finite poset over string labels."""

    __slots__ = ("elements", "covers", "_above")

    def __init__(self, elements, relations=()):
        els = list(elements)
        for e in els:
            if not isinstance(e, str):
                raise ValueError(f"element labels must be strings, got {e!r}")
        if len(set(els)) != len(els):
            raise ValueError("element labels must be distinct")
        elset = set(els)
        succ: dict[str, set[str]] = {e: set() for e in els}
        for a, b in relations:
            if a not in elset or b not in elset:
                raise ValueError(f"relation ({a!r}, {b!r}) mentions unknown elements")
            if a == b:
                raise NotAPosetError(f"reflexive pair ({a!r}, {a!r}) would create a cycle")
            succ[a].add(b)

        above: dict[str, frozenset[str]] = {}

        def descend(x: str, trail: set[str]) -> frozenset[str]:
            if x in above:
                return above[x]
            if x in trail:
                raise NotAPosetError(f"cycle through {x!r}")
            trail.add(x)
            acc: set[str] = set()
            for y in succ[x]:
                acc.add(y)
                acc |= descend(y, trail)
            trail.remove(x)
            if x in acc:
                raise NotAPosetError(f"cycle through {x!r}")
            above[x] = frozenset(acc)
            return above[x]

        for e in els:
            descend(e, set())

        covers = frozenset(
            (a, b)
            for a in els
            for b in above[a]
            if not any(b in above[c] for c in above[a])
        )
        object.__setattr__(self, "elements", tuple(sorted(els)))
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "_above", above)

    def __setattr__(self, name, value):
        raise AttributeError("FinitePoset is immutable")

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FinitePoset(elements={list(self.elements)}, covers={sorted(self.covers)})"

    # -- order queries ------------------------------------------------------

    def less(self, a: str, b: str) -> bool:
        return b in self._above[a]

    def leq(self, a: str, b: str) -> bool:
        return a == b or b in self._above[a]

    def comparable(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def above(self, a: str) -> frozenset[str]:
        """Elements strictly above a."""
        return self._above[a]

    def covers_of(self, a: str) -> tuple[str, ...]:
        """Elements covering a, in label order."""
        if a not in self._above:
            raise ValueError(f"unknown element {a!r}")
        return tuple(sorted(b for x, b in self.covers if x == a))

    def minimal_elements(self) -> tuple[str, ...]:
        lower = {b for _, b in self.covers}
        return tuple(e for e in self.elements if e not in lower)

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if not self._above[e])

    def relation_pairs(self) -> list[tuple[str, str]]:
        return [(a, b) for a in self.elements for b in self._above[a]]

    # -- constructions ------------------------------------------------------

    def induced(self, subset) -> "FinitePoset":
        sub = set(subset)
        unknown = sub - set(self.elements)
        if unknown:
            raise ValueError(f"unknown elements: {sorted(unknown)}")
        pairs = [(a, b) for a in sub for b in self._above[a] if b in sub]
        return FinitePoset(sub, pairs)

    def maximal_chains(self) -> list[tuple[str, ...]]:
        """All maximal chains, each listed bottom element first."""
        out: list[tuple[str, ...]] = []

        def grow(chain: tuple[str, ...]) -> None:
            nxt = self.covers_of(chain[-1])
            if not nxt:
                out.append(chain)
                return
            for y in nxt:
                grow(chain + (y,))

        for start in self.minimal_elements():
            grow((start,))
        return sorted(out)

    # -- interval-order recognition ------------------------------------------

    def contains_two_plus_two(self) -> tuple[str, str, str, str] | None:
        """A witness (w, x, y, z) with w < x, y < z and no other comparabilities
        among the four, if one exists.

        Brute force over pairs of comparable pairs with early exit; fine for
        the poset sizes this library targets.
        """
        pairs = [(a, b) for a in self.elements for b in sorted(self._above[a])]
        for i, (w, x) in enumerate(pairs):
            for y, z in pairs[i + 1 :]:
                if {w, x} & {y, z}:
                    continue
                if (
                    not self.comparable(w, y)
                    and not self.comparable(w, z)
                    and not self.comparable(x, y)
                    and not self.comparable(x, z)
                ):
                    return (w, x, y, z)
        return None

    def is_interval_order(self) -> bool:
        """True iff the poset has no induced pair of disjoint 2-chains."""
        return self.contains_two_plus_two() is None


def from_covers(elements, pairs) -> FinitePoset:
    """Build a poset from relation pairs, validating acyclicity."""
    return FinitePoset(elements, pairs)


def from_intervals(rep: dict[str, tuple[int, int]]) -> FinitePoset:
    """The interval order of the given closed intervals: x < y iff the
    interval of x ends before the interval of y begins."""
    for e, (lo, hi) in rep.items():
        if lo > hi:
            raise ValueError(f"interval for {e!r} has l > r")
    pairs = [
        (a, b)
        for a in rep
        for b in rep
        if a != b and rep[a][1] < rep[b][0]
    ]
    return FinitePoset(rep.keys(), pairs)


@dataclass(frozen=True)
class BoundedPoset:
    """A poset with designated minimum and maximum (distinct, so length >= 1)."""

    poset: FinitePoset
    bottom: str
    top: str

    def __post_init__(self):
        els = set(self.poset.elements)
        if self.bottom not in els or self.top not in els:
            raise ValueError("bottom and top must be elements of the poset")
        if self.bottom == self.top:
            raise ValueError("bounded poset must have distinct bottom and top")
        for e in self.poset.elements:
            if not self.poset.leq(self.bottom, e) or not self.poset.leq(e, self.top):
                raise ValueError(f"element {e!r} not between bottom and top")

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    def interior(self) -> FinitePoset:
        """The induced subposet without bottom and top."""
        return self.poset.induced(
            [e for e in self.poset.elements if e not in (self.bottom, self.top)]
        )

    def atoms(self) -> tuple[str, ...]:
        return self.poset.covers_of(self.bottom)

    def covers_of(self, a: str) -> tuple[str, ...]:
        return self.poset.covers_of(a)

    def upper_interval(self, a: str) -> "BoundedPoset":
        """The closed interval from a to the top, as a bounded poset."""
        if a not in self.poset.elements:
            raise ValueError(f"unknown element {a!r}")
        if a == self.top:
            raise ValueError("interval [top, top] is degenerate")
        keep = {a} | {x for x in self.poset.elements if self.poset.less(a, x)}
        return BoundedPoset(self.poset.induced(keep), a, self.top)

    def length(self) -> int:
        """Length of the longest chain from bottom to top."""
        memo: dict[str, int] = {}

        def depth(x: str) -> int:
            if x == self.top:
                return 0
            if x not in memo:
                memo[x] = 1 + max(depth(y) for y in self.poset.covers_of(x))
            return memo[x]

        return depth(self.bottom)

    def is_interval_order(self) -> bool:
        return self.poset.is_interval_order()


def bounded_extension(P: FinitePoset) -> BoundedPoset:
    """Adjoin a fresh minimum and maximum below and above everything."""
    bottom, top = "bot", "top"
    existing = set(P.elements)
    while bottom in existing:
        bottom += "_"
    while top in existing:
        top += "_"
    pairs = P.relation_pairs()
    pairs += [(bottom, e) for e in P.elements]
    pairs += [(e, top) for e in P.elements]
    pairs.append((bottom, top))
    poset = FinitePoset(list(P.elements) + [bottom, top], pairs)
    return BoundedPoset(poset, bottom, top)


def order_complex(P: FinitePoset, vertex_of: dict[str, int] | None = None) -> SimplicialComplex:
    """The complex of chains of P; facets are the maximal chains.

    Vertices are integers: by default the index of each element in sorted
    label order.  Pass ``vertex_of`` to fix a numbering shared across
    several subposets of one universe.  The empty poset yields IRRELEVANT.
    """
    if not P.elements:
        return IRRELEVANT
    if vertex_of is None:
        vertex_of = {e: i for i, e in enumerate(P.elements)}
    return from_facets(
        tuple(sorted(vertex_of[e] for e in chain)) for chain in P.maximal_chains()
    )


def random_interval_order(k: int, seed: int) -> FinitePoset:
    """A seeded random interval order on k elements with integer endpoints
    in [0, 2k]; deterministic per seed."""
    if k < 1:
        raise ValueError("need k >= 1")
    if not isinstance(seed, int) or not (0 <= seed < 2**64):
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    rng = random.Random(seed)
    width = len(str(k - 1))
    rep: dict[str, tuple[int, int]] = {}
    for i in range(k):
        lo = rng.randint(0, 2 * k)
        hi = rng.randint(lo, 2 * k)
        rep[f"t{i:0{width}d}"] = (lo, hi)
    return from_intervals(rep)


# -- text format --------------------------------------------------------------
#
# Header line "elements: x y z ...", then one cover per line "x < y".
# '#' starts a comment.  Bounded posets add "bottom: x" and "top: y" lines.


def parse_poset(text: str) -> FinitePoset | BoundedPoset:
    elements: list[str] | None = None
    pairs: list[tuple[str, str]] = []
    bottom: str | None = None
    top: str | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if s.startswith("elements:"):
            if elements is not None:
                raise PosetParseError(lineno, "duplicate elements: line")
            elements = s[len("elements:") :].split()
            continue
        if s.startswith("bottom:"):
            bottom = s[len("bottom:") :].strip()
            continue
        if s.startswith("top:"):
            top = s[len("top:") :].strip()
            continue
        if "<" in s:
            left, _, right = s.partition("<")
            a, b = left.strip(), right.strip()
            if not a or not b or " " in a or " " in b:
                raise PosetParseError(lineno, f"malformed cover line {s!r}")
            pairs.append((a, b))
            continue
        raise PosetParseError(lineno, f"unrecognized line {s!r}")
    if elements is None:
        raise PosetParseError(1, "missing elements: line")
    try:
        poset = FinitePoset(elements, pairs)
    except ValueError as exc:
        raise PosetParseError(1, str(exc)) from None
    if (bottom is None) != (top is None):
        raise PosetParseError(1, "bottom: and top: must be given together")
    if bottom is not None and top is not None:
        return BoundedPoset(poset, bottom, top)
    return poset


def format_poset(P: FinitePoset | BoundedPoset) -> str:
    bounded = isinstance(P, BoundedPoset)
    poset = P.poset if bounded else P
    lines = ["elements: " + " ".join(poset.elements)]
    for a, b in sorted(poset.covers):
        lines.append(f"{a} < {b}")
    if bounded:
        lines.append(f"bottom: {P.bottom}")
        lines.append(f"top: {P.top}")
    return "\n".join(lines) + "\n"
