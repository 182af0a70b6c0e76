"""Shellability machinery for bounded interval orders.

For a bounded interval order the atoms carry a natural precedence: atom a
precedes atom b when a has a cover that is not above b.  On interval
orders this relation is antisymmetric and transitive, every linear
extension of it is a recursive atom ordering, and the induced chain
labeling makes exactly the maximal chains through non-minimal atoms
"falling".  Counting falling chains by length gives the reduced Betti
numbers of the order complex of the interior, which collapses to the
recursion

    betti[i](P) = sum over atoms a other than the first of betti[i-1]([a, top])

with base case betti[-1] = 1 for an interval of length 1.  Every function
here is cross-checked against exact integer homology in the test suite;
the recursion never substitutes for the homology oracle.

When several atoms are precedence-minimal the label-least one is chosen;
the Betti recursion provably does not depend on that choice, and the test
suite asserts so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Face
from .posets import BoundedPoset, order_complex
from .shelling import check_shelling, deletion_link_shelling


class NotIntervalOrderError(ValueError):
    """The poset contains an induced pair of disjoint 2-chains."""


def _require_interval_order(P: BoundedPoset) -> None:
    witness = P.poset.contains_two_plus_two()
    if witness is not None:
        w, x, y, z = witness
        raise NotIntervalOrderError(
            f"not an interval order: induced disjoint chains {w} < {x} and {y} < {z}"
        )


@dataclass(frozen=True)
class AtomPrecedence:
    """The precedence relation on atoms, with a canonical linear extension.

    ``pairs`` holds (a, b) when a precedes b.  ``order`` is the linear
    extension that always picks the label-least available atom; ``smallest``
    is its first entry, a precedence-minimal atom.
    """

    atoms: tuple[str, ...]
    pairs: frozenset[tuple[str, str]]
    order: tuple[str, ...]
    smallest: str


def atom_precedence(P: BoundedPoset) -> AtomPrecedence:
    """Compute the atom precedence: a before b when some cover of a is not
    above b.

    Antisymmetry and transitivity hold whenever P is an interval order;
    a violation therefore signals a precondition breach and raises
    NotIntervalOrderError.
    """
    atoms = P.atoms()
    poset = P.poset
    pairs: set[tuple[str, str]] = set()
    for a in atoms:
        covers = poset.covers_of(a)
        for b in atoms:
            if a != b and any(not poset.less(b, c) for c in covers):
                pairs.add((a, b))
    for a, b in pairs:
        if (b, a) in pairs:
            raise NotIntervalOrderError(
                f"atom precedence not antisymmetric: {a} and {b} precede each other"
            )
    for a, b in pairs:
        for c in atoms:
            if (b, c) in pairs and (a, c) not in pairs:
                raise NotIntervalOrderError(
                    f"atom precedence not transitive at {a}, {b}, {c}"
                )
    order: list[str] = []
    remaining = set(atoms)
    while remaining:
        ready = sorted(
            x for x in remaining if not any((y, x) in pairs for y in remaining if y != x)
        )
        order.append(ready[0])
        remaining.remove(ready[0])
    return AtomPrecedence(
        atoms=atoms, pairs=frozenset(pairs), order=tuple(order), smallest=order[0]
    )


# -- recursive atom orderings --------------------------------------------------


def verify_recursive_atom_ordering(P: BoundedPoset, ordering) -> bool:
    """Check whether the given atom order is a recursive atom ordering.

    The order a_1, ..., a_k qualifies when (i) each interval [a_j, top]
    admits a recursive atom ordering in which the atoms lying above some
    earlier a_i come first, and (ii) for every i < j, any element above
    both a_i and a_j is above some cover of a_j that is itself above an
    earlier atom.  Works on any bounded poset; no interval-order assumption.
    """
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(P.atoms()):
        raise ValueError("ordering is not a permutation of the atoms")
    memo: dict[tuple[frozenset[str], frozenset[str]], bool] = {}
    return _is_rao(P, ordering, memo)


def _cond_pairwise(P: BoundedPoset, earlier: tuple[str, ...], aj: str) -> bool:
    """Condition (ii) for placing aj after the given earlier atoms."""
    poset = P.poset
    covers_aj = poset.covers_of(aj)
    for ai in earlier:
        for y in P.elements:
            if poset.less(ai, y) and poset.less(aj, y):
                ok = any(
                    poset.leq(z, y) and any(poset.less(ak, z) for ak in earlier)
                    for z in covers_aj
                )
                if not ok:
                    return False
    return True


def _marked_atoms(P: BoundedPoset, earlier: tuple[str, ...], aj: str) -> frozenset[str]:
    """Atoms of [aj, top] that lie above some earlier atom."""
    poset = P.poset
    return frozenset(
        z for z in poset.covers_of(aj) if any(poset.less(ai, z) for ai in earlier)
    )


def _is_rao(P: BoundedPoset, ordering: tuple[str, ...], memo) -> bool:
    if P.length() == 1:
        return True
    for j, aj in enumerate(ordering):
        earlier = ordering[:j]
        if not _cond_pairwise(P, earlier, aj):
            return False
        sub = P.upper_interval(aj)
        if not _admits_rao(sub, _marked_atoms(P, earlier, aj), memo):
            return False
    return True


def _admits_rao(P: BoundedPoset, first: frozenset[str], memo) -> bool:
    """Does P admit a recursive atom ordering starting with the given atoms?

    Depth-first search over placement sets: whether an atom may come next
    depends only on the set already placed, so dead prefixes are pruned as
    sets.
    """
    if P.length() == 1:
        return True
    key = (frozenset(P.elements), first)
    if key in memo:
        return memo[key]
    atoms = P.atoms()
    dead: set[frozenset[str]] = set()

    def extend(placed: frozenset[str], placed_seq: tuple[str, ...]) -> bool:
        if len(placed) == len(atoms):
            return True
        if placed in dead:
            return False
        pending_first = [a for a in first if a not in placed]
        candidates = pending_first if pending_first else [a for a in atoms if a not in placed]
        for a in sorted(candidates):
            if not _cond_pairwise(P, placed_seq, a):
                continue
            if not _admits_rao(P.upper_interval(a), _marked_atoms(P, placed_seq, a), memo):
                continue
            if extend(placed | {a}, placed_seq + (a,)):
                return True
        dead.add(placed)
        return False

    result = extend(frozenset(), ())
    memo[key] = result
    return result


# -- falling chains and the Betti recursion ------------------------------------


@dataclass(frozen=True)
class FallingChainSet:
    """Maximal chains (bottom to top, inclusive) that fall under the descent
    rule, applied recursively on upper intervals."""

    chains: tuple[tuple[str, ...], ...]

    def count_by_length(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.chains:
            out[len(c) - 1] = out.get(len(c) - 1, 0) + 1
        return out


def falling_chains(P: BoundedPoset) -> FallingChainSet:
    """The falling maximal chains of a bounded interval order.

    A chain descends at its bottom step exactly when its atom is not the
    first atom (its second element is then above an earlier atom), and the
    rest of the chain must fall in the atom's upper interval.  An interval
    of length 1 has its unique chain falling.  Degree by degree the counts
    equal the reduced Betti numbers of the order complex of the interior.
    """
    _require_interval_order(P)
    memo: dict[frozenset[str], tuple[tuple[str, ...], ...]] = {}
    return FallingChainSet(chains=_falling(P, memo))


def _falling(P: BoundedPoset, memo) -> tuple[tuple[str, ...], ...]:
    key = frozenset(P.elements)
    if key in memo:
        return memo[key]
    if P.length() == 1:
        result: tuple[tuple[str, ...], ...] = ((P.bottom, P.top),)
    else:
        prec = atom_precedence(P)
        chains: list[tuple[str, ...]] = []
        for a in prec.atoms:
            if a == prec.smallest:
                continue
            for c in _falling(P.upper_interval(a), memo):
                chains.append((P.bottom,) + c)
        result = tuple(sorted(chains))
    memo[key] = result
    return result


def betti_interval_order(P: BoundedPoset) -> dict[int, int]:
    """Reduced Betti numbers of the order complex of the interior, computed
    by the atom recursion (no homology involved).

    Returns the nonzero values for degrees i >= 0.  Intervals of length 1
    contribute a single unit in degree -1, which the recursion shifts up.
    """
    _require_interval_order(P)
    memo: dict[frozenset[str], dict[int, int]] = {}
    full = _betti(P, memo)
    return {i: v for i, v in full.items() if i >= 0 and v}


def _betti(P: BoundedPoset, memo) -> dict[int, int]:
    key = frozenset(P.elements)
    if key in memo:
        return memo[key]
    if P.length() == 1:
        result = {-1: 1}
    else:
        prec = atom_precedence(P)
        acc: dict[int, int] = {}
        for a in prec.atoms:
            if a == prec.smallest:
                continue
            for i, v in _betti(P.upper_interval(a), memo).items():
                acc[i + 1] = acc.get(i + 1, 0) + v
        result = acc
    memo[key] = result
    return result


def smallest_atom_choices(P: BoundedPoset) -> tuple[str, ...]:
    """All precedence-minimal atoms (candidates for the first atom)."""
    prec = atom_precedence(P)
    return tuple(
        a for a in prec.atoms if not any((b, a) in prec.pairs for b in prec.atoms)
    )


def betti_with_first_atom(P: BoundedPoset, first: str) -> dict[int, int]:
    """The Betti recursion run with a specific precedence-minimal atom first.

    Used to assert that the result does not depend on how ties among
    minimal atoms are broken.
    """
    _require_interval_order(P)
    if first not in smallest_atom_choices(P):
        raise ValueError(f"{first!r} is not a precedence-minimal atom")
    if P.length() == 1:
        return {}
    memo: dict[frozenset[str], dict[int, int]] = {}
    acc: dict[int, int] = {}
    for a in P.atoms():
        if a == first:
            continue
        for i, v in _betti(P.upper_interval(a), memo).items():
            acc[i + 1] = acc.get(i + 1, 0) + v
    return {i: v for i, v in acc.items() if i >= 0 and v}


# -- constructive shelling ------------------------------------------------------


def interval_order_shelling(P: BoundedPoset) -> tuple[Face, ...]:
    """A shelling of the order complex of the interior, built recursively.

    With a single atom the complex is a cone over the atom's upper
    interval, so the shelling lifts.  Otherwise pick an atom each of whose
    covers is above some other atom (one exists in any interval order with
    several atoms); its link facets are then never facets of its deletion,
    so shellings of the deletion and of the upper interval concatenate.
    Vertices are numbered by sorted interior label, matching
    ``order_complex(P.interior())``.
    """
    _require_interval_order(P)
    interior = sorted(P.interior().elements)
    vertex_of = {e: i for i, e in enumerate(interior)}
    memo: dict[frozenset[str], tuple[Face, ...]] = {}
    return _shell(P, vertex_of, memo)


def _qualifying_atom(P: BoundedPoset) -> str:
    atoms = P.atoms()
    poset = P.poset
    for a in atoms:
        others = [b for b in atoms if b != a]
        if all(any(poset.less(b, c) for b in others) for c in poset.covers_of(a)):
            return a
    raise RuntimeError(
        "internal invariant violated: no atom has all covers above another atom"
    )


def _shell(P: BoundedPoset, vertex_of: dict[str, int], memo) -> tuple[Face, ...]:
    key = frozenset(P.elements)
    if key in memo:
        return memo[key]
    interior = P.interior()
    if not interior.elements:
        result: tuple[Face, ...] = ((),)  # the sole facet of IRRELEVANT
    else:
        atoms = P.atoms()
        if len(atoms) == 1:
            a = atoms[0]
            sub = _shell(P.upper_interval(a), vertex_of, memo)
            va = vertex_of[a]
            result = tuple(tuple(sorted(ch + (va,))) for ch in sub)
        else:
            a = _qualifying_atom(P)
            deletion = BoundedPoset(
                P.poset.induced([e for e in P.elements if e != a]), P.bottom, P.top
            )
            del_order = _shell(deletion, vertex_of, memo)
            link_order = _shell(P.upper_interval(a), vertex_of, memo)
            K = order_complex(interior, vertex_of)
            result = deletion_link_shelling(K, vertex_of[a], del_order, link_order)
    memo[key] = result
    return result
