"""Shelling verification and exact shellability decision.

A facet order F_1, ..., F_m is a shelling when for every k >= 2 the
intersection of the closed facet F_k with the union of the earlier closed
facets is pure of dimension dim(F_k) - 1.  Facets of different dimensions
are allowed.  For a 0-dimensional F_k the required intersection is the
complex consisting of the empty face alone, which always holds because
facets form an antichain.

Since closures of earlier facets only enter through their union, whether a
facet can legally extend a prefix depends on the *set* of earlier facets,
not their order.  The exact decision procedure below exploits that: it
searches facet orders depth-first and memoizes prefix sets from which no
completion exists, so each of the at most 2^m states is explored once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .complexes import Face, SimplicialComplex, normalize_face

CERTIFICATE = "certificate"
NONE = "none"
UNDECIDED = "undecided"


class HypothesisError(ValueError):
    """A stated precondition of a shelling construction failed."""


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for exact searches.

    Exceeding any limit yields an explicit "undecided" outcome, never a
    wrong answer.
    """

    max_facets_exact: int = 24
    max_states: int = 2_000_000
    time_limit: float | None = None


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class ShellingCertificate:
    """A facet order together with the per-step intersection facets.

    ``step_intersections[k - 2]`` lists the facets of the intersection of
    closed facet k with the union of the earlier closed facets; each entry
    is pure of dimension one below the step's facet.
    """

    order: tuple[Face, ...]
    step_intersections: tuple[tuple[Face, ...], ...]


@dataclass(frozen=True)
class ShellingCheck:
    ok: bool
    certificate: ShellingCertificate | None = None
    failure_step: int | None = None  # 1-based index of the violating facet
    failure_intersection: tuple[Face, ...] | None = None


class _BudgetExceeded(Exception):
    pass


def _validate_order(K: SimplicialComplex, order) -> list[Face]:
    faces = [normalize_face(f) for f in order]
    if sorted(faces) != sorted(K.facets):
        raise ValueError("order is not a permutation of the facets of the complex")
    return faces


def _maximal(masks: list[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & kept == m for kept in out):
            out.append(m)
    return out


def _step_ok(mask: int, size: int, earlier: list[int]) -> bool:
    """Can a facet with this bitmask follow the given earlier facets?"""
    if size == 1 or not earlier:
        return True
    want = size - 1
    inters = [mask & e for e in earlier]
    big = [t for t in inters if t.bit_count() == want]
    if not big:
        return False
    for t in inters:
        if not any(t & s == t for s in big):
            return False
    return True


def check_shelling(K: SimplicialComplex, order) -> ShellingCheck:
    """Verify a facet order, reporting the first violating step on failure."""
    if K.is_void or K.is_irrelevant:
        raise ValueError("shelling check needs a complex with at least one vertex")
    faces = _validate_order(K, order)
    masks = [K.mask_of(f) for f in faces]
    index = {v: i for i, v in enumerate(K.vertices)}
    rev = {i: v for v, i in index.items()}

    def unmask(m: int) -> Face:
        return tuple(sorted(rev[i] for i in range(m.bit_length()) if m >> i & 1))

    steps: list[tuple[Face, ...]] = []
    for k in range(1, len(faces)):
        inters = [masks[k] & masks[i] for i in range(k)]
        top = _maximal(inters)
        faces_of_intersection = tuple(sorted(unmask(m) for m in top))
        want = len(faces[k]) - 1
        if any(m.bit_count() != want for m in top):
            return ShellingCheck(
                ok=False, failure_step=k + 1, failure_intersection=faces_of_intersection
            )
        steps.append(faces_of_intersection)
    cert = ShellingCertificate(order=tuple(faces), step_intersections=tuple(steps))
    return ShellingCheck(ok=True, certificate=cert)


def is_shelling(K: SimplicialComplex, order) -> bool:
    return check_shelling(K, order).ok


@dataclass(frozen=True)
class SearchResult:
    status: str  # CERTIFICATE | NONE | UNDECIDED
    certificate: ShellingCertificate | None = None


def find_shelling(
    K: SimplicialComplex,
    budget: SearchBudget | None = None,
    decreasing_dim: bool = False,
) -> SearchResult:
    """Exact three-valued search for a shelling order.

    Returns a certificate if a shelling exists within budget, "none" when
    the exhausted search proves there is none, and "undecided" when a
    budget ran out.  With ``decreasing_dim`` only orders whose facet
    dimensions weakly decrease are searched; by the rearrangement property
    of shellable complexes this restriction does not change the verdict,
    and it prunes hard.  Candidate facets are explored in canonical sorted
    order, so results are deterministic.
    """
    if K.is_void or K.is_irrelevant:
        raise ValueError("shelling search needs a complex with at least one vertex")
    budget = budget or DEFAULT_BUDGET
    facets = K.facets
    m = len(facets)
    if m == 1:
        return SearchResult(CERTIFICATE, check_shelling(K, facets).certificate)
    if m > budget.max_facets_exact:
        return SearchResult(UNDECIDED)

    masks = list(K._masks)
    sizes = [len(f) for f in facets]
    max_size = max(sizes)
    full = (1 << m) - 1
    dead: set[int] = set()
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    visited = 0
    order: list[int] = []

    def rec(placed: int, earlier: list[int], last_size: int) -> bool:
        nonlocal visited
        if placed == full:
            return True
        if placed in dead:
            return False
        visited += 1
        if visited > budget.max_states:
            raise _BudgetExceeded
        if deadline is not None and visited % 256 == 0 and time.monotonic() > deadline:
            raise _BudgetExceeded
        for f in range(m):
            if placed >> f & 1:
                continue
            if decreasing_dim and sizes[f] > last_size:
                continue
            if _step_ok(masks[f], sizes[f], earlier):
                order.append(f)
                earlier.append(masks[f])
                if rec(placed | (1 << f), earlier, sizes[f]):
                    return True
                earlier.pop()
                order.pop()
        dead.add(placed)
        return False

    try:
        # A weakly decreasing order must start at a facet of maximum
        # dimension, so restrict the roots accordingly.
        found = False
        for f in range(m):
            if decreasing_dim and sizes[f] != max_size:
                continue
            order.append(f)
            if rec(1 << f, [masks[f]], sizes[f]):
                found = True
                break
            order.pop()
    except _BudgetExceeded:
        return SearchResult(UNDECIDED)
    if not found:
        return SearchResult(NONE)
    check = check_shelling(K, [facets[i] for i in order])
    assert check.ok, "internal: search produced an invalid shelling"
    return SearchResult(CERTIFICATE, check.certificate)


def is_shellable(
    K: SimplicialComplex,
    budget: SearchBudget | None = None,
    decreasing_dim: bool = True,
) -> bool | None:
    """Three-valued shellability: True, False, or None when the budget ran out.

    IRRELEVANT and single-facet complexes are shellable by convention (the
    shelling condition is vacuous).
    """
    if K.is_void:
        raise ValueError("shellability of VOID is undefined")
    if K.is_irrelevant or len(K.facets) == 1:
        return True
    result = find_shelling(K, budget, decreasing_dim=decreasing_dim)
    if result.status == CERTIFICATE:
        return True
    if result.status == NONE:
        return False
    return None


def deletion_link_shelling(
    K: SimplicialComplex,
    v: int,
    deletion_order,
    link_order,
) -> tuple[Face, ...]:
    """Concatenate shellings of the vertex deletion and of the cone over the
    link into a shelling of the whole complex.

    Hypotheses: ``deletion_order`` shells the subcomplex induced on the other
    vertices, ``link_order`` shells the link of v, and no facet of the link
    is also a facet of the deletion.  Under these the deletion facets and
    the cones v+G over link facets G partition the facets of K, and listing
    the deletion shelling first and the coned link shelling second shells K.
    Any hypothesis failure raises HypothesisError naming the failed clause.
    """
    if v not in K.vertices:
        raise ValueError(f"vertex {v} not in complex")
    deletion = K.induced([u for u in K.vertices if u != v])
    link = K.link(v)

    shared = set(link.facets) & set(deletion.facets)
    if shared:
        raise HypothesisError(
            f"facet {sorted(shared)[0]} of the link of {v} is also a facet of the deletion"
        )

    del_faces = [normalize_face(f) for f in deletion_order]
    if sorted(del_faces) != sorted(deletion.facets):
        raise HypothesisError("deletion order is not a permutation of the deletion's facets")
    if not check_shelling(deletion, del_faces).ok:
        raise HypothesisError("deletion order is not a shelling of the vertex deletion")

    link_faces = [normalize_face(f) for f in link_order]
    if sorted(link_faces) != sorted(link.facets):
        raise HypothesisError("link order is not a permutation of the link's facets")
    if link.is_irrelevant:
        pass  # the single empty facet: shellable by convention
    elif not check_shelling(link, link_faces).ok:
        raise HypothesisError("link order is not a shelling of the link")

    combined = tuple(del_faces) + tuple(tuple(sorted(g + (v,))) for g in link_faces)
    if sorted(combined) != sorted(K.facets):
        raise HypothesisError(
            "deletion and coned link facets do not partition the facets of the complex"
        )
    return combined
