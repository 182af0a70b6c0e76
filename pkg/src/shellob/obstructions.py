"""Obstruction predicates, minimal nonshellable witnesses, and
isomorphism-class enumeration.

An obstruction to shellability is a nonshellable complex all of whose
proper induced subcomplexes are shellable; an obstruction to purity is the
analogous notion for purity.  Enumeration is exact only within configured
bounds and reports honestly when a budget ran out: an undecided
sub-question never turns into a verdict.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .complexes import (
    CanonicalKey,
    CapabilityError,
    Face,
    SimplicialComplex,
    from_facets,
)
from .families import random_complex
from .shelling import (
    CERTIFICATE,
    NONE,
    SearchBudget,
    ShellingCertificate,
    find_shelling,
    is_shellable,
)


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of an obstruction test.

    verdict True/False/None (None = a budget ran out before a sub-question
    was settled).  A negative shellability verdict carries either a
    shelling certificate for the complex itself or a proper vertex subset
    whose induced subcomplex is nonshellable; a negative purity verdict
    carries a nonpure proper subset unless the complex is simply pure.
    Every report can be re-checked independently from its witness.
    """

    kind: str  # "shellability" | "purity"
    verdict: bool | None
    certificate: ShellingCertificate | None = None
    witness_subset: tuple[int, ...] | None = None


def is_obstruction(K: SimplicialComplex, budget: SearchBudget | None = None) -> ObstructionReport:
    """Decide whether K is an obstruction to shellability.

    The complex's own shelling search runs first (a certificate settles the
    question), then proper vertex subsets are scanned smallest first; a
    single nonshellable induced subcomplex also settles it, even when the
    complex's own search was undecided.
    """
    if K.is_void or K.is_irrelevant:
        raise ValueError("obstruction test needs a complex with at least one vertex")
    own = find_shelling(K, budget, decreasing_dim=True)
    if own.status == CERTIFICATE:
        return ObstructionReport("shellability", False, certificate=own.certificate)
    sub_undecided = False
    n = len(K.vertices)
    for size in range(1, n):
        for subset in itertools.combinations(K.vertices, size):
            verdict = is_shellable(K.induced(subset), budget)
            if verdict is False:
                return ObstructionReport("shellability", False, witness_subset=subset)
            if verdict is None:
                sub_undecided = True
    if own.status != NONE or sub_undecided:
        return ObstructionReport("shellability", None)
    return ObstructionReport("shellability", True)


def is_purity_obstruction(K: SimplicialComplex) -> ObstructionReport:
    """Decide whether K is an obstruction to purity (always terminates)."""
    if K.is_void or K.is_irrelevant:
        raise ValueError("purity obstruction test needs a complex with at least one vertex")
    if K.is_pure():
        return ObstructionReport("purity", False)
    n = len(K.vertices)
    for size in range(1, n):
        for subset in itertools.combinations(K.vertices, size):
            if not K.induced(subset).is_pure():
                return ObstructionReport("purity", False, witness_subset=subset)
    return ObstructionReport("purity", True)


def nonshellable_witness(
    K: SimplicialComplex, budget: SearchBudget | None = None
) -> tuple[int, ...]:
    """A minimum-size vertex subset inducing a nonshellable subcomplex.

    Defined for nonshellable 2-dimensional complexes; the witness always
    has between 4 and 7 vertices (possibly the whole vertex set when the
    complex itself is that small).  Sizes are scanned in increasing order,
    subsets in lexicographic order, so the result is deterministic.
    """
    if K.is_void or K.dim != 2:
        raise ValueError("witness extraction is defined for 2-dimensional complexes")
    own = is_shellable(K, budget)
    if own is True:
        raise ValueError("complex is shellable; no nonshellable witness exists")
    if own is None:
        raise CapabilityError("budget exhausted while deciding the complex itself")
    n = len(K.vertices)
    undecided = False
    for size in range(4, min(n, 7) + 1):
        for subset in itertools.combinations(K.vertices, size):
            verdict = is_shellable(K.induced(subset), budget)
            if verdict is False:
                return subset
            if verdict is None:
                undecided = True
    if undecided:
        raise CapabilityError("budget exhausted before a witness was confirmed")
    raise RuntimeError(
        "internal invariant violated: nonshellable 2-dimensional complex "
        "with no nonshellable induced subcomplex on 4..7 vertices"
    )


# -- enumeration ----------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationTask:
    """What to enumerate.  Exhaustive mode is only allowed within the exact
    bounds (dimension 1 up to 6 vertices, dimension 2 up to 6 vertices, the
    6-vertex case running under its time budget); everything larger must use
    sampled mode, which scans seeded random complexes and never claims
    completeness."""

    dimension: int
    vertex_count: int
    budget: SearchBudget | None = None
    mode: str = "exhaustive"  # "exhaustive" | "sampled"
    seed: int = 0
    samples: int = 1000


@dataclass
class EnumerationResult:
    classes: list[tuple[CanonicalKey, SimplicialComplex]] = field(default_factory=list)
    scanned: int = 0
    undecided: int = 0
    complete: bool = False
    mode: str = "exhaustive"


def iter_complexes(
    n: int,
    dim: int | None = None,
    max_dim: int | None = None,
    allow_isolated: bool = True,
):
    """All labeled complexes with vertex support exactly {1..n}.

    ``dim`` filters to exactly that dimension; ``max_dim`` caps it.  With
    ``allow_isolated`` every vertex not covered by a chosen larger face
    becomes a singleton facet; without it such leaves are skipped.  Faces of
    size >= 2 are chosen by depth-first antichain search (larger faces
    first, so absorption is a subset test against previous choices).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    cap = n
    if dim is not None:
        cap = min(cap, dim + 1)
    if max_dim is not None:
        cap = min(cap, max_dim + 1)
    vertices = tuple(range(1, n + 1))
    pool: list[tuple[int, ...]] = []
    for size in range(cap, 1, -1):
        pool.extend(itertools.combinations(vertices, size))
    pool_masks = [sum(1 << (v - 1) for v in f) for f in pool]
    full = (1 << n) - 1

    chosen: list[tuple[int, ...]] = []
    chosen_masks: list[int] = []

    def emit():
        if dim is not None:
            actual = max((len(f) for f in chosen), default=1)
            if actual != dim + 1:
                return None
        covered = 0
        for m in chosen_masks:
            covered |= m
        if covered != full:
            if not allow_isolated:
                return None
            singles = [(v,) for v in vertices if not (covered >> (v - 1)) & 1]
        else:
            singles = []
        if not chosen and not singles:
            return None
        return from_facets(chosen + singles)

    def walk(idx: int):
        if idx == len(pool):
            K = emit()
            if K is not None:
                yield K
            return
        yield from walk(idx + 1)
        m = pool_masks[idx]
        if not any(m & cm == m for cm in chosen_masks):
            chosen.append(pool[idx])
            chosen_masks.append(m)
            yield from walk(idx + 1)
            chosen.pop()
            chosen_masks.pop()

    yield from walk(0)


def _validate_obstruction_output(K: SimplicialComplex) -> None:
    # Cross-checks the enumerator's own answers against independent facts:
    # an obstruction has no isolated vertices (the singleton could be shelled
    # last), and it must fail the two-facet condition (complexes satisfying
    # it are never obstructions).
    if len(K.vertices) >= 2 and any(len(f) == 1 for f in K.facets):
        raise RuntimeError(f"enumerated obstruction {K!r} has an isolated vertex")
    if len(K.vertices) >= 1 and K.nonfacet_faces_in_two_facets():
        raise RuntimeError(
            f"enumerated obstruction {K!r} satisfies the two-facet condition"
        )


def _exhaustive_direct(task: EnumerationTask) -> EnumerationResult:
    result = EnumerationResult(mode="exhaustive")
    found: dict[CanonicalKey, SimplicialComplex] = {}
    budget = task.budget
    deadline = None
    if budget is not None and budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit
    complete = True
    # An obstruction never has an isolated vertex (shell the rest, then the
    # singleton), so only spanning complexes without singleton facets matter.
    for K in iter_complexes(task.vertex_count, dim=task.dimension, allow_isolated=False):
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            break
        result.scanned += 1
        report = is_obstruction(K, budget)
        if report.verdict is None:
            result.undecided += 1
            complete = False
        elif report.verdict:
            _validate_obstruction_output(K)
            key = K.canonical_key()
            found.setdefault(key, K)
    result.classes = sorted(found.items(), key=lambda kv: kv[0].data)
    result.complete = complete
    return result


def _hereditarily_shellable(K: SimplicialComplex, budget: SearchBudget | None) -> bool | None:
    for size in range(1, len(K.vertices)):
        for subset in itertools.combinations(K.vertices, size):
            verdict = is_shellable(K.induced(subset), budget)
            if verdict is not True:
                return verdict
    return is_shellable(K, budget)


def _exhaustive_dim2_on6(task: EnumerationTask) -> EnumerationResult:
    """Orderly extension search for 2-dimensional obstructions on 6 vertices.

    A complex on 6 vertices is an obstruction iff it is nonshellable and
    each of its six vertex deletions is hereditarily shellable, so
    candidates are built by attaching a new vertex to each hereditarily
    shellable complex on 5 vertices and filtering by the other five
    deletions.  The candidate space is large; the search honors the task's
    time budget and reports completeness honestly.
    """
    result = EnumerationResult(mode="exhaustive")
    budget = task.budget
    deadline = None
    if budget is not None and budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit

    def expired() -> bool:
        return deadline is not None and time.monotonic() > deadline

    hs: set[frozenset[Face]] = set()
    hs_list: list[SimplicialComplex] = []
    for H in iter_complexes(5, max_dim=2):
        if expired():
            result.complete = False
            return result
        if _hereditarily_shellable(H, budget) is True:
            hs.add(frozenset(H.facets))
            hs_list.append(H)

    found: dict[CanonicalKey, SimplicialComplex] = {}
    complete = True
    new_vertex = 6

    def deletions_hereditary(K: SimplicialComplex) -> bool:
        for v in range(1, 6):
            sub = K.induced([u for u in K.vertices if u != v])
            relabel = {u: i + 1 for i, u in enumerate(sub.vertices)}
            if frozenset(sub.relabel(relabel).facets) not in hs:
                return False
        return True

    for H in hs_list:
        if complete is False:
            break
        h_facets = set(H.facets)
        h_singletons = [f[0] for f in H.facets if len(f) == 1]
        h_edges = sorted(H.faces(1))
        for r in range(len(h_edges) + 1):
            if complete is False:
                break
            for e_choice in itertools.combinations(h_edges, r):
                if expired():
                    complete = False
                    break
                covered = {v for e in e_choice for v in e}
                free = [v for v in range(1, 6) if v not in covered]
                for s_choice in _subsets(free):
                    link_faces = list(e_choice) + [(v,) for v in s_choice]
                    if not link_faces:
                        continue
                    in_link = covered | set(s_choice)
                    if any(u not in in_link for u in h_singletons):
                        continue
                    star = [tuple(sorted(f + (new_vertex,))) for f in link_faces]
                    rest = [
                        g
                        for g in h_facets
                        if not (
                            (len(g) == 2 and g in e_choice)
                            or (len(g) == 1 and g[0] in in_link)
                        )
                    ]
                    facets = star + rest
                    if max(len(f) for f in facets) != 3:
                        continue
                    result.scanned += 1
                    K = from_facets(facets)
                    if not deletions_hereditary(K):
                        continue
                    own = find_shelling(K, budget, decreasing_dim=True)
                    if own.status == CERTIFICATE:
                        continue
                    if own.status != NONE:
                        result.undecided += 1
                        complete = False
                        continue
                    _validate_obstruction_output(K)
                    found.setdefault(K.canonical_key(), K)
    result.classes = sorted(found.items(), key=lambda kv: kv[0].data)
    result.complete = complete
    return result


def _subsets(items):
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def _sampled(task: EnumerationTask, purity: bool) -> EnumerationResult:
    result = EnumerationResult(mode="sampled", complete=False)
    found: dict[CanonicalKey, SimplicialComplex] = {}
    n, d = task.vertex_count, task.dimension
    budget = task.budget
    key_ok = n <= 9
    for i in range(task.samples):
        K = random_complex(n, d, 0.1 + 0.5 * ((task.seed + i) % 97) / 96, task.seed + i)
        result.scanned += 1
        if len(K.vertices) != n or K.dim != d:
            continue
        if purity:
            report = is_purity_obstruction(K)
        else:
            report = is_obstruction(K, budget)
        if report.verdict is None:
            result.undecided += 1
        elif report.verdict:
            if key_ok:
                found.setdefault(K.canonical_key(), K)
            else:
                found[CanonicalKey(repr(K.facets).encode())] = K
    result.classes = sorted(found.items(), key=lambda kv: kv[0].data)
    return result


def enumerate_obstructions(task: EnumerationTask) -> EnumerationResult:
    """Isomorphism classes of obstructions to shellability of the given
    dimension on exactly the given vertex count.

    Exhaustive mode enumerates every labeled complex within the exactness
    bounds, deduplicating by canonical key; output order is by key, so runs
    are reproducible.  Sampled mode scans seeded random complexes.
    """
    if task.mode == "sampled":
        return _sampled(task, purity=False)
    if task.mode != "exhaustive":
        raise ValueError(f"unknown mode {task.mode!r}")
    d, n = task.dimension, task.vertex_count
    if d == 1 and n <= 6:
        return _exhaustive_direct(task)
    if d == 2 and n <= 5:
        return _exhaustive_direct(task)
    if d == 2 and n == 6:
        return _exhaustive_dim2_on6(task)
    raise CapabilityError(
        f"exhaustive enumeration not supported for dimension {d} on {n} vertices; "
        "use sampled mode"
    )


def enumerate_purity_obstructions(task: EnumerationTask) -> EnumerationResult:
    """Isomorphism classes of obstructions to purity of the given dimension
    on exactly the given vertex count.  Purity checks are cheap, so the
    exhaustive bounds match the shellability ones."""
    if task.mode == "sampled":
        return _sampled(task, purity=True)
    if task.mode != "exhaustive":
        raise ValueError(f"unknown mode {task.mode!r}")
    d, n = task.dimension, task.vertex_count
    if not (d == 1 and n <= 6 or d == 2 and n <= 6):
        raise CapabilityError(
            f"exhaustive enumeration not supported for dimension {d} on {n} vertices; "
            "use sampled mode"
        )
    result = EnumerationResult(mode="exhaustive")
    found: dict[CanonicalKey, SimplicialComplex] = {}
    budget = task.budget
    deadline = None
    if budget is not None and budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit
    complete = True
    for K in iter_complexes(n, dim=d, allow_isolated=True):
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            break
        result.scanned += 1
        report = is_purity_obstruction(K)
        if report.verdict:
            if len(K.vertices) != d + 2:
                raise RuntimeError(
                    f"enumerated purity obstruction {K!r} does not have d+2 vertices"
                )
            found.setdefault(K.canonical_key(), K)
    result.classes = sorted(found.items(), key=lambda kv: kv[0].data)
    result.complete = complete
    return result
