"""Independent oracles used to validate the library's fast paths.

Everything here works from first principles on explicit face sets: no
bitmasks, no memoization, no reuse of the package's search machinery.
Slow by design; only run at desk scale.
"""

from __future__ import annotations

import itertools

from shellob.complexes import SimplicialComplex


def faces_by_definition(K: SimplicialComplex) -> set[tuple[int, ...]]:
    """All faces as literal subsets of facets."""
    out: set[tuple[int, ...]] = set()
    for f in K.facets:
        for r in range(len(f) + 1):
            out.update(itertools.combinations(f, r))
    return out


def step_condition_by_definition(new_facet, earlier_facets) -> bool:
    """The shelling step condition, evaluated literally.

    Build the intersection of the closed new facet with the union of the
    earlier closed facets as an explicit set of faces, take its maximal
    elements, and demand they all have cardinality one below the new facet.
    """
    new = set(new_facet)
    intersection_faces: set[frozenset] = set()
    for g in earlier_facets:
        common = new & set(g)
        for r in range(len(common) + 1):
            for sub in itertools.combinations(sorted(common), r):
                intersection_faces.add(frozenset(sub))
    maximal = [
        s
        for s in intersection_faces
        if not any(s < t for t in intersection_faces)
    ]
    return all(len(s) == len(new) - 1 for s in maximal)


def brute_force_shelling(K: SimplicialComplex):
    """Depth-first search over facet orders with no state memoization.

    Returns a shelling order or None.  Independent of the package's subset
    dynamic program: prefixes are re-checked from scratch via the literal
    step condition.
    """
    facets = list(K.facets)
    m = len(facets)
    order: list = []
    used = [False] * m

    def rec() -> bool:
        if len(order) == m:
            return True
        for i in range(m):
            if used[i]:
                continue
            if len(order) == 0 or step_condition_by_definition(facets[i], order):
                used[i] = True
                order.append(facets[i])
                if rec():
                    return True
                order.pop()
                used[i] = False
        return False

    if rec():
        return tuple(order)
    return None


def brute_force_shellable(K: SimplicialComplex) -> bool:
    if K.is_irrelevant or len(K.facets) == 1:
        return True
    return brute_force_shelling(K) is not None


def reduced_euler_from_faces(K: SimplicialComplex) -> int:
    """Alternating face-count sum, empty face included with sign -1."""
    total = 0
    for f in faces_by_definition(K):
        total += (-1) ** (len(f) - 1)
    return total
