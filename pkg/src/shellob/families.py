"""Named generators for the complexes the library studies, plus seeded
random complexes for property tests.  All generators are deterministic;
vertex labels are 1..n so outputs are easy to eyeball.
"""

from __future__ import annotations

import itertools
import random

from .complexes import SimplicialComplex, from_facets

MAX_SEED = 2**64


def _check_seed(seed: int) -> None:
    if not isinstance(seed, int) or not (0 <= seed < MAX_SEED):
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")


def disjoint_edges() -> SimplicialComplex:
    """Two vertex-disjoint edges: the unique 1-dimensional obstruction to
    shellability."""
    return from_facets([(1, 2), (3, 4)])


def bridged_triangles() -> SimplicialComplex:
    """Two triangles sharing one vertex, tied together by an extra edge.

    The smallest 2-dimensional nonshellable complex that contains no induced
    pair of disjoint edges.
    """
    return from_facets([(1, 2, 3), (3, 4, 5), (1, 4)])


def m_cycle(n: int) -> SimplicialComplex:
    """The triangulated band on n >= 4 vertices with facets {i, i+1, i+2}
    taken cyclically.

    For n >= 5 it triangulates a cylinder (n even) or a Moebius strip
    (n odd) and is not shellable; n = 4 gives the boundary of the
    tetrahedron.
    """
    if n < 4:
        raise ValueError("m_cycle needs n >= 4")
    cyc = lambda k: (k - 1) % n + 1
    return from_facets([(cyc(i), cyc(i + 1), cyc(i + 2)) for i in range(1, n + 1)])


def skeleton_with_two_cells(d: int) -> SimplicialComplex:
    """The (d-1)-skeleton of the simplex on {1..d+3} with the two d-cells
    {1..d+1} and {3..d+3} added.

    A d-dimensional obstruction to shellability for every d >= 1: the two
    top cells meet in too small a face for any shelling that starts with
    them, yet every proper induced subcomplex is shellable.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    n = d + 3
    faces = list(itertools.combinations(range(1, n + 1), d))
    faces.append(tuple(range(1, d + 2)))
    faces.append(tuple(range(3, d + 4)))
    return from_facets(faces)


def skeleton_with_one_cell(d: int) -> SimplicialComplex:
    """The (d-1)-skeleton of the simplex on {1..d+2} with the single d-cell
    {1..d+1} added.

    Shellable (its lexicographic facet order shells it), nonpure, and every
    proper induced subcomplex is pure: the canonical d-dimensional
    obstruction to purity on d+2 vertices.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    n = d + 2
    faces = list(itertools.combinations(range(1, n + 1), d))
    faces.append(tuple(range(1, d + 2)))
    return from_facets(faces)


def purity_obstruction(d: int) -> SimplicialComplex:
    """The d-dimensional obstruction to purity (alias of
    skeleton_with_one_cell)."""
    return skeleton_with_one_cell(d)


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """All (n-2)-dimensional faces of the simplex on {1..n}: an (n-2)-sphere."""
    if n < 2:
        raise ValueError("boundary_of_simplex needs n >= 2")
    return from_facets(itertools.combinations(range(1, n + 1), n - 1))


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane.

    Every edge lies in exactly two triangles and H_1 has torsion Z/2, which
    makes it the standard stress test for exact integer homology.
    """
    return from_facets(
        [
            (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
            (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
        ]
    )


def random_complex(n: int, d: int, density: float, seed: int) -> SimplicialComplex:
    """A seeded random pure-d facet sample on vertices 1..n.

    Each (d+1)-subset is kept independently with the given probability;
    sampling repeats until at least one facet comes up, so the result is
    never VOID.  Identical arguments reproduce identical complexes.
    """
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    _check_seed(seed)
    rng = random.Random(seed)
    candidates = list(itertools.combinations(range(1, n + 1), d + 1))
    for _ in range(10_000):
        chosen = [f for f in candidates if rng.random() < density]
        if chosen:
            return from_facets(chosen)
    raise ValueError("density too small to produce a nonempty complex")
