"""Reduced simplicial homology over the integers, computed exactly.

The chain complex is augmented: the empty face is the unique face in
degree -1, so the boundary of a vertex is the empty face and the map
from 0-chains is the all-ones row.  With this convention the usual rank
formula directly produces *reduced* Betti numbers, and the complex
consisting of the empty face alone gets betti[-1] = 1 with no special
casing.

Everything is arbitrary-precision integer arithmetic; no floating point
appears anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import Face, SimplicialComplex


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match declared shape")


def _boundary_entries(lower: list[Face], upper: list[Face]) -> IntegerMatrix:
    """Matrix of the boundary map from the faces in `upper` to those in `lower`.

    Signs alternate with the position of the removed vertex (faces are
    sorted tuples).  Removing the only vertex of a 0-face leaves the empty
    face, which gives the augmentation row for free.
    """
    row_index = {f: i for i, f in enumerate(lower)}
    grid = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for pos in range(len(f)):
            sub = f[:pos] + f[pos + 1 :]
            grid[row_index[sub]][j] = 1 if pos % 2 == 0 else -1
    return IntegerMatrix(len(lower), len(upper), tuple(tuple(r) for r in grid))


def boundary_matrix(K: SimplicialComplex, d: int) -> IntegerMatrix:
    """The boundary map from d-faces to (d-1)-faces, faces sorted canonically."""
    if K.is_void:
        raise ValueError("boundary matrix of VOID is undefined")
    dim = K.dim
    if not -1 <= d <= dim + 1:
        raise ValueError(f"dimension {d} outside [-1, {dim + 1}]")
    lower = sorted(K.faces(d - 1))
    upper = sorted(K.faces(d))
    return _boundary_entries(lower, upper)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def smith_normal_form(M: IntegerMatrix) -> tuple[int, tuple[int, ...]]:
    """Exact rank and invariant factors d1 | d2 | ... of an integer matrix.

    Pivots on a nonzero entry of minimal absolute value to limit coefficient
    growth; correctness over speed, the matrices here are small.
    """
    A = [list(row) for row in M.entries]
    R, C = M.rows, M.cols
    t = 0
    factors: list[int] = []
    while True:
        pivot = None
        best = None
        for i in range(t, R):
            row = A[i]
            for j in range(t, C):
                a = row[j]
                if a and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]

        while True:
            # clear column t below the pivot with unimodular row operations
            for i in range(t + 1, R):
                b = A[i][t]
                if not b:
                    continue
                a = A[t][t]
                if b % a == 0:
                    q = b // a
                    rt = A[t]
                    A[i] = [u - q * w for u, w in zip(A[i], rt)]
                else:
                    x, y, g = _xgcd(a, b)
                    af, bf = a // g, b // g
                    rt, ri = A[t], A[i]
                    A[t] = [x * u + y * w for u, w in zip(rt, ri)]
                    A[i] = [-bf * u + af * w for u, w in zip(rt, ri)]
            # clear row t right of the pivot with unimodular column operations
            touched = False
            for j in range(t + 1, C):
                b = A[t][j]
                if not b:
                    continue
                a = A[t][t]
                if b % a == 0:
                    q = b // a
                    for row in A:
                        row[j] -= q * row[t]
                else:
                    x, y, g = _xgcd(a, b)
                    af, bf = a // g, b // g
                    for row in A:
                        u, w = row[t], row[j]
                        row[t] = x * u + y * w
                        row[j] = -bf * u + af * w
                touched = True
            if not touched and all(A[i][t] == 0 for i in range(t + 1, R)):
                # pivot isolated; force it to divide the rest of the matrix
                fix = None
                a = A[t][t]
                for i in range(t + 1, R):
                    row = A[i]
                    for j in range(t + 1, C):
                        if row[j] % a:
                            fix = i
                            break
                    if fix is not None:
                        break
                if fix is None:
                    break
                A[t] = [u + w for u, w in zip(A[t], A[fix])]
        factors.append(abs(A[t][t]))
        t += 1
    return t, tuple(factors)


@dataclass
class HomologyProfile:
    """Reduced Betti numbers by degree (from -1 up to the dimension) and the
    torsion invariant factors (> 1, each dividing the next) by degree."""

    betti: dict[int, int] = field(default_factory=dict)
    torsion: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def betti_number(self, d: int) -> int:
        return self.betti.get(d, 0)

    def torsion_factors(self, d: int) -> tuple[int, ...]:
        return self.torsion.get(d, ())

    def reduced_euler(self) -> int:
        """Alternating sum of reduced Betti numbers, degree -1 included."""
        return sum((-1) ** d * b for d, b in self.betti.items())


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    """Reduced integral homology via Smith normal form of the boundary maps.

    betti[d] = #d-faces - rank(boundary_d) - rank(boundary_{d+1}); torsion in
    degree d comes from the invariant factors of boundary_{d+1}.
    """
    if K.is_void:
        raise ValueError("homology of VOID is undefined")
    dim = K.dim
    by_dim: dict[int, list[Face]] = {d: sorted(K.faces(d)) for d in range(-1, dim + 1)}
    ranks: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for d in range(0, dim + 1):
        rank, factors = smith_normal_form(_boundary_entries(by_dim[d - 1], by_dim[d]))
        ranks[d] = rank
        nontrivial = tuple(f for f in factors if f > 1)
        if nontrivial:
            torsion[d - 1] = nontrivial
    betti = {
        d: len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        for d in range(-1, dim + 1)
    }
    return HomologyProfile(betti=betti, torsion=torsion)
