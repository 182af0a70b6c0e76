"""Simplicial complexes stored as facet antichains over integer vertices.

A face is a sorted tuple of non-negative integer vertex labels; the empty
tuple is the empty face.  A complex is determined by its facets (the
inclusion-maximal faces).  Two degenerate complexes are kept distinct:

* ``VOID`` has no faces at all,
* ``IRRELEVANT`` consists of the empty face alone (dimension -1).

The distinction matters downstream: the empty face carries reduced homology
in degree -1, which the interval-order Betti recursion bottoms out on.

Internally every facet also gets a bitmask over a dense relabeling of the
vertex set, so the subset tests that dominate shelling searches are single
integer operations (Python ints act as bitsets of any width).
"""

from __future__ import annotations

import hashlib
import itertools

Face = tuple[int, ...]

#: canonical_key minimizes over all vertex permutations up to this many vertices
PERMUTATION_BOUND = 9


class CapabilityError(Exception):
    """An exact operation was asked to run beyond its configured bounds."""


class ComplexParseError(ValueError):
    """Malformed complex text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def normalize_face(face) -> Face:
    """Sort a face into canonical tuple form, validating the labels.

    Rejects negative or non-integer labels and duplicate vertices inside one
    face encoding.
    """
    vs = list(face)
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
    out = tuple(sorted(vs))
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"face {vs!r} repeats vertex {a}")
    return out


class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    Facets are stored sorted in lexicographic word order, e.g.
    ``(1, 2) < (1, 2, 3) < (1, 4)``.  Construction absorbs non-maximal input
    faces, so ``SimplicialComplex([(1, 2), (1,)])`` has the single facet
    ``(1, 2)``.  The vertex set is derived from the facets; an isolated
    vertex is representable only as a singleton facet.
    """

    __slots__ = ("facets", "vertices", "_index", "_masks", "_hash")

    def __init__(self, faces=()):
        normalized = sorted({normalize_face(f) for f in faces}, key=lambda f: (-len(f), f))
        vertices = sorted({v for f in normalized for v in f})
        index = {v: i for i, v in enumerate(vertices)}
        kept: list[Face] = []
        kept_masks: list[int] = []
        for f in normalized:  # longest first, so subset absorption is one pass
            mask = 0
            for v in f:
                mask |= 1 << index[v]
            if any(mask & m == mask for m in kept_masks):
                continue
            kept.append(f)
            kept_masks.append(mask)
        order = sorted(range(len(kept)), key=lambda i: kept[i])
        object.__setattr__(self, "facets", tuple(kept[i] for i in order))
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_masks", tuple(kept_masks[i] for i in order))
        object.__setattr__(self, "_hash", hash(self.facets))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(VOID)"
        if self.is_irrelevant:
            return "SimplicialComplex(IRRELEVANT)"
        return f"SimplicialComplex({list(self.facets)!r})"

    # -- basic queries ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @property
    def dim(self) -> int | None:
        """Max facet cardinality minus one; None for VOID, -1 for IRRELEVANT."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def mask_of(self, face: Face) -> int:
        mask = 0
        for v in face:
            mask |= 1 << self._index[v]
        return mask

    def has_face(self, face) -> bool:
        f = normalize_face(face)
        if any(v not in self._index for v in f):
            return False
        if self.is_void:
            return False
        mask = self.mask_of(f)
        return any(mask & m == mask for m in self._masks)

    def faces(self, d: int | None = None) -> set[Face]:
        """All faces, or just the d-dimensional ones (d = -1 gives the empty face).

        The empty face belongs to every nonvoid complex.  VOID has no faces.
        """
        if self.is_void:
            return set()
        out: set[Face] = set()
        if d is None:
            for f in self.facets:
                for r in range(len(f) + 1):
                    out.update(itertools.combinations(f, r))
        else:
            k = d + 1
            if k < 0:
                return set()
            for f in self.facets:
                if len(f) >= k:
                    out.update(itertools.combinations(f, k))
        return out

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, including f[-1] = 1 for any nonvoid complex."""
        counts: dict[int, int] = {}
        for f in self.faces():
            counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
        return counts

    # -- constructions ----------------------------------------------------

    def induced(self, subset) -> "SimplicialComplex":
        """The subcomplex of faces contained in the given vertex subset."""
        want = {int(v) for v in subset}
        unknown = want - set(self.vertices)
        if unknown:
            raise ValueError(f"unknown vertices in induced(): {sorted(unknown)}")
        return SimplicialComplex(tuple(v for v in f if v in want) for f in self.facets)

    def link(self, v: int) -> "SimplicialComplex":
        """Faces F with F + v still a face and v not in F."""
        if v not in self._index:
            raise ValueError(f"vertex {v} not in complex")
        return SimplicialComplex(
            tuple(u for u in f if u != v) for f in self.facets if v in f
        )

    def pure_part(self) -> "SimplicialComplex":
        """The subcomplex generated by the facets of maximum dimension."""
        if self.is_void:
            raise ValueError("pure_part of VOID is undefined")
        top = max(len(f) for f in self.facets)
        return SimplicialComplex(f for f in self.facets if len(f) == top)

    def skeleton(self, k: int) -> "SimplicialComplex":
        """All faces of dimension at most k (k = -1 gives IRRELEVANT)."""
        if k < -1:
            raise ValueError("skeleton dimension must be >= -1")
        if self.is_void:
            return self
        if self.dim is not None and k >= self.dim:
            return self
        faces: set[Face] = set()
        for f in self.facets:
            if len(f) <= k + 1:
                faces.add(f)
            else:
                faces.update(itertools.combinations(f, k + 1))
        return SimplicialComplex(faces)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex relabeling."""
        images = [mapping[v] for v in self.vertices]
        if len(set(images)) != len(images):
            raise ValueError("relabeling is not injective")
        return SimplicialComplex(tuple(mapping[v] for v in f) for f in self.facets)

    # -- predicates -------------------------------------------------------

    def is_pure(self) -> bool:
        """True when all facets share one dimension (IRRELEVANT counts as pure)."""
        if self.is_void:
            raise ValueError("purity of VOID is undefined")
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def is_flag(self) -> bool:
        """True when every set of pairwise adjacent vertices is a face."""
        if self.is_void:
            raise ValueError("flagness of VOID is undefined")
        edges = self.faces(1)
        n = len(self.vertices)
        for r in range(3, n + 1):
            for cand in itertools.combinations(self.vertices, r):
                if all(pair in edges for pair in itertools.combinations(cand, 2)):
                    if not self.has_face(cand):
                        return False
        return True

    def nonfacet_faces_in_two_facets(self) -> bool:
        """True when every face that is not a facet lies in at least two facets.

        Closed pseudomanifolds satisfy this; complexes with free faces do not.
        """
        if self.is_void or self.is_irrelevant:
            raise ValueError("predicate needs a complex with at least one vertex")
        facet_set = set(self.facets)
        for face in self.faces():
            if face in facet_set:
                continue
            mask = self.mask_of(face)
            hits = 0
            for m in self._masks:
                if mask & m == mask:
                    hits += 1
                    if hits == 2:
                        break
            if hits < 2:
                return False
        return True

    # -- canonical form ---------------------------------------------------

    def canonical_key(self) -> "CanonicalKey":
        """A byte encoding equal for two complexes iff they are isomorphic.

        Minimizes the sorted facet list over all vertex relabelings, which is
        exact but exponential; above PERMUTATION_BOUND vertices a
        CapabilityError is raised rather than approximating.
        """
        if self.is_void:
            return CanonicalKey(b"!void")
        if self.is_irrelevant:
            return CanonicalKey(b"!irrelevant")
        n = len(self.vertices)
        if n > PERMUTATION_BOUND:
            raise CapabilityError(
                f"canonical_key supports at most {PERMUTATION_BOUND} vertices, got {n}"
            )
        dense = [tuple(self._index[v] for v in f) for f in self.facets]
        # minimize the sorted facet-bitmask vector over all relabelings
        best = None
        for p in itertools.permutations(range(n)):
            cand = sorted(sum(1 << p[i] for i in f) for f in dense)
            if best is None or cand < best:
                best = cand
        faces = [
            tuple(i for i in range(n) if m >> i & 1) for m in best
        ]
        text = ";".join(",".join(map(str, f)) for f in sorted(faces))
        return CanonicalKey(text.encode("ascii"))


class CanonicalKey:
    """Relabeling-invariant identity of a complex; hashable and ordered."""

    __slots__ = ("data",)

    def __init__(self, data: bytes):
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalKey is immutable")

    def __eq__(self, other):
        return isinstance(other, CanonicalKey) and self.data == other.data

    def __lt__(self, other):
        return self.data < other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"CanonicalKey({self.digest()})"

    def digest(self) -> str:
        """Short stable hash, used to name enumeration output files."""
        return hashlib.sha256(self.data).hexdigest()[:16]


VOID = SimplicialComplex([])
IRRELEVANT = SimplicialComplex([()])


def from_facets(faces) -> SimplicialComplex:
    """Build the complex generated by the given faces (non-maximal absorbed).

    An empty list gives VOID; a list containing only the empty face gives
    IRRELEVANT.
    """
    return SimplicialComplex(faces)


def join_vertex(v: int, other: SimplicialComplex) -> SimplicialComplex:
    """The cone over a complex with a fresh apex vertex."""
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ValueError(f"apex must be a non-negative integer, got {v!r}")
    if other.is_void:
        raise ValueError("cannot cone over VOID")
    if v in other.vertices:
        raise ValueError(f"apex {v} already a vertex of the base complex")
    return SimplicialComplex(f + (v,) for f in other.facets)


# -- text format ------------------------------------------------------------
#
# One facet per line, labels as space-separated non-negative decimal
# integers.  '#' starts a comment line, blank lines are ignored.  A file
# whose only payload line is "!irrelevant" denotes IRRELEVANT; an empty
# file denotes VOID.


def parse_faces(text: str) -> list[Face]:
    """Parse facet lines in file order (no absorption); used for order files."""
    faces: list[Face] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if s == "!irrelevant":
            raise ComplexParseError(lineno, "'!irrelevant' not allowed in an order file")
        tokens = s.split()
        try:
            face = normalize_face(int(t) for t in tokens)
        except ValueError as exc:
            raise ComplexParseError(lineno, str(exc)) from None
        faces.append(face)
    return faces


def parse_complex(text: str) -> SimplicialComplex:
    faces: list[Face] = []
    irrelevant_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if s == "!irrelevant":
            irrelevant_line = lineno
            continue
        tokens = s.split()
        try:
            face = normalize_face(int(t) for t in tokens)
        except ValueError as exc:
            raise ComplexParseError(lineno, str(exc)) from None
        faces.append(face)
    if irrelevant_line is not None:
        if faces:
            raise ComplexParseError(irrelevant_line, "'!irrelevant' mixed with facet lines")
        return IRRELEVANT
    if not faces:
        return VOID
    return SimplicialComplex(faces)


def format_complex(K: SimplicialComplex) -> str:
    if K.is_void:
        return ""
    if K.is_irrelevant:
        return "!irrelevant\n"
    return "".join(" ".join(map(str, f)) + "\n" for f in K.facets)
