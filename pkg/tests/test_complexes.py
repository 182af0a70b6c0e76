import itertools
import random

import pytest

from shellob.complexes import (
    IRRELEVANT,
    VOID,
    CapabilityError,
    ComplexParseError,
    SimplicialComplex,
    format_complex,
    from_facets,
    join_vertex,
    parse_complex,
    parse_faces,
)
from shellob import families

from helpers import faces_by_definition


def test_from_facets_absorbs_subsets():
    K = from_facets([(1, 2), (1,), (3,)])
    assert K.facets == ((1, 2), (3,))


def test_from_facets_degenerates():
    assert from_facets([]) is not None
    assert from_facets([]).is_void
    assert from_facets([()]).is_irrelevant
    assert from_facets([(), (1,)]).facets == ((1,),)
    assert VOID.dim is None
    assert IRRELEVANT.dim == -1


def test_from_facets_m5():
    K = from_facets([(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1), (5, 1, 2)])
    assert K == families.m_cycle(5)
    assert len(K.facets) == 5
    assert K.dim == 2


def test_duplicate_vertex_in_face_rejected():
    with pytest.raises(ValueError):
        from_facets([(1, 1, 2)])
    with pytest.raises(ValueError):
        from_facets([(-1, 2)])
    with pytest.raises(ValueError):
        from_facets([("a", 2)])


def test_faces_of_m5():
    K = families.m_cycle(5)
    assert len(K.faces(1)) == 10  # every pair of five vertices is an edge
    assert K.faces(1) == set(itertools.combinations(range(1, 6), 2))
    assert faces_by_definition(K) == K.faces()


def test_faces_simplex_and_void():
    simplex = from_facets([(1, 2, 3)])
    assert simplex.faces(0) == {(1,), (2,), (3,)}
    assert VOID.faces() == set()
    assert VOID.faces(1) == set()
    assert () in simplex.faces()
    assert simplex.faces(-1) == {()}


def test_simplex_face_count_is_power_of_two():
    for n in range(1, 7):
        simplex = from_facets([tuple(range(1, n + 1))])
        assert len(simplex.faces()) == 2**n


def test_induced_m5():
    K = families.m_cycle(5)
    sub = K.induced({1, 2, 3, 4})
    assert sub.facets == ((1, 2, 3), (1, 4), (2, 3, 4))
    # literal definition: the faces of the induced complex are exactly the
    # faces of K lying inside U
    expected = {f for f in faces_by_definition(K) if set(f) <= {1, 2, 3, 4}}
    assert faces_by_definition(sub) == expected


def test_induced_identity_and_splitting():
    K = families.m_cycle(5)
    assert K.induced(K.vertices) == K
    two = from_facets([(1, 2), (3, 4)])
    assert two.induced({1, 3}).facets == ((1,), (3,))


def test_induced_errors_and_empty():
    K = families.m_cycle(5)
    with pytest.raises(ValueError):
        K.induced({1, 9})
    assert K.induced(set()).is_irrelevant


def test_induced_nesting_invariant():
    rng = random.Random(7)
    for _ in range(50):
        K = families.random_complex(6, 2, 0.4, rng.randrange(2**32))
        V = list(K.vertices)
        W = set(rng.sample(V, rng.randint(0, len(V))))
        U = set(rng.sample(sorted(W), rng.randint(0, len(W))))
        assert K.induced(W).induced(U) == K.induced(U)


def test_pure_part():
    assert from_facets([(1, 2, 3), (3, 4)]).pure_part().facets == ((1, 2, 3),)
    m5 = families.m_cycle(5)
    assert m5.pure_part() == m5
    two = families.skeleton_with_two_cells(2)
    assert two.pure_part().facets == ((1, 2, 3), (3, 4, 5))
    with pytest.raises(ValueError):
        VOID.pure_part()


def test_pure_part_idempotent_and_dim_preserving():
    rng = random.Random(11)
    for _ in range(30):
        K = families.random_complex(6, 2, 0.3, rng.randrange(2**32))
        K = SimplicialComplex(list(K.facets) + [(9, 10)])
        pp = K.pure_part()
        assert pp.pure_part() == pp
        assert pp.dim == K.dim


def test_link():
    K = families.m_cycle(5)
    assert K.link(1).facets == ((2, 3), (2, 5), (4, 5))
    assert from_facets([(1, 2, 3)]).link(1).facets == ((2, 3),)
    assert from_facets([(1,), (2, 3)]).link(1).is_irrelevant
    with pytest.raises(ValueError):
        K.link(99)


def test_link_induced_commute():
    # lk_K(v) restricted to U equals the link of v in K(U + v)
    rng = random.Random(23)
    for _ in range(50):
        K = families.random_complex(6, 2, 0.45, rng.randrange(2**32))
        v = rng.choice(K.vertices)
        rest = [u for u in K.vertices if u != v]
        U = set(rng.sample(rest, rng.randint(0, len(rest))))
        lhs = K.induced(U | {v}).link(v)
        inner = K.link(v)
        rhs = inner.induced(U & set(inner.vertices))
        assert lhs == rhs


def test_join_vertex():
    assert join_vertex(9, from_facets([(1, 2)])).facets == ((1, 2, 9),)
    assert join_vertex(9, IRRELEVANT).facets == ((9,),)
    K = families.m_cycle(5)
    cone = join_vertex(1, K.link(1))
    assert cone.facets == ((1, 2, 3), (1, 2, 5), (1, 4, 5))
    with pytest.raises(ValueError):
        join_vertex(2, K.link(1))
    with pytest.raises(ValueError):
        join_vertex(1, VOID)


def test_join_link_is_subcomplex():
    rng = random.Random(5)
    for _ in range(30):
        K = families.random_complex(6, 2, 0.5, rng.randrange(2**32))
        v = rng.choice(K.vertices)
        link = K.link(v)
        if link.is_void:
            continue
        cone = join_vertex(v, link) if v not in link.vertices else None
        assert cone is not None
        for f in cone.facets:
            assert K.has_face(f)


def test_skeleton():
    simplex = from_facets([(1, 2, 3, 4)])
    assert simplex.skeleton(1).facets == tuple(
        itertools.combinations(range(1, 5), 2)
    )
    assert families.m_cycle(5).skeleton(1).facets == tuple(
        itertools.combinations(range(1, 6), 2)
    )
    assert simplex.skeleton(-1).is_irrelevant
    assert simplex.skeleton(5) == simplex
    with pytest.raises(ValueError):
        simplex.skeleton(-2)


def test_is_pure():
    assert families.m_cycle(5).is_pure()
    assert not from_facets([(1, 2, 3), (4, 5)]).is_pure()
    assert not families.purity_obstruction(1).is_pure()
    assert IRRELEVANT.is_pure()
    with pytest.raises(ValueError):
        VOID.is_pure()


def test_is_flag():
    assert families.m_cycle(7).is_flag()
    assert not families.m_cycle(5).is_flag()
    assert not families.m_cycle(6).is_flag()
    assert from_facets([(1, 2, 3, 4)]).is_flag()
    assert IRRELEVANT.is_flag()


def test_nonfacet_faces_in_two_facets():
    assert families.boundary_of_simplex(4).nonfacet_faces_in_two_facets()
    assert not families.m_cycle(5).nonfacet_faces_in_two_facets()
    assert not from_facets([(1, 2), (2, 3)]).nonfacet_faces_in_two_facets()
    assert families.projective_plane().nonfacet_faces_in_two_facets()
    with pytest.raises(ValueError):
        IRRELEVANT.nonfacet_faces_in_two_facets()


def test_canonical_key_basics():
    a = from_facets([(1, 2), (3, 4)])
    b = from_facets([(7, 9), (2, 5)])
    assert a.canonical_key() == b.canonical_key()
    assert (
        families.m_cycle(5).canonical_key()
        != families.skeleton_with_two_cells(2).canonical_key()
    )
    assert VOID.canonical_key() != IRRELEVANT.canonical_key()


def test_canonical_key_bound():
    big = from_facets([tuple(range(0, 10))])
    with pytest.raises(CapabilityError):
        big.canonical_key()


def test_canonical_key_permutation_invariance():
    rng = random.Random(99)
    for _ in range(1000):
        n = rng.randint(3, 7)
        K = families.random_complex(n, rng.randint(1, 2), 0.5, rng.randrange(2**32))
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        mapping = {v: perm[i] for i, v in enumerate(range(1, n + 1)) if v in K.vertices}
        moved = K.relabel({v: mapping[v] for v in K.vertices})
        assert K.canonical_key() == moved.canonical_key()


def test_equality_and_hash():
    a = families.m_cycle(5)
    b = from_facets(reversed(a.facets))
    assert a == b
    assert hash(a) == hash(b)
    assert a != families.m_cycle(6)


# -- text format -----------------------------------------------------------


def test_format_parse_roundtrip():
    for K in [
        families.m_cycle(5),
        families.disjoint_edges(),
        families.skeleton_with_two_cells(3),
        IRRELEVANT,
        VOID,
        from_facets([(0,), (1, 5)]),
    ]:
        assert parse_complex(format_complex(K)) == K


def test_parse_comments_and_blanks():
    text = "# a comment\n\n1 2 3\n\n# more\n2 3 4\n"
    assert parse_complex(text) == from_facets([(1, 2, 3), (2, 3, 4)])


def test_parse_irrelevant_and_void():
    assert parse_complex("!irrelevant\n").is_irrelevant
    assert parse_complex("# nothing\n").is_void
    assert parse_complex("").is_void


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ComplexParseError) as err:
        parse_complex("1 2\nx y\n")
    assert err.value.line == 2
    with pytest.raises(ComplexParseError):
        parse_complex("1 1\n")
    with pytest.raises(ComplexParseError):
        parse_complex("!irrelevant\n1 2\n")


def test_parse_faces_preserves_order():
    assert parse_faces("2 3\n1 2\n") == [(2, 3), (1, 2)]
