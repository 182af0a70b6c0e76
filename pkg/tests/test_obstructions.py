import pytest

from shellob import families
from shellob.complexes import CapabilityError, from_facets
from shellob.obstructions import (
    EnumerationTask,
    enumerate_obstructions,
    enumerate_purity_obstructions,
    is_obstruction,
    is_purity_obstruction,
    iter_complexes,
    nonshellable_witness,
)
from shellob.shelling import SearchBudget, is_shelling


# -- predicates -----------------------------------------------------------------


def test_band_complexes_are_obstructions():
    for n in (5, 6, 7):
        assert is_obstruction(families.m_cycle(n)).verdict is True


def test_skeleton_two_cells_is_obstruction():
    report = is_obstruction(families.skeleton_with_two_cells(2))
    assert report.verdict is True
    assert report.certificate is None and report.witness_subset is None


def test_sphere_is_not_an_obstruction():
    report = is_obstruction(families.boundary_of_simplex(4))
    assert report.verdict is False
    assert report.certificate is not None
    assert is_shelling(families.boundary_of_simplex(4), report.certificate.order)


def test_nonshellable_non_obstruction_has_subset_witness():
    K = from_facets(list(families.m_cycle(5).facets) + [(6, 7)])
    report = is_obstruction(K)
    assert report.verdict is False
    assert report.witness_subset is not None
    sub = K.induced(report.witness_subset)
    from shellob.shelling import is_shellable

    assert is_shellable(sub) is False


def test_obstruction_undecided_under_tiny_budget():
    K = families.m_cycle(7)
    report = is_obstruction(K, SearchBudget(max_facets_exact=3))
    assert report.verdict is None


def test_purity_obstruction_predicate():
    assert is_purity_obstruction(families.purity_obstruction(2)).verdict is True
    report = is_purity_obstruction(from_facets([(1, 2, 3), (4, 5)]))
    assert report.verdict is False
    assert report.witness_subset is not None
    assert not from_facets([(1, 2, 3), (4, 5)]).induced(report.witness_subset).is_pure()
    assert is_purity_obstruction(families.m_cycle(5)).verdict is False  # pure


# -- witness extraction ------------------------------------------------------------


def test_witness_for_bands_beyond_seven_vertices():
    for n in (8, 9, 10):
        U = nonshellable_witness(families.m_cycle(n))
        assert 4 <= len(U) <= 7
        from shellob.shelling import is_shellable

        assert is_shellable(families.m_cycle(n).induced(U)) is False


def test_witness_minimum_size():
    # disjoint edges plus a far-away triangle: a 4-vertex witness exists
    K = from_facets([(1, 2), (3, 4), (5, 6, 7)])
    U = nonshellable_witness(K)
    assert len(U) == 4


def test_witness_whole_complex_when_it_is_small():
    assert nonshellable_witness(families.m_cycle(5)) == (1, 2, 3, 4, 5)


def test_witness_preconditions():
    with pytest.raises(ValueError):
        nonshellable_witness(families.boundary_of_simplex(4))  # shellable
    with pytest.raises(ValueError):
        nonshellable_witness(families.disjoint_edges())  # 1-dimensional


# -- labeled enumeration -------------------------------------------------------------


def test_iter_complexes_counts():
    # cross-checked against the antichain counts of the boolean lattice
    assert sum(1 for _ in iter_complexes(1)) == 1
    assert sum(1 for _ in iter_complexes(2)) == 2
    assert sum(1 for _ in iter_complexes(3)) == 9
    assert sum(1 for _ in iter_complexes(4)) == 114


def test_iter_complexes_filters():
    for K in iter_complexes(4, dim=1):
        assert K.dim == 1
        assert set(K.vertices) == {1, 2, 3, 4}
    for K in iter_complexes(4, dim=2, allow_isolated=False):
        assert all(len(f) >= 2 for f in K.facets)
    assert all(K.dim is not None and K.dim <= 1 for K in iter_complexes(3, max_dim=1))


def test_enumerate_one_dimensional_obstructions():
    r4 = enumerate_obstructions(EnumerationTask(dimension=1, vertex_count=4))
    assert r4.complete
    assert len(r4.classes) == 1
    key, K = r4.classes[0]
    assert key == families.disjoint_edges().canonical_key()
    for n in (5, 6):
        r = enumerate_obstructions(EnumerationTask(dimension=1, vertex_count=n))
        assert r.complete
        assert r.classes == []


def test_enumerate_two_dimensional_on_five_vertices():
    r = enumerate_obstructions(EnumerationTask(dimension=2, vertex_count=5))
    assert r.complete
    keys = {k for k, _ in r.classes}
    assert families.m_cycle(5).canonical_key() in keys
    assert families.bridged_triangles().canonical_key() in keys
    # whatever the scan proves: report its classes, all independently valid
    for _, K in r.classes:
        assert is_obstruction(K).verdict is True
        assert not K.nonfacet_faces_in_two_facets()
        assert all(len(f) >= 2 for f in K.facets)


def test_enumeration_is_deterministic():
    t = EnumerationTask(dimension=2, vertex_count=5)
    a = enumerate_obstructions(t)
    b = enumerate_obstructions(t)
    assert [k.data for k, _ in a.classes] == [k.data for k, _ in b.classes]
    assert [K.facets for _, K in a.classes] == [K.facets for _, K in b.classes]


def test_enumerate_bounds():
    with pytest.raises(CapabilityError):
        enumerate_obstructions(EnumerationTask(dimension=2, vertex_count=7))
    with pytest.raises(CapabilityError):
        enumerate_obstructions(EnumerationTask(dimension=3, vertex_count=6))
    with pytest.raises(CapabilityError):
        enumerate_purity_obstructions(EnumerationTask(dimension=1, vertex_count=7))


def test_enumerate_dim2_on_6_respects_time_budget():
    r = enumerate_obstructions(
        EnumerationTask(
            dimension=2, vertex_count=6, budget=SearchBudget(time_limit=2.0)
        )
    )
    assert r.complete is False  # the full space needs far more than two seconds
    for _, K in r.classes:
        assert is_obstruction(K).verdict is True


def test_enumerate_purity_obstructions_small():
    r = enumerate_purity_obstructions(EnumerationTask(dimension=1, vertex_count=3))
    assert r.complete
    assert len(r.classes) == 1
    assert r.classes[0][0] == families.purity_obstruction(1).canonical_key()
    for n in (4, 5):
        r = enumerate_purity_obstructions(EnumerationTask(dimension=1, vertex_count=n))
        assert r.complete and r.classes == []


def test_enumerate_purity_obstructions_dim2():
    r = enumerate_purity_obstructions(EnumerationTask(dimension=2, vertex_count=4))
    assert r.complete
    keys = {k for k, _ in r.classes}
    assert families.purity_obstruction(2).canonical_key() in keys
    for _, K in r.classes:
        assert len(K.vertices) == 4
        assert is_purity_obstruction(K).verdict is True


def test_sampled_mode():
    t = EnumerationTask(dimension=2, vertex_count=7, mode="sampled", seed=5, samples=40)
    a = enumerate_obstructions(t)
    b = enumerate_obstructions(t)
    assert a.scanned == b.scanned == 40
    assert a.complete is False
    assert [k.data for k, _ in a.classes] == [k.data for k, _ in b.classes]
    assert a.undecided == 0
