import itertools
import random

import pytest

from shellob.homology import reduced_homology
from shellob.interval_orders import (
    NotIntervalOrderError,
    atom_precedence,
    betti_interval_order,
    betti_with_first_atom,
    falling_chains,
    interval_order_shelling,
    smallest_atom_choices,
    verify_recursive_atom_ordering,
)
from shellob.posets import (
    BoundedPoset,
    FinitePoset,
    bounded_extension,
    order_complex,
    random_interval_order,
)
from shellob.shelling import check_shelling


def diamond() -> BoundedPoset:
    return bounded_extension(FinitePoset(["a", "b"], []))


def petite() -> BoundedPoset:
    # atoms a, b; a has the extra cover x; both x and b are covered by top
    return bounded_extension(FinitePoset(["a", "b", "x"], [("a", "x")]))


def chain2() -> BoundedPoset:
    return bounded_extension(FinitePoset(["a"], []))


def seeded_posets(count: int, max_interior: int = 8):
    for seed in range(count):
        k = 1 + seed % max_interior
        yield bounded_extension(random_interval_order(k, seed))


# -- atom precedence -----------------------------------------------------------


def test_atom_precedence_petite():
    ap = atom_precedence(petite())
    assert ap.atoms == ("a", "b")
    assert ap.pairs == frozenset({("a", "b")})
    assert ap.smallest == "a"
    assert ap.order == ("a", "b")


def test_atom_precedence_diamond():
    ap = atom_precedence(diamond())
    assert ap.pairs == frozenset()
    assert ap.smallest == "a"  # label-least among the minimal atoms


def test_atom_precedence_chain():
    ap = atom_precedence(chain2())
    assert ap.atoms == ("a",)
    assert ap.pairs == frozenset()
    assert ap.smallest == "a"


def test_atom_precedence_is_a_partial_order_on_random_inputs():
    for P in seeded_posets(60):
        ap = atom_precedence(P)
        assert ap.smallest == ap.order[0]
        for a, b in ap.pairs:
            assert (b, a) not in ap.pairs
        for (a, b), (c, d) in itertools.product(ap.pairs, repeat=2):
            if b == c:
                assert (a, d) in ap.pairs


# -- recursive atom orderings ----------------------------------------------------


def test_rao_small_cases():
    assert verify_recursive_atom_ordering(diamond(), ("a", "b"))
    assert verify_recursive_atom_ordering(diamond(), ("b", "a"))
    assert verify_recursive_atom_ordering(chain2(), ("a",))
    with pytest.raises(ValueError):
        verify_recursive_atom_ordering(diamond(), ("a",))


def test_rao_rejects_bad_order():
    # atoms a, b, c; a and b share the cover x, b and c share the cover y.
    # Placing c right after a fails: top is above both, but c's only cover y
    # is not above a.  Interleaving b first repairs it.  The checker works on
    # any bounded poset; this one is not even an interval order.
    P = bounded_extension(
        FinitePoset(["a", "b", "c", "x", "y"], [("a", "x"), ("b", "x"), ("b", "y"), ("c", "y")])
    )
    assert not P.is_interval_order()  # a < x and c < y form disjoint chains
    assert verify_recursive_atom_ordering(P, ("a", "b", "c"))
    assert not verify_recursive_atom_ordering(P, ("a", "c", "b"))


def test_any_linear_extension_of_precedence_is_rao():
    rng = random.Random(13)
    for P in seeded_posets(100):
        ap = atom_precedence(P)
        assert verify_recursive_atom_ordering(P, ap.order), P
        # a random linear extension of the precedence, not just the canonical one
        atoms = list(ap.atoms)
        for _ in range(2):
            rng.shuffle(atoms)
            placed: list[str] = []
            pending = atoms[:]
            while pending:
                choice = next(
                    x
                    for x in pending
                    if not any((y, x) in ap.pairs for y in pending if y != x)
                )
                placed.append(choice)
                pending.remove(choice)
            assert verify_recursive_atom_ordering(P, tuple(placed)), (P, placed)


# -- falling chains ---------------------------------------------------------------


def test_falling_chains_diamond():
    fc = falling_chains(diamond())
    assert fc.chains == (("bot", "b", "top"),)
    assert fc.count_by_length() == {2: 1}


def test_falling_chains_chain_poset():
    assert falling_chains(chain2()).chains == ()
    length_one = bounded_extension(FinitePoset([], []))
    assert falling_chains(length_one).chains == ((length_one.bottom, length_one.top),)


def test_falling_chains_petite():
    fc = falling_chains(petite())
    assert fc.chains == (("bot", "b", "top"),)
    assert betti_interval_order(petite()) == {0: 1}


def test_falling_chains_are_maximal_chains():
    for P in seeded_posets(50):
        maximal = set(P.poset.maximal_chains())
        for c in falling_chains(P).chains:
            assert c in maximal


# -- the Betti recursion -----------------------------------------------------------


def test_betti_bounded_antichain():
    for k in range(1, 6):
        P = bounded_extension(FinitePoset([f"a{i}" for i in range(k)], []))
        expected = {0: k - 1} if k > 1 else {}
        assert betti_interval_order(P) == expected


def test_betti_chains_vanish():
    for n in range(1, 5):
        labels = [f"c{i}" for i in range(n)]
        P = bounded_extension(
            FinitePoset(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])
        )
        assert betti_interval_order(P) == {}


def test_betti_rejects_non_interval_orders():
    Q = bounded_extension(
        FinitePoset(["w", "x", "y", "z"], [("w", "x"), ("y", "z")])
    )
    with pytest.raises(NotIntervalOrderError):
        betti_interval_order(Q)
    with pytest.raises(NotIntervalOrderError):
        falling_chains(Q)
    with pytest.raises(NotIntervalOrderError):
        interval_order_shelling(Q)


def test_betti_matches_homology_oracle():
    # the central contract: recursion equals Smith-normal-form homology of
    # the order complex of the interior, in every degree
    for P in seeded_posets(200):
        recursion = betti_interval_order(P)
        profile = reduced_homology(order_complex(P.interior()))
        degrees = set(recursion) | {d for d in profile.betti if d >= 0}
        for i in degrees:
            assert recursion.get(i, 0) == profile.betti.get(i, 0), (P, i)


def test_falling_chain_counts_match_betti():
    for P in seeded_posets(120):
        counts = falling_chains(P).count_by_length()
        betti = betti_interval_order(P)
        degrees = set(betti) | {length - 2 for length in counts}
        for i in degrees:
            assert counts.get(i + 2, 0) == betti.get(i, 0), (P, i)


def test_order_complexes_of_interval_orders_are_torsion_free():
    for P in seeded_posets(60):
        profile = reduced_homology(order_complex(P.interior()))
        assert profile.torsion == {}


def test_smallest_atom_choice_does_not_change_betti():
    checked_ties = 0
    for P in seeded_posets(120):
        choices = smallest_atom_choices(P)
        results = {tuple(sorted(betti_with_first_atom(P, a).items())) for a in choices}
        assert len(results) == 1, P
        if len(choices) > 1:
            checked_ties += 1
    assert checked_ties > 0  # the battery exercises genuine ties


# -- constructive shelling -----------------------------------------------------------


def test_shelling_diamond():
    order = interval_order_shelling(diamond())
    K = order_complex(diamond().interior())
    assert check_shelling(K, order).ok
    assert sorted(order) == [(0,), (1,)]


def test_shelling_petite():
    P = petite()
    order = interval_order_shelling(P)
    K = order_complex(P.interior())
    assert K.facets == ((0, 2), (1,))
    assert check_shelling(K, order).ok


def test_shelling_length_one():
    P = bounded_extension(FinitePoset([], []))
    assert interval_order_shelling(P) == ((),)


def test_shelling_battery():
    for P in seeded_posets(100):
        order = interval_order_shelling(P)
        K = order_complex(P.interior())
        if K.is_irrelevant:
            assert order == ((),)
        else:
            assert check_shelling(K, order).ok, P
