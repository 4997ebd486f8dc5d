"""Tests for the catalogue of disturbed-arc shapes."""

import itertools

import pytest

from switchchain.zoo import five_arc_structure, matches_catalogue

# The five-arc configuration arising at the fourth state of the worked
# example: three arcs fan out of the start vertex with mixed labels, one
# arc enters it, and one arc leaves the entering arc's tail with the
# opposite label.
FIVE = (((1, 2), -1), ((1, 3), -1), ((1, 4), 2), ((5, 1), -1), ((5, 6), 2))


def test_empty_and_single_arcs_match():
    assert matches_catalogue(())
    assert matches_catalogue((((1, 2), -1),))
    assert matches_catalogue((((1, 2), 2),))


def test_five_arc_configuration_matches():
    assert matches_catalogue(FIVE)
    r, w, u = five_arc_structure(FIVE)
    assert (r, w, u) == (0, 1, 5)


def test_subsets_of_a_member_are_members():
    for k in range(len(FIVE) + 1):
        for sub in itertools.combinations(FIVE, k):
            assert matches_catalogue(sub)


def test_reversed_member_matches_via_flip():
    flipped = tuple(((h, t), label) for (t, h), label in FIVE)
    assert matches_catalogue(flipped)
    r, w, u = five_arc_structure(flipped)
    assert (r, w, u) == (1, 1, 5)


# A chord from the start vertex can point at the tail of the entering
# arc, so a directed 2-cycle between those two vertices is a legitimate
# sub-shape (it arises when a derived 1-circuit revisits that tail at an
# odd position).
def test_directed_2_cycle_is_a_sub_shape():
    assert matches_catalogue((((1, 2), -1), ((2, 1), 2)))
    assert matches_catalogue((((1, 2), -1), ((1, 4), 2), ((4, 1), -1),
                              ((4, 2), 2)))


def test_uniform_three_fan_rejected():
    assert not matches_catalogue((((1, 2), 2), ((1, 3), 2), ((1, 4), 2)))
    assert matches_catalogue((((1, 2), 2), ((1, 3), 2), ((1, 4), -1)))


def test_two_entering_arcs_rejected():
    assert not matches_catalogue((((2, 1), -1), ((3, 1), -1), ((1, 4), 2),
                                  ((1, 5), 2), ((1, 6), -1)))


def test_detached_arc_must_leave_the_entering_tail():
    bad = (((1, 2), -1), ((1, 3), -1), ((1, 4), 2), ((5, 1), -1), ((6, 7), 2))
    assert not matches_catalogue(bad)


def test_detached_arc_must_carry_opposite_label():
    bad = (((1, 2), -1), ((1, 3), -1), ((1, 4), 2), ((5, 1), -1), ((5, 6), -1))
    assert not matches_catalogue(bad)


def test_more_than_five_arcs_rejected():
    six = FIVE + (((7, 8), -1),)
    assert not matches_catalogue(six)


def test_bad_labels_and_duplicates_raise():
    with pytest.raises(ValueError):
        matches_catalogue((((1, 2), 1),))
    with pytest.raises(ValueError):
        matches_catalogue((((1, 2), -1), ((1, 2), 2)))
    with pytest.raises(ValueError):
        five_arc_structure(FIVE[:4])


def test_five_arc_structure_rejects_non_members():
    bad = (((1, 2), 2), ((1, 3), 2), ((1, 4), 2), ((5, 1), -1), ((5, 6), 2))
    with pytest.raises(ValueError):
        five_arc_structure(bad)
