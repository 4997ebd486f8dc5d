"""Tests for peeling circuits into raw segments and labelling 2-circuits."""

import itertools

import pytest

from switchchain.digraph import sym_diff
from switchchain.enumeration import enumerate_omega
from switchchain.pairings import Circuit, decompose_circuits, enumerate_pairings
from switchchain.segments import (
    RawSegment,
    classify_two_circuit,
    label_two_circuit,
    split_raw_segments,
)


def test_single_occurrence_is_one_circuit():
    c = Circuit(vertices=(1, 2, 5, 4, 3, 2, 4, 3, 2, 4), direction=0)
    segs = split_raw_segments(c)
    assert len(segs) == 1
    assert segs[0].kind == "one"
    assert segs[0].vertices == c.vertices
    assert segs[0].direction == 0


def test_even_first_recurrence_peels_leading_section():
    c = Circuit(vertices=(1, 2, 3, 4, 1, 5, 2, 6), direction=0)
    segs = split_raw_segments(c)
    assert [s.kind for s in segs] == ["one", "one"]
    assert segs[0].vertices == (1, 2, 3, 4)
    assert segs[1].vertices == (1, 5, 2, 6)
    assert all(s.direction == 0 for s in segs)


def test_even_last_recurrence_peels_trailing_section():
    c = Circuit(vertices=(1, 2, 3, 1, 4, 6, 1, 5, 7, 8), direction=0)
    segs = split_raw_segments(c)
    assert segs[0].kind == "one"
    assert segs[0].vertices == (1, 5, 7, 8)
    assert segs[1].kind == "two"
    assert segs[1].vertices == (1, 2, 3, 1, 4, 6)
    assert all(s.direction == 0 for s in segs)


def test_odd_recurrences_peel_two_circuit_and_flip_direction():
    c = Circuit(vertices=(1, 2, 3, 1, 4, 1, 5, 6), direction=0)
    segs = split_raw_segments(c)
    assert segs[0].kind == "two"
    assert segs[0].vertices == (1, 2, 3, 1, 5, 6)
    assert segs[0].direction == 0
    assert segs[1].vertices == (1, 4)
    assert segs[1].direction == 1


def test_segments_cover_circuit_arcs():
    space = enumerate_omega(5, 1)
    for G, G2 in itertools.permutations(space.states[:12], 2):
        H = sym_diff(G, G2)
        for psi in enumerate_pairings(H):
            for c in decompose_circuits(H, psi):
                parts = split_raw_segments(c)
                counts = {}
                for seg in parts:
                    assert len(seg.vertices) % 2 == 0
                    for arc in seg.arcs():
                        counts[arc] = counts.get(arc, 0) + 1
                assert counts == {arc: 1 for arc in c.arcs()}


def test_labelling_picks_least_arc_at_v():
    seg = RawSegment("two", (1, 5, 3, 1, 4, 2), 0)
    two = label_two_circuit(seg)
    assert two.v == 1
    assert two.sec0 == (2, 4)
    assert two.sec1 == (3, 5)
    assert two.string() == (1, 2, 4, 1, 3, 5)
    assert two.start_arc() == (1, 2)
    assert sorted(two.arcs()) == sorted(seg.arcs())


def test_labelling_keeps_already_canonical_sections():
    seg = RawSegment("two", (1, 4, 6, 1, 4, 6), 0)
    two = label_two_circuit(seg)
    assert (two.sec0, two.sec1) == ((4, 6), (4, 6))


def test_coordinates_and_wrap_to_v():
    two = label_two_circuit(RawSegment("two", (1, 2, 4, 1, 3, 5), 0))
    assert (two.x(0, 0), two.x(1, 0)) == (2, 4)
    assert (two.x(1, 1), two.x(0, 1)) == (3, 5)
    assert (two.y(0, 0), two.y(1, 0)) == (4, 2)
    assert (two.y(1, 1), two.y(0, 1)) == (5, 3)
    assert two.z(0, 0) == two.z(1, 1) == 1


def test_longer_section_coordinates():
    two = label_two_circuit(RawSegment("two", (1, 2, 6, 7, 4, 1, 3, 5), 0))
    assert two.sec0 == (2, 6, 7, 4)
    assert (two.x(0, 0), two.y(0, 0), two.z(0, 0)) == (2, 6, 7)
    assert (two.x(1, 0), two.y(1, 0), two.z(1, 0)) == (4, 7, 6)


def test_rejects_malformed_two_circuits():
    with pytest.raises(ValueError):
        label_two_circuit(RawSegment("one", (1, 2, 3, 4), 0))
    with pytest.raises(ValueError):
        label_two_circuit(RawSegment("two", (1, 2, 1, 3, 4), 0))


def test_classify_triangle():
    two = label_two_circuit(RawSegment("two", (1, 4, 6, 1, 4, 6), 0))
    assert classify_two_circuit(two) == "triangle"


def test_classify_normal():
    two = label_two_circuit(RawSegment("two", (1, 2, 3, 1, 3, 2), 0))
    assert classify_two_circuit(two) == "normal"


def test_all_two_circuit_kinds_appear_in_5_1():
    space = enumerate_omega(5, 1)
    kinds = set()
    for G, G2 in itertools.permutations(space.states, 2):
        H = sym_diff(G, G2)
        for psi in enumerate_pairings(H):
            for c in decompose_circuits(H, psi):
                for seg in split_raw_segments(c):
                    if seg.kind == "two":
                        kinds.add(classify_two_circuit(label_two_circuit(seg)))
        if kinds == {"normal", "eccentric", "triangle"}:
            return
    raise AssertionError(f"only saw {kinds}")
