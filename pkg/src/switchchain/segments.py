"""Splitting circuits into raw segments and labelling 2-circuits.

A circuit is cut at the repeated occurrences of its start vertex v into raw
1-circuits (v occurs once) and raw 2-circuits (v occurs twice).  Which end is
peeled depends on the orientation of the arcs at each v-occurrence, read off
the parity of the occurrence's position.  A raw 2-circuit is then labelled by
section coordinates and classified as normal, eccentric, or a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from switchchain.digraph import Arc, zeta_arc
from switchchain.pairings import Circuit


@dataclass(frozen=True)
class RawSegment:
    """A raw 1-circuit or raw 2-circuit peeled off a circuit."""

    kind: str                  # "one" or "two"
    vertices: tuple[int, ...]
    direction: int

    def circuit(self) -> Circuit:
        return Circuit(vertices=self.vertices, direction=self.direction)

    def arcs(self) -> list[Arc]:
        return self.circuit().arcs()


def _occurrences(vertices: tuple[int, ...], v: int) -> list[int]:
    return [p for p, w in enumerate(vertices) if w == v]


def split_raw_segments(circuit: Circuit) -> list[RawSegment]:
    """Cut a circuit at its start vertex into raw segments, in peel order."""
    segments: list[RawSegment] = []
    verts = circuit.vertices
    direction = circuit.direction
    while verts:
        v = verts[0]
        occ = _occurrences(verts, v)
        if len(occ) == 1:
            segments.append(RawSegment("one", verts, direction))
            break
        first, last = occ[1], occ[-1]
        if first % 2 == 0:
            # the closing arc of the leading section points out of v, so the
            # section is a 1-circuit on its own
            segments.append(RawSegment("one", verts[:first], direction))
            verts = verts[first:]
        elif last % 2 == 0:
            segments.append(RawSegment("one", verts[last:], direction))
            verts = verts[:last]
        else:
            segments.append(
                RawSegment("two", verts[:first] + verts[last:], direction))
            verts = verts[first:last]
            direction += 1
    return segments


@dataclass(frozen=True)
class TwoCircuit:
    """A 2-circuit v sec0 v sec1 in canonical section coordinates.

    The canonical string is chosen, among the two traversals that keep the
    direction, so that the arc from v to x(0,0) is the lexicographically
    least arc of the segment at v.  Sections have even length at least 2;
    x / y / z coordinates wrap to v on short sections.
    """

    v: int
    sec0: tuple[int, ...]
    sec1: tuple[int, ...]
    direction: int

    def string(self) -> tuple[int, ...]:
        return (self.v, *self.sec0, self.v, *self.sec1)

    def circuit(self) -> Circuit:
        return Circuit(vertices=self.string(), direction=self.direction)

    def arcs(self) -> list[Arc]:
        return self.circuit().arcs()

    def section(self, j: int) -> tuple[int, ...]:
        return self.sec0 if j % 2 == 0 else self.sec1

    def x(self, i: int, j: int) -> int:
        sec = self.section(j)
        return sec[0] if i % 2 == j % 2 else sec[-1]

    def y(self, i: int, j: int) -> int:
        sec = self.section(j)
        return sec[1] if i % 2 == j % 2 else sec[-2]

    def z(self, i: int, j: int) -> int:
        sec = self.section(j)
        if len(sec) == 2:
            return self.v
        return sec[2] if i % 2 == j % 2 else sec[-3]

    def start_arc(self) -> Arc:
        """The oriented arc from v to x(0,0); decides h against the current Z."""
        return zeta_arc(self.direction, (self.v, self.x(0, 0)))


def label_two_circuit(segment: RawSegment) -> TwoCircuit:
    verts, direction = segment.vertices, segment.direction
    v = verts[0]
    occ = _occurrences(verts, v)
    if segment.kind != "two" or len(occ) != 2:
        raise ValueError("not a 2-circuit segment")
    q = occ[1]
    if q % 2 != 1 or len(verts) % 2 != 0:
        raise ValueError("malformed 2-circuit string")
    sec0, sec1 = verts[1:q], verts[q + 1:]
    if sec1[-1] < sec0[0]:
        sec0, sec1 = tuple(reversed(sec1)), tuple(reversed(sec0))
    return TwoCircuit(v=v, sec0=sec0, sec1=sec1, direction=direction)


def classify_two_circuit(T: TwoCircuit) -> str:
    """Classify as "normal", "triangle", or "eccentric".

    Normal means some y(i,j) differs from x(i,j+1).  A non-normal 2-circuit
    on exactly three distinct vertices is a triangle; otherwise it is
    eccentric, in which case v never appears as any z(i,j).
    """
    coords = [(0, 0), (0, 1), (1, 0), (1, 1)]
    if any(T.x(i, j) != T.y(i, (j + 1) % 2) for i, j in coords):
        return "normal"
    distinct = set(T.string())
    if len(distinct) == 3:
        return "triangle"
    if any(T.z(i, j) == T.v for i, j in coords):
        raise AssertionError("non-normal 2-circuit with v as a z-vertex "
                             "must be a triangle")
    return "eccentric"
