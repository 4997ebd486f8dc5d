"""Switch sequences that carry one digraph to another along raw segments.

Each circuit of a symmetric difference is split into raw segments.  A raw
1-circuit is processed in phases of switches anchored at its start vertex.
A raw 2-circuit is labelled, classified, and handled by the matching
routine: normal 2-circuits split into two derived 1-circuits or use an
extra shortcut switch, eccentric 2-circuits reduce to a normal one via an
eccentric switch, and triangles borrow a useful neighbour or useful arc
from outside the segment.  Every step records the switch, a step kind
(type 1 for 1-circuit phase switches, type 2 for shortcut and eccentric
switches, type 3 for triangle steps), and the labelled set of disturbed
off-segment arcs, which must always fit the shape catalogue.
"""

from __future__ import annotations

from dataclasses import dataclass

from switchchain.digraph import (Arc, Digraph, Switch, apply_switch,
                                 resolve_zeta_chi_switch, sym_diff, zeta_arc)
from switchchain.enumeration import (find_useful_arc, find_useful_neighbour,
                                     is_directed_3cycle, w_sets)
from switchchain.pairings import Circuit, Pairing, decompose_circuits
from switchchain.segments import (RawSegment, TwoCircuit, classify_two_circuit,
                                  label_two_circuit, split_raw_segments)
from switchchain.zoo import matches_catalogue

STEP_TYPES = {"phase": 1, "shortcut": 2, "eccentric": 2, "triangle": 3}


@dataclass(frozen=True)
class PathStep:
    """One transition: the switch plus bookkeeping for the flow analysis."""

    switch: Switch
    step_kind: str                 # "phase" | "shortcut" | "eccentric" | "triangle"
    segment_index: int             # which raw segment this step belongs to
    segment_kind: str              # "one" | "normal" | "eccentric" | "triangle"
    phase: int | None              # phase number inside a 1-circuit, else None
    interesting: tuple[tuple[Arc, int], ...]   # labelled disturbed arcs after the step

    @property
    def step_type(self) -> int:
        return STEP_TYPES[self.step_kind]


@dataclass(frozen=True)
class PathTrace:
    """All states and steps of one constructed path."""

    states: tuple[Digraph, ...]
    steps: tuple[PathStep, ...]

    @property
    def start(self) -> Digraph:
        return self.states[0]

    @property
    def end(self) -> Digraph:
        return self.states[-1]

    def __len__(self):
        return len(self.steps)


class _Builder:
    """Mutable cursor: current state, step log, per-segment bookkeeping."""

    def __init__(self, start: Digraph):
        self.Z = start
        self.states = [start]
        self.steps: list[PathStep] = []
        self.segment_index = -1
        self.segment_kind = ""
        self.raw_arcs: frozenset[Arc] = frozenset()
        self.raw_start = start
        self.interesting: dict[Arc, int] = {}
        self.detour_triangles = 0
        self._seg_first_step = 0

    def begin_segment(self, arcs, kind: str) -> None:
        assert not self.interesting, "disturbed arcs left over from a previous segment"
        self.segment_index += 1
        self.segment_kind = kind
        self.raw_arcs = frozenset(arcs)
        self.raw_start = self.Z
        self._seg_first_step = len(self.steps)
        self._seg_detour = False

    def finish_segment(self) -> None:
        assert not self.interesting, (
            "off-segment arcs still disturbed at the end of a segment: "
            f"{sorted(self.interesting)}")
        changed = self.Z.arcs ^ self.raw_start.arcs
        assert changed == self.raw_arcs, (
            "a finished segment must flip exactly its own arcs")
        used = len(self.steps) - self._seg_first_step
        budget = len(self.raw_arcs) // 2 + (1 if self._seg_detour else 0)
        assert used <= budget, "segment used more switches than its arc budget"

    def in_view(self, arc: Arc, h: int) -> bool:
        """Presence of the arc in the working view: the state itself for
        even h, its complement for odd h."""
        return self.Z.has_arc(arc) == (h % 2 == 0)

    def apply(self, i: int, h: int, a: int, b: int, c: int, d: int,
              step_kind: str, phase: int | None = None) -> None:
        sw = resolve_zeta_chi_switch(i % 2, h % 2, a, b, c, d)
        self.Z = apply_switch(self.Z, sw)
        touched = sw.deleted() + sw.added()
        on_segment = sum(1 for arc in touched if arc in self.raw_arcs)
        need = 2 if step_kind in ("shortcut", "eccentric") else 1
        assert on_segment >= need, (
            f"a {step_kind} switch must involve at least {need} segment arcs")
        for arc in touched:
            if arc in self.raw_arcs:
                continue
            now = self.Z.has_arc(arc)
            if now == self.raw_start.has_arc(arc):
                self.interesting.pop(arc, None)
            else:
                self.interesting[arc] = -1 if now else 2
        assert len(self.interesting) <= 5, "more than five disturbed arcs"
        labelled = tuple(sorted(self.interesting.items()))
        assert matches_catalogue(labelled), (
            f"disturbed arcs fall outside the shape catalogue: {labelled}")
        self.steps.append(PathStep(switch=sw, step_kind=step_kind,
                                   segment_index=self.segment_index,
                                   segment_kind=self.segment_kind,
                                   phase=phase, interesting=labelled))
        self.states.append(self.Z)


def _process_one_circuit(b: _Builder, vertices, direction: int) -> None:
    x = list(vertices)
    length = len(x)
    assert length >= 4 and length % 2 == 0, (
        "a 1-circuit needs even length at least four")
    assert x.count(x[0]) == 1, "the start vertex of a 1-circuit must not repeat"
    k = length // 2
    assert x[1] != x[-1], (
        "the two arcs at the start vertex must lead to distinct vertices")
    if x[-1] < x[1]:
        x = [x[0]] + list(reversed(x[1:]))   # reflection fixing the start vertex
    i = direction % 2
    x0 = x[0]
    h = 0 if b.in_view(zeta_arc(i, (x0, x[1])), 0) else 1
    for t in range(k):
        even_arc = zeta_arc(i, (x[2 * t], x[2 * t + 1]))
        odd_arc = zeta_arc(i, (x[(2 * t + 2) % length], x[2 * t + 1]))
        assert b.in_view(even_arc, h) and not b.in_view(odd_arc, h), (
            "segment arcs must alternate in the working view")
    for t in range(length):
        assert len({x[t], x[(t + 1) % length], x[(t + 2) % length]}) == 3, (
            "three consecutive vertices of a 1-circuit must be distinct")
    # The switch at index j removes the chord from x0 to the odd vertex at
    # position 2j-1 and installs the chord to the one at 2j+1, so each phase
    # is a descending run of indices whose top chord is absent when the phase
    # begins.  When a vertex occupies a single odd position its chord is
    # touched by two adjacent switches only, and the phase tops are just the
    # absent chords.  A repeated vertex makes one chord arc serve several
    # indices, and whether a given top leaves that arc in the state the later
    # switches expect depends on the whole schedule, so the tops are chosen
    # by simulating the chord statuses, preferring the smallest top and
    # backing out of dead ends.
    chord = [zeta_arc(i, (x0, x[2 * t + 1])) for t in range(k)]
    assert not b.in_view(chord[k - 1], h), "the closing chord must start absent"

    def plan(prev, status):
        if prev == k - 1:
            return []
        for top in range(prev + 1, k):
            trial = dict(status)
            ok = True
            for j in range(top, prev, -1):
                if trial[chord[j]] or not trial[chord[j - 1]]:
                    ok = False
                    break
                trial[chord[j]] = True
                trial[chord[j - 1]] = False
            if ok:
                tail = plan(top, trial)
                if tail is not None:
                    return [top] + tail
        return None

    tops = plan(0, {arc: b.in_view(arc, h) for arc in set(chord)})
    assert tops is not None, "no valid phase schedule for this 1-circuit"
    prev = 0
    for phase, q in enumerate(tops, start=1):
        for j in range(q, prev, -1):
            b.apply(i, h, x0, x[2 * j - 1], x[2 * j], x[2 * j + 1],
                    "phase", phase=phase)
        prev = q


def _mismatches(two: TwoCircuit) -> list[tuple[int, int]]:
    return [(i, j) for i in (0, 1) for j in (0, 1)
            if two.x(i, j) != two.y(i, (j + 1) % 2)]


def _segment_h(b: _Builder, two: TwoCircuit) -> int:
    return 0 if b.in_view(two.start_arc(), 0) else 1


def _process_normal(b: _Builder, two: TwoCircuit) -> None:
    v = two.v
    d0 = two.direction % 2
    h = _segment_h(b, two)
    mis = _mismatches(two)
    assert mis, "a normal 2-circuit must have a section mismatch"
    i, j = min(mis)
    y_val = two.y(i, (j + 1) % 2)
    x_val = two.x(i, j)
    shortcut = zeta_arc(d0 + i, (y_val, x_val))
    lam = (d0 + i) % 2
    # Rewrite the string as v A v B where A runs x(i,j+1) -> x(i+1,j+1)
    # and B runs x(i+1,j) -> x(i,j), with frame direction lam.
    sec_a = two.section(j + 1)
    A = list(sec_a) if i % 2 == (j + 1) % 2 else list(reversed(sec_a))
    sec_b = two.section(j)
    B = list(sec_b) if (i + 1) % 2 == j % 2 else list(reversed(sec_b))
    assert A[0] == two.x(i, (j + 1) % 2) and A[-1] == two.x(i + 1, (j + 1) % 2)
    assert B[0] == two.x(i + 1, j) and B[-1] == x_val
    frame = Circuit(vertices=(v, *A, v, *B), direction=lam)
    frame_arcs = frame.arcs()
    seg_arcs = set(two.arcs())
    assert set(frame_arcs) == seg_arcs, "rewriting the frame must keep the arc set"
    n_a = len(A)
    total = len(frame_arcs)

    if shortcut in seg_arcs:
        pos = frame_arcs.index(shortcut)
        if 1 <= pos <= n_a - 1:
            q = pos - 1
            pair = (A[q], A[q + 1])
            if pair == (y_val, x_val):
                assert not b.in_view(shortcut, h + j), (
                    "shortcut arc on the first half must start absent here")
                s1 = [v] + A[:q + 2]
                s2 = [v] + list(reversed(A[q + 1:])) + list(reversed(B))[1:]
            else:
                assert pair == (x_val, y_val)
                assert b.in_view(shortcut, h + j), (
                    "shortcut arc on the first half must start present here")
                s1 = [v] + A[:q + 1]
                s2 = [v] + list(reversed(A[q + 1:])) + list(reversed(B))
        else:
            assert n_a + 2 <= pos <= total - 2, "shortcut arc must avoid v"
            r = pos - n_a - 2
            pair = (B[r], B[r + 1])
            if pair == (y_val, x_val):
                assert not b.in_view(shortcut, h + j), (
                    "shortcut arc on the second half must start absent here")
                s1 = [v] + A[:2] + B[r + 1:]
                s2 = [v] + list(reversed(A[1:])) + list(reversed(B[:r]))
            else:
                assert pair == (x_val, y_val)
                assert b.in_view(shortcut, h + j), (
                    "shortcut arc on the second half must start present here")
                s1 = [v] + A[:2] + B[r + 2:]
                s2 = [v] + list(reversed(A[1:])) + list(reversed(B[:r + 1]))
        arcs1 = set(Circuit(vertices=tuple(s1), direction=lam).arcs())
        arcs2 = set(Circuit(vertices=tuple(s2), direction=lam + 1).arcs())
        assert arcs1 | arcs2 == seg_arcs and not arcs1 & arcs2, (
            "the derived 1-circuits must partition the segment arcs")
        _process_one_circuit(b, tuple(s1), lam)
        _process_one_circuit(b, tuple(s2), lam + 1)
        return

    s1 = [v] + list(reversed(A))[:-1] + list(reversed(B))
    arcs1 = set(Circuit(vertices=tuple(s1), direction=lam + 1).arcs())
    assert shortcut in arcs1, "the derived 1-circuit must pick up the shortcut arc"
    if not b.in_view(shortcut, h + j):
        b.apply(d0 + i, h + j, v, x_val, y_val, A[0], "shortcut")
        _process_one_circuit(b, tuple(s1), lam + 1)
    else:
        _process_one_circuit(b, tuple(s1), lam + 1)
        b.apply(d0 + i, h + j, v, x_val, y_val, A[0], "shortcut")


def _process_eccentric(b: _Builder, two: TwoCircuit) -> None:
    v = two.v
    d0 = two.direction % 2
    h = _segment_h(b, two)
    z10 = two.z(1, 0)
    x11 = two.x(1, 1)
    x10 = two.x(1, 0)
    ecc = zeta_arc(d0, (z10, v))
    assert ecc not in set(two.arcs()), "the eccentric arc never lies on the segment"
    inner = TwoCircuit(v=v, sec0=two.sec0[:-2], sec1=two.sec1,
                       direction=two.direction)
    assert inner.sec0[0] < inner.sec1[-1], "inner 2-circuit must stay canonical"
    assert classify_two_circuit(inner) == "normal", (
        "dropping the eccentric corner must leave a normal 2-circuit")
    assert min(_mismatches(inner)) == (1, 0), (
        "the inner 2-circuit must first mismatch at (1,0)")
    if not b.in_view(ecc, h):
        b.apply(d0, h, z10, x11, x10, v, "eccentric")
        _process_normal(b, inner)
    else:
        _process_normal(b, inner)
        b.apply(d0, h, z10, x11, x10, v, "eccentric")


def _process_triangle(b: _Builder, two: TwoCircuit) -> None:
    tri = sorted(set(two.string()))
    assert len(tri) == 3, "a triangle spans exactly three vertices"
    assert is_directed_3cycle(b.Z, tri), (
        "triangle vertices must induce a directed 3-cycle")
    found = find_useful_neighbour(b.Z, tri)
    if found is not None:
        x, i, h = found
        tails = [u for u in tri if b.in_view(zeta_arc(i, (u, x)), h)]
        assert len(tails) == 1, "the useful neighbour must attach at one vertex"
        a = tails[0]
        rest = [u for u in tri if u != a]
        succ = [u for u in rest if b.in_view(zeta_arc(i, (a, u)), h)]
        assert len(succ) == 1
        bb = succ[0]
        cc = next(u for u in rest if u != bb)
        assert not b.in_view(zeta_arc(i, (bb, x)), h)
        assert not b.in_view(zeta_arc(i, (cc, x)), h)
        assert b.in_view(zeta_arc(i, (bb, cc)), h)
        assert b.in_view(zeta_arc(i, (cc, a)), h)
        b.apply(i, h, a, x, bb, cc, "triangle")
        b.apply(i, h, bb, x, cc, a, "triangle")
        b.apply(i, h, a, bb, cc, x, "triangle")
        return
    (x, y), tag = find_useful_arc(b.Z, tri)
    b._seg_detour = True
    b.detour_triangles += 1
    h = 0 if tag == "U1" else 1
    sets = w_sets(b.Z, tri)
    assert x in sets.get(h, h) | sets.get(h, (h + 1) % 2), (
        "useful arc tail outside its attachment classes")
    assert y in sets.get(h, h) | sets.get((h + 1) % 2, h), (
        "useful arc head outside its attachment classes")
    a = tri[0]
    rest = [u for u in tri if u != a]
    succ = [u for u in rest if b.in_view((a, u), h)]
    assert len(succ) == 1
    bb = succ[0]
    cc = next(u for u in rest if u != bb)
    assert b.in_view((bb, cc), h) and b.in_view((cc, a), h)
    b.apply(0, h, x, y, a, bb, "triangle")
    b.apply(0, h, a, y, bb, cc, "triangle")
    b.apply(0, h, bb, y, cc, a, "triangle")
    b.apply(0, h, x, bb, cc, y, "triangle")


def assert_well_paired(segment: RawSegment, psi: Pairing) -> None:
    """Successive arcs of a raw segment must be partners in the pairing at
    their shared vertex, except where the shared vertex is the start vertex."""
    verts = segment.vertices
    arcs = segment.arcs()
    v = verts[0]
    length = len(arcs)
    for m in range(length - 1):
        shared = verts[m + 1]
        if shared == v:
            continue
        a, b = arcs[m], arcs[m + 1]
        if a[1] == b[1] == shared:
            partner = psi.head_partner(a)
        elif a[0] == b[0] == shared:
            partner = psi.tail_partner(a)
        else:
            raise AssertionError(
                f"arcs {a}, {b} do not share the vertex {shared} consistently")
        assert partner == b, (
            f"arcs {a}, {b} are not paired at their shared vertex {shared}")


def _run_segment(b: _Builder, segment: RawSegment) -> None:
    if segment.kind == "one":
        b.begin_segment(segment.arcs(), "one")
        _process_one_circuit(b, segment.vertices, segment.direction)
    else:
        two = label_two_circuit(segment)
        kind = classify_two_circuit(two)
        b.begin_segment(segment.arcs(), kind)
        if kind == "normal":
            _process_normal(b, two)
        elif kind == "eccentric":
            _process_eccentric(b, two)
        else:
            _process_triangle(b, two)
    b.finish_segment()


def _switches(b: _Builder) -> list[Switch]:
    return [step.switch for step in b.steps]


def process_one_circuit(segment: RawSegment, Z: Digraph) -> list[Switch]:
    """Process a raw 1-circuit starting from the state Z; return the switches."""
    if segment.kind != "one":
        raise ValueError("not a 1-circuit segment")
    b = _Builder(Z)
    _run_segment(b, segment)
    return _switches(b)


def _two_circuit_switches(segment: RawSegment, Z: Digraph,
                          expected: str) -> list[Switch]:
    two = label_two_circuit(segment)
    kind = classify_two_circuit(two)
    if kind != expected:
        raise ValueError(f"segment classifies as {kind}, not {expected}")
    b = _Builder(Z)
    _run_segment(b, segment)
    return _switches(b)


def process_normal(segment: RawSegment, Z: Digraph) -> list[Switch]:
    return _two_circuit_switches(segment, Z, "normal")


def process_eccentric(segment: RawSegment, Z: Digraph) -> list[Switch]:
    return _two_circuit_switches(segment, Z, "eccentric")


def process_triangle(segment: RawSegment, Z: Digraph) -> list[Switch]:
    return _two_circuit_switches(segment, Z, "triangle")


def recompute_interesting(Z: Digraph, raw_start: Digraph,
                          segment_arcs) -> tuple[tuple[Arc, int], ...]:
    """Disturbed off-segment arcs from scratch; oracle for the incremental set."""
    seg = frozenset(segment_arcs)
    out = []
    for arc in Z.arcs ^ raw_start.arcs:
        if arc in seg:
            continue
        out.append((arc, -1 if Z.has_arc(arc) else 2))
    return tuple(sorted(out))


def build_canonical_path(G: Digraph, G2: Digraph, psi: Pairing) -> PathTrace:
    """Full pipeline from a pairing of the symmetric difference to a path."""
    if G == G2:
        raise ValueError("endpoints must differ")
    H = sym_diff(G, G2)
    b = _Builder(G)
    for circuit in decompose_circuits(H, psi):
        for segment in split_raw_segments(circuit):
            assert_well_paired(segment, psi)
            _run_segment(b, segment)
    assert b.Z == G2, "the path must end at the target digraph"
    # Every segment needs at most half its arcs in switches, except a
    # triangle routed through a detour arc, which needs one extra, so half
    # the difference plus the detour count bounds the path length.  A detour
    # is only taken when no vertex has a mixed attachment to the triangle,
    # which d-regularity rules out for d = 2; those paths stay within dn.
    assert len(b.steps) <= len(H.blue) + b.detour_triangles, (
        "path longer than the arc bound")
    return PathTrace(states=tuple(b.states), steps=tuple(b.steps))
