"""Frozen worked example: one instance whose canonical path hits every case.

A 23-vertex, degree-5 state pair whose symmetric difference splits, under
the frozen pairing, into one large two-circuit and six four-cycles.  The
large circuit needs an eccentric switch, a one-circuit processed in three
phases, and a closing shortcut switch; each four-cycle takes one switch,
thirteen transitions in all.  Four switches in, the path disturbs five
interesting arcs at once and the pairing shows sixteen same-coloured pairs
under the mid-path colouring, hitting both caps exactly.

The two colour classes only fix the endpoint digraphs up to a shared
padding; tools/derive_fixture.py found the one frozen below by a
deterministic backtracking search at the smallest feasible degree.  The
path construction never touches a padding arc (every chord, eccentric and
shortcut arc of this instance lies in the symmetric difference), so the
trace below is the same for any valid padding.
"""

from __future__ import annotations

from switchchain.digraph import Digraph
from switchchain.flow import bad_pairs, colour_by_state
from switchchain.pairings import Pairing
from switchchain.processing import PathTrace, build_canonical_path

N = 23
D = 5

# Vertex numbering.  Vertex 1 is the doubled vertex of the large
# two-circuit; the numbers are chosen so that the circuit decomposition
# starts with the large circuit (vertex 1 must be the tail of the
# lexicographically least arc of the difference) and so that the canonical
# section relabelling keeps the eccentric corner at the far end (the corner
# names follow the x/y/z coordinates of segments.TwoCircuit).
V = 1
X00, X01, X10, X11 = 2, 3, 5, 11
Z00, Z01, Z10, Z11 = 9, 13, 17, 12
W1, W2 = 10, 7
P1, P2 = 14, 4
Q1, Q2 = 15, 6
R1, R2 = 16, 18
S1, S2 = 19, 20
T1, T2 = 21, 22
U1, U2 = 23, 8

# Arcs in the first endpoint only (blue).  The first eight lie on the large
# two-circuit, then two per four-cycle.
BLUE = (
    (V, X00), (X01, Z00), (W1, W2), (Z10, X11), (X10, V),
    (X11, X10), (Z11, Z01), (X00, X01),
    (V, P2), (P1, Z01),
    (V, X10), (Q1, Q2),
    (Z10, X10), (R1, R2),
    (S2, V), (Z10, S1),
    (V, W2), (T1, T2),
    (V, U2), (U1, Z00),
)

# Arcs in the second endpoint only (red), listed in the same circuit order.
RED = (
    (X01, X00), (W1, Z00), (Z10, W2), (X10, X11), (X11, V),
    (Z11, X10), (X00, Z01), (V, X01),
    (P1, P2), (V, Z01),
    (Q1, X10), (V, Q2),
    (R1, X10), (Z10, R2),
    (Z10, V), (S2, S1),
    (T1, W2), (V, T2),
    (U1, U2), (V, Z00),
)

# Shared padding bringing every vertex to in- and out-degree five in both
# endpoints; frozen output of tools/derive_fixture.py.
PADDING = (
    (2, 20), (2, 21), (2, 22), (2, 23), (3, 1), (3, 4),
    (3, 5), (3, 6), (4, 10), (4, 12), (4, 14), (4, 15),
    (4, 16), (5, 2), (5, 3), (5, 7), (5, 8), (6, 2),
    (6, 17), (6, 20), (6, 21), (6, 23), (7, 3), (7, 4),
    (7, 6), (7, 8), (7, 10), (8, 11), (8, 12), (8, 14),
    (8, 15), (8, 16), (9, 17), (9, 18), (9, 19), (9, 20),
    (9, 21), (10, 11), (10, 12), (10, 13), (10, 14), (11, 9),
    (11, 10), (11, 15), (11, 16), (12, 17), (12, 18), (12, 19),
    (12, 20), (13, 1), (13, 2), (13, 3), (13, 22), (13, 23),
    (14, 1), (14, 21), (14, 22), (14, 23), (15, 2), (15, 3),
    (15, 4), (15, 7), (16, 6), (16, 8), (16, 9), (16, 10),
    (17, 22), (17, 23), (18, 4), (18, 6), (18, 7), (18, 8),
    (18, 9), (19, 10), (19, 11), (19, 12), (19, 13), (19, 14),
    (20, 5), (20, 11), (20, 12), (20, 13), (21, 14), (21, 15),
    (21, 16), (21, 17), (22, 15), (22, 16), (22, 17), (22, 18),
    (22, 19), (23, 18), (23, 19), (23, 20), (23, 21),
)

# The pairing, one (blue, red) pair per matched slot.  Heads first.
HEAD_PAIRS = (
    ((V, X00), (X01, X00)),
    ((X01, Z00), (W1, Z00)), ((U1, Z00), (V, Z00)),
    ((W1, W2), (Z10, W2)), ((V, W2), (T1, W2)),
    ((Z10, X11), (X10, X11)),
    ((X10, V), (X11, V)), ((S2, V), (Z10, V)),
    ((X11, X10), (Z11, X10)), ((V, X10), (Q1, X10)), ((Z10, X10), (R1, X10)),
    ((Z11, Z01), (X00, Z01)), ((P1, Z01), (V, Z01)),
    ((X00, X01), (V, X01)),
    ((V, P2), (P1, P2)),
    ((Q1, Q2), (V, Q2)),
    ((R1, R2), (Z10, R2)),
    ((Z10, S1), (S2, S1)),
    ((T1, T2), (V, T2)),
    ((V, U2), (U1, U2)),
)

TAIL_PAIRS = (
    ((X01, Z00), (X01, X00)),
    ((W1, W2), (W1, Z00)),
    ((Z10, X11), (Z10, W2)), ((Z10, X10), (Z10, R2)), ((Z10, S1), (Z10, V)),
    ((X10, V), (X10, X11)),
    ((X11, X10), (X11, V)),
    ((Z11, Z01), (Z11, X10)),
    ((X00, X01), (X00, Z01)),
    ((V, X00), (V, X01)), ((V, P2), (V, Z01)), ((V, X10), (V, Q2)),
    ((V, W2), (V, T2)), ((V, U2), (V, Z00)),
    ((P1, Z01), (P1, P2)),
    ((Q1, Q2), (Q1, X10)),
    ((R1, R2), (R1, X10)),
    ((S2, V), (S2, S1)),
    ((T1, T2), (T1, W2)),
    ((U1, Z00), (U1, U2)),
)

# State index at which the path shows five interesting arcs and the
# colouring admits sixteen same-coloured pairs.
PEAK_STATE = 4


def fixture_digraphs() -> tuple[Digraph, Digraph]:
    """The two frozen endpoint digraphs."""
    G = Digraph(N, D, frozenset(BLUE) | frozenset(PADDING))
    G2 = Digraph(N, D, frozenset(RED) | frozenset(PADDING))
    return G, G2


def fixture_pairing() -> Pairing:
    return Pairing(head=HEAD_PAIRS, tail=TAIL_PAIRS)


def fixture_trace() -> PathTrace:
    G, G2 = fixture_digraphs()
    return build_canonical_path(G, G2, fixture_pairing())


def fixture_report() -> dict:
    """End-to-end run summarised as a JSON-friendly dict."""
    G, G2 = fixture_digraphs()
    psi = fixture_pairing()
    trace = build_canonical_path(G, G2, psi)
    steps = []
    for step in trace.steps:
        steps.append({
            "switch": repr(step.switch),
            "kind": step.step_kind,
            "segment": step.segment_index,
            "segmentKind": step.segment_kind,
            "phase": step.phase,
            "interestingArcs": [
                {"arc": list(arc), "label": label}
                for arc, label in sorted(step.interesting)],
        })
    mid = trace.states[PEAK_STATE]
    colouring = colour_by_state(G, G2, mid)
    report = bad_pairs(colouring, psi, mid)
    counts = {
        f"{v}:{orientation}:{colour}": c
        for (v, orientation, colour), c in sorted(report.counts.items())}
    return {
        "n": N,
        "d": D,
        "transitions": len(trace.steps),
        "steps": steps,
        "peakState": {
            "index": PEAK_STATE,
            "interestingArcs": steps[PEAK_STATE - 1]["interestingArcs"],
            "badPairs": report.total,
            "badPairCounts": counts,
            "withinBounds": report.within_bounds(),
        },
        "endpointsReached": trace.states[-1] == G2,
    }
