"""Derives the frozen padding for the worked-example fixture.

The fixture's symmetric difference H (forty arcs on twenty-three vertices,
half from each endpoint graph) and its pairing are fixed data, but they only
determine the two endpoint digraphs up to a shared padding: every arc in
neither colour class must appear in both endpoints or in neither.  This
script finds one such padding by backtracking and prints it as a Python
literal, which is then frozen into the package.  Run once; it is
deterministic, so reruns reproduce the committed arcs.

The smallest feasible degree is five because one vertex already carries five
out-arcs of a single colour, and a padding exists at five, as the search
shows.  The padding must avoid all of H (an arc of either colour lies in
exactly one endpoint, so it cannot be shared) and loops; antiparallel pairs
are fine.
"""

import itertools
from collections import defaultdict

N = 23
D = 5

# Vertex numbering.  1 is the doubled vertex of the large two-circuit; the
# ordering is chosen so that the circuit decomposition of H starts with the
# large circuit and anchors its processing at vertex 1 (vertex 1 must be the
# tail of the lexicographically least arc, and 2 must precede 3 so that the
# canonical relabelling keeps the eccentric corner at the far end).
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

# Arcs of H present in the first endpoint only.
BLUE = [
    (V, X00), (X01, Z00), (W1, W2), (Z10, X11), (X10, V),
    (X11, X10), (Z11, Z01), (X00, X01),
    (V, P2), (P1, Z01),
    (V, X10), (Q1, Q2),
    (Z10, X10), (R1, R2),
    (S2, V), (Z10, S1),
    (V, W2), (T1, T2),
    (V, U2), (U1, Z00),
]

# Arcs of H present in the second endpoint only.
RED = [
    (X01, X00), (W1, Z00), (Z10, W2), (X10, X11), (X11, V),
    (Z11, X10), (X00, Z01), (V, X01),
    (P1, P2), (V, Z01),
    (Q1, X10), (V, Q2),
    (R1, X10), (Z10, R2),
    (Z10, V), (S2, S1),
    (T1, W2), (V, T2),
    (U1, U2), (V, Z00),
]


def degree_tables(arcs):
    outs = defaultdict(int)
    ins = defaultdict(int)
    for t, h in arcs:
        outs[t] += 1
        ins[h] += 1
    return outs, ins


def find_padding(out_need, in_need, forbidden):
    """Backtracking search for an arc set meeting both degree targets.

    Tails are filled one at a time, most demanding first; candidate head
    sets are tried greedily, largest remaining in-need first.  The order is
    fully deterministic.
    """
    tails = sorted((t for t in range(1, N + 1) if out_need[t]),
                   key=lambda t: (-out_need[t], t))
    chosen = []

    def feasible(idx, in_left):
        remaining = tails[idx:]
        for h in range(1, N + 1):
            if in_left[h] == 0:
                continue
            sources = sum(1 for t in remaining
                          if t != h and (t, h) not in forbidden)
            if sources < in_left[h]:
                return False
        return True

    def go(idx, in_left):
        if idx == len(tails):
            return all(v == 0 for v in in_left.values())
        t = tails[idx]
        cands = sorted((h for h in range(1, N + 1)
                        if h != t and in_left[h] > 0
                        and (t, h) not in forbidden),
                       key=lambda h: (-in_left[h], h))
        for combo in itertools.combinations(cands, out_need[t]):
            for h in combo:
                in_left[h] -= 1
            chosen.append([(t, h) for h in combo])
            if feasible(idx + 1, in_left) and go(idx + 1, in_left):
                return True
            chosen.pop()
            for h in combo:
                in_left[h] += 1
        return False

    if not go(0, dict(in_need)):
        raise RuntimeError("no padding exists at this degree")
    return sorted(a for block in chosen for a in block)


def check_regular(arcs, label):
    outs, ins = degree_tables(arcs)
    assert len(arcs) == len(set(arcs)), f"{label}: repeated arc"
    assert all(t != h for t, h in arcs), f"{label}: loop"
    for v in range(1, N + 1):
        assert outs[v] == D and ins[v] == D, f"{label}: vertex {v} degree"


def main():
    blue_out, blue_in = degree_tables(BLUE)
    red_out, red_in = degree_tables(RED)
    for v in range(1, N + 1):
        assert blue_out[v] == red_out[v] and blue_in[v] == red_in[v], (
            f"vertex {v}: colour classes do not balance")
    top = max(max(blue_out.values()), max(blue_in.values()))
    print(f"peak one-colour degree {top}, so the degree must be >= {top}")
    assert top == D

    out_need = {v: D - blue_out[v] for v in range(1, N + 1)}
    in_need = {v: D - blue_in[v] for v in range(1, N + 1)}
    total = sum(out_need.values())
    assert total == sum(in_need.values())
    print(f"padding needs {total} arcs")

    forbidden = set(BLUE) | set(RED)
    padding = find_padding(out_need, in_need, forbidden)
    assert not (set(padding) & forbidden)

    check_regular(BLUE + padding, "first endpoint")
    check_regular(RED + padding, "second endpoint")
    print("both endpoints are 5-regular and simple")

    print("PADDING = (")
    for start in range(0, len(padding), 6):
        row = padding[start:start + 6]
        print("    " + " ".join(f"{a}," for a in row))
    print(")")


if __name__ == "__main__":
    main()
