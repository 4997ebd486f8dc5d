"""Exhaustive state-space enumeration, the switch metagraph, and W-set machinery.

The state space Omega(n, d) is every simple d-regular digraph on [n]; at desk
scale it is enumerated outright so that every later quantity (transition
matrix, spectrum, flow) can be computed exactly.  The W-sets classify how a
vertex attaches to a directed 3-cycle and drive the useful-neighbour /
useful-arc search used by triangle processing.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from switchchain.digraph import Arc, Digraph, Switch, apply_switch, from_text, switch_valid, to_text

DEFAULT_STATE_CAP = 10**6
ENUM_CAP_ENV = "SWITCHCHAIN_ENUM_CAP"
MAX_ENUM_N = 7


class CapExceeded(Exception):
    """Raised instead of silently truncating when an enumeration guard trips."""


def state_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_STATE_CAP


@dataclass
class StateSpace:
    """All d-regular simple digraphs on [n] in canonical order, with an index."""

    n: int
    d: int
    states: list[Digraph]
    index: dict[Digraph, int]

    def __len__(self):
        return len(self.states)


def _row_patterns(n: int, d: int, v: int) -> list[tuple[int, ...]]:
    """All 0-1 rows of length n with d ones, zero at the diagonal position v."""
    cols = [c for c in range(1, n + 1) if c != v]
    patterns = []
    for chosen in itertools.combinations(cols, d):
        bits = tuple(1 if c in chosen else 0 for c in range(1, n + 1))
        patterns.append(bits)
    patterns.sort()
    return patterns


def enumerate_omega(n: int, d: int, cap: int | None = None) -> StateSpace:
    """Enumerate Omega(n, d) in row-major lexicographic order on matrix bits."""
    if not (1 <= d <= n - 1):
        raise ValueError(f"need 1 <= d <= n-1, got n={n} d={d}")
    if n > MAX_ENUM_N:
        raise CapExceeded(f"enumeration limited to n <= {MAX_ENUM_N}, got n={n}")
    cap = state_cap() if cap is None else cap

    patterns = {v: _row_patterns(n, d, v) for v in range(1, n + 1)}
    states: list[Digraph] = []
    rows: list[tuple[int, ...]] = []
    col_remaining = [d] * (n + 1)  # 1-based

    def feasible(v_next: int) -> bool:
        # Each column still needs col_remaining ones from rows v_next..n,
        # minus one slot if its own diagonal row is among them.
        future = n - v_next + 1
        for j in range(1, n + 1):
            capacity = future - (1 if v_next <= j <= n else 0)
            if col_remaining[j] > capacity:
                return False
        return True

    def recurse(v: int):
        if v > n:
            arcs = [(t, h + 1)
                    for t, bits in enumerate(rows, start=1)
                    for h, b in enumerate(bits) if b]
            states.append(Digraph(n=n, d=d, arcs=frozenset(arcs)))
            if len(states) > cap:
                raise CapExceeded(
                    f"|Omega({n},{d})| exceeds the cap of {cap}; "
                    f"raise {ENUM_CAP_ENV} to override")
            return
        for bits in patterns[v]:
            if any(b > col_remaining[j + 1] for j, b in enumerate(bits)):
                continue
            for j, b in enumerate(bits):
                col_remaining[j + 1] -= b
            if feasible(v + 1):
                rows.append(bits)
                recurse(v + 1)
                rows.pop()
            for j, b in enumerate(bits):
                col_remaining[j + 1] += b

    recurse(1)
    return StateSpace(n=n, d=d, states=states,
                      index={G: i for i, G in enumerate(states)})


def save_state_space(space: StateSpace, path: str) -> None:
    """Cache file: header "OMEGA n d count" then the digraph text blocks."""
    with open(path, "w", encoding="ascii") as f:
        f.write(f"OMEGA {space.n} {space.d} {len(space)}\n")
        for G in space.states:
            f.write(to_text(G))
            f.write("\n")


def load_state_space(path: str) -> StateSpace:
    with open(path, encoding="ascii") as f:
        header = f.readline().split()
        if len(header) != 4 or header[0] != "OMEGA":
            raise ValueError(f"bad cache header in {path}")
        n, d, count = int(header[1]), int(header[2]), int(header[3])
        blocks = f.read().split("\n\n")
    states = [from_text(block) for block in blocks if block.strip()]
    if len(states) != count:
        raise ValueError(f"cache {path} promises {count} states, has {len(states)}")
    for G in states:
        if G.n != n or G.d != d or not G.is_regular():
            raise ValueError(f"cache {path} contains a non-member digraph")
    return StateSpace(n=n, d=d, states=states,
                      index={G: i for i, G in enumerate(states)})


@dataclass
class MetaGraph:
    """Undirected switch-adjacency graph over a state space."""

    space: StateSpace
    neighbours: list[list[int]]   # sorted, without self
    move_counts: list[int]        # number of valid (ordered-pair-free) switch moves
    connected: bool
    diameter: int | None          # None when disconnected


def valid_moves(G: Digraph):
    """Yield (arc pair, resulting digraph) for every valid switch from G."""
    arcs = G.sorted_arcs
    for a1, a2 in itertools.combinations(arcs, 2):
        if len({a1[0], a1[1], a2[0], a2[1]}) != 4:
            continue
        if (a1[0], a2[1]) in G.arcs or (a2[0], a1[1]) in G.arcs:
            continue
        yield (a1, a2), apply_switch(G, Switch(a1[0], a1[1], a2[0], a2[1]))


def metagraph(space: StateSpace) -> MetaGraph:
    N = len(space)
    nbrs: list[set[int]] = [set() for _ in range(N)]
    move_counts = [0] * N
    for i, G in enumerate(space.states):
        for _, H in valid_moves(G):
            j = space.index[H]
            move_counts[i] += 1
            nbrs[i].add(j)

    rows, cols = [], []
    for i, s in enumerate(nbrs):
        for j in s:
            rows.append(i)
            cols.append(j)
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(N, N))
    ncomp, _ = connected_components(adj, directed=False)
    connected = ncomp == 1
    diameter = None
    if connected and N > 1:
        dist = shortest_path(adj, method="D", unweighted=True, directed=False)
        diameter = int(dist.max())
    elif connected:
        diameter = 0
    return MetaGraph(space=space, neighbours=[sorted(s) for s in nbrs],
                     move_counts=move_counts, connected=connected,
                     diameter=diameter)


@dataclass(frozen=True)
class WSets:
    """The four attachment classes of vertices relative to a vertex set U."""

    w00: frozenset[int]
    w01: frozenset[int]
    w10: frozenset[int]
    w11: frozenset[int]

    def get(self, i: int, j: int) -> frozenset[int]:
        return {(0, 0): self.w00, (0, 1): self.w01,
                (1, 0): self.w10, (1, 1): self.w11}[(i, j)]

    def union(self) -> frozenset[int]:
        return self.w00 | self.w01 | self.w10 | self.w11


def w_sets(G: Digraph, U) -> WSets:
    """W^(i,j)(U, G): x outside U with (x,u) in A(G) iff i=1 and (u,x) in A(G)
    iff j=1, for every u in U."""
    U = frozenset(U)
    if not U:
        raise ValueError("U must be nonempty")
    buckets = {(0, 0): set(), (0, 1): set(), (1, 0): set(), (1, 1): set()}
    for x in range(1, G.n + 1):
        if x in U:
            continue
        outs = {(x, u) in G.arcs for u in U}
        ins = {(u, x) in G.arcs for u in U}
        if len(outs) != 1 or len(ins) != 1:
            continue  # mixed attachment: in no W-set
        i = 1 if outs.pop() else 0
        j = 1 if ins.pop() else 0
        buckets[(i, j)].add(x)
    return WSets(w00=frozenset(buckets[(0, 0)]), w01=frozenset(buckets[(0, 1)]),
                 w10=frozenset(buckets[(1, 0)]), w11=frozenset(buckets[(1, 1)]))


def is_directed_3cycle(G: Digraph, t) -> bool:
    """True iff the induced digraph on the three vertices is a directed 3-cycle."""
    t = tuple(t)
    if len(set(t)) != 3:
        return False
    a, b, c = t
    induced = {(x, y) for x in t for y in t if x != y and (x, y) in G.arcs}
    return induced in ({(a, b), (b, c), (c, a)}, {(a, c), (c, b), (b, a)})


def find_useful_neighbour(Z: Digraph, t) -> tuple[int, int, int] | None:
    """Minimum useful neighbour x of the 3-cycle t with its (i, h) class.

    (0,0): x is an out-neighbour of exactly one triangle vertex; (0,1) of
    exactly two; (1,0)/(1,1) the same for in-neighbour.  First match wins.
    """
    t = tuple(t)
    if not is_directed_3cycle(Z, t):
        raise ValueError(f"{t} does not induce a directed 3-cycle")
    covered = w_sets(Z, t).union()
    for x in range(1, Z.n + 1):
        if x in t or x in covered:
            continue
        out_nb = sum(1 for u in t if (u, x) in Z.arcs)   # x is out-neighbour of u
        in_nb = sum(1 for u in t if (x, u) in Z.arcs)    # x is in-neighbour of u
        for (i, h), count, target in (((0, 0), out_nb, 1), ((0, 1), out_nb, 2),
                                      ((1, 0), in_nb, 1), ((1, 1), in_nb, 2)):
            if count == target:
                return (x, i, h)
        raise AssertionError(f"useful neighbour {x} matched no (i,h) class")
    return None


def find_useful_arc(Z: Digraph, t) -> tuple[Arc, str]:
    """Lexicographically least useful arc for the 3-cycle t, tagged U1 or U2.

    Only called when no useful neighbour exists; by the connectivity machinery
    an arc must then exist, so coming up empty is an internal error.
    """
    t = tuple(t)
    if not is_directed_3cycle(Z, t):
        raise ValueError(f"{t} does not induce a directed 3-cycle")
    ws = w_sets(Z, t)
    u1_tails = ws.w00 | ws.w01
    u1_heads = ws.w00 | ws.w10
    u2_tails = ws.w10 | ws.w11
    u2_heads = ws.w01 | ws.w11
    best: tuple[Arc, str] | None = None
    for x in range(1, Z.n + 1):
        for y in range(1, Z.n + 1):
            if x == y:
                continue
            if (x, y) in Z.arcs:
                ok = x in u1_tails and y in u1_heads
                tag = "U1"
            else:
                ok = x in u2_tails and y in u2_heads
                tag = "U2"
            if ok and (best is None or (x, y) < best[0]):
                best = ((x, y), tag)
    if best is None:
        raise RuntimeError(f"no useful neighbour and no useful arc for 3-cycle {t}")
    return best
