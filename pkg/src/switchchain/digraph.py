"""Core digraph values: switches, converse/complement operators, diffs, text I/O.

Vertices are 1-based integers, an arc is a (tail, head) tuple and a digraph is
an immutable arc set tagged with the vertex count n and the target degree d.
All operations here are pure; nothing mutates a value after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction  # noqa: F401  (re-exported convenience in callers)

Arc = tuple[int, int]


def _check_arc(a: Arc, n: int) -> None:
    t, h = a
    if not (1 <= t <= n and 1 <= h <= n):
        raise ValueError(f"arc {a} out of range for n={n}")
    if t == h:
        raise ValueError(f"loop arc {a} not allowed")


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on [n] with a declared target degree d."""

    n: int
    d: int
    arcs: frozenset[Arc]
    _sorted: tuple[Arc, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for a in self.arcs:
            _check_arc(a, self.n)
        object.__setattr__(self, "_sorted", tuple(sorted(self.arcs)))

    @property
    def sorted_arcs(self) -> tuple[Arc, ...]:
        return self._sorted

    def has_arc(self, a: Arc) -> bool:
        return a in self.arcs

    def out_degree(self, v: int) -> int:
        return sum(1 for (t, _) in self.arcs if t == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for (_, h) in self.arcs if h == v)

    def is_regular(self) -> bool:
        """True iff every vertex has in-degree d and out-degree d."""
        outs = {v: 0 for v in range(1, self.n + 1)}
        ins = {v: 0 for v in range(1, self.n + 1)}
        for t, h in self.arcs:
            outs[t] += 1
            ins[h] += 1
        return all(outs[v] == self.d and ins[v] == self.d for v in outs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __repr__(self):
        return f"Digraph(n={self.n}, d={self.d}, arcs={sorted(self.arcs)})"


def make_digraph(n: int, d: int, arcs) -> Digraph:
    return Digraph(n=n, d=d, arcs=frozenset(arcs))


@dataclass(frozen=True)
class Switch:
    """The move [i j k l]: delete arcs (i,j),(k,l), add (i,l),(k,j)."""

    i: int
    j: int
    k: int
    l: int

    def __post_init__(self):
        if len({self.i, self.j, self.k, self.l}) != 4:
            raise ValueError(f"switch vertices not distinct: {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def deleted(self) -> tuple[Arc, Arc]:
        return ((self.i, self.j), (self.k, self.l))

    def added(self) -> tuple[Arc, Arc]:
        return ((self.i, self.l), (self.k, self.j))

    def inverse(self) -> "Switch":
        """The switch undoing this one."""
        return Switch(self.i, self.l, self.k, self.j)

    def canonical(self) -> "Switch":
        """[ijkl] and [klij] are the same move; normalise for comparisons."""
        if (self.k, self.l) < (self.i, self.j):
            return Switch(self.k, self.l, self.i, self.j)
        return self

    def __repr__(self):
        return f"[{self.i} {self.j} {self.k} {self.l}]"


def switch_valid(G: Digraph, a1: Arc, a2: Arc) -> bool:
    """Figure-1 test: can the unordered arc pair {a1, a2} be switched in G?"""
    if a1 not in G.arcs or a2 not in G.arcs:
        raise ValueError(f"arcs {a1}, {a2} must both belong to the digraph")
    if a1 == a2:
        raise ValueError("need two distinct arcs")
    i, j = a1
    k, l = a2
    if len({i, j, k, l}) != 4:
        return False
    return (i, l) not in G.arcs and (k, j) not in G.arcs


def apply_switch(G: Digraph, s: Switch) -> Digraph:
    """Apply a switch, checking the preconditions (use switch_valid to probe)."""
    d1, d2 = s.deleted()
    a1, a2 = s.added()
    if d1 not in G.arcs or d2 not in G.arcs:
        raise ValueError(f"switch {s} deletes arcs not present")
    if a1 in G.arcs or a2 in G.arcs:
        raise ValueError(f"switch {s} adds arcs already present")
    return Digraph(n=G.n, d=G.d, arcs=(G.arcs - {d1, d2}) | {a1, a2})


def converse(G: Digraph) -> Digraph:
    """Reverse every arc."""
    return Digraph(n=G.n, d=G.d, arcs=frozenset((h, t) for (t, h) in G.arcs))


def complement(G: Digraph) -> Digraph:
    """Arc-set complement within all ordered pairs of distinct vertices."""
    full = {(t, h) for t in range(1, G.n + 1) for h in range(1, G.n + 1) if t != h}
    return Digraph(n=G.n, d=G.n - 1 - G.d, arcs=frozenset(full - G.arcs))


@dataclass(frozen=True)
class ColouredDiff:
    """Symmetric difference of two digraphs: blue = first-only, red = second-only."""

    n: int
    blue: frozenset[Arc]
    red: frozenset[Arc]

    def __post_init__(self):
        if self.blue & self.red:
            raise ValueError("blue and red arc sets overlap")

    @property
    def arcs(self) -> frozenset[Arc]:
        return self.blue | self.red

    def degree_profile(self):
        """Per-vertex (blue-in, red-in, blue-out, red-out) counts."""
        prof = {v: [0, 0, 0, 0] for v in range(1, self.n + 1)}
        for t, h in self.blue:
            prof[h][0] += 1
            prof[t][2] += 1
        for t, h in self.red:
            prof[h][1] += 1
            prof[t][3] += 1
        return prof

    def is_balanced(self) -> bool:
        """At every vertex, blue in = red in and blue out = red out."""
        return all(bi == ri and bo == ro
                   for bi, ri, bo, ro in self.degree_profile().values())


def sym_diff(G: Digraph, G2: Digraph) -> ColouredDiff:
    if G.n != G2.n or G.d != G2.d:
        raise ValueError("digraphs must share n and d")
    diff = ColouredDiff(n=G.n, blue=frozenset(G.arcs - G2.arcs),
                        red=frozenset(G2.arcs - G.arcs))
    # Regular minus regular is balanced; anything else is a caller bug.
    if not diff.is_balanced():
        raise ValueError("symmetric difference is not blue/red balanced")
    return diff


def zeta_arc(i: int, arc: Arc) -> Arc:
    """The arc itself when i is even, its reversal when i is odd."""
    return arc if i % 2 == 0 else (arc[1], arc[0])


def resolve_zeta_chi_switch(i: int, h: int, a: int, b: int, c: int, d: int) -> Switch:
    """Translate a switch written against the converse (i) and/or complement (h).

    A switch [a b c d] performed on the transformed digraph corresponds to one
    of four switches on the original digraph; exponents add mod 2.
    """
    i, h = i % 2, h % 2
    if (i, h) == (0, 0):
        return Switch(a, b, c, d)
    if (i, h) == (0, 1):
        return Switch(a, d, c, b)
    if (i, h) == (1, 0):
        return Switch(b, a, d, c)
    return Switch(b, c, d, a)


def circulant_generator(n: int, d: int) -> Digraph:
    """Deterministic regular start state: v points to v+1, ..., v+d (mod n)."""
    if not (1 <= d <= n - 1):
        raise ValueError(f"need 1 <= d <= n-1, got n={n} d={d}")
    arcs = set()
    for v in range(1, n + 1):
        for k in range(1, d + 1):
            w = (v - 1 + k) % n + 1
            arcs.add((v, w))
    return Digraph(n=n, d=d, arcs=frozenset(arcs))


def to_text(G: Digraph) -> str:
    """Serialize: header "n d", then one "tail head" line per arc, sorted."""
    lines = [f"{G.n} {G.d}"]
    lines.extend(f"{t} {h}" for t, h in G.sorted_arcs)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Digraph:
    """Parse the text format; arc order is not constrained on input."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty digraph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, d = int(head[0]), int(head[1])
    arcs = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad arc line: {ln!r}")
        a = (int(parts[0]), int(parts[1]))
        if a in arcs:
            raise ValueError(f"duplicate arc {a}")
        arcs.add(a)
    return Digraph(n=n, d=d, arcs=frozenset(arcs))
