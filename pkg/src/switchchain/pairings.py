"""Pairings of a symmetric difference and its decomposition into circuits.

For states G, G' the coloured difference H has blue arcs (in G only) and red
arcs (in G' only).  A pairing matches, at every vertex, the blue in-arcs with
the red in-arcs and the blue out-arcs with the red out-arcs.  Following
partners alternately at heads and tails splits H into closed alternating
circuits; those circuits are what the path machinery walks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import factorial, prod

from switchchain.digraph import Arc, ColouredDiff


@dataclass(frozen=True)
class Pairing:
    """Head and tail partner maps between blue and red arcs (both directions)."""

    head: tuple[tuple[Arc, Arc], ...]   # (blue, red) pairs sharing a head
    tail: tuple[tuple[Arc, Arc], ...]   # (blue, red) pairs sharing a tail

    def head_partner(self, arc: Arc) -> Arc:
        for b, r in self.head:
            if arc == b:
                return r
            if arc == r:
                return b
        raise KeyError(f"{arc} has no head partner")

    def tail_partner(self, arc: Arc) -> Arc:
        for b, r in self.tail:
            if arc == b:
                return r
            if arc == r:
                return b
        raise KeyError(f"{arc} has no tail partner")

    def uncoloured_key(self) -> frozenset:
        """The pairing as an unordered matching, forgetting arc colours."""
        return frozenset(
            (side, frozenset(pair))
            for side, pairs in (("head", self.head), ("tail", self.tail))
            for pair in pairs)


def _arcs_by(H: ColouredDiff, colour: str, end: int):
    arcs = H.blue if colour == "blue" else H.red
    by: dict[int, list[Arc]] = {}
    for a in sorted(arcs):
        by.setdefault(a[end], []).append(a)
    return by


def degree_counts(H: ColouredDiff) -> tuple[dict[int, int], dict[int, int]]:
    """theta_v (in-degree pairs) and phi_v (out-degree pairs) per vertex."""
    blue_in = _arcs_by(H, "blue", 1)
    blue_out = _arcs_by(H, "blue", 0)
    red_in = _arcs_by(H, "red", 1)
    red_out = _arcs_by(H, "red", 0)
    theta, phi = {}, {}
    for v in range(1, H.n + 1):
        bi, ri = len(blue_in.get(v, [])), len(red_in.get(v, []))
        bo, ro = len(blue_out.get(v, [])), len(red_out.get(v, []))
        if bi != ri or bo != ro:
            raise ValueError(f"difference unbalanced at vertex {v}")
        theta[v] = bi
        phi[v] = bo
    return theta, phi


def count_pairings(H: ColouredDiff) -> int:
    theta, phi = degree_counts(H)
    return prod(factorial(theta[v]) * factorial(phi[v]) for v in theta)


def enumerate_pairings(H: ColouredDiff):
    """All pairings, lexicographic in the per-vertex permutation choices."""
    blue_in = _arcs_by(H, "blue", 1)
    blue_out = _arcs_by(H, "blue", 0)
    red_in = _arcs_by(H, "red", 1)
    red_out = _arcs_by(H, "red", 0)
    verts = sorted(set(blue_in) | set(blue_out))
    slots = []
    for v in verts:
        if blue_in.get(v):
            slots.append(("head", blue_in[v], red_in[v]))
        if blue_out.get(v):
            slots.append(("tail", blue_out[v], red_out[v]))
    choice_lists = [
        [list(zip(blues, perm)) for perm in itertools.permutations(reds)]
        for _, blues, reds in slots]
    for combo in itertools.product(*choice_lists):
        head, tail = [], []
        for (side, _, _), pairs in zip(slots, combo):
            (head if side == "head" else tail).extend(pairs)
        yield Pairing(head=tuple(head), tail=tuple(tail))


def sample_pairing(H: ColouredDiff, rng: random.Random) -> Pairing:
    blue_in = _arcs_by(H, "blue", 1)
    blue_out = _arcs_by(H, "blue", 0)
    red_in = _arcs_by(H, "red", 1)
    red_out = _arcs_by(H, "red", 0)
    head, tail = [], []
    for v in sorted(set(blue_in) | set(blue_out)):
        if blue_in.get(v):
            reds = red_in[v][:]
            rng.shuffle(reds)
            head.extend(zip(blue_in[v], reds))
        if blue_out.get(v):
            reds = red_out[v][:]
            rng.shuffle(reds)
            tail.extend(zip(blue_out[v], reds))
    return Pairing(head=tuple(head), tail=tuple(tail))


@dataclass(frozen=True)
class Circuit:
    """A closed alternating circuit as its vertex string plus a direction.

    With direction 0 the arcs run from even positions to odd positions:
    (w0, w1), then (w2, w1), (w2, w3), (w4, w3), ... closing with (w0, w_last).
    Direction 1 means every arc is reversed.
    """

    vertices: tuple[int, ...]
    direction: int = 0

    def __len__(self):
        return len(self.vertices)

    def arcs(self) -> list[Arc]:
        w = self.vertices
        k = len(w) // 2
        out = []
        for t in range(k):
            out.append((w[2 * t], w[2 * t + 1]))
            out.append((w[(2 * t + 2) % len(w)], w[2 * t + 1]))
        if self.direction % 2 == 1:
            out = [(b, a) for a, b in out]
        return out


def decompose_circuits(H: ColouredDiff, psi: Pairing) -> list[Circuit]:
    """Split H into alternating circuits by following psi from least arcs.

    Each circuit starts at the lexicographically least unused arc and extends
    by alternating head partners and tail partners until the walk closes.
    """
    unused = set(H.blue) | set(H.red)
    circuits = []
    while unused:
        a0 = min(unused)
        w0, w1 = a0
        seq = [w0, w1]
        used = [a0]
        f = a0
        while True:
            g = psi.head_partner(f)
            used.append(g)
            if g[0] == w0 and psi.tail_partner(g) == a0:
                break
            seq.append(g[0])
            h = psi.tail_partner(g)
            used.append(h)
            seq.append(h[1])
            f = h
        for a in used:
            if a not in unused:
                raise AssertionError(f"arc {a} reused while tracing a circuit")
            unused.discard(a)
        circuits.append(Circuit(vertices=tuple(seq), direction=0))
    return circuits
