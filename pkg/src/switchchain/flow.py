"""Multicommodity flow over the canonical paths, with exact load accounting.

Every ordered pair of distinct states exchanges 1/N^2 units of flow, split
evenly over the pairings of their symmetric difference: the path built for
pairing psi carries 1/(N^2 |Psi|).  Summing those weights over the paths
through a directed transition e gives f(e), and dividing by the uniform
transition probability Q(e) = 1/(N C(dn,2)) gives the load.  All flow
quantities are Fractions; floats appear only when a bound is compared
against an eigenvalue.

The module also counts bad pairs: with the symmetric difference H coloured
green (arc of the current state) and yellow (arc of neither endpoint count,
entry 1 in the mismatch encoding), a pairing is charged one bad pair for
every same-coloured pair of arcs it matches at a vertex.  Perfect
alternation gives zero; a worked example elsewhere realises the maximum of
sixteen.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .digraph import Arc, Digraph
from .enumeration import CapExceeded, StateSpace
from .pairings import ColouredDiff, Pairing, count_pairings, enumerate_pairings, sample_pairing
from .processing import build_canonical_path, sym_diff

PAIRING_CAP_ENV = "SWITCHCHAIN_PAIRING_CAP"
DEFAULT_PAIRING_CAP = 10 ** 7

MAX_BAD_PAIRS = 16
MAX_BAD_PAIRS_PER_SIDE_COLOUR = 2

ORIENTATIONS = ("head", "tail")
COLOURS = ("green", "yellow")


def pairing_cap() -> int:
    raw = os.environ.get(PAIRING_CAP_ENV)
    return int(raw) if raw else DEFAULT_PAIRING_CAP


@dataclass(frozen=True)
class SimplicityViolation:
    """A canonical path that revisits a state, with every revisit position."""

    start: Digraph
    end: Digraph
    pairing: Pairing
    state: Digraph
    positions: tuple[int, ...]


@dataclass(frozen=True)
class FlowAudit:
    """Per-transition flow f(e) and the derived load quantities."""

    n: int
    d: int
    num_states: int
    mode: str                # "full" or "sampled"
    edge_flow: dict
    pair_flow: dict
    max_path_length: int
    path_count: int
    total_pairings: int
    simplicity_violations: tuple[SimplicityViolation, ...]
    seed: int | None = None

    @property
    def edge_probability(self) -> Fraction:
        """Q(e) = pi(Z) P(Z,Z'), the same for every distinct-state transition."""
        return Fraction(1, self.num_states * comb(self.d * self.n, 2))

    @property
    def max_edge_flow(self) -> Fraction:
        if not self.edge_flow:
            return Fraction(0)
        return max(self.edge_flow.values())

    @property
    def max_load(self) -> Fraction:
        """rho(f) = max over transitions of f(e)/Q(e)."""
        return self.max_edge_flow / self.edge_probability

    def load(self, edge) -> Fraction:
        return self.edge_flow.get(edge, Fraction(0)) / self.edge_probability


def total_pairings(space: StateSpace) -> int:
    """Sum of |Psi(G,G')| over ordered pairs: the full-audit path budget."""
    total = 0
    for G, G2 in itertools.combinations(space.states, 2):
        total += 2 * count_pairings(sym_diff(G, G2))
    return total


def build_flow(space: StateSpace, mode: str = "auto", cap=None, seed: int = 0,
               samples_per_pair: int = 1) -> FlowAudit:
    """Route the canonical-path flow for every ordered pair of states.

    In full mode every pairing of every pair contributes its path; the audit
    then carries the exact flow.  If the pairing budget exceeds the cap
    (default 10^7, override via SWITCHCHAIN_PAIRING_CAP) the auto mode falls
    back to sampling pairings with a seeded RNG, which keeps every invariant
    check but replaces f(e) by an unbiased estimate; the report is labelled
    accordingly.  Asking for full mode over the cap raises CapExceeded.
    """
    if mode not in ("auto", "full", "sampled"):
        raise ValueError(f"unknown flow mode {mode!r}")
    budget = total_pairings(space)
    if cap is None:
        cap = pairing_cap()
    if mode == "auto":
        mode = "full" if budget <= cap else "sampled"
    elif mode == "full" and budget > cap:
        raise CapExceeded(
            f"full flow audit needs {budget} paths, over the cap of {cap}")

    N = len(space)
    rng = random.Random(seed) if mode == "sampled" else None
    edge_flow = defaultdict(Fraction)
    pair_flow = {}
    violations = []
    max_len = 0
    paths = 0
    for G, G2 in itertools.permutations(space.states, 2):
        H = sym_diff(G, G2)
        if mode == "full":
            weight = Fraction(1, N * N * count_pairings(H))
            pairings = enumerate_pairings(H)
        else:
            weight = Fraction(1, N * N * samples_per_pair)
            pairings = (sample_pairing(H, rng) for _ in range(samples_per_pair))
        sent = Fraction(0)
        for psi in pairings:
            trace = build_canonical_path(G, G2, psi)
            paths += 1
            max_len = max(max_len, len(trace))
            violations.extend(_revisits(G, G2, psi, trace.states))
            for edge in zip(trace.states, trace.states[1:]):
                edge_flow[edge] += weight
            sent += weight
        pair_flow[(G, G2)] = sent
    return FlowAudit(n=space.n, d=space.d, num_states=N, mode=mode,
                     edge_flow=dict(edge_flow), pair_flow=pair_flow,
                     max_path_length=max_len, path_count=paths,
                     total_pairings=budget,
                     simplicity_violations=tuple(violations),
                     seed=seed if mode == "sampled" else None)


def _revisits(G, G2, psi, states):
    positions = defaultdict(list)
    for idx, Z in enumerate(states):
        positions[Z].append(idx)
    return [SimplicityViolation(G, G2, psi, Z, tuple(idxs))
            for Z, idxs in positions.items() if len(idxs) > 1]


@dataclass(frozen=True)
class BoundCheck:
    """One inequality of the load argument, with both sides and the slack."""

    name: str
    lhs: float
    rhs: float
    ok: bool
    lhs_exact: Fraction | None = None
    rhs_exact: Fraction | None = None

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def ratio(self) -> float:
        """Fraction of the bound used; 1 means tight."""
        return self.lhs / self.rhs if self.rhs else float("inf")


@dataclass(frozen=True)
class BoundReport:
    checks: tuple[BoundCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.ok)

    @property
    def tightest(self) -> str:
        return max(self.checks, key=lambda c: c.ratio).name

    def __bool__(self):
        return self.ok


def verify_bounds(audit: FlowAudit, spectrum, n: int, d: int,
                  slack: float = 1e-8) -> BoundReport:
    """Check the four load inequalities against the exact spectrum.

    The two flow-side bounds compare exact rationals; the two relaxation
    bounds involve 1/(1 - lambda_1) and allow a small float slack.
    """
    if (audit.n, audit.d) != (n, d):
        raise ValueError(
            f"audit is for n={audit.n}, d={audit.d}, not n={n}, d={d}")
    N = audit.num_states
    checks = []

    fe = audit.max_edge_flow
    fe_bound = Fraction(100 * d ** 22 * n ** 6, N)
    checks.append(BoundCheck("max-edge-flow", float(fe), float(fe_bound),
                             fe <= fe_bound, fe, fe_bound))

    rho = audit.max_load
    rho_bound = Fraction(50 * d ** 24 * n ** 8)
    checks.append(BoundCheck("max-load", float(rho), float(rho_bound),
                             rho <= rho_bound, rho, rho_bound))

    relaxation = 1.0 / (1.0 - spectrum.lambda1)
    rho_len = rho * audit.max_path_length
    checks.append(BoundCheck("relaxation-vs-load", relaxation,
                             float(rho_len),
                             relaxation <= float(rho_len) + slack,
                             None, rho_len))

    poly = 50 * d ** 25 * n ** 9
    checks.append(BoundCheck("relaxation-vs-polynomial", relaxation,
                             float(poly), relaxation <= poly + slack,
                             None, Fraction(poly)))
    return BoundReport(tuple(checks))


def colour_by_state(G: Digraph, G2: Digraph, Z: Digraph) -> ColouredDiff:
    """Colour the symmetric difference of (G, G2) by membership in Z.

    Green arcs (blue slot) lie in Z, yellow arcs (red slot) do not; a yellow
    arc is exactly one with entry 1 in the mismatch encoding of Z.
    """
    H = sym_diff(G, G2).arcs
    return ColouredDiff(G.n, blue=frozenset(H & Z.arcs),
                        red=frozenset(H - Z.arcs))


@dataclass(frozen=True)
class BadPairReport:
    """Same-coloured pairs of a pairing, tallied per vertex and orientation."""

    state: Digraph | None
    pairing: Pairing
    counts: dict          # (vertex, orientation, colour) -> bad pairs
    total: int

    @property
    def bad_vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for v, _, _ in self.counts}))

    def within_bounds(self) -> bool:
        if self.total > MAX_BAD_PAIRS:
            return False
        if any(c > MAX_BAD_PAIRS_PER_SIDE_COLOUR for c in self.counts.values()):
            return False
        per_side = defaultdict(int)
        for (v, orientation, _), c in self.counts.items():
            per_side[(v, orientation)] += c
        return all(c <= 2 * MAX_BAD_PAIRS_PER_SIDE_COLOUR
                   for c in per_side.values())

    def __bool__(self):
        return self.within_bounds()


def bad_pairs(H: ColouredDiff, psi: Pairing, state: Digraph | None = None) -> BadPairReport:
    """Count the same-coloured pairs of psi under a green/yellow colouring.

    H must colour the pairing's own arc set: green in the blue slot, yellow
    in the red slot, as produced by colour_by_state.
    """
    counts = defaultdict(int)
    total = 0
    for orientation, pairs in (("head", psi.head), ("tail", psi.tail)):
        end = 1 if orientation == "head" else 0
        for a, b in pairs:
            if _colour(H, a) == _colour(H, b):
                counts[(a[end], orientation, _colour(H, a))] += 1
                total += 1
    return BadPairReport(state=state, pairing=psi, counts=dict(counts),
                         total=total)


def _colour(H: ColouredDiff, arc: Arc) -> str:
    if arc in H.blue:
        return "green"
    if arc in H.red:
        return "yellow"
    raise ValueError(f"arc {arc} is not coloured")


def count_consistent_pairings(H: ColouredDiff) -> int:
    """Pairings of H, same-coloured pairs allowed, within the bad-pair caps.

    Unlike the alternating pairings of a path family, these match the arcs
    at each vertex side freely; a pairing survives if no side carries more
    than two bad pairs of a colour and the total stays at most sixteen.
    Sides are independent, so the count convolves per-side tallies of
    bad-pair totals.
    """
    arcs_at = defaultdict(list)
    for t, h in H.arcs:
        arcs_at[(h, "head")].append((t, h))
        arcs_at[(t, "tail")].append((t, h))
    distribution = {0: 1}
    for side_arcs in arcs_at.values():
        tally = defaultdict(int)
        for matching in _matchings(side_arcs):
            greens = sum(1 for a, b in matching
                         if _colour(H, a) == _colour(H, b) == "green")
            yellows = sum(1 for a, b in matching
                          if _colour(H, a) == _colour(H, b) == "yellow")
            if (greens <= MAX_BAD_PAIRS_PER_SIDE_COLOUR
                    and yellows <= MAX_BAD_PAIRS_PER_SIDE_COLOUR):
                tally[greens + yellows] += 1
        merged = defaultdict(int)
        for have, ways in distribution.items():
            for bad, extra in tally.items():
                if have + bad <= MAX_BAD_PAIRS:
                    merged[have + bad] += ways * extra
        distribution = merged
    return sum(distribution.values())


def _matchings(items):
    """All ways to split an even-sized list into unordered pairs."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, partner)] + tail
