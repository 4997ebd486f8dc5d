"""Mismatch encodings between a path state and its endpoint digraph pair.

For d-regular digraphs G, G2 and a state Z met while walking from G to
G2, the matrix L = G + G2 - Z records how far Z strays from the pair:
entries live in {-1, 0, 1, 2} and every row and column sums to d.  An
entry of -1 marks an arc of Z that neither endpoint has, an entry of 2
an arc of both endpoints that Z is missing; either way the arc is bad.
States on the paths built by the processing module keep their bad arcs
inside the shape catalogue, and that structure is strong enough to undo
the damage: at most three switches turn any valid encoding back into a
plain digraph.  This module houses the encoding type, the validity
check against a state Z, the canonical three-switch repair, the count
of encodings reachable from a digraph by reverse repair switches, and a
brute-force preimage count for transitions.
"""

from __future__ import annotations

from dataclasses import dataclass

from switchchain.digraph import Arc, Digraph, sym_diff, zeta_arc
from switchchain.enumeration import enumerate_omega
from switchchain.pairings import enumerate_pairings
from switchchain.zoo import matches_catalogue

ENTRY_RANGE = (-1, 0, 1, 2)
BAD_LABELS = (-1, 2)

# Repair switch kinds, in the order the canonical repair performs them.
MIXED_SWITCH = "(-1,2)"
TWO_SWITCH = "2"
MINUS_SWITCH = "-1"

# Reverse switches run in the opposite order, so each kind gets a stage
# number and a sequence of reverse switches must be non-decreasing in it.
REVERSE_STAGE = {MINUS_SWITCH: 0, TWO_SWITCH: 1, MIXED_SWITCH: 2}


@dataclass(frozen=True)
class Encoding:
    """An n-by-n integer matrix with zero diagonal and row and column sums d."""

    n: int
    d: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError("encoding matrix is not n by n")
        for a in range(self.n):
            if self.rows[a][a] != 0:
                raise ValueError(f"nonzero diagonal entry at vertex {a + 1}")
            for b in range(self.n):
                if self.rows[a][b] not in ENTRY_RANGE:
                    raise ValueError(
                        f"entry {self.rows[a][b]} at ({a + 1},{b + 1}) out of range")
        for a in range(self.n):
            if sum(self.rows[a]) != self.d:
                raise ValueError(f"row {a + 1} does not sum to d={self.d}")
        for b in range(self.n):
            if sum(r[b] for r in self.rows) != self.d:
                raise ValueError(f"column {b + 1} does not sum to d={self.d}")

    def label(self, t: int, h: int) -> int:
        return self.rows[t - 1][h - 1]

    def zlabel(self, i: int, t: int, h: int) -> int:
        """Entry of the matrix itself (i even) or of its transpose (i odd)."""
        return self.label(t, h) if i % 2 == 0 else self.label(h, t)

    def bad_arcs(self) -> tuple[tuple[Arc, int], ...]:
        """Sorted ((tail, head), label) pairs over entries equal to -1 or 2."""
        out = []
        for a in range(self.n):
            for b in range(self.n):
                if self.rows[a][b] in BAD_LABELS:
                    out.append(((a + 1, b + 1), self.rows[a][b]))
        return tuple(out)

    def bad_positions(self) -> frozenset[Arc]:
        return frozenset(arc for arc, _ in self.bad_arcs())

    def is_digraph(self) -> bool:
        return all(e in (0, 1) for row in self.rows for e in row)

    def as_digraph(self) -> Digraph:
        if not self.is_digraph():
            raise ValueError("encoding still has bad arcs")
        arcs = {(a + 1, b + 1)
                for a in range(self.n) for b in range(self.n)
                if self.rows[a][b] == 1}
        return Digraph(n=self.n, d=self.d, arcs=frozenset(arcs))


def encoding_from_digraph(G: Digraph) -> Encoding:
    rows = [[0] * G.n for _ in range(G.n)]
    for t, h in G.arcs:
        rows[t - 1][h - 1] = 1
    return Encoding(n=G.n, d=G.d, rows=tuple(tuple(r) for r in rows))


def encoding_of(G: Digraph, G2: Digraph, Z: Digraph) -> Encoding:
    """The matrix L with L + Z = G + G2, entrywise."""
    if not (G.n == G2.n == Z.n and G.d == G2.d == Z.d):
        raise ValueError("digraphs must share n and d")
    rows = [[0] * G.n for _ in range(G.n)]
    for D, sign in ((G, 1), (G2, 1), (Z, -1)):
        for t, h in D.arcs:
            rows[t - 1][h - 1] += sign
    return Encoding(n=G.n, d=G.d, rows=tuple(tuple(r) for r in rows))


def encoding_to_text(L: Encoding) -> str:
    lines = [f"{L.n} {L.d}"]
    lines.extend(" ".join(str(e) for e in row) for row in L.rows)
    return "\n".join(lines) + "\n"


def encoding_from_text(text: str) -> Encoding:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty encoding text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must be two integers: n d")
    n, d = int(head[0]), int(head[1])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = tuple(tuple(int(tok) for tok in ln.split()) for ln in lines[1:])
    return Encoding(n=n, d=d, rows=rows)


def switch_encoding(L: Encoding, x: int, y: int, w: int, z: int) -> Encoding:
    """Apply [x y w z]: lower the (x,y) and (w,z) entries, raise (x,z) and (w,y)."""
    if len({x, y, w, z}) != 4:
        raise ValueError(f"switch vertices not distinct: [{x} {y} {w} {z}]")
    if L.label(x, y) <= -1 or L.label(w, z) <= -1:
        raise ValueError("switch would push an entry below -1")
    if L.label(x, z) >= 2 or L.label(w, y) >= 2:
        raise ValueError("switch would push an entry above 2")
    rows = [list(r) for r in L.rows]
    rows[x - 1][y - 1] -= 1
    rows[w - 1][z - 1] -= 1
    rows[x - 1][z - 1] += 1
    rows[w - 1][y - 1] += 1
    return Encoding(n=L.n, d=L.d, rows=tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class HandyTuple:
    """(i, alpha, beta, gamma): a 2 on (alpha,beta) and a -1 on (alpha,gamma),
    both read through zeta^i.  The tuple is very handy when at most one of
    beta, gamma collects bad arcs of both labels at its zeta^i head."""

    i: int
    alpha: int
    beta: int
    gamma: int
    very_handy: bool

    def key(self) -> tuple[int, int, int, int]:
        return (self.i, self.alpha, self.beta, self.gamma)

    def arcs(self) -> frozenset[Arc]:
        """Matrix positions of the tuple's two bad entries."""
        return frozenset({zeta_arc(self.i, (self.alpha, self.beta)),
                          zeta_arc(self.i, (self.alpha, self.gamma))})


def _zhead_bad_labels(L: Encoding, i: int, x: int) -> set[int]:
    """Labels of bad arcs whose head, read through zeta^i, is x."""
    return {L.zlabel(i, v, x) for v in range(1, L.n + 1)
            if v != x and L.zlabel(i, v, x) in BAD_LABELS}


def _zhead_bad_count(L: Encoding, i: int, x: int, label=None) -> int:
    return sum(1 for v in range(1, L.n + 1)
               if v != x and L.zlabel(i, v, x) in BAD_LABELS
               and (label is None or L.zlabel(i, v, x) == label))


def _ztail_bad_count(L: Encoding, i: int, x: int, label=None) -> int:
    return sum(1 for v in range(1, L.n + 1)
               if v != x and L.zlabel(i, x, v) in BAD_LABELS
               and (label is None or L.zlabel(i, x, v) == label))


def handy_tuples(L: Encoding) -> tuple[HandyTuple, ...]:
    """All handy tuples of L, sorted on (i, alpha, beta, gamma)."""
    out = []
    for i in (0, 1):
        for alpha in range(1, L.n + 1):
            betas = [b for b in range(1, L.n + 1)
                     if b != alpha and L.zlabel(i, alpha, b) == 2]
            gammas = [c for c in range(1, L.n + 1)
                      if c != alpha and L.zlabel(i, alpha, c) == -1]
            for beta in betas:
                for gamma in gammas:
                    mixed = sum(len(_zhead_bad_labels(L, i, v)) == 2
                                for v in (beta, gamma))
                    out.append(HandyTuple(i, alpha, beta, gamma, mixed <= 1))
    return tuple(sorted(out, key=HandyTuple.key))


def _independent_pair_exists(tuples) -> bool:
    """A very handy tuple plus a handy one, distinct centres, disjoint arcs."""
    for t1 in tuples:
        if not t1.very_handy:
            continue
        for t2 in tuples:
            if t2.alpha != t1.alpha and not (t1.arcs() & t2.arcs()):
                return True
    return False


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of checking an encoding against a state Z; truthy when clean."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _one_copy_arcs(L: Encoding, Z: Digraph) -> frozenset[Arc]:
    """Positions where L + Z equals one; for a path encoding this is the
    symmetric difference of the two endpoints."""
    out = set()
    for a in range(1, L.n + 1):
        for b in range(1, L.n + 1):
            if a != b and L.label(a, b) + (1 if (a, b) in Z.arcs else 0) == 1:
                out.add((a, b))
    return frozenset(out)


def is_z_valid(L: Encoding, Z: Digraph) -> ValidityReport:
    """Check the entry range of L + Z and the structure of the bad arcs.

    Beyond the range check, bad arcs must fit the shape catalogue, handy
    tuples must come with a very handy one, four or five bad arcs force
    specific tuple configurations, and degree one and two carry extra
    restrictions tying label-2 bad arcs to the rest of the encoding.
    """
    if L.n != Z.n or L.d != Z.d:
        raise ValueError("encoding and state must share n and d")
    violations = []
    for a in range(1, L.n + 1):
        for b in range(1, L.n + 1):
            if a == b:
                continue
            s = L.label(a, b) + (1 if (a, b) in Z.arcs else 0)
            if s not in (0, 1, 2):
                violations.append(f"entry-range: (L+Z)({a},{b}) = {s}")
    bad = L.bad_arcs()
    if not matches_catalogue(bad):
        violations.append(
            "bad-arc-shape: bad arcs do not fit the catalogue: "
            + str(list(bad)))
    tuples = handy_tuples(L)
    if tuples and not any(t.very_handy for t in tuples):
        violations.append("very-handy: handy tuples exist but none is very handy")
    if len(bad) == 5 and not _independent_pair_exists(tuples):
        violations.append(
            "five-bad-arcs: no arc-disjoint very-handy/handy pair "
            "with distinct centres")
    if len(bad) == 4 and not tuples:
        violations.append("four-bad-arcs: no handy tuple")
    twos = [arc for arc, lab in bad if lab == 2]
    if L.d == 1:
        one_copy = _one_copy_arcs(L, Z)
        for t, h in sorted(one_copy):
            for a, b in twos:
                if {t, h} & {a, b}:
                    violations.append(
                        f"degree-one: one-copy arc ({t},{h}) touches the "
                        f"label-2 arc ({a},{b})")
        if twos and len(bad) >= 2:
            if not (len(bad) <= 3 and len(twos) == 1 and tuples):
                violations.append(
                    "degree-one: a label-2 arc in company needs a handy tuple "
                    "and at most three bad arcs with a single 2")
        if len(bad) == 3 and len(twos) == 1:
            centres = {t.alpha for t in tuples}
            if not set(twos[0]) <= centres:
                violations.append(
                    "degree-one: both endpoints of the label-2 arc must "
                    "centre handy tuples")
    if L.d == 2:
        touched = {v for arc in _one_copy_arcs(L, Z) for v in arc}
        for x in sorted(touched):
            if sum(1 for a, b in twos if b == x) > 1:
                violations.append(f"degree-two: vertex {x} heads two label-2 arcs")
            if sum(1 for a, b in twos if a == x) > 1:
                violations.append(f"degree-two: vertex {x} tails two label-2 arcs")
    return ValidityReport(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class RepairStep:
    """One canonical repair switch, recorded through zeta^i.

    Applying the switch lowers the zeta^i entries at (alpha,beta) and
    (delta,gamma) and raises those at (alpha,gamma) and (delta,beta).
    """

    kind: str
    i: int
    alpha: int
    beta: int
    gamma: int
    delta: int

    def matrix_switch(self) -> tuple[int, int, int, int]:
        """The [x y w z] arguments for switch_encoding on the raw matrix."""
        if self.i % 2 == 0:
            return (self.alpha, self.beta, self.delta, self.gamma)
        return (self.beta, self.alpha, self.gamma, self.delta)


def _mixed_switch_tuple(L: Encoding):
    """Lex-least (i,alpha,beta,gamma,delta) for a (-1,2)-switch, or None.

    The tuple must be very handy; when some very handy tuple has a handy
    partner with a different centre and disjoint arcs, only such tuples
    are eligible, which keeps the partner intact for the next round.
    """
    tuples = handy_tuples(L)
    if not tuples:
        return None
    very = [t for t in tuples if t.very_handy]
    assert very, "handy tuples exist but none is very handy"
    preferred = [t1 for t1 in very
                 if any(t2.alpha != t1.alpha and not (t1.arcs() & t2.arcs())
                        for t2 in tuples)]
    pool = preferred or very
    best = None
    for t in pool:
        for delta in range(1, L.n + 1):
            if delta in (t.alpha, t.beta, t.gamma):
                continue
            if (L.zlabel(t.i, delta, t.gamma) == 1
                    and L.zlabel(t.i, delta, t.beta) == 0):
                cand = (t.i, t.alpha, t.beta, t.gamma, delta)
                if best is None or cand < best:
                    best = cand
    assert best is not None, "no completing vertex for the (-1,2)-switch"
    return best


def _two_switch_tuple(L: Encoding):
    """Lex-least (i,alpha,beta,gamma,delta) removing a lone label-2 arc."""
    best = None
    for i in (0, 1):
        for alpha in range(1, L.n + 1):
            if _ztail_bad_count(L, i, alpha) != 1:
                continue
            for beta in range(1, L.n + 1):
                if beta == alpha or L.zlabel(i, alpha, beta) != 2:
                    continue
                for gamma in range(1, L.n + 1):
                    if gamma in (alpha, beta):
                        continue
                    if L.zlabel(i, alpha, gamma) != 0:
                        continue
                    if _zhead_bad_count(L, i, gamma, 2):
                        continue
                    for delta in range(1, L.n + 1):
                        if delta in (alpha, beta, gamma):
                            continue
                        if (L.zlabel(i, delta, beta) == 0
                                and L.zlabel(i, delta, gamma) == 1):
                            cand = (i, alpha, beta, gamma, delta)
                            if best is None or cand < best:
                                best = cand
    assert best is not None, "no completing vertices for the 2-switch"
    return best


def _minus_switch_tuple(L: Encoding):
    """Lex-least (i,alpha,beta,gamma,delta) removing a label -1 arc.

    When some vertex tails two -1 arcs in one orientation, alpha must be
    such a vertex; the second -1 arc then keeps its exit open later.
    """
    pairs = [(i, a, c)
             for i in (0, 1)
             for a in range(1, L.n + 1)
             for c in range(1, L.n + 1)
             if a != c and L.zlabel(i, a, c) == -1]
    preferred = [(i, a, c) for (i, a, c) in pairs
                 if _ztail_bad_count(L, i, a, -1) >= 2]
    pool = preferred or pairs
    best = None
    for i, alpha, gamma in pool:
        for beta in range(1, L.n + 1):
            if beta in (alpha, gamma) or L.zlabel(i, alpha, beta) != 1:
                continue
            if _zhead_bad_count(L, i, beta):
                continue
            for delta in range(1, L.n + 1):
                if delta in (alpha, beta, gamma):
                    continue
                if (L.zlabel(i, delta, beta) == 0
                        and L.zlabel(i, delta, gamma) == 1):
                    cand = (i, alpha, beta, gamma, delta)
                    if best is None or cand < best:
                        best = cand
    assert best is not None, "no completing vertices for the (-1)-switch"
    return best


def repair(L: Encoding, Z: Digraph) -> tuple[RepairStep, ...]:
    """The canonical switch sequence removing every bad arc, at most three long.

    All (-1,2)-switches come first, then 2-switches, then (-1)-switches,
    ties broken lexicographically on (i, alpha, beta, gamma, delta).  Each
    step strictly shrinks the bad-arc set and preserves Z-validity.
    """
    report = is_z_valid(L, Z)
    if not report:
        raise ValueError("repair requires a Z-valid encoding: "
                         + "; ".join(report.violations))
    steps = []
    cur = L
    while not cur.is_digraph():
        assert len(steps) < 3, "repair exceeded three switches"
        tup = _mixed_switch_tuple(cur)
        if tup is not None:
            kind = MIXED_SWITCH
        elif any(lab == 2 for _, lab in cur.bad_arcs()):
            kind, tup = TWO_SWITCH, _two_switch_tuple(cur)
        else:
            kind, tup = MINUS_SWITCH, _minus_switch_tuple(cur)
        step = RepairStep(kind, *tup)
        nxt = switch_encoding(cur, *step.matrix_switch())
        drop = 2 if kind == MIXED_SWITCH else 1
        assert len(nxt.bad_arcs()) == len(cur.bad_arcs()) - drop, (
            "repair switch did not remove the expected bad arcs")
        assert nxt.bad_positions() < cur.bad_positions(), (
            "repair switch created a new bad arc")
        assert is_z_valid(nxt, Z), "repair left a Z-invalid encoding"
        steps.append(step)
        cur = nxt
    return tuple(steps)


def repaired_digraph(L: Encoding, Z: Digraph) -> Digraph:
    """The digraph the canonical repair turns L into."""
    cur = L
    for step in repair(L, Z):
        cur = switch_encoding(cur, *step.matrix_switch())
    return cur.as_digraph()


def reverse_step_bound(kind: str, n: int, d: int) -> int:
    """Cap on how many reverse switches of one kind any encoding offers."""
    if kind == MINUS_SWITCH:
        return 2 * d * d * n * (n - 2)
    if kind == TWO_SWITCH:
        return 2 * d * (d - 1) ** 2 * n
    if kind == MIXED_SWITCH:
        return 2 * d * d * (d + 1) * n
    raise ValueError(f"unknown switch kind {kind!r}")


def reverse_switch_tuples(B: Encoding, Z: Digraph, kind: str):
    """All (i,alpha,beta,gamma,delta) defining a reverse switch on B.

    A reverse switch undoes a repair switch: through zeta^i it raises the
    entries at (alpha,beta) and (delta,gamma) and lowers those at
    (alpha,gamma) and (delta,beta).  Reverse (-1)-switches only act before
    any label 2 exists, and reverse 2-switches only while no vertex mixes
    bad-arc labels at a head or tail; the vertex conditions below mirror
    the choices the forward switches make.
    """
    if kind == MINUS_SWITCH and any(lab == 2 for _, lab in B.bad_arcs()):
        return ()
    if kind == TWO_SWITCH and handy_tuples(B):
        return ()
    out = []
    V = range(1, B.n + 1)
    for i in (0, 1):
        for alpha in V:
            if kind == TWO_SWITCH and _ztail_bad_count(B, i, alpha, -1):
                continue
            if kind == MIXED_SWITCH and _ztail_bad_count(B, i, alpha) > 1:
                continue
            if kind in (MINUS_SWITCH, MIXED_SWITCH):
                gammas = [c for c in V if c != alpha
                          and B.zlabel(i, alpha, c) == 0
                          and zeta_arc(i, (alpha, c)) in Z.arcs]
            else:
                gammas = [c for c in V if c != alpha
                          and B.zlabel(i, alpha, c) == 1
                          and not _zhead_bad_count(B, i, c, 2)]
            if kind == MINUS_SWITCH:
                betas = [b for b in V if b != alpha
                         and B.zlabel(i, alpha, b) == 0
                         and not _zhead_bad_count(B, i, b)]
            else:
                betas = [b for b in V if b != alpha
                         and B.zlabel(i, alpha, b) == 1
                         and not _zhead_bad_count(B, i, b, -1)]
            for beta in betas:
                for gamma in gammas:
                    if gamma == beta:
                        continue
                    for delta in V:
                        if delta in (alpha, beta, gamma):
                            continue
                        if (B.zlabel(i, delta, beta) == 1
                                and B.zlabel(i, delta, gamma) == 0):
                            out.append((i, alpha, beta, gamma, delta))
    return tuple(out)


def apply_reverse_switch(B: Encoding, i: int, alpha: int, beta: int,
                         gamma: int, delta: int) -> Encoding:
    """Undo a repair switch: zeta^i [alpha gamma delta beta] on the matrix."""
    if i % 2 == 0:
        return switch_encoding(B, alpha, gamma, delta, beta)
    return switch_encoding(B, gamma, alpha, beta, delta)


def reverse_types(budget: int = 3):
    """Kind sequences a repair can produce, in reverse execution order.

    At most budget switches in total and at most two of them (-1,2); the
    (-1) kind runs first, then 2, then (-1,2).  A budget of three gives
    nineteen sequences, counting the empty one.
    """
    out = []
    for a in range(budget + 1):
        for b in range(budget + 1 - a):
            c_max = min(2, budget - a - b)
            for c in range(c_max + 1):
                out.append((MINUS_SWITCH,) * a + (TWO_SWITCH,) * b
                           + (MIXED_SWITCH,) * c)
    return tuple(out)


@dataclass(frozen=True)
class ReverseReachability:
    """Census of encodings reachable from a digraph by reverse switches."""

    total: int
    per_type: dict
    step_counts: dict
    bound: int
    reached: frozenset

    def within_bound(self) -> bool:
        return self.total <= self.bound


def count_reverse_reachable(A: Digraph, Z: Digraph,
                            budget: int = 3) -> ReverseReachability:
    """Count distinct Z-valid encodings reachable from A by reverse switches.

    Sequences follow reverse_types: reverse (-1)-switches first, then
    reverse 2-switches, then at most two reverse (-1,2)-switches, with at
    most budget switches overall.  Results that fail the Z-validity check
    are pruned.  The total reachable count is what bounds how many
    encodings can repair to A; it must stay within 25 d^6 n^6.
    """
    start = encoding_from_digraph(A)
    step_max = {MINUS_SWITCH: 0, TWO_SWITCH: 0, MIXED_SWITCH: 0}
    cache = {}

    def reach(B, stage, left, mixed_left):
        key = (B.rows, stage, left, mixed_left)
        if key in cache:
            return cache[key]
        result = {(): frozenset({B.rows})}
        if left:
            for kind in (MINUS_SWITCH, TWO_SWITCH, MIXED_SWITCH):
                if REVERSE_STAGE[kind] < stage:
                    continue
                if kind == MIXED_SWITCH and not mixed_left:
                    continue
                tuples = reverse_switch_tuples(B, Z, kind)
                step_max[kind] = max(step_max[kind], len(tuples))
                assert len(tuples) <= reverse_step_bound(kind, B.n, B.d), (
                    f"too many reverse {kind}-switches offered")
                for tup in tuples:
                    nxt = apply_reverse_switch(B, *tup)
                    if kind == TWO_SWITCH and handy_tuples(nxt):
                        continue
                    if not is_z_valid(nxt, Z):
                        continue
                    sub = reach(nxt, REVERSE_STAGE[kind], left - 1,
                                mixed_left - (kind == MIXED_SWITCH))
                    for suffix, keys in sub.items():
                        t = (kind,) + suffix
                        result[t] = result.get(t, frozenset()) | keys
        cache[key] = result
        return result

    reached_by_type = reach(start, 0, budget, min(2, budget))
    all_keys = frozenset().union(*reached_by_type.values())
    per_type = {t: len(keys) for t, keys in sorted(reached_by_type.items())}
    return ReverseReachability(
        total=len(all_keys),
        per_type=per_type,
        step_counts=dict(step_max),
        bound=25 * A.d ** 6 * A.n ** 6,
        reached=all_keys)


def count_preimages(Z: Digraph, Z2: Digraph, L: Encoding, psi_key) -> int:
    """Count endpoint pairs whose canonical path walks (Z, Z2) carrying L.

    Brute force over the whole space: an ordered pair (G, G2) is counted
    when its encoding at Z equals L and some pairing whose uncoloured
    matching equals psi_key routes the path through the transition.  Only
    intended for spaces small enough to enumerate.
    """
    from switchchain.processing import build_canonical_path

    states = enumerate_omega(Z.n, Z.d).states
    count = 0
    for G in states:
        for G2 in states:
            if G2 == G:
                continue
            if encoding_of(G, G2, Z) != L:
                continue
            H = sym_diff(G, G2)
            for psi in enumerate_pairings(H):
                if psi.uncoloured_key() != psi_key:
                    continue
                trace = build_canonical_path(G, G2, psi)
                if any(trace.states[t] == Z and trace.states[t + 1] == Z2
                       for t in range(len(trace.states) - 1)):
                    count += 1
                    break
    return count
