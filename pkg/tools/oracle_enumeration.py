"""Independent oracles for state-space counts and metagraph diameters.

Counts |Omega(n, d)| by dynamic programming over column-deficit multisets,
which shares no code with the package's row-backtracking enumerator, and
measures metagraph diameters by hand-rolled BFS over explicitly re-derived
switch moves.  Run once; the printed values are frozen into the tests.
"""

import itertools
from collections import Counter, deque
from functools import lru_cache
from math import comb, factorial


def count_omega(n: int, d: int) -> int:
    """DP on sorted column-deficit tuples, one row at a time.

    State: after placing rows 1..v, the multiset of remaining column needs,
    split by whether the column's own (diagonal-blocked) row is still to come.
    """

    @lru_cache(maxsize=None)
    def ways(pending: tuple[int, ...], done: tuple[int, ...]) -> int:
        # pending: needs of columns whose diagonal row is still unplaced
        #          (the first of them is the next row's own column).
        # done: needs of columns whose diagonal row has been placed.
        if not pending:
            return 1 if all(x == 0 for x in done) else 0
        own, rest = pending[0], pending[1:]
        total = 0
        # choose how many of the d ones go to "rest" columns vs "done" columns
        rest_counter = Counter(rest)
        done_counter = Counter(done)
        rest_vals = sorted(rest_counter)
        done_vals = sorted(done_counter)

        def pick(counter, vals):
            """All ways to pick a sub-multiset: (picked-per-value, multiplicity)."""
            choices_per_val = [range(counter[v] + 1) for v in vals]
            for picks in itertools.product(*choices_per_val):
                mult = 1
                for v, k in zip(vals, picks):
                    mult *= comb(counter[v], k)
                yield picks, mult

        for rest_picks, m1 in pick(rest_counter, rest_vals):
            k1 = sum(rest_picks)
            if k1 > d:
                continue
            k2 = d - k1
            for done_picks, m2 in pick(done_counter, done_vals):
                if sum(done_picks) != k2:
                    continue
                new_rest = []
                for v, k in zip(rest_vals, rest_picks):
                    new_rest += [v - 1] * k + [v] * (rest_counter[v] - k)
                new_done = []
                for v, k in zip(done_vals, done_picks):
                    new_done += [v - 1] * k + [v] * (done_counter[v] - k)
                if min(new_rest + new_done, default=0) < 0:
                    continue
                total += m1 * m2 * ways(tuple(sorted(new_rest)),
                                        tuple(sorted(new_done + [own])))
        return total

    return ways(tuple([d] * n), ())


def derangements(n: int) -> int:
    return round(factorial(n) / 2.718281828459045) if n > 0 else 1


def enumerate_states(n, d):
    """Set-based enumeration (independent of the package's bit-lex ordering)."""
    verts = range(1, n + 1)
    rows = {v: [frozenset((v, c) for c in combo)
                for combo in itertools.combinations([c for c in verts if c != v], d)]
            for v in verts}
    states = []

    def go(v, acc, col_need):
        if v > n:
            states.append(frozenset(acc))
            return
        for row in rows[v]:
            heads = [h for _, h in row]
            if any(col_need[h] == 0 for h in heads):
                continue
            for h in heads:
                col_need[h] -= 1
            go(v + 1, acc | row, col_need)
            for h in heads:
                col_need[h] += 1

    go(1, frozenset(), {v: d for v in verts})
    return states


def switch_neighbours(arcs: frozenset) -> set:
    out = set()
    for a1, a2 in itertools.combinations(sorted(arcs), 2):
        i, j = a1
        k, l = a2
        if len({i, j, k, l}) != 4:
            continue
        if (i, l) in arcs or (k, j) in arcs:
            continue
        out.add(arcs - {a1, a2} | {(i, l), (k, j)})
    return out


def diameter(states) -> tuple[bool, int]:
    idx = {s: i for i, s in enumerate(states)}
    best = 0
    for src in range(len(states)):
        dist = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            for nb in switch_neighbours(states[u]):
                v = idx[nb]
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        if len(dist) != len(states):
            return False, -1
        best = max(best, max(dist.values()))
    return True, best


def main():
    for n, d in [(4, 1), (5, 1), (6, 1), (4, 2), (5, 2)]:
        cnt = count_omega(n, d)
        note = f" (derangements D_{n} = {derangements(n)})" if d == 1 else ""
        states = enumerate_states(n, d)
        conn, diam = diameter(states)
        print(f"Omega({n},{d}): count={cnt} enumerated={len(states)} "
              f"connected={conn} diameter={diam}{note}")
        assert cnt == len(states)


if __name__ == "__main__":
    main()
