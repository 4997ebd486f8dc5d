"""Independent oracle for transition-matrix, spectrum, and mixing values.

Rebuilds the switch chain's transition matrix from scratch (set-based state
representation, no package imports), powers it in exact rational arithmetic,
and prints the exact mixing times tau(0.25) and tau(0.01) plus spectral
values for the small instances.  Printed numbers are frozen into the tests.
"""

import itertools
from fractions import Fraction
from math import comb

import numpy as np

from oracle_enumeration import enumerate_states


def transition_matrix(states, n, d):
    idx = {s: i for i, s in enumerate(states)}
    N = len(states)
    pairs = comb(d * n, 2)
    P = [[Fraction(0)] * N for _ in range(N)]
    for i, arcs in enumerate(states):
        moved = 0
        for a1, a2 in itertools.combinations(sorted(arcs), 2):
            (ti, hj), (tk, hl) = a1, a2
            if len({ti, hj, tk, hl}) != 4:
                continue
            if (ti, hl) in arcs or (tk, hj) in arcs:
                continue
            j = idx[arcs - {a1, a2} | {(ti, hl), (tk, hj)}]
            P[i][j] += Fraction(1, pairs)
            moved += 1
        P[i][i] = 1 - Fraction(moved, pairs)
    return P


def tv_from_uniform(row, N):
    pi = Fraction(1, N)
    return sum(abs(p - pi) for p in row) / 2


def exact_mixing(P, eps_list):
    N = len(P)
    D = [[Fraction(1) if i == j else Fraction(0) for j in range(N)]
         for i in range(N)]
    taus = {}
    t = 0
    worst = max(tv_from_uniform(row, N) for row in D)
    print(f"  t={t} worst_tv={float(worst):.6f}")
    while any(e not in taus for e in eps_list):
        D = [[sum(D[i][k] * P[k][j] for k in range(N)) for j in range(N)]
             for i in range(N)]
        t += 1
        new_worst = max(tv_from_uniform(row, N) for row in D)
        assert new_worst <= worst, "TV distance increased"
        worst = new_worst
        print(f"  t={t} worst_tv={float(worst):.6f}")
        for e in eps_list:
            if e not in taus and worst <= e:
                taus[e] = t
    return taus


def main():
    for n, d in [(4, 1), (4, 2), (5, 1)]:
        states = enumerate_states(n, d)
        N = len(states)
        P = transition_matrix(states, n, d)
        for i in range(N):
            assert sum(P[i]) == 1
            for j in range(N):
                assert P[i][j] == P[j][i]
            assert P[i][i] >= Fraction(1, comb(d * n, 2))
        Pf = np.array([[float(x) for x in row] for row in P])
        eig = np.linalg.eigvalsh(Pf)
        lam1 = eig[-2]
        lam_min = eig[0]
        lam_star = max(lam1, abs(lam_min))
        print(f"Omega({n},{d}): N={N}")
        print(f"  lambda1={lam1:.12f} lambdaMin={lam_min:.12f} "
              f"lambdaStar={lam_star:.12f}")
        taus = exact_mixing(P, [Fraction(1, 4), Fraction(1, 100)])
        print(f"  tau(0.25)={taus[Fraction(1, 4)]} "
              f"tau(0.01)={taus[Fraction(1, 100)]}")


if __name__ == "__main__":
    main()
