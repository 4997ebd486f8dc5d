"""The switch Markov chain: stepping, exact transition matrices, spectra,
and mixing-time measurement.

A step draws an unordered pair of distinct arcs uniformly from the C(dn, 2)
pairs and swaps heads when the four endpoints are distinct and neither target
arc is present; otherwise the chain holds.  The chain is symmetric, hence
reversible with uniform stationary distribution, and every state holds with
probability at least 1/C(dn, 2).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from switchchain.digraph import Digraph, Switch, apply_switch, circulant_generator
from switchchain.enumeration import StateSpace

EIGEN_RESIDUAL_TOL = 1e-9
MIXING_HORIZON_FACTOR = 64


def pair_count(n: int, d: int) -> int:
    return comb(d * n, 2)


def unrank_pair(m: int, size: int) -> tuple[int, int]:
    """The m-th unordered index pair (i < j) from a list of the given size."""
    if not 0 <= m < comb(size, 2):
        raise ValueError(f"pair rank {m} out of range for size {size}")
    for i in range(size):
        block = size - 1 - i
        if m < block:
            return i, i + 1 + m
        m -= block
    raise AssertionError("unreachable")


def step(G: Digraph, rng: random.Random) -> Digraph:
    """One chain step; returns G itself when the proposal is rejected."""
    arcs = G.sorted_arcs
    m = rng.randrange(comb(len(arcs), 2))
    i, j = unrank_pair(m, len(arcs))
    (ti, hj), (tk, hl) = arcs[i], arcs[j]
    if len({ti, hj, tk, hl}) != 4:
        return G
    if (ti, hl) in G.arcs or (tk, hj) in G.arcs:
        return G
    return apply_switch(G, Switch(ti, hj, tk, hl))


def sample(n: int, d: int, steps: int, seed: int = 0) -> Digraph:
    """Run the chain from the circulant start state for a fixed step count."""
    rng = random.Random(seed)
    G = circulant_generator(n, d)
    for _ in range(steps):
        G = step(G, rng)
    return G


def build_transition_matrix(space: StateSpace) -> list[list[Fraction]]:
    """Exact rational transition matrix over the state space."""
    from switchchain.enumeration import valid_moves

    N = len(space)
    pairs = pair_count(space.n, space.d)
    P = [[Fraction(0)] * N for _ in range(N)]
    for i, G in enumerate(space.states):
        moved = 0
        for _, H in valid_moves(G):
            P[i][space.index[H]] += Fraction(1, pairs)
            moved += 1
        P[i][i] = 1 - Fraction(moved, pairs)
    for i in range(N):
        if sum(P[i]) != 1:
            raise AssertionError(f"row {i} of P does not sum to 1")
    return P


def to_float_matrix(P: list[list[Fraction]]) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in P], dtype=np.float64)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of P in ascending order plus the derived gap quantities."""

    eigenvalues: np.ndarray
    lambda1: float       # second-largest eigenvalue
    lambda_min: float    # smallest eigenvalue
    lambda_star: float   # max(lambda1, |lambda_min|)


def spectrum(P: list[list[Fraction]]) -> Spectrum:
    """Eigendecomposition with an explicit residual check at 1e-9."""
    Pf = to_float_matrix(P)
    if not np.allclose(Pf, Pf.T, atol=0):
        raise ValueError("transition matrix is not symmetric")
    vals, vecs = np.linalg.eigh(Pf)
    residual = np.abs(Pf @ vecs - vecs * vals).max()
    if residual > EIGEN_RESIDUAL_TOL:
        raise ArithmeticError(f"eigen residual {residual:.3e} above tolerance")
    lambda1 = float(vals[-2]) if len(vals) > 1 else float(vals[-1])
    lambda_min = float(vals[0])
    return Spectrum(eigenvalues=vals, lambda1=lambda1, lambda_min=lambda_min,
                    lambda_star=max(lambda1, abs(lambda_min)))


def total_variation_curve(P: list[list[Fraction]], horizon: int) -> list[float]:
    """Worst-start total variation distance from uniform at t = 0..horizon."""
    Pf = to_float_matrix(P)
    N = Pf.shape[0]
    D = np.eye(N)
    curve = [float(np.abs(D - 1.0 / N).sum(axis=1).max() / 2)]
    for _ in range(horizon):
        D = D @ Pf
        curve.append(float(np.abs(D - 1.0 / N).sum(axis=1).max() / 2))
    return curve


def exact_mixing_time(P: list[list[Fraction]], eps: float,
                      spec: Spectrum | None = None) -> int:
    """Least t with max-over-starts TV distance from uniform at most eps.

    The scan is capped at 64 (1 - lambda*)^-1 log(N / eps) steps, far beyond
    the point the distance can still sit above eps, so hitting the cap means
    something is wrong with the matrix rather than slow mixing.
    """
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    spec = spectrum(P) if spec is None else spec
    N = len(P)
    if N == 1:
        return 0
    gap = 1.0 - spec.lambda_star
    if gap <= 0:
        raise ValueError("chain is not ergodic: lambda* = 1")
    horizon = math.ceil(MIXING_HORIZON_FACTOR / gap * math.log(N / eps))
    Pf = to_float_matrix(P)
    D = np.eye(N)
    prev = float(np.abs(D - 1.0 / N).sum(axis=1).max() / 2)
    if prev <= eps:
        return 0
    for t in range(1, horizon + 1):
        D = D @ Pf
        tv = float(np.abs(D - 1.0 / N).sum(axis=1).max() / 2)
        if tv > prev + 1e-12:
            raise AssertionError(f"TV distance increased at step {t}")
        prev = tv
        if tv <= eps:
            return t
    raise RuntimeError(f"TV distance still above {eps} after {horizon} steps")


def lemma_bound(lambda_star: float, N: int, eps: float) -> float:
    """Mixing bound (1 - lambda*)^-1 (log N + log(1/eps)) for reversible chains."""
    return (math.log(N) + math.log(1.0 / eps)) / (1.0 - lambda_star)


def theorem_bound(n: int, d: int, eps: float) -> float:
    """The headline polynomial bound 50 d^25 n^9 (dn log(dn) + log(1/eps))."""
    return 50.0 * d**25 * n**9 * (d * n * math.log(d * n) + math.log(1.0 / eps))


@dataclass(frozen=True)
class EtaBounds:
    """Smallest-eigenvalue control via the all-self-loops odd cycle set.

    With Sigma = {loop at every state}, eta'(Sigma) = max_x 1/P(x, x) and
    every cycle has length 1, giving (1 + lambda_min)^-1 <= eta'/2, which the
    uniform hold bound P(x, x) >= 1/C(dn, 2) relaxes to d^2 n^2 / 4.
    """

    max_inverse_hold: Fraction
    self_loop_bound: Fraction       # eta' * ell / 2
    polynomial_bound: Fraction      # d^2 n^2 / 4


def eta_bounds(space: StateSpace, P: list[list[Fraction]]) -> EtaBounds:
    holds = [P[i][i] for i in range(len(P))]
    if min(holds) <= 0:
        raise AssertionError("a state has no holding probability")
    max_inv = max(1 / h for h in holds)
    if max_inv > pair_count(space.n, space.d):
        raise AssertionError("holding probability below the 1/C(dn,2) floor")
    return EtaBounds(
        max_inverse_hold=max_inv,
        self_loop_bound=max_inv / 2,
        polynomial_bound=Fraction(space.d**2 * space.n**2, 4),
    )
