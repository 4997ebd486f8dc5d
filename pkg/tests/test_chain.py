"""Tests for the switch chain: matrix structure, spectra, mixing times.

Frozen spectral values and mixing times come from tools/oracle_chain.py,
which rebuilds the transition matrix independently and powers it in exact
rational arithmetic.
"""

import random
from fractions import Fraction
from math import comb

import pytest

from switchchain.chain import (
    EtaBounds,
    build_transition_matrix,
    eta_bounds,
    exact_mixing_time,
    lemma_bound,
    pair_count,
    sample,
    spectrum,
    step,
    theorem_bound,
    total_variation_curve,
    unrank_pair,
)
from switchchain.digraph import circulant_generator
from switchchain.enumeration import enumerate_omega

FROZEN_SPECTRA = {
    # (n, d): (lambda1, lambdaMin, lambdaStar)
    (4, 1): (0.788675134595, 0.000000000000, 0.788675134595),
    (4, 2): (0.954716100270, 0.785714285714, 0.954716100270),
    (5, 1): (0.770156211872, -0.100000000000, 0.770156211872),
}
FROZEN_TAUS = {
    # (n, d): (tau(0.25), tau(0.01))
    (4, 1): (5, 19),
    (4, 2): (23, 93),
    (5, 1): (6, 18),
}


@pytest.fixture(scope="module")
def instances():
    out = {}
    for key in FROZEN_SPECTRA:
        space = enumerate_omega(*key)
        out[key] = (space, build_transition_matrix(space))
    return out


def test_matrix_is_symmetric_stochastic(instances):
    for (n, d), (space, P) in instances.items():
        pairs = pair_count(n, d)
        N = len(space)
        for i in range(N):
            assert sum(P[i]) == 1
            assert P[i][i] >= Fraction(1, pairs)
            for j in range(i + 1, N):
                assert P[i][j] == P[j][i]
                assert (P[i][j] * pairs).denominator == 1


def test_frozen_spectra(instances):
    for key, (lam1, lam_min, lam_star) in FROZEN_SPECTRA.items():
        spec = spectrum(instances[key][1])
        assert spec.lambda1 == pytest.approx(lam1, abs=1e-9)
        assert spec.lambda_min == pytest.approx(lam_min, abs=1e-9)
        assert spec.lambda_star == pytest.approx(lam_star, abs=1e-9)


def test_frozen_mixing_times(instances):
    for key, (tau25, tau01) in FROZEN_TAUS.items():
        P = instances[key][1]
        assert exact_mixing_time(P, 0.25) == tau25
        assert exact_mixing_time(P, 0.01) == tau01


def test_tv_curve_monotone(instances):
    for _, P in instances.values():
        curve = total_variation_curve(P, 40)
        for a, b in zip(curve, curve[1:]):
            assert b <= a + 1e-12


def test_mixing_time_within_bounds(instances):
    for (n, d), (space, P) in instances.items():
        spec = spectrum(P)
        for eps in (0.25, 0.01):
            tau = exact_mixing_time(P, eps, spec)
            lem = lemma_bound(spec.lambda_star, len(space), eps)
            thm = theorem_bound(n, d, eps)
            assert tau <= lem <= thm


def test_theorem_bound_formula():
    import math
    n, d, eps = 5, 2, 0.25
    expected = 50.0 * d**25 * n**9 * (d * n * math.log(d * n) + math.log(4.0))
    assert theorem_bound(n, d, eps) == expected


def test_eta_bounds(instances):
    for (n, d), (space, P) in instances.items():
        eb = eta_bounds(space, P)
        assert isinstance(eb, EtaBounds)
        assert eb.self_loop_bound == eb.max_inverse_hold / 2
        assert eb.self_loop_bound <= eb.polynomial_bound
        lam_min = spectrum(P).lambda_min
        assert 1.0 / (1.0 + lam_min) <= float(eb.self_loop_bound) + 1e-8


def test_unrank_pair_is_a_bijection():
    size = 6
    seen = {unrank_pair(m, size) for m in range(comb(size, 2))}
    assert seen == {(i, j) for i in range(size) for j in range(i + 1, size)}
    with pytest.raises(ValueError):
        unrank_pair(comb(size, 2), size)
    with pytest.raises(ValueError):
        unrank_pair(-1, size)


def test_step_preserves_membership():
    rng = random.Random(42)
    G = circulant_generator(5, 2)
    for _ in range(200):
        G = step(G, rng)
        assert G.n == 5 and G.d == 2
        assert G.is_regular()


def test_step_can_hold_and_move():
    rng = random.Random(0)
    G = circulant_generator(4, 1)
    seen = {step(G, random.Random(s)) == G for s in range(50)}
    assert seen == {True, False}
    del rng


def test_sample_is_deterministic():
    a = sample(5, 2, 150, seed=7)
    b = sample(5, 2, 150, seed=7)
    c = sample(5, 2, 150, seed=8)
    assert a == b
    assert a.is_regular() and c.is_regular()


def test_sample_visits_all_states():
    # with enough steps a single trajectory covers all of Omega(4, 1)
    space = enumerate_omega(4, 1)
    rng = random.Random(3)
    G = circulant_generator(4, 1)
    visited = {G}
    for _ in range(2000):
        G = step(G, rng)
        visited.add(G)
    assert visited == set(space.states)
