"""Tests for the canonical-path flow, its load bounds, and bad pairs.

Full audits of the three smallest spaces are built once per module; the
expected loads, path counts and bad-pair censuses are frozen from earlier
exhaustive runs.
"""

import itertools
from fractions import Fraction

import pytest

from switchchain.enumeration import CapExceeded, enumerate_omega
from switchchain.chain import build_transition_matrix, spectrum
from switchchain.pairings import ColouredDiff, Pairing, count_pairings, enumerate_pairings
from switchchain.processing import build_canonical_path, sym_diff
from switchchain.flow import (
    BadPairReport,
    FlowAudit,
    bad_pairs,
    build_flow,
    colour_by_state,
    count_consistent_pairings,
    verify_bounds,
)

FROZEN_AUDITS = {
    # (n, d): (paths, max path length, max edge flow, max load)
    (4, 1): (72, 3, Fraction(2, 27), Fraction(4)),
    (4, 2): (72, 3, Fraction(2, 27), Fraction(56, 3)),
    (5, 1): (1892, 4, Fraction(39, 1936), Fraction(195, 22)),
}

# Bad-pair totals over every state of every canonical path.
FROZEN_BAD_PAIR_CENSUS = {
    (4, 1): {0: 156, 2: 36, 4: 12},
    (4, 2): {0: 156, 2: 36, 4: 12},
    (5, 1): {0: 4264, 2: 2058, 4: 498},
}


@pytest.fixture(scope="module")
def audits():
    return {key: (enumerate_omega(*key),)
            for key in FROZEN_AUDITS}


@pytest.fixture(scope="module")
def full_audits(audits):
    return {key: build_flow(space) for key, (space,) in audits.items()}


def test_full_audit_frozen_quantities(full_audits):
    for key, (paths, max_len, max_fe, max_load) in FROZEN_AUDITS.items():
        audit = full_audits[key]
        assert audit.mode == "full"
        assert audit.path_count == paths
        assert audit.total_pairings == paths
        assert audit.max_path_length == max_len
        assert audit.max_edge_flow == max_fe
        assert audit.max_load == max_load
        assert audit.seed is None


def test_flow_is_conserved_exactly(full_audits):
    for (n, d), audit in full_audits.items():
        N = audit.num_states
        assert len(audit.pair_flow) == N * (N - 1)
        assert all(sent == Fraction(1, N * N)
                   for sent in audit.pair_flow.values())


def test_paths_are_simple_and_short(full_audits):
    for (n, d), audit in full_audits.items():
        assert audit.simplicity_violations == ()
        assert audit.max_path_length <= d * n


def test_edge_probability_and_load_accessor(full_audits):
    audit = full_audits[(4, 1)]
    assert audit.edge_probability == Fraction(1, 9 * 6)
    some_edge = max(audit.edge_flow, key=audit.edge_flow.get)
    assert audit.load(some_edge) == Fraction(4)
    absent = (some_edge[0], some_edge[0])
    assert audit.load(absent) == 0


def test_all_four_bounds_hold(full_audits):
    for (n, d), audit in full_audits.items():
        spec = spectrum(build_transition_matrix(enumerate_omega(n, d)))
        report = verify_bounds(audit, spec, n, d)
        assert report.ok and bool(report)
        assert report.failures == ()
        assert [c.name for c in report.checks] == [
            "max-edge-flow", "max-load", "relaxation-vs-load",
            "relaxation-vs-polynomial"]
        assert all(c.margin > 0 for c in report.checks)
        # The eigenvalue-against-measured-load inequality is by far the
        # tightest link of the chain at desk scale.
        assert report.tightest == "relaxation-vs-load"


def test_verify_bounds_rejects_wrong_instance(full_audits):
    spec = spectrum(build_transition_matrix(enumerate_omega(4, 1)))
    with pytest.raises(ValueError):
        verify_bounds(full_audits[(4, 1)], spec, 5, 1)


def test_inflated_flow_fails_the_flow_bounds(full_audits):
    audit = full_audits[(4, 1)]
    loud = FlowAudit(n=4, d=1, num_states=9, mode="full",
                     edge_flow={("x", "y"): Fraction(10 ** 9)},
                     pair_flow={}, max_path_length=3, path_count=0,
                     total_pairings=0, simplicity_violations=())
    spec = spectrum(build_transition_matrix(enumerate_omega(4, 1)))
    report = verify_bounds(loud, spec, 4, 1)
    assert set(report.failures) == {"max-edge-flow", "max-load"}
    assert not report.ok


def test_sampled_mode_under_a_forced_cap(audits):
    (space,) = audits[(4, 1)]
    audit = build_flow(space, cap=10, samples_per_pair=2, seed=5)
    assert audit.mode == "sampled"
    assert audit.seed == 5
    assert audit.path_count == 2 * 72
    assert audit.simplicity_violations == ()
    # sampled weights still add up to the per-pair flow demand
    assert all(sent == Fraction(1, 81) for sent in audit.pair_flow.values())
    with pytest.raises(CapExceeded):
        build_flow(space, mode="full", cap=10)
    with pytest.raises(ValueError):
        build_flow(space, mode="everything")


def test_sampled_mode_is_reproducible(audits):
    (space,) = audits[(4, 1)]
    one = build_flow(space, mode="sampled", seed=11)
    two = build_flow(space, mode="sampled", seed=11)
    assert one.edge_flow == two.edge_flow


def test_endpoint_colourings_have_no_bad_pairs(audits):
    (space,) = audits[(4, 2)]
    for G, G2 in itertools.islice(
            itertools.permutations(space.states, 2), 20):
        for psi in enumerate_pairings(sym_diff(G, G2)):
            assert bad_pairs(colour_by_state(G, G2, G), psi).total == 0
            assert bad_pairs(colour_by_state(G, G2, G2), psi).total == 0


def test_bad_pair_census_and_bounds(audits):
    for key, expected in FROZEN_BAD_PAIR_CENSUS.items():
        (space,) = (enumerate_omega(*key),)
        census = {}
        for G, G2 in itertools.permutations(space.states, 2):
            H = sym_diff(G, G2)
            for psi in enumerate_pairings(H):
                trace = build_canonical_path(G, G2, psi)
                for idx, Z in enumerate(trace.states):
                    report = bad_pairs(colour_by_state(G, G2, Z), psi,
                                       state=Z)
                    assert report.within_bounds()
                    assert report.state == Z
                    census[report.total] = census.get(report.total, 0) + 1
                    # bad vertices always sit on a disturbed arc
                    step = trace.steps[idx - 1] if idx else None
                    touched = {v for arc, _ in
                               (step.interesting if step else ())
                               for v in arc}
                    assert set(report.bad_vertices) <= touched
        assert census == expected


def test_bad_pair_report_bounds_logic():
    psi = Pairing(head=(), tail=())
    ok = BadPairReport(state=None, pairing=psi, total=16,
                       counts={(1, "head", "green"): 2,
                               (1, "head", "yellow"): 2})
    assert ok.within_bounds()
    assert ok.bad_vertices == (1,)
    over_total = BadPairReport(state=None, pairing=psi, total=17, counts={})
    assert not over_total.within_bounds()
    over_colour = BadPairReport(state=None, pairing=psi, total=3,
                                counts={(1, "head", "green"): 3})
    assert not over_colour.within_bounds()


def test_bad_pairs_requires_a_complete_colouring():
    psi = Pairing(head=(((1, 3), (2, 3)),), tail=())
    H = ColouredDiff(3, blue=frozenset([(1, 3)]), red=frozenset())
    with pytest.raises(ValueError):
        bad_pairs(H, psi)


def test_consistent_pairing_count_by_hand():
    # Two vertices of in- and out-degree four, coloured half and half:
    # each of their four sides tallies {0 bad: 2 ways, 2 bad: 1 way}, the
    # eight remaining sides are forced, so (2 + 1)^4 = 81 free pairings
    # survive the caps while only 2^4 = 16 alternate everywhere.
    blue = frozenset([(1, 5), (2, 5), (5, 3), (5, 4),
                      (3, 6), (4, 6), (6, 1), (6, 2)])
    red = frozenset([(3, 5), (4, 5), (5, 1), (5, 2),
                     (1, 6), (2, 6), (6, 3), (6, 4)])
    H = ColouredDiff(6, blue=blue, red=red)
    assert count_pairings(H) == 16
    assert count_consistent_pairings(H) == 81


def test_consistent_pairings_respect_the_per_side_cap():
    # Six arcs of one colour into a vertex force three same-colour pairs
    # at that side, over the cap of two, so nothing survives.
    blue = frozenset([(1, 3), (1, 4), (2, 3), (2, 4), (5, 3), (5, 4),
                      (6, 3), (6, 4), (7, 3), (7, 4), (8, 3), (8, 4)])
    H = ColouredDiff(8, blue=blue, red=frozenset())
    assert count_consistent_pairings(H) == 0


def test_consistency_bound_spot_check(audits):
    # Every alternating pairing stays consistent mid-path, and the free
    # count never exceeds d^16 times the alternating count.
    (space,) = audits[(4, 2)]
    d = 2
    checked = 0
    for G, G2 in itertools.islice(
            itertools.permutations(space.states, 2), 12):
        H = sym_diff(G, G2)
        alternating = count_pairings(H)
        for psi in enumerate_pairings(H):
            trace = build_canonical_path(G, G2, psi)
            for Z in trace.states:
                coloured = colour_by_state(G, G2, Z)
                free = count_consistent_pairings(coloured)
                assert alternating <= free <= d ** 16 * alternating
                checked += 1
    assert checked > 30


def test_regression_adjacent_segments_can_cancel_a_switch():
    # The last phase switch of the first segment is undone by the next
    # segment's shortcut switch, so the path revisits a state.  Nothing
    # promises simplicity, and the audit must report the revisit with its
    # positions rather than deduplicate.
    from switchchain.digraph import Digraph

    G = Digraph(5, 2, frozenset([(1, 4), (1, 5), (2, 3), (2, 5), (3, 2),
                                 (3, 4), (4, 1), (4, 3), (5, 1), (5, 2)]))
    G2 = Digraph(5, 2, frozenset([(1, 2), (1, 3), (2, 1), (2, 4), (3, 1),
                                  (3, 5), (4, 2), (4, 5), (5, 3), (5, 4)]))
    psi = Pairing(
        head=(((4, 1), (2, 1)), ((5, 1), (3, 1)), ((3, 2), (4, 2)),
              ((5, 2), (1, 2)), ((2, 3), (1, 3)), ((4, 3), (5, 3)),
              ((1, 4), (2, 4)), ((3, 4), (5, 4)), ((1, 5), (3, 5)),
              ((2, 5), (4, 5))),
        tail=(((1, 4), (1, 2)), ((1, 5), (1, 3)), ((2, 3), (2, 1)),
              ((2, 5), (2, 4)), ((3, 2), (3, 1)), ((3, 4), (3, 5)),
              ((4, 1), (4, 5)), ((4, 3), (4, 2)), ((5, 1), (5, 4)),
              ((5, 2), (5, 3))))
    trace = build_canonical_path(G, G2, psi)
    first = trace.steps[4].switch
    second = trace.steps[5].switch
    assert second.canonical() == first.inverse().canonical()
    from switchchain.flow import _revisits

    violations = _revisits(G, G2, psi, trace.states)
    assert len(violations) == 1
    assert violations[0].positions == (4, 6)
    assert violations[0].state == trace.states[4]
