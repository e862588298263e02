"""Exhaustive subset searches, their invariants, and the enumerator.

Search-space sizes are pinned to the binomials they must equal when
pruning is off: fixing (1,1,1) leaves C(26,4) = 14,950 subsets at n=3
s=5, and the full space has C(27,5) = 80,730.
"""

import itertools

import pytest

from hammingdim import (
    BudgetExceeded,
    GhgParams,
    SearchOptions,
    SystemKind,
    Unsupported,
    Verdict,
    classify,
    enumerate_two_basic,
    exists_resolving_of_size,
    hamming_graph,
    is_resolving_by_distance,
    metric_basis,
    metric_dimension,
)

G3 = hamming_graph(3, 3, 3)


def test_no_five_set_normalized_unpruned():
    cert = exists_resolving_of_size(G3, 5, SearchOptions(prune=False))
    assert cert.verdict is Verdict.DIMENSION
    assert cert.candidates_examined == 14950  # C(26,4)
    assert "no resolving set of size 5" in cert.attestation


def test_no_five_set_unnormalized_unpruned():
    cert = exists_resolving_of_size(
        G3, 5, SearchOptions(prune=False, normalize=False)
    )
    assert cert.verdict is Verdict.DIMENSION
    assert cert.candidates_examined == 80730  # C(27,5)


def test_six_set_found_and_reverifies():
    cert = exists_resolving_of_size(G3, 6)
    assert cert.verdict is Verdict.RESOLVING
    assert cert.basis is not None and len(cert.basis.members) == 6
    assert is_resolving_by_distance(cert.basis).verdict is Verdict.RESOLVING
    assert (1, 1, 1) in cert.basis  # normalization fixes the first vertex


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5, 6])
def test_pruning_and_normalization_preserve_verdicts(s):
    base = exists_resolving_of_size(G3, s, SearchOptions(prune=False, normalize=False))
    for prune, normalize in [(True, False), (False, True), (True, True)]:
        cert = exists_resolving_of_size(G3, s, SearchOptions(prune=prune, normalize=normalize))
        assert cert.verdict == base.verdict, (s, prune, normalize)
        if prune:
            assert cert.candidates_examined <= base.candidates_examined


def test_worker_count_changes_nothing():
    for s in (5, 6):
        one = exists_resolving_of_size(G3, s, SearchOptions(workers=1))
        two = exists_resolving_of_size(G3, s, SearchOptions(workers=2))
        assert one.verdict == two.verdict
        assert one.candidates_examined == two.candidates_examined
        if one.basis is not None:
            assert one.basis == two.basis


def test_candidate_budget():
    with pytest.raises(BudgetExceeded) as exc:
        exists_resolving_of_size(G3, 5, SearchOptions(max_candidates=100))
    assert exc.value.bound == "max_candidates"
    assert exc.value.candidates_examined == 100
    with pytest.raises(BudgetExceeded):
        exists_resolving_of_size(
            G3, 5, SearchOptions(max_candidates=100, workers=2)
        )


def test_wall_time_budget():
    with pytest.raises(BudgetExceeded) as exc:
        exists_resolving_of_size(
            G3, 5, SearchOptions(prune=False, max_seconds=0.0)
        )
    assert exc.value.bound == "max_seconds"


def test_search_domain_errors():
    with pytest.raises(Unsupported):
        exists_resolving_of_size(hamming_graph(5, 5, 5), 9)
    with pytest.raises(Unsupported):
        exists_resolving_of_size(G3, 7)  # beyond 2n
    with pytest.raises(Unsupported):
        exists_resolving_of_size(hamming_graph(3, 4, 5), 5)
    with pytest.raises(Unsupported):
        exists_resolving_of_size(GhgParams((3, 3, 3), frozenset({1, 2})), 5)


def test_metric_dimension_n3():
    cert = metric_dimension(G3)
    assert cert.verdict is Verdict.DIMENSION
    assert cert.dimension == 6
    assert "size 5: none exists" in cert.attestation
    assert "size 6: resolving set found" in cert.attestation
    assert is_resolving_by_distance(cert.basis).verdict is Verdict.RESOLVING


def test_metric_dimension_analytic_route():
    cert = metric_dimension(hamming_graph(5, 5, 5))
    assert cert.dimension == 9
    assert cert.basis == metric_basis(5)
    assert cert.candidates_examined is None  # no search happened
    assert "construction" in cert.attestation
    assert metric_dimension(hamming_graph(8, 8, 8)).dimension == 15


def test_metric_dimension_domain_errors():
    with pytest.raises(Unsupported):
        metric_dimension(hamming_graph(3, 4, 5))
    with pytest.raises(Unsupported):
        metric_dimension(GhgParams((5, 5, 5), frozenset({1, 2})))


def brute_force_two_basic(n):
    """Independent enumerator: filter every 6-subset of the n=3 cube."""
    assert n == 3
    verts = list(G3.vertices())
    out = []
    for combo in itertools.combinations(verts, 6):
        ok = True
        for i in range(3):
            counts = [0, 0, 0]
            for v in combo:
                counts[v[i] - 1] += 1
            if counts != [2, 2, 2]:
                ok = False
                break
        if ok:
            for x, y in itertools.combinations(combo, 2):
                if sum(a == b for a, b in zip(x, y)) >= 2:
                    ok = False
                    break
        if ok:
            out.append(frozenset(combo))
    return out


def test_enumerate_two_basic_n3_against_brute_force():
    enumerated = [frozenset(W.members) for W in enumerate_two_basic(3)]
    assert len(enumerated) == 144
    assert len(set(enumerated)) == 144
    oracle = brute_force_two_basic(3)
    assert len(oracle) == 144
    assert set(enumerated) == set(oracle)


def test_enumerate_two_basic_properties():
    for W in enumerate_two_basic(3, budget=20):
        assert classify(W).kind is SystemKind.TWO_BASIC
        assert len(W.members) == 6
        assert W.members == tuple(sorted(W.members))
    assert len(list(enumerate_two_basic(3, budget=10))) == 10


def test_enumerate_two_basic_sampling():
    first = [W.members for W in enumerate_two_basic(4, budget=40, seed=123)]
    again = [W.members for W in enumerate_two_basic(4, budget=40, seed=123)]
    other = [W.members for W in enumerate_two_basic(4, budget=40, seed=124)]
    assert first == again
    assert first != other
    assert len(first) == 40
    for W in enumerate_two_basic(5, budget=10, seed=5):
        assert classify(W).kind is SystemKind.TWO_BASIC
        assert W.graph.dims == (5, 5, 5)


def test_enumerate_two_basic_domain():
    with pytest.raises(Unsupported):
        list(enumerate_two_basic(6))
    with pytest.raises(Unsupported):
        list(enumerate_two_basic(2))
