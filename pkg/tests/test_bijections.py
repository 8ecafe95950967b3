import math

import pytest
from hypothesis import given, settings, strategies as st

from mocktheta.bijections import (DifferenceSequence, check_claims, check_sequence,
                                  nu_forward, nu_inverse, omega_forward, omega_inverse,
                                  psi_minus, psi_minus_case, psi_plus, render_trace_table,
                                  rho_minus, rho_minus_case, rho_plus)
from mocktheta.enumeration import enumerate_family
from mocktheta.ferrers import OddFerrersGraph
from mocktheta.partitions import DomainError, Partition, is_in_P_nu, is_in_P_omega

P = Partition
SMALL = 18


@pytest.mark.parametrize("lam, image, delta", [
    ((6, 4, 2, 2, 0), (6, 4, 2, 1), 1),
    ((10, 8, 7, 7, 5, 4), (10, 9, 8, 7, 6), 1),
    ((8, 7, 5, 5, 3), (6, 5, 3, 3, 2), 9),
])
def test_psi_minus_examples(lam, image, delta):
    assert psi_minus(P(lam)) == (image, delta)


@pytest.mark.parametrize("lam, image, delta", [
    ((12, 8, 4, 2, 0), (10, 6, 2, 0), 8),
    ((10, 8, 7, 5, 4), (8, 7, 6, 5), 8),
    ((8, 6, 5, 3), (6, 4, 3, 2), 7),
])
def test_rho_minus_examples(lam, image, delta):
    assert rho_minus(P(lam)) == (image, delta)


def test_constructive_examples():
    assert psi_plus(P((6, 6, 4, 3)), "one") == (6, 6, 4, 4, 0)
    assert psi_plus(P((8, 8, 4, 2)), "one") == (8, 8, 4, 2, 1)
    assert psi_plus(P((5, 3, 3, 2)), "two") == (7, 5, 5, 3)
    assert rho_plus(P((10, 8, 7, 6, 5)), "two") == (12, 10, 9, 8, 6)
    assert rho_plus(P((10, 8, 4, 2)), "one") == (12, 10, 6, 4, 0)
    assert rho_plus(P((10, 8, 7, 4)), "one") == (12, 10, 6, 5, 4)


def test_domain_errors_name_the_predicate():
    with pytest.raises(DomainError, match="smallest part not unique"):
        omega_forward(P((3, 3)))
    with pytest.raises(DomainError, match="not distinct"):
        nu_forward(P((4, 4, 1)))
    with pytest.raises(DomainError):
        psi_minus(P((5,)))
    with pytest.raises(DomainError):
        nu_inverse(OddFerrersGraph(P((3, 3))))


def test_operator_closure_and_case_totality():
    for lam in enumerate_family("P_omega", SMALL):
        if len(lam) < 2:
            continue
        assert psi_minus_case(lam) in ("i", "ii", "iii")
        out, d = psi_minus(lam)
        assert is_in_P_omega(out) and d % 2 == 1
        # only case iii keeps the length
        assert len(out) == len(lam) - (psi_minus_case(lam) != "iii")
        assert is_in_P_omega(psi_plus(lam, "one")) and is_in_P_omega(psi_plus(lam, "two"))
    for lam in enumerate_family("P_nu", SMALL):
        if len(lam) < 2:
            continue
        assert rho_minus_case(lam) in ("i", "ii", "iii")
        out, d = rho_minus(lam)
        assert is_in_P_nu(out) and d > 0
        assert len(out) == len(lam) - (rho_minus_case(lam) != "iii")
        assert is_in_P_nu(rho_plus(lam, "one")) and is_in_P_nu(rho_plus(lam, "two"))


def test_table1_trace():
    graph, trace = omega_forward(P((6, 4, 3, 3, 2)))
    assert graph.shape == (7, 3, 2, 2, 1)
    assert trace.diffs.values == (1, 7, 1, 1, 3, 1)
    assert [s[0] for s in trace.steps] == [(6, 5, 4, 2), (4, 3, 2, 1), (4, 3, 2), (5, 3), (3, 2), (4,)]
    assert trace.terminal == (4,)
    assert check_claims(trace)


def test_table3_trace():
    graph, trace = nu_forward(P((10, 8, 5, 4, 3)))
    assert graph.shape == (9, 5, 4, 3, 1)
    assert trace.diffs.values == (8, 7, 6, 4, 2)
    assert trace.terminal == (3,)


@pytest.mark.parametrize("lam, shape", [((12, 2, 1, 0), (11, 2, 1, 1)), ((4, 4, 4, 3), (13, 1, 1, 1))])
def test_omega_pairs(lam, shape):
    assert omega_forward(P(lam))[0].shape == shape
    assert omega_inverse(OddFerrersGraph(P(shape)))[0] == lam


@pytest.mark.parametrize("lam, shape", [((18, 6, 4, 2, 0), (15, 4, 3, 2, 1)), ((8, 7, 6, 5, 4), (13, 5, 3, 2, 1))])
def test_nu_pairs(lam, shape):
    assert nu_forward(P(lam))[0].shape == shape
    assert nu_inverse(OddFerrersGraph(P(shape)))[0] == lam


@pytest.mark.parametrize("n", range(6))
def test_single_part_base_case(n):
    for forward, inverse in [(omega_forward, omega_inverse), (nu_forward, nu_inverse)]:
        graph, trace = forward(P((n,)))
        assert graph.shape == (n + 1,) and trace.steps == ()
        assert inverse(graph)[0] == (n,)


def test_check_sequence_examples():
    assert check_sequence(DifferenceSequence((1, 7, 1, 1, 3, 1), "omega_d"))
    assert check_sequence(DifferenceSequence((8, 7, 6, 4, 2), "nu_d"))
    assert check_sequence(DifferenceSequence((3, 1), "omega_d"))
    assert not check_sequence(DifferenceSequence((3,), "omega_d"))
    assert not check_sequence(DifferenceSequence((5, 1), "omega_d"))
    with pytest.raises(ValueError):
        DifferenceSequence((1,), "bogus")


def test_nu_row_count_law():
    # an even difference adds a row, an odd one widens every row
    for lam in enumerate_family("P_nu", SMALL):
        _, trace = nu_forward(lam)
        diffs = list(reversed(trace.diffs.values))
        for before, after, d in zip(trace.build, trace.build[1:], diffs):
            assert after.rows == before.rows + (1 if d % 2 == 0 else 0)
        # build[j] is the graph eta^(t-j); its row count is fixed by the difference d_(t-j+1)
        t = len(trace.diffs)
        for i, d in enumerate(trace.diffs.values):
            assert trace.build[t - i].rows == math.ceil((d + 1) / 2)


def test_sizes_telescope():
    for lam in enumerate_family("P_omega", SMALL):
        graph, trace = omega_forward(lam)
        sizes = [lam.size] + [obj.size for obj, _ in trace.steps]
        assert [a - b for a, b in zip(sizes, sizes[1:])] == list(trace.diffs.values)
        assert [g.size for g in trace.build][-1] == graph.size == lam.size


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(enumerate_family("P_omega", 22)))
def test_omega_round_trip_property(lam):
    graph, trace = omega_forward(lam)
    assert graph.rows == len(lam)
    assert omega_inverse(graph)[0] == lam
    assert check_claims(trace)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(enumerate_family("P_nu", 30)))
def test_nu_round_trip_property(lam):
    graph, trace = nu_forward(lam)
    assert graph.is_distinct() and graph.rows == len(lam)
    assert nu_inverse(graph)[0] == lam
    assert check_claims(trace)


def test_trace_json_and_table():
    _, trace = omega_forward(P((6, 4, 3, 3, 2)))
    data = trace.to_json()
    assert data["diffs"] == {"kind": "omega_d", "values": [1, 7, 1, 1, 3, 1]}
    assert data["steps"][0] == {"step": 1, "object": {"partition": [6, 5, 4, 2], "size": 17}, "delta": 1}
    lines = render_trace_table(trace).splitlines()
    assert len(lines) == 7 and lines[-1].startswith("lambda^6=(4)")
