"""Invariant checks driven by hypothesis."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from maxplus_tc import (
    LambdaNuModel,
    Trace,
    TSpecModel,
    WindowMode,
    check_lambda_nu,
    check_tspec,
    check_tspec_pairwise,
    cumulative,
    interarrival,
    merge_traces,
    report_to_json,
    superpose_lambda_nu,
)

F = Fraction

rationals = st.builds(
    F, st.integers(min_value=-50, max_value=50), st.integers(min_value=1, max_value=20)
)
positive_rationals = st.builds(
    F, st.integers(min_value=1, max_value=50), st.integers(min_value=1, max_value=20)
)
burst_rationals = st.builds(
    F, st.integers(min_value=0, max_value=30), st.integers(min_value=1, max_value=6)
)


@st.composite
def traces(draw, max_packets=25, with_lengths=False):
    gaps = draw(
        st.lists(st.integers(min_value=0, max_value=20), max_size=max_packets)
    )
    arrivals = []
    tick = draw(st.integers(min_value=0, max_value=10))
    for g in gaps:
        arrivals.append(tick)
        tick += g
    lengths = None
    if with_lengths:
        lengths = tuple(
            draw(st.integers(min_value=1, max_value=500)) for _ in arrivals
        )
    return Trace(tuple(arrivals), lengths=lengths)


class TestRationalExactness:
    @given(rationals, rationals)
    def test_add_then_subtract_roundtrips(self, a, b):
        assert (a + b) - b == a

    @given(rationals, positive_rationals)
    def test_multiply_divide_roundtrips(self, a, b):
        assert (a * b) / b == a


class TestTraceInvariants:
    @given(traces())
    def test_interarrival_telescopes(self, trace):
        n_pk = trace.num_packets
        for l in range(0, min(n_pk, 6) + 1):
            for m in range(l, min(n_pk, 8) + 1):
                for n in range(m, n_pk + 1):
                    assert interarrival(trace, l, n) == (
                        interarrival(trace, l, m) + interarrival(trace, m, n)
                    )

    @given(traces(with_lengths=True))
    def test_cumulative_nondecreasing_with_jumps_at_arrivals(self, trace):
        horizon = (trace.arrivals[-1] if trace.num_packets else 0) + 2
        prev = 0
        for t in range(horizon):
            cur = cumulative(trace, t)
            assert cur >= prev
            if cur > prev:
                assert t in trace.arrivals
            prev = cur
        assert prev == sum(trace.lengths or ())


class TestCheckerInvariants:
    @given(traces(), positive_rationals, burst_rationals)
    @settings(max_examples=60)
    def test_matches_bruteforce(self, trace, lam, nu):
        model = LambdaNuModel(lam, nu)
        assert check_lambda_nu(trace, model).conforms == oracles.lam_nu_conforms(
            trace, model
        )

    @given(
        traces(),
        positive_rationals,
        burst_rationals,
        st.integers(min_value=0, max_value=6),
        st.integers(min_value=0, max_value=8),
    )
    @settings(max_examples=60)
    def test_loosening_preserves_conformance(self, trace, lam, nu, dl, dn):
        model = LambdaNuModel(lam, nu)
        if check_lambda_nu(trace, model).conforms:
            looser = LambdaNuModel(lam + F(dl, 4), nu + F(dn, 4))
            assert check_lambda_nu(trace, looser).conforms

    @given(
        traces(),
        positive_rationals,
        st.integers(min_value=1, max_value=6),
        st.sampled_from((WindowMode.CLOSED, WindowMode.OPEN)),
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=1, max_value=4),
    )
    @settings(max_examples=60)
    def test_tspec_loosening(self, trace, tau, k, mode, dk, tau_div):
        tspec = TSpecModel(tau, k, mode)
        if check_tspec(trace, tspec).conforms:
            looser = TSpecModel(tau / tau_div, k + dk, mode)
            assert check_tspec(trace, looser).conforms

    @given(
        traces(),
        positive_rationals,
        st.integers(min_value=1, max_value=6),
        st.sampled_from((WindowMode.CLOSED, WindowMode.OPEN)),
    )
    @settings(max_examples=60)
    def test_window_scan_equals_pairwise(self, trace, tau, k, mode):
        tspec = TSpecModel(tau, k, mode)
        assert report_to_json(check_tspec(trace, tspec)) == report_to_json(
            check_tspec_pairwise(trace, tspec)
        )

    @given(traces(max_packets=12), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60)
    def test_shift_invariance(self, trace, shift):
        model = LambdaNuModel(F(1, 3), F(3, 2))
        shifted = Trace(tuple(a + shift for a in trace.arrivals))
        assert (
            check_lambda_nu(trace, model).conforms
            == check_lambda_nu(shifted, model).conforms
        )


class TestMergeInvariants:
    @given(st.lists(traces(max_packets=10), min_size=2, max_size=4))
    @settings(max_examples=60)
    def test_tick_sequence_permutation_invariant(self, trace_list):
        base = merge_traces(trace_list).arrivals
        assert merge_traces(trace_list[::-1]).arrivals == base

    @given(
        st.lists(traces(max_packets=8), min_size=2, max_size=3),
        positive_rationals,
        burst_rationals,
    )
    @settings(max_examples=40)
    def test_thinning_never_breaks_aggregate_conformance(self, trace_list, lam, nu):
        # sub-flow deletion keeps any conforming aggregate conforming
        model = LambdaNuModel(lam, nu)
        merged = merge_traces(trace_list)
        if check_lambda_nu(merged, model).conforms:
            thinned = Trace(merged.arrivals[:: 2])
            assert check_lambda_nu(thinned, model).conforms

    @given(st.lists(traces(max_packets=8), min_size=2, max_size=4))
    @settings(max_examples=40)
    def test_aggregate_of_fitted_flows_conforms_to_sum(self, trace_list):
        from maxplus_tc import fit_lambda_nu

        models = [fit_lambda_nu(t, lam=F(1, 5)).model for t in trace_list]
        merged = merge_traces(trace_list)
        assert check_lambda_nu(merged, superpose_lambda_nu(models)).conforms
