#!/usr/bin/env python3
"""Traces, envelopes, and conformance verdicts.

A packet flow is just the sequence of ticks its packets arrive at.  This
walk-through builds a few flows and asks the three checkers whether they
stay inside a declared envelope, showing how verdicts come with concrete
evidence: a violating pair when the answer is no, and the set of pairs that
sit exactly on the boundary when the answer is yes.
"""

from fractions import Fraction as F

from maxplus_tc import (
    LambdaNuModel,
    SigmaRhoModel,
    Trace,
    TSpecModel,
    WindowMode,
    check_lambda_nu,
    check_sigma_rho,
    check_tspec,
)

# A well-behaved flow: one packet every 10 ticks.
steady = Trace((0, 10, 20, 30))

# The packet-domain envelope (lam, nu) says: packets n - m apart in count
# must be at least (n - m - nu)/lam apart in time.  Rate 1/10, no burst
# allowance, fits the steady flow exactly.
envelope = LambdaNuModel(lam=F(1, 10), nu=F(0))
report = check_lambda_nu(steady, envelope)
print("steady flow conforms:", report.conforms)
print("boundary-tight pairs:", report.tight_pairs)  # every pair is exact here

# Two packets in the same tick break the zero-burst envelope immediately.
bursty = Trace((0, 0, 10))
report = check_lambda_nu(bursty, envelope)
print("\nbursty flow conforms:", report.conforms)
w = report.witness
print(f"earliest violation: pair ({w.m}, {w.n}) needed {w.required} ticks, got {w.actual}")

# Granting one packet of burst allowance absorbs the double arrival.
report = check_lambda_nu(bursty, LambdaNuModel(lam=F(1, 10), nu=F(1)))
print("with burst allowance 1:", report.conforms)

# The TSN/DetNet-style view instead caps packets per window: at most 2 in
# any closed window of 10 ticks.
tspec = TSpecModel(tau=F(10), k_max=2, window_mode=WindowMode.CLOSED)
print("\nwindow budget on bursty flow:", check_tspec(bursty, tspec).conforms)
print(
    "tight windows (exactly at budget):",
    check_tspec(bursty, tspec).tight_pairs,
)

# Swapping to open windows (strictly shorter than 10 ticks) changes which
# packets can share a window: ticks 0 and 10 no longer do.
wide_open = TSpecModel(tau=F(10), k_max=1, window_mode=WindowMode.OPEN)
print("budget 1 with open windows:", check_tspec(Trace((0, 10, 20)), wide_open).conforms)

# With per-packet bit lengths, the bit-domain envelope bounds every window's
# traffic by rate * width + burst.
sized = Trace((0, 10), lengths=(100, 100))
print("\nbit-domain check:", check_sigma_rho(sized, SigmaRhoModel(sigma=F(100), rho=F(10))).conforms)
# 200 bits in one tick needs the whole burst budget at once:
slammed = Trace((5, 5), lengths=(100, 100))
report = check_sigma_rho(slammed, SigmaRhoModel(sigma=F(100), rho=F(10)))
print("simultaneous 200 bits vs burst 100:", report.conforms)
print(f"violating window [{report.witness.m}, {report.witness.n}] carried {report.witness.actual} bits")
