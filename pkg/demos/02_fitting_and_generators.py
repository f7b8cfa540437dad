#!/usr/bin/env python3
"""Fitting tightest envelopes and generating boundary traffic.

Fitting answers "what is the strongest claim this trace supports?"; the
generators answer the converse, "what is the worst traffic this claim
allows?".  Running one into the other lands exactly on the boundary.
"""

from fractions import Fraction as F

from maxplus_tc import (
    LambdaNuModel,
    TSpecModel,
    WindowMode,
    check_lambda_nu,
    fit_lambda_nu,
    fit_tspec,
    gen_extremal_lambda_nu,
    gen_jittered,
    gen_periodic,
    gen_tspec_extremal,
)

# Fix the rate at 1/10 and ask for the smallest burst allowance covering a
# trace with a double arrival.
trace = gen_periodic(10, 0, 6)
print("periodic trace:", trace.arrivals)
fit = fit_lambda_nu(trace, nu=F(0))
print("fitted rate at zero burst:", fit.model.lam, "binding pair:", fit.binding_pair)

# The binding pair is the evidence of tightness: nudge the fitted parameter
# past it and conformance breaks.
tighter = LambdaNuModel(lam=fit.model.lam - F(1, 1000), nu=F(0))
print("slightly slower rate still conforms?", check_lambda_nu(trace, tighter).conforms)

# The extremal generator emits the earliest trace an envelope allows: a
# burst of floor(nu) + 1 packets at tick 0, then the steady minimum spacing.
envelope = LambdaNuModel(lam=F(1), nu=F(2))
extremal = gen_extremal_lambda_nu(envelope, 7)
print("\nextremal trace for rate 1, burst 2:", extremal.arrivals)
refit = fit_lambda_nu(extremal, lam=envelope.lam)
print("refitted burst allowance:", refit.model.nu, "(recovers the envelope exactly)")

# Window-budget fitting: the busiest window of length 2 in (0, 1, 2) holds
# all three packets when the boundary counts, two when it does not.
from maxplus_tc import Trace

steps = Trace((0, 1, 2))
print("\nclosed-window fit:", fit_tspec(steps, F(2), WindowMode.CLOSED).model.k_max)
print("open-window fit:  ", fit_tspec(steps, F(2), WindowMode.OPEN).model.k_max)

# TSpec boundary traffic: bursts of k_max packets, spaced so that no window
# in the declared mode ever sees two bursts.
tspec = TSpecModel(tau=F(10), k_max=2, window_mode=WindowMode.OPEN)
print("\nopen-mode bursts:  ", gen_tspec_extremal(tspec, 6).arrivals)
tspec_closed = TSpecModel(tau=F(10), k_max=2, window_mode=WindowMode.CLOSED)
print("closed-mode bursts:", gen_tspec_extremal(tspec_closed, 6).arrivals)

# The jittered generator wobbles a periodic flow with a seeded deterministic
# draw and returns the envelope it fitted (and verified) for its output.
jittered, fitted = gen_jittered(period=10, jitter=4, seed=2024, count=8)
print("\njittered trace:", jittered.arrivals)
print("fitted envelope: rate", fitted.lam, "burst", fitted.nu)
print("same seed reproduces it:", gen_jittered(10, 4, 2024, 8)[0] == jittered)
