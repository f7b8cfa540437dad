"""Trace generators: conforming traffic, boundary-tight traffic, and
seeded randomized traffic for property suites.

Randomness comes from a tiny 64-bit linear congruential generator rather
than the standard library, so that a given seed produces the same trace in
any implementation of the same recurrence (the multiplier/increment pair
and the high-32-bit extraction are fixed constants of the format).
"""

from __future__ import annotations

from fractions import Fraction

from .conformance import check_lambda_nu, fit_lambda_nu
from .errors import GridError
from .models import LambdaNuModel, TSpecModel, WindowMode
from .rational import ceil_div
from .trace import Trace

_LCG_A = 6364136223846793005
_LCG_C = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    """Deterministic 64-bit LCG; each draw advances the state once and
    yields the high 32 bits."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u32(self) -> int:
        self.state = (_LCG_A * self.state + _LCG_C) & _MASK64
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction; bias is
        irrelevant at the ranges used here and keeps draws portable)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u32() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def gen_periodic(period: int, phase: int, count: int) -> Trace:
    """Strictly periodic trace: packet n arrives at phase + (n-1)*period.

    Conforms to rate 1/period with zero burst allowance, and with phase 0
    the zero-burst fit recovers that rate exactly.
    """
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    if phase < 0:
        raise ValueError(f"phase must be >= 0, got {phase}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    return Trace(arrivals=tuple(phase + (n - 1) * period for n in range(1, count + 1)))


def gen_extremal_lambda_nu(model: LambdaNuModel, count: int) -> Trace:
    """Earliest integer-tick trace conforming to a rate/burst envelope.

    Greedy construction: packet 1 arrives at tick 0 and each later packet
    arrives at the first tick every earlier packet's spacing bound allows,
    i.e. ``arrival(n) = max over m < n of arrival(m) + ceil(min_spacing(n - m))``.
    When the exact bounds land on the tick grid this collapses to
    ``arrival(n) = min_spacing(n - 1)`` anchored at the first packet.  The
    trace opens with a burst of floor(nu) + 1 simultaneous packets, and for
    integer nu the fitted burst allowance at the model's rate is exactly nu.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if count == 0:
        return Trace(arrivals=())
    p, q = model.lam.numerator, model.lam.denominator
    r, s = model.nu.numerator, model.nu.denominator
    # integer spacing floor per packet-count gap: ceil((d - nu)+ / lam)
    min_gap = [0] * count
    for d in range(1, count):
        excess = d * s - r
        min_gap[d] = ceil_div(excess * q, s * p) if excess > 0 else 0
    arrivals = [0] * count
    for n in range(1, count):
        arrivals[n] = max(arrivals[m] + min_gap[n - m] for m in range(n))
    return Trace(arrivals=tuple(arrivals))


def gen_tspec_extremal(tspec: TSpecModel, count: int) -> Trace:
    """Trace that saturates a TSpec: bursts of k_max simultaneous packets.

    Open mode spaces bursts exactly tau apart (no window shorter than tau
    spans two bursts); closed mode needs tau + 1 ticks (a closed window of
    length tau would otherwise catch both).  Requires integer tau so the
    spacing lands on the tick grid.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if tspec.tau.denominator != 1:
        raise GridError(
            f"burst spacing needs an integer interval, got {tspec.tau}"
        )
    spacing = int(tspec.tau)
    if tspec.window_mode is WindowMode.CLOSED:
        spacing += 1
    arrivals = []
    burst = 0
    while len(arrivals) < count:
        arrivals.extend([burst * spacing] * min(tspec.k_max, count - len(arrivals)))
        burst += 1
    return Trace(arrivals=tuple(arrivals))


def gen_jittered(
    period: int, jitter: int, seed: int, count: int
) -> tuple[Trace, LambdaNuModel]:
    """Periodic trace with bounded per-packet jitter, plus its fitted envelope.

    Packet n is displaced from (n-1)*period by a seeded uniform draw from
    [0, jitter] (one LCG draw per packet), then the sequence is sorted.
    The trace is fitted at the nominal rate 1/period and checked against
    the fitted envelope before returning, so the pair is conforming by
    construction.
    """
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    if not 0 <= jitter <= period - 1:
        raise ValueError(f"jitter must be in [0, period-1], got {jitter}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    rng = Lcg64(seed)
    arrivals = sorted(
        (n - 1) * period + rng.next_u32() % (jitter + 1) for n in range(1, count + 1)
    )
    trace = Trace(arrivals=tuple(arrivals))
    if count == 0:
        return trace, LambdaNuModel(lam=Fraction(1, period), nu=Fraction(0))
    fitted = fit_lambda_nu(trace, lam=Fraction(1, period)).model
    report = check_lambda_nu(trace, fitted)
    assert report.conforms, "fitted envelope must cover its own trace"
    return trace, fitted
