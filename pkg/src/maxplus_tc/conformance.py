"""Conformance checking and tightest-envelope fitting.

Checkers decide whether a trace satisfies a traffic model, quantifying over
every pair of real packets (the virtual origin index 0 is an accessor
convention, not a constraint anchor, so verdicts are invariant under time
shifts of the whole trace).  Every checker reports:

* a verdict,
* the earliest violation when there is one (smallest ending index n, then
  smallest starting index m),
* all tight pairs, i.e. pairs where the model bound holds with exact
  equality, sorted by (m, n),
* how many pairs the verdict quantified over.

All comparisons are exact.  Integer tick gaps are compared against
precomputed integer thresholds (the ceiling of the exact rational bound),
which is equivalent to the rational comparison and lets the O(N^2) pair
scans run as int64 vector operations.  Inputs whose magnitudes could
overflow int64 fall back to arbitrary-precision Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InfeasibleFitError, MissingLengthsError, UnboundedFitError
from .models import LambdaNuModel, SigmaRhoModel, TSpecModel, WindowMode
from .rational import RationalLike, ceil_div, rational_to_json
from .trace import Trace

# Stay well inside int64 for vectorized scans; beyond this use Python ints.
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class Witness:
    """One concrete constraint violation: the pair (m, n), the bound the
    model required, and the value the trace actually achieved."""

    m: int
    n: int
    required: Fraction
    actual: Fraction


@dataclass(frozen=True)
class ConformanceReport:
    conforms: bool
    witness: Witness | None
    tight_pairs: tuple[tuple[int, int], ...]
    checked_pairs: int

    def __post_init__(self):
        if self.conforms != (self.witness is None):
            raise ValueError("conforms must hold exactly when there is no witness")


@dataclass(frozen=True)
class FitResult:
    """Tightest model of a family that a trace conforms to.

    ``binding_pair`` is the packet pair (window) that forbids tightening the
    fitted parameter any further; None when nothing constrains it.
    """

    model: LambdaNuModel | TSpecModel | SigmaRhoModel
    binding_pair: tuple[int, int] | None


def report_to_json(report: ConformanceReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = {
            "m": report.witness.m,
            "n": report.witness.n,
            "required": rational_to_json(report.witness.required),
            "actual": rational_to_json(report.witness.actual),
        }
    return {
        "conforms": report.conforms,
        "witness": witness,
        "tight_pairs": [[m, n] for m, n in report.tight_pairs],
        "checked_pairs": report.checked_pairs,
    }


def fit_result_to_json(result: FitResult) -> dict:
    from .models import model_to_json

    return {
        "model": model_to_json(result.model),
        "binding_pair": list(result.binding_pair) if result.binding_pair else None,
    }


# ---------------------------------------------------------------------------
# Rate/burst (packet-domain) checking


def _gap_tables(model: LambdaNuModel, max_d: int) -> tuple[list[int], list[int | None]]:
    """Integer thresholds per packet-count gap d = 0..max_d.

    ``min_gap[d]`` is the smallest integer tick gap satisfying the bound;
    ``exact_gap[d]`` is the tick gap meeting it with equality, or None when
    the exact bound is not an integer (then no integer gap can be tight).
    """
    p, q = model.lam.numerator, model.lam.denominator
    r, s = model.nu.numerator, model.nu.denominator
    min_gap: list[int] = []
    exact_gap: list[int | None] = []
    for d in range(max_d + 1):
        excess = d * s - r  # sign of (d - nu)
        if excess <= 0:
            min_gap.append(0)
            exact_gap.append(0)  # bound is 0; tight means simultaneous
            continue
        num, den = excess * q, s * p
        min_gap.append(ceil_div(num, den))
        exact_gap.append(num // den if num % den == 0 else None)
    return min_gap, exact_gap


def _scan_gaps_python(
    arrivals: tuple[int, ...],
    min_gap: list[int],
    exact_gap: list[int | None],
) -> tuple[tuple[int, int] | None, list[tuple[int, int]]]:
    n_pk = len(arrivals)
    witness: tuple[int, int] | None = None
    tight: list[tuple[int, int]] = []
    for n in range(2, n_pk + 1):
        a_n = arrivals[n - 1]
        for m in range(1, n):
            gap = a_n - arrivals[m - 1]
            d = n - m
            if witness is None and gap < min_gap[d]:
                witness = (m, n)
            e = exact_gap[d]
            if e is not None and gap == e:
                tight.append((m, n))
    return witness, tight


def _scan_gaps_numpy(
    arrivals: tuple[int, ...],
    min_gap: list[int],
    exact_gap: list[int | None],
) -> tuple[tuple[int, int] | None, list[tuple[int, int]]]:
    a = np.asarray(arrivals, dtype=np.int64)
    n_pk = a.size
    best: tuple[int, int] | None = None  # (n, m), minimized lexicographically
    tight: list[tuple[int, int]] = []
    for d in range(1, n_pk):
        gaps = a[d:] - a[:-d]
        mg = min_gap[d]
        if mg > 0:
            bad = np.nonzero(gaps < mg)[0]
            if bad.size:
                i = int(bad[0])
                cand = (i + d + 1, i + 1)
                if best is None or cand < best:
                    best = cand
        e = exact_gap[d]
        if e is not None:
            eq = np.nonzero(gaps == e)[0]
            for i in eq.tolist():
                tight.append((i + 1, i + d + 1))
    witness = (best[1], best[0]) if best is not None else None
    return witness, tight


def check_lambda_nu(trace: Trace, model: LambdaNuModel) -> ConformanceReport:
    """Exhaustive pairwise check of the rate/burst arrival-time bound.

    Conforms iff every packet pair m < n has
    ``interarrival(m, n) >= (n - m - nu)+ / lam``.
    """
    arrivals = trace.arrivals
    n_pk = len(arrivals)
    checked = n_pk * (n_pk - 1) // 2
    if n_pk < 2:
        return ConformanceReport(True, None, (), checked)
    min_gap, exact_gap = _gap_tables(model, n_pk - 1)
    use_numpy = (
        arrivals[-1] < _INT64_SAFE
        and max(min_gap) < _INT64_SAFE
        and all(e is None or e < _INT64_SAFE for e in exact_gap)
    )
    scan = _scan_gaps_numpy if use_numpy else _scan_gaps_python
    witness_pair, tight = scan(arrivals, min_gap, exact_gap)
    witness = None
    if witness_pair is not None:
        m, n = witness_pair
        witness = Witness(
            m=m,
            n=n,
            required=model.min_spacing(n - m),
            actual=Fraction(arrivals[n - 1] - arrivals[m - 1]),
        )
    return ConformanceReport(
        conforms=witness is None,
        witness=witness,
        tight_pairs=tuple(sorted(tight)),
        checked_pairs=checked,
    )


def check_lambda_nu_via_convolution(trace: Trace, model: LambdaNuModel) -> ConformanceReport:
    """Same verdict as :func:`check_lambda_nu`, via the max-plus route.

    For each n it forms the running bound
    ``sup over m < n of (arrival(m) + min_spacing(n - m))`` and compares the
    actual arrival time against it, instead of testing pairs one by one.
    The two formulations are equivalent, which makes this an independent
    cross-check of the pairwise scan.
    """
    arrivals = trace.arrivals
    n_pk = len(arrivals)
    checked = n_pk * (n_pk - 1) // 2
    if n_pk < 2:
        return ConformanceReport(True, None, (), checked)
    p, q = model.lam.numerator, model.lam.denominator
    r, s = model.nu.numerator, model.nu.denominator
    den = s * p
    # alpha_num[d] / den is the exact required spacing for gap d
    alpha_num = [max(0, d * s - r) * q for d in range(n_pk)]
    witness = None
    tight: list[tuple[int, int]] = []
    for n in range(2, n_pk + 1):
        lhs = arrivals[n - 1] * den
        bound = None
        for m in range(1, n):
            term = arrivals[m - 1] * den + alpha_num[n - m]
            if bound is None or term > bound:
                bound = term
            if term == lhs:
                tight.append((m, n))
        if witness is None and bound is not None and lhs < bound:
            for m in range(1, n):
                if arrivals[m - 1] * den + alpha_num[n - m] > lhs:
                    witness = Witness(
                        m=m,
                        n=n,
                        required=model.min_spacing(n - m),
                        actual=Fraction(arrivals[n - 1] - arrivals[m - 1]),
                    )
                    break
    return ConformanceReport(
        conforms=witness is None,
        witness=witness,
        tight_pairs=tuple(sorted(tight)),
        checked_pairs=checked,
    )


# ---------------------------------------------------------------------------
# TSpec (sliding window) checking


def _window_starts(arrivals: tuple[int, ...], max_gap: int):
    """For each packet j (0-based) yield the smallest window start i with
    ``arrivals[j] - arrivals[i] <= max_gap``.  O(N) two-pointer."""
    i = 0
    for j in range(len(arrivals)):
        while arrivals[j] - arrivals[i] > max_gap:
            i += 1
        yield j, i


def check_tspec(trace: Trace, tspec: TSpecModel) -> ConformanceReport:
    """Check that no window of length tau holds more than k_max packets.

    Closed mode counts a packet exactly tau after the window start as inside;
    open mode requires strictly less than tau.  Equivalent to enumerating all
    packet pairs (m, n) that fit one window and requiring n - m + 1 <= k_max;
    the scan here slides the window in O(N).
    """
    arrivals = trace.arrivals
    n_pk = len(arrivals)
    checked = n_pk * (n_pk + 1) // 2
    if n_pk == 0:
        return ConformanceReport(True, None, (), checked)
    max_gap = tspec.max_gap_in_window()
    k = tspec.k_max
    witness = None
    tight: list[tuple[int, int]] = []
    for j, i in _window_starts(arrivals, max_gap):
        count = j - i + 1
        if witness is None and count > k:
            witness = Witness(
                m=i + 1, n=j + 1, required=Fraction(k), actual=Fraction(count)
            )
        m0 = j - k + 1
        if m0 >= 0 and arrivals[j] - arrivals[m0] <= max_gap:
            tight.append((m0 + 1, j + 1))
    return ConformanceReport(
        conforms=witness is None,
        witness=witness,
        tight_pairs=tuple(sorted(tight)),
        checked_pairs=checked,
    )


def check_tspec_pairwise(trace: Trace, tspec: TSpecModel) -> ConformanceReport:
    """Literal pairwise formulation of the TSpec check.

    Quantifies over every packet pair that fits in one window and requires
    the packet count not to exceed k_max.  Kept as an independent route for
    verifying the sliding-window scan; same report on every input.
    """
    arrivals = trace.arrivals
    n_pk = len(arrivals)
    checked = n_pk * (n_pk + 1) // 2
    max_gap = tspec.max_gap_in_window()
    k = tspec.k_max
    witness = None
    tight: list[tuple[int, int]] = []
    for n in range(1, n_pk + 1):
        for m in range(1, n + 1):
            if arrivals[n - 1] - arrivals[m - 1] > max_gap:
                continue
            count = n - m + 1
            if witness is None and count > k:
                witness = Witness(
                    m=m, n=n, required=Fraction(k), actual=Fraction(count)
                )
            if count == k:
                tight.append((m, n))
    return ConformanceReport(
        conforms=witness is None,
        witness=witness,
        tight_pairs=tuple(sorted(tight)),
        checked_pairs=checked,
    )


def max_window_count(trace: Trace, tau: RationalLike, window_mode: WindowMode) -> tuple[int, tuple[int, int] | None]:
    """Largest number of packets any window of length tau can hold, plus the
    earliest window (as a packet pair) achieving it.  (0, None) when empty."""
    arrivals = trace.arrivals
    if not arrivals:
        return 0, None
    probe = TSpecModel(tau=Fraction(tau), k_max=1, window_mode=window_mode)
    max_gap = probe.max_gap_in_window()
    best = 0
    best_pair: tuple[int, int] | None = None
    for j, i in _window_starts(arrivals, max_gap):
        count = j - i + 1
        if count > best:
            best = count
            best_pair = (i + 1, j + 1)
    return best, best_pair


# ---------------------------------------------------------------------------
# Bit-domain (cumulative traffic) checking


def _breakpoints(trace: Trace) -> tuple[list[int], list[int], list[int]]:
    """Distinct time points {0} + arrival ticks, with bits at each point and
    cumulative bits up to and including each point."""
    bits_at: dict[int, int] = {0: 0}
    for tick, bits in zip(trace.arrivals, trace.lengths or ()):
        bits_at[tick] = bits_at.get(tick, 0) + bits
    points = sorted(bits_at)
    at = [bits_at[t] for t in points]
    cum = []
    total = 0
    for b in at:
        total += b
        cum.append(total)
    return points, at, cum


def check_sigma_rho(trace: Trace, model: SigmaRhoModel) -> ConformanceReport:
    """Check the bit-domain bound: every closed window [s, t] between
    breakpoints carries at most ``rho * (t - s) + sigma`` bits.

    Since cumulative traffic is a step function, checking closed windows at
    the breakpoints {0} + arrival ticks is exactly the continuous-time
    supremum (windows opening just before a burst are covered by the closed
    window starting at it).  Witness and tight pairs label windows by their
    endpoint ticks, not packet indices.
    """
    if trace.lengths is None and trace.num_packets > 0:
        raise MissingLengthsError("bit-domain check needs per-packet lengths")
    points, at, cum = _breakpoints(trace)
    b = len(points)
    checked = b * (b + 1) // 2
    rho_n, rho_d = model.rho.numerator, model.rho.denominator
    sig_n, sig_d = model.sigma.numerator, model.sigma.denominator
    scale = rho_d * sig_d  # bits * scale  vs  rho_n*sig_d*dt + sig_n*rho_d
    rate_c = rho_n * sig_d
    burst_c = sig_n * rho_d
    use_numpy = (
        cum[-1] * scale < _INT64_SAFE
        and rate_c * (points[-1] + 1) + burst_c < _INT64_SAFE
    )
    if use_numpy:
        witness_idx, tight_idx = _scan_windows_numpy(points, at, cum, scale, rate_c, burst_c)
    else:
        witness_idx, tight_idx = _scan_windows_python(points, at, cum, scale, rate_c, burst_c)
    witness = None
    if witness_idx is not None:
        i, j = witness_idx
        width = points[j] - points[i]
        bits = cum[j] - cum[i] + at[i]
        witness = Witness(
            m=points[i],
            n=points[j],
            required=model.rho * width + model.sigma,
            actual=Fraction(bits),
        )
    tight = tuple(sorted((points[i], points[j]) for i, j in tight_idx))
    return ConformanceReport(
        conforms=witness is None,
        witness=witness,
        tight_pairs=tight,
        checked_pairs=checked,
    )


def _scan_windows_python(points, at, cum, scale, rate_c, burst_c):
    b = len(points)
    witness = None
    tight = []
    for j in range(b):
        for i in range(j + 1):
            bits = cum[j] - cum[i] + at[i]
            lhs = bits * scale
            rhs = rate_c * (points[j] - points[i]) + burst_c
            if witness is None and lhs > rhs:
                witness = (i, j)
            if lhs == rhs:
                tight.append((i, j))
    return witness, tight


def _scan_windows_numpy(points, at, cum, scale, rate_c, burst_c):
    pts = np.asarray(points, dtype=np.int64)
    at_a = np.asarray(at, dtype=np.int64)
    cum_a = np.asarray(cum, dtype=np.int64)
    b = pts.size
    best = None  # (j, i) lexicographic
    tight = []
    for k in range(b):
        if k == 0:
            bits = at_a
            widths = np.zeros(b, dtype=np.int64)
        else:
            bits = cum_a[k:] - cum_a[:-k] + at_a[:-k]
            widths = pts[k:] - pts[:-k]
        lhs = bits * scale
        rhs = rate_c * widths + burst_c
        bad = np.nonzero(lhs > rhs)[0]
        if bad.size:
            i = int(bad[0])
            cand = (i + k, i)
            if best is None or cand < best:
                best = cand
        for i in np.nonzero(lhs == rhs)[0].tolist():
            tight.append((i, i + k))
    witness = (best[1], best[0]) if best is not None else None
    return witness, tight


# ---------------------------------------------------------------------------
# Tightest-envelope fitting


def fit_lambda_nu(
    trace: Trace,
    *,
    lam: RationalLike | None = None,
    nu: RationalLike | None = None,
) -> FitResult:
    """Fit the tightest rate/burst envelope with one parameter fixed.

    With ``lam`` fixed, returns the minimal conforming burst allowance.
    With ``nu`` fixed, returns the minimal conforming rate (any lower rate
    would demand more spacing than the trace has); raises
    :class:`InfeasibleFitError` when simultaneous packets sit further than
    ``nu`` apart in count, and :class:`UnboundedFitError` when no pair
    constrains the rate at all.
    """
    if (lam is None) == (nu is None):
        raise ValueError("fix exactly one of lam and nu")
    arrivals = trace.arrivals
    n_pk = len(arrivals)
    if lam is not None:
        lam = Fraction(lam)
        if lam <= 0:
            raise ValueError(f"rate must be positive, got {lam}")
        p, q = lam.numerator, lam.denominator
        # nu >= d - lam*gap for every pair; maximize X = d*q - p*gap
        best_x: int | None = None
        binding: tuple[int, int] | None = None
        for n in range(2, n_pk + 1):
            a_n = arrivals[n - 1]
            for m in range(1, n):
                x = (n - m) * q - p * (a_n - arrivals[m - 1])
                if best_x is None or x > best_x:
                    best_x = x
                    binding = (m, n)
        if best_x is None or best_x < 0:
            return FitResult(LambdaNuModel(lam=lam, nu=Fraction(0)), None)
        return FitResult(LambdaNuModel(lam=lam, nu=Fraction(best_x, q)), binding)

    nu = Fraction(nu)
    if nu < 0:
        raise ValueError(f"burst allowance must be nonnegative, got {nu}")
    r, s = nu.numerator, nu.denominator
    best_num = best_den = None  # lam >= (d - nu)/gap; track the max as a fraction
    binding = None
    for n in range(2, n_pk + 1):
        a_n = arrivals[n - 1]
        for m in range(1, n):
            d = n - m
            excess = d * s - r
            if excess <= 0:
                continue
            gap = a_n - arrivals[m - 1]
            if gap == 0:
                raise InfeasibleFitError(
                    f"packets {m} and {n} arrive together but are {d} apart "
                    f"in count, more than the allowance {nu}",
                    pair=(m, n),
                )
            # candidate excess/(s*gap) vs best_num/best_den
            if best_num is None or excess * best_den > best_num * s * gap:
                best_num, best_den = excess, s * gap
                binding = (m, n)
    if best_num is None:
        raise UnboundedFitError(
            f"no packet pair exceeds the allowance {nu}; any positive rate conforms"
        )
    return FitResult(
        LambdaNuModel(lam=Fraction(best_num, best_den), nu=nu), binding
    )


def fit_tspec(
    trace: Trace, tau: RationalLike, window_mode: WindowMode = WindowMode.CLOSED
) -> FitResult:
    """Fit the minimal packet budget for windows of length tau.

    The fitted k_max equals the busiest window's packet count (at least 1),
    so the model conforms and k_max - 1 would not.
    """
    tau = Fraction(tau)
    if tau <= 0:
        raise ValueError(f"interval must be positive, got {tau}")
    count, pair = max_window_count(trace, tau, window_mode)
    return FitResult(
        TSpecModel(tau=tau, k_max=max(1, count), window_mode=window_mode), pair
    )
