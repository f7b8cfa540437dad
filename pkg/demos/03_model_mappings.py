#!/usr/bin/env python3
"""Moving between the packet-rate envelope and the window-budget TSpec.

The two families bound the same flows from different angles, and each maps
into the other: a rate/burst envelope yields a whole family of valid
window budgets (one per window multiple, in two boundary flavors), and a
window budget yields a rate/burst envelope.  The mappings are sound but not
inverse to each other; the round trip inflates the rate by burst + 1.
"""

from fractions import Fraction as F

from maxplus_tc import (
    LambdaNuModel,
    MappingVariant,
    MaxPlusCurve,
    TSpecModel,
    check_lambda_nu,
    check_tspec,
    curve_to_lambda_nu,
    gen_extremal_lambda_nu,
    map_lambda_nu_to_tspec,
    map_tspec_to_lambda_nu,
)

envelope = LambdaNuModel(lam=F(1, 2), nu=F(4))
print("envelope: rate", envelope.lam, "burst", envelope.nu)

# Variant A keeps the window boundary inside (closed windows) and pays one
# extra packet; variant B shaves the boundary (open windows) and saves it.
for j in (1, 2, 3):
    a = map_lambda_nu_to_tspec(envelope, MappingVariant.A, j)
    b = map_lambda_nu_to_tspec(envelope, MappingVariant.B, j)
    print(
        f"  j={j}: closed {a.k_max} packets per {a.tau} ticks | "
        f"open {b.k_max} packets per <{b.tau} ticks"
    )

# Soundness in action: the envelope's own worst-case trace respects every
# mapped budget.
worst = gen_extremal_lambda_nu(envelope, 40)
ok = all(
    check_tspec(worst, map_lambda_nu_to_tspec(envelope, variant, j)).conforms
    for j in range(1, 6)
    for variant in (MappingVariant.A, MappingVariant.B)
)
print("extremal trace passes all mapped budgets:", ok)

# The reverse direction: K packets per tau ticks ensures rate K/tau with
# burst K - 1.
tspec = TSpecModel(tau=F(10), k_max=5)
back = map_tspec_to_lambda_nu(tspec)
print("\nwindow budget", tspec.k_max, "per", tspec.tau, "->", "rate", back.lam, "burst", back.nu)

# Round-tripping does not return where we started: through the tight
# variant (open, j=1) the rate comes back multiplied by burst + 1.
start = LambdaNuModel(lam=F(1, 10), nu=F(3))
roundtrip = map_tspec_to_lambda_nu(map_lambda_nu_to_tspec(start, MappingVariant.B, 1))
print("\nround trip:", start.lam, "->", roundtrip.lam, "=", f"(nu+1) = {start.nu + 1}x")

# General curves reduce to the envelope family too: the tightest rate/burst
# pair dominated by the curve on its horizon.
curve = MaxPlusCurve(tuple(F(max(n - 2, 0)) for n in range(11)))
reduction = curve_to_lambda_nu(curve)
print("\ncurve (n-2)+ on horizon 10 reduces to rate", reduction.model.lam, "burst", reduction.model.nu)
print(
    "envelope stays below the curve:",
    all(reduction.model.min_spacing(d) <= curve.values[d] for d in range(11)),
)
