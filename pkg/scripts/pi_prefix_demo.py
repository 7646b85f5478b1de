#!/usr/bin/env python3
"""Build an object of transcendental cardinality from a supplied bit table.

The table below lists the positions of the first 64 one-bits after the
point in the fractional part of pi (an input to the construction, not
computed here).  Adding 3 gives a prefix of the binary expansion of pi;
the demo prints the expansion text form, its exact dyadic value, and the
halving-orbit realization of the fractional part inside [0, inf].
"""

import argparse

from omegasum.families import Lazy
from omegasum.instances import lower_real_monoid
from omegasum.magnitude import BinaryExpansion, expansion_value, render_expansion
from omegasum.numbers import DyadicExt, ExtNat, LowerReal, dyadic_render

# positions of the 1-bits of pi - 3 = 0.001001000011111101101010...
PI_FRACTION_BIT_POSITIONS = (
    3, 6, 11, 12, 13, 14, 15, 16, 18, 19, 21, 23, 25, 29, 33, 38,
    40, 41, 43, 47, 48, 53, 57, 58, 60, 63, 64,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bits", type=int, default=64, help="table prefix to use")
    args = parser.parse_args()

    positions = tuple(p for p in PI_FRACTION_BIT_POSITIONS if p <= args.bits)
    expansion = BinaryExpansion(ExtNat(3), positions)
    print("expansion :", render_expansion(expansion, max_digits=args.bits))

    prefix = expansion_value(expansion)
    print("prefix    :", dyadic_render(prefix), f"= {float(prefix.value()):.15f}")

    # realize the fractional part as a halving-orbit sum in [0, inf]:
    # one term 2^-p per listed position, summed with the diagonal schedule
    lr = lower_real_monoid()
    fam = Lazy(
        lambda n: LowerReal.embed(
            DyadicExt(1, positions[n]) if n < len(positions) else DyadicExt(0, 0)
        ),
        support_bound=len(positions),
    )
    frac = lr.sum(fam)
    total = LowerReal.embed(DyadicExt(3, 0)) + frac
    shown = total.bound(args.bits)
    print("orbit sum :", dyadic_render(shown), f"= {float(shown.value()):.15f}")

    gap = prefix.minus(shown)
    print("agreement :", "exact" if gap is not None and gap.is_zero else "mismatch")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
