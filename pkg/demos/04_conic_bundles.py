#!/usr/bin/env python3
"""Discriminant loci of the conic-bundle models and the blow-up ledger.

The twistor space becomes a conic bundle over (a resolution of) the model
surface after an explicit chain of blow-ups; both the chain and the
discriminant locus are pure bookkeeping over the multiplicity vector.
"""

from minitwistor import blow_up_schedule, discriminant_deformed, discriminant_joyce
from minitwistor.render import discriminant_latex, discriminant_text, schedule_text

seq = (1, 2, 3, 1, 1)
print(f"weight sequence {seq}\n")

# Over the torus-invariant metric every interior index contributes.
print(discriminant_text(discriminant_joyce(seq)))

# After the equivariant deformation the fibers outside the regular window
# disappear and exactly n + r - s hyperplane sections take their place.
print()
print(discriminant_text(discriminant_deformed(seq)))

# The same report as a LaTeX table.
print()
print(discriminant_latex(discriminant_deformed(seq)))

# The blow-up ledger: stage count is max(l_i) + 2, except that a single
# stage suffices for the semi-free action.
for s in [(1, 1, 1, 1), (1, 2, 1, 2, 1), (1, 2, 5, 3, 1)]:
    print()
    print(f"schedule for {s}:")
    print(schedule_text(blow_up_schedule(s)))
