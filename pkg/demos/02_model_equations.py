#!/usr/bin/env python3
"""Print the explicit projective model for a few circle actions.

The quotient surface of the twistor space by the complexified circle is a
degree-2m surface in CP^{m+2} cut out by one quadratic equation
z_{m+1} z_{m+2} = Q(z_0, ..., z_m); its coefficients are exact rationals in
the conformal invariants lambda_i, so everything below is bit-reproducible.
"""

from fractions import Fraction

from minitwistor import INF, minitwistor_model
from minitwistor.render import equation_latex, equation_text, model_text

print("the smooth quadric: the semi-free action on any nCP^2")
model = minitwistor_model((1, 1, 1, 1))
print("  " + equation_text(model))
print(f"  singularities: {model.singularities or 'none'}")

print("\nsmallest non-trivial action (1,2,1): one quotient pair, moduli of dim 1")
model = minitwistor_model((1, 2, 1))
print("  " + equation_text(model))
print("  " + equation_latex(model))
print(f"  moduli dimension: {model.moduli_dim}")

print("\nfull report for the maximal action at n = 4")
print(model_text(minitwistor_model((1, 2, 5, 3, 1))))

print("\ncustom conformal invariants move the reducible fibers")
lams = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(5), INF)
model = minitwistor_model((1, 2, 3, 1), lambdas=lams)
print("  " + equation_text(model))
print(f"  reducible fibers over {model.reducible_fibers}")

print("\nthe sign c = -1 flips the equation")
model = minitwistor_model((1, 2, 3, 1), lambdas=lams, c_sign=-1)
print("  " + equation_text(model))

print("\nfixed twistor lines appear where the multiplicity vanishes")
model = minitwistor_model((1, 2, 1, 1, 1))
print(f"  l-free indices of (1,2,1,1,1): {model.fixed_lines}")
print(f"  irreducible marked fibers over {model.irreducible_marked_fibers}")
