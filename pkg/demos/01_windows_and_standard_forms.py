"""
Windows and standard forms for the three-loop quiver
====================================================

A walk through the core objects: the half-width region of allowed
weights, the generators it contains in each dimension, and the recursive
standard form attached to a dominant weight that falls outside it.
"""

from fractions import Fraction

from hallwin import builtin_quiver, decompose, window_generators
from hallwin.polytope import cached_polytope
from hallwin.quiver_weights import Weight, rho

quiver = builtin_quiver("tripled-jordan")

###############################################################################
# Window generators.
#
# For each dimension d and total weight w there is a finite list of
# dominant integral weights sitting inside the half-width region after
# the rho shift.  These are the building blocks everything else is
# assembled from.

for d in (1, 2, 3):
    for w in (0, 1):
        gens = window_generators(quiver, (d,), w)
        print(f"d={d}, w={w}: {[tuple(map(int, g.coords)) for g in gens]}")

###############################################################################
# The region itself.
#
# Membership is decided by exact rational arithmetic; at d=2 the
# half-width region is the band |c1 - c2| <= 3.

poly = cached_polytope(quiver, (2,))
half = Fraction(1, 2)
for a in range(5):
    chi = Weight.make((a, -a), (2,))
    print(f"chi=({a},{-a}) in half-region: {poly.contains(chi, half)}")

###############################################################################
# Standard forms.
#
# A dominant weight outside the region decomposes recursively: each node
# records an antidominant cocharacter lambda, a radius r > 1/2, and a
# weight N; the residual psi lies back inside the closed region, and
#
#     chi + rho = -(sum of r_j * N_j) + psi.

chi = Weight.make((5, -5), (2,))
form = decompose(quiver, (2,), chi)
for node in form.nodes:
    print(f"node: lambda={tuple(map(int, node.lam.coords))}, "
          f"r={node.r}, N={tuple(map(str, node.N.coords))}")
print(f"psi = {tuple(map(str, form.psi.coords))}")
print(f"leaf partition A = {form.partition}")

# The reconstruction identity holds exactly.
recon = form.psi
for node in form.nodes:
    recon = recon - node.N.scale(node.r)
assert recon == chi + rho((2,))
print("exact reconstruction: OK")
