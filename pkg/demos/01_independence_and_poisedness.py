"""
Independence, the Hilbert function, and poisedness
==================================================

A node set is n-independent when every node gets its own fundamental
polynomial of degree <= n: value 1 there, 0 on the rest.  Equivalently the
collocation matrix (rows = nodes, columns = monomials) has full row rank.
Everything below runs over exact rationals.
"""

from nodecurves import (
    NodeSet,
    extend_to_poised,
    fundamental_polynomial,
    hilbert_function,
    is_independent,
    is_poised,
    space_dim,
    vanishing_basis,
)

# Three collinear nodes are dependent already at degree 1: a line can carry
# at most 2 degree-1 conditions.
collinear = NodeSet([(0, 0), (1, 0), (2, 0)])
print("collinear triple, n=1:")
print("  independent:", is_independent(collinear, 1))
print("  hilbert:    ", hilbert_function(collinear, 1), "of", len(collinear))

# The same three nodes spread out are fine.
triangle = NodeSet([(0, 0), (1, 0), (0, 1)])
print("triangle, n=1:")
print("  independent:", is_independent(triangle, 1))
print("  poised:     ", is_poised(triangle, 1))

# Poised means independent AND exactly dim Pi_n nodes, so degree-n
# interpolation has one and only one solution.
print("dim Pi_1 =", space_dim(1))

# Fundamental polynomial of the corner node: 1 at (0,0), 0 at the others.
p = fundamental_polynomial((0, 0), triangle, 1)
print("fundamental at (0,0):", p)
print("  checks:", p.eval(0, 0), p.eval(1, 0), p.eval(0, 1))

# Dependent sets have no fundamental for some nodes; the collinear middle
# node is such a case.
print("fundamental at (1,0) in the collinear triple:",
      fundamental_polynomial((1, 0), collinear, 1))

# The vanishing space collects every polynomial of degree <= n that is zero
# on the whole set.  Its dimension always equals dim Pi_n minus the Hilbert
# function -- for any set whatsoever.
four = NodeSet([(0, 0), (1, 0), (2, 0), (0, 1)])
space = vanishing_basis(four, 2)
print("vanishing space of a 4-node set at n=2:")
for q in space.basis:
    print("  ", q)
print("  dimension:", space.dimension,
      "= dim Pi_2 - hilbert =", space_dim(2) - hilbert_function(four, 2))

# Any independent set extends to a poised one by scanning a fixed spiral of
# integer nodes; the result is deterministic.
print("triangle extended to a 2-poised set:")
print("  ", extend_to_poised(triangle, 2))
