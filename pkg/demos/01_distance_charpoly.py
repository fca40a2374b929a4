# Distance characteristic polynomial of a threshold graph, three ways.
#
# The graph 0^3 1^2 0^2 1 is built from eight vertices: three isolated, two
# dominating, two isolated, one dominating.  Its distance matrix only has
# entries 0, 1 and 2.
from threshdist import distance_matrix, full_charpoly, parse_sequence, to_blocks
from threshdist.charpoly import quotient_matrix
from threshdist.exactpoly import root_multiplicity

seq = parse_sequence("0^3 1^2 0^2 1")
print("creation sequence:", seq)
for row in distance_matrix(seq).tolist():
    print(" ".join(map(str, row)))

blocks = to_blocks(seq)
print("\nblocks:", blocks.runs)

# The 8x8 problem collapses to a 4x4 quotient matrix, one row per block.
for row in quotient_matrix(blocks).tolist():
    print(row)

# formula: closed expression in the block lengths
# quotient: Berkowitz on the 4x4 quotient
# oracle: Berkowitz on the full 8x8 distance matrix
for method in ("formula", "quotient", "oracle"):
    r = full_charpoly(blocks, method)
    print(f"{method:>9}: {r.full_poly}")

r = full_charpoly(blocks)
print("\nnon-trivial factor Q(x):", r.q_poly)
print("m(-2) =", r.multiplicities.m_minus2, " root multiplicity:", root_multiplicity(r.full_poly, -2))
print("m(-1) =", r.multiplicities.m_minus1, " root multiplicity:", root_multiplicity(r.full_poly, -1))

# Exact integers all the way: a 40-vertex graph is no problem.
big = full_charpoly((7, 5, 3, 9, 6, 10))
print("\nN = 40 constant term:", big.full_poly.coeff(0))
