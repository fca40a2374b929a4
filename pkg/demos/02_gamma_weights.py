# Parity-alternating index sequences and the gamma weights.
#
# I(n, l) collects increasing sequences in 1..n whose parities alternate and
# whose last term has the parity of n.  gamma sums the products of the
# sequence entries selected by each member.
from threshdist.exactpoly import X
from threshdist.gamma import enumerate_index_sequences, gamma_table, gamma_value, p_closed_form, p_tridiag_recurrence

print("I(7,4) =", enumerate_index_sequences(7, 4))
print("I(6,4) =", enumerate_index_sequences(6, 4))

a = [3, 4, 1, 2]
print("\ngamma table of", a, "=", gamma_table(a).values)
print("I(4,2) =", enumerate_index_sequences(4, 2), "-> gamma =", gamma_value(a, 2))

# The tridiagonal determinant and its gamma expansion coincide exactly.
z, y = X + 2, X + 1
neg = [-v for v in a]
print("\ndeterminant :", p_tridiag_recurrence(neg, z, y))
print("gamma form  :", p_closed_form(neg, z, y))
