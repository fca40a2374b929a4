# Four-block distance-cospectral pairs.
#
# G = 0^a1 1^a2 0^a3 1^a4 and G' = 0^b1 1^b2 0^b3 1^b4 are cospectral exactly
# when the pair fits the (alpha, beta, b1) construction below.
import json

from threshdist.cospectral import (
    corollary1_diagnose,
    corollary1_generate,
    necessary_fourblock,
    necessary_gamma,
    theorem2_check,
    theorem2_generate,
)

for params in [(1, 1, 2), (1, 2, 2), (2, 1, 3)]:
    pair = theorem2_generate(params)
    print(params, "->", pair.g, pair.h, "N =", pair.n_vertices, "verified:", pair.verified)
    print("   necessary conditions:", necessary_gamma(pair.g, pair.h), necessary_fourblock(pair.g, pair.h),
          " characterization:", theorem2_check(pair.g, pair.h))

# The (i, j, k, l) family: the second graph ends in 1^(2(i-1)), and the two
# vertex counts agree only when i + k = l + j + 1.
print("\n(4,2,1,2):", corollary1_generate((4, 2, 1, 2)).h)

# With the fourth exponent written 2i - 1 and i + k = l + j the counts agree,
# but the graphs are not cospectral.
print(json.dumps(corollary1_diagnose((2, 2, 2, 2)), indent=1))
