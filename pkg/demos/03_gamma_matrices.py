"""Gamma matrices over Gc and what non-associativity does to 2x2 operators."""
import itertools

from gcalgebra import GcNumber, GcVector2, anticommutator, gamma_matrices, identity, mat_mul, operator_associator_probe

g = gamma_matrices()
for k, m in enumerate(g):
    print(f"gamma{k} =\n{m}\n")

# Squares: gamma0^2 = -1, the others square to +1.
eye = identity()
for k, m in enumerate(g):
    sq = mat_mul(m, m)
    print(f"gamma{k}^2 = {'+I' if sq == eye else '-I' if sq == -eye else sq}")

# Distinct gammas anticommute.
for a, b in itertools.combinations(range(4), 2):
    print(f"{{gamma{a}, gamma{b}}} is zero:", anticommutator(g[a], g[b]).is_zero())

# Applying two matrices in turn is not the same as applying their product.
zero, i, j = GcNumber(), GcNumber(0, 1, 0), GcNumber(0, 0, 1)
diff, d = operator_associator_probe(g[1], g[2], GcVector2(i, zero))
print("\ngamma1 (gamma2 v) - (gamma1 gamma2) v for v = (i, 0):", diff, " size", d)
# With v = (j, 0) both sides happen to vanish because i j = 0.
print("same probe with v = (j, 0):", operator_associator_probe(g[1], g[2], GcVector2(j, zero))[1])
