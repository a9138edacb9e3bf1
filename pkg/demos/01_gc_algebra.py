"""A tour of Gc arithmetic: products, zero divisors and a broken associative law."""
from gcalgebra import GC_TABLE, GcNumber, check_associative, conj, find_zero_divisors, norm

# Gc has three basis units 1, i, j with ii = jj = -1 and ij = ji = 0.
one, i, j = GcNumber(1), GcNumber(0, 1, 0), GcNumber(0, 0, 1)
print("i*i =", i * i)
print("j*j =", j * j)
print("i*j =", i * j)

# Products expand bilinearly, like complex numbers with one extra axis.
x, y = GcNumber(1, 2, 0), GcNumber(3, 0, 4)
print(f"({x}) * ({y}) =", x * y)

# The conjugate flips both imaginary parts, and q* q is a plain real number.
q = GcNumber(1, 1, 1)
print("conj(q) * q =", conj(q) * q, " norm(q)^2 =", norm(q) ** 2)

# Two nonzero numbers can multiply to zero, so Gc is not a division algebra.
print("zero divisors among basis pairs:", [w.describe() for w in find_zero_divisors(GC_TABLE)])
print("(i + j)(i - j) =", (i + j) * (i - j))

# Bracketing matters: (ii)j and i(ij) differ.
for w in check_associative(GC_TABLE):
    print("associativity fails:", w.describe())
