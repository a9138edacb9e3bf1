"""Polar form, the exponential, and the associative slice SGc."""
import math

from gcalgebra import SgcNumber, euler_inequality_witness, exp_closed, exp_series, from_polar, sgc_mul, to_polar
from gcalgebra import GcNumber, norm

# Every Gc number has a polar chart (R, theta, phi) with q = R (cos theta + sin theta u(phi)),
# where u(phi) = cos(phi) i + sin(phi) j.
q = GcNumber(-0.4, 2.0, -1.3)
p = to_polar(q)
print("q =", q)
print(f"R = {p.R:.6f}, theta = {p.theta:.6f}, phi = {p.phi:.6f}")
print("back from polar:", from_polar(p))

# The power series of exp(theta u) lands on the closed form.
theta, phi = 2.5, 1.1
print("series :", exp_series(theta, phi))
print("closed :", exp_closed(theta, phi))

# Splitting the exponent into its i and j parts does not give the same number.
lhs, rhs, d = euler_inequality_witness(1.0, math.pi / 4)
print(f"exp(u) = {lhs}\nexp(cos(pi/4) i) exp(sin(pi/4) j) = {rhs}\ndistance = {d:.6f}")

# Fixing phi picks out a copy of the complex numbers: products add angles and multiply lengths.
a, b = SgcNumber(2, math.pi / 6, math.pi / 4), SgcNumber(3, math.pi / 3, math.pi / 4)
c = sgc_mul(a, b)
print(f"SGc product: R = {c.R}, theta = {c.theta:.6f}")
print("same as the Gc product:", c.to_gc(), "vs", a.to_gc() * b.to_gc())
print("norm multiplicative here:", norm(c.to_gc()), "=", norm(a.to_gc()) * norm(b.to_gc()))

# Across different phi the norm stops being multiplicative.
i, j = GcNumber(0, 1, 0), GcNumber(0, 0, 1)
print("N(ij) =", norm(i * j), " but N(i)N(j) =", norm(i) * norm(j))
