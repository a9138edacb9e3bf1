"""The Dirac operator over Gc, its square, and plane-wave solutions."""
import numpy as np

from gcalgebra import (
    PlaneWave,
    apply_dirac_analytic,
    build_dirac_operator,
    compose_symbol,
    eval_plane_wave,
    klein_gordon_symbol,
    residual_check,
    spinor_ratio,
)

H = build_dirac_operator()
print("H =", H)

# Squaring the symbol gives the Klein-Gordon operator on both components.
print("H*H == Klein-Gordon:", compose_symbol(H, H) == klein_gordon_symbol())

# A plane wave with m = 3, p = 4 has E = 5 and spinor ratio (E + p)/m = 3.
w = PlaneWave(3.0, 4.0)
print("\nE =", w.energy, " psi1/psi2 =", w.ratio)
print("psi(0.3, 0.1) =", eval_plane_wave(w, 0.3, 0.1))
print("|(H - m) psi| at that point:", apply_dirac_analytic(w, 0.3, 0.1).norm())

# Finite differences agree, with error shrinking four-fold when the step halves.
rep = residual_check(w, points=10, seed=1)
print(f"max FD residual {rep.max_fd:.3e}, halving ratio {rep.fd_ratio:.3f}")

# The ratio psi1/psi2 as a function of momentum for a few masses.
ps = np.linspace(-5, 5, 6)
for m in (0.5, 1.0, 3.0):
    row = ", ".join(f"{spinor_ratio(m, p):7.3f}" for p in ps)
    print(f"m = {m}: {row}")
