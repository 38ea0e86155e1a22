# ## The exact constants behind the universal laws
#
# Every normalization in this library reduces to gamma-function products,
# evaluated in log-domain.  This script prints the key tables and checks a
# Monte Carlo oracle against one of them.

import math

import numpy as np

import rmtlab

# ## Sphere areas
print("unit sphere areas S_d:")
for d in (1, 2, 3, 4, 10):
    print(f"  d = {d:2d}: {rmtlab.sphere_area(d):.10f}")

# ## The two-sided gamma product identity
# prod_{j<=m} Gamma((n+j)/2)/Gamma(j/2) = prod_{j<=n} Gamma((m+j)/2)/Gamma(j/2)
print("\nworst gamma identity residual for m, n <= 12:",
      max(rmtlab.gamma_identity_residual(m, n) for m in range(1, 13) for n in range(1, 13)))

# ## The det-power integral and the normalization of the universal law
print("\nintegral of det(1 + Z Z^T)^{-(m+n)/2} over real m x n matrices:")
for m, n in [(1, 1), (2, 1), (2, 2), (3, 3)]:
    print(f"  m={m}, n={n}: {rmtlab.selberg_Z_integral(m, n):.10f}")

# ## The Gaussian determinant integral and its Monte Carlo oracle
print("\nintegral of exp(-tr B B^T) |det B|^n vs Monte Carlo (N = 200000):")
rng = np.random.default_rng(8)
for m, n in [(2, 1), (2, 2), (3, 1)]:
    exact = rmtlab.gaussian_detn_integral(m, n)
    G = rng.standard_normal((200_000, m, m)) * math.sqrt(0.5)
    est = rmtlab.mc_mean(np.abs(np.linalg.det(G)) ** n)
    scale = math.pi ** (m * m / 2)
    print(f"  m={m}, n={n}: exact {exact:.6f}   MC {scale * est.mean:.6f} "
          f"+- {scale * est.stderr:.6f}")

# ## The rotation volume constant
print("\ntwo-sided rotation volume V_m:")
for m in (1, 2, 3, 6):
    print(f"  m = {m}: {rmtlab.ortho_volume(m):.10e}")
