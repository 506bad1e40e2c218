"""Special functions behind the closed forms: incomplete gamma, 2F1, J1."""

# %%
import math

import numpy as np

from hapsjam.specfun import ConvergenceError, bessel_j1, gauss_2f1, ln_gamma, reg_upper_gamma

# %% log-gamma and the regularized upper incomplete gamma
print("ln Gamma(10) =", ln_gamma(10), " ln 9! =", math.log(math.factorial(9)))
for s, x in [(1, 1.0), (3, 2.0), (2.5, 0.0), (0.5, 4.0)]:
    print(f"Q({s}, {x}) = {reg_upper_gamma(s, x):.10f}")

# %% 2F1 on the negative axis, against two identities
print("2F1(1,1;2;-1) =", gauss_2f1(1, 1, 2, -1), " ln 2 =", math.log(2))
for z in (-0.3, -3.0, -300.0):
    print(f"2F1(0.7,2.1;2.1;{z}) = {gauss_2f1(0.7, 2.1, 2.1, z):.12g}"
          f"   (1-z)^-a = {(1 - z) ** -0.7:.12g}")

# %% large negative arguments go through the 1/z connection formula,
# including the integer b - a case the jamming formulas produce
a, mj = 3.0, 3.0
for z in (-0.5, -5.0, -5e3):
    print(f"2F1({a},{a + mj};{a + 1};{z}) = {gauss_2f1(a, a + mj, a + 1, z):.12g}")

# %% inputs where every route cancels badly are refused, not silently wrong
try:
    gauss_2f1(24.4, 27.4, 0.307, -82.8)
except ConvergenceError as exc:
    print("refused:", exc)

# %% J1 and its odd symmetry
x = np.linspace(0, 10, 6)
print(np.array([bessel_j1(v) for v in x]).round(6))
print("J1 at first maximum:", bessel_j1(1.8411837813))
