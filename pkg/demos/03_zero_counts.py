# %% [markdown]
# # The bounds against real zeros
#
# The bundled list has every zero with 0 < gamma <= 1000. We recount them
# from sign changes of Hardy's Z function, then compare N(T) and S(T) with
# the explicit bounds.

# %%
import math

import numpy as np

from zetacount.assembly import corollary_n_bound, corollary_s_bound
from zetacount.zeros import bundled_zeros, count_zeros, hardy_zeros, main_term, s_of_T

zl = bundled_zeros()
found = hardy_zeros(1000.0)
print("fixture %d zeros, Hardy Z finds %d" % (len(zl), len(found)))
print("largest disagreement in ordinates: %.1e" % np.max(np.abs(np.subtract(found, zl.ordinates))))

# %%
for T in (20, 50, 100, 200, 500, 1000):
    n = count_zeros(T, zl)
    dev = abs(n - main_term(T))
    print("T=%5d  N=%4d  |N - main|=%.3f  bound=%.3f  |S|=%.3f  S bound=%.3f"
          % (T, n, dev, corollary_n_bound(T), abs(s_of_T(T, zl)), corollary_s_bound(T)))

# %% [markdown]
# At these heights the bound is loose by a factor of about five. The
# constant term dominates; log T is only 7 at T = 1000.

# %%
T = np.linspace(math.e, 1000, 4000)
S = np.array([s_of_T(t, zl) for t in T])
print("max |S(T)| on [e, 1000]: %.4f at T = %.2f" % (np.abs(S).max(), T[np.abs(S).argmax()]))
