# %% [markdown]
# # Does the envelope really dominate log|f_N|?
#
# The argument needs F(theta) >= (1/N) log|f_N(c + r e^{i theta})| on the
# whole circle. We test this directly, and find the one place it can fail.

# %%
import math

import numpy as np

from zetacount.fcr import F_pointwise
from zetacount.params import ContourParams, ZetaLineHypotheses
from zetacount.zetabounds import f_N

hyp = ZetaLineHypotheses()
p = ContourParams(1.025253504, 1.182375395, 0.009944751381)
T, N = 500.0, 4

theta = np.linspace(0, math.pi, 2001)
lhs = np.array([math.log(abs(f_N(p.c + p.r * complex(math.cos(t), math.sin(t)), T, N))) / N
                for t in theta])
printed = np.array([F_pointwise(t, T, p, hyp) for t in theta])
fixed = np.array([F_pointwise(t, T, p, hyp, "zeta") for t in theta])

print("smallest margin, 1 + eta constant:     %+.4f" % (printed - lhs).min())
print("smallest margin, zeta(1 + eta) constant: %+.4f" % (fixed - lhs).min())

# %% [markdown]
# The negative margin lives on the short arc where -eta <= sigma <= 0.

# %%
bad = theta[printed < lhs]
if bad.size:
    sig = p.c + p.r * np.cos(bad)
    print("failing arc: theta in [%.5f, %.5f], sigma in [%.5f, %.5f], eta = %.5f"
          % (bad.min(), bad.max(), sig.min(), sig.max(), p.eta))
