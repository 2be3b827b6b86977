# %% [markdown]
# # Searching for better contours
#
# C1 depends only on (c, r). The admissible set forces c > 1 and
# delta >= 1/4, and the minimum sits on the edge of both.

# %%
import math

import numpy as np

from zetacount.assembly import assemble_constants
from zetacount.optimizer import DEFAULT_STARTS, Objective, optimize
from zetacount.params import ContourParams, validate

res = optimize(Objective("min_c1"), DEFAULT_STARTS, 2000)
p = res.params
print("best C1 = %.7f after %d evaluations" % (res.value, res.evaluations))
print("c - 1 = %.2e, r = %.7f, delta = %.6f" % (p.c - 1, p.r, p.delta))

# %% [markdown]
# A slice of C1 over r with c pinned just above 1 shows the edge.

# %%
for r in np.linspace(0.999, 1.10, 8):
    q = ContourParams(1 + 1e-9, r, 1e-10)
    if validate(q).ok:
        print("r=%.4f  C1=%.6f" % (r, assemble_constants(q).C1))
    else:
        print("r=%.4f  infeasible: %s" % (r, ", ".join(validate(q).violations)))

# %% [markdown]
# At a fixed height the whole bound matters, and small C1 is a bad trade
# because C3 blows up as eta shrinks. Compare each published row's bound at
# T = 1e10 with what the search finds.

# %%
T = 1e10
obj = Objective("weighted", T)
lt = math.log(T)
for c, r, eta in DEFAULT_STARTS[::2] + DEFAULT_STARTS[3:]:
    bc = assemble_constants(ContourParams(c, r, eta))
    print("start c=%.6f: bound at 1e10 = %.4f" % (c, obj(bc)))
best = optimize(obj, DEFAULT_STARTS, 2000)
bc = best.constants
print("search: %.4f with C1=%.5f C2=%.5f C3=%.4f" % (best.value, bc.C1, bc.C2, bc.C3))
