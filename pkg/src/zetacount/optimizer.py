"""Multi-start simplex search over (c, r, eta) for good bound constants."""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .assembly import assemble_constants
from .params import ContourParams, ZetaLineHypotheses, validate


class NoFeasiblePointError(ValueError):
    pass


@dataclass(frozen=True)
class Objective:
    """What to minimise.

    ``min_c1``: C1 alone. ``weighted``: the full bound C1 log T + C2 log log T + C3
    at ``T_eval``. ``lex``: C1 first, C3 as a tie-breaker (C1 + 1e-6 C3).
    """

    mode: str = "min_c1"
    T_eval: float = None

    def __post_init__(self):
        if self.mode not in ("min_c1", "weighted", "lex"):
            raise ValueError("unknown objective mode %r" % self.mode)
        if self.mode == "weighted" and (self.T_eval is None or self.T_eval < math.e):
            raise ValueError("weighted objective needs T_eval >= e")

    @classmethod
    def parse(cls, text):
        """'c1', 'lex' or 'weighted:T'."""
        if text == "c1":
            return cls("min_c1")
        if text == "lex":
            return cls("lex")
        if text.startswith("weighted:"):
            return cls("weighted", float(text.split(":", 1)[1]))
        raise ValueError("objective must be c1, lex or weighted:T")

    def __call__(self, bc):
        if self.mode == "min_c1":
            return bc.C1
        if self.mode == "lex":
            return bc.C1 + 1e-6 * bc.C3
        lt = math.log(self.T_eval)
        return bc.C1 * lt + bc.C2 * math.log(lt) + bc.C3


@dataclass
class SearchResult:
    constants: object
    params: ContourParams
    value: float
    evaluations: int
    trace: list = field(default_factory=list)

    def trace_text(self):
        return "".join(line + "\n" for line in self.trace)


# The simplex works on u = (log(c - 1), log r, log eta): c > 1 and eta > 0 are
# built in, the rest of the admissibility chain is a +inf penalty.

def _to_u(c, r, eta):
    return np.array([math.log(c - 1.0), math.log(r), math.log(eta)])


def _from_u(u, template):
    c = 1.0 + math.exp(u[0])
    return template.with_(c=c, r=math.exp(u[1]), eta=math.exp(u[2]))


def project(params):
    """Pull a start point into the admissible set if a simple repair exists."""
    if validate(params).ok:
        return params
    c = max(params.c, 1.0 + 1e-9)
    eta = min(max(params.eta, 1e-12), 0.5, 0.5 * (c - 1.0))
    cand = params.with_(c=c, eta=eta)
    if validate(cand).ok:
        return cand
    # smallest r meeting delta >= 1/4 is (c - 1/2)^2 / (c - 3/4); nudge above it
    r_min = (c - 0.5) ** 2 / (c - 0.75) * (1 + 1e-6)
    cand = cand.with_(r=max(cand.r, r_min))
    return cand if validate(cand).ok else None


def optimize(objective, start_points, budget, hyp=None, seed=0, template=None):
    """Nelder-Mead from each start with a shared evaluation budget.

    ``start_points`` are (c, r, eta) triples. Infeasible starts are projected;
    the best admissible point over all starts is returned. Deterministic for a
    fixed seed and start list.
    """
    if budget < 100:
        raise ValueError("budget must be at least 100 evaluations")
    hyp = ZetaLineHypotheses() if hyp is None else hyp
    template = ContourParams(1.1, 1.2, 0.01) if template is None else template
    starts = []
    for c, r, eta in start_points:
        p = project(template.with_(c=float(c), r=float(r), eta=float(eta)))
        if p is not None:
            starts.append(p)
    if not starts:
        raise NoFeasiblePointError("no start point could be made admissible")

    rng = np.random.default_rng(seed)
    state = {"evals": 0, "best": None, "trace": []}

    def evaluate(params):
        if not validate(params).ok:
            return math.inf
        state["evals"] += 1
        bc = assemble_constants(params, hyp)
        val = objective(bc)
        best = state["best"]
        if best is None or (val, _key(params)) < (best[0], _key(best[1])):
            state["best"] = (val, params, bc)
            state["trace"].append(_trace_line(state["evals"], params, bc, val))
        return val

    per_start = max(1, budget // len(starts))
    for p in starts:
        remaining = budget - state["evals"]
        if remaining <= 0:
            break
        u0 = _to_u(p.c, p.r, p.eta)
        simplex = [u0]
        for k in range(3):
            step = np.zeros(3)
            step[k] = 0.05 * rng.uniform(0.5, 1.5) * max(1.0, abs(u0[k]))
            simplex.append(u0 + step)
        evaluate(p)
        minimize(lambda u: evaluate(_from_u(u, template.with_(T0=p.T0, J1=p.J1, J2=p.J2))),
                 u0, method="Nelder-Mead",
                 options={"initial_simplex": np.array(simplex),
                          "maxfev": min(per_start, remaining) - 1,
                          "xatol": 1e-10, "fatol": 1e-12})
    if state["best"] is None:
        raise NoFeasiblePointError("search never reached an admissible point")
    val, params, bc = state["best"]
    return SearchResult(bc, params, val, state["evals"], state["trace"])


def _key(params):
    return (params.c, params.r, params.eta)


def _trace_line(n, params, bc, val):
    return "%d c=%r r=%r eta=%r C1=%.9f C2=%.9f C3=%.9f C3p=%.9f objective=%.12g" % (
        n, params.c, params.r, params.eta, bc.C1, bc.C2, bc.C3, bc.C3prime, val)


DEFAULT_STARTS = [
    (1.000011314, 1.064340602, 4.2826451e-6),
    (1.0001, 1.06, 1e-5),
    (1.025253504, 1.182375395, 0.009944751381),
    (1.035766557, 1.229059659, 0.014325507360),
]


def parse_starts(text):
    """Whitespace-separated 'c r eta' per line; '#' comments allowed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 3:
            raise ValueError("line %d: expected 'c r eta'" % lineno)
        out.append(tuple(float(x) for x in parts))
    return out
