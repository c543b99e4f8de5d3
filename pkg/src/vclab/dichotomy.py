"""Traces, dichotomy counting, shattering, brute-force VC-dimension, and
VC-density estimation.

Exact counting is provided for the linear-threshold class (margin LP over all
labelings) and for the combinatorial baselines (closed forms). For nonlinear
networks counts come from weight sampling and are certified lower bounds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import linsep
from .errors import CapExceededError, ConfigError
from .hypotheses import (
    ActivationSpec,
    BaselineClass,
    ExplicitFinite,
    Hypothesis,
    LayerSpec,
    LinearThreshold,
    NetworkSpec,
    UnionOfMPoints,
    baseline_membership,
    evaluate,
    forward_batch,
)
from .pointsets import PointSet, random_general_position, simplex_vertices

DEFAULT_EXACT_POINT_CAP = 20
DEFAULT_EXACT_DIM_CAP = 4
DEFAULT_SHATTER_CAP = 16


@dataclass(frozen=True)
class Trace:
    """A hypothesis restricted to a finite point set, as a bit vector."""

    bits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.bits)


def trace(h, B: PointSet) -> Trace:
    """Trace of a hypothesis on B: bit i = h(B[i]).

    `h` may be a Hypothesis, a (baseline_class, parameter) pair, or a
    callable point -> bit.
    """
    if isinstance(h, Hypothesis):
        bits = tuple(evaluate(h, p) for p in B.points)
    elif isinstance(h, tuple) and len(h) == 2 and isinstance(h[0], BaselineClass):
        cls, param = h
        bits = tuple(baseline_membership(cls, param, p) for p in B.points)
    elif callable(h):
        bits = tuple(int(h(p)) for p in B.points)
    else:
        raise TypeError(f"cannot trace {h!r}")
    return Trace(bits=bits)


def as_network(cls) -> NetworkSpec:
    """View a class as a network for weight sampling; LinearThreshold becomes
    a single threshold unit."""
    if isinstance(cls, NetworkSpec):
        return cls
    if isinstance(cls, LinearThreshold):
        act = ActivationSpec(kind="threshold")
        return NetworkSpec(input_dim=cls.dim, layers=(LayerSpec(activations=(act,)),))
    raise TypeError(f"no network view for {cls!r}")


# --------------------------------------------------------------------------
# Counting
# --------------------------------------------------------------------------


def count_dichotomies_exact_ltf(
    B: PointSet,
    max_points: int = DEFAULT_EXACT_POINT_CAP,
    max_dim: int = DEFAULT_EXACT_DIM_CAP,
) -> int:
    """Exact number of affine-threshold dichotomies of B, by testing every
    labeling with the maximum-margin LP."""
    if len(B) > max_points:
        raise CapExceededError(f"|B| = {len(B)} exceeds cap {max_points}")
    if len(B) and B.dim > max_dim:
        raise CapExceededError(f"dimension {B.dim} exceeds cap {max_dim}")
    return len(linsep.enumerate_ltf_traces(B.as_array()))


def default_weight_box(B: PointSet) -> tuple[float, float]:
    """Symmetric sampling box wide enough that biases can offset any point."""
    if len(B) == 0:
        return (-1.0, 1.0)
    r = 1.0 + float(np.max(np.abs(B.as_array())))
    return (-r, r)


def sampled_trace_set(
    cls, B: PointSet, budget: int, seed: int, box: tuple[float, float] | None = None
) -> set[tuple[int, ...]]:
    """Distinct traces found by drawing `budget` weight vectors componentwise
    uniform on `box`. A subset of the true trace set: every returned trace is
    realized by an explicit weight vector."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    net = as_network(cls)
    if len(B) and B.dim != net.input_dim:
        raise ValueError(f"point dim {B.dim} != network input_dim {net.input_dim}")
    lo, hi = box if box is not None else default_weight_box(B)
    rng = np.random.default_rng(seed)
    X = B.as_array()
    found: set[tuple[int, ...]] = set()
    chunk = 8192
    drawn = 0
    while drawn < budget:
        take = min(chunk, budget - drawn)
        W = rng.uniform(lo, hi, size=(take, net.weight_count))
        drawn += take
        out = forward_batch(net, W, X) > 0
        for row in np.unique(out, axis=0):
            found.add(tuple(int(v) for v in row))
    return found


def count_dichotomies_sampled(
    cls, B: PointSet, budget: int, seed: int, box: tuple[float, float] | None = None
) -> int:
    """Certified lower bound on the dichotomy count of B (tag: lower_bound).

    Monotone nondecreasing in budget for a fixed seed: the first `budget`
    draws of a longer run coincide with a shorter run's draws.
    """
    return len(sampled_trace_set(cls, B, budget, seed, box=box))


def growth_function_oracle(c: BaselineClass, n: int):
    """Exact growth function value for a baseline class at set size n.

    Python integers are unbounded, so no overflow guard is needed.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if isinstance(c, UnionOfMPoints):
        return sum(math.comb(n, i) for i in range(min(c.capacity, n) + 1))
    if isinstance(c, LinearThreshold):
        if n <= c.dim + 1:
            return 2**n
        # Cover's count for n points in general position in R^d
        return 2 * sum(math.comb(n - 1, i) for i in range(c.dim + 1))
    if isinstance(c, ExplicitFinite):
        if n >= len(c.domain):
            return len(set(c.traces))
        best = 0
        subsets = itertools.combinations(range(len(c.domain)), n)
        for count, idx in enumerate(subsets):
            if count > 100000:
                raise CapExceededError("too many subsets for exhaustive growth count")
            best = max(best, len({tuple(t[i] for i in idx) for t in c.traces}))
        return best
    raise TypeError(f"not a baseline class: {c!r}")


def sauer_shelah_cap(d: int, n: int):
    """Sum_{i=0}^{min(d,n)} C(n, i): the exact ceiling on the number of
    dichotomies of an n-set for a class of VC-dimension d."""
    if d < 0 or n < 0:
        raise ValueError("d and n must be >= 0")
    return sum(math.comb(n, i) for i in range(min(d, n) + 1))


# --------------------------------------------------------------------------
# Shattering and VC-dimension
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ShatterResult:
    """`exact=False` marks a sampled negative: the missing labeling was not
    found within budget, which does not prove it unrealizable."""

    shattered: bool
    exact: bool

    def __bool__(self) -> bool:
        return self.shattered


def _domain_indices(c, B: PointSet) -> list[int] | None:
    """Positions of B's points inside the class's declared domain, or None if
    some point lies outside it."""
    out = []
    for p in B.points:
        try:
            out.append(c.domain.index(p))
        except ValueError:
            return None
    return out


def is_shattered(
    cls,
    B: PointSet,
    budget: int = 20000,
    seed: int = 0,
    cap: int = DEFAULT_SHATTER_CAP,
) -> ShatterResult:
    """Whether the class realizes all 2^|B| labelings of B."""
    k = len(B)
    if k > cap:
        raise CapExceededError(f"|B| = {k} exceeds shattering cap {cap}")
    if k == 0:
        return ShatterResult(shattered=True, exact=True)
    if isinstance(cls, LinearThreshold):
        if B.dim != cls.dim:
            raise ValueError("dimension mismatch")
        pts = B.as_array()
        for rest in itertools.product((0, 1), repeat=k - 1):
            # complement symmetry: checking first-bit-1 labelings suffices
            if not linsep.is_realizable(pts, (1,) + rest):
                return ShatterResult(shattered=False, exact=True)
        return ShatterResult(shattered=True, exact=True)
    if isinstance(cls, UnionOfMPoints):
        idx = _domain_indices(cls, B)
        ok = idx is not None and k <= cls.capacity
        return ShatterResult(shattered=ok, exact=True)
    if isinstance(cls, ExplicitFinite):
        idx = _domain_indices(cls, B)
        if idx is None:
            return ShatterResult(shattered=False, exact=True)
        distinct = {tuple(t[i] for i in idx) for t in cls.traces}
        return ShatterResult(shattered=len(distinct) == 2**k, exact=True)
    if isinstance(cls, NetworkSpec):
        found = sampled_trace_set(cls, B, budget=budget, seed=seed)
        if len(found) == 2**k:
            # every found trace carries a witness, so a positive is exact
            return ShatterResult(shattered=True, exact=True)
        return ShatterResult(shattered=False, exact=False)
    raise TypeError(f"cannot test shattering for {cls!r}")


@dataclass(frozen=True)
class VcDimResult:
    """`saturated=True` means a set of size max_d was shattered, so the
    result reads ">= max_d". A plain value is a lower bound certified by a
    shattered set plus failure to shatter anything larger among candidates."""

    value: int
    saturated: bool

    def __str__(self) -> str:
        return f">={self.value}" if self.saturated else str(self.value)


def _candidate_sets(cls, size: int, rng: np.random.Generator, tries: int):
    """Structured candidates first (simplex vertices, domain subsets), then
    random draws."""
    if isinstance(cls, (UnionOfMPoints, ExplicitFinite)):
        combos = itertools.islice(
            itertools.combinations(cls.domain, size), tries
        )
        for combo in combos:
            yield PointSet(points=combo)
        return
    dim = cls.dim if isinstance(cls, LinearThreshold) else cls.input_dim
    if size == dim + 1:
        yield simplex_vertices(dim)
    n_random = max(tries - (1 if size == dim + 1 else 0), 1)
    for _ in range(n_random):
        if dim <= 3:
            yield random_general_position(size, dim, rng)
        else:
            pts = rng.uniform(-1.0, 1.0, size=(size, dim))
            yield PointSet(points=tuple(tuple(map(float, p)) for p in pts))


def vc_dim_bruteforce(
    cls,
    max_d: int,
    seed: int = 0,
    tries: int = 12,
    budget: int = 20000,
    cap: int = DEFAULT_SHATTER_CAP,
) -> VcDimResult:
    """Largest set size <= max_d for which some candidate point set is
    shattered. Failure to find a shattered set is a lower-bound failure, not
    a proof, except where shattering checks are exact and the class geometry
    makes candidates exhaustive (the combinatorial baselines)."""
    if max_d > cap:
        raise CapExceededError(f"max_d {max_d} exceeds shattering cap {cap}")
    rng = np.random.default_rng(seed)
    best = 0
    for size in range(1, max_d + 1):
        for B in _candidate_sets(cls, size, rng, tries):
            if is_shattered(cls, B, budget=budget, seed=seed, cap=cap):
                best = size
                break
    return VcDimResult(value=best, saturated=(best == max_d))


# --------------------------------------------------------------------------
# Growth sampling and VC-density fitting
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthSample:
    n: int
    count: int
    exactness: str  # "exact" | "lower_bound"

    def __post_init__(self):
        if not (1 <= self.count <= 2**self.n):
            raise ValueError(f"count {self.count} outside [1, 2^{self.n}]")
        if self.exactness not in ("exact", "lower_bound"):
            raise ValueError(f"bad exactness tag {self.exactness!r}")


@dataclass(frozen=True)
class GrowthEstimate:
    samples: tuple[GrowthSample, ...]
    class_id: str
    policy: str
    seed: int


@dataclass(frozen=True)
class DensityEstimate:
    slope: float
    fit_range: tuple[int, int]
    residual: float


def class_id(cls) -> str:
    if isinstance(cls, LinearThreshold):
        return f"linear_threshold_d{cls.dim}"
    if isinstance(cls, UnionOfMPoints):
        return f"union_of_points_m{cls.capacity}"
    if isinstance(cls, ExplicitFinite):
        return f"explicit_finite_{len(cls.traces)}traces"
    if isinstance(cls, NetworkSpec):
        return f"network_m{cls.weight_count}"
    return type(cls).__name__


def growth_samples(
    cls,
    n_values,
    method: str = "auto",
    draws: int = 3,
    budget: int = 20000,
    seed: int = 0,
) -> GrowthEstimate:
    """Growth-function samples for a class over the given set sizes.

    Per set size the count is maximized over several random point-set draws,
    mirroring the max over configurations in the growth function's
    definition. Methods: 'oracle' (closed form, baselines), 'exact' (LP
    enumeration, LinearThreshold, small n), 'sampled' (weight sampling,
    lower bounds). 'auto' picks oracle for baselines, sampled for networks.
    """
    if method == "auto":
        method = "sampled" if isinstance(cls, NetworkSpec) else "oracle"
    samples = []
    rng = np.random.default_rng(seed)
    for n in sorted(set(int(n) for n in n_values)):
        if method == "oracle":
            samples.append(
                GrowthSample(n=n, count=growth_function_oracle(cls, n), exactness="exact")
            )
        elif method == "exact":
            if not isinstance(cls, LinearThreshold):
                raise ConfigError("exact growth counting is only available for linear_threshold")
            best = 0
            for _ in range(draws):
                B = random_general_position(n, cls.dim, rng)
                best = max(best, count_dichotomies_exact_ltf(B))
            samples.append(GrowthSample(n=n, count=best, exactness="exact"))
        elif method == "sampled":
            net = as_network(cls)
            best = 0
            for j in range(draws):
                if net.input_dim <= 3:
                    B = random_general_position(n, net.input_dim, rng)
                else:
                    pts = rng.uniform(-1.0, 1.0, size=(n, net.input_dim))
                    B = PointSet(points=tuple(tuple(map(float, p)) for p in pts))
                best = max(best, count_dichotomies_sampled(cls, B, budget, seed=seed + j))
            samples.append(GrowthSample(n=n, count=best, exactness="lower_bound"))
        else:
            raise ConfigError(f"unknown growth method {method!r}")
    return GrowthEstimate(
        samples=tuple(samples), class_id=class_id(cls), policy=method, seed=seed
    )


@dataclass(frozen=True)
class FitPolicy:
    """log-log fit policy: use the `upper_fraction` largest n values, never
    fewer than `min_points` (lower-order terms pollute small n)."""

    upper_fraction: float = 0.5
    min_points: int = 3


def estimate_vc_density(g: GrowthEstimate, policy: FitPolicy = FitPolicy()) -> DensityEstimate:
    """Least-squares slope of log(count) against log(n) (natural logs; the
    slope is base-invariant)."""
    samples = sorted(g.samples, key=lambda s: s.n)
    if len(samples) < 3:
        raise ValueError("need at least 3 growth samples")
    ns = [s.n for s in samples]
    if max(ns) < 4 * min(ns):
        raise ValueError("set sizes must span at least a factor of 4")
    take = max(policy.min_points, math.ceil(len(samples) * policy.upper_fraction))
    fit = samples[-take:]
    x = np.log([s.n for s in fit])
    y = np.log([float(s.count) for s in fit])
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return DensityEstimate(
        slope=max(float(slope), 0.0),
        fit_range=(fit[0].n, fit[-1].n),
        residual=resid,
    )
