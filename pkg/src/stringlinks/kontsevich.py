"""Sphere-valued pair maps, Gauss maps and the two conditions cutting out K_n.

A ``SphereMap`` of arity k in R^n stores one unit vector per pair i < j in
colex rank order (``combinatorics.pair_rank``).  Evaluation at (j, i) negates,
evaluation at the basepoint gives the south pole.

The divided-power actions only ever copy stored vectors or insert the south
pole, so their outputs are bitwise reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from . import chains
from .choose_two import BASEPOINT
from .combinatorics import Composition, as_composition, num_pairs, pair_arrays, pair_rank
from .divided_powers import alpha_m_table, lambda_m_table, rho_m_table
from .errors import (
    DegenerateConfigurationError, InvalidArgument, PreconditionError, ResourceLimitError,
    SamplingError,
)
from .report import Check, Report

TOL_UNIT = 1e-9
TOL_ALIGN = 1e-9
TOL_THREE = 1e-9
TOL_FOUR = 1e-8
TOL_COINCIDE = 1e-9
TENSOR_MAX_DIM = 6
PROBES = 64


def south_pole(n: int) -> np.ndarray:
    s = np.zeros(n)
    s[-1] = -1.0
    return s


@dataclass(frozen=True, eq=False)
class SphereMap:
    k: int
    n: int
    vectors: np.ndarray
    south: np.ndarray

    def __init__(self, k: int, n: int, vectors, south=None, tol_unit: float = TOL_UNIT,
                 check: bool = True):
        if n < 2:
            raise InvalidArgument("ambient dimension must be at least 2")
        vecs = np.array(vectors, dtype=float).reshape(num_pairs(k), n)
        s = south_pole(n) if south is None else np.array(south, dtype=float)
        if check and len(vecs):
            err = np.abs(np.linalg.norm(vecs, axis=1) - 1.0)
            if err.max() > tol_unit:
                bad = int(err.argmax())
                raise InvalidArgument(f"vector at pair rank {bad + 1} is not a unit vector")
        vecs.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "south", s)

    def __call__(self, i, j=None) -> np.ndarray:
        if j is None:
            if i is BASEPOINT:
                return self.south
            i, j = i
        if i == j or not (1 <= i <= self.k and 1 <= j <= self.k):
            raise InvalidArgument(f"({i}, {j}) is not a pair of B({self.k})")
        if i < j:
            return self.vectors[pair_rank(i, j) - 1]
        return -self.vectors[pair_rank(j, i) - 1]

    def __eq__(self, other):
        # bitwise equality, used by the plumbing checks
        return (isinstance(other, SphereMap) and self.k == other.k and self.n == other.n
                and np.array_equal(self.vectors, other.vectors)
                and np.array_equal(self.south, other.south))

    def __hash__(self):
        return hash((self.k, self.n, self.vectors.tobytes()))

    def replace(self, i: int, j: int, vector) -> "SphereMap":
        vecs = self.vectors.copy()
        vecs[pair_rank(i, j) - 1] = vector
        return SphereMap(self.k, self.n, vecs, self.south)


def constant_map(k: int, n: int, vector=None) -> SphereMap:
    """Every pair i < j sent to one vector (the south pole by default)."""
    v = south_pole(n) if vector is None else np.asarray(vector, dtype=float)
    return SphereMap(k, n, np.tile(v, (num_pairs(k), 1)))


# -- configurations ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Configuration:
    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2:
            raise InvalidArgument("points must be a k x n array")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def k(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]

    @property
    def min_separation(self) -> float:
        if self.k < 2:
            return np.inf
        I, J = pair_arrays(self.k)
        return float(np.linalg.norm(self.points[I - 1] - self.points[J - 1], axis=1).min())

    def in_cube(self) -> bool:
        return bool(np.all((self.points >= 0) & (self.points <= 1)))


@dataclass(frozen=True, eq=False)
class DecoratedConfiguration:
    config: Configuration
    f: SphereMap

    def __post_init__(self):
        if self.config.k != self.f.k or self.config.n != self.f.n:
            raise InvalidArgument("configuration and sphere map have different shapes")

    def __eq__(self, other):
        return (isinstance(other, DecoratedConfiguration)
                and np.array_equal(self.config.points, other.config.points)
                and self.f == other.f)


def gauss_map(c: Configuration) -> SphereMap:
    """(i, j) -> (x_i - x_j) / |x_i - x_j| for i < j."""
    I, J = pair_arrays(c.k)
    diff = c.points[I - 1] - c.points[J - 1]
    norms = np.linalg.norm(diff, axis=1)
    if len(norms) and norms.min() == 0:
        t = int(norms.argmin())
        pair = (int(I[t]), int(J[t]))
        raise DegenerateConfigurationError(f"points {pair} coincide", pair=pair)
    return SphereMap(c.k, c.n, diff / norms[:, None] if len(norms) else diff)


def normalize_configuration(c: Configuration) -> Configuration:
    """Centroid at the origin, largest point norm 1."""
    if c.k < 2:
        raise InvalidArgument("need at least two points")
    pts = c.points - c.points.mean(axis=0)
    scale = np.linalg.norm(pts, axis=1).max()
    if scale == 0:
        raise DegenerateConfigurationError("all points coincide", pair=(1, 2))
    return Configuration(pts / scale)


def task_rng(seed: int, task: int = 0) -> np.random.Generator:
    """PCG64 seeded from SeedSequence([seed, task]); the per-task derivation rule."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(task)]))


def sample_configuration(k: int, n: int, domain: str = "cube", min_sep: float = 0.0,
                         seed: int = 0, task: int = 0, max_tries: int = 10_000) -> Configuration:
    """Points drawn one at a time, each redrawn until it keeps min_sep from the earlier ones."""
    if min_sep < 0:
        raise InvalidArgument("min_sep must be nonnegative")
    if domain not in ("cube", "ball"):
        raise InvalidArgument(f"unknown domain {domain!r}")
    rng = task_rng(seed, task)
    pts = np.empty((k, n))
    tries = 0
    for i in range(k):
        while True:
            tries += 1
            if tries > max_tries:
                raise SamplingError(
                    f"no configuration with k={k}, n={n}, domain={domain}, min_sep={min_sep} "
                    f"after {max_tries} draws")
            if domain == "cube":
                x = rng.random(n)
            else:
                x = rng.normal(size=n)
                x *= rng.random() ** (1 / n) / np.linalg.norm(x)
            if i == 0 or np.linalg.norm(pts[:i] - x, axis=1).min() >= max(min_sep, 1e-300):
                pts[i] = x
                break
    return Configuration(pts)


# -- three-dependence ----------------------------------------------------------

@dataclass(frozen=True)
class ThreeDependenceWitness:
    triple: tuple
    b: tuple
    residual: float


_SUPPORTS = [s for r in (1, 2, 3) for s in combinations(range(3), r)]


def solve_three(U: np.ndarray) -> tuple[np.ndarray, float]:
    """min |b U| over b >= 0, sum b = 1, by trying every support.

    On a support S the equality-constrained least-squares problem is solved
    from its KKT system; candidates with a negative entry are discarded.
    """
    best_b, best = None, np.inf
    for S in _SUPPORTS:
        A = U[list(S)]
        G = A @ A.T
        r = len(S)
        K = np.zeros((r + 1, r + 1))
        K[:r, :r] = 2 * G
        K[:r, r] = K[r, :r] = 1.0
        rhs = np.zeros(r + 1)
        rhs[r] = 1.0
        sol = np.linalg.lstsq(K, rhs, rcond=None)[0][:r]
        if sol.min() < -1e-12:
            continue
        sol = np.clip(sol, 0, None)
        sol /= sol.sum()
        res = float(np.linalg.norm(sol @ A))
        if res < best:
            b = np.zeros(3)
            b[list(S)] = sol
            best_b, best = b, res
    return best_b, best


def triple_vectors(f: SphereMap, triple) -> np.ndarray:
    i1, i2, i3 = triple
    return np.array([f(i1, i2), f(i2, i3), f(i3, i1)])


def three_dependence_witnesses(f: SphereMap) -> list[ThreeDependenceWitness]:
    out = []
    for t in combinations(range(1, f.k + 1), 3):
        b, res = solve_three(triple_vectors(f, t))
        out.append(ThreeDependenceWitness(t, tuple(float(x) for x in b), res))
    return out


def is_three_dependent(f: SphereMap, tol: float = TOL_THREE) -> Check:
    """Every triple has a nonnegative, nonzero vanishing combination (up to tol)."""
    ws = three_dependence_witnesses(f)
    if not ws:
        return Check("three-dependent", True, residual=0.0)
    worst = max(ws, key=lambda w: w.residual)
    return Check("three-dependent", worst.residual <= tol, residual=worst.residual,
                 witness={"triple": worst.triple, "b": worst.b}, count=len(ws))


def distance_witness(c: Configuration, triple) -> ThreeDependenceWitness:
    """b proportional to (d12, d23, d31); exact for Gauss maps by telescoping."""
    i1, i2, i3 = triple
    P = c.points
    d = np.array([np.linalg.norm(P[i1 - 1] - P[i2 - 1]), np.linalg.norm(P[i2 - 1] - P[i3 - 1]),
                  np.linalg.norm(P[i3 - 1] - P[i1 - 1])])
    b = d / d.sum()
    res = float(np.linalg.norm(b @ triple_vectors(gauss_map(c), triple)))
    return ThreeDependenceWitness(tuple(triple), tuple(b.tolist()), res)


# -- four-consistency ------------------------------------------------------------

def _sym3(A: np.ndarray) -> np.ndarray:
    """Symmetrized a1 x a2 x a3 as a flat vector of length n^3."""
    t = np.einsum("i,j,k->ijk", A[0], A[1], A[2])
    return sum(t.transpose(p) for p in permutations(range(3))).ravel() / 6.0


def _terms(f: SphereMap, T, literal: bool):
    for ch in chains.enumerate_chains(T):
        yield chains.summand_factors(f, ch, literal)


def _tensor_residual(f, T, literal):
    total, scale = 0.0, 0.0
    for sgn, A, B in _terms(f, T, literal):
        term = sgn * np.outer(_sym3(A), _sym3(B))
        total = total + term
        scale = max(scale, np.abs(term).max())
    return np.abs(total).max(), scale


def _probe_pairs(n, rng, probes):
    V = rng.normal(size=(probes, n))
    W = rng.normal(size=(probes, n))
    V /= np.linalg.norm(V, axis=1)[:, None]
    W /= np.linalg.norm(W, axis=1)[:, None]
    E = np.eye(n)
    bv, bw = np.repeat(E, n, axis=0), np.tile(E, (n, 1))
    return np.vstack([V, bv]), np.vstack([W, bw])


def _probe_residual(f, T, literal, V, W):
    total, scale = 0.0, 0.0
    for sgn, A, B in _terms(f, T, literal):
        term = sgn * np.prod(V @ A.T, axis=1) * np.prod(W @ B.T, axis=1)
        total = total + term
        scale = max(scale, np.abs(term).max())
    return np.abs(total).max(), scale


def four_consistency_residuals(f: SphereMap, mode: str = "auto", literal: bool = False,
                               seed: int = 0, probes: int = PROBES,
                               max_dim: int = TENSOR_MAX_DIM) -> list[tuple]:
    """(T, absolute residual, largest summand) for every 4-subset T."""
    if mode == "auto":
        mode = "tensor" if f.n <= max_dim else "probe"
    if mode == "tensor" and f.n > max_dim:
        raise ResourceLimitError(
            f"tensor mode builds {f.n}^3 x {f.n}^3 tensors; dimension bound is {max_dim}",
            budget=max_dim)
    if mode not in ("tensor", "probe"):
        raise InvalidArgument(f"unknown mode {mode!r}")
    if mode == "probe":
        V, W = _probe_pairs(f.n, task_rng(seed), probes)
    out = []
    for T in combinations(range(1, f.k + 1), 4):
        if mode == "tensor":
            res, scale = _tensor_residual(f, T, literal)
        else:
            res, scale = _probe_residual(f, T, literal, V, W)
        out.append((T, float(res), float(scale)))
    return out


def is_four_consistent(f: SphereMap, tol: float = TOL_FOUR, mode: str = "auto",
                       literal: bool = False, seed: int = 0) -> Check:
    """The signed sum over the 12 chain classes vanishes for every 4-subset.

    The residual is relative: the largest entry of the summed tensor (or the
    largest probe value) divided by the largest single summand.
    """
    rows = four_consistency_residuals(f, mode, literal, seed)
    if not rows:
        return Check("four-consistent", True, residual=0.0)
    rel = [(T, res / scale if scale > 0 else 0.0) for T, res, scale in rows]
    T, worst = max(rel, key=lambda x: x[1])
    return Check("four-consistent", worst <= tol, residual=worst,
                 witness={"subset": T}, count=len(rows))


def in_K(f: SphereMap, tol3: float = TOL_THREE, tol4: float = TOL_FOUR, mode: str = "auto") -> Report:
    rep = Report("K_n membership", parameters={"k": f.k, "n": f.n})
    rep.add(is_three_dependent(f, tol3))
    rep.add(is_four_consistent(f, tol4, mode))
    return rep


def membership_C(dc: DecoratedConfiguration, tol_align: float = TOL_ALIGN,
                 tol_coincide: float = TOL_COINCIDE, tol3: float = TOL_THREE,
                 tol4: float = TOL_FOUR, mode: str = "auto") -> Report:
    """Alignment on separated pairs plus the two K_n conditions."""
    rep = Report("C membership", parameters={"k": dc.f.k, "n": dc.f.n})
    P = dc.config.points
    I, J = pair_arrays(dc.f.k)
    diff = P[I - 1] - P[J - 1]
    d = np.linalg.norm(diff, axis=1)
    sep = d > tol_coincide
    err = np.zeros(len(d))
    err[sep] = np.linalg.norm(diff[sep] / d[sep, None] - dc.f.vectors[sep], axis=1)
    worst = int(err.argmax()) if len(err) else 0
    ok = not len(err) or err.max() <= tol_align
    rep.add(Check("alignment", bool(ok), residual=float(err.max()) if len(err) else 0.0,
                  witness=None if ok else {"pair": (int(I[worst]), int(J[worst]))},
                  count=int(sep.sum())))
    rep.add(is_three_dependent(dc.f, tol3))
    rep.add(is_four_consistent(dc.f, tol4, mode))
    return rep


# -- divided-power actions ---------------------------------------------------------

def _assemble(vectors: np.ndarray, keep: np.ndarray, south: np.ndarray) -> np.ndarray:
    out = np.empty((len(keep), len(south)))
    out[keep] = vectors
    out[~keep] = south
    return out


def right_action_K(f: SphereMap, k: int, c, m: int) -> SphereMap:
    """F = f o rho^(m)_{k,c}: copy f where rho lands on a pair, south pole elsewhere."""
    c = as_composition(c)
    if f.k != k * m or c.k != k:
        raise InvalidArgument(f"arity {f.k} does not match k*m = {k * m} or composition {c}")
    T = rho_m_table(k, c, m)[1:]
    keep = T > 0
    return SphereMap(c.n * m, f.n, _assemble(f.vectors[T[keep] - 1], keep, f.south),
                     f.south, check=False)


def left_action_K(fs, k: int, c, m: int) -> SphereMap:
    """Assemble fs through lambda^(m)_{k,c}; south pole on the wedge basepoint."""
    c = as_composition(c)
    fs = list(fs)
    if len(fs) != k or c.k != k:
        raise InvalidArgument(f"need {k} sphere maps for composition {c}")
    n = fs[0].n
    for s, g in enumerate(fs):
        if g.k != c[s] * m or g.n != n:
            raise InvalidArgument(f"input {s + 1} has arity {g.k}, expected {c[s] * m}")
    slot, rank = lambda_m_table(k, c, m)
    slot, rank = slot[1:], rank[1:]
    keep = slot > 0
    vals = np.empty((int(keep.sum()), n))
    for s in range(1, k + 1):
        sel = slot[keep] == s
        vals[sel] = fs[s - 1].vectors[rank[keep][sel] - 1]
    return SphereMap(c.n * m, n, _assemble(vals, keep, fs[0].south), fs[0].south, check=False)


def _stale(pool: np.ndarray, count: int) -> np.ndarray:
    # a stale read walks an old buffer instead of writing the south pole
    return pool[np.arange(count) % len(pool)]


def stale_right_action(f: SphereMap, k: int, c, m: int) -> SphereMap:
    """Negative control: basepoint branches read stale vectors of f instead of the south pole."""
    out = right_action_K(f, k, c, m)
    if not len(f.vectors):
        return out
    miss = rho_m_table(k, as_composition(c), m)[1:] == 0
    vecs = out.vectors.copy()
    vecs[miss] = _stale(f.vectors, int(miss.sum()))
    return SphereMap(out.k, out.n, vecs, out.south, check=False)


def stale_left_action(fs, k: int, c, m: int) -> SphereMap:
    """Negative control: basepoint branches read stale vectors of the inputs."""
    out = left_action_K(fs, k, c, m)
    pool = [g.vectors for g in fs if len(g.vectors)]
    if not pool:
        return out
    miss = lambda_m_table(k, as_composition(c), m)[0][1:] == 0
    vecs = out.vectors.copy()
    vecs[miss] = _stale(np.vstack(pool), int(miss.sum()))
    return SphereMap(out.k, out.n, vecs, out.south, check=False)


def alpha_component(f: SphereMap, m: int, r: int) -> SphereMap:
    """Strand r: (i, j) -> f((i-1)m + r, (j-1)m + r)."""
    if m < 1 or not 1 <= r <= m:
        raise InvalidArgument(f"strand {r} out of range for m = {m}")
    if f.k % m:
        raise InvalidArgument(f"arity {f.k} is not a multiple of m = {m}")
    T = alpha_m_table(m, f.k // m)[r - 1, 1:]
    return SphereMap(f.k // m, f.n, f.vectors[T - 1], f.south, check=False)


def sample_gauss_map(k: int, n: int, seed: int = 0, task: int = 0, min_sep: float = 0.05) -> SphereMap:
    return gauss_map(sample_configuration(k, n, "cube", min_sep, seed, task))


def verify_action_closure(m: int, k: int, c, n: int = 4, samples: int = 50, seed: int = 0,
                          tol3: float = TOL_THREE, tol4: float = TOL_FOUR, mode: str = "auto",
                          right=right_action_K, left=left_action_K) -> Report:
    """Sampled Gauss maps pushed through both actions stay three-dependent and four-consistent."""
    c = as_composition(c)
    rep = Report("closure", parameters={"m": m, "k": k, "c": c, "n": n, "samples": samples,
                                        "seed": seed, "tol3": tol3, "tol4": tol4})
    for side in ("right", "left"):
        worst3 = worst4 = (0.0, None)
        ok3 = ok4 = True
        for t in range(samples):
            if side == "right":
                F = right(sample_gauss_map(k * m, n, seed, t), k, c, m)
            else:
                fs = [sample_gauss_map(ns * m, n, seed, t * (k + 1) + s) for s, ns in enumerate(c)]
                F = left(fs, k, c, m)
            c3 = is_three_dependent(F, tol3)
            c4 = is_four_consistent(F, tol4, mode)
            ok3 &= c3.passed
            ok4 &= c4.passed
            if c3.residual > worst3[0] or worst3[1] is None:
                worst3 = (c3.residual, {"sample": t, **(c3.witness or {})})
            if c4.residual > worst4[0] or worst4[1] is None:
                worst4 = (c4.residual, {"sample": t, **(c4.witness or {})})
        rep.add(Check(f"{side} action: three-dependent", ok3, residual=worst3[0],
                      witness=None if ok3 else worst3[1], count=samples))
        rep.add(Check(f"{side} action: four-consistent", ok4, residual=worst4[0],
                      witness=None if ok4 else worst4[1], count=samples))
    return rep


# -- cancellation pairings from the closure argument ---------------------------------

PAIRINGS = {
    "mixed-rows": [("id", "(34)"), ("(1243)", "(123)"), ("(23)", "(243)"),
                   ("(12)(34)", "(12)"), ("(234)", "(24)"), ("(13)", "(132)")],
    "three-blocks": [("id", "(13)"), ("(1243)", "(234)"), ("(34)", "(12)(34)"),
                     ("(123)", "(23)"), ("(243)", "(24)"), ("(12)", "(132)")],
}


def block_structure(T, c, m: int) -> tuple[tuple, tuple]:
    """(blocks s_j, rows r_j) of the indices in T under composition c and width m."""
    c = as_composition(c)
    P = c.prefix()
    a = [(i - 1) // m + 1 for i in T]
    r = [(i - 1) % m + 1 for i in T]
    s = [int(np.searchsorted(P, x, side="left")) for x in a]
    return tuple(s), tuple(r)


def _case_holds(case, s, r):
    if case == "mixed-rows":
        return len(set(s)) == 4 and r[0] == r[1] != r[2] == r[3]
    if case == "three-blocks":
        return s[0] == s[1] == s[2] < s[3] and len(set(r)) == 1
    raise InvalidArgument(f"unknown case {case!r}; known: {sorted(PAIRINGS)}")


def verify_cancellation_pairings(f: SphereMap, k: int, c, m: int, T, case: str,
                                 tol: float = 1e-12, seed: int = 0, probes: int = 8) -> Report:
    """Evaluate the 12 summands of F = f . rho^(m)_{k,c} on T and check the listed pair sums."""
    c = as_composition(c)
    T = tuple(sorted(T))
    s, r = block_structure(T, c, m)
    if not _case_holds(case, s, r):
        raise PreconditionError(f"indices {T} have blocks {s} and rows {r}, not case {case!r}")
    F = right_action_K(f, k, c, m)
    rng = task_rng(seed)
    V, W = _probe_pairs(f.n, rng, probes)
    rep = Report("cancellation", parameters={"case": case, "T": T, "c": c, "m": m})
    biggest = 0.0
    for p, q in PAIRINGS[case]:
        worst = 0.0
        for v, w in zip(V, W):
            a = chains.summand(F, chains.chain(T, p), v, w)
            b = chains.summand(F, chains.chain(T, q), v, w)
            worst = max(worst, abs(a + b))
            biggest = max(biggest, abs(a), abs(b))
        rep.add(Check(f"pi_{p} + pi_{q}", worst <= tol, residual=worst,
                      witness=None if worst <= tol else {"pair": (p, q)}, count=len(V)))
    rep.add(Check("summands nonzero", biggest > tol, residual=biggest))
    return rep


def verify_alpha_numeric(m: int, n: int = 4, samples: int = 50, seed: int = 0,
                         max_blocks: int = 3) -> Report:
    """Strand components of action outputs equal actions on strand components, bitwise."""
    from .combinatorics import enumerate_compositions
    rep = Report("alpha numeric", parameters={"m": m, "n": n, "samples": samples, "seed": seed})
    for side in ("right", "left"):
        count, wit = 0, None
        for k in range(1, max_blocks + 1):
            for l in range(0, max_blocks + 1):
                for c in enumerate_compositions(k, l):
                    for t in range(samples):
                        if side == "right":
                            f = sample_gauss_map(k * m, n, seed, t)
                            out = right_action_K(f, k, c, m)
                            comps = [right_action_K(alpha_component(f, m, r), k, c, 1)
                                     for r in range(1, m + 1)]
                        else:
                            fs = [sample_gauss_map(ns * m, n, seed, t * (k + 1) + s)
                                  for s, ns in enumerate(c)]
                            out = left_action_K(fs, k, c, m)
                            comps = [left_action_K([alpha_component(g, m, r) for g in fs], k, c, 1)
                                     for r in range(1, m + 1)]
                        count += 1
                        for r in range(1, m + 1):
                            if alpha_component(out, m, r) != comps[r - 1] and wit is None:
                                wit = {"k": k, "c": c, "sample": t, "strand": r}
        rep.add(Check(f"strand components intertwine the {side} action", wit is None,
                      witness=wit, count=count))
    return rep


def verify_right_functoriality(m: int, n: int = 3, max_arity: int = 3, samples: int = 5,
                               seed: int = 0) -> Check:
    """Acting by c and then by d equals acting by their composite, bitwise."""
    from .combinatorics import composite, enumerate_compositions
    count, wit = 0, None
    for k in range(1, max_arity + 1):
        for l in range(1, max_arity + 1):
            for c in enumerate_compositions(k, l):
                for p in range(0, max_arity + 1):
                    for d in enumerate_compositions(l, p):
                        for t in range(samples):
                            f = sample_gauss_map(k * m, n, seed, t)
                            a = right_action_K(right_action_K(f, k, c, m), l, d, m)
                            b = right_action_K(f, k, composite(c, d), m)
                            count += 1
                            if a != b and wit is None:
                                wit = {"k": k, "c": c, "d": d, "sample": t}
    return Check("right action is functorial", wit is None, witness=wit, count=count)


def verify_gauss_conditions(samples: int = 200, max_k: int = 6, dims=(3, 4), seed: int = 0,
                            tol3: float = TOL_THREE, tol4: float = TOL_FOUR, tol_witness: float = 1e-12,
                            mode: str = "auto") -> Report:
    """Gauss maps of random strict configurations are three-dependent and four-consistent."""
    rep = Report("kontsevich", parameters={"samples": samples, "max_k": max_k, "dims": list(dims),
                                           "seed": seed, "tol3": tol3, "tol4": tol4, "mode": mode})
    worst = {"three": (0.0, None), "dist": (0.0, None), "four": (0.0, None)}
    for t in range(samples):
        k = 3 + t % (max_k - 2)
        n = dims[t % len(dims)]
        c = sample_configuration(k, n, "cube", 0.05, seed, t)
        f = gauss_map(c)
        c3 = is_three_dependent(f, tol3)
        c4 = is_four_consistent(f, tol4, mode, seed=seed)
        dw = max(distance_witness(c, tr).residual for tr in combinations(range(1, k + 1), 3))
        for key, res, wit in (("three", c3.residual, c3.witness), ("four", c4.residual, c4.witness),
                              ("dist", dw, None)):
            if res >= worst[key][0]:
                worst[key] = (res, {"sample": t, "k": k, "n": n, **(wit or {})})
    rep.add(Check("three-dependent (solver)", worst["three"][0] <= tol3, residual=worst["three"][0],
                  witness=worst["three"][1] if worst["three"][0] > tol3 else None, count=samples))
    rep.add(Check("three-dependent (distance witness)", worst["dist"][0] <= tol_witness,
                  residual=worst["dist"][0],
                  witness=worst["dist"][1] if worst["dist"][0] > tol_witness else None, count=samples))
    rep.add(Check("four-consistent", worst["four"][0] <= tol4, residual=worst["four"][0],
                  witness=worst["four"][1] if worst["four"][0] > tol4 else None, count=samples))
    return rep
