"""Cosimplicial objects built from A-bimodules, and the configuration-space ladders.

Level k of the ladder attached to an A-bimodule X is X(k).  The interior
cofaces d^i (1 <= i <= k) are right actions by the composition with a 2 in
slot i, codegeneracy s^j is the right action by the composition with a 0 in
slot j + 1, and the outer cofaces are left actions: d^0 x = (beta_1, x) with
composition (1, k) and d^{k+1} x = (x, beta_1) with composition (k, 1).

Three flavors share one identity checker:

* ``exact``: X = gamma_m B in pointed sets.  Structure maps are stored as
  rank tables pointing the other way (B(m(k+1)) -> B(mk) for a coface), so
  this ladder is a simplicial pointed set.
* ``numeric``: X = gamma_m K_n on a finite corpus of sphere maps per level.
* ``config``: decorated configurations with two anchor points, cofaces
  doubling a block of m points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .combinatorics import (
    Composition, codegeneracy_composition, coface_composition, num_pairs, pair_arrays, pair_rank,
)
from .divided_powers import lambda_m_table, rho_m_table
from .errors import InvalidArgument, PreconditionError
from .kontsevich import (
    Configuration, DecoratedConfiguration, SphereMap, constant_map, gauss_map, left_action_K,
    right_action_K, task_rng,
)
from .report import Check, Report


@dataclass
class CosimplicialLadder:
    """Levels 0..L with cofaces (k, i) : level k -> k+1 and codegeneracies (k, j) : level k -> k-1.

    For the exact flavor the maps are integer rank tables read contravariantly;
    otherwise they are callables on corpus elements.
    """
    flavor: str
    m: int
    L: int
    cofaces: dict = field(repr=False)
    codegeneracies: dict = field(repr=False)
    corpus: dict | None = field(default=None, repr=False)
    basepoints: dict | None = field(default=None, repr=False)
    anchors: "BoundaryAnchors | None" = None

    def level_size(self, k: int) -> int:
        if self.flavor == "exact":
            return num_pairs(self.m * k) + 1
        return len(self.corpus[k])

    def swap_cofaces(self, k: int, i: int, j: int) -> "CosimplicialLadder":
        """Copy with d^i and d^j exchanged at level k (a negative control)."""
        cof = dict(self.cofaces)
        cof[(k, i)], cof[(k, j)] = self.cofaces[(k, j)], self.cofaces[(k, i)]
        return CosimplicialLadder(self.flavor, self.m, self.L, cof, dict(self.codegeneracies),
                                  self.corpus, self.basepoints, self.anchors)


# -- building from a bimodule ---------------------------------------------------

class ExactBimodule:
    """gamma_m B: right and left actions as rank tables (slot 0 of lambda is the basepoint)."""
    flavor = "exact"

    def __init__(self, m: int, rho=rho_m_table, lam=lambda_m_table):
        self.m, self.rho, self.lam = m, rho, lam

    def right(self, k, c):
        return np.asarray(self.rho(k, c, self.m))

    def left_outer(self, k, c, keep_slot):
        # the beta_1 factor is a constant basepoint map, so only one slot survives
        slot, rank = self.lam(2, c, self.m)
        return np.where(np.asarray(slot) == keep_slot, np.asarray(rank), 0)


class NumericBimodule:
    """gamma_m K_n: actions on sphere maps, basepoint family the constant south-pole maps."""
    flavor = "numeric"

    def __init__(self, m: int, n: int, right=right_action_K, left=left_action_K):
        self.m, self.n, self._right, self._left = m, n, right, left

    def beta(self, k: int) -> SphereMap:
        return constant_map(self.m * k, self.n)

    def right(self, k, c):
        return lambda f: self._right(f, k, c, self.m)

    def left_outer(self, k, c, keep_slot):
        b1 = self.beta(1)
        if keep_slot == 2:
            return lambda f: self._left([b1, f], 2, c, self.m)
        return lambda f: self._left([f, b1], 2, c, self.m)


def build_bimodule_cosimplicial(bimodule, L: int, corpus: dict | None = None) -> CosimplicialLadder:
    """The cosimplicial ladder of an A-bimodule through level L."""
    if L < 1:
        raise InvalidArgument("need at least levels 0 and 1")
    if bimodule.flavor == "numeric" and not hasattr(bimodule, "beta"):
        raise PreconditionError("a numeric bimodule needs a basepoint family")
    cof, cod = {}, {}
    for k in range(0, L):
        cof[(k, 0)] = bimodule.left_outer(k, Composition((1, k)), keep_slot=2)
        cof[(k, k + 1)] = bimodule.left_outer(k, Composition((k, 1)), keep_slot=1)
        for i in range(1, k + 1):
            cof[(k, i)] = bimodule.right(k, coface_composition(k, i))
    for k in range(1, L + 1):
        for j in range(0, k):
            cod[(k, j)] = bimodule.right(k, codegeneracy_composition(k, j))
    basepoints = None
    if bimodule.flavor == "numeric":
        basepoints = {k: bimodule.beta(k) for k in range(L + 1)}
    return CosimplicialLadder(bimodule.flavor, bimodule.m, L, cof, cod, corpus, basepoints)


def exact_ladder(m: int, L: int, **kw) -> CosimplicialLadder:
    return build_bimodule_cosimplicial(ExactBimodule(m, **kw), L)


def numeric_ladder(m: int, n: int, L: int, corpus_size: int = 20, seed: int = 0,
                   **kw) -> CosimplicialLadder:
    """gamma_m K_n ladder on Gauss maps of random configurations of m k points, plus the basepoint."""
    bim = NumericBimodule(m, n, **kw)
    corpus = {}
    for k in range(L + 1):
        items = [bim.beta(k)]
        if m * k >= 2:
            from .kontsevich import sample_gauss_map
            items += [sample_gauss_map(m * k, n, seed, 1000 * k + t) for t in range(corpus_size)]
        corpus[k] = items
    return build_bimodule_cosimplicial(bim, L, corpus)


# -- identity checking ----------------------------------------------------------

def _identity_instances(L: int):
    """(name, source level, left composite, right composite); composites list maps applied first to last."""
    for k in range(0, L - 1):
        for j in range(1, k + 2):
            for i in range(0, j):
                yield (f"d{j}d{i}=d{i}d{j - 1}", k,
                       [("d", k, i), ("d", k + 1, j)], [("d", k, j - 1), ("d", k + 1, i)])
    for k in range(2, L + 1):
        for j in range(0, k - 1):
            for i in range(0, j + 1):
                yield (f"s{j}s{i}=s{i}s{j + 1}", k,
                       [("s", k, i), ("s", k - 1, j)], [("s", k, j + 1), ("s", k - 1, i)])
    for k in range(0, L):
        for j in range(0, k + 1):
            for i in range(0, k + 2):
                lhs = [("d", k, i), ("s", k + 1, j)]
                if i < j:
                    rhs = [("s", k, j - 1), ("d", k - 1, i)]
                    name = f"s{j}d{i}=d{i}s{j - 1}"
                elif i in (j, j + 1):
                    rhs = []
                    name = f"s{j}d{i}=id"
                else:
                    rhs = [("s", k, j), ("d", k - 1, i - 1)]
                    name = f"s{j}d{i}=d{i - 1}s{j}"
                if any(lvl < 0 or lvl > L for _, lvl, _ in rhs):
                    continue
                yield name, k, lhs, rhs


def _family(name: str) -> str:
    if name.endswith("=id"):
        return "s d = id"
    if "d" not in name:
        return "codegeneracy identities"
    if "s" not in name:
        return "coface identities"
    return "s d = d s"


def _table_path(ladder, path):
    # contravariant: the composite of h then g has table H[G]
    out = None
    for kind, lvl, idx in path:
        T = (ladder.cofaces if kind == "d" else ladder.codegeneracies)[(lvl, idx)]
        out = np.asarray(T) if out is None else out[np.asarray(T)]
    return out


def _apply_path(ladder, path, x):
    for kind, lvl, idx in path:
        x = (ladder.cofaces if kind == "d" else ladder.codegeneracies)[(lvl, idx)](x)
    return x


def distance(a, b) -> float:
    """Largest entrywise difference; inf when the shapes disagree."""
    if isinstance(a, DecoratedConfiguration):
        return max(distance(a.config.points, b.config.points), distance(a.f, b.f))
    if isinstance(a, SphereMap):
        return distance(a.vectors, b.vectors)
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return np.inf
    return float(np.abs(a - b).max()) if a.size else 0.0


FAMILIES = ("coface identities", "codegeneracy identities", "s d = d s", "s d = id")


def verify_cosimplicial_identities(ladder: CosimplicialLadder, tol: float = 0.0) -> Report:
    """Every identity instance on every stored element, reported by identity family.

    A failing family's witness names its first violation and lists every
    identity (by name) that failed anywhere.
    """
    rep = Report("cosimplicial", parameters={"flavor": ladder.flavor, "m": ladder.m,
                                             "L": ladder.L, "tol": tol})
    worst = {f: 0.0 for f in FAMILIES}
    first = {f: None for f in FAMILIES}
    failing = {f: set() for f in FAMILIES}
    count = {f: 0 for f in FAMILIES}
    for name, k, lhs, rhs in _identity_instances(ladder.L):
        fam = _family(name)
        if ladder.flavor == "exact":
            a = _table_path(ladder, lhs)
            b = _table_path(ladder, rhs) if rhs else np.arange(ladder.level_size(k))
            count[fam] += len(a)
            bad = np.flatnonzero(a != b)
            if len(bad):
                failing[fam].add(name)
                worst[fam] = 1.0
                if first[fam] is None:
                    e = int(bad[0])
                    first[fam] = {"identity": name, "level": k, "element": e,
                                  "lhs": int(a[e]), "rhs": int(b[e])}
            continue
        for t, x in enumerate(ladder.corpus[k]):
            count[fam] += 1
            d = distance(_apply_path(ladder, lhs, x), _apply_path(ladder, rhs, x))
            worst[fam] = max(worst[fam], d)
            if d > tol:
                failing[fam].add(name)
                if first[fam] is None:
                    first[fam] = {"identity": name, "level": k, "element": t, "residual": d}
    for fam in FAMILIES:
        wit = None if first[fam] is None else {**first[fam], "failing": sorted(failing[fam])}
        rep.add(Check(fam, wit is None, residual=None if ladder.flavor == "exact" else worst[fam],
                      witness=wit, count=count[fam]))
    rep.add(_basepoint_check(ladder, tol))
    return rep


def _basepoint_check(ladder, tol):
    count, wit = 0, None
    if ladder.flavor == "exact":
        for kind, maps in (("d", ladder.cofaces), ("s", ladder.codegeneracies)):
            for (k, i), T in maps.items():
                count += 1
                if np.asarray(T)[0] != 0 and wit is None:
                    wit = {"map": f"{kind}{i}", "level": k}
    elif ladder.basepoints is not None:
        B = ladder.basepoints
        for kind, maps in (("d", ladder.cofaces), ("s", ladder.codegeneracies)):
            for (k, i), g in maps.items():
                count += 1
                target = B[k + 1] if kind == "d" else B[k - 1]
                if distance(g(B[k]), target) > tol and wit is None:
                    wit = {"map": f"{kind}{i}", "level": k}
    else:
        return Check("basepoints preserved", True, witness={"note": "no basepoint family"})
    return Check("basepoints preserved", wit is None, witness=wit, count=count)


# -- configuration ladders ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BoundaryAnchors:
    x_minus: np.ndarray
    x_plus: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        for name in ("x_minus", "x_plus", "u"):
            a = np.array(getattr(self, name), dtype=float)
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        if self.x_minus[-1] != 0 or self.x_plus[-1] != 1:
            raise InvalidArgument("anchors must lie on the bottom and top faces of the cube")
        if abs(np.linalg.norm(self.u) - 1) > 1e-12:
            raise InvalidArgument("u must be a unit vector")

    @classmethod
    def default(cls, n: int, u=None) -> "BoundaryAnchors":
        lo = np.full(n, 0.5)
        lo[-1] = 0.0
        hi = np.full(n, 0.5)
        hi[-1] = 1.0
        if u is None:
            u = np.zeros(n)
            u[-1] = 1.0
        return cls(lo, hi, u)


def _interior(k: int, m: int, block: int) -> list[int]:
    """1-based positions, counting the leading anchor, of interior block ``block``."""
    start = 1 + (block - 1) * m
    return list(range(start + 1, start + m + 1))


def _pull(f: SphereMap, origin: np.ndarray, u: np.ndarray) -> SphereMap:
    """New sphere map on len(origin) points; copies of one old point are paired by u."""
    I, J = pair_arrays(len(origin))
    oi, oj = origin[I - 1], origin[J - 1]
    out = np.empty((len(I), f.n))
    same = oi == oj
    out[same] = u
    fwd = oi < oj
    lo, hi = np.minimum(oi, oj), np.maximum(oi, oj)
    ranks = (hi - 1) * (hi - 2) // 2 + lo
    sel = fwd & ~same
    out[sel] = f.vectors[ranks[sel] - 1]
    sel = ~fwd & ~same
    out[sel] = -f.vectors[ranks[sel] - 1]
    return SphereMap(len(origin), f.n, out, f.south, check=False)


def _restrict(dc: DecoratedConfiguration, origin: np.ndarray, u) -> DecoratedConfiguration:
    pts = dc.config.points[origin - 1]
    return DecoratedConfiguration(Configuration(pts), _pull(dc.f, origin, u))


def _level(dc: DecoratedConfiguration, m: int) -> int:
    interior = dc.config.k - 2
    if interior < 0 or interior % m:
        raise InvalidArgument(f"{dc.config.k} points is not k*{m} + 2")
    return interior // m


def _check_anchors(dc, anchors):
    P = dc.config.points
    if not (np.array_equal(P[0], anchors.x_minus) and np.array_equal(P[-1], anchors.x_plus)):
        raise PreconditionError("first and last points must be the anchors")


def coface_origin(k: int, j: int, m: int) -> np.ndarray:
    """For each point after d^j, the 1-based index of the point it copies."""
    total = k * m + 2
    if not 0 <= j <= k + 1:
        raise InvalidArgument(f"coface index {j} out of range at level {k}")
    old = list(range(1, total + 1))
    if j == 0:
        new = [1] + [1] * m + old[1:]
    elif j == k + 1:
        new = old[:-1] + [total] * m + [total]
    else:
        blk = _interior(k, m, j)
        cut = blk[-1]
        new = old[:cut] + blk + old[cut:]
    return np.array(new, dtype=np.int64)


def codegeneracy_origin(k: int, j: int, m: int) -> np.ndarray:
    if not 0 <= j <= k - 1:
        raise InvalidArgument(f"codegeneracy index {j} out of range at level {k}")
    drop = set(_interior(k, m, j + 1))
    return np.array([p for p in range(1, k * m + 3) if p not in drop], dtype=np.int64)


def config_coface(dc: DecoratedConfiguration, j: int, m: int, anchors: BoundaryAnchors
                  ) -> DecoratedConfiguration:
    """Double block j (or add m anchor copies for j = 0, k + 1); copied pairs of one point get u."""
    _check_anchors(dc, anchors)
    k = _level(dc, m)
    return _restrict(dc, coface_origin(k, j, m), anchors.u)


def config_codegeneracy(dc: DecoratedConfiguration, j: int, m: int) -> DecoratedConfiguration:
    """Delete interior block j + 1 and restrict the sphere map."""
    k = _level(dc, m)
    if k < 1:
        raise InvalidArgument("level 0 has no codegeneracies")
    return _restrict(dc, codegeneracy_origin(k, j, m), None)


def single_point_coface(dc: DecoratedConfiguration, j: int, anchors: BoundaryAnchors
                 ) -> DecoratedConfiguration:
    """Single-point cofaces written pair by pair, as a cross-check of the m = 1 block cofaces."""
    _check_anchors(dc, anchors)
    P, f = dc.config.points, dc.f
    k = P.shape[0] - 2
    if j == 0:
        src = 1
        pts = np.vstack([P[:1], anchors.x_minus[None], P[1:]])
    elif j == k + 1:
        src = k + 2
        pts = np.vstack([P[:-1], anchors.x_plus[None], P[-1:]])
    else:
        src = j + 1
        pts = np.vstack([P[:src], P[src - 1:src], P[src:]])
    new_k = k + 3
    # new position src + 1 is the copy of old point src; later points shift by one
    def old(p):
        return p if p <= src else p - 1
    vecs = []
    for b in range(2, new_k + 1):
        for a in range(1, b):
            if old(a) == old(b):
                vecs.append(anchors.u)
            else:
                vecs.append(f(old(a), old(b)))
    return DecoratedConfiguration(Configuration(pts), SphereMap(new_k, f.n, vecs, f.south, check=False))


def projection_p_r(dc: DecoratedConfiguration, m: int, r: int) -> DecoratedConfiguration:
    """Keep the anchors and the interior points x_r, x_{m+r}, ..., x_{(k-1)m+r}."""
    if not 1 <= r <= m:
        raise InvalidArgument(f"strand {r} out of range for m = {m}")
    k = _level(dc, m)
    origin = np.array([1] + [1 + (a - 1) * m + r for a in range(1, k + 1)] + [k * m + 2])
    return _restrict(dc, origin, None)


def sample_decorated(k: int, m: int, n: int, anchors: BoundaryAnchors, seed: int = 0,
                     task: int = 0, min_sep: float = 0.02) -> DecoratedConfiguration:
    """Anchors plus k m interior points drawn in the open cube, decorated by their Gauss map."""
    rng = task_rng(seed, task)
    pts = [anchors.x_minus]
    while len(pts) < k * m + 1:
        x = rng.random(n)
        x[-1] = 0.05 + 0.9 * x[-1]
        if min(np.linalg.norm(p - x) for p in pts + [anchors.x_plus]) >= min_sep:
            pts.append(x)
    pts.append(anchors.x_plus)
    c = Configuration(np.array(pts))
    return DecoratedConfiguration(c, gauss_map(c))


def config_ladder(m: int, n: int, L: int, corpus_size: int = 20, seed: int = 0,
                  anchors: BoundaryAnchors | None = None) -> CosimplicialLadder:
    anchors = anchors or BoundaryAnchors.default(n)
    cof, cod = {}, {}
    for k in range(0, L):
        for j in range(0, k + 2):
            cof[(k, j)] = (lambda dc, j=j: config_coface(dc, j, m, anchors))
    for k in range(1, L + 1):
        for j in range(0, k):
            cod[(k, j)] = (lambda dc, j=j: config_codegeneracy(dc, j, m))
    corpus = {k: [sample_decorated(k, m, n, anchors, seed, 1000 * k + t) for t in range(corpus_size)]
              for k in range(L + 1)}
    return CosimplicialLadder("config", m, L, cof, cod, corpus, None, anchors)


def verify_projections(ladder: CosimplicialLadder) -> Report:
    """p_r commutes with every coface and codegeneracy of a configuration ladder, bitwise."""
    if ladder.flavor != "config":
        raise InvalidArgument("projections act on configuration ladders")
    m, A = ladder.m, ladder.anchors
    rep = Report("projections", parameters={"m": m, "L": ladder.L})
    for kind, maps in (("coface", ladder.cofaces), ("codegeneracy", ladder.codegeneracies)):
        worst, wit, count = 0.0, None, 0
        for (k, j), g in maps.items():
            for t, dc in enumerate(ladder.corpus[k]):
                for r in range(1, m + 1):
                    lhs = projection_p_r(g(dc), m, r)
                    if kind == "coface":
                        rhs = config_coface(projection_p_r(dc, m, r), j, 1, A)
                    else:
                        rhs = config_codegeneracy(projection_p_r(dc, m, r), j, 1)
                    d = distance(lhs, rhs)
                    count += 1
                    if d > worst or (d > 0 and wit is None):
                        worst = d
                        wit = {"map": f"{kind} {j}", "level": k, "element": t, "r": r}
        rep.add(Check(f"p_r commutes with each {kind}", worst == 0, residual=worst,
                      witness=wit if worst else None, count=count))
    return rep


def verify_single_point_reduction(ladder: CosimplicialLadder) -> Check:
    """m = 1 block cofaces agree bitwise with the pointwise single-point cofaces."""
    if ladder.flavor != "config" or ladder.m != 1:
        raise InvalidArgument("needs an m = 1 configuration ladder")
    worst, wit, count = 0.0, None, 0
    for (k, j), g in ladder.cofaces.items():
        for t, dc in enumerate(ladder.corpus[k]):
            d = distance(g(dc), single_point_coface(dc, j, ladder.anchors))
            count += 1
            if d > worst:
                worst, wit = d, {"coface": j, "level": k, "element": t}
    return Check("block cofaces reduce to single-point cofaces", worst == 0, residual=worst,
                 witness=wit, count=count)


# -- strand components and realization ----------------------------------------------

def verify_alpha_ladder(m: int, n: int, L: int, corpus_size: int = 20, seed: int = 0) -> Report:
    """Strand components of gamma_m K_n intertwine its cofaces and codegeneracies with those of K_n."""
    from .kontsevich import alpha_component
    big = numeric_ladder(m, n, L, corpus_size, seed)
    small = build_bimodule_cosimplicial(NumericBimodule(1, n), L)
    rep = Report("alpha ladder", parameters={"m": m, "n": n, "L": L})
    for kind, A, B in (("coface", big.cofaces, small.cofaces),
                       ("codegeneracy", big.codegeneracies, small.codegeneracies)):
        worst, wit, count = 0.0, None, 0
        for (k, j), g in A.items():
            for t, f in enumerate(big.corpus[k]):
                for r in range(1, m + 1):
                    d = distance(alpha_component(g(f), m, r), B[(k, j)](alpha_component(f, m, r)))
                    count += 1
                    if d > worst:
                        worst, wit = d, {"map": f"{kind} {j}", "level": k, "element": t, "r": r}
        rep.add(Check(f"strand components commute with each {kind}", worst == 0, residual=worst,
                      witness=wit, count=count))
    return rep


def verify_realization_commutes(size: int, L: int, m: int = 1) -> Check:
    """Pulling maps back along the exact ladder's tables agrees with the realized bimodule's actions."""
    from .phi import FinitePointedSet, realize_bimodule
    X = FinitePointedSet(size)
    ladder = exact_ladder(m, L)
    bim = realize_bimodule(X, m, L + 1, budget=None)
    index = {k: {g: i for i, g in enumerate(sp)} for k, sp in bim.spaces.items()}
    count, bad = 0, None
    for (k, i), T in ladder.cofaces.items():
        T = np.asarray(T)
        for gi, g in enumerate(bim.spaces[k]):
            full = (0,) + g
            pulled = index[k + 1][tuple(full[t] for t in T[1:].tolist())]
            if i == 0:
                realized = bim.left[(2, Composition((1, k)), (0, gi))]
            elif i == k + 1:
                realized = bim.left[(2, Composition((k, 1)), (gi, 0))]
            else:
                realized = bim.right[(k, coface_composition(k, i), gi)]
            count += 1
            if pulled != realized:
                bad = {"coface": i, "level": k, "element": gi}
                break
        if bad:
            break
    return Check("realization commutes with the ladder", bad is None, witness=bad, count=count)


# -- serialization ---------------------------------------------------------------

def _fmt(x: float) -> float:
    # 17 significant digits round-trip a double; json writes repr, which already does
    return float(f"{x:.17g}")


def _vectors(a) -> list:
    return [[_fmt(v) for v in row] for row in np.asarray(a).tolist()]


def sphere_map_to_dict(f: SphereMap) -> dict:
    return {"k": f.k, "n": f.n, "south": _vectors([f.south])[0], "vectors": _vectors(f.vectors)}


def ladder_to_dict(ladder: CosimplicialLadder, elements: int | None = None) -> dict:
    """Levels, map names and (for sampled flavors) the corpus elements."""
    out = {"flavor": ladder.flavor, "m": ladder.m, "L": ladder.L,
           "cofaces": sorted(f"d{i}@{k}" for k, i in ladder.cofaces),
           "codegeneracies": sorted(f"s{j}@{k}" for k, j in ladder.codegeneracies)}
    if ladder.anchors is not None:
        out["anchors"] = {"x_minus": _vectors([ladder.anchors.x_minus])[0],
                          "x_plus": _vectors([ladder.anchors.x_plus])[0],
                          "u": _vectors([ladder.anchors.u])[0]}
    if ladder.flavor == "exact":
        out["tables"] = {f"d{i}@{k}": np.asarray(T).tolist() for (k, i), T in ladder.cofaces.items()}
        out["tables"].update({f"s{j}@{k}": np.asarray(T).tolist()
                              for (k, j), T in ladder.codegeneracies.items()})
    else:
        levels = []
        for k in range(ladder.L + 1):
            items = ladder.corpus[k][:elements]
            if ladder.flavor == "config":
                items = [{"points": _vectors(dc.config.points), "f": sphere_map_to_dict(dc.f)}
                         for dc in items]
            else:
                items = [sphere_map_to_dict(f) for f in items]
            levels.append({"level": k, "elements": items})
        out["levels"] = levels
    return out
