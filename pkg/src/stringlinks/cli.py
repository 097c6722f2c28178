"""Command-line front end: ``stringlinks verify <suite>`` and ``stringlinks sample <kind>``.

Exit status: 0 when every check passes, 1 when any check fails (or a
resource limit stops a sweep), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .errors import InvalidArgument, PreconditionError, ResourceLimitError, SamplingError
from .report import Check, Report

THREADS_ENV = "STRINGLINKS_THREADS"
SUITES = ("operad", "bimodule", "alpha", "chains", "kontsevich", "closure", "cosimplicial",
          "config-model")


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn, items, threads):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(threads) as ex:
        return list(ex.map(fn, items))


# -- suites --------------------------------------------------------------------

def _budget(a):
    return None if a.budget == 0 else a.budget


def run_operad(a) -> Report:
    from .phi import FinitePointedSet, realize_operad, verify_operad_axioms
    N = a.max_arity or 3
    op = realize_operad(FinitePointedSet(a.x_size), N, budget=_budget(a))
    rep = verify_operad_axioms(op, N, budget=_budget(a))
    rep.parameters.update({"x_size": a.x_size, "budget": a.budget})
    return rep


def run_bimodule(a) -> Report:
    from .divided_powers import (
        verify_bimodule_axioms, verify_gamma_one, verify_matrix_oracle, verify_unit_on_same_row,
    )
    N = a.max_arity or 12
    rep = verify_bimodule_axioms(a.m, N, budget=_budget(a))
    rep.add(verify_unit_on_same_row(a.m, N))
    rep.extend(verify_matrix_oracle(a.m, N), prefix="matrix oracle: ")
    if a.m == 1:
        rep.add(verify_gamma_one(min(N, 6)))
    return rep


def run_alpha(a) -> Report:
    from .divided_powers import verify_alpha_morphism
    from .kontsevich import verify_alpha_numeric
    N = a.max_arity or 4 * a.m
    rep = verify_alpha_morphism(a.m, N)
    rep.extend(verify_alpha_numeric(a.m, a.n or 4, a.samples or 50, a.seed))
    rep.parameters.update({"n": a.n or 4, "samples": a.samples or 50, "seed": a.seed})
    return rep


def run_chains(a) -> Report:
    from .chains import verify_chains
    return verify_chains(samples=a.samples or 100, seed=a.seed, tol=a.tol or 1e-12)


def run_kontsevich(a) -> Report:
    from .kontsevich import TOL_FOUR, verify_gauss_conditions
    dims = (a.n,) if a.n else (3, 4)
    return verify_gauss_conditions(samples=a.samples or 200, max_k=a.k or 6, dims=dims,
                                   seed=a.seed, tol4=a.tol or TOL_FOUR, mode=a.mode)


def run_closure(a) -> Report:
    from .combinatorics import enumerate_compositions
    from .kontsevich import TOL_FOUR, sample_gauss_map, verify_action_closure, verify_cancellation_pairings
    k, n, lmax = a.k or 2, a.n or 4, a.max_arity or 3
    rep = Report("closure", parameters={"m": a.m, "k": k, "n": n, "max_l": lmax,
                                        "samples": a.samples or 50, "seed": a.seed,
                                        "tol4": a.tol or TOL_FOUR})
    comps = [c for l in range(0, lmax + 1) for c in enumerate_compositions(k, l)]
    subs = _map(lambda c: verify_action_closure(a.m, k, c, n, a.samples or 50, a.seed,
                                                tol4=a.tol or TOL_FOUR, mode=a.mode),
                comps, a.threads)
    for c, sub in zip(comps, subs):
        rep.extend(sub, prefix=f"c={tuple(c)}: ")
    f = sample_gauss_map(8, n, a.seed, 0)
    rep.extend(verify_cancellation_pairings(f, 4, (1, 1, 1, 1), 2, (1, 3, 6, 8), "mixed-rows",
                                            seed=a.seed), prefix="mixed rows: ")
    g = sample_gauss_map(2 * a.m, n, a.seed, 1)
    T = tuple(1 + a.m * t for t in range(3)) + (1 + 3 * a.m,)
    rep.extend(verify_cancellation_pairings(g, 2, (3, 1), a.m, T, "three-blocks", seed=a.seed),
               prefix="three blocks: ")
    return rep


def run_cosimplicial(a) -> Report:
    from .cosimplicial import (
        exact_ladder, numeric_ladder, verify_alpha_ladder, verify_cosimplicial_identities,
    )
    L = a.level or 5
    rep = Report("cosimplicial", parameters={"m": a.m, "level": L, "n": a.n or 4,
                                             "samples": a.samples or 20, "seed": a.seed})
    rep.extend(verify_cosimplicial_identities(exact_ladder(a.m, L)), prefix="exact: ")
    Ln = min(L, 3)
    rep.extend(verify_cosimplicial_identities(numeric_ladder(a.m, a.n or 4, Ln, a.samples or 20, a.seed)),
               prefix="numeric: ")
    rep.extend(verify_alpha_ladder(a.m, a.n or 4, Ln, a.samples or 20, a.seed), prefix="numeric: ")
    return rep


def run_config_model(a) -> Report:
    from .cosimplicial import (
        BoundaryAnchors, config_ladder, verify_cosimplicial_identities, verify_projections,
        verify_single_point_reduction,
    )
    from .kontsevich import membership_C
    n, L = a.n or 3, a.level or 3
    anchors = BoundaryAnchors.default(n, a.u)
    ladder = config_ladder(a.m, n, L, a.samples or 20, a.seed, anchors)
    rep = Report("config-model", parameters={"m": a.m, "n": n, "level": L,
                                             "samples": a.samples or 20, "seed": a.seed,
                                             "u": anchors.u})
    rep.extend(verify_cosimplicial_identities(ladder), prefix="identities: ")
    rep.extend(verify_projections(ladder))
    if a.m == 1:
        rep.add(verify_single_point_reduction(ladder))
    worst, wit, count = 0.0, None, 0
    for (k, j), g in ladder.cofaces.items():
        for t, dc in enumerate(ladder.corpus[k][:5]):
            sub = membership_C(g(dc))
            count += 1
            if not sub.passed and wit is None:
                wit = {"coface": j, "level": k, "element": t,
                       "failed": [c.name for c in sub.failures()]}
    rep.add(Check("cofaces preserve membership", wit is None, witness=wit, count=count))
    return rep


RUNNERS = {"operad": run_operad, "bimodule": run_bimodule, "alpha": run_alpha,
           "chains": run_chains, "kontsevich": run_kontsevich, "closure": run_closure,
           "cosimplicial": run_cosimplicial, "config-model": run_config_model}


# -- output --------------------------------------------------------------------

def _finite(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, dict):
        return {k: _finite(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_finite(v) for v in x]
    return x


def report_document(rep: Report, parameters: dict, wall: float) -> dict:
    checks = sorted((c.to_dict() for c in rep.checks), key=lambda c: c["name"])
    params = {**parameters, **rep.parameters}
    from .report import _plain
    return _finite({
        "suite": rep.suite,
        "version": __version__,
        "status": "pass" if rep.passed else "fail",
        "parameters": _plain(params),
        "checks": checks,
        "wallTime": wall,
    })


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(a) -> int:
    t0 = time.perf_counter()
    params = {k: v for k, v in vars(a).items() if k not in ("func", "out", "command", "threads")}
    try:
        rep = RUNNERS[a.suite](a)
    except ResourceLimitError as exc:
        rep = Report(a.suite)
        rep.add(Check("resource limit", False, witness={"error": str(exc), "budget": exc.budget}))
    _emit(report_document(rep, params, time.perf_counter() - t0), a.out)
    return 0 if rep.passed else 1


def cmd_sample(a) -> int:
    from .cosimplicial import (
        BoundaryAnchors, config_ladder, exact_ladder, ladder_to_dict, numeric_ladder,
        sphere_map_to_dict, _vectors,
    )
    from .kontsevich import gauss_map, sample_configuration
    k, n = a.k or 4, a.n or 3
    if a.kind == "config":
        c = sample_configuration(k, n, "cube", a.min_sep, a.seed)
        doc = {"kind": "config", "seed": a.seed, "k": k, "n": n,
               "min_separation": c.min_separation, "points": _vectors(c.points)}
    elif a.kind == "gauss":
        f = gauss_map(sample_configuration(k, n, "cube", a.min_sep, a.seed))
        doc = {"kind": "gauss", "seed": a.seed, **sphere_map_to_dict(f)}
    else:
        L = a.level or 2
        if a.flavor == "exact":
            ladder = exact_ladder(a.m, L)
        elif a.flavor == "numeric":
            ladder = numeric_ladder(a.m, n, L, a.samples or 2, a.seed)
        else:
            ladder = config_ladder(a.m, n, L, a.samples or 2, a.seed, BoundaryAnchors.default(n, a.u))
        doc = {"kind": "ladder", "seed": a.seed, **ladder_to_dict(ladder)}
    doc["version"] = __version__
    _emit(doc, a.out)
    return 0


# -- parsing -------------------------------------------------------------------

def _vector(text: str):
    try:
        v = np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated vector: {text!r}")
    norm = np.linalg.norm(v)
    if norm == 0:
        raise argparse.ArgumentTypeError("u must be nonzero")
    return v / norm


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stringlinks", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--m", type=_positive, default=1, help="block width of the divided powers")
    v.add_argument("--max-arity", type=_positive, default=None)
    v.add_argument("--k", type=_positive, default=None)
    v.add_argument("--n", type=int, default=None, help="ambient dimension")
    v.add_argument("--samples", type=_positive, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--mode", choices=("auto", "tensor", "probe"), default="auto")
    v.add_argument("--u", type=_vector, default=None, help="unit vector for doubled points, e.g. 0,0,1")
    v.add_argument("--level", type=_positive, default=None)
    v.add_argument("--x-size", type=_positive, default=2, help="size of the pointed set X")
    v.add_argument("--budget", type=int, default=10**6, help="enumeration budget, 0 for none")
    v.add_argument("--threads", type=_positive, default=default_threads())
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="dump sampled objects as JSON")
    s.add_argument("kind", choices=("config", "gauss", "ladder"))
    s.add_argument("--k", type=_positive, default=None)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--m", type=_positive, default=1)
    s.add_argument("--level", type=_positive, default=None)
    s.add_argument("--flavor", choices=("exact", "numeric", "config"), default="config")
    s.add_argument("--samples", type=_positive, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--min-sep", type=float, default=0.05)
    s.add_argument("--u", type=_vector, default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if getattr(a, "n", None) is not None and a.n < 2:
        parser.error("--n must be at least 2")
    if getattr(a, "u", None) is not None and a.n is not None and len(a.u) != a.n:
        parser.error("--u must have --n coordinates")
    try:
        return a.func(a)
    except (InvalidArgument, PreconditionError, SamplingError) as exc:
        print(f"stringlinks: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
