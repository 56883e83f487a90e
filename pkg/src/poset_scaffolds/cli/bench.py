"""
Benchmark families: scaffold sizes and timings on generated instances.

random3d   random d=3 intervals; scaffold size against the number of minima
u4         the N^4 family U^k; exact essential counts
limit2d    a d=2 interval with a random complex; scaffold limit vs naive limit
"""

import time
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import logging

import numpy as np
import pandas as pd

from ..config import settings
from ..exceptions import MaterializationError
from ..limits.grank import limit_over, module_on
from ..limits.limits import limit_full_equalizer
from ..linalg.field import PrimeField
from ..posets.grid import GridInterval, grid_leq
from ..scaffolds.grid import initial_scaffold_grid, upset_family_essential, upset_family_u_k
from .config import RunConfig
from .generators import grid_complex, random_grid_interval

logger = logging.getLogger(__name__)

COLUMNS = [
    "instance", "family", "n", "d", "r", "scaffold_size", "essential",
    "t_scaffold_ms", "t_limit_scaffold_ms", "t_limit_naive_ms",
]


def timed(fn: Callable, *args, **kwargs) -> Tuple[object, float]:
    """Call fn and return its result with the elapsed wall time in milliseconds."""
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, (time.perf_counter() - start) * 1000.0


def linear_fit(x, y) -> Tuple[float, float, float]:
    """Least-squares line through (x, y): slope, intercept and R²."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = np.sum((y - y.mean()) ** 2)
    r2 = 1.0 - float(np.sum(residual ** 2) / total) if total > 0 else 1.0
    return float(slope), float(intercept), r2


def bench_random3d(config: RunConfig, rng: np.random.Generator) -> List[Dict]:
    rows = []
    for i, n in enumerate(config.sizes):
        Q = random_grid_interval(rng, 3, n)
        P, t = timed(initial_scaffold_grid, Q, config.grid_algo)
        rows.append({
            "instance": i, "family": "random3d", "n": n, "d": 3, "r": 0,
            "scaffold_size": len(P), "essential": len(P) - len(Q.minima),
            "t_scaffold_ms": t, "t_limit_scaffold_ms": np.nan, "t_limit_naive_ms": np.nan,
        })
        logger.info(f"random3d n={n}: scaffold {len(P)} in {t:.1f} ms")
    if len(rows) >= 2:
        slope, intercept, r2 = linear_fit([r["n"] for r in rows], [r["scaffold_size"] for r in rows])
        logger.info(f"random3d fit: |scaffold| ≈ {slope:.3f}·n + {intercept:.1f}, R² = {r2:.4f}")
    return rows


def bench_u4(config: RunConfig, rng: np.random.Generator) -> List[Dict]:
    rows = []
    for i, k in enumerate(config.sizes):
        minima = upset_family_u_k(k)
        P, t = timed(initial_scaffold_grid, GridInterval(4, minima, cogenerators=()), "joins")
        essential = len(P) - len(minima)
        expected = len(upset_family_essential(k))
        if essential != expected:
            logger.warning(f"U^{k}: {essential} essential points, expected {expected}")
        rows.append({
            "instance": i, "family": "u4", "n": len(minima), "d": 4, "r": 0,
            "scaffold_size": len(P), "essential": essential,
            "t_scaffold_ms": t, "t_limit_scaffold_ms": np.nan, "t_limit_naive_ms": np.nan,
        })
        logger.info(f"U^{k}: {essential} essential points ((k+1)^2 = {(k + 1) ** 2})")
    return rows


def bench_limit2d(config: RunConfig, rng: np.random.Generator) -> List[Dict]:
    F = PrimeField(config.field or settings.field_prime)
    rows = []
    for i, n in enumerate(config.sizes):
        Q = random_grid_interval(rng, 2, n)
        C = grid_complex(rng, F, Q, config.rank)
        P, t_scaffold = timed(initial_scaffold_grid, Q, config.grid_algo)
        (lim, _), t_limit = timed(limit_over, C, Q, config.grid_algo, config.threads)

        t_naive = np.nan
        try:
            Qp = Q.to_poset()
        except MaterializationError as exc:
            logger.info(f"limit2d n={n}: naive limit skipped ({exc})")
        else:
            def naive():
                G = module_on(C, Qp.canonical_order, Qp.hasse_edges, grid_leq, config.threads)
                return limit_full_equalizer(G)

            full, t_naive = timed(naive)
            if full.dim != lim.dim:
                logger.warning(f"limit2d n={n}: naive dimension {full.dim} != scaffold dimension {lim.dim}")
        rows.append({
            "instance": i, "family": "limit2d", "n": n, "d": 2, "r": config.rank,
            "scaffold_size": len(P), "essential": len(P) - len(Q.minima),
            "t_scaffold_ms": t_scaffold, "t_limit_scaffold_ms": t_limit,
            "t_limit_naive_ms": t_naive,
        })
        logger.info(f"limit2d n={n}: dim lim {lim.dim}, scaffold {t_limit:.1f} ms, naive {t_naive:.1f} ms")
    return rows


FAMILIES = {
    "random3d": bench_random3d,
    "u4": bench_u4,
    "limit2d": bench_limit2d,
}


def run_bench(config: RunConfig) -> pd.DataFrame:
    """Run one family and write its table as CSV (to --out, or into the bench directory)."""
    rng = np.random.default_rng(config.seed)
    rows = FAMILIES[config.family](config, rng)
    frame = pd.DataFrame(rows, columns=COLUMNS)
    out = config.out or Path(settings.bench_dir) / f"{config.family}.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(out, index=False)
    logger.info(f"Wrote {len(frame)} rows to {out}")
    return frame
