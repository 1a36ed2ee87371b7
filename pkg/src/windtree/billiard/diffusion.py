"""Diffusion-rate estimates from long trajectories and seeded campaigns."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..errors import CornerHit
from ..exact import delta_closed_form
from ..table import WindTreeTable
from .engine import DEFAULT_CORNER_TOL, Billiard, unit_direction
from .geometry import is_free

ESTIMATOR_NOTE = "diameter proxied by max distance from the start point (within a factor 2)"
MIN_SCHEDULE_POINTS = 12


@dataclass
class DiffusionEstimate:
    times: list[float]
    max_disp: list[float]
    delta_hat: float
    slope: float
    window: tuple[float, float]
    residual: float
    note: str = ESTIMATOR_NOTE


def geometric_schedule(t_max: float, points: int = 24, t_min: float | None = None) -> list[float]:
    """``points`` times spaced evenly in log between ``t_min`` and ``t_max``
    (default ``t_min = t_max / 10^4``, but at least 1)."""
    if points < MIN_SCHEDULE_POINTS:
        raise ValueError(f"need at least {MIN_SCHEDULE_POINTS} schedule points")
    t_min = max(1.0, t_max / 1e4) if t_min is None else t_min
    if not 0 < t_min < t_max:
        raise ValueError("t_max too small for a geometric schedule")
    return [float(t) for t in np.geomspace(t_min, t_max, points)]


def fit_slope(times: Sequence[float], disp: Sequence[float], window: float = 0.5) -> tuple[float, float, tuple[float, float]]:
    """Least-squares slope of ``log disp`` against ``log t`` over the last
    ``window`` fraction of the points. Returns ``(slope, rms residual, (t_lo, t_hi))``."""
    k = max(3, int(round(len(times) * window)))
    t = np.asarray(times[-k:], dtype=float)
    d = np.asarray(disp[-k:], dtype=float)
    good = d > 0
    if good.sum() < 2:
        return 0.0, 0.0, (float(t[0]), float(t[-1]))
    lt, ld = np.log(t[good]), np.log(d[good])
    coeffs, res, *_ = np.polyfit(lt, ld, 1, full=True)
    rms = math.sqrt(float(res[0]) / len(lt)) if len(res) else 0.0
    return float(coeffs[0]), rms, (float(t[0]), float(t[-1]))


def estimate_diffusion(
    table: WindTreeTable,
    direction: float | Sequence[float],
    start: tuple[float, float],
    t_max: float,
    schedule: Sequence[float] | None = None,
    window: float = 0.5,
    corner_tol: float = DEFAULT_CORNER_TOL,
) -> DiffusionEstimate:
    """Run one trajectory and fit the growth exponent of its maximal
    displacement. A corner hit raises :class:`CornerHit` whose ``partial``
    is the estimate built from the samples gathered before the hit."""
    times = list(schedule) if schedule is not None else geometric_schedule(t_max)
    if len(times) < MIN_SCHEDULE_POINTS:
        raise ValueError(f"need at least {MIN_SCHEDULE_POINTS} schedule points")
    billiard = Billiard(table, corner_tol=corner_tol)
    state = billiard.launch(start[0], start[1], direction)
    try:
        _, d2 = billiard.sample(state, times)
    except CornerHit as exc:
        _, d2 = exc.partial
        disp = [math.sqrt(v) for v in d2]
        exc.partial = _estimate(times[: len(disp)], disp, window) if len(disp) >= 3 else None
        raise
    return _estimate(times, [math.sqrt(v) for v in d2], window)


def _estimate(times, disp, window) -> DiffusionEstimate:
    slope, res, win = fit_slope(times, disp, window)
    return DiffusionEstimate(list(times), list(disp), min(1.0, max(0.0, slope)), slope, win, res)


# ----------------------------------------------------------------- campaigns


def trajectory_seed(seed: int, m: int, index: int) -> int:
    """64-bit seed of trajectory ``index`` in family ``m``."""
    return int(np.random.SeedSequence([seed, m, index]).generate_state(1, np.uint64)[0])


def random_launch(table: WindTreeTable, seed: int) -> tuple[float, tuple[float, float]]:
    """Uniform direction angle and uniform free start point from a seed."""
    rng = np.random.default_rng(seed)
    theta = float(rng.uniform(0, 2 * math.pi))
    while True:
        x = float(rng.uniform(0, table.L1))
        y = float(rng.uniform(0, table.L2))
        if is_free(table, x, y):
            return theta, (x, y)


@dataclass(frozen=True)
class TrajectoryRecord:
    m: int
    seed: int
    direction: float
    t: float
    max_disp: float
    delta_hat: float
    status: str = "ok"


@dataclass
class CampaignRow:
    m: int
    mean_delta: float
    spread: float
    n: int
    target: float

    def as_dict(self) -> dict:
        return {"m": self.m, "mean_delta_hat": self.mean_delta, "spread": self.spread, "n": self.n, "target": self.target}


@dataclass
class CampaignResult:
    rows: list[CampaignRow]
    records: list[TrajectoryRecord] = field(default_factory=list)

    @property
    def decreasing(self) -> bool:
        means = [r.mean_delta for r in sorted(self.rows, key=lambda r: r.m)]
        return all(a > b for a, b in zip(means, means[1:]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "seed", "direction", "t", "max_disp", "delta_hat"])
        for r in self.records:
            w.writerow([r.m, r.seed, repr(r.direction), repr(r.t), repr(r.max_disp), repr(r.delta_hat) if r.status == "ok" else r.status])
        return buf.getvalue()


def _one(job: tuple[int, WindTreeTable, int, float, int, float]) -> TrajectoryRecord:
    m, table, seed, t_max, points, window = job
    theta, start = random_launch(table, seed)
    try:
        est = estimate_diffusion(table, theta, start, t_max, geometric_schedule(t_max, points), window)
    except CornerHit:
        return TrajectoryRecord(m, seed, theta, t_max, float("nan"), float("nan"), "corner")
    return TrajectoryRecord(m, seed, theta, t_max, est.max_disp[-1], est.delta_hat)


def campaign(
    family: Iterable[tuple[int, WindTreeTable]],
    samples: int,
    t_max: float,
    seed: int = 0,
    jobs: int = 1,
    points: int = 24,
    window: float = 0.5,
) -> CampaignResult:
    """Run ``samples`` random trajectories for each ``(m, table)``.

    Trajectories are independent and seeded by ``(seed, m, index)``; the
    results are merged in that order, so the output does not depend on
    ``jobs``. Corner hits are recorded and left out of the means.
    """
    family = list(family)
    work = [(m, table, trajectory_seed(seed, m, i), t_max, points, window) for m, table in family for i in range(samples)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_one, work, chunksize=1))
    else:
        records = [_one(w) for w in work]
    rows = []
    for m, _ in family:
        vals = np.array([r.delta_hat for r in records if r.m == m and r.status == "ok"])
        mean = float(vals.mean()) if len(vals) else float("nan")
        spread = float(vals.std(ddof=1)) if len(vals) > 1 else 0.0
        rows.append(CampaignRow(m, mean, spread, len(vals), float(delta_closed_form(m))))
    return CampaignResult(rows, records)
