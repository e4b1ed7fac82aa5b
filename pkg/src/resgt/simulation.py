"""Monte-Carlo evaluation of testing schemes.

Each trial draws an infection pattern, encodes it to a syndrome, decodes
with the residual, and records whether recovery was exact.  Trial i uses
a seed mixed from the master seed and i, so campaigns are bit-reproducible
and independent of how trials are split across workers.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable

from .boolsemi import BoolVec, DimensionMismatch, hamming_weight, leq
from .residuation import TestingScheme, decode, encode

_MASK64 = (1 << 64) - 1

FIXED_WEIGHT = "fixed-weight"
BERNOULLI = "bernoulli"


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seed(master: int, trial: int) -> int:
    """Stable per-trial seed; depends only on (master, trial)."""
    return _splitmix64((_splitmix64(master & _MASK64) + trial) & _MASK64)


@dataclass(frozen=True)
class PatternModel:
    """How infection patterns are drawn.

    fixed-weight draws uniformly among the supports of the given weight;
    bernoulli sets each coordinate independently with the prevalence.
    """

    kind: str
    seed: int = 0
    weight: int | None = None
    prevalence: float | None = None

    def __post_init__(self) -> None:
        if self.kind == FIXED_WEIGHT:
            if self.weight is None or self.weight < 0:
                raise ValueError(f"fixed-weight model needs weight >= 0, got {self.weight}")
        elif self.kind == BERNOULLI:
            if self.prevalence is None or not 0.0 <= self.prevalence <= 1.0:
                raise ValueError(f"prevalence must be in [0, 1], got {self.prevalence}")
        else:
            raise ValueError(f"unknown model kind {self.kind!r}")

    @classmethod
    def fixed_weight(cls, weight: int, seed: int = 0) -> "PatternModel":
        return cls(FIXED_WEIGHT, seed=seed, weight=weight)

    @classmethod
    def bernoulli(cls, prevalence: float, seed: int = 0) -> "PatternModel":
        return cls(BERNOULLI, seed=seed, prevalence=prevalence)


def sample_pattern(model: PatternModel, n: int) -> BoolVec:
    """Draw one pattern of length n; deterministic for a given model seed."""
    rng = random.Random(model.seed)
    if model.kind == FIXED_WEIGHT:
        if model.weight > n:
            raise ValueError(f"weight {model.weight} exceeds length {n}")
        mask = 0
        for i in rng.sample(range(n), model.weight):
            mask |= 1 << i
        return BoolVec(n, mask)
    mask = 0
    p = model.prevalence
    for i in range(n):
        if rng.random() < p:
            mask |= 1 << i
    return BoolVec(n, mask)


@dataclass(frozen=True)
class TrialRecord:
    """One encode/decode round."""

    x: BoolVec
    y: BoolVec
    x_hat: BoolVec
    exact: bool
    false_positives: int


@dataclass(frozen=True)
class CampaignStats:
    trials: int
    exact: int
    false_positive_total: int
    samples: int
    tests: int

    @property
    def exact_rate(self) -> float:
        return self.exact / self.trials

    @property
    def mean_false_positives(self) -> float:
        return self.false_positive_total / self.trials

    @property
    def tests_per_sample(self) -> float:
        return self.tests / self.samples


def run_trial(scheme: TestingScheme, x: BoolVec) -> TrialRecord:
    if x.n != scheme.n:
        raise DimensionMismatch(f"pattern length {x.n} != scheme samples {scheme.n}")
    y = encode(scheme, x)
    x_hat = decode(scheme, y)
    if not leq(x, x_hat):
        raise AssertionError("decoder produced a false negative")
    return TrialRecord(
        x=x,
        y=y,
        x_hat=x_hat,
        exact=x == x_hat,
        false_positives=hamming_weight(x_hat) - hamming_weight(x),
    )


def _run_chunk(args: tuple[TestingScheme, PatternModel, int, int, bool]):
    scheme, model, start, stop, keep = args
    exact = 0
    fp_total = 0
    records = []
    for i in range(start, stop):
        x = sample_pattern(replace(model, seed=trial_seed(model.seed, i)), scheme.n)
        rec = run_trial(scheme, x)
        exact += rec.exact
        fp_total += rec.false_positives
        if keep:
            records.append(rec)
    return exact, fp_total, records


def run_campaign(
    scheme: TestingScheme,
    model: PatternModel,
    trials: int,
    workers: int = 1,
    log_cap: int | None = None,
) -> tuple[CampaignStats, list[TrialRecord]]:
    """Aggregate independent trials; the log keeps at most ``log_cap`` records.

    Results are identical for any worker count: trial i depends only on
    (master seed, i), and chunks are merged in trial order.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    keep = log_cap is None or log_cap > 0
    if workers <= 1:
        exact, fp_total, records = _run_chunk((scheme, model, 0, trials, keep))
    else:
        step = -(-trials // workers)
        chunks = [
            (scheme, model, start, min(start + step, trials), keep)
            for start in range(0, trials, step)
        ]
        exact = 0
        fp_total = 0
        records = []
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for c_exact, c_fp, c_records in ex.map(_run_chunk, chunks):
                exact += c_exact
                fp_total += c_fp
                records.extend(c_records)
    if log_cap is not None:
        records = records[:log_cap]
    stats = CampaignStats(
        trials=trials,
        exact=exact,
        false_positive_total=fp_total,
        samples=scheme.n,
        tests=scheme.k,
    )
    return stats, records


CSV_HEADER = "trial,weight_true,weight_decoded,exact,false_positives"


def campaign_csv(records: Iterable[TrialRecord]) -> str:
    """CSV log, one row per trial in trial order."""
    lines = [CSV_HEADER]
    for i, rec in enumerate(records):
        lines.append(
            f"{i},{hamming_weight(rec.x)},{hamming_weight(rec.x_hat)},"
            f"{int(rec.exact)},{rec.false_positives}"
        )
    return "\n".join(lines) + "\n"


def stats_text(stats: CampaignStats) -> str:
    lines = [
        f"trials={stats.trials}",
        f"exact={stats.exact}",
        f"exact_rate={stats.exact_rate!r}",
        f"false_positive_total={stats.false_positive_total}",
        f"mean_false_positives={stats.mean_false_positives!r}",
        f"samples={stats.samples}",
        f"tests={stats.tests}",
        f"tests_per_sample={stats.tests_per_sample!r}",
    ]
    return "\n".join(lines) + "\n"
