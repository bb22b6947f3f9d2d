"""Seeded, reproducible sweeps that stress every bound in the package.

A sweep is described by an :class:`ExperimentConfig` (loadable from JSON):
a dimension, a source of generator vectors, a list of n values, tolerances
and output sinks.  ``run_sweep`` computes the undefeated-edge report and
the full approximation profile for every trial, checks each quantity
against its ceiling, and aggregates a :class:`SweepSummary` that can be
serialized to JSON and per-trial CSV rows.  ``cross_check`` runs the sweep
engine against the brute-force oracle on every trial and reports any
disagreement verbatim.

Determinism: trial i draws from ``numpy.random.default_rng([seed, i])``,
so a config's seed fully fixes the trial stream, trials are independent,
and summaries merge commutatively.
"""

from __future__ import annotations

import csv
import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .denominators import (
    PRIMARY_DISTINCT_BOUND_2D,
    approximation_profile,
    primary_count_bound,
    secondary_distinct_bound,
    undercut_bound,
)
from .gaps import chung_graham_gaps, gap_spectrum, geelen_simpson_gaps
from .numerics import Real
from .tournament import (survivor_bound, survivor_bound_alt, survivors_brute,
                         survivors_sweep)

__all__ = [
    "ConfigError",
    "CrossCheckReport",
    "ExperimentConfig",
    "OutputSpec",
    "SweepSummary",
    "TrialRecord",
    "VerifyResult",
    "cross_check",
    "dual_mode_agreement",
    "load_config",
    "run_sweep",
    "verify_suite",
    "QUADRATIC_IRRATIONALS",
    "VERIFY_SUITES",
]

# Worst-case-like continued fractions; pairs and triples of these exercise
# extreme champion-denominator geometry.
QUADRATIC_IRRATIONALS: dict[str, float] = {
    "sqrt2": math.sqrt(2.0) - 1.0,
    "sqrt3": math.sqrt(3.0) - 1.0,
    "golden": (math.sqrt(5.0) - 1.0) / 2.0,
    "sqrt7": math.sqrt(7.0) - 2.0,
}

_RATIONAL_GUARD = 1e-12


class ConfigError(ValueError):
    """Raised for malformed experiment configs; lists the offending keys."""

    def __init__(self, message: str, offending: list[str] | None = None):
        self.offending = offending or []
        if self.offending:
            message = f"{message} (offending keys: {', '.join(self.offending)})"
        super().__init__(message)


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

@dataclass
class UniformRandom:
    trials: int
    kind: str = "uniform_random"


@dataclass
class QuadraticIrrationals:
    catalog: list[str] = field(default_factory=lambda: list(QUADRATIC_IRRATIONALS))
    kind: str = "quadratic_irrationals"


@dataclass
class RationalGrid:
    max_denominator: int
    kind: str = "rational_grid"


@dataclass
class Explicit:
    alphas: list[list]
    kind: str = "explicit"


@dataclass
class OutputSpec:
    summary_json: str | None = None
    trials_csv: str | None = None


@dataclass
class ExperimentConfig:
    m: int
    alpha_source: UniformRandom | QuadraticIrrationals | RationalGrid | Explicit
    n_values: list[int]
    epsilon: float = 1e-9
    oracle_cap: int = 80
    seed: int = 0
    output: OutputSpec = field(default_factory=OutputSpec)

    def to_dict(self) -> dict:
        d = asdict(self)
        src = d["alpha_source"]
        if src.get("alphas"):
            src["alphas"] = [[_num_to_json(v) for v in row] for row in src["alphas"]]
        return d


def _num_to_json(v: Real):
    return f"{v.numerator}/{v.denominator}" if isinstance(v, Fraction) else v


def _parse_component(v) -> Real:
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, (int, float)):
        return v
    raise ConfigError(f"unparseable generator component {v!r}")


_SOURCE_KEYS = {
    "uniform_random": {"kind", "trials"},
    "quadratic_irrationals": {"kind", "catalog"},
    "rational_grid": {"kind", "max_denominator"},
    "explicit": {"kind", "alphas"},
}


def _parse_source(d: dict, m: int):
    if not isinstance(d, dict) or "kind" not in d:
        raise ConfigError("alpha_source must be an object with a 'kind'",
                          ["alpha_source"])
    kind = d["kind"]
    if kind not in _SOURCE_KEYS:
        raise ConfigError(f"unknown alpha_source kind {kind!r}", ["alpha_source.kind"])
    extra = set(d) - _SOURCE_KEYS[kind]
    if extra:
        raise ConfigError("unknown alpha_source keys",
                          [f"alpha_source.{k}" for k in sorted(extra)])
    if kind == "uniform_random":
        trials = d.get("trials")
        if not isinstance(trials, int) or trials < 1:
            raise ConfigError("uniform_random needs a positive integer 'trials'",
                              ["alpha_source.trials"])
        return UniformRandom(trials=trials)
    if kind == "quadratic_irrationals":
        catalog = d.get("catalog", list(QUADRATIC_IRRATIONALS))
        bad = [c for c in catalog if c not in QUADRATIC_IRRATIONALS]
        if bad or len(catalog) < m:
            raise ConfigError(
                f"catalog must pick at least m of {sorted(QUADRATIC_IRRATIONALS)}",
                ["alpha_source.catalog"])
        return QuadraticIrrationals(catalog=list(catalog))
    if kind == "rational_grid":
        md = d.get("max_denominator")
        if not isinstance(md, int) or md < 2:
            raise ConfigError("rational_grid needs max_denominator >= 2",
                              ["alpha_source.max_denominator"])
        return RationalGrid(max_denominator=md)
    alphas = d.get("alphas")
    if not isinstance(alphas, list) or not alphas:
        raise ConfigError("explicit source needs a nonempty 'alphas' list",
                          ["alpha_source.alphas"])
    rows = []
    for i, row in enumerate(alphas):
        if not isinstance(row, list) or len(row) != m:
            raise ConfigError(f"alphas[{i}] must be a list of m components",
                              [f"alpha_source.alphas[{i}]"])
        rows.append([_parse_component(v) for v in row])
    return Explicit(alphas=rows)


def config_from_dict(d: dict) -> ExperimentConfig:
    if not isinstance(d, dict):
        raise ConfigError("config must be a JSON object")
    known = {"m", "alpha_source", "n_values", "epsilon", "oracle_cap", "seed", "output"}
    extra = sorted(set(d) - known)
    if extra:
        raise ConfigError("unknown config keys", extra)
    missing = sorted(k for k in ("m", "alpha_source", "n_values") if k not in d)
    if missing:
        raise ConfigError("missing required config keys", missing)
    offending = []
    m = d["m"]
    if not isinstance(m, int) or m < 1:
        offending.append("m")
    n_values = d["n_values"]
    if (not isinstance(n_values, list) or not n_values
            or not all(isinstance(n, int) and n >= 2 for n in n_values)):
        offending.append("n_values")
    epsilon = d.get("epsilon", 1e-9)
    if not isinstance(epsilon, (int, float)) or epsilon < 0:
        offending.append("epsilon")
    oracle_cap = d.get("oracle_cap", 80)
    if not isinstance(oracle_cap, int) or oracle_cap < 2:
        offending.append("oracle_cap")
    seed = d.get("seed", 0)
    if not isinstance(seed, int):
        offending.append("seed")
    out = d.get("output", {})
    if not isinstance(out, dict) or set(out) - {"summary_json", "trials_csv"}:
        offending.append("output")
    if offending:
        raise ConfigError("invalid config values", offending)
    return ExperimentConfig(
        m=m,
        alpha_source=_parse_source(d["alpha_source"], m),
        n_values=list(n_values),
        epsilon=float(epsilon),
        oracle_cap=oracle_cap,
        seed=seed,
        output=OutputSpec(summary_json=out.get("summary_json"),
                          trials_csv=out.get("trials_csv")),
    )


def load_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    return config_from_dict(data)


# ---------------------------------------------------------------------------
# Trial enumeration
# ---------------------------------------------------------------------------

def _near_rational(x: float, max_denominator: int) -> bool:
    approx = Fraction(x).limit_denominator(max(1, max_denominator))
    return abs(x - approx) < _RATIONAL_GUARD


def _draw_alphas(rng: np.random.Generator, m: int, n: int) -> tuple[list[float], int]:
    """Uniform components, redrawn while any is near a rational with
    denominator <= n (floating-degeneracy guard)."""
    rejected = 0
    while True:
        comps = [float(x) for x in rng.random(m)]
        if all(not _near_rational(c, n) for c in comps):
            return comps, rejected
        rejected += 1
        if rejected > 1000:
            raise RuntimeError("degeneracy guard rejected 1000 consecutive draws")


def _trial_rng(seed: int, trial_id: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial_id])


def _enumerate_trials(config: ExperimentConfig) -> Iterator[tuple[int, list, int, int]]:
    """Yields (trial_id, alphas, n, rejected_draws)."""
    src = config.alpha_source
    if isinstance(src, UniformRandom):
        for i in range(src.trials):
            rng = _trial_rng(config.seed, i)
            n = int(config.n_values[rng.integers(len(config.n_values))])
            alphas, rejected = _draw_alphas(rng, config.m, n)
            yield i, alphas, n, rejected
        return
    if isinstance(src, QuadraticIrrationals):
        values = [QUADRATIC_IRRATIONALS[name] for name in src.catalog]
        tuples = list(itertools.combinations(values, config.m))
    elif isinstance(src, RationalGrid):
        fracs = [Fraction(p, q) for q in range(2, src.max_denominator + 1)
                 for p in range(1, q) if gcd(p, q) == 1]
        tuples = list(itertools.product(fracs, repeat=config.m))
    else:
        tuples = [tuple(row) for row in src.alphas]
    i = 0
    for alphas in tuples:
        for n in config.n_values:
            yield i, list(alphas), n, 0
            i += 1


# ---------------------------------------------------------------------------
# Trial records and summary
# ---------------------------------------------------------------------------

@dataclass
class TrialRecord:
    trial_id: int
    m: int
    n: int
    alphas: list
    survivor_count: int | None = None
    distinct_count: int | None = None
    max_length: float | None = None
    distinct_lengths: list = field(default_factory=list)
    q1: int | None = None
    q2: int | None = None
    primary_count: int | None = None
    secondary_count: int | None = None
    lemma2_count: int | None = None
    primary_distinct: int | None = None
    secondary_distinct: int | None = None
    violations: list[str] = field(default_factory=list)
    survivors_within_gaps: bool | None = None
    gaps_within_survivors: bool | None = None
    error: str | None = None

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["alphas"] = [_num_to_json(a) for a in self.alphas]
        return d

    def csv_row(self) -> list:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, Fraction):
                return f"{v.numerator}/{v.denominator}"
            return v

        return ([self.trial_id, self.m, self.n]
                + [cell(a) for a in self.alphas]
                + [cell(v) for v in (self.survivor_count, self.distinct_count,
                                     self.max_length, self.q1, self.q2,
                                     self.primary_count, self.secondary_count,
                                     self.lemma2_count)])


def csv_header(m: int) -> list[str]:
    return (["trial_id", "m", "n"]
            + [f"alpha_{i}" for i in range(1, m + 1)]
            + ["survivor_count", "distinct_count", "max_length", "q1", "q2",
               "primary_count", "secondary_count", "lemma2_count"])


@dataclass
class SweepSummary:
    config: dict
    records: list[TrialRecord] = field(default_factory=list)
    trials: int = 0
    max_distinct: int = 0
    distinct_histogram: dict[int, int] = field(default_factory=dict)
    violations: dict[str, int] = field(default_factory=dict)
    violation_witnesses: list[dict] = field(default_factory=list)
    rejected_draws: int = 0
    errors: int = 0
    sink_errors: list[str] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    @property
    def status(self) -> str:
        return "FAILED" if (self.total_violations or self.errors) else "PASSED"

    def add(self, record: TrialRecord, rejected: int = 0) -> None:
        self.records.append(record)
        self.trials += 1
        self.rejected_draws += rejected
        if record.error is not None:
            self.errors += 1
            return
        k = record.distinct_count
        self.distinct_histogram[k] = self.distinct_histogram.get(k, 0) + 1
        self.max_distinct = max(self.max_distinct, k)
        for v in record.violations:
            self.violations[v] = self.violations.get(v, 0) + 1
        if record.violations:
            self.violation_witnesses.append(record.to_json_dict())

    def merge(self, other: "SweepSummary") -> "SweepSummary":
        """Commutative, order-independent combination of two summaries."""
        out = SweepSummary(config=self.config)
        out.records = self.records + other.records
        out.trials = self.trials + other.trials
        out.max_distinct = max(self.max_distinct, other.max_distinct)
        for hist in (self.distinct_histogram, other.distinct_histogram):
            for k, v in hist.items():
                out.distinct_histogram[k] = out.distinct_histogram.get(k, 0) + v
        for viol in (self.violations, other.violations):
            for k, v in viol.items():
                out.violations[k] = out.violations.get(k, 0) + v
        out.violation_witnesses = self.violation_witnesses + other.violation_witnesses
        out.rejected_draws = self.rejected_draws + other.rejected_draws
        out.errors = self.errors + other.errors
        out.sink_errors = self.sink_errors + other.sink_errors
        return out

    def to_json_dict(self) -> dict:
        return {
            "config": self.config,
            "trials": self.trials,
            "max_distinct": self.max_distinct,
            "distinct_histogram": {str(k): v for k, v in
                                   sorted(self.distinct_histogram.items())},
            "violations": dict(sorted(self.violations.items())),
            "violation_witnesses": self.violation_witnesses,
            "rejected_draws": self.rejected_draws,
            "errors": self.errors,
            "sink_errors": self.sink_errors,
            "status": self.status,
            "records": [r.to_json_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# Running sweeps
# ---------------------------------------------------------------------------

def _gap_match(values: Sequence[float], targets: Sequence[float], tol: float) -> bool:
    return all(any(abs(v - t) <= tol for t in targets) for v in values)


def run_trial(trial_id: int, alphas: list, n: int, *, epsilon: float = 1e-9) -> TrialRecord:
    """Survivors, approximation profile, and bound checks for one instance."""
    m = len(alphas)
    record = TrialRecord(trial_id=trial_id, m=m, n=n, alphas=list(alphas))
    try:
        report = survivors_sweep(alphas, n, epsilon=epsilon)
        profile = approximation_profile(alphas, n, epsilon=epsilon)
    except Exception as exc:  # recorded, never swallowed
        record.error = f"{type(exc).__name__}: {exc}"
        return record
    record.survivor_count = report.survivor_count
    record.distinct_count = report.distinct_count
    record.distinct_lengths = list(report.distinct_lengths)
    record.max_length = max(report.distinct_lengths)
    record.q1 = profile.q1
    record.q2 = profile.q2
    record.primary_count = len(profile.primary)
    record.secondary_count = len(profile.secondary)
    record.lemma2_count = profile.undercut
    record.primary_distinct = profile.primary_distinct
    record.secondary_distinct = profile.secondary_distinct

    if record.distinct_count > survivor_bound(m):
        record.violations.append("survivor_bound")
    if record.primary_count > primary_count_bound(m):
        record.violations.append("primary_count")
    if m == 2 and profile.primary_distinct > PRIMARY_DISTINCT_BOUND_2D:
        record.violations.append("primary_distinct")
    if profile.undercut is not None and profile.undercut > undercut_bound(m):
        record.violations.append("undercut")
    if profile.secondary and profile.secondary_distinct > secondary_distinct_bound(m):
        record.violations.append("secondary_distinct")

    if m == 1:
        spectrum = gap_spectrum(alphas[0], n, epsilon=epsilon)
        tol = max(epsilon, 1e-12)
        record.survivors_within_gaps = _gap_match(
            report.distinct_lengths, spectrum.distinct_gaps, tol)
        record.gaps_within_survivors = _gap_match(
            spectrum.distinct_gaps, report.distinct_lengths, tol)
    return record


def run_sweep(config: ExperimentConfig) -> SweepSummary:
    """Run every trial of a config, aggregate, and write configured sinks."""
    summary = SweepSummary(config=config.to_dict())
    for trial_id, alphas, n, rejected in _enumerate_trials(config):
        summary.add(run_trial(trial_id, alphas, n, epsilon=config.epsilon), rejected)
    out = config.output
    if out.trials_csv:
        try:
            write_trials_csv(summary, out.trials_csv)
        except OSError as exc:
            summary.sink_errors.append(f"trials_csv: {exc}")
    if out.summary_json:
        try:
            with open(out.summary_json, "w", encoding="utf-8") as fh:
                fh.write(summary.to_json())
        except OSError as exc:
            summary.sink_errors.append(f"summary_json: {exc}")
    return summary


def write_trials_csv(summary: SweepSummary, path: str) -> None:
    m = summary.config["m"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(csv_header(m))
        writer.writerows(r.csv_row() for r in summary.records)


# ---------------------------------------------------------------------------
# Oracle cross-check
# ---------------------------------------------------------------------------

@dataclass
class CrossCheckReport:
    trials: int = 0
    mismatches: list[dict] = field(default_factory=list)
    errors: int = 0

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.errors


def _reports_agree(a, b) -> bool:
    return (a.survivors == b.survivors
            and a.distinct_count == b.distinct_count
            and all(abs(x - y) <= 1e-12 for x, y in
                    zip(a.distinct_lengths, b.distinct_lengths)))


def cross_check(config: ExperimentConfig) -> CrossCheckReport:
    """Run sweep and brute-force oracle on every trial; any disagreement is
    reported with the full instance."""
    bad_n = [n for n in config.n_values if n > config.oracle_cap]
    if bad_n:
        raise ConfigError(
            f"cross_check needs every n <= oracle_cap={config.oracle_cap}",
            ["n_values"])
    report = CrossCheckReport()
    for trial_id, alphas, n, _ in _enumerate_trials(config):
        report.trials += 1
        try:
            swept = survivors_sweep(alphas, n, epsilon=config.epsilon)
            brute = survivors_brute(alphas, n, epsilon=config.epsilon,
                                    oracle_cap=config.oracle_cap)
        except Exception as exc:
            report.errors += 1
            report.mismatches.append({
                "trial_id": trial_id,
                "alphas": [_num_to_json(a) for a in alphas],
                "n": n,
                "error": f"{type(exc).__name__}: {exc}",
            })
            continue
        if not _reports_agree(swept, brute):
            report.mismatches.append({
                "trial_id": trial_id,
                "alphas": [_num_to_json(a) for a in alphas],
                "n": n,
                "sweep_survivors": swept.survivors,
                "brute_survivors": brute.survivors,
                "sweep_lengths": swept.distinct_lengths,
                "brute_lengths": brute.distinct_lengths,
            })
    return report


# ---------------------------------------------------------------------------
# Named verification suites (shared by the CLI and the acceptance tests)
# ---------------------------------------------------------------------------

@dataclass
class VerifyResult:
    suite: str
    checks: list[tuple[str, bool, dict]] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def check(self, label: str, ok: bool, **info) -> None:
        self.checks.append((label, bool(ok), info))


def _suite_one_d(trials: int, seed: int, max_n: int, epsilon: float) -> VerifyResult:
    res = VerifyResult("one_d")
    worst = 0
    violations = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        n = int(rng.integers(2, max_n + 1))
        (alpha,), _ = _draw_alphas(rng, 1, n)
        spectrum = gap_spectrum(alpha, n, epsilon=epsilon)
        worst = max(worst, spectrum.distinct_count)
        if spectrum.distinct_count > 3:
            violations += 1
    res.check(f"three-gap bound over {trials} trials", violations == 0,
              max_distinct=worst, violations=violations)
    res.stats["max_distinct_gaps"] = worst

    surv_trials = min(200, trials)
    surv_max_n = min(max_n, 200)
    surv_viol = 0
    surv_worst = 0
    within = 0
    contains = 0
    for i in range(surv_trials):
        rng = _trial_rng(seed + 1, i)
        n = int(rng.integers(2, surv_max_n + 1))
        alphas, _ = _draw_alphas(rng, 1, n)
        record = run_trial(i, alphas, n, epsilon=epsilon)
        if record.error or record.violations:
            surv_viol += 1
        surv_worst = max(surv_worst, record.distinct_count or 0)
        within += bool(record.survivors_within_gaps)
        contains += bool(record.gaps_within_survivors)
    res.check(f"1D survivor bound over {surv_trials} trials", surv_viol == 0,
              max_distinct=surv_worst)
    res.stats.update(max_distinct_survivors=surv_worst,
                     survivors_within_gaps=f"{within}/{surv_trials}",
                     gaps_within_survivors=f"{contains}/{surv_trials}")
    return res


def _survivor_suite(name: str, m: int, trials: int, seed: int, max_n: int,
                    epsilon: float) -> VerifyResult:
    res = VerifyResult(name)
    bound = survivor_bound(m)
    worst = 0
    bad = 0
    errors = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        n = int(rng.integers(2, max_n + 1))
        alphas, _ = _draw_alphas(rng, m, n)
        record = run_trial(i, alphas, n, epsilon=epsilon)
        if record.error:
            errors += 1
            continue
        worst = max(worst, record.distinct_count)
        if record.violations:
            bad += 1
    res.check(f"|S| <= {bound} over {trials} trials (m={m})",
              bad == 0 and errors == 0,
              max_distinct=worst, violations=bad, errors=errors)
    res.stats["max_distinct"] = worst
    res.stats["bound"] = bound
    if m >= 3:
        res.stats["bound_alt_variant"] = survivor_bound_alt(m)
    return res


def _suite_lemmas(trials: int, seed: int, max_n: int, epsilon: float) -> VerifyResult:
    res = VerifyResult("lemmas")
    plan = [(1, max(1, trials // 10)), (2, trials), (3, max(1, (3 * trials) // 10))]
    for m, count in plan:
        worst_primary = 0
        worst_undercut = 0
        worst_primary_distinct = 0
        worst_secondary_distinct = 0
        bad: dict[str, int] = {}
        for i in range(count):
            rng = _trial_rng(seed + m, i)
            n = int(rng.integers(2, max_n + 1))
            alphas, _ = _draw_alphas(rng, m, n)
            profile = approximation_profile(alphas, n, epsilon=epsilon)
            pc = len(profile.primary)
            worst_primary = max(worst_primary, pc)
            if pc > primary_count_bound(m):
                bad["primary_count"] = bad.get("primary_count", 0) + 1
            if m == 2:
                worst_primary_distinct = max(worst_primary_distinct,
                                             profile.primary_distinct)
                if profile.primary_distinct > PRIMARY_DISTINCT_BOUND_2D:
                    bad["primary_distinct"] = bad.get("primary_distinct", 0) + 1
            if profile.undercut is not None:
                worst_undercut = max(worst_undercut, profile.undercut)
                if profile.undercut > undercut_bound(m):
                    bad["undercut"] = bad.get("undercut", 0) + 1
            worst_secondary_distinct = max(worst_secondary_distinct,
                                           profile.secondary_distinct)
            if profile.secondary and (profile.secondary_distinct
                                      > secondary_distinct_bound(m)):
                bad["secondary_distinct"] = bad.get("secondary_distinct", 0) + 1
        res.check(
            f"m={m}: primary count <= {primary_count_bound(m)}, "
            f"undercut <= {undercut_bound(m)} over {count} trials",
            not bad,
            worst_primary=worst_primary,
            worst_undercut=worst_undercut,
            worst_primary_distinct=worst_primary_distinct,
            worst_secondary_distinct=worst_secondary_distinct,
            violations=bad,
        )
    return res


def _suite_classical(trials: int, seed: int, epsilon: float) -> VerifyResult:
    res = VerifyResult("classical")
    cg_bad = 0
    cg_worst = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        d = int(rng.integers(1, 6))
        n_list = [int(x) for x in rng.integers(1, 51, size=d)]
        alphas, _ = _draw_alphas(rng, 1, max(n_list))
        lambdas = [float(x) for x in rng.random(d)]
        spectrum = chung_graham_gaps(alphas[0], lambdas, n_list, epsilon=epsilon)
        cg_worst = max(cg_worst, spectrum.distinct_count - 3 * d)
        if spectrum.distinct_count > 3 * d:
            cg_bad += 1
    res.check(f"shifted-copies gap bound 3d over {trials} trials (d <= 5)",
              cg_bad == 0, violations=cg_bad, worst_margin=cg_worst)

    gs_bad = 0
    for i in range(trials):
        rng = _trial_rng(seed + 1, i)
        n1 = int(rng.integers(1, 41))
        n2 = int(rng.integers(1, 41))
        (alpha, beta), _ = _draw_alphas(rng, 2, max(n1 * n2, 2))
        spectrum = geelen_simpson_gaps(alpha, beta, n1, n2, epsilon=epsilon)
        if spectrum.distinct_count > n1 + 3 or spectrum.distinct_count > n2 + 3:
            gs_bad += 1
    res.check(f"two-generator gap bound min(n1,n2)+3 over {trials} trials "
              "(n1,n2 <= 40)", gs_bad == 0, violations=gs_bad)
    return res


def _suite_oracle(trials: int, seed: int, max_n: int, oracle_cap: int,
                  epsilon: float) -> VerifyResult:
    res = VerifyResult("oracle")
    cap = min(max_n, oracle_cap, 50)
    for m in (1, 2, 3):
        mismatches = 0
        for i in range(trials):
            rng = _trial_rng(seed + m, i)
            n = int(rng.integers(2, cap + 1))
            alphas, _ = _draw_alphas(rng, m, n)
            swept = survivors_sweep(alphas, n, epsilon=epsilon)
            brute = survivors_brute(alphas, n, epsilon=epsilon, oracle_cap=oracle_cap)
            if not _reports_agree(swept, brute):
                mismatches += 1
        res.check(f"sweep == brute on {trials} trials (m={m}, n <= {cap})",
                  mismatches == 0, mismatches=mismatches)
    return res


VERIFY_SUITES = ("one_d", "planar", "higher", "lemmas", "classical", "oracle")

_SUITE_DEFAULTS = {
    "one_d": (10_000, 500),
    "planar": (1_000, 300),
    "higher": (300, 120),
    "lemmas": (1_000, 300),
    "classical": (500, 0),
    "oracle": (200, 50),
}


def verify_suite(name: str, *, trials: int | None = None, seed: int = 0,
                 max_n: int | None = None, oracle_cap: int = 80,
                 epsilon: float = 1e-9) -> VerifyResult:
    """Run one named verification suite at the given scale."""
    if name not in VERIFY_SUITES:
        raise ValueError(f"unknown suite {name!r}; pick one of {', '.join(VERIFY_SUITES)}")
    d_trials, d_max_n = _SUITE_DEFAULTS[name]
    trials = d_trials if trials is None else trials
    max_n = d_max_n if max_n is None else max_n
    if name == "one_d":
        return _suite_one_d(trials, seed, max_n, epsilon)
    if name == "planar":
        return _survivor_suite("planar", 2, trials, seed, max_n, epsilon)
    if name == "higher":
        return _survivor_suite("higher", 3, trials, seed, max_n, epsilon)
    if name == "lemmas":
        return _suite_lemmas(trials, seed, max_n, epsilon)
    if name == "classical":
        return _suite_classical(trials, seed, epsilon)
    return _suite_oracle(trials, seed, max_n, oracle_cap, epsilon)


# ---------------------------------------------------------------------------
# Exact-vs-floating agreement
# ---------------------------------------------------------------------------

@dataclass
class AgreementReport:
    instances: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def dual_mode_agreement(instances: int = 200, *, seed: int = 0,
                        max_denominator: int = 50, max_n: int = 40,
                        epsilon: float = 1e-9) -> AgreementReport:
    """Rational instances run in exact mode and as floats must produce the
    same survivor edge set, the same distinct lengths, and the same q1/q2."""
    report = AgreementReport()
    for i in range(instances):
        rng = _trial_rng(seed, i)
        m = 1 + int(rng.integers(2))
        n = int(rng.integers(5, max_n + 1))
        fracs = []
        for _ in range(m):
            den = int(rng.integers(2, max_denominator + 1))
            num = int(rng.integers(1, den))
            fracs.append(Fraction(num, den))
        floats = [float(f) for f in fracs]
        report.instances += 1
        exact_rep = survivors_sweep(fracs, n)
        float_rep = survivors_sweep(floats, n, epsilon=epsilon)
        prof_e = approximation_profile(fracs, n)
        prof_f = approximation_profile(floats, n, epsilon=epsilon)
        same = (exact_rep.survivors == float_rep.survivors
                and exact_rep.distinct_count == float_rep.distinct_count
                and all(abs(a - b) <= 1e-9 for a, b in
                        zip(exact_rep.distinct_lengths, float_rep.distinct_lengths))
                and prof_e.q1 == prof_f.q1 and prof_e.q2 == prof_f.q2)
        if not same:
            report.mismatches.append({
                "instance": i,
                "alphas": [_num_to_json(f) for f in fracs],
                "n": n,
                "exact_survivors": exact_rep.survivors,
                "float_survivors": float_rep.survivors,
                "exact_q1q2": (prof_e.q1, prof_e.q2),
                "float_q1q2": (prof_f.q1, prof_f.q2),
            })
    return report
