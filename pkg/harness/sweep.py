"""
Sweeps: generate instances over a seed range, check each one and write a CSV.

Rows are sorted by (seed, r, t) before emission, so identical configs give
byte-identical CSV text regardless of the worker count.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from config.settings import settings
from harness.convergence import ConvergenceReport, check_convergence
from harness.oscillation import OscillationRow, check_weak_oscillation, rows_to_dataframe
from instances.generators import FAMILIES, GeneratorParams, generate
from utils.errors import ConfigFormatError, PackCoverError


logger = logging.getLogger(__name__)


class SweepConfig(BaseModel):
    """A generator family, a seed range and the checks to run."""

    family: str
    params: GeneratorParams = Field(default_factory=GeneratorParams)
    seed_start: int = Field(default=0, ge=0)
    seed_stop: int = Field(default=100, ge=0, description="Exclusive upper end of the seed range")
    t_max: int = Field(default=4, ge=1)
    convergence: bool = Field(default=False, description="Also run the convergence check on every instance")
    slack: Optional[int] = Field(default=None, ge=0)
    workers: Optional[int] = Field(default=None, ge=1, le=64)

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_family(self) -> "SweepConfig":
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {sorted(FAMILIES)}")
        if self.seed_stop < self.seed_start:
            raise ValueError("seed_stop must not be smaller than seed_start")
        return self

    @property
    def seeds(self) -> range:
        return range(self.seed_start, self.seed_stop)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SweepConfig":
        """
        Read a JSON sweep config.

        Raises:
            ConfigFormatError: unreadable file, malformed JSON or failed validation
        """
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise ConfigFormatError(f"cannot read sweep config {path}: {e}") from e
        except json.JSONDecodeError as e:
            logger.error(f"Sweep config {path} is not valid JSON: {e}")
            raise ConfigFormatError(f"invalid JSON in {path}: {e}") from e
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            logger.error(f"Validation error in sweep config {path}: {e}")
            raise ConfigFormatError(str(e)) from e


class InstanceOutcome(BaseModel):
    seed: int
    instance_id: str
    rows: list[OscillationRow] = Field(default_factory=list)
    intersection_violations: list[str] = Field(default_factory=list)
    convergence: Optional[ConvergenceReport] = None
    skipped: Optional[str] = None

    model_config = ConfigDict(arbitrary_types_allowed=True)


class SweepResult(BaseModel):
    config: SweepConfig
    outcomes: list[InstanceOutcome]

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def rows(self) -> list[OscillationRow]:
        return [row for outcome in self.outcomes for row in outcome.rows]

    @property
    def violations(self) -> list[OscillationRow]:
        return [row for row in self.rows if row.verdict == "fail"]

    @property
    def intersection_violations(self) -> list[str]:
        return [f"{o.instance_id}: {v}" for o in self.outcomes for v in o.intersection_violations]

    @property
    def skipped(self) -> list[InstanceOutcome]:
        return [o for o in self.outcomes if o.skipped is not None]

    def convergence_counts(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "precondition-violation": 0}
        for outcome in self.outcomes:
            if outcome.convergence is not None:
                counts[outcome.convergence.status] += 1
        return counts

    def to_dataframe(self) -> pd.DataFrame:
        return rows_to_dataframe(self.rows)

    def to_csv_text(self) -> str:
        return self.to_dataframe().to_csv(index=False, lineterminator="\n")


def run_instance(config: SweepConfig, seed: int) -> InstanceOutcome:
    """Generate and check one instance; resource and feasibility failures become a skip."""
    instance_id = f"{config.family}-{seed}"
    try:
        inst = generate(config.family, config.params, seed)
        report = check_weak_oscillation(inst, config.t_max, instance_id=instance_id)
        convergence = check_convergence(inst, config.slack) if config.convergence else None
    except PackCoverError as e:
        logger.warning(f"Skipping {instance_id}: {e}")
        return InstanceOutcome(seed=seed, instance_id=instance_id, skipped=str(e))

    return InstanceOutcome(
        seed=seed,
        instance_id=instance_id,
        rows=sorted(report.rows, key=lambda row: (row.r, row.t)),
        intersection_violations=report.intersection_violations,
        convergence=convergence,
    )


def _run_instance_json(config_json: str, seed: int) -> str:
    # process workers exchange JSON text; rationals are validated from their text form
    config = SweepConfig.model_validate(json.loads(config_json))
    return run_instance(config, seed).model_dump_json()


def sweep(config: SweepConfig, out: Optional[Union[str, Path]] = None) -> SweepResult:
    """
    Run the configured sweep.

    Args:
        config: Sweep configuration
        out: Optional CSV path (header-only when the seed range is empty)

    Returns:
        SweepResult with outcomes ordered by seed
    """
    workers = config.workers or settings.sweep_workers
    seeds = list(config.seeds)
    logger.info(f"Sweeping {config.family} over {len(seeds)} seeds (t_max={config.t_max}, workers={workers})")

    if workers > 1 and len(seeds) > 1:
        config_json = config.model_dump_json()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            texts = list(pool.map(_run_instance_json, [config_json] * len(seeds), seeds))
        outcomes = [InstanceOutcome.model_validate(json.loads(text)) for text in texts]
    else:
        outcomes = [run_instance(config, seed) for seed in seeds]

    outcomes.sort(key=lambda o: o.seed)
    result = SweepResult(config=config, outcomes=outcomes)

    logger.info(
        f"Sweep done: {len(result.rows)} rows, {len(result.violations)} violations, "
        f"{len(result.skipped)} skipped"
    )
    if out is not None:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(result.to_csv_text(), encoding="utf-8")
        logger.info(f"Wrote sweep CSV to {path}")
    return result
