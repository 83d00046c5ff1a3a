from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sat_dominance.settings import settings

from .strategy import ReductionStrategy


def _default_strategy() -> ReductionStrategy:
    return ReductionStrategy.from_name(settings.DEFAULT_STRATEGY, settings.DEFAULT_MEASURES)


class SolverConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    var_decay: float = Field(default_factory=lambda: settings.VAR_DECAY, gt=0.0, lt=1.0)
    clause_decay: float = Field(default_factory=lambda: settings.CLAUSE_DECAY, gt=0.0, lt=1.0)
    luby_unit: int = Field(default_factory=lambda: settings.LUBY_UNIT, gt=0)
    reduce_base: int = Field(default_factory=lambda: settings.REDUCE_BASE, gt=0)
    reduce_inc: int = Field(default_factory=lambda: settings.REDUCE_INC, gt=0)
    strategy: ReductionStrategy = Field(default_factory=_default_strategy)
    seed: int = Field(default_factory=lambda: settings.RANDOM_SEED)
    random_var_freq: float = Field(default_factory=lambda: settings.RANDOM_VAR_FREQ, ge=0.0, le=1.0)

    # Budgets; None means unlimited.
    conflict_budget: int | None = Field(default=None, gt=0)
    time_budget: float | None = Field(default=None, gt=0.0)
    timeout_check_interval: int = Field(default_factory=lambda: settings.TIMEOUT_CHECK_INTERVAL, gt=0)

    # Debugging aids.
    check_invariants: bool = False
    trace_learned: bool = False


class OracleLimit(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_vars: int = Field(default_factory=lambda: settings.ORACLE_MAX_VARS, gt=0)
    max_database: int = Field(default_factory=lambda: settings.ORACLE_MAX_DATABASE, gt=0)


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    strategy: ReductionStrategy = Field(default_factory=_default_strategy)
    timeout: float | None = Field(default_factory=lambda: settings.DEFAULT_TIMEOUT_SECONDS)
    conflict_budget: int | None = None
    seed: int = Field(default_factory=lambda: settings.RANDOM_SEED)
    reduce_base: int = Field(default_factory=lambda: settings.REDUCE_BASE, gt=0)
    reduce_inc: int = Field(default_factory=lambda: settings.REDUCE_INC, gt=0)
    jobs: int = Field(default=1, ge=1)
    stats_csv: Path | None = None
    cactus: Path | None = None
    summary_json: Path | None = None
    verify: bool = False
    oracle_limit: OracleLimit = Field(default_factory=OracleLimit)

    @model_validator(mode="after")
    def check_budget(self) -> "RunConfig":
        timeout_ok = self.timeout is not None and self.timeout > 0
        conflicts_ok = self.conflict_budget is not None and self.conflict_budget > 0
        if not (timeout_ok or conflicts_ok):
            raise ValueError("Either a positive timeout or a positive conflict budget is required.")

        return self

    def solver_config(self) -> SolverConfig:
        return SolverConfig(
            strategy=self.strategy,
            seed=self.seed,
            reduce_base=self.reduce_base,
            reduce_inc=self.reduce_inc,
            conflict_budget=self.conflict_budget,
            time_budget=self.timeout if self.timeout and self.timeout > 0 else None,
        )
