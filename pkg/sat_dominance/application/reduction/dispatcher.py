from collections.abc import Set

from loguru import logger

from sat_dominance.domain.clauses import ClauseDatabase, LearnedClause
from sat_dominance.domain.strategy import ReductionReport, ReductionStrategy
from sat_dominance.domain.types import StrategyKind

from .base import ReductionHandler, apply_deletion
from .dominance import DominanceReductionHandler
from .sort_half import SortHalfReductionHandler


class NoReductionHandler(ReductionHandler):
    def reduce(self, db: ClauseDatabase, locked: Set[LearnedClause], num_vars: int) -> ReductionReport:
        return apply_deletion(db, [], db.num_learnts)


class ReductionHandlerFactory:
    @staticmethod
    def create_handler(strategy: ReductionStrategy) -> ReductionHandler:
        if strategy.kind == StrategyKind.NONE:
            return NoReductionHandler()
        elif strategy.kind == StrategyKind.SORT_HALF:
            return SortHalfReductionHandler(strategy.criterion)
        elif strategy.kind == StrategyKind.DOMINANCE:
            return DominanceReductionHandler(strategy.measures)
        else:
            raise ValueError("Unsupported reduction strategy")


class ReductionDispatcher:
    factory = ReductionHandlerFactory

    def __init__(self, strategy: ReductionStrategy) -> None:
        self.strategy = strategy
        self._handler = self.factory.create_handler(strategy)

    def dispatch(self, db: ClauseDatabase, locked: Set[LearnedClause], num_vars: int) -> ReductionReport:
        report = self._handler.reduce(db, locked, num_vars)

        logger.debug(
            "Learned clause database reduced.",
            strategy=self.strategy.label,
            before=report.before,
            deleted=report.deleted,
        )

        return report
