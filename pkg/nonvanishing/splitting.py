"""
Критерий расщепимости по :math:`h^1(E(-1))`, :math:`h^1(E)`,
:math:`h^1(E(1))` и распространение нулей :math:`h^1` влево
"""
import logging
from enum import Enum
from typing import Optional, Tuple
from dataclasses import dataclass
from utilities.bundle import StabilityClass, _check_c1
from utilities.cohomology import CohomologyTable
from nonvanishing.theorems import ClauseId

logger = logging.getLogger(__name__)


class SplitOutcome(Enum):
    """Исход критерия"""
    SPLIT = "split"
    NON_SPLIT = "non-split"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class SplitVerdict:
    """Решение о расщепимости с указанием сработавших критериев"""
    outcome: SplitOutcome
    criteria: Tuple[ClauseId, ...] = ()
    exception_applied: bool = False
    reason: str = ""
    conflict: bool = False


def _plus_one_excluded(c2: Optional[int], stability: StabilityClass) -> bool:
    """Исключение: стабильное расслоение с :math:`c_1 = -1`, :math:`c_2 = 2`"""
    return stability in (StabilityClass.STABLE, StabilityClass.UNKNOWN) \
        and c2 in (2, None)


def _check_count(name: str, value: Optional[int]) -> None:
    if value is None:
        return
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise AttributeError(f"{name} must be a non-negative integer")


# pylint: disable=too-many-arguments
def split_decision(c1: int, c2: Optional[int], stability: StabilityClass,
                   h1m1: Optional[int] = None, h10: Optional[int] = None,
                   h1p1: Optional[int] = None) -> SplitVerdict:
    """Решение о расщепимости по известным значениям :math:`h^1`

    Расслоение расщепимо тогда и только тогда, когда :math:`h^1(E(-1)) = 0`
    при :math:`c_1 = 0`; при :math:`c_1 = -1` когда :math:`h^1(E(-1)) = 0`
    или :math:`h^1(E) = 0`, а также (кроме стабильных расслоений с
    :math:`c_2 = 2`) когда :math:`h^1(E(1)) = 0`.

    Args:
        c1: первый класс Черна
        c2: второй класс Черна или None
        stability: класс стабильности
        h1m1: :math:`h^1(E(-1))`
        h10: :math:`h^1(E)`
        h1p1: :math:`h^1(E(1))`

    Returns:
        Решение; при нехватке данных - UNDETERMINED, при противоречии
        критериев - UNDETERMINED с conflict=True
    """
    _check_c1(c1)
    if not isinstance(stability, StabilityClass):
        raise AttributeError("stability must be a StabilityClass")
    for name, value in (("h1m1", h1m1), ("h10", h10), ("h1p1", h1p1)):
        _check_count(name, value)

    if c1 == 0:
        if h1m1 is None:
            return SplitVerdict(SplitOutcome.UNDETERMINED,
                                reason="h1(E(-1)) not supplied")
        outcome = SplitOutcome.SPLIT if h1m1 == 0 else SplitOutcome.NON_SPLIT
        return SplitVerdict(outcome, (ClauseId.SPLIT_MINUS_ONE,),
                            reason=f"h1(E(-1)) = {h1m1}")

    votes = []
    known = [value for value in (h1m1, h10) if value is not None]
    if 0 in known:
        votes.append((SplitOutcome.SPLIT, ClauseId.SPLIT_MINUS_ONE_OR_ZERO))
    elif len(known) == 2:
        votes.append((SplitOutcome.NON_SPLIT,
                      ClauseId.SPLIT_MINUS_ONE_OR_ZERO))

    exception = False
    if h1p1 is not None:
        if _plus_one_excluded(c2, stability):
            exception = True
            logger.debug("h1(E(1)) = %d ignored: possibly a stable bundle "
                         "with c1 = -1, c2 = 2", h1p1)
        else:
            outcome = SplitOutcome.SPLIT if h1p1 == 0 \
                else SplitOutcome.NON_SPLIT
            votes.append((outcome, ClauseId.SPLIT_PLUS_ONE))

    outcomes = {outcome for outcome, _ in votes}
    if len(outcomes) > 1:
        logger.warning("conflicting split criteria: %s",
                       ", ".join(f"{c.value}->{o.value}" for o, c in votes))
        return SplitVerdict(SplitOutcome.UNDETERMINED,
                            tuple(clause for _, clause in votes), exception,
                            "criteria disagree", conflict=True)
    if not outcomes:
        reason = "exception: stable bundle with c1 = -1, c2 = 2" \
            if exception else "decisive h1 values not supplied"
        return SplitVerdict(SplitOutcome.UNDETERMINED, (), exception, reason)
    return SplitVerdict(outcomes.pop(), tuple(clause for _, clause in votes),
                        exception, "")


@dataclass(frozen=True)
class LeftVanishing:
    """Результат распространения нулей :math:`h^1` влево"""
    pivot: Optional[int]
    implied_zero: Tuple[int, ...] = ()
    violations: Tuple[int, ...] = ()

    @property
    def consistent(self) -> bool:
        """True, если нарушений нет"""
        return not self.violations


def propagate_left_vanishing(table: CohomologyTable,
                             alpha: int) -> LeftVanishing:
    """Если :math:`h^1(E(m)) = 0` при m ≤ α - 2, то :math:`h^1(E(n)) = 0`
    при всех n ≤ m

    Args:
        table: таблица когомологий
        alpha: первый уровень

    Returns:
        Наибольшее такое m в окне (или None), твисты окна с вынужденным
        нулём и твисты, где записано ненулевое :math:`h^1`
    """
    candidates = [row.n for row in table
                  if row.n <= alpha - 2 and row.h1 == 0]
    if not candidates:
        return LeftVanishing(None)
    pivot = max(candidates)
    implied = tuple(row.n for row in table if row.n <= pivot)
    violations = tuple(row.n for row in table
                       if row.n <= pivot and row.h1 > 0)
    return LeftVanishing(pivot, implied, violations)
