"""
Проверка таблицы когомологий на соответствие всем числовым следствиям:
характеристике Эйлера, двойственности Серра, вынужденному ненулевому
:math:`h^1`, распространению нулей влево, уровню α, значениям
:math:`h^0` нестабильного расслоения, ограничениям на обнуление и
критерию расщепимости.
"""
import logging
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple
from dataclasses import dataclass
from utilities.bundle import BundleProfile
from utilities.cohomology import CohomologyTable
from utilities.functions import binomial, chi_p3
from utilities.quadratic import DomainError
from nonvanishing.theorems import NonVanishingReport, forced_nonvanishing
from nonvanishing.splitting import (SplitOutcome, propagate_left_vanishing,
                                    split_decision)
from addons.tables import duality_conflicts, duality_outside, fill_by_duality

logger = logging.getLogger(__name__)


class CheckStatus(Enum):
    """Итог проверки"""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    """Результат одной проверки

    Для SKIPPED заполнено поле reason. Проверки с fatal=False сообщают
    о несоответствии, но не считаются провалом.
    """
    name: str
    status: CheckStatus
    details: Tuple[str, ...] = ()
    reason: str = ""
    fatal: bool = True

    @property
    def failed(self) -> bool:
        """True, если проверка провалена и это провал всей таблицы"""
        return self.status is CheckStatus.FAIL and self.fatal

    def __str__(self) -> str:
        text = f"{self.name}: {self.status.value}"
        if self.reason:
            text += f" ({self.reason})"
        return text


def _result(name: str, failures: Sequence[str], details: Sequence[str] = (),
            fatal: bool = True) -> CheckResult:
    status = CheckStatus.FAIL if failures else CheckStatus.PASS
    return CheckResult(name, status, tuple(failures) + tuple(details),
                       fatal=fatal)


def _skipped(name: str, reason: str, fatal: bool = True) -> CheckResult:
    logger.debug("%s skipped: %s", name, reason)
    return CheckResult(name, CheckStatus.SKIPPED, reason=reason, fatal=fatal)


@dataclass(frozen=True)
class _Context:
    """Общие данные всех проверок"""
    table: CohomologyTable
    filled: CohomologyTable
    profile: BundleProfile
    report: Optional[NonVanishingReport] = None
    report_error: str = ""


def check_chi(ctx: _Context) -> CheckResult:
    """CHI: :math:`h^0 - h^1 + h^2 - h^3 = χ(E(n))` везде, где известны
    все четыре размерности"""
    complete = [row for row in ctx.filled if row.complete]
    if not complete:
        return _skipped("CHI", "no twist has all four h^i")
    failures = []
    for row in complete:
        try:
            expected = chi_p3(ctx.profile.chern, row.n)
        except DomainError as error:
            return _skipped("CHI", str(error))
        if row.chi() != expected:
            failures.append(f"n={row.n}: alternating sum {row.chi()} "
                            f"!= chi {expected}")
    return _result("CHI", failures,
                   [f"checked n={row.n}" for row in complete])


def check_duality(ctx: _Context) -> CheckResult:
    """DUALITY: записанные :math:`h^2, h^3` не противоречат двойственности"""
    failures = [str(conflict) for conflict in duality_conflicts(ctx.table)]
    outside = [f"n={n}: dual twist outside window (skipped)"
               for n in duality_outside(ctx.table)]
    return _result("DUALITY", failures, outside)


def check_forced(ctx: _Context) -> CheckResult:
    """FORCED: вынужденные твисты окна имеют :math:`h^1 > 0`"""
    if ctx.report is None:
        return _skipped("FORCED", ctx.report_error)
    failures, details = [], []
    for n, clauses in ctx.report.forced:
        row = ctx.table.row(n)
        if row is None:
            continue
        tags = ",".join(sorted(clause.value for clause in clauses))
        if row.h1 == 0:
            failures.append(f"n={n}: h1 = 0 but forced by {tags}")
        else:
            details.append(f"n={n}: h1 = {row.h1} ({tags})")
    return _result("FORCED", failures, details)


def check_left_vanishing(ctx: _Context) -> CheckResult:
    """LEFTVANISH: нули :math:`h^1` при m ≤ α - 2 распространяются влево"""
    alpha = ctx.profile.alpha
    if alpha is None:
        return _skipped("LEFTVANISH", "alpha unknown")
    result = propagate_left_vanishing(ctx.table, alpha)
    if result.pivot is None:
        return _result("LEFTVANISH", [],
                       [f"no h1 = 0 at n <= {alpha - 2} in window"])
    failures = [f"n={n}: h1 > 0 below the zero at m={result.pivot}"
                for n in result.violations]
    return _result("LEFTVANISH", failures,
                   [f"h1 = 0 for n <= {result.pivot}"])


def check_alpha(ctx: _Context) -> CheckResult:
    """ALPHA: :math:`h^0 = 0` ровно при n < α"""
    alpha = ctx.profile.alpha
    if alpha is None:
        return _skipped("ALPHA", "alpha unknown")
    failures = []
    for row in ctx.table:
        if row.n < alpha and row.h0 != 0:
            failures.append(f"n={row.n}: h0 = {row.h0} below alpha = {alpha}")
        elif row.n >= alpha and row.h0 == 0:
            failures.append(f"n={row.n}: h0 = 0 at or above alpha = {alpha}")
    return _result("ALPHA", failures)


def check_nonstable_h0(ctx: _Context) -> CheckResult:
    """NONSTABLE-H0: :math:`h^0(E(n)) = \\binom{n-α+3}{3}` при
    :math:`n \\leq -α - c_1` (не влияет на общий итог)"""
    alpha, c1 = ctx.profile.alpha, ctx.profile.chern.c1
    if alpha is None or alpha > 0:
        return _skipped("NONSTABLE-H0", "needs a non-stable profile",
                        fatal=False)
    failures, details = [], []
    for row in ctx.table:
        if row.n > -alpha - c1:
            continue
        expected = binomial(row.n - alpha + 3, 3)
        if row.h0 != expected:
            failures.append(f"n={row.n}: h0 = {row.h0} != {expected}")
        else:
            details.append(f"n={row.n}: h0 = {expected}")
    return _result("NONSTABLE-H0", failures, details, fatal=False)


def check_vanishing(ctx: _Context) -> CheckResult:
    """VANISHING: нули :math:`h^1` стабильного расслоения не нарушают
    ограничений"""
    if ctx.report is None or not ctx.report.constraints:
        return _skipped("VANISHING", "no vanishing constraints apply")
    h1 = ctx.table.h1_map()
    failures, details = [], []
    for constraint in ctx.report.constraints:
        details.append(constraint.describe())
        failures.extend(f"n={n}: h1 = 0 violates '{constraint.describe()}'"
                        for n in constraint.violations(h1))
    return _result("VANISHING", failures, details)


def check_split(ctx: _Context) -> CheckResult:
    """SPLIT: критерий расщепимости согласуется с δ"""
    profile = ctx.profile
    values = {}
    for key, n in (("h1m1", -1), ("h10", 0), ("h1p1", 1)):
        row = ctx.table.row(n)
        values[key] = None if row is None else row.h1
    verdict = split_decision(profile.chern.c1, profile.chern.c2,
                             profile.stability, **values)
    if verdict.outcome is SplitOutcome.UNDETERMINED:
        return _skipped("SPLIT", verdict.reason)
    tags = ",".join(clause.value for clause in verdict.criteria)
    detail = f"{verdict.outcome.value} via {tags}"
    split = verdict.outcome is SplitOutcome.SPLIT
    if profile.is_split is not None and profile.is_split != split:
        return _result("SPLIT", [f"{detail} contradicts delta = "
                                 f"{profile.delta}"])
    return _result("SPLIT", [], [detail])


#: Проверки в порядке выполнения
CHECKS: Tuple[Callable[[_Context], CheckResult], ...] = (
    check_chi, check_duality, check_forced, check_left_vanishing,
    check_alpha, check_nonstable_h0, check_vanishing, check_split)


def verify_table(table: CohomologyTable,
                 profile: BundleProfile) -> Tuple[CheckResult, ...]:
    """Все проверки таблицы

    Args:
        table: таблица когомологий
        profile: профиль расслоения с теми же классами Черна

    Returns:
        Результаты проверок в порядке CHI, DUALITY, FORCED, LEFTVANISH,
        ALPHA, NONSTABLE-H0, VANISHING, SPLIT

    Raises:
        DomainError - если классы Черна таблицы и профиля различны
    """
    if table.chern != profile.chern:
        raise DomainError(f"table Chern classes {table.chern} do not match "
                          f"profile {profile.chern}")
    try:
        report, report_error = forced_nonvanishing(profile), ""
    except DomainError as error:
        report, report_error = None, str(error)
    ctx = _Context(table, fill_by_duality(table), profile, report,
                   report_error)
    results: List[CheckResult] = [check(ctx) for check in CHECKS]
    for result in results:
        if result.failed:
            logger.info("%s failed: %s", result.name, "; ".join(result.details))
    return tuple(results)


def all_passed(results: Sequence[CheckResult]) -> bool:
    """True, если нет ни одного провала"""
    return not any(result.failed for result in results)


def profile_from_table(table: CohomologyTable, **overrides) -> BundleProfile:
    """Профиль по заголовку таблицы; уровни можно переопределить"""
    levels = {"alpha": table.alpha, "gamma": table.gamma, "beta": table.beta}
    levels.update({key: value for key, value in overrides.items()
                   if value is not None})
    return BundleProfile(table.chern, **levels)
