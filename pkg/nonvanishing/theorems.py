"""
Вынужденное ненулевое :math:`h^1(E(n))` нормализованного нерасщепимого
расслоения: объединение диапазонов всех применимых утверждений с указанием,
какие утверждения дают каждый твист.

Утверждения о ζ применимы при :math:`c_2 > 0` независимо от стабильности,
утверждения о τ и η применимы при α ≤ 0. Если α неизвестно, зависящие
от него утверждения попадают в список условных.
"""
import logging
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Set, Tuple
from dataclasses import dataclass, replace
from utilities.bundle import (BundleProfile, ChernClasses, instability_order,
                              split_by_delta, _check_integer)
from utilities.constraints import (Constraint, LowVanishingConstraint,
                                   HighVanishingConstraint)
from utilities.quadratic import DomainError, QuadraticValue
from nonvanishing.bounds import (Bound, BoundKind, bar_alpha, zeta, tau,
                                 eta_delta, eta_alpha_delta,
                                 last_integer_below)

logger = logging.getLogger(__name__)


class ClauseId(Enum):
    """Утверждения, из которых выводится (не)обнуление когомологий"""
    ZETA_RANGE = "zeta-range"
    ZETA_BAR_ALPHA = "zeta-bar-alpha"
    ZETA_INTEGER = "zeta-integer"
    ZETA_NONSTABLE = "zeta-nonstable"
    ZETA_LOW_VANISHING = "zeta-low-vanishing"
    ZETA_HIGH_VANISHING = "zeta-high-vanishing"
    INSTABILITY_RANGE = "instability-range"
    TAU_RANGE = "tau-range"
    ETA_RANGE = "eta-range"
    ETA_ALPHA_RANGE = "eta-alpha-range"
    SPLIT_MINUS_ONE = "split-minus-one"
    SPLIT_MINUS_ONE_OR_ZERO = "split-minus-one-or-zero"
    SPLIT_PLUS_ONE = "split-plus-one"
    LEFT_VANISHING = "left-vanishing"
    DELTA_ZERO = "delta-zero"

    @property
    def statement(self) -> str:
        """Формулировка утверждения"""
        return _STATEMENTS[self]


_STATEMENTS = {
    ClauseId.ZETA_RANGE: "c2 > 0: h1(E(n)) != 0 for -1 <= n < zeta",
    ClauseId.ZETA_BAR_ALPHA: "c2 > 0: h1(E(n)) != 0 for -1 <= n <= "
                             "bar_alpha-2, and n = bar_alpha-1 if zeta "
                             "is not an integer",
    ClauseId.ZETA_INTEGER: "c2 > 0, zeta integer, alpha < bar_alpha: "
                           "h1(E(bar_alpha-1)) != 0",
    ClauseId.ZETA_NONSTABLE: "c2 > 0, alpha <= 0: h1(E(bar_alpha-1)) != 0",
    ClauseId.ZETA_LOW_VANISHING: "c2 > 0, alpha > 0: h1(E(n)) = 0 with "
                                 "-1 <= n <= alpha-1 forces n = alpha-1 "
                                 "and alpha = bar_alpha",
    ClauseId.ZETA_HIGH_VANISHING: "c2 > 0, alpha > 0: h1(E(n)) = 0 with "
                                  "n >= alpha forces n >= bar_alpha",
    ClauseId.INSTABILITY_RANGE: "alpha <= 0: h1(E(n)) != 0 for "
                                "-1 <= n <= -alpha-c1",
    ClauseId.TAU_RANGE: "alpha = 0: h1(E(n)) != 0 for -c1 <= n < tau "
                        "(c1 = 0) or -c1 <= n <= tau (c1 = -1)",
    ClauseId.ETA_RANGE: "alpha < 0: h1(E(n)) != 0 for -1 <= n <= eta(delta)",
    ClauseId.ETA_ALPHA_RANGE: "alpha < 0, c2 >= 0: h1(E(n)) != 0 for "
                              "-alpha-c1 <= n < eta (c1 = 0) or "
                              "<= eta (c1 = -1)",
    ClauseId.SPLIT_MINUS_ONE: "c1 = 0: split iff h1(E(-1)) = 0",
    ClauseId.SPLIT_MINUS_ONE_OR_ZERO: "c1 = -1: split iff h1(E(-1)) = 0 "
                                      "or h1(E) = 0",
    ClauseId.SPLIT_PLUS_ONE: "c1 = -1, not stable with c2 = 2: split iff "
                             "h1(E(1)) = 0",
    ClauseId.LEFT_VANISHING: "h1(E(m)) = 0 with m <= alpha-2 implies "
                             "h1(E(n)) = 0 for all n <= m",
    ClauseId.DELTA_ZERO: "E splits iff delta = 0",
}

#: Утверждения, которым нужно α
ALPHA_DEPENDENT = (ClauseId.ZETA_INTEGER, ClauseId.ZETA_NONSTABLE,
                   ClauseId.ZETA_LOW_VANISHING, ClauseId.ZETA_HIGH_VANISHING,
                   ClauseId.INSTABILITY_RANGE, ClauseId.TAU_RANGE,
                   ClauseId.ETA_RANGE, ClauseId.ETA_ALPHA_RANGE)


class Verdict(Enum):
    """Сравнение найденной границы с :math:`γ - 2`"""
    BETTER = "better"
    EQUAL = "equal"
    WORSE = "worse"


@dataclass(frozen=True)
class GammaComparison:
    """Сравнение наибольшего вынужденного твиста с границей :math:`γ - 2`.

    Нижние границы :math:`-r - c_1 - 1` (инстантоны) и :math:`-r - c_1 - 2`
    (остальные расслоения) приводятся как известные константы.
    """
    gamma_bound: int
    our_bound: int
    verdict: Verdict
    lower_bound_instanton: Optional[int] = None
    lower_bound_general: Optional[int] = None


@dataclass(frozen=True)
class NonVanishingReport:
    """Результат работы :func:`forced_nonvanishing` (иммутабельный)"""
    profile: BundleProfile
    forced: Tuple[Tuple[int, FrozenSet[ClauseId]], ...]
    conditional: Tuple[ClauseId, ...] = ()
    constraints: Tuple[Constraint, ...] = ()
    bounds: Tuple[Bound, ...] = ()
    notes: Tuple[str, ...] = ()
    comparison: Optional[GammaComparison] = None

    @property
    def forced_twists(self) -> Tuple[int, ...]:
        """Вынужденные твисты по возрастанию"""
        return tuple(n for n, _ in self.forced)

    @property
    def forced_max(self) -> int:
        """Наибольший вынужденный твист"""
        return self.forced[-1][0]

    @property
    def forced_interval(self) -> Tuple[int, int]:
        """Наименьший и наибольший вынужденные твисты"""
        return self.forced[0][0], self.forced[-1][0]

    @property
    def is_contiguous(self) -> bool:
        """True, если вынужденные твисты идут подряд"""
        low, high = self.forced_interval
        return len(self.forced) == high - low + 1

    def clauses_at(self, n: int) -> FrozenSet[ClauseId]:
        """Утверждения, дающие твист n (пустое множество, если их нет)"""
        for twist, clauses in self.forced:
            if twist == n:
                return clauses
        return frozenset()

    def bound(self, kind: BoundKind) -> Optional[Bound]:
        """Граница заданного вида, если она вычислялась"""
        for item in self.bounds:
            if item.kind is kind:
                return item
        return None


class _ReportBuilder:
    """Накопитель диапазонов, условных утверждений и заметок"""
    def __init__(self, profile: BundleProfile):
        self.profile = profile
        self.forced: Dict[int, Set[ClauseId]] = {}
        self.conditional: List[ClauseId] = []
        self.constraints: List[Constraint] = []
        self.bounds: List[Bound] = []
        self.notes: List[str] = []

    def add_range(self, clause: ClauseId, low: int, high: int) -> None:
        """Добавление твистов low..high (пустой диапазон допустим)"""
        logger.debug("%s forces %d..%d", clause.value, low, high)
        for n in range(low, high + 1):
            self.forced.setdefault(n, set()).add(clause)

    def note(self, text: str, warn: bool = False) -> None:
        """Заметка в отчёт"""
        if warn:
            logger.warning(text)
        else:
            logger.debug(text)
        self.notes.append(text)

    def add_bound(self, kind: BoundKind, value: QuadraticValue,
                  **params) -> Bound:
        """Сохранение вычисленной границы"""
        item = Bound(kind, value, self.profile.chern.c1, **params)
        self.bounds.append(item)
        return item

    def build(self) -> NonVanishingReport:
        """Готовый отчёт"""
        forced = tuple((n, frozenset(self.forced[n]))
                       for n in sorted(self.forced))
        return NonVanishingReport(self.profile, forced,
                                  tuple(dict.fromkeys(self.conditional)),
                                  tuple(self.constraints), tuple(self.bounds),
                                  tuple(self.notes))


def vanishing_constraints_stable(chern: ChernClasses, alpha: int) \
        -> Tuple[Constraint, ...]:
    """Ограничения на обнуление :math:`h^1` стабильного расслоения

    Args:
        chern: классы Черна, :math:`c_2 > 0`
        alpha: первый уровень, α > 0

    Returns:
        Ограничения на твисты :math:`-1..α-1` и :math:`n \\geq α`

    Raises:
        DomainError - вне стабильного случая или при :math:`c_2 \\leq 0`
    """
    _check_integer("alpha", alpha)
    if alpha <= 0 or chern.c2 <= 0:
        raise DomainError(f"vanishing constraints need alpha > 0 and "
                          f"c2 > 0, got alpha = {alpha}, c2 = {chern.c2}")
    top = bar_alpha(chern)
    return LowVanishingConstraint(alpha, top), HighVanishingConstraint(alpha, top)


def _zeta_clauses(builder: _ReportBuilder) -> None:
    """Утверждения, использующие ζ (при :math:`c_2 > 0`)"""
    chern, alpha = builder.profile.chern, builder.profile.alpha
    value = zeta(chern)
    builder.add_bound(BoundKind.ZETA, value, c2=chern.c2)
    top = bar_alpha(chern)
    integer = value.is_integer()
    builder.add_range(ClauseId.ZETA_RANGE, -1,
                      last_integer_below(value, strict=True))
    builder.add_range(ClauseId.ZETA_BAR_ALPHA, -1,
                      top - 1 if not integer else top - 2)
    if alpha is None:
        builder.conditional.extend(ALPHA_DEPENDENT[:4])
        return
    if integer and alpha < top:
        builder.add_range(ClauseId.ZETA_INTEGER, top - 1, top - 1)
    if alpha <= 0:
        builder.add_range(ClauseId.ZETA_NONSTABLE, top - 1, top - 1)
    else:
        builder.constraints.extend(vanishing_constraints_stable(chern, alpha))


def _nonstable_clauses(builder: _ReportBuilder) -> None:
    """Утверждения для нестабильного расслоения (α ≤ 0)"""
    profile = builder.profile
    c1, c2 = profile.chern.c1, profile.chern.c2
    alpha, delta_value = profile.alpha, profile.delta
    builder.add_range(ClauseId.INSTABILITY_RANGE, -1, -alpha - c1)
    if alpha == 0:
        try:
            value = tau(profile.chern)
        except DomainError as error:
            builder.note(f"{ClauseId.TAU_RANGE.value} skipped: {error}")
            return
        builder.add_bound(BoundKind.TAU, value, c2=c2)
        builder.add_range(ClauseId.TAU_RANGE, -c1,
                          last_integer_below(value, strict=c1 == 0))
        return
    try:
        value = eta_delta(c1, delta_value)
    except DomainError as error:
        builder.note(f"{ClauseId.ETA_RANGE.value} skipped: {error}")
    else:
        builder.add_bound(BoundKind.ETA_DELTA, value, delta=delta_value)
        builder.add_range(ClauseId.ETA_RANGE, -1, value.floor())
        if value.is_integer():
            builder.note(f"eta(delta) = {value.exact()} is an integer: "
                         f"n = eta included in {ClauseId.ETA_RANGE.value}",
                         warn=True)
    if c2 < 0:
        return
    try:
        value = eta_alpha_delta(c1, alpha, delta_value)
    except DomainError as error:
        builder.note(f"{ClauseId.ETA_ALPHA_RANGE.value} skipped: {error}")
        return
    builder.add_bound(BoundKind.ETA_ALPHA_DELTA, value, delta=delta_value,
                      alpha=alpha)
    builder.add_range(ClauseId.ETA_ALPHA_RANGE, -alpha - c1,
                      last_integer_below(value, strict=c1 == 0))


def forced_nonvanishing(profile: BundleProfile) -> NonVanishingReport:
    """Вынужденный диапазон ненулевого :math:`h^1(E(n))`

    Args:
        profile: профиль нерасщепимого расслоения

    Returns:
        Отчёт с твистами, утверждениями, ограничениями и, если известно γ,
        сравнением с :math:`γ - 2`

    Raises:
        DomainError - если δ = 0 (расслоение расщепимо) или ни одно
            утверждение не применимо (:math:`c_2 \\leq 0` и α > 0 или α
            неизвестно)
    """
    if not isinstance(profile, BundleProfile):
        raise AttributeError("profile must be a BundleProfile")
    if profile.delta is not None and split_by_delta(profile.delta):
        raise DomainError(f"bundle splits (delta = 0, "
                          f"{ClauseId.DELTA_ZERO.value}): nothing is forced")
    alpha = profile.alpha
    zeta_applies = profile.chern.c2 > 0
    nonstable_applies = alpha is not None and alpha <= 0
    if not zeta_applies and not nonstable_applies:
        raise DomainError("theorem inapplicable: requires c2 > 0 "
                          "or non-stability")
    builder = _ReportBuilder(profile)
    if zeta_applies:
        _zeta_clauses(builder)
    if alpha is None:
        builder.conditional.extend(ALPHA_DEPENDENT[4:])
        try:
            builder.add_bound(BoundKind.TAU, tau(profile.chern),
                              c2=profile.chern.c2)
        except DomainError as error:
            builder.note(f"{ClauseId.TAU_RANGE.value} bound not computed: "
                         f"{error}")
    elif nonstable_applies:
        _nonstable_clauses(builder)
    report = builder.build()
    if profile.gamma is not None:
        report = replace(report, comparison=gamma_bound_comparison(
            report, profile.gamma))
    return report


def gamma_bound_comparison(report: NonVanishingReport,
                           gamma: int) -> GammaComparison:
    """Сравнение наибольшего вынужденного твиста с :math:`γ - 2`

    Args:
        report: отчёт :func:`forced_nonvanishing`
        gamma: третий уровень γ

    Returns:
        Запись сравнения; нижние границы заполняются, если известно α
    """
    _check_integer("gamma", gamma)
    gamma_bound = gamma - 2
    ours = report.forced_max
    if ours > gamma_bound:
        verdict = Verdict.BETTER
    elif ours == gamma_bound:
        verdict = Verdict.EQUAL
    else:
        verdict = Verdict.WORSE
    instanton, general = None, None
    profile = report.profile
    if profile.alpha is not None:
        order = instability_order(profile.chern.c1, profile.alpha)
        instanton = -order - profile.chern.c1 - 1
        general = instanton - 1
    return GammaComparison(gamma_bound, ours, verdict, instanton, general)
