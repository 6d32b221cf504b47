"""
Классы Черна нормализованного расслоения ранга 2 на :math:`\\mathbb{P}^3`,
классы стабильности, степень минимальной кривой и двойственность Серра
"""
import logging
from enum import Enum
from typing import Optional, Tuple
from dataclasses import dataclass, field
from utilities.quadratic import DomainError

logger = logging.getLogger(__name__)


def _check_integer(name: str, value) -> None:
    """Проверка, что value - целое число (но не bool)

    Raises:
        AttributeError - если value не целое
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise AttributeError(f"{name} must be an integer")


def _check_c1(c1: int) -> None:
    """Проверка нормализации

    Raises:
        DomainError - если c1 не равен 0 или -1
    """
    _check_integer("c1", c1)
    if c1 not in (0, -1):
        raise DomainError(f"c1 must be 0 or -1 (normalized), got {c1}")


@dataclass(frozen=True)
class ChernClasses:
    """
    Нормализованная пара классов Черна (иммутабельная).

    Нечётное :math:`c_2` при :math:`c_1 = -1` не встречается у настоящих
    расслоений, но допускается для перебора параметров: предупреждение
    сохраняется в поле warnings и пишется в лог.
    """
    c1: int = field(init=False)
    c2: int = field(init=False)
    warnings: Tuple[str, ...] = field(init=False, compare=False)

    def __init__(self, c1: int, c2: int):
        """Инициализатор класса

        Args:
            c1: первый класс Черна, 0 или -1
            c2: второй класс Черна

        Raises:
            AttributeError - если классы не целые
            DomainError - если c1 не нормализован
        """
        _check_c1(c1)
        _check_integer("c2", c2)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        warnings = []
        if c1 == -1 and c2 % 2 != 0:
            message = f"c2 = {c2} is odd while c1 = -1: no bundle has " \
                      f"these Chern classes"
            logger.warning(message)
            warnings.append(message)
        object.__setattr__(self, "warnings", tuple(warnings))

    def __str__(self) -> str:
        return f"(c1={self.c1}, c2={self.c2})"


@dataclass(frozen=True)
class GeneralChernPair:
    """Классы Черна произвольного (не обязательно нормализованного) твиста"""
    a1: int
    a2: int


class StabilityClass(Enum):
    """Класс стабильности по первому уровню α"""
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    NON_STABLE = "non-stable"
    UNKNOWN = "unknown"


def classify_stability(c1: int, alpha: Optional[int]) -> StabilityClass:
    """Класс стабильности

    Args:
        c1: первый класс Черна
        alpha: первый уровень α или None

    Returns:
        STABLE при α > 0, STRICTLY_SEMISTABLE при :math:`c_1 = α = 0`,
        NON_STABLE при остальных α ≤ 0, UNKNOWN без α
    """
    _check_c1(c1)
    if alpha is None:
        return StabilityClass.UNKNOWN
    _check_integer("alpha", alpha)
    if alpha > 0:
        return StabilityClass.STABLE
    if c1 == 0 and alpha == 0:
        return StabilityClass.STRICTLY_SEMISTABLE
    return StabilityClass.NON_STABLE


def twist_chern(chern: ChernClasses, n: int) -> GeneralChernPair:
    """Классы Черна твиста E(n): :math:`(c_1 + 2n, c_2 + c_1 n + n^2)`"""
    _check_integer("n", n)
    return GeneralChernPair(chern.c1 + 2 * n, chern.c2 + chern.c1 * n + n * n)


def delta(chern: ChernClasses, alpha: int) -> int:
    """Степень минимальной кривой :math:`δ = c_2 + c_1 α + α^2`"""
    return twist_chern(chern, alpha).a2


def serre_dual_twist(c1: int, n: int) -> int:
    """Твист, двойственный по Серру: :math:`h^i(E(n)) = h^{3-i}(E(-n-c_1-4))`"""
    _check_c1(c1)
    _check_integer("n", n)
    return -n - c1 - 4


def split_by_delta(delta_value: int) -> bool:
    """Расслоение расщепляется тогда и только тогда, когда δ = 0"""
    _check_integer("delta", delta_value)
    return delta_value == 0


def instability_order(c1: int, alpha: int) -> int:
    """Порядок нестабильности r: :math:`-α - c_1` при α ≤ 0, иначе 0"""
    _check_c1(c1)
    _check_integer("alpha", alpha)
    if alpha <= 0:
        return -alpha - c1
    return 0


@dataclass(frozen=True)
class BundleProfile:
    """
    Известные данные о расслоении: классы Черна и, возможно,
    уровни α, β, γ. δ и класс стабильности вычисляются.

    β хранится для полноты и ни в каких формулах не участвует.
    """
    chern: ChernClasses = field(init=False)
    alpha: Optional[int] = field(init=False)
    beta: Optional[int] = field(init=False)
    gamma: Optional[int] = field(init=False)
    delta: Optional[int] = field(init=False)
    stability: StabilityClass = field(init=False)

    def __init__(self, chern: ChernClasses, alpha: Optional[int] = None,
                 gamma: Optional[int] = None, beta: Optional[int] = None):
        """Инициализатор класса

        Args:
            chern: классы Черна
            alpha: первый уровень
            gamma: третий уровень
            beta: второй уровень

        Raises:
            AttributeError - если chern не ChernClasses или уровни не целые
            DomainError - если нарушено :math:`α \\leq β \\leq γ`
        """
        if not isinstance(chern, ChernClasses):
            raise AttributeError("chern must be a ChernClasses")
        levels = [(name, value) for name, value in
                  (("alpha", alpha), ("beta", beta), ("gamma", gamma))
                  if value is not None]
        for name, value in levels:
            _check_integer(name, value)
        for (low_name, low), (high_name, high) in zip(levels, levels[1:]):
            if low > high:
                raise DomainError(f"{low_name} = {low} exceeds "
                                  f"{high_name} = {high}")
        object.__setattr__(self, "chern", chern)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", None if alpha is None
                           else delta(chern, alpha))
        object.__setattr__(self, "stability",
                           classify_stability(chern.c1, alpha))

    @staticmethod
    def of(c1: int, c2: int, alpha: Optional[int] = None,
           gamma: Optional[int] = None, beta: Optional[int] = None) \
            -> "BundleProfile":
        """Профиль по числовым параметрам"""
        return BundleProfile(ChernClasses(c1, c2), alpha=alpha,
                             gamma=gamma, beta=beta)

    @property
    def is_split(self) -> Optional[bool]:
        """True, если δ = 0; None, если α неизвестно"""
        if self.delta is None:
            return None
        return split_by_delta(self.delta)
