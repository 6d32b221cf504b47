"""
Модуль, реализующий ограничения на обнуление :math:`h^1(E(n))`
стабильного расслоения
"""
from abc import ABC, abstractmethod
from typing import Mapping, Tuple
from dataclasses import dataclass, field
from utilities.bundle import _check_integer
from utilities.quadratic import DomainError


@dataclass(frozen=True)
class Constraint(ABC):
    """Абстрактный класс, базовый для всех ограничений, иммутабельный"""
    alpha: int = field(init=False)
    bar_alpha: int = field(init=False)

    def __init__(self, alpha: int, bar_alpha: int):
        """Инициализатор класса

        Args:
            alpha: первый уровень стабильного расслоения
            bar_alpha: :math:`\\bar{α}` для его классов Черна

        Raises:
            AttributeError - если параметры не целые
            DomainError - если α ≤ 0
        """
        _check_integer("alpha", alpha)
        _check_integer("bar_alpha", bar_alpha)
        if alpha <= 0:
            raise DomainError(f"vanishing constraints need a stable bundle "
                              f"(alpha > 0), got alpha = {alpha}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "bar_alpha", bar_alpha)

    @abstractmethod
    def in_window(self, n: int) -> bool:
        """True, если ограничение говорит что-то о твисте n"""

    @abstractmethod
    def allows(self, n: int) -> bool:
        """True, если :math:`h^1(E(n)) = 0` не противоречит ограничению"""

    @abstractmethod
    def describe(self) -> str:
        """Формулировка с подставленными числами"""

    def violations(self, h1: Mapping[int, int]) -> Tuple[int, ...]:
        """Твисты с нулевым :math:`h^1`, запрещённым ограничением

        Args:
            h1: известные значения :math:`n \\mapsto h^1(E(n))`

        Returns:
            Кортеж твистов по возрастанию
        """
        return tuple(n for n in sorted(h1)
                     if h1[n] == 0 and self.in_window(n)
                     and not self.allows(n))

    def check(self, h1: Mapping[int, int]) -> bool:
        """Проверка на выполнимость

        Returns:
            True, если нарушений нет. False, иначе
        """
        return not self.violations(h1)


class LowVanishingConstraint(Constraint):
    """Обнуление при :math:`-1 \\leq n \\leq α - 1` возможно только
    при n = α - 1 и :math:`α = \\bar{α}`"""
    def in_window(self, n: int) -> bool:
        return -1 <= n <= self.alpha - 1

    def allows(self, n: int) -> bool:
        return n == self.alpha - 1 and self.alpha == self.bar_alpha

    def describe(self) -> str:
        top = self.alpha - 1
        text = f"vanishing in -1..{top} only at n={top} with " \
               f"bar_alpha={self.bar_alpha}"
        if self.alpha != self.bar_alpha:
            text += f"; impossible since alpha={self.alpha}"
        return text


class HighVanishingConstraint(Constraint):
    """Обнуление при n ≥ α возможно только при :math:`n \\geq \\bar{α}`"""
    def in_window(self, n: int) -> bool:
        return n >= self.alpha

    def allows(self, n: int) -> bool:
        return n >= self.bar_alpha

    def describe(self) -> str:
        return f"vanishing at n >= {self.alpha} forces n >= {self.bar_alpha}"
