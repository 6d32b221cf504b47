"""
Точные значения границ :math:`ζ`, :math:`\\bar{α}`, :math:`τ` и двух
вариантов :math:`η` в виде :class:`~utilities.quadratic.QuadraticValue`.

Дробные подкоренные выражения умножены на 4 или 16, так что все
границы хранятся как :math:`(\\sqrt{R} - p)/q` с целыми R, p, q.
"""
from enum import Enum
from typing import Optional
from dataclasses import dataclass
from utilities.bundle import ChernClasses, _check_c1, _check_integer
from utilities.quadratic import DomainError, QuadraticValue


class BoundKind(Enum):
    """Вид границы"""
    ZETA = "zeta"
    TAU = "tau"
    ETA_DELTA = "eta_delta"
    ETA_ALPHA_DELTA = "eta_alpha_delta"


@dataclass(frozen=True)
class Bound:
    """Граница вместе с параметрами, по которым она вычислена"""
    kind: BoundKind
    value: QuadraticValue
    c1: int
    c2: Optional[int] = None
    delta: Optional[int] = None
    alpha: Optional[int] = None

    @property
    def floor(self) -> int:
        """Целая часть значения"""
        return self.value.floor()

    def __str__(self) -> str:
        return f"{self.kind.value}={self.value}"


def _square_root_bound(radicand: int, shift: int, denominator: int,
                       what: str) -> QuadraticValue:
    if radicand < 0:
        raise DomainError(f"{what}: negative radicand {radicand}")
    return QuadraticValue(radicand, shift, denominator)


def zeta(chern: ChernClasses) -> QuadraticValue:
    """:math:`ζ = (\\sqrt{12c_2 + 4 - 3c_1^2} - (4 + c_1)) / 2`

    Определено и при :math:`c_2 = 0` (значение -1).

    Raises:
        DomainError - если :math:`c_2 < 0`
    """
    if chern.c2 < 0:
        raise DomainError("zeta undefined for negative c2")
    return QuadraticValue(12 * chern.c2 + 4 - 3 * chern.c1 ** 2,
                          4 + chern.c1, 2)


def bar_alpha(chern: ChernClasses) -> int:
    """:math:`\\bar{α} = \\lfloor ζ \\rfloor + 1`, наибольшее возможное α"""
    return zeta(chern).floor() + 1


def zeta_is_integer(chern: ChernClasses) -> bool:
    """True, если ζ целое"""
    return zeta(chern).is_integer()


def _tau_like(c1: int, value: int, what: str) -> QuadraticValue:
    _check_c1(c1)
    _check_integer(what, value)
    if c1 == 0:
        return _square_root_bound(6 * value + 1, 2, 1, what)
    return _square_root_bound(24 * value + 10, 3, 2, what)


def tau(chern: ChernClasses) -> QuadraticValue:
    """:math:`τ = \\sqrt{6c_2 + 1} - 2` при :math:`c_1 = 0` и
    :math:`(\\sqrt{24c_2 + 10} - 3)/2` при :math:`c_1 = -1`

    Raises:
        DomainError - если подкоренное выражение отрицательно
    """
    return _tau_like(chern.c1, chern.c2, "tau")


def eta_delta(c1: int, delta_value: int) -> QuadraticValue:
    """:math:`η(δ)`: та же формула, что и у τ, с δ вместо :math:`c_2`

    Raises:
        DomainError - если подкоренное выражение отрицательно
    """
    return _tau_like(c1, delta_value, "eta_delta")


def eta_alpha_delta(c1: int, alpha: int, delta_value: int) -> QuadraticValue:
    """:math:`η(α, δ)` для нестабильного расслоения с α < 0

    Args:
        c1: первый класс Черна
        alpha: первый уровень, α < 0
        delta_value: δ

    Returns:
        :math:`(\\sqrt{24δ + 4 - 3α^2} - (4 + 3α))/2` при :math:`c_1 = 0`,
        :math:`(\\sqrt{96δ + 13 + 12α - 12α^2} - (3 + 6α))/4` при :math:`c_1 = -1`

    Raises:
        DomainError - если α ≥ 0 или подкоренное выражение отрицательно
    """
    _check_c1(c1)
    _check_integer("alpha", alpha)
    _check_integer("delta", delta_value)
    if alpha >= 0:
        raise DomainError(f"eta_alpha_delta needs alpha < 0, got {alpha}")
    if c1 == 0:
        return _square_root_bound(24 * delta_value + 4 - 3 * alpha ** 2,
                                  4 + 3 * alpha, 2, "eta_alpha_delta")
    return _square_root_bound(
        96 * delta_value + 13 + 12 * alpha - 12 * alpha ** 2,
        3 + 6 * alpha, 4, "eta_alpha_delta")


def last_integer_below(value: QuadraticValue, strict: bool) -> int:
    """Наибольшее целое n с n < value (strict) или n ≤ value"""
    result = value.floor()
    if strict and value.is_integer():
        result -= 1
    return result
