"""
Точная арифметика: целый квадратный корень, рациональные числа
и квадратичные иррациональности вида :math:`(\\sqrt{R} - p)/q`.

Все сравнения выполняются только в целых числах, плавающая точка
используется лишь для отображения приближённых значений.
"""
from enum import Enum
from dataclasses import dataclass, field
from typing import Union
import sympy as sm

#: Количество знаков после запятой в приближённом представлении
APPROX_DIGITS = 4

RationalLike = Union[int, sm.Rational]
Comparable = Union[int, sm.Rational, "QuadraticValue"]


class DomainError(ValueError):
    """Нарушено математическое предусловие операции
    (отрицательное подкоренное выражение, неприменимая теорема и т.п.)"""


class Ordering(Enum):
    """Результат точного сравнения"""
    LESS = -1
    EQUAL = 0
    GREATER = 1


def isqrt(number: int) -> int:
    """Целый квадратный корень

    Args:
        number: неотрицательное целое

    Returns:
        Наибольшее s такое, что :math:`s^2 \\leq number`

    Raises:
        DomainError - если number < 0
    """
    if isinstance(number, bool) or not isinstance(number, int):
        raise TypeError("number must be an integer")
    if number < 0:
        raise DomainError(f"isqrt of a negative number: {number}")
    root, _ = sm.integer_nthroot(number, 2)
    return int(root)


def as_rational(value: RationalLike) -> sm.Rational:
    """Приведение целого или рационального числа к :class:`sympy.Rational`

    Raises:
        TypeError - для чисел с плавающей точкой и прочих объектов
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(value, int):
        return sm.Integer(value)
    if isinstance(value, sm.Rational):
        return value
    raise TypeError(f"{value!r} is not an exact rational number")


def _sign(value: int) -> Ordering:
    if value < 0:
        return Ordering.LESS
    if value > 0:
        return Ordering.GREATER
    return Ordering.EQUAL


def _sign_with_root(term: int, factor: int, radicand: int) -> Ordering:
    """Знак :math:`m + c\\sqrt{r}` для целых m, c и r ≥ 0"""
    if term >= 0 and factor >= 0:
        if term > 0 or (factor > 0 and radicand > 0):
            return Ordering.GREATER
        return Ordering.EQUAL
    if term <= 0 and factor <= 0:
        return Ordering(-_sign_with_root(-term, -factor, radicand).value)
    difference = term * term - factor * factor * radicand
    return _sign(difference) if term > 0 else _sign(-difference)


@dataclass(frozen=True)
class QuadraticValue:
    """
    Вещественное число :math:`(\\sqrt{R} - p)/q` (иммутабельное).

    Форма не обязана быть сокращённой: равенство значений
    определяется только через :meth:`compare`.

    Определённые операции:
        Точное сравнение с рациональными числами и другими
        квадратичными иррациональностями
        Целая часть
        Проверка на целочисленность
        Точное и приближённое строковое представление
    """
    radicand: int = field(init=False)
    shift: int = field(init=False)
    denominator: int = field(init=False)

    def __init__(self, radicand: int, shift: int, denominator: int = 1):
        """Инициализатор класса

        Args:
            radicand: подкоренное выражение R
            shift: вычитаемое p
            denominator: знаменатель q

        Raises:
            AttributeError - если параметры не целые
            DomainError - если R < 0 или q < 1
        """
        for name, value in (("radicand", radicand), ("shift", shift),
                            ("denominator", denominator)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise AttributeError(f"{name} must be an integer")
        if radicand < 0:
            raise DomainError(f"negative radicand: {radicand}")
        if denominator < 1:
            raise DomainError("denominator must be >= 1")
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "denominator", denominator)

    def compare(self, other: Comparable) -> Ordering:
        """Точное сравнение с рациональным числом a/b или с другой
        квадратичной иррациональностью

        Сравнение с a/b сводится к сравнению :math:`\\sqrt{R}` с
        :math:`(qa + pb)/b`.

        Args:
            other: целое, :class:`sympy.Rational` или QuadraticValue

        Returns:
            Порядок значения относительно other
        """
        if isinstance(other, QuadraticValue):
            return self._compare_quadratic(other)
        value = as_rational(other)
        num = self.denominator * int(value.p) + self.shift * int(value.q)
        den = int(value.q)
        # sqrt(R) >= 0, знак num решает сравнение без возведения в квадрат
        if num < 0:
            return Ordering.GREATER
        return _sign(self.radicand * den * den - num * num)

    def _compare_quadratic(self, other: "QuadraticValue") -> Ordering:
        """Сравнение :math:`(\\sqrt{A} - p)/q` с :math:`(\\sqrt{B} - s)/t`:
        знак :math:`\\sqrt{a} - \\sqrt{b} - k` при :math:`a = t^2A`,
        :math:`b = q^2B`, :math:`k = tp - qs`"""
        left = other.denominator ** 2 * self.radicand
        right = self.denominator ** 2 * other.radicand
        gap = other.denominator * self.shift - self.denominator * other.shift
        if gap >= 0:
            # (sqrt(b) + k)^2 против a
            return _sign_with_root(left - right - gap * gap, -2 * gap, right)
        # (sqrt(a) - k)^2 против b
        return _sign_with_root(left + gap * gap - right, -2 * gap, left)

    def floor(self) -> int:
        """Целая часть: единственное k, для которого :math:`k \\leq v < k+1`"""
        result = (isqrt(self.radicand) - self.shift) // self.denominator
        assert self.compare(result) is not Ordering.LESS
        assert self.compare(result + 1) is Ordering.LESS
        return result

    def is_integer(self) -> bool:
        """True, если значение целое"""
        root = isqrt(self.radicand)
        if root * root != self.radicand:
            return False
        return (root - self.shift) % self.denominator == 0

    def approx(self, digits: int = APPROX_DIGITS) -> str:
        """Приближённое значение для отображения (не для сравнений)"""
        expr = (sm.sqrt(self.radicand) - self.shift) / self.denominator
        return f"{float(sm.N(expr, digits + 15)):.{digits}f}"

    def exact(self) -> str:
        """Точная запись с вынесенным из-под корня квадратным множителем

        Returns:
            Например ``sqrt(13)-2`` или ``(sqrt(58)-3)/2``; для целых значений
            просто число
        """
        if self.is_integer():
            return str(self.floor())
        if self.radicand == 0:
            return str(sm.Rational(-self.shift, self.denominator))
        outer, inner = 1, 1
        for prime, power in sm.factorint(self.radicand).items():
            outer *= prime ** (power // 2)
            inner *= prime ** (power % 2)
        shift, denominator = self.shift, self.denominator
        common = sm.igcd(outer, shift, denominator)
        outer, shift, denominator = (outer // common, shift // common,
                                     denominator // common)
        root = f"sqrt({inner})" if outer == 1 else f"{outer}*sqrt({inner})"
        if shift > 0:
            numerator = f"{root}-{shift}"
        elif shift < 0:
            numerator = f"{root}+{-shift}"
        else:
            numerator = root
        if denominator == 1:
            return numerator
        return f"({numerator})/{denominator}"

    def __lt__(self, other: Comparable) -> bool:
        return self.compare(other) is Ordering.LESS

    def __le__(self, other: Comparable) -> bool:
        return self.compare(other) is not Ordering.GREATER

    def __gt__(self, other: Comparable) -> bool:
        return self.compare(other) is Ordering.GREATER

    def __ge__(self, other: Comparable) -> bool:
        return self.compare(other) is not Ordering.LESS

    def __str__(self) -> str:
        """Строковое представление"""
        if self.is_integer():
            return f"{self.exact()} (integer)"
        return f"{self.exact()} ~{self.approx()}"


def qv_cmp(value: QuadraticValue, other: Comparable) -> Ordering:
    """Точное сравнение квадратичной иррациональности с рациональным числом
    или другой квадратичной иррациональностью"""
    return value.compare(other)


def qv_floor(value: QuadraticValue) -> int:
    """Целая часть квадратичной иррациональности"""
    return value.floor()


def qv_is_integer(value: QuadraticValue) -> bool:
    """Проверка квадратичной иррациональности на целочисленность"""
    return value.is_integer()
