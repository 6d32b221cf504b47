"""
Характеристика Эйлера расслоения ранга 2: многочлен Гильберта на
:math:`\\mathbb{P}^3` на основе :mod:`sympy`, характеристика на плоскости,
биномиальные коэффициенты и вещественные корни кубики
"""
from enum import Enum
from functools import lru_cache
from typing import Sequence, Tuple
from dataclasses import dataclass
import sympy as sm
from utilities.bundle import ChernClasses
from utilities.quadratic import DomainError

# Символы для символьных выражений
c1_var, c2_var, t_var = sm.symbols("c1, c2, t")

#: Число кэшируемых наборов коэффициентов многочлена Гильберта
HILBERT_CACHE_SIZE = 1024


class BaseFunction:
    """Базовый класс для символьных выражений от классов Черна и твиста"""
    def __init__(self, expr: sm.Expr, var: Sequence[sm.Symbol]):
        """Инициализатор класса

        Args:
            expr: символьное выражение
            var: кортеж переменных

        Raises:
            AttributeError - если параметры не корректны
        """
        if not isinstance(expr, sm.Expr):
            raise AttributeError("expr should be an sympy.Expr")
        if not isinstance(var, tuple):
            raise AttributeError("var should be a tuple")
        for variable in var:
            if variable not in expr.atoms(sm.Symbol):
                raise AttributeError("var should contain"
                                     " sympy.Symbol from expr")
        self.__expression = expr
        self.__variables = var

    @property
    def expr(self) -> sm.Expr:
        """Символьное выражение"""
        return self.__expression

    @property
    def variables(self) -> Tuple[sm.Symbol, ...]:
        """Символьные переменные"""
        return self.__variables

    def calculate(self, data: Sequence) -> sm.Expr:
        """Подстановка значений вместо переменных

        Args:
            data: значения в порядке переменных

        Returns:
            Число или символьное выражение с учётом подстановок

        Raises:
            AttributeError - если число значений не совпадает с числом переменных
        """
        if len(data) != len(self.__variables):
            raise AttributeError("Data length must be the same as the dimension")
        return self.__expression.subs(zip(self.__variables, data))

    def __eq__(self, other: "BaseFunction") -> bool:
        """Равенство выражений с точностью до раскрытия скобок"""
        if not isinstance(other, BaseFunction):
            return False
        return sm.expand(self.expr - other.expr) == 0

    def __hash__(self) -> int:
        return hash(sm.expand(self.expr))

    def __str__(self) -> str:
        return str(self.__expression)


class HilbertPolynomial(BaseFunction):
    """Многочлен Гильберта :math:`P(c_1, c_2; t)` в раскрытом виде"""
    def __init__(self):
        expr = sm.Rational(1, 3) * t_var ** 3 \
            + (c1_var / 2 + 2) * t_var ** 2 \
            + (c1_var ** 2 / 2 + 2 * c1_var - c2_var + sm.Rational(11, 3)) * t_var \
            + c1_var ** 3 / 6 - c1_var * c2_var / 2 + c1_var ** 2 \
            + sm.Rational(11, 6) * c1_var - 2 * c2_var + 2
        super().__init__(expr, (c1_var, c2_var, t_var))


class FactoredHilbertPolynomial(BaseFunction):
    """Многочлен Гильберта в виде
    :math:`\\frac13 u (u^2 - 1 + \\frac34 c_1^2 - 3c_2)`, :math:`u = t + 2 + c_1/2`
    """
    def __init__(self):
        shifted = t_var + 2 + c1_var / 2
        expr = sm.Rational(1, 3) * shifted * (
            shifted ** 2 - 1 + sm.Rational(3, 4) * c1_var ** 2 - 3 * c2_var)
        super().__init__(expr, (c1_var, c2_var, t_var))


@dataclass(frozen=True)
class HilbertCubic:
    """Коэффициенты :math:`a_3 t^3 + a_2 t^2 + a_1 t + a_0` при
    фиксированных классах Черна"""
    a3: sm.Rational
    a2: sm.Rational
    a1: sm.Rational
    a0: sm.Rational

    def evaluate(self, n: int) -> sm.Rational:
        """Значение в точке по схеме Горнера"""
        return ((self.a3 * n + self.a2) * n + self.a1) * n + self.a0

    def as_poly(self) -> sm.Poly:
        """Многочлен :class:`sympy.Poly` от t"""
        return sm.Poly.from_list([self.a3, self.a2, self.a1, self.a0], t_var)


class RootStructure(Enum):
    """Вещественные корни многочлена Гильберта"""
    THREE_REAL = "three-real"
    ONE_REAL = "one-real"


@lru_cache(maxsize=HILBERT_CACHE_SIZE)
def _hilbert_coeffs(c1: int, c2: int) -> HilbertCubic:
    expr = HilbertPolynomial().calculate([c1, c2, t_var])
    a3, a2, a1, a0 = sm.Poly(expr, t_var).all_coeffs()
    return HilbertCubic(a3, a2, a1, a0)


def hilbert_coeffs(chern: ChernClasses) -> HilbertCubic:
    """Коэффициенты многочлена Гильберта расслоения"""
    return _hilbert_coeffs(chern.c1, chern.c2)


def chi_p3(chern: ChernClasses, n: int) -> int:
    """Характеристика Эйлера :math:`\\chi(E(n))` на :math:`\\mathbb{P}^3`

    Считается по разложенной формуле и сверяется с раскрытой.

    Args:
        chern: классы Черна
        n: твист

    Returns:
        Целое число

    Raises:
        DomainError - при :math:`c_1 = -1` и нечётном :math:`c_2`
            (значение полуцелое, таких расслоений нет)
    """
    c2 = chern.c2
    if chern.c1 == -1 and c2 % 2 != 0:
        raise DomainError(f"chi is not integral for c1 = -1 and odd c2 = {c2}")
    if chern.c1 == 0:
        value = sm.Rational((n + 2) * ((n + 2) ** 2 - 1 - 3 * c2), 3)
    else:
        # 24 chi = (2n+3)((2n+3)^2 - 1 - 12 c2)
        value = sm.Rational((2 * n + 3) * ((2 * n + 3) ** 2 - 1 - 12 * c2), 24)
    assert value.q == 1, f"chi({chern}, {n}) = {value} is not an integer"
    assert value == hilbert_coeffs(chern).evaluate(n), \
        f"factored and expanded chi disagree at {chern}, n={n}"
    return int(value)


def chi_p2(chern: ChernClasses, n: int) -> int:
    """Характеристика Эйлера на плоскости: :math:`(n+1)(n+2+c_1) - c_2`"""
    return (n + 1) * (n + 2 + chern.c1) - chern.c2


def binomial(top: int, bottom: int) -> int:
    """Биномиальный коэффициент с соглашением :math:`\\binom{n}{k} = 0` при n < k

    Args:
        top: n, любое целое
        bottom: k, неотрицательное целое
    """
    if top < bottom:
        return 0
    return int(sm.binomial(top, bottom))


def binom3(number: int) -> int:
    """:math:`\\binom{m}{3}` с тем же соглашением"""
    return binomial(number, 3)


def cubic_root_structure(chern: ChernClasses) -> RootStructure:
    """Число вещественных корней многочлена Гильберта по знаку дискриминанта"""
    discriminant = sm.discriminant(hilbert_coeffs(chern).as_poly())
    if discriminant >= 0:
        return RootStructure.THREE_REAL
    return RootStructure.ONE_REAL
