"""
Разность :math:`h^0 - h^3` нестабильного расслоения в замкнутой форме
и полная проверка вспомогательных тождеств на диапазонах твистов
"""
from typing import Callable, Dict, Iterable, Optional, Tuple
from dataclasses import dataclass
import sympy as sm
from utilities.bundle import _check_c1
from utilities.functions import (binom3, HilbertPolynomial,
                                 FactoredHilbertPolynomial)
from utilities.quadratic import DomainError

HALF = sm.Rational(1, 2)


def _h0_minus_h3_range(c1: int, alpha: int) -> Tuple[int, int]:
    """Границы твистов, на которых известна замкнутая форма"""
    return alpha - 3, -alpha - c1


def h0_minus_h3_nonstable(c1: int, alpha: int, n: int) -> int:
    """:math:`h^0(E(n)) - h^3(E(n))` нестабильного расслоения

    На верхнем твисте :math:`n = -α - c_1` общая формула уменьшается на 1.

    Args:
        c1: первый класс Черна
        alpha: первый уровень, α ≤ 0
        n: твист, :math:`α - 3 \\leq n \\leq -α - c_1`

    Returns:
        Целое значение разности

    Raises:
        DomainError - если α > 0 или n вне допустимого диапазона
    """
    _check_c1(c1)
    if alpha > 0:
        raise DomainError(f"closed form needs alpha <= 0, got {alpha}")
    low, high = _h0_minus_h3_range(c1, alpha)
    if not low <= n <= high:
        raise DomainError(f"closed form valid only for {low} <= n <= {high} "
                          f"(alpha={alpha}, c1={c1}), got n={n}")
    if c1 == 0:
        value = sm.Rational(1, 3) * (n + 2) * ((n + 2) ** 2 - 1 + 3 * alpha ** 2)
    else:
        shifted = n + 3 * HALF
        value = sm.Rational(1, 3) * shifted * (
            shifted ** 2 - HALF ** 2 + 3 * (alpha ** 2 - alpha))
    if n == high:
        value -= 1
    assert value.q == 1
    return int(value)


def h0_minus_h3_binomial(c1: int, alpha: int, n: int) -> int:
    """Та же разность через биномиальные коэффициенты:
    :math:`\\binom{n-α+3}{3} - \\binom{-n-α-1-c_1}{3}`"""
    return binom3(n - alpha + 3) - binom3(-n - alpha - 1 - c1)


def lemma_binomial_expansion(alpha: int, n: int) -> sm.Rational:
    """Правая часть разложения :math:`\\binom{n-α+3}{3}` при n ≥ α - 3"""
    return sm.Rational((n + 3) * (n + 2) * (n + 1), 6) \
        - (HALF * alpha * n ** 2 - HALF * alpha ** 2 * n + 2 * alpha * n) \
        - (sm.Rational(alpha ** 3, 6) - alpha ** 2 + sm.Rational(11 * alpha, 6))


@dataclass(frozen=True)
class IdentityResult:
    """Результат проверки одного тождества"""
    name: str
    checked: int
    counterexample: Optional[Dict[str, int]] = None

    @property
    def passed(self) -> bool:
        """True, если контрпример не найден"""
        return self.counterexample is None


@dataclass(frozen=True)
class IdentityReport:
    """Результаты проверки всех тождеств"""
    results: Tuple[IdentityResult, ...]

    @property
    def passed(self) -> bool:
        """True, если прошли все тождества"""
        return all(result.passed for result in self.results)

    def __getitem__(self, name: str) -> IdentityResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)


def _sweep(name: str, cases: Iterable[Dict[str, int]],
           predicate: Callable[..., bool]) -> IdentityResult:
    """Проверка предиката на всех наборах до первого контрпримера"""
    checked = 0
    for case in cases:
        checked += 1
        if not predicate(**case):
            return IdentityResult(name, checked, dict(case))
    return IdentityResult(name, checked)


def _square_shift(n: int) -> bool:
    return (n + 3) * (n + 1) == (n + 2) ** 2 - 1


def _half_shift(n: int) -> bool:
    return (n + 2) * (n + 1) == (n + 3 * HALF) ** 2 - HALF ** 2


def _product_c1_zero(n: int) -> bool:
    return sm.Rational((n + 3) * (n + 2) * (n + 1), 6) \
        == sm.Rational(1, 6) * (n + 2) * ((n + 2) ** 2 - 1)


def _product_c1_minus_one(n: int) -> bool:
    shifted = n + 3 * HALF
    right = sm.Rational(1, 6) * shifted * (shifted ** 2 + 2) \
        + sm.Rational(4 * n ** 2 + 6 * n - 1, 16)
    return sm.Rational((n + 3) * (n + 2) * (n + 1), 6) == right


def _binomial_expansion(alpha: int, n: int) -> bool:
    return binom3(n - alpha + 3) == lemma_binomial_expansion(alpha, n)


def _closed_form(c1: int):
    def predicate(alpha: int, n: int) -> bool:
        return h0_minus_h3_nonstable(c1, alpha, n) \
            == h0_minus_h3_binomial(c1, alpha, n)
    return predicate


def verify_lemma_identities(n_range: Tuple[int, int],
                            alpha_range: Tuple[int, int]) -> IdentityReport:
    """Перебор всех тождеств на прямоугольнике твистов и уровней

    Args:
        n_range: (n_min, n_max) включительно
        alpha_range: (alpha_min, alpha_max) включительно; положительные α
            пропускаются для замкнутых форм

    Returns:
        Отчёт с первым контрпримером для каждого тождества

    Raises:
        DomainError - если диапазон пуст
    """
    n_min, n_max = n_range
    alpha_min, alpha_max = alpha_range
    if n_min > n_max or alpha_min > alpha_max:
        raise DomainError("identity ranges must be non-empty")
    twists = range(n_min, n_max + 1)
    alphas = range(alpha_min, alpha_max + 1)

    def by_n():
        return ({"n": n} for n in twists)

    def expansion_cases():
        return ({"alpha": a, "n": n} for a in alphas for n in twists
                if n >= a - 3)

    def closed_form_cases(c1: int):
        return ({"alpha": a, "n": n} for a in alphas if a <= 0
                for n in twists
                if _h0_minus_h3_range(c1, a)[0] <= n
                <= _h0_minus_h3_range(c1, a)[1])

    forms_equal = HilbertPolynomial() == FactoredHilbertPolynomial()
    results = (
        IdentityResult("hilbert-forms", 1, None if forms_equal else {}),
        _sweep("square-shift", by_n(), _square_shift),
        _sweep("half-shift", by_n(), _half_shift),
        _sweep("product-c1=0", by_n(), _product_c1_zero),
        _sweep("product-c1=-1", by_n(), _product_c1_minus_one),
        _sweep("binomial-expansion", expansion_cases(), _binomial_expansion),
        _sweep("h0-h3-c1=0", closed_form_cases(0), _closed_form(0)),
        _sweep("h0-h3-c1=-1", closed_form_cases(-1), _closed_form(-1)),
    )
    return IdentityReport(results)
