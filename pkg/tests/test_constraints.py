"""
Модуль для тестирования ограничений на обнуление

Классы:
    TestLowVanishingConstraint - обнуление на твистах -1..α-1
    TestHighVanishingConstraint - обнуление при n ≥ α
"""
import pytest
from utilities.constraints import (Constraint, HighVanishingConstraint,
                                   LowVanishingConstraint)


class TestLowVanishingConstraint:
    """Класс для тестирования ограничений на малых твистах

    Методы:
        test_create(int, int)

        test_allows(int, int, int, bool)

        test_check(dict, bool)

        test_describe()
    """
    @pytest.mark.parametrize(
        ("alpha", "bar_alpha"), [
            (1, 2),
            (2, 2),
            pytest.param(0, 2, marks=pytest.mark.xfail(strict=True)),
            pytest.param(1.0, 2, marks=pytest.mark.xfail(strict=True))
        ]
    )
    def test_create(self, alpha: int, bar_alpha: int):
        """Тестирование создания

        :param alpha: первый уровень
        :param bar_alpha: ᾱ
        """
        constraint = LowVanishingConstraint(alpha, bar_alpha)
        assert isinstance(constraint, Constraint)
        assert (constraint.alpha, constraint.bar_alpha) == (alpha, bar_alpha)

    @pytest.mark.parametrize(
        ("alpha", "bar_alpha", "n", "expected"), [
            (2, 2, 1, True),
            (2, 2, 0, False),
            (1, 2, 0, False),
            (3, 3, -1, False)
        ]
    )
    def test_allows(self, alpha: int, bar_alpha: int, n: int, expected: bool):
        """Тестирование допустимости нуля

        :param alpha: первый уровень
        :param bar_alpha: ᾱ
        :param n: твист
        :param expected: ожидаемый результат
        """
        constraint = LowVanishingConstraint(alpha, bar_alpha)
        assert constraint.in_window(n)
        assert constraint.allows(n) == expected

    @pytest.mark.parametrize(
        ("h1", "expected"), [
            ({-2: 0, -1: 1, 0: 2, 1: 1}, True),
            ({-1: 0, 0: 2}, False),
            ({0: 3, 1: 0}, True)
        ]
    )
    def test_check(self, h1: dict, expected: bool):
        """Проверка записанных значений для α = ᾱ = 2

        :param h1: значения :math:`h^1`
        :param expected: ожидаемый результат
        """
        constraint = LowVanishingConstraint(2, 2)
        assert constraint.check(h1) == expected
        assert bool(constraint.violations(h1)) != expected

    def test_describe(self):
        """Тестирование формулировки"""
        assert LowVanishingConstraint(2, 2).describe() == \
            "vanishing in -1..1 only at n=1 with bar_alpha=2"
        assert LowVanishingConstraint(1, 2).describe() == \
            "vanishing in -1..0 only at n=0 with bar_alpha=2; " \
            "impossible since alpha=1"


class TestHighVanishingConstraint:
    """Класс для тестирования ограничений на больших твистах

    Методы:
        test_violations(int, int, dict, tuple)

        test_describe()
    """
    @pytest.mark.parametrize(
        ("alpha", "bar_alpha", "h1", "expected"), [
            (1, 10, {9: 1, 10: 0, 35: 0}, ()),
            (1, 10, {5: 0, 6: 0, 10: 0}, (5, 6)),
            (2, 2, {1: 0, 2: 0}, ()),
            (1, 3, {0: 0, 1: 0}, (1,))
        ]
    )
    def test_violations(self, alpha: int, bar_alpha: int, h1: dict,
                        expected: tuple):
        """Тестирование нарушений

        :param alpha: первый уровень
        :param bar_alpha: ᾱ
        :param h1: значения :math:`h^1`
        :param expected: ожидаемые твисты-нарушения
        """
        constraint = HighVanishingConstraint(alpha, bar_alpha)
        assert constraint.violations(h1) == expected

    def test_describe(self):
        """Тестирование формулировки"""
        assert HighVanishingConstraint(1, 10).describe() == \
            "vanishing at n >= 1 forces n >= 10"
