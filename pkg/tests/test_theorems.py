"""
Модуль для тестирования вынужденного ненулевого h¹

Классы:
    TestClauseId - перечень утверждений
    TestForcedNonVanishing - диапазоны вынужденных твистов
    TestForcedErrors - неприменимость
    TestVanishingConstraints - ограничения стабильного случая
    TestGammaComparison - сравнение с γ - 2
"""
import logging
import numpy as np
import pytest
from utilities.bundle import BundleProfile, ChernClasses
from utilities.constraints import (HighVanishingConstraint,
                                   LowVanishingConstraint)
from utilities.quadratic import DomainError, QuadraticValue
from nonvanishing.bounds import BoundKind
from nonvanishing.theorems import (ALPHA_DEPENDENT, ClauseId, Verdict,
                                   forced_nonvanishing, gamma_bound_comparison,
                                   vanishing_constraints_stable)


class TestClauseId:
    """Класс для тестирования ClauseId

    Методы:
        test_statements()
    """
    def test_statements(self):
        """У каждого утверждения есть формулировка"""
        for clause in ClauseId:
            assert clause.statement
        assert set(ALPHA_DEPENDENT) <= set(ClauseId)


class TestForcedNonVanishing:
    """Класс для тестирования forced_nonvanishing

    Методы:
        test_forced(BundleProfile, tuple)

        test_random_profiles()

        test_clauses_two_conics()

        test_clauses_nonstable()

        test_unknown_alpha()

        test_integer_eta(caplog)

        test_tau_skipped()

        test_tau_unknown_alpha_note(monkeypatch)
    """
    @pytest.mark.parametrize(
        ("profile", "expected"), [
            (BundleProfile.of(-1, 2, alpha=1), tuple(range(-1, 2))),
            (BundleProfile.of(0, 4, alpha=2), tuple(range(-1, 2))),
            (BundleProfile.of(0, 9, alpha=-3), tuple(range(-1, 13))),
            (BundleProfile.of(0, 3, alpha=0), tuple(range(-1, 3))),
            (BundleProfile.of(0, 4, alpha=0), tuple(range(-1, 3))),
            (BundleProfile.of(0, 0, alpha=-4), tuple(range(-1, 14))),
            (BundleProfile.of(0, 47, alpha=1), tuple(range(-1, 10))),
            (BundleProfile.of(0, 20, alpha=2), tuple(range(-1, 6))),
            (BundleProfile.of(-1, 2, alpha=0), tuple(range(-1, 3)))
        ]
    )
    def test_forced(self, profile: BundleProfile, expected: tuple):
        """Тестирование множества вынужденных твистов

        :param profile: профиль расслоения
        :param expected: ожидаемые твисты
        """
        report = forced_nonvanishing(profile)
        assert report.forced_twists == expected
        assert report.forced_max == expected[-1]
        assert report.is_contiguous

    def test_random_profiles(self):
        """Вынужденные твисты идут подряд начиная с -1 для случайных
        профилей; отказ допустим только при δ = 0 или неприменимости"""
        rng = np.random.default_rng(271828)
        checked = 0
        for _ in range(10 ** 3):
            c1 = int(rng.choice([0, -1]))
            c2 = int(rng.integers(-50, 201))
            alpha = None if rng.random() < 0.2 \
                else int(rng.integers(-10, 11))
            profile = BundleProfile.of(c1, c2, alpha=alpha)
            split = profile.delta == 0
            inapplicable = c2 <= 0 and (alpha is None or alpha > 0)
            if split or inapplicable:
                with pytest.raises(DomainError):
                    forced_nonvanishing(profile)
                continue
            report = forced_nonvanishing(profile)
            assert report.forced_interval[0] == -1, profile
            assert report.is_contiguous, profile
            checked += 1
        assert checked > 500

    def test_clauses_two_conics(self):
        """Утверждения для :math:`c_1 = -1, c_2 = 2, α = 1`"""
        report = forced_nonvanishing(BundleProfile.of(-1, 2, alpha=1))
        assert report.clauses_at(-1) == {ClauseId.ZETA_RANGE,
                                         ClauseId.ZETA_BAR_ALPHA}
        assert report.clauses_at(1) == {ClauseId.ZETA_INTEGER}
        assert report.clauses_at(5) == frozenset()
        assert report.constraints == (LowVanishingConstraint(1, 2),
                                      HighVanishingConstraint(1, 2))
        assert str(report.bound(BoundKind.ZETA).value) == "1 (integer)"
        assert report.bound(BoundKind.TAU) is None
        assert report.comparison is None

    def test_clauses_nonstable(self):
        """Утверждения для :math:`c_2 = 9, α = -3, δ = 18`"""
        report = forced_nonvanishing(BundleProfile.of(0, 9, alpha=-3))
        assert report.clauses_at(3) == {
            ClauseId.ZETA_RANGE, ClauseId.ZETA_BAR_ALPHA,
            ClauseId.ZETA_NONSTABLE, ClauseId.INSTABILITY_RANGE,
            ClauseId.ETA_RANGE, ClauseId.ETA_ALPHA_RANGE}
        assert report.clauses_at(8) == {ClauseId.ETA_RANGE,
                                        ClauseId.ETA_ALPHA_RANGE}
        assert report.clauses_at(12) == {ClauseId.ETA_ALPHA_RANGE}
        assert report.bound(BoundKind.ETA_DELTA).floor == 8
        assert report.bound(BoundKind.ETA_ALPHA_DELTA).value == \
            QuadraticValue(409, -5, 2)
        assert not report.constraints

    def test_unknown_alpha(self):
        """Без α зависящие от него утверждения становятся условными"""
        report = forced_nonvanishing(BundleProfile.of(0, 4))
        assert report.forced_twists == (-1, 0, 1)
        assert report.conditional == ALPHA_DEPENDENT
        assert report.bound(BoundKind.TAU).floor == 3

    def test_integer_eta(self, caplog):
        """Целое η(δ) включается в диапазон с предупреждением"""
        with caplog.at_level(logging.WARNING):
            report = forced_nonvanishing(BundleProfile.of(0, 3, alpha=-1))
        assert ClauseId.ETA_RANGE in report.clauses_at(3)
        assert any("is an integer" in note for note in report.notes)
        assert "is an integer" in caplog.text

    def test_tau_skipped(self):
        """Отрицательное подкоренное выражение τ пропускает утверждение"""
        report = forced_nonvanishing(BundleProfile.of(0, -1, alpha=0))
        assert report.forced_twists == (-1, 0)
        assert any(note.startswith("tau-range skipped")
                   for note in report.notes)

    def test_tau_unknown_alpha_note(self, monkeypatch):
        """Ошибка вычисления τ при неизвестном α попадает в примечания"""
        def failing_tau(chern):
            raise DomainError(f"tau: negative radicand for c2 = {chern.c2}")

        monkeypatch.setattr("nonvanishing.theorems.tau", failing_tau)
        report = forced_nonvanishing(BundleProfile.of(0, 4))
        assert report.bound(BoundKind.TAU) is None
        assert report.notes == (
            "tau-range bound not computed: tau: negative radicand for "
            "c2 = 4",)
        assert report.forced_twists == (-1, 0, 1)


class TestForcedErrors:
    """Класс для тестирования неприменимости

    Методы:
        test_errors(BundleProfile, str)

        test_type()
    """
    @pytest.mark.parametrize(
        ("profile", "message"), [
            (BundleProfile.of(0, -5, alpha=1),
             "theorem inapplicable: requires c2 > 0 or non-stability"),
            (BundleProfile.of(0, 0), "theorem inapplicable"),
            (BundleProfile.of(0, 0, alpha=0), "delta = 0"),
            (BundleProfile.of(0, -1, alpha=1), "delta = 0")
        ]
    )
    def test_errors(self, profile: BundleProfile, message: str):
        """Тестирование ошибок

        :param profile: профиль расслоения
        :param message: фрагмент сообщения
        """
        with pytest.raises(DomainError, match=message):
            forced_nonvanishing(profile)

    def test_type(self):
        """Тестирование типа аргумента"""
        with pytest.raises(AttributeError):
            forced_nonvanishing(ChernClasses(0, 4))


class TestVanishingConstraints:
    """Класс для тестирования vanishing_constraints_stable

    Методы:
        test_values()

        test_errors(ChernClasses, int)
    """
    def test_values(self):
        """Ограничения для :math:`c_2 = 47, α = 1`"""
        low, high = vanishing_constraints_stable(ChernClasses(0, 47), 1)
        assert low == LowVanishingConstraint(1, 10)
        assert high.violations({34: 1, 35: 0, 9: 0}) == (9,)

    @pytest.mark.parametrize(
        ("chern", "alpha"), [
            (ChernClasses(0, 4), 0),
            (ChernClasses(0, 0), 1)
        ]
    )
    def test_errors(self, chern: ChernClasses, alpha: int):
        """Вне стабильного случая

        :param chern: классы Черна
        :param alpha: первый уровень
        """
        with pytest.raises(DomainError):
            vanishing_constraints_stable(chern, alpha)


class TestGammaComparison:
    """Класс для тестирования сравнения с γ - 2

    Методы:
        test_verdict(BundleProfile, int, Verdict)

        test_lower_bounds()
    """
    @pytest.mark.parametrize(
        ("profile", "gamma_bound", "verdict"), [
            (BundleProfile.of(-1, 2, alpha=1, gamma=2), 0, Verdict.BETTER),
            (BundleProfile.of(0, 4, alpha=2, gamma=3), 1, Verdict.EQUAL),
            (BundleProfile.of(0, 20, alpha=2, gamma=10), 8, Verdict.WORSE),
            (BundleProfile.of(0, 0, alpha=-4, gamma=12), 10, Verdict.BETTER)
        ]
    )
    def test_verdict(self, profile: BundleProfile, gamma_bound: int,
                     verdict: Verdict):
        """Тестирование вердикта

        :param profile: профиль расслоения с γ
        :param gamma_bound: ожидаемое γ - 2
        :param verdict: ожидаемый вердикт
        """
        comparison = forced_nonvanishing(profile).comparison
        assert comparison.gamma_bound == gamma_bound
        assert comparison.verdict is verdict

    def test_lower_bounds(self):
        """Известные нижние границы через порядок нестабильности"""
        report = forced_nonvanishing(BundleProfile.of(0, 9, alpha=-3))
        comparison = gamma_bound_comparison(report, 9)
        assert comparison.our_bound == 12
        assert comparison.lower_bound_instanton == -4
        assert comparison.lower_bound_general == -5
        unknown = forced_nonvanishing(BundleProfile.of(0, 4))
        assert gamma_bound_comparison(unknown, 3).lower_bound_instanton is None
