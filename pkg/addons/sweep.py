"""
Перебор параметров расслоения с построением записи для каждого набора
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple
from itertools import product
from utilities.bundle import BundleProfile, ChernClasses, delta
from utilities.quadratic import DomainError
from nonvanishing.bounds import (bar_alpha, zeta, tau, eta_delta,
                                 eta_alpha_delta)
from nonvanishing.theorems import forced_nonvanishing

logger = logging.getLogger(__name__)

Record = Dict[str, str]


# pylint: disable=too-few-public-methods
class ParameterSweep:
    """Перебор по декартову произведению значений параметров.
    Наследник определяет :meth:`_step`, строящий запись для одного набора.
    """
    def __init__(self, params_to_sweep: dict):
        """Инициализатор класса

        Args:
            params_to_sweep: словарь параметров с наборами их значений

        Raises:
            AttributeError - если словарь пуст
        """
        if not params_to_sweep:
            raise AttributeError("params_to_sweep must not be empty")
        self.__params_to_sweep = {key: tuple(values) for key, values
                                  in params_to_sweep.items()}
        self._records: List[Tuple[dict, Record]] = []

    def run(self) -> Sequence[Tuple[dict, Record]]:
        """Запуск перебора

        Returns:
            Пары (набор параметров, запись) в порядке перебора
        """
        keys = self.__params_to_sweep.keys()
        values = self.__params_to_sweep.values()

        self._records = []

        for params in product(*values):
            current_params = dict(zip(keys, params))
            self._records.append((current_params, self._step(current_params)))

        return self._records

    def _step(self, params: dict) -> Record:
        """Шаг перебора

        Args:
            params: текущий набор параметров

        Returns:
            Запись ``ключ -> значение``
        """
        raise NotImplementedError


def _floor_or_undefined(build) -> str:
    try:
        return str(build().floor())
    except DomainError:
        return "undefined"


# pylint: disable=too-few-public-methods
class BoundSweep(ParameterSweep):
    """Границы ζ, ᾱ, τ, η и наибольший вынужденный твист для ряда
    значений :math:`c_2` при фиксированных :math:`c_1` и α"""
    def __init__(self, c1: int, c2_range: Tuple[int, int],
                 alpha: Optional[int] = None):
        """Инициализатор класса

        Args:
            c1: первый класс Черна
            c2_range: (c2_min, c2_max) включительно
            alpha: первый уровень или None

        Raises:
            DomainError - если диапазон пуст
        """
        c2_min, c2_max = c2_range
        if c2_min > c2_max:
            raise DomainError(f"empty c2 range {c2_min}..{c2_max}")
        super().__init__({"c2": range(c2_min, c2_max + 1)})
        self.__c1 = c1
        self.__alpha = alpha

    def _step(self, params: dict) -> Record:
        c2 = params["c2"]
        chern = ChernClasses(self.__c1, c2)
        alpha = self.__alpha
        record = {"c2": str(c2)}
        if c2 >= 0:
            value = zeta(chern)
            record["zeta"] = value.exact()
            record["bar_alpha"] = str(bar_alpha(chern))
        else:
            record["zeta"] = "undefined"
        record["tau_floor"] = _floor_or_undefined(lambda: tau(chern))
        if alpha is not None and alpha < 0:
            delta_value = delta(chern, alpha)
            record["delta"] = str(delta_value)
            record["eta_delta_floor"] = _floor_or_undefined(
                lambda: eta_delta(self.__c1, delta_value))
            if c2 >= 0:
                record["eta_alpha_delta_floor"] = _floor_or_undefined(
                    lambda: eta_alpha_delta(self.__c1, alpha, delta_value))
        try:
            report = forced_nonvanishing(BundleProfile(chern, alpha=alpha))
            record["forced_max"] = str(report.forced_max)
        except DomainError as error:
            logger.debug("c2=%d: %s", c2, error)
            record["forced_max"] = "inapplicable"
        return record

    def records(self) -> List[Record]:
        """Записи по возрастанию :math:`c_2`"""
        return [record for _, record in self.run()]
