"""
Модуль, реализующий таблицу когомологий :math:`h^i(E(n))` на окне
последовательных твистов
"""
from typing import Dict, Iterable, Iterator, Optional, Tuple
from dataclasses import dataclass, field, replace
from utilities.bundle import ChernClasses, _check_integer


class TableFormatError(ValueError):
    """Некорректная таблица когомологий или текст таблицы"""
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class TableRow:
    """Строка таблицы: твист и размерности когомологий (h2, h3 необязательны)"""
    n: int
    h0: int
    h1: int
    h2: Optional[int] = None
    h3: Optional[int] = None

    @property
    def complete(self) -> bool:
        """True, если известны все четыре размерности"""
        return self.h2 is not None and self.h3 is not None

    def chi(self) -> Optional[int]:
        """Знакопеременная сумма :math:`h^0 - h^1 + h^2 - h^3`"""
        if not self.complete:
            return None
        return self.h0 - self.h1 + self.h2 - self.h3


@dataclass(frozen=True)
class CohomologyTable:
    """
    Таблица когомологий расслоения (иммутабельная).

    Строки идут подряд по возрастанию твиста. Если задано α, то
    :math:`h^0(E(n)) = 0` при n < α и :math:`h^0(E(α)) > 0`.
    """
    chern: ChernClasses = field(init=False)
    rows: Tuple[TableRow, ...] = field(init=False)
    alpha: Optional[int] = field(init=False)
    gamma: Optional[int] = field(init=False)
    beta: Optional[int] = field(init=False)

    def __init__(self, chern: ChernClasses, rows: Iterable[TableRow],
                 alpha: Optional[int] = None, gamma: Optional[int] = None,
                 beta: Optional[int] = None):
        """Инициализатор класса

        Args:
            chern: классы Черна
            rows: строки таблицы
            alpha: первый уровень
            gamma: третий уровень
            beta: второй уровень

        Raises:
            AttributeError - если типы параметров не корректны
            TableFormatError - если нарушены инварианты таблицы
        """
        if not isinstance(chern, ChernClasses):
            raise AttributeError("chern must be a ChernClasses")
        rows = tuple(rows)
        for level_name, level in (("alpha", alpha), ("gamma", gamma),
                                  ("beta", beta)):
            if level is not None:
                _check_integer(level_name, level)
        self.__check_rows(rows)
        if alpha is not None:
            self.__check_alpha(rows, alpha)
        object.__setattr__(self, "chern", chern)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "beta", beta)

    @staticmethod
    def __check_rows(rows: Tuple[TableRow, ...]) -> None:
        if not rows:
            raise TableFormatError("table has no rows")
        for row in rows:
            if not isinstance(row, TableRow):
                raise AttributeError("rows must be TableRow instances")
            _check_integer("n", row.n)
            if (row.h2 is None) != (row.h3 is None):
                raise TableFormatError(f"h2 and h3 must appear together "
                                       f"(n={row.n})")
            for value in (row.h0, row.h1, row.h2, row.h3):
                if value is None:
                    continue
                _check_integer("count", value)
                if value < 0:
                    raise TableFormatError(f"negative count at n={row.n}")
        for previous, current in zip(rows, rows[1:]):
            if current.n == previous.n:
                raise TableFormatError(f"duplicate twist {current.n}")
            if current.n != previous.n + 1:
                raise TableFormatError(f"non-contiguous window: {previous.n} "
                                       f"followed by {current.n}")

    @staticmethod
    def __check_alpha(rows: Tuple[TableRow, ...], alpha: int) -> None:
        for row in rows:
            if row.n < alpha and row.h0 != 0:
                raise TableFormatError(f"h0 = {row.h0} at n={row.n} below "
                                       f"alpha = {alpha}")
            if row.n == alpha and row.h0 == 0:
                raise TableFormatError(f"h0 vanishes at n = alpha = {alpha}")

    @property
    def window(self) -> Tuple[int, int]:
        """Окно твистов (n_min, n_max) включительно"""
        return self.rows[0].n, self.rows[-1].n

    def twists(self) -> range:
        """Все твисты окна по возрастанию"""
        n_min, n_max = self.window
        return range(n_min, n_max + 1)

    def __contains__(self, n: int) -> bool:
        n_min, n_max = self.window
        return isinstance(n, int) and n_min <= n <= n_max

    def __iter__(self) -> Iterator[TableRow]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> Optional[TableRow]:
        """Строка твиста n или None вне окна"""
        if n not in self:
            return None
        return self.rows[n - self.window[0]]

    def h1_map(self) -> Dict[int, int]:
        """Словарь :math:`n \\mapsto h^1(E(n))`"""
        return {row.n: row.h1 for row in self.rows}

    def with_row(self, new_row: TableRow) -> "CohomologyTable":
        """Копия таблицы с заменённой строкой того же твиста

        Raises:
            TableFormatError - если твист вне окна
        """
        if new_row.n not in self:
            raise TableFormatError(f"twist {new_row.n} outside window "
                                   f"{self.window}")
        rows = tuple(new_row if row.n == new_row.n else row
                     for row in self.rows)
        return CohomologyTable(self.chern, rows, alpha=self.alpha,
                               gamma=self.gamma, beta=self.beta)

    def with_h1(self, n: int, value: int) -> "CohomologyTable":
        """Копия таблицы с изменённым значением :math:`h^1(E(n))`"""
        current = self.row(n)
        if current is None:
            raise TableFormatError(f"twist {n} outside window {self.window}")
        return self.with_row(replace(current, h1=value))
