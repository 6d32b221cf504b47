"""
Текстовый формат таблиц когомологий и дополнение таблиц
по двойственности Серра.

Формат (UTF-8, построчный)::

    # комментарий до конца строки
    c1=-1
    c2=2
    alpha=1          # необязательно, как и gamma=, beta=
    -2 0 0           # n h0 h1
    -1 0 1 0 0       # n h0 h1 h2 h3
"""
import logging
from typing import Dict, List, Optional, Tuple, Union
from dataclasses import dataclass, replace
from utilities.bundle import ChernClasses, serre_dual_twist
from utilities.cohomology import CohomologyTable, TableFormatError, TableRow
from utilities.quadratic import DomainError

logger = logging.getLogger(__name__)

HEADER_KEYS = ("c1", "c2", "alpha", "beta", "gamma")
REQUIRED_KEYS = ("c1", "c2")


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise TableFormatError(f"malformed integer {token!r}", line) from None


def _parse_header(text: str, line: int, header: Dict[str, int]) -> None:
    key, _, value = text.partition("=")
    key = key.strip()
    if key not in HEADER_KEYS:
        raise TableFormatError(f"unknown header {key!r}", line)
    if key in header:
        raise TableFormatError(f"duplicate header {key}=", line)
    header[key] = _parse_int(value.strip(), line)


def _parse_row(text: str, line: int) -> TableRow:
    tokens = text.split()
    if len(tokens) not in (3, 5):
        raise TableFormatError("malformed line: expected 'n h0 h1' or "
                               "'n h0 h1 h2 h3'", line)
    numbers = [_parse_int(token, line) for token in tokens]
    if any(value < 0 for value in numbers[1:]):
        raise TableFormatError("negative count", line)
    return TableRow(*numbers)


def parse_table(text: Union[str, bytes]) -> CohomologyTable:
    """Разбор текста таблицы

    Args:
        text: текст или байты в кодировке UTF-8

    Returns:
        Проверенная таблица

    Raises:
        TableFormatError - при любой ошибке формата (с номером строки,
            если ошибка относится к строке)
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as error:
            raise TableFormatError(f"input is not UTF-8: {error}") from None
    header: Dict[str, int] = {}
    rows: List[TableRow] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" in content:
            _parse_header(content, number, header)
            continue
        row = _parse_row(content, number)
        if rows and row.n == rows[-1].n:
            raise TableFormatError(f"duplicate twist {row.n}", number)
        if rows and row.n < rows[-1].n:
            raise TableFormatError(f"twists must ascend: {row.n} after "
                                   f"{rows[-1].n}", number)
        if rows and row.n != rows[-1].n + 1:
            raise TableFormatError(f"non-contiguous window: {rows[-1].n} "
                                   f"followed by {row.n}", number)
        rows.append(row)
    for key in REQUIRED_KEYS:
        if key not in header:
            raise TableFormatError(f"missing required header {key}=")
    try:
        chern = ChernClasses(header["c1"], header["c2"])
    except DomainError as error:
        raise TableFormatError(str(error)) from None
    return CohomologyTable(chern, rows, alpha=header.get("alpha"),
                           gamma=header.get("gamma"), beta=header.get("beta"))


def serialize_table(table: CohomologyTable) -> str:
    """Запись таблицы в текстовом формате, обратная к :func:`parse_table`"""
    lines = [f"c1={table.chern.c1}", f"c2={table.chern.c2}"]
    for key in ("alpha", "beta", "gamma"):
        value = getattr(table, key)
        if value is not None:
            lines.append(f"{key}={value}")
    for row in table:
        values = [row.n, row.h0, row.h1]
        if row.complete:
            values += [row.h2, row.h3]
        lines.append(" ".join(str(value) for value in values))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DualityConflict:
    """Несовпадение записанного :math:`h^i(E(n))` с
    :math:`h^{3-i}(E(d))` двойственного твиста d"""
    n: int
    index: int
    recorded: int
    dual_value: int

    def __str__(self) -> str:
        return f"h{self.index}(E({self.n})) = {self.recorded} but dual " \
               f"h{3 - self.index} = {self.dual_value}"


def dual_row(table: CohomologyTable, n: int) -> Optional[TableRow]:
    """Строка двойственного твиста или None, если он вне окна"""
    return table.row(serre_dual_twist(table.chern.c1, n))


def fill_by_duality(table: CohomologyTable) -> CohomologyTable:
    """Дополнение :math:`h^2, h^3` по двойственности Серра:
    :math:`h^2(E(n)) = h^1(E(d))`, :math:`h^3(E(n)) = h^0(E(d))`,
    :math:`d = -n - c_1 - 4`

    Уже записанные значения не изменяются, даже если они противоречат
    двойственности (см. :func:`duality_conflicts`).

    Returns:
        Новая таблица
    """
    rows = []
    for row in table:
        dual = dual_row(table, row.n)
        if row.complete or dual is None:
            rows.append(row)
        else:
            rows.append(replace(row, h2=dual.h1, h3=dual.h0))
    return CohomologyTable(table.chern, rows, alpha=table.alpha,
                           gamma=table.gamma, beta=table.beta)


def duality_conflicts(table: CohomologyTable) -> Tuple[DualityConflict, ...]:
    """Все записанные :math:`h^2, h^3`, противоречащие двойственности"""
    conflicts = []
    for row in table:
        dual = dual_row(table, row.n)
        if not row.complete or dual is None:
            continue
        for index, recorded, expected in ((2, row.h2, dual.h1),
                                          (3, row.h3, dual.h0)):
            if recorded != expected:
                conflict = DualityConflict(row.n, index, recorded, expected)
                logger.warning("duality conflict: %s", conflict)
                conflicts.append(conflict)
    return tuple(conflicts)


def duality_outside(table: CohomologyTable) -> Tuple[int, ...]:
    """Твисты, двойственные к которым лежат вне окна"""
    return tuple(row.n for row in table if dual_row(table, row.n) is None)
