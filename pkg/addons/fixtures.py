"""
Встроенные примеры расслоений: таблицы когомологий из каталога
``fixtures`` и профили без таблиц с ожидаемыми значениями границ
"""
from functools import lru_cache
from pathlib import Path
from typing import Optional, Tuple
from dataclasses import dataclass
from utilities.bundle import BundleProfile
from utilities.cohomology import CohomologyTable
from utilities.quadratic import DomainError
from nonvanishing.theorems import Verdict, forced_nonvanishing
from addons.tables import parse_table
from addons.verification import (CheckResult, CheckStatus, profile_from_table,
                                 verify_table)

#: Каталог с файлами таблиц
FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@dataclass(frozen=True)
class Fixture:
    """
    Пример расслоения.

    annotations - известные из вычислений значения, которые не выводятся
    формулами: пары (n, True), если :math:`h^1(E(n)) \\ne 0`, и (n, False),
    если :math:`h^1(E(n)) = 0`.
    """
    name: str
    description: str
    profile: BundleProfile
    expected_max: int
    expected_twists: Tuple[int, ...] = ()
    table: Optional[CohomologyTable] = None
    annotations: Tuple[Tuple[int, bool], ...] = ()
    expected_verdict: Optional[Verdict] = None


def load_table(file_name: str) -> CohomologyTable:
    """Таблица из каталога fixtures"""
    return parse_table((FIXTURES_DIR / file_name).read_bytes())


def _from_table(name: str, description: str, file_name: str,
                expected_max: int, **kwargs) -> Fixture:
    table = load_table(file_name)
    return Fixture(name, description, profile_from_table(table),
                   expected_max, table=table, **kwargs)


@lru_cache(maxsize=None)
def builtin_fixtures() -> Tuple[Fixture, ...]:
    """Все встроенные примеры"""
    return (
        Fixture("stable-c2-2", "stable, c1 = 0, c2 = 2",
                BundleProfile.of(0, 2, alpha=1), 0, (-1, 0),
                annotations=((0, True), (1, False))),
        _from_table("two-conics", "stable, c1 = -1, c2 = 2, two disjoint "
                    "conics", "two_conics.tbl", 1, expected_twists=(-1, 0, 1),
                    expected_verdict=Verdict.BETTER),
        _from_table("two-elliptic-quartics", "stable, c1 = 0, c2 = 4, two "
                    "disjoint elliptic quartics", "two_elliptic_quartics.tbl",
                    1, expected_twists=(1,), expected_verdict=Verdict.BETTER),
        _from_table("cubic-and-quintic", "stable, c1 = 0, c2 = 4, elliptic "
                    "cubic and elliptic quintic", "cubic_and_quintic.tbl", 1,
                    expected_twists=(1,), expected_verdict=Verdict.BETTER),
        _from_table("line-and-double-conic", "stable, c1 = 0, c2 = 4, line "
                    "and double conic", "line_and_double_conic.tbl", 1,
                    expected_twists=(1,), expected_verdict=Verdict.BETTER),
        Fixture("natural-cohomology", "stable with natural cohomology, "
                "c1 = 0, c2 = 27, alpha = beta = gamma = bar_alpha = 8",
                BundleProfile.of(0, 27, alpha=8, beta=8, gamma=8), 7, (7,),
                expected_verdict=Verdict.BETTER),
        Fixture("nonstable-c2-9", "non-stable, c1 = 0, c2 = 9, alpha = -3, "
                "delta = 18", BundleProfile.of(0, 9, alpha=-3, gamma=9), 12,
                (8, 12), expected_verdict=Verdict.BETTER),
        Fixture("semistable-c2-3", "strictly semistable, c1 = 0, c2 = 3",
                BundleProfile.of(0, 3, alpha=0, beta=3, gamma=3), 2, (2,),
                annotations=((3, False),), expected_verdict=Verdict.BETTER),
        Fixture("stable-c2-47", "stable, c1 = 0, c2 = 47, alpha = 1",
                BundleProfile.of(0, 47, alpha=1, gamma=9), 9, (9,),
                annotations=((34, True), (35, False)),
                expected_verdict=Verdict.BETTER),
        Fixture("stable-c2-20", "stable, c1 = 0, c2 = 20, alpha = 2",
                BundleProfile.of(0, 20, alpha=2, gamma=10), 5, (5,),
                expected_verdict=Verdict.WORSE),
        Fixture("nonstable-c2-0", "non-stable, c1 = c2 = 0, alpha = -4, "
                "delta = 16", BundleProfile.of(0, 0, alpha=-4, gamma=12), 13,
                (13,), expected_verdict=Verdict.BETTER),
        _from_table("semistable-c2-4", "strictly semistable, c1 = 0, c2 = 4",
                    "semistable_c2_4.tbl", 2, expected_twists=(2,)),
    )


def fixture_by_name(name: str) -> Fixture:
    """Пример по имени

    Raises:
        KeyError - если примера с таким именем нет
    """
    for fixture in builtin_fixtures():
        if fixture.name == name:
            return fixture
    raise KeyError(f"unknown fixture {name!r}")


def _check_expected(fixture: Fixture) -> CheckResult:
    try:
        report = forced_nonvanishing(fixture.profile)
    except DomainError as error:
        return CheckResult("EXPECTED", CheckStatus.FAIL, (str(error),))
    failures = []
    if report.forced_max != fixture.expected_max:
        failures.append(f"forced max {report.forced_max} != "
                        f"{fixture.expected_max}")
    missing = sorted(set(fixture.expected_twists) - set(report.forced_twists))
    if missing:
        failures.append(f"twists not forced: {missing}")
    if fixture.expected_verdict is not None:
        verdict = report.comparison.verdict if report.comparison else None
        if verdict is not fixture.expected_verdict:
            failures.append(f"verdict {verdict} != "
                            f"{fixture.expected_verdict.value}")
    status = CheckStatus.FAIL if failures else CheckStatus.PASS
    return CheckResult("EXPECTED", status, tuple(failures) + (
        f"forced={report.forced_interval[0]}..{report.forced_max}",))


def _check_annotations(fixture: Fixture) -> CheckResult:
    if not fixture.annotations:
        return CheckResult("ANNOTATIONS", CheckStatus.SKIPPED,
                           reason="no annotations")
    forced = set(forced_nonvanishing(fixture.profile).forced_twists)
    failures, details = [], []
    for n, nonzero in fixture.annotations:
        if nonzero:
            details.append(f"n={n}: h1 != 0 recorded (not derived)")
        elif n in forced:
            failures.append(f"n={n}: recorded h1 = 0 but forced")
        else:
            details.append(f"n={n}: h1 = 0 recorded, not forced")
    status = CheckStatus.FAIL if failures else CheckStatus.PASS
    return CheckResult("ANNOTATIONS", status, tuple(failures + details))


def run_fixture(fixture: Fixture) -> Tuple[CheckResult, ...]:
    """Проверка примера: таблица (если есть), ожидаемые границы и
    известные значения"""
    results = ()
    if fixture.table is not None:
        results = verify_table(fixture.table, fixture.profile)
    return results + (_check_expected(fixture), _check_annotations(fixture))
