"""
Модуль для тестирования командной строки

Классы:
    TestReport - подкоманда report
    TestVerify - подкоманда verify
    TestOtherCommands - identities, sweep и fixtures
    TestArguments - ошибки в аргументах и формат вывода
"""
import io
import logging
import pytest
from addons.cli import EXIT_ERROR, EXIT_OK, EXIT_SYNTAX, run
from addons.fixtures import FIXTURES_DIR

TWO_CONICS = str(FIXTURES_DIR / "two_conics.tbl")


@pytest.fixture(autouse=True)
def reset_logging():
    """Командная строка перенастраивает корневой журнал"""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(logging.WARNING)


def _run(argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(argv, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestReport:
    """Класс для тестирования подкоманды report

    Методы:
        test_report()

        test_inapplicable()

        test_split()
    """
    def test_report(self):
        """Отчёт о двух непересекающихся кониках"""
        code, out, err = _run(["report", "--c1", "-1", "--c2", "2",
                               "--alpha", "1", "--gamma", "2"])
        assert code == EXIT_OK
        assert err == ""
        lines = out.splitlines()
        for line in ("c1=-1", "c2=2", "alpha=1", "gamma=2",
                     "stability=stable", "delta=2", "zeta=1 (integer)",
                     "bar_alpha=2", "forced=-1..1", "gamma_bound=0",
                     "our_bound=1", "verdict=better",
                     "lower_bound_instanton=0", "lower_bound_general=-1"):
            assert line in lines
        assert lines[0] == "c1=-1"

    def test_inapplicable(self):
        """Ни одно утверждение не применимо"""
        code, out, err = _run(["report", "--c1", "0", "--c2", "-5",
                               "--alpha", "1"])
        assert code == EXIT_ERROR
        assert out == ""
        assert "theorem inapplicable: requires c2 > 0 or non-stability" \
            in err

    def test_split(self):
        """δ = 0: расслоение расщепимо"""
        code, _, err = _run(["report", "--c1", "0", "--c2", "-1",
                             "--alpha", "1"])
        assert code == EXIT_ERROR
        assert "delta = 0" in err


class TestVerify:
    """Класс для тестирования подкоманды verify

    Методы:
        test_pass()

        test_mutated(tmp_path)

        test_missing_file(tmp_path)

        test_malformed(tmp_path)
    """
    def test_pass(self):
        """Таблица из каталога fixtures"""
        code, out, err = _run(["verify", TWO_CONICS, "--alpha", "1"])
        assert code == EXIT_OK
        assert err == ""
        lines = out.splitlines()
        assert lines[0] == "CHI=pass"
        assert any(line.startswith("NONSTABLE-H0=skipped") for line in lines)
        assert lines[-1] == "result=pass"

    def test_mutated(self, tmp_path):
        """Обнуление вынужденного значения

        :param tmp_path: временный каталог
        """
        text = (FIXTURES_DIR / "two_conics.tbl").read_text(encoding="utf-8")
        lines = [("0 0 0" if line.split()[:1] == ["0"] else line)
                 for line in text.splitlines()]
        path = tmp_path / "mutated.tbl"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, out, err = _run(["verify", str(path)])
        assert code == EXIT_ERROR
        assert "FORCED=fail" in out.splitlines()
        assert out.splitlines()[-1] == "result=fail"
        assert "FORCED: n=0: h1 = 0 but forced" in err

    def test_missing_file(self, tmp_path):
        """Файл не существует

        :param tmp_path: временный каталог
        """
        code, out, err = _run(["verify", str(tmp_path / "absent.tbl")])
        assert code == EXIT_ERROR
        assert out == ""
        assert err.startswith("error: ")

    def test_malformed(self, tmp_path):
        """Ошибка формата с номером строки

        :param tmp_path: временный каталог
        """
        path = tmp_path / "bad.tbl"
        path.write_text("c1=0\nc2=2\n0 0\n", encoding="utf-8")
        code, _, err = _run(["verify", str(path)])
        assert code == EXIT_ERROR
        assert "error: line 3: malformed line" in err


class TestOtherCommands:
    """Класс для тестирования остальных подкоманд

    Методы:
        test_identities()

        test_sweep()

        test_fixtures_list()

        test_fixtures_run()

        test_fixtures_dump()

        test_fixtures_unknown()
    """
    def test_identities(self):
        """Тождества выполняются на небольшом диапазоне"""
        code, out, _ = _run(["identities", "--n-min", "-5", "--n-max", "5",
                             "--alpha-min", "-3", "--alpha-max", "0"])
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "result=pass"
        assert all(" checked=" in line for line in out.splitlines()[:-1])

    def test_sweep(self):
        """Одна запись на каждое значение c2"""
        code, out, _ = _run(["sweep", "--c1", "0", "--c2-min", "0",
                             "--c2-max", "4"])
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 5
        assert lines[4] == "c2=4 zeta=sqrt(13)-2 bar_alpha=2 tau_floor=3 " \
                           "forced_max=1"

    def test_fixtures_list(self):
        """Список примеров"""
        code, out, _ = _run(["fixtures"])
        assert code == EXIT_OK
        assert len(out.splitlines()) == 12
        assert out.startswith("stable-c2-2=")

    def test_fixtures_run(self):
        """Все примеры проходят"""
        code, out, err = _run(["fixtures", "--run"])
        assert code == EXIT_OK
        assert err == ""
        assert "two-conics=pass" in out.splitlines()
        assert out.splitlines()[-1] == "result=pass"

    def test_fixtures_dump(self):
        """Таблица примера в формате файла"""
        code, out, _ = _run(["fixtures", "--dump", "two-conics"])
        assert code == EXIT_OK
        assert out.startswith("c1=-1\nc2=2\n")
        assert "\n1 1 1\n" in out

    def test_fixtures_unknown(self):
        """Неизвестный пример"""
        code, out, err = _run(["fixtures", "--dump", "ex99"])
        assert code == EXIT_ERROR
        assert out == ""
        assert err.startswith("error: ")


class TestArguments:
    """Класс для тестирования разбора аргументов

    Методы:
        test_syntax(list, capsys)

        test_help(capsys)

        test_plain()

        test_deterministic()
    """
    @pytest.mark.parametrize(
        "argv", [
            [],
            ["report", "--c1", "0"],
            ["report", "--c1", "0", "--c2", "4", "--unknown"],
            ["report", "--c1", "zero", "--c2", "4"],
            ["sweep", "--c1", "0", "--c2-min", "0", "--c2-max", "1",
             "--format", "json"],
            ["launch"]
        ]
    )
    def test_syntax(self, argv: list, capsys):
        """Ошибки в аргументах дают код 2, сообщение argparse попадает
        в переданный поток ошибок

        :param argv: аргументы
        """
        code, out, err = _run(argv)
        assert code == EXIT_SYNTAX
        assert out == ""
        assert "usage: nonvanishing" in err
        assert capsys.readouterr().err == ""

    def test_help(self, capsys):
        """Справка пишется в переданный поток вывода"""
        code, out, err = _run(["report", "--help"])
        assert code == EXIT_OK
        assert "--c1" in out
        assert err == ""
        assert capsys.readouterr().out == ""

    def test_plain(self):
        """Формат ``key: value``"""
        code, out, _ = _run(["report", "--c1", "0", "--c2", "4",
                             "--alpha", "1", "--format", "plain"])
        assert code == EXIT_OK
        assert out.splitlines()[0] == "c1: 0"
        assert "stability: stable" in out.splitlines()

    def test_deterministic(self):
        """Одинаковые аргументы дают одинаковый вывод"""
        argv = ["report", "--c1", "0", "--c2", "9", "--alpha", "-3",
                "--gamma", "14"]
        assert _run(argv) == _run(argv)
