"""
Точка входа командной строки: ``python main.py <подкоманда> ...``
"""
from addons.cli import run, run_script


def main():
    """Запуск командной строки с аргументами процесса"""
    run_script(run)


if __name__ == "__main__":
    main()
