import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA: dict[str, str] = {}


def record(name: str, ok: bool, detail: str) -> None:
    CRITERIA[name] = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for key in sorted(CRITERIA, key=lambda k: int(k[1:].split()[0])):
            terminalreporter.write_line(CRITERIA[key])
