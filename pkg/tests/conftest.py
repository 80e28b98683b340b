from pathlib import Path

import pytest

from dlkit.parser import parse_ontology

ROOT = Path(__file__).resolve().parents[1]
ONTOLOGIES = ROOT / "ontologies"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def load():
    def _load(name):
        return parse_ontology((ONTOLOGIES / name).read_text(encoding="utf-8"))

    return _load


def pytest_terminal_summary(terminalreporter):
    acceptance = __import__("sys").modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for row in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.format_result(*row))
