import sys
from pathlib import Path

# make helpers.py importable regardless of the pytest import mode
sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Always print one line per acceptance criterion, even under capture."""
    from acceptance_report import NOTES, RESULTS

    if not RESULTS and not NOTES:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, status, seconds in sorted(RESULTS):
        terminalreporter.write_line(
            f"acceptance {num} [{name}]: {status} ({seconds:.2f}s)"
        )
    for line in NOTES:
        terminalreporter.write_line(line)
