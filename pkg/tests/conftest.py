"""Shared pytest wiring: collect acceptance verdicts and print them once,
one line per criterion, in the terminal summary (visible under capture)."""

ACCEPTANCE_VERDICTS = []


def record_acceptance(num: int, label: str, ok: bool) -> None:
    ACCEPTANCE_VERDICTS.append((num, label, ok))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, ok in sorted(ACCEPTANCE_VERDICTS):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num}: {label}: {verdict}")
