ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, (ok, detail) in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
