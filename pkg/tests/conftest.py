"""Prints a one-line verdict per acceptance criterion after the run."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::")[-1].replace("test_", "")
            verdict = "PASS" if status == "passed" else "FAIL"
            # keep the worst verdict if a criterion somehow reports twice
            if outcomes.get(name) != "FAIL":
                outcomes[name] = verdict
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(outcomes, key=lambda s: int(s.split("_")[1])):
        terminalreporter.write_line(f"ACCEPTANCE {name.replace('_', ' ')}: {outcomes[name]}")
