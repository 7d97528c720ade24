import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance criteria lines (captured during the run) at the end."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    timings = getattr(mod, "TIMINGS", {})
    for name, secs in timings.items():
        terminalreporter.write_line(f"  criterion 9 timing: {name}: {secs:.2f} s")
