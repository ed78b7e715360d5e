import os

from hypothesis import HealthCheck, settings

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def pytest_terminal_summary(terminalreporter):
    import sys
    for mod in list(sys.modules.values()):
        lines = getattr(mod, "ACCEPTANCE_RESULTS", None)
        if lines:
            terminalreporter.section("acceptance criteria")
            for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
                terminalreporter.write_line(line)
            break
