import os
import sys

import pytest
from hypothesis import HealthCheck, settings

# make `import cyclopoint` work without installing
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("quick", deadline=None, max_examples=15)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []
TIMINGS = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def classification():
    """The curve-solver classification; takes tens of seconds, so computed once."""
    import time
    from cyclopoint.metallic import classify_metallic
    t = time.time()
    out = classify_metallic()
    TIMINGS["classify"] = time.time() - t
    return out
