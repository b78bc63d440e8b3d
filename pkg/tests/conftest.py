import os
import re
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

import corpus  # noqa: E402

settings.register_profile("ci", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("ci")


def pytest_terminal_summary(terminalreporter):
    lines = corpus.ACCEPTANCE_LINES
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(re.search(r"criterion (\d+)", s).group(1))):
            terminalreporter.write_line(line)
