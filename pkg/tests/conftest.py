import functools

import pytest

from gvcat.corpus import CORPUS, load_bundled


@functools.lru_cache(maxsize=None)
def bundled(name):
    return load_bundled(name)


@pytest.fixture(params=list(CORPUS))
def corpus_file(request):
    return request.param, bundled(request.param)


@pytest.fixture(params=[n for n in CORPUS if bundled(n).braiding is not None])
def braided_file(request):
    return request.param, bundled(request.param)


# acceptance criterion id → (passed, title, seconds, budget); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, title, secs, budget = ACCEPTANCE[key]
        terminalreporter.write_line(
            f"AC{key:<2} {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f}s / {budget}s)")
