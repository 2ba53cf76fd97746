import pytest

from fracgreen import distributed_order as do

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def two_atoms():
    return do.two_atoms(0.25, 0.5, 0.75, 0.5)


@pytest.fixture(autouse=True)
def _fresh_phi_cache():
    yield
    do.clear_cache()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
