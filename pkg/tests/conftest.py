import pytest

from ccl import classify_eca


@pytest.fixture(scope="session")
def eca_report_200():
    """Full 256-rule classification at t=200, shared by the tests that read
    cluster memberships and orderings off it."""
    return classify_eca(200, threads=4)
