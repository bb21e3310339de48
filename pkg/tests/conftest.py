"""Session setup: the fixture self-test must pass before anything else runs."""

import pytest

from kwl.fixtures import verify_fixtures


@pytest.fixture(scope="session", autouse=True)
def fixture_claims():
    """Checked textual claims about the bundled models; aborts the run on failure."""
    return verify_fixtures()
