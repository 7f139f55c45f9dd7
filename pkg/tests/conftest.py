import hypothesis
import pytest

from rsw.gf import Field

hypothesis.settings.register_profile(
    "default", max_examples=50, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def gf16():
    return Field(4)


@pytest.fixture(scope="session")
def gf64():
    return Field(6)
