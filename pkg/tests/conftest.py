import pytest

from qsiegel.ring import GeneratorSet


@pytest.fixture(scope="session")
def gens12():
    """One shared build of every generator at grade precision 12."""
    return GeneratorSet.build(12)
