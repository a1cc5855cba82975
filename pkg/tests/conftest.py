import pytest

from morsepdm import REGISTRY

MOLECULE_NAMES = tuple(sorted(REGISTRY))


@pytest.fixture(params=MOLECULE_NAMES)
def molecule(request):
    return REGISTRY[request.param]
