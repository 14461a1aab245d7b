import numpy as np
import pytest

from netstab import fixture_path, load_scale_matrix


@pytest.fixture(scope="session")
def uk2010_scale() -> np.ndarray:
    return load_scale_matrix(fixture_path("uk2010"))
