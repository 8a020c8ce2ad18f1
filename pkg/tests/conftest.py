import numpy as np
import pytest

import ginipca as gp


@pytest.fixture
def cars():
    return gp.cars_dataset()


@pytest.fixture
def rho_strong():
    """Four strongly and positively correlated variables."""
    return np.array(
        [
            [1.0, 0.8, 0.9, 0.7],
            [0.8, 1.0, 0.8, 0.75],
            [0.9, 0.8, 1.0, 0.6],
            [0.7, 0.75, 0.6, 1.0],
        ]
    )


@pytest.fixture
def rho_mixed():
    """Four variables with mixed signs and a near-singular pair."""
    return np.array(
        [
            [1.0, -0.5, 0.25, 0.5],
            [-0.5, 1.0, -0.9, 0.0],
            [0.25, -0.9, 1.0, -0.25],
            [0.5, 0.0, -0.25, 1.0],
        ]
    )
