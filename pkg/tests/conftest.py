import numpy as np
import pytest

import semidw as sd

# the worked 2x2 instance used throughout: A = diag(1,2) with a nilpotent X
# and a rank-one projection-like Y
X_MAT = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
Y_MAT = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)


@pytest.fixture(scope="session")
def id2():
    return sd.build_metric(np.eye(2))


@pytest.fixture(scope="session")
def diag12():
    return sd.build_metric(np.diag([1.0, 2.0]))


@pytest.fixture(scope="session")
def diag10():
    return sd.build_metric(np.diag([1.0, 0.0]))
