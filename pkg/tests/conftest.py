import numpy as np
import pytest

LAMBDA_GRID = [0.5, 0.8, 1.25, float(np.sqrt(2)), 2.0, 3.0]


@pytest.fixture(params=LAMBDA_GRID, ids=lambda v: f"lam={v:g}")
def lam(request):
    return request.param
