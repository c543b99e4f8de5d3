from pathlib import Path

import numpy as np
import pytest

from vclab.pointsets import PointSet

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"

# fixed general-position planar sets (checked by the PointSet constructor)
GP8 = PointSet(
    points=(
        (0.3517, -0.5714), (-0.3811, 0.5989), (0.9916, -0.7155), (-0.8425, -0.6384),
        (-0.2807, -0.6608), (0.1775, 0.2336), (-0.7892, 0.1315), (-0.9907, -0.0698),
    ),
    general_position=True,
)

GP6 = PointSet(
    points=(
        (0.5719, 0.1023), (-0.5122, -0.3311), (-0.3626, -0.2197),
        (0.6026, -0.8184), (-0.2528, 0.5826), (0.5173, 0.208),
    ),
    general_position=True,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def config_dir():
    return CONFIG_DIR
