"""Shared fixtures: the builtin catalog over Q and F101, seeded generators."""
import os
import sys

# Add parent directory to path so we can import qhopf
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np
import pytest
from loguru import logger

from qhopf.catalog.builtins import builtin
from qhopf.core.fields import Field

# quiet during tests; pytest's -s still shows warnings
logger.remove()
logger.add(sys.stderr, level="WARNING")

QT_BUILTINS = ("kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2_Ri", "dZ2")
ALL_BUILTINS = ("kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2", "H2_Ri", "dZ2")
TRIANGULAR = ("kZ2", "kZ2_Rt", "sweedler4_Rtri")

# every builtin over Q and F101 (H2_Ri only exists over F101)
BUILTIN_FIELDS = [(name, field) for name in ALL_BUILTINS for field in ("q", "fp:101")
                  if not (name == "H2_Ri" and field == "q")]


@pytest.fixture
def Q():
    return Field.rationals()


@pytest.fixture
def F101():
    return Field.prime(101)


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture(params=BUILTIN_FIELDS, ids=lambda p: f"{p[0]}-{p[1]}")
def any_builtin(request):
    name, field = request.param
    return builtin(name, field)


@pytest.fixture(params=[n for n in BUILTIN_FIELDS if n[0] in QT_BUILTINS], ids=lambda p: f"{p[0]}-{p[1]}")
def qt_builtin(request):
    name, field = request.param
    return builtin(name, field)


@pytest.fixture
def kz2():
    return builtin("kZ2")


@pytest.fixture
def kz2_rt():
    return builtin("kZ2_Rt")


@pytest.fixture
def sweedler():
    return builtin("sweedler4_Rtri")


@pytest.fixture
def h2():
    return builtin("H2")


@pytest.fixture
def h2_ri():
    return builtin("H2_Ri")


@pytest.fixture
def dz2():
    return builtin("dZ2")
