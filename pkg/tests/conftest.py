from pathlib import Path

import pytest

from shopfront.instance_io import load_instance_file
from shopfront.model import ObjectiveSpec

from helpers import build_t2

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def t2():
    return build_t2()


@pytest.fixture(scope="session")
def braid3():
    return load_instance_file(DATA_DIR / "braid3.json")


@pytest.fixture
def spec_ct():
    return ObjectiveSpec.parse("cmax,tmax")


@pytest.fixture
def spec_all():
    return ObjectiveSpec.parse("cmax,csum,tmax,u")
