import pathlib

import pytest

import trustrel as tr

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]
FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def catalog():
    return tr.default_catalog()


@pytest.fixture(scope="session")
def usa_assessment():
    return tr.load_assessment(FIXTURES / "usa_gbr_2001_2005.json")


@pytest.fixture(scope="session")
def rival_assessment():
    return tr.load_assessment(FIXTURES / "rival_pair_1950s.json")


@pytest.fixture(scope="session")
def septuple_bands():
    return tr.load_band_table(FIXTURES / "septuple_bands.json")


@pytest.fixture(scope="session")
def case_weights():
    return tr.WeightVector(0.40, 0.20, 0.40)


@pytest.fixture(scope="session")
def generic_weights():
    return tr.WeightVector(0.45, 0.10, 0.45)
