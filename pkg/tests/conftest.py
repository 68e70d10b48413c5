import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from wildrep.errors import SingularModelError
from wildrep.weierstrass import WeierstrassModel, tate_algorithm

TESTS_DIR = Path(__file__).resolve().parent
FIXTURES_DIR = TESTS_DIR / 'fixtures'


def model(*ainvs, n=1) -> WeierstrassModel:
    return WeierstrassModel.from_ainvs(ainvs, residue_degree=n)


def _load_regression():
    with open(FIXTURES_DIR / 'tate_regression.json') as fd:
        return json.load(fd)


TATE_REGRESSION = _load_regression()


@pytest.fixture(params=TATE_REGRESSION, ids=[r['id'] for r in TATE_REGRESSION])
def regression_case(request):
    return request.param


@pytest.fixture
def wild_model():
    """y² = x³ + 9: type IV, v(Δ) = 7, j = 0."""
    return model(0, 0, 0, 0, 9)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope='session')
def additive_corpus():
    """
    Integral models y² = x³ + a₂x² + a₄x + a₆ with 3 | a₂, a₄, which all
    have additive reduction; kept when potentially good.
    """
    curves = []
    for a2 in range(-9, 10, 3):
        for a4 in range(-18, 19, 3):
            for a6 in range(-20, 21):
                try:
                    m = model(0, a2, 0, a4, a6)
                except SingularModelError:
                    continue
                ld = tate_algorithm(m)
                if ld.potentially_good:
                    curves.append((m, ld))
    return curves
