import pytest
from pydantic import ValidationError

from wildrep.settings import _Settings, settings


def test_defaults():
    assert settings.APP_TITLE == 'wildrep'
    assert settings.MAX_FIELD_DEGREE == 16
    assert settings.MAX_SYS_DEGREE == 5


def test_from_environ(monkeypatch):
    monkeypatch.setenv('MAX_COUNT_DEGREE', '6')
    assert _Settings().MAX_COUNT_DEGREE == 6


def test_positive_bounds():
    with pytest.raises(ValidationError):
        _Settings(N_WORKERS=0)


def test_immutable():
    with pytest.raises(TypeError):
        settings.MAX_SYS_DEGREE = 7
