import pytest

from starsym.util.logger import set_logging


@pytest.fixture(autouse=True)
def _reset_logging():
    """Point the console sink back at the session stream once capsys is gone"""
    yield
    set_logging(silent=False, debug=False)
