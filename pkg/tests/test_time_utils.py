import logging

import pytest

from sdimtools.wrappers import timeit


def test_timeit_logs_and_records(caplog):
    @timeit
    def add(a, b):
        return a + b

    with caplog.at_level(logging.INFO):
        assert add(2, 3) == 5
    assert "Function 'add' took" in caplog.text
    assert add.last_elapsed >= 0.0
    assert add.__name__ == "add"


def test_timeit_records_failures():
    @timeit
    def broken():
        raise RuntimeError("boom")

    broken.last_elapsed = -1.0
    with pytest.raises(RuntimeError):
        broken()
    assert broken.last_elapsed >= 0.0
