"""
wrappers
========

Function decorators.

Modules:
--------

- :mod:`time_utils` – Contains the ``timeit`` decorator.
"""
from .time_utils import timeit
