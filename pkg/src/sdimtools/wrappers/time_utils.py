"""
time_utils.py
===============

This module provides a decorator to measure and log the execution time of functions.

Example usage::

    from sdimtools.wrappers import timeit

    @timeit
    def run_suite():
        ...

    run_suite()
    run_suite.last_elapsed   # seconds of the last call
"""

import logging
import time
from functools import wraps

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def timeit(func):
    """
    Decorator that measures the execution time of the decorated function.

    The elapsed time is logged at INFO and kept on the wrapper as ``last_elapsed``.

    :param func: The function to be timed.
    :type func: Callable
    :return: The wrapped function with timing functionality.
    :rtype: Callable
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            wrapper.last_elapsed = time.perf_counter() - start_time
            logging.info(
                "Function '%s' took %.4f seconds", func.__name__, wrapper.last_elapsed
            )

    wrapper.last_elapsed = 0.0
    return wrapper
