"""
Test script to check the successful import of the sdimtools package.

This script performs a simple test to ensure that the sdimtools package can
be imported correctly, together with the subpackages the command line tool
relies on.

Usage:
    To run the test, simply execute this script. If the package imports
    correctly, the message "Package import test passed!" will be printed.
"""

import sdimtools  # This should match the name of your package (in src/sdimtools)
from sdimtools import cli, invariants


def test_package_import():
    """
    Tests whether the sdimtools package can be imported successfully.

    Raises:
        AssertionError: If sdimtools or one of its subpackages is missing.
    """
    assert sdimtools is not None
    assert sdimtools.__version__ == "0.1.0"
    assert callable(cli.main)
    assert invariants is not None


if __name__ == "__main__":
    test_package_import()
    print("Package import test passed!")
