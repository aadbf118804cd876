"""
verification - configurable checks of the closed formulas against independent oracles.
"""
from .control import SUITES, VerificationControl
from .suites import SuiteReport, run_suite
