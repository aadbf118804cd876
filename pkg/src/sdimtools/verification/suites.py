"""
suites
======

The verification suites. Each suite turns a `VerificationControl` into a list of independent
cases, checks them (optionally on several threads) and reports the first failing case in the
canonical case order.

Classes:
    SuiteReport: Outcome of one suite.

Functions:
    suite_cases: The cases of a suite as (label, check) pairs.
    run_suite: Runs a suite and reports.
    diagrams_in_window: All ∨ subsets of a window.
    hilbert_coefficients: Coefficients of Π_{i=1}^n (1 − x^{2i})^{−1}.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import itertools
import logging
import math
import random
from typing import Callable, Iterator, Optional

import sympy

from ..data_structures.cup_diagram import CompactedDiagram
from ..data_structures.super_weight import BlockId, SuperWeight, validate_weight
from ..invariants.bruhat import ext_self_dims
from ..invariants.covariant import (
    covariant_sdim_oracle,
    hook_condition,
    partitions_of,
    to_highest_weight,
)
from ..invariants.moves import move_sites, relation
from ..invariants.multiplicity import m_closed, sdim, verify_identities
from ..invariants.reduction import kostant_chain, m_oracle
from ..wrappers.time_utils import timeit
from .control import VerificationControl

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)

Check = Callable[[], Optional[str]]


@dataclasses.dataclass(frozen=True)
class SuiteReport:
    """
    Attributes:
        suite (str): Suite name.
        passed (bool): True iff every case passed.
        checked (int): Number of cases run.
        counterexample (str or None): Description of the first failing case.
        elapsed (float): Wall time in seconds.
    """

    suite: str
    passed: bool
    checked: int
    counterexample: Optional[str]
    elapsed: float


def diagrams_in_window(lower: int, upper: int, max_n: int) -> Iterator[CompactedDiagram]:
    """All diagrams with 1 ≤ n ≤ max_n ∨ inside [lower, upper], by n then lexicographically."""
    for n in range(1, max_n + 1):
        for vees in itertools.combinations(range(lower, upper + 1), n):
            yield CompactedDiagram(vees)


def hilbert_coefficients(n: int, j_max: int) -> list[int]:
    """Coefficients of x^0..x^{j_max} in Π_{i=1}^n (1 − x^{2i})^{−1}."""
    x = sympy.Symbol("x")
    generating = sympy.Mul(*[1 / (1 - x ** (2 * i)) for i in range(1, n + 1)])
    series = sympy.series(generating, x, 0, j_max + 1).removeO()
    return [int(series.coeff(x, j)) for j in range(j_max + 1)]


def _relation_check(d: CompactedDiagram) -> Check:
    def check() -> Optional[str]:
        for site in move_sites(d):
            rel = relation(site)
            if not rel.holds(m_closed):
                return f"relation fails at {d}, site {site.i}"
            parity = sum(d.vees) % 2
            for middle in rel.rhs:
                if sum(middle.vees) % 2 == parity:
                    return f"move {d} -> {middle} keeps the parity"
        return None

    return check


def _oracle_check(d: CompactedDiagram) -> Check:
    def check() -> Optional[str]:
        closed, oracle = m_closed(d), m_oracle(d)
        if closed != oracle:
            return f"m_closed({d}) = {closed} but m_oracle = {oracle}"
        if not 1 <= closed <= math.factorial(d.n):
            return f"m({d}) = {closed} is outside [1, {d.n}!]"
        return None

    return check


def _covariant_check(p, m: int, n: int) -> Check:
    def check() -> Optional[str]:
        expected = covariant_sdim_oracle(p, m, n)
        value = sdim(to_highest_weight(p, m, n)).sdim
        if value != expected:
            return f"sdim of {p} for Gl({m}|{n}) is {value}, decomposition gives {expected}"
        return None

    return check


def _hilbert_check(block: BlockId, j_max: int) -> Check:
    def check() -> Optional[str]:
        dims = [profile.dimension for profile in ext_self_dims(block, j_max)]
        expected = hilbert_coefficients(block.n, j_max)
        if dims != expected:
            return f"Ext dimensions {dims} of {block} differ from {expected}"
        return None

    return check


def _berezin_check(w: SuperWeight, k: int) -> Check:
    def check() -> Optional[str]:
        expected = (-1) ** ((k * w.n) % 2)
        value = sdim(w).sdim
        if value != expected:
            return f"sdim(Ber^{k}) of Gl({w.m}|{w.n}) is {value}, expected {expected}"
        return None

    return check


def _chain_check(d: CompactedDiagram) -> Check:
    def check() -> Optional[str]:
        chain = kostant_chain(d)
        if not chain.matches_expected():
            return f"Kostant chain of {d} has unexpected middle sets"
        return None

    return check


def _factorial_check(n: int) -> Check:
    def check() -> Optional[str]:
        d = CompactedDiagram(tuple(range(0, 2 * n, 2)))
        values = {m_closed(d), m_oracle(d)}
        if values != {math.factorial(n)}:
            return f"completely unnested diagram with n = {n} gives {sorted(values)}"
        return None

    return check


def _identity_check(bound: int) -> Check:
    def check() -> Optional[str]:
        report = verify_identities(bound)
        if report.passed:
            return None
        name, arguments = report.counterexample
        return f"identity {name} fails at {arguments}"

    return check


def suite_cases(control: VerificationControl) -> list[tuple[str, Check]]:
    """
    The cases of the selected suite in canonical order.

    Args:
        control (VerificationControl): Suite and bounds.

    Returns:
        list[tuple[str, Check]]: (label, check) pairs; a check returns None on success.
    """
    suite = control.suite
    lower, upper = control.window
    if suite == "relations":
        return [(str(d), _relation_check(d)) for d in diagrams_in_window(lower, upper, control.max_n)]

    if suite == "oracle-vs-closed":
        cases = [
            (str(d), _oracle_check(d))
            for d in diagrams_in_window(lower, upper, control.max_n)
        ]
        rng = random.Random(control.seed)
        positions = range(control.sample_window[0], control.sample_window[1] + 1)
        for _ in range(control.samples):
            d = CompactedDiagram(tuple(rng.sample(positions, control.sample_n)))
            cases.append((str(d), _oracle_check(d)))
        return cases

    if suite == "identities":
        return [(f"bound {control.identity_bound}", _identity_check(control.identity_bound))]

    if suite == "covariant":
        cases = []
        for m, n in control.covariant_shapes:
            for degree in range(control.covariant_degree + 1):
                for p in partitions_of(degree):
                    if hook_condition(p, m, n):
                        cases.append((f"{p} Gl({m}|{n})", _covariant_check(p, m, n)))
        return cases

    if suite == "hilbert":
        cases = []
        for n in range(1, control.max_n + 1):
            for crosses in ((), (1,), (1, 3)):
                block = BlockId(crosses, (), n + len(crosses), n)
                cases.append((f"n = {n}, crosses {crosses}", _hilbert_check(block, control.j_max)))
        return cases

    if suite == "berezin":
        cases = []
        for m in range(1, control.berezin_rank + 1):
            for n in range(1, m + 1):
                for k in range(-control.berezin_power, control.berezin_power + 1):
                    w = validate_weight(m, n, [k] * m + [-k] * n)
                    cases.append((f"Ber^{k} Gl({m}|{n})", _berezin_check(w, k)))
        return cases

    if suite == "algorithm-iv":
        return [
            (str(d), _chain_check(d))
            for n in range(1, control.max_n + 1)
            for a in range(lower, upper - n + 2)
            for d in [CompactedDiagram(tuple(range(a, a + n)))]
        ]

    if suite == "factorial":
        return [(f"n = {n}", _factorial_check(n)) for n in range(1, control.factorial_n + 1)]

    raise ValueError(f"unknown suite '{suite}'")


@timeit
def _run_cases(cases: list[tuple[str, Check]], workers: int) -> list[Optional[str]]:
    if workers == 1:
        return [check() for _, check in cases]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda case: case[1](), cases))


def run_suite(control: VerificationControl) -> SuiteReport:
    """
    Runs the selected suite.

    Args:
        control (VerificationControl): Suite, bounds and worker count.

    Returns:
        SuiteReport: Pass/fail, number of cases, first counterexample and elapsed time.
    """
    cases = suite_cases(control)
    logging.info("Running suite '%s' with %s cases.", control.suite, len(cases))
    outcomes = _run_cases(cases, control.workers)
    failure = next((outcome for outcome in outcomes if outcome is not None), None)
    if failure is not None:
        logging.error("Suite '%s' failed: %s", control.suite, failure)
    return SuiteReport(
        suite=control.suite,
        passed=failure is None,
        checked=len(cases),
        counterexample=failure,
        elapsed=_run_cases.last_elapsed,
    )
