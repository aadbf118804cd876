"""
reduction
=========

The reduction system that expresses the multiplicity of any diagram through fully nested ones.

For a diagram d that is not fully nested, `pivot` picks a site whose Up move reproduces d:

* two or more segments: the start s_2 of the second segment is moved one step left (I);
* one segment with two or more sectors: the start a_2 of the second sector is moved onto the
  end b_1 of the first (II);
* a single sector: the same choice is made inside its interior and the enclosing cups are put
  back (III).

The relation of that site then gives m(d) = 2·m(center) − Σ m(other middles). Fully nested
diagrams have multiplicity one.

Classes:
    Pivot: The chosen site of a diagram.
    ReductionEngine: Memoized evaluation of the relations.
    TraceStep: One relation used by a reduction.
    ReductionTrace: All relations below a weight and the fully nested leaves.
    KostantChain: The moves of a Kostant weight to its next ground state.

Functions:
    pivot: Deterministic site choice.
    m_oracle: Multiplicity through the relations.
    reduce_trace: Derivation of the multiplicity of a weight.
    trace_diagram: `reduce_trace` for a compacted diagram.
    kostant_chain: The chain S^0, …, S^n and Π of a Kostant diagram.
    algorithm_iv: `kostant_chain` of a Kostant weight.
    pi_iterates: Repeated Π steps of a Kostant weight.
"""

from __future__ import annotations

import collections
import dataclasses
import logging
import threading
from typing import Literal, Optional

from ..data_structures.cup_diagram import CompactedDiagram, build, compact
from ..data_structures.super_weight import SuperWeight
from ..errors import FullyNested, NonTermination, NotKostant
from .moves import MoveExpansion, MoveSite, Relation, classify_site, expand, relation

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)

Key = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class Pivot:
    """
    The site chosen to reduce a diagram.

    Attributes:
        algorithm (str): "I", "II" or "III" (III when the choice was made inside a sector).
        depth (int): Number of enclosing cups that were descended through.
        site (MoveSite): The site on the center, classified in the full diagram.
        center (CompactedDiagram): The diagram whose Up move at the site gives the input.
    """

    algorithm: Literal["I", "II", "III"]
    depth: int
    site: MoveSite
    center: CompactedDiagram


def pivot(d: CompactedDiagram) -> Pivot:
    """
    Chooses the reducing site of a diagram that is not fully nested.

    Args:
        d (CompactedDiagram): The diagram to reduce.

    Returns:
        Pivot: Algorithm, descent depth, site and center.

    Raises:
        FullyNested: If d is fully nested.
    """
    current = build(d)
    if current.is_fully_nested():
        logging.error("Diagram %s is fully nested; there is nothing to reduce.", d)
        raise FullyNested(f"diagram {d} is fully nested")

    depth = 0
    while len(current.segments) < 2 and len(current.sectors) < 2:
        current = current.interior(0)
        depth += 1

    if len(current.segments) >= 2:
        source = current.segments[1][0]
        target = source - 1
        algorithm = "I"
    else:
        target = current.sectors[0][1]
        source = current.sectors[1][0]
        algorithm = "II"

    center = d.moved(source, target)
    return Pivot(
        algorithm="III" if depth else algorithm,
        depth=depth,
        site=classify_site(center, target),
        center=center,
    )


def _key(d: CompactedDiagram) -> Key:
    return d.normalized()


class ReductionEngine:
    """
    Evaluates multiplicities through the move relations with a shared memo table.

    The memo maps translation-normalized ∨ tuples to multiplicities. Evaluation is an
    iterative depth-first search; a diagram met again on its own dependency path raises
    `NonTermination`. Writes go through a lock and are idempotent, so one engine can serve
    several threads.

    Example:
        ```python
        engine = ReductionEngine()
        engine.multiplicity(CompactedDiagram((0, 2, 4)))   # 6
        ```
    """

    def __init__(self):
        self._memo: dict[Key, int] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def lookup(self, key: Key) -> Optional[int]:
        with self._lock:
            return self._memo.get(key)

    def _store(self, key: Key, value: int) -> int:
        with self._lock:
            return self._memo.setdefault(key, value)

    def export(self) -> dict[Key, int]:
        """A snapshot of the memo table."""
        with self._lock:
            return dict(self._memo)

    def load(self, table: dict[Key, int]):
        """Adds precomputed entries; entries already present are kept."""
        with self._lock:
            for key, value in table.items():
                self._memo.setdefault(tuple(key), int(value))

    def clear(self):
        with self._lock:
            self._memo.clear()

    @staticmethod
    def dependencies(key: Key) -> Optional[tuple[Pivot, Key, list[Key]]]:
        """
        The pivot of a normalized diagram, the key of its center and the keys of the other
        middle constituents; None for fully nested diagrams.
        """
        d = CompactedDiagram(key)
        if build(d).is_fully_nested():
            return None
        chosen = pivot(d)
        middle = expand(chosen.site).middle
        others = [_key(c.diagram) for c in middle if c.move != "Up"]
        return chosen, _key(chosen.center), others

    def multiplicity(self, d: CompactedDiagram) -> int:
        """
        The multiplicity m(d) obtained from the relations.

        Args:
            d (CompactedDiagram): Any diagram.

        Returns:
            int: m(d) ≥ 1.

        Raises:
            NonTermination: If a diagram depends on itself.
        """
        root = _key(d)
        known = self.lookup(root)
        if known is not None:
            return known

        pending: dict[Key, Optional[tuple[Pivot, Key, list[Key]]]] = {}
        stack = [root]
        on_path = {root}
        while stack:
            top = stack[-1]
            if self.lookup(top) is not None:
                stack.pop()
                on_path.discard(top)
                continue
            if top not in pending:
                pending[top] = self.dependencies(top)
            deps = pending[top]
            if deps is None:
                self._store(top, 1)
                stack.pop()
                on_path.discard(top)
                continue

            _, center, others = deps
            missing = next(
                (k for k in [center, *others] if self.lookup(k) is None), None
            )
            if missing is None:
                value = 2 * self.lookup(center) - sum(self.lookup(k) for k in others)
                self._store(top, value)
                stack.pop()
                on_path.discard(top)
            elif missing in on_path:
                logging.error("Reduction of %s revisits %s.", root, missing)
                raise NonTermination(f"reduction cycle through {missing} from {root}")
            else:
                stack.append(missing)
                on_path.add(missing)

        return self.lookup(root)


_DEFAULT_ENGINE = ReductionEngine()


def default_engine() -> ReductionEngine:
    """The process-wide engine used by `m_oracle`."""
    return _DEFAULT_ENGINE


def m_oracle(d: CompactedDiagram, engine: Optional[ReductionEngine] = None) -> int:
    """
    The multiplicity of a diagram computed through the move relations.

    Args:
        d (CompactedDiagram): Any diagram; the empty diagram gives 1.
        engine (ReductionEngine, optional): Engine whose memo is used. Defaults to the
            shared engine.

    Returns:
        int: m(d).
    """
    return (engine or _DEFAULT_ENGINE).multiplicity(d)


@dataclasses.dataclass(frozen=True)
class TraceStep:
    diagram: CompactedDiagram
    pivot: Pivot
    relation: Relation


@dataclasses.dataclass(frozen=True)
class ReductionTrace:
    """
    The relations used to reduce a weight.

    Attributes:
        root (CompactedDiagram): The normalized diagram of the weight.
        steps (tuple[TraceStep, ...]): One step per reduced diagram, root first.
        leaves (dict): Fully nested diagrams with the integer coefficients of
            m(root) = Σ coefficient · m(leaf).
    """

    root: CompactedDiagram
    steps: tuple[TraceStep, ...]
    leaves: dict

    @property
    def multiplicity(self) -> int:
        """Σ of the leaf coefficients; every leaf has multiplicity one."""
        return sum(self.leaves.values())


def _trace_diagram(root: CompactedDiagram) -> ReductionTrace:
    root_key = _key(root)
    dependencies: dict[Key, Optional[tuple[Pivot, Key, list[Key]]]] = {}
    order: list[Key] = []
    queue = collections.deque([root_key])
    while queue:
        key = queue.popleft()
        if key in dependencies:
            continue
        dependencies[key] = ReductionEngine.dependencies(key)
        order.append(key)
        if dependencies[key] is not None:
            _, center, others = dependencies[key]
            queue.extend([center, *others])

    combinations: dict[Key, collections.Counter] = {}

    def combination(key: Key) -> collections.Counter:
        stack = [key]
        while stack:
            top = stack[-1]
            if top in combinations:
                stack.pop()
                continue
            deps = dependencies[top]
            if deps is None:
                combinations[top] = collections.Counter({top: 1})
                stack.pop()
                continue
            _, center, others = deps
            missing = [k for k in [center, *others] if k not in combinations]
            if missing:
                stack.extend(missing)
                continue
            total = collections.Counter()
            for leaf, coefficient in combinations[center].items():
                total[leaf] += 2 * coefficient
            for other in others:
                for leaf, coefficient in combinations[other].items():
                    total[leaf] -= coefficient
            combinations[top] = total
            stack.pop()
        return combinations[key]

    steps = []
    for key in order:
        deps = dependencies[key]
        if deps is None:
            continue
        chosen = deps[0]
        steps.append(TraceStep(CompactedDiagram(key), chosen, relation(chosen.site)))

    leaves = {
        CompactedDiagram(leaf): coefficient
        for leaf, coefficient in sorted(combination(root_key).items())
        if coefficient
    }
    return ReductionTrace(CompactedDiagram(root_key), tuple(steps), leaves)


def reduce_trace(w: SuperWeight) -> ReductionTrace:
    """
    Records the full derivation of m(w).

    Args:
        w (SuperWeight): A maximal atypical weight.

    Returns:
        ReductionTrace: Steps in breadth-first order from the weight's own diagram and the
        fully nested leaves with their coefficients.

    Raises:
        NotMaximalAtypical: If w carries a circle.
    """
    return _trace_diagram(compact(w))


def trace_diagram(d: CompactedDiagram) -> ReductionTrace:
    """`reduce_trace` for a compacted diagram."""
    return _trace_diagram(d)


@dataclasses.dataclass(frozen=True)
class KostantChain:
    """
    The moves of a Kostant diagram with ∨ on [a, a + n − 1].

    Attributes:
        chain (tuple[CompactedDiagram, ...]): S^0, …, S^k with the rightmost ∨ of S^j at
            a + n − 1 + j.
        pi (CompactedDiagram): The interval shifted one step left.
        expansions (tuple[MoveExpansion, ...]): The expansion of S^j at its moved ∨.
    """

    chain: tuple[CompactedDiagram, ...]
    pi: CompactedDiagram
    expansions: tuple[MoveExpansion, ...]

    @property
    def weights(self) -> tuple[SuperWeight, ...]:
        return tuple(d.to_weight() for d in self.chain)

    @property
    def pi_weight(self) -> SuperWeight:
        return self.pi.to_weight()

    def expected_middle(self, j: int) -> set[tuple[int, ...]]:
        """{S^{j+1}, S^{j−1}} for inner steps; {S^n, Π, S^{n−2}} for the last one."""
        n = self.pi.n
        wanted = {self.chain[j + 1].vees}
        if j >= 1:
            wanted.add(self.chain[j - 1].vees)
        if j == n - 1:
            wanted.add(self.pi.vees)
        return wanted

    def matches_expected(self) -> bool:
        """True iff every expansion has exactly the expected middle set."""
        return all(
            {c.diagram.vees for c in expansion.middle} == self.expected_middle(j)
            and len(expansion.middle) == len(self.expected_middle(j))
            for j, expansion in enumerate(self.expansions)
        )


def _kostant_interval(d: CompactedDiagram) -> tuple[int, int]:
    if d.n == 0 or d.vees[-1] - d.vees[0] != d.n - 1:
        logging.error("Diagram %s is not Kostant.", d)
        raise NotKostant(f"diagram {d} is not a Kostant diagram")
    return d.vees[0], d.n


def kostant_chain(d: CompactedDiagram, steps: Optional[int] = None) -> KostantChain:
    """
    Moves the rightmost ∨ of a Kostant diagram step by step to the right.

    Args:
        d (CompactedDiagram): ∨ positions forming an interval [a, a + n − 1], n ≥ 1.
        steps (int, optional): Number of moves, 0 ≤ steps ≤ n. Defaults to n.

    Returns:
        KostantChain: S^0, …, S^steps, Π and the expansions of S^0, …, S^{steps−1}.

    Raises:
        NotKostant: If the ∨ positions are not an interval.
        ValueError: If steps is out of range.
    """
    a, n = _kostant_interval(d)
    steps = n if steps is None else steps
    if not 0 <= steps <= n:
        raise ValueError(f"steps must lie in [0, {n}], got {steps}")
    top = a + n - 1
    chain = tuple(d.moved(top, top + j) if j else d for j in range(steps + 1))
    pi = d.with_vees(range(a - 1, a + n - 1))
    expansions = tuple(
        expand(classify_site(chain[j], top + j)) for j in range(steps)
    )
    return KostantChain(chain, pi, expansions)


def algorithm_iv(w: SuperWeight, steps: Optional[int] = None) -> KostantChain:
    """
    The chain of a Kostant weight towards the next ground state.

    Args:
        w (SuperWeight): A maximal atypical Kostant weight.
        steps (int, optional): Number of moves. Defaults to n.

    Returns:
        KostantChain: S^0..S^steps, Π and the expansions at each step.

    Raises:
        NotMaximalAtypical: If w carries a circle.
        NotKostant: If w is not Kostant.
    """
    return kostant_chain(compact(w), steps)


def pi_iterates(w: SuperWeight, count: int) -> list[SuperWeight]:
    """w, Π(w), Π²(w), …: count + 1 weights, each interval shifted one step left."""
    d = compact(w)
    _kostant_interval(d)
    result = [w]
    for _ in range(count):
        d = d.with_vees(x - 1 for x in d.vees)
        result.append(d.to_weight())
    return result

