"""
errors
======

Exception types raised by sdimtools.

All domain errors derive from :class:`SdimError`, which is a ``ValueError``, so
code that guards calls with ``except ValueError`` keeps working.
"""

from typing import Optional


class SdimError(ValueError):
    """Base class of every domain error raised by the package."""


class BadShape(SdimError):
    """The (m, n) shape or the length of a weight vector is invalid."""


class DominanceViolation(SdimError):
    """A weight vector is not dominant.

    Attributes:
        index (int): 1-based index i with λ_i < λ_{i+1} inside one of the two chains.
    """

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"dominance violated at index {index}")


class CardinalityMismatch(SdimError):
    """A labeling does not have |crosses| + |vees| = m and |circles| + |vees| = n."""


class NotMaximalAtypical(SdimError):
    """An operation that needs a maximal atypical weight got another one."""


class NotMaximalAtypicalBlock(SdimError):
    """An operation that needs a maximal atypical block got one with circles."""


class DifferentBlocks(SdimError):
    """Two weights that have to share a block do not."""


class Incomparable(SdimError):
    """Two weights are not comparable in the Bruhat order."""


class NotKostant(SdimError):
    """A weight whose labeling contains the pattern ∨∧∨∧."""


class BadIndex(SdimError):
    """A sector index or a move site is out of range."""


class FullyNested(SdimError):
    """A reduction step was requested for a completely nested cup diagram."""


class NonTermination(SdimError):
    """The reduction engine revisited a diagram on its own evaluation path."""


class NonDominant(SdimError):
    """A vector handed to the Weyl dimension formula is not weakly decreasing."""


class HookViolation(SdimError):
    """A partition violates the hook condition λ_{m+1} ≤ n."""


class ParseError(SdimError):
    """Text input could not be parsed.

    Attributes:
        position (int or None): 0-based character offset of the problem.
    """

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
