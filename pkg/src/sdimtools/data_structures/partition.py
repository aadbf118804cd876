"""
partition
=========

Defines the `Partition` class used for covariant representations {λ} = Schur_λ(k^{m|n})
and for the Gl(m−n) representation ρ attached to a maximal atypical block.

Partitions use the row convention: parts[i] is the length of row i + 1 of the Young diagram.
"""

from __future__ import annotations

import dataclasses


@dataclasses.dataclass(frozen=True, order=True)
class Partition:
    """
    A weakly decreasing sequence of non-negative integers with trailing zeros trimmed.

    Attributes:
        parts (tuple[int, ...]): The row lengths.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        values = [int(x) for x in self.parts]
        if any(x < 0 for x in values):
            raise ValueError(f"partition parts must be non-negative, got {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing, got {values}")
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "parts", tuple(values))

    @property
    def degree(self) -> int:
        """Number of boxes."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of non-zero rows."""
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """0-based row length; 0 beyond the last row."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> Partition:
        """The transposed partition."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0]))
        )

    def contains(self, other: Partition) -> bool:
        """True iff the Young diagram of `other` fits inside this one."""
        return other.length <= self.length and all(
            self[i] >= other[i] for i in range(other.length)
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"
