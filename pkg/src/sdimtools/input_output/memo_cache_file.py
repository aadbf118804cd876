"""
memo_cache_file
===============

Defines the `MemoCacheFile` class.

A memo cache file stores multiplicities computed by the reduction engine as one JSON object that
maps the canonical diagram text to a decimal string:

```json
{"{0,2}": "2", "{0,2,4}": "6"}
```

Example:
    ```python
    cache = MemoCacheFile("memo.json")
    engine.load(cache.read())
    cache.write(engine.export())
    ```
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from .weight_parser import parse_vee_set

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def _text(key: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in key) + "}"


class MemoCacheFile:
    """
    A JSON file holding a table of normalized diagrams and their multiplicities.

    Attributes:
        path (Path): Location of the cache file.
        table (dict[tuple[int, ...], int]): The entries of the last `read`.
    """

    def __init__(self, file_path: str, must_exist: bool = True):
        """
        Initializes the MemoCacheFile instance.

        Args:
            file_path (str): Path to the cache file.
            must_exist (bool, optional): Raise when the file is missing. Use False for a
                cache that is about to be written. Defaults to True.

        Raises:
            FileNotFoundError: If the file does not exist and `must_exist` is set.
        """
        self.table: dict[tuple[int, ...], int] = {}
        self.set_path(file_path, must_exist)

    def set_path(self, file_path: str, must_exist: bool = True):
        """
        Updates the file path.

        Args:
            file_path (str): Path to the cache file.
            must_exist (bool, optional): Raise when the file is missing. Defaults to True.

        Raises:
            FileNotFoundError: If the file does not exist and `must_exist` is set.
        """
        self.path = Path(file_path)
        if not self.path.exists():
            if must_exist:
                logging.error("File '%s' not found.", self.path)
                raise FileNotFoundError(f"The file '{file_path}' does not exist.")
            logging.warning("Cache file '%s' does not exist yet.", self.path)

    def read(self) -> dict[tuple[int, ...], int]:
        """
        Reads the cache file.

        Returns:
            dict[tuple[int, ...], int]: Normalized ∨ tuples and their multiplicities.

        Raises:
            ValueError: If the file is not a JSON object of diagram texts and integers.
        """
        with open(self.path, encoding="utf-8") as handle:
            raw = json.load(handle)
        if not isinstance(raw, dict):
            logging.error("Cache file '%s' does not hold a JSON object.", self.path)
            raise ValueError(f"cache file '{self.path}' must hold a JSON object")
        self.table = {parse_vee_set(key): int(value) for key, value in raw.items()}
        return self.table

    def write(self, table: dict[tuple[int, ...], int]):
        """
        Writes a table to the cache file, keys sorted.

        Args:
            table (dict[tuple[int, ...], int]): Normalized ∨ tuples and their multiplicities.
        """
        self.table = dict(table)
        payload = {_text(key): str(value) for key, value in sorted(self.table.items())}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, sort_keys=True, indent=1)
            handle.write("\n")
