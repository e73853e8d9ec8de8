#!/usr/bin/env python
"""
Export TODOs
============

Collect the ``# TODO:`` comments of the package into ``TODO.rst``.
"""

from __future__ import annotations

import os
from pathlib import Path

__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "TODO_FILE_TEMPLATE",
    "extract_todo_items",
    "export_todo_items",
]

TODO_FILE_TEMPLATE = """
Partial Ranking - TODO
======================

TODO
----

{0}

About
-----

| **Partial Ranking** by Partial Ranking Developers
| Copyright 2026 Partial Ranking Developers
| This software is released under terms of BSD-3-Clause: \
https://opensource.org/licenses/BSD-3-Clause
"""[1:]


def extract_todo_items(root_directory: str | Path) -> dict[str, list[tuple[int, str]]]:
    """
    Extract the TODO items of the *Python* modules under given directory, a
    comment block continuing an item until its first non-comment line.

    Parameters
    ----------
    root_directory
        Directory to extract the TODO items from.

    Returns
    -------
    :class:`dict`
        TODO items as ``(line number, text)`` pairs per module.
    """

    todo_items: dict[str, list[tuple[int, str]]] = {}
    for path in sorted(Path(root_directory).rglob("*.py")):
        item: list[str] = []
        line_number = -1
        lines = path.read_text(encoding="utf-8").splitlines() + [""]
        for i, line in enumerate(lines, 1):
            line = line.strip()  # noqa: PLW2901
            if line.startswith("# TODO:"):
                item, line_number = [line], i
            elif item and line.startswith("#"):
                item.append(line.lstrip("#").strip())
            elif item:
                key = path.as_posix().replace("../", "")
                todo_items.setdefault(key, []).append((line_number, " ".join(item)))
                item = []

    return todo_items


def export_todo_items(
    todo_items: dict[str, list[tuple[int, str]]], file_path: str | Path
) -> None:
    """
    Export TODO items to given *reStructuredText* file.

    Parameters
    ----------
    todo_items
        TODO items.
    file_path
        File to write the TODO items to.
    """

    blocks = [
        "\n".join(
            [f"-   {module}\n"]
            + [f"    -   Line {number} : {text}" for number, text in items]
        )
        for module, items in todo_items.items()
    ]

    Path(file_path).write_text(
        TODO_FILE_TEMPLATE.format("\n\n".join(blocks)), encoding="utf-8"
    )


if __name__ == "__main__":
    os.chdir(os.path.dirname(__file__))

    export_todo_items(
        extract_todo_items(os.path.join("..", "partial_ranking")),
        os.path.join("..", "TODO.rst"),
    )
