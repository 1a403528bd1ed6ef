"""DOT emission for finite lattices (covering edges only)"""

from typing import List, Sequence, Tuple


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_dot(name: str, labels: Sequence[str], covers: Sequence[Tuple[int, int]]) -> str:
    """Render nodes bottom-to-top with one edge per covering pair"""
    lines: List[str] = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, label in enumerate(labels):
        lines.append(f"  n{i} [label={_quote(label)}];")
    for lower, upper in covers:
        lines.append(f"  n{lower} -> n{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def set_label(items: Sequence[object]) -> str:
    return "{" + ",".join(str(item) for item in items) + "}"
