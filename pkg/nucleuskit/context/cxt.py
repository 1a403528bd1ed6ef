"""
Burmeister ``.cxt`` format.

    B
    <name, may be empty>
    m
    k
    <blank>
    m object names, k attribute names, m rows of X and .
"""

from typing import List

from nucleuskit.context.formal_context import FormalContext
from nucleuskit.core.errors import ParseError

CROSS = "Xx"
EMPTY = "."


def _count(lines: List[str], index: int, source: str) -> int:
    text = lines[index].strip() if index < len(lines) else ""
    if not text.isdigit():
        raise ParseError("expected a non-negative count", index + 1, 1, source)
    return int(text)


def read_cxt(text: str, source: str = "<cxt>") -> FormalContext:
    """Parse a Burmeister context, reporting errors with line and column"""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "B":
        raise ParseError("expected header 'B'", 1, 1, source)

    # header lines are positional: the name line is always present
    m, k = _count(lines, 2, source), _count(lines, 3, source)
    if len(lines) > 4 and lines[4].strip():
        raise ParseError("expected a blank line after the counts", 5, 1, source)
    pos = 5

    if pos + m + k + m > len(lines):
        raise ParseError(
            f"expected {m} object names, {k} attribute names and {m} rows",
            len(lines) + 1, 1, source,
        )
    objects = [line.strip() for line in lines[pos:pos + m]]
    pos += m
    attributes = [line.strip() for line in lines[pos:pos + k]]
    pos += k

    rows: List[List[bool]] = []
    for offset in range(m):
        line_no = pos + offset + 1
        raw = lines[pos + offset].rstrip()
        if len(raw) != k:
            raise ParseError(f"row has {len(raw)} cells, expected {k}", line_no, len(raw) + 1, source)
        row = []
        for col, char in enumerate(raw, start=1):
            if char in CROSS:
                row.append(True)
            elif char == EMPTY:
                row.append(False)
            else:
                raise ParseError(f"unexpected character {char!r}", line_no, col, source)
        rows.append(row)

    for offset, line in enumerate(lines[pos + m:], start=pos + m + 1):
        if line.strip():
            raise ParseError("trailing content after the last row", offset, 1, source)
    return FormalContext(tuple(objects), tuple(attributes), tuple(tuple(r) for r in rows))


def write_cxt(context: FormalContext, name: str = "") -> str:
    lines = ["B", name, str(context.m), str(context.k), ""]
    lines.extend(context.objects)
    lines.extend(context.attributes)
    for row in context.incidence:
        lines.append("".join("X" if cell else EMPTY for cell in row))
    return "\n".join(lines) + "\n"
