"""Published lexicode sizes and scan offsets for w = n/2, n = 4..12 even.

Rows mirror the printed tables. Size cells: ``24.`` optimal, ``39*41`` a
larger stochastic-search code exists, ``946176.b``/``a`` value from the d=2
closed forms. Offset cells: ``59^1`` single offset with ordering, ``4e@95``
factored pair.
"""
from __future__ import annotations

from dataclasses import dataclass

from .codes import ConstraintKind
from .words import Factored, OffsetSpec, Single

_SIZES_RC = """
4: 24. 6. 2.
6: 320. 39*41 16 4. 2.
8: 4480. 384*390 112 25*26 10*12 2. 2.
10: 64512. 4084 795 166 46 15 6 2. 2.
12: 946176.a 49764 8704 1362 306 81 27 10 4. 2. 2.
"""

_SIZES_GC = """
4: 48. 12. 4.
6: 640. 96 40. 8 4.
8: 8960. 832 224 56 20*24 5. 4.
10: 129024. 9344 1676 360 96 32 16. 5. 4.
12: 1892352.b 112640 17408 2992 736 177 68 22 8 4. 4.
"""

_OFFSETS_RC = """
4: 59^1 59^2 0^1
6: 0^1 42d^4 12@19 bfc^2 0^1
8: 5021^1 44dd^2 4e@95 d3de^5 90a5^5 0^1 0^1
10: 0^1 0^5 bfc99^1 0^5 0^1 c0d96^1 c54c6^2 0^1 0^1
12: - 0@0 0@0 0^2 4121c8^4 0^5 0^2 96c697^1 96c697^1 0^1 0^1
"""

_OFFSETS_GC = """
4: 0^1 0^1 0^1
6: 0^1 0^2 434^1 0^1 0^1
8: 0^1 5021^2 0@0 2d@23 90f6^1 0^1 0^1
10: 0^1 0@0 0^2 0@0 0@0 0@0 c8e60^5 3792d^2 0^1
12: - 0@0 0@0 0@0 0@0 c8e605^1 994@70b 0@0 0^2 0^1 0^1
"""


@dataclass(frozen=True)
class TableEntrySpec:
    table: int
    n: int
    d: int
    w: int
    kind: ConstraintKind
    expected_size: int
    offset: OffsetSpec | None
    optimal: bool
    formula: str | None  # "a"/"b": value from the d=2 closed form
    stochastic_size: int | None  # asterisked cells

    @property
    def asterisked(self) -> bool:
        return self.stochastic_size is not None

    @property
    def zero_offset(self) -> bool:
        if isinstance(self.offset, Single):
            return self.offset.rank == 0
        if isinstance(self.offset, Factored):
            return self.offset.rank1 == 0 and self.offset.rank2 == 0
        return False

    @property
    def offset_text(self) -> str:
        if self.offset is None:
            return "-"
        if isinstance(self.offset, Single):
            return f"{self.offset.rank:x}^{self.offset.ordering}"
        return str(self.offset)


def _parse_size(cell: str) -> tuple[int, bool, str | None, int | None]:
    star = None
    if "*" in cell:
        cell, s = cell.split("*")
        star = int(s)
    formula = None
    if cell[-1] in "ab":
        cell, formula = cell[:-1], cell[-1]
    optimal = cell.endswith(".")
    return int(cell.rstrip(".")), optimal, formula, star


def _parse_offset(cell: str) -> OffsetSpec | None:
    if cell == "-":
        return None
    if "@" in cell:
        a, b = cell.split("@")
        return Factored(int(a, 16), int(b, 16))
    rank, ordering = cell.split("^")
    return Single(int(rank, 16), int(ordering))


def _rows(text: str) -> dict[int, list[str]]:
    out = {}
    for line in text.strip().splitlines():
        n, cells = line.split(":")
        out[int(n)] = cells.split()
    return out


def _build(table: int, kind: ConstraintKind, sizes: str, offsets: str) -> list[TableEntrySpec]:
    entries = []
    offs = _rows(offsets)
    for n, cells in _rows(sizes).items():
        for i, cell in enumerate(cells):
            d = i + 2
            size, optimal, formula, star = _parse_size(cell)
            entries.append(
                TableEntrySpec(table, n, d, n // 2, kind, size, _parse_offset(offs[n][i]), optimal, formula, star)
            )
    return entries


TABLE1 = _build(1, ConstraintKind.GC_RC, _SIZES_RC, _OFFSETS_RC)
TABLE2 = _build(2, ConstraintKind.GC, _SIZES_GC, _OFFSETS_GC)
TABLES = {1: TABLE1, 2: TABLE2}


def lookup(table: int, n: int, d: int) -> TableEntrySpec:
    for e in TABLES[table]:
        if e.n == n and e.d == d:
            return e
    raise KeyError(f"no entry n={n} d={d} in table {table}")
