"""Rebuild the published table cells and compare sizes."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .bounds import exact_d2
from .codes import CodeParams, ConstraintKind
from .lexicode import _ball4, choose_method, construct
from .tables import TABLES, TableEntrySpec
from .verify import verify
from .words import Single

DEFAULT_BUDGET = 15 * 60.0
# rough throughput of the compiled kernels, in inner-loop steps per second
_STEPS_PER_SECOND = 2e8


@dataclass
class EntryResult:
    entry: TableEntrySpec
    status: str  # match | mismatch | attributed | informational | formula | skipped
    size: int | None = None
    seconds: float = 0.0
    verified: bool | None = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in ("match", "attributed", "informational", "formula", "skipped")

    def line(self) -> str:
        e = self.entry
        size = "-" if self.size is None else self.size
        text = (
            f"table{e.table} n={e.n:<2} d={e.d:<2} {e.kind.value:<4} offset={e.offset_text:<10} "
            f"expected={e.expected_size:<8} got={size!s:<8} {self.status}"
        )
        return text + (f"  ({self.note})" if self.note else "")


def estimate_seconds(entry: TableEntrySpec) -> float:
    params = CodeParams(entry.n, entry.d, entry.w, entry.kind)
    n_cands = 2**entry.n * _comb(entry.n, entry.w)
    images = 1 if entry.kind is ConstraintKind.GC else 2
    scan = 4**entry.n + n_cands
    if choose_method(params, n_cands) == "mark":
        steps = scan + entry.expected_size * images * _ball4(entry.n, entry.d - 1)
    else:
        steps = scan + n_cands * entry.expected_size * images / 2
    return steps / _STEPS_PER_SECOND


def _comb(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def _attribute(entry: TableEntrySpec, params: CodeParams) -> str | None:
    """Find another ordering that reproduces the published size at the same offset."""
    if not isinstance(entry.offset, Single):
        return None
    hits = []
    for ordering in range(1, 7):
        if ordering == entry.offset.ordering:
            continue
        spec = replace(entry.offset, ordering=ordering)
        if len(construct(params, spec)) == entry.expected_size:
            hits.append(ordering)
    if not hits:
        return None
    return f"ordering {entry.offset.ordering} gives a different size; orderings {hits} reproduce {entry.expected_size}"


def reproduce_entry(entry: TableEntrySpec, include_slow: bool = False, budget: float = DEFAULT_BUDGET) -> EntryResult:
    params = CodeParams(entry.n, entry.d, entry.w, entry.kind)
    if entry.formula is not None or entry.offset is None:
        value = exact_d2(entry.n, entry.w, entry.kind)
        status = "formula" if value == entry.expected_size else "mismatch"
        return EntryResult(entry, status, value, note="closed form for d=2")
    if not include_slow and estimate_seconds(entry) > budget:
        return EntryResult(entry, "skipped", note="estimated over budget; use --include-slow")
    start = time.perf_counter()
    code = construct(params, entry.offset)
    seconds = time.perf_counter() - start
    report = verify(code)
    size = len(code)
    res = EntryResult(entry, "match", size, seconds, report.passed)
    if entry.d == 2:
        res.extra["closed_form"] = exact_d2(entry.n, entry.w, entry.kind)
    if not report.passed:
        res.status, res.note = "mismatch", "constructed code failed verification"
        return res
    if size == entry.expected_size:
        if entry.asterisked:
            res.status = "informational"
            res.note = f"larger stochastic code of size {entry.stochastic_size} exists"
        return res
    why = _attribute(entry, params)
    if why is not None:
        res.status, res.note = "attributed", why
    elif entry.asterisked or not entry.zero_offset:
        res.status, res.note = "informational", "nonzero offset semantics not fixed by the source"
    else:
        res.status = "mismatch"
    return res


def _run_one(args):
    entry, include_slow, budget = args
    return reproduce_entry(entry, include_slow, budget)


def run_table(
    table: int,
    include_slow: bool = False,
    entry: tuple[int, int] | None = None,
    jobs: int = 1,
    budget: float = DEFAULT_BUDGET,
) -> list[EntryResult]:
    entries = [e for e in TABLES[table] if entry is None or (e.n, e.d) == entry]
    work = [(e, include_slow, budget) for e in entries]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]
