"""Greedy lexicographic construction of constant GC-content DNA codes."""
from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from . import _kernels as K
from .bounds import DEFAULT_REGISTRY, Registry, gc_word_count
from .codes import Code, CodeParams, ConstraintKind
from .verify import verify
from .words import Factored, OffsetSpec, Single, digit_to_code

log = logging.getLogger(__name__)

MAX_CONSTRUCT_N = 15
MAX_MARK_N = 13

_MODE = {ConstraintKind.GC: K.MODE_NONE, ConstraintKind.GC_RC: K.MODE_RC, ConstraintKind.GC_R: K.MODE_R}


def candidates(params: CodeParams, spec: OffsetSpec) -> np.ndarray:
    """GC-content-w words in scan order, as packed int64."""
    n, w = params.n, params.w
    spec.validate(n)
    capacity = gc_word_count(n, w)
    if isinstance(spec, Factored):
        return K.candidates_factored(n, spec.rank1, spec.rank2, w, capacity)
    table = np.array(digit_to_code(spec.ordering), dtype=np.int64)
    return K.candidates_single(n, spec.rank, table, w, capacity)


@lru_cache(maxsize=8)
def _masks(n: int, radius: int) -> np.ndarray:
    return K.ball_masks(n, radius)


def _ball4(n: int, r: int) -> int:
    from math import comb

    return sum(comb(n, k) * 3**k for k in range(min(r, n) + 1))


def choose_method(params: CodeParams, n_candidates: int) -> str:
    # marking touches every word near each accepted word and its image;
    # scanning compares every candidate with the accepted list
    if params.n > MAX_MARK_N:
        return "scan"
    images = 1 if params.kind is ConstraintKind.GC else 2
    return "mark" if images * _ball4(params.n, params.d - 1) <= n_candidates else "scan"


def construct(params: CodeParams, spec: OffsetSpec | None = None, method: str = "auto") -> Code:
    """Build a maximal code by scanning all 4^n words in the order given by ``spec``.

    Words of the wrong GC-content are skipped, as are words too close to their
    own reverse complement (or reversal). Every other word is kept iff it is
    at distance >= d from all kept words and their images.
    """
    spec = Single() if spec is None else spec
    if params.n > MAX_CONSTRUCT_N:
        raise ValueError(f"lexicographic construction limited to n <= {MAX_CONSTRUCT_N}")
    cands = candidates(params, spec)
    mode = _MODE[params.kind]
    if method == "auto":
        method = choose_method(params, len(cands))
    if method == "mark":
        if params.n > MAX_MARK_N:
            raise ValueError(f"marking needs n <= {MAX_MARK_N}")
        acc = K.greedy_mark(cands, params.n, params.d, mode, _masks(params.n, params.d - 1))
    elif method == "scan":
        acc = K.greedy_scan(cands, params.n, params.d, mode)
    else:
        raise ValueError(f"unknown method {method!r}")
    log.debug("n=%d d=%d w=%d %s: %d words via %s", params.n, params.d, params.w, params.kind, len(acc), method)
    meta = {"ordering": "-" if isinstance(spec, Factored) else str(spec.ordering), "offset": str(spec)}
    return Code.from_packed(params, acc, meta)


def lexicode_label(code: Code) -> str:
    ordering = code.meta.get("ordering", "?")
    offset = code.meta.get("offset", "?")
    source = code.meta.get("source", "lexicode")
    if source != "lexicode":
        return source
    return f"lexicode(ordering={ordering},offset={offset})"


def register_result(code: Code, registry: Registry | None = None) -> None:
    """Record a verified code's size as a constructive lower bound."""
    report = verify(code)
    if not report.passed:
        raise ValueError(f"refusing to register an invalid code: {report.summary()}")
    p = code.params
    (DEFAULT_REGISTRY if registry is None else registry).add(
        p.n, p.d, p.w, p.kind, len(code), lexicode_label(code)
    )
