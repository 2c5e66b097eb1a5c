"""Independent checking of codes, and an exact maximum-code oracle for tiny cases.

Distances here are computed from the text form of the words, one-hot
encoded per position, so that agreement counts come from a matrix product
rather than from the packed XOR kernel used during construction.
"""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .codes import Code, CodeParams, ConstraintKind, parse_header

_COMPLEMENT = str.maketrans("ACGT", "TGCA")
_LETTER = {"A": 0, "C": 1, "G": 2, "T": 3}
_CHUNK = 1024
_TILE = 8192


def hamming_str(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return sum(a != b for a, b in zip(x, y))


def rc_str(x: str) -> str:
    return x.translate(_COMPLEMENT)[::-1]


def image_str(x: str, kind: ConstraintKind) -> str:
    return x[::-1] if kind is ConstraintKind.GC_R else rc_str(x)


def gc_str(x: str) -> int:
    return sum(ch in "CG" for ch in x)


def _one_hot(words: Sequence[str], n: int) -> np.ndarray:
    idx = np.array([[_LETTER[ch] for ch in x] for x in words], dtype=np.int64).reshape(len(words), n)
    out = np.zeros((len(words), n, 4), dtype=np.float32)
    np.put_along_axis(out, idx[:, :, None], 1.0, axis=2)
    return out.reshape(len(words), 4 * n)


def _min_distance(a: np.ndarray, b: np.ndarray, n: int, skip_diagonal: bool) -> int | None:
    """Minimum of n - <a_i, b_j> over pairs (i < j if skip_diagonal else all i, j)."""
    top = -1.0
    m, k = a.shape[0], b.shape[0]
    for i0 in range(0, m, _CHUNK):
        block = a[i0 : i0 + _CHUNK]
        # with skip_diagonal only tiles on or right of the diagonal matter
        j_first = i0 if skip_diagonal else 0
        for j0 in range(j_first, k, _TILE):
            agree = block @ b[j0 : j0 + _TILE].T
            if skip_diagonal and j0 < i0 + block.shape[0]:
                rows = np.arange(i0, i0 + block.shape[0])[:, None]
                cols = np.arange(j0, j0 + agree.shape[1])[None, :]
                agree = np.where(cols > rows, agree, -1.0)
            if agree.size:
                top = max(top, float(agree.max()))
            if top >= n:
                return 0
    if top < 0:
        return None
    return n - int(round(top))


@dataclass
class VerifyReport:
    n: int
    d: int
    w: int
    constraint: str
    size: int
    min_pairwise_distance: int | None
    min_rc_cross_distance: int | None
    gc_content_set: list[int]
    duplicate_count: int
    bad_length_count: int = 0
    passed: bool = False
    problems: list[str] = field(default_factory=list)

    @property
    def pass_(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        cross = "-" if self.min_rc_cross_distance is None else self.min_rc_cross_distance
        pair = "-" if self.min_pairwise_distance is None else self.min_pairwise_distance
        text = (
            f"{status}: n={self.n} d={self.d} w={self.w} constraint={self.constraint} size={self.size} "
            f"min_distance={pair} min_cross_distance={cross} gc={self.gc_content_set} "
            f"duplicates={self.duplicate_count}"
        )
        if self.problems:
            text += "\n  " + "\n  ".join(self.problems)
        return text

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def verify_words(words: Sequence[str], params: CodeParams) -> VerifyReport:
    n, d, w, kind = params.n, params.d, params.w, params.kind
    problems = []
    bad = [x for x in words if len(x) != n or not re.fullmatch(r"[ACGT]*", x)]
    if bad:
        problems.append(f"{len(bad)} words with wrong length or alphabet, e.g. {bad[0]!r}")
    good = [x for x in words if x not in bad]
    gcs = sorted({gc_str(x) for x in good})
    duplicates = len(good) - len(set(good))
    pair = cross = None
    if good:
        hot = _one_hot(good, n)
        if len(good) > 1:
            pair = _min_distance(hot, hot, n, skip_diagonal=True)
        if kind is not ConstraintKind.GC:
            images = _one_hot([image_str(x, kind) for x in good], n)
            cross = _min_distance(hot, images, n, skip_diagonal=False)
    if any(g != w for g in gcs):
        problems.append(f"GC-content {gcs} differs from w={w}")
    if duplicates:
        problems.append(f"{duplicates} duplicated words")
    if pair is not None and pair < d:
        problems.append(f"minimum distance {pair} < d={d}")
    if kind is not ConstraintKind.GC and cross is not None and cross < d:
        problems.append(f"minimum {'reverse' if kind is ConstraintKind.GC_R else 'reverse-complement'} cross distance {cross} < d={d}")
    return VerifyReport(
        n, d, w, kind.value, len(words), pair, cross, gcs, duplicates, len(bad), not problems, problems
    )


def verify(code: Code) -> VerifyReport:
    return verify_words([str(x) for x in code.words], code.params)


def verify_text(text: str) -> VerifyReport:
    """Verify a code file's contents without going through the packed word type."""
    lines = text.splitlines()
    h = parse_header([ln for ln in lines if ln.startswith("#")])
    params = CodeParams(int(h["n"]), int(h["d"]), int(h["w"]), ConstraintKind.parse(h.get("constraint", "gc")))
    words = [ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")]
    return verify_words(words, params)


# ---------------------------------------------------------------------------
# exact oracle


class SearchLimit(Exception):
    pass


def _vertices(n: int, d: int, w: int, kind: ConstraintKind) -> list[str]:
    """GC-w words, one per {x, image(x)} orbit when a cross constraint applies.

    Compatibility with y and with image(y) is the same condition, so a
    constrained code is a clique on orbits.
    """
    words = ["".join(p) for p in product("ACGT", repeat=n)]
    words = [x for x in words if gc_str(x) == w]
    if kind is ConstraintKind.GC:
        return words
    out, seen = [], set()
    for x in words:
        im = image_str(x, kind)
        if hamming_str(x, im) < d or x in seen:
            continue
        seen.update((x, im))
        out.append(x)
    return out


def _adjacency(words: list[str], n: int, d: int, kind: ConstraintKind) -> list[int]:
    if not words:
        return []
    hot = _one_hot(words, n)
    ok = (n - (hot @ hot.T)) >= d - 0.5
    if kind is not ConstraintKind.GC:
        ims = _one_hot([image_str(x, kind) for x in words], n)
        ok &= (n - (hot @ ims.T)) >= d - 0.5
    np.fill_diagonal(ok, False)
    adj = []
    for row in ok:
        bits = 0
        for j in np.flatnonzero(row):
            bits |= 1 << int(j)
        adj.append(bits)
    return adj


def _color_sort(p: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order, colors = [], []
    color = 0
    uncolored = p
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(adj: list[int], node_cap: int | None = None) -> list[int]:
    """Branch and bound with greedy-colouring bounds (Tomita-style)."""
    m = len(adj)
    if m == 0:
        return []
    # greedy seed, highest degree first
    by_degree = sorted(range(m), key=lambda v: -adj[v].bit_count())
    best: list[int] = []
    cand = (1 << m) - 1
    for v in by_degree:
        if cand >> v & 1:
            best.append(v)
            cand &= adj[v]
    nodes = 0

    def expand(chosen: list[int], p: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise SearchLimit
        order, colors = _color_sort(p, adj)
        for v, c in zip(reversed(order), reversed(colors)):
            if len(chosen) + c <= len(best):
                return
            chosen.append(v)
            sub = p & adj[v]
            if sub:
                expand(chosen, sub)
            elif len(chosen) > len(best):
                best = list(chosen)
            chosen.pop()
            p &= ~(1 << v)

    expand([], (1 << m) - 1)
    return best


def exact_max_words(n: int, d: int, w: int, kind=ConstraintKind.GC, node_cap: int | None = 200_000) -> list[str] | None:
    kind = ConstraintKind.parse(kind)
    words = _vertices(n, d, w, kind)
    adj = _adjacency(words, n, d, kind)
    try:
        clique = max_clique(adj, node_cap)
    except SearchLimit:
        return None
    return [words[v] for v in clique]


def exact_max_code(n: int, d: int, w: int, kind=ConstraintKind.GC, node_cap: int | None = 200_000) -> int | None:
    """Exact maximum code size, or None when the search exceeds ``node_cap`` nodes."""
    found = exact_max_words(n, d, w, kind, node_cap)
    return None if found is None else len(found)
