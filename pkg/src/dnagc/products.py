"""Product constructions from binary and ternary component codes."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels as K
from .codes import Code, CodeParams, ConstraintKind
from .words import BinaryWord, DnaWord, TernaryWord, WordError


@dataclass
class ComponentCode:
    alphabet: int
    n: int
    d: int
    words: list = field(default_factory=list)
    w: int | None = None
    r_constrained: bool = False

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def header(self) -> dict[str, object]:
        name = {2: "binary", 3: "ternary"}[self.alphabet]
        h: dict[str, object] = {"alphabet": name, "n": self.n, "d": self.d}
        if self.w is not None:
            h["w"] = self.w
        h["r_constrained"] = int(self.r_constrained)
        return h

    def to_text(self) -> str:
        head = "# " + " ".join(f"{k}={v}" for k, v in self.header().items())
        return head + "\n" + "".join(f"{x}\n" for x in self.words)


def _pack(rows: np.ndarray) -> np.ndarray:
    """Digit rows to 2-bit lanes, first digit most significant."""
    n = rows.shape[1]
    shifts = 2 * np.arange(n - 1, -1, -1, dtype=np.int64)
    return (rows.astype(np.int64) << shifts).sum(axis=1)


def _greedy(rows: np.ndarray, d: int, r_constrained: bool) -> list[int]:
    """Greedy selection over digit rows (already in scan order); returns kept indices."""
    if rows.shape[0] == 0:
        return []
    packed = _pack(rows)
    mode = K.MODE_R if r_constrained else K.MODE_NONE
    acc = K.greedy_scan(packed, rows.shape[1], d, mode)
    index = {int(v): i for i, v in enumerate(packed)}
    return [index[int(v)] for v in acc]


def _binary_rows(n: int, w: int | None) -> np.ndarray:
    ints = np.arange(2**n, dtype=np.int64)
    if w is not None:
        ints = ints[np.bitwise_count(ints) == w]
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((ints[:, None] >> shifts) & 1).astype(np.int8)


def _to_binary(rows: np.ndarray, n: int) -> list[BinaryWord]:
    return [BinaryWord.parse("".join(map(str, r))) if n else BinaryWord(0, 0) for r in rows]


def parity_code(n: int) -> ComponentCode:
    """All even-weight binary words of length n, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    words = [BinaryWord(n, x) for x in range(2**n) if x.bit_count() % 2 == 0]
    return ComponentCode(2, n, 2, words)


def binary_lexicode(n: int, d: int, r_constrained: bool = False) -> ComponentCode:
    if n < 0 or d < 1:
        raise ValueError(f"invalid binary code parameters n={n} d={d}")
    if n == 0:
        return ComponentCode(2, 0, d, [BinaryWord(0, 0)], r_constrained=r_constrained)
    rows = _binary_rows(n, None)
    kept = _greedy(rows, d, r_constrained)
    return ComponentCode(2, n, d, _to_binary(rows[kept], n), r_constrained=r_constrained)


def binary_cw_lexicode(n: int, d: int, w: int, r_constrained: bool = False) -> ComponentCode:
    if not 0 <= w <= n or d < 1:
        raise ValueError(f"invalid constant-weight parameters n={n} d={d} w={w}")
    rows = _binary_rows(n, w)
    kept = _greedy(rows, d, r_constrained)
    return ComponentCode(2, n, d, _to_binary(rows[kept], n), w, r_constrained)


@lru_cache(maxsize=None)
def _ternary_rows(n: int) -> np.ndarray:
    """All ternary words of length n in lexicographic order."""
    rows = np.indices((3,) * n, dtype=np.int8).reshape(n, -1).T
    rows.flags.writeable = False
    return rows


def ternary_cw_lexicode(n: int, d: int, w: int, r_constrained: bool = False) -> ComponentCode:
    if not 0 <= w <= n or d < 1:
        raise ValueError(f"invalid ternary parameters n={n} d={d} w={w}")
    rows = _ternary_rows(n)
    rows = rows[np.count_nonzero(rows, axis=1) == w]
    kept = _greedy(rows, d, r_constrained)
    words = [TernaryWord(tuple(int(v) for v in r)) for r in rows[kept]]
    return ComponentCode(3, n, d, words, w, r_constrained)


def odd_weight_r_code(n: int) -> ComponentCode:
    """One word from each {x, reverse(x)} pair of odd-weight words (n even)."""
    if n < 2 or n % 2:
        raise ValueError("odd_weight_r_code needs an even length")
    words = []
    for x in range(2**n):
        if x.bit_count() % 2 == 0:
            continue
        bw = BinaryWord(n, x)
        if bw.bits < bw.reversed().bits:
            words.append(bw)
    return ComponentCode(2, n, 2, words, r_constrained=True)


def _binary_digits(bits: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return (bits[:, None] >> shifts) & 1


def _spread(bits: np.ndarray, n: int) -> np.ndarray:
    """Bit i of each binary word moved to the low bit of 2-bit lane i."""
    shifts = 2 * np.arange(n - 1, -1, -1, dtype=np.int64)
    return (_binary_digits(bits, n) << shifts).sum(axis=1)


def _product_kind(first: ComponentCode, second: ComponentCode) -> ConstraintKind:
    return ConstraintKind.GC_R if (first.r_constrained or second.r_constrained) else ConstraintKind.GC


def product_gc(b1: ComponentCode, b2: ComponentCode) -> Code:
    """All x ⊙ y with x from a constant-weight code and y from any binary code."""
    if b1.alphabet != 2 or b2.alphabet != 2 or b1.w is None:
        raise ValueError("product_gc needs a binary constant-weight code and a binary code")
    if b1.n != b2.n:
        raise WordError(f"length mismatch: {b1.n} vs {b2.n}")
    params = CodeParams(b1.n, min(b1.d, b2.d), b1.w, _product_kind(b1, b2))
    xs = _spread(np.array([x.bits for x in b1], dtype=np.int64), b1.n)
    ys = _spread(np.array([y.bits for y in b2], dtype=np.int64), b1.n)
    ones = _spread(np.array([(1 << b1.n) - 1], dtype=np.int64), b1.n)[0]
    X, Y = xs[:, None], ys[None, :]
    # per lane: x=1 gives C or G (1 + y), x=0 gives T or A (3 - 3y)
    packed = X + (X & Y) + 3 * (ones & ~(X | Y))
    return Code.from_packed(params, packed.ravel(), {"source": "product", "alphabet": "dna"})


def product_ternary(t: ComponentCode, b: ComponentCode) -> Code:
    """All x ⊘ y with x from a ternary constant-weight code and y of length n - w."""
    if t.alphabet != 3 or b.alphabet != 2 or t.w is None:
        raise ValueError("product_ternary needs a ternary constant-weight code and a binary code")
    if b.n != t.n - t.w:
        raise WordError(f"binary length {b.n} != n - w = {t.n - t.w}")
    if b.r_constrained and not t.r_constrained:
        # reversing x moves its zero slots, so y^R need not line up with y'
        raise ValueError("a reverse constraint on the binary factor alone is not carried by ⊘")
    d = min(t.d, b.d) if t.n > t.w else t.d
    params = CodeParams(t.n, d, t.w, _product_kind(t, b))
    n = t.n
    ybits = _binary_digits(np.array([y.bits for y in b], dtype=np.int64), b.n)
    blocks = []
    for x in t:
        digits = np.array(x.digits, dtype=np.int64)
        zeros = np.flatnonzero(digits == 0)
        shifts = 2 * (n - 1 - np.arange(n, dtype=np.int64))
        # ternary 1 and 2 coincide with the lane codes of C and G
        base = int((digits << shifts).sum())
        # zero slots hold A (0) or T (3) according to the bits of y
        blocks.append(base + (3 * ybits) @ (np.int64(1) << shifts[zeros]))
    packed = np.concatenate(blocks) if blocks else np.empty(0, dtype=np.int64)
    return Code.from_packed(params, packed, {"source": "product", "alphabet": "dna"})


def r_to_rc(code: Code) -> Code:
    """Complement the first floor(n/2) positions, turning a reverse code into a reverse-complement code.

    For even n the reverse distances become reverse-complement distances
    exactly; for odd n they may drop by one, so the declared d drops by one.
    """
    p = code.params
    if p.kind is not ConstraintKind.GC_R:
        raise ValueError("r_to_rc expects a code with the reverse constraint")
    half = p.n // 2
    mask = ((1 << (2 * half)) - 1) << (2 * (p.n - half))
    d = p.d if p.n % 2 == 0 else p.d - 1
    if d < 1:
        raise ValueError("odd-length conversion needs reverse distance at least 2")
    words = [DnaWord(p.n, x.bits ^ mask) for x in code.words]
    meta = dict(code.meta)
    meta["source"] = meta.get("source", "product") + "+r_to_rc"
    return Code(CodeParams(p.n, d, p.w, ConstraintKind.GC_RC), words, meta)


def _best(codes: Sequence[Code]) -> Code:
    return max(codes, key=len)


def _mirrored(n: int, d: int, w: int) -> Code:
    """Single word at distance n from its own reverse complement (n odd)."""
    # mirrored C/C and A/A pairs never meet their complement under reversal
    half = n // 2
    left = [1] * (w // 2) + [0] * (half - w // 2)
    word = DnaWord.from_codes(left + [w % 2] + left[::-1])
    return Code(CodeParams(n, d, w, ConstraintKind.GC_RC), [word], {"source": "product", "alphabet": "dna"})


def product_witness(n: int, d: int, w: int, kind: ConstraintKind = ConstraintKind.GC) -> Code:
    """Largest product code this module can build for the given parameters."""
    kind = ConstraintKind.parse(kind)
    if kind is ConstraintKind.GC_RC:
        if n % 2 == 0:
            return r_to_rc(product_witness(n, d, w, ConstraintKind.GC_R))
        if d < n:
            code = r_to_rc(product_witness(n, d + 1, w, ConstraintKind.GC_R))
            if len(code):
                return code
        return _mirrored(n, d, w)
    second = parity_code(n) if d == 2 else binary_lexicode(n, d)
    tail = binary_lexicode(n - w, d) if n > w else binary_lexicode(0, d)
    if kind is ConstraintKind.GC:
        options = [product_gc(binary_cw_lexicode(n, d, w), second)]
        if d <= n:
            options.append(product_ternary(ternary_cw_lexicode(n, d, w), tail))
        return _best(options)
    r_second = odd_weight_r_code(n) if (d == 2 and n % 2 == 0) else binary_lexicode(n, d, r_constrained=True)
    options = [
        product_gc(binary_cw_lexicode(n, d, w, r_constrained=True), second),
        product_gc(binary_cw_lexicode(n, d, w), r_second),
        product_ternary(ternary_cw_lexicode(n, d, w, r_constrained=True), tail),
    ]
    options = [c for c in options if len(c)]
    if not options:
        return Code(CodeParams(n, d, w, kind), [], {"source": "product", "alphabet": "dna"})
    best = _best(options)
    best.params = CodeParams(n, d, w, kind)
    return best
