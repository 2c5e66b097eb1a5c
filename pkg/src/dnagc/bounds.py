"""Upper and lower bounds on the size of constant GC-content DNA codes.

Everything here is exact integer arithmetic. Each bound carries a provenance
chain naming the rule applied at every step, so that an optimality claim can
be traced back to the binary-code values it rests on.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb as _comb
from typing import Iterable

from .codes import ConstraintKind, ParamError

GC, GC_RC, GC_R = ConstraintKind.GC, ConstraintKind.GC_RC, ConstraintKind.GC_R


def comb(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return _comb(n, k)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def gc_word_count(n: int, w: int) -> int:
    """Number of length-n DNA words with GC-content w."""
    return comb(n, w) * 2**n


@dataclass(frozen=True)
class Step:
    formula: str
    args: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.formula}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class Bound:
    value: int
    kind: str  # "upper" | "lower"
    provenance: tuple[Step, ...]

    def __post_init__(self):
        if not self.provenance:
            raise ValueError("a bound needs at least one provenance step")
        if self.value < 0:
            raise ValueError("bounds are non-negative")

    @property
    def method(self) -> str:
        return self.provenance[0].formula

    def chain(self) -> str:
        return " > ".join(map(str, self.provenance))

    @property
    def uses_fallback(self) -> bool:
        return any(s.formula in FALLBACK_FORMULAS for s in self.provenance)

    def extend(self, step: Step, value: int | None = None) -> "Bound":
        return Bound(self.value if value is None else value, self.kind, (step,) + self.provenance)


def _bound(value: int, kind: str, formula: str, *args: int) -> Bound:
    return Bound(value, kind, (Step(formula, tuple(args)),))


# ---------------------------------------------------------------------------
# binary codes

# A_2(n, d) for even d where 2d <= n and n > 2d, n <= 16 (Brouwer's tables).
# Everything with 2d >= n follows from the Plotkin/Levenshtein construction.
_A2_EVEN = {
    4: {9: 20, 10: 40, 11: 72, 12: 144, 13: 256, 14: 512, 15: 1024, 16: 2048},
    6: {13: 32, 14: 64, 15: 128, 16: 256},
}
FALLBACK_FORMULAS = frozenset({"singleton", "trivial"})
BINARY_TABLE_MAX_N = 16


def _a2_even(n: int, d: int) -> int | None:
    if d > n:
        return 1
    if d == 2:
        return 2 ** (n - 1)
    if d == n:
        return 2
    if 2 * d == n:
        return 4 * d
    if 2 * d > n:
        return 2 * (d // (2 * d - n))
    return _A2_EVEN.get(d, {}).get(n)


def binary_exact(n: int, d: int) -> int | None:
    """Known exact A_2(n, d) for n <= 16, or None."""
    if n < 0 or n > BINARY_TABLE_MAX_N:
        return None
    if d <= 1:
        return 2**n
    if d > n:
        return 1
    if d % 2:
        # puncturing/extension: A(n, 2e-1) = A(n+1, 2e)
        if n + 1 > BINARY_TABLE_MAX_N and 2 * (d + 1) <= n + 1:
            return None
        return _a2_even(n + 1, d + 1)
    return _a2_even(n, d)


def binary_upper(n: int, d: int) -> Bound:
    exact = binary_exact(n, d)
    if exact is not None:
        return _bound(exact, "upper", "binary_exact", n, d)
    return _bound(2 ** (n - d + 1), "upper", "singleton", n, d)


def binary_lower(n: int, d: int) -> Bound:
    exact = binary_exact(n, d)
    if exact is not None:
        return _bound(exact, "lower", "binary_exact", n, d)
    return _bound(2 if d <= n else 1, "lower", "trivial", n, d)


def binary_cw_exact(n: int, d: int, w: int) -> int | None:
    """Exact A_2(n, d, w) in the cases that are elementary."""
    if not 0 <= w <= n:
        return 0
    if d % 2:
        d += 1
    w = min(w, n - w)
    if d <= 2:
        return comb(n, w)
    if w == 0 or d > 2 * w:
        return 1
    if d == 2 * w:
        return n // w
    return None


# ---------------------------------------------------------------------------
# closed forms


def _check(n: int, d: int, w: int) -> None:
    if n < 1 or not 0 <= w <= n or not 0 <= d <= n:
        raise ParamError(f"invalid parameters n={n} d={d} w={w}")


def special_exact(n: int, d: int, w: int, kind: ConstraintKind = GC) -> int | None:
    """Exact code size for the degenerate cases w=0, d=n and d<=1."""
    kind = ConstraintKind.parse(kind)
    _check(n, d, w)
    if kind is GC_R:
        return special_exact(n, d, w, GC_RC) if n % 2 == 0 else None
    if kind is GC_RC:
        if d == 0:
            return gc_word_count(n, w)
        if d == 1:
            if n % 2 == 0 and w % 2 == 0:
                return (gc_word_count(n, w) - comb(n // 2, w // 2) * 2 ** (n // 2)) // 2
            return gc_word_count(n, w) // 2
        if d == n:
            return 2 if 2 * w == n else 1
        return None
    w = min(w, n - w)
    if d <= 1:
        return gc_word_count(n, w)
    if d == n:
        if 2 * w == n:
            return 4
        return 3 if 3 * w >= n else 2
    if w == 0:
        return binary_exact(n, d)
    return None


def _special_name(n: int, d: int, w: int, kind: ConstraintKind) -> str:
    if d <= 1:
        return "all_words" if kind is GC else "all_words_rc"
    if d == n:
        return "full_distance" if kind is GC else "full_distance_rc"
    return "binary_exact"


def exact_d2(n: int, w: int, kind: ConstraintKind = GC) -> int | None:
    """Exact size for d=2: C(n,w) 2^(n-1) plain, C(n,w) 2^(n-2) with RC and n even."""
    kind = ConstraintKind.parse(kind)
    if n < 2 or not 0 <= w <= n:
        return None
    if kind is GC:
        return comb(n, w) * 2 ** (n - 1)
    if n % 2:
        return None
    return comb(n, w) * 2 ** (n - 2)


# ---------------------------------------------------------------------------
# Plotkin-type


def _pair_squares(x: int) -> int:
    # floor(x/2)^2 + ceil(x/2)^2
    return (x * x + (x & 1)) // 2


def plotkin_inequality_holds(n: int, d: int, w: int, m: int) -> bool:
    """Whether m codewords are compatible with the counting inequality."""
    k, r = divmod(w * m, n)
    lhs = m * (m - 1) * d
    rhs = (n - r) * (m * m - _pair_squares(k) - _pair_squares(m - k)) + r * (
        m * m - _pair_squares(k + 1) - _pair_squares(m - k - 1)
    )
    return lhs <= rhs


def _plotkin_q(n: int, w: int) -> int:
    return w * w + 4 * w * (n - w) + (n - w) ** 2


def plotkin_upper_integer(n: int, d: int, w: int) -> Bound | None:
    """Largest M for which the integer counting inequality holds for all M' <= M.

    Returns None unless the inequality fails for every M from the first
    failure up to the search cap C(n,w)*2^n.

    Beyond M > 2dn / (2dn - q), with q = w^2 + 4w(n-w) + (n-w)^2, the
    right-hand side is at most M^2 q / 2n and the inequality cannot hold, so
    the scan only needs to reach that point. When 2dn <= q the right-hand
    side is at least M^2 q / 2n - 5n/4, so the inequality holds again for
    every M > 5n/4d, which is below the cap: the bound abstains.
    """
    _check(n, d, w)
    p, q = 2 * d * n, _plotkin_q(n, w)
    if d == 0 or p <= q:
        return None
    cap = gc_word_count(n, w)
    last = min(p // (p - q) + 1, cap)
    first_fail = None
    for m in range(1, last + 1):
        holds = plotkin_inequality_holds(n, d, w, m)
        if first_fail is None:
            if not holds:
                first_fail = m
        elif holds:
            return None
    if first_fail is None:
        return None
    return _bound(first_fail - 1, "upper", "plotkin_integer", n, d, w)


def plotkin_upper_real(n: int, d: int, w: int) -> Bound | None:
    _check(n, d, w)
    p, q = 2 * d * n, _plotkin_q(n, w)
    if p <= q:
        return None
    return _bound(p // (p - q), "upper", "plotkin_real", n, d, w)


# ---------------------------------------------------------------------------
# sphere counting


def ball_volume(n: int, w: int, r: int) -> int:
    """Number of GC-content-w words within distance r of a fixed GC-content-w word."""
    total = 0
    for rr in range(0, min(r, n) + 1):
        for i in range(0, min(rr // 2, w, n - w) + 1):
            total += comb(w, i) * comb(n - w, i) * comb(n - 2 * i, rr - 2 * i) * 4**i
    return total


def gilbert_lower_gc(n: int, d: int, w: int) -> Bound:
    _check(n, d, w)
    d = max(d, 1)
    value = ceil_div(gc_word_count(n, w), ball_volume(n, w, d - 1))
    return _bound(value, "lower", "gilbert_gc", n, d, w)


def sphere_packing_upper(n: int, d: int, w: int) -> Bound:
    _check(n, d, w)
    d = max(d, 1)
    value = gc_word_count(n, w) // ball_volume(n, w, (d - 1) // 2)
    return _bound(value, "upper", "sphere_packing", n, d, w)


def v_count(n: int, w: int, d: int) -> int:
    """Number of GC-content-w words at distance exactly d from their reverse complement."""
    if n < 0 or w < 0 or w > n or d < 0 or d > n or (n - d) % 2:
        return 0
    if n % 2 == 0:
        m, e = n // 2, d // 2
        lo = max(0, w - m, ceil_div(w - e, 2))
        total = 0
        for i in range(lo, w // 2 + 1):
            total += (
                comb(m, i)
                * comb(m - i, w - 2 * i)
                * comb(m - w + 2 * i, e - w + 2 * i)
                * 2 ** (m + 2 * w - 4 * i)
            )
        return total
    # the middle position always differs from its own complement; it is one
    # of two letters from either class
    return 2 * (v_count(n - 1, w, d - 1) + v_count(n - 1, w - 1, d - 1))


def gilbert_lower_gcrc(n: int, d: int, w: int) -> Bound:
    _check(n, d, w)
    d = max(d, 1)
    numerator = sum(v_count(n, w, r) for r in range(d, n + 1))
    value = ceil_div(numerator, 2 * ball_volume(n, w, d - 1))
    return _bound(value, "lower", "gilbert_gcrc", n, d, w)


# ---------------------------------------------------------------------------
# recursion and aggregation


def halving(upper_gc: Bound, d: int = 1) -> Bound:
    if d <= 0:
        raise ParamError("halving needs d > 0")
    return upper_gc.extend(Step("halving"), upper_gc.value // 2)


@lru_cache(maxsize=None)
def _johnson_gc(n: int, d: int, w: int) -> Bound:
    options: list[Bound] = []
    sp = special_exact(n, d, w, GC)
    if sp is not None:
        options.append(_bound(sp, "upper", _special_name(n, d, min(w, n - w), GC), n, d, w))
    if w == 0 or w == n:
        options.append(binary_upper(n, d).extend(Step("binary_embedding", (n, d, w))))
    if d == 2:
        options.append(_bound(exact_d2(n, w, GC), "upper", "parity_product", n, w))
    for b in (plotkin_upper_integer(n, d, w), plotkin_upper_real(n, d, w)):
        if b is not None:
            options.append(b)
    options.append(sphere_packing_upper(n, d, w))
    if 0 < w < n and n - 1 >= d:
        sub = _johnson_gc(n - 1, d, w - 1)
        options.append(sub.extend(Step("shorten_gc", (n, d, w)), 2 * n * sub.value // w))
        sub = _johnson_gc(n - 1, d, w)
        options.append(sub.extend(Step("shorten_at", (n, d, w)), 2 * n * sub.value // (n - w)))
    # prefer the smaller value, then the shorter derivation
    return min(options, key=lambda b: (b.value, len(b.provenance)))


def johnson_upper(n: int, d: int, w: int, kind: ConstraintKind = GC) -> Bound:
    """Best upper bound from shortening, closed forms, Plotkin and sphere packing."""
    kind = ConstraintKind.parse(kind)
    _check(n, d, w)
    gc = _johnson_gc(n, d, w)
    if kind is GC:
        return gc
    if d == 0:
        return gc
    if kind is GC_R and n % 2:
        return halving(gc, d)
    options = [halving(gc, d)]
    sp = special_exact(n, d, w, GC_RC)
    if sp is not None:
        options.append(_bound(sp, "upper", _special_name(n, d, w, GC_RC), n, d, w))
    if d == 2:
        v = exact_d2(n, w, GC_RC)
        if v is not None:
            options.append(_bound(v, "upper", "parity_product_rc", n, w))
    best = min(options, key=lambda b: (b.value, len(b.provenance)))
    if kind is GC_R:
        best = best.extend(Step("r_rc_equivalence", (n, d, w)))
    return best


@dataclass
class Registry:
    """Sizes of explicitly constructed, verified codes."""

    entries: dict[tuple[int, int, int, ConstraintKind], tuple[int, str]] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def add(self, n: int, d: int, w: int, kind: ConstraintKind, size: int, label: str) -> None:
        key = (n, d, w, ConstraintKind.parse(kind))
        with self._lock:
            old = self.entries.get(key)
            if old is None or size > old[0]:
                self.entries[key] = (size, label)

    def best(self, n: int, d: int, w: int, kind: ConstraintKind) -> tuple[int, str, int] | None:
        """Largest registered code usable at (n, d, w, kind): any code with distance >= d."""
        kind = ConstraintKind.parse(kind)
        found = None
        for (nn, dd, ww, kk), (size, label) in self.entries.items():
            if nn == n and ww == w and kk is kind and dd >= d:
                if found is None or size > found[0]:
                    found = (size, label, dd)
        return found

    def clear(self) -> None:
        with self._lock:
            self.entries.clear()


DEFAULT_REGISTRY = Registry()


def _lower_options(n: int, d: int, w: int, kind: ConstraintKind, registry: Registry) -> Iterable[Bound]:
    sp = special_exact(n, d, w, kind)
    if sp is not None:
        yield _bound(sp, "lower", _special_name(n, d, min(w, n - w) if kind is GC else w, kind), n, d, w)
    if d == 2:
        v = exact_d2(n, w, kind)
        if v is not None:
            yield _bound(v, "lower", "parity_product" if kind is GC else "parity_product_rc", n, w)
    if kind is GC:
        yield gilbert_lower_gc(n, d, w)
    elif kind is GC_RC or n % 2 == 0:
        b = gilbert_lower_gcrc(n, d, w)
        yield b if kind is GC_RC else b.extend(Step("r_rc_equivalence", (n, d, w)))
    else:
        # some word is at distance >= d from its own reversal iff d <= 2*floor(n/2)
        yield _bound(1 if d <= 2 * (n // 2) else 0, "lower", "trivial", n, d, w)
    reg = registry.best(n, d, w, kind)
    if reg is not None:
        yield _bound(reg[0], "lower", reg[1], n, reg[2], w)


def best_bounds(
    n: int, d: int, w: int, kind: ConstraintKind = GC, registry: Registry | None = None
) -> tuple[Bound, Bound]:
    kind = ConstraintKind.parse(kind)
    _check(n, d, w)
    registry = DEFAULT_REGISTRY if registry is None else registry
    lower = max(_lower_options(n, d, w, kind, registry), key=lambda b: b.value)
    upper = johnson_upper(n, d, w, kind)
    if lower.value > upper.value:
        raise AssertionError(f"lower {lower.chain()} exceeds upper {upper.chain()}")
    return lower, upper


def bound_record(n: int, d: int, w: int, kind: ConstraintKind, lower: Bound, upper: Bound) -> dict:
    return {
        "n": n,
        "d": d,
        "w": w,
        "constraint": ConstraintKind.parse(kind).value,
        "lower": lower.value,
        "upper": upper.value,
        "method_lower": lower.method,
        "method_upper": upper.method,
        "exact": lower.value == upper.value,
    }
