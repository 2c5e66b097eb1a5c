"""DNA, binary and ternary words.

DNA words are packed two bits per position with A=0, C=1, G=2, T=3 and
position 1 in the most significant pair. Orderings never change the
storage form; they only permute digits when ranking.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

ALPHABET = "ACGT"
A, C, G, T = 0, 1, 2, 3
MAX_LENGTH = 32

_LANE_LO = 0x5555_5555_5555_5555

# The six nucleotide orders used for lexicographic listing, keyed 1..6.
ORDERINGS = {
    1: "ACGT",
    2: "CGAT",
    3: "ATCG",
    4: "CATG",
    5: "CAGT",
    6: "ACTG",
}


class WordError(ValueError):
    pass


def complement(x: int) -> int:
    return x ^ 3


def gc_class(x: int) -> int:
    return 1 if x in (C, G) else 0


def _lane_mask(n: int) -> int:
    return _LANE_LO & ((1 << (2 * n)) - 1)


def _full_mask(n: int) -> int:
    return (1 << (2 * n)) - 1


@dataclass(frozen=True, slots=True)
class DnaWord:
    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise WordError(f"length {self.n} outside 1..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> (2 * self.n):
            raise WordError("bits set above the last position")

    @classmethod
    def from_codes(cls, codes: Sequence[int]) -> "DnaWord":
        bits = 0
        for c in codes:
            if c not in (0, 1, 2, 3):
                raise WordError(f"invalid nucleotide code {c!r}")
            bits = (bits << 2) | c
        return cls(len(codes), bits)

    def codes(self) -> tuple[int, ...]:
        n, b = self.n, self.bits
        return tuple((b >> (2 * (n - 1 - i))) & 3 for i in range(n))

    def __str__(self) -> str:
        return "".join(ALPHABET[c] for c in self.codes())

    def __repr__(self) -> str:
        return f"DnaWord({str(self)!r})"

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True, slots=True)
class BinaryWord:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise WordError("invalid binary word")

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        if text and set(text) - {"0", "1"}:
            raise WordError(f"invalid binary word {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    def digits(self) -> tuple[int, ...]:
        return tuple((self.bits >> (self.n - 1 - i)) & 1 for i in range(self.n))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def reversed(self) -> "BinaryWord":
        return BinaryWord(self.n, int(format(self.bits, f"0{self.n}b")[::-1], 2) if self.n else 0)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True, slots=True)
class TernaryWord:
    digits: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (0, 1, 2) for x in self.digits):
            raise WordError(f"invalid ternary digits {self.digits!r}")

    @classmethod
    def parse(cls, text: str) -> "TernaryWord":
        if set(text) - {"0", "1", "2"}:
            raise WordError(f"invalid ternary word {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.digits)

    @property
    def weight(self) -> int:
        return sum(1 for x in self.digits if x)

    def reversed(self) -> "TernaryWord":
        return TernaryWord(self.digits[::-1])

    def __str__(self) -> str:
        return "".join(map(str, self.digits))

    def __len__(self) -> int:
        return len(self.digits)


_WORD_RE = re.compile(r"[ACGT]+")


def parse_word(text: str) -> DnaWord:
    if not text:
        raise WordError("empty word")
    if len(text) > MAX_LENGTH:
        raise WordError(f"word longer than {MAX_LENGTH}")
    if not _WORD_RE.fullmatch(text):
        bad = next(ch for ch in text if ch not in ALPHABET)
        raise WordError(f"invalid character {bad!r} in {text!r}")
    return DnaWord.from_codes([ALPHABET.index(ch) for ch in text])


def gc_content(x: DnaWord) -> int:
    # C=01 and G=10 are exactly the lanes whose two bits differ
    return ((x.bits ^ (x.bits >> 1)) & _lane_mask(x.n)).bit_count()


def hamming(x: DnaWord, y: DnaWord) -> int:
    if x.n != y.n:
        raise WordError(f"length mismatch: {x.n} vs {y.n}")
    z = x.bits ^ y.bits
    return ((z | (z >> 1)) & _lane_mask(x.n)).bit_count()


def _reverse_lanes(bits: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 2) | (bits & 3)
        bits >>= 2
    return out


def reverse(x: DnaWord) -> DnaWord:
    return DnaWord(x.n, _reverse_lanes(x.bits, x.n))


def complement_word(x: DnaWord) -> DnaWord:
    return DnaWord(x.n, x.bits ^ _full_mask(x.n))


def reverse_complement(x: DnaWord) -> DnaWord:
    return DnaWord(x.n, _reverse_lanes(x.bits, x.n) ^ _full_mask(x.n))


def binary_hamming(x: BinaryWord, y: BinaryWord) -> int:
    if x.n != y.n:
        raise WordError(f"length mismatch: {x.n} vs {y.n}")
    return (x.bits ^ y.bits).bit_count()


def ternary_hamming(x: TernaryWord, y: TernaryWord) -> int:
    if x.n != y.n:
        raise WordError(f"length mismatch: {x.n} vs {y.n}")
    return sum(a != b for a, b in zip(x.digits, y.digits))


# (x_i, y_i) -> nucleotide; x carries the GC class.
_ODOT = {(0, 1): A, (1, 0): C, (1, 1): G, (0, 0): T}


def odot(x: BinaryWord, y: BinaryWord) -> DnaWord:
    """Combine two binary words into one DNA word whose GC-content is weight(x)."""
    if x.n != y.n:
        raise WordError(f"length mismatch: {x.n} vs {y.n}")
    return DnaWord.from_codes([_ODOT[p] for p in zip(x.digits(), y.digits())])


def odot_inverse(z: DnaWord) -> tuple[BinaryWord, BinaryWord]:
    inv = {v: k for k, v in _ODOT.items()}
    pairs = [inv[c] for c in z.codes()]
    xs = "".join(str(p[0]) for p in pairs)
    ys = "".join(str(p[1]) for p in pairs)
    return BinaryWord.parse(xs), BinaryWord.parse(ys)


def oslash(x: TernaryWord, y: BinaryWord) -> DnaWord:
    """Embed a ternary word and a binary word into a DNA word.

    Nonzero entries of ``x`` become C (1) or G (2); the j-th zero of ``x``,
    counted left to right, becomes A or T according to the j-th bit of ``y``.
    """
    zeros = x.n - x.weight
    if y.n != zeros:
        raise WordError(f"binary word has length {y.n}, ternary word has {zeros} zeros")
    ybits = iter(y.digits())
    codes = []
    for xi in x.digits:
        if xi == 1:
            codes.append(C)
        elif xi == 2:
            codes.append(G)
        else:
            codes.append(T if next(ybits) else A)
    return DnaWord.from_codes(codes)


def _ordering(index: int) -> str:
    try:
        return ORDERINGS[index]
    except KeyError:
        raise WordError(f"ordering must be one of 1..6, got {index!r}") from None


def digit_to_code(index: int) -> tuple[int, ...]:
    """Map rank digit -> packed nucleotide code for ordering ``index``."""
    return tuple(ALPHABET.index(ch) for ch in _ordering(index))


def rank(x: DnaWord, ordering: int = 1) -> int:
    to_digit = {code: d for d, code in enumerate(digit_to_code(ordering))}
    r = 0
    for c in x.codes():
        r = 4 * r + to_digit[c]
    return r


def unrank(r: int, n: int, ordering: int = 1) -> DnaWord:
    if not 0 <= r < 4**n:
        raise WordError(f"rank {r} out of range for n={n}")
    table = digit_to_code(ordering)
    codes = []
    for _ in range(n):
        codes.append(table[r & 3])
        r >>= 2
    return DnaWord.from_codes(codes[::-1])


@dataclass(frozen=True)
class Single:
    rank: int = 0
    ordering: int = 1

    def validate(self, n: int) -> None:
        _ordering(self.ordering)
        if not 0 <= self.rank < 4**n:
            raise WordError(f"offset {self.rank:x} out of range for n={n}")

    def __str__(self) -> str:
        return f"{self.rank:x}"


@dataclass(frozen=True)
class Factored:
    rank1: int = 0
    rank2: int = 0

    def validate(self, n: int) -> None:
        if not (0 <= self.rank1 < 2**n and 0 <= self.rank2 < 2**n):
            raise WordError(f"factored offsets {self} out of range for n={n}")

    @property
    def ordering(self) -> None:
        return None

    def __str__(self) -> str:
        return f"{self.rank1:x}⊙{self.rank2:x}"


OffsetSpec = Single | Factored


def parse_hex(text: str) -> int:
    text = text.strip().lower()
    if text.startswith("0x"):
        text = text[2:]
    if not text or not re.fullmatch(r"[0-9a-f]+", text):
        raise WordError(f"not a base-16 offset: {text!r}")
    return int(text, 16)


def parse_offset(text: str, ordering: int = 1) -> OffsetSpec:
    """Parse ``"59"``, ``"0x59"`` or a factored pair ``"4e⊙95"`` / ``"4eo95"``."""
    for sep in ("⊙", "o", ","):
        if sep in text:
            a, b = text.split(sep, 1)
            return Factored(parse_hex(a), parse_hex(b))
    return Single(parse_hex(text), ordering)


def iterate(n: int, spec: OffsetSpec) -> Iterator[DnaWord]:
    """Yield all 4**n words in the scan order defined by ``spec``."""
    spec.validate(n)
    if isinstance(spec, Single):
        total = 4**n
        for k in range(total):
            yield unrank((spec.rank + k) % total, n, spec.ordering)
    else:
        size = 2**n
        for i in range(size):
            x = BinaryWord(n, (i + spec.rank1) % size)
            for j in range(size):
                yield odot(x, BinaryWord(n, (j + spec.rank2) % size))
