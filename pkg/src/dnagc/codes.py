"""Code parameters, code containers and the plain-text code file format.

A code file is a few ``# key=value ...`` header lines followed by one word
per line, in acceptance order::

    # n=4 d=2 w=2 constraint=gc ordering=1 offset=0
    AACC
    ...
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .words import DnaWord, parse_word


class ConstraintKind(enum.Enum):
    GC = "gc"
    GC_RC = "gcrc"
    GC_R = "gcr"

    @classmethod
    def parse(cls, text: str | "ConstraintKind") -> "ConstraintKind":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower().replace("_", "").replace(",", ""))
        except ValueError:
            raise ValueError(f"unknown constraint {text!r}; expected gc, gcrc or gcr") from None

    def __str__(self) -> str:
        return self.value


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    n: int
    d: int
    w: int
    kind: ConstraintKind = ConstraintKind.GC

    def __post_init__(self):
        object.__setattr__(self, "kind", ConstraintKind.parse(self.kind))
        if self.n < 1:
            raise ParamError(f"n must be positive, got {self.n}")
        if not 0 <= self.w <= self.n:
            raise ParamError(f"w={self.w} outside 0..{self.n}")
        if not 1 <= self.d <= self.n:
            raise ParamError(f"d={self.d} outside 1..{self.n}")


@dataclass
class Code:
    params: CodeParams
    words: list[DnaWord]
    meta: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def packed(self) -> np.ndarray:
        return np.array([x.bits for x in self.words], dtype=np.int64)

    @classmethod
    def from_packed(cls, params: CodeParams, bits: Iterable[int], meta=None) -> "Code":
        n = params.n
        return cls(params, [DnaWord(n, int(b)) for b in bits], dict(meta or {}))


def format_header(fields: dict[str, object]) -> str:
    return "# " + " ".join(f"{k}={v}" for k, v in fields.items())


def parse_header(lines: Sequence[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for line in lines:
        for tok in line.lstrip("#").split():
            if "=" in tok:
                k, v = tok.split("=", 1)
                out[k] = v
    return out


def write_code(code: Code, path: str | Path | None = None) -> str:
    p = code.params
    fields: dict[str, object] = {"n": p.n, "d": p.d, "w": p.w, "constraint": p.kind.value}
    fields.update(code.meta)
    text = format_header(fields) + "\n" + "".join(f"{x}\n" for x in code.words)
    if path is not None:
        Path(path).write_text(text)
    return text


def read_code_text(text: str) -> Code:
    header = [ln for ln in text.splitlines() if ln.startswith("#")]
    body = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    h = parse_header(header)
    try:
        n, d, w = int(h["n"]), int(h["d"]), int(h["w"])
    except KeyError as e:
        raise ValueError(f"code file header lacks {e.args[0]!r}") from None
    params = CodeParams(n, d, w, ConstraintKind.parse(h.get("constraint", "gc")))
    meta = {k: v for k, v in h.items() if k not in ("n", "d", "w", "constraint")}
    words = [parse_word(ln) for ln in body]
    for x in words:
        if x.n != n:
            raise ValueError(f"word {x} has length {x.n}, header says n={n}")
    return Code(params, words, meta)


def read_code(path: str | Path) -> Code:
    return read_code_text(Path(path).read_text())
