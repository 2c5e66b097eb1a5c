import itertools

import numpy as np
import pytest

from dnagc.codes import ConstraintKind

_IDX = {c: i for i, c in enumerate("ACGT")}


def as_array(words):
    return np.array([[_IDX[c] for c in str(x)] for x in words], dtype=np.int8)


def image_text(x: str, kind: ConstraintKind) -> str:
    if kind is ConstraintKind.GC_R:
        return x[::-1]
    return x[::-1].translate(str.maketrans("ACGT", "TGCA"))


def unextendable(code) -> list[str]:
    """GC-w words (valid on their own) that could still be added to ``code``."""
    p = code.params
    acc = [str(x) for x in code.words]
    arrays = [as_array(acc)]
    if p.kind is not ConstraintKind.GC:
        arrays.append(as_array([image_text(x, p.kind) for x in acc]))
    blockers = np.concatenate(arrays) if acc else np.zeros((0, p.n), dtype=np.int8)
    members = set(acc)
    free = []
    for tup in itertools.product("ACGT", repeat=p.n):
        y = "".join(tup)
        if y in members or sum(c in "CG" for c in y) != p.w:
            continue
        if p.kind is not ConstraintKind.GC:
            if sum(a != b for a, b in zip(y, image_text(y, p.kind))) < p.d:
                continue
        if blockers.shape[0] == 0 or (blockers != as_array([y])[0]).sum(axis=1).min() >= p.d:
            free.append(y)
    return free


@pytest.fixture
def fresh_registry():
    from dnagc.bounds import Registry

    return Registry()
