import itertools
import random
from math import comb

import pytest

from dnagc.bounds import exact_d2
from dnagc.codes import Code, CodeParams, ConstraintKind
from dnagc.products import (
    ComponentCode,
    binary_cw_lexicode,
    binary_lexicode,
    odd_weight_r_code,
    parity_code,
    product_gc,
    product_ternary,
    product_witness,
    r_to_rc,
    ternary_cw_lexicode,
)
from dnagc.verify import verify
from dnagc.words import BinaryWord, DnaWord, TernaryWord, WordError, gc_content, hamming, oslash, reverse, reverse_complement

GC, GC_RC, GC_R = ConstraintKind.GC, ConstraintKind.GC_RC, ConstraintKind.GC_R


def bstrs(code):
    return [str(x) for x in code]


def test_parity_code():
    assert bstrs(parity_code(2)) == ["00", "11"]
    c = parity_code(4)
    assert len(c) == 8
    assert min((a.bits ^ b.bits).bit_count() for a, b in itertools.combinations(c.words, 2)) == 2
    assert bstrs(parity_code(1)) == ["0"]


def test_binary_lexicodes():
    c = binary_cw_lexicode(4, 2, 2)
    assert sorted(bstrs(c)) == sorted("".join(p) for p in itertools.product("01", repeat=4) if p.count("1") == 2)
    assert len(binary_lexicode(4, 2)) == 8
    t = ternary_cw_lexicode(3, 3, 3)
    assert len(t) >= 2
    assert all(sum(a != b for a, b in zip(x.digits, y.digits)) >= 3 for x, y in itertools.combinations(t.words, 2))


def test_odd_weight_r_code():
    assert len(odd_weight_r_code(2)) == 1
    c = odd_weight_r_code(4)
    assert len(c) == 4
    for x in c:
        for y in c:
            assert (x.bits ^ y.reversed().bits).bit_count() >= 2
    with pytest.raises(ValueError):
        odd_weight_r_code(3)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_odd_weight_r_code_size(n):
    assert len(odd_weight_r_code(n)) == 2 ** (n - 2)


def test_product_gc_examples():
    code = product_gc(binary_cw_lexicode(4, 2, 2), parity_code(4))
    assert len(code) == 48 == exact_d2(4, 2, GC)
    assert verify(code).passed
    single = product_gc(ComponentCode(2, 4, 2, [BinaryWord.parse("1100")], 2), ComponentCode(2, 4, 2, [BinaryWord.parse("0000")]))
    assert bstrs(single) == ["CCTT"]
    r = product_gc(binary_cw_lexicode(4, 2, 2), odd_weight_r_code(4))
    assert len(r) == 24 and r.params.kind is GC_R
    assert verify(r).passed


def test_product_gc_length_mismatch():
    with pytest.raises(WordError):
        product_gc(binary_cw_lexicode(4, 2, 2), parity_code(5))


def test_product_ternary_examples():
    t = ComponentCode(3, 3, 2, [TernaryWord.parse("110"), TernaryWord.parse("220")], w=2)
    b = ComponentCode(2, 1, 1, [BinaryWord.parse("0")])
    code = product_ternary(t, b)
    assert bstrs(code) == ["CCA", "GGA"]
    assert hamming(*code.words) == 2
    t = ComponentCode(3, 2, 2, [TernaryWord.parse("12")], w=2)
    assert bstrs(product_ternary(t, ComponentCode(2, 0, 2, [BinaryWord(0, 0)]))) == ["CG"]
    with pytest.raises(WordError):
        product_ternary(t, ComponentCode(2, 1, 1, [BinaryWord.parse("0")]))


def test_product_ternary_rejects_unsound_reverse_split():
    # counterexample: n=7, w=1, d=3 with only the binary factor reverse-constrained
    t = ternary_cw_lexicode(7, 3, 1)
    b = binary_lexicode(6, 3, r_constrained=True)
    words = [oslash(x, y) for x in t for y in b]
    assert min(hamming(a, reverse(c)) for a in words for c in words) < 3
    with pytest.raises(ValueError):
        product_ternary(t, b)


def test_r_to_rc_single_word():
    code = Code(CodeParams(4, 2, 2, GC_R), [DnaWord.from_codes([1, 1, 3, 3])])
    assert str(r_to_rc(code).words[0]) == "GGTT"


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_r_to_rc_even_exact(n):
    rng = random.Random(n)
    words = [DnaWord(n, rng.randrange(4**n)) for _ in range(30)]
    code = Code(CodeParams(n, 1, 0, GC_R), words)
    # build words without GC restriction: bypass params check via a direct transform
    half = n // 2
    mask = ((1 << (2 * half)) - 1) << (2 * (n - half))
    ys = [DnaWord(n, x.bits ^ mask) for x in words]
    for xi, yi in zip(words, ys):
        assert gc_content(xi) == gc_content(yi)
        for xj, yj in zip(words, ys):
            assert hamming(xi, reverse(xj)) == hamming(yi, reverse_complement(yj))
            assert hamming(xi, xj) == hamming(yi, yj)


@pytest.mark.parametrize("n", [5, 7])
def test_r_to_rc_odd_within_one(n):
    rng = random.Random(n)
    words = [DnaWord(n, rng.randrange(4**n)) for _ in range(40)]
    half = n // 2
    mask = ((1 << (2 * half)) - 1) << (2 * (n - half))
    ys = [DnaWord(n, x.bits ^ mask) for x in words]
    for xi, yi in zip(words, ys):
        for xj, yj in zip(words, ys):
            assert abs(hamming(xi, reverse(xj)) - hamming(yi, reverse_complement(yj))) <= 1


@pytest.mark.parametrize("n", range(2, 9))
def test_d2_witnesses_meet_closed_forms(n):
    for w in range(n + 1):
        gc = product_witness(n, 2, w, GC)
        assert len(gc) == comb(n, w) * 2 ** (n - 1)
        assert verify(gc).passed
        assert all(gc_content(x) == w for x in gc.words)
        if n % 2 == 0:
            rc = product_witness(n, 2, w, GC_RC)
            assert len(rc) == comb(n, w) * 2 ** (n - 2)
            assert verify(rc).passed


@pytest.mark.parametrize("n,d,w,kind", [(6, 3, 3, GC), (6, 4, 3, GC_RC), (7, 3, 3, GC_RC), (8, 4, 4, GC_R), (7, 4, 2, GC)])
def test_product_witness_verifies(n, d, w, kind):
    code = product_witness(n, d, w, kind)
    assert len(code) > 0
    assert code.params.kind is kind
    assert verify(code).passed


def test_product_size_is_product_of_sizes():
    b1, b2 = binary_cw_lexicode(6, 3, 3), binary_lexicode(6, 3)
    assert len(product_gc(b1, b2)) == len(b1) * len(b2)
    t, b = ternary_cw_lexicode(6, 3, 2), binary_lexicode(4, 3)
    code = product_ternary(t, b)
    assert len(code) == len(t) * len(b)
    assert all(gc_content(x) == 2 for x in code.words)


@pytest.mark.parametrize("n,d,w", [(4, 2, 2), (6, 3, 2), (5, 2, 3), (3, 1, 0), (3, 1, 3)])
def test_products_match_elementwise_maps(n, d, w):
    from dnagc.words import odot, oslash

    b1, b2 = binary_cw_lexicode(n, d, w), binary_lexicode(n, d)
    assert product_gc(b1, b2).words == [odot(x, y) for x in b1 for y in b2]
    t = ternary_cw_lexicode(n, d, w)
    b = binary_lexicode(n - w, d)
    assert product_ternary(t, b).words == [oslash(x, y) for x in t for y in b]


@pytest.mark.parametrize("n", [1, 3, 5, 9])
def test_odd_rc_witness_never_empty(n):
    for d in range(1, n + 1):
        for w in range(n + 1):
            code = product_witness(n, d, w, GC_RC)
            assert len(code) >= 1
            assert verify(code).passed
