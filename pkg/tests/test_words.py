import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dnagc.words import (
    BinaryWord,
    DnaWord,
    Factored,
    Single,
    TernaryWord,
    WordError,
    gc_content,
    hamming,
    iterate,
    odot,
    odot_inverse,
    oslash,
    parse_offset,
    parse_word,
    rank,
    reverse,
    reverse_complement,
    unrank,
    ORDERINGS,
)

dna_text = st.integers(1, 12).flatmap(lambda n: st.text("ACGT", min_size=n, max_size=n))


def naive_hamming(x, y):
    return sum(a != b for a, b in zip(x, y))


def test_parse_word_codes():
    assert parse_word("ACGT").codes() == (0, 1, 2, 3)
    assert parse_word("AAAA").codes() == (0, 0, 0, 0)


@pytest.mark.parametrize("bad", ["ACGX", "", "A" * 33, "acgt"])
def test_parse_word_rejects(bad):
    with pytest.raises(WordError):
        parse_word(bad)


@pytest.mark.parametrize("text,gc", [("AACG", 2), ("TTTT", 0), ("GCGC", 4)])
def test_gc_content(text, gc):
    assert gc_content(parse_word(text)) == gc


@pytest.mark.parametrize("x,y,dist", [("AACG", "ACCG", 1), ("ACGT", "ACGT", 0), ("AAAA", "TTTT", 4)])
def test_hamming(x, y, dist):
    assert hamming(parse_word(x), parse_word(y)) == dist


def test_hamming_length_mismatch():
    with pytest.raises(WordError):
        hamming(parse_word("AC"), parse_word("ACG"))


def test_reverse_complement_examples():
    assert str(reverse_complement(parse_word("AACG"))) == "CGTT"
    assert str(reverse_complement(parse_word("AT"))) == "AT"
    assert str(reverse_complement(reverse_complement(parse_word("GATTC")))) == "GATTC"


@given(dna_text)
def test_round_trip_and_rc(text):
    x = parse_word(text)
    assert str(x) == text
    rc = reverse_complement(x)
    assert str(rc) == text[::-1].translate(str.maketrans("ACGT", "TGCA"))
    assert reverse_complement(rc) == x
    assert gc_content(rc) == gc_content(x)


@given(dna_text, st.data())
def test_hamming_matches_naive_and_is_metric(text, data):
    n = len(text)
    y = data.draw(st.text("ACGT", min_size=n, max_size=n))
    z = data.draw(st.text("ACGT", min_size=n, max_size=n))
    a, b, c = map(parse_word, (text, y, z))
    assert hamming(a, b) == naive_hamming(text, y)
    assert hamming(a, b) == hamming(b, a)
    assert (hamming(a, b) == 0) == (a == b)
    assert hamming(a, c) <= hamming(a, b) + hamming(b, c)


def test_odot_examples():
    assert str(odot(BinaryWord.parse("0110"), BinaryWord.parse("1010"))) == "ACGT"
    assert str(odot(BinaryWord.parse("0000"), BinaryWord.parse("0000"))) == "TTTT"


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1))))
def test_odot_properties(args):
    n, a, b = args
    x, y = BinaryWord(n, a), BinaryWord(n, b)
    z = odot(x, y)
    assert gc_content(z) == x.weight
    assert odot_inverse(z) == (x, y)
    assert reverse(z) == odot(x.reversed(), y.reversed())


def test_odot_is_bijection_n3():
    words = {odot(BinaryWord(3, a), BinaryWord(3, b)) for a in range(8) for b in range(8)}
    assert len(words) == 64


@given(st.integers(1, 8), st.data())
def test_odot_distance_dominates(n, data):
    xs = [BinaryWord(n, data.draw(st.integers(0, 2**n - 1))) for _ in range(4)]
    x1, y1, x2, y2 = xs
    h = hamming(odot(x1, y1), odot(x2, y2))
    assert h >= max((x1.bits ^ x2.bits).bit_count(), (y1.bits ^ y2.bits).bit_count())


def _oslash_by_rules(x: str, y: str) -> str:
    # independent evaluator: walk the zero slots with an explicit counter
    out, j = [], 0
    for ch in x:
        if ch == "1":
            out.append("C")
        elif ch == "2":
            out.append("G")
        else:
            out.append("A" if y[j] == "0" else "T")
            j += 1
    return "".join(out)


def test_oslash_examples():
    assert str(oslash(TernaryWord.parse("102"), BinaryWord.parse("1"))) == "CTG"
    assert _oslash_by_rules("102", "1") == "CTG"
    assert str(oslash(TernaryWord.parse("000"), BinaryWord.parse("000"))) == "AAA"
    assert str(oslash(TernaryWord.parse("12"), BinaryWord(0, 0))) == "CG"


def test_oslash_matches_rules_exhaustively():
    for n in range(1, 5):
        for digits in itertools.product("012", repeat=n):
            x = "".join(digits)
            zeros = x.count("0")
            for ybits in itertools.product("01", repeat=zeros):
                y = "".join(ybits)
                yw = BinaryWord.parse(y) if y else BinaryWord(0, 0)
                assert str(oslash(TernaryWord.parse(x), yw)) == _oslash_by_rules(x, y)


def test_oslash_length_mismatch():
    with pytest.raises(WordError):
        oslash(TernaryWord.parse("102"), BinaryWord.parse("10"))


def test_rank_unrank_examples():
    assert rank(parse_word("AAAA"), 1) == 0
    assert str(unrank(0x59, 4, 1)) == "CCGC"
    # independent: sorted list of all n=4 words under A<C<G<T
    listing = sorted("".join(p) for p in itertools.product("ACGT", repeat=4))
    assert listing[0x59] == "CCGC"


@pytest.mark.parametrize("ordering", range(1, 7))
def test_unrank_matches_sorted_listing(ordering):
    order = ORDERINGS[ordering]
    listing = sorted(("".join(p) for p in itertools.product("ACGT", repeat=3)), key=lambda s: [order.index(c) for c in s])
    assert [str(unrank(r, 3, ordering)) for r in range(64)] == listing


@pytest.mark.parametrize("ordering", range(1, 7))
def test_rank_inverse(ordering):
    rng = random.Random(ordering)
    for r in [0, 4**6 - 1] + [rng.randrange(4**6) for _ in range(200)]:
        assert rank(unrank(r, 6, ordering), ordering) == r


def test_unrank_out_of_range():
    with pytest.raises(WordError):
        unrank(4**3, 3)


def test_iterate_single_and_factored():
    first = [str(x) for x in itertools.islice(iterate(2, Single(0, 1)), 3)]
    assert first == ["AA", "AC", "AG"]
    assert str(next(iterate(2, Factored(0, 0)))) == "TT"


@pytest.mark.parametrize("spec", [Single(0, 1), Single(7, 5), Factored(0, 0), Factored(3, 1)])
def test_iterate_is_permutation(spec):
    words = list(iterate(3, spec))
    assert len(words) == 64 and len(set(words)) == 64


def test_iterate_offset_wraps():
    words = list(iterate(2, Single(15, 1)))
    assert str(words[0]) == "TT" and str(words[1]) == "AA"


def test_parse_offset_forms():
    assert parse_offset("0x59", 2) == Single(0x59, 2)
    assert parse_offset("4e⊙95") == Factored(0x4E, 0x95)
    assert parse_offset("4eo95") == Factored(0x4E, 0x95)
    with pytest.raises(WordError):
        parse_offset("zz")


def test_dnaword_rejects_stray_bits():
    with pytest.raises(WordError):
        DnaWord(2, 1 << 4)
