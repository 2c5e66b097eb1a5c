import random

import pytest

from dnagc.codes import CodeParams, ConstraintKind, write_code
from dnagc.lexicode import construct
from dnagc.verify import exact_max_code, exact_max_words, hamming_str, verify_text, verify_words
from dnagc.words import Single, hamming, parse_word

GC, GC_RC = ConstraintKind.GC, ConstraintKind.GC_RC


@pytest.mark.parametrize("w", [1, 2, 3])
def test_four_word_witness(w):
    n = 2 * w
    words = ["A" * w + "C" * w, "C" * w + "A" * w, "T" * w + "G" * w, "G" * w + "T" * w]
    assert verify_words(words, CodeParams(n, n, w, GC)).passed
    assert verify_words(words[:2], CodeParams(n, n, w, GC_RC)).passed


def test_duplicate_detected():
    r = verify_words(["AACC", "CCAA", "AACC"], CodeParams(4, 2, 2, GC))
    assert not r.passed and r.duplicate_count == 1


def test_cross_distance_includes_self_pairs():
    # AT is its own reverse complement
    r = verify_words(["AT"], CodeParams(2, 1, 0, GC_RC))
    assert r.min_rc_cross_distance == 0 and not r.passed


def test_independent_distance_agrees_with_packed():
    rng = random.Random(0)
    for n in (3, 7, 12):
        words = ["".join(rng.choice("ACGT") for _ in range(n)) for _ in range(40)]
        expected = min(hamming(parse_word(a), parse_word(b)) for i, a in enumerate(words) for b in words[i + 1 :] if a != b)
        r = verify_words(sorted(set(words)), CodeParams(n, 1, 0, GC))
        assert r.min_pairwise_distance == expected
        assert all(hamming_str(a, b) == hamming(parse_word(a), parse_word(b)) for a in words for b in words)


def test_file_round_trip_and_mutation():
    code = construct(CodeParams(6, 3, 3, GC_RC), Single(0, 1))
    text = write_code(code)
    assert verify_text(text).passed
    lines = text.splitlines()
    first = lines[1]
    lines[2] = first[:-1] + ("A" if first[-1] != "A" else "T")  # one edit away from a codeword
    assert not verify_text("\n".join(lines) + "\n").passed


def test_exact_oracle_examples():
    assert exact_max_code(4, 4, 2, GC) == 4
    assert exact_max_code(2, 2, 1, GC) == 4
    assert exact_max_code(4, 2, 2, GC_RC) == 24


def test_exact_oracle_returns_valid_code():
    words = exact_max_words(4, 3, 2, GC_RC)
    assert len(words) == 6
    assert verify_words(words, CodeParams(4, 3, 2, GC_RC)).passed


def test_exact_oracle_node_cap():
    assert exact_max_code(5, 3, 2, GC, node_cap=1) is None


def test_exact_oracle_symmetric_under_relabeling():
    # swapping A<->T and C<->G maps the instance to itself
    swap = str.maketrans("ACGT", "TGCA")
    words = exact_max_words(4, 3, 2, GC)
    mapped = [x.translate(swap) for x in words]
    assert verify_words(mapped, CodeParams(4, 3, 2, GC)).passed
    assert len(mapped) == exact_max_code(4, 3, 2, GC)
