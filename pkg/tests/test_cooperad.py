"""Decomposition terms, the two decomposition maps, and their laws.

The headline example (the four-letter word on three letters) is frozen
term by term; the structural laws (coassociativity, the crossing ideal,
counit shape, equivariance under relabelling) are checked over small
enumerated bases.  The filter-agreement test records that selecting
terms by crossing of the unreduced image never differs from selecting
by the reduced image.
"""

import itertools
import random
from fractions import Fraction

import pytest

from ncwords import (
    Alphabet,
    CanonicalSurjection,
    CounitUndefinedError,
    CrossingWordError,
    Lin,
    Word,
    apply_map,
    apply_surjection,
    canonicalize,
    check_coassociativity,
    counit,
    crossing_ideal_witness,
    decompose,
    decompose_along,
    decompose_noncrossing,
    enumerate_nc_basis,
    enumerate_word_basis,
    format_term,
    is_noncrossing,
    parse_word,
    reduce_word,
)

from oracles import BELL

FOUR_LETTER = "a1,a2,a1,a3"


class TestLin:
    def test_zero_pruning(self):
        assert Lin([("a", 1), ("a", -1)]) == Lin.zero()
        assert not Lin.zero()
        assert len(Lin([("a", 2), ("b", 1)])) == 2

    def test_arithmetic(self):
        x, y = Lin.basis("x"), Lin.basis("y")
        s = x + x + y
        assert s.coefficient("x") == 2
        assert s.coefficient("y") == 1
        assert s.coefficient("z") == 0
        assert s - s == Lin.zero()
        assert (-x).coefficient("x") == -1
        assert (s * Fraction(1, 2)).coefficient("x") == 1
        assert (2 * x).coefficient("x") == 2

    def test_terms_sorted_by_rendering(self):
        s = Lin([("b", 1), ("a", 2)])
        assert s.terms() == [("a", Fraction(2)), ("b", Fraction(1))]

    def test_repr(self):
        assert repr(Lin.zero()) == "0"
        assert repr(Lin.basis("w")) == "1*w"


class TestApplySurjection:
    def test_image(self):
        w = parse_word(FOUR_LETTER)
        f = CanonicalSurjection(3, 2, (1, 2, 2))
        image = apply_surjection(w, f)
        assert image.seq == (0, 1, 0, 1)
        assert image.alphabet.names == ("1", "2")

    def test_domain_mismatch(self):
        with pytest.raises(ValueError):
            apply_surjection(parse_word("ab"), CanonicalSurjection.identity(3))


class TestDecomposeAlong:
    def test_constant_keeps_word_whole(self):
        w = parse_word(FOUR_LETTER)
        term = decompose_along(w, CanonicalSurjection.constant(3))
        assert len(term.outer) == 1
        assert term.outer.alphabet.size == 1
        assert term.inner == (w,)

    def test_merging_two_letters(self):
        w = parse_word(FOUR_LETTER)
        term = decompose_along(w, CanonicalSurjection(3, 2, (1, 2, 2)))
        assert term.outer.seq == (0, 1, 0, 1)
        assert term.outer.alphabet.names == ("b1", "b23")
        assert [iw.seq for iw in term.inner] == [(0,), (0, 1)]

    def test_identity_splits_into_letters(self):
        term = decompose_along(parse_word("ab"), CanonicalSurjection.identity(2))
        assert term.outer.seq == (0, 1)
        assert term.outer.alphabet.names == ("b1", "b2")
        assert [str(iw) for iw in term.inner] == ["a", "b"]


class TestDecompose:
    def test_singleton(self):
        terms = decompose(parse_word("a"))
        assert len(terms) == 1
        assert terms[0].inner == (parse_word("a"),)

    def test_two_letters(self):
        terms = decompose(parse_word("ab"))
        assert [t.surjection.assignment for t in terms] == [(1, 1), (1, 2)]
        assert [str(t.outer) for t in terms] == ["b12", "b1,b2"]

    def test_four_letter_word_all_five_terms(self):
        lines = [format_term(t, prefer_chars=False) for t in decompose(parse_word(FOUR_LETTER))]
        assert lines == [
            "f={1,2,3} | outer=b123 | inner=[a1,a2,a1,a3]",
            "f={1,2}{3} | outer=b12,b3 | inner=[a1,a2; a3]",
            "f={1,3}{2} | outer=b13,b2 | inner=[a1,a3; a2]",
            "f={1}{2,3} | outer=b1,b23,b1,b23 | inner=[a1; a2,a3]",
            "f={1}{2}{3} | outer=b1,b2,b1,b3 | inner=[a1; a2; a3]",
        ]

    def test_term_count_is_bell_number(self):
        for k in range(1, 4):
            for w in enumerate_word_basis(Alphabet.numeric(k), 5):
                assert len(decompose(w)) == BELL[k]

    def test_rejects_non_basis_words(self):
        with pytest.raises(ValueError):
            decompose(parse_word("aa"))
        with pytest.raises(ValueError):
            decompose(parse_word("aba"))
        with pytest.raises(ValueError):
            decompose(Word(Alphabet.numeric(2), (0,)))

    def test_terms_are_reduced_and_pangrammatic(self):
        from ncwords import is_pangrammatic, is_reduced

        for w in enumerate_word_basis(Alphabet.numeric(3), 6):
            for term in decompose(w):
                assert is_reduced(term.outer) and is_pangrammatic(term.outer)
                for iw in term.inner:
                    assert is_reduced(iw) and is_pangrammatic(iw)


class TestDecomposeNoncrossing:
    def test_four_letter_word_drops_crossing_image(self):
        terms = decompose_noncrossing(parse_word(FOUR_LETTER))
        assert [t.surjection.assignment for t in terms] == [
            (1, 1, 1),
            (1, 1, 2),
            (1, 2, 1),
            (1, 2, 3),
        ]

    def test_singleton(self):
        assert len(decompose_noncrossing(parse_word("a"))) == 1

    def test_rejects_crossing_input(self):
        with pytest.raises(CrossingWordError):
            decompose_noncrossing(parse_word("abab"))

    def test_surviving_terms_are_noncrossing(self):
        for k in range(1, 4):
            for w in enumerate_nc_basis(Alphabet.numeric(k)):
                for term in decompose_noncrossing(w):
                    assert is_noncrossing(term.outer)
                    assert all(is_noncrossing(iw) for iw in term.inner)

    def test_image_filter_agrees_with_reduced_image_filter(self):
        # dropping terms by the unreduced image f(w) picks exactly the
        # same terms as dropping by the reduced image, on every word
        for k in range(1, 4):
            for w in enumerate_word_basis(Alphabet.numeric(k), 6):
                for f in [t.surjection for t in decompose(w)]:
                    image = apply_surjection(w, f)
                    assert is_noncrossing(image) == is_noncrossing(reduce_word(image))


class TestCounit:
    def test_singleton_alphabets(self):
        assert counit(parse_word("a")) == 1
        assert counit(parse_word("x")) == 1

    def test_undefined_on_larger_alphabets(self):
        with pytest.raises(CounitUndefinedError):
            counit(parse_word("ab"))

    def test_counit_shape_of_decompositions(self):
        # the constant term reproduces the word as its single inner
        # factor; the identity term reproduces it as the outer factor
        # with single-letter inners
        words = list(enumerate_word_basis(Alphabet.numeric(3), 5))
        words += enumerate_nc_basis(Alphabet.numeric(4))
        for w in words:
            terms = decompose(w)
            constant = [t for t in terms if t.surjection.is_constant]
            identity = [t for t in terms if t.surjection.is_identity]
            assert len(constant) == 1 and len(identity) == 1
            assert constant[0].inner == (w,)
            assert counit(constant[0].outer) == 1
            assert identity[0].outer.seq == w.seq
            assert all(counit(iw) == 1 for iw in identity[0].inner)


class TestCrossingIdeal:
    def test_witness_examples(self):
        w = parse_word(FOUR_LETTER)
        crossing_term = decompose_along(w, CanonicalSurjection(3, 2, (1, 2, 2)))
        assert crossing_ideal_witness(crossing_term)
        clean_term = decompose_along(parse_word("ab"), CanonicalSurjection.identity(2))
        assert not crossing_ideal_witness(clean_term)
        inner_crossing = decompose_along(parse_word("abab"), CanonicalSurjection.constant(2))
        assert crossing_ideal_witness(inner_crossing)

    def test_every_term_of_a_crossing_word_witnesses(self):
        for k in range(2, 4):
            for w in enumerate_word_basis(Alphabet.numeric(k), 6):
                if is_noncrossing(w):
                    continue
                assert all(crossing_ideal_witness(t) for t in decompose(w)), str(w)


class TestFormatTerm:
    def test_single_char_rendering(self):
        term = decompose_along(parse_word("ab"), CanonicalSurjection.constant(2))
        assert format_term(term) == "f={1,2} | outer=b12 | inner=[ab]"

    def test_comma_rendering(self):
        term = decompose_along(parse_word("ab"), CanonicalSurjection.identity(2))
        assert format_term(term, prefer_chars=False) == "f={1}{2} | outer=b1,b2 | inner=[a; b]"


def transformed_decomposition(w, perm):
    """Decompose, then push every term through the letter permutation.

    ``perm[old_id] = new_id``.  Each surjection is relabelled back to
    canonical form, the outer word follows the block relabelling, and
    each inner word is re-indexed by its block's new increasing order.
    """
    k = w.alphabet.size
    inv = [0] * k
    for old, new in enumerate(perm):
        inv[new] = old
    out = []
    for term in decompose(w):
        f = term.surjection
        raw = [f.assignment[inv[i]] for i in range(k)]
        f2, relabel = canonicalize(raw)
        outer_seq = tuple(relabel[v + 1] - 1 for v in term.outer.seq)
        inners = [None] * f2.m
        for t, old_block in enumerate(f.blocks(), start=1):
            new_block = sorted(perm[e - 1] + 1 for e in old_block)
            rank = {e: i for i, e in enumerate(new_block)}
            reindex = [rank[perm[e - 1] + 1] for e in old_block]
            iw = term.inner[t - 1]
            inners[relabel[t] - 1] = (len(old_block), tuple(reindex[x] for x in iw.seq))
        out.append((f2.assignment, outer_seq, tuple(inners)))
    return sorted(out)


class TestEquivariance:
    def test_decompose_commutes_with_relabelling(self):
        rng = random.Random(42)
        pool = [w for k in (2, 3) for w in enumerate_word_basis(Alphabet.numeric(k), 6)]
        for w in rng.sample(pool, 40):
            k = w.alphabet.size
            perm = list(range(k))
            rng.shuffle(perm)
            relabelled = apply_map(w, dict(enumerate(perm)), Alphabet.numeric(k))
            direct = sorted(
                (
                    t.surjection.assignment,
                    t.outer.seq,
                    tuple((iw.alphabet.size, iw.seq) for iw in t.inner),
                )
                for t in decompose(relabelled)
            )
            assert transformed_decomposition(w, tuple(perm)) == direct

    def test_exhaustive_at_size_three(self):
        w = parse_word(FOUR_LETTER)
        for perm in itertools.permutations(range(3)):
            relabelled = apply_map(w, dict(enumerate(perm)), Alphabet.numeric(3))
            direct = sorted(
                (
                    t.surjection.assignment,
                    t.outer.seq,
                    tuple((iw.alphabet.size, iw.seq) for iw in t.inner),
                )
                for t in decompose(relabelled)
            )
            assert transformed_decomposition(w, perm) == direct


class TestCoassociativity:
    def test_examples(self):
        assert check_coassociativity(parse_word("a"))
        assert check_coassociativity(parse_word("ab"))
        assert check_coassociativity(parse_word(FOUR_LETTER))
        assert check_coassociativity(parse_word("abab"))

    def test_noncrossing_examples(self):
        assert check_coassociativity(parse_word("abcb"), noncrossing=True)
        assert check_coassociativity(parse_word(FOUR_LETTER), noncrossing=True)

    def test_noncrossing_rejects_crossing_word(self):
        with pytest.raises(CrossingWordError):
            check_coassociativity(parse_word("abab"), noncrossing=True)

    def test_rejects_non_basis_words(self):
        with pytest.raises(ValueError):
            check_coassociativity(parse_word("aa"))
