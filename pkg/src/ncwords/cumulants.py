"""Cumulants from words, and direct partition-sum counterparts.

The central operation is the word cumulant: for a reduced pangrammatic
non-crossing word ``w`` with one variable per letter, it is defined by
the triangular system

    expect_word(E, w, assign)
        = sum over canonical surjections f of the alphabet
              with a non-crossing unreduced image f(w)
          of the product over blocks B of
              word_cumulant(reduce(w restricted to B), assign on B)

The constant surjection always survives the image filter and contributes
the cumulant of ``w`` itself, so the system solves by recursion on the
alphabet size, every block being strictly smaller.

Specializing the word recovers the classical families:

- the ascending word ``1, 2, ..., N`` gives free cumulants, and
- the peak word ``1, 2, ..., N, N-1, ..., 2`` gives Boolean cumulants.

``free_cumulant_direct``, ``boolean_cumulant``, and ``classical_cumulant``
solve the corresponding moment-cumulant systems by direct enumeration of
non-crossing, interval, and arbitrary set partitions.  They share no
logic with the word recursion (they even enumerate their partitions
independently), which is what makes the agreement tests meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .probability import MomentFunctional, expect_word, first_occurrence_order
from .surjections import enumerate_canonical_surjections, enumerate_nc_partitions
from .words import (
    Word,
    ascending_word,
    is_noncrossing,
    is_noncrossing_seq,
    is_pangrammatic,
    is_reduced,
    reduce_word,
    render_word,
    restrict,
)
from .cooperad import CrossingWordError


class CumulantTable:
    """Word cumulants of one moment functional, with memoization.

    The memo key is the word relabelled so that letters appear in first
    occurrence order, together with the variable assignment in the same
    order, so structurally identical queries share an entry.  Entries are
    written at most once per key with identical values, so concurrent
    use on one table is safe.
    """

    def __init__(self, E: MomentFunctional) -> None:
        self.E = E
        self._memo: dict[tuple[tuple[int, ...], tuple[str, ...]], Fraction] = {}

    def _key(self, w: Word, assign: tuple[str, ...]) -> tuple[tuple[int, ...], tuple[str, ...]]:
        order = first_occurrence_order(w)
        seq = tuple(order.rank_of(x + 1) - 1 for x in w.seq)
        names = tuple(assign[e - 1] for e in order.by_rank())
        return seq, names

    def word_cumulant(self, w: Word, assign: Sequence[str]) -> Fraction:
        """The cumulant of a reduced pangrammatic non-crossing word."""
        assign = tuple(assign)
        if len(assign) != w.alphabet.size:
            raise ValueError(
                f"assignment names {len(assign)} variables for an alphabet of size {w.alphabet.size}"
            )
        if not is_pangrammatic(w):
            raise ValueError(f"word {render_word(w)!r} does not use every alphabet letter")
        if not is_reduced(w):
            raise ValueError(f"word {render_word(w)!r} is not reduced")
        if not is_noncrossing(w):
            raise CrossingWordError(f"word {render_word(w)!r} is crossing")
        return self._cumulant(w, assign)

    def _cumulant(self, w: Word, assign: tuple[str, ...]) -> Fraction:
        key = self._key(w, assign)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        total = expect_word(self.E, w, assign)
        for f in enumerate_canonical_surjections(w.alphabet.size):
            if f.is_constant:
                continue
            if not is_noncrossing_seq(tuple(f.assignment[x] for x in w.seq)):
                continue
            prod = Fraction(1)
            for block in f.blocks():
                ids = tuple(e - 1 for e in block)
                sub_w = reduce_word(restrict(w, ids))
                sub_assign = tuple(assign[i] for i in ids)
                prod *= self._cumulant(sub_w, sub_assign)
            total -= prod
        self._memo[key] = total
        return total

    def free_cumulant(self, variables: Sequence[str]) -> Fraction:
        """The free cumulant, via the ascending word."""
        vs = tuple(variables)
        if not vs:
            raise ValueError("at least one variable is required")
        return self._cumulant(ascending_word(len(vs)), vs)


def word_cumulant(E: MomentFunctional, w: Word, assign: Sequence[str]) -> Fraction:
    """One-shot word cumulant; use :class:`CumulantTable` for batches."""
    return CumulantTable(E).word_cumulant(w, assign)


def free_cumulant(E: MomentFunctional, variables: Sequence[str]) -> Fraction:
    """The free cumulant of the given variables, via the word recursion."""
    return CumulantTable(E).free_cumulant(variables)


Blocks = tuple[tuple[int, ...], ...]


def _iter_noncrossing_blocks(elements: tuple[int, ...]) -> Iterator[Blocks]:
    """Non-crossing partitions of an ordered tuple of positions.

    The block of the first element is chosen freely; its chosen elements
    cut the remainder into gaps, and any other block must stay inside a
    single gap, so the gaps partition independently.
    """
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    r = len(rest)
    for mask in range(1 << r):
        chosen = tuple(rest[i] for i in range(r) if mask >> i & 1)
        block = (first,) + chosen
        gaps: list[list[int]] = [[] for _ in range(len(chosen) + 1)]
        g = 0
        for i in range(r):
            if mask >> i & 1:
                g += 1
            else:
                gaps[g].append(rest[i])
        combos: list[Blocks] = [()]
        for gap in gaps:
            new: list[Blocks] = []
            for sub in _iter_noncrossing_blocks(tuple(gap)):
                for prefix in combos:
                    new.append(prefix + sub)
            combos = new
        for tail in combos:
            yield (block,) + tail


def _iter_set_partitions(elements: tuple[int, ...]) -> Iterator[Blocks]:
    """All set partitions of a tuple of positions: the first element
    either starts a new block or joins one of an existing partition."""
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for part in _iter_set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1 :]


def _iter_interval_blocks(n: int) -> Iterator[Blocks]:
    """Interval partitions of ``0..n-1``: one block per run between cuts."""
    for mask in range(1 << (n - 1)):
        blocks: list[tuple[int, ...]] = []
        start = 0
        for i in range(n - 1):
            if mask >> i & 1:
                blocks.append(tuple(range(start, i + 1)))
                start = i + 1
        blocks.append(tuple(range(start, n)))
        yield tuple(blocks)


def free_cumulant_direct(E: MomentFunctional, variables: Sequence[str]) -> Fraction:
    """The free cumulant by direct non-crossing partition recursion.

    Solves ``E(v1...vN) = sum over non-crossing partitions of the product
    of block cumulants`` triangularly.  Independent of the word route.
    """
    vs = tuple(variables)
    if not vs:
        raise ValueError("at least one variable is required")
    memo: dict[tuple[str, ...], Fraction] = {}

    def kappa(t: tuple[str, ...]) -> Fraction:
        hit = memo.get(t)
        if hit is not None:
            return hit
        total = E.expect(t)
        for blocks in _iter_noncrossing_blocks(tuple(range(len(t)))):
            if len(blocks) == 1:
                continue
            prod = Fraction(1)
            for b in blocks:
                prod *= kappa(tuple(t[i] for i in b))
            total -= prod
        memo[t] = total
        return total

    return kappa(vs)


def boolean_cumulant(E: MomentFunctional, variables: Sequence[str]) -> Fraction:
    """The Boolean cumulant, by interval partition recursion."""
    vs = tuple(variables)
    if not vs:
        raise ValueError("at least one variable is required")
    memo: dict[tuple[str, ...], Fraction] = {}

    def bc(t: tuple[str, ...]) -> Fraction:
        hit = memo.get(t)
        if hit is not None:
            return hit
        total = E.expect(t)
        for blocks in _iter_interval_blocks(len(t)):
            if len(blocks) == 1:
                continue
            prod = Fraction(1)
            for b in blocks:
                prod *= bc(tuple(t[i] for i in b))
            total -= prod
        memo[t] = total
        return total

    return bc(vs)


def classical_cumulant(E: MomentFunctional, variables: Sequence[str]) -> Fraction:
    """The classical cumulant, by recursion over all set partitions.

    Only defined for powers of a single variable: classical cumulants
    presuppose commuting arguments, and this package does not symmetrize,
    so mixed argument tuples are rejected.
    """
    vs = tuple(variables)
    if not vs:
        raise ValueError("at least one variable is required")
    if len(set(vs)) != 1:
        raise ValueError(
            f"classical cumulants take powers of a single variable, got {sorted(set(vs))}"
        )
    memo: dict[int, Fraction] = {}
    v = vs[0]

    def cc(n: int) -> Fraction:
        hit = memo.get(n)
        if hit is not None:
            return hit
        total = E.expect((v,) * n)
        for blocks in _iter_set_partitions(tuple(range(n))):
            if len(blocks) == 1:
                continue
            prod = Fraction(1)
            for b in blocks:
                prod *= cc(len(b))
            total -= prod
        memo[n] = total
        return total

    return cc(len(vs))


def moments_from_free_cumulants(kappas: Sequence[Fraction | int]) -> list[Fraction]:
    """Run the free moment-cumulant sum forward.

    Given ``kappa_1 .. kappa_N`` for one variable, returns the moments
    ``m_0 .. m_N``; each moment is the sum over non-crossing partitions
    of the product of block cumulants.
    """
    ks = [Fraction(k) for k in kappas]
    out = [Fraction(1)]
    for n in range(1, len(ks) + 1):
        total = Fraction(0)
        for part in enumerate_nc_partitions(n):
            prod = Fraction(1)
            for block in part.blocks():
                prod *= ks[len(block) - 1]
            total += prod
        out.append(total)
    return out
