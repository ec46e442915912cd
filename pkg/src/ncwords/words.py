"""Words over finite alphabets and their reduction to normal form.

Conventions used throughout the package:

- An :class:`Alphabet` is an ordered finite set of letters.  Letters are
  identified by position, so letter ids are always ``0..k-1``.  Display
  names are presentation only: they drive parsing and rendering but never
  participate in equality.  Structurally, two alphabets of the same size
  are interchangeable, which is what makes relabelling invariance a
  non-event at the data level.
- A :class:`Word` is a nonempty sequence of letter ids over its alphabet.
- :func:`reduce_word` rewrites a word to its unique normal form under the
  two rules "collapse an adjacent repeated letter" and "drop a final
  letter equal to the first".
- A word is *non-crossing* when no two distinct letters occur interleaved
  as ``a .. b .. a .. b``.

All values are immutable and every operation returns a fresh word, so
everything here is safe for unrestricted concurrent use.

Text syntax: a word is written either as single-character letters
(``"abcb"``) or as comma-separated multi-character letters
(``"a1,a2,a1,a3"``).  Rendering is deterministic and round-trips.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence


class EmptyRestrictionError(ValueError):
    """Raised when a restriction would delete every letter of a word."""


@dataclass(frozen=True)
class Letter:
    """A letter: a canonical id plus an optional display name.

    Two letters are equal iff their ids are equal; the name is ignored.
    """

    id: int
    name: str | None = field(default=None, compare=False)


@dataclass(frozen=True, eq=False)
class Alphabet:
    """An ordered finite set of letters with ids ``0..k-1``.

    Equality and hashing use only the size: names are presentation.
    """

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate letter names in alphabet: {self.names}")
        if any(not isinstance(n, str) or not n or "," in n for n in self.names):
            raise ValueError(f"letter names must be nonempty and comma-free: {self.names}")

    @classmethod
    def of(cls, names: Iterable[str]) -> "Alphabet":
        return cls(tuple(names))

    @classmethod
    def numeric(cls, k: int) -> "Alphabet":
        """The alphabet ``1, 2, ..., k`` with numeric display names."""
        if k < 1:
            raise ValueError("alphabet size must be >= 1")
        return cls(tuple(str(i) for i in range(1, k + 1)))

    @property
    def size(self) -> int:
        return len(self.names)

    def letter(self, i: int) -> Letter:
        return Letter(i, self.names[i])

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(i, n) for i, n in enumerate(self.names))

    def subset(self, ids: Iterable[int]) -> "Alphabet":
        """The sub-alphabet of the given letter ids, in increasing id order."""
        picked = sorted(set(ids))
        if any(i < 0 or i >= self.size for i in picked):
            raise ValueError(f"letter ids {picked} out of range for alphabet of size {self.size}")
        return Alphabet(tuple(self.names[i] for i in picked))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.size == other.size

    def __hash__(self) -> int:
        return hash(("Alphabet", self.size))

    def __repr__(self) -> str:
        return f"Alphabet({','.join(self.names)})"


@dataclass(frozen=True, eq=False)
class Word:
    """A nonempty sequence of letters from a finite alphabet.

    Equality compares the alphabet size and the id sequence; display
    names do not matter.
    """

    alphabet: Alphabet
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(self.seq))
        if not self.seq:
            raise ValueError("a word must be a nonempty sequence of letters")
        k = self.alphabet.size
        if any(x < 0 or x >= k for x in self.seq):
            raise ValueError(f"letter ids {self.seq} out of range for alphabet of size {k}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet.size == other.alphabet.size
            and self.seq == other.seq
        )

    def __hash__(self) -> int:
        return hash((self.alphabet.size, self.seq))

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def occurring(self) -> frozenset[int]:
        """The set of letter ids that actually occur."""
        return frozenset(self.seq)

    def __str__(self) -> str:
        return render_word(self)

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r}, k={self.alphabet.size})"


def parse_word(text: str) -> Word:
    """Parse a word from text, building its alphabet by first occurrence.

    Single characters are letters unless the text contains a comma, in
    which case letters are the comma-separated fields.

    >>> parse_word("abcb").seq
    (0, 1, 2, 1)
    >>> parse_word("a1,a2,a1,a3").alphabet.names
    ('a1', 'a2', 'a3')
    """
    if not text:
        raise ValueError("empty word")
    names = text.split(",") if "," in text else list(text)
    if any(not n for n in names):
        raise ValueError(f"malformed word {text!r}: empty letter name")
    order: list[str] = []
    for n in names:
        if n not in order:
            order.append(n)
    index = {n: i for i, n in enumerate(order)}
    return Word(Alphabet(tuple(order)), tuple(index[n] for n in names))


def render_word(w: Word, prefer_chars: bool = True) -> str:
    """Render a word back to text.

    Uses the compact single-character syntax when ``prefer_chars`` is set
    and every letter name is a single character; otherwise letters are
    comma-separated.
    """
    names = [w.alphabet.names[i] for i in w.seq]
    if prefer_chars and all(len(n) == 1 for n in names):
        return "".join(names)
    return ",".join(names)


def is_reduced(w: Word) -> bool:
    """No adjacent repeated letter, and first != last unless length one."""
    s = w.seq
    if any(s[i] == s[i + 1] for i in range(len(s) - 1)):
        return False
    return len(s) == 1 or s[0] != s[-1]


def is_pangrammatic(w: Word) -> bool:
    """Whether every letter of the alphabet occurs in the word."""
    return len(w.occurring) == w.alphabet.size


def is_noncrossing_seq(seq: Sequence[int]) -> bool:
    """Whether an id sequence avoids the pattern ``a .. b .. a .. b``.

    Single left-to-right scan: letters are kept on a stack of currently
    open letters; returning to a letter below the top closes everything
    above it for good, and revisiting a closed letter is a crossing.
    """
    stack: list[int] = []
    on: set[int] = set()
    closed: set[int] = set()
    for x in seq:
        if stack and stack[-1] == x:
            continue
        if x in closed:
            return False
        if x in on:
            while stack[-1] != x:
                y = stack.pop()
                on.discard(y)
                closed.add(y)
            continue
        stack.append(x)
        on.add(x)
    return True


def is_noncrossing(w: Word) -> bool:
    """Whether the word avoids ``a .. b .. a .. b`` for all distinct a, b.

    >>> is_noncrossing(parse_word("abab"))
    False
    >>> is_noncrossing(parse_word("abcb"))
    True
    """
    return is_noncrossing_seq(w.seq)


def reduce_word(w: Word) -> Word:
    """Rewrite a word to its reduced normal form.

    Collapses the leftmost adjacent repeat to a fixpoint, then drops the
    final letter while it equals the first, repeating until stable.  The
    result is the unique minimal word reachable by the two rewrite rules;
    uniqueness is exercised exhaustively in the test suite.

    >>> str(reduce_word(parse_word("aabca")))
    'abc'
    >>> str(reduce_word(parse_word("abba")))
    'ab'
    """
    seq = list(w.seq)
    while True:
        out = [seq[0]]
        for x in seq[1:]:
            if x != out[-1]:
                out.append(x)
        seq = out
        if len(seq) > 1 and seq[0] == seq[-1]:
            seq.pop()
            continue
        break
    return Word(w.alphabet, tuple(seq))


def restrict(w: Word, keep: Iterable[int]) -> Word:
    """Delete every letter outside ``keep``; the result lives on the
    sub-alphabet ``keep`` (re-indexed in increasing id order).

    Raises :class:`EmptyRestrictionError` if no letter of the word lies
    in ``keep``.

    >>> str(restrict(parse_word("abcab"), [0, 1]))
    'abab'
    """
    ids = sorted(set(keep))
    sub = w.alphabet.subset(ids)
    keep_set = set(ids)
    kept = tuple(x for x in w.seq if x in keep_set)
    if not kept:
        raise EmptyRestrictionError(
            f"restriction of {render_word(w)!r} to letter ids {ids} deletes every letter"
        )
    rank = {old: new for new, old in enumerate(ids)}
    return Word(sub, tuple(rank[x] for x in kept))


def apply_map(
    w: Word,
    mapping: Mapping[int, int] | Callable[[int], int],
    target: Alphabet,
) -> Word:
    """Apply a letterwise map of alphabets to a word.

    ``mapping`` sends source letter ids to target letter ids and must be
    total on the word's alphabet.  The image has the same length.
    """
    get = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
    try:
        seq = tuple(get(x) for x in w.seq)
    except KeyError as exc:
        raise ValueError(f"map undefined on letter id {exc.args[0]}") from None
    return Word(target, seq)


def _basis_dfs(alphabet: Alphabet, max_len: int, noncrossing: bool) -> list[Word]:
    # Preorder DFS over no-adjacent-repeat sequences yields words in
    # lexicographic order of their id sequences.
    k = alphabet.size
    out: list[Word] = []
    seq: list[int] = []

    def grow() -> None:
        if seq:
            if (len(seq) == 1 or seq[0] != seq[-1]) and len(set(seq)) == k:
                out.append(Word(alphabet, tuple(seq)))
            if len(seq) == max_len:
                return
        for x in range(k):
            if seq and seq[-1] == x:
                continue
            seq.append(x)
            if not noncrossing or is_noncrossing_seq(seq):
                grow()
            seq.pop()

    grow()
    return out


def enumerate_word_basis(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All pangrammatic reduced words of length <= ``max_len``, in
    lexicographic order of their id sequences.

    Grows like ``k * (k-1)**(len-1)``; keep the bounds small.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    return _basis_dfs(alphabet, max_len, noncrossing=False)


def enumerate_nc_basis(alphabet: Alphabet, max_len: int | None = None) -> list[Word]:
    """All pangrammatic reduced non-crossing words of length <= ``max_len``.

    ``max_len`` defaults to ``2k - 1`` for an alphabet of size ``k``; the
    test suite checks that no longer word qualifies at small sizes, so
    the default enumerates the complete finite basis there.
    """
    if max_len is None:
        max_len = 2 * alphabet.size - 1
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    return _basis_dfs(alphabet, max_len, noncrossing=True)


def ascending_word(n: int) -> Word:
    """The word ``1, 2, ..., n`` on the numeric alphabet of size ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Word(Alphabet.numeric(n), tuple(range(n)))


def peak_word(n: int) -> Word:
    """The word ``1, 2, ..., n-1, n, n-1, ..., 3, 2`` (ascent then descent).

    >>> str(peak_word(3))
    '1232'
    >>> str(peak_word(1)), str(peak_word(2))
    ('1', '12')
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    seq = tuple(range(n)) + tuple(range(n - 2, 0, -1))
    return Word(Alphabet.numeric(n), seq)


def random_basis_word(
    rng: random.Random,
    alphabet_size: int,
    max_len: int,
    noncrossing: bool = False,
) -> Word:
    """A uniformly seeded pangrammatic reduced word, by rejection.

    Used by the randomized coassociativity checks; deterministic for a
    given generator state.
    """
    k = alphabet_size
    if k < 1:
        raise ValueError("alphabet size must be >= 1")
    hi = min(max_len, 2 * k - 1) if noncrossing else max_len
    if hi < k:
        raise ValueError(f"max_len {max_len} cannot fit a pangrammatic word on {k} letters")
    alphabet = Alphabet.numeric(k)
    for _ in range(100_000):
        n = rng.randint(k, hi)
        seq = [rng.randrange(k)]
        for _ in range(n - 1):
            x = rng.randrange(k - 1) if k > 1 else 0
            if k > 1 and x >= seq[-1]:
                x += 1
            seq.append(x)
        if len(seq) > 1 and seq[0] == seq[-1]:
            continue
        if len(set(seq)) != k:
            continue
        if noncrossing and not is_noncrossing_seq(seq):
            continue
        return Word(alphabet, tuple(seq))
    raise RuntimeError("rejection sampling failed to find a basis word")
