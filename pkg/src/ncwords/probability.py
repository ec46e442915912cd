"""Moment functionals on noncommutative monomials, with exact rationals.

A moment functional assigns a rational expectation to monomials in a
fixed set of variables.  ``E(1) = 1`` always holds; any other moment the
functional cannot produce is a hard error (:class:`MissingMomentError`)
rather than a default value.

``expect_word`` evaluates a functional on the monomial a word induces:
letters are ranked by first occurrence and each letter contributes its
assigned variable exactly once, in rank order.  So the word ``bab`` with
``a -> x`` and ``b -> y`` evaluates to ``E(y x)``.

Moment tables are loaded from JSON of the form::

    {"vars": ["a", "b"],
     "moments": [{"word": ["a"], "value": "1/2"},
                 {"word": ["a", "b"], "value": "0/1"}]}

with every value a ``p/q`` string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .surjections import Order
from .words import Word, is_pangrammatic


class MissingMomentError(LookupError):
    """Raised when a functional has no value for a requested monomial."""

    def __init__(self, monomial: "Monomial") -> None:
        super().__init__(f"moment undefined for monomial {monomial}")
        self.monomial = monomial


class MomentTableError(ValueError):
    """Raised when a moment table fails to parse or validate."""


@dataclass(frozen=True, eq=True)
class Monomial:
    """A product of variables in a fixed order; empty means the unit 1."""

    factors: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def unit(cls) -> "Monomial":
        return cls(())

    @classmethod
    def of(cls, *names: str) -> "Monomial":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "*".join(self.factors) if self.factors else "1"


def parse_rational(text: str) -> Fraction:
    """Parse a ``p/q`` string into an exact rational."""
    if not isinstance(text, str):
        raise MomentTableError(f"rational value must be a 'p/q' string, got {text!r}")
    parts = text.split("/")
    if len(parts) != 2:
        raise MomentTableError(f"rational value must be a 'p/q' string, got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise MomentTableError(f"rational value must be a 'p/q' string, got {text!r}") from None
    if q == 0:
        raise MomentTableError(f"zero denominator in rational value {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    """Render an exact rational as ``p/q`` (always with a denominator)."""
    return f"{x.numerator}/{x.denominator}"


class MomentFunctional:
    """Expectations of monomials over a fixed variable set.

    Values come from an explicit table and, failing that, from an
    optional generative rule.  Rule results are memoized; the cache is a
    plain dict whose entries are only ever written once per key with an
    identical value, so concurrent readers are safe.
    """

    def __init__(
        self,
        variables: Sequence[str],
        table: Mapping[tuple[str, ...], Fraction] | None = None,
        rule: Callable[[tuple[str, ...]], Fraction | None] | None = None,
    ) -> None:
        self._variables = tuple(variables)
        if len(set(self._variables)) != len(self._variables):
            raise ValueError(f"duplicate variable names: {self._variables}")
        self._varset = frozenset(self._variables)
        self._table: dict[tuple[str, ...], Fraction] = {}
        for factors, value in (table or {}).items():
            self._table[tuple(factors)] = Fraction(value)
        unit = self._table.setdefault((), Fraction(1))
        if unit != 1:
            raise ValueError(f"the empty monomial must have expectation 1, got {unit}")
        self._rule = rule
        self._rule_cache: dict[tuple[str, ...], Fraction] = {}

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    def expect(self, monomial: Monomial | Sequence[str]) -> Fraction:
        """The expectation of a monomial; raises on anything undefined."""
        factors = monomial.factors if isinstance(monomial, Monomial) else tuple(monomial)
        if any(v not in self._varset for v in factors):
            raise MissingMomentError(Monomial(factors))
        hit = self._table.get(factors)
        if hit is not None:
            return hit
        if self._rule is not None:
            cached = self._rule_cache.get(factors)
            if cached is not None:
                return cached
            value = self._rule(factors)
            if value is not None:
                self._rule_cache[factors] = value
                return value
        raise MissingMomentError(Monomial(factors))


def first_occurrence_order(w: Word) -> Order:
    """Rank the letters of a pangrammatic word by first occurrence."""
    if not is_pangrammatic(w):
        raise ValueError("cannot rank letters of a word that skips part of its alphabet")
    rank: dict[int, int] = {}
    for x in w.seq:
        if x not in rank:
            rank[x] = len(rank) + 1
    return Order(w.alphabet.size, tuple(rank[i] for i in range(w.alphabet.size)))


def expect_word(E: MomentFunctional, w: Word, assign: Sequence[str]) -> Fraction:
    """Evaluate ``E`` on the monomial induced by a word.

    ``assign[i]`` names the variable for letter id ``i``.  Letters enter
    the monomial once each, ordered by first occurrence in the word.
    """
    if len(assign) != w.alphabet.size:
        raise ValueError(
            f"assignment names {len(assign)} variables for an alphabet of size {w.alphabet.size}"
        )
    order = first_occurrence_order(w)
    factors = tuple(assign[e - 1] for e in order.by_rank())
    return E.expect(factors)


def semicircular_family(
    covariances: Sequence[Fraction | int],
    names: Sequence[str] | None = None,
) -> MomentFunctional:
    """A free family of centered semicircular variables with a diagonal
    covariance.

    Mixed moments are sums over non-crossing pair partitions in which
    paired positions carry the same variable, each pairing contributing
    the product of its covariances.  Odd-length monomials vanish.
    """
    covs = [Fraction(c) for c in covariances]
    if not covs:
        raise ValueError("at least one variable is required")
    if any(c < 0 for c in covs):
        raise ValueError(f"covariances must be nonnegative: {covs}")
    if names is None:
        names = ("x",) if len(covs) == 1 else tuple(f"x{i}" for i in range(1, len(covs) + 1))
    names = tuple(names)
    if len(names) != len(covs):
        raise ValueError("one name per covariance entry is required")
    index = {v: i for i, v in enumerate(names)}
    memo: dict[tuple[int, ...], Fraction] = {}

    def paired_sum(labels: tuple[int, ...]) -> Fraction:
        if not labels:
            return Fraction(1)
        if len(labels) % 2:
            return Fraction(0)
        hit = memo.get(labels)
        if hit is not None:
            return hit
        total = Fraction(0)
        first = labels[0]
        # Pair position 0 with an odd position carrying the same label;
        # the inside and outside segments pair up independently.
        for j in range(1, len(labels), 2):
            if labels[j] == first:
                total += covs[first] * paired_sum(labels[1:j]) * paired_sum(labels[j + 1 :])
        memo[labels] = total
        return total

    def rule(factors: tuple[str, ...]) -> Fraction:
        return paired_sum(tuple(index[v] for v in factors))

    return MomentFunctional(names, rule=rule)


def load_moments(path: str) -> MomentFunctional:
    """Load and validate a JSON moment table.  See the module docstring
    for the format.  Duplicate monomials, unknown variables, malformed
    rationals, and a non-unit empty monomial are all hard errors."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MomentTableError(f"moment table {path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise MomentTableError(f"moment table {path}: top level must be an object")
    variables = data.get("vars")
    if not isinstance(variables, list) or not all(isinstance(v, str) and v for v in variables):
        raise MomentTableError(f"moment table {path}: 'vars' must be a list of names")
    if len(set(variables)) != len(variables):
        raise MomentTableError(f"moment table {path}: duplicate variable names")
    entries = data.get("moments")
    if not isinstance(entries, list):
        raise MomentTableError(f"moment table {path}: 'moments' must be a list")
    varset = set(variables)
    table: dict[tuple[str, ...], Fraction] = {}
    for entry in entries:
        if not isinstance(entry, dict) or "word" not in entry or "value" not in entry:
            raise MomentTableError(
                f"moment table {path}: each entry needs 'word' and 'value', got {entry!r}"
            )
        word = entry["word"]
        if not isinstance(word, list) or not all(isinstance(v, str) for v in word):
            raise MomentTableError(f"moment table {path}: 'word' must be a list of names")
        unknown = [v for v in word if v not in varset]
        if unknown:
            raise MomentTableError(
                f"moment table {path}: unknown variables {unknown} in entry {word}"
            )
        key = tuple(word)
        if key in table:
            raise MomentTableError(f"moment table {path}: duplicate entry for monomial {list(key)}")
        try:
            value = parse_rational(entry["value"])
        except MomentTableError as exc:
            raise MomentTableError(f"moment table {path}: entry {word}: {exc}") from None
        if key == () and value != 1:
            raise MomentTableError(
                f"moment table {path}: the empty monomial must have value 1/1, got {entry['value']}"
            )
        table[key] = value
    try:
        return MomentFunctional(tuple(variables), table)
    except ValueError as exc:
        raise MomentTableError(f"moment table {path}: {exc}") from None
