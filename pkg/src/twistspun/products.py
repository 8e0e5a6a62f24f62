"""Chord-inventory calculus for Legendrian products.

Lengths are exact rationals throughout: the size predicates are strict
comparisons and must not depend on floating point noise.  Rescaling therefore
takes the multiplicative factor (the exponential of the Liouville time) as an
exact rational rather than the time itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import NotInRegimeError, ValidationError

REDUCIBLE_BY_SIZE = "twist-spun-by-size-criterion"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Chord:
    name: str
    degree: int
    length: Fraction

    def __post_init__(self):
        object.__setattr__(self, "length", Fraction(self.length))
        if self.length <= 0:
            raise ValidationError(f"chord {self.name!r} must have positive length")


class ChordInventory:
    """A finite multiset of (degree, length) chord records with unique names."""

    def __init__(self, chords: Iterable[Chord | tuple], name: str = ""):
        items = []
        for c in chords:
            if not isinstance(c, Chord):
                c = Chord(*c)
            items.append(c)
        names = [c.name for c in items]
        if len(set(names)) != len(names):
            raise ValidationError("chord names must be unique within an inventory")
        self.chords = tuple(sorted(items, key=lambda c: (c.length, c.name)))
        self.name = name

    def __iter__(self):
        return iter(self.chords)

    def __len__(self):
        return len(self.chords)

    def __eq__(self, other):
        return isinstance(other, ChordInventory) and self.chords == other.chords

    def lengths(self) -> list[Fraction]:
        return [c.length for c in self.chords]

    def degrees(self) -> list[int]:
        return [c.degree for c in self.chords]

    def max_length(self) -> Fraction:
        return self.chords[-1].length

    def min_length(self) -> Fraction:
        return self.chords[0].length

    def __repr__(self):
        body = ", ".join(f"{c.name}({c.degree}, {c.length})" for c in self.chords)
        return f"ChordInventory({self.name or 'anonymous'}: {body})"


def _require_nonempty(q: ChordInventory, label: str) -> None:
    if len(q) == 0:
        raise ValidationError(f"{label} is empty; size predicates need at least one chord")


def is_smaller(q1: ChordInventory, q2: ChordInventory) -> bool:
    """True iff the longest chord of q1 is strictly shorter than the shortest of q2."""
    _require_nonempty(q1, "first inventory")
    _require_nonempty(q2, "second inventory")
    return q1.max_length() < q2.min_length()


def has_distinct_lengths(q1: ChordInventory, q2: ChordInventory) -> bool:
    """No chord of q1 shares its exact length with a chord of q2."""
    return not (set(q1.lengths()) & set(q2.lengths()))


def rescale(q: ChordInventory, factor: Fraction) -> ChordInventory:
    """Multiply every length by ``factor`` (= e^t for Liouville time t); degrees unchanged.

    The factor must be a positive exact rational.
    """
    factor = Fraction(factor)
    if factor <= 0:
        raise ValidationError("rescale factor must be positive")
    return ChordInventory(
        (Chord(c.name, c.degree, c.length * factor) for c in q), name=q.name)


def spun_reducibility(q1: ChordInventory, q2: ChordInventory) -> str:
    """Size-criterion verdict: the product of two knots is a twist spun whenever
    one factor's chords are all strictly shorter than the other's.

    Never returns a negative verdict; ruling a product out takes the homology
    obstruction.
    """
    if is_smaller(q1, q2) or is_smaller(q2, q1):
        return REDUCIBLE_BY_SIZE
    return UNDETERMINED


@dataclass
class ProductInventory:
    """Chord inventory of a product with short second factor, after Morse doubling.

    Families: (c, c^) doubles of the first factor, (b, b^) doubles of the short
    second-factor chords, and mixed chords c(a+b), c(a-b) for every pair.
    """

    q1: ChordInventory
    q2_short: ChordInventory
    eps: Fraction
    doubles_first: tuple = ()
    doubles_second: tuple = ()
    mixed: tuple = ()

    def inventory(self) -> ChordInventory:
        return ChordInventory(
            self.doubles_first + self.doubles_second + self.mixed,
            name=f"{self.q1.name or 'q1'} x {self.q2_short.name or 'q2'}")

    def degrees(self) -> list[int]:
        return self.inventory().degrees()


def hat_name(name: str) -> str:
    return name + "^"


def product_inventory(q1: ChordInventory, q2_short: ChordInventory,
                      eps: Fraction = Fraction(1, 100)) -> ProductInventory:
    """Degree/length table of the product in the short-second-factor regime.

    Preconditions: every chord of q2_short is strictly shorter than every chord
    of q1 (the long chords of the second factor are assumed already removed),
    and eps is smaller than every pairwise gap between the input lengths.
    Output, per the table:

      for a in q1:        a  (|a|,   l(a))      and  a^  (|a|+1,   l(a)+eps)
      for b in q2_short:  b  (|b|,   l(b))      and  b^  (|b|+1,   l(b)+eps)
      per pair (a, b):    c(a+b)  (|a|+|b|+1, l(a)+l(b))
                          c(a-b)  (|a|-|b|,   l(a)-l(b))
    """
    eps = Fraction(eps)
    _require_nonempty(q1, "first inventory")
    if eps <= 0:
        raise NotInRegimeError("eps must be positive")
    if len(q2_short) and not is_smaller(q2_short, q1):
        raise NotInRegimeError(
            "second-factor chords must all be strictly shorter than first-factor chords")
    all_lengths = sorted(set(q1.lengths()) | set(q2_short.lengths()))
    gaps = [b - a for a, b in zip(all_lengths, all_lengths[1:])]
    if gaps and eps >= min(gaps):
        raise NotInRegimeError(
            f"eps = {eps} is not smaller than the least length gap {min(gaps)}")

    doubles_first = []
    for a in q1:
        doubles_first.append(Chord(a.name, a.degree, a.length))
        doubles_first.append(Chord(hat_name(a.name), a.degree + 1, a.length + eps))
    doubles_second = []
    for b in q2_short:
        doubles_second.append(Chord(b.name, b.degree, b.length))
        doubles_second.append(Chord(hat_name(b.name), b.degree + 1, b.length + eps))
    mixed = []
    for a in q1:
        for b in q2_short:
            mixed.append(Chord(f"c({a.name}+{b.name})", a.degree + b.degree + 1,
                               a.length + b.length))
            mixed.append(Chord(f"c({a.name}-{b.name})", a.degree - b.degree,
                               a.length - b.length))
    return ProductInventory(q1=q1, q2_short=q2_short, eps=eps,
                            doubles_first=tuple(doubles_first),
                            doubles_second=tuple(doubles_second),
                            mixed=tuple(mixed))
