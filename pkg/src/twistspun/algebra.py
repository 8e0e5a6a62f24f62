"""Exact arithmetic for free noncommutative graded algebras over F_p[mu^±1, la^±1].

Elements are finite sums of terms  c * mu^i * la^j * w  where c lies in a prime
field F_p and w is a word of named generators (the empty word is the unit).
Coefficient monomials are central.  Differentials are extended from generators
by the graded Leibniz rule and always lower word degree by one; whether a given
differential actually squares to zero is a separate diagnostic, so that broken
or tampered data can be represented and then rejected loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import (
    InvalidPointError,
    RingMismatchError,
    UndeclaredGeneratorError,
)

Word = tuple  # tuple of generator names; () is the unit word


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class CoefMonomial(NamedTuple):
    """One coefficient monomial c * mu^i * la^j with c nonzero in F_p."""

    c: int
    mu: int
    lam: int


def _word_key(word: Word):
    return (len(word), word)


class NCPoly:
    """Element of the free unital algebra on named generators over F_p[mu^±1, la^±1].

    Immutable and kept in canonical form: words sorted by (length, name tuple),
    exponent pairs sorted, no zero coefficients stored.  Equality and hashing
    are therefore structural.
    """

    __slots__ = ("p", "_terms", "_hash")

    def __init__(self, p: int, terms: Mapping[Word, Mapping[tuple, int]] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        acc: dict[Word, dict[tuple, int]] = {}
        if terms:
            for word, monos in terms.items():
                word = tuple(word)
                for (i, j), c in monos.items():
                    c %= p
                    if c == 0:
                        continue
                    bucket = acc.setdefault(word, {})
                    c = (bucket.get((i, j), 0) + c) % p
                    if c:
                        bucket[(i, j)] = c
                    else:
                        bucket.pop((i, j), None)
        canon: dict[Word, dict[tuple, int]] = {}
        for word in sorted((w for w, b in acc.items() if b), key=_word_key):
            bucket = acc[word]
            canon[word] = {ij: bucket[ij] for ij in sorted(bucket)}
        self._terms = canon
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "NCPoly":
        return cls(p)

    @classmethod
    def monomial(cls, p: int, c: int = 1, mu: int = 0, lam: int = 0, word: Iterable[str] = ()) -> "NCPoly":
        return cls(p, {tuple(word): {(mu, lam): c}})

    @classmethod
    def unit(cls, p: int) -> "NCPoly":
        return cls.monomial(p)

    @classmethod
    def gen(cls, p: int, name: str) -> "NCPoly":
        return cls.monomial(p, word=(name,))

    # -- views -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def words(self) -> Iterator[Word]:
        return iter(self._terms)

    def terms(self) -> Iterator[tuple[Word, CoefMonomial]]:
        """Flat iteration over (word, coefficient monomial) pairs, canonical order."""
        for word, bucket in self._terms.items():
            for (i, j), c in bucket.items():
                yield word, CoefMonomial(c, i, j)

    def coefficient(self, word: Iterable[str]) -> dict[tuple, int]:
        return dict(self._terms.get(tuple(word), {}))

    def __len__(self) -> int:
        return sum(len(b) for b in self._terms.values())

    # -- ring operations ----------------------------------------------------

    def _check_ring(self, other: "NCPoly") -> None:
        if self.p != other.p:
            raise RingMismatchError(f"characteristics differ: {self.p} vs {other.p}")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check_ring(other)
        acc = {w: dict(b) for w, b in self._terms.items()}
        for w, b in other._terms.items():
            tgt = acc.setdefault(w, {})
            for ij, c in b.items():
                tgt[ij] = tgt.get(ij, 0) + c
        return NCPoly(self.p, acc)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.p, {w: {ij: -c for ij, c in b.items()} for w, b in self._terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, int):
            return NCPoly(self.p, {w: {ij: c * other for ij, c in b.items()} for w, b in self._terms.items()})
        self._check_ring(other)
        acc: dict[Word, dict[tuple, int]] = {}
        for w1, b1 in self._terms.items():
            for w2, b2 in other._terms.items():
                word = w1 + w2
                tgt = acc.setdefault(word, {})
                for (i1, j1), c1 in b1.items():
                    for (i2, j2), c2 in b2.items():
                        ij = (i1 + i2, j1 + j2)
                        tgt[ij] = tgt.get(ij, 0) + c1 * c2
        return NCPoly(self.p, acc)

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def scale(self, mono: CoefMonomial) -> "NCPoly":
        """Multiply by a central coefficient monomial."""
        return NCPoly(
            self.p,
            {w: {(i + mono.mu, j + mono.lam): c * mono.c for (i, j), c in b.items()}
             for w, b in self._terms.items()},
        )

    def map_coefficients(self, fn) -> "NCPoly":
        """Apply fn(c, i, j) -> (c', i', j') to every coefficient monomial."""
        acc: dict[Word, dict[tuple, int]] = {}
        for w, b in self._terms.items():
            tgt = acc.setdefault(w, {})
            for (i, j), c in b.items():
                c2, i2, j2 = fn(c, i, j)
                tgt[(i2, j2)] = tgt.get((i2, j2), 0) + c2
        return NCPoly(self.p, acc)

    # -- comparison ----------------------------------------------------------

    def _key(self):
        return tuple((w, tuple(b.items())) for w, b in self._terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.p == other.p and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self._key()))
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for word, mono in self.terms():
            factors = []
            if mono.c != 1 or (mono.mu == 0 and mono.lam == 0 and not word):
                factors.append(str(mono.c))
            if mono.mu:
                factors.append("mu" if mono.mu == 1 else f"mu^{mono.mu}")
            if mono.lam:
                factors.append("la" if mono.lam == 1 else f"la^{mono.lam}")
            factors.extend(word)
            if not factors:
                factors.append("1")
            parts.append("*".join(factors))
        return " + ".join(parts)


def nc_multiply(a: NCPoly, b: NCPoly) -> NCPoly:
    """Concatenation product; raises RingMismatchError on characteristic clash."""
    return a * b


def eval_coefficients(poly: NCPoly, mu0: int, lam0: int) -> NCPoly:
    """Substitute nonzero field values for mu and la; words are untouched."""
    p = poly.p
    if mu0 % p == 0 or lam0 % p == 0:
        raise InvalidPointError(f"(mu0, lam0) = ({mu0}, {lam0}) has a zero entry mod {p}")

    def ev(c, i, j):
        return (c * pow(mu0, i, p) * pow(lam0, j, p)) % p, 0, 0

    return poly.map_coefficients(ev)


# -- chord generators and DGAs ---------------------------------------------


@dataclass(frozen=True)
class ChordGen:
    """A named Reeb-chord generator with an integer degree and a positive length."""

    name: str
    degree: int
    length: Fraction

    def __post_init__(self):
        object.__setattr__(self, "length", Fraction(self.length))
        if self.length <= 0:
            raise ValueError(f"chord {self.name!r} must have positive length")


class DGA:
    """A semifree noncommutative DGA on chord generators over F_p[mu^±1, la^±1].

    The constructor only enforces structural sanity (unique names, declared
    letters, matching characteristic).  The mathematical invariants - degree
    law, action law, d^2 = 0 - are checked by the standalone diagnostics
    below, so invalid differentials can be built and then reported.
    """

    def __init__(
        self,
        p: int,
        generators: Iterable[ChordGen],
        differential: Mapping[str, NCPoly],
        degree_offsets: tuple[int, int] = (0, 0),
        name: str = "",
        provenance: dict | None = None,
    ):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self._by_name = {g.name: g for g in self.generators}
        self.degree_offsets = (int(degree_offsets[0]), int(degree_offsets[1]))
        self.name = name
        self.provenance = dict(provenance or {})

        diff: dict[str, NCPoly] = {}
        for gname in names:
            poly = differential.get(gname)
            if poly is None:
                poly = NCPoly.zero(p)
            if poly.p != p:
                raise RingMismatchError(f"differential of {gname!r} lives over F_{poly.p}, DGA over F_{p}")
            for word in poly.words():
                for letter in word:
                    if letter not in self._by_name:
                        raise UndeclaredGeneratorError(
                            f"differential of {gname!r} uses undeclared generator {letter!r}")
            diff[gname] = poly
        unknown = set(differential) - set(names)
        if unknown:
            raise UndeclaredGeneratorError(f"differential given for undeclared generators {sorted(unknown)}")
        self.diff = diff

    # -- lookups ------------------------------------------------------------

    def generator(self, name: str) -> ChordGen:
        try:
            return self._by_name[name]
        except KeyError:
            raise UndeclaredGeneratorError(f"no generator named {name!r}") from None

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    def degree(self, name: str) -> int:
        return self.generator(name).degree

    def length(self, name: str) -> Fraction:
        return self.generator(name).length

    def d_of(self, name: str) -> NCPoly:
        self.generator(name)
        return self.diff[name]

    # -- grading and action bookkeeping --------------------------------------

    def word_degree(self, word: Word) -> int:
        return sum(self.degree(x) for x in word)

    def term_degree(self, word: Word, mono: CoefMonomial) -> int:
        dm, dl = self.degree_offsets
        return self.word_degree(word) + mono.mu * dm + mono.lam * dl

    def word_length(self, word: Word) -> Fraction:
        return sum((self.length(x) for x in word), Fraction(0))

    def differential(self, poly: NCPoly) -> NCPoly:
        """Coefficient-linear Leibniz extension of the generator differential."""
        out = NCPoly.zero(self.p)
        for word, mono in poly.terms():
            out = out + extend_leibniz(self, word).scale(mono)
        return out

    def __repr__(self) -> str:
        return f"DGA({self.name or 'anonymous'}, p={self.p}, {len(self.generators)} generators)"


def extend_leibniz(dga: DGA, word: Iterable[str], images: Mapping[str, NCPoly] | None = None) -> NCPoly:
    """Graded Leibniz extension of the generator differential to a word.

    d(c1 .. cn) = sum_k (-1)^(|c1| + .. + |c_{k-1}|) c1 .. c_{k-1} d(c_k) c_{k+1} .. cn.
    The sign is trivial in characteristic two.  ``images`` overrides the DGA's
    own differential table when supplied.
    """
    word = tuple(word)
    table = dga.diff if images is None else images
    out = NCPoly.zero(dga.p)
    prefix_degree = 0
    for k, letter in enumerate(word):
        if letter not in table:
            raise UndeclaredGeneratorError(f"no differential image declared for {letter!r}")
        image = table[letter]
        sign = -1 if (prefix_degree % 2 and dga.p != 2) else 1
        piece = NCPoly.monomial(dga.p, word=word[:k]) * image * NCPoly.monomial(dga.p, word=word[k + 1:])
        out = out + piece * sign
        prefix_degree += dga.degree(letter)
    return out


def check_d_squared(dga: DGA) -> list[str]:
    """Names of generators where the extended differential fails to square to zero."""
    bad = []
    for g in dga.names:
        if not dga.differential(dga.d_of(g)).is_zero:
            bad.append(g)
    return bad


def degree_violations(dga: DGA) -> list[tuple[str, Word]]:
    """Terms of some d(g) whose degree is not |g| - 1."""
    bad = []
    for g in dga.names:
        want = dga.degree(g) - 1
        for word, mono in dga.d_of(g).terms():
            if dga.term_degree(word, mono) != want:
                bad.append((g, word))
    return bad


def action_violations(dga: DGA) -> list[tuple[str, Word]]:
    """Terms of some d(g) whose summed letter length is >= the length of g."""
    bad = []
    for g in dga.names:
        bound = dga.length(g)
        for word in dga.d_of(g).words():
            if dga.word_length(word) >= bound:
                bad.append((g, word))
    return bad


# -- morphisms ---------------------------------------------------------------


@dataclass
class DGAMorphism:
    """A unital algebra map determined by generator images; coefficients map identically."""

    source: DGA
    target: DGA
    images: dict

    def __post_init__(self):
        if self.source.p != self.target.p:
            raise RingMismatchError("source and target characteristics differ")
        for g, poly in self.images.items():
            self.source.generator(g)
            if poly.p != self.target.p:
                raise RingMismatchError(f"image of {g!r} lives over the wrong field")

    def apply(self, poly: NCPoly) -> NCPoly:
        out = NCPoly.zero(self.target.p)
        for word, mono in poly.terms():
            piece = NCPoly.unit(self.target.p)
            for letter in word:
                if letter not in self.images:
                    raise UndeclaredGeneratorError(f"morphism has no image for {letter!r}")
                piece = piece * self.images[letter]
            out = out + piece.scale(mono)
        return out


def identity_morphism(dga: DGA) -> DGAMorphism:
    return DGAMorphism(dga, dga, {g: NCPoly.gen(dga.p, g) for g in dga.names})


def compose_morphisms(outer: DGAMorphism, inner: DGAMorphism) -> DGAMorphism:
    """outer after inner; sources and targets must chain."""
    if inner.target is not outer.source and inner.target.names != outer.source.names:
        raise RingMismatchError("morphisms do not chain")
    return DGAMorphism(inner.source, outer.target,
                       {g: outer.apply(img) for g, img in inner.images.items()})


def check_morphism(f: DGAMorphism) -> list[str]:
    """Generators where f fails to be a degree-preserving chain map.

    Checks, for every generator g of the source: an image exists, every term
    of f(g) is homogeneous of degree |g|, and f(d g) = d f(g).
    """
    bad = []
    for g in f.source.names:
        if g not in f.images:
            bad.append(g)
            continue
        img = f.images[g]
        want = f.source.degree(g)
        homogeneous = all(f.target.term_degree(w, m) == want for w, m in img.terms())
        chain = f.apply(f.source.d_of(g)) == f.target.differential(img)
        if not (homogeneous and chain):
            bad.append(g)
    return bad
