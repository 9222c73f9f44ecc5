"""Automorphism layer: Lusztig generator tables, hexagon symmetries, words.

Each automorphism is described by an ImageTable giving the image of every
generator as an NCPolynomial; words of automorphisms act by iterated
substitution, rightmost letter first.  The notation in reports reads left to
right: "L1 L2*^-1" means L1 composed after the inverse of L2*.

The twelve hexagon symmetries act through the vertex cycle
(A1, B3, A2, B1, A3, B2); reflections are taken relative to the axis through
the A1 vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .freealg import (BBOQ_ALPHABET, OQ_ALPHABET, NCPolynomial, substitute)
from .scalars import RationalFunction, var

HEX_CYCLE = ("A1", "B3", "A2", "B1", "A3", "B2")


@dataclass(frozen=True)
class LusztigLetter:
    """One of L, L*, L_i, L*_i or an inverse thereof.

    index None addresses the two-generator algebra; 1..3 the six-generator one.
    """

    star: bool = False
    index: int | None = None
    inverse: bool = False

    def __post_init__(self):
        if self.index is not None and self.index not in (1, 2, 3):
            raise ValueError("index must be 1, 2 or 3")

    def inverted(self) -> "LusztigLetter":
        return replace(self, inverse=not self.inverse)

    @property
    def alphabet(self):
        return OQ_ALPHABET if self.index is None else BBOQ_ALPHABET

    def notation(self) -> str:
        base = f"L{self.index if self.index is not None else ''}"
        if self.star:
            base += "*"
        return base + ("^-1" if self.inverse else "")

    def __str__(self):
        return self.notation()


@dataclass(frozen=True)
class DihedralElement:
    """Hexagon symmetry: rotation by k vertices, optionally reflected first."""

    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % 6)

    def act(self, position: int) -> int:
        p = -position if self.reflected else position
        return (self.rotation + p) % 6

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """Element doing self after other."""
        rot = self.rotation + (-other.rotation if self.reflected else other.rotation)
        return DihedralElement(rot % 6, self.reflected ^ other.reflected)

    def notation(self) -> str:
        return f"r{self.rotation}" + ("s" if self.reflected else "")

    def __str__(self):
        return self.notation()


def dihedral_elements() -> list[DihedralElement]:
    return [DihedralElement(r, f) for f in (False, True) for r in range(6)]


AutGenerator = LusztigLetter | DihedralElement
AutomorphismWord = tuple


@dataclass(frozen=True)
class ImageTable:
    """Total map from generator names to their images under one automorphism."""

    alphabet: tuple[str, ...]
    images: Mapping[str, NCPolynomial]

    def __post_init__(self):
        missing = [g for g in self.alphabet if g not in self.images]
        if missing:
            raise ValueError(f"image table misses generators: {missing}")

    def apply(self, x: NCPolynomial) -> NCPolynomial:
        return substitute(x, self.images)

    def __getitem__(self, gen: str) -> NCPolynomial:
        return self.images[gen]


def _correction(moved: NCPolynomial, fixer: NCPolynomial,
                inverse: bool) -> NCPolynomial:
    """X plus the cubic shift (c1 F^2 X - (q+q^-1) F X F + c2 X F^2) / denom.

    c1, c2 = q, q^-1 for the automorphism itself and swap for its inverse;
    denom = (q - q^-1)(q^2 - q^-2).
    """
    q = var("q")
    c1, c2 = (q ** -1, q) if inverse else (q, q ** -1)
    denom = (q - q ** -1) * (q ** 2 - q ** -2)
    f2 = fixer * fixer
    shift = ((f2 * moved).scale(c1)
             - (fixer * moved * fixer).scale(q + q ** -1)
             + (moved * f2).scale(c2))
    return moved + shift.scale(denom.inverse())


def generator_image(g: AutGenerator) -> ImageTable:
    """The exact generator-image table of a single automorphism letter."""
    if isinstance(g, DihedralElement):
        return dihedral_image(g)
    if not isinstance(g, LusztigLetter):
        raise TypeError(f"not an automorphism letter: {g!r}")
    if g.index is None:
        a, b = NCPolynomial.generator("A"), NCPolynomial.generator("B")
        if g.star:
            images = {"A": _correction(a, b, g.inverse), "B": b}
        else:
            images = {"A": a, "B": _correction(b, a, g.inverse)}
        return ImageTable(OQ_ALPHABET, images)
    i = g.index
    images = {}
    if g.star:
        fixer = NCPolynomial.generator(f"B{i}")
        for j in (1, 2, 3):
            images[f"B{j}"] = NCPolynomial.generator(f"B{j}")
            aj = NCPolynomial.generator(f"A{j}")
            images[f"A{j}"] = aj if j == i else _correction(aj, fixer, g.inverse)
    else:
        fixer = NCPolynomial.generator(f"A{i}")
        for j in (1, 2, 3):
            images[f"A{j}"] = NCPolynomial.generator(f"A{j}")
            bj = NCPolynomial.generator(f"B{j}")
            images[f"B{j}"] = bj if j == i else _correction(bj, fixer, g.inverse)
    return ImageTable(BBOQ_ALPHABET, images)


def dihedral_image(g: DihedralElement) -> ImageTable:
    images = {HEX_CYCLE[p]: NCPolynomial.generator(HEX_CYCLE[g.act(p)])
              for p in range(6)}
    return ImageTable(BBOQ_ALPHABET, images)


def apply_word(word: Sequence[AutGenerator], x: NCPolynomial) -> NCPolynomial:
    """Apply a composition of automorphisms, rightmost letter first."""
    for letter in reversed(word):
        x = substitute(x, generator_image(letter).images)
    return x


def word_notation(word: Sequence[AutGenerator]) -> str:
    return " ".join(letter.notation() for letter in word) if word else "id"


def sigma_embed(i: int, j: int) -> dict[str, NCPolynomial]:
    """Generator images of the embedding A -> A_i, B -> B_j (i != j)."""
    if i == j or i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError("need distinct indices i, j in {1, 2, 3}")
    return {"A": NCPolynomial.generator(f"A{i}"),
            "B": NCPolynomial.generator(f"B{j}")}


def injera_check(i: int, j: int,
                 l_table: ImageTable | None = None,
                 lstar_table: ImageTable | None = None) -> bool:
    """Do the two embedding diagrams commute as literal free-algebra identities?

    Checks sigma(L(X)) = L_i(sigma(X)) and sigma(L*(X)) = L*_j(sigma(X)) for
    both generators X.  Tables may be overridden to probe corrupted data.
    """
    sigma = sigma_embed(i, j)
    plain = generator_image(LusztigLetter(star=False))
    starred = generator_image(LusztigLetter(star=True))
    li = l_table if l_table is not None else generator_image(
        LusztigLetter(star=False, index=i))
    lsj = lstar_table if lstar_table is not None else generator_image(
        LusztigLetter(star=True, index=j))
    for gen in OQ_ALPHABET:
        if substitute(plain[gen], sigma) != substitute(sigma[gen], li.images):
            return False
        if substitute(starred[gen], sigma) != substitute(sigma[gen], lsj.images):
            return False
    return True


def reduced_words(x: LusztigLetter, y: LusztigLetter,
                  max_len: int) -> list[AutomorphismWord]:
    """All freely reduced words of length <= max_len over {x, x^-1, y, y^-1}.

    Deterministic order: by length, then by letter index in the order
    (x, x^-1, y, y^-1).  No word contains a letter next to its own inverse.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    base = {replace(x, inverse=False), replace(y, inverse=False)}
    if len(base) != 2:
        raise ValueError("need two independent letters")
    letters = [x, x.inverted(), y, y.inverted()]
    words: list[AutomorphismWord] = [()]
    layer: list[AutomorphismWord] = [()]
    for _ in range(max_len):
        fresh = []
        for w in layer:
            for letter in letters:
                if w and w[-1] == letter.inverted():
                    continue
                fresh.append(w + (letter,))
        words.extend(fresh)
        layer = fresh
    return words


def twist_images(images: Mapping[str, object], letter: AutGenerator,
                 scalars=None, power_cache: dict | None = None) -> dict:
    """Generator images of the representation twisted by one automorphism."""
    table = generator_image(letter)
    return {g: substitute(table[g], images, scalars=scalars,
                          power_cache=power_cache)
            for g in table.alphabet}
