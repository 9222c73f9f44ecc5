"""Noncommutative polynomials in the algebra generators, and the relation sets.

Two alphabets are in play: the two-generator algebra on (A, B) and the
six-generator algebra on (A1, A2, A3, B1, B2, B3) whose generators sit on a
hexagon -- commuting when nonadjacent, q-Dolan/Grady related when adjacent.
An NCPolynomial maps words (tuples of generator names) to scalar field
coefficients; the empty word is the identity.  Words are ordered by length,
then position in the alphabet, which fixes the serialized form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .matrices import Matrix
from .scalars import RationalFunction, qbracket, var

OQ_ALPHABET = ("A", "B")
BBOQ_ALPHABET = ("A1", "A2", "A3", "B1", "B2", "B3")

Word = tuple[str, ...]


def alphabet_of(name: str) -> tuple[str, ...]:
    if name in OQ_ALPHABET:
        return OQ_ALPHABET
    if name in BBOQ_ALPHABET:
        return BBOQ_ALPHABET
    raise ValueError(f"unknown generator: {name}")


class NCPolynomial:
    """Finite scalar combination of words in a fixed generator alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: tuple[str, ...],
                 terms: Mapping[Word, RationalFunction] | None = None):
        self.alphabet = tuple(alphabet)
        out: dict[Word, RationalFunction] = {}
        if terms:
            for word, coeff in terms.items():
                word = tuple(word)
                for g in word:
                    if g not in self.alphabet:
                        raise ValueError(f"generator {g} not in alphabet {alphabet}")
                coeff = RationalFunction.coerce(coeff)
                if not coeff.is_zero():
                    out[word] = coeff
        self.terms = out

    @classmethod
    def zero(cls, alphabet) -> "NCPolynomial":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet) -> "NCPolynomial":
        return cls(alphabet, {(): RationalFunction.one()})

    @classmethod
    def generator(cls, name: str) -> "NCPolynomial":
        return cls(alphabet_of(name), {(name,): RationalFunction.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "NCPolynomial"):
        if self.alphabet != other.alphabet:
            raise ValueError("operands use different alphabets")

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        if self.alphabet != other.alphabet:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[w] == c for w, c in self.terms.items())

    def __neg__(self):
        return NCPolynomial(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = NCPolynomial(self.alphabet, {(): RationalFunction.coerce(other)})
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        p = NCPolynomial.__new__(NCPolynomial)
        p.alphabet, p.terms = self.alphabet, out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = NCPolynomial(self.alphabet, {(): RationalFunction.coerce(other)})
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        self._check(other)
        out: dict[Word, RationalFunction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        p = NCPolynomial.__new__(NCPolynomial)
        p.alphabet, p.terms = self.alphabet, out
        return p

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NCPolynomial":
        c = RationalFunction.coerce(c)
        return NCPolynomial(self.alphabet, {w: k * c for w, k in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power in the free algebra")
        result = NCPolynomial.one(self.alphabet)
        for _ in range(n):
            result = result * self
        return result

    def words(self) -> list[Word]:
        return sorted(self.terms, key=self._word_key)

    def _word_key(self, word: Word):
        return (len(word), tuple(self.alphabet.index(g) for g in word))

    def max_word_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coefficient(self, word: Word) -> RationalFunction:
        return self.terms.get(tuple(word), RationalFunction.zero())

    def rename(self, mapping: Mapping[str, str]) -> "NCPolynomial":
        """Relabel generators letter-for-letter (must stay in the alphabet)."""
        return NCPolynomial(
            self.alphabet,
            {tuple(mapping.get(g, g) for g in w): c for w, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            c = self.terms[w]
            word_s = "*".join(w) if w else "1"
            if not w:
                body = str(c)
            elif c.is_one():
                body = word_s
            elif (-c).is_one():
                body = f"-{word_s}"
            else:
                body = f"({c})*{word_s}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NCPolynomial({self})"


def gens(alphabet) -> list[NCPolynomial]:
    return [NCPolynomial.generator(g) for g in alphabet]


def nc_mul(x: NCPolynomial, y: NCPolynomial) -> NCPolynomial:
    return x * y


def commutator(x: NCPolynomial, y: NCPolynomial) -> NCPolynomial:
    return x * y - y * x


def qdg_residual(x: NCPolynomial, y: NCPolynomial) -> NCPolynomial:
    """Left side minus right side of the q-Dolan/Grady relation led by x.

    x^3 y - [3]_q x^2 y x + [3]_q x y x^2 - y x^3 - (q^2-q^-2)^2 (y x - x y);
    the zero polynomial exactly when the relation holds formally.
    """
    b3 = qbracket(3)
    q = var("q")
    c = (q ** 2 - q ** -2) ** 2
    x2 = x * x
    x3 = x2 * x
    return (x3 * y - (x2 * y * x).scale(b3) + (x * y * x2).scale(b3) - y * x3
            - (y * x - x * y).scale(c))


@dataclass(frozen=True)
class Relation:
    name: str
    clause: str
    ref: str
    residual: NCPolynomial


@dataclass(frozen=True)
class RelationSet:
    algebra: str
    relations: tuple[Relation, ...]

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def names(self) -> list[str]:
        return [r.name for r in self.relations]

    def get(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)


def relation_set(algebra: str) -> RelationSet:
    """Defining residuals of the chosen algebra, in a fixed documented order.

    "Oq": the two q-Dolan/Grady residuals in (A, B).
    "bbOq": commutators of the A's, of the B's, of same-index pairs, then the
    q-Dolan/Grady pair for each ordered pair of distinct indices -- 21 in all.
    """
    rels: list[Relation] = []
    if algebra == "Oq":
        a, b = NCPolynomial.generator("A"), NCPolynomial.generator("B")
        rels.append(Relation("qdg-A-B", "q-dolan-grady",
                             "q-Dolan/Grady residual led by A", qdg_residual(a, b)))
        rels.append(Relation("qdg-B-A", "q-dolan-grady",
                             "q-Dolan/Grady residual led by B", qdg_residual(b, a)))
    elif algebra == "bbOq":
        g = {name: NCPolynomial.generator(name) for name in BBOQ_ALPHABET}
        for kind in "AB":
            for i, j in ((1, 2), (1, 3), (2, 3)):
                rels.append(Relation(
                    f"comm-{kind}{i}-{kind}{j}", "commuting-pairs",
                    f"[{kind}{i},{kind}{j}] = 0",
                    commutator(g[f"{kind}{i}"], g[f"{kind}{j}"])))
        for i in (1, 2, 3):
            rels.append(Relation(
                f"comm-A{i}-B{i}", "same-index-pair", f"[A{i},B{i}] = 0",
                commutator(g[f"A{i}"], g[f"B{i}"])))
        for i, j in ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)):
            rels.append(Relation(
                f"qdg-A{i}-B{j}", "q-dolan-grady",
                f"q-Dolan/Grady residual led by A{i} against B{j}",
                qdg_residual(g[f"A{i}"], g[f"B{j}"])))
            rels.append(Relation(
                f"qdg-B{j}-A{i}", "q-dolan-grady",
                f"q-Dolan/Grady residual led by B{j} against A{i}",
                qdg_residual(g[f"B{j}"], g[f"A{i}"])))
    else:
        raise ValueError(f"unknown algebra: {algebra!r} (expected 'Oq' or 'bbOq')")
    return RelationSet(algebra=algebra, relations=tuple(rels))


def _word_runs(word: Word) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    for g in word:
        if runs and runs[-1][0] == g:
            runs[-1] = (g, runs[-1][1] + 1)
        else:
            runs.append((g, 1))
    return runs


def substitute(x: NCPolynomial, images: Mapping[str, object],
               scalars: Callable | None = None,
               power_cache: dict | None = None,
               one=None):
    """Apply the algebra homomorphism extending the generator assignment.

    Targets are NCPolynomials or square matrices (anything with *, + and
    scale).  `scalars` maps each coefficient into the target's scalar domain,
    e.g. evaluation at a representation's parameter point.  `power_cache`
    memoizes generator powers across calls that share the same images.
    """
    used = {g for w in x.terms for g in w}
    missing = used - set(images)
    if missing:
        raise ValueError(f"no image supplied for generators: {sorted(missing)}")
    sample = next(iter(images.values()), None)
    if one is None:
        if isinstance(sample, NCPolynomial):
            one = NCPolynomial.one(sample.alphabet)
        elif isinstance(sample, Matrix):
            dims = {m.dim for m in images.values()}
            if len(dims) > 1:
                raise ValueError(f"matrix images have mixed dimensions: {sorted(dims)}")
            one = Matrix.identity(sample.dim, like=sample.rows[0][0])
        else:
            raise TypeError("cannot infer the target identity; pass one=")
    if power_cache is None:
        power_cache = {}

    def gen_power(g: str, k: int):
        key = (g, k)
        got = power_cache.get(key)
        if got is None:
            got = images[g] if k == 1 else gen_power(g, k - 1) * images[g]
            power_cache[key] = got
        return got

    result = None
    for word, coeff in x.terms.items():
        if scalars is not None:
            coeff = scalars(coeff)
        m = one
        runs = _word_runs(word)
        if runs:
            m = gen_power(*runs[0])
            for g, k in runs[1:]:
                m = m * gen_power(g, k)
        term = m.scale(coeff)
        result = term if result is None else result + term
    if result is None:
        zero = scalars(RationalFunction.zero()) if scalars else RationalFunction.zero()
        return one.scale(zero)
    return result


def tensor_slot_embed(m: Matrix, slot: int, factor_dim: int) -> Matrix:
    """Kronecker placement of m into one of three slots, identity elsewhere."""
    from .matrices import kronecker

    if slot not in (1, 2, 3):
        raise ValueError("slot must be 1, 2 or 3")
    if m.dim != factor_dim:
        raise ValueError(f"matrix dimension {m.dim} != factor dimension {factor_dim}")
    ident = Matrix.identity(factor_dim, like=m.rows[0][0])
    factors = [ident, ident, ident]
    factors[slot - 1] = m
    return kronecker(kronecker(factors[0], factors[1]), factors[2])
