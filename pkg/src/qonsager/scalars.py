"""Exact arithmetic in the rational-function field QQ(q, a1, a2, a3, b1, b2, b3, n).

Every scalar in the toolkit lives here.  A Polynomial is a sparse map from
Monomial to Fraction; a RationalFunction is a normalized Polynomial pair.
Negative powers of an indeterminate are always denominator monomials (there
is no Laurent representation), so q^-1 is RationalFunction(1, q).

Normal form of a RationalFunction:
  * numerator and denominator share no monomial factor and no rational content,
  * the denominator has integer, collectively coprime coefficients and a
    positive leading coefficient under graded-lex order,
  * small fractions are additionally reduced by polynomial gcd; large ones are
    not (gcd is a size optimization, never a correctness requirement --
    equality is decided by cross-multiplication).

Monomial order is graded lexicographic over the alphabet order
(q, a1, a2, a3, b1, b2, b3, n), with any further indeterminates after those,
ordered by name.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

DEFAULT_ALPHABET = ("q", "a1", "a2", "a3", "b1", "b2", "b3", "n")
_STD_INDEX = {name: i for i, name in enumerate(DEFAULT_ALPHABET)}

# Fractions with at most this many combined terms get a full gcd reduction
# during normalization; larger ones only get content stripping.
_REDUCE_TERM_LIMIT = 120
_GCD_STEP_BUDGET = 20000


class PoleError(ZeroDivisionError):
    """Evaluation point makes the stored denominator vanish."""


class SamplingError(RuntimeError):
    """No pole-free random point found within the retry budget."""


def _var_key(name: str):
    i = _STD_INDEX.get(name)
    return (0, i) if i is not None else (1, name)


class Monomial:
    """Product of indeterminate powers; exponents are positive integers."""

    __slots__ = ("exps", "degree", "_hash")

    def __init__(self, exps: Iterable[tuple[str, int]] = ()):
        pairs = []
        for name, e in exps:
            if e < 0:
                raise ValueError(f"negative exponent for {name}; use a denominator")
            if e:
                pairs.append((name, e))
        pairs.sort(key=lambda t: _var_key(t[0]))
        self.exps = tuple(pairs)
        self.degree = sum(e for _, e in pairs)
        self._hash = hash(self.exps)

    @classmethod
    def unit(cls) -> "Monomial":
        return cls()

    @classmethod
    def of(cls, name: str, exp: int = 1) -> "Monomial":
        return cls(((name, exp),))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def is_unit(self) -> bool:
        return not self.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self.exps:
            return other
        if not other.exps:
            return self
        merged = dict(self.exps)
        for name, e in other.exps:
            merged[name] = merged.get(name, 0) + e
        return Monomial(merged.items())

    def exponent(self, name: str) -> int:
        for n, e in self.exps:
            if n == name:
                return e
        return 0

    def divide(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if not divisible."""
        quo = dict(self.exps)
        for name, e in other.exps:
            r = quo.get(name, 0) - e
            if r < 0:
                raise ValueError(f"{self} not divisible by {other}")
            quo[name] = r
        return Monomial(quo.items())

    def variables(self):
        return tuple(n for n, _ in self.exps)

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in self.exps)

    def __repr__(self):
        return f"Monomial({self})"


def _grlex_cmp(m1: Monomial, m2: Monomial) -> int:
    if m1.degree != m2.degree:
        return 1 if m1.degree > m2.degree else -1
    a, b = m1.exps, m2.exps
    i = j = 0
    while i < len(a) and j < len(b):
        k1, k2 = _var_key(a[i][0]), _var_key(b[j][0])
        if k1 < k2:
            return 1
        if k2 < k1:
            return -1
        if a[i][1] != b[j][1]:
            return 1 if a[i][1] > b[j][1] else -1
        i += 1
        j += 1
    if i < len(a):
        return 1
    if j < len(b):
        return -1
    return 0


class _GrlexKey:
    __slots__ = ("m",)

    def __init__(self, m: Monomial):
        self.m = m

    def __lt__(self, other):
        return _grlex_cmp(self.m, other.m) < 0


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational coefficient: {c!r}")


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        out = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    out[m] = c
        self.terms = out

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({Monomial.unit(): _as_fraction(c)})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls({Monomial.of(name): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {Monomial.unit(): Fraction(1)}

    def is_constant(self) -> bool:
        return all(m.is_unit() for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return next(iter(self.terms.values()))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def _coerced(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        if isinstance(other, Polynomial):
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        p = Polynomial.__new__(Polynomial)
        p.terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero()
            return Polynomial({m: k * c for m, k in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = out.get(m)
                if s is None:
                    out[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        p = Polynomial.__new__(Polynomial)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Polynomial; use RationalFunction")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def num_terms(self) -> int:
        return len(self.terms)

    def variables(self) -> set[str]:
        out = set()
        for m in self.terms:
            out.update(m.variables())
        return out

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_GrlexKey)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _GrlexKey(t[0]), reverse=True)

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term."""
        if not self.terms:
            return Monomial.unit()
        it = iter(self.terms)
        common = dict(next(it).exps)
        for m in it:
            if not common:
                break
            exps = dict(m.exps)
            common = {n: min(e, exps[n]) for n, e in common.items() if n in exps}
        return Monomial(common.items())

    def divide_monomial(self, m: Monomial) -> "Polynomial":
        if m.is_unit():
            return self
        return Polynomial({k.divide(m): c for k, c in self.terms.items()})

    def divide_exact(self, d: "Polynomial") -> "Polynomial | None":
        """Quotient self/d if division is exact, else None."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial.zero()
        dlm = d.leading_monomial()
        dlc = d.terms[dlm]
        rem = self
        quo: dict[Monomial, Fraction] = {}
        while not rem.is_zero():
            rlm = rem.leading_monomial()
            try:
                qm = rlm.divide(dlm)
            except ValueError:
                return None
            qc = rem.terms[rlm] / dlc
            quo[qm] = qc
            rem = rem - Polynomial({qm: qc}) * d
        return Polynomial(quo)

    def evaluate(self, assignments: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for name, e in m.exps:
                if name not in assignments:
                    raise ValueError(f"no value assigned to indeterminate {name}")
                v = v * _as_fraction(assignments[name]) ** e
            total += v
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if m.is_unit():
                body = str(abs(c))
            elif abs(c) == 1:
                body = str(m)
            else:
                body = f"{abs(c)}*{m}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_mul(p: Polynomial, r: Polynomial) -> Polynomial:
    return p * r


class _GcdBudgetExceeded(Exception):
    pass


def _poly_primitive(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    c = p.content()
    if p.leading_coefficient() < 0:
        c = -c
    return p * (1 / c)


def _gcd_univariate(p: Polynomial, q: Polynomial, name: str) -> Polynomial:
    def coeffs(poly):
        deg = max(m.exponent(name) for m in poly.terms)
        out = [Fraction(0)] * (deg + 1)
        for m, c in poly.terms.items():
            out[m.exponent(name)] += c
        return out

    a, b = coeffs(p), coeffs(q)
    while b and any(b):
        while b and not b[-1]:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        # monic remainder step
        lead = b[-1]
        bb = [x / lead for x in b]
        r = list(a)
        for i in range(len(a) - len(b), -1, -1):
            f = r[i + len(b) - 1]
            if f:
                for j, x in enumerate(bb):
                    r[i + j] -= f * x
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    poly = Polynomial({Monomial.of(name, i) if i else Monomial.unit(): c
                       for i, c in enumerate(a) if c})
    return _poly_primitive(poly)


def _split_by_variable(p: Polynomial, name: str) -> dict[int, Polynomial]:
    out: dict[int, dict] = {}
    for m, c in p.terms.items():
        e = m.exponent(name)
        rest = Monomial(tuple((n, k) for n, k in m.exps if n != name))
        out.setdefault(e, {})[rest] = c
    return {e: Polynomial(d) for e, d in out.items()}


def _join_by_variable(parts: dict[int, Polynomial], name: str) -> Polynomial:
    terms = {}
    for e, coeff in parts.items():
        for m, c in coeff.terms.items():
            terms[m * Monomial.of(name, e) if e else m] = c
    return Polynomial(terms)


def _gcd_rec(p: Polynomial, q: Polynomial, budget: list[int]) -> Polynomial:
    budget[0] -= 1
    if budget[0] < 0:
        raise _GcdBudgetExceeded
    if p.is_zero():
        return _poly_primitive(q)
    if q.is_zero():
        return _poly_primitive(p)
    if p.is_constant() or q.is_constant():
        return Polynomial.one()
    pvars = p.variables() & q.variables()
    if not pvars:
        return Polynomial.one()
    union = p.variables() | q.variables()
    if len(union) == 1:
        return _gcd_univariate(p, q, next(iter(union)))
    # recurse on the last variable in canonical order
    name = max(union, key=_var_key)
    pp = _split_by_variable(p, name)
    qq = _split_by_variable(q, name)

    def content_of(parts):
        g = Polynomial.zero()
        for coeff in parts.values():
            g = _gcd_rec(g, coeff, budget)
            if g.is_one():
                break
        return g

    def primitive(parts, cont):
        if cont.is_one():
            return parts
        return {e: coeff.divide_exact(cont) for e, coeff in parts.items()}

    cp, cq = content_of(pp), content_of(qq)
    cg = _gcd_rec(cp, cq, budget)
    a, b = primitive(pp, cp), primitive(qq, cq)

    def deg(parts):
        return max(parts)

    def pseudo_rem(a, b):
        # lead(b)^(da-db+1) * a  mod b, as maps degree -> coefficient Polynomial
        da, db = deg(a), deg(b)
        lb = b[db]
        r = dict(a)
        while r and deg(r) >= db:
            budget[0] -= 1
            if budget[0] < 0:
                raise _GcdBudgetExceeded
            dr = deg(r)
            lr = r[dr]
            new = {}
            for e, c in r.items():
                if e != dr:
                    new[e] = c * lb
            for e, c in b.items():
                if e == db:
                    continue
                k = dr - db + e
                t = new.get(k, Polynomial.zero()) - lr * c
                if t.is_zero():
                    new.pop(k, None)
                else:
                    new[k] = t
            r = new
        return r

    if deg(a) < deg(b):
        a, b = b, a
    while True:
        r = pseudo_rem(a, b)
        if not r:
            break
        rp = _join_by_variable(r, name)
        cont = content_of(_split_by_variable(rp, name))
        if not cont.is_one():
            rp = rp.divide_exact(cont)
        a, b = b, _split_by_variable(rp, name)
    g = _poly_primitive(_join_by_variable(b, name)) * cg
    # confirm: a pseudo-remainder gcd is only a candidate when budget-tight
    if g.is_one():
        return g
    if p.divide_exact(g) is None or q.divide_exact(g) is None:
        return Polynomial.one()
    return _poly_primitive(g)


def poly_gcd(p: Polynomial, q: Polynomial, step_budget: int = _GCD_STEP_BUDGET) -> Polynomial:
    """Primitive gcd of p and q; falls back to 1 when the step budget runs out."""
    try:
        return _gcd_rec(p, q, [step_budget])
    except _GcdBudgetExceeded:
        return Polynomial.one()


class RationalFunction:
    """Element of the fraction field, kept in the normal form described above."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if isinstance(num, (int, Fraction)):
            num = Polynomial.constant(num)
        if den is None:
            den = Polynomial.one()
        elif isinstance(den, (int, Fraction)):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial.zero(), Polynomial.one()
            return
        # strip the shared monomial factor
        mc_n, mc_d = num.monomial_content(), den.monomial_content()
        shared = {}
        exps_d = dict(mc_d.exps)
        for name, e in mc_n.exps:
            if name in exps_d:
                shared[name] = min(e, exps_d[name])
        if shared:
            m = Monomial(shared.items())
            num = num.divide_monomial(m)
            den = den.divide_monomial(m)
        # polynomial gcd, only while both sides are genuinely small
        if (reduce and len(num.terms) > 1 and len(den.terms) > 1
                and len(num.terms) + len(den.terms) <= _REDUCE_TERM_LIMIT):
            g = poly_gcd(num, den)
            if not g.is_one():
                num = num.divide_exact(g)
                den = den.divide_exact(g)
        # scale so den is integer-primitive with positive leading coefficient
        c = den.content()
        if den.leading_coefficient() < 0:
            c = -c
        if c != 1:
            inv = 1 / c
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(0)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(1)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(c)

    @classmethod
    def variable(cls, name: str) -> "RationalFunction":
        return cls(Polynomial.variable(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    @staticmethod
    def coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return RationalFunction(x)
        if isinstance(x, (int, Fraction)):
            return RationalFunction(x)
        raise TypeError(f"cannot coerce {x!r} into the scalar field")

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def reduced(self, step_budget: int = 10 * _GCD_STEP_BUDGET) -> "RationalFunction":
        """Force a gcd reduction regardless of size thresholds."""
        g = poly_gcd(self.num, self.den, step_budget)
        if g.is_one():
            return self
        return RationalFunction(self.num.divide_exact(g), self.den.divide_exact(g))

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    def evaluate(self, point) -> Fraction:
        assignments = point.assignments if isinstance(point, EvaluationPoint) else point
        d = self.den.evaluate(assignments)
        if d == 0:
            raise PoleError(f"denominator {self.den} vanishes at the given point")
        return self.num.evaluate(assignments) / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def var(name: str) -> RationalFunction:
    return RationalFunction.variable(name)


def const(c) -> RationalFunction:
    return RationalFunction.constant(c)


def qbracket(m: int) -> RationalFunction:
    """The balanced q-integer (q^m - q^-m)/(q - q^-1) as a normalized scalar."""
    if m < 0:
        raise ValueError("qbracket is defined for non-negative integers")
    q = var("q")
    return (q ** m - q ** (-m)) / (q - q ** (-1))


class EvaluationPoint:
    """Total assignment of exact rational values to an alphabet."""

    __slots__ = ("assignments",)

    def __init__(self, assignments: Mapping[str, Fraction],
                 alphabet: tuple[str, ...] = DEFAULT_ALPHABET):
        coerced = {k: _as_fraction(v) for k, v in assignments.items()}
        missing = [name for name in alphabet if name not in coerced]
        if missing:
            raise ValueError(f"evaluation point misses indeterminates: {missing}")
        self.assignments = coerced

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.assignments.items()))
        return f"EvaluationPoint({inner})"

    def __getitem__(self, name: str) -> Fraction:
        return self.assignments[name]

    def get(self, name: str, default=None):
        return self.assignments.get(name, default)

    def items(self):
        return self.assignments.items()


def evaluate_at(f: RationalFunction, point) -> Fraction:
    return f.evaluate(point)


class ExactMode:
    def __repr__(self):
        return "EXACT"


EXACT = ExactMode()


@dataclass(frozen=True)
class Probabilistic:
    """Schwartz-Zippel style equality testing at seeded random points."""

    seed: int
    trials: int = 8


_SAMPLE_NUM_BOUND = 10 ** 6
_SAMPLE_DEN_BOUND = 50
_SAMPLE_RETRIES = 64


def random_rational(rng: random.Random) -> Fraction:
    """Random nonzero rational with value not in {1, -1}."""
    while True:
        v = Fraction(rng.randint(-_SAMPLE_NUM_BOUND, _SAMPLE_NUM_BOUND),
                     rng.randint(1, _SAMPLE_DEN_BOUND))
        if v != 0 and v != 1 and v != -1:
            return v


def sample_point(rng: random.Random, names: Iterable[str]) -> dict[str, Fraction]:
    return {name: random_rational(rng) for name in sorted(names, key=_var_key)}


def pole_free_point(rng: random.Random, names, denominators,
                    retries: int = _SAMPLE_RETRIES) -> dict[str, Fraction]:
    """Seeded random point avoiding the zeros of every listed denominator."""
    names = set(names)
    for den in denominators:
        names |= den.variables()
    for _ in range(retries):
        pt = sample_point(rng, names)
        if all(den.evaluate(pt) != 0 for den in denominators):
            return pt
    raise SamplingError("no pole-free sample point found within the retry budget")


def rf_equals(f: RationalFunction, g: RationalFunction, mode=EXACT) -> bool:
    """Field equality: exact by cross-multiplication, or probabilistic.

    Probabilistic mode can only err by calling unequal elements equal,
    never the other way around.
    """
    g = RationalFunction.coerce(g)
    f = RationalFunction.coerce(f)
    if isinstance(mode, ExactMode):
        return f == g
    if not isinstance(mode, Probabilistic):
        raise TypeError(f"unknown equality mode: {mode!r}")
    rng = random.Random(mode.seed)
    names = f.variables() | g.variables()
    for _ in range(mode.trials):
        pt = pole_free_point(rng, names, [f.den, g.den])
        if f.evaluate(pt) != g.evaluate(pt):
            return False
    return True


def scalar_is_zero(x, mode=EXACT) -> bool:
    """Zero test for a field scalar (RationalFunction or plain rational)."""
    if isinstance(x, RationalFunction):
        if isinstance(mode, ExactMode):
            return x.is_zero()
        return rf_equals(x, RationalFunction.zero(), mode)
    return x == 0
