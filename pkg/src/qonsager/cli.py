"""Batch verification front end.

Runs named check suites over the library and emits machine- or human-readable
reports.  Exit code 0 means every check passed, 1 means at least one failed,
2 means the invocation itself was invalid.  With a fixed seed the JSON report
is byte-identical across runs except for its timestamp field.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from time import perf_counter

from . import hexagon as hx
from .freealg import (BBOQ_ALPHABET, OQ_ALPHABET, NCPolynomial, commutator,
                      qdg_residual, relation_set, substitute,
                      tensor_slot_embed)
from .lusztig import (DihedralElement, LusztigLetter, apply_word,
                      dihedral_elements, dihedral_image, generator_image,
                      injera_check, reduced_words, twist_images, word_notation)
from .matrices import (Matrix, Representation, build_diagram, determinant,
                       edge_polynomial, fit_path_parameter,
                       intertwiner_pipeline, kronecker, mat_inverse,
                       path_weights, primitive_idempotents, rank_of_span,
                       verify_relations)
from .report import Report
from .scalars import (EXACT, Polynomial, Probabilistic, RationalFunction,
                      qbracket, rf_equals, var)

SUITES = ("scalars", "free-algebra", "lusztig", "rep-pipeline", "hexagon",
          "tensor", "evidence", "all")

DEFAULT_SEED = 20260809


@dataclass
class SuiteConfig:
    suite: str
    mode: object = EXACT
    params: str = "symbolic"   # "symbolic" or a parameter file path
    seed: int = DEFAULT_SEED
    word_length: int = 3

    def echo(self) -> dict:
        mode = ("exact" if mode_is_exact(self.mode)
                else f"probabilistic(seed={self.mode.seed}, trials={self.mode.trials})")
        return {"suite": self.suite, "mode": mode, "params": self.params,
                "seed": self.seed, "word_length": self.word_length}


def mode_is_exact(mode) -> bool:
    return not isinstance(mode, Probabilistic)


def _checked(report: Report, name: str, ref: str, fn) -> None:
    t0 = perf_counter()
    try:
        out = fn()
        ok, detail = out if isinstance(out, tuple) else (out, "")
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    report.add(name, ref, bool(ok), detail, elapsed=perf_counter() - t0)


def _params_point(config: SuiteConfig):
    """Evaluation point for suites that need concrete parameters."""
    if config.params != "symbolic":
        return hx.parse_params_file(config.params)
    return hx.seeded_point(config.seed)


def _bundle(config: SuiteConfig) -> hx.ExampleBundle:
    if config.params == "symbolic":
        return hx.build_example(hx.ExampleParams.symbolic())
    return hx.build_example(hx.ExampleParams.at(hx.parse_params_file(config.params)))


def _merge_prefixed(report: Report, sub: Report, prefix: str) -> None:
    for c in sub.checks:
        report.checks.append(type(c)(name=f"{prefix}/{c.name}", ref=c.ref,
                                      status=c.status, detail=c.detail,
                                      elapsed=c.elapsed))


# ---------------------------------------------------------------------------
# suites

def _random_rf(rng: random.Random, names=("q", "a1", "n")) -> RationalFunction:
    def rand_poly(allow_zero):
        while True:
            terms = {}
            for _ in range(rng.randint(1, 3)):
                mono = {}
                for name in names:
                    e = rng.randint(0, 2)
                    if e:
                        mono[name] = e
                from .scalars import Monomial
                terms[Monomial(mono.items())] = Fraction(rng.randint(-4, 4))
            p = Polynomial(terms)
            if allow_zero or not p.is_zero():
                return p
    return RationalFunction(rand_poly(True), rand_poly(False))


def suite_scalars(config: SuiteConfig) -> Report:
    report = Report(suite="scalars", config=config.echo())
    q = var("q")
    mode = config.mode
    _checked(report, "scalars/qbracket/0", "qbracket(0) = 0",
             lambda: qbracket(0).is_zero())
    _checked(report, "scalars/qbracket/2", "qbracket(2) = q + q^-1",
             lambda: rf_equals(qbracket(2), q + q ** -1, mode))
    _checked(report, "scalars/qbracket/3", "qbracket(3) = q^2 + 1 + q^-2",
             lambda: rf_equals(qbracket(3), q ** 2 + 1 + q ** -2, mode))
    _checked(report, "scalars/qbracket/defining-identity",
             "qbracket(m) (q - q^-1) = q^m - q^-m for m <= 20",
             lambda: all(qbracket(m) * (q - q ** -1) == q ** m - q ** -m
                         for m in range(21)))
    _checked(report, "scalars/division-example",
             "(q^2 - q^-2) / (q - q^-1) = q + q^-1",
             lambda: rf_equals((q ** 2 - q ** -2) / (q - q ** -1),
                               q + q ** -1, mode))

    rng = random.Random(config.seed)
    triples = [tuple(_random_rf(rng) for _ in range(3)) for _ in range(8)]

    def axioms():
        one = RationalFunction.one()
        for f, g, h in triples:
            if (f + g) + h != f + (g + h):
                return False, "associativity of + failed"
            if (f * g) * h != f * (g * h):
                return False, "associativity of * failed"
            if f * (g + h) != f * g + f * h:
                return False, "distributivity failed"
            if f * g != g * f or f + g != g + f:
                return False, "commutativity failed"
            if f + RationalFunction.zero() != f or f * one != f:
                return False, "identity failed"
            if not (f - f).is_zero():
                return False, "additive inverse failed"
            if not g.is_zero():
                if (f / g) * g != f:
                    return False, "multiplicative inverse failed"
                if not (g / g).is_one():
                    return False, "g/g != 1"
        return True

    _checked(report, "scalars/field-axioms",
             "field axioms on seeded random triples", axioms)

    def normalization():
        n = var("n")
        f = (1 - n ** 2) / (1 - n)
        if str(f) != str(1 + n):
            return False, f"canonical form mismatch: {f}"
        for fr, _, _ in triples:
            again = RationalFunction(fr.num, fr.den)
            if str(again) != str(fr):
                return False, "normalization is not idempotent"
        return True

    _checked(report, "scalars/normalization",
             "normalization is idempotent; equal small elements print alike",
             normalization)

    def exact_prob_agree():
        prob = Probabilistic(seed=config.seed, trials=8)
        for f, g, _ in triples:
            if not g.is_zero():
                lhs = (f / g) * g
                if rf_equals(lhs, f) and not rf_equals(lhs, f, prob):
                    return False, "probabilistic equality contradicted exact"
        return True

    _checked(report, "scalars/equality-modes",
             "probabilistic equality never denies an exact equality",
             exact_prob_agree)

    def division_by_zero():
        try:
            var("q") / RationalFunction.zero()
            return False, "no error raised"
        except ZeroDivisionError:
            return True

    _checked(report, "scalars/division-by-zero",
             "dividing by the zero function raises", division_by_zero)
    return report


def suite_free_algebra(config: SuiteConfig) -> Report:
    report = Report(suite="free-algebra", config=config.echo())
    q = var("q")
    a_, b_ = NCPolynomial.generator("A"), NCPolynomial.generator("B")
    _checked(report, "freealg/relation-count/Oq", "two defining residuals",
             lambda: len(relation_set("Oq")) == 2)
    _checked(report, "freealg/relation-count/bbOq", "21 defining residuals",
             lambda: len(relation_set("bbOq")) == 21)
    _checked(report, "freealg/residual-word-length",
             "all residual words have length <= 4",
             lambda: max(r.residual.max_word_length()
                         for r in relation_set("bbOq")) == 4)

    def qdg_coeffs():
        r = qdg_residual(a_, b_)
        b3 = qbracket(3)
        c = (q ** 2 - q ** -2) ** 2
        expected = {("A", "A", "A", "B"): RationalFunction.one(),
                    ("A", "A", "B", "A"): -b3,
                    ("A", "B", "A", "A"): b3,
                    ("B", "A", "A", "A"): -RationalFunction.one(),
                    ("B", "A"): -c, ("A", "B"): c}
        if set(r.terms) != set(expected):
            return False, "wrong word support"
        return all(r.coefficient(w) == v for w, v in expected.items())

    _checked(report, "freealg/qdg-coefficients",
             "six words with coefficients (1, -[3], [3], -1, -(q^2-q^-2)^2, +)",
             qdg_coeffs)
    _checked(report, "freealg/qdg-self", "qdg residual of (X, X) collapses to 0",
             lambda: qdg_residual(a_ + b_, a_ + b_).is_zero())
    _checked(report, "freealg/swap-symmetry",
             "the two residuals swap under A <-> B",
             lambda: relation_set("Oq").relations[0].residual.rename(
                 {"A": "B", "B": "A"})
             == relation_set("Oq").relations[1].residual)

    rng = random.Random(config.seed)

    def random_nc():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            word = tuple(rng.choice(OQ_ALPHABET)
                         for _ in range(rng.randint(0, 3)))
            terms[word] = RationalFunction.constant(rng.randint(-3, 3))
        return NCPolynomial(OQ_ALPHABET, terms)

    def homomorphism():
        imgs = {"A": NCPolynomial.generator("A1"),
                "B": NCPolynomial.generator("B2")}
        for _ in range(6):
            x, y = random_nc(), random_nc()
            if substitute(x * y, imgs) != substitute(x, imgs) * substitute(y, imgs):
                return False, "multiplicativity failed"
            if substitute(x + y, imgs) != substitute(x, imgs) + substitute(y, imgs):
                return False, "additivity failed"
        return True

    _checked(report, "freealg/substitute-homomorphism",
             "substitution respects products and sums", homomorphism)

    def commuting_images():
        d1 = Matrix.diagonal([Fraction(2), Fraction(3)])
        d2 = Matrix.diagonal([Fraction(5), Fraction(7)])
        pt = hx.seeded_point(config.seed)
        value = substitute(qdg_residual(a_, b_), {"A": d1, "B": d2},
                           scalars=lambda c: c.evaluate(pt))
        return value.is_zero()

    _checked(report, "freealg/qdg-commuting-images",
             "the residual vanishes on commuting matrices", commuting_images)
    _checked(report, "freealg/commutator-self", "[X, X] = 0",
             lambda: commutator(a_ * b_ + b_, a_ * b_ + b_).is_zero())

    def slot_embedding():
        rng2 = random.Random(config.seed + 1)

        def r2():
            return Matrix([[Fraction(rng2.randint(-4, 4)) for _ in range(2)]
                           for _ in range(2)])
        x, y = r2(), r2()
        e1 = tensor_slot_embed(x, 1, 2)
        e2 = tensor_slot_embed(y, 2, 2)
        if e1.dim != 8:
            return False, "wrong embedded dimension"
        if e1 * e2 != e2 * e1:
            return False, "disjoint slots do not commute"
        ident = Matrix.identity(2)
        if tensor_slot_embed(ident, 3, 2) != Matrix.identity(8):
            return False, "identity does not embed to the identity"
        return True

    _checked(report, "freealg/tensor-slot-embed",
             "slot embeddings have the right dimension and commute", slot_embedding)
    return report


def suite_lusztig(config: SuiteConfig) -> Report:
    report = Report(suite="lusztig", config=config.echo())

    def fixed_points():
        for i in (1, 2, 3):
            for star in (False, True):
                for inverse in (False, True):
                    table = generator_image(LusztigLetter(star, i, inverse))
                    kind = "B" if star else "A"
                    fixed = [f"{kind}{j}" for j in (1, 2, 3)]
                    fixed.append(f"{'A' if star else 'B'}{i}")
                    for gen in fixed:
                        if table[gen] != NCPolynomial.generator(gen):
                            return False, f"{table!r} moves {gen}"
        return True

    _checked(report, "lusztig/fixed-points",
             "each automorphism fixes the generators commuting with its pivot",
             fixed_points)

    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i != j:
                _checked(report, f"lusztig/injera/{i}-{j}",
                         f"embedding diagrams commute for (i,j) = ({i},{j})",
                         lambda i=i, j=j: injera_check(i, j))

    def corrupted():
        bad = generator_image(LusztigLetter(index=1, inverse=True))
        return not injera_check(1, 2, l_table=bad)

    _checked(report, "lusztig/injera-corrupted",
             "a q <-> q^-1 corrupted table breaks the diagram", corrupted)

    def dihedral_group_law():
        for g in dihedral_elements():
            tg = dihedral_image(g)
            for h in dihedral_elements():
                th = dihedral_image(h)
                tgh = dihedral_image(g.compose(h))
                for gen in BBOQ_ALPHABET:
                    if substitute(th[gen], tg.images) != tgh[gen]:
                        return False, f"composition fails at {g}, {h}, {gen}"
        return True

    _checked(report, "lusztig/dihedral-group-law",
             "hexagon symmetry tables compose by the dihedral group law",
             dihedral_group_law)

    def dihedral_preserves_relations():
        rels = [r.residual for r in relation_set("bbOq")]
        for g in dihedral_elements():
            table = dihedral_image(g)
            for res in rels:
                img = substitute(res, table.images)
                if not any(img == r or img == -r for r in rels):
                    return False, f"image of a residual escapes the set under {g}"
        return True

    _checked(report, "lusztig/dihedral-preserves-relations",
             "hexagon symmetries permute the defining residuals up to sign",
             dihedral_preserves_relations)

    x = LusztigLetter(index=1)
    y = LusztigLetter(star=True, index=2)
    _checked(report, "lusztig/reduced-words/counts",
             "1 + 4 + 12 + ... freely reduced words per length",
             lambda: (len(reduced_words(x, y, 1)) == 5
                      and len(reduced_words(x, y, 2)) == 17
                      and len(reduced_words(x, y, 3)) == 53))

    def no_cancellation():
        for w in reduced_words(x, y, 3):
            for k in range(len(w) - 1):
                if w[k] == w[k + 1].inverted():
                    return False, word_notation(w)
        return True

    _checked(report, "lusztig/reduced-words/reduced",
             "no emitted word contains a cancelling adjacent pair",
             no_cancellation)

    bundle = _bundle(config)

    def inverse_law():
        rep = bundle.rep
        for i in (1, 2, 3):
            for star in (False, True):
                letter = LusztigLetter(star, i)
                for gen in BBOQ_ALPHABET:
                    word_img = apply_word([letter, letter.inverted()],
                                          NCPolynomial.generator(gen))
                    value = substitute(word_img, rep.images, scalars=rep.scalar)
                    if value != rep.images[gen]:
                        return False, f"L{i}{'*' if star else ''} inverse law fails at {gen}"
        return True

    _checked(report, "lusztig/inverse-law-on-module",
             "L L^-1 acts as the identity on the dimension-5 module",
             inverse_law)
    return report


def suite_rep_pipeline(config: SuiteConfig) -> Report:
    report = Report(suite="rep-pipeline", config=config.echo())
    q = var("q")
    a = var("a")

    def p_symmetry():
        l1, l2 = var("lambda1"), var("lambda2")
        return edge_polynomial(l1, l2, q) == edge_polynomial(l2, l1, q)

    _checked(report, "pipeline/adjacency-symmetry",
             "the adjacency polynomial is symmetric in its arguments", p_symmetry)

    def closed_thetas(d):
        return [a * q ** (d - 2 * i) + a ** -1 * q ** (2 * i - d)
                for i in range(d + 1)]

    for d in range(1, 6):
        thetas = closed_thetas(d)

        _checked(report, f"pipeline/recurrence/d{d}",
                 "theta_(i-1) - (q^2+q^-2) theta_i + theta_(i+1) = 0",
                 lambda thetas=thetas: all(
                     (thetas[i - 1] - (q ** 2 + q ** -2) * thetas[i]
                      + thetas[i + 1]).is_zero()
                     for i in range(1, d)) if d >= 2 else True)

        def weight_ratios(thetas=thetas, d=d):
            t = path_weights(a, q, d)
            for i in range(d + 1):
                for j in (i - 1, i + 1):
                    if not 0 <= j <= d:
                        continue
                    ratio = 1 + ((thetas[i] - thetas[j]) / (q - q ** -1)) \
                        * ((q * thetas[i] - q ** -1 * thetas[j]) / (q ** 2 - q ** -2))
                    if t[j] != t[i] * ratio:
                        return False, f"ratio fails at ({i},{j})"
                if 1 <= i <= d:
                    if t[i] / t[i - 1] != a ** 2 * q ** (2 * (d - 2 * i + 1)):
                        return False, f"t_i/t_(i-1) fails at {i}"
            return True

        _checked(report, f"pipeline/weight-ratios/d{d}",
                 "adjacent weight ratios match both closed forms", weight_ratios)

        _checked(report, f"pipeline/neighbor-sum/d{d}",
                 "theta_j + theta_k = (q^2+q^-2) theta_i at inner path vertices",
                 lambda thetas=thetas: all(
                     (thetas[i - 1] + thetas[i + 1]
                      - (q ** 2 + q ** -2) * thetas[i]).is_zero()
                     for i in range(1, d)) if d >= 2 else True)

        def diagram_and_fit(thetas=thetas, d=d):
            dg = build_diagram(thetas, q)
            if not dg.is_path() or dg.path_order() != list(range(d + 1)):
                return False, "closed-form spectrum is not a path in order"
            u = fit_path_parameter(thetas, q)
            if u != a:
                return False, "fitted parameter differs from a"
            regen = [u * q ** (d - 2 * i) + u ** -1 * q ** (2 * i - d)
                     for i in range(d + 1)]
            return all(x == y for x, y in zip(regen, thetas))

        _checked(report, f"pipeline/path-fit/d{d}",
                 "diagram is a path and the fitted parameter regenerates it",
                 diagram_and_fit)

        def orientation(thetas=thetas, d=d):
            m = Matrix.diagonal(thetas)
            sys_fwd = primitive_idempotents(m, thetas)
            fwd = None
            for t, e in zip(path_weights(fit_path_parameter(thetas, q), q, d),
                            sys_fwd.idempotents):
                term = e.scale(t)
                fwd = term if fwd is None else fwd + term
            rev_thetas = list(reversed(thetas))
            sys_rev = primitive_idempotents(m, rev_thetas)
            rev = None
            for t, e in zip(path_weights(fit_path_parameter(rev_thetas, q), q, d),
                            sys_rev.idempotents):
                term = e.scale(t)
                rev = term if rev is None else rev + term
            return fwd == rev

        _checked(report, f"pipeline/orientation-invariance/d{d}",
                 "reversed path labeling yields the identical intertwiner",
                 orientation)

    bundle = _bundle(config)
    rep = bundle.rep

    def example_d1():
        s = bundle.params.scalars()
        qq, a1 = s["q"], s["a1"]
        data = intertwiner_pipeline(rep, 1, "A")
        qi = qq ** -1 if isinstance(qq, RationalFunction) else 1 / qq
        ai = a1 ** -1 if isinstance(a1, RationalFunction) else 1 / a1
        if data.eigenvalues != [a1 * qq + ai * qi, a1 * qi + ai * qq]:
            return False, "eigenvalue order differs from the d = 1 example"
        if data.a != a1 or data.weights != [ai, a1]:
            return False, "path data differs from the d = 1 example"
        expect = bundle.e[1].scale(ai - a1) + bundle.identity.scale(a1)
        return data.psi == expect

    _checked(report, "pipeline/example-d1",
             "pipeline on the module reproduces theta_0, t_0 = a^-1, t_1 = a",
             example_d1)

    def eigensystem_identities():
        m = rep.images["A1"]
        system = primitive_idempotents(
            m, intertwiner_pipeline(rep, 1, "A").eigenvalues)
        system.validate()
        return True

    _checked(report, "pipeline/eigensystem-identities",
             "sum, orthogonality, recomposition and commutation all hold",
             eigensystem_identities)

    def scalar_shortcircuit():
        images = {g: Matrix([[Fraction(k + 2)]])
                  for k, g in enumerate(BBOQ_ALPHABET)}
        one_dim = Representation(dim=1, images=images,
                                 point=hx.seeded_point(config.seed))
        data = intertwiner_pipeline(one_dim, 1, "A")
        return data.scalar_image and data.psi == Matrix.identity(1)

    _checked(report, "pipeline/scalar-image",
             "a scalar generator image short-circuits to Psi = I",
             scalar_shortcircuit)

    def non_path_rejected():
        th = [var("theta"), var("theta") + 1]
        try:
            fit_path_parameter(th, q)
            return False, "no error for unrelated eigenvalues"
        except Exception as exc:
            return ("u*v != 1" in str(exc)), str(exc)

    _checked(report, "pipeline/non-path-rejected",
             "unrelated eigenvalues fail the u*v = 1 gate", non_path_rejected)
    return report


def suite_hexagon(config: SuiteConfig) -> Report:
    report = Report(suite="hexagon", config=config.echo())
    bundle = _bundle(config)
    t0 = perf_counter()
    rel = verify_relations(bundle.rep, relation_set("bbOq"), mode=config.mode)
    elapsed = perf_counter() - t0
    for c in rel.checks:
        report.checks.append(type(c)(name=f"hexagon/{c.name}", ref=c.ref,
                                     status=c.status, detail=c.detail,
                                     elapsed=elapsed / len(rel.checks)))
    report.extend(hx.verify_structure(bundle))
    report.extend(hx.verify_conjugations(bundle))
    report.extend(hx.verify_basis_and_irreducibility(bundle, seed=config.seed))
    report.extend(hx.verify_intertwiners(bundle))
    return report


def suite_tensor(config: SuiteConfig) -> Report:
    point = _params_point(config)
    report = Report(suite="tensor", config=config.echo())
    report.config["point"] = {k: str(v) for k, v in sorted(point.items())}
    bundle = hx.build_example(hx.ExampleParams.at(point))
    a_mat, b_mat = bundle.rep.images["A1"], bundle.rep.images["B2"]
    for variant in ("OOO", "OOO2"):
        try:
            rep = hx.build_tensor_rep(a_mat, b_mat, variant, point=point)
        except ValueError as exc:
            report.add(f"tensor/{variant}/build", "tensor cube construction",
                       False, detail=str(exc))
            continue
        rel = verify_relations(rep, relation_set("bbOq"), mode=config.mode)
        _merge_prefixed(report, rel, f"tensor/{variant}")
        _checked(report, f"tensor/{variant}/span-rank",
                 "identity plus the six images span a 7-dimensional space",
                 lambda rep=rep: (rank_of_span(
                     [Matrix.identity(rep.dim)] + list(rep.images.values())) == 7))
    return report


def suite_evidence(config: SuiteConfig) -> Report:
    point = _params_point(config)
    report = Report(suite="evidence", config=config.echo())
    report.config["point"] = {k: str(v) for k, v in sorted(point.items())}
    bundle = hx.build_example(hx.ExampleParams.at(point))
    rep = bundle.rep
    x = LusztigLetter(index=1)
    y = LusztigLetter(star=True, index=2)
    words = reduced_words(x, y, config.word_length)
    expected = 1 + sum(4 * 3 ** (k - 1) for k in range(1, config.word_length + 1))
    report.add("evidence/word-count",
               f"freely reduced words of length <= {config.word_length}",
               len(words) == expected, detail=f"{len(words)} words")

    twisted: dict = {(): dict(rep.images)}
    for w in words:
        if w:
            parent = twisted[w[:-1]]
            twisted[w] = twist_images(parent, w[-1], scalars=rep.scalar)

    def key_of(images):
        return tuple(tuple(tuple(row) for row in images[g].rows)
                     for g in BBOQ_ALPHABET)

    seen: dict = {}
    collision = None
    for w in words:
        k = key_of(twisted[w])
        if k in seen:
            collision = (seen[k], w)
            break
        seen[k] = w
    report.add("evidence/pairwise-distinct",
               "every reduced word acts with a distinct generator-image tuple",
               collision is None,
               detail="" if collision is None else
               f"{word_notation(collision[0])} == {word_notation(collision[1])}")
    return report


_SUITE_RUNNERS = {
    "scalars": suite_scalars,
    "free-algebra": suite_free_algebra,
    "lusztig": suite_lusztig,
    "rep-pipeline": suite_rep_pipeline,
    "hexagon": suite_hexagon,
    "tensor": suite_tensor,
    "evidence": suite_evidence,
}


def run_suite(config: SuiteConfig) -> Report:
    """Execute one suite (or all of them) and return the merged report."""
    if config.suite == "all":
        merged = Report(suite="all", config=config.echo())
        for name in SUITES[:-1]:
            sub = _SUITE_RUNNERS[name](config)
            merged.checks.extend(sub.checks)
        return merged
    try:
        runner = _SUITE_RUNNERS[config.suite]
    except KeyError:
        raise ValueError(f"unknown suite: {config.suite!r}") from None
    return runner(config)


def emit_report(report: Report, fmt: str = "text",
                timestamp: str | None = None) -> str:
    """Render a report; JSON is schema-stable and sorted by check name."""
    if fmt == "json":
        return report.to_json(timestamp=timestamp)
    if fmt == "text":
        return report.to_text()
    raise ValueError(f"unknown format: {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qonsager",
        description="Exact verification suites for the hexagon algebra, its "
                    "Lusztig automorphisms, and the dimension-5 module.")
    parser.add_argument("--suite", choices=SUITES, default="all")
    parser.add_argument("--mode", choices=("exact", "prob"), default="exact")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for probabilistic equality and parameter points")
    parser.add_argument("--trials", type=int, default=8,
                        help="trials per probabilistic equality test")
    parser.add_argument("--params", default="symbolic",
                        help="'symbolic' or a parameter file (name = p/q lines)")
    parser.add_argument("--word-length", type=int, default=3,
                        help="maximum word length for the evidence suite")
    parser.add_argument("--format", choices=("json", "text"), default="text",
                        dest="fmt")
    parser.add_argument("--out", default=None, help="write the report here")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.mode == "prob" and args.seed is None:
        parser.error("--mode prob requires --seed")
    if args.word_length < 1:
        parser.error("--word-length must be >= 1")
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    mode = EXACT if args.mode == "exact" else Probabilistic(seed=seed,
                                                            trials=args.trials)
    if args.params != "symbolic":
        try:
            hx.parse_params_file(args.params)
        except (OSError, ValueError) as exc:
            parser.error(f"bad parameter file: {exc}")
    config = SuiteConfig(suite=args.suite, mode=mode, params=args.params,
                         seed=seed, word_length=args.word_length)
    report = run_suite(config)
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    text = emit_report(report, args.fmt, timestamp=stamp)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
