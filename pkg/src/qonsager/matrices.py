"""Exact dense matrices over the scalar field, and the spectral pipeline.

Matrix entries are either RationalFunction (symbolic) or plain Fractions
(specialized); all operations are exact.  Alongside the linear algebra
kernels (Bareiss determinant, inverse, rank, Kronecker product) this module
holds the module-verification machinery: relation checking, primitive
idempotents, the eigenvalue diagram, the q-Racah path fit, the weights t_i,
and the intertwiner pipeline.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

from .report import Report
from .scalars import (EXACT, EvaluationPoint, ExactMode, Polynomial,
                      RationalFunction, scalar_is_zero, var)


class SingularMatrixError(ValueError):
    pass


class SpectrumError(ValueError):
    pass


class QRacahPathError(ValueError):
    """The supplied eigenvalue list is not a q-Racah path labeling."""


class ClosureCapExceeded(RuntimeError):
    pass


class PipelineError(RuntimeError):
    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause


def _zero_like(x):
    return RationalFunction.zero() if isinstance(x, RationalFunction) else Fraction(0)


def _one_like(x):
    return RationalFunction.one() if isinstance(x, RationalFunction) else Fraction(1)


def _coerce_entry(x):
    if isinstance(x, (int, Fraction, RationalFunction)):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    raise TypeError(f"bad matrix entry: {x!r}")


# Fraction-entry matrices at least this large multiply through the
# scaled-integer fast path.
_INT_MATMUL_DIM = 16


class Matrix:
    """Square matrix with exact field entries, immutable by convention."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        out = []
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            out.append([_coerce_entry(x) for x in r])
        self.rows = out

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, dim: int, like=Fraction(1)) -> "Matrix":
        one, zero = _one_like(like), _zero_like(like)
        return cls([[one if i == j else zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, dim: int, like=Fraction(1)) -> "Matrix":
        zero = _zero_like(like)
        return cls([[zero] * dim for _ in range(dim)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        zero = _zero_like(entries[0])
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)]
                    for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for row in self.rows:
            yield from row

    def is_symbolic(self) -> bool:
        return any(isinstance(x, RationalFunction) for x in self.entries())

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Matrix([[x + y for x, y in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Matrix([[x - y for x, y in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[x * c for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self._matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def _matmul(self, other: "Matrix") -> "Matrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        n = self.dim
        if n >= _INT_MATMUL_DIM and not self.is_symbolic() and not other.is_symbolic():
            return Matrix(_int_scaled_matmul(self.rows, other.rows))
        bt = list(zip(*other.rows))
        out = []
        for arow in self.rows:
            orow = []
            for bcol in bt:
                acc = None
                for x, y in zip(arow, bcol):
                    p = x * y
                    acc = p if acc is None else acc + p
                orow.append(acc)
            out.append(orow)
        return Matrix(out)

    def power(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix power; use inverse()")
        result = Matrix.identity(self.dim, like=self.rows[0][0])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.dim != other.dim:
            return NotImplemented if not isinstance(other, Matrix) else False
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    def is_zero(self, mode=EXACT) -> bool:
        return all(scalar_is_zero(x, mode) for x in self.entries())

    def first_nonzero(self, mode=EXACT):
        """(i, j, entry) of the first nonzero entry, or None."""
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if not scalar_is_zero(x, mode):
                    return (i, j, x)
        return None

    def evaluate(self, point: EvaluationPoint) -> "Matrix":
        return Matrix([[x.evaluate(point) if isinstance(x, RationalFunction) else x
                        for x in row] for row in self.rows])

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __str__(self):
        body = self.to_strings()
        width = max((len(s) for r in body for s in r), default=1)
        return "\n".join("[" + "  ".join(s.rjust(width) for s in r) + "]" for r in body)

    def __repr__(self):
        return f"Matrix({self.dim}x{self.dim})"


def _int_scaled_matmul(a_rows, b_rows):
    """Exact product of Fraction matrices via a common-denominator integer pass."""

    def scaled(rows):
        den = 1
        for r in rows:
            for x in r:
                den = lcm(den, x.denominator)
        ints = [[x.numerator * (den // x.denominator) for x in r] for r in rows]
        return ints, den

    a_int, da = scaled(a_rows)
    b_int, db = scaled(b_rows)
    bt = list(zip(*b_int))
    d = da * db
    return [[Fraction(sum(map(operator.mul, ar, bc)), d) for bc in bt]
            for ar in a_int]


def kronecker(x: Matrix, y: Matrix) -> Matrix:
    dx, dy = x.dim, y.dim
    rows = []
    for i1 in range(dx):
        for i2 in range(dy):
            row = []
            for j1 in range(dx):
                xij = x.rows[i1][j1]
                row.extend(xij * y.rows[i2][j2] for j2 in range(dy))
            rows.append(row)
    return Matrix(rows)


# ---------------------------------------------------------------------------
# determinant / inverse / rank

def _poly_cleared(rows):
    """Clear RationalFunction denominators row by row.

    Returns (polynomial rows, overall multiplier polynomial) such that
    poly_rows = diag(row multipliers) * rows and multiplier = prod of them.
    """
    out = []
    total = Polynomial.one()
    for row in rows:
        rfs = [RationalFunction.coerce(x) for x in row]
        dens = [x.den for x in rfs]
        # suffix/prefix products so each entry is multiplied by the others' dens
        n = len(dens)
        prefix = [Polynomial.one()] * (n + 1)
        for i, d in enumerate(dens):
            prefix[i + 1] = prefix[i] * d
        suffix = [Polynomial.one()] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = suffix[i + 1] * dens[i]
        out.append([rfs[j].num * (prefix[j] * suffix[j + 1]) for j in range(n)])
        total = total * prefix[n]
    return out, total


def _bareiss_det_poly(rows) -> Polynomial:
    n = len(rows)
    m = [r[:] for r in rows]
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if piv is None:
            return Polynomial.zero()
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                quo = num.divide_exact(prev)
                assert quo is not None, "Bareiss division must be exact"
                m[i][j] = quo
            m[i][k] = Polynomial.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _bareiss_det_int(rows) -> int:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(m: Matrix):
    """Exact determinant by fraction-free elimination over the polynomial layer."""
    if m.is_symbolic():
        poly_rows, mult = _poly_cleared(m.rows)
        det = _bareiss_det_poly(poly_rows)
        return RationalFunction(det, mult)
    den = 1
    for x in m.entries():
        x = Fraction(x)
        den = lcm(den, x.denominator)
    ints = [[Fraction(x).numerator * (den // Fraction(x).denominator) for x in r]
            for r in m.rows]
    return Fraction(_bareiss_det_int(ints), den ** m.dim)


def _inv_scalar(x):
    if isinstance(x, RationalFunction):
        return x.inverse()
    return 1 / Fraction(x)


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when the determinant vanishes."""
    if scalar_is_zero(determinant(m)):
        raise SingularMatrixError("matrix is singular")
    n = m.dim
    like = m.rows[0][0]
    work = [row[:] for row in m.rows]
    inv = [row[:] for row in Matrix.identity(n, like=like).rows]
    for k in range(n):
        piv = next(i for i in range(k, n) if not scalar_is_zero(work[i][k]))
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            inv[k], inv[piv] = inv[piv], inv[k]
        scale = _inv_scalar(work[k][k])
        work[k] = [x * scale for x in work[k]]
        inv[k] = [x * scale for x in inv[k]]
        for i in range(n):
            if i == k:
                continue
            c = work[i][k]
            if scalar_is_zero(c):
                continue
            work[i] = [x - c * y for x, y in zip(work[i], work[k])]
            inv[i] = [x - c * y for x, y in zip(inv[i], inv[k])]
    return Matrix(inv)


def _flatten(m: Matrix):
    return [Fraction(x) if isinstance(x, int) else x for x in m.entries()]


def _echelon_insert(basis: list, row: list) -> bool:
    """Reduce row against basis; insert if independent.  Basis rows are monic."""
    for col, brow in basis:
        c = row[col]
        if not scalar_is_zero(c):
            row = [x - c * y for x, y in zip(row, brow)]
    piv = next((j for j, x in enumerate(row) if not scalar_is_zero(x)), None)
    if piv is None:
        return False
    scale = _inv_scalar(row[piv])
    basis.append((piv, [x * scale for x in row]))
    return True


def rank_of_span(matrices: Sequence[Matrix]) -> int:
    """Rank of the flattened matrices, by exact elimination."""
    if not matrices:
        return 0
    dim = matrices[0].dim
    if any(m.dim != dim for m in matrices):
        raise ValueError("matrices must share a dimension")
    basis: list = []
    for m in matrices:
        _echelon_insert(basis, _flatten(m))
    return len(basis)


def algebra_closure_dimension(matrices: Sequence[Matrix], cap: int | None = None) -> int:
    """Dimension of the unital algebra generated by the matrices.

    Grows the span breadth-first by left and right multiplication with the
    generators until stable.  Equal to dim^2 exactly when the matrices
    generate the full matrix algebra (Burnside-style irreducibility witness).
    """
    if not matrices:
        raise ValueError("need at least one matrix")
    n = matrices[0].dim
    if any(m.dim != n for m in matrices):
        raise ValueError("matrices must share a dimension")
    if cap is None:
        cap = n * n + 1
    if cap < n * n:
        raise ValueError(f"cap {cap} below the ambient dimension {n * n}")
    basis: list = []
    frontier: list[Matrix] = []
    for m in [Matrix.identity(n, like=matrices[0].rows[0][0]), *matrices]:
        if _echelon_insert(basis, _flatten(m)):
            frontier.append(m)
    while frontier:
        if len(basis) > cap:
            raise ClosureCapExceeded(f"closure exceeded cap {cap}")
        fresh = []
        for w in frontier:
            for g in matrices:
                for prod in (g * w, w * g):
                    if _echelon_insert(basis, _flatten(prod)):
                        fresh.append(prod)
        frontier = fresh
    return len(basis)


# ---------------------------------------------------------------------------
# representations

@dataclass
class Representation:
    """A module given by its dimension and the six standard generator matrices."""

    dim: int
    images: dict[str, Matrix]
    point: EvaluationPoint | None = None

    def __post_init__(self):
        for name, m in self.images.items():
            if m.dim != self.dim:
                raise ValueError(f"image of {name} has dimension {m.dim} != {self.dim}")

    @property
    def q(self):
        if self.point is None:
            return var("q")
        return self.point["q"]

    def scalar(self, c: RationalFunction):
        """Map a symbolic coefficient into this representation's scalar domain."""
        if self.point is None:
            return c
        return c.evaluate(self.point)

    def generators(self) -> list[str]:
        return list(self.images)


def verify_relations(rep: Representation, relations, mode=EXACT) -> Report:
    """Evaluate every residual of a relation set on the representation.

    A residual passes when its image is the zero matrix under the given
    equality mode.  Failures never abort the run; each failed check carries
    the first nonzero entry.
    """
    from .freealg import substitute  # late import: freealg depends on this module

    report = Report(suite="relations")
    power_cache: dict = {}
    for rel in relations:
        value = substitute(rel.residual, rep.images, scalars=rep.scalar,
                           power_cache=power_cache)
        bad = value.first_nonzero(mode)
        detail = ""
        if bad is not None:
            i, j, entry = bad
            text = str(entry)
            if len(text) > 160:
                text = text[:157] + "..."
            detail = f"entry ({i},{j}) = {text}"
        report.add(f"relations/{rel.name}", rel.ref, bad is None, detail)
    return report


# ---------------------------------------------------------------------------
# spectral pipeline

@dataclass
class EigenSystem:
    """Eigenvalues of a diagonalizable matrix with their primitive idempotents."""

    source: Matrix
    eigenvalues: list
    idempotents: list

    def validate(self) -> None:
        m = self.source
        dim = m.dim
        like = m.rows[0][0]
        ident = Matrix.identity(dim, like=like)
        total = None
        recomposed = None
        for theta, e in zip(self.eigenvalues, self.idempotents):
            total = e if total is None else total + e
            term = e.scale(theta)
            recomposed = term if recomposed is None else recomposed + term
        if total != ident:
            raise SpectrumError("idempotents do not sum to the identity")
        if recomposed != m:
            raise SpectrumError("weighted idempotents do not recompose the matrix")
        for i, ei in enumerate(self.idempotents):
            for j, ej in enumerate(self.idempotents):
                prod = ei * ej
                expect = ei if i == j else Matrix.zeros(dim, like=like)
                if prod != expect:
                    raise SpectrumError(f"idempotent product E{i}E{j} is wrong")
        for theta, e in zip(self.eigenvalues, self.idempotents):
            if m * e != e.scale(theta) or e * m != e.scale(theta):
                raise SpectrumError("matrix does not act by its eigenvalue")


def primitive_idempotents(m: Matrix, eigenvalues: Sequence) -> EigenSystem:
    """Spectral projections via the product formula, after an annihilation check."""
    thetas = list(eigenvalues)
    for i in range(len(thetas)):
        for j in range(i + 1, len(thetas)):
            if thetas[i] == thetas[j]:
                raise SpectrumError(f"eigenvalues {i} and {j} coincide")
    like = m.rows[0][0]
    ident = Matrix.identity(m.dim, like=like)
    ann = ident
    for theta in thetas:
        ann = ann * (m - ident.scale(theta))
    if not ann.is_zero():
        raise SpectrumError("not diagonalizable with the supplied spectrum")
    idempotents = []
    for i, ti in enumerate(thetas):
        e = ident
        denom = None
        for j, tj in enumerate(thetas):
            if j == i:
                continue
            e = e * (m - ident.scale(tj))
            d = ti - tj
            denom = d if denom is None else denom * d
        if denom is not None:
            e = e.scale(_inv_scalar(denom))
        if e.is_zero():
            raise SpectrumError(f"eigenvalue index {i} has no eigenspace")
        idempotents.append(e)
    system = EigenSystem(source=m, eigenvalues=thetas, idempotents=idempotents)
    system.validate()
    return system


def edge_polynomial(l1, l2, q):
    """The adjacency polynomial l1^2 - (q^2+q^-2) l1 l2 + l2^2 + (q^2-q^-2)^2."""
    return l1 * l1 - (q ** 2 + q ** -2) * l1 * l2 + l2 * l2 + (q ** 2 - q ** -2) ** 2


@dataclass
class DiagramD:
    """Graph on the eigenvalues: i ~ j iff the adjacency polynomial vanishes."""

    eigenvalues: list
    edges: set = field(default_factory=set)  # of frozenset({i, j})

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    @property
    def max_degree(self) -> int:
        return max((self.degree(i) for i in range(len(self.eigenvalues))), default=0)

    def neighbors(self, i: int) -> list[int]:
        out = []
        for e in self.edges:
            if i in e:
                (j,) = e - {i}
                out.append(j)
        return sorted(out)

    def is_connected(self) -> bool:
        n = len(self.eigenvalues)
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for j in self.neighbors(stack.pop()):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def is_path(self) -> bool:
        n = len(self.eigenvalues)
        if not self.is_connected():
            return False
        if n == 1:
            return not self.edges
        deg1 = sum(1 for i in range(n) if self.degree(i) == 1)
        return self.max_degree <= 2 and deg1 == 2 and len(self.edges) == n - 1

    def is_cycle(self) -> bool:
        n = len(self.eigenvalues)
        return (n >= 3 and self.is_connected()
                and all(self.degree(i) == 2 for i in range(n)))

    def classification(self) -> str:
        if self.is_path():
            return "path"
        if self.is_cycle():
            return "cycle"
        return "other"

    def path_order(self) -> list[int]:
        """Vertex order along the path; starts at the earliest-listed endpoint."""
        if not self.is_path():
            raise QRacahPathError("diagram is not a path")
        n = len(self.eigenvalues)
        if n == 1:
            return [0]
        start = min(i for i in range(n) if self.degree(i) == 1)
        order = [start]
        prev = None
        cur = start
        while len(order) < n:
            nxt = next(j for j in self.neighbors(cur) if j != prev)
            order.append(nxt)
            prev, cur = cur, nxt
        return order


def build_diagram(eigenvalues: Sequence, q) -> DiagramD:
    thetas = list(eigenvalues)
    for i in range(len(thetas)):
        for j in range(i + 1, len(thetas)):
            if thetas[i] == thetas[j]:
                raise SpectrumError(f"eigenvalues {i} and {j} coincide")
    edges = set()
    for i in range(len(thetas)):
        for j in range(i + 1, len(thetas)):
            if scalar_is_zero(edge_polynomial(thetas[i], thetas[j], q)):
                edges.add(frozenset({i, j}))
    return DiagramD(eigenvalues=thetas, edges=edges)


def fit_path_parameter(eigenvalues: Sequence, q):
    """Recover a with theta_i = a q^(d-2i) + a^-1 q^(2i-d) for a path labeling.

    Solves the first two labels as a linear system in (a, a^-1), then insists
    on u*v = 1, the three-term recurrence, the closed form at every index,
    and a^2 avoiding q^(2d-2), q^(2d-4), ..., q^(2-2d).
    """
    thetas = list(eigenvalues)
    d = len(thetas) - 1
    if d < 1:
        raise QRacahPathError("need at least two eigenvalues")
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            if thetas[i] == thetas[j]:
                raise QRacahPathError(f"labels {i} and {j} coincide")
    det = q ** 2 - q ** -2
    if scalar_is_zero(det):
        raise QRacahPathError("q^2 - q^-2 vanishes; q must not be a root of unity")
    u = (thetas[0] * q ** (2 - d) - thetas[1] * q ** (-d)) / det
    v = (thetas[1] * q ** d - thetas[0] * q ** (d - 2)) / det
    if scalar_is_zero(u) or not scalar_is_zero(u * v - 1):
        raise QRacahPathError("not a q-Racah path: u*v != 1 at index 1")
    beta = q ** 2 + q ** -2
    for i in range(1, d):
        if not scalar_is_zero(thetas[i - 1] - beta * thetas[i] + thetas[i + 1]):
            raise QRacahPathError(f"not a q-Racah path: recurrence fails at index {i}")
    for i in range(d + 1):
        expect = u * q ** (d - 2 * i) + _inv_scalar(u) * q ** (2 * i - d)
        if not scalar_is_zero(thetas[i] - expect):
            raise QRacahPathError(f"not a q-Racah path: closed form fails at index {i}")
    a2 = u * u
    for k in range(d - 1, -d, -1):
        if scalar_is_zero(a2 - q ** (2 * k)):
            raise QRacahPathError(f"excluded parameter: a^2 = q^{2 * k}")
    return u


def path_weights(a, q, d: int) -> list:
    """The weights t_i = a^(2i-d) q^(2i(d-i)) for 0 <= i <= d."""
    inv_a = _inv_scalar(a)
    out = []
    for i in range(d + 1):
        e = 2 * i - d
        t = a ** e if e >= 0 else inv_a ** (-e)
        out.append(t * q ** (2 * i * (d - i)))
    return out


@dataclass
class IntertwinerData:
    """Everything the spectral pipeline produced for one Lusztig automorphism."""

    generator: str                  # name of the diagonalizable generator used
    scalar_image: bool              # True when the generator acts as a scalar
    psi: Matrix
    psi_inv: Matrix
    ordering: list[int] | None = None   # path labeling as indices into the input
    eigenvalues: list | None = None     # ordered along the path
    idempotents: list | None = None
    a: object | None = None
    weights: list | None = None


def _is_scalar_matrix(m: Matrix) -> bool:
    c = m.rows[0][0]
    n = m.dim
    for i in range(n):
        for j in range(n):
            x = m.rows[i][j]
            if i == j:
                if not scalar_is_zero(x - c):
                    return False
            elif not scalar_is_zero(x):
                return False
    return True


def _detect_spectrum(m: Matrix) -> list:
    """Diagonal of a triangular matrix, deduplicated in first-appearance order."""
    n = m.dim
    upper = all(scalar_is_zero(m.rows[i][j]) for i in range(n) for j in range(i))
    lower = all(scalar_is_zero(m.rows[i][j]) for i in range(n) for j in range(i + 1, n))
    if not (upper or lower):
        raise SpectrumError("matrix is not triangular; supply its eigenvalues")
    seen = []
    for i in range(n):
        x = m.rows[i][i]
        if all(x != y for y in seen):
            seen.append(x)
    return seen


def intertwiner_pipeline(rep: Representation, index: int, side: str = "A",
                         eigenvalues: Sequence | None = None) -> IntertwinerData:
    """Spectral decomposition, path fit, weights, and the verified intertwiner.

    For the automorphism attached to A_index (side "A") or B_index (side "B"):
    build the eigensystem of that generator's matrix, check the eigenvalue
    diagram is a path, fit the path parameter, form Psi = sum t_i E_i, and
    verify Psi * rho(L(X)) = rho(X) * Psi for all six standard generators.
    A scalar generator image short-circuits to Psi = I.
    """
    from .freealg import BBOQ_ALPHABET, substitute
    from .lusztig import LusztigLetter, generator_image

    if side not in ("A", "B"):
        raise ValueError("side must be 'A' or 'B'")
    name = f"{side}{index}"
    if name not in rep.images:
        raise ValueError(f"representation has no image for {name}")
    m = rep.images[name]
    q = rep.q
    like = m.rows[0][0]
    ident = Matrix.identity(rep.dim, like=like)
    letter = LusztigLetter(star=(side == "B"), index=index)
    table = generator_image(letter)

    def conjugation_check(psi):
        for gen in BBOQ_ALPHABET:
            image = substitute(table.images[gen], rep.images, scalars=rep.scalar)
            if psi * image != rep.images[gen] * psi:
                raise PipelineError(
                    "conjugation",
                    AssertionError(f"Psi * rho(L({gen})) != rho({gen}) * Psi"))

    if _is_scalar_matrix(m):
        conjugation_check(ident)
        return IntertwinerData(generator=name, scalar_image=True,
                               psi=ident, psi_inv=ident)

    try:
        if eigenvalues is None:
            eigenvalues = _detect_spectrum(m)
        system = primitive_idempotents(m, eigenvalues)
    except SpectrumError as e:
        raise PipelineError("idempotents", e) from e

    try:
        diagram = build_diagram(system.eigenvalues, q)
        order = diagram.path_order()
    except (SpectrumError, QRacahPathError) as e:
        raise PipelineError("diagram", e) from e
    thetas = [system.eigenvalues[i] for i in order]
    idems = [system.idempotents[i] for i in order]
    d = len(thetas) - 1

    try:
        a = fit_path_parameter(thetas, q)
    except QRacahPathError as e:
        raise PipelineError("path-parameter", e) from e

    weights = path_weights(a, q, d)

    try:
        beta = q ** 2 + q ** -2
        for i in range(d + 1):
            for j in (i - 1, i + 1):
                if 0 <= j <= d:
                    ratio = 1 + ((thetas[i] - thetas[j]) / (q - q ** -1)) \
                        * ((q * thetas[i] - q ** -1 * thetas[j]) / (q ** 2 - q ** -2))
                    if not scalar_is_zero(weights[j] - weights[i] * ratio):
                        raise QRacahPathError(f"weight ratio fails at ({i},{j})")
        for i in range(1, d):
            if not scalar_is_zero(thetas[i - 1] + thetas[i + 1] - beta * thetas[i]):
                raise QRacahPathError(f"neighbor sum fails at inner vertex {i}")
        opposite = [g for g in BBOQ_ALPHABET
                    if g[0] != side and not g.endswith(str(index))]
        for gen in opposite:
            x = rep.images[gen]
            for i in range(d + 1):
                for j in range(d + 1):
                    if abs(i - j) > 1 and not (idems[i] * x * idems[j]).is_zero():
                        raise QRacahPathError(
                            f"E_{i} {gen} E_{j} != 0 with |i-j| > 1")
    except QRacahPathError as e:
        raise PipelineError("identities", e) from e

    psi = None
    psi_inv = None
    for t, e in zip(weights, idems):
        term = e.scale(t)
        inv_term = e.scale(_inv_scalar(t))
        psi = term if psi is None else psi + term
        psi_inv = inv_term if psi_inv is None else psi_inv + inv_term
    if psi * psi_inv != ident:
        raise PipelineError("intertwiner", AssertionError("Psi * Psi^-1 != I"))

    conjugation_check(psi)
    return IntertwinerData(generator=name, scalar_image=False, psi=psi,
                           psi_inv=psi_inv, ordering=order, eigenvalues=thetas,
                           idempotents=idems, a=a, weights=weights)
