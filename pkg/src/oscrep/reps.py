"""Lie algebra families and their oscillator realizations as Weyl operators.

Matrix indices follow the usual layout: ``1..n`` for ``sl(n)``, ``1..2n`` for
``o(2n)`` and ``sp(2n)`` (index ``n+i`` is the partner of ``i``), and
``0..2n`` for ``o(2n+1)`` with ``0`` the extra row and column.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import InvalidParams, NotAWeightVector, NotInAlgebra
from .weyl import Polynomial, Ring, WeylOperator, op_apply


class Family(enum.Enum):
    SPECIAL_LINEAR = "sl"
    ORTHO_EVEN = "so-even"
    ORTHO_ODD = "so-odd"
    SYMPLECTIC = "sp"

    @classmethod
    def from_name(cls, name: str) -> "Family":
        aliases = {"sl": cls.SPECIAL_LINEAR, "so-even": cls.ORTHO_EVEN, "o-even": cls.ORTHO_EVEN,
                   "so-odd": cls.ORTHO_ODD, "o-odd": cls.ORTHO_ODD, "sp": cls.SYMPLECTIC}
        try:
            return aliases[name]
        except KeyError:
            raise InvalidParams(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class RepParams:
    """Family plus the block sizes ``n1 <= n2`` that fix the realization.

    ``single_block`` selects the one-block action on ``F[x1..xn]`` (sl only);
    there ``n2`` is ignored.
    """

    family: Family
    n: int
    n1: int
    n2: int
    single_block: bool = False

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.from_name(self.family))
        if self.n < 2:
            raise InvalidParams("n must be at least 2")
        if self.single_block:
            if self.family is not Family.SPECIAL_LINEAR:
                raise InvalidParams("single-block mode exists only for sl")
            if not 1 <= self.n1 < self.n:
                raise InvalidParams("single-block mode needs 1 <= n1 < n")
            object.__setattr__(self, "n2", self.n1)
        elif not 1 <= self.n1 <= self.n2 <= self.n:
            raise InvalidParams("need 1 <= n1 <= n2 <= n")

    @property
    def ring(self) -> Ring:
        return Ring(self.n, odd=self.family is Family.ORTHO_ODD, with_y=not self.single_block)

    @property
    def dim(self) -> int:
        """Size of the defining matrices."""
        if self.family is Family.SPECIAL_LINEAR:
            return self.n
        return 2 * self.n + (1 if self.family is Family.ORTHO_ODD else 0)

    @property
    def indices(self) -> range:
        if self.family is Family.SPECIAL_LINEAR:
            return range(1, self.n + 1)
        if self.family is Family.ORTHO_ODD:
            return range(0, 2 * self.n + 1)
        return range(1, 2 * self.n + 1)

    def as_dict(self) -> dict:
        d = {"family": self.family.value, "n": self.n, "n1": self.n1, "n2": self.n2}
        if self.single_block:
            d["single_block"] = True
        return d

    def label(self) -> str:
        names = {Family.SPECIAL_LINEAR: f"sl({self.n})", Family.ORTHO_EVEN: f"o({2 * self.n})",
                 Family.ORTHO_ODD: f"o({2 * self.n + 1})", Family.SYMPLECTIC: f"sp({2 * self.n})"}
        return f"{names[self.family]} n1={self.n1} n2={self.n2}"


class Matrix:
    """Sparse matrix over Q, indexed by the family's index set."""

    __slots__ = ("entries",)

    def __init__(self, entries: Dict[Tuple[int, int], object] | None = None):
        self.entries: Dict[Tuple[int, int], Fraction] = {
            k: Fraction(v) for k, v in (entries or {}).items() if v
        }

    @classmethod
    def unit(cls, r: int, c: int) -> "Matrix":
        return cls({(r, c): 1})

    def __add__(self, other: "Matrix") -> "Matrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return Matrix(out)

    def __neg__(self) -> "Matrix":
        return Matrix({k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return Matrix({k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        out: Dict[Tuple[int, int], Fraction] = {}
        rows: Dict[int, list] = {}
        for (r, c), v in other.entries.items():
            rows.setdefault(r, []).append((c, v))
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return Matrix(out)

    def bracket(self, other: "Matrix") -> "Matrix":
        return (self @ other) - (other @ self)

    def transpose(self) -> "Matrix":
        return Matrix({(c, r): v for (r, c), v in self.entries.items()})

    def get(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"E[{r},{c}]*{v}" for (r, c), v in sorted(self.entries.items()))
        return f"Matrix({inner})"


@dataclass(frozen=True)
class Generator:
    name: str
    matrix: Matrix


def abstract_bracket(a: Matrix, b: Matrix) -> Matrix:
    return a.bracket(b)


def transpose(a: Matrix) -> Matrix:
    return a.transpose()


# Operator tables -----------------------------------------------------------

def _t(p: RepParams, c, mult=(), deriv=()) -> WeylOperator:
    return WeylOperator.term(p.ring, c, mult, deriv)


def _ex(p: RepParams, i: int, j: int) -> WeylOperator:
    """The x-block action of ``E_ij``."""
    n1 = p.n1
    xi, xj = f"x{i}", f"x{j}"
    if i <= n1 and j <= n1:
        return _t(p, -1, [xj], [xi]) - (1 if i == j else 0)
    if i <= n1 < j:
        return _t(p, 1, [], [xi, xj])
    if j <= n1 < i:
        return _t(p, -1, [xi, xj])
    return _t(p, 1, [xi], [xj])


def _ey(p: RepParams, i: int, j: int) -> WeylOperator:
    """The y-block action of ``E_ij``."""
    n2 = p.n2
    yi, yj = f"y{i}", f"y{j}"
    if i <= n2 and j <= n2:
        return _t(p, 1, [yi], [yj])
    if i <= n2 < j:
        return _t(p, -1, [yi, yj])
    if j <= n2 < i:
        return _t(p, 1, [], [yi, yj])
    return _t(p, -1, [yj], [yi]) - (1 if i == j else 0)


def _upper(p: RepParams, i: int, j: int) -> WeylOperator:
    """``E_{i,n+j}``."""
    n1, n2 = p.n1, p.n2
    xi, yj = f"x{i}", f"y{j}"
    if i <= n1:
        return _t(p, 1, [], [xi, yj]) if j <= n2 else _t(p, -1, [yj], [xi])
    return _t(p, 1, [xi], [yj]) if j <= n2 else _t(p, -1, [xi, yj])


def _lower(p: RepParams, i: int, j: int) -> WeylOperator:
    """``E_{n+i,j}``."""
    n1, n2 = p.n1, p.n2
    xj, yi = f"x{j}", f"y{i}"
    if j <= n1:
        return _t(p, -1, [xj, yi]) if i <= n2 else _t(p, -1, [xj], [yi])
    return _t(p, 1, [yi], [xj]) if i <= n2 else _t(p, 1, [], [xj, yi])


def _row0(p: RepParams, i: int) -> WeylOperator:
    """``E_{0,i}`` for ``1 <= i <= 2n``."""
    n, n1, n2 = p.n, p.n1, p.n2
    if i <= n1:
        return _t(p, -1, ["x0", f"x{i}"])
    if i <= n:
        return _t(p, 1, ["x0"], [f"x{i}"])
    r = i - n
    if r <= n2:
        return _t(p, 1, ["x0"], [f"y{r}"])
    return _t(p, -1, ["x0", f"y{r}"])


def _col0(p: RepParams, i: int) -> WeylOperator:
    """``E_{i,0}`` for ``1 <= i <= 2n``."""
    n, n1, n2 = p.n, p.n1, p.n2
    if i <= n1:
        return _t(p, 1, [], ["x0", f"x{i}"])
    if i <= n:
        return _t(p, 1, [f"x{i}"], ["x0"])
    r = i - n
    if r <= n2:
        return _t(p, 1, [f"y{r}"], ["x0"])
    return _t(p, 1, [], ["x0", f"y{r}"])


def in_algebra(p: RepParams, m: Matrix) -> bool:
    """Membership test for the family's matrix algebra."""
    idx = set(p.indices)
    if any(r not in idx or c not in idx for r, c in m.entries):
        return False
    if p.family is Family.SPECIAL_LINEAR:
        return sum(m.get(i, i) for i in idx) == 0
    n = p.n
    sym = 1 if p.family is Family.SYMPLECTIC else -1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if m.get(n + j, n + i) != -m.get(i, j):
                return False
            if m.get(i, n + j) != sym * m.get(j, n + i):
                return False
            if m.get(n + i, j) != sym * m.get(n + j, i):
                return False
    if p.family is Family.ORTHO_ODD:
        if m.get(0, 0):
            return False
        for i in range(1, n + 1):
            if m.get(0, i) != -m.get(n + i, 0) or m.get(0, n + i) != -m.get(i, 0):
                return False
    return True


def rho(p: RepParams, m: Matrix) -> WeylOperator:
    """The operator representing the algebra element ``m``.

    For ``sl`` any ``gl(n)`` matrix is accepted.  For the other families the
    matrix must lie in the algebra; it is then read off entry by entry, with
    the lower-right block implied by the upper-left one.
    """
    ring = p.ring
    out = WeylOperator.zero(ring)
    n = p.n
    if p.family is Family.SPECIAL_LINEAR:
        for (r, c), v in m.entries.items():
            if not (1 <= r <= n and 1 <= c <= n):
                raise NotInAlgebra(f"index ({r},{c}) outside gl({n})")
            op = _ex(p, r, c) if p.single_block else _ex(p, r, c) - _ey(p, c, r)
            out = out + op.scale(v)
        return out
    if not in_algebra(p, m):
        raise NotInAlgebra(f"matrix is not in {p.label()}")
    for (r, c), v in m.entries.items():
        if r == 0:
            op = _row0(p, c)
        elif c == 0:
            op = _col0(p, r)
        elif r <= n and c <= n:
            op = _ex(p, r, c) - _ey(p, c, r)
        elif r <= n < c:
            op = _upper(p, r, c - n)
        elif c <= n < r:
            op = _lower(p, r - n, c)
        else:
            continue
        out = out + op.scale(v)
    return out


def spanning_set(p: RepParams) -> List[Generator]:
    """A spanning set of the algebra, each element named."""
    E = Matrix.unit
    n = p.n
    gens: List[Generator] = []
    if p.family is Family.SPECIAL_LINEAR:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    gens.append(Generator(f"E[{i},{j}]", E(i, j)))
        for i in range(1, n):
            gens.append(Generator(f"h[{i}]", E(i, i) - E(i + 1, i + 1)))
        return gens
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            gens.append(Generator(f"E[{i},{j}]-E[{n + j},{n + i}]", E(i, j) - E(n + j, n + i)))
    if p.family is Family.SYMPLECTIC:
        for i in range(1, n + 1):
            gens.append(Generator(f"E[{i},{n + i}]", E(i, n + i)))
            gens.append(Generator(f"E[{n + i},{i}]", E(n + i, i)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                gens.append(Generator(f"E[{i},{n + j}]+E[{j},{n + i}]", E(i, n + j) + E(j, n + i)))
                gens.append(Generator(f"E[{n + i},{j}]+E[{n + j},{i}]", E(n + i, j) + E(n + j, i)))
        return gens
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(Generator(f"E[{i},{n + j}]-E[{j},{n + i}]", E(i, n + j) - E(j, n + i)))
            gens.append(Generator(f"E[{n + j},{i}]-E[{n + i},{j}]", E(n + j, i) - E(n + i, j)))
    if p.family is Family.ORTHO_ODD:
        for i in range(1, n + 1):
            gens.append(Generator(f"E[0,{i}]-E[{n + i},0]", E(0, i) - E(n + i, 0)))
            gens.append(Generator(f"E[0,{n + i}]-E[{i},0]", E(0, n + i) - E(i, 0)))
    return gens


def sl_embedding(p: RepParams, i: int, j: int) -> Matrix:
    """Image of ``E_ij`` of ``sl(n)`` inside the family's algebra."""
    if p.family is Family.SPECIAL_LINEAR:
        return Matrix.unit(i, j)
    return Matrix.unit(i, j) - Matrix.unit(p.n + j, p.n + i)


def cartan(p: RepParams) -> List[Generator]:
    """Cartan basis: ``h_i = E_ii - E_{i+1,i+1}`` for sl, else ``E_ii - E_{n+i,n+i}``."""
    n = p.n
    if p.family is Family.SPECIAL_LINEAR:
        return [Generator(f"h[{i}]", Matrix.unit(i, i) - Matrix.unit(i + 1, i + 1)) for i in range(1, n)]
    return [Generator(f"h[{i}]", sl_embedding(p, i, i)) for i in range(1, n + 1)]


def positive_simple(p: RepParams, system: str = "sl") -> List[Generator]:
    """Positive generators used to detect singular vectors.

    ``system="sl"`` gives the simple root vectors of the ``sl(n)`` subalgebra.
    ``system="full"`` adds the extra simple root of the family (long root for
    ``sp``, ``E_{n-1,2n}-E_{n,2n-1}`` for ``o(2n)``, short root for ``o(2n+1)``).
    """
    n = p.n
    gens = [Generator(f"E[{i},{i + 1}]", sl_embedding(p, i, i + 1)) for i in range(1, n)]
    if system == "sl" or p.family is Family.SPECIAL_LINEAR:
        return gens
    E = Matrix.unit
    if p.family is Family.SYMPLECTIC:
        gens.append(Generator(f"E[{n},{2 * n}]", E(n, 2 * n)))
    elif p.family is Family.ORTHO_EVEN:
        gens.append(Generator(f"E[{n - 1},{2 * n}]-E[{n},{2 * n - 1}]", E(n - 1, 2 * n) - E(n, 2 * n - 1)))
    else:
        gens.append(Generator(f"E[{n},0]-E[0,{2 * n}]", E(n, 0) - E(0, 2 * n)))
    return gens


# Special operators ---------------------------------------------------------

def flat(p: RepParams) -> WeylOperator:
    """x-block grading: count of ``x_r`` (r > n1) minus count of ``x_i`` (i <= n1)."""
    out = WeylOperator.zero(p.ring)
    for r in range(1, p.n + 1):
        out = out + _t(p, 1 if r > p.n1 else -1, [f"x{r}"], [f"x{r}"])
    return out


def flat_prime(p: RepParams) -> WeylOperator:
    out = WeylOperator.zero(p.ring)
    for r in range(1, p.n + 1):
        out = out + _t(p, 1 if r <= p.n2 else -1, [f"y{r}"], [f"y{r}"])
    return out


def euler0(p: RepParams) -> WeylOperator:
    return _t(p, 1, ["x0"], ["x0"])


def laplacian(p: RepParams) -> WeylOperator:
    n1, n2 = p.n1, p.n2
    out = WeylOperator.zero(p.ring)
    for i in range(1, p.n + 1):
        if i <= n1:
            out = out + _t(p, -1, [f"x{i}"], [f"y{i}"])
        elif i <= n2:
            out = out + _t(p, 1, [], [f"x{i}", f"y{i}"])
        else:
            out = out + _t(p, -1, [f"y{i}"], [f"x{i}"])
    return out


def dual_laplacian(p: RepParams) -> WeylOperator:
    n1, n2 = p.n1, p.n2
    out = WeylOperator.zero(p.ring)
    for i in range(1, p.n + 1):
        if i <= n1:
            out = out + _t(p, 1, [f"y{i}"], [f"x{i}"])
        elif i <= n2:
            out = out + _t(p, 1, [f"x{i}", f"y{i}"])
        else:
            out = out + _t(p, 1, [f"x{i}"], [f"y{i}"])
    return out


def laplacian_odd(p: RepParams) -> WeylOperator:
    return _t(p, 1, [], ["x0", "x0"]) + laplacian(p).scale(2)


def dual_laplacian_odd(p: RepParams) -> WeylOperator:
    return _t(p, 1, ["x0", "x0"]) + dual_laplacian(p).scale(2)


def zeta(p: RepParams) -> Polynomial:
    """The middle-block quadratic ``sum_{n1<r<=n2} x_r y_r``."""
    ring = p.ring
    out = Polynomial.zero(ring)
    for r in range(p.n1 + 1, p.n2 + 1):
        out = out + Polynomial.var(ring, f"x{r}") * Polynomial.var(ring, f"y{r}")
    return out


def special_operators(p: RepParams) -> Dict[str, WeylOperator]:
    """Grading operators and Laplacians, keyed by their display names."""
    if p.single_block:
        return {"flat": flat(p)}
    ops = {"flat": flat(p), "flatp": flat_prime(p), "D": laplacian(p), "eta": dual_laplacian(p)}
    if p.family is Family.ORTHO_ODD:
        ops["Dp"] = laplacian_odd(p)
        ops["etap"] = dual_laplacian_odd(p)
        ops["x0dx0"] = euler0(p)
    return ops


def family_laplacians(p: RepParams) -> Tuple[WeylOperator, WeylOperator]:
    """The commuting pair used for decompositions: ``(D, eta)`` or its odd version."""
    if p.family is Family.ORTHO_ODD:
        return laplacian_odd(p), dual_laplacian_odd(p)
    return laplacian(p), dual_laplacian(p)


def total_grading(p: RepParams) -> WeylOperator:
    g = flat(p) + flat_prime(p)
    if p.family is Family.ORTHO_ODD:
        g = g + euler0(p)
    return g


# Weights ----------------------------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    """Eigenvalues of the Cartan basis, in order.

    For ``sl`` these are the coordinates against the fundamental weights.
    """

    values: Tuple[Fraction, ...]

    def to_json(self) -> list:
        return [str(v) for v in self.values]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def weight_of(f: Polynomial, p: RepParams) -> WeightVector:
    if f.is_zero():
        raise NotAWeightVector("zero has no weight")
    lead, c = f.leading()
    vals = []
    for g in cartan(p):
        img = op_apply(rho(p, g.matrix), f)
        lam = img.coeff(lead) / c
        if img != f.scale(lam):
            raise NotAWeightVector(f"{f} is not an eigenvector of {g.name}")
        vals.append(lam)
    return WeightVector(tuple(vals))


def monomial_weight(p: RepParams, exps) -> Tuple[int, ...]:
    """Raw ``E_ii`` eigenvalues of a monomial (every monomial is a weight vector)."""
    ring = p.ring
    vals = []
    for i in range(1, p.n + 1):
        a = exps[ring.x(i)]
        v = -a - 1 if i <= p.n1 else a
        if ring.with_y:
            b = exps[ring.y(i)]
            v -= b if i <= p.n2 else -b - 1
        vals.append(v)
    return tuple(vals)
