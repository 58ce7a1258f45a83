"""Exact polynomials and normal-ordered Weyl-algebra operators.

A polynomial lives in a fixed variable universe (:class:`Ring`).  Monomials are
stored densely as exponent tuples in ring order ``x0, x1..xn, y1..yn`` which
keeps them hashable and cheap to compare.  Coefficients are always
:class:`fractions.Fraction`.

Operators are finite sums ``c * x^a * d^b`` with every multiplication to the
left of every derivative.  Composition re-normal-orders using ``[d, x] = 1``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

from .errors import ParseError, UniverseMismatch

Scalar = Fraction
Exps = Tuple[int, ...]
Number = Union[int, Fraction]


class VarId(NamedTuple):
    axis: str  # "x" or "y"
    index: int

    def __str__(self) -> str:
        return f"{self.axis}{self.index}"


@dataclass(frozen=True)
class Ring:
    """Variable universe ``x0?, x1..xn, y1..yn?``."""

    n: int
    odd: bool = False
    with_y: bool = True

    @property
    def variables(self) -> Tuple[VarId, ...]:
        out = []
        if self.odd:
            out.append(VarId("x", 0))
        out.extend(VarId("x", i) for i in range(1, self.n + 1))
        if self.with_y:
            out.extend(VarId("y", i) for i in range(1, self.n + 1))
        return tuple(out)

    @property
    def size(self) -> int:
        return self.n * (2 if self.with_y else 1) + (1 if self.odd else 0)

    def index(self, var: Union[VarId, str]) -> int:
        if isinstance(var, str):
            var = parse_var(var)
        axis, i = var
        if axis == "x":
            if i == 0:
                if not self.odd:
                    raise UniverseMismatch("x0 is not part of this ring")
                return 0
            if 1 <= i <= self.n:
                return i - 1 + (1 if self.odd else 0)
        elif axis == "y" and self.with_y and 1 <= i <= self.n:
            return self.n + i - 1 + (1 if self.odd else 0)
        raise UniverseMismatch(f"variable {axis}{i} is not part of this ring")

    def var_at(self, pos: int) -> VarId:
        return self.variables[pos]

    def x(self, i: int) -> int:
        return self.index(VarId("x", i))

    def y(self, i: int) -> int:
        return self.index(VarId("y", i))

    def zero_exps(self) -> Exps:
        return (0,) * self.size

    def unit_exps(self, pos: int, power: int = 1) -> Exps:
        e = [0] * self.size
        e[pos] = power
        return tuple(e)


def parse_var(text: str) -> VarId:
    m = re.fullmatch(r"([xy])(\d+)", text.strip())
    if not m:
        raise ParseError(f"bad variable name {text!r}")
    return VarId(m.group(1), int(m.group(2)))


def monomial_key(exps: Exps):
    """Sort key giving descending graded-lex order (largest monomial first)."""
    return (-sum(exps), tuple(-e for e in exps))


def _as_fraction(c: Number) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_factors(ring: Ring, exps: Exps, prefix: str = "") -> list:
    out = []
    for pos, e in enumerate(exps):
        if e:
            name = prefix + str(ring.var_at(pos))
            out.append(name if e == 1 else f"{name}^{e}")
    return out


def _join_terms(pieces: Iterable[Tuple[Fraction, list]]) -> str:
    chunks = []
    for c, factors in pieces:
        neg = c < 0
        a = -c if neg else c
        body = list(factors)
        if a != 1 or not body:
            body.insert(0, _fmt_coeff(a))
        text = "*".join(body)
        if not chunks:
            chunks.append(("-" if neg else "") + text)
        else:
            chunks.append(("- " if neg else "+ ") + text)
    return " ".join(chunks) if chunks else "0"


class Polynomial:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Exps, Number] | None = None):
        self.ring = ring
        clean: Dict[Exps, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != ring.size:
                        raise UniverseMismatch("exponent tuple has wrong length")
                    clean[tuple(e)] = _as_fraction(c)
        self.terms = clean

    # construction helpers
    @classmethod
    def _raw(cls, ring: Ring, terms: Dict[Exps, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring: Ring, c: Number = 1) -> "Polynomial":
        return cls(ring, {ring.zero_exps(): c})

    @classmethod
    def monomial(cls, ring: Ring, exps: Exps, c: Number = 1) -> "Polynomial":
        return cls(ring, {tuple(exps): c})

    @classmethod
    def var(cls, ring: Ring, name: Union[str, VarId], power: int = 1) -> "Polynomial":
        return cls._raw(ring, {ring.unit_exps(ring.index(name), power): Fraction(1)})

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "Polynomial":
        return parse_polynomial(ring, text)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, exps: Exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def monomials(self) -> list:
        return sorted(self.terms, key=monomial_key)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> Tuple[Exps, Fraction]:
        e = min(self.terms, key=monomial_key)
        return e, self.terms[e]

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    # arithmetic
    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise UniverseMismatch("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Number) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: Dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = Polynomial.constant(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[Tuple[Exps, Fraction]]:
        for e in self.monomials():
            yield e, self.terms[e]

    def __len__(self) -> int:
        return len(self.terms)

    # formatting
    def to_str(self) -> str:
        return _join_terms((c, _fmt_factors(self.ring, e)) for e, c in self)

    __str__ = to_str

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r})"

    def to_json(self) -> list:
        """Canonical JSON form: list of ``[coefficient, {var: exponent}]``."""
        out = []
        for e, c in self:
            out.append([_fmt_coeff(c), {str(self.ring.var_at(i)): k for i, k in enumerate(e) if k}])
        return out


_FACTOR = re.compile(r"\*?([xy])(\d+)(?:\^(\d+))?")
_COEFF = re.compile(r"(\d+)(?:/(\d+))?")


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    """Parse text such as ``-3/2 x1^2 y3 + x2*y2``.

    Whitespace is ignored; ``*`` between factors is optional.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    pos = 0
    terms: Dict[Exps, Fraction] = {}
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' at offset {pos} in {text!r}")
        first = False
        coeff = Fraction(sign)
        seen = False
        m = _COEFF.match(s, pos)
        if m:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ParseError("zero denominator")
            coeff *= Fraction(int(m.group(1)), den)
            pos = m.end()
            seen = True
        exps = [0] * ring.size
        while pos < len(s) and s[pos] not in "+-":
            m = _FACTOR.match(s, pos)
            if not m or (m.group(0).startswith("*") and not seen):
                raise ParseError(f"unexpected input at offset {pos} in {text!r}")
            idx = ring.index(VarId(m.group(1), int(m.group(2))))
            exps[idx] += int(m.group(3)) if m.group(3) else 1
            pos = m.end()
            seen = True
        if not seen:
            raise ParseError(f"empty term in {text!r}")
        key = tuple(exps)
        v = terms.get(key, 0) + coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return Polynomial._raw(ring, terms)


def integrate(f: Polynomial, var: Union[str, VarId, int], m: int = 1) -> Polynomial:
    """Apply the right inverse of ``d/dvar`` m times: ``x^a -> x^(a+m) a!/(a+m)!``."""
    pos = var if isinstance(var, int) else f.ring.index(var)
    out = {}
    for e, c in f.terms.items():
        a = e[pos]
        new = list(e)
        new[pos] = a + m
        out[tuple(new)] = c / math.perm(a + m, m)
    return Polynomial._raw(f.ring, out)


OpKey = Tuple[Exps, Exps]


class WeylOperator:
    """Finite sum of normal-ordered terms ``c * x^mult * d^deriv``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[OpKey, Number] | None = None):
        self.ring = ring
        self.terms: Dict[OpKey, Fraction] = {}
        for (a, b), c in (terms or {}).items():
            if c:
                self.terms[(tuple(a), tuple(b))] = _as_fraction(c)

    @classmethod
    def _raw(cls, ring: Ring, terms: Dict[OpKey, Fraction]) -> "WeylOperator":
        op = cls.__new__(cls)
        op.ring = ring
        op.terms = terms
        return op

    @classmethod
    def zero(cls, ring: Ring) -> "WeylOperator":
        return cls._raw(ring, {})

    @classmethod
    def scalar(cls, ring: Ring, c: Number = 1) -> "WeylOperator":
        z = ring.zero_exps()
        return cls(ring, {(z, z): c})

    @classmethod
    def identity(cls, ring: Ring) -> "WeylOperator":
        return cls.scalar(ring, 1)

    @classmethod
    def mult(cls, poly: Polynomial) -> "WeylOperator":
        z = poly.ring.zero_exps()
        return cls._raw(poly.ring, {(e, z): c for e, c in poly.terms.items()})

    @classmethod
    def deriv(cls, ring: Ring, var: Union[str, VarId], power: int = 1) -> "WeylOperator":
        return cls._raw(ring, {(ring.zero_exps(), ring.unit_exps(ring.index(var), power)): Fraction(1)})

    @classmethod
    def term(cls, ring: Ring, c: Number, mult: Iterable = (), deriv: Iterable = ()) -> "WeylOperator":
        """Build ``c * prod(mult) * prod(deriv)`` from variable names."""
        a = [0] * ring.size
        b = [0] * ring.size
        for v in mult:
            a[ring.index(v)] += 1
        for v in deriv:
            b[ring.index(v)] += 1
        return cls(ring, {(tuple(a), tuple(b)): c})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "WeylOperator") -> None:
        if other.ring != self.ring:
            raise UniverseMismatch("operators from different rings")

    def __add__(self, other: "WeylOperator") -> "WeylOperator":
        if isinstance(other, (int, Fraction)):
            other = WeylOperator.scalar(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return WeylOperator._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylOperator":
        return WeylOperator._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "WeylOperator":
        if isinstance(other, (int, Fraction)):
            other = WeylOperator.scalar(self.ring, other)
        return self + (-other)

    def scale(self, c: Number) -> "WeylOperator":
        c = _as_fraction(c)
        if not c:
            return WeylOperator.zero(self.ring)
        return WeylOperator._raw(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, WeylOperator):
            return op_compose(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "WeylOperator":
        out = WeylOperator.identity(self.ring)
        for _ in range(k):
            out = op_compose(out, self)
        return out

    def __call__(self, f: Polynomial) -> Polynomial:
        return op_apply(self, f)

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list:
        def key(item):
            (a, b), _ = item
            return monomial_key(tuple(x + y for x, y in zip(a, b))), monomial_key(a)

        return sorted(self.terms.items(), key=key)

    def degree_shift(self) -> int:
        """Largest ``|mult| - |deriv|`` over terms (how far it can raise degree)."""
        return max((sum(a) - sum(b) for a, b in self.terms), default=0)

    def to_str(self, ascii: bool = False) -> str:
        d = "d" if ascii else "∂"
        return _join_terms(
            (c, _fmt_factors(self.ring, a) + _fmt_factors(self.ring, b, prefix=d))
            for (a, b), c in self.sorted_terms()
        )

    __str__ = to_str

    def __repr__(self) -> str:
        return f"WeylOperator({self.to_str()!r})"


def apply_to_monomial(op: WeylOperator, exps: Exps) -> Dict[Exps, Fraction]:
    """Image of a single monomial (coefficient 1) as a raw term dict."""
    out: Dict[Exps, Fraction] = {}
    for (a, b), c in op.terms.items():
        coef = c
        new = []
        for ei, ai, bi in zip(exps, a, b):
            if bi:
                if ei < bi:
                    coef = 0
                    break
                coef *= math.perm(ei, bi)
            new.append(ei - bi + ai)
        if not coef:
            continue
        key = tuple(new)
        v = out.get(key, 0) + coef
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def op_apply(op: WeylOperator, f: Polynomial) -> Polynomial:
    if op.ring != f.ring:
        raise UniverseMismatch("operator and polynomial from different rings")
    out: Dict[Exps, Fraction] = {}
    for e, c in f.terms.items():
        for k, v in apply_to_monomial(op, e).items():
            w = out.get(k, 0) + v * c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return Polynomial._raw(f.ring, out)


def op_compose(s: WeylOperator, t: WeylOperator) -> WeylOperator:
    """Normal-ordered form of ``s`` after ``t`` (that is, ``s * t``)."""
    s._check(t)
    out: Dict[OpKey, Fraction] = {}
    for (a, b), c1 in s.terms.items():
        for (cc, d), c2 in t.terms.items():
            # d^b x^cc = sum_k prod_v C(b_v, k_v) (cc_v)_(k_v) x^(cc-k) d^(b-k)
            ranges = [range(min(bv, cv) + 1) for bv, cv in zip(b, cc)]
            for ks in itertools.product(*ranges):
                coef = c1 * c2
                for bv, cv, kv in zip(b, cc, ks):
                    if kv:
                        coef *= math.comb(bv, kv) * math.perm(cv, kv)
                mult = tuple(av + cv - kv for av, cv, kv in zip(a, cc, ks))
                der = tuple(bv - kv + dv for bv, kv, dv in zip(b, ks, d))
                key = (mult, der)
                v = out.get(key, 0) + coef
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return WeylOperator._raw(s.ring, out)


def op_bracket(s: WeylOperator, t: WeylOperator) -> WeylOperator:
    return op_compose(s, t) - op_compose(t, s)


def apply_power(op: WeylOperator, f: Polynomial, k: int) -> Polynomial:
    for _ in range(k):
        if f.is_zero():
            break
        f = op_apply(op, f)
    return f
