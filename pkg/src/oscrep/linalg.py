"""Graded slices, the invariant bilinear form and exact sparse linear algebra.

Everything here works over ``Fraction`` with sparse rows stored as dicts.
Kernels are computed component by component: two slice monomials land in the
same component only when some operator sends them to a common monomial, so
each block stays small (in practice a block never mixes weights).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import DegreeEscape, InvalidParams, UniverseMismatch
from .reps import Family, RepParams
from .weyl import Exps, Polynomial, WeylOperator, apply_to_monomial, monomial_key

Row = Dict[Hashable, Fraction]


# Slices ---------------------------------------------------------------------

@dataclass(frozen=True)
class SliceKey:
    """Which graded piece to enumerate.

    ``bigraded``: fixed ``(l1, l2)``; ``total``: ``l1 + l2 = k``;
    ``odd_total``: ``sum_i B<k-i> x0^i``; ``degree``: all monomials of one degree.
    """

    kind: str
    l1: Optional[int] = None
    l2: Optional[int] = None
    k: Optional[int] = None

    @classmethod
    def bigraded(cls, l1: int, l2: int) -> "SliceKey":
        return cls("bigraded", l1=l1, l2=l2)

    @classmethod
    def total(cls, k: int) -> "SliceKey":
        return cls("total", k=k)

    @classmethod
    def odd_total(cls, k: int) -> "SliceKey":
        return cls("odd_total", k=k)

    @classmethod
    def degree(cls, d: int) -> "SliceKey":
        return cls("degree", k=d)

    def grade_sum(self) -> int:
        return self.l1 + self.l2 if self.kind == "bigraded" else self.k

    def to_json(self) -> dict:
        if self.kind == "bigraded":
            return {"kind": "BIGRADED", "l1": self.l1, "l2": self.l2}
        return {"kind": self.kind.upper(), "k": self.k}

    def __str__(self) -> str:
        if self.kind == "bigraded":
            return f"B<{self.l1},{self.l2}>"
        if self.kind == "odd_total":
            return f"B'<{self.k}>"
        if self.kind == "degree":
            return f"deg={self.k}"
        return f"B<{self.k}>"


@dataclass(frozen=True)
class SliceBasis:
    params: RepParams
    key: SliceKey
    cap: int
    monomials: Tuple[Exps, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self) -> Dict[Exps, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def polynomials(self) -> List[Polynomial]:
        ring = self.params.ring
        return [Polynomial.monomial(ring, m) for m in self.monomials]


def _compositions(n: int, cap: int) -> List[Tuple[int, ...]]:
    """All exponent vectors of length n with total degree at most cap."""
    out: List[Tuple[int, ...]] = []

    def rec(prefix, left, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            prefix.append(e)
            rec(prefix, left - e, remaining - 1)
            prefix.pop()

    rec([], cap, n)
    return out


@lru_cache(maxsize=256)
def _block_by_grade(n: int, split: int, cap: int, positive_low: bool) -> Dict[int, List[Tuple[int, Tuple[int, ...]]]]:
    """Group exponent vectors by their block grade.

    The grade counts indices ``<= split`` with sign ``+1`` when
    ``positive_low`` and ``-1`` otherwise, the rest with the opposite sign.
    """
    table: Dict[int, list] = {}
    s = 1 if positive_low else -1
    for a in _compositions(n, cap):
        g = s * (sum(a[:split]) - sum(a[split:]))
        table.setdefault(g, []).append((sum(a), a))
    return table


def _bigraded(p: RepParams, l1: int, l2: int, cap: int) -> List[Exps]:
    xs = _block_by_grade(p.n, p.n1, cap, False).get(l1, [])
    if p.single_block:
        return [a for _, a in xs]
    ys = _block_by_grade(p.n, p.n2, cap, True).get(l2, [])
    out = []
    for da, a in xs:
        for db, b in ys:
            if da + db <= cap:
                out.append(a + b)
    return out


def slice_enumerate(p: RepParams, key: SliceKey, cap: int) -> SliceBasis:
    """All slice monomials of degree at most ``cap``, in canonical order."""
    if cap < 0:
        raise InvalidParams("degree cap must be non-negative")
    mons: List[Exps] = []
    odd = p.family is Family.ORTHO_ODD
    if key.kind == "odd_total":
        if not odd:
            raise InvalidParams("odd_total slices need the odd orthogonal family")
        for i in range(cap + 1):
            for l1 in range(-cap, cap + 1):
                mons.extend((i,) + m for m in _bigraded(p, l1, key.k - i - l1, cap - i))
    else:
        if key.kind == "bigraded":
            if p.single_block:
                raise InvalidParams("single-block mode has only total slices")
            mons = _bigraded(p, key.l1, key.l2, cap)
        elif key.kind == "total":
            if p.single_block:
                mons = _bigraded(p, key.k, 0, cap)
            else:
                for l1 in range(-cap, cap + 1):
                    mons.extend(_bigraded(p, l1, key.k - l1, cap))
        elif key.kind == "degree":
            mons = [a for a in _compositions(p.ring.size - odd, key.k) if sum(a) == key.k]
        else:
            raise InvalidParams(f"unknown slice kind {key.kind!r}")
        if odd:
            mons = [(0,) + m for m in mons]
    mons = sorted(set(mons), key=monomial_key)
    return SliceBasis(p, key, cap, tuple(mons))


def grades_of(p: RepParams, exps: Exps) -> Tuple[int, int, int]:
    """``(l1, l2, x0 exponent)`` of a monomial."""
    ring = p.ring
    l1 = sum(exps[ring.x(r)] * (1 if r > p.n1 else -1) for r in range(1, p.n + 1))
    l2 = 0
    if ring.with_y:
        l2 = sum(exps[ring.y(r)] * (1 if r <= p.n2 else -1) for r in range(1, p.n + 1))
    e0 = exps[0] if ring.odd else 0
    return l1, l2, e0


def in_slice(p: RepParams, key: SliceKey, f: Polynomial) -> bool:
    for e in f.terms:
        l1, l2, e0 = grades_of(p, e)
        if key.kind == "bigraded":
            ok = (l1, l2, e0) == (key.l1, key.l2, 0)
        elif key.kind == "total":
            ok = l1 + l2 == key.k and e0 == 0
        elif key.kind == "odd_total":
            ok = l1 + l2 + e0 == key.k
        else:
            ok = sum(e) == key.k
        if not ok:
            return False
    return True


# Bilinear form -------------------------------------------------------------

def _sign_positions(p: RepParams) -> Tuple[int, ...]:
    ring = p.ring
    pos = [ring.x(i) for i in range(1, p.n1 + 1)]
    if ring.with_y:
        pos += [ring.y(r) for r in range(p.n2 + 1, p.n + 1)]
    return tuple(pos)


def form_weight(p: RepParams, exps: Exps) -> int:
    """``(m|m)`` for a monomial m: signed product of exponent factorials."""
    w = 1
    for e in exps:
        if e > 1:
            w *= math.factorial(e)
    if sum(exps[i] for i in _sign_positions(p)) % 2:
        w = -w
    return w


def bilinear_form(f: Polynomial, g: Polynomial, p: RepParams) -> Fraction:
    if f.ring != g.ring or f.ring != p.ring:
        raise UniverseMismatch("form arguments must share the representation ring")
    if len(f.terms) > len(g.terms):
        f, g = g, f
    total = Fraction(0)
    for e, c in f.terms.items():
        d = g.terms.get(e)
        if d:
            total += c * d * form_weight(p, e)
    return total


def gram_matrix(basis: Sequence[Polynomial], p: RepParams) -> List[List[Fraction]]:
    return [[bilinear_form(a, b, p) for b in basis] for a in basis]


# Sparse elimination ----------------------------------------------------------

def _reduce(row: Row, pivots: Dict[Hashable, Row], key) -> Row:
    """Reduce ``row`` against echelon ``pivots`` (pivot = key-minimal entry)."""
    row = dict(row)
    while row:
        lead = min(row, key=key)
        prow = pivots.get(lead)
        if prow is None:
            break
        c = row[lead]
        for k, v in prow.items():
            nv = row.get(k, 0) - c * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return row


def rref(rows: Iterable[Row], key=None) -> List[Row]:
    """Reduced row echelon form; pivot of a row is its ``key``-smallest column."""
    key = key or (lambda c: c)
    pivots: Dict[Hashable, Row] = {}
    for r in rows:
        r = _reduce(r, pivots, key)
        if not r:
            continue
        lead = min(r, key=key)
        c = r[lead]
        r = {k: v / c for k, v in r.items()}
        pivots[lead] = r
    order = sorted(pivots, key=key)
    # back substitution, last pivot first
    for i in range(len(order) - 1, -1, -1):
        pc = order[i]
        prow = pivots[pc]
        for j in range(i):
            other = pivots[order[j]]
            c = other.get(pc)
            if c:
                for k, v in prow.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
    return [pivots[c] for c in order]


def rank(rows: Iterable[Row]) -> int:
    pivots: Dict[Hashable, Row] = {}
    for r in rows:
        r = _reduce(r, pivots, _ident)
        if r:
            lead = min(r)
            c = r[lead]
            pivots[lead] = {k: v / c for k, v in r.items()}
    return len(pivots)


def _ident(c):
    return c


def matrix_rank(m: Sequence[Sequence[Fraction]]) -> int:
    return rank({j: v for j, v in enumerate(row) if v} for row in m)


def _components(vectors: Sequence[Row]) -> List[List[int]]:
    parent = list(range(len(vectors)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: Dict[Hashable, int] = {}
    for i, v in enumerate(vectors):
        for k in v:
            j = owner.setdefault(k, i)
            if j != i:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: Dict[int, List[int]] = {}
    for i in range(len(vectors)):
        groups.setdefault(find(i), []).append(i)
    return [groups[g] for g in sorted(groups)]


def nullspace(vectors: Sequence[Row]) -> List[Dict[int, Fraction]]:
    """Basis of ``{a : sum_j a_j vectors[j] = 0}`` as sparse index->coefficient dicts."""
    out: List[Dict[int, Fraction]] = []
    for comp in _components(vectors):
        if len(comp) == 1:
            if not vectors[comp[0]]:
                out.append({comp[0]: Fraction(1)})
            continue
        tags: Dict[Hashable, int] = {}
        pivots: Dict[int, Tuple[Row, Dict[int, Fraction]]] = {}
        for j in comp:
            v = {tags.setdefault(k, len(tags)): c for k, c in vectors[j].items()}
            e: Dict[int, Fraction] = {j: Fraction(1)}
            while v:
                lead = min(v)
                hit = pivots.get(lead)
                if hit is None:
                    break
                pv, pe = hit
                c = v[lead]
                for k, x in pv.items():
                    nv = v.get(k, 0) - c * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                for k, x in pe.items():
                    ne = e.get(k, 0) - c * x
                    if ne:
                        e[k] = ne
                    else:
                        e.pop(k, None)
            if v:
                lead = min(v)
                c = v[lead]
                pivots[lead] = ({k: x / c for k, x in v.items()}, {k: x / c for k, x in e.items()})
            else:
                out.append(e)
    return out


# Subspaces -------------------------------------------------------------------

@dataclass
class SubspaceBasis:
    """RREF basis (pivot = largest monomial) of a subspace of polynomials."""

    params: RepParams
    rows: List[Dict[Exps, Fraction]]
    slice: Optional[SliceBasis] = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_polynomials(cls, p: RepParams, polys: Iterable[Polynomial], slice: SliceBasis | None = None,
                         meta: dict | None = None) -> "SubspaceBasis":
        rows = rref((dict(f.terms) for f in polys), key=monomial_key)
        return cls(p, rows, slice, meta or {})

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[Exps]:
        return [min(r, key=monomial_key) for r in self.rows]

    def polynomials(self) -> List[Polynomial]:
        ring = self.params.ring
        return [Polynomial(ring, r) for r in self.rows]

    def _pivot_map(self) -> Dict[Exps, Dict[Exps, Fraction]]:
        return {min(r, key=monomial_key): r for r in self.rows}

    def contains(self, f: Polynomial) -> bool:
        return not _reduce(dict(f.terms), self._pivot_map(), monomial_key)

    def coordinates(self, f: Polynomial) -> Optional[List[Fraction]]:
        """Coordinates against ``rows`` or ``None`` when ``f`` is outside the span."""
        if not self.contains(f):
            return None
        return [f.coeff(pv) for pv in self.pivots()]

    def contains_space(self, other: "SubspaceBasis") -> bool:
        pm = self._pivot_map()
        return all(not _reduce(r, pm, monomial_key) for r in other.rows)

    def same_space(self, other: "SubspaceBasis") -> bool:
        return self.rows == other.rows

    def to_json(self) -> dict:
        out = {"basis": [Polynomial(self.params.ring, r).to_str() for r in self.rows]}
        if self.slice is not None:
            out = {"slice": self.slice.key.to_json(), "degree_cap": self.slice.cap, **out}
        return out


def span_ops(basis: SubspaceBasis, f: Polynomial) -> dict:
    coords = basis.coordinates(f)
    return {"contains": coords is not None, "coordinates": coords}


def kernel_on_slice(ops, sb: SliceBasis) -> SubspaceBasis:
    """Joint kernel of one or more operators on a truncated slice.

    The truncation is sound only for operators that never raise degree;
    :class:`DegreeEscape` is raised otherwise.
    """
    if isinstance(ops, WeylOperator):
        ops = [ops]
    ring = sb.params.ring
    images: List[Row] = []
    for m in sb.monomials:
        d = sum(m)
        img: Row = {}
        for t, op in enumerate(ops):
            if op.ring != ring:
                raise UniverseMismatch("operator ring does not match slice")
            for e, c in apply_to_monomial(op, m).items():
                if sum(e) > d:
                    raise DegreeEscape(f"operator raises degree of slice monomial in {sb.key}")
                img[(t, e)] = c
        images.append(img)
    combos = nullspace(images)
    polys = ({sb.monomials[j]: c for j, c in a.items()} for a in combos)
    rows = rref(polys, key=monomial_key)
    return SubspaceBasis(sb.params, rows, sb)


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(map(Fraction, row)) for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det
