"""Singular vectors on slices and the closed-form catalogs they are matched against.

A singular vector is a nonzero weight vector killed by every positive simple
generator.  Inside the harmonic part the Laplacian is added to the operators.
Every monomial is a weight vector and the operators shift weights uniformly,
so the joint kernel splits by weight and each RREF row is a weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .linalg import SliceKey, SubspaceBasis, in_slice, kernel_on_slice, slice_enumerate
from .reps import Family, RepParams, WeightVector, dual_laplacian, family_laplacians, positive_simple, rho, weight_of
from .weyl import Polynomial, apply_power


@dataclass
class SingularReport:
    params: RepParams
    key: SliceKey
    cap: int
    harmonic: bool
    vectors: List[Tuple[Polynomial, WeightVector]]
    catalog: Optional[str] = None
    catalog_dim: Optional[int] = None
    contained: Optional[bool] = None
    exact: Optional[bool] = None
    matches: List[bool] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {
            "params": self.params.as_dict(), "slice": self.key.to_json(), "cap": self.cap,
            "harmonic": self.harmonic,
            "vectors": [{"vector": str(f), "weight": w.to_json(), "catalog_match": m}
                        for (f, w), m in zip(self.vectors, self.matches or [None] * len(self.vectors))],
            "catalog": self.catalog, "catalog_dim": self.catalog_dim,
            "contained": self.contained, "exact": self.exact,
        }


def singular_kernel(p: RepParams, key: SliceKey, cap: int, harmonic: bool = True,
                    system: str = "sl") -> SubspaceBasis:
    ops = [rho(p, g.matrix) for g in positive_simple(p, system)]
    if harmonic:
        ops.append(family_laplacians(p)[0])
    return kernel_on_slice(ops, slice_enumerate(p, key, cap))


def singular_vectors(p: RepParams, key: SliceKey, cap: int, harmonic: bool = True,
                     system: str = "sl", match: bool = True) -> SingularReport:
    kern = singular_kernel(p, key, cap, harmonic, system)
    vecs = [(f, weight_of(f, p)) for f in kern.polynomials()]
    rep = SingularReport(p, key, cap, harmonic, vecs)
    if match and system == "sl":
        cat = catalog_for(p, harmonic)
        if cat is not None:
            name, fn, exact = cat
            span = SubspaceBasis.from_polynomials(p, [g for g in fn(p, key, cap) if g and in_slice(p, key, g)
                                                      and g.degree() <= cap])
            rep.catalog = name
            rep.catalog_dim = span.dim
            rep.matches = [span.contains(f) for f, _ in vecs]
            rep.contained = all(rep.matches)
            rep.exact = rep.contained and span.dim == kern.dim if exact else None
    return rep


# Catalog generators ---------------------------------------------------------------

def _x(p, i, e=1):
    return Polynomial.var(p.ring, f"x{i}", e)


def _y(p, i, e=1):
    return Polynomial.var(p.ring, f"y{i}", e)


def _eta_orbit(p: RepParams, seeds: List[Polynomial], cap: int) -> List[Polynomial]:
    """``eta^m(s)`` for every seed and every m while the degree stays within reach."""
    eta = dual_laplacian(p)
    out = []
    for s in seeds:
        g = s
        for _ in range(cap + 1):
            if g.is_zero():
                break
            out.append(g)
            g = apply_power(eta, g, 1)
    return out


def _pairs(cap: int):
    return [(a, b) for a in range(cap + 1) for b in range(cap + 1 - a)]


def _generic_b(p: RepParams, key: SliceKey, cap: int) -> List[Polynomial]:
    """``F[eta](x_i^a y_j^b)`` for ``i in {n1, n1+1}``, ``j in {n2, n2+1}``.

    Only ``eta^m`` of the unique seed of grade ``(l1-m, l2-m)`` can land in the slice.
    """
    eta = dual_laplacian(p)
    out = []
    for m in range(cap // 2 + 1):
        g = _f(p, key.l1 - m, key.l2 - m)
        if g is not None:
            out.append(apply_power(eta, g, m))
    return out


def _f(p: RepParams, l1: int, l2: int) -> Optional[Polynomial]:
    """The monomial harmonic of bigrade ``(l1, l2)`` built from the four boundary variables."""
    fx = _x(p, p.n1 + 1, l1) if l1 >= 0 else _x(p, p.n1, -l1)
    if l2 >= 0:
        fy = _y(p, p.n2, l2)
    elif p.n2 < p.n:
        fy = _y(p, p.n2 + 1, -l2)
    else:
        return None
    return fx * fy


def _generic_h(p: RepParams, key: SliceKey, cap: int) -> List[Polynomial]:
    """``f<l1,l2>`` plus ``eta^(n1-n2+1-r1-r2) f<r1,r2>`` for ``r1 + r2 <= n1 - n2``."""
    out = []
    l1, l2 = key.l1, key.l2
    f = _f(p, l1, l2)
    if f is not None:
        out.append(f)
    m = l1 + l2 - (p.n1 - p.n2 + 1)
    if m >= 1:
        g = _f(p, l1 - m, l2 - m)
        if g is not None:
            out.append(apply_power(dual_laplacian(p), g, m))
    return out


def _zeta1(p: RepParams) -> Polynomial:
    a, b = p.n1 - 1, p.n1
    return _x(p, a) * _y(p, b) - _x(p, b) * _y(p, a)


def _zeta2(p: RepParams) -> Polynomial:
    a, b = p.n2 + 1, p.n2 + 2
    return _x(p, a) * _y(p, b) - _x(p, b) * _y(p, a)


def _powers(base: Polynomial, top: int) -> List[Polynomial]:
    out = [Polynomial.constant(base.ring)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def _equal_b(p: RepParams, key: SliceKey, cap: int) -> List[Polynomial]:
    """Singular vectors of the whole space when ``n1 = n2``, by subcase."""
    n, n1 = p.n, p.n1
    out: List[Polynomial] = []
    trip = [(a, b, c) for a in range(cap + 1) for b in range(cap + 1 - a) for c in range(cap + 1 - a - b)]
    if n1 == n:
        z = _powers(_zeta1(p), cap)
        return [_x(p, n1, a) * _y(p, n1, b) * z[c] for a, b, c in trip if a + b + 2 * c <= cap]
    seeds = [_x(p, n1, a) * _y(p, n1 + 1, b) for a, b in _pairs(cap)]
    out.extend(_eta_orbit(p, seeds, cap))
    if n1 > 1:
        z = _powers(_zeta1(p), cap)
        out.extend(_x(p, n1, a) * _y(p, n1, b) * z[c + 1] for a, b, c in trip if a + b + 2 * c + 2 <= cap)
    if n1 < n - 1:
        z = _powers(_zeta2(p), cap)
        out.extend(_x(p, n1 + 1, a) * _y(p, n1 + 1, b) * z[c + 1] for a, b, c in trip if a + b + 2 * c + 2 <= cap)
    return out


def _equal_h(p: RepParams, key: SliceKey, cap: int) -> List[Polynomial]:
    n, n1 = p.n, p.n1
    if n1 == n:
        z = _powers(_zeta1(p), cap)
        return [_x(p, n1, a) * z[b] for a, b in _pairs(cap) if a + 2 * b <= cap]
    out = [_x(p, n1, a) * _y(p, n1 + 1, b) for a, b in _pairs(cap)]
    if n1 > 1:
        z = _powers(_zeta1(p), cap)
        out.extend(_x(p, n1, a) * z[b + 1] for a, b in _pairs(cap) if a + 2 * b + 2 <= cap)
    if n1 < n - 1:
        z = _powers(_zeta2(p), cap)
        out.extend(_y(p, n1 + 1, a) * z[b + 1] for a, b in _pairs(cap) if a + 2 * b + 2 <= cap)
    return out


Catalog = Tuple[str, Callable[[RepParams, SliceKey, int], List[Polynomial]], bool]


def catalog_for(p: RepParams, harmonic: bool) -> Optional[Catalog]:
    """Pick the closed-form catalog for sl parameters, with an exactness flag."""
    if p.family is not Family.SPECIAL_LINEAR or p.single_block:
        return None
    n1, n2 = p.n1, p.n2
    if n1 == n2:
        return ("sl-equal-H", _equal_h, True) if harmonic else ("sl-equal-B", _equal_b, True)
    if n1 + 1 < n2:
        return ("sl-generic-H", _generic_h, True) if harmonic else ("sl-generic-B", _generic_b, True)
    return None
