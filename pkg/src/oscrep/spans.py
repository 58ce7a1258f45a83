"""Closed-form spanning sets built as products of homogeneous generators.

Each family is a list of generator groups.  A group either has a fixed total
exponent or is free; a spanning element is one product per admissible choice
of exponents.  All generators are homogeneous, so truncating by total degree
is exact: the span of the products of degree at most ``cap`` is the
truncation of the full span.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import InvalidParams, PatternMismatch
from .linalg import SliceKey, SubspaceBasis, in_slice, kernel_on_slice, slice_enumerate
from .reps import Family, RepParams, family_laplacians
from .report import CheckResult, status
from .weyl import Polynomial


@dataclass(frozen=True)
class Group:
    gens: Tuple[Polynomial, ...]
    total: Optional[int] = None  # None means any exponent sum


def _degree(f: Polynomial) -> int:
    return f.degree()


def product_span(ring, groups: Sequence[Group], cap: int) -> List[Polynomial]:
    """All products with one multiset per group, of total degree <= cap."""
    results: List[Polynomial] = []

    def group_choices(g: Group, budget: int):
        if not g.gens:
            if g.total in (None, 0):
                yield Polynomial.constant(ring), 0
            return
        mindeg = min(_degree(h) for h in g.gens)
        sizes = [g.total] if g.total is not None else range(0, budget // max(mindeg, 1) + 1)
        for s in sizes:
            for combo in combinations_with_replacement(range(len(g.gens)), s):
                d = sum(_degree(g.gens[i]) for i in combo)
                if d > budget:
                    continue
                prod = Polynomial.constant(ring)
                for i in combo:
                    prod = prod * g.gens[i]
                yield prod, d

    def rec(i: int, acc: Polynomial, budget: int):
        if i == len(groups):
            results.append(acc)
            return
        for prod, d in group_choices(groups[i], budget):
            rec(i + 1, acc * prod, budget - d)

    rec(0, Polynomial.constant(ring), cap)
    return results


def _v(p: RepParams, name: str) -> Polynomial:
    return Polynomial.var(p.ring, name)


def _xx_minus_yy(p: RepParams, r: int, s: int) -> Polynomial:
    return _v(p, f"x{r}") * _v(p, f"x{s}") - _v(p, f"y{r}") * _v(p, f"y{s}")


def _xy_minus_xy(p: RepParams, a: int, b: int) -> Polynomial:
    return _v(p, f"x{a}") * _v(p, f"y{b}") - _v(p, f"x{b}") * _v(p, f"y{a}")


def _xy_plus_xy(p: RepParams, a: int, b: int) -> Polynomial:
    if a == b:
        return _v(p, f"x{a}") * _v(p, f"y{a}")
    return _v(p, f"x{a}") * _v(p, f"y{b}") + _v(p, f"x{b}") * _v(p, f"y{a}")


def _cross(p: RepParams) -> Group:
    n1, n = p.n1, p.n
    return Group(tuple(_xx_minus_yy(p, r, s) for r in range(1, n1 + 1) for s in range(n1 + 1, n + 1)))


def equal_block_groups(p: RepParams, l1: int, l2: int) -> Optional[List[Group]]:
    """Generator groups spanning the harmonic slice when ``n1 = n2``.

    Returns ``None`` when no closed form applies, which for these parameters
    means the harmonic slice is zero.
    """
    if p.n1 != p.n2:
        raise PatternMismatch("closed forms need n1 = n2")
    n, n1 = p.n, p.n1
    low_x = tuple(_v(p, f"x{r}") for r in range(1, n1 + 1))
    high_y = tuple(_v(p, f"y{s}") for s in range(n1 + 1, n + 1))
    if l1 <= 0 and l2 <= 0 and (n1 < n or l2 == 0):
        return [Group(low_x, -l1), Group(high_y, -l2), _cross(p)]
    if l2 >= 0 and l1 + l2 <= 0 and n1 > 1:
        zl = tuple(_xy_minus_xy(p, a, b) for a in range(1, n1 + 1) for b in range(a + 1, n1 + 1))
        return [Group(low_x, -l1 - l2), Group(zl, l2), _cross(p)]
    if l1 >= 0 and l1 + l2 <= 0 and n1 < n - 1:
        zh = tuple(_xy_minus_xy(p, a, b) for a in range(n1 + 1, n + 1) for b in range(a + 1, n + 1))
        return [Group(high_y, -l1 - l2), Group(zh, l1), _cross(p)]
    return None


def equal_block_harmonics(p: RepParams, l1: int, l2: int, cap: int) -> SubspaceBasis:
    groups = equal_block_groups(p, l1, l2)
    polys = [] if groups is None else product_span(p.ring, groups, cap)
    return SubspaceBasis.from_polynomials(p, polys, meta={"generators": len(polys)})


def even_equal_harmonics(p: RepParams, k: int, cap: int) -> SubspaceBasis:
    """Harmonics of total grade k for the even orthogonal family with n1 = n2.

    They are the sum over ``l1 + l2 = k`` of the bigraded closed forms.
    """
    if p.family is not Family.ORTHO_EVEN or p.n1 != p.n2:
        raise PatternMismatch("needs the even orthogonal family with n1 = n2")
    polys: List[Polynomial] = []
    for l1 in range(-cap, cap + 1):
        groups = equal_block_groups(p, l1, k - l1)
        if groups is not None:
            polys.extend(product_span(p.ring, groups, cap))
    return SubspaceBasis.from_polynomials(p, polys)


def two_variable_even_harmonics(p: RepParams, k: int, cap: int) -> SubspaceBasis:
    """``x1^r y2^s (x1 x2 - y1 y2)^l`` with ``r + s = -k`` (n = 2, n1 = n2 = 1)."""
    if (p.n, p.n1, p.n2) != (2, 1, 1):
        raise PatternMismatch("needs n = 2 and n1 = n2 = 1")
    if k > 0:
        return SubspaceBasis(p, [])
    x1, y2 = _v(p, "x1"), _v(p, "y2")
    groups = [Group((x1, y2), -k), Group((_xx_minus_yy(p, 1, 2),))]
    return SubspaceBasis.from_polynomials(p, product_span(p.ring, groups, cap))


def symplectic_sym_layer(p: RepParams, cap: int) -> SubspaceBasis:
    """Products of ``x_r y_s + x_s y_r`` (r <= s): a submodule of the zero slice.

    Needs ``n1 = n2 = n``.
    """
    if not (p.family is Family.SYMPLECTIC and p.n1 == p.n2 == p.n):
        raise PatternMismatch("needs sp with n1 = n2 = n")
    gens = tuple(_xy_plus_xy(p, r, s) for r in range(1, p.n + 1) for s in range(r, p.n + 1))
    return SubspaceBasis.from_polynomials(p, product_span(p.ring, [Group(gens)], cap))


def symplectic_alt_layer(p: RepParams, cap: int) -> SubspaceBasis:
    """The sym layer times one ``x_p y_q - x_q y_p`` (p < q): the complement."""
    if not (p.family is Family.SYMPLECTIC and p.n1 == p.n2 == p.n):
        raise PatternMismatch("needs sp with n1 = n2 = n")
    n = p.n
    sym = tuple(_xy_plus_xy(p, r, s) for r in range(1, n + 1) for s in range(r, n + 1))
    alt = tuple(_xy_minus_xy(p, a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1))
    return SubspaceBasis.from_polynomials(
        p, product_span(p.ring, [Group(alt, 1), Group(sym)], cap))


SPANS: Dict[str, Callable] = {
    "sl-equal": equal_block_harmonics,
    "even-equal": even_equal_harmonics,
    "even-two-variable": two_variable_even_harmonics,
    "sp-sym-layer": symplectic_sym_layer,
    "sp-alt-layer": symplectic_alt_layer,
}


def explicit_spans(p: RepParams, which: str, cap: int, key: Optional[SliceKey] = None) -> SubspaceBasis:
    """Echelonized products of the displayed generators up to ``cap``."""
    if which not in SPANS:
        raise InvalidParams(f"unknown span {which!r}; known: {', '.join(SPANS)}")
    if which == "sl-equal":
        if p.family is not Family.SPECIAL_LINEAR or p.n1 != p.n2:
            raise PatternMismatch("needs sl with n1 = n2")
        key = key or SliceKey.bigraded(0, 0)
        return equal_block_harmonics(p, key.l1, key.l2, cap)
    if which in ("even-equal", "even-two-variable"):
        return SPANS[which](p, (key or SliceKey.total(0)).k, cap)
    return SPANS[which](p, cap)


def check_span(p: RepParams, which: str, cap: int, key: Optional[SliceKey] = None) -> CheckResult:
    """Cross-check a closed-form span against the truncated Laplacian kernel.

    The symplectic layers are not harmonic spaces; for them only slice
    membership is checked here and the split itself is audited elsewhere.
    """
    span = explicit_spans(p, which, cap, key)
    if which.startswith("sp-"):
        key = SliceKey.total(0)
        ok = all(in_slice(p, key, f) for f in span.polynomials())
        detail = {"span": which, "dim": span.dim, "in_slice": ok}
    else:
        key = key or (SliceKey.bigraded(0, 0) if which == "sl-equal" else SliceKey.total(0))
        kern = kernel_on_slice(family_laplacians(p)[0], slice_enumerate(p, key, cap))
        contained = kern.contains_space(span)
        ok = contained and kern.dim == span.dim
        detail = {"span": which, "dim": span.dim, "kernel_dim": kern.dim, "contained": contained}
    return CheckResult("span", p.as_dict(), status(ok), slice=key.to_json(), cap=cap, detail=detail)
