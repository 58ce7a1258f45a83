"""Flag-type solver for ``(T1 + T2) f = 0`` and the harmonic bases built on it.

Given ``T1`` with a right inverse ``T1^-`` and a seed ``g`` in ``ker T1``, the
series ``sum_i (-T1^- T2)^i g`` is a solution as soon as it terminates, and
every solution arises this way from its ``ker T1`` component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, Union

from .errors import InputNotHarmonic, InvalidParams, NonTerminating
from .linalg import SliceKey, SubspaceBasis, kernel_on_slice, nullspace, rref, slice_enumerate
from .reps import Family, RepParams, laplacian
from .report import CheckResult, status
from .spans import equal_block_harmonics
from .weyl import Polynomial, Ring, WeylOperator, integrate, monomial_key, op_apply

Inverse = Union[Callable[[Polynomial], Polynomial], Sequence[Tuple[str, int]]]


@dataclass
class FlagProblem:
    t1: WeylOperator
    t1_inverse: Inverse
    t2: WeylOperator
    seed: Polynomial
    iteration_cap: int = 64


@dataclass
class FlagSolution:
    poly: Polynomial
    iterations: int
    verified: bool


def _inverse_fn(inv: Inverse) -> Callable[[Polynomial], Polynomial]:
    if callable(inv):
        return inv
    steps = list(inv)

    def apply(f: Polynomial) -> Polynomial:
        for var, m in steps:
            f = integrate(f, var, m)
        return f

    return apply


def lemma21_solve(prob: FlagProblem) -> FlagSolution:
    """Sum the nilpotent series and check the result."""
    if op_apply(prob.t1, prob.seed):
        raise InputNotHarmonic("seed is not annihilated by T1")
    inv = _inverse_fn(prob.t1_inverse)
    total = prob.seed
    term = prob.seed
    for i in range(1, prob.iteration_cap + 1):
        term = -inv(op_apply(prob.t2, term))
        if term.is_zero():
            ok = op_apply(prob.t1 + prob.t2, total).is_zero()
            return FlagSolution(total, i - 1, ok)
        total = total + term
    raise NonTerminating(f"series did not vanish within {prob.iteration_cap} steps")


# Classical case ----------------------------------------------------------------

def classical_harmonic(ell: Sequence[int], shape: Sequence[int]) -> Polynomial:
    """Kernel element of ``sum_i d_i^{m_i}`` seeded by ``x^ell`` (needs ``ell_1 < m_1``)."""
    n = len(ell)
    ring = Ring(n, with_y=False)
    if ell[0] >= shape[0]:
        raise InputNotHarmonic("first exponent must be below the first order")
    t1 = WeylOperator.deriv(ring, "x1", shape[0])
    t2 = WeylOperator.zero(ring)
    for i in range(2, n + 1):
        t2 = t2 + WeylOperator.deriv(ring, f"x{i}", shape[i - 1])
    seed = Polynomial.monomial(ring, tuple(ell))
    sol = lemma21_solve(FlagProblem(t1, [("x1", shape[0])], t2, seed))
    return sol.poly


def classical_harmonic_closed_form(ell: Sequence[int], shape: Sequence[int]) -> Polynomial:
    """The same element written out as an explicit multinomial sum."""
    n = len(ell)
    ring = Ring(n, with_y=False)
    out = Polynomial.zero(ring)
    bounds = [ell[i] // shape[i] for i in range(1, n)]

    def rec(i, ks):
        nonlocal out
        if i == n:
            K = sum(ks)
            coef = Fraction((-1) ** K * math.factorial(K))
            exps = [ell[0] + K * shape[0]]
            coef *= Fraction(math.factorial(ell[0]), math.factorial(exps[0]))
            for j, k in enumerate(ks, start=1):
                coef /= math.factorial(k)
                coef *= math.perm(ell[j], k * shape[j])
                exps.append(ell[j] - k * shape[j])
            out = out + Polynomial.monomial(ring, tuple(exps), coef)
            return
        for k in range(bounds[i - 1] + 1):
            rec(i + 1, ks + [k])

    rec(1, [])
    return out


def classical_harmonic_basis(n: int, degree: int, shape: Sequence[int]) -> List[Polynomial]:
    """All seeded elements of a given total degree, ``ell_1 < m_1``."""
    out = []

    def rec(prefix, left):
        if len(prefix) == n:
            if left == 0:
                out.append(classical_harmonic(prefix, shape))
            return
        top = min(left, shape[0] - 1) if not prefix else left
        for e in range(top, -1, -1):
            rec(prefix + [e], left - e)

    rec([], degree)
    return out


# Oscillator harmonics -------------------------------------------------------------

def _recombine(p: RepParams, series: List[Polynomial], cap: int) -> Tuple[List[Polynomial], int]:
    """Combinations of series elements whose parts above ``cap`` cancel."""
    highs = [{e: c for e, c in f.terms.items() if sum(e) > cap} for f in series]
    over = sum(1 for h in highs if h)
    polys = []
    for combo in nullspace(highs):
        acc: dict = {}
        for j, a in combo.items():
            for e, c in series[j].terms.items():
                v = acc.get(e, 0) + a * c
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        polys.append(Polynomial(p.ring, acc))
    return polys, over


def harmonic_basis_sl(p: RepParams, l1: int, l2: int, cap: int) -> SubspaceBasis:
    """Truncated basis of the harmonic bigraded slice ``H<l1,l2>``.

    For ``n1 < n2`` each admissible seed (no simultaneous ``x_{n1+1}`` and
    ``y_{n1+1}``) is completed by the flag series with pivot
    ``d/dx_{n1+1} d/dy_{n1+1}``.  Completed elements may exceed the cap while a
    combination of them does not; those combinations are recovered so that the
    result equals the truncated kernel.  For ``n1 = n2`` the closed product
    forms are used instead.
    """
    if p.family is Family.ORTHO_ODD:
        raise InvalidParams("use harmonic_basis_odd for the odd orthogonal family")
    sb = slice_enumerate(p, SliceKey.bigraded(l1, l2), cap)
    if p.n1 == p.n2:
        basis = equal_block_harmonics(p, l1, l2, cap)
        basis.slice = sb
        return basis
    ring = p.ring
    piv = p.n1 + 1
    ix, iy = ring.x(piv), ring.y(piv)
    d = laplacian(p)
    t1 = WeylOperator.term(ring, 1, [], [f"x{piv}", f"y{piv}"])
    t2 = d - t1
    inv = [(f"x{piv}", 1), (f"y{piv}", 1)]
    series = []
    for m in sb.monomials:
        if m[ix] and m[iy]:
            continue
        sol = lemma21_solve(FlagProblem(t1, inv, t2, Polynomial.monomial(ring, m)))
        if not sol.verified:
            raise InputNotHarmonic("flag series failed verification")
        series.append(sol.poly)
    polys, over = _recombine(p, series, cap)
    rows = rref((f.terms for f in polys), key=monomial_key)
    return SubspaceBasis(p, rows, sb, {"seeds": len(series), "over_cap": over})


def odd_harmonic(p: RepParams, f: Polynomial, iota: int = 0) -> Polynomial:
    """``sum_i (-2)^i x0^(2i+iota) D^i(f) / (2i+iota)!`` for f free of ``x0``.

    The sum telescopes under ``D' = d^2/dx0^2 + 2D``, so the result is odd
    harmonic for every f.  It is finite because ``D`` is locally nilpotent.
    """
    d = laplacian(p)
    out = Polynomial.zero(p.ring)
    term, i = f, 0
    while not term.is_zero():
        c = Fraction((-2) ** i, math.factorial(2 * i + iota))
        out = out + (Polynomial.var(p.ring, "x0", 2 * i + iota) * term).scale(c)
        term = op_apply(d, term)
        i += 1
    return out


def harmonic_basis_odd(p: RepParams, k: int, cap: int) -> SubspaceBasis:
    """Truncated basis of the harmonic slice ``H'<k>`` for ``o(2n+1)``.

    Seeds are ``x0^i f`` with ``i`` in ``{0, 1}`` and ``f`` a monomial of total
    grade ``k - i``; the pivot is ``d^2/dx0^2``.
    """
    if p.family is not Family.ORTHO_ODD:
        raise InvalidParams("odd orthogonal family expected")
    sb = slice_enumerate(p, SliceKey.odd_total(k), cap)
    ring = p.ring
    t1 = WeylOperator.term(ring, 1, [], ["x0", "x0"])
    t2 = laplacian(p).scale(2)
    series = []
    for m in sb.monomials:
        if m[0] > 1:
            continue
        sol = lemma21_solve(FlagProblem(t1, [("x0", 2)], t2, Polynomial.monomial(ring, m)))
        if not sol.verified:
            raise InputNotHarmonic("flag series failed verification")
        series.append(sol.poly)
    polys, over = _recombine(p, series, cap)
    rows = rref((f.terms for f in polys), key=monomial_key)
    return SubspaceBasis(p, rows, sb, {"seeds": len(series), "over_cap": over})


def classical_params(n: int) -> RepParams:
    """Parameters whose ring is ``F[x1..xn]``, used to host the classical case."""
    return RepParams(Family.SPECIAL_LINEAR, n, 1, 1, single_block=True)


def classical_kernel(n: int, degree: int, shape: Sequence[int]) -> SubspaceBasis:
    """Brute-force kernel of ``sum_i d_i^{m_i}`` on homogeneous polynomials of one degree."""
    p = classical_params(n)
    op = WeylOperator.zero(p.ring)
    for i, m in enumerate(shape, start=1):
        op = op + WeylOperator.deriv(p.ring, f"x{i}", m)
    return kernel_on_slice(op, slice_enumerate(p, SliceKey.degree(degree), degree))


def check_classical(n: int, degree: int, shape: Sequence[int]) -> CheckResult:
    """Seeded elements against the brute-force kernel and the explicit sum."""
    p = classical_params(n)
    polys = classical_harmonic_basis(n, degree, shape)
    span = SubspaceBasis.from_polynomials(p, polys)
    kern = classical_kernel(n, degree, shape)
    closed = all(classical_harmonic_closed_form(_exps(f), shape) == f for f in polys)
    ok = kern.same_space(span) and span.dim == len(polys) and closed
    return CheckResult("classical", {"n": n, "shape": list(shape)}, status(ok),
                       detail={"degree": degree, "dim": span.dim, "oracle_dim": kern.dim, "closed_form": closed})


def _exps(f: Polynomial) -> Tuple[int, ...]:
    """Seed exponent of a seeded element: its unique term with ``x1`` power below the first order."""
    return min(f.terms, key=lambda e: e[0])
