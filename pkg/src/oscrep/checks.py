"""Representation-level checks: homomorphism, commutation, adjointness, lowering."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Optional

from .linalg import SliceKey, bilinear_form
from .reps import (Family, RepParams, abstract_bracket, dual_laplacian, family_laplacians, flat,
                   flat_prime, laplacian, rho, spanning_set, total_grading)
from .report import CheckResult, status
from .weyl import Polynomial, WeylOperator, apply_power, op_apply, op_bracket


def check_homomorphism(p: RepParams) -> CheckResult:
    """``[rho(a), rho(b)] = rho([a, b])`` over all pairs of the spanning set."""
    gens = spanning_set(p)
    ops = [rho(p, g.matrix) for g in gens]
    failures = []
    pairs = 0
    for i, a in enumerate(gens):
        for j in range(i + 1, len(gens)):
            b = gens[j]
            pairs += 1
            lhs = op_bracket(ops[i], ops[j])
            rhs = rho(p, abstract_bracket(a.matrix, b.matrix))
            if lhs != rhs:
                failures.append(f"{a.name},{b.name}")
    return CheckResult("homomorphism", p.as_dict(), status(not failures),
                       detail={"pairs": pairs, "failures": failures[:10]})


def commuting_operators(p: RepParams) -> Dict[str, WeylOperator]:
    """Operators that commute with the whole representation."""
    if p.single_block:
        return {"flat": flat(p)}
    fam = p.family
    if fam is Family.SPECIAL_LINEAR:
        return {"flat": flat(p), "flatp": flat_prime(p), "D": laplacian(p), "eta": dual_laplacian(p)}
    if fam is Family.ORTHO_EVEN:
        return {"flat+flatp": total_grading(p), "D": laplacian(p), "eta": dual_laplacian(p)}
    if fam is Family.ORTHO_ODD:
        dp, ep = family_laplacians(p)
        return {"flat+flatp+x0dx0": total_grading(p), "Dp": dp, "etap": ep}
    return {"flat+flatp": total_grading(p)}


def commutation_table(p: RepParams, ops: Optional[Dict[str, WeylOperator]] = None) -> Dict[str, List[str]]:
    """For each operator, the spanning elements it fails to commute with."""
    ops = ops if ops is not None else commuting_operators(p)
    gens = spanning_set(p)
    images = [(g.name, rho(p, g.matrix)) for g in gens]
    out = {}
    for name, t in ops.items():
        out[name] = [gname for gname, r in images if not op_bracket(t, r).is_zero()]
    return out


def check_commutation(p: RepParams) -> CheckResult:
    table = commutation_table(p)
    ok = all(not v for v in table.values())
    return CheckResult("commutation", p.as_dict(), status(ok), detail={k: v[:10] for k, v in table.items()})


def check_laplacian_bracket(p: RepParams) -> CheckResult:
    """``[D, eta] = n2 - n1 + flat + flatp`` and the grading relations.

    For the odd family the version with ``x0`` is checked as well.
    """
    d, e, fl, flp = laplacian(p), dual_laplacian(p), flat(p), flat_prime(p)
    ring = p.ring
    expect = fl + flp + WeylOperator.scalar(ring, p.n2 - p.n1)
    rel = {
        "[D,eta]": op_bracket(d, e) == expect,
        "[flat,D]=-D": op_bracket(fl, d) == -d,
        "[flatp,D]=-D": op_bracket(flp, d) == -d,
        "[flat,eta]=eta": op_bracket(fl, e) == e,
        "[flatp,eta]=eta": op_bracket(flp, e) == e,
    }
    if p.family is Family.ORTHO_ODD:
        dp, ep = family_laplacians(p)
        k = total_grading(p)
        rel["[Dp,etap]"] = op_bracket(dp, ep) == k.scale(4) + WeylOperator.scalar(ring, 2 + 4 * (p.n2 - p.n1))
        rel["[x0dx0+flat+flatp,Dp]=-2Dp"] = op_bracket(k, dp) == dp.scale(-2)
    failed = [k for k, v in rel.items() if not v]
    return CheckResult("laplacian-bracket", p.as_dict(), status(not failed), detail={"failed": failed})


# Adjointness ---------------------------------------------------------------------

def random_polynomial(rng: random.Random, p: RepParams, max_degree: int, terms: int = 4,
                      support: Optional[list] = None) -> Polynomial:
    ring = p.ring
    out: Dict[tuple, Fraction] = {}
    mons = list(support or [])
    for _ in range(terms):
        d = rng.randint(0, max_degree)
        e = [0] * ring.size
        for _ in range(d):
            e[rng.randrange(ring.size)] += 1
        mons.append(tuple(e))
    for m in mons:
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if c:
            out[m] = out.get(m, 0) + c
    return Polynomial(ring, out)


def check_adjointness(p: RepParams, trials: int = 100, max_degree: int = 5, seed: int = 0) -> CheckResult:
    """``(rho(a) f | g) = (f | rho(a^t) g)`` on random data.

    ``g`` is built to overlap the support of ``rho(a) f`` so that most trials
    compare nonzero numbers.  The Laplacian pair is included as ``(D f|g) = (f|eta g)``.
    """
    rng = random.Random(seed)
    gens = spanning_set(p)
    pairs = [(g.name, rho(p, g.matrix), rho(p, g.matrix.transpose())) for g in gens]
    if not p.single_block:
        d, e = family_laplacians(p)
        pairs.append(("D/eta", d, e))
    failures, nontrivial = [], 0
    for t in range(trials):
        name, a, at = pairs[rng.randrange(len(pairs))]
        f = random_polynomial(rng, p, max_degree)
        af = op_apply(a, f)
        g = random_polynomial(rng, p, max_degree, terms=2, support=af.monomials())
        lhs = bilinear_form(af, g, p)
        rhs = bilinear_form(f, op_apply(at, g), p)
        if lhs:
            nontrivial += 1
        if lhs != rhs:
            failures.append({"trial": t, "element": name, "lhs": str(lhs), "rhs": str(rhs)})
    return CheckResult("adjointness", p.as_dict(), status(not failures),
                       detail={"trials": trials, "nontrivial": nontrivial, "failures": failures[:5]})


# Lowering law -------------------------------------------------------------------

def lowering_constant(p: RepParams, grade: int, m: int) -> int:
    """Scalar c with ``D(eta^m g) = c eta^(m-1) g`` for harmonic g of total grade ``grade``."""
    if p.family is Family.ORTHO_ODD:
        return 2 * m * (2 * (grade + p.n2 - p.n1 + m - 1) + 1)
    return m * (p.n2 - p.n1 + grade + m - 1)


def vanishing_predicted(p: RepParams, grade: int, m: int) -> bool:
    """Closed-form criterion for the lowering constant to vanish."""
    if p.family is Family.ORTHO_ODD:
        return False
    return grade <= p.n1 - p.n2 and m == p.n1 - p.n2 - grade + 1


def check_lowering(p: RepParams, key: SliceKey, basis: List[Polynomial], ms=(1, 2), cap=None) -> CheckResult:
    d, e = family_laplacians(p)
    grade = key.grade_sum()
    failures = []
    for m in ms:
        c = lowering_constant(p, grade, m)
        if (c == 0) != vanishing_predicted(p, grade, m):
            failures.append({"m": m, "reason": "vanishing criterion disagrees with constant"})
        for g in basis:
            lower = apply_power(e, g, m - 1)
            top = op_apply(e, lower)
            lhs = op_apply(d, top)
            if lhs != lower.scale(c):
                failures.append({"m": m, "g": str(g)})
            elif lhs.is_zero() != (c == 0 or lower.is_zero()):
                failures.append({"m": m, "g": str(g), "reason": "vanishing"})
    return CheckResult("lowering", p.as_dict(), status(not failures), slice=key.to_json(), cap=cap,
                       detail={"elements": len(basis), "failures": failures[:5]})
