"""Splitting graded pieces into ``sum_m eta^m(h_m)`` with harmonic ``h_m``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .checks import lowering_constant
from .errors import InvalidParams, NonTerminating, RegimeViolation, SingularConstant
from .flag import harmonic_basis_odd, harmonic_basis_sl
from .linalg import (SliceKey, SubspaceBasis, bilinear_form, grades_of, matrix_rank, slice_enumerate)
from .reps import Family, RepParams, family_laplacians
from .report import CheckResult, status
from .spans import symplectic_alt_layer, symplectic_sym_layer
from .weyl import Polynomial, apply_power, op_apply


def regime_bound(p: RepParams) -> int:
    """Largest total grade for which the harmonic decomposition holds."""
    return p.n1 - p.n2 + 1 - (1 if p.n1 == p.n2 else 0)


def total_grade(p: RepParams, f: Polynomial) -> int:
    grades = {sum(grades_of(p, e)) for e in f.terms}
    if len(grades) != 1:
        raise InvalidParams("polynomial is not homogeneous in the total grading")
    return grades.pop()


@dataclass
class Decomposition:
    grade: int
    components: List[Tuple[int, Polynomial]]  # (m, h_m), h_m harmonic

    def reconstruct(self, p: RepParams) -> Polynomial:
        _, eta = family_laplacians(p)
        out = Polynomial.zero(p.ring)
        for m, h in self.components:
            out = out + apply_power(eta, h, m)
        return out

    def to_json(self) -> dict:
        return {"grade": self.grade, "components": [{"m": m, "h": str(h)} for m, h in self.components]}


def harmonic_decompose(f: Polynomial, p: RepParams, iteration_cap: int = 64) -> Decomposition:
    """Write ``f = sum_m eta^m(h_m)`` with every ``h_m`` killed by the Laplacian.

    The top index N is the least one with ``D^(N+1) f = 0``.  Then
    ``D^N f = c_N h_N`` for a known nonzero constant, ``eta^N h_N`` is
    removed and the process repeats on the remainder.
    """
    if p.family is Family.SYMPLECTIC or p.single_block:
        raise InvalidParams("no Laplacian decomposition for this family")
    d, eta = family_laplacians(p)
    if f.is_zero():
        return Decomposition(0, [])
    grade = total_grade(p, f)
    if grade > regime_bound(p):
        raise RegimeViolation(f"total grade {grade} exceeds {regime_bound(p)}")
    powers = [f]
    while True:
        nxt = op_apply(d, powers[-1])
        if nxt.is_zero():
            break
        powers.append(nxt)
        if len(powers) > iteration_cap:
            raise NonTerminating("Laplacian powers did not vanish")
    comps: List[Tuple[int, Polynomial]] = []
    rest = f
    for top in range(len(powers) - 1, -1, -1):
        dn = apply_power(d, rest, top)
        if dn.is_zero():
            continue
        const = 1
        for j in range(1, top + 1):
            const *= lowering_constant(p, grade - 2 * top, j)
        if const == 0:
            raise SingularConstant(f"lowering constant vanished at m={top}")
        h = dn.scale(Fraction(1, const))
        comps.append((top, h))
        rest = rest - apply_power(eta, h, top)
    if not rest.is_zero():
        raise SingularConstant("remainder left after peeling all components")
    comps.sort(key=lambda t: t[0])
    return Decomposition(grade, comps)


def _harmonic_basis(p: RepParams, key: SliceKey, cap: int) -> SubspaceBasis:
    if p.family is Family.ORTHO_ODD:
        return harmonic_basis_odd(p, key.k, cap)
    if key.kind == "bigraded":
        return harmonic_basis_sl(p, key.l1, key.l2, cap)
    polys = []
    for l1 in range(-cap, cap + 1):
        polys.extend(harmonic_basis_sl(p, l1, key.k - l1, cap).polynomials())
    return SubspaceBasis.from_polynomials(p, polys)


def _shift(key: SliceKey, m: int) -> SliceKey:
    if key.kind == "bigraded":
        return SliceKey.bigraded(key.l1 - m, key.l2 - m)
    if key.kind == "odd_total":
        return SliceKey.odd_total(key.k - 2 * m)
    return SliceKey.total(key.k - 2 * m)


def _gram_rank(rows_a: List[Polynomial], rows_b: List[Polynomial], p: RepParams):
    return [[bilinear_form(a, b, p) for b in rows_b] for a in rows_a]


def decomposition_audit(p: RepParams, key: SliceKey, cap: int) -> CheckResult:
    """Reconstruction, orthogonality and nondegeneracy of the harmonic splitting.

    Block m is spanned by ``eta^m`` of a truncated harmonic basis of the shifted
    slice together with the m-th components of every slice monomial.  Each
    block must have a nonsingular Gram matrix, distinct blocks must be
    orthogonal, and together they must be independent and cover the slice.
    """
    if p.family is Family.SYMPLECTIC:
        return symplectic_split_audit(p, cap)
    detail: dict = {}
    failures: List[str] = []
    if key.grade_sum() > regime_bound(p):
        raise RegimeViolation(f"total grade {key.grade_sum()} exceeds {regime_bound(p)}")
    sb = slice_enumerate(p, key, cap)
    d, eta = family_laplacians(p)
    pieces: dict = {}
    for m in sb.monomials:
        f = Polynomial.monomial(p.ring, m)
        dec = harmonic_decompose(f, p)
        if dec.reconstruct(p) != f:
            failures.append(f"reconstruction {f}")
        if any(op_apply(d, h) for _, h in dec.components):
            failures.append(f"non-harmonic component for {f}")
        for k, h in dec.components:
            pieces.setdefault(k, []).append(apply_power(eta, h, k))
    detail["monomials"] = len(sb.monomials)
    # block m: eta^m of the truncated harmonic basis plus the m-th components
    # of all slice monomials, so that the blocks together cover the slice.
    # Components may exceed the cap (their top parts cancel in the sum), so
    # the blocks can span more than the truncated slice.
    step = 0 if (p.n1 == p.n2 and p.family is not Family.ORTHO_ODD) else 2
    blocks: List[List[Polynomial]] = []
    m = 0
    while (cap - step * m >= 0 and (step or m <= cap)) or m in pieces:
        imgs = pieces.get(m, [])
        if cap - step * m >= 0:
            hb = _harmonic_basis(p, _shift(key, m), cap - step * m)
            imgs = imgs + [apply_power(eta, h, m) for h in hb.polynomials()]
        blocks.append(SubspaceBasis.from_polynomials(p, imgs).polynomials())
        m += 1
    detail["block_dims"] = [len(b) for b in blocks]
    for i, bi in enumerate(blocks):
        g = _gram_rank(bi, bi, p)
        r = matrix_rank(g)
        if r != len(bi):
            failures.append(f"block {i} gram rank {r} < {len(bi)}")
        for j in range(i + 1, len(blocks)):
            if any(v for row in _gram_rank(bi, blocks[j], p) for v in row):
                failures.append(f"blocks {i},{j} not orthogonal")
    covered = SubspaceBasis.from_polynomials(p, [g for b in blocks for g in b])
    if covered.dim != sum(len(b) for b in blocks):
        failures.append("blocks are not independent")
    if not all(covered.contains(f) for f in sb.polynomials()):
        failures.append("blocks do not cover the slice")
    detail["slice_dim"] = len(sb.monomials)
    detail["span_dim"] = covered.dim
    detail["failures"] = failures[:10]
    return CheckResult("decomposition", p.as_dict(), status(not failures), slice=key.to_json(), cap=cap,
                       detail=detail)


def symplectic_split_audit(p: RepParams, cap: int) -> CheckResult:
    """Zero slice of ``sp(2n)`` with ``n1 = n2 = n`` as an orthogonal sum of two submodules."""
    from .reps import rho, spanning_set

    key = SliceKey.total(0)
    sb = slice_enumerate(p, key, cap)
    sym = symplectic_sym_layer(p, cap)
    alt = symplectic_alt_layer(p, cap)
    failures = []
    both = SubspaceBasis.from_polynomials(p, sym.polynomials() + alt.polynomials())
    if both.dim != sym.dim + alt.dim:
        failures.append("layers intersect")
    if both.dim != len(sb.monomials):
        failures.append(f"layers span {both.dim} of {len(sb.monomials)}")
    if any(bilinear_form(a, b, p) for a in sym.polynomials() for b in alt.polynomials()):
        failures.append("layers not orthogonal")
    # closure: images of each layer stay in the same layer (checked up to cap + 2)
    sym2, alt2 = symplectic_sym_layer(p, cap + 2), symplectic_alt_layer(p, cap + 2)
    ops = [rho(p, g.matrix) for g in spanning_set(p)]
    for name, layer, big in (("sym", sym, sym2), ("alt", alt, alt2)):
        for f in layer.polynomials():
            if not all(big.contains(op_apply(op, f)) for op in ops):
                failures.append(f"{name} layer not invariant")
                break
    by_degree = {}
    for name, layer in (("sym", sym), ("alt", alt)):
        for pv in layer.pivots():
            d = sum(pv)
            by_degree.setdefault(d, {"sym": 0, "alt": 0})[name] += 1
    detail = {"slice_dim": len(sb.monomials), "sym": sym.dim, "alt": alt.dim,
              "by_degree": {str(k): v for k, v in sorted(by_degree.items())}, "failures": failures}
    return CheckResult("sp-split", p.as_dict(), status(not failures), slice=key.to_json(), cap=cap, detail=detail)
