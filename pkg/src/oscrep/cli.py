"""Command line front end: ``oscrep <command> [flags]``.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import __version__
from .checks import check_adjointness, check_commutation, check_homomorphism, check_laplacian_bracket
from .decompose import decomposition_audit, harmonic_decompose
from .errors import OscrepError, PatternMismatch
from .flag import check_classical, classical_harmonic_basis, harmonic_basis_odd, harmonic_basis_sl
from .identities import IDENTITIES, check_identity
from .linalg import SliceKey, SubspaceBasis, kernel_on_slice, slice_enumerate
from .reps import Family, RepParams, family_laplacians, rho, spanning_set, special_operators
from .report import CheckResult, dumps, results_csv, results_text, status
from .singular import singular_vectors
from .spans import SPANS, check_span
from .weyl import Polynomial, op_apply

FAMILIES = [f.value for f in Family]

THEOREM_DEFAULTS = {
    "thm1": ("sl", 3, 1, 2),
    "thm2": ("so-even", 2, 1, 2),
    "thm3": ("so-odd", 3, 1, 2),
    "thm4": ("sp", 2, 2, 2),
}


@dataclass
class Output:
    """What a command produces: JSON payload, CSV rows and text lines."""

    data: object
    rows: List[List[object]] = field(default_factory=list)
    header: List[str] = field(default_factory=list)
    text: List[str] = field(default_factory=list)
    results: Optional[List[CheckResult]] = None

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results or [])


def _checks_output(results: List[CheckResult]) -> Output:
    return Output([r.to_json() for r in results], results=results)


def _params(args, default=("sl", 3, 1, 2)) -> RepParams:
    fam = args.family or default[0]
    n = args.n if args.n is not None else default[1]
    n1 = args.n1 if args.n1 is not None else default[2]
    n2 = args.n2 if args.n2 is not None else (n1 if args.single_block else default[3])
    return RepParams(Family.from_name(fam), n, n1, n2, single_block=args.single_block)


def _key(args, p: RepParams) -> SliceKey:
    if args.l1 is not None or args.l2 is not None:
        return SliceKey.bigraded(args.l1 or 0, args.l2 or 0)
    k = args.k or 0
    if p.family is Family.ORTHO_ODD:
        return SliceKey.odd_total(k)
    if p.family is Family.SPECIAL_LINEAR and not p.single_block:
        return SliceKey.bigraded(0, k)
    return SliceKey.total(k)


def _basis_output(basis: SubspaceBasis, extra: Optional[dict] = None) -> Output:
    data = {**basis.to_json(), "dim": basis.dim, **(extra or {})}
    polys = [str(f) for f in basis.polynomials()]
    return Output(data, [[i, f] for i, f in enumerate(polys)], ["index", "polynomial"],
                  [f"dim = {basis.dim}"] + polys)


# Commands ---------------------------------------------------------------------------

def cmd_rep(args) -> Output:
    p = _params(args)
    results = [check_homomorphism(p), check_adjointness(p, trials=args.trials, seed=args.seed)]
    if args.all_checks:
        results += [check_commutation(p)]
        if not p.single_block:
            results.append(check_laplacian_bracket(p))
    return _checks_output(results)


def cmd_ops(args) -> Output:
    p = _params(args)
    ops = special_operators(p)
    gens = [(g.name, rho(p, g.matrix)) for g in spanning_set(p)]
    data = {"params": p.as_dict(), "operators": {k: v.to_str(ascii=True) for k, v in ops.items()},
            "generators": [{"name": name, "operator": op.to_str(ascii=True)} for name, op in gens]}
    rows = [[k, v.to_str(ascii=True)] for k, v in ops.items()] + [[n, o.to_str(ascii=True)] for n, o in gens]
    text = [f"{k} = {v.to_str()}" for k, v in ops.items()]
    text += [f"rho({name}) = {op.to_str()}" for name, op in gens]
    return Output(data, rows, ["name", "operator"], text)


def cmd_slice(args) -> Output:
    p = _params(args)
    key = _key(args, p)
    sb = slice_enumerate(p, key, args.cap)
    mons = [str(f) for f in sb.polynomials()]
    data = {"params": p.as_dict(), "slice": key.to_json(), "degree_cap": args.cap,
            "dim": len(mons), "monomials": mons}
    return Output(data, [[i, m] for i, m in enumerate(mons)], ["index", "monomial"],
                  [f"{key} cap={args.cap} dim={len(mons)}"] + mons)


def cmd_kernel(args) -> Output:
    p = _params(args)
    key = _key(args, p)
    d, _ = family_laplacians(p)
    basis = kernel_on_slice(d, slice_enumerate(p, key, args.cap))
    return _basis_output(basis, {"params": p.as_dict()})


def cmd_basis(args) -> Output:
    if args.classical:
        n = args.n if args.n is not None else 3
        shape = [int(s) for s in args.shape.split(",")] if args.shape else [2] * n
        if len(shape) != n:
            raise OscrepError("shape needs one order per variable")
        degree = args.k or 0
        polys = [str(f) for f in classical_harmonic_basis(n, degree, shape)]
        data = {"n": n, "degree": degree, "shape": shape, "basis": polys, "dim": len(polys)}
        res = None
        if args.check:
            res = [check_classical(n, degree, shape)]
            data["check"] = res[0].to_json()
        return Output(data, [[i, f] for i, f in enumerate(polys)], ["index", "polynomial"],
                      [f"dim = {len(polys)}"] + polys, res)
    p = _params(args)
    key = _key(args, p)
    if p.family is Family.ORTHO_ODD:
        basis = harmonic_basis_odd(p, key.k, args.cap)
    elif p.family is Family.SPECIAL_LINEAR and key.kind == "bigraded":
        basis = harmonic_basis_sl(p, key.l1, key.l2, args.cap)
    else:
        raise OscrepError("flag bases exist for sl (bigraded slices) and the odd orthogonal family")
    out = _basis_output(basis, {"params": p.as_dict()})
    if args.check:
        d, _ = family_laplacians(p)
        oracle = kernel_on_slice(d, slice_enumerate(p, key, args.cap))
        res = CheckResult("basis-oracle", p.as_dict(), status(oracle.same_space(basis)),
                          slice=key.to_json(), cap=args.cap, detail={"dim": basis.dim, "oracle_dim": oracle.dim})
        out.results = [res]
        out.data["check"] = res.to_json()
    return out


def cmd_singular(args) -> Output:
    p = _params(args)
    key = _key(args, p)
    rep = singular_vectors(p, key, args.cap, harmonic=not args.whole, system="full" if args.full else "sl")
    data = rep.to_json()
    text = [f"{key} cap={args.cap} singular vectors: {rep.count}"]
    text += [f"  {f}   weight {w}" for f, w in rep.vectors]
    if rep.catalog:
        text.append(f"catalog {rep.catalog}: dim {rep.catalog_dim}, contained={rep.contained}, exact={rep.exact}")
    res = None
    if args.check and rep.catalog:
        res = [CheckResult("singular-catalog", p.as_dict(), status(bool(rep.exact)),
                           slice=key.to_json(), cap=args.cap, detail={"count": rep.count})]
    rows = [[str(f), str(w)] for f, w in rep.vectors]
    return Output(data, rows, ["vector", "weight"], text, res)


def cmd_decompose(args) -> Output:
    p = _params(args)
    f = Polynomial.parse(p.ring, args.poly)
    dec = harmonic_decompose(f, p)
    data = {"params": p.as_dict(), "input": str(f), **dec.to_json()}
    res = None
    if args.check:
        d, _ = family_laplacians(p)
        ok = dec.reconstruct(p) == f and all(op_apply(d, h).is_zero() for _, h in dec.components)
        res = [CheckResult("decompose", p.as_dict(), status(ok), detail={"input": str(f)})]
    text = [f"grade {dec.grade}"] + [f"h{m} = {h}" for m, h in dec.components]
    return Output(data, [[m, str(h)] for m, h in dec.components], ["m", "h"], text, res)


def cmd_audit(args) -> Output:
    p = _params(args, THEOREM_DEFAULTS[args.theorem])
    if args.theorem == "thm4" and not p.n1 == p.n2 == p.n:
        raise PatternMismatch("the sp audit covers the split zero slice, n1 = n2 = n")
    return _checks_output([decomposition_audit(p, _key(args, p), args.cap)])


def cmd_identity(args) -> Output:
    if args.slug == "all":
        results = []
        for fam in Family:
            if fam is Family.SPECIAL_LINEAR:
                continue
            names = [s for s, i in IDENTITIES.items() if i.family is fam]
            results += [check_identity(s, None, args.bound) for s in names]
        return _checks_output(results)
    if args.slug not in IDENTITIES:
        raise OscrepError(f"unknown identity {args.slug!r}; known: {', '.join(IDENTITIES)}")
    ident = IDENTITIES[args.slug]
    p = None
    if any(v is not None for v in (args.n, args.n1, args.n2)):
        p = _params(args, (ident.family.value, *ident.default))
    return _checks_output([check_identity(args.slug, p, args.bound)])


def cmd_span(args) -> Output:
    p = _params(args)
    key = None
    if args.l1 is not None or args.l2 is not None or args.k is not None:
        key = _key(args, p)
    return _checks_output([check_span(p, args.which, args.cap, key)])


# Parser -----------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    g = c.add_argument_group("parameters")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--n1", type=int)
    g.add_argument("--n2", type=int)
    g.add_argument("--single-block", action="store_true", help="one-block sl action on F[x1..xn]")
    g.add_argument("--l1", type=int)
    g.add_argument("--l2", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--cap", type=int, default=6, help="degree cap (default 6)")
    g.add_argument("--seed", type=int, default=0)
    o = c.add_argument_group("output")
    o.add_argument("--format", choices=["json", "csv", "text"], default="text")
    o.add_argument("--out", help="write output to this file")
    o.add_argument("--check", dest="check", action="store_true", default=True)
    o.add_argument("--no-check", dest="check", action="store_false")
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="oscrep", description="Exact checks for oscillator representations.")
    ap.add_argument("--version", action="version", version=f"oscrep {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("rep", help="representation checks")
    rep_sub = rep.add_subparsers(dest="action", required=True)
    rc = rep_sub.add_parser("check", parents=[common], help="homomorphism and adjointness")
    rc.add_argument("--trials", type=int, default=100)
    rc.add_argument("--all-checks", action="store_true", help="add commutation and Laplacian brackets")
    rc.set_defaults(func=cmd_rep)

    ops = sub.add_parser("ops", help="operators")
    ops_sub = ops.add_subparsers(dest="action", required=True)
    ops_sub.add_parser("show", parents=[common], help="print D, eta, gradings and generators").set_defaults(
        func=cmd_ops)

    sub.add_parser("slice", parents=[common], help="enumerate a slice").set_defaults(func=cmd_slice)
    sub.add_parser("kernel", parents=[common], help="truncated harmonic space").set_defaults(func=cmd_kernel)
    b = sub.add_parser("basis", parents=[common], help="flag-solver bases")
    b.add_argument("--classical", action="store_true", help="classical case sum_i d_i^{m_i}, degree --k")
    b.add_argument("--shape", help="comma separated orders m_i (default all 2)")
    b.set_defaults(func=cmd_basis)
    s = sub.add_parser("singular", parents=[common], help="singular vectors on a slice")
    s.add_argument("--whole", action="store_true", help="whole slice instead of its harmonic part")
    s.add_argument("--full", action="store_true", help="use the full positive system of the family")
    s.set_defaults(func=cmd_singular)
    d = sub.add_parser("decompose", parents=[common], help="harmonic decomposition of a polynomial")
    d.add_argument("poly")
    d.set_defaults(func=cmd_decompose)
    a = sub.add_parser("audit", parents=[common], help="theorem audits")
    a.add_argument("theorem", choices=sorted(THEOREM_DEFAULTS))
    a.set_defaults(func=cmd_audit)
    i = sub.add_parser("identity", parents=[common], help="transition identities")
    i.add_argument("slug", help="identity name or 'all'")
    i.add_argument("--bound", type=int, default=2, help="largest exponent tried")
    i.set_defaults(func=cmd_identity)
    sp = sub.add_parser("span", parents=[common], help="closed-form spans against the kernel")
    sp.add_argument("which", choices=sorted(SPANS))
    sp.set_defaults(func=cmd_span)
    return ap


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return dumps(out.data)
    if out.results is not None and out.data == [r.to_json() for r in out.results]:
        return results_csv(out.results) if fmt == "csv" else results_text(out.results)
    if fmt == "csv":
        import csv
        import io
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(out.header)
        w.writerows(out.rows)
        return buf.getvalue()
    text = "\n".join(out.text) + "\n"
    if out.results:
        text += results_text(out.results)
    return text


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out = args.func(args)
    except (OscrepError, ValueError) as e:
        print(f"oscrep: error: {e}", file=sys.stderr)
        return 2
    text = render(out, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not args.check:
        return 0
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
