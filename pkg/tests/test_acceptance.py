"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run ``python tests/test_acceptance.py`` for the lines alone, or through pytest
where they are repeated in the terminal summary.
"""

import io
import os
import sys
import tempfile
from contextlib import redirect_stdout

from oscrep.checks import (check_adjointness, check_commutation, check_homomorphism, check_laplacian_bracket,
                           check_lowering)
from oscrep.cli import main
from oscrep.decompose import decomposition_audit, regime_bound
from oscrep.flag import check_classical, classical_kernel, harmonic_basis_odd, harmonic_basis_sl
from oscrep.identities import IDENTITIES, apply_word, check_identity, E
from oscrep.linalg import SliceKey, kernel_on_slice, slice_enumerate
from oscrep.reps import Family, RepParams, family_laplacians
from oscrep.singular import singular_vectors
from oscrep.weyl import Polynomial

ORACLE_PARAMS = [RepParams("sl", 3, 1, 2), RepParams("sl", 4, 1, 3), RepParams("sl", 2, 1, 1)]
ORACLE_CAP = 6


def all_params(ns=(2, 3)):
    for fam in Family:
        for n in ns:
            for n1 in range(1, n + 1):
                for n2 in range(n1, n + 1):
                    yield RepParams(fam, n, n1, n2)


def regime_slices(p, bound=3):
    top = regime_bound(p)
    return [(l1, l2) for l1 in range(-bound, bound + 1) for l2 in range(-bound, bound + 1) if l1 + l2 <= top]


def report(log, number, title, failures, note=""):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if note:
        line += f" ({note})"
    if failures:
        line += f" -- {len(failures)} failure(s), first: {failures[0]}"
    log.append(line)
    print(line)
    assert ok, line


def test_01_homomorphism(acceptance_log):
    failures, count = [], 0
    params = list(all_params()) + [RepParams("sl", n, n1, n1, single_block=True) for n in (2, 3) for n1 in range(1, n)]
    for p in params:
        count += 1
        r = check_homomorphism(p)
        if not r.ok:
            failures.append((p.as_dict(), r.detail["failures"][:2]))
    report(acceptance_log, 1, "rho([a,b]) = [rho(a), rho(b)] on all spanning pairs", failures,
           f"{count} parameter sets")


def test_02_operator_identities(acceptance_log):
    failures, count = [], 0
    for p in all_params((2, 3, 4)):
        count += 1
        for r in (check_laplacian_bracket(p), check_commutation(p)):
            if not r.ok:
                failures.append((r.check, p.as_dict(), r.detail))
    report(acceptance_log, 2, "[D,eta] = n2-n1+flat+flatp, grading brackets, invariance", failures,
           f"{count} parameter sets, n <= 4")


def test_03_adjointness(acceptance_log):
    failures, trivial = [], 0
    for p in all_params():
        r = check_adjointness(p, trials=100, max_degree=5, seed=0)
        trivial += 100 - r.detail["nontrivial"]
        if not r.ok:
            failures.append((p.as_dict(), r.detail["failures"][:1]))
    report(acceptance_log, 3, "(rho(a)f|g) = (f|rho(a^t)g) and the Laplacian pair, 100 trials each", failures,
           f"{trivial} trials with both sides zero")


def _oracle_cases():
    for p in ORACLE_PARAMS:
        for l1, l2 in regime_slices(p):
            yield p, SliceKey.bigraded(l1, l2), harmonic_basis_sl(p, l1, l2, ORACLE_CAP)
    q = RepParams("so-odd", 3, 1, 2)
    for k in (0, -1, -2):
        yield q, SliceKey.odd_total(k), harmonic_basis_odd(q, k, ORACLE_CAP)


def test_04_oracle_equivalence(acceptance_log):
    failures, count = [], 0
    for p, key, basis in _oracle_cases():
        count += 1
        d, _ = family_laplacians(p)
        oracle = kernel_on_slice(d, slice_enumerate(p, key, ORACLE_CAP))
        if not oracle.same_space(basis):
            failures.append((p.as_dict(), str(key), basis.dim, oracle.dim))
    report(acceptance_log, 4, "flag-solver bases equal the brute-force Laplacian kernels", failures,
           f"{count} slices, cap {ORACLE_CAP}")


def test_05_lowering(acceptance_log):
    failures, elements = [], 0
    for p, key, basis in _oracle_cases():
        polys = basis.polynomials()
        elements += len(polys)
        r = check_lowering(p, key, polys, ms=(1, 2), cap=ORACLE_CAP)
        if not r.ok:
            failures.append((p.as_dict(), str(key), r.detail["failures"][:1]))
    report(acceptance_log, 5, "D eta^m g = c(m) eta^(m-1) g with the vanishing criterion, m in {1,2}", failures,
           f"{elements} basis elements")


def test_06_decomposition_audits(acceptance_log):
    failures, count = [], 0
    for p in ORACLE_PARAMS:
        for l1, l2 in regime_slices(p):
            count += 1
            r = decomposition_audit(p, SliceKey.bigraded(l1, l2), 6)
            if not r.ok:
                failures.append(("sl", p.as_dict(), (l1, l2), r.detail["failures"][:2]))
    even = RepParams("so-even", 2, 1, 2)
    for k in (0, -1, -2):
        count += 1
        r = decomposition_audit(even, SliceKey.total(k), 5)
        if not r.ok:
            failures.append(("o(4)", k, r.detail["failures"][:2]))
    odd = RepParams("so-odd", 3, 1, 2)
    for k in (0, -1):
        count += 1
        r = decomposition_audit(odd, SliceKey.odd_total(k), 5)
        if not r.ok:
            failures.append(("o(7)", k, r.detail["failures"][:2]))
    sp = RepParams("sp", 2, 2, 2)
    r = decomposition_audit(sp, SliceKey.total(0), 6)
    count += 1
    if not r.ok or r.detail["by_degree"]["2"] != {"sym": 3, "alt": 1}:
        failures.append(("sp(4)", r.detail))
    report(acceptance_log, 6, "harmonic decompositions and the sp(4) zero-slice split", failures, f"{count} audits")


def test_07_transition_identities(acceptance_log):
    failures = []
    o6 = RepParams("so-even", 3, 1, 2)
    x1y3 = Polynomial.parse(o6.ring, "x1*y3")
    got = apply_word(o6, [(E(6, 1) - E(4, 3), 1)], x1y3)
    if got != Polynomial.parse(o6.ring, "-x1^2"):
        failures.append(("merge example", str(got)))
    o4 = RepParams("so-even", 2, 2, 2)
    zeta = Polynomial.parse(o4.ring, "x1*y2 - x2*y1")
    got = apply_word(o4, [(E(1, 4) - E(2, 3), 1)], zeta)
    if got != Polynomial.constant(o4.ring, 2):
        failures.append(("zeta example", str(got)))
    for slug in IDENTITIES:
        r = check_identity(slug, bound=2)
        if not r.ok or r.detail["nonzero"] == 0:
            failures.append((slug, r.detail["failures"][:1]))
    report(acceptance_log, 7, "transition identities with exact constants", failures,
           f"{len(IDENTITIES)} identities, exponents <= 2")


def test_08_singular_catalogs(acceptance_log):
    failures = []
    checked = 0
    for p in [RepParams("sl", 4, 1, 3), RepParams("sl", 2, 1, 1), RepParams("sl", 2, 2, 2)]:
        for l1 in range(-3, 4):
            for l2 in range(-3, 4):
                for harmonic in (True, False):
                    if harmonic and l1 + l2 > regime_bound(p):
                        continue
                    rep = singular_vectors(p, SliceKey.bigraded(l1, l2), 6, harmonic=harmonic)
                    checked += 1
                    if not rep.exact:
                        failures.append((p.as_dict(), (l1, l2), harmonic, rep.count, rep.catalog_dim))
    p = RepParams("sl", 4, 1, 3)
    for l1, l2 in [(-1, 0), (0, -1), (-1, -1), (-2, 1), (1, -3)]:
        rep = singular_vectors(p, SliceKey.bigraded(l1, l2), 6)
        if rep.count != 1:
            failures.append(("unique", (l1, l2), rep.count))
    rep = singular_vectors(p, SliceKey.bigraded(1, 1), 10)
    if rep.count != 2 or not rep.exact:
        failures.append(("two vectors at (1,1)", rep.count))
    report(acceptance_log, 8, "singular vectors match the closed-form catalogs", failures,
           f"{checked} catalog slices at cap 6, five uniqueness slices, two-vector slice at cap 10")


def test_09_classical(acceptance_log):
    failures = []
    for k in range(7):
        r = check_classical(3, k, (2, 2, 2))
        dim = classical_kernel(3, k, (2, 2, 2)).dim
        if not r.ok or dim != 2 * k + 1:
            failures.append((k, dim, r.detail))
    report(acceptance_log, 9, "classical Laplace in 3 variables: dim 2k+1, seeded basis spans", failures,
           "k <= 6")


def _run_to_file(argv):
    fd, path = tempfile.mkstemp(suffix=".json")
    os.close(fd)
    code = main(argv + ["--format", "json", "--out", path])
    with open(path, "rb") as fh:
        data = fh.read()
    os.unlink(path)
    return code, data


def test_10_determinism(acceptance_log):
    failures = []
    commands = [
        ["rep", "check", "--family", "so-odd", "--n", "3", "--n1", "1", "--n2", "2", "--seed", "7"],
        ["audit", "thm1", "--n", "3", "--n1", "1", "--n2", "2", "--l1", "0", "--l2", "0", "--cap", "4"],
        ["singular", "--family", "sl", "--n", "4", "--n1", "1", "--n2", "3", "--l1", "0", "--l2", "-1"],
        ["identity", "all"],
    ]
    for argv in commands:
        first, second = _run_to_file(argv), _run_to_file(argv)
        if first != second or first[0] != 0:
            failures.append((argv[:2], first[0]))
    report(acceptance_log, 10, "identical runs give byte-identical JSON", failures, f"{len(commands)} commands")


if __name__ == "__main__":
    log = []
    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            buf = io.StringIO()
            try:
                with redirect_stdout(buf):
                    fn(log)
            except AssertionError:
                status = 1
            print(log[-1])
    sys.exit(status)
