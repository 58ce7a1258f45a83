"""Transition identities: explicit operator words carrying one singular vector to another.

Each identity is a polynomial equality ``w(source) = rhs`` where ``w`` is a
word in represented algebra elements.  Words are lists of ``(matrix, power)``
applied left to right, so the first entry acts first.  Every identity is
checked for all exponent choices up to a bound, with exact constants.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .decompose import regime_bound
from .flag import odd_harmonic
from .errors import InvalidParams, SideConditionViolation
from .reps import Family, Matrix, RepParams, dual_laplacian, rho
from .report import CheckResult, status
from .weyl import Polynomial, apply_power

Word = List[Tuple[Matrix, int]]
Case = Tuple[Word, Polynomial, Polynomial]


def E(i: int, j: int) -> Matrix:
    return Matrix.unit(i, j)


def _x(p: RepParams, i: int, e: int = 1) -> Polynomial:
    return Polynomial.var(p.ring, f"x{i}", e)


def _y(p: RepParams, i: int, e: int = 1) -> Polynomial:
    return Polynomial.var(p.ring, f"y{i}", e)


def _falling(a: int, r: int) -> int:
    """``a (a-1) ... (a-r+1)``, allowing negative ``a``."""
    out = 1
    for s in range(r):
        out *= a - s
    return out


def _rising(a: int, lo: int, hi: int) -> int:
    """``prod_{r=lo}^{hi} (a + r)``."""
    out = 1
    for r in range(lo, hi + 1):
        out *= a + r
    return out


def _eta(p: RepParams, f: Polynomial, m: int) -> Polynomial:
    return apply_power(dual_laplacian(p), f, m)


def apply_word(p: RepParams, word: Word, f: Polynomial) -> Polynomial:
    for mat, power in word:
        f = apply_power(rho(p, mat), f, power)
    return f


@dataclass(frozen=True)
class Identity:
    slug: str
    family: Family
    summary: str
    default: Tuple[int, int, int]  # (n, n1, n2)
    exponents: Tuple[str, ...]
    build: Callable[[RepParams, Dict[str, int]], Optional[Case]]
    side: Callable[[RepParams], Optional[str]]
    signed_k: int = 0  # -1: k ranges over <= 0, +1: k >= 0, 0: no k

    def params(self) -> RepParams:
        n, n1, n2 = self.default
        return RepParams(self.family, n, n1, n2)

    def cases(self, bound: int) -> Iterable[Dict[str, int]]:
        names = list(self.exponents)
        ranges = [range(bound + 1)] * len(names)
        if self.signed_k:
            names.append("k")
            ranges.append(range(0, bound + 1) if self.signed_k > 0 else range(-bound, 1))
        for combo in itertools.product(*ranges):
            yield dict(zip(names, combo))


def _need(cond: bool, msg: str) -> Optional[str]:
    return None if cond else msg


# o(2n) ------------------------------------------------------------------------------

def _even_merge_low(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m1, m2 = e["m1"], e["m2"]
    word = [(E(n + n2 + 1, n1) - E(n + n1, n2 + 1), m2)]
    rhs = _x(p, n1, m1 + m2).scale((-1) ** m2 * math.factorial(m2))
    return word, _x(p, n1, m1) * _y(p, n2 + 1, m2), rhs


def _even_merge_mid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m1, m2 = e["m1"], e["m2"]
    word = [(E(n + n2 + 1, n1 + 1) - E(n + n1 + 1, n2 + 1), m1)]
    c = math.factorial(m1) * _falling(m2, m1)
    rhs = _y(p, n2 + 1, m2 - m1).scale(c) if m2 >= m1 else Polynomial.zero(p.ring)
    return word, _x(p, n1 + 1, m1) * _y(p, n2 + 1, m2), rhs


def _even_merge_high(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m1, m2 = e["m1"], e["m2"]
    word = [(E(n1, n + n2) - E(n2, n + n1), m2)]
    c = math.factorial(m2) * _falling(m1, m2)
    rhs = _x(p, n1, m1 - m2).scale(c) if m1 >= m2 else Polynomial.zero(p.ring)
    return word, _x(p, n1, m1) * _y(p, n2, m2), rhs


def _even_split_low(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m1, m2 = e["m1"], e["m2"]
    word = [(E(n1, n + n2 + 1) - E(n2 + 1, n + n1), m2)]
    c = (-1) ** m2 * _falling(m1 + m2, m2)
    return word, _x(p, n1, m1 + m2), (_x(p, n1, m1) * _y(p, n2 + 1, m2)).scale(c)


def _even_split_mid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m1, m2 = e["m1"], e["m2"]
    if m2 < m1:
        return None
    word = [(E(n1 + 1, n + n2 + 1) - E(n2 + 1, n + n1 + 1), m1)]
    rhs = (_x(p, n1 + 1, m1) * _y(p, n2 + 1, m2)).scale((-1) ** m1)
    return word, _y(p, n2 + 1, m2 - m1), rhs


def _even_split_high(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m1, m2 = e["m1"], e["m2"]
    if m1 < m2:
        return None
    word = [(E(n + n2, n1) - E(n + n1, n2), m2)]
    rhs = (_x(p, n1, m1) * _y(p, n2, m2)).scale((-1) ** m2)
    return word, _x(p, n1, m1 - m2), rhs


def _zeta_low(p):
    a, b = p.n1 - 1, p.n1
    return _x(p, a) * _y(p, b) - _x(p, b) * _y(p, a)


def _zeta_high(p):
    a, b = p.n1 + 1, p.n1 + 2
    return _x(p, a) * _y(p, b) - _x(p, b) * _y(p, a)


def _even_zeta_contract(p, e):
    n, n1 = p.n, p.n1
    m, k = e["m"], -e["j"]
    word = [(E(n1 - 1, n + n1) - E(n1, n + n1 - 1), m + 1)]
    c = math.factorial(m + 1) ** 2 * sum(math.comb(-k + r, r) for r in range(m + 2))
    return word, _x(p, n1, -k) * _zeta_low(p) ** (m + 1), _x(p, n1, -k).scale(c)


def _even_zeta_raise_low(p, e):
    n, n1 = p.n, p.n1
    m, j = e["m"], e["j"]
    word = [(E(n + n1 - 1, n1) - E(n + n1, n1 - 1), m + 1)]
    return word, _x(p, n1, j), _x(p, n1, j) * _zeta_low(p) ** (m + 1)


def _even_zeta_raise_high(p, e):
    n, n1 = p.n, p.n1
    m, j = e["m"], e["j"]
    word = [(E(n1 + 2, n + n1 + 1) - E(n1 + 1, n + n1 + 2), m + 1)]
    return word, _x(p, n1, j), _x(p, n1, j) * _zeta_high(p) ** (m + 1)


# o(2n+1) ----------------------------------------------------------------------------

def odd_even_vector(p: RepParams, k: int, m: int) -> Polynomial:
    return odd_harmonic(p, _eta(p, _x(p, p.n1, -k + 2 * m), m), 0)


def odd_odd_vector(p: RepParams, k: int, m: int) -> Polynomial:
    return odd_harmonic(p, _eta(p, _x(p, p.n1, -k + 2 * m + 1), m), 1)


def _odd_op(p):
    return E(p.n1, 0) - E(0, p.n + p.n1)


def _odd_down(p, e):
    m, k = e["m"], e["k"]
    if m < 1:
        return None
    c = m * (-k + 2 * m) * (2 * m - 2 * k + 2 * p.n1 - 2 * p.n2 + 1)
    return [(_odd_op(p), 1)], odd_even_vector(p, k, m), odd_odd_vector(p, k, m - 1).scale(c)


def _odd_across(p, e):
    m, k = e["m"], e["k"]
    return [(_odd_op(p), 1)], odd_odd_vector(p, k, m), odd_even_vector(p, k, m).scale(-k + 2 * m + 1)


# sp(2n) -----------------------------------------------------------------------------

def _sp_contract_low(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m2, m3 = e["k"], e["m2"], e["m3"]
    src = _eta(p, _x(p, n1, k + m2 + 2 * m3) * _y(p, n2, m2), m3)
    c = math.factorial(m3) * _rising(k + m2, 1, 2 * m3)
    return [(E(n1, n + n1), m3)], src, (_x(p, n1, k + m2) * _y(p, n2, m2)).scale(c)


def _sp_merge_high(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m2 = e["k"], e["m2"]
    word = [(E(n1, n + n2) + E(n2, n + n1), m2)]
    c = math.factorial(m2) * _rising(k, 1, m2)
    return word, _x(p, n1, k + m2) * _y(p, n2, m2), _x(p, n1, k).scale(c)


def _sp_contract_high(p, e):
    n, n2 = p.n, p.n2
    n1 = p.n1
    k, m1, m3 = e["k"], e["m1"], e["m3"]
    src = _eta(p, _x(p, n1 + 1, m1) * _y(p, n2 + 1, k + m1 + 2 * m3), m3)
    c = math.factorial(m3) * _rising(k + m1, 1, 2 * m3)
    return [(E(n + n2 + 1, n2 + 1), m3)], src, (_x(p, n1 + 1, m1) * _y(p, n2 + 1, k + m1)).scale(c)


def _sp_merge_mid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m1 = e["k"], e["m1"]
    word = [(E(n + n2 + 1, n1 + 1) + E(n + n1 + 1, n2 + 1), m1)]
    c = math.factorial(m1) * _rising(k, 1, m1)
    return word, _x(p, n1 + 1, m1) * _y(p, n2 + 1, k + m1), _y(p, n2 + 1, k).scale(c)


def _sp_y_to_x(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k = e["k"]
    word = [(E(n + n2 + 1, n1) + E(n + n1, n2 + 1), k)]
    return word, _y(p, n2 + 1, k), _x(p, n1, k).scale((-1) ** k * math.factorial(k))


def _sp_raise_mid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m1, m2 = e["k"], e["m1"], e["m2"]
    if 2 * m2 > k + m1:
        return None
    src = _eta(p, _x(p, n1 + 1, k + m1 - 2 * m2) * _y(p, n2 + 1, m1), m2)
    rhs = (_x(p, n1 + 1, k + m1) * _y(p, n2 + 1, m1)).scale(math.factorial(m2))
    return [(E(n1 + 1, n + n1 + 1), m2)], src, rhs


def _sp_merge_xmid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m1 = e["k"], e["m1"]
    word = [(E(n + n2 + 1, n1 + 1) + E(n + n1 + 1, n2 + 1), m1)]
    c = math.factorial(m1) * _rising(k, 1, m1)
    return word, _x(p, n1 + 1, k + m1) * _y(p, n2 + 1, m1), _x(p, n1 + 1, k).scale(c)


def _sp_raise_y(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m1, m2 = e["k"], e["m1"], e["m2"]
    if 2 * m2 > k + m1:
        return None
    src = _eta(p, _x(p, n1, m1) * _y(p, n2, k + m1 - 2 * m2), m2)
    rhs = (_x(p, n1, m1) * _y(p, n2, k + m1)).scale(math.factorial(m2))
    return [(E(n + n2, n2), m2)], src, rhs


def _sp_merge_yhigh(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k, m1 = e["k"], e["m1"]
    word = [(E(n1, n + n2) + E(n2, n + n1), m1)]
    c = math.factorial(m1) * _rising(k, 1, m1)
    return word, _x(p, n1, m1) * _y(p, n2, k + m1), _y(p, n2, k).scale(c)


def _sp_y_to_xmid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    k = e["k"]
    word = [(E(n1 + 1, n + n2) + E(n2, n + n1 + 1), k)]
    return word, _y(p, n2, k), _x(p, n1 + 1, k).scale(math.factorial(k))


def _sp_raise_xmid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    m3, m4, m5 = e["m3"], e["m4"], e["m5"]
    src = _eta(p, _x(p, n1 + 1, m4) * _y(p, n2, m5), m3)
    rhs = (_x(p, n1 + 1, m4 + 2 * m3) * _y(p, n2, m5)).scale(math.factorial(m3))
    return [(E(n1 + 1, n + n1 + 1), m3)], src, rhs


def _sp_collect_xmid(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    a, m5 = e["m4"], e["m5"]
    word = [(E(n1 + 1, n + n2) + E(n2, n + n1 + 1), m5)]
    return word, _x(p, n1 + 1, a) * _y(p, n2, m5), _x(p, n1 + 1, a + m5).scale(math.factorial(m5))


def _sp_lift(p, e):
    n, n1 = p.n, p.n1
    m3, m4, m5 = e["m3"], e["m4"], e["m5"]
    src = _eta(p, _x(p, n1, m4) * _y(p, p.n2 + 1, m5), m3)
    rhs = (_x(p, n1 + 1, 2 * m3) * _x(p, n1, m4) * _y(p, p.n2 + 1, m5)).scale(math.factorial(m3))
    return [(E(n1 + 1, n + n1 + 1), m3)], src, rhs


def _sp_strip(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    r1, r2, m4, m5 = e["r1"], e["r2"], e["m4"], e["m5"]
    if r1 > m4 or r2 > m5:
        return None
    m = r1 + r2
    word = [(E(n + n2 + 1, n1 + 1) + E(n + n1 + 1, n2 + 1), r2),
            (E(n1, n1 + 1) - E(n + n1 + 1, n + n1), r1)]
    src = _x(p, n1 + 1, m) * _x(p, n1, m4) * _y(p, n2 + 1, m5)
    c = math.factorial(m) * _falling(m4, r1) * _falling(m5, r2)
    return word, src, (_x(p, n1, m4 - r1) * _y(p, n2 + 1, m5 - r2)).scale(c)


def _sp_collect_low(p, e):
    n, n1, n2 = p.n, p.n1, p.n2
    a, b = e["m4"], e["m5"]
    word = [(E(n + n2 + 1, n1) + E(n + n1, n2 + 1), b)]
    rhs = _x(p, n1, a + b).scale((-1) ** b * math.factorial(b))
    return word, _x(p, n1, a) * _y(p, n2 + 1, b), rhs


# Registry ---------------------------------------------------------------------------

EVEN, ODD, SP = Family.ORTHO_EVEN, Family.ORTHO_ODD, Family.SYMPLECTIC


def _upper_room(p):
    return _need(p.n2 < p.n, "needs n2 < n")


def _mid(p):
    return _need(p.n1 < p.n2 < p.n, "needs n1 < n2 < n")


def _strict(p):
    return _need(p.n1 < p.n2, "needs n1 < n2")


def _equal_low(p):
    return _need(p.n1 == p.n2 >= 2, "needs n1 = n2 >= 2")


def _equal_high(p):
    return _need(p.n1 == p.n2 <= p.n - 2, "needs n1 = n2 <= n - 2")


def _odd_regime(p):
    return None


def _sp_case1(p):
    return _need(p.n1 + 1 < p.n2, "needs n1 + 1 < n2")


def _sp_case1_room(p):
    return _need(p.n1 + 1 < p.n2 < p.n, "needs n1 + 1 < n2 < n")


IDENTITIES: Dict[str, Identity] = {i.slug: i for i in [
    Identity("even-merge-low", EVEN, "x_{n1}^m1 y_{n2+1}^m2 -> (-1)^m2 m2! x_{n1}^(m1+m2)",
             (3, 1, 2), ("m1", "m2"), _even_merge_low, _upper_room),
    Identity("even-merge-mid", EVEN, "x_{n1+1}^m1 y_{n2+1}^m2 -> m1! (m2)_m1 y_{n2+1}^(m2-m1)",
             (3, 1, 2), ("m1", "m2"), _even_merge_mid, _mid),
    Identity("even-merge-high", EVEN, "x_{n1}^m1 y_{n2}^m2 -> m2! (m1)_m2 x_{n1}^(m1-m2)",
             (3, 1, 2), ("m1", "m2"), _even_merge_high, _strict),
    Identity("even-split-low", EVEN, "x_{n1}^(m1+m2) -> (-1)^m2 (m1+m2)_m2 x_{n1}^m1 y_{n2+1}^m2",
             (3, 1, 2), ("m1", "m2"), _even_split_low, _upper_room),
    Identity("even-split-mid", EVEN, "y_{n2+1}^(m2-m1) -> (-1)^m1 x_{n1+1}^m1 y_{n2+1}^m2",
             (3, 1, 2), ("m1", "m2"), _even_split_mid, _mid),
    Identity("even-split-high", EVEN, "x_{n1}^(m1-m2) -> (-1)^m2 x_{n1}^m1 y_{n2}^m2",
             (3, 1, 2), ("m1", "m2"), _even_split_high, _strict),
    Identity("even-zeta-contract", EVEN, "x_{n1}^-k zeta1^(m+1) -> [(m+1)!]^2 sum_r C(-k+r, r) x_{n1}^-k",
             (2, 2, 2), ("m", "j"), _even_zeta_contract, _equal_low),
    Identity("even-zeta-raise-low", EVEN, "x_{n1}^j -> x_{n1}^j zeta1^(m+1)",
             (2, 2, 2), ("m", "j"), _even_zeta_raise_low, _equal_low),
    Identity("even-zeta-raise-high", EVEN, "x_{n1}^j -> x_{n1}^j zeta2^(m+1)",
             (3, 1, 1), ("m", "j"), _even_zeta_raise_high, _equal_high),
    Identity("odd-even-to-odd", ODD,
             "even x0-series at m -> m(-k+2m)(2m-2k+2n1-2n2+1) times odd x0-series at m-1",
             (3, 1, 2), ("m",), _odd_down, _odd_regime, signed_k=-1),
    Identity("odd-odd-to-even", ODD, "odd x0-series at m -> (-k+2m+1) times even x0-series at m",
             (3, 1, 2), ("m",), _odd_across, _odd_regime, signed_k=-1),
    Identity("sp-contract-low", SP, "eta^m3(x_{n1}^(k+m2+2m3) y_{n2}^m2) -> m3! prod(k+m2+r) x_{n1}^(k+m2) y_{n2}^m2",
             (4, 1, 3), ("m2", "m3"), _sp_contract_low, _sp_case1, signed_k=1),
    Identity("sp-merge-high", SP, "x_{n1}^(k+m2) y_{n2}^m2 -> m2! prod_{r<=m2}(k+r) x_{n1}^k",
             (4, 1, 3), ("m2",), _sp_merge_high, _sp_case1, signed_k=1),
    Identity("sp-contract-high", SP,
             "eta^m3(x_{n1+1}^m1 y_{n2+1}^(k+m1+2m3)) -> m3! prod(k+m1+r) x_{n1+1}^m1 y_{n2+1}^(k+m1)",
             (4, 1, 3), ("m1", "m3"), _sp_contract_high, _sp_case1_room, signed_k=1),
    Identity("sp-merge-mid", SP, "x_{n1+1}^m1 y_{n2+1}^(k+m1) -> m1! prod_{r<=m1}(k+r) y_{n2+1}^k",
             (4, 1, 3), ("m1",), _sp_merge_mid, _sp_case1_room, signed_k=1),
    Identity("sp-y-to-x", SP, "y_{n2+1}^k -> (-1)^k k! x_{n1}^k",
             (4, 1, 3), (), _sp_y_to_x, _sp_case1_room, signed_k=1),
    Identity("sp-lift", SP, "eta^m3(x_{n1}^m4 y_{n2+1}^m5) -> m3! x_{n1+1}^(2m3) x_{n1}^m4 y_{n2+1}^m5",
             (4, 1, 3), ("m3", "m4", "m5"), _sp_lift, _sp_case1_room),
    Identity("sp-strip", SP,
             "x_{n1+1}^(r1+r2) x_{n1}^m4 y_{n2+1}^m5 -> (r1+r2)! (m4)_r1 (m5)_r2 x_{n1}^(m4-r1) y_{n2+1}^(m5-r2)",
             (4, 1, 3), ("r1", "r2", "m4", "m5"), _sp_strip, _sp_case1_room),
    Identity("sp-collect-low", SP, "x_{n1}^a y_{n2+1}^b -> (-1)^b b! x_{n1}^(a+b)",
             (4, 1, 3), ("m4", "m5"), _sp_collect_low, _sp_case1_room),
    Identity("sp-raise-mid", SP, "eta^m2(x_{n1+1}^(k+m1-2m2) y_{n2+1}^m1) -> m2! x_{n1+1}^(k+m1) y_{n2+1}^m1",
             (4, 1, 3), ("m1", "m2"), _sp_raise_mid, _sp_case1_room, signed_k=1),
    Identity("sp-merge-xmid", SP, "x_{n1+1}^(k+m1) y_{n2+1}^m1 -> m1! prod_{r<=m1}(k+r) x_{n1+1}^k",
             (4, 1, 3), ("m1",), _sp_merge_xmid, _sp_case1_room, signed_k=1),
    Identity("sp-raise-y", SP, "eta^m2(x_{n1}^m1 y_{n2}^(k+m1-2m2)) -> m2! x_{n1}^m1 y_{n2}^(k+m1)",
             (4, 1, 3), ("m1", "m2"), _sp_raise_y, _sp_case1, signed_k=1),
    Identity("sp-merge-yhigh", SP, "x_{n1}^m1 y_{n2}^(k+m1) -> m1! prod_{r<=m1}(k+r) y_{n2}^k",
             (4, 1, 3), ("m1",), _sp_merge_yhigh, _sp_case1, signed_k=1),
    Identity("sp-y-to-xmid", SP, "y_{n2}^k -> k! x_{n1+1}^k",
             (4, 1, 3), (), _sp_y_to_xmid, _sp_case1, signed_k=1),
    Identity("sp-raise-xmid", SP, "eta^m3(x_{n1+1}^m4 y_{n2}^m5) -> m3! x_{n1+1}^(m4+2m3) y_{n2}^m5",
             (4, 1, 3), ("m3", "m4", "m5"), _sp_raise_xmid, _sp_case1),
    Identity("sp-collect-xmid", SP, "x_{n1+1}^a y_{n2}^b -> b! x_{n1+1}^(a+b)",
             (4, 1, 3), ("m4", "m5"), _sp_collect_xmid, _sp_case1),
]}


def identity_names(family: Optional[Family] = None) -> List[str]:
    return [s for s, i in IDENTITIES.items() if family is None or i.family is family]


def check_identity(slug: str, p: Optional[RepParams] = None, bound: int = 2) -> CheckResult:
    """Verify one identity for every exponent choice up to ``bound``."""
    if slug not in IDENTITIES:
        raise InvalidParams(f"unknown identity {slug!r}; known: {', '.join(IDENTITIES)}")
    ident = IDENTITIES[slug]
    p = p or ident.params()
    if p.family is not ident.family:
        raise SideConditionViolation(f"{slug} is an identity for {ident.family.value}")
    if p.single_block:
        raise SideConditionViolation("identities need the two-block realization")
    msg = ident.side(p)
    if msg:
        raise SideConditionViolation(f"{slug} {msg}")
    failures, checked, nonzero = [], 0, 0
    for e in ident.cases(bound):
        if ident.family is ODD and e["k"] > regime_bound(p):
            continue
        case = ident.build(p, e)
        if case is None:
            continue
        word, src, rhs = case
        lhs = apply_word(p, word, src)
        checked += 1
        if rhs:
            nonzero += 1
        if lhs != rhs:
            failures.append({"exponents": e, "lhs": str(lhs), "rhs": str(rhs)})
    detail = {"identity": slug, "summary": ident.summary, "bound": bound, "cases": checked,
              "nonzero": nonzero, "failures": failures[:5]}
    return CheckResult("identity", p.as_dict(), status(not failures), detail=detail)


def transition_identities(p: RepParams, suite: str = "all", bound: int = 2) -> List[CheckResult]:
    """Run one identity, or every identity of the family whose side condition holds."""
    if suite != "all":
        return [check_identity(suite, p, bound)]
    out = []
    for slug in identity_names(p.family):
        if IDENTITIES[slug].side(p) is None:
            out.append(check_identity(slug, p, bound))
    return out
