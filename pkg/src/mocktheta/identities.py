"""Named q-series identities, each as two independently written series builders.

Every builder takes a truncation order ``N`` and returns a
:class:`~mocktheta.qseries.LaurentSeries` known exactly through ``q^N``.
Builders are plain module-level functions so they can be shipped to worker
processes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from .qseries import (LaurentSeries, Monomial, divide_one_minus, poch, poch_inf,
                      sum_series)

Builder = Callable[[int], LaurentSeries]


def m(coeff: int = 1, y: int = 0, z: int = 0, q: int = 0) -> Monomial:
    return Monomial(coeff, y, z, q)


def _factors(a: Monomial, step: int, n: int | None, M: int) -> list[Monomial]:
    if n is None:
        if a.q > M:
            return []
        n = (M - a.q) // step + 1
    return [a * m(q=step * k) for k in range(n)]


def frac(N: int, numer: Monomial, top=(), bottom=()) -> LaurentSeries:
    """numer * prod(top Pochhammers) / prod(bottom Pochhammers), to order N.

    ``top`` and ``bottom`` hold ``(a, step, n)`` triples; ``n=None`` means an
    infinite product.
    """
    M = N - numer.q
    if M < 0:
        return LaurentSeries.zero(N)
    f = LaurentSeries.one(M)
    for a, step, n in top:
        f = f * (poch(a, step, n, M) if n is not None else poch_inf(a, step, M))
    for a, step, n in bottom:
        for factor in _factors(a, step, n, M):
            f = divide_one_minus(f, factor)
    return f.shift(numer)


def series(N: int, term: Callable[[int], LaurentSeries], bound: Callable[[int], int]) -> LaurentSeries:
    return sum_series(term, bound, N)


Qm = m(q=1)
ZQ = m(z=1, q=1)
YQ = m(y=1, q=1)


def _lin(n):
    return n


def _tri(n):
    return n * n + n


def _tri2(n):
    return 2 * n * n + 2 * n


# -- omega(z;q), nu(z;q), nu_1(z;q) -------------------------------------------------

def omega_z_def(N):
    """sum z^n q^(2n^2+2n) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri2(n)), bottom=[(Qm, 2, n + 1), (ZQ, 2, n + 1)]), _tri2)


def omega_z_sum(N):
    """sum z^n q^n / (q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=n), bottom=[(Qm, 2, n + 1)]), _lin)


def nu_z_def(N):
    """sum q^(n^2+n) / (-zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(q=_tri(n)), bottom=[(m(-1, z=1, q=1), 2, n + 1)]), _tri)


def nu_z_sum(N):
    """sum (q/z;q^2)_n (-zq)^n"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=n, q=n), top=[(m(z=-1, q=1), 2, n)]), _lin)


def nu1_def(N):
    """sum z^n q^(n^2+n) / (-q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri(n)), bottom=[(m(-1, q=1), 2, n + 1)]), _tri)


def nu1_sum(N):
    """sum (zq;q^2)_n (-q)^n"""
    return series(N, lambda n: frac(N, m((-1) ** n, q=n), top=[(ZQ, 2, n)]), _lin)


# -- the univariate base cases ----------------------------------------------------------

def p_omega_lhs(N):
    """sum_{n>=1} q^n / ((q^n;q)_{n+1} (q^(2n+2);q^2)_inf)"""
    def term(k):
        n = k + 1
        return frac(N, m(q=n), bottom=[(m(q=n), 1, n + 1), (m(q=2 * n + 2), 2, None)])
    return series(N, term, lambda k: k + 1)


def q_omega_rhs(N):
    """sum q^(2n^2+2n+1) / (q;q^2)_{n+1}^2"""
    return series(N, lambda n: frac(N, m(q=_tri2(n) + 1), bottom=[(Qm, 2, n + 1), (Qm, 2, n + 1)]),
                  lambda n: _tri2(n) + 1)


def p_nu_lhs(N):
    """sum q^n (-q^(n+1);q)_n (-q^(2n+2);q^2)_inf"""
    return series(N, lambda n: frac(N, m(q=n), top=[(m(-1, q=n + 1), 1, n), (m(-1, q=2 * n + 2), 2, None)]),
                  _lin)


def nu_base_rhs(N):
    """sum q^(n^2+n) / (q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(q=_tri(n)), bottom=[(Qm, 2, n + 1)]), _tri)


# -- the bivariate identities ---------------------------------------------------------

def thm1_omega_lhs(N):
    """sum_{n>=1} q^n / ((zq^n;q)_{n+1} (zq^(2n+2);q^2)_inf)"""
    def term(k):
        n = k + 1
        return frac(N, m(q=n), bottom=[(m(z=1, q=n), 1, n + 1), (m(z=1, q=2 * n + 2), 2, None)])
    return series(N, term, lambda k: k + 1)


def thm1_omega_rhs(N):
    """sum z^n q^(2n^2+2n+1) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri2(n) + 1), bottom=[(Qm, 2, n + 1), (ZQ, 2, n + 1)]),
                  lambda n: _tri2(n) + 1)


def thm1_nu_lhs(N):
    """sum q^n (-zq^(n+1);q)_n (-zq^(2n+2);q^2)_inf"""
    return series(N, lambda n: frac(N, m(q=n), top=[(m(-1, z=1, q=n + 1), 1, n),
                                                      (m(-1, z=1, q=2 * n + 2), 2, None)]), _lin)


def thm1_nu_rhs(N):
    """sum z^n q^(n^2+n) / (q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri(n)), bottom=[(Qm, 2, n + 1)]), _tri)


def shifted_omega_lhs(N):
    """sum q^n / ((zq^(n+1);q)_{n+2} (zq^(2n+4);q^2)_inf)"""
    return series(N, lambda n: frac(N, m(q=n), bottom=[(m(z=1, q=n + 1), 1, n + 2),
                                                         (m(z=1, q=2 * n + 4), 2, None)]), _lin)


def shifted_omega_rhs(N):
    """sum z^n q^(2n^2+2n) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri2(n)), bottom=[(Qm, 2, n + 1), (ZQ, 2, n + 1)]), _tri2)


# -- trivariate nu(y,z;q) and omega(y,z;q) ---------------------------------------------

def nu_yz_def(N):
    """sum y^n z^n q^(n^2+n) / (yq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(y=n, z=n, q=_tri(n)), bottom=[(YQ, 2, n + 1)]), _tri)


def nu_yz_newnu(N):
    """sum (-zq;q^2)_n (yq)^n"""
    return series(N, lambda n: frac(N, m(y=n, q=n), top=[(m(-1, z=1, q=1), 2, n)]), _lin)


def omega_yz_def(N):
    """sum y^n z^n q^(2n^2+2n) / ((yq;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(y=n, z=n, q=_tri2(n)), bottom=[(YQ, 2, n + 1), (ZQ, 2, n + 1)]),
                  _tri2)


def omega_yz_oprow(N):
    """sum [y^m q^(m^2+m) / (yq;q^2)_{m+1}] * [z^m q^(m^2+m) / (zq;q^2)_{m+1}]"""
    def term(k):
        left = frac(N, m(y=k, q=_tri(k)), bottom=[(YQ, 2, k + 1)])
        right = frac(N, m(z=k, q=_tri(k)), bottom=[(ZQ, 2, k + 1)])
        return (left * right).truncate(N)
    return series(N, term, _tri2)


def omega_yz_by_y(N):
    """sum y^n q^n / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(y=n, q=n), bottom=[(ZQ, 2, n + 1)]), _lin)


def omega_yz_by_z(N):
    """sum z^n q^n / (yq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=n), bottom=[(YQ, 2, n + 1)]), _lin)


# -- specializations of nu(y,z;q) ----------------------------------------------------

def rightofnu_lhs(N):
    """sum z^n q^(n^2+n) / (q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri(n)), bottom=[(Qm, 2, n + 1)]), _tri)


def rightofnu_rhs(N):
    """sum (-zq;q^2)_n q^n"""
    return series(N, lambda n: frac(N, m(q=n), top=[(m(-1, z=1, q=1), 2, n)]), _lin)


def dpcolumn_lhs(N):
    """sum z^n q^(n^2+n) / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri(n)), bottom=[(ZQ, 2, n + 1)]), _tri)


def dpcolumn_rhs(N):
    """sum (-q;q^2)_n (zq)^n"""
    return series(N, lambda n: frac(N, m(z=n, q=n), top=[(m(-1, q=1), 2, n)]), _lin)


def dpcolumn_row_lhs(N):
    """sum q^(n^2+n) / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(q=_tri(n)), bottom=[(ZQ, 2, n + 1)]), _tri)


def dpcolumn_row_rhs(N):
    """sum (-q/z;q^2)_n (zq)^n"""
    return series(N, lambda n: frac(N, m(z=n, q=n), top=[(m(-1, z=-1, q=1), 2, n)]), _lin)


def dpcolumn_plus_row_lhs(N):
    """sum z^(2n) q^(n^2+n) / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=2 * n, q=_tri(n)), bottom=[(ZQ, 2, n + 1)]), _tri)


def dpcolumn_plus_row_rhs(N):
    """sum (-zq;q^2)_n (zq)^n"""
    return series(N, lambda n: frac(N, m(z=n, q=n), top=[(m(-1, z=1, q=1), 2, n)]), _lin)


def dpcol_minus_lhs(N):
    """sum z^n q^(n^2+n) / (-zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri(n)), bottom=[(m(-1, z=1, q=1), 2, n + 1)]), _tri)


def dpcol_minus_rhs(N):
    """sum (q;q^2)_n (-zq)^n"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=n, q=n), top=[(Qm, 2, n)]), _lin)


def dpcol_plus_row_minus_lhs(N):
    """sum z^(2n) q^(n^2+n) / (-zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=2 * n, q=_tri(n)), bottom=[(m(-1, z=1, q=1), 2, n + 1)]), _tri)


def dpcol_plus_row_minus_rhs(N):
    """sum (zq;q^2)_n (-zq)^n"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=n, q=n), top=[(ZQ, 2, n)]), _lin)


# -- specializations of omega(y,z;q) -------------------------------------------------

def opcolumn_lhs(N):
    """sum z^n q^(2n^2+2n) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri2(n)), bottom=[(Qm, 2, n + 1), (ZQ, 2, n + 1)]), _tri2)


def opcolumn_mid(N):
    """sum q^n / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(q=n), bottom=[(ZQ, 2, n + 1)]), _lin)


def opcolumn_rhs(N):
    """sum z^n q^n / (q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=n), bottom=[(Qm, 2, n + 1)]), _lin)


def opcolumn_row_lhs(N):
    """sum q^(2n^2+2n) / ((q/z;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(q=_tri2(n)), bottom=[(m(z=-1, q=1), 2, n + 1), (ZQ, 2, n + 1)]),
                  _tri2)


def opcolumn_row_mid(N):
    """sum z^(-n) q^n / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=-n, q=n), bottom=[(ZQ, 2, n + 1)]), _lin)


def opcolumn_row_rhs(N):
    """sum z^n q^n / (q/z;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=n), bottom=[(m(z=-1, q=1), 2, n + 1)]), _lin)


def opcolumn_plus_row_lhs(N):
    """sum (z^n q^(n^2+n) / (zq;q^2)_{n+1})^2"""
    def term(n):
        t = frac(N, m(z=n, q=_tri(n)), bottom=[(ZQ, 2, n + 1)])
        return (t * t).truncate(N)
    return series(N, term, _tri2)


def opcolumn_plus_row_rhs(N):
    """sum z^n q^n / (zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m(z=n, q=n), bottom=[(ZQ, 2, n + 1)]), _lin)


# -- the five sign-weighted omega identities -----------------------------------------------

def signed_rows_cols_lhs(N):
    """sum z^n q^(2n^2+2n) / ((-q;q^2)_{n+1} (-zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(z=n, q=_tri2(n)),
                                    bottom=[(m(-1, q=1), 2, n + 1), (m(-1, z=1, q=1), 2, n + 1)]), _tri2)


def signed_rows_rhs(N):
    """sum (-q)^n / (-zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m((-1) ** n, q=n), bottom=[(m(-1, z=1, q=1), 2, n + 1)]), _lin)


def signed_cols_rhs(N):
    """sum z^n (-q)^n / (-q;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=n, q=n), bottom=[(m(-1, q=1), 2, n + 1)]), _lin)


def signed_diff_lhs(N):
    """sum q^(2n^2+2n) / ((-q/z;q^2)_{n+1} (-zq;q^2)_{n+1})"""
    return series(N, lambda n: frac(N, m(q=_tri2(n)),
                                    bottom=[(m(-1, z=-1, q=1), 2, n + 1), (m(-1, z=1, q=1), 2, n + 1)]), _tri2)


def signed_rows_minus_cols_rhs(N):
    """sum z^(-n) (-q)^n / (-zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=-n, q=n), bottom=[(m(-1, z=1, q=1), 2, n + 1)]), _lin)


def signed_cols_minus_rows_rhs(N):
    """sum z^n (-q)^n / (-q/z;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=n, q=n), bottom=[(m(-1, z=-1, q=1), 2, n + 1)]), _lin)


def signed_sharp_lhs(N):
    """sum (z^n q^(n^2+n) / (-zq;q^2)_{n+1})^2"""
    def term(n):
        t = frac(N, m(z=n, q=_tri(n)), bottom=[(m(-1, z=1, q=1), 2, n + 1)])
        return (t * t).truncate(N)
    return series(N, term, _tri2)


def signed_sharp_rhs(N):
    """sum z^n (-q)^n / (-zq;q^2)_{n+1}"""
    return series(N, lambda n: frac(N, m((-1) ** n, z=n, q=n), bottom=[(m(-1, z=1, q=1), 2, n + 1)]), _lin)


# -- the barred functions, with squared arguments -------------------------------------------

def nu_bar(alpha_sq: Monomial, z_sq: Monomial, N: int) -> LaurentSeries:
    """sum q^(n(n-1)) z^(2n) / (-alpha^2 z^2 / q^3; q^2)_{n+1}"""
    a = -(alpha_sq * z_sq * m(q=-3))

    def numer(n):
        return m(q=n * (n - 1)) * z_sq ** n

    return series(N, lambda n: frac(N, numer(n), bottom=[(a, 2, n + 1)]), lambda n: numer(n).q)


def omega_bar(alpha_sq: Monomial, z_sq: Monomial, N: int) -> LaurentSeries:
    """sum q^(2(n-1)^2-6) alpha^(2n) z^(4(n+1)) / ((z^2/q;q^2)_{n+1} (alpha^2 z^2/q^3;q^2)_{n+1})"""
    a1 = z_sq * m(q=-1)
    a2 = alpha_sq * z_sq * m(q=-3)

    def numer(n):
        return m(q=2 * (n - 1) ** 2 - 6) * alpha_sq ** n * z_sq ** (2 * (n + 1))

    return series(N, lambda n: frac(N, numer(n), bottom=[(a1, 2, n + 1), (a2, 2, n + 1)]),
                  lambda n: numer(n).q)


def nu_bar_substituted(N):
    """nu_bar(i q / sqrt(z), sqrt(yz) q; q): alpha^2 = -q^2/z, z^2 = y z q^2"""
    return nu_bar(m(-1, z=-1, q=2), m(y=1, z=1, q=2), N)


def omega_bar_substituted(N):
    """z^-2 omega_bar(sqrt(y) q / sqrt(z), sqrt(z) q; q): alpha^2 = y q^2 / z, z^2 = z q^2"""
    return omega_bar(m(y=1, z=-1, q=2), m(z=1, q=2), N).shift(m(z=-2))


def nu3_tail_full(N):
    """sum_{n>=0} (-zq;q^2)_n (yq)^n - 1"""
    return nu_yz_newnu(N) - 1


def nu3_tail_from_one(N):
    """sum_{n>=1} (-zq;q^2)_n (yq)^n"""
    return series(N, lambda k: frac(N, m(y=k + 1, q=k + 1), top=[(m(-1, z=1, q=1), 2, k + 1)]),
                  lambda k: k + 1)


# -- registry ------------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityEntry:
    name: str
    lhs: Builder
    rhs: Builder
    anchor: str
    variables: frozenset = field(default_factory=frozenset)


@dataclass(frozen=True)
class VerificationReport:
    name: str
    order: int
    passed: bool
    first_discrepancy: tuple | None = None  # (q, y, z, lhs coeff, rhs coeff)

    def to_json(self) -> dict:
        out = {"name": self.name, "order": self.order, "pass": self.passed}
        if self.first_discrepancy is not None:
            q, y, z, lc, rc = self.first_discrepancy
            out["discrepancy"] = {"q": q, "y": y, "z": z, "lhs": lc, "rhs": rc}
        return out

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  (order {self.order})"
        if self.first_discrepancy is not None:
            q, y, z, lc, rc = self.first_discrepancy
            line += f"  first mismatch at q^{q} y^{y} z^{z}: lhs={lc} rhs={rc}"
        return line


_SIDES = [
    ("andrews2_1", omega_z_def, omega_z_sum, "z"),
    ("andrews2_2", nu_z_def, nu_z_sum, "z"),
    ("eqv1", nu1_def, nu1_sum, "z"),
    ("omega", p_omega_lhs, q_omega_rhs, ""),
    ("nu", p_nu_lhs, nu_base_rhs, ""),
    ("thm1_omega", thm1_omega_lhs, thm1_omega_rhs, "z"),
    ("thm1_nu", thm1_nu_lhs, thm1_nu_rhs, "z"),
    ("thm1_omega_shifted", shifted_omega_lhs, shifted_omega_rhs, "z"),
    ("thm3_newnu", nu_yz_def, nu_yz_newnu, "yz"),
    ("thm4_newomega_y", omega_yz_def, omega_yz_by_y, "yz"),
    ("thm4_newomega_z", omega_yz_def, omega_yz_by_z, "yz"),
    ("thm4_oprow", omega_yz_oprow, omega_yz_by_y, "yz"),
    ("cor_nu_rightofnu", rightofnu_lhs, rightofnu_rhs, "z"),
    ("cor_nu_dpcolumn", dpcolumn_lhs, dpcolumn_rhs, "z"),
    ("cor_nu_dpcolumn_row", dpcolumn_row_lhs, dpcolumn_row_rhs, "z"),
    ("cor_nu_dpcolumn_plus_row", dpcolumn_plus_row_lhs, dpcolumn_plus_row_rhs, "z"),
    ("comtodpcol_minus", dpcol_minus_lhs, dpcol_minus_rhs, "z"),
    ("comtodpcol_plus_row_minus", dpcol_plus_row_minus_lhs, dpcol_plus_row_minus_rhs, "z"),
    ("cor_omega_opcolumn", opcolumn_lhs, opcolumn_mid, "z"),
    ("cor_omega_opcolumn_conj", opcolumn_lhs, opcolumn_rhs, "z"),
    ("cor_omega_opcolumn_row", opcolumn_row_lhs, opcolumn_row_mid, "z"),
    ("cor_omega_opcolumn_row_conj", opcolumn_row_lhs, opcolumn_row_rhs, "z"),
    ("cor_omega_opcolumn_plus_row", opcolumn_plus_row_lhs, opcolumn_plus_row_rhs, "z"),
    ("signed_omega_rows", signed_rows_cols_lhs, signed_rows_rhs, "z"),
    ("signed_omega_cols", signed_rows_cols_lhs, signed_cols_rhs, "z"),
    ("signed_omega_rows_minus_cols", signed_diff_lhs, signed_rows_minus_cols_rhs, "z"),
    ("signed_omega_cols_minus_rows", signed_diff_lhs, signed_cols_minus_rows_rhs, "z"),
    ("signed_omega_sharp", signed_sharp_lhs, signed_sharp_rhs, "z"),
    ("nutobarnu", nu_yz_def, nu_bar_substituted, "yz"),
    ("omegatobaromega", omega_yz_def, omega_bar_substituted, "yz"),
    ("nu3_reduced", nu3_tail_full, nu3_tail_from_one, "yz"),
]


def _manifest() -> dict:
    text = resources.files("mocktheta").joinpath("data/identities.json").read_text(encoding="utf-8")
    return json.loads(text)


def registry() -> list[IdentityEntry]:
    anchors = _manifest()
    return [IdentityEntry(name, lhs, rhs, anchors[name], frozenset(v)) for name, lhs, rhs, v in _SIDES]


def lookup(name: str) -> IdentityEntry | None:
    for entry in registry():
        if entry.name == name:
            return entry
    return None


def verify(entry: IdentityEntry, N: int) -> VerificationReport:
    if N < 0:
        raise ValueError("order must be nonnegative")
    lhs = entry.lhs(N)
    rhs = entry.rhs(N)
    diff = lhs.first_difference(rhs)
    return VerificationReport(entry.name, N, diff is None, diff)


def verify_by_name(name: str, N: int) -> VerificationReport:
    entry = lookup(name)
    if entry is None:
        raise KeyError(name)
    return verify(entry, N)


def verify_many(names: list[str], N: int, jobs: int = 1) -> list[VerificationReport]:
    """Verify several identities; results come back in the order of ``names``."""
    if jobs <= 1:
        return [verify_by_name(name, N) for name in names]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_by_name, names, [N] * len(names)))


# Which closed forms each enumerated family (and weight) must reproduce.
FAMILY_SERIES: dict[tuple[str, str], tuple[Builder, ...]] = {
    ("B_nu", "plain"): (nu_yz_def, nu_yz_newnu),
    ("B_omega", "plain"): (omega_yz_def, omega_yz_oprow, omega_yz_by_y),
    ("B1_nu", "plain"): (rightofnu_lhs, rightofnu_rhs, thm1_nu_rhs),
    ("B1_nu", "signed_sharp"): (nu1_def, nu1_sum),
    ("B2_nu", "plain"): (dpcolumn_lhs, dpcolumn_rhs),
    ("B2_nu", "signed_sharp"): (dpcol_minus_lhs, dpcol_minus_rhs),
    ("B3_nu", "plain"): (dpcolumn_row_lhs, dpcolumn_row_rhs),
    ("B3_nu", "signed_sharp"): (nu_z_def, nu_z_sum),
    ("B4_nu", "plain"): (dpcolumn_plus_row_lhs, dpcolumn_plus_row_rhs),
    ("B4_nu", "signed_sharp"): (dpcol_plus_row_minus_lhs, dpcol_plus_row_minus_rhs),
    ("B1_omega", "plain"): (opcolumn_lhs, opcolumn_mid, shifted_omega_rhs),
    ("B1_omega", "signed_sharp"): (signed_rows_cols_lhs, signed_rows_rhs),
    ("B1p_omega", "plain"): (opcolumn_lhs, opcolumn_rhs, omega_z_sum),
    ("B1p_omega", "signed_sharp"): (signed_rows_cols_lhs, signed_cols_rhs),
    ("B2_omega", "plain"): (opcolumn_row_lhs, opcolumn_row_mid),
    ("B2_omega", "signed_sharp"): (signed_diff_lhs, signed_rows_minus_cols_rhs),
    ("B2p_omega", "plain"): (opcolumn_row_lhs, opcolumn_row_rhs),
    ("B2p_omega", "signed_sharp"): (signed_diff_lhs, signed_cols_minus_rows_rhs),
    ("B3_omega", "plain"): (opcolumn_plus_row_lhs, opcolumn_plus_row_rhs),
    ("B3_omega", "signed_sharp"): (signed_sharp_lhs, signed_sharp_rhs),
    ("P_omega", "plain"): (shifted_omega_lhs, shifted_omega_rhs),
    ("P_nu", "plain"): (thm1_nu_lhs, thm1_nu_rhs),
}
