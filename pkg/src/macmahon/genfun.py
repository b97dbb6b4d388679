"""Plane-partition weights and the boxed generating-function identities.

Weights:

* ``f_factor(n, m)`` = prod_{i<n} (1 - q^i t^(m+1)) / (1 - q^(i+1) t^m)
* ``local_factor(pp, i, j)`` built from the diagonal partitions through
  ``(i, j)``, ``(i+1, j)`` and ``(i, j+1)``
* ``f_pi(pp)`` = product of local factors over the support

Identities checked coefficient by coefficient in ``s`` (boxed to at most
``r`` rows and ``c`` columns):

* ``theorem-a``: sum F_pi s^|pi| = prod_{i<=r, j<=c} (t s^(i+j-1); q)_inf / (s^(i+j-1); q)_inf,
  with (q, t) truncated by total degree
* ``theorem-b``: sum A_pi(t) s^|pi| = prod (1 - t s^(i+j-1)) / (1 - s^(i+j-1))
* ``shifted-macmahon``: sum over strict pi of 2^k(pi) x^tr(pi) s^|pi|
  = prod (1 + x s^(i+j-1)) / (1 - x s^(i+j-1))
* ``hl-q0-consistency``: both sides of ``theorem-a`` at q = 0 against ``theorem-b``
* ``corollary-2.1``: one-column case of ``theorem-a`` with F_lambda built from
  the part differences of lambda
* ``corollary-2.5``: sum over lambda with at most r parts of
  (1 - t)^(number of distinct parts) s^|lambda| = prod_{i<=r} (1 - t s^i) / (1 - s^i)
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    BinomialProduct,
    Poly,
    QTSeries,
    TruncatedSeries,
    bp_expand,
    pochhammer_ratio,
    ring_to_json,
    series_product,
)
from .components import a_poly, analyze
from .partitions import EnumerationCapError, Partition, PlanePartition, enumerate_pp, enumerate_spp

DEFAULT_MAX_WEIGHT = 12

IDENTITIES = (
    "theorem-a",
    "theorem-b",
    "shifted-macmahon",
    "hl-q0-consistency",
    "corollary-2.1",
    "corollary-2.5",
)


class CapExceeded(EnumerationCapError):
    pass


def _check_weight_cap(N: int, max_weight: int | None) -> None:
    limit = DEFAULT_MAX_WEIGHT if max_weight is None else max_weight
    if N > limit:
        raise CapExceeded(f"s-truncation {N} exceeds the enumeration weight cap {limit}")


def f_factor(n: int, m: int) -> BinomialProduct:
    if n < 0 or m < 0:
        raise ValueError(f"f(n, m) needs nonnegative arguments, got {(n, m)}")
    exps: dict[tuple[int, int], int] = {}
    for i in range(n):
        exps[(i, m + 1)] = exps.get((i, m + 1), 0) + 1
        exps[(i + 1, m)] = exps.get((i + 1, m), 0) - 1
    return BinomialProduct(exps)


class OutOfSupport(ValueError):
    pass


def local_factor(pp: PlanePartition, i: int, j: int) -> BinomialProduct:
    if not pp(i, j):
        raise OutOfSupport(f"cell {(i, j)} is not in the support")

    def lam(m):
        return pp(i + m - 1, j + m - 1)

    def mu(m):
        return pp(i + m, j + m - 1)

    def nu(m):
        return pp(i + m - 1, j + m)

    top = lam(1)
    length = 1
    while lam(length + 1):
        length += 1

    def term(m):
        return (f_factor(top - mu(m + 1), m) * f_factor(top - nu(m + 1), m)
                / (f_factor(top - lam(m + 1), m) * f_factor(top - lam(m + 2), m)))

    out = BinomialProduct()
    for m in range(length):
        out = out * term(m)
    # past the diagonal's length all four arguments equal lambda_1
    assert term(length).is_one()
    return out


def f_pi(pp: PlanePartition) -> BinomialProduct:
    out = BinomialProduct()
    for i, j in pp.cells():
        out = out * local_factor(pp, i, j)
    return out


def f_lambda_ordinary(lam: Partition) -> BinomialProduct:
    """prod_i prod_{j=1}^{d_i} (1 - t q^(j-1)) / (1 - q^j) with d_i = lambda_i - lambda_(i+1)."""
    out = BinomialProduct()
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i] - lam[i + 1] + 1):
            out = out * BinomialProduct({(j - 1, 1): 1, (j, 0): -1})
    return out


def one_column(lam: Partition) -> PlanePartition:
    return PlanePartition(tuple((p,) for p in lam.parts))


def column_parts(pp: PlanePartition) -> Partition:
    return Partition(tuple(row[0] for row in pp.rows))


def _sum_series(items, N: int, zero, weight_of: Callable) -> TruncatedSeries:
    acc = [zero] * (N + 1)
    for pp in items:
        acc[pp.weight] = acc[pp.weight] + weight_of(pp)
    return TruncatedSeries(tuple(acc))


def _ratio_factor(k: int, N: int, numer: Poly, denom: Poly) -> TruncatedSeries:
    """(1 - numer s^k) / (1 - denom s^k) over polynomials."""
    zero = numer * 0
    one = zero + 1
    top = TruncatedSeries.sparse(N, zero, {0: one, k: -numer})
    power = one
    geometric = {}
    for d in range(N // k + 1):
        geometric[k * d] = power
        power = power * denom
    return top * TruncatedSeries.sparse(N, zero, geometric)


def hl_box_sum(r: int, c: int, N: int, max_weight: int | None = None) -> TruncatedSeries:
    _check_weight_cap(N, max_weight)
    return _sum_series(enumerate_pp(r, c, N), N, Poly(), a_poly)


def hl_box_product(r: int, c: int, N: int) -> TruncatedSeries:
    t, one = Poly.monomial(1), Poly.const(1)
    factors = [_ratio_factor(i + j - 1, N, t, one) for i in range(1, r + 1) for j in range(1, c + 1)]
    return series_product(factors, N, one)


def macdonald_box_sum(r: int, c: int, N: int, M: int, max_weight: int | None = None) -> TruncatedSeries:
    _check_weight_cap(N, max_weight)
    return _sum_series(enumerate_pp(r, c, N), N, QTSeries(M), lambda pp: bp_expand(f_pi(pp), M))


def macdonald_box_product(r: int, c: int, N: int, M: int) -> TruncatedSeries:
    factors = [pochhammer_ratio(i + j - 1, N, M) for i in range(1, r + 1) for j in range(1, c + 1)]
    return series_product(factors, N, QTSeries.const(1, M))


def lhs_shifted(r: int, c: int, N: int, max_weight: int | None = None) -> TruncatedSeries:
    """sum over strict pi of 2^k(pi) x^tr(pi) s^|pi|, coefficients polynomials in x."""
    _check_weight_cap(N, max_weight)
    return _sum_series(enumerate_spp(r, c, N), N, Poly((), "x"),
                       lambda pp: Poly.monomial(pp.trace, 2 ** analyze(pp).k, "x"))


def rhs_shifted(r: int, c: int, N: int) -> TruncatedSeries:
    x, one = Poly.monomial(1, var="x"), Poly.const(1, "x")
    factors = [_ratio_factor(i + j - 1, N, -x, x) for i in range(1, r + 1) for j in range(1, c + 1)]
    return series_product(factors, N, one)


def lhs_one_column_macdonald(r: int, N: int, M: int, max_weight: int | None = None) -> TruncatedSeries:
    _check_weight_cap(N, max_weight)
    return _sum_series(enumerate_pp(r, 1, N), N, QTSeries(M),
                       lambda pp: bp_expand(f_lambda_ordinary(column_parts(pp)), M))


def rhs_one_column_macdonald(r: int, N: int, M: int) -> TruncatedSeries:
    return series_product([pochhammer_ratio(i, N, M) for i in range(1, r + 1)], N, QTSeries.const(1, M))


def lhs_one_column_hl(r: int, N: int, max_weight: int | None = None) -> TruncatedSeries:
    _check_weight_cap(N, max_weight)
    one_minus_t = Poly((1, -1))
    return _sum_series(enumerate_pp(r, 1, N), N, Poly(), lambda pp: one_minus_t ** analyze(pp).k)


def rhs_one_column_hl(r: int, N: int) -> TruncatedSeries:
    t, one = Poly.monomial(1), Poly.const(1)
    return series_product([_ratio_factor(i, N, t, one) for i in range(1, r + 1)], N, one)


@dataclass(frozen=True)
class DegreeStatus:
    degree: int
    match: bool
    lhs: object = None
    rhs: object = None
    side: str | None = None

    def to_json(self) -> dict:
        out = {"degree": self.degree, "match": self.match}
        if self.side is not None:
            out["side"] = self.side
        if not self.match:
            out["lhs"] = ring_to_json(self.lhs)
            out["rhs"] = ring_to_json(self.rhs)
        return out


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    rows: int
    cols: int
    smax: int
    qtmax: int | None
    degrees: tuple[DegreeStatus, ...]
    duration: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return all(d.match for d in self.degrees)

    def mismatches(self) -> list[DegreeStatus]:
        return [d for d in self.degrees if not d.match]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "rows": self.rows,
            "cols": self.cols,
            "smax": self.smax,
            "qtmax": self.qtmax,
            "ok": self.ok,
            "degrees": [d.to_json() for d in self.degrees],
        }
        if timing:
            out["duration_seconds"] = self.duration
        return out

    def summary(self) -> str:
        box = f"{self.rows}x{self.cols}"
        trunc = f"s^{self.smax}" + (f", (q,t)-degree {self.qtmax}" if self.qtmax is not None else "")
        bad = self.mismatches()
        status = "MATCH" if not bad else f"MISMATCH at degrees {sorted({d.degree for d in bad})}"
        return f"{self.identity} [{box} box, through {trunc}]: {status}"


def compare(lhs: TruncatedSeries, rhs: TruncatedSeries, side: str | None = None) -> list[DegreeStatus]:
    out = []
    for n in range(min(lhs.N, rhs.N) + 1):
        a, b = lhs.coeff(n), rhs.coeff(n)
        out.append(DegreeStatus(n, a == b, a, b, side))
    return out


def _truncate_t(series: TruncatedSeries, M: int) -> TruncatedSeries:
    return series.map(lambda p: p.truncate(M))


def verify(identity: str, rows: int = 1, cols: int = 1, smax: int = 0, qtmax: int | None = None,
           max_weight: int | None = None) -> VerificationReport:
    start = time.perf_counter()
    needs_qt = identity in ("theorem-a", "hl-q0-consistency", "corollary-2.1")
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; expected one of {', '.join(IDENTITIES)}")
    if rows < 1 or cols < 1 or smax < 0:
        raise ValueError("rows and cols must be >= 1 and smax >= 0")
    if needs_qt and (qtmax is None or qtmax < 0):
        raise ValueError(f"{identity} needs a (q,t)-truncation qtmax >= 0")
    if not needs_qt:
        qtmax = None

    if identity == "theorem-a":
        degrees = compare(macdonald_box_sum(rows, cols, smax, qtmax, max_weight), macdonald_box_product(rows, cols, smax, qtmax))
    elif identity == "theorem-b":
        degrees = compare(hl_box_sum(rows, cols, smax, max_weight), hl_box_product(rows, cols, smax))
    elif identity == "shifted-macmahon":
        degrees = compare(lhs_shifted(rows, cols, smax, max_weight), rhs_shifted(rows, cols, smax))
    elif identity == "hl-q0-consistency":
        at_q0 = lambda series: series.map(QTSeries.at_q0)  # noqa: E731
        degrees = (
            compare(at_q0(macdonald_box_sum(rows, cols, smax, qtmax, max_weight)),
                    _truncate_t(hl_box_sum(rows, cols, smax, max_weight), qtmax), "sum")
            + compare(at_q0(macdonald_box_product(rows, cols, smax, qtmax)),
                      _truncate_t(hl_box_product(rows, cols, smax), qtmax), "product")
        )
    elif identity == "corollary-2.1":
        cols = 1
        degrees = compare(lhs_one_column_macdonald(rows, smax, qtmax, max_weight),
                          rhs_one_column_macdonald(rows, smax, qtmax))
    else:
        cols = 1
        degrees = compare(lhs_one_column_hl(rows, smax, max_weight), rhs_one_column_hl(rows, smax))
    return VerificationReport(identity, rows, cols, smax, qtmax, tuple(degrees), time.perf_counter() - start)
