"""Exact coefficient rings and truncated power series.

Rings used as series coefficients: ``int``, :class:`Poly` (one variable,
dense integer coefficients) and :class:`QTSeries` (two variables ``q, t``
truncated by total degree).  :class:`TruncatedSeries` is a power series in
``s`` over any of them.  :class:`BinomialProduct` is a formal product of
binomials ``(1 - q^a t^b)^e`` and never gets cleared into a rational
function.

Everything is integer arithmetic; there is no floating point here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Sequence, Union


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _monomial(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


@dataclass(frozen=True)
class Poly:
    """Polynomial with integer coefficients; ``coeffs[i]`` multiplies ``var**i``.

    ``factors`` optionally records a factored form ``((i, n), ...)`` meaning
    ``prod (1 - var^i)^n``; it is display metadata and ignored by ``==``.
    """

    coeffs: tuple[int, ...] = ()
    var: str = field(default="t", compare=False)
    factors: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def const(cls, c: int, var: str = "t") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "t") -> "Poly":
        return cls((0,) * e + (c,), var)

    @classmethod
    def from_factors(cls, factors: Mapping[int, int] | Iterable[tuple[int, int]], var: str = "t") -> "Poly":
        """prod_i (1 - var^i)^(n_i), all n_i >= 0."""
        items = sorted(dict(factors).items())
        out = cls.const(1, var)
        for i, n in items:
            if n < 0:
                raise ValueError(f"negative exponent {n} for (1-{var}^{i})")
            base = cls((1,) + (0,) * (i - 1) + (-1,), var)
            for _ in range(n):
                out = out * base
        return cls(out.coeffs, var, tuple((i, n) for i, n in items if n))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: Union[int, Fraction]):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, d: int) -> "Poly":
        return Poly(self.coeffs[: d + 1], self.var)

    def factored(self) -> str:
        if self.factors is None:
            return str(self)
        if not self.factors:
            return "1"
        return " ".join(f"(1-{_monomial(self.var, i)})^{n}" for i, n in self.factors)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = _monomial(self.var, i)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {sign} {body}" for sign, body in terms[1:])

    __repr__ = __str__


@dataclass(frozen=True)
class QTSeries:
    """Power series in q and t truncated to total degree ``<= M``.

    ``terms`` is a sorted tuple of ``((a, b), c)`` with ``c != 0``.
    """

    M: int
    terms: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        if self.M < 0:
            raise ValueError("truncation order must be >= 0")
        if isinstance(self.terms, Mapping):
            items = self.terms.items()
        else:
            items = self.terms
        clean = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent {(a, b)}")
            if c and a + b <= self.M:
                clean[(a, b)] = clean.get((a, b), 0) + c
        object.__setattr__(self, "terms", tuple(sorted((k, v) for k, v in clean.items() if v)))

    @classmethod
    def const(cls, c: int, M: int) -> "QTSeries":
        return cls(M, {(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, M: int, c: int = 1) -> "QTSeries":
        return cls(M, {(a, b): c})

    @property
    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def coeff(self, a: int, b: int) -> int:
        return self.as_dict.get((a, b), 0)

    def _coerce(self, other):
        if isinstance(other, QTSeries):
            return other
        if isinstance(other, int):
            return QTSeries.const(other, self.M)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = self.as_dict
        for k, v in other.terms:
            acc[k] = acc.get(k, 0) + v
        return QTSeries(min(self.M, other.M), acc)

    __radd__ = __add__

    def __neg__(self):
        return QTSeries(self.M, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        M = min(self.M, other.M)
        acc: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in other.terms:
                a, b = a1 + a2, b1 + b2
                if a + b <= M:
                    acc[(a, b)] = acc.get((a, b), 0) + c1 * c2
        return QTSeries(M, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTSeries.const(other, self.M)
        if not isinstance(other, QTSeries):
            return NotImplemented
        return self.M == other.M and self.terms == other.terms

    def __hash__(self):
        return hash((self.M, self.terms))

    def at_q0(self) -> Poly:
        """Keep the terms free of q; the result is exact through t-degree M."""
        d = self.as_dict
        return Poly(tuple(d.get((0, b), 0) for b in range(self.M + 1)), "t")

    def at_t_equals_q(self) -> Poly:
        out = [0] * (self.M + 1)
        for (a, b), c in self.terms:
            out[a + b] += c
        return Poly(tuple(out), "q")

    def to_json(self) -> list[list[int]]:
        return [[a, b, c] for (a, b), c in self.terms]

    def __str__(self):
        if not self.terms:
            return f"0 + O({self.M + 1})"
        parts = []
        for (a, b), c in sorted(self.terms, key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = "*".join(m for m in (_monomial("q", a), _monomial("t", b)) if m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


Ring = Union[int, Poly, QTSeries]


def ring_to_json(x: Ring):
    return x if isinstance(x, int) else x.to_json()


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in ``s`` known exactly through degree ``N = len(coeffs) - 1``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @classmethod
    def sparse(cls, N: int, zero: Ring, terms: Mapping[int, Ring]) -> "TruncatedSeries":
        out = [zero] * (N + 1)
        for n, c in terms.items():
            if 0 <= n <= N:
                out[n] = out[n] + c
        return cls(tuple(out))

    @classmethod
    def one(cls, N: int, one: Ring) -> "TruncatedSeries":
        zero = one * 0
        return cls((one,) + (zero,) * N)

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero(self) -> Ring:
        return self.coeffs[0] * 0

    def coeff(self, n: int) -> Ring:
        if n < 0:
            return self.zero
        if n > self.N:
            raise IndexError(f"coefficient s^{n} is beyond the truncation order {self.N}")
        return self.coeffs[n]

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.N, other.N)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])))

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.N, other.N)
            zero = self.zero
            out = []
            for k in range(n + 1):
                acc = zero
                for i in range(k + 1):
                    acc = acc + self.coeffs[i] * other.coeffs[k - i]
                out.append(acc)
            return TruncatedSeries(tuple(out))
        return TruncatedSeries(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def truncate(self, N: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: N + 1])

    def map(self, fn: Callable[[Ring], Ring]) -> "TruncatedSeries":
        return TruncatedSeries(tuple(fn(c) for c in self.coeffs))

    def to_json(self, var: str = "s") -> dict:
        return {"var": var, "trunc": self.N, "coeffs": [ring_to_json(c) for c in self.coeffs]}

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == c * 0:
                continue
            parts.append(f"({c})" if n == 0 else f"({c})*s" + (f"^{n}" if n > 1 else ""))
        return (" + ".join(parts) or "0") + f" + O(s^{self.N + 1})"


def series_product(factors: Sequence[TruncatedSeries], N: int, one: Ring) -> TruncatedSeries:
    out = TruncatedSeries.one(N, one)
    for f in factors:
        out = out * f
    return out


class NotPolynomialAtQ0(ArithmeticError):
    pass


@dataclass(frozen=True)
class BinomialProduct:
    """Formal product of ``(1 - q^a t^b)^e`` over exponent pairs ``(a, b) != (0, 0)``."""

    exps: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        items = self.exps.items() if isinstance(self.exps, Mapping) else self.exps
        acc: dict[tuple[int, int], int] = {}
        for (a, b), e in items:
            if (a, b) == (0, 0):
                raise ValueError("(1 - q^0 t^0) is zero and cannot be a factor")
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent pair {(a, b)}")
            acc[(a, b)] = acc.get((a, b), 0) + e
        object.__setattr__(self, "exps", tuple(sorted((k, e) for k, e in acc.items() if e)))

    @classmethod
    def binomial(cls, a: int, b: int, e: int = 1) -> "BinomialProduct":
        return cls({(a, b): e})

    @property
    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.exps)

    def __mul__(self, other: "BinomialProduct") -> "BinomialProduct":
        if not isinstance(other, BinomialProduct):
            return NotImplemented
        return BinomialProduct(self.exps + other.exps)

    def inverse(self) -> "BinomialProduct":
        return BinomialProduct(tuple((k, -e) for k, e in self.exps))

    def __truediv__(self, other: "BinomialProduct") -> "BinomialProduct":
        if not isinstance(other, BinomialProduct):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "BinomialProduct":
        return BinomialProduct(tuple((k, e * n) for k, e in self.exps))

    def is_one(self) -> bool:
        return not self.exps

    def __str__(self):
        if not self.exps:
            return "1"
        out = []
        for (a, b), e in self.exps:
            mono = "*".join(m for m in (_monomial("q", a), _monomial("t", b)) if m)
            out.append(f"(1-{mono})^{e}")
        return " ".join(out)


def bp_mul(x: BinomialProduct, y: BinomialProduct) -> BinomialProduct:
    return x * y


def bp_eval_q0(x: BinomialProduct) -> Poly:
    """Set q = 0: factors with a >= 1 become 1; the rest must form a polynomial in t."""
    kept = {}
    for (a, b), e in x.exps:
        if a == 0:
            if e < 0:
                raise NotPolynomialAtQ0(f"(1-t^{b}) has exponent {e} after setting q=0")
            kept[b] = e
    return Poly.from_factors(kept)


def binomial_power(a: int, b: int, e: int, M: int) -> QTSeries:
    """(1 - q^a t^b)^e truncated at total degree M; negative e uses the geometric series."""
    g = a + b
    terms = {}
    k = 0
    while k * g <= M:
        c = comb(e, k) * (-1) ** k if e >= 0 else comb(-e + k - 1, k)
        if c:
            terms[(k * a, k * b)] = c
        k += 1
        if e >= 0 and k > e:
            break
    return QTSeries(M, terms)


def bp_expand(x: BinomialProduct, M: int) -> QTSeries:
    out = QTSeries.const(1, M)
    for (a, b), e in x.exps:
        out = out * binomial_power(a, b, e, M)
    return out


def pochhammer_ratio(k: int, N: int, M: int) -> TruncatedSeries:
    """(t s^k; q)_inf / (s^k; q)_inf through s^N with (q, t) truncated at total degree M.

    Factors with q-exponent above M are 1 modulo the truncation, so the
    infinite product is finite here.
    """
    if k < 1 or N < 0 or M < 0:
        raise ValueError(f"need k >= 1 and N, M >= 0, got {(k, N, M)}")
    one = QTSeries.const(1, M)
    zero = one * 0
    out = TruncatedSeries.one(N, one)
    for n in range(M + 1):
        numer = TruncatedSeries.sparse(N, zero, {0: one, k: -QTSeries.monomial(n, 1, M)})
        base = QTSeries.monomial(n, 0, M)
        denom_inv = TruncatedSeries.sparse(N, zero, {k * d: _qt_pow(base, d, M) for d in range(N // k + 1)})
        out = out * numer * denom_inv
    return out


def _qt_pow(x: QTSeries, d: int, M: int) -> QTSeries:
    out = QTSeries.const(1, M)
    for _ in range(d):
        out = out * x
    return out
