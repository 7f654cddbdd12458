"""Exact truncated power series in q over the integers.

A :class:`TruncatedSeries` holds the coefficients of q^0 .. q^(order-1).
Everything at or beyond ``order`` is unknown, so binary operations
truncate to the smaller of the two orders and nothing is ever padded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence


class SeriesError(ValueError):
    """Raised for malformed series or operations outside their domain."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise SeriesError("a truncated series needs order >= 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order})"

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, negate(_coerce(other, self.order)))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), negate(self))

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e):
        return power(self, e)

    def truncate(self, order: int) -> TruncatedSeries:
        if order < 1 or order > self.order:
            raise SeriesError(f"cannot truncate order {self.order} series to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def nonzero(self) -> list[tuple[int, int]]:
        """(index, coefficient) pairs for the nonzero coefficients."""
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def to_json(self) -> str:
        # decimal strings: coefficients overflow doubles and int64
        return json.dumps({"order": self.order, "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        data = json.loads(text)
        return make_series([int(c) for c in data["coeffs"]], int(data["order"]))


def _coerce(x, order):
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, int):
        return constant(x, order)
    raise TypeError(f"cannot combine TruncatedSeries with {type(x).__name__}")


def make_series(coeffs: Iterable[int], order: int) -> TruncatedSeries:
    coeffs = tuple(int(c) for c in coeffs)
    if order < 1:
        raise SeriesError(f"order must be >= 1, got {order}")
    if len(coeffs) != order:
        raise SeriesError(f"expected {order} coefficients, got {len(coeffs)}")
    return TruncatedSeries(coeffs)


def constant(c: int, order: int) -> TruncatedSeries:
    return TruncatedSeries((c,) + (0,) * (order - 1))


def zero(order: int) -> TruncatedSeries:
    return constant(0, order)


def monomial(n: int, order: int, c: int = 1) -> TruncatedSeries:
    out = [0] * order
    if n < order:
        out[n] = c
    return TruncatedSeries(tuple(out))


def from_support(terms: Iterable[tuple[int, int]], order: int) -> TruncatedSeries:
    """Build a series from (exponent, coefficient) pairs; exponents >= order are dropped."""
    out = [0] * order
    for n, c in terms:
        if 0 <= n < order:
            out[n] += c
    return TruncatedSeries(tuple(out))


# ring operations

def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def negate(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(-x for x in a.coeffs))


def scale(a: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(c * x for x in a.coeffs))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order.

    Loops over the nonzero terms of the sparser factor, so products with
    theta series or dilated eta products cost far less than N^2.
    """
    n = min(a.order, b.order)
    sa = [(i, c) for i, c in enumerate(a.coeffs[:n]) if c]
    sb = [(i, c) for i, c in enumerate(b.coeffs[:n]) if c]
    if len(sa) > len(sb):
        sa, sb = sb, sa
    dense = [0] * n
    for i, c in sb:
        dense[i] = c
    out = [0] * n
    for i, c in sa:
        width = n - i
        if c == 1:
            out[i:] = [x + y for x, y in zip(out[i:], dense[:width])]
        elif c == -1:
            out[i:] = [x - y for x, y in zip(out[i:], dense[:width])]
        else:
            out[i:] = [x + c * y for x, y in zip(out[i:], dense[:width])]
    return TruncatedSeries(tuple(out))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise SeriesError(
            f"constant term {a0} is not a unit; factor any q-power into the shift first"
        )
    n = a.order
    terms = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    b = [0] * n
    b[0] = a0
    for m in range(1, n):
        acc = 0
        for k, c in terms:
            if k > m:
                break
            acc += c * b[m - k]
        b[m] = -a0 * acc
    return TruncatedSeries(tuple(b))


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """a**e for any integer e.

    When the constant term is a unit the J.C.P. Miller recurrence is used;
    it costs O(order * nnz(a)), which is what makes sparse eta products cheap.
    A negative exponent is the same as inverting first and then raising to -e.
    """
    if not isinstance(e, int):
        raise SeriesError(f"only integer exponents are supported, got {e!r}")
    n = a.order
    if e == 0:
        return constant(1, n)
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        if e < 0:
            raise SeriesError(f"constant term {a0} is not a unit")
        return _power_binary(a, e)
    sign = a0 if e % 2 else 1
    terms = [(k, a0 * c) for k, c in enumerate(a.coeffs) if k and c]
    b = [0] * n
    b[0] = 1
    for m in range(1, n):
        acc = 0
        for k, c in terms:
            if k > m:
                break
            acc += ((e + 1) * k - m) * c * b[m - k]
        q, r = divmod(acc, m)
        if r:
            raise ArithmeticError("non-integral coefficient in power recurrence")
        b[m] = q
    if sign == -1:
        b = [-x for x in b]
    return TruncatedSeries(tuple(b))


def _power_binary(a, e):
    result = constant(1, a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


# structural transforms

def shift(a: TruncatedSeries, k: int, order: int | None = None) -> TruncatedSeries:
    """Multiply by q^k. The known range grows by k unless ``order`` caps it."""
    if k < 0:
        raise SeriesError("negative q-shifts are not supported")
    out = (0,) * k + a.coeffs
    if order is not None:
        if order > len(out):
            raise SeriesError(f"q^{k} times an order-{a.order} series is only known to order {len(out)}")
        out = out[:order]
    return TruncatedSeries(out)


def magnify(s: TruncatedSeries, m: int, q_shift: int = 0) -> TruncatedSeries:
    """Substitute q -> q^m, then multiply by q^q_shift.

    The result is known to order m*(order(s)-1) + 1 + q_shift.
    """
    if m < 1:
        raise SeriesError(f"magnification must be positive, got {m}")
    out = [0] * (m * (s.order - 1) + 1)
    out[::m] = s.coeffs
    return TruncatedSeries((0,) * q_shift + tuple(out))


def extract_progression(s: TruncatedSeries, a: int, b: int) -> TruncatedSeries:
    """The series sum_n s[a*n + b] q^n."""
    if a < 1 or not 0 <= b < a:
        raise SeriesError(f"need a >= 1 and 0 <= b < a, got a={a}, b={b}")
    if b >= s.order:
        raise SeriesError(f"offset {b} is beyond the known range {s.order}")
    return TruncatedSeries(s.coeffs[b::a])


def mod_reduce(s: TruncatedSeries, modulus: int) -> TruncatedSeries:
    if modulus < 2:
        raise SeriesError(f"modulus must be >= 2, got {modulus}")
    return TruncatedSeries(tuple(c % modulus for c in s.coeffs))


def series_eq_mod(a: TruncatedSeries, b: TruncatedSeries, modulus: int, upto: int) -> bool:
    if modulus < 2:
        raise SeriesError(f"modulus must be >= 2, got {modulus}")
    if upto > min(a.order, b.order):
        raise SeriesError(f"upto={upto} exceeds known orders {a.order}, {b.order}")
    return all((x - y) % modulus == 0 for x, y in zip(a.coeffs[:upto], b.coeffs[:upto]))


# eta products and theta functions

def pentagonal_terms(limit: int) -> list[tuple[int, int]]:
    """(exponent, sign) of prod (1 - q^n) below ``limit``, sorted by exponent."""
    terms = [(0, 1)]
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 >= limit:
            break
        sign = -1 if k % 2 else 1
        terms.append((g1, sign))
        g2 = g1 + k
        if g2 < limit:
            terms.append((g2, sign))
        k += 1
    return terms


def eta_product(j: int, order: int) -> TruncatedSeries:
    """f_j = prod_{n>=1} (1 - q^(j n)) via the pentagonal number theorem."""
    if j < 1:
        raise SeriesError(f"dilation must be positive, got {j}")
    return from_support(((j * g, s) for g, s in pentagonal_terms((order - 1) // j + 1)), order)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """q^q_shift * prod f_j^e over ``factors``; repeated j values add up."""

    factors: tuple[tuple[int, int], ...]
    q_shift: int = 0

    def __init__(self, factors: Sequence[Sequence[int]], q_shift: int = 0):
        pairs = tuple((int(j), int(e)) for j, e in factors)
        for j, _ in pairs:
            if j < 1:
                raise SeriesError(f"dilation must be positive, got {j}")
        if q_shift < 0:
            raise SeriesError(f"q_shift must be nonnegative, got {q_shift}")
        object.__setattr__(self, "factors", pairs)
        object.__setattr__(self, "q_shift", int(q_shift))

    def exponents(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for j, e in self.factors:
            out[j] = out.get(j, 0) + e
        return {j: e for j, e in sorted(out.items()) if e}


def expand_eta_quotient(spec: EtaQuotientSpec, order: int) -> TruncatedSeries:
    result = None
    inner = order - spec.q_shift
    if inner < 1:
        return zero(order)
    # densest factor (smallest j) first so later products skip zeros
    for j, e in spec.exponents().items():
        base = eta_product(1, (inner - 1) // j + 1)
        factor = magnify(power(base, e), j)
        if factor.order < inner:
            # the gap sits strictly between multiples of j, so it is genuinely zero
            factor = TruncatedSeries(factor.coeffs + (0,) * (inner - factor.order))
        result = factor if result is None else mul(result, factor)
    if result is None:
        result = constant(1, inner)
    return shift(result, spec.q_shift, order)


def theta_f_general(sign_a: int, exp_a: int, sign_b: int, exp_b: int, order: int) -> TruncatedSeries:
    """Ramanujan's f(a, b) with a = sign_a q^exp_a and b = sign_b q^exp_b."""
    if exp_a + exp_b <= 0:
        raise SeriesError("f(a, b) needs exp_a + exp_b >= 1")
    if exp_a < 0 or exp_b < 0 or sign_a not in (1, -1) or sign_b not in (1, -1):
        raise SeriesError("exponents must be nonnegative and signs +-1")
    terms = []
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            ta, tb = n * (n + 1) // 2, n * (n - 1) // 2
            expo = ta * exp_a + tb * exp_b
            if expo >= order:
                break
            terms.append((expo, sign_a ** (ta % 2) * sign_b ** (tb % 2)))
            n += direction
    return from_support(terms, order)


def psi_series(order: int) -> TruncatedSeries:
    """psi(q) = f_2^2 / f_1."""
    return expand_eta_quotient(EtaQuotientSpec([(2, 2), (1, -1)]), order)


def phi_series(order: int) -> TruncatedSeries:
    """phi(q) = f_2^5 / (f_1^2 f_4^2)."""
    return expand_eta_quotient(EtaQuotientSpec([(2, 5), (1, -2), (4, -2)]), order)


def psi_neg(order: int) -> TruncatedSeries:
    """psi(-q) = f_1 f_4 / f_2."""
    return expand_eta_quotient(EtaQuotientSpec([(1, 1), (4, 1), (2, -1)]), order)


def phi_neg(order: int) -> TruncatedSeries:
    """phi(-q) = f_1^2 / f_2."""
    return expand_eta_quotient(EtaQuotientSpec([(1, 2), (2, -1)]), order)


def triangular_sum(order: int, scale_by: int = 1) -> TruncatedSeries:
    """sum_{n>=0} q^(scale_by * n(n+1)/2), built directly."""
    terms = []
    n = 0
    while scale_by * n * (n + 1) // 2 < order:
        terms.append((scale_by * n * (n + 1) // 2, 1))
        n += 1
    return from_support(terms, order)


def square_sum(order: int, scale_by: int = 1, signed: bool = False, start: int = 1) -> TruncatedSeries:
    """sum_{n>=start} (+-1)^n q^(scale_by * n^2)."""
    terms = []
    n = start
    while scale_by * n * n < order:
        terms.append((scale_by * n * n, (-1) ** n if signed else 1))
        n += 1
    return from_support(terms, order)


def odd_square_sum(order: int) -> TruncatedSeries:
    """sum_{n>=0} q^((2n+1)^2)."""
    return from_support(((x * x, 1) for x in range(1, isqrt(max(order - 1, 0)) + 1, 2)), order)
