"""Combinatorial ground truth for pod2(n).

The counting model follows the generating function
psi(-q^2)/psi(-q) = (-q; q^2)_inf / (q^4; q^8)_inf: odd parts are distinct,
and the only even parts allowed are those congruent to 4 mod 8, with
unlimited repetition.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import series as S
from .report import VerificationReport, compare_series

POD2_SPEC = S.EtaQuotientSpec([(2, 2), (8, 1), (1, -1), (4, -2)])

ENUMERATION_BOUND = 80


@dataclass(frozen=True)
class Pod2Table:
    values: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(enumerate(self.values))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([str(v) for v in self.values])

    @classmethod
    def from_json(cls, text: str) -> Pod2Table:
        return cls(tuple(int(v) for v in json.loads(text)))


def allowed_parts(limit: int) -> list[tuple[int, bool]]:
    """(part, repeatable) for every usable part below ``limit``: odd ones first, then 4 mod 8."""
    odd = [(p, False) for p in range(1, limit, 2)]
    fours = [(p, True) for p in range(4, limit, 8)]
    return odd + fours


def pod2_dp(limit: int, items: Sequence[tuple[int, bool]] | None = None) -> Pod2Table:
    """Knapsack count over the allowed parts.

    ``items`` overrides the processing order of the part classes; the
    result does not depend on it.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    table = [0] * limit
    table[0] = 1
    for part, repeatable in items if items is not None else allowed_parts(limit):
        if part >= limit:
            continue
        if repeatable:
            for n in range(part, limit):
                table[n] += table[n - part]
        else:
            for n in range(limit - 1, part - 1, -1):
                table[n] += table[n - part]
    return Pod2Table(tuple(table))


def pod2_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every pod2 partition of ``n`` as a non-increasing tuple."""
    if n > ENUMERATION_BOUND:
        raise ValueError(f"enumeration is exponential; refusing n={n} > {ENUMERATION_BOUND}")
    if n < 0:
        return

    def walk(rest, largest, prefix):
        if rest == 0:
            yield tuple(prefix)
            return
        for part in range(min(rest, largest), 0, -1):
            if part % 2:
                nxt = part - 1  # odd parts may not repeat
            elif part % 8 == 4:
                nxt = part
            else:
                continue
            prefix.append(part)
            yield from walk(rest - part, nxt, prefix)
            prefix.pop()

    yield from walk(n, n, [])


def pod2_enumerate(n: int) -> int:
    return sum(1 for _ in pod2_partitions(n))


@lru_cache(maxsize=8)
def _pod2_product_route(limit: int) -> tuple[int, ...]:
    # psi(q) / phi(-q^4): a sparse triangular sum times the inverse of a
    # sparse square sum, so large tables stay cheap.
    inner = (limit - 1) // 4 + 1
    phi_neg = S.from_support([(0, 1)] + [(k * k, 2 * (-1) ** k) for k in range(1, inner) if k * k < inner], inner)
    denom = S.magnify(S.invert(phi_neg), 4)
    denom = S.TruncatedSeries(denom.coeffs + (0,) * (limit - denom.order))
    return S.mul(S.triangular_sum(limit), denom).coeffs


def pod2_table(limit: int) -> Pod2Table:
    """Exact pod2(0..limit-1) from psi(q)/phi(-q^4); fast enough for limit ~ 10^4."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    return Pod2Table(_pod2_product_route(limit))


def pod2_series(order: int) -> S.TruncatedSeries:
    return S.TruncatedSeries(pod2_table(order).values)


def pod2_series_check(limit: int, spec: S.EtaQuotientSpec = POD2_SPEC) -> VerificationReport:
    """Compare the eta-quotient expansion of ``spec`` against the DP table."""
    lhs = S.expand_eta_quotient(spec, limit)
    rhs = S.TruncatedSeries(pod2_dp(limit).values)
    return compare_series(
        "pod2-eta-quotient",
        lhs,
        rhs,
        statement="f2^2 f8 / (f1 f4^2) expands to the pod2 counts",
    )


def is_triangular(n: int) -> bool:
    from math import isqrt

    d = 8 * n + 1
    return n >= 0 and isqrt(d) ** 2 == d


def parity_law_check(limit: int, table: Pod2Table | None = None) -> VerificationReport:
    """pod2(m) is odd exactly when 8m+1 is an odd square, for m < limit."""
    table = table or pod2_table(limit)
    bad = []
    for m in range(limit):
        if table[m] % 2 != is_triangular(m):
            bad.append((m, table[m] % 2, int(is_triangular(m))))
    return VerificationReport(
        "pod2-parity-law",
        limit,
        bad,
        2,
        "pod2(m) is odd iff 8m+1 is an odd square",
    )
