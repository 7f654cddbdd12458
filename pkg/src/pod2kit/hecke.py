"""Ramanujan's tau, the prime Hecke operator, and the pod2 congruence families.

The families are arithmetic progressions on which pod2 vanishes mod 2 or
mod 8. :class:`PrimeFamilyParams` validates the hypotheses on (p, s or r, k)
and computes the progression; the ``verify_*`` functions check it against
an exact pod2 table.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import gcd, isqrt

from . import series as S
from .partitions import Pod2Table, is_triangular, pod2_table
from .report import VerificationReport, check_indices, combine, compare_series

DELTA_SPEC = S.EtaQuotientSpec([(1, 24)], q_shift=1)

FAMILY_KINDS = ("T3i", "T3ii", "T3iii", "T4")

# largest pod2 index the family verifiers will build a table for by default
DESK_TABLE_LIMIT = 20000


class ParameterError(ValueError):
    """Family parameters that violate the hypotheses."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def primes_below(n: int) -> list[int]:
    return [p for p in range(2, n) if is_prime(p)]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ParameterError(f"Legendre symbol needs an odd prime, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


# tau

@dataclass(frozen=True)
class TauTable:
    """values[n] = tau(n); index 0 holds 0 so the list lines up with q-exponents."""

    values: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def series(self) -> S.TruncatedSeries:
        return S.TruncatedSeries(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows((n, self.values[n]) for n in range(1, self.limit))
        return buf.getvalue()


def delta_series(limit: int) -> TauTable:
    """Coefficients of q * f_1^24 below ``limit``."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    return TauTable(S.expand_eta_quotient(DELTA_SPEC, limit).coeffs)


def hecke_Tp(s: S.TruncatedSeries, p: int, k: int = 12) -> S.TruncatedSeries:
    """Apply T_{p,k}: a(n) -> a(pn) + p^(k-1) a(n/p)."""
    if not is_prime(p):
        raise ParameterError(f"T_p needs a prime, got {p}")
    if s.order < p:
        raise S.SeriesError(f"need order >= p={p}, got {s.order}")
    m = (s.order - 1) // p + 1
    w = p ** (k - 1)
    return S.TruncatedSeries(tuple(
        s[p * n] + (w * s[n // p] if n % p == 0 else 0) for n in range(m)
    ))


def eigenform_check(p: int, limit: int, tau: TauTable | None = None) -> VerificationReport:
    """Delta | T_p == tau(p) Delta on every coefficient the table supports."""
    tau = tau or delta_series(p * (limit - 1) + 1)
    lhs = hecke_Tp(tau.series(), p)
    rhs = S.scale(tau.series(), tau[p])
    n = min(limit, lhs.order)
    return compare_series(
        f"eigenform-T{p}",
        lhs,
        rhs,
        upto=n,
        statement=f"Delta | T_{p},12 = tau({p}) Delta",
    )


def tau_multiplicativity_check(limit: int, tau: TauTable | None = None) -> VerificationReport:
    """tau(mn) = tau(m) tau(n) for coprime m, n and the prime-power recurrence, below ``limit``."""
    tau = tau or delta_series(limit)
    bad = []
    for m in range(2, limit):
        for n in range(m + 1, (limit - 1) // m + 1):
            if gcd(m, n) == 1 and tau[m * n] != tau[m] * tau[n]:
                bad.append((m * n, tau[m * n], tau[m] * tau[n]))
    mult = VerificationReport("tau-multiplicative", limit, bad, 0, "tau(mn) = tau(m) tau(n), gcd(m,n)=1")
    bad = []
    for p in primes_below(limit):
        q = p * p
        while q < limit:
            expected = tau[p] * tau[q // p] - p ** 11 * tau[q // (p * p)]
            if tau[q] != expected:
                bad.append((q, tau[q], expected))
            q *= p
    rec = VerificationReport(
        "tau-prime-power", limit, bad, 0,
        "tau(p^l) = tau(p) tau(p^(l-1)) - p^11 tau(p^(l-2))",
    )
    return combine("tau-multiplicativity", [mult, rec], "multiplicativity and prime-power recurrence of tau")


def tau_parity_check(limit: int, tau: TauTable | None = None) -> VerificationReport:
    tau = tau or delta_series(limit)
    bad = []
    for n in range(1, limit):
        odd_square = n % 2 == 1 and isqrt(n) ** 2 == n
        if tau[n] % 2 != odd_square:
            bad.append((n, tau[n] % 2, int(odd_square)))
    return VerificationReport("tau-parity", limit, bad, 2, "tau(n) is odd iff n is an odd square")


# congruence families

def theorem3_s_values(p: int) -> list[int]:
    """s in [1, 8p] with s = 1 mod 8 and (s/p) = -1."""
    _require_odd_prime(p)
    return [s for s in range(1, 8 * p + 1, 8) if legendre(s, p) == -1]


def theorem3_r_values(p: int) -> list[int]:
    """r in [1, 8p] with rp = 1 mod 8 and gcd(r, p) = 1."""
    _require_odd_prime(p)
    return [r for r in range(1, 8 * p + 1) if (r * p) % 8 == 1 and gcd(r, p) == 1]


def theorem4_r_values(p: int) -> list[int]:
    """r in [1, 8p) with r = 7 mod 8 and gcd(r, p) = 1, for p = 7 mod 8."""
    _require_odd_prime(p)
    if p % 8 != 7:
        raise ParameterError(f"the mod 8 family needs p = 7 mod 8, got {p}")
    return [r for r in range(7, 8 * p, 8) if gcd(r, p) == 1]


def _require_odd_prime(p):
    if p == 2 or not is_prime(p):
        raise ParameterError(f"need an odd prime, got {p}")


@dataclass(frozen=True)
class PrimeFamilyParams:
    """One progression pod2(step * n + offset) with its hypotheses checked.

    ``verbatim_plus_one`` selects the printed "+1" numerator for T4. Under
    the family's own hypotheses rp = 1 mod 8, so that numerator is never
    divisible by 8 and construction fails.
    """

    p: int
    s_or_r: int
    k: int
    family_kind: str
    verbatim_plus_one: bool = False

    def __post_init__(self):
        p, x, k, kind = self.p, self.s_or_r, self.k, self.family_kind
        if kind not in FAMILY_KINDS:
            raise ParameterError(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
        _require_odd_prime(p)
        if k < 0:
            raise ParameterError(f"k must be >= 0, got {k}")
        if kind == "T3i" and k != 0:
            raise ParameterError("T3i has no k; use k=0")
        if kind in ("T3i", "T3ii"):
            if not (1 <= x <= 8 * p and x % 8 == 1 and legendre(x, p) == -1):
                raise ParameterError(f"s={x} needs 1 <= s <= 8p, s = 1 mod 8, (s/p) = -1 for p={p}")
        elif kind == "T3iii":
            if not (1 <= x <= 8 * p and (x * p) % 8 == 1 and gcd(x, p) == 1):
                raise ParameterError(f"r={x} needs 1 <= r <= 8p, rp = 1 mod 8, gcd(r,p) = 1 for p={p}")
        else:
            if p % 8 != 7:
                raise ParameterError(f"T4 needs p = 7 mod 8, got {p}")
            if not (1 <= x < 8 * p and x % 8 == 7 and gcd(x, p) == 1):
                raise ParameterError(f"r={x} needs 1 <= r < 8p, r = 7 mod 8, gcd(r,p) = 1 for p={p}")
        num = self._numerator()
        if num < 0 or num % 8:
            raise ParameterError(f"offset {num}/8 is not a nonnegative integer for {self}")

    def _numerator(self):
        p, x, k = self.p, self.s_or_r, self.k
        if self.family_kind in ("T3i", "T3ii"):
            return x * p ** (2 * k) - 1
        if self.family_kind == "T3iii":
            return x * p ** (2 * k + 1) - 1
        return x * p ** (2 * k + 1) + (1 if self.verbatim_plus_one else -1)

    @property
    def modulus(self) -> int:
        return 8 if self.family_kind == "T4" else 2

    @property
    def step(self) -> int:
        if self.family_kind in ("T3i", "T3ii"):
            return self.p ** (2 * self.k + 1)
        return self.p ** (2 * self.k + 2)

    @property
    def offset(self) -> int:
        return self._numerator() // 8

    def indices(self, count: int) -> list[int]:
        return [self.step * n + self.offset for n in range(count)]

    def describe(self) -> str:
        label = "s" if self.family_kind in ("T3i", "T3ii") else "r"
        return (f"pod2({self.step}n + {self.offset}) = 0 mod {self.modulus} "
                f"[{self.family_kind}: p={self.p}, {label}={self.s_or_r}, k={self.k}]")


def _table_for(params_list, count, table):
    need = max(prm.step * (count - 1) + prm.offset for prm in params_list) + 1
    if table is None:
        if need > DESK_TABLE_LIMIT * 5:
            raise ValueError(f"progression needs pod2 up to index {need - 1}; reduce N")
        return pod2_table(need)
    if table.limit < need:
        raise ValueError(f"pod2 table has {table.limit} entries; this check needs {need}")
    return table


def verify_family(params_list: list[PrimeFamilyParams], count: int, claim: str,
                  table: Pod2Table | None = None) -> VerificationReport:
    if count < 1:
        raise ValueError(f"need at least one progression term, got N={count}")
    table = _table_for(params_list, count, table)
    parts = []
    for prm in params_list:
        values = [(i, table[i]) for i in prm.indices(count)]
        parts.append(check_indices(f"{claim}[{prm.family_kind} p={prm.p} {prm.s_or_r} k={prm.k}]",
                                   values, prm.modulus, count, prm.describe()))
    return combine(claim, parts, "; ".join(prm.describe() for prm in params_list))


def _tau_p_even_note(p: int) -> str:
    t = delta_series(p + 1)[p]
    held = t % 2 == 0
    return f"hypothesis tau({p}) = {t} even: {'held' if held else 'FAILED'}"


def _select(values, only, p, label):
    if only is None:
        return values
    if only not in values:
        raise ParameterError(f"{label}={only} does not qualify for p={p}; choices are {values}")
    return [only]


def verify_theorem3_i(p: int, N: int, table: Pod2Table | None = None,
                      only: int | None = None) -> VerificationReport:
    """pod2(pn + (s-1)/8) even for every qualifying s.

    Also checks the equivalent statement that these progressions never hit a
    triangular number; the two must agree.
    """
    params = [PrimeFamilyParams(p, s, 0, "T3i") for s in _select(theorem3_s_values(p), only, p, "s")]
    if not params:
        raise ParameterError(f"no qualifying s for p={p}")
    report = verify_family(params, N, f"theorem3.i p={p}", table)
    hits = [(i, 1, 0) for prm in params for i in prm.indices(N) if is_triangular(i)]
    tri = VerificationReport(f"theorem3.i p={p} avoids triangular numbers", N, hits, 2)
    if tri.passed != report.passed:
        report.notes.append("parity form and triangular-avoidance form DISAGREE")
    return combine(report.claim, [report, tri], report.statement)


def verify_theorem3_ii(p: int, k: int, N: int, table: Pod2Table | None = None,
                       only: int | None = None) -> VerificationReport:
    """pod2(p^(2k+1) n + (s p^(2k) - 1)/8) even; k=0 gives the first family back."""
    params = [PrimeFamilyParams(p, s, k, "T3ii") for s in _select(theorem3_s_values(p), only, p, "s")]
    report = verify_family(params, N, f"theorem3.ii p={p} k={k}", table)
    report.notes.append(_tau_p_even_note(p))
    if k == 0:
        report.notes.append("k=0 is outside the stated k >= 1 but covered by the induction base")
    return report


def verify_theorem3_iii(p: int, k: int, N: int, table: Pod2Table | None = None,
                        only: int | None = None) -> VerificationReport:
    """pod2(p^(2k+2) n + (r p^(2k+1) - 1)/8) even."""
    params = [PrimeFamilyParams(p, r, k, "T3iii") for r in _select(theorem3_r_values(p), only, p, "r")]
    report = verify_family(params, N, f"theorem3.iii p={p} k={k}", table)
    report.notes.append(_tau_p_even_note(p))
    return report


def verify_theorem4(p: int, k: int, N: int, table: Pod2Table | None = None,
                    verbatim_plus_one: bool = False, only: int | None = None) -> VerificationReport:
    """pod2(p^(2k+2) n + (r p^(2k+1) - 1)/8) divisible by 8, on exact values."""
    params = [PrimeFamilyParams(p, r, k, "T4", verbatim_plus_one)
              for r in _select(theorem4_r_values(p), only, p, "r")]
    return verify_family(params, N, f"theorem4 p={p} k={k}", table)


def delta_pod2_mod2_link(order: int) -> VerificationReport:
    """sum pod2(n) q^(8n+1), q f16^2 f64/(f8 f32^2), Delta and sum q^((2n+1)^2) agree mod 2."""
    src = pod2_table((order - 2) // 8 + 1)
    magnified = S.magnify(S.TruncatedSeries(src.values), 8, q_shift=1)
    magnified = S.TruncatedSeries(magnified.coeffs + (0,) * (order - magnified.order))
    candidates = {
        "pod2 magnified": magnified,
        "eta quotient": S.expand_eta_quotient(S.EtaQuotientSpec([(16, 2), (64, 1), (8, -1), (32, -2)], 1), order),
        "Delta": delta_series(order).series(),
        "odd squares": S.odd_square_sum(order),
    }
    names = list(candidates)
    parts = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            parts.append(compare_series(f"{a} vs {b}", candidates[a], candidates[b], 2))
    return combine("delta-pod2-mod2", parts, "sum pod2(n) q^(8n+1) = Delta = sum q^((2n+1)^2) mod 2")
