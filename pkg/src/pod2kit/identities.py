"""Series identities and congruences as data, plus the checks that run them.

A *recipe* is a small JSON-compatible dict describing how to build a
series at any truncation order::

    {"eta": [[j, e], ...], "shift": 0, "coeff": 1}   q^shift * coeff * prod f_j^e
    {"sum": [recipe, ...]}      {"product": [recipe, ...]}
    {"power": recipe, "e": 2}   {"scale": recipe, "by": 3}
    {"extract": recipe, "a": 3, "b": 2}        sum_n s[a n + b] q^n
    {"magnify": recipe, "m": 8, "shift": 1}    q^shift s(q^m)
    {"pod2": {}}   {"zero": {}}   {"theta": "psi" | "phi" | "psi_neg" | "phi_neg"}
    {"triangular": {"scale": 1}}               sum_{n>=0} q^(scale n(n+1)/2)
    {"square_sum": {"scale": 1, "signed": true, "start": 1}}
    {"odd_squares": {}}   {"jacobi_cube": {}}

Every recipe evaluates to exactly the requested order; extractions and
magnifications size their source automatically.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import series as S
from .partitions import POD2_SPEC, is_triangular, pod2_series
from .report import VerificationReport, combine, compare_series


class RecipeError(ValueError):
    pass


def eta(*factors, shift=0, coeff=1) -> dict:
    r = {"eta": [list(f) for f in factors]}
    if shift:
        r["shift"] = shift
    if coeff != 1:
        r["coeff"] = coeff
    return r


def total(*terms) -> dict:
    return {"sum": list(terms)}


def extract(recipe, a, b) -> dict:
    return {"extract": recipe, "a": a, "b": b}


POD2 = {"pod2": {}}
ZERO = {"zero": {}}


def _pad(s, order):
    if s.order >= order:
        return s.truncate(order)
    return S.TruncatedSeries(s.coeffs + (0,) * (order - s.order))


def evaluate(recipe: dict, order: int) -> S.TruncatedSeries:
    if order < 1:
        raise RecipeError(f"order must be >= 1, got {order}")
    if "eta" in recipe:
        spec = S.EtaQuotientSpec(recipe["eta"], recipe.get("shift", 0))
        out = S.expand_eta_quotient(spec, order)
        c = recipe.get("coeff", 1)
        return out if c == 1 else S.scale(out, c)
    if "sum" in recipe:
        parts = [evaluate(r, order) for r in recipe["sum"]]
        out = parts[0]
        for p in parts[1:]:
            out = S.add(out, p)
        return out
    if "product" in recipe:
        parts = [evaluate(r, order) for r in recipe["product"]]
        out = parts[0]
        for p in parts[1:]:
            out = S.mul(out, p)
        return out
    if "power" in recipe:
        return S.power(evaluate(recipe["power"], order), recipe["e"])
    if "scale" in recipe:
        return S.scale(evaluate(recipe["scale"], order), recipe["by"])
    if "extract" in recipe:
        a, b = recipe["a"], recipe["b"]
        return S.extract_progression(evaluate(recipe["extract"], a * order + b), a, b)
    if "magnify" in recipe:
        m, sh = recipe["m"], recipe.get("shift", 0)
        if order <= sh:
            return S.zero(order)
        src = -(-(order - sh - 1) // m) + 1
        # positions past the magnified range are off the q^m lattice, hence zero
        return _pad(S.magnify(evaluate(recipe["magnify"], src), m, sh), order)
    if "pod2" in recipe:
        return pod2_series(order)
    if "zero" in recipe:
        return S.zero(order)
    if "theta" in recipe:
        fn = {"psi": S.psi_series, "phi": S.phi_series, "psi_neg": S.psi_neg, "phi_neg": S.phi_neg}
        try:
            return fn[recipe["theta"]](order)
        except KeyError:
            raise RecipeError(f"unknown theta function {recipe['theta']!r}") from None
    if "triangular" in recipe:
        return S.triangular_sum(order, recipe["triangular"].get("scale", 1))
    if "square_sum" in recipe:
        o = recipe["square_sum"]
        return S.square_sum(order, o.get("scale", 1), o.get("signed", False), o.get("start", 1))
    if "odd_squares" in recipe:
        return S.odd_square_sum(order)
    if "jacobi_cube" in recipe:
        return jacobi_cube_sum(order)
    raise RecipeError(f"unrecognised recipe keys {sorted(recipe)}")


def jacobi_cube_sum(order: int) -> S.TruncatedSeries:
    """sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2), summed directly."""
    terms = []
    n = 0
    while n * (n + 1) // 2 < order:
        terms.append((n * (n + 1) // 2, (-1) ** n * (2 * n + 1)))
        n += 1
    return S.from_support(terms, order)


@dataclass
class CongruenceClaim:
    """lhs == rhs coefficient-wise, modulo ``modulus`` (0 = exactly)."""

    name: str
    lhs: dict
    rhs: dict
    modulus: int = 0
    check_order: int = 300
    statement: str = ""
    expect: str = "pass"

    def __post_init__(self):
        if self.modulus == 1 or self.modulus < 0:
            raise RecipeError(f"modulus must be 0 or >= 2, got {self.modulus}")
        if self.check_order < 1:
            raise RecipeError(f"check_order must be >= 1, got {self.check_order}")

    def run(self, order: int | None = None) -> VerificationReport:
        n = order or self.check_order
        return compare_series(self.name, evaluate(self.lhs, n), evaluate(self.rhs, n),
                              self.modulus, statement=self.statement)

    def to_dict(self) -> dict:
        return {"name": self.name, "statement": self.statement, "lhs": self.lhs, "rhs": self.rhs,
                "modulus": self.modulus, "order": self.check_order, "expect": self.expect}


# the identities themselves

PSI = eta((2, 2), (1, -1))
PSI_DISSECTION = total(
    eta((6, 1), (9, 2), (3, -1), (18, -1)),
    eta((18, 2), (9, -1), shift=1),
)
INV_PHI_NEG = eta((2, 1), (1, -2))
INV_PHI_NEG_DISSECTION = total(
    eta((6, 4), (9, 6), (3, -8), (18, -3)),
    eta((6, 3), (9, 3), (3, -7), shift=1, coeff=2),
    eta((6, 2), (18, 3), (3, -6), shift=2, coeff=4),
)

SIX_TERMS = [
    eta((6, 1), (9, 2), (24, 4), (36, 6), (3, -1), (18, -1), (12, -8), (72, -3)),
    eta((6, 1), (9, 2), (24, 3), (36, 3), (3, -1), (18, -1), (12, -7), shift=4, coeff=2),
    eta((6, 1), (9, 2), (24, 2), (72, 3), (3, -1), (18, -1), (12, -6), shift=8, coeff=4),
    eta((18, 2), (24, 4), (36, 6), (9, -1), (12, -8), (72, -3), shift=1),
    eta((18, 2), (24, 3), (36, 3), (9, -1), (12, -7), shift=5, coeff=2),
    eta((18, 2), (24, 2), (72, 3), (9, -1), (12, -6), shift=9, coeff=4),
]

PROGRESSION_RHS = {
    2: total(
        eta((6, 2), (8, 3), (12, 3), (3, -1), (4, -7), shift=1, coeff=2),
        eta((2, 1), (3, 2), (8, 2), (24, 3), (1, -1), (6, -1), (4, -6), shift=2, coeff=4),
    ),
    0: total(
        eta((2, 1), (3, 2), (8, 4), (12, 6), (1, -1), (6, -1), (4, -8), (24, -3)),
        eta((6, 2), (8, 2), (24, 3), (3, -1), (4, -6), shift=3, coeff=4),
    ),
    1: total(
        eta((6, 2), (8, 4), (12, 6), (3, -1), (4, -8), (24, -3)),
        eta((2, 1), (3, 2), (8, 3), (12, 3), (1, -1), (4, -7), (6, -1), shift=1, coeff=2),
    ),
}

MOD8_RHS = {"product": [
    {"theta": "psi"},
    total(
        eta(),
        {"scale": {"square_sum": {"scale": 4, "signed": True}}, "by": -2},
        {"scale": {"square_sum": {"scale": 8, "signed": True}}, "by": 4},
    ),
]}

LEMMA_PSI = CongruenceClaim(
    "lemma2.1", PSI, PSI_DISSECTION, 0, 500,
    "f2^2/f1 = f6 f9^2/(f3 f18) + q f18^2/f9")
LEMMA_PSI_CONTROL = CongruenceClaim(
    "lemma2.1-negative-control", PSI,
    total(eta((6, 1), (9, 2), (3, -1), (18, -1)), eta((18, 2), (9, -1))), 0, 500,
    "second term without its q factor", "fail")
LEMMA_INV_PHI = CongruenceClaim(
    "lemma2.2", INV_PHI_NEG, INV_PHI_NEG_DISSECTION, 0, 500,
    "f2/f1^2 = f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6")
LEMMA_INV_PHI_CONTROL = CongruenceClaim(
    "lemma2.2-negative-control", INV_PHI_NEG,
    total(INV_PHI_NEG_DISSECTION["sum"][0], eta((6, 3), (9, 3), (3, -7), shift=1, coeff=3),
          INV_PHI_NEG_DISSECTION["sum"][2]), 0, 500,
    "middle coefficient 2 replaced by 3", "fail")
FULL_DISSECTION = CongruenceClaim(
    "three-dissection", POD2, total(*SIX_TERMS), 0, 500,
    "pod2 generating function equals its six-term 3-dissection")
FULL_DISSECTION_CONTROL = CongruenceClaim(
    "three-dissection-negative-control", POD2, total(*SIX_TERMS[:5]), 0, 500,
    "dissection without the q^9 term", "fail")

PROGRESSION_CLAIMS = [
    CongruenceClaim(f"progression-3n{'+' + str(b) if b else ''}", extract(POD2, 3, b),
                    PROGRESSION_RHS[b], 0, 500, f"closed form for sum pod2(3n+{b}) q^n")
    for b in (2, 0, 1)
]
PROGRESSION_CONTROLS = [
    CongruenceClaim("progression-3n+2-negative-control", extract(POD2, 3, 2),
                    total(eta((6, 2), (8, 3), (12, 3), (3, -1), (4, -7), shift=1, coeff=1),
                          PROGRESSION_RHS[2]["sum"][1]), 0, 500, "leading factor 2 replaced by 1", "fail"),
    CongruenceClaim("progression-3n-negative-control", extract(POD2, 3, 0),
                    total(PROGRESSION_RHS[0]["sum"][0],
                          eta((6, 2), (8, 2), (24, 3), (3, -1), (4, -6), shift=3, coeff=2)),
                    0, 500, "factor 4 replaced by 2", "fail"),
    CongruenceClaim("progression-3n+1-negative-control", extract(POD2, 3, 1),
                    total(PROGRESSION_RHS[1]["sum"][0],
                          eta((2, 1), (3, 2), (8, 3), (12, 3), (1, -1), (4, -7), (6, -1), shift=1, coeff=1)),
                    0, 500, "factor 2 replaced by 1", "fail"),
]

MOD2_CLAIMS = [
    CongruenceClaim("theorem1.i", extract(POD2, 3, 2), ZERO, 2, 600,
                    "pod2(3n+2) = 0 mod 2"),
    CongruenceClaim("theorem1.ii", extract(POD2, 3, 0), eta((1, 1)), 2, 500,
                    "sum pod2(3n) q^n = f1 mod 2"),
    CongruenceClaim("progression-3n+1-mod2", extract(POD2, 3, 1), eta((3, 3)), 2, 500,
                    "sum pod2(3n+1) q^n = f3^3 mod 2"),
    CongruenceClaim("theorem1.iii", extract(POD2, 9, 1), eta((1, 3)), 2, 500,
                    "sum pod2(9n+1) q^n = f1^3 mod 2"),
]
MOD2_CONTROL = CongruenceClaim(
    "progression-3n+1-mod2-negative-control", extract(POD2, 3, 1), eta((1, 3)), 2, 500,
    "f3^3 replaced by the undilated f1^3", "fail")

JACOBI_CLAIMS = [
    CongruenceClaim("jacobi-cube", eta((1, 3)), {"jacobi_cube": {}}, 0, 500,
                    "f1^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)"),
    CongruenceClaim("jacobi-cube-mod2", eta((1, 3)), {"triangular": {}}, 2, 500,
                    "f1^3 = sum q^(n(n+1)/2) mod 2"),
]

SQUARE_SUM_CLAIM = CongruenceClaim(
    "square-sum-mod2", {"power": {"square_sum": {"signed": True}}, "e": 2},
    {"square_sum": {"scale": 2}}, 2, 400,
    "(sum_{n>=1} (-1)^n q^(n^2))^2 = sum_{n>=1} q^(2n^2) mod 2")
MOD8_CLAIM = CongruenceClaim(
    "mod8-expansion", POD2, MOD8_RHS, 8, 400,
    "pod2 series = psi(q)(1 - 2 sum (-1)^n q^(4n^2) + 4 sum (-1)^n q^(8n^2)) mod 8")
MOD8_CONTROL = CongruenceClaim(
    "mod8-expansion-negative-control", POD2, MOD8_RHS, 16, 400,
    "the same truncated expansion read mod 16", "fail")

SERIES_CLAIMS = [
    LEMMA_PSI, LEMMA_PSI_CONTROL, LEMMA_INV_PHI, LEMMA_INV_PHI_CONTROL,
    FULL_DISSECTION, FULL_DISSECTION_CONTROL,
    *PROGRESSION_CLAIMS, *PROGRESSION_CONTROLS,
    *MOD2_CLAIMS, MOD2_CONTROL,
    *JACOBI_CLAIMS,
    SQUARE_SUM_CLAIM, MOD8_CLAIM, MOD8_CONTROL,
]


def verify_lemma_psi_dissection(order: int) -> VerificationReport:
    return LEMMA_PSI.run(order)


def verify_lemma_inverse_phi_dissection(order: int) -> VerificationReport:
    return LEMMA_INV_PHI.run(order)


def verify_full_dissection(order: int) -> VerificationReport:
    return FULL_DISSECTION.run(order)


def verify_progression_identities(order: int) -> VerificationReport:
    parts = [c.run(order) for c in PROGRESSION_CLAIMS]
    return combine("progression-identities", parts, "closed forms of the three 3-progressions of pod2")


def verify_mod2_reductions(order: int) -> VerificationReport:
    """The four mod-2 progression statements.

    The 3n+2 part also confirms exact divisibility by 2, which is what
    comparing against the zero series mod 2 means on exact coefficients.
    """
    parts = [c.run(order) for c in MOD2_CLAIMS]
    return combine("mod2-reductions", parts, "mod 2 forms of the 3-progressions of pod2")


def jacobi_cube(order: int) -> VerificationReport:
    parts = [c.run(order) for c in JACOBI_CLAIMS]
    return combine("jacobi-cube", parts, JACOBI_CLAIMS[0].statement)


def theorem2_characterization(limit: int) -> VerificationReport:
    """pod2(3n+1) is odd exactly when n = 3 T_k, for n < limit."""
    lifted = extract(POD2, 3, 1)
    values = evaluate(lifted, limit)
    bad = []
    for n in range(limit):
        expected = n % 3 == 0 and is_triangular(n // 3)
        if values[n] % 2 != expected:
            bad.append((n, values[n] % 2, int(expected)))
    return VerificationReport("theorem2", limit, bad, 2,
                              "pod2(3n+1) is odd iff n = 3 k(k+1)/2")


def verify_mod8_expansion(order: int, modulus: int = 8) -> VerificationReport:
    sq = SQUARE_SUM_CLAIM.run(order)
    main = compare_series(MOD8_CLAIM.name, evaluate(POD2, order), evaluate(MOD8_RHS, order),
                          modulus, statement=MOD8_CLAIM.statement)
    return combine("mod8-expansion", [sq, main], MOD8_CLAIM.statement)


__all__ = [
    "CongruenceClaim", "RecipeError", "SERIES_CLAIMS", "POD2_SPEC", "evaluate",
    "verify_lemma_psi_dissection", "verify_lemma_inverse_phi_dissection",
    "verify_full_dissection", "verify_progression_identities", "verify_mod2_reductions",
    "jacobi_cube", "theorem2_characterization", "verify_mod8_expansion",
]
