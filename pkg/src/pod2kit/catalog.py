"""The claim manifest and the runner that executes it.

Entries are plain dicts. A series entry carries ``lhs``/``rhs`` recipes and
a modulus; a verifier entry names a function from :data:`VERIFIERS` plus
its parameters. ``order`` is the truncation order, table limit, or number
of progression terms, depending on the entry. ``expect`` is "fail" for
negative controls.
"""

from __future__ import annotations

import json
import os
import time
from importlib import resources
from pathlib import Path

from . import hecke, identities
from .identities import CongruenceClaim
from .partitions import POD2_SPEC, parity_law_check, pod2_dp, pod2_enumerate, pod2_series_check
from .report import FAIL, VerificationReport
from .series import EtaQuotientSpec

MANIFEST_ENV = "POD2_MANIFEST"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["claims", "meta"],
    "properties": {
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "paper_ref", "modulus", "range", "status", "counterexamples"],
                "properties": {
                    "name": {"type": "string"},
                    "paper_ref": {"type": "string"},
                    "modulus": {"type": "integer", "minimum": 0},
                    "range": {"type": "integer", "minimum": 0},
                    "status": {"enum": ["pass", "fail"]},
                    "expect": {"enum": ["pass", "fail"]},
                    "counterexamples": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "prefixItems": [{"type": "integer"}, {"type": "string"}, {"type": "string"}],
                            "minItems": 3,
                            "maxItems": 3,
                        },
                    },
                },
            },
        },
        "meta": {
            "type": "object",
            "required": ["orders", "elapsed_ms"],
            "properties": {
                "orders": {"type": "object", "additionalProperties": {"type": "integer"}},
                "elapsed_ms": {"type": "number", "minimum": 0},
            },
        },
    },
}


def _oracle(order, spec=None):
    spec = EtaQuotientSpec(spec) if spec is not None else POD2_SPEC
    return pod2_series_check(order, spec)


def _enumeration(order):
    table = pod2_dp(order)
    bad = [(n, table[n], pod2_enumerate(n)) for n in range(order) if table[n] != pod2_enumerate(n)]
    return VerificationReport("pod2-enumeration", order, bad, 0,
                              "knapsack table agrees with explicit enumeration")


def _eigenform(order, p, perturb=None):
    tau = hecke.delta_series(p * (order - 1) + 1)
    if perturb is not None:
        vals = list(tau.values)
        vals[perturb] += 1
        tau = hecke.TauTable(tuple(vals))
    return hecke.eigenform_check(p, order, tau)


def _family(fn):
    def run(order, p, k=None, only=None, verbatim_plus_one=False):
        kwargs = {"table": None}
        if verbatim_plus_one:
            kwargs["verbatim_plus_one"] = True
        if only is not None:
            kwargs["only"] = only
        return fn(p, order, **kwargs) if k is None else fn(p, k, order, **kwargs)
    return run


VERIFIERS = {
    "pod2-oracle": _oracle,
    "pod2-enumeration": _enumeration,
    "pod2-parity-law": lambda order: parity_law_check(order),
    "theorem2": identities.theorem2_characterization,
    "delta-pod2-mod2": hecke.delta_pod2_mod2_link,
    "eigenform": _eigenform,
    "tau-multiplicativity": hecke.tau_multiplicativity_check,
    "tau-parity": hecke.tau_parity_check,
    "theorem3.i": _family(hecke.verify_theorem3_i),
    "theorem3.ii": _family(hecke.verify_theorem3_ii),
    "theorem3.iii": _family(hecke.verify_theorem3_iii),
    "theorem4": _family(hecke.verify_theorem4),
}


def _v(name, verifier, order, statement, expect="pass", modulus=0, **params):
    return {"name": name, "statement": statement, "verifier": verifier, "params": params,
            "modulus": modulus, "order": order, "expect": expect}


def default_manifest() -> list[dict]:
    entries = [
        _v("pod2-eta-quotient", "pod2-oracle", 2000, "f2^2 f8/(f1 f4^2) expands to the pod2 counts"),
        _v("pod2-eta-quotient-negative-control", "pod2-oracle", 2000, "f4 exponent -2 replaced by -1",
           "fail", spec=[[2, 2], [8, 1], [1, -1], [4, -1]]),
        _v("pod2-enumeration", "pod2-enumeration", 61, "knapsack table agrees with explicit enumeration"),
    ]
    entries += [c.to_dict() for c in identities.SERIES_CLAIMS]
    entries += [
        _v("theorem2", "theorem2", 600, "pod2(3n+1) is odd iff n = 3 k(k+1)/2", modulus=2),
        _v("pod2-parity-law", "pod2-parity-law", 2000, "pod2(m) is odd iff 8m+1 is an odd square", modulus=2),
        _v("delta-pod2-mod2", "delta-pod2-mod2", 1000,
           "sum pod2(n) q^(8n+1) = Delta = sum q^((2n+1)^2) mod 2", modulus=2),
    ]
    entries += [
        _v(f"eigenform-T{p}", "eigenform", (2000 - 1) // p + 1, f"Delta | T_{p},12 = tau({p}) Delta", p=p)
        for p in (2, 3, 5, 7, 11, 13)
    ]
    entries += [
        _v("eigenform-negative-control", "eigenform", 200, "tau(5) perturbed by one", "fail", p=2, perturb=5),
        _v("tau-multiplicativity", "tau-multiplicativity", 2000,
           "tau multiplicative on coprime arguments; prime-power recurrence"),
        _v("tau-parity", "tau-parity", 2000, "tau(n) is odd iff n is an odd square", modulus=2),
    ]
    entries += [
        _v(f"theorem3.i-p{p}", "theorem3.i", 400, f"pod2(pn + (s-1)/8) even, p={p}", modulus=2, p=p)
        for p in (3, 5, 11, 13)
    ]
    entries += [
        _v("theorem3.ii-p3-k1", "theorem3.ii", 700, "pod2(27n + 19) even", modulus=2, p=3, k=1),
        _v("theorem3.ii-p5-k1", "theorem3.ii", 150, "pod2(125n + (25s-1)/8) even, s in {17, 33}",
           modulus=2, p=5, k=1),
        _v("theorem3.iii-p3-k1", "theorem3.iii", 240, "pod2(81n + (27r-1)/8) even, r in {11, 19}",
           modulus=2, p=3, k=1),
        _v("theorem4", "theorem4", 40, "pod2(49n + (7r-1)/8) = 0 mod 8, r = 7 mod 8", modulus=8, p=7, k=0),
        _v("theorem4-verbatim-offset-negative-control", "theorem4", 40,
           "(7r+1)/8 offset is not an integer and must be rejected", "fail", modulus=8,
           p=7, k=0, verbatim_plus_one=True),
    ]
    return entries


def default_manifest_path() -> Path:
    return Path(str(resources.files("pod2kit") / "data" / "claims.json"))


def manifest_path(explicit: str | None = None) -> Path:
    return Path(explicit or os.environ.get(MANIFEST_ENV) or default_manifest_path())


def load_manifest(path: str | Path | None = None) -> list[dict]:
    """Read a manifest; OSError for missing files, ValueError for bad content."""
    with open(manifest_path(str(path) if path else None)) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("manifest must be a JSON list")
    seen = set()
    for e in data:
        if "name" not in e or "order" not in e or not ("verifier" in e or ("lhs" in e and "rhs" in e)):
            raise ValueError(f"malformed manifest entry: {e!r}")
        if e["name"] in seen:
            raise ValueError(f"duplicate claim name {e['name']!r}")
        seen.add(e["name"])
    return data


def run_entry(entry: dict, order: int | None = None, **overrides) -> VerificationReport:
    """Run one manifest entry; ``overrides`` replace verifier parameters."""
    n = order or entry["order"]
    expect = entry.get("expect", "pass")
    if "verifier" not in entry:
        claim = CongruenceClaim(entry["name"], entry["lhs"], entry["rhs"], entry.get("modulus", 0),
                                entry["order"], entry.get("statement", ""), expect)
        return claim.run(n)
    fn = VERIFIERS.get(entry["verifier"])
    if fn is None:
        raise KeyError(f"unknown verifier {entry['verifier']!r}")
    params = {**entry.get("params", {}), **{k: v for k, v in overrides.items() if v is not None}}
    try:
        report = fn(n, **params)
    except hecke.ParameterError as exc:
        if expect != FAIL:
            raise
        # for this control, rejection at construction is the failure we want
        return VerificationReport(entry["name"], 0, [(-1, 0, 0)], entry.get("modulus", 0),
                                  entry.get("statement", ""), notes=[f"rejected: {exc}"])
    report.claim = entry["name"]
    report.statement = entry.get("statement", "") or report.statement
    return report


def run_manifest(entries: list[dict], order: int | None = None) -> dict:
    """Run every entry in manifest order and build the JSON report document."""
    start = time.perf_counter()
    claims, orders = [], {}
    ok = True
    for e in entries:
        t0 = time.perf_counter()
        rep = run_entry(e, order)
        row = rep.to_dict(e["name"])
        row["expect"] = e.get("expect", "pass")
        row["elapsed_ms"] = round(1000 * (time.perf_counter() - t0), 3)
        claims.append(row)
        orders[e["name"]] = order or e["order"]
        ok &= row["status"] == row["expect"]
    return {
        "claims": claims,
        "meta": {
            "orders": orders,
            "elapsed_ms": round(1000 * (time.perf_counter() - start), 3),
            "all_as_expected": ok,
        },
    }
