"""Exact q-series toolkit for pod2(n) and its congruences."""

from .hecke import (
    PrimeFamilyParams,
    TauTable,
    delta_series,
    eigenform_check,
    hecke_Tp,
    legendre,
    verify_theorem3_i,
    verify_theorem3_ii,
    verify_theorem3_iii,
    verify_theorem4,
)
from .partitions import Pod2Table, pod2_dp, pod2_enumerate, pod2_series_check, pod2_table
from .report import VerificationReport
from .series import EtaQuotientSpec, TruncatedSeries, eta_product, expand_eta_quotient, make_series

__version__ = "0.1.0"
