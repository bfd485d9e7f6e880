"""Catalog of identities, exact checking over index ranges, and reports."""

from .catalog import AS_PRINTED, CORRECTED, IdentitySpec, catalog, catalog_hash, lookup, sibling
from .engine import (
    CheckOutcome,
    ConfigError,
    Counterexample,
    ParamsOutOfScope,
    VerificationReport,
    VerifyConfig,
    check,
    documented_errata,
    format_value,
    random_params,
    verify_all,
)
from .env import Env, FastEnv, OracleEnv

__all__ = [
    "AS_PRINTED",
    "CORRECTED",
    "IdentitySpec",
    "catalog",
    "catalog_hash",
    "lookup",
    "sibling",
    "CheckOutcome",
    "ConfigError",
    "Counterexample",
    "ParamsOutOfScope",
    "VerificationReport",
    "VerifyConfig",
    "check",
    "documented_errata",
    "format_value",
    "random_params",
    "verify_all",
    "Env",
    "FastEnv",
    "OracleEnv",
]
