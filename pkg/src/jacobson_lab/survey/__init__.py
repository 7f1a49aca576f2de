"""Ring catalogs, verification reports and surveys."""

from jacobson_lab.survey.catalog import CatalogFilter, catalog, factor_key, local_catalog
from jacobson_lab.survey.report import (
    CSV_COLUMNS,
    FLAG_ORDER,
    FormulaValues,
    OracleStatus,
    OracleValue,
    OracleValues,
    VerificationReport,
    classify_ring,
    discrepancy_flags,
    run_oracles,
    run_survey,
    verify_ring,
    witness_document,
    write_csv,
)

__all__ = [
    "CSV_COLUMNS",
    "CatalogFilter",
    "FLAG_ORDER",
    "FormulaValues",
    "OracleStatus",
    "OracleValue",
    "OracleValues",
    "VerificationReport",
    "catalog",
    "classify_ring",
    "discrepancy_flags",
    "factor_key",
    "local_catalog",
    "run_oracles",
    "run_survey",
    "verify_ring",
    "witness_document",
    "write_csv",
]
