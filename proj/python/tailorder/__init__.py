from ._tailorder import (
    Copula,
    DescriptorError,
    DimensionError,
    DomainError,
    NumericalError,
    build,
    check_loc,
    check_tdo,
    estimate_tdf,
    run_cli,
    search_cone_order,
)

__all__ = [
    "Copula",
    "DescriptorError",
    "DimensionError",
    "DomainError",
    "NumericalError",
    "build",
    "check_loc",
    "check_tdo",
    "estimate_tdf",
    "run_cli",
    "search_cone_order",
]
