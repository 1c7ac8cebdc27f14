"""Exact arithmetic for a q-deformed quantum-group family, its Galois
objects and the reflected quantum group.

The heavy lifting happens in the C++ extension ``_qgalois``; this wrapper
adds dict-returning conveniences around the JSON report plumbing.
"""

import json

try:
    from ._qgalois import (  # type: ignore[attr-defined]
        ConfigError,
        ParseLiteralError,
        Session as _Session,
        SolverError,
        VerificationError,
        gaussian_binomial,
        scalar,
        structure_maps,
    )
except ImportError:  # build-tree layout used by the smoke tests
    from _qgalois import (  # type: ignore[no-redef]
        ConfigError,
        ParseLiteralError,
        Session as _Session,
        SolverError,
        VerificationError,
        gaussian_binomial,
        scalar,
        structure_maps,
    )

__all__ = [
    "ConfigError",
    "ParseLiteralError",
    "Session",
    "SolverError",
    "VerificationError",
    "gaussian_binomial",
    "scalar",
    "structure_maps",
]


class Session(_Session):
    """One (n, m, lambda, mu) configuration with lazily built structure."""

    def verify(self, suites=("all",)):
        """Run the selected suites; returns the report as a dict."""
        return json.loads(self._verify_json(list(suites)))

    def table(self):
        """The derived-structure table as a dict."""
        return json.loads(self._table_json()).get("table", {})
