"""Fake degrees and polynomial Gelfand models for finite Coxeter groups.

Thin wrapper around the compiled extension; see the README for the CLI and
the underlying C++ library.
"""

try:
    from ._gelmod import (  # type: ignore[import-not-found]
        GelmodError,
        Group,
        factors,
        fake_degrees,
        verdict,
        is_gelfand,
        gelfand_dimension,
        model_dimensions,
        run,
    )
except ImportError:  # running against a build tree, extension on sys.path
    from _gelmod import (  # type: ignore[import-not-found]
        GelmodError,
        Group,
        factors,
        fake_degrees,
        verdict,
        is_gelfand,
        gelfand_dimension,
        model_dimensions,
        run,
    )

__all__ = [
    "GelmodError",
    "Group",
    "factors",
    "fake_degrees",
    "verdict",
    "is_gelfand",
    "gelfand_dimension",
    "model_dimensions",
    "run",
]

__version__ = "0.1.0"
