"""Oracle and table verification sweeps."""

from .checks import DEFAULT_LEVELS, Verifier, supported_types

__all__ = ["Verifier", "supported_types", "DEFAULT_LEVELS"]
