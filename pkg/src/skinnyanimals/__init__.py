"""Exact counting of fixed hexagonal and square lattice animals whose columns
are confined to a strip or to per-column height boards.

The core pipeline: column cross-sections become letters, words over letters
become animals, and a weighted transfer process turns words into counting
series and closed-form rational generating functions, all in exact integer
arithmetic.
"""

__version__ = "0.1.0"


class EnvelopeError(ValueError):
    """A request exceeds the documented computational envelope."""


class InputFileError(ValueError):
    """An input document failed validation."""
