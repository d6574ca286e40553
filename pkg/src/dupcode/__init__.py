"""Codes correcting fixed-length tandem duplications (zero-block insertions)."""

from dupcode.words import RunProfile, Word, assemble, phi, phi_inv, run_decomposition, weight

__all__ = [
    "RunProfile",
    "Word",
    "assemble",
    "phi",
    "phi_inv",
    "run_decomposition",
    "weight",
]

__version__ = "0.1.0"
