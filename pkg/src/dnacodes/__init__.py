"""Constrained codes for DNA storage: run-length limits, GC balance and
single indel/edit correction."""

from .constrained import ConstrainedParams, decode_constrained, encode_constrained
from .error_control import decode_edit, decode_indel, encode_edit, encode_indel
from .framing import decode_file, encode_file, make_codec

__version__ = "0.1.0"

__all__ = [
    "ConstrainedParams",
    "encode_constrained",
    "decode_constrained",
    "encode_indel",
    "decode_indel",
    "encode_edit",
    "decode_edit",
    "make_codec",
    "encode_file",
    "decode_file",
]
