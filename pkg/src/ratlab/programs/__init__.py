"""Curated library of concrete machine programs."""

from .basic import (
    always_accept_machine,
    always_reject_machine,
    cell_probe_machine,
    first_bit_machine,
    flip_machine,
    identity_dtm,
    identity_machine,
    looper_machine,
    marker_machine,
    parity_dtm,
)
from .length import input_length_machine

__all__ = [
    "input_length_machine",
    "always_accept_machine",
    "always_reject_machine",
    "cell_probe_machine",
    "first_bit_machine",
    "flip_machine",
    "identity_dtm",
    "identity_machine",
    "looper_machine",
    "marker_machine",
    "parity_dtm",
]
