"""Random-access Turing machine laboratory."""

from .machine import (
    MachineSpec,
    Rule,
    TapeStore,
    Configuration,
    parse_machine,
    render_machine,
    read_address,
    step,
    validate_machine,
)
from .simulator import RunReport, equivalent_on, run, trace

__all__ = [
    "MachineSpec",
    "Rule",
    "TapeStore",
    "Configuration",
    "parse_machine",
    "render_machine",
    "read_address",
    "step",
    "validate_machine",
    "RunReport",
    "equivalent_on",
    "run",
    "trace",
]
