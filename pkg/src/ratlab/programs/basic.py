"""Small hand-written machines: demo programs and corpus specimens."""

from __future__ import annotations

from ..machine import DTM, MachineSpec
from .builder import ProgramBuilder

BITS = ("0", "1")


def identity_machine() -> MachineSpec:
    """2-tape machine copying its input to the output tape; accepts everything."""
    b = ProgramBuilder(2, start="copy", accept="done")
    for bit in BITS:
        b.add("copy", {1: bit, 2: "B"}, "copy", writes={2: bit}, moves={1: "R", 2: "R"})
    b.add("copy", {1: "B", 2: "B"}, "done")
    return b.build()


def identity_dtm() -> MachineSpec:
    b = ProgramBuilder(2, start="copy", accept="done")
    for bit in BITS:
        b.add("copy", {1: bit, 2: "B"}, "copy", writes={2: bit}, moves={1: "R", 2: "R"})
    b.add("copy", {1: "B", 2: "B"}, "done")
    return b.build(DTM)


def flip_machine() -> MachineSpec:
    """Writes the bitwise complement of the input to the output tape."""
    b = ProgramBuilder(2, start="copy", accept="done")
    b.add("copy", {1: "0", 2: "B"}, "copy", writes={2: "1"}, moves={1: "R", 2: "R"})
    b.add("copy", {1: "1", 2: "B"}, "copy", writes={2: "0"}, moves={1: "R", 2: "R"})
    b.add("copy", {1: "B", 2: "B"}, "done")
    return b.build()


def first_bit_machine() -> MachineSpec:
    """Accepts exactly the inputs whose first bit is 1, in one step."""
    b = ProgramBuilder(2, start="look", accept="yes")
    b.add("look", {1: "1", 2: "B"}, "yes")
    return b.build()


def always_accept_machine() -> MachineSpec:
    """Accepts any input immediately (one step)."""
    b = ProgramBuilder(2, start="go", accept="yes")
    b.add("go", {1: ("0", "1", "B"), 2: "B"}, "yes")
    return b.build()


def always_reject_machine() -> MachineSpec:
    """Halts outside the accept state on any input, after one step."""
    b = ProgramBuilder(2, start="go", accept="yes")
    b.add("go", {1: ("0", "1", "B"), 2: "B"}, "dead")
    return b.build()


def parity_dtm() -> MachineSpec:
    """DTM accepting inputs with an even number of 1s; output echoes parity."""
    b = ProgramBuilder(2, start="even", accept="ok")
    b.add("even", {1: "0", 2: "B"}, "even", moves={1: "R"})
    b.add("even", {1: "1", 2: "B"}, "odd", moves={1: "R"})
    b.add("odd", {1: "0", 2: "B"}, "odd", moves={1: "R"})
    b.add("odd", {1: "1", 2: "B"}, "even", moves={1: "R"})
    b.add("even", {1: "B", 2: "B"}, "ok", writes={2: "0"})
    return b.build(DTM)


def cell_probe_machine(address: int) -> MachineSpec:
    """Jumps the input head to a fixed cell and accepts iff it holds 1."""
    bits = format(address, "b") if address else ""
    b = ProgramBuilder(2, start="w0", accept="yes")
    states = [f"w{i}" for i in range(len(bits))] + ["ra"]
    for i, bit in enumerate(bits):
        b.add(states[i], {1: ("0", "1", "B"), 2: "B"}, states[i + 1],
              index={1: bit}, moves={("i", 1): "R"})
    if not bits:
        b.add("w0", {1: ("0", "1", "B"), 2: "B"}, "ra")
    b.add("ra", {1: "1", 2: "B"}, "yes")
    return b.build()


def looper_machine() -> MachineSpec:
    """Never halts: bounces the work head right forever."""
    b = ProgramBuilder(2, start="spin", accept="never")
    b.add("spin", {1: ("0", "1", "B"), 2: "B"}, "spin", moves={2: "R"})
    return b.build()


def marker_machine() -> MachineSpec:
    """3-tape specimen with a work symbol: marks input 1s on the work tape."""
    b = ProgramBuilder(3, work_symbols=("m",), start="scan", accept="done")
    b.add("scan", {1: "1", 2: "B", 3: "B"}, "scan",
          writes={2: "m", 3: "1"}, moves={1: "R", 2: "R", 3: "R"})
    b.add("scan", {1: "0", 2: "B", 3: "B"}, "scan",
          writes={3: "0"}, moves={1: "R", 3: "R"})
    b.add("scan", {1: "B", 2: "B", 3: "B"}, "done")
    return b.build()
