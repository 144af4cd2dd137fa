"""A machine that outputs the binary length of its input in O(log n) steps.

Strategy: exponential probing over input addresses to bracket n = |x|, then
an in-place most-significant-bit-first search for the first blank cell, whose
address is exactly n.  Random access is the only way to read the input here,
and every jump resets all non-index heads, so the construction leans on three
disciplines:

* the probe address lives on the input's index tape and is edited only under
  its head (append digits during probing, overwrite single digits during the
  search), so no jump ever needs the address re-written;
* unary rulers and binary counters live on work tapes whose index tapes stay
  empty, so every jump parks their heads on cell 0 where the counters keep
  their least significant digit;
* the output position t is mirrored, digit edit by digit edit, from a
  readable binary counter onto the output's index tape (most significant bit
  first, zero-padded), so the output head can be teleported to cell t.

Tapes: 1 input, 2 countdown register A, 3 unary ruler B, 4 tick counter T,
5 mode cell M (dispatch token for the shared random-access state), 6 output.

Checkpointed probing doubles the ruler between probes (intervals 1,1,2,4,...)
so probe addresses square while ruler maintenance stays linear; the ruler at
the final checkpoint has exactly the width W of the address search.
"""

from __future__ import annotations

from functools import lru_cache

from ..machine import MachineSpec
from .builder import ProgramBuilder

ANY_IN = ("0", "1", "B")
ANY_OUT = ("0", "1", "B")


@lru_cache(maxsize=None)
def input_length_machine() -> MachineSpec:
    b = ProgramBuilder(
        6,
        work_symbols=("U", "V", "z", "o", "mx", "ms0", "ms1", "w0", "w1", "wf"),
        start="i0",
        accept="acc",
        domains={1: ANY_IN, 6: ANY_OUT},
    )

    def add(state, reads, new_state, **kw):
        b.add(state, reads, new_state, **kw)

    # --- bootstrap: mark ruler tapes, write probe address 1, probe cell 1.
    add("i0", {1: ANY_IN, 2: "B", 3: "B", 4: "B", 5: "B", 6: "B"}, "ra",
        writes={2: "V", 3: "V", 5: "mx"},
        index={1: "1"},
        moves={2: "R", ("i", 1): "R"})

    # --- probe rounds: consume one ruler cell of B per appended address zero.
    add("round", {1: ANY_IN, 2: "B", 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "round",
        index={1: "0"},
        moves={3: "R", ("i", 1): "R"})
    add("round", {1: ANY_IN, 2: "B", 3: "B", 4: "B", 5: "mx", 6: "B"}, "ra")

    # --- checkpoint refill (probe hit a data cell): B := copy(A); A := A + |B|.
    add("c1", {1: ANY_IN, 2: ("V", "U"), 3: ("V", "U", "B"), 4: "B", 5: "mx", 6: "B"}, "c1",
        writes={3: lambda r: r[1]},
        moves={2: "R", 3: "R"})
    add("c1", {1: ANY_IN, 2: "B", 3: ("V", "U", "B"), 4: "B", 5: "mx", 6: "B"}, "c2pre",
        moves={3: "L"})
    add("c2pre", {1: ANY_IN, 2: "B", 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "c2")
    add("c2", {1: ANY_IN, 2: "B", 3: "U", 4: "B", 5: "mx", 6: "B"}, "c2",
        writes={2: "U"},
        moves={2: "R", 3: "L"})
    add("c2", {1: ANY_IN, 2: "B", 3: "V", 4: "B", 5: "mx", 6: "B"}, "round",
        writes={2: "U"},
        moves={2: "R"})

    # --- final checkpoint (probe hit blank): copy A into B one last time.
    add("fc1", {1: ANY_IN, 2: ("V", "U"), 3: ("V", "U", "B"), 4: "B", 5: "mx", 6: "B"}, "fc1",
        writes={3: lambda r: r[1]},
        moves={2: "R", 3: "R"})
    add("fc1", {1: ANY_IN, 2: "B", 3: ("V", "U", "B"), 4: "B", 5: "mx", 6: "B"}, "fc3pre",
        moves={3: "L", ("i", 1): "L"})
    # fc3: walking B back drives address := 1^W and output index := 0^W.
    add("fc3pre", {1: ANY_IN, 2: "B", 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "fc3")
    add("fc3", {1: ANY_IN, 2: "B", 3: "U", 4: "B", 5: "mx", 6: "B"}, "fc3",
        index={1: "1", 6: "0"},
        moves={3: "L", ("i", 1): "L", ("i", 6): "R"})
    add("fc3", {1: ANY_IN, 2: "B", 3: "V", 4: "B", 5: "mx", 6: "B"}, "fc4pre0",
        index={1: "1", 6: "0"},
        moves={("i", 1): "L", ("i", 6): "R"})
    # fc4: walking B forward counts W into register A (binary, LSB at cell 0).
    add("fc4pre0", {1: ANY_IN, 2: ("V", "U", "B"), 3: "V", 4: "B", 5: "mx", 6: "B"}, "fc4pre",
        index={1: "1"}, moves={2: "L"})
    add("fc4pre", {1: ANY_IN, 2: "U", 3: "V", 4: "B", 5: "mx", 6: "B"}, "fc4pre",
        index={1: "1"}, moves={2: "L"})
    add("fc4pre", {1: ANY_IN, 2: "V", 3: "V", 4: "B", 5: "mx", 6: "B"}, "fc4", index={1: "1"})
    add("fc4", {1: ANY_IN, 2: ("z", "o", "V", "U"), 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "fa0",
        index={1: "1"})
    add("fc4", {1: ANY_IN, 2: ("z", "o", "V", "U"), 3: "B", 4: "B", 5: "mx", 6: "B"}, "p3u_dec0",
        index={1: "1"})
    # register increment with manual return walk (no jumps inside fc4)
    add("fa0", {1: ANY_IN, 2: ("V", "B", "z"), 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "fanext",
        writes={2: "o"}, index={1: "1"})
    add("fa0", {1: ANY_IN, 2: "o", 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "faH",
        writes={2: "z"}, index={1: "1"}, moves={2: "R"})
    add("faH", {1: ANY_IN, 2: "1", 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "faH",
        writes={2: "0"}, index={1: "1"}, moves={2: "R"})
    add("faH", {1: ANY_IN, 2: ("0", "U", "B"), 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "faret",
        writes={2: "1"}, index={1: "1"})
    add("faret", {1: ANY_IN, 2: ("0", "1"), 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "faret",
        index={1: "1"}, moves={2: "L"})
    add("faret", {1: ANY_IN, 2: ("z", "o"), 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "fanext",
        index={1: "1"})
    add("fanext", {1: ANY_IN, 2: ("z", "o"), 3: ("V", "U"), 4: "B", 5: "mx", 6: "B"}, "fc4",
        index={1: "1"}, moves={3: "R"})

    # --- address search: one probe per output digit, most significant first.
    # The countdown in A underflows after the W-th digit.  Index tape 1 holds
    # the candidate; its head rests on the digit under construction, so every
    # transition in the loop rewrites that digit explicitly.
    p3_modes = {"u": ("mx", "ms0"), "s": ("w0", "w1")}
    for flavor, modes in p3_modes.items():
        dec0 = f"p3{flavor}_dec0"
        decH = f"p3{flavor}_decH"
        prb = f"p3{flavor}_probe"
        add(dec0, {1: ANY_IN, 2: "o", 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes, 6: ANY_OUT}, prb,
            writes={2: "z"}, index={1: "1"})
        add(dec0, {1: ANY_IN, 2: "z", 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes, 6: ANY_OUT}, decH,
            writes={2: "o"}, index={1: "1"}, moves={2: "R"})
        add(decH, {1: ANY_IN, 2: "0", 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes, 6: ANY_OUT}, decH,
            writes={2: "1"}, index={1: "1"}, moves={2: "R"})
        add(decH, {1: ANY_IN, 2: "1", 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes, 6: ANY_OUT}, prb,
            writes={2: "0"}, index={1: "1"})
        # borrow ran past the register: all W digits are done
        if flavor == "u":
            add(decH, {1: ANY_IN, 2: ("U", "B"), 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes,
                       6: ANY_OUT}, "ra", writes={5: "wf"}, index={1: "1"})
        else:
            add(decH, {1: ANY_IN, 2: ("U", "B"), 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes,
                       6: ANY_OUT}, "acc", index={1: "1"})
        add(prb, {1: ANY_IN, 2: ("z", "o", "0", "1"), 3: ("V", "B"), 4: ("B", "z", "o"), 5: modes,
                  6: ANY_OUT}, "ra",
            writes={5: f"ms{0 if flavor == 'u' else 1}"}, index={1: "0"})

    # --- dispatch at the shared random-access state, keyed on the mode cell.
    probe_ctx = {2: "V", 3: "V", 4: "B", 6: "B"}
    add("ra", {1: ("0", "1"), 5: "mx", **probe_ctx}, "c1")
    add("ra", {1: "B", 5: "mx", **probe_ctx}, "fc1")
    search_ctx = {2: ("z", "o"), 3: "V", 4: ("B", "z", "o"), 6: "B"}
    # blank under the probed address: the tentative 0 stays; 1 otherwise
    add("ra", {1: "B", 5: "ms0", **search_ctx}, "p3u_dec0",
        index={1: "0"}, moves={("i", 1): "R"})
    add("ra", {1: ("0", "1"), 5: "ms0", **search_ctx}, "ra",
        writes={5: "w1"}, index={1: "1"}, moves={("i", 1): "R"})
    add("ra", {1: "B", 5: "ms1", **search_ctx}, "ra",
        writes={5: "w0"}, index={1: "0"}, moves={("i", 1): "R"})
    add("ra", {1: ("0", "1"), 5: "ms1", **search_ctx}, "ra",
        writes={5: "w1"}, index={1: "1"}, moves={("i", 1): "R"})
    # output jumps: write the digit at cell t, then advance the tick mirror
    for bit in ("0", "1"):
        add("ra", {1: ANY_IN, 2: ("z", "o"), 3: "V", 4: ("B", "z", "o"), 5: f"w{bit}",
                   6: "B"}, "ti0",
            writes={6: bit}, index={1: "1"}, moves={("i", 6): "L"})
    add("ra", {1: ANY_IN, 2: ("z", "o"), 3: "V", 4: ("B", "z", "o"), 5: "wf", 6: "B"}, "acc",
        writes={6: "0"})

    # --- tick: increment T (LSB at cell 0) mirroring digits onto index 6,
    # whose head walks the same distance in the opposite direction.
    tick_ctx = {1: ANY_IN, 3: "V", 5: ("w0", "w1"), 6: ANY_OUT}
    add("ti0", {2: ("z", "o"), 4: ("B", "z"), **tick_ctx}, "p3s_dec0",
        writes={4: "o"}, index={1: "1", 6: "1"}, moves={("i", 6): "R"})
    add("ti0", {2: ("z", "o"), 4: "o", **tick_ctx}, "tiH",
        writes={4: "z"}, index={1: "1", 6: "0"}, moves={4: "R", ("i", 6): "L"})
    add("tiH", {2: ("z", "o"), 4: "1", **tick_ctx}, "tiH",
        writes={4: "0"}, index={1: "1", 6: "0"}, moves={4: "R", ("i", 6): "L"})
    add("tiH", {2: ("z", "o"), 4: ("0", "B"), **tick_ctx}, "tret1",
        writes={4: "1"}, index={1: "1", 6: "1"})
    # walk back over the digits just written, rewriting them: the final carry
    # cell holds 1, everything above it holds 0
    add("tret1", {2: ("z", "o"), 4: ("0", "1"), **tick_ctx}, "tret0",
        index={1: "1", 6: "1"}, moves={4: "L", ("i", 6): "R"})
    add("tret0", {2: ("z", "o"), 4: ("0", "1"), **tick_ctx}, "tret0",
        index={1: "1", 6: "0"}, moves={4: "L", ("i", 6): "R"})
    add("tret0", {2: ("z", "o"), 4: ("z", "o"), **tick_ctx}, "p3s_dec0",
        index={1: "1", 6: "0"}, moves={("i", 6): "R"})

    return b.build()
