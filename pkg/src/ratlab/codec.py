"""Canonical binary encoding of machines.

States, symbols, and moves are numbered; a number n is written in unary as
0^(n+1).  Fields within a transition are separated by a single 1, transitions
by 11, and the table is terminated by 111 — so no 111 can appear earlier, and
arbitrary bits after the terminator are ignored padding.  A fixed-order
header (kind, tape count, start, accept, random-access, blank, |input
alphabet|, |tape alphabet|) precedes the table in the same scheme.
"""

from __future__ import annotations

from dataclasses import dataclass

from .machine import (
    DTM,
    INDEX_BLANK,
    INDEX_ONE,
    INDEX_ZERO,
    RATM,
    MachineSpec,
    Rule,
    validate_machine,
)

_MOVE_NUM = {"L": 0, "S": 1, "R": 2}
_INDEX_NUM = {INDEX_BLANK: 0, INDEX_ZERO: 1, INDEX_ONE: 2}
_KIND_NUM = {RATM: 0, DTM: 1}


class DecodeError(Exception):
    def __init__(self, position: int, message: str):
        super().__init__(f"bit {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class MachineCode:
    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError("machine code must be a 0/1 string")

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class DecodedMachine:
    spec: MachineSpec
    code_length: int  # bits consumed up to and including the 111 terminator
    table_bits: int  # size of the transition-table region scanned per lookup


def _state_numbering(spec: MachineSpec) -> dict[str, int]:
    ordered: list[str] = []
    seeds = [spec.start, spec.accept]
    if spec.random_access is not None:
        seeds.append(spec.random_access)
    for state in [*seeds, *spec.states]:
        if state not in ordered:
            ordered.append(state)
    return {state: i for i, state in enumerate(ordered)}


def _symbol_numbering(spec: MachineSpec) -> dict[str, int]:
    ordered = [spec.blank, *spec.input_alphabet]
    for sym in spec.tape_alphabet:
        if sym not in ordered:
            ordered.append(sym)
    return {sym: i for i, sym in enumerate(ordered)}


def _unary(n: int) -> str:
    return "0" * (n + 1)


def encode(spec: MachineSpec) -> MachineCode:
    """Deterministic code of a valid machine, injective up to renaming."""
    problems = validate_machine(spec)
    if problems:
        raise ValueError(f"refusing to encode invalid machine: {problems[0]}")
    states = _state_numbering(spec)
    symbols = _symbol_numbering(spec)
    header = [
        _KIND_NUM[spec.kind],
        spec.tape_count,
        states[spec.start],
        states[spec.accept],
        states[spec.random_access] if spec.random_access is not None else 0,
        symbols[spec.blank],
        len(spec.input_alphabet),
        len(symbols),
    ]
    blocks = ["1".join(_unary(f) for f in header)]
    entries = sorted(
        spec.delta.items(),
        key=lambda kv: (states[kv[0][0]], tuple(symbols[s] for s in kv[0][1])),
    )
    for (state, reads), rule in entries:
        fields = [states[state]]
        fields += [symbols[s] for s in reads]
        fields.append(states[rule.state])
        fields += [symbols[s] for s in rule.writes]
        if spec.is_ratm:
            fields += [_INDEX_NUM[s] for s in rule.index_writes]
        fields += [_MOVE_NUM[m] for m in rule.moves]
        blocks.append("1".join(_unary(f) for f in fields))
    return MachineCode("11".join(blocks) + "111")


def _parse_blocks(bits: str) -> tuple[list[list[int]], int]:
    """Unary/separator scanner: returns field blocks and consumed length."""
    blocks: list[list[int]] = [[]]
    i = 0
    n = len(bits)
    while True:
        if i >= n:
            raise DecodeError(n, "code ends without 111 terminator")
        if bits[i] == "1":
            raise DecodeError(i, "expected a unary field starting with 0")
        zeros = 0
        while i < n and bits[i] == "0":
            zeros += 1
            i += 1
        ones = 0
        while i < n and bits[i] == "1":
            ones += 1
            if ones == 3:
                blocks[-1].append(zeros - 1)
                return blocks, i + 1
            i += 1
        if i >= n:
            raise DecodeError(n, "code ends without 111 terminator")
        blocks[-1].append(zeros - 1)
        if ones == 2:
            blocks.append([])
        elif ones != 1:
            raise DecodeError(i, "malformed separator")


def decode_info(code: MachineCode) -> DecodedMachine:
    bits = code.bits
    blocks, consumed = _parse_blocks(bits)
    header = blocks[0]
    if len(header) != 8:
        raise DecodeError(0, f"header has {len(header)} fields, expected 8")
    kind_num, k, q0, qf, qa, blank_idx, sigma_size, gamma_size = header
    if kind_num not in (0, 1):
        raise DecodeError(0, f"unknown kind number {kind_num}")
    kind = RATM if kind_num == 0 else DTM
    if k < 2:
        raise DecodeError(0, f"tape count {k} below 2")
    if blank_idx != 0:
        raise DecodeError(0, "blank symbol must be numbered 0")
    if sigma_size + 1 > gamma_size:
        raise DecodeError(0, "input alphabet larger than tape alphabet allows")

    def symbol_name(num: int) -> str:
        if num == 0:
            return "B"
        if num <= sigma_size:
            return str(num - 1)
        return f"g{num}"

    def index_name(num: int, pos_hint: int) -> str:
        try:
            return (INDEX_BLANK, INDEX_ZERO, INDEX_ONE)[num]
        except IndexError:
            raise DecodeError(pos_hint, f"index-write number {num} outside 0..2")

    moves = ("L", "S", "R")
    fields_per_entry = (5 * k + 1) if kind == RATM else (3 * k + 1)
    max_state = max([q0, qf, qa], default=0)
    delta: dict[tuple[str, tuple[str, ...]], Rule] = {}
    for entry_no, fields in enumerate(blocks[1:], start=1):
        if len(fields) != fields_per_entry:
            raise DecodeError(
                0, f"transition {entry_no} has {len(fields)} fields, expected {fields_per_entry}")
        for sym_num in fields[1:k + 1] + fields[k + 2:2 * k + 1]:
            if sym_num >= gamma_size:
                raise DecodeError(0, f"transition {entry_no}: symbol number {sym_num} out of range")
        it = iter(fields)
        src = next(it)
        reads = tuple(symbol_name(next(it)) for _ in range(k))
        dst = next(it)
        writes = tuple(symbol_name(next(it)) for _ in range(k - 1))
        if kind == RATM:
            index_writes = tuple(index_name(next(it), 0) for _ in range(k))
            move_count = 2 * k
        else:
            index_writes = ()
            move_count = k
        mv = []
        for _ in range(move_count):
            num = next(it)
            if num > 2:
                raise DecodeError(0, f"transition {entry_no}: move number {num} outside 0..2")
            mv.append(moves[num])
        max_state = max(max_state, src, dst)
        key = (f"q{src}", reads)
        if key in delta:
            raise DecodeError(0, f"transition {entry_no}: duplicate lookup key")
        delta[key] = Rule(f"q{dst}", writes, index_writes, tuple(mv))

    states = tuple(f"q{i}" for i in range(max_state + 1))
    tape_alphabet = tuple(symbol_name(i) for i in range(gamma_size))
    spec = MachineSpec(
        kind=kind,
        tape_count=k,
        states=states,
        input_alphabet=tuple(str(i) for i in range(sigma_size)),
        tape_alphabet=tape_alphabet,
        blank="B",
        start=f"q{q0}",
        accept=f"q{qf}",
        random_access=f"q{qa}" if kind == RATM else None,
        delta=delta,
    )
    header_bits = len("1".join(_unary(f) for f in header))
    return DecodedMachine(spec, consumed, consumed - header_bits - 3)


def decode(code: MachineCode) -> MachineSpec:
    """Decode a well-formed code; trailing padding after 111 is ignored."""
    return decode_info(code).spec
