"""Machine descriptions and single-step operational semantics.

A random-access machine here is a k-tape machine (tape 1 = read-only input,
tape k = output) that additionally carries k write-only binary index tapes.
Entering the distinguished random-access state teleports every non-index
head to the address currently spelled on its index tape.  The deterministic
variant ("dtm") is the same description minus the index machinery, so both
kinds run on one engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional

LEFT = "L"
STAY = "S"
RIGHT = "R"
MOVES = (LEFT, STAY, RIGHT)

# Index tapes have a fixed private alphabet: literal bits plus blank.
INDEX_ZERO = "0"
INDEX_ONE = "1"
INDEX_BLANK = "B"

RATM = "ratm"
DTM = "dtm"


class BadAddressError(Exception):
    """An index tape's readable prefix is not a binary string."""


class Rule(NamedTuple):
    """Right-hand side of one transition.

    writes covers tapes 2..k (the input tape is never written); index_writes
    is a k-tuple over {0,1,B} for ratm kind and empty for dtm; moves has 2k
    entries for ratm (non-index heads then index heads) and k for dtm.
    """

    state: str
    writes: tuple[str, ...]
    index_writes: tuple[str, ...]
    moves: tuple[str, ...]


@dataclass(frozen=True)
class MachineSpec:
    kind: str
    tape_count: int
    states: tuple[str, ...]
    input_alphabet: tuple[str, ...]
    tape_alphabet: tuple[str, ...]
    blank: str
    start: str
    accept: str
    random_access: Optional[str]
    delta: Mapping[tuple[str, tuple[str, ...]], Rule]

    @property
    def is_ratm(self) -> bool:
        return self.kind == RATM


@dataclass
class TapeStore:
    """Sparse one-way-infinite tape: only non-blank cells are stored."""

    cells: dict[int, str] = field(default_factory=dict)
    head: int = 0
    writable: bool = True

    def read(self) -> Optional[str]:
        return self.cells.get(self.head)

    def write(self, symbol: Optional[str]) -> None:
        if symbol is None:
            self.cells.pop(self.head, None)
        else:
            self.cells[self.head] = symbol

    def move(self, direction: str) -> None:
        if direction == RIGHT:
            self.head += 1
        elif direction == LEFT and self.head > 0:
            self.head -= 1

    def rightmost_used(self) -> int:
        return max(self.cells) if self.cells else -1

    def copy(self) -> "TapeStore":
        return TapeStore(dict(self.cells), self.head, self.writable)


@dataclass
class Configuration:
    state: str
    tapes: list[TapeStore]
    index_tapes: list[TapeStore]
    steps: int = 0

    def copy(self) -> "Configuration":
        return Configuration(
            self.state,
            [t.copy() for t in self.tapes],
            [t.copy() for t in self.index_tapes],
            self.steps,
        )


class Halt(NamedTuple):
    """Signal returned by step() when no further transition applies."""

    reason: str  # "no-transition" or "bad-address"


def read_address(tape: TapeStore) -> int:
    """Decode the binary address on an index tape.

    Cells 0,1,2,... up to (exclusive) the first blank, most significant bit
    first; the empty prefix decodes to 0.
    """
    value = 0
    i = 0
    cells = tape.cells
    while i in cells:
        bit = cells[i]
        if bit == INDEX_ONE:
            value = value * 2 + 1
        elif bit == INDEX_ZERO:
            value = value * 2
        else:
            raise BadAddressError(f"non-binary symbol {bit!r} at index cell {i}")
        i += 1
    return value


def initial_configuration(spec: MachineSpec, input_symbols: Iterable[str]) -> Configuration:
    tapes = [TapeStore() for _ in range(spec.tape_count)]
    tapes[0].writable = False
    for i, sym in enumerate(input_symbols):
        tapes[0].cells[i] = sym
    index_tapes = (
        [TapeStore() for _ in range(spec.tape_count)] if spec.is_ratm else []
    )
    return Configuration(spec.start, tapes, index_tapes)


def step(spec: MachineSpec, config: Configuration):
    """Apply one transition in place; returns the configuration or a Halt.

    Writes happen before head moves, and the random-access repositioning of
    all non-index heads is bundled into the same step that enters the
    random-access state.
    """
    if config.state == spec.accept:
        raise ValueError("step() called on an accepting configuration")
    blank = spec.blank
    symbols = tuple(t.cells.get(t.head, blank) for t in config.tapes)
    rule = spec.delta.get((config.state, symbols))
    if rule is None:
        return Halt("no-transition")

    tapes = config.tapes
    for i, sym in enumerate(rule.writes, start=1):
        tapes[i].write(None if sym == blank else sym)
    if spec.is_ratm:
        for tape, sym in zip(config.index_tapes, rule.index_writes):
            tape.write(None if sym == INDEX_BLANK else sym)
        k = spec.tape_count
        for i in range(k):
            tapes[i].move(rule.moves[i])
            config.index_tapes[i].move(rule.moves[k + i])
    else:
        for tape, mv in zip(tapes, rule.moves):
            tape.move(mv)

    config.state = rule.state
    config.steps += 1

    if spec.is_ratm and rule.state == spec.random_access:
        try:
            for tape, index in zip(tapes, config.index_tapes):
                tape.head = read_address(index)
        except BadAddressError:
            return Halt("bad-address")
    return config


def validate_machine(spec: MachineSpec) -> list[str]:
    """Well-formedness report; an empty list means the spec is valid."""
    report: list[str] = []
    if spec.kind not in (RATM, DTM):
        report.append(f"unknown kind {spec.kind!r}")
        return report
    k = spec.tape_count
    if k < 2:
        report.append("tape_count below 2")
    states = set(spec.states)
    gamma = set(spec.tape_alphabet)
    sigma = set(spec.input_alphabet)
    if not states:
        report.append("empty state set")
    if spec.start not in states:
        report.append(f"start state {spec.start!r} not in states")
    if spec.accept not in states:
        report.append(f"accept state {spec.accept!r} not in states")
    if spec.is_ratm:
        if spec.random_access is None:
            report.append("ratm requires a random-access state")
        elif spec.random_access not in states:
            report.append(f"random-access state {spec.random_access!r} not in states")
    elif spec.random_access is not None:
        report.append("dtm must not declare a random-access state")
    if spec.blank not in gamma:
        report.append(f"blank {spec.blank!r} not in tape alphabet")
    if spec.blank in sigma:
        report.append(f"blank {spec.blank!r} must not be an input symbol")
    if not sigma <= gamma:
        report.append("input alphabet not contained in tape alphabet")

    moves_len = 2 * k if spec.is_ratm else k
    for (state, read), rule in spec.delta.items():
        entry = f"delta entry ({state}, {','.join(read)})"
        if state not in states:
            report.append(f"{entry}: unknown source state")
        if len(read) != k:
            report.append(f"{entry}: reads {len(read)} symbols, expected {k}")
        for sym in read:
            if sym not in gamma:
                report.append(f"{entry}: read symbol {sym!r} not in tape alphabet")
        if rule.state not in states:
            report.append(f"{entry}: unknown target state {rule.state!r}")
        if len(rule.writes) == k:
            report.append(f"input tape written at {entry}")
        elif len(rule.writes) != k - 1:
            report.append(f"{entry}: writes {len(rule.writes)} symbols, expected {k - 1}")
        for sym in rule.writes:
            if sym not in gamma:
                report.append(f"{entry}: written symbol {sym!r} not in tape alphabet")
        if spec.is_ratm:
            if len(rule.index_writes) != k:
                report.append(f"{entry}: {len(rule.index_writes)} index writes, expected {k}")
            for sym in rule.index_writes:
                if sym not in (INDEX_ZERO, INDEX_ONE, INDEX_BLANK):
                    report.append(f"{entry}: index write {sym!r} outside {{0,1,B}}")
        elif rule.index_writes:
            report.append(f"{entry}: dtm transition carries index writes")
        if len(rule.moves) != moves_len:
            report.append(f"{entry}: {len(rule.moves)} moves, expected {moves_len}")
        for mv in rule.moves:
            if mv not in MOVES:
                report.append(f"{entry}: bad move {mv!r}")
    return report


# ---------------------------------------------------------------------------
# Text format
#
# kind ratm|dtm / tapes k / states ... / start q / accept q / random q /
# blank sym / input-alphabet ... / tape-alphabet ... / delta lines.  '#'
# starts a comment.

class MachineParseError(Exception):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_tuple(text: str, line_no: int) -> tuple[str, ...]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise MachineParseError(line_no, f"expected parenthesised tuple, got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return tuple(part.strip() for part in inner.split(","))


def parse_machine(text: str) -> MachineSpec:
    """Parse the line-oriented machine text format; raises MachineParseError."""
    fields: dict[str, object] = {}
    delta: dict[tuple[str, tuple[str, ...]], Rule] = {}
    kind: Optional[str] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "kind":
            if rest not in (RATM, DTM):
                raise MachineParseError(line_no, f"kind must be ratm or dtm, got {rest!r}")
            kind = rest
            fields["kind"] = rest
        elif key == "tapes":
            try:
                fields["tape_count"] = int(rest)
            except ValueError:
                raise MachineParseError(line_no, f"tapes expects an integer, got {rest!r}")
        elif key == "states":
            fields["states"] = tuple(rest.split())
        elif key == "start":
            fields["start"] = rest
        elif key == "accept":
            fields["accept"] = rest
        elif key == "random":
            fields["random_access"] = rest
        elif key == "blank":
            fields["blank"] = rest
        elif key == "input-alphabet":
            fields["input_alphabet"] = tuple(rest.split())
        elif key == "tape-alphabet":
            fields["tape_alphabet"] = tuple(rest.split())
        elif key == "delta":
            lhs, arrow, rhs = rest.partition("->")
            if not arrow:
                raise MachineParseError(line_no, "delta line missing '->'")
            lhs_parts = lhs.strip().split(None, 1)
            if len(lhs_parts) != 2:
                raise MachineParseError(line_no, "delta left side needs a state and a tuple")
            state = lhs_parts[0]
            reads = _parse_tuple(lhs_parts[1], line_no)
            rhs_parts = rhs.strip().split(None, 1)
            if len(rhs_parts) != 2:
                raise MachineParseError(line_no, "delta right side needs a state and tuples")
            new_state = rhs_parts[0]
            groups = []
            depth_buf = ""
            for chunk in rhs_parts[1].split():
                depth_buf = f"{depth_buf} {chunk}".strip()
                if depth_buf.count("(") == depth_buf.count(")"):
                    groups.append(depth_buf)
                    depth_buf = ""
            if depth_buf:
                raise MachineParseError(line_no, "unbalanced parentheses in delta right side")
            tuples = [_parse_tuple(g, line_no) for g in groups]
            if kind == DTM:
                if len(tuples) != 2:
                    raise MachineParseError(line_no, "dtm delta needs (writes) (moves)")
                rule = Rule(new_state, tuples[0], (), tuples[1])
            else:
                if len(tuples) != 3:
                    raise MachineParseError(line_no, "ratm delta needs (writes) (index) (moves)")
                rule = Rule(new_state, tuples[0], tuples[1], tuples[2])
            key_pair = (state, reads)
            if key_pair in delta:
                raise MachineParseError(line_no, f"duplicate delta entry for {key_pair}")
            delta[key_pair] = rule
        else:
            raise MachineParseError(line_no, f"unknown directive {key!r}")

    required = ["kind", "tape_count", "states", "start", "accept", "blank",
                "input_alphabet", "tape_alphabet"]
    for name in required:
        if name not in fields:
            raise MachineParseError(0, f"missing {name.replace('_', '-')} directive")
    if fields["kind"] == RATM and "random_access" not in fields:
        raise MachineParseError(0, "ratm definition missing random directive")
    fields.setdefault("random_access", None)
    return MachineSpec(delta=delta, **fields)  # type: ignore[arg-type]


def render_machine(spec: MachineSpec) -> str:
    lines = [
        f"kind {spec.kind}",
        f"tapes {spec.tape_count}",
        f"states {' '.join(spec.states)}",
        f"start {spec.start}",
        f"accept {spec.accept}",
    ]
    if spec.random_access is not None:
        lines.append(f"random {spec.random_access}")
    lines.append(f"blank {spec.blank}")
    lines.append(f"input-alphabet {' '.join(spec.input_alphabet)}")
    lines.append(f"tape-alphabet {' '.join(spec.tape_alphabet)}")
    for (state, reads), rule in spec.delta.items():
        parts = [f"delta {state} ({','.join(reads)}) -> {rule.state} ({','.join(rule.writes)})"]
        if spec.is_ratm:
            parts.append(f"({','.join(rule.index_writes)})")
        parts.append(f"({','.join(rule.moves)})")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
