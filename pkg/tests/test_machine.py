"""Single-step semantics, validation, and the text format."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratlab.machine import (
    Halt,
    MachineParseError,
    MachineSpec,
    Rule,
    TapeStore,
    initial_configuration,
    parse_machine,
    read_address,
    render_machine,
    step,
    validate_machine,
)
from ratlab.programs import identity_machine, cell_probe_machine


def test_identity_machine_is_valid():
    assert validate_machine(identity_machine()) == []


def test_input_tape_write_is_reported():
    spec = identity_machine()
    bad_delta = {
        key: Rule(rule.state, ("x",) + rule.writes, rule.index_writes, rule.moves)
        for key, rule in spec.delta.items()
    }
    bad = MachineSpec(
        kind=spec.kind, tape_count=spec.tape_count, states=spec.states,
        input_alphabet=spec.input_alphabet, tape_alphabet=spec.tape_alphabet + ("x",),
        blank=spec.blank, start=spec.start, accept=spec.accept,
        random_access=spec.random_access, delta=bad_delta)
    report = validate_machine(bad)
    assert any("input tape written at delta entry" in line for line in report)


def test_tape_count_below_two_is_reported():
    spec = identity_machine()
    bad = MachineSpec(
        kind=spec.kind, tape_count=1, states=spec.states,
        input_alphabet=spec.input_alphabet, tape_alphabet=spec.tape_alphabet,
        blank=spec.blank, start=spec.start, accept=spec.accept,
        random_access=spec.random_access, delta={})
    assert "tape_count below 2" in validate_machine(bad)


def test_step_applies_delta_and_counts():
    spec = identity_machine()
    config = initial_configuration(spec, "101")
    out = step(spec, config)
    assert out is config
    assert config.steps == 1
    assert config.tapes[1].cells == {0: "1"}
    assert config.tapes[0].head == 1 and config.tapes[1].head == 1


def test_missing_transition_halts():
    spec = identity_machine()
    config = initial_configuration(spec, "101")
    config.state = "ra"  # no outgoing transitions
    assert step(spec, config) == Halt("no-transition")


def test_random_access_repositions_all_non_index_heads():
    spec = cell_probe_machine(5)
    config = initial_configuration(spec, "0000011")
    for _ in range(3):  # writes 1,0,1 then enters the random state
        result = step(spec, config)
        assert isinstance(result, type(config))
    assert config.state == spec.random_access
    assert config.tapes[0].head == 5
    assert config.tapes[1].head == 0
    assert read_address(config.index_tapes[0]) == 5


def test_blank_index_tape_jumps_to_cell_zero():
    spec = cell_probe_machine(0)
    config = initial_configuration(spec, "11")
    step(spec, config)
    assert config.state == spec.random_access
    assert config.tapes[0].head == 0


def test_read_address_examples():
    tape = TapeStore(cells={0: "1", 1: "0", 2: "1"})
    assert read_address(tape) == 5
    assert read_address(TapeStore()) == 0
    assert read_address(TapeStore(cells={0: "0", 1: "0", 2: "1", 3: "1"})) == 3


def test_left_move_at_cell_zero_stays():
    tape = TapeStore()
    tape.move("L")
    assert tape.head == 0


@given(st.integers(min_value=0, max_value=10 ** 9))
def test_read_address_round_trips_binary(value):
    bits = format(value, "b")
    tape = TapeStore(cells={i: b for i, b in enumerate(bits)})
    assert read_address(tape) == value


def test_text_format_round_trip():
    spec = identity_machine()
    again = parse_machine(render_machine(spec))
    assert again == spec


def test_parse_error_reports_line_number():
    text = "kind ratm\ntapes 2\nbogus directive\n"
    with pytest.raises(MachineParseError) as err:
        parse_machine(text)
    assert "line 3" in str(err.value)


def test_step_is_deterministic():
    spec = identity_machine()
    a = initial_configuration(spec, "1101")
    b = a.copy()
    step(spec, a)
    step(spec, b)
    assert a.state == b.state and a.steps == b.steps
    assert [t.cells for t in a.tapes] == [t.cells for t in b.tapes]
    assert [t.head for t in a.tapes] == [t.head for t in b.tapes]
