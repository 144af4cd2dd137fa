"""Encoding round-trips, the 111 terminator, and padding invariance."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratlab.codec import DecodeError, MachineCode, decode, decode_info, encode
from ratlab.programs import (
    cell_probe_machine,
    first_bit_machine,
    flip_machine,
    identity_dtm,
    identity_machine,
    marker_machine,
    parity_dtm,
)
from ratlab.simulator import equivalent_on

CORPUS = ["", "0", "1", "01", "10", "110", "0101", "111000", "10110100"]


def machines():
    return [
        identity_machine(),
        identity_dtm(),
        flip_machine(),
        first_bit_machine(),
        parity_dtm(),
        marker_machine(),
        cell_probe_machine(5),
    ]


@pytest.mark.parametrize("machine", machines(), ids=lambda m: str(id(m)))
def test_round_trip_preserves_behaviour_and_steps(machine):
    again = decode(encode(machine))
    report = equivalent_on(machine, again, CORPUS, fuel=500)
    assert report.equivalent
    for comparison in report.comparisons:
        assert comparison.steps_a == comparison.steps_b


def test_terminator_appears_exactly_once_before_padding():
    for machine in machines():
        bits = encode(machine).bits
        assert bits.endswith("111")
        assert "111" not in bits[:-3]


def test_padding_is_ignored():
    code = encode(identity_machine())
    spec = decode(code)
    padded = MachineCode(code.bits + "010011")
    assert decode(padded) == spec
    info = decode_info(padded)
    assert info.code_length == len(code.bits)


@given(st.text(alphabet="01", max_size=16))
@settings(max_examples=30)
def test_padding_invariance_random(padding):
    code = encode(flip_machine())
    assert decode(MachineCode(code.bits + padding)) == decode(code)


def test_empty_code_errors_at_position_zero():
    with pytest.raises(DecodeError) as err:
        decode(MachineCode(""))
    assert err.value.position == 0


def test_truncated_code_errors():
    code = encode(identity_machine())
    with pytest.raises(DecodeError):
        decode(MachineCode(code.bits[:-3]))


def test_single_move_difference_changes_code():
    from ratlab.machine import MachineSpec, Rule

    base = identity_machine()
    for key, rule in base.delta.items():
        changed_delta = dict(base.delta)
        changed_delta[key] = Rule(rule.state, rule.writes, rule.index_writes,
                                  ("L",) + rule.moves[1:])
        changed = MachineSpec(
            kind=base.kind, tape_count=base.tape_count, states=base.states,
            input_alphabet=base.input_alphabet, tape_alphabet=base.tape_alphabet,
            blank=base.blank, start=base.start, accept=base.accept,
            random_access=base.random_access, delta=changed_delta)
        if rule.moves[0] != "L":
            assert encode(changed).bits != encode(base).bits


def test_encode_refuses_invalid_spec():
    from ratlab.machine import MachineSpec

    bad = MachineSpec(
        kind="ratm", tape_count=1, states=("a",), input_alphabet=("0",),
        tape_alphabet=("0", "B"), blank="B", start="a", accept="a",
        random_access="a", delta={})
    with pytest.raises(ValueError):
        encode(bad)


def test_table_bits_measures_transition_region():
    info = decode_info(encode(identity_machine()))
    assert info.table_bits > 0
    empty_delta = decode_info(encode(_no_delta_machine()))
    assert empty_delta.table_bits == 0


def _no_delta_machine():
    from ratlab.machine import MachineSpec

    return MachineSpec(
        kind="ratm", tape_count=2, states=("a", "f", "r"), input_alphabet=("0", "1"),
        tape_alphabet=("0", "1", "B"), blank="B", start="a", accept="f",
        random_access="r", delta={})
