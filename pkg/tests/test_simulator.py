"""Run reports, fuel behaviour, traces, and equivalence checking."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratlab.programs import (
    always_reject_machine,
    first_bit_machine,
    flip_machine,
    identity_machine,
    looper_machine,
    parity_dtm,
)
from ratlab.simulator import equivalent_on, run, trace

bitstrings = st.text(alphabet="01", max_size=24)


def test_identity_run_report():
    report = run(identity_machine(), "101", fuel=100)
    assert report.halt_reason == "accept"
    assert report.output_text == "101"
    assert report.steps == 4
    assert report.input_size == 3


def test_fuel_exhaustion():
    report = run(looper_machine(), "1", fuel=50)
    assert report.halt_reason == "fuel-exhausted"
    assert report.steps == 50


def test_fuel_one_caps_steps():
    report = run(identity_machine(), "101", fuel=1)
    assert report.steps <= 1


def test_invalid_input_symbol_refused():
    with pytest.raises(ValueError):
        run(identity_machine(), "10x", fuel=10)


def test_reject_reason():
    report = run(always_reject_machine(), "1", fuel=10)
    assert report.halt_reason == "reject"


@given(bitstrings)
@settings(max_examples=40)
def test_fuel_monotonicity(bits):
    machine = identity_machine()
    base = run(machine, bits, fuel=len(bits) + 2)
    assert base.halt_reason == "accept"
    for extra in (1, 7, 1000):
        again = run(machine, bits, fuel=len(bits) + 2 + extra)
        assert again == base


def test_trace_cadence_counts():
    machine = identity_machine()
    assert len(trace(machine, "101", 100, cadence=1).snapshots) == 5
    assert len(trace(machine, "101", 100, cadence=2).snapshots) == 3


def test_trace_snapshots_replay():
    from ratlab.machine import step

    machine = identity_machine()
    tr = trace(machine, "1011", 100, cadence=1)
    for before, after in zip(tr.snapshots, tr.snapshots[1:]):
        replay = before.copy()
        step(machine, replay)
        assert replay.state == after.state
        assert [t.cells for t in replay.tapes] == [t.cells for t in after.tapes]


def test_equivalent_on_identical_machines():
    corpus = ["", "0", "1", "1010", "1111111"]
    report = equivalent_on(identity_machine(), identity_machine(), corpus, fuel=100)
    assert report.equivalent


def test_equivalent_on_spots_differences():
    corpus = ["0", "1", "10"]
    report = equivalent_on(identity_machine(), flip_machine(), corpus, fuel=100)
    assert not report.equivalent
    assert report.counterexamples


def test_dtm_runs_on_same_engine():
    machine = parity_dtm()
    assert run(machine, "1100", fuel=100).halt_reason == "accept"
    assert run(machine, "1101", fuel=100).halt_reason == "reject"
    assert run(first_bit_machine(), "10", fuel=10).steps == 1
