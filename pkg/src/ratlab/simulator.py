"""Drive machines to completion with fuel limits and compare behaviours.

Everything that can execute — a MachineSpec or a virtual machine from the
transforms module — exposes the same small runner protocol: ``start_run``
yields an object with ``advance(budget)``, ``steps``, ``output_symbols()``.
``advance`` applies one step if its charge fits the remaining budget and
returns None, or returns the halt reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .machine import Configuration, Halt, MachineSpec, initial_configuration, step

ACCEPT = "accept"
REJECT = "reject"
FUEL_EXHAUSTED = "fuel-exhausted"
BAD_ADDRESS = "bad-address"


@dataclass
class RunReport:
    halt_reason: str
    steps: int
    output: tuple[str, ...]
    input_size: int

    @property
    def accepted(self) -> bool:
        return self.halt_reason == ACCEPT

    @property
    def output_text(self) -> str:
        return "".join(self.output)

    def to_dict(self) -> dict:
        return {
            "halt_reason": self.halt_reason,
            "steps": self.steps,
            "output": self.output_text,
            "input_size": self.input_size,
        }


def output_from_tape(tape, blank: str) -> tuple[str, ...]:
    last = tape.rightmost_used()
    return tuple(tape.cells.get(i, blank) for i in range(last + 1))


class SpecRun:
    """Stepwise execution of a plain MachineSpec on one input."""

    def __init__(self, spec: MachineSpec, input_symbols: Sequence[str]):
        self.spec = spec
        self.config = initial_configuration(spec, input_symbols)
        self.input_size = len(input_symbols)

    @property
    def steps(self) -> int:
        return self.config.steps

    def advance(self, budget: int) -> Optional[str]:
        if self.config.state == self.spec.accept:
            return ACCEPT
        if budget < 1:
            return FUEL_EXHAUSTED
        result = step(self.spec, self.config)
        if isinstance(result, Halt):
            return REJECT if result.reason == "no-transition" else result.reason
        # entering the accept state is reported on the next advance() so the
        # accepting step itself is counted
        return None

    def output_symbols(self) -> tuple[str, ...]:
        return output_from_tape(self.config.tapes[-1], self.spec.blank)


def start_run(machine, input_symbols: Sequence[str]):
    """Build a runner for a MachineSpec or any virtual machine."""
    if isinstance(machine, MachineSpec):
        _check_input(machine, input_symbols)
        return SpecRun(machine, input_symbols)
    return machine.start_run(input_symbols)


def input_alphabet_of(machine) -> tuple[str, ...]:
    return tuple(machine.input_alphabet)


def _check_input(spec: MachineSpec, input_symbols: Sequence[str]) -> None:
    allowed = set(spec.input_alphabet)
    for sym in input_symbols:
        if sym not in allowed:
            raise ValueError(f"input symbol {sym!r} not in machine input alphabet")


def run(machine, input_symbols: Sequence[str], fuel: int) -> RunReport:
    """Execute until accept, reject, bad address, or fuel exhaustion."""
    if fuel < 1:
        raise ValueError("fuel must be positive")
    runner = start_run(machine, input_symbols)
    while True:
        reason = runner.advance(fuel - runner.steps)
        if reason is not None:
            return RunReport(reason, runner.steps, runner.output_symbols(), len(input_symbols))


@dataclass
class Trace:
    cadence: int
    snapshots: list[Configuration]
    report: RunReport


def trace(spec: MachineSpec, input_symbols: Sequence[str], fuel: int, cadence: int = 1) -> Trace:
    """Snapshot the configuration every `cadence` steps plus the final one."""
    if cadence < 1:
        raise ValueError("cadence must be >= 1")
    _check_input(spec, input_symbols)
    runner = SpecRun(spec, input_symbols)
    snapshots = [runner.config.copy()]
    while True:
        reason = runner.advance(fuel - runner.steps)
        if reason is not None:
            if runner.config.steps % cadence != 0 or not snapshots:
                snapshots.append(runner.config.copy())
            elif snapshots[-1].steps != runner.config.steps:
                snapshots.append(runner.config.copy())
            return Trace(cadence, snapshots, RunReport(
                reason, runner.steps, runner.output_symbols(), len(input_symbols)))
        if runner.config.steps % cadence == 0:
            snapshots.append(runner.config.copy())


def canonical_symbol_order(machine) -> list[str]:
    """Blank first, then input symbols, then the remaining work symbols."""
    spec = getattr(machine, "base_spec", machine)
    if isinstance(spec, MachineSpec):
        rest = [s for s in spec.tape_alphabet
                if s != spec.blank and s not in spec.input_alphabet]
        return [spec.blank, *spec.input_alphabet, *rest]
    return list(machine.input_alphabet)


@dataclass
class InputComparison:
    input_symbols: tuple[str, ...]
    reason_a: str
    reason_b: str
    output_a: tuple[str, ...]
    output_b: tuple[str, ...]
    steps_a: int
    steps_b: int
    matches: bool


@dataclass
class EquivalenceReport:
    comparisons: list[InputComparison] = field(default_factory=list)

    @property
    def equivalent(self) -> bool:
        return all(c.matches for c in self.comparisons)

    @property
    def counterexamples(self) -> list[InputComparison]:
        return [c for c in self.comparisons if not c.matches]


def _translate(symbols: Sequence[str], order_from: list[str], order_to: list[str]) -> tuple[str, ...]:
    out = []
    for sym in symbols:
        try:
            idx = order_from.index(sym)
        except ValueError:
            out.append(sym)
            continue
        out.append(order_to[idx] if idx < len(order_to) else sym)
    return tuple(out)


def equivalent_on(a, b, inputs: Sequence[Sequence[str]], fuel: int,
                  fuel_b: Optional[int] = None) -> EquivalenceReport:
    """Check halt-class and output agreement input by input.

    Step counts are reported but never compared; transformed machines are
    slower by design, so `fuel_b` defaults to a generous multiple of `fuel`.
    Inputs are given over a's alphabet and renamed positionally for b.
    """
    if fuel_b is None:
        fuel_b = max(fuel, 1024) * 64
    order_a = canonical_symbol_order(a)
    order_b = canonical_symbol_order(b)
    report = EquivalenceReport()
    for input_symbols in inputs:
        input_symbols = tuple(input_symbols)
        rep_a = run(a, input_symbols, fuel)
        rep_b = run(b, _translate(input_symbols, order_a, order_b), fuel_b)
        out_b = _translate(rep_b.output, order_b, order_a)
        matches = rep_a.halt_reason == rep_b.halt_reason and rep_a.output == out_b
        report.comparisons.append(InputComparison(
            input_symbols, rep_a.halt_reason, rep_b.halt_reason,
            rep_a.output, out_b, rep_a.steps, rep_b.steps, matches))
    return report
