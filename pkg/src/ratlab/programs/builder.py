"""Small assembler for writing machine tables by hand.

Transitions are declared per state with symbol sets per tape; the builder
expands the cartesian product into concrete table entries.  Unlisted tapes
default to the tape's declared symbol domain, unlisted writes echo the read
symbol, unlisted index writes emit blank (safe only while the index head
rests on a blank cell — rewrite explicitly when parked inside content), and
unlisted heads stay.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Mapping, Optional, Union

from ..machine import INDEX_BLANK, RATM, MachineSpec, Rule, validate_machine

SymbolSpec = Union[str, Iterable[str]]
WriteSpec = Union[str, Callable[[tuple[str, ...]], str]]


class BuildError(Exception):
    pass


class ProgramBuilder:
    def __init__(
        self,
        tapes: int,
        *,
        input_alphabet: tuple[str, ...] = ("0", "1"),
        work_symbols: tuple[str, ...] = (),
        blank: str = "B",
        start: str = "s0",
        accept: str = "acc",
        random_state: str = "ra",
        domains: Optional[Mapping[int, tuple[str, ...]]] = None,
    ):
        self.k = tapes
        self.blank = blank
        self.input_alphabet = tuple(input_alphabet)
        alphabet = [blank, *input_alphabet]
        for sym in work_symbols:
            if sym not in alphabet:
                alphabet.append(sym)
        self.tape_alphabet = tuple(alphabet)
        self.start = start
        self.accept = accept
        self.random_state = random_state
        self.domains = {t: tuple(domains[t]) if domains and t in domains else self.tape_alphabet
                        for t in range(1, tapes + 1)}
        self.delta: dict[tuple[str, tuple[str, ...]], Rule] = {}
        self.states: list[str] = []
        for st in (start, accept, random_state):
            self._register(st)

    def _register(self, state: str) -> None:
        if state not in self.states:
            self.states.append(state)

    def add(
        self,
        state: str,
        reads: Mapping[int, SymbolSpec],
        new_state: str,
        writes: Optional[Mapping[int, WriteSpec]] = None,
        index: Optional[Mapping[int, str]] = None,
        moves: Optional[Mapping[Union[int, tuple[str, int]], str]] = None,
    ) -> None:
        """Declare transitions for `state` over the given read-set product.

        Tapes are 1-based.  `moves` keys are tape numbers for non-index heads
        and ("i", tape) for index heads.
        """
        self._register(state)
        self._register(new_state)
        writes = dict(writes or {})
        index = dict(index or {})
        moves = dict(moves or {})
        for key in writes:
            if not 2 <= key <= self.k:
                raise BuildError(f"write key {key} outside tapes 2..{self.k}")
        sym_sets: list[tuple[str, ...]] = []
        for t in range(1, self.k + 1):
            spec = reads.get(t, self.domains[t])
            if isinstance(spec, str):
                sym_sets.append((spec,))
            else:
                sym_sets.append(tuple(spec))
        index_writes = tuple(index.get(t, INDEX_BLANK) for t in range(1, self.k + 1))
        move_tuple = tuple(
            [moves.get(t, "S") for t in range(1, self.k + 1)]
            + [moves.get(("i", t), "S") for t in range(1, self.k + 1)]
        )
        for read_tuple in product(*sym_sets):
            write_tuple = []
            for t in range(2, self.k + 1):
                w = writes.get(t)
                if w is None:
                    write_tuple.append(read_tuple[t - 1])
                elif callable(w):
                    write_tuple.append(w(read_tuple))
                else:
                    write_tuple.append(w)
            rule = Rule(new_state, tuple(write_tuple), index_writes, move_tuple)
            key = (state, read_tuple)
            existing = self.delta.get(key)
            if existing is not None:
                if existing != rule:
                    raise BuildError(f"conflicting rules for {key}")
                continue
            self.delta[key] = rule

    def build(self, kind: str = RATM) -> MachineSpec:
        delta = self.delta
        if kind != RATM:
            delta = {
                key: Rule(r.state, r.writes, (), r.moves[: self.k])
                for key, r in delta.items()
            }
        spec = MachineSpec(
            kind=kind,
            tape_count=self.k,
            states=tuple(self.states),
            input_alphabet=self.input_alphabet,
            tape_alphabet=self.tape_alphabet,
            blank=self.blank,
            start=self.start,
            accept=self.accept,
            random_access=self.random_state if kind == RATM else None,
            delta=delta,
        )
        problems = validate_machine(spec)
        if problems:
            raise BuildError(f"built an invalid machine: {problems[:3]}")
        return spec
