from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exact_linalg import nonzero_indices


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: tuple | None = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{self.name}: {status}"
        if self.witness is not None:
            text += f" at {self.witness}"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass
class AxiomReport:
    """Ordered list of named pass/fail checks; failures carry a witness."""

    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def add(self, name: str, ok: bool, witness: tuple | None = None, note: str = "") -> Check:
        if not ok and witness is None:
            witness = ()
        c = Check(name, bool(ok), None if ok else witness, note)
        self.checks.append(c)
        return c

    def compare(self, name: str, lhs, rhs, n_inputs: int, note: str = "") -> Check:
        """Record an exact equality of two coefficient arrays.

        The first ``n_inputs`` axes index basis inputs; the witness is the
        lexicographically smallest input tuple where the arrays differ.
        """
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{name}: shape mismatch {lhs.shape} vs {rhs.shape}")
        bad = nonzero_indices(lhs - rhs)
        if not bad:
            return self.add(name, True, note=note)
        return self.add(name, False, bad[0][:n_inputs], note=note)

    def extend(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.note))
        return self

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def __str__(self):
        return "\n".join(self.lines())
