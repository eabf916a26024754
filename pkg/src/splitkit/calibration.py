"""Selecting the discrepancy convention empirically.

The per-vertex summation rule behind the topological side of the
discrepancy is under-determined by its usual statements (which complex,
reduced or not, which degrees).  Rather than guessing, the suite below
computes the algebra-side discrepancy table for every corpus graph and
keeps exactly the conventions whose topological table matches it on all
of them, including the characteristic-2 projective-plane case where the
discrepancy is nonzero.
"""

from dataclasses import dataclass

from .dualalg import discrepancy_lhs_table
from .exactlinalg import GF2, RATIONALS
from .fixtures import full_graph_corpus
from .topo import DISCREPANCY_CONVENTIONS, discrepancy_rhs_table


def default_cases() -> list:
    """(name, graph, field) triples: the whole corpus over Q and GF(2)."""
    cases = []
    for name, g in full_graph_corpus():
        cases.append((f"{name}/Q", g, RATIONALS))
        cases.append((f"{name}/GF2", g, GF2))
    return cases


@dataclass(frozen=True)
class CalibrationResult:
    selected: tuple  # conventions matching the algebra side on every case
    tables: dict  # case name -> {"lhs": [...], convention: [...], ...}

    @property
    def unique(self) -> bool:
        return len(self.selected) == 1


def calibrate_convention(cases=None) -> CalibrationResult:
    """Try every convention on every case; keep the ones that always match."""
    cases = default_cases() if cases is None else cases
    tables = {}
    alive = set(DISCREPANCY_CONVENTIONS)
    for name, g, field in cases:
        entry = {"lhs": discrepancy_lhs_table(g, field)}
        for conv in DISCREPANCY_CONVENTIONS:
            entry[conv] = discrepancy_rhs_table(g, field, conv)
            if entry[conv] != entry["lhs"]:
                alive.discard(conv)
        tables[name] = entry
    selected = tuple(c for c in DISCREPANCY_CONVENTIONS if c in alive)
    return CalibrationResult(selected, tables)
