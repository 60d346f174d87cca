"""Shared fixtures and the spec enumeration used by sweep tests."""
from __future__ import annotations

import pathlib

import pytest

from aspec.graphs import GeneralizedBetheTreeSpec, Graph, parse_graph

DATA_DIR = pathlib.Path(__file__).parent / "data"

_criterion_lines: list[str] = []


def record_criterion(line: str) -> None:
    """Collect a one-line acceptance verdict for the end-of-run summary."""
    _criterion_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def unicyclic26() -> Graph:
    """26-vertex unicyclic specimen: 5-cycle, pendant depths 3, 2, 1, 4, 2."""
    return parse_graph((DATA_DIR / "unicyclic26.edges").read_text())


def enumerate_specs(max_total: int, max_k: int = 4) -> list[GeneralizedBetheTreeSpec]:
    """Every consistent level spec with at most max_total tree vertices."""
    specs = [GeneralizedBetheTreeSpec.from_degrees((1,))]
    if max_k >= 2:
        for d2 in range(1, max_total):
            s = GeneralizedBetheTreeSpec.from_degrees((1, d2))
            if s.total_vertices <= max_total:
                specs.append(s)
    if max_k >= 3:
        for d2 in range(2, max_total):
            for d3 in range(1, max_total):
                s = GeneralizedBetheTreeSpec.from_degrees((1, d2, d3))
                if s.total_vertices > max_total:
                    break
                specs.append(s)
    if max_k >= 4:
        for d2 in range(2, max_total):
            for d3 in range(2, max_total):
                for d4 in range(1, max_total):
                    s = GeneralizedBetheTreeSpec.from_degrees((1, d2, d3, d4))
                    if s.total_vertices > max_total:
                        break
                    specs.append(s)
    return specs
