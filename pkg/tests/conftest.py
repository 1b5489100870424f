import itertools

import pytest

from ldiag.diagram import WeightMatrix, deck, validate

_ACCEPTANCE_LINES: list[str] = []


def brute_packed(n: int) -> set[WeightMatrix]:
    """Generate-and-filter: every p x q grid of sum n via stars and bars."""
    if n == 0:
        return {WeightMatrix(())}
    found = set()
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            cells = p * q
            for bars in itertools.combinations(range(n + cells - 1), cells - 1):
                edges = (-1,) + bars + (n + cells - 1,)
                flat = [edges[k + 1] - edges[k] - 1 for k in range(cells)]
                rows = [flat[i * q:(i + 1) * q] for i in range(p)]
                if all(any(r) for r in rows) and all(any(c) for c in zip(*rows)):
                    found.add(validate(rows))
    return found


@pytest.fixture(scope="session")
def deck2():
    return deck(2)


@pytest.fixture(scope="session")
def deck3():
    return deck(3)


@pytest.fixture(scope="session")
def pairs3(deck3):
    return list(itertools.product(deck3, deck3))


@pytest.fixture
def criterion():
    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {label}"
        if detail:
            line += f": {detail}"
        _ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
