import functools
import importlib
import pkgutil

import pytest

import canonical_cones

ACCEPTANCE_LINES: list[str] = []


def clear_caches() -> None:
    """Drop every memo table in the package so timings start cold."""
    for info in pkgutil.iter_modules(canonical_cones.__path__):
        if info.name == "__main__":
            continue
        mod = importlib.import_module(f"canonical_cones.{info.name}")
        for obj in vars(mod).values():
            if isinstance(obj, functools._lru_cache_wrapper):
                obj.cache_clear()


@pytest.fixture
def cold():
    clear_caches()
    yield


@pytest.fixture
def report():
    def record(number, title, passed, seconds, limit):
        ok = passed and seconds < limit
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.2f}s, limit {limit}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
