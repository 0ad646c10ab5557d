"""Registry the acceptance tests write to and the terminal summary reads from."""

from __future__ import annotations

RESULTS: list[tuple[int, str, str, float]] = []
NOTES: list[str] = []


def record(num: int, name: str, status: str, seconds: float) -> None:
    RESULTS.append((num, name, status, seconds))


def note(line: str) -> None:
    NOTES.append(line)
