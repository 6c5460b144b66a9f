"""Built-in bad-part configurations with their published embedding counts."""

from __future__ import annotations

from dataclasses import dataclass

Chain = tuple[int, ...]


@dataclass(frozen=True)
class AppendixCase:
    number: int
    bad_weights: Chain
    bad_positions: tuple[int, ...]
    lefts: tuple[Chain, ...]
    rights: tuple[Chain, ...]
    expected: tuple[int, int, int, int]  # total, standard, semi-standard, neither


def _c(*chains: list[int]) -> tuple[Chain, ...]:
    return tuple(tuple(c) for c in chains)


_L1 = _c([2, 2, 2], [2, 3, 2, 2], [3, 3, 2, 2], [2, 4, 3, 2, 2], [2], [2, 2, 2, 3], [2, 3, 2, 2, 3], [2, 3, 3, 2, 2, 3])
_R1 = _c([2, 2, 2], [2, 2, 3, 2], [2, 2, 3, 3], [2, 2, 3, 4, 2], [2], [3, 2, 2, 2], [3, 2, 2, 3, 2], [3, 2, 2, 3, 3, 2])
_L2 = _c([2, 2, 2], [2, 3, 2, 2], [2, 3, 3, 2, 2])
_R2 = _c([2, 2, 2, 2], [2, 2, 2, 3], [2], [3, 2, 2, 2], [3, 2, 2, 3, 2, 2])
_L4 = _c([2, 2, 2], [2, 3, 2, 2], [2, 2, 3, 3, 2, 2])
_R4 = _c([2, 2, 2], [2, 2, 3, 2], [2, 2, 3, 3, 2, 2])
_R5 = _c([2, 2, 2, 2], [2, 2, 2, 3, 2], [2, 2, 2, 3, 3, 2])
_E6 = _c([2, 2, 2], [2, 2, 3, 2, 2])
_L8 = _c([2, 2, 2], [2, 3, 2, 2], [2, 3, 3, 2, 2], [2], [2, 2, 2, 3], [2, 3, 2, 2, 3], [2, 3, 3, 2, 2, 3])

CASES: dict[int, AppendixCase] = {
    c.number: c
    for c in [
        AppendixCase(1, (2, 2, 2), (2,), _L1, _R1, (386, 203, 183, 0)),
        AppendixCase(2, (2, 2, 3), (2,), _L2, _R2, (84, 48, 36, 0)),
        AppendixCase(
            3,
            (2, 2, 4),
            (2,),
            _c([2, 2, 2], [2, 2, 3, 2, 2]),
            _c([2, 2, 2, 2, 2], [2, 2, 2, 2, 3], [2], [3, 2, 2, 2, 2], [3, 2, 2, 2, 3]),
            (64, 32, 32, 0),
        ),
        AppendixCase(4, (2, 3, 2), (2,), _L4, _R4, (50, 25, 25, 0)),
        AppendixCase(5, (2, 3, 3), (2,), _L4, _R5, (60, 30, 30, 0)),
        AppendixCase(6, (2, 4, 2), (2,), _E6, _E6, (32, 16, 16, 0)),
        AppendixCase(7, (2, 2, 3, 2, 2), (2, 4), _L1, _R1, (589, 203, 386, 0)),
        AppendixCase(8, (2, 2, 3, 2, 3), (2, 4), _L8, _R2, (264, 96, 168, 0)),
        AppendixCase(9, (2, 2, 3, 3, 2), (2, 4), _L8, _R4, (160, 50, 110, 0)),
        AppendixCase(10, (2, 2, 3, 3, 3), (2, 4), _L2, _R5, (108, 36, 72, 0)),
        AppendixCase(11, (2, 3, 3, 2), (2, 3), _L4, _R4, (75, 25, 50, 0)),
        AppendixCase(12, (2, 3, 3, 3, 2), (2, 3, 4), _L4, _R4, (100, 25, 75, 0)),
        AppendixCase(13, (2, 3, 4, 2), (2, 3), _E6, _E6, (48, 16, 32, 0)),
    ]
}

# Case 6 is the smallest and is run first as a calibration of the counting convention.
RUN_ORDER = (6, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13)
