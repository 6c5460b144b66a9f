"""Negative (Hirzebruch-Jung) continued fractions and lens-space parameters."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=True)
class LensSpace:
    """The lens space L(p, q) with coprime p > q > 0."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if not self.p > self.q > 0:
            raise ValueError(f"need p > q > 0, got L({self.p},{self.q})")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got L({self.p},{self.q})")

    @property
    def reversed(self) -> "LensSpace":
        """-L(p,q) = L(p, p-q)."""
        return LensSpace(self.p, self.p - self.q)

    @property
    def qbar(self) -> int:
        return pow(self.q, -1, self.p) if self.p > 1 else 0

    def chain(self) -> tuple[int, ...]:
        return expand(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def expand(p: int, q: int) -> tuple[int, ...]:
    """Return (a_1, ..., a_n), all a_i >= 2, with p/q = a_1 - 1/(a_2 - ... - 1/a_n)."""
    LensSpace(p, q)  # validates
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return tuple(out)


def evaluate(chain) -> tuple[int, int]:
    """Inverse of :func:`expand`: the coprime pair (p, q) of a chain of magnitudes."""
    chain = tuple(chain)
    if not chain:
        raise ValueError("chain must be nonempty")
    if any(a < 2 for a in chain):
        raise ValueError(f"chain entries must be >= 2, got {chain}")
    # right-to-left: value = num/den
    num, den = chain[-1], 1
    for a in reversed(chain[:-1]):
        num, den = a * num - den, num
    return num, den


def parse_fraction(text: str) -> LensSpace:
    """Parse ``"p/q"`` into a :class:`LensSpace`."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"expected p/q, got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected integers in p/q, got {text!r}") from None
    return LensSpace(p, q)


def parse_lens_list(text: str) -> list[LensSpace]:
    """Parse a connected sum ``"p1/q1,p2/q2,..."``."""
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("empty lens-space list")
    return [parse_fraction(t) for t in items]
