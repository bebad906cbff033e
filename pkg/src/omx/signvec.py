"""Sign vectors on an ordered ground set.

Internally a sign vector is a tuple of ints in {-1, 0, 1}, one per ground
element in ground order.  The module-level functions work on those raw
tuples (they are the hot path of covector enumeration); :class:`SignVector`
wraps a tuple together with its ground set and checks that operands agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

Signs = tuple[int, ...]

_CHAR = {1: "+", -1: "-", 0: "0"}
_VAL = {"+": 1, "-": -1, "0": 0}


def mul(a: int, b: int) -> int:
    return a * b


def compose(l: Signs, m: Signs) -> Signs:
    if len(l) != len(m):
        raise ValueError("sign vectors on different ground sets")
    return tuple(a if a else b for a, b in zip(l, m))


def separation(l: Signs, m: Signs) -> frozenset[int]:
    """Positions where ``l`` and ``m`` carry opposite nonzero signs."""
    if len(l) != len(m):
        raise ValueError("sign vectors on different ground sets")
    return frozenset(i for i, (a, b) in enumerate(zip(l, m)) if a and a == -b)


def leq(l: Signs, m: Signs) -> bool:
    """Conformal order: 0 < +, 0 < -, componentwise."""
    if len(l) != len(m):
        raise ValueError("sign vectors on different ground sets")
    return all(a == 0 or a == b for a, b in zip(l, m))


def neg(l: Signs) -> Signs:
    return tuple(-a for a in l)


def support(l: Signs) -> frozenset[int]:
    return frozenset(i for i, a in enumerate(l) if a)


def restrict(l: Signs, positions: Sequence[int]) -> Signs:
    return tuple(l[i] for i in positions)


def zero(k: int) -> Signs:
    return (0,) * k


def to_str(l: Signs) -> str:
    return "".join(_CHAR[a] for a in l)


def from_str(s: str) -> Signs:
    try:
        return tuple(_VAL[c] for c in s)
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {s!r}") from None


def support_minimal(vectors: Iterable[Signs]) -> set[Signs]:
    """Elements whose support is inclusion-minimal among ``vectors``."""
    vs = list(set(vectors))
    supps = [support(v) for v in vs]
    return {v for v, s in zip(vs, supps) if not any(t < s for t in supps)}


@dataclass(frozen=True)
class SignVector:
    ground: tuple[Hashable, ...]
    signs: Signs

    def __post_init__(self):
        if len(self.ground) != len(self.signs):
            raise ValueError("length of signs does not match ground set")
        if any(a not in (-1, 0, 1) for a in self.signs):
            raise ValueError("signs must be -1, 0 or 1")

    @classmethod
    def parse(cls, ground: Sequence[Hashable], text: str) -> "SignVector":
        return cls(tuple(ground), from_str(text))

    @classmethod
    def zero(cls, ground: Sequence[Hashable]) -> "SignVector":
        return cls(tuple(ground), zero(len(ground)))

    def _check(self, other: "SignVector"):
        if self.ground != other.ground:
            raise ValueError("sign vectors on different ground sets")

    def __getitem__(self, e: Hashable) -> int:
        return self.signs[self.ground.index(e)]

    def __neg__(self) -> "SignVector":
        return SignVector(self.ground, neg(self.signs))

    def __str__(self) -> str:
        return to_str(self.signs)

    def compose(self, other: "SignVector") -> "SignVector":
        self._check(other)
        return SignVector(self.ground, compose(self.signs, other.signs))

    def separation(self, other: "SignVector") -> frozenset:
        self._check(other)
        return frozenset(self.ground[i] for i in separation(self.signs, other.signs))

    def __le__(self, other: "SignVector") -> bool:
        self._check(other)
        return leq(self.signs, other.signs)

    def __lt__(self, other: "SignVector") -> bool:
        return self <= other and self.signs != other.signs

    @property
    def support(self) -> frozenset:
        return frozenset(self.ground[i] for i in support(self.signs))

    def restrict(self, elements: Iterable[Hashable]) -> "SignVector":
        elements = list(elements)
        try:
            pos = [self.ground.index(e) for e in elements]
        except ValueError:
            raise ValueError("restriction set is not a subset of the ground set") from None
        return SignVector(tuple(elements), restrict(self.signs, pos))
