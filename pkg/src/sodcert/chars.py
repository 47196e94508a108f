"""Characters of a finite cyclic group and character-multiset arithmetic.

For G = Z/rZ with a fixed primitive r-th root of unity zeta, the irreducible
representations are the characters chi_0, ..., chi_{r-1}, where chi_j sends
the generator to zeta^j.  A finite-dimensional representation decomposes as a
multiset of characters; we record it as a map ``character value -> nonnegative
multiplicity`` (e.g. C^3 chi_0 + C^2 chi_1 + C chi_2).

Convention (fixed throughout the package): the generator g scales the
coordinate x_k by zeta^{w_k}, so a monomial prod x_k^{a_k} spans the character
chi_{sum a_k w_k mod r}.  Negative exponents subtract weights, which is what
makes a class like 1/(x0*x1*x3) with weights (0, 0, 1) span chi_{-1} = chi_2.

The group order r is carried on every value (no global state), so any cyclic
order works even though the geometry downstream only needs r = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple


@dataclass(frozen=True, order=True)
class Character:
    """A character chi_value of the cyclic group Z/rZ."""

    value: int
    r: int = 3

    def __post_init__(self) -> None:
        if self.r <= 0:
            raise ValueError(f"group order must be positive, got r={self.r}")
        if not 0 <= self.value < self.r:
            raise ValueError(
                f"character value {self.value} outside [0, {self.r})"
            )

    def __repr__(self) -> str:
        if self.r == 3:
            return f"chi_{self.value}"
        return f"chi_{self.value}(mod {self.r})"


def _check_same_order(a: Character | "CharMultiset", b: Character | "CharMultiset") -> int:
    if a.r != b.r:
        raise ValueError(f"mismatched group orders: {a.r} != {b.r}")
    return a.r


def char_add(a: Character, b: Character) -> Character:
    """Tensor product of characters: chi_a (x) chi_b = chi_{a+b mod r}."""
    r = _check_same_order(a, b)
    return Character((a.value + b.value) % r, r)


def char_neg(a: Character) -> Character:
    """The dual character chi_a^* = chi_{-a mod r}."""
    return Character((-a.value) % a.r, a.r)


def char_sub(a: Character, b: Character) -> Character:
    """chi_a (x) chi_b^* = chi_{a-b mod r}."""
    r = _check_same_order(a, b)
    return Character((a.value - b.value) % r, r)


class CharMultiset:
    """A multiset of Z/r characters: the decomposition of a representation.

    Internally a map ``int -> positive int`` keyed by character value; zero
    multiplicities are never stored, so equality is structural.
    """

    __slots__ = ("r", "_mult")

    def __init__(self, mult: Mapping[int, int] | None = None, r: int = 3):
        if r <= 0:
            raise ValueError(f"group order must be positive, got r={r}")
        self.r = r
        clean: Dict[int, int] = {}
        for value, count in (mult or {}).items():
            if count < 0:
                raise ValueError(f"negative multiplicity {count} for chi_{value}")
            if not 0 <= value < r:
                raise ValueError(f"character value {value} outside [0, {r})")
            if count:
                clean[value] = count
        self._mult = clean

    @classmethod
    def from_characters(cls, chars: Iterable[Character], r: int = 3) -> "CharMultiset":
        mult: Dict[int, int] = {}
        for ch in chars:
            if ch.r != r:
                raise ValueError(f"mismatched group orders: {ch.r} != {r}")
            mult[ch.value] = mult.get(ch.value, 0) + 1
        return cls(mult, r)

    def multiplicity(self, ch: Character) -> int:
        """Multiplicity of the character ch in this multiset."""
        _check_same_order(self, ch)
        return self._mult.get(ch.value, 0)

    def total_dim(self) -> int:
        """Dimension of the underlying representation."""
        return sum(self._mult.values())

    def items(self) -> Tuple[Tuple[int, int], ...]:
        """(character value, multiplicity) pairs in increasing character order."""
        return tuple(sorted(self._mult.items()))

    def add(self, other: "CharMultiset") -> "CharMultiset":
        """Direct sum of representations."""
        r = _check_same_order(self, other)
        mult = dict(self._mult)
        for value, count in other._mult.items():
            mult[value] = mult.get(value, 0) + count
        return CharMultiset(mult, r)

    def shift(self, ch: Character) -> "CharMultiset":
        """Tensor by chi_ch: every character value moves up by ch.value mod r."""
        r = _check_same_order(self, ch)
        mult: Dict[int, int] = {}
        for value, count in self._mult.items():
            mult[(value + ch.value) % r] = count
        return CharMultiset(mult, r)

    def is_zero(self) -> bool:
        return not self._mult

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharMultiset):
            return NotImplemented
        return self.r == other.r and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self.r, self.items()))

    def __repr__(self) -> str:
        if not self._mult:
            return "0"
        return " + ".join(
            f"C^{count}.chi_{value}" if count > 1 else f"C.chi_{value}"
            for value, count in self.items()
        )


def invariants_dim(V: CharMultiset, twist: Character) -> int:
    """dim [V (x) chi_twist]^G.

    Tensoring by chi_twist moves chi_m to chi_{m+twist}; the invariant part is
    the chi_0 component, so the answer is the multiplicity of chi_{-twist} =
    chi_{(r - twist) mod r} in V.
    """
    r = _check_same_order(V, twist)
    return V.multiplicity(Character((r - twist.value) % r, r))
