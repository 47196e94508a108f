"""Character-graded sheaf cohomology of line bundles, in exact arithmetic.

Three geometric situations are covered, each with a diagonal action of the
cyclic group Z/r on homogeneous coordinates:

* ``cohomology_Pn`` — O(d) on P^n.  H^0 is spanned by the monomials of total
  degree d with nonnegative exponents; H^n by the "monomials" of total degree
  d with every exponent <= -1.  Each spanning class contributes the character
  chi_{sum a_k w_k mod r} of its exponent vector (negative exponents subtract
  weights).  All other degrees vanish.
* ``cohomology_hypersurface`` — O_H(d) on a degree-e hypersurface H in P^n cut
  out by a form F that is character-homogeneous of character ``form_char``,
  via the long exact sequence of 0 -> O(d-e) -F-> O(d) -> O_H(d) -> 0.
* ``cohomology_product`` — the dimension profile of O(m, n) on P^2 x P^2 by
  the Kunneth rule (no group action on that side, so characters are omitted).

Dimensions are never obtained by materializing monomial bases: per-character
counts come from a small residue-class dynamic program, so large |d| stays
cheap while characters remain exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Tuple

from .chars import Character, CharMultiset


class IndeterminateRank(Exception):
    """A long-exact-sequence junction whose ranks cannot be resolved.

    Both resolvable junction patterns (injective multiplication on H^0,
    surjective multiplication on H^n) are handled exactly, so for line bundles
    on P^n this is never raised; it exists to fail loudly should an
    unsupported pattern ever be reached instead of guessing ranks.
    """


class NegativeMultiplicity(Exception):
    """A character-wise multiset difference came out negative.

    This signals an inconsistent input (the multiplication-by-F map could not
    be injective/surjective as assumed), never a recoverable condition.
    """


@dataclass(frozen=True)
class WeightedProjSpace:
    """P^n with the generator of Z/r scaling coordinate x_k by zeta^{w_k}."""

    weights: Tuple[Character, ...]

    def __post_init__(self) -> None:
        if len(self.weights) < 2:
            raise ValueError("need at least 2 homogeneous coordinates (n >= 1)")
        orders = {w.r for w in self.weights}
        if len(orders) != 1:
            raise ValueError(f"mixed group orders in weights: {sorted(orders)}")

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def r(self) -> int:
        return self.weights[0].r


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A degree-e hypersurface in ``ambient`` cut out by a form of character
    ``form_char`` (the form must be a character-eigenvector, which is what
    makes the twisted long exact sequence equivariant)."""

    ambient: WeightedProjSpace
    e: int
    form_char: Character

    def __post_init__(self) -> None:
        if self.e < 1:
            raise ValueError(f"form degree must be >= 1, got {self.e}")
        if self.form_char.r != self.ambient.r:
            raise ValueError("form character and ambient weights disagree on group order")


#: Cohomology with its character decomposition, degree by degree.  Absent
#: degrees are zero.
GradedCharMultiset = Dict[int, CharMultiset]


def _monomial_char_counts(weights: Tuple[int, ...], degree: int, r: int) -> Dict[int, int]:
    """Count exponent vectors a >= 0 with sum(a) = degree, per character class.

    Returns {character value c: #vectors with sum a_k w_k = c mod r}.  Dynamic
    program over the variables; O(len(weights) * degree^2 * r) time, no
    monomial materialization.
    """
    if degree < 0:
        return {}
    # table[deg][c] = number of prefixes of total degree deg in class c
    table = [[0] * r for _ in range(degree + 1)]
    table[0][0] = 1
    for w in weights:
        new = [[0] * r for _ in range(degree + 1)]
        for deg in range(degree + 1):
            row = table[deg]
            for c in range(r):
                count = row[c]
                if not count:
                    continue
                for a in range(degree - deg + 1):
                    new[deg + a][(c + a * w) % r] += count
        table = new
    return {c: count for c, count in enumerate(table[degree]) if count}


def cohomology_Pn(P: WeightedProjSpace, d: int) -> GradedCharMultiset:
    """Equivariant H^*(P^n, O(d)) as a graded character multiset."""
    n, r = P.n, P.r
    weights = tuple(w.value for w in P.weights)
    result: GradedCharMultiset = {}
    if d >= 0:
        counts = _monomial_char_counts(weights, d, r)
        if counts:
            result[0] = CharMultiset(counts, r)
    if d <= -n - 1:
        # Substitute a_k = -1 - b_k with b_k >= 0: the character of the class
        # with exponents a is -(W + sum b_k w_k) where W = sum of weights.
        W = sum(weights)
        counts = _monomial_char_counts(weights, -d - n - 1, r)
        if counts:
            dual = {(-(W + c)) % r: count for c, count in counts.items()}
            result[n] = CharMultiset(dual, r)
    return result


def multiset_difference(big: CharMultiset, small: CharMultiset) -> CharMultiset:
    """Character-wise difference big - small; raises NegativeMultiplicity."""
    if big.r != small.r:
        raise ValueError(f"mismatched group orders: {big.r} != {small.r}")
    mult = dict(big.items())
    for value, count in small.items():
        remaining = mult.get(value, 0) - count
        if remaining < 0:
            raise NegativeMultiplicity(
                f"multiplicity of chi_{value} would drop to {remaining}"
            )
        mult[value] = remaining
    return CharMultiset(mult, big.r)


def cohomology_hypersurface(H: HypersurfaceSpec, d: int) -> GradedCharMultiset:
    """Equivariant H^*(H, O_H(d)) from the twisted restriction sequence.

    With P = H.ambient of dimension n >= 2, the long exact sequence of
    0 -> O(d-e) -F-> O(d) -> O_H(d) -> 0 collapses to two junctions, since
    middle cohomology of line bundles on P^n vanishes:

    * H^0(O_H(d)) = H^0(O(d)) minus the image of H^0(O(d-e)); multiplication
      by F is injective (F is a nonzerodivisor) and shifts characters by
      form_char.
    * H^{n-1}(O_H(d)) = kernel of H^n(O(d-e)) -F-> H^n(O(d)).  That map is the
      dual of the injective multiplication H^0(O(-d-n-1)) -F-> H^0(O(-d+e-n-1)),
      hence surjective; an equivariant surjection identifies the kernel's
      character multiset as the (form_char-shifted) source minus the target.

    Degrees >= n are empty (O_H lives on an (n-1)-fold).  Any junction outside
    these two patterns raises IndeterminateRank rather than guessing ranks.
    """
    ambient, e, chi_F = H.ambient, H.e, H.form_char
    n = ambient.n
    if n < 2:
        raise IndeterminateRank(
            f"hypersurfaces in P^{n} have no resolvable junction pattern"
        )
    twisted = cohomology_Pn(ambient, d)
    source = cohomology_Pn(ambient, d - e)
    zero = CharMultiset({}, ambient.r)

    result: GradedCharMultiset = {}
    h0 = multiset_difference(twisted.get(0, zero), source.get(0, zero).shift(chi_F))
    if not h0.is_zero():
        result[0] = h0
    top = multiset_difference(source.get(n, zero).shift(chi_F), twisted.get(n, zero))
    if not top.is_zero():
        result[n - 1] = result.get(n - 1, zero).add(top)
    return result


def _h_P2(k: int) -> Dict[int, int]:
    """Dimension profile of H^*(P^2, O(k)): {degree: dim}, zeros omitted."""
    if k >= 0:
        return {0: comb(k + 2, 2)}
    if k <= -3:
        return {2: comb(-k - 1, 2)}
    return {}


def cohomology_product(m: int, n: int) -> Dict[int, int]:
    """Dimension profile of H^*(P^2 x P^2, O(m, n)) by the Kunneth rule.

    The product side carries no group action here, so only dimensions are
    returned: {total degree: dim}, zeros omitted.
    """
    profile: Dict[int, int] = {}
    for i, hi in _h_P2(m).items():
        for j, hj in _h_P2(n).items():
            profile[i + j] = profile.get(i + j, 0) + hi * hj
    return profile
