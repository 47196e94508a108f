"""Restriction degrees of the nine descended line bundles; the divisor table.

The resolved quotient Y carries Pic(Y) = Z E' + Z H1 + Z H2 (exceptional
divisor and the two hyperplane pullbacks).  The image of the equivariant line
bundle O_M(i) (x) chi_j under the McKay equivalence is a line bundle
O_Y(a E' + b H1 + c H2); the three coefficients are pinned down by computing
restriction degrees on three test curves:

* a fiber of the exceptional divisor over a point of the fixed locus — a P^1
  on which E' has degree -1 and H1, H2 have degree 0, so a = -deg;
* a line in the first plane factor avoiding the blown-up locus, which meets
  the equivariant geometry as a plane cubic (an elliptic curve downstairs is
  a degree-3 cover of the line upstairs) with coordinate weights (0, 0, 1),
  giving b = deg;
* the mirror line in the second factor, weights (0, 1, 1), giving c = deg.

On each curve the degree of the descended bundle is read off from the
(h0, h1) profile of the invariants of the equivariant cohomology upstairs:
the quotient curve is a P^1, and on P^1 the profile determines the degree.

The curve geometry is hard-coded per kind: the character computations depend
only on the coordinate weights, not on which smooth cubic forms were chosen.
Genericity of the cubics (the fixed loci really are smooth elliptic curves) is
an input assumption, not something checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from .chars import Character, invariants_dim
from .equivariant_cohomology import (
    CharMultiset,
    HypersurfaceSpec,
    WeightedProjSpace,
    cohomology_Pn,
    cohomology_hypersurface,
)


class InvalidProfile(Exception):
    """An (h0, h1) pair that no line bundle on P^1 produces."""


@dataclass(frozen=True)
class EqLineBundle:
    """O_M(i) (x) chi_j on the cubic fourfold M."""

    i: int
    j: Character

    def __repr__(self) -> str:
        return f"O_M({self.i})(x)chi_{self.j.value}"


@dataclass(frozen=True)
class TestCurve:
    """One of the three probe curves, with its fixed geometric data."""

    kind: str
    geometry: Union[WeightedProjSpace, HypersurfaceSpec]


_CHI = [Character(0), Character(1), Character(2)]

#: Fiber of the exceptional divisor: a P^1 with coordinate weights (0, 1).
FIBER_P1 = TestCurve("FiberP1", WeightedProjSpace((_CHI[0], _CHI[1])))

#: Plane cubic over a line in the first factor: weights (0, 0, 1), cubic form
#: of trivial character.
LINE_FIRST_FACTOR = TestCurve(
    "LineFirstFactor",
    HypersurfaceSpec(WeightedProjSpace((_CHI[0], _CHI[0], _CHI[1])), 3, _CHI[0]),
)

#: Plane cubic over a line in the second factor: weights (0, 1, 1).
LINE_SECOND_FACTOR = TestCurve(
    "LineSecondFactor",
    HypersurfaceSpec(WeightedProjSpace((_CHI[0], _CHI[1], _CHI[1])), 3, _CHI[0]),
)


@dataclass(frozen=True)
class Divisor3:
    """Coefficients (a, b, c) on (E', H1, H2) in Pic(Y)."""

    a: int
    b: int
    c: int

    def __add__(self, other: "Divisor3") -> "Divisor3":
        return Divisor3(self.a + other.a, self.b + other.b, self.c + other.c)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __repr__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


DivisorTable = Dict[Tuple[int, int], Divisor3]


def cohomology_profile_on_curve(L: EqLineBundle, curve: TestCurve) -> Tuple[int, int]:
    """(h0, h1) of the descended bundle on the quotient P^1 of ``curve``.

    Computes H^*(curve, O(i)) equivariantly upstairs and takes invariants
    after twisting by chi_j, degree by degree.
    """
    geom = curve.geometry
    if isinstance(geom, WeightedProjSpace):
        graded = cohomology_Pn(geom, L.i)
    else:
        graded = cohomology_hypersurface(geom, L.i)
    zero = CharMultiset({}, L.j.r)
    h0 = invariants_dim(graded.get(0, zero), L.j)
    h1 = invariants_dim(graded.get(1, zero), L.j)
    return (h0, h1)


def degree_from_profile(h0: int, h1: int) -> int:
    """Degree of the line bundle on P^1 with cohomology profile (h0, h1).

    (d+1, 0) for d >= 0, (0, 0) for d = -1, (0, -d-1) for d <= -2.  A profile
    with h0 > 0 and h1 > 0 belongs to no line bundle and raises InvalidProfile.
    """
    if h0 < 0 or h1 < 0:
        raise InvalidProfile(f"negative entries in profile ({h0}, {h1})")
    if h0 > 0 and h1 > 0:
        raise InvalidProfile(
            f"profile ({h0}, {h1}) has both h0 and h1 positive; "
            "no line bundle on P^1 does that"
        )
    if h0 > 0:
        return h0 - 1
    if h1 > 0:
        return -h1 - 1
    return -1


def divisor_of(L: EqLineBundle) -> Divisor3:
    """The divisor (a, b, c) of the descended bundle on Y.

    a = -(degree on the exceptional fiber) since E' restricts to degree -1
    there while H1, H2 restrict to degree 0; b and c are the degrees on the
    two factor lines, which avoid E'.
    """
    if L.i not in (0, 1, 2):
        raise ValueError(f"table twists are i in {{0,1,2}}, got i={L.i}")
    a = -degree_from_profile(*cohomology_profile_on_curve(L, FIBER_P1))
    b = degree_from_profile(*cohomology_profile_on_curve(L, LINE_FIRST_FACTOR))
    c = degree_from_profile(*cohomology_profile_on_curve(L, LINE_SECOND_FACTOR))
    return Divisor3(a, b, c)


def divisor_table() -> DivisorTable:
    """All nine rows (i, j) -> (a, b, c), computed from scratch."""
    return {
        (i, j): divisor_of(EqLineBundle(i, _CHI[j]))
        for i in range(3)
        for j in range(3)
    }


def bundle_label(i: int, j: int) -> str:
    """Row label, e.g. 'Psi(O_M(2) tensor chi_1)'; i = 0 renders as 'O_M'."""
    om = "O_M" if i == 0 else f"O_M({i})"
    return f"Psi({om} tensor chi_{j})"


def table_as_text() -> str:
    """The table in fixed-width text, rows in (i, j) lexicographic order."""
    e_col = "E'"
    rows = [f"{'line bundle':<26}{e_col:>4}{'H1':>5}{'H2':>5}"]
    table = divisor_table()
    for (i, j), div in sorted(table.items()):
        rows.append(f"{bundle_label(i, j):<26}{div.a:>4}{div.b:>5}{div.c:>5}")
    return "\n".join(rows) + "\n"


def table_records() -> List[Dict[str, int]]:
    """Machine-readable rows: one record per (i, j) with fields i, j, a, b, c."""
    return [
        {"i": i, "j": j, "a": div.a, "b": div.b, "c": div.c}
        for (i, j), div in sorted(divisor_table().items())
    ]
