"""Exact polynomial algebra for the blow-up charts of the resolved quotient.

The ambient model is P^5 x P^2 x P^2 with homogeneous coordinates
(x0..x5), (y0,y1,y2), (y3,y4,y5): the blow-up of P^5 along the two disjoint
planes {x3 = x4 = x5 = 0} and {x0 = x1 = x2 = 0} is cut out by the six
bilinear equations

    x_a y_b = x_b y_a   for (a, b) in {(0,1), (0,2), (1,2), (3,4), (3,5), (4,5)}.

An affine chart sets x_i = y_j = y_k = 1 (i in 0..5, j in 0..2, k in 3..5).
Solving the six equations in a chart either eliminates four coordinates,
leaving five free ones, or forces a unit relation 1 = x_a y_b, which means
the chart is contained in another one (``RedundantChart``); the 18 surviving
charts are derived this way, never hard-coded.

The order-3 action scales x3, x4, x5 by a primitive cube root of unity.  On a
chart the residual action is diagonal with weights (w(x_a) - w(x_i)) mod 3 on
the free x-coordinates and 0 on the free y-coordinates.  Chart quotients are
described by minimal monomial generators of the invariant ring, and the chart
equation of the blown-up, quotiented cubic is rewritten in those generators
(a weight-1 or weight-2 coordinate t contributes t^3, written t').

All coefficients are exact rationals; identity checks are bit-exact.  The
finite-field smoothness sweep reduces mod p and enumerates all of F_p^5 per
chart with the Jacobian criterion; an empty report is evidence, not proof,
of smoothness in characteristic zero.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

Exponents = Tuple[int, ...]
Coeff = Fraction

#: Homogeneous coordinates of P^5 x P^2 x P^2, in the fixed ambient order.
AMBIENT_VARS: Tuple[str, ...] = (
    "x0", "x1", "x2", "x3", "x4", "x5",
    "y0", "y1", "y2", "y3", "y4", "y5",
)

#: Index pairs (a, b) of the six bilinear blow-up equations x_a y_b = x_b y_a.
BILINEAR_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5))

#: The order of the group action.
R = 3


class InvalidIndex(Exception):
    """Chart index outside i in 0..5, j in 0..2, k in 3..5."""


class RedundantChart(Exception):
    """The chart is contained in another one (a bilinear equation became a unit)."""


class NotInvariantExpressible(Exception):
    """A substituted form failed to rewrite in the invariant generators."""


class BadPrime(Exception):
    """The prime is unusable: 3, composite, or divides a coefficient denominator."""


# ---------------------------------------------------------------------------
# Sparse exact polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """A polynomial as a sparse map from exponent vectors to rationals.

    ``terms`` is canonically sorted with no zero coefficients; the variable
    set is fixed per ring, so arithmetic mixes only polynomials with the same
    ``vars``.
    """

    vars: Tuple[str, ...]
    terms: Tuple[Tuple[Exponents, Coeff], ...]

    def __repr__(self) -> str:
        return poly_to_string(self)


def poly_from_dict(variables: Sequence[str], coeffs: Mapping[Exponents, Coeff]) -> Poly:
    variables = tuple(variables)
    cleaned = {}
    for exps, c in coeffs.items():
        if len(exps) != len(variables):
            raise ValueError(f"exponent vector {exps} does not fit {variables}")
        c = Fraction(c)
        if c:
            cleaned[tuple(exps)] = c
    return Poly(variables, tuple(sorted(cleaned.items())))


def poly_zero(variables: Sequence[str]) -> Poly:
    return poly_from_dict(variables, {})


def poly_const(variables: Sequence[str], c: Coeff) -> Poly:
    zero = (0,) * len(variables)
    return poly_from_dict(variables, {zero: Fraction(c)})


def poly_var(variables: Sequence[str], name: str) -> Poly:
    exps = [0] * len(variables)
    exps[list(variables).index(name)] = 1
    return poly_from_dict(variables, {tuple(exps): Fraction(1)})


def poly_monomial(variables: Sequence[str], exps: Exponents, c: Coeff = Fraction(1)) -> Poly:
    return poly_from_dict(variables, {tuple(exps): Fraction(c)})


def is_zero(p: Poly) -> bool:
    return not p.terms


def poly_add(p: Poly, q: Poly) -> Poly:
    if p.vars != q.vars:
        raise ValueError("polynomials live in different rings")
    acc: Dict[Exponents, Coeff] = dict(p.terms)
    for exps, c in q.terms:
        acc[exps] = acc.get(exps, Fraction(0)) + c
    return poly_from_dict(p.vars, acc)


def poly_scale(p: Poly, c: Coeff) -> Poly:
    c = Fraction(c)
    return poly_from_dict(p.vars, {exps: coeff * c for exps, coeff in p.terms})


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_scale(q, Fraction(-1)))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.vars != q.vars:
        raise ValueError("polynomials live in different rings")
    acc: Dict[Exponents, Coeff] = {}
    for e1, c1 in p.terms:
        for e2, c2 in q.terms:
            key = tuple(a + b for a, b in zip(e1, e2))
            acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    return poly_from_dict(p.vars, acc)


def substitute(p: Poly, images: Mapping[str, Poly], target_vars: Sequence[str]) -> Poly:
    """Apply var -> Poly images; unmapped variables that actually occur map
    to themselves (and must exist in the target ring)."""
    target_vars = tuple(target_vars)
    cache: Dict[str, Poly] = {}

    def image_of(name: str) -> Poly:
        if name not in cache:
            if name in images:
                img = images[name]
                if img.vars != target_vars:
                    raise ValueError(f"image of {name} lives in the wrong ring")
                cache[name] = img
            else:
                cache[name] = poly_var(target_vars, name)
        return cache[name]

    result = poly_zero(target_vars)
    for exps, c in p.terms:
        term = poly_const(target_vars, c)
        for name, e in zip(p.vars, exps):
            for _ in range(e):
                term = poly_mul(term, image_of(name))
        result = poly_add(result, term)
    return result


def poly_replace(p: Poly, name: str, replacement: Poly) -> Poly:
    """Substitute one variable within the same ring."""
    return substitute(p, {name: replacement}, p.vars)


def partial(p: Poly, name: str) -> Poly:
    idx = list(p.vars).index(name)
    acc: Dict[Exponents, Coeff] = {}
    for exps, c in p.terms:
        if exps[idx] == 0:
            continue
        lowered = list(exps)
        lowered[idx] -= 1
        acc[tuple(lowered)] = acc.get(tuple(lowered), Fraction(0)) + c * exps[idx]
    return poly_from_dict(p.vars, acc)


def total_degree(p: Poly) -> int:
    return max((sum(exps) for exps, _ in p.terms), default=0)


def is_homogeneous(p: Poly, degree: int) -> bool:
    return all(sum(exps) == degree for exps, _ in p.terms)


def constant_coefficient(p: Poly) -> Coeff:
    zero = (0,) * len(p.vars)
    for exps, c in p.terms:
        if exps == zero:
            return c
    return Fraction(0)


def poly_to_string(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces: List[str] = []
    for exps, c in sorted(p.terms, key=lambda t: (sum(t[0]), t[0])):
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(p.vars, exps)
            if e
        )
        if not mono:
            piece = str(c)
        elif c == 1:
            piece = mono
        elif c == -1:
            piece = f"-{mono}"
        else:
            piece = f"{c}*{mono}"
        pieces.append(piece)
    return " + ".join(pieces).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Cubic pairs
# ---------------------------------------------------------------------------

F0_VARS = ("x0", "x1", "x2")
F1_VARS = ("x3", "x4", "x5")


@dataclass(frozen=True)
class CubicPair:
    """The two plane cubics; the fourfold is F0(x0,x1,x2) + F1(x3,x4,x5) = 0."""

    F0: Poly
    F1: Poly

    def __post_init__(self) -> None:
        if self.F0.vars != F0_VARS or self.F1.vars != F1_VARS:
            raise ValueError("cubics must use variables (x0,x1,x2) and (x3,x4,x5)")
        for form in (self.F0, self.F1):
            if not is_homogeneous(form, 3):
                raise ValueError(f"{poly_to_string(form)} is not homogeneous of degree 3")


def _fermat(variables: Tuple[str, str, str]) -> Poly:
    return poly_from_dict(
        variables, {(3, 0, 0): Fraction(1), (0, 3, 0): Fraction(1), (0, 0, 3): Fraction(1)}
    )


FERMAT_PAIR = CubicPair(_fermat(F0_VARS), _fermat(F1_VARS))


def cubic_pair_from_config(data: Mapping[str, object]) -> CubicPair:
    """Build a CubicPair from config entries ``F0``/``F1``.

    Each entry is a list of ``[e0, e1, e2, coeff]`` rows; coefficients are
    integers or strings accepted by Fraction (floats are rejected to keep the
    arithmetic exact).
    """
    forms: List[Poly] = []
    for key, variables in (("F0", F0_VARS), ("F1", F1_VARS)):
        rows = data.get(key)
        if rows is None:
            forms.append(_fermat(variables))
            continue
        coeffs: Dict[Exponents, Coeff] = {}
        for row in rows:  # type: ignore[union-attr]
            *exps, raw = row
            if isinstance(raw, float):
                raise ValueError(f"coefficient {raw!r} is a float; use int or string")
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3:
                raise ValueError(f"need three exponents per row, got {row!r}")
            coeffs[exps] = coeffs.get(exps, Fraction(0)) + Fraction(raw)
        forms.append(poly_from_dict(variables, coeffs))
    return CubicPair(forms[0], forms[1])


def ambient_cubic_form(cubics: CubicPair) -> Poly:
    """F0 + F1 as one polynomial on the twelve ambient coordinates."""
    f0 = substitute(
        cubics.F0, {v: poly_var(AMBIENT_VARS, v) for v in F0_VARS}, AMBIENT_VARS
    )
    f1 = substitute(
        cubics.F1, {v: poly_var(AMBIENT_VARS, v) for v in F1_VARS}, AMBIENT_VARS
    )
    return poly_add(f0, f1)


# ---------------------------------------------------------------------------
# Charts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineChart:
    """One affine chart x_i = y_j = y_k = 1 of the double blow-up.

    ``relations`` maps each eliminated coordinate to its expression in the
    five free coordinates; ``weights`` gives the residual group action on the
    free coordinates (exponents of the cube root of unity).
    """

    index: Tuple[int, int, int]
    free: Tuple[str, str, str, str, str]
    relations: Tuple[Tuple[str, Poly], ...]
    weights: Tuple[int, int, int, int, int]

    @property
    def relation_map(self) -> Dict[str, Poly]:
        return dict(self.relations)

    @property
    def unit_vars(self) -> Tuple[str, str, str]:
        i, j, k = self.index
        return (f"x{i}", f"y{j}", f"y{k}")


def bilinear_equations() -> Tuple[Poly, ...]:
    """The six equations x_a y_b - x_b y_a cutting out the double blow-up."""
    eqs = []
    for a, b in BILINEAR_PAIRS:
        term1 = poly_mul(poly_var(AMBIENT_VARS, f"x{a}"), poly_var(AMBIENT_VARS, f"y{b}"))
        term2 = poly_mul(poly_var(AMBIENT_VARS, f"x{b}"), poly_var(AMBIENT_VARS, f"y{a}"))
        eqs.append(poly_sub(term1, term2))
    return tuple(eqs)


def _elimination_candidates(eq: Poly) -> List[Tuple[str, Poly]]:
    """(variable, replacement) pairs solving a binomial equation for one
    variable with unit coefficient that does not occur in the other term."""
    if len(eq.terms) != 2:
        return []
    out: List[Tuple[str, Poly]] = []
    for (ev, cv), (em, cm) in ((eq.terms[0], eq.terms[1]), (eq.terms[1], eq.terms[0])):
        if sum(ev) != 1 or cv not in (1, -1):
            continue
        pos = ev.index(1)
        if em[pos]:
            continue
        name = eq.vars[pos]
        out.append((name, poly_monomial(eq.vars, em, -cm / cv)))
    return out


def _elimination_preference(name: str) -> int:
    # For x_b = y_b relations (both directions solvable) keep the coordinate
    # the chart equation is written in: x's on the first factor, y's on the
    # second.
    idx = int(name[1:])
    if name.startswith("y") and idx <= 2:
        return 0
    if name.startswith("x") and idx >= 3:
        return 0
    return 1


def blowup_chart(i: int, j: int, k: int) -> AffineChart:
    """Solve the six bilinear equations on the chart x_i = y_j = y_k = 1."""
    if not (0 <= i <= 5 and 0 <= j <= 2 and 3 <= k <= 5):
        raise InvalidIndex(f"chart index ({i}, {j}, {k}) out of range")
    units = {f"x{i}", f"y{j}", f"y{k}"}
    one = poly_const(AMBIENT_VARS, Fraction(1))
    eqs = [
        substitute(eq, {u: one for u in units}, AMBIENT_VARS)
        for eq in bilinear_equations()
    ]
    eqs = [eq for eq in eqs if not is_zero(eq)]
    for eq in eqs:
        if constant_coefficient(eq):
            raise RedundantChart(
                f"chart ({i}, {j}, {k}) forces the unit relation "
                f"{poly_to_string(eq)} = 0 and is contained in another chart"
            )

    relations: Dict[str, Poly] = {}
    while eqs:
        chosen: Optional[Tuple[str, Poly]] = None
        for eq in eqs:
            candidates = _elimination_candidates(eq)
            if candidates:
                chosen = min(candidates, key=lambda c: _elimination_preference(c[0]))
                break
        if chosen is None:
            break
        name, replacement = chosen
        relations = {
            old: poly_replace(expr, name, replacement) for old, expr in relations.items()
        }
        relations[name] = replacement
        eqs = [poly_replace(eq, name, replacement) for eq in eqs]
        eqs = [eq for eq in eqs if not is_zero(eq)]
    if eqs:
        raise RuntimeError(
            f"chart ({i}, {j}, {k}): equations {[poly_to_string(e) for e in eqs]} "
            "did not reduce to zero"
        )

    free = tuple(v for v in AMBIENT_VARS if v not in units and v not in relations)
    if len(free) != 5:
        raise RuntimeError(f"chart ({i}, {j}, {k}): expected 5 free coordinates, got {free}")

    def ambient_weight(name: str) -> int:
        return 1 if name.startswith("x") and int(name[1:]) >= 3 else 0

    weights = tuple(
        (ambient_weight(v) - ambient_weight(f"x{i}")) % R if v.startswith("x") else 0
        for v in free
    )
    free_relations = tuple(
        sorted(
            (name, substitute(expr, {}, free))
            for name, expr in relations.items()
        )
    )
    return AffineChart((i, j, k), free, free_relations, weights)  # type: ignore[arg-type]


def all_chart_indices() -> Tuple[Tuple[int, int, int], ...]:
    return tuple((i, j, k) for i in range(6) for j in range(3) for k in range(3, 6))


def nonredundant_charts() -> Tuple[AffineChart, ...]:
    """The charts that survive subsumption, derived from the equations."""
    charts = []
    for i, j, k in all_chart_indices():
        try:
            charts.append(blowup_chart(i, j, k))
        except RedundantChart:
            continue
    return tuple(charts)


def chart_relations_satisfy_equations(chart: AffineChart) -> bool:
    """Substituting units and relations into all six equations gives zero."""
    images: Dict[str, Poly] = {u: poly_const(chart.free, Fraction(1)) for u in chart.unit_vars}
    images.update(chart.relation_map)
    return all(
        is_zero(substitute(eq, images, chart.free)) for eq in bilinear_equations()
    )


# ---------------------------------------------------------------------------
# Invariant rings and quotient equations
# ---------------------------------------------------------------------------


def _generator_sort_key(exps: Exponents) -> Tuple[int, Tuple[int, ...]]:
    lead = next(pos for pos, e in enumerate(exps) if e)
    return (lead, tuple(-e for e in exps))


def invariant_ring_chart(chart: AffineChart) -> Tuple[Poly, ...]:
    """Minimal monomial generators of the chart's ring of invariants.

    Weight-zero coordinates are generators themselves; on the weighted
    coordinates every invariant monomial of degree > R factors through a
    smaller invariant one (any R weights in {1, 2} contain a zero-sum
    subsequence mod 3), so enumerating degrees 1..R and keeping the
    indivisible ones is exhaustive.
    """
    weighted = [pos for pos, w in enumerate(chart.weights) if w % R]
    exps_list: List[Exponents] = []
    for pos, w in enumerate(chart.weights):
        if not w % R:
            unit = [0] * 5
            unit[pos] = 1
            exps_list.append(tuple(unit))
    invariant: List[Exponents] = []
    for combo in product(range(R + 1), repeat=len(weighted)):
        if not 1 <= sum(combo) <= R:
            continue
        if sum(e * chart.weights[pos] for e, pos in zip(combo, weighted)) % R:
            continue
        full = [0] * 5
        for e, pos in zip(combo, weighted):
            full[pos] = e
        invariant.append(tuple(full))
    for exps in invariant:
        if not any(
            other != exps and all(o <= e for o, e in zip(other, exps))
            for other in invariant
        ):
            exps_list.append(exps)
    exps_list.sort(key=_generator_sort_key)
    return tuple(poly_monomial(chart.free, exps) for exps in exps_list)


def invariant_coordinate_names(chart: AffineChart) -> Tuple[str, ...]:
    """Names for the invariant generators: v for plain coordinates, v' for a
    pure power of a weighted coordinate, an explicit monomial otherwise."""
    names = []
    for gen in invariant_ring_chart(chart):
        (exps, _), = gen.terms
        support = [(chart.free[pos], e) for pos, e in enumerate(exps) if e]
        if len(support) == 1 and support[0][1] == 1:
            names.append(support[0][0])
        elif len(support) == 1:
            names.append(f"{support[0][0]}'")
        else:
            names.append("*".join(f"{v}^{e}" for v, e in support))
    return tuple(names)


def _chart_restriction(cubics: CubicPair, chart: AffineChart) -> Poly:
    """F restricted to the chart, still in the free (pre-invariant) coordinates."""
    images: Dict[str, Poly] = {u: poly_const(chart.free, Fraction(1)) for u in chart.unit_vars}
    images.update(chart.relation_map)
    return substitute(ambient_cubic_form(cubics), images, chart.free)


def quotient_chart_equation(cubics: CubicPair, chart: AffineChart) -> Poly:
    """The chart equation of the quotient, in the invariant coordinates."""
    if is_zero(cubics.F0) or is_zero(cubics.F1):
        warnings.warn("degenerate cubic pair: one of the forms is zero", stacklevel=2)
    restricted = _chart_restriction(cubics, chart)
    for exps, _ in restricted.terms:
        if sum(e * w for e, w in zip(exps, chart.weights)) % R:
            raise NotInvariantExpressible(
                f"chart {chart.index}: restricted form {poly_to_string(restricted)} "
                "is not invariant"
            )
    generators = invariant_ring_chart(chart)
    gen_exps = [gen.terms[0][0] for gen in generators]
    names = invariant_coordinate_names(chart)
    by_degree = sorted(range(len(gen_exps)), key=lambda g: -sum(gen_exps[g]))
    rewritten: Dict[Exponents, Coeff] = {}
    for exps, coeff in restricted.terms:
        remaining = list(exps)
        out = [0] * len(generators)
        while any(remaining):
            for g in by_degree:
                gexps = gen_exps[g]
                if all(r >= ge for r, ge in zip(remaining, gexps)):
                    remaining = [r - ge for r, ge in zip(remaining, gexps)]
                    out[g] += 1
                    break
            else:
                raise NotInvariantExpressible(
                    f"chart {chart.index}: monomial with exponents {exps} does not "
                    "factor through the invariant generators"
                )
        key = tuple(out)
        rewritten[key] = rewritten.get(key, Fraction(0)) + coeff
    return poly_from_dict(names, rewritten)


# ---------------------------------------------------------------------------
# The chart-by-chart isomorphism with the blown-up plane product
# ---------------------------------------------------------------------------

#: Coordinates of the model P^2 x P^2 x P^1: t0..t2, t3..t5, (s0 : s1).
MIRROR_PLANE_VARS = ("t0", "t1", "t2", "t3", "t4", "t5")
MIRROR_LINE_VARS = ("s0", "s1")


def paired_mirror_index(index: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """The chart t_a = t_l = s_m = 1 of the model matched with a blow-up chart."""
    i, j, k = index
    if i <= 2:
        return (i, k, 1)
    return (j, i, 0)


def mirror_chart_equation(cubics: CubicPair, index: Tuple[int, int, int]) -> Poly:
    """The affine equation s1 F0(t0,t1,t2) + s0 F1(t3,t4,t5) = 0 of the
    blown-up plane product, on the chart paired with ``index``."""
    a, l, m = paired_mirror_index(index)
    free = tuple(
        v
        for v in MIRROR_PLANE_VARS + MIRROR_LINE_VARS
        if v not in (f"t{a}", f"t{l}", f"s{m}")
    )
    one = poly_const(free, Fraction(1))
    f0 = substitute(
        cubics.F0,
        {"x0": one if a == 0 else poly_var(free, "t0"),
         "x1": one if a == 1 else poly_var(free, "t1"),
         "x2": one if a == 2 else poly_var(free, "t2")},
        free,
    )
    f1 = substitute(
        cubics.F1,
        {"x3": one if l == 3 else poly_var(free, "t3"),
         "x4": one if l == 4 else poly_var(free, "t4"),
         "x5": one if l == 5 else poly_var(free, "t5")},
        free,
    )
    s0 = one if m == 0 else poly_var(free, "s0")
    s1 = one if m == 1 else poly_var(free, "s1")
    return poly_add(poly_mul(s1, f0), poly_mul(s0, f1))


def evident_renaming(chart: AffineChart) -> Dict[str, str]:
    """Invariant chart coordinates -> model coordinates: a plain coordinate
    with index a goes to t_a; the primed cube goes to the free line
    coordinate (s0 when the scaled coordinate sits on the second factor,
    s1 on the first)."""
    renaming: Dict[str, str] = {}
    for name in invariant_coordinate_names(chart):
        if name.endswith("'"):
            idx = int(name[1:-1])
            renaming[name] = "s0" if idx >= 3 else "s1"
        else:
            renaming[name] = f"t{name[1:]}"
    return renaming


def chart_isomorphism_check(
    cubics: CubicPair,
    chart: AffineChart,
    renaming: Optional[Mapping[str, str]] = None,
) -> bool:
    """True iff the renamed quotient equation equals the model equation
    exactly.  ``renaming`` overrides entries of the evident renaming (used to
    cross coordinates deliberately in tests)."""
    mirror = mirror_chart_equation(cubics, chart.index)
    names = dict(evident_renaming(chart))
    if renaming:
        names.update(renaming)
    quotient = quotient_chart_equation(cubics, chart)
    try:
        images = {
            old: poly_var(mirror.vars, new) for old, new in names.items()
        }
    except ValueError as exc:
        raise ValueError(f"renaming targets unknown model coordinate: {exc}") from exc
    return substitute(quotient, images, mirror.vars) == mirror


def isomorphism_sweep(cubics: CubicPair) -> Dict[Tuple[int, int, int], bool]:
    """chart_isomorphism_check over all non-redundant charts."""
    return {
        chart.index: chart_isomorphism_check(cubics, chart)
        for chart in nonredundant_charts()
    }


# ---------------------------------------------------------------------------
# Finite-field smoothness evidence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularPoint:
    """A common zero over F_p of a chart equation and all its partials."""

    chart: Tuple[int, int, int]
    coords: Tuple[int, ...]


@dataclass(frozen=True)
class SmoothnessReport:
    """Jacobian-criterion sweep over F_p^5 for every chart.

    ``clean`` means no singular point was found; this is evidence for, not a
    proof of, smoothness in characteristic zero.
    """

    prime: int
    charts_checked: int
    points: Tuple[SingularPoint, ...]

    @property
    def clean(self) -> bool:
        return not self.points


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _coeff_mod(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise BadPrime(f"{p} divides a coefficient denominator ({c})")
    return (c.numerator * pow(c.denominator, -1, p)) % p


def _eval_mod(poly: Poly, p: int, powers: List[np.ndarray]) -> np.ndarray:
    acc = np.zeros(powers[0].shape[1], dtype=np.int64)
    for exps, c in poly.terms:
        term = np.full(powers[0].shape[1], _coeff_mod(c, p), dtype=np.int64)
        for pos, e in enumerate(exps):
            if e:
                term = (term * powers[pos][e]) % p
        acc = (acc + term) % p
    return acc


def smoothness_evidence(cubics: CubicPair, p: int) -> SmoothnessReport:
    """Enumerate F_p^5 on every chart and report Jacobian-criterion failures."""
    if p == R:
        raise BadPrime(f"{p} divides the group order")
    if not _is_prime(p):
        raise BadPrime(f"{p} is not prime")
    grid = np.indices((p,) * 5, dtype=np.int64).reshape(5, -1)
    charts = nonredundant_charts()
    found: List[SingularPoint] = []
    for chart in charts:
        equation = quotient_chart_equation(cubics, chart)
        polys = [equation] + [partial(equation, v) for v in equation.vars]
        max_exp = max(
            (e for poly in polys for exps, _ in poly.terms for e in exps), default=0
        )
        powers: List[np.ndarray] = []
        for pos in range(5):
            row = np.empty((max_exp + 1, grid.shape[1]), dtype=np.int64)
            row[0] = 1
            for e in range(1, max_exp + 1):
                row[e] = (row[e - 1] * grid[pos]) % p
            powers.append(row)
        mask = np.ones(grid.shape[1], dtype=bool)
        for poly in polys:
            mask &= _eval_mod(poly, p, powers) == 0
            if not mask.any():
                break
        for flat in np.flatnonzero(mask):
            found.append(SingularPoint(chart.index, tuple(int(v) for v in grid[:, flat])))
    return SmoothnessReport(p, len(charts), tuple(found))


def render_smoothness_report(report: SmoothnessReport) -> str:
    lines = [
        f"smoothness sweep over F_{report.prime}: {report.charts_checked} charts, "
        f"{len(report.points)} singular point(s)",
        "note: an empty sweep is evidence of smoothness in characteristic zero, "
        "not a proof",
    ]
    for point in report.points:
        i, j, k = point.chart
        coords = ",".join(str(v) for v in point.coords)
        lines.append(f"chart {i},{j},{k}: singular point ({coords})")
    if report.clean:
        lines.append("no singular points found")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Ramification
# ---------------------------------------------------------------------------


def ramification_order(n: int) -> int:
    """Vanishing order of d(t^n)/dt along t = 0 (the quotient map t -> t^n
    ramifies to this order along the exceptional divisor)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return n - 1
