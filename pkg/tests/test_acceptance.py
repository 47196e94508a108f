"""Acceptance suite: one test per shipped acceptance criterion.

Each test is self-contained and freezes its expected values inline; the
terminal summary (see conftest) reports one PASS/FAIL line per criterion.
"""

import random
import time

import pytest

from sodcert.chars import Character, CharMultiset, invariants_dim
from sodcert.equivariant_cohomology import (
    HypersurfaceSpec,
    WeightedProjSpace,
    cohomology_Pn,
    cohomology_hypersurface,
)
from sodcert.pushforward import Divisor3, EqLineBundle, divisor_of, table_as_text, table_records
from sodcert.sod_engine import (
    EquivariantM,
    FOURFOLD,
    LineBundleY,
    Opaque,
    ext_oracle,
    run_main_theorem_trace,
    validate_trace,
)
from sodcert.geometry_charts import (
    FERMAT_PAIR,
    chart_relations_satisfy_equations,
    cubic_pair_from_config,
    isomorphism_sweep,
    nonredundant_charts,
    ramification_order,
    smoothness_evidence,
)
from sodcert.cli import run_command

from oracles import brute_force_Pn, random_cubic_coefficient_rows


def _chi(w):
    return Character(w % 3)


def _space(*weights):
    return WeightedProjSpace(tuple(_chi(w) for w in weights))


def _M(i, j):
    return EquivariantM(EqLineBundle(i, _chi(j)))


# ---------------------------------------------------------------------------


def test_criterion_1_divisor_table(capsys):
    expected = (
        "line bundle                 E'   H1   H2\n"
        "Psi(O_M tensor chi_0)        0    0    0\n"
        "Psi(O_M tensor chi_1)        1   -2   -1\n"
        "Psi(O_M tensor chi_2)        1   -1   -2\n"
        "Psi(O_M(1) tensor chi_0)     0    1    0\n"
        "Psi(O_M(1) tensor chi_1)     1   -1   -1\n"
        "Psi(O_M(1) tensor chi_2)     0    0    1\n"
        "Psi(O_M(2) tensor chi_0)     0    2    0\n"
        "Psi(O_M(2) tensor chi_1)     0    0    2\n"
        "Psi(O_M(2) tensor chi_2)     0    1    1\n"
    )
    assert table_as_text() == expected
    assert run_command(["table"]) == 0
    assert capsys.readouterr().out == expected
    assert table_records() == [
        {"i": 0, "j": 0, "a": 0, "b": 0, "c": 0},
        {"i": 0, "j": 1, "a": 1, "b": -2, "c": -1},
        {"i": 0, "j": 2, "a": 1, "b": -1, "c": -2},
        {"i": 1, "j": 0, "a": 0, "b": 1, "c": 0},
        {"i": 1, "j": 1, "a": 1, "b": -1, "c": -1},
        {"i": 1, "j": 2, "a": 0, "b": 0, "c": 1},
        {"i": 2, "j": 0, "a": 0, "b": 2, "c": 0},
        {"i": 2, "j": 1, "a": 0, "b": 0, "c": 2},
        {"i": 2, "j": 2, "a": 0, "b": 1, "c": 1},
    ]


def test_criterion_2_coefficient_sets():
    a = [[0, 1, 1], [0, 1, 0], [0, 0, 0]]
    b = [[0, -2, -1], [1, -1, 0], [2, 0, 1]]
    c = [[0, -1, -2], [0, -1, 1], [0, 2, 1]]
    for i in range(3):
        for j in range(3):
            divisor = divisor_of(EqLineBundle(i, _chi(j)))
            assert divisor == Divisor3(a[i][j], b[i][j], c[i][j]), (i, j)


def test_criterion_3_key_ext_vanishing():
    profile = ext_oracle(_M(0, 0), _M(1, 1))
    assert profile.is_zero()
    dims = profile.as_dict()
    for degree in range(6):
        assert dims.get(degree, 0) == 0, f"degree {degree}"


def test_criterion_4_complete_orthogonality():
    for i in range(3):
        for j in range(3):
            for jp in range(3):
                if j == jp:
                    continue
                assert ext_oracle(_M(i, j), _M(i, jp)).is_zero(), (i, j, jp)
                assert ext_oracle(_M(i, jp), _M(i, j)).is_zero(), (i, jp, j)


def _state_shape(sod):
    return [
        tuple(t.divisor.as_tuple()) if isinstance(t, LineBundleY) else "opaque"
        for t in sod.terms
    ]


def test_criterion_5_main_trace(capsys):
    started = time.perf_counter()
    trace = run_main_theorem_trace()
    problems = validate_trace(trace)
    elapsed = time.perf_counter() - started

    assert problems == ()
    displayed = {
        0: [(0, 0, 0), (1, -2, -1), (1, -1, -2), (0, 1, 0), (1, -1, -1),
            (0, 0, 1), (0, 2, 0), (0, 0, 2), (0, 1, 1), "opaque"],
        1: [(1, -2, -1), (1, -1, -2), (0, 0, 0), (1, -1, -1), (0, 1, 0),
            (0, 0, 1), (0, 2, 0), (0, 0, 2), (0, 1, 1), "opaque"],
        2: [(0, 0, 0), (1, -1, -1), (0, 1, 0), (0, 0, 1), (0, 2, 0),
            (0, 0, 2), (0, 1, 1), "opaque", (0, 2, 1), (0, 1, 2)],
        4: [(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 2, 0), (0, 0, 2),
            (0, 1, 1), "opaque", (0, 2, 1), (0, 1, 2), (0, 2, 2)],
        5: ["opaque", (0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 2, 0),
            (0, 0, 2), (0, 1, 1), (0, 2, 1), (0, 1, 2), (0, 2, 2)],
    }
    for step_idx, shape in displayed.items():
        assert _state_shape(trace.steps[step_idx].state) == shape, step_idx

    closing = trace.certificates[-1]
    assert closing.rule == "verify_block_equals_D0"
    assert closing.checks and all(check.profile.is_zero() for check in closing.checks)
    assert isinstance(trace.final[0], Opaque)

    assert run_command(["trace"]) == 0
    capsys.readouterr()
    assert elapsed < 1.0, f"trace took {elapsed:.3f}s"


def test_criterion_6_cohomology_spot_checks():
    curve = HypersurfaceSpec(_space(0, 0, 1), 3, _chi(0))
    assert cohomology_hypersurface(curve, 0)[1] == CharMultiset({2: 1})
    assert cohomology_hypersurface(curve, 1)[0] == CharMultiset({0: 2, 1: 1})
    assert cohomology_hypersurface(curve, 2)[0] == CharMultiset({0: 3, 1: 2, 2: 1})
    assert cohomology_hypersurface(FOURFOLD, 1)[0] == CharMultiset({0: 3, 1: 3})
    fiber = _space(0, 1)
    assert cohomology_Pn(fiber, 1)[0] == CharMultiset({0: 1, 1: 1})
    assert cohomology_Pn(fiber, 2)[0] == CharMultiset({0: 1, 1: 1, 2: 1})


def _weight_vectors(n):
    vectors = [()]
    for _ in range(n + 1):
        vectors = [v + (w,) for v in vectors for w in range(3)]
    return vectors


def test_criterion_7_property_suites():
    # (a) exhaustive agreement with the monomial-enumeration oracle
    for n in (1, 2, 3):
        for weights in _weight_vectors(n):
            space = _space(*weights)
            for d in range(-9, 10):
                graded = cohomology_Pn(space, d)
                flattened = {deg: dict(V.items()) for deg, V in graded.items()}
                assert flattened == brute_force_Pn(weights, d), (weights, d)

    # (b) the duality pairing H^l(O(d)) x H^{n-l}(O(-d-n-1)) respects characters
    empty = CharMultiset()
    for n in (1, 2, 3):
        for weights in _weight_vectors(n):
            space = _space(*weights)
            W = sum(weights)
            for d in range(-9, 10):
                graded = cohomology_Pn(space, d)
                dual = cohomology_Pn(space, -d - n - 1)
                for l in range(n + 1):
                    V = graded.get(l, empty)
                    Vdual = dual.get(n - l, empty)
                    for c in range(3):
                        assert V.multiplicity(_chi(c)) == Vdual.multiplicity(
                            _chi(-W - c)
                        ), (weights, d, l, c)

    # (c) Euler characteristic of twists of a plane cubic
    for weights in ((0, 0, 1), (0, 1, 1), (0, 0, 0)):
        curve = HypersurfaceSpec(_space(*weights), 3, _chi(0))
        for d in range(-4, 5):
            graded = cohomology_hypersurface(curve, d)
            h0 = graded.get(0, CharMultiset()).total_dim()
            h1 = graded.get(1, CharMultiset()).total_dim()
            assert h0 - h1 == 3 * d, (weights, d)

    # (d) isotypic pieces exhaust the dimension
    rng = random.Random(987654321)
    for _ in range(1000):
        V = CharMultiset({w: rng.randrange(7) for w in range(3)})
        total = sum(invariants_dim(V, _chi(t)) for t in range(3))
        assert total == V.total_dim()


def test_criterion_8_chart_suite():
    charts = nonredundant_charts()
    assert len(charts) == 18
    for chart in charts:
        assert chart_relations_satisfy_equations(chart), chart.index

    assert all(isomorphism_sweep(FERMAT_PAIR).values())
    rng = random.Random(424243)
    random_pair = cubic_pair_from_config(
        {
            "F0": random_cubic_coefficient_rows(rng),
            "F1": random_cubic_coefficient_rows(rng),
        }
    )
    assert all(isomorphism_sweep(random_pair).values())

    for p in (5, 7):
        assert smoothness_evidence(FERMAT_PAIR, p).clean, p
    started = time.perf_counter()
    assert smoothness_evidence(FERMAT_PAIR, 13).clean
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"p=13 sweep took {elapsed:.1f}s"

    singular = cubic_pair_from_config({"F0": [[0, 3, 0, 1]], "F1": [[0, 3, 0, 1]]})
    assert not smoothness_evidence(singular, 7).clean

    assert ramification_order(3) == 2
