import json
import random
from fractions import Fraction

import pytest

from curve_samples import OPEN_SIGS, disjoint_family, primitive_curves, random_admissible, triangulation
from skeinlab.cyclotomic import CycloScalar, root_spec
from skeinlab.exceptions import InadmissibleError, UnsupportedError
from skeinlab.normal_curves import peripheral_vectors
from skeinlab.skein_symbolic import (
    CHEBYSHEV,
    DIAGRAM,
    SkeinElement,
    TorusModel,
    disjoint_product,
    dump_skein,
    element,
    from_chebyshev,
    lead_term_open,
    load_skein,
    skein_from_json,
    skein_to_json,
    to_chebyshev,
    torus_skein,
    trace_project,
)
from skeinlab.surface_coords import build_standard_pants, surface_to_json
from skeinlab.torus_algebra import TorusSkein, reduced_trace


def test_primitive_curve_is_fixed():
    tri = triangulation(1, 1)
    x = element(tri, 5, {(1, 1, 0): 1})
    assert to_chebyshev(x).terms == x.terms


def test_square_of_a_curve():
    tri = triangulation(1, 1)
    x = element(tri, 5, {(2, 2, 0): 1})
    cheb = to_chebyshev(x)
    assert cheb.basis == CHEBYSHEV
    assert cheb.terms == {(0, 0, 0): 2, (2, 2, 0): 1}
    assert from_chebyshev(cheb) == x


def test_disjoint_primitives_are_fixed():
    tri = triangulation(2, 1)
    c1, c2, _ = disjoint_family(2, 1, 3)
    key = tuple(a + b for a, b in zip(c1, c2))
    x = element(tri, 5, {key: 1})
    assert to_chebyshev(x).terms == x.terms


def test_cube_with_peripheral_part():
    # x^3 = T_3 + 3 T_1 for the curve, times T_1 of the peripheral loop
    tri = triangulation(1, 1)
    x = element(tri, 7, {(3 + 2, 3 + 2, 0 + 2): 1})
    cheb = to_chebyshev(x)
    assert cheb.terms == {(5, 5, 2): 1, (3, 3, 2): 3}


@pytest.mark.parametrize("g, p", OPEN_SIGS)
def test_basis_change_roundtrip(g, p):
    tri = triangulation(g, p)
    rng = random.Random(17 * g + p)
    for _ in range(25):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            v = random_admissible(rng, g, p, max_sum=40, terms=2, max_coeff=4)
            terms[v] = CycloScalar.zeta(5, rng.randint(0, 4)) * rng.randint(-3, 3)
        x = element(tri, 5, terms)
        assert from_chebyshev(to_chebyshev(x)) == x
        y = SkeinElement(x.model, 5, terms, CHEBYSHEV)
        assert to_chebyshev(from_chebyshev(y)) == y


@pytest.mark.parametrize("g, p", [(1, 1), (1, 2), (2, 1)])
def test_basis_change_is_unitriangular(g, p):
    tri = triangulation(g, p)
    rng = random.Random(g + p)
    for _ in range(20):
        v = random_admissible(rng, g, p, max_sum=60, terms=2, max_coeff=5)
        cheb = to_chebyshev(element(tri, 5, {v: 1}))
        assert cheb.terms[v] == 1
        assert all(sum(k) < sum(v) for k in cheb.terms if k != v)


def test_trace_projection_examples():
    tri = triangulation(1, 1)
    spec = root_spec(5)
    central = SkeinElement(element(tri, 5, {}).model, 5, {(5, 5, 0): 2, (2, 2, 2): 1}, CHEBYSHEV)
    assert trace_project(central, spec) == central
    noncentral = SkeinElement(central.model, 5, {(1, 1, 0): 1}, CHEBYSHEV)
    assert trace_project(noncentral, spec).is_zero()
    mixed = central + noncentral
    assert trace_project(mixed, spec) == central


@pytest.mark.parametrize("n", [3, 5, 12])
def test_trace_projection_is_idempotent_and_center_linear(n):
    tri = triangulation(1, 2)
    spec = root_spec(n)
    rng = random.Random(n)
    periph = peripheral_vectors(tri)
    for _ in range(15):
        v = random_admissible(rng, 1, 2, max_sum=40, terms=2, max_coeff=3)
        x = element(tri, n, {v: 1})
        t = trace_project(x, spec)
        assert trace_project(t, spec) == t
        # multiplying by a peripheral loop (central, disjoint from everything) commutes with the projection
        z = element(tri, n, {periph[0]: 1})
        assert trace_project(disjoint_product(z, x), spec) == disjoint_product(z, t)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_trace_matches_torus_matrix_trace(n):
    spec = root_spec(n)
    for a in range(spec.M):
        for b in range(spec.M):
            for basis in (DIAGRAM, CHEBYSHEV):
                y = element("torus", n, {(a, b): 1}, basis)
                assert torus_skein(trace_project(y, spec), spec) == reduced_trace(torus_skein(y, spec), spec)


def test_torus_dictionary():
    spec = root_spec(5)
    d = element("torus", 5, {(2, 0): 1})
    assert torus_skein(d, spec) == TorusSkein.e(5, 2, 0) + TorusSkein.e(5, 0, 0)
    c = element("torus", 5, {(0, 0): 1}, CHEBYSHEV)
    assert torus_skein(c, spec) == TorusSkein.unit(5)
    with pytest.raises(ValueError):
        TorusModel().assemble([((1, 0), 1), ((0, 1), 1)])


def test_lead_term():
    tri = triangulation(1, 1)
    assert lead_term_open(element(tri, 5, {(1, 1, 0): 3}))[0] == (1, 1, 0)
    assert lead_term_open(element(tri, 5, {(1, 1, 0): 1, (2, 2, 0): 4})) == ((2, 2, 0), 4)
    with pytest.raises(ValueError):
        lead_term_open(element(tri, 5, {}))


def test_lead_term_tiebreak_is_lexicographic():
    tri = triangulation(1, 1)
    x = element(tri, 5, {(2, 1, 1): 1, (1, 2, 1): 2})
    assert lead_term_open(x) == ((2, 1, 1), 1)


@pytest.mark.parametrize("g, p", [(1, 2), (2, 1)])
def test_degree_of_disjoint_product_is_additive(g, p):
    tri = triangulation(g, p)
    fam = disjoint_family(g, p, 2)
    rng = random.Random(g * p)
    for _ in range(10):
        ka, kb = rng.randint(1, 4), rng.randint(1, 4)
        a = tuple(ka * c for c in fam[0])
        b = tuple(kb * c for c in fam[1])
        x = element(tri, 5, {a: 1, fam[0]: 2})
        y = element(tri, 5, {b: 3})
        lead_x, lead_y = lead_term_open(x)[0], lead_term_open(y)[0]
        assert lead_term_open(disjoint_product(x, y))[0] == tuple(u + v for u, v in zip(lead_x, lead_y))


def test_disjoint_product_rejects_crossing_curves():
    tri = triangulation(1, 1)
    x = element(tri, 5, {(1, 1, 0): 1})
    y = element(tri, 5, {(0, 1, 1): 1})
    with pytest.raises(UnsupportedError):
        disjoint_product(x, y)


def test_closed_surfaces_are_refused():
    with pytest.raises(UnsupportedError):
        element(build_standard_pants(2), 5, {(1, 1, 0, 0, 0, 0): 1})


def test_inadmissible_keys_rejected():
    with pytest.raises(InadmissibleError):
        element(triangulation(1, 1), 5, {(1, 0, 0): 1})


def test_json_roundtrip(tmp_path):
    tri = triangulation(1, 2)
    curve = primitive_curves(1, 2)[0]
    x = element(tri, 12, {curve: CycloScalar.zeta(12) + 1, tuple(2 * c for c in curve): -2})
    assert skein_from_json(skein_to_json(x)) == x
    surf = tmp_path / "surface.json"
    surf.write_text(json.dumps(surface_to_json(tri)))
    path = tmp_path / "skein.json"
    dump_skein(x, str(path), surface_ref="surface.json")
    assert load_skein(str(path)) == x
    t = element("torus", 5, {(1, 2): 1}, CHEBYSHEV)
    assert skein_from_json(skein_to_json(t)) == t
    plain = {"surface": "torus", "n": 5, "basis": "diagram", "terms": [{"coords": [1, 0], "coeff": "1/2"}]}
    assert skein_from_json(plain).terms == {(1, 0): CycloScalar.rational(5, Fraction(1, 2))}
    with pytest.raises(ValueError):
        skein_from_json({"surface": "torus", "terms": []})
