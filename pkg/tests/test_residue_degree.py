import itertools
import random

import pytest

from curve_samples import ALL_SIGS, OPEN_SIGS, disjoint_family, random_admissible, triangulation
from skeinlab.cyclotomic import root_spec
from skeinlab.exceptions import InadmissibleError
from skeinlab.lattice import LatticeSubgroup, index
from skeinlab.normal_curves import is_even
from skeinlab.residue_degree import (
    D_formula,
    EvenModelError,
    StableDT,
    build_lattices,
    commutative_window,
    deg_zeta,
    independence_certificate,
    is_central,
    open_index_exponent,
    pants_curve_stable_dt,
    residue_order,
    spanning_check,
    stable_dt,
    twist_update,
)
from skeinlab.skein_symbolic import TriangulationModel, are_disjoint
from skeinlab.surface_coords import SurfaceSig, build_datum, build_standard_pants, is_admissible, is_triangular


def lattices(g, p, n, variant=0):
    return build_lattices(build_datum(SurfaceSig(g, p), variant), root_spec(n))


@pytest.mark.parametrize("g, p", ALL_SIGS)
@pytest.mark.parametrize("variant", [0, 1])
def test_residue_order_equals_dimension(g, p, variant):
    for n in range(1, 17):
        lat = lattices(g, p, n, variant)
        assert residue_order(lat) == D_formula(SurfaceSig(g, p), lat.spec)


@pytest.mark.parametrize(
    "g, p, n, expected",
    [(1, 1, 5, 25), (1, 1, 12, 36), (1, 1, 4, 4), (0, 3, 7, 1), (0, 3, 12, 1), (1, 0, 12, 36), (1, 0, 5, 25)],
)
def test_dimension_formula_examples(g, p, n, expected):
    assert D_formula(SurfaceSig(g, p), root_spec(n)) == expected


def test_dimension_formula_rejects_sphere():
    with pytest.raises(ValueError):
        D_formula(SurfaceSig(0, 2), root_spec(5))


@pytest.mark.parametrize("g, p", ALL_SIGS)
def test_parity_lattice_indices(g, p):
    lat = lattices(g, p, 3)
    r = lat.datum.r
    assert index(lat.A_bar, LatticeSubgroup.full(r)) == 2 ** open_index_exponent(SurfaceSig(g, p))
    assert index(lat.A_ev_bar, lat.A_bar) == 2 ** (2 * g)


@pytest.mark.parametrize("g, p", OPEN_SIGS)
def test_inclusion_chain(g, p):
    lat = lattices(g, p, 12)
    assert lat.A_ev_bar.contains_lattice(lat.A_partial_bar)
    assert lat.A_bar.contains_lattice(lat.A_ev_bar)
    assert lat.A_bar.contains_lattice(lat.A_zeta_bar)


def test_closed_case_lattices():
    lat = lattices(2, 0, 12)
    assert lat.A_partial_bar.rank == 0
    assert lat.A_zeta_bar == lat.A_ev_bar.scaled(3)
    assert lattices(2, 0, 5).A_zeta_bar == lattices(2, 0, 5).A_bar.scaled(5)


def test_bad_even_model_fails_loudly():
    pd = build_standard_pants(2)
    with pytest.raises(EvenModelError):
        build_lattices(pd, root_spec(4), even_model=lambda d: [])


def test_center_examples():
    tri = triangulation(1, 1)
    spec = root_spec(5)
    assert is_central(tri, (5, 5, 0), spec)
    assert not is_central(tri, (1, 1, 0), spec)
    assert is_central(tri, (2, 2, 2), spec)
    # 4 | n: the m-th root must be even, and (1,1,0) is not
    assert not is_central(tri, (3, 3, 0), root_spec(12))
    assert is_central(tri, (6, 6, 0), root_spec(12))
    with pytest.raises(InadmissibleError):
        is_central(tri, (1, 0, 0), spec)


def test_closed_center_examples():
    pd = build_standard_pants(2)
    assert is_central(pd, (3, 3, 0, 0, 0, 0), root_spec(3))
    assert not is_central(pd, (1, 1, 0, 0, 0, 0), root_spec(3))
    assert is_central(pd, (0, 0, 0, 3, 0, 0), root_spec(3))


@pytest.mark.parametrize("g, p", OPEN_SIGS)
@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_degree_vanishes_exactly_on_central_diagrams(g, p, n):
    tri = triangulation(g, p)
    lat = lattices(g, p, n)
    m = lat.spec.m
    rng = random.Random(1000 * n + 10 * g + p)
    zero = tuple(0 for _ in lat.residue_quotient.diag if _ != 1)
    count = 0
    for _ in range(200):
        v = random_admissible(rng, g, p, max_sum=400)
        # bias half the samples towards central multiples
        if rng.random() < 0.5:
            v = tuple(m * x for x in v)
        assert (deg_zeta(lat, v) == zero) == is_central(tri, v, lat.spec)
        count += 1
    assert count == 200


@pytest.mark.parametrize("g, p", OPEN_SIGS)
def test_degree_is_additive_on_disjoint_unions(g, p):
    tri = triangulation(g, p)
    model = TriangulationModel(tri)
    lat = lattices(g, p, 12)
    diag = [d for d in lat.residue_quotient.diag if d != 1]
    rng = random.Random(g * 31 + p)
    checked = 0
    for _ in range(1500):
        a = random_admissible(rng, g, p, max_sum=60, terms=2, max_coeff=3)
        b = random_admissible(rng, g, p, max_sum=60, terms=2, max_coeff=3)
        if not are_disjoint(model, a, b):
            continue
        total = tuple(x + y for x, y in zip(a, b))
        summed = tuple((x + y) % d if d else x + y for x, y, d in zip(deg_zeta(lat, a), deg_zeta(lat, b), diag))
        assert deg_zeta(lat, total) == summed
        checked += 1
    assert checked >= 40


@pytest.mark.parametrize("n", [5, 8, 12])
@pytest.mark.parametrize("seed", [0, 1])
def test_primitive_multiples(n, seed):
    tri = triangulation(2, 1)
    lat = lattices(2, 1, n)
    spec = lat.spec
    m = spec.m
    fam = disjoint_family(2, 1, 3, seed)
    for k in (1, 2, 3):
        curves = fam[:k]
        for exps in itertools.product(range(2 * m), repeat=k):
            v = tuple(sum(e * c[i] for e, c in zip(exps, curves)) for i in range(tri.r))
            vanishes = not any(deg_zeta(lat, v))
            expected = all(e % m == 0 for e in exps)
            if expected and spec.case_div4 and any(exps):
                root = tuple(sum(e // m * c[i] for e, c in zip(exps, curves)) for i in range(tri.r))
                expected = is_even(tri, root)
            assert vanishes == expected, exps


@pytest.mark.parametrize("n", [5, 8, 12])
def test_commutative_window_has_distinct_degrees(n):
    lat = lattices(2, 1, n)
    fam = disjoint_family(2, 1, 3)
    m = lat.spec.m
    plain = [tuple(sum(e * c[i] for e, c in zip(exps, fam)) for i in range(9)) for exps in itertools.product(range(m), repeat=3)]
    assert independence_certificate(lat, plain).independent
    window = commutative_window(lat, fam)
    assert independence_certificate(lat, window).independent
    if lat.spec.case_div4:
        assert len(window) > len(plain)


def test_certificate_witness():
    lat = lattices(1, 1, 5)
    cert = independence_certificate(lat, [(1, 1, 0), (2, 2, 0), (1, 1, 0)])
    assert not cert.independent and cert.witness == (0, 2)
    # adding m times a non-even curve changes the degree when 4 | n
    lat12 = lattices(1, 1, 12)
    assert independence_certificate(lat12, [(1, 1, 0), (4, 4, 0)]).independent


@pytest.mark.parametrize("g, p", [(0, 4), (1, 1), (1, 2)])
@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_admissible_vectors_reach_every_residue(g, p, n):
    tri = triangulation(g, p)
    lat = lattices(g, p, n)
    bound = 2 * lat.spec.M + 1
    seen = set()
    for v in itertools.product(range(bound), repeat=tri.r):
        if is_admissible(v, tri):
            seen.add(deg_zeta(lat, v))
    assert len(seen) == residue_order(lat)


@pytest.mark.parametrize("variant", [0, 1])
def test_triangular_vectors_reach_every_residue_genus_two(variant):
    pd = build_standard_pants(2, variant)
    lat = build_lattices(pd, root_spec(3))
    seen = set()
    for nv in itertools.product(range(10), repeat=3):
        for tv in itertools.product(range(-2, 3), repeat=3):
            if is_triangular(nv + tv, pd):
                seen.add(deg_zeta(lat, nv + tv))
    assert len(seen) == residue_order(lat) == 729


def test_stable_dt_bookkeeping():
    pd = build_standard_pants(2)
    omega = [(2, (1, 1, 0, 0, 0, 0)), (1, (0, 1, 1, 0, 0, 0))]
    s = stable_dt((1, 1, 0, 3, 0, 0), omega)
    assert s.mu == (2, 3, 1, 0, 0, 0)
    assert twist_update(s, 0, omega) == s
    assert twist_update(twist_update(s, 2, omega), 3, omega) == twist_update(s, 5, omega)
    assert twist_update(s, 4, omega).eta == (9, 13, 4, 3, 0, 0)
    # no intersection with Omega: eta never moves
    s0 = stable_dt((1, 1, 0, 3, 0, 0))
    assert twist_update(s0, 7, []) == s0
    p = pants_curve_stable_dt(pd, 1)
    assert p.eta == (0, 0, 0, 0, -1, 0)
    lat = build_lattices(pd, root_spec(5))
    assert deg_zeta(lat, p) == lat.residue_quotient.reduce((0, 0, 0, 0, -1, 0))
    assert any(deg_zeta(lat, p))


def test_stable_dt_validation():
    with pytest.raises(ValueError):
        StableDT((0, 0, 0, 1), (0, 0, 0, 0))
    with pytest.raises(ValueError):
        stable_dt((0,) * 6, [(1, (0, 0, 0, 1, 0, 0))])
    with pytest.raises(ValueError):
        deg_zeta(lattices(1, 1, 5), StableDT((0, 0), (0, 0)))


def test_spanning_check():
    f11 = SurfaceSig(1, 1)
    assert spanning_check(f11, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert not spanning_check(f11, [[0] * 3] * 3)
    sig = SurfaceSig(1, 2)
    diag = [[(2 if i == j and i < 3 else int(i == j)) for j in range(6)] for i in range(6)]
    assert spanning_check(sig, diag)  # 2^(4-5+4) = 8
    closed = SurfaceSig(2, 0)
    assert spanning_check(closed, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        spanning_check(f11, [[1, 0], [0, 1]])
