import random

import pytest

from liaison import (
    Ideal,
    Polynomial,
    RationalPoint,
    ZerodivisorError,
    artinian_invariants,
    artinian_reduce,
    artinian_reduction,
    ideal_equal,
    local_ci_test,
    local_component,
    local_mu,
    make_ring,
    substitute,
    translate_to_origin,
)
from liaison.generators import random_monomial_ideal
from liaison.ideals import ideal_intersect, minimal_monomial_generators


@pytest.fixture
def P3():
    return make_ring(["x", "y", "z", "u"], "Q", "grevlex")


@pytest.fixture
def A3():
    return make_ring(["x", "y", "z"], "Q", "grevlex")


def test_translate_chart(P3):
    x, y, z, u = P3.gens()
    I = Ideal(P3, [z * x + u * y, x**2, x * y, y**2])
    p = RationalPoint.projective(P3, [0, 0, 0, 1])
    J = translate_to_origin(I, p)
    assert J.ring.variables == ("x", "y", "z")
    xx, yy, zz = J.ring.gens()
    assert ideal_equal(J, Ideal(J.ring, [zz * xx + yy, xx**2, xx * yy, yy**2]))


def test_translate_affine_identity(A3):
    x, y, z = A3.gens()
    I = Ideal(A3, [x])
    p = RationalPoint.affine(A3, [0, 0, 0])
    assert ideal_equal(translate_to_origin(I, p), I)


def test_translate_shifts_point(A3):
    x, y, z = A3.gens()
    I = Ideal(A3, [x - 1, y - 2])
    p = RationalPoint.affine(A3, [1, 2, 5])
    J = translate_to_origin(I, p)
    assert ideal_equal(J, Ideal(A3, [x, y]))


def test_translate_point_off_variety_rejected(A3):
    x, *_ = A3.gens()
    with pytest.raises(ValueError):
        translate_to_origin(Ideal(A3, [x - 1]), RationalPoint.affine(A3, [0, 0, 0]))


def test_local_mu_examples(A3):
    x, y, z = A3.gens()
    assert local_mu(Ideal(A3, [x, y])) == 2
    assert local_mu(Ideal(A3, [x, y, x + y])) == 2


def test_local_mu_monomial_oracle():
    rng = random.Random(51)
    R = make_ring(["x", "y", "z", "u"], "F31", "grevlex")
    for _ in range(25):
        I = random_monomial_ideal(R, rng)
        minimal = minimal_monomial_generators([g.leading_monomial() for g in I.gens])
        assert local_mu(I) == len(minimal)


def test_local_mu_redundant_generators_invariant(A3):
    x, y, z = A3.gens()
    base = Ideal(A3, [x**2 - y, y * z])
    padded = Ideal(A3, [x**2 - y, y * z, (x**2 - y) * z, y * z * (1 + x)])
    assert local_mu(base) == local_mu(padded)


def test_local_mu_coordinate_change_invariant(A3):
    rng = random.Random(53)
    x, y, z = A3.gens()
    change = {"x": x + 2 * y, "y": y - z, "z": z + x}  # invertible, fixes the origin
    for _ in range(10):
        gens = []
        for _ in range(rng.randint(1, 3)):
            f = Polynomial.zero(A3)
            for g in (x, y, z, x * y, y * z, x**2):
                if rng.random() < 0.4:
                    f = f + g.scale(rng.randint(1, 3))
            if not f.is_zero():
                gens.append(f)
        if not gens:
            continue
        I = Ideal(A3, gens)
        J = Ideal(A3, [substitute(g, change) for g in gens])
        assert local_mu(I) == local_mu(J)


def test_local_mu_complete_intersection(A3):
    x, y, z = A3.gens()
    # independent linear parts at the origin
    assert local_mu(Ideal(A3, [x + x * y, y + z**2, z + x * z])) == 3


def test_local_mu_needs_origin(A3):
    x, *_ = A3.gens()
    with pytest.raises(ValueError):
        local_mu(Ideal(A3, [x - 1]))


def test_local_component_examples():
    R = make_ring(["x"], "Q", "lex")
    x = R.variable("x")
    assert ideal_equal(local_component(Ideal(R, [x * (x - 1)])), Ideal(R, [x]))
    assert ideal_equal(local_component(Ideal(R, [x**2 * (x - 1)])), Ideal(R, [x**2]))
    primary = Ideal(R, [x**3])
    assert ideal_equal(local_component(primary), primary)


def test_local_component_requires_zero_dimensional(A3):
    x, y, z = A3.gens()
    with pytest.raises(ValueError):
        local_component(Ideal(A3, [x]))


def test_artinian_invariants_examples():
    R = make_ring(["x", "y"], "Q", "grevlex")
    x, y = R.gens()
    assert artinian_invariants(Ideal(R, [x**2, y**2])) == (4, 1, True)
    assert artinian_invariants(Ideal(R, [x**2, x * y, y**2])) == (3, 2, False)
    Rf = make_ring(["x1", "x2"], "Q", "lex")
    x1, x2 = Rf.gens()
    assert artinian_invariants(Ideal(Rf, [x1**2 + x1 * x2, x2**2])) == (4, 1, True)


def test_artinian_length_order_independent():
    rng = random.Random(57)
    R_lex = make_ring(["x", "y"], "F31", "lex")
    R_grev = make_ring(["x", "y"], "F31", "grevlex")
    for _ in range(10):
        exps = [(rng.randint(1, 3), 0), (0, rng.randint(1, 3)), (rng.randint(0, 2), rng.randint(0, 2))]
        lengths = []
        for R in (R_lex, R_grev):
            gens = [Polynomial.monomial(R, e) for e in exps if sum(e) > 0]
            lengths.append(artinian_invariants(Ideal(R, gens))[0])
        assert lengths[0] == lengths[1]


def test_artinian_reduction_curve(A3):
    x, y, z = A3.gens()
    Q = artinian_reduction(Ideal(A3, [x**2, y**2]), z)
    assert artinian_invariants(Q) == (4, 1, True)
    Qn = artinian_reduction(Ideal(A3, [x**2, x * y, y**2]), z)
    assert artinian_invariants(Qn) == (3, 2, False)


def test_artinian_reduction_zerodivisor_reported(A3):
    x, y, z = A3.gens()
    with pytest.raises(ZerodivisorError, match="zerodivisor"):
        artinian_reduction(Ideal(A3, [x**2, y**2]), x)


def test_artinian_reduce_two_cuts():
    R = make_ring(["x", "y", "z", "u"], "Q", "grevlex")
    x, y, z, u = R.gens()
    Q, forms = artinian_reduce(Ideal(R, [x**2, y**2]), seed=5)
    assert Q is not None and len(forms) == 2
    assert artinian_invariants(Q)[2] is True


def test_gorenstein_verdict_independent_of_slice():
    R = make_ring(["x", "y", "z"], "Q", "grevlex")
    x, y, z = R.gens()
    for I, expected in (
        (Ideal(R, [x**2, y**2]), True),
        (Ideal(R, [x**2, x * y, y**2]), False),
    ):
        verdicts = []
        for seed in (1, 2, 3):
            Q, _ = artinian_reduce(I, seed=seed)
            assert Q is not None
            verdicts.append(artinian_invariants(Q)[2])
        assert all(v == expected for v in verdicts)


def test_local_ci_union_fixture():
    R = make_ring(["x", "y", "z", "u"], "Q", "grevlex")
    x, y, z, u = R.gens()
    I1 = Ideal(R, [z * x + u * y, x**2, x * y, y**2])
    I2 = Ideal(R, [y * x + u * z, x**2, x * z, z**2])
    U = ideal_intersect(I1, I2)
    p = RationalPoint.projective(R, [0, 0, 0, 1])
    report = local_ci_test(U, p, seed=3)
    assert report.mu == 2 and report.lci and report.gorenstein

    # condition-(b)-violating union fails the test, with mu > 2
    J1 = Ideal(R, [2 * u * x + z * y, x**2, x * y, y**2])
    J2 = Ideal(R, [u * x + y * z, x**2, x * z, z**2])
    V = ideal_intersect(J1, J2)
    bad = local_ci_test(V, p, seed=3)
    assert bad.mu > 2 and not bad.lci


def test_inconclusive_is_reported_not_guessed():
    # over F3 the surface x*y*(x+y)*(x+2y) = 0 contains every line through
    # the origin of the chart, so no linear slice is ever certified regular
    R = make_ring(["x", "y", "z"], "F3", "grevlex")
    x, y, z = R.gens()
    I = Ideal(R, [x**3 * y - x * y**3])
    p = RationalPoint.projective(R, [0, 0, 1])
    report = local_ci_test(I, p, seed=0, codim=1)
    assert report.gorenstein is None
    assert "inconclusive" in report.note


def test_lci_implies_gorenstein_on_tested_instances():
    R = make_ring(["x", "y", "z"], "Q", "grevlex")
    x, y, z = R.gens()
    p = RationalPoint.affine(R, [0, 0, 0])
    for gens in ([x, y], [x + y * z, y + x**2], [x * y, x**2, y**2]):
        report = local_ci_test(Ideal(R, gens), p, seed=2)
        if report.lci:
            assert report.gorenstein is True
