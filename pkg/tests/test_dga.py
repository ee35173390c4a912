from fractions import Fraction

import pytest

from sullivan.algebra import GradedAlgebra
from sullivan.dga import (DgaModel, Derivation, ModelError, loopify,
                          models_equal, quadratic_part, cup_products_trivial,
                          extend_derivation)
from sullivan.models import sphere, cpn, big_lambda, loop_lcpn


def test_differential_must_raise_degree_by_one():
    alg = GradedAlgebra([("x", 2), ("y", 2)])
    with pytest.raises(ModelError) as exc:
        DgaModel("bad", alg, {"y": alg.gen("x")})
    assert exc.value.code == "E_DEGREE_SHIFT"


def test_differential_must_be_homogeneous():
    alg = GradedAlgebra([("x", 2), ("z", 3), ("y", 3)])
    with pytest.raises(ModelError) as exc:
        DgaModel("bad", alg, {"y": alg.gen("x") * alg.gen("x") + alg.gen("z")})
    assert exc.value.code == "E_INHOMOGENEOUS"


def test_check_d_squared_on_builtins():
    for model in (big_lambda(1), big_lambda(2), big_lambda(3),
                  cpn(1), cpn(3), sphere(4), sphere(7)):
        assert model.check_d_squared() is None


def test_check_d_squared_counterexample():
    alg = GradedAlgebra([("x", 3), ("z", 2), ("w", 1)])
    model = DgaModel("chain", alg, {"z": alg.gen("x"), "w": alg.gen("z")})
    assert model.check_d_squared() == "w"


def test_derivation_leibniz_example():
    alg = GradedAlgebra([("x1", 4), ("y1", 3)])
    s = Derivation(alg, {"x1": alg.gen("y1")}, -1)
    assert s(alg.gen("x1") ** 2) == (alg.gen("x1") * alg.gen("y1")).scale(2)


def test_derivation_leibniz_rule_holds():
    model = big_lambda(2)
    alg = model.algebra
    s = extend_derivation(model, {"x1": alg.gen("y1"), "x2": alg.gen("y2")}, -1)
    samples = [alg.gen("x1"), alg.gen("x2"), alg.gen("y1"),
               alg.gen("x1") * alg.gen("y1"), alg.gen("x1") ** 2]
    for a in samples:
        for b in samples:
            da = a.degree()
            sign = -1 if da % 2 else 1
            assert s(a * b) == s(a) * b + (a * s(b)).scale(sign)


def test_d_on_closed_generators():
    model = big_lambda(2)
    assert model.d(model.algebra.gen("y1")).is_zero()
    assert model.d(model.algebra.gen("x1") * model.algebra.gen("y1")).is_zero()


def test_d_squared_zero_matrix_level():
    model = big_lambda(2)
    for n in range(0, 16):
        dn = model.d_matrix(n)
        dn1 = model.d_matrix(n + 1)
        cols = len(dn[0]) if dn else 0
        for j in range(cols):
            col = [dn[i][j] for i in range(len(dn))]
            image = [sum(dn1[i][k] * col[k] for k in range(len(col)))
                     for i in range(len(dn1))]
            assert all(x == 0 for x in image)


def test_cohomology_of_lambda4():
    model = big_lambda(2)
    h3 = model.cohomology(3)
    assert h3.dimension == 1
    assert str(h3.representatives[0]) == "y1"
    assert model.cohomology(1).dimension == 0
    h4 = model.cohomology(4)
    assert h4.dimension == 1
    assert str(h4.representatives[0]) == "x1"


def test_cohomology_dimension_two_ways():
    model = big_lambda(1)
    for n in range(0, 12):
        space = model.cohomology(n)
        assert space.dimension == \
            len(space.cocycle_basis) - len(space.coboundary_basis)
        for rep in space.representatives:
            assert model.d(rep).is_zero()


def test_betti_pattern_all_l():
    for l in (1, 2, 3):
        model = big_lambda(l)
        expected = {0}
        p = 0
        while 2 * (l + (2 * l - 1) * p) - 1 <= 20:
            if 2 * (l + (2 * l - 1) * p) <= 20:
                expected.add(2 * (l + (2 * l - 1) * p))
            expected.add(2 * (l + (2 * l - 1) * p) - 1)
            p += 1
        for n in range(21):
            assert model.betti(n) == (1 if n in expected else 0)


def test_cup_products_trivial_on_loop_models():
    assert cup_products_trivial(big_lambda(2), 20) is None
    assert cup_products_trivial(sphere(4), 8) is None


def test_cup_products_witness_on_cp2():
    witness = cup_products_trivial(cpn(2), 8)
    assert witness is not None
    u, w = witness
    assert str(u) == "x" and str(w) == "x"


def test_loopify_spheres_and_projective_spaces():
    for l in (1, 2, 3):
        out = loopify(sphere(2 * l))
        assert models_equal(out, big_lambda(l))
        assert out.check_d_squared() is None
    for n in range(1, 6):
        out = loopify(cpn(n))
        assert models_equal(out, loop_lcpn(n))
        assert out.check_d_squared() is None


def test_loopify_odd_sphere_is_closed():
    out = loopify(sphere(5))
    assert len(out.algebra.gens) == 2
    assert out.algebra.degrees == (5, 4)
    assert not out.differential


def test_loopify_rejects_non_simply_connected():
    with pytest.raises(ValueError):
        loopify(loop_lcpn(2))


def test_loopify_names_are_suffixed():
    out = loopify(sphere(4))
    assert out.algebra.names == ("x", "x'", "y", "y'")


def test_quadratic_part():
    model = big_lambda(2)
    q = quadratic_part(model)
    alg = model.algebra
    assert q["x2"] == alg.gen("x1") ** 2
    assert q["y2"] == (alg.gen("x1") * alg.gen("y1")).scale(-2)
    for n in range(2, 6):
        qn = quadratic_part(loop_lcpn(n))
        assert all(p.is_zero() for p in qn.values())
    q1 = quadratic_part(cpn(1))
    assert q1["y"] == cpn(1).algebra.gen("x") ** 2


def test_quadratic_part_requires_minimal():
    alg = GradedAlgebra([("x", 2), ("y", 3), ("z", 2)])
    minimal = DgaModel("min", alg, {"y": alg.gen("z") * alg.gen("x")})
    assert minimal.is_minimal
    nonmin = DgaModel("nonmin", alg, {"z": alg.gen("y")})
    assert not nonmin.is_minimal
    with pytest.raises(ValueError):
        quadratic_part(nonmin)
