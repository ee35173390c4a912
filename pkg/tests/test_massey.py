from fractions import Fraction

import pytest

from sullivan.dga import NotClosedError
from sullivan.massey import (class_of, bound, massey_triple,
                             MasseyUndefinedError,
                             classes_equal_mod_indeterminacy)
from sullivan.models import big_lambda, cpn, alpha_class, beta_class


def test_class_of_representative_families():
    model = big_lambda(2)
    beta0 = class_of(model, model.algebra.gen("y1"))
    assert beta0.degree == 3 and not beta0.is_zero()
    exact = class_of(model, model.d(model.algebra.gen("x2")), degree=8)
    assert exact.is_zero()


def test_class_of_rejects_non_cocycles():
    model = big_lambda(2)
    with pytest.raises(NotClosedError) as exc:
        class_of(model, model.algebra.gen("x2"))
    assert not exc.value.dpoly.is_zero()


def test_class_of_half_alpha_one():
    model = big_lambda(2)
    alg = model.algebra
    p = alg.gen("x2") * alg.gen("y1") + \
        (alg.gen("x1") * alg.gen("y2")).scale(Fraction(1, 2))
    assert model.d(p).is_zero()
    half_alpha1 = class_of(model, alpha_class(model, 1))
    got = class_of(model, p)
    assert tuple(got.vector) == tuple(Fraction(1, 2) * x
                                      for x in half_alpha1.vector)


def test_bound_examples():
    model = big_lambda(2)
    alg = model.algebra
    assert bound(model, alg.gen("x1") ** 2) == alg.gen("x2")
    assert bound(model, alg.zero()).is_zero()
    assert bound(model, alg.gen("x1") * alg.gen("y1")) == \
        alg.gen("y2").scale(Fraction(-1, 2))


def test_bound_not_exact():
    model = big_lambda(2)
    assert bound(model, model.algebra.gen("y1")) is None


def _cls(model, kind, p):
    f = alpha_class if kind == "a" else beta_class
    return class_of(model, f(model, p))


@pytest.mark.parametrize("l", [1, 2])
def test_four_tabulated_products(l):
    model = big_lambda(l)
    a0 = _cls(model, "a", 0)
    b0 = _cls(model, "b", 0)
    # <a0, a0, b0> = 1/2 alpha_1
    r = massey_triple(model, a0, a0, b0)
    assert r.well_defined
    a1 = _cls(model, "a", 1)
    assert tuple(r.vector) == tuple(Fraction(1, 2) * x for x in a1.vector)
    # <b0, b0, b0> = 0
    r = massey_triple(model, b0, b0, b0)
    assert r.well_defined and all(x == 0 for x in r.vector)
    # <a0, b0, a0> = 0 (the p3 - p1 factor vanishes)
    r = massey_triple(model, a0, b0, a0)
    assert r.well_defined and all(x == 0 for x in r.vector)
    # <b0, b0, a0> = 1/2 beta_1
    r = massey_triple(model, b0, b0, a0)
    b1 = _cls(model, "b", 1)
    assert tuple(r.vector) == tuple(Fraction(1, 2) * x for x in b1.vector)


def test_result_invariants():
    model = big_lambda(2)
    a0, b0 = _cls(model, "a", 0), _cls(model, "b", 0)
    r = massey_triple(model, a0, a0, b0)
    assert model.d(r.s) == a0.representative * a0.representative
    assert model.d(r.t) == a0.representative * b0.representative
    assert model.d(r.representative).is_zero()
    sign_v = -1 if a0.degree % 2 else 1
    sign_u = -1 if a0.degree % 2 else 1
    rebuilt = (r.s * b0.representative -
               (a0.representative * r.t).scale(sign_u)).scale(sign_v)
    assert rebuilt == r.representative


def test_undefined_when_cup_product_survives():
    model = cpn(2)
    x = class_of(model, model.algebra.gen("x"))
    with pytest.raises(MasseyUndefinedError) as exc:
        massey_triple(model, x, x, x)
    assert not exc.value.offending.is_zero()


def test_well_defined_via_zero_indeterminacy():
    model = big_lambda(1)
    for kinds in ("aab", "bba", "aba", "bab"):
        classes = [_cls(model, k, 0) for k in kinds]
        r = massey_triple(model, *classes)
        assert r.well_defined and r.indeterminacy == ()


def test_representative_independence():
    model = big_lambda(2)
    a0, b0 = _cls(model, "a", 0), _cls(model, "b", 0)
    base = massey_triple(model, a0, a0, b0)
    # perturb the middle representative by a coboundary
    prev = model.basis_in_degree(a0.degree - 1)
    bump = model.d(model.algebra.poly({m: 7 for m in prev}))
    v2 = class_of(model, alpha_class(model, 0) + bump)
    again = massey_triple(model, a0, v2, b0)
    assert tuple(base.vector) == tuple(again.vector)


def test_coset_membership_helper():
    model = big_lambda(2)
    a0, b0 = _cls(model, "a", 0), _cls(model, "b", 0)
    r = massey_triple(model, a0, a0, b0)
    assert classes_equal_mod_indeterminacy(r, r.vector)
    other = tuple(x + 1 for x in r.vector)
    assert not classes_equal_mod_indeterminacy(r, other)


def test_graded_symmetry_sample():
    model = big_lambda(2)
    a1, b0, b1 = _cls(model, "a", 1), _cls(model, "b", 0), _cls(model, "b", 1)
    r1 = massey_triple(model, b0, a1, b1)
    r2 = massey_triple(model, b1, a1, b0)
    s = (b0.degree * a1.degree + a1.degree * b1.degree +
         b1.degree * b0.degree) % 2
    sign = -1 if s == 0 else 1
    assert tuple(r1.vector) == tuple(sign * x for x in r2.vector)
