"""Triple Massey products with explicit representatives and indeterminacy.

For classes u, v, w with uv and vw exact, pick bounding cochains
dS = UV and dT = VW; the product is the class of

    (-1)^|v| (S W - (-1)^|u| U T)

taken modulo the ideal (u, w).  Bounding cochains come from the
deterministic solver (free variables zero), so reports are reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .dga import NotClosedError


@dataclass(frozen=True)
class CohomologyClass:
    model: object
    degree: int
    vector: tuple       # coordinates in the representative basis of H^degree
    representative: object  # the cocycle that was classified

    def is_zero(self):
        return all(x == 0 for x in self.vector)

    def __str__(self):
        return f"[{self.representative}]"


class MasseyUndefinedError(ValueError):
    """A cup-product precondition failed; carries the offending class."""

    def __init__(self, which, cls):
        super().__init__(f"Massey product undefined: {which} has nonzero class {cls}")
        self.which = which
        self.offending = cls


@dataclass(frozen=True)
class MasseyResult:
    u: CohomologyClass
    v: CohomologyClass
    w: CohomologyClass
    s: object           # dS = U V
    t: object           # dT = V W
    representative: object
    degree: int
    vector: tuple       # class of the representative
    indeterminacy: tuple  # basis vectors of the indeterminacy subspace
    well_defined: bool


def class_of(model, p, degree=None):
    """Coordinates of a closed polynomial in the cohomology basis."""
    if p.is_zero():
        if degree is None:
            raise ValueError("class_of(0) needs an explicit degree")
        n = degree
    else:
        n = p.degree()
        if degree is not None and degree != n:
            raise ValueError(f"degree mismatch: polynomial has degree {n}")
    dp = model.d(p)
    if not dp.is_zero():
        raise NotClosedError(p, dp)
    space = model.cohomology(n)
    if not space.basis:
        return CohomologyClass(model, n, (), p)
    vec = model.algebra.vector_of(p, space.basis)
    cols = [model.algebra.vector_of(rep, space.basis) for rep in space.representatives]
    cols += [list(row) for row in space.coboundary_basis]
    if cols:
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(space.basis))]
        sol = linalg.solve(matrix, vec)
        if sol is None:
            raise AssertionError("cocycle not in span of representatives + coboundaries")
        coords = tuple(sol[: space.dimension])
    else:
        if any(x != 0 for x in vec):
            raise AssertionError("nonzero cocycle in a zero cohomology space")
        coords = ()
    return CohomologyClass(model, n, coords, p)


def bound(model, p, degree=None):
    """S with dS = p (free variables zero) or None when [p] != 0."""
    if p.is_zero():
        return model.algebra.zero()
    n = p.degree()
    dp = model.d(p)
    if not dp.is_zero():
        raise NotClosedError(p, dp)
    dom = model.basis_in_degree(n - 1)
    if not dom:
        return None
    mat = model.d_matrix(n - 1)
    vec = model.algebra.vector_of(p, model.basis_in_degree(n))
    sol = linalg.solve(mat, vec)
    if sol is None:
        return None
    return model.algebra.poly_from_vector(sol, dom)


def _indeterminacy(model, u, w, target_degree):
    """Span of u.H^(|v|+|w|-1) + H^(|u|+|v|-1).w inside H^target."""
    space = model.cohomology(target_degree)
    vecs = []
    left_deg = target_degree - u.degree
    right_deg = target_degree - w.degree
    if left_deg >= 0:
        for c in model.cohomology(left_deg).representatives:
            cls = class_of(model, u.representative * c, degree=target_degree)
            vecs.append(list(cls.vector))
    if right_deg >= 0:
        for c in model.cohomology(right_deg).representatives:
            cls = class_of(model, c * w.representative, degree=target_degree)
            vecs.append(list(cls.vector))
    if space.dimension == 0:
        return ()
    return tuple(tuple(v) for v in linalg.row_space_basis(vecs, space.dimension))


def massey_triple(model, u, v, w):
    """The triple Massey product of three cohomology classes."""
    for name, cls in (("u", u), ("v", v), ("w", w)):
        if cls.model is not model:
            raise ValueError(f"class {name} belongs to a different model")
    U, V, W = u.representative, v.representative, w.representative
    uv = U * V
    uv_class = class_of(model, uv, degree=u.degree + v.degree)
    if not uv_class.is_zero():
        raise MasseyUndefinedError("u*v", uv_class)
    vw = V * W
    vw_class = class_of(model, vw, degree=v.degree + w.degree)
    if not vw_class.is_zero():
        raise MasseyUndefinedError("v*w", vw_class)
    S = bound(model, uv, degree=u.degree + v.degree)
    T = bound(model, vw, degree=v.degree + w.degree)
    assert S is not None and T is not None
    assert model.d(S) == uv and model.d(T) == vw
    sign_v = -1 if v.degree % 2 else 1
    sign_u = -1 if u.degree % 2 else 1
    R = (S * W - (U * T).scale(sign_u)).scale(sign_v)
    target = u.degree + v.degree + w.degree - 1
    cls = class_of(model, R, degree=target)
    ind = _indeterminacy(model, u, w, target)
    return MasseyResult(
        u=u, v=v, w=w, s=S, t=T,
        representative=R,
        degree=target,
        vector=cls.vector,
        indeterminacy=ind,
        well_defined=(len(ind) == 0),
    )


def classes_equal_mod_indeterminacy(result, vector):
    """Is `vector` in the coset vector(result) + indeterminacy?"""
    diff = [a - b for a, b in zip(result.vector, vector)]
    if not result.indeterminacy:
        return all(x == 0 for x in diff)
    rows = [list(r) for r in result.indeterminacy]
    red, pivots, _ = linalg.rref(rows)
    return linalg.in_span(diff, red.rows, pivots)
