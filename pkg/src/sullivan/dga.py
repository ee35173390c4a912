"""Differential graded algebra models and their cohomology.

A model is a free graded-commutative algebra together with a degree +1
differential given on generators and extended as a derivation.  All
per-degree computations reduce to exact linear algebra on the canonical
monomial bases.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import GradedAlgebra, Poly
from . import linalg


class ModelError(ValueError):
    """Structural problem with a model; carries a diagnostic code."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class NotClosedError(ValueError):
    """Raised when a cocycle was expected; carries the differential."""

    def __init__(self, poly, dpoly):
        super().__init__(f"polynomial is not closed: d({poly}) = {dpoly}")
        self.poly = poly
        self.dpoly = dpoly


class Derivation:
    """Graded Leibniz extension of a generator assignment.

    theta(ab) = theta(a) b + (-1)^(deg(theta) |a|) a theta(b) for
    homogeneous a, b.  The assignment may target a larger algebra that
    contains the source generators by name.
    """

    def __init__(self, source, assignment, degree):
        self.source = source
        self.degree = int(degree)
        target = None
        for p in assignment.values():
            target = p.alg
            break
        self.target = target if target is not None else source
        self.assignment = {}
        for name, p in assignment.items():
            if name not in source.index:
                raise ValueError(f"assignment for unknown generator {name!r}")
            if not p.is_homogeneous():
                raise ValueError(f"assignment for {name} is not homogeneous")
            if not p.is_zero() and p.degree() != source.degrees[source.index[name]] + self.degree:
                raise ValueError(
                    f"assignment for {name} has degree {p.degree()}, "
                    f"expected {source.degrees[source.index[name]] + self.degree}")
            self.assignment[name] = p
        # source generators must exist in the target for the embedding
        for n in source.names:
            if n not in self.target.index:
                raise ValueError(f"target algebra lacks source generator {n!r}")
        self._embed_index = tuple(self.target.index[n] for n in source.names)
        self._cache = {}

    def _embed(self, mono):
        return self.target.monomial((self._embed_index[i], e) for i, e in mono)

    def _on_monomial(self, mono):
        if mono in self._cache:
            return self._cache[mono]
        out = self.target.zero()
        parity = self.degree % 2
        prefix_deg = 0
        for pos, (i, e) in enumerate(mono):
            name = self.source.names[i]
            theta_g = self.assignment.get(name)
            if theta_g is not None and not theta_g.is_zero():
                # prefix (letters before this one), the e copies of g collapse
                # to a factor e * g^(e-1) because |g| is even whenever e > 1
                sign = -1 if (parity and prefix_deg % 2) else 1
                pre = self.target.poly(
                    {self._embed(tuple(mono[:pos])): sign * e})
                rest = list(mono[pos + 1:])
                if e > 1:
                    rest = [(i, e - 1)] + rest
                rest_p = self.target.poly({self._embed(tuple(sorted(rest))): 1})
                out = out + pre * theta_g * rest_p
            prefix_deg += self.source.degrees[i] * e
        self._cache[mono] = out
        return out

    def __call__(self, poly):
        out = self.target.zero()
        for m, c in poly.terms.items():
            out = out + self._on_monomial(m).scale(c)
        return out


def extend_derivation(model, assignment, derivation_degree):
    """Evaluator for the derivation with the given generator assignment."""
    return Derivation(model.algebra, assignment, derivation_degree)


@dataclass(frozen=True)
class CohomologySpace:
    degree: int
    dimension: int
    representatives: tuple          # closed Polys, independent mod coboundaries
    cocycle_basis: tuple            # vectors over the monomial basis
    coboundary_basis: tuple         # RREF vectors over the monomial basis
    basis: tuple                    # the monomial basis of this degree


class DgaModel:
    """Free graded-commutative algebra with a degree +1 differential."""

    def __init__(self, name, generators, differential, provenance=""):
        self.name = name
        self.algebra = generators if isinstance(generators, GradedAlgebra) \
            else GradedAlgebra(generators)
        self.provenance = provenance
        diff = {}
        for gname, p in differential.items():
            if gname not in self.algebra.index:
                raise ModelError("E_UNDECLARED", f"differential on unknown generator {gname!r}")
            if p.alg.gens != self.algebra.gens:
                raise ModelError("E_ALGEBRA", "differential value over a different algebra")
            if p.is_zero():
                continue
            if not p.is_homogeneous():
                raise ModelError("E_INHOMOGENEOUS",
                                 f"d({gname}) is not homogeneous")
            gdeg = self.algebra.degrees[self.algebra.index[gname]]
            if p.degree() != gdeg + 1:
                raise ModelError("E_DEGREE_SHIFT",
                                 f"d({gname}) has degree {p.degree()}, expected {gdeg + 1}")
            diff[gname] = p
        self.differential = diff
        self._d = Derivation(self.algebra, diff, +1)
        self._coh_cache = {}
        self._dmat_cache = {}

    def __repr__(self):
        return f"DgaModel({self.name!r})"

    def d_of(self, name):
        return self.differential.get(name, self.algebra.zero())

    def d(self, poly):
        return self._d(poly)

    @property
    def is_minimal(self):
        """No differential contains a linear (single-letter) monomial."""
        for p in self.differential.values():
            if not p.word_length_part(1).is_zero():
                return False
        return True

    @property
    def is_simply_connected(self):
        return all(d >= 2 for d in self.algebra.degrees)

    def basis_in_degree(self, n):
        return self.algebra.basis_in_degree(n)

    def check_d_squared(self):
        """None if d^2 = 0 on every generator, else the offending name."""
        for gname in self.algebra.names:
            if not self.d(self.d_of(gname)).is_zero():
                return gname
        return None

    def d_matrix(self, n):
        """Matrix of d: degree n -> degree n+1 over the monomial bases."""
        if n not in self._dmat_cache:
            dom = self.basis_in_degree(n)
            cod = self.basis_in_degree(n + 1)
            pos = {m: i for i, m in enumerate(cod)}
            rows = [[Fraction(0)] * len(dom) for _ in cod]
            for j, mono in enumerate(dom):
                image = self.d(self.algebra.poly({mono: 1}))
                for m, c in image.terms.items():
                    rows[pos[m]][j] = c
            self._dmat_cache[n] = rows
        return self._dmat_cache[n]

    def cohomology(self, n):
        if n in self._coh_cache:
            return self._coh_cache[n]
        dom = self.basis_in_degree(n)
        dn = self.d_matrix(n)
        if dom:
            cocycles = linalg.kernel_basis(dn) if dn else \
                [[Fraction(1) if i == j else Fraction(0) for i in range(len(dom))]
                 for j in range(len(dom))]
        else:
            cocycles = []
        if n >= 1:
            prev = self.basis_in_degree(n - 1)
            dprev = self.d_matrix(n - 1)
            images = []
            for j in range(len(prev)):
                col = [dprev[i][j] for i in range(len(dom))]
                if any(x != 0 for x in col):
                    images.append(col)
            cobound = linalg.row_space_basis(images)
        else:
            cobound = []
        cob_pivots = [next(i for i, x in enumerate(row) if x != 0) for row in cobound]
        reps = []
        chosen_rows = list(cobound)
        chosen_pivots = list(cob_pivots)
        for v in cocycles:
            red = linalg.reduce_against(v, chosen_rows, chosen_pivots)
            if any(x != 0 for x in red):
                lead = next(i for i, x in enumerate(red) if x != 0)
                red = [x / red[lead] for x in red]
                # normalize: leading coefficient 1 in basis order
                reps.append(red)
                chosen_rows.append(red)
                chosen_pivots.append(lead)
        rep_polys = tuple(self.algebra.poly_from_vector(v, dom) for v in reps)
        space = CohomologySpace(
            degree=n,
            dimension=len(reps),
            representatives=rep_polys,
            cocycle_basis=tuple(tuple(v) for v in cocycles),
            coboundary_basis=tuple(tuple(v) for v in cobound),
            basis=dom,
        )
        assert space.dimension == len(cocycles) - len(cobound)
        self._coh_cache[n] = space
        return space

    def betti(self, n):
        return self.cohomology(n).dimension


def check_d_squared(model):
    return model.check_d_squared()


def cohomology(model, n):
    return model.cohomology(n)


def basis_in_degree(model, n):
    return model.basis_in_degree(n)


def quadratic_part(model):
    """The word-length-2 part of each generator differential.

    Only meaningful for minimal models, so non-minimal input is rejected.
    """
    if not model.is_minimal:
        raise ValueError("quadratic part requires a minimal model")
    return {name: model.d_of(name).word_length_part(2)
            for name in model.algebra.names}


def cup_products_trivial(model, maxdeg):
    """None if all products of positive-degree classes are exact, else a witness.

    The witness is a pair of representative cocycles whose product has a
    nonzero class.
    """
    if maxdeg < 2:
        raise ValueError("maxdeg must be >= 2")
    from .massey import class_of  # local import to avoid a cycle
    reps = {}
    for n in range(1, maxdeg):
        reps[n] = model.cohomology(n).representatives
    for i in range(1, maxdeg):
        for j in range(i, maxdeg):
            if i + j > maxdeg:
                break
            for u in reps[i]:
                for w in reps[j]:
                    cls = class_of(model, u * w, degree=i + j)
                    if any(x != 0 for x in cls.vector):
                        return (u, w)
    return None


def loopify(model):
    """Free-loop-space model: add a shifted partner y = x' for each generator.

    d-bar equals d on the original generators and -s(dx) on the shifted
    ones, where s is the degree -1 derivation with s(x) = x'.  New
    generators are named with a trailing apostrophe and interleaved after
    their originals so the canonical order is x1 < x1' < x2 < x2' < ...
    """
    if not model.is_simply_connected:
        raise ValueError("loopify requires a simply connected model (degrees >= 2)")
    if not model.is_minimal:
        raise ValueError("loopify requires a minimal model")
    gens = []
    for name, deg in model.algebra.gens:
        gens.append((name, deg))
        gens.append((name + "'", deg - 1))
    big = GradedAlgebra(gens)
    s = Derivation(model.algebra,
                   {name: big.gen(name + "'") for name in model.algebra.names},
                   -1)
    diff = {}
    for name in model.algebra.names:
        dx = model.d_of(name)
        if not dx.is_zero():
            # embed d(x) into the larger algebra via s's embedding machinery
            embedded = big.poly({tuple((big.index[model.algebra.names[i]], e)
                                       for i, e in mono): c
                                 for mono, c in dx.terms.items()})
            diff[name] = embedded
        sdx = s(dx)
        if not sdx.is_zero():
            diff[name + "'"] = -sdx
    out = DgaModel(model.name + "-loops", big, diff,
                   provenance=f"free loop space model of {model.name}")
    bad = out.check_d_squared()
    if bad is not None:
        raise ValueError(f"loopify produced a non-complex: d^2 != 0 on {bad}")
    return out


def models_equal(a, b):
    """Structural equality under the positional generator identification."""
    if len(a.algebra.gens) != len(b.algebra.gens):
        return False
    if a.algebra.degrees != b.algebra.degrees:
        return False
    rename = {i: i for i in range(len(a.algebra.gens))}
    for i, name in enumerate(a.algebra.names):
        da = a.d_of(name)
        db = b.d_of(b.algebra.names[i])
        da_moved = b.algebra.poly({tuple((rename[g], e) for g, e in mono): c
                                   for mono, c in da.terms.items()})
        if da_moved != db:
            return False
    return True
