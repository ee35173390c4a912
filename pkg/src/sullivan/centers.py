"""Center and twisted-center solvers, the free-Lie oracle, and bracket
extraction from minimal models.

Ordinary centrality is decided against the presentation's Lie generators:
ad is a derivation, so vanishing on generators forces vanishing
everywhere.  The twisted condition

    xi beta x = (-1)^(|x||beta| + |beta||xi| + |x||xi|) x beta xi

quantifies over all x, so the solver probes every normal word of degree
up to a bound and labels conclusiveness honestly: a zero solution space
is conclusive (witnesses in hand), and so is the case of an even,
ordinary-central, single-letter beta, where the twisted center provably
equals the ordinary one.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra import rat
from .lie import (FiniteTable, SemidirectFree, graded_commutator,
                  InsufficientBracketData, jacobi_check)
from .dga import quadratic_part


@dataclass
class CenterReport:
    presentation: object
    degree: int
    mode: str                   # "ordinary" | "twisted"
    scope: str                  # "full" | "primitives"
    candidates: list            # [(display, UeaElement)]
    solution: list              # [(coeff vector, UeaElement)]
    witnesses: list             # [(probe display, candidate display, value)]
    conclusive: bool
    notes: list = field(default_factory=list)
    twist: object = None
    probe_bound: int = None

    @property
    def ambient_dimension(self):
        return len(self.candidates)

    @property
    def dimension(self):
        return len(self.solution)

    def solution_vectors(self):
        return [list(vec) for vec, _ in self.solution]


def _element_vector(elt, word_index, rows_needed):
    for w, c in elt.terms.items():
        if w not in word_index:
            word_index[w] = len(word_index)
        rows_needed[word_index[w]] = True


def _kernel_of_equations(candidates, equations):
    """Common kernel of linear maps given as lists of images per candidate.

    equations: list of lists of UeaElements, one list per equation block,
    block[i] = image of candidate i.  Rows are absorbed incrementally and
    the scan stops once the rank saturates (kernel already zero).
    """
    ncand = len(candidates)
    ech_rows, pivots = [], []
    for block in equations:
        if len(ech_rows) == ncand:
            break
        words = set()
        for elt in block:
            words.update(elt.terms)
        for w in sorted(words):
            row = [block[i].terms.get(w, Fraction(0)) for i in range(ncand)]
            row = linalg.reduce_against(row, ech_rows, pivots)
            lead = next((i for i, x in enumerate(row) if x != 0), None)
            if lead is None:
                continue
            ech_rows.append([x / row[lead] for x in row])
            pivots.append(lead)
            if len(ech_rows) == ncand:
                break
    if not ech_rows:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(ncand)]
                for j in range(ncand)]
    return linalg.kernel_basis(ech_rows)


def _combine_candidates(pres, candidates, vec):
    out = pres.zero()
    for c, (_, elt) in zip(vec, candidates):
        if c != 0:
            out = out + elt.scale(c)
    return out


def _candidates(pres, degree, scope):
    if scope == "primitives":
        return list(pres.primitive_basis(degree))
    if scope == "full":
        return [(pres.word_str(w), pres.element({w: 1}))
                for w in pres.words_of_degree(degree)]
    raise ValueError(f"unknown scope {scope!r}")


def _raw_bracket_display(pres, gname, cname):
    """Unreduced bracket value for witness display, when it is tabulated."""
    if not isinstance(pres, FiniteTable):
        return None
    if gname not in pres.index or cname not in pres.index:
        return None
    i, j = pres.index[gname], pres.index[cname]
    if not pres.bracket_available(i, j):
        return None
    raw = pres.bracket(i, j, raw=True)
    if not raw:
        return None
    return _format_lie(pres, raw)


def _format_lie(pres, elt):
    parts = []
    for i in sorted(elt, key=lambda i: (pres.degrees[i], i)):
        c = elt[i]
        body = pres.names[i] if abs(c) == 1 else f"{abs(c)}*{pres.names[i]}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def center(pres, degree, scope="full"):
    """Solution space of [g, xi] = 0 over the chosen degree component."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    candidates = _candidates(pres, degree, scope)
    equations = []
    witnesses = []
    skipped = []
    for gname, g in pres.generator_elements():
        try:
            block = [graded_commutator(g, elt) for _, elt in candidates]
        except InsufficientBracketData as exc:
            skipped.append((gname, str(exc)))
            continue
        equations.append(block)
        for (cname, _), value in zip(candidates, block):
            if not value.is_zero():
                display = _raw_bracket_display(pres, gname, cname)
                witnesses.append((gname, cname, value, display))
    kernel = _kernel_of_equations(candidates, equations)
    solution = [(tuple(vec), _combine_candidates(pres, candidates, vec))
                for vec in kernel]
    notes = []
    if skipped:
        if solution:
            raise InsufficientBracketData(skipped[0][0], f"degree-{degree} candidates")
        notes.append("equations for %s unavailable (table truncated); "
                     "solution space already zero, so the result stands"
                     % ", ".join(g for g, _ in skipped))
    return CenterReport(
        presentation=pres, degree=degree, mode="ordinary", scope=scope,
        candidates=candidates, solution=solution, witnesses=witnesses,
        conclusive=True, notes=notes)


def is_ordinary_central(pres, elt):
    """Does elt commute with every generator?"""
    for _, g in pres.generator_elements():
        if not graded_commutator(g, elt).is_zero():
            return False
    return True


def _is_single_letter(elt):
    if len(elt.terms) != 1:
        return False
    (word, coeff), = elt.terms.items()
    return len(word) <= 1


def twisted_center(pres, degree, beta, probe_bound, scope="full"):
    """Solutions of the twisted-centrality equation for all probes.

    Probes run over every normal word of degree <= probe_bound, including
    the unit.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    beta_deg = beta.degree()
    if beta_deg is None:
        beta_deg = 0
    candidates = _candidates(pres, degree, scope)
    pb = beta_deg % 2
    equations = []
    witnesses = []
    probes = []
    for d in range(probe_bound + 1):
        for w in pres.words_of_degree(d):
            probes.append((pres.word_str(w), pres.element({w: 1}), d))
    pxi = degree % 2
    left = [(cname, elt * beta) for cname, elt in candidates]
    right = [(cname, beta * elt) for cname, elt in candidates]
    for xname, x, xdeg in probes:
        px = xdeg % 2
        sign = -1 if (px * pb + pb * pxi + px * pxi) % 2 else 1
        block = []
        for (cname, eb), (_, be) in zip(left, right):
            value = eb * x - (x * be).scale(sign)
            block.append(value)
            if not value.is_zero():
                witnesses.append((xname, cname, value, None))
        equations.append(block)
    kernel = _kernel_of_equations(candidates, equations)
    solution = [(tuple(vec), _combine_candidates(pres, candidates, vec))
                for vec in kernel]
    notes = []
    conclusive = False
    if not solution:
        conclusive = True
        notes.append("solution space is zero; refutation witnesses recorded")
    else:
        if beta_deg % 2 == 0 and _is_single_letter(beta) and \
                is_ordinary_central(pres, beta):
            ordinary = center(pres, degree, scope)
            if linalg.spans_equal([list(v) for v, _ in solution],
                                  [list(v) for v, _ in ordinary.solution]):
                conclusive = True
                notes.append("beta is even and ordinary-central, so the twisted "
                             "center equals the ordinary center in this degree")
        if not conclusive:
            notes.append(f"probe bound {probe_bound} exhausted without a "
                         "sufficient condition; result is an upper bound")
    return CenterReport(
        presentation=pres, degree=degree, mode="twisted", scope=scope,
        candidates=candidates, solution=solution, witnesses=witnesses,
        conclusive=conclusive, notes=notes, twist=beta, probe_bound=probe_bound)


def zee(pres, outer_name="alpha"):
    """alpha a0 - a0 alpha with a0 = -(a1 + ... + ak), in normal form."""
    if not isinstance(pres, SemidirectFree):
        raise ValueError("zee needs the tensor-algebra (semidirect) presentation")
    alpha = pres.letter(outer_name)
    a0 = pres.zero()
    for name, _ in pres.fiber:
        a0 = a0 - pres.letter(name)
    return alpha * a0 - a0 * alpha


def free_lie_dimension(k, n):
    """Degree-n dimension of the free graded Lie algebra on k odd letters.

    Brute-force oracle: rank of the span of all fully nested left-normed
    bracket words of length n realized inside the tensor algebra.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    pres = SemidirectFree(f"free-lie-{k}", [(f"a{i+1}", 1) for i in range(k)])
    if n == 1:
        return k
    return len(pres.free_lie_basis(n))


def extract_lie(model, maxdeg):
    """Whitehead-bracket table read off the quadratic part of a minimal model.

    Generators shift down one degree; the coefficient of the sorted word
    g_i g_j in d(v) contributes that coefficient times the shifted dual of
    v to [g_i bar, g_j bar].  Degree-1 generators would shift to degree 0
    and are dropped (the comparison happens on connected-component models);
    a quadratic term touching a dropped generator is an error.  The result
    must pass the antisymmetry/Jacobi check, otherwise no convention in
    the configured family works and we refuse to guess.
    """
    if not model.is_minimal:
        raise ValueError("extract_lie requires a minimal model")
    quads = quadratic_part(model)
    kept = [(name, deg - 1) for name, deg in model.algebra.gens
            if deg >= 2 and deg - 1 <= maxdeg]
    kept_names = {n for n, _ in kept}
    index = {n: i for i, (n, _) in enumerate(kept)}
    brackets = {}
    bound = maxdeg
    for vname, q in quads.items():
        if q.is_zero():
            continue
        for mono, coeff in q.terms.items():
            letters = []
            for gi, e in mono:
                letters.extend([model.algebra.names[gi]] * e)
            assert len(letters) == 2
            a, b = letters
            if a not in kept_names or b not in kept_names:
                raise ValueError(
                    f"quadratic term {model.algebra.mono_str(mono)} in d({vname}) "
                    "touches a degree-1 generator; no connected-component "
                    "bracket can be extracted")
            if vname not in kept_names:
                continue  # target dual beyond maxdeg: leave pair undefined
            i, j = sorted((index[a], index[b]))
            key = (i, j)
            brackets.setdefault(key, {})
            tgt = index[vname]
            brackets[key][tgt] = brackets[key].get(tgt, Fraction(0)) + coeff
    table = FiniteTable(
        model.name + "-whitehead", kept, brackets,
        bracket_bound=bound,
        provenance=f"quadratic part of {model.name} (shifted duals)")
    bad = jacobi_check(table, maxdeg)
    if bad is not None:
        raise ValueError(f"extracted brackets violate Jacobi at {bad}; "
                         "no configured convention applies")
    return table


def is_abelian(table):
    return all(not v for v in table.raw_brackets.values())


def rescale_finite_table(table, factors):
    """Rescale basis elements b -> r b; structure constants follow suit.

    factors: {name: nonzero Fraction}.  Relations for overcomplete slices
    transform contravariantly.
    """
    fac = [rat(factors.get(n, 1)) for n in table.names]
    if any(f == 0 for f in fac):
        raise ValueError("rescaling factors must be nonzero")
    brackets = {}
    for (i, j), value in table.raw_brackets.items():
        brackets[(i, j)] = {k: c * fac[i] * fac[j] / fac[k]
                            for k, c in value.items()}
    # rebuild relations from the letter reductions: e_p - sum c e_c = 0
    rel_by_degree = {}
    for letter, expansion in table.letter_reduction.items():
        d = table.degrees[letter]
        slice_ = table.degree_slices[d]
        pos = {i: t for t, i in enumerate(slice_)}
        row = [Fraction(0)] * len(slice_)
        row[pos[letter]] = Fraction(1) * fac[letter]
        for j, c in expansion.items():
            row[pos[j]] = -c * fac[j]
        rel_by_degree.setdefault(d, []).append(row)
    return FiniteTable(table.name + "-rescaled", list(table.basis), brackets,
                       generators=list(table.generators),
                       relations=rel_by_degree,
                       bracket_bound=table.bracket_bound,
                       provenance=table.provenance)
