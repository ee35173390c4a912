"""Graded Lie presentations and universal enveloping algebra arithmetic.

Two presentation flavours:

* FiniteTable -- an explicit basis with structure constants.  The basis
  may be overcomplete: per-degree linear relations can be registered and
  every computation happens in the quotient (non-canonical letters are
  rewritten into the canonical complement of the relation space).
  Brackets between elements whose degree sum exceeds `bracket_bound` are
  treated as unknown and raise InsufficientBracketData when touched.

* SemidirectFree -- odd "fiber" letters generating a free graded Lie
  algebra realized inside its tensor algebra, plus "outer" basis elements
  acting through tabulated brackets [fiber_letter, outer].  The universal
  envelope is the free tensor algebra on the fiber letters times the
  enveloping algebra of the outer part; normal-form words carry their
  outer letters on the left.

Universal-envelope elements are kept in normal form at all times: words
are rewritten with  b a -> (-1)^(|a||b|) a b + [b, a]  for out-of-order
letters and  a a -> 1/2 [a, a]  for odd letters.
"""

from fractions import Fraction

from .algebra import rat
from . import linalg


class InsufficientBracketData(Exception):
    """A bracket beyond the tabulated range was needed."""

    def __init__(self, left, right):
        super().__init__(f"bracket [{left}, {right}] is not tabulated "
                         "(table truncated too shallow)")
        self.left = left
        self.right = right


def _combine(acc, terms, factor):
    for w, c in terms.items():
        s = acc.get(w, Fraction(0)) + factor * c
        if s == 0:
            acc.pop(w, None)
        else:
            acc[w] = s


class UeaElement:
    """Normal-form element of a universal enveloping algebra."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms  # {word tuple: Fraction}, already normal

    def _check(self, other):
        if self.pres is not other.pres:
            raise ValueError("elements of different presentations")

    def __eq__(self, other):
        if not isinstance(other, UeaElement):
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        _combine(out, other.terms, Fraction(1))
        return UeaElement(self.pres, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        _combine(out, other.terms, Fraction(-1))
        return UeaElement(self.pres, out)

    def __neg__(self):
        return UeaElement(self.pres, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return self.pres.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = rat(c)
        if c == 0:
            return UeaElement(self.pres, {})
        return UeaElement(self.pres, {w: c * v for w, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def degree(self):
        degs = {self.pres.word_degree(w) for w in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def coefficient(self, word):
        return self.terms.get(tuple(word), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda wc: self.pres.word_sort_key(wc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = self.pres.word_str(w)
            if not w:
                body = str(abs(c))
            elif abs(c) == 1:
                body = ws
            else:
                body = f"{abs(c)}*{ws}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"UeaElement({self})"


class _PresentationBase:
    """Shared word machinery: normal forms, products, enumeration."""

    def __init__(self):
        self._nf_cache = {}

    # subclasses provide: letter_degree, letter_parity, letter_name,
    # _find_violation(word) -> None | (position, pieces)

    def word_degree(self, word):
        return sum(self.letter_degree(l) for l in word)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.letter_name(l) for l in word)

    def word_sort_key(self, word):
        return (self.word_degree(word), len(word), word)

    def normal_form(self, word):
        word = tuple(word)
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        hit = self._find_violation(word)
        if hit is None:
            result = {word: Fraction(1)}
        else:
            result = {}
            for coeff, piece in hit:
                _combine(result, self.normal_form(piece), coeff)
        self._nf_cache[word] = result
        return result

    def element(self, terms):
        out = {}
        for w, c in terms.items():
            c = rat(c)
            if c == 0:
                continue
            _combine(out, self.normal_form(tuple(w)), c)
        return UeaElement(self, out)

    def unit(self):
        return UeaElement(self, {(): Fraction(1)})

    def zero(self):
        return UeaElement(self, {})

    def multiply(self, a, b):
        out = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                _combine(out, self.normal_form(wa + wb), ca * cb)
        return UeaElement(self, out)

    def uea_dimension(self, degree):
        return len(self.words_of_degree(degree))


def uea_mul(a, b):
    return a * b


def graded_commutator(a, b):
    """a b - (-1)^(|a||b|) b a for homogeneous a, b."""
    da, db = a.degree(), b.degree()
    if da is None or db is None:
        return a.pres.zero()
    sign = -1 if (da % 2) and (db % 2) else 1
    return a * b - (b * a).scale(sign)


def twisted_mul(a, beta, b):
    """The beta-twisted product a beta b."""
    return a * beta * b


class FiniteTable(_PresentationBase):
    """Structure-constant presentation of a graded Lie algebra."""

    def __init__(self, name, basis, brackets, *, generators=None,
                 relations=None, bracket_bound=None, provenance=""):
        super().__init__()
        self.name = name
        self.provenance = provenance
        self.basis = tuple((str(n), int(d)) for n, d in basis)
        names = [n for n, _ in self.basis]
        if len(set(names)) != len(names):
            raise ValueError("basis names must be unique")
        self.names = tuple(names)
        self.degrees = tuple(d for _, d in self.basis)
        if any(d < 1 for d in self.degrees):
            raise ValueError("basis degrees must be >= 1")
        self.parities = tuple(d % 2 for d in self.degrees)
        self.index = {n: i for i, n in enumerate(names)}
        self.bracket_bound = bracket_bound
        # total order for PBW words: by degree, then declaration
        self.order = sorted(range(len(self.basis)), key=lambda i: (self.degrees[i], i))
        self.rank = [0] * len(self.basis)
        for r, i in enumerate(self.order):
            self.rank[i] = r
        self._build_relations(relations or {})
        self._build_brackets(brackets)
        if generators is None:
            self.generators = tuple(range(len(self.basis)))
        else:
            self.generators = tuple(self.index[g] if isinstance(g, str) else int(g)
                                    for g in generators)

    # -- relations / quotient ------------------------------------------

    def _build_relations(self, relations):
        self.degree_slices = {}
        for i, d in enumerate(self.degrees):
            self.degree_slices.setdefault(d, []).append(i)
        self.letter_reduction = {}
        self.canonical = set(range(len(self.basis)))
        self.relation_rank = {}
        for d, vectors in relations.items():
            slice_ = self.degree_slices.get(d, [])
            rows = [[rat(x) for x in v] for v in vectors]
            for row in rows:
                if len(row) != len(slice_):
                    raise ValueError("relation vector length mismatch")
            red, pivots, rk = linalg.rref(rows) if rows else (None, [], 0)
            self.relation_rank[d] = rk
            for r, p in enumerate(pivots):
                letter = slice_[p]
                expansion = {}
                for c, x in enumerate(red.rows[r]):
                    if c != p and x != 0:
                        expansion[slice_[c]] = -x
                self.letter_reduction[letter] = expansion
                self.canonical.discard(letter)

    def quotient_dimension(self, degree):
        slice_ = self.degree_slices.get(degree, [])
        return len(slice_) - self.relation_rank.get(degree, 0)

    def reduce_lie(self, elt):
        """Rewrite a {index: coeff} Lie element over canonical letters."""
        out = {}
        for i, c in elt.items():
            if c == 0:
                continue
            if i in self.letter_reduction:
                for j, f in self.letter_reduction[i].items():
                    s = out.get(j, Fraction(0)) + c * f
                    if s == 0:
                        out.pop(j, None)
                    else:
                        out[j] = s
            else:
                s = out.get(i, Fraction(0)) + c
                if s == 0:
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    # -- brackets -------------------------------------------------------

    def _build_brackets(self, brackets):
        self.raw_brackets = {}
        for key, value in brackets.items():
            a, b = key
            i = self.index[a] if isinstance(a, str) else int(a)
            j = self.index[b] if isinstance(b, str) else int(b)
            if i > j:
                raise ValueError("bracket keys must be canonical (i <= j)")
            v = {}
            for t, c in value.items():
                k = self.index[t] if isinstance(t, str) else int(t)
                c = rat(c)
                if c != 0:
                    v[k] = v.get(k, Fraction(0)) + c
            v = {k: c for k, c in v.items() if c != 0}
            target_deg = self.degrees[i] + self.degrees[j]
            for k in v:
                if self.degrees[k] != target_deg:
                    raise ValueError(
                        f"bracket [{self.names[i]},{self.names[j]}] has a term of "
                        f"degree {self.degrees[k]}, expected {target_deg}")
            if i == j and self.parities[i] == 0 and v:
                raise ValueError(f"[{self.names[i]},{self.names[i]}] must vanish "
                                 "for an even element")
            self.raw_brackets[(i, j)] = v
        self._reduced = {k: self.reduce_lie(v) for k, v in self.raw_brackets.items()}

    def bracket_available(self, i, j):
        return self.bracket_bound is None or \
            self.degrees[i] + self.degrees[j] <= self.bracket_bound

    def bracket(self, i, j, *, raw=False):
        """[b_i, b_j] as {index: coeff}; antisymmetry fills the flip."""
        if not self.bracket_available(i, j):
            raise InsufficientBracketData(self.names[i], self.names[j])
        if i <= j:
            table = self.raw_brackets if raw else self._reduced
            return dict(table.get((i, j), {}))
        flip = self.bracket(j, i, raw=raw)
        sign = -1 if not (self.parities[i] and self.parities[j]) else 1
        # [x,y] = -(-1)^(|x||y|) [y,x]: odd/odd gives +, otherwise -
        return {k: sign * c for k, c in flip.items()}

    def lie_bracket(self, x, y):
        """Bracket of two {index: coeff} Lie elements (bilinear extension)."""
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, c in self.bracket(i, j).items():
                    s = out.get(k, Fraction(0)) + ci * cj * c
                    if s == 0:
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    # -- letters / words --------------------------------------------------

    def letter_degree(self, l):
        return self.degrees[l]

    def letter_parity(self, l):
        return self.parities[l]

    def letter_name(self, l):
        return self.names[l]

    def letter(self, name):
        return UeaElement(self, {(self.index[name],): Fraction(1)})

    def lie_element(self, elt):
        """Inclusion of a {index-or-name: coeff} Lie element into the UEA."""
        terms = {}
        for key, c in elt.items():
            i = self.index[key] if isinstance(key, str) else int(key)
            terms[(i,)] = rat(c)
        return self.element(terms)

    def _find_violation(self, word):
        for t, l in enumerate(word):
            if l in self.letter_reduction:
                pieces = [(c, word[:t] + (j,) + word[t + 1:])
                          for j, c in self.letter_reduction[l].items()]
                return pieces
        for t in range(len(word) - 1):
            i, j = word[t], word[t + 1]
            if i == j:
                if self.parities[i]:
                    half = Fraction(1, 2)
                    return [(half * c, word[:t] + (k,) + word[t + 2:])
                            for k, c in self.bracket(i, i).items()]
                continue
            if self.rank[i] > self.rank[j]:
                sign = Fraction(-1 if self.parities[i] and self.parities[j] else 1)
                pieces = [(sign, word[:t] + (j, i) + word[t + 2:])]
                pieces += [(c, word[:t] + (k,) + word[t + 2:])
                           for k, c in self.bracket(i, j).items()]
                return pieces
        return None

    def words_of_degree(self, degree):
        """Normal-form PBW words of the given total degree, in rank order."""
        out = []
        order = [i for i in self.order if i in self.canonical]

        def rec(start, remaining, acc, last, last_count):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for pos in range(start, len(order)):
                i = order[pos]
                d = self.degrees[i]
                if d > remaining:
                    continue
                if i == last and self.parities[i]:
                    continue
                acc.append(i)
                rec(pos, remaining - d, acc, i, 1)
                acc.pop()

        rec(0, degree, [], None, 0)
        return out

    def primitive_basis(self, degree):
        """Canonical basis letters of the degree component, as elements."""
        out = []
        for i in self.order:
            if self.degrees[i] == degree and i in self.canonical:
                out.append((self.names[i], UeaElement(self, {(i,): Fraction(1)})))
        return out

    def generator_elements(self):
        return [(self.names[i], UeaElement(self, {(i,): Fraction(1)}))
                for i in self.generators]

    def __repr__(self):
        return f"FiniteTable({self.name!r}, dim={len(self.basis)})"


class SemidirectFree(_PresentationBase):
    """Free graded Lie algebra on odd fiber letters, with outer action.

    Letters are coded as integers: outers 0..m-1, fiber letters m..m+k-1.
    Fiber words are free (never reordered); outer letters migrate left.
    """

    def __init__(self, name, fiber, outer=(), action=None, outer_brackets=None,
                 provenance=""):
        super().__init__()
        self.name = name
        self.provenance = provenance
        self.outer = tuple((str(n), int(d)) for n, d in outer)
        self.fiber = tuple((str(n), int(d)) for n, d in fiber)
        for n, d in self.fiber:
            if d < 1 or d % 2 == 0:
                raise ValueError(f"fiber letter {n} must have odd degree >= 1")
        for n, d in self.outer:
            if d < 1:
                raise ValueError(f"outer element {n} must have degree >= 1")
        self.m = len(self.outer)
        self.k = len(self.fiber)
        names = [n for n, _ in self.outer] + [n for n, _ in self.fiber]
        if len(set(names)) != len(names):
            raise ValueError("letter names must be unique")
        self.names = tuple(names)
        self.degrees = tuple([d for _, d in self.outer] + [d for _, d in self.fiber])
        self.parities = tuple(d % 2 for d in self.degrees)
        self.index = {n: i for i, n in enumerate(self.names)}
        # outer PBW order: by degree then declaration
        self.outer_order = sorted(range(self.m), key=lambda i: (self.degrees[i], i))
        self.outer_rank = [0] * self.m
        for r, i in enumerate(self.outer_order):
            self.outer_rank[i] = r
        self.action = {}
        for (f, o), value in (action or {}).items():
            fi = self.index[f] if isinstance(f, str) else int(f)
            oi = self.index[o] if isinstance(o, str) else int(o)
            v = {tuple(w): rat(c) for w, c in value.items() if rat(c) != 0}
            want = self.degrees[fi] + self.degrees[oi]
            for w in v:
                if self.word_degree(w) != want or any(l < self.m for l in w):
                    raise ValueError(f"action [{self.names[fi]},{self.names[oi]}] "
                                     "must be a fiber element of the right degree")
            self.action[(fi, oi)] = v
        self.outer_brackets = {}
        for (a, b), value in (outer_brackets or {}).items():
            ai = self.index[a] if isinstance(a, str) else int(a)
            bi = self.index[b] if isinstance(b, str) else int(b)
            if ai > bi:
                raise ValueError("outer bracket keys must be canonical")
            v = {}
            for t, c in value.items():
                ti = self.index[t] if isinstance(t, str) else int(t)
                if rat(c) != 0:
                    v[ti] = rat(c)
            if ai == bi and self.parities[ai] == 0 and v:
                raise ValueError("even outer self-bracket must vanish")
            self.outer_brackets[(ai, bi)] = v
        self.generators = tuple(range(self.m + self.k))
        self._flb_cache = {}

    # -- letters ---------------------------------------------------------

    def is_outer(self, l):
        return l < self.m

    def letter_degree(self, l):
        return self.degrees[l]

    def letter_parity(self, l):
        return self.parities[l]

    def letter_name(self, l):
        return self.names[l]

    def letter(self, name):
        return UeaElement(self, {(self.index[name],): Fraction(1)})

    def action_bracket(self, f, o):
        """[fiber_f, outer_o] as a fiber element dict."""
        return dict(self.action.get((f, o), {}))

    def outer_bracket(self, i, j):
        if i <= j:
            return dict(self.outer_brackets.get((i, j), {}))
        flip = self.outer_bracket(j, i)
        sign = -1 if not (self.parities[i] and self.parities[j]) else 1
        return {k: sign * c for k, c in flip.items()}

    def _find_violation(self, word):
        for t in range(len(word) - 1):
            a, b = word[t], word[t + 1]
            a_out, b_out = self.is_outer(a), self.is_outer(b)
            if not a_out and b_out:
                # fiber then outer: f o -> (-1)^(|f||o|) o f + [f, o]
                sign = Fraction(-1 if self.parities[a] and self.parities[b] else 1)
                pieces = [(sign, word[:t] + (b, a) + word[t + 2:])]
                pieces += [(c, word[:t] + w + word[t + 2:])
                           for w, c in self.action_bracket(a, b).items()]
                return pieces
            if a_out and b_out:
                if a == b:
                    if self.parities[a]:
                        half = Fraction(1, 2)
                        return [(half * c, word[:t] + (k,) + word[t + 2:])
                                for k, c in self.outer_bracket(a, a).items()]
                    continue
                if self.outer_rank[a] > self.outer_rank[b]:
                    sign = Fraction(-1 if self.parities[a] and self.parities[b] else 1)
                    pieces = [(sign, word[:t] + (b, a) + word[t + 2:])]
                    pieces += [(c, word[:t] + (k,) + word[t + 2:])
                               for k, c in self.outer_bracket(a, b).items()]
                    return pieces
        return None

    # -- enumeration -------------------------------------------------------

    def _outer_words(self, degree):
        out = []
        order = self.outer_order

        def rec(start, remaining, acc, last):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for pos in range(start, len(order)):
                i = order[pos]
                d = self.degrees[i]
                if d > remaining:
                    continue
                if i == last and self.parities[i]:
                    continue
                acc.append(i)
                rec(pos, remaining - d, acc, i)
                acc.pop()

        rec(0, degree, [], None)
        return out

    def _fiber_words(self, degree):
        out = []
        letters = list(range(self.m, self.m + self.k))

        def rec(remaining, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for l in letters:
                d = self.degrees[l]
                if d <= remaining:
                    acc.append(l)
                    rec(remaining - d, acc)
                    acc.pop()

        rec(degree, [])
        return out

    def words_of_degree(self, degree):
        out = []
        for od in range(degree + 1):
            outer_words = self._outer_words(od)
            if not outer_words:
                continue
            fiber_words = self._fiber_words(degree - od)
            for ow in outer_words:
                for fw in fiber_words:
                    out.append(ow + fw)
        return out

    def free_lie_basis(self, degree):
        """Deterministic basis of the degree component of the fiber Lie algebra.

        Left-normed bracket words are realized inside the tensor algebra and
        filtered to an independent set in lex order.
        """
        if degree in self._flb_cache:
            return self._flb_cache[degree]
        fiber_words = self._fiber_words(degree)
        pos = {w: i for i, w in enumerate(fiber_words)}
        chosen_rows, chosen_pivots, out = [], [], []
        for w in fiber_words:
            elt = UeaElement(self, {(w[0],): Fraction(1)})
            label = self.names[w[0]]
            for l in w[1:]:
                elt = graded_commutator(elt, UeaElement(self, {(l,): Fraction(1)}))
                label = f"[{label},{self.names[l]}]"
            vec = [Fraction(0)] * len(fiber_words)
            for word, c in elt.terms.items():
                vec[pos[word]] = c
            red = linalg.reduce_against(vec, chosen_rows, chosen_pivots)
            if any(x != 0 for x in red):
                lead = next(i for i, x in enumerate(red) if x != 0)
                chosen_rows.append([x / red[lead] for x in red])
                chosen_pivots.append(lead)
                out.append((label, elt))
        self._flb_cache[degree] = out
        return out

    def primitive_basis(self, degree):
        out = list(self.free_lie_basis(degree))
        for i in range(self.m):
            if self.degrees[i] == degree:
                out.append((self.names[i], UeaElement(self, {(i,): Fraction(1)})))
        return out

    def generator_elements(self):
        return [(self.names[i], UeaElement(self, {(i,): Fraction(1)}))
                for i in range(self.m + self.k)]

    def __repr__(self):
        return f"SemidirectFree({self.name!r}, fiber={self.k}, outer={self.m})"


def jacobi_check(pres, maxdeg):
    """None when graded antisymmetry + Jacobi hold through maxdeg, else a triple."""
    if isinstance(pres, SemidirectFree):
        # the fiber is free and the action extends as a derivation, so only
        # outer-pair compatibility can fail: ad_o ad_o' -+ ad_o' ad_o = ad_[o,o']
        def ad(o, elt):
            out = {}
            po = pres.parities[o]
            for w, c in elt.items():
                pref_par = 0
                for t, l in enumerate(w):
                    br = pres.action_bracket(l, o)
                    if br:
                        sign = -1 if (po and pref_par) else 1
                        # [o, l] = -(-1)^(|l||o|) [l, o]
                        lead = -1 if not (pres.parities[l] and po) else 1
                        for bw, bc in br.items():
                            word = w[:t] + bw + w[t + 1:]
                            s = out.get(word, Fraction(0)) + sign * lead * c * bc
                            if s == 0:
                                out.pop(word, None)
                            else:
                                out[word] = s
                    pref_par ^= pres.parities[l]
            return out

        for i in range(pres.m):
            for j in range(i, pres.m):
                if pres.degrees[i] + pres.degrees[j] > maxdeg:
                    continue
                sign = -1 if pres.parities[i] and pres.parities[j] else 1
                for f in range(pres.m, pres.m + pres.k):
                    if pres.degrees[i] + pres.degrees[j] + pres.degrees[f] > maxdeg:
                        continue
                    base = {(f,): Fraction(1)}
                    lhs = ad(i, ad(j, base))
                    rhs = ad(j, ad(i, base))
                    comm = dict(lhs)
                    _combine(comm, rhs, Fraction(-sign))
                    expected = {}
                    for k, c in pres.outer_bracket(i, j).items():
                        _combine(expected, ad(k, base), c)
                    _combine(comm, expected, Fraction(-1))
                    if comm:
                        return (pres.names[i], pres.names[j], pres.names[f])
        return None

    n = len(pres.basis)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = pres.degrees[i] + pres.degrees[j] + pres.degrees[k]
                if maxdeg is not None and total > maxdeg:
                    continue
                try:
                    inner = pres.bracket(j, k)
                    lhs = pres.lie_bracket({i: Fraction(1)}, inner)
                    left = pres.lie_bracket(pres.bracket(i, j), {k: Fraction(1)})
                    right = pres.lie_bracket({j: Fraction(1)}, pres.bracket(i, k))
                except InsufficientBracketData:
                    continue
                sign = -1 if pres.parities[i] and pres.parities[j] else 1
                total_elt = dict(lhs)
                _combine(total_elt, left, Fraction(-1))
                _combine(total_elt, right, Fraction(-sign))
                if pres.reduce_lie(total_elt):
                    return (pres.names[i], pres.names[j], pres.names[k])
    return None
