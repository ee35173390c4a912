"""Free graded-commutative algebras over Q with Koszul-signed arithmetic.

A monomial is a tuple of (generator_index, exponent) pairs, strictly
increasing in the index, exponents >= 1, and exponent <= 1 for odd
generators (odd squares vanish).  The empty tuple is the unit.
Polynomials are finite Fraction-valued maps on monomials with no explicit
zero coefficients, so equality is plain dict equality.
"""

from fractions import Fraction

ONE = ()  # the unit monomial


def rat(x):
    """Coerce ints, strings like '3/2' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class GradedAlgebra:
    """Ordered generator list; owns monomial arithmetic and degree bookkeeping."""

    def __init__(self, generators):
        gens = [(str(name), int(deg)) for name, deg in generators]
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for n, d in gens:
            if d < 1:
                raise ValueError(f"generator {n} has degree {d}; degrees must be >= 1")
        self.gens = tuple(gens)
        self.names = tuple(names)
        self.degrees = tuple(d for _, d in gens)
        self.parities = tuple(d % 2 for d in self.degrees)
        self.index = {n: i for i, n in enumerate(names)}
        self._basis_cache = {}

    def __eq__(self, other):
        return isinstance(other, GradedAlgebra) and self.gens == other.gens

    def __repr__(self):
        return "GradedAlgebra(%s)" % ", ".join(f"{n}:{d}" for n, d in self.gens)

    # -- monomials ----------------------------------------------------

    def monomial(self, pairs):
        pairs = tuple(sorted((int(i), int(e)) for i, e in pairs))
        seen = set()
        for i, e in pairs:
            if not 0 <= i < len(self.gens):
                raise ValueError(f"bad generator index {i}")
            if i in seen:
                raise ValueError("repeated generator in monomial")
            seen.add(i)
            if e < 1:
                raise ValueError("exponents must be >= 1")
            if self.parities[i] and e > 1:
                raise ValueError(f"odd generator {self.names[i]} with exponent {e}")
        return pairs

    def mono_degree(self, mono):
        return sum(self.degrees[i] * e for i, e in mono)

    def mono_length(self, mono):
        """Number of generator letters, counted with multiplicity."""
        return sum(e for _, e in mono)

    def mono_mul(self, a, b):
        """Koszul-signed product of canonical monomials.

        Returns (sign, monomial) or None when an odd generator would
        acquire exponent >= 2.  The sign counts transpositions of odd
        letters needed to merge-sort the concatenation a ++ b.
        """
        if not a:
            return 1, b
        if not b:
            return 1, a
        # odd letters of a, by index (each has exponent 1)
        odd_a = [i for i, _ in a if self.parities[i]]
        swaps = 0
        for j, _ in b:
            if self.parities[j]:
                # j jumps over every odd letter of a with larger index
                swaps += sum(1 for i in odd_a if i > j)
        merged = dict(a)
        for j, e in b:
            if j in merged:
                if self.parities[j]:
                    return None
                merged[j] += e
            else:
                merged[j] = e
        sign = -1 if swaps % 2 else 1
        return sign, tuple(sorted(merged.items()))

    def mono_str(self, mono):
        if not mono:
            return "1"
        parts = []
        for i, e in mono:
            parts.append(self.names[i] if e == 1 else f"{self.names[i]}^{e}")
        return "*".join(parts)

    def mono_key(self, mono):
        """Deterministic order: degree, then lex on the dense exponent vector."""
        exps = [0] * len(self.gens)
        for i, e in mono:
            exps[i] = e
        return (self.mono_degree(mono), tuple(exps))

    # -- polynomials ---------------------------------------------------

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {ONE: Fraction(1)})

    def gen(self, name):
        if name not in self.index:
            raise KeyError(f"unknown generator {name!r}")
        return Poly(self, {((self.index[name], 1),): Fraction(1)})

    def poly(self, terms):
        """Build a polynomial from {monomial_pairs: coefficient}."""
        out = {}
        for mono, c in terms.items():
            c = rat(c)
            if c == 0:
                continue
            m = self.monomial(mono)
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(self, {m: c for m, c in out.items() if c != 0})

    def basis_in_degree(self, n):
        """All canonical monomials of total degree n, lex by exponent vector."""
        if n < 0:
            raise ValueError("degree must be >= 0")
        if n not in self._basis_cache:
            out = []

            def rec(pos, remaining, acc):
                if remaining == 0:
                    out.append(tuple(acc))
                    return
                if pos == len(self.gens):
                    return
                d = self.degrees[pos]
                max_e = 1 if self.parities[pos] else remaining // d
                # exponent 0 first: lex-ascending exponent vectors
                rec(pos + 1, remaining, acc)
                for e in range(1, max_e + 1):
                    if e * d <= remaining:
                        acc.append((pos, e))
                        rec(pos + 1, remaining - e * d, acc)
                        acc.pop()

            rec(0, n, [])
            self._basis_cache[n] = tuple(out)
        return self._basis_cache[n]

    def vector_of(self, poly, basis):
        """Coefficient vector of a polynomial wrt an ordered monomial basis."""
        pos = {m: i for i, m in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for m, c in poly.terms.items():
            if m not in pos:
                raise ValueError(f"monomial {self.mono_str(m)} not in basis")
            vec[pos[m]] = c
        return vec

    def poly_from_vector(self, vec, basis):
        return Poly(self, {m: rat(c) for m, c in zip(basis, vec) if c != 0})


class Poly:
    """Immutable polynomial: finite map monomial -> Fraction."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = dict(terms)

    def _check(self, other):
        if self.alg.gens != other.alg.gens:
            raise ValueError("operands over different generator sets")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.alg.gens == other.alg.gens and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.alg, out)

    def __neg__(self):
        return Poly(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                r = self.alg.mono_mul(ma, mb)
                if r is None:
                    continue
                sign, m = r
                s = out.get(m, Fraction(0)) + sign * ca * cb
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = rat(c)
        if c == 0:
            return self.alg.zero()
        return Poly(self.alg, {m: c * v for m, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Degree of a homogeneous polynomial (None for 0)."""
        degs = {self.alg.mono_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def is_homogeneous(self):
        return len({self.alg.mono_degree(m) for m in self.terms}) <= 1

    def word_length_part(self, length):
        """Sub-polynomial on monomials with exactly `length` letters."""
        return Poly(self.alg, {m: c for m, c in self.terms.items()
                               if self.alg.mono_length(m) == length})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: self.alg.mono_key(mc[0]))

    def leading_monomial(self):
        if not self.terms:
            return None
        return min(self.terms, key=self.alg.mono_key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = self.alg.mono_str(m)
            if m == ONE:
                body = str(abs(c))
            elif abs(c) == 1:
                body = ms
            else:
                body = f"{abs(c)}*{ms}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"
