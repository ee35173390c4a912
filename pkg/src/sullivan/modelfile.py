"""The `.sul` model language and the JSON report schema.

Grammar (comments run from '#' to end of line):

    model NAME {
        (generator NAME : INT ;)*
        (d NAME = EXPR ;)*
        [ presentation { (basis NAME : INT ;)* (bracket [NAME, NAME] = EXPR ;)* } ]
    }

    EXPR  ::= ['-'] TERM (('+' | '-') TERM)*
    TERM  ::= FACTOR ('*' FACTOR)*
    FACTOR::= ATOM ['^' INT]
    ATOM  ::= RATIONAL | NAME | '(' EXPR ')'
    RATIONAL ::= INT ['/' INT]

Exponents are whole numbers and rationals are p/q literals, so the
grammar stays unambiguous.  The first error is reported with its
position and expected-token set; there is no recovery.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GradedAlgebra
from .dga import DgaModel, ModelError
from .lie import FiniteTable


class ParseError(ValueError):
    def __init__(self, line, column, expected, found, code="E_SYNTAX"):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        self.found = found
        self.code = code
        exp = " or ".join(self.expected)
        super().__init__(f"line {line}, column {column}: expected {exp}, "
                         f"found {found!r}")


_SYMBOLS = ("{", "}", "(", ")", ";", ":", "=", "+", "-", "*", "^", "/",
            "[", "]", ",")


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            tokens.append(("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(line, col, ["a token"], ch)
    tokens.append(("EOF", "", line, col))
    return tokens


@dataclass(frozen=True)
class PresentationAst:
    basis: tuple          # ((name, degree), ...)
    brackets: tuple       # (((left, right), ((target, Fraction), ...)), ...)


@dataclass(frozen=True)
class ModelFileAst:
    name: str
    generators: tuple     # ((name, degree), ...)
    differentials: tuple  # ((name, Poly), ...) in declaration order
    presentation: object  # PresentationAst or None


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def error(self, expected, code="E_SYNTAX"):
        kind, value, line, col = self.peek()
        raise ParseError(line, col, expected, value or kind, code=code)

    def accept(self, kind, value=None):
        k, v, _, _ = self.peek()
        if k == kind and (value is None or v == value):
            self.pos += 1
            return v
        return None

    def expect(self, kind, value=None, what=None):
        got = self.accept(kind, value)
        if got is None:
            self.error([what or value or kind])
        return got

    def keyword(self, word):
        k, v, _, _ = self.peek()
        if k == "NAME" and v == word:
            self.pos += 1
            return True
        return False

    # -- expressions ---------------------------------------------------

    def parse_expr(self, alg):
        negate = bool(self.accept("-"))
        out = self.parse_term(alg)
        if negate:
            out = -out
        while True:
            if self.accept("+"):
                out = out + self.parse_term(alg)
            elif self.accept("-"):
                out = out - self.parse_term(alg)
            else:
                return out

    def parse_term(self, alg):
        out = self.parse_factor(alg)
        while self.accept("*"):
            out = out * self.parse_factor(alg)
        return out

    def parse_factor(self, alg):
        out = self.parse_atom(alg)
        if self.accept("^"):
            e = self.expect("INT", what="exponent")
            out = out ** int(e)
        return out

    def parse_atom(self, alg):
        k, v, line, col = self.peek()
        if k == "INT":
            self.pos += 1
            num = int(v)
            if self.accept("/"):
                den = int(self.expect("INT", what="denominator"))
                return alg.one().scale(Fraction(num, den))
            return alg.one().scale(num)
        if k == "NAME":
            if v not in alg.index:
                raise ParseError(line, col, ["a declared generator"], v,
                                 code="E_UNDECLARED")
            self.pos += 1
            return alg.gen(v)
        if self.accept("("):
            out = self.parse_expr(alg)
            self.expect(")")
            return out
        self.error(["a rational", "a name", "'('"])

    # -- model ---------------------------------------------------------

    def parse_model(self):
        if not self.keyword("model"):
            self.error(["'model'"])
        name = self.expect("NAME", what="model name")
        self.expect("{")
        gens = []
        seen = set()
        while self.keyword("generator"):
            k, v, line, col = self.peek()
            gname = self.expect("NAME", what="generator name")
            self.expect(":")
            k2, v2, line2, col2 = self.peek()
            deg = int(self.expect("INT", what="degree"))
            self.expect(";")
            if gname in seen:
                raise ParseError(line, col, ["a fresh generator name"], gname,
                                 code="E_DUPLICATE")
            if deg < 1:
                raise ParseError(line2, col2, ["a degree >= 1"], str(deg),
                                 code="E_DEGREE")
            seen.add(gname)
            gens.append((gname, deg))
        alg = GradedAlgebra(gens) if gens else GradedAlgebra([])
        diffs = []
        diff_seen = set()
        while self.keyword("d"):
            k, v, line, col = self.peek()
            gname = self.expect("NAME", what="generator name")
            if gname not in seen:
                raise ParseError(line, col, ["a declared generator"], gname,
                                 code="E_UNDECLARED")
            if gname in diff_seen:
                raise ParseError(line, col, ["at most one differential per "
                                             "generator"], gname,
                                 code="E_DUPLICATE")
            diff_seen.add(gname)
            self.expect("=")
            poly = self.parse_expr(alg)
            self.expect(";")
            diffs.append((gname, poly))
        pres = None
        if self.keyword("presentation"):
            pres = self.parse_presentation()
        self.expect("}")
        self.expect("EOF", what="end of input")
        return ModelFileAst(name=name, generators=tuple(gens),
                            differentials=tuple(diffs), presentation=pres)

    def parse_presentation(self):
        self.expect("{")
        basis = []
        seen = set()
        while self.keyword("basis"):
            k, v, line, col = self.peek()
            bname = self.expect("NAME", what="basis name")
            self.expect(":")
            k2, v2, line2, col2 = self.peek()
            deg = int(self.expect("INT", what="degree"))
            self.expect(";")
            if bname in seen:
                raise ParseError(line, col, ["a fresh basis name"], bname,
                                 code="E_DUPLICATE")
            if deg < 1:
                raise ParseError(line2, col2, ["a degree >= 1"], str(deg),
                                 code="E_DEGREE")
            seen.add(bname)
            basis.append((bname, deg))
        alg = GradedAlgebra(basis)
        brackets = []
        while self.keyword("bracket"):
            self.expect("[")
            k, v, line, col = self.peek()
            left = self.expect("NAME", what="basis name")
            if left not in seen:
                raise ParseError(line, col, ["a declared basis name"], left,
                                 code="E_UNDECLARED")
            self.expect(",")
            k, v, line, col = self.peek()
            right = self.expect("NAME", what="basis name")
            if right not in seen:
                raise ParseError(line, col, ["a declared basis name"], right,
                                 code="E_UNDECLARED")
            self.expect("]")
            self.expect("=")
            value = self.parse_expr(alg)
            self.expect(";")
            terms = []
            for mono, coeff in value.sorted_terms():
                if len(mono) != 1 or mono[0][1] != 1:
                    raise ParseError(line, col,
                                     ["a linear combination of basis names"],
                                     str(value), code="E_NONLINEAR")
                terms.append((alg.names[mono[0][0]], coeff))
            brackets.append(((left, right), tuple(terms)))
        self.expect("}")
        return PresentationAst(basis=tuple(basis), brackets=tuple(brackets))


def parse(text):
    """Parse model text; first error wins, no recovery."""
    return _Parser(text).parse_model()


def parse_expression(text, algebra):
    """Parse a bare polynomial expression over an existing algebra."""
    p = _Parser(text)
    out = p.parse_expr(algebra)
    p.expect("EOF", what="end of expression")
    return out


def serialize(ast):
    """Canonical text form; parse(serialize(ast)) == ast."""
    lines = [f"model {ast.name} {{"]
    for name, deg in ast.generators:
        lines.append(f"  generator {name} : {deg};")
    for name, poly in ast.differentials:
        lines.append(f"  d {name} = {_poly_text(poly)};")
    if ast.presentation is not None:
        lines.append("  presentation {")
        for name, deg in ast.presentation.basis:
            lines.append(f"    basis {name} : {deg};")
        for (left, right), terms in ast.presentation.brackets:
            body = " + ".join(
                name if c == 1 else f"{_rat_text(c)}*{name}" for name, c in terms)
            lines.append(f"    bracket [{left}, {right}] = {body or '0'};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _rat_text(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _poly_text(poly):
    if poly.is_zero():
        return "0"
    parts = []
    for mono, coeff in poly.sorted_terms():
        ms = poly.alg.mono_str(mono)
        if mono == ():
            body = _rat_text(abs(coeff))
        elif abs(coeff) == 1:
            body = ms
        else:
            body = f"{_rat_text(abs(coeff))}*{ms}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def ast_to_model(ast):
    """Build and validate the DGA; the model must be a complex."""
    model = DgaModel(ast.name, list(ast.generators), dict(ast.differentials))
    bad = model.check_d_squared()
    if bad is not None:
        raise ModelError("E_DSQUARED", f"d^2 != 0 on generator {bad}")
    return model


def ast_to_presentation(ast):
    if ast.presentation is None:
        raise ModelError("E_NO_PRESENTATION",
                         f"model {ast.name} carries no presentation block")
    p = ast.presentation
    index = {n: i for i, (n, _) in enumerate(p.basis)}
    brackets = {}
    for (left, right), terms in p.brackets:
        i, j = index[left], index[right]
        if i > j:
            raise ModelError("E_BRACKET_ORDER",
                             f"bracket [{left}, {right}] must list the earlier "
                             "basis element first")
        brackets[(i, j)] = {index[t]: c for t, c in terms}
    return FiniteTable(ast.name, list(p.basis), brackets,
                       provenance=f"user presentation {ast.name}")


def load_model(text):
    return ast_to_model(parse(text))


def model_to_ast(model):
    diffs = tuple((name, model.differential[name])
                  for name in model.algebra.names if name in model.differential)
    return ModelFileAst(name=model.name, generators=tuple(model.algebra.gens),
                        differentials=diffs, presentation=None)


# -- JSON report schema -------------------------------------------------------

SCHEMA_VERSION = 1


def rational_json(q):
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def poly_json(poly):
    return [{"monomial": poly.alg.mono_str(m), "coeff": rational_json(c)}
            for m, c in poly.sorted_terms()]


def uea_json(elt):
    return [{"word": elt.pres.word_str(w), "coeff": rational_json(c)}
            for w, c in elt.sorted_terms()]


def vector_json(vec):
    return [rational_json(x) for x in vec]


def report(model, operation, parameters, result, provenance=()):
    return {
        "schema_version": SCHEMA_VERSION,
        "model": model,
        "operation": operation,
        "parameters": parameters,
        "result": result,
        "provenance": list(provenance),
    }


def to_json(doc):
    """Byte-stable rendering: keys sorted, fixed separators."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def encode_cohomology(model, space):
    return {
        "degree": space.degree,
        "dimension": space.dimension,
        "representatives": [_poly_text(p) for p in space.representatives],
        "basis": [model.algebra.mono_str(m) for m in space.basis],
    }


def encode_massey(result):
    return {
        "degree": result.degree,
        "class_vector": vector_json(result.vector),
        "representative": poly_json(result.representative),
        "s": poly_json(result.s),
        "t": poly_json(result.t),
        "indeterminacy": [vector_json(v) for v in result.indeterminacy],
        "well_defined": result.well_defined,
    }


def encode_center(rep):
    return {
        "degree": rep.degree,
        "mode": rep.mode,
        "scope": rep.scope,
        "ambient_dimension": rep.ambient_dimension,
        "dimension": rep.dimension,
        "basis": [str(elt) for _, elt in rep.solution],
        "witnesses": [{"probe": g, "candidate": c,
                       "value": d if d is not None else str(v)}
                      for g, c, v, d in rep.witnesses],
        "conclusive": rep.conclusive,
        "notes": list(rep.notes),
        "probe_bound": rep.probe_bound,
    }
