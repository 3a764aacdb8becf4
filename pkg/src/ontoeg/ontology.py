"""Description-logic axioms: parsing, serialization and validation.

The file format is one axiom per line, `#` comments allowed:

    Name EQUIV Expr
    Expr SUBCLASS Expr
    Expr := Name | Expr AND Expr | Expr OR Expr | NOT Expr
          | SOME role . Expr | ONLY role . Expr | ( Expr )

Unicode aliases are accepted (≡ ⊑ ⊓ ⊔ ¬ ∃ ∀). Precedence is
NOT > SOME/ONLY > AND > OR; AND/OR collect their operands into flat
n-ary lists.
"""

from dataclasses import dataclass
import re

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

_ALIASES = {
    "≡": "EQUIV", "⊑": "SUBCLASS", "⊓": "AND", "⊔": "OR",
    "¬": "NOT", "∃": "SOME", "∀": "ONLY",
}
_KEYWORDS = {"EQUIV", "SUBCLASS", "AND", "OR", "NOT", "SOME", "ONLY"}


class OntologySyntaxError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Intersection:
    operands: tuple


@dataclass(frozen=True)
class Union:
    operands: tuple


@dataclass(frozen=True)
class Complement:
    operand: object


@dataclass(frozen=True)
class Existential:
    role: str
    filler: object


@dataclass(frozen=True)
class Universal:
    role: str
    filler: object


@dataclass(frozen=True)
class EquivalentClasses:
    lhs: Named
    rhs: object
    source_line: int = 0


@dataclass(frozen=True)
class SubClassOf:
    lhs: object
    rhs: object
    source_line: int = 0


@dataclass(frozen=True)
class Ontology:
    axioms: tuple
    name: str = ""


@dataclass(frozen=True)
class _Tok:
    kind: str  # IDENT | keyword | ( | ) | .
    value: str
    column: int


def _lex(line, lineno):
    tokens = []
    i = 0
    while i < len(line):
        ch = line[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _ALIASES:
            tokens.append(_Tok(_ALIASES[ch], _ALIASES[ch], i + 1))
            i += 1
            continue
        if ch in "().":
            tokens.append(_Tok(ch, ch, i + 1))
            i += 1
            continue
        m = IDENT_RE.match(line, i)
        if m:
            word = m.group()
            kind = word if word in _KEYWORDS else "IDENT"
            tokens.append(_Tok(kind, word, i + 1))
            i = m.end()
            continue
        raise OntologySyntaxError(f"unknown token {ch!r}", lineno, i + 1)
    return tokens


class _Parser:
    def __init__(self, tokens, lineno):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise OntologySyntaxError(
                "unexpected end of line", self.lineno,
                self.tokens[-1].column if self.tokens else 1,
            )
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise OntologySyntaxError(
                f"expected {kind}, found {tok.value!r}",
                self.lineno, tok.column,
            )
        return tok

    def parse_axiom(self):
        lhs = self.parse_expr()
        op = self.next()
        if op.kind == "EQUIV":
            if not isinstance(lhs, Named):
                raise OntologySyntaxError(
                    "EQUIV requires a named class on the left",
                    self.lineno, op.column,
                )
            rhs = self.parse_expr()
            axiom = EquivalentClasses(lhs, rhs, self.lineno)
        elif op.kind == "SUBCLASS":
            rhs = self.parse_expr()
            axiom = SubClassOf(lhs, rhs, self.lineno)
        else:
            raise OntologySyntaxError(
                f"expected EQUIV or SUBCLASS, found {op.value!r}",
                self.lineno, op.column,
            )
        trailing = self.peek()
        if trailing is not None:
            raise OntologySyntaxError(
                f"unexpected trailing {trailing.value!r}",
                self.lineno, trailing.column,
            )
        return axiom

    def parse_expr(self):
        return self._parse_or()

    def _parse_or(self):
        operands = [self._parse_and()]
        while self.peek() is not None and self.peek().kind == "OR":
            self.next()
            operands.append(self._parse_and())
        if len(operands) == 1:
            return operands[0]
        return Union(tuple(operands))

    def _parse_and(self):
        operands = [self._parse_quant()]
        while self.peek() is not None and self.peek().kind == "AND":
            self.next()
            operands.append(self._parse_quant())
        if len(operands) == 1:
            return operands[0]
        return Intersection(tuple(operands))

    def _parse_quant(self):
        tok = self.peek()
        if tok is not None and tok.kind in ("SOME", "ONLY"):
            self.next()
            role = self.expect("IDENT").value
            self.expect(".")
            filler = self._parse_quant()
            cls = Existential if tok.kind == "SOME" else Universal
            return cls(role, filler)
        return self._parse_not()

    def _parse_not(self):
        tok = self.peek()
        if tok is not None and tok.kind == "NOT":
            self.next()
            return Complement(self._parse_not())
        return self._parse_primary()

    def _parse_primary(self):
        tok = self.next()
        if tok.kind == "IDENT":
            return Named(tok.value)
        if tok.kind == "(":
            expr = self.parse_expr()
            self.expect(")")
            return expr
        raise OntologySyntaxError(
            f"expected class expression, found {tok.value!r}",
            self.lineno, tok.column,
        )


def parse_ontology(source, name=""):
    """Parse ontology text, one axiom per non-blank non-comment line."""
    axioms = []
    for lineno, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parser = _Parser(_lex(line, lineno), lineno)
        axioms.append(parser.parse_axiom())
    return Ontology(tuple(axioms), name)


# serialization: wrap an operand in parens when its operator binds no
# tighter than the context (same-operator nesting stays explicit)
_LEVELS = {
    Union: 0, Intersection: 1, Existential: 2, Universal: 2, Complement: 3,
    Named: 4,
}


def _serialize(expr, min_level):
    level = _LEVELS[type(expr)]
    if isinstance(expr, Named):
        text = expr.name
    elif isinstance(expr, Complement):
        text = f"NOT {_serialize(expr.operand, 3)}"
    elif isinstance(expr, Existential):
        text = f"SOME {expr.role} . {_serialize(expr.filler, 2)}"
    elif isinstance(expr, Universal):
        text = f"ONLY {expr.role} . {_serialize(expr.filler, 2)}"
    elif isinstance(expr, Intersection):
        text = " AND ".join(_serialize(op, 2) for op in expr.operands)
    elif isinstance(expr, Union):
        text = " OR ".join(_serialize(op, 1) for op in expr.operands)
    else:
        raise TypeError(f"not a class expression: {expr!r}")
    if level < min_level:
        return f"( {text} )"
    return text


def serialize_expr(expr):
    return _serialize(expr, 0)


def serialize_axiom(axiom):
    """Canonical ASCII form, re-parseable by parse_ontology."""
    if isinstance(axiom, EquivalentClasses):
        return f"{axiom.lhs.name} EQUIV {serialize_expr(axiom.rhs)}"
    if isinstance(axiom, SubClassOf):
        return f"{serialize_expr(axiom.lhs)} SUBCLASS {serialize_expr(axiom.rhs)}"
    raise TypeError(f"not an axiom: {axiom!r}")


def serialize_ontology(ontology):
    return "".join(serialize_axiom(a) + "\n" for a in ontology.axioms)


def _is_restriction(expr):
    if isinstance(expr, Existential):
        return isinstance(expr.filler, Named)
    if isinstance(expr, Universal):
        if isinstance(expr.filler, Named):
            return True
        return isinstance(expr.filler, Union) and all(
            isinstance(op, Named) for op in expr.filler.operands
        )
    return False


def definition_parts(axiom):
    """Split `C EQUIV D AND X1 AND ... AND Xk` into (C, D, restrictions)
    when the axiom fits the verbalizable definition shape, else None."""
    if not isinstance(axiom, EquivalentClasses):
        return None
    rhs = axiom.rhs
    if not isinstance(rhs, Intersection):
        return None
    genus, *rest = rhs.operands
    if not isinstance(genus, Named) or not rest:
        return None
    if not all(_is_restriction(x) for x in rest):
        return None
    return axiom.lhs, genus, tuple(rest)


def axiom_shape(axiom):
    """Classify an axiom by verbalizer template: 'definition',
    'disjointness', 'subsumption' or None."""
    if definition_parts(axiom) is not None:
        return "definition"
    if isinstance(axiom, SubClassOf) and isinstance(axiom.lhs, Named):
        if isinstance(axiom.rhs, Named):
            return "subsumption"
        if isinstance(axiom.rhs, Complement) and isinstance(
            axiom.rhs.operand, Named
        ):
            return "disjointness"
    return None


def validate(ontology):
    """Warnings for axioms the verbalizer cannot render. Never fatal."""
    diagnostics = []
    for index, axiom in enumerate(ontology.axioms):
        if axiom_shape(axiom) is not None:
            continue
        kind = (
            "equivalence" if isinstance(axiom, EquivalentClasses)
            else "subclass"
        )
        diagnostics.append(
            f"axiom {index} (line {axiom.source_line}): "
            f"unverbalizable {kind} form: {serialize_axiom(axiom)}"
        )
    return diagnostics
