"""Text formats for queries, denial constraints and Datalog programs.

Queries:      q() :- R(X, Y), S(Y).
Constraints:  :- R(X, Y), S(Y).
Programs:     one rule per statement, e.g.  T(X, Y) :- E(X, Z), T(Z, Y).

Variables start with an uppercase letter; constants start with a
lowercase letter or digit, or are double-quoted.  A bare underscore is
an anonymous variable, fresh at each occurrence.  `%` starts a comment
running to the end of the line.
"""
from __future__ import annotations

from .errors import ParseError
from .model import Atom, ConjunctiveQuery, DenialConstraint, Fact, Term, Variable
from .datalog import DatalogProgram, DatalogRule

__all__ = [
    "parse_query",
    "parse_denial_constraint",
    "parse_denial_constraints",
    "parse_program",
    "parse_ground_atom",
]

_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789")
_IDENT_BODY = _IDENT_START


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1
        self.fresh = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, line=self.line, column=self.column)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.column = 1
                else:
                    self.column += 1
                self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_space(self) -> None:
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in " \t\r\n":
                self._advance()
            elif c == "%":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)

    def take(self, literal: str) -> bool:
        self.skip_space()
        if self.text.startswith(literal, self.pos):
            self._advance(len(literal))
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            got = self.peek() or "end of input"
            raise self.error(f"expected {literal!r}, found {got!r}")

    def ident(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _IDENT_BODY:
            self._advance()
        if self.pos == start:
            got = self.peek() or "end of input"
            raise self.error(f"expected a name, found {got!r}")
        return self.text[start : self.pos]

    def quoted(self) -> str:
        # opening quote already consumed
        out = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated quoted constant")
            c = self.text[self.pos]
            self._advance()
            if c == '"':
                return "".join(out)
            if c == "\\":
                if self.pos >= len(self.text):
                    raise self.error("unterminated escape in quoted constant")
                out.append(self.text[self.pos])
                self._advance()
            else:
                out.append(c)

    def term(self) -> Term:
        self.skip_space()
        if self.take('"'):
            return self.quoted()
        name = self.ident()
        if name == "_":
            self.fresh += 1
            return Variable(f"_{self.fresh}")
        if name[0].isupper() or name[0] == "_":
            return Variable(name)
        return name

    def atom(self) -> Atom:
        name = self.ident()
        terms: list[Term] = []
        if self.take("("):
            self.skip_space()
            if not self.take(")"):
                terms.append(self.term())
                while self.take(","):
                    terms.append(self.term())
                self.expect(")")
        return Atom(name, tuple(terms))

    def atom_list(self) -> tuple[Atom, ...]:
        atoms = [self.atom()]
        while self.take(","):
            atoms.append(self.atom())
        return tuple(atoms)


def parse_query(text: str) -> ConjunctiveQuery:
    """Parse a boolean query of the form ``q() :- body.``; the head name is
    arbitrary but must carry no arguments."""
    sc = _Scanner(text)
    head = sc.atom()
    if head.terms:
        raise sc.error(f"a boolean query head must have no arguments, got {head}")
    sc.expect(":-")
    atoms = sc.atom_list()
    sc.expect(".")
    if not sc.at_end():
        raise sc.error("unexpected input after the query")
    return ConjunctiveQuery(atoms)


def parse_denial_constraint(text: str) -> DenialConstraint:
    """Parse a single denial constraint of the form ``:- body.``"""
    sc = _Scanner(text)
    sc.expect(":-")
    atoms = sc.atom_list()
    sc.expect(".")
    if not sc.at_end():
        raise sc.error("unexpected input after the constraint")
    return DenialConstraint(atoms)


def parse_denial_constraints(text: str) -> tuple[DenialConstraint, ...]:
    """Parse a file of denial constraints, one ``:- body.`` per statement."""
    sc = _Scanner(text)
    out: list[DenialConstraint] = []
    while not sc.at_end():
        sc.expect(":-")
        atoms = sc.atom_list()
        sc.expect(".")
        out.append(DenialConstraint(atoms))
    return tuple(out)


def parse_program(text: str, answer_predicate: str = "ans") -> DatalogProgram:
    """Parse a Datalog program: statements of the form ``head :- body.``"""
    sc = _Scanner(text)
    rules: list[DatalogRule] = []
    while not sc.at_end():
        head = sc.atom()
        sc.expect(":-")
        body = sc.atom_list()
        sc.expect(".")
        try:
            rules.append(DatalogRule(head, body))
        except ValueError as exc:
            raise sc.error(str(exc)) from None
    try:
        return DatalogProgram(tuple(rules), answer_predicate)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_ground_atom(text: str) -> Fact:
    """Parse a ground atom such as ``R(a1, a4)`` into a fact."""
    sc = _Scanner(text)
    a = sc.atom()
    if not sc.at_end():
        raise sc.error("unexpected input after the atom")
    if not a.is_ground():
        raise ParseError(f"expected a ground atom, got variables in {a}")
    return Fact(a.relation, tuple(t for t in a.terms))  # type: ignore[misc]
