"""Relational data model and boolean conjunctive query evaluation.

Schemas, ground facts, instances with an endogenous/exogenous partition,
conjunctive queries together with their denial-constraint and
violation-view faces, plus query evaluation and minimal-witness
enumeration.

Conventions
-----------
Constants are opaque strings; there are no typed attributes.  In textual
form variables start with an uppercase letter and constants start with a
lowercase letter or are double-quoted; the :func:`atom` helper applies
the same convention to bare strings.  Every value here is immutable and
every operation is a pure function, so concurrent use is safe.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, TypeAlias, Union

from .budget import Meter
from .errors import SchemaError
from .hitting import minimize_family

__all__ = [
    "RelationSchema",
    "Fact",
    "fact",
    "Variable",
    "Term",
    "Atom",
    "atom",
    "ConjunctiveQuery",
    "DenialConstraint",
    "ViolationView",
    "BooleanQuery",
    "Witness",
    "Valuation",
    "Instance",
    "query_to_dc",
    "dc_to_view",
    "view_to_query",
    "check_query_schema",
    "match_atom",
    "ground_atom",
    "valuations",
    "eval_bcq",
    "witnesses",
    "satisfies_dc",
]

_PLAIN_CONSTANT = re.compile(r"[a-z0-9][A-Za-z0-9_]*\Z")


def format_constant(value: str) -> str:
    """Render a constant, quoting it when it does not look like one."""
    if _PLAIN_CONSTANT.match(value):
        return value
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


@dataclass(frozen=True, order=True)
class RelationSchema:
    """A relation name with a fixed positive arity."""

    name: str
    arity: int

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("relation name must be nonempty")
        if self.arity < 1:
            raise ValueError(f"arity of {self.name!r} must be at least 1, got {self.arity}")


@dataclass(frozen=True, order=True)
class Fact:
    """A ground tuple: a relation name plus constant arguments."""

    relation: str
    args: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))
        if not self.relation:
            raise ValueError("a fact needs a relation name")
        if not all(isinstance(a, str) for a in self.args):
            raise ValueError("fact arguments must be strings")

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        if not self.args:
            return self.relation
        return f"{self.relation}({', '.join(format_constant(a) for a in self.args)})"


def fact(relation: str, *args: str) -> Fact:
    """Shorthand: ``fact("R", "a", "b") == Fact("R", ("a", "b"))``."""
    return Fact(relation, tuple(args))


@dataclass(frozen=True, order=True)
class Variable:
    """A query variable, distinct from constant strings."""

    name: str

    def __str__(self) -> str:
        return self.name


Term: TypeAlias = Union[Variable, str]


@dataclass(frozen=True)
class Atom:
    """A relational atom whose terms are variables or constants."""

    relation: str
    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.relation:
            raise ValueError("an atom needs a relation name")
        for t in self.terms:
            if not isinstance(t, (Variable, str)):
                raise ValueError(f"atom term must be a Variable or a constant string, got {t!r}")

    @property
    def arity(self) -> int:
        return len(self.terms)

    def variables(self) -> frozenset[Variable]:
        return frozenset(t for t in self.terms if isinstance(t, Variable))

    def is_ground(self) -> bool:
        return not any(isinstance(t, Variable) for t in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return self.relation
        rendered = ", ".join(
            t.name if isinstance(t, Variable) else format_constant(t) for t in self.terms
        )
        return f"{self.relation}({rendered})"


def atom(relation: str, *terms: Term) -> Atom:
    """Build an atom applying the textual convention to bare strings:
    strings starting with an uppercase letter or underscore become
    variables, everything else is a constant."""

    def coerce(t: Term) -> Term:
        if isinstance(t, Variable):
            return t
        if t[:1].isupper() or t[:1] == "_":
            return Variable(t)
        return t

    return Atom(relation, tuple(coerce(t) for t in terms))


def _validated_atoms(atoms: Iterable[Atom]) -> tuple[Atom, ...]:
    out = tuple(atoms)
    if not out:
        raise ValueError("the atom list must be nonempty")
    for a in out:
        if not isinstance(a, Atom):
            raise ValueError(f"expected an Atom, got {a!r}")
    return out


@dataclass(frozen=True)
class ConjunctiveQuery:
    """A boolean conjunctive query: the existential closure of its atoms.

    There are no free head variables; self-joins and duplicate atoms are
    permitted (duplicates are harmless for the semantics).
    """

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", _validated_atoms(self.atoms))

    def variables(self) -> frozenset[Variable]:
        return frozenset(v for a in self.atoms for v in a.variables())

    def __str__(self) -> str:
        return ", ".join(str(a) for a in self.atoms)


@dataclass(frozen=True)
class DenialConstraint:
    """Forbids its conjunctive pattern; the negation of the matching query."""

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", _validated_atoms(self.atoms))

    def __str__(self) -> str:
        return ", ".join(str(a) for a in self.atoms)


@dataclass(frozen=True)
class ViolationView:
    """Boolean query that holds exactly when the matching constraint is violated."""

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", _validated_atoms(self.atoms))

    def __str__(self) -> str:
        return ", ".join(str(a) for a in self.atoms)


BooleanQuery: TypeAlias = Union[ConjunctiveQuery, ViolationView]

#: A minimal support set: the query holds on exactly this set of facts
#: and on no proper subset.
Witness: TypeAlias = frozenset[Fact]

#: A total assignment of a query's variables to constants.
Valuation: TypeAlias = Mapping[Variable, str]


def query_to_dc(query: ConjunctiveQuery) -> DenialConstraint:
    """Re-tag a query as the denial constraint forbidding its pattern."""
    return DenialConstraint(query.atoms)


def dc_to_view(constraint: DenialConstraint) -> ViolationView:
    """Re-tag a denial constraint as its violation view."""
    return ViolationView(constraint.atoms)


def view_to_query(view: ViolationView) -> ConjunctiveQuery:
    """Re-tag a violation view as a plain boolean conjunctive query."""
    return ConjunctiveQuery(view.atoms)


@dataclass(frozen=True)
class Instance:
    """A database whose facts are partitioned into endogenous and exogenous.

    A fact lives in exactly one part; overlap is rejected.  Every fact
    must conform to a declared relation schema.
    """

    schemas: frozenset[RelationSchema]
    endogenous: frozenset[Fact] = frozenset()
    exogenous: frozenset[Fact] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "schemas", frozenset(self.schemas))
        object.__setattr__(self, "endogenous", frozenset(self.endogenous))
        object.__setattr__(self, "exogenous", frozenset(self.exogenous))
        arities: dict[str, int] = {}
        for s in self.schemas:
            if s.name in arities:
                raise ValueError(f"relation {s.name!r} is declared twice")
            arities[s.name] = s.arity
        overlap = self.endogenous & self.exogenous
        if overlap:
            listing = ", ".join(str(f) for f in sorted(overlap))
            raise ValueError(f"facts cannot be both endogenous and exogenous: {listing}")
        for f in self.endogenous | self.exogenous:
            declared = arities.get(f.relation)
            if declared is None:
                raise SchemaError(f"fact {f} uses the undeclared relation {f.relation!r}")
            if declared != f.arity:
                raise SchemaError(
                    f"fact {f} has arity {f.arity}, but {f.relation!r} is declared with arity {declared}"
                )

    @property
    def facts(self) -> frozenset[Fact]:
        """The full instance: endogenous and exogenous facts together."""
        return self.endogenous | self.exogenous

    def arity(self, relation: str) -> int:
        for s in self.schemas:
            if s.name == relation:
                return s.arity
        raise SchemaError(f"relation {relation!r} is not declared")

    def is_endogenous(self, f: Fact) -> bool:
        return f in self.endogenous

    def is_exogenous(self, f: Fact) -> bool:
        return f in self.exogenous

    def all_endogenous(self) -> "Instance":
        """The same facts with the whole instance treated as endogenous."""
        return Instance(self.schemas, self.endogenous | self.exogenous, frozenset())

    def with_endogenous(self, f: Fact) -> "Instance":
        return Instance(self.schemas, self.endogenous | {f}, self.exogenous)

    def with_exogenous(self, f: Fact) -> "Instance":
        return Instance(self.schemas, self.endogenous, self.exogenous | {f})

    @classmethod
    def infer(cls, endogenous: Iterable[Fact] = (), exogenous: Iterable[Fact] = ()) -> "Instance":
        """Build an instance inferring the schemas from the facts given."""
        endo = frozenset(endogenous)
        exo = frozenset(exogenous)
        arities: dict[str, int] = {}
        for f in endo | exo:
            seen = arities.get(f.relation)
            if seen is None:
                arities[f.relation] = f.arity
            elif seen != f.arity:
                raise SchemaError(
                    f"relation {f.relation!r} is used with arities {seen} and {f.arity}"
                )
        schemas = frozenset(RelationSchema(name, arity) for name, arity in arities.items())
        return cls(schemas, endo, exo)


def check_query_schema(query: BooleanQuery, schemas: frozenset[RelationSchema] | None) -> None:
    """Raise SchemaError when the query mentions an undeclared relation or
    uses one at the wrong arity.  No-op when schemas is None."""
    if schemas is None:
        return
    arities = {s.name: s.arity for s in schemas}
    for a in query.atoms:
        declared = arities.get(a.relation)
        if declared is None:
            raise SchemaError(f"query atom {a} uses the undeclared relation {a.relation!r}")
        if declared != a.arity:
            raise SchemaError(
                f"query atom {a} has arity {a.arity}, but {a.relation!r} is declared with arity {declared}"
            )


def match_atom(a: Atom, f: Fact, binding: Mapping[Variable, str]) -> dict[Variable, str] | None:
    """Extend ``binding`` so that ``a`` maps onto ``f``; None when impossible."""
    if a.relation != f.relation or len(a.terms) != len(f.args):
        return None
    out = dict(binding)
    for term, value in zip(a.terms, f.args):
        if isinstance(term, Variable):
            bound = out.get(term)
            if bound is None:
                out[term] = value
            elif bound != value:
                return None
        elif term != value:
            return None
    return out


def ground_atom(a: Atom, valuation: Mapping[Variable, str]) -> Fact:
    """Apply a valuation to an atom, producing a ground fact."""
    return Fact(
        a.relation,
        tuple(valuation[t] if isinstance(t, Variable) else t for t in a.terms),
    )


def valuations(facts: Iterable[Fact], query: BooleanQuery) -> Iterator[dict[Variable, str]]:
    """All total valuations of the query's variables that map every atom
    onto a fact of the given set, by backtracking join."""
    by_relation: dict[str, list[Fact]] = {}
    for f in sorted(facts):
        by_relation.setdefault(f.relation, []).append(f)
    atoms = query.atoms

    def extend(i: int, binding: dict[Variable, str]) -> Iterator[dict[Variable, str]]:
        if i == len(atoms):
            yield dict(binding)
            return
        a = atoms[i]
        for f in by_relation.get(a.relation, ()):
            extended = match_atom(a, f, binding)
            if extended is not None:
                yield from extend(i + 1, extended)

    yield from extend(0, {})


def eval_bcq(
    facts: Iterable[Fact],
    query: BooleanQuery,
    schemas: frozenset[RelationSchema] | None = None,
) -> bool:
    """True iff some valuation maps every atom of the query into ``facts``."""
    check_query_schema(query, schemas)
    return next(valuations(facts, query), None) is not None


def witnesses(
    facts: Iterable[Fact],
    query: BooleanQuery,
    schemas: frozenset[RelationSchema] | None = None,
    *,
    budget: int | None = None,
) -> frozenset[Witness]:
    """Exactly the minimal support sets of the query within ``facts``.

    Each witness is the fact-image of some valuation; enumeration runs
    over valuations and then keeps the subset-minimal images, so it does
    not walk the subset lattice.
    """
    check_query_schema(query, schemas)
    meter = Meter(budget, "witness enumeration")
    images: set[frozenset[Fact]] = set()
    for val in valuations(facts, query):
        meter.charge()
        images.add(frozenset(ground_atom(a, val) for a in query.atoms))
    return minimize_family(images)


def satisfies_dc(
    facts: Iterable[Fact],
    constraint: DenialConstraint,
    schemas: frozenset[RelationSchema] | None = None,
) -> bool:
    """True iff the constraint's violation view is false on ``facts``."""
    return not eval_bcq(facts, dc_to_view(constraint), schemas)
