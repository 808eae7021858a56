"""Line-oriented instance documents.

A document is a list of ``key: value`` lines, optionally split into
``[name]`` sections.  The last section is the instance; earlier sections
can be referenced by name from construction arguments, and ``@NAME``
refers to a built-in zoo entry.  ``#`` starts a comment.

Kinds and their keys::

    kind: table          labels, row (repeated), zero?, identity?
    kind: presentation   gens, order?, rel (repeated, "u = v" with spaced letters)
    kind: rees           group (C<n>), I, J, P (repeated rows; "." is the sandwich zero)
    kind: reesz          I, J, P (repeated rows of integers or ".")
    kind: construction   op, arg (repeated), ideal?, element?, act?, act_labels?, act_row*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from ..acts import act_from_table, point_act, regular_act
from ..chains import SymbolicReesZ
from ..constructions import (
    ReesMatrixSpec,
    cyclic_group,
    principal_factor,
    rees_matrix_zero,
    rees_quotient,
    u_construction,
    zero_direct_union,
)
from ..core import FiniteSemigroup, adjoin_identity, adjoin_zero, from_table
from ..errors import ParseError, SemanticError
from ..rewrite import FpSemigroup, RewritingSystem, fp_semigroup


class Kind(str, Enum):
    TABLE = "table"
    PRESENTATION = "presentation"
    REES = "rees"
    REESZ = "reesz"
    CONSTRUCTION = "construction"


KEYS = {
    Kind.TABLE: ("labels", "row", "zero", "identity"),
    Kind.PRESENTATION: ("gens", "order", "rel"),
    Kind.REES: ("group", "I", "J", "P"),
    Kind.REESZ: ("I", "J", "P"),
    Kind.CONSTRUCTION: ("op", "arg", "ideal", "element", "act", "act_labels", "act_row"),
}
REPEATED = {"row", "rel", "P", "arg", "act_row"}
OPS = ("rees_quotient", "zero_direct_union", "u_act", "adjoin_zero",
       "adjoin_identity", "principal_factor")
NAME_RE = re.compile(r"^[A-Za-z0-9_.+-]+$")


@dataclass(frozen=True)
class InstanceSpec:
    kind: Kind
    name: str
    fields: tuple[tuple[str, tuple[str, ...]], ...]
    sections: tuple["InstanceSpec", ...] = ()   # local sections this one may reference

    def get(self, key: str) -> tuple[str, ...] | None:
        for k, v in self.fields:
            if k == key:
                return v
        return None

    def all(self, key: str) -> list[tuple[str, ...]]:
        return [v for k, v in self.fields if k == key]


def _normalise(kind: Kind, raw: list[tuple[int, str, tuple[str, ...]]]) -> tuple:
    order = KEYS[kind]
    seen = set()
    for line, key, _ in raw:
        if key not in order:
            raise ParseError(line, f"key {key!r} is not valid for kind {kind.value}")
        if key in seen and key not in REPEATED:
            raise ParseError(line, f"key {key!r} given twice")
        seen.add(key)
    rank = {k: i for i, k in enumerate(order)}
    ordered = sorted(enumerate(raw), key=lambda p: (rank[p[1][1]], p[0]))
    return tuple((key, value) for _, (_, key, value) in ordered)


def _split_sections(text: str):
    sections = []
    current = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]") or not NAME_RE.match(line[1:-1]):
                raise ParseError(no, f"bad section header {line!r}")
            current = (line[1:-1], no, [])
            sections.append(current)
            continue
        if ":" not in line:
            raise ParseError(no, "expected 'key: value'")
        key, value = (p.strip() for p in line.split(":", 1))
        if current is None:
            current = ("main", no, [])
            sections.append(current)
        current[2].append((no, key, tuple(value.split())))
    if not sections:
        raise ParseError(0, "empty document")
    return sections


def parse_instance(text: str, resolve: bool = True) -> InstanceSpec:
    """Parse a document; with ``resolve`` the instance is also built so that
    semantic problems (bad tables, unknown references) surface here."""
    sections = _split_sections(text)
    specs: list[InstanceSpec] = []
    names = set()
    for name, no, lines in sections:
        if name in names:
            raise ParseError(no, f"section {name!r} defined twice")
        names.add(name)
        kinds = [v for _, k, v in lines if k == "kind"]
        if len(kinds) != 1 or len(kinds[0]) != 1:
            raise ParseError(no, f"section {name!r} needs exactly one 'kind:' line")
        try:
            kind = Kind(kinds[0][0])
        except ValueError:
            raise ParseError(no, f"unknown kind {kinds[0][0]!r}") from None
        rest = [(n, k, v) for n, k, v in lines if k not in ("kind", "name")]
        for n, k, v in lines:
            if k == "name" and name == "main" and len(v) == 1:
                name = v[0]
        fields = _normalise(kind, rest)
        for n, k, v in rest:
            if k == "arg":
                ref = v[0] if len(v) == 1 else None
                if ref is None:
                    raise ParseError(n, "one reference per 'arg:' line")
                if not ref.startswith("@") and ref not in {s.name for s in specs}:
                    raise ParseError(n, f"unknown section {ref!r} (sections must precede use)")
        specs.append(InstanceSpec(kind, name, fields, tuple(specs)))
    spec = specs[-1]
    if resolve:
        build(spec)
    return spec


def _line(key: str, value: tuple[str, ...]) -> str:
    return f"{key}: {' '.join(value)}".rstrip()


def _print_one(spec: InstanceSpec) -> list[str]:
    out = [f"[{spec.name}]", f"kind: {spec.kind.value}"]
    out += [_line(k, v) for k, v in spec.fields]
    return out


def _local_deps(spec: InstanceSpec) -> list[InstanceSpec]:
    local = {s.name: s for s in spec.sections}
    needed: list[InstanceSpec] = []

    def visit(s: InstanceSpec):
        for (ref,) in s.all("arg"):
            if not ref.startswith("@") and ref in local and local[ref] not in needed:
                visit(local[ref])
                needed.append(local[ref])

    visit(spec)
    return [s for s in spec.sections if s in needed]


def print_instance(spec: InstanceSpec) -> str:
    lines = []
    for dep in _local_deps(spec):
        lines += _print_one(dep) + [""]
    lines += _print_one(spec)
    return "\n".join(lines) + "\n"


def _canonical(spec: InstanceSpec) -> tuple:
    return (spec.kind, spec.name, spec.fields,
            tuple(_canonical(d) for d in _local_deps(spec)))


def same_instance(a: InstanceSpec, b: InstanceSpec) -> bool:
    """Equality up to unreferenced sections."""
    return _canonical(a) == _canonical(b)


# -- building -----------------------------------------------------------------------------

Instance = FiniteSemigroup | FpSemigroup | SymbolicReesZ

_ZOO_LOOKUP: Callable[[str], InstanceSpec] | None = None


def set_zoo_lookup(fn: Callable[[str], InstanceSpec]) -> None:
    global _ZOO_LOOKUP
    _ZOO_LOOKUP = fn


def _one(spec: InstanceSpec, key: str) -> str:
    v = spec.get(key)
    if v is None or len(v) != 1:
        raise SemanticError(f"{spec.name}: '{key}' needs exactly one value")
    return v[0]


def _int(spec: InstanceSpec, key: str) -> int:
    v = _one(spec, key)
    try:
        return int(v)
    except ValueError:
        raise SemanticError(f"{spec.name}: '{key}' must be an integer") from None


def _build_table(spec: InstanceSpec) -> FiniteSemigroup:
    labels = spec.get("labels")
    if not labels:
        raise SemanticError(f"{spec.name}: table needs labels")
    pos = {l: i for i, l in enumerate(labels)}
    if len(pos) != len(labels):
        raise SemanticError(f"{spec.name}: duplicate labels")
    rows = []
    for row in spec.all("row"):
        try:
            rows.append([pos[x] for x in row])
        except KeyError as e:
            raise SemanticError(f"{spec.name}: unknown label {e.args[0]!r} in row") from None
    special = {}
    for key in ("zero", "identity"):
        if spec.get(key) is not None:
            lab = _one(spec, key)
            if lab not in pos:
                raise SemanticError(f"{spec.name}: unknown {key} label {lab!r}")
            special[key] = pos[lab]
    return from_table(labels, rows, **special)


def _build_presentation(spec: InstanceSpec) -> FpSemigroup:
    gens = spec.get("gens")
    if not gens:
        raise SemanticError(f"{spec.name}: presentation needs gens")
    order = spec.get("order") or gens
    if sorted(order) != sorted(gens):
        raise SemanticError(f"{spec.name}: order must list exactly the generators")
    rels = []
    for rel in spec.all("rel"):
        if rel.count("=") != 1:
            raise SemanticError(f"{spec.name}: relation needs a single '='")
        k = rel.index("=")
        u, v = "".join(rel[:k]), "".join(rel[k + 1:])
        if not u or not v:
            raise SemanticError(f"{spec.name}: empty side in relation")
        rels.append((u, v))
    return fp_semigroup(RewritingSystem.from_relations(order, rels))


def _group(token: str):
    m = re.fullmatch(r"C(\d+)", token)
    if not m or int(m.group(1)) < 1:
        raise SemanticError(f"unknown group {token!r} (use C<n>)")
    return cyclic_group(int(m.group(1)))


def _build_rees(spec: InstanceSpec) -> FiniteSemigroup:
    G = _group(_one(spec, "group"))
    I, J = _int(spec, "I"), _int(spec, "J")
    pos = {l: i for i, l in enumerate(G.labels)}
    P = []
    for row in spec.all("P"):
        try:
            P.append(tuple(None if x == "." else pos[x] for x in row))
        except KeyError as e:
            raise SemanticError(f"{spec.name}: unknown group element {e.args[0]!r}") from None
    return rees_matrix_zero(ReesMatrixSpec(G, I, J, tuple(P)))


def _build_reesz(spec: InstanceSpec) -> SymbolicReesZ:
    I, J = _int(spec, "I"), _int(spec, "J")
    P = []
    for row in spec.all("P"):
        try:
            P.append(tuple(None if x == "." else int(x) for x in row))
        except ValueError:
            raise SemanticError(f"{spec.name}: P entries are integers or '.'") from None
    return SymbolicReesZ(I, J, tuple(P))


def _resolve_ref(spec: InstanceSpec, ref: str) -> InstanceSpec:
    if ref.startswith("@"):
        if _ZOO_LOOKUP is None:
            raise SemanticError("no zoo available")
        return _ZOO_LOOKUP(ref[1:])
    for s in spec.sections:
        if s.name == ref:
            return s
    raise SemanticError(f"{spec.name}: unknown reference {ref!r}")


def _finite(obj, ref: str) -> FiniteSemigroup:
    if not isinstance(obj, FiniteSemigroup):
        raise SemanticError(f"{ref} is not a finite semigroup")
    return obj


def _labels_to(S: FiniteSemigroup, labels: tuple[str, ...]) -> list[int]:
    try:
        return [S.index(l) for l in labels]
    except KeyError as e:
        raise SemanticError(f"unknown element label {e.args[0]!r}") from None


def _build_construction(spec: InstanceSpec, depth: int) -> FiniteSemigroup:
    op = _one(spec, "op")
    if op not in OPS:
        raise SemanticError(f"{spec.name}: unknown op {op!r}")
    refs = [v[0] for v in spec.all("arg")]
    args = [_finite(build(_resolve_ref(spec, r), depth + 1), r) for r in refs]
    need = None if op == "zero_direct_union" else 1
    if (need is not None and len(args) != need) or not args:
        raise SemanticError(f"{spec.name}: {op} takes {need or 'one or more'} arg(s)")
    S = args[0]
    if op == "rees_quotient":
        return rees_quotient(S, _labels_to(S, spec.get("ideal") or ())).semigroup
    if op == "zero_direct_union":
        return zero_direct_union(args)
    if op == "adjoin_zero":
        return adjoin_zero(S)
    if op == "adjoin_identity":
        return adjoin_identity(S)
    if op == "principal_factor":
        return principal_factor(S, _labels_to(S, (_one(spec, "element"),))[0]).semigroup
    # u_act
    act = spec.get("act")
    if act == ("regular",):
        A = regular_act(S)
    elif act == ("point",):
        A = point_act(S)
    elif act == ("table",):
        labels = spec.get("act_labels")
        if not labels:
            raise SemanticError(f"{spec.name}: act table needs act_labels")
        pos = {l: i for i, l in enumerate(labels)}
        try:
            rows = [[pos[x] for x in row] for row in spec.all("act_row")]
        except KeyError as e:
            raise SemanticError(f"{spec.name}: unknown act point {e.args[0]!r}") from None
        A = act_from_table(S, rows, labels=labels)
    else:
        raise SemanticError(f"{spec.name}: act must be regular, point or table")
    return u_construction(S, A).semigroup


def build(spec: InstanceSpec, depth: int = 0) -> Instance:
    """Materialise the instance described by ``spec``."""
    if depth > 32:
        raise SemanticError("construction nesting too deep (cyclic reference?)")
    if spec.kind is Kind.TABLE:
        return _build_table(spec)
    if spec.kind is Kind.PRESENTATION:
        return _build_presentation(spec)
    if spec.kind is Kind.REES:
        return _build_rees(spec)
    if spec.kind is Kind.REESZ:
        return _build_reesz(spec)
    return _build_construction(spec, depth)
