"""Built-in instances, written in the instance document format."""

from __future__ import annotations

from functools import lru_cache

from ..errors import SemanticError
from .instances import InstanceSpec, build, parse_instance, set_zoo_lookup

ZOO_TEXT = {
    "LZ2": """
kind: table
labels: x y
row: x x
row: y y
""",
    "RZ2": """
kind: table
labels: x y
row: x y
row: x y
""",
    "N2": """
kind: table
labels: 0 u
row: 0 0
row: 0 0
zero: 0
""",
    "N3": """
kind: table
labels: 0 u v
row: 0 0 0
row: 0 0 0
row: 0 0 0
""",
    "chain2": """
kind: table
labels: 0 1
row: 0 0
row: 0 1
""",
    "chain3": """
kind: table
labels: 0 1 2
row: 0 0 0
row: 0 1 1
row: 0 1 2
""",
    "C2": """
kind: table
labels: e g
row: e g
row: g e
""",
    "C3": """
kind: table
labels: e g g^2
row: e g g^2
row: g g^2 e
row: g^2 e g
""",
    "C2_0": """
kind: construction
op: adjoin_zero
arg: @C2
""",
    "rees_full": """
kind: rees
group: C2
I: 2
J: 2
P: e e
P: e e
""",
    "rees_diag": """
kind: rees
group: C2
I: 2
J: 2
P: e .
P: . e
""",
    "U_RZ2_regular": """
kind: construction
op: u_act
arg: @RZ2
act: regular
""",
    "U_LZ2_point": """
kind: construction
op: u_act
arg: @LZ2
act: point
""",
    "U_C2_regular": """
kind: construction
op: u_act
arg: @C2
act: regular
""",
    "U_chain2_table": """
kind: construction
op: u_act
arg: @chain2
act: table
act_labels: p q r
act_row: p p
act_row: p q
act_row: p r
""",
    "union_diag_N2": """
kind: construction
op: zero_direct_union
arg: @rees_diag
arg: @N2
""",
    "chain3_mod_01": """
kind: construction
op: rees_quotient
arg: @chain3
ideal: 0 1
""",
    "factor_chain3_1": """
kind: construction
op: principal_factor
arg: @chain3
element: 1
""",
    # S u T u {x, 0} with S, T the 9-element Rees matrix semigroups over C2
    # (all-e and diagonal sandwich); s x = x for nonzero s in S, S T = T S = 0,
    # every other product involving x is 0.
    "final": """
kind: table
labels: s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) t(1,e,1) t(1,e,2) t(1,g,1) t(1,g,2) t(2,e,1) t(2,e,2) t(2,g,1) t(2,g,2) x 0
row: s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) 0 0 0 0 0 0 0 0 x 0
row: s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) 0 0 0 0 0 0 0 0 x 0
row: s(1,g,1) s(1,g,2) s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) s(1,e,1) s(1,e,2) 0 0 0 0 0 0 0 0 x 0
row: s(1,g,1) s(1,g,2) s(1,e,1) s(1,e,2) s(1,g,1) s(1,g,2) s(1,e,1) s(1,e,2) 0 0 0 0 0 0 0 0 x 0
row: s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) 0 0 0 0 0 0 0 0 x 0
row: s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) 0 0 0 0 0 0 0 0 x 0
row: s(2,g,1) s(2,g,2) s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) s(2,e,1) s(2,e,2) 0 0 0 0 0 0 0 0 x 0
row: s(2,g,1) s(2,g,2) s(2,e,1) s(2,e,2) s(2,g,1) s(2,g,2) s(2,e,1) s(2,e,2) 0 0 0 0 0 0 0 0 x 0
row: 0 0 0 0 0 0 0 0 t(1,e,1) t(1,e,2) t(1,g,1) t(1,g,2) 0 0 0 0 0 0
row: 0 0 0 0 0 0 0 0 0 0 0 0 t(1,e,1) t(1,e,2) t(1,g,1) t(1,g,2) 0 0
row: 0 0 0 0 0 0 0 0 t(1,g,1) t(1,g,2) t(1,e,1) t(1,e,2) 0 0 0 0 0 0
row: 0 0 0 0 0 0 0 0 0 0 0 0 t(1,g,1) t(1,g,2) t(1,e,1) t(1,e,2) 0 0
row: 0 0 0 0 0 0 0 0 t(2,e,1) t(2,e,2) t(2,g,1) t(2,g,2) 0 0 0 0 0 0
row: 0 0 0 0 0 0 0 0 0 0 0 0 t(2,e,1) t(2,e,2) t(2,g,1) t(2,g,2) 0 0
row: 0 0 0 0 0 0 0 0 t(2,g,1) t(2,g,2) t(2,e,1) t(2,e,2) 0 0 0 0 0 0
row: 0 0 0 0 0 0 0 0 0 0 0 0 t(2,g,1) t(2,g,2) t(2,e,1) t(2,e,2) 0 0
row: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
row: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
zero: 0
""",
    "ex41": """
kind: presentation
gens: a b
order: a b
rel: a b b = b
rel: a b a = a a b
""",
    "free1": """
kind: presentation
gens: a
""",
    "free2": """
kind: presentation
gens: a b
""",
    "reesz_diag": """
kind: reesz
I: 2
J: 2
P: 0 .
P: . 0
""",
    "reesz_full": """
kind: reesz
I: 2
J: 2
P: 0 0
P: 0 0
""",
}


ZOO_NAMES = tuple(ZOO_TEXT)
FINITE_KINDS = ("table", "rees", "construction")


@lru_cache(maxsize=None)
def zoo_spec(name: str) -> InstanceSpec:
    if name not in ZOO_TEXT:
        raise SemanticError(f"no zoo instance named {name!r}")
    return parse_instance(f"[{name}]\n" + ZOO_TEXT[name], resolve=False)


@lru_cache(maxsize=None)
def zoo_instance(name: str):
    return build(zoo_spec(name))


def finite_zoo_names() -> list[str]:
    return [n for n in ZOO_NAMES if zoo_spec(n).kind.value in FINITE_KINDS]


set_zoo_lookup(zoo_spec)
