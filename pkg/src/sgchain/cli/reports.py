"""JSON-ready reports for the analysis commands."""

from __future__ import annotations

from enum import Enum

import numpy as np

from ..chains import (
    Certificate,
    NotFoundUpTo,
    SymbolicReesZ,
    antichain_certificate,
    ascending_chain_certificate,
    finite_backend,
    fp_backend,
    kernel_antichain_41,
    kernel_backend_41,
    rees_z_backend,
    validate_certificate,
    zero_min_right_ideal_report,
)
from ..core import FiniteSemigroup, Verdict
from ..errors import SemanticError
from ..green import green_of, maximum_antichain, width
from ..ideals import (
    Side,
    classify,
    decompose_SR,
    is_globally_idempotent,
    kernel,
    minimal_ideals,
    minimal_left_ideals,
    minimal_right_ideals,
    socle,
    zero_minimal_ideals,
    zero_minimal_left_ideals,
    zero_minimal_right_ideals,
)
from ..rewrite import (
    Completed,
    FpSemigroup,
    enumerate_normal_forms,
    example_41,
    is_locally_confluent,
    knuth_bendix,
)

SCHEMA = 1


def jsonable(x):
    """Plain JSON values with a stable order for sets."""
    if isinstance(x, Verdict):
        return {"ok": x.ok, "witness": jsonable(x.witness)}
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, (frozenset, set)):
        return sorted((jsonable(v) for v in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return repr(x)


def _names(S: FiniteSemigroup, xs) -> list[str]:
    return [S.labels[a] for a in sorted(xs)]


def _family(S: FiniteSemigroup, sets) -> list[list[str]]:
    return [_names(S, X) for X in sets]


def _verdict(S: FiniteSemigroup, v) -> dict:
    return {"ok": bool(v), "witness": jsonable(getattr(v, "witness", None))}


# -- finite semigroups ------------------------------------------------------------------

def green_report(S: FiniteSemigroup) -> dict:
    g = green_of(S)
    P = g.r_poset
    covers = [[i, j] for i in range(P.n) for j in range(P.n)
              if P.less(i, j) and not any(P.less(i, k) and P.less(k, j) for k in range(P.n))]
    return {
        "R": _family(S, g.R), "L": _family(S, g.L), "J": _family(S, g.J),
        "H": _family(S, g.H), "D": _family(S, g.D),
        "r_poset": {"classes": len(g.R), "covers": covers, "height": P.height(),
                    "width": width(P), "maximum_antichain": sorted(maximum_antichain(P))},
    }


def socle_json(S: FiniteSemigroup, side: Side) -> dict:
    rep = socle(S, side)
    return {
        "side": side.value,
        "sigma": _names(S, rep.sigma),
        "null_part": _names(S, rep.null_part),
        "gi_part": _names(S, rep.gi_part),
        "blocks": _family(S, rep.blocks),
        "zero_minimal": _family(S, rep.ideals),
        "clauses": {k: _verdict(S, v) for k, v in rep.clauses.items()},
        "ok": rep.ok,
    }


def sr_json(S: FiniteSemigroup) -> list[dict]:
    out = []
    for R in zero_minimal_right_ideals(S):
        if not is_globally_idempotent(S, R):
            continue
        d = decompose_SR(S, R)
        out.append({"R": _names(S, R), "SR": _names(S, d.sr), "null_part": _names(S, d.null_part),
                    "gi_part": _names(S, d.gi_part),
                    "clauses": {k: _verdict(S, v) for k, v in d.clauses.items()}, "ok": d.ok})
    return out


def finite_analysis(S: FiniteSemigroup) -> dict:
    g = green_of(S)
    ideals = {
        "minimal_right": _family(S, minimal_right_ideals(S)),
        "minimal_left": _family(S, minimal_left_ideals(S)),
        "minimal": _family(S, minimal_ideals(S)),
        "kernel": _names(S, kernel(S)),
    }
    rep = {
        "kind": "finite",
        "size": S.size,
        "labels": list(S.labels),
        "zero": None if S.zero is None else S.labels[S.zero],
        "identity": None if S.identity is None else S.labels[S.identity],
        "green_counts": {k: len(getattr(g, k)) for k in "RLJHD"},
        "ideals": ideals,
        "socle": None,
        "sr_decompositions": [],
    }
    if S.zero is not None:
        ideals["zero_minimal_right"] = _family(S, zero_minimal_right_ideals(S))
        ideals["zero_minimal_left"] = _family(S, zero_minimal_left_ideals(S))
        ideals["zero_minimal"] = _family(S, zero_minimal_ideals(S))
        rep["socle"] = {"right": socle_json(S, Side.RIGHT), "left": socle_json(S, Side.LEFT)}
        rep["sr_decompositions"] = sr_json(S)
    rep["classification"] = jsonable(classify(S).flags())
    return rep


# -- presentations and symbolic Rees matrices -----------------------------------------------

def presentation_analysis(fp: FpSemigroup, radius: int) -> dict:
    conf = is_locally_confluent(fp.rs)
    rep = {
        "kind": "presentation",
        "alphabet": list(fp.alphabet),
        "rules": [list(r) for r in fp.rs.rules],
        "confluent": conf.ok,
        "critical_pairs": conf.checked,
    }
    if conf.ok:
        counts = enumerate_normal_forms(fp, min(radius, 12))
        rep["normal_form_counts"] = {str(n): len(w) for n, w in counts.items()}
    else:
        rep["witness"] = list(conf.witness)
    return rep


def cert_json(show, cert) -> dict:
    if isinstance(cert, NotFoundUpTo):
        return {"found": False, "radius": cert.radius, "best": [show(x) for x in cert.best]}
    if cert is None:
        return {"found": False}
    return {"found": True, "kind": cert.kind.value, "size": len(cert),
            "elements": [show(x) for x in cert.elements],
            "checked_bound": cert.checked_bound, "verdict_basis": cert.verdict_basis.value}


def reesz_analysis(spec: SymbolicReesZ, antichain: int = 10) -> dict:
    E = rees_z_backend(spec)
    rows = []
    for i in range(1, spec.I + 1):
        r = zero_min_right_ideal_report(spec, i, antichain)
        rows.append({"row": i, "annihilator_set_size": r.size, "annihilator_set": r.description,
                     "certificate": cert_json(E.show, r.certificate)})
    return {"kind": "reesz", "I": spec.I, "J": spec.J,
            "P": [[None if p is None else p for p in row] for row in spec.P], "rows": rows}


# -- chains -------------------------------------------------------------------------------

def _is_example_41(fp: FpSemigroup) -> bool:
    ex = example_41()
    return fp.alphabet == ex.alphabet and set(fp.rs.rules) == set(ex.rs.rules)


def chains_report(obj, antichain: int | None, chain: int | None, radius: int,
                  kernel_only: bool = False, row: int = 1) -> dict:
    out: dict = {"radius": radius}
    if isinstance(obj, SymbolicReesZ):
        E = rees_z_backend(obj, row=row, radius=radius)
        out["backend"] = f"reesz_row_{row}"
        if antichain:
            r = zero_min_right_ideal_report(obj, row, antichain)
            out["annihilator_set_size"] = r.size
            out["antichain"] = _with_validation(E, r.certificate)
        if chain:
            out["chain"] = _with_validation(E, ascending_chain_certificate(E, chain, radius))
        return out

    if isinstance(obj, FiniteSemigroup):
        if kernel_only:
            K, old = obj.restrict(kernel(obj))
            E = finite_backend(K)
            out["backend"] = "finite_kernel"
        else:
            E = finite_backend(obj)
            out["backend"] = "finite"
    elif isinstance(obj, FpSemigroup):
        if not obj.confluent:
            raise SemanticError("chains needs a confluent presentation")
        if kernel_only:
            if not _is_example_41(obj):
                raise SemanticError("--kernel-only is available for the finite instances and "
                                    "for <a,b | abb=b, aba=aab>")
            E = kernel_backend_41(radius)
            out["backend"] = "example_41_kernel"
        else:
            E = fp_backend(obj, radius)
            out["backend"] = "free" if not obj.rs.rules else "presentation"
    else:
        raise SemanticError("unsupported instance")

    if antichain:
        if out["backend"] == "example_41_kernel":
            cert = kernel_antichain_41(antichain, radius)
        else:
            cert = antichain_certificate(E, antichain, radius)
        out["antichain"] = _with_validation(E, cert)
    if chain:
        out["chain"] = _with_validation(E, ascending_chain_certificate(E, chain, radius))
    return out


def _with_validation(E, cert) -> dict:
    rep = cert_json(E.show, cert)
    if isinstance(cert, Certificate):
        cap = E.validation_cap
        bound = cert.checked_bound if cap is None else min(cap, cert.checked_bound)
        rep["validated"] = bool(validate_certificate(E, cert, E.multipliers(bound)))
        rep["validation_bound"] = bound
    return rep


# -- rewriting --------------------------------------------------------------------------------

def rewrite_report(fp: FpSemigroup, reduce_word: str | None = None, complete: bool = False,
                   normal_forms: int | None = None) -> dict:
    out: dict = {"alphabet": list(fp.alphabet), "rules": [list(r) for r in fp.rs.rules]}
    if reduce_word is not None:
        out["reduce"] = {"word": reduce_word, "normal_form": fp.reduce(reduce_word)}
    if complete:
        res = knuth_bendix(fp.rs)
        out["complete"] = {"completed": isinstance(res, Completed),
                           "rules": [list(r) for r in res.rs.rules]}
        if not isinstance(res, Completed):
            out["complete"]["reason"] = res.reason
    if normal_forms is not None:
        counts = enumerate_normal_forms(fp, normal_forms)
        out["normal_forms"] = {str(n): ws for n, ws in counts.items()}
    return out


def analysis(obj, radius: int) -> dict:
    if isinstance(obj, FiniteSemigroup):
        return finite_analysis(obj)
    if isinstance(obj, FpSemigroup):
        return presentation_analysis(obj, radius)
    if isinstance(obj, SymbolicReesZ):
        return reesz_analysis(obj)
    raise SemanticError("unsupported instance")

