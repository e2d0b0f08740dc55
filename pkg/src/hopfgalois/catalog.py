"""Catalog of worked examples as JSON-serializable presentation specs.

Every entry, built-in or loaded from a file, goes through one builder,
:func:`build`, which parses the spec, re-runs the structural checks and
returns a :class:`Entry`.  ``export`` writes the spec back out.

Spec layout (all expressions are strings in the expression syntax)::

    {"name", "cyclotomic_order", "indeterminates", "aliases", "balanced_degree",
     "hopf": {"name", "generators", "rules": [{"lhs", "rhs": [{"coeff", "word"}]}],
              "weights", "grading", "coproduct", "counit", "antipode"},
     "algebra": {...same presentation keys...} or "hopf",
     "coaction": {gen: expr over (A, H)},
     "translation": {hgen: expr over (A, A)} or "antipode",
     "coinvariant_generators": {name: expr in A},
     "c_generators": {name: expr over (A, A)},
     "c_antipode": {name: C-expression},
     "c_iso": {hgen: C-expression},
     "gauge_families": {name: {"params": [...], "images": {gen: expr in A}}},
     "group": {...}}
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .bialgebroid import EhresmannBialgebroid
from .galois import ComoduleAlgebra, HopfGaloisExtension
from .groups import CocycledGroup
from .hopf import HopfStructure, MorphismError
from .parse import ParseError, parse_in, parse_scalar
from .presentation import Presentation, rules_from_strings
from .report import Report
from .scalars import Field
from .tensor import Tensor


class CatalogError(ValueError):
    pass


# spec construction helpers ---------------------------------------------------------------
def _rules_block(field, gens, table, aliases, name="", weights=None, grading=None):
    probe = Presentation(field, gens)
    rules = rules_from_strings(field, gens, table, aliases)
    out = []
    for lhs, rhs in rules:
        out.append({
            "lhs": probe.word_str(lhs),
            "rhs": [{"coeff": str(c), "word": probe.word_str(w)} for w, c in rhs.items()],
        })
    block = {"name": name, "generators": list(gens), "rules": out}
    if weights:
        block["weights"] = weights
    if grading:
        block["grading"] = grading
    return block


def _presentation(field, block, aliases) -> Presentation:
    gens = block["generators"]
    probe = Presentation(field, gens)
    rules = []
    for r in block.get("rules", []):
        lhs = probe.word(r["lhs"])
        rhs: dict = {}
        for t in r.get("rhs", []):
            w = probe.word(t["word"]) if t["word"] else ()
            c = parse_scalar(field, str(t["coeff"]), aliases)
            rhs[w] = rhs.get(w, field.zero) + c
        rules.append((lhs, {w: c for w, c in rhs.items() if c}))
    grading = block.get("grading")
    if isinstance(grading, list):
        grading = dict(zip(gens, grading))
    weights = block.get("weights")
    if isinstance(weights, list):
        weights = dict(zip(gens, weights))
    return Presentation(field, gens, rules, weights=weights, grading=grading, name=block.get("name", ""))


# built-in specs ----------------------------------------------------------------------------
def taft_spec(N: int = 2, s="s") -> dict:
    """Taft algebra T_N and its Galois object A_s (X^N = s)."""
    if N < 2:
        raise CatalogError("Taft algebras need N >= 2")
    symbolic = isinstance(s, str) and not _is_number(s)
    indets = [s] if symbolic else []
    field = Field(N, indets)
    aliases = {"q": "zeta"}
    xs, Xs = "x" * N, "X" * N
    hopf = _rules_block(field, ["g", "x"], {"xg": "q*g*x", xs: "0", "g" * N: "1"}, aliases, f"T_{N}")
    hopf.update({
        "coproduct": {"g": "tensor(g, g)", "x": "tensor(1, x) + tensor(x, g)"},
        "counit": {"g": "1", "x": "0"},
        "antipode": {"g": "g^-1", "x": "-x*g^-1"},
    })
    algebra = _rules_block(field, ["G", "X"], {"XG": "q*G*X", Xs: str(s), "G" * N: "1"}, aliases, f"A_{s}")
    return {
        "name": "taft",
        "description": f"Taft algebra T_{N} with the Galois object A_s, X^{N} = {s}",
        "cyclotomic_order": N,
        "indeterminates": indets,
        "aliases": aliases,
        "balanced_degree": 2 * N,
        "hopf": hopf,
        "algebra": algebra,
        "coaction": {"G": "tensor(G, g)", "X": "tensor(1, x) + tensor(X, g)"},
        "translation": {"g": "tensor(G^-1, G)", "x": "tensor(1, X) - tensor(X*G^-1, G)"},
        "coinvariant_generators": {},
        "c_generators": {"Xi": "tensor(X, G^-1) - tensor(1, X*G^-1)", "Gamma": "tensor(G, G^-1)"},
        "c_iso": {"x": "Xi", "g": "Gamma"},
        "c_relations": {
            "Gamma-power": ["Gamma^%d" % N, "1", "prop-taft"],
            "Xi-power": ["Xi^%d" % N, "0", "prop-taft"],
            "Xi-Gamma": ["Xi*Gamma", "q*Gamma*Xi", "prop-taft"],
        },
        "c_coproducts": {"Xi": [["1", "1", "Xi"], ["1", "Xi", "Gamma"]], "Gamma": [["1", "Gamma", "Gamma"]]},
        "c_counits": {"Xi": "0", "Gamma": "1"},
        "anchors": {"coproducts": "prop-taft", "counits": "prop-taft"},
        "params": {"N": N, "s": s},
        "extended_gauge": _TAFT_EXTENDED.get(N, {}),
        "gauge_algebra_maps": N,
    }


# unital equivariant linear maps of A_s as printed, rows are images of the listed elements
_TAFT_EXTENDED = {
    2: {"dimension": 3, "params": ["al", "be", "ga"], "blocks": [{
        "elements": ["1", "X*G", "G", "X"],
        "rows": [["1", "0", "0", "0"], ["be", "al", "0", "0"], ["0", "0", "al", "0"], ["0", "0", "ga", "1"]],
    }]},
    3: {"dimension": 8, "params": ["a1", "a2", "be", "ga", "de", "et", "th", "la"], "blocks": [
        {"elements": ["1", "X*G^2", "X^2*G"],
         "rows": [["1", "0", "0"], ["be", "a2", "0"], ["et", "-q*de", "a1"]]},
        {"elements": ["G", "X", "X^2*G^2"],
         "rows": [["a1", "0", "0"], ["ga", "1", "0"], ["th", "-q*be", "a2"]]},
        {"elements": ["G^2", "X*G", "X^2"],
         "rows": [["a2", "0", "0"], ["de", "a1", "0"], ["la", "-q*ga", "1"]]},
    ]},
}


def sweedler_spec() -> dict:
    spec = taft_spec(2, "s")
    spec["name"] = "sweedler"
    spec["description"] = "Sweedler's 4-dimensional Hopf algebra T_2 with the Galois object A_s"
    return spec


def self_galois_spec(N: int = 2) -> dict:
    """H = T_N as a Galois object over itself, coaction Δ, τ(h) = S(h₁)⊗h₂."""
    base = taft_spec(N, "0")
    return {
        "name": "self-galois",
        "description": f"T_{N} as a Galois object over itself",
        "cyclotomic_order": N,
        "indeterminates": [],
        "aliases": base["aliases"],
        "balanced_degree": 2 * N,
        "hopf": base["hopf"],
        "algebra": "hopf",
        "coaction": "coproduct",
        "translation": "antipode",
        "coinvariant_generators": {},
        "c_generators": {"g": "tensor(g, g^-1)", "x": "tensor(x, g^-1) - tensor(1, x*g^-1)"},
        "c_iso": {"g": "g", "x": "x"},
        "params": {"N": N},
    }


def _sl2_rules(q: str):
    if q == "1":
        return {"ba": "a*b", "ca": "a*c", "bd": "d*b", "cd": "d*c", "cb": "b*c",
                "da": "1 + b*c", "ad": "1 + b*c"}
    return {"ba": "q^-1*a*b", "ca": "q^-1*a*c", "bd": "q*d*b", "cd": "q*d*c", "cb": "b*c",
            "da": "1 + q^-1*b*c", "ad": "1 + q*b*c"}


_B0, _BM, _BP = "(-q^-1*c*b)", "(-q^-1*a*b)", "(c*d)"


def _monopole_relations() -> dict:
    one_b0 = f"(1 - {_B0})"
    sphere = f"{_BP}*{_BM} - {_B0}*{one_b0}"
    rel = {
        "rel1/DA": ["D*A - q^-1*C*B", "1", "rel1"],
        "rel1/AD": ["A*D - q*B*C", "1", "rel1"],
        "rel2-3/s": [f"s({sphere})", "0", "rel2-3"],
        "rel2-3/t": [f"t({sphere})", "0", "rel2-3"],
        "circle/delta-alpha": ["delta*alpha", f"tensor({one_b0}, {one_b0})", "circle"],
        "circle/beta-gamma": ["beta*gamma", f"tensor({_B0}, {_B0})", "circle"],
        "circle/betat-alphat": ["betat*alphat", f"tensor({one_b0}, {_B0})", "circle"],
        "circle/deltat-gammat": ["deltat*gammat", f"tensor({_B0}, {one_b0})", "circle"],
        "sph-rel-bi1": ["delta*alpha + beta*gamma + betat*alphat + deltat*gammat", "1", "sph-rel-bi1"],
        "st/s-B0": ["beta*gamma + deltat*gammat", f"s({_B0})", "st-monopole"],
        "st/t-B0": ["beta*gamma + betat*alphat", f"t({_B0})", "st-monopole"],
        "st/s-Bm": ["alpha*deltat + q^2*alphat*beta", f"s({_BM})", "st-monopole"],
        "st/t-Bm": ["alphat*delta + q^2*gamma*deltat", f"t({_BM})", "st-monopole"],
        "st/s-Bp": ["gammat*delta + q^2*gamma*betat", f"s({_BP})", "st-monopole"],
        "st/t-Bp": ["alpha*betat + q^2*gammat*beta", f"t({_BP})", "st-monopole"],
        "BC": ["B*C", "C*B", "qcomm"],
    }
    qc = [
        ("alpha*gamma", "q^2*gamma*alpha"),
        ("alpha*alphat", "q*alphat*alpha"),
        ("alpha*gammat", "q*gammat*alpha"),
        ("alpha*beta", "q^2*beta*alpha"),
        ("alpha*betat", "q*betat*alpha + (1 - q^2)*gammat*beta"),
        ("alpha*deltat", "q*deltat*alpha + (1 - q^2)*alphat*beta"),
        ("gamma*alphat", "q^-1*alphat*gamma"),
        ("gamma*gammat", "q^-1*gammat*gamma"),
        ("gamma*betat", "q*betat*gamma"),
        ("gamma*deltat", "q*deltat*gamma"),
        ("alphat*gammat", "gammat*alphat"),
        ("alphat*deltat", "q^2*deltat*alphat"),
        ("gamma*beta", "beta*gamma"),
        ("gammat*deltat", "deltat*gammat + (1 - q^2)*beta*gamma"),
        ("alphat*betat", "betat*alphat + (1 - q^2)*beta*gamma"),
        ("alpha*delta", "delta*alpha + (1 - q^2)*(deltat*gammat + betat*alphat) + (1 - q^2)^2*beta*gamma"),
    ]
    for lhs, rhs in qc:
        rel["qcomm/" + lhs.replace("*", "-")] = [lhs, rhs, "qcomm"]
    return rel


def _sl2_relations() -> dict:
    gens = ["alpha", "beta", "gamma", "delta"]
    rel = {}
    for i, u in enumerate(gens):
        for v in gens[i + 1:]:
            rel[f"commute/{u}-{v}"] = [f"{u}*{v}", f"{v}*{u}", "sph-rel-bi2"]
    rel["sph-rel-bi2"] = ["alpha*delta - beta*gamma", "1", "sph-rel-bi2"]
    # "αc" is α•t(c) and "cδ" is s(c)•δ
    rel["abcdst/s-c"] = ["alpha*t(c) + gamma*t(d)", "s(c)", "abcdst"]
    rel["abcdst/s-d"] = ["beta*t(c) + delta*t(d)", "s(d)", "abcdst"]
    rel["abcdst/t-c"] = ["s(c)*delta - s(d)*gamma", "t(c)", "abcdst"]
    rel["abcdst/t-d"] = ["s(d)*alpha - s(c)*beta", "t(d)", "abcdst"]
    return rel


def monopole_spec() -> dict:
    """O(SL_q(2)) over the standard Podleś sphere with H = O(U(1))."""
    field = Field(1, ["q", "X", "Y"])
    hopf = _rules_block(field, ["z", "w"], {"zw": "1", "wz": "1"}, {}, "O(U(1))")
    hopf.update({
        "coproduct": {"z": "tensor(z, z)", "w": "tensor(w, w)"},
        "counit": {"z": "1", "w": "1"},
        "antipode": {"z": "w", "w": "z"},
    })
    algebra = _rules_block(field, ["a", "d", "b", "c"], _sl2_rules("q"), {}, "O(SL_q(2))",
                           weights={"a": 2, "d": 2, "b": 1, "c": 1},
                           grading={"a": [1, 1], "b": [1, -1], "c": [-1, 1], "d": [-1, -1]})
    return {
        "name": "podles-monopole",
        "description": "q-monopole bundle O(SL_q(2)) over the standard Podles sphere, H = O(U(1))",
        "cyclotomic_order": 1,
        "indeterminates": ["q", "X", "Y"],
        "aliases": {},
        "balanced_degree": 6,
        "hopf": hopf,
        "algebra": algebra,
        "coaction": {"a": "tensor(a, z)", "c": "tensor(c, z)", "b": "tensor(b, w)", "d": "tensor(d, w)"},
        "translation": {"z": "tensor(d, a) - q^-1*tensor(b, c)", "w": "tensor(a, d) - q*tensor(c, b)"},
        "coinvariant_generators": {"Bm": "-q^-1*a*b", "Bp": "c*d", "B0": "-q^-1*c*b"},
        "c_generators": {
            "alpha": "tensor(a, d)", "gamma": "-q^-1*tensor(c, b)",
            "alphat": "-q^-1*tensor(a, b)", "gammat": "tensor(c, d)",
            "delta": "tensor(d, a)", "beta": "-q^-1*tensor(b, c)",
            "betat": "tensor(d, c)", "deltat": "-q^-1*tensor(b, a)",
        },
        "c_antipode": {
            "alpha": "delta", "delta": "alpha", "gamma": "beta", "beta": "gamma",
            "alphat": "deltat", "deltat": "alphat", "gammat": "betat", "betat": "gammat",
        },
        "c_elements": {
            "A": "tensor(a, d) - q*tensor(b, c)", "B": "tensor(b, a) - q^-1*tensor(a, b)",
            "C": "tensor(c, d) - q*tensor(d, c)", "D": "tensor(d, a) - q^-1*tensor(c, b)",
        },
        "c_relations": _monopole_relations(),
        "c_errata": {
            "circle/betat-alphat": ["betat*alphat", f"tensor({_B0}, 1 - {_B0})",
                                    "printed with the tensor factors exchanged"],
            "circle/deltat-gammat": ["deltat*gammat", f"tensor(1 - {_B0}, {_B0})",
                                     "printed with the tensor factors exchanged"],
        },
        "c_coproducts": {
            "alpha": [["1", "alpha", "alpha"], ["1", "alphat", "gammat"]],
            "alphat": [["1", "alpha", "alphat"], ["1", "alphat", "gamma"]],
            "gamma": [["1", "gammat", "alphat"], ["1", "gamma", "gamma"]],
            "gammat": [["1", "gammat", "alpha"], ["1", "gamma", "gammat"]],
            "delta": [["1", "delta", "delta"], ["q^2", "betat", "deltat"]],
            "betat": [["1", "delta", "betat"], ["q^2", "betat", "beta"]],
            "beta": [["1", "deltat", "betat"], ["q^2", "beta", "beta"]],
            "deltat": [["1", "deltat", "delta"], ["q^2", "beta", "deltat"]],
        },
        "anchors": {"coproducts": "cop1ex", "counits": "cou1ex"},
        "c_counits": {
            "alpha": "1 + q*c*b", "gamma": "-q^-1*c*b", "alphat": "-q^-1*a*b", "gammat": "c*d",
            "delta": "1 + q^-1*c*b", "beta": "-q^-1*c*b", "betat": "q^-1*c*d", "deltat": "-q^-2*a*b",
        },
        "gauge_families": {
            "X": {
                "params": ["X"], "images": {"a": "X*a", "c": "X*c", "b": "X^-1*b", "d": "X^-1*d"},
                "inverse": {"a": "X^-1*a", "c": "X^-1*c", "b": "X*b", "d": "X*d"},
                "group_law": {"with": "Y", "gives": "X*Y"},
                "bisection": {
                    "alpha": "X*a*d", "gamma": "-q^-1*X*c*b", "alphat": "-q^-1*X*a*b", "gammat": "X*c*d",
                    "delta": "X^-1*d*a", "beta": "-q^-1*X^-1*b*c", "betat": "X^-1*d*c",
                    "deltat": "-q^-1*X^-1*b*a",
                },
            },
            "XY": {"params": ["X", "Y"], "images": {"a": "X*a", "c": "Y*c", "b": "X^-1*b", "d": "X^-1*d"},
                   "expect": "reject"},
        },
        "gauge_limitations": {
            "exhaustive": "the X-family is gauge and off-diagonal scalings fail, but Aut_H(A) = C^x is not "
                          "proved here: it rests on the centre of the Podles sphere being trivial",
        },
    }


def sl2_nff_spec() -> dict:
    """O(SL(2)) with the coaction of the additive group; B = C[c, d] (not faithfully flat)."""
    field = Field(1, ["h", "k"])
    hopf = {"name": "C[x]", "generators": ["x"], "rules": [],
            "coproduct": {"x": "tensor(1, x) + tensor(x, 1)"}, "counit": {"x": "0"}, "antipode": {"x": "-x"}}
    algebra = _rules_block(field, ["a", "d", "b", "c"], _sl2_rules("1"), {}, "O(SL(2))",
                           weights={"a": 2, "d": 2, "b": 1, "c": 1},
                           grading={"a": 1, "c": 1, "b": -1, "d": -1})
    return {
        "name": "sl2-nff",
        "description": "O(SL(2)) as a Hopf-Galois extension of C[c, d] by C[x], not faithfully flat",
        "cyclotomic_order": 1,
        "indeterminates": ["h", "k"],
        "aliases": {},
        "balanced_degree": 6,
        "hopf": hopf,
        "algebra": algebra,
        "coaction": {"a": "tensor(a, 1) + tensor(c, x)", "b": "tensor(b, 1) + tensor(d, x)",
                     "c": "tensor(c, 1)", "d": "tensor(d, 1)"},
        "translation": {"x": "tensor(a, b) - tensor(b, a)"},
        "coinvariant_generators": {"c": "c", "d": "d"},
        "c_generators": {
            "alpha": "tensor(a, d) - tensor(c, b)", "beta": "tensor(b, d) - tensor(d, b)",
            "gamma": "tensor(c, a) - tensor(a, c)", "delta": "tensor(d, a) - tensor(b, c)",
        },
        "c_antipode": {"alpha": "delta", "delta": "alpha", "beta": "-beta", "gamma": "-gamma"},
        "c_relations": _sl2_relations(),
        "c_coproducts": {
            "alpha": [["1", "alpha", "alpha"], ["1", "gamma", "beta"]],
            "delta": [["1", "delta", "delta"], ["1", "beta", "gamma"]],
            "beta": [["1", "beta", "alpha"], ["1", "delta", "beta"]],
            "gamma": [["1", "gamma", "delta"], ["1", "alpha", "gamma"]],
        },
        "c_counits": {"alpha": "1", "delta": "1", "beta": "0", "gamma": "0"},
        "anchors": {"coproducts": "copr2ex", "counits": "cou2ex", "antipode": "anti2ex"},
        "gauge_families": {
            "h": {
                "params": ["h"], "images": {"a": "a + h*c", "b": "b + h*d", "c": "c", "d": "d"},
                "inverse": {"a": "a - h*c", "b": "b - h*d", "c": "c", "d": "d"},
                "group_law": {"with": "k", "gives": "h + k"},
                "bisection": {"alpha": "1 + h*c*d", "beta": "h*d^2", "gamma": "-h*c^2", "delta": "1 - h*d*c"},
            },
        },
        "gauge_lemmas": {"lecb": ["a", "b"]},
        "coinvariant_dimensions": [1, 2, 3, 4, 5],
    }


def _group_elements(orders):
    return list(itertools.product(*[range(n) for n in orders]))


def _gadd(orders, g, h):
    return tuple((a + b) % n for a, b, n in zip(g, h, orders))


def _gneg(orders, g):
    return tuple((-a) % n for a, n in zip(g, orders))


def _gkey(g):
    return ",".join(str(x) for x in g)


def cocycle_table(orders, kind: str = "trivial") -> dict:
    """A normalized 2-cocycle on a product of cyclic groups, as 'g|h' -> value string."""
    els = _group_elements(orders)
    table = {}
    for g in els:
        for h in els:
            if kind == "trivial":
                v = "1"
            elif kind == "klein":
                if len(orders) != 2:
                    raise CatalogError("the klein cocycle needs two factors")
                v = "-1" if (g[1] * h[0]) % 2 else "1"
            else:
                raise CatalogError(f"unknown cocycle {kind!r}")
            table[f"{_gkey(g)}|{_gkey(h)}"] = v
    return table


def group_spec(orders=(2, 2), cocycle="klein", order: int = 1) -> dict:
    """Cocycle-twisted group algebra C_λ[G] as a Galois object over C[G]."""
    orders = [int(n) for n in orders]
    field = Field(order)
    table = cocycle if isinstance(cocycle, dict) else cocycle_table(orders, cocycle)
    lam = {}
    for key, v in table.items():
        a, b = key.split("|")
        lam[(tuple(int(x) for x in a.split(",")), tuple(int(x) for x in b.split(",")))] = parse_scalar(field, v)
    bad = CocycledGroup(orders, table, field).cocycle_violations()
    if bad:
        raise CatalogError(f"2-cocycle condition fails at (g, h, k) = {bad[0]}")
    k = len(orders)
    e = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    zero = tuple(0 for _ in range(k))
    hg = [f"h{i + 1}" for i in range(k)]
    ug = [f"u{i + 1}" for i in range(k)]
    hrules, urules = {}, {}
    for i in range(k):
        hrules[" ".join([hg[i]] * orders[i])] = "1"
        c = field.one
        cur = e[i]
        for _ in range(orders[i] - 1):
            c = c * lam[(cur, e[i])]
            cur = _gadd(orders, cur, e[i])
        urules[" ".join([ug[i]] * orders[i])] = str(c)
        for j in range(i + 1, k):
            hrules[f"{hg[j]} {hg[i]}"] = f"{hg[i]}*{hg[j]}"
            ratio = lam[(e[j], e[i])] / lam[(e[i], e[j])]
            urules[f"{ug[j]} {ug[i]}"] = f"({ratio})*{ug[i]}*{ug[j]}"
    hopf = _rules_block(field, hg, hrules, {}, "C[G]")
    hopf.update({
        "coproduct": {h: f"tensor({h}, {h})" for h in hg},
        "counit": {h: "1" for h in hg},
        "antipode": {h: f"{h}^{orders[i] - 1}" for i, h in enumerate(hg)},
    })
    algebra = _rules_block(field, ug, urules, {}, "C_lambda[G]")
    # u_i⁻¹ = u_i^{n-1} / u_i^n
    translation = {}
    for i in range(k):
        translation[hg[i]] = f"tensor({ug[i]}^-1, {ug[i]})"
    return {
        "name": "group",
        "description": f"cocycle twisted group algebra of Z_{orders} as a Galois object over C[G]",
        "cyclotomic_order": order,
        "indeterminates": [],
        "aliases": {},
        "balanced_degree": 6,
        "hopf": hopf,
        "algebra": algebra,
        "coaction": {u: f"tensor({u}, {h})" for u, h in zip(ug, hg)},
        "translation": translation,
        "coinvariant_generators": {},
        "c_generators": {f"xi{i + 1}": f"tensor({u}, {u}^-1)" for i, u in enumerate(ug)},
        "c_iso": {h: f"xi{i + 1}" for i, h in enumerate(hg)},
        "group": {"orders": orders, "cocycle": {kk: str(v) for kk, v in table.items()}},
    }


BUILTINS = {
    "taft": taft_spec,
    "sweedler": sweedler_spec,
    "podles-monopole": monopole_spec,
    "sl2-nff": sl2_nff_spec,
    "group": group_spec,
    "self-galois": self_galois_spec,
}


def _is_number(text: str) -> bool:
    try:
        Fraction(text)
        return True
    except (ValueError, TypeError):
        return False


def list_entries() -> list[tuple[str, str]]:
    return [(n, BUILTINS[n]().get("description", "")) for n in BUILTINS]


def builtin_spec(name: str, params: dict | None = None) -> dict:
    if name not in BUILTINS:
        raise CatalogError(f"unknown catalog entry {name!r}; try one of {sorted(BUILTINS)}")
    params = dict(params or {})
    fn = BUILTINS[name]
    conv = {}
    for k, v in params.items():
        if k in ("N", "order"):
            conv[k] = int(v)
        elif k == "orders":
            conv[k] = [int(x) for x in str(v).replace("x", ",").split(",")]
        else:
            conv[k] = v
    try:
        return fn(**conv)
    except TypeError as e:
        raise CatalogError(f"bad parameters for {name}: {e}") from None


# building ------------------------------------------------------------------------------------
@dataclass
class Entry:
    name: str
    spec: dict
    field: Field
    aliases: dict
    H: Presentation
    hs: HopfStructure
    A: Presentation
    ca: ComoduleAlgebra
    ext: HopfGaloisExtension
    bialgebroid: EhresmannBialgebroid
    load_report: Report
    gauge_families: dict = dc_field(default_factory=dict)
    D: int = 6

    @property
    def c_generators(self) -> dict:
        return self.bialgebroid.generators

    def a(self, text: str):
        return self.A.element(text, self.aliases)

    def h(self, text: str):
        return self.H.element(text, self.aliases)

    def tensor(self, slots, text: str) -> Tensor:
        return parse_in(slots, text, self.aliases, self.field)


def _expr(slots, text, aliases, field):
    try:
        return parse_in(slots, str(text), aliases, field)
    except (ParseError, ValueError) as e:
        raise CatalogError(f"cannot parse {text!r}: {e}") from None


def build(spec: dict, D: int | None = None, check: bool = True) -> Entry:
    """Parse a spec and run the load checks; raises CatalogError on structural failure."""
    try:
        return _build(spec, D, check)
    except (MorphismError, ParseError, KeyError, ValueError) as e:
        if isinstance(e, CatalogError):
            raise
        raise CatalogError(f"{type(e).__name__}: {e}") from None


def _build(spec, D, check):
    name = spec.get("name", "entry")
    field = Field(int(spec.get("cyclotomic_order", 1)), spec.get("indeterminates", []))
    aliases = dict(spec.get("aliases", {}))
    D = int(D if D is not None else spec.get("balanced_degree", 6))
    rep = Report("load", name, D)

    hb = spec["hopf"]
    H = _presentation(field, hb, aliases)
    A = H if spec.get("algebra") == "hopf" else _presentation(field, spec["algebra"], aliases)
    for label, P in (("hopf", H), ("algebra", A)):
        conf = P.check_local_confluence()
        rep.add(f"load/confluence/{label}", "rewriting confluence", conf.confluent,
                [str(x) for x in conf.failures[:3]] if not conf.confluent else None)
        if check and not conf.confluent:
            raise CatalogError(f"{label} presentation is not confluent: {conf.failures[0]}")

    HH = (H, H)
    cop = {g: _expr(HH, e, aliases, field) for g, e in hb["coproduct"].items()}
    cou = {g: parse_scalar(field, str(e), aliases) for g, e in hb["counit"].items()}
    anti = {g: _expr((H,), e, aliases, field) for g, e in hb["antipode"].items()}
    hs = HopfStructure(H, cop, cou, anti, hb.get("name", ""))
    rep.add("load/hopf-structure", "structure maps respect relations", True)

    coaction_spec = spec["coaction"]
    if coaction_spec == "coproduct":
        coaction = {g: cop[g] for g in H.generators}
    else:
        coaction = {g: _expr((A, H), e, aliases, field) for g, e in coaction_spec.items()}
    ca = ComoduleAlgebra(A, hs, coaction, A.name)
    cv = ca.verify(2)
    rep.extend(cv)
    if check and not cv.ok:
        raise CatalogError(f"coaction fails comodule axioms: {cv.failures()[0].id}")

    tr_spec = spec["translation"]
    if tr_spec == "antipode":
        if A is not H:
            raise CatalogError("translation 'antipode' needs algebra = hopf")
        translation = {}
        for g in H.generators:
            d = hs.coproduct.image_word((H.index[g],))
            translation[g] = hs.antipode.on_slot(d, 0)
    else:
        translation = {g: _expr((A, A), e, aliases, field) for g, e in tr_spec.items()}
    bgens = {n: A.element(str(e), aliases) for n, e in spec.get("coinvariant_generators", {}).items()}
    ext = HopfGaloisExtension(ca, translation, bgens, D, name)
    for g, t in translation.items():
        ok = ext.canonical_map(t) == A.one().otimes(H.gen(g))
        rep.add(f"load/p7/{g}", "p7", ok, None if ok else [str(ext.canonical_map(t))])
        if check and not ok:
            raise CatalogError(f"translation map fails χ(τ({g})) = 1⊗{g}")
    for n, b in bgens.items():
        ok = ca.is_coinvariant(b)
        rep.add(f"load/coinvariant/{n}", "coinvariant subalgebra", ok)
        if check and not ok:
            raise CatalogError(f"coinvariant generator {n} is not coinvariant")

    cgens = {n: _expr((A, A), e, aliases, field) for n, e in spec.get("c_generators", {}).items()}
    celems = {n: _expr((A, A), e, aliases, field) for n, e in spec.get("c_elements", {}).items()}
    bia = EhresmannBialgebroid(ext, cgens, spec.get("c_antipode") or None, None, aliases, name, celems)
    for n, x in cgens.items():
        ok = bia.satisfies_ec2(x)
        rep.add(f"load/c-member/{n}", "ec2", ok)
        if check and not ok:
            raise CatalogError(f"C-generator {n} is not coinvariant for the diagonal coaction")

    families = {}
    for fam, data in spec.get("gauge_families", {}).items():
        families[fam] = dict(data)
        families[fam]["params"] = list(data.get("params", []))
        families[fam]["images"] = {g: A.element(str(e), aliases) for g, e in data["images"].items()}
    return Entry(name, spec, field, aliases, H, hs, A, ca, ext, bia, rep, families, D)


def load(name_or_path: str, params: dict | None = None, D: int | None = None) -> Entry:
    """A built-in entry by name, or a JSON presentation file by path."""
    if name_or_path in BUILTINS:
        return build(builtin_spec(name_or_path, params), D)
    try:
        with open(name_or_path, encoding="utf-8") as fh:
            spec = json.load(fh)
    except FileNotFoundError:
        raise CatalogError(f"unknown catalog entry or file {name_or_path!r}") from None
    except json.JSONDecodeError as e:
        raise CatalogError(f"{name_or_path}: invalid JSON ({e})") from None
    if params:
        raise CatalogError("parameters apply only to built-in entries")
    return build(spec, D)


def export(name: str, params: dict | None = None) -> str:
    return json.dumps(builtin_spec(name, params), indent=2, ensure_ascii=False)


def with_indeterminates(entry: Entry, names) -> Entry:
    """Rebuild ``entry`` over a field with extra indeterminates (fresh symbolic parameters)."""
    spec = dict(entry.spec)
    known = list(spec.get("indeterminates", []))
    spec["indeterminates"] = known + [n for n in names if n not in known]
    return build(spec, entry.D, check=False)
