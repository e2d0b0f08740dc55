"""Verification suites per catalog entry, as used by the command line.

Each suite returns a :class:`Report`; ``run`` dispatches by suite name and
``all`` concatenates every suite.  What a suite checks is driven by the data
stored in the entry's spec (relations, coproduct tables, gauge families...).
"""

from __future__ import annotations

import random

from . import catalog
from .crossed import (
    ad_of_bisection,
    gauge_family_bisections,
    t2_extended_report,
    taft_crossed_report,
    verify_crossed_module,
)
from .gauge import (
    Bisection,
    GaugeError,
    bisection_convolution,
    bisection_from_gauge,
    bisection_inverse,
    bisection_round_trip,
    check_inverse,
    counit_bisection,
    determinant,
    family_member,
    gauge_compose,
    gauge_from_bisection,
    gauge_from_images,
    gauge_from_matrix,
    gauge_inverse,
    in_family,
    lemma_lecb,
    parameter_rank,
    restrict_to_algebra_maps,
    solve_extended_gauge,
    verify_bisection,
    verify_gauge,
)
from .groups import group_report, self_galois_report
from .hopf import verify_hopf_axioms
from .parse import parse_scalar
from .report import Report

SUITES = ("kernel", "hopf", "galois", "bialgebroid", "antipode", "gauge", "crossed")
DEFAULT_DEGREE = 6
FUZZ_SAMPLES = 100


class SuiteError(ValueError):
    pass


def _hdeg(entry, degree):
    # H-words for the infinite examples: short words already exercise every generator pair
    return 2 if entry.H.finite_basis() is None else degree


# kernel ------------------------------------------------------------------------------------
def _random_element(P, words, rng, field):
    acc = P.zero()
    for _ in range(rng.randint(1, 3)):
        w = rng.choice(words)
        acc = acc + P.from_word(w, field(rng.randint(-3, 3)))
    return acc


def kernel_suite(entry, degree=DEFAULT_DEGREE, seed: int = 0) -> Report:
    rep = Report("kernel", entry.name, degree)
    presentations = [("hopf", entry.H)]
    if entry.A is not entry.H:
        presentations.append(("algebra", entry.A))
    for label, P in presentations:
        conf = P.check_local_confluence()
        rep.add(f"kernel/confluence/{label}", "rewriting confluence", conf.confluent,
                [f"{conf.checked} overlaps resolved"] if conf.confluent else
                [str(x) for x in conf.failures[:3]])
        rng = random.Random(f"{entry.name}/{label}/{seed}")
        words = P.finite_basis() or P.basis_upto(3)
        bad = []
        for k in range(FUZZ_SAMPLES):
            x, y, z = (_random_element(P, words, rng, entry.field) for _ in range(3))
            if (x * y) * z != x * (y * z):
                bad.append(f"assoc #{k}: {x} | {y} | {z}")
            if x * (y + z) != x * y + x * z or (y + z) * x != y * x + z * x:
                bad.append(f"distrib #{k}: {x} | {y} | {z}")
        rep.add(f"kernel/fuzz/{label}", "associativity and distributivity",
                not bad, bad[:3] or [f"{FUZZ_SAMPLES} samples, seed {seed}"])
    expected = entry.spec.get("coinvariant_dimensions")
    if expected:
        for d, want in enumerate(expected):
            got = sum(1 for _ in entry.ca.coinvariants(d))
            rep.add(f"kernel/coinvariants/degree-{d}", "coinvariant dimension", got == want,
                    [f"dim {got}, expected {want}"])
    return rep


# hopf / galois / bialgebroid / antipode --------------------------------------------------------
def hopf_suite(entry, degree=DEFAULT_DEGREE) -> Report:
    rep = verify_hopf_axioms(entry.hs, degree)
    rep.entry = entry.name
    return rep


def galois_suite(entry, degree=DEFAULT_DEGREE) -> Report:
    rep = Report("galois", entry.name, degree)
    for c in entry.load_report.checks:
        if c.id.startswith("load/p7/"):
            rep.add("galois/p7-generator/" + c.id.split("/")[-1], c.anchor, c.status, c.witness)
    h = _hdeg(entry, degree)
    rep.extend(entry.ext.verify_translation_properties(h))
    rep.extend(entry.ext.verify_galois(h))
    return rep


def bialgebroid_suite(entry, degree=DEFAULT_DEGREE) -> Report:
    bia, spec = entry.bialgebroid, entry.spec
    rep = Report("bialgebroid", entry.name, degree)
    if not bia.generators:
        rep.add("bialgebroid/generators", "C(A,H)", "skipped", ["no C-generators listed for this entry"])
        return rep
    if spec.get("c_relations"):
        bia.verify_relations(spec["c_relations"], rep)
    if spec.get("c_errata"):
        bia.verify_errata(spec["c_errata"], rep)
    anchors = spec.get("anchors", {})
    if spec.get("c_coproducts"):
        bia.verify_coproducts(spec["c_coproducts"], anchors.get("coproducts", "coproduct table"), rep)
    if spec.get("c_counits"):
        bia.verify_counits(spec["c_counits"], anchors.get("counits", "counit table"), rep)
    rep.extend(bia.verify_axioms())
    if spec.get("c_iso") and entry.A.finite_basis() is not None:
        from .bialgebroid import c_iso_report

        rep.extend(c_iso_report(bia, spec["c_iso"], "Phi"), "bialgebroid/")
    return rep


def antipode_suite(entry, degree=DEFAULT_DEGREE) -> Report:
    bia = entry.bialgebroid
    rep = Report("antipode", entry.name, degree)
    if bia.antipode:
        sub = bia.verify_antipode(relations=entry.spec.get("c_relations"))
        label = entry.spec.get("anchors", {}).get("antipode")
        for c in sub.checks:
            rep.add(c.id, f"{c.anchor}, {label}" if label else c.anchor, c.status, c.witness, c.wall_time)
    elif entry.ext.ground_base and entry.spec.get("c_iso") and entry.A.finite_basis() is not None:
        from .bialgebroid import c_iso_report

        iso = c_iso_report(bia, entry.spec["c_iso"], "Phi")
        for c in iso.checks:
            if c.id.endswith("/antipode"):
                rep.add("antipode/galois-object", c.anchor, c.status, c.witness)
    else:
        rep.add("antipode/supplied", "hopbroid1", "skipped", ["no antipode for this entry"])
    return rep


# gauge -----------------------------------------------------------------------------------------
def _family_checks(entry, fam: str, data: dict, rep: Report):
    ext, bia = entry.ext, entry.bialgebroid
    F = family_member(entry, fam)
    p = f"gauge/{fam}"
    if data.get("expect") == "reject":
        sub = verify_gauge(F)
        failed = [c.id for c in sub.failures()]
        rep.add(f"{p}/rejected", "qgt", bool(failed), failed[:4] or ["unexpectedly verified"])
        return
    verify_gauge(F, rep)
    Finv = gauge_inverse(F)
    check_inverse(F, Finv, rep)
    if data.get("inverse"):
        want = gauge_from_images(ext, {g: entry.a(v) for g, v in data["inverse"].items()})
        rep.add(f"{p}/inverse/expected", "inv-F2", Finv.equals(want), [str(Finv)])
    for (u, v) in [tuple(x) for x in entry.spec.get("gauge_lemmas", {}).values()]:
        ok, x = lemma_lecb(F, u, v)
        rep.add(f"{p}/lecb/{u}{v}", "lecb", ok, [f"F({u}){v} - F({v}){u} = {x}"])
    law = data.get("group_law")
    (param,) = data["params"]
    G = None
    if law:
        G = family_member(entry, fam, {param: law["with"]}, f"{fam}[{law['with']}]")
        FG = gauge_compose(F, G)
        want = family_member(entry, fam, {param: law["gives"]})
        rep.add(f"{p}/compose", "group law", FG.equals(want), [f"{FG}", f"expected {fam}[{law['gives']}]"])
        verify_gauge(FG, rep, prefix=f"{p}/compose")
        ident = gauge_compose(F, Finv)
        rep.add(f"{p}/compose/inverse", "group law", all(ident.word(w) == F.A.from_word(w) for w in F.keys()))

    sigma = bisection_from_gauge(F, bia, f"sigma_{fam}")
    verify_bisection(sigma, rep, prefix=f"{p}/bisection")
    if data.get("bisection"):
        bad = []
        for n, expr in sorted(data["bisection"].items()):
            got, want = sigma(n), entry.a(expr)
            if got != want:
                bad.append(f"{n}: {got} != {want}")
        rep.add(f"{p}/bisection/values", "gtob", not bad, bad or [f"{len(data['bisection'])} generators"])
        explicit = Bisection(bia, values=dict(data["bisection"]), name=f"tau_{fam}")
        bisection_round_trip(bia, F=F, sigma=explicit, report=rep, prefix=p)
    else:
        bisection_round_trip(bia, F=F, report=rep, prefix=p)
    eps = counit_bisection(bia)
    gens = sorted(bia.generators)
    left, right = bisection_convolution(eps, sigma), bisection_convolution(sigma, eps)
    bad = [n for n in gens if left(n) != sigma(n) or right(n) != sigma(n)]
    rep.add(f"{p}/convolution/unit", "mulbis1", not bad, bad)
    inv = bisection_inverse(sigma)
    a, b = bisection_convolution(sigma, inv), bisection_convolution(inv, sigma)
    bad = [n for n in gens if a(n) != eps(n) or b(n) != eps(n)]
    rep.add(f"{p}/convolution/inverse", "invobis1", not bad, bad)
    if G is not None:
        # σ_G ∗ σ_F = σ_{F∘G}
        sG = bisection_from_gauge(G, bia)
        conv = bisection_convolution(sG, sigma)
        comp = bisection_from_gauge(gauge_compose(F, G), bia)
        bad = [n for n in gens if conv(n) != comp(n)]
        rep.add(f"{p}/convolution/homomorphism", "mulbis1", not bad, bad)
        back = gauge_from_bisection(conv)
        rep.add(f"{p}/convolution/gauge", "btog", back.equals(gauge_compose(F, G)))


def _block_matrix(entry, data):
    elements, rows = [], []
    offset = 0
    total = sum(len(b["elements"]) for b in data["blocks"])
    for b in data["blocks"]:
        n = len(b["elements"])
        elements.extend(b["elements"])
        for r in b["rows"]:
            rows.append(["0"] * offset + list(r) + ["0"] * (total - offset - n))
        offset += n
    return elements, rows


def _extended_checks(entry, rep: Report):
    ext = entry.ext
    fam = solve_extended_gauge(ext)
    data = entry.spec.get("extended_gauge") or {}
    want = data.get("dimension")
    rep.add("gauge/extended/dimension", "autverT", want is None or fam.dimension == want,
            [f"{fam.dimension} free parameters" + (f", expected {want}" if want else "")])
    names = fam.entry_names()
    e2 = catalog.with_indeterminates(entry, names)
    F = fam.member(e2.ext, names)
    verify_gauge(F, rep, prefix="gauge/extended")
    rep.add("gauge/extended/rank", "autverT", parameter_rank(F, names) == fam.dimension)
    rep.add("gauge/extended/invertible", "autverT", bool(determinant(F)), [f"det = {determinant(F)}"])
    G, syms, count = restrict_to_algebra_maps(F, names)
    expect = entry.spec.get("gauge_algebra_maps")
    rep.add("gauge/extended/algebra-maps", "Aut_H(A)", expect is None or count == expect,
            [f"{count} algebra maps", str(list(G.exprs))])
    if data.get("blocks"):
        e3 = catalog.with_indeterminates(entry, data["params"])
        elements, rows = _block_matrix(e3, data)
        M = gauge_from_matrix(e3.ext, [e3.a(x) for x in elements],
                              [[parse_scalar(e3.field, r, e3.aliases) for r in row] for row in rows], "printed")
        bad = in_family(M)
        rep.add("gauge/extended/printed", "autverT", not bad, [f"{len(bad)} violated equations"])
        rep.add("gauge/extended/printed-rank", "autverT", parameter_rank(M, data["params"]) == fam.dimension,
                [f"rank {parameter_rank(M, data['params'])}"])
        rep.add("gauge/extended/printed-det", "autverT", bool(determinant(M)), [f"det = {determinant(M)}"])


def _character_bisections(entry, rep: Report):
    """Characters of H give bisections of C ≅ H and algebra-map gauge transformations of A."""
    from .crossed import HopfTransport, bisection_of_functional
    from .hopf import enumerate_characters

    bia = entry.bialgebroid
    psi = HopfTransport(bia, entry.spec["c_iso"])
    chars = enumerate_characters(entry.H)
    sigmas = [bisection_of_functional(psi, phi, f"phi{k}") for k, phi in enumerate(chars)]
    bad = []
    for s in sigmas:
        sub = verify_gauge(gauge_from_bisection(s))
        if not sub.ok:
            bad.append(s.name)
    rep.add("gauge/characters/gauge", "btog", not bad, bad or [f"{len(sigmas)} characters"])
    bad = []
    for s in sigmas:
        for t in sigmas:
            st = bisection_convolution(s, t)
            if not any(all(st(n) == u(n) for n in bia.generators) for u in sigmas):
                bad.append(f"{s.name}*{t.name}")
    rep.add("gauge/characters/closed", "mulbis1", not bad, bad[:3])


def gauge_suite(entry, degree=DEFAULT_DEGREE) -> Report:
    rep = Report("gauge", entry.name, degree)
    if entry.spec.get("group"):
        group_report(entry, rep)
    if entry.name == "self-galois":
        self_galois_report(entry, rep)
    for fam, data in sorted(entry.gauge_families.items()):
        _family_checks(entry, fam, data, rep)
    for key, note in sorted(entry.spec.get("gauge_limitations", {}).items()):
        rep.add(f"gauge/limitation/{key}", "Aut_H(A)", "limitation", [note])
    if entry.A.finite_basis() is not None:
        _extended_checks(entry, rep)
        if entry.spec.get("c_iso") and entry.bialgebroid.generators:
            _character_bisections(entry, rep)
    if not rep.checks:
        rep.add("gauge/none", "gauge", "skipped", ["no gauge data for this entry"])
    return rep


# crossed -----------------------------------------------------------------------------------------
def crossed_suite(entry, degree=DEFAULT_DEGREE) -> Report:
    rep = Report("crossed", entry.name, degree)
    if entry.name in ("taft", "sweedler"):
        taft_crossed_report(entry, report=rep)
        if entry.field.order == 2:
            t2_extended_report(rep)
        return rep
    fams = [f for f, d in sorted(entry.gauge_families.items())
            if d.get("expect") != "reject" and d.get("group_law")]
    if not fams and entry.spec.get("c_iso") and entry.A.finite_basis() is not None:
        # Galois object: characters of H as bisections, Ad of each as the automorphisms
        from .crossed import HopfTransport, bisection_of_functional
        from .hopf import enumerate_characters

        psi = HopfTransport(entry.bialgebroid, entry.spec["c_iso"])
        sigmas = [bisection_of_functional(psi, phi, f"phi{k}")
                  for k, phi in enumerate(enumerate_characters(entry.H))]
        verify_crossed_module(sigmas, [ad_of_bisection(s) for s in sigmas], rep, "crossed/characters")
        return rep
    if not fams:
        rep.add("crossed/none", "crossed module", "skipped", ["no one-parameter gauge family"])
        return rep
    for fam in fams:
        data = entry.gauge_families[fam]
        names = [data["params"][0], data["group_law"]["with"]]
        sigma, tau = gauge_family_bisections(entry, fam, names)
        verify_crossed_module([sigma, tau], [ad_of_bisection(tau)], rep, f"crossed/{fam}")
        # abelian family: Ad_τ ▷ σ = σ
        from .crossed import act_on_bisection

        acted = act_on_bisection(ad_of_bisection(tau), sigma)
        bad = [n for n in sorted(entry.bialgebroid.generators) if acted(n) != sigma(n)]
        rep.add(f"crossed/{fam}/abelian", "crossed module (2)", not bad, bad)
    return rep


_RUNNERS = {
    "kernel": kernel_suite,
    "hopf": hopf_suite,
    "galois": galois_suite,
    "bialgebroid": bialgebroid_suite,
    "antipode": antipode_suite,
    "gauge": gauge_suite,
    "crossed": crossed_suite,
}


def run(entry, suite: str, degree: int = DEFAULT_DEGREE) -> Report:
    if suite == "all":
        rep = Report("all", entry.name, degree)
        for s in SUITES:
            rep.extend(_RUNNERS[s](entry, degree))
        return rep
    if suite not in _RUNNERS:
        raise SuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    try:
        return _RUNNERS[suite](entry, degree)
    except GaugeError as e:
        rep = Report(suite, entry.name, degree)
        rep.add(f"{suite}/error", suite, False, [str(e)])
        return rep
