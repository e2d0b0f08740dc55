"""The crossed module (bisections, bialgebroid automorphisms, Ad, ▷).

Two layers: bisections of C(A,H) with automorphisms of C given as maps on
C-elements, and the Hopf-algebra picture for Galois objects where bisections
are (extended) characters and Ad is the co-inner map coinn.
"""

from __future__ import annotations

from .gauge import (
    Bisection,
    GaugeError,
    bisection_convolution,
    bisection_inverse,
    gauge_from_bisection,
    linear_from_rows,
    rows_of,
)
from .hopf import LINEAR, Functional, Morphism, coinn, convolution, convolution_inverse
from .linalg import inverse, matmul
from .report import Report
from .tensor import AlgebraElement, Tensor


class CAutomorphism:
    """A map Φ on C(A,H) (applied to arity-2 tensors) with its base map φ on B."""

    def __init__(self, bia, fn, b_map=None, b_inverse=None, name="Phi", inverse_fn=None):
        self.bia = bia
        self.fn = fn
        self.b_map = b_map or (lambda b: b)
        self.b_inverse = b_inverse or (lambda b: b)
        self.name = name
        self.inverse_fn = inverse_fn

    def __call__(self, x: Tensor) -> Tensor:
        return self.fn(x)

    def inverse(self) -> "CAutomorphism":
        if self.inverse_fn is None:
            raise GaugeError(f"no inverse known for {self.name}")
        return CAutomorphism(self.bia, self.inverse_fn, self.b_inverse, self.b_map, f"{self.name}^-1", self.fn)

    def then(self, other: "CAutomorphism") -> "CAutomorphism":
        """other ∘ self."""
        inv = None
        if self.inverse_fn is not None and other.inverse_fn is not None:
            inv = lambda x: self.inverse_fn(other.inverse_fn(x))  # noqa: E731
        return CAutomorphism(self.bia, lambda x: other.fn(self.fn(x)),
                             lambda b: other.b_map(self.b_map(b)), lambda b: self.b_inverse(other.b_inverse(b)),
                             f"{other.name}∘{self.name}", inv)


def ad_of_bisection(sigma: Bisection) -> CAutomorphism:
    """Ad_σ(a⊗ã) = F_σ(a)⊗F_σ(ã)."""
    bia, A = sigma.bia, sigma.A
    F = sigma.induced_gauge
    Finv = bisection_inverse(sigma).induced_gauge if not sigma.extended else None

    def on(G):
        return lambda x: x.map_slot(0, G.map.image_word, (A,)).map_slot(1, G.map.image_word, (A,))

    return CAutomorphism(bia, on(F), name=f"Ad_{sigma.name}", inverse_fn=on(Finv) if Finv else None)


def ad_alternative(sigma: Bisection, x: Tensor) -> Tensor:
    """Ad_σ(X) = σ(X₁) ▷ X₂ ◁ σ⁻¹(X₃), evaluated on a raw iterated coproduct."""
    bia, A = sigma.bia, sigma.A
    ext = bia.ext
    F = sigma.induced_gauge
    inv = bisection_inverse(sigma)
    # a⊗ã ↦ a₀ ⊗ τ(a₁) ⊗ τ(a₂) ⊗ ã
    y = x.map_slot(0, ext.ca.delta_word, (A, bia.H)).map_slot(0, ext.ca.delta_word, (A, bia.H))
    y = y.map_slot(1, ext.tau_word, (A, A)).map_slot(3, ext.tau_word, (A, A))
    out = Tensor.zero(bia.slots, bia.field)
    for (a0, t1, t2, u1, u2, at), c in y.terms.items():
        left = F.word(a0) * A.from_word(t1) * A.from_word(t2)
        right = A.from_word(u1) * inv.formula(u2, at)
        out = out + left.otimes(right).scale(c)
    return out


def act_on_bisection(Phi: CAutomorphism, sigma: Bisection, name: str | None = None) -> Bisection:
    """Φ▷σ = φ⁻¹∘σ∘Φ, as an explicit bisection on the C-generators."""
    bia = sigma.bia
    values = {}
    for n, X in bia.generators.items():
        v = sigma(Phi(X))
        values[n] = AlgebraElement(bia.A, dict(Phi.b_inverse(v).terms))
    return Bisection(bia, values=values, name=name or f"{Phi.name}▷{sigma.name}", extended=sigma.extended)


def _same_on_generators(bia, f, g) -> list[str]:
    return [n for n, X in sorted(bia.generators.items()) if f(X) != g(X)]


def verify_crossed_module(bisections: list, automorphisms: list, report: Report | None = None,
                          prefix: str = "crossed") -> Report:
    """Both axioms on C-generators for every listed pair, plus the Ad laws."""
    if not bisections:
        raise GaugeError("no bisections given")
    bia = bisections[0].bia
    rep = report or Report("crossed", bia.name, bia.ext.D)
    ads = {s.name: ad_of_bisection(s) for s in bisections}
    for s in bisections:
        Ad = ads[s.name]
        bad = _same_on_generators(bia, Ad, lambda X, s=s: ad_alternative(s, X))
        rep.add(f"{prefix}/ad/altad/{s.name}", "altad", not bad, bad)
        bad = []
        for bn, b in bia._b_gens():
            if Ad(bia.s(b)) != bia.s(b) or Ad(bia.t(b)) != bia.t(b):
                bad.append(bn)
            if AlgebraElement(bia.A, dict(bia.counit(Ad(bia.s(b))).terms)) != b:
                bad.append(bn + "/eps")
        rep.add(f"{prefix}/ad/vertical/{s.name}", "Ad", not bad, bad)
        members = [n for n, X in sorted(bia.generators.items()) if not bia.satisfies_ec2(Ad(X))]
        rep.add(f"{prefix}/ad/member/{s.name}", "Ad", not members, members)
        inv = ad_of_bisection(bisection_inverse(s))
        bad = _same_on_generators(bia, lambda X: inv(Ad(X)), lambda X: X)
        rep.add(f"{prefix}/ad/inverse/{s.name}", "Ad", not bad, bad)
    for s in bisections:
        for t in bisections:
            # Ad_σ ∘ Ad_τ = Ad_{τ∗σ}
            lhs = lambda X, s=s, t=t: ads[s.name](ads[t.name](X))  # noqa: E731
            rhs = ad_of_bisection(bisection_convolution(t, s))
            bad = _same_on_generators(bia, lhs, rhs)
            rep.add(f"{prefix}/ad/morphism/{s.name}/{t.name}", "Ad", not bad, bad)
            # axiom (2): Ad_τ ▷ σ = τ∗σ∗τ⁻¹
            left = act_on_bisection(ads[t.name], s)
            right = bisection_convolution(bisection_convolution(t, s), bisection_inverse(t))
            bad = [n for n, X in sorted(bia.generators.items()) if left(n) != right(X)]
            rep.add(f"{prefix}/axiom2/{t.name}/{s.name}", "crossed module (2)", not bad, bad)
    for Phi in automorphisms:
        Phinv = Phi.inverse()
        for s in bisections:
            acted = act_on_bisection(Phi, s)
            lhs = ad_of_bisection(acted)
            bad = _same_on_generators(bia, lhs, lambda X: Phinv(ads[s.name](Phi(X))))
            rep.add(f"{prefix}/axiom1/{Phi.name}/{s.name}", "crossed module (1)", not bad, bad)
            back = act_on_bisection(Phinv, acted)
            bad = [n for n in sorted(bia.generators) if back(n) != s(n)]
            rep.add(f"{prefix}/action/inverse/{Phi.name}/{s.name}", "aaobs", not bad, bad)
            for t in bisections:
                l = act_on_bisection(Phi, bisection_convolution(t, s))
                r = bisection_convolution(act_on_bisection(Phi, t), acted)
                bad = [n for n, X in sorted(bia.generators.items()) if l(n) != r(X)]
                rep.add(f"{prefix}/action/product/{Phi.name}/{t.name}/{s.name}", "aaobs", not bad, bad)
    return rep


# Galois objects: C(A,H) ≅ H --------------------------------------------------------------------
class HopfTransport:
    """The isomorphism Ψ: H → C(A,H) given on generators, with its inverse on C."""

    def __init__(self, bia, images: dict):
        self.bia = bia
        self.H = bia.H
        self.imgs = {h: bia.evaluate(e) for h, e in images.items()}
        self.basis = list(self.H.finite_basis())
        self._word = {(): bia.one()}
        self.cols = [dict(self.word(w).terms) for w in self.basis]

    def word(self, w) -> Tensor:
        w = tuple(w)
        if w not in self._word:
            self._word[w] = self.bia.product(self.word(w[:-1]), self.imgs[self.H.generators[w[-1]]])
        return self._word[w]

    def __call__(self, h: AlgebraElement) -> Tensor:
        acc = Tensor.zero(self.bia.slots, self.bia.field)
        for (w,), c in h.terms.items():
            acc = acc + self.word(w).scale(c)
        return acc

    def inverse(self, x: Tensor) -> AlgebraElement:
        from .linalg import solve

        coords = solve(self.cols, dict(x.terms), self.bia.field)
        if coords is None:
            raise GaugeError(f"{x} is not in the image of H")
        return AlgebraElement(self.H, {(w,): c for w, c in zip(self.basis, coords) if c})


def bisection_of_functional(psi: HopfTransport, phi: Functional, name: str) -> Bisection:
    """σ = φ∘Ψ⁻¹ on the C-generators (B is the ground field)."""
    bia = psi.bia
    A = bia.A
    values = {n: A.one().scale(phi(psi.inverse(X))) for n, X in bia.generators.items()}
    return Bisection(bia, values=values, name=name)


def automorphism_of_hopf_map(psi: HopfTransport, m: Morphism, m_inv: Morphism, name: str) -> CAutomorphism:
    """Ψ∘m∘Ψ⁻¹ as a map on C."""

    def fwd(x):
        return psi(AlgebraElement(psi.H, dict(m(psi.inverse(x)).terms)))

    def back(x):
        return psi(AlgebraElement(psi.H, dict(m_inv(psi.inverse(x)).terms)))

    return CAutomorphism(psi.bia, fwd, name=name, inverse_fn=back)


def taft_crossed_report(entry, r_name: str = "r", report: Report | None = None) -> Report:
    """(Char(T_N), Aut(T_N)) with a symbolic automorphism x ↦ r x: trivial action, Ad injective into ℂ^×."""
    from .catalog import with_indeterminates
    from .hopf import enumerate_characters

    e = with_indeterminates(entry, [r_name])
    bia, hs, H = e.bialgebroid, e.hs, e.H
    rep = report or Report("crossed", entry.name, entry.D)
    N = e.field.order
    psi = HopfTransport(bia, e.spec["c_iso"])
    r = e.field.gen(r_name)
    gi, xi = H.index["g"], H.index["x"]
    Fr = Morphism(H, (H,), {"g": H.gen("g"), "x": H.gen("x").scale(r)}, name="F_r")
    Fr_inv = Morphism(H, (H,), {"g": H.gen("g"), "x": H.gen("x").scale(r.inverse())}, name="F_r^-1")
    hopf_ok = all(hs.coproduct.on_slot(Fr.image_word((i,)), 0) == _fxf(Fr, hs.coproduct.image_word((i,)), H)
                  for i in (gi, xi))
    rep.add("crossed/taft/F_r/hopf-map", "Aut(T_N)", hopf_ok)
    Phi = automorphism_of_hopf_map(psi, Fr, Fr_inv, "F_r")
    chars = enumerate_characters(H)
    rep.add("crossed/taft/characters", "Char(T_N)", len(chars) == N, [f"{len(chars)} characters"])
    sigmas = []
    z = e.field.zeta
    for phi in chars:
        val = phi.value_word((gi,))
        k = next(k for k in range(N) if z**k == val)
        sigmas.append((k, bisection_of_functional(psi, phi, f"phi{k}"), phi))
    for k, s, phi in sigmas:
        Ad = ad_of_bisection(s)
        # Ad_φ = coinn(φ) transported; and Ad_φ = F_{j(k)} with j(k) = ζ^{-k}
        cn = coinn(phi, hs)
        bad = [H.word_str(w) for w in psi.basis
               if Ad(psi.word(w)) != psi(AlgebraElement(H, dict(cn.image_word(w).terms)))]
        rep.add(f"crossed/taft/ad-coinn/phi{k}", "autohopf1", not bad, bad)
        j = z ** (-k)
        Fj = Morphism(H, (H,), {"g": H.gen("g"), "x": H.gen("x").scale(j)}, name="F_j")
        bad = [H.word_str(w) for w in psi.basis
               if Ad(psi.word(w)) != psi(AlgebraElement(H, dict(Fj.image_word(w).terms)))]
        rep.add(f"crossed/taft/j/phi{k}", "j(r)", not bad, bad + [f"j = {j}"])
        acted = act_on_bisection(Phi, s)
        bad = [n for n in sorted(bia.generators) if acted(n) != s(n)]
        rep.add(f"crossed/taft/trivial-action/phi{k}", "trivial action", not bad, bad)
    # j injective
    imgs = [z ** (-k) for k, _, _ in sigmas]
    rep.add("crossed/taft/j-injective", "j(r)", len(set(map(str, imgs))) == len(imgs))
    verify_crossed_module([s for _, s, _ in sigmas], [Phi], rep, "crossed/taft")
    return rep


def _fxf(m: Morphism, t: Tensor, H) -> Tensor:
    return t.map_slot(0, m.image_word, (H,)).map_slot(1, m.image_word, (H,))


# extended T_2 ----------------------------------------------------------------------------------------
_T2_ELEMENTS = ["1", "x*g", "g", "x"]


def t2_extended_report(report: Report | None = None) -> Report:
    """Extended crossed module for T_2 with symbolic σ, τ and Φ."""
    from .catalog import build, taft_spec
    from .parse import parse_scalar

    names = ["sg", "sx", "sxg", "tg", "tx", "txg", "a1", "a2", "b", "c"]
    spec = taft_spec(2, "s")
    spec["indeterminates"] = ["s"] + names
    e = build(spec, check=False)
    H, hs, f = e.H, e.hs, e.field
    rep = report or Report("crossed", "taft", e.D)
    els = [H.element(x, e.aliases) for x in _T2_ELEMENTS]

    def P(text):
        return parse_scalar(f, str(text), e.aliases)

    def functional(g, x, xg, name):
        vals = {}
        for el, v in zip(els, ["1", xg, g, x]):
            # el is ± a basis word
            (w,), c = next(iter(el.terms.items()))
            vals[w] = P(v) / c
        return Functional(H, values=vals, name=name)

    sigma = functional("sg", "sx", "sxg", "sigma")
    tau = functional("tg", "tx", "txg", "tau")
    rows_phi = [[1, 0, 0, 0], ["b", "a1", "-b", 0], [0, 0, 1, 0], ["-c", 0, "c", "a2"]]
    rows_phi = [[P(v) for v in r] for r in rows_phi]
    Phi = linear_from_rows(H, els, rows_phi, "Phi")
    # Φ is a unital coalgebra map
    bad = [H.word_str(w) for w in H.finite_basis()
           if hs.coproduct(_as_elem(H, Phi.image_word(w))) != _fxf(Phi, hs.coproduct.image_word(w), H)]
    rep.add("crossed/ext/Phi/coalgebra", "authopfT", not bad, bad)
    bad = [H.word_str(w) for w in H.finite_basis()
           if hs.counit(_as_elem(H, Phi.image_word(w))) != hs.counit.image_word(w)]
    rep.add("crossed/ext/Phi/counit", "authopfT", not bad, bad)
    M_phi = rows_phi
    M_phi_inv = inverse(M_phi, f)
    Phi_inv = linear_from_rows(H, els, M_phi_inv, "Phi^-1")

    sig_inv = convolution_inverse(sigma, hs)
    want_inv = {"g": "1/sg", "x": "-sx/sg", "x*g": "-sxg/sg"}
    bad = [k for k, v in want_inv.items() if sig_inv(H.element(k, e.aliases)) != P(v)]
    rep.add("crossed/ext/sigma-inverse", "ad-taft", not bad, bad)

    Ad = coinn(sigma, hs, sig_inv)
    M_ad = rows_of(Ad, els)
    want_ad = [[1, 0, 0, 0], ["sxg", "sg", "-sxg", 0], [0, 0, 1, 0], ["-sx/sg", 0, "sx/sg", "1/sg"]]
    ok = M_ad == [[P(v) for v in r] for r in want_ad]
    rep.add("crossed/ext/ad-taft", "ad-taft", ok, None if ok else [str(M_ad)])

    # Φ▷σ = σ∘Φ and its Ad
    def act(m):
        return Functional(H, values={w: sigma(_as_elem(H, m.image_word(w))) for w in H.finite_basis()})

    acted = act(Phi)
    M_acted = rows_of(coinn(acted, hs), els)
    M_acted_inv = rows_of(coinn(act(Phi_inv), hs), els)
    u = "(sxg + b*(sg - 1))/a1"
    v = "(sx/sg + c*(1/sg - 1))/a2"
    closing = [[1, 0, 0, 0], [u, "sg", f"-({u})", 0], [0, 0, 1, 0], [f"-({v})", 0, v, "1/sg"]]
    closing = [[P(x) for x in r] for r in closing]

    def diff(m):
        return [f"({i},{j}): {m[i][j]} vs {closing[i][j]}" for i in range(4) for j in range(4)
                if m[i][j] != closing[i][j]]

    printed = matmul(matmul(M_phi_inv, M_ad, f), M_phi, f)
    bad = diff(printed)
    rep.add("crossed/ext/closing-matrix/product", "closing matrix", not bad, bad)
    # with F(e_i) = Σ_j M_ij e_j one has M_{A∘B} = M_B M_A, so the printed product is Φ∘Ad_σ∘Φ⁻¹
    bad = diff(M_acted_inv)
    rep.add("crossed/ext/closing-matrix/action", "closing matrix", not bad,
            bad or ["closing matrix = M_{Ad_{Phi^-1▷sigma}}"])
    bad = diff(M_acted)
    rep.add("crossed/ext/erratum/closing-matrix", "closing matrix", bool(bad),
            ["printed matrix is not M_{Ad_{Phi▷sigma}} in the row convention"] + bad[:1])
    conj = matmul(matmul(M_phi, M_ad, f), M_phi_inv, f)
    rep.add("crossed/ext/axiom1/matrix", "crossed module (1)", conj == M_acted)
    # maps: Ad_{Φ▷σ} = Φ⁻¹∘Ad_σ∘Φ on the basis
    lhs = coinn(acted, hs)
    bad = [H.word_str(w) for w in H.finite_basis()
           if lhs.image_word(w) != Phi_inv(_as_elem(H, Ad(_as_elem(H, Phi.image_word(w)))))]
    rep.add("crossed/ext/axiom1/maps", "crossed module (1)", not bad, bad)
    # axiom (2): Ad_τ▷σ = σ∘Ad_τ = τ∗σ∗τ⁻¹
    tau_inv = convolution_inverse(tau, hs)
    Ad_tau = coinn(tau, hs, tau_inv)
    left = Functional(H, values={w: sigma(_as_elem(H, Ad_tau.image_word(w))) for w in H.finite_basis()})
    right = convolution(convolution(tau, sigma, hs), tau_inv, hs)
    bad = [H.word_str(w) for w in H.finite_basis() if left.value_word(w) != right.value_word(w)]
    rep.add("crossed/ext/axiom2", "crossed module (2)", not bad, bad)
    # Ad_σ∘Ad_τ = Ad_{τ∗σ}
    comp = coinn(convolution(tau, sigma, hs), hs)
    bad = [H.word_str(w) for w in H.finite_basis()
           if comp.image_word(w) != Ad(_as_elem(H, Ad_tau.image_word(w)))]
    rep.add("crossed/ext/ad-morphism", "Ad", not bad, bad)
    # non-trivial action
    rep.add("crossed/ext/non-trivial", "non-abelian", not acted.equals(sigma),
            [f"(Phi▷sigma)(x) = {acted(H.gen('x'))}"])
    # determinant one
    rep.add("crossed/ext/ad-det", "ad-taft", _det4(M_ad, f).is_one())
    return rep


def _as_elem(H, t: Tensor) -> AlgebraElement:
    return t if isinstance(t, AlgebraElement) else AlgebraElement(H, dict(t.terms))


def _det4(mat, field):
    from .gauge import _det

    return _det(mat, field)


def gauge_family_bisections(entry, family: str, names: list[str]) -> list:
    """Bisections σ_F for copies of a one-parameter gauge family, one per parameter name."""
    from .gauge import bisection_from_gauge, family_member

    (p,) = entry.gauge_families[family]["params"]
    out = []
    for nm in names:
        F = family_member(entry, family, {p: nm}, f"{family}[{nm}]")
        out.append(bisection_from_gauge(F, entry.bialgebroid, f"sigma_{nm}"))
    return out


__all__ = [
    "CAutomorphism", "HopfTransport", "act_on_bisection", "ad_alternative", "ad_of_bisection",
    "automorphism_of_hopf_map", "bisection_of_functional", "gauge_family_bisections",
    "t2_extended_report", "taft_crossed_report", "verify_crossed_module", "gauge_from_bisection", "LINEAR",
]
