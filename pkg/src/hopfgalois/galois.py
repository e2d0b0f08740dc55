"""Comodule algebras, coinvariants, the canonical map and translation maps."""

from __future__ import annotations

from .balanced import BalancedContext, BalancingError
from .hopf import ALGEBRA, HopfStructure, Morphism
from .linalg import Echelon, _mixed_key, nullspace
from .report import Report
from .tensor import AlgebraElement, Tensor, _add_into, make_tensor


class ComoduleAlgebra:
    """An algebra A with an algebra-map coaction δ: A → A⊗H."""

    def __init__(self, A, hs: HopfStructure, coaction: dict, name: str = ""):
        self.A = A
        self.hs = hs
        self.H = hs.H
        self.name = name or A.name
        self.coaction = Morphism(A, (A, self.H), coaction, ALGEBRA, "coaction")
        self.grading_compatible = self._grading_compatible()
        self._coinv: dict = {}

    @property
    def field(self):
        return self.A.field

    def _grading_compatible(self) -> bool:
        """Does δ keep the A-part of every generator in its own multidegree?"""
        if self.A.grading is None:
            return False
        for i in range(len(self.A.generators)):
            d = self.A.degree((i,))
            for (wa, _), _c in self.coaction.image_word((i,)).terms.items():
                if self.A.degree(wa) != d:
                    return False
        return True

    def delta(self, x) -> Tensor:
        return self.coaction(x)

    def delta_word(self, w) -> Tensor:
        return self.coaction.image_word(w)

    def is_coinvariant(self, x: AlgebraElement) -> bool:
        return self.coaction(x) == x.otimes(self.H.one())

    def verify(self, degree: int = 6) -> Report:
        rep = Report("comodule", self.name, degree)
        A, hs = self.A, self.hs
        words = A.finite_basis() or A.basis_upto(degree)
        for w in words:
            d = self.delta_word(w)
            left = hs.coproduct.on_slot(d, 1)
            right = self.coaction.on_slot(d, 0)
            rep.add(f"comodule/coassoc/{A.word_str(w)}", "coaction coassociativity", left == right,
                    None if left == right else [str(left), str(right)])
            cu = hs.counit.on_slot(d, 1)
            rep.add(f"comodule/counit/{A.word_str(w)}", "coaction counit law", cu == A.from_word(w),
                    None if cu == A.from_word(w) else [str(cu)])
        return rep

    def coinvariants(self, degree: int) -> list[AlgebraElement]:
        """Basis of the coinvariants inside the span of normal words of length ``degree``."""
        hit = self._coinv.get(degree)
        if hit is not None:
            return hit
        A, H = self.A, self.H
        groups: dict = {}
        for w in A.basis(degree):
            key = A.degree(w) if self.grading_compatible else ()
            groups.setdefault(key, []).append(w)
        out = []
        for key in sorted(groups):
            words = groups[key]
            cols = []
            for w in words:
                col = dict(self.delta_word(w).terms)
                _add_into(col, (w, ()), -self.field.one)
                cols.append(col)
            for vec in nullspace(cols, self.field):
                elem = A.reduce({words[i]: c for i, c in vec.items()})
                out.append(_monic(elem))
        out = _echelonize(out)
        self._coinv[degree] = out
        return out

    def coinvariants_upto(self, degree: int) -> list[AlgebraElement]:
        out = []
        for d in range(degree + 1):
            out += self.coinvariants(d)
        return out


def _monic(e: AlgebraElement) -> AlgebraElement:
    top = max(e.terms, key=lambda k: e.pres.sort_key(k[0]))
    return e.scale(e.terms[top].inverse())


def _echelonize(elems: list) -> list:
    """Reduced row echelon basis (pivot = largest word) of a list of elements."""
    if not elems:
        return []
    A = elems[0].pres
    ech = Echelon(key=lambda k: A.sort_key(k))
    for e in elems:
        ech.add({w: c for (w,), c in e.terms.items()})
    piv = sorted(ech.rows, key=A.sort_key)
    # back-substitute so every basis element has zeros at the other pivots
    rows = {p: dict(ech.rows[p]) for p in piv}
    for p in piv:
        for p2 in piv:
            if p2 != p and p in rows[p2]:
                f = -rows[p2][p]
                for k, v in rows[p].items():
                    _add_into(rows[p2], k, f * v)
    return [AlgebraElement(A, {(w,): c for w, c in rows[p].items()}) for p in piv]


class HopfGaloisExtension:
    """A comodule algebra with its coinvariant data and a translation map.

    ``translation`` gives τ(h) ∈ A⊗A on the generators of H; it is extended
    to H-words by τ(hk) = τ¹(k)τ¹(h) ⊗ τ²(h)τ²(k).
    """

    def __init__(self, ca: ComoduleAlgebra, translation: dict, b_generators=(), D: int = 6, name: str = ""):
        self.ca = ca
        self.A, self.H, self.hs = ca.A, ca.H, ca.hs
        self.name = name or ca.name
        self.D = D
        self.field = ca.field
        self._tau_gen = {}
        for h, t in translation.items():
            i = self.H.index[h] if isinstance(h, str) else h
            if t.slots != (self.A, self.A):
                raise ValueError("translation values must lie in A⊗A")
            self._tau_gen[i] = t
        missing = [g for i, g in enumerate(self.H.generators) if i not in self._tau_gen]
        if missing:
            raise ValueError(f"translation map missing on {missing}")
        if isinstance(b_generators, dict):
            self.b_names = dict(b_generators)
        else:
            self.b_names = {f"b{i}": b for i, b in enumerate(b_generators)}
        self.b_generators = list(self.b_names.values())
        self.ground_base = all(not any(w for (w,) in b.terms) for b in self.b_generators)
        self._tau_cache: dict = {}
        self._ctx: BalancedContext | None = None

    # balancing ----------------------------------------------------------------------
    @property
    def ctx(self) -> BalancedContext:
        if self._ctx is None:
            if self.ground_base:
                basis = []
            elif self.A.is_finite:
                basis = [b for b in self.ca.coinvariants_upto(max(len(w) for w in self.A.finite_basis()))]
            else:
                basis = self.ca.coinvariants_upto(self.D)
            self._ctx = BalancedContext(self.A, basis, self.D, self.ca.grading_compatible, self.name)
        return self._ctx

    def b_basis(self) -> list[AlgebraElement]:
        return [] if self.ground_base else self.ca.coinvariants_upto(self.D)

    def beq(self, x: Tensor, y: Tensor, pairs=(0,)) -> bool:
        return self.ctx.equal(x, y, pairs)

    # translation map ------------------------------------------------------------------
    def tau_word(self, w) -> Tensor:
        w = tuple(w)
        hit = self._tau_cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = Tensor.unit((self.A, self.A))
        elif len(w) == 1:
            out = self._tau_gen[w[0]]
        else:
            out = self.tau_word(w[:-1]).multiply(self._tau_gen[w[-1]], reverse=(0,))
        self._tau_cache[w] = out
        return out

    def tau(self, h) -> Tensor:
        """Translation map on an element of H (extended by the product rule)."""
        if isinstance(h, str):
            h = self.H.element(h)
        acc = Tensor.zero((self.A, self.A))
        for (w,), c in h.terms.items():
            acc = acc + self.tau_word(w).scale(c)
        return acc

    extend_translation = tau

    def canonical_map(self, x: Tensor) -> Tensor:
        """χ(a'⊗a) = a'a₍₀₎ ⊗ a₍₁₎."""
        return x.map_slot(1, self.ca.delta_word, (self.A, self.H)).contract(0)

    def chi_inverse(self, y: Tensor) -> Tensor:
        """χ⁻¹(a⊗h) = a τ(h)."""
        return y.map_slot(1, self.tau_word, (self.A, self.A)).contract(0)

    def h_words(self, degree: int):
        basis = self.H.finite_basis()
        return basis if basis is not None else self.H.basis_upto(degree)

    # identities --------------------------------------------------------------------------
    def _fits(self, *tensors_and_chains) -> bool:
        for t, (s, e) in tensors_and_chains:
            for k in t.terms:
                if sum(len(w) for w in k[s : e + 1]) > self.D:
                    return False
        return True

    def verify_translation_properties(self, degree: int = 2) -> Report:
        """(p1)-(p8) on H-words up to ``degree`` (all basis words if H is finite)."""
        rep = Report("galois", self.name, degree)
        A, H, hs = self.A, self.H, self.hs
        AA = (A, A)
        delta = self.ca.delta_word
        for w in self.h_words(degree):
            hn = H.word_str(w)
            t = self.tau_word(w)
            d = hs.coproduct.image_word(w)

            # (p7) exact: χ(τ(h)) = 1⊗h
            lhs = self.canonical_map(t)
            rhs = A.one().otimes(H.from_word(w))
            rep.add(f"galois/p7/{hn}", "p7", lhs == rhs, None if lhs == rhs else [str(lhs)])

            # (p5) m(τ(h)) = ε(h)1
            lhs = t.contract(0)
            rhs = A.one().scale(hs.eps_word(w))
            rep.add(f"galois/p5/{hn}", "p5", lhs == rhs, None if lhs == rhs else [str(lhs)])

            checks = []
            # (p4)
            l4 = t.map_slot(1, delta, (A, H))
            r4 = d.map_slot(0, self.tau_word, AA)
            checks.append(("p4", l4, r4, (0,)))
            # (p1)
            l1 = t.map_slot(0, delta, (A, H)).permute((0, 2, 1))
            r1 = hs.antipode.on_slot(d.map_slot(1, self.tau_word, AA), 0).permute((1, 2, 0))
            checks.append(("p1", l1, r1, (0,)))
            # (p6)
            l6 = d.map_slot(1, self.tau_word, AA).map_slot(0, self.tau_word, AA).contract(1)
            r6 = t.map_slot(0, lambda u: make_tensor(AA, {(u, ()): self.field.one}), AA)
            checks.append(("p6", l6, r6, (0, 1)))
            # (p8) for each B generator
            for bn, b in sorted(self.b_names.items()):
                l8 = t.slot_multiply(0, b, "left")
                r8 = t.slot_multiply(1, b, "right")
                checks.append((f"p8/{bn}", l8, r8, (0,)))
            for label, left, right, pairs in checks:
                anchor = label.split("/")[0]
                cid = f"galois/{label}/{hn}"
                try:
                    ok = self.beq(left, right, pairs)
                except BalancingError as e:
                    rep.add(cid, anchor, "skipped", [str(e)])
                    continue
                rep.add(cid, anchor, ok, None if ok else [f"{left}", f"{right}"])

        # (p2): τ respects the product, including on relation left-hand sides
        gens = range(len(H.generators))
        for i in gens:
            for j in gens:
                hn = f"{H.generators[i]}*{H.generators[j]}"
                prod = self._tau_gen[i].multiply(self._tau_gen[j], reverse=(0,))
                via_nf = self.tau(H.from_word((i, j)))
                cid = f"galois/p2/{hn}"
                try:
                    ok = self.beq(prod, via_nf)
                except BalancingError as e:
                    rep.add(cid, "p2", "skipped", [str(e)])
                    continue
                rep.add(cid, "p2", ok, None if ok else [str(prod), str(via_nf)])
        for lhs, rhs in H.rules.items():
            cid = f"galois/p2-relation/{H.word_str(lhs)}"
            left = self.tau_word(lhs)
            right = Tensor.zero(AA)
            for rw, c in rhs.items():
                right = right + self.tau_word(rw).scale(c)
            try:
                ok = self.beq(left, right)
            except BalancingError as e:
                rep.add(cid, "p2", "skipped", [str(e)])
                continue
            rep.add(cid, "p2", ok, None if ok else [str(left), str(right)])

        # (p3) on generators and basis words of A
        a_words = A.finite_basis() or [w for w in A.basis_upto(2)]
        for w in a_words:
            x = delta(w).map_slot(1, self.tau_word, AA).contract(0)
            target = make_tensor(AA, {((), w): self.field.one})
            cid = f"galois/p3/{A.word_str(w)}"
            try:
                ok = self.beq(x, target)
            except BalancingError as e:
                rep.add(cid, "p3", "skipped", [str(e)])
                continue
            rep.add(cid, "p3", ok, None if ok else [str(x)])

        # B-generators must be coinvariant
        for bn, b in sorted(self.b_names.items()):
            rep.add(f"galois/coinvariant/{bn}", "coinvariant subalgebra", self.ca.is_coinvariant(b), [str(b)])
        return rep

    def chi_matrix(self):
        """Matrix of χ on basis pairs (finite-dimensional A with B = ground field)."""
        basis_a = self.A.finite_basis()
        if basis_a is None:
            raise ValueError("χ matrix needs a finite-dimensional algebra")
        rows = []
        for u in basis_a:
            for v in basis_a:
                x = make_tensor((self.A, self.A), {(u, v): self.field.one})
                rows.append(dict(self.canonical_map(x).terms))
        return rows

    def verify_galois(self, degree: int = 2) -> Report:
        rep = Report("galois", self.name, degree)
        A, H = self.A, self.H
        finite = A.finite_basis()
        a_words = finite if finite is not None else A.basis_upto(degree)
        h_words = self.h_words(degree)
        # χ ∘ χ⁻¹ = id on a⊗h
        bad = []
        for u in a_words:
            for h in h_words:
                y = make_tensor((A, H), {(u, h): self.field.one})
                if self.canonical_map(self.chi_inverse(y)) != y:
                    bad.append(f"{A.word_str(u)}⊗{H.word_str(h)}")
        rep.add("galois/bijective/chi-chi_inv", "canonical map inverse on A⊗H", not bad, bad[:5])
        bad, skipped = [], 0
        for u in a_words:
            for v in a_words:
                x = make_tensor((A, A), {(u, v): self.field.one})
                back = self.chi_inverse(self.canonical_map(x))
                try:
                    if not self.beq(back, x):
                        bad.append(f"{A.word_str(u)}⊗{A.word_str(v)}")
                except BalancingError:
                    skipped += 1
        rep.add("galois/bijective/chi_inv-chi", "canonical map inverse on A⊗_B A", not bad, bad[:5])
        if finite is not None and self.ground_base:
            rows = self.chi_matrix()
            ech = Echelon(key=_mixed_key)
            for r in rows:
                if r:
                    ech.add(r)
            n = len(finite) ** 2
            rep.add("galois/chi-rank", "full rank of the canonical map", len(ech) == n, [f"rank {len(ech)} of {n}"])
        else:
            rep.add("galois/truncation", "bijectivity certified on truncations only", "limitation",
                    [f"A-words and H-words up to length {degree}, balanced slots up to D={self.D}",
                     f"{skipped} pairs beyond the bound"])
        return rep
