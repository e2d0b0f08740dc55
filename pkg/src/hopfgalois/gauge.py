"""Gauge transformations, bisections and the correspondence between them.

A gauge transformation is a unital H-equivariant algebra map F: A → A that
fixes B; an extended one is only linear and invertible (finite A).  A
bisection is a B-valued left character σ on C(A,H).  The two are matched by
σ_F(a⊗ã) = F(a)ã and F_σ(a) = σ(a₍₀₎⊗τ¹(a₍₁₎))τ²(a₍₁₎).
"""

from __future__ import annotations

from .hopf import ALGEBRA, LINEAR, Morphism
from .linalg import SingularError, inverse, solve
from .parse import parse_scalar
from .report import Report
from .tensor import AlgebraElement, Tensor


class GaugeError(ValueError):
    pass


def _elem(A, t: Tensor) -> AlgebraElement:
    return t if isinstance(t, AlgebraElement) else AlgebraElement(A, dict(t.terms))


class GaugeTransformation:
    """F given by generator images (algebra mode) or basis images (extended)."""

    def __init__(self, ext, images: dict, name: str = "F", extended: bool = False):
        self.ext = ext
        self.A = ext.A
        self.name = name
        self.extended = extended
        if extended:
            basis = self.A.finite_basis()
            if basis is None:
                raise GaugeError("extended gauge maps need a finite-dimensional algebra")
            self.map = Morphism(self.A, (self.A,), images, LINEAR, name, check=False)
        else:
            self.map = Morphism(self.A, (self.A,), images, ALGEBRA, name, check=False)

    def __call__(self, x) -> AlgebraElement:
        if isinstance(x, str):
            x = self.A.element(x)
        return _elem(self.A, self.map(x))

    def word(self, w) -> AlgebraElement:
        return _elem(self.A, self.map.image_word(w))

    def keys(self) -> list:
        """Generator words, or the whole basis for extended maps."""
        if self.extended:
            return list(self.A.finite_basis())
        return [(i,) for i in range(len(self.A.generators))]

    def images(self) -> dict:
        return {self.A.word_str(w): self.word(w) for w in self.keys()}

    def equals(self, other: "GaugeTransformation") -> bool:
        keys = list(self.A.finite_basis()) if self.extended or other.extended else self.keys()
        return all(self.word(w) == other.word(w) for w in keys)

    def __repr__(self):
        body = ", ".join(f"{k} ↦ {v}" for k, v in self.images().items())
        return f"<Gauge {self.name}: {body}>"


def identity_gauge(ext) -> GaugeTransformation:
    A = ext.A
    return GaugeTransformation(ext, {g: A.gen(g) for g in A.generators}, "id")


def gauge_from_images(ext, images: dict, name: str = "F") -> GaugeTransformation:
    """Generator name -> expression string or element."""
    A = ext.A
    imgs = {g: (A.element(v) if isinstance(v, str) else v) for g, v in images.items()}
    return GaugeTransformation(ext, imgs, name)


def family_member(entry, family: str, values: dict | None = None, name: str | None = None) -> GaugeTransformation:
    """The catalog gauge family with its parameters substituted (names or scalars)."""
    data = entry.gauge_families[family]
    field = entry.field
    vals = {}
    for k, v in (values or {}).items():
        vals[k] = parse_scalar(field, v, entry.aliases) if isinstance(v, str) else field(v)
    imgs = {}
    for g, img in data["images"].items():
        imgs[g] = AlgebraElement(entry.A, {k: c.subs(vals) for k, c in img.terms.items()}) if vals else img
    return GaugeTransformation(entry.ext, imgs, name or family)


def verify_gauge(F: GaugeTransformation, report: Report | None = None, prefix: str = "gauge") -> Report:
    ext = F.ext
    A, H, ca = ext.A, ext.H, ext.ca
    rep = report or Report("gauge", ext.name, ext.D)
    p = f"{prefix}/{F.name}"
    if not F.extended:
        bad = F.map.relation_violations()
        rep.add(f"{p}/relations", "qgt", not bad, bad[:3])
    one = F.word(())
    rep.add(f"{p}/unital", "qgt", one == A.one(), None if one == A.one() else [str(one)])
    for w in F.keys():
        lhs = ca.coaction(F.word(w))
        rhs = F.map.on_slot(ca.delta_word(w), 0)
        rep.add(f"{p}/equivariance/{A.word_str(w)}", "qgt", lhs == rhs,
                None if lhs == rhs else [str(lhs), str(rhs)])
    for bn, b in sorted(ext.b_names.items()):
        if F.extended:
            # left B-linearity on the basis
            ok = all(F(b * A.from_word(w)) == b * F.word(w) for w in F.keys())
            rep.add(f"{p}/b-linear/{bn}", "qgt", ok)
        else:
            img = F(b)
            rep.add(f"{p}/b-identity/{bn}", "qgt", img == b, None if img == b else [str(img)])
    if A.grading is not None and ca.grading_compatible:
        bad = []
        for w in F.keys():
            d = A.degree(w)
            if any(A.degree(u) != d for (u,) in F.word(w).terms):
                bad.append(A.word_str(w))
        rep.add(f"{p}/grading", "grading preserved", not bad, bad)
    return rep


def lemma_lecb(F: GaugeTransformation, u: str, v: str) -> tuple[bool, AlgebraElement]:
    """Is F(u)v − F(v)u coinvariant?"""
    A = F.A
    x = F(u) * A.gen(v) - F(v) * A.gen(u)
    return F.ext.ca.is_coinvariant(x), x


def gauge_inverse(F: GaugeTransformation, name: str | None = None) -> GaugeTransformation:
    """F⁻¹(a) = a₍₀₎F(τ¹(a₍₁₎))τ²(a₍₁₎); extended maps are inverted as matrices."""
    ext, A = F.ext, F.A
    name = name or f"{F.name}^-1"
    if F.extended:
        basis = list(A.finite_basis())
        idx = {w: i for i, w in enumerate(basis)}
        mat = []
        for w in basis:
            row = [A.field.zero] * len(basis)
            for (u,), c in F.word(w).terms.items():
                row[idx[u]] = c
            mat.append(row)
        try:
            inv = inverse(mat, A.field)
        except SingularError:
            raise GaugeError(f"{F.name} is not invertible") from None
        images = {}
        for i, w in enumerate(basis):
            images[w] = AlgebraElement(A, {(basis[j],): c for j, c in enumerate(inv[i]) if c})
        return GaugeTransformation(ext, images, name, extended=True)
    images = {}
    for i, g in enumerate(A.generators):
        y = ca_tau(ext, (i,))
        y = y.map_slot(1, F.map.image_word, (A,))
        images[g] = _elem(A, y.contract(0).contract(0))
    return GaugeTransformation(ext, images, name)


def ca_tau(ext, w) -> Tensor:
    """a₍₀₎ ⊗ τ¹(a₍₁₎) ⊗ τ²(a₍₁₎) for a word a (unbalanced representative)."""
    A = ext.A
    return ext.ca.delta_word(tuple(w)).map_slot(1, ext.tau_word, (A, A))


def gauge_compose(F: GaugeTransformation, G: GaugeTransformation, name: str | None = None) -> GaugeTransformation:
    """F∘G."""
    if F.ext is not G.ext:
        raise GaugeError("gauge maps live on different extensions")
    name = name or f"{F.name}∘{G.name}"
    extended = F.extended or G.extended
    keys = list(F.A.finite_basis()) if extended else G.keys()
    if extended:
        images = {w: F(G.word(w)) for w in keys}
    else:
        images = {F.A.generators[w[0]]: F(G.word(w)) for w in keys}
    return GaugeTransformation(F.ext, images, name, extended)


def check_inverse(F: GaugeTransformation, Finv: GaugeTransformation, report: Report | None = None,
                  prefix: str = "gauge") -> Report:
    rep = report or Report("gauge", F.ext.name, F.ext.D)
    A = F.A
    for w in F.keys():
        x = A.from_word(w)
        a = F(Finv(x))
        b = Finv(F(x))
        ws = A.word_str(w)
        rep.add(f"{prefix}/{F.name}/inverse/left/{ws}", "inv-F2", b == x, None if b == x else [str(b)])
        rep.add(f"{prefix}/{F.name}/inverse/right/{ws}", "inv-F2", a == x, None if a == x else [str(a)])
    return rep


# bisections -----------------------------------------------------------------------------------
class Bisection:
    """σ: C(A,H) → B, induced from a gauge map or given by values on C-generators.

    Explicit bisections are evaluated away from the generators through the
    gauge map F_σ they determine.
    """

    def __init__(self, bia, gauge: GaugeTransformation | None = None, values: dict | None = None,
                 name: str = "sigma", extended: bool = False):
        if (gauge is None) == (values is None):
            raise GaugeError("a bisection needs exactly one of gauge, values")
        self.bia = bia
        self.ext = bia.ext
        self.A = bia.A
        self.name = name
        self.extended = extended or (gauge is not None and gauge.extended)
        self.gauge = gauge
        self.values = None
        if values is not None:
            self.values = {n: (self.A.element(v, bia.aliases) if isinstance(v, str) else v)
                           for n, v in values.items()}
        self._induced: GaugeTransformation | None = None

    @property
    def induced_gauge(self) -> GaugeTransformation:
        if self.gauge is not None:
            return self.gauge
        if self._induced is None:
            self._induced = gauge_from_bisection(self)
        return self._induced

    def __call__(self, x) -> AlgebraElement:
        if isinstance(x, str):
            if self.values is not None and x in self.values:
                return self.values[x]
            x = self.bia.evaluate(x)
        F = self.induced_gauge
        # σ_F(a⊗ã) = F(a)ã
        return _elem(self.A, x.map_slot(0, F.map.image_word, (self.A,)).contract(0))

    def on_generators(self) -> dict:
        return {n: self(n) for n in sorted(self.bia.generators)}

    def __repr__(self):
        return f"<Bisection {self.name}>"


def counit_bisection(bia) -> Bisection:
    return Bisection(bia, gauge=identity_gauge(bia.ext), name="eps")


def bisection_from_gauge(F: GaugeTransformation, bia, name: str | None = None) -> Bisection:
    """σ_F(a⊗ã) = F(a)ã."""
    return Bisection(bia, gauge=F, name=name or f"sigma_{F.name}")


def delta_c(bia, w, max_len: int = 1):
    """δ^C(a) = a₍₀₎⊗τ¹⊗_Bτ² written as Σ c·X⊗_B u, X a C-generator (or 1), u an A-word.

    Returns a list of (c, X-name or '1', word).
    """
    A = bia.A
    ext = bia.ext
    target = ca_tau(ext, w)
    names = ["1"] + sorted(bia.generators)
    words = A.basis_upto(max_len)
    cols, labels = [], []
    ctx = ext.ctx
    for n in names:
        X = bia.one() if n == "1" else bia.generators[n]
        for u in words:
            col = X.otimes(A.from_word(u))
            cols.append(dict(ctx.normal_form(col, (1,)).terms))
            labels.append((n, u))
    coeffs = solve(cols, dict(ctx.normal_form(target, (1,)).terms), bia.field)
    if coeffs is None:
        raise GaugeError(f"δ^C({A.word_str(tuple(w))}) is not in the span of generator ⊗ word")
    return [(c, n, u) for c, (n, u) in zip(coeffs, labels) if c]


def gauge_from_bisection(sigma: Bisection, name: str | None = None) -> GaugeTransformation:
    """F_σ(a) = σ(a₍₀₎⊗τ¹(a₍₁₎))τ²(a₍₁₎) on generators (basis, if extended)."""
    bia, ext, A = sigma.bia, sigma.ext, sigma.A
    name = name or f"F_{sigma.name}"
    keys = list(A.finite_basis()) if sigma.extended else [(i,) for i in range(len(A.generators))]
    images = {}
    for w in keys:
        if sigma.values is None:
            # induced bisection: apply σ_F directly to the raw representative
            y = ca_tau(ext, w)
            F = sigma.gauge
            y = y.map_slot(0, F.map.image_word, (A,))
            img = _elem(A, y.contract(0).contract(0))
        else:
            img = A.zero()
            for c, n, u in delta_c(bia, w):
                v = A.one() if n == "1" else sigma.values[n]
                img = img + (v * A.from_word(u)).scale(c)
        if sigma.extended:
            images[w] = img
        else:
            images[A.generators[w[0]]] = img
    return GaugeTransformation(ext, images, name, sigma.extended)


def verify_bisection(sigma: Bisection, report: Report | None = None, prefix: str = "bisection") -> Report:
    """Bisection axioms on generators and generator pairs, plus middle B-linearity."""
    bia, A = sigma.bia, sigma.A
    ca = bia.ca
    rep = report or Report("gauge", bia.name, bia.ext.D)
    p = f"{prefix}/{sigma.name}"
    one = sigma(bia.one())
    rep.add(f"{p}/unital", "def-bisection", one == A.one(), None if one == A.one() else [str(one)])
    gens = sorted(bia.generators)
    vals = {n: sigma(bia.generators[n]) for n in gens}
    for n in gens:
        rep.add(f"{p}/b-valued/{n}", "def-bisection", ca.is_coinvariant(vals[n]), [str(vals[n])])
    for n in gens:
        X = bia.generators[n]
        for bn, b in bia._b_gens():
            lhs = sigma(bia.product(bia.s(b), X))
            rhs = b * vals[n]
            rep.add(f"{p}/left-linear/{n}/{bn}", "def-bisection", lhs == rhs)
            lhs = sigma(bia.product(bia.t(b), X))
            rhs = vals[n] * b
            rep.add(f"{p}/right-linear/{n}/{bn}", "def-bisection", lhs == rhs)
            l = sigma(bia.product(X, bia.s(b)))
            r = sigma(bia.product(X, bia.t(b)))
            rep.add(f"{p}/middle-linear/{n}/{bn}", "equ.bis", l == r, None if l == r else [str(l), str(r)])
    if sigma.extended:
        rep.add(f"{p}/associative", "def-bisection", "skipped", ["extended bisections need not be associative"])
    else:
        for m in gens:
            for n in gens:
                X, Y = bia.generators[m], bia.generators[n]
                lhs = sigma(bia.product(X, bia.s(vals[n])))
                rhs = sigma(bia.product(X, Y))
                rep.add(f"{p}/associative/{m}/{n}", "def-bisection", lhs == rhs,
                        None if lhs == rhs else [str(lhs), str(rhs)])
    return rep


def bisection_round_trip(bia, F: GaugeTransformation | None = None, sigma: Bisection | None = None,
                         report: Report | None = None, prefix: str = "gauge") -> Report:
    """F_{σ_F} = F on A-generators and/or σ_{F_σ} = σ on C-generators."""
    rep = report or Report("gauge", bia.name, bia.ext.D)
    if F is not None:
        back = gauge_from_bisection(bisection_from_gauge(F, bia))
        for w in F.keys():
            a, b = back.word(w), F.word(w)
            rep.add(f"{prefix}/{F.name}/round-trip/F/{F.A.word_str(w)}", "btog", a == b,
                    None if a == b else [str(a), str(b)])
    if sigma is not None:
        G = gauge_from_bisection(sigma)
        again = bisection_from_gauge(G, bia)
        for n in sorted(sigma.bia.generators):
            a = again(sigma.bia.generators[n])
            b = sigma(n) if sigma.values is not None else sigma(sigma.bia.generators[n])
            rep.add(f"{prefix}/{sigma.name}/round-trip/sigma/{n}", "gtob", a == b,
                    None if a == b else [str(a), str(b)])
    return rep


def bisection_convolution(s1: Bisection, s2: Bisection, name: str | None = None) -> Bisection:
    """(σ₁∗σ₂)(x⊗x̃) = σ₁(x₍₀₎⊗τ¹(x₍₁₎))σ₂(τ²(x₍₁₎)⊗x̃)."""
    bia, A = s1.bia, s1.A
    name = name or f"{s1.name}*{s2.name}"
    F1, F2 = s1.induced_gauge, s2.induced_gauge
    cache: dict = {}

    def left(w):
        # (σ₁∗σ₂)(u⊗v) = K(u)v with K(u) = F₁(u₍₀₎)τ¹(u₍₁₎)F₂(τ²(u₍₁₎))
        hit = cache.get(w)
        if hit is None:
            hit = A.zero()
            for (x0, t1, t2), c in ca_tau(bia.ext, w).terms.items():
                hit = hit + (F1.word(x0) * A.from_word(t1) * F2.word(t2)).scale(c)
            cache[w] = hit
        return hit

    return _DirectBisection(bia, lambda u, v: left(u) * A.from_word(v), name, s1.extended or s2.extended)


def bisection_inverse(sigma: Bisection, name: str | None = None) -> Bisection:
    """σ⁻¹(x⊗x̃) = x·σ(x̃₍₀₎⊗τ¹(x̃₍₁₎))τ²(x̃₍₁₎) = x·F_σ(x̃); non-extended only."""
    if sigma.extended:
        raise GaugeError("the inverse formula does not hold for extended bisections")
    A = sigma.A
    F = sigma.induced_gauge
    return _DirectBisection(sigma.bia, lambda u, v: A.from_word(u) * F.word(v), name or f"{sigma.name}^-1")


class _DirectBisection(Bisection):
    """A bisection evaluated by a formula on elementary tensors u⊗v."""

    def __init__(self, bia, formula, name, extended=False):
        self.bia, self.ext, self.A = bia, bia.ext, bia.A
        self.name = name
        self.extended = extended
        self.values = None
        self.formula = formula
        self._gauge = None

    @property
    def gauge(self):
        return self.induced_gauge

    @property
    def induced_gauge(self):
        if self._gauge is None:
            ext, A = self.ext, self.A
            keys = list(A.finite_basis()) if self.extended else [(i,) for i in range(len(A.generators))]
            images = {}
            for w in keys:
                acc = A.zero()
                for (a0, t1, t2), c in ca_tau(ext, w).terms.items():
                    acc = acc + (self.formula(a0, t1) * A.from_word(t2)).scale(c)
                images[w if self.extended else A.generators[w[0]]] = acc
            self._gauge = GaugeTransformation(ext, images, f"F_{self.name}", self.extended)
        return self._gauge

    def __call__(self, x) -> AlgebraElement:
        if isinstance(x, str):
            x = self.bia.evaluate(x)
        acc = self.A.zero()
        for (u, v), c in x.terms.items():
            acc = acc + self.formula(u, v).scale(c)
        return acc


# extended gauge maps on finite-dimensional Galois objects ----------------------------------------
class ExtendedFamily:
    """Affine space of unital equivariant linear maps A → A.

    ``particular`` and each entry of ``directions`` are matrices (dicts
    (i, j) -> Scalar, row i = image of basis[i]); a member is
    particular + Σ p_k directions[k].
    """

    def __init__(self, ext, basis, particular, directions, free):
        self.ext = ext
        self.basis = basis
        self.particular = particular
        self.directions = directions
        self.free = free

    @property
    def dimension(self) -> int:
        return len(self.directions)

    def entry_names(self) -> list[str]:
        """Names for the parameters: the free matrix entries, as f_<row>_<col>."""
        A = self.ext.A
        return [f"f_{A.word_str(self.basis[i], sep='') or '1'}_{A.word_str(self.basis[j], sep='') or '1'}"
                for i, j in self.free]

    def member(self, ext2, params) -> GaugeTransformation:
        """The family member over ``ext2`` (same presentation over a field holding ``params``)."""
        A2 = ext2.A
        f2 = A2.field
        vals = [f2(p) if not isinstance(p, str) else f2.gen(p) for p in params]
        if len(vals) != self.dimension:
            raise GaugeError(f"expected {self.dimension} parameters, got {len(vals)}")
        images = {}
        for i, w in enumerate(self.basis):
            terms = {}
            for j, u in enumerate(self.basis):
                c = f2.lift(self.particular.get((i, j), self.ext.field.zero))
                for v, d in zip(vals, self.directions):
                    if (i, j) in d:
                        c = c + v * f2.lift(d[(i, j)])
                if c:
                    terms[(u,)] = c
            images[w] = AlgebraElement(A2, terms)
        return GaugeTransformation(ext2, images, "F", extended=True)


def equivariance_equations(ext, basis) -> list[dict]:
    """Linear equations in the unknowns (i, j) (and the constant '1') for unital equivariant maps."""
    A, ca = ext.A, ext.ca
    idx = {w: i for i, w in enumerate(basis)}
    n = len(basis)
    one = ext.field.one
    eqs = []
    unit = idx[()]
    for j in range(n):
        eq = {(unit, j): one}
        if j == unit:
            eq["1"] = -one
        eqs.append(eq)
    delta = [ca.delta_word(w) for w in basis]
    for i in range(n):
        acc: dict = {}
        # Σ_j f_ij δ(e_j)
        for j in range(n):
            for (u, h), c in delta[j].terms.items():
                acc.setdefault((u, h), {})
                _axpy1(acc[(u, h)], (i, j), c)
        # − Σ_{(u,h)} c F(u)⊗h = − Σ c f_{u,k} e_k⊗h
        for (u, h), c in delta[i].terms.items():
            iu = idx[u]
            for k in range(n):
                acc.setdefault((basis[k], h), {})
                _axpy1(acc[(basis[k], h)], (iu, k), -c)
        eqs += [e for e in acc.values() if e]
    return eqs


def _axpy1(d: dict, key, c):
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def solve_affine(eqs: list[dict], unknowns: list, field):
    """Solve Σ c·x + c₀·'1' = 0; returns (particular, directions, free) or None if inconsistent."""
    order = {u: k for k, u in enumerate(unknowns)}
    order["1"] = -1
    rows: dict = {}
    for eq in eqs:
        eq = dict(eq)
        while True:
            piv = max((k for k in eq if k in rows), key=order.get, default=None)
            if piv is None:
                break
            f = -eq[piv]
            for k, c in rows[piv].items():
                _axpy1(eq, k, f * c)
        if not eq:
            continue
        top = max(eq, key=order.get)
        if top == "1":
            return None
        inv = eq[top].inverse()
        rows[top] = {k: c * inv for k, c in eq.items()}
    free = [u for u in unknowns if u not in rows]
    # back-substitute in increasing pivot order: every other entry of a row sorts below its pivot
    value: dict = {}
    for u in sorted(rows, key=order.get):
        acc = {}
        for k, c in rows[u].items():
            if k == u:
                continue
            if k == "1":
                _axpy1(acc, "1", -c)
            elif k in value:
                for kk, cc in value[k].items():
                    _axpy1(acc, kk, -c * cc)
            else:
                _axpy1(acc, k, -c)
        value[u] = acc
    for u in free:
        value[u] = {u: field.one}
    particular = {u: v["1"] for u, v in value.items() if "1" in v}
    directions = []
    for fu in free:
        directions.append({u: v[fu] for u, v in value.items() if fu in v})
    return particular, directions, free


def solve_extended_gauge(ext) -> ExtendedFamily:
    basis = ext.A.finite_basis()
    if basis is None:
        raise GaugeError("extended gauge maps are only computed for finite-dimensional algebras")
    basis = list(basis)
    n = len(basis)
    unknowns = [(i, j) for i in range(n) for j in range(n)]
    sol = solve_affine(equivariance_equations(ext, basis), unknowns, ext.field)
    if sol is None:
        raise GaugeError("no unital equivariant linear maps (inconsistent system)")
    particular, directions, free = sol
    return ExtendedFamily(ext, basis, particular, directions, free)


def in_family(F: GaugeTransformation) -> list:
    """Equations of the family that F violates (empty when F is unital and equivariant)."""
    ext = F.ext
    basis = list(ext.A.finite_basis())
    idx = {w: i for i, w in enumerate(basis)}
    val = {}
    for i, w in enumerate(basis):
        for (u,), c in F.word(w).terms.items():
            val[(i, idx[u])] = c
    bad = []
    for eq in equivariance_equations(ext, basis):
        tot = ext.field.zero
        for k, c in eq.items():
            tot = tot + (c if k == "1" else c * val.get(k, ext.field.zero))
        if tot:
            bad.append(eq)
    return bad


def matrix_on(F: GaugeTransformation, elements) -> list[list]:
    return rows_of(F.map, elements)


def linear_from_rows(A, elements, rows, name="F") -> Morphism:
    """Linear map with F(elements[i]) = Σ_j rows[i][j] elements[j] (elements must form a basis)."""
    basis = list(A.finite_basis())
    cols = [dict(e.terms) for e in elements]
    images = {}
    for w in basis:
        coords = solve(cols, {(w,): A.field.one}, A.field)
        if coords is None:
            raise GaugeError("elements do not span the algebra")
        img = A.zero()
        for c, row in zip(coords, rows):
            if not c:
                continue
            for r, e in zip(row, elements):
                if r:
                    img = img + e.scale(c * A.field(r))
        images[w] = img
    return Morphism(A, (A,), images, LINEAR, name, check=False)


def rows_of(m: Morphism, elements) -> list[list]:
    """Rows: coordinates of m(e) in the given elements."""
    cols = [dict(e.terms) for e in elements]
    rows = []
    for e in elements:
        coords = solve(cols, dict(m(e).terms), m.field)
        if coords is None:
            raise GaugeError("image outside the span of the given elements")
        rows.append(coords)
    return rows


def gauge_from_matrix(ext, elements, rows, name="F") -> GaugeTransformation:
    m = linear_from_rows(ext.A, elements, rows, name)
    images = {w: _elem(ext.A, m.image_word(w)) for w in ext.A.finite_basis()}
    return GaugeTransformation(ext, images, name, extended=True)


def algebra_map_conditions(F: GaugeTransformation) -> list:
    """Scalars that vanish iff the linear map F is multiplicative on basis pairs."""
    A = F.A
    basis = list(A.finite_basis())
    out = []
    for u in basis:
        for v in basis:
            lhs = F(A.from_word(u) * A.from_word(v))
            rhs = F.word(u) * F.word(v)
            out += [c for c in (lhs - rhs).terms.values()]
    return out


def _to_sympy(scalars, names):
    import sympy

    syms = {n: sympy.Symbol(n) for n in names}
    out = []
    for c in scalars:
        num = str(c.num).replace("^", "**")
        out.append(sympy.sympify(num, locals=syms))
    return out, syms


def restrict_to_algebra_maps(F: GaugeTransformation, params: list[str]):
    """Groebner basis of the algebra-map conditions on a parameterized extended map.

    The cyclotomic root is a variable together with its minimal polynomial;
    returns (groebner basis, symbols, number of solutions per embedding of the root).
    """
    import sympy

    field = F.A.field
    conds = algebra_map_conditions(F)
    names = list(params) + ([field.root_name] if field.uses_root else [])
    polys, syms = _to_sympy(conds, names)
    gens = [syms[p] for p in params]
    if field.uses_root:
        z = syms[field.root_name]
        polys.append(sympy.Poly(sympy.cyclotomic_poly(field.order, z), z).as_expr())
        gens.append(z)
    polys = [p for p in polys if p != 0]
    G = sympy.groebner(polys, *gens, order="lex")
    count = _quotient_dimension(G, gens)
    if count is not None and field.uses_root:
        count //= field.phi
    return G, syms, count


def _quotient_dimension(G, gens):
    """dim Q[gens]/I for a zero-dimensional ideal, by counting standard monomials."""
    lead = [sympy_lm(g, gens) for g in G.exprs]
    n = len(gens)
    bounds = []
    for k in range(n):
        pure = [m[k] for m in lead if all(m[j] == 0 for j in range(n) if j != k)]
        if not pure:
            return None
        bounds.append(min(pure))
    from itertools import product

    count = 0
    for exps in product(*[range(b) for b in bounds]):
        if not any(all(e >= l for e, l in zip(exps, m)) for m in lead):
            count += 1
    return count


def sympy_lm(expr, gens):
    import sympy

    return sympy.Poly(expr, *gens).monoms(order="lex")[0]


def parameter_rank(F: GaugeTransformation, params: list[str]) -> int:
    """Rank of the directions p ↦ F|_{p=1, others 0} − F|_{all 0} (F affine in the parameters)."""
    from .linalg import rank

    A = F.A
    f = A.field
    basis = list(A.finite_basis())
    zero = {p: f.zero for p in params}

    def entries(values):
        out = {}
        for w in basis:
            for (u,), c in F.word(w).terms.items():
                v = c.subs(values)
                if v:
                    out[(w, u)] = v
        return out

    base = entries(zero)
    vecs = []
    for p in params:
        vals = dict(zero)
        vals[p] = f.one
        e = entries(vals)
        diff = {k: e.get(k, f.zero) - base.get(k, f.zero) for k in set(e) | set(base)}
        vecs.append({k: v for k, v in diff.items() if v})
    return rank(vecs)


def determinant(F: GaugeTransformation):
    A = F.A
    basis = list(A.finite_basis())
    idx = {w: i for i, w in enumerate(basis)}
    n = len(basis)
    mat = [[A.field.zero] * n for _ in range(n)]
    for i, w in enumerate(basis):
        for (u,), c in F.word(w).terms.items():
            mat[i][idx[u]] = c
    return _det(mat, A.field)


def _det(mat, field):
    m = [list(r) for r in mat]
    n = len(m)
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det
