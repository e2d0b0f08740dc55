"""Morphisms of presented algebras, Hopf structures, functionals and characters."""

from __future__ import annotations

from .linalg import SingularError, inverse
from .report import Report
from .scalars import Scalar
from .tensor import AlgebraElement, Tensor, make_tensor

ALGEBRA, ANTI, LINEAR = "algebra", "anti-algebra", "linear-on-basis"


class MorphismError(ValueError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class CharacterError(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class Morphism:
    """A map from a presented algebra into a tensor power of presented algebras.

    ``images`` maps generator names (algebra and anti-algebra modes) or basis
    words (linear-on-basis mode) to tensors over ``target``; scalars are
    accepted when the target has arity 0.  Relation preservation is checked at
    construction unless ``check=False``.
    """

    def __init__(self, source, target, images: dict, mode: str = ALGEBRA, name: str = "", check: bool = True):
        self.source = source
        self.target = tuple(target)
        self.mode = mode
        self.name = name
        self.field = source.field
        self._img = {}
        for key, val in images.items():
            val = self._as_tensor(val)
            if mode == LINEAR:
                w = source.word(key) if isinstance(key, str) else tuple(key)
                self._img[w] = val
            else:
                self._img[source.index[key] if isinstance(key, str) else key] = val
        if mode != LINEAR:
            missing = [g for i, g in enumerate(source.generators) if i not in self._img]
            if missing:
                raise MorphismError(f"{name or 'morphism'}: no image for generators {missing}")
        self._cache: dict = {}
        self.violations = self.relation_violations() if mode != LINEAR else []
        if check and self.violations:
            raise MorphismError(
                f"{name or 'morphism'} does not preserve relations: {self.violations[0]}", self.violations
            )

    def _as_tensor(self, val):
        if isinstance(val, Tensor):
            if val.slots != self.target:
                raise MorphismError("image lives over the wrong target")
            return val
        if not self.target:
            return Tensor.of_scalar(self.field, val)
        return Tensor.unit(self.target, self.field) * self.field(val)

    def unit(self):
        if not self.target:
            return Tensor.of_scalar(self.field, 1)
        return Tensor.unit(self.target, self.field)

    def image_of_generator(self, name: str) -> Tensor:
        return self._img[self.source.index[name]]

    def image_word(self, w) -> Tensor:
        """Image of a (not necessarily normal) word."""
        w = tuple(w)
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if self.mode == LINEAR:
            nf = self.source.nf_word(w)
            if len(nf) == 1 and nf.get(w) is not None and nf[w].is_one():
                out = self._img.get(w)
                if out is None:
                    out = make_tensor(self.target, {}, self.field) if self.target else Tensor((), {}, self.field)
            else:
                out = self._combine(nf)
        elif not w:
            out = self.unit()
        elif len(w) == 1:
            out = self._img[w[0]]
        elif self.mode == ALGEBRA:
            out = self.image_word(w[:-1]) * self._img[w[-1]]
        else:
            out = self._img[w[-1]] * self.image_word(w[:-1])
        self._cache[w] = out
        return out

    def _combine(self, word_coeffs: dict) -> Tensor:
        acc = None
        for w, c in word_coeffs.items():
            t = self.image_word(w).scale(c)
            acc = t if acc is None else acc + t
        if acc is None:
            acc = make_tensor(self.target, {}, self.field) if self.target else Tensor((), {}, self.field)
        return acc

    def __call__(self, x):
        if isinstance(x, str):
            x = self.source.element(x)
        if x.slots != (self.source,):
            raise MorphismError("element does not live in the source")
        return self._combine({k[0]: c for k, c in x.terms.items()})

    def on_slot(self, t: Tensor, i: int) -> Tensor:
        return t.map_slot(i, self.image_word, self.target)

    def relation_violations(self) -> list[str]:
        out = []
        for lhs, rhs in self.source.rules.items():
            left = self.image_word(lhs)
            right = self._combine(rhs)
            if left != right:
                out.append(f"{self.source.word_str(lhs)}: {left} != {right}")
        return out

    def then(self, other: "Morphism") -> "Morphism":
        """other ∘ self, for self with arity-1 target."""
        if len(self.target) != 1 or self.target[0] is not other.source:
            raise MorphismError("cannot compose")
        if self.mode == LINEAR or other.mode == LINEAR:
            basis = self.source.finite_basis()
            images = {w: other(self.image_word(w)) for w in basis}
            return Morphism(self.source, other.target, images, LINEAR, check=False)
        mode = ALGEBRA if self.mode == other.mode else ANTI
        images = {g: other(self.image_word((i,))) for i, g in enumerate(self.source.generators)}
        return Morphism(self.source, other.target, images, mode, check=False)

    def matrix(self, basis_elems, target_elems=None):
        """Rows = coordinates of images of ``basis_elems`` in ``target_elems``."""
        from .linalg import solve

        target_elems = target_elems or basis_elems
        cols = [dict(e.terms) for e in target_elems]
        rows = []
        for e in basis_elems:
            coords = solve(cols, dict(self(e).terms), self.field)
            if coords is None:
                raise MorphismError("image not in the span of the target basis")
            rows.append(coords)
        return rows


def identity_morphism(pres) -> Morphism:
    return Morphism(pres, (pres,), {g: pres.gen(g) for g in pres.generators}, ALGEBRA, "id")


class HopfStructure:
    """A presented algebra H with coproduct, counit and antipode."""

    def __init__(self, H, coproduct: dict, counit: dict, antipode: dict, name: str = "", check=True):
        self.H = H
        self.name = name or H.name
        self.coproduct = Morphism(H, (H, H), coproduct, ALGEBRA, "coproduct", check)
        self.counit = Morphism(H, (), counit, ALGEBRA, "counit", check)
        self.antipode = Morphism(H, (H,), antipode, ANTI, "antipode", check)

    @property
    def field(self):
        return self.H.field

    def delta(self, x: AlgebraElement) -> Tensor:
        return self.coproduct(x)

    def delta2(self, w) -> Tensor:
        """(Δ⊗id)Δ on a word."""
        return self.coproduct.on_slot(self.coproduct.image_word(w), 0)

    def eps_word(self, w) -> Scalar:
        return self.counit.image_word(w).scalar()

    def words(self, degree: int):
        basis = self.H.finite_basis()
        return basis if basis is not None else self.H.basis_upto(degree)


def verify_hopf_axioms(hs: HopfStructure, degree: int = 6) -> Report:
    """Coassociativity, counit and antipode laws on basis words up to ``degree``."""
    rep = Report("hopf", hs.name, degree)
    H = hs.H
    for label, m in (("coproduct", hs.coproduct), ("counit", hs.counit), ("antipode", hs.antipode)):
        rep.add(f"hopf/relations/{label}", "structure maps respect relations", not m.violations, m.violations[:3])
    words = hs.words(degree)
    finite = H.finite_basis() is not None
    for w in words:
        name = H.word_str(w)
        d = hs.coproduct.image_word(w)
        left = hs.coproduct.on_slot(d, 0)
        right = hs.coproduct.on_slot(d, 1)
        rep.add(f"hopf/coassoc/{name}", "coassociativity", left == right,
                None if left == right else [f"(Δ⊗id)Δ = {left}", f"(id⊗Δ)Δ = {right}"])
        elem = H.from_word(w)
        l_cu = hs.counit.on_slot(d, 0)
        r_cu = hs.counit.on_slot(d, 1)
        ok = l_cu == elem and r_cu == elem
        rep.add(f"hopf/counit/{name}", "counit laws", ok, None if ok else [str(l_cu), str(r_cu)])
        target = H.one().scale(hs.eps_word(w))
        l_s = hs.antipode.on_slot(d, 0).contract(0)
        r_s = hs.antipode.on_slot(d, 1).contract(0)
        ok = l_s == target and r_s == target
        rep.add(f"hopf/antipode/{name}", "antipode laws m(S⊗id)Δ = m(id⊗S)Δ = ηε", ok,
                None if ok else [str(l_s), str(r_s)])
    if not finite:
        rep.add("hopf/truncation", "infinite-dimensional: words checked up to the degree bound", "limitation",
                [f"checked all normal words of length <= {degree}"])
    return rep


# functionals -----------------------------------------------------------------------
class Functional:
    """A linear functional on a presented algebra.

    Given either by values on normal basis words, by generator values
    (multiplicative extension, for characters), or by a callable on words.
    """

    def __init__(self, H, values: dict | None = None, generators: dict | None = None, fn=None, name: str = ""):
        self.H = H
        self.name = name
        self.field = H.field
        self._values = None
        self._gens = None
        self._fn = fn
        if values is not None:
            self._values = {H.word(k) if isinstance(k, str) else tuple(k): self.field(v) for k, v in values.items()}
        if generators is not None:
            self._gens = {H.index[k]: self.field(v) for k, v in generators.items()}
        self._cache: dict = {}

    @property
    def multiplicative(self) -> bool:
        return self._gens is not None

    def value_word(self, w) -> Scalar:
        w = tuple(w)
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if self._gens is not None:
            out = self.field.one
            for i in w:
                out = out * self._gens[i]
        elif self._values is not None:
            nf = self.H.nf_word(w)
            if len(nf) == 1 and w in nf and nf[w].is_one():
                out = self._values.get(w, self.field.zero)
            else:
                out = self._eval(nf)
        else:
            out = self._fn(w)
        self._cache[w] = out
        return out

    def _eval(self, word_coeffs) -> Scalar:
        acc = self.field.zero
        for w, c in word_coeffs.items():
            v = self.value_word(w)
            if v:
                acc = acc + c * v
        return acc

    def __call__(self, x) -> Scalar:
        if isinstance(x, str):
            x = self.H.element(x)
        return self._eval({k[0]: c for k, c in x.terms.items()})

    def table(self, basis=None) -> dict:
        basis = basis if basis is not None else self.H.finite_basis()
        return {w: self.value_word(w) for w in basis}

    def equals(self, other: "Functional", basis=None) -> bool:
        basis = basis if basis is not None else self.H.finite_basis()
        return all(self.value_word(w) == other.value_word(w) for w in basis)

    def relation_violations(self) -> list[str]:
        """For multiplicative functionals: relations mapped to equal scalars."""
        out = []
        for lhs, rhs in self.H.rules.items():
            left = self.field.one
            for i in lhs:
                left = left * self._gens[i]
            right = self.field.zero
            for w, c in rhs.items():
                v = self.field.one
                for i in w:
                    v = v * self._gens[i]
                right = right + c * v
            if left != right:
                out.append(self.H.word_str(lhs))
        return out

    def __repr__(self):
        if self._gens is not None:
            inner = ", ".join(f"{self.H.generators[i]}↦{v}" for i, v in sorted(self._gens.items()))
        else:
            basis = self.H.finite_basis() or []
            inner = ", ".join(f"{self.H.word_str(w)}↦{self.value_word(w)}" for w in basis)
        return f"Functional({inner})"


def counit_functional(hs: HopfStructure) -> Functional:
    return Functional(hs.H, generators={g: hs.counit.image_word((i,)).scalar() for i, g in enumerate(hs.H.generators)},
                      name="ε")


def convolution(f: Functional, g: Functional, hs: HopfStructure) -> Functional:
    """(f∗g)(h) = f(h₁) g(h₂)."""

    def fn(w):
        acc = hs.field.zero
        for (w1, w2), c in hs.coproduct.image_word(w).terms.items():
            a = f.value_word(w1)
            if a:
                b = g.value_word(w2)
                if b:
                    acc = acc + c * a * b
        return acc

    basis = hs.H.finite_basis()
    if basis is not None:
        return Functional(hs.H, values={w: fn(w) for w in basis}, name=f"({f.name}∗{g.name})")
    return Functional(hs.H, fn=fn, name=f"({f.name}∗{g.name})")


def convolution_inverse(f: Functional, hs: HopfStructure) -> Functional:
    """Solve f∗u = ε over the basis of a finite-dimensional H."""
    basis = hs.H.finite_basis()
    if basis is None:
        raise CharacterError("convolution_inverse needs a finite-dimensional Hopf algebra")
    pos = {w: i for i, w in enumerate(basis)}
    F = hs.field
    mat = [[F.zero] * len(basis) for _ in basis]
    for r, w in enumerate(basis):
        for (w1, w2), c in hs.coproduct.image_word(w).terms.items():
            v = f.value_word(w1)
            if v:
                mat[r][pos[w2]] = mat[r][pos[w2]] + c * v
    try:
        inv = inverse(mat, F)
    except SingularError:
        raise NotInvertible(f"functional {f.name or f!r} is not convolution invertible") from None
    rhs = [hs.eps_word(w) for w in basis]
    sol = [sum((inv[i][j] * rhs[j] for j in range(len(basis)) if rhs[j]), F.zero) for i in range(len(basis))]
    return Functional(hs.H, values=dict(zip(basis, sol)), name=f"{f.name}⁻¹")


def coinn(phi: Functional, hs: HopfStructure, phi_inv: Functional | None = None) -> Morphism:
    """h ↦ φ(h₁) h₂ φ⁻¹(h₃) as a linear map on the basis."""
    phi_inv = phi_inv or convolution_inverse(phi, hs)
    H = hs.H
    images = {}
    for w in hs.words(0):
        acc = H.zero()
        for (w1, w2, w3), c in hs.delta2(w).terms.items():
            a = phi.value_word(w1)
            if a:
                b = phi_inv.value_word(w3)
                if b:
                    acc = acc + H.from_word(w2, c * a * b)
        images[w] = acc
    return Morphism(H, (H,), images, LINEAR, f"coinn({phi.name})", check=False)


def enumerate_characters(H) -> list[Functional]:
    """All algebra maps H → field for relations of the supported shapes.

    Supported: ``w^n = λ`` (power), ``w^n = 0`` (nilpotent) and ``uv = μ vu``.
    """
    F = H.field
    power, nilpotent, commuting = {}, set(), []
    for lhs, rhs in H.rules.items():
        gens = set(lhs)
        if len(gens) == 1 and len(lhs) >= 1:
            i = lhs[0]
            if not rhs:
                nilpotent.add(i)
                continue
            if list(rhs) == [()]:
                power[i] = (len(lhs), rhs[()])
                continue
        if len(lhs) == 2 and lhs[0] != lhs[1] and list(rhs) == [(lhs[1], lhs[0])]:
            commuting.append((lhs[0], lhs[1], rhs[(lhs[1], lhs[0])]))
            continue
        raise CharacterError(f"unsupported relation shape: {H.word_str(lhs)}")
    candidates = []
    for i, g in enumerate(H.generators):
        if i in nilpotent:
            candidates.append([F.zero])
        elif i in power:
            n, lam = power[i]
            roots = [r for r in F.roots_of_unity() if r**n == lam]
            seen = []
            for r in roots:
                if r not in seen:
                    seen.append(r)
            if not seen:
                raise CharacterError(f"required {n}-th roots of {lam} are not in the session field")
            candidates.append(seen)
        else:
            raise CharacterError(f"generator {g} is not constrained by a power or nilpotency relation")
    out = []

    def rec(i, acc):
        if i == len(candidates):
            vals = dict(zip(H.generators, acc))
            for u, v, mu in commuting:
                if not mu.is_one() and acc[u] and acc[v]:
                    return
            phi = Functional(H, generators=vals)
            if not phi.relation_violations():
                phi.name = "φ[" + ",".join(f"{g}↦{v}" for g, v in vals.items()) + "]"
                out.append(phi)
            return
        for c in candidates[i]:
            rec(i + 1, acc + [c])

    rec(0, [])
    return out


def group_table(chars: list[Functional], hs: HopfStructure) -> list[list[int]]:
    """Indices of convolution products; raises if not closed."""
    basis = hs.H.finite_basis()
    table = []
    for f in chars:
        row = []
        for g in chars:
            fg = convolution(f, g, hs)
            idx = next((k for k, h in enumerate(chars) if h.equals(fg, basis)), None)
            if idx is None:
                raise CharacterError("characters are not closed under convolution")
            row.append(idx)
        table.append(row)
    return table


def cyclic_order(table: list[list[int]], identity: int) -> dict:
    """Order of each element in a group given by its multiplication table."""
    out = {}
    for a in range(len(table)):
        k, x = 1, a
        while x != identity:
            x = table[x][a]
            k += 1
            if k > len(table) + 1:
                raise CharacterError("table is not a group")
        out[a] = k
    return out
