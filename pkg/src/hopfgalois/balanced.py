"""Balanced tensor products A ⊗_B ... ⊗_B A, truncated at a word-length bound.

The quotient of A^{⊗L} by the span of

    (..., u_k b, u_{k+1}, ...) - (..., u_k, b u_{k+1}, ...)

is handled by exact row reduction.  Rows preserve the total multidegree of
the balanced slots (when B is graded compatibly), so each sector gets its own
small echelon.  Slots outside a balanced chain are spectators: terms are
grouped by their spectator words and each group is reduced independently.
"""

from __future__ import annotations

from .linalg import Echelon
from .tensor import Tensor, _add_into, make_tensor


class BalancingError(ValueError):
    pass


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def chains_of(pairs) -> list[tuple[int, int]]:
    """Group balanced pairs (i, i+1) into maximal runs of slots (start, end)."""
    out = []
    for i in sorted(set(pairs)):
        if out and out[-1][1] == i:
            out[-1] = (out[-1][0], i + 1)
        else:
            out.append((i, i + 1))
    return out


class BalancedContext:
    """Balancing data for one algebra A over a subalgebra B.

    ``b_elements`` spans B (or at least generates the relations up to the
    bound); scalar parts are dropped since they give zero relations.  With
    ``use_grading`` the elements are split into homogeneous components, which
    is only valid when B is a graded subalgebra for A's grading.
    """

    def __init__(self, A, b_elements, D: int = 6, use_grading: bool = True, name: str = ""):
        if D < 1:
            raise BalancingError("degree bound must be at least 1")
        self.A = A
        self.D = D
        self.name = name
        self.graded = bool(use_grading and A.grading is not None)
        self.b_parts = []
        zero_deg = A.degree(()) if self.graded else ()
        for b in b_elements:
            parts: dict = {}
            for (w,), c in b.terms.items():
                if not w:
                    continue
                deg = A.degree(w) if self.graded else ()
                parts.setdefault(deg, {})[w] = c
            for deg, part in parts.items():
                self.b_parts.append((part, max(len(w) for w in part), deg))
        self.trivial = not self.b_parts
        self._zero_deg = zero_deg
        self._ech: dict = {}
        self._keys: dict = {}

    # columns ---------------------------------------------------------------
    def _colkey(self, col):
        k = self._keys.get(col)
        if k is None:
            sk = self.A.sort_key
            k = (sum(len(w) for w in col), tuple(sk(w) for w in col))
            self._keys[col] = k
        return k

    def _sector(self, col):
        if not self.graded:
            return ()
        acc = self._zero_deg
        for w in col:
            acc = _add(acc, self.A.degree(w))
        return acc

    def _words_by_degree(self):
        gw = self.A.graded_words(self.D)
        if self.graded:
            return gw
        return {(): [w for ws in gw.values() for w in ws]}

    def _tuples(self, L: int, target, budget: int):
        gw = self._words_by_degree()
        if L == 1:
            for w in gw.get(target, ()):
                if len(w) <= budget:
                    yield (w,)
            return
        for deg, words in gw.items():
            rest = _sub(target, deg) if self.graded else ()
            for w in words:
                if len(w) <= budget:
                    for t in self._tuples(L - 1, rest, budget - len(w)):
                        yield (w,) + t

    def echelon(self, L: int, sector) -> Echelon:
        """Row-reduced spanning set of the balancing relations of one sector."""
        key = (L, sector)
        ech = self._ech.get(key)
        if ech is not None:
            return ech
        A = self.A
        ech = Echelon(key=self._colkey)
        for part, blen, bdeg in self.b_parts:
            target = _sub(sector, bdeg) if self.graded else ()
            for tup in self._tuples(L, target, self.D - blen):
                for k in range(L - 1):
                    row: dict = {}
                    pre, u, v, post = tup[:k], tup[k], tup[k + 1], tup[k + 2 :]
                    for w, c in part.items():
                        for nw, c2 in A.mul_words(u, w).items():
                            _add_into(row, pre + (nw, v) + post, c * c2)
                        for nw, c2 in A.mul_words(w, v).items():
                            _add_into(row, pre + (u, nw) + post, -(c * c2))
                    if row:
                        ech.add(row)
        self._ech[key] = ech
        return ech

    # normal forms --------------------------------------------------------------
    def _nf_chain(self, x: Tensor, s: int, e: int) -> Tensor:
        for p in x.slots[s : e + 1]:
            if p is not self.A:
                raise BalancingError("balanced slots must carry the balancing algebra")
        L = e - s + 1
        groups: dict = {}
        for k, c in x.terms.items():
            chain = k[s : e + 1]
            if sum(len(w) for w in chain) > self.D:
                raise BalancingError(
                    f"degree bound exceeded: balanced slots of length {sum(len(w) for w in chain)} > D={self.D}"
                )
            g = (k[:s], k[e + 1 :], self._sector(chain))
            groups.setdefault(g, {})[chain] = c
        acc: dict = {}
        for (pre, post, sector), vec in groups.items():
            rem = self.echelon(L, sector).reduce(vec)
            for chain, c in rem.items():
                acc[pre + chain + post] = c
        return make_tensor(x.slots, acc, x.field)

    def normal_form(self, x: Tensor, pairs=(0,)) -> Tensor:
        """Canonical representative of ``x`` in the quotient balanced at ``pairs``."""
        if self.trivial:
            return x
        for s, e in chains_of(pairs):
            if e >= x.arity:
                raise BalancingError(f"balanced pair ({e - 1},{e}) outside arity {x.arity}")
            x = self._nf_chain(x, s, e)
        return x

    def equal(self, x: Tensor, y: Tensor, pairs=(0,)) -> bool:
        return self.normal_form(x - y, pairs).is_zero()

    def is_zero(self, x: Tensor, pairs=(0,)) -> bool:
        return self.normal_form(x, pairs).is_zero()


def balanced_normal_form(x: Tensor, ctx: BalancedContext, pairs=(0,)) -> Tensor:
    return ctx.normal_form(x, pairs)


def balanced_equal(x: Tensor, y: Tensor, ctx: BalancedContext, pairs=(0,)) -> bool:
    return ctx.equal(x, y, pairs)
