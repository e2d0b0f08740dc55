"""Finitely presented algebras with terminating rewrite rules.

Words are tuples of generator indices; the index of a generator is also its
precedence.  Words are compared by weighted degree first and then
lexicographically, and every rule must rewrite its left-hand word into
strictly smaller words.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct

from .scalars import Field, Scalar

Word = tuple

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class PresentationError(ValueError):
    pass


@dataclass
class Ambiguity:
    word: str
    left: str
    right: str
    resolved: bool


@dataclass
class ConfluenceReport:
    presentation: str
    checked: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return not self.failures


class Presentation:
    """Generators, rewrite rules and an optional multigrading.

    ``rules`` is a list of ``(lhs, rhs)`` pairs where ``lhs`` is a word (tuple
    of indices or a word string) and ``rhs`` a dict ``word -> Scalar``.
    ``grading`` maps generator names to ints or integer vectors.
    """

    def __init__(self, field: Field, generators, rules=(), *, weights=None, grading=None, name=""):
        self.field = field
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.name = name
        w = weights or {}
        self.weights = tuple(int(w.get(g, 1)) for g in self.generators)
        if any(x < 1 for x in self.weights):
            raise PresentationError("generator weights must be positive")
        self.grading = self._normalize_grading(grading)
        self.rules: dict = {}
        for lhs, rhs in rules:
            lhs = self.word(lhs) if isinstance(lhs, str) else tuple(lhs)
            if not lhs:
                raise PresentationError("empty left-hand side")
            if lhs in self.rules:
                raise PresentationError(f"duplicate rule for {self.word_str(lhs)}")
            clean = {}
            for word, c in rhs.items():
                word = self.word(word) if isinstance(word, str) else tuple(word)
                c = field(c)
                if c:
                    clean[word] = clean.get(word, field.zero) + c
            clean = {k: v for k, v in clean.items() if v}
            for word in clean:
                if not self.sort_key(word) < self.sort_key(lhs):
                    raise PresentationError(
                        f"rule {self.word_str(lhs)} -> {self.word_str(word)} does not decrease the word order"
                    )
            self.rules[lhs] = clean
        self._lhs_lengths = sorted({len(k) for k in self.rules})
        self.inhomogeneous = [lhs for lhs, rhs in self.rules.items() if not self._homogeneous(lhs, rhs)]
        self._nf_cache: dict = {}
        self._basis_cache: dict = {}
        self._graded_words: dict = {}

    # words ------------------------------------------------------------------
    def _normalize_grading(self, grading):
        if not grading:
            return None
        vecs = {}
        for g in self.generators:
            v = grading.get(g, 0)
            vecs[g] = (int(v),) if isinstance(v, int) else tuple(int(x) for x in v)
        dims = {len(v) for v in vecs.values()}
        if len(dims) != 1:
            raise PresentationError("grading vectors must have one common length")
        return tuple(vecs[g] for g in self.generators)

    def word(self, text) -> Word:
        """Parse a word string: space separated names, or greedy longest match."""
        if isinstance(text, tuple):
            return text
        text = text.strip()
        if text in ("", "1"):
            return ()
        if " " in text:
            try:
                return tuple(self.index[t] for t in text.split())
            except KeyError as e:
                raise PresentationError(f"unknown generator {e.args[0]!r}") from None
        names = sorted(self.generators, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(text):
            for n in names:
                if text.startswith(n, pos):
                    out.append(self.index[n])
                    pos += len(n)
                    break
            else:
                raise PresentationError(f"cannot split word {text!r} into generators")
        return tuple(out)

    def word_str(self, w: Word, sep=None) -> str:
        if not w:
            return "1"
        if sep is None:
            sep = "" if all(len(g) == 1 for g in self.generators) else " "
        return sep.join(self.generators[i] for i in w)

    def sort_key(self, w: Word):
        return (sum(self.weights[i] for i in w), w)

    def degree(self, w: Word):
        """Multidegree of a word under the grading (empty tuple if ungraded)."""
        if self.grading is None:
            return ()
        acc = [0] * len(self.grading[0])
        for i in w:
            for k, x in enumerate(self.grading[i]):
                acc[k] += x
        return tuple(acc)

    def _homogeneous(self, lhs, rhs) -> bool:
        if self.grading is None:
            return True
        d = self.degree(lhs)
        return all(self.degree(w) == d for w in rhs)

    # rewriting -----------------------------------------------------------------
    def _find(self, w: Word):
        rules = self.rules
        n = len(w)
        for i in range(n):
            for L in self._lhs_lengths:
                if i + L > n:
                    break
                rhs = rules.get(w[i : i + L])
                if rhs is not None:
                    return i, L, rhs
        return None

    def nf_word(self, w: Word) -> dict:
        """Normal form of a single word as a dict ``word -> Scalar``."""
        hit = self._nf_cache.get(w)
        if hit is not None:
            return hit
        m = self._find(w)
        if m is None:
            out = {w: self.field.one}
        else:
            i, L, rhs = m
            pre, suf = w[:i], w[i + L :]
            out = {}
            for rw, c in rhs.items():
                for nw, c2 in self.nf_word(pre + rw + suf).items():
                    v = out.get(nw)
                    v = c * c2 if v is None else v + c * c2
                    if v:
                        out[nw] = v
                    else:
                        out.pop(nw, None)
        self._nf_cache[w] = out
        return out

    def mul_words(self, u: Word, v: Word) -> dict:
        if not u:
            return self.nf_word(v)
        if not v:
            return self.nf_word(u)
        return self.nf_word(u + v)

    def is_normal(self, w: Word) -> bool:
        return self._find(w) is None

    def reduce(self, raw) -> "AlgebraElement":
        """Normal form of a raw combination: dict or iterable of (coeff, word)."""
        from .tensor import AlgebraElement

        items = raw.items() if isinstance(raw, dict) else ((w, c) for c, w in raw)
        out: dict = {}
        for w, c in items:
            w = self.word(w) if isinstance(w, str) else tuple(w)
            c = self.field(c)
            if not c:
                continue
            for nw, c2 in self.nf_word(w).items():
                v = out.get(nw)
                v = c * c2 if v is None else v + c * c2
                if v:
                    out[nw] = v
                else:
                    out.pop(nw, None)
        return AlgebraElement(self, {(w,): c for w, c in out.items()})

    # elements --------------------------------------------------------------
    def gen(self, name: str) -> "AlgebraElement":
        from .tensor import AlgebraElement

        return AlgebraElement(self, {((self.index[name],),): self.field.one})

    def one(self) -> "AlgebraElement":
        from .tensor import AlgebraElement

        return AlgebraElement(self, {((),): self.field.one})

    def zero(self) -> "AlgebraElement":
        from .tensor import AlgebraElement

        return AlgebraElement(self, {})

    def element(self, text: str, aliases=None) -> "AlgebraElement":
        from .parse import parse_in

        return parse_in((self,), text, aliases)

    def from_word(self, w, coeff=None) -> "AlgebraElement":
        w = self.word(w) if isinstance(w, str) else tuple(w)
        return self.reduce({w: coeff if coeff is not None else self.field.one})

    # bases -----------------------------------------------------------------
    def basis(self, degree: int) -> list:
        """Normal words of length exactly ``degree``, sorted by the word order."""
        if degree < 0:
            return []
        hit = self._basis_cache.get(degree)
        if hit is not None:
            return hit
        if degree == 0:
            out = [()]
        else:
            lhs = [k for k in self.rules]
            out = []
            for w in self.basis(degree - 1):
                for g in range(len(self.generators)):
                    nw = w + (g,)
                    if not any(len(l) <= len(nw) and nw[len(nw) - len(l) :] == l for l in lhs):
                        out.append(nw)
            out.sort(key=self.sort_key)
        self._basis_cache[degree] = out
        return out

    def basis_upto(self, degree: int) -> list:
        out = []
        for d in range(degree + 1):
            out += self.basis(d)
        return out

    def finite_basis(self, limit: int = 64):
        """Full basis if the algebra is finite-dimensional (detected up to ``limit``)."""
        out = []
        for d in range(limit + 1):
            b = self.basis(d)
            if not b:
                return out
            out += b
        return None

    @property
    def is_finite(self) -> bool:
        return self.finite_basis() is not None

    def graded_words(self, max_len: int) -> dict:
        """Normal words of length <= max_len grouped by multidegree."""
        hit = self._graded_words.get(max_len)
        if hit is None:
            hit = {}
            for w in self.basis_upto(max_len):
                hit.setdefault(self.degree(w), []).append(w)
            self._graded_words[max_len] = hit
        return hit

    # confluence --------------------------------------------------------------
    def _one_step(self, w: Word, pos: int, lhs: Word) -> dict:
        rhs = self.rules[lhs]
        return {w[:pos] + rw + w[pos + len(lhs) :]: c for rw, c in rhs.items()}

    def _nf_raw(self, raw: dict) -> dict:
        out = {}
        for w, c in raw.items():
            for nw, c2 in self.nf_word(w).items():
                v = out.get(nw, self.field.zero) + c * c2
                if v:
                    out[nw] = v
                else:
                    out.pop(nw, None)
        return out

    def check_local_confluence(self, max_overlap_len: int | None = None) -> ConfluenceReport:
        """Resolve every overlap and inclusion ambiguity between rule left sides."""
        longest = max((len(k) for k in self.rules), default=0)
        if max_overlap_len is None:
            max_overlap_len = 2 * longest
        if max_overlap_len < longest:
            raise PresentationError("max_overlap_len must be at least the longest left-hand side")
        rep = ConfluenceReport(self.name)
        lhss = list(self.rules)
        for l1, l2 in iproduct(lhss, lhss):
            cases = []
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    cases.append((l1 + l2[k:], len(l1) - k))
            if l1 != l2 and len(l2) <= len(l1):
                for p in range(len(l1) - len(l2) + 1):
                    if l1[p : p + len(l2)] == l2:
                        cases.append((l1, p))
            for word, p2 in cases:
                if len(word) > max_overlap_len:
                    continue
                rep.checked += 1
                a = self._nf_raw(self._one_step(word, 0, l1))
                b = self._nf_raw(self._one_step(word, p2, l2))
                if a != b:
                    rep.failures.append(
                        Ambiguity(self.word_str(word), self._fmt(a), self._fmt(b), False)
                    )
        return rep

    def _fmt(self, d: dict) -> str:
        from .tensor import AlgebraElement

        return str(AlgebraElement(self, {(w,): c for w, c in d.items()}))

    # change of field -----------------------------------------------------------
    def over(self, field: Field) -> "Presentation":
        """The same presentation with scalars moved into a larger field."""
        rules = [(lhs, {w: field.lift(c) for w, c in rhs.items()}) for lhs, rhs in self.rules.items()]
        grading = None
        if self.grading is not None:
            grading = {g: v for g, v in zip(self.generators, self.grading)}
        return Presentation(
            field, self.generators, rules,
            weights=dict(zip(self.generators, self.weights)), grading=grading, name=self.name,
        )

    def __repr__(self):
        return f"Presentation({self.name or ','.join(self.generators)})"


def rules_from_strings(field: Field, generators, spec: dict, aliases=None):
    """Helper: ``{"ba": "q^-1*ab", "da": "1 + q^-1*bc"}`` style rule tables."""
    from .parse import parse_in

    probe = Presentation(field, generators)
    rules = []
    for lhs, rhs in spec.items():
        elem = parse_in((probe,), rhs, aliases, field) if rhs.strip() not in ("0", "") else None
        terms = {} if elem is None else {k[0]: c for k, c in elem.terms.items()}
        rules.append((probe.word(lhs), terms))
    return rules
