"""Elements of tensor products of presented algebras.

A :class:`Tensor` of arity k maps k-tuples of normal words (one per slot) to
nonzero scalars.  Arity 1 tensors are :class:`AlgebraElement` instances and
arity 0 tensors carry a single scalar under the key ``()``.
"""

from __future__ import annotations

from .scalars import Field, Scalar


class TensorError(ValueError):
    pass


def _add_into(acc: dict, key, c):
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


def make_tensor(slots, terms, field=None):
    slots = tuple(slots)
    if len(slots) == 1:
        return AlgebraElement(slots[0], terms)
    return Tensor(slots, terms, field)


class Tensor:
    __slots__ = ("slots", "terms", "field")

    def __init__(self, slots, terms: dict, field: Field | None = None):
        self.slots = tuple(slots)
        self.terms = terms
        if field is None:
            if not self.slots:
                raise TensorError("arity 0 tensors need an explicit field")
            field = self.slots[0].field
        self.field = field

    # constructors --------------------------------------------------------------
    @staticmethod
    def unit(slots, field=None):
        slots = tuple(slots)
        field = field or slots[0].field
        return make_tensor(slots, {tuple(() for _ in slots): field.one}, field)

    @staticmethod
    def zero(slots, field=None):
        slots = tuple(slots)
        return make_tensor(slots, {}, field or slots[0].field)

    @staticmethod
    def of_scalar(field, c):
        c = field(c)
        return Tensor((), {(): c} if c else {}, field)

    @staticmethod
    def from_raw(slots, raw: dict, field=None):
        """Reduce every slot word of ``raw`` (key tuple -> scalar) to normal form."""
        slots = tuple(slots)
        field = field or slots[0].field
        acc: dict = {}
        for key, c in raw.items():
            if not c:
                continue
            parts = [[((), c)]]
            expanded = [((), c)]
            for p, w in zip(slots, key):
                nxt = []
                nf = p.nf_word(tuple(w))
                for k, cc in expanded:
                    for nw, c2 in nf.items():
                        nxt.append((k + (nw,), cc * c2))
                expanded = nxt
            del parts
            for k, cc in expanded:
                _add_into(acc, k, cc)
        return make_tensor(slots, acc, field)

    # basic properties ------------------------------------------------------------
    @property
    def arity(self) -> int:
        return len(self.slots)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def scalar(self) -> Scalar:
        if self.slots and any(k != tuple(() for _ in self.slots) for k in self.terms):
            raise TensorError("tensor is not a multiple of the unit")
        if not self.terms:
            return self.field.zero
        return next(iter(self.terms.values()))

    def max_length(self) -> int:
        return max((sum(len(w) for w in k) for k in self.terms), default=0)

    def coefficient(self, key) -> Scalar:
        return self.terms.get(tuple(key), self.field.zero)

    def _check_same(self, other):
        if not isinstance(other, Tensor):
            raise TensorError(f"cannot combine tensor with {type(other).__name__}")
        if self.slots != other.slots:
            raise TensorError("slot presentations differ")

    # linear structure -------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (Scalar, int)):
            other = Tensor.unit(self.slots, self.field) * other
        self._check_same(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return make_tensor(self.slots, acc, self.field)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return make_tensor(self.slots, {k: -c for k, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        if isinstance(other, (Scalar, int)):
            other = Tensor.unit(self.slots, self.field) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Tensor":
        c = self.field(c)
        if not c:
            return make_tensor(self.slots, {}, self.field)
        return make_tensor(self.slots, {k: v * c for k, v in self.terms.items()}, self.field)

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return self.multiply(other)
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(self.field(1) / other)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.slots == other.slots and self.terms == other.terms

    __hash__ = None

    # products -----------------------------------------------------------------------
    def multiply(self, other: "Tensor", reverse=()) -> "Tensor":
        """Componentwise product; slots listed in ``reverse`` multiply in opposite order."""
        self._check_same(other)
        slots = self.slots
        acc: dict = {}
        rev = set(reverse)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                expanded = [((), c1 * c2)]
                for i, p in enumerate(slots):
                    nf = p.mul_words(k2[i], k1[i]) if i in rev else p.mul_words(k1[i], k2[i])
                    if len(nf) == 1:
                        (nw, c), = nf.items()
                        expanded = [(k + (nw,), cc * c) for k, cc in expanded]
                    else:
                        expanded = [(k + (nw,), cc * c) for k, cc in expanded for nw, c in nf.items()]
                for k, cc in expanded:
                    _add_into(acc, k, cc)
        return make_tensor(slots, acc, self.field)

    def otimes(self, other: "Tensor") -> "Tensor":
        """Outer tensor product (arity adds up)."""
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                acc[k1 + k2] = c1 * c2
        acc = {k: c for k, c in acc.items() if c}
        return make_tensor(self.slots + other.slots, acc, self.field)

    def map_slot(self, i: int, image, target_slots) -> "Tensor":
        """Replace slot ``i`` by ``image(word)``, a tensor over ``target_slots``."""
        target_slots = tuple(target_slots)
        slots = self.slots[:i] + target_slots + self.slots[i + 1 :]
        acc: dict = {}
        for k, c in self.terms.items():
            img = image(k[i])
            pre, suf = k[:i], k[i + 1 :]
            for k2, c2 in img.terms.items():
                _add_into(acc, pre + k2 + suf, c * c2)
        return make_tensor(slots, acc, self.field)

    def contract(self, i: int, reverse=False) -> "Tensor":
        """Multiply slots i and i+1 together (m applied to adjacent slots)."""
        p = self.slots[i]
        if self.slots[i + 1] is not p:
            raise TensorError("contracted slots must share a presentation")
        slots = self.slots[:i] + (p,) + self.slots[i + 2 :]
        acc: dict = {}
        for k, c in self.terms.items():
            u, v = (k[i + 1], k[i]) if reverse else (k[i], k[i + 1])
            for nw, c2 in p.mul_words(u, v).items():
                _add_into(acc, k[:i] + (nw,) + k[i + 2 :], c * c2)
        return make_tensor(slots, acc, self.field)

    def permute(self, perm) -> "Tensor":
        """New tensor whose slot j is old slot perm[j]."""
        slots = tuple(self.slots[j] for j in perm)
        return make_tensor(slots, {tuple(k[j] for j in perm): c for k, c in self.terms.items()}, self.field)

    def slot_multiply(self, i: int, elem: "AlgebraElement", side: str = "left") -> "Tensor":
        """Multiply slot ``i`` by an algebra element on the given side."""
        p = self.slots[i]
        acc: dict = {}
        for k, c in self.terms.items():
            for (w,), c1 in elem.terms.items():
                nf = p.mul_words(w, k[i]) if side == "left" else p.mul_words(k[i], w)
                for nw, c2 in nf.items():
                    _add_into(acc, k[:i] + (nw,) + k[i + 1 :], c * c1 * c2)
        return make_tensor(self.slots, acc, self.field)

    def slot_part(self, i: int) -> "AlgebraElement":
        """For a tensor of the form 1 x ... x a x ... x 1, the factor a."""
        acc = {}
        for k, c in self.terms.items():
            if any(w for j, w in enumerate(k) if j != i):
                raise TensorError("not concentrated in one slot")
            _add_into(acc, (k[i],), c)
        return AlgebraElement(self.slots[i], acc)

    def over(self, slots) -> "Tensor":
        """Same terms viewed over other (larger-field) slot presentations."""
        slots = tuple(slots)
        field = slots[0].field if slots else self.field
        return make_tensor(slots, {k: field.lift(c) for k, c in self.terms.items()}, field)

    # display ------------------------------------------------------------------------
    def sorted_terms(self):
        def key(item):
            k = item[0]
            return tuple(p.sort_key(w) for p, w in zip(self.slots, k))

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            body = " ⊗ ".join(p.word_str(w) for p, w in zip(self.slots, k))
            if not self.slots:
                parts.append(str(c))
                continue
            cs = str(c)
            plain_unit = self.arity == 1 and k == ((),)
            if plain_unit:
                term = cs if not any(op in cs.lstrip("-") for op in "+-") else f"({cs})"
            elif c.is_one():
                term = body
            elif (-c).is_one():
                term = "-" + body
            else:
                if any(op in cs.lstrip("-") for op in "+-") or "/" in cs:
                    cs = f"({cs})"
                term = f"{cs}*{body}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def expression(self) -> str:
        """Parseable expression string, using tensor(...) for arity > 1."""
        if not self.terms:
            return "0"
        if self.arity <= 1:
            return str(self)
        parts = []
        for k, c in self.sorted_terms():
            factors = ", ".join(p.word_str(w, sep="*") for p, w in zip(self.slots, k))
            cs = str(c)
            parts.append(f"({cs})*tensor({factors})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"


class AlgebraElement(Tensor):
    """Arity one tensor: a normal-form combination of words in one presentation."""

    __slots__ = ()

    def __init__(self, pres, terms: dict, field=None):
        super().__init__((pres,), terms, pres.field)

    @property
    def pres(self):
        return self.slots[0]

    def words(self) -> dict:
        return {k[0]: c for k, c in self.terms.items()}

    def coeff(self, word) -> Scalar:
        if isinstance(word, str):
            word = self.pres.word(word)
        return self.terms.get((tuple(word),), self.field.zero)

    def degree(self) -> int:
        return max((len(k[0]) for k in self.terms), default=0)

    def expression(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (w,), c in self.sorted_terms():
            parts.append(f"({c})*{self.pres.word_str(w, sep='*')}" if w else f"({c})")
        return " + ".join(parts)


def tensor_of(*elements) -> Tensor:
    """Elementary tensor x1 ⊗ ... ⊗ xk of algebra elements."""
    out = elements[0]
    for e in elements[1:]:
        out = out.otimes(e)
    return out
