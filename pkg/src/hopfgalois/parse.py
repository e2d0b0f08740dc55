"""Small recursive-descent parser for scalar, algebra and tensor expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') exponent)?
    atom   := NUMBER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'

``tensor(x, y, ...)`` builds an elementary tensor; each argument is read in the
context of its own slot, so generator names resolve per slot.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_Ͱ-Ͽ][A-Za-z0-9_Ͱ-Ͽ']*)|(\*\*|[-+*/^(),]))")


class ParseError(ValueError):
    pass


def tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind} at token {self.i} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        node = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.i} in {self.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = ("mul" if op == "*" else "div", node, self.unary())
        return node

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return ("neg", self.unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            paren = False
            if self.peek() == ("op", "("):
                self.take()
                paren = True
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            exp = int(self.take("num")[1]) * sign
            if paren:
                self.take("op", ")")
            return ("pow", base, exp)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return ("num", int(val))
        if kind == "name":
            self.take()
            if self.peek() == ("op", "("):
                self.take()
                args = [self.expr()]
                while self.peek() == ("op", ","):
                    self.take()
                    args.append(self.expr())
                self.take("op", ")")
                return ("call", val, args)
            return ("name", val)
        if (kind, val) == ("op", "("):
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse(text: str):
    return _Parser(text).parse()


class Evaluator:
    """Evaluates parse trees over a field and a tuple of slot presentations.

    ``aliases`` maps extra names to scalars (e.g. ``q`` to zeta for Taft).
    """

    def __init__(self, field, aliases=None):
        self.field = field
        self.aliases = dict(aliases or {})

    def scalar_name(self, name):
        if name in self.aliases:
            return self.field(self.aliases[name])
        if self.field.has_name(name):
            return self.field.gen(name) if name != self.field.root_name else self.field.zeta
        return None

    def evaluate(self, node, slots):
        from .tensor import Tensor, make_tensor

        f = self.field
        kind = node[0]
        if kind == "num":
            return f(node[1])
        if kind == "name":
            name = node[1]
            if len(slots) == 1 and name in slots[0].index:
                return slots[0].gen(name)
            s = self.scalar_name(name)
            if s is not None:
                return s
            if len(slots) == 1:
                try:
                    word = slots[0].word(name)
                except ValueError:
                    word = None
                if word:
                    out = slots[0].one()
                    for i in word:
                        out = out * slots[0].gen(slots[0].generators[i])
                    return out
                raise ParseError(f"unknown name {name!r} for {slots[0].name or 'algebra'}")
            raise ParseError(f"unknown name {name!r} (use tensor(...) for tensor slots)")
        if kind == "call":
            fname, args = node[1], node[2]
            if fname == "tensor":
                if len(args) != len(slots):
                    raise ParseError(f"tensor() needs {len(slots)} factors, got {len(args)}")
                factors = []
                for a, p in zip(args, slots):
                    v = self.evaluate(a, (p,))
                    if not isinstance(v, Tensor):
                        v = make_tensor((p,), {((),): v} if v else {}, f)
                    factors.append(v)
                out = factors[0]
                for v in factors[1:]:
                    out = out.otimes(v)
                return out
            raise ParseError(f"unknown function {fname!r}")
        if kind == "neg":
            return -self.evaluate(node[1], slots)
        if kind == "pow":
            base = self.evaluate(node[1], slots)
            exp = node[2]
            if isinstance(base, Tensor):
                if exp < 0:
                    base = finite_order_inverse(base)
                    exp = -exp
                out = Tensor.unit(slots, f)
                for _ in range(exp):
                    out = out * base
                return out
            return base**exp
        lhs = self.evaluate(node[1], slots)
        rhs = self.evaluate(node[2], slots)
        if kind == "div":
            if isinstance(rhs, Tensor):
                raise ParseError("division by an algebra element")
            return lhs / rhs
        if kind == "mul":
            return lhs * rhs
        # promote scalars to multiples of the unit for sums
        if isinstance(lhs, Tensor) != isinstance(rhs, Tensor):
            if isinstance(lhs, Tensor):
                rhs = Tensor.unit(slots, f) * rhs
            else:
                lhs = Tensor.unit(slots, f) * lhs
        return lhs + rhs if kind == "add" else lhs - rhs


def finite_order_inverse(x, limit: int = 64):
    """Inverse of an element with x^k = c (a nonzero scalar), as x^(k-1)/c."""
    from .tensor import Tensor

    one = Tensor.unit(x.slots, x.field)
    prev, power = one, x
    for _ in range(limit):
        if len(power.terms) == 1:
            (k, c), = power.terms.items()
            if not any(k):
                return prev.scale(c.inverse())
        prev, power = power, power * x
    raise ParseError("negative powers need an element of finite multiplicative order")


def parse_scalar(field, text: str, aliases=None):
    value = Evaluator(field, aliases).evaluate(parse(text), ())
    from .tensor import Tensor

    if isinstance(value, Tensor):
        return value.scalar()
    return value


def parse_in(slots, text: str, aliases=None, field=None):
    """Parse ``text`` as an element of the tensor product of ``slots``."""
    from .tensor import Tensor

    slots = tuple(slots)
    field = field or slots[0].field
    value = Evaluator(field, aliases).evaluate(parse(text), slots)
    if not isinstance(value, Tensor):
        value = Tensor.unit(slots, field) * value
    return value
