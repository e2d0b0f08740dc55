"""Exact sparse linear algebra over a :class:`~hopfgalois.scalars.Field`.

Vectors are dicts ``column -> Scalar`` with no zero entries.  Columns can be
any hashable objects; an ordering key decides pivots (the largest column of a
row is its pivot), which makes the remainder of a reduction canonical.
"""

from __future__ import annotations


class SingularError(ArithmeticError):
    pass


def axpy(acc: dict, c, vec: dict):
    """acc += c * vec, pruning zeros."""
    for k, v in vec.items():
        w = acc.get(k)
        if w is None:
            acc[k] = c * v
        else:
            w = w + c * v
            if w:
                acc[k] = w
            else:
                del acc[k]


class Echelon:
    """Incremental row echelon form.

    ``key`` orders columns; each stored row has its maximal column as pivot
    with coefficient 1.  With ``track=True`` each row also remembers which
    combination of inserted vectors produced it.
    """

    def __init__(self, key=None, track=False, field=None):
        if track and field is None:
            raise ValueError("tracking needs the field")
        self.field = field
        self.key = key or (lambda c: c)
        self.rows: dict = {}
        self.track = track
        self.combos: dict = {}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def _top_pivot(self, vec):
        best = None
        bk = None
        for c in vec:
            if c in self.rows:
                k = self.key(c)
                if best is None or k > bk:
                    best, bk = c, k
        return best

    def reduce(self, vec: dict, combo: dict | None = None):
        """Remainder of ``vec`` modulo the row space (and the tracked combination)."""
        vec = dict(vec)
        combo = dict(combo) if combo is not None else None
        while True:
            c = self._top_pivot(vec)
            if c is None:
                return (vec, combo) if combo is not None else vec
            f = -vec[c]
            axpy(vec, f, self.rows[c])
            if combo is not None:
                axpy(combo, f, self.combos[c])

    def add(self, vec: dict, tag=None):
        """Insert a vector; returns None if independent, else the dependency combo."""
        idx = self.count if tag is None else tag
        self.count += 1
        combo = None
        if self.track:
            vec, combo = self.reduce(vec, {idx: self.field.one})
        else:
            vec = self.reduce(vec)
        if not vec:
            return combo if self.track else {}
        piv = max(vec, key=self.key)
        inv = vec[piv].inverse()
        if not inv.is_one():
            vec = {k: v * inv for k, v in vec.items()}
            if combo is not None:
                combo = {k: v * inv for k, v in combo.items()}
        self.rows[piv] = vec
        if self.track:
            self.combos[piv] = combo
        return None

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def solve(columns: list, target: dict, field):
    """Coefficients x with sum x_i * columns[i] == target, or None."""
    ech = Echelon(track=True, key=_mixed_key, field=field)
    for i, col in enumerate(columns):
        if col:
            ech.add(col, tag=i)
    rem, combo = ech.reduce(target, {})
    if rem:
        return None
    out = [field.zero] * len(columns)
    for i, c in combo.items():
        out[i] = -c
    return out


def nullspace(columns: list, field) -> list:
    """Basis of {x : sum x_i columns[i] = 0} as dicts index -> Scalar."""
    ech = Echelon(track=True, key=_mixed_key, field=field)
    out = []
    for i, col in enumerate(columns):
        if not col:
            out.append({i: field.one})
            continue
        dep = ech.add(col, tag=i)
        if dep is not None:
            out.append({k: v for k, v in dep.items() if v})
    return out


def rank(vectors) -> int:
    ech = Echelon(key=_mixed_key)
    for v in vectors:
        if v:
            ech.add(v)
    return len(ech)


def _mixed_key(c):
    # columns of one call share a type; fall back to repr for odd mixes
    return c if isinstance(c, (int, tuple, str)) else repr(c)


# dense helpers --------------------------------------------------------------------
def matmul(a, b, field):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[field.zero] * p for _ in range(n)]
    for i in range(n):
        for k in range(m):
            aik = a[i][k]
            if not aik:
                continue
            row = b[k]
            for j in range(p):
                if row[j]:
                    out[i][j] = out[i][j] + aik * row[j]
    return out


def inverse(mat, field):
    """Gauss-Jordan inverse of a square matrix; raises SingularError."""
    n = len(mat)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def dense_rank(mat) -> int:
    return rank({j: x for j, x in enumerate(row) if x} for row in mat)


def identity(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
