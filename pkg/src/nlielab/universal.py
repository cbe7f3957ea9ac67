"""The universal Z-graded Lie superalgebra built on a superspace V.

Degree k >= 0 holds the supersymmetric (k+1)-linear maps S^{k+1}V -> V;
degree -1 holds V itself; everything below is zero.  The product is
the insertion ("box") product

    (f * g)(x_0,...,x_{p+q}) =
        sum over splits  i_0<...<i_q ; i_{q+1}<...<i_{p+q}
        of  eps * f(g(x_{i_0},...,x_{i_q}), x_{i_{q+1}},...,x_{i_{p+q}})

where eps counts, with a factor -1 each, the pairs of odd arguments
whose order the split reverses.  Degree -1 elements act as constants:
f*a plugs a into the first slot of f, a*f = 0.  The bracket
[f,g] = f*g - (-1)^{p(f)p(g)} g*f makes the whole graded space a Lie
superalgebra, with V as its transitive bottom component.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .linalg import Span, SparseMatrix, nullspace
from .multilinear import MultiMap, sort_with_sign_symmetric
from .superspace import SuperSpace, SuperVector

__all__ = [
    "iter_multi_indices",
    "WElement",
    "box",
    "w_bracket",
    "component_dim",
    "full_component",
    "GradedSubalgebra",
    "is_transitive",
]


def iter_multi_indices(space: SuperSpace, r: int):
    """Canonical sorted index tuples of length r: ascending, with odd
    indices pairwise distinct."""
    par = space.parities
    for t in combinations_with_replacement(range(space.dim), r):
        if all(not (a == b and par[a]) for a, b in zip(t, t[1:])):
            yield t


def component_dim(space: SuperSpace, degree: int) -> int:
    if degree < -1:
        return 0
    if degree == -1:
        return space.dim
    return space.dim * sum(1 for _ in iter_multi_indices(space, degree + 1))


class WElement:
    """A homogeneous element of the universal graded algebra."""

    __slots__ = ("space", "degree", "payload")

    def __init__(self, space: SuperSpace, degree: int, payload):
        if degree < -1:
            raise ValueError("degree must be >= -1")
        if degree == -1 and not isinstance(payload, SuperVector):
            raise ValueError("degree -1 payload must be a vector")
        if degree >= 0:
            if not isinstance(payload, MultiMap) or payload.arity != degree + 1:
                raise ValueError("degree %d payload must be a map of arity %d" % (degree, degree + 1))
        self.space = space
        self.degree = degree
        self.payload = payload

    @classmethod
    def from_vector(cls, v: SuperVector) -> "WElement":
        return cls(v.space, -1, v)

    @classmethod
    def from_map(cls, mm: MultiMap) -> "WElement":
        return cls(mm.space, mm.arity - 1, mm)

    @classmethod
    def zero(cls, space: SuperSpace, degree: int, parity: int = 0) -> "WElement":
        if degree == -1:
            return cls(space, -1, space.zero())
        return cls(space, degree, MultiMap(space, degree + 1, parity, {}, check=False))

    def parity(self):
        if self.degree == -1:
            return self.payload.parity()
        return self.payload.parity

    def is_zero(self) -> bool:
        return self.payload.is_zero()

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add degrees %d and %d" % (self.degree, other.degree))
        return WElement(self.space, self.degree, self.payload + other.payload)

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot subtract degrees %d and %d" % (self.degree, other.degree))
        return WElement(self.space, self.degree, self.payload - other.payload)

    def scale(self, c):
        return WElement(self.space, self.degree, self.payload.scale(c))

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (
            isinstance(other, WElement)
            and self.degree == other.degree
            and self.payload == other.payload
        )

    def vectorize(self) -> dict:
        """Sparse coordinates keyed by (argument tuple, output index)."""
        if self.degree == -1:
            return {((), i): c for i, c in self.payload.coords.items()}
        out = {}
        for key, val in self.payload.table.items():
            for i, c in val.coords.items():
                out[(key, i)] = c
        return out

    @classmethod
    def from_coords(cls, space: SuperSpace, degree: int, coords: dict, parity: int = 0) -> "WElement":
        if degree == -1:
            return cls(space, -1, SuperVector(space, {i: c for (_, i), c in coords.items()}))
        table: dict = {}
        for (key, i), c in coords.items():
            table.setdefault(key, {})[i] = c
        mm = MultiMap(space, degree + 1, parity, {k: SuperVector(space, v) for k, v in table.items()}, check=False)
        return cls(space, degree, mm)

    def __repr__(self):
        return "W[deg=%d](%r)" % (self.degree, self.payload)


def full_component(space: SuperSpace, degree: int) -> list[WElement]:
    """Basis of the full degree component, one (tuple -> e_i) map each."""
    if degree == -1:
        return [WElement.from_vector(space.basis_vector(i)) for i in range(space.dim)]
    out = []
    par = space.parities
    for key in iter_multi_indices(space, degree + 1):
        key_par = sum(par[i] for i in key) % 2
        for i in range(space.dim):
            parity = (par[i] + key_par) % 2
            mm = MultiMap(space, degree + 1, parity, {key: space.basis_vector(i)}, check=False)
            out.append(WElement.from_map(mm))
    return out


def _split_sign(gpos, fpos, arg_parities) -> int:
    """(-1)^N with N the odd-odd inversions the split introduces."""
    n = 0
    for a in gpos:
        if not arg_parities[a]:
            continue
        for b in fpos:
            if b < a and arg_parities[b]:
                n += 1
    return -1 if n % 2 else 1


def box(f: WElement, g: WElement) -> WElement:
    """Insertion product.  Degrees add; f*a plugs the constant a into
    the first slot of f; a*g = 0 for constant a."""
    space = f.space
    p, q = f.degree, g.degree
    if p + q < -1:
        raise ValueError("product falls below degree -1")
    if p == -1:
        pf = f.parity()
        pg = g.parity()
        return WElement.zero(space, p + q, 0 if pf is None or pg is None else (pf + pg) % 2)
    if q == -1:
        a = g.payload
        if p == 0:
            return WElement.from_vector(f.payload.evaluate_expand(a, ()))
        par = (f.payload.parity + (a.parity() or 0)) % 2
        mm = MultiMap.from_function(
            space, p, par, lambda key: f.payload.evaluate_expand(a, key), check=False
        )
        return WElement.from_map(mm)

    fm, gm = f.payload, g.payload
    arity = p + q + 1
    parity = (fm.parity + gm.parity) % 2
    par = space.parities
    table: dict = {}
    for key in iter_multi_indices(space, arity):
        arg_par = [par[i] for i in key]
        acc = space.zero()
        for gpos in combinations(range(arity), q + 1):
            gset = set(gpos)
            fpos = tuple(i for i in range(arity) if i not in gset)
            inner = gm.evaluate(tuple(key[i] for i in gpos))
            if inner.is_zero():
                continue
            eps = _split_sign(gpos, fpos, arg_par)
            outer = fm.evaluate_expand(inner, tuple(key[i] for i in fpos))
            if not outer.is_zero():
                acc = acc + (outer if eps == 1 else outer.scale(eps))
        if not acc.is_zero():
            table[key] = acc
    return WElement.from_map(MultiMap(space, arity, parity, table, check=False))


def w_bracket(f: WElement, g: WElement) -> WElement:
    pf, pg = f.parity(), g.parity()
    if pf is None or pg is None:
        raise ValueError("bracket needs parity-homogeneous elements")
    fg = box(f, g)
    gf = box(g, f)
    if pf and pg:
        return fg + gf
    return fg - gf


class GradedSubalgebra:
    """A graded span of elements of the universal algebra, one exact
    reduced span per degree."""

    def __init__(self, space: SuperSpace, cap: int):
        self.space = space
        self.cap = cap
        self.spans: dict[int, Span] = {}
        self._parities: dict[int, int] = {}

    def insert(self, w: WElement) -> bool:
        if w.is_zero() or w.degree > self.cap:
            return False
        span = self.spans.get(w.degree)
        if span is None:
            span = Span(self.space.field)
            self.spans[w.degree] = span
        grew = span.insert(w.vectorize())
        if grew and w.degree not in self._parities:
            pr = w.parity()
            if pr is not None:
                self._parities[w.degree] = pr
        return grew

    def dims(self) -> dict[int, int]:
        return {d: s.dim for d, s in sorted(self.spans.items()) if s.dim}

    def dim(self, degree: int) -> int:
        s = self.spans.get(degree)
        return s.dim if s else 0

    def basis(self, degree: int) -> list[WElement]:
        s = self.spans.get(degree)
        if not s:
            return []
        parity = self._parities.get(degree, 0)
        return [WElement.from_coords(self.space, degree, row, parity) for row in s]

    def contains(self, w: WElement) -> bool:
        if w.is_zero():
            return True
        s = self.spans.get(w.degree)
        return bool(s) and s.contains(w.vectorize())

    def degrees(self) -> list[int]:
        return sorted(d for d, s in self.spans.items() if s.dim)


def is_transitive(sub: GradedSubalgebra, up_to: int):
    """Check that no nonzero element of degree 0..up_to kills all of V.

    Returns (True, None) or (False, witness) where the witness is a
    nonzero element with [witness, V] = 0.
    """
    V = [WElement.from_vector(sub.space.basis_vector(i)) for i in range(sub.space.dim)]
    for j in range(0, up_to + 1):
        basis = sub.basis(j)
        if not basis:
            continue
        col_of = {}
        rows: dict = {}
        for i, u in enumerate(basis):
            for v in V:
                h = w_bracket(u, v)
                for key, c in h.vectorize().items():
                    eq = (v.payload.items()[0][0], key)
                    r = rows.setdefault(eq, {})
                    r[i] = r.get(i, sub.space.field.zero()) + c
                    if not r[i]:
                        del r[i]
        m = SparseMatrix(sub.space.field, [r for r in rows.values() if r], ncols=len(basis))
        for kv in nullspace(m):
            if kv:
                w = None
                for i, c in sorted(kv.items()):
                    t = basis[i].scale(c)
                    w = t if w is None else w + t
                if w is not None and not w.is_zero():
                    return False, w
    return True, None
