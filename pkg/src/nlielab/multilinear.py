"""Supersymmetric multilinear maps and the sign bookkeeping behind them.

A k-linear map S^k V -> V is stored sparsely on canonically sorted
argument tuples.  Two normalizers do all the Koszul sign work:

* symmetric side: swapping adjacent arguments a, b costs (-1)^{p(a)p(b)};
  a repeated odd argument kills the tuple;
* alternating side: the swap costs -(-1)^{p(a)p(b)}; a repeated even
  argument kills the tuple.

``conversion_sign`` is the scalar that turns an anticommutative n-ary
bracket on V into a supersymmetric map on the parity reversal of V and
back: for arguments a_1..a_n it is (-1) raised to the sum of the
parities of a_{n-1}, a_{n-3}, ... (every other argument, counted from
the next-to-last one).  The convention used throughout evaluates the
sign at the parities the arguments carry on the *symmetric* side.
Applying the conversion twice restores the original bracket exactly.
"""

from __future__ import annotations

from .superspace import SuperSpace, SuperVector, EVEN, ODD

__all__ = [
    "sort_with_sign_symmetric",
    "sort_with_sign_alternating",
    "conversion_sign",
    "MultiMap",
    "bracket_to_symmetric",
    "symmetric_to_bracket",
    "serialize_map",
    "parse_map",
]


def _insertion_sort_sign(indices, parities, swap_sign):
    """Sort ``indices`` ascending; swap_sign(pa, pb) gives the cost of an
    adjacent interchange.  Returns (tuple, sign) with sign possibly 0."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            s = swap_sign(parities[idx[j - 1]], parities[idx[j]])
            sign *= s
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            j -= 1
    return tuple(idx), sign


def sort_with_sign_symmetric(indices, parities):
    """Canonical form in the supersymmetric algebra S(V).

    Repeated odd indices give zero; even indices may repeat freely.
    """
    out, sign = _insertion_sort_sign(indices, parities, lambda pa, pb: -1 if (pa and pb) else 1)
    for a, b in zip(out, out[1:]):
        if a == b and parities[a] == ODD:
            return out, 0
    return out, sign


def sort_with_sign_alternating(indices, parities):
    """Canonical form on the super-exterior side.

    Repeated even indices give zero; repeated odd indices are allowed
    (for odd a, b the interchange sign -(-1)^{p(a)p(b)} is +1).
    """
    out, sign = _insertion_sort_sign(indices, parities, lambda pa, pb: 1 if (pa and pb) else -1)
    for a, b in zip(out, out[1:]):
        if a == b and parities[a] == EVEN:
            return out, 0
    return out, sign


def conversion_sign(parities) -> int:
    """Sign relating an anticommutative n-bracket and its symmetric twin.

    ``parities`` is the parity signature of the argument tuple on the
    symmetric side; n must be at least 2.
    """
    n = len(parities)
    if n < 2:
        raise ValueError("conversion sign needs at least 2 arguments")
    e = 0
    k = n - 2  # positions n-2, n-4, ... in 0-based indexing
    while k >= 0:
        e += parities[k]
        k -= 2
    return -1 if e % 2 else 1


class MultiMap:
    """A supersymmetric k-linear map S^k(V) -> V, k >= 1.

    The table holds one entry per canonically sorted argument tuple
    (indices ascending, odd indices distinct); evaluation at any other
    tuple routes through the symmetric normalizer.  ``parity`` is the
    parity of the map itself and every stored value must satisfy
    p(value) = parity + sum of argument parities.
    """

    __slots__ = ("space", "arity", "parity", "table")

    def __init__(self, space: SuperSpace, arity: int, parity: int, table: dict | None = None, check: bool = True):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.space = space
        self.arity = arity
        self.parity = parity % 2
        self.table = {}
        if table:
            for key, val in table.items():
                if val.is_zero():
                    continue
                skey, sign = sort_with_sign_symmetric(key, space.parities)
                if sign == 0:
                    raise ValueError("table key %r collapses to zero" % (key,))
                if skey != tuple(key):
                    raise ValueError("table key %r is not canonically sorted" % (key,))
                self.table[skey] = val
        if check:
            self._check_parity()

    def _check_parity(self):
        par = self.space.parities
        for key, val in self.table.items():
            want = (self.parity + sum(par[i] for i in key)) % 2
            got = val.parity()
            if got is None or (not val.is_zero() and got != want):
                raise ValueError(
                    "value parity %r at %r violates p(f(a)) = p(f)+sum p(a_i)" % (got, key)
                )

    @classmethod
    def from_function(cls, space, arity, parity, fn, check=True):
        """Tabulate ``fn`` over all canonical argument tuples."""
        from .universal import iter_multi_indices  # local import, no cycle at call time
        table = {}
        for key in iter_multi_indices(space, arity):
            val = fn(key)
            if val is not None and not val.is_zero():
                table[key] = val
        return cls(space, arity, parity, table, check=check)

    def is_zero(self) -> bool:
        return not self.table

    def evaluate(self, indices) -> SuperVector:
        key, sign = sort_with_sign_symmetric(indices, self.space.parities)
        if sign == 0:
            return self.space.zero()
        val = self.table.get(key)
        if val is None:
            return self.space.zero()
        return val if sign == 1 else val.scale(sign)

    def evaluate_expand(self, first: SuperVector, rest) -> SuperVector:
        """Evaluate with a vector in the first slot and indices after it."""
        out = self.space.zero()
        for i, c in first.coords.items():
            v = self.evaluate((i,) + tuple(rest))
            if not v.is_zero():
                out = out + v.scale(c)
        return out

    def __add__(self, other):
        if (self.space, self.arity) != (other.space, other.arity):
            raise ValueError("incompatible maps")
        if self.table and other.table and self.parity != other.parity:
            raise ValueError("adding maps of opposite parity")
        table = dict(self.table)
        for k, v in other.table.items():
            w = table.get(k)
            s = v if w is None else w + v
            if s.is_zero():
                table.pop(k, None)
            else:
                table[k] = s
        parity = self.parity if self.table else other.parity
        return MultiMap(self.space, self.arity, parity, table, check=False)

    def scale(self, c):
        table = {}
        for k, v in self.table.items():
            sv = v.scale(c)
            if not sv.is_zero():
                table[k] = sv
        return MultiMap(self.space, self.arity, self.parity, table, check=False)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (
            isinstance(other, MultiMap)
            and self.space == other.space
            and self.arity == other.arity
            and self.table == other.table
        )

    def items(self):
        return sorted(self.table.items())

    def __repr__(self):
        return "MultiMap(arity=%d, parity=%d, %d entries)" % (self.arity, self.parity, len(self.table))


def bracket_to_symmetric(space: SuperSpace, arity: int, bracket_parity: int, eval_fn) -> MultiMap:
    """Transport an anticommutative bracket on V to its symmetric twin on
    the parity reversal of V.

    ``eval_fn`` maps a canonical alternating index tuple to a
    SuperVector in V.  The twin lives on space.reversed(); its parity is
    bracket_parity + arity - 1.  Anticommutativity of the input is
    verified on adjacent transpositions; a violation raises ValueError
    with the witness tuple.
    """
    if arity < 2:
        raise ValueError("transport needs arity >= 2")
    from .universal import iter_multi_indices

    pi = space.reversed()
    par = space.parities

    def as_pi(v: SuperVector) -> SuperVector:
        return SuperVector(pi, dict(v.coords))

    table = {}
    for key in iter_multi_indices(pi, arity):
        # canonical tuples agree on both sides: sorted, with repeats
        # allowed exactly where both conventions allow them
        val = eval_fn(key)
        for pos in range(arity - 1):
            # the supplied bracket must behave alternating off the
            # canonical tuples too, so probe it on the swapped tuple
            swapped = key[:pos] + (key[pos + 1], key[pos]) + key[pos + 2:]
            lhs = eval_fn(swapped)
            want = -1 if not (par[key[pos]] and par[key[pos + 1]]) else 1
            rhs = eval_fn(key).scale(want)
            if lhs != rhs:
                raise ValueError("input bracket is not anticommutative at %r" % (swapped,))
        if val.is_zero():
            continue
        sign = conversion_sign([pi.parities[i] for i in key])
        table[key] = as_pi(val if sign == 1 else val.scale(sign))
    return MultiMap(pi, arity, (bracket_parity + arity - 1) % 2, table)


def symmetric_to_bracket(mm: MultiMap):
    """Inverse transport: a symmetric map on U induces an anticommutative
    bracket on U's parity reversal.  Returns (space, arity, parity, table)
    with the table keyed by canonical alternating tuples."""
    space = mm.space.reversed()
    table = {}
    for key, val in mm.table.items():
        sign = conversion_sign([mm.space.parities[i] for i in key])
        v = SuperVector(space, dict(val.coords))
        table[key] = v if sign == 1 else v.scale(sign)
    parity = (mm.parity + mm.arity - 1) % 2
    return space, mm.arity, parity, table


def serialize_map(mm: MultiMap) -> str:
    """Lines ``i1,...,ik -> c*label + c*label`` over sorted entries."""
    lines = []
    for key, val in mm.items():
        left = ",".join(mm.space.labels[i] for i in key)
        right = " + ".join("%s*%s" % (c, mm.space.labels[i]) for i, c in val.items())
        lines.append("%s -> %s" % (left, right))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_map(text: str, space: SuperSpace, arity: int, parity: int) -> MultiMap:
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ValueError("line %d: missing '->'" % lineno)
        left, right = line.split("->", 1)
        key = tuple(space.index(tok.strip()) for tok in left.split(","))
        coords = {}
        for term in right.split("+"):
            term = term.strip()
            if not term:
                continue
            c, lab = term.split("*", 1)
            idx = space.index(lab.strip())
            coords[idx] = coords.get(idx, space.field.zero()) + space.field.parse(c)
        table[key] = space.vector(coords)
    return MultiMap(space, arity, parity, table)
