"""n-ary superalgebras with alternating brackets, and the generalized
Jacobi identity (the n-ary derivation law) as an exactly computed
defect.

The identity checked is, with p(a) the total parity of a_1..a_{n-1} and
alpha the parity of the bracket itself:

  [a_1..a_{n-1},[b_1..b_n]]
    = (-1)^{alpha p(a)} sum_k (-1)^{p(a)(p(b_1)+..+p(b_{k-1}))}
                              [b_1.. [a_1..a_{n-1}, b_k] .. b_n]

Everything here is written against a small duck-typed carrier protocol
so the same driver runs over finite tables and over polynomial
carriers: arity, bracket_parity, field, key_parity(k),
bracket_keys(tuple) -> element, expand(element), zero_elem(),
add_elems, scale_elem, elem_is_zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .fields import Field, field_from_name
from .multilinear import sort_with_sign_alternating
from .superspace import EVEN, ODD, SuperSpace, SuperVector

__all__ = [
    "FiniteNAryAlgebra",
    "filippov_defect",
    "FJReport",
    "check_filippov",
    "sorted_key_tuples",
    "derivation_defect",
    "DerivationReport",
    "check_derivation",
    "inner_derivation",
    "serialize_table",
    "parse_table",
]


class FiniteNAryAlgebra:
    """Finite-dimensional n-ary superalgebra given by a bracket table on
    canonically sorted basis index tuples (ascending; an index may repeat
    only when its basis vector is odd)."""

    def __init__(self, space: SuperSpace, arity: int, parity: int, table: dict, check: bool = True):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        self.space = space
        self.arity = arity
        self.bracket_parity = parity % 2
        self.field = space.field
        self.table = {}
        for key, val in table.items():
            key = tuple(key)
            if len(key) != arity:
                raise ValueError("key %r has wrong length" % (key,))
            ck, sgn = sort_with_sign_alternating(key, space.parities)
            if sgn == 0:
                raise ValueError("key %r vanishes by alternation" % (key,))
            if ck != key:
                raise ValueError("table key %r is not canonically sorted" % (key,))
            if val.space != space:
                raise ValueError("value lives in the wrong space")
            if val.is_zero():
                continue
            if check:
                want = (self.bracket_parity + sum(space.parities[i] for i in key)) % 2
                got = val.parity()
                if got is not None and got != want:
                    raise ValueError("value parity mismatch at key %r" % (key,))
            self.table[key] = val
        self._cache: dict = {}

    # -- carrier protocol -------------------------------------------------
    def keys(self):
        return range(self.space.dim)

    def key_parity(self, k) -> int:
        return self.space.parities[k]

    def bracket_keys(self, keys: tuple) -> SuperVector:
        got = self._cache.get(keys)
        if got is not None:
            return got
        ck, sgn = sort_with_sign_alternating(keys, self.space.parities)
        if sgn == 0:
            out = self.space.zero()
        else:
            base = self.table.get(ck)
            if base is None:
                out = self.space.zero()
            elif sgn < 0:
                out = -base
            else:
                out = base
        self._cache[keys] = out
        return out

    def expand(self, elem: SuperVector):
        return sorted(elem.coords.items())

    def zero_elem(self) -> SuperVector:
        return self.space.zero()

    def add_elems(self, a, b):
        return a + b

    def scale_elem(self, a, c):
        return a.scale(c)

    def elem_is_zero(self, a) -> bool:
        return a.is_zero()

    def key_elem(self, k) -> SuperVector:
        return self.space.basis_vector(k)

    # -- convenience -------------------------------------------------------
    def bracket_elements(self, vectors) -> SuperVector:
        vectors = list(vectors)
        if len(vectors) != self.arity:
            raise ValueError("expected %d arguments" % self.arity)
        out = self.space.zero()
        for combo in product(*(sorted(v.coords.items()) for v in vectors)):
            c = self.field.one()
            for _, ci in combo:
                c = c * ci
            out = out + self.bracket_keys(tuple(i for i, _ in combo)).scale(c)
        return out

    def __repr__(self):
        return "FiniteNAryAlgebra(arity=%d, dim=%d over %r)" % (
            self.arity,
            self.space.dim,
            self.field,
        )


def _substituted(alg, keys: tuple, pos: int, elem):
    """Multilinear extension: bracket with ``elem`` in slot ``pos``."""
    out = alg.zero_elem()
    for k, c in alg.expand(elem):
        term = alg.bracket_keys(keys[:pos] + (k,) + keys[pos + 1:])
        out = alg.add_elems(out, alg.scale_elem(term, c))
    return out


def filippov_defect(alg, a_keys: tuple, b_keys: tuple):
    """LHS minus RHS of the n-ary Jacobi law on basis keys; zero iff the
    identity holds on this instance."""
    n = alg.arity
    if len(a_keys) != n - 1 or len(b_keys) != n:
        raise ValueError("need n-1 and n keys")
    pa = sum(alg.key_parity(k) for k in a_keys) % 2
    inner = alg.bracket_keys(tuple(b_keys))
    # LHS: plug the inner bracket into the last slot after a_1..a_{n-1}
    lhs = alg.zero_elem()
    for k, c in alg.expand(inner):
        term = alg.bracket_keys(tuple(a_keys) + (k,))
        lhs = alg.add_elems(lhs, alg.scale_elem(term, c))
    rhs = alg.zero_elem()
    acc = 0
    for pos in range(n):
        if pos > 0:
            acc = (acc + alg.key_parity(b_keys[pos - 1])) % 2
        inner_k = alg.bracket_keys(tuple(a_keys) + (b_keys[pos],))
        term = _substituted(alg, tuple(b_keys), pos, inner_k)
        if pa and acc:
            term = alg.scale_elem(term, -1)
        rhs = alg.add_elems(rhs, term)
    if pa and alg.bracket_parity:
        rhs = alg.scale_elem(rhs, -1)
    return alg.add_elems(lhs, alg.scale_elem(rhs, -1))


@dataclass
class FJReport:
    ok: bool
    instances: int
    witness: object  # None or (a_keys, b_keys, defect repr)


def sorted_key_tuples(keys, parities_fn, r: int):
    """Canonically sorted r-tuples from an ordered key list: ascending,
    repeats allowed only at odd keys.  For alternating brackets these
    index a spanning family of identity instances."""
    keys = list(keys)
    for combo in combinations_with_replacement(range(len(keys)), r):
        ok = True
        for a, b in zip(combo, combo[1:]):
            if a == b and parities_fn(keys[a]) == EVEN:
                ok = False
                break
        if ok:
            yield tuple(keys[i] for i in combo)


def check_filippov(alg, keys=None, mode: str = "auto", limit: int | None = None) -> FJReport:
    """Check the n-ary Jacobi law over basis-key instances.

    mode 'full' runs every ordered tuple pair (finite carriers only);
    'sorted' runs canonically sorted tuples in each block, which spans
    all instances since the defect is multilinear and alternating in
    both blocks.  'auto' picks 'full' for small finite carriers.
    """
    n = alg.arity
    if keys is None:
        keys = list(alg.keys())
    else:
        keys = list(keys)
    if mode == "auto":
        mode = "full" if len(keys) <= 6 else "sorted"
    if mode == "full":
        a_iter = list(product(keys, repeat=n - 1))
        b_iter = list(product(keys, repeat=n))
    elif mode == "sorted":
        a_iter = list(sorted_key_tuples(keys, alg.key_parity, n - 1))
        b_iter = list(sorted_key_tuples(keys, alg.key_parity, n))
    else:
        raise ValueError("unknown mode %r" % mode)
    count = 0
    for a_keys in a_iter:
        for b_keys in b_iter:
            d = filippov_defect(alg, a_keys, b_keys)
            count += 1
            if not alg.elem_is_zero(d):
                return FJReport(ok=False, instances=count, witness=(a_keys, b_keys, repr(d)))
            if limit is not None and count >= limit:
                return FJReport(ok=True, instances=count, witness=None)
    return FJReport(ok=True, instances=count, witness=None)


def derivation_defect(alg, dmap, dparity: int, keys: tuple):
    """D[x_1..x_n] - (-1)^{alpha p(D)} sum_k (+-) [x_1 .. D x_k .. x_n]
    on a basis key tuple; dmap sends a key to an element."""
    n = alg.arity
    val = alg.bracket_keys(tuple(keys))
    lhs = alg.zero_elem()
    for k, c in alg.expand(val):
        lhs = alg.add_elems(lhs, alg.scale_elem(dmap(k), c))
    rhs = alg.zero_elem()
    acc = 0
    for pos in range(n):
        if pos > 0:
            acc = (acc + alg.key_parity(keys[pos - 1])) % 2
        term = _substituted(alg, tuple(keys), pos, dmap(keys[pos]))
        if dparity and acc:
            term = alg.scale_elem(term, -1)
        rhs = alg.add_elems(rhs, term)
    if dparity and alg.bracket_parity:
        rhs = alg.scale_elem(rhs, -1)
    return alg.add_elems(lhs, alg.scale_elem(rhs, -1))


@dataclass
class DerivationReport:
    ok: bool
    instances: int
    witness: object


def check_derivation(alg, dmap, dparity: int, keys=None) -> DerivationReport:
    if keys is None:
        keys = list(alg.keys())
    count = 0
    for tup in sorted_key_tuples(keys, alg.key_parity, alg.arity):
        d = derivation_defect(alg, dmap, dparity, tup)
        count += 1
        if not alg.elem_is_zero(d):
            return DerivationReport(ok=False, instances=count, witness=(tup, repr(d)))
    return DerivationReport(ok=True, instances=count, witness=None)


def inner_derivation(alg, a_keys: tuple):
    """The map x -> [a_1..a_{n-1}, x]; returns (parity, dmap)."""
    if len(a_keys) != alg.arity - 1:
        raise ValueError("need n-1 keys")
    par = (alg.bracket_parity + sum(alg.key_parity(k) for k in a_keys)) % 2

    def dmap(k):
        return alg.bracket_keys(tuple(a_keys) + (k,))

    return par, dmap


# -- plain-text bracket tables --------------------------------------------

def serialize_table(alg: FiniteNAryAlgebra) -> str:
    """Header 'arity field dim parities', then one line per table key,
    1-based indices: 'i1 i2 ... -> c*e_k + ...'."""
    lines = [
        "%d %s %d %s"
        % (
            alg.arity,
            alg.field.name,
            alg.space.dim,
            "".join("o" if p else "e" for p in alg.space.parities),
        )
    ]
    for key in sorted(alg.table):
        val = alg.table[key]
        parts = [
            "%s*e%d" % (c, i + 1) for i, c in sorted(val.coords.items())
        ]
        lines.append(
            "%s -> %s" % (" ".join(str(i + 1) for i in key), " + ".join(parts))
        )
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> FiniteNAryAlgebra:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty table")
    head = lines[0].split()
    if len(head) != 4:
        raise ValueError("bad header %r" % lines[0])
    arity = int(head[0])
    field = field_from_name(head[1])
    dim = int(head[2])
    pstr = head[3]
    if len(pstr) != dim or set(pstr) - {"e", "o"}:
        raise ValueError("bad parity string %r" % pstr)
    parities = [ODD if ch == "o" else EVEN for ch in pstr]
    space = SuperSpace(field, ["e%d" % (i + 1) for i in range(dim)], parities)
    table = {}
    for ln in lines[1:]:
        if "->" not in ln:
            raise ValueError("bad table line %r" % ln)
        left, right = ln.split("->", 1)
        key = tuple(int(tok) - 1 for tok in left.split())
        coords = {}
        for part in right.split("+"):
            part = part.strip()
            if not part or part == "0":
                continue
            if "*" not in part:
                raise ValueError("bad term %r" % part)
            cstr, lab = part.rsplit("*", 1)
            lab = lab.strip()
            if not lab.startswith("e"):
                raise ValueError("bad basis label %r" % lab)
            idx = int(lab[1:]) - 1
            c = field.parse(cstr.strip())
            if c:
                coords[idx] = coords.get(idx, field.zero()) + c
        coords = {i: c for i, c in coords.items() if c}
        table[key] = SuperVector(space, coords)
    # parity of the bracket inferred from the first nonzero entry
    par = None
    for key, val in table.items():
        vp = val.parity()
        if vp is None:
            continue
        kp = sum(parities[i] for i in key) % 2
        par = (vp - kp) % 2
        break
    if par is None:
        par = (arity + 1) % 2
    return FiniteNAryAlgebra(space, arity, par, table)
