"""Finite posets, the named families used throughout, and poset algebra.

A poset on ``p`` elements is stored as its cover relation plus a bitmask
closure.  Every poset is renumbered at construction so that its labeling is
natural (each cover ``a < b`` has ``a < b`` as integers); the descent
formula for the Ehrhart series depends on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence


class InvalidPoset(ValueError):
    """Raised when a cover list contains a cycle."""


class PreconditionError(ValueError):
    """Raised when an operation's structural precondition fails."""


class CapExceeded(RuntimeError):
    """Raised when an input exceeds a configured size cap."""


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closure_from_relation(p: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Upward reachability masks; raises InvalidPoset on a cycle."""
    succ = [0] * p
    indeg = [0] * p
    for a, b in set(pairs):
        if a == b:
            raise InvalidPoset(f"element {a} related to itself")
        if not succ[a] >> b & 1:
            succ[a] |= 1 << b
            indeg[b] += 1
    order = []
    ready = [v for v in range(p) if indeg[v] == 0]
    while ready:
        v = ready.pop()
        order.append(v)
        for w in _bits(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != p:
        raise InvalidPoset("cover relation contains a cycle")
    up = [0] * p
    for v in reversed(order):
        m = succ[v]
        for w in _bits(succ[v]):
            m |= up[w]
        up[v] = m
    return up


def _natural_order(p: int, up: list[int]) -> list[int]:
    """Kahn's algorithm, always taking the smallest available label."""
    down = [0] * p
    for a in range(p):
        for b in _bits(up[a]):
            down[b] |= 1 << a
    placed = 0
    order = []
    for _ in range(p):
        for v in range(p):
            if not placed >> v & 1 and down[v] & ~placed == 0:
                order.append(v)
                placed |= 1 << v
                break
    return order


class Poset:
    """Immutable finite poset on elements ``0..p-1`` with natural labeling.

    ``names`` optionally records where each element came from (product pairs,
    Ferrers cells and so on); it never affects equality.
    """

    __slots__ = ("p", "covers", "_up", "_down", "names")

    def __init__(self, p: int, relation: Iterable[tuple[int, int]] = (), names=None):
        if p < 0:
            raise ValueError("poset size must be >= 0")
        relation = list(relation)
        for a, b in relation:
            if not (0 <= a < p and 0 <= b < p):
                raise ValueError(f"pair ({a}, {b}) out of range for p={p}")
        up = _closure_from_relation(p, relation)
        order = _natural_order(p, up)
        relabel = {old: new for new, old in enumerate(order)}
        new_up = [0] * p
        for old in range(p):
            m = 0
            for w in _bits(up[old]):
                m |= 1 << relabel[w]
            new_up[relabel[old]] = m
        down = [0] * p
        for a in range(p):
            for b in _bits(new_up[a]):
                down[b] |= 1 << a
        covers = []
        for a in range(p):
            for b in _bits(new_up[a]):
                if new_up[a] & down[b] == 0:
                    covers.append((a, b))
        self.p = p
        self.covers = tuple(sorted(covers))
        self._up = tuple(new_up)
        self._down = tuple(down)
        if names is not None:
            names = tuple(names)
            self.names = tuple(names[old] for old in order)
        else:
            self.names = None

    def __len__(self):
        return self.p

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.p == other.p and self.covers == other.covers

    def __hash__(self):
        return hash((self.p, self.covers))

    def __repr__(self):
        return f"Poset(p={self.p}, covers={list(self.covers)})"

    def less(self, a: int, b: int) -> bool:
        return bool(self._up[a] >> b & 1)

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b)

    def above(self, a: int) -> int:
        """Bitmask of elements strictly above ``a``."""
        return self._up[a]

    def below(self, a: int) -> int:
        return self._down[a]

    def lower_covers(self, b: int) -> list[int]:
        return [a for a, c in self.covers if c == b]

    def upper_covers(self, a: int) -> list[int]:
        return [c for b, c in self.covers if b == a]

    def relations(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.p) for b in _bits(self._up[a])]

    def maximal(self) -> list[int]:
        return [a for a in range(self.p) if self._up[a] == 0]

    def minimal(self) -> list[int]:
        return [a for a in range(self.p) if self._down[a] == 0]

    def validate(self) -> None:
        """Recheck the stored invariants from scratch (used by tests)."""
        for a, b in self.covers:
            assert a < b, "labeling is not natural"
        up = _closure_from_relation(self.p, self.covers)
        assert tuple(up) == self._up, "closure mismatch"
        for a in range(self.p):
            assert not self.less(a, a)
            for b in _bits(self._up[a]):
                assert self._up[b] & ~self._up[a] == 0, "closure not transitive"
        for a, b in self.covers:
            assert self._up[a] & self._down[b] == 0, "redundant cover"

    def dump(self) -> str:
        """Canonical text form: ``p=<size>`` then one ``a<b`` per cover."""
        lines = [f"p={self.p}"]
        lines += [f"{a}<{b}" for a, b in self.covers]
        return "\n".join(lines)


def poset_from_covers(p: int, covers: Iterable[tuple[int, int]]) -> Poset:
    return Poset(p, covers)


# -- partitions -------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(sum(1 for x in self.parts if x > j) for j in range(self.parts[0]))

    def cells(self) -> list[tuple[int, int]]:
        """1-based (row, column) cells in reading order."""
        return [(i + 1, j + 1) for i, row in enumerate(self.parts) for j in range(row)]

    def hook(self, i: int, j: int) -> int:
        conj = self.conjugate()
        return self.parts[i - 1] + conj[j - 1] - i - j + 1

    @staticmethod
    def content(i: int, j: int) -> int:
        return j - i

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_of(m: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of m, largest part first."""
    if max_part is None:
        max_part = m
    if m == 0:
        return [Partition(())]
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


# -- named families ---------------------------------------------------------


def chain(k: int) -> Poset:
    return Poset(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return Poset(k)


def boolean(m: int) -> Poset:
    if not 0 <= m <= 5:
        raise ValueError("boolean lattice rank must be in 0..5")
    size = 1 << m
    covers = [(s, s | 1 << i) for s in range(size) for i in range(m) if not s >> i & 1]
    return Poset(size, covers)


def ferrers(shape) -> Poset:
    """Ferrers poset: cell (1,1) is the unique maximum; each cell covers
    its right and lower neighbours."""
    lam = shape if isinstance(shape, Partition) else Partition(shape)
    cells = lam.cells()
    index = {c: k for k, c in enumerate(cells)}
    covers = []
    for (i, j), k in index.items():
        if (i, j + 1) in index:
            covers.append((index[(i, j + 1)], k))
        if (i + 1, j) in index:
            covers.append((index[(i + 1, j)], k))
    return Poset(len(cells), covers, names=cells)


def v_poset() -> Poset:
    """Two incomparable elements below a common top."""
    return Poset(3, [(0, 2), (1, 2)])


def diamond() -> Poset:
    return Poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def bar_kk(k: int) -> Poset:
    """Incomplete ladder: chain a_k < ... < a_1 with a pendant b_i < a_i."""
    if k < 1:
        raise ValueError("bar_kk needs k >= 1")
    # a_i -> 2(i-1), b_i -> 2(i-1)+1
    a = lambda i: 2 * (i - 1)
    b = lambda i: 2 * (i - 1) + 1
    covers = [(a(i + 1), a(i)) for i in range(1, k)]
    covers += [(b(i), a(i)) for i in range(1, k + 1)]
    names = [f"{'ab'[v % 2]}{v // 2 + 1}" for v in range(2 * k)]
    return Poset(2 * k, covers, names=names)


FAMILIES = ("chain", "antichain", "boolean", "ferrers", "v", "diamond", "bar_kk")


def build_named(name: str, *params) -> Poset:
    if name in ("chain", "I"):
        (k,) = _int_params(name, params, 1)
        return chain(k)
    if name == "antichain":
        (k,) = _int_params(name, params, 1)
        return antichain(k)
    if name == "boolean":
        (m,) = _int_params(name, params, 1)
        return boolean(m)
    if name == "ferrers":
        parts = params[0] if len(params) == 1 and not isinstance(params[0], int) else params
        return ferrers(Partition(parts))
    if name == "v":
        _int_params(name, params, 0)
        return v_poset()
    if name == "diamond":
        _int_params(name, params, 0)
        return diamond()
    if name == "bar_kk":
        (k,) = _int_params(name, params, 1)
        return bar_kk(k)
    raise ValueError(f"unknown poset family {name!r}")


def _int_params(name, params, count):
    if len(params) != count or not all(isinstance(x, int) and x >= 0 for x in params):
        raise ValueError(f"{name} takes {count} non-negative integer parameter(s), got {params!r}")
    return params


# -- operations -------------------------------------------------------------


def dual(P: Poset) -> Poset:
    # i -> p-1-i keeps the labeling natural, so dual(dual(P)) == P exactly
    top = P.p - 1
    names = P.names[::-1] if P.names is not None else None
    return Poset(P.p, [(top - b, top - a) for a, b in P.covers], names=names)


def _names(P: Poset):
    return P.names if P.names is not None else tuple(range(P.p))


def direct_sum(P: Poset, Q: Poset) -> Poset:
    shift = P.p
    covers = list(P.covers) + [(a + shift, b + shift) for a, b in Q.covers]
    return Poset(P.p + Q.p, covers)


def ordinal_sum(P: Poset, Q: Poset) -> Poset:
    shift = P.p
    covers = list(P.covers) + [(a + shift, b + shift) for a, b in Q.covers]
    covers += [(a, b + shift) for a in P.maximal() for b in Q.minimal()]
    return Poset(P.p + Q.p, covers)


def glue(P: Poset, Q: Poset) -> Poset:
    """Identify the unique maximum of P with the unique minimum of Q."""
    tops, bottoms = P.maximal(), Q.minimal()
    if len(tops) != 1:
        raise PreconditionError(f"glue: left poset has {len(tops)} maximal elements")
    if len(bottoms) != 1:
        raise PreconditionError(f"glue: right poset has {len(bottoms)} minimal elements")
    u, v = tops[0], bottoms[0]
    # Q's elements other than v follow P's; v becomes u.
    mapping = {}
    nxt = P.p
    for q in range(Q.p):
        if q == v:
            mapping[q] = u
        else:
            mapping[q] = nxt
            nxt += 1
    covers = list(P.covers) + [(mapping[a], mapping[b]) for a, b in Q.covers]
    return Poset(P.p + Q.p - 1, covers)


def direct_product(P: Poset, Q: Poset) -> Poset:
    idx = lambda s, t: s * Q.p + t
    covers = [(idx(a, t), idx(b, t)) for a, b in P.covers for t in range(Q.p)]
    covers += [(idx(s, a), idx(s, b)) for s in range(P.p) for a, b in Q.covers]
    names = [(s, t) for s in _names(P) for t in _names(Q)]
    return Poset(P.p * Q.p, covers, names=names)


def ordinal_product(P: Poset, Q: Poset) -> Poset:
    """(s,t) <= (s',t') iff s = s' and t <= t', or s < s'."""
    idx = lambda s, t: s * Q.p + t
    relation = [(idx(s, a), idx(s, b)) for s in range(P.p) for a, b in Q.covers]
    relation += [
        (idx(s, t), idx(s2, t2))
        for s, s2 in P.relations()
        for t in range(Q.p)
        for t2 in range(Q.p)
    ]
    names = [(s, t) for s in _names(P) for t in _names(Q)]
    return Poset(P.p * Q.p, relation, names=names)


def pow_oplus(P: Poset, k: int) -> Poset:
    if k < 1:
        raise ValueError("power must be >= 1")
    out = P
    for _ in range(k - 1):
        out = ordinal_sum(out, P)
    return out


def pow_glue(P: Poset, k: int) -> Poset:
    if k < 1:
        raise ValueError("power must be >= 1")
    out = P
    for _ in range(k - 1):
        out = glue(out, P)
    return out


# -- isomorphism ------------------------------------------------------------

ISOMORPHISM_CAP = 10


def _signature(P: Poset, a: int) -> tuple:
    return (
        bin(P.below(a)).count("1"),
        bin(P.above(a)).count("1"),
        len(P.lower_covers(a)),
        len(P.upper_covers(a)),
    )


def is_isomorphic(P: Poset, Q: Poset, cap: int = ISOMORPHISM_CAP) -> bool:
    """Order isomorphism test by signature-pruned backtracking."""
    if P.p != Q.p:
        return False
    if P.p > cap:
        raise CapExceeded(f"isomorphism test capped at {cap} elements (got {P.p})")
    if len(P.covers) != len(Q.covers):
        return False
    sp = [_signature(P, a) for a in range(P.p)]
    sq = [_signature(Q, a) for a in range(Q.p)]
    if sorted(sp) != sorted(sq):
        return False
    image = [-1] * P.p
    used = [False] * Q.p

    def extend(a: int) -> bool:
        if a == P.p:
            return True
        for b in range(Q.p):
            if used[b] or sq[b] != sp[a]:
                continue
            ok = True
            for c in range(a):
                if P.less(c, a) != Q.less(image[c], b) or P.less(a, c) != Q.less(b, image[c]):
                    ok = False
                    break
            if ok:
                image[a] = b
                used[b] = True
                if extend(a + 1):
                    return True
                used[b] = False
        image[a] = -1
        return False

    return extend(0)


def brute_isomorphic(P: Poset, Q: Poset) -> bool:
    """Reference check over all bijections; only for tiny posets."""
    if P.p != Q.p:
        return False
    rel_q = set(Q.relations())
    rel_p = P.relations()
    return any(
        {(perm[a], perm[b]) for a, b in rel_p} == rel_q for perm in permutations(range(P.p))
    )
