"""Finite graded posets, their lower ideals and antichains.

Elements are the integers ``0..n-1``; subsets of elements are Python
ints used as bitsets.  A ``GradedPoset`` is defined by its cover
relation and carries the rank function normalised so that minimal
elements have rank 1.
"""
from __future__ import annotations

import os
from functools import cached_property
from itertools import combinations

from .errors import EnumerationLimitError, InvalidInput, NotGradedError

DEFAULT_MAX_IDEALS = 10**6


def max_ideals():
    """The enumeration bound, overridable through GRADPOS_MAX_IDEALS."""
    raw = os.environ.get("GRADPOS_MAX_IDEALS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InvalidInput(f"GRADPOS_MAX_IDEALS={raw!r} is not an integer") from None
    return DEFAULT_MAX_IDEALS


def bits(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(elements):
    m = 0
    for x in elements:
        m |= 1 << x
    return m


class GradedPoset:
    """A finite graded poset given by its Hasse diagram.

    ``rank`` may be omitted, in which case it is computed from the
    covers; either way the poset is checked to be graded in the strong
    sense (every maximal chain has the same length).
    """

    def __init__(self, n_elements, covers, rank=None, labels=None, name=None):
        self.n_elements = n = int(n_elements)
        self.covers = tuple(sorted({(int(a), int(b)) for a, b in covers}))
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        self.name = name
        if len(self.labels) != n:
            raise InvalidInput("one label per element is required")
        lower = [0] * n
        upper = [0] * n
        for a, b in self.covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise InvalidInput(f"bad cover ({a}, {b})")
            lower[b] |= 1 << a
            upper[a] |= 1 << b
        self.lower_covers = tuple(lower)
        self.upper_covers = tuple(upper)
        computed = self._compute_rank()
        if rank is not None and tuple(rank) != computed:
            raise NotGradedError("supplied rank function disagrees with the covers")
        self.rank = computed
        self._check_reduced()

    def _compute_rank(self):
        n = self.n_elements
        rank = [0] * n
        indeg = [len(bits(m)) for m in self.lower_covers]
        queue = [x for x in range(n) if indeg[x] == 0]
        for x in queue:
            rank[x] = 1
        seen = 0
        while seen < len(queue):
            x = queue[seen]
            seen += 1
            for y in bits(self.upper_covers[x]):
                if rank[y] and rank[y] != rank[x] + 1:
                    raise NotGradedError("cover relation admits no rank function")
                rank[y] = rank[x] + 1
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if seen != n:
            raise InvalidInput("cover relation has a cycle")
        # every element must have its rank forced consistently from all sides
        for a, b in self.covers:
            if rank[b] != rank[a] + 1:
                raise NotGradedError("cover relation admits no rank function")
        tops = {rank[x] for x in range(n) if not self.upper_covers[x]}
        if len(tops) > 1:
            raise NotGradedError("maximal chains of different lengths")
        return tuple(rank)

    def _check_reduced(self):
        for a, b in self.covers:
            others = self.lower_covers[b] & ~(1 << a)
            if any(self.down[c] >> a & 1 for c in bits(others)):
                raise InvalidInput(f"cover ({a}, {b}) is implied by transitivity")

    def __len__(self):
        return self.n_elements

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<GradedPoset{tag} n={self.n_elements} covers={len(self.covers)}>"

    @cached_property
    def order(self):
        """Elements sorted by rank, a linear extension."""
        return tuple(sorted(range(self.n_elements), key=lambda x: (self.rank[x], x)))

    @cached_property
    def down(self):
        """down[x]: bitset of {y <= x}."""
        d = [0] * self.n_elements
        for x in self.order:
            m = 1 << x
            for y in bits(self.lower_covers[x]):
                m |= d[y]
            d[x] = m
        return tuple(d)

    @cached_property
    def up(self):
        u = [0] * self.n_elements
        for x in reversed(self.order):
            m = 1 << x
            for y in bits(self.upper_covers[x]):
                m |= u[y]
            u[x] = m
        return tuple(u)

    @property
    def full(self):
        return (1 << self.n_elements) - 1

    @property
    def height(self):
        """Number of rank levels."""
        return max(self.rank, default=0)

    def leq(self, x, y):
        return bool(self.down[y] >> x & 1)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def is_lower_ideal(self, mask):
        return all(self.lower_covers[x] & ~mask == 0 for x in bits(mask))

    def is_antichain(self, mask):
        return all((self.down[x] | self.up[x]) & mask == 1 << x for x in bits(mask))

    def ideal_generated(self, mask):
        out = 0
        for x in bits(mask):
            out |= self.down[x]
        return out

    def upper_generated(self, mask):
        out = 0
        for x in bits(mask):
            out |= self.up[x]
        return out

    def minimal(self, mask):
        """Minimal elements of the subset ``mask``."""
        return to_mask(x for x in bits(mask) if self.down[x] & mask == 1 << x)

    def maximal(self, mask):
        return to_mask(x for x in bits(mask) if self.up[x] & mask == 1 << x)

    def dual(self):
        return GradedPoset(
            self.n_elements, [(b, a) for a, b in self.covers], labels=self.labels,
            name=f"{self.name}^op" if self.name else None,
        )

    def relabel(self, labels=None, name=None):
        labels = self.labels if labels is None else labels
        return GradedPoset(self.n_elements, self.covers, labels=labels, name=name or self.name)


# -- constructors ---------------------------------------------------------


def make_chain(k):
    if k < 0:
        raise InvalidInput("chain length must be nonnegative")
    return GradedPoset(
        k, [(i, i + 1) for i in range(k - 1)], labels=range(1, k + 1), name=f"[{k}]"
    )


def product(P, Q):
    """Cartesian product with componentwise order; (u, v) has index u*|Q| + v."""
    nq = Q.n_elements
    covers = []
    for a, b in P.covers:
        covers += [(a * nq + v, b * nq + v) for v in range(nq)]
    for a, b in Q.covers:
        covers += [(u * nq + a, u * nq + b) for u in range(P.n_elements)]
    labels = [(p, q) for p in P.labels for q in Q.labels]
    name = f"{P.name}x{Q.name}" if P.name and Q.name else None
    return GradedPoset(P.n_elements * nq, covers, labels=labels, name=name)


def disjoint_union(parts):
    covers, labels, off = [], [], 0
    for i, P in enumerate(parts):
        covers += [(a + off, b + off) for a, b in P.covers]
        labels += [(i, x) for x in P.labels]
        off += P.n_elements
    return GradedPoset(off, covers, labels=labels)


def ordinal_sum(parts, labels=None, name=None):
    """Stack ``parts`` so each lies entirely below the next."""
    parts = list(parts)
    if not parts:
        raise InvalidInput("ordinal sum of no posets")
    covers, off, prev_max = [], 0, []
    default_labels = []
    for i, P in enumerate(parts):
        mins = [x + off for x in range(P.n_elements) if not P.lower_covers[x]]
        covers += [(a + off, b + off) for a, b in P.covers]
        covers += [(a, b) for a in prev_max for b in mins]
        if P.n_elements:
            prev_max = [x + off for x in range(P.n_elements) if not P.upper_covers[x]]
        default_labels += [(i, x) for x in P.labels]
        off += P.n_elements
    return GradedPoset(off, covers, labels=labels or default_labels, name=name)


def make_K(r):
    """K_r = [r] + ([1] |_| [1]) + [r] as an ordinal sum, labelled
    1, ..., r+1, (r+1)', r+2, ..., 2r+1."""
    if r < 1:
        raise InvalidInput("K_r needs r >= 1")
    labels = [str(i) for i in range(1, r + 2)] + [f"{r + 1}'"]
    labels += [str(i) for i in range(r + 2, 2 * r + 2)]
    return ordinal_sum(
        [make_chain(r), disjoint_union([make_chain(1), make_chain(1)]), make_chain(r)],
        labels=labels, name=f"K{r}",
    )


# -- ideals and antichains ------------------------------------------------


def _lex_key(mask):
    return (bin(mask).count("1"), bits(mask))


def iter_ideal_levels(P, limit=None):
    """Yield the lower ideals of P grouped by size (unsorted within a level)."""
    limit = max_ideals() if limit is None else limit
    level = {0}
    count = 0
    lower = P.lower_covers
    while level:
        count += len(level)
        if count > limit:
            raise EnumerationLimitError(f"lower ideals of {P.name or 'poset'}", limit)
        yield level
        nxt = set()
        for I in level:
            free = P.full & ~I
            while free:
                low = free & -free
                free ^= low
                x = low.bit_length() - 1
                if lower[x] & ~I == 0:
                    nxt.add(I | low)
        level = nxt


def enumerate_lower_ideals(P, limit=None):
    """All lower ideals as bitsets, ordered by size then lexicographically."""
    out = []
    for level in iter_ideal_levels(P, limit):
        out.extend(sorted(level, key=_lex_key))
    return out


def count_ideals_by_size(P, limit=None):
    return [len(level) for level in iter_ideal_levels(P, limit)]


def enumerate_antichains(P, limit=None):
    """All antichains as bitsets, ordered by size then lexicographically.

    Built by a direct search over incomparability, independently of the
    ideal enumeration.
    """
    limit = max_ideals() if limit is None else limit
    n = P.n_elements
    comp = [P.down[x] | P.up[x] for x in range(n)]
    out = []
    stack = [(0, 0, 0)]  # (next index, chosen, blocked)
    while stack:
        start, chosen, blocked = stack.pop()
        out.append(chosen)
        if len(out) > limit:
            raise EnumerationLimitError(f"antichains of {P.name or 'poset'}", limit)
        for x in range(n - 1, start - 1, -1):
            if not blocked >> x & 1:
                stack.append((x + 1, chosen | 1 << x, blocked | comp[x]))
    out.sort(key=_lex_key)
    return out


def antichain_of_ideal(P, ideal):
    """I -> min(P \\ I)."""
    return P.minimal(P.full & ~ideal)


def ideal_of_antichain(P, antichain):
    """Inverse of ``antichain_of_ideal``: P minus the upper set of A."""
    return P.full & ~P.upper_generated(antichain)


def rank_levels(P):
    sizes = [0] * P.height
    for r in P.rank:
        sizes[r - 1] += 1
    return sizes


def has_unique_max_level(P):
    sizes = rank_levels(P)
    return not sizes or sizes.count(max(sizes)) == 1


def full_rank_ideal(P, i):
    """L_i: union of the first i rank levels."""
    return to_mask(x for x in range(P.n_elements) if P.rank[x] <= i)


def ideals_lattice(P, limit=None):
    """J(P): lower ideals ordered by inclusion, labelled by their bitsets."""
    ideals = enumerate_lower_ideals(P, limit)
    index = {I: k for k, I in enumerate(ideals)}
    covers = []
    for k, I in enumerate(ideals):
        free = P.full & ~I
        for x in bits(free):
            if P.lower_covers[x] & ~I == 0:
                covers.append((k, index[I | 1 << x]))
    name = f"J({P.name})" if P.name else None
    return GradedPoset(len(ideals), covers, labels=ideals, name=name)


MINUSCULE_KINDS = ("grid", "K", "H", "J2_2x3", "J3_2x3")


def make_H(r):
    """H_r, the r(r+1)/2-element minuscule poset J([2] x [r-1])."""
    if r < 1:
        raise InvalidInput("H_r needs r >= 1")
    if r == 1:
        return make_chain(1).relabel(None, name="H1")
    return ideals_lattice(product(make_chain(2), make_chain(r - 1))).relabel(None, name=f"H{r}")


def minuscule_poset(kind, *params):
    """Proctor's connected minuscule posets.

    ``grid(n, m)`` = [n] x [m]; ``K(r)``; ``H(r)``; ``J2_2x3`` and
    ``J3_2x3`` = J^2([2] x [3]) and J^3([2] x [3]).
    """
    if kind == "grid" and len(params) == 2 and min(params) >= 1:
        n, m = params
        return product(make_chain(n), make_chain(m))
    if kind == "K" and len(params) == 1:
        return make_K(params[0])
    if kind == "H" and len(params) == 1:
        return make_H(params[0])
    if kind in ("J2_2x3", "J3_2x3") and not params:
        P = product(make_chain(2), make_chain(3))
        for _ in range(2 if kind == "J2_2x3" else 3):
            P = ideals_lattice(P)
        return P.relabel(range(P.n_elements), name=kind)
    raise InvalidInput(f"unknown minuscule poset {kind}{params}")


# -- isomorphism ----------------------------------------------------------


def _joint_refine(P, Q):
    """Refine both posets with a shared colour palette."""
    n = P.n_elements
    cp = [P.rank[x] for x in range(n)]
    cq = [Q.rank[x] for x in range(Q.n_elements)]
    for _ in range(n + 1):
        sig_p = [
            (cp[x], tuple(sorted(cp[y] for y in bits(P.lower_covers[x]))),
             tuple(sorted(cp[y] for y in bits(P.upper_covers[x]))))
            for x in range(n)
        ]
        sig_q = [
            (cq[x], tuple(sorted(cq[y] for y in bits(Q.lower_covers[x]))),
             tuple(sorted(cq[y] for y in bits(Q.upper_covers[x]))))
            for x in range(Q.n_elements)
        ]
        palette = {s: k for k, s in enumerate(sorted(set(sig_p) | set(sig_q)))}
        new_p = [palette[s] for s in sig_p]
        new_q = [palette[s] for s in sig_q]
        stable = len(set(new_p)) == len(set(cp)) and len(set(new_q)) == len(set(cq))
        cp, cq = new_p, new_q
        if sorted(cp) != sorted(cq) or stable:
            break
    return cp, cq


def iter_isomorphisms(P, Q, involutive=False):
    """Yield cover-preserving bijections P -> Q as tuples.

    With ``involutive=True`` (P and Q on the same element set) only maps
    with phi(phi(x)) = x are produced.
    """
    n = P.n_elements
    if n != Q.n_elements or len(P.covers) != len(Q.covers):
        return
    if sorted(P.rank) != sorted(Q.rank):
        return
    cp, cq = _joint_refine(P, Q)
    if sorted(cp) != sorted(cq):
        return
    by_color = {}
    for y in range(n):
        by_color.setdefault(cq[y], []).append(y)
    # visit elements so that each one (after the first in its component)
    # has an already-placed neighbour
    order, seen = [], set()
    for root in sorted(range(n), key=lambda x: (len(by_color[cp[x]]), P.rank[x], x)):
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        while stack:
            x = stack.pop(0)
            order.append(x)
            for y in bits(P.lower_covers[x] | P.upper_covers[x]):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    phi = [-1] * n
    used = [False] * n

    def consistent(x, y):
        for z in bits(P.lower_covers[x]):
            if phi[z] >= 0 and not Q.lower_covers[y] >> phi[z] & 1:
                return False
        for z in bits(P.upper_covers[x]):
            if phi[z] >= 0 and not Q.upper_covers[y] >> phi[z] & 1:
                return False
        return True

    def search(k):
        if k == n:
            yield tuple(phi)
            return
        x = order[k]
        if phi[x] >= 0:
            # fixed by an involutive pairing; check it still fits
            if consistent(x, phi[x]):
                yield from search(k + 1)
            return
        for y in by_color[cp[x]]:
            if used[y] or not consistent(x, y):
                continue
            if involutive:
                if y != x and (phi[y] >= 0 or used[x] or cp[y] != cq[x]):
                    continue
            phi[x] = y
            used[y] = True
            if involutive and y != x:
                phi[y] = x
                used[x] = True
                if consistent(y, x):
                    yield from search(k + 1)
                phi[y] = -1
                used[x] = False
            else:
                yield from search(k + 1)
            phi[x] = -1
            used[y] = False

    yield from search(0)


def are_isomorphic(P, Q):
    """A rank- and cover-preserving bijection P -> Q, or None."""
    return next(iter_isomorphisms(P, Q), None)


def order_reversing_involutions(P):
    """All order-reversing involutions of P (as permutation tuples)."""
    return list(iter_isomorphisms(P, P.dual(), involutive=True))


def brute_force_ideals(P):
    """All subsets closed downward, by filtering 2^n subsets (small P only)."""
    n = P.n_elements
    if n > 20:
        raise InvalidInput("brute force filtering is limited to 20 elements")
    return sorted((m for m in range(1 << n) if P.is_lower_ideal(m)), key=_lex_key)


def brute_force_antichains(P):
    n = P.n_elements
    if n > 20:
        raise InvalidInput("brute force filtering is limited to 20 elements")
    out = []
    for k in range(n + 1):
        for c in combinations(range(n), k):
            if all(not P.comparable(a, b) for a, b in combinations(c, 2)):
                out.append(to_mask(c))
    return sorted(out, key=_lex_key)
