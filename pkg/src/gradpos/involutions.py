"""Order-reversing involutions of Delta(1) and self-complementary ideals."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, InvariantViolation
from .gradings import GradingSpec
from .poset import bits, enumerate_lower_ideals
from .root_system import apply_word, longest_element_word


@dataclass(frozen=True)
class Involution:
    perm: tuple

    def __call__(self, x):
        return self.perm[x]

    def image(self, mask):
        out = 0
        for x in bits(mask):
            out |= 1 << self.perm[x]
        return out


def is_order_reversing_involution(P, perm):
    n = P.n_elements
    if sorted(perm) != list(range(n)):
        return False
    if any(perm[perm[x]] != x for x in range(n)):
        return False
    # covers reversed => order reversed
    return all(P.lower_covers[perm[a]] >> perm[b] & 1 for a, b in P.covers)


def check_involution(P, c):
    if not is_order_reversing_involution(P, c.perm):
        raise InvalidInput("not an order-reversing involution of P")
    d = P.height
    if any(P.rank[c(x)] != d + 1 - P.rank[x] for x in range(P.n_elements)):
        raise InvalidInput("involution does not flip ranks")


def grading_involution(spec, P=None):
    """The action of the longest element of W(g(0)) on Delta(1).

    g(0) is spanned by the simple roots of degree zero.  Raises
    InvariantViolation if the image leaves Delta(1) or the induced map is
    not an order-reversing involution.
    """
    rs = spec.rs
    P = spec.delta1() if P is None else P
    word = longest_element_word(rs, spec.degree_zero_simple())
    index = {root: k for k, root in enumerate(P.labels)}
    perm = []
    for root in P.labels:
        img = apply_word(rs, word, root)
        if img not in index:
            raise InvariantViolation(f"w0 sends {root} to {img}, outside Delta(1)")
        perm.append(index[img])
    perm = tuple(perm)
    if not is_order_reversing_involution(P, perm):
        raise InvariantViolation(f"w0 action on {spec.label} is not an order-reversing involution")
    return Involution(perm)


def w0i_involution(rs, i):
    """w_0^i acting on [alpha_i]; g(0) has simple roots Pi minus {alpha_i}."""
    return grading_involution(GradingSpec(rs, "standard", i))


def product_involution(c1, n1, c2, n2):
    """c1 x c2 on a product poset indexed u * n2 + v."""
    return Involution(tuple(c1(u) * n2 + c2(v) for u in range(n1) for v in range(n2)))


def chain_involution(k):
    """j -> k + 1 - j on [k]."""
    return Involution(tuple(range(k - 1, -1, -1)))


def complement_ideal(P, c, I, check=True):
    """I^c = P minus c(I)."""
    if check:
        if not P.is_lower_ideal(I):
            raise InvalidInput("not a lower ideal")
        check_involution(P, c)
    return P.full & ~c.image(I)


def self_complementary_ideals(P, c, limit=None):
    check_involution(P, c)
    return [I for I in enumerate_lower_ideals(P, limit) if complement_ideal(P, c, I, check=False) == I]


def count_self_complementary(P, c, limit=None):
    return len(self_complementary_ideals(P, c, limit))


def fixed_points(P, c):
    return [x for x in range(P.n_elements) if c(x) == x]
