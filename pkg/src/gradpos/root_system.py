"""Root systems of the simple Lie algebras, in simple-root coordinates.

Roots are integer coefficient vectors over the simple roots.  Simple
roots are numbered 1..rank as follows:

* A_n:  chain 1 - 2 - ... - n
* B_n:  alpha_n = e_n is the short simple root
* C_n:  alpha_n = 2 e_n is the long simple root
* D_n:  alpha_n = e_{n-1} + e_n, attached to alpha_{n-2}
* E_n:  1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 attached to 4 (Bourbaki/Kac)
* F_4:  1 - 2 => 3 - 4 with alpha_1, alpha_2 short
* G_2:  alpha_1 short, alpha_2 long

The Cartan matrix is ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import InvalidInput

Root = tuple  # tuple[int, ...]

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class ReflectionWord:
    """A word s_{j1} s_{j2} ... s_{jk} in the simple reflections (1-based)."""

    letters: tuple = ()

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple
    symmetrizer: tuple
    positive_roots: tuple = field(repr=False)
    simple_labels: str = "standard"

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    def simple_root(self, i):
        """The simple root alpha_i, 1-based."""
        return tuple(int(k == i - 1) for k in range(self.rank))

    @property
    def root_set(self):
        return _root_set(self)

    def is_root(self, v):
        v = tuple(v)
        return v in self.root_set or tuple(-x for x in v) in self.root_set

    def form(self, a, b):
        """The W-invariant form (a, b) with (alpha_i, alpha_i) = 2 d_i."""
        c, d = self.cartan, self.symmetrizer
        return sum(
            a[i] * b[j] * d[i] * c[i][j]
            for i in range(self.rank) if a[i]
            for j in range(self.rank) if b[j]
        )

    def dual(self):
        """The dual root system: transposed Cartan matrix, same indices.

        The coroot alpha^vee of a root alpha of this system is a root of
        the dual with coefficients alpha_i * d_i / d(alpha).
        """
        family = {"B": "C", "C": "B"}.get(self.family, self.family)
        cartan = tuple(zip(*self.cartan))
        labels = "dual" if self.simple_labels == "standard" else "standard"
        return _from_cartan(family, self.rank, cartan, labels)

    def coroot(self, a):
        """Coefficients of a^vee over the simple coroots."""
        norm = Fraction(self.form(a, a), 2)
        out = []
        for i in range(self.rank):
            x = Fraction(a[i] * self.symmetrizer[i]) / norm
            if x.denominator != 1:
                raise InvalidInput(f"{a} is not a root of {self.name}")
            out.append(int(x))
        return tuple(out)


def height(root):
    return sum(root)


def _chain(n):
    return [(k, k + 1, -1, -1) for k in range(n - 1)]


def _bonds(family, rank):
    """Dynkin bonds as (i, j, a_ij, a_ji), 0-based."""
    if family == "A":
        return _chain(rank)
    if family == "B":
        return _chain(rank - 1) + [(rank - 2, rank - 1, -1, -2)]
    if family == "C":
        return _chain(rank - 1) + [(rank - 2, rank - 1, -2, -1)]
    if family == "D":
        return _chain(rank - 1) + [(rank - 3, rank - 1, -1, -1)]
    if family == "E":
        bonds = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        bonds += [(5, 6), (6, 7)][: rank - 6]
        return [(i, j, -1, -1) for i, j in bonds]
    if family == "F":
        return [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
    if family == "G":
        return [(0, 1, -3, -1)]
    raise InvalidInput(f"unknown family {family!r}")


def _valid(family, rank):
    return (
        (family == "A" and rank >= 1)
        or (family == "B" and rank >= 2)
        or (family == "C" and rank >= 3)
        or (family == "D" and rank >= 4)
        or (family == "E" and rank in (6, 7, 8))
        or (family == "F" and rank == 4)
        or (family == "G" and rank == 2)
    )


def _symmetrize(cartan):
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    return tuple(ints)


def _generate_positive_roots(cartan):
    """Positive roots by height, using the root-string bound."""
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    known = set(simple)
    level = list(simple)
    roots = []
    while level:
        roots.extend(sorted(level))
        nxt = set()
        for v in level:
            for j in range(n):
                # p: how far the alpha_j string extends downward from v
                p = 0
                w = list(v)
                while True:
                    w[j] -= 1
                    if tuple(w) in known:
                        p += 1
                    else:
                        break
                pair = sum(v[i] * cartan[j][i] for i in range(n))
                if p - pair > 0:
                    u = list(v)
                    u[j] += 1
                    nxt.add(tuple(u))
        known.update(nxt)
        level = sorted(nxt)
    return tuple(roots)


def _from_cartan(family, rank, cartan, labels="standard"):
    cartan = tuple(tuple(row) for row in cartan)
    return RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        symmetrizer=_symmetrize(cartan),
        positive_roots=_generate_positive_roots(cartan),
        simple_labels=labels,
    )


@lru_cache(maxsize=None)
def build_root_system(family, rank):
    family = str(family).upper()
    if not isinstance(rank, int) or family not in FAMILIES or not _valid(family, rank):
        raise InvalidInput(f"{family}{rank} is not a supported simple type")
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, aij, aji in _bonds(family, rank):
        cartan[i][j] = aij
        cartan[j][i] = aji
    return _from_cartan(family, rank, cartan)


def parse_type(name):
    """'E8' -> build_root_system('E', 8)."""
    name = name.strip()
    try:
        return build_root_system(name[0].upper(), int(name[1:]))
    except (IndexError, ValueError) as exc:
        raise InvalidInput(f"cannot parse type {name!r}") from exc


@lru_cache(maxsize=None)
def _root_set(rs):
    return frozenset(rs.positive_roots)


def pairing(rs, a, b):
    """<a, b^vee> = 2 (a, b) / (b, b).

    Returns an int whenever the value is integral (always the case when
    ``b`` is a root), otherwise a Fraction.
    """
    if not any(b):
        raise InvalidInput("cannot pair against the zero vector")
    val = Fraction(2 * rs.form(a, b), rs.form(b, b))
    return int(val) if val.denominator == 1 else val


def highest_root(rs):
    top = max(rs.positive_roots, key=lambda r: (height(r), r))
    return top


def reflect(rs, j, v):
    """s_j(v) = v - <v, alpha_j^vee> alpha_j for a 1-based index j."""
    k = j - 1
    c = sum(v[i] * rs.cartan[k][i] for i in range(rs.rank))
    out = list(v)
    out[k] -= c
    return tuple(out)


def apply_word(rs, w, v):
    """Apply the Weyl element s_{j1} s_{j2} ... s_{jk} to v.

    As a product of maps the rightmost letter acts first.
    """
    v = tuple(v)
    for j in reversed(w.letters):
        v = reflect(rs, j, v)
    return v


def longest_element_word(rs, subset_J):
    """Greedy reduced word for the longest element of W_J.

    Starting from the identity w, repeatedly append the smallest s_j
    (j in J) with w(alpha_j) > 0.  Each step lengthens w by one and the
    loop ends exactly at w_0^J.
    """
    J = sorted(set(subset_J))
    for j in J:
        if not 1 <= j <= rs.rank:
            raise InvalidInput(f"simple index {j} out of range for {rs.name}")
    n = rs.rank
    # cols[k] = w(alpha_{k+1}); updated as w -> w s_j
    cols = [rs.simple_root(k + 1) for k in range(n)]
    letters = []
    while True:
        for j in J:
            if any(x > 0 for x in cols[j - 1]):
                break
        else:
            return ReflectionWord(tuple(letters))
        cj = cols[j - 1]
        row = rs.cartan[j - 1]
        cols = [
            tuple(ck[i] - row[k] * cj[i] for i in range(n)) if row[k] else ck
            for k, ck in enumerate(cols)
        ]
        letters.append(j)


def positive_roots_of_subsystem(rs, subset_J):
    """Positive roots supported on the simple roots indexed by J."""
    J = {j - 1 for j in subset_J}
    return [r for r in rs.positive_roots if all(r[k] == 0 for k in range(rs.rank) if k not in J)]
