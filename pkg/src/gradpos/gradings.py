"""Delta(1) for 1-standard and extra-special Z-gradings."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .poset import GradedPoset
from .root_system import height, highest_root, pairing


@dataclass(frozen=True)
class GradingSpec:
    """``kind`` is ``"standard"`` (with simple index ``i``) or ``"extra-special"``."""

    rs: object
    kind: str
    i: int | None = None

    def __post_init__(self):
        if self.kind == "standard":
            if self.i is None or not 1 <= self.i <= self.rs.rank:
                raise InvalidInput(f"simple index {self.i} out of range for {self.rs.name}")
        elif self.kind != "extra-special":
            raise InvalidInput(f"unknown grading kind {self.kind!r}")

    @property
    def label(self):
        if self.kind == "standard":
            return f"[alpha_{self.i}]({self.rs.name})"
        return f"extra-special({self.rs.name})"

    def degree(self, root):
        """Degree of a root in this grading."""
        if self.kind == "standard":
            return root[self.i - 1]
        return pairing(self.rs, root, highest_root(self.rs))

    def degree_zero_simple(self):
        """Indices of the simple roots spanning g(0)."""
        return [j for j in range(1, self.rs.rank + 1) if self.degree(self.rs.simple_root(j)) == 0]

    def delta1(self):
        roots = [r for r in self.rs.positive_roots if self.degree(r) == 1]
        return root_poset(roots, name=self.label)


@dataclass(frozen=True)
class InvariantsReport:
    coxeter_h: int
    dual_coxeter_hstar: int
    num_long_simple: int
    delta1_size: int


def root_poset(roots, name=None):
    """The poset on ``roots`` ordered by nonnegativity of differences.

    Elements are sorted by height, then coefficient vector; covers are
    differences equal to a single simple root.
    """
    roots = sorted(set(map(tuple, roots)), key=lambda r: (height(r), r))
    index = {r: k for k, r in enumerate(roots)}
    covers = []
    for k, r in enumerate(roots):
        for j in range(len(r)):
            up = r[:j] + (r[j] + 1,) + r[j + 1:]
            if up in index:
                covers.append((k, index[up]))
    return GradedPoset(len(roots), covers, labels=roots, name=name)


def delta1(rs, i):
    """[alpha_i]: positive roots whose alpha_i-coefficient is 1."""
    return GradingSpec(rs, "standard", i).delta1()


def delta1_extra_special(rs):
    """{alpha > 0 : <alpha, theta^vee> = 1}."""
    return GradingSpec(rs, "extra-special").delta1()


def dual_coxeter_number(rs):
    """1 + height of theta^vee, read off in the dual root system."""
    theta_vee = rs.coroot(highest_root(rs))
    dual = rs.dual()
    if theta_vee not in dual.root_set:
        raise AssertionError("coroot of theta is not a root of the dual system")
    return height(theta_vee) + 1


def long_simple_roots(rs):
    d = max(rs.symmetrizer)
    return [j + 1 for j in range(rs.rank) if rs.symmetrizer[j] == d]


def invariants_report(rs):
    return InvariantsReport(
        coxeter_h=height(highest_root(rs)) + 1,
        dual_coxeter_hstar=dual_coxeter_number(rs),
        num_long_simple=len(long_simple_roots(rs)),
        delta1_size=delta1_extra_special(rs).n_elements,
    )


def parse_grading(rs, selector):
    """'standard:3' or 'extra-special' -> GradingSpec."""
    selector = selector.strip().lower()
    if selector in ("extra-special", "extraspecial", "es"):
        return GradingSpec(rs, "extra-special")
    kind, _, idx = selector.partition(":")
    if kind in ("standard", "std", "1-standard") and idx:
        try:
            return GradingSpec(rs, "standard", int(idx))
        except ValueError:
            pass
    raise InvalidInput(f"cannot parse grading selector {selector!r}")
