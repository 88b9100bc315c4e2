"""Panyushev complement (rowmotion), orbits and cyclic sieving."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import lcm

from .errors import InvalidInput
from .involutions import Involution, check_involution, complement_ideal
from .poset import bits, enumerate_lower_ideals, iter_isomorphisms
from .polynomials import m_polynomial


def panyushev_complement(P, A):
    """X(A) = min(P \\ I(A)) on antichains."""
    if not P.is_antichain(A):
        raise InvalidInput("not an antichain")
    return P.minimal(P.full & ~P.ideal_generated(A))


def panyushev_inverse(P, A):
    """X'(A) = max(P \\ I_+(A))."""
    if not P.is_antichain(A):
        raise InvalidInput("not an antichain")
    return P.maximal(P.full & ~P.upper_generated(A))


def rowmotion(P, I):
    """X on lower ideals: I -> ideal generated by min(P \\ I)."""
    out = 0
    comp = P.full & ~I
    for x in bits(comp):
        if P.lower_covers[x] & ~I == 0:
            out |= P.down[x]
    return out


def rowmotion_inverse(P, I):
    """X' on lower ideals: I -> P minus the upper set of max(I)."""
    return P.full & ~P.upper_generated(P.maximal(I))


@dataclass(frozen=True)
class OrbitReport:
    orbits: tuple
    sizes: tuple
    ideal_size_traces: tuple
    lagrangian_counts: tuple | None = None

    @property
    def order(self):
        return lcm(*self.sizes) if self.sizes else 1

    def summary(self):
        """'11 x 2' style: orbit size x number of orbits, largest first."""
        counts = Counter(self.sizes)
        return " + ".join(f"{s} x {k}" for s, k in sorted(counts.items(), reverse=True))


def all_orbits(P, target_size=None, limit=None):
    """Partition J(P) into rowmotion orbits, seeded by the least unvisited ideal."""
    ideals = enumerate_lower_ideals(P, limit)
    seen = set()
    orbits = []
    for seed in ideals:
        if seed in seen:
            continue
        orbit = [seed]
        seen.add(seed)
        I = rowmotion(P, seed)
        while I != seed:
            orbit.append(I)
            seen.add(I)
            I = rowmotion(P, I)
        orbits.append(tuple(orbit))
    traces = tuple(tuple(sorted(bin(I).count("1") for I in o)) for o in orbits)
    lag = None
    if target_size is not None:
        lag = tuple(t.count(target_size) for t in traces)
    return OrbitReport(tuple(orbits), tuple(len(o) for o in orbits), traces, lag)


def residue_mod(p, n):
    """Coefficients of p(t) mod (t^n - 1)."""
    out = [0] * n
    for k, c in enumerate(p.coeffs):
        out[k % n] += c
    return tuple(out)


@dataclass(frozen=True)
class CSPReport:
    n: int
    residue_coeffs: tuple
    orbit_predicted: tuple
    orbit_summary: str

    @property
    def verdict(self):
        return self.residue_coeffs == self.orbit_predicted

    def residue_description(self):
        """Write the residue as  extra terms + k x [n]_t."""
        base = min(self.residue_coeffs)
        extra = [
            ("1" if i == 0 else f"t^{i}") if c - base == 1 else f"{c - base}t^{i}"
            for i, c in enumerate(self.residue_coeffs) if c != base
        ]
        parts = extra + ([f"{base} x [{self.n}]_t"] if base else [])
        return " + ".join(parts) or "0"


def csp_check(P, M=None, orbits=None, limit=None):
    """Compare M_P(t) mod (t^n - 1) with the orbit-count prediction.

    a_i must equal the number of orbits whose stabiliser order n/|O|
    divides i.
    """
    orbits = all_orbits(P, limit=limit) if orbits is None else orbits
    M = m_polynomial(P, limit) if M is None else M
    n = orbits.order
    residue = residue_mod(M, n)
    predicted = tuple(sum(1 for s in orbits.sizes if i % (n // s) == 0) for i in range(n))
    return CSPReport(n, residue, predicted, orbits.summary())


def duality_check(P, c, orbits):
    """Per orbit: is it closed under I -> I^c?"""
    check_involution(P, c)
    out = []
    for orbit in orbits.orbits:
        members = set(orbit)
        out.append(all(complement_ideal(P, c, I, check=False) in members for I in orbit))
    return tuple(out)


@dataclass(frozen=True)
class DualityResult:
    per_orbit: tuple | None
    involutions_tried: int
    satisfying: tuple

    @property
    def given_succeeds(self):
        return self.per_orbit is not None and all(self.per_orbit)


def duality_search(P, c=None, orbits=None, exhaustive=True, limit=None):
    """Look for order-reversing involutions whose ideal complement
    preserves every rowmotion orbit.  Exploration only: outcomes are
    reported, nothing is assumed."""
    orbits = all_orbits(P, limit=limit) if orbits is None else orbits
    per_orbit = duality_check(P, c, orbits) if c is not None else None
    satisfying = []
    tried = 0
    if exhaustive:
        if P.n_elements > 64:
            raise InvalidInput("exhaustive involution search is limited to 64 elements")
        for perm in iter_isomorphisms(P, P.dual(), involutive=True):
            tried += 1
            if all(duality_check(P, Involution(perm), orbits)):
                satisfying.append(perm)
    return DualityResult(per_orbit, tried, tuple(satisfying))
