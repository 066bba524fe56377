"""Ideals of finite rings: construction, enumeration, and arithmetic.

Everything here is a pure function of immutable inputs; enumeration results
are cached on the ring and returned in a canonical deterministic order
(by size, then lexicographically by element tuple).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ImproperIdealError,
    InvalidConstructionError,
    NotIdealError,
    ResourceLimitError,
    RingMismatchError,
)
from .ring_core import DEFAULT_MAX_ORDER, FiniteRing

DEFAULT_MAX_IDEALS = 4096


@dataclass(frozen=True, eq=False)
class Ideal:
    """A canonical ideal: sorted element indices of one ring."""

    ring: FiniteRing
    elems: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.ring is other.ring
            and self.elems == other.elems
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.elems))

    def __repr__(self) -> str:
        inside = ",".join(self.ring.names[e] for e in self.elems[:6])
        if len(self.elems) > 6:
            inside += ",..."
        return f"<Ideal {{{inside}}} of {self.ring.label}>"

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, a: int) -> bool:
        return a in self.elem_set

    @property
    def elem_set(self) -> frozenset[int]:
        s = self._cache.get("set")
        if s is None:
            s = frozenset(self.elems)
            self._cache["set"] = s
        return s

    @property
    def mask(self) -> np.ndarray:
        m = self._cache.get("mask")
        if m is None:
            m = np.zeros(self.ring.order, dtype=bool)
            m[list(self.elems)] = True
            self._cache["mask"] = m
        return m

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.elem_set

    @property
    def is_zero(self) -> bool:
        return self.elems == (self.ring.zero,)

    def names(self) -> tuple[str, ...]:
        return self.ring.names_of(self.elems)

    @staticmethod
    def _trusted(ring: FiniteRing, elems: Iterable[int]) -> "Ideal":
        return Ideal(ring, tuple(sorted(int(e) for e in elems)))

    @staticmethod
    def from_elems(ring: FiniteRing, elems: Iterable[int]) -> "Ideal":
        """Validated constructor: checks zero membership and both closures."""
        ideal = Ideal._trusted(ring, elems)
        s = ideal.elem_set
        if ring.zero not in s:
            raise NotIdealError("an ideal must contain zero")
        for x in ideal.elems:
            for y in ideal.elems:
                if ring.add[x][y] not in s:
                    raise NotIdealError(
                        f"not closed under addition: {ring.names[x]} + {ring.names[y]}"
                    )
        for r in range(ring.order):
            row = ring.mul[r]
            for x in ideal.elems:
                if row[x] not in s:
                    raise NotIdealError(
                        f"not closed under multiplication: {ring.names[r]} * {ring.names[x]}"
                    )
        return ideal


@dataclass(frozen=True)
class IdealSpec:
    """Generator list; builds the same canonical ideal in any generator order."""

    generators: tuple[int, ...]

    def build(self, ring: FiniteRing) -> Ideal:
        return ideal_generated(ring, self.generators)


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal._trusted(ring, (ring.zero,))


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal._trusted(ring, range(ring.order))


def principal_ideal(ring: FiniteRing, g: int) -> Ideal:
    ring.check_element(g)
    return Ideal._trusted(ring, set(ring.mul[g]))


def _additive_closure(ring: FiniteRing, seed: set[int]) -> set[int]:
    elems = set(seed)
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        row = ring.add[x]
        for y in list(elems):
            s = row[y]
            if s not in elems:
                elems.add(s)
                frontier.append(s)
    return elems


def ideal_generated(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``gens``."""
    seed = {ring.zero}
    for g in gens:
        ring.check_element(g)
        seed.update(ring.mul[g])
    return Ideal._trusted(ring, _additive_closure(ring, seed))


def all_ideals(
    ring: FiniteRing,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_ideals: int = DEFAULT_MAX_IDEALS,
) -> list[Ideal]:
    """Every ideal, by closing the principal ideals under pairwise sums."""
    cached = ring._cache.get("all_ideals")
    if cached is not None:
        return cached
    if ring.order > max_order:
        raise ResourceLimitError(
            f"ideal enumeration bound exceeded: order {ring.order} > {max_order}"
        )
    A = ring.add_np
    found: set[frozenset[int]] = set()
    for g in range(ring.order):
        found.add(frozenset(ring.mul[g]))
    work = list(found)
    while work:
        left = np.fromiter(work.pop(), dtype=np.int64)
        for other in list(found):
            right = np.fromiter(other, dtype=np.int64)
            total = frozenset(np.unique(A[np.ix_(left, right)]).tolist())
            if total not in found:
                if len(found) >= max_ideals:
                    raise ResourceLimitError(
                        f"ideal count bound exceeded ({max_ideals}) on {ring.label}"
                    )
                found.add(total)
                work.append(total)
    ideals = sorted(
        (Ideal._trusted(ring, s) for s in found), key=lambda i: (len(i.elems), i.elems)
    )
    ring._cache["all_ideals"] = ideals
    return ideals


# ---------------------------------------------------------------------------
# ideal arithmetic


def _require_same_ring(a: Ideal, b: Ideal):
    if a.ring is not b.ring:
        raise RingMismatchError("ideals live in different rings")


def radical(ideal: Ideal) -> Ideal:
    """{ a : a^k in I for some 1 <= k <= |R| }; the |R| bound is exact because
    power sequences cycle within |R| steps."""
    cached = ideal._cache.get("radical")
    if cached is not None:
        return cached
    ring = ideal.ring
    M = ring.mul_np
    idx = np.arange(ring.order)
    p = idx.copy()
    member = ideal.mask[p].copy()
    for _ in range(ring.order - 1):
        p = M[p, idx]
        member |= ideal.mask[p]
    rad = Ideal._trusted(ring, np.flatnonzero(member).tolist())
    ideal._cache["radical"] = rad
    return rad


def residual(ideal: Ideal, other) -> Ideal:
    """(I : J) = { a : aJ <= I }. ``other`` may be an Ideal or one element c,
    in which case (I : c) = (I : (c))."""
    ring = ideal.ring
    if isinstance(other, Ideal):
        _require_same_ring(ideal, other)
        cols = list(other.elems)
    else:
        cols = [ring.check_element(other)]
    hits = ideal.mask[ring.mul_np[:, cols]].all(axis=1)
    return Ideal._trusted(ring, np.flatnonzero(hits).tolist())


def annihilator(ring: FiniteRing, x: int) -> Ideal:
    return residual(zero_ideal(ring), x)


def zero_divisors(ring: FiniteRing) -> frozenset[int]:
    """Z(R) = { r : rs = 0 for some s != 0 } (0 included)."""
    others = [s for s in range(ring.order) if s != ring.zero]
    hits = (ring.mul_np[:, others] == ring.zero).any(axis=1)
    return frozenset(np.flatnonzero(hits).tolist())


def z_relative(ideal: Ideal) -> frozenset[int]:
    """Z_I(R) = { r : rs in I for some s outside I }."""
    if not ideal.is_proper:
        raise ImproperIdealError("Z_I(R) requires a proper ideal")
    ring = ideal.ring
    outside = [s for s in range(ring.order) if s not in ideal.elem_set]
    hits = ideal.mask[ring.mul_np[:, outside]].any(axis=1)
    return frozenset(np.flatnonzero(hits).tolist())


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Ideal generated by the pairwise element products."""
    _require_same_ring(a, b)
    ring = a.ring
    prods = np.unique(ring.mul_np[np.ix_(list(a.elems), list(b.elems))])
    return Ideal._trusted(ring, _additive_closure(ring, set(prods.tolist())))


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    if k < 1:
        raise InvalidConstructionError("ideal power needs k >= 1")
    acc = ideal
    for _ in range(k - 1):
        acc = ideal_product(acc, ideal)
    return acc


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _require_same_ring(a, b)
    sums = np.unique(a.ring.add_np[np.ix_(list(a.elems), list(b.elems))])
    return Ideal._trusted(a.ring, sums.tolist())


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    _require_same_ring(a, b)
    return Ideal._trusted(a.ring, a.elem_set & b.elem_set)


# ---------------------------------------------------------------------------
# distinguished ideals


def nilradical(ring: FiniteRing) -> Ideal:
    return radical(zero_ideal(ring))


def prime_ideals(ring: FiniteRing, **bounds) -> list[Ideal]:
    from .classifiers import is_prime

    return [i for i in all_ideals(ring, **bounds) if i.is_proper and is_prime(i).holds]


def maximal_ideals(ring: FiniteRing, **bounds) -> list[Ideal]:
    cached = ring._cache.get("maximal_ideals")
    if cached is not None:
        return cached
    proper = [i for i in all_ideals(ring, **bounds) if i.is_proper]
    out = [
        i
        for i in proper
        if not any(j is not i and i.elem_set < j.elem_set for j in proper)
    ]
    ring._cache["maximal_ideals"] = out
    return out


def jacobson_radical(ring: FiniteRing, **bounds) -> Ideal:
    acc = None
    for m in maximal_ideals(ring, **bounds):
        acc = m if acc is None else ideal_intersection(acc, m)
    return acc if acc is not None else unit_ideal(ring)


# ---------------------------------------------------------------------------
# ring class predicates


def is_field(ring: FiniteRing) -> bool:
    return len(ring.units) == ring.order - 1


def is_domain(ring: FiniteRing) -> bool:
    return zero_divisors(ring) == frozenset({ring.zero})


def is_quasilocal(ring: FiniteRing, **bounds) -> bool:
    return len(maximal_ideals(ring, **bounds)) == 1


def is_reduced(ring: FiniteRing) -> bool:
    return ring.nilpotents == frozenset({ring.zero})


def is_vnr(ring: FiniteRing) -> bool:
    """Von Neumann regular: every x has some y with x*x*y = x."""
    M = ring.mul_np
    idx = np.arange(ring.order)
    squares = M[idx, idx]
    return bool((M[squares, :] == idx[:, None]).any(axis=1).all())


def _divisibility(ring: FiniteRing) -> np.ndarray:
    """DIV[x, y] true when x divides y."""
    div = ring._cache.get("divisibility")
    if div is None:
        n = ring.order
        div = np.zeros((n, n), dtype=bool)
        rows = np.arange(n)[:, None]
        div[rows, ring.mul_np] = True
        ring._cache["divisibility"] = div
    return div


def is_divided(ring: FiniteRing, **bounds) -> bool:
    """Every x outside a prime P divides every element of P."""
    div = _divisibility(ring)
    for p in prime_ideals(ring, **bounds):
        outside = [x for x in range(ring.order) if x not in p.elem_set]
        if not div[np.ix_(outside, list(p.elems))].all():
            return False
    return True


def is_chained(ring: FiniteRing) -> bool:
    div = _divisibility(ring)
    return bool((div | div.T).all())


def is_u_ring(ring: FiniteRing, **bounds) -> bool:
    ok, _ = u_ring_witness(ring, **bounds)
    return ok


def u_ring_witness(ring: FiniteRing, **bounds):
    """Quadratic u-ring check: an ideal covered by the union of all ideals not
    containing it defeats the property (any covering family refines to that
    maximal one). Returns (ok, (ideal, cover)) with a minimal cover on failure.
    """
    ideals = all_ideals(ring, **bounds)
    for i in ideals:
        non_containing = [j for j in ideals if not i.elem_set <= j.elem_set]
        union: set[int] = set()
        for j in non_containing:
            union |= j.elem_set
        if i.elem_set <= union:
            return False, (i, _minimal_cover(i, non_containing))
    return True, None


def _minimal_cover(ideal: Ideal, family: Sequence[Ideal]) -> tuple[Ideal, ...]:
    import itertools

    target = ideal.elem_set
    useful = [j for j in family if j.elem_set & target]
    for size in range(1, min(len(useful), 6) + 1):
        for combo in itertools.combinations(useful, size):
            merged: set[int] = set()
            for j in combo:
                merged |= j.elem_set
            if target <= merged:
                return combo
    return tuple(family)


def irreducible_elements(ring: FiniteRing) -> frozenset[int]:
    """Nonunits that are not a product of two nonunits (0 never qualifies,
    since 0 = 0*0)."""
    nu = list(ring.nonunits)
    if not nu:
        return frozenset()
    products = set(np.unique(ring.mul_np[np.ix_(nu, nu)]).tolist())
    return frozenset(nu) - products
