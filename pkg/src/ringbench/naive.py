"""Definition-literal oracles for every ideal predicate.

These are the reference implementations: plain Python loops that transcribe
the definitions, recomputing everything (including radicals) from the raw
tables on every call. The optimized scans in ``classifiers`` must agree with
them; the test suite enforces that. Keep this module free of numpy and of
any shared helper from the optimized side.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ImproperIdealError


def _proper_or_raise(ring, elem_set):
    if ring.one in elem_set:
        raise ImproperIdealError("predicates are defined for proper ideals only")


def radical_set(ring, elem_set) -> set[int]:
    out = set()
    for a in range(ring.order):
        p = a
        for _ in range(ring.order):
            if p in elem_set:
                out.add(a)
                break
            p = ring.mul[p][a]
    return out


def is_prime(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    for a in range(ring.order):
        row = ring.mul[a]
        for b in range(ring.order):
            if row[b] in elem_set and a not in elem_set and b not in elem_set:
                return False, (a, b)
    return True, None


def is_weakly_prime(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    for a in range(ring.order):
        row = ring.mul[a]
        for b in range(ring.order):
            ab = row[b]
            if ab != ring.zero and ab in elem_set and a not in elem_set and b not in elem_set:
                return False, (a, b)
    return True, None


def is_primary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    rad = radical_set(ring, elem_set)
    for a in range(ring.order):
        row = ring.mul[a]
        for b in range(ring.order):
            if row[b] in elem_set and a not in elem_set and b not in rad:
                return False, (a, b)
    return True, None


def is_weakly_primary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    rad = radical_set(ring, elem_set)
    for a in range(ring.order):
        row = ring.mul[a]
        for b in range(ring.order):
            ab = row[b]
            if ab != ring.zero and ab in elem_set and a not in elem_set and b not in rad:
                return False, (a, b)
    return True, None


def is_semiprimary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    return is_prime(ring, frozenset(radical_set(ring, elem_set)))


def _two_absorbing_scan(ring, elem_set, rhs, weakly):
    mul = ring.mul
    for a in range(ring.order):
        for b in range(ring.order):
            ab = mul[a][b]
            for c in range(ring.order):
                abc = mul[ab][c]
                if abc not in elem_set or (weakly and abc == ring.zero):
                    continue
                if ab in elem_set or mul[b][c] in rhs or mul[a][c] in rhs:
                    continue
                return False, (a, b, c)
    return True, None


def is_two_absorbing(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    return _two_absorbing_scan(ring, elem_set, elem_set, weakly=False)


def is_weakly_two_absorbing(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    return _two_absorbing_scan(ring, elem_set, elem_set, weakly=True)


def is_two_absorbing_primary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    rad = radical_set(ring, elem_set)
    return _two_absorbing_scan(ring, elem_set, rad, weakly=False)


def is_weakly_two_absorbing_primary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    rad = radical_set(ring, elem_set)
    return _two_absorbing_scan(ring, elem_set, rad, weakly=True)


def _one_absorbing_scan(ring, elem_set, weakly):
    rad = radical_set(ring, elem_set)
    mul = ring.mul
    nonunits = [a for a in range(ring.order) if a not in ring.units]
    for a in nonunits:
        for b in nonunits:
            ab = mul[a][b]
            for c in nonunits:
                abc = mul[ab][c]
                if abc not in elem_set or (weakly and abc == ring.zero):
                    continue
                if ab in elem_set or c in rad:
                    continue
                return False, (a, b, c)
    return True, None


def is_one_absorbing_primary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    return _one_absorbing_scan(ring, elem_set, weakly=False)


def is_weakly_one_absorbing_primary(ring, elem_set):
    _proper_or_raise(ring, elem_set)
    return _one_absorbing_scan(ring, elem_set, weakly=True)


ORACLES = {
    "prime": is_prime,
    "weakly_prime": is_weakly_prime,
    "primary": is_primary,
    "weakly_primary": is_weakly_primary,
    "semiprimary": is_semiprimary,
    "two_absorbing": is_two_absorbing,
    "weakly_two_absorbing": is_weakly_two_absorbing,
    "two_absorbing_primary": is_two_absorbing_primary,
    "weakly_two_absorbing_primary": is_weakly_two_absorbing_primary,
    "one_absorbing_primary": is_one_absorbing_primary,
    "weakly_one_absorbing_primary": is_weakly_one_absorbing_primary,
}


def violates(ring, elem_set, predicate, witness) -> bool:
    """Re-derive a failure from its witness, straight from the definition."""
    mul = ring.mul
    zero = ring.zero
    if predicate in ("prime", "weakly_prime", "primary", "weakly_primary"):
        a, b = witness
        ab = mul[a][b]
        if ab not in elem_set or a in elem_set:
            return False
        if predicate.startswith("weakly") and ab == zero:
            return False
        rhs = (
            elem_set
            if predicate.endswith("prime")
            else radical_set(ring, elem_set)
        )
        return b not in rhs
    if predicate == "semiprimary":
        a, b = witness
        rad = radical_set(ring, elem_set)
        return mul[a][b] in rad and a not in rad and b not in rad
    a, b, c = witness
    ab = mul[a][b]
    abc = mul[ab][c]
    if abc not in elem_set:
        return False
    if predicate.startswith("weakly") and abc == zero:
        return False
    if predicate in ("one_absorbing_primary", "weakly_one_absorbing_primary"):
        if a in ring.units or b in ring.units or c in ring.units:
            return False
        rad = radical_set(ring, elem_set)
        return ab not in elem_set and c not in rad
    if predicate in ("two_absorbing", "weakly_two_absorbing"):
        return (
            ab not in elem_set
            and mul[b][c] not in elem_set
            and mul[a][c] not in elem_set
        )
    rad = radical_set(ring, elem_set)
    return ab not in elem_set and mul[b][c] not in rad and mul[a][c] not in rad


def triple_zeros(ring, elem_set) -> list[tuple[int, int, int]]:
    """All (a, b, c) over nonunits with abc = 0, ab outside I, c outside the radical."""
    rad = radical_set(ring, elem_set)
    mul = ring.mul
    nonunits = [a for a in range(ring.order) if a not in ring.units]
    out = []
    for a in nonunits:
        for b in nonunits:
            ab = mul[a][b]
            if ab in elem_set:
                continue
            for c in nonunits:
                if mul[ab][c] == ring.zero and c not in rad:
                    out.append((a, b, c))
    return out


def is_u_ring_subfamilies(ring, ideals):
    """Exponential oracle: check every subfamily of ideals not containing I."""
    sets = [frozenset(i.elems) for i in ideals]
    for target in sets:
        candidates = [s for s in sets if not target <= s]
        for size in range(1, len(candidates) + 1):
            for combo in combinations(candidates, size):
                union = set()
                for s in combo:
                    union |= s
                if target <= union:
                    return False, (target, combo)
    return True, None
