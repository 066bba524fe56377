"""Ideal predicate scans with violation witnesses.

Each predicate of the prime/primary/absorbing lattice has an optimized scan
here (precomputed radical and nonunit masks, chunked table lookups, early
exit) and a definition-literal oracle in ``naive``; the two must agree and
the tests enforce it. Witnesses are always the lexicographically first
violating tuple in element-index order, so results are reproducible no
matter how a scan is scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import ImproperIdealError, InvalidConstructionError
from .ideal_algebra import Ideal, ideal_product, radical

_CHUNK_CELLS = 1 << 21
_SMALL_DOMAIN = 18  # below this, a direct Python loop beats numpy dispatch

PREDICATES = (
    "prime",
    "weakly_prime",
    "primary",
    "weakly_primary",
    "semiprimary",
    "two_absorbing",
    "weakly_two_absorbing",
    "two_absorbing_primary",
    "weakly_two_absorbing_primary",
    "one_absorbing_primary",
    "weakly_one_absorbing_primary",
)

# Implications asserted for every classified ideal.
LATTICE_EDGES = (
    ("prime", "primary"),
    ("primary", "one_absorbing_primary"),
    ("one_absorbing_primary", "weakly_one_absorbing_primary"),
    ("weakly_one_absorbing_primary", "weakly_two_absorbing_primary"),
    ("weakly_prime", "weakly_one_absorbing_primary"),
    ("weakly_primary", "weakly_one_absorbing_primary"),
    ("prime", "semiprimary"),
    ("primary", "two_absorbing_primary"),
)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class TripleZero:
    """Nonunit triple with abc = 0, ab outside I, c outside the radical of I."""

    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class PropertyRecord:
    """Full classification of one proper ideal, with witnesses for failures."""

    ideal: Ideal
    verdicts: Mapping[str, bool]
    witnesses: Mapping[str, tuple[int, ...]]

    def __getattr__(self, name: str) -> bool:
        if name in PREDICATES:
            return self.verdicts[name]
        raise AttributeError(name)

    def as_dict(self) -> dict:
        return {
            "verdicts": dict(self.verdicts),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def _proper_or_raise(ideal: Ideal):
    if not ideal.is_proper:
        raise ImproperIdealError("predicates are defined for proper ideals only")


# ---------------------------------------------------------------------------
# scan engines


def _pair_scan(ideal: Ideal, rhs_mask: np.ndarray, weakly: bool) -> Verdict:
    ring = ideal.ring
    M = ring.mul_np
    viol = ideal.mask[M]
    if weakly:
        viol &= M != ring.zero
    viol &= ~ideal.mask[:, None]
    viol &= ~rhs_mask[None, :]
    if viol.any():
        a, b = np.argwhere(viol)[0]
        return Verdict(False, (int(a), int(b)))
    return Verdict(True)


def _triple_scan_py(ring, dom, in_i, in_rad, weakly, mode) -> tuple | None:
    mul = ring.mul
    zero = ring.zero
    for a in dom:
        row_a = mul[a]
        for b in dom:
            ab = row_a[b]
            row_ab = mul[ab]
            row_b = mul[b]
            for c in dom:
                abc = row_ab[c]
                if not in_i[abc] or (weakly and abc == zero):
                    continue
                if in_i[ab]:
                    continue
                if mode == "1ap":
                    if not in_rad[c]:
                        return (a, b, c)
                elif mode == "2a":
                    if not in_i[row_b[c]] and not in_i[row_a[c]]:
                        return (a, b, c)
                else:
                    if not in_rad[row_b[c]] and not in_rad[row_a[c]]:
                        return (a, b, c)
    return None


def _triple_scan(ideal: Ideal, *, weakly: bool, mode: str) -> Verdict:
    """mode: '1ap' (ab in I or c in rad), '2a' (ab, bc or ac in I),
    '2ap' (ab in I, or bc or ac in rad).

    Every mode scans nonunit triples only. The 1ap family is defined that
    way; for the 2a/2ap families (defined over all elements) a violating
    triple can never contain a unit - a unit factor pushes one of the
    required products into I - so the restriction is lossless and keeps the
    same lexicographically-first witness. The naive oracles scan all
    elements, and the equivalence tests pin this reasoning down.
    """
    ring = ideal.ring
    in_i = ideal.mask
    in_rad = radical(ideal).mask if mode != "2a" else in_i
    dom = ring.nonunits_np
    k = len(dom)
    if k == 0:
        return Verdict(True)
    if k <= _SMALL_DOMAIN:
        w = _triple_scan_py(ring, [int(x) for x in dom], in_i, in_rad, weakly, mode)
        return Verdict(w is None, w)
    M = ring.mul_np
    sub = M[np.ix_(dom, dom)]
    ok_ab = in_i[sub]
    chunk = max(1, _CHUNK_CELLS // (k * k))
    for s in range(0, k, chunk):
        ab = sub[s : s + chunk]
        abc = M[ab[:, :, None], dom[None, None, :]]
        viol = in_i[abc]
        if weakly:
            viol &= abc != ring.zero
        viol &= ~ok_ab[s : s + chunk][:, :, None]
        if mode == "1ap":
            viol &= ~in_rad[dom][None, None, :]
        elif mode == "2a":
            viol &= ~ok_ab[None, :, :]
            viol &= ~ok_ab[s : s + chunk][:, None, :]
        else:
            viol &= ~in_rad[sub][None, :, :]
            viol &= ~in_rad[sub[s : s + chunk]][:, None, :]
        if viol.any():
            i, j, l = np.argwhere(viol)[0]
            return Verdict(False, (int(dom[s + i]), int(dom[j]), int(dom[l])))
    return Verdict(True)


# ---------------------------------------------------------------------------
# the predicate lattice


def is_prime(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _pair_scan(ideal, ideal.mask, weakly=False)


def is_weakly_prime(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _pair_scan(ideal, ideal.mask, weakly=True)


def is_primary(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _pair_scan(ideal, radical(ideal).mask, weakly=False)


def is_weakly_primary(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _pair_scan(ideal, radical(ideal).mask, weakly=True)


def is_semiprimary(ideal: Ideal) -> Verdict:
    """The radical is a prime ideal; the witness is the radical's prime failure."""
    _proper_or_raise(ideal)
    return is_prime(radical(ideal))


def is_two_absorbing(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _triple_scan(ideal, weakly=False, mode="2a")


def is_weakly_two_absorbing(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _triple_scan(ideal, weakly=True, mode="2a")


def is_two_absorbing_primary(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _triple_scan(ideal, weakly=False, mode="2ap")


def is_weakly_two_absorbing_primary(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _triple_scan(ideal, weakly=True, mode="2ap")


def is_one_absorbing_primary(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _triple_scan(ideal, weakly=False, mode="1ap")


def is_weakly_one_absorbing_primary(ideal: Ideal) -> Verdict:
    _proper_or_raise(ideal)
    return _triple_scan(ideal, weakly=True, mode="1ap")


PREDICATE_FNS = {
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


def classify(ideal: Ideal) -> PropertyRecord:
    """Run every predicate, check the implication lattice, return the record."""
    _proper_or_raise(ideal)
    cached = ideal._cache.get("record")
    if cached is not None:
        return cached
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}
    for name in PREDICATES:
        v = PREDICATE_FNS[name](ideal)
        verdicts[name] = v.holds
        if not v.holds:
            witnesses[name] = v.witness
    for weaker, stronger in LATTICE_EDGES:
        if verdicts[weaker] and not verdicts[stronger]:
            raise AssertionError(
                f"implication lattice broken on {ideal!r}: {weaker} holds but {stronger} fails"
            )
    record = PropertyRecord(ideal, verdicts, witnesses)
    ideal._cache["record"] = record
    return record


# ---------------------------------------------------------------------------
# 1-triple-zeros


def triple_zero_cube(ideal: Ideal) -> tuple[np.ndarray, np.ndarray]:
    """Boolean cube over (nonunit, nonunit, nonunit) marking 1-triple-zeros,
    plus the nonunit domain. Cached on the ideal."""
    cached = ideal._cache.get("tz_cube")
    if cached is not None:
        return cached
    ring = ideal.ring
    dom = ring.nonunits_np
    M = ring.mul_np
    in_i = ideal.mask
    in_rad = radical(ideal).mask
    k = len(dom)
    cube = np.zeros((k, k, k), dtype=bool)
    if k:
        sub = M[np.ix_(dom, dom)]
        ok_c = ~in_rad[dom]
        chunk = max(1, _CHUNK_CELLS // (k * k))
        for s in range(0, k, chunk):
            ab = sub[s : s + chunk]
            abc = M[ab[:, :, None], dom[None, None, :]]
            cube[s : s + chunk] = (
                (abc == ring.zero) & ~in_i[ab][:, :, None] & ok_c[None, None, :]
            )
    out = (cube, dom)
    ideal._cache["tz_cube"] = out
    return out


def find_triple_zeros(ideal: Ideal) -> list[TripleZero]:
    """All 1-triple-zeros of I, in lexicographic element order."""
    _proper_or_raise(ideal)
    cube, dom = triple_zero_cube(ideal)
    hits = np.argwhere(cube)
    return [TripleZero(int(dom[i]), int(dom[j]), int(dom[k])) for i, j, k in hits]


def is_free_triple_zero(ideal: Ideal, i1: Ideal, i2: Ideal, i3: Ideal):
    """True when no (a, b, c) from I1 x I2 x I3 is a 1-triple-zero of I.
    Requires I1*I2*I3 <= I and all three factors proper."""
    _proper_or_raise(ideal)
    for part in (i1, i2, i3):
        if part.ring is not ideal.ring:
            raise InvalidConstructionError("factor ideals must live in the same ring")
        if not part.is_proper:
            raise ImproperIdealError("free-triple-zero factors must be proper ideals")
    prod = ideal_product(ideal_product(i1, i2), i3)
    if not prod.elem_set <= ideal.elem_set:
        raise InvalidConstructionError("I1*I2*I3 is not contained in I")
    cube, dom = triple_zero_cube(ideal)
    pos = {int(v): k for k, v in enumerate(dom)}
    ix1 = [pos[e] for e in i1.elems]
    ix2 = [pos[e] for e in i2.elems]
    ix3 = [pos[e] for e in i3.elems]
    sub = cube[np.ix_(ix1, ix2, ix3)]
    if sub.any():
        i, j, k = np.argwhere(sub)[0]
        return False, (int(i1.elems[i]), int(i2.elems[j]), int(i3.elems[k]))
    return True, None
