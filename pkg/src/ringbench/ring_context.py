"""Per-ring working state for the theorem verifiers.

A context bundles one corpus ring with its ideal lattice and the derived
structure the verifiers keep reusing: containment and product tables over
the lattice, radicals, classification records, quotient/localization
sub-contexts. Everything is computed once and cached; all orderings are
canonical so verification output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classifiers import PropertyRecord, classify
from .dsl import BuiltRing, build_ring
from .ideal_algebra import (
    Ideal,
    all_ideals,
    ideal_product,
    is_chained,
    is_divided,
    is_domain,
    is_field,
    is_quasilocal,
    is_reduced,
    is_u_ring,
    is_vnr,
    maximal_ideals,
    nilradical,
    radical,
    zero_divisors,
)
from .ring_core import FiniteRing, RingHom, mk_quotient


@dataclass
class RingContext:
    text: str
    built: BuiltRing
    max_order: int
    _lazy: dict = field(default_factory=dict)

    @property
    def ring(self) -> FiniteRing:
        return self.built.ring

    # -- lattice -----------------------------------------------------------

    @property
    def ideals(self) -> list[Ideal]:
        return all_ideals(self.ring, max_order=self.max_order)

    @property
    def proper_ideals(self) -> list[Ideal]:
        got = self._lazy.get("proper")
        if got is None:
            got = [i for i in self.ideals if i.is_proper]
            self._lazy["proper"] = got
        return got

    @property
    def index_of(self) -> dict[frozenset, int]:
        got = self._lazy.get("index_of")
        if got is None:
            got = {i.elem_set: k for k, i in enumerate(self.ideals)}
            self._lazy["index_of"] = got
        return got

    def canonical(self, ideal: Ideal) -> Ideal:
        """The lattice's own object for an equal ideal (shares caches)."""
        return self.ideals[self.index_of[ideal.elem_set]]

    @property
    def containment(self) -> np.ndarray:
        """bool matrix: containment[i, j] iff ideals[i] <= ideals[j]."""
        got = self._lazy.get("containment")
        if got is None:
            k = len(self.ideals)
            got = np.zeros((k, k), dtype=bool)
            for a, ia in enumerate(self.ideals):
                for b, ib in enumerate(self.ideals):
                    got[a, b] = ia.elem_set <= ib.elem_set
            self._lazy["containment"] = got
        return got

    @property
    def product_table(self) -> np.ndarray:
        """product_table[i, j] = lattice index of ideals[i] * ideals[j]."""
        got = self._lazy.get("product_table")
        if got is None:
            k = len(self.ideals)
            got = np.zeros((k, k), dtype=np.int64)
            for a in range(k):
                for b in range(a, k):
                    idx = self.index_of[ideal_product(self.ideals[a], self.ideals[b]).elem_set]
                    got[a, b] = got[b, a] = idx
            self._lazy["product_table"] = got
        return got

    @property
    def radical_index(self) -> list[int]:
        got = self._lazy.get("radical_index")
        if got is None:
            got = [self.index_of[radical(i).elem_set] for i in self.ideals]
            self._lazy["radical_index"] = got
        return got

    @property
    def zero_index(self) -> int:
        return self.index_of[frozenset({self.ring.zero})]

    def record(self, ideal: Ideal) -> PropertyRecord:
        return classify(self.canonical(ideal))

    def w1ap(self, ideal: Ideal) -> bool:
        return self.record(ideal).verdicts["weakly_one_absorbing_primary"]

    @property
    def maximal_set(self) -> set[frozenset]:
        got = self._lazy.get("maximal_set")
        if got is None:
            got = {m.elem_set for m in maximal_ideals(self.ring, max_order=self.max_order)}
            self._lazy["maximal_set"] = got
        return got

    # -- ring class flags ----------------------------------------------------

    def _flag(self, name: str, fn) -> bool:
        got = self._lazy.get(name)
        if got is None:
            got = fn()
            self._lazy[name] = got
        return got

    @property
    def field_flag(self) -> bool:
        return self._flag("field", lambda: is_field(self.ring))

    @property
    def domain_flag(self) -> bool:
        return self._flag("domain", lambda: is_domain(self.ring))

    @property
    def quasilocal_flag(self) -> bool:
        return self._flag(
            "quasilocal", lambda: is_quasilocal(self.ring, max_order=self.max_order)
        )

    @property
    def reduced_flag(self) -> bool:
        return self._flag("reduced", lambda: is_reduced(self.ring))

    @property
    def vnr_flag(self) -> bool:
        return self._flag("vnr", lambda: is_vnr(self.ring))

    @property
    def divided_flag(self) -> bool:
        return self._flag("divided", lambda: is_divided(self.ring, max_order=self.max_order))

    @property
    def chained_flag(self) -> bool:
        return self._flag("chained", lambda: is_chained(self.ring))

    @property
    def u_ring_flag(self) -> bool:
        return self._flag("u_ring", lambda: is_u_ring(self.ring, max_order=self.max_order))

    @property
    def nilradical_set(self) -> frozenset:
        return self._flag("nilrad", lambda: nilradical(self.ring).elem_set)

    @property
    def zero_divisor_set(self) -> frozenset:
        return self._flag("zdiv", lambda: zero_divisors(self.ring))

    # -- derived rings -------------------------------------------------------

    def quotient_context(self, by: Ideal) -> "QuotientContext":
        key = ("quot", by.elem_set)
        got = self._lazy.get(key)
        if got is None:
            qring, proj = mk_quotient(self.ring, self.canonical(by), max_order=self.max_order)
            got = QuotientContext(self, qring, proj)
            self._lazy[key] = got
        return got


@dataclass
class QuotientContext:
    """Lightweight context for a quotient (or other derived) ring: classify
    ideals through canonical lattice objects so records are cached."""

    parent: RingContext
    ring: FiniteRing
    hom: RingHom
    _lazy: dict = field(default_factory=dict)

    @property
    def ideals(self) -> list[Ideal]:
        return all_ideals(self.ring, max_order=self.parent.max_order)

    @property
    def index_of(self) -> dict[frozenset, int]:
        got = self._lazy.get("index_of")
        if got is None:
            got = {i.elem_set: k for k, i in enumerate(self.ideals)}
            self._lazy["index_of"] = got
        return got

    def record(self, elems: frozenset) -> PropertyRecord:
        return classify(self.ideals[self.index_of[elems]])

    @property
    def units_lift(self) -> bool:
        """U(R/J) == { pi(u) : u a unit of R }."""
        got = self._lazy.get("units_lift")
        if got is None:
            lifted = {self.hom.map[u] for u in self.parent.ring.units}
            got = lifted == set(self.ring.units)
            self._lazy["units_lift"] = got
        return got


def make_context(text: str, max_order: int) -> RingContext:
    return RingContext(text, build_ring(text, max_order=max_order), max_order)
