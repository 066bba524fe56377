"""Finite commutative rings with identity, given by addition/multiplication tables.

Elements are plain indices ``0..order-1``. A ring is immutable once built;
every constructor funnels through the same full axiom validation that
``mk_table`` applies to raw tables, so an instance in hand is always a
genuine commutative ring with ``1 != 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateLocalizationError,
    ImproperIdealError,
    InvalidConstructionError,
    NotSurjectiveError,
    ResourceLimitError,
    RingMismatchError,
    TableValidationError,
)

if TYPE_CHECKING:
    from .ideal_algebra import Ideal

DEFAULT_MAX_ORDER = 512

_CHUNK_CELLS = 1 << 21  # target cells per associativity/distributivity slab


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring with 1 != 0 on indices 0..order-1."""

    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    names: tuple[str, ...]
    units: frozenset[int]
    nilpotents: frozenset[int]
    label: str = "R"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __repr__(self) -> str:
        return f"<FiniteRing {self.label} order={self.order}>"

    # -- element helpers ---------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def is_unit(self, a: int) -> bool:
        return a in self.units

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise RingMismatchError(f"{a!r} is not an element index of {self.label}")
        return a

    def neg(self, a: int) -> int:
        return int(self.neg_np[a])

    def power(self, a: int, k: int) -> int:
        if k < 1:
            raise InvalidConstructionError("power exponent must be >= 1")
        acc = a
        for _ in range(k - 1):
            acc = self.mul[acc][a]
        return acc

    def name_of(self, a: int) -> str:
        return self.names[a]

    def names_of(self, elems: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.names[a] for a in elems)

    # -- cached derived data ----------------------------------------------

    @property
    def add_np(self) -> np.ndarray:
        arr = self._cache.get("add_np")
        if arr is None:
            arr = np.array(self.add, dtype=np.int16)
            self._cache["add_np"] = arr
        return arr

    @property
    def mul_np(self) -> np.ndarray:
        arr = self._cache.get("mul_np")
        if arr is None:
            arr = np.array(self.mul, dtype=np.int16)
            self._cache["mul_np"] = arr
        return arr

    @property
    def neg_np(self) -> np.ndarray:
        arr = self._cache.get("neg_np")
        if arr is None:
            arr = np.argmax(self.add_np == self.zero, axis=1)
            self._cache["neg_np"] = arr
        return arr

    @property
    def nonunits(self) -> tuple[int, ...]:
        nu = self._cache.get("nonunits")
        if nu is None:
            nu = tuple(a for a in range(self.order) if a not in self.units)
            self._cache["nonunits"] = nu
        return nu

    @property
    def nonunits_np(self) -> np.ndarray:
        arr = self._cache.get("nonunits_np")
        if arr is None:
            arr = np.array(self.nonunits, dtype=np.int64)
            self._cache["nonunits_np"] = arr
        return arr


# ---------------------------------------------------------------------------
# table validation


def validate_tables(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]):
    """Check the full commutative-ring-with-identity axiom list by table scan.

    Returns ``(violations, zero, one)``; ``violations`` is a list of
    ``(axiom, witness)`` pairs and is empty exactly when the tables define a
    commutative ring with 1 != 0.
    """
    n = len(add)
    if n == 0 or len(mul) != n:
        raise InvalidConstructionError("add and mul tables must be square and of equal order")
    for row in add:
        if len(row) != n:
            raise InvalidConstructionError("add table is not square")
    for row in mul:
        if len(row) != n:
            raise InvalidConstructionError("mul table is not square")

    A = np.array(add, dtype=np.int64)
    M = np.array(mul, dtype=np.int64)
    if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
        raise InvalidConstructionError("table entries must be element indices in [0, order)")

    violations: list[tuple[str, tuple | None]] = []

    def first_bad(mask: np.ndarray, base: int = 0) -> tuple:
        a, b, c = np.argwhere(mask)[0]
        return (int(a) + base, int(b), int(c))

    # additive commutative group
    if not np.array_equal(A, A.T):
        i, j = np.argwhere(A != A.T)[0]
        violations.append(("add-commutative", (int(i), int(j))))
    zero = _identity_of(A)
    if zero is None:
        violations.append(("add-identity", None))
    else:
        no_inverse = ~(A == zero).any(axis=1)
        if no_inverse.any():
            violations.append(("add-inverse", (int(np.flatnonzero(no_inverse)[0]),)))
    bad = _assoc_witness(A)
    if bad is not None:
        violations.append(("add-associative", bad))

    # multiplicative commutative monoid
    if not np.array_equal(M, M.T):
        i, j = np.argwhere(M != M.T)[0]
        violations.append(("mul-commutative", (int(i), int(j))))
    one = _identity_of(M)
    if one is None:
        violations.append(("mul-identity", None))
    bad = _assoc_witness(M)
    if bad is not None:
        violations.append(("mul-associative", bad))

    # distributivity: a*(b+c) == a*b + a*c
    chunk = max(1, _CHUNK_CELLS // (n * n))
    for start in range(0, n, chunk):
        X = M[start : start + chunk]
        left = X[:, A]
        right = A[X[:, :, None], X[:, None, :]]
        if not np.array_equal(left, right):
            violations.append(("distributive", first_bad(left != right, start)))
            break

    if zero is not None and one is not None and zero == one:
        violations.append(("one-equals-zero", None))

    return violations, zero, one


def _identity_of(T: np.ndarray) -> int | None:
    n = T.shape[0]
    hits = np.flatnonzero((T == np.arange(n)).all(axis=1))
    return int(hits[0]) if hits.size else None


def _assoc_witness(T: np.ndarray) -> tuple | None:
    n = T.shape[0]
    chunk = max(1, _CHUNK_CELLS // (n * n))
    for start in range(0, n, chunk):
        rows = T[start : start + chunk]
        left = T[rows, :]  # T[T[a,b], c]
        right = rows[:, T]  # T[a, T[b,c]]
        if not np.array_equal(left, right):
            a, b, c = np.argwhere(left != right)[0]
            return (int(a) + start, int(b), int(c))
    return None


def _units_of(M: np.ndarray, one: int) -> frozenset[int]:
    return frozenset(np.flatnonzero((M == one).any(axis=1)).tolist())


def _nilpotents_of(M: np.ndarray, zero: int) -> frozenset[int]:
    n = M.shape[0]
    idx = np.arange(n)
    p = idx.copy()
    nil = p == zero
    for _ in range(n - 1):
        p = M[p, idx]
        nil |= p == zero
    return frozenset(np.flatnonzero(nil).tolist())


def _build(add, mul, names, label, max_order) -> FiniteRing:
    n = len(add)
    if n > max_order:
        raise ResourceLimitError(f"ring order {n} exceeds the configured bound {max_order}")
    violations, zero, one = validate_tables(add, mul)
    if violations:
        raise TableValidationError(violations)
    M = np.array(mul, dtype=np.int64)
    ring = FiniteRing(
        order=n,
        add=tuple(tuple(int(x) for x in row) for row in add),
        mul=tuple(tuple(int(x) for x in row) for row in mul),
        zero=zero,
        one=one,
        names=tuple(names),
        units=_units_of(M, one),
        nilpotents=_nilpotents_of(M, zero),
        label=label,
    )
    return ring


# ---------------------------------------------------------------------------
# constructors


def mk_zn(n: int, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The ring of integers modulo ``n`` (``n >= 2``; the zero ring is excluded)."""
    if not isinstance(n, int) or n < 2:
        raise InvalidConstructionError(f"Z_n requires an integer n >= 2, got {n!r}")
    r = range(n)
    add = [[(a + b) % n for b in r] for a in r]
    mul = [[(a * b) % n for b in r] for a in r]
    return _build(add, mul, [str(a) for a in r], f"Z{n}", max_order)


def product_strides(orders: Sequence[int]) -> tuple[int, ...]:
    """Mixed-radix strides with the first factor most significant."""
    strides = []
    acc = 1
    for size in reversed(orders):
        strides.append(acc)
        acc *= size
    return tuple(reversed(strides))


def product_encode(strides: Sequence[int], comps: Sequence[int]) -> int:
    return sum(c * s for c, s in zip(comps, strides))


def product_decode(orders: Sequence[int], strides: Sequence[int], idx: int) -> tuple[int, ...]:
    return tuple((idx // s) % o for o, s in zip(orders, strides))


def mk_product(factors: Sequence[FiniteRing], *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Direct product with componentwise tables; needs at least two factors."""
    if len(factors) < 2:
        raise InvalidConstructionError("a product ring needs at least 2 factors")
    orders = [f.order for f in factors]
    n = math.prod(orders)
    if n > max_order:
        raise ResourceLimitError(f"ring order {n} exceeds the configured bound {max_order}")
    strides = product_strides(orders)
    idx = np.arange(n)
    comps = [(idx // s) % o for o, s in zip(orders, strides)]
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for f, comp, stride in zip(factors, comps, strides):
        fa = np.array(f.add, dtype=np.int64)
        fm = np.array(f.mul, dtype=np.int64)
        add += fa[np.ix_(comp, comp)] * stride
        mul += fm[np.ix_(comp, comp)] * stride
    names = [
        "(" + ",".join(f.names[c] for f, c in zip(factors, product_decode(orders, strides, i))) + ")"
        for i in range(n)
    ]
    label = "prod(" + ",".join(f.label for f in factors) + ")"
    return _build(add.tolist(), mul.tolist(), names, label, max_order)


def mk_idealization(n: int, d: int, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The ring Z_n (+) (d): pairs (a, m) with m a multiple of d, and
    (a,m)(b,n) = (ab, an+bm)."""
    if not isinstance(n, int) or n < 2:
        raise InvalidConstructionError(f"idealization base requires an integer n >= 2, got {n!r}")
    if not isinstance(d, int) or d < 1 or n % d != 0:
        raise InvalidConstructionError(f"module generator {d!r} must be a positive divisor of {n}")
    mod = list(range(0, n, d))
    elems = [(a, m) for a in range(n) for m in mod]
    index = {e: i for i, e in enumerate(elems)}
    add = [
        [index[((a1 + a2) % n, (m1 + m2) % n)] for (a2, m2) in elems] for (a1, m1) in elems
    ]
    mul = [
        [index[((a1 * a2) % n, (a1 * m2 + a2 * m1) % n)] for (a2, m2) in elems]
        for (a1, m1) in elems
    ]
    names = [f"({a},{m})" for (a, m) in elems]
    return _build(add, mul, names, f"idealize({n},{d})", max_order)


def idealization_index(n: int, d: int, a: int, m: int) -> int:
    """Index of the pair (a, m) in the ring built by mk_idealization(n, d)."""
    if not 0 <= a < n:
        raise InvalidConstructionError(f"first coordinate {a} out of range for Z{n}")
    if not 0 <= m < n or m % d != 0:
        raise InvalidConstructionError(f"second coordinate {m} is not in the module ({d}) of Z{n}")
    return a * (n // d) + m // d


def _quotient_by_set(
    ring: FiniteRing, kernel: frozenset[int], label: str, max_order: int
) -> tuple[FiniteRing, "RingHom"]:
    A = ring.add_np
    k_list = sorted(kernel)
    rep = A[:, k_list].min(axis=1)
    reps = sorted(set(int(r) for r in rep))
    qidx = {r: i for i, r in enumerate(reps)}
    proj = tuple(qidx[int(rep[x])] for x in range(ring.order))
    qadd = [[proj[ring.add[a][b]] for b in reps] for a in reps]
    qmul = [[proj[ring.mul[a][b]] for b in reps] for a in reps]
    names = [f"[{ring.names[r]}]" for r in reps]
    q = _build(qadd, qmul, names, label, max_order)
    return q, RingHom(ring, q, proj)


def mk_quotient(
    ring: FiniteRing, ideal: "Ideal", *, max_order: int = DEFAULT_MAX_ORDER
) -> tuple[FiniteRing, "RingHom"]:
    """Quotient by a proper ideal, with the natural projection.

    Coset representatives are the smallest element index in each coset, so
    output is deterministic.
    """
    if ideal.ring is not ring:
        raise RingMismatchError("ideal belongs to a different ring")
    if ring.one in ideal.elem_set:
        raise ImproperIdealError("cannot form the quotient by the whole ring")
    label = f"{ring.label}/{_set_label(ring, ideal.elem_set)}"
    return _quotient_by_set(ring, frozenset(ideal.elem_set), label, max_order)


def _set_label(ring: FiniteRing, elems) -> str:
    if len(elems) <= 4:
        return "{" + ",".join(ring.names[e] for e in sorted(elems)) + "}"
    return f"{{|{len(elems)}|}}"


def normalize_multiplicative_set(ring: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    """Close under products and adjoin 1."""
    s = {ring.check_element(g) for g in gens}
    s.add(ring.one)
    frontier = list(s)
    while frontier:
        x = frontier.pop()
        for y in list(s):
            xy = ring.mul[x][y]
            if xy not in s:
                s.add(xy)
                frontier.append(xy)
    return frozenset(s)


def mk_localization(
    ring: FiniteRing, gens: Iterable[int], *, max_order: int = DEFAULT_MAX_ORDER
) -> tuple[FiniteRing, "RingHom"]:
    """Fraction ring at the multiplicative closure S of ``gens`` (plus 1).

    Elements are equivalence classes of pairs (a, s) under
    (a,s) ~ (b,t) iff u(at - bs) = 0 for some u in S; the canonical map is
    a -> a/1 and sends every member of S to a unit. Rejects 0 in S.
    """
    s_set = normalize_multiplicative_set(ring, gens)
    if ring.zero in s_set:
        raise DegenerateLocalizationError(
            "0 lies in the multiplicative closure; the fraction ring would be the zero ring"
        )
    s_list = sorted(s_set)
    M = ring.mul_np
    # u(at - bs) = 0 for some u in S  <=>  at - bs lies in this kernel
    killed = frozenset(np.flatnonzero((M[s_list, :] == ring.zero).any(axis=0)).tolist())
    label = f"loc({ring.label},{{{','.join(ring.names[s] for s in s_list)}}})"
    q, proj = _quotient_by_set(ring, killed, label, max_order)
    # a/s and b/t collide exactly when proj(a)/proj(s) agree in the quotient,
    # where every proj(s) is a unit; bucket pairs accordingly.
    inv = {}
    for s in s_list:
        qs = proj.map[s]
        if qs not in inv:
            inv[qs] = next(v for v in range(q.order) if q.mul[qs][v] == q.one)
    frac_names = [None] * q.order
    for a in range(ring.order):
        for s in s_list:
            key = q.mul[proj.map[a]][inv[proj.map[s]]]
            if frac_names[key] is None:
                frac_names[key] = f"{ring.names[a]}/{ring.names[s]}"
    fraction_ring = FiniteRing(
        order=q.order,
        add=q.add,
        mul=q.mul,
        zero=q.zero,
        one=q.one,
        names=tuple(frac_names),
        units=q.units,
        nilpotents=q.nilpotents,
        label=label,
    )
    canonical = RingHom(ring, fraction_ring, proj.map)
    return fraction_ring, canonical


def mk_table(
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    label: str = "table",
    *,
    max_order: int = DEFAULT_MAX_ORDER,
) -> FiniteRing:
    """Build a ring from raw tables; raises TableValidationError listing every
    violated axiom with a witness."""
    if names is None:
        names = [str(i) for i in range(len(add))]
    if len(names) != len(add):
        raise InvalidConstructionError("names length must equal the table order")
    return _build(add, mul, names, label, max_order)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True, eq=False)
class RingHom:
    """A unital ring homomorphism as an element map on indices."""

    domain: FiniteRing
    codomain: FiniteRing
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.domain.order:
            raise InvalidConstructionError("hom map length must equal the domain order")
        for v in self.map:
            if not 0 <= v < self.codomain.order:
                raise InvalidConstructionError(f"hom map value {v} outside the codomain")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __repr__(self) -> str:
        return f"<RingHom {self.domain.label} -> {self.codomain.label}>"

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.codomain.order

    def kernel_elems(self) -> frozenset[int]:
        z = self.codomain.zero
        return frozenset(a for a, v in enumerate(self.map) if v == z)

    def preserves_nonunits(self) -> bool:
        """True when every nonunit of the domain maps to a nonunit."""
        return all(self.map[a] not in self.codomain.units for a in self.domain.nonunits)


def hom_check(f: RingHom):
    """Verify the homomorphism laws; returns (ok, violation) where violation
    is (law, witness) for the first broken law."""
    R, T, m = f.domain, f.codomain, f.map
    if m[R.zero] != T.zero:
        return False, ("zero", (R.zero,))
    if m[R.one] != T.one:
        return False, ("one", (R.one,))
    for a in range(R.order):
        ma = m[a]
        add_r, mul_r = R.add[a], R.mul[a]
        add_t, mul_t = T.add[ma], T.mul[ma]
        for b in range(a, R.order):
            if add_t[m[b]] != m[add_r[b]]:
                return False, ("add", (a, b))
            if mul_t[m[b]] != m[mul_r[b]]:
                return False, ("mul", (a, b))
    return True, None


def compose(g: RingHom, f: RingHom) -> RingHom:
    if f.codomain is not g.domain:
        raise RingMismatchError("homs do not compose: codomain/domain mismatch")
    return RingHom(f.domain, g.codomain, tuple(g.map[v] for v in f.map))


def hom_preimage_ideal(f: RingHom, ideal: "Ideal") -> "Ideal":
    """f^{-1}(J); always an ideal of the domain."""
    from .ideal_algebra import Ideal

    if ideal.ring is not f.codomain:
        raise RingMismatchError("ideal does not live in the hom codomain")
    elems = frozenset(a for a in range(f.domain.order) if f.map[a] in ideal.elem_set)
    return Ideal._trusted(f.domain, elems)


def hom_image_ideal(f: RingHom, ideal: "Ideal") -> "Ideal":
    """f(I) for surjective f; raises NotSurjectiveError otherwise."""
    from .ideal_algebra import Ideal

    if ideal.ring is not f.domain:
        raise RingMismatchError("ideal does not live in the hom domain")
    if not f.is_surjective():
        raise NotSurjectiveError("image of an ideal is only an ideal along a surjection")
    elems = frozenset(f.map[a] for a in ideal.elem_set)
    return Ideal._trusted(f.codomain, elems)


def hom_kernel(f: RingHom) -> "Ideal":
    from .ideal_algebra import Ideal

    return Ideal._trusted(f.domain, f.kernel_elems())
