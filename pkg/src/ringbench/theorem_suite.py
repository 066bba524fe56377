"""Exhaustive verification of the transfer-theorem catalog over a ring corpus.

Every verifier walks the relevant hypothesis class of one ring (supplied as
a RingContext), counts the instances it actually checked and the hypothesis
skips, and records any violation with a witness that is re-verified against
the definition-literal oracles before being reported. The proved theorems
must come back with zero violations; anything else indicates a bug in the
scans and fails the build.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from time import perf_counter

import numpy as np

from . import naive
from .classifiers import classify, is_primary, triple_zero_cube
from .dsl import BuiltRing, IdealExpr, IdealizeExpr, ProdExpr, ZnExpr, build_ring
from .ideal_algebra import (
    Ideal,
    all_ideals,
    annihilator,
    ideal_generated,
    ideal_intersection,
    ideal_power,
    ideal_product,
    irreducible_elements,
    is_field,
    radical,
    residual,
    z_relative,
    zero_ideal,
)
from .ring_core import (
    DEFAULT_MAX_ORDER,
    RingHom,
    hom_check,
    mk_product,
    mk_zn,
    normalize_multiplicative_set,
    product_strides,
)
from .ring_context import RingContext, make_context

VERIFIER_ORDER = (
    "tr",
    "max",
    "radical_prime",
    "vnr_equiv",
    "nq",
    "nounit",
    "divided",
    "ch",
    "triple_zero_consequences",
    "irreducible",
    "intersection",
    "residual_weakly_primary",
    "product_w1",
    "fi",
    "hom_transfer",
    "quotient",
    "localization",
    "free_triple",
    "nq_question",
)

# homs for the transfer-theorem family are generated, not enumerated; cap the
# rings that get quotient-projection homs so the family stays desk-scale
_HOM_RING_BOUND = 96
_DIAG_BOUND = 9


# ---------------------------------------------------------------------------
# corpus


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class CorpusConfig:
    zn_max: int = 60
    pair_pool: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8, 9)
    triple_pool: tuple[int, ...] = (2, 3)
    idealize_max: int = 16
    include_quotients: bool = True
    include_catalog: bool = True
    max_order: int = DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class Corpus:
    texts: tuple[str, ...]
    max_order: int = DEFAULT_MAX_ORDER

    @staticmethod
    def default(config: CorpusConfig | None = None) -> "Corpus":
        cfg = config or CorpusConfig()
        return Corpus(tuple(default_corpus_texts(cfg)), cfg.max_order)


def element_literal(built: BuiltRing, idx: int):
    """An element literal that resolves back to ``idx`` in this ring."""
    expr = built.expr
    if isinstance(expr, ProdExpr):
        orders = [f.ring.order for f in built.factors]
        strides = product_strides(orders)
        comps = [(idx // s) % o for o, s in zip(orders, strides)]
        return tuple(element_literal(f, c) for f, c in zip(built.factors, comps))
    if isinstance(expr, IdealizeExpr):
        k = expr.n // expr.d
        return (idx // k, (idx % k) * expr.d)
    if built.base is not None:  # quotient / localization: lift to the base
        pre = min(x for x, v in enumerate(built.hom.map) if v == idx)
        return element_literal(built.base, pre)
    return idx


def greedy_generators(ideal: Ideal) -> list[int]:
    """Small deterministic generating set: repeatedly adjoin the least
    element not yet generated."""
    ring = ideal.ring
    gens: list[int] = []
    current = frozenset({ring.zero})
    while current != ideal.elem_set:
        g = min(e for e in ideal.elems if e not in current)
        gens.append(g)
        current = ideal_generated(ring, gens).elem_set
    return gens


def ideal_expr_for(built: BuiltRing, ideal: Ideal) -> IdealExpr:
    return IdealExpr(tuple(element_literal(built, g) for g in greedy_generators(ideal)))


def default_corpus_texts(cfg: CorpusConfig) -> list[str]:
    base: list[str] = []
    base.extend(f"Z{n}" for n in range(2, cfg.zn_max + 1))
    pool = cfg.pair_pool
    base.extend(
        f"prod(Z{i},Z{j})" for i in pool for j in pool if i <= j
    )
    tp = cfg.triple_pool
    base.extend(
        f"prod(Z{i},Z{j},Z{k})"
        for i in tp
        for j in tp
        for k in tp
        if i <= j <= k
    )
    for n in range(2, cfg.idealize_max + 1):
        base.extend(f"idealize({n},{d})" for d in divisors(n))
    quotient_roots = list(base)
    if cfg.include_catalog:
        base.append("table(@f2xy_quotient)")
    texts = list(base)
    if cfg.include_quotients:
        for root in quotient_roots:
            built = build_ring(root, max_order=cfg.max_order)
            for j in all_ideals(built.ring, max_order=cfg.max_order):
                if not j.is_proper or j.is_zero:
                    continue
                texts.append(f"quot({root},{ideal_expr_for(built, j).to_text()})")
    return texts


# ---------------------------------------------------------------------------
# reports


@dataclass
class TheoremReport:
    theorem: str
    instances: int = 0
    skips: int = 0
    violations: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def hit(self, part: str | None = None, count: int = 1):
        self.instances += count
        if part:
            by = self.data.setdefault("instances_by_part", {})
            by[part] = by.get(part, 0) + count

    def skip(self, part: str | None = None, count: int = 1):
        self.skips += count
        if part:
            by = self.data.setdefault("skips_by_part", {})
            by[part] = by.get(part, 0) + count

    def violate(self, violation: dict):
        self.violations.append(violation)

    def merge(self, other: "TheoremReport"):
        self.instances += other.instances
        self.skips += other.skips
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        _merge_data(self.data, other.data)
        self.elapsed += other.elapsed

    def to_dict(self, *, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "instances": self.instances,
            "skips": self.skips,
            "violations": self.violations,
            "notes": self.notes,
            "data": self.data,
        }
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out

    @staticmethod
    def from_dict(d: dict) -> "TheoremReport":
        return TheoremReport(
            theorem=d["theorem"],
            instances=d["instances"],
            skips=d["skips"],
            violations=list(d.get("violations", [])),
            notes=list(d.get("notes", [])),
            data=dict(d.get("data", {})),
        )


def _merge_data(into: dict, other: dict):
    for key, val in other.items():
        if isinstance(val, dict):
            _merge_data(into.setdefault(key, {}), val)
        elif isinstance(val, list):
            into.setdefault(key, []).extend(val)
        elif isinstance(val, (int, float)) and not isinstance(val, bool):
            into[key] = into.get(key, 0) + val
        else:
            into[key] = val


def _violation(ctx: RingContext, detail: str, *, ideals=(), witness=None, replay=None) -> dict:
    ring = ctx.ring
    out = {
        "ring": ctx.text,
        "ideals": [list(ring.names_of(i.elems)) for i in ideals],
        "detail": detail,
    }
    if witness is not None:
        out["witness"] = witness
    if replay is not None:
        out["replay"] = replay
    return out


def _replay(ring, checks) -> dict:
    """Re-run the stated naive oracles; used to double-check any violation."""
    out = {}
    for predicate, ideal in checks:
        ok, _ = naive.ORACLES[predicate](ring, ideal.elem_set)
        out[f"{predicate}({','.join(ring.names_of(ideal.elems[:4]))}{'...' if len(ideal.elems) > 4 else ''})"] = ok
    return out


# ---------------------------------------------------------------------------
# verifiers (one ring at a time)


def _tr(ctx: RingContext, rep: TheoremReport):
    """Six downward facts: weakly prime / weakly primary / plain implications,
    the weakly-2AP-primary consequence, the domain equivalence, and the
    quasilocal-with-nil-maximal blanket case."""
    part6_ring = ctx.quasilocal_flag and next(iter(ctx.maximal_set)) == ctx.nilradical_set
    for ideal in ctx.proper_ideals:
        rec = ctx.record(ideal).verdicts
        for part, pre, post in (
            ("1", "weakly_prime", "weakly_one_absorbing_primary"),
            ("2", "weakly_primary", "weakly_one_absorbing_primary"),
            ("3", "one_absorbing_primary", "weakly_one_absorbing_primary"),
            ("4", "weakly_one_absorbing_primary", "weakly_two_absorbing_primary"),
        ):
            rep.hit(part)
            if rec[pre] and not rec[post]:
                rep.violate(
                    _violation(
                        ctx,
                        f"part {part}: {pre} holds but {post} fails",
                        ideals=[ideal],
                        replay=_replay(ctx.ring, [(pre, ideal), (post, ideal)]),
                    )
                )
        if ctx.domain_flag:
            rep.hit("5")
            if rec["weakly_one_absorbing_primary"] != rec["one_absorbing_primary"]:
                rep.violate(
                    _violation(
                        ctx,
                        "part 5: weakly/plain 1-absorbing-primary differ on a domain",
                        ideals=[ideal],
                        replay=_replay(
                            ctx.ring,
                            [
                                ("weakly_one_absorbing_primary", ideal),
                                ("one_absorbing_primary", ideal),
                            ],
                        ),
                    )
                )
        else:
            rep.skip("5")
        if part6_ring:
            rep.hit("6")
            if not rec["weakly_one_absorbing_primary"]:
                rep.violate(
                    _violation(
                        ctx,
                        "part 6: proper ideal not weakly 1-absorbing primary in a "
                        "quasilocal ring whose maximal ideal is the nilradical",
                        ideals=[ideal],
                        replay=_replay(ctx.ring, [("weakly_one_absorbing_primary", ideal)]),
                    )
                )
        else:
            rep.skip("6")


def _max(ctx: RingContext, rep: TheoremReport):
    """Weakly-1AP ideal with maximal radical must be primary (hence 1AP)."""
    for ideal in ctx.proper_ideals:
        rec = ctx.record(ideal).verdicts
        if rec["weakly_one_absorbing_primary"] and radical(ctx.canonical(ideal)).elem_set in ctx.maximal_set:
            rep.hit()
            if not (rec["primary"] and rec["one_absorbing_primary"]):
                rep.violate(
                    _violation(
                        ctx,
                        "weakly 1AP with maximal radical is not primary/1AP",
                        ideals=[ideal],
                        replay=_replay(
                            ctx.ring,
                            [
                                ("weakly_one_absorbing_primary", ideal),
                                ("primary", ideal),
                                ("one_absorbing_primary", ideal),
                            ],
                        ),
                    )
                )
        else:
            rep.skip()


def _radical_prime(ctx: RingContext, rep: TheoremReport):
    """On reduced rings, the radical of a nonzero weakly-1AP ideal is prime."""
    for ideal in ctx.proper_ideals:
        if ctx.reduced_flag and not ideal.is_zero and ctx.w1ap(ideal):
            rep.hit()
            rad = ctx.canonical(radical(ctx.canonical(ideal)))
            if not ctx.record(rad).verdicts["prime"]:
                rep.violate(
                    _violation(
                        ctx,
                        "radical of a nonzero weakly-1AP ideal is not prime on a reduced ring",
                        ideals=[ideal, rad],
                        replay=_replay(
                            ctx.ring,
                            [("weakly_one_absorbing_primary", ideal), ("prime", rad)],
                        ),
                    )
                )
        else:
            rep.skip()


def _vnr_equiv(ctx: RingContext, rep: TheoremReport):
    """On von Neumann regular rings: weakly 1AP = primary = 1AP for nonzero ideals."""
    for ideal in ctx.proper_ideals:
        if ctx.vnr_flag and not ideal.is_zero:
            rep.hit()
            rec = ctx.record(ideal).verdicts
            trio = (
                rec["weakly_one_absorbing_primary"],
                rec["primary"],
                rec["one_absorbing_primary"],
            )
            if len(set(trio)) != 1:
                rep.violate(
                    _violation(
                        ctx,
                        f"VNR equivalence broken: (w1AP, primary, 1AP) = {trio}",
                        ideals=[ideal],
                        replay=_replay(
                            ctx.ring,
                            [
                                ("weakly_one_absorbing_primary", ideal),
                                ("primary", ideal),
                                ("one_absorbing_primary", ideal),
                            ],
                        ),
                    )
                )
        else:
            rep.skip()


def _ann_never_maximal(ctx: RingContext, ideal: Ideal) -> bool:
    return all(
        annihilator(ctx.ring, i).elem_set not in ctx.maximal_set for i in ideal.elems
    )


def _nq(ctx: RingContext, rep: TheoremReport):
    """Non-quasilocal, no element of I has maximal annihilator: then
    weakly 1AP and weakly primary coincide."""
    for ideal in ctx.proper_ideals:
        if not ctx.quasilocal_flag and _ann_never_maximal(ctx, ideal):
            rep.hit()
            rec = ctx.record(ideal).verdicts
            if rec["weakly_one_absorbing_primary"] != rec["weakly_primary"]:
                rep.violate(
                    _violation(
                        ctx,
                        "weakly 1AP and weakly primary differ under the annihilator hypothesis",
                        ideals=[ideal],
                        replay=_replay(
                            ctx.ring,
                            [
                                ("weakly_one_absorbing_primary", ideal),
                                ("weakly_primary", ideal),
                            ],
                        ),
                    )
                )
        else:
            rep.skip()


def _nounit_ok_elems(ctx: RingContext) -> np.ndarray:
    """ok[i]: some nonunit w has w*i != 0 and w+u nonunit for a unit u."""
    got = ctx._lazy.get("nounit_ok")
    if got is None:
        ring = ctx.ring
        units = sorted(ring.units)
        witnesses = [
            w
            for w in ring.nonunits
            if any(ring.add[w][u] not in ring.units for u in units)
        ]
        if witnesses:
            got = (ring.mul_np[witnesses, :] != ring.zero).any(axis=0)
        else:
            got = np.zeros(ring.order, dtype=bool)
        ctx._lazy["nounit_ok"] = got
    return got


def _nounit(ctx: RingContext, rep: TheoremReport):
    """If every nonzero i in a weakly-1AP ideal admits a nonunit w with
    wi != 0 and w+u nonunit for some unit u, the ideal is weakly primary."""
    ok = _nounit_ok_elems(ctx)
    for ideal in ctx.proper_ideals:
        rec = ctx.record(ideal).verdicts
        hyp = all(ok[i] for i in ideal.elems if i != ctx.ring.zero)
        if hyp and rec["weakly_one_absorbing_primary"]:
            rep.hit()
            if not rec["weakly_primary"]:
                rep.violate(
                    _violation(
                        ctx,
                        "weakly 1AP but not weakly primary despite the witness hypothesis",
                        ideals=[ideal],
                        replay=_replay(
                            ctx.ring,
                            [
                                ("weakly_one_absorbing_primary", ideal),
                                ("weakly_primary", ideal),
                            ],
                        ),
                    )
                )
        else:
            rep.skip()


def _divided(ctx: RingContext, rep: TheoremReport):
    """On reduced divided rings, weakly 1AP = weakly primary (chained rings
    are divided, so the chained corollary rides along)."""
    applicable = ctx.reduced_flag and ctx.divided_flag
    if applicable and ctx.chained_flag:
        rep.data["chained_corollary_rings"] = rep.data.get("chained_corollary_rings", 0) + 1
    for ideal in ctx.proper_ideals:
        if applicable:
            rep.hit()
            rec = ctx.record(ideal).verdicts
            if rec["weakly_one_absorbing_primary"] != rec["weakly_primary"]:
                rep.violate(
                    _violation(
                        ctx,
                        "weakly 1AP and weakly primary differ on a reduced divided ring",
                        ideals=[ideal],
                        replay=_replay(
                            ctx.ring,
                            [
                                ("weakly_one_absorbing_primary", ideal),
                                ("weakly_primary", ideal),
                            ],
                        ),
                    )
                )
        else:
            rep.skip()


def _ch_conditions(ctx: RingContext, ideal: Ideal) -> tuple[bool, bool, bool, bool, bool]:
    ring = ctx.ring
    M = ring.mul_np
    zero, one = ring.zero, ring.one
    nu = ring.nonunits_np
    in_i = ideal.mask
    rad_mask = radical(ideal).mask
    ideals = ctx.ideals
    i_idx = ctx.index_of[ideal.elem_set]

    c1 = ctx.record(ideal).verdicts["weakly_one_absorbing_primary"]

    res_i = in_i[M]  # res_i[x, c]: x*c in I, i.e. x in (I : c)
    res_0 = M == zero
    eq_col = (res_i == res_0).all(axis=0)
    sub_rad = (~res_i | rad_mask[:, None]).all(axis=0)
    ok_col = eq_col | sub_rad
    pairs = M[np.ix_(nu, nu)]
    c2 = not ((~in_i[pairs]) & (~ok_col[pairs])).any()

    zero_id = zero_ideal(ring)
    c3 = True
    for other in ideals:
        if rad_mask[list(other.elems)].all():  # inside the radical: excluded
            continue
        j = residual(ideal, other)  # (I : a*I1) = ((I:I1) : a)
        j0 = residual(zero_id, other)
        t = j.mask[M]
        t0 = j0.mask[M]
        proper_a = ~t[one, :]
        ok3 = (t == t0).all(axis=0) | (~t | res_i).all(axis=0) | ~proper_a
        if not ok3[nu].all():
            c3 = False
            break

    prod = ctx.product_table
    res_by: dict[int, np.ndarray] = {}
    res0_by: dict[int, np.ndarray] = {}

    def res_mask(target: Ideal, t: int, store: dict) -> np.ndarray:
        got = store.get(t)
        if got is None:
            got = residual(target, ideals[t]).mask
            store[t] = got
        return got

    c4 = True
    k = len(ideals)
    for a in range(k):
        if rad_mask[list(ideals[a].elems)].all():
            continue
        for b in range(k):
            t = int(prod[a, b])
            m_ik = res_mask(ideal, t, res_by)
            if m_ik[one]:  # (I : I1*I2) improper
                continue
            if (m_ik == res_mask(zero_id, t, res0_by)).all():
                continue
            if (~m_ik | res_mask(ideal, b, res_by)).all():
                continue
            c4 = False
            break
        if not c4:
            break

    karange = np.arange(k)
    p3 = prod[prod, :]  # p3[a, b, c] = index of Ia*Ib*Ic
    cont_i = ctx.containment[:, i_idx]
    cont_rad = ctx.containment[:, ctx.radical_index[i_idx]]
    viol5 = (
        (p3 != ctx.zero_index)
        & cont_i[p3]
        & ~cont_i[prod][:, :, None]
        & ~cont_rad[karange][None, None, :]
    )
    c5 = not viol5.any()

    return c1, c2, c3, c4, c5


def _ch(ctx: RingContext, rep: TheoremReport):
    """Residual characterizations on u-rings.

    Asserted: weakly-1AP (1) holds iff conditions (2)-(5) all hold, plus the
    individually sound links (1)<=>(2), (2)=>(3), (5)=>(1). Condition (3) is
    NOT required to imply the rest: it is strictly weaker (witness: Z12 with
    I = (6), where (3) holds but (1), (2), (4), (5) all fail, via c = 2 and
    I1 = (3), whose product c*I1 lands inside I and so escapes (3)'s
    properness guard). Divergent condition vectors are tallied in the data.
    """
    for ideal in ctx.proper_ideals:
        if not ctx.u_ring_flag:
            rep.skip()
            continue
        rep.hit()
        c1, c2, c3, c4, c5 = _ch_conditions(ctx, ctx.canonical(ideal))
        rest = c2 and c3 and c4 and c5
        broken = []
        if c1 != rest:
            broken.append("(1) <=> (2)&(3)&(4)&(5)")
        if c1 != c2:
            broken.append("(1) <=> (2)")
        if c2 and not c3:
            broken.append("(2) => (3)")
        if c5 and not c1:
            broken.append("(5) => (1)")
        if broken:
            rep.violate(
                _violation(
                    ctx,
                    f"u-ring characterization broken ({'; '.join(broken)}): "
                    f"conditions (1..5) = {(c1, c2, c3, c4, c5)}",
                    ideals=[ideal],
                    witness={"conditions": [c1, c2, c3, c4, c5]},
                    replay=_replay(ctx.ring, [("weakly_one_absorbing_primary", ideal)]),
                )
            )
        if len({c1, c2, c3, c4, c5}) != 1:
            rep.data["condition3_divergences"] = rep.data.get("condition3_divergences", 0) + 1
            examples = rep.data.setdefault("condition3_examples", [])
            if len(examples) < 4:
                examples.append(
                    {
                        "ring": ctx.text,
                        "ideal": list(ctx.ring.names_of(ideal.elems)),
                        "conditions": [c1, c2, c3, c4, c5],
                    }
                )


def _triple_zero_consequences(ctx: RingContext, rep: TheoremReport):
    """For each 1-triple-zero of a weakly-1AP ideal: abI = 0; and when
    a, b lie outside (I : c): the bc/ac/I^2 products die and I^3 = 0;
    on reduced rings such an ideal collapses to zero."""
    ring = ctx.ring
    M = ring.mul_np
    for ideal in ctx.proper_ideals:
        can = ctx.canonical(ideal)
        if not ctx.w1ap(can):
            rep.skip("not-w1ap")
            continue
        cube, dom = triple_zero_cube(can)
        if not cube.any():
            rep.skip("no-triple-zero")
            continue
        rep.hit()
        in_i = can.mask
        i_list = list(can.elems)
        sub = M[np.ix_(dom, dom)]
        ann_i = (M[:, i_list] == ring.zero).all(axis=1)
        bad_ab = cube & ~ann_i[sub][:, :, None]
        if bad_ab.any():
            i, j, l = np.argwhere(bad_ab)[0]
            trip = (int(dom[i]), int(dom[j]), int(dom[l]))
            rep.violate(
                _violation(
                    ctx,
                    "triple-zero with ab*I != 0",
                    ideals=[ideal],
                    witness={"triple": list(ring.names_of(trip))},
                    replay=_replay(ring, [("weakly_one_absorbing_primary", ideal)]),
                )
            )
        in_sub = in_i[sub]
        outside = cube & ~in_sub[:, None, :] & ~in_sub[None, :, :]
        if outside.any():
            i2 = ideal_power(can, 2)
            i3 = ideal_product(i2, can)
            ann_i2 = (M[:, list(i2.elems)] == ring.zero).all(axis=1)
            ok = (
                ann_i[sub][None, :, :]
                & ann_i[sub][:, None, :]
                & ann_i2[dom][:, None, None]
                & ann_i2[dom][None, :, None]
                & ann_i2[dom][None, None, :]
            )
            bad = outside & ~ok
            if bad.any() or not i3.is_zero:
                i, j, l = np.argwhere(outside)[0]
                trip = (int(dom[i]), int(dom[j]), int(dom[l]))
                rep.violate(
                    _violation(
                        ctx,
                        "triple-zero with a,b outside (I:c) but surviving products or I^3 != 0",
                        ideals=[ideal],
                        witness={"triple": list(ring.names_of(trip)), "I3_zero": i3.is_zero},
                        replay=_replay(ring, [("weakly_one_absorbing_primary", ideal)]),
                    )
                )
            if ctx.reduced_flag and not can.is_zero:
                rep.violate(
                    _violation(
                        ctx,
                        "reduced ring: nonzero weakly-1AP ideal has a triple-zero "
                        "with a,b outside (I:c) (ac or bc should land in I)",
                        ideals=[ideal],
                        replay=_replay(ring, [("weakly_one_absorbing_primary", ideal)]),
                    )
                )


def _irreducible(ctx: RingContext, rep: TheoremReport):
    """Weakly 1AP but not weakly primary forces an irreducible element into
    every qualifying pair."""
    ring = ctx.ring
    for ideal in ctx.proper_ideals:
        rec = ctx.record(ideal).verdicts
        if not (rec["weakly_one_absorbing_primary"] and not rec["weakly_primary"]):
            rep.skip()
            continue
        rep.hit()
        can = ctx.canonical(ideal)
        nu = ring.nonunits_np
        M = ring.mul_np
        pairs = M[np.ix_(nu, nu)]
        in_i = can.mask
        in_rad = radical(can).mask
        qual = in_i[pairs] & (pairs != ring.zero) & ~in_i[nu][:, None] & ~in_rad[nu][None, :]
        if not qual.any():
            rep.violate(
                _violation(
                    ctx,
                    "not weakly primary yet no nonunit witness pair exists",
                    ideals=[ideal],
                    replay=_replay(ring, [("weakly_primary", ideal)]),
                )
            )
            continue
        irr = np.zeros(ring.order, dtype=bool)
        irr[list(irreducible_elements(ring))] = True
        bad = qual & ~irr[nu][:, None]
        if bad.any():
            i, j = np.argwhere(bad)[0]
            pair = (int(nu[i]), int(nu[j]))
            rep.violate(
                _violation(
                    ctx,
                    "witness pair whose first entry is not irreducible",
                    ideals=[ideal],
                    witness={"pair": list(ring.names_of(pair))},
                    replay=_replay(ring, [("weakly_one_absorbing_primary", ideal)]),
                )
            )


def _intersection(ctx: RingContext, rep: TheoremReport):
    """Intersections of weakly-1AP ideals sharing one radical stay weakly 1AP."""
    w1 = [i for i in ctx.proper_ideals if ctx.w1ap(i)]
    by_rad: dict[frozenset, list[Ideal]] = {}
    for i in w1:
        by_rad.setdefault(radical(ctx.canonical(i)).elem_set, []).append(i)
    qual_pairs = qual_triples = 0
    for group in by_rad.values():
        for combo_size in (2, 3):
            for combo in combinations(group, combo_size):
                meet = combo[0]
                for other in combo[1:]:
                    meet = ideal_intersection(meet, other)
                rep.hit(f"{combo_size}-wise")
                if combo_size == 2:
                    qual_pairs += 1
                else:
                    qual_triples += 1
                if not ctx.w1ap(ctx.canonical(meet)):
                    rep.violate(
                        _violation(
                            ctx,
                            "equal-radical intersection lost the weakly-1AP property",
                            ideals=list(combo) + [meet],
                            replay=_replay(
                                ctx.ring,
                                [("weakly_one_absorbing_primary", ctx.canonical(meet))],
                            ),
                        )
                    )
    rep.skip("2-wise", math.comb(len(w1), 2) - qual_pairs)
    rep.skip("3-wise", math.comb(len(w1), 3) - qual_triples)


def _residual_weakly_primary(ctx: RingContext, rep: TheoremReport):
    """(I : c) is weakly primary for weakly-1AP I and nonunit c outside I."""
    ring = ctx.ring
    for ideal in ctx.proper_ideals:
        can = ctx.canonical(ideal)
        if not ctx.w1ap(can):
            rep.skip("not-w1ap")
            continue
        res_cols = can.mask[ring.mul_np]  # column c: (I : c)
        seen: dict[bytes, str] = {}
        for c in ring.nonunits:
            if c in can.elem_set:
                continue
            col = res_cols[:, c]
            key = col.tobytes()
            verdict = seen.get(key)
            if verdict is None:
                elems = frozenset(np.flatnonzero(col).tolist())
                if ring.one in elems:
                    verdict = "improper"
                else:
                    verdict = (
                        "holds"
                        if ctx.record(
                            ctx.canonical(Ideal._trusted(ring, elems))
                        ).verdicts["weakly_primary"]
                        else "fails"
                    )
                seen[key] = verdict
            if verdict == "improper":
                rep.skip("improper")
                continue
            rep.hit()
            if verdict == "fails":
                res = ctx.canonical(
                    Ideal._trusted(ring, frozenset(np.flatnonzero(col).tolist()))
                )
                rep.violate(
                    _violation(
                        ctx,
                        f"(I : {ring.names[c]}) is not weakly primary",
                        ideals=[ideal, res],
                        witness={"c": ring.names[c]},
                        replay=_replay(ring, [("weakly_primary", res)]),
                    )
                )


def _product_w1(ctx: RingContext, rep: TheoremReport):
    """Over a product of two non-fields, nonzero ideals: weakly 1AP =
    primary-factor shape = 1AP = primary."""
    expr = ctx.built.expr
    if not (isinstance(expr, ProdExpr) and len(expr.factors) == 2):
        rep.skip("ring")
        return
    f1, f2 = ctx.built.factors
    if is_field(f1.ring) or is_field(f2.ring):
        rep.skip("ring")
        return
    orders = [f1.ring.order, f2.ring.order]
    strides = product_strides(orders)
    for ideal in ctx.proper_ideals:
        if ideal.is_zero:
            rep.skip("zero")
            continue
        rep.hit()
        rec = ctx.record(ideal).verdicts
        comps = [((e // strides[0]) % orders[0], e % orders[1]) for e in ideal.elems]
        left = sorted({a for a, _ in comps})
        right = sorted({b for _, b in comps})
        c2 = False
        if len(ideal.elems) == len(left) * len(right):
            if len(right) == orders[1]:
                c2 = is_primary(Ideal._trusted(f1.ring, left)).holds
            elif len(left) == orders[0]:
                c2 = is_primary(Ideal._trusted(f2.ring, right)).holds
        conds = (
            rec["weakly_one_absorbing_primary"],
            c2,
            rec["one_absorbing_primary"],
            rec["primary"],
        )
        if len(set(conds)) != 1:
            rep.violate(
                _violation(
                    ctx,
                    f"two-factor product equivalence broken: {conds}",
                    ideals=[ideal],
                    witness={"conditions": list(conds)},
                    replay=_replay(
                        ctx.ring,
                        [
                            ("weakly_one_absorbing_primary", ideal),
                            ("one_absorbing_primary", ideal),
                            ("primary", ideal),
                        ],
                    ),
                )
            )


def _fi(ctx: RingContext, rep: TheoremReport):
    """All proper ideals weakly 1AP iff the ring is a product of exactly two fields."""
    expr = ctx.built.expr
    if not isinstance(expr, ProdExpr):
        rep.skip()
        return
    rep.hit()
    lhs = all(ctx.w1ap(i) for i in ctx.proper_ideals)
    rhs = len(expr.factors) == 2 and all(is_field(f.ring) for f in ctx.built.factors)
    if lhs != rhs:
        offender = next((i for i in ctx.proper_ideals if not ctx.w1ap(i)), None)
        rep.violate(
            _violation(
                ctx,
                f"every-ideal-weakly-1AP = {lhs} but two-fields shape = {rhs}",
                ideals=[offender] if offender else [],
                replay=_replay(
                    ctx.ring,
                    [("weakly_one_absorbing_primary", offender)] if offender else [],
                ),
            )
        )


def _generated_homs(ctx: RingContext):
    """Deterministic hom family: product projections, small CRT splittings and
    diagonal embeddings for Z_n, and quotient projections on small rings."""
    ring = ctx.ring
    expr = ctx.built.expr
    homs: list[tuple[str, RingHom]] = []
    if isinstance(expr, ProdExpr):
        orders = [f.ring.order for f in ctx.built.factors]
        strides = product_strides(orders)
        for pos, factor in enumerate(ctx.built.factors):
            mapping = tuple(
                (x // strides[pos]) % orders[pos] for x in range(ring.order)
            )
            homs.append((f"proj{pos + 1}", RingHom(ring, factor.ring, mapping)))
    if isinstance(expr, ZnExpr):
        n = expr.n
        split = next(
            (
                (a, n // a)
                for a in range(2, n)
                if n % a == 0 and math.gcd(a, n // a) == 1 and n // a > 1
            ),
            None,
        )
        if split is not None:
            a, b = split
            codomain = mk_product([mk_zn(a), mk_zn(b)], max_order=ctx.max_order)
            mapping = tuple((x % a) * b + (x % b) for x in range(n))
            homs.append((f"crt-Z{a}xZ{b}", RingHom(ring, codomain, mapping)))
        if n <= _DIAG_BOUND:
            codomain = mk_product([ring, ring], max_order=ctx.max_order)
            mapping = tuple(x * n + x for x in range(n))
            homs.append(("diag", RingHom(ring, codomain, mapping)))
    if ring.order <= _HOM_RING_BOUND:
        for j in ctx.proper_ideals:
            if j.is_zero:
                continue
            qctx = ctx.quotient_context(j)
            homs.append((f"quot-by-{len(j)}", qctx.hom))
    return homs


def _hom_transfer(ctx: RingContext, rep: TheoremReport):
    """Preimages along injective nonunit-preserving homs and images along
    surjections with small kernel keep the weakly-1AP property."""
    for tag, hom in _generated_homs(ctx):
        ok, law = hom_check(hom)
        if not ok:
            raise AssertionError(f"generated hom {tag} on {ctx.text} broke law {law}")
        codomain = hom.codomain
        if hom.is_injective():
            if hom.preserves_nonunits():
                for j in all_ideals(codomain, max_order=ctx.max_order):
                    if not j.is_proper or not classify(j).verdicts[
                        "weakly_one_absorbing_primary"
                    ]:
                        continue
                    rep.hit("preimage")
                    pre = frozenset(
                        a for a in range(ctx.ring.order) if hom.map[a] in j.elem_set
                    )
                    if not ctx.w1ap(ctx.canonical(Ideal._trusted(ctx.ring, pre))):
                        rep.violate(
                            _violation(
                                ctx,
                                f"hom {tag}: preimage of a weakly-1AP ideal is not weakly 1AP",
                                ideals=[Ideal._trusted(ctx.ring, pre)],
                                witness={"hom": tag},
                                replay=_replay(
                                    ctx.ring,
                                    [
                                        (
                                            "weakly_one_absorbing_primary",
                                            Ideal._trusted(ctx.ring, pre),
                                        )
                                    ],
                                ),
                            )
                        )
            else:
                rep.skip("preimage-nonunit-hypothesis")  # the classic failure pattern
        else:
            rep.skip("preimage-not-injective")
        if hom.is_surjective():
            kernel = hom.kernel_elems()
            for ideal in ctx.proper_ideals:
                can = ctx.canonical(ideal)
                if not ctx.w1ap(can) or not kernel <= can.elem_set:
                    rep.skip("image-hypothesis")
                    continue
                rep.hit("image")
                image = Ideal._trusted(codomain, {hom.map[e] for e in can.elems})
                if not classify(image).verdicts["weakly_one_absorbing_primary"]:
                    rep.violate(
                        _violation(
                            ctx,
                            f"hom {tag}: image of a weakly-1AP ideal is not weakly 1AP",
                            ideals=[ideal],
                            witness={"hom": tag},
                            replay=_replay(
                                codomain, [("weakly_one_absorbing_primary", image)]
                            ),
                        )
                    )
        else:
            rep.skip("image-not-surjective")


def _quotient(ctx: RingContext, rep: TheoremReport):
    """Quotient transfer: I/J stays weakly 1AP; with liftable units and a
    (weakly) 1AP J the property pulls back; a 1AP zero ideal upgrades
    weakly-1AP to 1AP."""
    zero_rec = ctx.record(zero_ideal(ctx.ring)).verdicts
    if zero_rec["one_absorbing_primary"]:
        for ideal in ctx.proper_ideals:
            rec = ctx.record(ideal).verdicts
            if rec["weakly_one_absorbing_primary"]:
                rep.hit("3")
                if not rec["one_absorbing_primary"]:
                    rep.violate(
                        _violation(
                            ctx,
                            "part 3: zero ideal 1AP but a weakly-1AP ideal is not 1AP",
                            ideals=[ideal],
                            replay=_replay(
                                ctx.ring, [("one_absorbing_primary", ideal)]
                            ),
                        )
                    )
            else:
                rep.skip("3")
    else:
        rep.skip("3")
    cont = ctx.containment
    for jpos, j in enumerate(ctx.ideals):
        if not j.is_proper or j.is_zero:
            continue
        qctx = ctx.quotient_context(j)
        j_rec = ctx.record(j).verdicts
        for ipos, ideal in enumerate(ctx.ideals):
            if not ideal.is_proper or not cont[jpos, ipos]:
                continue
            image = frozenset(qctx.hom.map[e] for e in ideal.elems)
            image_w1 = qctx.record(image).verdicts["weakly_one_absorbing_primary"]
            rec = ctx.record(ideal).verdicts
            if rec["weakly_one_absorbing_primary"]:
                rep.hit("1")
                if not image_w1:
                    rep.violate(
                        _violation(
                            ctx,
                            "part 1: I/J lost the weakly-1AP property",
                            ideals=[ideal, j],
                            replay=_replay(
                                ctx.ring, [("weakly_one_absorbing_primary", ideal)]
                            ),
                        )
                    )
            else:
                rep.skip("1")
            if qctx.units_lift and j_rec["one_absorbing_primary"] and image_w1:
                rep.hit("2")
                if not rec["one_absorbing_primary"]:
                    rep.violate(
                        _violation(
                            ctx,
                            "part 2: 1AP kernel and weakly-1AP image but I is not 1AP",
                            ideals=[ideal, j],
                            replay=_replay(ctx.ring, [("one_absorbing_primary", ideal)]),
                        )
                    )
            else:
                rep.skip("2")
            if qctx.units_lift and j_rec["weakly_one_absorbing_primary"] and image_w1:
                rep.hit("4")
                if not rec["weakly_one_absorbing_primary"]:
                    rep.violate(
                        _violation(
                            ctx,
                            "part 4: weakly-1AP kernel and image but I is not weakly 1AP",
                            ideals=[ideal, j],
                            replay=_replay(
                                ctx.ring, [("weakly_one_absorbing_primary", ideal)]
                            ),
                        )
                    )
            else:
                rep.skip("4")


def _multiplicative_sets(ctx: RingContext) -> list[frozenset[int]]:
    ring = ctx.ring
    seen: set[frozenset] = set()
    out: list[frozenset] = []
    for s in ring.nonunits:
        closure = normalize_multiplicative_set(ring, [s])
        if ring.zero in closure or closure in seen:
            continue
        seen.add(closure)
        out.append(closure)
    units = frozenset(ring.units)
    if units not in seen:
        out.append(units)
    out.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return out


def _localization(ctx: RingContext, rep: TheoremReport):
    """Fractions of a weakly-1AP ideal stay weakly 1AP when S misses I, and
    the property descends when S avoids all zero divisors."""
    from .ring_core import mk_localization

    ring = ctx.ring
    zdiv = ctx.zero_divisor_set
    # localizations with the same collapse kernel are the same ring, so their
    # extension verdicts can be shared across different S
    kernel_cache: dict[tuple, bool] = ctx._lazy.setdefault("loc_cache", {})
    for s_set in _multiplicative_sets(ctx):
        loc_ring, phi = mk_localization(ring, s_set, max_order=ctx.max_order)
        s_regular = not (s_set & zdiv)
        kernel = frozenset(phi.kernel_elems())
        trivial_kernel = kernel == {ring.zero}

        def image_w1ap(ideal: Ideal) -> bool:
            if trivial_kernel:
                # nothing collapses: the fraction ring is R itself (indices
                # preserved by the min-representative convention)
                return ctx.w1ap(ideal)
            key = (kernel, ideal.elem_set)
            got = kernel_cache.get(key)
            if got is None:
                extension = ideal_generated(loc_ring, {phi.map[e] for e in ideal.elems})
                got = classify(extension).verdicts["weakly_one_absorbing_primary"]
                kernel_cache[key] = got
            return got

        for ideal in ctx.proper_ideals:
            can = ctx.canonical(ideal)
            w1 = ctx.w1ap(can)
            if w1 and not (s_set & can.elem_set):
                rep.hit("extend")
                if not image_w1ap(can):
                    rep.violate(
                        _violation(
                            ctx,
                            "S^-1 I is not weakly 1AP despite S and I being disjoint",
                            ideals=[ideal],
                            witness={"S": list(ring.names_of(sorted(s_set)))},
                            replay=_replay(
                                ring, [("weakly_one_absorbing_primary", can)]
                            ),
                        )
                    )
            else:
                rep.skip("extend")
            if (
                s_regular
                and not (s_set & z_relative(can))
                and image_w1ap(can)
            ):
                rep.hit("descend")
                if not w1:
                    rep.violate(
                        _violation(
                            ctx,
                            "S^-1 I weakly 1AP with S regular, but I is not weakly 1AP",
                            ideals=[ideal],
                            witness={"S": list(ring.names_of(sorted(s_set)))},
                            replay=_replay(
                                ring, [("weakly_one_absorbing_primary", can)]
                            ),
                        )
                    )
            else:
                rep.skip("descend")


def _free_triple(ctx: RingContext, rep: TheoremReport):
    """Triple-zero-free configurations: abJ <= I forces J into the radical,
    and ideal triples with nonzero product contained in I absorb pairwise."""
    ring = ctx.ring
    M = ring.mul_np
    for ideal in ctx.proper_ideals:
        can = ctx.canonical(ideal)
        if not ctx.w1ap(can):
            rep.skip("not-w1ap")
            continue
        in_i = can.mask
        rad = radical(can)
        in_rad = rad.mask
        i_idx = ctx.index_of[can.elem_set]
        rad_idx = ctx.radical_index[i_idx]
        nu = ring.nonunits_np
        exists_pair = np.zeros(ring.order, dtype=bool)
        exists_pair[np.unique(M[np.ix_(nu, nu)])] = True

        # abJ <= I with ab outside I and no triple-zero (a, b, j)
        for jpos, j in enumerate(ctx.ideals):
            if not j.is_proper:
                continue
            res_mask = residual(can, j).mask
            outside_rad = [e for e in j.elems if not in_rad[e]]
            if outside_rad:
                tz_x = (M[:, outside_rad] == ring.zero).any(axis=1)
            else:
                tz_x = np.zeros(ring.order, dtype=bool)
            hyp = res_mask & ~in_i & ~tz_x & exists_pair
            if hyp.any():
                rep.hit("tri")
                if not ctx.containment[jpos, rad_idx]:
                    ab = int(np.flatnonzero(hyp)[0])
                    rep.violate(
                        _violation(
                            ctx,
                            "abJ <= I, ab outside I, no triple-zero, yet J is not in the radical",
                            ideals=[ideal, j],
                            witness={"ab": ring.names[ab]},
                            replay=_replay(
                                ring, [("weakly_one_absorbing_primary", can)]
                            ),
                        )
                    )
            else:
                rep.skip("tri")

        # free triples of proper ideals
        cube, dom = triple_zero_cube(can)
        pos = {int(v): k for k, v in enumerate(dom)}
        proper_idx = [
            ctx.index_of[i.elem_set] for i in ctx.proper_ideals
        ]
        prod = ctx.product_table
        cont_i = ctx.containment[:, i_idx]
        cont_rad = ctx.containment[:, rad_idx]
        badc_cache: dict[tuple[int, int], np.ndarray] = {}
        for a in proper_idx:
            pa = [pos[e] for e in ctx.ideals[a].elems]
            for b in proper_idx:
                p2 = int(prod[a, b])
                for c in proper_idx:
                    p3 = int(prod[p2, c])
                    if p3 == ctx.zero_index or not cont_i[p3]:
                        continue
                    key = (min(a, b), max(a, b))
                    badc = badc_cache.get(key)
                    if badc is None:
                        pb = [pos[e] for e in ctx.ideals[b].elems]
                        badc = cube[np.ix_(pa, pb)].any(axis=(0, 1))
                        badc_cache[key] = badc
                    free = not badc[[pos[e] for e in ctx.ideals[c].elems]].any()
                    if not free:
                        rep.skip("free")
                        continue
                    rep.hit("free")
                    if not (cont_i[p2] or cont_rad[c]):
                        rep.violate(
                            _violation(
                                ctx,
                                "free triple with nonzero product in I, but "
                                "I1*I2 escapes I and I3 escapes the radical",
                                ideals=[ideal, ctx.ideals[a], ctx.ideals[b], ctx.ideals[c]],
                                replay=_replay(
                                    ring, [("weakly_one_absorbing_primary", can)]
                                ),
                            )
                        )


def _nq_question(ctx: RingContext, rep: TheoremReport):
    """Miner for the open annihilator question: collect every weakly-1AP,
    not-weakly-primary ideal of a non-quasilocal ring and report whether some
    element's annihilator is maximal. A candidate with no such element would
    settle the question in the negative."""
    if ctx.quasilocal_flag:
        rep.skip("quasilocal-ring", len(ctx.proper_ideals))
        return
    for ideal in ctx.proper_ideals:
        rep.hit()
        rec = ctx.record(ideal).verdicts
        if not (rec["weakly_one_absorbing_primary"] and not rec["weakly_primary"]):
            continue
        can = ctx.canonical(ideal)
        has_max = any(
            annihilator(ctx.ring, i).elem_set in ctx.maximal_set for i in can.elems
        )
        w1_ok, _ = naive.is_weakly_one_absorbing_primary(ctx.ring, can.elem_set)
        wp_ok, _ = naive.is_weakly_primary(ctx.ring, can.elem_set)
        rep.data.setdefault("candidates", []).append(
            {
                "ring": ctx.text,
                "ideal": list(ctx.ring.names_of(can.elems)),
                "has_maximal_annihilator": has_max,
                "replay_confirms": bool(w1_ok and not wp_ok),
            }
        )


VERIFIERS = {
    "tr": _tr,
    "max": _max,
    "radical_prime": _radical_prime,
    "vnr_equiv": _vnr_equiv,
    "nq": _nq,
    "nounit": _nounit,
    "divided": _divided,
    "ch": _ch,
    "triple_zero_consequences": _triple_zero_consequences,
    "irreducible": _irreducible,
    "intersection": _intersection,
    "residual_weakly_primary": _residual_weakly_primary,
    "product_w1": _product_w1,
    "fi": _fi,
    "hom_transfer": _hom_transfer,
    "quotient": _quotient,
    "localization": _localization,
    "free_triple": _free_triple,
    "nq_question": _nq_question,
}


# ---------------------------------------------------------------------------
# suite driver


@dataclass
class SuiteResult:
    reports: list[TheoremReport]
    corpus: tuple[str, ...]
    notes: list[str]
    elapsed: float = 0.0

    @property
    def total_violations(self) -> int:
        return sum(len(r.violations) for r in self.reports)

    def to_dict(self, *, timing: bool = False) -> dict:
        out = {
            "schema": "ringbench-verify/1",
            "corpus": list(self.corpus),
            "theorems": [r.to_dict(timing=timing) for r in self.reports],
            "notes": self.notes,
            "summary": {
                "rings": len(self.corpus),
                "instances": sum(r.instances for r in self.reports),
                "skips": sum(r.skips for r in self.reports),
                "violations": self.total_violations,
            },
        }
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out

    @staticmethod
    def from_dict(d: dict) -> "SuiteResult":
        return SuiteResult(
            reports=[TheoremReport.from_dict(r) for r in d["theorems"]],
            corpus=tuple(d["corpus"]),
            notes=list(d.get("notes", [])),
        )


def resolve_theorems(spec: str | list[str] | None) -> tuple[str, ...]:
    if spec is None:
        return VERIFIER_ORDER
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    names = [n.strip() for n in names if n.strip()]
    unknown = [n for n in names if n not in VERIFIERS]
    if unknown:
        raise ValueError(
            f"unknown theorem id(s) {unknown}; known: {', '.join(VERIFIER_ORDER)}"
        )
    return tuple(n for n in VERIFIER_ORDER if n in names)


def verify_ring(text: str, theorems: tuple[str, ...], max_order: int) -> dict[str, dict]:
    """All requested verifiers on one corpus ring; returns report deltas."""
    ctx = make_context(text, max_order)
    out = {}
    for name in theorems:
        rep = TheoremReport(name)
        t0 = perf_counter()
        VERIFIERS[name](ctx, rep)
        rep.elapsed = perf_counter() - t0
        out[name] = rep.to_dict(timing=False)
        out[name]["elapsed"] = rep.elapsed
    return out


def _worker(args) -> dict[str, dict]:
    return verify_ring(*args)


def z6_intersection_note() -> str:
    z6 = mk_zn(6)
    two = ideal_generated(z6, [2])
    three = ideal_generated(z6, [3])
    meet = ideal_intersection(two, three)
    w2 = classify(two).verdicts["weakly_one_absorbing_primary"]
    w3 = classify(three).verdicts["weakly_one_absorbing_primary"]
    rec = classify(meet)
    wm = rec.verdicts["weakly_one_absorbing_primary"]
    om = rec.verdicts["one_absorbing_primary"]
    return (
        f"Z6: (2) and (3) are weakly 1-absorbing primary ({w2}, {w3}); their "
        f"intersection (2)&(3) = ({','.join(z6.names_of(meet.elems))}) is itself "
        f"weakly 1-absorbing primary = {wm} (the zero ideal always is, since no "
        f"nonzero product lands in it), though 1-absorbing primary = {om}. The "
        "radicals of (2) and (3) differ, so the equal-radical intersection "
        "property does not apply to this pair; any claim that this intersection "
        "fails weakly-1AP contradicts the zero-ideal fact above."
    )


def run_suite(
    corpus: Corpus | list[str] | tuple[str, ...],
    theorems: str | list[str] | None = None,
    jobs: int = 1,
    progress=None,
) -> SuiteResult:
    if isinstance(corpus, Corpus):
        texts = list(corpus.texts)
        max_order = corpus.max_order
    else:
        texts = list(corpus)
        max_order = DEFAULT_MAX_ORDER
    ids = resolve_theorems(theorems)
    t0 = perf_counter()
    args = [(text, ids, max_order) for text in texts]
    merged = {name: TheoremReport(name) for name in ids}
    if jobs > 1 and len(texts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_worker, args, chunksize=max(1, len(args) // (jobs * 8)))
            for k, deltas in enumerate(results):
                _absorb(merged, deltas)
                if progress:
                    progress(k + 1, len(texts), texts[k])
    else:
        for k, arg in enumerate(args):
            _absorb(merged, _worker(arg))
            if progress:
                progress(k + 1, len(texts), texts[k])
    reports = [merged[name] for name in ids]
    for rep in reports:
        _finalize(rep)
    notes = []
    if any(t == "Z6" for t in texts):
        notes.append(z6_intersection_note())
    return SuiteResult(reports, tuple(texts), notes, elapsed=perf_counter() - t0)


def _absorb(merged: dict[str, TheoremReport], deltas: dict[str, dict]):
    for name, d in deltas.items():
        elapsed = d.pop("elapsed", 0.0)
        rep = TheoremReport.from_dict(d)
        rep.elapsed = elapsed
        merged[name].merge(rep)


def _finalize(rep: TheoremReport):
    if rep.theorem == "nq_question":
        candidates = rep.data.get("candidates", [])
        missing = [c for c in candidates if not c["has_maximal_annihilator"]]
        rep.data["candidate_count"] = len(candidates)
        rep.data["all_candidates_have_maximal_annihilator"] = (
            all(c["has_maximal_annihilator"] for c in candidates) if candidates else None
        )
        if not candidates:
            rep.notes.append(
                "no weakly-1AP, not-weakly-primary ideal found on any "
                "non-quasilocal corpus ring; the question is untouched by this corpus"
            )
        elif missing:
            rep.notes.append(
                f"ANSWER CANDIDATE: {len(missing)} ideal(s) whose elements all have "
                "non-maximal annihilators yet separate weakly-1AP from weakly-primary; "
                "this would resolve the open question negatively - inspect 'candidates'"
            )
        else:
            rep.notes.append(
                f"all {len(candidates)} candidate ideal(s) contain an element with a "
                "maximal annihilator; no counterexample to the open question here"
            )


# spec-facing aliases: every verifier is callable on a whole corpus


def _corpus_runner(name: str):
    def run(corpus, jobs: int = 1) -> TheoremReport:
        return run_suite(corpus, theorems=[name], jobs=jobs).reports[0]

    run.__name__ = f"verify_{name}"
    run.__doc__ = f"Run the '{name}' verifier over a corpus and merge the report."
    return run


verify_tr = _corpus_runner("tr")
verify_max = _corpus_runner("max")
verify_radical_prime = _corpus_runner("radical_prime")
verify_vnr_equiv = _corpus_runner("vnr_equiv")
verify_nq = _corpus_runner("nq")
verify_nounit = _corpus_runner("nounit")
verify_divided = _corpus_runner("divided")
verify_ch = _corpus_runner("ch")
verify_triple_zero_consequences = _corpus_runner("triple_zero_consequences")
verify_irreducible = _corpus_runner("irreducible")
verify_intersection = _corpus_runner("intersection")
verify_residual_weakly_primary = _corpus_runner("residual_weakly_primary")
verify_product_w1 = _corpus_runner("product_w1")
verify_fi = _corpus_runner("fi")
verify_hom_transfer = _corpus_runner("hom_transfer")
verify_quotient = _corpus_runner("quotient")
verify_localization = _corpus_runner("localization")
verify_free_triple = _corpus_runner("free_triple")
search_nq_question = _corpus_runner("nq_question")
