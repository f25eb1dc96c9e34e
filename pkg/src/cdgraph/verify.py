"""Machine checks of the coprime-class-size results on a concrete group.

Each ``check_*`` function returns one :class:`VerificationReport`.  Statuses:

``pass``
    every instance of the statement holds (possibly vacuously, see ``details``).
``fail``
    a counterexample was found; ``witnesses`` describes it.
``hypothesis_not_met``
    the statement has no instance in this group.
``skipped_cap``
    a resource cap prevented the computation.
``unknown``
    a heuristic search (p-complements, Frobenius complements) gave up.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from sympy import nextprime

from .classes import (
    ClassProfile,
    ConjugacyClass,
    center,
    centralizer,
    class_product,
    conjugacy_classes,
    pi_part,
    prime_divisors,
)
from .frobenius import (
    DEFAULT_SEARCH_BUDGET,
    almost_simple_socle,
    is_quasi_frobenius,
    p_complement_search,
)
from .graphs import (
    bipartite_divisor,
    delta_p,
    equal_size_caveat,
    gamma,
    gamma_p,
    match_components,
    metrics,
    p_regular_sizes,
)
from .group import CapExceeded, PermutationGroup, act_by_conjugation, orbit_of_action
from .perm import Permutation, _mul, element_order
from .subgroups import (
    QUOTIENT_CAP,
    CosetAction,
    class_closure,
    core_r,
    group_from_elements,
    intersection,
    is_nilpotent,
    is_soluble,
    normal_lattice,
    o_pi_prime,
)

__all__ = [
    "STATUSES",
    "CoprimePair",
    "VerificationReport",
    "SuiteConfig",
    "find_coprime_pairs",
    "element_word",
    "check_collection_lemma",
    "check_fund_lemma",
    "check_is_normal_lemma",
    "check_theorem_A",
    "check_cor_unique_minimal",
    "check_theorem_B",
    "check_cor_containment",
    "check_theorem_C",
    "check_theorem_D",
    "check_gamma_structure",
    "check_cor_M",
    "check_cor_5",
    "check_cor_discon",
    "check_cor_two_sizes",
    "check_cor_consecutive",
    "check_prime_power_sizes",
    "check_regular_complete",
    "GROUP_CHECKS",
    "PI_CHECKS",
    "P_CHECKS",
    "ALL_CHECKS",
    "default_primes",
    "default_pi_sets",
    "run_check",
    "run_suite",
    "replay_witness",
]

STATUSES = ("pass", "fail", "hypothesis_not_met", "skipped_cap", "unknown")
_RANK = {"pass": 0, "skipped_cap": 1, "unknown": 2, "fail": 3}
WORD_CAP = 200_000


@dataclass(frozen=True)
class CoprimePair:
    class_x: ConjugacyClass
    class_y: ConjugacyClass

    @property
    def x(self) -> Permutation:
        return self.class_x.representative

    @property
    def y(self) -> Permutation:
        return self.class_y.representative


@dataclass
class VerificationReport:
    group_name: str
    check_id: str
    status: str
    witnesses: list[dict] = field(default_factory=list)
    p: int | None = None
    pi: tuple[int, ...] | None = None
    hypothesis: str | None = None  # the unmet hypothesis, or the reason for skipped/unknown
    details: dict = field(default_factory=dict)
    timing: float = 0.0
    group_order: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def sort_key(self) -> tuple:
        return (self.group_order, self.group_name, self.check_id,
                -1 if self.p is None else self.p,
                (-1,) if self.pi is None else (len(self.pi),) + tuple(self.pi))

    def to_dict(self) -> dict:
        """Stable record without timing."""
        return {
            "group": self.group_name,
            "order": self.group_order,
            "check_id": self.check_id,
            "p": self.p,
            "pi": None if self.pi is None else list(self.pi),
            "status": self.status,
            "hypothesis": self.hypothesis,
            "witnesses": self.witnesses,
            "details": self.details,
        }


@dataclass
class SuiteConfig:
    checks: list[str] | None = None  # None runs every check
    primes: list[int] | None = None  # None: every p dividing |G| plus the least non-divisor
    pi_sets: list[tuple[int, ...]] | None = None  # None: subsets of size <= 2 and complements of singletons
    search_budget: int = DEFAULT_SEARCH_BUDGET
    seed: int = 0
    quotient_cap: int = QUOTIENT_CAP
    intersection_cap: int = 10**6
    member_check_cap: int = 10**4


class _Outcome:
    """Accumulates per-instance results into one status."""

    def __init__(self):
        self.rank = 0
        self.witnesses: list[dict] = []
        self.reasons: list[str] = []
        self.details: dict = {}

    def fail(self, witness: dict) -> None:
        self.rank = max(self.rank, _RANK["fail"])
        self.witnesses.append(witness)

    def unknown(self, reason: str) -> None:
        self.rank = max(self.rank, _RANK["unknown"])
        if reason not in self.reasons:
            self.reasons.append(reason)

    def skipped(self, reason: str) -> None:
        self.rank = max(self.rank, _RANK["skipped_cap"])
        if reason not in self.reasons:
            self.reasons.append(reason)

    def require(self, ok: bool, witness: dict) -> bool:
        if not ok:
            self.fail(witness)
        return ok

    @property
    def status(self) -> str:
        return next(s for s, r in _RANK.items() if r == self.rank)


def _report(G, check_id, out: _Outcome, p=None, pi=None) -> VerificationReport:
    return VerificationReport(
        group_name=G.name or repr(G), check_id=check_id, status=out.status,
        witnesses=out.witnesses, p=p, pi=pi,
        hypothesis="; ".join(out.reasons) or None, details=out.details,
        group_order=G.order(),
    )


def _vacuous(G, check_id, hypothesis, p=None, pi=None, details=None) -> VerificationReport:
    return VerificationReport(
        group_name=G.name or repr(G), check_id=check_id, status="hypothesis_not_met",
        p=p, pi=pi, hypothesis=hypothesis, details=details or {}, group_order=G.order(),
    )


# -- witnesses ----------------------------------------------------------------


def element_word(G: PermutationGroup, g: Permutation) -> str | None:
    """A shortest word in the generators ``s1, s2, ...`` evaluating to ``g``.

    Found by breadth-first search over right multiplication; None when the
    group is larger than ``WORD_CAP``.
    """
    if g.is_identity():
        return "1"
    words = G.memo.get("words")
    if words is None:
        if G.order() > WORD_CAP:
            return None
        ident = G.identity
        words = {ident: ()}
        q = deque([ident])
        while q:
            h = q.popleft()
            w = words[h]
            for i, s in enumerate(G.generators):
                k = _mul(h, s)
                if k not in words:
                    words[k] = w + (i,)
                    q.append(k)
        G.memo["words"] = words
    w = words.get(g)
    if w is None:
        return None
    return "*".join(f"s{i + 1}" for i in w)


def _elem(G: PermutationGroup, g: Permutation) -> dict:
    return {"cycles": str(g), "word": element_word(G, g)}


def _pair(G: PermutationGroup, pair: CoprimePair) -> dict:
    return {
        "x": _elem(G, pair.x), "y": _elem(G, pair.y),
        "class_x": pair.class_x.index, "class_y": pair.class_y.index,
        "size_x": pair.class_x.size, "size_y": pair.class_y.size,
    }


# -- pairs --------------------------------------------------------------------


def find_coprime_pairs(profile: ClassProfile) -> list[CoprimePair]:
    """Unordered pairs of non-central classes with coprime sizes, in class order."""
    nt = [c for c in profile.classes if c.size > 1]
    return [CoprimePair(a, b) for a, b in combinations(nt, 2) if math.gcd(a.size, b.size) == 1]


def _pairs_or_vacuous(G, check_id):
    pairs = find_coprime_pairs(conjugacy_classes(G))
    if not pairs:
        return None, _vacuous(G, check_id, "no two non-central classes of coprime sizes")
    return pairs, None


def _cfg(config: SuiteConfig | None) -> SuiteConfig:
    return config or SuiteConfig()


# -- group-level checks ---------------------------------------------------------


def check_collection_lemma(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """``|x^N| * |(xN)^{G/N}|`` divides ``|x^G|`` for every normal ``N`` and class rep ``x``."""
    cfg = _cfg(config)
    prof = conjugacy_classes(G)
    lat = normal_lattice(G)
    n = G.order()
    out = _Outcome()
    checked = 0
    skipped_orders = []
    for N in lat.members:
        k = N.order()
        if k == 1:
            # G/1 is G itself
            quotient_size = {c.index: c.size for c in prof.classes}
        elif k == n:
            quotient_size = {c.index: 1 for c in prof.classes}
        elif n // k > cfg.quotient_cap:
            skipped_orders.append(k)
            continue
        else:
            act = CosetAction(G, N, cap=cfg.quotient_cap)
            qprof = conjugacy_classes(act.group)
            quotient_size = {c.index: qprof.class_of(act.image(c.representative)).size
                             for c in prof.classes}
        for c in prof.classes:
            xn = 1 if k == 1 else len(orbit_of_action(N, c.representative, act_by_conjugation,
                                                      stabilizer=False))
            checked += 1
            out.require(c.size % (xn * quotient_size[c.index]) == 0, {
                "kind": "collection", "normal_order": k, "x": _elem(G, c.representative),
                "size_x_N": xn, "size_xN_quotient": quotient_size[c.index], "size_x_G": c.size,
            })
    if skipped_orders:
        out.skipped(f"quotients of index > {cfg.quotient_cap} skipped for normal subgroups of orders {skipped_orders}")
    out.details = {"normal_subgroups": len(lat), "instances": checked}
    return _report(G, "collection_lemma", out)


def check_fund_lemma(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """Sylow containment, ``G = C_G(x) C_G(y)`` and ``(xy)^G = x^G y^G`` for coprime pairs."""
    cfg = _cfg(config)
    pairs, vac = _pairs_or_vacuous(G, "fund_lemma")
    if vac:
        return vac
    n = G.order()
    prof = conjugacy_classes(G)
    out = _Outcome()
    for pair in pairs:
        cx, cy = pair.class_x, pair.class_y
        Cx, Cy = centralizer(G, pair.x), centralizer(G, pair.y)
        for r in prime_divisors(n):
            full = pi_part(n, [r])
            sylow_ok = pi_part(Cx.order(), [r]) == full or pi_part(Cy.order(), [r]) == full
            arith_ok = cx.size % r != 0 or cy.size % r != 0
            out.require(sylow_ok and arith_ok, {"kind": "sylow", "prime": r, **_pair(G, pair)})
        if min(Cx.order(), Cy.order()) > cfg.intersection_cap:
            out.skipped("centralizer intersection above cap")
        else:
            I = intersection(Cx, Cy)
            out.require(Cx.order() * Cy.order() == n * I.order(), {
                "kind": "factorization", **_pair(G, pair),
                "order_Cx": Cx.order(), "order_Cy": Cy.order(), "order_meet": I.order(),
            })
        try:
            hit = class_product(G, cx, cy)
        except CapExceeded as exc:
            out.skipped(str(exc))
            continue
        xy = prof.class_of(_mul(pair.x, pair.y))
        out.require(len(hit) == 1 and hit[0] is xy, {
            "kind": "class_product", **_pair(G, pair), "classes_met": [c.index for c in hit],
        })
    out.details = {"pairs": len(pairs)}
    return _report(G, "fund_lemma", out)


def check_is_normal_lemma(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """``<x^G> <= <C_G(y), x>`` for coprime pairs, in both orientations."""
    pairs, vac = _pairs_or_vacuous(G, "is_normal_lemma")
    if vac:
        return vac
    out = _Outcome()
    for pair in pairs:
        for a, b, ca in ((pair.x, pair.y, pair.class_x), (pair.y, pair.x, pair.class_y)):
            H = centralizer(G, b).extended([a])
            K = class_closure(G, ca.index)
            out.require(K.is_subgroup_of(H), {
                "kind": "closure_containment", **_pair(G, pair), "closed": str(a),
                "order_closure": K.order(), "order_H": H.order(),
            })
    out.details = {"pairs": len(pairs)}
    return _report(G, "is_normal_lemma", out)


def check_theorem_A(
    G: PermutationGroup, config: SuiteConfig | None = None, require_hypothesis: bool = True
) -> VerificationReport:
    """An almost simple group has no two non-central classes of coprime sizes.

    ``require_hypothesis=False`` evaluates the conclusion on any group, which
    is how witness replay is exercised.
    """
    soc = almost_simple_socle(G)
    if soc is None and require_hypothesis:
        return _vacuous(G, "theorem_A", "not almost simple")
    pairs = find_coprime_pairs(conjugacy_classes(G))
    out = _Outcome()
    for pair in pairs:
        out.fail({"kind": "coprime_pair", **_pair(G, pair)})
    out.details = {"socle_order": None if soc is None else soc.order(),
                   "classes": len(conjugacy_classes(G))}
    return _report(G, "theorem_A", out)


def check_cor_unique_minimal(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """A unique, nonabelian minimal normal subgroup rules out coprime pairs; Γ(G) is complete."""
    lat = normal_lattice(G)
    if len(lat.atoms) != 1:
        return _vacuous(G, "cor_unique_minimal", f"{len(lat.atoms)} minimal normal subgroups")
    N = lat.members[lat.atoms[0]]
    if N.is_abelian():
        return _vacuous(G, "cor_unique_minimal", "the minimal normal subgroup is abelian")
    prof = conjugacy_classes(G)
    out = _Outcome()
    nontrivial = prof.nontrivial()
    for a, b in combinations(nontrivial, 2):
        if math.gcd(a.size, b.size) == 1:
            out.fail({"kind": "coprime_pair", **_pair(G, CoprimePair(a, b))})
    m = metrics(gamma(prof))
    out.require(m.is_complete, {"kind": "graph", "graph": "gamma", "components": m.components})
    out.details = {"minimal_normal_order": N.order()}
    return _report(G, "cor_unique_minimal", out)


def check_theorem_B(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """``T = <x^G> ∩ <y^G>`` is abelian and ``T = (K ∩ Z(L)) (Z(K) ∩ L)``."""
    cfg = _cfg(config)
    pairs, vac = _pairs_or_vacuous(G, "theorem_B")
    if vac:
        return vac
    out = _Outcome()
    shapes = []
    for pair in pairs:
        K = class_closure(G, pair.class_x.index)
        L = class_closure(G, pair.class_y.index)
        if min(K.order(), L.order()) > cfg.intersection_cap:
            out.skipped("closure intersection above cap")
            continue
        T = intersection(K, L)
        A = intersection(K, center(L))
        B = intersection(center(K), L)
        AB = group_from_elements(A.generators + B.generators, G.degree)
        meet = intersection(A, B)
        w = {**_pair(G, pair), "order_K": K.order(), "order_L": L.order(), "order_T": T.order(),
             "order_K_meet_ZL": A.order(), "order_ZK_meet_L": B.order()}
        out.require(T.is_abelian(), {"kind": "nonabelian_meet", **w})
        out.require(AB.order() == T.order() and AB.is_subgroup_of(T)
                    and A.order() * B.order() == T.order() * meet.order(),
                    {"kind": "factorization", **w, "order_product": AB.order()})
        shapes.append([T.order(), A.order(), B.order()])
    out.details = {"pairs": len(pairs), "orders_T_A_B": shapes}
    return _report(G, "theorem_B", out)


def check_cor_containment(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """If ``<x^G> >= <y^G>`` then ``<y^G>`` is abelian (both orientations)."""
    pairs, vac = _pairs_or_vacuous(G, "cor_containment")
    if vac:
        return vac
    out = _Outcome()
    applicable = 0
    for pair in pairs:
        K = class_closure(G, pair.class_x.index)
        L = class_closure(G, pair.class_y.index)
        for big, small, name in ((K, L, "y"), (L, K, "x")):
            if small.is_subgroup_of(big):
                applicable += 1
                out.require(small.is_abelian(), {
                    "kind": "nonabelian_contained_closure", **_pair(G, pair), "contained": name,
                    "order_contained": small.order(),
                })
    out.details = {"pairs": len(pairs), "containments": applicable}
    return _report(G, "cor_containment", out)


def _commutes(g: Permutation, H: PermutationGroup) -> bool:
    return all(_mul(g, h) == _mul(h, g) for h in H.generators)


def check_theorem_C(G: PermutationGroup, config: SuiteConfig | None = None) -> VerificationReport:
    """Each minimal normal subgroup and each ``O_r(G)`` is centralized by ``x`` or by ``y``."""
    pairs, vac = _pairs_or_vacuous(G, "theorem_C")
    if vac:
        return vac
    lat = normal_lattice(G)
    targets: list[tuple[str, PermutationGroup]] = []
    seen = set()
    for i in lat.atoms:
        targets.append((f"minimal_normal[{lat.members[i].order()}]", lat.members[i]))
        seen.add(lat.keys[i])
    for r in prime_divisors(G.order()):
        O = core_r(G, r)
        key = lat.keys[lat.index_of(O)]
        if O.order() > 1 and key not in seen:
            seen.add(key)
            targets.append((f"O_{r}", O))
    out = _Outcome()
    sides = []
    for pair in pairs:
        for label, S in targets:
            bx, by = _commutes(pair.x, S), _commutes(pair.y, S)
            sides.append([pair.class_x.index, pair.class_y.index, label,
                          "both" if bx and by else "x" if bx else "y" if by else "neither"])
            out.require(bx or by, {"kind": "centralizer", **_pair(G, pair), "subgroup": label,
                                   "order": S.order(),
                                   "generators": [str(g) for g in S.generators]})
    out.details = {"pairs": len(pairs), "centralized_by": sides}
    return _report(G, "theorem_C", out)


def check_theorem_D(
    G: PermutationGroup, pi: tuple[int, ...] = (), config: SuiteConfig | None = None
) -> VerificationReport:
    """For pi-regular ``x, y`` with coprime class sizes, ``x^G y^G`` is one pi-regular class."""
    cfg = _cfg(config)
    pi = tuple(sorted(set(pi)))
    pairs, vac = _pairs_or_vacuous(G, "theorem_D")
    if vac:
        vac.pi = pi
        return vac
    prof = conjugacy_classes(G)
    out = _Outcome()
    eligible = 0
    for pair in pairs:
        if not (pair.class_x.is_pi_regular(pi) and pair.class_y.is_pi_regular(pi)):
            continue
        eligible += 1
        try:
            hit = class_product(G, pair.class_x, pair.class_y)
        except CapExceeded as exc:
            out.skipped(str(exc))
            continue
        if not out.require(len(hit) == 1, {"kind": "class_product", **_pair(G, pair),
                                           "classes_met": [c.index for c in hit]}):
            continue
        D = hit[0]
        xy = _mul(pair.x, pair.y)
        out.require(prof.lookup[xy] == D.index and D.is_pi_regular(pi), {
            "kind": "pi_regular", **_pair(G, pair), "product": _elem(G, xy),
            "product_order": element_order(xy), "pi": list(pi),
        })
        if D.size <= cfg.member_check_cap and D.members is not None:
            bad = next((g for g in D.members if any(element_order(g) % r == 0 for r in pi)), None)
            out.require(bad is None, {
                "kind": "pi_regular", **_pair(G, pair), "product": _elem(G, bad) if bad else None,
                "product_order": element_order(bad) if bad else None, "pi": list(pi),
            })
    out.details = {"pairs": len(pairs), "pi_regular_pairs": eligible}
    return _report(G, "theorem_D", out, pi=pi)


# -- checks indexed by a prime ------------------------------------------------------


def check_gamma_structure(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """Γ_p and Δ_p: connected of diameter <= 3, or two complete components;
    matching component counts and diameters within 1."""
    prof = conjugacy_classes(G)
    gp, dp, bp = gamma_p(prof, p), delta_p(prof, p), bipartite_divisor(prof, p)
    mg, md, mb = metrics(gp), metrics(dp), metrics(bp)
    out = _Outcome()
    for name, m in (("gamma_p", mg), ("delta_p", md)):
        shape = {"kind": "graph", "graph": name, "components": m.components, "diameters": m.diameters}
        out.require(m.component_count <= 2, shape)
        if m.component_count == 1:
            out.require(m.diameters[0] <= 3, shape)
        if m.component_count == 2:
            out.require(all(m.component_complete), shape)
    out.require(mg.component_count == md.component_count == mb.component_count, {
        "kind": "component_counts", "gamma_p": mg.component_count,
        "delta_p": md.component_count, "bipartite": mb.component_count,
    })
    caveat = equal_size_caveat(prof, p)
    diffs = []
    if mg.component_count == md.component_count:
        try:
            pairs = match_components(gp, dp)
        except AssertionError as exc:
            out.fail({"kind": "component_matching", "message": str(exc)})
            pairs = []
        for i, j in pairs:
            d = abs(mg.diameters[i] - md.diameters[j])
            diffs.append(d)
            if not caveat:
                out.require(d <= 1, {"kind": "diameter_gap", "gamma_p_component": mg.components[i],
                                     "delta_p_component": md.components[j],
                                     "diameters": [mg.diameters[i], md.diameters[j]]})
    out.details = {
        "gamma_p": {"vertices": gp.vertices, "components": mg.component_count, "diameters": mg.diameters},
        "delta_p": {"vertices": dp.vertices, "components": md.component_count, "diameters": md.diameters},
        "diameter_gaps": diffs,
        "equal_size_caveat": caveat,
    }
    return _report(G, "gamma_structure", out, p=p)


def check_cor_M(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """``M = <D : D p-regular, (|D|,|B|) = 1>`` is an abelian p'-group containing
    ``Z_{p'}``, and ``π(M / Z_{p'}) ⊆ π(|B|)``, for every maximal p-regular ``B``."""
    prof = conjugacy_classes(G)
    reg = [c for c in prof.classes if c.order_of_elements % p]
    top = max(c.size for c in reg)
    Z = center(G)
    Zp = intersection(Z, o_pi_prime(G, p))
    out = _Outcome()
    rows = []
    for B in (c for c in reg if c.size == top):
        reps = [D.representative for D in reg if math.gcd(D.size, B.size) == 1]
        M = group_from_elements([], G.degree)
        for r in reps:
            M = M.extended(class_closure(G, prof.lookup[r]).generators)
        w = {"kind": "cor_M", "B": _elem(G, B.representative), "size_B": B.size,
             "order_M": M.order(), "order_Zp": Zp.order()}
        out.require(M.is_abelian(), {**w, "failed": "M abelian"})
        out.require(M.order() % p != 0, {**w, "failed": "M is a p'-group"})
        if out.require(Zp.is_subgroup_of(M), {**w, "failed": "Z_p' <= M"}):
            extra = set(prime_divisors(M.order() // Zp.order()))
            out.require(extra <= set(prime_divisors(B.size)), {**w, "failed": "pi(M/Z_p') in pi(|B|)"})
        rows.append([B.index, B.size, M.order()])
    out.details = {"maximal_classes": rows, "order_Zp": Zp.order()}
    return _report(G, "cor_M", out, p=p)


def _quasi_frobenius_abelian(H: PermutationGroup, out: _Outcome, w: dict, budget: int) -> None:
    """Require ``H`` quasi-Frobenius with abelian kernel and complement preimages."""
    qf = is_quasi_frobenius(H, budget)
    if not out.require(qf is not None, {**w, "failed": "quasi-Frobenius", "order_H": H.order()}):
        return
    out.require(qf.kernel.is_abelian(), {**w, "failed": "abelian kernel", "order_kernel": qf.kernel.order()})
    if qf.complement is None:
        out.unknown("Frobenius complement search exhausted its budget")
        return
    out.require(qf.complement.is_abelian(),
                {**w, "failed": "abelian complement", "order_complement": qf.complement.order()})
    out.details.setdefault("quasi_frobenius", []).append(
        {"order": H.order(), "center": qf.center.order(), "kernel": qf.kernel.order(),
         "complement": qf.complement.order()})


def _p_complement(G: PermutationGroup, p: int, cfg: SuiteConfig, out: _Outcome) -> PermutationGroup | None:
    H = p_complement_search(G, p, cfg.search_budget, cfg.seed)
    if H is None:
        out.unknown(f"no {p}-complement found within the search budget")
    return H


def _p_prime(n: int, p: int) -> int:
    return n // pi_part(n, [p])


def _direct_with_sylow(G: PermutationGroup, p: int) -> tuple[bool, PermutationGroup, PermutationGroup]:
    """``G = P x H`` with ``P`` a normal Sylow p-subgroup and ``H = O_{p'}(G)``."""
    n = G.order()
    P, H = core_r(G, p), o_pi_prime(G, p)
    ok = (P.order() == pi_part(n, [p]) and H.order() == _p_prime(n, p)
          and all(_commutes(h, P) for h in H.generators))
    return ok, P, H


def check_cor_5(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """Disconnected Γ_p: a direct split ``P x H`` or p-nilpotency, with a
    quasi-Frobenius p-complement having abelian kernel and complements."""
    cfg = _cfg(config)
    prof = conjugacy_classes(G)
    gp = gamma_p(prof, p)
    m = metrics(gp)
    if m.component_count < 2:
        return _vacuous(G, "cor_5", "Γ_p is connected", p=p)
    largest = max(gp.vertices)
    x2 = next(k for k, comp in enumerate(m.components) if largest in comp)
    x1 = [v for k, comp in enumerate(m.components) if k != x2 for v in comp]
    divisible = [v for v in gp.vertices if v % p == 0]
    out = _Outcome()
    n = G.order()
    if not divisible:
        case = "i"
        ok, P, H = _direct_with_sylow(G, p)
        if out.require(ok, {"kind": "cor_5", "case": case, "failed": "G = P x H",
                            "order_P": P.order(), "order_Op'": H.order()}):
            _quasi_frobenius_abelian(H, out, {"kind": "cor_5", "case": case}, cfg.search_budget)
    elif any(v % p == 0 for v in x1):
        case = "ii"
        H = o_pi_prime(G, p)
        if out.require(H.order() == _p_prime(n, p), {"kind": "cor_5", "case": case,
                                                     "failed": "p-nilpotent", "order_Op'": H.order()}):
            _quasi_frobenius_abelian(H, out, {"kind": "cor_5", "case": case}, cfg.search_budget)
    else:
        return _vacuous(G, "cor_5", "p divides only vertices in the component of the largest size (open case)",
                        p=p, details={"open_case": True, "components": m.components})
    out.details.update({"case": case, "components": m.components})
    return _report(G, "cor_5", out, p=p)


def _complement_class_sizes(G, p, cfg, out, w, want: set[int]) -> None:
    H = G if G.order() % p else _p_complement(G, p, cfg, out)
    if H is None:
        return
    _quasi_frobenius_abelian(H, out, w, cfg.search_budget)
    cs = set(conjugacy_classes(H).cs)
    out.require(cs == want, {**w, "failed": "class sizes of the p-complement",
                             "sizes": sorted(cs), "expected": sorted(want)})
    out.details["complement_order"] = H.order()


def check_cor_discon(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """Two largest p-regular sizes ``m > n > 1`` coprime with ``p ∤ n``: ``G`` soluble,
    p-regular sizes ``{1, n, m}``, quasi-Frobenius p-complement with sizes ``{1, n, m_{p'}}``."""
    cfg = _cfg(config)
    sizes = p_regular_sizes(conjugacy_classes(G), p)
    if len(sizes) < 3 or sizes[-2] <= 1:
        return _vacuous(G, "cor_discon", "fewer than two non-central p-regular sizes", p=p)
    m, n = sizes[-1], sizes[-2]
    if math.gcd(m, n) != 1:
        return _vacuous(G, "cor_discon", "the two largest p-regular sizes are not coprime", p=p)
    if n % p == 0:
        return _vacuous(G, "cor_discon", "p divides the second largest p-regular size", p=p)
    out = _Outcome()
    w = {"kind": "cor_discon", "m": m, "n": n}
    out.require(is_soluble(G), {**w, "failed": "soluble"})
    out.require(set(sizes) == {1, n, m}, {**w, "failed": "p-regular sizes", "sizes": sizes})
    _complement_class_sizes(G, p, cfg, out, w, {1, n, _p_prime(m, p)})
    out.details.update({"m": m, "n": n})
    return _report(G, "cor_discon", out, p=p)


def check_cor_two_sizes(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """p-regular sizes ``{1, m, n}`` with ``(m, n) = 1``: ``G`` soluble and its
    p-complements quasi-Frobenius with class sizes ``{1, m_{p'}, n_{p'}}``."""
    cfg = _cfg(config)
    sizes = p_regular_sizes(conjugacy_classes(G), p)
    if len(sizes) != 3:
        return _vacuous(G, "cor_two_sizes", f"{len(sizes)} p-regular sizes, not 3", p=p)
    _, m, n = sizes
    if math.gcd(m, n) != 1:
        return _vacuous(G, "cor_two_sizes", "the two non-trivial p-regular sizes are not coprime", p=p)
    out = _Outcome()
    w = {"kind": "cor_two_sizes", "m": m, "n": n}
    out.require(is_soluble(G), {**w, "failed": "soluble"})
    _complement_class_sizes(G, p, cfg, out, w, {1, _p_prime(m, p), _p_prime(n, p)})
    out.details.update({"m": m, "n": n})
    return _report(G, "cor_two_sizes", out, p=p)


def _largest_normal_with_primes(G: PermutationGroup, primes: set[int], inside: bool) -> PermutationGroup:
    """Largest normal subgroup whose order has all primes in (or all outside) ``primes``."""
    def ok(M):
        ps = set(prime_divisors(M.order()))
        return ps <= primes if inside else not (ps & primes)
    return normal_lattice(G).largest(ok)


def check_cor_consecutive(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """Non-central p-regular sizes ``{n, ..., n+r}``: ``G`` soluble and one of the
    three listed shapes holds."""
    cfg = _cfg(config)
    S = [s for s in p_regular_sizes(conjugacy_classes(G), p) if s > 1]
    if not S:
        return _vacuous(G, "cor_consecutive", "no non-central p-regular classes", p=p)
    if S != list(range(S[0], S[-1] + 1)):
        return _vacuous(G, "cor_consecutive", "the non-central p-regular sizes are not consecutive", p=p)
    n, r = S[0], S[-1] - S[0]
    N = G.order()
    out = _Outcome()
    w = {"kind": "cor_consecutive", "n": n, "r": r}
    out.require(is_soluble(G), {**w, "failed": "soluble"})
    primes_n = prime_divisors(n)
    others = [q for q in primes_n if q != p]
    if r == 0 and not others:
        case = "i"
        H = G if N % p else _p_complement(G, p, cfg, out)
        if H is not None:
            out.require(H.is_abelian(), {**w, "case": case, "failed": "abelian p-complement"})
    elif r == 0 and len(others) == 1:
        case = "ii"
        q = others[0]
        PQ = _largest_normal_with_primes(G, {p, q}, inside=True)
        A = intersection(center(G), _largest_normal_with_primes(G, {p, q}, inside=False))
        out.require(PQ.order() == pi_part(N, [p, q]) and A.order() * PQ.order() == N,
                    {**w, "case": case, "q": q, "failed": "G = PQ x A with A central",
                     "order_PQ": PQ.order(), "order_A": A.order()})
        if n % p:
            # a = 0 in n = p^a q^b
            P, Q = core_r(G, p), core_r(G, q)
            out.require(P.order() == pi_part(N, [p]) and Q.order() == pi_part(N, [q])
                        and all(_commutes(g, Q) for g in P.generators),
                        {**w, "case": case, "q": q, "failed": "G = P x Q x A",
                         "order_P": P.order(), "order_Q": Q.order()})
    elif r == 1:
        case = "iii"
        H = G if N % p else _p_complement(G, p, cfg, out)
        if H is not None:
            _quasi_frobenius_abelian(H, out, {**w, "case": case}, cfg.search_budget)
        if n % p:
            Op = o_pi_prime(G, p)
            out.require(Op.order() == _p_prime(N, p), {**w, "case": case, "failed": "p-nilpotent"})
            if (n + 1) % p:
                ok, _, _ = _direct_with_sylow(G, p)
                out.require(ok, {**w, "case": case, "failed": "G = P x H"})
    else:
        case = None
        out.fail({**w, "failed": "no listed case applies", "sizes": S})
    out.details.update({"case": case, "n": n, "r": r})
    return _report(G, "cor_consecutive", out, p=p)


def _is_prime_power(s: int) -> bool:
    return len(prime_divisors(s)) <= 1


def _prime_power_form(sizes: set[int], p: int) -> bool:
    """``sizes == {1, q^s, r^t}`` for distinct primes ``q, r`` other than ``p``."""
    if len(sizes) != 3 or 1 not in sizes:
        return False
    a, b = sorted(sizes - {1})
    pa, pb = prime_divisors(a), prime_divisors(b)
    return len(pa) == 1 and len(pb) == 1 and pa != pb and p not in pa + pb


def check_prime_power_sizes(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """Every p-regular class has prime power size iff ``G`` is soluble and one of
    the three shapes holds; each shape matches its size criterion."""
    cfg = _cfg(config)
    sizes = set(p_regular_sizes(conjugacy_classes(G), p))
    lhs = all(_is_prime_power(s) for s in sizes)
    sol = is_soluble(G)
    out = _Outcome()
    w = {"kind": "prime_power_sizes", "sizes": sorted(sizes), "soluble": sol}
    if not sol:
        out.require(not lhs, {**w, "failed": "prime power sizes in an insoluble group"})
        out.details = {"lhs": lhs, "soluble": sol}
        return _report(G, "prime_power_sizes", out, p=p)
    N = G.order()
    size_primes = {q for s in sizes for q in prime_divisors(s)}
    crit = {
        "i": size_primes <= {p},
        "ii": len(size_primes) <= 1 and p not in size_primes,
        "iii": _prime_power_form(sizes, p),
    }
    cond: dict[str, bool | None] = {}
    H = G if N % p else _p_complement(G, p, cfg, out)
    cond["i"] = None if H is None else H.is_abelian()
    if is_nilpotent(G):
        nonab = [r for r in prime_divisors(N) if r != p and not core_r(G, r).is_abelian()]
        cond["ii"] = len(nonab) <= 1
    else:
        cond["ii"] = False
    ok, _, Hn = _direct_with_sylow(G, p)
    cond["iii"] = False
    if ok and _prime_power_form(set(conjugacy_classes(Hn).cs), p):
        probe = _Outcome()
        _quasi_frobenius_abelian(Hn, probe, {}, cfg.search_budget)
        cond["iii"] = None if probe.status == "unknown" else probe.status == "pass"
    for k in ("i", "ii", "iii"):
        if cond[k] is None:
            out.unknown(f"shape {k} undecided")
        else:
            out.require(cond[k] == crit[k], {**w, "failed": f"shape {k} vs its size criterion",
                                             "shape": cond[k], "criterion": crit[k]})
    rhs_known = [v for v in cond.values() if v is not None]
    if len(rhs_known) == 3 or any(rhs_known):
        out.require(lhs == any(rhs_known), {**w, "failed": "equivalence", "lhs": lhs})
    out.details = {"lhs": lhs, "soluble": sol, "shapes": cond, "criteria": crit}
    return _report(G, "prime_power_sizes", out, p=p)


def check_regular_complete(G: PermutationGroup, p: int, config: SuiteConfig | None = None) -> VerificationReport:
    """Γ_p is k-regular with k >= 1 iff it is complete on k + 1 vertices."""
    gp = gamma_p(conjugacy_classes(G), p)
    m = metrics(gp)
    k = m.regular_degree
    regular = k is not None and k >= 1
    complete = m.is_complete and len(gp.vertices) >= 2
    if not (regular or complete):
        return _vacuous(G, "regular_complete", "Γ_p is neither k-regular with k >= 1 nor complete on >= 2 vertices",
                        p=p, details={"vertices": gp.vertices, "regular_degree": k})
    out = _Outcome()
    out.require(regular and complete and len(gp.vertices) == k + 1, {
        "kind": "graph", "graph": "gamma_p", "vertices": gp.vertices, "regular_degree": k,
        "complete": m.is_complete,
    })
    out.details = {"vertices": gp.vertices, "regular_degree": k}
    return _report(G, "regular_complete", out, p=p)


# -- suite ------------------------------------------------------------------------

GROUP_CHECKS: dict[str, Callable] = {
    "collection_lemma": check_collection_lemma,
    "fund_lemma": check_fund_lemma,
    "is_normal_lemma": check_is_normal_lemma,
    "theorem_A": check_theorem_A,
    "cor_unique_minimal": check_cor_unique_minimal,
    "theorem_B": check_theorem_B,
    "cor_containment": check_cor_containment,
    "theorem_C": check_theorem_C,
}
PI_CHECKS: dict[str, Callable] = {"theorem_D": check_theorem_D}
P_CHECKS: dict[str, Callable] = {
    "gamma_structure": check_gamma_structure,
    "cor_M": check_cor_M,
    "cor_5": check_cor_5,
    "cor_discon": check_cor_discon,
    "cor_two_sizes": check_cor_two_sizes,
    "cor_consecutive": check_cor_consecutive,
    "prime_power_sizes": check_prime_power_sizes,
    "regular_complete": check_regular_complete,
}
ALL_CHECKS = list(GROUP_CHECKS) + list(PI_CHECKS) + list(P_CHECKS)


def _least_non_divisor(n: int) -> int:
    p = 2
    while n % p == 0:
        p = nextprime(p)
    return p


def default_primes(G: PermutationGroup) -> list[int]:
    """Every prime dividing ``|G|`` plus the least prime that does not."""
    n = G.order()
    return prime_divisors(n) + [_least_non_divisor(n)]


def default_pi_sets(G: PermutationGroup) -> list[tuple[int, ...]]:
    """All subsets of π(G) of size at most 2 and every ``π(G) \\ {p}``."""
    ps = prime_divisors(G.order())
    sets = {()}
    sets.update((q,) for q in ps)
    sets.update(combinations(ps, 2))
    sets.update(tuple(q for q in ps if q != r) for r in ps)
    return sorted(sets, key=lambda s: (len(s), s))


def run_check(G: PermutationGroup, check_id: str, p: int | None = None,
              pi: tuple[int, ...] | None = None, config: SuiteConfig | None = None) -> VerificationReport:
    """Run one check, turning a cap overrun into ``skipped_cap``."""
    t0 = time.perf_counter()
    try:
        if check_id in GROUP_CHECKS:
            rep = GROUP_CHECKS[check_id](G, config)
        elif check_id in PI_CHECKS:
            rep = PI_CHECKS[check_id](G, tuple(pi or ()), config)
        elif check_id in P_CHECKS:
            if p is None:
                raise ValueError(f"check {check_id} needs a prime p")
            rep = P_CHECKS[check_id](G, p, config)
        else:
            raise ValueError(f"unknown check {check_id!r}; known: {', '.join(ALL_CHECKS)}")
    except CapExceeded as exc:
        rep = VerificationReport(G.name or repr(G), check_id, "skipped_cap", p=p,
                                 pi=None if pi is None else tuple(pi), hypothesis=str(exc),
                                 group_order=G.order())
    rep.timing = time.perf_counter() - t0
    return rep


def run_suite(G: PermutationGroup, config: SuiteConfig | None = None) -> list[VerificationReport]:
    """Every selected check for every swept p and pi, sorted by check id, p, pi."""
    cfg = _cfg(config)
    wanted = cfg.checks or ALL_CHECKS
    for c in wanted:
        if c not in ALL_CHECKS:
            raise ValueError(f"unknown check {c!r}")
    primes = cfg.primes if cfg.primes is not None else default_primes(G)
    pi_sets = cfg.pi_sets if cfg.pi_sets is not None else default_pi_sets(G)
    reports = []
    for c in wanted:
        if c in GROUP_CHECKS:
            reports.append(run_check(G, c, config=cfg))
        elif c in PI_CHECKS:
            reports += [run_check(G, c, pi=tuple(pi), config=cfg) for pi in pi_sets]
        else:
            reports += [run_check(G, c, p=p, config=cfg) for p in primes]
    return sorted(reports, key=VerificationReport.sort_key)


# -- witness replay -----------------------------------------------------------------


def _brute_class(G: PermutationGroup, x: Permutation) -> set:
    return {_mul(_mul(g.inverse(), x), g) for g in G.elements()}


def replay_witness(G: PermutationGroup, witness: dict) -> bool | None:
    """Re-evaluate an element witness by brute force; True when it still fails.

    Covers ``coprime_pair``, ``class_product``, ``pi_regular`` and
    ``centralizer`` witnesses; returns None for other kinds.
    """
    kind = witness.get("kind")
    deg = G.degree
    if kind in ("coprime_pair", "class_product", "pi_regular", "centralizer"):
        x = Permutation.parse(witness["x"]["cycles"], deg)
        y = Permutation.parse(witness["y"]["cycles"], deg)
        X, Y = _brute_class(G, x), _brute_class(G, y)
        if math.gcd(len(X), len(Y)) != 1:
            return False
        if kind == "coprime_pair":
            return True
        if kind == "centralizer":
            S = group_from_elements([Permutation.parse(g, deg) for g in witness["generators"]], deg)
            return not (_commutes(x, S) or _commutes(y, S))
        prod = {_mul(a, b) for a in X for b in Y}
        if kind == "class_product":
            return prod != _brute_class(G, _mul(x, y))
        pi = witness["pi"]
        return any(element_order(g) % r == 0 for g in prod for r in pi)
    return None
