"""Machine checkers for the census: one verdict per (claim, group, prime set).

Every verifier recomputes its own hypotheses from the group rather than
trusting caller flags, returns exactly one status from the taxonomy
{pass, fail, vacuous, inapplicable, partial, unresolved}, and attaches a
witness payload sufficient to replay a failure.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import serialize_group_file
from .classes import conjugacy_classes, k_pi
from .errors import CapExceededError
from .group import DEFAULT_MAX_ELEMENTS, PermGroup
from .invariants import (
    commuting_degree,
    d_pi,
    group_primes,
    has_normal_pi_complement,
)
from .numtheory import is_pi_number, pi_part, validate_pi
from .subgroups import (
    DEFAULT_HALL_BUDGET,
    DEFAULT_MAX_QUOTIENT_DEGREE,
    DEFAULT_SUBGROUP_CAP,
    SubgroupHandle,
    almost_simple_socle,
    are_conjugate_subgroups,
    center,
    centralizer_of_subgroup,
    commutator_subgroup,
    enumerate_subgroups_up_to_conjugacy,
    hall_search,
    normal_subgroups,
    normalizer,
    o_pi_prime,
    quotient,
    subgroup,
    subgroup_intersection,
    sylow_subgroup,
)

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
INAPPLICABLE = "inapplicable"
PARTIAL = "partial"
UNRESOLVED = "unresolved"

THRESHOLD = Fraction(5, 8)
TWO_THIRDS = Fraction(2, 3)


@dataclass
class Limits:
    """Resource caps threaded through every verifier."""

    max_elements: int = DEFAULT_MAX_ELEMENTS
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    max_quotient_degree: int = DEFAULT_MAX_QUOTIENT_DEGREE
    hall_budget: int = DEFAULT_HALL_BUDGET
    seed: int = 0


@dataclass
class VerdictReport:
    result_id: str
    group: str
    pi: tuple[int, ...] | None
    status: str
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0

    def as_dict(self) -> dict:
        # seconds intentionally omitted: serialized reports are byte-deterministic
        return {
            "result_id": self.result_id,
            "group": self.group,
            "pi": list(self.pi) if self.pi is not None else None,
            "status": self.status,
            "witness": self.witness,
        }


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _gens(handle: SubgroupHandle) -> list[str]:
    return [g.cycle_string() for g in handle.generators]


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        verdict = fn(*args, **kwargs)
        verdict.seconds = time.perf_counter() - t0
        return verdict

    return wrapper


@_timed
def check_hall_dichotomy(group: PermGroup, pi, name: str = "",
                         limits: Limits | None = None) -> VerdictReport:
    """Above the 5/8 threshold: an abelian Hall pi-subgroup exists, all Hall
    pi-subgroups are conjugate, every pi-subgroup lies in a conjugate of it,
    and the ratio is exactly 2/3 or 1.

    Past the subgroup-enumeration cap the containment and conjugacy checks
    degrade to cyclic pi-subgroups and the verdict is labelled partial.
    """
    limits = limits or Limits()
    pi = validate_pi(pi)
    profile = d_pi(group, pi, limits.max_elements, name)
    witness: dict = {"d_pi": _frac(profile.d_pi)}
    rid = "hall-dichotomy"
    if profile.d_pi <= THRESHOLD:
        return VerdictReport(rid, name, tuple(sorted(pi)), VACUOUS, witness)

    outcome = hall_search(group, pi, budget=limits.hall_budget,
                          subgroup_cap=limits.subgroup_cap,
                          cap=limits.max_elements, seed=limits.seed)
    if outcome.status == "unresolved":
        witness["hall"] = "unresolved"
        return VerdictReport(rid, name, tuple(sorted(pi)), UNRESOLVED, witness)
    if not outcome.found:
        witness["hall"] = "reported nonexistent"
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    hall = outcome.subgroup
    witness["hall_order"] = hall.order
    witness["hall_generators"] = _gens(hall)
    witness["hall_method"] = outcome.method
    witness["hall_route"] = outcome.route
    if not hall.is_abelian():
        witness["abelian"] = False
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    witness["abelian"] = True

    target = pi_part(group.order, pi)
    partial = False
    try:
        classes = enumerate_subgroups_up_to_conjugacy(
            group, pi=pi, cap=limits.subgroup_cap, element_cap=limits.max_elements)
    except CapExceededError:
        partial = True
        table = conjugacy_classes(group, limits.max_elements)
        classes = []
        seen = set()
        for cls in table.classes:
            if not is_pi_number(cls.order, pi):
                continue
            cyc = subgroup(group, [cls.rep], verify=False)
            key = cyc.element_set(limits.max_elements)
            if key not in seen:
                seen.add(key)
                classes.append(cyc)
        witness["degraded"] = "cyclic pi-subgroups only (subgroup cap exceeded)"

    halls = [h for h in classes if h.order == target]
    witness["hall_class_count"] = len(halls)
    if not partial and len(halls) != 1:
        witness["conjugacy"] = f"{len(halls)} conjugacy classes of Hall order"
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    for other in halls:
        same, _ = are_conjugate_subgroups(group, hall, other, limits.max_elements)
        if not same:
            witness["conjugacy"] = "found Hall subgroup not conjugate to an enumerated one"
            return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    witness["conjugacy"] = "ok"

    hall_conjugates = _conjugate_sets(group, hall, limits.max_elements)
    for sub in classes:
        subset = sub.element_set(limits.max_elements)
        if not any(subset <= conj for conj in hall_conjugates):
            witness["containment"] = f"pi-subgroup of order {sub.order} in no Hall conjugate"
            witness["offender_generators"] = _gens(sub)
            return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    witness["containment"] = "ok"
    witness["pi_subgroup_classes"] = len(classes)

    if profile.d_pi not in (TWO_THIRDS, Fraction(1)):
        witness["dichotomy"] = "value outside {2/3, 1}"
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    if profile.d_pi == TWO_THIRDS:
        # consistency cross-check on every 2/3 pass
        mu = pi - {3}
        d3 = d_pi(group, [3], limits.max_elements).d_pi if 3 in pi else None
        dmu = d_pi(group, mu, limits.max_elements).d_pi if mu else Fraction(1)
        witness["two_thirds_consistency"] = {
            "three_in_pi": 3 in pi,
            "two_in_pi": 2 in pi,
            "d_3": _frac(d3) if d3 is not None else None,
            "d_mu": _frac(dmu),
        }
        if not (3 in pi and 2 not in pi and d3 == TWO_THIRDS and dmu == 1):
            return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    status = PARTIAL if partial else PASS
    return VerdictReport(rid, name, tuple(sorted(pi)), status, witness)


def _conjugate_sets(group: PermGroup, handle: SubgroupHandle, cap: int):
    """All conjugates of a subgroup as element sets."""
    gen_pairs = [(g.images, g.inverse().images) for g in group.generators]
    start = handle.element_set(cap)
    seen = {start}
    queue = [start]
    while queue:
        cur = queue.pop()
        for gim, ginvim in gen_pairs:
            nxt = frozenset(tuple(gim[t[q]] for q in ginvim) for t in cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


@_timed
def check_unit_iff_complement(group: PermGroup, pi, name: str = "",
                              limits: Limits | None = None) -> VerdictReport:
    """The ratio equals 1 exactly when a normal pi-complement and an abelian
    Hall pi-subgroup both exist; both sides evaluated independently.

    Also: if d_p = 1 for every p in pi, a normal pi-complement must exist.
    """
    limits = limits or Limits()
    pi = validate_pi(pi)
    rid = "unit-iff-complement"
    profile = d_pi(group, pi, limits.max_elements, name)
    lhs = profile.d_pi == 1
    exists, complement = has_normal_pi_complement(group, pi, limits.max_elements)
    witness: dict = {"d_pi": _frac(profile.d_pi), "complement_exists": exists}
    if exists:
        witness["complement_order"] = complement.order
    abelian_hall = None
    if exists:
        outcome = hall_search(group, pi, budget=limits.hall_budget,
                              subgroup_cap=limits.subgroup_cap,
                              cap=limits.max_elements, seed=limits.seed)
        if outcome.status == "unresolved":
            return VerdictReport(rid, name, tuple(sorted(pi)), UNRESOLVED, witness)
        if outcome.found:
            abelian_hall = outcome.subgroup.is_abelian()
            witness["hall_order"] = outcome.subgroup.order
        else:
            abelian_hall = False
        witness["hall_abelian"] = abelian_hall
    rhs = bool(exists and abelian_hall)
    witness["iff"] = {"lhs": lhs, "rhs": rhs}
    if lhs != rhs:
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    relevant = [p for p in sorted(pi) if group.order % p == 0]
    all_dp_one = all(
        k_pi(group, frozenset([p]), limits.max_elements)
        == pi_part(group.order, frozenset([p]))
        for p in relevant
    )
    witness["all_d_p_one"] = all_dp_one
    if all_dp_one and not exists:
        witness["part1"] = "d_p = 1 for all p but no normal pi-complement"
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    return VerdictReport(rid, name, tuple(sorted(pi)), PASS, witness)


@_timed
def check_two_thirds_cap(group: PermGroup, pi, name: str = "",
                         limits: Limits | None = None) -> VerdictReport:
    """Below 1 the ratio is at most 2/3; at most 5/8 when 3 is not in pi or
    the group order is odd."""
    limits = limits or Limits()
    pi = validate_pi(pi)
    rid = "two-thirds-cap"
    profile = d_pi(group, pi, limits.max_elements, name)
    witness = {"d_pi": _frac(profile.d_pi)}
    if profile.d_pi == 1:
        return VerdictReport(rid, name, tuple(sorted(pi)), VACUOUS, witness)
    if profile.d_pi > TWO_THIRDS:
        witness["violated"] = "d_pi > 2/3"
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    if (3 not in pi or group.order % 2 == 1) and profile.d_pi > THRESHOLD:
        witness["violated"] = "d_pi > 5/8 with 3 outside pi or odd order"
        return VerdictReport(rid, name, tuple(sorted(pi)), FAIL, witness)
    return VerdictReport(rid, name, tuple(sorted(pi)), PASS, witness)


@_timed
def check_quotient_bound(group: PermGroup, name: str = "",
                         limits: Limits | None = None) -> VerdictReport:
    """d_pi(G) <= d_pi(N) * d_pi(G/N) for every normal N and every nonempty
    pi inside the group's primes, with quotients built as coset actions."""
    limits = limits or Limits()
    rid = "quotient-bound"
    primes = sorted(group_primes(group))
    witness: dict = {"normal_subgroups": 0, "checked": 0}
    if not primes:
        return VerdictReport(rid, name, None, VACUOUS, witness)
    partial = False
    normals = normal_subgroups(group, limits.max_elements)
    witness["normal_subgroups"] = len(normals)
    subsets = _nonempty_subsets(primes)
    checked = 0
    for n in normals:
        try:
            q = quotient(group, n, limits.max_quotient_degree, limits.max_elements)
        except CapExceededError:
            partial = True
            witness.setdefault("skipped", []).append(
                f"index {group.order // n.order} over quotient degree cap")
            continue
        for pi in subsets:
            lhs = d_pi(group, pi, limits.max_elements).d_pi
            rhs = (d_pi(n.group, pi, limits.max_elements).d_pi
                   * d_pi(q.group, pi, limits.max_elements).d_pi)
            checked += 1
            if lhs > rhs:
                witness["counterexample"] = {
                    "normal_order": n.order,
                    "pi": sorted(pi),
                    "d_pi_G": _frac(lhs),
                    "bound": _frac(rhs),
                }
                return VerdictReport(rid, name, None, FAIL, witness)
    witness["checked"] = checked
    return VerdictReport(rid, name, None, PARTIAL if partial else PASS, witness)


@_timed
def check_sylow3_structure(group: PermGroup, name: str = "",
                           limits: Limits | None = None) -> VerdictReport:
    """Structure forced by d_3 = 2/3 with trivial largest normal 3'-subgroup:
    abelian Sylow 3-subgroup P, |N_G(P)/C_G(P)| = 2, |[P, N_G(P)]| = 3,
    P = [P,N_G(P)] x (P n Z(N_G(P))), and one of:
    (1) P is self-centralizing normal, or (2) G = A x B with A almost simple
    (Sylow 3-subgroup of order 3 inside its socle) and B an abelian 3-group.
    """
    limits = limits or Limits()
    rid = "sylow3-structure"
    witness: dict = {}
    profile = d_pi(group, [3], limits.max_elements, name)
    witness["d_3"] = _frac(profile.d_pi)
    if profile.d_pi != TWO_THIRDS:
        return VerdictReport(rid, name, (3,), VACUOUS, witness)
    o3p = o_pi_prime(group, [3], limits.max_elements)
    witness["o_3_prime_order"] = o3p.order
    if o3p.order != 1:
        return VerdictReport(rid, name, (3,), VACUOUS, witness)

    p_syl = sylow_subgroup(group, 3, limits.max_elements)
    witness["sylow3_order"] = p_syl.order
    if not p_syl.is_abelian():
        witness["abelian_P"] = False
        return VerdictReport(rid, name, (3,), FAIL, witness)
    witness["abelian_P"] = True
    norm = normalizer(group, p_syl, limits.max_elements)
    cent = centralizer_of_subgroup(group, p_syl, limits.max_elements)
    ratio = norm.order // cent.order
    witness["normalizer_over_centralizer"] = ratio
    if ratio != 2:
        return VerdictReport(rid, name, (3,), FAIL, witness)
    comm = commutator_subgroup(group, p_syl, norm)
    witness["commutator_order"] = comm.order
    if comm.order != 3:
        return VerdictReport(rid, name, (3,), FAIL, witness)
    z_norm = center(norm.group, limits.max_elements)
    z_meet = subgroup_intersection(group, p_syl,
                                   SubgroupHandle(group, z_norm.group),
                                   limits.max_elements)
    witness["central_part_order"] = z_meet.order
    meet = subgroup_intersection(group, comm, z_meet, limits.max_elements)
    direct = comm.order * z_meet.order == p_syl.order and meet.order == 1
    witness["internal_direct_product"] = direct
    if not direct:
        return VerdictReport(rid, name, (3,), FAIL, witness)

    case1 = p_syl.is_normal() and cent.order == p_syl.order
    witness["case1_self_centralizing_normal"] = case1
    case2 = False
    case2_witness = None
    normals = normal_subgroups(group, limits.max_elements)
    for a in normals:
        if case2:
            break
        for b in normals:
            if a.order * b.order != group.order:
                continue
            if subgroup_intersection(group, a, b, limits.max_elements).order != 1:
                continue
            if not (b.is_abelian() and is_pi_number(b.order, frozenset([3]))):
                continue
            a_group = a.group
            soc = almost_simple_socle(a_group, limits.max_elements)
            if soc is None:
                continue
            if sylow_subgroup(soc.group, 3, limits.max_elements).order != 3:
                continue
            syl_a = sylow_subgroup(a_group, 3, limits.max_elements)
            if not all(soc.contains(g) for g in syl_a.generators):
                continue
            case2 = True
            case2_witness = {"A_order": a.order, "B_order": b.order,
                             "A_generators": _gens(a), "B_generators": _gens(b)}
            break
    witness["case2_almost_simple_times_3group"] = case2
    if case2_witness:
        witness["case2_witness"] = case2_witness
    if not (case1 or case2):
        return VerdictReport(rid, name, (3,), FAIL, witness)
    return VerdictReport(rid, name, (3,), PASS, witness)


@_timed
def check_commuting_threshold(group: PermGroup, name: str = "",
                              limits: Limits | None = None) -> VerdictReport:
    """Commuting degree above 5/8 forces the group to be abelian; below it,
    the group must be non-abelian (the contrapositive on the census)."""
    limits = limits or Limits()
    rid = "commuting-threshold"
    d = commuting_degree(group, limits.max_elements)
    abelian = group.is_abelian()
    witness = {"d": _frac(d), "abelian": abelian}
    if d > THRESHOLD:
        status = PASS if abelian else FAIL
        return VerdictReport(rid, name, None, status, witness)
    # d <= 5/8: abelian would contradict d = 1
    status = VACUOUS if not abelian else FAIL
    return VerdictReport(rid, name, None, status, witness)


@_timed
def check_selftest(group: PermGroup, name: str = "",
                   limits: Limits | None = None) -> VerdictReport:
    """Deliberately wrong pin (asserts the dihedral-of-order-8 ratio at p=2
    is 1/2); exists so the harness's fail path stays honest."""
    limits = limits or Limits()
    rid = "selftest-fixed-value"
    profile = d_pi(group, [2], limits.max_elements, name)
    witness = {"d_2": _frac(profile.d_pi), "pinned": "1/2"}
    status = PASS if profile.d_pi == Fraction(1, 2) else FAIL
    return VerdictReport(rid, name, (2,), status, witness)


def _nonempty_subsets(primes) -> list[frozenset[int]]:
    primes = sorted(primes)
    out = []
    for mask in range(1, 1 << len(primes)):
        out.append(frozenset(p for i, p in enumerate(primes) if mask >> i & 1))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


# -- campaign ---------------------------------------------------------------

SUITES = {
    "main": ("per-pi", check_hall_dichotomy),
    "complement": ("per-pi", check_unit_iff_complement),
    "cap": ("per-pi", check_two_thirds_cap),
    "quotient": ("per-group", check_quotient_bound),
    "structure": ("per-group", check_sylow3_structure),
    "commuting": ("per-group", check_commuting_threshold),
    "selftest": ("per-group", check_selftest),
}

DEFAULT_SUITES = ["main", "complement", "cap", "quotient", "structure", "commuting"]


def resolve_suites(selection) -> list[str]:
    if isinstance(selection, str):
        selection = [selection]
    out: list[str] = []
    for name in selection:
        if name == "all":
            out.extend(DEFAULT_SUITES)
        elif name in SUITES:
            out.append(name)
        else:
            raise ValueError(f"unknown suite: {name!r} (known: {sorted(SUITES)} and 'all')")
    seen = set()
    return [s for s in out if not (s in seen or seen.add(s))]


@dataclass
class CampaignResult:
    reports: list[VerdictReport]
    summary: dict[str, int]

    @property
    def failures(self) -> list[VerdictReport]:
        return [r for r in self.reports if r.status == FAIL]


def run_group_suite(group: PermGroup, name: str, suites, limits: Limits | None = None,
                    pi_sets=None) -> list[VerdictReport]:
    """All selected verifiers on one group; per-pi suites run over the given
    pi sets, defaulting to every nonempty subset of the group's primes."""
    limits = limits or Limits()
    suites = resolve_suites(suites)
    if pi_sets is None:
        pi_sets = _nonempty_subsets(group_primes(group))
    reports = []
    for suite_name in suites:
        kind, fn = SUITES[suite_name]
        if kind == "per-group":
            reports.append(fn(group, name=name, limits=limits))
        else:
            for pi in pi_sets:
                reports.append(fn(group, pi, name=name, limits=limits))
    return reports


def run_census_campaign(census_iter, suites, limits: Limits | None = None,
                        workers: int = 1) -> CampaignResult:
    """Apply the selected suites to every census group.

    Reports come back in census order regardless of the worker count; the
    summary counts verdicts per status.
    """
    limits = limits or Limits()
    suites = resolve_suites(suites)
    entries = list(census_iter)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(
                lambda item: run_group_suite(item[1], item[0], suites, limits), entries))
    else:
        chunks = [run_group_suite(g, name, suites, limits) for name, g in entries]
    reports = [r for chunk in chunks for r in chunk]
    summary: dict[str, int] = {}
    for r in reports:
        summary[r.status] = summary.get(r.status, 0) + 1
    return CampaignResult(reports=reports, summary=summary)


# -- counterexample bundles ---------------------------------------------------


def write_counterexample_bundle(directory, group: PermGroup, verdict: VerdictReport,
                                config_dict: dict | None = None) -> str:
    """Self-contained replay bundle: group file, claim id, pi, verdict."""
    import json
    import os

    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "group.grp"), "w") as fh:
        fh.write(serialize_group_file(group))
    meta = {
        "result_id": verdict.result_id,
        "group": verdict.group,
        "pi": list(verdict.pi) if verdict.pi is not None else None,
        "verdict": verdict.as_dict(),
        "config": config_dict or {},
    }
    with open(os.path.join(directory, "meta.json"), "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
    return directory


def replay_counterexample(directory, limits: Limits | None = None) -> VerdictReport:
    """Re-run the single check recorded in a bundle; must reproduce the verdict."""
    import json
    import os

    from .catalog import parse_group_file

    with open(os.path.join(directory, "meta.json")) as fh:
        meta = json.load(fh)
    with open(os.path.join(directory, "group.grp")) as fh:
        group = parse_group_file(fh.read())
    by_rid = {
        "hall-dichotomy": "main",
        "unit-iff-complement": "complement",
        "two-thirds-cap": "cap",
        "quotient-bound": "quotient",
        "sylow3-structure": "structure",
        "commuting-threshold": "commuting",
        "selftest-fixed-value": "selftest",
    }
    suite_name = by_rid[meta["result_id"]]
    kind, fn = SUITES[suite_name]
    if kind == "per-group":
        return fn(group, name=meta["group"], limits=limits)
    return fn(group, meta["pi"], name=meta["group"], limits=limits)
