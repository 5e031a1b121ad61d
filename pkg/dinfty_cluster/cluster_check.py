"""
Forbidden regions, rigid sets and executable forms of the structure theorems.

Every check runs on a :class:`Window` of the fundamental domain and produces a
:class:`Report`: one line per assertion, PASS, FAIL or SKIP. The sets involved are
infinite in general; each check only claims what it can see inside its window.
"""

import json
import logging
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .ar_translate import (
    Window,
    boundary_predecessors,
    boundary_successors,
    catalog_for,
    cluster_object,
    immediate_predecessors,
    immediate_successors,
    is_boundary_obj,
    is_projective,
    orbit_index,
    orbit_position,
    predecessors,
    quasi_simple,
    sectional_predecessors,
    sectional_successors,
    successors,
    tau_cluster,
    tau_rep,
    tau_rep_inv,
    tau_rep_power,
    wing,
)
from .config import Config
from .exceptions import NotRigidError, WindowUnderflowError
from .hom_engine import Method, ext1_cluster, hom_cluster, hom_rep, preprojective_hom_by_dim_vector
from .label_core import (
    ClusterObject,
    Component,
    DerivedObject,
    Family,
    IndecLabel,
    a,
    a0,
    a1,
    a_k,
    b,
    classify_component,
    dim_vector,
    injective_label,
    labels_up_to,
    projective_label,
)
from .matrix_oracle import DEFAULT_FIELD, ExactField, compose_nonzero, ext_solve, oracle_hom, validate_ar_sequence


logger = logging.getLogger(__name__)

REPORT_HEADER = (
    "window-maximal rigid sets approximate cluster-tilting subcategories; only pairwise consequences are checked"
)

RigidSet = frozenset[ClusterObject]


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass(frozen=True)
class Assertion:
    suite: str
    instance: str
    status: Status
    detail: str = ""

    def to_tsv(self) -> str:
        return "\t".join((self.suite, self.instance, self.status.value, self.detail))


@dataclass
class Report:
    """Ordered collection of assertions from one or more checks."""

    assertions: list[Assertion] = field(default_factory=list)

    def check(self, suite: str, instance: str, ok: bool, detail: str = "") -> bool:
        """Record PASS or FAIL for ``instance`` and hand ``ok`` back to the caller."""
        self.assertions.append(Assertion(suite, instance, Status.PASS if ok else Status.FAIL, detail))
        return ok

    def skip(self, suite: str, instance: str, detail: str) -> None:
        self.assertions.append(Assertion(suite, instance, Status.SKIP, detail))

    def extend(self, other: "Report") -> "Report":
        """Append the assertions of ``other``, keeping their order."""
        self.assertions.extend(other.assertions)
        return self

    @property
    def failed(self) -> bool:
        return any(assertion.status is Status.FAIL for assertion in self.assertions)

    @property
    def counts(self) -> Counter[Status]:
        return Counter(assertion.status for assertion in self.assertions)

    def to_tsv(self) -> str:
        return "\n".join([f"# {REPORT_HEADER}", *(assertion.to_tsv() for assertion in self.assertions)])

    def to_json(self) -> str:
        rows = [
            {"suite": x.suite, "instance": x.instance, "status": x.status.value, "detail": x.detail}
            for x in self.assertions
        ]
        return json.dumps({"header": REPORT_HEADER, "assertions": rows}, indent=2)


def format_set(objects: Iterable[DerivedObject]) -> str:
    """Render objects as ``{X, Y}`` in label order, the form used in report details."""
    return "{" + ", ".join(str(obj) for obj in sorted(objects)) + "}"


def require_window(window: Window, needed: int, what: str) -> None:
    """
    Guard a check that only makes sense once ``window.bound`` reaches ``needed``.

    Raises:
        WindowUnderflowError: If the window is smaller.
    """
    if window.bound < needed:
        logger.debug("window guard: %s needs %d, window is %d", what, needed, window.bound)
        raise WindowUnderflowError(f"{what} needs a window of at least {needed}, got {window.bound}")


@lru_cache(maxsize=None)
def ext_matrix(window: Window, exact_field: ExactField = DEFAULT_FIELD) -> np.ndarray:
    """``ext1_cluster`` between all pairs of window objects, indexed like ``window.objects``."""
    objects = window.objects
    table = np.zeros((len(objects), len(objects)), dtype=np.int64)
    for i, x in enumerate(objects):
        for j, y in enumerate(objects):
            table[i, j] = ext1_cluster(x, y, exact_field)
    logger.info("computed Ext table of window %d (%d objects)", window.bound, len(objects))
    return table


def is_rigid(members: Iterable[ClusterObject], exact_field: ExactField = DEFAULT_FIELD) -> bool:
    """Whether ``Ext^1`` vanishes between every two members, each member with itself included."""
    members = list(members)
    return all(ext1_cluster(x, y, exact_field) == 0 for x in members for y in members)


def forbidden_region(
    obj: ClusterObject, window: Window, exact_field: ExactField = DEFAULT_FIELD
) -> set[ClusterObject]:
    """Window objects ``Y`` with ``Ext^1(Y, obj) != 0``."""
    window.require(obj)
    return {other for other in window.objects if ext1_cluster(other, obj, exact_field)}


class ForbiddenRegions(NamedTuple):
    forward: set[ClusterObject]
    backward: set[ClusterObject]


def forward_backward_forbidden(obj: ClusterObject, window: Window) -> ForbiddenRegions:
    """Successors and predecessors of ``obj`` in the connecting component that are not sectional."""
    window.require(obj)
    if obj.component is Component.R:
        raise ValueError(f"{obj} is not in the connecting component")
    forward = successors(obj, window) - sectional_successors(obj, window)
    backward = predecessors(obj, window) - sectional_predecessors(obj, window)
    return ForbiddenRegions(forward, backward)


def coincide_exception(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """
    Objects of the forward and backward regions of ``A_l^(k)`` that are not in its forbidden region.

    Returns the window part of ``{A_l'^(k) : l' >= l+4} | {A_l'^(k) : l' <= l-4}``
    together with ``{A_l'^(1-k)[-1] : l' even}``.
    """
    label = obj.label
    if obj.shift != 0 or label.family not in (Family.A0, Family.A1) or label.m % 2 == 0:
        raise ValueError(f"{obj} is not a preprojective boundary object")
    k = 0 if label.family is Family.A0 else 1
    l = label.m  # noqa: E741
    found = {cluster_object(a_k(k, m)) for m in range(l + 4, window.bound + 1, 2)}
    found |= {cluster_object(a_k(k, m)) for m in range(1, l - 3, 2)}
    found |= {DerivedObject(a_k(1 - k, m), -1) for m in range(2, window.bound + 1, 2)}
    return found


def orbit_members(t: int, window: Window) -> list[ClusterObject]:
    """Connecting objects of the window in the translation orbit of ``P_t``."""
    return [obj for obj in window.connecting if orbit_index(obj) == t]


def check_coincide(t: int, window: Window, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """Compare the forbidden region with the forward and backward regions along the orbit of ``P_t``."""
    require_window(window, 2 * t + 6, f"coincide t={t}")
    report = Report()
    members = orbit_members(t, window)
    if t <= 1:
        members = [obj for obj in members if obj.shift == 0]
    for obj in members:
        region = forbidden_region(obj, window, exact_field) & set(window.connecting)
        forward, backward = forward_backward_forbidden(obj, window)
        expected = forward | backward
        if t <= 1:
            expected -= coincide_exception(obj, window)
        missing, extra = expected - region, region - expected
        detail = f"|H|={len(region)}"
        if missing or extra:
            detail = f"missing={format_set(missing)} extra={format_set(extra)}"
        report.check("coincide", f"t={t} X={obj}", not missing and not extra, detail)
    return report


def unique_regular_partner(t: int) -> ClusterObject | None:
    """The regular object sharing non-zero Homs both ways with ``P_t`` and no Ext, if any."""
    if t <= 2:
        return None
    if t <= 4:
        return cluster_object(a(2, 2 * t - 3))
    if t % 2:
        return cluster_object(b(t - 3, t))
    return cluster_object(b(t - 4, t + 1))


def check_cdetr(t: int, window: Window, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """Search the regular part of the window for partners of ``P_t``."""
    require_window(window, t + 4, f"cdetr t={t}")
    report = Report()
    projective = cluster_object(projective_label(t))
    found = {
        y
        for y in window.regular
        if ext1_cluster(projective, y, exact_field) == 0
        and hom_cluster(projective, y, exact_field)
        and hom_cluster(y, projective, exact_field)
    }
    partner = unique_regular_partner(t)
    expected = {partner} if partner is not None else set()
    report.check("cdetr", f"t={t} partner", found == expected, f"found={format_set(found)}")
    if partner is not None and partner in found:
        dims = (hom_cluster(projective, partner, exact_field), hom_cluster(partner, projective, exact_field))
        report.check("cdetr", f"t={t} dims", dims == (1, 1), f"dims={dims}")
    return report


def check_rok(window: Window, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """No two distinct regular objects without Ext have non-zero Homs in both directions."""
    report = Report()
    regular = window.regular
    checked = with_ext = 0
    for i, x in enumerate(regular):
        for y in regular[i + 1 :]:
            if not (hom_cluster(x, y, exact_field) and hom_cluster(y, x, exact_field)):
                continue
            if ext1_cluster(x, y, exact_field):
                with_ext += 1
                continue
            checked += 1
            report.check("rok", f"{x} <-> {y}", False, "both Homs non-zero and Ext vanishes")
    report.check("rok", f"window={window.bound}", not report.failed, f"pairs={len(regular) * (len(regular) - 1) // 2}")
    report.check("rok", "negative-control", with_ext > 0, f"both-ways pairs with Ext={with_ext}")
    return report


def check_force_bo(window: Window, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """Ext-orthogonal connecting pairs with Homs both ways consist of boundary objects."""
    report = Report()
    connecting = window.connecting
    found = 0
    for i, x in enumerate(connecting):
        for y in connecting[i + 1 :]:
            if ext1_cluster(x, y, exact_field) or not hom_cluster(x, y, exact_field):
                continue
            if not hom_cluster(y, x, exact_field):
                continue
            found += 1
            if not (is_boundary_obj(x) and is_boundary_obj(y)):
                report.check("force-bo", f"{x} <-> {y}", False, "a non-boundary object in a both-ways pair")
    report.check("force-bo", f"window={window.bound}", not report.failed, f"both-ways pairs={found}")
    return report


def s_partition(t: int) -> dict[str, frozenset[ClusterObject]]:
    """The seven sets covering ``H(A0(t)) \\ H(P_t)`` for odd ``t >= 3``."""
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be odd and at least 3, got {t}")
    odd_a = range(3, t, 2)
    even = range(2, t + 1, 2)
    return {
        "S1": frozenset(cluster_object(a_k(k, l)) for l in range(1, t - 3, 2) for k in (0, 1)),
        "S2": frozenset({cluster_object(a1(t - 2))}),
        "S3": frozenset(cluster_object(a(k, l)) for l in odd_a for k in range(3, l + 1, 2)),
        "S4": frozenset(cluster_object(b(i, j)) for j in range(3, t, 2) for i in range(1, j, 2)),
        "S5": frozenset(DerivedObject(a(k, l), -1) for l in even for k in range(2, l + 1, 2)),
        "S6": frozenset(DerivedObject(b(i, j), -1) for j in range(4, t + 1, 2) for i in range(2, j, 2)),
        "S7": frozenset(DerivedObject(a_k(k, l), -1) for l in even for k in (0, 1)),
    }


def partner_orbit(t: int) -> list[IndecLabel]:
    """Segment of the translation orbit of the regular partner of ``P_t``, odd ``t >= 5``."""
    if t < 5 or t % 2 == 0:
        raise ValueError(f"t must be odd and at least 5, got {t}")
    orbit = [a(5, 2 * t), a(3, 2 * t - 2)]
    orbit += [b(i, 2 * t - 3 - i) for i in range(1, t - 1, 2)]
    orbit += [b(i, 2 * t - 3 - i) for i in range(t - 3, 1, -2)]
    orbit += [a(2, 2 * t - 3), a(4, 2 * t - 1)]
    return orbit


def in_t_exceptions(t: int) -> set[ClusterObject]:
    """The boundary neighbours of ``P_t`` that may lie in ``H(A0(t))`` without being covered."""
    shift = (t - 3) // 2
    return {
        tau_cluster(DerivedObject(injective_label(0), -1), shift),
        tau_cluster(DerivedObject(injective_label(1), -1), shift),
        cluster_object(a0(t)),
        cluster_object(a1(t)),
    }


def check_in_t(t: int, window: Window, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """Cover ``H(A0(t))`` by the forbidden regions of ``P_t`` and its regular partner."""
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be odd and at least 3, got {t}")
    require_window(window, 2 * t + 3, f"in-t t={t}")
    report = Report()
    partner = unique_regular_partner(t)
    assert partner is not None
    boundary = cluster_object(a0(t))
    region = forbidden_region(boundary, window, exact_field)
    projective_region = forbidden_region(cluster_object(projective_label(t)), window, exact_field)
    partner_region = forbidden_region(partner, window, exact_field)

    outside = region - projective_region - partner_region - in_t_exceptions(t)
    report.check("in-t", f"t={t} containment", not outside, f"uncovered={format_set(outside)}")

    quasi = quasi_simple((t + 1) // 2)
    regular_part = {y for y in region if y.component is Component.R}
    wing_part = {y for y in window.regular if wing(quasi)(y.label)}
    report.check(
        "in-t",
        f"t={t} regular",
        regular_part == wing_part and regular_part <= projective_region,
        f"wing of {quasi}, |W|={len(wing_part)}",
    )

    parts = s_partition(t)
    union = frozenset().union(*parts.values())
    disjoint = sum(len(part) for part in parts.values()) == len(union)
    difference = region - projective_region
    uncovered = difference - union
    surplus = union - difference
    report.check(
        "in-t",
        f"t={t} S-sets",
        disjoint and not uncovered,
        f"disjoint={disjoint} uncovered={format_set(uncovered)} surplus={format_set(surplus)}",
    )

    if t >= 5:
        orbit = partner_orbit(t)
        chained = all(tau_rep_inv(x) == y for x, y in zip(orbit, orbit[1:]))
        report.check("in-t", f"t={t} partner-orbit", chained and partner.label in orbit, " ".join(map(str, orbit)))
    return report


def check_factorization(t: int, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """Non-zero composites through the boundary successor of ``P_t`` and dually into ``I_t``."""
    report = Report()
    partner = unique_regular_partner(t)
    assert partner is not None
    forward = compose_nonzero(projective_label(t), a0(t), partner.label, exact_field)
    report.check("factorization", f"t={t} P->A0->partner", forward, f"{projective_label(t)} -> A0({t}) -> {partner}")
    dual_source = a(3, 4) if t == 3 else b(t - 4, t + 1)
    report.check(
        "factorization",
        f"t={t} dual-source",
        tau_rep_power(partner.label, 2) == dual_source,
        f"tau^2 {partner} = {dual_source}",
    )
    dual = compose_nonzero(dual_source, a1(t + 1), injective_label(t), exact_field)
    report.check("factorization", f"t={t} Y->A1->I", dual, f"{dual_source} -> A1({t + 1}) -> {injective_label(t)}")
    return report


def check_pisok(window: Window, exact_field: ExactField = DEFAULT_FIELD) -> Report:
    """Homs and sectional paths between the second translate of ``P_0`` and the boundary orbit of ``P_0``."""
    require_window(window, 5, "pisok")
    report = Report()
    anchor = tau_cluster(cluster_object(projective_label(0)), 2)
    for l in range(1, window.bound + 1, 2):  # noqa: E741
        boundary = cluster_object(a1(l))
        dims = (
            hom_cluster(anchor, boundary, exact_field),
            hom_cluster(boundary, anchor, exact_field),
            hom_cluster(anchor, cluster_object(a0(l)), exact_field),
        )
        report.check("pisok", f"l={l} homs", dims == (1, 1, 0), f"dims={dims}")
        if l + 2 <= window.bound:
            middle = tau_cluster(cluster_object(a(3, l + 2)))
            through = (
                not is_boundary_obj(middle)
                and middle in sectional_successors(anchor, window)
                and middle in sectional_predecessors(boundary, window)
            )
            report.check("pisok", f"l={l} path", through, f"through {middle}")
        for j in (2, 4):
            if l + j > window.bound:
                continue
            witnesses = (
                compose_nonzero(a1(l), a1(l + j), injective_label(0), exact_field),
                compose_nonzero(a1(l), a1(2 + j), injective_label(0), exact_field),
            )
            report.check("pisok", f"l={l} j={j} witnesses", all(witnesses), f"{witnesses}")
    return report


def rigid_completion(
    seed: Iterable[ClusterObject],
    window: Window,
    rng_seed: int = 0,
    *,
    order: str = "random",
    exact_field: ExactField = DEFAULT_FIELD,
) -> RigidSet:
    """
    Greedily extend a rigid set to a maximal rigid set of the window.

    Args:
        seed: Rigid starting set.
        window: Universe of candidate objects.
        rng_seed: Seed for the candidate order.
        order: ``"random"`` or ``"sorted"`` candidate order.
        exact_field: Field for oracle-backed Ext values.

    Returns:
        A set to which no further window object can be added without creating Ext.

    Raises:
        NotRigidError: The seed has non-vanishing Ext.
    """
    objects = window.objects
    window.require(*seed)
    index = {obj: i for i, obj in enumerate(objects)}
    table = ext_matrix(window, exact_field)
    chosen = {index[obj] for obj in seed}
    if any(table[i, j] for i in chosen for j in chosen):
        raise NotRigidError(f"{format_set(objects[i] for i in chosen)} is not rigid")
    candidates = list(range(len(objects)))
    if order == "random":
        candidates = [int(i) for i in np.random.default_rng(rng_seed).permutation(len(objects))]
    for candidate in candidates:
        if candidate in chosen or table[candidate, candidate]:
            continue
        if all(table[candidate, m] == 0 and table[m, candidate] == 0 for m in chosen):
            chosen.add(candidate)
    logger.info("rigid completion with seed %d (%s order) has %d members", rng_seed, order, len(chosen))
    return frozenset(objects[i] for i in chosen)


def _regular_branch(
    report: Report,
    instance: str,
    x: ClusterObject,
    y: ClusterObject,
    members: RigidSet,
    window: Window,
    exact_field: ExactField,
) -> None:
    position = orbit_position(x)
    assert position is not None
    t, s = position
    partner = unique_regular_partner(t)
    if partner is None or tau_cluster(y, s) != partner:
        report.check("no-two-cycles", instance, False, f"{y} is not the regular partner of orbit index {t}")
        return
    neighbours = boundary_predecessors(x, window) | boundary_successors(x, window)
    if neighbours & members:
        report.check("no-two-cycles", instance, True, f"boundary neighbour {format_set(neighbours & members)}")
    elif len(neighbours) < 4:
        report.skip("no-two-cycles", instance, f"boundary neighbours leave window: {format_set(neighbours)}")
    else:
        report.check("no-two-cycles", instance, False, f"not extendable: none of {format_set(neighbours)} present")
    if x.shift == 0 and t % 2 == 1:
        through = tau_rep_power(a0(t), -s)
        if through is not None:
            ok = compose_nonzero(x.label, through, y.label, exact_field)
            report.check("no-two-cycles", f"{instance} witness", ok, f"factors through {through}")


def check_no_two_cycles(
    members: RigidSet, window: Window, exact_field: ExactField = DEFAULT_FIELD, *, name: str = "T"
) -> Report:
    """
    Check the pairwise obligations behind the absence of loops and 2-cycles.

    Every pair with non-zero Homs both ways must be a connecting/regular pair with a
    boundary neighbour present, or a pair of boundary objects; regular pairs are
    impossible.
    """
    report = Report()
    for x in sorted(members):
        loop = (hom_cluster(x, x, exact_field), ext1_cluster(x, x, exact_field))
        if loop != (1, 0):
            report.check("no-two-cycles", f"{name} {x} loop", False, f"End={loop[0]} Ext={loop[1]}")
    ordered = sorted(members)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1 :]:
            if not (hom_cluster(x, y, exact_field) and hom_cluster(y, x, exact_field)):
                continue
            instance = f"{name} {x} <-> {y}"
            regular = (x.component is Component.R, y.component is Component.R)
            if all(regular):
                report.check("no-two-cycles", instance, False, "two regular objects")
            elif any(regular):
                connecting, other = (y, x) if regular[0] else (x, y)
                _regular_branch(report, instance, connecting, other, members, window, exact_field)
            else:
                both = is_boundary_obj(x) and is_boundary_obj(y)
                report.check("no-two-cycles", instance, both, "both boundary" if both else "non-boundary member")
    report.check("no-two-cycles", f"{name} size={len(members)}", not report.failed, format_set(members))
    return report


def forbidden_cover_check(
    inside: Iterable[ClusterObject],
    outside: Iterable[ClusterObject],
    window: Window,
    exact_field: ExactField = DEFAULT_FIELD,
) -> Report:
    """
    For each excluded ``Y``, check that ``H(Y)`` escapes the forbidden regions of the included objects.

    A FAIL marks a ``Y`` whose forbidden region is covered: no cluster-tilting
    subcategory can contain every included object while avoiding every excluded one.
    """
    report = Report()
    inside, outside = list(inside), set(outside)
    if not outside:
        report.check("forbidden-cover", "empty", True, "vacuous")
        return report
    cover = set(outside)
    for x in inside:
        cover |= forbidden_region(x, window, exact_field)
    for y in sorted(outside):
        escaped = forbidden_region(y, window, exact_field) - cover
        report.check("forbidden-cover", str(y), bool(escaped), f"escapes via {format_set(escaped)}")
    return report


# Suites run by ``dinfty-cluster verify``.


def suite_formulas(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Every FORMULA and ZERO_RULE answer of ``hom_rep`` against the oracle; P->P also against dimension vectors."""
    report = Report()
    labels = labels_up_to(window.bound)
    checked: Counter[tuple[str, str]] = Counter()
    for x in labels:
        for y in labels:
            answer = hom_rep(x, y, exact_field)
            if answer.method is Method.ORACLE_FALLBACK:
                continue
            pair = (classify_component(x).value, classify_component(y).value)
            checked[pair] += 1
            expected = oracle_hom(x, y, exact_field)
            if answer.dim != expected:
                report.check("formulas", f"{x} -> {y}", False, f"formula={answer.dim} oracle={expected}")
            if pair == ("P", "P") and (by_dims := preprojective_hom_by_dim_vector(x, y)) != answer.dim:
                report.check("formulas", f"{x} -> {y}", False, f"formula={answer.dim} dim-vector={by_dims}")
    for pair, n in sorted(checked.items()):
        report.check("formulas", "->".join(pair), not report.failed, f"pairs={n}")
    return report


def suite_ar_catalog(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Certify each almost split sequence in the window and the bijectivity of tau."""
    report = Report()
    labels = labels_up_to(window.bound)
    cat = catalog_for(*labels)
    sequences = [s for s in cat.sequences if max(term.m for term in s.terms) <= window.bound]
    for sequence in sequences:
        result = validate_ar_sequence(sequence, window.bound, exact_field)
        if not result.passed:
            report.check("ar-catalog", str(sequence), False, result.detail)
    report.check("ar-catalog", f"sequences={len(sequences)}", not report.failed)
    for label in labels:
        translate = tau_rep(label)
        if translate is not None and tau_rep_inv(translate) != label:
            report.check("ar-catalog", f"tau {label}", False, f"tau^-1 tau {label} = {tau_rep_inv(translate)}")
        if classify_component(label) is not Component.R and translate is not None:
            if classify_component(translate) is not classify_component(label):
                report.check("ar-catalog", f"tau {label}", False, f"leaves its component: {translate}")
    for t in range(window.bound):
        projective, injective = projective_label(t), injective_label(t)
        if max(projective.m, injective.m) > window.bound:
            continue
        certified = (
            oracle_hom(projective, projective, exact_field) == 1
            and oracle_hom(injective, injective, exact_field) == 1
            and all(ext_solve(projective, y, exact_field) == 0 for y in labels)
            and all(ext_solve(y, injective, exact_field) == 0 for y in labels)
            and dim_vector(projective)[t] == 1
        )
        report.check("ar-catalog", f"P{t}={projective} I{t}={injective}", certified)
    return report


def suite_two_cy(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Symmetry of the cluster ``Ext^1`` table of the window."""
    report = Report()
    table = ext_matrix(window, exact_field)
    objects = window.objects
    asymmetric = np.argwhere(table != table.T)
    for i, j in asymmetric:
        if i < j:
            report.check("two-cy", f"{objects[i]} / {objects[j]}", False, f"{table[i, j]} != {table[j, i]}")
    report.check("two-cy", f"window={window.bound}", not report.failed, f"objects={len(objects)}")
    return report


def suite_uf(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Hom is invariant under tau in rep(Q), and cluster Hom out of a preprojective is rep(Q) Hom."""
    report = Report()
    labels = labels_up_to(window.bound)
    movable = [label for label in labels if not is_projective(label)]
    for x in movable:
        tx = tau_rep(x)
        assert tx is not None
        for y in movable:
            ty = tau_rep(y)
            assert ty is not None
            if oracle_hom(x, y, exact_field) != oracle_hom(tx, ty, exact_field):
                report.check("uf", f"tau {x} -> {y}", False, "Hom changes under translation")
    report.check("uf", "translation-invariance", not report.failed, f"labels={len(movable)}")
    mismatches = 0
    for x in labels:
        if classify_component(x) is not Component.P:
            continue
        for y in labels:
            if classify_component(y) is Component.P:
                continue
            cluster = hom_cluster(DerivedObject(x), DerivedObject(y), exact_field)
            rep = hom_rep(x, y, exact_field).dim
            if cluster != rep:
                mismatches += 1
                report.check("uf", f"{x} -> {y}", False, f"cluster={cluster} rep={rep}")
    report.check("uf", "preprojective-source", mismatches == 0)
    return report


def suite_coincide(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_coincide`` for every orbit the window admits."""
    report = Report()
    for t in range(0, 9):
        if window.bound >= 2 * t + 6:
            report.extend(check_coincide(t, window, exact_field))
    return report


def suite_cdetr(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_cdetr`` for every ``t`` the window admits."""
    report = Report()
    for t in range(0, 11):
        if window.bound >= t + 4:
            report.extend(check_cdetr(t, window, exact_field))
    return report


def suite_in_t(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_in_t`` for every odd ``t >= 3`` the window admits."""
    report = Report()
    for t in range(3, window.bound, 2):
        if window.bound >= 2 * t + 3:
            report.extend(check_in_t(t, window, exact_field))
    return report


def suite_rok(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_rok`` on the window."""
    return check_rok(window, exact_field)


def suite_force_bo(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_force_bo`` on the window."""
    return check_force_bo(window, exact_field)


def suite_no_two_cycles(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Complete the empty seed for ``count`` consecutive rng seeds and check each completion."""
    report = Report()
    for k in range(count):
        rng_seed = config.seed + k
        members = rigid_completion((), window, rng_seed, order=config.order, exact_field=exact_field)
        report.extend(check_no_two_cycles(members, window, exact_field, name=f"seed={rng_seed}"))
    return report


def suite_factorization(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_factorization`` for odd ``t`` whose partner fits the window."""
    report = Report()
    for t in range(3, window.bound, 2):
        if t + 2 <= window.bound:
            report.extend(check_factorization(t, exact_field))
    return report


def suite_pisok(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Run ``check_pisok`` on the window."""
    return check_pisok(window, exact_field)


def _k0_class(obj: DerivedObject, size: int) -> np.ndarray:
    sign = -1 if obj.shift % 2 else 1
    return sign * np.array(dim_vector(obj.label).padded(size), dtype=np.int64)


def suite_seam(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Meshes of the connecting component: arrows agree and classes add up in the Grothendieck group."""
    report = Report()
    size = window.bound + 4
    for obj in window.connecting:
        translate = tau_cluster(obj)
        middle = immediate_predecessors(obj)
        consistent = set(middle) == set(immediate_successors(translate))
        defect = _k0_class(translate, size) + _k0_class(obj, size) - sum(
            (_k0_class(m, size) for m in middle), np.zeros(size, dtype=np.int64)
        )
        seam = translate.shift != obj.shift
        if seam or not consistent or np.any(defect):
            report.check(
                "seam", f"{translate} -> {obj}", consistent and not np.any(defect), f"middle={format_set(middle)}"
            )
    return report


def suite_cross_prime(window: Window, exact_field: ExactField, config: Config, count: int) -> Report:
    """Oracle Hom dimensions agree across the configured primes."""
    report = Report()
    fields = config.cross_check_fields()
    labels = labels_up_to(window.bound)
    for x in labels:
        for y in labels:
            dims = [oracle_hom(x, y, f) for f in fields]
            if len(set(dims)) > 1:
                report.check("cross-prime", f"{x} -> {y}", False, f"dims={dims}")
    report.check("cross-prime", ",".join(str(f) for f in fields), not report.failed, f"labels={len(labels)}")
    return report


SuiteRunner = Callable[[Window, ExactField, Config, int], Report]

SUITES: dict[str, SuiteRunner] = {
    "rok": suite_rok,
    "cdetr": suite_cdetr,
    "coincide": suite_coincide,
    "in-t": suite_in_t,
    "force-bo": suite_force_bo,
    "formulas": suite_formulas,
    "ar-catalog": suite_ar_catalog,
    "two-cy": suite_two_cy,
    "no-two-cycles": suite_no_two_cycles,
    "uf": suite_uf,
    "cross-prime": suite_cross_prime,
    "pisok": suite_pisok,
    "factorization": suite_factorization,
    "seam": suite_seam,
}


def run_suite(name: str, config: Config, *, count: int = 100) -> Report:
    """Run one named suite over the window and field of ``config``."""
    try:
        runner = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    window = Window(config.window)
    report = runner(window, config.exact_field(), config, count)
    logger.info("suite %s: %s", name, dict(report.counts))
    return report
