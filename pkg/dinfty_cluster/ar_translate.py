"""
Almost split sequences of rep(Q) and the translation quivers built from them.

The catalog lists every almost split sequence of the three components of the AR
quiver of Q. Everything else here is derived from it: the translations on labels,
on derived objects and on cluster objects, the arrows of the AR quivers, sectional
paths and boundary objects. The regular component is a ZA-infinity; its rectangles
and wings are computed in closed form from its coordinates.
"""

import logging
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import cache, cached_property, lru_cache
from typing import NamedTuple

import networkx as nx

from .exceptions import InvalidLabelError, WindowUnderflowError
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
    injective_vertex,
    labels_up_to,
    projective_label,
    projective_vertex,
    quiver_arrows,
    require_valid,
)
from .matrix_oracle import pair_bound, validate_ar_sequence


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ARSequence:
    """An almost split sequence ``0 -> left -> (+) middle -> right -> 0``."""

    left: IndecLabel
    middle: tuple[IndecLabel, ...]
    right: IndecLabel
    family: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "middle", tuple(sorted(self.middle)))

    @property
    def terms(self) -> tuple[IndecLabel, ...]:
        return (self.left, *self.middle, self.right)

    def __str__(self) -> str:
        return f"0 -> {self.left} -> {' (+) '.join(str(m) for m in self.middle)} -> {self.right} -> 0"


def _odd(start: int, stop: int) -> range:
    return range(start | 1, stop + 1, 2)


def _even(start: int, stop: int) -> range:
    return range(start + start % 2, stop + 1, 2)


# Preprojective families. ``bound`` caps the largest parameter of every term.


def _p_boundary(bound: int) -> Iterator[ARSequence]:
    for i in _odd(1, bound - 2):
        for k in (0, 1):
            yield ARSequence(a_k(k, i), (b(i, i + 2),), a_k(1 - k, i + 2), "P1")


def _p_branch(bound: int) -> Iterator[ARSequence]:
    for i in _odd(1, bound - 4):
        yield ARSequence(b(i, i + 2), (a0(i + 2), a1(i + 2), b(i, i + 4)), b(i + 2, i + 4), "P2")


def _p_a3_ray(bound: int) -> Iterator[ARSequence]:
    for i in _odd(3, bound - 2):
        yield ARSequence(a(3, i), (b(1, i), a(3, i + 2)), b(1, i + 2), "P3")


def _p_a_mesh(bound: int) -> Iterator[ARSequence]:
    for j in _odd(5, bound - 2):
        for i in _odd(5, j):
            yield ARSequence(a(i, j), (a(i - 2, j), a(i, j + 2)), a(i - 2, j + 2), "P4")


def _p_b_mesh(bound: int) -> Iterator[ARSequence]:
    for j in _odd(5, bound - 2):
        for i in _odd(1, j - 4):
            yield ARSequence(b(i, j), (b(i + 2, j), b(i, j + 2)), b(i + 2, j + 2), "P5")


# Preinjective families.


def _i_branch_start(bound: int) -> Iterator[ARSequence]:
    if bound >= 4:
        yield ARSequence(b(2, 4), (a0(2), a1(2), a(2, 4)), a(2, 2), "I1")


def _i_boundary(bound: int) -> Iterator[ARSequence]:
    for i in _even(2, bound - 2):
        for k in (0, 1):
            yield ARSequence(a_k(k, i + 2), (b(i, i + 2),), a_k(1 - k, i), "I2")


def _i_branch(bound: int) -> Iterator[ARSequence]:
    # Printed with i >= 4; the i = 2 instance is the sequence ending at B(2,4).
    for i in _even(2, bound - 4):
        yield ARSequence(b(i + 2, i + 4), (a0(i + 2), a1(i + 2), b(i, i + 4)), b(i, i + 2), "I3")


def _i_a2_ray(bound: int) -> Iterator[ARSequence]:
    for i in _even(4, bound - 2):
        yield ARSequence(b(2, i + 2), (b(2, i), a(2, i + 2)), a(2, i), "I4")


def _i_a_mesh(bound: int) -> Iterator[ARSequence]:
    for j in _even(4, bound - 2):
        for i in _even(4, j):
            yield ARSequence(a(i - 2, j + 2), (a(i - 2, j), a(i, j + 2)), a(i, j), "I5")


def _i_b_mesh(bound: int) -> Iterator[ARSequence]:
    for j in _even(6, bound - 2):
        for i in _even(2, j - 4):
            yield ARSequence(b(i + 2, j + 2), (b(i + 2, j), b(i, j + 2)), b(i, j), "I6")


# Regular families.


def _r_mouth(bound: int) -> Iterator[ARSequence]:
    if bound >= 4:
        yield ARSequence(a(3, 4), (b(1, 4),), b(1, 2), "R1")
    if bound >= 3:
        yield ARSequence(b(1, 2), (b(2, 3),), a(2, 3), "R2")


def _r_b_short(bound: int) -> Iterator[ARSequence]:
    for i in range(1, bound - 2):
        if i % 2:
            yield ARSequence(b(i, i + 3), (b(i + 2, i + 3), b(i, i + 1)), b(i + 1, i + 2), "R3")
        else:
            yield ARSequence(b(i + 1, i + 2), (b(i + 2, i + 3), b(i, i + 1)), b(i, i + 3), "R4")


def _r_a_short(bound: int) -> Iterator[ARSequence]:
    for i in range(2, bound - 2):
        if i % 2:
            if i >= 3:
                yield ARSequence(a(i + 2, i + 3), (a(i, i + 3),), a(i, i + 1), "R5")
        else:
            yield ARSequence(a(i, i + 1), (a(i, i + 3),), a(i + 2, i + 3), "R6")


def _r_a_mesh(bound: int) -> Iterator[ARSequence]:
    for j in range(5, bound - 1):
        for i in range(2, j - 2):
            if i % 2 and not j % 2 and i >= 3:
                yield ARSequence(a(i + 2, j + 2), (a(i, j + 2), a(i + 2, j)), a(i, j), "R7")
            elif not i % 2 and j % 2:
                yield ARSequence(a(i, j), (a(i, j + 2), a(i + 2, j)), a(i + 2, j + 2), "R8")


def _r_ab_rays(bound: int) -> Iterator[ARSequence]:
    for j in _even(4, bound - 2):
        yield ARSequence(a(3, j + 2), (b(1, j + 2), a(3, j)), b(1, j), "R9")
    for j in _odd(3, bound - 2):
        yield ARSequence(b(2, j), (b(2, j + 2), a(2, j)), a(2, j + 2), "R10")


def _r_b_mesh(bound: int) -> Iterator[ARSequence]:
    for j in range(4, bound - 1):
        for i in range(3, j):
            if i % 2 and not j % 2:
                yield ARSequence(b(i - 2, j + 2), (b(i, j + 2), b(i - 2, j)), b(i, j), "R11")
            elif not i % 2 and j % 2 and i >= 4:
                yield ARSequence(b(i, j), (b(i, j + 2), b(i - 2, j)), b(i - 2, j + 2), "R12")


CATALOG_FAMILIES: tuple[Callable[[int], Iterator[ARSequence]], ...] = (
    _p_boundary,
    _p_branch,
    _p_a3_ray,
    _p_a_mesh,
    _p_b_mesh,
    _i_branch_start,
    _i_boundary,
    _i_branch,
    _i_a2_ray,
    _i_a_mesh,
    _i_b_mesh,
    _r_mouth,
    _r_b_short,
    _r_a_short,
    _r_a_mesh,
    _r_ab_rays,
    _r_b_mesh,
)

# Terms of one sequence differ by at most this much in their largest parameter.
CATALOG_REACH = 2


class Catalog:
    """All cataloged sequences whose terms have parameters at most ``bound``."""

    def __init__(self, bound: int):
        self.bound = bound
        self.sequences: list[ARSequence] = []
        self.by_left: dict[IndecLabel, ARSequence] = {}
        self.by_right: dict[IndecLabel, ARSequence] = {}
        self.by_middle: dict[IndecLabel, list[ARSequence]] = {}
        for family in CATALOG_FAMILIES:
            for sequence in family(bound):
                self._add(sequence)
        logger.debug("catalog up to %d holds %d sequences", bound, len(self.sequences))

    def _add(self, sequence: ARSequence) -> None:
        existing = self.by_right.get(sequence.right)
        if existing is not None:
            if existing == sequence:
                return
            sequence = _resolve_double_assignment(existing, sequence)
            self.sequences.remove(existing)
            del self.by_left[existing.left]
            for term in existing.middle:
                self.by_middle[term].remove(existing)
        self.sequences.append(sequence)
        self.by_left[sequence.left] = sequence
        self.by_right[sequence.right] = sequence
        for term in sequence.middle:
            self.by_middle.setdefault(term, []).append(sequence)


def _resolve_double_assignment(first: ARSequence, second: ARSequence) -> ARSequence:
    reports = [validate_ar_sequence(s, pair_bound(*s.terms)) for s in (first, second)]
    passing = [report.sequence for report in reports if report.passed]
    if len(passing) != 1:
        raise InvalidLabelError(f"cannot decide between {first} and {second} ending at {first.right}")
    logger.warning("two sequences end at %s; keeping %s (%s)", first.right, passing[0], passing[0].family)
    return passing[0]


@lru_cache(maxsize=None)
def _catalog(bucket: int) -> Catalog:
    return Catalog(bucket)


def catalog_for(*labels: IndecLabel) -> Catalog:
    """A catalog holding every sequence that involves any of ``labels``."""
    need = max(label.m for label in labels) + 2 * CATALOG_REACH
    return _catalog(-(-need // 8) * 8)


def ar_sequences_through(label: IndecLabel) -> list[ARSequence]:
    """Every cataloged sequence with ``label`` as a left, middle or right term."""
    require_valid(label)
    cat = catalog_for(label)
    found = {s for s in (cat.by_left.get(label), cat.by_right.get(label)) if s is not None}
    found.update(cat.by_middle.get(label, []))
    return sorted(found, key=lambda s: (s.right, s.left))


def sequence_ending_at(label: IndecLabel) -> ARSequence | None:
    """The almost split sequence with right term ``label``; None on projectives."""
    return catalog_for(require_valid(label)).by_right.get(label)


def sequence_starting_at(label: IndecLabel) -> ARSequence | None:
    """The almost split sequence with left term ``label``; None on injectives."""
    return catalog_for(require_valid(label)).by_left.get(label)


def is_projective(label: IndecLabel) -> bool:
    """Whether ``label`` is the projective ``P_t`` of some vertex."""
    return projective_vertex(label) is not None


def is_injective(label: IndecLabel) -> bool:
    """Whether ``label`` is the injective ``I_t`` of some vertex."""
    return injective_vertex(label) is not None


def tau_rep(label: IndecLabel) -> IndecLabel | None:
    """AR translate of ``label`` in rep(Q); None on projectives."""
    sequence = sequence_ending_at(label)
    return sequence.left if sequence else None


def tau_rep_inv(label: IndecLabel) -> IndecLabel | None:
    """Inverse AR translate of ``label`` in rep(Q); None on injectives."""
    sequence = sequence_starting_at(label)
    return sequence.right if sequence else None


def tau_rep_power(label: IndecLabel, power: int) -> IndecLabel | None:
    """``tau_rep`` iterated ``power`` times (inverse for negative powers), None once undefined."""
    step = tau_rep if power > 0 else tau_rep_inv
    current: IndecLabel | None = label
    for _ in range(abs(power)):
        if current is None:
            return None
        current = step(current)
    return current


def rep_successors(label: IndecLabel) -> tuple[IndecLabel, ...]:
    """Direct successors of ``label`` in the AR quiver of rep(Q)."""
    sequence = sequence_starting_at(label)
    if sequence is not None:
        return sequence.middle
    return tuple(sorted(s.right for s in catalog_for(label).by_middle.get(label, [])))


def rep_predecessors(label: IndecLabel) -> tuple[IndecLabel, ...]:
    """Direct predecessors of ``label`` in the AR quiver of rep(Q)."""
    sequence = sequence_ending_at(label)
    if sequence is not None:
        return sequence.middle
    return tuple(sorted(s.left for s in catalog_for(label).by_middle.get(label, [])))


def is_boundary_representation(label: IndecLabel) -> bool:
    """At most one direct predecessor and at most one direct successor in rep(Q)."""
    return len(rep_predecessors(label)) <= 1 and len(rep_successors(label)) <= 1


def _translation_level(label: IndecLabel) -> int:
    position = orbit_position(cluster_object(label))
    assert position is not None
    return position[1]


@cache
def is_rep_successor(source: IndecLabel, target: IndecLabel) -> bool:
    """
    Whether a path ``source ~> target`` exists in the preprojective component of rep(Q).

    The trivial path counts. Arrows never lower the translation level, so the search
    stays on the finitely many objects at or below the level of ``target``.

    Raises:
        ValueError: If either label is not preprojective.
    """
    for label in (source, target):
        if classify_component(label) is not Component.P:
            raise ValueError(f"{label} is not preprojective")
    limit = _translation_level(target)
    seen = {source}
    frontier = [source]
    while frontier:
        current = frontier.pop()
        if current == target:
            return True
        for succ in rep_successors(current):
            if succ not in seen and _translation_level(succ) <= limit:
                seen.add(succ)
                frontier.append(succ)
    return False


def _tau_derived_step(obj: DerivedObject) -> DerivedObject:
    t = projective_vertex(obj.label)
    if t is not None:
        return DerivedObject(injective_label(t), obj.shift - 1)
    translate = tau_rep(obj.label)
    assert translate is not None
    return DerivedObject(translate, obj.shift)


def _tau_derived_inv_step(obj: DerivedObject) -> DerivedObject:
    t = injective_vertex(obj.label)
    if t is not None:
        return DerivedObject(projective_label(t), obj.shift + 1)
    translate = tau_rep_inv(obj.label)
    assert translate is not None
    return DerivedObject(translate, obj.shift)


def tau_derived(obj: DerivedObject, power: int = 1) -> DerivedObject:
    """The AR translation of the derived category, iterated ``power`` times."""
    require_valid(obj.label)
    step = _tau_derived_step if power > 0 else _tau_derived_inv_step
    for _ in range(abs(power)):
        obj = step(obj)
    return obj


def apply_f(obj: DerivedObject, power: int = 1) -> DerivedObject:
    """Apply ``F = tau^-1 [1]`` ``power`` times."""
    return tau_derived(obj, -power).shifted(power)


def fundamental_level(obj: DerivedObject) -> int:
    """Power of F separating ``obj`` from the fundamental domain."""
    if classify_component(obj.label) is Component.I:
        return obj.shift + 1
    return obj.shift


def to_fundamental(obj: DerivedObject) -> ClusterObject:
    """The fundamental-domain representative of ``obj`` in the cluster category."""
    return apply_f(obj, -fundamental_level(obj))


def is_fundamental(obj: DerivedObject) -> bool:
    """Whether ``obj`` already lies in the fundamental domain."""
    return fundamental_level(obj) == 0


def cluster_object(label: IndecLabel) -> ClusterObject:
    """The fundamental-domain object with label ``label``: shifted by -1 for preinjectives."""
    shift = -1 if classify_component(label) is Component.I else 0
    return DerivedObject(label, shift)


def tau_cluster(obj: ClusterObject, power: int = 1) -> ClusterObject:
    """The AR translation of the cluster category, normalised to the fundamental domain."""
    return to_fundamental(tau_derived(obj, power))


def orbit_position(obj: ClusterObject) -> tuple[int, int] | None:
    """
    Locate a connecting-component object in its translation orbit.

    Returns:
        ``(t, s)`` with ``obj == tau_cluster(P_t, -s)``, or None for regular objects.
    """
    obj = to_fundamental(obj)
    component = classify_component(obj.label)
    if component is Component.R:
        return None
    steps = 0
    if component is Component.P:
        label = obj.label
        while (t := projective_vertex(label)) is None:
            translate = tau_rep(label)
            assert translate is not None
            label = translate
            steps += 1
        return t, steps
    label = obj.label
    while (t := injective_vertex(label)) is None:
        translate = tau_rep_inv(label)
        assert translate is not None
        label = translate
        steps += 1
    return t, -steps - 1


def orbit_index(obj: ClusterObject) -> int | None:
    """The ``t`` with ``obj`` in the translation orbit of ``P_t``; None for regular objects."""
    position = orbit_position(obj)
    return position[0] if position else None


@cache
def immediate_successors(obj: ClusterObject) -> tuple[ClusterObject, ...]:
    """Direct successors of a fundamental-domain object in the AR quiver of the cluster category."""
    shift = obj.shift
    found = [DerivedObject(label, shift) for label in rep_successors(obj.label)]
    t = injective_vertex(obj.label)
    if t is not None:
        # I_t[-1] -> P_j for every arrow t -> j of Q
        found += [DerivedObject(projective_label(y), 0) for x, y in quiver_arrows(max(t + 1, 2)) if x == t]
    return tuple(sorted(found))


@cache
def immediate_predecessors(obj: ClusterObject) -> tuple[ClusterObject, ...]:
    """Direct predecessors of a fundamental-domain object in the AR quiver of the cluster category."""
    shift = obj.shift
    found = [DerivedObject(label, shift) for label in rep_predecessors(obj.label)]
    t = projective_vertex(obj.label)
    if t is not None:
        found += [DerivedObject(injective_label(x), -1) for x, y in quiver_arrows(max(t + 1, 2)) if y == t]
    return tuple(sorted(found))


def is_boundary_obj(obj: ClusterObject) -> bool:
    """Exactly one immediate predecessor in the AR quiver of the cluster category."""
    return len(immediate_predecessors(to_fundamental(obj))) == 1


@dataclass(frozen=True)
class Window:
    """The fundamental-domain objects whose labels are supported on vertices ``0..bound``."""

    bound: int

    def __post_init__(self) -> None:
        if self.bound < 3:
            raise WindowUnderflowError(f"window bound must be at least 3, got {self.bound}")

    @cached_property
    def objects(self) -> tuple[ClusterObject, ...]:
        return tuple(sorted(cluster_object(label) for label in labels_up_to(self.bound)))

    @cached_property
    def connecting(self) -> tuple[ClusterObject, ...]:
        return tuple(obj for obj in self.objects if obj.component is not Component.R)

    @cached_property
    def regular(self) -> tuple[ClusterObject, ...]:
        return tuple(obj for obj in self.objects if obj.component is Component.R)

    @cached_property
    def graph(self) -> nx.DiGraph:
        """AR quiver of the cluster category restricted to the window."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.objects)
        for obj in self.objects:
            graph.add_edges_from((obj, succ) for succ in immediate_successors(obj) if succ in self)
        return graph

    def __contains__(self, obj: object) -> bool:
        if not isinstance(obj, DerivedObject):
            return False
        return obj.label.m <= self.bound and is_fundamental(obj)

    def require(self, *objects: DerivedObject) -> None:
        """
        Insist that every object belongs to the window.

        Raises:
            WindowUnderflowError: If some object lies outside the window or the fundamental domain.
        """
        for obj in objects:
            if obj not in self:
                raise WindowUnderflowError(f"{obj} is not a fundamental-domain object of window {self.bound}")


class Arrow(NamedTuple):
    source: ClusterObject
    target: ClusterObject

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"


def ar_arrows(obj: IndecLabel | DerivedObject, window: Window) -> list[Arrow]:
    """
    Arrows into and out of ``obj`` in the AR quiver of the cluster category.

    A bare label names its fundamental-domain object. Neighbours are reported in
    full even when they fall outside the window.

    Raises:
        WindowUnderflowError: ``obj`` itself is not in the window.
    """
    target = cluster_object(obj) if isinstance(obj, IndecLabel) else obj
    window.require(target)
    arrows = [Arrow(pred, target) for pred in immediate_predecessors(target)]
    arrows += [Arrow(target, succ) for succ in immediate_successors(target)]
    return arrows


def successors(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """Objects reachable from ``obj`` by a path of positive length."""
    window.require(obj)
    return set(nx.descendants(window.graph, obj))


def predecessors(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """Objects of the window with a path of positive length into ``obj``."""
    window.require(obj)
    return set(nx.ancestors(window.graph, obj))


def sectional_path_counts(obj: ClusterObject, window: Window, *, backward: bool = False) -> Counter[ClusterObject]:
    """
    Number of sectional paths of positive length starting at ``obj``, by endpoint.

    A path is sectional when no two-step piece ``X -> Y -> Z`` has ``Z`` equal to the
    inverse translate of ``X``. With ``backward`` the paths end at ``obj`` and are
    counted by their start.
    """
    window.require(obj)
    graph = window.graph.reverse(copy=False) if backward else window.graph
    power = 1 if backward else -1

    @cache
    def walk(prev: ClusterObject, cur: ClusterObject) -> Counter[ClusterObject]:
        counts: Counter[ClusterObject] = Counter({cur: 1})
        banned = tau_cluster(prev, power)
        for nxt in graph.successors(cur):
            if nxt != banned:
                counts.update(walk(cur, nxt))
        return counts

    total: Counter[ClusterObject] = Counter()
    for nxt in graph.successors(obj):
        total.update(walk(obj, nxt))
    return total


def sectional_successors(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """Endpoints of the sectional paths of positive length starting at ``obj``."""
    return set(sectional_path_counts(obj, window))


def sectional_predecessors(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """Starting points of the sectional paths of positive length ending at ``obj``."""
    return set(sectional_path_counts(obj, window, backward=True))


def is_sectional_successor(source: ClusterObject, target: ClusterObject, window: Window) -> bool:
    """True iff some sectional path leads from ``source`` to ``target``."""
    window.require(target)
    return target in sectional_path_counts(source, window)


def boundary_predecessors(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """Boundary objects ``U`` with exactly one sectional path ``U -> ... -> obj``."""
    counts = sectional_path_counts(obj, window, backward=True)
    return {u for u, n in counts.items() if n == 1 and is_boundary_obj(u)}


def boundary_successors(obj: ClusterObject, window: Window) -> set[ClusterObject]:
    """Boundary objects ``V`` with exactly one sectional path ``obj -> ... -> V``."""
    counts = sectional_path_counts(obj, window)
    return {v for v, n in counts.items() if n == 1 and is_boundary_obj(v)}


def rep_quiver_graph(bound: int) -> nx.DiGraph:
    """AR quiver of rep(Q) on the labels supported in ``0..bound``."""
    graph = nx.DiGraph()
    labels = labels_up_to(bound)
    graph.add_nodes_from(labels)
    for label in labels:
        graph.add_edges_from((label, succ) for succ in rep_successors(label) if succ.m <= bound)
    return graph


# The regular component as ZA-infinity. M(q, l) is the object of quasi-length l
# whose quasi-socle is the quasi-simple S_q; tau^-1 raises q by one.


def regular_coordinates(label: IndecLabel) -> tuple[int, int]:
    """Coordinates ``(q, l)`` of a regular label."""
    if classify_component(label) is not Component.R:
        raise ValueError(f"{label} is not regular")
    n, m = label.n, label.m
    if label.family is Family.A:
        length = (m - n + 1) // 2
        if n % 2 == 0:
            return n // 2, length
        return 1 - m // 2, length
    if n % 2:
        below, above = (n - 1) // 2, (m - 2) // 2
    else:
        above, below = (n - 2) // 2, (m - 1) // 2
    return -above, above + below + 1


def regular_label(q: int, length: int) -> IndecLabel:
    """Inverse of :func:`regular_coordinates`."""
    if length < 1:
        raise ValueError(f"quasi-length must be positive, got {length}")
    end = q + length - 1
    if q >= 1:
        return a(2 * q, 2 * end + 1)
    if end <= -1:
        return a(1 - 2 * end, 2 - 2 * q)
    above, below = -q, end
    if below == 0:
        return b(1, 2 * above + 2)
    ends = sorted((2 * above + 2, 2 * below + 1))
    return b(ends[0], ends[1])


def quasi_simple(q: int) -> IndecLabel:
    """The quasi-simple ``M(q, 1)`` at the mouth of the regular component."""
    return regular_label(q, 1)


def is_quasi_simple(label: IndecLabel) -> bool:
    """Whether ``label`` is regular of quasi-length one."""
    return classify_component(label) is Component.R and regular_coordinates(label)[1] == 1


def _interval(label: IndecLabel) -> tuple[int, int]:
    q, length = regular_coordinates(label)
    return q, q + length - 1


LabelPredicate = Callable[[IndecLabel], bool]


def _regular_only(predicate: Callable[[int, int], bool]) -> LabelPredicate:
    def member(label: IndecLabel) -> bool:
        if classify_component(label) is not Component.R:
            return False
        return predicate(*_interval(label))

    return member


def forward_rectangle(label: IndecLabel) -> LabelPredicate:
    """Regular ``Y`` with a nonzero map ``label -> Y``."""
    q, end = _interval(label)
    return _regular_only(lambda q2, end2: q <= q2 <= end <= end2)


def backward_rectangle(label: IndecLabel) -> LabelPredicate:
    """Regular ``X`` with a nonzero map ``X -> label``."""
    q2, end2 = _interval(label)
    return _regular_only(lambda q, end: q <= q2 <= end <= end2)


class RegularRegions(NamedTuple):
    forward_rectangle: LabelPredicate
    backward_rectangle: LabelPredicate


def regular_regions(label: IndecLabel) -> RegularRegions:
    """Both rectangles of a regular label."""
    return RegularRegions(forward_rectangle(label), backward_rectangle(label))


def wing(quasi: IndecLabel) -> LabelPredicate:
    """Regular objects whose quasi-composition series passes through ``quasi``."""
    if not is_quasi_simple(quasi):
        raise ValueError(f"{quasi} is not quasi-simple")
    c = regular_coordinates(quasi)[0]
    return _regular_only(lambda q, end: q <= c <= end)


def pseudo_rectangle(label: IndecLabel) -> LabelPredicate:
    """
    Preprojective ``Y`` receiving a one-dimensional Hom from ``label`` along the non-boundary part.

    For ``P_t`` this is ``{B(i,j) : 1 <= i < t <= j} | {A(k,l) : 1 < k <= t <= l}`` with
    odd parameters; other preprojectives translate back to their projective.
    """
    position = orbit_position(cluster_object(label))
    if position is None or classify_component(label) is not Component.P:
        raise ValueError(f"{label} is not preprojective")
    t, s = position

    def member(other: IndecLabel) -> bool:
        if classify_component(other) is not Component.P:
            return False
        shifted = tau_rep_power(other, s)
        if shifted is None or shifted.family in (Family.A0, Family.A1):
            return False
        if shifted.family is Family.B:
            return 1 <= shifted.n < t <= shifted.m
        return 1 < shifted.n <= t <= shifted.m

    return member


def mesh_defect(label: IndecLabel) -> tuple[int, ...]:
    """Left plus right minus middle dimension vectors of the sequence ending at ``label``."""
    sequence = sequence_ending_at(label)
    if sequence is None:
        raise ValueError(f"{label} is projective")
    size = max(term.m for term in sequence.terms) + 1
    ends = dim_vector(sequence.left) + dim_vector(sequence.right)
    middle = [dim_vector(term) for term in sequence.middle]
    return tuple(ends[v] - sum(d[v] for d in middle) for v in range(size))
