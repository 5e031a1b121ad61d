"""
Hom and Ext dimensions in rep(Q), the derived category and the cluster category.

Pairs inside the preprojective and regular components are answered by closed
formulas, pairs that vanish for component reasons by zero rules, and everything
else by the matrix oracle.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .ar_translate import (
    apply_f,
    cluster_object,
    forward_rectangle,
    fundamental_level,
    is_rep_successor,
    orbit_index,
    orbit_position,
    pseudo_rectangle,
    quasi_simple,
    tau_cluster,
    tau_derived,
    tau_rep,
    tau_rep_power,
    wing,
)
from .label_core import Component, DerivedObject, Family, IndecLabel, classify_component, dim_vector, require_valid
from .matrix_oracle import DEFAULT_FIELD, ExactField, ext_solve, oracle_hom


logger = logging.getLogger(__name__)


class Method(str, Enum):
    FORMULA = "FORMULA"
    ZERO_RULE = "ZERO_RULE"
    ORACLE_FALLBACK = "ORACLE_FALLBACK"


@dataclass(frozen=True)
class HomAnswer:
    dim: int
    method: Method


ZERO_PAIRS = frozenset({(Component.I, Component.P), (Component.I, Component.R), (Component.R, Component.P)})


def quasi_simple_pair(t: int) -> tuple[IndecLabel, ...]:
    """
    Quasi-simples whose wings carry Hom(P_t, -) on the regular component.

    P_0 and P_1 map only into the wing of B(1,2). For t >= 2 the two quasi-simples
    are the ones supported at vertex t, e.g. A(t,t+1) and A(t-1,t) for odd t >= 3.
    """
    if t <= 1:
        return (quasi_simple(0),)
    return (quasi_simple(-((t - 1) // 2)), quasi_simple(t // 2))


BOUNDARY_FAMILIES = (Family.A0, Family.A1)


def _crosses_boundary(source: IndecLabel, target: IndecLabel) -> bool:
    """``target`` is an ``A_l'`` of the other boundary family with ``l' > l``."""
    return target.family in BOUNDARY_FAMILIES and target.family is not source.family and target.m > source.m


def _preprojective_to_preprojective(source: IndecLabel, target: IndecLabel) -> int:
    """
    Hom between preprojectives from the successor relation and the pseudo-rectangle.

    Off the successors of ``source`` the space vanishes. On the orbits of P_0 and P_1 it is
    one-dimensional except on the later members of the other boundary family. From P_t with
    t >= 2 it is one-dimensional on the pseudo-rectangle and on the boundary families, and
    two-dimensional on every other successor.
    """
    if not is_rep_successor(source, target):
        return 0
    t = orbit_index(cluster_object(source))
    if t is not None and t <= 1:
        return 0 if _crosses_boundary(source, target) else 1
    if pseudo_rectangle(source)(target) or target.family in BOUNDARY_FAMILIES:
        return 1
    return 2


def preprojective_hom_by_dim_vector(source: IndecLabel, target: IndecLabel) -> int:
    """
    Hom(source, target) for preprojectives as an entry of a dimension vector.

    With ``source = tau^-s P_t`` this is ``dim (tau^s target)_t``, zero once ``tau^s target``
    is undefined.
    """
    position = orbit_position(cluster_object(source))
    if position is None or classify_component(target) is not Component.P:
        raise ValueError(f"{source} -> {target} is not a pair of preprojectives")
    t, s = position
    reduced = tau_rep_power(target, s)
    return 0 if reduced is None else dim_vector(reduced)[t]


def _preprojective_to_regular(source: IndecLabel, target: IndecLabel) -> int:
    position = orbit_position(cluster_object(source))
    assert position is not None
    t, s = position
    reduced = tau_rep_power(target, s)
    assert reduced is not None
    return sum(1 for quasi in quasi_simple_pair(t) if wing(quasi)(reduced))


@lru_cache(maxsize=None)
def hom_rep(source: IndecLabel, target: IndecLabel, exact_field: ExactField = DEFAULT_FIELD) -> HomAnswer:
    """
    Dimension of Hom(source, target) in rep(Q).

    Args:
        source: Domain label.
        target: Codomain label.
        exact_field: Field for pairs answered by the oracle.

    Returns:
        The dimension and how it was obtained.
    """
    pair = (classify_component(source), classify_component(target))
    if pair in ZERO_PAIRS:
        return HomAnswer(0, Method.ZERO_RULE)
    if pair == (Component.R, Component.R):
        return HomAnswer(int(forward_rectangle(source)(target)), Method.FORMULA)
    if pair == (Component.P, Component.P):
        return HomAnswer(_preprojective_to_preprojective(source, target), Method.FORMULA)
    if pair == (Component.P, Component.R):
        return HomAnswer(_preprojective_to_regular(source, target), Method.FORMULA)
    logger.debug("oracle fallback for %s -> %s (%s -> %s)", source, target, pair[0].value, pair[1].value)
    return HomAnswer(oracle_hom(source, target, exact_field), Method.ORACLE_FALLBACK)


def hom_rep_dim(
    source: IndecLabel, target: IndecLabel, exact_field: ExactField = DEFAULT_FIELD, *, oracle: bool = False
) -> int:
    """dim Hom(source, target) in rep(Q), by formula unless ``oracle`` is set."""
    if oracle:
        return oracle_hom(require_valid(source), require_valid(target), exact_field)
    return hom_rep(source, target, exact_field).dim


def ext1_rep(
    source: IndecLabel, target: IndecLabel, exact_field: ExactField = DEFAULT_FIELD, *, oracle: bool = False
) -> int:
    """Ext^1(source, target) in rep(Q), as Hom(target, tau source); the oracle uses the Euler form instead."""
    if oracle:
        return ext_solve(require_valid(source), require_valid(target), exact_field)
    translate = tau_rep(source)
    if translate is None:
        return 0
    return hom_rep(target, translate, exact_field).dim


def hom_derived(
    source: DerivedObject, target: DerivedObject, exact_field: ExactField = DEFAULT_FIELD, *, oracle: bool = False
) -> int:
    """Hom in the derived category; nonzero only in degrees 0 and 1 since rep(Q) is hereditary."""
    degree = target.shift - source.shift
    if degree == 0:
        return hom_rep_dim(source.label, target.label, exact_field, oracle=oracle)
    if degree == 1:
        return ext1_rep(source.label, target.label, exact_field, oracle=oracle)
    return 0


@lru_cache(maxsize=None)
def hom_cluster(
    source: DerivedObject, target: DerivedObject, exact_field: ExactField = DEFAULT_FIELD, *, oracle: bool = False
) -> int:
    """
    Hom in the cluster category as the sum of derived Homs into the F-orbit of ``target``.

    Only the powers of F that bring ``target`` within one degree of ``source``
    contribute; a margin on both sides is summed.
    """
    base = source.shift - fundamental_level(target)
    return sum(
        hom_derived(source, apply_f(target, i), exact_field, oracle=oracle) for i in range(base - 2, base + 4)
    )


def hom_cluster_two_term(
    source: IndecLabel, target: IndecLabel, exact_field: ExactField = DEFAULT_FIELD, *, oracle: bool = False
) -> int:
    """``Hom_D(X, Y) + D Hom_D(Y, tau^2 X)`` for unshifted representations X and Y."""
    x, y = DerivedObject(source), DerivedObject(target)
    return hom_derived(x, y, exact_field, oracle=oracle) + hom_derived(
        y, tau_derived(x, 2), exact_field, oracle=oracle
    )


def ext1_cluster(
    source: DerivedObject, target: DerivedObject, exact_field: ExactField = DEFAULT_FIELD, *, oracle: bool = False
) -> int:
    """Ext^1 in the cluster category as Hom(source, tau target)."""
    return hom_cluster(source, tau_cluster(target), exact_field, oracle=oracle)
