"""
Matrix representations of truncations of Q and exact Hom computations on them.

This module is the ground truth the closed formulas are checked against. A label
is realised as a representation of the quiver truncated to vertices ``0..N`` and
Hom spaces are computed as the kernel of the map ``(f_x) -> (f_y X_a - Y_a f_x)``.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
from sympy import Matrix

from .exceptions import OracleError, TruncationError
from .label_core import DimVector, Family, IndecLabel, dim_vector, quiver_arrows, require_valid


if TYPE_CHECKING:
    from .ar_translate import ARSequence

logger = logging.getLogger(__name__)


def mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(matrix % p, dtype=np.int64)


def inv_mod_scalar(value: int | np.integer, p: int) -> int:
    """Inverse of a nonzero scalar modulo the prime ``p``."""
    return pow(int(value) % p, p - 2, p)


def rref_mod(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """RREF over GF(p). Returns the reduced matrix and its pivot columns."""
    reduced = mod_p(matrix.copy(), p)
    rows, cols = reduced.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(reduced[r:, c])[0]
        if candidates.size == 0:
            continue
        piv = r + int(candidates[0])
        if piv != r:
            reduced[[r, piv]] = reduced[[piv, r]]
        reduced[r] = mod_p(reduced[r] * inv_mod_scalar(reduced[r, c], p), p)
        others = np.nonzero(reduced[:, c])[0]
        others = others[others != r]
        if others.size:
            reduced[others] = mod_p(reduced[others] - np.outer(reduced[others, c], reduced[r]), p)
        pivots.append(c)
        r += 1
    return reduced, pivots


def nullspace_mod(matrix: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace basis of ``matrix`` over GF(p); columns form a basis."""
    n = matrix.shape[1]
    reduced, pivots = rref_mod(matrix, p)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    if not free:
        return basis
    basis[free, np.arange(len(free))] = 1
    if pivots:
        basis[pivots, :] = mod_p(-reduced[: len(pivots)][:, free], p)
    return basis


@dataclass(frozen=True)
class ExactField:
    """GF(p) when ``prime`` is set, the rationals otherwise."""

    prime: int | None = None

    @classmethod
    def gf(cls, prime: int) -> "ExactField":
        return cls(prime)

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    def nullspace(self, matrix: np.ndarray) -> np.ndarray:
        """Columns spanning the kernel of ``matrix``."""
        n = matrix.shape[1]
        if matrix.shape[0] == 0:
            return np.eye(n, dtype=np.int64 if self.prime else object)
        if self.prime is not None:
            return nullspace_mod(matrix, self.prime)
        vectors = Matrix(matrix.tolist()).nullspace()
        basis = np.empty((n, len(vectors)), dtype=object)
        for j, vector in enumerate(vectors):
            basis[:, j] = list(vector)
        return basis

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        product = left @ right
        return mod_p(product, self.prime) if self.prime is not None else product

    def is_zero(self, matrix: np.ndarray) -> bool:
        if self.prime is not None:
            return not np.any(mod_p(matrix, self.prime))
        return all(entry == 0 for entry in matrix.flat)

    def __str__(self) -> str:
        return "QQ" if self.prime is None else f"GF({self.prime})"


RATIONAL = ExactField()
DEFAULT_FIELD = ExactField.gf(1009)


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """A representation of Q truncated to vertices ``0..bound``."""

    bound: int
    dims: tuple[int, ...]
    maps: Mapping[tuple[int, int], np.ndarray] = field(repr=False)
    label: IndecLabel | None = None

    @property
    def dim_vector(self) -> DimVector:
        return DimVector(self.dims)

    def __str__(self) -> str:
        return f"{self.label or 'rep'}@{self.bound}"


def _arrow_matrix(label: IndecLabel, source: int, target: int, dims: tuple[int, ...]) -> np.ndarray:
    rows, cols = dims[target], dims[source]
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.int64)
    if rows == cols:
        return np.eye(rows, dtype=np.int64)
    if label.family is not Family.B:
        raise OracleError(f"{label} has a dimension jump along {source}->{target}")
    if source == 2 and target in (0, 1):
        return np.array([[1, 0]] if target == 0 else [[0, 1]], dtype=np.int64)
    if cols == 2:
        return np.array([[1, 1]], dtype=np.int64)
    return np.array([[1], [1]], dtype=np.int64)


def build_rep(label: IndecLabel, bound: int) -> MatrixRep:
    """
    Realise ``label`` as a representation of the truncation to ``0..bound``.

    All maps between one-dimensional spaces are identities. For ``B(n,m)`` with
    ``n >= 2`` the arrows from vertex 2 to 0 and 1 are the coordinate projections,
    consecutive two-dimensional spaces are joined by identities and the arrow where
    the dimension drops from 2 to 1 carries ``(1 1)`` or its transpose.

    Raises:
        TruncationError: ``bound`` is below 3 or below the label's support.
        OracleError: The constructed representation is not a brick.
    """
    require_valid(label)
    if bound < 3 or bound < label.m:
        raise TruncationError(f"truncation {bound} is too small for {label}")
    rep = _assemble(label, bound)
    _certify_brick(label)
    return rep


@lru_cache(maxsize=None)
def _assemble(label: IndecLabel, bound: int) -> MatrixRep:
    dims = dim_vector(label).padded(bound + 1)
    maps = {(x, y): _arrow_matrix(label, x, y, dims) for x, y in quiver_arrows(bound)}
    return MatrixRep(bound, dims, maps, label)


@lru_cache(maxsize=None)
def _certify_brick(label: IndecLabel) -> None:
    rep = _assemble(label, max(label.m + 1, 3))
    dim = hom_solve(rep, rep, DEFAULT_FIELD).dim
    if dim != 1:
        raise OracleError(f"{label} has endomorphism dimension {dim}")
    logger.debug("certified %s as a brick", label)


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Hom(source, target) with a basis of morphisms, each a map vertex -> matrix."""

    source: MatrixRep
    target: MatrixRep
    basis: tuple[dict[int, np.ndarray], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def hom_solve(source: MatrixRep, target: MatrixRep, exact_field: ExactField = DEFAULT_FIELD) -> HomSpace:
    """
    Solve for Hom(source, target) over ``exact_field``.

    Only vertices where both representations are nonzero carry unknowns; every
    other component of a morphism vanishes.
    """
    if source.bound != target.bound:
        raise TruncationError(f"{source} and {target} use different truncations")
    dx, dy = source.dims, target.dims
    offsets: dict[int, int] = {}
    size = 0
    for v in range(source.bound + 1):
        if dx[v] and dy[v]:
            offsets[v] = size
            size += dx[v] * dy[v]
    blocks: list[np.ndarray] = []
    for x, y in quiver_arrows(source.bound):
        rows = dy[y] * dx[x]
        if rows == 0 or (x not in offsets and y not in offsets):
            continue
        block = np.zeros((rows, size), dtype=np.int64)
        if y in offsets:
            term = np.kron(source.maps[(x, y)].T, np.eye(dy[y], dtype=np.int64))
            block[:, offsets[y] : offsets[y] + dx[y] * dy[y]] += term
        if x in offsets:
            term = np.kron(np.eye(dx[x], dtype=np.int64), target.maps[(x, y)])
            block[:, offsets[x] : offsets[x] + dx[x] * dy[x]] -= term
        blocks.append(block)
    system = np.vstack(blocks) if blocks else np.zeros((0, size), dtype=np.int64)
    kernel = exact_field.nullspace(system)
    basis = []
    for j in range(kernel.shape[1]):
        morphism = {
            v: kernel[start : start + dx[v] * dy[v], j].reshape((dy[v], dx[v]), order="F")
            for v, start in offsets.items()
        }
        basis.append(morphism)
    return HomSpace(source, target, tuple(basis))


def pair_bound(*labels: IndecLabel) -> int:
    """Default truncation for a group of labels: one past their largest support."""
    return max(3, max(label.m for label in labels) + 1)


@lru_cache(maxsize=None)
def oracle_hom(source: IndecLabel, target: IndecLabel, exact_field: ExactField = DEFAULT_FIELD) -> int:
    """Oracle dimension of Hom(source, target) at the default truncation."""
    bound = pair_bound(source, target)
    return hom_solve(build_rep(source, bound), build_rep(target, bound), exact_field).dim


def euler_form(d: DimVector, e: DimVector) -> int:
    """The Euler form of Q: sum of ``d_x e_x`` minus the sum of ``d_x e_y`` over arrows ``x -> y``."""
    bound = max(d.top, e.top, 2)
    form = sum(d[v] * e[v] for v in range(bound + 1))
    return form - sum(d[x] * e[y] for x, y in quiver_arrows(bound))


def ext_solve(source: IndecLabel, target: IndecLabel, exact_field: ExactField = DEFAULT_FIELD) -> int:
    """
    Oracle dimension of Ext^1(source, target) from the hereditary identity.

    Raises:
        TruncationError: The result is negative.
    """
    ext = oracle_hom(source, target, exact_field) - euler_form(dim_vector(source), dim_vector(target))
    if ext < 0:
        raise TruncationError(f"negative Ext^1({source}, {target}) = {ext}")
    return ext


def compose_nonzero(
    source: IndecLabel,
    middle: IndecLabel,
    target: IndecLabel,
    exact_field: ExactField = DEFAULT_FIELD,
    *,
    bound: int | None = None,
) -> bool:
    """
    True iff some composite ``g o f`` with ``f: source -> middle`` and ``g: middle -> target`` is nonzero.

    Args:
        source: Domain of the first factor.
        middle: Object the composites factor through.
        target: Codomain of the second factor.
        exact_field: Field to compute in.
        bound: Common truncation; defaults to one past the largest support.

    Returns:
        Whether the composition map Hom(middle, target) x Hom(source, middle) -> Hom(source, target)
        has nonzero image.
    """
    bound = bound or pair_bound(source, middle, target)
    first = hom_solve(build_rep(source, bound), build_rep(middle, bound), exact_field)
    second = hom_solve(build_rep(middle, bound), build_rep(target, bound), exact_field)
    for f in first.basis:
        for g in second.basis:
            for v in f.keys() & g.keys():
                if not exact_field.is_zero(exact_field.matmul(g[v], f[v])):
                    return True
    return False


@dataclass(frozen=True)
class SequenceReport:
    """Outcome of certifying one almost split sequence."""

    sequence: "ARSequence"
    additive: bool
    bricks: bool
    ext: int

    @property
    def passed(self) -> bool:
        return self.additive and self.bricks and self.ext >= 1

    @property
    def detail(self) -> str:
        problems = []
        if not self.additive:
            problems.append("dimension vectors are not additive")
        if not self.bricks:
            problems.append("an end term is not a brick")
        if self.ext < 1:
            problems.append("the sequence splits")
        return "; ".join(problems) or f"ext={self.ext}"


def _end_is_brick(label: IndecLabel, bound: int, exact_field: ExactField) -> bool:
    rep = _assemble(label, bound)
    return hom_solve(rep, rep, exact_field).dim == 1


def validate_ar_sequence(
    sequence: "ARSequence", bound: int, exact_field: ExactField = DEFAULT_FIELD
) -> SequenceReport:
    """
    Check dimension additivity, brick end terms and non-splitness of ``sequence``.

    Raises:
        TruncationError: Some term does not fit in ``0..bound``.
    """
    terms: Iterable[IndecLabel] = (sequence.left, sequence.right, *sequence.middle)
    for term in terms:
        if require_valid(term).m > bound:
            raise TruncationError(f"{term} does not fit in truncation {bound}")
    ends = dim_vector(sequence.left) + dim_vector(sequence.right)
    middle = DimVector(())
    for term in sequence.middle:
        middle = middle + dim_vector(term)
    bound = max(bound, 3)
    bricks = _end_is_brick(sequence.left, bound, exact_field) and _end_is_brick(sequence.right, bound, exact_field)
    source = _assemble(sequence.right, bound)
    target = _assemble(sequence.left, bound)
    hom = hom_solve(source, target, exact_field).dim
    ext = hom - euler_form(dim_vector(sequence.right), dim_vector(sequence.left))
    if ext < 0:
        raise TruncationError(f"negative Ext^1 while checking {sequence}")
    return SequenceReport(sequence, ends == middle, bricks, ext)
