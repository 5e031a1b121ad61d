"""
The zigzag quiver of type D-infinity and the symbolic names of its indecomposables.

Vertices are the non-negative integers. Vertex 2 is the branch point with arrows
to 0, 1 and 3; every even vertex v >= 4 has arrows to v-1 and v+1. Indecomposables
come in four families, written ``A(n,m)``, ``A0(m)``, ``A1(m)`` and ``B(n,m)``.
"""

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from .exceptions import InvalidLabelError, LabelParseError


class Family(str, Enum):
    A0 = "A0"
    A1 = "A1"
    A = "A"
    B = "B"


FAMILY_RANK = {Family.A0: 0, Family.A1: 1, Family.A: 2, Family.B: 3}


class Component(str, Enum):
    """AR-quiver component of an indecomposable representation."""

    P = "P"
    I = "I"  # noqa: E741
    R = "R"


def quiver_arrows(bound: int) -> list[tuple[int, int]]:
    """
    Arrows of Q with both ends in ``0..bound``, as ``(source, target)`` pairs.

    Args:
        bound: Largest vertex kept; at least 2.

    Returns:
        Arrows sorted by source, then target.
    """
    if bound < 2:
        raise ValueError(f"quiver truncation needs vertex 2, got bound {bound}")
    arrows = [(2, 0), (2, 1)]
    if bound >= 3:
        arrows.append((2, 3))
    for v in range(4, bound + 1, 2):
        arrows.append((v, v - 1))
        if v + 1 <= bound:
            arrows.append((v, v + 1))
    return arrows


def is_sink(vertex: int) -> bool:
    """Whether every arrow at ``vertex`` points into it."""
    return vertex in (0, 1) or vertex % 2 == 1


def path_endpoints(vertex: int) -> frozenset[int]:
    """Vertices reachable from ``vertex`` by a path in Q, the vertex itself included."""
    if is_sink(vertex):
        return frozenset({vertex})
    if vertex == 2:
        return frozenset({0, 1, 2, 3})
    return frozenset({vertex - 1, vertex, vertex + 1})


@dataclass(frozen=True)
class DimVector:
    """Finitely supported dimension vector; trailing zeros are dropped."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, dims: dict[int, int]) -> "DimVector":
        size = max(dims, default=-1) + 1
        return cls(tuple(dims.get(v, 0) for v in range(size)))

    def __getitem__(self, vertex: int) -> int:
        if 0 <= vertex < len(self.entries):
            return self.entries[vertex]
        return 0

    def __add__(self, other: "DimVector") -> "DimVector":
        size = max(len(self.entries), len(other.entries))
        return DimVector(tuple(self[v] + other[v] for v in range(size)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.entries) if d)

    @property
    def top(self) -> int:
        """Largest vertex with a nonzero entry, -1 for the zero vector."""
        return len(self.entries) - 1

    def padded(self, size: int) -> tuple[int, ...]:
        """Entries for vertices ``0..size-1``."""
        return tuple(self[v] for v in range(size))


@total_ordering
@dataclass(frozen=True)
class IndecLabel:
    """
    Symbolic name of an indecomposable representation.

    ``n`` is unused (kept at 0) for the ``A0``/``A1`` families. Instances may hold
    invalid parameters; use :func:`validate` or :func:`require_valid` to check.
    """

    family: Family
    n: int
    m: int

    @property
    def params(self) -> tuple[int, ...]:
        if self.family in (Family.A0, Family.A1):
            return (self.m,)
        return (self.n, self.m)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (FAMILY_RANK[self.family], self.n, self.m)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, IndecLabel):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.family.value}({','.join(str(p) for p in self.params)})"


def a(n: int, m: int) -> IndecLabel:
    return IndecLabel(Family.A, n, m)


def a0(m: int) -> IndecLabel:
    return IndecLabel(Family.A0, 0, m)


def a1(m: int) -> IndecLabel:
    return IndecLabel(Family.A1, 0, m)


def b(n: int, m: int) -> IndecLabel:
    return IndecLabel(Family.B, n, m)


def a_k(k: int, m: int) -> IndecLabel:
    """``A0(m)`` for ``k == 0`` and ``A1(m)`` for ``k == 1``."""
    return a0(m) if k == 0 else a1(m)


def validate(label: IndecLabel) -> bool:
    """True iff the label's parameters satisfy its family's constraints."""
    if label.family is Family.A:
        return 2 <= label.n <= label.m
    if label.family is Family.B:
        return 1 <= label.n < label.m
    return label.n == 0 and label.m >= 1


def require_valid(label: IndecLabel) -> IndecLabel:
    """
    Return ``label`` unchanged.

    Raises:
        InvalidLabelError: The parameters violate the family constraints.
    """
    if not validate(label):
        raise InvalidLabelError(f"{label} violates the constraints of the {label.family.value} family")
    return label


def classify_component(label: IndecLabel) -> Component:
    """
    Component of the AR quiver of rep(Q) holding ``label``.

    Parity decides it. Labels whose parameters differ in parity are regular; otherwise an odd
    parameter means preprojective and an even one preinjective.
    """
    require_valid(label)
    if label.family in (Family.A0, Family.A1):
        return Component.P if label.m % 2 else Component.I
    if label.n % 2 != label.m % 2:
        return Component.R
    return Component.P if label.n % 2 else Component.I


def dim_vector(label: IndecLabel) -> DimVector:
    """Dimension vector of the representation named by ``label``."""
    require_valid(label)
    dims: dict[int, int] = {}
    if label.family is Family.A:
        dims = {v: 1 for v in range(label.n, label.m + 1)}
    elif label.family is Family.A0:
        dims = {v: 1 for v in range(2, label.m + 1)}
        dims[1] = 1
    elif label.family is Family.A1:
        dims = {v: 1 for v in range(2, label.m + 1)}
        dims[0] = 1
    else:
        dims = {0: 1, 1: 1}
        dims.update({v: 2 for v in range(2, label.n + 1)})
        dims.update({v: 1 for v in range(max(label.n + 1, 2), label.m + 1)})
    return DimVector.from_mapping(dims)


def projective_label(t: int) -> IndecLabel:
    """Label of the indecomposable projective at vertex ``t``."""
    if t < 0:
        raise ValueError(f"vertex must be non-negative, got {t}")
    if t == 0:
        return a1(1)
    if t == 1:
        return a0(1)
    if t == 2:
        return b(1, 3)
    if t % 2:
        return a(t, t)
    return a(t - 1, t + 1)


def injective_label(t: int) -> IndecLabel:
    """Label of the indecomposable injective at vertex ``t``."""
    if t < 0:
        raise ValueError(f"vertex must be non-negative, got {t}")
    if t == 0:
        return a1(2)
    if t == 1:
        return a0(2)
    if t == 2:
        return a(2, 2)
    if t % 2:
        return a(t - 1, t + 1)
    return a(t, t)


def projective_vertex(label: IndecLabel) -> int | None:
    """Vertex ``t`` with ``label == projective_label(t)``, or None."""
    if label.family is Family.A1:
        return 0 if label.m == 1 else None
    if label.family is Family.A0:
        return 1 if label.m == 1 else None
    if label.family is Family.B:
        return 2 if (label.n, label.m) == (1, 3) else None
    if label.n % 2 == 1 and label.n >= 3:
        if label.m == label.n:
            return label.n
        if label.m == label.n + 2:
            return label.n + 1
    return None


def injective_vertex(label: IndecLabel) -> int | None:
    """Vertex ``t`` with ``label == injective_label(t)``, or None."""
    if label.family is Family.A1:
        return 0 if label.m == 2 else None
    if label.family is Family.A0:
        return 1 if label.m == 2 else None
    if label.family is Family.B or label.n % 2:
        return None
    if label.m == label.n:
        return label.n
    if label.m == label.n + 2:
        return label.n + 1
    return None


def labels_up_to(bound: int) -> list[IndecLabel]:
    """All valid labels whose support lies in ``0..bound``, in grammar order."""
    labels = [a0(m) for m in range(1, bound + 1)]
    labels += [a1(m) for m in range(1, bound + 1)]
    labels += [a(n, m) for n in range(2, bound + 1) for m in range(n, bound + 1)]
    labels += [b(n, m) for n in range(1, bound + 1) for m in range(n + 1, bound + 1)]
    return labels


@total_ordering
@dataclass(frozen=True)
class DerivedObject:
    """An indecomposable of the bounded derived category: a label and a shift."""

    label: IndecLabel
    shift: int = 0

    @property
    def component(self) -> Component:
        return classify_component(self.label)

    def shifted(self, amount: int) -> "DerivedObject":
        return DerivedObject(self.label, self.shift + amount)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, DerivedObject):
            return NotImplemented
        return (self.label.sort_key, self.shift) < (other.label.sort_key, other.shift)

    def __str__(self) -> str:
        if self.shift == 0:
            return str(self.label)
        return f"{self.label}[{self.shift}]"


# Objects of the cluster category are derived objects in fundamental-domain
# normal form: (P, 0), (I, -1) or (R, 0).
ClusterObject = DerivedObject


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, reason: str) -> LabelParseError:
        found = repr(self.peek()) if self.peek() else "end of input"
        return LabelParseError(self.text, self.pos, f"{reason}, found {found}")

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.fail(f"expected {char!r}")
        self.pos += 1

    def integer(self, *, signed: bool = False) -> int:
        start = self.pos
        negative = signed and self.peek() == "-"
        if negative:
            self.pos += 1
        if not self.peek().isdigit():
            raise self.fail("expected a digit")
        if self.peek() == "0" and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
            raise self.fail("leading zero")
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def label(self) -> IndecLabel:
        head = self.peek()
        if head not in ("A", "B"):
            raise self.fail("expected a family name 'A', 'A0', 'A1' or 'B'")
        self.pos += 1
        family = Family(head)
        if head == "A" and self.peek() in ("0", "1"):
            family = Family.A0 if self.peek() == "0" else Family.A1
            self.pos += 1
        self.expect("(")
        if family in (Family.A0, Family.A1):
            label = IndecLabel(family, 0, self.integer())
        else:
            n = self.integer()
            self.expect(",")
            label = IndecLabel(family, n, self.integer())
        self.expect(")")
        return label

    def shift(self, *, any_shift: bool) -> int:
        if self.peek() != "[":
            return 0
        self.pos += 1
        if any_shift:
            value = self.integer(signed=True)
        else:
            self.expect("-")
            self.expect("1")
            value = -1
        self.expect("]")
        return value

    def end(self) -> None:
        if self.pos != len(self.text):
            raise self.fail("expected end of input")


def parse_label(text: str) -> IndecLabel:
    """
    Parse the ASCII form of a label, e.g. ``A(3,5)`` or ``A0(4)``.

    Raises:
        LabelParseError: The text deviates from the grammar.
        InvalidLabelError: The parameters violate the family constraints.
    """
    scanner = _Scanner(text)
    label = scanner.label()
    scanner.end()
    return require_valid(label)


def parse_object(text: str) -> DerivedObject:
    """
    Parse an object of the fundamental domain: a label, optionally followed by ``[-1]``.

    Raises:
        LabelParseError: The text deviates from the grammar, including any other shift.
        InvalidLabelError: The parameters violate the family constraints.
    """
    scanner = _Scanner(text)
    label = scanner.label()
    shift = scanner.shift(any_shift=False)
    scanner.end()
    return DerivedObject(require_valid(label), shift)


def parse_derived(text: str) -> DerivedObject:
    """Parse a label followed by an optional signed shift, e.g. ``B(1,2)[1]``, for the derived category."""
    scanner = _Scanner(text)
    label = scanner.label()
    shift = scanner.shift(any_shift=True)
    scanner.end()
    return DerivedObject(require_valid(label), shift)
