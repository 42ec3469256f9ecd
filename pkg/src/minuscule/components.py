"""Enumeration of the component-indexing set for degree-d rational curves.

A curve class is effective and disjoint from the exceptional locus exactly
when its xi-intersection vector b is componentwise nonnegative and vanishes
on the contracted indices, so the indexing set for degree d is a finite
lattice-point enumeration in b-coordinates.  The a-coordinates (the [C_i]
basis) are recovered through the unitriangular intersection matrix, which
makes the change of basis exact over the integers.

The Grassmannian front-end turns a Young diagram into a reduced coset word:
partitions are taken in the dimension convention, so a partition lam inside
the (k, n-k) box names the Schubert variety of dimension |lam| in Gr(k, n),
and the "holes" are the addable corners of the complementary codimension
diagram inside the box.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bott_samelson import BottSamelsonData, CurveClass, DivisorVector, build
from .errors import InvariantViolation
from .root_system import build_root_system
from .weyl import Word, is_minimal_rep, minuscule_parabolic


@dataclass(frozen=True)
class EffectiveClass:
    """One component index: b pairs against xi, a expands over the curves C_i."""

    b: DivisorVector
    a: CurveClass


@dataclass(frozen=True)
class ComponentSet:
    """All component indices of one degree, in ascending lexicographic b order."""

    degree: int
    classes: tuple[EffectiveClass, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "count": self.count,
            "classes": [{"b": list(c.b), "a": list(c.a)} for c in self.classes],
        }


def b_to_a(bs: BottSamelsonData, b: DivisorVector) -> CurveClass:
    """Back-substitute xi-intersections through the unitriangular matrix."""
    n = bs.n
    if len(b) != n:
        raise ValueError(f"vector has length {len(b)}, expected {n}")
    a = [0] * n
    for j in range(1, n + 1):
        a[j - 1] = b[j - 1] - sum(
            a[i - 1] * bs.c_dot_xi(i, j) for i in range(1, j)
        )
    return tuple(a)


def a_to_b(bs: BottSamelsonData, a: CurveClass) -> DivisorVector:
    """Intersection numbers of a curve class against every xi."""
    return tuple(bs.class_dot_xi(a, j) for j in range(1, bs.n + 1))


def picard_rank_open_orbit(bs: BottSamelsonData) -> int:
    """Rank of the Picard group of the smooth locus: free minus contracted."""
    return bs.n - len(bs.contracted)


def ne_set(bs: BottSamelsonData, degree: int) -> ComponentSet:
    """All effective b-vectors of the given image degree.

    Enumerates b >= 0 supported off the contracted indices with the degree
    functional equal to `degree`.  The functional's coefficient on each free
    coordinate is the image degree of the corresponding dual hat class;
    enumeration refuses to run unless every such coefficient is positive,
    which bounds the search space.
    """
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    n = bs.n
    free = [k for k in range(1, n + 1) if k not in bs.contracted]
    weights = {k: bs.curve_degree(bs.hat_curve(k)) for k in free}
    for k, w in weights.items():
        if w <= 0:
            raise ValueError(
                f"degree functional has non-positive coefficient {w} on free "
                f"coordinate {k}; enumeration would be unbounded"
            )

    solutions: list[tuple[int, ...]] = []

    def fill(pos: int, remaining: int, acc: list[int]) -> None:
        if pos == len(free):
            if remaining == 0:
                b = [0] * n
                for k, v in zip(free, acc):
                    b[k - 1] = v
                solutions.append(tuple(b))
            return
        w = weights[free[pos]]
        for v in range(remaining // w + 1):
            fill(pos + 1, remaining - v * w, acc + [v])

    fill(0, degree, [])
    solutions.sort()

    classes = []
    for b in solutions:
        a = b_to_a(bs, b)
        if bs.curve_degree(a) != degree:
            raise InvariantViolation(
                f"degree of recovered class {a} is {bs.curve_degree(a)}, expected {degree}"
            )
        classes.append(EffectiveClass(b=b, a=a))
    return ComponentSet(degree=degree, classes=tuple(classes))


def component_count(bs: BottSamelsonData, degree: int) -> int:
    """Number of irreducible components of the degree-d morphism space."""
    return ne_set(bs, degree).count


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing parts inside a (rows, cols) bounding box.

    The parts give the dimension diagram: |parts| is the dimension of the
    named Schubert variety in Gr(rows, rows + cols).
    """

    parts: tuple[int, ...]
    box: tuple[int, int]

    def __post_init__(self) -> None:
        rows, cols = self.box
        if rows < 1 or cols < 1:
            raise ValueError(f"box must have positive sides, got {self.box}")
        parts = tuple(p for p in self.parts if p != 0)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"parts must be nonnegative, got {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
        if len(parts) > rows:
            raise ValueError(
                f"partition has {len(parts)} parts, more than the {rows} box rows"
            )
        if parts and parts[0] > cols:
            raise ValueError(
                f"largest part {parts[0]} exceeds the {cols} box columns"
            )

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.box[0] - len(self.parts))


def partition_to_word(p: Partition) -> tuple[Word, int]:
    """Reduced coset-minimal word for the Schubert variety of a diagram.

    Row-reading order: rows from the bottom of the diagram up, each row's
    letters taken in decreasing order; row i of length L contributes the
    letters (rows - i + L) down to (rows - i + 1).  Returns the word and the
    weight index `rows` inside type A_{rows + cols - 1}.

    >>> partition_to_word(Partition((2, 1), (2, 2)))
    ((1, 3, 2), 2)
    >>> partition_to_word(Partition((2,), (1, 2)))
    ((2, 1), 1)
    """
    rows, cols = p.box
    lam = p.padded()
    word: list[int] = []
    for i in range(rows, 0, -1):
        start = rows - i
        word.extend(range(start + lam[i - 1], start, -1))
    rank = rows + cols - 1
    rs = build_root_system("A", rank)
    out = tuple(word)
    if len(out) != p.size or not is_minimal_rep(rs, out, minuscule_parabolic(rs, rows)):
        raise InvariantViolation(f"row-reading word {out} is not a minimal coset word")
    return out, rows


def partition_hole_count(p: Partition) -> int:
    """Holes of the diagram: addable corners of its box complement.

    The complement is the codimension diagram; each addable corner is one
    generator of the Picard group of the smooth locus.
    """
    rows, cols = p.box
    lam = p.padded()
    comp = tuple(cols - lam[rows - 1 - i] for i in range(rows))
    count = 0
    for r in range(rows):
        if comp[r] < cols and (r == 0 or comp[r - 1] > comp[r]):
            count += 1
    return count


def partition_data(p: Partition) -> BottSamelsonData:
    """Build the resolution data of the diagram's Schubert variety."""
    word, weight = partition_to_word(p)
    rows, cols = p.box
    rs = build_root_system("A", rows + cols - 1)
    return build(rs, weight, word)
