"""Finite-dimensional modules over the planar Euclidean algebra.

A module is a weight-graded rational vector space on which the two
commuting translation generators act as degree +1 and degree -1 maps;
the rotation generator acts on the weight-k space as multiplication by
k, so its action is carried by the grading itself and never stored.

The dictionary with preprojective-algebra representations identifies the
degree +1 action restricted to weight i with the forward arrow map at i,
and the degree -1 action restricted to weight i+1 with the reversed
arrow map; the commutator condition becomes exactly the
Gelfand-Ponomarev relation.  Both directions of the dictionary are
bit-exact inverses on valid objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import Matrix, SparseRow, frac, sparse_kernel
from .preproj import QuiverRep, check_relations
from .quiver import Arrow, DimensionVector, window_of_support

_ZERO = Fraction(0)

# Letters of words in the modified enveloping algebra.  "Proj:k" is the
# idempotent projecting onto the weight-k space; words apply right-to-left.
LETTER_PLUS = "P+"
LETTER_MINUS = "P-"
LETTER_L = "L"


def proj(k: int) -> str:
    return f"Proj:{k}"


# A graded vector: weight -> coordinate column; missing weights mean zero.
GradedVector = dict[int, tuple[Fraction, ...]]


class EuclideanModule:
    """Weight-graded module with raising (p_plus) and lowering (p_minus) maps.

    p_plus[k] maps the weight-k space to the weight-(k+1) space, p_minus[k]
    maps it to the weight-(k-1) space.  Zero maps are implied and dropped,
    so equality of modules is bit-exact equality of the stored data.
    """

    __slots__ = ("dims", "p_plus", "p_minus")

    def __init__(
        self,
        dims: DimensionVector,
        p_plus: Mapping[int, Matrix] | None = None,
        p_minus: Mapping[int, Matrix] | None = None,
    ):
        self.dims = dims
        self.p_plus = self._canonical(p_plus or {})
        self.p_minus = self._canonical(p_minus or {})

    @staticmethod
    def _canonical(maps: Mapping[int, Matrix]) -> dict[int, Matrix]:
        return {int(k): m for k, m in maps.items() if not m.is_zero()}

    def plus(self, k: int) -> Matrix:
        return self.p_plus.get(k, Matrix.zero(self.dims[k + 1], self.dims[k]))

    def minus(self, k: int) -> Matrix:
        return self.p_minus.get(k, Matrix.zero(self.dims[k - 1], self.dims[k]))

    @property
    def total_dim(self) -> int:
        return self.dims.total()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EuclideanModule):
            return NotImplemented
        return self.dims == other.dims and self.p_plus == other.p_plus and self.p_minus == other.p_minus

    def __repr__(self) -> str:
        return f"EuclideanModule(dims={self.dims.to_json_dict()})"

    def to_json_dict(self) -> dict:
        return {
            "dims": self.dims.to_json_dict(),
            "p_plus": {str(k): m.to_lists() for k, m in sorted(self.p_plus.items())},
            "p_minus": {str(k): m.to_lists() for k, m in sorted(self.p_minus.items())},
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "EuclideanModule":
        try:
            dims = DimensionVector.from_json_dict(data.get("dims", {}))
            p_plus = {int(k): Matrix.from_lists(m) for k, m in data.get("p_plus", {}).items()}
            p_minus = {int(k): Matrix.from_lists(m) for k, m in data.get("p_minus", {}).items()}
        except (TypeError, AttributeError) as exc:
            raise ValueError(f"malformed module document: {exc}") from exc
        return cls(dims, p_plus, p_minus)


def validate(m: EuclideanModule) -> list[str]:
    """Violations of the module axioms; empty iff m is a valid module.

    Checks map shapes against the weight-space dimensions and the commutator
    condition: lowering after raising equals raising after lowering on every
    weight space of the support closure.  Problems are reported, not thrown.
    """
    violations = []
    for k, mat in sorted(m.p_plus.items()):
        expected = (m.dims[k + 1], m.dims[k])
        if mat.shape != expected:
            violations.append(
                f"p_plus at weight {k} has shape {mat.shape}, expected {expected}"
            )
    for k, mat in sorted(m.p_minus.items()):
        expected = (m.dims[k - 1], m.dims[k])
        if mat.shape != expected:
            violations.append(
                f"p_minus at weight {k} has shape {mat.shape}, expected {expected}"
            )
    if violations:
        return violations
    support = m.dims.support()
    if not support:
        return []
    for k in range(support[0] - 1, support[-1] + 2):
        down_up = m.minus(k + 1) * m.plus(k)
        up_down = m.plus(k - 1) * m.minus(k)
        if down_up != up_down:
            violations.append(f"commutator violation at weight {k}")
    return violations


def to_quiver(m: EuclideanModule) -> QuiverRep:
    """The representation of the double quiver on the support window given by
    restricting the raising and lowering actions to the weight spaces.

    The commutator condition turns into the Gelfand-Ponomarev relation, so the
    result always satisfies the relations.
    """
    problems = validate(m)
    if problems:
        raise ValueError("invalid module: " + "; ".join(problems))
    if m.dims.is_zero():
        raise ValueError("zero module has no support window")
    window = window_of_support(m.dims)
    maps = {}
    for i in window.arrow_indices():
        maps[Arrow(i).name] = m.plus(i)
        maps[Arrow(i, reverse=True).name] = m.minus(i + 1)
    return QuiverRep(window, m.dims, maps)


def from_quiver(x: QuiverRep) -> EuclideanModule:
    """Inverse of to_quiver on objects: forward arrows become the raising
    action, reversed arrows the lowering action."""
    violated = check_relations(x)
    if violated:
        raise ValueError(f"relations violated at vertices {violated}")
    p_plus = {}
    p_minus = {}
    for i in x.window.arrow_indices():
        p_plus[i] = x.map(Arrow(i))
        p_minus[i + 1] = x.map(Arrow(i, reverse=True))
    return EuclideanModule(x.dims, p_plus, p_minus)


def char_shift(m: EuclideanModule, n: int) -> EuclideanModule:
    """Tensor with the one-dimensional character of weight n: every weight k
    becomes k + n, the raising and lowering matrices are re-indexed unchanged."""
    return EuclideanModule(
        m.dims.shift(n),
        {k + n: mat for k, mat in m.p_plus.items()},
        {k + n: mat for k, mat in m.p_minus.items()},
    )


def _canonical_vector(v: GradedVector) -> GradedVector:
    return {k: coords for k, coords in v.items() if any(c != 0 for c in coords)}


def graded_vector(entries: Mapping[int, Sequence] ) -> GradedVector:
    return _canonical_vector({int(k): tuple(frac(c) for c in coords) for k, coords in entries.items()})


def apply_word(m: EuclideanModule, word: Sequence[str], v: GradedVector) -> GradedVector:
    """Apply a word in the modified enveloping algebra to a graded vector.

    Letters apply right-to-left: "P+" and "P-" act through the raising and
    lowering matrices, "L" multiplies the weight-k component by k, and
    "Proj:k" keeps only the weight-k component.
    """
    for k, coords in v.items():
        if len(coords) != m.dims[k]:
            raise ValueError(
                f"component at weight {k} has length {len(coords)}, expected {m.dims[k]}"
            )
    current = _canonical_vector({k: tuple(coords) for k, coords in v.items()})
    for letter in reversed(list(word)):
        nxt: dict[int, list[Fraction]] = {}
        if letter == LETTER_PLUS:
            for k, coords in current.items():
                image = m.plus(k).apply(coords)
                if any(c != 0 for c in image):
                    _vec_add(nxt, k + 1, image)
        elif letter == LETTER_MINUS:
            for k, coords in current.items():
                image = m.minus(k).apply(coords)
                if any(c != 0 for c in image):
                    _vec_add(nxt, k - 1, image)
        elif letter == LETTER_L:
            for k, coords in current.items():
                _vec_add(nxt, k, tuple(frac(k) * c for c in coords))
        elif letter.startswith("Proj:"):
            k = int(letter[5:])
            if k in current:
                _vec_add(nxt, k, current[k])
        else:
            raise ValueError(f"unknown letter {letter!r}")
        current = _canonical_vector({k: tuple(c) for k, c in nxt.items()})
    return current


def _vec_add(acc: dict[int, list[Fraction]], k: int, coords: Sequence[Fraction]) -> None:
    if k in acc:
        acc[k] = [a + b for a, b in zip(acc[k], coords)]
    else:
        acc[k] = list(coords)


def basis_vectors(m: EuclideanModule) -> Iterator[tuple[int, int, GradedVector]]:
    """All graded unit vectors (weight, coordinate index, vector) of a module."""
    for k, n in m.dims.items():
        for j in range(n):
            coords = tuple(Fraction(1) if i == j else _ZERO for i in range(n))
            yield k, j, {k: coords}


@dataclass(frozen=True)
class WeightRunReport:
    """Maximal consecutive runs of a finite weight set, with the
    finite-classification guard: the finiteness guarantee applies exactly
    when no run has five or more consecutive integers."""

    runs: tuple[tuple[int, int], ...]
    max_run_length: int
    finite_type_guarantee: bool


def weight_runs(weights: Iterable[int]) -> WeightRunReport:
    """Partition a finite set of integers into maximal runs [start, end]."""
    sorted_weights = sorted(set(int(w) for w in weights))
    runs = []
    start = prev = None
    for w in sorted_weights:
        if start is None:
            start = prev = w
        elif w == prev + 1:
            prev = w
        else:
            runs.append((start, prev))
            start = prev = w
    if start is not None:
        runs.append((start, prev))
    max_len = max((e - s + 1 for s, e in runs), default=0)
    return WeightRunReport(tuple(runs), max_len, max_len <= 4)


def hom_dimension(m: EuclideanModule, m2: EuclideanModule) -> int:
    """Dimension of the space of grading-preserving maps commuting with the
    raising and lowering actions.

    This is assembled directly from the module data, independently of the
    quiver-side intertwiner computation, so the two sides of the dictionary
    can be compared against each other.
    """
    weights = sorted(set(m.dims.support()) | set(m2.dims.support()))
    offsets = {}
    pos = 0
    for k in weights:
        offsets[k] = pos
        pos += m2.dims[k] * m.dims[k]
    rows: list[SparseRow] = []

    def block_index(k: int, r: int, c: int) -> int:
        return offsets[k] + r * m.dims[k] + c

    for k in weights:
        # g_{k+1} p_plus^k = p_plus'^k g_k
        a, b = m.plus(k), m2.plus(k)
        for r in range(m2.dims[k + 1]):
            for c in range(m.dims[k]):
                row: SparseRow = {}
                for j in range(m.dims[k + 1]):
                    if a[j, c] != 0 and (k + 1) in offsets:
                        idx = block_index(k + 1, r, j)
                        row[idx] = row.get(idx, _ZERO) + a[j, c]
                for j in range(m2.dims[k]):
                    if b[r, j] != 0:
                        idx = block_index(k, j, c)
                        row[idx] = row.get(idx, _ZERO) - b[r, j]
                row = {i: val for i, val in row.items() if val != 0}
                if row:
                    rows.append(row)
        # g_{k-1} p_minus^k = p_minus'^k g_k
        a, b = m.minus(k), m2.minus(k)
        for r in range(m2.dims[k - 1]):
            for c in range(m.dims[k]):
                row = {}
                for j in range(m.dims[k - 1]):
                    if a[j, c] != 0 and (k - 1) in offsets:
                        idx = block_index(k - 1, r, j)
                        row[idx] = row.get(idx, _ZERO) + a[j, c]
                for j in range(m2.dims[k]):
                    if b[r, j] != 0:
                        idx = block_index(k, j, c)
                        row[idx] = row.get(idx, _ZERO) - b[r, j]
                row = {i: val for i, val in row.items() if val != 0}
                if row:
                    rows.append(row)
    return len(sparse_kernel(rows, pos))
