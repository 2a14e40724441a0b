"""Framed representations, stability, and the Young-diagram constructions.

A framed point is a nilpotent relation-satisfying representation together
with framing maps from auxiliary multiplicity spaces; it models a module
with a marked generating set of weight vectors.  Stability (no proper
invariant graded subspace contains the framing image) is exactly the
statement that the marked vectors generate, and stable points have trivial
stabilizer under the base-change group, which makes framed equivalence
testing deterministic.

Young diagrams enter through the single-generator modules: boxes are basis
vectors, the weight of a box is its anchor plus its residue (column minus
row), raising moves one column right and lowering one row down.  The
residue profile of a diagram determines it uniquely given the anchor,
which is what the greedy peeling in ``single_generator_check`` inverts.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .euclid import EuclideanModule
from .linalg import Matrix, SparseRow, Vector, frac, rank, sparse_affine_solve
from .preproj import (
    GradedMap,
    QuiverRep,
    _combination,
    _gm_add,
    _gm_invertible,
    _HomLayout,
    apply_gv,
    check_relations,
    is_nilpotent,
)
from .quiver import Arrow, DimensionVector, Window, double_arrows

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition is allowed."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, p in enumerate(self.parts):
            if p < 1:
                raise ValueError(f"partition part {p} is not positive")
            if i > 0 and p > self.parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes (column i, row j), 1-indexed, row by row."""
        for j, row_len in enumerate(self.parts, start=1):
            for i in range(1, row_len + 1):
                yield (i, j)

    def has_box(self, i: int, j: int) -> bool:
        return 1 <= j <= len(self.parts) and 1 <= i <= self.parts[j - 1]

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""
    if n == 0:
        yield Partition(())
        return

    def gen(remaining: int, limit: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(limit, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    yield from gen(n, n, ())


def partitions_up_to(n: int) -> list[Partition]:
    """All nonempty partitions of 1..n."""
    out: list[Partition] = []
    for size in range(1, n + 1):
        out.extend(partitions(size))
    return out


def residue_dim_vector(p: Partition, a: int) -> DimensionVector:
    """Weight multiplicities of the single-generator module: the box in
    column i, row j has residue i - j and contributes at weight a + i - j."""
    counts: dict[int, int] = {}
    for i, j in p.boxes():
        w = a + i - j
        counts[w] = counts.get(w, 0) + 1
    return DimensionVector(counts)


@dataclass
class GeneratorSet:
    """A module with a marked generating set of weight vectors."""

    module: EuclideanModule
    generators: list[tuple[int, Vector]]

    def framing_dims(self) -> DimensionVector:
        counts: dict[int, int] = {}
        for k, _ in self.generators:
            counts[k] = counts.get(k, 0) + 1
        return DimensionVector(counts)

    def generates(self) -> bool:
        """Whether the marked vectors generate the module: exactly the
        stability of the associated framed point."""
        return is_stable(framed_point(self))


def young_module(p: Partition, a: int) -> GeneratorSet:
    """The single-generator module of a Young diagram, anchored at weight a.

    Basis vectors are the boxes; raising sends a box one column right,
    lowering one row down, and absent boxes go to zero.  Within one weight
    space the boxes are ordered by row.  The generator is the corner box, a
    weight vector of weight a.
    """
    if not p.parts:
        raise ValueError("empty partition has no generator")
    by_weight: dict[int, list[tuple[int, int]]] = {}
    for i, j in p.boxes():
        by_weight.setdefault(a + i - j, []).append((i, j))
    index: dict[tuple[int, int], tuple[int, int]] = {}
    for w, boxes in by_weight.items():
        boxes.sort(key=lambda box: box[1])
        for pos, box in enumerate(boxes):
            index[box] = (w, pos)
    dims = DimensionVector({w: len(boxes) for w, boxes in by_weight.items()})

    def action(di: int, dj: int) -> dict[int, Matrix]:
        step = di - dj  # weight change: +1 for raising, -1 for lowering
        out: dict[int, Matrix] = {}
        for w, boxes in by_weight.items():
            entries = {}
            for pos, (i, j) in enumerate(boxes):
                if p.has_box(i + di, j + dj):
                    _, tpos = index[(i + di, j + dj)]
                    entries[(tpos, pos)] = _ONE
            rows_data = [
                [entries.get((r, c), _ZERO) for c in range(dims[w])]
                for r in range(dims[w + step])
            ]
            out[w] = Matrix.from_rows(rows_data, cols=dims[w])
        return out

    module = EuclideanModule(dims, action(1, 0), action(0, 1))
    gen_weight, gen_pos = index[(1, 1)]
    coords = tuple(_ONE if t == gen_pos else _ZERO for t in range(dims[gen_weight]))
    return GeneratorSet(module, [(gen_weight, coords)])


class FramedPoint:
    """A nilpotent relation-satisfying representation with framing maps.

    framing[i] has shape dims(i) x framing_dims(i); zero-shape framings are
    implied.  Validity (relations and nilpotency) is enforced here so every
    framed point lives in the nilpotent variety.
    """

    __slots__ = ("rep", "framing_dims", "framing")

    def __init__(
        self,
        rep: QuiverRep,
        framing_dims: DimensionVector,
        framing: Mapping[int, Matrix] | None = None,
    ):
        violated = check_relations(rep)
        if violated:
            raise ValueError(f"relations violated at vertices {violated}")
        if not is_nilpotent(rep):
            raise ValueError("representation is not nilpotent")
        self.rep = rep
        self.framing_dims = framing_dims
        given = dict(framing) if framing else {}
        canonical: dict[int, Matrix] = {}
        keys = set(given) | set(framing_dims.support())
        for k in keys:
            expected = (rep.dims[k], framing_dims[k])
            m = given.get(k, Matrix.zero(*expected))
            if m.shape != expected:
                raise ValueError(f"framing at weight {k} has shape {m.shape}, expected {expected}")
            if m.rows > 0 and m.cols > 0:
                canonical[k] = m
        self.framing = canonical

    def framing_map(self, k: int) -> Matrix:
        return self.framing.get(k, Matrix.zero(self.rep.dims[k], self.framing_dims[k]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FramedPoint):
            return NotImplemented
        return (
            self.rep == other.rep
            and self.framing_dims == other.framing_dims
            and self.framing == other.framing
        )

    def __repr__(self) -> str:
        return f"FramedPoint(dims={self.rep.dims.to_json_dict()}, framing_dims={self.framing_dims.to_json_dict()})"

    def to_json_dict(self) -> dict:
        doc = self.rep.to_json_dict()
        doc["framing_dims"] = self.framing_dims.to_json_dict()
        doc["framing"] = {str(k): m.to_lists() for k, m in sorted(self.framing.items())}
        return doc

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FramedPoint":
        rep = QuiverRep.from_json_dict(data)
        framing_dims = DimensionVector.from_json_dict(data.get("framing_dims", {}))
        framing = {int(k): Matrix.from_lists(m) for k, m in data.get("framing", {}).items()}
        return cls(rep, framing_dims, framing)


def framed_point(gs: GeneratorSet) -> FramedPoint:
    """The framed point of a generator set: one framing column per marked
    vector, grouped by weight in listing order."""
    from .euclid import to_quiver

    rep = to_quiver(gs.module)
    framing_dims = gs.framing_dims()
    columns: dict[int, list[Vector]] = {}
    for k, coords in gs.generators:
        if len(coords) != gs.module.dims[k]:
            raise ValueError(f"generator at weight {k} has wrong length")
        columns.setdefault(k, []).append(tuple(frac(c) for c in coords))
    framing = {
        k: Matrix.from_columns(cols, rows=gs.module.dims[k]) for k, cols in columns.items()
    }
    return FramedPoint(rep, framing_dims, framing)


def invariant_closure(
    x: QuiverRep, seed: Mapping[int, Sequence[Sequence]] | Mapping[int, Sequence[Vector]]
) -> dict[int, Matrix]:
    """Smallest invariant graded subspace containing the seed vectors.

    Images under all arrow maps are added until the dimensions stabilize;
    the result is a column basis per weight (deterministic: vectors are
    appended in arrow order and never rewritten).
    """
    basis_cols: dict[int, list[Vector]] = {v: [] for v in x.window.vertices()}

    def try_add(vertex: int, vec: Vector) -> bool:
        if all(c == 0 for c in vec):
            return False
        current = basis_cols[vertex]
        stacked = Matrix.from_columns(current + [vec], rows=x.dim(vertex))
        if rank(stacked) == len(current) + 1:
            current.append(vec)
            return True
        return False

    for k, vectors in seed.items():
        k = int(k)
        if not x.window.contains(k):
            raise ValueError(f"seed weight {k} outside window")
        for raw in vectors:
            vec = tuple(frac(c) for c in raw)
            if len(vec) != x.dim(k):
                raise ValueError(f"seed vector at weight {k} has wrong length")
            try_add(k, vec)

    changed = True
    while changed:
        changed = False
        for arrow in double_arrows(x.window):
            m = x.map(arrow)
            if m.rows == 0 or m.cols == 0:
                continue
            for vec in list(basis_cols[arrow.source]):
                if try_add(arrow.target, m.apply(vec)):
                    changed = True
    return {
        v: Matrix.from_columns(cols, rows=x.dim(v)) for v, cols in basis_cols.items()
    }


def is_stable(p: FramedPoint) -> bool:
    """Whether the only invariant graded subspace containing the framing
    image is the whole space; equivalently, the framing columns generate."""
    seed = {
        k: [p.framing_map(k).col(j) for j in range(p.framing_map(k).cols)]
        for k in p.rep.window.vertices()
    }
    closure = invariant_closure(p.rep, seed)
    return all(closure[v].cols == p.rep.dim(v) for v in p.rep.window.vertices())


def framed_equivalence_space(
    p: FramedPoint, q: FramedPoint
) -> tuple[GradedMap | None, list[GradedMap]]:
    """Solutions of the combined linear system g x = x' g, g s = s'.

    Returns (particular solution with free coordinates zero, kernel basis of
    the homogeneous system g x = x' g, g s = 0).  The particular solution is
    None when the system is inconsistent.
    """
    if p.framing_dims != q.framing_dims:
        raise ValueError("framing dimension vectors differ")
    layout = _HomLayout(p.rep, q.rep)
    rows = layout.intertwiner_rows()
    rhs = [_ZERO] * len(rows)
    for k in layout.window.vertices():
        s = p.framing_map(k)
        s2 = q.framing_map(k)
        w = p.framing_dims[k]
        for r in range(layout.y.dim(k)):
            for c in range(w):
                row: SparseRow = {}
                for j in range(layout.x.dim(k)):
                    v = s[j, c]
                    if v != 0:
                        row[layout.index(k, r, j)] = v
                if row or s2[r, c] != 0:
                    rows.append(row)
                    rhs.append(s2[r, c])
    particular, kernel = sparse_affine_solve(rows, rhs, layout.size)
    particular_map = layout.unvec(particular) if particular is not None else None
    return particular_map, [layout.unvec(v) for v in kernel]


def framed_equivalent(
    p: FramedPoint,
    q: FramedPoint,
    *,
    seed: int = 0,
    trials: int = 20,
    exhaustive: bool = False,
) -> bool:
    """Whether some base change carries (x, s) to (x', s').

    For stable points the solution space of the combined system is at most a
    single point (stable points have trivial stabilizer), so the test is
    deterministic; otherwise the invertibility search mirrors the
    isomorphism test: Monte Carlo over seeded integer coefficients with an
    exhaustive grid mode.
    """
    if p.rep.dims != q.rep.dims or p.framing_dims != q.framing_dims:
        return False
    if p.rep.total_dim == 0:
        return True
    particular, kernel = framed_equivalence_space(p, q)
    if particular is None:
        return False
    if not kernel:
        return _gm_invertible(particular)
    if exhaustive:
        d = p.rep.total_dim
        n = len(kernel)
        for coeffs in itertools.product(range(d + 1), repeat=n):
            candidate = _gm_add(particular, _combination(kernel, coeffs)) if any(coeffs) else particular
            if _gm_invertible(candidate):
                return True
        return False
    rng = random.Random(seed)
    bound = 2
    for _ in range(trials):
        coeffs = [rng.randint(-bound, bound) for _ in range(len(kernel))]
        candidate = _gm_add(particular, _combination(kernel, coeffs)) if any(coeffs) else particular
        if _gm_invertible(candidate):
            return True
        bound *= 2
    return False


def apply_gv_framed(p: FramedPoint, g: GradedMap) -> FramedPoint:
    """Base-change action on framed points: (g . x, (g_i s_i))."""
    rep = apply_gv(p.rep, g)
    framing = {}
    for k in p.rep.window.vertices():
        s = p.framing_map(k)
        if s.rows > 0 and s.cols > 0:
            framing[k] = g[k] * s
    return FramedPoint(rep, p.framing_dims, framing)


def nakajima_dim(v: DimensionVector, w: DimensionVector) -> int:
    """The dimension formula sum_i (v_i w_i - v_i^2 + v_i v_{i+1}).

    The value may be negative; a negative value (or the absence of stable
    points) means the corresponding variety is empty.  This only evaluates
    the formula.
    """
    return sum(v[i] * (w[i] - v[i] + v[i + 1]) for i in v.support())


def enumerate_thin_indecomposables(window: Window) -> list[QuiverRep]:
    """One representative per orbit of indecomposable relation-satisfying
    points with every weight space one-dimensional on the window.

    The relations force the composite through each vertex to vanish, which
    cascades from the left end, so for every arrow pair exactly one of the
    two maps is nonzero; the torus normalizes it to 1, and indecomposability
    rules out both maps vanishing.  That leaves 2^width choices, enumerated
    with the forward choice first at each arrow (ascending bitmask order).
    """
    dims = DimensionVector({v: 1 for v in window.vertices()})
    width = window.width
    out = []
    for mask in range(2 ** width):
        maps = {}
        for bit, i in enumerate(window.arrow_indices()):
            if mask & (1 << bit):
                maps[Arrow(i, reverse=True).name] = Matrix.from_rows([[1]])
            else:
                maps[Arrow(i).name] = Matrix.from_rows([[1]])
        out.append(QuiverRep(window, dims, maps))
    return out


def enumerate_thin_decomposables(window: Window) -> list[QuiverRep]:
    """The remaining thin relation-satisfying choices: at least one arrow
    pair has both maps zero, which disconnects the support, so all of these
    are decomposable.  Useful as splitting fodder."""
    dims = DimensionVector({v: 1 for v in window.vertices()})
    width = window.width
    out = []
    for choice in itertools.product((0, 1, 2), repeat=width):
        if 2 not in choice:
            continue
        maps = {}
        for bit, i in enumerate(window.arrow_indices()):
            if choice[bit] == 0:
                maps[Arrow(i).name] = Matrix.from_rows([[1]])
            elif choice[bit] == 1:
                maps[Arrow(i, reverse=True).name] = Matrix.from_rows([[1]])
        out.append(QuiverRep(window, dims, maps))
    return out


def single_generator_check(v: DimensionVector, a: int) -> Partition | None:
    """Invert the residue profile: the partition with residue counts v
    anchored at a, or None when no Young diagram fits.

    Greedy peeling: the top row must cover residues 0..max, peeling it and
    shifting the remaining counts up by one turns the rest into the profile
    of the diagram without its first row.  The reconstructed row lengths
    must come out weakly decreasing.
    """
    counts = {k - a: v[k] for k in v.support()}
    rows: list[int] = []
    while counts:
        top = max(counts)
        if top < 0:
            return None
        for r in range(top + 1):
            c = counts.get(r, 0) - 1
            if c < 0:
                return None
            if c == 0:
                counts.pop(r, None)
            else:
                counts[r] = c
        rows.append(top + 1)
        counts = {r + 1: c for r, c in counts.items()}
    for i in range(len(rows) - 1):
        if rows[i] < rows[i + 1]:
            return None
    candidate = Partition(tuple(rows))
    if residue_dim_vector(candidate, a) != v:
        return None
    return candidate
