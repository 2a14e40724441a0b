"""Type-A quivers on integer vertex labels, their doubles, and the
Gelfand-Ponomarev relations.

The infinite linear quiver (vertices Z, arrows i -> i+1) is never
materialized: every finite-dimensional representation is supported on
finitely many vertices, so all operations take a finite ``Window`` [a, b]
whose vertices carry absolute integer labels.  Windows of the same ambient
quiver therefore compose consistently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class DimensionVector:
    """Finitely supported map from integer weights to multiplicities >= 0.

    Lookups outside the support return 0.  Values are canonical: zero entries
    are dropped, so equality and hashing see only the support.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        d: dict[int, int] = {}
        for k, n in items:
            k = int(k)
            n = int(n)
            if n < 0:
                raise ValueError(f"negative multiplicity {n} at weight {k}")
            if n > 0:
                d[k] = d.get(k, 0) + n
        self._entries = d

    @classmethod
    def unit(cls, k: int, n: int = 1) -> "DimensionVector":
        """The vector n * e^k."""
        return cls({k: n})

    def __getitem__(self, k: int) -> int:
        return self._entries.get(k, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._entries))

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._entries.items()))

    def total(self) -> int:
        return sum(self._entries.values())

    def is_zero(self) -> bool:
        return not self._entries

    def shift(self, n: int) -> "DimensionVector":
        """Weight k becomes k + n."""
        return DimensionVector({k + n: v for k, v in self._entries.items()})

    def __add__(self, other: "DimensionVector") -> "DimensionVector":
        d = dict(self._entries)
        for k, v in other._entries.items():
            d[k] = d.get(k, 0) + v
        return DimensionVector(d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DimensionVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._entries.items())))

    def __repr__(self) -> str:
        if not self._entries:
            return "DimensionVector()"
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._entries.items()))
        return f"DimensionVector({{{body}}})"

    def to_json_dict(self) -> dict[str, int]:
        return {str(k): v for k, v in sorted(self._entries.items())}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, int]) -> "DimensionVector":
        return cls({int(k): int(v) for k, v in data.items()})


@dataclass(frozen=True)
class Window:
    """Vertex interval [a, b] of the linear quiver; arrows h_i for a <= i < b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise ValueError(f"empty window [{self.a}, {self.b}]")

    @property
    def width(self) -> int:
        return self.b - self.a

    def vertices(self) -> range:
        return range(self.a, self.b + 1)

    def arrow_indices(self) -> range:
        return range(self.a, self.b)

    def contains(self, k: int) -> bool:
        return self.a <= k <= self.b

    def union(self, other: "Window") -> "Window":
        return Window(min(self.a, other.a), max(self.b, other.b))


@dataclass(frozen=True)
class Arrow:
    """Arrow of the double quiver: h_i (i -> i+1) or its reverse hbar_i (i+1 -> i)."""

    index: int
    reverse: bool = False

    @property
    def source(self) -> int:
        return self.index + 1 if self.reverse else self.index

    @property
    def target(self) -> int:
        return self.index if self.reverse else self.index + 1

    @property
    def name(self) -> str:
        return f"hbar{self.index}" if self.reverse else f"h{self.index}"

    def __repr__(self) -> str:
        return self.name


def arrow_from_name(name: str) -> Arrow:
    """Inverse of Arrow.name, e.g. "h0" or "hbar-3"."""
    if name.startswith("hbar"):
        return Arrow(int(name[4:]), reverse=True)
    if name.startswith("h"):
        return Arrow(int(name[1:]))
    raise ValueError(f"not an arrow name: {name!r}")


def window_of_support(v: DimensionVector) -> Window:
    """Smallest window containing the support of a nonzero dimension vector.

    Interior weights of multiplicity zero are included: the support {2, 5}
    yields [2, 5].
    """
    support = v.support()
    if not support:
        raise ValueError("zero dimension vector has no support window")
    return Window(support[0], support[-1])


def double_arrows(w: Window) -> list[Arrow]:
    """Arrows of the double quiver on w, in the serialization order:
    forward arrows ascending by index, then reversed arrows ascending."""
    forward = [Arrow(i) for i in w.arrow_indices()]
    backward = [Arrow(i, reverse=True) for i in w.arrow_indices()]
    return forward + backward


@dataclass(frozen=True)
class RelationTerm:
    """The Gelfand-Ponomarev relation at a vertex, as signed length-2 paths.

    Each pair (first, second) is applied first arrow first.  For an interior
    vertex i the positive part is (h_i, hbar_i) and the negative part is
    (hbar_{i-1}, h_{i-1}); the parts are trimmed at the window ends.
    """

    vertex: int
    positive: tuple[tuple[Arrow, Arrow], ...]
    negative: tuple[tuple[Arrow, Arrow], ...]


def gp_relation(w: Window, i: int) -> RelationTerm:
    """Relation r_i on the window: paths out of i via h minus paths into i via h."""
    if not w.contains(i):
        raise ValueError(f"vertex {i} outside window [{w.a}, {w.b}]")
    positive: tuple[tuple[Arrow, Arrow], ...] = ()
    negative: tuple[tuple[Arrow, Arrow], ...] = ()
    if i < w.b:
        positive = (((Arrow(i), Arrow(i, reverse=True))),)
    if i > w.a:
        negative = (((Arrow(i - 1, reverse=True), Arrow(i - 1))),)
    return RelationTerm(i, positive, negative)
