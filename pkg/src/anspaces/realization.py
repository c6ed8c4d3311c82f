"""Integer-coordinate (Loday) realization of the vertices of K_n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .facemaps import boundary_K
from .trees import Tree, TreeError, corolla, vertices


def loday_coordinates(t: Tree) -> tuple[int, ...]:
    """Coordinate i is l_i * r_i for the i-th internal node in inorder.

    l_i and r_i are the leaf counts of the left and right subtrees.
    """
    if t.leaf_count < 2:
        raise TreeError("loday_coordinates needs n >= 2")
    out: list[int] = []

    def walk(u: Tree) -> None:
        if u.is_leaf:
            return
        if u.arity != 2:
            raise TreeError(f"not a binary tree: {t.code}")
        left, right = u.children
        walk(left)
        out.append(left.leaf_count * right.leaf_count)
        walk(right)

    walk(t)
    return tuple(out)


@dataclass(frozen=True)
class VertexEmbedding:
    n: int
    points: dict[str, tuple[int, ...]]

    @classmethod
    def of(cls, n: int) -> VertexEmbedding:
        return cls(n, {t.code: loday_coordinates(t) for t in vertices("K", n)})

    def is_valid(self) -> bool:
        target = self.n * (self.n - 1) // 2
        pts = list(self.points.values())
        return (all(len(p) == self.n - 1 and sum(p) == target and min(p) > 0 for p in pts)
                and len(set(pts)) == len(pts))

    def rows(self) -> list[tuple[str, tuple[int, ...]]]:
        return sorted(self.points.items())


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine span, by exact Gaussian elimination over Q."""
    if not points:
        return -1
    base = points[0]
    rows = [[Fraction(a - b) for a, b in zip(p, base)] for p in points[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def affine_dimension(emb: VertexEmbedding) -> int:
    return affine_rank([p for _, p in emb.rows()])


def leaf_intervals(t: Tree) -> set[tuple[int, int]]:
    """Leaf ranges [a, b] spanned by the internal nodes of ``t``."""
    out: set[tuple[int, int]] = set()

    def walk(u: Tree, start: int) -> int:
        if u.is_leaf:
            return start + 1
        pos = start
        for c in u.children:
            pos = walk(c, pos)
        out.add((start, pos - 1))
        return pos

    walk(t, 1)
    return out


def refines(a: Tree, b: Tree) -> bool:
    """True if face ``a`` lies in the closure of face ``b`` (planar trees)."""
    return leaf_intervals(b) <= leaf_intervals(a)


@dataclass
class FacetSupportReport:
    n: int
    facets_checked: int
    failures: list[dict]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"n": self.n, "facets_checked": self.facets_checked, "failures": self.failures}


def facet_support_check(n: int) -> FacetSupportReport:
    """Each facet boundary_K(k, r, s) is cut out by sum(x_k..x_{k+s-2}) = s(s-1)/2.

    Vertices in the facet must attain equality, all others strict ``>``.
    """
    if not 3 <= n <= 8:
        raise TreeError(f"facet_support_check supports 3 <= n <= 8, got {n}")
    emb = VertexEmbedding.of(n)
    verts = vertices("K", n)
    failures: list[dict] = []
    checked = 0
    for s in range(2, n):
        r = n + 1 - s
        for k in range(1, r + 1):
            facet = boundary_K(k, r, s, corolla("K", r), corolla("K", s))
            bound = s * (s - 1) // 2
            checked += 1
            for v in verts:
                total = sum(emb.points[v.code][k - 1:k + s - 2])
                inside = refines(v, facet)
                good = total == bound if inside else total > bound
                if not good:
                    failures.append({"facet": facet.code, "vertex": v.code,
                                     "sum": total, "bound": bound, "in_facet": inside})
    return FacetSupportReport(n, checked, failures)
