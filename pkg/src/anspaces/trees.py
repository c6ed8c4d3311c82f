"""Planar and painted trees: the face sets of associahedra K_n and multiplihedra J_n.

A face of K_n is a rooted planar tree with n leaves whose internal vertices
have arity >= 2.  A face of J_n is a painted tree: every internal vertex is
colored domain (``d``), map (``f``) or range (``r``) and every leaf-to-root
path reads ``d* f r*``.  Plain K-trees use the color ``m``.

Trees are immutable and compared through their canonical string, e.g.
``m(x,m(x,x))`` or ``r(f(x),f(d(x,x)))``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

SCHEMA_VERSION = 1
FACE_CAP = 10

LEAF_COLOR = "x"
PLAIN = "m"
DOMAIN = "d"
MAP = "f"
RANGE = "r"
PAINTED_COLORS = frozenset({DOMAIN, MAP, RANGE})
COLORS = frozenset({LEAF_COLOR, PLAIN}) | PAINTED_COLORS


class TreeError(ValueError):
    """Raised for malformed trees or out-of-range tree parameters."""


@dataclass(frozen=True, eq=False)
class Tree:
    color: str
    children: tuple[Tree, ...] = field(default=())

    @cached_property
    def code(self) -> str:
        if self.color == LEAF_COLOR:
            return LEAF_COLOR
        return f"{self.color}({','.join(c.code for c in self.children)})"

    @cached_property
    def leaf_count(self) -> int:
        if self.color == LEAF_COLOR:
            return 1
        return sum(c.leaf_count for c in self.children)

    @property
    def is_leaf(self) -> bool:
        return self.color == LEAF_COLOR

    @property
    def arity(self) -> int:
        return len(self.children)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __lt__(self, other: Tree) -> bool:
        return sort_key(self) < sort_key(other)

    def __repr__(self) -> str:
        return f"Tree({self.code!r})"

    def __str__(self) -> str:
        return self.code

    def nodes(self) -> Iterator[Tree]:
        """Internal nodes in preorder."""
        if self.is_leaf:
            return
        yield self
        for c in self.children:
            yield from c.nodes()

    def colors(self) -> set[str]:
        return {v.color for v in self.nodes()}


LEAF = Tree(LEAF_COLOR)


def node(color: str, *children: Tree) -> Tree:
    return Tree(color, tuple(children))


def canonical_form(tree: Tree) -> bytes:
    """Injective byte encoding: preorder with color tags and bracketed child lists."""
    return tree.code.encode("ascii")


def sort_key(tree: Tree) -> tuple[int, str]:
    return (dimension(tree), tree.code)


def parse(text: str | bytes) -> Tree:
    """Inverse of :func:`canonical_form`."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    pos = 0

    def read() -> Tree:
        nonlocal pos
        if pos >= len(text):
            raise TreeError(f"unexpected end of input in {text!r}")
        color = text[pos]
        if color not in COLORS:
            raise TreeError(f"bad color {color!r} at offset {pos} in {text!r}")
        pos += 1
        if color == LEAF_COLOR:
            return LEAF
        if pos >= len(text) or text[pos] != "(":
            raise TreeError(f"expected '(' at offset {pos} in {text!r}")
        pos += 1
        kids = [read()]
        while text[pos] == ",":
            pos += 1
            kids.append(read())
        if text[pos] != ")":
            raise TreeError(f"expected ')' at offset {pos} in {text!r}")
        pos += 1
        return Tree(color, tuple(kids))

    try:
        tree = read()
    except IndexError:
        raise TreeError(f"unexpected end of input in {text!r}") from None
    if pos != len(text):
        raise TreeError(f"trailing characters in {text!r}")
    return tree


def is_painted(tree: Tree) -> bool:
    return bool(tree.colors() & PAINTED_COLORS)


def dimension(tree: Tree) -> int:
    """Cell dimension: sum of (arity - 2), except (arity - 1) at map nodes."""
    return sum(v.arity - (1 if v.color == MAP else 2) for v in tree.nodes())


def validate_planar(tree: Tree) -> None:
    for v in tree.nodes():
        if v.color != PLAIN:
            raise TreeError(f"planar tree has non-plain node {v.color!r}: {tree.code}")
        if v.arity < 2:
            raise TreeError(f"planar tree has a node of arity {v.arity}: {tree.code}")


def validate_painted(tree: Tree) -> None:
    def check(t: Tree, below_map: bool) -> None:
        # below_map: a map node has already been passed on the way down
        if t.is_leaf:
            if not below_map:
                raise TreeError(f"leaf path without a map node: {tree.code}")
            return
        if t.color == PLAIN:
            raise TreeError(f"painted tree has a plain node: {tree.code}")
        if t.color == MAP:
            if below_map:
                raise TreeError(f"two map nodes on one path: {tree.code}")
            if t.arity < 1:
                raise TreeError(f"map node of arity 0: {tree.code}")
        elif t.arity < 2:
            raise TreeError(f"{t.color}-node of arity {t.arity}: {tree.code}")
        if t.color == RANGE and below_map:
            raise TreeError(f"range node below a map node: {tree.code}")
        if t.color == DOMAIN and not below_map:
            raise TreeError(f"domain node above the map cut: {tree.code}")
        for c in t.children:
            check(c, below_map or t.color == MAP)

    check(tree, False)


def validate(tree: Tree, kind: str) -> None:
    if kind == "K":
        validate_planar(tree)
    elif kind == "J":
        validate_painted(tree)
    else:
        raise TreeError(f"unknown polytope kind {kind!r}")


def recolor(tree: Tree, color: str) -> Tree:
    if tree.is_leaf:
        return tree
    return Tree(color, tuple(recolor(c, color) for c in tree.children))


def corolla(kind: str, n: int) -> Tree:
    """Top cell of K_n (``K``) or J_n (``J-map``).

    ``J-range`` gives the range corolla over n unary map nodes, the face
    delta(n; 1, ..., 1) of dimension n - 2.
    """
    if kind == "K":
        if n < 2:
            raise TreeError(f"K corolla needs n >= 2, got {n}")
        return Tree(PLAIN, (LEAF,) * n)
    if kind == "J-map":
        if n < 1:
            raise TreeError(f"J-map corolla needs n >= 1, got {n}")
        return Tree(MAP, (LEAF,) * n)
    if kind == "J-range":
        if n < 2:
            raise TreeError(f"J-range corolla needs n >= 2, got {n}")
        return Tree(RANGE, (Tree(MAP, (LEAF,)),) * n)
    raise TreeError(f"unknown corolla kind {kind!r}")


def top_dimension(kind: str, n: int) -> int:
    return n - 2 if kind == "K" else n - 1


# --- enumeration -----------------------------------------------------------


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n into ``parts`` positive integers."""
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _graftings(color: str, n: int, min_arity: int, sub) -> Iterator[Tree]:
    for a in range(min_arity, n + 1):
        for comp in compositions(n, a):
            for kids in itertools.product(*(sub(k) for k in comp)):
                yield Tree(color, kids)


@lru_cache(maxsize=None)
def _plain(n: int, color: str = PLAIN) -> tuple[Tree, ...]:
    if n == 1:
        return (LEAF,)
    return tuple(_graftings(color, n, 2, lambda k: _plain(k, color)))


@lru_cache(maxsize=None)
def _mapped(n: int) -> tuple[Tree, ...]:
    return tuple(_graftings(MAP, n, 1, lambda k: _plain(k, DOMAIN)))


@lru_cache(maxsize=None)
def _painted(n: int) -> tuple[Tree, ...]:
    return _mapped(n) + tuple(_graftings(RANGE, n, 2, _painted))


def _check_n(kind: str, n: int, cap: int | None) -> None:
    if kind not in ("K", "J"):
        raise TreeError(f"unknown polytope kind {kind!r}")
    lo = 2 if kind == "K" else 1
    if n < lo:
        raise TreeError(f"{kind}_n needs n >= {lo}, got {n}")
    if cap is not None and n > cap:
        raise TreeError(f"n={n} exceeds the enumeration cap {cap}")


def iter_faces(kind: str, n: int) -> Iterator[Tree]:
    """All faces of K_n or J_n, unordered."""
    _check_n(kind, n, None)
    yield from (_plain(n) if kind == "K" else _painted(n))


def enumerate_faces(kind: str, n: int, dim: int | None = None,
                    cap: int | None = FACE_CAP) -> list[Tree]:
    """Faces of K_n or J_n sorted by (dimension, canonical form).

    With ``dim`` given only faces of that dimension are returned; the cap
    still applies unless ``cap=None`` is passed explicitly.
    """
    _check_n(kind, n, cap)
    faces = iter_faces(kind, n)
    if dim is not None:
        faces = (t for t in faces if dimension(t) == dim)
    return sorted(faces, key=sort_key)


def vertices(kind: str, n: int) -> list[Tree]:
    """Dimension-0 faces, generated directly without the full face set."""
    _check_n(kind, n, None)
    return sorted(_binary(n, PLAIN) if kind == "K" else _painted_binary(n), key=lambda t: t.code)


@lru_cache(maxsize=None)
def _binary(n: int, color: str) -> tuple[Tree, ...]:
    if n == 1:
        return (LEAF,)
    return tuple(Tree(color, (a, b)) for k in range(1, n)
                 for a in _binary(k, color) for b in _binary(n - k, color))


@lru_cache(maxsize=None)
def _painted_binary(n: int) -> tuple[Tree, ...]:
    below = tuple(Tree(MAP, (t,)) for t in _binary(n, DOMAIN))
    return below + tuple(Tree(RANGE, (a, b)) for k in range(1, n)
                         for a in _painted_binary(k) for b in _painted_binary(n - k))


# --- face order ------------------------------------------------------------


def _splice(children: Sequence[Tree], i: int, repl: Iterable[Tree]) -> tuple[Tree, ...]:
    return tuple(children[:i]) + tuple(repl) + tuple(children[i + 1:])


def _local_contractions(t: Tree) -> Iterator[Tree]:
    kids = t.children
    for i, c in enumerate(kids):
        if c.is_leaf:
            continue
        if c.color == t.color and t.color != MAP or (t.color == MAP and c.color == DOMAIN):
            yield Tree(t.color, _splice(kids, i, c.children))
    if t.color == RANGE and all(c.color == MAP for c in kids):
        yield Tree(MAP, tuple(g for c in kids for g in c.children))


def covers(t: Tree) -> set[Tree]:
    """Faces of one dimension higher that contain ``t`` (one edge contracted)."""
    out: set[Tree] = set()
    if t.is_leaf:
        return out
    out.update(_local_contractions(t))
    for i, c in enumerate(t.children):
        for cc in covers(c):
            out.add(Tree(t.color, _splice(t.children, i, (cc,))))
    return out


def faces_above(t: Tree, dim: int) -> set[Tree]:
    """All faces of dimension ``dim`` containing ``t``."""
    layer = {t}
    d = dimension(t)
    if dim < d:
        return set()
    while d < dim:
        layer = set().union(*(covers(s) for s in layer))
        d += 1
    return layer


def facets_containing(t: Tree, kind: str) -> set[Tree]:
    return faces_above(t, top_dimension(kind, t.leaf_count) - 1)


# --- posets ----------------------------------------------------------------


@dataclass(frozen=True)
class FacePoset:
    kind: str
    n: int
    faces: tuple[Tree, ...]

    @classmethod
    def build(cls, kind: str, n: int, cap: int | None = FACE_CAP) -> FacePoset:
        return cls(kind, n, tuple(enumerate_faces(kind, n, cap=cap)))

    @property
    def top_dimension(self) -> int:
        return top_dimension(self.kind, self.n)

    @cached_property
    def f_vector(self) -> list[int]:
        counts = [0] * (self.top_dimension + 1)
        for t in self.faces:
            counts[dimension(t)] += 1
        return counts

    def of_dimension(self, dim: int) -> list[Tree]:
        return [t for t in self.faces if dimension(t) == dim]

    def facets(self) -> list[Tree]:
        return self.of_dimension(self.top_dimension - 1)

    def facets_containing(self, t: Tree) -> set[Tree]:
        return facets_containing(t, self.kind)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "n": self.n,
            "faces": [{"dim": dimension(t), "tree": t.code} for t in self.faces],
            "f_vector": self.f_vector,
        }

    @classmethod
    def from_json(cls, doc: dict) -> FacePoset:
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise TreeError(f"unsupported schema_version {doc.get('schema_version')!r}")
        kind, n = doc["kind"], int(doc["n"])
        faces = []
        for entry in doc["faces"]:
            t = parse(entry["tree"])
            validate(t, kind)
            if t.leaf_count != n or dimension(t) != entry["dim"]:
                raise TreeError(f"face {t.code} inconsistent with {kind}_{n}")
            faces.append(t)
        poset = cls(kind, n, tuple(sorted(faces, key=sort_key)))
        if len(set(poset.faces)) != len(poset.faces):
            raise TreeError("duplicate faces in poset document")
        if doc.get("f_vector") is not None and list(doc["f_vector"]) != poset.f_vector:
            raise TreeError("f_vector does not match the listed faces")
        return poset
