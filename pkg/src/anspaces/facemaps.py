"""Boundary, degeneracy and projection maps between faces of K_n and J_n.

All maps act on faces (trees); a point of a polytope is represented by the
open face containing it.  :func:`verify_relations` checks the grafting
identities and projection properties exhaustively, and
:func:`sphere_report` checks that the proper faces form a sphere-like
complex.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .trees import (
    DOMAIN, FACE_CAP, MAP, PLAIN, RANGE, Tree, TreeError,
    compositions, corolla, covers, dimension, enumerate_faces, iter_faces,
    recolor, top_dimension, validate_painted, validate_planar,
)


# --- grafting primitives ---------------------------------------------------


def graft(t: Tree, k: int, s: Tree) -> Tree:
    """Replace leaf ``k`` (1-based) of ``t`` by ``s``.  Grafting a leaf is the identity."""
    return graft_many(t, {k: s})


def graft_many(t: Tree, subs: dict[int, Tree]) -> Tree:
    counter = 0

    def walk(u: Tree) -> Tree:
        nonlocal counter
        if u.is_leaf:
            counter += 1
            return subs.get(counter, u)
        return Tree(u.color, tuple(walk(c) for c in u.children))

    return walk(t)


def _normalize(t: Tree) -> Tree | None:
    """Innermost-first, leftmost cascade; ``None`` means the subtree vanished."""
    if t.is_leaf:
        return t
    kids = tuple(c for c in (_normalize(c) for c in t.children) if c is not None)
    if not kids:
        return None
    if len(kids) == 1 and t.color != MAP:
        return kids[0]
    return Tree(t.color, kids)


def _find_redex(t: Tree, path: tuple[int, ...] = ()) -> tuple[int, ...] | None:
    """Rightmost-outermost position of an invalid node (arity 0, or arity 1 unless map)."""
    if t.is_leaf:
        return None
    if t.arity == 0 or (t.arity == 1 and t.color != MAP):
        return path
    for i in reversed(range(t.arity)):
        hit = _find_redex(t.children[i], path + (i,))
        if hit is not None:
            return hit
    return None


def _rewrite_at(t: Tree, path: tuple[int, ...]) -> Tree | None:
    if not path:
        if t.arity == 0:
            return None
        return t.children[0]
    i = path[0]
    new = _rewrite_at(t.children[i], path[1:])
    kids = t.children[:i] + ((new,) if new is not None else ()) + t.children[i + 1:]
    return Tree(t.color, kids)


def _normalize_stepwise(t: Tree) -> Tree | None:
    """Alternative strategy: single rewrites at the rightmost-outermost redex."""
    cur: Tree | None = t
    while cur is not None:
        path = _find_redex(cur)
        if path is None:
            break
        cur = _rewrite_at(cur, path)
    return cur


def _strip_leaf(t: Tree, k: int) -> Tree:
    counter = 0

    def walk(u: Tree) -> Tree | None:
        nonlocal counter
        if u.is_leaf:
            counter += 1
            return None if counter == k else u
        return Tree(u.color, tuple(c for c in (walk(c) for c in u.children) if c is not None))

    out = walk(t)
    assert out is not None
    return out


def delete_leaf(t: Tree, k: int, strategy: str = "innermost") -> Tree:
    """Delete leaf ``k`` and cascade to a valid tree.

    Works on any tree with at least two leaves; the result of deleting a
    leaf from a 2-leaf K-tree is the trivial tree.
    """
    if not 1 <= k <= t.leaf_count:
        raise TreeError(f"leaf index {k} out of range 1..{t.leaf_count}")
    if t.leaf_count < 2:
        raise TreeError("cannot delete the only leaf")
    raw = _strip_leaf(t, k)
    out = _normalize(raw) if strategy == "innermost" else _normalize_stepwise(raw)
    assert out is not None
    return out


# --- associahedron maps ----------------------------------------------------


def boundary_K(k: int, r: int, s: int, t1: Tree, t2: Tree) -> Tree:
    """The face map K_r x K_s -> K_{r+s-1}: graft ``t2`` onto leaf ``k`` of ``t1``."""
    if r < 2 or s < 2:
        raise TreeError(f"boundary_K needs r, s >= 2, got r={r}, s={s}")
    if not 1 <= k <= r:
        raise TreeError(f"leaf index {k} out of range 1..{r}")
    if t1.leaf_count != r or t2.leaf_count != s:
        raise TreeError(f"leaf counts {t1.leaf_count}, {t2.leaf_count} do not match r={r}, s={s}")
    return graft(t1, k, t2)


def degeneracy_K(k: int, t: Tree) -> Tree:
    i = t.leaf_count
    if i < 3:
        raise TreeError(f"degeneracy_K needs at least 3 leaves, got {i}")
    if not 1 <= k <= i:
        raise TreeError(f"leaf index {k} out of range 1..{i}")
    return delete_leaf(t, k)


# --- multiplihedron maps ---------------------------------------------------


def boundary_J_lower(k: int, r: int, s: int, tj: Tree, tk: Tree) -> Tree:
    """J_r x K_s -> J_{r+s-1}: graft ``tk``, painted as domain, onto leaf ``k`` of ``tj``."""
    if r < 1 or s < 2:
        raise TreeError(f"boundary_J_lower needs r >= 1, s >= 2, got r={r}, s={s}")
    if not 1 <= k <= r:
        raise TreeError(f"leaf index {k} out of range 1..{r}")
    if tj.leaf_count != r or tk.leaf_count != s:
        raise TreeError(f"leaf counts {tj.leaf_count}, {tk.leaf_count} do not match r={r}, s={s}")
    return graft(tj, k, recolor(tk, DOMAIN))


def boundary_J_upper(t: int, rs: Sequence[int], tk: Tree, tjs: Sequence[Tree]) -> Tree:
    """K_t x J_{r_1} x ... x J_{r_t} -> J_{r_1+...+r_t}."""
    if t < 2:
        raise TreeError(f"boundary_J_upper needs t >= 2, got {t}")
    if len(rs) != t or len(tjs) != t:
        raise TreeError(f"expected {t} multiplihedron factors, got {len(rs)} sizes and {len(tjs)} trees")
    if tk.leaf_count != t:
        raise TreeError(f"K-factor has {tk.leaf_count} leaves, expected {t}")
    for r, tj in zip(rs, tjs):
        if r < 1 or tj.leaf_count != r:
            raise TreeError(f"J-factor with {tj.leaf_count} leaves does not match r={r}")
    return graft_many(recolor(tk, RANGE), dict(enumerate(tjs, start=1)))


def degeneracy_J(k: int, t: Tree) -> Tree:
    i = t.leaf_count
    if i < 2:
        raise TreeError(f"degeneracy_J needs at least 2 leaves, got {i}")
    if not 1 <= k <= i:
        raise TreeError(f"leaf index {k} out of range 1..{i}")
    return delete_leaf(t, k)


def projection_pi(t: Tree) -> Tree:
    """J_i -> K_i: forget the painting and smooth the unary map nodes."""
    if t.leaf_count < 2:
        raise TreeError("projection_pi is defined for i >= 2 only")
    return _forget(t)


def _forget(t: Tree) -> Tree:
    # J_1 -> trivial tree; used where a 1-leaf factor must project uniformly
    if t.is_leaf:
        return t
    kids = tuple(_forget(c) for c in t.children)
    if len(kids) == 1:
        return kids[0]
    return Tree(PLAIN, kids)


def composite_D(tk: Tree, rhos: Sequence[Tree]) -> Tree:
    """Graft ``rhos[j]`` onto leaf j+1 of ``tk``; 1-leaf entries are identity grafts."""
    t = tk.leaf_count
    if t < 2:
        raise TreeError(f"composite_D needs t >= 2, got {t}")
    if len(rhos) != t:
        raise TreeError(f"expected {t} trees, got {len(rhos)}")
    return graft_many(tk, dict(enumerate(rhos, start=1)))


def iterated_boundary(tk: Tree, rhos: Sequence[Tree]) -> Tree:
    """The composite of partial grafts defining D, applied one factor at a time."""
    out = tk
    pos = 1
    for rho in rhos:
        out = graft(out, pos, rho)
        pos += rho.leaf_count
    return out


# --- verification ----------------------------------------------------------


@dataclass
class FaceMapReport:
    map_name: str
    n_max: int
    checks_passed: int = 0
    failures: list[dict] = field(default_factory=list)
    by_check: dict[str, int] = field(default_factory=dict)

    @property
    def instances(self) -> int:
        return self.checks_passed + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name: str, ok: bool, inputs: object, expected: object, got: object) -> None:
        self.by_check[name] = self.by_check.get(name, 0) + 1
        if ok:
            self.checks_passed += 1
        else:
            self.failures.append({"check": name, "inputs": _show(inputs),
                                  "expected": _show(expected), "got": _show(got)})

    def merge(self, other: FaceMapReport) -> None:
        self.checks_passed += other.checks_passed
        self.failures.extend(other.failures)
        for k, v in other.by_check.items():
            self.by_check[k] = self.by_check.get(k, 0) + v

    def to_json(self) -> dict:
        return {"map_name": self.map_name, "n_max": self.n_max, "instances": self.instances,
                "checks": dict(sorted(self.by_check.items())), "failures": self.failures}


def _show(x: object) -> object:
    if isinstance(x, Tree):
        return x.code
    if isinstance(x, (list, tuple)):
        return [_show(y) for y in x]
    if isinstance(x, dict):
        return {k: _show(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(_show(y) for y in x)
    return x


def _faces_upto(kind: str, n_max: int, lo: int) -> dict[int, list[Tree]]:
    return {n: enumerate_faces(kind, n) for n in range(lo, n_max + 1)}


def _valid(t: Tree, kind: str) -> bool:
    try:
        validate_planar(t) if kind == "K" else validate_painted(t)
    except TreeError:
        return False
    return True


def _check_K_grafting(rep: FaceMapReport, K: dict[int, list[Tree]], n_max: int) -> None:
    for r, s in itertools.product(K, repeat=2):
        if r + s - 1 > n_max:
            continue
        for rho, sig in itertools.product(K[r], K[s]):
            for k in range(1, r + 1):
                out = boundary_K(k, r, s, rho, sig)
                rep.check("image.boundary_K", _valid(out, "K") and out.leaf_count == r + s - 1,
                          (k, rho, sig), "valid K-face", out)
                rep.check("dim.boundary_K", dimension(out) == dimension(rho) + dimension(sig),
                          (k, rho, sig), dimension(rho) + dimension(sig), dimension(out))
    for r, s, u in itertools.product(K, repeat=3):
        if r + s + u - 2 > n_max:
            continue
        for rho, sig, ups in itertools.product(K[r], K[s], K[u]):
            for k in range(1, r + 1):
                for j in range(1, s + 1):
                    lhs = boundary_K(k, r, s + u - 1, rho, boundary_K(j, s, u, sig, ups))
                    rhs = boundary_K(k + j - 1, r + s - 1, u, boundary_K(k, r, s, rho, sig), ups)
                    rep.check("assoc.nested.K", lhs == rhs, (k, j, rho, sig, ups), lhs, rhs)
            for k, l in itertools.combinations(range(1, r + 1), 2):
                lhs = boundary_K(l + s - 1, r + s - 1, u, boundary_K(k, r, s, rho, sig), ups)
                rhs = boundary_K(k, r + u - 1, s, boundary_K(l, r, u, rho, ups), sig)
                rep.check("assoc.disjoint.K", lhs == rhs, (k, l, rho, sig, ups), lhs, rhs)


def _check_K_degeneracy(rep: FaceMapReport, K: dict[int, list[Tree]], n_max: int) -> None:
    for i in range(3, n_max + 1):
        for t in K[i]:
            for k in range(1, i + 1):
                out = degeneracy_K(k, t)
                rep.check("image.degeneracy_K", _valid(out, "K") and out.leaf_count == i - 1,
                          (k, t), "valid K-face", out)
                parent = _parent_arity(t, k)
                want = dimension(t) - (1 if parent >= 3 else 0)
                rep.check("dim.degeneracy_K", dimension(out) == want, (k, t), want, dimension(out))
                if i >= 4:
                    for j in range(k, i):
                        lhs = degeneracy_K(j, degeneracy_K(k, t))
                        rhs = degeneracy_K(k, degeneracy_K(j + 1, t))
                        rep.check("simplicial.s_j.s_k", lhs == rhs, (j, k, t), lhs, rhs)
    # deleting a leaf commutes with grafting
    for r, s in itertools.product(K, repeat=2):
        if r + s - 1 > n_max or r + s - 1 < 3:
            continue
        for rho, sig in itertools.product(K[r], K[s]):
            for k in range(1, r + 1):
                g = boundary_K(k, r, s, rho, sig)
                for m in range(1, r + s):
                    if k <= m < k + s:
                        want = graft(rho, k, delete_leaf(sig, m - k + 1))
                    else:
                        mm = m if m < k else m - s + 1
                        kk = k if mm > k else k - 1
                        want = graft(delete_leaf(rho, mm), kk, sig)
                    got = degeneracy_K(m, g)
                    rep.check("degeneracy.boundary.K", got == want, (m, k, rho, sig), want, got)


def _parent_arity(t: Tree, k: int) -> int:
    counter = 0

    def walk(u: Tree) -> int | None:
        nonlocal counter
        for c in u.children:
            if c.is_leaf:
                counter += 1
                if counter == k:
                    return u.arity
            else:
                hit = walk(c)
                if hit is not None:
                    return hit
        return None

    out = walk(t)
    assert out is not None
    return out


def _K_facet_coverage(rep: FaceMapReport, n: int) -> None:
    facets = set(enumerate_faces("K", n, dim=n - 3)) if n >= 3 else set()
    hits: dict[Tree, list] = {}
    for s in range(2, n):
        r = n + 1 - s
        for k in range(1, r + 1):
            f = boundary_K(k, r, s, corolla("K", r), corolla("K", s))
            hits.setdefault(f, []).append((k, r, s))
    _coverage_checks(rep, f"K{n}", facets, hits)


def _coverage_checks(rep: FaceMapReport, label: str, facets: set[Tree], hits: dict) -> None:
    for f in sorted(facets):
        rep.check(f"facets.{label}.covered_once", len(hits.get(f, [])) == 1, f, 1, hits.get(f, []))
    extra = sorted(set(hits) - facets)
    rep.check(f"facets.{label}.no_strays", not extra, label, [], extra)


def _J_facet_coverage(rep: FaceMapReport, n: int) -> None:
    facets = set(enumerate_faces("J", n, dim=n - 2)) if n >= 2 else set()
    hits: dict[Tree, list] = {}
    for s in range(2, n + 1):
        r = n + 1 - s
        for k in range(1, r + 1):
            f = boundary_J_lower(k, r, s, corolla("J-map", r), corolla("K", s))
            hits.setdefault(f, []).append(("lower", k, r, s))
    for t in range(2, n + 1):
        for rs in compositions(n, t):
            f = boundary_J_upper(t, rs, corolla("K", t), [corolla("J-map", r) for r in rs])
            hits.setdefault(f, []).append(("upper", t, rs))
    _coverage_checks(rep, f"J{n}", facets, hits)


def _check_J_maps(rep: FaceMapReport, J: dict[int, list[Tree]], K: dict[int, list[Tree]],
                  n_max: int) -> None:
    for r, s in itertools.product(J, K):
        if r + s - 1 > n_max:
            continue
        for rho, sig in itertools.product(J[r], K[s]):
            for k in range(1, r + 1):
                out = boundary_J_lower(k, r, s, rho, sig)
                rep.check("image.boundary_J_lower", _valid(out, "J") and out.leaf_count == r + s - 1,
                          (k, rho, sig), "valid J-face", out)
                rep.check("dim.boundary_J_lower", dimension(out) == dimension(rho) + dimension(sig),
                          (k, rho, sig), dimension(rho) + dimension(sig), dimension(out))
                if r >= 2:
                    lhs = projection_pi(out)
                    rhs = boundary_K(k, r, s, projection_pi(rho), sig)
                    rep.check("pi.property2", lhs == rhs, (k, rho, sig), rhs, lhs)
    for t in K:
        for rs in _tuples(t, n_max, J):
            n = sum(rs)
            for tau in K[t]:
                for rhos in itertools.product(*(J[r] for r in rs)):
                    out = boundary_J_upper(t, rs, tau, rhos)
                    want_dim = dimension(tau) + sum(dimension(x) for x in rhos)
                    rep.check("image.boundary_J_upper", _valid(out, "J") and out.leaf_count == n,
                              (t, rs, tau, rhos), "valid J-face", out)
                    rep.check("dim.boundary_J_upper", dimension(out) == want_dim,
                              (t, rs, tau, rhos), want_dim, dimension(out))
                    lhs = projection_pi(out)
                    rhs = composite_D(tau, [_forget(x) for x in rhos])
                    rep.check("pi.property3", lhs == rhs, (t, rs, tau, rhos), rhs, lhs)
                    alt = iterated_boundary(tau, [_forget(x) for x in rhos])
                    rep.check("D.iterated", rhs == alt, (tau, rhos), alt, rhs)


def _tuples(t: int, n_max: int, J: dict[int, list[Tree]]) -> Iterable[tuple[int, ...]]:
    for rs in itertools.product(sorted(J), repeat=t):
        if sum(rs) <= n_max:
            yield rs


def _check_J_relations(rep: FaceMapReport, J: dict[int, list[Tree]], K: dict[int, list[Tree]],
                       n_max: int) -> None:
    # delta_k composed with boundary_K, nested and disjoint
    for r, s, u in itertools.product(J, K, K):
        if r + s + u - 2 > n_max:
            continue
        for rho, sig, ups in itertools.product(J[r], K[s], K[u]):
            for k in range(1, r + 1):
                for j in range(1, s + 1):
                    lhs = boundary_J_lower(k, r, s + u - 1, rho, boundary_K(j, s, u, sig, ups))
                    rhs = boundary_J_lower(k + j - 1, r + s - 1, u,
                                           boundary_J_lower(k, r, s, rho, sig), ups)
                    rep.check("assoc.nested.J", lhs == rhs, (k, j, rho, sig, ups), lhs, rhs)
            for k, l in itertools.combinations(range(1, r + 1), 2):
                lhs = boundary_J_lower(l + s - 1, r + s - 1, u, boundary_J_lower(k, r, s, rho, sig), ups)
                rhs = boundary_J_lower(k, r + u - 1, s, boundary_J_lower(l, r, u, rho, ups), sig)
                rep.check("assoc.disjoint.J", lhs == rhs, (k, l, rho, sig, ups), lhs, rhs)
    # delta(t; ...) against delta_k inside one factor, and against boundary_K on the K-factor
    for t in K:
        for rs in _tuples(t, n_max, J):
            n = sum(rs)
            tau = corolla("K", t)
            for rhos in itertools.product(*(J[r] for r in rs)):
                up = boundary_J_upper(t, rs, tau, rhos)
                for s in K:
                    if n + s - 1 > n_max:
                        continue
                    sig = corolla("K", s)
                    offset = 0
                    for idx, (r, rho) in enumerate(zip(rs, rhos)):
                        for k in range(1, r + 1):
                            inner = boundary_J_lower(k, r, s, rho, sig)
                            new_rs = list(rs)
                            new_rs[idx] = r + s - 1
                            new_rhos = list(rhos)
                            new_rhos[idx] = inner
                            lhs = boundary_J_upper(t, new_rs, tau, new_rhos)
                            rhs = boundary_J_lower(offset + k, n, s, up, sig)
                            rep.check("upper.lower.J", lhs == rhs, (t, rs, rhos, idx, k, sig), lhs, rhs)
                        offset += r
                for tp in range(2, t):
                    u = t - tp + 1
                    for k in range(1, tp + 1):
                        lhs = boundary_J_upper(t, rs, boundary_K(k, tp, u, corolla("K", tp), corolla("K", u)), rhos)
                        inner = boundary_J_upper(u, rs[k - 1:k - 1 + u], corolla("K", u), rhos[k - 1:k - 1 + u])
                        outer_rs = list(rs[:k - 1]) + [sum(rs[k - 1:k - 1 + u])] + list(rs[k - 1 + u:])
                        outer_rhos = list(rhos[:k - 1]) + [inner] + list(rhos[k - 1 + u:])
                        rhs = boundary_J_upper(tp, outer_rs, corolla("K", tp), outer_rhos)
                        rep.check("upper.upper.J", lhs == rhs, (tp, u, k, rs, rhos), lhs, rhs)


def _check_J_degeneracy(rep: FaceMapReport, J: dict[int, list[Tree]], n_max: int) -> None:
    for i in range(2, n_max + 1):
        for t in J[i]:
            for k in range(1, i + 1):
                out = degeneracy_J(k, t)
                rep.check("image.degeneracy_J", _valid(out, "J") and out.leaf_count == i - 1,
                          (k, t), "valid J-face", out)
                alt = delete_leaf(t, k, strategy="stepwise")
                rep.check("degeneracy_J.confluent", out == alt, (k, t), out, alt)
                # pi_1 and s_k on K_2 both land on the trivial tree
                lhs = _forget(out)
                rhs = delete_leaf(_forget(t), k)
                rep.check("pi.property4", lhs == rhs, (k, t), rhs, lhs)
                if i >= 3:
                    for j in range(k, i):
                        lhs = degeneracy_J(j, degeneracy_J(k, t))
                        rhs = degeneracy_J(k, degeneracy_J(j + 1, t))
                        rep.check("simplicial.d_j.d_k", lhs == rhs, (j, k, t), lhs, rhs)


def _check_pi_property1(rep: FaceMapReport, K: dict[int, list[Tree]]) -> None:
    unit = corolla("J-map", 1)
    for i, faces in K.items():
        for rho in faces:
            a = projection_pi(boundary_J_lower(1, 1, i, unit, rho))
            b = projection_pi(boundary_J_upper(i, (1,) * i, rho, (unit,) * i))
            rep.check("pi.property1.lower", a == rho, rho, rho, a)
            rep.check("pi.property1.upper", b == rho, rho, rho, b)


def verify_relations(kind: str, n_max: int, cap: int = FACE_CAP) -> FaceMapReport:
    """Exhaustively check the face-map identities on all faces with at most ``n_max`` leaves.

    For ``K``: grafting associativity, image validity and dimension
    bookkeeping of boundary and degeneracy maps, simplicial identities,
    and facet coverage.  For ``J`` additionally the lower and upper
    boundary families, degeneracy confluence, and the projection
    properties (1)-(4).  Failures are collected, never raised.
    """
    if kind not in ("K", "J"):
        raise TreeError(f"unknown polytope kind {kind!r}")
    if n_max > cap:
        raise TreeError(f"n_max={n_max} exceeds the cap {cap}")
    rep = FaceMapReport(f"relations[{kind}]", n_max)
    K = _faces_upto("K", n_max, 2)
    if kind == "K":
        _check_K_grafting(rep, K, n_max)
        _check_K_degeneracy(rep, K, n_max)
        for n in range(3, n_max + 1):
            _K_facet_coverage(rep, n)
        return rep
    J = _faces_upto("J", n_max, 1)
    _check_J_maps(rep, J, K, n_max)
    _check_J_relations(rep, J, K, n_max)
    _check_J_degeneracy(rep, J, n_max)
    _check_pi_property1(rep, K)
    for n in range(2, n_max + 1):
        _J_facet_coverage(rep, n)
    return rep


# --- sphere proxies --------------------------------------------------------


@dataclass
class SphereReport:
    kind: str
    n: int
    f_vector: list[int]
    euler_proper: int
    euler_expected: int
    bad_ridges: list[tuple[str, int]]

    @property
    def ok(self) -> bool:
        return self.euler_proper == self.euler_expected and not self.bad_ridges

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n, "f_vector": self.f_vector,
                "euler_proper": self.euler_proper, "euler_expected": self.euler_expected,
                "bad_ridges": [list(x) for x in self.bad_ridges], "ok": self.ok}


def sphere_report(kind: str, n: int, faces: Sequence[Tree] | None = None) -> SphereReport:
    """Euler relation and codim-2 pseudomanifold check for the boundary of K_n or J_n."""
    d = top_dimension(kind, n)
    if faces is None:
        faces = list(iter_faces(kind, n))
    f = [0] * (d + 1)
    for t in faces:
        f[dimension(t)] += 1
    chi = sum((-1) ** i * f[i] for i in range(d))
    bad: list[tuple[str, int]] = []
    if d >= 2:
        for t in faces:
            if dimension(t) == d - 2:
                c = len(covers(t))
                if c != 2:
                    bad.append((t.code, c))
    return SphereReport(kind, n, f, chi, 1 - (-1) ** d, bad)


__all__ = [
    "FaceMapReport", "SphereReport", "boundary_J_lower", "boundary_J_upper", "boundary_K",
    "composite_D", "degeneracy_J", "degeneracy_K", "delete_leaf", "graft", "graft_many",
    "iterated_boundary", "projection_pi", "sphere_report", "verify_relations",
]
