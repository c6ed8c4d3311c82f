"""Reduced powers P^a at an odd prime: Adem rewriting, Cartan formula, unstable action.

Only the Bockstein-free part of the mod-p Steenrod algebra is modelled.
A word ``(a_1, ..., a_m)`` stands for the composite P^{a_1} ... P^{a_m};
the empty word is the identity.
"""
from __future__ import annotations

import itertools
import random
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from sympy import isprime

Word = tuple[int, ...]
Monomial = tuple[tuple[str, int], ...]


class SteenrodError(ValueError):
    pass


class MissingActionError(SteenrodError, KeyError):
    """The action table lacks a value that the unstable axioms do not force."""


def _check_prime(p: int) -> None:
    if p == 2 or not isprime(p):
        raise SteenrodError(f"expected an odd prime, got {p}")


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via Lucas' theorem; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        c = 1
        for j in range(ki):
            c = c * (ni - j) // (j + 1)
        out = out * c % p
        n //= p
        k //= p
    return out


def is_admissible(word: Word, p: int) -> bool:
    return all(a >= p * b for a, b in zip(word, word[1:]))


def word_degree(word: Word, p: int) -> int:
    return sum(2 * a * (p - 1) for a in word)


def _clean(word: Iterable[int]) -> Word:
    return tuple(a for a in word if a != 0)


def adem(a: int, b: int, p: int) -> dict[Word, int]:
    """P^a P^b for a < p*b as a sum of admissible pairs (coefficients mod p)."""
    out: dict[Word, int] = {}
    for t in range(a // p + 1):
        c = binomial_mod((p - 1) * (b - t) - 1, a - p * t, p)
        if c:
            c = c if (a + t) % 2 == 0 else -c
            w = _clean((a + b - t, t))
            out[w] = (out.get(w, 0) + c) % p
    return {w: c for w, c in out.items() if c}


@dataclass(frozen=True)
class SteenrodElement:
    p: int
    terms: Mapping[Word, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_prime(self.p)
        clean: dict[Word, int] = defaultdict(int)
        for w, c in self.terms.items():
            clean[_clean(w)] += c
        object.__setattr__(self, "terms",
                           {w: c % self.p for w, c in sorted(clean.items()) if c % self.p})

    @classmethod
    def word(cls, p: int, *exps: int, coeff: int = 1) -> SteenrodElement:
        if any(a < 0 for a in exps):
            raise SteenrodError(f"negative exponent in {exps}")
        return cls(p, {tuple(exps): coeff})

    @classmethod
    def parse(cls, text: str, p: int) -> SteenrodElement:
        """Parse ``"P^a.P^b"`` words, optionally ``"c*P^a.P^b + ..."`` sums."""
        terms: dict[Word, int] = defaultdict(int)
        for chunk in re.split(r"\s*\+\s*", text.strip()):
            m = re.fullmatch(r"(?:(-?\d+)\s*\*\s*)?(.+)", chunk)
            if not m or not chunk:
                raise SteenrodError(f"cannot parse term {chunk!r}")
            coeff = int(m.group(1) or 1)
            body = m.group(2).strip()
            if body == "1":
                terms[()] += coeff
                continue
            exps = []
            for factor in body.split("."):
                fm = re.fullmatch(r"P\^?(\d+)", factor.strip())
                if not fm:
                    raise SteenrodError(f"cannot parse factor {factor!r}")
                exps.append(int(fm.group(1)))
            terms[tuple(exps)] += coeff
        return cls(p, dict(terms))

    def __add__(self, other: SteenrodElement) -> SteenrodElement:
        self._same_prime(other)
        out = defaultdict(int, self.terms)
        for w, c in other.terms.items():
            out[w] += c
        return SteenrodElement(self.p, out)

    def __mul__(self, other: SteenrodElement | int) -> SteenrodElement:
        if isinstance(other, int):
            return SteenrodElement(self.p, {w: c * other for w, c in self.terms.items()})
        self._same_prime(other)
        out: dict[Word, int] = defaultdict(int)
        for (w1, c1), (w2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            out[w1 + w2] += c1 * c2
        return SteenrodElement(self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SteenrodElement):
            return NotImplemented
        return self.p == other.p and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.p, tuple(self.terms.items())))

    def _same_prime(self, other: SteenrodElement) -> None:
        if other.p != self.p:
            raise SteenrodError(f"prime mismatch: {self.p} vs {other.p}")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {word_degree(w, self.p) for w in self.terms}

    def is_admissible(self) -> bool:
        return all(is_admissible(w, self.p) for w in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            body = ".".join(f"P^{a}" for a in w) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"prime": self.p,
                "terms": [{"word": list(w), "coeff": c} for w, c in self.terms.items()]}


def _first_inadmissible(word: Word, p: int, rightmost: bool = False) -> int | None:
    idx = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for i in idx:
        if word[i] < p * word[i + 1]:
            return i
    return None


def _rewrite_once(word: Word, i: int, p: int) -> dict[Word, int]:
    head, tail = word[:i], word[i + 2:]
    return {_clean(head + w + tail): c for w, c in adem(word[i], word[i + 1], p).items()}


def _reduce(e: SteenrodElement, rightmost: bool,
            on_step: callable | None = None) -> SteenrodElement:
    p = e.p
    done: dict[Word, int] = defaultdict(int)
    todo: dict[Word, int] = defaultdict(int, e.terms)
    while todo:
        word, coeff = todo.popitem()
        coeff %= p
        if not coeff:
            continue
        i = _first_inadmissible(word, p, rightmost)
        if i is None:
            done[word] += coeff
            continue
        repl = _rewrite_once(word, i, p)
        if on_step is not None:
            on_step(word, repl)
        for w, c in repl.items():
            todo[w] += coeff * c
    return SteenrodElement(p, done)


def adem_reduce(e: SteenrodElement) -> SteenrodElement:
    """Admissible normal form, rewriting the leftmost inadmissible pair first."""
    return _reduce(e, rightmost=False)


def p2_over_p1p1(p: int) -> int:
    """The unit c with P^2 = c * P^1 P^1, i.e. the inverse of the Adem coefficient."""
    _check_prime(p)
    coeff = adem_reduce(SteenrodElement.word(p, 1, 1)).terms.get((2,), 0)
    return pow(coeff, -1, p)


@dataclass
class ProbeReport:
    p: int
    trials: int
    disagreements: list[dict]
    degree_violations: list[dict]
    fixed_point_violations: list[dict]
    rewrite_steps: int

    @property
    def ok(self) -> bool:
        return not (self.disagreements or self.degree_violations or self.fixed_point_violations)

    def to_json(self) -> dict:
        return {"prime": self.p, "trials": self.trials, "rewrite_steps": self.rewrite_steps,
                "disagreements": self.disagreements, "degree_violations": self.degree_violations,
                "fixed_point_violations": self.fixed_point_violations, "ok": self.ok}


def confluence_probe(p: int, trials: int = 1000, max_len: int = 4, max_exp: int = 9,
                     seed: int = 0) -> ProbeReport:
    """Compare leftmost and rightmost rewriting on random words."""
    _check_prime(p)
    rng = random.Random(seed)
    disagreements: list[dict] = []
    degree_bad: list[dict] = []
    fixed_bad: list[dict] = []
    steps = 0

    def watch(word: Word, repl: dict[Word, int]) -> None:
        nonlocal steps
        steps += 1
        d = word_degree(word, p)
        for w in repl:
            if word_degree(w, p) != d:
                degree_bad.append({"word": list(word), "image": list(w)})

    for _ in range(trials):
        length = rng.randint(1, max_len)
        word = tuple(rng.randint(1, max_exp) for _ in range(length))
        e = SteenrodElement(p, {word: 1})
        left = _reduce(e, rightmost=False, on_step=watch)
        right = _reduce(e, rightmost=True, on_step=watch)
        if left != right:
            disagreements.append({"word": list(word), "leftmost": str(left), "rightmost": str(right)})
        if is_admissible(word, p) and not (left == e and right == e):
            fixed_bad.append({"word": list(word)})
    return ProbeReport(p, trials, disagreements, degree_bad, fixed_bad, steps)


# --- action on truncated polynomial algebras -------------------------------


def cartan_expand(k: int, factors: list[str]) -> list[tuple[tuple[int, ...], list[str]]]:
    """P^k(x_1 ... x_m) as the list of terms ((i_1, ..., i_m), factors) with sum i_j = k."""
    if k < 0:
        raise SteenrodError(f"negative power {k}")
    m = len(factors)
    if m == 0:
        return [((), [])] if k == 0 else []
    return [(comp, list(factors)) for comp in _weak_compositions(k, m)]


def _weak_compositions(k: int, m: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(k + m - 1), m - 1):
        bounds = (-1,) + cuts + (k + m - 1,)
        yield tuple(b - a - 1 for a, b in zip(bounds, bounds[1:]))


@dataclass(frozen=True)
class GradedClass:
    name: str
    degree: int

    def __post_init__(self) -> None:
        if self.degree <= 0 or self.degree % 2:
            raise SteenrodError(f"class {self.name} must have positive even degree, got {self.degree}")


class Polynomial(dict):
    """Sparse polynomial: sorted ((generator, exponent), ...) -> coefficient mod p."""

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for mono, c in sorted(self.items()):
            body = "*".join(g if e == 1 else f"{g}^{e}" for g, e in mono) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


def _mono(counts: Mapping[str, int]) -> Monomial:
    return tuple(sorted((g, e) for g, e in counts.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    counts: dict[str, int] = defaultdict(int)
    for g, e in a + b:
        counts[g] += e
    return _mono(counts)


@dataclass
class Ambient:
    """F_p[generators] modulo a monomial ideal and optionally all degrees above ``max_degree``."""

    p: int
    generators: dict[str, GradedClass]
    ideal: list[Monomial] = field(default_factory=list)
    max_degree: int | None = None

    def __post_init__(self) -> None:
        _check_prime(self.p)

    @classmethod
    def of(cls, p: int, degrees: Mapping[str, int], ideal: Iterable[Mapping[str, int]] = (),
           max_degree: int | None = None) -> Ambient:
        gens = {name: GradedClass(name, d) for name, d in degrees.items()}
        return cls(p, gens, [_mono(m) for m in ideal], max_degree)

    def degree(self, mono: Monomial) -> int:
        return sum(self.generators[g].degree * e for g, e in mono)

    def is_zero_monomial(self, mono: Monomial) -> bool:
        if self.max_degree is not None and self.degree(mono) > self.max_degree:
            return True
        have = dict(mono)
        return any(all(have.get(g, 0) >= e for g, e in rel) for rel in self.ideal)

    def poly(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]]) -> Polynomial:
        out: dict[Monomial, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            out[mono] += c
        return Polynomial({m: c % self.p for m, c in out.items()
                           if c % self.p and not self.is_zero_monomial(m)})

    def gen(self, name: str, power: int = 1, coeff: int = 1) -> Polynomial:
        if name not in self.generators:
            raise SteenrodError(f"unknown generator {name!r}")
        return self.poly({_mono({name: power}): coeff})

    def one(self) -> Polynomial:
        return self.poly({(): 1})

    def add(self, *polys: Mapping[Monomial, int]) -> Polynomial:
        return self.poly(itertools.chain.from_iterable(p.items() for p in polys))

    def scale(self, f: Mapping[Monomial, int], c: int) -> Polynomial:
        return self.poly((m, c * v) for m, v in f.items())

    def mul(self, f: Mapping[Monomial, int], g: Mapping[Monomial, int]) -> Polynomial:
        return self.poly((_mono_mul(a, b), ca * cb) for a, ca in f.items() for b, cb in g.items())

    def parse(self, text: str) -> Polynomial:
        """Parse ``"z4^3 + 2*z4*z8"`` style polynomials."""
        out = self.poly({})
        if text.strip() == "0":
            return out
        for chunk in re.split(r"\s*\+\s*", text.strip()):
            coeff = 1
            counts: dict[str, int] = defaultdict(int)
            for factor in chunk.split("*"):
                factor = factor.strip()
                if re.fullmatch(r"-?\d+", factor):
                    coeff *= int(factor)
                    continue
                name, _, exp = factor.partition("^")
                if name not in self.generators:
                    raise SteenrodError(f"unknown generator {name!r} in {text!r}")
                counts[name] += int(exp or 1)
            out = self.add(out, self.poly({_mono(counts): coeff}))
        return out


ActionTable = Mapping[tuple[str, int], Polynomial]


def _act_generator(k: int, name: str, amb: Ambient, table: ActionTable, unstable: bool) -> Polynomial:
    if k == 0:
        return amb.gen(name)
    deg = amb.generators[name].degree
    if unstable and 2 * k == deg:
        return amb.gen(name, amb.p)
    if unstable and 2 * k > deg:
        return amb.poly({})
    if (name, k) not in table:
        raise MissingActionError(f"no table entry for P^{k} {name}")
    return amb.poly(table[(name, k)])


def act_power(k: int, f: Mapping[Monomial, int], amb: Ambient, table: ActionTable | None = None,
              unstable: bool = True) -> Polynomial:
    """P^k f via the Cartan formula.

    Monomials are folded one generator power at a time, and each power g^e
    is split in half recursively, so repeated factors stay cheap.
    """
    table = table or {}
    memo: dict[tuple[int, str, int], Polynomial] = {}

    def on_power(i: int, g: str, e: int) -> Polynomial:
        key = (i, g, e)
        if key not in memo:
            if e == 1:
                memo[key] = _act_generator(i, g, amb, table, unstable)
            else:
                h = e // 2
                memo[key] = amb.add(*(amb.mul(on_power(j, g, h), on_power(i - j, g, e - h))
                                      for j in range(i + 1)))
        return memo[key]

    out = amb.poly({})
    for mono, c in f.items():
        # partial[i] = P^i of the factors folded so far
        partial = [amb.poly({(): c})] + [amb.poly({})] * k
        for pos, (g, e) in enumerate(mono):
            wanted = [k] if pos == len(mono) - 1 else range(k + 1)
            nxt = [amb.poly({})] * (k + 1)
            for i in wanted:
                nxt[i] = amb.add(*(amb.mul(partial[j], on_power(i - j, g, e))
                                   for j in range(i + 1) if partial[j]))
            partial = nxt
        out = amb.add(out, partial[k] if mono else amb.scale(partial[0], int(k == 0)))
    return out


def act(e: SteenrodElement | int, f: Mapping[Monomial, int], amb: Ambient,
        table: ActionTable | None = None, unstable: bool = True) -> Polynomial:
    """Apply a Steenrod element (or a single P^k) to a polynomial; rightmost power acts first."""
    if isinstance(e, int):
        e = SteenrodElement.word(amb.p, e)
    if e.p != amb.p:
        raise SteenrodError(f"prime mismatch: element at {e.p}, ambient at {amb.p}")
    out = amb.poly({})
    for word, c in e.terms.items():
        val = amb.poly(f)
        for a in reversed(word):
            val = act_power(a, val, amb, table, unstable)
            if not val:
                break
        out = amb.add(out, amb.scale(val, c))
    return out


def lemma_ambient(p: int) -> Ambient:
    """Even generators z_4, z_6, ..., z_{2p+2} truncated above degree 4p."""
    _check_prime(p)
    return Ambient.of(p, {f"z{2 * i + 2}": 2 * i + 2 for i in range(1, p + 1)}, max_degree=4 * p)
