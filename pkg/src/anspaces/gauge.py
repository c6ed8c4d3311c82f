"""A_n-types of gauge groups of principal SU(2)-bundles over S^4.

The bundle P_k has second Chern number k.  Two gauge groups are A_n-equivalent
when their capped valuations min{c_p, v_p(k)} agree at p = 2 (cap 2n) and at
every odd p (cap floor(2n/(p-1))); the converse is known when v_2(k) <= 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce

from sympy import isprime, primerange

INFINITY = math.inf


def p_adic_valuation(k: int, p: int) -> int | float:
    """Exponent of p in k; ``INFINITY`` for k = 0."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if k == 0:
        return INFINITY
    k = abs(k)
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return e


def su2_cap(p: int, n: int) -> int:
    if n < 1:
        raise ValueError(f"level n must be >= 1, got {n}")
    return 2 * n if p == 2 else (2 * n) // (p - 1)


def relevant_primes(n: int) -> list[int]:
    """2 and the odd primes with a positive cap, i.e. p <= 2n + 1."""
    return list(primerange(2, 2 * n + 2))


@dataclass(frozen=True)
class SU2Invariant:
    n: int
    entries: tuple[tuple[int, int, int], ...]  # (p, cap, min(cap, v_p(k)))

    def as_dict(self) -> dict[int, int]:
        return {p: v for p, _, v in self.entries}

    def to_json(self) -> dict:
        return {"n": self.n,
                "entries": [{"prime": p, "cap": c, "value": v} for p, c, v in self.entries]}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{p}:{v}" for p, _, v in self.entries) + "}"


def su2_invariant(k: int, n: int) -> SU2Invariant:
    entries = []
    for p in relevant_primes(n):
        cap = su2_cap(p, n)
        entries.append((p, cap, int(min(cap, p_adic_valuation(k, p)))))
    return SU2Invariant(n, tuple(entries))


class Verdict(str, enum.Enum):
    EQUIVALENT = "Equivalent"
    NOT_EQUIVALENT = "NotEquivalent"
    INCONCLUSIVE = "Inconclusive"


def su2_an_equivalent(k: int, k2: int, n: int) -> Verdict:
    """Decide A_n-equivalence of the gauge groups of P_k and P_k2 as far as the theorem allows.

    Equal invariants give ``EQUIVALENT``.  Different invariants give
    ``NOT_EQUIVALENT`` only when v_2 of either argument is at most 1 (the
    converse clause, applied symmetrically); otherwise ``INCONCLUSIVE``.
    """
    if su2_invariant(k, n) == su2_invariant(k2, n):
        return Verdict.EQUIVALENT
    if min(p_adic_valuation(k, 2), p_adic_valuation(k2, 2)) <= 1:
        return Verdict.NOT_EQUIVALENT
    return Verdict.INCONCLUSIVE


def gcd_equivalent(N: int, k: int, k2: int) -> bool:
    """gcd(N, k) == gcd(N, k2); the caller vouches that ad P_N is A_n-trivial."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return math.gcd(N, k) == math.gcd(N, k2)


@dataclass(frozen=True)
class TrivialityOrder:
    """What is known about the least N with ad P_N A_n-trivial: its odd part and 2-exponent bounds."""

    n: int
    odd_part: int
    v2_lower: int
    v2_upper: int

    def to_json(self) -> dict:
        return {"odd_part": self.odd_part, "v2_lower": self.v2_lower, "v2_upper": self.v2_upper}

    def admits(self, N: int) -> bool:
        """Whether N is compatible with the known odd part and 2-exponent bounds."""
        if N <= 0:
            return False
        v2 = int(p_adic_valuation(N, 2))
        return N >> v2 == self.odd_part and self.v2_lower <= v2 <= self.v2_upper


def an_triviality_order(n: int) -> TrivialityOrder:
    if n < 1:
        raise ValueError(f"level n must be >= 1, got {n}")
    odd = reduce(lambda acc, p: acc * p ** su2_cap(p, n), relevant_primes(n)[1:], 1)
    return TrivialityOrder(n, odd, n, 2 * n)


def is_ad_p_trivial(k: int, p: int, n: int) -> bool:
    """Whether the p-localized adjoint bundle of P_k is A_n-trivial (odd p only)."""
    if p == 2:
        raise ValueError("only bounds are known at p = 2")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return p_adic_valuation(k, p) >= su2_cap(p, n)


def count_su2_classes(n: int) -> int:
    return math.prod(su2_cap(p, n) + 1 for p in relevant_primes(n))


def class_representative(values: dict[int, int], n: int) -> int:
    """Smallest positive k realizing the capped valuations, or 0 when every value is saturated."""
    caps = {p: su2_cap(p, n) for p in relevant_primes(n)}
    if all(values[p] == caps[p] for p in caps):
        return 0
    k = 1
    for p, v in values.items():
        k *= p ** v
    return k


def census(n: int, kmax: int) -> list[dict]:
    """Invariant classes met by k in [-kmax, kmax], with counts and the smallest |k|."""
    seen: dict[tuple[int, ...], dict] = {}
    for k in sorted(range(-kmax, kmax + 1), key=lambda x: (abs(x), -x)):
        inv = su2_invariant(k, n)
        key = tuple(v for _, _, v in inv.entries)
        row = seen.setdefault(key, {"invariant": str(inv), "count": 0, "representative": k})
        row["count"] += 1
    return [seen[key] for key in sorted(seen)]
