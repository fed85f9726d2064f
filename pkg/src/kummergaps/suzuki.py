"""Two-point pure gaps on the Suzuki curve ``y^q - y = x^q0 (x^q - x)``.

Everything here comes from the one-point semigroup
``<q, q+q0, q+2q0, q+2q0+1>`` and the closed form of the Homma-Kim map
``beta``; no function field of the curve is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class SuzukiError(ValueError):
    pass


@dataclass(frozen=True)
class SuzukiProfile:
    q0: int
    q: int
    g: int
    generators: tuple[int, int, int, int]
    gap_set: tuple[int, ...]

    @property
    def period(self) -> int:
        return self.q + 2 * self.q0 + 1


@dataclass(frozen=True)
class SuzukiDecomposition:
    n: int
    r: int
    m: int
    s: int
    j: int


def _check_q0(q0: int) -> None:
    if q0 < 2 or q0 & (q0 - 1):
        raise SuzukiError(f"q0 = {q0} must be a power of 2 with q0 >= 2")


def semigroup_sieve(generators, limit: int) -> list[bool]:
    """Membership flags for ``0..limit`` in the monoid spanned by ``generators``."""
    member = [False] * (limit + 1)
    member[0] = True
    for k in range(1, limit + 1):
        member[k] = any(k >= a and member[k - a] for a in generators)
    return member


@lru_cache(maxsize=None)
def semigroup_gaps(q0: int) -> SuzukiProfile:
    _check_q0(q0)
    q = 2 * q0 * q0
    g = q0 * (q - 1)
    gens = (q, q + q0, q + 2 * q0, q + 2 * q0 + 1)
    member = semigroup_sieve(gens, 2 * g)
    gaps = tuple(k for k in range(1, 2 * g) if not member[k])
    return SuzukiProfile(q0, q, g, gens, gaps)


@lru_cache(maxsize=None)
def _gap_lookup(q0: int) -> frozenset[int]:
    return frozenset(semigroup_gaps(q0).gap_set)


def decompose(n: int, q0: int) -> SuzukiDecomposition:
    """Write a gap as ``r(q+2q0+1) + m*q0 + s`` and attach its ``j``-value."""
    prof = semigroup_gaps(q0)
    if n not in _gap_lookup(q0):
        raise SuzukiError(f"{n} is not a gap of <{', '.join(map(str, prof.generators))}>")
    r, rem = divmod(n, prof.period)
    m, s = divmod(rem, q0)
    # (m - 1) // 2 is -1 at m = 0, so the first branch then only admits s = 0
    threshold = (m - 1) // 2 + 1
    j = s + q0 if s <= threshold else s
    return SuzukiDecomposition(n, r, m, s, j)


def beta(n: int, q0: int) -> int:
    prof = semigroup_gaps(q0)
    j = decompose(n, q0).j
    return 2 * prof.g - 1 + prof.q - (prof.q - 1) * j - n


@lru_cache(maxsize=None)
def beta_table(q0: int) -> dict[int, int]:
    return {n: beta(n, q0) for n in semigroup_gaps(q0).gap_set}


def beta_is_bijection(q0: int) -> bool:
    table = beta_table(q0)
    return sorted(table.values()) == sorted(table)


def beta_is_involution(q0: int) -> bool:
    table = beta_table(q0)
    return all(table.get(b) == n for n, b in table.items())


@lru_cache(maxsize=None)
def pure_gaps_suzuki(q0: int) -> frozenset[tuple[int, int]]:
    """Pairs of gaps with ``n2 < beta(n1)`` and ``n1 < beta(n2)``."""
    table = beta_table(q0)
    gaps = semigroup_gaps(q0).gap_set
    out = set()
    for n1 in gaps:
        b1 = table[n1]
        for n2 in gaps:
            if n2 >= b1:
                break
            if n1 < table[n2]:
                out.add((n1, n2))
    return frozenset(out)


def prop41(q0: int, eps: int) -> tuple[int, int]:
    _check_q0(q0)
    if not 0 <= eps <= 2 * q0 - 3:
        raise SuzukiError(f"epsilon = {eps} outside [0, {2 * q0 - 3}]")
    prof = semigroup_gaps(q0)
    n1 = eps * prof.period + 1
    return n1, 2 * prof.g - prof.q - 1 - eps * prof.period


def prop41_family(q0: int) -> set[tuple[int, int]]:
    """Every ``prop41`` pair together with its swap."""
    pairs = set()
    for eps in range(2 * q0 - 2):
        a, b = prop41(q0, eps)
        pairs.update({(a, b), (b, a)})
    return pairs


def max_pure_gap_sum(q0: int) -> int:
    return max(a + b for a, b in pure_gaps_suzuki(q0))


def prop43_classify(q0: int) -> set[tuple[int, int]]:
    """Pure gaps whose coordinates sum to ``2g - q``."""
    prof = semigroup_gaps(q0)
    target = 2 * prof.g - prof.q
    return {p for p in pure_gaps_suzuki(q0) if sum(p) == target}


def rational_places(q0: int) -> int:
    q = 2 * q0 * q0
    return q * q + 1
