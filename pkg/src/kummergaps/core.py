"""Riemann-Roch dimensions and c-gaps at totally ramified places of Kummer covers.

A Kummer cover here is ``y^m = f(x)`` over an algebraically closed constant
field, described only by the valuations of ``f`` at its zeros and poles.  Every
computation reduces, through the decomposition of ``L(D)`` into ``m`` genus-zero
pieces indexed by ``y^t``, to floor sums over those valuations.

Places are never given coordinates.  A place handle is a pair
``(class_index, occurrence)`` pointing at one of the ``count`` places of a
ramification class.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from sympy import isprime

Place = tuple[int, int]


class CurveError(ValueError):
    """Raised for curve data that violates the Kummer hypotheses."""


class QueryError(ValueError):
    """Raised for malformed place selections, tuples or divisors."""


def floor_div(a: int, b: int) -> int:
    """Floor of ``a / b`` rounding toward negative infinity; ``b`` must be positive."""
    if b <= 0:
        raise ValueError(f"floor_div needs a positive divisor, got {b}")
    return a // b


@dataclass(frozen=True)
class RamificationClass:
    """Zeros (``lam > 0``) or poles (``lam < 0``) of ``f`` sharing one valuation."""

    label: str
    lam: int
    count: int = 1


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...] = ()


@dataclass(frozen=True)
class KummerCurve:
    m: int
    classes: tuple[RamificationClass, ...]
    char_p: int

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))

    @property
    def r(self) -> int:
        """Number of zeros and poles of ``f`` on the projective line."""
        return sum(c.count for c in self.classes)

    def class_gcd(self, index: int) -> int:
        return gcd(self.m, abs(self.classes[index].lam))

    def is_totally_ramified(self, index: int) -> bool:
        return self.class_gcd(index) == 1

    @property
    def totally_ramified_classes(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.classes)) if self.is_totally_ramified(i))

    @property
    def s(self) -> int:
        """Number of totally ramified places."""
        return sum(self.classes[i].count for i in self.totally_ramified_classes)

    def places_of(self, index: int) -> list[Place]:
        return [(index, j) for j in range(self.classes[index].count)]

    def lam_at(self, place: Place) -> int:
        return self.classes[place[0]].lam

    @cached_property
    def base_degrees(self) -> tuple[int, ...]:
        # deg of (y^t) restricted to the rational function field, t = 0..m-1
        m = self.m
        return tuple(
            sum(c.count * ((t * c.lam) // m) for c in self.classes) for t in range(m)
        )


def validate_curve(curve: KummerCurve) -> ValidationReport:
    problems = []
    if curve.m < 2:
        problems.append(f"m = {curve.m} < 2")
    if not isprime(curve.char_p):
        problems.append(f"characteristic {curve.char_p} is not prime")
    elif curve.m % curve.char_p == 0:
        problems.append(f"p | m (p = {curve.char_p}, m = {curve.m})")
    for c in curve.classes:
        if c.lam == 0:
            problems.append(f"class {c.label!r} has lambda = 0")
        if c.count < 1:
            problems.append(f"class {c.label!r} has count {c.count} < 1")
    degree = sum(c.lam * c.count for c in curve.classes)
    if degree != 0:
        problems.append(f"degree-sum = {degree}, expected 0")
    return ValidationReport(not problems, tuple(problems))


def genus(curve: KummerCurve) -> int:
    """Genus by Riemann-Hurwitz for the cover of the projective line."""
    m = curve.m
    two_g_minus_2 = -2 * m + sum(
        c.count * (m - gcd(m, abs(c.lam))) for c in curve.classes
    )
    if two_g_minus_2 % 2:
        raise CurveError(f"2g - 2 = {two_g_minus_2} is odd; ramification data is corrupt")
    g = two_g_minus_2 // 2 + 1
    if g < 0:
        raise CurveError(f"negative genus {g}")
    return g


def _check_place(curve: KummerCurve, place: Place) -> None:
    i, j = place
    if not 0 <= i < len(curve.classes):
        raise QueryError(f"no ramification class {i}")
    if not 0 <= j < curve.classes[i].count:
        raise QueryError(f"class {i} has no occurrence {j}")
    if not curve.is_totally_ramified(i):
        raise QueryError(
            f"place {place} lies in class {curve.classes[i].label!r}, which is not totally ramified"
        )


@dataclass(frozen=True)
class CGapQuery:
    places: tuple[Place, ...]
    n: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(tuple(p) for p in self.places))
        object.__setattr__(self, "n", tuple(self.n))
        object.__setattr__(self, "c", tuple(self.c))

    def check(self, curve: KummerCurve) -> None:
        s = len(self.places)
        if s < 1:
            raise QueryError("at least one place is required")
        if len(self.n) != s or len(self.c) != s:
            raise QueryError(f"lengths differ: {s} places, n={self.n}, c={self.c}")
        if len(set(self.places)) != s:
            raise QueryError("places must be pairwise distinct")
        for p in self.places:
            _check_place(curve, p)
        if any(v < 0 for v in self.n) or any(v < 0 for v in self.c):
            raise QueryError("n and c must be non-negative")


def restricted_floor_sum(
    curve: KummerCurve, places: Sequence[Place], n: Sequence[int], t: int
) -> tuple[int, list[int]]:
    """Degree of ``[sum n_i P_i + (y^t)]`` restricted to the rational function field.

    Returns the total together with ``floor((n_i + t*lam_i) / m)`` for each selected place.
    """
    if not 0 <= t < curve.m:
        raise QueryError(f"t = {t} outside [0, {curve.m - 1}]")
    if len(places) != len(n):
        raise QueryError("places and n differ in length")
    m = curve.m
    total = curve.base_degrees[t]
    per_place = []
    for p, ni in zip(places, n):
        tl = t * curve.lam_at(p)
        f = floor_div(ni + tl, m)
        per_place.append(f)
        total += f - floor_div(tl, m)
    return total, per_place


def rr_dim(curve: KummerCurve, coefficients: Mapping[Place, int]) -> int:
    """``l(D)`` for ``D = sum coefficients[P] * P`` over totally ramified places."""
    for p in coefficients:
        _check_place(curve, p)
    m = curve.m
    terms = [(coefficients[p], curve.lam_at(p)) for p in coefficients]
    dim = 0
    for t, total in enumerate(curve.base_degrees):
        for ni, lam in terms:
            tl = t * lam
            total += (ni + tl) // m - tl // m
        if total >= 0:
            dim += total + 1
    return dim


def is_c_gap_by_def(curve: KummerCurve, query: CGapQuery) -> bool:
    """Compare ``l(sum n_i P_i)`` with ``l(sum (n_i - c_i) P_i)`` directly."""
    query.check(curve)
    upper = dict(zip(query.places, query.n))
    lower = {p: ni - ci for p, ni, ci in zip(query.places, query.n, query.c)}
    return rr_dim(curve, upper) == rr_dim(curve, lower)


def is_c_gap_criterion(curve: KummerCurve, query: CGapQuery) -> bool:
    """Floor criterion: for each ``t`` the restricted degree is negative or no floor moves."""
    query.check(curve)
    return _criterion(curve, query.places, query.n, query.c)


def _criterion(curve: KummerCurve, places, n, c) -> bool:
    m = curve.m
    lams = [curve.lam_at(p) for p in places]
    base = curve.base_degrees
    for t in range(m):
        total = base[t]
        hi = []
        for lam, ni in zip(lams, n):
            tl = t * lam
            f = (ni + tl) // m
            hi.append(f)
            total += f - tl // m
        if total < 0:
            continue
        for lam, ni, ci, f in zip(lams, n, c, hi):
            if (ni - ci + t * lam) // m != f:
                return False
    return True


def is_pure_gap(curve: KummerCurve, places: Sequence[Place], n: Sequence[int]) -> bool:
    query = CGapQuery(tuple(places), tuple(n), (1,) * len(places))
    return is_c_gap_criterion(curve, query)


def is_semigroup_member(curve: KummerCurve, places: Sequence[Place], n: Sequence[int]) -> bool:
    """Whether ``n`` is realised as the exact pole divisor of some function."""
    if any(v < 0 for v in n):
        raise QueryError("n must be non-negative")
    CGapQuery(tuple(places), tuple(n), (0,) * len(places)).check(curve)
    divisor = dict(zip(places, n))
    top = rr_dim(curve, divisor)
    for j, p in enumerate(places):
        if n[j] < 1:
            continue
        lowered = dict(divisor)
        lowered[p] -= 1
        if rr_dim(curve, lowered) == top:
            return False
    return True


def gaps_at_place(curve: KummerCurve, place: Place) -> list[int]:
    """One-point gaps at ``place``, scanned over ``[1, 2g - 1]``."""
    _check_place(curve, place)
    g = genus(curve)
    dims = [rr_dim(curve, {place: k}) for k in range(2 * g)]
    return [k for k in range(1, 2 * g) if dims[k] == dims[k - 1]]


def iter_pure_gaps(
    curve: KummerCurve, places: Sequence[Place], box: Sequence[int] | None = None
) -> Iterator[tuple[int, ...]]:
    """Pure gaps ``n`` with ``1 <= n_i <= box[i]``, in lexicographic order.

    A zero coordinate can never be part of a pure gap (constants survive the
    subtraction), so starting each range at 1 loses nothing.
    """
    places = tuple(places)
    CGapQuery(places, (0,) * len(places), (0,) * len(places)).check(curve)
    if box is None:
        box = [2 * genus(curve) - 1] * len(places)
    if len(box) != len(places):
        raise QueryError("box and places differ in length")
    ones = (1,) * len(places)
    for n in itertools.product(*(range(1, b + 1) for b in box)):
        if _criterion(curve, places, n, ones):
            yield n


def enumerate_pure_gaps(
    curve: KummerCurve, places: Sequence[Place], box: Sequence[int] | None = None
) -> set[tuple[int, ...]]:
    """All pure gaps in the box; the default box is ``[1, 2g - 1]`` per coordinate."""
    return set(iter_pure_gaps(curve, places, box))


def parse_place(curve: KummerCurve, text: str, named: Mapping[str, Place] | None = None) -> Place:
    """Resolve ``"P1"``-style names or ``"class:occurrence"`` selectors."""
    text = text.strip()
    if named and text in named:
        return named[text]
    if ":" in text:
        a, b = text.split(":", 1)
        try:
            place = (int(a), int(b))
        except ValueError:
            raise QueryError(f"bad place selector {text!r}") from None
        _check_place(curve, place)
        return place
    known = ", ".join(sorted(named)) if named else "none"
    raise QueryError(f"unknown place {text!r} (named places: {known}; or use class:idx)")


def curve_to_json(curve: KummerCurve) -> dict:
    return {
        "m": curve.m,
        "char_p": curve.char_p,
        "classes": [
            {"label": c.label, "lambda": c.lam, "count": c.count} for c in curve.classes
        ],
    }


def curve_from_json(data: Mapping) -> KummerCurve:
    try:
        classes = tuple(
            RamificationClass(str(c["label"]), int(c["lambda"]), int(c["count"]))
            for c in data["classes"]
        )
        curve = KummerCurve(int(data["m"]), classes, int(data["char_p"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CurveError(f"malformed curve spec: {exc}") from None
    report = validate_curve(curve)
    if not report.ok:
        raise CurveError("; ".join(report.problems))
    return curve


def load_curve_file(path: str | Path) -> KummerCurve:
    with open(path, encoding="utf-8") as fh:
        return curve_from_json(json.load(fh))
