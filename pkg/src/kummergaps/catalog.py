"""Ramification data for the GK, X1, X2 and GGS curves.

The valuation multisets are written down per curve rather than obtained by
factoring ``f(x)`` over a finite field.  Each constructor checks the
degree-sum and that the Riemann-Hurwitz genus agrees with the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from sympy import factorint

from .core import CurveError, KummerCurve, Place, RamificationClass, genus, validate_curve


@dataclass(frozen=True, eq=False)
class CatalogCurve:
    curve: KummerCurve
    name: str
    params: dict[str, int]
    genus_formula_value: int
    rational_places: int
    distinguished: dict[str, Place]
    notes: tuple[str, ...] = field(default=())

    @property
    def genus(self) -> int:
        return genus(self.curve)

    def place(self, name: str) -> Place:
        return self.distinguished[name]

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args})"


def characteristic(q: int) -> int:
    """Prime ``p`` with ``q = p^k``; raises for anything that is not a prime power."""
    if q < 2:
        raise CurveError(f"q = {q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise CurveError(f"q = {q} is not a prime power")
    return next(iter(factors))


def _finish(curve, name, params, g_formula, N, distinguished, notes=()) -> CatalogCurve:
    report = validate_curve(curve)
    if not report.ok:
        raise CurveError(f"{name}{params}: " + "; ".join(report.problems))
    g = genus(curve)
    if g != g_formula:
        raise CurveError(f"{name}{params}: Riemann-Hurwitz genus {g} != closed form {g_formula}")
    return CatalogCurve(curve, name, dict(params), g_formula, N, dict(distinguished), tuple(notes))


def _tr_handles(zero_class: int, pole_class: int) -> dict[str, Place]:
    return {"P1": (zero_class, 0), "P2": (zero_class, 1), "P_inf": (pole_class, 0)}


def gk(q: int) -> CatalogCurve:
    """Plane model ``y^(q^3+1) = (x^q+x)((x^q+x)^(q-1) - 1)^(q+1)``."""
    p = characteristic(q)
    m = q**3 + 1
    classes = (
        RamificationClass("zeros of x^q+x", 1, q),
        RamificationClass("zeros of (x^q+x)^(q-1)-1", q + 1, q * q - q),
        RamificationClass("P_inf", -(q**3), 1),
    )
    g = (q**3 + 1) * (q**2 - 2) // 2 + 1
    N = q**8 - q**6 + q**5 + 1
    return _finish(KummerCurve(m, classes, p), "GK", {"q": q}, g, N, _tr_handles(0, 2))


def x1(q: int, n: int, m: int) -> CatalogCurve:
    """``y^m = (x^(q^n) - x)^(q^n - 1)`` with ``m | q^(2n) - 1`` and ``gcd(m, q^n - 1) = 1``."""
    p = characteristic(q)
    if n < 1:
        raise CurveError(f"n = {n} must be positive")
    Q = q**n
    if m < 2 or (Q * Q - 1) % m:
        raise CurveError(f"m = {m} must divide q^(2n) - 1 = {Q * Q - 1}")
    if gcd(m, Q - 1) != 1:
        raise CurveError(f"gcd(m, q^n - 1) = {gcd(m, Q - 1)} != 1")
    classes = (
        RamificationClass("zeros of x^(q^n)-x", Q - 1, Q),
        RamificationClass("P_inf", -Q * (Q - 1), 1),
    )
    g = (Q - 1) * (m - 1) // 2
    N = (Q * Q - Q) * m + Q + 1
    return _finish(KummerCurve(m, classes, p), "X1", {"q": q, "n": n, "m": m}, g, N, _tr_handles(0, 1))


def x2_genus_and_places(q: int, m: int) -> tuple[int, int]:
    """Closed-form genus and rational place count, split by ``q mod 3``."""
    d = gcd(m, q - 1)
    if q % 3 == 0:
        return (q - 1) * (m - 1) + (m - d) // 2, q * q * m + d
    if q % 3 == 1:
        extra = 2 * d if ((q - 1) // d) % 3 == 0 else 0
        return (q - 2) * (m - 1) + (m - d), (q * q - 1) * m + extra
    return q * (m - 1), (q * q + 1) * m


def x2(q: int, m: int) -> CatalogCurve:
    """``y^m = (x^(q+1)+x+1)^q / (x^(q+1)+x^q+1)`` with ``m | q^2 - 1``.

    Numerator and denominator share the roots of ``x^2+x+1`` lying in ``F_q``:
    two when ``q = 1 mod 3``, the single root ``x = 1`` when ``3 | q``, none
    when ``q = 2 mod 3``.
    """
    p = characteristic(q)
    if q <= 3:
        raise CurveError(f"q = {q} must exceed 3")
    if m < 2 or (q * q - 1) % m:
        raise CurveError(f"m = {m} must divide q^2 - 1 = {q * q - 1}")
    common = {0: 1, 1: 2, 2: 0}[q % 3]
    classes = [RamificationClass("roots of x^(q+1)+x+1", q, q + 1 - common)]
    if common:
        classes.append(RamificationClass("common roots (x^2+x+1)", q - 1, common))
    classes.append(RamificationClass("roots of x^(q+1)+x^q+1", -1, q + 1 - common))
    classes.append(RamificationClass("P_inf", -(q * q - 1), 1))
    pole = len(classes) - 1
    g, N = x2_genus_and_places(q, m)
    notes = []
    if q % 3 != 1:
        notes.append(
            f"ramification multiset for q = {q % 3} mod 3 is derived from the root count of "
            "x^2+x+1, not taken from a worked proof"
        )
    if q % 3 == 2:
        notes.append("no common roots of numerator and denominator when q = 2 mod 3")
    return _finish(KummerCurve(m, tuple(classes), p), "X2", {"q": q, "m": m}, g, N, _tr_handles(0, pole), notes)


def ggs(q: int, n: int) -> CatalogCurve:
    """Plane model ``y^(q^n+1) = (x^q+x) * prod_{Tr(a) != 0} (x-a)^(q+1)``, ``n`` odd."""
    p = characteristic(q)
    if n < 3 or n % 2 == 0:
        raise CurveError(f"n = {n} must be odd and at least 3")
    m = q**n + 1
    classes = (
        RamificationClass("zeros of x^q+x", 1, q),
        RamificationClass("a in F_(q^2) with Tr(a) != 0", q + 1, q * q - q),
        RamificationClass("P_inf", -(q**3), 1),
    )
    g = (q - 1) * (q ** (n + 1) + q**n - q * q) // 2
    N = q ** (2 * n) + 2 * g * q**n + 1
    return _finish(KummerCurve(m, classes, p), "GGS", {"q": q, "n": n}, g, N, _tr_handles(0, 2))


def build(name: str, q: int | None = None, n: int | None = None, m: int | None = None) -> CatalogCurve:
    """Dispatch on a lower-case curve name with the parameters the curve needs."""
    name = name.lower()
    needed = {"gk": ("q",), "x1": ("q", "n", "m"), "x2": ("q", "m"), "ggs": ("q", "n")}
    if name not in needed:
        raise CurveError(f"unknown curve {name!r}; choose from {', '.join(needed)}")
    given = {"q": q, "n": n, "m": m}
    missing = [k for k in needed[name] if given[k] is None]
    if missing:
        raise CurveError(f"curve {name} needs --{', --'.join(missing)}")
    return {"gk": gk, "x1": x1, "x2": x2, "ggs": ggs}[name](*(given[k] for k in needed[name]))
