"""Parameters of two-point differential AG codes built from pure gaps.

Given a pure gap ``(a1, a2)`` take ``G = (2a1-1)P1 + (2a2-1)P2`` and let ``D``
be the sum of the remaining rational places.  Inside the window
``2g-2 < deg G < n`` the code has ``k = n + g - 1 - deg G`` and
``d >= deg G - 2g + 4``.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import catalog, families, suzuki
from .core import CGapQuery, KummerCurve, Place, is_c_gap_criterion, is_pure_gap


class DesignError(ValueError):
    """Raised when a divisor choice falls outside ``2g-2 < deg G < n``."""


@dataclass(frozen=True)
class CodeDesign:
    g: int
    N: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    degG: int
    n: int
    k: int
    d_bound: int

    def as_dict(self) -> dict:
        out = asdict(self)
        out["a"], out["b"] = list(self.a), list(self.b)
        return out


def ct_distance_bound(g: int, degG: int, a: Sequence[int], b: Sequence[int]) -> int:
    """Distance bound from a box of pure gaps between ``a`` and ``b``.

    The box condition itself is not checked here; see :func:`check_pure_box`.
    """
    if len(a) != len(b):
        raise ValueError("a and b differ in length")
    if any(x > y for x, y in zip(a, b)):
        raise ValueError(f"need a <= b componentwise, got a={a}, b={b}")
    return degG - (2 * g - 2) + sum(y - x + 1 for x, y in zip(a, b))


def check_pure_box(curve: KummerCurve, places: Sequence[Place], a: Sequence[int], b: Sequence[int]) -> bool:
    """Every tuple in the box ``prod [a_i, b_i]`` is a pure gap."""
    if len(a) != len(b) or len(a) != len(places):
        raise ValueError("a, b and places differ in length")
    if any(x > y for x, y in zip(a, b)):
        raise ValueError(f"empty box: a={a}, b={b}")
    ranges = [range(x, y + 1) for x, y in zip(a, b)]
    return all(is_pure_gap(curve, places, n) for n in itertools.product(*ranges))


def lm_distance_bound(g: int, degG: int, c: Sequence[int]) -> int:
    """Generalized floor bound; certify the inputs with :func:`certify_lm` first."""
    if any(x < 0 for x in c):
        raise ValueError("c must be non-negative")
    return degG - (2 * g - 2) + sum(c)


def certify_lm(
    curve: KummerCurve, places: Sequence[Place], a: Sequence[int], b: Sequence[int], c: Sequence[int]
) -> bool:
    """``c_i <= b_i - 1`` and both ``a + c`` and ``b - 1`` are c-gaps."""
    if any(ci > bi - 1 for ci, bi in zip(c, b)):
        return False
    places = tuple(places)
    a_plus_c = tuple(x + y for x, y in zip(a, c))
    b_minus_1 = tuple(y - 1 for y in b)
    return is_c_gap_criterion(curve, CGapQuery(places, a_plus_c, tuple(c))) and is_c_gap_criterion(
        curve, CGapQuery(places, b_minus_1, tuple(c))
    )


def design_two_point(g: int, N: int, gap: Sequence[int]) -> CodeDesign:
    """Code from a (caller-certified) pure gap with ``b = a``."""
    a1, a2 = gap
    n = N - 2
    degG = 2 * (a1 + a2 - 1)
    if not 2 * g - 2 < degG < n:
        raise DesignError(f"deg G = {degG} outside ({2 * g - 2}, {n})")
    k = n + g - 1 - degG
    return CodeDesign(g, N, (a1, a2), (a1, a2), degG, n, k, degG - 2 * g + 4)


def design_for_curve(cc: catalog.CatalogCurve, gap: Sequence[int], places: Sequence[Place] | None = None) -> CodeDesign:
    places = tuple(places or (cc.place("P1"), cc.place("P2")))
    if not is_pure_gap(cc.curve, places, gap):
        raise DesignError(f"{tuple(gap)} is not a pure gap at {places} on {cc.describe()}")
    return design_two_point(cc.genus, cc.rational_places, gap)


def design_for_suzuki(q0: int, gap: Sequence[int]) -> CodeDesign:
    if tuple(gap) not in suzuki.pure_gaps_suzuki(q0):
        raise DesignError(f"{tuple(gap)} is not a pure gap on the Suzuki curve with q0 = {q0}")
    return design_two_point(suzuki.semigroup_gaps(q0).g, suzuki.rational_places(q0), gap)


F = Fraction

# Printed polynomial entries, keyed by column; each takes the row's parameters.
_TABLE1: dict[str, dict[str, Callable[..., Fraction]]] = {
    "gk": {
        "n": lambda q: F(q**8 - q**6 + q**5 - 1),
        "k": lambda q: q**8 - q**6 - F(q**5, 2) + 5 * q**3 - F(7 * q**2, 2) + 2 * q - 2,
        "d": lambda q: F(q**5 - 4 * q**3 + 3 * q**2 - 2 * q),
        "degG": lambda q: F(2 * q**5 - 6 * q**3 + 4 * q**2 - 2 * q - 2),
    },
    "x1": {
        "n": lambda q, n, m: F((q ** (2 * n) - q**n) * m + q**n - 1),
        "k": lambda q, n, m: (q**n - 1) * q**n * (m - 1) + F((q**n - 1) * (m + 3), 2) - 1,
        "d": lambda q, n, m: F((q**n - 1) * q**n - (q**n - 1) * m + 4),
        "degG": lambda q, n, m: F((q**n - 1) ** 2),
    },
    "x2_0": {
        "n": lambda q: F(q**4 - q**2 + q - 3),
        "k": lambda q: q**4 - 3 * q**3 + F(17 * q**2, 2) - F(7 * q, 2) - 6,
        "d": lambda q: F(2 * q**3 - 9 * q**2 + 7 * q + 4),
        "degG": lambda q: F(4 * q**3 - 10 * q**2 + 2 * q + 4),
    },
    "x2_1": {
        "n": lambda q: F((q**2 - 1) ** 2 + 2 * q - 4),
        "k": lambda q: F(q**4 - 3 * q**3 + 7 * q**2 - 3 * q - 4),
        "d": lambda q: F(2 * q**3 - 8 * q**2 + 8 * q),
        "degG": lambda q: F(4 * q**3 - 10 * q**2 + 2 * q + 4),
    },
    "x2_2": {
        "n": lambda q: F(q**4 - 3),
        "k": lambda q: F(q**4 - 3 * q**3 + 10 * q**2 - 4 * q - 8),
        "d": lambda q: F(2 * q**3 - 10 * q**2 + 6 * q + 8),
        "degG": lambda q: F(4 * q**3 - 10 * q**2 + 2 * q + 4),
    },
    "ggs": {
        "n": lambda q, n: F(q ** (2 * n + 2) - q ** (2 * n) - q ** (n + 3) + q ** (n + 2) - 1),
        "k": lambda q, n: q ** (2 * n + 2) - q ** (2 * n) - q ** (n + 2) - F(q ** (n + 2), 2)
        + F(3 * q**n, 2) + 4 * q**3 - F(3 * q**2, 2),
        "d": lambda q, n: F(q ** (n + 2) - q**n - 3 * q**3 + q**2 + 2),
        "degG": lambda q, n: F(2 * q ** (n + 2) - 2 * q**n - 4 * q**3 + 2 * q**2 - 2),
    },
    "suzuki": {
        "n": lambda q0: F(4 * q0**4 - 1),
        "k": lambda q0: F(4 * q0**4 - 6 * q0**3 + 4 * q0**2 - 3 * q0 - 2),
        "d": lambda q0: F(4 * q0**3 - 4 * q0**2 - 2 * q0 + 4),
        "degG": lambda q0: F(8 * q0**3 - 4 * q0**2 - 4 * q0),
    },
}

TABLE1_ROWS = ("gk", "x1", "x2", "ggs", "suzuki")


@dataclass
class AuditReport:
    row: str
    params: dict
    gap: tuple[int, int]
    design: CodeDesign | None
    columns: dict[str, dict]
    notes: list[str]

    def status(self, column: str) -> str:
        return self.columns[column]["status"]

    def as_dict(self) -> dict:
        return {
            "row": self.row,
            "params": self.params,
            "gap": list(self.gap),
            "design": self.design.as_dict() if self.design else None,
            "columns": self.columns,
            "notes": self.notes,
        }


def _row_setup(row: str, q: int | None, n: int | None, q0: int | None, alpha: int):
    """(printed-table key, polynomial args, params, g, N, pure gap) for a row."""
    if row == "gk":
        cc = catalog.gk(q)
        return "gk", (q,), {"q": q}, cc, families.prop34(q, 0, 0).n
    if row == "x1":
        inst = families.prop37_part2(q, n, alpha)
        m = q**n + 1
        return "x1", (q, n, m), {"q": q, "n": n, "m": m, "alpha": alpha}, catalog.x1(q, n, m), inst.n
    if row == "x2":
        cc = catalog.x2(q, q * q - 1)
        return f"x2_{q % 3}", (q,), {"q": q, "m": q * q - 1}, cc, families.prop38(q, 0, 0).n
    if row == "ggs":
        return "ggs", (q, n), {"q": q, "n": n}, catalog.ggs(q, n), families.prop310(q, n, 0).n
    if row == "suzuki":
        return "suzuki", (q0,), {"q0": q0}, None, suzuki.prop41(q0, 0)
    raise ValueError(f"unknown table row {row!r}; choose from {', '.join(TABLE1_ROWS)}")


def table1_audit(row: str, q: int | None = None, n: int | None = None, q0: int | None = None, alpha: int = 1) -> AuditReport:
    """Compare the printed polynomial entries with values from :func:`design_two_point`.

    Mismatches are findings, reported per column; nothing is reconciled.
    """
    key, args, params, cc, gap = _row_setup(row, q, n, q0, alpha)
    notes: list[str] = []
    if cc is None:
        g, N = suzuki.semigroup_gaps(q0).g, suzuki.rational_places(q0)
    else:
        g, N = cc.genus, cc.rational_places
        notes.extend(cc.notes)
    try:
        design = design_two_point(g, N, gap)
        identity = {"n": design.n, "k": design.k, "d": design.d_bound, "degG": design.degG}
    except DesignError as exc:
        design = None
        notes.append(f"design rejected: {exc}")
        identity = {"n": N - 2, "k": None, "d": None, "degG": 2 * (sum(gap) - 1)}
    columns = {}
    for col, poly in _TABLE1[key].items():
        printed = poly(*args)
        ident = identity[col]
        if printed.denominator != 1:
            columns[col] = {"status": "non_integral", "printed": str(printed), "identity": ident}
            continue
        printed = int(printed)
        status = "match" if printed == ident else "mismatch"
        columns[col] = {"status": status, "printed": printed, "identity": ident}
    return AuditReport(row, params, tuple(gap), design, columns, notes)
