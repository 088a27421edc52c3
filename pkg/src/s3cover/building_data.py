"""The capital-letter building data and its round trip to cover parameters.

A cover algebra is equivalently packaged as the tuple (A,B,C,D,E,F,G,h):
three wedge-valued morphisms read off in the fixed basis.  The two
compatibility testers detect exactly the constraint locus, and the three
reconstructors rebuild the full multiplication table from the data.  All
six morphisms are realized as coefficient formulas in the fixed basis;
the abstract wedge/symmetric-power spaces are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import rational
from .algebra import (
    ConstraintReport,
    CoverParams,
    MultiplicationTable,
    PAIRS,
    build_cover,
    check_constraints,
    pair_key,
)
from .elements import AlgebraElement

FIELD_NAMES = ("A", "B", "C", "D", "E", "F", "G", "h")


@dataclass(frozen=True)
class BuildingData:
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction
    G: Fraction
    h: Fraction

    @staticmethod
    def of(A, B, C, D, E, F, G, h) -> "BuildingData":
        return BuildingData(*(Fraction(x) for x in (A, B, C, D, E, F, G, h)))

    def astuple(self) -> tuple[Fraction, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F, self.G, self.h)

    def to_json(self) -> dict[str, int | str]:
        return {k: rational.to_json(v) for k, v in zip(FIELD_NAMES, self.astuple())}

    @staticmethod
    def from_json(obj: Mapping[str, object]) -> "BuildingData":
        missing = [k for k in FIELD_NAMES if k not in obj]
        if missing:
            raise ValueError(f"building-data document missing keys: {missing}")
        return BuildingData(*(rational.from_json(obj[k]) for k in FIELD_NAMES))


def to_building_data(p: CoverParams) -> BuildingData:
    """Dictionary A=-b, B=a, C=c, D=-e, E=d, F=-g, G=f, h=h."""
    return BuildingData(-p.b, p.a, p.c, -p.e, p.d, -p.g, p.f, p.h)


def from_building_data(bd: BuildingData) -> CoverParams:
    """Inverse dictionary: a=B, b=-A, c=C, d=E, e=-D, f=G, g=-F, h=h."""
    return CoverParams(bd.B, -bd.A, bd.C, bd.E, -bd.D, bd.G, -bd.F, bd.h)


def tester_a1(bd: BuildingData) -> tuple[Fraction, Fraction]:
    """Residuals of the two linear compatibility conditions."""
    r1 = bd.A * bd.F - 2 * bd.B * bd.E + bd.C * bd.D
    r2 = bd.A * bd.G - 2 * bd.B * bd.F + bd.C * bd.E
    return (r1, r2)


def tester_a2(bd: BuildingData) -> Fraction:
    """Residual of the cubic compatibility condition."""
    A, B, C, D, E, F, G, h = bd.astuple()
    return Fraction(3, 2) * (
        B * (E * F - D * G) - A * (F * F - E * G) + C * (D * F - E * E)
    ) - h * (B * B - A * C)


@dataclass(frozen=True)
class CompatResidual:
    r1: Fraction
    r2: Fraction
    r3: Fraction

    @property
    def in_kernel(self) -> bool:
        return self.r1 == 0 and self.r2 == 0 and self.r3 == 0

    def to_json(self) -> dict:
        return {
            "residuals": [rational.to_json(r) for r in (self.r1, self.r2, self.r3)],
            "in_kernel": self.in_kernel,
        }


def compat_residual(bd: BuildingData) -> CompatResidual:
    r1, r2 = tester_a1(bd)
    return CompatResidual(r1, r2, tester_a2(bd))


def reconstruct_alpha(bd: BuildingData) -> Fraction:
    """The constant value of t^2."""
    return -3 * (bd.B * bd.B - bd.A * bd.C)


def _el(one=0, t=0, v1=0, v2=0, w1=0, w2=0) -> AlgebraElement:
    return AlgebraElement.from_coords((one, t, v1, v2, w1, w2))


def reconstruct_beta(bd: BuildingData) -> dict[str, AlgebraElement]:
    """Images of t*v1, t*v2, t*w1, t*w2."""
    A, B, C = bd.A, bd.B, bd.C
    return {
        "t*v1": _el(v1=B, v2=-A, w1=-2 * B, w2=2 * A),
        "t*v2": _el(v1=C, v2=-B, w1=-2 * C, w2=2 * B),
        "t*w1": _el(v1=2 * B, v2=-2 * A, w1=-B, w2=A),
        "t*w2": _el(v1=2 * C, v2=-2 * B, w1=-C, w2=B),
    }


def reconstruct_gamma(bd: BuildingData) -> dict[str, AlgebraElement]:
    """Images of the ten products of v/w basis vectors."""
    D, E, F, G, h = bd.D, bd.E, bd.F, bd.G, bd.h
    th = Fraction(3, 2)
    return {
        "v1*v1": _el(one=6 * (E * E - D * F), v1=E, v2=-D, w1=-2 * E, w2=2 * D),
        "v1*v2": _el(one=3 * (E * F - D * G), v1=F, v2=-E, w1=-2 * F, w2=2 * E),
        "v2*v2": _el(one=6 * (F * F - E * G), v1=G, v2=-F, w1=-2 * G, w2=2 * F),
        "v1*w1": _el(one=3 * (E * E - D * F), v1=-E, v2=D, w1=-E, w2=D),
        "v1*w2": _el(one=th * (E * F - D * G), t=h, v1=-F, v2=E, w1=-F, w2=E),
        "v2*w1": _el(one=th * (E * F - D * G), t=-h, v1=-F, v2=E, w1=-F, w2=E),
        "v2*w2": _el(one=3 * (F * F - E * G), v1=-G, v2=F, w1=-G, w2=F),
        "w1*w1": _el(one=6 * (E * E - D * F), v1=-2 * E, v2=2 * D, w1=E, w2=-D),
        "w1*w2": _el(one=3 * (E * F - D * G), v1=-2 * F, v2=2 * E, w1=F, w2=-E),
        "w2*w2": _el(one=6 * (F * F - E * G), v1=-2 * G, v2=2 * F, w1=G, w2=-F),
    }


def assemble_table(bd: BuildingData) -> MultiplicationTable:
    """Build the full 21-entry table from alpha/beta/gamma plus the unit row."""
    rows: dict[tuple[int, int], AlgebraElement] = {}
    for k in range(6):
        rows[(0, k)] = AlgebraElement.basis(k)
    rows[(1, 1)] = _el(one=reconstruct_alpha(bd))
    beta = reconstruct_beta(bd)
    rows[(1, 2)] = beta["t*v1"]
    rows[(1, 3)] = beta["t*v2"]
    rows[(1, 4)] = beta["t*w1"]
    rows[(1, 5)] = beta["t*w2"]
    gamma = reconstruct_gamma(bd)
    gamma_keys = {
        (2, 2): "v1*v1",
        (2, 3): "v1*v2",
        (3, 3): "v2*v2",
        (2, 4): "v1*w1",
        (2, 5): "v1*w2",
        (3, 4): "v2*w1",
        (3, 5): "v2*w2",
        (4, 4): "w1*w1",
        (4, 5): "w1*w2",
        (5, 5): "w2*w2",
    }
    for pair, key in gamma_keys.items():
        rows[pair] = gamma[key]
    return MultiplicationTable(rows)


@dataclass(frozen=True)
class PipelineReport:
    """End-to-end comparison of the two routes to the same algebra."""

    params: CoverParams
    building_data: BuildingData
    constraint: ConstraintReport
    compat: CompatResidual
    residuals_equivalent: bool
    table_equal: bool
    mismatched_entries: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.residuals_equivalent and (
            not self.constraint.satisfied or self.table_equal
        )

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "building_data": self.building_data.to_json(),
            "constraint": self.constraint.to_json(),
            "compat": self.compat.to_json(),
            "residuals_equivalent": self.residuals_equivalent,
            "table_equal": self.table_equal,
            "mismatched_entries": list(self.mismatched_entries),
            "ok": self.ok,
        }


def pipeline_check(p: CoverParams) -> PipelineReport:
    """Check that the capital-letter route agrees with the direct one.

    The compatibility testers must vanish exactly when the lowercase
    constraints do, and on the constraint locus the reconstructed table
    must equal the directly built one entry by entry.  Off the locus the
    tables are still compared (the reconstruction formulas agree with the
    builder identically), and mismatches are reported rather than raised.
    """
    bd = to_building_data(p)
    constraint = check_constraints(p)
    compat = compat_residual(bd)
    residuals_equivalent = constraint.satisfied == compat.in_kernel
    built = build_cover(p)
    assembled = assemble_table(bd)
    mismatches = tuple(
        pair_key(i, j)
        for i, j in PAIRS
        if built.entry(i, j) != assembled.entry(i, j)
    )
    return PipelineReport(
        params=p,
        building_data=bd,
        constraint=constraint,
        compat=compat,
        residuals_equivalent=residuals_equivalent,
        table_equal=not mismatches,
        mismatched_entries=mismatches,
    )
