"""Evaluation reports and what-if sensitivity sweeps.

A report echoes every input next to every computed quantity so an
evaluation can be audited line by line; rendering follows the pipeline
order weights -> bounds -> masses -> trust mass -> strength -> label.
Sweeps re-run the pipeline while one weight or one observed property
value moves across a grid, flagging the points where the classification
flips away from the base configuration.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .algebra import (
    CATEGORIES,
    DEFAULT_SIGNS,
    TOLERANCE,
    Band,
    BandTable,
    CategoryMassVector,
    RelationCategory,
    ScalarBounds,
    ScalarConfig,
    StrengthInterpretation,
    WeightVector,
    evaluate,
    interpret_strength,
)
from .catalog import (
    Assessment,
    PropertyCatalog,
    aggregate_masses,
    replace_entry_value,
)
from .errors import SchemaError, ValidationError

#: Decimal places used by the text and CSV renderings.
TEXT_PRECISION = 6


@dataclass(frozen=True)
class EvaluationReport:
    """One evaluation with its inputs echoed for audit."""

    catalog_version: str
    assessment_ref: str
    weights: WeightVector
    signs: ScalarConfig
    bounds: ScalarBounds
    masses: CategoryMassVector
    trust_mass: float
    strength: float
    label: str
    interpretation: StrengthInterpretation
    band_label: str | None = None

    def to_dict(self) -> dict:
        """JSON-ready form at full float precision."""
        return {
            "provenance": {
                "catalog_version": self.catalog_version,
                "assessment": self.assessment_ref,
            },
            "weights": self.weights.as_dict(),
            "signs": self.signs.as_dict(),
            "bounds": self.bounds.as_dict(),
            "masses": self.masses.as_dict(),
            "trust_mass": self.trust_mass,
            "strength": self.strength,
            "label": self.label,
            "band_label": self.band_label,
            "interpretation": self.interpretation.as_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        """Fixed-precision rendering in pipeline order."""
        p = TEXT_PRECISION
        flags = self.interpretation
        lines = [
            f"weights     hostile={self.weights.hostile:.{p}f}  "
            f"neutral={self.weights.neutral:.{p}f}  friendly={self.weights.friendly:.{p}f}",
            f"signs       hostile={self.signs.hostile:+d}  "
            f"neutral={self.signs.neutral:+d}  friendly={self.signs.friendly:+d}",
            f"bounds      lower={self.bounds.lower:.{p}f}  upper={self.bounds.upper:.{p}f}  "
            f"middle=[{self.bounds.middle_band_low:.{p}f}, {self.bounds.middle_band_high:.{p}f}]",
            f"masses      hostile={self.masses.hostile:.{p}f}  "
            f"neutral={self.masses.neutral:.{p}f}  friendly={self.masses.friendly:.{p}f}",
            f"trust_mass  {self.trust_mass:.{p}f}",
            f"strength    {self.strength:.{p}f}",
            f"label       {self.label}",
        ]
        if self.band_label is not None:
            lines.append(f"band        {self.band_label}")
        lines.append(
            "flags       "
            f"contradiction_prone={_flag(flags.contradiction_prone)}  "
            f"fair_consistent={_flag(flags.fair_consistent)}  "
            f"neutral_biased={_flag(flags.neutral_biased)}  "
            f"no_hostile={_flag(flags.no_hostile)}"
        )
        lines.append(
            f"provenance  catalog={self.catalog_version}  assessment={self.assessment_ref}"
        )
        return "\n".join(lines)

    def to_csv(self) -> str:
        p = TEXT_PRECISION
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(
            [
                "weight_hostile", "weight_neutral", "weight_friendly",
                "sign_hostile", "sign_neutral", "sign_friendly",
                "lower", "upper", "middle_band_low", "middle_band_high",
                "mass_hostile", "mass_neutral", "mass_friendly",
                "trust_mass", "strength", "label", "band_label",
            ]
        )
        writer.writerow(
            [
                f"{self.weights.hostile:.{p}f}", f"{self.weights.neutral:.{p}f}",
                f"{self.weights.friendly:.{p}f}",
                self.signs.hostile, self.signs.neutral, self.signs.friendly,
                f"{self.bounds.lower:.{p}f}", f"{self.bounds.upper:.{p}f}",
                f"{self.bounds.middle_band_low:.{p}f}", f"{self.bounds.middle_band_high:.{p}f}",
                f"{self.masses.hostile:.{p}f}", f"{self.masses.neutral:.{p}f}",
                f"{self.masses.friendly:.{p}f}",
                f"{self.trust_mass:.{p}f}", f"{self.strength:.{p}f}",
                self.label, self.band_label or "",
            ]
        )
        return buffer.getvalue()


def _flag(value: bool) -> str:
    return "true" if value else "false"


def build_report(
    catalog: PropertyCatalog,
    assessment: Assessment,
    weights: WeightVector,
    signs: ScalarConfig = DEFAULT_SIGNS,
    bands: BandTable | None = None,
    mode: str = "strict",
    delta: float = 0.1,
) -> EvaluationReport:
    """Aggregate an assessment and evaluate it into a full report."""
    masses = aggregate_masses(assessment, catalog, mode=mode)
    evaluation = evaluate(masses, weights, signs, bands=bands)
    interpretation = interpret_strength(evaluation, masses.neutral, delta=delta)
    return EvaluationReport(
        catalog_version=catalog.version,
        assessment_ref=assessment.ref,
        weights=weights,
        signs=signs,
        bounds=evaluation.bounds,
        masses=masses,
        trust_mass=evaluation.trust_mass,
        strength=evaluation.strength,
        label=evaluation.label.value,
        interpretation=interpretation,
        band_label=evaluation.band_label,
    )


# --- sensitivity sweeps ------------------------------------------------------

TARGET_KINDS = ("weight", "property")


@dataclass(frozen=True)
class SensitivitySpec:
    """What to sweep and over which grid.

    ``target_kind`` is "weight" (target names a category) or "property"
    (target names a catalog property observed by the assessment).  The
    grid runs from ``start`` to ``stop`` inclusive in increments of
    ``step``; descending sweeps are allowed.  When a weight is swept
    the other two weights rescale proportionally so the total stays 1.
    """

    target_kind: str
    target: str
    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.target_kind not in TARGET_KINDS:
            raise ValidationError(
                f"target kind must be one of {TARGET_KINDS}, got {self.target_kind!r}"
            )
        if self.target_kind == "weight":
            self.target_category()
        if not self.step > 0.0:
            raise ValidationError(f"sweep step must be positive, got {self.step}")
        for value in (self.start, self.stop):
            if not 0.0 <= value <= 1.0:
                raise ValidationError(
                    f"sweep endpoints must lie in [0, 1], got {value}"
                )

    def target_category(self) -> RelationCategory:
        try:
            return RelationCategory(self.target)
        except ValueError:
            valid = ", ".join(c.value for c in CATEGORIES)
            raise ValidationError(
                f"weight target must be one of {valid}, got {self.target!r}"
            ) from None

    def values(self) -> list[float]:
        """The swept grid, from start to stop inclusive."""
        span = self.stop - self.start
        count = int(math.floor(abs(span) / self.step + TOLERANCE))
        direction = 1.0 if span >= 0 else -1.0
        # clamp away float drift so grid points stay inside [0, 1]
        return [
            min(max(self.start + direction * i * self.step, 0.0), 1.0)
            for i in range(count + 1)
        ]


@dataclass(frozen=True)
class SweepRow:
    """One grid point: swept input value and the resulting evaluation."""

    value: float
    trust_mass: float
    strength: float
    label: str
    flipped: bool

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "trust_mass": self.trust_mass,
            "strength": self.strength,
            "label": self.label,
            "flipped": self.flipped,
        }


@dataclass(frozen=True)
class SweepResult:
    """All rows of a sweep plus the first classification flip, if any."""

    target_kind: str
    target: str
    base_label: str
    rows: tuple[SweepRow, ...]
    first_flip: float | None

    def to_dict(self) -> dict:
        return {
            "target_kind": self.target_kind,
            "target": self.target,
            "base_label": self.base_label,
            "first_flip": self.first_flip,
            "rows": [row.as_dict() for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        p = TEXT_PRECISION
        lines = [f"{'value':>10}  {'trust_mass':>12}  {'strength':>10}  label"]
        for row in self.rows:
            marker = "  *flip*" if row.flipped else ""
            lines.append(
                f"{row.value:>10.{p}f}  {row.trust_mass:>12.{p}f}  "
                f"{row.strength:>10.{p}f}  {row.label}{marker}"
            )
        lines.append(f"base label: {self.base_label}")
        if self.first_flip is None:
            lines.append("no flip in sweep")
        else:
            lines.append(f"first flip at {self.target}={self.first_flip:.{p}f}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        p = TEXT_PRECISION
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["value", "trust_mass", "strength", "label", "flipped"])
        for row in self.rows:
            writer.writerow(
                [
                    f"{row.value:.{p}f}", f"{row.trust_mass:.{p}f}",
                    f"{row.strength:.{p}f}", row.label,
                    _flag(row.flipped),
                ]
            )
        return buffer.getvalue()


def reweight(
    weights: WeightVector, category: RelationCategory, value: float
) -> WeightVector:
    """Set one category's weight; the other two rescale proportionally.

    Fails when the other two weights are both zero and cannot absorb
    the remainder.
    """
    others = [c for c in CATEGORIES if c is not category]
    other_sum = weights[others[0]] + weights[others[1]]
    remainder = 1.0 - value
    if other_sum <= 0.0:
        if abs(remainder) > TOLERANCE:
            raise ValidationError(
                f"cannot renormalize: weights other than {category} are both zero"
            )
        scaled = {others[0]: 0.0, others[1]: 0.0}
    else:
        scale = remainder / other_sum
        scaled = {c: weights[c] * scale for c in others}
    scaled[category] = value
    return WeightVector(
        hostile=scaled[RelationCategory.HOSTILE],
        neutral=scaled[RelationCategory.NEUTRAL],
        friendly=scaled[RelationCategory.FRIENDLY],
    )


def run_whatif(
    catalog: PropertyCatalog,
    assessment: Assessment,
    weights: WeightVector,
    spec: SensitivitySpec,
    signs: ScalarConfig = DEFAULT_SIGNS,
    mode: str = "strict",
) -> SweepResult:
    """Sweep one input across its grid and evaluate every point.

    The base label comes from the unswept configuration; each row is
    flagged when its label differs, and the first such grid value is
    reported as the flip point.
    """
    base_masses = aggregate_masses(assessment, catalog, mode=mode)
    base_label = evaluate(base_masses, weights, signs).label.value
    rows = []
    first_flip = None
    for value in spec.values():
        if spec.target_kind == "weight":
            point_weights = reweight(weights, spec.target_category(), value)
            point_masses = base_masses
        else:
            swept = replace_entry_value(assessment, spec.target, value)
            point_masses = aggregate_masses(swept, catalog, mode=mode)
            point_weights = weights
        evaluation = evaluate(point_masses, point_weights, signs)
        flipped = evaluation.label.value != base_label
        if flipped and first_flip is None:
            first_flip = value
        rows.append(
            SweepRow(
                value=value,
                trust_mass=evaluation.trust_mass,
                strength=evaluation.strength,
                label=evaluation.label.value,
                flipped=flipped,
            )
        )
    return SweepResult(
        target_kind=spec.target_kind,
        target=spec.target,
        base_label=base_label,
        rows=tuple(rows),
        first_flip=first_flip,
    )


# --- band table documents ----------------------------------------------------

def band_table_from_dict(doc: dict) -> BandTable:
    """Build a band table from its document form."""
    if not isinstance(doc, dict) or not isinstance(doc.get("bands"), list):
        raise SchemaError("bands: expected an object with a bands array")
    bands = []
    for i, raw in enumerate(doc["bands"]):
        where = f"bands[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{where}: expected an object")
        try:
            parent = RelationCategory(raw["parent"])
        except (KeyError, ValueError):
            valid = ", ".join(c.value for c in CATEGORIES)
            raise SchemaError(
                f"{where}.parent: expected one of {valid}, got {raw.get('parent')!r}"
            ) from None
        try:
            bands.append(
                Band(
                    label=str(raw["label"]),
                    low=float(raw["low"]),
                    high=float(raw["high"]),
                    parent=parent,
                )
            )
        except (KeyError, TypeError, ValueError) as err:
            raise SchemaError(f"{where}: malformed band ({err})") from None
    return BandTable(bands)


def band_table_to_dict(table: BandTable) -> dict:
    return {
        "bands": [
            {"label": b.label, "low": b.low, "high": b.high, "parent": b.parent.value}
            for b in table.bands
        ]
    }


def load_band_table(path: str | Path) -> BandTable:
    """Read a band table JSON document."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(
            f"{path}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}"
        ) from None
    return band_table_from_dict(doc)
