"""Nation registry and directed relation store.

Relations are directed: what one nation thinks of another says nothing
about the reverse direction, and nothing carries over transitively
through third parties.  A nation's relation to itself is always
friendly and is synthesized on demand rather than stored.  A pair that
was never evaluated is explicitly *undefined*, which is distinct from
an evaluated pair with zero evidence (that one is neutral).

The store accepts a single writer and any number of concurrent
readers: every mutation swaps in a fresh mapping under a lock, so a
reader always sees a consistent snapshot.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import date
from pathlib import Path

from .algebra import (
    DEFAULT_SIGNS,
    BandTable,
    CategoryMassVector,
    RelationCategory,
    ScalarBounds,
    ScalarConfig,
    TrustEvaluation,
    WeightVector,
    evaluate,
)
from .catalog import (
    Assessment,
    DateWindow,
    PropertyCatalog,
    aggregate_masses,
    validate_assessment,
    window_from_dict,
    window_to_dict,
)
from .errors import SchemaError, ValidationError


@dataclass(frozen=True)
class Nation:
    """A sovereign state; UN membership is a caller-supplied flag."""

    id: str
    name: str = ""
    un_member: bool = True

    def __post_init__(self) -> None:
        if not self.id:
            raise ValidationError("nation id must be non-empty")


@dataclass(frozen=True)
class RelationRecord:
    """One directed perception over one window: evaluated or undefined."""

    subject: str
    object: str
    window: DateWindow
    evaluation: TrustEvaluation | None = None
    weights: WeightVector | None = None
    signs: ScalarConfig | None = None
    assessment_ref: str | None = None
    near_misses: tuple[str, ...] = ()

    @property
    def defined(self) -> bool:
        return self.evaluation is not None

    @property
    def state(self) -> str:
        return "evaluated" if self.defined else "undefined"

    @property
    def label(self) -> str:
        """Classification label, or "undefined" for unevaluated pairs."""
        return self.evaluation.label.value if self.evaluation else "undefined"


# A nation trusts itself completely: all emphasis and all evidence on
# the friendly category puts the score at the very top of the scale.
_SELF_WEIGHTS = WeightVector(0.0, 0.0, 1.0)
_SELF_MASSES = CategoryMassVector(0.0, 0.0, 1.0)

_RecordKey = tuple[str, str, date, date]


class RelationStore:
    """Registry of nations plus their evaluated directed relations."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._nations: dict[str, Nation] = {}
        self._records: dict[_RecordKey, RelationRecord] = {}

    # -- registry -------------------------------------------------------

    def register_nation(self, nation: Nation) -> Nation:
        """Add a nation; duplicate ids are rejected."""
        with self._lock:
            if nation.id in self._nations:
                raise ValidationError(f"nation {nation.id!r} is already registered")
            nations = dict(self._nations)
            nations[nation.id] = nation
            self._nations = nations
        return nation

    def nation(self, nation_id: str) -> Nation:
        found = self._nations.get(nation_id)
        if found is None:
            raise ValidationError(f"nation {nation_id!r} is not registered")
        return found

    @property
    def nations(self) -> tuple[Nation, ...]:
        return tuple(sorted(self._nations.values(), key=lambda n: n.id))

    @property
    def records(self) -> tuple[RelationRecord, ...]:
        return tuple(self._records[key] for key in sorted(self._records))

    # -- evaluation and queries ------------------------------------------

    def evaluate_relation(
        self,
        subject: str,
        object: str,
        assessment: Assessment,
        catalog: PropertyCatalog,
        weights: WeightVector,
        signs: ScalarConfig = DEFAULT_SIGNS,
        mode: str = "strict",
        bands: BandTable | None = None,
    ) -> RelationRecord:
        """Evaluate one directed perception and store the record.

        Re-evaluating the same (subject, object, window) replaces the
        earlier record; distinct windows coexist.  Self-relations are
        fixed friendly and cannot be evaluated.
        """
        self.nation(subject)
        self.nation(object)
        if subject == object:
            raise ValidationError(
                f"self-relation {subject!r} is fixed friendly and cannot be evaluated"
            )
        if assessment.subject != subject or assessment.object != object:
            raise ValidationError(
                f"assessment covers {assessment.subject!r}->{assessment.object!r}, "
                f"not {subject!r}->{object!r}"
            )
        report = validate_assessment(assessment, catalog, mode=mode)
        if not report.ok:
            raise ValidationError(
                "assessment is invalid: " + "; ".join(report.violations)
            )
        masses = aggregate_masses(assessment, catalog, mode=mode)
        evaluation = evaluate(masses, weights, signs, bands=bands)
        record = RelationRecord(
            subject=subject,
            object=object,
            window=assessment.window,
            evaluation=evaluation,
            weights=weights,
            signs=signs,
            assessment_ref=f"{assessment.ref} (catalog {catalog.version})",
        )
        key = (subject, object, assessment.window.start, assessment.window.end)
        with self._lock:
            records = dict(self._records)
            records[key] = record
            self._records = records
        return record

    def query_relation(
        self, subject: str, object: str, window: DateWindow
    ) -> RelationRecord:
        """Look up the perception of ``subject`` toward ``object``.

        A stored record matches when its window fully contains the
        queried range; with several matches the narrowest window wins.
        Overlapping-but-not-containing records are listed as near
        misses on the undefined result.  No record is ever derived
        from the reverse direction or through third nations.
        """
        self.nation(subject)
        self.nation(object)
        if subject == object:
            return self._self_record(subject, window)
        records = self._records
        containing = []
        overlapping = []
        for record in records.values():
            if record.subject != subject or record.object != object:
                continue
            if record.window.contains(window):
                containing.append(record)
            elif record.window.overlaps(window):
                overlapping.append(record)
        if containing:
            containing.sort(key=lambda r: (r.window.end - r.window.start, r.window.start))
            return containing[0]
        near = tuple(
            f"{record.subject}->{record.object}@{record.window}"
            for record in sorted(overlapping, key=lambda r: r.window.start)
        )
        return RelationRecord(subject=subject, object=object, window=window, near_misses=near)

    def relation_matrix(
        self, nation_ids: list[str], window: DateWindow
    ) -> list[list[str]]:
        """N x N matrix of labels; the diagonal is always friendly.

        The matrix is not symmetrized and no transitive fill-in is
        performed; unevaluated cells stay "undefined".
        """
        for nation_id in nation_ids:
            self.nation(nation_id)
        return [
            [self.query_relation(row, col, window).label for col in nation_ids]
            for row in nation_ids
        ]

    @staticmethod
    def _self_record(nation_id: str, window: DateWindow) -> RelationRecord:
        evaluation = evaluate(_SELF_MASSES, _SELF_WEIGHTS, DEFAULT_SIGNS)
        return RelationRecord(
            subject=nation_id,
            object=nation_id,
            window=window,
            evaluation=evaluation,
            weights=_SELF_WEIGHTS,
            signs=DEFAULT_SIGNS,
            assessment_ref="synthesized self-relation",
        )

    # -- persistence ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "nations": [
                {"id": n.id, "name": n.name, "un_member": n.un_member}
                for n in self.nations
            ],
            "records": [_record_to_dict(r) for r in self.records],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "RelationStore":
        store = cls()
        if not isinstance(doc, dict) or "nations" not in doc or "records" not in doc:
            raise SchemaError("store: expected an object with nations and records")
        for i, raw in enumerate(doc["nations"]):
            where = f"store.nations[{i}]"
            if not isinstance(raw, dict) or "id" not in raw:
                raise SchemaError(f"{where}: expected an object with an id")
            store.register_nation(
                Nation(
                    id=str(raw["id"]),
                    name=str(raw.get("name", "")),
                    un_member=bool(raw.get("un_member", True)),
                )
            )
        for i, raw in enumerate(doc["records"]):
            record = _record_from_dict(raw, f"store.records[{i}]")
            key = (record.subject, record.object, record.window.start, record.window.end)
            store._records[key] = record
        return store

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, path: str | Path) -> "RelationStore":
        text = Path(path).read_text(encoding="utf-8")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as err:
            raise SchemaError(
                f"{path}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}"
            ) from None
        return cls.from_dict(doc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelationStore):
            return NotImplemented
        return self._nations == other._nations and self._records == other._records


def _record_to_dict(record: RelationRecord) -> dict:
    evaluation = record.evaluation
    return {
        "subject": record.subject,
        "object": record.object,
        "window": window_to_dict(record.window),
        "assessment_ref": record.assessment_ref,
        "weights": record.weights.as_dict() if record.weights else None,
        "signs": record.signs.as_dict() if record.signs else None,
        "evaluation": {
            "trust_mass": evaluation.trust_mass,
            "strength": evaluation.strength,
            "label": evaluation.label.value,
            "no_hostile": evaluation.no_hostile,
            "band_label": evaluation.band_label,
            "bounds": evaluation.bounds.as_dict(),
        }
        if evaluation
        else None,
    }


def _record_from_dict(doc: dict, where: str) -> RelationRecord:
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: expected an object")
    try:
        raw_eval = doc["evaluation"]
        raw_bounds = raw_eval["bounds"]
        evaluation = TrustEvaluation(
            trust_mass=float(raw_eval["trust_mass"]),
            strength=float(raw_eval["strength"]),
            label=RelationCategory(raw_eval["label"]),
            bounds=ScalarBounds(
                lower=float(raw_bounds["lower"]),
                upper=float(raw_bounds["upper"]),
                middle_band_low=float(raw_bounds["middle_band_low"]),
                middle_band_high=float(raw_bounds["middle_band_high"]),
            ),
            no_hostile=bool(raw_eval["no_hostile"]),
            band_label=raw_eval.get("band_label"),
        )
        weights_doc = doc["weights"]
        signs_doc = doc["signs"]
        return RelationRecord(
            subject=str(doc["subject"]),
            object=str(doc["object"]),
            window=window_from_dict(doc["window"], f"{where}.window"),
            evaluation=evaluation,
            weights=WeightVector(
                hostile=float(weights_doc["hostile"]),
                neutral=float(weights_doc["neutral"]),
                friendly=float(weights_doc["friendly"]),
            ),
            signs=ScalarConfig(
                hostile=int(signs_doc["hostile"]),
                neutral=int(signs_doc["neutral"]),
                friendly=int(signs_doc["friendly"]),
            ),
            assessment_ref=doc.get("assessment_ref"),
        )
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError(f"{where}: malformed record ({err})") from None
