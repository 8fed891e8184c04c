"""Directed relation store: registry, queries, matrix, persistence.

Perceptions are directed and never inferred: evaluating what USA thinks
of GBR says nothing about the reverse, self-relations are always
friendly, and pairs nobody evaluated stay explicitly undefined.
"""

import datetime as dt
import pathlib
import tempfile

import trustrel as tr

REPO = pathlib.Path(__file__).resolve().parents[1]
WINDOW = tr.DateWindow(dt.date(2001, 1, 1), dt.date(2005, 12, 31))

store = tr.RelationStore()
store.register_nation(tr.Nation("USA", "United States of America", un_member=True))
store.register_nation(tr.Nation("GBR", "Great Britain", un_member=True))
store.register_nation(tr.Nation("FRA", "France", un_member=True))
print("registered:", [n.id for n in store.nations])

catalog = tr.default_catalog()
assessment = tr.load_assessment(REPO / "fixtures" / "usa_gbr_2001_2005.json")
record = store.evaluate_relation(
    "USA", "GBR", assessment, catalog, tr.WeightVector(0.40, 0.20, 0.40)
)
print(f"stored USA->GBR: {record.label} (trust mass {record.evaluation.trust_mass:+.4f})")
print()

# Directionality: the reverse perception was never evaluated.
reverse = store.query_relation("GBR", "USA", WINDOW)
print(f"GBR->USA: {reverse.label}")

# Reflexivity: a nation toward itself is friendly without any record.
print(f"USA->USA: {store.query_relation('USA', 'USA', WINDOW).label}")

# A narrower query window is answered by the containing record.
narrow = tr.DateWindow(dt.date(2002, 1, 1), dt.date(2003, 12, 31))
print(f"USA->GBR during {narrow}: {store.query_relation('USA', 'GBR', narrow).label}")

# An overlapping-but-not-contained window stays undefined, with the
# nearby record listed for diagnosis.
shifted = tr.DateWindow(dt.date(2004, 1, 1), dt.date(2007, 12, 31))
miss = store.query_relation("USA", "GBR", shifted)
print(f"USA->GBR during {shifted}: {miss.label}; near misses: {list(miss.near_misses)}")
print()

print("relation matrix over 2001-2005:")
ids = [n.id for n in store.nations]
for nation_id, row in zip(ids, store.relation_matrix(ids, WINDOW)):
    print(f"  {nation_id}: {row}")
print()

# The whole store serializes to one JSON document and loads back equal.
with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "store.json"
    store.save(path)
    loaded = tr.RelationStore.load(path)
    print(f"saved to JSON and reloaded: stores equal = {loaded == store}")
