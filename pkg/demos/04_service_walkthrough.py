"""The HTTP API, driven in-process.

The same evaluation pipeline sits behind a small JSON service (this is
what the web client talks to).  This script builds the app over a dataset
directory and walks the three endpoints without opening a socket.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from trendcheck.sampledata import write_hourly_temperatures, write_toy_series
from trendcheck.service import create_app

data_dir = Path(__file__).parent / "_data"
data_dir.mkdir(exist_ok=True)
if not (data_dir / "temperature.csv").exists():
    write_hourly_temperatures(data_dir / "temperature.csv")
write_toy_series(data_dir / "toy.csv")

client = TestClient(create_app(data_dir))

print("GET /api/datasets")
for entry in client.get("/api/datasets").json():
    kinds = {c["name"]: c["kind"] for c in entry["columns"]}
    print(f"  {entry['id']}: {entry['row_count']} rows, {kinds}")
print()

print("GET /api/datasets/temperature/preview?limit=3")
print("  " + client.get("/api/datasets/temperature/preview", params={"limit": 3}).text.replace("\n", "\n  "))

print("POST /api/evaluate  (task=all, seasonal claim)")
response = client.post("/api/evaluate", json={
    "dataset_id": "temperature",
    "task": "all",
    "target_column": "Detroit",
    "trend_column": "datetime",
    "trend_is_date": True,
    "bounds": {"lower": None, "upper": 0},
    "regions": {
        "begin": {"from": "2012-12-01 00:00:00", "to": "2013-03-01 01:00:00"},
        "end": {"from": "2013-06-01 00:00:00", "to": "2013-09-01 01:00:00"},
    },
    "mss_width": 40,
    "tightest_support": 0.9,
    "sampling": {"seed": 11},
})
body = response.json()
print(f"  support (exact)    : {body['support']['exact']['support']:.3f}")
print(f"  support (baseline) : {body['support']['exact_baseline']['support']:.3f}")
for est in body["support"]["random"]:
    print(f"  support (random)   : N={est['budget']:<7} -> {est['estimate']:.3f}")
print(f"  MSS                : {json.dumps(body['mss'])}")
print(f"  tightest           : {json.dumps(body['tightest'])}")
print(f"  echoed seed        : {body['echo']['sampling']['seed']}")
print()
print("Replaying the request (same seed) returns a byte-identical payload;")
print("the CLI's --json mode prints this same object.")
