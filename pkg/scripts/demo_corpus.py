#!/usr/bin/env python3
"""Generate a demo corpus, build a store, and print the overview report.

Usage: python3 scripts/demo_corpus.py [out_dir]

Leaves behind out_dir/logs/*.vlog, out_dir/store.json, and
out_dir/annotations.json, ready for `vislog serve --store out_dir/store.json
--annotations out_dir/annotations.json`.
"""

import json
import subprocess
import sys
from pathlib import Path

from vislog.classifier import UserType
from vislog.simgen import GeneratorSpec, write_corpus

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_data")
logs = out / "logs"

spec = GeneratorSpec(
    seed=2024,
    user_counts={
        UserType.DEMO: 55,
        UserType.DATA_STRUGGLER: 5,
        UserType.SS_EXPLORER: 15,
        UserType.MS_EXPLORER: 25,
    },
)
truth = write_corpus(spec, logs)
print(f"generated {len(truth.users)} users into {logs}")

annotations = out / "annotations.json"
annotations.write_text(json.dumps([
    {"label": "network vis course", "kind": "Course",
     "start_date": "2024-02-05", "end_date": "2024-03-18"},
    {"label": "spring workshop", "kind": "Workshop",
     "start_date": "2024-04-10", "end_date": "2024-04-11"},
], indent=2))

store = out / "store.json"
subprocess.run([sys.executable, "-m", "vislog.cli", "ingest", str(logs), "--store", str(store)], check=True)
subprocess.run([sys.executable, "-m", "vislog.cli", "report", "--store", str(store),
                "--annotations", str(annotations)], check=True)
print(f"\nnext: vislog serve --store {store} --annotations {annotations}")
