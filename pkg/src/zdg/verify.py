"""Run every structural check over a seeded corpus and tally the results per check."""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from typing import Any

from .analysis import SCHEMA, analyze_digraph, analyze_semigroup
from .errors import AxiomError, TheoremViolation
from .generators import CorpusSpec, corpus
from .graph_inverse import DirectedGraph


def run_corpus(spec: CorpusSpec) -> dict[str, Any]:
    tally: dict[str, Counter] = defaultdict(Counter)
    failures = []
    errors = []
    instances = 0
    for name, obj in corpus(spec):
        instances += 1
        try:
            if isinstance(obj, DirectedGraph):
                report, _ = analyze_digraph(obj, spec.max_len, name=name)
            else:
                report, _ = analyze_semigroup(obj, name=name)
        except (AxiomError, TheoremViolation) as exc:
            errors.append({"instance": name, "error": str(exc)})
            continue
        for c in report.checks:
            key = "skipped" if c.skipped else ("passed" if c.passed else "failed")
            tally[c.name][key] += 1
            if key == "failed":
                failures.append({"instance": name, "check": c.name,
                                 "witness": c.witness, "note": c.note})
    theorems = {k: {"passed": v["passed"], "failed": v["failed"], "skipped": v["skipped"]}
                for k, v in sorted(tally.items())}
    return {
        "schema": SCHEMA,
        "family": spec.family,
        "seed": spec.seed,
        "count": spec.count,
        "instances": instances,
        "theorems": theorems,
        "failures": failures,
        "errors": errors,
        "ok": not failures and not errors,
    }


def format_summary(summary: dict[str, Any]) -> str:
    lines = [f"family={summary['family']} seed={summary['seed']} instances={summary['instances']}"]
    width = max((len(k) for k in summary["theorems"]), default=10)
    for name, c in summary["theorems"].items():
        status = "PASS" if not c["failed"] else "FAIL"
        extra = f" skipped={c['skipped']}" if c["skipped"] else ""
        lines.append(f"  {status} {name.ljust(width)} passed={c['passed']} failed={c['failed']}{extra}")
    for err in summary["errors"]:
        lines.append(f"  ERROR {err['instance']}: {err['error']}")
    for f in summary["failures"][:20]:
        lines.append(f"  failure {f['instance']} {f['check']}: {json.dumps(f['witness'], default=str)}")
    return "\n".join(lines) + "\n"
