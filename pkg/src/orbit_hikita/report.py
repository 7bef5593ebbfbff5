"""Report assembly and rendering (JSON or aligned text)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .checks import DISCREPANCY, FAIL, PASS, SKIP, CheckResult
from .groebner import Limits

SCHEMA_KEYS = ("version", "seed", "limits", "checks", "summary")


@dataclass
class Report:
    version: str
    seed: int
    limits: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "discrepancy": 0, "skip": 0}
        for c in self.checks:
            counts[c.status.lower()] += 1
        return counts

    def exit_code(self, strict: bool = False) -> int:
        bad = {FAIL, DISCREPANCY, SKIP} if strict else {FAIL}
        return 1 if any(c.status in bad for c in self.checks) else 0

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "version": self.version,
            "seed": self.seed,
            "limits": self.limits,
            "checks": [c.as_dict(timing) for c in self.checks],
            "summary": self.summary,
        }


def build_report(results, seed: int = 0, limits: Limits | None = None) -> Report:
    from . import __version__

    return Report(__version__, seed, (limits or Limits()).as_dict(), list(results))


def _one_line(c: CheckResult) -> str:
    if c.status == SKIP:
        return c.reason or ""
    exp = c.expected.get("value")
    if c.status == PASS:
        return f"expected {json.dumps(exp, sort_keys=True)}"
    w = c.witnesses[0] if c.witnesses else {}
    return json.dumps(w, sort_keys=True)


def emit_report(r: Report, fmt: str = "json", timing: bool = True) -> bytes:
    if fmt == "json":
        return (json.dumps(r.as_dict(timing), indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    rows = [(c.status, c.id, f"{c.millis if timing else 0}ms", _one_line(c)) for c in r.checks]
    w_id = max((len(x[1]) for x in rows), default=2)
    w_ms = max((len(x[2]) for x in rows), default=3)
    lines = [f"orbit-hikita {r.version}  seed={r.seed}  limits={json.dumps(r.limits, sort_keys=True)}"]
    for status, cid, ms, note in rows:
        lines.append(f"{status:<11} {cid:<{w_id}}  {ms:>{w_ms}}  {note}".rstrip())
    s = r.summary
    lines.append(f"pass={s['pass']} fail={s['fail']} discrepancy={s['discrepancy']} skip={s['skip']}")
    return ("\n".join(lines) + "\n").encode()
