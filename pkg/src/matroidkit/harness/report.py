"""Running registry checks over a catalog and rendering the results."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .catalog import CatalogEntry, lex01
from .checks import REGISTRY, Options
from .profile import Profile


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckReport:
    check_id: str
    scope: str
    examined: int = 0
    filtered: int = 0
    violations: list = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "scope": self.scope,
            "examined": self.examined,
            "filtered": self.filtered,
            "violations": self.violations,
            "elapsed_ms": self.elapsed_ms,
        }


def resolve_ids(check: str) -> list[str]:
    if check == "all":
        return list(REGISTRY)
    ids = [c.strip() for c in check.split(",") if c.strip()]
    for cid in ids:
        if cid not in REGISTRY:
            raise UnknownCheck(cid)
    return ids


def _run_entry(args):
    """Worker: every requested check on one catalog entry."""
    entry, ids, opts = args
    prof = Profile(entry.matroid)
    rows = []
    for cid in ids:
        t0 = time.perf_counter()
        out = REGISTRY[cid].run(prof, opts)
        ms = (time.perf_counter() - t0) * 1000.0
        rows.append((out.examined, out.filtered, out.violations, ms))
    return rows


def verify(
    check: str,
    entries: list[CatalogEntry],
    options: Options | None = None,
    jobs: int = 1,
    fail_fast: bool = False,
    timing: bool = False,
) -> list[CheckReport]:
    """Run the named check(s) over ``entries``; results merge in catalog order.

    With ``fail_fast`` the run stops after the first entry, in catalog order,
    that produced a violation, so the output does not depend on ``jobs``.
    """
    ids = resolve_ids(check)
    opts = options or Options()
    reports = [CheckReport(cid, REGISTRY[cid].scope) for cid in ids]
    elapsed = [0.0] * len(ids)
    tasks = [(ent, ids, opts) for ent in entries]

    def consume(results):
        for ent, rows in zip(entries, results):
            hit = False
            for i, (ex, fi, viol, ms) in enumerate(rows):
                rep = reports[i]
                rep.examined += ex
                rep.filtered += fi
                elapsed[i] += ms
                for detail in viol:
                    rep.violations.append({
                        "matroid_id": ent.id,
                        "matroid_lex01": lex01(ent.matroid),
                        "detail": detail,
                    })
                    hit = True
            if hit and fail_fast:
                return

    if jobs <= 1:
        consume(_run_entry(t) for t in tasks)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            consume(pool.map(_run_entry, tasks, chunksize=4))
    if timing:
        for rep, ms in zip(reports, elapsed):
            rep.elapsed_ms = round(ms, 3)
    return reports


def render_json(reports: list[CheckReport], single: bool) -> str:
    body = reports[0].as_dict() if single else [r.as_dict() for r in reports]
    return json.dumps(body, indent=2, sort_keys=False) + "\n"


def render_text(reports: list[CheckReport]) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = (f"{status} {r.check_id}: examined={r.examined} "
                f"filtered={r.filtered} violations={len(r.violations)}")
        if r.elapsed_ms is not None:
            line += f" elapsed_ms={r.elapsed_ms}"
        lines.append(line)
        for v in r.violations[:20]:
            detail = json.dumps(v["detail"], sort_keys=True)
            lines.append(f"  {v['matroid_id']} [{v['matroid_lex01']}] {detail}")
        if len(r.violations) > 20:
            lines.append(f"  ... {len(r.violations) - 20} more")
    return "\n".join(lines) + "\n"
