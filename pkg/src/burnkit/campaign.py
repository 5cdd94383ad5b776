"""Resumable exhaustive sweeps over trees with a non-leaf degree floor."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .enumeration import Code, code_in_family, code_to_graph, family_codes, nonleaf_count
from .exact import burns_within, verify_schedule
from .intmath import ceil_sqrt
from .trees import DegreeProfile, nonleaf_upper_bound, thm41_predicate

CHECKS = ("exact-well-burnable", "thm41", "handshake")
# below this n (or for d = 2) all free trees are generated and filtered
PRUNE_FROM_N = 13

TALLY_KEYS = ("seen", "in_family", "thm41_true", "exactly_verified", "handshake_ok", "max_nonleaf")


class CampaignMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CampaignSpec:
    n_min: int
    n_max: int
    d: int = 2
    checks: tuple[str, ...] = CHECKS
    checkpoint_interval: int = 1000

    def __post_init__(self):
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.checkpoint_interval < 1:
            raise ValueError("checkpoint_interval must be positive")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")
        object.__setattr__(self, "checks", tuple(sorted(set(self.checks))))

    def to_dict(self) -> dict:
        return {"n_min": self.n_min, "n_max": self.n_max, "d": self.d,
                "checks": list(self.checks), "checkpoint_interval": self.checkpoint_interval}

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignSpec":
        return cls(int(data["n_min"]), int(data["n_max"]), int(data.get("d", 2)),
                   tuple(data.get("checks", CHECKS)), int(data.get("checkpoint_interval", 1000)))

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


def _empty_tally(n: int, d: int) -> dict:
    t = {k: 0 for k in TALLY_KEYS}
    t["nonleaf_bound"] = nonleaf_upper_bound(n, d)
    return t


@dataclass
class CampaignState:
    spec_digest: str
    n: int
    cursor: Code | None = None
    per_n: dict[int, dict] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    done: bool = False

    def totals(self) -> dict:
        out = {k: 0 for k in TALLY_KEYS if k != "max_nonleaf"}
        for t in self.per_n.values():
            for k in out:
                out[k] += t[k]
        out["counterexamples"] = len(self.counterexamples)
        return out

    def to_json(self) -> str:
        doc = {
            "spec_digest": self.spec_digest,
            "n": self.n,
            "cursor_code": list(self.cursor) if self.cursor is not None else None,
            "tallies": {str(n): t for n, t in sorted(self.per_n.items())},
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed, 3),
            "done": self.done,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CampaignState":
        doc = json.loads(text)
        cursor = doc.get("cursor_code")
        return cls(
            spec_digest=doc["spec_digest"],
            n=int(doc["n"]),
            cursor=tuple(cursor) if cursor is not None else None,
            per_n={int(n): t for n, t in doc.get("tallies", {}).items()},
            counterexamples=list(doc.get("counterexamples", [])),
            elapsed=float(doc.get("elapsed_seconds", 0.0)),
            done=bool(doc.get("done", False)),
        )


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def handshake_ok(degrees: list[int]) -> bool:
    n = len(degrees)
    if n == 1:
        return degrees == [0]
    return sum(degrees) == 2 * (n - 1) and n == 2 + sum(k - 1 for k in degrees if k >= 2)


def check_tree(code: Code, d: int, checks: Iterable[str]) -> tuple[dict, list[dict]]:
    """Checks on a single tree. Returns (tally increments, counterexample records)."""
    checks = set(checks)
    n = len(code)
    inc = {k: 0 for k in TALLY_KEYS}
    inc["seen"] = 1
    bad: list[dict] = []
    if not code_in_family(code, d):
        return inc, bad
    inc["in_family"] = 1
    inc["max_nonleaf"] = nonleaf_count(code)
    g = code_to_graph(code)
    degrees = g.degrees()
    if "handshake" in checks:
        if handshake_ok(degrees):
            inc["handshake_ok"] = 1
        else:
            bad.append({"n": n, "code": list(code), "check": "handshake"})
    thm41 = False
    if "thm41" in checks and n >= 2 and inc["max_nonleaf"] > 0:
        counts: dict[int, int] = {}
        for k in degrees:
            counts[k] = counts.get(k, 0) + 1
        thm41 = thm41_predicate(DegreeProfile(n, counts))
        inc["thm41_true"] = int(thm41)
    if "exact-well-burnable" in checks:
        sched = burns_within(g, ceil_sqrt(n))
        if sched is not None and verify_schedule(g, sched):
            inc["exactly_verified"] = 1
        else:
            bad.append({"n": n, "code": list(code), "check": "exact-well-burnable"})
            if thm41:
                bad.append({"n": n, "code": list(code), "check": "thm41"})
    return inc, bad


def _check_batch(args) -> tuple[dict, list[dict]]:
    codes, d, checks = args
    total = {k: 0 for k in TALLY_KEYS}
    bad: list[dict] = []
    for code in codes:
        inc, b = check_tree(code, d, checks)
        for k in TALLY_KEYS:
            if k == "max_nonleaf":
                total[k] = max(total[k], inc[k])
            else:
                total[k] += inc[k]
        bad.extend(b)
    return total, bad


def merge_tally(into: dict, inc: dict) -> None:
    """Order-independent merge: sums, except max_nonleaf which takes the max."""
    for k in TALLY_KEYS:
        if k == "max_nonleaf":
            into[k] = max(into[k], inc[k])
        else:
            into[k] += inc[k]


def _chunks(it: Iterator[Code], size: int) -> Iterator[list[Code]]:
    while True:
        batch = list(islice(it, size))
        if not batch:
            return
        yield batch


def uses_pruning(n: int, d: int) -> bool:
    return d >= 3 and n >= PRUNE_FROM_N


def run_campaign(
    spec: CampaignSpec,
    resume: CampaignState | None = None,
    checkpoint_path: str | os.PathLike | None = None,
    jobs: int = 1,
    max_checkpoints: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> CampaignState:
    """Sweep n = n_min..n_max; checkpoint after every batch and at the end of each n.

    ``max_checkpoints`` stops the run right after that many checkpoint writes
    (used to simulate interruption); the returned state then has ``done=False``.
    """
    digest = spec.digest()
    if resume is None:
        state = CampaignState(digest, spec.n_min)
    else:
        if resume.spec_digest != digest:
            raise CampaignMismatch("checkpoint was written for a different campaign spec")
        state = resume
        if state.done:
            return state
    started = time.perf_counter()
    written = 0

    def checkpoint() -> bool:
        nonlocal written, started
        now = time.perf_counter()
        state.elapsed += now - started
        started = now
        if checkpoint_path is not None:
            write_atomic(checkpoint_path, state.to_json())
        written += 1
        return max_checkpoints is not None and written >= max_checkpoints

    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(state.n, spec.n_max + 1):
            tally = state.per_n.setdefault(n, _empty_tally(n, spec.d))
            start_after = state.cursor if n == state.n else None
            stream = family_codes(n, spec.d, uses_pruning(n, spec.d), start_after)
            batches = _chunks(stream, spec.checkpoint_interval)
            if pool is None:
                results = ((b, _check_batch((b, spec.d, spec.checks))) for b in batches)
            else:
                results = _ordered_parallel(pool, batches, spec, jobs)
            for batch, (inc, bad) in results:
                merge_tally(tally, inc)
                state.counterexamples.extend(bad)
                state.n, state.cursor = n, batch[-1]
                if checkpoint():
                    return state
            if progress is not None:
                progress(_progress_line(n, tally, len(state.counterexamples)))
            state.n, state.cursor = n + 1, None
            if n == spec.n_max:
                state.done = True
            if checkpoint() and not state.done:
                return state
        state.done = True
        return state
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def _ordered_parallel(pool, batches, spec, jobs):
    pending = []
    for batch in batches:
        pending.append((batch, pool.submit(_check_batch, (batch, spec.d, spec.checks))))
        if len(pending) >= 2 * jobs:
            b, fut = pending.pop(0)
            yield b, fut.result()
    for b, fut in pending:
        yield b, fut.result()


def _progress_line(n: int, t: dict, bad: int) -> str:
    return (f"n={n} seen={t['seen']} in_family={t['in_family']} "
            f"exact={t['exactly_verified']} thm41={t['thm41_true']} "
            f"max_nonleaf={t['max_nonleaf']}/{t['nonleaf_bound']} counterexamples={bad}")


def campaign_report(spec: CampaignSpec, state: CampaignState) -> dict:
    return {
        "spec": spec.to_dict(),
        "spec_digest": state.spec_digest,
        "complete": state.done,
        "per_n": {str(n): dict(t, generation="pruned" if uses_pruning(n, spec.d) else "filter")
                  for n, t in sorted(state.per_n.items())},
        "totals": state.totals(),
        "counterexamples": state.counterexamples,
    }


def replay_counterexample(entry: dict, d: int) -> bool:
    """True if the recorded tree still fails its recorded check."""
    code = tuple(entry["code"])
    _, bad = check_tree(code, d, CHECKS)
    return any(b["check"] == entry["check"] for b in bad)
