"""Restricted M(p) sweeps over prime pairs q < r, persisted as JSON lines.

Each output line is one :class:`ScanRecord`.  Work is split statically by q,
results are merged in canonical (q, r) order and the final file is rewritten
sorted, so its bytes do not depend on the worker count or on how many times
the run was resumed.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import config
from .bounds import bounds_report, corrected_beiter_cap
from .errors import CycloError, InvalidArgument, ResourceLimitError
from .residue import is_prime, primes_up_to
from .ternary import TernaryTriple, height

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class CorrectedBeiterViolation(CycloError):
    def __init__(self, record: "ScanRecord"):
        self.record = record
        super().__init__(
            f"height {record.height} of ({record.p}, {record.q}, {record.r}) "
            f"exceeds floor(2p/3) = {record.corrected_cap}"
        )


@dataclass(frozen=True)
class ScanRecord:
    schema_version: int
    p: int
    q: int
    r: int
    height: int
    witness_exponent: int
    bzdega: int
    corrected_cap: int
    beiter_violated: bool
    engine_ms: float | None

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        raw = json.loads(line)
        names = [f.name for f in fields(cls)]
        if list(raw) != names:
            raise ValueError(f"unexpected record fields {list(raw)}")
        if raw["schema_version"] != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {raw['schema_version']}")
        return cls(**raw)

    @property
    def key(self) -> tuple[int, int]:
        return (self.q, self.r)


@dataclass(frozen=True)
class ScanSummary:
    p: int
    q_max: int
    r_max: int
    restricted_M: int
    argmax: tuple[int, int] | None
    triples_scanned: int
    beiter_violations: int


def compute_record(p: int, q: int, r: int, timings: bool = False) -> ScanRecord:
    t = TernaryTriple.of(p, q, r)
    start = time.perf_counter()
    rep = height(t, t.support())
    elapsed = (time.perf_counter() - start) * 1000.0
    b = bounds_report(t, rep.height)
    return ScanRecord(
        schema_version=SCHEMA_VERSION,
        p=p, q=q, r=r,
        height=rep.height,
        witness_exponent=rep.witness_exponent,
        bzdega=b.bzdega,
        corrected_cap=b.corrected_beiter,
        beiter_violated=b.beiter_violated,
        engine_ms=round(elapsed, 3) if timings else None,
    )


def scan_grid(p: int, q_max: int, r_max: int) -> list[tuple[int, list[int]]]:
    """Rows ``(q, [r, ...])`` of the sweep, both ascending."""
    primes = primes_up_to(max(q_max, r_max))
    qs = [q for q in primes if p < q <= q_max]
    return [(q, [r for r in primes if q < r <= r_max]) for q in qs]


def _scan_row(args: tuple[int, int, tuple[int, ...], bool]) -> list[ScanRecord]:
    p, q, rs, timings = args
    return [compute_record(p, q, r, timings) for r in rs]


def load_records(path: str | os.PathLike) -> dict[tuple[int, int], ScanRecord]:
    """Records already on disk keyed by (q, r); unparsable lines are dropped.

    A run killed mid-write leaves at most one truncated trailing line, which
    is simply recomputed.
    """
    out: dict[tuple[int, int], ScanRecord] = {}
    path = Path(path)
    if not path.exists():
        return out
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = ScanRecord.from_json(line)
            except (ValueError, TypeError) as exc:
                log.warning("%s:%d: skipping unreadable record (%s)", path, lineno, exc)
                continue
            out[rec.key] = rec
    return out


def write_records(path: str | os.PathLike, records: Iterable[ScanRecord]) -> None:
    """Atomically replace ``path`` with ``records`` sorted by (q, r)."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with tmp.open("w", encoding="utf-8") as fh:
        for rec in sorted(records, key=lambda x: x.key):
            fh.write(rec.to_json() + "\n")
    os.replace(tmp, path)


def summarize(p: int, q_max: int, r_max: int, records: Iterable[ScanRecord]) -> ScanSummary:
    best, arg, count, beiter = 0, None, 0, 0
    for rec in sorted(records, key=lambda x: x.key):
        count += 1
        beiter += rec.beiter_violated
        if rec.height > best:
            best, arg = rec.height, rec.key
    return ScanSummary(p, q_max, r_max, best, arg, count, beiter)


def _rows(tasks, jobs: int) -> Iterator[list[ScanRecord]]:
    if jobs <= 1 or len(tasks) <= 1:
        yield from map(_scan_row, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order: the merge stays canonical
        yield from pool.map(_scan_row, tasks)


def run_scan(
    p: int,
    q_max: int,
    r_max: int,
    jobs: int = 1,
    out_path: str | os.PathLike | None = None,
    resume: bool = False,
    timings: bool = False,
    on_row: Callable[[int, list[ScanRecord]], None] | None = None,
) -> ScanSummary:
    if p % 2 == 0 or not is_prime(p):
        raise InvalidArgument(f"p={p} must be an odd prime")
    if q_max > r_max:
        raise InvalidArgument(f"q_max={q_max} exceeds r_max={r_max}")
    if jobs < 1:
        raise InvalidArgument("jobs must be at least 1")
    if resume and out_path is None:
        raise InvalidArgument("resume needs an output path")

    grid = scan_grid(p, q_max, r_max)
    cap = config.max_degree(config.ENGINE_MAX_DEGREE)
    worst = max(((p - 1) * (q - 1) * (rs[-1] - 1) for q, rs in grid if rs), default=0)
    if worst > cap:
        raise ResourceLimitError(f"largest triple has degree {worst}, cap is {cap}")

    done: dict[tuple[int, int], ScanRecord] = {}
    if out_path is not None and resume:
        done = {k: v for k, v in load_records(out_path).items() if v.p == p}
        # drop a possibly truncated tail before appending
        write_records(out_path, done.values())
    elif out_path is not None:
        Path(out_path).write_text("", encoding="utf-8")

    tasks = []
    for q, rs in grid:
        todo = tuple(r for r in rs if (q, r) not in done)
        if todo:
            tasks.append((p, q, todo, timings))
    log.info("scan p=%d: %d rows to compute, %d records reused", p, len(tasks), len(done))

    records = dict(done)
    cap_p = corrected_beiter_cap(p)
    sink = Path(out_path).open("a", encoding="utf-8") if out_path is not None else None
    try:
        for task, row in zip(tasks, _rows(tasks, jobs)):
            for rec in row:
                if rec.height > cap_p:
                    raise CorrectedBeiterViolation(rec)
            if sink is not None:
                sink.writelines(rec.to_json() + "\n" for rec in row)
                sink.flush()
            for rec in row:
                records[rec.key] = rec
            if on_row is not None:
                on_row(task[1], row)
    finally:
        if sink is not None:
            sink.close()

    if out_path is not None:
        write_records(out_path, records.values())
    return summarize(p, q_max, r_max, records.values())
