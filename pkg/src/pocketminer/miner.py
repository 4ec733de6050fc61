"""The mining loop: session coordination plus parallel nonce search.

The coordinator thread owns the :class:`~pocketminer.client.StratumClient`
and the session state. Search workers only ever see frozen
:class:`~pocketminer.engine.WorkUnit` snapshots and hand back
:class:`~pocketminer.engine.SearchOutcome` values.
"""
from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import engine
from ._log import log_event
from .client import (
    DEFAULT_USER_AGENT,
    AuthRejected,
    ConnectionLost,
    StratumClient,
    StratumClientError,
    StratumTimeout,
    backoff_delays,
)
from .sha256 import header_midstate

logger = logging.getLogger("pocketminer.miner")

EXIT_OK = 0
EXIT_AUTH_REJECTED = 1
EXIT_CONNECTION = 3

DEFAULT_CHUNK = 1 << 16


@dataclass
class MineSummary:
    accepted: int = 0
    rejected: int = 0
    stale: int = 0
    blocks: int = 0
    hashes: int = 0
    elapsed: float = 0.0
    reconnects: int = 0
    exit_code: int = EXIT_OK
    submitted: list = field(default_factory=list)

    @property
    def hashrate(self) -> float:
        return self.hashes / self.elapsed if self.elapsed > 0 else 0.0


class _JobCursor:
    """Nonce ranges for one (job, extranonce2) pair, split across workers."""

    def __init__(self, work: engine.WorkUnit, workers: int):
        self.work = work
        self.midstate = header_midstate(work.header_prefix)
        self.ranges = [[start, start + count] for start, count in engine.split_range(0, engine.NONCE_SPACE, workers)]

    @property
    def exhausted(self) -> bool:
        return all(lo >= hi for lo, hi in self.ranges)


def _search(work: engine.WorkUnit, midstate, start: int, count: int, implementation: str) -> engine.SearchOutcome:
    return engine.search_nonce(work.header_prefix, work.share_target, start, count, implementation, midstate)


class Miner:
    def __init__(self, host: str, port: int, username: str, password: str, *,
                 workers: int = 1, user_agent: str = DEFAULT_USER_AGENT, timeout: float = 10.0,
                 chunk: int = DEFAULT_CHUNK, implementation: str = "optimized",
                 extranonce2_seed: int | None = None, reconnect: bool = True,
                 max_reconnects: int | None = None):
        if workers < 1:
            raise ValueError("workers must be at least 1")
        self.host = host
        self.port = port
        self.username = username
        self.password = password
        self.workers = workers
        self.user_agent = user_agent
        self.timeout = timeout
        self.chunk = chunk
        self.implementation = implementation
        self.extranonce2_seed = extranonce2_seed
        self.reconnect = reconnect
        self.max_reconnects = max_reconnects
        self.summary = MineSummary()
        self.client: StratumClient | None = None
        self._stop = threading.Event()
        self._started = time.monotonic()

    def stop(self) -> None:
        """Ask a running :meth:`run` to finish after the current chunk."""
        self._stop.set()

    def _new_client(self) -> StratumClient:
        client = StratumClient(self.host, self.port, self.username, self.password,
                               user_agent=self.user_agent, timeout=self.timeout)
        client.handshake()
        return client

    def _work_for(self, job, extranonce2: str) -> engine.WorkUnit:
        state = self.client.state
        return engine.make_work(job, state.extranonce1, extranonce2, state.difficulty_for(job.job_id),
                                state.extranonce2_size)

    def run(self, duration: float | None = None, max_shares: int | None = None) -> MineSummary:
        summary = self.summary
        started = self._started = time.monotonic()
        delays = backoff_delays()
        try:
            self.client = self._new_client()
        except AuthRejected:
            summary.exit_code = EXIT_AUTH_REJECTED
            return summary
        except (OSError, StratumClientError) as exc:
            log_event(logger, "connect.failed", logging.ERROR, error=exc)
            summary.exit_code = EXIT_CONNECTION
            return summary

        def done() -> bool:
            if self._stop.is_set():
                return True
            if max_shares is not None and summary.accepted >= max_shares:
                return True
            return duration is not None and time.monotonic() - started >= duration

        with ThreadPoolExecutor(self.workers, thread_name_prefix="search") as pool:
            while not done():
                try:
                    self._mine_until_switch(pool, done)
                    delays = backoff_delays()
                except (ConnectionLost, StratumTimeout, OSError) as exc:
                    log_event(logger, "connection.lost", logging.WARNING, error=exc)
                    self.client.close()
                    if self.client.parked:
                        # extranonce1 is per-connection, so parked shares cannot be replayed
                        log_event(logger, "shares.dropped", logging.WARNING, count=len(self.client.parked))
                    if not self.reconnect or (
                        self.max_reconnects is not None and summary.reconnects >= self.max_reconnects
                    ):
                        summary.exit_code = EXIT_CONNECTION
                        break
                    while not done():
                        delay = next(delays)
                        log_event(logger, "reconnect.wait", seconds=delay)
                        if self._stop.wait(delay):
                            break
                        summary.reconnects += 1
                        try:
                            self.client = self._new_client()
                            break
                        except AuthRejected:
                            summary.exit_code = EXIT_AUTH_REJECTED
                            return self._finish(started)
                        except (OSError, StratumClientError) as exc:
                            log_event(logger, "reconnect.failed", logging.WARNING, error=exc)
                            if self.max_reconnects is not None and summary.reconnects >= self.max_reconnects:
                                summary.exit_code = EXIT_CONNECTION
                                return self._finish(started)
        return self._finish(started)

    def _finish(self, started: float) -> MineSummary:
        summary = self.summary
        summary.elapsed = time.monotonic() - started
        if self.client is not None:
            self.client.close()
        log_event(
            logger, "mine.summary", accepted=summary.accepted, rejected=summary.rejected, stale=summary.stale,
            blocks=summary.blocks, hashes=summary.hashes, hashrate=f"{summary.hashrate:.0f}",
            exit_code=summary.exit_code,
        )
        return summary

    def _mine_until_switch(self, pool: ThreadPoolExecutor, done) -> None:
        """Work the newest job until it changes, the session drops, or we are done."""
        client = self.client
        client.poll(0)
        job = client.state.current_job()
        while job is None:
            client.poll(0.5)
            job = client.state.current_job()
            if done():
                return
        extranonce2 = engine.initial_extranonce2(client.state.extranonce2_size, self.extranonce2_seed)
        cursor = _JobCursor(self._work_for(job, extranonce2), self.workers)
        log_event(logger, "job.start", job_id=job.job_id, extranonce2=extranonce2,
                  share_target=f"{cursor.work.share_target:064x}")

        while not done():
            work = cursor.work
            futures = []
            for idx, (lo, hi) in enumerate(cursor.ranges):
                if lo < hi:
                    count = min(self.chunk, hi - lo)
                    futures.append((idx, pool.submit(_search, work, cursor.midstate, lo, count, self.implementation)))
            for idx, future in futures:
                outcome = future.result()
                self.summary.hashes += outcome.hashes_attempted
                cursor.ranges[idx][0] += outcome.hashes_attempted
                share = engine.share_from_outcome(work, outcome)
                if share is not None:
                    self._submit(share, work)

            client.poll(0)
            newest = client.state.current_job()
            if newest is not job:
                log_event(logger, "job.switch", old=job.job_id, new=newest.job_id if newest else None,
                          clean=bool(newest and newest.clean_jobs))
                return
            if cursor.exhausted:
                extranonce2 = engine.next_extranonce2(extranonce2, client.state.extranonce2_size)
                cursor = _JobCursor(self._work_for(job, extranonce2), self.workers)
                log_event(logger, "extranonce2.roll", job_id=job.job_id, extranonce2=extranonce2)

    def _submit(self, share: engine.Share, work: engine.WorkUnit) -> None:
        if engine.hash_meets_target(share.hash, work.network_target):
            self.summary.blocks += 1
            log_event(logger, "block.solved", job_id=share.job_id, hash=share.hash[::-1].hex())
        result = self.client.submit_share(share)
        self.summary.submitted.append(share)
        if result.accepted:
            self.summary.accepted += 1
        elif not result.sent:
            self.summary.stale += 1
        else:
            self.summary.rejected += 1


def mine(host: str, port: int, username: str, password: str, *, duration: float | None = None,
         max_shares: int | None = None, **options) -> MineSummary:
    return Miner(host, port, username, password, **options).run(duration=duration, max_shares=max_shares)
