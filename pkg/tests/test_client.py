import threading
import time

import pytest

from pocketminer import engine
from pocketminer.client import (
    AuthRejected,
    ConnectionLost,
    Phase,
    SessionError,
    SessionState,
    StratumClient,
    StratumTimeout,
    backoff_delays,
    ingest,
)
from pocketminer.codec import JobNotification, Notify, SetDifficulty, UnknownNotification
from pocketminer.mockpool import MockPool, PoolConfig

from .helpers import ScriptedServer, standard_handshake

PREV = "00" * 32


def job(job_id, clean=False):
    return JobNotification(job_id, PREV, "01", "02", (), "20000000", "1d00ffff", "6527c0a1", clean)


def notify_params(job_id, clean=False):
    return job(job_id, clean).to_params()


def test_ingest_queue_and_clean():
    state = SessionState(phase=Phase.AUTHORIZED)
    for i in range(3):
        ingest(state, Notify(job(str(i))))
    assert state.queued_ids() == ["0", "1", "2"]
    delta = ingest(state, Notify(job("3", clean=True)))
    assert delta.cleared and state.queued_ids() == ["3"]
    assert state.current_job().job_id == "3"
    assert state.job_history == {"0", "1", "2", "3"}


def test_ingest_difficulty_binds_to_later_jobs():
    state = SessionState(phase=Phase.AUTHORIZED)
    assert state.current_difficulty == 1.0
    ingest(state, Notify(job("a")))
    ingest(state, SetDifficulty(8.0))
    ingest(state, Notify(job("b")))
    assert state.difficulty_for("a") == 1.0
    assert state.difficulty_for("b") == 8.0
    assert state.difficulty_for("unknown") == 8.0


def test_ingest_unknown_method_changes_nothing():
    state = SessionState(phase=Phase.AUTHORIZED)
    before = repr(state)
    ingest(state, UnknownNotification("client.show_message", ["hi"]))
    assert repr(state) == before


def test_backoff_sequence():
    gen = backoff_delays()
    assert [next(gen) for _ in range(9)] == [1, 2, 4, 8, 16, 32, 60, 60, 60]


def test_handshake_against_mock_pool():
    with MockPool(PoolConfig(extranonce2_size=4)) as pool:
        with StratumClient("127.0.0.1", pool.port, "w", "x", timeout=5) as client:
            state = client.handshake()
            assert state.phase is Phase.AUTHORIZED
            assert state.extranonce2_size == 4
            client.poll(1.0)
            assert state.current_job() is not None


def test_bad_password_rejected():
    config = PoolConfig(check_credentials=True, username="w", password="right")
    with MockPool(config) as pool:
        with StratumClient("127.0.0.1", pool.port, "w", "wrong", timeout=5) as client:
            with pytest.raises(AuthRejected):
                client.handshake()
            assert client.state.phase is Phase.SUBSCRIBED


def test_notify_before_subscribe_response_is_buffered():
    def script(srv):
        sub = srv.recv()
        srv.send({"id": None, "method": "mining.set_difficulty", "params": [4]})
        srv.send({"id": None, "method": "mining.notify", "params": notify_params("early")})
        srv.send({"id": sub["id"], "result": [[], "00aa", 2], "error": None})
        auth = srv.recv()
        srv.send({"id": auth["id"], "result": True, "error": None})
        srv.recv()

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=5)
    state = client.handshake()
    assert state.current_job().job_id == "early"
    assert state.difficulty_for("early") == 4.0
    client.close()
    srv.close()


def test_request_ids_increase_and_unmatched_response_dropped():
    def script(srv):
        standard_handshake(srv)
        srv.send({"id": 999, "result": True, "error": None})
        srv.send({"id": None, "method": "mining.notify", "params": notify_params("j1")})
        sub = srv.recv()
        srv.send({"id": sub["id"], "result": True, "error": None})
        srv.recv()

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=5)
    client.handshake()
    client.poll(1.0)
    share = engine.Share("j1", "00000000", "6527c0a1", 5, bytes(32))
    result = client.submit_share(share)
    assert result.accepted and result.sent and result.latency >= 0
    ids = [m["id"] for m in srv.received]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert srv.received[-1]["params"] == ["w", "j1", "00000000", "6527c0a1", "00000005"]
    client.close()
    srv.close()


def test_stale_share_not_sent():
    def script(srv):
        standard_handshake(srv)
        for i in range(3):
            srv.send({"id": None, "method": "mining.notify", "params": notify_params(f"old{i}")})
        srv.send({"id": None, "method": "mining.notify", "params": notify_params("new", clean=True)})
        srv.recv()

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=5)
    client.handshake()
    deadline = time.monotonic() + 5
    while client.state.queued_ids() != ["new"] and time.monotonic() < deadline:
        client.poll(0.2)
    assert client.state.queued_ids() == ["new"]
    result = client.submit_share(engine.Share("old1", "00000000", "6527c0a1", 1, bytes(32)))
    assert not result.accepted and not result.sent and result.error.code == 21
    client.close()
    srv.close()
    assert all(m.get("method") != "mining.submit" for m in srv.received)


def test_submit_requires_authorization():
    client = StratumClient("127.0.0.1", 1, "w", "x")
    with pytest.raises(SessionError):
        client.submit_share(engine.Share("j", "00", "00000000", 0, bytes(32)))


def test_rejected_share_reports_error():
    def script(srv):
        standard_handshake(srv)
        srv.send({"id": None, "method": "mining.notify", "params": notify_params("j1")})
        sub = srv.recv()
        srv.send({"id": sub["id"], "result": None, "error": [23, "Low difficulty share", None]})
        srv.recv()

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=5)
    client.handshake()
    client.poll(1.0)
    result = client.submit_share(engine.Share("j1", "00000000", "6527c0a1", 5, bytes(32)))
    assert not result and result.sent and result.error.code == 23
    client.close()
    srv.close()


def test_timeout():
    release = threading.Event()

    def script(srv):
        srv.recv()
        release.wait(5)

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=0.3)
    with pytest.raises(StratumTimeout):
        client.handshake()
    release.set()
    client.close()
    srv.close()


def test_connection_lost_during_submit_parks_share():
    def script(srv):
        standard_handshake(srv)
        srv.send({"id": None, "method": "mining.notify", "params": notify_params("j1")})
        srv.recv()  # the submit; hang up without answering

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=5)
    client.handshake()
    client.poll(1.0)
    share = engine.Share("j1", "00000000", "6527c0a1", 5, bytes(32))
    with pytest.raises(ConnectionLost):
        client.submit_share(share)
    assert client.parked == [share]
    with pytest.raises(ConnectionLost):
        client.poll(1.0)
    client.close()
    srv.close()


def test_garbage_lines_are_skipped():
    def script(srv):
        standard_handshake(srv)
        srv.send_raw(b"this is not json\n")
        srv.send_raw(b'{"id": null, "method": "mining.notify", "params": [1]}\n')
        srv.send({"id": None, "method": "mining.notify", "params": notify_params("ok")})
        srv.recv()

    srv = ScriptedServer(script)
    client = StratumClient("127.0.0.1", srv.port, "w", "x", timeout=5)
    client.handshake()
    deadline = time.monotonic() + 5
    while client.state.current_job() is None and time.monotonic() < deadline:
        client.poll(0.2)
    assert client.state.queued_ids() == ["ok"]
    client.close()
    srv.close()
