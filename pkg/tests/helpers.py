"""A one-connection TCP server driven by a script function, for client tests."""
import json
import socket
import threading


class ScriptedServer:
    def __init__(self, script):
        self.script = script
        self.sock = socket.create_server(("127.0.0.1", 0))
        self.port = self.sock.getsockname()[1]
        self.received = []
        self.error = None
        self.thread = threading.Thread(target=self._run, daemon=True)
        self.thread.start()

    def _run(self):
        conn, _ = self.sock.accept()
        self.conn = conn
        self.reader = conn.makefile("rb")
        try:
            self.script(self)
        except Exception as exc:  # surfaced by close()
            self.error = exc
        finally:
            try:
                conn.shutdown(socket.SHUT_RDWR)
            except OSError:
                pass
            conn.close()

    def recv(self):
        line = self.reader.readline()
        if not line:
            return None
        msg = json.loads(line)
        self.received.append(msg)
        return msg

    def send(self, obj):
        self.conn.sendall((json.dumps(obj) + "\n").encode())

    def send_raw(self, data: bytes):
        self.conn.sendall(data)

    def close(self):
        self.thread.join(timeout=5)
        self.sock.close()
        if self.error:
            raise self.error


def standard_handshake(srv, extranonce1="0a0b0c0d", size=4, auth=True):
    sub = srv.recv()
    srv.send({"id": sub["id"], "result": [[["mining.notify", "x"]], extranonce1, size], "error": None})
    auth_req = srv.recv()
    srv.send({"id": auth_req["id"], "result": auth, "error": None})
    return sub, auth_req
