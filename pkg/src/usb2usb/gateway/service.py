"""Local HTTP + event-stream service over one Bridge.

Endpoints (JSON bodies, snake_case fields):

    GET  /v1/ports
    POST /v1/ports/{A|B}/attach      {"image": path, "read_only": bool}
    POST /v1/ports/{A|B}/detach
    GET  /v1/fs/{A|B}?path=/dir
    GET  /v1/jobs
    POST /v1/jobs                    {"src_port", "src_path", "dst_port",
                                      "dst_path", "overwrite", "recursive"}
    GET  /v1/jobs/{id}
    POST /v1/jobs/{id}/cancel
    GET  /v1/events                  (text/event-stream)

Errors: 400 malformed, 404 unknown port/job/path, 409 state conflicts
(port occupied, port not ready, exists without overwrite), 507 dest-full.
Binds loopback by default; no auth (local single-operator tool).
"""

import json
import threading
from dataclasses import asdict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .. import fatfs
from ..blockdev import BlockDeviceError
from ..bridge import (
    BridgeError,
    DestFullError,
    NoSuchJobError,
    PortNotReadyError,
    SamePortError,
    SourceInvalidError,
)
from ..usb.bus import Port, PortEmptyError, PortOccupiedError
from . import state as state_mod

MAX_BODY = 1 << 20
EVENT_BUFFER = 1024

_ERROR_MAP = [
    (fatfs.NotFoundError, 404, "not-found"),
    (fatfs.NotADirectoryError, 404, "not-found"),
    (NoSuchJobError, 404, "no-such-job"),
    (FileNotFoundError, 404, "image-not-found"),
    (PortOccupiedError, 409, "port-occupied"),
    (PortEmptyError, 409, "port-empty"),
    (PortNotReadyError, 409, "port-not-ready"),
    (fatfs.ExistsError, 409, "exists"),
    (DestFullError, 507, "dest-full"),
    (fatfs.DiskFullError, 507, "dest-full"),
    (SamePortError, 400, "same-port"),
    (SourceInvalidError, 400, "bad-source"),
    (fatfs.NameInvalidError, 400, "bad-name"),
    (fatfs.FatError, 409, "volume-error"),
    (BlockDeviceError, 400, "bad-image"),
    (BridgeError, 400, "bad-request"),
]


class _ApiError(Exception):
    def __init__(self, status, code, message):
        super().__init__(message)
        self.status = status
        self.code = code


def _classify(exc):
    for kind, status, code in _ERROR_MAP:
        if isinstance(exc, kind):
            return _ApiError(status, code, str(exc))
    return _ApiError(500, "internal", f"{type(exc).__name__}: {exc}")


def _port_from(name):
    try:
        return Port(name)
    except ValueError:
        raise _ApiError(404, "no-such-port", f"unknown port {name!r}")


def _entry_json(entry):
    return {"name": entry.name, "path": entry.path,
            "size_bytes": entry.size_bytes, "is_dir": entry.is_dir,
            "mtime": entry.mtime}


class GatewayService:
    def __init__(self, bridge, host="127.0.0.1", port=8787, state_file=None):
        self.bridge = bridge
        self.state_file = state_file
        self._server = ThreadingHTTPServer((host, port), _Handler)
        self._server.daemon_threads = True
        self._server.gateway = self
        self._thread = None
        self.stopping = False

    @property
    def address(self):
        host, port = self._server.server_address[:2]
        return host, port

    def start(self):
        self._thread = threading.Thread(
            target=self._server.serve_forever, name="gateway-http",
            daemon=True)
        self._thread.start()
        return self.address

    def serve_forever(self):
        self._server.serve_forever()

    def stop(self):
        self.stopping = True
        self._server.shutdown()
        self._server.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)

    # ----- route handlers (return status, payload) --------------------------

    def handle(self, method, path, query, body):
        parts = [p for p in path.split("/") if p]
        if len(parts) < 2 or parts[0] != "v1":
            raise _ApiError(404, "no-such-route", f"unknown route {path}")
        head, rest = parts[1], parts[2:]
        if head == "ports":
            return self._route_ports(method, rest, body)
        if head == "fs":
            return self._route_fs(method, rest, query)
        if head == "jobs":
            return self._route_jobs(method, rest, body)
        raise _ApiError(404, "no-such-route", f"unknown route {path}")

    def _route_ports(self, method, rest, body):
        if not rest:
            if method != "GET":
                raise _ApiError(400, "bad-method", "GET required")
            return 200, {"ports": [asdict(p) for p in self.bridge.ports()]}
        if len(rest) != 2 or method != "POST":
            raise _ApiError(404, "no-such-route", "expected ports/{id}/verb")
        port, verb = _port_from(rest[0]), rest[1]
        if verb == "attach":
            image = body.get("image")
            if not isinstance(image, str) or not image:
                raise _ApiError(400, "bad-request", "image path required")
            read_only = bool(body.get("read_only", False))
            snapshot = self.bridge.attach_image(port, image,
                                                read_only=read_only)
            self._record_state(port, {"image": image,
                                      "read_only": read_only})
            return 200, asdict(snapshot)
        if verb == "detach":
            snapshot = self.bridge.detach(port)
            self._record_state(port, None)
            return 200, asdict(snapshot)
        raise _ApiError(404, "no-such-route", f"unknown verb {verb!r}")

    def _route_fs(self, method, rest, query):
        if method != "GET" or len(rest) != 1:
            raise _ApiError(404, "no-such-route", "expected fs/{port}")
        port = _port_from(rest[0])
        path = query.get("path", ["/"])[0] or "/"
        listing = self.bridge.browse(port, path)
        return 200, {"port": listing.port, "path": listing.path,
                     "entries": [_entry_json(e) for e in listing.entries],
                     "volume": listing.volume}

    def _route_jobs(self, method, rest, body):
        if not rest:
            if method == "GET":
                return 200, {"jobs": [asdict(j) for j in self.bridge.jobs()]}
            if method == "POST":
                return self._submit_job(body)
            raise _ApiError(400, "bad-method", "GET or POST required")
        job_id = rest[0]
        if len(rest) == 1 and method == "GET":
            return 200, asdict(self.bridge.job_status(job_id))
        if len(rest) == 2 and rest[1] == "cancel" and method == "POST":
            return 200, asdict(self.bridge.cancel(job_id))
        raise _ApiError(404, "no-such-route", "expected jobs/{id}[/cancel]")

    def _submit_job(self, body):
        try:
            src = (Port(body["src_port"]), str(body["src_path"]))
            dst = (Port(body["dst_port"]), str(body["dst_path"]))
        except (KeyError, ValueError, TypeError):
            raise _ApiError(400, "bad-request",
                            "src_port/src_path/dst_port/dst_path required")
        job = self.bridge.start_copy(
            src, dst, overwrite=bool(body.get("overwrite", False)),
            recursive=bool(body.get("recursive", False)))
        return 202, asdict(job)

    def _record_state(self, port, record):
        if self.state_file is None:
            return
        ports = state_mod.load(self.state_file)
        if record is None:
            ports.pop(port, None)
        else:
            ports[port] = record
        state_mod.save(self.state_file, ports)


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = "usb2usb-gateway"

    def log_message(self, fmt, *args):   # keep test output quiet
        pass

    @property
    def gateway(self):
        return self.server.gateway

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        url = urlsplit(self.path)
        if url.path == "/v1/events":
            self._stream_events()
            return
        self._dispatch("GET", url, {})

    def do_POST(self):
        url = urlsplit(self.path)
        try:
            body = self._read_body()
        except _ApiError as exc:
            self._send_error(exc)
            return
        self._dispatch("POST", url, body)

    def _dispatch(self, method, url, body):
        try:
            status, payload = self.gateway.handle(
                method, url.path, parse_qs(url.query), body)
        except _ApiError as exc:
            self._send_error(exc)
        except Exception as exc:       # noqa: BLE001 - surface as JSON error
            self._send_error(_classify(exc))
        else:
            self._send_json(status, payload)

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY:
            raise _ApiError(400, "bad-request", "body too large")
        if length == 0:
            return {}
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise _ApiError(400, "bad-request", f"invalid JSON: {exc}")
        if not isinstance(body, dict):
            raise _ApiError(400, "bad-request", "JSON object required")
        return body

    def _send_json(self, status, payload):
        blob = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(blob)))
        self.end_headers()
        self.wfile.write(blob)

    def _send_error(self, exc):
        self._send_json(exc.status,
                        {"error": {"code": exc.code, "message": str(exc)}})

    def _cors(self):
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _stream_events(self):
        sub = self.gateway.bridge.subscribe(maxsize=EVENT_BUFFER)
        self.send_response(200)
        self._cors()
        self.send_header("Content-Type", "text/event-stream")
        self.send_header("Cache-Control", "no-cache")
        self.send_header("Connection", "close")
        self.end_headers()
        try:
            self.wfile.write(b": connected\n\n")
            self.wfile.flush()
            while not self.gateway.stopping:
                event = sub.get(timeout=0.5)
                if event is None:
                    if sub.closed:
                        break
                    self.wfile.write(b": keep-alive\n\n")
                    self.wfile.flush()
                    continue
                data = json.dumps(asdict(event.payload))
                frame = f"event: {event.kind}\ndata: {data}\n\n"
                self.wfile.write(frame.encode("utf-8"))
                self.wfile.flush()
        except (BrokenPipeError, ConnectionResetError, OSError):
            pass
        finally:
            sub.close()
