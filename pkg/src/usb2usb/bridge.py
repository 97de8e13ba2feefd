"""Copy engine: owns ports A and B, mounts drives as they arrive, and runs
transfer jobs between them.

The bridge wires the layers together. A drive plugged into the bus is probed
and mounted without user action; browse and copy operate on the mounted
volumes. Jobs run FIFO on one worker thread (a single mutator), reading and
writing in 64 KiB chunks so progress ticks once per bus command and browsing
stays responsive between chunks.
"""

import itertools
import queue
import threading
import time
from dataclasses import dataclass, field
from typing import Optional

from . import fatfs, msc_host
from .blockdev import BlockImage
from .msc_device import FlashDriveModel
from .usb.bus import Port, UsbBus

PORT_EMPTY = "empty"
PORT_PROBING = "probing"
PORT_READY = "ready"
PORT_FAILED = "failed"

JOB_QUEUED = "queued"
JOB_RUNNING = "running"
JOB_DONE = "done"
JOB_FAILED = "failed"
JOB_CANCELLED = "cancelled"

TERMINAL_STATES = (JOB_DONE, JOB_FAILED, JOB_CANCELLED)

CHUNK_SIZE = 64 * 1024

EVENT_PORT_CHANGED = "port-changed"
EVENT_JOB_PROGRESS = "job-progress"
EVENT_JOB_FINISHED = "job-finished"


class BridgeError(Exception):
    pass


class PortNotReadyError(BridgeError):
    pass


class SamePortError(BridgeError):
    pass


class NoSuchJobError(BridgeError):
    pass


class SourceInvalidError(BridgeError):
    """Source is a directory without the recursive flag, or vice versa."""


class DestFullError(BridgeError):
    pass


@dataclass(frozen=True)
class PortState:
    """Snapshot of one port; `volume` filled iff status is ready."""

    port: str
    status: str
    volume: Optional[dict] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class TransferJob:
    """Snapshot of one copy job."""

    id: str
    src_port: str
    src_path: str
    dst_port: str
    dst_path: str
    total_bytes: int
    copied_bytes: int
    state: str
    error: Optional[str] = None
    started: Optional[float] = None
    finished: Optional[float] = None


@dataclass(frozen=True)
class BridgeEvent:
    kind: str
    payload: object


@dataclass(frozen=True)
class Listing:
    port: str
    path: str
    entries: tuple
    volume: dict


@dataclass
class _PortSlot:
    port: Port
    status: str = PORT_EMPTY
    handle: Optional[msc_host.MscHandle] = None
    volume: Optional[fatfs.FatVolume] = None
    error: Optional[str] = None
    medium: Optional[BlockImage] = None


@dataclass
class _Job:
    id: str
    src_port: Port
    src_path: str
    dst_port: Port
    dst_path: str
    total_bytes: int = 0
    copied_bytes: int = 0
    state: str = JOB_QUEUED
    error: Optional[str] = None
    started: Optional[float] = None
    finished: Optional[float] = None
    cancel_requested: bool = False
    overwrite: bool = False
    plan: list = field(default_factory=list)
    dirs: list = field(default_factory=list)


class Subscription:
    """Ordered event feed; iterate or poll with get().

    A bounded subscription that falls behind is closed rather than allowed
    to stall publishers (slow-client disconnect).
    """

    def __init__(self, bridge, maxsize=0):
        self._bridge = bridge
        self._queue = queue.Queue(maxsize)
        self._closed = False

    @property
    def closed(self):
        return self._closed

    def get(self, timeout=None):
        """Next event, or None on timeout / after close."""
        if self._closed and self._queue.empty():
            return None
        try:
            item = self._queue.get(timeout=timeout)
        except queue.Empty:
            return None
        return item

    def __iter__(self):
        while True:
            item = self.get()
            if item is None:
                return
            yield item

    def close(self):
        self._closed = True
        self._bridge._drop_subscriber(self)
        try:
            self._queue.put_nowait(None)
        except queue.Full:
            pass

    def _push(self, event):
        if self._closed:
            return
        try:
            self._queue.put_nowait(event)
        except queue.Full:
            self.close()


class Bridge:
    def __init__(self, bus=None, clock=time.time):
        self.bus = bus if bus is not None else UsbBus(clock=clock)
        self._clock = clock
        self._lock = threading.RLock()
        self._slots = {Port.A: _PortSlot(Port.A), Port.B: _PortSlot(Port.B)}
        self._jobs = {}
        self._job_order = []
        self._job_seq = itertools.count(1)
        self._job_queue = queue.Queue()
        self._subscribers = []
        self._chunk_hook = None         # test seam: called at chunk boundaries
        self._closed = False
        self.bus.add_listener(self._on_bus_event)
        self._worker = threading.Thread(
            target=self._run_jobs, name="bridge-worker", daemon=True)
        self._worker.start()

    # ----- port lifecycle -------------------------------------------------

    def attach_image(self, port, image, read_only=False):
        """Plug a drive backed by `image` (path or BlockImage) into `port`.

        Returns the resulting PortState; probing happens as part of the
        plug event, no further action needed.
        """
        if isinstance(image, BlockImage):
            medium = image
        else:
            medium = BlockImage(image, read_only=read_only)
        self.bus.attach(port, FlashDriveModel(medium))
        return self.port_state(port)

    def detach(self, port):
        self.bus.detach(port)
        return self.port_state(port)

    def ports(self):
        return [self.port_state(p) for p in (Port.A, Port.B)]

    def port_state(self, port):
        with self._lock:
            return self._snapshot_port(self._slots[port])

    def _on_bus_event(self, kind, port):
        if kind == "attach":
            self._on_attach(port)
        elif kind == "detach":
            self._on_detach(port)

    def _on_attach(self, port):
        slot = self._slots[port]
        with self._lock:
            slot.status = PORT_PROBING
            slot.error = None
            slot.volume = None
            slot.handle = None
            self._publish(EVENT_PORT_CHANGED, self._snapshot_port(slot))
        try:
            handle = msc_host.probe(self.bus, port)
            volume = fatfs.mount(handle)
        except (msc_host.MscError, fatfs.FatError,
                msc_host.DeviceGoneError) as exc:
            with self._lock:
                slot.status = PORT_FAILED
                slot.error = str(exc)
                self._publish(EVENT_PORT_CHANGED, self._snapshot_port(slot))
            return
        with self._lock:
            slot.status = PORT_READY
            slot.handle = handle
            slot.volume = volume
            self._publish(EVENT_PORT_CHANGED, self._snapshot_port(slot))

    def _on_detach(self, port):
        slot = self._slots[port]
        with self._lock:
            slot.status = PORT_EMPTY
            slot.volume = None
            slot.handle = None
            slot.error = None
            for job in self._jobs.values():
                if job.state in (JOB_QUEUED, JOB_RUNNING) and port in (
                        job.src_port, job.dst_port):
                    # the worker surfaces the failure for running jobs when
                    # its next bus command raises; queued jobs die here
                    if job.state == JOB_QUEUED:
                        self._finish_job(
                            job, JOB_FAILED,
                            f"device gone on port {port.value}")
            self._publish(EVENT_PORT_CHANGED, self._snapshot_port(slot))

    # ----- browse ---------------------------------------------------------

    def browse(self, port, path="/"):
        volume = self._ready_volume(port)
        entries = tuple(volume.list_dir(path))
        return Listing(port=port.value, path=path, entries=entries,
                       volume=volume.volume_info())

    def volume_info(self, port):
        return self._ready_volume(port).volume_info()

    def _ready_volume(self, port):
        with self._lock:
            slot = self._slots[port]
            if slot.status != PORT_READY:
                raise PortNotReadyError(
                    f"port {port.value} not ready (status: {slot.status})")
            return slot.volume

    # ----- jobs -----------------------------------------------------------

    def start_copy(self, src, dst, overwrite=False, recursive=False):
        """Queue a copy of src=(port, path) to dst=(port, path).

        A dst path naming an existing directory receives the source under
        its own name. Returns the queued TransferJob snapshot.
        """
        src_port, src_path = src
        dst_port, dst_path = dst
        if src_port == dst_port:
            raise SamePortError("source and destination ports must differ")
        src_vol = self._ready_volume(src_port)
        dst_vol = self._ready_volume(dst_port)

        src_entry = src_vol.stat(src_path)     # raises NotFoundError
        if src_entry.path == "/":
            raise SourceInvalidError(
                "cannot copy the root directory; copy its entries")
        if src_entry.is_dir and not recursive:
            raise SourceInvalidError(
                f"{src_path} is a directory (use recursive)")

        dst_path = self._resolve_dst(dst_vol, dst_path, src_entry.name)
        if not src_entry.is_dir and not overwrite:
            try:
                dst_vol.stat(dst_path)
            except fatfs.NotFoundError:
                pass
            else:
                raise fatfs.ExistsError(f"{dst_path} exists on destination")
        plan, dirs, total = self._walk_plan(src_vol, src_entry, dst_path)
        self._precheck_space(dst_vol, plan, dirs)

        with self._lock:
            job = _Job(id=f"job-{next(self._job_seq)}",
                       src_port=src_port, src_path=src_path,
                       dst_port=dst_port, dst_path=dst_path,
                       total_bytes=total, plan=plan, dirs=dirs,
                       overwrite=overwrite)
            self._jobs[job.id] = job
            self._job_order.append(job.id)
            snapshot = self._snapshot_job(job)
        self._job_queue.put(job.id)
        return snapshot

    def cancel(self, job_id):
        with self._lock:
            job = self._get_job(job_id)
            if job.state == JOB_QUEUED:
                self._finish_job(job, JOB_CANCELLED, None)
            elif job.state == JOB_RUNNING:
                job.cancel_requested = True
            return self._snapshot_job(job)

    def job_status(self, job_id):
        with self._lock:
            return self._snapshot_job(self._get_job(job_id))

    def jobs(self):
        with self._lock:
            return [self._snapshot_job(self._jobs[i]) for i in self._job_order]

    def subscribe(self, maxsize=0):
        sub = Subscription(self, maxsize)
        with self._lock:
            self._subscribers.append(sub)
        return sub

    def close(self):
        """Stop the worker; pending queued jobs are left queued."""
        self._closed = True
        self._job_queue.put(None)
        self._worker.join(timeout=5)

    # ----- planning -------------------------------------------------------

    @staticmethod
    def _resolve_dst(dst_vol, dst_path, src_name):
        try:
            entry = dst_vol.stat(dst_path)
        except fatfs.NotFoundError:
            return dst_path
        if entry.is_dir:
            base = dst_path.rstrip("/") or ""
            return f"{base}/{src_name}"
        return dst_path

    def _walk_plan(self, src_vol, src_entry, dst_path):
        """Flatten the copy into (src_path, dst_path, size) file pairs plus
        the directories to create, and total the bytes up front."""
        plan = []
        dirs = []
        if not src_entry.is_dir:
            plan.append((src_entry.path, dst_path, src_entry.size_bytes))
            return plan, dirs, src_entry.size_bytes
        total = 0
        stack = [(src_entry.path, dst_path)]
        while stack:
            src_dir, dst_dir = stack.pop()
            dirs.append(dst_dir)
            for child in src_vol.list_dir(src_dir):
                target = f"{dst_dir.rstrip('/')}/{child.name}"
                if child.is_dir:
                    stack.append((child.path, target))
                else:
                    plan.append((child.path, target, child.size_bytes))
                    total += child.size_bytes
        return plan, dirs, total

    @staticmethod
    def _precheck_space(dst_vol, plan, dirs):
        cs = dst_vol.cluster_size
        need = sum(-(-size // cs) for _, _, size in plan) + len(dirs)
        if need > dst_vol.free_clusters:
            raise DestFullError(
                f"destination needs {need} clusters, {dst_vol.free_clusters}"
                " free")

    # ----- worker ---------------------------------------------------------

    def _run_jobs(self):
        while True:
            job_id = self._job_queue.get()
            if job_id is None or self._closed:
                return
            with self._lock:
                job = self._jobs[job_id]
                if job.state != JOB_QUEUED:
                    continue
                if job.cancel_requested:
                    self._finish_job(job, JOB_CANCELLED, None)
                    continue
                job.state = JOB_RUNNING
                job.started = self._clock()
                self._publish(EVENT_JOB_PROGRESS, self._snapshot_job(job))
            try:
                self._execute(job)
            except Exception as exc:     # noqa: BLE001 - job must terminate
                self._finish_job(job, JOB_FAILED, self._describe(exc))

    def _execute(self, job):
        try:
            src_vol = self._ready_volume(job.src_port)
            dst_vol = self._ready_volume(job.dst_port)
        except PortNotReadyError:
            self._finish_job(job, JOB_FAILED,
                             "device gone before job started")
            return
        for dst_dir in job.dirs:
            try:
                dst_vol.create_dir(dst_dir)
            except fatfs.ExistsError:
                pass                      # merging into an existing tree
        for src_path, dst_path, _size in job.plan:
            if not self._copy_file(job, src_vol, dst_vol, src_path, dst_path):
                return
        self._finish_job(job, JOB_DONE, None)

    def _copy_file(self, job, src_vol, dst_vol, src_path, dst_path):
        """One file of the plan; returns False when the job terminated."""
        reader = src_vol.open_read(src_path)
        writer = dst_vol.open_write(dst_path, overwrite=job.overwrite)
        try:
            while True:
                if job.cancel_requested and job.copied_bytes < job.total_bytes:
                    writer.abort()
                    self._finish_job(job, JOB_CANCELLED, None)
                    return False
                chunk = reader.read(CHUNK_SIZE)
                if not chunk:
                    break
                writer.write(chunk)
                with self._lock:
                    job.copied_bytes += len(chunk)
                    self._publish(EVENT_JOB_PROGRESS, self._snapshot_job(job))
                if self._chunk_hook is not None:
                    self._chunk_hook(job.id, job.copied_bytes)
            writer.close()
        except Exception as exc:          # noqa: BLE001 - roll back the file
            writer.abort()
            self._finish_job(job, JOB_FAILED, self._describe(exc))
            return False
        return True

    @staticmethod
    def _describe(exc):
        if isinstance(exc, msc_host.DeviceGoneError):
            return f"device gone: {exc}"
        if isinstance(exc, fatfs.DiskFullError):
            return f"dest-full: {exc}"
        if isinstance(exc, fatfs.ExistsError):
            return f"exists: {exc}"
        return f"{type(exc).__name__}: {exc}"

    # ----- snapshots and events --------------------------------------------

    def _get_job(self, job_id):
        job = self._jobs.get(job_id)
        if job is None:
            raise NoSuchJobError(f"no job {job_id}")
        return job

    def _finish_job(self, job, state, error):
        with self._lock:
            if job.state in TERMINAL_STATES:
                return
            job.state = state
            job.error = error
            job.finished = self._clock()
            self._publish(EVENT_JOB_FINISHED, self._snapshot_job(job))

    def _snapshot_port(self, slot):
        volume = None
        if slot.status == PORT_READY and slot.volume is not None:
            volume = slot.volume.volume_info()
        return PortState(port=slot.port.value, status=slot.status,
                         volume=volume, error=slot.error)

    def _snapshot_job(self, job):
        return TransferJob(
            id=job.id, src_port=job.src_port.value, src_path=job.src_path,
            dst_port=job.dst_port.value, dst_path=job.dst_path,
            total_bytes=job.total_bytes, copied_bytes=job.copied_bytes,
            state=job.state, error=job.error,
            started=job.started, finished=job.finished)

    def _publish(self, kind, payload):
        event = BridgeEvent(kind=kind, payload=payload)
        with self._lock:
            targets = list(self._subscribers)
        for sub in targets:
            sub._push(event)

    def _drop_subscriber(self, sub):
        with self._lock:
            if sub in self._subscribers:
                self._subscribers.remove(sub)
