"""Host-side mass-storage driver.

Claims an enumerated device on a bus port, verifies it speaks the SCSI
transparent command set over Bulk-Only Transport, and exposes logical-block
reads and writes upward. The handle doubles as a 512-byte block interface
(block_count / read_blocks / write_blocks / flush), interchangeable with a
BlockImage for everything above this layer.

Error handling mirrors a real host stack: CSW status 1 triggers an automatic
REQUEST SENSE, status 2 (phase error) and endpoint stalls trigger reset
recovery (Bulk-Only Mass Storage Reset, then clear-halt on both bulk
endpoints) followed by a single retry.
"""

import struct
from dataclasses import dataclass

from .msc_device import (
    CSW_LEN,
    CBW_FLAG_DATA_IN,
    MSC_CLASS,
    MSC_PROTOCOL_BULK_ONLY,
    MSC_SUBCLASS_SCSI,
    OP_INQUIRY,
    OP_MODE_SENSE_6,
    OP_READ_10,
    OP_READ_CAPACITY_10,
    OP_REQUEST_SENSE,
    OP_TEST_UNIT_READY,
    OP_WRITE_10,
    REQ_BOMS_RESET,
    REQ_GET_MAX_LUN,
    SENSE_LEN,
    CommandBlockWrapper,
    CommandStatusWrapper,
    SenseKey,
)
from .usb import descriptors as d
from .usb.bus import DeviceGoneError, EndpointHaltedError, NoSuchDeviceError

SECTOR = 512

# one bus command moves at most 128 blocks (64 KiB), the small-RAM host cap
MAX_BLOCKS_PER_COMMAND = 128

# probe issues TEST UNIT READY at most this many times
TUR_ATTEMPTS = 3

STATE_PROBING = "probing"
STATE_READY = "ready"
STATE_ERROR = "error"
STATE_GONE = "gone"


class MscError(Exception):
    pass


class UnsupportedDeviceError(MscError):
    """The device is not a SCSI bulk-only flash drive."""


class NotReadyTimeoutError(MscError):
    """TEST UNIT READY kept failing through the whole retry budget."""


class RangeError(MscError):
    """Requested blocks fall outside the device capacity."""


class MscProtocolError(MscError):
    """The device broke Bulk-Only Transport framing (bad CSW, wrong tag)."""


@dataclass(frozen=True)
class SenseData:
    key: SenseKey
    asc: int
    ascq: int

    def describe(self):
        return f"{self.key.name.lower().replace('_', '-')} asc=0x{self.asc:02x}"


class IoFailedError(MscError):
    """A command finished with CSW status 1; carries the device's sense."""

    def __init__(self, message, sense=None):
        super().__init__(message)
        self.sense = sense


def probe(bus, port, tur_attempts=TUR_ATTEMPTS):
    """Enumerate (if needed) and qualify the device on `port`, returning a
    ready MscHandle. Rejects anything that is not SCSI over bulk-only."""
    try:
        enumerated = bus.device_at(port) or bus.enumerate(port)
    except (DeviceGoneError, NoSuchDeviceError) as exc:
        raise DeviceGoneError(f"port {port.value}: device gone") from exc

    config = enumerated.descriptors.configurations[0]
    if not config.interfaces:
        raise UnsupportedDeviceError("device exposes no interfaces")
    iface = config.interfaces[0]
    triplet = (iface.interface_class, iface.interface_subclass,
               iface.interface_protocol)
    if triplet != (MSC_CLASS, MSC_SUBCLASS_SCSI, MSC_PROTOCOL_BULK_ONLY):
        raise UnsupportedDeviceError(
            "unsupported device: class/subclass/protocol "
            f"{triplet[0]:02x}/{triplet[1]:02x}/{triplet[2]:02x} "
            "(need 08/06/50, SCSI over bulk-only)")

    bulk = [ep for ep in iface.endpoints if ep.transfer_type == d.XFER_BULK]
    ins = [ep.address for ep in bulk if ep.is_in]
    outs = [ep.address for ep in bulk if not ep.is_in]
    if len(ins) != 1 or len(outs) != 1:
        raise UnsupportedDeviceError(
            f"need exactly one bulk endpoint per direction, got {len(ins)} in / {len(outs)} out")

    handle = MscHandle(bus, enumerated, ins[0], outs[0], iface.number)
    handle._qualify(tur_attempts)
    return handle


class MscHandle:
    def __init__(self, bus, device, bulk_in_ep, bulk_out_ep, interface_number):
        self._bus = bus
        self.device = device
        self.port = device.port
        self.address = device.address
        self.bulk_in_ep = bulk_in_ep
        self.bulk_out_ep = bulk_out_ep
        self.interface_number = interface_number
        self.state = STATE_PROBING
        self.next_tag = 1
        self.capacity = None          # (last_lba, block_length)
        self.write_protect = False
        self.max_lun = 0
        self.inquiry_data = b""
        self.recoveries = 0
        self.trace = []

    # -- block interface (what fatfs sees) -----------------------------------

    @property
    def block_count(self):
        return self.capacity[0] + 1

    @property
    def read_only(self):
        return self.write_protect

    def read_blocks(self, lba, count):
        self._check_range(lba, count)
        parts = []
        for chunk_lba, n in self._split(lba, count):
            cdb = struct.pack(">BBIBHB", OP_READ_10, 0, chunk_lba, 0, n, 0)
            data, _ = self._cmd(cdb, data_in_len=n * SECTOR)
            if len(data) != n * SECTOR:
                raise MscProtocolError(
                    f"short read: {len(data)} of {n * SECTOR} bytes at lba {chunk_lba}")
            parts.append(data)
        return b"".join(parts)

    def write_blocks(self, lba, count, data):
        self._check_range(lba, count)
        if len(data) != count * SECTOR:
            raise RangeError(f"data length {len(data)} != {count} blocks")
        for i, (chunk_lba, n) in enumerate(self._split(lba, count)):
            off = (chunk_lba - lba) * SECTOR
            cdb = struct.pack(">BBIBHB", OP_WRITE_10, 0, chunk_lba, 0, n, 0)
            self._cmd(cdb, data_out=data[off:off + n * SECTOR])

    def read_sector(self, lba):
        return self.read_blocks(lba, 1)

    def write_sector(self, lba, data):
        self.write_blocks(lba, 1, data)

    def flush(self):
        pass

    def _check_range(self, lba, count):
        if self.state != STATE_READY:
            raise MscError(f"handle not ready (state {self.state})")
        if lba < 0 or count < 0 or lba + count > self.block_count:
            raise RangeError(
                f"blocks {lba}..{lba + count} beyond capacity {self.block_count}")

    @staticmethod
    def _split(lba, count):
        while count > 0:
            n = min(count, MAX_BLOCKS_PER_COMMAND)
            yield lba, n
            lba += n
            count -= n

    # -- SCSI command surface ---------------------------------------------------

    def test_unit_ready(self):
        self._cmd(bytes([OP_TEST_UNIT_READY, 0, 0, 0, 0, 0]))

    def inquiry(self):
        cdb = bytes([OP_INQUIRY, 0, 0, 0, 36, 0])
        data, _ = self._cmd(cdb, data_in_len=36)
        return data

    def read_capacity(self):
        cdb = bytes([OP_READ_CAPACITY_10, 0, 0, 0, 0, 0, 0, 0, 0, 0])
        data, _ = self._cmd(cdb, data_in_len=8)
        if len(data) != 8:
            raise MscProtocolError(f"read-capacity returned {len(data)} bytes")
        return struct.unpack(">II", data)

    def mode_sense(self):
        cdb = bytes([OP_MODE_SENSE_6, 0, 0x3F, 0, 4, 0])
        data, _ = self._cmd(cdb, data_in_len=4)
        return data

    def get_max_lun(self):
        setup = d.SetupPacket(0xA1, REQ_GET_MAX_LUN, 0, self.interface_number, 1)
        data = self._transfer(lambda: self._bus.control_transfer(self.address, setup))
        return data[0] if data else 0

    def reset_recovery(self):
        """Bulk-Only Mass Storage Reset, then clear-halt IN, then clear-halt
        OUT. Returns the handle to a command-ready state."""
        reset = d.SetupPacket(0x21, REQ_BOMS_RESET, 0, self.interface_number, 0)
        self._transfer(lambda: self._bus.control_transfer(self.address, reset))
        for ep in (self.bulk_in_ep, self.bulk_out_ep):
            clear = d.SetupPacket(0x02, d.REQ_CLEAR_FEATURE,
                                  d.FEATURE_ENDPOINT_HALT, ep, 0)
            self._transfer(lambda s=clear: self._bus.control_transfer(self.address, s))
        self.recoveries += 1

    # -- probe ---------------------------------------------------------------------

    def _qualify(self, tur_attempts):
        self.max_lun = self.get_max_lun()
        self.inquiry_data = self.inquiry()
        not_ready = None
        for _ in range(tur_attempts):
            try:
                self.test_unit_ready()
                not_ready = None
                break
            except IoFailedError as exc:
                if exc.sense and exc.sense.key == SenseKey.NOT_READY:
                    not_ready = exc
                    continue
                self.state = STATE_ERROR
                raise
        if not_ready is not None:
            self.state = STATE_ERROR
            raise NotReadyTimeoutError(
                f"unit not ready after {tur_attempts} attempts") from not_ready
        last_lba, block_length = self.read_capacity()
        if block_length != SECTOR:
            self.state = STATE_ERROR
            raise UnsupportedDeviceError(f"block length {block_length} != 512")
        self.capacity = (last_lba, block_length)
        mode = self.mode_sense()
        self.write_protect = bool(len(mode) >= 3 and mode[2] & 0x80)
        self.state = STATE_READY

    # -- transport ---------------------------------------------------------------------

    def _cmd(self, cdb, data_out=b"", data_in_len=0):
        """Issue one SCSI command with recovery: endpoint stalls and phase
        errors get reset recovery plus one retry; CSW status 1 triggers an
        automatic REQUEST SENSE; a fresh unit attention is absorbed by one
        extra uncounted retry."""
        retries = 0
        ua_allowance = 1
        while True:
            try:
                data, csw = self._issue(cdb, data_out, data_in_len)
            except EndpointHaltedError:
                if retries >= 1:
                    self.state = STATE_ERROR
                    raise IoFailedError("transport stalled after recovery")
                self.reset_recovery()
                retries += 1
                continue
            if csw.status == 2:
                if retries >= 1:
                    self.state = STATE_ERROR
                    raise IoFailedError("phase error persisted after recovery")
                self.reset_recovery()
                retries += 1
                continue
            if csw.status == 1:
                sense = self._read_sense()
                if sense.key == SenseKey.UNIT_ATTENTION and ua_allowance > 0:
                    ua_allowance -= 1
                    continue
                self._trace_cmd(cdb, csw, retries)
                raise IoFailedError(f"command {cdb[0]:02x} failed: "
                                    f"{sense.describe()}", sense)
            self._trace_cmd(cdb, csw, retries)
            return data, csw

    def _issue(self, cdb, data_out=b"", data_in_len=0):
        tag = self.next_tag
        self.next_tag += 1
        dtl = data_in_len if data_in_len else len(data_out)
        flags = CBW_FLAG_DATA_IN if data_in_len else 0
        cbw = CommandBlockWrapper(tag, dtl, flags, 0, bytes(cdb))

        def run():
            self._bus.bulk_out(self.address, self.bulk_out_ep, cbw.pack())
            data = b""
            if data_in_len:
                data = self._bus.bulk_in(self.address, self.bulk_in_ep, data_in_len)
            elif data_out:
                self._bus.bulk_out(self.address, self.bulk_out_ep, data_out)
            raw = self._bus.bulk_in(self.address, self.bulk_in_ep, CSW_LEN)
            return data, raw

        data, raw = self._transfer(run)
        try:
            csw = CommandStatusWrapper.parse(raw)
        except ValueError as exc:
            raise MscProtocolError(str(exc)) from exc
        if csw.tag != tag:
            raise MscProtocolError(f"CSW tag {csw.tag} != CBW tag {tag}")
        return data, csw

    def _read_sense(self):
        cdb = bytes([OP_REQUEST_SENSE, 0, 0, 0, SENSE_LEN, 0])
        data, csw = self._issue(cdb, data_in_len=SENSE_LEN)
        if csw.status != 0 or len(data) < 14:
            raise MscProtocolError("REQUEST SENSE itself failed")
        return SenseData(SenseKey(data[2] & 0x0F), data[12], data[13])

    def _transfer(self, fn):
        """Run one bus interaction, translating a vanished device into a
        gone-state handle."""
        try:
            return fn()
        except (DeviceGoneError, NoSuchDeviceError) as exc:
            self.state = STATE_GONE
            raise DeviceGoneError(f"port {self.port.value}: device gone") from exc

    def _trace_cmd(self, cdb, csw, retries):
        lba = count = 0
        if cdb[0] in (OP_READ_10, OP_WRITE_10) and len(cdb) >= 9:
            lba = struct.unpack(">I", cdb[2:6])[0]
            count = struct.unpack(">H", cdb[7:9])[0]
        self.trace.append(
            f"{self.port.value} {csw.tag} {cdb[0]:02x} {lba} {count} "
            f"{csw.status} {csw.data_residue} {retries}")
