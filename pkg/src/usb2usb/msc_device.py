"""Emulated USB flash drive.

One mass-storage interface (SCSI transparent command set over Bulk-Only
Transport) backed by a BlockImage. The model is passive: the virtual bus
drives it through control and bulk transfer callbacks, and a small state
machine walks each command through its CBW, data, and CSW phases.

Transport framing is bit-exact: 31-byte Command Block Wrapper in, 13-byte
Command Status Wrapper out, tag echoed, residue accounting exact. A CBW that
fails validation halts both bulk endpoints and produces no CSW until the host
performs reset recovery.
"""

import enum
import itertools
import struct
from dataclasses import dataclass

from . import blockdev
from .usb import descriptors as d
from .usb.device import UsbDeviceModel

CBW_SIGNATURE = 0x43425355
CSW_SIGNATURE = 0x53425355

_CBW_FMT = "<IIIBBB16s"
_CSW_FMT = "<IIIB"

CBW_LEN = struct.calcsize(_CBW_FMT)   # 31
CSW_LEN = struct.calcsize(_CSW_FMT)   # 13

CBW_FLAG_DATA_IN = 0x80

# CSW status values
STATUS_PASSED = 0
STATUS_FAILED = 1
STATUS_PHASE_ERROR = 2

# Mass-storage class control requests
REQ_BOMS_RESET = 0xFF
REQ_GET_MAX_LUN = 0xFE

# SCSI opcodes served by the drive
OP_TEST_UNIT_READY = 0x00
OP_REQUEST_SENSE = 0x03
OP_INQUIRY = 0x12
OP_MODE_SENSE_6 = 0x1A
OP_READ_CAPACITY_10 = 0x25
OP_READ_10 = 0x28
OP_WRITE_10 = 0x2A

# Mass-storage interface identity: SCSI transparent over Bulk-Only
MSC_CLASS = 0x08
MSC_SUBCLASS_SCSI = 0x06
MSC_PROTOCOL_BULK_ONLY = 0x50

BULK_IN_EP = 0x81
BULK_OUT_EP = 0x02

SECTOR = blockdev.SECTOR_SIZE

INQUIRY_LEN = 36
SENSE_LEN = 18


class SenseKey(enum.IntEnum):
    NO_SENSE = 0x0
    NOT_READY = 0x2
    MEDIUM_ERROR = 0x3
    ILLEGAL_REQUEST = 0x5
    UNIT_ATTENTION = 0x6
    DATA_PROTECT = 0x7


# additional sense codes
ASC_INVALID_OPCODE = 0x20
ASC_LBA_OUT_OF_RANGE = 0x21
ASC_INVALID_FIELD_IN_CDB = 0x24
ASC_WRITE_PROTECTED = 0x27
ASC_POWER_ON_RESET = 0x29
ASC_MEDIUM_NOT_PRESENT = 0x3A


class InvalidCbwError(Exception):
    """The 31 bytes on the wire are not a valid Command Block Wrapper."""


@dataclass
class CommandBlockWrapper:
    tag: int
    data_transfer_length: int
    flags: int
    lun: int
    command_block: bytes

    @property
    def is_data_in(self):
        return bool(self.flags & CBW_FLAG_DATA_IN)

    @property
    def opcode(self):
        return self.command_block[0]

    def pack(self):
        cb = self.command_block.ljust(16, b"\x00")
        return struct.pack(_CBW_FMT, CBW_SIGNATURE, self.tag,
                           self.data_transfer_length, self.flags, self.lun,
                           len(self.command_block), cb)

    @classmethod
    def parse(cls, raw):
        if len(raw) != CBW_LEN:
            raise InvalidCbwError(f"CBW must be 31 bytes, got {len(raw)}")
        sig, tag, dtl, flags, lun, cb_len, cb = struct.unpack(_CBW_FMT, raw)
        if sig != CBW_SIGNATURE:
            raise InvalidCbwError(f"bad CBW signature 0x{sig:08x}")
        if not 1 <= cb_len <= 16:
            raise InvalidCbwError(f"CBW cb_length {cb_len} outside 1..16")
        if flags & 0x7F or lun & 0xF0:
            raise InvalidCbwError("reserved CBW bits set")
        return cls(tag, dtl, flags, lun, cb[:cb_len])


@dataclass
class CommandStatusWrapper:
    tag: int
    data_residue: int
    status: int

    def pack(self):
        return struct.pack(_CSW_FMT, CSW_SIGNATURE, self.tag,
                           self.data_residue, self.status)

    @classmethod
    def parse(cls, raw):
        if len(raw) != CSW_LEN:
            raise ValueError(f"CSW must be 13 bytes, got {len(raw)}")
        sig, tag, residue, status = struct.unpack(_CSW_FMT, raw)
        if sig != CSW_SIGNATURE:
            raise ValueError(f"bad CSW signature 0x{sig:08x}")
        return cls(tag, residue, status)


class _Phase(enum.Enum):
    COMMAND = "command"      # waiting for a CBW on the OUT endpoint
    DATA_OUT = "data-out"    # collecting host data for a write
    DATA_IN = "data-in"      # returning command data to the host
    STATUS = "status"        # CSW ready to be read
    STALLED = "stalled"      # invalid CBW: no CSW until reset recovery


class _CheckCondition(Exception):
    def __init__(self, key, asc, ascq=0):
        super().__init__(f"sense {key.name} asc=0x{asc:02x}")
        self.key = key
        self.asc = asc
        self.ascq = ascq


def flash_drive_descriptors():
    """Descriptor set of a single-configuration SCSI bulk-only flash drive."""
    endpoints = [
        d.EndpointDescriptor(BULK_IN_EP, d.XFER_BULK, 64),
        d.EndpointDescriptor(BULK_OUT_EP, d.XFER_BULK, 64),
    ]
    interface = d.InterfaceDescriptor(
        number=0,
        interface_class=MSC_CLASS,
        interface_subclass=MSC_SUBCLASS_SCSI,
        interface_protocol=MSC_PROTOCOL_BULK_ONLY,
        endpoints=endpoints)
    device = d.DeviceDescriptor(
        vendor_id=0x1209, product_id=0x0010,
        i_manufacturer=1, i_product=2, i_serial=3)
    config = d.ConfigurationDescriptor(interfaces=[interface])
    return d.DescriptorSet(device, [config])


_serials = itertools.count(1)


class FlashDriveModel(UsbDeviceModel):
    """A pen drive: BlockImage behind a SCSI/BOT state machine.

    Test seams for fault injection:
      - fail_next_commands_with_phase_error: that many upcoming commands
        answer CSW status 2 instead of executing.
      - halt_data_in_once: halt the IN endpoint right before the next data-in
        phase, aborting that command.
    """

    def __init__(self, medium, descriptor_set=None, strings=None):
        super().__init__(
            descriptor_set or flash_drive_descriptors(),
            strings or ["usb2usb", "Virtual Flash Drive", f"VF{next(_serials):06d}"])
        self.medium = medium
        self.sense = (SenseKey.NO_SENSE, 0, 0)
        self.trace = []
        self.fail_next_commands_with_phase_error = 0
        self.halt_data_in_once = False
        self._phase = _Phase.COMMAND
        self._cbw = None
        self._data_in = b""
        self._data_out = bytearray()
        self._data_out_expected = 0
        self._data_out_discard = False
        self._csw = None
        self._unit_attention = False

    # -- medium lifecycle ----------------------------------------------------

    def eject(self):
        """Pull the medium out from under the drive (fault injection)."""
        self.medium = None

    def insert(self, medium):
        self.medium = medium
        self._unit_attention = True

    def on_configured(self):
        # power-on/reset condition: first command sees a unit attention
        self._unit_attention = True

    def on_detached(self):
        if self.medium is not None:
            self.medium.flush()

    # -- class control requests ------------------------------------------------

    def handle_class_control(self, setup, data):
        if setup.request == REQ_GET_MAX_LUN and setup.is_device_to_host:
            return b"\x00"
        if setup.request == REQ_BOMS_RESET and not setup.is_device_to_host:
            self._reset_transport()
            return None
        return super().handle_class_control(setup, data)

    def _reset_transport(self):
        # endpoint halts stay set; the host clears them with CLEAR_FEATURE
        self._phase = _Phase.COMMAND
        self._cbw = None
        self._data_in = b""
        self._data_out = bytearray()
        self._data_out_expected = 0
        self._data_out_discard = False
        self._csw = None

    # -- bulk traffic -------------------------------------------------------------

    def handle_bulk_out(self, endpoint, data):
        if self._phase == _Phase.COMMAND:
            try:
                cbw = CommandBlockWrapper.parse(data)
            except InvalidCbwError:
                self._stall_transport()
                return len(data)
            self._start_command(cbw)
            return len(data)
        if self._phase == _Phase.DATA_OUT:
            self._data_out.extend(data)
            if len(self._data_out) >= self._data_out_expected:
                if self._data_out_discard:
                    self._data_out_discard = False
                    self._data_out = bytearray()
                    self._complete_write(0, STATUS_PHASE_ERROR)
                else:
                    self._finish_write()
            return len(data)
        # host wrote while we owe it data or status: protocol violation
        self._stall_transport()
        return len(data)

    def handle_bulk_in(self, endpoint, max_len):
        if self._phase == _Phase.DATA_IN:
            chunk = self._data_in[:max_len]
            self._data_in = self._data_in[len(chunk):]
            if not self._data_in:
                self._phase = _Phase.STATUS
            return chunk
        if self._phase == _Phase.STATUS:
            csw = self._csw
            self._csw = None
            self._phase = _Phase.COMMAND
            return csw.pack()
        # nothing to send: a real device would NAK forever
        self._stall_transport()
        return b""

    def _stall_transport(self):
        self.halt_endpoint(BULK_IN_EP)
        self.halt_endpoint(BULK_OUT_EP)
        self._reset_transport()
        self._phase = _Phase.STALLED

    # -- command execution -----------------------------------------------------------

    def _start_command(self, cbw):
        self._cbw = cbw
        if self.fail_next_commands_with_phase_error > 0:
            self.fail_next_commands_with_phase_error -= 1
            if not cbw.is_data_in and cbw.data_transfer_length > 0:
                # drain the host's data phase, then report the phase error
                self._data_out = bytearray()
                self._data_out_expected = cbw.data_transfer_length
                self._data_out_discard = True
                self._phase = _Phase.DATA_OUT
            else:
                self._complete(b"", STATUS_PHASE_ERROR)
            return
        if cbw.opcode == OP_WRITE_10 and not cbw.is_data_in:
            self._data_out = bytearray()
            self._data_out_expected = cbw.data_transfer_length
            if self._data_out_expected == 0:
                self._finish_write()
            else:
                self._phase = _Phase.DATA_OUT
            return
        try:
            data = self._execute(cbw)
            status = STATUS_PASSED
        except _CheckCondition as cc:
            self.sense = (cc.key, cc.asc, cc.ascq)
            data = b""
            status = STATUS_FAILED
        self._complete(data[:cbw.data_transfer_length], status)

    def _complete(self, data, status):
        cbw = self._cbw
        residue = cbw.data_transfer_length - len(data)
        if status == STATUS_PHASE_ERROR:
            residue = cbw.data_transfer_length
        self._csw = CommandStatusWrapper(cbw.tag, residue, status)
        if cbw.is_data_in and cbw.data_transfer_length > 0:
            if data and self.halt_data_in_once:
                self.halt_data_in_once = False
                self._stall_transport()
                return
            # an empty buffer still runs a data phase: the host's read sees a
            # zero-byte short read, then the CSW
            self._data_in = data
            self._phase = _Phase.DATA_IN
        else:
            self._phase = _Phase.STATUS
        lba, count = self._cdb_extent(cbw.command_block)
        self.trace.append(
            f"{cbw.tag} {cbw.opcode:02x} {lba} {count} {status} {residue}")

    def _execute(self, cbw):
        """Run a non-write SCSI command, returning its data-in bytes (b"" for
        commands without a data phase). Raises _CheckCondition on failure."""
        cdb = cbw.command_block
        opcode = cdb[0]
        if opcode != OP_REQUEST_SENSE:
            self._take_unit_attention(opcode)
            self.sense = (SenseKey.NO_SENSE, 0, 0)
            self._require_medium()
        if opcode == OP_TEST_UNIT_READY:
            return b""
        if opcode == OP_REQUEST_SENSE:
            return self._request_sense(cdb)
        if opcode == OP_INQUIRY:
            return self._inquiry(cdb)
        if opcode == OP_MODE_SENSE_6:
            return self._mode_sense_6(cdb)
        if opcode == OP_READ_CAPACITY_10:
            return struct.pack(">II", self.medium.block_count - 1, SECTOR)
        if opcode == OP_READ_10:
            return self._read_10(cdb)
        raise _CheckCondition(SenseKey.ILLEGAL_REQUEST, ASC_INVALID_OPCODE)

    def _take_unit_attention(self, opcode):
        if self._unit_attention and opcode != OP_INQUIRY:
            self._unit_attention = False
            raise _CheckCondition(SenseKey.UNIT_ATTENTION, ASC_POWER_ON_RESET)

    def _require_medium(self):
        if self.medium is None:
            raise _CheckCondition(SenseKey.NOT_READY, ASC_MEDIUM_NOT_PRESENT)

    def _inquiry(self, cdb):
        alloc = (cdb[3] << 8) | cdb[4]
        data = bytes([
            0x00,   # direct-access block device, connected
            0x80,   # removable medium
            0x02,   # SCSI-2 compliance
            0x02,   # response data format
            INQUIRY_LEN - 5,
            0, 0, 0,
        ])
        data += b"usb2usb ".ljust(8)[:8]
        data += b"Virtual Flash".ljust(16)[:16]
        data += b"0100"
        return data[:alloc]

    def _request_sense(self, cdb):
        alloc = cdb[4]
        key, asc, ascq = self.sense
        self.sense = (SenseKey.NO_SENSE, 0, 0)
        data = bytearray(SENSE_LEN)
        data[0] = 0x70                 # current error, fixed format
        data[2] = key
        data[7] = SENSE_LEN - 8        # additional sense length
        data[12] = asc
        data[13] = ascq
        return bytes(data)[:alloc]

    def _mode_sense_6(self, cdb):
        alloc = cdb[4]
        write_protect = 0x80 if (self.medium and self.medium.read_only) else 0
        data = bytes([3, 0, write_protect, 0])
        return data[:alloc]

    def _read_10(self, cdb):
        lba, count = self._cdb_extent(cdb)
        self._check_range(lba, count)
        if count == 0:
            return b""
        return self.medium.read_blocks(lba, count)

    def _finish_write(self):
        cbw = self._cbw
        cdb = cbw.command_block
        data = bytes(self._data_out[:cbw.data_transfer_length])
        self._data_out = bytearray()
        self._data_out_expected = 0
        try:
            self._take_unit_attention(cdb[0])
            self.sense = (SenseKey.NO_SENSE, 0, 0)
            self._require_medium()
            lba, count = self._cdb_extent(cdb)
            self._check_range(lba, count)
            if self.medium.read_only:
                raise _CheckCondition(SenseKey.DATA_PROTECT, ASC_WRITE_PROTECTED)
            if len(data) < count * SECTOR:
                # host promised fewer bytes than the CDB asks to write
                self._complete(b"", STATUS_PHASE_ERROR)
                return
            if count:
                self.medium.write_blocks(lba, count, data[:count * SECTOR])
            written = count * SECTOR
        except _CheckCondition as cc:
            self.sense = (cc.key, cc.asc, cc.ascq)
            self._complete_write(0, STATUS_FAILED)
            return
        self._complete_write(written, STATUS_PASSED)

    def _complete_write(self, consumed, status):
        cbw = self._cbw
        residue = cbw.data_transfer_length - consumed
        self._csw = CommandStatusWrapper(cbw.tag, residue, status)
        self._phase = _Phase.STATUS
        lba, count = self._cdb_extent(cbw.command_block)
        self.trace.append(
            f"{cbw.tag} {cbw.opcode:02x} {lba} {count} {status} {residue}")

    def _check_range(self, lba, count):
        if lba + count > self.medium.block_count:
            raise _CheckCondition(SenseKey.ILLEGAL_REQUEST, ASC_LBA_OUT_OF_RANGE)

    @staticmethod
    def _cdb_extent(cdb):
        """(lba, count) for 10-byte read/write CDBs, zeros otherwise."""
        if cdb and cdb[0] in (OP_READ_10, OP_WRITE_10) and len(cdb) >= 9:
            lba = struct.unpack(">I", cdb[2:6])[0]
            count = struct.unpack(">H", cdb[7:9])[0]
            return lba, count
        return 0, 0
