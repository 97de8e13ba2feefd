"""Shared test plumbing: image/stack builders and a hand-rolled BOT client.

The wire-format helpers here deliberately avoid the package's struct formats:
CBWs are packed and CSWs parsed byte-by-byte at literal offsets, so framing
tests cross-check the implementation against an independent encoding.
"""

from usb2usb import fatfs, msc_host
from usb2usb.blockdev import BlockImage
from usb2usb.bridge import Bridge
from usb2usb.msc_device import FlashDriveModel
from usb2usb.usb.bus import Port, UsbBus

SECTOR = 512


def make_image(tmp_path, name, sectors):
    return BlockImage.create(str(tmp_path / name), sectors)


def formatted_image(tmp_path, name, sectors, variant, **kwargs):
    """A fresh image with a filesystem on it; returns the BlockImage."""
    dev = make_image(tmp_path, name, sectors)
    fatfs.mkfs(dev, variant, **kwargs)
    return dev


class Stack:
    """One port of the full chain: image -> drive model -> bus -> host handle."""

    def __init__(self, bus, port, model, handle):
        self.bus = bus
        self.port = port
        self.model = model
        self.handle = handle


def plug(bus, port, medium):
    """Attach a drive for `medium` and qualify it, returning a Stack."""
    model = FlashDriveModel(medium)
    bus.attach(port, model)
    handle = msc_host.probe(bus, port)
    return Stack(bus, port, model, handle)


def make_stack(tmp_path, name="disk.img", sectors=32768, variant=None,
               port=Port.A, bus=None, **mkfs_kwargs):
    """Image (optionally formatted) behind a probed drive on `port`."""
    dev = make_image(tmp_path, name, sectors)
    if variant is not None:
        fatfs.mkfs(dev, variant, **mkfs_kwargs)
    return plug(bus or UsbBus(), port, dev)


def make_bridge(tmp_path, a_sectors=32768, b_sectors=32768,
                a_variant=fatfs.FAT16, b_variant=fatfs.FAT16):
    """Bridge with formatted drives on both ports; returns (bridge, paths)."""
    a_path = str(tmp_path / "a.img")
    b_path = str(tmp_path / "b.img")
    fatfs.mkfs(BlockImage.create(a_path, a_sectors), a_variant)
    fatfs.mkfs(BlockImage.create(b_path, b_sectors), b_variant)
    bridge = Bridge()
    bridge.attach_image(Port.A, a_path)
    bridge.attach_image(Port.B, b_path)
    return bridge, (a_path, b_path)


def image_bytes(path_or_dev):
    """Whole-image bytes, straight off the file or block interface."""
    if isinstance(path_or_dev, str):
        with open(path_or_dev, "rb") as fh:
            return fh.read()
    dev = path_or_dev
    return dev.read_blocks(0, dev.block_count)


# -- independent BOT wire helpers ------------------------------------------

BULK_IN = 0x81
BULK_OUT = 0x02


def pack_cbw(tag, dtl, data_in, cdb, lun=0):
    """31-byte CBW packed at literal offsets (no struct)."""
    raw = bytearray(31)
    raw[0:4] = b"USBC"
    raw[4:8] = tag.to_bytes(4, "little")
    raw[8:12] = dtl.to_bytes(4, "little")
    raw[12] = 0x80 if data_in else 0x00
    raw[13] = lun
    raw[14] = len(cdb)
    raw[15:15 + len(cdb)] = cdb
    return bytes(raw)


def parse_csw(raw):
    """(tag, residue, status) from a CSW, validating size and signature."""
    assert len(raw) == 13, f"CSW must be 13 bytes, got {len(raw)}"
    assert raw[0:4] == b"USBS", f"bad CSW signature {raw[0:4]!r}"
    tag = int.from_bytes(raw[4:8], "little")
    residue = int.from_bytes(raw[8:12], "little")
    return tag, residue, raw[12]


class RawBot:
    """Drives the BOT protocol by hand, bypassing the host driver."""

    def __init__(self, bus, address):
        self.bus = bus
        self.address = address
        self.tag = 0

    def command(self, cdb, dtl=0, data_in=False, data_out=b"", tag=None):
        """One full CBW/data/CSW exchange.

        Returns (data, csw_tag, residue, status)."""
        if tag is None:
            self.tag += 1
            tag = self.tag
        cbw = pack_cbw(tag, dtl, data_in, cdb)
        assert len(cbw) == 31
        self.bus.bulk_out(self.address, BULK_OUT, cbw)
        data = b""
        if data_in and dtl > 0:
            data = self.bus.bulk_in(self.address, BULK_IN, dtl)
        elif data_out:
            self.bus.bulk_out(self.address, BULK_OUT, data_out)
        csw = self.bus.bulk_in(self.address, BULK_IN, 13)
        csw_tag, residue, status = parse_csw(csw)
        return data, csw_tag, residue, status


def cdb_read10(lba, count):
    return bytes([0x28, 0, (lba >> 24) & 0xFF, (lba >> 16) & 0xFF,
                  (lba >> 8) & 0xFF, lba & 0xFF, 0,
                  (count >> 8) & 0xFF, count & 0xFF, 0])


def cdb_write10(lba, count):
    return bytes([0x2A, 0, (lba >> 24) & 0xFF, (lba >> 16) & 0xFF,
                  (lba >> 8) & 0xFF, lba & 0xFF, 0,
                  (count >> 8) & 0xFF, count & 0xFF, 0])


def cdb_inquiry(alloc):
    return bytes([0x12, 0, 0, (alloc >> 8) & 0xFF, alloc & 0xFF, 0])


def cdb_request_sense(alloc):
    return bytes([0x03, 0, 0, 0, alloc & 0xFF, 0])


def cdb_test_unit_ready():
    return bytes(6)


def cdb_read_capacity():
    return bytes([0x25, 0, 0, 0, 0, 0, 0, 0, 0, 0])


def cdb_mode_sense(alloc):
    return bytes([0x1A, 0, 0x3F, 0, alloc & 0xFF, 0])


def absorb_unit_attention(bot):
    """Consume the power-on unit attention a fresh device reports."""
    _, _, _, status = bot.command(cdb_test_unit_ready())
    if status == 1:
        data, _, _, s2 = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
        assert s2 == 0
        assert data[2] & 0x0F == 6, "expected unit-attention sense"
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 0
