"""Flash-drive model: BOT framing, SCSI command set, sense behavior.

Everything here talks to the device through hand-packed CBWs (see helpers),
never through the host driver, so the two sides of the wire format are
implemented twice and cross-checked.
"""

import pytest

from usb2usb.blockdev import BlockImage
from usb2usb.msc_device import (
    CBW_LEN,
    CSW_LEN,
    CommandBlockWrapper,
    CommandStatusWrapper,
    FlashDriveModel,
    InvalidCbwError,
    SenseKey,
)
from usb2usb.usb import descriptors as d
from usb2usb.usb.bus import EndpointHaltedError, Port, UsbBus

from helpers import (
    BULK_IN,
    BULK_OUT,
    RawBot,
    absorb_unit_attention,
    cdb_inquiry,
    cdb_mode_sense,
    cdb_read10,
    cdb_read_capacity,
    cdb_request_sense,
    cdb_test_unit_ready,
    cdb_write10,
    make_image,
    pack_cbw,
    parse_csw,
)

SECTOR = 512


@pytest.fixture
def rig(tmp_path):
    """(bus, model, bot) with the unit attention already absorbed."""
    bus = UsbBus()
    model = FlashDriveModel(make_image(tmp_path, "d.img", 256))
    bus.attach(Port.A, model)
    dev = bus.enumerate(Port.A)
    bot = RawBot(bus, dev.address)
    absorb_unit_attention(bot)
    return bus, model, bot


def test_wrapper_sizes():
    assert CBW_LEN == 31
    assert CSW_LEN == 13


def test_cbw_packing_matches_hand_layout():
    cbw = CommandBlockWrapper(tag=0x11223344, data_transfer_length=0x1000,
                              flags=0x80, lun=0, command_block=cdb_read10(2, 8))
    raw = cbw.pack()
    assert raw == pack_cbw(0x11223344, 0x1000, True, cdb_read10(2, 8))
    parsed = CommandBlockWrapper.parse(raw)
    assert parsed.tag == 0x11223344
    assert parsed.data_transfer_length == 0x1000
    assert parsed.opcode == 0x28


def test_csw_packing_matches_hand_layout():
    raw = CommandStatusWrapper(tag=7, data_residue=12, status=1).pack()
    assert parse_csw(raw) == (7, 12, 1)
    assert raw[0:4] == b"USBS"


@pytest.mark.parametrize("mutate", [
    lambda raw: raw[:30],                                  # short CBW
    lambda raw: raw + b"\x00",                              # long CBW
    lambda raw: b"XXXX" + raw[4:],                          # bad signature
    lambda raw: raw[:14] + b"\x00" + raw[15:],              # zero CB length
    lambda raw: raw[:14] + b"\x11" + raw[15:],              # CB length 17 > 16
])
def test_malformed_cbw_rejected_by_parser(mutate):
    good = pack_cbw(1, 0, False, cdb_test_unit_ready())
    with pytest.raises(InvalidCbwError):
        CommandBlockWrapper.parse(mutate(bytearray(good)))


def test_inquiry_exact_bytes(rig):
    _, _, bot = rig
    data, tag, residue, status = bot.command(cdb_inquiry(36), dtl=36, data_in=True)
    assert (status, residue) == (0, 0)
    assert len(data) == 36
    assert data[0] == 0x00          # direct-access block device
    assert data[1] == 0x80          # removable
    assert data[2] == 0x02 and data[3] == 0x02
    assert data[4] == 31            # additional length
    assert data[8:16] == b"usb2usb "
    assert data[16:32] == b"Virtual Flash".ljust(16)
    assert data[32:36] == b"0100"


def test_inquiry_truncates_to_allocation_length(rig):
    _, _, bot = rig
    data, _, residue, status = bot.command(cdb_inquiry(5), dtl=5, data_in=True)
    assert (status, residue) == (0, 0)
    assert len(data) == 5
    full, _, _, _ = bot.command(cdb_inquiry(36), dtl=36, data_in=True)
    assert full[:5] == data


def test_inquiry_over_allocation_reports_residue(rig):
    _, _, bot = rig
    data, _, residue, status = bot.command(cdb_inquiry(64), dtl=64, data_in=True)
    assert status == 0
    assert len(data) == 36
    assert residue == 64 - 36


def test_read_capacity_reports_last_lba_and_block_size(rig):
    _, model, bot = rig
    data, _, residue, status = bot.command(cdb_read_capacity(), dtl=8, data_in=True)
    assert (status, residue) == (0, 0)
    last_lba = int.from_bytes(data[0:4], "big")
    block_len = int.from_bytes(data[4:8], "big")
    assert last_lba == model.medium.block_count - 1 == 255
    assert block_len == 512


def test_write_then_read_round_trip(rig):
    _, _, bot = rig
    payload = bytes(range(256)) * 4           # 2 sectors
    _, tag_w, residue, status = bot.command(
        cdb_write10(10, 2), dtl=len(payload), data_out=payload)
    assert (status, residue) == (0, 0)
    data, tag_r, residue, status = bot.command(
        cdb_read10(10, 2), dtl=len(payload), data_in=True)
    assert (status, residue) == (0, 0)
    assert data == payload
    assert tag_r == tag_w + 1


def test_tag_echoed_verbatim(rig):
    _, _, bot = rig
    for tag in (0, 1, 0xDEADBEEF, 0xFFFFFFFF):
        _, echoed, _, status = bot.command(cdb_test_unit_ready(), tag=tag)
        assert echoed == tag
        assert status == 0


def test_read_zero_blocks_runs_empty_data_phase(rig):
    """count=0 with a 512-byte dtl: zero-byte data phase, residue 512."""
    bus, model, bot = rig
    data, _, residue, status = bot.command(cdb_read10(0, 0), dtl=512, data_in=True)
    assert data == b""
    assert status == 0
    assert residue == 512


def test_read_out_of_range_fails_with_lba_sense(rig):
    _, _, bot = rig
    data, _, residue, status = bot.command(
        cdb_read10(256, 1), dtl=512, data_in=True)
    assert status == 1
    assert data == b""
    assert residue == 512
    sense, _, _, s2 = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert s2 == 0
    assert sense[2] & 0x0F == SenseKey.ILLEGAL_REQUEST
    assert sense[12] == 0x21


def test_unsupported_opcode_fails_with_invalid_opcode_sense(rig):
    _, _, bot = rig
    _, _, _, status = bot.command(bytes([0xFF, 0, 0, 0, 0, 0]))
    assert status == 1
    sense, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert sense[2] & 0x0F == SenseKey.ILLEGAL_REQUEST
    assert sense[12] == 0x20


def test_sense_is_fixed_format_and_clears_on_read(rig):
    _, _, bot = rig
    bot.command(cdb_read10(9999, 1), dtl=512, data_in=True)
    sense, _, residue, status = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert (status, residue) == (0, 0)
    assert len(sense) == 18
    assert sense[0] == 0x70
    assert sense[7] == 10
    assert sense[2] & 0x0F == SenseKey.ILLEGAL_REQUEST
    again, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert again[2] & 0x0F == SenseKey.NO_SENSE
    assert again[12] == 0 and again[13] == 0


def test_unit_attention_reported_once_after_configuration(tmp_path):
    bus = UsbBus()
    model = FlashDriveModel(make_image(tmp_path, "ua.img", 256))
    bus.attach(Port.A, model)
    dev = bus.enumerate(Port.A)
    bot = RawBot(bus, dev.address)
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 1
    sense, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert sense[2] & 0x0F == SenseKey.UNIT_ATTENTION
    assert sense[12] == 0x29
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 0


def test_inquiry_bypasses_unit_attention(tmp_path):
    bus = UsbBus()
    model = FlashDriveModel(make_image(tmp_path, "ua2.img", 256))
    bus.attach(Port.A, model)
    dev = bus.enumerate(Port.A)
    bot = RawBot(bus, dev.address)
    _, _, _, status = bot.command(cdb_inquiry(36), dtl=36, data_in=True)
    assert status == 0
    # the attention is still pending for the next non-inquiry command
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 1


def test_inquiry_without_medium_reports_not_ready(rig):
    _, model, bot = rig
    model.eject()
    _, _, _, status = bot.command(cdb_inquiry(36), dtl=36, data_in=True)
    assert status == 1
    sense, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert sense[2] & 0x0F == SenseKey.NOT_READY
    assert sense[12] == 0x3A


def test_write_to_read_only_medium_fails_data_protect(tmp_path):
    path = str(tmp_path / "ro.img")
    BlockImage.create(path, 256).close()
    bus = UsbBus()
    model = FlashDriveModel(BlockImage(path, read_only=True))
    bus.attach(Port.A, model)
    dev = bus.enumerate(Port.A)
    bot = RawBot(bus, dev.address)
    absorb_unit_attention(bot)

    data, _, residue, status = bot.command(cdb_mode_sense(4), dtl=4, data_in=True)
    assert status == 0
    assert data == bytes([3, 0, 0x80, 0])

    _, _, residue, status = bot.command(
        cdb_write10(0, 1), dtl=512, data_out=bytes(512))
    assert status == 1
    assert residue == 512
    sense, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert sense[2] & 0x0F == SenseKey.DATA_PROTECT
    assert sense[12] == 0x27


def test_mode_sense_writable_medium(rig):
    _, _, bot = rig
    data, _, _, status = bot.command(cdb_mode_sense(4), dtl=4, data_in=True)
    assert status == 0
    assert data == bytes([3, 0, 0x00, 0])


def test_invalid_cbw_halts_both_endpoints_without_csw(rig):
    bus, model, bot = rig
    bus.bulk_out(bot.address, BULK_OUT, b"USBCgarbage")
    assert model.is_halted(BULK_IN)
    assert model.is_halted(BULK_OUT)
    with pytest.raises(EndpointHaltedError):
        bus.bulk_in(bot.address, BULK_IN, 13)


def test_reset_recovery_restores_command_phase(rig):
    bus, model, bot = rig
    bus.bulk_out(bot.address, BULK_OUT, b"\x00" * 31)      # invalid CBW
    assert model.is_halted(BULK_IN) and model.is_halted(BULK_OUT)
    # bulk-only mass storage reset, then clear both halts
    reset = d.SetupPacket(0x21, 0xFF, 0, 0, 0)
    bus.control_transfer(bot.address, reset)
    for ep in (BULK_IN, BULK_OUT):
        bus.control_transfer(bot.address, d.SetupPacket(
            0x02, d.REQ_CLEAR_FEATURE, d.FEATURE_ENDPOINT_HALT, ep, 0))
    data, _, residue, status = bot.command(cdb_inquiry(36), dtl=36, data_in=True)
    assert (status, residue) == (0, 0)
    assert len(data) == 36


def test_get_max_lun_reports_zero(rig):
    bus, _, bot = rig
    setup = d.SetupPacket(0xA1, 0xFE, 0, 0, 1)
    assert bus.control_transfer(bot.address, setup) == b"\x00"


def test_phase_error_injection_reports_status_two(rig):
    _, model, bot = rig
    model.fail_next_commands_with_phase_error = 1
    data, _, residue, status = bot.command(cdb_read10(0, 1), dtl=512, data_in=True)
    assert status == 2
    assert residue == 512
    assert data == b""
    # next command is clean
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 0


def test_phase_error_on_write_drains_data_phase(rig):
    _, model, bot = rig
    model.fail_next_commands_with_phase_error = 1
    _, _, residue, status = bot.command(
        cdb_write10(0, 1), dtl=512, data_out=bytes(512))
    assert status == 2
    assert residue == 512
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 0


def test_bulk_in_during_command_phase_is_protocol_violation(rig):
    bus, model, bot = rig
    got = bus.bulk_in(bot.address, BULK_IN, 13)
    assert got == b""
    assert model.is_halted(BULK_IN) and model.is_halted(BULK_OUT)


def test_trace_line_format(rig):
    _, model, bot = rig
    model.trace.clear()
    bot.command(cdb_read10(5, 2), dtl=1024, data_in=True)
    assert len(model.trace) == 1
    tag, opcode, lba, count, status, residue = model.trace[0].split()
    assert opcode == "28"
    assert (lba, count, status, residue) == ("5", "2", "0", "0")
    assert tag.isdigit()


def test_eject_then_insert_rearms_unit_attention(rig):
    _, model, bot = rig
    medium = model.medium
    model.eject()
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 1
    sense, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert sense[2] & 0x0F == SenseKey.NOT_READY
    model.insert(medium)
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 1
    sense, _, _, _ = bot.command(cdb_request_sense(18), dtl=18, data_in=True)
    assert sense[2] & 0x0F == SenseKey.UNIT_ATTENTION
    _, _, _, status = bot.command(cdb_test_unit_ready())
    assert status == 0
