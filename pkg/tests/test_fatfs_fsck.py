"""Damage-injection tests for the consistency checker.

Each test formats a small FAT16 volume, corrupts the raw image bytes at
computed offsets (directory entries, FAT entries, boot sector), and asserts
fsck reports exactly the expected finding codes. FAT entries are patched in
both copies so fat-copy-mismatch only appears when a test wants it.
"""

import pytest

from usb2usb import fatfs
from usb2usb.blockdev import BlockImage
from usb2usb.fatfs import FAT16, FAT32
from usb2usb.fatfs.fsck import Finding, fsck

from helpers import image_bytes

SECTORS = 4150
# geometry of a 4150-sector FAT16 volume at 1 sector per cluster
FAT0_OFF = 512 * 1
FAT1_OFF = 512 * 17
ROOT_OFF = 512 * 33
DATA_OFF = 512 * 65


def build(tmp_path, populate=None):
    """Format a volume, run `populate(vol)`, and close the image."""
    path = str(tmp_path / "dmg.img")
    dev = BlockImage.create(path, SECTORS)
    fatfs.mkfs(dev, FAT16, volume_label="DAMAGE")
    vol = fatfs.FatVolume(dev)
    if populate:
        populate(vol)
    dev.close()
    return path


def patch(path, offset, data):
    with open(path, "r+b") as fh:
        fh.seek(offset)
        fh.write(data)


def set_fat16(path, cluster, value):
    """Rewrite one FAT16 entry in both copies."""
    raw = value.to_bytes(2, "little")
    patch(path, FAT0_OFF + 2 * cluster, raw)
    patch(path, FAT1_OFF + 2 * cluster, raw)


def entry_offset(path, raw_name):
    """Byte offset of the directory entry whose 8.3 name field is raw_name."""
    raw = image_bytes(path)
    off = raw.find(raw_name)
    assert off != -1, f"no entry named {raw_name!r}"
    assert raw.find(raw_name, off + 1) == -1, "ambiguous name"
    return off


def check(path):
    dev = BlockImage(path, read_only=True)
    try:
        return fsck(dev)
    finally:
        dev.close()


def codes(findings):
    return {f.code for f in findings}


def first_cluster(path, raw_name):
    off = entry_offset(path, raw_name)
    raw = image_bytes(path)
    return int.from_bytes(raw[off + 26:off + 28], "little")


def test_finding_line_format():
    f = Finding("error", "cross-link", "/a/b.txt", "cluster 9 also owned by /c")
    assert f.line == "error cross-link /a/b.txt cluster 9 also owned by /c"


def test_clean_volume_no_findings(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/ok.txt", b"fine"))
    assert check(path) == []


def test_mount_failed_no_signature(tmp_path):
    path = build(tmp_path)
    patch(path, 510, b"\x00\x00")
    findings = check(path)
    assert len(findings) == 1
    assert findings[0].severity == "error"
    assert findings[0].code == "mount-failed"
    assert findings[0].path == "/"
    assert "0x55aa" in findings[0].detail.lower()


def test_mount_failed_ntfs(tmp_path):
    path = build(tmp_path)
    patch(path, 3, b"NTFS    ")
    findings = check(path)
    assert codes(findings) == {"mount-failed"}
    assert "NTFS" in findings[0].detail


def test_broken_chain_into_free_cluster(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 600))
    c1 = first_cluster(path, b"VICTIM  TXT")
    # the 600-byte file spans two clusters; cut the link to the second
    set_fat16(path, c1 + 1, 0)
    findings = check(path)
    assert codes(findings) == {"broken-chain", "lost-clusters"}
    broken = [f for f in findings if f.code == "broken-chain"][0]
    assert broken.path == "/victim.txt"
    assert "0x0" in broken.detail


def test_broken_chain_loop(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 600))
    c1 = first_cluster(path, b"VICTIM  TXT")
    set_fat16(path, c1 + 1, c1)   # second cluster points back at the first
    findings = check(path)
    assert "broken-chain" in codes(findings)
    broken = [f for f in findings if f.code == "broken-chain"][0]
    assert "loops" in broken.detail


def test_broken_chain_out_of_range(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 100))
    c1 = first_cluster(path, b"VICTIM  TXT")
    set_fat16(path, c1, 0x4000)   # beyond the last cluster of a 4085-cluster FAT
    findings = check(path)
    assert "broken-chain" in codes(findings)


def test_cross_link(tmp_path):
    def populate(vol):
        vol.write_file("/first.txt", b"a" * 10)
        vol.write_file("/second.txt", b"b" * 10)

    path = build(tmp_path, populate)
    ca = first_cluster(path, b"FIRST   TXT")
    off = entry_offset(path, b"SECOND  TXT")
    cb = first_cluster(path, b"SECOND  TXT")
    patch(path, off + 26, ca.to_bytes(2, "little"))
    set_fat16(path, cb, 0)        # release the orphaned original cluster
    findings = check(path)
    assert codes(findings) == {"cross-link"}
    f = findings[0]
    assert f.severity == "error"
    assert f.path == "/second.txt"
    assert f"cluster {ca} also owned by /first.txt" == f.detail


def test_cross_link_leaves_orphan_lost(tmp_path):
    def populate(vol):
        vol.write_file("/first.txt", b"a" * 10)
        vol.write_file("/second.txt", b"b" * 10)

    path = build(tmp_path, populate)
    ca = first_cluster(path, b"FIRST   TXT")
    off = entry_offset(path, b"SECOND  TXT")
    patch(path, off + 26, ca.to_bytes(2, "little"))
    findings = check(path)
    assert codes(findings) == {"cross-link", "lost-clusters"}


def test_dir_loop(tmp_path):
    def populate(vol):
        vol.create_dir("/loopa")
        vol.create_dir("/loopa/inner")

    path = build(tmp_path, populate)
    outer = first_cluster(path, b"LOOPA      ")
    off = entry_offset(path, b"INNER      ")
    inner = first_cluster(path, b"INNER      ")
    patch(path, off + 26, outer.to_bytes(2, "little"))
    set_fat16(path, inner, 0)
    findings = check(path)
    assert codes(findings) == {"dir-loop"}
    assert findings[0].path == "/loopa/inner"
    assert findings[0].detail == "directory tree loops"


def test_unreadable_dir(tmp_path):
    path = build(tmp_path, lambda vol: vol.create_dir("/baddir"))
    cluster = first_cluster(path, b"BADDIR     ")
    set_fat16(path, cluster, 0)   # the directory's own chain evaporates
    findings = check(path)
    assert codes(findings) == {"broken-chain", "unreadable-dir"}
    unreadable = [f for f in findings if f.code == "unreadable-dir"][0]
    assert unreadable.path == "/baddir"


def test_duplicate_name(tmp_path):
    def populate(vol):
        vol.write_file("/copy1.txt", b"a" * 10)
        vol.write_file("/copy2.txt", b"b" * 10)

    path = build(tmp_path, populate)
    off = entry_offset(path, b"COPY2   TXT")
    patch(path, off, b"COPY1   TXT")   # rename the second entry onto the first
    findings = check(path)
    assert codes(findings) == {"duplicate-name"}
    assert "appears twice" in findings[0].detail


def test_bad_entry_directory_without_cluster(tmp_path):
    path = build(tmp_path, lambda vol: vol.create_dir("/emptyd"))
    off = entry_offset(path, b"EMPTYD     ")
    cluster = first_cluster(path, b"EMPTYD     ")
    patch(path, off + 26, b"\x00\x00")
    set_fat16(path, cluster, 0)
    findings = check(path)
    assert codes(findings) == {"bad-entry"}
    assert findings[0].path == "/emptyd"
    assert findings[0].detail == "directory with no cluster"


def test_size_mismatch_zero_size_with_chain(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 100))
    off = entry_offset(path, b"VICTIM  TXT")
    cluster = first_cluster(path, b"VICTIM  TXT")
    patch(path, off + 28, (0).to_bytes(4, "little"))
    set_fat16(path, cluster, 0)   # keep the FAT accounting clean
    findings = check(path)
    assert codes(findings) == {"size-mismatch"}
    assert "zero-size" in findings[0].detail


def test_size_mismatch_size_without_cluster(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 100))
    off = entry_offset(path, b"VICTIM  TXT")
    cluster = first_cluster(path, b"VICTIM  TXT")
    patch(path, off + 26, b"\x00\x00")
    set_fat16(path, cluster, 0)
    findings = check(path)
    assert codes(findings) == {"size-mismatch"}
    assert "no first cluster" in findings[0].detail


def test_chain_length_disagrees_with_size(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 600))
    off = entry_offset(path, b"VICTIM  TXT")
    patch(path, off + 28, (100).to_bytes(4, "little"))   # 100 B needs 1 cluster
    findings = check(path)
    assert codes(findings) == {"chain-length"}
    assert "2 clusters for 100 bytes (expected 1)" == findings[0].detail


def test_lost_clusters(tmp_path):
    path = build(tmp_path)
    set_fat16(path, 50, 0xFFFF)
    findings = check(path)
    assert codes(findings) == {"lost-clusters"}
    f = findings[0]
    assert f.path == "/"
    assert "1 allocated clusters unreachable: 50" in f.detail


def test_lost_clusters_truncated_listing(tmp_path):
    path = build(tmp_path)
    for cluster in range(60, 72):
        set_fat16(path, cluster, 0xFFFF)
    findings = check(path)
    assert codes(findings) == {"lost-clusters"}
    assert "12 allocated clusters unreachable" in findings[0].detail
    assert "(+4 more)" in findings[0].detail


def test_fat_copy_mismatch(tmp_path):
    path = build(tmp_path)
    patch(path, FAT1_OFF + 2 * 100, b"\xff\xff")   # second copy only
    findings = check(path)
    assert codes(findings) == {"fat-copy-mismatch"}
    assert findings[0].detail == f"copy 1 differs from copy 0 at byte {2 * 100}"


def test_bad_dot_warning(tmp_path):
    path = build(tmp_path, lambda vol: vol.create_dir("/dotdir"))
    cluster = first_cluster(path, b"DOTDIR     ")
    dot_off = DATA_OFF + (cluster - 2) * 512   # "." is the first entry
    patch(path, dot_off + 26, (0x1234 & 0xFFFF).to_bytes(2, "little"))
    findings = check(path)
    assert codes(findings) == {"bad-dot"}
    f = findings[0]
    assert f.severity == "warn"
    assert f.path == "/dotdir"
    assert f"points at {0x1234}" in f.detail


def test_independent_damages_accumulate(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 600))
    set_fat16(path, 50, 0xFFFF)
    off = entry_offset(path, b"VICTIM  TXT")
    patch(path, off + 28, (100).to_bytes(4, "little"))
    findings = check(path)
    assert codes(findings) == {"lost-clusters", "chain-length"}


def test_fsck_does_not_modify_fat16_image(tmp_path):
    path = build(tmp_path, lambda vol: vol.write_file("/victim.txt", b"x" * 600))
    set_fat16(path, 50, 0xFFFF)
    before = image_bytes(path)
    dev = BlockImage(path)        # writable handle on purpose
    try:
        findings = fsck(dev)
    finally:
        dev.close()
    assert codes(findings) == {"lost-clusters"}
    assert image_bytes(path) == before


def test_fsinfo_bad_signature(tmp_path):
    path = str(tmp_path / "f32.img")
    dev = BlockImage.create(path, 131072)
    fatfs.mkfs(dev, FAT32, volume_label="F32CHK")
    dev.close()
    patch(path, 512 * 1, b"\x00\x00\x00\x00")   # FSInfo lead signature
    findings = check(path)
    assert codes(findings) == {"fsinfo-bad"}
    assert findings[0].severity == "warn"
    assert findings[0].detail == "missing FSInfo signature"


def test_fat32_clean_after_traffic(tmp_path):
    path = str(tmp_path / "f32b.img")
    dev = BlockImage.create(path, 131072)
    fatfs.mkfs(dev, FAT32, volume_label="F32CHK")
    vol = fatfs.FatVolume(dev)
    vol.create_dir("/nest")
    vol.write_file("/nest/data.bin", bytes(range(256)) * 40)
    vol.write_file("/top.txt", b"hello")
    vol.remove("/top.txt")
    dev.close()
    assert check(path) == []
