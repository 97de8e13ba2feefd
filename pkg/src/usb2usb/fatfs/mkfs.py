"""Volume formatter (superfloppy layout: BPB at LBA 0, no partition table)."""

import struct
import time

from .bpb import (
    FAT12_MAX_CLUSTERS,
    FAT16,
    FAT16_MAX_CLUSTERS,
    FAT32,
    FAT32_MAX_CLUSTERS,
    SECTOR,
    BiosParameterBlock,
)
from .direntry import ATTR_VOLUME_LABEL, DirEntry, encode_timestamp
from .errors import NameInvalidError, VariantSizeMismatchError
from .fat import FAT32_MASK
from .volume import FSINFO_LEAD_SIG, FSINFO_STRUCT_SIG, FSINFO_TRAIL_SIG, FatVolume

FAT16_RESERVED = 1
FAT32_RESERVED = 32
FAT16_ROOT_ENTRIES = 512
NUM_FATS = 2


def _cluster_range(variant):
    if variant == FAT16:
        return FAT12_MAX_CLUSTERS, FAT16_MAX_CLUSTERS - 1
    return FAT16_MAX_CLUSTERS, FAT32_MAX_CLUSTERS - 1


def _solve_fat_size(total, reserved, root_dir_sectors, spc, entry_bytes):
    """Smallest sectors-per-FAT whose table covers every data cluster.

    There may be no exact fixed point (growing the FAT by a sector can
    shrink the cluster count), so binary-search the smallest size that
    is at least as large as its own requirement."""
    def probe(fatsz):
        data = total - reserved - NUM_FATS * fatsz - root_dir_sectors
        if data <= 0:
            return False, 0
        clusters = data // spc
        need = -(-(clusters + 2) * entry_bytes // SECTOR)
        return need <= fatsz, clusters

    data = total - reserved - NUM_FATS - root_dir_sectors
    if data <= 0:
        return None, 0
    hi = -(-(data // spc + 2) * entry_bytes // SECTOR)
    if not probe(hi)[0]:
        return None, 0
    lo = 1
    while lo < hi:
        mid = (lo + hi) // 2
        if probe(mid)[0]:
            hi = mid
        else:
            lo = mid + 1
    return lo, probe(lo)[1]


def _geometry(total, variant, spc):
    reserved = FAT16_RESERVED if variant == FAT16 else FAT32_RESERVED
    root_entries = FAT16_ROOT_ENTRIES if variant == FAT16 else 0
    root_dir_sectors = (root_entries * 32 + SECTOR - 1) // SECTOR
    entry_bytes = 2 if variant == FAT16 else 4
    lo, hi = _cluster_range(variant)

    candidates = [spc] if spc else [1, 2, 4, 8, 16, 32, 64, 128]
    for candidate in candidates:
        fatsz, clusters = _solve_fat_size(
            total, reserved, root_dir_sectors, candidate, entry_bytes)
        if fatsz and lo <= clusters <= hi:
            return candidate, fatsz, reserved, root_entries
    raise VariantSizeMismatchError(
        f"{total} sectors cannot hold a {variant} volume"
        + (f" at {spc} sectors/cluster" if spc else ""))


def mkfs(dev, variant, sectors_per_cluster=None, volume_label="NO NAME",
         clock=time.time):
    """Format `dev` as FAT16 or FAT32 and return the mounted volume."""
    if variant not in (FAT16, FAT32):
        raise VariantSizeMismatchError(f"unknown variant {variant!r}")
    label = volume_label.upper()
    if len(label) > 11 or any(c in label for c in "*?.,;:/\\|+=<>[]\""):
        raise NameInvalidError(f"volume label {label!r} invalid")

    total = dev.block_count
    spc, fatsz, reserved, root_entries = _geometry(
        total, variant, sectors_per_cluster)

    bpb = BiosParameterBlock(
        bytes_per_sector=SECTOR, sectors_per_cluster=spc,
        reserved_sectors=reserved, num_fats=NUM_FATS,
        root_entry_count=root_entries, total_sectors=total,
        sectors_per_fat=fatsz, volume_id=int(clock()) & 0xFFFFFFFF,
        volume_label=label.encode("latin-1").ljust(11))
    if variant == FAT32:
        bpb.root_cluster = 2
        bpb.fsinfo_sector = 1
        bpb.backup_boot_sector = 6

    boot = bpb.pack(variant)
    dev.write_blocks(0, 1, boot)

    # zero the reserved area after the boot sector, both FATs, and the
    # FAT16 fixed root region
    for lba in range(1, reserved):
        dev.write_blocks(lba, 1, bytes(SECTOR))
    zero_span(dev, reserved, NUM_FATS * fatsz + bpb.root_dir_sectors)

    fat0 = bytearray(SECTOR)
    if variant == FAT16:
        struct.pack_into("<HH", fat0, 0, 0xFF00 | bpb.media, 0xFFFF)
    else:
        struct.pack_into("<III", fat0, 0,
                         0x0FFFFF00 | bpb.media, FAT32_MASK,
                         FAT32_MASK)  # cluster 2: the empty root directory
    for copy in range(NUM_FATS):
        dev.write_blocks(reserved + copy * fatsz, 1, bytes(fat0))

    if variant == FAT32:
        zero_span(dev, bpb.cluster_to_sector(2), spc)   # root cluster
        fsinfo = bytearray(SECTOR)
        struct.pack_into("<I", fsinfo, 0, FSINFO_LEAD_SIG)
        struct.pack_into("<I", fsinfo, 484, FSINFO_STRUCT_SIG)
        struct.pack_into("<I", fsinfo, 488, bpb.cluster_count - 1)
        struct.pack_into("<I", fsinfo, 492, 3)
        struct.pack_into("<I", fsinfo, 508, FSINFO_TRAIL_SIG)
        dev.write_blocks(1, 1, bytes(fsinfo))
        # backup copies of the boot region
        dev.write_blocks(6, 1, boot)
        dev.write_blocks(7, 1, bytes(fsinfo))

    if label.strip():
        date, tim = encode_timestamp(clock())
        rec = DirEntry(raw_name=label.encode("latin-1").ljust(11),
                       attributes=ATTR_VOLUME_LABEL, first_cluster=0,
                       size_bytes=0, write_date=date, write_time=tim).pack()
        root_lba = (bpb.root_dir_first_sector if variant == FAT16
                    else bpb.cluster_to_sector(2))
        sec = bytearray(SECTOR)
        sec[0:32] = rec
        dev.write_blocks(root_lba, 1, bytes(sec))

    dev.flush()
    return FatVolume(dev, clock)


def zero_span(dev, lba, count):
    """Zero `count` sectors starting at `lba` in bounded chunks."""
    chunk = 128
    zeros = bytes(chunk * SECTOR)
    while count > 0:
        n = min(count, chunk)
        dev.write_blocks(lba, n, zeros[:n * SECTOR])
        lba += n
        count -= n
