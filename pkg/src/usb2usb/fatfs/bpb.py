"""BIOS Parameter Block: boot-sector geometry of a FAT volume.

Field offsets follow the common FAT layout; all multi-byte values are
little-endian. The same structure serves FAT16 and FAT32: FAT32 zeroes
root_entry_count and sectors_per_fat_16 and adds the 36..89 extension block.
"""

import struct
from dataclasses import dataclass

from .errors import BadSignatureError, InconsistentBpbError, UnsupportedVariantError

SECTOR = 512

FAT16 = "FAT16"
FAT32 = "FAT32"

# variant thresholds by cluster count
FAT12_MAX_CLUSTERS = 4085     # below this: FAT12 (rejected)
FAT16_MAX_CLUSTERS = 65525    # below this: FAT16, else FAT32
FAT32_MAX_CLUSTERS = 0x0FFFFFF5


@dataclass
class BiosParameterBlock:
    oem_name: bytes = b"USB2USB "
    bytes_per_sector: int = 512
    sectors_per_cluster: int = 1
    reserved_sectors: int = 1
    num_fats: int = 2
    root_entry_count: int = 0
    total_sectors: int = 0
    media: int = 0xF8
    sectors_per_fat: int = 0
    root_cluster: int = 0          # FAT32 only
    fsinfo_sector: int = 0         # FAT32 only
    backup_boot_sector: int = 0    # FAT32 only
    volume_id: int = 0
    volume_label: bytes = b"NO NAME    "
    fs_type: bytes = b"FAT16   "

    @property
    def root_dir_sectors(self):
        return (self.root_entry_count * 32 + SECTOR - 1) // SECTOR

    @property
    def first_data_sector(self):
        return (self.reserved_sectors + self.num_fats * self.sectors_per_fat
                + self.root_dir_sectors)

    @property
    def root_dir_first_sector(self):
        return self.reserved_sectors + self.num_fats * self.sectors_per_fat

    @property
    def cluster_count(self):
        return (self.total_sectors - self.first_data_sector) // self.sectors_per_cluster

    @property
    def cluster_size(self):
        return self.sectors_per_cluster * SECTOR

    def cluster_to_sector(self, cluster):
        return self.first_data_sector + (cluster - 2) * self.sectors_per_cluster

    def pack(self, variant):
        sec = bytearray(SECTOR)
        sec[0:3] = b"\xeb\x58\x90" if variant == FAT32 else b"\xeb\x3c\x90"
        sec[3:11] = self.oem_name.ljust(8)[:8]
        struct.pack_into("<H", sec, 11, self.bytes_per_sector)
        sec[13] = self.sectors_per_cluster
        struct.pack_into("<H", sec, 14, self.reserved_sectors)
        sec[16] = self.num_fats
        struct.pack_into("<H", sec, 17, self.root_entry_count)
        if self.total_sectors < 0x10000 and variant == FAT16:
            struct.pack_into("<H", sec, 19, self.total_sectors)
        else:
            struct.pack_into("<I", sec, 32, self.total_sectors)
        sec[21] = self.media
        struct.pack_into("<H", sec, 24, 63)     # sectors per track (nominal)
        struct.pack_into("<H", sec, 26, 255)    # heads (nominal)
        if variant == FAT16:
            struct.pack_into("<H", sec, 22, self.sectors_per_fat)
            sec[36] = 0x80                      # drive number
            sec[38] = 0x29                      # extended boot signature
            struct.pack_into("<I", sec, 39, self.volume_id)
            sec[43:54] = self.volume_label.ljust(11)[:11]
            sec[54:62] = b"FAT16   "
        else:
            struct.pack_into("<I", sec, 36, self.sectors_per_fat)
            struct.pack_into("<I", sec, 44, self.root_cluster)
            struct.pack_into("<H", sec, 48, self.fsinfo_sector)
            struct.pack_into("<H", sec, 50, self.backup_boot_sector)
            sec[64] = 0x80
            sec[66] = 0x29
            struct.pack_into("<I", sec, 67, self.volume_id)
            sec[71:82] = self.volume_label.ljust(11)[:11]
            sec[82:90] = b"FAT32   "
        sec[510] = 0x55
        sec[511] = 0xAA
        return bytes(sec)


def parse_boot_sector(sec):
    """Parse and sanity-check sector 0, returning (bpb, variant).

    Raises BadSignatureError, UnsupportedVariantError (NTFS/exFAT/FAT12
    range, each with a distinct message), or InconsistentBpbError.
    """
    if len(sec) != SECTOR:
        raise InconsistentBpbError(f"boot sector is {len(sec)} bytes")
    if sec[510] != 0x55 or sec[511] != 0xAA:
        raise BadSignatureError("no 0x55AA boot signature")

    oem = bytes(sec[3:11])
    if oem == b"NTFS    ":
        raise UnsupportedVariantError("NTFS", "NTFS volume not supported")
    if oem == b"EXFAT   ":
        raise UnsupportedVariantError("EXFAT", "exFAT volume not supported")

    bps = struct.unpack_from("<H", sec, 11)[0]
    spc = sec[13]
    reserved = struct.unpack_from("<H", sec, 14)[0]
    num_fats = sec[16]
    root_entries = struct.unpack_from("<H", sec, 17)[0]
    total16 = struct.unpack_from("<H", sec, 19)[0]
    media = sec[21]
    fatsz16 = struct.unpack_from("<H", sec, 22)[0]
    total32 = struct.unpack_from("<I", sec, 32)[0]

    if bps != SECTOR:
        raise InconsistentBpbError(f"bytes per sector {bps} != 512")
    if spc == 0 or spc > 128 or spc & (spc - 1):
        raise InconsistentBpbError(f"sectors per cluster {spc} not a power of two in 1..128")
    if reserved == 0:
        raise InconsistentBpbError("zero reserved sectors")
    if num_fats not in (1, 2):
        raise InconsistentBpbError(f"{num_fats} FAT copies")

    total = total16 or total32
    if total == 0:
        raise InconsistentBpbError("zero total sectors")

    bpb = BiosParameterBlock(
        oem_name=oem, bytes_per_sector=bps, sectors_per_cluster=spc,
        reserved_sectors=reserved, num_fats=num_fats,
        root_entry_count=root_entries, total_sectors=total, media=media,
        sectors_per_fat=fatsz16)

    if fatsz16 == 0:
        # FAT32 layout: the 36.. extension block carries the real values
        bpb.sectors_per_fat = struct.unpack_from("<I", sec, 36)[0]
        bpb.root_cluster = struct.unpack_from("<I", sec, 44)[0]
        bpb.fsinfo_sector = struct.unpack_from("<H", sec, 48)[0]
        bpb.backup_boot_sector = struct.unpack_from("<H", sec, 50)[0]
        bpb.volume_id = struct.unpack_from("<I", sec, 67)[0]
        bpb.volume_label = bytes(sec[71:82])
    else:
        bpb.volume_id = struct.unpack_from("<I", sec, 39)[0]
        bpb.volume_label = bytes(sec[43:54])

    if bpb.sectors_per_fat == 0:
        raise InconsistentBpbError("zero sectors per FAT")
    if bpb.first_data_sector >= bpb.total_sectors:
        raise InconsistentBpbError("data area starts beyond the volume")

    clusters = bpb.cluster_count
    if clusters < FAT12_MAX_CLUSTERS:
        raise UnsupportedVariantError(
            "FAT12", f"FAT12 volume ({clusters} clusters) not supported")
    variant = FAT16 if clusters < FAT16_MAX_CLUSTERS else FAT32

    if variant == FAT16:
        if fatsz16 == 0:
            raise InconsistentBpbError("FAT16 cluster count with FAT32 field layout")
        if root_entries == 0:
            raise InconsistentBpbError("FAT16 with empty fixed root directory")
        bpb.fs_type = b"FAT16   "
    else:
        if fatsz16 != 0:
            raise InconsistentBpbError("FAT32 cluster count with 16-bit FAT size")
        if root_entries != 0:
            raise InconsistentBpbError("FAT32 with nonzero root entry count")
        if not 2 <= bpb.root_cluster < clusters + 2:
            raise InconsistentBpbError(f"root cluster {bpb.root_cluster} out of range")
        bpb.fs_type = b"FAT32   "

    entry_bytes = 2 if variant == FAT16 else 4
    if bpb.sectors_per_fat * SECTOR < (clusters + 2) * entry_bytes:
        raise InconsistentBpbError("FAT too small for the cluster count")

    return bpb, variant
