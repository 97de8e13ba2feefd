"""FAT16/FAT32 filesystem driver over any 512-byte block interface."""

from .bpb import FAT16, FAT32, BiosParameterBlock, parse_boot_sector
from .direntry import DirEntry
from .errors import (
    BadSignatureError,
    CorruptVolumeError,
    DirNotEmptyError,
    DiskFullError,
    ExistsError,
    FatError,
    InconsistentBpbError,
    NameInvalidError,
    NotADirectoryError,
    NotFoundError,
    ReadOnlyVolumeError,
    UnsupportedVariantError,
    VariantSizeMismatchError,
)
from .fsck import Finding, fsck
from .mkfs import mkfs
from .volume import FatVolume, mount

__all__ = [
    "BadSignatureError",
    "BiosParameterBlock",
    "CorruptVolumeError",
    "DirEntry",
    "DirNotEmptyError",
    "DiskFullError",
    "ExistsError",
    "FAT16",
    "FAT32",
    "FatError",
    "FatVolume",
    "Finding",
    "InconsistentBpbError",
    "NameInvalidError",
    "NotADirectoryError",
    "NotFoundError",
    "ReadOnlyVolumeError",
    "UnsupportedVariantError",
    "VariantSizeMismatchError",
    "fsck",
    "mkfs",
    "mount",
    "parse_boot_sector",
]
