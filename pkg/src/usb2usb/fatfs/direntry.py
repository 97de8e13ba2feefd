"""32-byte FAT directory records and their timestamp fields."""

import struct
import time
from dataclasses import dataclass, field

from .names import render_short

ENTRY_SIZE = 32

ATTR_READ_ONLY = 0x01
ATTR_HIDDEN = 0x02
ATTR_SYSTEM = 0x04
ATTR_VOLUME_LABEL = 0x08
ATTR_DIRECTORY = 0x10
ATTR_ARCHIVE = 0x20
ATTR_LFN = 0x0F

ENTRY_END = 0x00      # first byte: no entries at or beyond this record
ENTRY_DELETED = 0xE5

_FMT = "<11sBBBHHHHHHHI"
assert struct.calcsize(_FMT) == ENTRY_SIZE


def encode_timestamp(unix_ts):
    """Unix seconds -> (fat_date, fat_time), local time, 2-second granularity."""
    t = time.localtime(unix_ts)
    year = min(max(t.tm_year, 1980), 2107)
    date = ((year - 1980) << 9) | (t.tm_mon << 5) | t.tm_mday
    tim = (t.tm_hour << 11) | (t.tm_min << 5) | (t.tm_sec // 2)
    return date, tim


def decode_timestamp(fat_date, fat_time):
    """(fat_date, fat_time) -> Unix seconds, or None for the zero date."""
    if fat_date == 0:
        return None
    year = 1980 + (fat_date >> 9)
    month = (fat_date >> 5) & 0x0F
    day = fat_date & 0x1F
    hour = fat_time >> 11
    minute = (fat_time >> 5) & 0x3F
    second = (fat_time & 0x1F) * 2
    try:
        return time.mktime((year, month, day, hour, minute, second, 0, 0, -1))
    except (ValueError, OverflowError):
        return None


@dataclass
class DirEntry:
    """One file or directory as the driver reports it upward."""
    raw_name: bytes                 # the 11-byte short-name field
    attributes: int
    first_cluster: int
    size_bytes: int
    write_date: int = 0
    write_time: int = 0
    create_date: int = 0
    create_time: int = 0
    long_name: str = ""             # empty when the entry has no LFN chain
    path: str = ""                  # absolute path as resolved

    # where the record lives: (slot indexes of LFN chain + short entry)
    slots: list = field(default_factory=list, repr=False, compare=False)

    @property
    def name(self):
        return self.long_name or render_short(self.raw_name)

    @property
    def short_name(self):
        return render_short(self.raw_name)

    @property
    def is_dir(self):
        return bool(self.attributes & ATTR_DIRECTORY)

    @property
    def is_volume_label(self):
        return bool(self.attributes & ATTR_VOLUME_LABEL) and not self.is_lfn

    @property
    def is_lfn(self):
        return (self.attributes & ATTR_LFN) == ATTR_LFN

    @property
    def mtime(self):
        return decode_timestamp(self.write_date, self.write_time)

    def pack(self):
        return struct.pack(
            _FMT, self.raw_name, self.attributes, 0, 0,
            self.create_time, self.create_date, self.create_date,
            (self.first_cluster >> 16) & 0xFFFF,
            self.write_time, self.write_date,
            self.first_cluster & 0xFFFF, self.size_bytes)

    @classmethod
    def parse(cls, rec):
        (raw_name, attrs, _ntres, _tenth, crt_time, crt_date, _acc_date,
         clus_hi, wrt_time, wrt_date, clus_lo, size) = struct.unpack(_FMT, rec)
        return cls(raw_name=raw_name, attributes=attrs,
                   first_cluster=(clus_hi << 16) | clus_lo, size_bytes=size,
                   write_date=wrt_date, write_time=wrt_time,
                   create_date=crt_date, create_time=crt_time)
