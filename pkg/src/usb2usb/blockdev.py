"""Sector-addressed raw disk images: the "flash chip" behind each emulated drive.

An image is a flat file of exactly ``sector_count * 512`` bytes; the byte
offset of LBA ``n`` is ``n * 512``, so external tools can inspect images
byte-for-byte.
"""

import os

SECTOR_SIZE = 512
MIN_SECTORS = 128          # 64 KiB
MAX_SECTORS = 2**32 - 1


class BlockDeviceError(Exception):
    pass


class ImageExistsError(BlockDeviceError):
    pass


class SizeOutOfRangeError(BlockDeviceError):
    pass


class LbaOutOfRangeError(BlockDeviceError):
    pass


class ReadOnlyImageError(BlockDeviceError):
    pass


class BlockImage:
    """A fixed-size array of 512-byte sectors persisted as a raw image file.

    Single writer, multiple readers: callers above this layer serialize
    mutating access. Reads and writes use positioned I/O, so a handle may be
    shared between threads for reads.
    """

    def __init__(self, path, read_only=False):
        self.path = os.fspath(path)
        self.read_only = bool(read_only)
        self._f = open(self.path, "rb" if self.read_only else "r+b")
        size = os.fstat(self._f.fileno()).st_size
        if size % SECTOR_SIZE != 0:
            self._f.close()
            raise BlockDeviceError(
                f"{self.path}: length {size} is not a multiple of {SECTOR_SIZE}")
        count = size // SECTOR_SIZE
        if not MIN_SECTORS <= count <= MAX_SECTORS:
            self._f.close()
            raise SizeOutOfRangeError(
                f"{self.path}: {count} sectors outside [{MIN_SECTORS}, {MAX_SECTORS}]")
        self.sector_count = count

    @classmethod
    def create(cls, path, sector_count):
        """Create a zero-filled image of exactly sector_count sectors."""
        path = os.fspath(path)
        if not isinstance(sector_count, int) or not MIN_SECTORS <= sector_count <= MAX_SECTORS:
            raise SizeOutOfRangeError(
                f"sector_count {sector_count!r} outside [{MIN_SECTORS}, {MAX_SECTORS}]")
        if os.path.exists(path):
            raise ImageExistsError(f"{path}: already exists")
        try:
            with open(path, "xb") as f:
                f.truncate(sector_count * SECTOR_SIZE)
        except FileExistsError:
            raise ImageExistsError(f"{path}: already exists") from None
        except OSError as e:
            raise BlockDeviceError(f"{path}: {e}") from e
        return cls(path)

    # -- sector primitives ------------------------------------------------

    def read_sector(self, lba):
        self._check_range(lba, 1)
        return os.pread(self._f.fileno(), SECTOR_SIZE, lba * SECTOR_SIZE)

    def write_sector(self, lba, data):
        if len(data) != SECTOR_SIZE:
            raise BlockDeviceError(f"sector write must be {SECTOR_SIZE} bytes, got {len(data)}")
        self._check_range(lba, 1)
        if self.read_only:
            raise ReadOnlyImageError(f"{self.path}: image is read-only")
        os.pwrite(self._f.fileno(), data, lba * SECTOR_SIZE)

    # -- multi-sector convenience (same bounds rules) ---------------------

    def read_blocks(self, lba, count):
        self._check_range(lba, count)
        return os.pread(self._f.fileno(), count * SECTOR_SIZE, lba * SECTOR_SIZE)

    def write_blocks(self, lba, count, data):
        if len(data) != count * SECTOR_SIZE:
            raise BlockDeviceError(
                f"write_blocks: expected {count * SECTOR_SIZE} bytes, got {len(data)}")
        self._check_range(lba, count)
        if self.read_only:
            raise ReadOnlyImageError(f"{self.path}: image is read-only")
        os.pwrite(self._f.fileno(), data, lba * SECTOR_SIZE)

    @property
    def block_count(self):
        return self.sector_count

    def flush(self):
        """Make buffered writes durable."""
        if not self.read_only:
            self._f.flush()
            os.fsync(self._f.fileno())

    def close(self):
        if not self._f.closed:
            if not self.read_only:
                self.flush()
            self._f.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def _check_range(self, lba, count):
        if lba < 0 or count < 0 or lba + count > self.sector_count:
            raise LbaOutOfRangeError(
                f"lba {lba} count {count} outside 0..{self.sector_count - 1}")
