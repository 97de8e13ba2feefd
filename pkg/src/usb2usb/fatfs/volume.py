"""Mounted FAT16/32 volume: lookup, listing, file and directory operations.

Works over any 512-byte block interface (BlockImage or an MscHandle). The
mutating path is built around crash consistency: file data streams into
clusters that are still marked free on disk, and only the final commit step
links the FAT chain, writes the directory entry, and updates FSInfo. A
device that vanishes mid-stream therefore leaves a volume that fscks clean
with no trace of the unfinished file.
"""

import struct
import threading
import time

from .bpb import FAT16, FAT32, SECTOR, parse_boot_sector
from .direntry import (
    ATTR_ARCHIVE,
    ATTR_DIRECTORY,
    ENTRY_DELETED,
    ENTRY_END,
    ENTRY_SIZE,
    DirEntry,
    encode_timestamp,
)
from .errors import (
    CorruptVolumeError,
    DirNotEmptyError,
    DiskFullError,
    ExistsError,
    FatError,
    NameInvalidError,
    NotADirectoryError,
    NotFoundError,
    ReadOnlyVolumeError,
)
from .fat import FREE, Fat
from .names import LfnAssembler, encode_lfn_entries, make_short_name, validate_long_name

FSINFO_LEAD_SIG = 0x41615252
FSINFO_STRUCT_SIG = 0x61417272
FSINFO_TRAIL_SIG = 0xAA550000

MAX_FILE_SIZE = 0xFFFFFFFF

_DOT = b".          "
_DOTDOT = b"..         "


def mount(dev, clock=time.time):
    return FatVolume(dev, clock)


class FatVolume:
    def __init__(self, dev, clock=time.time):
        self.dev = dev
        self._clock = clock
        self._lock = threading.RLock()
        self.bpb, self.variant = parse_boot_sector(dev.read_blocks(0, 1))
        if self.bpb.total_sectors > dev.block_count:
            raise CorruptVolumeError(
                f"volume claims {self.bpb.total_sectors} sectors, "
                f"medium has {dev.block_count}")
        self.fat = Fat(dev, self.bpb, self.variant)
        self.cluster_count = self.bpb.cluster_count
        self.free_clusters = self.fat.count_free()
        self.next_free_hint = 2
        self._reserved = set()
        self._read_fsinfo()

    # -- basic facts -------------------------------------------------------

    @property
    def cluster_size(self):
        return self.bpb.cluster_size

    @property
    def read_only(self):
        return bool(getattr(self.dev, "read_only", False))

    @property
    def label(self):
        entry = self._label_entry()
        raw = entry.raw_name if entry else self.bpb.volume_label
        text = raw.decode("latin-1").rstrip()
        return text or "NO NAME"

    def volume_info(self):
        return {
            "label": self.label,
            "variant": self.variant,
            "total_bytes": self.cluster_count * self.cluster_size,
            "free_bytes": self.free_clusters * self.cluster_size,
        }

    def flush(self):
        with self._lock:
            self.fat.flush()
            self.dev.flush()

    # -- FSInfo (FAT32 free-space hints) --------------------------------------

    def _read_fsinfo(self):
        if self.variant != FAT32 or not self.bpb.fsinfo_sector:
            return
        sec = self.dev.read_blocks(self.bpb.fsinfo_sector, 1)
        lead, = struct.unpack_from("<I", sec, 0)
        sig, = struct.unpack_from("<I", sec, 484)
        free, = struct.unpack_from("<I", sec, 488)
        hint, = struct.unpack_from("<I", sec, 492)
        if lead != FSINFO_LEAD_SIG or sig != FSINFO_STRUCT_SIG:
            return
        if 2 <= hint <= self.fat.max_cluster:
            self.next_free_hint = hint
        # the hint is advisory: correct it on disk when the scan disagrees
        if free != self.free_clusters and not self.read_only:
            self._write_fsinfo()

    def _write_fsinfo(self):
        if self.variant != FAT32 or not self.bpb.fsinfo_sector:
            return
        sec = bytearray(SECTOR)
        struct.pack_into("<I", sec, 0, FSINFO_LEAD_SIG)
        struct.pack_into("<I", sec, 484, FSINFO_STRUCT_SIG)
        struct.pack_into("<I", sec, 488, self.free_clusters)
        struct.pack_into("<I", sec, 492, self.next_free_hint)
        struct.pack_into("<I", sec, 508, FSINFO_TRAIL_SIG)
        self.dev.write_blocks(self.bpb.fsinfo_sector, 1, bytes(sec))

    # -- path resolution ----------------------------------------------------------

    def _root_entry(self):
        first = self.bpb.root_cluster if self.variant == FAT32 else 0
        return DirEntry(raw_name=b"/".ljust(11), attributes=ATTR_DIRECTORY,
                        first_cluster=first, size_bytes=0, path="/")

    @staticmethod
    def _split_path(path):
        if not path.startswith("/"):
            raise NameInvalidError(f"path {path!r} is not absolute")
        parts = [p for p in path.split("/") if p]
        if any(p in (".", "..") for p in parts):
            raise NameInvalidError(f"path {path!r} contains dot segments")
        return parts

    def _resolve(self, path):
        """DirEntry for `path`, raising NotFoundError / NotADirectoryError."""
        entry = self._root_entry()
        parts = self._split_path(path)
        for i, part in enumerate(parts):
            if not entry.is_dir:
                raise NotADirectoryError("/" + "/".join(parts[:i]))
            child = _Directory(self, entry).find(part)
            if child is None:
                raise NotFoundError("/" + "/".join(parts[:i + 1]))
            entry = child
        return entry

    def _resolve_parent(self, path):
        """(_Directory of the parent, final name component)."""
        parts = self._split_path(path)
        if not parts:
            raise NameInvalidError("path names the root directory")
        parent_path = "/" + "/".join(parts[:-1])
        entry = self._resolve(parent_path)
        if not entry.is_dir:
            raise NotADirectoryError(parent_path)
        return _Directory(self, entry), parts[-1]

    # -- read side ---------------------------------------------------------------------

    def list_dir(self, path):
        with self._lock:
            entry = self._resolve(path)
            if not entry.is_dir:
                raise NotADirectoryError(path)
            listing = []
            for e in _Directory(self, entry).entries():
                if e.is_volume_label or e.raw_name in (_DOT, _DOTDOT):
                    continue
                listing.append(e)
            return listing

    def stat(self, path):
        with self._lock:
            return self._resolve(path)

    def open_read(self, path):
        with self._lock:
            entry = self._resolve(path)
            if entry.is_dir:
                raise FatError(f"{path} is a directory")
            return _FileReader(self, entry)

    def read_file(self, path):
        return self.open_read(path).read()

    # -- write side -----------------------------------------------------------------------

    def open_write(self, path, overwrite=False):
        with self._lock:
            self._require_writable()
            parent, name = self._resolve_parent(path)
            validate_long_name(name)
            existing = parent.find(name)
            if existing is not None:
                if existing.is_dir:
                    raise ExistsError(f"{path} is a directory")
                if not overwrite:
                    raise ExistsError(f"{path} exists")
            return _FileWriter(self, parent.entry, name, path, overwrite)

    def write_file(self, path, data, overwrite=False):
        writer = self.open_write(path, overwrite)
        try:
            writer.write(data)
        except Exception:
            writer.abort()
            raise
        return writer.close()

    def create_dir(self, path):
        with self._lock:
            self._require_writable()
            parent, name = self._resolve_parent(path)
            validate_long_name(name)
            if parent.find(name) is not None:
                raise ExistsError(f"{path} exists")
            cluster = self._allocate_linked()
            try:
                self._init_dir_cluster(cluster, parent.entry.first_cluster)
                date, tim = encode_timestamp(self._clock())
                entry = self._insert_entry(
                    parent, name, ATTR_DIRECTORY, cluster, 0, date, tim)
            except Exception:
                self.fat.set(cluster, FREE)
                self.free_clusters += 1
                self.fat.flush()
                raise
            self._commit_metadata()
            entry.path = path
            return entry

    def remove(self, path):
        with self._lock:
            self._require_writable()
            parent, name = self._resolve_parent(path)
            entry = parent.find(name)
            if entry is None:
                raise NotFoundError(path)
            if entry.is_dir:
                children = [e for e in _Directory(self, entry).entries()
                            if e.raw_name not in (_DOT, _DOTDOT)
                            and not e.is_volume_label]
                if children:
                    raise DirNotEmptyError(path)
            if entry.first_cluster:
                self.free_clusters += self.fat.free_chain(entry.first_cluster)
            parent.tombstone(entry.slots)
            self._commit_metadata()

    # -- allocation ---------------------------------------------------------------

    def _require_writable(self):
        if self.read_only:
            raise ReadOnlyVolumeError("volume is read-only")

    def _advance_hint(self, cluster):
        self.next_free_hint = cluster + 1
        if self.next_free_hint > self.fat.max_cluster:
            self.next_free_hint = 2

    def _reserve_cluster(self):
        """Claim a free cluster in memory only; its FAT entry stays free on
        disk until the owning writer commits."""
        cluster = self.fat.find_free(self.next_free_hint, self._reserved)
        if cluster is None:
            raise DiskFullError("no free clusters")
        self._reserved.add(cluster)
        self._advance_hint(cluster)
        return cluster

    def _allocate_linked(self):
        """Allocate one cluster and mark it end-of-chain on disk immediately
        (directory storage, which must always be FAT-consistent)."""
        cluster = self.fat.find_free(self.next_free_hint, self._reserved)
        if cluster is None:
            raise DiskFullError("no free clusters")
        self._advance_hint(cluster)
        self.fat.set(cluster, self.fat.eoc_value)
        self.free_clusters -= 1
        return cluster

    def _zero_cluster(self, cluster):
        self.dev.write_blocks(self.bpb.cluster_to_sector(cluster),
                              self.bpb.sectors_per_cluster,
                              bytes(self.cluster_size))

    def _init_dir_cluster(self, cluster, parent_first_cluster):
        self._zero_cluster(cluster)
        date, tim = encode_timestamp(self._clock())
        dot = DirEntry(raw_name=_DOT, attributes=ATTR_DIRECTORY,
                       first_cluster=cluster, size_bytes=0,
                       write_date=date, write_time=tim,
                       create_date=date, create_time=tim)
        # ".." stores 0 when the parent is the root directory
        parent_cluster = parent_first_cluster
        if self.variant == FAT32 and parent_cluster == self.bpb.root_cluster:
            parent_cluster = 0
        dotdot = DirEntry(raw_name=_DOTDOT, attributes=ATTR_DIRECTORY,
                          first_cluster=parent_cluster, size_bytes=0,
                          write_date=date, write_time=tim,
                          create_date=date, create_time=tim)
        sector = self.bpb.cluster_to_sector(cluster)
        first = bytearray(SECTOR)
        first[0:ENTRY_SIZE] = dot.pack()
        first[ENTRY_SIZE:2 * ENTRY_SIZE] = dotdot.pack()
        self.dev.write_blocks(sector, 1, bytes(first))

    def _prepare_entry(self, directory, name, attributes, first_cluster, size,
                       date, tim):
        """Build the LFN chain plus short entry for `name` and claim the
        directory slots for them (extending the directory if needed), without
        writing anything yet. Returns (entry, records, slots)."""
        taken = {e.raw_name for e in directory.entries()}
        raw11, needs_lfn = make_short_name(name, taken)
        entry = DirEntry(raw_name=raw11, attributes=attributes,
                         first_cluster=first_cluster, size_bytes=size,
                         write_date=date, write_time=tim,
                         create_date=date, create_time=tim,
                         long_name=name if needs_lfn else "")
        records = (encode_lfn_entries(name, raw11) if needs_lfn else [])
        records.append(entry.pack())
        slots = directory.allocate_slots(len(records))
        return entry, records, slots

    def _insert_entry(self, directory, name, attributes, first_cluster, size,
                      date, tim):
        entry, records, slots = self._prepare_entry(
            directory, name, attributes, first_cluster, size, date, tim)
        directory.write_slots(slots, records)
        entry.slots = slots
        return entry

    def _commit_metadata(self):
        self.fat.flush()
        self._write_fsinfo()
        self.dev.flush()

    def _label_entry(self):
        try:
            for e in _Directory(self, self._root_entry()).entries():
                if e.is_volume_label:
                    return e
        except FatError:
            pass
        return None


class _Directory:
    """Slot-addressed view of one directory: the FAT16 fixed root region or
    a cluster chain. Loads every record once; mutations write through."""

    def __init__(self, vol, entry):
        self.vol = vol
        self.entry = entry
        self.path = entry.path or "/"
        self._fixed_root = (vol.variant == FAT16 and entry.first_cluster == 0)
        self._clusters = []
        self._records = []
        self._load()

    def _load(self):
        bpb = self.vol.bpb
        if self._fixed_root:
            raw = self.vol.dev.read_blocks(bpb.root_dir_first_sector,
                                           bpb.root_dir_sectors)
        else:
            self._clusters = self.vol.fat.chain(self.entry.first_cluster)
            parts = [self.vol.dev.read_blocks(bpb.cluster_to_sector(c),
                                              bpb.sectors_per_cluster)
                     for c in self._clusters]
            raw = b"".join(parts)
        self._records = [bytearray(raw[i:i + ENTRY_SIZE])
                         for i in range(0, len(raw), ENTRY_SIZE)]

    @property
    def capacity(self):
        return len(self._records)

    def entries(self):
        """All live entries in on-disk order (dot and label entries
        included; callers filter)."""
        out = []
        assembler = LfnAssembler()
        pending = []
        for i, rec in enumerate(self._records):
            first = rec[0]
            if first == ENTRY_END:
                break
            if first == ENTRY_DELETED:
                assembler.reset()
                pending.clear()
                continue
            entry = DirEntry.parse(bytes(rec))
            if entry.is_lfn:
                assembler.feed(rec)
                pending.append(i)
                continue
            entry.long_name = assembler.resolve(entry.raw_name) or ""
            entry.slots = (pending + [i]) if entry.long_name else [i]
            pending = []
            base = self.path.rstrip("/")
            entry.path = f"{base}/{entry.name}"
            out.append(entry)
        return out

    def find(self, name):
        wanted = name.casefold()
        for e in self.entries():
            if e.is_volume_label or e.raw_name in (_DOT, _DOTDOT):
                continue
            if e.name.casefold() == wanted or e.short_name.casefold() == wanted:
                return e
        return None

    def allocate_slots(self, n):
        """Indexes of `n` contiguous free slots, extending a chain-backed
        directory as needed."""
        while True:
            run = self._find_run(n)
            if run is not None:
                return run
            if self._fixed_root:
                raise DiskFullError("root directory is full")
            self._extend()

    def _find_run(self, n):
        start = None
        length = 0
        tail = False  # past the end-of-directory marker, everything is free
        for i, rec in enumerate(self._records):
            if rec[0] == ENTRY_END:
                tail = True
            if tail or rec[0] in (ENTRY_END, ENTRY_DELETED):
                if start is None:
                    start = i
                length += 1
                if length == n:
                    return list(range(start, start + n))
            else:
                start = None
                length = 0
        return None

    def _extend(self):
        cluster = self.vol._allocate_linked()
        self.vol._zero_cluster(cluster)
        if self._clusters:
            self.vol.fat.set(self._clusters[-1], cluster)
        self._clusters.append(cluster)
        per = self.vol.cluster_size // ENTRY_SIZE
        self._records.extend(bytearray(ENTRY_SIZE) for _ in range(per))

    def write_slots(self, slots, records):
        # slots past the old end-of-directory marker are guaranteed zero
        # (mkfs and _extend both zero their storage), so consuming the
        # marker leaves a valid terminator behind the run
        for i, rec in zip(slots, records):
            self._records[i] = bytearray(rec)
        touched = sorted({i // (SECTOR // ENTRY_SIZE) for i in slots})
        for sector_index in touched:
            self._write_sector(sector_index)

    def tombstone(self, slots):
        for i in slots:
            self._records[i][0] = ENTRY_DELETED
        touched = sorted({i // (SECTOR // ENTRY_SIZE) for i in slots})
        for sector_index in touched:
            self._write_sector(sector_index)

    def _write_sector(self, sector_index):
        per = SECTOR // ENTRY_SIZE
        recs = self._records[sector_index * per:(sector_index + 1) * per]
        data = b"".join(bytes(r) for r in recs).ljust(SECTOR, b"\x00")
        if self._fixed_root:
            lba = self.vol.bpb.root_dir_first_sector + sector_index
        else:
            spc = self.vol.bpb.sectors_per_cluster
            cluster = self._clusters[sector_index // spc]
            lba = self.vol.bpb.cluster_to_sector(cluster) + sector_index % spc
        self.vol.dev.write_blocks(lba, 1, data)


class _FileReader:
    """Sequential reader following a file's cluster chain."""

    def __init__(self, vol, entry):
        self.vol = vol
        self.entry = entry
        self.size = entry.size_bytes
        self._pos = 0
        if self.size and not entry.first_cluster:
            raise CorruptVolumeError(f"{entry.path}: size {self.size} with no data")
        if self.size:
            needed = -(-self.size // vol.cluster_size)
            self._chain = vol.fat.chain(entry.first_cluster, limit=needed)
            if len(self._chain) < needed:
                raise CorruptVolumeError(
                    f"{entry.path}: chain shorter than file size")
        else:
            self._chain = []

    def read(self, n=-1):
        if n < 0:
            n = self.size - self._pos
        n = min(n, self.size - self._pos)
        out = bytearray()
        cs = self.vol.cluster_size
        while n > 0:
            idx, off = divmod(self._pos, cs)
            cluster = self._chain[idx]
            take = min(n, cs - off)
            first_sector = off // SECTOR
            last_sector = (off + take - 1) // SECTOR
            lba = self.vol.bpb.cluster_to_sector(cluster) + first_sector
            with self.vol._lock:
                data = self.vol.dev.read_blocks(lba, last_sector - first_sector + 1)
            inner = off - first_sector * SECTOR
            out += data[inner:inner + take]
            self._pos += take
            n -= take
        return bytes(out)


class _FileWriter:
    """Streaming writer with deferred commit.

    Data lands in clusters that remain free in the on-disk FAT until
    close(); abort() (or a device that disappears mid-stream) leaves no
    on-disk trace of the file.
    """

    def __init__(self, vol, parent_entry, name, path, overwrite):
        self.vol = vol
        self._parent_entry = parent_entry
        self._name = name
        self._path = path
        self._overwrite = overwrite
        self._clusters = []
        self._buf = bytearray()
        self._size = 0
        self._state = "open"

    def write(self, data):
        if self._state != "open":
            raise FatError(f"writer is {self._state}")
        if self._size + len(data) > MAX_FILE_SIZE:
            self.abort()
            raise FatError("file larger than 4 GiB")
        self._size += len(data)
        self._buf.extend(data)
        cs = self.vol.cluster_size
        with self.vol._lock:
            try:
                while len(self._buf) >= cs:
                    self._spill(self._buf[:cs])
                    del self._buf[:cs]
            except Exception:
                self._release()
                self._state = "aborted"
                raise

    def _spill(self, chunk):
        cluster = self.vol._reserve_cluster()
        sectors = -(-len(chunk) // SECTOR)
        padded = bytes(chunk).ljust(sectors * SECTOR, b"\x00")
        self.vol.dev.write_blocks(self.vol.bpb.cluster_to_sector(cluster),
                                  sectors, padded)
        self._clusters.append(cluster)

    def close(self):
        """Commit: link the chain in the FAT, write the directory entry,
        update FSInfo. Returns the new DirEntry."""
        if self._state != "open":
            raise FatError(f"writer is {self._state}")
        with self.vol._lock:
            try:
                if self._buf:
                    self._spill(self._buf)
                    self._buf.clear()
                parent = _Directory(self.vol, self._parent_entry)
                existing = parent.find(self._name)
                if existing is not None:
                    if existing.is_dir or not self._overwrite:
                        raise ExistsError(f"{self._path} exists")
                    if existing.first_cluster:
                        self.vol.free_clusters += self.vol.fat.free_chain(
                            existing.first_cluster)
                    parent.tombstone(existing.slots)
                # claim directory slots (which may itself need a cluster)
                # before linking the file chain, so a disk-full here rolls
                # back to a volume with no trace of the file
                date, tim = encode_timestamp(self.vol._clock())
                first = self._clusters[0] if self._clusters else 0
                entry, records, slots = self.vol._prepare_entry(
                    parent, self._name, ATTR_ARCHIVE, first, self._size,
                    date, tim)
                self.vol.fat.link_chain(self._clusters)
                self.vol.free_clusters -= len(self._clusters)
                self.vol._reserved.difference_update(self._clusters)
                parent.write_slots(slots, records)
                entry.slots = slots
                self.vol._commit_metadata()
                self._state = "closed"
                entry.path = self._path
                return entry
            except Exception:
                self._release()
                self._state = "aborted"
                raise

    def abort(self):
        if self._state == "open":
            with self.vol._lock:
                self._release()
            self._state = "aborted"

    def _release(self):
        self.vol._reserved.difference_update(self._clusters)
        self._clusters.clear()
        self._buf.clear()

    @property
    def bytes_written(self):
        return self._size
