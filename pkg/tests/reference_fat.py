"""Independent reference FAT reader used as the interoperability oracle.

Deliberately shares no code with the driver under test: everything is
decoded from whole-image bytes at literal offsets with int.from_bytes,
including its own long-name assembly and checksum. If the driver and this
reader agree on names, sizes, and contents, the on-disk format is right;
a shared bug would have to be made twice, independently.
"""

SECTOR = 512


def _u8(b, off):
    return b[off]


def _u16(b, off):
    return int.from_bytes(b[off:off + 2], "little")


def _u32(b, off):
    return int.from_bytes(b[off:off + 4], "little")


def checksum_83(raw11):
    total = 0
    for byte in raw11:
        total = (((total & 1) << 7) + (total >> 1) + byte) & 0xFF
    return total


class RefFatError(Exception):
    pass


class ReferenceVolume:
    """Read-only view over raw image bytes."""

    def __init__(self, raw):
        if len(raw) < SECTOR:
            raise RefFatError("image smaller than one sector")
        boot = raw[:SECTOR]
        if boot[510] != 0x55 or boot[511] != 0xAA:
            raise RefFatError("missing 0x55AA boot signature")
        self.raw = raw
        self.bytes_per_sector = _u16(boot, 11)
        if self.bytes_per_sector != SECTOR:
            raise RefFatError(f"sector size {self.bytes_per_sector}")
        self.sectors_per_cluster = _u8(boot, 13)
        self.reserved = _u16(boot, 14)
        self.num_fats = _u8(boot, 16)
        self.root_entries = _u16(boot, 17)
        total16 = _u16(boot, 19)
        self.total_sectors = total16 if total16 else _u32(boot, 32)
        fatsz16 = _u16(boot, 22)
        self.sectors_per_fat = fatsz16 if fatsz16 else _u32(boot, 36)
        self.root_dir_sectors = (self.root_entries * 32 + SECTOR - 1) // SECTOR
        self.first_data_sector = (self.reserved
                                  + self.num_fats * self.sectors_per_fat
                                  + self.root_dir_sectors)
        data = self.total_sectors - self.first_data_sector
        self.cluster_count = data // self.sectors_per_cluster
        if self.cluster_count < 4085:
            raise RefFatError(f"FAT12 range ({self.cluster_count} clusters)")
        if self.cluster_count < 65525:
            self.variant = "FAT16"
        else:
            self.variant = "FAT32"
            self.root_cluster = _u32(boot, 44)

    # -- FAT ------------------------------------------------------------

    def fat_entry(self, cluster, copy=0):
        base = (self.reserved + copy * self.sectors_per_fat) * SECTOR
        if self.variant == "FAT16":
            return _u16(self.raw, base + cluster * 2)
        return _u32(self.raw, base + cluster * 4) & 0x0FFFFFFF

    def _is_eoc(self, value):
        if self.variant == "FAT16":
            return value >= 0xFFF8
        return value >= 0x0FFFFFF8

    def chain(self, start):
        seen = set()
        out = []
        cluster = start
        while not self._is_eoc(cluster):
            if cluster < 2 or cluster >= self.cluster_count + 2:
                raise RefFatError(f"chain hits invalid cluster {cluster}")
            if cluster in seen:
                raise RefFatError(f"chain loops at cluster {cluster}")
            seen.add(cluster)
            out.append(cluster)
            cluster = self.fat_entry(cluster)
            if cluster == 0:
                raise RefFatError("chain runs into a free cluster")
        return out

    def cluster_bytes(self, cluster):
        sector = self.first_data_sector + (cluster - 2) * self.sectors_per_cluster
        start = sector * SECTOR
        return self.raw[start:start + self.sectors_per_cluster * SECTOR]

    # -- directories ------------------------------------------------------

    def _root_region(self):
        if self.variant == "FAT16":
            start = (self.reserved + self.num_fats * self.sectors_per_fat) * SECTOR
            return self.raw[start:start + self.root_dir_sectors * SECTOR]
        return b"".join(self.cluster_bytes(c) for c in self.chain(self.root_cluster))

    def _dir_region(self, first_cluster):
        return b"".join(self.cluster_bytes(c) for c in self.chain(first_cluster))

    def _iter_entries(self, region):
        """Yield (name, attrs, first_cluster, size) for live entries."""
        lfn_parts = {}
        lfn_checksum = None
        for off in range(0, len(region), 32):
            rec = region[off:off + 32]
            first = rec[0]
            if first == 0x00:
                return
            if first == 0xE5:
                lfn_parts, lfn_checksum = {}, None
                continue
            attrs = rec[11]
            if attrs & 0x3F == 0x0F:
                seq = rec[0]
                order = seq & 0x1F
                if seq & 0x40:
                    lfn_parts, lfn_checksum = {}, rec[13]
                elif rec[13] != lfn_checksum:
                    lfn_parts, lfn_checksum = {}, None
                    continue
                units = rec[1:11] + rec[14:26] + rec[28:32]
                lfn_parts[order] = units
                continue
            if attrs & 0x08:
                lfn_parts, lfn_checksum = {}, None
                continue
            raw11 = rec[0:11]
            long_name = ""
            if lfn_parts and lfn_checksum == checksum_83(raw11):
                blob = b"".join(lfn_parts[k] for k in sorted(lfn_parts))
                text = blob.decode("utf-16-le", errors="strict")
                for stop in ("\x00", "￿"):
                    cut = text.find(stop)
                    if cut != -1:
                        text = text[:cut]
                long_name = text
            lfn_parts, lfn_checksum = {}, None
            base = raw11[0:8].decode("latin-1").rstrip()
            ext = raw11[8:11].decode("latin-1").rstrip()
            short = f"{base}.{ext}" if ext else base
            if raw11[0] == 0x05:
                short = "\xe5" + short[1:]
            cluster = (_u16(rec, 26) if self.variant == "FAT16"
                       else (_u16(rec, 20) << 16) | _u16(rec, 26))
            yield (long_name or short, attrs, cluster, _u32(rec, 28))

    def file_bytes(self, first_cluster, size):
        if size == 0:
            return b""
        blob = b"".join(self.cluster_bytes(c) for c in self.chain(first_cluster))
        if len(blob) < size:
            raise RefFatError(f"chain holds {len(blob)} bytes, entry says {size}")
        return blob[:size]

    def tree(self):
        """{path: bytes} for files, {path: None} for directories."""
        out = {}
        self._walk("", self._root_region(), out, set())
        return out

    def _walk(self, prefix, region, out, seen):
        for name, attrs, cluster, size in self._iter_entries(region):
            if name in (".", ".."):
                continue
            path = f"{prefix}/{name}"
            if attrs & 0x10:
                if cluster in seen:
                    raise RefFatError(f"directory loop at {path}")
                seen.add(cluster)
                out[path] = None
                self._walk(path, self._dir_region(cluster), out, seen)
            else:
                out[path] = self.file_bytes(cluster, size)

    def label(self):
        for off in range(0, len(self._root_region()), 32):
            rec = self._root_region()[off:off + 32]
            if rec[0] == 0x00:
                break
            if rec[0] != 0xE5 and rec[11] & 0x3F == 0x08:
                return rec[0:11].decode("latin-1").rstrip()
        return ""


def read_tree(raw):
    return ReferenceVolume(raw).tree()
