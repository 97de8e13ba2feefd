"""The file allocation table itself.

The whole first FAT copy is mirrored in memory at mount; reads are served
from the mirror and writes go through to every on-disk copy at sector
granularity, keeping the copies byte-identical. FAT32 entries are 28-bit:
reads mask to 28 bits and writes preserve the top 4 bits on disk.
"""

import struct

from .bpb import FAT16, SECTOR
from .errors import CorruptVolumeError

FAT16_EOC = 0xFFF8          # entries >= this end a chain
FAT16_BAD = 0xFFF7
FAT32_EOC = 0x0FFFFFF8      # compared after masking to 28 bits
FAT32_BAD = 0x0FFFFFF7
FAT32_MASK = 0x0FFFFFFF

FREE = 0


class Fat:
    def __init__(self, dev, bpb, variant):
        self._dev = dev
        self._bpb = bpb
        self.variant = variant
        self.entry_bytes = 2 if variant == FAT16 else 4
        self.min_cluster = 2
        self.max_cluster = bpb.cluster_count + 1
        self._table = bytearray(
            dev.read_blocks(bpb.reserved_sectors, bpb.sectors_per_fat))
        self._dirty = set()

    @property
    def eoc_value(self):
        return 0xFFFF if self.variant == FAT16 else FAT32_MASK

    def is_eoc(self, value):
        if self.variant == FAT16:
            return value >= FAT16_EOC
        return value >= FAT32_EOC

    def is_bad(self, value):
        return value == (FAT16_BAD if self.variant == FAT16 else FAT32_BAD)

    def _check(self, cluster):
        if not self.min_cluster <= cluster <= self.max_cluster:
            raise CorruptVolumeError(
                f"cluster {cluster} outside 2..{self.max_cluster}")

    def get(self, cluster):
        self._check(cluster)
        off = cluster * self.entry_bytes
        if self.variant == FAT16:
            return struct.unpack_from("<H", self._table, off)[0]
        return struct.unpack_from("<I", self._table, off)[0] & FAT32_MASK

    def set(self, cluster, value):
        self._check(cluster)
        off = cluster * self.entry_bytes
        if self.variant == FAT16:
            struct.pack_into("<H", self._table, off, value & 0xFFFF)
        else:
            old = struct.unpack_from("<I", self._table, off)[0]
            struct.pack_into("<I", self._table, off,
                             (old & ~FAT32_MASK) | (value & FAT32_MASK))
        self._dirty.add(off // SECTOR)

    def flush(self):
        """Write dirty sectors through to every FAT copy."""
        for rel in sorted(self._dirty):
            data = bytes(self._table[rel * SECTOR:(rel + 1) * SECTOR])
            for copy in range(self._bpb.num_fats):
                lba = self._bpb.reserved_sectors + copy * self._bpb.sectors_per_fat + rel
                self._dev.write_blocks(lba, 1, data)
        self._dirty.clear()

    def chain(self, start, limit=None):
        """Follow a chain from `start` to end-of-chain, returning the cluster
        list. Loops, free entries, and bad clusters raise CorruptVolumeError."""
        clusters = []
        seen = set()
        cluster = start
        cap = limit if limit is not None else self.max_cluster + 1
        while True:
            self._check(cluster)
            if cluster in seen:
                raise CorruptVolumeError(f"cluster chain loops at {cluster}")
            seen.add(cluster)
            clusters.append(cluster)
            if len(clusters) > cap:
                raise CorruptVolumeError(f"chain from {start} exceeds {cap} clusters")
            value = self.get(cluster)
            if self.is_eoc(value):
                return clusters
            if value == FREE or self.is_bad(value):
                raise CorruptVolumeError(
                    f"chain from {start} hits invalid entry 0x{value:x} at {cluster}")
            cluster = value

    def count_free(self):
        return sum(1 for c in range(self.min_cluster, self.max_cluster + 1)
                   if self.get(c) == FREE)

    def find_free(self, hint, reserved):
        """Next free cluster at or after `hint` (wrapping), skipping the
        in-memory `reserved` set. Returns None when the volume is full."""
        total = self.max_cluster - self.min_cluster + 1
        cluster = min(max(hint, self.min_cluster), self.max_cluster)
        for _ in range(total):
            if self.get(cluster) == FREE and cluster not in reserved:
                return cluster
            cluster += 1
            if cluster > self.max_cluster:
                cluster = self.min_cluster
        return None

    def free_chain(self, start):
        """Zero every entry of the chain at `start`, returning how many
        clusters were released."""
        clusters = self.chain(start)
        for cluster in clusters:
            self.set(cluster, FREE)
        return len(clusters)

    def link_chain(self, clusters):
        """Point each cluster at its successor, terminating with EOC."""
        for here, nxt in zip(clusters, clusters[1:]):
            self.set(here, nxt)
        if clusters:
            self.set(clusters[-1], self.eoc_value)
